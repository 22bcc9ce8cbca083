//! Naive reference predicates over raw `[x_min, y_min, x_max, y_max]` arrays.
//!
//! Written straight from the constraint equations, sharing no code with the
//! crate. Used to cross-check the library bit for bit.
#![allow(dead_code)]

pub type RawBox = [f64; 4];

const X0: usize = 0;
const Y0: usize = 1;
const X1: usize = 2;
const Y1: usize = 3;

fn w(b: &RawBox) -> f64 {
    b[X1] - b[X0]
}

fn h(b: &RawBox) -> f64 {
    b[Y1] - b[Y0]
}

fn lesser(a: f64, b: f64) -> f64 {
    if a < b {
        a
    } else {
        b
    }
}

/// `[x_max_dist, x_min_dist, y_max_dist, y_min_dist]` with the per-axis swap.
pub fn distances(b1: &RawBox, b2: &RawBox) -> [f64; 4] {
    let mut hj = b1;
    let mut hk = b2;
    if w(b1) < w(b2) {
        hj = b2;
        hk = b1;
    }
    let mut vj = b1;
    let mut vk = b2;
    if h(b1) < h(b2) {
        vj = b2;
        vk = b1;
    }
    [
        hj[X1] - hk[X1],
        hj[X0] - hk[X0],
        vj[Y1] - vk[Y1],
        vj[Y0] - vk[Y0],
    ]
}

fn horizontal_ok(b1: &RawBox, b2: &RawBox, x_distance: f64, tau: f64) -> bool {
    let d = distances(b1, b2);
    let wt = lesser(w(b1), w(b2)) / tau;
    let ht = lesser(h(b1), h(b2)) / tau;
    let c1 = x_distance > -wt;
    let c2 = d[2] < ht;
    let c3 = d[3] > -ht;
    c1 && c2 && c3
}

fn vertical_ok(b1: &RawBox, b2: &RawBox, y_distance: f64, tau: f64) -> bool {
    let d = distances(b1, b2);
    let wt = lesser(w(b1), w(b2)) / tau;
    let ht = lesser(h(b1), h(b2)) / tau;
    let c1 = y_distance > -ht;
    let c2 = d[0] < wt;
    let c3 = d[1] > -wt;
    c1 && c2 && c3
}

pub fn right(b1: &RawBox, b2: &RawBox, tau: f64) -> bool {
    horizontal_ok(b1, b2, b1[X0] - b2[X1], tau)
}

pub fn left(b1: &RawBox, b2: &RawBox, tau: f64) -> bool {
    horizontal_ok(b1, b2, b2[X0] - b1[X1], tau)
}

pub fn bottom(b1: &RawBox, b2: &RawBox, tau: f64) -> bool {
    vertical_ok(b1, b2, b1[Y0] - b2[Y1], tau)
}

pub fn top(b1: &RawBox, b2: &RawBox, tau: f64) -> bool {
    vertical_ok(b1, b2, b2[Y0] - b1[Y1], tau)
}

pub fn next(b1: &RawBox, b2: &RawBox, tau: f64) -> bool {
    right(b1, b2, tau) || left(b1, b2, tau)
}

/// `b2` between `b1` (left) and `b3` (right).
pub fn between(b1: &RawBox, b2: &RawBox, b3: &RawBox, tau: f64) -> bool {
    left(b1, b2, tau) && right(b3, b2, tau)
}

pub fn overlap(b1: &RawBox, b2: &RawBox, tau: f64) -> bool {
    let d = distances(b1, b2);
    let wt = lesser(w(b1), w(b2)) / tau;
    let ht = lesser(h(b1), h(b2)) / tau;
    d[0] < wt && d[1] > -wt && d[2] < ht && d[3] > -ht
}

/// Mean over every pixel whose integer coordinates fall in
/// `[floor(min), ceil(max))`, found by scanning the whole map.
pub fn mean_depth(map: &[Vec<f64>], b: &RawBox) -> Option<f64> {
    let (x0, x1) = (b[X0].floor(), b[X1].ceil());
    let (y0, y1) = (b[Y0].floor(), b[Y1].ceil());
    let mut sum = 0.0;
    let mut n = 0usize;
    for (y, row) in map.iter().enumerate() {
        for (x, v) in row.iter().enumerate() {
            let (xf, yf) = (x as f64, y as f64);
            if xf >= x0 && xf < x1 && yf >= y0 && yf < y1 {
                sum += v;
                n += 1;
            }
        }
    }
    (n > 0).then(|| sum / n as f64)
}

/// `Some(true)` front, `Some(false)` behind, `None` otherwise.
pub fn front(map: &[Vec<f64>], b1: &RawBox, b2: &RawBox, tau: f64) -> Option<bool> {
    if !overlap(b1, b2, tau) {
        return None;
    }
    let d1 = mean_depth(map, b1)?;
    let d2 = mean_depth(map, b2)?;
    if d1 == d2 {
        None
    } else {
        Some(d1 > d2)
    }
}

/// All boxes with integer corners on an `n x n` grid of points `0..n`.
pub fn grid_boxes(n: u32) -> Vec<RawBox> {
    let mut out = Vec::new();
    for x0 in 0..n {
        for x1 in x0 + 1..n {
            for y0 in 0..n {
                for y1 in y0 + 1..n {
                    out.push([x0 as f64, y0 as f64, x1 as f64, y1 as f64]);
                }
            }
        }
    }
    out
}
