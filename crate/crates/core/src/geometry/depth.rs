use alloc::vec::Vec;

use super::{check_depth_overlap, BoundingBox, RelationKind, Strictness};
use crate::{Error, Result};

/// Per-pixel closeness field, row-major. Larger values are nearer the camera;
/// metric depth has to be inverted before it gets here.
#[derive(Debug, Clone, PartialEq)]
pub struct DepthMap {
    width: usize,
    height: usize,
    values: Vec<f64>,
}

impl DepthMap {
    pub fn new(width: usize, height: usize, values: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidDepthMap("dimensions must be positive"));
        }
        if width.checked_mul(height) != Some(values.len()) {
            return Err(Error::InvalidDepthMap(
                "value count does not match dimensions",
            ));
        }
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidDepthMap(
                "values must be finite and non-negative",
            ));
        }
        Ok(Self {
            width,
            height,
            values,
        })
    }

    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> f64) -> Result<Self> {
        let mut values = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                values.push(f(x, y));
            }
        }
        Self::new(width, height, values)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, x: usize, y: usize) -> Option<f64> {
        (x < self.width && y < self.height).then(|| self.values[y * self.width + x])
    }

    /// Integer pixel ranges `[floor(min), ceil(max))` of the box clipped to the map.
    fn pixel_span(
        &self,
        b: &BoundingBox,
    ) -> Option<(core::ops::Range<usize>, core::ops::Range<usize>)> {
        let clamp = |v: f64, hi: usize| -> usize {
            if v <= 0.0 {
                0
            } else if v >= hi as f64 {
                hi
            } else {
                v as usize
            }
        };
        let x0 = clamp(libm::floor(b.x_min()), self.width);
        let x1 = clamp(libm::ceil(b.x_max()), self.width);
        let y0 = clamp(libm::floor(b.y_min()), self.height);
        let y1 = clamp(libm::ceil(b.y_max()), self.height);
        (x0 < x1 && y0 < y1).then_some((x0..x1, y0..y1))
    }
}

/// Mean closeness over the pixels the box covers.
pub fn average_depth(d: &DepthMap, b: &BoundingBox) -> Result<f64> {
    let (xs, ys) = d.pixel_span(b).ok_or(Error::EmptyRegion)?;
    let mut sum = 0.0;
    for y in ys.clone() {
        let row = &d.values[y * d.width..(y + 1) * d.width];
        sum += row[xs.clone()].iter().sum::<f64>();
    }
    let count = xs.len() * ys.len();
    Ok(sum / count as f64)
}

/// Depth ordering of the first box relative to the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DepthOrder {
    Front,
    Behind,
}

impl DepthOrder {
    pub fn kind(self) -> RelationKind {
        match self {
            DepthOrder::Front => RelationKind::Front,
            DepthOrder::Behind => RelationKind::Behind,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            DepthOrder::Front => DepthOrder::Behind,
            DepthOrder::Behind => DepthOrder::Front,
        }
    }
}

/// Front/behind for `b1` relative to `b2`: `None` when the boxes do not
/// overlap enough or the mean depths tie exactly.
pub fn check_depth_relation(
    b1: &BoundingBox,
    b2: &BoundingBox,
    d: &DepthMap,
    s: Strictness,
) -> Result<Option<DepthOrder>> {
    if !check_depth_overlap(b1, b2, s) {
        return Ok(None);
    }
    let d1 = average_depth(d, b1)?;
    let d2 = average_depth(d, b2)?;
    Ok(if d1 > d2 {
        Some(DepthOrder::Front)
    } else if d1 < d2 {
        Some(DepthOrder::Behind)
    } else {
        None
    })
}
