//! Box geometry and the positional constraints behind every relation.
//!
//! Coordinates are pixels with the y axis pointing down, so `y_min` is the
//! visually upper edge and "top" means smaller y.
//!
//! All constraints compare against `min(extent_1, extent_2) / tau` with
//! strict inequalities; a value exactly on a threshold fails.

mod depth;

use core::fmt;
use core::str::FromStr;

pub use depth::{average_depth, check_depth_relation, DepthMap, DepthOrder};

use crate::{Error, Result};

/// Axis-aligned box in pixel space. Always non-degenerate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    x_min: f64,
    y_min: f64,
    x_max: f64,
    y_max: f64,
}

impl BoundingBox {
    pub fn new(x_min: f64, y_min: f64, x_max: f64, y_max: f64) -> Result<Self> {
        let coords = [x_min, y_min, x_max, y_max];
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidBox("coordinates must be finite"));
        }
        if coords.iter().any(|&c| c < 0.0) {
            return Err(Error::InvalidBox("coordinates must be non-negative"));
        }
        if x_min >= x_max {
            return Err(Error::InvalidBox("x_min must be less than x_max"));
        }
        if y_min >= y_max {
            return Err(Error::InvalidBox("y_min must be less than y_max"));
        }
        Ok(Self {
            x_min,
            y_min,
            x_max,
            y_max,
        })
    }

    pub fn from_array(c: [f64; 4]) -> Result<Self> {
        Self::new(c[0], c[1], c[2], c[3])
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }
    pub fn y_min(&self) -> f64 {
        self.y_min
    }
    pub fn x_max(&self) -> f64 {
        self.x_max
    }
    pub fn y_max(&self) -> f64 {
        self.y_max
    }

    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn center(&self) -> (f64, f64) {
        (
            (self.x_min + self.x_max) / 2.0,
            (self.y_min + self.y_max) / 2.0,
        )
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.x_min, self.y_min, self.x_max, self.y_max]
    }

    /// Clips the box to `[0, width] x [0, height]`.
    ///
    /// Fails when nothing of the box is left inside the image.
    pub fn clipped(&self, width: f64, height: f64) -> Result<Self> {
        Self::new(
            self.x_min.min(width),
            self.y_min.min(height),
            self.x_max.min(width),
            self.y_max.min(height),
        )
        .map_err(|_| Error::InvalidBox("box lies outside the image"))
    }
}

/// Directional case of a 2D relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Locality {
    Right,
    Left,
    Top,
    Bottom,
}

impl Locality {
    pub const ALL: [Locality; 4] = [
        Locality::Right,
        Locality::Left,
        Locality::Top,
        Locality::Bottom,
    ];

    pub fn is_horizontal(self) -> bool {
        matches!(self, Locality::Right | Locality::Left)
    }

    pub fn opposite(self) -> Self {
        match self {
            Locality::Right => Locality::Left,
            Locality::Left => Locality::Right,
            Locality::Top => Locality::Bottom,
            Locality::Bottom => Locality::Top,
        }
    }
}

/// The eight relation kinds. Declaration order is the canonical sort order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationKind {
    Right,
    Left,
    Top,
    Bottom,
    Next,
    Between,
    Front,
    Behind,
}

impl RelationKind {
    pub const ALL: [RelationKind; 8] = [
        RelationKind::Right,
        RelationKind::Left,
        RelationKind::Top,
        RelationKind::Bottom,
        RelationKind::Next,
        RelationKind::Between,
        RelationKind::Front,
        RelationKind::Behind,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RelationKind::Right => "right",
            RelationKind::Left => "left",
            RelationKind::Top => "top",
            RelationKind::Bottom => "bottom",
            RelationKind::Next => "next",
            RelationKind::Between => "between",
            RelationKind::Front => "front",
            RelationKind::Behind => "behind",
        }
    }

    pub fn locality(self) -> Option<Locality> {
        match self {
            RelationKind::Right => Some(Locality::Right),
            RelationKind::Left => Some(Locality::Left),
            RelationKind::Top => Some(Locality::Top),
            RelationKind::Bottom => Some(Locality::Bottom),
            _ => None,
        }
    }

    pub fn is_depth(self) -> bool {
        matches!(self, RelationKind::Front | RelationKind::Behind)
    }

    /// The opposite side of a directional or depth relation.
    pub fn opposite(self) -> Option<Self> {
        match self {
            RelationKind::Right => Some(RelationKind::Left),
            RelationKind::Left => Some(RelationKind::Right),
            RelationKind::Top => Some(RelationKind::Bottom),
            RelationKind::Bottom => Some(RelationKind::Top),
            RelationKind::Front => Some(RelationKind::Behind),
            RelationKind::Behind => Some(RelationKind::Front),
            RelationKind::Next | RelationKind::Between => None,
        }
    }

    /// Kind obtained when subject and object trade places. `Next` maps to
    /// itself; `Between` has no pairwise inverse.
    pub fn inverse(self) -> Option<Self> {
        match self {
            RelationKind::Next => Some(RelationKind::Next),
            other => other.opposite(),
        }
    }
}

impl From<Locality> for RelationKind {
    fn from(loc: Locality) -> Self {
        match loc {
            Locality::Right => RelationKind::Right,
            Locality::Left => RelationKind::Left,
            Locality::Top => RelationKind::Top,
            Locality::Bottom => RelationKind::Bottom,
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RelationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = crate::normalize_label(s);
        RelationKind::ALL
            .into_iter()
            .find(|k| k.as_str() == lower)
            .ok_or(Error::InvalidConfig("unknown relation kind"))
    }
}

/// Strictness divisor `tau` for the constraint thresholds. Larger is stricter.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Strictness(f64);

impl Strictness {
    pub const DEFAULT_TAU: f64 = 3.0;

    pub fn new(tau: f64) -> Result<Self> {
        if tau.is_finite() && tau > 0.0 {
            Ok(Self(tau))
        } else {
            Err(Error::InvalidConfig("tau must be finite and positive"))
        }
    }

    pub fn tau(self) -> f64 {
        self.0
    }

    fn threshold(self, extent: f64) -> f64 {
        extent / self.0
    }
}

impl Default for Strictness {
    fn default() -> Self {
        Self(Self::DEFAULT_TAU)
    }
}

/// Location-independent edge distances between two boxes.
///
/// The horizontal pair subtracts the narrower box from the wider one, the
/// vertical pair the shorter from the taller one. On equal extents the
/// argument order is kept.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisDistances {
    pub x_max_dist: f64,
    pub x_min_dist: f64,
    pub y_max_dist: f64,
    pub y_min_dist: f64,
}

pub fn axis_distances(b1: &BoundingBox, b2: &BoundingBox) -> AxisDistances {
    let (xj, xk) = if b1.width() < b2.width() {
        (b2, b1)
    } else {
        (b1, b2)
    };
    let (yj, yk) = if b1.height() < b2.height() {
        (b2, b1)
    } else {
        (b1, b2)
    };
    AxisDistances {
        x_max_dist: xj.x_max - xk.x_max,
        x_min_dist: xj.x_min - xk.x_min,
        y_max_dist: yj.y_max - yk.y_max,
        y_min_dist: yj.y_min - yk.y_min,
    }
}

/// Signed gap between the facing edges for `b1 <loc> b2`. Positive means
/// separated, negative means overlapping along that axis.
pub fn directional_distance(b1: &BoundingBox, b2: &BoundingBox, loc: Locality) -> f64 {
    match loc {
        Locality::Right => b1.x_min - b2.x_max,
        Locality::Left => b2.x_min - b1.x_max,
        Locality::Bottom => b1.y_min - b2.y_max,
        Locality::Top => b2.y_min - b1.y_max,
    }
}

/// Whether `b1 <loc> b2` holds: enough separation along the locality axis
/// and alignment within tolerance along the orthogonal one.
pub fn check_directional(b1: &BoundingBox, b2: &BoundingBox, loc: Locality, s: Strictness) -> bool {
    let d = axis_distances(b1, b2);
    let gap = directional_distance(b1, b2, loc);
    let min_w = b1.width().min(b2.width());
    let min_h = b1.height().min(b2.height());
    if loc.is_horizontal() {
        let tw = s.threshold(min_w);
        let th = s.threshold(min_h);
        gap > -tw && d.y_max_dist < th && d.y_min_dist > -th
    } else {
        let th = s.threshold(min_h);
        let tw = s.threshold(min_w);
        gap > -th && d.x_max_dist < tw && d.x_min_dist > -tw
    }
}

/// `next` holds when either horizontal relation does.
pub fn check_next(b1: &BoundingBox, b2: &BoundingBox, s: Strictness) -> bool {
    check_directional(b1, b2, Locality::Right, s) || check_directional(b1, b2, Locality::Left, s)
}

/// Whether `mid` sits between `left` and `right` in this argument order.
pub fn check_between(
    left: &BoundingBox,
    mid: &BoundingBox,
    right: &BoundingBox,
    s: Strictness,
) -> bool {
    check_directional(left, mid, Locality::Left, s)
        && check_directional(right, mid, Locality::Right, s)
}

/// Overlap gate for front/behind: all four edge distances within tolerance.
pub fn check_depth_overlap(b1: &BoundingBox, b2: &BoundingBox, s: Strictness) -> bool {
    let d = axis_distances(b1, b2);
    let tw = s.threshold(b1.width().min(b2.width()));
    let th = s.threshold(b1.height().min(b2.height()));
    d.x_max_dist < tw && d.x_min_dist > -tw && d.y_max_dist < th && d.y_min_dist > -th
}
