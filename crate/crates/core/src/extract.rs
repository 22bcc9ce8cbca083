//! Relation extraction over a scene of labeled detections.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::geometry::{
    check_between, check_depth_relation, check_directional, check_next, BoundingBox, DepthMap,
    Locality, RelationKind, Strictness,
};
use crate::{normalize_label, Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct DetectedObject {
    label: String,
    bbox: BoundingBox,
    score: f64,
}

impl DetectedObject {
    pub fn new(label: &str, bbox: BoundingBox, score: f64) -> Result<Self> {
        let label = normalize_label(label);
        if label.is_empty() {
            return Err(Error::InvalidScene("object label is empty".into()));
        }
        if !(0.0..=1.0).contains(&score) {
            return Err(Error::InvalidScene(format!("score {score} outside [0, 1]")));
        }
        Ok(Self { label, bbox, score })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn bbox(&self) -> &BoundingBox {
        &self.bbox
    }

    pub fn score(&self) -> f64 {
        self.score
    }
}

/// One image worth of detections, with an optional depth map of the same size.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    image_id: String,
    width: u32,
    height: u32,
    objects: Vec<DetectedObject>,
    depth: Option<DepthMap>,
    context: Option<String>,
}

impl Scene {
    /// Builds a scene, clipping every box to the image.
    pub fn new(
        image_id: impl Into<String>,
        width: u32,
        height: u32,
        objects: Vec<DetectedObject>,
        depth: Option<DepthMap>,
        context: Option<&str>,
    ) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidScene(
                "image dimensions must be positive".into(),
            ));
        }
        if let Some(d) = &depth {
            if d.width() != width as usize || d.height() != height as usize {
                return Err(Error::InvalidScene(format!(
                    "depth map is {}x{}, image is {width}x{height}",
                    d.width(),
                    d.height()
                )));
            }
        }
        let objects = objects
            .into_iter()
            .enumerate()
            .map(|(i, mut o)| {
                o.bbox = o.bbox.clipped(width as f64, height as f64).map_err(|_| {
                    Error::InvalidScene(format!("object {i} lies outside the image"))
                })?;
                Ok(o)
            })
            .collect::<Result<Vec<_>>>()?;
        let context = context.map(normalize_label).filter(|c| !c.is_empty());
        Ok(Self {
            image_id: image_id.into(),
            width,
            height,
            objects,
            depth,
            context,
        })
    }

    pub fn image_id(&self) -> &str {
        &self.image_id
    }
    pub fn width(&self) -> u32 {
        self.width
    }
    pub fn height(&self) -> u32 {
        self.height
    }
    pub fn objects(&self) -> &[DetectedObject] {
        &self.objects
    }
    pub fn depth(&self) -> Option<&DepthMap> {
        self.depth.as_ref()
    }
    pub fn context(&self) -> Option<&str> {
        self.context.as_deref()
    }

    fn area(&self) -> f64 {
        self.width as f64 * self.height as f64
    }
}

/// What a relation points at besides its subject.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    /// Pairwise relations.
    One(usize),
    /// `Between`: the two flanking objects, left then right.
    Two(usize, usize),
}

impl Target {
    pub fn indices(&self) -> impl Iterator<Item = usize> {
        let (a, b) = match *self {
            Target::One(a) => (a, None),
            Target::Two(a, b) => (a, Some(b)),
        };
        core::iter::once(a).chain(b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelationInstance {
    pub kind: RelationKind,
    pub subject: usize,
    pub objects: Target,
    pub context: Option<String>,
}

impl RelationInstance {
    fn sort_key(&self) -> (usize, Target, RelationKind) {
        (self.subject, self.objects, self.kind)
    }
}

/// Swaps subject and object and maps the kind to its inverse.
pub fn invert_relation(r: &RelationInstance) -> Result<RelationInstance> {
    let (Target::One(object), Some(kind)) = (r.objects, r.kind.inverse()) else {
        return Err(Error::NotInvertible(r.kind));
    };
    Ok(RelationInstance {
        kind,
        subject: object,
        objects: Target::One(r.subject),
        context: r.context.clone(),
    })
}

/// Pairs that satisfy both a horizontal and a vertical relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AmbiguityPolicy {
    /// Emit no directional (or next) relation for the pair.
    #[default]
    DropPair,
    KeepAll,
}

/// Which flank assignments the evaluator accepts for `between`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BetweenSides {
    /// "between Y and Z" matches with Y on either side.
    #[default]
    Either,
    /// Y must be the left flank.
    Ordered,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtractionConfig {
    pub tau: Strictness,
    /// Minimum box area as a fraction of the image area.
    pub min_rel_area: f64,
    /// Maximum center distance as a fraction of the image diagonal.
    pub max_center_dist: f64,
    pub min_score: f64,
    pub ambiguity_policy: AmbiguityPolicy,
    pub emit_next_when_directional: bool,
    /// Largest object count for which triplets are enumerated.
    pub triplet_cap: usize,
    pub between_sides: BetweenSides,
}

impl Default for ExtractionConfig {
    fn default() -> Self {
        Self {
            tau: Strictness::default(),
            min_rel_area: 0.01,
            max_center_dist: 0.5,
            min_score: 0.3,
            ambiguity_policy: AmbiguityPolicy::DropPair,
            emit_next_when_directional: true,
            triplet_cap: 100,
            between_sides: BetweenSides::Either,
        }
    }
}

impl ExtractionConfig {
    pub fn validate(&self) -> Result<()> {
        let frac = |v: f64| v > 0.0 && v <= 1.0;
        if !frac(self.min_rel_area) {
            return Err(Error::InvalidConfig("min_rel_area must lie in (0, 1]"));
        }
        if !frac(self.max_center_dist) {
            return Err(Error::InvalidConfig("max_center_dist must lie in (0, 1]"));
        }
        if !(0.0..=1.0).contains(&self.min_score) {
            return Err(Error::InvalidConfig("min_score must lie in [0, 1]"));
        }
        Strictness::new(self.tau.tau()).map(|_| ())
    }

    pub(crate) fn passes_score(&self, o: &DetectedObject) -> bool {
        o.score >= self.min_score
    }
}

/// Whether the box centers lie within `max_center_dist` of the image diagonal.
pub fn proximity_filter(
    b1: &BoundingBox,
    b2: &BoundingBox,
    width: u32,
    height: u32,
    cfg: &ExtractionConfig,
) -> bool {
    let (x1, y1) = b1.center();
    let (x2, y2) = b2.center();
    let (dx, dy) = (x1 - x2, y1 - y2);
    let (w, h) = (width as f64, height as f64);
    let limit = cfg.max_center_dist * libm::sqrt(w * w + h * h);
    libm::sqrt(dx * dx + dy * dy) <= limit
}

fn eligible(scene: &Scene, cfg: &ExtractionConfig) -> Vec<usize> {
    let min_area = cfg.min_rel_area * scene.area();
    scene
        .objects
        .iter()
        .enumerate()
        .filter(|(_, o)| cfg.passes_score(o) && o.bbox.area() >= min_area)
        .map(|(i, _)| i)
        .collect()
}

/// Pairwise relations for every ordered pair of eligible objects, sorted by
/// `(subject, object, kind)`.
pub fn extract_pairwise(scene: &Scene, cfg: &ExtractionConfig) -> Result<Vec<RelationInstance>> {
    let idx = eligible(scene, cfg);
    let s = cfg.tau;
    let mut out = Vec::new();
    for &i in &idx {
        for &j in &idx {
            if i == j {
                continue;
            }
            let (bi, bj) = (&scene.objects[i].bbox, &scene.objects[j].bbox);
            if !proximity_filter(bi, bj, scene.width, scene.height, cfg) {
                continue;
            }
            let mut push = |kind: RelationKind| {
                out.push(RelationInstance {
                    kind,
                    subject: i,
                    objects: Target::One(j),
                    context: scene.context.clone(),
                })
            };

            let hits: Vec<Locality> = Locality::ALL
                .into_iter()
                .filter(|&loc| check_directional(bi, bj, loc, s))
                .collect();
            let horizontal = hits.iter().any(|l| l.is_horizontal());
            let vertical = hits.iter().any(|l| !l.is_horizontal());
            let ambiguous =
                horizontal && vertical && cfg.ambiguity_policy == AmbiguityPolicy::DropPair;
            if !ambiguous {
                for &loc in &hits {
                    push(loc.into());
                }
                // `next` holds exactly when a horizontal relation does
                if cfg.emit_next_when_directional && check_next(bi, bj, s) {
                    push(RelationKind::Next);
                }
            }
            if let Some(depth) = &scene.depth {
                if let Some(order) = check_depth_relation(bi, bj, depth, s)? {
                    push(order.kind());
                }
            }
        }
    }
    out.sort_by_key(RelationInstance::sort_key);
    Ok(out)
}

/// `between` relations over ordered triplets: `(mid, Two(left, right))`.
pub fn extract_between(scene: &Scene, cfg: &ExtractionConfig) -> Result<Vec<RelationInstance>> {
    let idx = eligible(scene, cfg);
    if idx.len() > cfg.triplet_cap {
        return Err(Error::SceneTooLarge {
            count: idx.len(),
            cap: cfg.triplet_cap,
        });
    }
    let near = |a: usize, b: usize| {
        proximity_filter(
            &scene.objects[a].bbox,
            &scene.objects[b].bbox,
            scene.width,
            scene.height,
            cfg,
        )
    };
    let mut out = Vec::new();
    for &m in &idx {
        for &l in &idx {
            if l == m || !near(l, m) {
                continue;
            }
            for &r in &idx {
                if r == m || r == l || !near(m, r) {
                    continue;
                }
                let b = |k: usize| &scene.objects[k].bbox;
                if check_between(b(l), b(m), b(r), cfg.tau) {
                    out.push(RelationInstance {
                        kind: RelationKind::Between,
                        subject: m,
                        objects: Target::Two(l, r),
                        context: scene.context.clone(),
                    });
                }
            }
        }
    }
    out.sort_by_key(RelationInstance::sort_key);
    Ok(out)
}

/// Pairwise and triplet relations merged in canonical order.
pub fn extract_all(scene: &Scene, cfg: &ExtractionConfig) -> Result<Vec<RelationInstance>> {
    let mut out = extract_pairwise(scene, cfg)?;
    out.extend(extract_between(scene, cfg)?);
    out.sort_by_key(RelationInstance::sort_key);
    Ok(out)
}
