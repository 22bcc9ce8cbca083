//! A biased stand-in for a text-to-image model.
//!
//! For every clause the stub draws "satisfy" with a per-kind probability and
//! lays out boxes that pass or fail the clause's geometry check. Clause 1 is
//! drawn in the top-left quadrant of the image and clause 2 in the
//! bottom-right one; boxes in opposite quadrants never align on either axis,
//! so the clauses do not interfere. Depth maps are planar with closeness
//! equal to the pixel row, so lower boxes are nearer.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sprel_core::eval::{score_clause, EvalRecord};
use sprel_core::extract::{DetectedObject, ExtractionConfig, Scene};
use sprel_core::prompt::{PromptSpec, RelationQuadruple};
use sprel_core::{BoundingBox, DepthMap, Error, RelationKind, Result};

/// Layout coordinates live in a 32x32 frame scaled onto each quadrant.
const FRAME: f64 = 32.0;

#[derive(Debug, Clone, PartialEq)]
pub struct StubGeneratorConfig {
    probabilities: BTreeMap<RelationKind, f64>,
    default_probability: f64,
    seed: u64,
    width: u32,
    height: u32,
}

impl StubGeneratorConfig {
    /// Every kind satisfied with probability 0.5 on 64x64 images.
    pub fn new(seed: u64) -> Self {
        Self {
            probabilities: BTreeMap::new(),
            default_probability: 0.5,
            seed,
            width: 64,
            height: 64,
        }
    }

    fn check(p: f64) -> Result<f64> {
        if (0.0..=1.0).contains(&p) {
            Ok(p)
        } else {
            Err(Error::InvalidConfig("probabilities must lie in [0, 1]"))
        }
    }

    pub fn with_probability(mut self, kind: RelationKind, p: f64) -> Result<Self> {
        self.probabilities.insert(kind, Self::check(p)?);
        Ok(self)
    }

    /// Probability for kinds without an explicit entry.
    pub fn with_default_probability(mut self, p: f64) -> Result<Self> {
        self.default_probability = Self::check(p)?;
        Ok(self)
    }

    /// Image size; both sides must be at least 32 pixels.
    pub fn with_size(mut self, width: u32, height: u32) -> Result<Self> {
        if width < 32 || height < 32 {
            return Err(Error::InvalidConfig("stub images must be at least 32x32"));
        }
        self.width = width;
        self.height = height;
        Ok(self)
    }

    pub fn probability(&self, kind: RelationKind) -> f64 {
        self.probabilities
            .get(&kind)
            .copied()
            .unwrap_or(self.default_probability)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// A generated record and, per clause, whether the layout satisfies it.
#[derive(Debug, Clone, PartialEq)]
pub struct StubRecord {
    pub record: EvalRecord,
    pub plan: Vec<bool>,
}

type Frame = [f64; 4];

/// Boxes for `(subject, objects...)` in frame coordinates.
fn layout(kind: RelationKind, satisfy: bool) -> Vec<Frame> {
    use RelationKind::*;
    let (west, east) = ([2.0, 11.0, 12.0, 21.0], [16.0, 11.0, 26.0, 21.0]);
    let (north, south) = ([11.0, 2.0, 21.0, 12.0], [11.0, 16.0, 21.0, 26.0]);
    let base = [9.0, 8.0, 23.0, 22.0];
    match (kind, satisfy) {
        (Right | Next, true) => vec![east, west],
        (Left, true) => vec![west, east],
        (Top, true) => vec![north, south],
        (Bottom, true) => vec![south, north],
        (Front, true) => vec![[9.0, 10.0, 23.0, 24.0], base],
        (Behind, true) => vec![[9.0, 6.0, 23.0, 20.0], base],
        (Between, true) => vec![
            [11.0, 11.0, 20.0, 21.0],
            [1.0, 11.0, 10.0, 21.0],
            [21.0, 11.0, 30.0, 21.0],
        ],
        // no two boxes share a row band, so no horizontal check can pass;
        // the only column-aligned pair is not horizontally aligned with a third
        (Between, false) => vec![
            [18.0, 18.0, 28.0, 28.0],
            [2.0, 2.0, 12.0, 12.0],
            [18.0, 2.0, 28.0, 12.0],
        ],
        (_, false) => vec![[18.0, 18.0, 28.0, 28.0], [2.0, 2.0, 12.0, 12.0]],
    }
}

fn covered(clause: &RelationQuadruple, other: &RelationQuadruple) -> bool {
    clause.phrases().all(|p| other.phrases().any(|q| q == p))
}

/// Builds one record per prompt. Ids are `stub-{index}`.
///
/// A clause whose phrases all occur in the other clause can be decided by
/// the other clause's boxes; its plan entry records the realized verdict.
pub fn stub_generate_planned(
    prompts: &[PromptSpec],
    cfg: &StubGeneratorConfig,
) -> Result<Vec<StubRecord>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let q = f64::from(cfg.width.min(cfg.height)) / 2.0;
    let scale = q / FRAME;
    let eval_cfg = ExtractionConfig::default();
    prompts
        .iter()
        .enumerate()
        .map(|(i, spec)| {
            let mut objects = Vec::new();
            let mut plan = Vec::new();
            for (c, clause) in spec.clauses().iter().enumerate() {
                let satisfy = rng.gen_bool(cfg.probability(clause.kind()));
                plan.push(satisfy);
                let offset = c as f64 * q;
                for (label, b) in clause.phrases().zip(layout(clause.kind(), satisfy)) {
                    let bbox = BoundingBox::new(
                        offset + b[0] * scale,
                        offset + b[1] * scale,
                        offset + b[2] * scale,
                        offset + b[3] * scale,
                    )?;
                    objects.push(DetectedObject::new(label, bbox, 0.9)?);
                }
            }
            let depth = spec
                .clauses()
                .iter()
                .any(|c| c.kind().is_depth())
                .then(|| {
                    DepthMap::from_fn(cfg.width as usize, cfg.height as usize, |_, y| y as f64)
                })
                .transpose()?;
            let id = format!("stub-{i}");
            let scene = Scene::new(
                id.clone(),
                cfg.width,
                cfg.height,
                objects,
                depth,
                spec.context(),
            )?;
            if let [a, b] = spec.clauses() {
                for (k, (clause, other)) in [(a, b), (b, a)].into_iter().enumerate() {
                    if covered(clause, other) {
                        plan[k] = score_clause(clause, &scene, &eval_cfg).satisfied();
                    }
                }
            }
            Ok(StubRecord {
                record: EvalRecord {
                    id,
                    prompt: spec.clone(),
                    scene,
                },
                plan,
            })
        })
        .collect()
}

pub fn stub_generate(prompts: &[PromptSpec], cfg: &StubGeneratorConfig) -> Result<Vec<EvalRecord>> {
    Ok(stub_generate_planned(prompts, cfg)?
        .into_iter()
        .map(|r| r.record)
        .collect())
}
