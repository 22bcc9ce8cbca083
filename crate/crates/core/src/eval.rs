//! Benchmark scoring of prompts against detections in generated images.
//!
//! Each clause of a prompt scores 1 when some detected instances carrying
//! its noun phrases satisfy the geometric constraint for its relation.
//! Soft accuracy looks at one relation kind across all clauses; strict
//! accuracy asks for every clause of a prompt at once.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::extract::{BetweenSides, ExtractionConfig, Scene, Target};
use crate::geometry::{
    check_between, check_depth_relation, check_directional, check_next, DepthOrder, RelationKind,
};
use crate::prompt::{ObjectPhrases, PromptSpec, RelationQuadruple};
use crate::tore::{OppositePair, PairAccuracy};
use crate::{Error, Result};

/// A prompt and the detections found in the image generated from it.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalRecord {
    pub id: String,
    pub prompt: PromptSpec,
    pub scene: Scene,
}

/// Scene indices that satisfied a clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub subject: usize,
    pub objects: Target,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClauseVerdict {
    pub clause: usize,
    pub witness: Option<Witness>,
}

impl ClauseVerdict {
    pub fn satisfied(&self) -> bool {
        self.witness.is_some()
    }
}

fn instances<'a>(
    scene: &'a Scene,
    label: &'a str,
    cfg: &'a ExtractionConfig,
) -> impl Iterator<Item = usize> + 'a {
    scene
        .objects()
        .iter()
        .enumerate()
        .filter(move |(_, o)| o.label() == label && cfg.passes_score(o))
        .map(|(i, _)| i)
}

fn pair_holds(
    kind: RelationKind,
    s: usize,
    o: usize,
    scene: &Scene,
    cfg: &ExtractionConfig,
) -> bool {
    let bs = scene.objects()[s].bbox();
    let bo = scene.objects()[o].bbox();
    match kind {
        RelationKind::Next => check_next(bs, bo, cfg.tau),
        RelationKind::Front | RelationKind::Behind => {
            let Some(depth) = scene.depth() else {
                return false;
            };
            let want = if kind == RelationKind::Front {
                DepthOrder::Front
            } else {
                DepthOrder::Behind
            };
            matches!(check_depth_relation(bs, bo, depth, cfg.tau), Ok(Some(got)) if got == want)
        }
        RelationKind::Between => false,
        directional => {
            let loc = directional.locality().expect("directional kind");
            check_directional(bs, bo, loc, cfg.tau)
        }
    }
}

/// Scores one clause. Any passing instance tuple satisfies it; the witness
/// is the first one in index order. Missing labels leave it unsatisfied.
pub fn score_clause(
    clause: &RelationQuadruple,
    scene: &Scene,
    cfg: &ExtractionConfig,
) -> ClauseVerdict {
    let witness = match clause.objects() {
        ObjectPhrases::One(object) => instances(scene, clause.subject(), cfg).find_map(|s| {
            instances(scene, object, cfg)
                .find(|&o| o != s && pair_holds(clause.kind(), s, o, scene, cfg))
                .map(|o| Witness {
                    subject: s,
                    objects: Target::One(o),
                })
        }),
        ObjectPhrases::Two(first, second) => {
            let mut sides = alloc::vec![(first.as_str(), second.as_str())];
            if cfg.between_sides == BetweenSides::Either && first != second {
                sides.push((second.as_str(), first.as_str()));
            }
            instances(scene, clause.subject(), cfg).find_map(|m| {
                sides.iter().find_map(|&(left, right)| {
                    instances(scene, left, cfg)
                        .filter(|&l| l != m)
                        .find_map(|l| {
                            instances(scene, right, cfg)
                                .filter(|&r| r != m && r != l)
                                .find(|&r| {
                                    let b = |k: usize| scene.objects()[k].bbox();
                                    check_between(b(l), b(m), b(r), cfg.tau)
                                })
                                .map(|r| Witness {
                                    subject: m,
                                    objects: Target::Two(l, r),
                                })
                        })
                })
            })
        }
    };
    ClauseVerdict { clause: 0, witness }
}

/// Clause verdicts of one record, reduced to what the metrics need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoredRecord {
    pub simple: bool,
    pub verdicts: Vec<(RelationKind, bool)>,
}

impl ScoredRecord {
    /// A record from hand-written verdicts; one verdict means a simple prompt.
    pub fn from_verdicts(verdicts: &[(RelationKind, bool)]) -> Self {
        Self {
            simple: verdicts.len() == 1,
            verdicts: verdicts.to_vec(),
        }
    }

    fn all_satisfied(&self) -> bool {
        self.verdicts.iter().all(|(_, ok)| *ok)
    }
}

pub fn score_record(
    record: &EvalRecord,
    cfg: &ExtractionConfig,
) -> (Vec<ClauseVerdict>, ScoredRecord) {
    let verdicts: Vec<ClauseVerdict> = record
        .prompt
        .clauses()
        .iter()
        .enumerate()
        .map(|(i, c)| ClauseVerdict {
            clause: i,
            ..score_clause(c, &record.scene, cfg)
        })
        .collect();
    let scored = ScoredRecord {
        simple: record.prompt.is_simple(),
        verdicts: record
            .prompt
            .clauses()
            .iter()
            .zip(&verdicts)
            .map(|(c, v)| (c.kind(), v.satisfied()))
            .collect(),
    };
    (verdicts, scored)
}

pub fn score_records(records: &[EvalRecord], cfg: &ExtractionConfig) -> Vec<ScoredRecord> {
    records.iter().map(|r| score_record(r, cfg).1).collect()
}

fn tally<'a>(
    records: impl Iterator<Item = &'a ScoredRecord>,
    kind: RelationKind,
) -> (usize, usize) {
    records
        .flat_map(|r| r.verdicts.iter())
        .filter(|(k, _)| *k == kind)
        .fold((0, 0), |(n, ok), (_, s)| (n + 1, ok + usize::from(*s)))
}

/// Fraction of clauses of `kind` that are satisfied, ignoring other clauses.
pub fn soft_accuracy(records: &[ScoredRecord], kind: RelationKind) -> Result<f64> {
    match tally(records.iter(), kind) {
        (0, _) => Err(Error::NoSamples),
        (n, ok) => Ok(ok as f64 / n as f64),
    }
}

/// Fraction of records whose every clause is satisfied.
pub fn strict_accuracy(records: &[ScoredRecord]) -> Result<f64> {
    if records.is_empty() {
        return Err(Error::NoSamples);
    }
    let ok = records.iter().filter(|r| r.all_satisfied()).count();
    Ok(ok as f64 / records.len() as f64)
}

/// Soft accuracy of `kind` averaged over the simple and complex subsets with
/// equal weight; a subset without clauses of `kind` is left out.
pub fn side_accuracy(records: &[ScoredRecord], kind: RelationKind) -> Option<f64> {
    let subset = |simple: bool| match tally(records.iter().filter(|r| r.simple == simple), kind) {
        (0, _) => None,
        (n, ok) => Some(ok as f64 / n as f64),
    };
    match (subset(true), subset(false)) {
        (Some(a), Some(b)) => Some((a + b) / 2.0),
        (a, b) => a.or(b),
    }
}

/// Opposite-pair table over the pairs whose two sides both have samples.
pub fn bias_table(records: &[ScoredRecord]) -> Result<BTreeMap<OppositePair, PairAccuracy>> {
    let mut table = BTreeMap::new();
    let mut missing = None;
    for pair in OppositePair::ALL {
        let (a, b) = pair.sides();
        match (side_accuracy(records, a), side_accuracy(records, b)) {
            (Some(x), Some(y)) => {
                table.insert(pair, PairAccuracy::new(x, y)?);
            }
            (None, Some(_)) => missing = missing.or(Some(a)),
            (Some(_), None) => missing = missing.or(Some(b)),
            (None, None) => {}
        }
    }
    if table.is_empty() {
        return Err(Error::MissingRelation(missing.unwrap_or(RelationKind::Top)));
    }
    Ok(table)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KindStats {
    pub clauses: usize,
    pub satisfied: usize,
    pub soft_accuracy: f64,
}

/// Aggregate benchmark result plus the configuration that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub records: usize,
    pub simple_records: usize,
    pub strict_accuracy: f64,
    pub per_kind: BTreeMap<RelationKind, KindStats>,
    /// Simple/complex-averaged soft accuracy of every directional and depth kind present.
    pub side_accuracy: BTreeMap<RelationKind, f64>,
    pub tau: f64,
    pub min_score: f64,
    pub between_sides: BetweenSides,
    pub seed: Option<u64>,
}

impl BenchReport {
    pub fn from_scored(
        scored: &[ScoredRecord],
        cfg: &ExtractionConfig,
        seed: Option<u64>,
    ) -> Result<Self> {
        let strict = strict_accuracy(scored)?;
        let mut per_kind = BTreeMap::new();
        let mut sides = BTreeMap::new();
        for kind in RelationKind::ALL {
            let (clauses, satisfied) = tally(scored.iter(), kind);
            if clauses == 0 {
                continue;
            }
            per_kind.insert(
                kind,
                KindStats {
                    clauses,
                    satisfied,
                    soft_accuracy: satisfied as f64 / clauses as f64,
                },
            );
            if OppositePair::of(kind).is_some() {
                if let Some(acc) = side_accuracy(scored, kind) {
                    sides.insert(kind, acc);
                }
            }
        }
        Ok(Self {
            records: scored.len(),
            simple_records: scored.iter().filter(|r| r.simple).count(),
            strict_accuracy: strict,
            per_kind,
            side_accuracy: sides,
            tau: cfg.tau.tau(),
            min_score: cfg.min_score,
            between_sides: cfg.between_sides,
            seed,
        })
    }

    pub fn soft_accuracy(&self, kind: RelationKind) -> Option<f64> {
        self.per_kind.get(&kind).map(|s| s.soft_accuracy)
    }

    pub fn bias_accuracy(&self, kind: RelationKind) -> Option<f64> {
        self.side_accuracy.get(&kind).copied()
    }

    /// Pairs with both sides measured.
    pub fn bias_table(&self) -> BTreeMap<OppositePair, PairAccuracy> {
        OppositePair::ALL
            .into_iter()
            .filter_map(|pair| {
                let (a, b) = pair.sides();
                let acc = PairAccuracy::new(self.bias_accuracy(a)?, self.bias_accuracy(b)?).ok()?;
                Some((pair, acc))
            })
            .collect()
    }
}

/// Scores all records and aggregates the report.
pub fn evaluate(
    records: &[EvalRecord],
    cfg: &ExtractionConfig,
    seed: Option<u64>,
) -> Result<BenchReport> {
    BenchReport::from_scored(&score_records(records, cfg), cfg, seed)
}
