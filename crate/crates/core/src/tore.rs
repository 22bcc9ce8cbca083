//! Bias-aware prompt transformation.
//!
//! "A bench under a tree" and "A tree on top of a bench" describe the same
//! layout. Given per-side accuracies of a model, clauses naming the weaker
//! side of an opposite pair are rewritten into the stronger side by swapping
//! subject and object.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::eval::BenchReport;
use crate::geometry::RelationKind;
use crate::prompt::{parse_prompt, render_prompt, PhraseLexicon, PromptSpec, RelationQuadruple};
use crate::{Error, Result};

/// The three pairs of mutually inverse relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OppositePair {
    TopBottom,
    LeftRight,
    FrontBehind,
}

impl OppositePair {
    pub const ALL: [OppositePair; 3] = [
        OppositePair::TopBottom,
        OppositePair::LeftRight,
        OppositePair::FrontBehind,
    ];

    pub fn sides(self) -> (RelationKind, RelationKind) {
        match self {
            OppositePair::TopBottom => (RelationKind::Top, RelationKind::Bottom),
            OppositePair::LeftRight => (RelationKind::Left, RelationKind::Right),
            OppositePair::FrontBehind => (RelationKind::Front, RelationKind::Behind),
        }
    }

    pub fn of(kind: RelationKind) -> Option<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.sides().0 == kind || p.sides().1 == kind)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            OppositePair::TopBottom => "top_bottom",
            OppositePair::LeftRight => "left_right",
            OppositePair::FrontBehind => "front_behind",
        }
    }
}

impl fmt::Display for OppositePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OppositePair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or(Error::InvalidConfig("unknown opposite pair"))
    }
}

/// Measured accuracy of both sides of a pair, in [`OppositePair::sides`] order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairAccuracy {
    pub first: f64,
    pub second: f64,
}

impl PairAccuracy {
    pub fn new(first: f64, second: f64) -> Result<Self> {
        for a in [first, second] {
            if !(0.0..=1.0).contains(&a) {
                return Err(Error::InvalidAccuracy(a));
            }
        }
        Ok(Self { first, second })
    }
}

/// Per-pair side accuracies of one model.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct BiasProfile {
    pairs: BTreeMap<OppositePair, PairAccuracy>,
}

impl BiasProfile {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a profile from `(kind, accuracy)` entries. A pair is included
    /// only when both of its sides are given.
    pub fn from_accuracies(entries: impl IntoIterator<Item = (RelationKind, f64)>) -> Result<Self> {
        let acc: BTreeMap<RelationKind, f64> = entries.into_iter().collect();
        let mut profile = Self::new();
        for pair in OppositePair::ALL {
            let (a, b) = pair.sides();
            match (acc.get(&a), acc.get(&b)) {
                (Some(&x), Some(&y)) => profile.set(pair, PairAccuracy::new(x, y)?),
                (None, None) => {}
                (None, Some(_)) => return Err(Error::MissingRelation(a)),
                (Some(_), None) => return Err(Error::MissingRelation(b)),
            }
        }
        for kind in acc.keys() {
            if OppositePair::of(*kind).is_none() {
                return Err(Error::InvalidConfig(
                    "bias profiles only cover opposite pairs",
                ));
            }
        }
        Ok(profile)
    }

    pub fn set(&mut self, pair: OppositePair, acc: PairAccuracy) {
        self.pairs.insert(pair, acc);
    }

    pub fn get(&self, pair: OppositePair) -> Option<PairAccuracy> {
        self.pairs.get(&pair).copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (OppositePair, PairAccuracy)> + '_ {
        self.pairs.iter().map(|(p, a)| (*p, *a))
    }

    /// The strictly more accurate side; `None` on ties or missing data.
    pub fn preferred(&self, pair: OppositePair) -> Option<RelationKind> {
        let acc = self.get(pair)?;
        let (a, b) = pair.sides();
        if acc.first > acc.second {
            Some(a)
        } else if acc.second > acc.first {
            Some(b)
        } else {
            None
        }
    }

    /// Built-in profiles measured on the urban benchmark
    /// (`flux1`, `flux1-esplora`, `sdxl`, `sdxl-esplora`).
    pub fn builtin(name: &str) -> Option<Self> {
        // bottom, top, right, left, behind, front
        let row: [f64; 6] = match name {
            "sdxl" => [0.24, 0.25, 0.16, 0.16, 0.24, 0.28],
            "sdxl-esplora" => [0.28, 0.30, 0.21, 0.21, 0.26, 0.30],
            "flux1" => [0.33, 0.41, 0.31, 0.32, 0.28, 0.31],
            "flux1-esplora" => [0.36, 0.48, 0.32, 0.34, 0.30, 0.33],
            _ => return None,
        };
        let kinds = [
            RelationKind::Bottom,
            RelationKind::Top,
            RelationKind::Right,
            RelationKind::Left,
            RelationKind::Behind,
            RelationKind::Front,
        ];
        Self::from_accuracies(kinds.into_iter().zip(row)).ok()
    }

    pub const BUILTIN_NAMES: [&'static str; 4] = ["flux1", "flux1-esplora", "sdxl", "sdxl-esplora"];
}

#[derive(Debug, Clone, PartialEq)]
pub struct ToreConfig {
    pub profile: BiasProfile,
    pub enabled: BTreeSet<OppositePair>,
    /// Return prompts outside the grammar unchanged instead of failing.
    pub lenient: bool,
}

impl ToreConfig {
    pub fn new(profile: BiasProfile) -> Self {
        Self {
            profile,
            enabled: OppositePair::ALL.into_iter().collect(),
            lenient: false,
        }
    }

    /// The side a clause of `kind` should be flipped to, if any.
    fn flip_target(&self, kind: RelationKind) -> Option<RelationKind> {
        let pair = OppositePair::of(kind)?;
        if !self.enabled.contains(&pair) {
            return None;
        }
        let preferred = self.profile.preferred(pair)?;
        (preferred != kind).then_some(preferred)
    }
}

impl Default for ToreConfig {
    fn default() -> Self {
        Self::new(BiasProfile::builtin("flux1").expect("built-in profile"))
    }
}

/// `<A, bottom, B>` becomes `<B, top, A>`.
pub fn flip_clause(q: &RelationQuadruple) -> Result<RelationQuadruple> {
    if q.kind().opposite().is_none() {
        return Err(Error::NotFlippable(q.kind()));
    }
    q.invert()
}

/// Flips every clause that names a dispreferred side. Returns `None` when
/// nothing changes.
pub fn transform_spec(spec: &PromptSpec, cfg: &ToreConfig) -> Result<Option<PromptSpec>> {
    let mut changed = false;
    let clauses = spec
        .clauses()
        .iter()
        .map(|q| match cfg.flip_target(q.kind()) {
            Some(_) => {
                changed = true;
                flip_clause(q)
            }
            None => Ok(q.clone()),
        })
        .collect::<Result<Vec<_>>>()?;
    if changed {
        PromptSpec::new(clauses).map(Some)
    } else {
        Ok(None)
    }
}

/// Rewrites a prompt so every directional or depth clause uses the preferred
/// side. Prompts that need no flip come back unchanged, so the transform is
/// idempotent.
pub fn transform_prompt(text: &str, cfg: &ToreConfig, lex: &PhraseLexicon) -> Result<String> {
    let spec = match parse_prompt(text, lex) {
        Ok(spec) => spec,
        Err(_) if cfg.lenient => return Ok(String::from(text)),
        Err(e) => return Err(e),
    };
    match transform_spec(&spec, cfg)? {
        Some(flipped) => render_prompt(&flipped, lex),
        None => Ok(String::from(text)),
    }
}

/// Reads the opposite-pair table of a benchmark report into a profile.
pub fn compute_bias_profile(report: &BenchReport) -> Result<BiasProfile> {
    let mut profile = BiasProfile::new();
    for pair in OppositePair::ALL {
        let (a, b) = pair.sides();
        match (report.bias_accuracy(a), report.bias_accuracy(b)) {
            (Some(x), Some(y)) => profile.set(pair, PairAccuracy::new(x, y)?),
            (None, None) => {}
            (None, Some(_)) => return Err(Error::MissingRelation(a)),
            (Some(_), None) => return Err(Error::MissingRelation(b)),
        }
    }
    if profile.pairs.is_empty() {
        return Err(Error::MissingRelation(RelationKind::Top));
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lex() -> PhraseLexicon {
        PhraseLexicon::default()
    }

    #[test]
    fn flip_examples() {
        let q = RelationQuadruple::pairwise("bench", RelationKind::Bottom, "tree", Some("street"))
            .unwrap();
        let f = flip_clause(&q).unwrap();
        assert_eq!(
            f,
            RelationQuadruple::pairwise("tree", RelationKind::Top, "bench", Some("street"))
                .unwrap()
        );
        assert_eq!(flip_clause(&f).unwrap(), q);
        let n = RelationQuadruple::pairwise("a", RelationKind::Next, "b", None).unwrap();
        assert_eq!(
            flip_clause(&n),
            Err(Error::NotFlippable(RelationKind::Next))
        );
        let b = RelationQuadruple::between("a", "b", "c", None).unwrap();
        assert_eq!(
            flip_clause(&b),
            Err(Error::NotFlippable(RelationKind::Between))
        );
    }

    #[test]
    fn builtin_preferences() {
        let flux = BiasProfile::builtin("flux1").unwrap();
        assert_eq!(
            flux.preferred(OppositePair::TopBottom),
            Some(RelationKind::Top)
        );
        assert_eq!(
            flux.preferred(OppositePair::LeftRight),
            Some(RelationKind::Left)
        );
        assert_eq!(
            flux.preferred(OppositePair::FrontBehind),
            Some(RelationKind::Front)
        );
        let sdxl = BiasProfile::builtin("sdxl").unwrap();
        assert_eq!(
            sdxl.preferred(OppositePair::FrontBehind),
            Some(RelationKind::Front)
        );
        assert_eq!(sdxl.preferred(OppositePair::LeftRight), None);
        for name in BiasProfile::BUILTIN_NAMES {
            assert!(BiasProfile::builtin(name).is_some());
        }
        assert!(BiasProfile::builtin("dalle").is_none());
    }

    #[test]
    fn transform_examples() {
        let cfg = ToreConfig::default();
        assert_eq!(
            transform_prompt("A bus to the right of a car in a city", &cfg, &lex()).unwrap(),
            "A car to the left of a bus in a city"
        );
        assert_eq!(
            transform_prompt("A market behind a building in a city", &cfg, &lex()).unwrap(),
            "A building in front of a market in a city"
        );
        let kept = "A bench on top of a car in a city";
        assert_eq!(transform_prompt(kept, &cfg, &lex()).unwrap(), kept);
        let next = "A tree next to a car in a city";
        assert_eq!(transform_prompt(next, &cfg, &lex()).unwrap(), next);
    }

    #[test]
    fn transform_complex_keeps_anchor() {
        let cfg = ToreConfig::default();
        let out = transform_prompt(
            "A fountain to the right of a statue, a fence under the statue in a city",
            &cfg,
            &lex(),
        )
        .unwrap();
        assert_eq!(
            out,
            "A statue to the left of a fountain, the statue on top of a fence in a city"
        );
        assert_eq!(transform_prompt(&out, &cfg, &lex()).unwrap(), out);
    }

    #[test]
    fn disabled_pairs_and_ties_pass_through() {
        let mut cfg = ToreConfig::default();
        cfg.enabled.remove(&OppositePair::LeftRight);
        let text = "A bus to the right of a car in a city";
        assert_eq!(transform_prompt(text, &cfg, &lex()).unwrap(), text);
        let tie = ToreConfig::new(BiasProfile::builtin("sdxl").unwrap());
        assert_eq!(transform_prompt(text, &tie, &lex()).unwrap(), text);
    }

    #[test]
    fn lenient_mode() {
        let mut cfg = ToreConfig::default();
        assert!(transform_prompt("a photo of a sunset", &cfg, &lex()).is_err());
        cfg.lenient = true;
        assert_eq!(
            transform_prompt("a photo of a sunset", &cfg, &lex()).unwrap(),
            "a photo of a sunset"
        );
    }

    #[test]
    fn profile_validation() {
        assert!(PairAccuracy::new(1.2, 0.3).is_err());
        assert_eq!(
            BiasProfile::from_accuracies([(RelationKind::Top, 0.4)]),
            Err(Error::MissingRelation(RelationKind::Bottom))
        );
        assert!(BiasProfile::from_accuracies([(RelationKind::Next, 0.4)]).is_err());
        let p =
            BiasProfile::from_accuracies([(RelationKind::Top, 0.5), (RelationKind::Bottom, 0.5)])
                .unwrap();
        assert_eq!(p.preferred(OppositePair::TopBottom), None);
    }
}
