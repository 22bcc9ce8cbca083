use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{PromptSpec, RelationQuadruple};
use crate::geometry::RelationKind;
use crate::{Error, Result};

/// Appends the inverse of every invertible quadruple, keeping input order
/// and dropping duplicates.
pub fn augment_inversions(quads: &[RelationQuadruple]) -> Vec<RelationQuadruple> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(quads.len() * 2);
    for q in quads {
        if seen.insert(q.clone()) {
            out.push(q.clone());
        }
    }
    for q in quads {
        if let Ok(inv) = q.invert() {
            if seen.insert(inv.clone()) {
                out.push(inv);
            }
        }
    }
    out
}

/// Prompts to draw per relation kind. For complex prompts the kind is that
/// of the first clause.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SampleRequest {
    pub simple: BTreeMap<RelationKind, usize>,
    pub complex: BTreeMap<RelationKind, usize>,
}

fn usable(q: &RelationQuadruple) -> bool {
    // "a bench under a bench" carries no spatial signal
    q.kind() == RelationKind::Next
        || q.kind() == RelationKind::Between
        || q.objects().iter().all(|o| o != q.subject())
}

/// Seeded sampling without replacement from a relation pool.
///
/// Simple prompts come first (kinds in canonical order), then complex ones.
/// The second clause of a complex prompt is drawn from the pool entries that
/// share a noun phrase and the context with the first.
pub fn sample_prompt_set(
    pool: &[RelationQuadruple],
    request: &SampleRequest,
    seed: u64,
) -> Result<Vec<PromptSpec>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut by_kind: BTreeMap<RelationKind, Vec<&RelationQuadruple>> = BTreeMap::new();
    for q in pool.iter().filter(|q| usable(q)) {
        by_kind.entry(q.kind()).or_default().push(q);
    }
    let empty = Vec::new();
    let mut out = Vec::new();

    for (&kind, &count) in &request.simple {
        let candidates = by_kind.get(&kind).unwrap_or(&empty);
        if candidates.len() < count {
            return Err(Error::InsufficientPool {
                kind,
                requested: count,
                available: candidates.len(),
            });
        }
        out.extend(
            candidates
                .choose_multiple(&mut rng, count)
                .map(|q| PromptSpec::simple((*q).clone())),
        );
    }

    let usable_pool: Vec<&RelationQuadruple> = pool.iter().filter(|q| usable(q)).collect();
    for (&kind, &count) in &request.complex {
        let mut candidates = by_kind.get(&kind).unwrap_or(&empty).clone();
        candidates.shuffle(&mut rng);
        let mut made = 0;
        for first in candidates {
            if made == count {
                break;
            }
            let partners: Vec<&RelationQuadruple> = usable_pool
                .iter()
                .copied()
                .filter(|q| *q != first && q.context() == first.context())
                .filter(|q| q.phrases().any(|p| first.phrases().any(|f| f == p)))
                .collect();
            if partners.is_empty() {
                continue;
            }
            let second = partners[rng.gen_range(0..partners.len())];
            out.push(PromptSpec::complex(first.clone(), second.clone())?);
            made += 1;
        }
        if made < count {
            return Err(Error::InsufficientPool {
                kind,
                requested: count,
                available: made,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn q(s: &str, k: RelationKind, o: &str) -> RelationQuadruple {
        RelationQuadruple::pairwise(s, k, o, Some("city")).unwrap()
    }

    #[test]
    fn inversion_augmentation() {
        let r = q("a", RelationKind::Right, "b");
        assert_eq!(
            augment_inversions(core::slice::from_ref(&r)),
            vec![r, q("b", RelationKind::Left, "a")]
        );
        assert!(augment_inversions(&[]).is_empty());
        let bt = RelationQuadruple::between("a", "b", "c", Some("city")).unwrap();
        assert_eq!(augment_inversions(core::slice::from_ref(&bt)), vec![bt]);
        // an input already containing the inverse gains nothing
        let pair = [
            q("a", RelationKind::Top, "b"),
            q("b", RelationKind::Bottom, "a"),
        ];
        assert_eq!(augment_inversions(&pair), pair.to_vec());
    }

    fn pool() -> Vec<RelationQuadruple> {
        (0..10)
            .map(|i| {
                q(
                    &format!("obj{i}"),
                    RelationKind::Right,
                    &format!("obj{}", i + 1),
                )
            })
            .collect()
    }

    #[test]
    fn simple_sampling_is_reproducible() {
        let mut req = SampleRequest::default();
        req.simple.insert(RelationKind::Right, 2);
        let a = sample_prompt_set(&pool(), &req, 7).unwrap();
        let b = sample_prompt_set(&pool(), &req, 7).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|p| p.is_simple() && p.clauses()[0].kind() == RelationKind::Right));
        assert_ne!(a[0], a[1]);
    }

    #[test]
    fn insufficient_pool() {
        let mut req = SampleRequest::default();
        req.simple.insert(RelationKind::Between, 1);
        assert_eq!(
            sample_prompt_set(&pool(), &req, 7),
            Err(Error::InsufficientPool {
                kind: RelationKind::Between,
                requested: 1,
                available: 0
            })
        );
    }

    #[test]
    fn self_referential_directional_is_skipped() {
        let pool = vec![
            q("gate", RelationKind::Right, "gate"),
            q("person", RelationKind::Next, "person"),
        ];
        let mut req = SampleRequest::default();
        req.simple.insert(RelationKind::Right, 1);
        assert!(sample_prompt_set(&pool, &req, 1).is_err());
        req.simple.clear();
        req.simple.insert(RelationKind::Next, 1);
        assert_eq!(sample_prompt_set(&pool, &req, 1).unwrap().len(), 1);
    }

    #[test]
    fn complex_prompts_share_an_anchor() {
        let mut req = SampleRequest::default();
        req.complex.insert(RelationKind::Right, 5);
        let got = sample_prompt_set(&pool(), &req, 3).unwrap();
        assert_eq!(got.len(), 5);
        for p in &got {
            assert_eq!(p.clauses().len(), 2);
            assert_eq!(p.clauses()[0].kind(), RelationKind::Right);
            assert!(p.anchor().is_some());
        }
    }
}
