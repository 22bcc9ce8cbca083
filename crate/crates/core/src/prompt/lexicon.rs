use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::geometry::RelationKind;
use crate::{normalize_label, Error, Result};

/// Surface phrases for one relation kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhraseEntry {
    pub canonical: String,
    pub variants: Vec<String>,
}

impl PhraseEntry {
    pub fn all(&self) -> impl Iterator<Item = &str> {
        core::iter::once(self.canonical.as_str()).chain(self.variants.iter().map(String::as_str))
    }
}

/// Relation kind to surface phrases. Every phrase belongs to exactly one kind.
///
/// The `between` entry holds only the leading word; the "and" joining the
/// two flanks is part of the grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhraseLexicon {
    entries: BTreeMap<RelationKind, PhraseEntry>,
    /// Token sequences sorted longest first, for matching.
    matchers: Vec<(Vec<String>, RelationKind)>,
}

const ARTICLES: [&str; 3] = ["a", "an", "the"];

impl PhraseLexicon {
    pub fn new(entries: BTreeMap<RelationKind, PhraseEntry>) -> Result<Self> {
        let mut seen: BTreeMap<String, RelationKind> = BTreeMap::new();
        let mut normalized = BTreeMap::new();
        for (kind, entry) in entries {
            let canonical = normalize_label(&entry.canonical);
            let mut variants: Vec<String> = Vec::new();
            for v in &entry.variants {
                let v = normalize_label(v);
                if v != canonical && !variants.contains(&v) {
                    variants.push(v);
                }
            }
            for p in core::iter::once(&canonical).chain(&variants) {
                if p.is_empty() {
                    return Err(Error::InvalidLexicon(format!("empty phrase for `{kind}`")));
                }
                let first = p.split(' ').next().unwrap_or_default();
                if ARTICLES.contains(&first) || first == "and" || first == "two" {
                    return Err(Error::InvalidLexicon(format!(
                        "phrase `{p}` starts with a reserved word"
                    )));
                }
                if let Some(other) = seen.insert(p.clone(), kind) {
                    return Err(Error::InvalidLexicon(format!(
                        "phrase `{p}` listed for both `{other}` and `{kind}`"
                    )));
                }
            }
            normalized.insert(
                kind,
                PhraseEntry {
                    canonical,
                    variants,
                },
            );
        }
        let mut matchers: Vec<(Vec<String>, RelationKind)> = seen
            .into_iter()
            .map(|(p, k)| (p.split(' ').map(ToString::to_string).collect(), k))
            .collect();
        matchers.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));
        Ok(Self {
            entries: normalized,
            matchers,
        })
    }

    pub fn entry(&self, kind: RelationKind) -> Result<&PhraseEntry> {
        self.entries.get(&kind).ok_or(Error::UnknownKind(kind))
    }

    pub fn canonical(&self, kind: RelationKind) -> Result<&str> {
        self.entry(kind).map(|e| e.canonical.as_str())
    }

    pub fn entries(&self) -> impl Iterator<Item = (RelationKind, &PhraseEntry)> {
        self.entries.iter().map(|(k, e)| (*k, e))
    }

    /// Longest phrase starting at `tokens[0]`, as (kind, token count).
    pub(crate) fn match_at(&self, tokens: &[&str]) -> Option<(RelationKind, usize)> {
        self.matchers.iter().find_map(|(words, kind)| {
            (tokens.len() >= words.len() && words.iter().zip(tokens).all(|(w, t)| w == t))
                .then_some((*kind, words.len()))
        })
    }
}

impl Default for PhraseLexicon {
    /// Canonical phrases of the urban prompt template plus common paraphrases.
    fn default() -> Self {
        let table: [(RelationKind, &str, &[&str]); 8] = [
            (
                RelationKind::Right,
                "to the right of",
                &["on the right of", "right of"],
            ),
            (
                RelationKind::Left,
                "to the left of",
                &["on the left of", "left of"],
            ),
            (
                RelationKind::Top,
                "on top of",
                &["on the top of", "above", "over"],
            ),
            (
                RelationKind::Bottom,
                "under",
                &["on the bottom of", "below", "underneath", "beneath"],
            ),
            (
                RelationKind::Next,
                "next to",
                &["beside", "near", "on the side of"],
            ),
            (RelationKind::Between, "between", &[]),
            (RelationKind::Front, "in front of", &[]),
            (RelationKind::Behind, "behind", &["in back of"]),
        ];
        let entries = table
            .into_iter()
            .map(|(k, c, v)| {
                (
                    k,
                    PhraseEntry {
                        canonical: c.to_string(),
                        variants: v.iter().map(|s| s.to_string()).collect(),
                    },
                )
            })
            .collect();
        Self::new(entries).expect("built-in lexicon is consistent")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(c: &str, v: &[&str]) -> PhraseEntry {
        PhraseEntry {
            canonical: c.into(),
            variants: v.iter().map(|s| s.to_string()).collect(),
        }
    }

    #[test]
    fn default_covers_every_kind() {
        let lex = PhraseLexicon::default();
        for k in RelationKind::ALL {
            assert!(lex.canonical(k).is_ok());
        }
        assert_eq!(lex.canonical(RelationKind::Bottom).unwrap(), "under");
    }

    #[test]
    fn rejects_shared_phrases() {
        let mut m = BTreeMap::new();
        m.insert(RelationKind::Top, entry("above", &[]));
        m.insert(RelationKind::Bottom, entry("under", &["above"]));
        assert!(matches!(
            PhraseLexicon::new(m),
            Err(Error::InvalidLexicon(_))
        ));
    }

    #[test]
    fn rejects_reserved_leading_words() {
        let mut m = BTreeMap::new();
        m.insert(RelationKind::Top, entry("the top of", &[]));
        assert!(PhraseLexicon::new(m).is_err());
    }

    #[test]
    fn longest_match_wins() {
        let lex = PhraseLexicon::default();
        let toks = ["to", "the", "right", "of", "a"];
        assert_eq!(lex.match_at(&toks), Some((RelationKind::Right, 4)));
        assert_eq!(lex.match_at(&toks[2..]), Some((RelationKind::Right, 2)));
        assert_eq!(
            lex.match_at(&["on", "the", "top", "of"]),
            Some((RelationKind::Top, 4))
        );
        assert_eq!(lex.match_at(&["car"]), None);
    }

    #[test]
    fn missing_kind() {
        let mut m = BTreeMap::new();
        m.insert(RelationKind::Top, entry("above", &[]));
        let lex = PhraseLexicon::new(m).unwrap();
        assert_eq!(
            lex.canonical(RelationKind::Left),
            Err(Error::UnknownKind(RelationKind::Left))
        );
    }
}
