//! Spatially explicit prompts.
//!
//! A prompt is one clause ("A bench under a tree in a street") or two
//! clauses sharing a noun phrase ("A bench under a tree, a dog next to the
//! tree in a street"). [`render_prompt`] and [`parse_prompt`] convert between
//! the text and [`PromptSpec`]; `parse_prompt(render_prompt(s)) == s`.

mod lexicon;
mod objects;
mod parse;
mod plural;
mod render;
mod sample;

use alloc::string::String;
use alloc::vec::Vec;

pub use lexicon::{PhraseEntry, PhraseLexicon};
pub use objects::{URBAN_CONTEXTS, URBAN_OBJECTS};
pub use parse::parse_prompt;
pub use plural::{pluralize, singularize};
pub use render::render_prompt;
pub use sample::{augment_inversions, sample_prompt_set, SampleRequest};

use crate::geometry::RelationKind;
use crate::{normalize_label, Error, Result};

/// Noun phrases a clause points at besides its subject.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectPhrases {
    One(String),
    /// The two flanks of a `between` clause, in textual order.
    Two(String, String),
}

impl ObjectPhrases {
    pub fn iter(&self) -> impl Iterator<Item = &str> {
        let (a, b) = match self {
            ObjectPhrases::One(a) => (a.as_str(), None),
            ObjectPhrases::Two(a, b) => (a.as_str(), Some(b.as_str())),
        };
        core::iter::once(a).chain(b)
    }
}

/// `<subject, relation, object(s), context>`, the atom prompts are built from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelationQuadruple {
    subject: String,
    kind: RelationKind,
    objects: ObjectPhrases,
    context: Option<String>,
}

fn phrase(raw: &str) -> Result<String> {
    let p = normalize_label(raw);
    if p.is_empty() {
        Err(Error::InvalidPrompt("noun phrase is empty"))
    } else {
        Ok(p)
    }
}

fn context_phrase(raw: Option<&str>) -> Option<String> {
    raw.map(normalize_label).filter(|c| !c.is_empty())
}

impl RelationQuadruple {
    /// A two-object clause. Fails for `Between`.
    pub fn pairwise(
        subject: &str,
        kind: RelationKind,
        object: &str,
        context: Option<&str>,
    ) -> Result<Self> {
        if kind == RelationKind::Between {
            return Err(Error::InvalidPrompt("between needs two flanking objects"));
        }
        Ok(Self {
            subject: phrase(subject)?,
            kind,
            objects: ObjectPhrases::One(phrase(object)?),
            context: context_phrase(context),
        })
    }

    pub fn between(
        subject: &str,
        first: &str,
        second: &str,
        context: Option<&str>,
    ) -> Result<Self> {
        Ok(Self {
            subject: phrase(subject)?,
            kind: RelationKind::Between,
            objects: ObjectPhrases::Two(phrase(first)?, phrase(second)?),
            context: context_phrase(context),
        })
    }

    pub fn subject(&self) -> &str {
        &self.subject
    }
    pub fn kind(&self) -> RelationKind {
        self.kind
    }
    pub fn objects(&self) -> &ObjectPhrases {
        &self.objects
    }
    pub fn context(&self) -> Option<&str> {
        self.context.as_deref()
    }

    /// Subject followed by the object phrases.
    pub fn phrases(&self) -> impl Iterator<Item = &str> {
        core::iter::once(self.subject.as_str()).chain(self.objects.iter())
    }

    pub fn with_context(mut self, context: Option<&str>) -> Self {
        self.context = context_phrase(context);
        self
    }

    /// `<A, right, B>` becomes `<B, left, A>`; `next` stays `next`.
    pub fn invert(&self) -> Result<Self> {
        match (&self.objects, self.kind.inverse()) {
            (ObjectPhrases::One(object), Some(kind)) => Ok(Self {
                subject: object.clone(),
                kind,
                objects: ObjectPhrases::One(self.subject.clone()),
                context: self.context.clone(),
            }),
            _ => Err(Error::NotInvertible(self.kind)),
        }
    }
}

/// One clause, or two clauses sharing a noun phrase, under one context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PromptSpec {
    clauses: Vec<RelationQuadruple>,
}

impl PromptSpec {
    pub fn new(clauses: Vec<RelationQuadruple>) -> Result<Self> {
        match clauses.as_slice() {
            [_] => {}
            [first, second] => {
                if first.context != second.context {
                    return Err(Error::InvalidPrompt("clauses must share one context"));
                }
                if anchor_of(first, second).is_none() {
                    return Err(Error::InvalidPrompt(
                        "second clause must reference a noun phrase of the first",
                    ));
                }
            }
            _ => return Err(Error::InvalidPrompt("a prompt has one or two clauses")),
        }
        Ok(Self { clauses })
    }

    pub fn simple(clause: RelationQuadruple) -> Self {
        Self {
            clauses: alloc::vec![clause],
        }
    }

    pub fn complex(first: RelationQuadruple, second: RelationQuadruple) -> Result<Self> {
        Self::new(alloc::vec![first, second])
    }

    pub fn clauses(&self) -> &[RelationQuadruple] {
        &self.clauses
    }

    pub fn into_clauses(self) -> Vec<RelationQuadruple> {
        self.clauses
    }

    pub fn is_simple(&self) -> bool {
        self.clauses.len() == 1
    }

    pub fn context(&self) -> Option<&str> {
        self.clauses[0].context()
    }

    /// The noun phrase the second clause refers back to.
    pub fn anchor(&self) -> Option<&str> {
        match self.clauses.as_slice() {
            [first, second] => anchor_of(first, second),
            _ => None,
        }
    }
}

/// First phrase of `first` (objects before subject) that `second` mentions.
fn anchor_of<'a>(first: &'a RelationQuadruple, second: &RelationQuadruple) -> Option<&'a str> {
    first
        .objects
        .iter()
        .chain(core::iter::once(first.subject.as_str()))
        .find(|p| second.phrases().any(|q| q == *p))
}
