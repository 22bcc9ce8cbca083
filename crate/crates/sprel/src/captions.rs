//! Caption filtering by whole-word lexicon matches.

use serde::{Deserialize, Serialize};

/// `{"id", "caption", "image"}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaptionRecord {
    pub id: String,
    pub caption: String,
    /// URL or path.
    pub image: String,
}

/// Urban object and context phrases, stored as folded word sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectLexicon {
    objects: Vec<Vec<String>>,
    contexts: Vec<Vec<String>>,
}

/// ASCII-folded, lowercased alphanumeric words.
pub fn words(text: &str) -> Vec<String> {
    deunicode::deunicode(text)
        .to_lowercase()
        .split(|c: char| !c.is_ascii_alphanumeric())
        .filter(|w| !w.is_empty())
        .map(str::to_owned)
        .collect()
}

impl ObjectLexicon {
    /// `None` when either list is empty after normalization.
    pub fn new<S: AsRef<str>>(objects: &[S], contexts: &[S]) -> Option<Self> {
        let fold = |list: &[S]| -> Vec<Vec<String>> {
            list.iter()
                .map(|p| words(p.as_ref()))
                .filter(|w| !w.is_empty())
                .collect()
        };
        let (objects, contexts) = (fold(objects), fold(contexts));
        (!objects.is_empty() && !contexts.is_empty()).then_some(Self { objects, contexts })
    }

    pub fn urban() -> Self {
        Self::new(
            sprel_core::prompt::URBAN_OBJECTS,
            &sprel_core::prompt::URBAN_CONTEXTS,
        )
        .expect("built-in lists are non-empty")
    }

    /// Whether the caption names at least one object and one context.
    pub fn matches(&self, caption: &str) -> bool {
        let w = words(caption);
        let any = |phrases: &[Vec<String>]| {
            phrases
                .iter()
                .any(|p| w.windows(p.len()).any(|win| win == p.as_slice()))
        };
        any(&self.objects) && any(&self.contexts)
    }
}

/// Keeps matching records, in input order.
pub fn filter_captions<'a>(
    records: impl IntoIterator<Item = &'a CaptionRecord>,
    lex: &'a ObjectLexicon,
) -> impl Iterator<Item = &'a CaptionRecord> {
    records.into_iter().filter(|r| lex.matches(&r.caption))
}
