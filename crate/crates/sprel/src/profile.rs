//! Bias-profile and phrase-lexicon JSON, and newline-delimited phrase lists.
//!
//! Bias profile: `{"top_bottom": {"top": 0.41, "bottom": 0.33}, ...}`.
//! Phrase lexicon: `{"right": {"canonical": "to the right of", "variants": [...]}, ...}`.

use std::collections::BTreeMap;

use serde::Deserialize;
use sprel_core::prompt::{PhraseEntry, PhraseLexicon};
use sprel_core::tore::{BiasProfile, OppositePair, PairAccuracy};
use sprel_core::{normalize_label, RelationKind};

use crate::error::from_json;
use crate::{Error, Result};

pub fn parse_profile(text: &str) -> Result<BiasProfile> {
    let raw: BTreeMap<String, BTreeMap<String, serde_json::Value>> = from_json(text, 0)?;
    let mut profile = BiasProfile::new();
    for (name, sides) in raw {
        let pair: OppositePair = name.parse().map_err(|_| {
            Error::format(0, &name, "not one of top_bottom, left_right, front_behind")
        })?;
        let (a, b) = pair.sides();
        let get = |k: RelationKind| {
            let v = sides
                .get(k.as_str())
                .ok_or_else(|| Error::format(0, format!("{name}.{k}"), "missing side"))?;
            v.as_f64()
                .ok_or_else(|| Error::format(0, format!("{name}.{k}"), "expected a number"))
        };
        let known = [a.as_str(), b.as_str(), "preferred"];
        if let Some(extra) = sides.keys().find(|k| !known.contains(&k.as_str())) {
            return Err(Error::format(0, format!("{name}.{extra}"), "unknown side"));
        }
        let acc = PairAccuracy::new(get(a)?, get(b)?).map_err(|e| Error::format(0, &name, e))?;
        profile.set(pair, acc);
    }
    Ok(profile)
}

/// Profile JSON. Each pair also carries its `preferred` side (`null` on
/// ties), which [`parse_profile`] ignores.
pub fn profile_to_json(profile: &BiasProfile) -> serde_json::Value {
    let mut out = serde_json::Map::new();
    for (pair, acc) in profile.pairs() {
        let (a, b) = pair.sides();
        let mut sides = serde_json::Map::new();
        sides.insert(a.as_str().into(), acc.first.into());
        sides.insert(b.as_str().into(), acc.second.into());
        let pref = profile.preferred(pair).map(|k| k.as_str());
        sides.insert("preferred".into(), pref.into());
        out.insert(pair.as_str().into(), sides.into());
    }
    out.into()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryWire {
    canonical: String,
    #[serde(default)]
    variants: Vec<String>,
}

pub fn parse_lexicon(text: &str) -> Result<PhraseLexicon> {
    let raw: BTreeMap<String, EntryWire> = from_json(text, 0)?;
    let mut entries = BTreeMap::new();
    for (name, e) in raw {
        let kind: RelationKind = name
            .parse()
            .map_err(|_| Error::format(0, &name, "unknown relation kind"))?;
        entries.insert(
            kind,
            PhraseEntry {
                canonical: e.canonical,
                variants: e.variants,
            },
        );
    }
    Ok(PhraseLexicon::new(entries)?)
}

/// Normalized phrases from a newline-delimited list; blank lines and `#`
/// comments are skipped, duplicates dropped in order.
pub fn parse_phrase_list(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let p = normalize_label(line);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_round_trip() {
        let p = BiasProfile::builtin("flux1").unwrap();
        let text = profile_to_json(&p).to_string();
        assert_eq!(parse_profile(&text).unwrap(), p);
    }

    #[test]
    fn profile_errors_name_the_field() {
        match parse_profile(r#"{"top_bottom":{"top":0.4}}"#).unwrap_err() {
            Error::Format { field, .. } => assert_eq!(field, "top_bottom.bottom"),
            e => panic!("{e:?}"),
        }
        assert!(parse_profile(r#"{"up_down":{"top":0.4}}"#).is_err());
        assert!(parse_profile(r#"{"top_bottom":{"top":1.4,"bottom":0.1}}"#).is_err());
    }

    #[test]
    fn lexicon_file() {
        let lex = parse_lexicon(
            r#"{"top":{"canonical":"above"},"bottom":{"canonical":"below","variants":["under"]}}"#,
        )
        .unwrap();
        assert_eq!(lex.canonical(RelationKind::Top).unwrap(), "above");
        assert!(parse_lexicon(r#"{"up":{"canonical":"above"}}"#).is_err());
    }

    #[test]
    fn phrase_lists() {
        assert_eq!(
            parse_phrase_list("Bus\n\n# c\n bus \nfire  hydrant\n"),
            vec!["bus", "fire hydrant"]
        );
    }
}
