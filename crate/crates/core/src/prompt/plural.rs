//! English plurals for the "between two Xs" form. Only the last word of a
//! phrase is inflected.

use alloc::format;
use alloc::string::String;

const IRREGULAR: &[(&str, &str)] = &[
    ("person", "people"),
    ("man", "men"),
    ("woman", "women"),
    ("child", "children"),
    ("foot", "feet"),
    ("mouse", "mice"),
    ("goose", "geese"),
    ("bus", "buses"),
    ("gas", "gases"),
    ("leaf", "leaves"),
    ("shelf", "shelves"),
    ("knife", "knives"),
    ("wolf", "wolves"),
    ("sheep", "sheep"),
    ("fish", "fish"),
    ("deer", "deer"),
    ("tie", "ties"),
    ("pie", "pies"),
];

fn split_last(phrase: &str) -> (&str, &str) {
    match phrase.rfind(' ') {
        Some(i) => (&phrase[..=i], &phrase[i + 1..]),
        None => ("", phrase),
    }
}

fn is_vowel(c: u8) -> bool {
    matches!(c, b'a' | b'e' | b'i' | b'o' | b'u')
}

pub fn pluralize(phrase: &str) -> String {
    let (head, word) = split_last(phrase);
    if let Some((_, p)) = IRREGULAR.iter().find(|(s, _)| *s == word) {
        return format!("{head}{p}");
    }
    let b = word.as_bytes();
    let tail = if ["s", "x", "z", "ch", "sh"]
        .iter()
        .any(|e| word.ends_with(e))
    {
        format!("{word}es")
    } else if b.len() >= 2 && b[b.len() - 1] == b'y' && !is_vowel(b[b.len() - 2]) {
        format!("{}ies", &word[..word.len() - 1])
    } else {
        format!("{word}s")
    };
    format!("{head}{tail}")
}

/// Inverse of [`pluralize`].
pub fn singularize(phrase: &str) -> String {
    let (head, word) = split_last(phrase);
    if let Some((s, _)) = IRREGULAR.iter().find(|(_, p)| *p == word) {
        return format!("{head}{s}");
    }
    let stem = if let Some(s) = word.strip_suffix("ies") {
        format!("{s}y")
    } else if ["sses", "xes", "zes", "ches", "shes"]
        .iter()
        .any(|e| word.ends_with(e))
    {
        String::from(&word[..word.len() - 2])
    } else if let Some(s) = word.strip_suffix('s') {
        String::from(s)
    } else {
        String::from(word)
    };
    format!("{head}{stem}")
}
