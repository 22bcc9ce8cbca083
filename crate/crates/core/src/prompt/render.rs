use alloc::format;
use alloc::string::String;

use super::{pluralize, ObjectPhrases, PhraseLexicon, PromptSpec, RelationQuadruple};
use crate::Result;

/// "an" before a vowel letter, "a" otherwise.
pub(crate) fn article(phrase: &str) -> &'static str {
    match phrase.chars().next() {
        Some('a' | 'e' | 'i' | 'o' | 'u') => "an",
        _ => "a",
    }
}

/// Renders the prompt text.
///
/// `A|An {subject} {phrase} a|an {object}[, a {subject} {phrase} the {anchor}] in a {context}`
pub fn render_prompt(spec: &PromptSpec, lex: &PhraseLexicon) -> Result<String> {
    let mut out = String::new();
    let anchor = spec.anchor();
    for (i, clause) in spec.clauses().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let anchor = if i > 0 { anchor } else { None };
        render_clause(&mut out, clause, lex, i == 0, anchor)?;
    }
    if let Some(ctx) = spec.context() {
        out.push_str(&format!(" in {} {ctx}", article(ctx)));
    }
    Ok(out)
}

fn render_clause(
    out: &mut String,
    q: &RelationQuadruple,
    lex: &PhraseLexicon,
    capitalize: bool,
    anchor: Option<&str>,
) -> Result<()> {
    let phrase = lex.canonical(q.kind())?;
    let twin_flanks = matches!(q.objects(), ObjectPhrases::Two(a, b) if a == b);

    // the anaphoric "the" goes on the first object slot naming the anchor,
    // falling back to the subject
    let mut the_slot = None;
    if let Some(anchor) = anchor {
        if !twin_flanks {
            the_slot = q.objects().iter().position(|o| o == anchor).map(|i| i + 1);
        }
        if the_slot.is_none() && q.subject() == anchor {
            the_slot = Some(0);
        }
    }
    let det = |slot: usize, p: &str| -> &'static str {
        if the_slot == Some(slot) {
            "the"
        } else {
            article(p)
        }
    };

    let subj_det = det(0, q.subject());
    if capitalize {
        let mut c = subj_det.chars();
        if let Some(first) = c.next() {
            out.extend(first.to_uppercase());
            out.push_str(c.as_str());
        }
    } else {
        out.push_str(subj_det);
    }
    out.push(' ');
    out.push_str(q.subject());
    out.push(' ');
    out.push_str(phrase);
    match q.objects() {
        ObjectPhrases::One(o) => {
            out.push_str(&format!(" {} {o}", det(1, o)));
        }
        ObjectPhrases::Two(a, _) if twin_flanks => {
            out.push_str(&format!(" two {}", pluralize(a)));
        }
        ObjectPhrases::Two(a, b) => {
            out.push_str(&format!(" {} {a} and {} {b}", det(1, a), det(2, b)));
        }
    }
    Ok(())
}
