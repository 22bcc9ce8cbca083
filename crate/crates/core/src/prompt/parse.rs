use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{singularize, PhraseLexicon, PromptSpec, RelationQuadruple};
use crate::geometry::RelationKind;
use crate::{Error, Result};

const ARTICLES: [&str; 3] = ["a", "an", "the"];

#[derive(Debug)]
struct Token {
    text: String,
    /// Character offset in the input.
    pos: usize,
}

fn tokenize(input: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut cur = String::new();
    let mut start = 0;
    let flush = |cur: &mut String, start: usize, tokens: &mut Vec<Token>| {
        if !cur.is_empty() {
            tokens.push(Token {
                text: core::mem::take(cur),
                pos: start,
            });
        }
    };
    for (i, c) in input.chars().enumerate() {
        if c.is_whitespace() {
            flush(&mut cur, start, &mut tokens);
        } else if c == ',' {
            flush(&mut cur, start, &mut tokens);
            tokens.push(Token {
                text: ",".to_string(),
                pos: i,
            });
        } else {
            if cur.is_empty() {
                start = i;
            }
            cur.extend(c.to_lowercase());
        }
    }
    flush(&mut cur, start, &mut tokens);
    if let Some(last) = tokens.last_mut() {
        if last.text.len() > 1 && last.text.ends_with('.') {
            last.text.pop();
        } else if last.text == "." {
            tokens.pop();
        }
    }
    tokens
}

fn err(pos: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        position: pos,
        reason: reason.into(),
    }
}

fn join(tokens: &[Token]) -> String {
    let mut s = String::new();
    for t in tokens {
        if !s.is_empty() {
            s.push(' ');
        }
        s.push_str(&t.text);
    }
    s
}

fn is_article(t: &Token) -> bool {
    ARTICLES.contains(&t.text.as_str())
}

/// Parses prompt text back into a [`PromptSpec`].
///
/// Matching is case-insensitive and accepts every lexicon variant. The
/// second clause may mark the shared phrase with "the" or with "a"/"an";
/// `between two Xs` yields identical flanks.
pub fn parse_prompt(text: &str, lex: &PhraseLexicon) -> Result<PromptSpec> {
    let tokens = tokenize(text);
    if tokens.is_empty() {
        return Err(err(0, "empty prompt"));
    }

    // trailing "in a <context>" candidates, rightmost first
    let mut first_err = None;
    for i in (1..tokens.len().saturating_sub(2)).rev() {
        if tokens[i].text == "in"
            && is_article(&tokens[i + 1])
            && tokens[i + 2..].iter().all(|t| t.text != ",")
        {
            let ctx = join(&tokens[i + 2..]);
            match parse_body(&tokens[..i], lex, Some(&ctx)) {
                Ok(spec) => return Ok(spec),
                Err(e) => {
                    first_err.get_or_insert(e);
                }
            }
        }
    }
    match parse_body(&tokens, lex, None) {
        Ok(spec) => Ok(spec),
        Err(e) => Err(first_err.unwrap_or(e)),
    }
}

fn parse_body(tokens: &[Token], lex: &PhraseLexicon, ctx: Option<&str>) -> Result<PromptSpec> {
    let segments: Vec<&[Token]> = tokens.split(|t| t.text == ",").collect();
    if segments.len() > 2 {
        let pos = tokens
            .iter()
            .filter(|t| t.text == ",")
            .nth(1)
            .map_or(0, |t| t.pos);
        return Err(err(pos, "a prompt has at most two clauses"));
    }
    let mut clauses = Vec::with_capacity(segments.len());
    for (i, seg) in segments.iter().enumerate() {
        let pos = seg.first().map_or_else(
            || {
                tokens
                    .iter()
                    .filter(|t| t.text == ",")
                    .nth(i.saturating_sub(1))
                    .map_or(0, |t| t.pos)
            },
            |t| t.pos,
        );
        clauses.push(parse_clause(seg, pos, lex, ctx)?);
    }
    let second_pos = segments.get(1).and_then(|s| s.first()).map_or(0, |t| t.pos);
    PromptSpec::new(clauses).map_err(|e| match e {
        Error::InvalidPrompt(reason) => err(second_pos, reason),
        other => other,
    })
}

fn parse_clause(
    seg: &[Token],
    pos: usize,
    lex: &PhraseLexicon,
    ctx: Option<&str>,
) -> Result<RelationQuadruple> {
    let Some(first) = seg.first() else {
        return Err(err(pos, "empty clause"));
    };
    if !is_article(first) {
        return Err(err(
            first.pos,
            format!("expected an article, found `{}`", first.text),
        ));
    }
    let words: Vec<&str> = seg.iter().map(|t| t.text.as_str()).collect();
    let mut last_err = None;
    for p in 2..seg.len() {
        let Some((kind, len)) = lex.match_at(&words[p..]) else {
            continue;
        };
        let subject = join(&seg[1..p]);
        let rest = &seg[p + len..];
        if kind == RelationKind::Between {
            match parse_flanks(rest, seg[p].pos) {
                Ok((a, b)) => return RelationQuadruple::between(&subject, &a, &b, ctx),
                Err(e) => {
                    last_err = Some(e);
                    continue;
                }
            }
        }
        if rest.len() >= 2 && is_article(&rest[0]) {
            return RelationQuadruple::pairwise(&subject, kind, &join(&rest[1..]), ctx);
        }
        last_err.get_or_insert_with(|| err(seg[p].pos, "expected an article after the relation"));
    }
    Err(last_err.unwrap_or_else(|| err(first.pos, "no relation phrase found")))
}

fn parse_flanks(rest: &[Token], pos: usize) -> Result<(String, String)> {
    match rest.first() {
        Some(t) if t.text == "two" && rest.len() >= 2 => {
            let one = singularize(&join(&rest[1..]));
            Ok((one.clone(), one))
        }
        Some(t) if is_article(t) => {
            for k in 2..rest.len().saturating_sub(2) {
                if rest[k].text == "and" && is_article(&rest[k + 1]) {
                    return Ok((join(&rest[1..k]), join(&rest[k + 2..])));
                }
            }
            Err(err(pos, "expected `between <a> and <b>`"))
        }
        _ => Err(err(
            pos,
            "expected `between <a> and <b>` or `between two <objects>`",
        )),
    }
}
