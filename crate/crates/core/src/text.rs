use alloc::string::String;

/// Lowercases, trims and collapses internal whitespace.
///
/// Labels and noun phrases are compared by exact equality after this.
pub fn normalize_label(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len());
    for word in raw.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.extend(word.chars().flat_map(char::to_lowercase));
    }
    out
}
