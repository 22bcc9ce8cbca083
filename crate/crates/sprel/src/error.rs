use std::io;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed input. `line` is 1-based; 0 for whole-file documents.
    #[error("line {line}: `{field}`: {reason}")]
    Format {
        line: usize,
        field: String,
        reason: String,
    },
    #[error("line {line}: depth map is {found_width}x{found_height}, image is {width}x{height}")]
    DimensionMismatch {
        line: usize,
        width: u32,
        height: u32,
        found_width: usize,
        found_height: usize,
    },
    #[error("invalid PGM: {0}")]
    Pgm(String),
    #[error(transparent)]
    Core(#[from] sprel_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn format(line: usize, field: impl Into<String>, reason: impl ToString) -> Self {
        Error::Format {
            line,
            field: field.into(),
            reason: reason.to_string(),
        }
    }
}

/// Deserializes one JSON document, reporting the path of the offending field.
pub(crate) fn from_json<T: serde::de::DeserializeOwned>(text: &str, line: usize) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let field = if path == "." { String::new() } else { path };
        Error::format(line, field, e.into_inner())
    })
}
