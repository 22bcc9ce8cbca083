use alloc::string::String;

use crate::geometry::RelationKind;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid bounding box: {0}")]
    InvalidBox(&'static str),
    #[error("invalid depth map: {0}")]
    InvalidDepthMap(&'static str),
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("invalid scene: {0}")]
    InvalidScene(String),
    #[error("box covers no pixels of the depth map")]
    EmptyRegion,
    #[error("scene has {count} objects, triplet enumeration is capped at {cap}")]
    SceneTooLarge { count: usize, cap: usize },
    #[error("relation `{0}` has no inverse")]
    NotInvertible(RelationKind),
    #[error("relation `{0}` has no opposite side")]
    NotFlippable(RelationKind),
    #[error("phrase lexicon has no entry for `{0}`")]
    UnknownKind(RelationKind),
    #[error("invalid phrase lexicon: {0}")]
    InvalidLexicon(String),
    #[error("invalid prompt: {0}")]
    InvalidPrompt(&'static str),
    #[error("parse error at {position}: {reason}")]
    Parse { position: usize, reason: String },
    #[error("pool has {available} usable `{kind}` relations, {requested} requested")]
    InsufficientPool {
        kind: RelationKind,
        requested: usize,
        available: usize,
    },
    #[error("no accuracy available for `{0}`")]
    MissingRelation(RelationKind),
    #[error("no samples to score")]
    NoSamples,
    #[error("accuracy {0} outside [0, 1]")]
    InvalidAccuracy(f64),
}
