//! TOML configuration. Every key is optional; command-line flags win.
//!
//! ```toml
//! tau = 3.0
//! min_rel_area = 0.01
//! max_center_dist = 0.5
//! min_score = 0.3
//! ambiguity_policy = "drop_pair"   # or "keep_all"
//! emit_next_when_directional = true
//! triplet_cap = 100
//! between_sides = "either"         # or "ordered"
//! seed = 0
//! lexicon = "phrases.json"
//! ```

use std::path::PathBuf;

use serde::Deserialize;
use sprel_core::extract::{AmbiguityPolicy, BetweenSides, ExtractionConfig};
use sprel_core::Strictness;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolicyName {
    DropPair,
    KeepAll,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SidesName {
    Either,
    Ordered,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub tau: Option<f64>,
    pub min_rel_area: Option<f64>,
    pub max_center_dist: Option<f64>,
    pub min_score: Option<f64>,
    pub ambiguity_policy: Option<PolicyName>,
    pub emit_next_when_directional: Option<bool>,
    pub triplet_cap: Option<usize>,
    pub between_sides: Option<SidesName>,
    pub seed: Option<u64>,
    pub lexicon: Option<PathBuf>,
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::format(0, "config", e.message()))
    }

    /// Extraction settings from the file over the defaults.
    pub fn extraction(&self) -> Result<ExtractionConfig> {
        let mut cfg = ExtractionConfig::default();
        if let Some(t) = self.tau {
            cfg.tau = Strictness::new(t)?;
        }
        if let Some(v) = self.min_rel_area {
            cfg.min_rel_area = v;
        }
        if let Some(v) = self.max_center_dist {
            cfg.max_center_dist = v;
        }
        if let Some(v) = self.min_score {
            cfg.min_score = v;
        }
        if let Some(p) = self.ambiguity_policy {
            cfg.ambiguity_policy = match p {
                PolicyName::DropPair => AmbiguityPolicy::DropPair,
                PolicyName::KeepAll => AmbiguityPolicy::KeepAll,
            };
        }
        if let Some(v) = self.emit_next_when_directional {
            cfg.emit_next_when_directional = v;
        }
        if let Some(v) = self.triplet_cap {
            cfg.triplet_cap = v;
        }
        if let Some(s) = self.between_sides {
            cfg.between_sides = match s {
                SidesName::Either => BetweenSides::Either,
                SidesName::Ordered => BetweenSides::Ordered,
            };
        }
        cfg.validate()?;
        Ok(cfg)
    }
}
