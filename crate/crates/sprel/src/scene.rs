//! Detection records: one scene per JSON line.
//!
//! `{"image_id", "width", "height", "objects": [{"label", "box": [x_min, y_min, x_max, y_max], "score"}],
//! "depth": optional PGM path or inline row-major 2D array, "context": optional}`

use std::path::Path;

use serde::{Deserialize, Serialize};
use sprel_core::extract::{DetectedObject, Scene};
use sprel_core::{BoundingBox, DepthMap};

use crate::error::from_json;
use crate::{pgm, Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectWire {
    pub label: String,
    #[serde(rename = "box")]
    pub bbox: [f64; 4],
    pub score: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DepthWire {
    Path(String),
    Grid(Vec<Vec<f64>>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneWire {
    pub image_id: String,
    pub width: u32,
    pub height: u32,
    pub objects: Vec<ObjectWire>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<DepthWire>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
}

impl SceneWire {
    /// Wire form of a scene, with any depth map inlined.
    pub fn from_scene(scene: &Scene) -> Self {
        let depth = scene
            .depth()
            .map(|d| DepthWire::Grid(d.values().chunks(d.width()).map(<[f64]>::to_vec).collect()));
        Self {
            image_id: scene.image_id().to_owned(),
            width: scene.width(),
            height: scene.height(),
            objects: scene
                .objects()
                .iter()
                .map(|o| ObjectWire {
                    label: o.label().to_owned(),
                    bbox: o.bbox().to_array(),
                    score: o.score(),
                })
                .collect(),
            depth,
            context: scene.context().map(str::to_owned),
        }
    }

    /// Validates into a [`Scene`]. Depth paths resolve against `base_dir`.
    /// `line` and `prefix` locate errors in the source file.
    pub fn into_scene(self, line: usize, prefix: &str, base_dir: &Path) -> Result<Scene> {
        let field = |f: &str| format!("{prefix}{f}");
        if self.width == 0 || self.height == 0 {
            return Err(Error::format(
                line,
                field("width"),
                "image dimensions must be positive",
            ));
        }
        let objects = self
            .objects
            .iter()
            .enumerate()
            .map(|(i, o)| {
                let bbox = BoundingBox::from_array(o.bbox)
                    .map_err(|e| Error::format(line, field(&format!("objects[{i}].box")), e))?;
                DetectedObject::new(&o.label, bbox, o.score)
                    .map_err(|e| Error::format(line, field(&format!("objects[{i}]")), e))
            })
            .collect::<Result<Vec<_>>>()?;
        let depth = match self.depth {
            None => None,
            Some(wire) => Some(load_depth(wire, line, &field("depth"), base_dir)?),
        };
        if let Some(d) = &depth {
            if d.width() != self.width as usize || d.height() != self.height as usize {
                return Err(Error::DimensionMismatch {
                    line,
                    width: self.width,
                    height: self.height,
                    found_width: d.width(),
                    found_height: d.height(),
                });
            }
        }
        Scene::new(
            self.image_id,
            self.width,
            self.height,
            objects,
            depth,
            self.context.as_deref(),
        )
        .map_err(|e| Error::format(line, field("objects"), e))
    }
}

fn load_depth(wire: DepthWire, line: usize, field: &str, base_dir: &Path) -> Result<DepthMap> {
    let fail = |e: &dyn std::fmt::Display| Error::format(line, field, e);
    match wire {
        DepthWire::Path(p) => {
            let bytes = std::fs::read(base_dir.join(&p)).map_err(|e| fail(&format!("{p}: {e}")))?;
            pgm::decode(&bytes).map_err(|e| fail(&format!("{p}: {e}")))
        }
        DepthWire::Grid(rows) => {
            let width = rows.first().map_or(0, Vec::len);
            if rows.iter().any(|r| r.len() != width) {
                return Err(fail(&"rows differ in length"));
            }
            let height = rows.len();
            DepthMap::new(width, height, rows.into_iter().flatten().collect()).map_err(|e| fail(&e))
        }
    }
}

/// Parses one line of a detections file.
pub fn load_scene(text: &str, line: usize, base_dir: &Path) -> Result<Scene> {
    from_json::<SceneWire>(text, line)?.into_scene(line, "", base_dir)
}
