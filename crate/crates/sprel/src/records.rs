//! Evaluation records and extracted-relation lines.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sprel_core::eval::EvalRecord;
use sprel_core::extract::{RelationInstance, Scene};
use sprel_core::prompt::{parse_prompt, render_prompt, PhraseLexicon, RelationQuadruple};
use sprel_core::RelationKind;

use crate::error::from_json;
use crate::scene::SceneWire;
use crate::{Error, Result};

/// `{"id", "prompt": text, "scene": {...}}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvalRecordWire {
    pub id: String,
    pub prompt: String,
    pub scene: SceneWire,
}

impl EvalRecordWire {
    pub fn from_record(record: &EvalRecord, lex: &PhraseLexicon) -> Result<Self> {
        Ok(Self {
            id: record.id.clone(),
            prompt: render_prompt(&record.prompt, lex)?,
            scene: SceneWire::from_scene(&record.scene),
        })
    }
}

/// Parses one line of an evaluation-records file.
pub fn load_record(
    text: &str,
    line: usize,
    base_dir: &Path,
    lex: &PhraseLexicon,
) -> Result<EvalRecord> {
    let wire: EvalRecordWire = from_json(text, line)?;
    let prompt = parse_prompt(&wire.prompt, lex).map_err(|e| Error::format(line, "prompt", e))?;
    let scene = wire.scene.into_scene(line, "scene.", base_dir)?;
    Ok(EvalRecord {
        id: wire.id,
        prompt,
        scene,
    })
}

/// One extracted relation, with indices into the scene's object list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationWire {
    pub image_id: String,
    pub subject: usize,
    pub subject_label: String,
    pub kind: String,
    pub objects: Vec<usize>,
    pub object_labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
}

impl RelationWire {
    pub fn new(scene: &Scene, r: &RelationInstance) -> Self {
        let label = |i: usize| scene.objects()[i].label().to_owned();
        let objects: Vec<usize> = r.objects.indices().collect();
        Self {
            image_id: scene.image_id().to_owned(),
            subject: r.subject,
            subject_label: label(r.subject),
            kind: r.kind.as_str().to_owned(),
            object_labels: objects.iter().map(|&i| label(i)).collect(),
            objects,
            context: r.context.clone(),
        }
    }
}

/// The label-level quadruple behind a scene relation.
pub fn quadruple(scene: &Scene, r: &RelationInstance) -> Result<RelationQuadruple> {
    let label = |i: usize| scene.objects()[i].label();
    let ctx = r.context.as_deref();
    let mut objects = r.objects.indices();
    let first = objects.next().map(label).unwrap_or_default();
    Ok(match (r.kind, objects.next()) {
        (RelationKind::Between, Some(second)) => {
            RelationQuadruple::between(label(r.subject), first, label(second), ctx)?
        }
        (kind, _) => RelationQuadruple::pairwise(label(r.subject), kind, first, ctx)?,
    })
}
