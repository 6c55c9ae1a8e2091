//! The configuration document format: line-oriented JSON with sorted
//! keys, so that fixtures and goldens diff cleanly. Serialization is
//! canonical: parse ∘ serialize is the identity on serialized bytes.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::incidence::Configuration;
use crate::label::PointLabel;

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocumentMeta {
    #[serde(default)]
    pub family: Option<String>,
    #[serde(default)]
    pub parameters: Option<BTreeMap<String, i64>>,
    #[serde(default)]
    pub provenance: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocumentPoint {
    pub id: u32,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigurationDocument {
    #[serde(default)]
    pub lines: Vec<[u32; 3]>,
    #[serde(default)]
    pub meta: Option<DocumentMeta>,
    pub name: String,
    #[serde(default)]
    pub points: Vec<DocumentPoint>,
}

impl ConfigurationDocument {
    pub fn from_configuration(name: &str, cfg: &Configuration) -> Self {
        ConfigurationDocument {
            lines: cfg.lines().to_vec(),
            meta: None,
            name: name.to_string(),
            points: cfg
                .labels()
                .iter()
                .enumerate()
                .map(|(id, l)| DocumentPoint {
                    id: id as u32,
                    label: l.to_string(),
                })
                .collect(),
        }
    }

    pub fn with_meta(mut self, meta: DocumentMeta) -> Self {
        self.meta = Some(meta);
        self
    }

    /// Builds the validated configuration the document describes.
    pub fn to_configuration(&self) -> Result<Configuration> {
        for (k, p) in self.points.iter().enumerate() {
            if p.id as usize != k {
                return Err(Error::ValidationFailed(format!(
                    "point ids must be dense from 0: found id {} at position {k}",
                    p.id
                )));
            }
        }
        let labels: Vec<PointLabel> = self
            .points
            .iter()
            .map(|p| PointLabel::parse(&p.label))
            .collect();
        let lines = self.lines.iter().map(|t| t.to_vec()).collect();
        Configuration::new(labels, lines)
    }
}

fn escape_json(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// Canonical serialization: top-level keys in sorted order (`lines`,
/// `meta`, `name`, `points`), one line per triple and per point.
pub fn serialize_document(doc: &ConfigurationDocument) -> String {
    let mut out = String::new();
    out.push_str("{\n");

    if doc.lines.is_empty() {
        out.push_str("  \"lines\": [],\n");
    } else {
        out.push_str("  \"lines\": [\n");
        for (k, t) in doc.lines.iter().enumerate() {
            let comma = if k + 1 < doc.lines.len() { "," } else { "" };
            out.push_str(&format!("    [{}, {}, {}]{comma}\n", t[0], t[1], t[2]));
        }
        out.push_str("  ],\n");
    }

    if let Some(meta) = &doc.meta {
        let mut fields = Vec::new();
        if let Some(family) = &meta.family {
            fields.push(format!("\"family\": \"{}\"", escape_json(family)));
        }
        if let Some(params) = &meta.parameters {
            let inner = params
                .iter()
                .map(|(k, v)| format!("\"{}\": {v}", escape_json(k)))
                .collect::<Vec<_>>()
                .join(", ");
            fields.push(format!("\"parameters\": {{{inner}}}"));
        }
        if let Some(prov) = &meta.provenance {
            fields.push(format!("\"provenance\": \"{}\"", escape_json(prov)));
        }
        out.push_str(&format!("  \"meta\": {{{}}},\n", fields.join(", ")));
    }

    out.push_str(&format!("  \"name\": \"{}\",\n", escape_json(&doc.name)));

    if doc.points.is_empty() {
        out.push_str("  \"points\": []\n");
    } else {
        out.push_str("  \"points\": [\n");
        for (k, p) in doc.points.iter().enumerate() {
            let comma = if k + 1 < doc.points.len() { "," } else { "" };
            out.push_str(&format!(
                "    {{\"id\": {}, \"label\": \"{}\"}}{comma}\n",
                p.id,
                escape_json(&p.label)
            ));
        }
        out.push_str("  ]\n");
    }
    out.push_str("}\n");
    out
}

/// Parses a document and builds its validated configuration.
pub fn parse_document(text: &str) -> Result<Configuration> {
    Ok(parse_document_full(text)?.1)
}

pub fn parse_document_full(text: &str) -> Result<(ConfigurationDocument, Configuration)> {
    let doc: ConfigurationDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let cfg = doc.to_configuration()?;
    Ok((doc, cfg))
}

/// Serializes a configuration under a name, with optional metadata.
pub fn serialize_configuration(
    name: &str,
    cfg: &Configuration,
    meta: Option<DocumentMeta>,
) -> String {
    let mut doc = ConfigurationDocument::from_configuration(name, cfg);
    doc.meta = meta;
    serialize_document(&doc)
}
