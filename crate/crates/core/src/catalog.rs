//! The named catalog of the ten 10_3 configurations, with line-set
//! fixtures and expected invariants recomputed at load time.

use crate::document::{parse_document_full, ConfigurationDocument};
use crate::error::{Error, Result};
use crate::free_graphs::find_free_complete_graphs;
use crate::hyperplanes::{label_summary, labeled_veldkamp};
use crate::incidence::Configuration;

/// Invariants a catalog entry is expected to reproduce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogExpectations {
    pub hyperplane_count: usize,
    pub veblen_count: usize,
    pub free_k4_count: usize,
    pub labeled_veldkamp_summary: &'static str,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub document: ConfigurationDocument,
    pub configuration: Configuration,
    pub expected: CatalogExpectations,
}

const FIXTURES: [(&str, CatalogExpectations, &str); 10] = [
    (
        "desargues",
        CatalogExpectations {
            hyperplane_count: 15,
            veblen_count: 5,
            free_k4_count: 5,
            labeled_veldkamp_summary: "B(2,0)+B(3,0) x10; B(4,0) x5",
        },
        include_str!("../fixtures/103/desargues.json"),
    ),
    (
        "kantor",
        CatalogExpectations {
            hyperplane_count: 7,
            veblen_count: 3,
            free_k4_count: 3,
            labeled_veldkamp_summary: "B(2,0)+B(3,0) x4; B(4,0) x3",
        },
        include_str!("../fixtures/103/kantor.json"),
    ),
    (
        "nightcap",
        CatalogExpectations {
            hyperplane_count: 7,
            veblen_count: 1,
            free_k4_count: 1,
            labeled_veldkamp_summary: "B(2,0)+B(3,0) x6; B(4,0) x1",
        },
        include_str!("../fixtures/103/nightcap.json"),
    ),
    (
        "fez",
        CatalogExpectations {
            hyperplane_count: 3,
            veblen_count: 2,
            free_k4_count: 2,
            labeled_veldkamp_summary: "B(2,0)+B(3,0) x1; B(4,0) x2",
        },
        include_str!("../fixtures/103/fez.json"),
    ),
    (
        "headdress",
        CatalogExpectations {
            hyperplane_count: 3,
            veblen_count: 1,
            free_k4_count: 1,
            labeled_veldkamp_summary: "B(2,0)+B(3,0) x2; B(4,0) x1",
        },
        include_str!("../fixtures/103/headdress.json"),
    ),
    (
        "basinet",
        CatalogExpectations {
            hyperplane_count: 1,
            veblen_count: 1,
            free_k4_count: 1,
            labeled_veldkamp_summary: "B(4,0) x1",
        },
        include_str!("../fixtures/103/basinet.json"),
    ),
    (
        "overseas-cap",
        CatalogExpectations {
            hyperplane_count: 1,
            veblen_count: 0,
            free_k4_count: 0,
            labeled_veldkamp_summary: "B(2,0)+B(3,0) x1",
        },
        include_str!("../fixtures/103/overseas-cap.json"),
    ),
    (
        "hyperplane-free-1",
        CatalogExpectations {
            hyperplane_count: 0,
            veblen_count: 0,
            free_k4_count: 0,
            labeled_veldkamp_summary: "empty",
        },
        include_str!("../fixtures/103/hyperplane-free-1.json"),
    ),
    (
        "hyperplane-free-2",
        CatalogExpectations {
            hyperplane_count: 0,
            veblen_count: 0,
            free_k4_count: 0,
            labeled_veldkamp_summary: "empty",
        },
        include_str!("../fixtures/103/hyperplane-free-2.json"),
    ),
    (
        "hyperplane-free-3",
        CatalogExpectations {
            hyperplane_count: 0,
            veblen_count: 0,
            free_k4_count: 0,
            labeled_veldkamp_summary: "empty",
        },
        include_str!("../fixtures/103/hyperplane-free-3.json"),
    ),
];

/// Recomputes the expected invariants of an entry and reports the first
/// mismatch.
pub fn verify_entry(
    name: &str,
    cfg: &Configuration,
    expected: &CatalogExpectations,
) -> Result<()> {
    let (vs, labels) = labeled_veldkamp(cfg)?;
    let mismatch = |what: &str, got: String, want: String| {
        Err(Error::FixtureMismatch(format!(
            "{name}: {what}: recomputed {got}, stored {want}"
        )))
    };
    if vs.hyperplanes.len() != expected.hyperplane_count {
        return mismatch(
            "hyperplane count",
            vs.hyperplanes.len().to_string(),
            expected.hyperplane_count.to_string(),
        );
    }
    let veblen = labels.iter().filter(|g| g.label == "B(4,0)").count();
    if veblen != expected.veblen_count {
        return mismatch(
            "veblen count",
            veblen.to_string(),
            expected.veblen_count.to_string(),
        );
    }
    let free_k4 = find_free_complete_graphs(cfg, 4)?.len();
    if free_k4 != expected.free_k4_count {
        return mismatch(
            "free K4 count",
            free_k4.to_string(),
            expected.free_k4_count.to_string(),
        );
    }
    let summary = label_summary(&labels);
    if summary != expected.labeled_veldkamp_summary {
        return mismatch(
            "labeled veldkamp summary",
            summary,
            expected.labeled_veldkamp_summary.to_string(),
        );
    }
    Ok(())
}

/// Loads the ten named 10_3 configurations, recomputing every stored
/// invariant. A failed recomputation is a `FixtureMismatch`.
pub fn catalog_103() -> Result<Vec<CatalogEntry>> {
    let mut entries = Vec::with_capacity(FIXTURES.len());
    for (name, expected, text) in FIXTURES {
        let (document, configuration) = parse_document_full(text)?;
        if document.name != name {
            return Err(Error::FixtureMismatch(format!(
                "fixture name {} does not match entry {name}",
                document.name
            )));
        }
        verify_entry(name, &configuration, &expected)?;
        entries.push(CatalogEntry {
            name,
            document,
            configuration,
            expected,
        });
    }
    Ok(entries)
}

/// The catalog entry with the given name.
pub fn catalog_entry(name: &str) -> Result<CatalogEntry> {
    catalog_103()?
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::FixtureMismatch(format!("no catalog entry named {name}")))
}
