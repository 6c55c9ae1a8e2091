//! Canonical labeling of configurations by partition refinement with
//! backtracking over the point-line incidence structure, and the
//! signatures built on top of it.

use crate::error::Result;
use crate::free_graphs::maximum_free_graphs;
use crate::hyperplanes::enumerate_hyperplanes;
use crate::incidence::{validate_psts, Configuration};
use crate::label::PointLabel;

/// Isomorphism-invariant counts attached to a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureSummary {
    pub points: usize,
    pub lines: usize,
    pub rank: Option<u32>,
    pub hyperplane_count: usize,
    /// Size and number of the largest freely contained complete graphs.
    pub free_graph_size: usize,
    pub free_graph_count: usize,
}

/// A canonical certificate of the incidence structure, together with a
/// summary of invariants. Equal certificates mean isomorphic
/// configurations, independently of the input labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometrySignature {
    certificate: Vec<u8>,
    summary: SignatureSummary,
}

impl GeometrySignature {
    pub fn certificate(&self) -> &[u8] {
        &self.certificate
    }

    pub fn summary(&self) -> &SignatureSummary {
        &self.summary
    }

    pub fn certificate_hex(&self) -> String {
        self.certificate.iter().map(|b| format!("{b:02x}")).collect()
    }
}

struct Canon<'a> {
    points: usize,
    lines: &'a [[u32; 3]],
    lines_through: Vec<Vec<u32>>,
    best: Option<Vec<[u32; 3]>>,
}

impl<'a> Canon<'a> {
    fn new(points: usize, lines: &'a [[u32; 3]]) -> Self {
        let mut lines_through = vec![Vec::new(); points];
        for (k, t) in lines.iter().enumerate() {
            for &p in t {
                lines_through[p as usize].push(k as u32);
            }
        }
        Canon {
            points,
            lines,
            lines_through,
            best: None,
        }
    }

    /// Refines point colors to a fixpoint: line colors from the colors of
    /// their points, point colors from the multiset of their line colors.
    fn refine(&self, colors: &mut [u32]) {
        let mut classes = colors.iter().collect::<std::collections::BTreeSet<_>>().len();
        loop {
            let mut line_sigs: Vec<([u32; 3], u32)> = self
                .lines
                .iter()
                .enumerate()
                .map(|(k, t)| {
                    let mut sig = [
                        colors[t[0] as usize],
                        colors[t[1] as usize],
                        colors[t[2] as usize],
                    ];
                    sig.sort_unstable();
                    (sig, k as u32)
                })
                .collect();
            line_sigs.sort_unstable();
            let mut line_color = vec![0u32; self.lines.len()];
            let mut next = 0u32;
            for w in 0..line_sigs.len() {
                if w > 0 && line_sigs[w].0 != line_sigs[w - 1].0 {
                    next += 1;
                }
                line_color[line_sigs[w].1 as usize] = next;
            }

            let mut point_sigs: Vec<((u32, Vec<u32>), u32)> = (0..self.points)
                .map(|p| {
                    let mut through: Vec<u32> = self.lines_through[p]
                        .iter()
                        .map(|&k| line_color[k as usize])
                        .collect();
                    through.sort_unstable();
                    ((colors[p], through), p as u32)
                })
                .collect();
            point_sigs.sort();
            let mut next = 0u32;
            let mut fresh = vec![0u32; self.points];
            for w in 0..point_sigs.len() {
                if w > 0 && point_sigs[w].0 != point_sigs[w - 1].0 {
                    next += 1;
                }
                fresh[point_sigs[w].1 as usize] = next;
            }
            let new_classes = next as usize + 1;
            colors.copy_from_slice(&fresh);
            if new_classes == classes {
                return;
            }
            classes = new_classes;
        }
    }

    fn search(&mut self, mut colors: Vec<u32>) {
        self.refine(&mut colors);
        // find the first smallest non-singleton cell by color value
        let mut cell_sizes = vec![0usize; self.points.max(1)];
        for &c in &colors {
            cell_sizes[c as usize] += 1;
        }
        let target = (0..self.points)
            .filter(|&c| cell_sizes[c] > 1)
            .min_by_key(|&c| (cell_sizes[c], c));
        match target {
            None => {
                let mut mapped: Vec<[u32; 3]> = self
                    .lines
                    .iter()
                    .map(|t| {
                        let mut m = [
                            colors[t[0] as usize],
                            colors[t[1] as usize],
                            colors[t[2] as usize],
                        ];
                        m.sort_unstable();
                        m
                    })
                    .collect();
                mapped.sort_unstable();
                if self.best.as_ref().map(|b| mapped < *b).unwrap_or(true) {
                    self.best = Some(mapped);
                }
            }
            Some(cell) => {
                for p in 0..self.points {
                    if colors[p] != cell as u32 {
                        continue;
                    }
                    // individualize p ahead of the rest of its cell
                    let mut child: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
                    child[p] = 2 * cell as u32;
                    self.search(child);
                }
            }
        }
    }
}

fn canonical_lines(cfg: &Configuration) -> Vec<[u32; 3]> {
    let mut canon = Canon::new(cfg.points(), cfg.lines());
    canon.search(vec![0; cfg.points()]);
    canon.best.unwrap_or_default()
}

/// The canonical certificate bytes of the incidence structure alone.
pub fn raw_certificate(cfg: &Configuration) -> Vec<u8> {
    let lines = canonical_lines(cfg);
    encode_certificate(cfg.points(), &lines)
}

fn encode_certificate(points: usize, lines: &[[u32; 3]]) -> Vec<u8> {
    assert!(points <= u16::MAX as usize);
    let mut out = Vec::with_capacity(8 + lines.len() * 6);
    out.extend_from_slice(&(points as u32).to_le_bytes());
    out.extend_from_slice(&(lines.len() as u32).to_le_bytes());
    for t in lines {
        for &p in t {
            out.extend_from_slice(&(p as u16).to_le_bytes());
        }
    }
    out
}

/// Canonical certificate plus invariant summary.
pub fn canonical_form(cfg: &Configuration) -> Result<GeometrySignature> {
    let certificate = raw_certificate(cfg);
    let report = validate_psts(cfg);
    let hyperplane_count = enumerate_hyperplanes(cfg)?.len();
    let (free_graph_size, free) = maximum_free_graphs(cfg)?;
    Ok(GeometrySignature {
        certificate,
        summary: SignatureSummary {
            points: cfg.points(),
            lines: cfg.lines().len(),
            rank: report.rank,
            hyperplane_count,
            free_graph_size,
            free_graph_count: free.len(),
        },
    })
}

/// Certificate equality.
pub fn are_isomorphic(a: &Configuration, b: &Configuration) -> bool {
    if a.points() != b.points() || a.lines().len() != b.lines().len() {
        return false;
    }
    raw_certificate(a) == raw_certificate(b)
}

/// The canonically relabeled copy, with plain point names.
pub fn canonical_representative(cfg: &Configuration) -> Configuration {
    let mut lines = canonical_lines(cfg);
    lines.sort_unstable();
    let labels = (0..cfg.points())
        .map(|i| PointLabel::Atom(format!("p{i}")))
        .collect();
    Configuration::from_triples(labels, lines)
}
