//! Exact hyperplane enumeration, Veldkamp-space construction, and
//! hyperplane-geometry classification.
//!
//! Enumeration is a depth-first assignment of point membership with unit
//! propagation over each line: a line of a hyperplane carries one or
//! three of its points, so any two decided points of a line force the
//! third. Branches die when a line goes fully outside. The search is
//! exact; results are sorted lexicographically.

use crate::budget::search_budget;
use crate::canon::canonical_form;
use crate::canon::GeometrySignature;
use crate::error::{Error, Result};
use crate::incidence::{
    closure, components, is_hyperplane, restrict, validate_psts, BinomialType, Configuration,
};
use crate::point_set::PointSet;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Undecided,
    In,
    Out,
}

struct Search<'a> {
    cfg: &'a Configuration,
    state: Vec<Cell>,
    trail: Vec<u32>,
    found: Vec<PointSet>,
    nodes: u64,
    budget: u64,
    branch_order: Vec<u32>,
}

impl<'a> Search<'a> {
    fn new(cfg: &'a Configuration, budget: u64) -> Self {
        let mut branch_order: Vec<u32> = (0..cfg.points() as u32).collect();
        // highest rank first, ties by index
        branch_order.sort_by_key(|&p| (std::cmp::Reverse(cfg.rank_of(p)), p));
        Search {
            cfg,
            state: vec![Cell::Undecided; cfg.points()],
            trail: Vec::new(),
            found: Vec::new(),
            nodes: 0,
            budget,
            branch_order,
        }
    }

    /// Assigns and propagates; returns false on conflict. Every forced
    /// assignment lands on the trail for undo.
    fn assign(&mut self, p: u32, value: Cell) -> Result<bool> {
        let mut queue = vec![(p, value)];
        while let Some((p, value)) = queue.pop() {
            match self.state[p as usize] {
                Cell::Undecided => {}
                decided => {
                    if decided == value {
                        continue;
                    }
                    return Ok(false);
                }
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded(self.budget));
            }
            self.state[p as usize] = value;
            self.trail.push(p);
            for &k in self.cfg.lines_through(p) {
                let t = self.cfg.lines()[k as usize];
                let mut ins = 0;
                let mut outs = 0;
                let mut open = None;
                for &q in &t {
                    match self.state[q as usize] {
                        Cell::In => ins += 1,
                        Cell::Out => outs += 1,
                        Cell::Undecided => open = Some(q),
                    }
                }
                match (ins, outs) {
                    (3, 0) | (1, 2) => {}
                    (2, 1) | (0, 3) => return Ok(false),
                    (2, 0) | (0, 2) => queue.push((open.expect("one open"), Cell::In)),
                    (1, 1) => queue.push((open.expect("one open"), Cell::Out)),
                    _ => {}
                }
            }
        }
        Ok(true)
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let p = self.trail.pop().expect("trail");
            self.state[p as usize] = Cell::Undecided;
        }
    }

    fn run(&mut self) -> Result<()> {
        let next = self
            .branch_order
            .iter()
            .copied()
            .find(|&p| self.state[p as usize] == Cell::Undecided);
        let Some(p) = next else {
            let set = PointSet::from_indices(
                self.cfg.points(),
                (0..self.cfg.points() as u32).filter(|&q| self.state[q as usize] == Cell::In),
            );
            if !set.is_full() {
                self.found.push(set);
            }
            return Ok(());
        };
        for value in [Cell::In, Cell::Out] {
            let mark = self.trail.len();
            if self.assign(p, value)? {
                self.run()?;
            }
            self.undo_to(mark);
        }
        Ok(())
    }
}

/// All hyperplanes of `cfg`, sorted lexicographically by bit vector.
pub fn enumerate_hyperplanes(cfg: &Configuration) -> Result<Vec<PointSet>> {
    enumerate_hyperplanes_with_budget(cfg, search_budget())
}

pub fn enumerate_hyperplanes_with_budget(
    cfg: &Configuration,
    budget: u64,
) -> Result<Vec<PointSet>> {
    let mut search = Search::new(cfg, budget);
    search.run()?;
    let mut found = search.found;
    found.sort();
    Ok(found)
}

/// The Veldkamp space: all hyperplanes together with the 3-point lines
/// {H₁, H₂, H₁ ⋔ H₂}, verified to satisfy the axioms of a projective
/// space of order two.
#[derive(Clone, Debug)]
pub struct VeldkampSpace {
    pub hyperplanes: Vec<PointSet>,
    pub lines: Vec<[u32; 3]>,
    pub dimension: i32,
}

pub fn veldkamp_space(cfg: &Configuration) -> Result<VeldkampSpace> {
    let hyperplanes = enumerate_hyperplanes(cfg)?;
    let count = hyperplanes.len() as u64;
    if (count + 1).count_ones() != 1 {
        return Err(Error::NotProjective(format!(
            "{count} hyperplanes, not of the form 2^(n+1) - 1"
        )));
    }
    let dimension = (count + 1).trailing_zeros() as i32 - 1;

    let index: std::collections::BTreeMap<&PointSet, u32> = hyperplanes
        .iter()
        .enumerate()
        .map(|(k, h)| (h, k as u32))
        .collect();
    let mut lines_set = std::collections::BTreeSet::new();
    for i in 0..hyperplanes.len() {
        for j in i + 1..hyperplanes.len() {
            let m = hyperplanes[i].meet(&hyperplanes[j])?;
            let Some(&k) = index.get(&m) else {
                return Err(Error::NotProjective(format!(
                    "hyperplanes {i} and {j} meet outside the family"
                )));
            };
            let mut t = [i as u32, j as u32, k];
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::NotProjective(format!(
                    "degenerate line through hyperplanes {i} and {j}"
                )));
            }
            lines_set.insert(t);
        }
    }
    let lines: Vec<[u32; 3]> = lines_set.into_iter().collect();
    let expected = count * count.saturating_sub(1) / 6;
    if lines.len() as u64 != expected {
        return Err(Error::NotProjective(format!(
            "{} lines, expected {expected}: some pair lies on two lines",
            lines.len()
        )));
    }
    Ok(VeldkampSpace {
        hyperplanes,
        lines,
        dimension,
    })
}

/// One connected component of the geometry induced on a hyperplane.
#[derive(Clone, Debug)]
pub struct GeometryComponent {
    pub points: usize,
    pub lines: usize,
    pub binomial: Option<BinomialType>,
    pub signature: GeometrySignature,
}

impl GeometryComponent {
    /// Degenerate shapes are pinned explicitly: a single point reads
    /// B(2,0), a bare line B(3,0).
    pub fn label(&self) -> String {
        match self.binomial {
            Some(b) => format!("B({},0)", b.order()),
            None => format!("({}p,{}l)", self.points, self.lines),
        }
    }
}

/// The geometry a hyperplane induces: connected components of the
/// restriction, with per-component binomial detection.
#[derive(Clone, Debug)]
pub struct HyperplaneGeometry {
    pub components: Vec<GeometryComponent>,
    pub label: String,
}

pub fn classify_hyperplane(cfg: &Configuration, h: &PointSet) -> Result<HyperplaneGeometry> {
    if !is_hyperplane(cfg, h) {
        return Err(Error::NotAHyperplane);
    }
    let (sub, _) = restrict(cfg, h);
    let mut comps = Vec::new();
    for comp in components(&sub) {
        let set = PointSet::from_indices(sub.points(), comp.iter().copied());
        let (piece, _) = restrict(&sub, &set);
        let report = validate_psts(&piece);
        comps.push(GeometryComponent {
            points: piece.points(),
            lines: piece.lines().len(),
            binomial: report.binomial,
            signature: canonical_form(&piece)?,
        });
    }
    comps.sort_by(|a, b| {
        (a.points, a.lines, a.signature.certificate())
            .cmp(&(b.points, b.lines, b.signature.certificate()))
    });
    let label = if comps.is_empty() {
        "empty".to_string()
    } else {
        comps
            .iter()
            .map(GeometryComponent::label)
            .collect::<Vec<_>>()
            .join("+")
    };
    Ok(HyperplaneGeometry {
        components: comps,
        label,
    })
}

/// The Veldkamp space with each hyperplane labeled by its induced
/// geometry, in the same order as `hyperplanes`.
pub fn labeled_veldkamp(cfg: &Configuration) -> Result<(VeldkampSpace, Vec<HyperplaneGeometry>)> {
    let vs = veldkamp_space(cfg)?;
    let labels = vs
        .hyperplanes
        .iter()
        .map(|h| classify_hyperplane(cfg, h))
        .collect::<Result<Vec<_>>>()?;
    Ok((vs, labels))
}

/// Deterministic tally of geometry labels, e.g. `B(2,0)+B(3,0) x4; B(4,0) x3`.
pub fn label_summary(labels: &[HyperplaneGeometry]) -> String {
    let mut counts: std::collections::BTreeMap<&str, usize> = std::collections::BTreeMap::new();
    for g in labels {
        *counts.entry(g.label.as_str()).or_default() += 1;
    }
    if counts.is_empty() {
        return "empty".to_string();
    }
    counts
        .iter()
        .map(|(l, c)| format!("{l} x{c}"))
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Clone, Debug)]
pub struct HypothesisViolation {
    pub hyperplane: PointSet,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct HypothesisReport {
    pub holds: bool,
    pub hyperplanes: usize,
    pub violations: Vec<HypothesisViolation>,
}

/// Checks, hyperplane by hyperplane, that the induced geometry is either
/// connected — and then a binomial maximal subspace of order n-1 — or the
/// union of exactly two unconnected binomial pieces of orders k₁+k₂ = n
/// with k₁,k₂ ≥ 2, each consisting of exactly the points uncollinear with
/// every point of the other. Violations are reported, never masked.
pub fn check_connected_or_split_hypothesis(cfg: &Configuration) -> Result<HypothesisReport> {
    let report = validate_psts(cfg);
    let Some(host) = report.binomial else {
        return Err(Error::ValidationFailed(
            "hypothesis check needs a binomial configuration".into(),
        ));
    };
    let n = host.order();
    let hyperplanes = enumerate_hyperplanes(cfg)?;
    let mut violations = Vec::new();
    for h in &hyperplanes {
        let (sub, old_of_new) = restrict(cfg, h);
        let comps = components(&sub);
        match comps.len() {
            1 => {
                let piece_report = validate_psts(&sub);
                let order = piece_report.binomial.map(|b| b.order());
                if order != Some(n - 1) {
                    violations.push(HypothesisViolation {
                        hyperplane: h.clone(),
                        reason: format!(
                            "connected but not a binomial configuration of order {}",
                            n - 1
                        ),
                    });
                    continue;
                }
                // maximality: together with any outside point it generates
                // the whole space
                let maximal = h.complement().iter().all(|p| {
                    let mut seed = h.clone();
                    seed.insert(p);
                    closure(cfg, &seed).is_full()
                });
                if !maximal {
                    violations.push(HypothesisViolation {
                        hyperplane: h.clone(),
                        reason: "connected but not a maximal subspace".into(),
                    });
                }
            }
            2 => {
                let mut orders = Vec::new();
                for comp in &comps {
                    let set = PointSet::from_indices(sub.points(), comp.iter().copied());
                    let (piece, _) = restrict(&sub, &set);
                    match validate_psts(&piece).binomial {
                        Some(b) => orders.push(b.order()),
                        None => {
                            violations.push(HypothesisViolation {
                                hyperplane: h.clone(),
                                reason: "split component is not binomial".into(),
                            });
                        }
                    }
                }
                if orders.len() == 2 {
                    if orders[0] + orders[1] != n || orders.iter().any(|&k| k < 2) {
                        violations.push(HypothesisViolation {
                            hyperplane: h.clone(),
                            reason: format!(
                                "split into orders {} + {} instead of {}",
                                orders[0], orders[1], n
                            ),
                        });
                        continue;
                    }
                    // mutual complementarity in the ambient configuration
                    let lift = |comp: &[u32]| -> Vec<u32> {
                        comp.iter().map(|&q| old_of_new[q as usize]).collect()
                    };
                    let sides = [lift(&comps[0]), lift(&comps[1])];
                    for (this, other) in [(0, 1), (1, 0)] {
                        let uncollinear: Vec<u32> = (0..cfg.points() as u32)
                            .filter(|&q| !sides[this].contains(&q))
                            .filter(|&q| {
                                sides[this]
                                    .iter()
                                    .all(|&p| cfg.line_through(p, q).is_none())
                            })
                            .collect();
                        if uncollinear != sides[other] {
                            violations.push(HypothesisViolation {
                                hyperplane: h.clone(),
                                reason: "split sides are not mutually complementary".into(),
                            });
                            break;
                        }
                    }
                }
            }
            k => {
                violations.push(HypothesisViolation {
                    hyperplane: h.clone(),
                    reason: format!("{k} connected components"),
                });
            }
        }
    }
    Ok(HypothesisReport {
        holds: violations.is_empty(),
        hyperplanes: hyperplanes.len(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{desargues, veronesian};
    use crate::incidence::Configuration;
    use crate::label::PointLabel;

    /// Independent oracle: filter all subsets by the hyperplane definition,
    /// working on raw masks.
    pub(crate) fn brute_force_hyperplanes(cfg: &Configuration) -> Vec<u64> {
        let p = cfg.points();
        assert!(p <= 22, "brute force limited to 22 points");
        let line_masks: Vec<u64> = cfg
            .lines()
            .iter()
            .map(|t| t.iter().fold(0u64, |acc, &q| acc | 1 << q))
            .collect();
        let full = if p == 64 { u64::MAX } else { (1u64 << p) - 1 };
        let mut out = Vec::new();
        'mask: for mask in 0..=full {
            if mask == full {
                continue;
            }
            for &lm in &line_masks {
                let c = (mask & lm).count_ones();
                if c == 0 || c == 2 {
                    continue 'mask;
                }
            }
            out.push(mask);
        }
        out
    }

    fn masks(sets: &[PointSet]) -> Vec<u64> {
        let mut v: Vec<u64> = sets.iter().map(|s| s.mask()).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn desargues_has_fifteen_hyperplanes() {
        let cfg = desargues(5).unwrap();
        let hs = enumerate_hyperplanes(&cfg).unwrap();
        assert_eq!(hs.len(), 15);
        for h in &hs {
            assert!(is_hyperplane(&cfg, h));
        }
    }

    #[test]
    fn veronesian_has_seven_hyperplanes() {
        let cfg = veronesian(3).unwrap();
        assert_eq!(enumerate_hyperplanes(&cfg).unwrap().len(), 7);
    }

    #[test]
    fn single_line_has_three_singleton_hyperplanes() {
        let labels = (0..3).map(|i| PointLabel::Atom(format!("p{i}"))).collect();
        let cfg = Configuration::new(labels, vec![vec![0, 1, 2]]).unwrap();
        let hs = enumerate_hyperplanes(&cfg).unwrap();
        assert_eq!(hs.len(), 3);
        assert!(hs.iter().all(|h| h.len() == 1));
    }

    #[test]
    fn enumeration_matches_brute_force_on_small_instances() {
        for cfg in [desargues(4).unwrap(), desargues(5).unwrap(), veronesian(4).unwrap()] {
            let fast = enumerate_hyperplanes(&cfg).unwrap();
            assert_eq!(masks(&fast), brute_force_hyperplanes(&cfg));
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let cfg = desargues(6).unwrap();
        let err = enumerate_hyperplanes_with_budget(&cfg, 5).unwrap_err();
        assert!(matches!(err, Error::SearchBudgetExceeded(5)));
    }

    #[test]
    fn singleton_partitions_generate_all_desargues_hyperplanes() {
        use crate::partition::{generate_subalgebra, partition_set};
        let cfg = desargues(5).unwrap();
        let generators: Vec<PointSet> = (1..=5u32)
            .map(|i| partition_set(&cfg, &[i].into_iter().collect()))
            .collect();
        let algebra = generate_subalgebra(&generators, &cfg).unwrap();
        assert_eq!(algebra, enumerate_hyperplanes(&cfg).unwrap());
    }

    #[test]
    fn veldkamp_of_desargues_is_three_dimensional() {
        let vs = veldkamp_space(&desargues(5).unwrap()).unwrap();
        assert_eq!(vs.dimension, 3);
        assert_eq!(vs.hyperplanes.len(), 15);
        assert_eq!(vs.lines.len(), 35);
    }

    #[test]
    fn veldkamp_of_g6_is_four_dimensional() {
        let vs = veldkamp_space(&desargues(6).unwrap()).unwrap();
        assert_eq!(vs.dimension, 4);
        assert_eq!(vs.hyperplanes.len(), 31);
    }

    #[test]
    fn desargues_labels_split_five_and_ten() {
        let (_, labels) = labeled_veldkamp(&desargues(5).unwrap()).unwrap();
        let veblens = labels.iter().filter(|g| g.label == "B(4,0)").count();
        let splits = labels
            .iter()
            .filter(|g| g.label == "B(2,0)+B(3,0)")
            .count();
        assert_eq!((veblens, splits), (5, 10));
    }

    #[test]
    fn hypothesis_holds_for_desargues_and_veronesian() {
        for cfg in [desargues(5).unwrap(), veronesian(4).unwrap()] {
            let report = check_connected_or_split_hypothesis(&cfg).unwrap();
            assert!(report.holds, "{:?}", report.violations);
        }
    }

    #[test]
    fn anticlique_triple_is_not_a_hyperplane_of_v33() {
        let cfg = veronesian(3).unwrap();
        let pick = |a: u32, b: u32, c: u32| {
            cfg.point_by_label(&PointLabel::Multiset { a, b, c }).unwrap()
        };
        // {a²c, ab², bc²}
        let h = PointSet::from_indices(
            cfg.points(),
            [pick(2, 0, 1), pick(1, 2, 0), pick(0, 1, 2)],
        );
        assert!(!is_hyperplane(&cfg, &h));
    }
}
