//! Freely contained complete graphs, their complements, and the
//! decomposition and partition criteria for systems of perspectives.

use std::collections::{BTreeMap, BTreeSet};

use crate::budget::search_budget;
use crate::error::{Error, Result};
use crate::families::PerspectiveData;
use crate::incidence::{is_hyperplane, restrict, third_point, validate_psts, Configuration};
use crate::partition::{all_partition_sets, canonical_side, PartitionSpec};
use crate::point_set::PointSet;

/// A complete graph freely contained in a configuration: every vertex
/// pair joinable, no three vertices on a line, and disjoint vertex pairs
/// on disjoint lines.
#[derive(Clone, Debug)]
pub struct FreeGraphWitness {
    pub vertices: PointSet,
    pub pair_lines: BTreeMap<(u32, u32), u32>,
}

/// The clause of the free-containment definition a candidate violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreeGraphDefect {
    NotJoinable(u32, u32),
    CollinearTriple(u32, u32, u32),
    SharedLine {
        first: (u32, u32),
        second: (u32, u32),
    },
}

/// Checks the three clauses and reports which one fails.
pub fn check_freely_contained(
    cfg: &Configuration,
    x: &PointSet,
) -> std::result::Result<FreeGraphWitness, FreeGraphDefect> {
    let vertices: Vec<u32> = x.iter().collect();
    let mut pair_lines = BTreeMap::new();
    for (i, &p) in vertices.iter().enumerate() {
        for &q in &vertices[i + 1..] {
            match cfg.line_through(p, q) {
                Some(k) => {
                    pair_lines.insert((p, q), k);
                }
                None => return Err(FreeGraphDefect::NotJoinable(p, q)),
            }
        }
    }
    for &(p, q) in pair_lines.keys() {
        if let Some(r) = third_point(cfg, p, q) {
            if x.contains(r) {
                return Err(FreeGraphDefect::CollinearTriple(p, q, r));
            }
        }
    }
    let pairs: Vec<(u32, u32)> = pair_lines.keys().copied().collect();
    for (i, &a) in pairs.iter().enumerate() {
        for &b in &pairs[i + 1..] {
            if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
                continue;
            }
            let la = cfg.lines()[pair_lines[&a] as usize];
            let lb = cfg.lines()[pair_lines[&b] as usize];
            if la.iter().any(|p| lb.contains(p)) {
                return Err(FreeGraphDefect::SharedLine { first: a, second: b });
            }
        }
    }
    Ok(FreeGraphWitness {
        vertices: x.clone(),
        pair_lines,
    })
}

/// Witness iff the vertex set spans a freely contained complete graph.
pub fn is_freely_contained(cfg: &Configuration, x: &PointSet) -> Option<FreeGraphWitness> {
    check_freely_contained(cfg, x).ok()
}

struct CliqueSearch<'a> {
    cfg: &'a Configuration,
    size: usize,
    chosen: Vec<u32>,
    thirds: Vec<u32>,
    found: Vec<Vec<u32>>,
    nodes: u64,
    budget: u64,
}

impl<'a> CliqueSearch<'a> {
    fn compatible(&self, v: u32) -> bool {
        let mut new_thirds = Vec::with_capacity(self.chosen.len());
        for &u in &self.chosen {
            let Some(w) = third_point(self.cfg, u, v) else {
                return false;
            };
            if self.chosen.contains(&w) || new_thirds.contains(&w) {
                // a collinear triple inside the set, or two pairs through v
                // on the same line
                return false;
            }
            new_thirds.push(w);
        }
        // disjoint pairs (u,v) vs (x,y) must have disjoint lines: thirds
        // must avoid each other and the chosen pairs' thirds
        for &w in &new_thirds {
            if self.chosen.contains(&w) || w == v {
                return false;
            }
        }
        for &t in &self.thirds {
            if new_thirds.contains(&t) || t == v {
                // t == v means v lies on an earlier pair's line
                return false;
            }
        }
        true
    }

    fn extend(&mut self, start: u32) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded(self.budget));
        }
        if self.chosen.len() == self.size {
            self.found.push(self.chosen.clone());
            return Ok(());
        }
        let remaining = self.size - self.chosen.len();
        let last = self.cfg.points() as u32;
        for v in start..last {
            if (last - v) < remaining as u32 {
                break;
            }
            // every vertex needs pairwise-distinct lines to the others
            if (self.cfg.rank_of(v) as usize) < self.size - 1 {
                continue;
            }
            if self.compatible(v) {
                let mark = self.thirds.len();
                for &u in &self.chosen {
                    let w = third_point(self.cfg, u, v).expect("checked");
                    self.thirds.push(w);
                }
                self.chosen.push(v);
                self.extend(v + 1)?;
                self.chosen.pop();
                self.thirds.truncate(mark);
            }
        }
        Ok(())
    }
}

/// All vertex sets of the given cardinality spanning freely contained
/// complete graphs, in lexicographic vertex order.
pub fn find_free_complete_graphs(
    cfg: &Configuration,
    size: usize,
) -> Result<Vec<FreeGraphWitness>> {
    if size < 2 {
        return Err(Error::BadSize("free graphs need size >= 2".into()));
    }
    let mut search = CliqueSearch {
        cfg,
        size,
        chosen: Vec::new(),
        thirds: Vec::new(),
        found: Vec::new(),
        nodes: 0,
        budget: search_budget(),
    };
    search.extend(0)?;
    let witnesses = search
        .found
        .into_iter()
        .map(|vs| {
            let set = PointSet::from_indices(cfg.points(), vs.iter().copied());
            check_freely_contained(cfg, &set).expect("search result is free")
        })
        .collect();
    Ok(witnesses)
}

/// The largest size admitting a freely contained complete graph, with all
/// witnesses of that size. Size 0 with no witnesses when not even a
/// joinable pair exists.
pub fn maximum_free_graphs(cfg: &Configuration) -> Result<(usize, Vec<FreeGraphWitness>)> {
    let max_rank = (0..cfg.points() as u32)
        .map(|p| cfg.rank_of(p))
        .max()
        .unwrap_or(0);
    let upper = (max_rank as usize + 1).min(cfg.points());
    for size in (2..=upper).rev() {
        let found = find_free_complete_graphs(cfg, size)?;
        if !found.is_empty() {
            return Ok((size, found));
        }
    }
    Ok((0, Vec::new()))
}

/// The complement of a free complete graph in a binomial configuration of
/// matching order: the configuration induced on the remaining points.
/// Returns it with the new-to-old index map.
pub fn graph_complement(
    cfg: &Configuration,
    witness: &FreeGraphWitness,
) -> Result<(Configuration, Vec<u32>)> {
    let report = validate_psts(cfg);
    let order = report
        .binomial
        .map(|b| b.order())
        .ok_or(Error::NotBinomialPlusOne)?;
    if witness.vertices.len() + 1 != order as usize {
        return Err(Error::NotBinomialPlusOne);
    }
    let (complement, map) = restrict(cfg, &witness.vertices.complement());
    let comp_report = validate_psts(&complement);
    if comp_report.binomial.map(|b| b.order()) != Some(order - 1) {
        return Err(Error::ValidationFailed(
            "complement of the free graph is not binomial".into(),
        ));
    }
    Ok((complement, map))
}

#[derive(Clone, Debug)]
pub struct IntersectionReport {
    /// The common vertex of each witness pair, indexed by (i, j).
    pub meets: BTreeMap<(usize, usize), u32>,
    pub violations: Vec<String>,
}

impl IntersectionReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies that the witnesses pairwise share exactly one vertex and that
/// the three common vertices of each triple form a line.
pub fn pairwise_intersections(
    cfg: &Configuration,
    witnesses: &[FreeGraphWitness],
) -> IntersectionReport {
    let mut meets = BTreeMap::new();
    let mut violations = Vec::new();
    for i in 0..witnesses.len() {
        for j in i + 1..witnesses.len() {
            let common: Vec<u32> = witnesses[i]
                .vertices
                .intersection(&witnesses[j].vertices)
                .iter()
                .collect();
            if common.len() == 1 {
                meets.insert((i, j), common[0]);
            } else {
                violations.push(format!(
                    "witnesses {i} and {j} share {} vertices",
                    common.len()
                ));
            }
        }
    }
    for i in 0..witnesses.len() {
        for j in i + 1..witnesses.len() {
            for k in j + 1..witnesses.len() {
                let (Some(&c1), Some(&c2), Some(&c3)) = (
                    meets.get(&(j, k)),
                    meets.get(&(i, k)),
                    meets.get(&(i, j)),
                ) else {
                    continue;
                };
                if c1 == c2 || c1 == c3 || c2 == c3 {
                    violations.push(format!(
                        "witnesses {i},{j},{k} do not meet in three distinct vertices"
                    ));
                    continue;
                }
                let on_line = third_point(cfg, c1, c2) == Some(c3);
                if !on_line {
                    violations.push(format!(
                        "common vertices of witnesses {i},{j},{k} are not collinear"
                    ));
                }
            }
        }
    }
    IntersectionReport { meets, violations }
}

/// Finds the subset A of the label base set W with H = H(A | W∖A),
/// canonicalized so that the smallest base element stays outside A.
pub fn decompose_hyperplane(cfg: &Configuration, h: &PointSet) -> Result<PartitionSpec> {
    if !is_hyperplane(cfg, h) {
        return Err(Error::NotAHyperplane);
    }
    for (a, set) in all_partition_sets(cfg)? {
        if set == *h {
            let ground: BTreeSet<u32> = crate::partition::pair_base_set(cfg)?;
            let b: BTreeSet<u32> = ground.difference(&a).copied().collect();
            let side = canonical_side(&a, &b, &ground);
            return PartitionSpec::new(ground, side);
        }
    }
    Err(Error::NoDecomposition)
}

#[derive(Clone, Debug)]
pub struct DegeneracyReport {
    /// Base elements fixed by every perspectivity.
    pub fixed_points: BTreeSet<u32>,
    /// Whether the system supports complete graphs beyond the m standard ones.
    pub extra_graphs: bool,
}

/// The common fixed points of all ξ(i,j).
pub fn check_degeneracy(data: &PerspectiveData) -> DegeneracyReport {
    let m = data.m();
    let fixed_points: BTreeSet<u32> = data
        .base()
        .iter()
        .copied()
        .filter(|&x| {
            (1..=m).all(|i| (1..=m).all(|j| i == j || data.xi(i, j, x) == x))
        })
        .collect();
    DegeneracyReport {
        extra_graphs: !fixed_points.is_empty(),
        fixed_points,
    }
}

/// The three conditions of the partition-hyperplane criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criterion {
    /// The trace Sub₂(A) ∪ Sub₂(X∖A) is a hyperplane of the axis.
    AxisHyperplane,
    /// A is invariant under every ξ(i,j).
    XiInvariant,
    /// A is invariant under every μ_i: a pair and its image are split or
    /// unsplit together.
    MuInvariant,
}

#[derive(Clone, Debug)]
pub struct CriteriaVerdict {
    pub hyperplane: bool,
    pub failed: Vec<Criterion>,
}

/// Decides whether H(A | W∖A) is a hyperplane of the system of
/// perspectives, by the three axis/ξ/μ conditions. The two ends of the
/// lattice are settled directly: A = X always yields the hyperplane
/// H(I | X), while A = ∅ yields the full point set.
pub fn check_partition_criteria(data: &PerspectiveData, a: &BTreeSet<u32>) -> CriteriaVerdict {
    let base: BTreeSet<u32> = data.base().iter().copied().collect();
    assert!(a.is_subset(&base), "A must be a subset of the base set X");
    if a.is_empty() {
        return CriteriaVerdict {
            hyperplane: false,
            failed: Vec::new(),
        };
    }
    if *a == base {
        return CriteriaVerdict {
            hyperplane: true,
            failed: Vec::new(),
        };
    }

    let unsplit = |x: u32, y: u32| a.contains(&x) == a.contains(&y);
    let axis = data.axis();
    let mut failed = Vec::new();

    let mut trace = axis.empty_set();
    for v in 0..axis.points() as u32 {
        let (x, y) = data.axis_pair(v);
        if unsplit(x, y) {
            trace.insert(v);
        }
    }
    if !is_hyperplane(axis, &trace) {
        failed.push(Criterion::AxisHyperplane);
    }

    let m = data.m();
    let xi_ok = (1..=m).all(|i| {
        (1..=m).all(|j| {
            i == j
                || data
                    .base()
                    .iter()
                    .all(|&x| a.contains(&x) == a.contains(&data.xi(i, j, x)))
        })
    });
    if !xi_ok {
        failed.push(Criterion::XiInvariant);
    }

    let mu_ok = (1..=m).all(|i| {
        data.mu(i).iter().all(|(&(x, y), &v)| {
            let (u, w) = data.axis_pair(v);
            unsplit(x, y) == unsplit(u, w)
        })
    });
    if !mu_ok {
        failed.push(Criterion::MuInvariant);
    }

    CriteriaVerdict {
        hyperplane: failed.is_empty(),
        failed,
    }
}

/// The point set H(A ∪ J | W ∖ (A ∪ J)) of a built perspective system,
/// read off the Sub₂(W) labels.
pub fn perspective_partition_set(cfg: &Configuration, part: &BTreeSet<u32>) -> PointSet {
    crate::partition::partition_set(cfg, part)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        desargues, perspective_system, quasi_grassmannian, tetrahedra_data, veronesian,
    };
    use crate::hyperplanes::enumerate_hyperplanes;
    use crate::incidence::star;
    use crate::partition::partition_set;

    #[test]
    fn stars_are_free_in_desargues() {
        let cfg = desargues(5).unwrap();
        for i in 1..=5 {
            let s = star(&cfg, i).unwrap();
            assert!(is_freely_contained(&cfg, &s).is_some(), "star {i}");
        }
        let found = find_free_complete_graphs(&cfg, 4).unwrap();
        assert_eq!(found.len(), 5);
    }

    #[test]
    fn a_full_line_is_not_free() {
        let cfg = desargues(5).unwrap();
        let t = cfg.lines()[0];
        let x = PointSet::from_indices(10, t.iter().copied());
        let defect = check_freely_contained(&cfg, &x).unwrap_err();
        assert!(matches!(defect, FreeGraphDefect::CollinearTriple(..)));
    }

    #[test]
    fn veronesian_pure_pair_multisets_are_free() {
        // msub_3({a,b}) = {a3, a2b, ab2, b3}
        let cfg = veronesian(3).unwrap();
        let mut x = cfg.empty_set();
        for (k, l) in cfg.labels().iter().enumerate() {
            if let crate::label::PointLabel::Multiset { c: 0, .. } = l {
                x.insert(k as u32);
            }
        }
        assert_eq!(x.len(), 4);
        assert!(is_freely_contained(&cfg, &x).is_some());
        assert_eq!(find_free_complete_graphs(&cfg, 4).unwrap().len(), 3);
    }

    #[test]
    fn quasi_grassmannians_have_two_or_three_maximal_graphs() {
        let r6 = quasi_grassmannian(6).unwrap();
        let (size, found) = maximum_free_graphs(&r6).unwrap();
        assert_eq!((size, found.len()), (5, 2));
        let r7 = quasi_grassmannian(7).unwrap();
        let (size, found) = maximum_free_graphs(&r7).unwrap();
        assert_eq!((size, found.len()), (6, 3));
    }

    #[test]
    fn complement_of_star_is_the_veblen_configuration() {
        let cfg = desargues(5).unwrap();
        let s = star(&cfg, 1).unwrap();
        let witness = is_freely_contained(&cfg, &s).unwrap();
        let (complement, _) = graph_complement(&cfg, &witness).unwrap();
        assert_eq!(complement.points(), 6);
        assert_eq!(complement.lines().len(), 4);
    }

    #[test]
    fn stars_meet_pairwise_in_one_point_and_triples_on_lines() {
        let cfg = desargues(6).unwrap();
        let witnesses: Vec<FreeGraphWitness> = (1..=3)
            .map(|i| is_freely_contained(&cfg, &star(&cfg, i).unwrap()).unwrap())
            .collect();
        let report = pairwise_intersections(&cfg, &witnesses);
        assert!(report.ok(), "{:?}", report.violations);
        assert_eq!(report.meets.len(), 3);
    }

    #[test]
    fn desargues_hyperplanes_decompose() {
        let cfg = desargues(5).unwrap();
        for h in enumerate_hyperplanes(&cfg).unwrap() {
            let spec = decompose_hyperplane(&cfg, &h).unwrap();
            assert!(spec.is_proper());
            let rebuilt = partition_set(&cfg, spec.part());
            assert_eq!(rebuilt, h);
        }
    }

    #[test]
    fn decompose_canonicalizes_to_the_small_side() {
        let cfg = desargues(5).unwrap();
        // Sub₂({2,3,4,5}) is the complement of the star of 1
        let s = star(&cfg, 1).unwrap();
        let h = s.complement();
        let spec = decompose_hyperplane(&cfg, &h).unwrap();
        assert_eq!(spec.part().iter().copied().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn tetrahedra_has_no_fixed_point_and_exactly_m_graphs() {
        for m in [2u32, 3] {
            let data = tetrahedra_data(m).unwrap();
            let report = check_degeneracy(&data);
            assert!(report.fixed_points.is_empty());
            assert!(!report.extra_graphs);
            let cfg = perspective_system(&data).unwrap();
            let size = (m + 3) as usize;
            let found = find_free_complete_graphs(&cfg, size).unwrap();
            assert_eq!(found.len(), m as usize, "m = {m}");
        }
    }

    #[test]
    fn identity_xi_gives_fixed_points_and_extra_graphs() {
        // all xi = id: every base element is fixed
        let m = 2u32;
        let base: Vec<u32> = (3..=6).collect();
        let axis = desargues(4).unwrap();
        // relabel axis points to pairs over {3..6}: rebuild through the
        // standard pair configuration on that base
        let axis = {
            let labels = axis
                .labels()
                .iter()
                .map(|l| {
                    let (x, y) = l.as_pair().unwrap();
                    crate::label::PointLabel::pair(x + 2, y + 2)
                })
                .collect();
            Configuration::new(labels, axis.lines().iter().map(|t| t.to_vec()).collect())
                .unwrap()
        };
        let mu: std::collections::BTreeMap<(u32, u32), u32> = axis
            .labels()
            .iter()
            .enumerate()
            .map(|(k, l)| (l.as_pair().unwrap(), k as u32))
            .collect();
        let identity: BTreeMap<u32, u32> = base.iter().map(|&x| (x, x)).collect();
        let mut xi = BTreeMap::new();
        xi.insert((1, 2), identity.clone());
        xi.insert((2, 1), identity);
        let data =
            PerspectiveData::new(m, base, axis, vec![mu.clone(), mu], xi).unwrap();
        let report = check_degeneracy(&data);
        assert_eq!(report.fixed_points.len(), 4);
        assert!(report.extra_graphs);
        let cfg = perspective_system(&data).unwrap();
        let found = find_free_complete_graphs(&cfg, 5).unwrap();
        assert!(found.len() > m as usize);
    }

    #[test]
    fn quasi_grassmannian_data_has_no_fixed_points() {
        let data = crate::families::quasi_grassmannian_data(6).unwrap();
        let report = check_degeneracy(&data);
        assert!(report.fixed_points.is_empty());
        assert!(!report.extra_graphs);
    }

    #[test]
    fn veronesian_complements_are_smaller_veronesians() {
        let v4 = veronesian(4).unwrap();
        let (size, witnesses) = maximum_free_graphs(&v4).unwrap();
        assert_eq!((size, witnesses.len()), (5, 3));
        let v3 = veronesian(3).unwrap();
        for w in &witnesses {
            let (complement, _) = graph_complement(&v4, w).unwrap();
            assert!(crate::canon::are_isomorphic(&complement, &v3));
        }
    }

    #[test]
    fn tetrahedra_criteria_match_direct_hyperplane_tests() {
        let data = tetrahedra_data(2).unwrap();
        let cfg = perspective_system(&data).unwrap();
        let base: Vec<u32> = data.base().to_vec();
        for mask in 0u32..(1 << base.len()) {
            let a: BTreeSet<u32> = base
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            let verdict = check_partition_criteria(&data, &a);
            let direct = is_hyperplane(&cfg, &partition_set(&cfg, &a));
            assert_eq!(verdict.hyperplane, direct, "A = {a:?}");
        }
    }

    #[test]
    fn tetrahedra_aa_prime_passes_and_a_alone_fails_xi() {
        let data = tetrahedra_data(2).unwrap();
        // base elements 3,4,5,6 stand for a, a', b, b'
        let pass: BTreeSet<u32> = [3u32, 4].into_iter().collect();
        let verdict = check_partition_criteria(&data, &pass);
        assert!(verdict.hyperplane);
        let fail: BTreeSet<u32> = [3u32].into_iter().collect();
        let verdict = check_partition_criteria(&data, &fail);
        assert!(!verdict.hyperplane);
        assert!(verdict.failed.contains(&Criterion::XiInvariant));
    }

    #[test]
    fn tetrahedra_extra_hyperplane_is_not_generated_by_index_singletons() {
        let data = tetrahedra_data(2).unwrap();
        let cfg = perspective_system(&data).unwrap();
        let h_extra = partition_set(&cfg, &[3u32, 4].into_iter().collect());
        assert!(is_hyperplane(&cfg, &h_extra));
        let generators: Vec<PointSet> = (1..=2u32)
            .map(|i| partition_set(&cfg, &[i].into_iter().collect()))
            .collect();
        let algebra = crate::partition::generate_subalgebra(&generators, &cfg).unwrap();
        assert!(!algebra.contains(&h_extra));
        assert_eq!(algebra.len(), 3);
    }
}
