//! Configurations: incidence structures with 3-element lines.
//!
//! Points are dense integer indices; labels are metadata carried alongside.
//! Lines are stored sorted and deduplicated at construction, and a
//! pair-to-line map is built once so that the third-point operation is a
//! lookup.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::label::PointLabel;
use crate::point_set::PointSet;

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The shape `B(n,delta)` of a binomial configuration: `C(n+delta,2)`
/// points, `C(n+delta,3)` lines, uniform point rank `n+delta-2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BinomialType {
    pub n: u32,
    pub delta: i8,
}

impl BinomialType {
    pub fn new(n: u32, delta: i8) -> Self {
        assert!((-1..=2).contains(&delta));
        assert!(n as i64 + delta as i64 >= 2);
        BinomialType { n, delta }
    }

    /// The normalized shape of a given order `m = n + delta`.
    pub fn from_order(order: u32) -> Self {
        if order >= 3 {
            BinomialType { n: order, delta: 0 }
        } else {
            BinomialType { n: 3, delta: -1 }
        }
    }

    pub fn order(&self) -> u32 {
        (self.n as i64 + self.delta as i64) as u32
    }

    pub fn points(&self) -> u64 {
        binom(self.order() as u64, 2)
    }

    pub fn lines(&self) -> u64 {
        binom(self.order() as u64, 3)
    }

    pub fn rank(&self) -> u32 {
        self.order() - 2
    }

    /// Same underlying shape, regardless of the `(n, delta)` presentation.
    pub fn same_shape(&self, other: &BinomialType) -> bool {
        self.order() == other.order()
    }
}

impl std::fmt::Display for BinomialType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.delta {
            0 => write!(f, "B({},0)", self.n),
            d if d > 0 => write!(f, "B({},+{})", self.n, d),
            d => write!(f, "B({},{})", self.n, d),
        }
    }
}

/// A violation found by [`validate_psts`]. Each names the offending indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Two distinct lines share the two listed points.
    DuplicatePair { p: u32, q: u32, lines: (u32, u32) },
    /// A point whose rank differs from the rank of point 0.
    NonUniformRank { point: u32, rank: u32, expected: u32 },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::DuplicatePair { p, q, lines } => write!(
                f,
                "points {p},{q} lie on two lines (#{} and #{})",
                lines.0, lines.1
            ),
            Violation::NonUniformRank {
                point,
                rank,
                expected,
            } => write!(f, "point {point} has rank {rank}, expected {expected}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub is_psts: bool,
    pub rank: Option<u32>,
    pub binomial: Option<BinomialType>,
    pub violations: Vec<Violation>,
}

/// An incidence structure with 3-element lines. Immutable after
/// construction; all operations are pure.
#[derive(Clone, Debug)]
pub struct Configuration {
    labels: Vec<PointLabel>,
    lines: Vec<[u32; 3]>,
    point_lines: Vec<Vec<u32>>,
    pair_line: HashMap<(u32, u32), u32>,
}

impl PartialEq for Configuration {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.lines == other.lines
    }
}

impl Eq for Configuration {}

impl Configuration {
    pub fn new(labels: Vec<PointLabel>, raw_lines: Vec<Vec<u32>>) -> Result<Self> {
        let points = labels.len();
        {
            let mut seen = std::collections::HashSet::new();
            for l in &labels {
                if !seen.insert(l) {
                    return Err(Error::DuplicateLabel(l.to_string()));
                }
            }
        }
        let mut lines = Vec::with_capacity(raw_lines.len());
        for (index, raw) in raw_lines.iter().enumerate() {
            let mut t = raw.clone();
            t.sort_unstable();
            t.dedup();
            if t.len() != 3 {
                return Err(Error::BadLineSize {
                    index,
                    size: t.len(),
                });
            }
            if let Some(&p) = t.iter().find(|&&p| p as usize >= points) {
                return Err(Error::PointOutOfRange {
                    index,
                    point: p,
                    points,
                });
            }
            lines.push([t[0], t[1], t[2]]);
        }
        lines.sort_unstable();
        lines.dedup();
        Ok(Self::from_triples(labels, lines))
    }

    /// Internal constructor for already-sorted, deduplicated, in-range triples.
    pub(crate) fn from_triples(labels: Vec<PointLabel>, lines: Vec<[u32; 3]>) -> Self {
        let points = labels.len();
        let mut point_lines = vec![Vec::new(); points];
        let mut pair_line = HashMap::new();
        for (k, t) in lines.iter().enumerate() {
            for &p in t {
                point_lines[p as usize].push(k as u32);
            }
            for (p, q) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                pair_line.entry((p, q)).or_insert(k as u32);
            }
        }
        Configuration {
            labels,
            lines,
            point_lines,
            pair_line,
        }
    }

    pub fn points(&self) -> usize {
        self.labels.len()
    }

    pub fn lines(&self) -> &[[u32; 3]] {
        &self.lines
    }

    pub fn labels(&self) -> &[PointLabel] {
        &self.labels
    }

    pub fn label(&self, i: u32) -> &PointLabel {
        &self.labels[i as usize]
    }

    /// Index of the point carrying the given label, if present.
    pub fn point_by_label(&self, label: &PointLabel) -> Option<u32> {
        self.labels.iter().position(|l| l == label).map(|i| i as u32)
    }

    pub fn rank_of(&self, i: u32) -> u32 {
        self.point_lines[i as usize].len() as u32
    }

    pub fn lines_through(&self, i: u32) -> &[u32] {
        &self.point_lines[i as usize]
    }

    /// The line through two distinct points, if they are collinear.
    pub fn line_through(&self, p: u32, q: u32) -> Option<u32> {
        assert_ne!(p, q);
        self.pair_line.get(&(p.min(q), p.max(q))).copied()
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::empty(self.points())
    }

    pub fn full_set(&self) -> PointSet {
        PointSet::full(self.points())
    }
}

/// Checks the partial-Steiner axioms: every pair of points on at most one
/// line, all points of equal rank. Reports whether the counts match a
/// binomial shape.
pub fn validate_psts(cfg: &Configuration) -> ValidationReport {
    let mut violations = Vec::new();
    let mut pair_seen: HashMap<(u32, u32), u32> = HashMap::new();
    for (k, t) in cfg.lines().iter().enumerate() {
        for (p, q) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            if let Some(&first) = pair_seen.get(&(p, q)) {
                violations.push(Violation::DuplicatePair {
                    p,
                    q,
                    lines: (first, k as u32),
                });
            } else {
                pair_seen.insert((p, q), k as u32);
            }
        }
    }
    violations.sort_by_key(|v| match *v {
        Violation::DuplicatePair { p, q, lines } => (0, p, q, lines.0),
        Violation::NonUniformRank { point, .. } => (1, point, 0, 0),
    });

    let mut rank = None;
    if cfg.points() > 0 {
        let expected = cfg.rank_of(0);
        let mut uniform = true;
        for i in 1..cfg.points() as u32 {
            let r = cfg.rank_of(i);
            if r != expected {
                uniform = false;
                violations.push(Violation::NonUniformRank {
                    point: i,
                    rank: r,
                    expected,
                });
            }
        }
        if uniform {
            rank = Some(expected);
        }
    }

    let is_psts = violations.is_empty();
    let binomial = rank.and_then(|r| {
        let order = r as u64 + 2;
        if cfg.points() as u64 == binom(order, 2) && cfg.lines().len() as u64 == binom(order, 3) {
            Some(BinomialType::from_order(order as u32))
        } else {
            None
        }
    });
    ValidationReport {
        is_psts,
        rank,
        binomial: if is_psts { binomial } else { None },
        violations,
    }
}

/// True iff every line with at least two points in `y` lies entirely in `y`.
pub fn is_subspace(cfg: &Configuration, y: &PointSet) -> bool {
    assert_eq!(y.width(), cfg.points());
    cfg.lines().iter().all(|t| {
        let c = t.iter().filter(|&&p| y.contains(p)).count();
        c != 2
    })
}

/// True iff `h` is a proper subspace crossing every line: equivalently,
/// `h` is proper and meets every line in one or three points.
pub fn is_hyperplane(cfg: &Configuration, h: &PointSet) -> bool {
    assert_eq!(h.width(), cfg.points());
    if h.is_full() {
        return false;
    }
    cfg.lines().iter().all(|t| {
        let c = t.iter().filter(|&&p| h.contains(p)).count();
        c == 1 || c == 3
    })
}

/// The third point on the line through `p` and `q`, when they are collinear.
pub fn third_point(cfg: &Configuration, p: u32, q: u32) -> Option<u32> {
    let k = cfg.line_through(p, q)?;
    let t = cfg.lines()[k as usize];
    t.iter().copied().find(|&r| r != p && r != q)
}

/// The subspace generated by `seed`: closure under third-point completion.
pub fn closure(cfg: &Configuration, seed: &PointSet) -> PointSet {
    let mut acc = seed.clone();
    loop {
        let members: Vec<u32> = acc.iter().collect();
        let mut grew = false;
        for (i, &p) in members.iter().enumerate() {
            for &q in &members[i + 1..] {
                if let Some(r) = third_point(cfg, p, q) {
                    if !acc.contains(r) {
                        acc.insert(r);
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return acc;
        }
    }
}

/// The restriction to `y`: the points of `y`, densely reindexed, with
/// exactly the lines lying entirely inside `y`. Returns the configuration
/// together with the new-to-old index map.
pub fn restrict(cfg: &Configuration, y: &PointSet) -> (Configuration, Vec<u32>) {
    assert_eq!(y.width(), cfg.points());
    let old_of_new: Vec<u32> = y.iter().collect();
    let mut new_of_old = vec![u32::MAX; cfg.points()];
    for (new, &old) in old_of_new.iter().enumerate() {
        new_of_old[old as usize] = new as u32;
    }
    let labels = old_of_new
        .iter()
        .map(|&old| cfg.label(old).clone())
        .collect();
    let lines = cfg
        .lines()
        .iter()
        .filter(|t| t.iter().all(|&p| y.contains(p)))
        .map(|t| [new_of_old[t[0] as usize], new_of_old[t[1] as usize], new_of_old[t[2] as usize]])
        .collect();
    (Configuration::from_triples(labels, lines), old_of_new)
}

/// The set of points whose pair label contains `i`.
pub fn star(cfg: &Configuration, i: u32) -> Result<PointSet> {
    let mut out = cfg.empty_set();
    for (k, l) in cfg.labels().iter().enumerate() {
        match l.as_pair() {
            Some((x, y)) => {
                if x == i || y == i {
                    out.insert(k as u32);
                }
            }
            None => return Err(Error::LabelsNotPairs),
        }
    }
    Ok(out)
}

/// Connected components of the collinearity graph, each as a sorted list
/// of point indices, ordered by smallest member.
pub fn components(cfg: &Configuration) -> Vec<Vec<u32>> {
    let n = cfg.points();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start as u32];
        seen[start] = true;
        let mut queue = vec![start as u32];
        while let Some(p) = queue.pop() {
            for &k in cfg.lines_through(p) {
                for &q in &cfg.lines()[k as usize] {
                    if !seen[q as usize] {
                        seen[q as usize] = true;
                        comp.push(q);
                        queue.push(q);
                    }
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::desargues;

    fn atoms(n: usize) -> Vec<PointLabel> {
        (0..n).map(|i| PointLabel::Atom(format!("p{i}"))).collect()
    }

    #[test]
    fn binomial_type_normalization() {
        let veblen = BinomialType::from_order(4);
        assert_eq!((veblen.n, veblen.delta), (4, 0));
        assert_eq!((veblen.points(), veblen.lines(), veblen.rank()), (6, 4, 2));
        // degenerate shapes fold into the delta = -1 presentation
        let point = BinomialType::from_order(2);
        assert_eq!((point.n, point.delta), (3, -1));
        assert_eq!(point.points(), 1);
        assert!(point.same_shape(&BinomialType::new(3, -1)));
        assert_eq!(BinomialType::new(4, 1).to_string(), "B(4,+1)");
        assert_eq!(BinomialType::new(3, -1).to_string(), "B(3,-1)");
    }

    #[test]
    fn desargues_validates_as_binomial() {
        let cfg = desargues(5).unwrap();
        let report = validate_psts(&cfg);
        assert!(report.is_psts);
        assert_eq!(report.rank, Some(3));
        let b = report.binomial.unwrap();
        assert_eq!(b.order(), 5);
        assert_eq!((b.points(), b.lines()), (10, 10));
    }

    #[test]
    fn shared_pair_is_reported() {
        let cfg =
            Configuration::new(atoms(4), vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let report = validate_psts(&cfg);
        assert!(!report.is_psts);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::DuplicatePair { p: 0, q: 1, .. })));
    }

    #[test]
    fn fano_is_psts_but_not_binomial() {
        let lines = vec![
            vec![0, 1, 2],
            vec![0, 3, 4],
            vec![0, 5, 6],
            vec![1, 3, 5],
            vec![1, 4, 6],
            vec![2, 3, 6],
            vec![2, 4, 5],
        ];
        let cfg = Configuration::new(atoms(7), lines).unwrap();
        let report = validate_psts(&cfg);
        assert!(report.is_psts);
        assert_eq!(report.rank, Some(3));
        assert!(report.binomial.is_none());
    }

    #[test]
    fn bad_line_size_is_rejected() {
        let err = Configuration::new(atoms(3), vec![vec![0, 1, 1]]).unwrap_err();
        assert!(matches!(err, Error::BadLineSize { index: 0, size: 2 }));
    }

    #[test]
    fn singleton_is_subspace_two_point_section_is_not() {
        let cfg = desargues(5).unwrap();
        let single = PointSet::from_indices(10, [0]);
        assert!(is_subspace(&cfg, &single));
        let t = cfg.lines()[0];
        let two = PointSet::from_indices(10, [t[0], t[1]]);
        assert!(!is_subspace(&cfg, &two));
    }

    #[test]
    fn pair_section_of_base_subset_is_subspace() {
        // in G(5,2): the pairs inside {2,3,4,5} form a subspace
        let cfg = desargues(5).unwrap();
        let mut y = cfg.empty_set();
        for (k, l) in cfg.labels().iter().enumerate() {
            let (x, z) = l.as_pair().unwrap();
            if x >= 2 && z >= 2 {
                y.insert(k as u32);
            }
        }
        assert_eq!(y.len(), 6);
        assert!(is_subspace(&cfg, &y));
        assert!(is_hyperplane(&cfg, &y));
    }

    #[test]
    fn full_set_is_not_a_hyperplane() {
        let cfg = desargues(5).unwrap();
        assert!(!is_hyperplane(&cfg, &cfg.full_set()));
    }

    #[test]
    fn third_point_in_veblen() {
        // {1,2} and {1,3} lie on the pair-line of {1,2,3}; the third is {2,3}
        let cfg = desargues(4).unwrap();
        let p = cfg.point_by_label(&PointLabel::pair(1, 2)).unwrap();
        let q = cfg.point_by_label(&PointLabel::pair(1, 3)).unwrap();
        let r = third_point(&cfg, p, q).unwrap();
        assert_eq!(cfg.label(r), &PointLabel::pair(2, 3));
    }

    #[test]
    fn full_line_on_a_base_triple_is_a_hyperplane_of_veblen() {
        // in G(4,2): the pairs inside {2,3,4} form a line, and a hyperplane
        let cfg = desargues(4).unwrap();
        let mut h = cfg.empty_set();
        for (k, l) in cfg.labels().iter().enumerate() {
            let (x, y) = l.as_pair().unwrap();
            if x >= 2 && y >= 2 {
                h.insert(k as u32);
            }
        }
        assert_eq!(h.len(), 3);
        assert!(is_hyperplane(&cfg, &h));
    }

    #[test]
    fn third_point_in_the_veronesian() {
        // a3 and ab2 lie on the line a·X^2 = {a3, ab2, ac2}
        let cfg = crate::families::veronesian(3).unwrap();
        let pick = |a: u32, b: u32, c: u32| {
            cfg.point_by_label(&crate::label::PointLabel::Multiset { a, b, c })
                .unwrap()
        };
        let r = third_point(&cfg, pick(3, 0, 0), pick(1, 2, 0)).unwrap();
        assert_eq!(r, pick(1, 0, 2));
    }

    #[test]
    fn third_point_absent_for_noncollinear() {
        // {1,2} and {3,4} share no base element, so no line joins them
        let cfg = desargues(5).unwrap();
        let p = cfg.point_by_label(&PointLabel::pair(1, 2)).unwrap();
        let q = cfg.point_by_label(&PointLabel::pair(3, 4)).unwrap();
        assert_eq!(third_point(&cfg, p, q), None);
    }

    #[test]
    fn restrict_to_all_points_is_identity() {
        let cfg = desargues(5).unwrap();
        let (r, map) = restrict(&cfg, &cfg.full_set());
        assert_eq!(r, cfg);
        assert_eq!(map, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn restrict_drops_outside_lines() {
        let cfg = desargues(5).unwrap();
        let mut y = cfg.empty_set();
        for (k, l) in cfg.labels().iter().enumerate() {
            let (x, z) = l.as_pair().unwrap();
            if x >= 2 && z >= 2 {
                y.insert(k as u32);
            }
        }
        let (r, _) = restrict(&cfg, &y);
        assert_eq!(r.points(), 6);
        assert_eq!(r.lines().len(), 4);
        let report = validate_psts(&r);
        assert_eq!(report.binomial.unwrap().order(), 4);
    }

    #[test]
    fn star_collects_pairs_through_element() {
        let cfg = desargues(5).unwrap();
        let s = star(&cfg, 1).unwrap();
        assert_eq!(s.len(), 4);
        for p in s.iter() {
            let (x, y) = cfg.label(p).as_pair().unwrap();
            assert!(x == 1 || y == 1);
        }
        let veblen_ranks = desargues(4).unwrap();
        assert_eq!(star(&veblen_ranks, 3).unwrap().len(), 3);
    }

    #[test]
    fn star_requires_pair_labels() {
        let cfg = Configuration::new(atoms(3), vec![vec![0, 1, 2]]).unwrap();
        assert!(matches!(star(&cfg, 0), Err(Error::LabelsNotPairs)));
    }

    #[test]
    fn closure_is_a_subspace() {
        let cfg = desargues(5).unwrap();
        for seed_points in [vec![0, 1], vec![2, 5, 7], vec![0, 3, 8, 9]] {
            let seed = PointSet::from_indices(10, seed_points);
            let c = closure(&cfg, &seed);
            assert!(is_subspace(&cfg, &c));
            assert!(seed.is_subset_of(&c));
        }
    }
}
