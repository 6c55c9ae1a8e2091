//! Constructors for the configuration families under study: generalized
//! Desargues configurations, quasi Grassmannians, multi-veblen
//! configurations, combinatorial Veronesians, graph sums, and systems of
//! perspectives.
//!
//! Base sets are canonicalized to integer ranges so that labels are
//! reproducible across runs. Constructors attach labels that expose the
//! underlying combinatorics to the analysis modules.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::incidence::{binom, validate_psts, Configuration};
use crate::label::PointLabel;

fn sub2(base: &[u32]) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(base.len() * (base.len().saturating_sub(1)) / 2);
    for (i, &x) in base.iter().enumerate() {
        for &y in &base[i + 1..] {
            out.push((x.min(y), x.max(y)));
        }
    }
    out
}

fn sub3(base: &[u32]) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for i in 0..base.len() {
        for j in i + 1..base.len() {
            for k in j + 1..base.len() {
                out.push([base[i], base[j], base[k]]);
            }
        }
    }
    out
}

/// The configuration on the 2-subsets of `base`, with a line for every
/// 3-subset. Shared by several constructors.
fn pair_configuration(base: &[u32]) -> Configuration {
    let pairs = sub2(base);
    let index: BTreeMap<(u32, u32), u32> = pairs
        .iter()
        .enumerate()
        .map(|(k, &p)| (p, k as u32))
        .collect();
    let labels = pairs
        .iter()
        .map(|&(x, y)| PointLabel::pair(x, y))
        .collect();
    let mut lines = Vec::new();
    for z in sub3(base) {
        lines.push([
            index[&(z[0], z[1])],
            index[&(z[0], z[2])],
            index[&(z[1], z[2])],
        ]);
    }
    lines.sort_unstable();
    Configuration::from_triples(labels, lines)
}

/// The generalized Desargues configuration G(n,2): points are the
/// 2-subsets of {1..n}, lines are the pair-sets of each 3-subset.
pub fn desargues(n: u32) -> Result<Configuration> {
    if n < 3 {
        return Err(Error::BadSize(format!("desargues requires n >= 3, got {n}")));
    }
    let base: Vec<u32> = (1..=n).collect();
    Ok(pair_configuration(&base))
}

/// The quasi Grassmannian R_n. The lines of G(X,2) through the point
/// {1,2} are replaced by crossed triples pairing {1,y} with {2,y'} across
/// the blocks {3,4}, {5,6}, ..., {2k-1,2k}; for odd n the base set gains
/// the element 0 and the triple on {0,1,2} stays.
pub fn quasi_grassmannian(n: u32) -> Result<Configuration> {
    if n < 4 {
        return Err(Error::BadSize(format!(
            "quasi-grassmannian requires n >= 4, got {n}"
        )));
    }
    let even = n.is_multiple_of(2);
    let k = if even { n / 2 } else { (n - 1) / 2 };
    let mut base: Vec<u32> = if even { Vec::new() } else { vec![0] };
    base.extend(1..=2 * k);

    let pairs = sub2(&base);
    let index: BTreeMap<(u32, u32), u32> = pairs
        .iter()
        .enumerate()
        .map(|(q, &p)| (p, q as u32))
        .collect();
    let labels: Vec<PointLabel> = pairs
        .iter()
        .map(|&(x, y)| PointLabel::pair(x, y))
        .collect();

    let mut lines: Vec<[u32; 3]> = Vec::new();
    for z in sub3(&base) {
        if z.contains(&1) && z.contains(&2) {
            // kept only in the odd case, for the base triple {0,1,2}
            if !(z == [0, 1, 2]) {
                continue;
            }
        }
        let mut t = [
            index[&(z[0], z[1])],
            index[&(z[0], z[2])],
            index[&(z[1], z[2])],
        ];
        t.sort_unstable();
        lines.push(t);
    }
    let p = index[&(1, 2)];
    for j in 1..k {
        for (u, v) in [(2 * j + 2, 2 * j + 1), (2 * j + 1, 2 * j + 2)] {
            let mut t = [p, index[&(1, u)], index[&(2, v)]];
            t.sort_unstable();
            lines.push(t);
        }
    }
    lines.sort_unstable();
    let cfg = Configuration::from_triples(labels, lines);
    debug_assert_eq!(cfg.lines().len() as u64, binom(n as u64, 3));
    Ok(cfg)
}

/// A simple undirected graph on the vertex set {1..order}, steering the
/// multi-veblen construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    order: u32,
    edges: BTreeSet<(u32, u32)>,
}

impl SimpleGraph {
    pub fn new<E: IntoIterator<Item = (u32, u32)>>(order: u32, edges: E) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (x, y) in edges {
            if x == y || x < 1 || y < 1 || x > order || y > order {
                return Err(Error::BadSize(format!(
                    "edge ({x},{y}) is not a 2-subset of 1..={order}"
                )));
            }
            set.insert((x.min(y), x.max(y)));
        }
        Ok(SimpleGraph { order, edges: set })
    }

    pub fn empty(order: u32) -> Self {
        SimpleGraph {
            order,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(order: u32) -> Self {
        let base: Vec<u32> = (1..=order).collect();
        SimpleGraph {
            order,
            edges: sub2(&base).into_iter().collect(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn edges(&self) -> &BTreeSet<(u32, u32)> {
        &self.edges
    }

    pub fn has_edge(&self, x: u32, y: u32) -> bool {
        self.edges.contains(&(x.min(y), x.max(y)))
    }
}

/// The multi-veblen configuration M(X,p,P) on X = {1..n} with the base
/// pair p = {n+1, n+2}. Points carry the Sub₂(X ∪ p) identification.
pub fn multi_veblen(graph: &SimpleGraph) -> Result<Configuration> {
    let n = graph.order();
    if n < 2 {
        return Err(Error::BadSize(format!(
            "multi-veblen requires |X| >= 2, got {n}"
        )));
    }
    let a = n + 1;
    let b = n + 2;
    let mut labels = Vec::new();
    let mut index: BTreeMap<(u32, u32), u32> = BTreeMap::new();
    let mut push = |labels: &mut Vec<PointLabel>, x: u32, y: u32| {
        let key = (x.min(y), x.max(y));
        let id = labels.len() as u32;
        labels.push(PointLabel::pair(x, y));
        index.insert(key, id);
    };
    push(&mut labels, a, b); // the point p
    for i in 1..=n {
        push(&mut labels, i, a); // a_i
    }
    for i in 1..=n {
        push(&mut labels, i, b); // b_i
    }
    let base: Vec<u32> = (1..=n).collect();
    for (i, j) in sub2(&base) {
        push(&mut labels, i, j); // c_{i,j}
    }

    let pt = |x: u32, y: u32| index[&(x.min(y), x.max(y))];
    let mut lines: Vec<[u32; 3]> = Vec::new();
    for i in 1..=n {
        lines.push(sorted3(pt(a, b), pt(i, a), pt(i, b)));
    }
    for (i, j) in sub2(&base) {
        if graph.has_edge(i, j) {
            lines.push(sorted3(pt(i, a), pt(j, a), pt(i, j)));
            lines.push(sorted3(pt(i, b), pt(j, b), pt(i, j)));
        } else {
            lines.push(sorted3(pt(i, a), pt(j, b), pt(i, j)));
            lines.push(sorted3(pt(i, b), pt(j, a), pt(i, j)));
        }
    }
    for z in sub3(&base) {
        lines.push(sorted3(
            pt(z[0], z[1]),
            pt(z[0], z[2]),
            pt(z[1], z[2]),
        ));
    }
    lines.sort_unstable();
    Ok(Configuration::from_triples(labels, lines))
}

fn sorted3(a: u32, b: u32, c: u32) -> [u32; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// The combinatorial Veronesian V(3,k): points are the multisets
/// `a^i b^j c^m` with `i+j+m = k`, lines are the triples `e·X^i`.
pub fn veronesian(k: u32) -> Result<Configuration> {
    if k < 1 {
        return Err(Error::BadSize("veronesian requires k >= 1".into()));
    }
    let mut labels = Vec::new();
    let mut index: BTreeMap<(u32, u32, u32), u32> = BTreeMap::new();
    for i in (0..=k).rev() {
        for j in (0..=k - i).rev() {
            let m = k - i - j;
            index.insert((i, j, m), labels.len() as u32);
            labels.push(PointLabel::Multiset { a: i, b: j, c: m });
        }
    }
    let mut lines: Vec<[u32; 3]> = Vec::new();
    for i in 1..=k {
        let r = k - i; // multisets e with |e| = r
        for ea in 0..=r {
            for eb in 0..=r - ea {
                let ec = r - ea - eb;
                lines.push(sorted3(
                    index[&(ea + i, eb, ec)],
                    index[&(ea, eb + i, ec)],
                    index[&(ea, eb, ec + i)],
                ));
            }
        }
    }
    lines.sort_unstable();
    Ok(Configuration::from_triples(labels, lines))
}

/// The dual combinatorial Veronesian V*(n,3): the multi-veblen
/// configuration steered by the empty graph.
pub fn dual_veronesian(n: u32) -> Result<Configuration> {
    multi_veblen(&SimpleGraph::empty(n))
}

/// K_X +^μ V: glues the complete graph on X = {1..n} to a configuration
/// `core` of shape B(n,0) through a bijection `mu` from the 2-subsets of X
/// onto the points of `core`. Labels use W = X ∪ {0}: the vertex x becomes
/// {0,x} and the core point μ({x,y}) becomes {x,y}.
pub fn graph_sum(
    n: u32,
    core: &Configuration,
    mu: &BTreeMap<(u32, u32), u32>,
) -> Result<Configuration> {
    let report = validate_psts(core);
    let matches = report
        .binomial
        .map(|b| b.order() == n)
        .unwrap_or(false);
    if !matches {
        return Err(Error::SizeMismatch(format!(
            "core is not a binomial configuration of order {n}"
        )));
    }
    let base: Vec<u32> = (1..=n).collect();
    let pairs = sub2(&base);
    if mu.len() != pairs.len() || !pairs.iter().all(|p| mu.contains_key(p)) {
        return Err(Error::MuNotBijective);
    }
    let mut inverse: BTreeMap<u32, (u32, u32)> = BTreeMap::new();
    for (&pair, &v) in mu {
        if v as usize >= core.points() || inverse.insert(v, pair).is_some() {
            return Err(Error::MuNotBijective);
        }
    }

    let mut labels: Vec<PointLabel> = Vec::new();
    for x in 1..=n {
        labels.push(PointLabel::pair(0, x));
    }
    for v in 0..core.points() as u32 {
        let (x, y) = inverse[&v];
        labels.push(PointLabel::pair(x, y));
    }
    let shift = n;
    let mut lines: Vec<[u32; 3]> = core
        .lines()
        .iter()
        .map(|t| [t[0] + shift, t[1] + shift, t[2] + shift])
        .collect();
    for &(x, y) in &pairs {
        lines.push(sorted3(x - 1, y - 1, mu[&(x, y)] + shift));
    }
    lines.sort_unstable();
    Ok(Configuration::from_triples(labels, lines))
}

/// `graph_sum` with the index-order bijection: the k-th pair of X in
/// lexicographic order maps to core point k.
pub fn graph_sum_by_index(n: u32, core: &Configuration) -> Result<Configuration> {
    let base: Vec<u32> = (1..=n).collect();
    let mu = sub2(&base)
        .into_iter()
        .enumerate()
        .map(|(k, p)| (p, k as u32))
        .collect();
    graph_sum(n, core, &mu)
}

/// The data of a system of perspectives m ⋈ᵘξ B: an index set I = {1..m},
/// a base set X disjoint from I, an axis configuration B on the 2-subsets
/// of X, per-index bijections μ_i from Sub₂(X) onto the points of B, and
/// perspectivities ξ(i,j) permuting X.
#[derive(Clone, Debug)]
pub struct PerspectiveData {
    m: u32,
    base: Vec<u32>,
    axis: Configuration,
    mu: Vec<BTreeMap<(u32, u32), u32>>,
    xi: BTreeMap<(u32, u32), BTreeMap<u32, u32>>,
    axis_pairs: Vec<(u32, u32)>,
    axis_natively_paired: bool,
}

impl PerspectiveData {
    pub fn new(
        m: u32,
        base: Vec<u32>,
        axis: Configuration,
        mu: Vec<BTreeMap<(u32, u32), u32>>,
        xi: BTreeMap<(u32, u32), BTreeMap<u32, u32>>,
    ) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvariantViolation("need m >= 1".into()));
        }
        let base_set: BTreeSet<u32> = base.iter().copied().collect();
        if base_set.len() != base.len() || base.is_empty() {
            return Err(Error::InvariantViolation("base set has repeats".into()));
        }
        if (1..=m).any(|i| base_set.contains(&i)) {
            return Err(Error::InvariantViolation(
                "base set must be disjoint from the index set 1..=m".into(),
            ));
        }
        let report = validate_psts(&axis);
        let order_ok = report
            .binomial
            .map(|b| b.order() as usize == base.len())
            .unwrap_or(false);
        if !report.is_psts || !order_ok {
            return Err(Error::InvariantViolation(format!(
                "axis is not a binomial configuration of order {}",
                base.len()
            )));
        }

        let pairs = sub2(&base);
        if mu.len() != m as usize {
            return Err(Error::InvariantViolation("need one mu per index".into()));
        }
        for (i, mu_i) in mu.iter().enumerate() {
            if mu_i.len() != pairs.len() || !pairs.iter().all(|p| mu_i.contains_key(p)) {
                return Err(Error::InvariantViolation(format!(
                    "mu_{} is not defined on exactly the 2-subsets of the base",
                    i + 1
                )));
            }
            let mut seen = BTreeSet::new();
            for &v in mu_i.values() {
                if v as usize >= axis.points() || !seen.insert(v) {
                    return Err(Error::InvariantViolation(format!(
                        "mu_{} is not a bijection onto the axis points",
                        i + 1
                    )));
                }
            }
        }

        for i in 1..=m {
            for j in 1..=m {
                if i == j {
                    continue;
                }
                let fwd = xi.get(&(i, j)).ok_or_else(|| {
                    Error::InvariantViolation(format!("xi({i},{j}) is missing"))
                })?;
                let is_perm = fwd.len() == base.len()
                    && fwd.keys().all(|k| base_set.contains(k))
                    && fwd.values().collect::<BTreeSet<_>>().len() == base.len()
                    && fwd.values().all(|v| base_set.contains(v));
                if !is_perm {
                    return Err(Error::InvariantViolation(format!(
                        "xi({i},{j}) is not a permutation of the base set"
                    )));
                }
                let bwd = xi.get(&(j, i)).ok_or_else(|| {
                    Error::InvariantViolation(format!("xi({j},{i}) is missing"))
                })?;
                for (&x, &y) in fwd {
                    if bwd.get(&y) != Some(&x) {
                        return Err(Error::InvariantViolation(format!(
                            "xi({j},{i}) is not the inverse of xi({i},{j})"
                        )));
                    }
                }
            }
        }

        // Axis points as 2-subsets of X: natively when the labels already
        // form Sub₂(X), otherwise through the coimage under mu_1.
        let native = axis_pair_labels(&axis, &base_set);
        let (axis_pairs, axis_natively_paired) = match native {
            Some(pairs) => (pairs, true),
            None => {
                let mut out = vec![(0, 0); axis.points()];
                for (&pair, &v) in &mu[0] {
                    out[v as usize] = pair;
                }
                (out, false)
            }
        };

        Ok(PerspectiveData {
            m,
            base,
            axis,
            mu,
            xi,
            axis_pairs,
            axis_natively_paired,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn base(&self) -> &[u32] {
        &self.base
    }

    pub fn axis(&self) -> &Configuration {
        &self.axis
    }

    pub fn axis_natively_paired(&self) -> bool {
        self.axis_natively_paired
    }

    /// The 2-subset of X standing for each axis point.
    pub fn axis_pair(&self, point: u32) -> (u32, u32) {
        self.axis_pairs[point as usize]
    }

    pub fn mu(&self, i: u32) -> &BTreeMap<(u32, u32), u32> {
        &self.mu[(i - 1) as usize]
    }

    /// ξ(i,j) applied to a base element; ξ(i,i) is the identity.
    pub fn xi(&self, i: u32, j: u32, x: u32) -> u32 {
        if i == j {
            x
        } else {
            self.xi[&(i, j)][&x]
        }
    }

    /// The union W = X ∪ I over which the result is pair-labeled.
    pub fn ground(&self) -> BTreeSet<u32> {
        let mut w: BTreeSet<u32> = (1..=self.m).collect();
        w.extend(self.base.iter().copied());
        w
    }

    /// The parameter n of the resulting B(n,+1) configuration.
    pub fn n(&self) -> u32 {
        self.m + self.base.len() as u32 - 1
    }
}

fn axis_pair_labels(axis: &Configuration, base: &BTreeSet<u32>) -> Option<Vec<(u32, u32)>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(axis.points());
    for l in axis.labels() {
        let (x, y) = l.as_pair()?;
        if !base.contains(&x) || !base.contains(&y) || !seen.insert((x, y)) {
            return None;
        }
        out.push((x, y));
    }
    let w = base.len();
    if out.len() == w * (w - 1) / 2 {
        Some(out)
    } else {
        None
    }
}

/// Builds the system of perspectives described by `data`: points are the
/// axis points, the simplex points (x,i), and the 2-subsets of I, all
/// identified with 2-subsets of W = X ∪ I; the four line families are the
/// axis lines, the lines of G(I,2), the perspectivity triples, and the
/// simplex triples.
pub fn perspective_system(data: &PerspectiveData) -> Result<Configuration> {
    let m = data.m();
    let base = data.base();
    let axis = data.axis();
    let z = axis.points() as u32;

    let mut labels: Vec<PointLabel> = Vec::new();
    for v in 0..z {
        let (x, y) = data.axis_pair(v);
        labels.push(PointLabel::pair(x, y));
    }
    let mut simplex_index: BTreeMap<(u32, u32), u32> = BTreeMap::new(); // (x, i)
    for i in 1..=m {
        for &x in base {
            simplex_index.insert((x, i), labels.len() as u32);
            labels.push(PointLabel::pair(x, i));
        }
    }
    let index_set: Vec<u32> = (1..=m).collect();
    let mut pair_index: BTreeMap<(u32, u32), u32> = BTreeMap::new();
    for (i, j) in sub2(&index_set) {
        pair_index.insert((i, j), labels.len() as u32);
        labels.push(PointLabel::pair(i, j));
    }

    let mut lines: Vec<[u32; 3]> = axis.lines().to_vec();
    for t in sub3(&index_set) {
        lines.push(sorted3(
            pair_index[&(t[0], t[1])],
            pair_index[&(t[0], t[2])],
            pair_index[&(t[1], t[2])],
        ));
    }
    for (i, j) in sub2(&index_set) {
        for &x in base {
            let y = data.xi(i, j, x);
            lines.push(sorted3(
                pair_index[&(i, j)],
                simplex_index[&(x, i)],
                simplex_index[&(y, j)],
            ));
        }
    }
    for i in 1..=m {
        for pair in sub2(base) {
            lines.push(sorted3(
                simplex_index[&(pair.0, i)],
                simplex_index[&(pair.1, i)],
                data.mu(i)[&pair],
            ));
        }
    }
    lines.sort_unstable();
    let cfg = Configuration::new(labels, lines.iter().map(|t| t.to_vec()).collect())?;

    let n = data.n();
    let report = validate_psts(&cfg);
    let ok = report.is_psts
        && report
            .binomial
            .map(|b| b.order() == n + 1)
            .unwrap_or(false);
    if !ok {
        return Err(Error::ValidationFailed(format!(
            "perspective system is not a binomial configuration of order {}",
            n + 1
        )));
    }
    Ok(cfg)
}

/// The system of perspectives of m tetrahedra: I = {1..m}, X the four
/// elements {m+1..m+4} standing for a, a', b, b', the axis the Veblen
/// configuration on Sub₂(X), μ the label identity, and every ξ(i,j) the
/// double swap (a a')(b b').
pub fn tetrahedra_data(m: u32) -> Result<PerspectiveData> {
    if m < 1 {
        return Err(Error::BadSize("tetrahedra requires m >= 1".into()));
    }
    let base: Vec<u32> = (m + 1..=m + 4).collect();
    let axis = pair_configuration(&base);
    let mu_identity: BTreeMap<(u32, u32), u32> = sub2(&base)
        .into_iter()
        .enumerate()
        .map(|(k, p)| (p, k as u32))
        .collect();
    let mu = vec![mu_identity; m as usize];
    let swap: BTreeMap<u32, u32> = [
        (base[0], base[1]),
        (base[1], base[0]),
        (base[2], base[3]),
        (base[3], base[2]),
    ]
    .into_iter()
    .collect();
    let mut xi = BTreeMap::new();
    for i in 1..=m {
        for j in 1..=m {
            if i != j {
                xi.insert((i, j), swap.clone());
            }
        }
    }
    PerspectiveData::new(m, base, axis, mu, xi)
}

pub fn tetrahedra(m: u32) -> Result<Configuration> {
    perspective_system(&tetrahedra_data(m)?)
}

/// The quasi Grassmannian R_n as a system of perspectives: the index set
/// stands for X₀ (with index m for the element 0 when n is odd), the base
/// is Y relabeled to start after the index set, μ is the identity, ξ
/// between the indices 1 and 2 swaps each block {y, y+1}, and ξ towards
/// the third index is the identity.
pub fn quasi_grassmannian_data(n: u32) -> Result<PerspectiveData> {
    if n < 6 {
        return Err(Error::BadSize(
            "the perspective form of R_n requires n >= 6".into(),
        ));
    }
    let even = n.is_multiple_of(2);
    let m = if even { 2 } else { 3 };
    let k = if even { n / 2 } else { (n - 1) / 2 };
    let base: Vec<u32> = (m + 1..=m + (2 * k - 2)).collect();
    let axis = pair_configuration(&base);
    let mu_identity: BTreeMap<(u32, u32), u32> = sub2(&base)
        .into_iter()
        .enumerate()
        .map(|(q, p)| (p, q as u32))
        .collect();
    let mu = vec![mu_identity; m as usize];

    let mut swap: BTreeMap<u32, u32> = BTreeMap::new();
    let mut it = base.iter();
    while let (Some(&u), Some(&v)) = (it.next(), it.next()) {
        swap.insert(u, v);
        swap.insert(v, u);
    }
    let identity: BTreeMap<u32, u32> = base.iter().map(|&x| (x, x)).collect();
    let mut xi = BTreeMap::new();
    xi.insert((1, 2), swap.clone());
    xi.insert((2, 1), swap);
    if !even {
        for i in [1u32, 2] {
            xi.insert((i, 3), identity.clone());
            xi.insert((3, i), identity.clone());
        }
    }
    PerspectiveData::new(m, base, axis, mu, xi)
}

/// The combinatorial Veronesian V(3,k) as a system of perspectives of
/// three (k-1)-simplices over the axis of fully-supported multisets.
/// Index i of I stands for the i-th letter in the cyclic order a, b, c;
/// base element s+3 stands for the exponent s in 1..=k-1.
pub fn veronesian_perspective_data(k: u32) -> Result<PerspectiveData> {
    if k < 3 {
        return Err(Error::BadSize(
            "the perspective form of V(3,k) requires k >= 3".into(),
        ));
    }
    let m = 3u32;
    let base: Vec<u32> = (4..=k + 2).collect(); // s -> s + 3

    // mu_z({i,j}) for exponents i < j is the multiset x^i y^(k-j) z^(j-i),
    // where (x,y) are the letters following z in the cyclic order a,b,c.
    let letters = |z: u32| -> (usize, usize, usize) {
        match z {
            1 => (1, 2, 0), // z = a: x = b, y = c
            2 => (2, 0, 1), // z = b: x = c, y = a
            _ => (0, 1, 2), // z = c: x = a, y = b
        }
    };
    let multiset = |z: u32, s: u32, t: u32| -> (u32, u32, u32) {
        let (xi_, yi_, zi_) = letters(z);
        let (lo, hi) = (s.min(t), s.max(t));
        let mut exps = [0u32; 3];
        exps[xi_] = lo;
        exps[yi_] = k - hi;
        exps[zi_] = hi - lo;
        (exps[0], exps[1], exps[2])
    };

    // The axis: points indexed by Sub₂(base) through the mu_1 coimage,
    // lines pulled back from the fully-supported part of V(3,k).
    let pairs = sub2(&base);
    let pair_index: BTreeMap<(u32, u32), u32> = pairs
        .iter()
        .enumerate()
        .map(|(q, &p)| (p, q as u32))
        .collect();
    let mut multiset_to_axis: BTreeMap<(u32, u32, u32), u32> = BTreeMap::new();
    for &(u, v) in &pairs {
        let ms = multiset(1, u - 3, v - 3);
        multiset_to_axis.insert(ms, pair_index[&(u, v)]);
    }
    let mut axis_lines: Vec<[u32; 3]> = Vec::new();
    // lines e·X^t with every letter of e positive
    for t in 1..=k.saturating_sub(3) {
        let r = k - t;
        for ea in 1..=r - 2 {
            for eb in 1..=r - 1 - ea {
                let ec = r - ea - eb;
                if ec < 1 {
                    continue;
                }
                axis_lines.push(sorted3(
                    multiset_to_axis[&(ea + t, eb, ec)],
                    multiset_to_axis[&(ea, eb + t, ec)],
                    multiset_to_axis[&(ea, eb, ec + t)],
                ));
            }
        }
    }
    axis_lines.sort_unstable();
    let axis_labels = pairs
        .iter()
        .map(|&(x, y)| PointLabel::pair(x, y))
        .collect();
    let axis = Configuration::from_triples(axis_labels, axis_lines);

    let mut mu = Vec::new();
    for z in 1..=3u32 {
        let mut map = BTreeMap::new();
        for &(u, v) in &pairs {
            let ms = multiset(z, u - 3, v - 3);
            map.insert((u, v), multiset_to_axis[&ms]);
        }
        mu.push(map);
    }

    // xi(i,j)(s) = k - s for i != j, on the shifted base
    let mirror: BTreeMap<u32, u32> = base.iter().map(|&x| (x, k - (x - 3) + 3)).collect();
    let mut xi = BTreeMap::new();
    for i in 1..=m {
        for j in 1..=m {
            if i != j {
                xi.insert((i, j), mirror.clone());
            }
        }
    }
    PerspectiveData::new(m, base, axis, mu, xi)
}
