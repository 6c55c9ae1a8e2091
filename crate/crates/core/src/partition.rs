//! The ⋔ operation on point sets, partition hyperplanes H(A'|A''), and
//! ⋔-generated subalgebras.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::incidence::Configuration;
use crate::point_set::PointSet;

/// `y1 ⋔ y2 = (y1 ∩ y2) ∪ (S∖y1 ∩ S∖y2)`: the complement of the symmetric
/// difference. The ambient set is implicit in the width.
pub fn hipcap(y1: &PointSet, y2: &PointSet) -> Result<PointSet> {
    y1.meet(y2)
}

/// A bipartition `A | W∖A` of a labeled base set `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSpec {
    ground: BTreeSet<u32>,
    part: BTreeSet<u32>,
}

impl PartitionSpec {
    pub fn new<G, P>(ground: G, part: P) -> Result<Self>
    where
        G: IntoIterator<Item = u32>,
        P: IntoIterator<Item = u32>,
    {
        let ground: BTreeSet<u32> = ground.into_iter().collect();
        let part: BTreeSet<u32> = part.into_iter().collect();
        if !part.is_subset(&ground) {
            return Err(Error::SizeMismatch(
                "partition part is not a subset of the ground set".into(),
            ));
        }
        Ok(PartitionSpec { ground, part })
    }

    pub fn ground(&self) -> &BTreeSet<u32> {
        &self.ground
    }

    pub fn part(&self) -> &BTreeSet<u32> {
        &self.part
    }

    /// Both sides nonvoid, as required of a hyperplane candidate.
    pub fn is_proper(&self) -> bool {
        !self.part.is_empty() && self.part.len() < self.ground.len()
    }

    pub fn complemented(&self) -> Self {
        PartitionSpec {
            ground: self.ground.clone(),
            part: self.ground.difference(&self.part).copied().collect(),
        }
    }
}

/// The base set underlying a configuration whose points are labeled by
/// exactly the 2-subsets of some set `W`.
pub fn pair_base_set(cfg: &Configuration) -> Result<BTreeSet<u32>> {
    let mut base = BTreeSet::new();
    let mut pairs = BTreeSet::new();
    for l in cfg.labels() {
        let (x, y) = l.as_pair().ok_or(Error::LabelsNotPairs)?;
        base.insert(x);
        base.insert(y);
        pairs.insert((x, y));
    }
    let w = base.len();
    if pairs.len() != cfg.points() || cfg.points() != w * (w - 1) / 2 {
        return Err(Error::NotFullPairSet);
    }
    Ok(base)
}

/// `H(A | W∖A) = Sub₂(A) ∪ Sub₂(W∖A)`: the points whose pair label lies
/// inside `A` or inside its complement.
pub fn partition_hyperplane(cfg: &Configuration, spec: &PartitionSpec) -> Result<PointSet> {
    let base = pair_base_set(cfg)?;
    if base != *spec.ground() {
        return Err(Error::SizeMismatch(
            "partition ground set differs from the label base set".into(),
        ));
    }
    let mut out = cfg.empty_set();
    for (k, l) in cfg.labels().iter().enumerate() {
        let (x, y) = l.as_pair().expect("checked above");
        if spec.part.contains(&x) == spec.part.contains(&y) {
            out.insert(k as u32);
        }
    }
    Ok(out)
}

/// The ⋔-closure of the generators, excluding the full ambient set, in
/// lexicographic order on bit vectors. Closure is capped at 2^25 elements.
pub fn generate_subalgebra(
    generators: &[PointSet],
    ambient: &Configuration,
) -> Result<Vec<PointSet>> {
    const CAP: usize = 1 << 25;
    let width = ambient.points();
    for g in generators {
        if g.width() != width {
            return Err(Error::WidthMismatch(g.width(), width));
        }
    }
    let full = ambient.full_set();
    let mut closed: BTreeSet<PointSet> = generators
        .iter()
        .filter(|g| **g != full)
        .cloned()
        .collect();
    let mut frontier: Vec<PointSet> = closed.iter().cloned().collect();
    while let Some(y) = frontier.pop() {
        let others: Vec<PointSet> = closed.iter().cloned().collect();
        for z in others {
            let m = y.meet(&z)?;
            if m != full && !closed.contains(&m) {
                if closed.len() >= CAP {
                    return Err(Error::SearchBudgetExceeded(CAP as u64));
                }
                closed.insert(m.clone());
                frontier.push(m);
            }
        }
    }
    Ok(closed.into_iter().collect())
}

/// Evaluates `H(A | W∖A)` directly against a subset `a` of the label base
/// set, without constructing a `PartitionSpec`.
pub fn partition_set(cfg: &Configuration, a: &BTreeSet<u32>) -> PointSet {
    let mut out = cfg.empty_set();
    for (k, l) in cfg.labels().iter().enumerate() {
        if let Some((x, y)) = l.as_pair() {
            if a.contains(&x) == a.contains(&y) {
                out.insert(k as u32);
            }
        }
    }
    out
}

/// All hyperplane-sized partition sets, indexed by their canonical `A`.
/// Used by the decomposition search: brute force over subsets of `W`.
pub fn all_partition_sets(cfg: &Configuration) -> Result<Vec<(BTreeSet<u32>, PointSet)>> {
    let base = pair_base_set(cfg)?;
    let elems: Vec<u32> = base.iter().copied().collect();
    let w = elems.len();
    assert!(w <= 20, "partition search over {w} elements is out of scale");
    let mut by_set: HashMap<PointSet, BTreeSet<u32>> = HashMap::new();
    for mask in 0u32..(1 << w) {
        let a: BTreeSet<u32> = elems
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let set = partition_set(cfg, &a);
        match by_set.entry(set) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let keep = canonical_side(e.get(), &a, &base);
                if keep != *e.get() {
                    e.insert(keep);
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(a);
            }
        }
    }
    let mut out: Vec<(BTreeSet<u32>, PointSet)> =
        by_set.into_iter().map(|(s, a)| (a, s)).collect();
    out.sort_by(|l, r| l.1.cmp(&r.1));
    Ok(out)
}

/// Of the two equivalent sides `A` and `W∖A`, prefer the smaller, then
/// the one without the smallest base element (0 when present), then the
/// lexicographically least.
pub fn canonical_side(
    a: &BTreeSet<u32>,
    b: &BTreeSet<u32>,
    ground: &BTreeSet<u32>,
) -> BTreeSet<u32> {
    let lowest = *ground.iter().next().expect("nonempty ground");
    let key = |s: &BTreeSet<u32>| {
        (
            s.len(),
            s.contains(&lowest),
            s.iter().copied().collect::<Vec<u32>>(),
        )
    };
    if key(a) <= key(b) {
        a.clone()
    } else {
        b.clone()
    }
}
