//! Isomorph-free exhaustive generation of binomial configurations by
//! orderly search: line sets grow in colex order, and a partial set is
//! extended only while it is the lexicographically least labeling of its
//! isomorphism class. Removing the colex-greatest line of a canonical set
//! leaves a canonical set, so every class is produced exactly once.

use crate::budget::search_budget;
use crate::canon::{canonical_form, GeometrySignature};
use crate::error::{Error, Result};
use crate::incidence::{binom, Configuration};
use crate::label::PointLabel;

fn colex_key(t: &[u32; 3]) -> (u32, u32, u32) {
    (t[2], t[1], t[0])
}

fn colex_triples(points: usize) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for c in 2..points as u32 {
        for b in 1..c {
            for a in 0..b {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Whether some relabeling of the points produces a strictly smaller
/// line list, comparing the colex-sorted lists elementwise.
fn exists_smaller_labeling(lines: &[[u32; 3]], points: usize) -> bool {
    let mut lines_through = vec![Vec::new(); points];
    for (k, t) in lines.iter().enumerate() {
        for &p in t {
            lines_through[p as usize].push(k as u32);
        }
    }
    let mut new_of_old = vec![u32::MAX; points];
    let mut old_of_new: Vec<u32> = Vec::with_capacity(points);
    dfs_smaller(
        lines,
        &lines_through,
        &mut new_of_old,
        &mut old_of_new,
        0,
    )
}

fn dfs_smaller(
    lines: &[[u32; 3]],
    lines_through: &[Vec<u32>],
    new_of_old: &mut Vec<u32>,
    old_of_new: &mut Vec<u32>,
    determined: usize,
) -> bool {
    let points = new_of_old.len();
    let j = old_of_new.len() as u32;
    if j as usize == points {
        return false; // a complete relabeling that ties is an automorphism
    }
    // every line still open completes under a label >= j, so its colex key
    // is at least (j,..); once the next target triple sits strictly below
    // that, no extension can tie or beat the target
    if determined < lines.len() && lines[determined][2] < j {
        return false;
    }
    for p in 0..points as u32 {
        if new_of_old[p as usize] != u32::MAX {
            continue;
        }
        new_of_old[p as usize] = j;
        old_of_new.push(p);

        let mut completed: Vec<[u32; 3]> = Vec::new();
        for &k in &lines_through[p as usize] {
            let t = &lines[k as usize];
            if t.iter().all(|&q| new_of_old[q as usize] != u32::MAX) {
                let mut m = [
                    new_of_old[t[0] as usize],
                    new_of_old[t[1] as usize],
                    new_of_old[t[2] as usize],
                ];
                m.sort_unstable();
                completed.push(m);
            }
        }
        completed.sort_by_key(colex_key);

        let mut verdict_deeper = completed.len() <= lines.len() - determined;
        if verdict_deeper {
            for (k, m) in completed.iter().enumerate() {
                match colex_key(m).cmp(&colex_key(&lines[determined + k])) {
                    std::cmp::Ordering::Less => {
                        new_of_old[p as usize] = u32::MAX;
                        old_of_new.pop();
                        return true;
                    }
                    std::cmp::Ordering::Greater => {
                        verdict_deeper = false;
                        break;
                    }
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        if verdict_deeper
            && dfs_smaller(
                lines,
                lines_through,
                new_of_old,
                old_of_new,
                determined + completed.len(),
            )
        {
            new_of_old[p as usize] = u32::MAX;
            old_of_new.pop();
            return true;
        }
        new_of_old[p as usize] = u32::MAX;
        old_of_new.pop();
    }
    false
}

struct CensusSearch {
    points: usize,
    target_lines: usize,
    rank: u32,
    colex: Vec<[u32; 3]>,
    max_idx_containing: Vec<usize>,
    chosen: Vec<[u32; 3]>,
    pair_used: Vec<bool>,
    ranks: Vec<u32>,
    out: Vec<Configuration>,
    nodes: u64,
    budget: u64,
}

impl CensusSearch {
    fn pair_slot(&self, p: u32, q: u32) -> usize {
        let (a, b) = (p.min(q) as usize, p.max(q) as usize);
        a * self.points + b
    }

    fn feasible_after(&self, last_idx: usize) -> bool {
        let remaining = (self.target_lines - self.chosen.len()) as u32;
        for p in 0..self.points as u32 {
            let deficit = self.rank - self.ranks[p as usize];
            if deficit == 0 {
                continue;
            }
            if deficit > remaining {
                return false;
            }
            if self.max_idx_containing[p as usize] <= last_idx {
                return false;
            }
            let fresh = (0..self.points as u32)
                .filter(|&q| q != p && !self.pair_used[self.pair_slot(p, q)])
                .count() as u32;
            if fresh < 2 * deficit {
                return false;
            }
        }
        true
    }

    fn recurse(&mut self, last_idx: Option<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded(self.budget));
        }
        if self.chosen.len() == self.target_lines {
            let labels = (0..self.points)
                .map(|i| PointLabel::Atom(format!("p{i}")))
                .collect();
            let mut lines = self.chosen.clone();
            lines.sort_unstable();
            self.out.push(Configuration::from_triples(labels, lines));
            return Ok(());
        }
        let start = last_idx.map(|i| i + 1).unwrap_or(0);
        for idx in start..self.colex.len() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded(self.budget));
            }
            let t = self.colex[idx];
            if t.iter().any(|&p| self.ranks[p as usize] >= self.rank) {
                continue;
            }
            let slots = [
                self.pair_slot(t[0], t[1]),
                self.pair_slot(t[0], t[2]),
                self.pair_slot(t[1], t[2]),
            ];
            if slots.iter().any(|&s| self.pair_used[s]) {
                continue;
            }
            for &s in &slots {
                self.pair_used[s] = true;
            }
            for &p in &t {
                self.ranks[p as usize] += 1;
            }
            self.chosen.push(t);

            if self.feasible_after(idx) && !exists_smaller_labeling(&self.chosen, self.points) {
                self.recurse(Some(idx))?;
            }

            self.chosen.pop();
            for &p in &t {
                self.ranks[p as usize] -= 1;
            }
            for &s in &slots {
                self.pair_used[s] = false;
            }
        }
        Ok(())
    }
}

/// All binomial configurations of order `n` up to isomorphism, as
/// signature/representative pairs ordered by certificate bytes.
pub fn generate_all_binomial(n: u32) -> Result<Vec<(GeometrySignature, Configuration)>> {
    if !(3..=6).contains(&n) {
        return Err(Error::BadSize(format!(
            "census is desk-scale: 3 <= n <= 6, got {n}"
        )));
    }
    let points = binom(n as u64, 2) as usize;
    let target_lines = binom(n as u64, 3) as usize;
    let rank = n - 2;
    let colex = colex_triples(points);
    let mut max_idx_containing = vec![0usize; points];
    for (idx, t) in colex.iter().enumerate() {
        for &p in t {
            max_idx_containing[p as usize] = idx;
        }
    }
    let mut search = CensusSearch {
        points,
        target_lines,
        rank,
        colex,
        max_idx_containing,
        chosen: Vec::new(),
        pair_used: vec![false; points * points],
        ranks: vec![0; points],
        out: Vec::new(),
        nodes: 0,
        budget: search_budget(),
    };
    search.recurse(None)?;
    let mut results = Vec::with_capacity(search.out.len());
    for cfg in search.out {
        results.push((canonical_form(&cfg)?, cfg));
    }
    results.sort_by(|a, b| a.0.certificate().cmp(b.0.certificate()));
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{are_isomorphic, raw_certificate};
    use crate::families::desargues;
    use crate::incidence::validate_psts;

    #[test]
    fn order_four_has_exactly_the_veblen_configuration() {
        let classes = generate_all_binomial(4).unwrap();
        assert_eq!(classes.len(), 1);
        assert!(are_isomorphic(&classes[0].1, &desargues(4).unwrap()));
    }

    /// Brute-force oracle for the order-4 census: every 4-subset of the
    /// candidate triples over 6 points, filtered by the axioms, counted
    /// up to isomorphism.
    #[test]
    fn order_four_census_matches_brute_force() {
        let all = colex_triples(6);
        let mut certs = std::collections::BTreeSet::new();
        let k = all.len();
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    'last: for d in c + 1..k {
                        let lines = [all[a], all[b], all[c], all[d]];
                        let mut pair_seen = std::collections::BTreeSet::new();
                        let mut ranks = [0u32; 6];
                        for t in &lines {
                            for (p, q) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                                if !pair_seen.insert((p, q)) {
                                    continue 'last;
                                }
                            }
                            for &p in t {
                                ranks[p as usize] += 1;
                            }
                        }
                        if ranks.iter().any(|&r| r != 2) {
                            continue;
                        }
                        let labels = (0..6)
                            .map(|i| PointLabel::Atom(format!("p{i}")))
                            .collect();
                        let mut sorted = lines.to_vec();
                        sorted.sort_unstable();
                        let cfg = Configuration::from_triples(labels, sorted);
                        certs.insert(raw_certificate(&cfg));
                    }
                }
            }
        }
        assert_eq!(certs.len(), generate_all_binomial(4).unwrap().len());
    }

    #[test]
    fn order_five_has_ten_classes() {
        let classes = generate_all_binomial(5).unwrap();
        assert_eq!(classes.len(), 10);
        for (sig, cfg) in &classes {
            let report = validate_psts(cfg);
            assert!(report.is_psts);
            assert_eq!(report.binomial.unwrap().order(), 5);
            assert_eq!(sig.summary().points, 10);
        }
        // all distinct
        let certs: std::collections::BTreeSet<&[u8]> =
            classes.iter().map(|(s, _)| s.certificate()).collect();
        assert_eq!(certs.len(), 10);
    }
}
