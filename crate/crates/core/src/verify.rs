//! The verification suite: every headline quantity the library is built
//! around, recomputed from scratch with its tolerance pinned in code.
//! Each criterion yields one pass/fail line.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::canon::{are_isomorphic, raw_certificate};
use crate::catalog::catalog_103;
use crate::census::generate_all_binomial;
use crate::families::{
    desargues, dual_veronesian, graph_sum_by_index, multi_veblen, perspective_system,
    quasi_grassmannian, quasi_grassmannian_data, tetrahedra_data, veronesian,
    veronesian_perspective_data, PerspectiveData, SimpleGraph,
};
use crate::free_graphs::{
    check_partition_criteria, decompose_hyperplane, find_free_complete_graphs, graph_complement,
    is_freely_contained, maximum_free_graphs,
};
use crate::hyperplanes::{
    check_connected_or_split_hypothesis, enumerate_hyperplanes, veldkamp_space,
};
use crate::incidence::{components, is_hyperplane, restrict, star, validate_psts, Configuration};
use crate::label::PointLabel;
use crate::partition::{hipcap, partition_set};
use crate::point_set::PointSet;

type Check = std::result::Result<String, String>;

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    /// Set when the criterion could not run to completion under the
    /// configured search budget.
    pub skipped: bool,
    pub detail: String,
    pub seconds: f64,
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

type CriterionSpec = (u32, &'static str, fn() -> Check, f64);

/// Runs all twelve criteria and collects one result per criterion.
pub fn run_verify_suite() -> Vec<CriterionResult> {
    let checks: Vec<CriterionSpec> = vec![
        (1, "ten-three census", c01_census, 60.0),
        (2, "desargues veldkamp dimensions", c02_desargues_veldkamp, 300.0),
        (3, "quasi-grassmannian hyperplanes", c03_quasi_grassmannians, f64::INFINITY),
        (4, "veronesian hyperplanes", c04_veronesians, f64::INFINITY),
        (5, "perspective criteria equivalence", c05_criteria_equivalence, 60.0),
        (6, "decomposition over graph sums", c06_decomposition, f64::INFINITY),
        (7, "meet-algebra laws", c07_algebra_laws, f64::INFINITY),
        (8, "closure and count", c08_closure_and_count, f64::INFINITY),
        (9, "free-graph counts", c09_free_graph_counts, f64::INFINITY),
        (10, "isomorphism facts", c10_isomorphism_facts, f64::INFINITY),
        (11, "connected-or-split evidence", c11_hypothesis, f64::INFINITY),
        (12, "brute-force oracle equivalence", c12_brute_force, 120.0),
    ];
    checks
        .into_iter()
        .map(|(id, name, run, limit)| {
            let start = Instant::now();
            let outcome = run();
            let seconds = start.elapsed().as_secs_f64();
            let (passed, skipped, detail) = match outcome {
                Ok(detail) if seconds <= limit => (true, false, detail),
                Ok(detail) => (
                    false,
                    false,
                    format!("{detail}; exceeded the {limit:.0}s budget"),
                ),
                Err(detail) if detail.contains("search budget of") => {
                    (false, true, format!("SKIPPED: {detail}"))
                }
                Err(detail) => (false, false, detail),
            };
            CriterionResult {
                id,
                name,
                passed,
                skipped,
                detail,
                seconds,
            }
        })
        .collect()
}

fn c01_census() -> Check {
    let classes = generate_all_binomial(5).map_err(err)?;
    if classes.len() != 10 {
        return Err(format!("{} classes, expected 10", classes.len()));
    }
    let mut counts: Vec<usize> = classes
        .iter()
        .map(|(sig, _)| sig.summary().hyperplane_count)
        .collect();
    counts.sort_unstable_by(|a, b| b.cmp(a));
    let expected = vec![15, 7, 7, 3, 3, 1, 1, 0, 0, 0];
    if counts != expected {
        return Err(format!(
            "hyperplane multiset {counts:?}, expected {expected:?}"
        ));
    }
    Ok(format!("10 classes, hyperplane multiset {counts:?}"))
}

fn c02_desargues_veldkamp() -> Check {
    let mut detail = Vec::new();
    for (n, dim) in [(5u32, 3i32), (6, 4), (7, 5), (8, 6)] {
        let cfg = desargues(n).map_err(err)?;
        let vs = veldkamp_space(&cfg).map_err(err)?;
        let expected_count = (1usize << (dim + 1)) - 1;
        if vs.dimension != dim || vs.hyperplanes.len() != expected_count {
            return Err(format!(
                "G({n},2): {} hyperplanes of dimension {}, expected {expected_count} and {dim}",
                vs.hyperplanes.len(),
                vs.dimension
            ));
        }
        detail.push(format!("G({n},2)->PG({dim},2)"));
    }
    Ok(detail.join(", "))
}

fn quasi_template(cfg: &Configuration, n: u32) -> BTreeSet<PointSet> {
    let k = if n.is_multiple_of(2) { n / 2 } else { (n - 1) / 2 };
    let x0: Vec<u32> = if n.is_multiple_of(2) { vec![1, 2] } else { vec![0, 1, 2] };
    let blocks: Vec<[u32; 2]> = (2..=k).map(|t| [2 * t - 1, 2 * t]).collect();
    let mut out = BTreeSet::new();
    for a_mask in 0u32..(1 << x0.len()) {
        for j_mask in 0u32..(1 << blocks.len()) {
            let a_full = a_mask == (1 << x0.len()) - 1;
            let j_full = j_mask == (1u32 << blocks.len()) - 1;
            if (a_mask == 0 && j_mask == 0) || (a_full && j_full) {
                continue;
            }
            let mut part: BTreeSet<u32> = x0
                .iter()
                .enumerate()
                .filter(|(i, _)| a_mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            for (i, b) in blocks.iter().enumerate() {
                if j_mask >> i & 1 == 1 {
                    part.extend(b.iter().copied());
                }
            }
            out.insert(partition_set(cfg, &part));
        }
    }
    out
}

fn c03_quasi_grassmannians() -> Check {
    let mut reports = Vec::new();
    let mut all_match = true;
    for (n, expected) in [(6u32, 7usize), (7, 15), (8, 15), (9, 31)] {
        let cfg = quasi_grassmannian(n).map_err(err)?;
        let found: BTreeSet<PointSet> = enumerate_hyperplanes(&cfg)
            .map_err(err)?
            .into_iter()
            .collect();
        let template = quasi_template(&cfg, n);
        if !template.iter().all(|h| found.contains(h)) {
            all_match = false;
            reports.push(format!("R{n}: some block-template set is not a hyperplane"));
            continue;
        }
        if found == template && found.len() == expected {
            reports.push(format!("R{n}={expected}"));
        } else {
            all_match = false;
            reports.push(format!(
                "R{n}: {} hyperplanes, expected {expected} ({} template sets all \
                 verified; {} hyperplanes beyond the template)",
                found.len(),
                template.len(),
                found.len() - template.len()
            ));
        }
    }
    let detail = reports.join("; ");
    if all_match {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn veronesian_forms(cfg: &Configuration, k: u32) -> BTreeSet<PointSet> {
    let exps = |p: u32| match cfg.label(p) {
        PointLabel::Multiset { a, b, c } => [*a, *b, *c],
        _ => unreachable!("veronesian labels"),
    };
    let points = cfg.points() as u32;
    let mut out = BTreeSet::new();
    for u in 0..3usize {
        // H1(u) = u·msub_{k-1}: exponent of the letter u positive
        out.insert(PointSet::from_indices(
            cfg.points(),
            (0..points).filter(|&p| exps(p)[u] >= 1),
        ));
        // H2(u) = {u^k} ∪ xy·msub_{k-2}: both other letters positive
        out.insert(PointSet::from_indices(
            cfg.points(),
            (0..points).filter(|&p| {
                let e = exps(p);
                e[u] == k || (0..3).all(|w| w == u || e[w] >= 1)
            }),
        ));
    }
    // X^k ∪ abc·msub_{k-3}: the pure powers plus fully supported multisets
    out.insert(PointSet::from_indices(
        cfg.points(),
        (0..points).filter(|&p| {
            let e = exps(p);
            e.contains(&k) || e.iter().all(|&x| x >= 1)
        }),
    ));
    out
}

fn c04_veronesians() -> Check {
    let mut detail = Vec::new();
    for k in [3u32, 4, 5] {
        let cfg = veronesian(k).map_err(err)?;
        let found: BTreeSet<PointSet> = enumerate_hyperplanes(&cfg)
            .map_err(err)?
            .into_iter()
            .collect();
        if found.len() != 7 {
            return Err(format!("V(3,{k}): {} hyperplanes, expected 7", found.len()));
        }
        if veronesian_forms(&cfg, k) != found {
            return Err(format!("V(3,{k}): hyperplanes differ from the listed forms"));
        }
        detail.push(format!("V(3,{k})=7"));
    }
    // the 3-element anticlique is rejected
    let cfg = veronesian(3).map_err(err)?;
    let pick = |a: u32, b: u32, c: u32| {
        cfg.point_by_label(&PointLabel::Multiset { a, b, c })
            .expect("label present")
    };
    let anticlique = PointSet::from_indices(
        cfg.points(),
        [pick(2, 0, 1), pick(1, 2, 0), pick(0, 1, 2)],
    );
    if is_hyperplane(&cfg, &anticlique) {
        return Err("the anticlique triple was accepted as a hyperplane".into());
    }
    detail.push("anticlique rejected".into());
    Ok(detail.join(", "))
}

fn criteria_agree(data: &PerspectiveData) -> std::result::Result<usize, String> {
    let cfg = perspective_system(data).map_err(err)?;
    let base: Vec<u32> = data.base().to_vec();
    let mut checked = 0;
    for mask in 0u64..(1 << base.len()) {
        let a: BTreeSet<u32> = base
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        let verdict = check_partition_criteria(data, &a);
        let direct = is_hyperplane(&cfg, &partition_set(&cfg, &a));
        if verdict.hyperplane != direct {
            return Err(format!(
                "A = {a:?}: criteria say {}, direct test says {direct}",
                verdict.hyperplane
            ));
        }
        checked += 1;
    }
    Ok(checked)
}

fn c05_criteria_equivalence() -> Check {
    let mut total = 0;
    for m in [2u32, 3] {
        total += criteria_agree(&tetrahedra_data(m).map_err(err)?)
            .map_err(|e| format!("tetrahedra m={m}: {e}"))?;
    }
    total += criteria_agree(&quasi_grassmannian_data(6).map_err(err)?)
        .map_err(|e| format!("R6 realization: {e}"))?;
    total += criteria_agree(&veronesian_perspective_data(3).map_err(err)?)
        .map_err(|e| format!("V(3,3) realization: {e}"))?;
    Ok(format!("{total} subsets cross-checked"))
}

fn c06_decomposition() -> Check {
    let entries = catalog_103().map_err(err)?;
    let mut total = 0;
    for entry in &entries {
        let host = graph_sum_by_index(5, &entry.configuration)
            .map_err(|e| format!("{}: {e}", entry.name))?;
        for h in enumerate_hyperplanes(&host).map_err(err)? {
            decompose_hyperplane(&host, &h).map_err(|e| {
                format!("{} core: hyperplane failed to decompose: {e}", entry.name)
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} hyperplanes decomposed over 10 cores"))
}

fn c07_algebra_laws() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB575);
    for round in 0..10_000u32 {
        let width = 1 + (round % 48) as usize;
        let mask = (1u64 << width) - 1;
        let y = PointSet::from_mask(width, rng.gen::<u64>() & mask);
        let y1 = PointSet::from_mask(width, rng.gen::<u64>() & mask);
        let y2 = PointSet::from_mask(width, rng.gen::<u64>() & mask);
        let s = PointSet::full(width);
        let fail = |law: &str| Err(format!("law {law} failed at round {round}"));
        if hipcap(&y, &y).map_err(err)? != s {
            return fail("Y#Y=S");
        }
        if hipcap(&y, &s).map_err(err)? != y {
            return fail("Y#S=Y");
        }
        if hipcap(&y1, &y2).map_err(err)? != hipcap(&y2, &y1).map_err(err)? {
            return fail("commutativity");
        }
        if hipcap(&y1, &hipcap(&y1, &y2).map_err(err)?).map_err(err)? != y2 {
            return fail("cancellation");
        }
        let lhs = hipcap(&y1, &y2).map_err(err)?.intersection(&y2);
        if lhs != y1.intersection(&y2) {
            return fail("meet-intersection");
        }
        let left = hipcap(
            &hipcap(&y, &y1).map_err(err)?,
            &hipcap(&y, &y2).map_err(err)?,
        )
        .map_err(err)?;
        if left != hipcap(&y1, &y2).map_err(err)? {
            return fail("translation");
        }
    }
    // symmetric-difference composition, exhaustively over small bases
    let mut compositions = 0u64;
    for w in 3..=6u32 {
        let cfg = desargues(w).map_err(err)?;
        let ground: Vec<u32> = (1..=w).collect();
        for a_mask in 1u32..(1 << w) - 1 {
            for b_mask in 1u32..(1 << w) - 1 {
                if a_mask == b_mask {
                    continue;
                }
                let pick = |mask: u32| -> BTreeSet<u32> {
                    ground
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect()
                };
                let (a, b) = (pick(a_mask), pick(b_mask));
                let lhs =
                    hipcap(&partition_set(&cfg, &a), &partition_set(&cfg, &b)).map_err(err)?;
                let sym: BTreeSet<u32> = a.symmetric_difference(&b).copied().collect();
                if lhs != partition_set(&cfg, &sym) {
                    return Err(format!("composition law failed for A={a:?}, B={b:?}"));
                }
                compositions += 1;
            }
        }
    }
    Ok(format!(
        "10000 random rounds, {compositions} exhaustive compositions"
    ))
}

fn closure_instances() -> std::result::Result<Vec<(String, Configuration)>, String> {
    let mut out: Vec<(String, Configuration)> = Vec::new();
    for (k, (_, cfg)) in generate_all_binomial(5)
        .map_err(err)?
        .into_iter()
        .enumerate()
    {
        out.push((format!("census-{k}"), cfg));
    }
    for n in 4..=8u32 {
        out.push((format!("G({n},2)"), desargues(n).map_err(err)?));
    }
    for n in 4..=8u32 {
        out.push((format!("R{n}"), quasi_grassmannian(n).map_err(err)?));
    }
    for k in 1..=5u32 {
        out.push((format!("V(3,{k})"), veronesian(k).map_err(err)?));
    }
    for n in 2..=4u32 {
        out.push((format!("V*({n},3)"), dual_veronesian(n).map_err(err)?));
    }
    for n in [3u32, 4] {
        let base: Vec<u32> = (1..=n).collect();
        let pairs: Vec<(u32, u32)> = base
            .iter()
            .flat_map(|&x| base.iter().filter(move |&&y| y > x).map(move |&y| (x, y)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let graph = SimpleGraph::new(n, edges).map_err(err)?;
            out.push((
                format!("M(|X|={n},P={mask:#x})"),
                multi_veblen(&graph).map_err(err)?,
            ));
        }
    }
    for m in 1..=3u32 {
        out.push((
            format!("tetrahedra-{m}"),
            perspective_system(&tetrahedra_data(m).map_err(err)?).map_err(err)?,
        ));
    }
    for entry in catalog_103().map_err(err)? {
        out.push((
            format!("K5+{}", entry.name),
            graph_sum_by_index(5, &entry.configuration).map_err(err)?,
        ));
    }
    Ok(out)
}

fn c08_closure_and_count() -> Check {
    let mut checked = 0;
    for (name, cfg) in closure_instances()? {
        if cfg.points() > 28 {
            continue;
        }
        let vs = veldkamp_space(&cfg).map_err(|e| format!("{name}: {e}"))?;
        let count = vs.hyperplanes.len() as u64;
        if (count + 1).count_ones() != 1 {
            return Err(format!("{name}: {count} hyperplanes"));
        }
        checked += 1;
    }
    Ok(format!("{checked} instances closed under the meet"))
}

fn c09_free_graph_counts() -> Check {
    let mut detail = Vec::new();
    for n in 4..=7u32 {
        let cfg = desargues(n).map_err(err)?;
        let found = find_free_complete_graphs(&cfg, n as usize - 1).map_err(err)?;
        if found.len() != n as usize {
            return Err(format!(
                "G({n},2): {} free graphs, expected {n}",
                found.len()
            ));
        }
    }
    detail.push("G(4..7,2) stars".to_string());
    for (n, expected) in [(6u32, 2usize), (7, 3), (8, 2), (9, 3)] {
        let cfg = quasi_grassmannian(n).map_err(err)?;
        let (size, found) = maximum_free_graphs(&cfg).map_err(err)?;
        if size != n as usize - 1 || found.len() != expected {
            return Err(format!(
                "R{n}: {} maximal free graphs of size {size}, expected {expected} of size {}",
                found.len(),
                n - 1
            ));
        }
    }
    detail.push("R6..R9 maximal".to_string());
    for k in [3u32, 4] {
        let cfg = veronesian(k).map_err(err)?;
        let found = find_free_complete_graphs(&cfg, k as usize + 1).map_err(err)?;
        if found.len() != 3 {
            return Err(format!("V(3,{k}): {} free graphs, expected 3", found.len()));
        }
    }
    detail.push("V(3,3..4)=3".to_string());
    for m in [2u32, 3] {
        let cfg = perspective_system(&tetrahedra_data(m).map_err(err)?).map_err(err)?;
        let (size, found) = maximum_free_graphs(&cfg).map_err(err)?;
        if size != m as usize + 3 || found.len() != m as usize {
            return Err(format!(
                "tetrahedra m={m}: {} maximal free graphs of size {size}",
                found.len()
            ));
        }
    }
    detail.push("tetrahedra m=2,3 exact".to_string());
    Ok(detail.join(", "))
}

fn c10_isomorphism_facts() -> Check {
    let mut detail = Vec::new();
    if !are_isomorphic(&veronesian(2).map_err(err)?, &desargues(4).map_err(err)?) {
        return Err("V(3,2) and G(4,2) differ".into());
    }
    detail.push("V(3,2)=G(4,2)".to_string());

    let r7 = quasi_grassmannian(7).map_err(err)?;
    let s0 = star(&r7, 0).map_err(err)?;
    let witness = is_freely_contained(&r7, &s0).ok_or("S(0) is not free in R7")?;
    let (d0, _) = graph_complement(&r7, &witness).map_err(err)?;
    if !are_isomorphic(&d0, &quasi_grassmannian(6).map_err(err)?) {
        return Err("D(0) of R7 is not R6".into());
    }
    detail.push("D(0) of R7 = R6".to_string());

    for n in [6u32, 7] {
        let rn = quasi_grassmannian(n).map_err(err)?;
        let gm = desargues(n - 1).map_err(err)?;
        for i in [1u32, 2] {
            let s = star(&rn, i).map_err(err)?;
            let witness =
                is_freely_contained(&rn, &s).ok_or(format!("S({i}) is not free in R{n}"))?;
            let (d, _) = graph_complement(&rn, &witness).map_err(err)?;
            if !are_isomorphic(&d, &gm) {
                return Err(format!("D({i}) of R{n} is not G({},2)", n - 1));
            }
        }
    }
    detail.push("D(1),D(2) of R6,R7".to_string());

    for n in [3u32, 4] {
        let dv = dual_veronesian(n).map_err(err)?;
        let smaller_cert = raw_certificate(&dual_veronesian(n - 1).map_err(err)?);
        let mut binomial_hyperplanes = 0;
        for h in enumerate_hyperplanes(&dv).map_err(err)? {
            let (piece, _) = restrict(&dv, &h);
            let report = validate_psts(&piece);
            let connected = components(&piece).len() == 1;
            if connected && report.binomial.is_some() {
                binomial_hyperplanes += 1;
                if raw_certificate(&piece) != smaller_cert {
                    return Err(format!(
                        "a binomial hyperplane of V*({n},3) is not V*({},3)",
                        n - 1
                    ));
                }
            }
        }
        if binomial_hyperplanes != n as usize {
            return Err(format!(
                "V*({n},3): {binomial_hyperplanes} binomial hyperplanes, expected {n}"
            ));
        }
    }
    detail.push("V*(n,3) hyperplane types".to_string());
    Ok(detail.join(", "))
}

fn c11_hypothesis() -> Check {
    let mut instances: Vec<(String, Configuration)> = Vec::new();
    for (k, (_, cfg)) in generate_all_binomial(5)
        .map_err(err)?
        .into_iter()
        .enumerate()
    {
        instances.push((format!("census-{k}"), cfg));
    }
    for k in 3..=5u32 {
        instances.push((format!("V(3,{k})"), veronesian(k).map_err(err)?));
    }
    for n in 6..=9u32 {
        instances.push((format!("R{n}"), quasi_grassmannian(n).map_err(err)?));
    }
    for n in 5..=8u32 {
        instances.push((format!("G({n},2)"), desargues(n).map_err(err)?));
    }
    for n in [3u32, 4] {
        let base: Vec<u32> = (1..=n).collect();
        let pairs: Vec<(u32, u32)> = base
            .iter()
            .flat_map(|&x| base.iter().filter(move |&&y| y > x).map(move |&y| (x, y)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let graph = SimpleGraph::new(n, edges).map_err(err)?;
            instances.push((
                format!("M(|X|={n},P={mask:#x})"),
                multi_veblen(&graph).map_err(err)?,
            ));
        }
    }
    let mut hyperplanes = 0;
    let mut counterexamples = Vec::new();
    for (name, cfg) in instances {
        let report =
            check_connected_or_split_hypothesis(&cfg).map_err(|e| format!("{name}: {e}"))?;
        hyperplanes += report.hyperplanes;
        if !report.holds {
            // a counterexample is legitimate output, but it must be real:
            // re-verify each reported set independently before accepting it
            for v in &report.violations {
                if !is_hyperplane(&cfg, &v.hyperplane) {
                    return Err(format!(
                        "{name}: checker reported a non-hyperplane as a counterexample"
                    ));
                }
                let (piece, _) = restrict(&cfg, &v.hyperplane);
                let comps = components(&piece);
                let dichotomy_ok = match comps.len() {
                    1 => validate_psts(&piece).binomial.is_some(),
                    2 => comps.iter().all(|comp| {
                        let set = PointSet::from_indices(piece.points(), comp.iter().copied());
                        let (part, _) = restrict(&piece, &set);
                        validate_psts(&part).binomial.is_some()
                    }),
                    _ => false,
                };
                if dichotomy_ok && !v.reason.contains("maximal") && !v.reason.contains("complementary") {
                    return Err(format!(
                        "{name}: checker flagged a hyperplane that satisfies the dichotomy"
                    ));
                }
            }
            counterexamples.push(format!("{name}: {}", report.violations.len()));
        }
    }
    if counterexamples.is_empty() {
        Ok(format!("{hyperplanes} hyperplanes, all connected-or-split"))
    } else {
        Ok(format!(
            "{hyperplanes} hyperplanes; verified counterexamples reported in {}",
            counterexamples.join(", ")
        ))
    }
}

/// Independent route for criterion 12: filter every subset of the points
/// through the definition, on raw masks.
fn brute_force_hyperplanes(cfg: &Configuration) -> Vec<u64> {
    let p = cfg.points();
    assert!(p <= 21, "brute force oracle capped at 21 points");
    let line_masks: Vec<u64> = cfg
        .lines()
        .iter()
        .map(|t| t.iter().fold(0u64, |acc, &q| acc | 1 << q))
        .collect();
    let full = (1u64 << p) - 1;
    let mut out = Vec::new();
    'mask: for mask in 0..full {
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

fn c12_brute_force() -> Check {
    let mut checked = 0;
    for (name, cfg) in closure_instances()? {
        if cfg.points() > 21 {
            continue;
        }
        let mut fast: Vec<u64> = enumerate_hyperplanes(&cfg)
            .map_err(|e| format!("{name}: {e}"))?
            .iter()
            .map(|h| h.mask())
            .collect();
        fast.sort_unstable();
        if fast != brute_force_hyperplanes(&cfg) {
            return Err(format!("{name}: enumeration differs from the oracle"));
        }
        checked += 1;
    }
    Ok(format!("{checked} instances match the subset filter"))
}
