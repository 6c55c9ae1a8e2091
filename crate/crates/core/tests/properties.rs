//! Property tests for the algebraic laws, canonical labeling, and the
//! document format, plus the structural invariants tying free graphs to
//! hyperplanes.

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use bsts::canon::{canonical_form, raw_certificate};
use bsts::catalog::catalog_103;
use bsts::document::{parse_document_full, serialize_configuration, serialize_document};
use bsts::families::{desargues, perspective_system, quasi_grassmannian, tetrahedra_data, veronesian};
use bsts::free_graphs::{is_freely_contained, maximum_free_graphs};
use bsts::hyperplanes::enumerate_hyperplanes;
use bsts::incidence::{closure, is_hyperplane, is_subspace, restrict, Configuration};
use bsts::label::PointLabel;
use bsts::partition::{hipcap, partition_set};
use bsts::point_set::PointSet;

fn point_set_strategy(width: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::vec(any::<bool>(), width).prop_map(move |bits| {
        PointSet::from_indices(
            width,
            bits.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i as u32),
        )
    })
}

fn triple_algebra_strategy() -> impl Strategy<Value = (PointSet, PointSet, PointSet)> {
    (1usize..=48).prop_flat_map(|w| {
        (
            point_set_strategy(w),
            point_set_strategy(w),
            point_set_strategy(w),
        )
    })
}

proptest! {
    #[test]
    fn meet_laws((y, y1, y2) in triple_algebra_strategy()) {
        let s = PointSet::full(y.width());
        prop_assert_eq!(hipcap(&y, &y).unwrap(), s.clone());
        prop_assert_eq!(hipcap(&y, &s).unwrap(), y.clone());
        prop_assert_eq!(hipcap(&y1, &y2).unwrap(), hipcap(&y2, &y1).unwrap());
        prop_assert_eq!(hipcap(&y1, &hipcap(&y1, &y2).unwrap()).unwrap(), y2.clone());
        prop_assert_eq!(
            hipcap(&y1, &y2).unwrap().intersection(&y2),
            y1.intersection(&y2)
        );
        let left = hipcap(&hipcap(&y, &y1).unwrap(), &hipcap(&y, &y2).unwrap()).unwrap();
        prop_assert_eq!(left, hipcap(&y1, &y2).unwrap());
    }

    #[test]
    fn partition_composition(w in 3u32..=8, a_mask in 1u32..=254, b_mask in 1u32..=254) {
        let limit = (1u32 << w) - 1;
        let a_mask = a_mask & (limit - 1);
        let b_mask = b_mask & (limit - 1);
        prop_assume!(a_mask != 0 && b_mask != 0 && a_mask != b_mask);
        let cfg = desargues(w).unwrap();
        let pick = |mask: u32| -> BTreeSet<u32> {
            (1..=w).filter(|i| mask >> (i - 1) & 1 == 1).collect()
        };
        let (a, b) = (pick(a_mask), pick(b_mask));
        let lhs = hipcap(&partition_set(&cfg, &a), &partition_set(&cfg, &b)).unwrap();
        let sym: BTreeSet<u32> = a.symmetric_difference(&b).copied().collect();
        prop_assert_eq!(lhs, partition_set(&cfg, &sym));
    }

    #[test]
    fn closure_yields_subspaces(seed_bits in prop::collection::vec(any::<bool>(), 10)) {
        let cfg = desargues(5).unwrap();
        let seed = PointSet::from_indices(
            10,
            seed_bits
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i as u32),
        );
        let c = closure(&cfg, &seed);
        prop_assert!(is_subspace(&cfg, &c));
        prop_assert!(seed.is_subset_of(&c));
    }

    /// Round trips on arbitrary (not necessarily Steiner) structures:
    /// serialization is canonical wherever parsing succeeds.
    #[test]
    fn document_round_trip(
        points in 4usize..=9,
        raw in prop::collection::vec((0u32..9, 0u32..9, 0u32..9), 0..8)
    ) {
        let labels: Vec<PointLabel> =
            (0..points).map(|i| PointLabel::Atom(format!("v{i}"))).collect();
        let lines: Vec<Vec<u32>> = raw
            .iter()
            .map(|&(a, b, c)| vec![a % points as u32, b % points as u32, c % points as u32])
            .filter(|t| {
                let set: BTreeSet<u32> = t.iter().copied().collect();
                set.len() == 3
            })
            .collect();
        let Ok(cfg) = Configuration::new(labels, lines) else {
            return Ok(());
        };
        let text = serialize_configuration("fuzz", &cfg, None);
        let (doc, parsed) = parse_document_full(&text).unwrap();
        prop_assert_eq!(&parsed, &cfg);
        prop_assert_eq!(serialize_document(&doc), text);
    }
}

#[test]
fn meets_of_hyperplanes_are_hyperplanes() {
    for entry in catalog_103().unwrap() {
        let cfg = &entry.configuration;
        let hs = enumerate_hyperplanes(cfg).unwrap();
        for i in 0..hs.len() {
            for j in i + 1..hs.len() {
                let m = hipcap(&hs[i], &hs[j]).unwrap();
                assert!(is_hyperplane(cfg, &m), "{} #{i} # #{j}", entry.name);
            }
        }
    }
}

#[test]
fn certificates_survive_a_thousand_relabelings() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x103);
    for entry in catalog_103().unwrap() {
        let cfg = &entry.configuration;
        let reference = canonical_form(cfg).unwrap();
        let mut perm: Vec<u32> = (0..cfg.points() as u32).collect();
        for round in 0..1000 {
            perm.shuffle(&mut rng);
            let labels = (0..cfg.points())
                .map(|i| PointLabel::Atom(format!("r{i}")))
                .collect();
            let lines = cfg
                .lines()
                .iter()
                .map(|t| {
                    vec![
                        perm[t[0] as usize],
                        perm[t[1] as usize],
                        perm[t[2] as usize],
                    ]
                })
                .collect();
            let shuffled = Configuration::new(labels, lines).unwrap();
            let sig = canonical_form(&shuffled).unwrap();
            assert_eq!(
                sig.certificate(),
                reference.certificate(),
                "{} round {round}",
                entry.name
            );
            // equal certificates carry equal summaries
            assert_eq!(sig.summary(), reference.summary(), "{}", entry.name);
        }
    }
}

#[test]
fn restriction_never_invents_lines() {
    let cfg = quasi_grassmannian(7).unwrap();
    for h in enumerate_hyperplanes(&cfg).unwrap() {
        let (piece, map) = restrict(&cfg, &h);
        assert_eq!(piece.points(), h.len());
        for t in piece.lines() {
            let original = [
                map[t[0] as usize],
                map[t[1] as usize],
                map[t[2] as usize],
            ];
            let mut sorted = original;
            sorted.sort_unstable();
            assert!(cfg.lines().contains(&sorted));
        }
    }
}

#[test]
fn free_graph_complements_are_hyperplanes_and_meets_are_not() {
    for cfg in [
        desargues(5).unwrap(),
        veronesian(3).unwrap(),
        quasi_grassmannian(6).unwrap(),
    ] {
        let (_, witnesses) = maximum_free_graphs(&cfg).unwrap();
        let complements: Vec<PointSet> = witnesses
            .iter()
            .map(|w| w.vertices.complement())
            .collect();
        for y in &complements {
            assert!(is_hyperplane(&cfg, y));
        }
        for i in 0..complements.len() {
            for j in i + 1..complements.len() {
                let y = hipcap(&complements[i], &complements[j]).unwrap();
                assert!(is_hyperplane(&cfg, &y));
                // ... but its complement spans no freely contained
                // complete graph
                assert!(is_freely_contained(&cfg, &y.complement()).is_none());
            }
        }
    }
}

#[test]
fn perspective_index_partitions_are_hyperplanes() {
    for m in [2u32, 3] {
        let data = tetrahedra_data(m).unwrap();
        let cfg = perspective_system(&data).unwrap();
        // every J within the index set yields a hyperplane
        for mask in 1u32..(1 << m) {
            let j: BTreeSet<u32> = (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let h = partition_set(&cfg, &j);
            assert!(is_hyperplane(&cfg, &h), "m={m}, J={j:?}");
        }
        // no single base element does
        for &a in data.base() {
            let h = partition_set(&cfg, &[a].into_iter().collect());
            assert!(!is_hyperplane(&cfg, &h), "m={m}, a={a}");
        }
    }
}

#[test]
fn tetrahedra_graphs_meet_in_the_index_pairs() {
    let data = tetrahedra_data(3).unwrap();
    let cfg = perspective_system(&data).unwrap();
    let (size, witnesses) = maximum_free_graphs(&cfg).unwrap();
    assert_eq!((size, witnesses.len()), (6, 3));
    let report = bsts::free_graphs::pairwise_intersections(&cfg, &witnesses);
    assert!(report.ok(), "{:?}", report.violations);
    for (&(_, _), &common) in &report.meets {
        let (x, y) = cfg.label(common).as_pair().unwrap();
        assert!(x <= 3 && y <= 3, "common vertex {{{x},{y}}} is an index pair");
    }
}

#[test]
fn perspective_realizations_match_their_families() {
    use bsts::families::{quasi_grassmannian_data, veronesian_perspective_data};
    for n in [6u32, 7] {
        let built = perspective_system(&quasi_grassmannian_data(n).unwrap()).unwrap();
        assert_eq!(
            raw_certificate(&built),
            raw_certificate(&quasi_grassmannian(n).unwrap()),
            "R{n}"
        );
    }
    for k in [3u32, 4] {
        let built = perspective_system(&veronesian_perspective_data(k).unwrap()).unwrap();
        assert_eq!(
            raw_certificate(&built),
            raw_certificate(&veronesian(k).unwrap()),
            "V(3,{k})"
        );
    }
}
