//! `Cu(G)` order and truncation coherence, exhaustive over multiplicity
//! vectors with entries in {0, 1, 2, ∞}.

use cuntz::axioms::lub_failure;
use cuntz::rep::{cug_leq, cug_way_below, load_group, CuGElem, RepSemiring};
use cuntz::ExtNat;

const VALUES: [ExtNat; 4] = [ExtNat::Fin(0), ExtNat::Fin(1), ExtNat::Fin(2), ExtNat::Inf];

fn all_vectors(k: usize) -> Vec<Vec<ExtNat>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| {
                VALUES.iter().map(move |x| {
                    let mut w = v.clone();
                    w.push(*x);
                    w
                })
            })
            .collect();
    }
    out
}

const GROUPS: [&str; 6] = ["cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "product:2,2", "s3"];

#[test]
fn truncations_are_way_below_with_supremum() {
    for spec in GROUPS {
        let group = load_group(spec, None).unwrap();
        let ring = RepSemiring::new(group.clone());
        for mult in all_vectors(group.irrep_count()) {
            let mu = CuGElem::new(&group, mult).unwrap();
            let infinite = !mu.is_finite();
            for k in (0..=8).chain([1 << 20, 1 << 40]) {
                let t = mu.truncate(k);
                let next = mu.truncate(k + 1);
                assert!(cug_leq(&t, &next).unwrap());
                assert!(cug_leq(&t, &mu).unwrap());
                if infinite {
                    assert!(cug_way_below(&t, &mu).unwrap(), "{spec}: {t} << {mu}");
                    assert_ne!(t, mu);
                }
            }
            assert_eq!(lub_failure(&ring, &mu, |k| Ok(mu.truncate(k))).unwrap(), None, "{spec}: {mu}");
            assert_eq!(cug_way_below(&mu, &mu).unwrap(), !infinite, "{spec}: {mu}");
        }
    }
}

/// `a ≪ b` in `Z̄≥0^k` exactly when `a` sits below a finite truncation of `b`;
/// for entries at most 2 the truncation at 2 is the largest needed.
#[test]
fn way_below_is_domination_by_a_truncation() {
    for spec in GROUPS {
        let group = load_group(spec, None).unwrap();
        let elems: Vec<CuGElem> =
            all_vectors(group.irrep_count()).into_iter().map(|m| CuGElem::new(&group, m).unwrap()).collect();
        for a in &elems {
            for b in &elems {
                let oracle = cug_leq(a, &b.truncate(2)).unwrap();
                assert_eq!(cug_way_below(a, b).unwrap(), oracle, "{spec}: {a} << {b}");
            }
        }
    }
}
