//! Library results against independent brute-force computations.

mod common;

use std::collections::BTreeSet;

use common::*;
use lrefl::classify::enumerate_l_reflexive;
use lrefl::cones::{cone_type, dedekind_sum, hilbert_basis, hj_expansion, socius};
use lrefl::lattice::{pt, rat, rat_int, Int};
use lrefl::polygon::{apply_map, area2, boundary_count, interior_count, lattice_points};
use lrefl::toric::polygon_key;

#[test]
fn pick_and_ehrhart_match_scanning() {
    for p in random_polygons(500, 8) {
        let (b, i) = scan_counts(p.vertices());
        assert_eq!((boundary_count(&p), interior_count(&p)), (b, i), "{p}");
        assert_eq!(area2(&p), shoelace2(p.vertices()));
        assert_eq!(lattice_points(&p).len() as Int, b + i);
        for k in 2..=3 {
            let (bk, ik) = scan_counts(p.scale(k).vertices());
            let (c2, c1, c0) = lrefl::polygon::ehrhart(&p);
            assert_eq!(c2 * rat_int(k * k) + c1 * rat_int(k) + c0, rat_int(bk + ik), "{p} scaled by {k}");
        }
    }
}

#[test]
fn dedekind_sum_matches_sawtooth_and_reciprocity() {
    for (p, q) in coprime_pairs(60) {
        let ds = dedekind_sum(p, q).unwrap();
        assert_eq!(ds, dedekind_by_sawtooth(p, q), "DS({p},{q})");
        // reciprocity with DS(q mod p, p)
        let back = if p == 1 { rat_int(0) } else { dedekind_sum(q % p, p).unwrap() };
        assert_eq!(ds + back, rat(p * p + q * q + 1, 12 * p * q) - rat(1, 4), "({p},{q})");
    }
}

#[test]
fn dedekind_sum_from_continued_fraction() {
    for (p, q) in coprime_pairs(200) {
        let b = hj_expansion(q, q - p).unwrap();
        let s = socius(p, q).unwrap();
        let rhs = rat_int(b.iter().map(|b| 3 - b).sum()) + rat(p + s, q) - rat_int(2);
        assert_eq!(rat_int(12) * dedekind_sum(p, q).unwrap(), rhs, "({p},{q})");
    }
}

#[test]
fn continued_fractions_of_dual_cones() {
    for (p, q) in coprime_pairs(100) {
        let b = hj_expansion(q, q - p).unwrap();
        let bd = hj_expansion(q, p).unwrap();
        let (s, t) = (b.len() as Int, bd.len() as Int);
        assert_eq!(b.iter().sum::<Int>() - s, s + t - 1, "({p},{q})");
        assert_eq!(bd.iter().sum::<Int>() - t, s + t - 1, "({p},{q})");
    }
}

#[test]
fn hilbert_basis_matches_search() {
    for (p, q) in coprime_pairs(40) {
        let (n1, n2) = (pt(1, 0), pt(p, q));
        assert_eq!(cone_type(n1, n2).unwrap().p, p);
        let h = hilbert_basis(n1, n2).unwrap();
        let got: BTreeSet<_> = h.u.iter().copied().collect();
        assert_eq!(got, hilbert_basis_by_search(p, q), "cone of type ({p},{q})");
    }
}

#[test]
fn graph_keys_agree_with_equivalence_search() {
    for ell in [1, 3, 5, 7] {
        let classes = enumerate_l_reflexive(ell).classes;
        for (i, a) in classes.iter().enumerate() {
            for b in &classes[i + 1..] {
                assert!(equivalences_by_search(&a.polygon, &b.polygon).is_empty(), "{} ~ {}", a.polygon, b.polygon);
            }
            for m in random_unimodular(5) {
                let image = apply_map(&a.polygon, m).unwrap();
                assert_eq!(polygon_key(&image).unwrap(), polygon_key(&a.polygon).unwrap());
                assert!(!equivalences_by_search(&a.polygon, &image).is_empty());
            }
        }
    }
}
