mod common;

use common::*;
use lrefl::cones::{cone_type, dual_type, hilbert_basis, socius};
use lrefl::covering::atlas;
use lrefl::lattice::{det, gcd_extended, hermite_normal_form, in_sublattice, mat, pt, span_basis, Mat2};
use lrefl::polygon::{apply_map, boundary_count, interior_count, make_polygon, polar};
use lrefl::toric::{characteristic_differences, dual, polygon_key, smooth_invariants};
use proptest::prelude::*;

fn unimodular() -> impl Strategy<Value = Mat2> {
    prop::collection::vec((0u8..4, -4i64..=4), 0..8).prop_map(|moves| {
        moves.into_iter().fold(Mat2::IDENTITY, |m, (kind, t)| {
            let e = match kind {
                0 => mat(1, t, 0, 1),
                1 => mat(1, 0, t, 1),
                2 => mat(0, 1, 1, 0),
                _ => mat(-1, 0, 0, 1),
            };
            e * m
        })
    })
}

fn nonsingular() -> impl Strategy<Value = Mat2> {
    (-50i64..=50, -50i64..=50, -50i64..=50, -50i64..=50)
        .prop_map(|(a, b, c, d)| mat(a, b, c, d))
        .prop_filter("nonsingular", |m| m.det() != 0)
}

proptest! {
    #[test]
    fn bezout(a in -10_000i64..10_000, b in -10_000i64..10_000) {
        let (g, k, l) = gcd_extended(a, b);
        prop_assert_eq!(k * a + l * b, g);
        prop_assert!(g >= 0);
        if g > 0 {
            prop_assert_eq!(a % g, 0);
            prop_assert_eq!(b % g, 0);
        }
    }

    #[test]
    fn hermite_form_shape(m in nonsingular()) {
        let (h, u) = hermite_normal_form(m).unwrap();
        prop_assert!(u.is_unimodular());
        prop_assert_eq!(u * m, h);
        prop_assert_eq!(h.b, 0);
        prop_assert!(h.a > 0 && h.d != 0);
        prop_assert!(0 <= h.c && h.c < h.a);
        prop_assert_eq!(h.det().abs(), m.det().abs());
    }

    #[test]
    fn sublattice_coordinates(m in nonsingular(), s in -20i64..20, t in -20i64..20) {
        let p = s * m.col1() + t * m.col2();
        prop_assert_eq!(in_sublattice(p, m).unwrap(), Some((s, t)));
        let basis = span_basis(&[m.col1(), m.col2()]).unwrap();
        prop_assert_eq!(basis.det().abs(), m.det().abs());
        prop_assert!(in_sublattice(m.col1(), basis).unwrap().is_some());
    }

    #[test]
    fn cone_type_is_unimodular_invariant(q in 2i64..60, k in 1i64..60, u in unimodular()) {
        let p = k % q;
        prop_assume!(p > 0 && gcd_extended(p, q).0 == 1);
        let (n1, n2) = (pt(1, 0), pt(p, q));
        let t = cone_type(n1, n2).unwrap();
        prop_assert_eq!(t.p, p);
        let image = cone_type(u.apply(n1), u.apply(n2)).unwrap();
        // p is f(n2) mod q for any integral f with f(n1) = 1, so even
        // orientation-reversing maps keep the type
        prop_assert_eq!(image, t);
        prop_assert_eq!(cone_type(n2, n1).unwrap().p, t.socius);
        prop_assert_eq!(dual_type(dual_type(t)), t);
        let h = hilbert_basis(n1, n2).unwrap();
        for w in h.u.windows(2) {
            prop_assert_eq!(det(w[0], w[1]), 1);
        }
    }

    #[test]
    fn lattice_counts_are_unimodular_invariant(u in unimodular(), seed in 0usize..500) {
        let p = &random_polygons(seed + 1, 6)[seed];
        let image = apply_map(p, u).unwrap();
        prop_assert_eq!(boundary_count(&image), boundary_count(p));
        prop_assert_eq!(interior_count(&image), interior_count(p));
        prop_assert_eq!(scan_counts(image.vertices()), scan_counts(p.vertices()));
    }

    #[test]
    fn reflexive_invariants_survive_maps(j in 0usize..16, ell in 0usize..4, k in 1i64..9, u in unimodular()) {
        let ell = [1i64, 5, 7, 11][ell];
        let q = apply_map(&atlas().normalized[j], mat(ell, 0, if ell == 1 { 0 } else { k % ell }, 1)).unwrap();
        prop_assume!(lrefl::toric::is_l_reflexive(&q) == Some(ell));
        let image = apply_map(&q, u).unwrap();
        prop_assert_eq!(polygon_key(&image).unwrap(), polygon_key(&q).unwrap());
        prop_assert_eq!(smooth_invariants(&image).unwrap(), smooth_invariants(&q).unwrap());
        prop_assert_eq!(characteristic_differences(&image).unwrap(), characteristic_differences(&q).unwrap());
        let d = dual(&q).unwrap();
        prop_assert_eq!(boundary_count(&q) + boundary_count(&d), 12);
        prop_assert_eq!(dual(&d).unwrap(), q.clone());
        let scaled = polar(&q).unwrap().scale(ell).to_lattice().unwrap();
        prop_assert_eq!(scaled, make_polygon(d.vertices()).unwrap());
    }
}

#[test]
fn socius_is_an_involution() {
    for (p, q) in coprime_pairs(120) {
        let s = socius(p, q).unwrap();
        assert_eq!(socius(s, q).unwrap(), p);
        assert_eq!((p * s) % q, 1 % q);
    }
}
