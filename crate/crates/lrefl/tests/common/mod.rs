//! Brute-force reference computations that share no code with the library
//! beyond the basic point type.

#![allow(dead_code)]

use std::collections::BTreeSet;

use lrefl::lattice::{pt, rat, rat_int, Int, Mat2, Point2, Rat};
use lrefl::polygon::{make_polygon, LatticePolygon};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

pub fn poly(v: &[(Int, Int)]) -> LatticePolygon {
    make_polygon(&v.iter().map(|&(x, y)| pt(x, y)).collect::<Vec<_>>()).unwrap()
}

fn cross(o: Point2, a: Point2, b: Point2) -> Int {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// `(boundary, interior)` lattice point counts by scanning the bounding box
/// and testing each point against every edge.
pub fn scan_counts(vertices: &[Point2]) -> (Int, Int) {
    let n = vertices.len();
    let xs = vertices.iter().map(|v| v.x);
    let ys = vertices.iter().map(|v| v.y);
    let (x0, x1) = (xs.clone().min().unwrap(), xs.max().unwrap());
    let (y0, y1) = (ys.clone().min().unwrap(), ys.max().unwrap());
    let (mut boundary, mut interior) = (0, 0);
    for x in x0..=x1 {
        for y in y0..=y1 {
            let p = pt(x, y);
            let signs: Vec<Int> = (0..n).map(|i| cross(vertices[i], vertices[(i + 1) % n], p).signum()).collect();
            if signs.iter().all(|&s| s > 0) {
                interior += 1;
            } else if signs.iter().all(|&s| s >= 0) {
                boundary += 1;
            }
        }
    }
    (boundary, interior)
}

/// Twice the area by the shoelace formula over `f64`-free integer sums.
pub fn shoelace2(vertices: &[Point2]) -> Int {
    let n = vertices.len();
    (0..n).map(|i| cross(pt(0, 0), vertices[i], vertices[(i + 1) % n])).sum()
}

/// Deterministic stream of random lattice polygons with coordinates in
/// `[-r, r]`, skipping degenerate point sets.
pub fn random_polygons(count: usize, r: Int) -> Vec<LatticePolygon> {
    let mut runner = TestRunner::deterministic();
    let strat = prop::collection::vec((-r..=r, -r..=r), 3..9);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let pts = strat.new_tree(&mut runner).unwrap().current();
        let pts: Vec<Point2> = pts.into_iter().map(|(x, y)| pt(x, y)).collect();
        if let Ok(p) = make_polygon(&pts) {
            out.push(p);
        }
    }
    out
}

/// Deterministic stream of unimodular matrices built from elementary moves.
pub fn random_unimodular(count: usize) -> Vec<Mat2> {
    let mut runner = TestRunner::deterministic();
    let strat = prop::collection::vec((0u8..4, -3i64..=3), 1..6);
    (0..count)
        .map(|_| {
            let moves = strat.new_tree(&mut runner).unwrap().current();
            moves.into_iter().fold(Mat2::IDENTITY, |m, (kind, t)| {
                let e = match kind {
                    0 => Mat2 { a: 1, b: t, c: 0, d: 1 },
                    1 => Mat2 { a: 1, b: 0, c: t, d: 1 },
                    2 => Mat2 { a: 0, b: 1, c: 1, d: 0 },
                    _ => Mat2 { a: -1, b: 0, c: 0, d: 1 },
                };
                e * m
            })
        })
        .collect()
}

/// Sawtooth `((x))` of a rational.
fn sawtooth(x: Rat) -> Rat {
    if x.is_integer() {
        rat_int(0)
    } else {
        x - x.floor() - rat(1, 2)
    }
}

/// Dedekind sum straight from the sawtooth definition.
pub fn dedekind_by_sawtooth(p: Int, q: Int) -> Rat {
    (1..q).map(|i| sawtooth(rat(i, q)) * sawtooth(rat(p * i, q))).sum()
}

fn gcd(a: Int, b: Int) -> Int {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn coprime_pairs(max_q: Int) -> impl Iterator<Item = (Int, Int)> {
    (2..=max_q).flat_map(|q| (1..q).filter(move |&p| gcd(p, q) == 1).map(move |p| (p, q)))
}

/// Minimal generators of the semigroup of lattice points in the cone
/// spanned by `(1, 0)` and `(p, q)`, found by testing decomposability.
pub fn hilbert_basis_by_search(p: Int, q: Int) -> BTreeSet<Point2> {
    let in_cone = |v: Point2| v.y >= 0 && q * v.x - p * v.y >= 0 && !(v.x == 0 && v.y == 0);
    // every minimal generator lies in the parallelogram spanned by the rays
    let mut cand = Vec::new();
    for y in 0..=q {
        for x in 0..=(p + 1) {
            let v = pt(x, y);
            if in_cone(v) && q * (x - 1) - p * y <= 0 {
                cand.push(v);
            }
        }
    }
    let mut out = BTreeSet::new();
    for &v in &cand {
        let mut decomposable = false;
        'outer: for x in 0..=v.x {
            for y in 0..=v.y {
                let a = pt(x, y);
                let b = pt(v.x - x, v.y - y);
                if in_cone(a) && in_cone(b) {
                    decomposable = true;
                    break 'outer;
                }
            }
        }
        if !decomposable {
            out.insert(v);
        }
    }
    out
}

/// All unimodular maps sending `p` onto `q`, found by sending two
/// consecutive vertices of `p` to every ordered pair of vertices of `q`.
pub fn equivalences_by_search(p: &LatticePolygon, q: &LatticePolygon) -> Vec<Mat2> {
    let (pv, qv) = (p.vertices(), q.vertices());
    if pv.len() != qv.len() {
        return Vec::new();
    }
    let (a, b) = (pv[0], pv[1]);
    let d = a.x * b.y - a.y * b.x;
    let target: BTreeSet<Point2> = qv.iter().copied().collect();
    let mut out = Vec::new();
    for &c in qv {
        for &e in qv {
            if c == e {
                continue;
            }
            // M·a = c and M·b = e
            let num = [c.x * b.y - e.x * a.y, e.x * a.x - c.x * b.x, c.y * b.y - e.y * a.y, e.y * a.x - c.y * b.x];
            if d == 0 || num.iter().any(|v| v % d != 0) {
                continue;
            }
            let m = Mat2 { a: num[0] / d, b: num[1] / d, c: num[2] / d, d: num[3] / d };
            if m.det().abs() != 1 {
                continue;
            }
            let image: BTreeSet<Point2> = pv.iter().map(|&v| m.apply(v)).collect();
            if image == target {
                out.push(m);
            }
        }
    }
    out
}
