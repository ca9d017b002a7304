//! Reduction of an l-reflexive polygon to one of the sixteen reflexive
//! classes through its boundary sublattice, and the `(j, k)` normal form
//! `Q = U·A_{l,k}·Q̄_j`.

use std::sync::OnceLock;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{in_sublattice, mat, span_basis, sublattice_index, Int, Mat2, Point2};
use crate::polygon::{apply_map, find_equivalence, lattice_points, make_polygon, LatticePolygon};
use crate::toric::{edge_data, is_l_reflexive, polygon_key, GraphKey};

/// Vertex lists of the sixteen reflexive polygons, numbered so that the
/// polar of class `j` is class `17 − j` and classes 7 to 10 are self-dual.
const TABLE: [&[(Int, Int)]; 16] = [
    &[(1, 0), (0, 1), (-1, -1)],
    &[(1, 0), (0, 1), (-2, -1)],
    &[(1, 0), (0, 1), (-1, 0), (0, -1)],
    &[(1, 0), (0, 1), (-1, 0), (-1, -1)],
    &[(1, 0), (0, 1), (-1, 1), (-1, -1)],
    &[(1, 0), (0, 1), (-1, 0), (-1, -1), (0, -1)],
    &[(1, -1), (-1, 2), (-1, -1)],
    &[(1, 0), (-1, 1), (-1, -1), (1, -1)],
    &[(1, 0), (0, 1), (-1, 0), (-1, -1), (1, -1)],
    &[(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)],
    &[(-1, -1), (1, -1), (1, 0), (0, 1), (-1, 1)],
    &[(-1, -1), (0, -1), (1, 0), (-1, 2)],
    &[(-1, -1), (1, -1), (1, 0), (-1, 2)],
    &[(-1, -1), (1, -1), (1, 1), (-1, 1)],
    &[(-1, -1), (1, -1), (-1, 3)],
    &[(-1, -1), (2, -1), (-1, 2)],
];

/// Representatives of the same classes, each having `(0, 1)` as a vertex.
const NORMALIZED: [&[(Int, Int)]; 16] = [
    &[(0, 1), (-1, -2), (1, 1)],
    &[(0, 1), (-1, -1), (2, 1)],
    &[(0, 1), (-1, -1), (0, -1), (1, 1)],
    &[(0, 1), (-1, 0), (0, -1), (1, 1)],
    &[(0, 1), (-1, 0), (-1, -2), (1, 1)],
    &[(0, 1), (-1, 0), (-1, -1), (0, -1), (1, 1)],
    &[(0, 1), (-3, -2), (2, 1)],
    &[(0, 1), (-2, -1), (0, -1), (1, 1)],
    &[(0, 1), (-1, 0), (0, -1), (1, -1), (1, 1)],
    &[(0, 1), (-1, 0), (-1, -1), (0, -1), (1, 0), (1, 1)],
    &[(0, 1), (-1, 0), (-1, -1), (1, -1), (1, 1)],
    &[(0, 1), (-1, 0), (1, -2), (1, 1)],
    &[(0, 1), (-2, -1), (1, -1), (1, 1)],
    &[(0, 1), (-2, -1), (0, -1), (2, 1)],
    &[(0, 1), (-2, -1), (4, 1)],
    &[(0, 1), (-3, -2), (3, 1)],
];

pub struct ReflexiveAtlas {
    pub table: Vec<LatticePolygon>,
    pub normalized: Vec<LatticePolygon>,
    pub keys: Vec<GraphKey>,
}

fn build(lists: &[&[(Int, Int)]; 16]) -> Vec<LatticePolygon> {
    lists
        .iter()
        .map(|v| {
            let pts: Vec<Point2> = v.iter().map(|&(x, y)| Point2 { x, y }).collect();
            make_polygon(&pts).expect("reflexive table entry")
        })
        .collect()
}

pub fn atlas() -> &'static ReflexiveAtlas {
    static ATLAS: OnceLock<ReflexiveAtlas> = OnceLock::new();
    ATLAS.get_or_init(|| {
        let table = build(&TABLE);
        let normalized = build(&NORMALIZED);
        let keys = normalized.iter().map(|p| polygon_key(p).expect("reflexive table entry")).collect();
        ReflexiveAtlas { table, normalized, keys }
    })
}

/// Class number `1..=16` of a reflexive polygon, by graph key.
pub fn reflexive_class(p: &LatticePolygon) -> Result<usize> {
    let key = polygon_key(p)?;
    atlas()
        .keys
        .iter()
        .position(|k| *k == key)
        .map(|i| i + 1)
        .ok_or_else(|| Error::Internal(format!("{p} matches no reflexive class")))
}

/// `A_{l,k} = [[l, 0], [k, 1]]`.
pub fn a_matrix(ell: Int, k: Int) -> Mat2 {
    mat(ell, 0, k, 1)
}

fn require_ell(q: &LatticePolygon) -> Result<Int> {
    let edges = edge_data(q)?;
    is_l_reflexive(q).ok_or_else(|| Error::NotLReflexive(edges.iter().map(|e| e.local_index).collect()))
}

/// Basis (as columns) of the lattice generated by the boundary lattice points.
pub fn boundary_sublattice(q: &LatticePolygon) -> Result<Mat2> {
    let ell = require_ell(q)?;
    let boundary: Vec<Point2> = lattice_points(q).into_iter().filter(|&p| !q.contains_strictly(p)).collect();
    let basis = span_basis(&boundary)?;
    let index = sublattice_index(basis)?;
    if index != ell {
        return Err(Error::Internal(format!("boundary sublattice has index {index}, expected {ell}")));
    }
    Ok(basis)
}

/// `Q` in coordinates of its boundary sublattice, with its reflexive class.
pub fn reduce_to_reflexive(q: &LatticePolygon) -> Result<(LatticePolygon, usize)> {
    let basis = boundary_sublattice(q)?;
    let mut pts = Vec::with_capacity(q.nu());
    for &v in q.vertices() {
        let (s, t) = in_sublattice(v, basis)?
            .ok_or_else(|| Error::Internal(format!("vertex {v} outside the boundary sublattice")))?;
        pts.push(Point2 { x: s, y: t });
    }
    let p1 = make_polygon(&pts)?;
    if is_l_reflexive(&p1) != Some(1) {
        return Err(Error::Internal(format!("{p1} is not reflexive")));
    }
    let j = reflexive_class(&p1)?;
    Ok((p1, j))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverDecomposition {
    pub j: usize,
    pub k: Int,
    /// Unimodular `U` with `U·A_{l,k}·Q̄_j = Q`.
    pub basis_n: Mat2,
    /// `U·A_{l,k}`, a basis of the boundary sublattice.
    pub basis_lambda: Mat2,
    /// Further admissible `k`, in increasing order.
    pub alternates: Vec<Int>,
}

/// Admissible `k` for index `ell`: `0` when `ell = 1`, else the units mod `ell`.
pub fn admissible_k(ell: Int) -> impl Iterator<Item = Int> {
    (0..ell).filter(move |k| k.gcd(&ell) == 1)
}

pub fn cover_decomposition(q: &LatticePolygon) -> Result<CoverDecomposition> {
    let ell = require_ell(q)?;
    let (_, j) = reduce_to_reflexive(q)?;
    let qbar = &atlas().normalized[j - 1];
    let mut found: Option<(Int, Mat2)> = None;
    let mut alternates = Vec::new();
    for k in admissible_k(ell) {
        let a = a_matrix(ell, k);
        let image = apply_map(qbar, a)?;
        if let Some(u) = find_equivalence(&image, q) {
            if found.is_none() {
                found = Some((k, u));
            } else {
                alternates.push(k);
            }
        }
    }
    let (k, u) = found.ok_or(Error::NoDecomposition)?;
    let basis_lambda = u * a_matrix(ell, k);
    debug_assert_eq!(apply_map(qbar, basis_lambda).ok().as_ref(), Some(q));
    Ok(CoverDecomposition { j, k, basis_n: u, basis_lambda, alternates })
}

/// Singularity of the covering surface over one torus-fixed point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiberType {
    Smooth,
    /// Gorenstein cyclic quotient singularity of type `(1, m)`.
    Gorenstein(Int),
}

impl Serialize for FiberType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FiberType::Smooth => s.serialize_str("smooth"),
            FiberType::Gorenstein(m) => [1, *m].serialize(s),
        }
    }
}

/// One entry per edge, in edge order: smooth when `q_i = l`, else `(1, q_i/l)`.
pub fn fiber_singularity_types(q: &LatticePolygon) -> Result<Vec<FiberType>> {
    let ell = require_ell(q)?;
    edge_data(q)?
        .iter()
        .map(|e| match e.cone.q / ell {
            _ if e.cone.q % ell != 0 => Err(Error::Internal(format!("{} is not a multiple of {ell}", e.cone.q))),
            1 => Ok(FiberType::Smooth),
            m => Ok(FiberType::Gorenstein(m)),
        })
        .collect()
}
