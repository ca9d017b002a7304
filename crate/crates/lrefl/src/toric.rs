//! Invariants of LDP polygons and of the toric surfaces they define: local
//! indices, duals, combinatorial triples and graphs, Euler number and
//! self-intersection of the canonical divisor, and the identities relating
//! them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::cones::{cone_type, dedekind_sum, hilbert_basis, socius, ConeType, HJData};
use crate::covering::{self, FiberType};
use crate::error::{Error, Result};
use crate::lattice::{det, gcd_extended, is_primitive, rat, rat_int, serialize_rat, Int, Point2, Rat};
use crate::polygon::{
    area2, boundary_count, interior_count, interior_hull, make_polygon, polar, Hull, HullKind,
    LatticePolygon,
};

/// Data attached to the edge `[n_i, n_{i+1}]` and its cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeData {
    pub index: usize,
    pub from: Point2,
    pub to: Point2,
    pub cone: ConeType,
    pub local_index: Int,
    pub hj: HJData,
    /// Primitive inward normal; pairs to `-local_index` with both endpoints.
    pub eta: Point2,
}

/// `(p_i, q_i)` of the edge leaving vertex `i` and `r_i` of the vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triple {
    pub p: Int,
    pub q: Int,
    pub r: Int,
}

fn check_ldp(q: &LatticePolygon) -> Result<()> {
    if !q.contains_strictly(Point2::ORIGIN) {
        return Err(Error::NotLdp("origin is not an interior point".into()));
    }
    if let Some(v) = q.vertices().iter().find(|v| !is_primitive(**v)) {
        return Err(Error::NotLdp(format!("vertex {v} is not primitive")));
    }
    Ok(())
}

pub fn edge_data(q: &LatticePolygon) -> Result<Vec<EdgeData>> {
    check_ldp(q)?;
    let mut out = Vec::with_capacity(q.nu());
    for (i, (a, b)) in q.edges().enumerate() {
        let cone = cone_type(a, b)?;
        let local_index = cone.q / cone.q.gcd(&(cone.p - 1));
        let edge = b - a;
        let g = edge.content();
        let eta = Point2 { x: -edge.y / g, y: edge.x / g };
        if eta.dot(a) != -local_index {
            return Err(Error::Internal(format!("local index mismatch on edge {a}{b}")));
        }
        out.push(EdgeData { index: i + 1, from: a, to: b, cone, local_index, hj: hilbert_basis(a, b)?, eta });
    }
    Ok(out)
}

/// Least common multiple of the local indices.
pub fn ldp_index(q: &LatticePolygon) -> Result<Int> {
    let edges = edge_data(q)?;
    let ell = edges.iter().fold(1, |acc, e| acc.lcm(&e.local_index));
    let by_polar = polar(q)?.denominator();
    if by_polar != ell {
        return Err(Error::Internal(format!("index {ell} but polar denominator {by_polar}")));
    }
    Ok(ell)
}

/// The common local index when the polygon is LDP and all local indices agree.
pub fn is_l_reflexive(q: &LatticePolygon) -> Option<Int> {
    require_l_reflexive(q).ok()
}

fn require_l_reflexive(q: &LatticePolygon) -> Result<Int> {
    let edges = edge_data(q)?;
    local_index_of(&edges, q)
}

fn local_index_of(edges: &[EdgeData], q: &LatticePolygon) -> Result<Int> {
    let ell = edges[0].local_index;
    if edges.iter().any(|e| e.local_index != ell) {
        return Err(Error::NotLReflexive(edges.iter().map(|e| e.local_index).collect()));
    }
    if area2(q) != ell * boundary_count(q) {
        return Err(Error::Internal("twice the area is not index times boundary".into()));
    }
    Ok(ell)
}

/// `m_i = ell·eta_i`, one per edge in the polygon's edge order.
fn dual_vertices(edges: &[EdgeData]) -> Vec<Point2> {
    edges.iter().map(|e| e.eta).collect()
}

/// `Q* = ell·Q°`, whose vertices are the primitive inward edge normals.
pub fn dual(q: &LatticePolygon) -> Result<LatticePolygon> {
    let edges = edge_data(q)?;
    local_index_of(&edges, q)?;
    make_polygon(&dual_vertices(&edges))
}

pub fn combinatorial_triples(q: &LatticePolygon) -> Result<Vec<Triple>> {
    let edges = edge_data(q)?;
    triples_of(&edges)
}

fn triples_of(edges: &[EdgeData]) -> Result<Vec<Triple>> {
    let nu = edges.len();
    let mut out = Vec::with_capacity(nu);
    for i in 0..nu {
        let prev = &edges[(i + nu - 1) % nu];
        let cur = &edges[i];
        let n = cur.from;
        // neighbours of n_i in the minimal resolution fan
        let left = prev.hj.u[prev.hj.len()];
        let right = cur.hj.u[1];
        let sum = left + right;
        let r = if n.x != 0 { sum.x / n.x } else { sum.y / n.y };
        if r * n != sum {
            return Err(Error::Internal(format!("{sum} is not a multiple of {n}")));
        }
        out.push(Triple { p: cur.cone.p, q: cur.cone.q, r });
    }
    Ok(out)
}

/// Cyclic graph with vertex weights `-r_i` and edge weights `(p_i, q_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Wve2cGraph {
    pub triples: Vec<Triple>,
}

/// Canonical key: `(r, p, q)` per position, lexicographically least over
/// all rotations of the graph and of its reverse.
pub type GraphKey = Vec<(Int, Int, Int)>;

pub fn wve2c_graph(q: &LatticePolygon) -> Result<Wve2cGraph> {
    Ok(Wve2cGraph { triples: combinatorial_triples(q)? })
}

pub fn reverse(g: &Wve2cGraph) -> Wve2cGraph {
    let nu = g.triples.len();
    let triples = (0..nu)
        .map(|j| {
            let v = &g.triples[nu - 1 - j];
            let e = &g.triples[(2 * nu - 2 - j) % nu];
            let p = socius(e.p, e.q).expect("valid cone type");
            Triple { p, q: e.q, r: v.r }
        })
        .collect();
    Wve2cGraph { triples }
}

fn min_rotation(seq: &[(Int, Int, Int)]) -> Vec<(Int, Int, Int)> {
    (0..seq.len())
        .map(|s| seq[s..].iter().chain(&seq[..s]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

pub fn graph_key(g: &Wve2cGraph) -> GraphKey {
    let seq = |g: &Wve2cGraph| g.triples.iter().map(|t| (t.r, t.p, t.q)).collect::<Vec<_>>();
    let fwd = min_rotation(&seq(g));
    let rev = min_rotation(&seq(&reverse(g)));
    fwd.min(rev)
}

/// Key of the polygon's graph; equal keys mean unimodularly equivalent LDP polygons.
pub fn polygon_key(q: &LatticePolygon) -> Result<GraphKey> {
    Ok(graph_key(&wve2c_graph(q)?))
}

pub fn key_string(key: &GraphKey) -> String {
    let parts: Vec<String> = key.iter().map(|(r, p, q)| format!("{r}:{p}/{q}")).collect();
    parts.join(" ")
}

impl Wve2cGraph {
    /// Undirected cycle in DOT syntax.
    pub fn to_dot(&self) -> String {
        let nu = self.triples.len();
        let mut s = String::from("graph wve2c {\n");
        for (i, t) in self.triples.iter().enumerate() {
            let _ = writeln!(s, "  v{} [label=\"{}\"];", i + 1, -t.r);
        }
        for (i, t) in self.triples.iter().enumerate() {
            let _ = writeln!(s, "  v{} -- v{} [label=\"({},{})\"];", i + 1, (i + 1) % nu + 1, t.p, t.q);
        }
        s.push_str("}\n");
        s
    }
}

/// Sum of `(p + p̂ − 2)/q − Σ(b_j − 2)` over the singular cones: the
/// difference between the smooth and the singular `K^2`.
fn k2_correction(edges: &[EdgeData]) -> Rat {
    edges
        .iter()
        .filter(|e| !e.cone.is_basic())
        .map(|e| {
            let c = e.cone;
            rat(c.p + c.socius - 2, c.q) - rat_int(e.hj.b.iter().map(|b| b - 2).sum())
        })
        .sum()
}

fn euler_number(edges: &[EdgeData]) -> Int {
    edges.iter().map(|e| e.hj.len() as Int + 1).sum()
}

/// Euler number and `K^2` of the minimal desingularization.
pub fn smooth_invariants(q: &LatticePolygon) -> Result<(Int, Int)> {
    let edges = edge_data(q)?;
    let ell = local_index_of(&edges, q)?;
    let b_dual = boundary_count(&make_polygon(&dual_vertices(&edges))?);
    smooth_from(&edges, ell, b_dual)
}

fn smooth_from(edges: &[EdgeData], ell: Int, b_dual: Int) -> Result<(Int, Int)> {
    let e = euler_number(edges);
    let k2 = rat(b_dual, ell) + k2_correction(edges);
    if !k2.is_integer() {
        return Err(Error::Internal(format!("smooth K^2 = {k2} is not an integer")));
    }
    let k2 = k2.to_integer();
    if k2 + e != 12 {
        return Err(Error::Internal(format!("K^2 + e = {} + {} != 12", k2, e)));
    }
    Ok((e, k2))
}

/// `K^2` of the singular surface: boundary of the dual over `ell`, checked
/// against the Dedekind-sum expression.
pub fn k2_singular(q: &LatticePolygon) -> Result<Rat> {
    let edges = edge_data(q)?;
    let ell = local_index_of(&edges, q)?;
    let b_dual = boundary_count(&make_polygon(&dual_vertices(&edges))?);
    let (a, b) = (rat(b_dual, ell), k2_by_dedekind(&edges)?);
    if a != b {
        return Err(Error::Internal(format!("K^2 is {a} from the dual but {b} from Dedekind sums")));
    }
    Ok(a)
}

fn k2_by_dedekind(edges: &[EdgeData]) -> Result<Rat> {
    let mut k2 = rat_int(12 - edges.len() as Int);
    for e in edges {
        let c = e.cone;
        k2 += rat(2, c.q) - rat_int(12) * dedekind_sum(c.p, c.q)? - rat_int(2);
    }
    Ok(k2)
}

/// Boundary counts of `Q` and `Q*` and whether they sum to 12.
pub fn twelve_point(q: &LatticePolygon) -> Result<(Int, Int, bool)> {
    let bq = boundary_count(q);
    let bd = boundary_count(&dual(q)?);
    Ok((bq, bd, bq + bd == 12))
}

/// Types of the dual cones `cone(m_{i−1}, m_i)`, one per vertex `n_i`.
pub fn dual_cone_types(q: &LatticePolygon) -> Result<Vec<ConeType>> {
    let edges = edge_data(q)?;
    local_index_of(&edges, q)?;
    let m = dual_vertices(&edges);
    let nu = m.len();
    (0..nu).map(|i| cone_type(m[(i + nu - 1) % nu], m[i])).collect()
}

/// Dual cone types obtained from the primal data alone (two expressions
/// for `q*_i`, a congruence for `p*_i`) and checked against the dual
/// polygon's own cones.
pub fn dual_cone_data(q: &LatticePolygon) -> Result<Vec<ConeType>> {
    let edges = edge_data(q)?;
    let ell = local_index_of(&edges, q)?;
    if ell == 1 {
        return Err(Error::EllIsOne);
    }
    let triples = triples_of(&edges)?;
    let direct = dual_cone_types(q)?;
    let nu = edges.len();
    let ell2 = rat_int(ell * ell);
    for i in 0..nu {
        let prev = &edges[(i + nu - 1) % nu];
        let cur = &edges[i];
        let (qp, qc) = (prev.cone.q, cur.cone.q);
        let d = det(prev.from, cur.to);
        let q1 = ell2 * (rat(1, qp) + rat(1, qc) - rat(d, qp * qc));
        let q2 = ell2
            * (rat(qp - prev.cone.socius + 1, qp) + rat(qc - cur.cone.p + 1, qc) - rat_int(triples[i].r));
        let want = direct[i];
        if q1 != rat_int(want.q) || q2 != rat_int(want.q) {
            return Err(Error::Internal(format!("dual multiplicity {} vs {q1} and {q2}", want.q)));
        }
        let qs = want.q;
        // kappa·a − lambda·ell = 1 with a = (ell/q_i)(p_i − 1)
        let a = ell * (cur.cone.p - 1) / qc;
        let (g, kappa, l) = gcd_extended(a, ell);
        if g != 1 {
            return Err(Error::Internal(format!("gcd({a}, {ell}) = {g}")));
        }
        let lambda = -l;
        let c = rat(ell, qp) * rat_int((triples[i].r - 2) * qp + prev.cone.socius - 1);
        if !c.is_integer() {
            return Err(Error::Internal(format!("non-integral congruence term {c}")));
        }
        let z = (kappa * c.to_integer() + lambda * ell).rem_euclid(qs);
        let got = ConeType { p: qs - socius(z, qs)?, q: qs, socius: qs - z };
        if z == 0 || got != want {
            return Err(Error::Internal(format!("dual type {want:?} but congruence gives {got:?}")));
        }
    }
    Ok(direct)
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Holds,
    Fails(String),
    Skipped(&'static str),
}

impl Check {
    fn eq<T: PartialEq + std::fmt::Display>(lhs: T, rhs: T) -> Check {
        if lhs == rhs {
            Check::Holds
        } else {
            Check::Fails(format!("{lhs} != {rhs}"))
        }
    }

    fn from_result<T>(r: Result<T>) -> Check {
        match r {
            Ok(_) => Check::Holds,
            Err(e) => Check::Fails(e.to_string()),
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Check::Fails(_))
    }
}

impl Serialize for Check {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Check::Holds => s.serialize_bool(true),
            Check::Fails(_) => s.serialize_bool(false),
            Check::Skipped(why) => s.serialize_str(&format!("skipped: {why}")),
        }
    }
}

const SKIP_ELL1: &str = "ell=1";

/// Sum over `i` of `det(n_i, n_{i+2})/(q_i q_{i+1})`.
fn det_sum(edges: &[EdgeData]) -> Rat {
    let nu = edges.len();
    (0..nu)
        .map(|i| {
            let (a, b) = (&edges[i], &edges[(i + 1) % nu]);
            rat(det(a.from, b.to), a.cone.q * b.cone.q)
        })
        .sum()
}

fn multiplicity_sum(edges: &[EdgeData], ell: Int) -> Rat {
    edges.iter().map(|e| rat(e.cone.q, ell) + rat(2 * ell, e.cone.q)).sum()
}

/// Sum of the multiplicities weighted by the determinants of second neighbours.
fn determinant_identity(edges: &[EdgeData], ell: Int) -> Check {
    Check::eq(multiplicity_sum(edges, ell), rat_int(ell) * det_sum(edges) + rat_int(12))
}

fn dedekind_identity(edges: &[EdgeData]) -> Result<Check> {
    let mut lhs = rat_int(0);
    for e in edges {
        lhs += rat_int(12) * dedekind_sum(e.cone.p, e.cone.q)?;
    }
    Ok(Check::eq(lhs, rat_int(12 - 3 * edges.len() as Int) + det_sum(edges)))
}

fn triple_identity(edges: &[EdgeData], triples: &[Triple], ell: Int) -> Check {
    let nu = edges.len() as Int;
    let rhs: Rat = edges
        .iter()
        .zip(triples)
        .map(|(e, t)| rat_int(ell) * (rat(e.cone.p + e.cone.socius, e.cone.q) + rat_int(t.r)))
        .sum();
    Check::eq(multiplicity_sum(edges, ell), rat_int(12 - 2 * ell * nu) + rhs)
}

/// `Σ r_i = 3ν − 12 − ΣΣ(b_j − 3)`.
fn self_intersection_identity(edges: &[EdgeData], triples: &[Triple]) -> Check {
    let lhs: Int = triples.iter().map(|t| t.r).sum();
    let b: Int = edges.iter().flat_map(|e| e.hj.b.iter()).map(|b| b - 3).sum();
    Check::eq(lhs, 3 * edges.len() as Int - 12 - b)
}

/// Rotation number of the vertex sequence from cone data.
fn rotation_by_cones(edges: &[EdgeData]) -> Rat {
    let nu = edges.len();
    let total: Rat = (0..nu)
        .map(|i| {
            let (prev, cur) = (&edges[(i + nu - 1) % nu], &edges[i]);
            let c = cur.cone;
            let s = cur.hj.len() as Int;
            let bsum: Int = cur.hj.b.iter().sum();
            rat_int(3 * (s + 1) - bsum)
                - rat(det(prev.from, cur.to), prev.cone.q * c.q)
                - rat((c.q - c.p) + (c.q - c.socius), c.q)
        })
        .sum();
    total / rat_int(12)
}

/// Winding number of the closed vertex path around the origin.
pub fn winding_number(vertices: &[Point2]) -> Int {
    let n = vertices.len();
    let mut wn = 0;
    for i in 0..n {
        let (a, b) = (vertices[i], vertices[(i + 1) % n]);
        if a.y <= 0 && b.y > 0 && det(a, b) > 0 {
            wn += 1;
        } else if a.y > 0 && b.y <= 0 && det(a, b) < 0 {
            wn -= 1;
        }
    }
    wn
}

/// Shared intermediate data for an l-reflexive polygon and its dual.
struct Pair {
    ell: Int,
    q: LatticePolygon,
    edges: Vec<EdgeData>,
    triples: Vec<Triple>,
    dual: LatticePolygon,
    dual_edges: Vec<EdgeData>,
    dual_triples: Vec<Triple>,
}

impl Pair {
    fn new(q: &LatticePolygon) -> Result<Pair> {
        let edges = edge_data(q)?;
        let ell = local_index_of(&edges, q)?;
        let dual = make_polygon(&dual_vertices(&edges))?;
        let dual_edges = edge_data(&dual)?;
        if local_index_of(&dual_edges, &dual)? != ell {
            return Err(Error::Internal("dual polygon has a different index".into()));
        }
        Ok(Pair {
            ell,
            q: q.clone(),
            triples: triples_of(&edges)?,
            edges,
            dual_triples: triples_of(&dual_edges)?,
            dual,
            dual_edges,
        })
    }

    fn smooth(&self) -> Result<(Int, Int)> {
        smooth_from(&self.edges, self.ell, boundary_count(&self.dual))
    }

    fn dual_smooth(&self) -> Result<(Int, Int)> {
        smooth_from(&self.dual_edges, self.ell, boundary_count(&self.q))
    }
}

/// Every identity evaluated exactly; those that need `ell > 1` are skipped
/// for reflexive polygons.
pub fn identities_report(q: &LatticePolygon) -> Result<BTreeMap<String, Check>> {
    let pair = Pair::new(q)?;
    identities_of(&pair)
}

fn identities_of(pair: &Pair) -> Result<BTreeMap<String, Check>> {
    let ell = pair.ell;
    let mut out = BTreeMap::new();
    let mut put = |k: &str, c: Check| {
        out.insert(k.to_string(), c);
    };
    let (bq, bd) = (boundary_count(&pair.q), boundary_count(&pair.dual));
    put("twelve_point", Check::eq(bq + bd, 12));
    put("boundary_area", Check::eq(area2(&pair.q), ell * bq));
    put("boundary_area_dual", Check::eq(area2(&pair.dual), ell * bd));
    put("noether", Check::from_result(pair.smooth()));
    put("noether_dual", Check::from_result(pair.dual_smooth()));
    put("k2_two_ways", Check::eq(rat(bd, ell), k2_by_dedekind(&pair.edges)?));
    put("k2_two_ways_dual", Check::eq(rat(bq, ell), k2_by_dedekind(&pair.dual_edges)?));
    put("determinant_sum", determinant_identity(&pair.edges, ell));
    put("determinant_sum_dual", determinant_identity(&pair.dual_edges, ell));
    put("self_intersection_sum", self_intersection_identity(&pair.edges, &pair.triples));
    put("self_intersection_sum_dual", self_intersection_identity(&pair.dual_edges, &pair.dual_triples));
    put("winding_number", Check::eq(winding_number(pair.q.vertices()), 1));
    let genus = (ell - 1) * bd / 2 + 1;
    put("genus_interior", Check::eq(genus, interior_count(&pair.dual)));
    let bidual = make_polygon(&dual_vertices(&pair.dual_edges))?;
    put("bidual", Check::eq(bidual.to_text(), pair.q.to_text()));
    if ell == 1 {
        for k in [
            "dedekind_sum",
            "dedekind_sum_dual",
            "triple_sum",
            "triple_sum_dual",
            "rotation_number",
            "dual_types_from_primal",
            "characteristic_differences",
        ] {
            put(k, Check::Skipped(SKIP_ELL1));
        }
        return Ok(out);
    }
    put("dedekind_sum", dedekind_identity(&pair.edges)?);
    put("dedekind_sum_dual", dedekind_identity(&pair.dual_edges)?);
    put("triple_sum", triple_identity(&pair.edges, &pair.triples, ell));
    put("triple_sum_dual", triple_identity(&pair.dual_edges, &pair.dual_triples, ell));
    put("rotation_number", Check::eq(rotation_by_cones(&pair.edges), rat_int(1)));
    put("dual_types_from_primal", Check::from_result(dual_cone_data(&pair.q)));
    put("characteristic_differences", Check::from_result(char_diffs(pair)));
    Ok(out)
}

/// Boundary counts of `I(Q*)` and `I(Q)`, each computed from the hull, from
/// the boundary minus the smooth `K^2`, and from the Euler number.
pub fn characteristic_differences(q: &LatticePolygon) -> Result<(Int, Int)> {
    char_diffs(&Pair::new(q)?)
}

fn char_diffs(pair: &Pair) -> Result<(Int, Int)> {
    let (bq, bd) = (boundary_count(&pair.q), boundary_count(&pair.dual));
    let (e, k2) = pair.smooth()?;
    let (e_d, k2_d) = pair.dual_smooth()?;
    let d_star = [bd - k2, e - bq];
    let d = [bq - k2_d, e_d - bd];
    if pair.ell == 1 {
        // I(Q) is the origin here; only the formula sides are meaningful
        if d_star != [0, 0] || d != [0, 0] {
            return Err(Error::Internal(format!("reflexive differences {d_star:?} {d:?}")));
        }
        return Ok((0, 0));
    }
    let hull_star = interior_hull(&pair.dual).boundary_count();
    let hull = interior_hull(&pair.q).boundary_count();
    if d_star != [hull_star; 2] || d != [hull; 2] {
        return Err(Error::Internal(format!(
            "differences disagree: dual side {hull_star} {d_star:?}, primal side {hull} {d:?}"
        )));
    }
    Ok((hull_star, hull))
}

/// Whether the anticanonical curves of the surface and of its dual have
/// the same genus. For `ell > 1` this means both boundary counts are 6.
pub fn mirror_genus_equal(ell: Int, boundary_q: Int, boundary_dual: Int) -> bool {
    ell == 1 || boundary_q == boundary_dual
}

/// Sectional genus and whether it equals the genus on the dual side.
pub fn sectional_genus(q: &LatticePolygon) -> Result<(Int, bool)> {
    let d = dual(q)?;
    let ell = require_l_reflexive(q)?;
    let bd = boundary_count(&d);
    let g = (ell - 1) * bd / 2 + 1;
    if g != interior_count(&d) {
        return Err(Error::Internal(format!("genus {g} but {} interior points", interior_count(&d))));
    }
    Ok((g, mirror_genus_equal(ell, boundary_count(q), bd)))
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeSummary {
    pub cone: ConeType,
    pub from: Point2,
    pub hj: Vec<Int>,
    pub local_index: Int,
    pub to: Point2,
}

#[derive(Clone, Debug, Serialize)]
pub struct HullSummary {
    pub boundary: Int,
    pub interior: Int,
    pub kind: HullKind,
    pub vertices: Vec<Point2>,
}

impl From<&Hull> for HullSummary {
    fn from(h: &Hull) -> Self {
        HullSummary { boundary: h.boundary_count(), interior: h.interior_count(), kind: h.kind, vertices: h.points.clone() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverRef {
    pub j: usize,
    pub k: Int,
}

/// Everything known about an l-reflexive polygon.
#[allow(non_snake_case)]
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub ell: Int,
    pub nu: usize,
    pub vertices: Vec<Point2>,
    pub dual_vertices: Vec<Point2>,
    pub boundary_Q: Int,
    pub boundary_Qstar: Int,
    pub area2_Q: Int,
    pub area2_Qstar: Int,
    pub e_smooth: Int,
    pub e_smooth_dual: Int,
    #[serde(serialize_with = "serialize_rat")]
    pub K2_singular: Rat,
    pub K2_smooth: Int,
    pub K2_smooth_dual: Int,
    pub edges: Vec<EdgeSummary>,
    pub dual_cones: Vec<ConeType>,
    pub triples: Vec<Triple>,
    pub dual_triples: Vec<Triple>,
    pub twelve_ok: bool,
    pub noether_ok: bool,
    pub identities_ok: BTreeMap<String, Check>,
    pub char_diff_Qstar: Int,
    pub char_diff_Q: Int,
    pub interior_hull_Q: HullSummary,
    pub interior_hull_Qstar: HullSummary,
    pub genus: Int,
    pub tmp: bool,
    pub rotation: Int,
    pub cover: CoverRef,
    pub fiber_types: Vec<FiberType>,
    pub key: String,
}

impl InvariantReport {
    /// True when no evaluated identity failed.
    pub fn all_ok(&self) -> bool {
        self.twelve_ok && self.noether_ok && !self.identities_ok.values().any(Check::is_failure)
    }
}

pub fn invariant_report(q: &LatticePolygon) -> Result<InvariantReport> {
    let pair = Pair::new(q)?;
    let ell = pair.ell;
    let identities = identities_of(&pair)?;
    let (bq, bd) = (boundary_count(q), boundary_count(&pair.dual));
    let smooth = pair.smooth();
    let (e, k2) = smooth.clone().unwrap_or((euler_number(&pair.edges), 0));
    let (e_d, k2_d) = pair.dual_smooth().unwrap_or((euler_number(&pair.dual_edges), 0));
    let (dq_star, dq) = char_diffs(&pair).unwrap_or((-1, -1));
    let cover = covering::cover_decomposition(q)?;
    Ok(InvariantReport {
        ell,
        nu: q.nu(),
        vertices: q.vertices().to_vec(),
        dual_vertices: pair.dual.vertices().to_vec(),
        boundary_Q: bq,
        boundary_Qstar: bd,
        area2_Q: area2(q),
        area2_Qstar: area2(&pair.dual),
        e_smooth: e,
        e_smooth_dual: e_d,
        K2_singular: rat(bd, ell),
        K2_smooth: k2,
        K2_smooth_dual: k2_d,
        edges: pair
            .edges
            .iter()
            .map(|e| EdgeSummary { cone: e.cone, from: e.from, hj: e.hj.b.clone(), local_index: e.local_index, to: e.to })
            .collect(),
        dual_cones: dual_cone_types(q)?,
        triples: pair.triples.clone(),
        dual_triples: pair.dual_triples.clone(),
        twelve_ok: bq + bd == 12,
        noether_ok: smooth.is_ok(),
        identities_ok: identities,
        char_diff_Qstar: dq_star,
        char_diff_Q: dq,
        interior_hull_Q: (&interior_hull(q)).into(),
        interior_hull_Qstar: (&interior_hull(&pair.dual)).into(),
        genus: (ell - 1) * bd / 2 + 1,
        tmp: mirror_genus_equal(ell, bq, bd),
        rotation: winding_number(q.vertices()),
        cover: CoverRef { j: cover.j, k: cover.k },
        fiber_types: covering::fiber_singularity_types(q)?,
        key: key_string(&graph_key(&Wve2cGraph { triples: pair.triples.clone() })),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::pt;

    fn poly(v: &[(Int, Int)]) -> LatticePolygon {
        make_polygon(&v.iter().map(|&(x, y)| pt(x, y)).collect::<Vec<_>>()).unwrap()
    }

    fn pentagon() -> LatticePolygon {
        poly(&[(3, -10), (1, 0), (-1, 5), (-2, 5), (-1, 0)])
    }

    fn quadrilateral() -> LatticePolygon {
        poly(&[(3, -13), (-1, 13), (-3, 13), (1, -13)])
    }

    fn q1() -> LatticePolygon {
        poly(&[(1, 0), (0, 1), (-1, -1)])
    }

    fn hexagon(l: Int) -> LatticePolygon {
        poly(&[(1, 0), (-1, l), (-2, l), (-1, 0), (1, -l), (2, -l)])
    }

    /// Rotates a per-edge list so that it starts at the edge leaving `start`.
    fn from_vertex<T: Clone>(q: &LatticePolygon, start: Point2, v: Vec<T>) -> Vec<T> {
        let i = q.vertices().iter().position(|&x| x == start).unwrap();
        let mut v = v;
        v.rotate_left(i);
        v
    }

    #[test]
    fn pentagon_edges() {
        let q = pentagon();
        let e = edge_data(&q).unwrap();
        let types: Vec<(Int, Int, Int)> = e.iter().map(|e| (e.cone.p, e.cone.q, e.cone.socius)).collect();
        let types = from_vertex(&q, pt(3, -10), types);
        assert_eq!(types, vec![(7, 10, 3), (4, 5, 4), (2, 5, 3), (3, 5, 2), (7, 10, 3)]);
        assert!(e.iter().all(|e| e.local_index == 5));
        assert_eq!(ldp_index(&q), Ok(5));
    }

    #[test]
    fn basic_examples() {
        let e = edge_data(&q1()).unwrap();
        assert!(e.iter().all(|e| e.cone == ConeType::BASIC && e.local_index == 1));
        let q3 = poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        assert_eq!(ldp_index(&q3), Ok(1));
        assert_eq!(ldp_index(&poly(&[(0, 1), (14, 3), (-21, -5)])), Ok(7));
        assert_eq!(is_l_reflexive(&hexagon(9)), Some(9));
        assert_eq!(is_l_reflexive(&poly(&[(2, 0), (0, 2), (-4, -2)])), None);
        assert_eq!(edge_data(&poly(&[(0, 0), (1, 0), (0, 1)])).map_err(|e| e.code()), Err("NOT_LDP"));
    }

    #[test]
    fn duals() {
        assert_eq!(dual(&pentagon()).unwrap(), poly(&[(-5, -1), (-5, -2), (0, -1), (5, 1), (5, 2)]));
        let q3 = poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        assert_eq!(dual(&q3).unwrap(), poly(&[(-1, -1), (1, -1), (1, 1), (-1, 1)]));
        assert_eq!(dual(&quadrilateral()).unwrap(), poly(&[(-13, -2), (0, -1), (13, 2), (0, 1)]));
        let p = pentagon();
        assert_eq!(dual(&dual(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn triples_and_keys() {
        let t = combinatorial_triples(&q1()).unwrap();
        assert!(t.iter().all(|t| t.r == -1));
        let r: Int = combinatorial_triples(&pentagon()).unwrap().iter().map(|t| t.r).sum();
        assert_eq!(r, 5);
        let q7 = poly(&[(1, -1), (-1, 2), (-1, -1)]);
        let q7p = poly(&[(-3, -2), (1, 0), (0, 1)]);
        assert_eq!(polygon_key(&q7), polygon_key(&q7p));
        let q3 = poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        assert_ne!(polygon_key(&q3), polygon_key(&q1()));
        let h = hexagon(3);
        let g = wve2c_graph(&h).unwrap();
        let gd = wve2c_graph(&dual(&h).unwrap()).unwrap();
        assert_eq!(graph_key(&gd), graph_key(&reverse(&g)));
        assert_eq!(reverse(&reverse(&g)), g);
    }

    #[test]
    fn surface_invariants() {
        assert_eq!(smooth_invariants(&pentagon()), Ok((16, -4)));
        assert_eq!(smooth_invariants(&q1()), Ok((3, 9)));
        assert_eq!(smooth_invariants(&quadrilateral()), Ok((26, -14)));
        assert_eq!(k2_singular(&pentagon()), Ok(rat_int(1)));
        assert_eq!(k2_singular(&q1()), Ok(rat_int(9)));
        assert_eq!(k2_singular(&hexagon(9)), Ok(rat(2, 3)));
        assert_eq!(twelve_point(&q1()), Ok((3, 9, true)));
        assert_eq!(twelve_point(&pentagon()), Ok((7, 5, true)));
        assert_eq!(twelve_point(&hexagon(9)), Ok((6, 6, true)));
    }

    #[test]
    fn dual_cones() {
        let q = pentagon();
        let types: Vec<(Int, Int)> = dual_cone_data(&q).unwrap().iter().map(|c| (c.p, c.q)).collect();
        let types = from_vertex(&q, pt(3, -10), types);
        assert_eq!(types, vec![(2, 5), (2, 5), (3, 5), (4, 5), (2, 5)]);
        let mut quad: Vec<(Int, Int)> =
            dual_cone_data(&quadrilateral()).unwrap().iter().map(|c| (c.p, c.q)).collect();
        quad.sort();
        assert_eq!(quad, vec![(7, 13), (7, 13), (11, 13), (11, 13)]);
        assert_eq!(dual_cone_data(&q1()), Err(Error::EllIsOne));
    }

    #[test]
    fn identities() {
        for q in [pentagon(), quadrilateral(), hexagon(9)] {
            let r = identities_report(&q).unwrap();
            assert!(r.values().all(|c| *c == Check::Holds), "{q}: {r:?}");
        }
        let q14 = poly(&[(-1, -1), (1, -1), (1, 1), (-1, 1)]);
        let r = identities_report(&q14).unwrap();
        assert_eq!(r["self_intersection_sum"], Check::Holds);
        assert_eq!(r["dedekind_sum"], Check::Skipped("ell=1"));
        assert!(!r.values().any(Check::is_failure));
    }

    #[test]
    fn differences_and_genus() {
        assert_eq!(characteristic_differences(&pentagon()), Ok((9, 9)));
        assert_eq!(characteristic_differences(&quadrilateral()), Ok((18, 16)));
        let q3 = poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        assert_eq!(characteristic_differences(&q3), Ok((0, 0)));
        assert_eq!(sectional_genus(&q1()), Ok((1, true)));
        assert_eq!(sectional_genus(&pentagon()), Ok((11, false)));
        assert_eq!(sectional_genus(&hexagon(7)), Ok((19, true)));
    }

    #[test]
    fn dot_export() {
        let dot = wve2c_graph(&pentagon()).unwrap().to_dot();
        assert_eq!(dot.matches(" -- ").count(), 5);
        assert!(dot.contains("label=\"(7,10)\""));
    }
}
