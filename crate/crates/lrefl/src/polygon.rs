//! Lattice polygons in the standard lattice: convex hulls, lattice-point
//! counts, Ehrhart data, polars, interior hulls and linear images.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{det, pt, rat, rat_int, Int, Mat2, Point2, Rat};

/// Counterclockwise vertex list starting at the lexicographically smallest
/// vertex. Every vertex is extreme, so equal polygons compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePolygon {
    vertices: Vec<Point2>,
}

impl LatticePolygon {
    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    /// Number of vertices.
    pub fn nu(&self) -> usize {
        self.vertices.len()
    }

    /// Vertex `i` with cyclic indexing.
    pub fn vertex(&self, i: isize) -> Point2 {
        let n = self.vertices.len() as isize;
        self.vertices[i.rem_euclid(n) as usize]
    }

    /// Edges `(v_i, v_{i+1})` in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// True when `p` lies in the closed polygon.
    pub fn contains(&self, p: Point2) -> bool {
        self.edges().all(|(a, b)| det(b - a, p - a) >= 0)
    }

    pub fn contains_strictly(&self, p: Point2) -> bool {
        self.edges().all(|(a, b)| det(b - a, p - a) > 0)
    }

    /// `k·P` for `k >= 1`.
    pub fn scale(&self, k: Int) -> LatticePolygon {
        assert!(k >= 1, "scale factor must be positive");
        LatticePolygon { vertices: self.vertices.iter().map(|&v| k * v).collect() }
    }

    /// Semicolon-separated `x,y` pairs.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.vertices.iter().map(|v| format!("{},{}", v.x, v.y)).collect();
        parts.join(";")
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Counterclockwise strictly convex polygon with rational vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPolygon {
    pub vertices: Vec<(Rat, Rat)>,
}

impl RationalPolygon {
    pub fn from_lattice(p: &LatticePolygon) -> RationalPolygon {
        RationalPolygon {
            vertices: p.vertices.iter().map(|v| (rat_int(v.x), rat_int(v.y))).collect(),
        }
    }

    /// The same polygon when every vertex is integral.
    pub fn to_lattice(&self) -> Option<LatticePolygon> {
        let mut vs = Vec::with_capacity(self.vertices.len());
        for (x, y) in &self.vertices {
            if !x.is_integer() || !y.is_integer() {
                return None;
            }
            vs.push(pt(x.to_integer(), y.to_integer()));
        }
        make_polygon(&vs).ok()
    }

    pub fn scale(&self, k: Int) -> RationalPolygon {
        let k = rat_int(k);
        RationalPolygon { vertices: self.vertices.iter().map(|&(x, y)| (x * k, y * k)).collect() }
    }

    /// Smallest `k >= 1` with `k·P` a lattice polygon.
    pub fn denominator(&self) -> Int {
        self.vertices.iter().fold(1, |acc, (x, y)| acc.lcm(x.denom()).lcm(y.denom()))
    }

    /// Polar polygon `{x : <x,y> >= -1 for all y in P}`.
    pub fn polar(&self) -> Result<RationalPolygon> {
        let n = self.vertices.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let (ax, ay) = self.vertices[i];
            let (bx, by) = self.vertices[(i + 1) % n];
            let d = ax * by - ay * bx;
            if d <= rat_int(0) {
                return Err(Error::OriginNotInterior);
            }
            out.push(((ay - by) / d, (bx - ax) / d));
        }
        Ok(RationalPolygon { vertices: rotate_to_min(out) })
    }
}

fn rotate_to_min<T: Ord + Clone>(mut v: Vec<T>) -> Vec<T> {
    if let Some(i) = (0..v.len()).min_by(|&a, &b| v[a].cmp(&v[b])) {
        v.rotate_left(i);
    }
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HullKind {
    Empty,
    Point,
    Segment,
    Polygon,
}

/// Convex hull of a finite point set, possibly degenerate. `points` holds
/// the vertices (the two endpoints for a segment).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hull {
    pub kind: HullKind,
    pub points: Vec<Point2>,
}

impl Hull {
    pub fn of(points: &[Point2]) -> Hull {
        let mut ps = points.to_vec();
        ps.sort();
        ps.dedup();
        match ps.len() {
            0 => return Hull { kind: HullKind::Empty, points: ps },
            1 => return Hull { kind: HullKind::Point, points: ps },
            _ => {}
        }
        match make_polygon(&ps) {
            Ok(p) => Hull { kind: HullKind::Polygon, points: p.vertices },
            Err(_) => {
                let (a, b) = (ps[0], ps[ps.len() - 1]);
                Hull { kind: HullKind::Segment, points: vec![a, b] }
            }
        }
    }

    pub fn as_polygon(&self) -> Option<LatticePolygon> {
        match self.kind {
            HullKind::Polygon => Some(LatticePolygon { vertices: self.points.clone() }),
            _ => None,
        }
    }

    /// Lattice points on the boundary; for a segment every lattice point of it.
    pub fn boundary_count(&self) -> Int {
        match self.kind {
            HullKind::Empty => 0,
            HullKind::Point => 1,
            HullKind::Segment => (self.points[1] - self.points[0]).content() + 1,
            HullKind::Polygon => boundary_count(&self.as_polygon().unwrap()),
        }
    }

    pub fn interior_count(&self) -> Int {
        self.as_polygon().map_or(0, |p| interior_count(&p))
    }
}

/// Convex hull of `points`; collinear boundary points are dropped from the
/// vertex list.
pub fn make_polygon(points: &[Point2]) -> Result<LatticePolygon> {
    let mut ps = points.to_vec();
    ps.sort();
    ps.dedup();
    if ps.len() < 3 {
        return Err(Error::DegenerateHull);
    }
    // Andrew's monotone chain
    let mut hull: Vec<Point2> = Vec::with_capacity(2 * ps.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point2>> =
            if pass == 0 { Box::new(ps.iter()) } else { Box::new(ps.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 {
                let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
                if det(b - a, p - a) > 0 {
                    break;
                }
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    if hull.len() < 3 {
        return Err(Error::DegenerateHull);
    }
    Ok(LatticePolygon { vertices: hull })
}

/// Twice the Euclidean area.
pub fn area2(p: &LatticePolygon) -> Int {
    p.edges().map(|(a, b)| det(a, b)).sum()
}

pub fn boundary_count(p: &LatticePolygon) -> Int {
    p.edges().map(|(a, b)| (b - a).content()).sum()
}

/// Interior lattice points via Pick's formula.
pub fn interior_count(p: &LatticePolygon) -> Int {
    (area2(p) - boundary_count(p) + 2) / 2
}

/// All lattice points of `P` by a bounding-box scan.
pub fn lattice_points(p: &LatticePolygon) -> Vec<Point2> {
    let (x0, x1) = bounds(p.vertices.iter().map(|v| v.x));
    let (y0, y1) = bounds(p.vertices.iter().map(|v| v.y));
    let mut out = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            if p.contains(pt(x, y)) {
                out.push(pt(x, y));
            }
        }
    }
    out
}

fn bounds(it: impl Iterator<Item = Int>) -> (Int, Int) {
    it.fold((Int::MAX, Int::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

fn interior_points(p: &LatticePolygon) -> Vec<Point2> {
    lattice_points(p).into_iter().filter(|&q| p.contains_strictly(q)).collect()
}

/// Coefficients `(c2, c1, c0)` of the Ehrhart polynomial.
pub fn ehrhart(p: &LatticePolygon) -> (Rat, Rat, Rat) {
    (rat(area2(p), 2), rat(boundary_count(p), 2), rat_int(1))
}

pub fn polar(p: &LatticePolygon) -> Result<RationalPolygon> {
    RationalPolygon::from_lattice(p).polar()
}

/// `conv(int(P) ∩ Z^2)`.
pub fn interior_hull(p: &LatticePolygon) -> Hull {
    Hull::of(&interior_points(p))
}

/// Image of `P` under `v -> M·v`.
pub fn apply_map(p: &LatticePolygon, m: Mat2) -> Result<LatticePolygon> {
    if m.det() == 0 {
        return Err(Error::SingularMatrix);
    }
    let image: Vec<Point2> = p.vertices.iter().map(|&v| m.apply(v)).collect();
    make_polygon(&image)
}

/// A unimodular `M` with `M(P) = P'`, searched by sending one edge of `P`
/// to every edge of `P'` in both orientations.
pub fn find_equivalence(p: &LatticePolygon, q: &LatticePolygon) -> Option<Mat2> {
    if p.nu() != q.nu() {
        return None;
    }
    let n = p.nu() as isize;
    let i = (0..n).find(|&i| det(p.vertex(i), p.vertex(i + 1)) != 0)?;
    let (v0, v1) = (p.vertex(i), p.vertex(i + 1));
    let src = Mat2::from_columns(v0, v1);
    let d = src.det();
    for j in 0..n {
        for (w0, w1) in [(q.vertex(j), q.vertex(j + 1)), (q.vertex(j + 1), q.vertex(j))] {
            // M = W·adj(V)/det(V)
            let w = Mat2::from_columns(w0, w1);
            let adj = Mat2 { a: src.d, b: -src.b, c: -src.c, d: src.a };
            let num = w * adj;
            if [num.a, num.b, num.c, num.d].iter().any(|e| e % d != 0) {
                continue;
            }
            let m = Mat2 { a: num.a / d, b: num.b / d, c: num.c / d, d: num.d / d };
            if m.is_unimodular() && apply_map(p, m).as_ref() == Ok(q) {
                return Some(m);
            }
        }
    }
    None
}

/// Parses `"x1,y1;x2,y2;..."` or `{"vertices": [[x,y],...]}`.
pub fn parse_polygon(text: &str) -> Result<LatticePolygon> {
    let t = text.trim();
    let points = if t.starts_with('{') {
        #[derive(serde::Deserialize)]
        struct Doc {
            vertices: Vec<[Int; 2]>,
        }
        let doc: Doc = serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
        doc.vertices.iter().map(|v| pt(v[0], v[1])).collect::<Vec<_>>()
    } else {
        let mut ps = Vec::new();
        for part in t.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (x, y) = part
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected x,y but found {part:?}")))?;
            let num = |s: &str| {
                s.trim().parse::<Int>().map_err(|_| Error::Parse(format!("bad integer {s:?}")))
            };
            ps.push(pt(num(x)?, num(y)?));
        }
        ps
    };
    if points.len() < 3 {
        return Err(Error::Parse(format!("need at least 3 points, found {}", points.len())));
    }
    make_polygon(&points)
}
