//! Integer and rational substrate: points and 2x2 matrices over `i64`,
//! extended gcd, Hermite normal form and sublattice coordinates.
//!
//! All arithmetic is exact. The workspace builds every profile with
//! overflow checks enabled, so an intermediate value that leaves the `i64`
//! range aborts with a panic instead of wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::ser::{Serialize, SerializeTuple, Serializer};

use crate::error::{Error, Result};

pub type Int = i64;
pub type Rat = num_rational::Ratio<Int>;

pub fn rat(num: Int, den: Int) -> Rat {
    Rat::new(num, den)
}

pub fn rat_int(n: Int) -> Rat {
    Rat::from_integer(n)
}

/// `"num/den"` rendering used by every serialized rational.
pub fn rat_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn serialize_rat<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rat_string(r))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Int,
    pub y: Int,
}

pub const fn pt(x: Int, y: Int) -> Point2 {
    Point2 { x, y }
}

impl Point2 {
    pub const ORIGIN: Point2 = pt(0, 0);

    pub fn dot(self, o: Point2) -> Int {
        self.x * o.x + self.y * o.y
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// Lattice length: gcd of the absolute coordinates.
    pub fn content(self) -> Int {
        self.x.gcd(&self.y)
    }

    /// Exact division by `d`, `None` unless both coordinates are multiples.
    pub fn div_exact(self, d: Int) -> Option<Point2> {
        if d == 0 || self.x % d != 0 || self.y % d != 0 {
            None
        } else {
            Some(pt(self.x / d, self.y / d))
        }
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Serialize for Point2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.x)?;
        t.serialize_element(&self.y)?;
        t.end()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        pt(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        pt(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        pt(-self.x, -self.y)
    }
}

impl Mul<Point2> for Int {
    type Output = Point2;
    fn mul(self, p: Point2) -> Point2 {
        pt(self * p.x, self * p.y)
    }
}

/// det(a, b) = a.x·b.y − a.y·b.x.
pub fn det(a: Point2, b: Point2) -> Int {
    a.x * b.y - a.y * b.x
}

pub fn is_primitive(p: Point2) -> bool {
    !p.is_zero() && p.content() == 1
}

/// Returns `(g, k, l)` with `g = gcd(|a|, |b|)` and `k·a + l·b = g`.
/// `gcd_extended(0, 0)` is `(0, 0, 0)`.
pub fn gcd_extended(a: Int, b: Int) -> (Int, Int, Int) {
    if a == 0 && b == 0 {
        return (0, 0, 0);
    }
    let (mut old_r, mut r) = (a.abs(), b.abs());
    let (mut old_s, mut s) = (1, 0);
    let (mut old_t, mut t) = (0, 1);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s * sign_or_one(a), old_t * sign_or_one(b))
}

fn sign_or_one(v: Int) -> Int {
    if v < 0 {
        -1
    } else {
        1
    }
}

/// Row-major 2x2 integer matrix `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: Int,
    pub b: Int,
    pub c: Int,
    pub d: Int,
}

pub const fn mat(a: Int, b: Int, c: Int, d: Int) -> Mat2 {
    Mat2 { a, b, c, d }
}

impl Mat2 {
    pub const IDENTITY: Mat2 = mat(1, 0, 0, 1);

    pub fn from_columns(c1: Point2, c2: Point2) -> Mat2 {
        mat(c1.x, c2.x, c1.y, c2.y)
    }

    pub fn col1(&self) -> Point2 {
        pt(self.a, self.c)
    }

    pub fn col2(&self) -> Point2 {
        pt(self.b, self.d)
    }

    pub fn det(&self) -> Int {
        self.a * self.d - self.b * self.c
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs() == 1
    }

    pub fn transpose(&self) -> Mat2 {
        mat(self.a, self.c, self.b, self.d)
    }

    pub fn apply(&self, p: Point2) -> Point2 {
        pt(self.a * p.x + self.b * p.y, self.c * p.x + self.d * p.y)
    }

    /// Integral inverse, present only for unimodular matrices.
    pub fn inverse(&self) -> Option<Mat2> {
        let dt = self.det();
        if dt.abs() != 1 {
            return None;
        }
        Some(mat(self.d * dt, -self.b * dt, -self.c * dt, self.a * dt))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        mat(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [[self.a, self.b], [self.c, self.d]].serialize(s)
    }
}

/// Hermite normal form under row operations: `H = U·M` with `U`
/// unimodular, `H` lower-triangular, positive diagonal and
/// `0 <= H.c < H.a`.
pub fn hermite_normal_form(m: Mat2) -> Result<(Mat2, Mat2)> {
    if m.det() == 0 {
        return Err(Error::SingularMatrix);
    }
    let (g, x, y) = gcd_extended(m.b, m.d);
    // rows: (d/g)·r1 − (b/g)·r2 clears column two, x·r1 + y·r2 carries g
    let mut u = mat(m.d / g, -m.b / g, x, y);
    let mut h = u * m;
    if h.a < 0 {
        u = mat(-1, 0, 0, 1) * u;
        h = mat(-1, 0, 0, 1) * h;
    }
    let t = h.c.div_euclid(h.a);
    let reduce = mat(1, 0, -t, 1);
    u = reduce * u;
    h = reduce * h;
    debug_assert_eq!(u * m, h);
    Ok((h, u))
}

/// Index `|Z^2 : L|` of the lattice spanned by the columns of `basis`.
pub fn sublattice_index(basis: Mat2) -> Result<Int> {
    match basis.det().abs() {
        0 => Err(Error::SingularMatrix),
        n => Ok(n),
    }
}

/// Coordinates `(s, t)` with `p = s·col1 + t·col2`, if they are integers.
pub fn in_sublattice(p: Point2, basis: Mat2) -> Result<Option<(Int, Int)>> {
    let dt = basis.det();
    if dt == 0 {
        return Err(Error::SingularMatrix);
    }
    let s = det(p, basis.col2());
    let t = det(basis.col1(), p);
    if s % dt != 0 || t % dt != 0 {
        return Ok(None);
    }
    Ok(Some((s / dt, t / dt)))
}

/// Basis of the lattice generated by `points`, as the columns of the
/// transposed row Hermite normal form (columns `(h11, 0)` and `(h21, h22)`).
pub fn span_basis(points: &[Point2]) -> Result<Mat2> {
    // row one is (r1x, 0), row two is r2
    let mut r1x: Int = 0;
    let mut r2 = Point2::ORIGIN;
    for &v in points {
        let w = if v.y == 0 && r2.y == 0 {
            v
        } else {
            let (g, x, y) = gcd_extended(r2.y, v.y);
            let w = (v.y / g) * r2 - (r2.y / g) * v;
            r2 = x * r2 + y * v;
            w
        };
        debug_assert_eq!(w.y, 0);
        r1x = r1x.gcd(&w.x);
        if r1x != 0 {
            r2.x = r2.x.rem_euclid(r1x);
        }
    }
    if r1x == 0 || r2.y == 0 {
        return Err(Error::SingularMatrix);
    }
    Ok(mat(r1x, r2.x, 0, r2.y))
}
