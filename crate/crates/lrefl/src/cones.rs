//! Two-dimensional lattice cones: type `(p, q)`, socius, continued
//! fractions, Hilbert bases and Dedekind sums.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{det, gcd_extended, is_primitive, rat, Int, Point2, Rat};

/// Type of the cone spanned by two primitive vectors. `q` is the
/// multiplicity `|det(n1, n2)|`; basic cones are `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConeType {
    pub p: Int,
    pub q: Int,
    pub socius: Int,
}

impl ConeType {
    pub const BASIC: ConeType = ConeType { p: 0, q: 1, socius: 0 };

    pub fn new(p: Int, q: Int) -> Result<ConeType> {
        Ok(ConeType { p, q, socius: socius(p, q)? })
    }

    pub fn is_basic(&self) -> bool {
        self.q == 1
    }
}

/// Negative-regular continued fraction entries and the Hilbert basis chain
/// `u_0 = n1, ..., u_{s+1} = n2` of a cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HJData {
    pub b: Vec<Int>,
    pub u: Vec<Point2>,
}

impl HJData {
    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }
}

fn check_generators(n1: Point2, n2: Point2) -> Result<Int> {
    for n in [n1, n2] {
        if !is_primitive(n) {
            return Err(Error::NonprimitiveGenerator(n));
        }
    }
    match det(n1, n2).abs() {
        0 => Err(Error::CollinearGenerators(n1, n2)),
        q => Ok(q),
    }
}

pub fn cone_type(n1: Point2, n2: Point2) -> Result<ConeType> {
    let q = check_generators(n1, n2)?;
    if q == 1 {
        return Ok(ConeType::BASIC);
    }
    // kappa·x1 − lambda·y1 = 1
    let (_, kappa, l) = gcd_extended(n1.x, n1.y);
    let lambda = -l;
    let p = (kappa * n2.x - lambda * n2.y).rem_euclid(q);
    ConeType::new(p, q)
}

/// The inverse of `p` modulo `q` in `[0, q)`; 0 when `q = 1`.
pub fn socius(p: Int, q: Int) -> Result<Int> {
    if q < 1 || p < 0 || p >= q {
        return Err(Error::BadFraction(p, q));
    }
    if q == 1 {
        return Ok(0);
    }
    let (g, k, _) = gcd_extended(p, q);
    if g != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    Ok(k.rem_euclid(q))
}

/// Type `(q − p, q)` of the dual cone.
pub fn dual_type(t: ConeType) -> ConeType {
    if t.q == 1 {
        return ConeType::BASIC;
    }
    ConeType::new(t.q - t.p, t.q).expect("dual of a valid cone type")
}

fn check_fraction(a: Int, c: Int) -> Result<()> {
    if c < 1 || a <= c || a.gcd(&c) != 1 {
        return Err(Error::BadFraction(a, c));
    }
    Ok(())
}

/// `a/c = b1 − 1/(b2 − 1/(...))` with every `b_j >= 2`.
pub fn hj_expansion(a: Int, c: Int) -> Result<Vec<Int>> {
    check_fraction(a, c)?;
    let (mut a, mut c) = (a, c);
    let mut out = Vec::new();
    while c != 0 {
        let b = Integer::div_ceil(&a, &c);
        out.push(b);
        (a, c) = (c, b * c - a);
    }
    Ok(out)
}

/// `a/c = d1 + 1/(d2 + 1/(...))`, last entry at least 2.
pub fn regular_cf(a: Int, c: Int) -> Result<Vec<Int>> {
    check_fraction(a, c)?;
    let (mut a, mut c) = (a, c);
    let mut out = Vec::new();
    while c != 0 {
        out.push(a / c);
        (a, c) = (c, a % c);
    }
    Ok(out)
}

pub fn hilbert_basis(n1: Point2, n2: Point2) -> Result<HJData> {
    let t = cone_type(n1, n2)?;
    if t.is_basic() {
        return Ok(HJData { b: Vec::new(), u: vec![n1, n2] });
    }
    let b = hj_expansion(t.q, t.q - t.p)?;
    let first = ((t.q - t.p) * n1 + n2)
        .div_exact(t.q)
        .ok_or_else(|| Error::Internal(format!("u1 not integral for {n1}, {n2}")))?;
    let mut u = vec![n1, first];
    for (j, &bj) in b.iter().enumerate() {
        u.push(bj * u[j + 1] - u[j]);
    }
    let last = (n1 + (t.q - t.socius) * n2).div_exact(t.q);
    if u[u.len() - 1] != n2 || Some(u[b.len()]) != last {
        return Err(Error::Internal(format!("Hilbert chain does not close for {n1}, {n2}")));
    }
    Ok(HJData { b, u })
}

/// `DS(p, q) = Σ_{i=1}^{q−1} ((i/q))((p·i/q))` by direct summation.
pub fn dedekind_sum(p: Int, q: Int) -> Result<Rat> {
    if q < 1 || p < 0 || p >= q {
        return Err(Error::BadFraction(p, q));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    // ((a/q)) = (2a − q)/(2q) for a not divisible by q
    let mut total: Int = 0;
    for i in 1..q {
        let r = (p * i) % q;
        if r != 0 {
            total += (2 * i - q) * (2 * r - q);
        }
    }
    Ok(rat(total, 4 * q * q))
}
