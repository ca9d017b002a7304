//! Enumeration of l-reflexive polygons up to unimodular equivalence, the
//! count tables derived from it and the named parametric families.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::covering::{a_matrix, admissible_k, atlas};
use crate::error::{Error, Result};
use crate::lattice::{Int, Point2};
use crate::polygon::{apply_map, boundary_count, make_polygon, LatticePolygon};
use crate::toric::{dual, is_l_reflexive, key_string, mirror_genus_equal, polygon_key, CoverRef, GraphKey};

#[derive(Clone, Debug, Serialize)]
pub struct ClassEntry {
    pub key: String,
    pub vertices: Vec<Point2>,
    pub nu: usize,
    pub boundary: [Int; 2],
    pub genus: Int,
    pub tmp: bool,
    pub cover: CoverRef,
    #[serde(skip)]
    pub polygon: LatticePolygon,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassTable {
    pub ell: Int,
    pub classes: Vec<ClassEntry>,
}

impl ClassTable {
    /// Number of classes per vertex count `3..=6`.
    pub fn by_nu(&self) -> [usize; 4] {
        let mut out = [0; 4];
        for c in &self.classes {
            out[c.nu - 3] += 1;
        }
        out
    }

    pub fn tmp_only(&self) -> ClassTable {
        ClassTable { ell: self.ell, classes: self.classes.iter().filter(|c| c.tmp).cloned().collect() }
    }
}

/// Every candidate `A_{l,k}·Q̄_j` with primitive vertices and all local
/// indices equal to `ell`, one per graph key, sorted by key.
pub fn enumerate_l_reflexive(ell: Int) -> ClassTable {
    let mut found: BTreeMap<GraphKey, ClassEntry> = BTreeMap::new();
    if ell >= 1 {
        for (j, qbar) in atlas().normalized.iter().enumerate() {
            for k in admissible_k(ell) {
                let Ok(cand) = apply_map(qbar, a_matrix(ell, k)) else { continue };
                if is_l_reflexive(&cand) != Some(ell) {
                    continue;
                }
                let Ok(key) = polygon_key(&cand) else { continue };
                if found.contains_key(&key) {
                    continue;
                }
                let entry = class_entry(&cand, ell, &key, CoverRef { j: j + 1, k });
                found.insert(key, entry);
            }
        }
    }
    ClassTable { ell, classes: found.into_values().collect() }
}

fn class_entry(q: &LatticePolygon, ell: Int, key: &GraphKey, cover: CoverRef) -> ClassEntry {
    let bq = boundary_count(q);
    let bd = boundary_count(&dual(q).expect("l-reflexive candidate has a dual"));
    ClassEntry {
        key: key_string(key),
        vertices: q.vertices().to_vec(),
        nu: q.nu(),
        boundary: [bq, bd],
        genus: (ell - 1) * bd / 2 + 1,
        tmp: mirror_genus_equal(ell, bq, bd),
        cover,
        polygon: q.clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub ell: Int,
    /// Counts for `nu = 3, 4, 5, 6`.
    pub by_nu: [usize; 4],
    pub total: usize,
    /// Genus of the classes counted, when they all share one.
    pub genus: Option<Int>,
}

fn row(table: &ClassTable) -> CountRow {
    let by_nu = table.by_nu();
    let mut genera: Vec<Int> = table.classes.iter().map(|c| c.genus).collect();
    genera.dedup();
    CountRow { ell: table.ell, by_nu, total: table.classes.len(), genus: (genera.len() == 1).then(|| genera[0]) }
}

/// Class counts for every odd `ell <= max_ell`.
pub fn rp_counts(max_ell: Int) -> Vec<CountRow> {
    (1..=max_ell).step_by(2).map(|l| row(&enumerate_l_reflexive(l))).collect()
}

/// Counts of classes whose curve genus equals that of the dual side.
pub fn tmp_counts(max_ell: Int) -> Vec<CountRow> {
    (1..=max_ell).step_by(2).map(tmp_count).collect()
}

pub fn tmp_count(ell: Int) -> CountRow {
    row(&enumerate_l_reflexive(ell).tmp_only())
}

/// Named parametric families of l-reflexive polygons.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Triangle with boundary pair (9, 3).
    Triangle,
    /// Quadrilateral with boundary pair (8, 4).
    Quadrilateral,
    /// Pentagon with boundary pair (7, 5).
    Pentagon,
    /// Hexagon with boundary pair (6, 6).
    Hexagon,
    TmpTriangle(u8),
    TmpQuadrilateral(u8),
    TmpPentagon(u8),
    TmpHexagon(u8),
}

/// Smallest admissible index and primes that must not divide it; every
/// family also needs the index to be odd. For a triangle
/// `conv{(0,1), (2l,a), (-3l,-b)}` the local indices force
/// `gcd(a-1, 2l) = 2`, `gcd(5l, a+b) = 1` and `gcd(3l, b+1) = 3`, on top of
/// primitivity of the two outer vertices.
struct Restriction {
    min_ell: Int,
    coprime_to: &'static [Int],
}

const TMP_TRIANGLES: [(Int, Int, Restriction); 8] = [
    (3, 5, Restriction { min_ell: 7, coprime_to: &[3, 5] }),
    (5, 8, Restriction { min_ell: 7, coprime_to: &[3, 5, 13] }),
    (7, 11, Restriction { min_ell: 5, coprime_to: &[3, 7, 11] }),
    (9, 14, Restriction { min_ell: 11, coprime_to: &[3, 5, 7, 23] }),
    (11, 17, Restriction { min_ell: 13, coprime_to: &[3, 5, 7, 11, 17] }),
    (13, 20, Restriction { min_ell: 17, coprime_to: &[3, 5, 7, 11, 13] }),
    (15, 23, Restriction { min_ell: 11, coprime_to: &[3, 5, 7, 19, 23] }),
    (17, 26, Restriction { min_ell: 11, coprime_to: &[3, 5, 13, 17, 43] }),
];

const TMP_QUADRILATERALS: [(Int, Int, Restriction); 5] = [
    (2, 3, Restriction { min_ell: 5, coprime_to: &[3] }),
    (3, 5, Restriction { min_ell: 7, coprime_to: &[3, 5] }),
    (4, 7, Restriction { min_ell: 11, coprime_to: &[3, 5, 7] }),
    (5, 9, Restriction { min_ell: 7, coprime_to: &[3, 5] }),
    (6, 11, Restriction { min_ell: 13, coprime_to: &[3, 5, 7, 11] }),
];

const TMP_PENTAGONS: [Restriction; 5] = [
    Restriction { min_ell: 5, coprime_to: &[3] },
    Restriction { min_ell: 7, coprime_to: &[3, 5] },
    Restriction { min_ell: 11, coprime_to: &[3, 5, 7] },
    Restriction { min_ell: 11, coprime_to: &[3, 5, 7] },
    Restriction { min_ell: 13, coprime_to: &[3, 5, 7, 11] },
];

const TMP_HEXAGONS: [Restriction; 5] = [
    Restriction { min_ell: 1, coprime_to: &[] },
    Restriction { min_ell: 7, coprime_to: &[3] },
    Restriction { min_ell: 13, coprime_to: &[3] },
    Restriction { min_ell: 21, coprime_to: &[5] },
    Restriction { min_ell: 31, coprime_to: &[3, 5] },
];

impl Family {
    pub fn all() -> Vec<Family> {
        let mut out = vec![Family::Triangle, Family::Quadrilateral, Family::Pentagon, Family::Hexagon];
        out.extend((1..=8).map(Family::TmpTriangle));
        out.extend((1..=5).map(Family::TmpQuadrilateral));
        out.extend((1..=5).map(Family::TmpPentagon));
        out.extend((1..=5).map(Family::TmpHexagon));
        out
    }

    fn restriction(&self) -> Option<Restriction> {
        let idx = |i: u8, n: usize| (i >= 1 && (i as usize) <= n).then(|| i as usize - 1);
        Some(match *self {
            Family::Triangle => Restriction { min_ell: 1, coprime_to: &[3, 5] },
            Family::Quadrilateral | Family::Pentagon => Restriction { min_ell: 1, coprime_to: &[3] },
            Family::Hexagon => Restriction { min_ell: 1, coprime_to: &[] },
            Family::TmpTriangle(i) => {
                let r = &TMP_TRIANGLES[idx(i, 8)?].2;
                Restriction { min_ell: r.min_ell, coprime_to: r.coprime_to }
            }
            Family::TmpQuadrilateral(i) => {
                let r = &TMP_QUADRILATERALS[idx(i, 5)?].2;
                Restriction { min_ell: r.min_ell, coprime_to: r.coprime_to }
            }
            Family::TmpPentagon(i) => {
                let r = &TMP_PENTAGONS[idx(i, 5)?];
                Restriction { min_ell: r.min_ell, coprime_to: r.coprime_to }
            }
            Family::TmpHexagon(i) => {
                let r = &TMP_HEXAGONS[idx(i, 5)?];
                Restriction { min_ell: r.min_ell, coprime_to: r.coprime_to }
            }
        })
    }

    /// Checks the index against the family's conditions.
    pub fn admits(&self, ell: Int) -> Result<()> {
        let r = self.restriction().ok_or_else(|| Error::Parse(format!("unknown family {self}")))?;
        if ell % 2 == 0 {
            return Err(Error::RestrictionViolated(format!("{self} needs odd ell, got {ell}")));
        }
        if ell < r.min_ell {
            return Err(Error::RestrictionViolated(format!("{self} needs ell >= {}, got {ell}", r.min_ell)));
        }
        if let Some(p) = r.coprime_to.iter().find(|&&p| ell % p == 0) {
            return Err(Error::RestrictionViolated(format!("{self} needs {p} not dividing ell, got {ell}")));
        }
        Ok(())
    }

    fn vertices(&self, l: Int) -> Vec<(Int, Int)> {
        match *self {
            Family::Triangle => vec![(5, -2 * l), (-1, l), (-4, l)],
            Family::Quadrilateral => vec![(3, -l), (-1, l), (-3, l), (1, -l)],
            Family::Pentagon => vec![(3, -2 * l), (1, 0), (-1, l), (-2, l), (-1, 0)],
            Family::Hexagon => vec![(1, 0), (-1, l), (-2, l), (-1, 0), (1, -l), (2, -l)],
            Family::TmpTriangle(i) => {
                let (a, b, _) = TMP_TRIANGLES[i as usize - 1];
                vec![(0, 1), (2 * l, a), (-3 * l, -b)]
            }
            Family::TmpQuadrilateral(i) => {
                let (a, b, _) = TMP_QUADRILATERALS[i as usize - 1];
                vec![(0, -1), (l, a), (0, 1), (-2 * l, -b)]
            }
            Family::TmpPentagon(i) => {
                let a = i as Int;
                vec![(0, -1), (l, a), (l, a + 2), (0, 1), (-l, -(a + 1))]
            }
            Family::TmpHexagon(i) => {
                let a = i as Int;
                vec![(0, -1), (l, a), (l, a + 1), (0, 1), (-l, -a), (-l, -(a + 1))]
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Triangle => f.write_str("triangle"),
            Family::Quadrilateral => f.write_str("quadrilateral"),
            Family::Pentagon => f.write_str("pentagon"),
            Family::Hexagon => f.write_str("hexagon"),
            Family::TmpTriangle(i) => write!(f, "tmp-triangle-{i}"),
            Family::TmpQuadrilateral(i) => write!(f, "tmp-quadrilateral-{i}"),
            Family::TmpPentagon(i) => write!(f, "tmp-pentagon-{i}"),
            Family::TmpHexagon(i) => write!(f, "tmp-hexagon-{i}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::all()
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// The family member of index `ell`, checked to be `ell`-reflexive.
pub fn family_polygon(family: Family, ell: Int) -> Result<LatticePolygon> {
    family.admits(ell)?;
    let pts: Vec<Point2> = family.vertices(ell).into_iter().map(|(x, y)| Point2 { x, y }).collect();
    let q = make_polygon(&pts)?;
    match is_l_reflexive(&q) {
        Some(l) if l == ell => Ok(q),
        _ => Err(Error::Internal(format!("{family} at ell={ell} gives {q}, which is not {ell}-reflexive"))),
    }
}
