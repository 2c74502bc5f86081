//! Points, planes and lines of PG(3,q).
//!
//! Points and planes are 4-tuples normalized so that the first nonzero entry
//! is one. A line is keyed by its normalized Plücker 6-tuple
//! `(p01, p02, p03, p12, p13, p23)`, where `pij = a_i b_j - a_j b_i` for any
//! two spanning points `a`, `b`.
//!
//! Every point, plane and line also has a dense id: its rank in the
//! lexicographic order of canonical tuples (by element index). Orbit code
//! works on ids, so "least id" and "least canonical key" coincide.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::gf::{Elem, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("points coincide")]
    CoincidentPoints,
    #[error("planes coincide")]
    CoincidentPlanes,
    #[error("not a valid Plücker key: {0}")]
    InvalidKey(String),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Vec4 = [Elem; 4];

/// Scales `v` so its first nonzero entry is one.
pub fn normalize<const N: usize>(f: &FieldSpec, v: [Elem; N]) -> Option<[Elem; N]> {
    let lead = v.iter().copied().find(|e| !e.is_zero())?;
    if lead == Elem::ONE {
        return Some(v);
    }
    let s = f.inv(lead);
    Some(v.map(|x| f.mul(x, s)))
}

#[inline]
fn dot(f: &FieldSpec, a: &Vec4, b: &Vec4) -> Elem {
    let mut acc = Elem::ZERO;
    for k in 0..4 {
        acc = f.add(acc, f.mul(a[k], b[k]));
    }
    acc
}

#[inline]
fn axpy(f: &FieldSpec, alpha: Elem, x: &Vec4, y: &Vec4) -> Vec4 {
    // alpha*x + y
    [0, 1, 2, 3].map(|k| f.add(f.mul(alpha, x[k]), y[k]))
}

fn tuple_text(v: &[Elem]) -> String {
    v.iter().map(|e| e.0.to_string()).collect::<Vec<_>>().join(":")
}

fn parse_tuple<const N: usize>(
    f: &FieldSpec,
    s: &str,
    what: &'static str,
) -> Result<[Elem; N], GeometryError> {
    let err = || GeometryError::Parse { what, input: s.to_string() };
    let parts: Vec<&str> = s.split(':').map(str::trim).collect();
    if parts.len() != N {
        return Err(err());
    }
    let mut out = [Elem::ZERO; N];
    for (slot, part) in out.iter_mut().zip(parts) {
        let n: u32 = part.parse().map_err(|_| err())?;
        *slot = f.element(n).map_err(|_| err())?;
    }
    Ok(out)
}

/// Number of points (equivalently planes) of PG(3,q).
pub fn point_count(q: u32) -> u64 {
    let q = q as u64;
    q * q * q + q * q + q + 1
}

/// Number of lines of PG(3,q).
pub fn line_count(q: u32) -> u64 {
    let q = q as u64;
    (q * q + 1) * (q * q + q + 1)
}

// Rank of a normalized 4-tuple among all normalized 4-tuples.
fn rank4(q: u32, v: &Vec4) -> u32 {
    let lead = v.iter().position(|e| !e.is_zero()).expect("normalized tuple");
    // tuples with more leading zeros come first
    let mut offset = 0u32;
    for k in (lead + 1..4).rev() {
        offset += q.pow(3 - k as u32);
    }
    let mut r = 0u32;
    for e in &v[lead + 1..] {
        r = r * q + u32::from(e.0);
    }
    offset + r
}

fn unrank4(q: u32, mut id: u32) -> Vec4 {
    let mut v = [Elem::ZERO; 4];
    for lead in (0..4).rev() {
        let size = q.pow(3 - lead as u32);
        if id < size {
            v[lead] = Elem::ONE;
            for k in (lead + 1..4).rev() {
                v[k] = Elem((id % q) as u16);
                id /= q;
            }
            return v;
        }
        id -= size;
    }
    unreachable!("id out of range")
}

/// A point of PG(3,q), with row coordinates `x0..x3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec4);

impl Point {
    pub fn new(f: &FieldSpec, coords: Vec4) -> Result<Point, GeometryError> {
        normalize(f, coords).map(Point).ok_or(GeometryError::ZeroVector)
    }

    /// Builds a point from integer coordinates reduced into the prime subfield.
    pub fn from_ints(f: &FieldSpec, coords: [i64; 4]) -> Result<Point, GeometryError> {
        Point::new(f, coords.map(|c| f.from_int(c)))
    }

    /// Builds a point from raw element indices.
    pub fn from_indices(f: &FieldSpec, coords: [u32; 4]) -> Result<Point, GeometryError> {
        let mut v = [Elem::ZERO; 4];
        for (slot, c) in v.iter_mut().zip(coords) {
            *slot = f.element(c).map_err(|_| GeometryError::Parse {
                what: "point",
                input: format!("{coords:?}"),
            })?;
        }
        Point::new(f, v)
    }

    pub fn coords(&self) -> Vec4 {
        self.0
    }

    pub fn id(&self, f: &FieldSpec) -> u32 {
        rank4(f.q(), &self.0)
    }

    pub fn from_id(f: &FieldSpec, id: u32) -> Point {
        Point(unrank4(f.q(), id))
    }

    pub fn parse(f: &FieldSpec, s: &str) -> Result<Point, GeometryError> {
        Point::new(f, parse_tuple::<4>(f, s.trim(), "point")?)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(&tuple_text(&self.0))
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The plane `c0 x0 + c1 x1 + c2 x2 + c3 x3 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Plane(Vec4);

impl Plane {
    pub fn new(f: &FieldSpec, coeffs: Vec4) -> Result<Plane, GeometryError> {
        normalize(f, coeffs).map(Plane).ok_or(GeometryError::ZeroVector)
    }

    pub fn from_ints(f: &FieldSpec, coeffs: [i64; 4]) -> Result<Plane, GeometryError> {
        Plane::new(f, coeffs.map(|c| f.from_int(c)))
    }

    pub fn coeffs(&self) -> Vec4 {
        self.0
    }

    pub fn id(&self, f: &FieldSpec) -> u32 {
        rank4(f.q(), &self.0)
    }

    pub fn from_id(f: &FieldSpec, id: u32) -> Plane {
        Plane(unrank4(f.q(), id))
    }

    pub fn parse(f: &FieldSpec, s: &str) -> Result<Plane, GeometryError> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| GeometryError::Parse { what: "plane", input: s.to_string() })?;
        Plane::new(f, parse_tuple::<4>(f, inner, "plane")?)
    }

    /// Three points spanning the plane.
    pub fn basis(&self, f: &FieldSpec) -> [Point; 3] {
        let k = self.0.iter().position(|e| !e.is_zero()).unwrap();
        let mut out = Vec::with_capacity(3);
        for m in (0..4).filter(|&m| m != k) {
            // e_m - c_m e_k (c_k = 1)
            let mut v = [Elem::ZERO; 4];
            v[m] = Elem::ONE;
            v[k] = f.neg(self.0[m]);
            out.push(Point::new(f, v).unwrap());
        }
        [out[0], out[1], out[2]]
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "[{}]", tuple_text(&self.0))
    }
}

impl Serialize for Plane {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Dense line id: rank of the canonical Plücker key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct LineId(pub u32);

pub type PluckerKey = [Elem; 6];

/// Position of `p_ab` (a < b) inside a Plücker tuple.
const PAIR_SLOT: [[usize; 4]; 4] = [
    [usize::MAX, 0, 1, 2],
    [0, usize::MAX, 3, 4],
    [1, 3, usize::MAX, 5],
    [2, 4, 5, usize::MAX],
];

/// Column pairs in key order.
const SLOT_PAIR: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// The six 2×2 minors of the matrix with rows `a`, `b`.
#[inline]
pub fn plucker_minors(f: &FieldSpec, a: &Vec4, b: &Vec4) -> PluckerKey {
    SLOT_PAIR.map(|(i, j)| f.sub(f.mul(a[i], b[j]), f.mul(a[j], b[i])))
}

/// Canonical key of the line spanned by `a`, `b`; `None` when they are dependent.
#[inline]
pub fn key_from_rows(f: &FieldSpec, a: &Vec4, b: &Vec4) -> Option<PluckerKey> {
    normalize(f, plucker_minors(f, a, b))
}

/// `p01 p23 - p02 p13 + p03 p12`.
pub fn quadric_form(f: &FieldSpec, k: &PluckerKey) -> Elem {
    let t1 = f.mul(k[0], k[5]);
    let t2 = f.mul(k[1], k[4]);
    let t3 = f.mul(k[2], k[3]);
    f.add(f.sub(t1, t2), t3)
}

/// Bilinear form whose vanishing means the two lines meet.
pub fn incidence_form(f: &FieldSpec, a: &PluckerKey, b: &PluckerKey) -> Elem {
    let m = |x: usize, y: usize| f.mul(a[x], b[y]);
    let plus = f.add(f.add(m(0, 5), m(5, 0)), f.add(m(2, 3), m(3, 2)));
    let minus = f.add(m(1, 4), m(4, 1));
    f.sub(plus, minus)
}

struct Blocks {
    q: u32,
}

impl Blocks {
    // sizes in id order: (2,3) (1,3) (1,2) (0,3) (0,2) (0,1)
    fn offsets(&self) -> [u32; 6] {
        let q = self.q;
        let sizes = [1, q, q * q, q * q, q * q * q, q * q * q * q];
        let mut off = [0u32; 6];
        for k in 1..6 {
            off[k] = off[k - 1] + sizes[k - 1];
        }
        off
    }
}

/// Dense id of a canonical Plücker key.
#[inline]
pub fn key_to_id(q: u32, k: &PluckerKey) -> LineId {
    let off = Blocks { q }.offsets();
    let v = |s: usize| u32::from(k[s].0);
    let lead = k.iter().position(|e| !e.is_zero()).expect("canonical key");
    let id = match lead {
        5 => off[0],
        4 => off[1] + v(5),
        3 => off[2] + v(4) * q + v(5),
        2 => off[3] + v(4) * q + v(5),
        1 => off[4] + (v(2) * q + v(3)) * q + v(5),
        _ => off[5] + ((v(1) * q + v(2)) * q + v(3)) * q + v(4),
    };
    LineId(id)
}

/// Canonical Plücker key of a dense id.
pub fn id_to_key(f: &FieldSpec, id: LineId) -> PluckerKey {
    let q = f.q();
    let off = Blocks { q }.offsets();
    let e = |n: u32| Elem((n % q) as u16);
    let (z, one) = (Elem::ZERO, Elem::ONE);
    let r = id.0;
    if r < off[1] {
        [z, z, z, z, z, one]
    } else if r < off[2] {
        [z, z, z, z, one, e(r - off[1])]
    } else if r < off[3] {
        let n = r - off[2];
        [z, z, z, one, e(n / q), e(n)]
    } else if r < off[4] {
        let n = r - off[3];
        [z, z, one, z, e(n / q), e(n)]
    } else if r < off[5] {
        let n = r - off[4];
        let (p03, p12, p23) = (e(n / (q * q)), e(n / q), e(n));
        [z, one, p03, p12, f.mul(p03, p12), p23]
    } else {
        let n = r - off[5];
        let (p02, p03, p12, p13) = (e(n / (q * q * q)), e(n / (q * q)), e(n / q), e(n));
        let p23 = f.sub(f.mul(p02, p13), f.mul(p03, p12));
        [one, p02, p03, p12, p13, p23]
    }
}

/// Reduced row-echelon basis of the line with the given canonical key.
pub fn rows_from_key(f: &FieldSpec, k: &PluckerKey) -> (Vec4, Vec4) {
    let lead = k.iter().position(|e| !e.is_zero()).expect("canonical key");
    let (i, j) = SLOT_PAIR[lead];
    let p = |a: usize, b: usize| -> Elem {
        if a == b {
            Elem::ZERO
        } else if a < b {
            k[PAIR_SLOT[a][b]]
        } else {
            f.neg(k[PAIR_SLOT[b][a]])
        }
    };
    let r1 = [0, 1, 2, 3].map(|l| p(l, j));
    let r2 = [0, 1, 2, 3].map(|l| p(i, l));
    (r1, r2)
}

/// A line of PG(3,q): canonical Plücker key plus a canonical spanning pair.
#[derive(Debug, Clone, Copy)]
pub struct PluckerLine {
    key: PluckerKey,
    span: [Point; 2],
}

impl PartialEq for PluckerLine {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for PluckerLine {}

impl std::hash::Hash for PluckerLine {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key.hash(state)
    }
}

impl PartialOrd for PluckerLine {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PluckerLine {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key.cmp(&other.key)
    }
}

impl PluckerLine {
    /// Validates and adopts a Plücker tuple (normalizing it first).
    pub fn from_key(f: &FieldSpec, key: PluckerKey) -> Result<PluckerLine, GeometryError> {
        let bad = || GeometryError::InvalidKey(tuple_text(&key));
        let key = normalize(f, key).ok_or_else(bad)?;
        if !quadric_form(f, &key).is_zero() {
            return Err(bad());
        }
        Ok(Self::from_canonical(f, key))
    }

    pub(crate) fn from_canonical(f: &FieldSpec, key: PluckerKey) -> PluckerLine {
        let (r1, r2) = rows_from_key(f, &key);
        PluckerLine { key, span: [Point(r1), Point(r2)] }
    }

    pub fn from_id(f: &FieldSpec, id: LineId) -> PluckerLine {
        Self::from_canonical(f, id_to_key(f, id))
    }

    pub fn key(&self) -> PluckerKey {
        self.key
    }

    pub fn id(&self, f: &FieldSpec) -> LineId {
        key_to_id(f.q(), &self.key)
    }

    /// The canonical spanning pair (reduced row-echelon rows).
    pub fn span(&self) -> [Point; 2] {
        self.span
    }

    /// All q+1 points, in the order `r1 + t r2` (t ascending), then `r2`.
    pub fn points(&self, f: &FieldSpec) -> Vec<Point> {
        let (r1, r2) = (self.span[0].0, self.span[1].0);
        let mut pts: Vec<Point> =
            f.elements().map(|t| Point::new(f, axpy(f, t, &r2, &r1)).unwrap()).collect();
        pts.push(self.span[1]);
        pts
    }

    /// Parses `(p01:p02:p03:p12:p13:p23)` or a point pair `x0:x1:x2:x3;y0:y1:y2:y3`.
    pub fn parse(f: &FieldSpec, s: &str) -> Result<PluckerLine, GeometryError> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            return PluckerLine::from_key(f, parse_tuple::<6>(f, inner, "line")?);
        }
        let (a, b) = s
            .split_once(';')
            .ok_or_else(|| GeometryError::Parse { what: "line", input: s.to_string() })?;
        line_from_points(f, &Point::parse(f, a)?, &Point::parse(f, b)?)
    }
}

impl fmt::Display for PluckerLine {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "({})", tuple_text(&self.key))
    }
}

impl Serialize for PluckerLine {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn line_from_points(f: &FieldSpec, a: &Point, b: &Point) -> Result<PluckerLine, GeometryError> {
    let key = key_from_rows(f, &a.0, &b.0).ok_or(GeometryError::CoincidentPoints)?;
    Ok(PluckerLine::from_canonical(f, key))
}

/// Two points spanning the common null space of two independent 4-vectors.
fn null_space(f: &FieldSpec, a: &Vec4, b: &Vec4) -> Option<(Vec4, Vec4)> {
    let dual = key_from_rows(f, a, b)?;
    let (r1, r2) = rows_from_key(f, &dual);
    let (i, j) = SLOT_PAIR[dual.iter().position(|e| !e.is_zero()).unwrap()];
    let mut free = (0..4).filter(|&k| k != i && k != j);
    let vector = |k: usize| {
        let mut v = [Elem::ZERO; 4];
        v[k] = Elem::ONE;
        v[i] = f.neg(r1[k]);
        v[j] = f.neg(r2[k]);
        v
    };
    let u = vector(free.next().unwrap());
    let w = vector(free.next().unwrap());
    Some((u, w))
}

pub fn line_from_planes(f: &FieldSpec, a: &Plane, b: &Plane) -> Result<PluckerLine, GeometryError> {
    let (u, w) = null_space(f, &a.0, &b.0).ok_or(GeometryError::CoincidentPlanes)?;
    let key = key_from_rows(f, &u, &w).expect("null space has rank two");
    Ok(PluckerLine::from_canonical(f, key))
}

pub fn incident_point_plane(f: &FieldSpec, p: &Point, pi: &Plane) -> bool {
    dot(f, &p.0, &pi.0).is_zero()
}

pub fn point_on_line(f: &FieldSpec, p: &Point, l: &PluckerLine) -> bool {
    // In echelon form the coefficients of p are its entries at the pivots.
    let (r1, r2) = (l.span[0].0, l.span[1].0);
    let i = r1.iter().position(|e| !e.is_zero()).unwrap();
    let j = r2.iter().position(|e| !e.is_zero()).unwrap();
    let (a, b) = (p.0[i], p.0[j]);
    (0..4).all(|k| f.add(f.mul(a, r1[k]), f.mul(b, r2[k])) == p.0[k])
}

pub fn line_in_plane(f: &FieldSpec, l: &PluckerLine, pi: &Plane) -> bool {
    l.span.iter().all(|p| incident_point_plane(f, p, pi))
}

/// Whether the lines share a point (identical lines meet).
pub fn lines_meet(f: &FieldSpec, a: &PluckerLine, b: &PluckerLine) -> bool {
    incidence_form(f, &a.key, &b.key).is_zero()
}

/// The common point of two distinct meeting lines.
pub fn intersection_point(f: &FieldSpec, a: &PluckerLine, b: &PluckerLine) -> Option<Point> {
    if a == b || !lines_meet(f, a, b) {
        return None;
    }
    a.points(f).into_iter().find(|p| point_on_line(f, p, b))
}

/// The point where a line meets a plane, or `None` when the line lies in it.
pub fn line_plane_meet(f: &FieldSpec, l: &PluckerLine, pi: &Plane) -> Option<Point> {
    let (r1, r2) = (l.span[0].0, l.span[1].0);
    let (d1, d2) = (dot(f, &r1, &pi.0), dot(f, &r2, &pi.0));
    if d1.is_zero() && d2.is_zero() {
        return None;
    }
    // d2 r1 - d1 r2 lies on the plane
    let v = [0, 1, 2, 3].map(|k| f.sub(f.mul(d2, r1[k]), f.mul(d1, r2[k])));
    Some(Point::new(f, v).unwrap())
}

pub fn all_points(f: &FieldSpec) -> impl Iterator<Item = Point> + '_ {
    (0..point_count(f.q()) as u32).map(move |id| Point::from_id(f, id))
}

pub fn all_planes(f: &FieldSpec) -> impl Iterator<Item = Plane> + '_ {
    (0..point_count(f.q()) as u32).map(move |id| Plane::from_id(f, id))
}

/// Every line in canonical key order.
pub fn all_lines(f: &FieldSpec) -> impl Iterator<Item = PluckerLine> + '_ {
    all_line_ids(f.q()).map(move |id| PluckerLine::from_id(f, id))
}

pub fn all_line_ids(q: u32) -> impl Iterator<Item = LineId> {
    (0..line_count(q) as u32).map(LineId)
}

/// Normalized points of PG(2,q), as 3-tuples.
fn plane_points(f: &FieldSpec) -> Vec<[Elem; 3]> {
    let mut out = Vec::new();
    for lead in (0..3).rev() {
        let free = 2 - lead;
        let n = f.q().pow(free as u32);
        for mut idx in 0..n {
            let mut v = [Elem::ZERO; 3];
            v[lead] = Elem::ONE;
            for k in (lead + 1..3).rev() {
                v[k] = Elem((idx % f.q()) as u16);
                idx /= f.q();
            }
            out.push(v);
        }
    }
    out
}

/// The q²+q+1 points of `pi`.
pub fn points_in_plane(f: &FieldSpec, pi: &Plane) -> Vec<Point> {
    let basis = pi.basis(f).map(|b| b.0);
    plane_points(f)
        .into_iter()
        .map(|u| {
            let mut v = [Elem::ZERO; 4];
            for (c, b) in u.iter().zip(&basis) {
                v = axpy(f, *c, b, &v);
            }
            Point::new(f, v).unwrap()
        })
        .collect()
}

/// Ids of the q²+q+1 lines through `p`.
pub fn lines_through_point(f: &FieldSpec, p: &Point) -> Vec<LineId> {
    // Every line through p meets the coordinate plane x_k = 0 (p_k != 0) once.
    let k = p.0.iter().position(|e| !e.is_zero()).unwrap();
    plane_points(f)
        .into_iter()
        .map(|u| {
            let mut v = [Elem::ZERO; 4];
            let mut it = u.iter();
            for (m, slot) in v.iter_mut().enumerate() {
                if m != k {
                    *slot = *it.next().unwrap();
                }
            }
            key_to_id(f.q(), &key_from_rows(f, &p.0, &v).unwrap())
        })
        .collect()
}

/// Ids of the q²+q+1 lines contained in `pi`.
pub fn lines_in_plane(f: &FieldSpec, pi: &Plane) -> Vec<LineId> {
    let basis = pi.basis(f).map(|b| b.0);
    let lift = |u: [Elem; 3]| -> Vec4 {
        let mut v = [Elem::ZERO; 4];
        for (c, b) in u.iter().zip(&basis) {
            v = axpy(f, *c, b, &v);
        }
        v
    };
    // Lines of PG(2,q) through echelon pairs.
    let (z, one) = (Elem::ZERO, Elem::ONE);
    let mut pairs = vec![([z, one, z], [z, z, one])];
    for a in f.elements() {
        pairs.push(([one, a, z], [z, z, one]));
        for b in f.elements() {
            pairs.push(([one, z, a], [z, one, b]));
        }
    }
    pairs
        .into_iter()
        .map(|(u, w)| key_to_id(f.q(), &key_from_rows(f, &lift(u), &lift(w)).unwrap()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn gf(q: u32) -> FieldSpec {
        FieldSpec::with_order(q).unwrap()
    }

    fn pt(f: &FieldSpec, c: [i64; 4]) -> Point {
        Point::from_ints(f, c).unwrap()
    }

    #[test]
    fn line_from_points_examples() {
        let f = gf(5);
        let a = pt(&f, [0, 0, 0, 1]);
        let b = pt(&f, [1, 0, 0, 0]);
        let l = line_from_points(&f, &a, &b).unwrap();
        assert_eq!(l.to_string(), "(0:0:1:0:0:0)");
        assert_eq!(line_from_points(&f, &b, &a).unwrap().key(), l.key());
        assert_eq!(line_from_points(&f, &a, &a).unwrap_err(), GeometryError::CoincidentPoints);
    }

    #[test]
    fn line_from_planes_examples() {
        let f = gf(5);
        let p1 = Plane::from_ints(&f, [1, 0, 0, 0]).unwrap();
        let p2 = Plane::from_ints(&f, [0, 0, 0, 1]).unwrap();
        let l = line_from_planes(&f, &p1, &p2).unwrap();
        let expect = line_from_points(&f, &pt(&f, [0, 1, 0, 0]), &pt(&f, [0, 0, 1, 0])).unwrap();
        assert_eq!(l, expect);
        assert_eq!(line_from_planes(&f, &p1, &p1).unwrap_err(), GeometryError::CoincidentPlanes);
    }

    #[test]
    fn counts_match_gaussian_coefficients() {
        assert_eq!((point_count(5), line_count(5)), (156, 806));
        assert_eq!((point_count(7), line_count(7)), (400, 2850));
        for q in [2, 3, 4, 5, 7] {
            let f = gf(q);
            assert_eq!(all_points(&f).count() as u64, point_count(q));
            assert_eq!(all_planes(&f).count() as u64, point_count(q));
            let lines: HashSet<_> = all_lines(&f).map(|l| l.key()).collect();
            assert_eq!(lines.len() as u64, line_count(q));
        }
    }

    #[test]
    fn enumeration_agrees_with_two_point_generation() {
        for q in [2, 3, 4, 5] {
            let f = gf(q);
            let pts: Vec<_> = all_points(&f).collect();
            let mut by_pairs = HashSet::new();
            for (i, a) in pts.iter().enumerate() {
                for b in &pts[i + 1..] {
                    by_pairs.insert(line_from_points(&f, a, b).unwrap().key());
                }
            }
            let direct: HashSet<_> = all_lines(&f).map(|l| l.key()).collect();
            assert_eq!(by_pairs, direct);
        }
    }

    #[test]
    fn ids_follow_key_order() {
        for q in [2, 3, 4, 5, 8, 9] {
            let f = gf(q);
            let keys: Vec<_> = all_lines(&f).map(|l| l.key()).collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]), "q={q}");
            for (i, k) in keys.iter().enumerate() {
                assert_eq!(key_to_id(q, k), LineId(i as u32));
                assert!(quadric_form(&f, k).is_zero());
            }
            let pts: Vec<_> = all_points(&f).collect();
            assert!(pts.windows(2).all(|w| w[0] < w[1]));
            for (i, p) in pts.iter().enumerate() {
                assert_eq!(p.id(&f), i as u32);
            }
        }
    }

    #[test]
    fn span_rows_reproduce_the_key() {
        let f = gf(7);
        for l in all_lines(&f) {
            let [a, b] = l.span();
            assert_eq!(line_from_points(&f, &a, &b).unwrap(), l);
            let pts = l.points(&f);
            assert_eq!(pts.len(), 8);
            assert!(pts.iter().all(|p| point_on_line(&f, p, &l)));
            assert_eq!(pts.iter().collect::<HashSet<_>>().len(), 8);
        }
    }

    #[test]
    fn key_is_independent_of_spanning_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for q in [5, 8, 9, 13] {
            let f = gf(q);
            let lines: Vec<_> = all_lines(&f).collect();
            for _ in 0..300 {
                let l = lines[rng.gen_range(0..lines.len())];
                let pts = l.points(&f);
                let i = rng.gen_range(0..pts.len());
                let mut j = rng.gen_range(0..pts.len());
                while j == i {
                    j = rng.gen_range(0..pts.len());
                }
                assert_eq!(line_from_points(&f, &pts[i], &pts[j]).unwrap().key(), l.key());
            }
        }
    }

    #[test]
    fn incidence_structure_q5() {
        let f = gf(5);
        let pts: Vec<_> = all_points(&f).collect();
        let lines: Vec<_> = all_lines(&f).collect();
        for p in &pts {
            let through = lines.iter().filter(|l| point_on_line(&f, p, l)).count();
            assert_eq!(through, 31);
            let mut listed = lines_through_point(&f, p);
            listed.sort();
            let brute: Vec<_> =
                lines.iter().filter(|l| point_on_line(&f, p, l)).map(|l| l.id(&f)).collect();
            assert_eq!(listed, brute);
        }
        // a line and a plane always meet
        for pi in all_planes(&f).step_by(7) {
            for l in &lines {
                let on = l.points(&f).iter().filter(|p| incident_point_plane(&f, p, &pi)).count();
                assert_eq!(on == 6, line_in_plane(&f, l, &pi));
                assert!(on == 1 || on == 6);
                match line_plane_meet(&f, l, &pi) {
                    None => assert!(line_in_plane(&f, l, &pi)),
                    Some(p) => assert!(point_on_line(&f, &p, l) && incident_point_plane(&f, &p, &pi)),
                }
            }
            let mut inside = lines_in_plane(&f, &pi);
            inside.sort();
            let brute: Vec<_> =
                lines.iter().filter(|l| line_in_plane(&f, l, &pi)).map(|l| l.id(&f)).collect();
            assert_eq!(inside, brute);
        }
    }

    #[test]
    fn meeting_form_agrees_with_point_sets() {
        let f = gf(4);
        let lines: Vec<_> = all_lines(&f).collect();
        for a in lines.iter().step_by(3) {
            let pa: HashSet<_> = a.points(&f).into_iter().collect();
            for b in &lines {
                let share = b.points(&f).iter().any(|p| pa.contains(p));
                assert_eq!(lines_meet(&f, a, b), share);
            }
        }
    }

    #[test]
    fn normalization_is_idempotent() {
        let f = gf(9);
        for p in all_points(&f) {
            let scaled = p.coords().map(|x| f.mul(x, Elem(5)));
            assert_eq!(Point::new(&f, scaled).unwrap(), p);
            assert_eq!(normalize(&f, p.coords()), Some(p.coords()));
        }
        assert_eq!(Point::new(&f, [Elem::ZERO; 4]).unwrap_err(), GeometryError::ZeroVector);
    }

    #[test]
    fn text_forms_round_trip() {
        let f = gf(9);
        let p = Point::parse(&f, "0:1:2:8").unwrap();
        assert_eq!(p.to_string(), "0:1:2:8");
        let pi = Plane::parse(&f, "[1:0:3:0]").unwrap();
        assert_eq!(pi.to_string(), "[1:0:3:0]");
        let l = PluckerLine::parse(&f, "0:1:0:0;1:0:2:0").unwrap();
        assert_eq!(PluckerLine::parse(&f, &l.to_string()).unwrap(), l);
        assert!(Point::parse(&f, "0:1:2").is_err());
        assert!(Point::parse(&f, "0:1:2:9").is_err());
        assert!(PluckerLine::parse(&f, "(1:0:0:0:0:1)").is_err());
        assert!(PluckerLine::parse(&f, "0:1:0:0").is_err());
    }
}
