//! The stabilizer group of the twisted cubic and the null polarity.
//!
//! A group element is the projective parameter `(a, b, c, d)`, `ad - bc != 0`,
//! acting on the cubic parameter by `t -> (a t + b) / (c t + d)`. Its 4×4
//! matrix `M` is the symmetric cube of `[[a, c], [b, d]]`; points act as row
//! vectors `x -> x M` and planes as columns `c -> M^{-1} c`.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use crate::cubic::{cubic_point, CubicParam};
use crate::gf::{Elem, FieldSpec};
use crate::matrix::{self, Mat4};
use crate::pg3::{
    self, id_to_key, key_from_rows, key_to_id, line_from_planes, rows_from_key, GeometryError,
    LineId, Plane, PluckerLine, Point,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("parameters satisfy ad - bc = 0")]
    Singular,
    #[error("the null polarity and real/imaginary axes need q not divisible by 3")]
    WrongCharacteristic,
    #[error("generators close to {got} elements, expected {expected}")]
    ClosureMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

pub type Params = [Elem; 4];

/// The matrix of the projectivity with parameters `(a, b, c, d)`.
pub fn matrix_of(f: &FieldSpec, [a, b, c, d]: Params) -> Mat4 {
    let m = |x: Elem, y: Elem| f.mul(x, y);
    let m3 = |x: Elem, y: Elem, z: Elem| f.mul(f.mul(x, y), z);
    let two = f.from_int(2);
    let three = f.from_int(3);
    [
        [m3(a, a, a), m3(a, a, c), m3(a, c, c), m3(c, c, c)],
        [
            m(three, m3(a, a, b)),
            f.add(m3(a, a, d), m(two, m3(a, b, c))),
            f.add(m3(b, c, c), m(two, m3(a, c, d))),
            m(three, m3(c, c, d)),
        ],
        [
            m(three, m3(a, b, b)),
            f.add(m3(b, b, c), m(two, m3(a, b, d))),
            f.add(m3(a, d, d), m(two, m3(b, c, d))),
            m(three, m3(c, d, d)),
        ],
        [m3(b, b, b), m3(b, b, d), m3(b, d, d), m3(d, d, d)],
    ]
}

/// Closed-form inverse: entries are cubic in `(a, b, c, d)`, scaled by
/// `(ad - bc)^{-3}`, with alternating sign `(-1)^{i+j}`.
pub fn closed_form_inverse(f: &FieldSpec, [a, b, c, d]: Params) -> Option<Mat4> {
    let det = f.sub(f.mul(a, d), f.mul(b, c));
    if det.is_zero() {
        return None;
    }
    let s = f.inv(f.pow(det, 3).unwrap());
    let m = |x: Elem, y: Elem| f.mul(x, y);
    let m3 = |x: Elem, y: Elem, z: Elem| f.mul(f.mul(x, y), z);
    let (two, three) = (f.from_int(2), f.from_int(3));
    let ad_2bc = f.add(m(a, d), m(two, m(b, c)));
    let two_ad_bc = f.add(m(two, m(a, d)), m(b, c));
    let unsigned = [
        [m3(d, d, d), m3(c, d, d), m3(c, c, d), m3(c, c, c)],
        [m(three, m3(b, d, d)), m(d, ad_2bc), m(c, two_ad_bc), m(three, m3(a, c, c))],
        [m(three, m3(b, b, d)), m(b, two_ad_bc), m(a, ad_2bc), m(three, m3(a, a, c))],
        [m3(b, b, b), m3(a, b, b), m3(a, a, b), m3(a, a, a)],
    ];
    let mut out = unsigned;
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let v = f.mul(*x, s);
            *x = if (i + j) % 2 == 1 { f.neg(v) } else { v };
        }
    }
    Some(out)
}

/// An element of the stabilizer group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    params: Params,
    matrix: Mat4,
    inverse: Mat4,
}

impl GroupElement {
    pub fn new(f: &FieldSpec, a: Elem, b: Elem, c: Elem, d: Elem) -> Result<Self, ActionError> {
        Self::from_params(f, [a, b, c, d])
    }

    pub fn from_ints(f: &FieldSpec, p: [i64; 4]) -> Result<Self, ActionError> {
        Self::from_params(f, p.map(|x| f.from_int(x)))
    }

    pub fn from_params(f: &FieldSpec, params: Params) -> Result<Self, ActionError> {
        let [a, b, c, d] = params;
        if f.sub(f.mul(a, d), f.mul(b, c)).is_zero() {
            return Err(ActionError::Singular);
        }
        let params = pg3::normalize(f, params).expect("nonsingular parameters are nonzero");
        let matrix = matrix_of(f, params);
        let inverse = matrix::inverse(f, &matrix).expect("nonsingular parameters give an invertible matrix");
        Ok(GroupElement { params, matrix, inverse })
    }

    pub fn identity(f: &FieldSpec) -> Self {
        Self::from_ints(f, [1, 0, 0, 1]).unwrap()
    }

    /// Normalized `(a, b, c, d)`.
    pub fn params(&self) -> Params {
        self.params
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.matrix
    }

    /// Inverse matrix, by Gauss–Jordan elimination.
    pub fn inverse_matrix(&self) -> &Mat4 {
        &self.inverse
    }

    /// `self` followed by `next` (points act on the right).
    pub fn then(&self, f: &FieldSpec, next: &GroupElement) -> GroupElement {
        let [a1, b1, c1, d1] = self.params;
        let [a2, b2, c2, d2] = next.params;
        let s = |x: Elem, y: Elem, z: Elem, w: Elem| f.add(f.mul(x, y), f.mul(z, w));
        // [[a, c], [b, d]] multiply in the same order as the matrices
        let params = [
            s(a1, a2, c1, b2),
            s(b1, a2, d1, b2),
            s(a1, c2, c1, d2),
            s(b1, c2, d1, d2),
        ];
        Self::from_params(f, params).expect("product of invertible elements")
    }

    pub fn invert(&self, f: &FieldSpec) -> GroupElement {
        let [a, b, c, d] = self.params;
        Self::from_params(f, [d, f.neg(b), f.neg(c), a]).expect("inverse of invertible element")
    }

    pub fn is_identity(&self) -> bool {
        self.params == [Elem::ONE, Elem::ZERO, Elem::ZERO, Elem::ONE]
    }

    /// Action on the cubic parameter.
    pub fn apply_param(&self, f: &FieldSpec, t: CubicParam) -> CubicParam {
        let [a, b, c, d] = self.params;
        let (num, den) = match t {
            CubicParam::Infinity => (a, c),
            CubicParam::Finite(t) => (f.add(f.mul(a, t), b), f.add(f.mul(c, t), d)),
        };
        if den.is_zero() {
            CubicParam::Infinity
        } else {
            CubicParam::Finite(f.mul(num, f.inv(den)))
        }
    }

    pub fn apply_point(&self, f: &FieldSpec, p: &Point) -> Point {
        Point::new(f, matrix::row_times(f, &p.coords(), &self.matrix)).expect("invertible action")
    }

    pub fn apply_plane(&self, f: &FieldSpec, pi: &Plane) -> Plane {
        Plane::new(f, matrix::times_column(f, &self.inverse, &pi.coeffs())).expect("invertible action")
    }

    pub fn apply_line(&self, f: &FieldSpec, l: &PluckerLine) -> PluckerLine {
        let [a, b] = l.span();
        pg3::line_from_points(f, &self.apply_point(f, &a), &self.apply_point(f, &b))
            .expect("invertible action")
    }

    /// Image of a line id; the hot path of orbit computations.
    #[inline]
    pub fn apply_line_id(&self, f: &FieldSpec, id: LineId) -> LineId {
        let (r1, r2) = rows_from_key(f, &id_to_key(f, id));
        let a = matrix::row_times(f, &r1, &self.matrix);
        let b = matrix::row_times(f, &r2, &self.matrix);
        key_to_id(f.q(), &key_from_rows(f, &a, &b).expect("invertible action"))
    }
}

impl std::fmt::Display for GroupElement {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c, d] = self.params;
        write!(out, "({a}:{b}:{c}:{d})")
    }
}

impl serde::Serialize for GroupElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Normalized nonsingular parameters in lexicographic index order.
fn normalized_params(f: &FieldSpec) -> impl Iterator<Item = Params> + '_ {
    pg3::all_points(f)
        .map(|p| p.coords())
        .filter(move |&[a, b, c, d]| !f.sub(f.mul(a, d), f.mul(b, c)).is_zero())
}

/// Every element, in lexicographic order of normalized parameters.
pub fn group_elements(f: &FieldSpec) -> Vec<GroupElement> {
    normalized_params(f).map(|p| GroupElement::from_params(f, p).unwrap()).collect()
}

pub fn group_order(q: u32) -> usize {
    let q = q as usize;
    q * q * q - q
}

/// Size of the group generated by `gens`.
pub fn closure_size(f: &FieldSpec, gens: &[GroupElement]) -> usize {
    let id = GroupElement::identity(f);
    let mut seen: HashSet<Params> = HashSet::from([id.params()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.then(f, s);
            if seen.insert(h.params()) {
                queue.push_back(h);
            }
        }
    }
    seen.len()
}

/// `t -> t + 1`, `t -> g t` (g primitive) and `t -> 1/t`.
pub fn generators(f: &FieldSpec) -> Result<Vec<GroupElement>, ActionError> {
    let (z, one) = (Elem::ZERO, Elem::ONE);
    let gens = vec![
        GroupElement::new(f, one, one, z, one)?,
        GroupElement::new(f, f.generator(), z, z, one)?,
        GroupElement::new(f, z, one, one, z)?,
    ];
    let expected = group_order(f.q());
    let got = closure_size(f, &gens);
    if got != expected {
        return Err(ActionError::ClosureMismatch { expected, got });
    }
    Ok(gens)
}

/// Least-index element satisfying `pred`.
fn least_transporter(f: &FieldSpec, pred: impl Fn(&GroupElement) -> bool) -> GroupElement {
    normalized_params(f)
        .map(|p| GroupElement::from_params(f, p).unwrap())
        .find(|g| pred(g))
        .expect("the group is transitive on the requested orbit")
}

/// `psi^{-1} g psi` for every `g`, sorted by parameters.
fn conjugate(f: &FieldSpec, base: &[GroupElement], psi: &GroupElement) -> Vec<GroupElement> {
    let psi_inv = psi.invert(f);
    let mut out: Vec<_> = base.iter().map(|g| psi_inv.then(f, g).then(f, psi)).collect();
    out.sort();
    out
}

/// The q(q-1) elements fixing the cubic point `P(t)`.
pub fn stabilizer_cubic_point(f: &FieldSpec, t: CubicParam) -> Vec<GroupElement> {
    let (one, z) = (Elem::ONE, Elem::ZERO);
    let base: Vec<GroupElement> = f
        .elements()
        .flat_map(|c| f.units().map(move |d| (c, d)))
        .map(|(c, d)| GroupElement::new(f, one, z, c, d).unwrap())
        .collect();
    if t == CubicParam::Finite(Elem::ZERO) {
        let mut base = base;
        base.sort();
        return base;
    }
    let psi = least_transporter(f, |g| g.apply_param(f, CubicParam::Finite(z)) == t);
    conjugate(f, &base, &psi)
}

/// The point `P_t^A` on the common axis: `(0,1,t,0)`, or `(0,0,1,0)` at infinity.
pub fn axis_point(f: &FieldSpec, t: CubicParam) -> Point {
    let (z, one) = (Elem::ZERO, Elem::ONE);
    match t {
        CubicParam::Finite(t) => Point::new(f, [z, one, t, z]).unwrap(),
        CubicParam::Infinity => Point::new(f, [z, z, one, z]).unwrap(),
    }
}

/// The q(q-1) elements fixing the axis point `P_t^A` (q divisible by 3).
pub fn stabilizer_axis_point(f: &FieldSpec, t: CubicParam) -> Result<Vec<GroupElement>, ActionError> {
    if f.xi() != 0 {
        return Err(ActionError::WrongCharacteristic);
    }
    let (one, z) = (Elem::ONE, Elem::ZERO);
    let mut base: Vec<GroupElement> = f
        .elements()
        .flat_map(|b| f.units().map(move |d| (b, d)))
        .map(|(b, d)| GroupElement::new(f, one, b, z, d).unwrap())
        .collect();
    let origin = axis_point(f, CubicParam::Finite(z));
    if t == CubicParam::Finite(z) {
        base.sort();
        return Ok(base);
    }
    let target = axis_point(f, t);
    let psi = least_transporter(f, |g| g.apply_point(f, &origin) == target);
    Ok(conjugate(f, &base, &psi))
}

/// Elements fixing `p`, by exhaustive filtering.
pub fn fixing(f: &FieldSpec, group: &[GroupElement], p: &Point) -> Vec<GroupElement> {
    group.iter().filter(|g| g.apply_point(f, p) == *p).copied().collect()
}

/// The cubic point for a parameter, re-exported for convenience.
pub fn cubic_point_image(f: &FieldSpec, g: &GroupElement, t: CubicParam) -> Point {
    g.apply_point(f, &cubic_point(f, t))
}

/// The null polarity `P(x0,x1,x2,x3) -> π(x3, -3x2, 3x1, -x0)`.
#[derive(Debug, Clone, Copy)]
pub struct Polarity<'f> {
    field: &'f FieldSpec,
    three: Elem,
    inv_three: Elem,
}

impl<'f> Polarity<'f> {
    pub fn new(field: &'f FieldSpec) -> Result<Self, ActionError> {
        let three = field.from_int(3);
        if three.is_zero() {
            return Err(ActionError::WrongCharacteristic);
        }
        Ok(Polarity { field, three, inv_three: field.inv(three) })
    }

    pub fn point(&self, p: &Point) -> Plane {
        let f = self.field;
        let [x0, x1, x2, x3] = p.coords();
        Plane::new(f, [x3, f.neg(f.mul(self.three, x2)), f.mul(self.three, x1), f.neg(x0)]).unwrap()
    }

    /// The pole of a plane (inverse of [`Polarity::point`]).
    pub fn plane(&self, pi: &Plane) -> Point {
        let f = self.field;
        let [c0, c1, c2, c3] = pi.coeffs();
        Point::new(f, [f.neg(c3), f.mul(c2, self.inv_three), f.neg(f.mul(c1, self.inv_three)), c0])
            .unwrap()
    }

    pub fn line(&self, l: &PluckerLine) -> PluckerLine {
        let [a, b] = l.span();
        line_from_planes(self.field, &self.point(&a), &self.point(&b)).expect("polarity is a bijection")
    }

    pub fn line_id(&self, id: LineId) -> LineId {
        self.line(&PluckerLine::from_id(self.field, id)).id(self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{identity, proportional};
    use crate::pg3::{all_lines, all_planes, all_points, incident_point_plane, line_from_points};

    fn gf(q: u32) -> FieldSpec {
        FieldSpec::with_order(q).unwrap()
    }

    fn finite(f: &FieldSpec, t: i64) -> CubicParam {
        CubicParam::Finite(f.from_int(t))
    }

    #[test]
    fn identity_matrix() {
        let f = gf(7);
        assert_eq!(*GroupElement::identity(&f).matrix(), identity());
        assert_eq!(GroupElement::from_ints(&f, [1, 1, 1, 1]).unwrap_err(), ActionError::Singular);
    }

    #[test]
    fn group_sizes_and_closure() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = gf(q);
            let g = group_elements(&f);
            assert_eq!(g.len(), group_order(q));
            let set: HashSet<_> = g.iter().map(|e| e.params()).collect();
            assert_eq!(set.len(), g.len());
            assert!(g.iter().any(|e| e.is_identity()));
            for a in g.iter().step_by(7) {
                for b in g.iter().step_by(5) {
                    assert!(set.contains(&a.then(&f, b).params()));
                }
            }
        }
    }

    #[test]
    fn every_element_fixes_the_cubic() {
        let f = gf(7);
        let cubic: HashSet<_> = CubicParam::all(&f).map(|t| cubic_point(&f, t)).collect();
        for g in group_elements(&f) {
            let image: HashSet<_> = cubic.iter().map(|p| g.apply_point(&f, p)).collect();
            assert_eq!(image, cubic);
            for t in CubicParam::all(&f) {
                assert_eq!(cubic_point_image(&f, &g, t), cubic_point(&f, g.apply_param(&f, t)));
            }
        }
    }

    #[test]
    fn composition_matches_matrix_product() {
        let f = gf(8);
        let g = group_elements(&f);
        for a in g.iter().step_by(11) {
            for b in g.iter().step_by(13) {
                let prod = matrix::mul(&f, a.matrix(), b.matrix());
                assert!(proportional(&f, &prod, a.then(&f, b).matrix()));
            }
        }
    }

    #[test]
    fn coordinate_reversal_swaps_zero_and_infinity() {
        let f = gf(7);
        let psi = GroupElement::from_ints(&f, [0, 1, 1, 0]).unwrap();
        let rev = |p: &Point| {
            let [a, b, c, d] = p.coords();
            Point::new(&f, [d, c, b, a]).unwrap()
        };
        for p in all_points(&f) {
            assert_eq!(psi.apply_point(&f, &p), rev(&p));
        }
        assert_eq!(psi.apply_param(&f, finite(&f, 0)), CubicParam::Infinity);
        for t in f.units() {
            assert_eq!(psi.apply_param(&f, CubicParam::Finite(t)), CubicParam::Finite(f.inv(t)));
        }
    }

    #[test]
    fn incidence_is_preserved() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        let f = gf(7);
        let g = group_elements(&f);
        let pts: Vec<_> = all_points(&f).collect();
        let planes: Vec<_> = all_planes(&f).collect();
        let mut hits = 0;
        for _ in 0..2000 {
            let e = &g[rng.gen_range(0..g.len())];
            let p = &pts[rng.gen_range(0..pts.len())];
            // bias towards incident pairs
            let pi = if rng.gen_bool(0.5) {
                *planes.iter().find(|pi| incident_point_plane(&f, p, pi)).unwrap()
            } else {
                planes[rng.gen_range(0..planes.len())]
            };
            let before = incident_point_plane(&f, p, &pi);
            hits += before as usize;
            assert_eq!(before, incident_point_plane(&f, &e.apply_point(&f, p), &e.apply_plane(&f, &pi)));
        }
        assert!(hits > 500);
    }

    #[test]
    fn inverse_acts_as_identity() {
        let f = gf(5);
        for g in group_elements(&f) {
            let h = g.then(&f, &g.invert(&f));
            assert!(h.is_identity());
            for p in all_points(&f) {
                assert_eq!(g.invert(&f).apply_point(&f, &g.apply_point(&f, &p)), p);
            }
        }
        assert!(GroupElement::identity(&f).invert(&f).is_identity());
    }

    #[test]
    fn closed_form_inverse_matches_elimination() {
        for q in [2, 4, 5, 7, 8, 9, 11] {
            let f = gf(q);
            for g in group_elements(&f) {
                let closed = closed_form_inverse(&f, g.params()).unwrap();
                assert!(proportional(&f, &closed, g.inverse_matrix()), "q={q} g={g}");
                assert!(proportional(&f, &closed, g.invert(&f).matrix()));
            }
        }
    }

    #[test]
    fn generator_closure() {
        for (q, n) in [(2, 6), (3, 24), (4, 60), (5, 120), (8, 504), (9, 720)] {
            let f = gf(q);
            let gens = generators(&f).unwrap();
            assert_eq!(gens.len(), 3);
            assert_eq!(closure_size(&f, &gens), n);
        }
    }

    #[test]
    fn cubic_point_stabilizers() {
        let f = gf(5);
        let s0 = stabilizer_cubic_point(&f, finite(&f, 0));
        assert_eq!(s0.len(), 20);
        assert!(s0.iter().all(|g| g.params()[1].is_zero()));
        let f7 = gf(7);
        let all = group_elements(&f7);
        for t in CubicParam::all(&f7) {
            let mut brute = fixing(&f7, &all, &cubic_point(&f7, t));
            brute.sort();
            let stab = stabilizer_cubic_point(&f7, t);
            assert_eq!(stab.len(), 42);
            assert_eq!(stab, brute, "t={t:?}");
        }
    }

    #[test]
    fn axis_point_stabilizers() {
        let f = gf(9);
        let s0 = stabilizer_axis_point(&f, CubicParam::Finite(Elem::ZERO)).unwrap();
        assert_eq!(s0.len(), 72);
        let all = group_elements(&f);
        for t in CubicParam::all(&f) {
            let p = axis_point(&f, t);
            let mut brute = fixing(&f, &all, &p);
            brute.sort();
            assert_eq!(stabilizer_axis_point(&f, t).unwrap(), brute);
        }
        let p0 = axis_point(&f, CubicParam::Finite(Elem::ZERO));
        let to_inf = GroupElement::from_ints(&f, [0, 1, 1, 1]).unwrap();
        assert_eq!(to_inf.apply_point(&f, &p0), axis_point(&f, CubicParam::Infinity));
        for n in f.elements() {
            let g = GroupElement::new(&f, Elem::ONE, Elem::ZERO, f.neg(n), Elem::ONE).unwrap();
            assert_eq!(g.apply_point(&f, &p0), axis_point(&f, CubicParam::Finite(n)));
        }
        assert_eq!(
            stabilizer_axis_point(&gf(7), CubicParam::Infinity).unwrap_err(),
            ActionError::WrongCharacteristic
        );
    }

    #[test]
    fn polarity_basics() {
        let f = gf(5);
        let pol = Polarity::new(&f).unwrap();
        let p0 = Point::from_ints(&f, [0, 0, 0, 1]).unwrap();
        assert_eq!(pol.point(&p0), Plane::from_ints(&f, [1, 0, 0, 0]).unwrap());
        for p in all_points(&f) {
            assert_eq!(pol.plane(&pol.point(&p)), p);
            // null polarity: every point lies on its polar plane
            assert!(incident_point_plane(&f, &p, &pol.point(&p)));
        }
        for l in all_lines(&f) {
            assert_eq!(pol.line(&pol.line(&l)), l);
            let [a, b] = l.span();
            let other = l.points(&f)[2];
            let alt = line_from_points(&f, &a, &other).unwrap_or_else(|_| line_from_points(&f, &b, &other).unwrap());
            assert_eq!(pol.line(&alt), pol.line(&l));
        }
        assert_eq!(Polarity::new(&gf(9)).unwrap_err(), ActionError::WrongCharacteristic);
    }

    #[test]
    fn polarity_commutes_with_the_group() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(17);
        let f = gf(7);
        let pol = Polarity::new(&f).unwrap();
        let g = group_elements(&f);
        let pts: Vec<_> = all_points(&f).collect();
        for _ in 0..1000 {
            let psi = &g[rng.gen_range(0..g.len())];
            let p = &pts[rng.gen_range(0..pts.len())];
            assert_eq!(psi.apply_plane(&f, &pol.point(p)), pol.point(&psi.apply_point(&f, p)));
        }
    }
}
