//! The twisted cubic, its osculating developable, chords, axes, and the
//! classification of points, lines and planes of PG(3,q).

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::action::Polarity;
use crate::gf::{Elem, Ext2, FieldSpec, QuadraticExtension};
use crate::pg3::{
    self, line_from_planes, line_from_points, line_in_plane, lines_in_plane, lines_meet,
    lines_through_point, point_on_line, points_in_plane, LineId, Plane, PluckerLine, Point,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubicError {
    #[error("q = {0} is divisible by 3: there is a single common axis")]
    WrongCharacteristic(u32),
    #[error("unknown class label {0:?}")]
    UnknownClass(String),
}

/// A parameter `t ∈ F_q ∪ {∞}` on the cubic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CubicParam {
    Finite(Elem),
    Infinity,
}

impl CubicParam {
    /// Finite parameters in index order, then ∞.
    pub fn all(f: &FieldSpec) -> impl Iterator<Item = CubicParam> + Clone {
        f.elements().map(CubicParam::Finite).chain(std::iter::once(CubicParam::Infinity))
    }

    /// Position in [`CubicParam::all`].
    pub fn index(self, q: u32) -> usize {
        match self {
            CubicParam::Finite(t) => t.index(),
            CubicParam::Infinity => q as usize,
        }
    }
}

impl fmt::Display for CubicParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CubicParam::Finite(t) => write!(f, "{t}"),
            CubicParam::Infinity => write!(f, "inf"),
        }
    }
}

/// `P(t) = (t³, t², t, 1)`, `P(∞) = (1, 0, 0, 0)`.
pub fn cubic_point(f: &FieldSpec, t: CubicParam) -> Point {
    match t {
        CubicParam::Finite(t) => {
            let t2 = f.mul(t, t);
            Point::new(f, [f.mul(t2, t), t2, t, Elem::ONE]).unwrap()
        }
        CubicParam::Infinity => Point::new(f, [Elem::ONE, Elem::ZERO, Elem::ZERO, Elem::ZERO]).unwrap(),
    }
}

/// `π_osc(t) = π(1, -3t, 3t², -t³)`, `π_osc(∞) = π(0, 0, 0, 1)`.
pub fn osculating_plane(f: &FieldSpec, t: CubicParam) -> Plane {
    match t {
        CubicParam::Finite(t) => {
            let three = f.from_int(3);
            let t2 = f.mul(t, t);
            let c = [Elem::ONE, f.neg(f.mul(three, t)), f.mul(three, t2), f.neg(f.mul(t2, t))];
            Plane::new(f, c).unwrap()
        }
        CubicParam::Infinity => Plane::new(f, [Elem::ZERO, Elem::ZERO, Elem::ZERO, Elem::ONE]).unwrap(),
    }
}

/// The tangent `T_t`: `P(t)` and the derivative `(3t², 2t, 1, 0)`.
pub fn tangent_line(f: &FieldSpec, t: CubicParam) -> PluckerLine {
    let (z, one) = (Elem::ZERO, Elem::ONE);
    let (a, b) = match t {
        CubicParam::Finite(t) => {
            let d = [f.mul(f.from_int(3), f.mul(t, t)), f.mul(f.from_int(2), t), one, z];
            (cubic_point(f, CubicParam::Finite(t)), Point::new(f, d).unwrap())
        }
        CubicParam::Infinity => (Point::new(f, [one, z, z, z]).unwrap(), Point::new(f, [z, one, z, z]).unwrap()),
    };
    line_from_points(f, &a, &b).unwrap()
}

/// The common axis `x0 = x3 = 0` (meaningful when q is divisible by 3).
pub fn common_axis(f: &FieldSpec) -> PluckerLine {
    let (z, one) = (Elem::ZERO, Elem::ONE);
    line_from_points(f, &Point::new(f, [z, one, z, z]).unwrap(), &Point::new(f, [z, z, one, z]).unwrap())
        .unwrap()
}

/// Line types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum LineClass {
    RealChord,
    RealAxis,
    Tangent,
    ImaginaryChord,
    ImaginaryAxis,
    UnisecantGamma,
    UnisecantNonGamma,
    ExternalGamma,
    ExternalNonGamma,
    Axis,
    ExternalAxis,
}

impl LineClass {
    pub const ALL: [LineClass; 11] = [
        LineClass::RealChord,
        LineClass::RealAxis,
        LineClass::Tangent,
        LineClass::ImaginaryChord,
        LineClass::ImaginaryAxis,
        LineClass::UnisecantGamma,
        LineClass::UnisecantNonGamma,
        LineClass::ExternalGamma,
        LineClass::ExternalNonGamma,
        LineClass::Axis,
        LineClass::ExternalAxis,
    ];

    /// The classes occurring for a given `ξ`.
    pub fn for_xi(xi: i8) -> Vec<LineClass> {
        use LineClass::*;
        if xi == 0 {
            vec![RealChord, Tangent, ImaginaryChord, UnisecantGamma, UnisecantNonGamma, ExternalNonGamma, Axis, ExternalAxis]
        } else {
            vec![
                RealChord,
                RealAxis,
                Tangent,
                ImaginaryChord,
                ImaginaryAxis,
                UnisecantGamma,
                UnisecantNonGamma,
                ExternalGamma,
                ExternalNonGamma,
            ]
        }
    }

    /// ASCII label, as accepted on the command line.
    pub fn label(self) -> &'static str {
        use LineClass::*;
        match self {
            RealChord => "RC",
            RealAxis => "RA",
            Tangent => "T",
            ImaginaryChord => "IC",
            ImaginaryAxis => "IA",
            UnisecantGamma => "UG",
            UnisecantNonGamma => "UnG",
            ExternalGamma => "EG",
            ExternalNonGamma => "EnG",
            Axis => "A",
            ExternalAxis => "EA",
        }
    }

    /// Label with Γ spelled out.
    pub fn symbol(self) -> &'static str {
        use LineClass::*;
        match self {
            UnisecantGamma => "UΓ",
            UnisecantNonGamma => "UnΓ",
            ExternalGamma => "EΓ",
            ExternalNonGamma => "EnΓ",
            other => other.label(),
        }
    }

    /// Number of lines in the class, or `None` when the class does not occur.
    pub fn expected_size(self, q: u32) -> Option<u64> {
        use LineClass::*;
        let xi = crate::gf::centered_mod3(q);
        let q = u64::from(q);
        let occurs = match self {
            RealAxis | ImaginaryAxis | ExternalGamma => xi != 0,
            Axis | ExternalAxis => xi == 0,
            _ => true,
        };
        if !occurs {
            return None;
        }
        Some(match self {
            RealChord | RealAxis => (q * q + q) / 2,
            Tangent => q + 1,
            ImaginaryChord | ImaginaryAxis => (q * q - q) / 2,
            UnisecantGamma => q * q + q,
            UnisecantNonGamma | ExternalGamma => q * q * q - q,
            ExternalNonGamma => (q * q - q) * (q * q - 1),
            Axis => 1,
            ExternalAxis => (q + 1) * (q * q - 1),
        })
    }
}

impl fmt::Display for LineClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for LineClass {
    type Err = CubicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LineClass::ALL
            .into_iter()
            .find(|c| c.label().eq_ignore_ascii_case(s) || c.symbol() == s)
            .ok_or_else(|| CubicError::UnknownClass(s.to_string()))
    }
}

impl Serialize for LineClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Point types. The first five occur when 3 ∤ q, the last four (with
/// `OnCubic`) when 3 | q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointClass {
    OnCubic,
    OnTangent,
    ThreeGamma,
    OneGamma,
    ZeroGamma,
    OnAxis,
    TangentOffAxis,
    OnRealChord,
    OnImaginaryChord,
}

impl PointClass {
    pub fn label(self) -> &'static str {
        use PointClass::*;
        match self {
            OnCubic => "C",
            OnTangent => "T",
            ThreeGamma => "3G",
            OneGamma => "1G",
            ZeroGamma => "0G",
            OnAxis => "(q+1)G",
            TangentOffAxis => "TO",
            OnRealChord => "RC",
            OnImaginaryChord => "IC",
        }
    }
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Plane types by how they meet the cubic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaneClass {
    Osculating,
    TwoPoints,
    ThreePoints,
    OnePoint,
    NoPoints,
}

impl PlaneClass {
    pub fn label(self) -> &'static str {
        match self {
            PlaneClass::Osculating => "G",
            PlaneClass::TwoPoints => "2C",
            PlaneClass::ThreePoints => "3C",
            PlaneClass::OnePoint => "1C",
            PlaneClass::NoPoints => "0C",
        }
    }
}

impl fmt::Display for PlaneClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Special {
    Tangent,
    RealChord,
    ImaginaryChord,
    RealAxis,
    ImaginaryAxis,
    Axis,
}

/// Points of a line with coordinates in GF(q²).
type ExtVec = [Ext2; 4];

fn ext_cubic_point(ext: &QuadraticExtension<'_>, t: Ext2) -> ExtVec {
    let t2 = ext.mul(t, t);
    [ext.mul(t2, t), t2, t, Ext2::ONE]
}

/// Imaginary chords: lines through conjugate pairs `P(θ)`, `P(θ^q)`, with the
/// Plücker tuple computed in GF(q²) and reduced to GF(q).
fn imaginary_chords(f: &FieldSpec) -> Vec<PluckerLine> {
    let ext = QuadraticExtension::new(f);
    let mut keys = BTreeSet::new();
    for theta in ext.elements().filter(|z| !z.is_base()) {
        let a = ext_cubic_point(&ext, theta);
        let b = ext_cubic_point(&ext, ext.conj(theta));
        let minors = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
            .map(|(i, j)| ext.sub(ext.mul(a[i], b[j]), ext.mul(a[j], b[i])));
        let lead = *minors.iter().find(|z| !z.is_zero()).expect("distinct points");
        let s = ext.inv(lead).unwrap();
        let key = minors.map(|m| {
            let r = ext.mul(m, s);
            assert!(r.is_base(), "chord of conjugate points is defined over GF(q)");
            r.re
        });
        keys.insert(key);
    }
    keys.into_iter().map(|k| PluckerLine::from_key(f, k).unwrap()).collect()
}

/// Twisted cubic with its developable, chords and axes.
#[derive(Debug, Clone)]
pub struct CubicModel {
    field: Arc<FieldSpec>,
    points: Vec<Point>,
    osc_planes: Vec<Plane>,
    tangents: Vec<PluckerLine>,
    real_chords: Vec<PluckerLine>,
    imaginary_chords: Vec<PluckerLine>,
    real_axes: Vec<PluckerLine>,
    imaginary_axes: Vec<PluckerLine>,
    axis: Option<PluckerLine>,
    special: HashMap<LineId, Special>,
}

impl CubicModel {
    pub fn new(field: FieldSpec) -> Self {
        Self::build(Arc::new(field))
    }

    pub fn build(field: Arc<FieldSpec>) -> Self {
        let f = &*field;
        let params: Vec<CubicParam> = CubicParam::all(f).collect();
        let points: Vec<Point> = params.iter().map(|&t| cubic_point(f, t)).collect();
        let osc_planes: Vec<Plane> = params.iter().map(|&t| osculating_plane(f, t)).collect();
        let tangents: Vec<PluckerLine> = params.iter().map(|&t| tangent_line(f, t)).collect();
        let mut real_chords = Vec::new();
        for (i, a) in points.iter().enumerate() {
            for b in &points[i + 1..] {
                real_chords.push(line_from_points(f, a, b).unwrap());
            }
        }
        real_chords.sort();
        let imaginary_chords = imaginary_chords(f);
        let (mut real_axes, mut imaginary_axes, axis) = match f.xi() {
            0 => (Vec::new(), Vec::new(), Some(common_axis(f))),
            _ => {
                let mut ra = Vec::new();
                for (i, a) in osc_planes.iter().enumerate() {
                    for b in &osc_planes[i + 1..] {
                        ra.push(line_from_planes(f, a, b).unwrap());
                    }
                }
                let pol = Polarity::new(f).unwrap();
                let ia = imaginary_chords.iter().map(|l| pol.line(l)).collect();
                (ra, ia, None)
            }
        };
        real_axes.sort();
        imaginary_axes.sort();

        let mut special = HashMap::new();
        let groups = [
            (&tangents, Special::Tangent),
            (&real_chords, Special::RealChord),
            (&imaginary_chords, Special::ImaginaryChord),
            (&real_axes, Special::RealAxis),
            (&imaginary_axes, Special::ImaginaryAxis),
        ];
        for (lines, kind) in groups {
            for l in lines {
                special.entry(l.id(f)).or_insert(kind);
            }
        }
        if let Some(a) = &axis {
            special.insert(a.id(f), Special::Axis);
        }
        CubicModel {
            field,
            points,
            osc_planes,
            tangents,
            real_chords,
            imaginary_chords,
            real_axes,
            imaginary_axes,
            axis,
            special,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn field_arc(&self) -> Arc<FieldSpec> {
        Arc::clone(&self.field)
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn xi(&self) -> i8 {
        self.field.xi()
    }

    /// The q+1 points, indexed by [`CubicParam::index`].
    pub fn cubic_points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, t: CubicParam) -> Point {
        self.points[t.index(self.q())]
    }

    pub fn osc_planes(&self) -> &[Plane] {
        &self.osc_planes
    }

    pub fn osc_plane(&self, t: CubicParam) -> Plane {
        self.osc_planes[t.index(self.q())]
    }

    pub fn tangents(&self) -> &[PluckerLine] {
        &self.tangents
    }

    pub fn tangent(&self, t: CubicParam) -> PluckerLine {
        self.tangents[t.index(self.q())]
    }

    pub fn axis(&self) -> Option<&PluckerLine> {
        self.axis.as_ref()
    }

    /// Real and imaginary chords, each sorted by key.
    pub fn chords(&self) -> (&[PluckerLine], &[PluckerLine]) {
        (&self.real_chords, &self.imaginary_chords)
    }

    /// Real axes (pairwise intersections of osculating planes) and imaginary
    /// axes (polar lines of the imaginary chords).
    pub fn axes(&self) -> Result<(&[PluckerLine], &[PluckerLine]), CubicError> {
        if self.xi() == 0 {
            return Err(CubicError::WrongCharacteristic(self.q()));
        }
        Ok((&self.real_axes, &self.imaginary_axes))
    }

    pub fn is_cubic_point(&self, p: &Point) -> bool {
        self.points.contains(p)
    }

    /// Number of cubic points on `l`.
    pub fn cubic_points_on(&self, l: &PluckerLine) -> usize {
        let f = self.field();
        self.points.iter().filter(|p| point_on_line(f, p, l)).count()
    }

    pub fn in_gamma_plane(&self, l: &PluckerLine) -> bool {
        self.osc_planes.iter().any(|pi| line_in_plane(self.field(), l, pi))
    }

    /// Classifies a single line.
    pub fn classify_line(&self, l: &PluckerLine) -> LineClass {
        let special = self.special.get(&l.id(self.field())).copied();
        match self.cubic_points_on(l) {
            2 => LineClass::RealChord,
            1 if special == Some(Special::Tangent) => LineClass::Tangent,
            1 if self.in_gamma_plane(l) => LineClass::UnisecantGamma,
            1 => LineClass::UnisecantNonGamma,
            0 if special == Some(Special::ImaginaryChord) => LineClass::ImaginaryChord,
            0 if self.xi() != 0 => match special {
                Some(Special::ImaginaryAxis) => LineClass::ImaginaryAxis,
                Some(Special::RealAxis) => LineClass::RealAxis,
                _ if self.in_gamma_plane(l) => LineClass::ExternalGamma,
                _ => LineClass::ExternalNonGamma,
            },
            0 => {
                let axis = self.axis.as_ref().expect("q divisible by 3 has an axis");
                if special == Some(Special::Axis) {
                    LineClass::Axis
                } else if lines_meet(self.field(), l, axis) {
                    LineClass::ExternalAxis
                } else {
                    LineClass::ExternalNonGamma
                }
            }
            n => unreachable!("a line meets the cubic in {n} points"),
        }
    }

    /// Classifies every line at once, indexed by [`LineId`].
    pub fn classify_all(&self) -> Vec<LineClass> {
        const COUNT: u8 = 0b11;
        const IN_GAMMA: u8 = 1 << 2;
        const MEETS_AXIS: u8 = 1 << 3;
        let f = self.field();
        let n = pg3::line_count(self.q()) as usize;
        let mut flags = vec![0u8; n];
        for p in &self.points {
            for id in lines_through_point(f, p) {
                flags[id.0 as usize] += 1;
            }
        }
        for pi in &self.osc_planes {
            for id in lines_in_plane(f, pi) {
                flags[id.0 as usize] |= IN_GAMMA;
            }
        }
        if let Some(axis) = &self.axis {
            for p in axis.points(f) {
                for id in lines_through_point(f, &p) {
                    flags[id.0 as usize] |= MEETS_AXIS;
                }
            }
        }
        let xi = self.xi();
        let mut out: Vec<LineClass> = flags
            .iter()
            .map(|&fl| match (fl & COUNT, xi) {
                (2, _) => LineClass::RealChord,
                (1, _) if fl & IN_GAMMA != 0 => LineClass::UnisecantGamma,
                (1, _) => LineClass::UnisecantNonGamma,
                (0, 0) if fl & MEETS_AXIS != 0 => LineClass::ExternalAxis,
                (0, 0) => LineClass::ExternalNonGamma,
                (0, _) if fl & IN_GAMMA != 0 => LineClass::ExternalGamma,
                (0, _) => LineClass::ExternalNonGamma,
                (c, _) => unreachable!("a line meets the cubic in {c} points"),
            })
            .collect();
        for (id, kind) in &self.special {
            out[id.0 as usize] = match kind {
                Special::Tangent => LineClass::Tangent,
                Special::RealChord => LineClass::RealChord,
                Special::ImaginaryChord => LineClass::ImaginaryChord,
                Special::RealAxis => LineClass::RealAxis,
                Special::ImaginaryAxis => LineClass::ImaginaryAxis,
                Special::Axis => LineClass::Axis,
            };
        }
        out
    }

    /// Ids of every line of one class, ascending.
    pub fn class_members(&self, class: LineClass) -> Vec<LineId> {
        members_of(&self.classify_all(), class)
    }

    /// Line counts per occurring class.
    pub fn census(&self) -> Census {
        Census::from_classes(self.q(), self.xi(), &self.classify_all())
    }

    pub fn classify_point(&self, p: &Point) -> PointClass {
        let f = self.field();
        if self.is_cubic_point(p) {
            return PointClass::OnCubic;
        }
        let on_tangent = self.tangents.iter().any(|l| point_on_line(f, p, l));
        if let Some(axis) = &self.axis {
            return if point_on_line(f, p, axis) {
                PointClass::OnAxis
            } else if on_tangent {
                PointClass::TangentOffAxis
            } else if self.real_chords.iter().any(|l| point_on_line(f, p, l)) {
                PointClass::OnRealChord
            } else {
                debug_assert!(self.imaginary_chords.iter().any(|l| point_on_line(f, p, l)));
                PointClass::OnImaginaryChord
            };
        }
        if on_tangent {
            return PointClass::OnTangent;
        }
        let n = self.osc_planes.iter().filter(|pi| pg3::incident_point_plane(f, p, pi)).count();
        gamma_label(n)
    }

    /// Labels of every point, indexed by point id.
    pub fn point_classes(&self) -> Vec<PointClass> {
        let f = self.field();
        let n = pg3::point_count(self.q()) as usize;
        let mut label: Vec<Option<PointClass>> = vec![None; n];
        let mark = |lines: &[PluckerLine], class: PointClass, label: &mut Vec<Option<PointClass>>| {
            for l in lines {
                for p in l.points(f) {
                    label[p.id(f) as usize].get_or_insert(class);
                }
            }
        };
        for p in &self.points {
            label[p.id(f) as usize] = Some(PointClass::OnCubic);
        }
        if let Some(axis) = &self.axis {
            mark(std::slice::from_ref(axis), PointClass::OnAxis, &mut label);
            mark(&self.tangents, PointClass::TangentOffAxis, &mut label);
            mark(&self.real_chords, PointClass::OnRealChord, &mut label);
            mark(&self.imaginary_chords, PointClass::OnImaginaryChord, &mut label);
            return label.into_iter().map(|l| l.expect("chords cover every point")).collect();
        }
        mark(&self.tangents, PointClass::OnTangent, &mut label);
        let mut count = vec![0usize; n];
        for pi in &self.osc_planes {
            for p in points_in_plane(f, pi) {
                count[p.id(f) as usize] += 1;
            }
        }
        label.into_iter().zip(count).map(|(l, c)| l.unwrap_or_else(|| gamma_label(c))).collect()
    }

    pub fn classify_plane(&self, pi: &Plane) -> PlaneClass {
        let f = self.field();
        match self.points.iter().filter(|p| pg3::incident_point_plane(f, p, pi)).count() {
            3 => PlaneClass::ThreePoints,
            2 => PlaneClass::TwoPoints,
            1 if self.osc_planes.contains(pi) => PlaneClass::Osculating,
            1 => PlaneClass::OnePoint,
            0 => PlaneClass::NoPoints,
            n => unreachable!("a plane meets the cubic in {n} points"),
        }
    }

    pub fn point_census(&self) -> Vec<(PointClass, u64)> {
        tally(self.point_classes())
    }

    pub fn plane_census(&self) -> Vec<(PlaneClass, u64)> {
        tally(pg3::all_planes(self.field()).map(|pi| self.classify_plane(&pi)))
    }

    pub fn dump(&self) -> ModelDump {
        ModelDump {
            q: self.q(),
            xi: self.xi(),
            modulus: self.field.modulus().to_vec(),
            cubic_points: self.points.clone(),
            osculating_planes: self.osc_planes.clone(),
            tangents: self.tangents.clone(),
            axis: self.axis,
        }
    }
}

fn gamma_label(n: usize) -> PointClass {
    match n {
        3 => PointClass::ThreeGamma,
        1 => PointClass::OneGamma,
        0 => PointClass::ZeroGamma,
        n => unreachable!("an off-tangent point lies on {n} osculating planes"),
    }
}

fn tally<T: Ord>(it: impl IntoIterator<Item = T>) -> Vec<(T, u64)> {
    let mut m = std::collections::BTreeMap::new();
    for x in it {
        *m.entry(x).or_insert(0u64) += 1;
    }
    m.into_iter().collect()
}

/// Ids carrying `class` in a [`CubicModel::classify_all`] table.
pub fn members_of(classes: &[LineClass], class: LineClass) -> Vec<LineId> {
    classes
        .iter()
        .enumerate()
        .filter(|(_, c)| **c == class)
        .map(|(i, _)| LineId(i as u32))
        .collect()
}

/// JSON model dump.
#[derive(Debug, Clone, Serialize)]
pub struct ModelDump {
    pub q: u32,
    pub xi: i8,
    pub modulus: Vec<u16>,
    pub cubic_points: Vec<Point>,
    pub osculating_planes: Vec<Plane>,
    pub tangents: Vec<PluckerLine>,
    pub axis: Option<PluckerLine>,
}

/// Line counts per class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub q: u32,
    pub xi: i8,
    pub classes: Vec<(LineClass, u64)>,
}

impl Census {
    pub fn from_classes(q: u32, xi: i8, classes: &[LineClass]) -> Census {
        let mut counts = [0u64; 11];
        for c in classes {
            counts[*c as usize] += 1;
        }
        let classes = LineClass::for_xi(xi).into_iter().map(|c| (c, counts[c as usize])).collect();
        Census { q, xi, classes }
    }

    pub fn get(&self, class: LineClass) -> u64 {
        self.classes.iter().find(|(c, _)| *c == class).map_or(0, |(_, n)| *n)
    }

    pub fn total(&self) -> u64 {
        self.classes.iter().map(|(_, n)| n).sum()
    }

    /// `q,class,count` rows with a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("q,class,count\n");
        for (c, n) in &self.classes {
            s.push_str(&format!("{},{},{}\n", self.q, c.label(), n));
        }
        s
    }
}
