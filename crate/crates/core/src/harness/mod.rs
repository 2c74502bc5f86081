//! Verification runs, exports and the command-line front end.

pub mod cli;
pub mod theory;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::action::{generators, group_elements, ActionError, GroupElement};
use crate::cubic::{members_of, Census, CubicModel, LineClass};
use crate::gf::{prime_power, Elem, FieldError, FieldSpec};
use crate::orbits::{self, decompose_class, Method, OrbitError, OrbitPartition};
use crate::pg3::{self, line_from_planes, GeometryError, LineId, Plane, PluckerLine, Point};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unsupported field order {q}: {source}")]
    UnsupportedField { q: u32, source: FieldError },
    #[error(transparent)]
    Parse(#[from] GeometryError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error("small-q mode covers q = 2, 3, 4 only, not {0}")]
    NotSmall(u32),
    #[error("thread pool: {0}")]
    Threads(String),
}

/// Builds GF(q), optionally with an explicit modulus (coefficients low to high).
pub fn field(q: u32, modulus: Option<&[u16]>) -> Result<FieldSpec, HarnessError> {
    let bad = |source| HarnessError::UnsupportedField { q, source };
    let (p, h) = prime_power(q).ok_or(bad(FieldError::NotPrimePower(q)))?;
    FieldSpec::new(p, h, modulus).map_err(bad)
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub method: Method,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    pub modulus: Option<Vec<u16>>,
    /// Non-square used in representatives; defaults to the field's least one.
    pub rho: Option<Elem>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// A proven statement.
    Theorem,
    /// A formula checked outside the range where it was established.
    Conjecture,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub kind: Kind,
    pub expected: String,
    pub observed: String,
    pub status: Status,
}

impl Verdict {
    fn new(check: impl Into<String>, kind: Kind, expected: impl ToString, observed: impl ToString) -> Self {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        let status = if expected == observed { Status::Pass } else { Status::Fail };
        Verdict { check: check.into(), kind, expected, observed, status }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn line(&self) -> String {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let note = if self.kind == Kind::Conjecture { " [conjecture]" } else { "" };
        format!("{tag} {}{note}: expected {} observed {}", self.check, self.expected, self.observed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeCount {
    pub size: u64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassResult {
    pub class: LineClass,
    pub lines: u64,
    pub orbits: usize,
    pub sizes: Vec<SizeCount>,
    pub representatives: Vec<PluckerLine>,
    /// SHA-256 over the orbit digests in representative order.
    pub partition_digest: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub q: u32,
    pub xi: i8,
    pub parity: &'static str,
    pub modulus: Vec<u16>,
    pub rho: Option<Elem>,
    pub method: Method,
    pub classes: Vec<ClassResult>,
    pub l_sigma: usize,
    pub l_eng: usize,
    pub verdicts: Vec<Verdict>,
}

impl OrbitReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(Verdict::passed)
    }

    pub fn class(&self, class: LineClass) -> Option<&ClassResult> {
        self.classes.iter().find(|c| c.class == class)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn multiset_text(m: &BTreeMap<u64, u64>) -> String {
    let parts: Vec<String> = m.iter().map(|(s, c)| format!("{s}x{c}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn sizes_text(sizes: &[u64]) -> String {
    let mut m = BTreeMap::new();
    for s in sizes {
        *m.entry(*s).or_insert(0) += 1;
    }
    multiset_text(&m)
}

fn run_in_pool<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T, HarnessError> {
    match threads {
        None => Ok(job()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| HarnessError::Threads(e.to_string()))?;
            Ok(pool.install(job))
        }
    }
}

/// The group used for orbit computations with a given method.
fn acting_elements(f: &FieldSpec, method: Method) -> Result<Vec<GroupElement>, HarnessError> {
    Ok(match method {
        Method::Bfs => generators(f)?,
        Method::Expand => group_elements(f),
    })
}

/// Orbit of a line under a generating set, by search.
fn orbit_ids(f: &FieldSpec, line: &PluckerLine, gens: &[GroupElement]) -> Vec<LineId> {
    let start = line.id(f);
    let mut seen = std::collections::HashSet::from([start]);
    let mut frontier = vec![start];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = g.apply_line_id(f, x);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<LineId> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

struct Representatives<'a> {
    f: &'a FieldSpec,
    model: &'a CubicModel,
    gens: &'a [GroupElement],
}

impl Representatives<'_> {
    /// Checks that the given lines lie in `class`, lie in distinct orbits and
    /// have the expected orbit sizes.
    fn check(&self, name: &str, class: LineClass, lines: &[(PluckerLine, u64)]) -> Verdict {
        let expected: Vec<String> = lines.iter().map(|(l, s)| format!("{l} {}:{s}", class.label())).collect();
        let mut observed = Vec::new();
        let mut orbits: Vec<Vec<LineId>> = Vec::new();
        for (l, _) in lines {
            let orbit = orbit_ids(self.f, l, self.gens);
            let shared = orbits.iter().any(|o| o.binary_search(&l.id(self.f)).is_ok());
            let tag = if shared { " (shares an orbit)" } else { "" };
            observed.push(format!("{l} {}:{}{tag}", self.model.classify_line(l).label(), orbit.len()));
            orbits.push(orbit);
        }
        Verdict::new(name, Kind::Theorem, expected.join("; "), observed.join("; "))
    }
}

/// Computes every class partition and checks it against the expected structure.
pub fn verify(q: u32, options: &VerifyOptions) -> Result<OrbitReport, HarnessError> {
    let f = Arc::new(field(q, options.modulus.as_deref())?);
    run_in_pool(options.threads, || verify_field(f, options))?
}

fn verify_field(f: Arc<FieldSpec>, options: &VerifyOptions) -> Result<OrbitReport, HarnessError> {
    let model = CubicModel::build(Arc::clone(&f));
    let f = &*f;
    let q = f.q();
    let xi = f.xi();
    let odd = f.is_odd();
    let rho = options.rho.or_else(|| f.rho());
    let table = model.classify_all();
    let elements = acting_elements(f, options.method)?;
    let gens = generators(f)?;
    let mut verdicts = Vec::new();
    let mut classes = Vec::new();

    let census = Census::from_classes(q, xi, &table);
    let expected: Vec<String> = census
        .classes
        .iter()
        .map(|(c, _)| format!("{}={}", c.label(), c.expected_size(q).unwrap_or(0)))
        .collect();
    let observed: Vec<String> = census.classes.iter().map(|(c, n)| format!("{}={n}", c.label())).collect();
    verdicts.push(Verdict::new("class sizes", Kind::Theorem, expected.join(" "), observed.join(" ")));

    let mut partitions = BTreeMap::new();
    for class in LineClass::for_xi(xi) {
        let universe = members_of(&table, class);
        let p = decompose_class(f, class.label(), &universe, &elements, options.method, false)?;
        let mut h = Sha256::new();
        for o in &p.orbits {
            h.update(o.digest.as_bytes());
        }
        let sizes: Vec<u64> = p.sizes();
        let mut grouped: BTreeMap<u64, usize> = BTreeMap::new();
        for s in &sizes {
            *grouped.entry(*s).or_insert(0) += 1;
        }
        classes.push(ClassResult {
            class,
            lines: universe.len() as u64,
            orbits: p.len(),
            sizes: grouped.into_iter().map(|(size, count)| SizeCount { size, count }).collect(),
            representatives: p.orbits.iter().map(|o| o.representative).collect(),
            partition_digest: h.finalize().iter().map(|b| format!("{b:02x}")).collect(),
        });
        if let Some(pattern) = theory::class_pattern(q, class) {
            let name = if pattern.len() == 1 {
                format!("{} is a single orbit", class.label())
            } else {
                format!("{} orbit sizes", class.label())
            };
            verdicts.push(Verdict::new(name, Kind::Theorem, sizes_text(&pattern), sizes_text(&sizes)));
        }
        partitions.insert(class, p);
    }

    let eng = &partitions[&LineClass::ExternalNonGamma];
    let kind = if theory::in_tested_range(q) { Kind::Theorem } else { Kind::Conjecture };
    let observed: BTreeMap<u64, u64> = eng.size_multiset().into_iter().map(|(s, c)| (s, c as u64)).collect();
    let expected = match theory::external_non_gamma(q) {
        Ok(m) => multiset_text(&m),
        Err(e) => e.to_string(),
    };
    verdicts.push(Verdict::new("EnG orbit sizes", kind, expected, multiset_text(&observed)));
    let l_eng = eng.len();
    let l_sigma: usize = partitions.values().map(OrbitPartition::len).sum();
    verdicts.push(Verdict::new("EnG orbit count", kind, theory::external_non_gamma_orbits(q), l_eng));
    verdicts.push(Verdict::new("total line orbit count", kind, theory::total_line_orbits(q), l_sigma));

    let reps = Representatives { f, model: &model, gens: &gens };
    verdicts.extend(representative_checks(&reps, rho)?);

    Ok(OrbitReport {
        q,
        xi,
        parity: if odd { "odd" } else { "even" },
        modulus: f.modulus().to_vec(),
        rho,
        method: options.method,
        classes,
        l_sigma,
        l_eng,
        verdicts,
    })
}

fn representative_checks(r: &Representatives<'_>, rho: Option<Elem>) -> Result<Vec<Verdict>, HarnessError> {
    let f = r.f;
    let q = u64::from(f.q());
    let g = q * q * q - q;
    let (z, one) = (Elem::ZERO, Elem::ONE);
    let p0 = Point::new(f, [z, z, z, one])?;
    let line = |a: &Point, v: [Elem; 4]| -> Result<PluckerLine, HarnessError> {
        Ok(pg3::line_from_points(f, a, &Point::new(f, v)?)?)
    };
    let mut out = Vec::new();
    if !f.is_odd() {
        let l1 = line(&p0, [z, one, z, z])?;
        let l2 = line(&p0, [z, one, one, z])?;
        out.push(r.check("UG representatives", LineClass::UnisecantGamma, &[(l1, q + 1), (l2, q * q - 1)]));
        return Ok(out);
    }
    let rho = rho.expect("odd fields have a non-square");
    let l1 = line(&p0, [one, z, one, z])?;
    let l2 = line(&p0, [one, z, rho, z])?;
    out.push(r.check("UnG representatives", LineClass::UnisecantNonGamma, &[(l1, g / 2), (l2, g / 2)]));
    if f.xi() != 0 {
        let three = f.from_int(3);
        let pi0 = Plane::new(f, [one, z, z, z])?;
        let pi1 = Plane::new(f, [z, f.neg(three), z, f.neg(one)])?;
        let pi2 = Plane::new(f, [z, f.neg(f.mul(three, rho)), z, f.neg(one)])?;
        let m1 = line_from_planes(f, &pi0, &pi1)?;
        let m2 = line_from_planes(f, &pi0, &pi2)?;
        out.push(r.check("EG representatives", LineClass::ExternalGamma, &[(m1, g / 2), (m2, g / 2)]));
    } else {
        let a = Point::new(f, [z, one, z, z])?;
        let e1 = line(&a, [z, z, one, one])?;
        let e2 = line(&a, [one, z, one, z])?;
        let e3 = line(&a, [one, z, rho, z])?;
        let h = (q * q - 1) / 2;
        out.push(r.check("EA representatives", LineClass::ExternalAxis, &[(e1, g), (e2, h), (e3, h)]));
    }
    Ok(out)
}

/// [`verify`] for q = 2, 3, 4, where the matrices of the parametrized form
/// are a proper subgroup of the stabilizer of the cubic.
pub fn small_q(q: u32) -> Result<OrbitReport, HarnessError> {
    if !(2..=4).contains(&q) {
        return Err(HarnessError::NotSmall(q));
    }
    verify(q, &VerifyOptions::default())
}

/// Line counts per class.
pub fn census(q: u32, modulus: Option<&[u16]>) -> Result<Census, HarnessError> {
    Ok(CubicModel::new(field(q, modulus)?).census())
}

/// Orbit partition of one class, or of all lines when `class` is `None`.
pub fn orbits_cmd(
    q: u32,
    class: Option<LineClass>,
    method: Method,
    keep_members: bool,
) -> Result<OrbitPartition, HarnessError> {
    let f = field(q, None)?;
    let elements = acting_elements(&f, method)?;
    let (label, universe) = match class {
        Some(c) => (c.label().to_string(), CubicModel::new(f.clone()).class_members(c)),
        None => ("all".to_string(), pg3::all_line_ids(q).collect()),
    };
    Ok(decompose_class(&f, &label, &universe, &elements, method, keep_members)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepOrbit {
    pub q: u32,
    pub line: PluckerLine,
    pub class: LineClass,
    pub orbit_size: usize,
    /// Least line of the orbit.
    pub representative: PluckerLine,
}

/// Orbit of one line given as text. The token `rho` stands for the field's
/// least non-square.
pub fn rep_orbit(q: u32, line_spec: &str) -> Result<RepOrbit, HarnessError> {
    let f = field(q, None)?;
    let spec = match f.rho() {
        Some(rho) => line_spec.replace("rho", &rho.to_string()),
        None => line_spec.to_string(),
    };
    let line = PluckerLine::parse(&f, &spec)?;
    let model = CubicModel::new(f.clone());
    let orbit = orbits::expand_representative(&f, &line, &group_elements(&f));
    Ok(RepOrbit {
        q,
        line,
        class: model.classify_line(&line),
        orbit_size: orbit.len(),
        representative: PluckerLine::from_id(&f, orbit[0]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_small_fields_passes() {
        for q in [5, 7, 8, 9] {
            let r = verify(q, &VerifyOptions::default()).unwrap();
            for v in &r.verdicts {
                assert!(v.passed(), "q={q}: {}", v.line());
            }
            assert_eq!(r.l_sigma, r.classes.iter().map(|c| c.orbits).sum::<usize>());
        }
    }

    #[test]
    fn report_examples() {
        let r7 = verify(7, &VerifyOptions::default()).unwrap();
        assert_eq!((r7.l_eng, r7.l_sigma), (12, 22));
        let r8 = verify(8, &VerifyOptions::default()).unwrap();
        assert_eq!((r8.l_eng, r8.l_sigma), (13, 22));
        let r9 = verify(9, &VerifyOptions::default()).unwrap();
        assert_eq!(r9.l_sigma, 25);
        let ea = r9.class(LineClass::ExternalAxis).unwrap();
        assert_eq!(ea.sizes, vec![SizeCount { size: 40, count: 2 }, SizeCount { size: 720, count: 1 }]);
    }

    #[test]
    fn small_q_patterns() {
        for q in [2, 3, 4] {
            let r = small_q(q).unwrap();
            for v in &r.verdicts {
                assert!(v.passed(), "q={q}: {}", v.line());
            }
        }
        assert!(matches!(small_q(5), Err(HarnessError::NotSmall(5))));
    }

    #[test]
    fn other_non_square_gives_same_partition() {
        for q in [5, 7] {
            let f = field(q, None).unwrap();
            let squares_off: Vec<Elem> = f.units().filter(|&x| !f.is_square(x)).collect();
            let base = verify(q, &VerifyOptions::default()).unwrap();
            for rho in squares_off {
                let r = verify(q, &VerifyOptions { rho: Some(rho), ..Default::default() }).unwrap();
                assert!(r.all_pass());
                assert_eq!(r.classes, base.classes);
            }
        }
    }

    #[test]
    fn reports_are_deterministic_across_threads() {
        let runs: Vec<String> = [1, 2, 8]
            .iter()
            .map(|&n| verify(8, &VerifyOptions { threads: Some(n), ..Default::default() }).unwrap().to_json())
            .collect();
        assert_eq!(runs[0], runs[1]);
        assert_eq!(runs[0], runs[2]);
    }

    #[test]
    fn exports() {
        let c = census(5, None).unwrap();
        assert_eq!(c.total(), 806);
        let t = orbits_cmd(5, Some(LineClass::Tangent), Method::Bfs, false).unwrap();
        assert_eq!(t.sizes(), vec![6]);
        let r = rep_orbit(9, "0:1:0:0;1:0:2:0").unwrap();
        assert_eq!(r.orbit_size, 40);
        let r = rep_orbit(9, "0:1:0:0;1:0:rho:0").unwrap();
        assert_eq!((r.orbit_size, r.class), (40, LineClass::ExternalAxis));
        assert!(rep_orbit(9, "nonsense").is_err());
        assert!(matches!(census(6, None), Err(HarnessError::UnsupportedField { q: 6, .. })));
    }
}
