//! Orbit decomposition of sets of lines (and points) under the group.
//!
//! Two strategies give the same partition: breadth-first search with a
//! generating set, or expansion of each new representative by every element
//! of the group. Representatives are the least canonical key of each orbit.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::action::GroupElement;
use crate::gf::FieldSpec;
use crate::pg3::{self, LineId, PluckerLine, Point};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("the universe is not closed under the group: {image} is the image of {source_line}")]
    NotClosed { source_line: String, image: String },
    #[error("unknown method {0:?} (expected bfs or expand)")]
    UnknownMethod(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Breadth-first search; the elements passed in only need to generate.
    #[default]
    Bfs,
    /// One image per element of the full group.
    Expand,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Bfs => "bfs",
            Method::Expand => "expand",
        })
    }
}

impl FromStr for Method {
    type Err = OrbitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bfs" => Ok(Method::Bfs),
            "expand" => Ok(Method::Expand),
            _ => Err(OrbitError::UnknownMethod(s.to_string())),
        }
    }
}

/// One orbit of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    pub representative: PluckerLine,
    pub size: u64,
    /// SHA-256 of the sorted member ids (little-endian u32).
    pub digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<PluckerLine>>,
}

/// An exact partition of a set of lines into orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    pub q: u32,
    pub class: String,
    pub method: Method,
    pub orbits: Vec<OrbitRecord>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.orbits.iter().map(|o| o.size).sum()
    }

    /// Orbit sizes, ascending.
    pub fn sizes(&self) -> Vec<u64> {
        let mut s: Vec<u64> = self.orbits.iter().map(|o| o.size).collect();
        s.sort_unstable();
        s
    }

    /// Size → number of orbits of that size.
    pub fn size_multiset(&self) -> BTreeMap<u64, usize> {
        let mut m = BTreeMap::new();
        for o in &self.orbits {
            *m.entry(o.size).or_insert(0) += 1;
        }
        m
    }

    /// Whether both partitions have the same member sets.
    pub fn same_partition(&self, other: &OrbitPartition) -> bool {
        let sig = |p: &OrbitPartition| -> Vec<(PluckerLine, u64, String)> {
            p.orbits.iter().map(|o| (o.representative, o.size, o.digest.clone())).collect()
        };
        sig(self) == sig(other)
    }

    /// The orbit containing `line`, by representative lookup in `members`.
    pub fn orbit_of(&self, line: &PluckerLine) -> Option<&OrbitRecord> {
        self.orbits
            .iter()
            .find(|o| o.members.as_ref().is_some_and(|m| m.binary_search(line).is_ok()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("partition serializes")
    }
}

/// Hex SHA-256 of sorted ids.
pub fn digest_ids(sorted: &[u32]) -> String {
    let mut h = Sha256::new();
    for id in sorted {
        h.update(id.to_le_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

const OUTSIDE: u32 = u32::MAX;
const UNSEEN: u32 = u32::MAX - 1;
const PAR_THRESHOLD: usize = 512;

/// Orbits as sorted id lists, in order of their least member.
fn partition<A>(
    universe: &[u32],
    space: usize,
    actions: usize,
    act: A,
    method: Method,
) -> Result<Vec<Vec<u32>>, (u32, u32)>
where
    A: Fn(usize, u32) -> u32 + Sync,
{
    let mut state = vec![OUTSIDE; space];
    for &x in universe {
        state[x as usize] = UNSEEN;
    }
    let mut seeds = universe.to_vec();
    seeds.sort_unstable();
    let act = &act;
    let images_of = |xs: &[u32]| -> Vec<(u32, u32)> {
        let one = |x: u32| (0..actions).map(move |k| (x, act(k, x)));
        if xs.len() * actions >= PAR_THRESHOLD {
            xs.par_iter().flat_map_iter(|&x| one(x)).collect()
        } else {
            xs.iter().flat_map(|&x| one(x)).collect()
        }
    };
    let mut orbits = Vec::new();
    for seed in seeds {
        if state[seed as usize] != UNSEEN {
            continue;
        }
        let k = orbits.len() as u32;
        state[seed as usize] = k;
        let mut members = vec![seed];
        let mut frontier = vec![seed];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (src, img) in images_of(&frontier) {
                match state[img as usize] {
                    OUTSIDE => return Err((src, img)),
                    UNSEEN => {
                        state[img as usize] = k;
                        next.push(img);
                    }
                    _ => {}
                }
            }
            members.extend_from_slice(&next);
            frontier = match method {
                Method::Bfs => next,
                Method::Expand => Vec::new(),
            };
        }
        members.sort_unstable();
        orbits.push(members);
    }
    Ok(orbits)
}

/// Splits a set of lines into orbits.
///
/// With [`Method::Bfs`], `group` may be any generating set; with
/// [`Method::Expand`], it must be the whole group.
pub fn decompose(
    f: &FieldSpec,
    universe: &[LineId],
    group: &[GroupElement],
    method: Method,
    keep_members: bool,
) -> Result<Vec<OrbitRecord>, OrbitError> {
    let ids: Vec<u32> = universe.iter().map(|l| l.0).collect();
    let space = pg3::line_count(f.q()) as usize;
    let act = |k: usize, x: u32| group[k].apply_line_id(f, LineId(x)).0;
    let orbits = partition(&ids, space, group.len(), act, method).map_err(|(s, i)| OrbitError::NotClosed {
        source_line: PluckerLine::from_id(f, LineId(s)).to_string(),
        image: PluckerLine::from_id(f, LineId(i)).to_string(),
    })?;
    Ok(orbits
        .into_iter()
        .map(|m| OrbitRecord {
            representative: PluckerLine::from_id(f, LineId(m[0])),
            size: m.len() as u64,
            digest: digest_ids(&m),
            members: keep_members.then(|| m.iter().map(|&x| PluckerLine::from_id(f, LineId(x))).collect()),
        })
        .collect())
}

/// [`decompose`] wrapped into a labelled partition.
pub fn decompose_class(
    f: &FieldSpec,
    class: &str,
    universe: &[LineId],
    group: &[GroupElement],
    method: Method,
    keep_members: bool,
) -> Result<OrbitPartition, OrbitError> {
    Ok(OrbitPartition {
        q: f.q(),
        class: class.to_string(),
        method,
        orbits: decompose(f, universe, group, method, keep_members)?,
    })
}

/// The orbit of one line under a full element list, sorted by id.
pub fn expand_representative(f: &FieldSpec, line: &PluckerLine, group: &[GroupElement]) -> Vec<LineId> {
    let id = line.id(f);
    let mut out: Vec<LineId> = group.par_iter().map(|g| g.apply_line_id(f, id)).collect();
    out.par_sort_unstable();
    out.dedup();
    out
}

/// Sizes of the orbit of `line` under a stabilizer and under the whole group.
pub fn orbit_of_suborbit(
    f: &FieldSpec,
    line: &PluckerLine,
    stabilizer: &[GroupElement],
    group: &[GroupElement],
) -> (usize, usize) {
    (expand_representative(f, line, stabilizer).len(), expand_representative(f, line, group).len())
}

/// Point orbits of the whole space under a generating set: (representative, size).
pub fn point_orbits(f: &FieldSpec, group: &[GroupElement]) -> Vec<(Point, u64)> {
    let n = pg3::point_count(f.q()) as u32;
    let universe: Vec<u32> = (0..n).collect();
    let act = |k: usize, x: u32| group[k].apply_point(f, &Point::from_id(f, x)).id(f);
    partition(&universe, n as usize, group.len(), act, Method::Bfs)
        .expect("the whole space is closed")
        .into_iter()
        .map(|m| (Point::from_id(f, m[0]), m.len() as u64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{generators, group_elements, stabilizer_cubic_point, stabilizer_axis_point, Polarity};
    use crate::cubic::{CubicModel, CubicParam, LineClass};
    use crate::gf::Elem;

    fn setup(q: u32) -> (CubicModel, Vec<GroupElement>, Vec<GroupElement>) {
        let m = CubicModel::new(FieldSpec::with_order(q).unwrap());
        let gens = generators(m.field()).unwrap();
        let all = group_elements(m.field());
        (m, gens, all)
    }

    #[test]
    fn method_parsing() {
        assert_eq!("bfs".parse::<Method>().unwrap(), Method::Bfs);
        assert_eq!("EXPAND".parse::<Method>().unwrap(), Method::Expand);
        assert!("dfs".parse::<Method>().is_err());
    }

    #[test]
    fn digest_matches_known_vector() {
        // sha256 of the empty input
        assert_eq!(digest_ids(&[]), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn small_examples_q5() {
        let (m, gens, _) = setup(5);
        let f = m.field();
        let rc = decompose(f, &m.class_members(LineClass::RealChord), &gens, Method::Bfs, false).unwrap();
        assert_eq!(rc.len(), 1);
        assert_eq!(rc[0].size, 15);
        let ung = decompose(f, &m.class_members(LineClass::UnisecantNonGamma), &gens, Method::Bfs, false).unwrap();
        assert_eq!(ung.iter().map(|o| o.size).collect::<Vec<_>>(), vec![60, 60]);
    }

    #[test]
    fn even_unisecant_split() {
        let (m, gens, _) = setup(8);
        let f = m.field();
        let p = decompose_class(f, "UG", &m.class_members(LineClass::UnisecantGamma), &gens, Method::Bfs, false)
            .unwrap();
        assert_eq!(p.sizes(), vec![9, 63]);
    }

    #[test]
    fn not_closed_is_reported() {
        let (m, gens, _) = setup(5);
        let f = m.field();
        let mut u = m.class_members(LineClass::RealChord);
        u.pop();
        let err = decompose(f, &u, &gens, Method::Bfs, false).unwrap_err();
        assert!(matches!(err, OrbitError::NotClosed { .. }));
    }

    #[test]
    fn expand_examples() {
        let (m, _, all) = setup(5);
        let f = m.field();
        let a = PluckerLine::parse(f, "0:0:0:1;1:0:1:0").unwrap();
        let b = PluckerLine::parse(f, "0:0:0:1;1:0:2:0").unwrap();
        let oa = expand_representative(f, &a, &all);
        let ob = expand_representative(f, &b, &all);
        assert_eq!((oa.len(), ob.len()), (60, 60));
        assert!(oa.iter().all(|x| ob.binary_search(x).is_err()));

        let (m9, _, all9) = setup(9);
        let l = PluckerLine::parse(m9.field(), "0:1:0:0;0:0:1:1").unwrap();
        assert_eq!(expand_representative(m9.field(), &l, &all9).len(), 720);
    }

    #[test]
    fn suborbit_examples() {
        let (m, _, all) = setup(7);
        let f = m.field();
        let stab = stabilizer_cubic_point(f, CubicParam::Finite(Elem::ZERO));
        let l = PluckerLine::parse(f, "0:0:0:1;1:0:1:0").unwrap();
        assert_eq!(orbit_of_suborbit(f, &l, &stab, &all), (21, 168));

        let (m8, _, all8) = setup(8);
        let f8 = m8.field();
        let stab8 = stabilizer_cubic_point(f8, CubicParam::Finite(Elem::ZERO));
        let l8 = PluckerLine::parse(f8, "0:0:0:1;0:1:0:0").unwrap();
        assert_eq!(orbit_of_suborbit(f8, &l8, &stab8, &all8), (1, 9));

        let (m9, _, all9) = setup(9);
        let f9 = m9.field();
        let stab9 = stabilizer_axis_point(f9, CubicParam::Finite(Elem::ZERO)).unwrap();
        let l9 = PluckerLine::parse(f9, "0:1:0:0;1:0:1:0").unwrap();
        assert_eq!(orbit_of_suborbit(f9, &l9, &stab9, &all9), (4, 40));
    }

    #[test]
    fn methods_agree() {
        for q in [5, 7, 8, 9] {
            let (m, gens, all) = setup(q);
            let f = m.field();
            let classes = m.classify_all();
            for class in LineClass::for_xi(m.xi()) {
                let u = crate::cubic::members_of(&classes, class);
                let b = decompose_class(f, class.label(), &u, &gens, Method::Bfs, false).unwrap();
                let e = decompose_class(f, class.label(), &u, &all, Method::Expand, false).unwrap();
                assert!(b.same_partition(&e), "q={q} {class}");
                assert_eq!(b.total(), u.len() as u64);
                for o in &b.orbits {
                    assert_eq!(all.len() as u64 % o.size, 0);
                }
            }
        }
    }

    #[test]
    fn polar_image_of_an_orbit_is_an_orbit() {
        for q in [5, 7] {
            let (m, gens, _) = setup(q);
            let f = m.field();
            let pol = Polarity::new(f).unwrap();
            let all_ids: Vec<LineId> = pg3::all_line_ids(q).collect();
            let parts = decompose(f, &all_ids, &gens, Method::Bfs, true).unwrap();
            for o in &parts {
                let mut image: Vec<PluckerLine> = o.members.as_ref().unwrap().iter().map(|l| pol.line(l)).collect();
                image.sort();
                let target = parts.iter().find(|p| p.members.as_ref().unwrap().binary_search(&image[0]).is_ok()).unwrap();
                assert_eq!(target.members.as_ref().unwrap(), &image);
            }
        }
    }

    #[test]
    fn point_orbits_match_point_classes() {
        for q in [5, 7, 8, 9] {
            let (m, gens, _) = setup(q);
            let orbits = point_orbits(m.field(), &gens);
            let mut sizes: Vec<u64> = orbits.iter().map(|o| o.1).collect();
            let mut census: Vec<u64> = m.point_census().into_iter().map(|c| c.1).collect();
            sizes.sort_unstable();
            census.sort_unstable();
            assert_eq!(sizes, census, "q={q}");
        }
    }
}
