// Orbits of external lines outside every osculating plane, for several q.
use twisted_cubic::harness::theory;
use twisted_cubic::orbits::{decompose, Method};
use twisted_cubic::{action, CubicModel, FieldSpec, LineClass};

fn main() {
    for q in [5, 7, 8, 9, 11, 13, 16] {
        let model = CubicModel::new(FieldSpec::with_order(q).unwrap());
        let f = model.field();
        let universe = model.class_members(LineClass::ExternalNonGamma);
        let orbits = decompose(f, &universe, &action::generators(f).unwrap(), Method::Bfs, false).unwrap();
        let mut observed = std::collections::BTreeMap::new();
        for o in &orbits {
            *observed.entry(o.size).or_insert(0u64) += 1;
        }
        let expected = theory::external_non_gamma(q).unwrap();
        println!("q={q:>2}  {} orbits  {:?}  {}", orbits.len(), observed, if observed == expected { "ok" } else { "MISMATCH" });
    }
}
