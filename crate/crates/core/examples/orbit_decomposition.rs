use twisted_cubic::action::generators;
use twisted_cubic::orbits::{decompose_class, Method};
use twisted_cubic::{CubicModel, FieldSpec, LineClass};

fn main() {
    let q: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let model = CubicModel::new(FieldSpec::with_order(q).unwrap());
    let f = model.field();
    let gens = generators(f).unwrap();
    let classes = model.classify_all();

    for class in LineClass::for_xi(model.xi()) {
        let universe = twisted_cubic::cubic::members_of(&classes, class);
        let p = decompose_class(f, class.label(), &universe, &gens, Method::Bfs, false).unwrap();
        println!("{:>4} {:>7} lines  {:>3} orbits  sizes {:?}", class.symbol(), universe.len(), p.len(), p.size_multiset());
    }
}
