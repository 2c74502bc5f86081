use twisted_cubic::action::{closed_form_inverse, generators, group_elements, stabilizer_cubic_point};
use twisted_cubic::matrix::proportional;
use twisted_cubic::{CubicParam, FieldSpec};

fn main() {
    let f = FieldSpec::with_order(7).unwrap();
    let group = group_elements(&f);
    println!("|G_7| = {}", group.len());

    let g = &group[100];
    println!("g = {g}, matrix rows:");
    for row in g.matrix() {
        println!("  {:?}", row.map(|e| e.0));
    }
    let closed = closed_form_inverse(&f, g.params()).unwrap();
    println!("closed-form inverse agrees: {}", proportional(&f, &closed, g.inverse_matrix()));

    let t = CubicParam::Finite(f.from_int(3));
    let stab = stabilizer_cubic_point(&f, t);
    println!("stabilizer of P(3): {} elements, first {}", stab.len(), stab[0]);

    let gens = generators(&f).unwrap();
    println!("generators: {}", gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" "));
}
