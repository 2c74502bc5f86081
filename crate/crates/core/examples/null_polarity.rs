use twisted_cubic::{CubicModel, FieldSpec, Polarity};

fn main() {
    let model = CubicModel::new(FieldSpec::with_order(5).unwrap());
    let f = model.field();
    let pol = Polarity::new(f).unwrap();

    // the polarity swaps cubic points and osculating planes
    for (p, pi) in model.cubic_points().iter().zip(model.osc_planes()) {
        println!("{p} -> {}   (osculating plane {pi})", pol.point(p));
    }

    let (chords, _) = model.chords();
    let (axes, _) = model.axes().unwrap();
    let image = pol.line(&chords[0]);
    println!("real chord {} -> {} (a real axis: {})", chords[0], image, axes.contains(&image));
}
