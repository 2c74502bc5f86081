use twisted_cubic::{CubicModel, FieldSpec};

fn main() {
    let q: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let model = CubicModel::new(FieldSpec::with_order(q).unwrap());

    println!("cubic points: {:?}", model.cubic_points().iter().map(|p| p.to_string()).collect::<Vec<_>>());
    if let Some(axis) = model.axis() {
        println!("common axis: {axis}");
    }

    let census = model.census();
    print!("{}", census.to_csv());
    println!("total {}", census.total());

    for (class, n) in model.point_census() {
        println!("points {class}: {n}");
    }
    for (class, n) in model.plane_census() {
        println!("planes {class}: {n}");
    }
}
