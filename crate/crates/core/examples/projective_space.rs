use twisted_cubic::pg3::{self, line_from_planes, line_from_points, lines_meet};
use twisted_cubic::{FieldSpec, Plane, PluckerLine, Point};

fn main() {
    let f = FieldSpec::with_order(5).unwrap();
    println!("PG(3,5): {} points, {} lines", pg3::point_count(5), pg3::line_count(5));

    let a = Point::from_ints(&f, [1, 0, 0, 0]).unwrap();
    let b = Point::from_ints(&f, [0, 1, 2, 3]).unwrap();
    let l = line_from_points(&f, &a, &b).unwrap();
    println!("line {a} {b} has Plücker key {l} and id {}", l.id(&f).0);
    for p in l.points(&f) {
        print!("{p}  ");
    }
    println!();

    let x2 = Plane::from_ints(&f, [0, 0, 1, 0]).unwrap();
    let x3 = Plane::from_ints(&f, [0, 0, 0, 1]).unwrap();
    let m = line_from_planes(&f, &x2, &x3).unwrap();
    println!("x2 = x3 = 0 is {m}; meets the first line: {}", lines_meet(&f, &l, &m));

    let parsed = PluckerLine::parse(&f, "1:0:0:0;0:1:0:0").unwrap();
    assert_eq!(parsed, m);
}
