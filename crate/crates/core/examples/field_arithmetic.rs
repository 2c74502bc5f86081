use twisted_cubic::gf::QuadraticExtension;
use twisted_cubic::FieldSpec;

fn main() {
    let f = FieldSpec::with_order(9).unwrap();
    println!("GF({}) = GF({})[x]/{:?}, xi = {}", f.q(), f.p(), f.modulus(), f.xi());
    println!("primitive element {}, least non-square {}", f.generator(), f.rho().unwrap());

    let (a, b) = (f.element(4).unwrap(), f.element(7).unwrap());
    println!("{a} + {b} = {}", f.add(a, b));
    println!("{a} * {b} = {}", f.mul(a, b));
    println!("{a} / {b} = {}", f.div(a, b).unwrap());
    println!("{a}^-1 = {}", f.inv(a));

    // operator syntax through a field handle
    let (x, y) = (f.scalar(a), f.scalar(b));
    println!("(a + b) * a = {}", (x + y) * x);

    let ext = QuadraticExtension::new(&f);
    let (t, n) = ext.minimal_polynomial();
    println!("GF(81) = GF(9)(theta), theta^2 = {t}*theta - {n}");
}
