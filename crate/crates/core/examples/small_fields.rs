use twisted_cubic::harness::small_q;

fn main() {
    for q in [2, 3, 4] {
        let r = small_q(q).unwrap();
        println!("q={q} xi={:>2}: {} line orbits, all checks pass: {}", r.xi, r.l_sigma, r.all_pass());
        for c in &r.classes {
            let sizes: Vec<String> = c.sizes.iter().map(|s| format!("{}x{}", s.size, s.count)).collect();
            println!("  {:>3}: {}", c.class.label(), sizes.join(" "));
        }
    }
}
