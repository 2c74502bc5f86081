use twisted_cubic::harness::{verify, VerifyOptions};

fn main() {
    let q: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(9);
    let report = verify(q, &VerifyOptions::default()).unwrap();
    for v in &report.verdicts {
        println!("{}", v.line());
    }
    println!("L_sigma = {}, L_EnG = {}", report.l_sigma, report.l_eng);
    if !report.all_pass() {
        std::process::exit(1);
    }
}
