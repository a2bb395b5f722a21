fn main() {
    let t0 = std::time::Instant::now();
    for r in wbu_core::validate::run_all(1000, 42) {
        println!("{}: failures={}/{} {}", r.name, r.failures, r.samples, r.detail);
    }
    println!("total {:?}", t0.elapsed());
}
