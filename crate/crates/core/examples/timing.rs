fn main() {
    use std::time::Instant;
    let scale = isogr::verify::ACCEPTANCE_SCALE;
    let t0 = Instant::now();
    let r = isogr::verify::suite_round_trip(&scale);
    println!("round-trip {:?} ({} checks)", t0.elapsed(), r.checked);
    let t0 = Instant::now();
    let r = isogr::verify::suite_formula_vs_oracle(&scale, 0);
    println!("formula {:?} ({} checks)", t0.elapsed(), r.checked);
    let t0 = Instant::now();
    let r = isogr::verify::suite_h_invariance(&scale, 42, 10);
    println!("h-inv trials=10 {:?} ({} checks)", t0.elapsed(), r.checked);
    let t0 = Instant::now();
    let r = isogr::verify::suite_witness(&scale, 42, 100);
    println!("witness pairs=100 {:?} ({} checks)", t0.elapsed(), r.checked);
    assert!(r.passed(), "{:?}", r.failures);
}
