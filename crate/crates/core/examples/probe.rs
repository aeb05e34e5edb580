use std::time::Instant;

use rs_repair::*;

fn main() {
    let budget = DEFAULT_ENUM_BUDGET;

    let start = Instant::now();
    for p in [101u64, 1009, 10007] {
        let fx = toy_code_and_schemes(p).unwrap();
        for (i, s) in fx.schemes.iter().enumerate() {
            let v = s.validate(budget).unwrap();
            println!("toy p={p} failed={i} t={} valid={} candidates={}", fx.t, v.valid, v.candidates);
        }
    }
    println!("toy total: {:?}\n", start.elapsed());

    let start = Instant::now();
    for (k, d) in [(2usize, 3usize), (3, 4)] {
        let hc = halved_code(8, k, d, 10007).unwrap();
        let mut min_t = u64::MAX;
        let mut max_t = 0u64;
        for delta in 0..8 {
            let pool = hc.opposite_half(delta);
            for combo in combinations(&pool, d) {
                let cal = calibrate_t(&hc, delta, &combo, budget).unwrap();
                min_t = min_t.min(cal.t);
                max_t = max_t.max(cal.t);
                if delta == 4 && combo == [0, 1, 2] {
                    println!("halved k={k} d={d} delta=4 helpers=[0,1,2]: t*={} bits={} capped={}",
                        cal.t, cal.per_helper_bits, cal.budget_capped);
                }
                if delta == 0 {
                    println!("halved k={k} d={d} delta=0 helpers={combo:?}: t*={} bits={} capped={} trivial={}",
                        cal.t, cal.per_helper_bits, cal.budget_capped, cal.trivial_fallback);
                }
            }
        }
        println!("halved (k={k},d={d}): t* range [{min_t},{max_t}]  elapsed so far {:?}", start.elapsed());
    }
    println!("halved total: {:?}\n", start.elapsed());

    // tiny-field calibration golden
    let hc13 = halved_code(6, 2, 3, 13).unwrap();
    let cal13 = calibrate_t(&hc13, 0, &[3, 4, 5], budget).unwrap();
    println!("halved(6,2,3,13) delta=0: t*={} bits={} trivial={} capped={}",
        cal13.t, cal13.per_helper_bits, cal13.trivial_fallback, cal13.budget_capped);
    for delta in 0..6 {
        let pool = hc13.opposite_half(delta);
        let cal = calibrate_t(&hc13, delta, &pool, budget).unwrap();
        println!("halved13 delta={delta}: t*={} trivial={}", cal.t, cal.trivial_fallback);
    }
    println!();

    let start = Instant::now();
    let family = orbit_helper_sets(10007, 2, 3, 0).unwrap();
    println!("orbit p=10007 k=2 d=3 delta=0: members={} bound={} r={} base={:?} ({:?})",
        family.members.len(), family.count_lower_bound, family.r, family.base_set, start.elapsed());
    let reduced = orbit_reduced_code(10007, 2, 3).unwrap();
    let cal = calibrate_t(&reduced, 0, &[3, 4, 5], budget).unwrap();
    println!("orbit reduced calibration: t*={} bits={}\n", cal.t, cal.per_helper_bits);

    let start = Instant::now();
    let fc = folded_code(8, 2, 5, 10007).unwrap();
    let plan = fc.repair_plan(2, &[0, 1, 3, 4, 5], None, budget).unwrap();
    println!("folded(8,2,5,10007) node=2: t*={} total_bits={} ({:?})",
        plan.t, plan.total_bits(), start.elapsed());

    let start = Instant::now();
    let out = search_k2(10007, 4, 3, 20, 200, 42, budget).unwrap();
    println!("search p=10007 n=4 d=3 t=20 trials=200 seed=42: valid={} fraction={} ({:?})",
        out.valid_count, out.fraction, start.elapsed());
    if let Some(first) = out.valid_sets.first() {
        println!("first valid set: {first:?}");
    }

    let start = Instant::now();
    let demo = leakage_attack_demo(10007, 2, 3, 1, budget).unwrap();
    println!("leakage p=10007: secret={} rec={} bits/share={} t={} helper_points={:?} ({:?})",
        demo.secret, demo.reconstructed, demo.bits_leaked_per_share, demo.t, demo.helper_points, start.elapsed());
}
