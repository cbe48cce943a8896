//! Acceptance gate: one PASS/FAIL line per criterion; exits nonzero if any fails.
//!
//! Runs without the libtest harness so the lines always show:
//! `cargo test --test acceptance`.

use std::collections::HashMap;
use std::time::Instant;

use abelcodes::convolutional::{central_report, central_report_for_code, window};
use abelcodes::dynamics::{controllable_on, granule_duality_check, output_chains, GranuleTable};
use abelcodes::fixtures;
use abelcodes::machines::{roundtrip_check, SyndromeFormer};
use abelcodes::oracle::{ambient, Oracle, OracleCaps};
use abelcodes::verify::{self, random_instance, VerifyConfig};
use abelcodes::{GroupCode, InvariantFactors, TimeSubset};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn inv(orders: &[u64]) -> InvariantFactors {
    InvariantFactors::from_cyclic_orders(orders)
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Central state invariants of the three-tap code and of its dual.
fn criterion_1() -> Outcome {
    let code = fixtures::three_tap_z4_code();
    let r = central_report(&fixtures::three_tap_z4(), 12).map_err(err)?;
    ensure!(r.state == inv(&[2, 4]), "state of C = {}", r.state);
    ensure!(r.state.order() == 8, "state order {}", r.state.order());
    let d = central_report_for_code(&code.dual(), r.margin, None).map_err(err)?;
    ensure!(d.state == inv(&[2, 4]), "state of dual = {}", d.state);
    Ok(())
}

/// Interior controllability / observability indices for C and its dual.
fn criterion_2() -> Outcome {
    let code = fixtures::three_tap_z4_code();
    let r = central_report(&fixtures::three_tap_z4(), 12).map_err(err)?;
    ensure!(
        (r.controller_memory, r.observer_memory) == (Some(2), Some(1)),
        "C indices {:?}/{:?}",
        r.controller_memory,
        r.observer_memory
    );
    let d = central_report_for_code(&code.dual(), r.margin, None).map_err(err)?;
    ensure!(
        (d.controller_memory, d.observer_memory) == (Some(1), Some(2)),
        "dual indices {:?}/{:?}",
        d.controller_memory,
        d.observer_memory
    );
    Ok(())
}

/// Interior granules of the three-tap code and its dual, plus granule duality everywhere.
fn criterion_3() -> Outcome {
    let code = fixtures::three_tap_z4_code();
    let r = central_report(&fixtures::three_tap_z4(), 12).map_err(err)?;
    let level = |rep: &abelcodes::convolutional::CentralReport, j: usize, observer: bool| {
        rep.granules
            .get(j)
            .map(|g| {
                if observer {
                    g.observer.clone()
                } else {
                    g.controller.clone()
                }
            })
            .unwrap_or_default()
    };
    ensure!(
        level(&r, 0, true) == vec![inv(&[2])],
        "Φ0 = {:?}",
        level(&r, 0, true)
    );
    ensure!(
        level(&r, 1, true) == vec![inv(&[2, 4])],
        "Φ1 = {:?}",
        level(&r, 1, true)
    );
    ensure!(
        level(&r, 1, false) == vec![inv(&[2])],
        "Γ1 = {:?}",
        level(&r, 1, false)
    );
    ensure!(
        level(&r, 2, false) == vec![inv(&[2])],
        "Γ2 = {:?}",
        level(&r, 2, false)
    );

    // 001 represents the nontrivial coset of the one-symbol restriction.
    let n = code.axis_len();
    let k = n / 2;
    let at_k = code
        .restriction(&TimeSubset::new(n, [k]).map_err(err)?)
        .map_err(err)?;
    ensure!(
        !at_k.carrier().membership(&[0, 0, 1]).map_err(err)?,
        "001 lies in C|k"
    );
    ensure!(
        at_k.carrier().membership(&[0, 0, 2]).map_err(err)?,
        "002 not in C|k"
    );

    let d = central_report_for_code(&code.dual(), r.margin, None).map_err(err)?;
    ensure!(
        level(&d, 1, true) == vec![inv(&[2])],
        "dual Φ1 = {:?}",
        level(&d, 1, true)
    );
    ensure!(
        level(&d, 2, true) == vec![inv(&[2])],
        "dual Φ2 = {:?}",
        level(&d, 2, true)
    );

    for k in 0..n {
        for j in 0..n - k {
            ensure!(
                granule_duality_check(&code, k, j).map_err(err)?,
                "granule duality fails at [{k}, {}]",
                k + j
            );
        }
    }
    Ok(())
}

/// Two-symbol counting at interior times of the three-tap code.
fn criterion_4() -> Outcome {
    let code = fixtures::three_tap_z4_code();
    let n = code.axis_len();
    let margin = fixtures::three_tap_z4().default_margin();
    for k in margin..n - margin - 1 {
        let one = |t: usize| -> Result<u128, String> {
            Ok(code
                .restriction(&TimeSubset::new(n, [t]).map_err(err)?)
                .map_err(err)?
                .code_order())
        };
        let product = one(k)? * one(k + 1)?;
        ensure!(product == 32 * 32, "k={k}: |C|k| |C|k+1| = {product}");
        let pair = code
            .restriction(&TimeSubset::range(n, k, k + 2))
            .map_err(err)?
            .code_order();
        ensure!(pair == 8 * 4 * 4, "k={k}: |C|[k,k+1]| = {pair}");
    }
    Ok(())
}

/// The autonomous ℤ4 code.
fn criterion_5() -> Outcome {
    let code = fixtures::autonomous_z4_code();
    ensure!(code.code_order() == 8, "order {}", code.code_order());
    let whole = code
        .carrier()
        .quotient_invariants(&abelcodes::Subgroup::trivial(
            code.modulus(),
            code.layout().total_dim(),
        ))
        .map_err(err)?;
    ensure!(whole == inv(&[2, 4]), "C ≅ {whole}");
    let r = central_report(&fixtures::autonomous_z4(), 8).map_err(err)?;
    ensure!(
        r.chains.input_group_order == 1,
        "interior input group order {}",
        r.chains.input_group_order
    );
    let n = code.axis_len();
    for k in r.margin..n - r.margin {
        let f = output_chains(&code, k, 0).map_err(err)?.input_group.order();
        ensure!(f == 1, "F_{k} has order {f}");
    }
    ensure!(
        r.observer_memory == Some(2),
        "observer memory {:?}",
        r.observer_memory
    );
    ensure!(
        r.chains.syndrome_group == inv(&[4]),
        "syndrome group {}",
        r.chains.syndrome_group
    );
    let phi = |j: usize| {
        r.granules
            .get(j)
            .map(|g| g.observer.clone())
            .unwrap_or_default()
    };
    ensure!(phi(1) == vec![inv(&[2])], "Φ1 = {:?}", phi(1));
    ensure!(phi(2) == vec![inv(&[2])], "Φ2 = {:?}", phi(2));
    Ok(())
}

/// The repetition code over ℤ4 and its zero-sum dual.
fn criterion_6() -> Outcome {
    let code = fixtures::repetition_z4_code();
    let n = code.axis_len();
    let r = central_report(&fixtures::repetition_z4(), n).map_err(err)?;
    ensure!(r.state == inv(&[4]), "state {}", r.state);
    let d = central_report_for_code(&code.dual(), r.margin, None).map_err(err)?;
    ensure!(d.state == inv(&[4]), "dual state {}", d.state);
    for m in 1..n {
        for e in m + 1..n {
            ensure!(
                !controllable_on(&code, m, e).map_err(err)?,
                "[{m}, {e}) controllable"
            );
        }
    }
    ensure!(
        r.observer_memory == Some(1),
        "observer memory {:?}",
        r.observer_memory
    );

    let sf = SyndromeFormer::new(&code).map_err(err)?;
    ensure!(sf.kernel() == *code.carrier(), "syndrome kernel != C");
    for (first, last, row) in sf.check_rows() {
        ensure!(last == first + 1, "check row spans [{first}, {last}]");
        let a = row[first];
        ensure!(
            a != 0 && (a + row[last]) % 4 == 0,
            "check row {row:?} is not a multiple of w_k − w_(k+1)"
        );
    }
    // Coset injectivity: equal syndromes only within one coset of C.
    let mut seen: HashMap<Vec<Vec<u64>>, Vec<u64>> = HashMap::new();
    for w in ambient(code.modulus(), code.layout().total_dim(), 1 << 24).map_err(err)? {
        let (s, _) = sf.form_syndromes(&w).map_err(err)?;
        if let Some(prev) = seen.get(&s) {
            let diff: Vec<u64> = w.iter().zip(prev).map(|(a, b)| (a + 4 - b) % 4).collect();
            ensure!(
                code.code_membership(&diff).map_err(err)?,
                "two cosets share a syndrome"
            );
        } else {
            seen.insert(s, w);
        }
    }
    ensure!(
        seen.len() as u128 * code.code_order() == 4u128.pow(n as u32),
        "coset count {}",
        seen.len()
    );
    Ok(())
}

/// The randomized theorem suite.
fn criterion_7() -> Outcome {
    let cfg = VerifyConfig {
        seed: 1,
        trials: 200,
        moduli: vec![2, 3, 4],
        max_axis: 6,
        max_width: 2,
    };
    let start = Instant::now();
    let report = verify::run(&cfg).map_err(err)?;
    let elapsed = start.elapsed();
    ensure!(report.passed(), "{}", report.render_text());
    ensure!(
        report.tallies.iter().all(|t| t.checks > 0),
        "a theorem was never exercised"
    );
    ensure!(elapsed.as_secs() < 120, "took {elapsed:?}");
    Ok(())
}

/// Fast path against the enumeration oracle on random small instances.
fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut instances = 0;
    while instances < 50 {
        let inst = random_instance(&mut rng, &[2, 3, 4], 6, 2);
        let dim: usize = inst.widths.iter().sum();
        if (inst.modulus as u128).pow(dim as u32) > 4096 {
            continue;
        }
        instances += 1;
        let c = inst.code().map_err(err)?;
        let n = c.axis_len();
        let caps = OracleCaps::default();
        let o = Oracle::from_generators(&c, &inst.generators, caps).map_err(err)?;
        ensure!(o.order() == c.code_order(), "order mismatch on {inst:?}");
        let dual_fast = Oracle::new(&c.dual(), caps).map_err(err)?;
        ensure!(
            &o.dual().map_err(err)? == dual_fast.elements(),
            "dual mismatch on {inst:?}"
        );
        for k in 1..n {
            let fast = abelcodes::dynamics::state_at(&c, k).map_err(err)?.two_sided;
            ensure!(
                o.state_count(k).map_err(err)? == fast.order(),
                "state count at {k} on {inst:?}"
            );
            ensure!(
                o.state_invariants(k).map_err(err)? == fast,
                "state invariants at {k} on {inst:?}"
            );
        }
        let table = GranuleTable::build(&c, n - 1, false).map_err(err)?;
        for e in &table.entries {
            ensure!(
                o.controller_granule(e.k, e.j).map_err(err)? == e.controller,
                "Γ[{}, {}] on {inst:?}",
                e.k,
                e.k + e.j
            );
            ensure!(
                o.observer_granule(e.k, e.j).map_err(err)? == e.observer,
                "Φ[{}, {}] on {inst:?}",
                e.k,
                e.k + e.j
            );
        }
        let sf = SyndromeFormer::new(&c).map_err(err)?;
        let kernel = o.kernel_of(|w| sf.is_member(w)).map_err(err)?;
        ensure!(
            &kernel == o.elements(),
            "syndrome kernel mismatch on {inst:?}"
        );
    }
    Ok(())
}

/// Encoder / observer / syndrome-former roundtrips on every fixture.
fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let codes: [(&str, GroupCode); 3] = [
        ("three_tap_z4", fixtures::three_tap_z4_code()),
        ("autonomous_z4", fixtures::autonomous_z4_code()),
        ("repetition_z4", fixtures::repetition_z4_code()),
    ];
    for (name, code) in codes {
        let s = roundtrip_check(&code, 100, &mut rng).map_err(err)?;
        ensure!(s.passed(), "{name}: {s:?}");
        ensure!(
            s.encoded >= 100 && s.perturbed >= 100,
            "{name}: too few runs {s:?}"
        );
        let n = code.axis_len();
        let mut product = 1u128;
        for k in 0..n {
            product *= output_chains(&code, k, 0).map_err(err)?.input_group.order();
        }
        ensure!(product == code.code_order(), "{name}: ∏|F_k| = {product}");
    }
    Ok(())
}

/// Central values of the three-tap code do not depend on the window length.
fn criterion_10() -> Outcome {
    let spec = fixtures::three_tap_z4();
    let a = central_report(&spec, 12).map_err(err)?;
    let b = central_report(&spec, 14).map_err(err)?;
    ensure!(a.same_interior_values(&b), "N=12: {a:?}\nN=14: {b:?}");
    ensure!(
        window(&spec, 14).map_err(err)?.axis_len == 14,
        "window length"
    );
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "three-tap central state space [2,4] for C and its dual",
            criterion_1,
        ),
        ("three-tap indices 2/1, dual 1/2", criterion_2),
        (
            "three-tap interior granules and granule duality",
            criterion_3,
        ),
        ("three-tap two-symbol restriction counts", criterion_4),
        (
            "autonomous code: order, inputs, memory, syndrome group, granules",
            criterion_5,
        ),
        (
            "repetition code: states, controllability, syndrome-former",
            criterion_6,
        ),
        ("randomized theorem suite, 200 trials", criterion_7),
        ("oracle equivalence on 50 random instances", criterion_8),
        ("machine roundtrips on every fixture", criterion_9),
        (
            "boundary stability of central values at N=12 and N=14",
            criterion_10,
        ),
    ];
    let mut failed = Vec::new();
    for (i, (what, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {what}  ({secs:.2}s)", i + 1),
            Err(e) => {
                println!("criterion {:>2}: FAIL  {what}  ({secs:.2}s): {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("acceptance: all {} criteria passed", criteria.len());
}
