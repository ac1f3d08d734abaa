//! Acceptance criteria. Runs without the libtest harness so that each
//! criterion prints exactly one PASS/FAIL line with its runtime.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use evoalg::classify;
use evoalg::corpus;
use evoalg::enumerate::{self, Budget};
use evoalg::format::subspace_rows;
use evoalg::frattini;
use evoalg::radicals::{self, NilradicalVerdict};
use evoalg::report::{self, AnalyzeOptions};
use evoalg::tk;
use evoalg::verify::{self, VerifyConfig};
use evoalg::{EvolutionAlgebra, FieldSpec, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn q() -> FieldSpec {
    FieldSpec::rational()
}

fn f(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn example_3_2() -> Outcome {
    let e = corpus::eight_dim(q());
    let n1 = e.span_i64(&[&[-1, 1, 0, 0, 0, 0, 0, 0], &[2, 0, 1, 0, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0, 0, 0]]);
    let snil = e.span_i64(&[
        &[-1, 1, 0, 0, 0, 0, 0, 0],
        &[2, 0, 1, 0, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, 0, 0],
        &[0, 0, 0, 0, 1, 1, 0, 0],
        &[0, 0, 0, 0, 0, 0, 1, 1],
    ]);
    let r = report::analyze(&e, &AnalyzeOptions::default()).map_err(|e| e.to_string())?;
    let steps = &r.sn_series.steps;
    ensure(steps.len() == 2, || format!("series has {} terms", steps.len()))?;
    ensure(steps[0].term == subspace_rows(&n1), || format!("N^1 rows {:?}", steps[0].term))?;
    ensure(steps[1].term == subspace_rows(&snil), || format!("N^2 rows {:?}", steps[1].term))?;
    ensure(r.snil == subspace_rows(&snil), || format!("snil rows {:?}", r.snil))?;
    Ok(format!("N^1 = {}, snil = N^2 = {}", n1.pretty(), snil.pretty()))
}

fn tk_oracle_equality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut counts = [0usize; 2];
    for i in 0..500 {
        let field = if i % 2 == 0 { q() } else { f(5) };
        let n = rng.gen_range(2..=6);
        let e = corpus::random_tk(&mut rng, field, n);
        let nil = tk::tk_nilradical(&e).map_err(|err| format!("sample {i}: {err}"))?;
        let ann = tk::ann_of_derived(&e);
        ensure(nil == ann, || format!("sample {i}: {} vs {}", nil.pretty(), ann.pretty()))?;
        ensure(e.is_ideal(&nil) && e.is_nilpotent(&nil).unwrap() && nil.codim() == 1, || {
            format!("sample {i}: {} is not a nilpotent ideal of codimension 1", nil.pretty())
        })?;
        counts[i % 2] += 1;
    }
    Ok(format!("{} instances over Q, {} over F_5", counts[0], counts[1]))
}

fn two_maximal_nilpotent() -> Outcome {
    for field in [q(), f(5)] {
        let e = corpus::two_maximal_nilpotent(field);
        let a = e.span_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 1]]);
        let b = e.span_i64(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 1, 0, 0]]);
        for s in [&a, &b] {
            ensure(e.is_ideal(s) && e.is_nilpotent(s).unwrap(), || format!("{} over {field}", s.pretty()))?;
        }
        ensure(!e.is_nilpotent(&a.sum(&b)).unwrap(), || "sum is nilpotent".into())?;
        ensure(radicals::snil(&e).is_zero(), || "snil is not zero".into())?;
    }
    let e = corpus::two_maximal_nilpotent(f(5));
    let all = enumerate::enumerate_subspaces(e.field(), 4, &Budget::default()).map_err(|e| e.to_string())?;
    let nilpotent: Vec<Subspace> = all
        .into_iter()
        .filter(|s| e.is_ideal(s) && e.is_nilpotent(s).unwrap())
        .collect();
    let mut maximal = radicals::maximal_elements(&nilpotent);
    maximal.sort();
    let mut expected = vec![
        e.span_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 1]]),
        e.span_i64(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 1, 0, 0]]),
    ];
    expected.sort();
    ensure(maximal == expected, || format!("maximal nilpotent ideals over F_5: {maximal:?}"))?;
    Ok(format!("{} nilpotent ideals over F_5, exactly 2 maximal", nilpotent.len()))
}

fn frattini_vs_closed_form() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let budget = Budget::default();
    let mut zero = 0;
    for i in 0..200 {
        let field = if i % 2 == 0 { f(3) } else { f(5) };
        let n = rng.gen_range(2..=4);
        let e = corpus::random_tk(&mut rng, field, n);
        let (f_closed, phi_closed) = tk::tk_frattini(&e).map_err(|err| err.to_string())?;
        let expected = if e.annihilator().codim() == 2 {
            e.zero_subspace()
        } else {
            e.derived()
        };
        let data = frattini::frattini(&e, &budget).map_err(|err| err.to_string())?;
        ensure(f_closed == expected && phi_closed == expected, || format!("sample {i}: closed form"))?;
        ensure(data.f == expected && data.phi == expected, || {
            format!("sample {i} over {field}: F = {}, phi = {}, expected {}", data.f.pretty(), data.phi.pretty(), expected.pretty())
        })?;
        if expected.is_zero() {
            zero += 1;
        }
    }
    Ok(format!("200 instances, {zero} with F = phi = 0, the rest F = phi = E^2"))
}

fn phi_nonzero_example() -> Outcome {
    let e = corpus::phi_nonzero(f(5));
    let phi = frattini::frattini_ideal(&e, &Budget::default()).map_err(|e| e.to_string())?;
    let expected = e.span_i64(&[&[1, 0, 0], &[0, 1, 0]]);
    ensure(phi == expected, || format!("phi = {}", phi.pretty()))?;
    let c = frattini::phi_free_necessary(&e);
    ensure(c.bnil_eq_ann, || "bnil != ann".into())?;
    ensure(c.snil_eq_asoc1 == Some(true), || format!("snil = asoc1: {:?}", c.snil_eq_asoc1))?;
    Ok(format!("phi = {}, both necessary conditions hold", phi.pretty()))
}

fn listed_da_nodes(e: &EvolutionAlgebra) -> Vec<Subspace> {
    let rows: [&[&[i64]]; 8] = [
        &[&[1, 0, 0]],
        &[&[0, 1, 0]],
        &[&[1, 1, 0]],
        &[&[1, 1, 2]],
        &[&[1, 0, 0], &[0, 1, 0]],
        &[&[1, 0, 0], &[0, 1, 2]],
        &[&[0, 1, 0], &[1, 0, 2]],
        &[&[0, 0, 1], &[1, 1, 0]],
    ];
    rows.iter().map(|r| e.span_i64(r)).collect()
}

fn dually_atomistic_example() -> Outcome {
    let budget = Budget::default();
    let e = corpus::dually_atomistic_example(f(5));
    let l = frattini::subalgebra_lattice(&e, &budget).map_err(|e| e.to_string())?;
    ensure(l.is_dually_atomistic(), || "not dually atomistic over F_5".into())?;
    let listed = listed_da_nodes(&e);
    for s in &listed {
        ensure(l.contains_node(s), || format!("{} missing over F_5", s.pretty()))?;
    }
    let proper_nonzero = l.nodes.len() - 2;
    let mut notes = vec![format!("F_5: {proper_nonzero} proper nonzero subalgebras, all 8 listed present")];
    for p in [3, 7] {
        let e = corpus::dually_atomistic_example(f(p));
        let l = frattini::subalgebra_lattice(&e, &budget).map_err(|e| e.to_string())?;
        let present = listed_da_nodes(&e).iter().filter(|s| l.contains_node(s)).count();
        notes.push(format!(
            "F_{p}: {} proper nonzero, {present}/8 listed present, dually atomistic {}",
            l.nodes.len() - 2,
            l.is_dually_atomistic()
        ));
    }
    Ok(notes.join("; "))
}

fn family_check() -> Outcome {
    let f3 = f(3);
    let budget = Budget::default();
    let mut cases: Vec<(String, EvolutionAlgebra, bool)> = vec![("E_2(1,-1)".into(), corpus::e_k(f3, 2, &[1, -1]).unwrap(), true)];
    for n in 2..=4 {
        cases.push((format!("E_{{{n},1}}"), corpus::e_n1(f3, n), true));
    }
    for n in 2..=4 {
        cases.push((format!("E_{{{n},2}}"), corpus::e_n2(f3, n), false));
    }
    cases.push(("E_2(1,-1,0)".into(), corpus::e_k(f3, 2, &[1, -1, 0]).unwrap(), false));
    cases.push(("E_2(1,-1)+E_2(1,-1)".into(), corpus::e2_direct_sum(f3, 2), false));
    for (name, e, expected) in &cases {
        let brute = frattini::dually_atomistic(e, &budget).map_err(|e| e.to_string())?;
        let structural = classify::dually_atomistic_structural(e);
        ensure(brute == *expected, || format!("{name}: brute force says {brute}"))?;
        ensure(structural == Some(brute), || format!("{name}: structural {structural:?}, brute force {brute}"))?;
    }
    Ok(format!("{} algebras over F_3, brute force and structural agree", cases.len()))
}

fn property_suite() -> Outcome {
    let config = VerifyConfig {
        dim: 3,
        field: f(3),
        samples: 200,
        seed: 42,
        budget: Budget::default(),
    };
    let r = verify::run(&config).map_err(|e| e.to_string())?;
    ensure(r.passed(), || r.to_string())?;
    let checks: usize = r.properties.iter().map(|p| p.checked).sum();
    Ok(format!("{} properties, {checks} checks, 0 violations", r.properties.len()))
}

fn negative_boundary() -> Outcome {
    let e = corpus::snil_square_not_ideal(q());
    let s = radicals::snil(&e);
    let s2 = e.subspace_product(&s, &s);
    let expected = e.span_i64(&[&[1, 1, 0, 0, 0]]);
    ensure(s2 == expected, || format!("snil^2 = {}", s2.pretty()))?;
    ensure(!e.is_ideal(&s2), || "snil^2 is an ideal".into())?;
    for field in [q(), f(5)] {
        let e = corpus::nil_ne_snil(field);
        match radicals::nilradical_if_exists(&e, &Budget::default()) {
            NilradicalVerdict::NotMaximal { snil, witness } => {
                ensure(snil.is_zero(), || format!("snil = {}", snil.pretty()))?;
                ensure(e.is_ideal(&witness) && e.is_nilpotent(&witness).unwrap(), || "bad witness".into())?;
            }
            other => return Err(format!("over {field}: {other:?}")),
        }
    }
    Ok(format!("snil^2 = {} is not an ideal; nil != snil = 0 detected over Q and F_5", s2.pretty()))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, u64, fn() -> Outcome); 9] = [
        (1, "eight-dimensional series N^1 and snil", 1, example_3_2),
        (2, "T_K nilradical: explicit span equals kernel form", 10, tk_oracle_equality),
        (3, "two maximal nilpotent ideals, snil = 0", 5, two_maximal_nilpotent),
        (4, "Frattini brute force matches T_K closed form", 60, frattini_vs_closed_form),
        (5, "phi(E) = span{e1, e2} with necessary conditions passing", 5, phi_nonzero_example),
        (6, "dually atomistic example and its listed subalgebras", 5, dually_atomistic_example),
        (7, "dually atomistic families, brute force vs structural", 30, family_check),
        (8, "property suite, dim 3 over F_3, 200 samples", 120, property_suite),
        (9, "snil^2 not an ideal; nil != snil", 1, negative_boundary),
    ];
    let mut failures = 0;
    for (id, title, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let (status, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over time limit; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "[{status}] criterion {id}: {title} | {:.3} s (limit {limit} s) | {detail}",
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failures} failed", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
