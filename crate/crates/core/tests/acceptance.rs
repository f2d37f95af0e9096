//! End-to-end acceptance checks. Runs without the libtest harness so every
//! criterion prints one PASS/FAIL line; exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::Rng;
use starcore::algebra::{Field, Matrix, PrimeField, Rationals};
use starcore::core_engine::{
    candidate_monomials, core_auto, core_bruteforce, core_monte_carlo, core_special, special_core, verify_bounds,
    Mode, SpecialRule,
};
use starcore::monomial_ideals::{minimal_primes, stanley_reisner_generators, test_ideal};
use starcore::reductions::{for_each_row_space, random_reduction, sample_stream, LinearIdeal};
use starcore::{Ambient, Monomial, MonomialIdeal, SimplicialComplex, StanleyReisnerRing};

use common::{family, figure, labeled, ring, ring_mod};

type Outcome = Result<String, String>;

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

fn figure_invariants() -> Outcome {
    let c = figure();
    let i = stanley_reisner_generators(&c).format();
    ensure!(i == ["x1*x4", "x2*x4"], "I = {i:?}");
    let primes: Vec<Vec<String>> = minimal_primes(&c).iter().map(|p| p.format()).collect();
    ensure!(primes == [vec!["x4"], vec!["x1", "x2"]], "primes = {primes:?}");
    let r = StanleyReisnerRing::new(c, Rationals);
    ensure!(r.dim() == 3, "dim = {}", r.dim());
    Ok("I = (x1*x4, x2*x4), primes (x4), (x1, x2), dim 3".into())
}

fn two_points() -> Outcome {
    let c = labeled(2, &[&[0], &[1]], "x y");
    let r = ring(c.clone());
    let rep = core_auto(&r, 50, 0).map_err(err)?;
    ensure!(rep.result().format() == ["x^2", "y^2"], "core = {}", rep.result());
    ensure!(rep.exact, "core not exact");
    ensure!(test_ideal(&c).format() == ["x", "y"], "tau = {}", test_ideal(&c));

    let rep = core_bruteforce(&ring_mod(c, 2)).map_err(err)?;
    let info = rep.brute_force.as_ref().ok_or("no brute-force details")?;
    ensure!(info.reductions == 1, "{} reductions over GF(2)", info.reductions);
    ensure!(info.examples[0].rows == vec![vec![1, 1]], "reduction {:?}", info.examples[0].rows);
    ensure!(!info.monomial, "GF(2) intersection reported monomial");
    Ok("core (x^2, y^2) exact, tau (x, y); over GF(2) only (x+y), non-monomial".into())
}

fn two_facets() -> Outcome {
    let c = labeled(3, &[&[0, 2], &[1, 2]], "x y z");
    let r = ring(c.clone());
    let tau_m = r.test_ideal().product(&r.maximal_ideal()).map_err(err)?;
    ensure!(tau_m.format() == ["x^2", "x*z", "y^2", "y*z"], "tau*m = {tau_m}");
    let rep = core_monte_carlo(&r, 20, 0).map_err(err)?;
    let z2 = Monomial::from_exponents(vec![0, 0, 2]);
    ensure!(rep.probable_in == vec![z2], "probable_in = {:?}", rep.probable_in);
    ensure!(rep.result() == r.maximal_power(2), "result = {}", rep.result());
    let (closed, rule) = special_core(&c).ok_or("no closed form")?;
    ensure!(rule == SpecialRule::TwoFacets, "rule {rule}");
    ensure!(closed.reinterpret(r.ambient()).map_err(err)? == rep.result(), "closed form differs");
    Ok("tau*m matches; z^2 in all 20 samples; result m^2 = two-facet closed form".into())
}

fn cycles() -> Outcome {
    for n in 3..=6 {
        let r = ring(SimplicialComplex::cycle(n).map_err(err)?);
        let auto = core_auto(&r, 50, 0).map_err(err)?;
        ensure!(auto.mode == Mode::Special && auto.exact, "cycle({n}) auto not exact");
        ensure!(auto.result() == r.maximal_power(3), "cycle({n}) auto = {}", auto.result());

        let mc = core_monte_carlo(&r, 50, 0).map_err(err)?;
        let degree_two = r.graded_basis(2).basis().to_vec();
        ensure!(mc.probable_in.is_empty(), "cycle({n}) probable {:?}", mc.probable_in);
        ensure!(mc.excluded() == degree_two, "cycle({n}) exclusions {:?}", mc.excluded());
        for e in &mc.certified_out {
            let w = e.witness.as_ref().ok_or("missing witness")?;
            let j = LinearIdeal::from_rows(r.clone(), w.rows.clone()).map_err(err)?;
            ensure!(j.is_star_reduction().verdict, "witness is not a reduction");
            ensure!(!j.contains_monomial(&e.monomial), "witness contains {:?}", e.monomial);
        }
    }
    Ok("cycles 3..6: auto m^3 exact; every degree-2 monomial excluded with a checked witness".into())
}

fn spread() -> Outcome {
    let mut exhaustive = 0usize;
    for (name, c) in family() {
        let r = ring(c.clone());
        let d = r.dim();
        for seed in 0..10 {
            let s = random_reduction(&r, d, seed).map_err(err)?;
            ensure!(s.ideal.n_generators() == d, "{name}: {} generators", s.ideal.n_generators());
            ensure!(s.attempts <= 5, "{name} seed {seed}: {} attempts", s.attempts);
        }
        for p in [2, 3] {
            let field = PrimeField::new(p).map_err(err)?;
            let small = ring_mod(c.clone(), p);
            for k in 1..d {
                let mut passing = 0;
                let _ = for_each_row_space(field, r.n_vars(), k, |m| {
                    exhaustive += 1;
                    let j = LinearIdeal::new(small.clone(), m.clone()).expect("nonzero rows");
                    if j.is_star_reduction().verdict {
                        passing += 1;
                    }
                    std::ops::ControlFlow::Continue(())
                });
                ensure!(passing == 0, "{name}: a {k}-row matrix over GF({p}) passes");
            }
        }
    }
    Ok(format!(
        "{} complexes x 10 seeds within 5 attempts; {exhaustive} short row spaces over GF(2), GF(3) all fail",
        family().len()
    ))
}

fn bounds() -> Outcome {
    let mut checks = 0;
    for (name, c) in family() {
        let v = verify_bounds(&ring(c), 50, 0).map_err(err)?;
        checks += v.checks.len();
        if let Some(bad) = v.checks.iter().find(|c| !c.passed) {
            return Err(format!("{name}: {} {}", bad.name, bad.detail));
        }
    }
    Ok(format!("{checks} checks, 0 violations"))
}

fn oracle_equivalence() -> Outcome {
    let mut compared = 0;
    for (name, c) in family() {
        let r = ring(c.clone());
        if r.dim() * r.n_vars() > 8 {
            continue;
        }
        let mc: BTreeSet<Monomial> = core_monte_carlo(&r, 50, 0).map_err(err)?.excluded().into_iter().collect();
        for p in [3, 5] {
            let bf = core_bruteforce(&ring_mod(c.clone(), p)).map_err(err)?;
            let out: BTreeSet<Monomial> = bf.excluded().into_iter().collect();
            ensure!(out == mc, "{name} GF({p}): brute force {out:?} vs sampled {mc:?}");
            compared += 1;
        }
    }
    Ok(format!("{compared} comparisons, 0 disagreements"))
}

fn disjoint_unions() -> Outcome {
    let parts = [
        ("edge", SimplicialComplex::simplex(2).map_err(err)?),
        ("triangle-graph", SimplicialComplex::cycle(3).map_err(err)?),
        ("cycle(4)", SimplicialComplex::cycle(4).map_err(err)?),
    ];
    for i in 0..parts.len() {
        for j in i..parts.len() {
            let (a, b) = (&parts[i].1, &parts[j].1);
            let u = SimplicialComplex::disjoint_union(a, b).map_err(err)?;
            let amb = Ambient::of(&u);
            let mut combined = MonomialIdeal::zero(amb.clone());
            for comp in u.connected_components() {
                let part = if comp.complex.is_simplex() {
                    MonomialIdeal::from_variables(amb.clone(), &comp.vertices).power(2)
                } else {
                    core_auto(&ring(comp.complex.clone()), 50, 0)
                        .map_err(err)?
                        .result()
                        .extend(amb.clone(), &comp.vertices)
                };
                combined = combined.sum(&part).map_err(err)?;
            }
            let r = ring(u);
            let sampled = core_monte_carlo(&r, 50, 0).map_err(err)?;
            let combined = combined.reinterpret(r.ambient()).map_err(err)?;
            ensure!(
                sampled.result() == combined,
                "{}+{}: sampled {} vs combined {}",
                parts[i].0,
                parts[j].0,
                sampled.result(),
                combined
            );
        }
    }
    let simplices = [
        SimplicialComplex::simplex(1).map_err(err)?,
        SimplicialComplex::simplex(2).map_err(err)?,
        SimplicialComplex::simplex(3).map_err(err)?,
    ];
    for a in &simplices {
        for b in &simplices {
            let r = ring(SimplicialComplex::disjoint_union(a, b).map_err(err)?);
            let m2 = r.maximal_power(2);
            let special = core_special(&*r).ok_or("no closed form for a union of simplices")?;
            ensure!(special.result() == m2, "closed form {} for {}", special.result(), r.complex());
            let sampled = core_monte_carlo(&r, 50, 0).map_err(err)?;
            ensure!(sampled.result() == m2, "sampled {} for {}", sampled.result(), r.complex());
        }
    }
    Ok("6 unions match the component combination; 9 simplex unions give m^2".into())
}

fn scaling_invariance() -> Outcome {
    let mut pairs = 0;
    for (name, c) in family() {
        let r = ring(c);
        let field = *r.field();
        let p = field.modulus();
        let candidates = candidate_monomials(&*r);
        let mut rng = sample_stream(9, 0);
        for i in 0..100 {
            // every other pair uses a sparse matrix so both verdicts occur
            let j = loop {
                let rows: Vec<Vec<u64>> = (0..r.dim())
                    .map(|_| {
                        (0..r.n_vars())
                            .map(|_| if i % 2 == 1 && rng.gen_bool(0.5) { 0 } else { field.sample(&mut rng) })
                            .collect()
                    })
                    .collect();
                if let Ok(j) = LinearIdeal::from_rows(r.clone(), rows) {
                    break j;
                }
            };
            let scales: Vec<u64> = (0..r.n_vars()).map(|_| rng.gen_range(1..p)).collect();
            let scaled = j.scale_columns(&scales).map_err(err)?;
            ensure!(
                j.is_star_reduction().verdict == scaled.is_star_reduction().verdict,
                "{name}: verdict changed under scaling"
            );
            let (mut a, mut b) = (j.membership(), scaled.membership());
            for m in &candidates {
                ensure!(a.contains(m) == b.contains(m), "{name}: membership of {m:?} changed");
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs, 0 violations"))
}

fn diagonalization() -> Outcome {
    let q = Rationals;
    let r = std::sync::Arc::new(StanleyReisnerRing::new(labeled(3, &[&[0, 1], &[1, 2]], "x y z"), q));
    let rows = vec![
        vec![q.from_i64(1), q.from_i64(1), q.from_i64(2)],
        vec![q.from_i64(1), q.from_i64(2), q.from_i64(1)],
    ];
    let j = LinearIdeal::from_rows(r.clone(), rows).map_err(err)?;
    ensure!(j.is_star_reduction().verdict, "not a reduction");
    let third = q.parse_elem("1/3").ok_or("parse")?;
    let expect_p = Matrix::from_rows(
        q,
        3,
        vec![
            vec![third.clone(), q.one(), q.zero()],
            vec![third, q.zero(), q.one()],
        ],
    )
    .map_err(err)?;
    let expect_q = Matrix::from_i64_rows(q, &[&[1, 0, 3], &[0, 1, -1]]).map_err(err)?;
    // facet {y, z} belongs to the prime (x); facet {x, y} to (z)
    let wrt_p = j.diagonalize(1).map_err(err)?;
    let wrt_q = j.diagonalize(0).map_err(err)?;
    ensure!(same_rows(&wrt_p, &expect_p), "wrt (x): {wrt_p}");
    ensure!(same_rows(&wrt_q, &expect_q), "wrt (z): {wrt_q}");
    Ok(format!("wrt (x) {wrt_p}, wrt (z) {wrt_q}"))
}

fn same_rows<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> bool {
    let key = |m: &Matrix<F>| {
        let mut rows: Vec<Vec<String>> = m.render_rows();
        rows.sort();
        rows
    };
    key(a) == key(b)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("figure: I, minimal primes, dimension", figure_invariants),
        ("k[x,y]/(xy): core, tau, GF(2) oracle", two_points),
        ("k[x,y,z]/(xy): tau*m and sampled core", two_facets),
        ("cycles: core m^3 with witnesses", cycles),
        ("spread equals dim", spread),
        ("bound sandwich on sampled reductions", bounds),
        ("brute force agrees with sampling", oracle_equivalence),
        ("disjoint-union law", disjoint_unions),
        ("scaling invariance", scaling_invariance),
        ("diagonalization golden matrices", diagonalization),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {:>2}. {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2}. {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
