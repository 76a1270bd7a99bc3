//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints exactly one PASS or FAIL line.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use herbrand::{
    brute_force_cohomology, burnside_orbit_count, field_data, finite_index_perturbation,
    fundamental_unit, h1, herbrand_quotient, ok_module, orbit_decomposition, orbit_h1_formula,
    orbit_herbrand_formula, order2_profile, pell_solve, permutation_module, random_cyclic_module,
    random_finite_module, remark_formula_h1, sunit_herbrand, tate_groups, trace_index,
    unit_group_h1, unit_module, GSet, Omega, PellVariant, Place, QuadraticField, QuadraticInteger,
    DEFAULT_ORACLE_BOUND,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ORACLE_TIME_LIMIT: Duration = Duration::from_secs(30);
const UNIT_SWEEP_TIME_LIMIT: Duration = Duration::from_secs(10);

type Outcome = Result<String, String>;

fn int(x: u64) -> BigInt {
    BigInt::from(x)
}

fn pow2(e: i64) -> BigRational {
    let p = BigInt::from(2).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

fn finish(trials: usize, failures: &[String], extra: String) -> Outcome {
    match failures.first() {
        None => Ok(format!("{trials} trials, 0 failures{extra}")),
        Some(first) => Err(format!(
            "{trials} trials, {} failures; first: {first}",
            failures.len()
        )),
    }
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut nontrivial = 0;
    for seed in 0..200u64 {
        let n = 1 + seed % 6;
        let m = random_finite_module(1_000 + seed, n, 1 << 12);
        let tate = tate_groups(&m);
        match brute_force_cohomology(&m, DEFAULT_ORACLE_BOUND) {
            Ok(b)
                if (int(b.h0_order), int(b.h1_order))
                    == (tate.h0_order.clone(), tate.h1_order.clone()) =>
            {
                if b.h0_order > 1 || b.h1_order > 1 {
                    nontrivial += 1;
                }
            }
            other => failures.push(format!(
                "seed {} n {n}: structural {:?} vs brute {other:?}",
                1_000 + seed,
                (tate.h0_order, tate.h1_order)
            )),
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= ORACLE_TIME_LIMIT {
        failures.push(format!("took {elapsed:?}, limit {ORACLE_TIME_LIMIT:?}"));
    }
    finish(
        200,
        &failures,
        format!(", {nontrivial} with nontrivial cohomology, {elapsed:.2?}"),
    )
}

fn order_two_formulas() -> Outcome {
    let mut failures = Vec::new();
    for seed in 0..200u64 {
        let m = random_cyclic_module(2_000 + seed, 2, 6, 8);
        let p = order2_profile(&m).map_err(|e| e.to_string())?;
        let direct = herbrand_quotient(&m);
        let h1 = BigRational::from_integer(direct.tate.h1_order.clone());
        let closed = pow2(2 * p.r_plus as i64 - p.r as i64);
        if p.h1_expressions.iter().any(|e| e != &h1) || direct.quotient != closed {
            failures.push(format!(
                "seed {}: {:?} vs #H1 {h1}, h {} vs {closed}",
                2_000 + seed,
                p.h1_expressions,
                direct.quotient
            ));
        }
    }
    finish(200, &failures, String::new())
}

/// Partitions of `r` into parts from `parts`, as non-increasing lists.
fn partitions(r: usize, parts: &[usize]) -> Vec<Vec<usize>> {
    fn go(r: usize, parts: &[usize], max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == 0 {
            out.push(acc.clone());
            return;
        }
        for &p in parts.iter().filter(|&&p| p <= r && p <= max) {
            acc.push(p);
            go(r - p, parts, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(r, parts, usize::MAX, &mut Vec::new(), &mut out);
    out
}

fn labelled_gset(rng: &mut ChaCha8Rng, n: u64, orbit_sizes: &[usize]) -> GSet {
    let r: usize = orbit_sizes.iter().sum();
    let mut labels: Vec<usize> = (0..r).collect();
    labels.shuffle(rng);
    let mut image = vec![0; r];
    let mut start = 0;
    for &len in orbit_sizes {
        for i in 0..len {
            image[labels[start + i]] = labels[start + (i + 1) % len];
        }
        start += len;
    }
    GSet::new(n, image).expect("cycle lengths divide n")
}

fn check_gset(x: &GSet, seed: u64) -> Option<String> {
    let m = permutation_module(x);
    let direct = herbrand_quotient(&m);
    let product = orbit_herbrand_formula(x);
    let d = orbit_decomposition(x);
    if burnside_orbit_count(x) != d.orbits.len() {
        return Some(format!("{x:?}: Burnside count"));
    }
    if direct.quotient != BigRational::from_integer(product.clone()) {
        return Some(format!(
            "{x:?}: h {} vs orbit product {product}",
            direct.quotient
        ));
    }
    if orbit_h1_formula(x) != direct.tate.h1_order {
        return Some(format!(
            "{x:?}: index formula vs #H1 {}",
            direct.tate.h1_order
        ));
    }
    let t = random_finite_module(seed, x.n(), 64);
    let a = match finite_index_perturbation(x, &t, seed) {
        Ok(a) => a,
        Err(e) => return Some(format!("{x:?}: {e}")),
    };
    if herbrand_quotient(&a).quotient != direct.quotient {
        return Some(format!("{x:?} + finite module (seed {seed}): h changed"));
    }
    None
}

fn orbit_formulas() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut failures = Vec::new();
    let mut trials = 0;
    for n in 1..=12u64 {
        let divisors: Vec<usize> = (1..=n as usize)
            .filter(|d| (n as usize).is_multiple_of(*d))
            .collect();
        for r in 0..=8 {
            for sizes in partitions(r, &divisors) {
                let x = labelled_gset(&mut rng, n, &sizes);
                trials += 1;
                failures.extend(check_gset(&x, trials as u64));
            }
        }
    }
    let exhaustive = trials;
    for _ in 0..100 {
        let n = rng.gen_range(2..=12u64);
        let divisors: Vec<usize> = (1..=n as usize)
            .filter(|d| (n as usize).is_multiple_of(*d))
            .collect();
        let target = rng.gen_range(9..=24);
        let mut sizes = Vec::new();
        let mut r = 0;
        while r < target {
            let len = *divisors.choose(&mut rng).unwrap();
            sizes.push(len);
            r += len;
        }
        let x = labelled_gset(&mut rng, n, &sizes);
        trials += 1;
        failures.extend(check_gset(&x, trials as u64));
    }
    finish(
        trials,
        &failures,
        format!(" ({exhaustive} orbit types with r <= 8, n <= 12, plus 100 larger)"),
    )
}

fn norm_index_formula() -> Outcome {
    let mut failures = Vec::new();
    for seed in 0..100u64 {
        let n = 2 + seed % 5;
        let m = random_cyclic_module(4_000 + seed, n, 5, 6);
        let r = remark_formula_h1(&m);
        let direct = BigRational::from_integer(h1(&m).torsion_order());
        if !r.chain_holds() || r.h1_order != direct {
            failures.push(format!(
                "seed {} n {n}: {r:?} vs #H1 {direct}",
                4_000 + seed
            ));
        }
    }
    finish(100, &failures, String::new())
}

fn squarefree(max: u64) -> Vec<QuadraticField> {
    (2..=max).filter_map(|d| field_data(&int(d)).ok()).collect()
}

fn negative_norm_equivalence() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let fields = squarefree(2000);
    let mut negative = 0;
    for k in &fields {
        let d = k.d();
        let norm_minus_one = fundamental_unit(k).unit_norm == -1;
        let h1_order = unit_group_h1(k);
        let variant = match k.omega() {
            Omega::Whole => PellVariant::MinusOne,
            Omega::Half => PellVariant::MinusFour,
        };
        let pell = match pell_solve(d, variant) {
            Ok(sol) => sol,
            Err(e) => {
                failures.push(format!("D = {d}: {e}"));
                continue;
            }
        };
        if let Some((x, y)) = &pell {
            if !variant.residual(d, x, y).is_zero() {
                failures.push(format!("D = {d}: ({x}, {y}) does not solve {variant}"));
            }
        }
        let statements = [norm_minus_one, h1_order == int(2), pell.is_some()];
        if statements.iter().any(|&s| s != statements[0]) {
            failures.push(format!(
                "D = {d}: N(eps) = -1, #H1 = 2, {variant} solvable: {statements:?}"
            ));
        }
        if h1_order != int(2) && h1_order != int(4) {
            failures.push(format!("D = {d}: #H1 = {h1_order}"));
        }
        let m = unit_module(k);
        if h1(&m).torsion_order() != h1_order
            || herbrand_quotient(&m).quotient != BigRational::new(int(1), int(2))
        {
            failures.push(format!("D = {d}: unit module disagrees"));
        }
        if norm_minus_one {
            negative += 1;
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= UNIT_SWEEP_TIME_LIMIT {
        failures.push(format!("took {elapsed:?}, limit {UNIT_SWEEP_TIME_LIMIT:?}"));
    }
    finish(
        fields.len(),
        &failures,
        format!(", {negative} fields with N(eps) = -1, {elapsed:.2?}"),
    )
}

fn primes_below(n: u64) -> Vec<u64> {
    (2..n)
        .filter(|&p| (2..p).take_while(|q| q * q <= p).all(|q| p % q != 0))
        .collect()
}

fn sunit_formulas() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let fields = squarefree(1000);
    let primes = primes_below(500);
    let mut failures = Vec::new();
    let mut trials = 0;
    for k in fields.choose_multiple(&mut rng, 50) {
        for _ in 0..20 {
            let size = rng.gen_range(0..=6);
            let mut s_f = vec![Place::Infinite];
            s_f.extend(
                primes
                    .choose_multiple(&mut rng, size)
                    .map(|&p| Place::Prime(int(p))),
            );
            trials += 1;
            match sunit_herbrand(k, &s_f) {
                Ok(report) if report.consistent() => {}
                other => failures.push(format!("D = {}, S = {s_f:?}: {other:?}", k.d())),
            }
        }
    }
    finish(trials, &failures, String::new())
}

fn ring_of_integers() -> Outcome {
    let mut failures = Vec::new();
    let fields = squarefree(500);
    for k in &fields {
        let m = ok_module(k);
        let tate = tate_groups(&m);
        let h = herbrand_quotient(&m).quotient;
        let ok = if k.disc() % 2 == BigInt::one() {
            tate.h1_order == trace_index(k) && tate.h1_order.is_one() && h.is_one()
        } else {
            tate.h1_order == int(2)
        };
        if !ok {
            failures.push(format!(
                "D = {}: #H1 = {}, trace index {}, h = {h}",
                k.d(),
                tate.h1_order,
                trace_index(k)
            ));
        }
    }
    finish(fields.len(), &failures, String::new())
}

fn known_values() -> Outcome {
    let mut failures = Vec::new();
    let cases: [(u64, (i64, i64), &str, PellVariant, Option<(u64, u64)>, u64); 3] = [
        (2, (1, 1), "1+√2", PellVariant::MinusOne, Some((1, 1)), 2),
        (3, (2, 1), "2+√3", PellVariant::MinusOne, None, 4),
        (
            5,
            (1, 1),
            "(1+√5)/2",
            PellVariant::MinusFour,
            Some((1, 1)),
            2,
        ),
    ];
    for (d, (a, b), shown, variant, pell, h1_order) in cases {
        let k = field_data(&int(d)).map_err(|e| e.to_string())?;
        let u = fundamental_unit(&k);
        if u.epsilon != QuadraticInteger::new(a, b) || u.epsilon.display(&k) != shown {
            failures.push(format!("D = {d}: eps = {}", u.epsilon.display(&k)));
        }
        let expected = pell.map(|(x, y)| (int(x), int(y)));
        if pell_solve(&int(d), variant) != Ok(expected.clone()) {
            failures.push(format!("D = {d}: {variant} expected {expected:?}"));
        }
        if unit_group_h1(&k) != int(h1_order)
            || h1(&unit_module(&k)).torsion_order() != int(h1_order)
        {
            failures.push(format!("D = {d}: #H1 expected {h1_order}"));
        }
    }
    finish(3, &failures, String::new())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("oracle equivalence on finite modules", oracle_equivalence),
        ("order-two closed forms", order_two_formulas),
        ("permutation module orbit formulas", orbit_formulas),
        ("norm-kernel index formula", norm_index_formula),
        (
            "negative norm, unit cohomology and Pell",
            negative_norm_equivalence,
        ),
        ("S-unit Herbrand quotient, two routes", sunit_formulas),
        ("ring of integers and trace index", ring_of_integers),
        ("known values for D = 2, 3, 5", known_values),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
