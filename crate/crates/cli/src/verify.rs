//! Seeded verification sweeps behind `herbrand verify`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use clap::ValueEnum;
use herbrand::{
    brute_force_cohomology, burnside_orbit_count, field_data, finite_index_perturbation,
    fundamental_unit, h1, herbrand_quotient, orbit_decomposition, orbit_h1_formula,
    orbit_herbrand_formula, order2_profile, pell_solve, permutation_module, random_cyclic_module,
    random_finite_module, remark_formula_h1, sunit_herbrand, tate_groups, unit_group_h1,
    unit_module, CyclicModule, GSet, Omega, PellVariant, Place, QuadraticField,
};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::input::{GSetFile, ModuleFile};
use crate::render::{Rendered, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    /// Closed forms for #H^1 and h over a group of order 2
    OrderTwo,
    /// Orbit-stabilizer formulas for permutation modules
    Orbits,
    /// Norm of the fundamental unit, #H^1 of units and negative Pell
    Units,
    /// Two expressions for the S-unit Herbrand quotient
    SUnits,
    /// Index formula for #H^1 through the kernel of the norm
    NormIndex,
    /// Structural cohomology against brute-force enumeration
    Oracle,
}

impl Claim {
    pub fn id(self) -> &'static str {
        match self {
            Claim::OrderTwo => "ORDER_TWO",
            Claim::Orbits => "ORBITS",
            Claim::Units => "UNITS",
            Claim::SUnits => "S_UNITS",
            Claim::NormIndex => "NORM_INDEX",
            Claim::Oracle => "ORACLE",
        }
    }

    fn slug(self) -> &'static str {
        match self {
            Claim::OrderTwo => "order-two",
            Claim::Orbits => "orbits",
            Claim::Units => "units",
            Claim::SUnits => "s-units",
            Claim::NormIndex => "norm-index",
            Claim::Oracle => "oracle",
        }
    }

    pub fn default_trials(self) -> usize {
        match self {
            Claim::OrderTwo | Claim::Orbits | Claim::Oracle => 200,
            Claim::NormIndex => 100,
            Claim::SUnits => 1000,
            Claim::Units => 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub claim: Claim,
    pub trials: Option<usize>,
    pub seed: u64,
    pub min_d: u64,
    pub max_d: u64,
    pub oracle_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Sort key: the trial seed, or `D` for the units sweep.
    pub key: u64,
    pub input: String,
    pub detail: String,
    pub rerun: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub claim: Claim,
    pub seed: u64,
    pub trials: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Check = Result<(), (String, String)>;

fn module_json(m: &CyclicModule) -> String {
    serde_json::to_string(&ModuleFile::from_module(m)).expect("serializable")
}

fn gset_json(x: &GSet) -> String {
    serde_json::to_string(&GSetFile::from_gset(x)).expect("serializable")
}

fn check_order_two(seed: u64) -> Check {
    let m = random_cyclic_module(seed, 2, 6, 8);
    let p = order2_profile(&m).map_err(|e| (module_json(&m), e.to_string()))?;
    let direct = herbrand_quotient(&m);
    let h1 = num_rational::BigRational::from_integer(direct.tate.h1_order.clone());
    if p.h1_expressions.iter().any(|e| e != &h1) || p.predicted_h != direct.quotient {
        let forms: Vec<String> = p.h1_expressions.iter().map(ToString::to_string).collect();
        return Err((
            module_json(&m),
            format!(
                "#H^1 = {h1}, closed forms [{}]; h = {}, predicted {}",
                forms.join(", "),
                direct.quotient,
                p.predicted_h
            ),
        ));
    }
    Ok(())
}

fn random_gset(rng: &mut ChaCha8Rng) -> GSet {
    let n = rng.gen_range(1..=12u64);
    let divisors: Vec<usize> = (1..=n as usize)
        .filter(|d| (n as usize).is_multiple_of(*d))
        .collect();
    let target = rng.gen_range(0..=16usize);
    let mut sizes = Vec::new();
    let mut r = 0;
    while r < target {
        let len = *divisors.choose(rng).expect("1 divides n");
        sizes.push(len);
        r += len;
    }
    let mut labels: Vec<usize> = (0..r).collect();
    labels.shuffle(rng);
    let mut image = vec![0; r];
    let mut start = 0;
    for len in sizes {
        for i in 0..len {
            image[labels[start + i]] = labels[start + (i + 1) % len];
        }
        start += len;
    }
    GSet::new(n, image).expect("cycle lengths divide n")
}

fn check_orbits(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = random_gset(&mut rng);
    let fail = |detail: String| Err((gset_json(&x), detail));
    let d = orbit_decomposition(&x);
    if burnside_orbit_count(&x) != d.orbits.len() {
        return fail("Burnside count differs from orbit count".into());
    }
    let direct = herbrand_quotient(&permutation_module(&x));
    let product = orbit_herbrand_formula(&x);
    if !direct.quotient.is_integer() || direct.quotient.to_integer() != product {
        return fail(format!("h = {}, orbit product {product}", direct.quotient));
    }
    let by_index = orbit_h1_formula(&x);
    if by_index != direct.tate.h1_order {
        return fail(format!(
            "#H^1 = {}, index formula {by_index}",
            direct.tate.h1_order
        ));
    }
    let t = random_finite_module(seed, x.n(), 64);
    let a = match finite_index_perturbation(&x, &t, seed) {
        Ok(a) => a,
        Err(e) => return fail(e.to_string()),
    };
    let h = herbrand_quotient(&a).quotient;
    if h != direct.quotient {
        return fail(format!("perturbed by {}: h = {h}", module_json(&t)));
    }
    Ok(())
}

fn check_units(k: &QuadraticField) -> Check {
    let d = k.d();
    let input = format!("D = {d}");
    let variant = match k.omega() {
        Omega::Whole => PellVariant::MinusOne,
        Omega::Half => PellVariant::MinusFour,
    };
    let pell = pell_solve(d, variant).map_err(|e| (input.clone(), e.to_string()))?;
    let norm_minus_one = fundamental_unit(k).unit_norm == -1;
    let h1_order = unit_group_h1(k);
    let statements = [norm_minus_one, h1_order == BigInt::from(2), pell.is_some()];
    if statements.iter().any(|&s| s != statements[0]) {
        return Err((
            input,
            format!(
                "N(eps) = -1: {}, #H^1 = 2: {}, {variant} solvable: {}",
                statements[0], statements[1], statements[2]
            ),
        ));
    }
    let m = unit_module(k);
    let module_h1 = h1(&m).torsion_order();
    let h = herbrand_quotient(&m).quotient;
    if module_h1 != h1_order || h != num_rational::BigRational::new(1.into(), 2.into()) {
        return Err((input, format!("unit module: #H^1 = {module_h1}, h = {h}")));
    }
    Ok(())
}

fn primes_below(n: u64) -> Vec<u64> {
    (2..n)
        .filter(|&p| (2..p).take_while(|q| q * q <= p).all(|q| p % q != 0))
        .collect()
}

fn check_s_units(seed: u64, min_d: u64, max_d: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = loop {
        let d = rng.gen_range(min_d.max(2)..=max_d.max(2));
        if let Ok(k) = field_data(&BigInt::from(d)) {
            break k;
        }
    };
    let primes = primes_below(500);
    let size = rng.gen_range(0..=6);
    let mut s_f = vec![Place::Infinite];
    s_f.extend(
        primes
            .choose_multiple(&mut rng, size)
            .map(|&p| Place::Prime(BigInt::from(p))),
    );
    let places: Vec<String> = s_f.iter().map(ToString::to_string).collect();
    let input = format!("D = {}, S = {{{}}}", k.d(), places.join(", "));
    match sunit_herbrand(&k, &s_f) {
        Ok(r) if r.consistent() => Ok(()),
        Ok(r) => Err((
            input,
            format!(
                "prod n_v / 2 = {}, closed form {}",
                r.herbrand, r.closed_form
            ),
        )),
        Err(e) => Err((input, e.to_string())),
    }
}

fn check_norm_index(seed: u64) -> Check {
    let n = 2 + seed % 5;
    let m = random_cyclic_module(seed, n, 5, 6);
    let r = remark_formula_h1(&m);
    let direct = h1(&m).torsion_order();
    if !r.chain_holds() || r.h1_order != num_rational::BigRational::from_integer(direct.clone()) {
        return Err((module_json(&m), format!("#H^1 = {direct}, {r:?}")));
    }
    Ok(())
}

fn check_oracle(seed: u64, bound: u64) -> Check {
    let n = 1 + seed % 6;
    let m = random_finite_module(seed, n, 1 << 12);
    let tate = tate_groups(&m);
    let brute = brute_force_cohomology(&m, bound).map_err(|e| (module_json(&m), e.to_string()))?;
    if tate.h0_order != BigInt::from(brute.h0_order)
        || tate.h1_order != BigInt::from(brute.h1_order)
    {
        return Err((
            module_json(&m),
            format!(
                "structural ({}, {}), brute force ({}, {})",
                tate.h0_order, tate.h1_order, brute.h0_order, brute.h1_order
            ),
        ));
    }
    Ok(())
}

fn guarded(check: impl FnOnce() -> Check) -> Check {
    catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|panic| {
        let msg = panic
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(("(see rerun)".into(), format!("panicked: {msg}")))
    })
}

pub fn run_verification(opts: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let trials;
    if opts.claim == Claim::Units {
        let fields: Vec<QuadraticField> = (opts.min_d.max(2)..=opts.max_d)
            .filter_map(|d| field_data(&BigInt::from(d)).ok())
            .collect();
        trials = fields.len();
        for k in &fields {
            if let Err((input, detail)) = guarded(|| check_units(k)) {
                let d = k.d().to_string();
                failures.push(Failure {
                    key: d.parse().unwrap_or(u64::MAX),
                    input,
                    detail,
                    rerun: format!("herbrand verify units --min-d {d} --max-d {d}"),
                });
            }
        }
    } else {
        trials = opts.trials.unwrap_or(opts.claim.default_trials());
        for i in 0..trials as u64 {
            let s = opts.seed.wrapping_add(i);
            let outcome = guarded(|| match opts.claim {
                Claim::OrderTwo => check_order_two(s),
                Claim::Orbits => check_orbits(s),
                Claim::SUnits => check_s_units(s, opts.min_d, opts.max_d),
                Claim::NormIndex => check_norm_index(s),
                Claim::Oracle => check_oracle(s, opts.oracle_bound),
                Claim::Units => unreachable!(),
            });
            if let Err((input, detail)) = outcome {
                let extra = if opts.claim == Claim::SUnits {
                    format!(" --min-d {} --max-d {}", opts.min_d, opts.max_d)
                } else {
                    String::new()
                };
                failures.push(Failure {
                    key: s,
                    input,
                    detail,
                    rerun: format!(
                        "herbrand verify {} --seed {s} --trials 1{extra}",
                        opts.claim.slug()
                    ),
                });
            }
        }
    }
    failures.sort_by(|a, b| a.key.cmp(&b.key).then_with(|| a.input.cmp(&b.input)));
    VerificationReport {
        claim: opts.claim,
        seed: opts.seed,
        trials,
        failures,
        elapsed: start.elapsed(),
    }
}

/// `elapsed_ms` only appears in JSON when `timing` is set, so that the
/// default machine-readable output is reproducible byte for byte.
pub fn render_report(report: &VerificationReport, timing: bool) -> Rendered {
    let mut table = Table::new()
        .row("claim", report.claim.id())
        .row("trials", report.trials)
        .row("failures", report.failures.len())
        .row("elapsed", format!("{:.3}s", report.elapsed.as_secs_f64()));
    if let Some(first) = report.failures.first() {
        table = table
            .row("first input", &first.input)
            .row("detail", &first.detail)
            .row("rerun", &first.rerun);
    }
    let mut json = json!({
        "claim": report.claim.id(),
        "seed": report.seed,
        "trials": report.trials,
        "passed": report.passed(),
        "failures": report.failures.iter().map(|f| json!({
            "input": f.input,
            "detail": f.detail,
            "rerun": f.rerun,
        })).collect::<Vec<_>>(),
    });
    if timing {
        json["elapsed_ms"] = json!(report.elapsed.as_millis() as u64);
    }
    let out = Rendered::new(table, json);
    if report.passed() {
        out
    } else {
        out.failed()
    }
}
