//! Seeded random modules for property tests and verification sweeps.
//!
//! Modules are direct sums of blocks, each a lattice module `(ℤᵏ, σ)` taken
//! modulo a σ-stable sublattice, followed by a random unimodular change of
//! coordinates. Lattice blocks are permutation matrices, `±1` on ℤ, and
//! companion matrices of products of distinct cyclotomic factors of `xⁿ − 1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohomology::CyclicModule;
use crate::group::{group_order, Cardinality, PresentedGroup};
use crate::lattice::Lattice;
use crate::matrix::IntMatrix;

/// Coefficients (constant term first) of the `d`-th cyclotomic polynomial.
pub fn cyclotomic(d: u64) -> Vec<BigInt> {
    assert!(d >= 1);
    // xᵈ − 1 divided by Φ_e for every proper divisor e
    let mut num = vec![BigInt::zero(); d as usize + 1];
    num[0] = -BigInt::one();
    num[d as usize] = BigInt::one();
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        num = divide_monic(&num, &cyclotomic(e));
    }
    num
}

fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd].clone();
        for (j, b) in den.iter().enumerate() {
            rem[i + j] -= &c * b;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact division");
    quot
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Companion matrix of a monic polynomial, acting on column vectors:
/// `eᵢ ↦ eᵢ₊₁` and `e_{d−1} ↦ −Σ aᵢ eᵢ`.
pub fn companion_matrix(poly: &[BigInt]) -> IntMatrix {
    let d = poly.len() - 1;
    let mut c = IntMatrix::zeros(d, d);
    for i in 0..d.saturating_sub(1) {
        c[(i + 1, i)] = BigInt::one();
    }
    for (i, a) in poly[..d].iter().enumerate() {
        c[(i, d - 1)] = -a;
    }
    c
}

/// `Σ cᵢ σⁱ`.
fn eval_poly(coeffs: &[i64], sigma: &IntMatrix) -> IntMatrix {
    let k = sigma.rows();
    let mut out = IntMatrix::zeros(k, k);
    let mut power = IntMatrix::identity(k);
    for &c in coeffs {
        out = out.add(&power.scale(&BigInt::from(c)));
        power = power.mul_mat(sigma);
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn permutation_block(rng: &mut ChaCha8Rng, n: u64, max_points: usize) -> IntMatrix {
    let lengths: Vec<u64> = divisors(n)
        .into_iter()
        .filter(|&d| d as usize <= max_points)
        .collect();
    let mut cycles = Vec::new();
    let mut used = 0usize;
    loop {
        let fits: Vec<u64> = lengths
            .iter()
            .copied()
            .filter(|&d| used + d as usize <= max_points)
            .collect();
        if fits.is_empty() || (used > 0 && rng.gen_bool(0.4)) {
            break;
        }
        let d = *fits.choose(rng).expect("nonempty");
        cycles.push(d);
        used += d as usize;
    }
    let mut image: Vec<usize> = (0..used).collect();
    let mut start = 0;
    for d in cycles {
        let d = d as usize;
        for i in 0..d {
            image[start + i] = start + (i + 1) % d;
        }
        start += d;
    }
    let mut points: Vec<usize> = (0..used).collect();
    points.shuffle(rng);
    // relabel by a random bijection
    let mut sigma = IntMatrix::zeros(used, used);
    for p in 0..used {
        sigma[(points[image[p]], points[p])] = BigInt::one();
    }
    sigma
}

fn companion_block(rng: &mut ChaCha8Rng, n: u64, max_dim: usize) -> IntMatrix {
    let mut poly = vec![BigInt::one()];
    let mut ds = divisors(n);
    ds.shuffle(rng);
    for d in ds {
        let phi = cyclotomic(d);
        if poly.len() - 1 + phi.len() - 1 > max_dim {
            continue;
        }
        if poly.len() == 1 || rng.gen_bool(0.5) {
            poly = poly_mul(&poly, &phi);
        }
    }
    if poly.len() == 1 {
        poly = cyclotomic(1);
    }
    companion_matrix(&poly)
}

fn sign_block(rng: &mut ChaCha8Rng, n: u64) -> IntMatrix {
    let s = if n.is_multiple_of(2) && rng.gen_bool(0.5) {
        -1
    } else {
        1
    };
    IntMatrix::from_i64(&[&[s]])
}

fn lattice_block(rng: &mut ChaCha8Rng, n: u64, max_dim: usize) -> IntMatrix {
    match rng.gen_range(0..3) {
        0 => permutation_block(rng, n, max_dim.max(1)),
        1 => sign_block(rng, n),
        _ => companion_block(rng, n, max_dim.max(1)),
    }
}

fn random_poly(rng: &mut ChaCha8Rng, n: u64) -> Vec<i64> {
    let len = rng.gen_range(1..=(n as usize).max(1));
    (0..len).map(|_| rng.gen_range(-2..=2)).collect()
}

/// A σ-stable full-rank sublattice `m·ℤᵏ + f(σ)ℤᵏ`.
fn finite_relations(rng: &mut ChaCha8Rng, sigma: &IntMatrix, n: u64, m: u64) -> Lattice {
    let k = sigma.rows();
    let mut gens = IntMatrix::scalar(k, m);
    if rng.gen_bool(0.6) {
        let f = random_poly(rng, n);
        gens = gens.vstack(&eval_poly(&f, sigma).transpose());
    }
    Lattice::from_generators(&gens)
}

/// A σ-stable sublattice `f(σ)ℤᵏ`, possibly plus `m·g(σ)ℤᵏ`; usually of
/// lower rank.
fn mixed_relations(rng: &mut ChaCha8Rng, sigma: &IntMatrix, n: u64, m: u64) -> Lattice {
    // a cyclotomic factor evaluated at σ, often singular
    let d = *divisors(n).choose(rng).expect("n ≥ 1");
    let phi: Vec<i64> = cyclotomic(d)
        .iter()
        .map(|c| i64::try_from(c).expect("small cyclotomic coefficients"))
        .collect();
    let mut gens = eval_poly(&phi, sigma).transpose();
    if rng.gen_bool(0.5) {
        let g = random_poly(rng, n);
        let extra = eval_poly(&g, sigma).scale(&BigInt::from(m));
        gens = gens.vstack(&extra.transpose());
    }
    Lattice::from_generators(&gens)
}

/// Random unimodular `P` with its inverse.
fn random_unimodular(rng: &mut ChaCha8Rng, k: usize, steps: usize) -> (IntMatrix, IntMatrix) {
    let mut p = IntMatrix::identity(k);
    let mut p_inv = IntMatrix::identity(k);
    if k < 2 {
        return (p, p_inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..k);
        let mut j = rng.gen_range(0..k - 1);
        if j >= i {
            j += 1;
        }
        let c = rng.gen_range(-2i64..=2);
        if c == 0 {
            continue;
        }
        // E = I + c·e_i e_jᵀ, E⁻¹ = I − c·e_i e_jᵀ
        let mut e = IntMatrix::identity(k);
        e[(i, j)] = BigInt::from(c);
        let mut e_inv = IntMatrix::identity(k);
        e_inv[(i, j)] = BigInt::from(-c);
        p = e.mul_mat(&p);
        p_inv = p_inv.mul_mat(&e_inv);
    }
    (p, p_inv)
}

/// Rewrites `(R, σ)` in coordinates `x' = P·x`.
fn change_coordinates(
    rng: &mut ChaCha8Rng,
    relations: &Lattice,
    sigma: &IntMatrix,
) -> (Lattice, IntMatrix) {
    let k = sigma.rows();
    let (p, p_inv) = random_unimodular(rng, k, 2 * k);
    let sigma = p.mul_mat(sigma).mul_mat(&p_inv);
    (relations.image(&p), sigma)
}

/// The same module written in a random basis of `ℤᵏ`.
pub fn scramble(module: &CyclicModule, seed: u64) -> CyclicModule {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (relations, sigma) = change_coordinates(&mut rng, module.relations(), module.sigma());
    let base = PresentedGroup::new(module.rank_generators(), relations);
    CyclicModule::new(module.n(), base, sigma).expect("isomorphic module")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    Any,
    Finite,
}

fn build(
    rng: &mut ChaCha8Rng,
    n: u64,
    rank_bound: usize,
    torsion_bound: u64,
    shape: Shape,
) -> CyclicModule {
    let rank_bound = rank_bound.max(1);
    let torsion_bound = torsion_bound.max(2);
    let blocks = rng.gen_range(1..=3usize);
    let mut sigma = IntMatrix::zeros(0, 0);
    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    for _ in 0..blocks {
        let room = rank_bound.saturating_sub(sigma.rows());
        if room == 0 {
            break;
        }
        let block = lattice_block(rng, n, room);
        if block.rows() > room {
            continue;
        }
        let m = rng.gen_range(2..=torsion_bound);
        let kind = match shape {
            Shape::Finite => {
                if rng.gen_bool(0.25) {
                    3
                } else {
                    1
                }
            }
            Shape::Any => rng.gen_range(0..4),
        };
        let rel = match kind {
            0 => Lattice::zero(block.rows()),
            1 => finite_relations(rng, &block, n, m),
            2 => mixed_relations(rng, &block, n, m),
            // ℤ/m with σ = u, uⁿ ≡ 1 mod m
            _ => {
                let units: Vec<u64> = (1..m).filter(|&u| mod_pow(u, n, m) == 1 % m).collect();
                let u = *units.choose(rng).unwrap_or(&1);
                append_block(
                    &mut sigma,
                    &mut relations,
                    &IntMatrix::from_i64(&[&[u as i64]]),
                    &Lattice::scaled_full(1, m),
                );
                continue;
            }
        };
        append_block(&mut sigma, &mut relations, &block, &rel);
    }
    let k = sigma.rows();
    let relations = Lattice::from_rows(k, relations);
    let (relations, sigma) = if rng.gen_bool(0.7) {
        change_coordinates(rng, &relations, &sigma)
    } else {
        (relations, sigma)
    };
    CyclicModule::new(n, PresentedGroup::new(k, relations), sigma)
        .expect("generator only builds valid modules")
}

fn append_block(
    sigma: &mut IntMatrix,
    relations: &mut Vec<Vec<BigInt>>,
    block: &IntMatrix,
    rel: &Lattice,
) {
    let offset = sigma.rows();
    let k = block.rows();
    for row in relations.iter_mut() {
        row.extend(std::iter::repeat_n(BigInt::zero(), k));
    }
    for i in 0..rel.rank() {
        let mut row = vec![BigInt::zero(); offset];
        row.extend(rel.basis().row(i).iter().cloned());
        relations.push(row);
    }
    *sigma = sigma.direct_sum(block);
}

fn mod_pow(base: u64, exp: u64, m: u64) -> u64 {
    let mut result = 1 % m;
    let mut b = base % m;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    result
}

/// A random valid module. Deterministic in `seed`; mixes free, finite and
/// partially torsion blocks.
pub fn random_cyclic_module(
    seed: u64,
    n: u64,
    rank_bound: usize,
    torsion_bound: u64,
) -> CyclicModule {
    assert!(n >= 1, "group order must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    build(&mut rng, n, rank_bound, torsion_bound, Shape::Any)
}

/// A random finite module with at most `order_bound` elements.
pub fn random_finite_module(seed: u64, n: u64, order_bound: u64) -> CyclicModule {
    assert!(n >= 1, "group order must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let bound = BigInt::from(order_bound);
    for _ in 0..64 {
        let rank = rng.gen_range(1..=4usize);
        let torsion = rng.gen_range(2..=8u64);
        let m = build(&mut rng, n, rank, torsion, Shape::Finite);
        if let Cardinality::Finite(order) = group_order(m.base()) {
            if order <= bound {
                return m;
            }
        }
    }
    CyclicModule::zero(n)
}
