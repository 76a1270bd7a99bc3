//! Finite sets with an action of a cyclic group, and the permutation
//! modules built on them.
//!
//! For cyclic `G` of order `n` the stabilizer of a point is the unique
//! subgroup of order `n / orbit size`, so only its order is recorded.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::cohomology::{herbrand_quotient, CyclicModule};
use crate::error::{Error, Result};
use crate::lattice::lattice_index;
use crate::matrix::IntMatrix;
use crate::random::scramble;

/// A finite set `{0, …, r−1}` on which the generator of `G` acts by `image`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GSet {
    n: u64,
    image: Vec<usize>,
}

impl GSet {
    pub fn new(n: u64, image: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation(
                "group order must be positive".into(),
            ));
        }
        let r = image.len();
        let mut seen = vec![false; r];
        for (i, &j) in image.iter().enumerate() {
            if j >= r {
                return Err(Error::InvalidPermutation(format!(
                    "point {i} maps to {j}, outside 0..{r}"
                )));
            }
            if std::mem::replace(&mut seen[j], true) {
                return Err(Error::InvalidPermutation(format!("{j} is hit twice")));
            }
        }
        let set = GSet { n, image };
        if set
            .cycle_lengths()
            .iter()
            .any(|&len| !n.is_multiple_of(len as u64))
        {
            return Err(Error::OrderMismatch { n });
        }
        Ok(set)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn points(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        cycles(&self.image).iter().map(Vec::len).collect()
    }

    /// `image` applied `k` times.
    fn power(&self, k: u64) -> Vec<usize> {
        (0..self.points())
            .map(|mut p| {
                for _ in 0..k {
                    p = self.image[p];
                }
                p
            })
            .collect()
    }
}

fn cycles(image: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; image.len()];
    let mut out = Vec::new();
    for start in 0..image.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            orbit.push(p);
            p = image[p];
        }
        out.push(orbit);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    /// Each orbit listed from its representative along the action.
    pub orbits: Vec<Vec<usize>>,
    /// Smallest point of each orbit.
    pub representatives: Vec<usize>,
    pub stabilizer_orders: Vec<u64>,
}

pub fn orbit_decomposition(set: &GSet) -> OrbitDecomposition {
    // scanning points in order makes the first point of each orbit its minimum
    let orbits = cycles(&set.image);
    let representatives = orbits.iter().map(|o| o[0]).collect();
    let stabilizer_orders = orbits.iter().map(|o| set.n / o.len() as u64).collect();
    OrbitDecomposition {
        orbits,
        representatives,
        stabilizer_orders,
    }
}

/// `(1/n)·Σ_{k<n} #Fix(πᵏ)`.
pub fn burnside_orbit_count(set: &GSet) -> usize {
    let total: usize = (0..set.n)
        .map(|k| {
            let pk = set.power(k);
            pk.iter().enumerate().filter(|&(i, &j)| i == j).count()
        })
        .sum();
    debug_assert_eq!(total as u64 % set.n, 0);
    total / set.n as usize
}

/// `ℤ^r` with `σ` permuting the basis: `σ(e_x) = e_{π(x)}`.
pub fn permutation_module(set: &GSet) -> CyclicModule {
    let r = set.points();
    let mut sigma = IntMatrix::zeros(r, r);
    for (x, &y) in set.image.iter().enumerate() {
        sigma[(y, x)] = BigInt::one();
    }
    CyclicModule::lattice_module(set.n, sigma).expect("permutation of order dividing n")
}

/// `∏_{x ∈ X/G} #G_x`.
pub fn orbit_herbrand_formula(set: &GSet) -> BigInt {
    orbit_decomposition(set)
        .stabilizer_orders
        .iter()
        .fold(BigInt::one(), |acc, &s| acc * s)
}

/// `(A^G : N_G A) / ∏ #G_x` for the permutation module `A` on `set`.
pub fn orbit_h1_formula(set: &GSet) -> BigInt {
    let module = permutation_module(set);
    let index = lattice_index(&module.fixed_lift(), &module.norm_image_lift())
        .expect("norms are fixed")
        .expect_finite("(A^G : N_G A)");
    let product = orbit_herbrand_formula(set);
    let (q, r) = index.div_rem(&product);
    assert!(
        r == BigInt::from(0),
        "(A^G : N_G A) = {index} not divisible by {product}"
    );
    q
}

/// `permutation_module(set) ⊕ extra` for finite `extra`, written in a basis
/// mixed by `seed`. The permutation module has finite index in the result.
pub fn finite_index_perturbation(
    set: &GSet,
    extra: &CyclicModule,
    seed: u64,
) -> Result<CyclicModule> {
    if extra.n() != set.n {
        return Err(Error::GroupOrderMismatch {
            left: set.n,
            right: extra.n(),
        });
    }
    if !extra.is_finite() {
        return Err(Error::DimensionMismatch(
            "perturbation summand must be finite".into(),
        ));
    }
    Ok(scramble(&permutation_module(set).direct_sum(extra)?, seed))
}

/// Herbrand quotient of the permutation module, computed directly.
pub fn direct_herbrand(set: &GSet) -> num_rational::BigRational {
    herbrand_quotient(&permutation_module(set)).quotient
}
