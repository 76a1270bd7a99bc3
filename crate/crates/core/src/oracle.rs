//! Brute-force cohomology of finite modules by listing every element.
//!
//! This path shares nothing with the lattice-index computation except the
//! canonical residue map `ℤᵏ → ℤᵏ / R`; subgroup orders are counted
//! directly.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::cohomology::CyclicModule;
use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// Default cap on the number of elements enumerated.
pub const DEFAULT_ORACLE_BOUND: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForceOrders {
    pub h0_order: u64,
    pub h1_order: u64,
}

/// A finite module with elements numbered `0..size` in mixed radix over the
/// Hermite pivots of the relation lattice.
struct Enumerated<'a> {
    relations: &'a Lattice,
    radices: Vec<u64>,
    size: u64,
}

impl<'a> Enumerated<'a> {
    fn new(relations: &'a Lattice, bound: u64) -> Result<Self> {
        if !relations.is_full_rank() {
            return Err(Error::ModuleInfinite);
        }
        let k = relations.ambient_dim();
        // full rank Hermite basis is upper triangular with pivot i in column i
        let pivots: Vec<BigInt> = (0..k).map(|i| relations.basis()[(i, i)].clone()).collect();
        let order: BigInt = pivots.iter().product();
        let size = match order.to_u64() {
            Some(s) if s <= bound => s,
            _ => return Err(Error::BoundExceeded { order, bound }),
        };
        let radices = pivots
            .iter()
            .map(|p| p.to_u64().expect("pivot ≤ order"))
            .collect();
        Ok(Enumerated {
            relations,
            radices,
            size,
        })
    }

    fn element(&self, mut index: u64) -> Vec<BigInt> {
        self.radices
            .iter()
            .map(|&r| {
                let digit = index % r;
                index /= r;
                BigInt::from(digit)
            })
            .collect()
    }

    fn index_of(&self, v: &[BigInt]) -> u64 {
        let canonical = self.relations.reduce(v);
        let mut index = 0u64;
        for (x, &r) in canonical.iter().zip(&self.radices).rev() {
            index = index * r + x.to_u64().expect("canonical residue");
        }
        index
    }
}

/// Orders of `Ĥ⁰` and `H¹` by direct enumeration.
pub fn brute_force_cohomology(module: &CyclicModule, bound: u64) -> Result<BruteForceOrders> {
    let elems = Enumerated::new(module.relations(), bound)?;
    let sigma = module.sigma();
    let k = module.rank_generators();

    let mut fixed = 0u64;
    let mut norm_image = HashSet::new();
    let mut norm_kernel = 0u64;
    let mut augmentation_image = HashSet::new();

    for i in 0..elems.size {
        let x = elems.element(i);
        let sx = sigma.apply(&x);
        if elems.index_of(&sx) == i {
            fixed += 1;
        }
        let mut orbit_sum = vec![BigInt::zero(); k];
        let mut y = x.clone();
        for _ in 0..module.n() {
            for (acc, t) in orbit_sum.iter_mut().zip(&y) {
                *acc += t;
            }
            y = elems.relations.reduce(&sigma.apply(&y));
        }
        let norm = elems.index_of(&orbit_sum);
        if norm == 0 {
            norm_kernel += 1;
        }
        norm_image.insert(norm);
        let diff: Vec<BigInt> = x.iter().zip(&sx).map(|(a, b)| a - b).collect();
        augmentation_image.insert(elems.index_of(&diff));
    }

    let norm_image = norm_image.len() as u64;
    let augmentation_image = augmentation_image.len() as u64;
    debug_assert_eq!(fixed % norm_image, 0);
    debug_assert_eq!(norm_kernel % augmentation_image, 0);
    Ok(BruteForceOrders {
        h0_order: fixed / norm_image,
        h1_order: norm_kernel / augmentation_image,
    })
}
