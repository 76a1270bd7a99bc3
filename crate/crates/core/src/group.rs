//! Finitely presented abelian groups `ℤᵏ / R`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::lattice::{preimage_lattice, Lattice};
use crate::matrix::{smith_normal_form, IntMatrix};

/// Size of a group or index of a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cardinality {
    Finite(BigInt),
    Infinite,
}

impl Cardinality {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            Cardinality::Finite(n) => Some(n),
            Cardinality::Infinite => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Cardinality::Finite(_))
    }

    /// Unwraps a cardinality that is finite by construction.
    pub fn expect_finite(self, what: &str) -> BigInt {
        match self {
            Cardinality::Finite(n) => n,
            Cardinality::Infinite => panic!("{what} should be finite"),
        }
    }
}

impl From<u64> for Cardinality {
    fn from(n: u64) -> Self {
        Cardinality::Finite(BigInt::from(n))
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(n) => write!(f, "{n}"),
            Cardinality::Infinite => write!(f, "infinite"),
        }
    }
}

/// `ℤ^r ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_t` with `dᵢ ≥ 2` and `dᵢ | dᵢ₊₁`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct InvariantFactors {
    pub free_rank: usize,
    pub torsion_divisors: Vec<BigInt>,
}

impl InvariantFactors {
    pub fn order(&self) -> Cardinality {
        if self.free_rank > 0 {
            Cardinality::Infinite
        } else {
            Cardinality::Finite(self.torsion_order())
        }
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion_divisors
            .iter()
            .fold(BigInt::one(), |acc, d| acc * d)
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion_divisors.is_empty()
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self
            .torsion_divisors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// The abelian group `ℤᵏ / relations`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PresentedGroup {
    generators: usize,
    relations: Lattice,
}

impl PresentedGroup {
    pub fn new(generators: usize, relations: Lattice) -> Self {
        assert_eq!(
            relations.ambient_dim(),
            generators,
            "relations live in the wrong dimension"
        );
        PresentedGroup {
            generators,
            relations,
        }
    }

    /// `ℤᵏ` with no relations.
    pub fn free(k: usize) -> Self {
        Self::new(k, Lattice::zero(k))
    }

    /// `ℤ/d₁ ⊕ … ⊕ ℤ/d_k`; a zero entry gives a copy of ℤ.
    pub fn cyclic_sum(orders: &[BigInt]) -> Self {
        let k = orders.len();
        Self::new(k, Lattice::from_generators(&IntMatrix::diagonal(orders)))
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn num_generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &Lattice {
        &self.relations
    }

    pub fn direct_sum(&self, other: &PresentedGroup) -> PresentedGroup {
        let a = self.relations.basis();
        let b = other.relations.basis();
        let rels = a.direct_sum(b);
        PresentedGroup::new(
            self.generators + other.generators,
            Lattice::from_generators(&rels),
        )
    }
}

pub fn invariant_factors(group: &PresentedGroup) -> InvariantFactors {
    let snf = smith_normal_form(group.relations.basis());
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    InvariantFactors {
        free_rank: group.generators - rank,
        torsion_divisors: diag.into_iter().filter(|d| d > &BigInt::one()).collect(),
    }
}

pub fn group_order(group: &PresentedGroup) -> Cardinality {
    if group.relations.rank() < group.generators {
        return Cardinality::Infinite;
    }
    invariant_factors(group).order()
}

/// `A[m] = {a : m·a = 0}`, presented on generators of its lift to ℤᵏ.
pub fn m_torsion(group: &PresentedGroup, m: &BigInt) -> PresentedGroup {
    assert!(m >= &BigInt::one(), "m must be positive");
    let k = group.generators;
    let lift = preimage_lattice(&IntMatrix::scalar(k, m.clone()), &group.relations);
    lift.quotient(&group.relations)
        .expect("relations lie inside their own m-torsion lift")
}

/// `∏ gcd(dᵢ, m)`: the order `A[m]` must have.
pub fn m_torsion_order_formula(factors: &InvariantFactors, m: &BigInt) -> BigInt {
    factors
        .torsion_divisors
        .iter()
        .fold(BigInt::one(), |acc, d| acc * d.gcd(m))
}
