//! Tate cohomology of finitely generated modules over a cyclic group
//! `G = ⟨σ⟩` of order `n`.
//!
//! A module is `A = ℤᵏ / R` with `σ` given by a `k×k` integer matrix acting
//! on column vectors. The four subgroups that matter (`A^G`, `N_G A`,
//! `ker N_G`, `(1 − σ)A`) all lift to lattices between `R` and `ℤᵏ`:
//!
//! | subgroup     | lift                     |
//! |--------------|--------------------------|
//! | `A^G`        | `{x : (σ − 1)x ∈ R}`     |
//! | `N_G A`      | `N·ℤᵏ + R`               |
//! | `ker N_G`    | `{x : N·x ∈ R}`          |
//! | `(1 − σ)A`   | `(1 − σ)ℤᵏ + R`          |
//!
//! so `Ĥ⁰` and `H¹` are quotients of lattices and their orders are lattice
//! indices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{
    group_order, invariant_factors, m_torsion, Cardinality, InvariantFactors, PresentedGroup,
};
use crate::lattice::{lattice_index, preimage_lattice, Lattice};
use crate::matrix::IntMatrix;

/// A finitely generated `ℤ[G]`-module for `G` cyclic of order `n`.
///
/// Values of this type always satisfy the module axioms: `σ` maps the
/// relation lattice into itself and `σⁿ ≡ 1` modulo relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicModule {
    n: u64,
    base: PresentedGroup,
    sigma: IntMatrix,
}

impl CyclicModule {
    pub fn new(n: u64, base: PresentedGroup, sigma: IntMatrix) -> Result<Self> {
        validate_module(n, &base, &sigma)?;
        Ok(CyclicModule { n, base, sigma })
    }

    /// `ℤᵏ` with `σ` acting by `sigma`.
    pub fn lattice_module(n: u64, sigma: IntMatrix) -> Result<Self> {
        let k = sigma.rows();
        Self::new(n, PresentedGroup::free(k), sigma)
    }

    /// `ℤ` with trivial action.
    pub fn trivial_integers(n: u64) -> Self {
        Self::lattice_module(n, IntMatrix::identity(1)).expect("trivial action is valid")
    }

    /// The zero module.
    pub fn zero(n: u64) -> Self {
        Self::lattice_module(n, IntMatrix::zeros(0, 0)).expect("zero module is valid")
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn base(&self) -> &PresentedGroup {
        &self.base
    }

    pub fn sigma(&self) -> &IntMatrix {
        &self.sigma
    }

    pub fn rank_generators(&self) -> usize {
        self.base.num_generators()
    }

    pub fn relations(&self) -> &Lattice {
        self.base.relations()
    }

    pub fn is_finite(&self) -> bool {
        self.relations().is_full_rank()
    }

    pub fn direct_sum(&self, other: &CyclicModule) -> Result<CyclicModule> {
        if self.n != other.n {
            return Err(Error::GroupOrderMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(CyclicModule {
            n: self.n,
            base: self.base.direct_sum(&other.base),
            sigma: self.sigma.direct_sum(&other.sigma),
        })
    }

    fn k(&self) -> usize {
        self.base.num_generators()
    }

    fn everything(&self) -> Lattice {
        Lattice::full(self.k())
    }

    fn sigma_minus_one(&self) -> IntMatrix {
        self.sigma.sub(&IntMatrix::identity(self.k()))
    }

    fn one_minus_sigma(&self) -> IntMatrix {
        IntMatrix::identity(self.k()).sub(&self.sigma)
    }

    /// Lift of `A^G`.
    pub fn fixed_lift(&self) -> Lattice {
        preimage_lattice(&self.sigma_minus_one(), self.relations())
    }

    /// Lift of `A⁻ = {a : σa = −a}`.
    pub fn anti_fixed_lift(&self) -> Lattice {
        let plus = self.sigma.add(&IntMatrix::identity(self.k()));
        preimage_lattice(&plus, self.relations())
    }

    /// Lift of `N_G A`.
    pub fn norm_image_lift(&self) -> Lattice {
        self.everything()
            .image(&norm_matrix(self))
            .sum(self.relations())
    }

    /// Lift of `ker N_G`.
    pub fn norm_kernel_lift(&self) -> Lattice {
        preimage_lattice(&norm_matrix(self), self.relations())
    }

    /// Lift of `(1 − σ)A`.
    pub fn augmentation_image_lift(&self) -> Lattice {
        self.everything()
            .image(&self.one_minus_sigma())
            .sum(self.relations())
    }
}

/// Checks that `sigma` defines a `ℤ[G]`-module structure on `base`.
pub fn validate_module(n: u64, base: &PresentedGroup, sigma: &IntMatrix) -> Result<()> {
    let k = base.num_generators();
    if n == 0 {
        return Err(Error::DimensionMismatch(
            "group order n must be at least 1".into(),
        ));
    }
    if sigma.rows() != k || sigma.cols() != k {
        return Err(Error::DimensionMismatch(format!(
            "sigma is {}x{} but the module has {k} generators",
            sigma.rows(),
            sigma.cols()
        )));
    }
    let rel = base.relations();
    for i in 0..rel.rank() {
        let image = sigma.apply(rel.basis().row(i));
        if !rel.contains(&image) {
            return Err(Error::RelationsNotPreserved {
                relation: i,
                witness: image,
            });
        }
    }
    let power = sigma.pow(n);
    for j in 0..k {
        let mut col = power.column(j);
        col[j] -= BigInt::one();
        if !rel.contains(&col) {
            return Err(Error::OrderViolation {
                generator: j,
                witness: col,
            });
        }
    }
    Ok(())
}

/// `1 + σ + … + σⁿ⁻¹`.
pub fn norm_matrix(module: &CyclicModule) -> IntMatrix {
    let k = module.k();
    let mut total = IntMatrix::zeros(k, k);
    let mut power = IntMatrix::identity(k);
    for _ in 0..module.n {
        total = total.add(&power);
        power = power.mul_mat(&module.sigma);
    }
    total
}

/// `A^G`, presented on a basis of its lift.
pub fn fixed_submodule(module: &CyclicModule) -> PresentedGroup {
    module
        .fixed_lift()
        .quotient(module.relations())
        .expect("relations are fixed modulo themselves")
}

/// `Ĥ⁰(G, A) = A^G / N_G A`.
pub fn tate_h0(module: &CyclicModule) -> InvariantFactors {
    let group = module
        .fixed_lift()
        .quotient(&module.norm_image_lift())
        .expect("norms are fixed");
    invariant_factors(&group)
}

/// `H¹(G, A) = ker N_G / (1 − σ)A`.
pub fn h1(module: &CyclicModule) -> InvariantFactors {
    let group = module
        .norm_kernel_lift()
        .quotient(&module.augmentation_image_lift())
        .expect("N(1 − σ) = 0");
    invariant_factors(&group)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TateGroups {
    pub h0: InvariantFactors,
    pub h1: InvariantFactors,
    pub h0_order: BigInt,
    pub h1_order: BigInt,
}

pub fn tate_groups(module: &CyclicModule) -> TateGroups {
    let h0 = tate_h0(module);
    let h1 = h1(module);
    // both are finitely generated and killed by n
    debug_assert_eq!(h0.free_rank, 0);
    debug_assert_eq!(h1.free_rank, 0);
    TateGroups {
        h0_order: h0.torsion_order(),
        h1_order: h1.torsion_order(),
        h0,
        h1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HerbrandReport {
    /// `#Ĥ⁰ / #H¹`, reduced.
    pub quotient: BigRational,
    pub tate: TateGroups,
}

pub fn herbrand_quotient(module: &CyclicModule) -> HerbrandReport {
    let tate = tate_groups(module);
    HerbrandReport {
        quotient: BigRational::new(tate.h0_order.clone(), tate.h1_order.clone()),
        tate,
    }
}

/// Structural invariants of a module over a group of order 2, and the
/// closed forms they predict for `#H¹` and the Herbrand quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order2Profile {
    pub r_plus: usize,
    pub r_minus: usize,
    pub r: usize,
    /// `#A⁺[2]`
    pub two_torsion_plus: BigInt,
    /// `(A : A⁺ + A⁻)`
    pub index_sum: BigInt,
    /// `(NA : 2A⁺)`
    pub index_norm_two: BigInt,
    /// `(N⁻A : 2A⁻)`
    pub index_anti_two: BigInt,
    /// `(A⁺ : NA)`
    pub index_norm: BigInt,
    /// The four closed forms for `#H¹`, in order:
    /// `2^{r₋}·#A⁺[2] / (A : A⁺ + A⁻)`, `2^{r₋}·#A⁺[2] / (NA : 2A⁺)`,
    /// `2^{r₋ − r₊}·(A⁺ : NA)`, `2^{r − 2r₊}·(A⁺ : NA)`.
    pub h1_expressions: [BigRational; 4],
    pub predicted_h1: BigInt,
    /// `2^{2r₊ − r}`
    pub predicted_h: BigRational,
}

fn pow2(e: i64) -> BigRational {
    let base = BigRational::from_integer(BigInt::from(2));
    if e >= 0 {
        num_traits::pow(base, e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    }
}

fn finite_index(outer: &Lattice, inner: &Lattice, what: &str) -> BigInt {
    lattice_index(outer, inner)
        .unwrap_or_else(|e| panic!("{what}: {e}"))
        .expect_finite(what)
}

pub fn order2_profile(module: &CyclicModule) -> Result<Order2Profile> {
    if module.n != 2 {
        return Err(Error::WrongGroupOrder {
            expected: 2,
            found: module.n,
        });
    }
    let rel = module.relations();
    let plus = module.fixed_lift();
    let minus = module.anti_fixed_lift();
    let norm = module.norm_image_lift();
    let anti_norm = module.augmentation_image_lift();

    let a_plus = plus.quotient(rel)?;
    let r_plus = invariant_factors(&a_plus).free_rank;
    let r_minus = invariant_factors(&minus.quotient(rel)?).free_rank;
    let r = invariant_factors(&module.base).free_rank;

    let two = BigInt::from(2);
    let two_torsion_plus = match group_order(&m_torsion(&a_plus, &two)) {
        Cardinality::Finite(t) => t,
        Cardinality::Infinite => unreachable!("2-torsion is finite"),
    };
    let index_sum = finite_index(
        &Lattice::full(module.k()),
        &plus.sum(&minus),
        "(A : A+ + A-)",
    );
    let two_plus = plus.scale(2).sum(rel);
    let two_minus = minus.scale(2).sum(rel);
    let index_norm_two = finite_index(&norm, &two_plus, "(NA : 2A+)");
    let index_anti_two = finite_index(&anti_norm, &two_minus, "(N-A : 2A-)");
    let index_norm = finite_index(&plus, &norm, "(A+ : NA)");

    let r_plus_i = r_plus as i64;
    let r_minus_i = r_minus as i64;
    let r_i = r as i64;
    let torsion = BigRational::from_integer(two_torsion_plus.clone());
    let h1_expressions = [
        pow2(r_minus_i) * &torsion / BigRational::from_integer(index_sum.clone()),
        pow2(r_minus_i) * &torsion / BigRational::from_integer(index_norm_two.clone()),
        pow2(r_minus_i - r_plus_i) * BigRational::from_integer(index_norm.clone()),
        pow2(r_i - 2 * r_plus_i) * BigRational::from_integer(index_norm.clone()),
    ];
    let third = &h1_expressions[2];
    assert!(
        third.is_integer(),
        "2^(r- - r+)(A+ : NA) = {third} is not an integer"
    );
    let predicted_h1 = third.to_integer();
    Ok(Order2Profile {
        r_plus,
        r_minus,
        r,
        two_torsion_plus,
        index_sum,
        index_norm_two,
        index_anti_two,
        index_norm,
        h1_expressions,
        predicted_h1,
        predicted_h: pow2(2 * r_plus_i - r_i),
    })
}

/// The general-`n` index formula for `#H¹`:
/// `(_N A : (1 − σ)(_N A)) / (NA : n·A^G)`, with `_N A = ker N_G`, together
/// with the two other expressions for the denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemarkReport {
    /// `(_N A : (1 − σ)(_N A))`
    pub numerator: BigInt,
    /// `(NA : n·A^G)`
    pub denominator: BigInt,
    /// `(A : A^G + _N A)`
    pub index_fixed_plus_kernel: BigInt,
    /// `((1 − σ)A : (1 − σ)(_N A))`
    pub index_augmentation: BigInt,
    /// `numerator / denominator`
    pub h1_order: BigRational,
}

impl RemarkReport {
    pub fn chain_holds(&self) -> bool {
        self.denominator == self.index_fixed_plus_kernel
            && self.denominator == self.index_augmentation
    }
}

pub fn remark_formula_h1(module: &CyclicModule) -> RemarkReport {
    let rel = module.relations();
    let fixed = module.fixed_lift();
    let kernel = module.norm_kernel_lift();
    let one_minus = module.one_minus_sigma();
    let aug_kernel = kernel.image(&one_minus).sum(rel);
    let norm = module.norm_image_lift();
    let n_fixed = fixed.scale(module.n).sum(rel);

    let numerator = finite_index(&kernel, &aug_kernel, "(_NA : (1-s)_NA)");
    let denominator = finite_index(&norm, &n_fixed, "(NA : n A^G)");
    let index_fixed_plus_kernel = finite_index(
        &Lattice::full(module.k()),
        &fixed.sum(&kernel),
        "(A : A^G + _NA)",
    );
    let index_augmentation = finite_index(
        &module.augmentation_image_lift(),
        &aug_kernel,
        "((1-s)A : (1-s)_NA)",
    );
    RemarkReport {
        h1_order: BigRational::new(numerator.clone(), denominator.clone()),
        numerator,
        denominator,
        index_fixed_plus_kernel,
        index_augmentation,
    }
}

/// `true` when every invariant factor of both Tate groups divides `n`.
pub fn killed_by_n(tate: &TateGroups, n: u64) -> bool {
    let n = BigInt::from(n);
    tate.h0
        .torsion_divisors
        .iter()
        .chain(&tate.h1.torsion_divisors)
        .all(|d| (&n % d).is_zero())
}
