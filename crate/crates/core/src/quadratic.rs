//! Real quadratic fields `ℚ(√D)`: integral bases, continued fractions,
//! units, Pell equations, prime splitting and S-unit Herbrand quotients.
//!
//! Elements of `𝒪_K` are written `a + bω` with `ω = √D` when `D ≡ 2, 3 mod 4`
//! and `ω = (−1 + √D)/2` when `D ≡ 1 mod 4`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cohomology::CyclicModule;
use crate::error::{Error, Result};
use crate::group::PresentedGroup;
use crate::matrix::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Omega {
    /// `ω = √D`
    Whole,
    /// `ω = (−1 + √D)/2`
    Half,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticField {
    d: BigInt,
    disc: BigInt,
    omega: Omega,
}

impl QuadraticField {
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    pub fn omega(&self) -> Omega {
        self.omega
    }

    pub fn trace_omega(&self) -> BigInt {
        match self.omega {
            Omega::Whole => BigInt::zero(),
            Omega::Half => -BigInt::one(),
        }
    }

    pub fn norm_omega(&self) -> BigInt {
        match self.omega {
            Omega::Whole => -&self.d,
            Omega::Half => (BigInt::one() - &self.d) / 4,
        }
    }
}

pub fn field_data(d: &BigInt) -> Result<QuadraticField> {
    if d <= &BigInt::one() {
        return Err(Error::DTooSmall(d.clone()));
    }
    if !is_squarefree(d) {
        return Err(Error::NotSquarefree(d.clone()));
    }
    let (disc, omega) = if d.mod_floor(&BigInt::from(4)).is_one() {
        (d.clone(), Omega::Half)
    } else {
        (d * 4, Omega::Whole)
    };
    Ok(QuadraticField {
        d: d.clone(),
        disc,
        omega,
    })
}

fn is_squarefree(d: &BigInt) -> bool {
    let mut rest = d.abs();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        if rest.is_multiple_of(&p) {
            rest /= &p;
            if rest.is_multiple_of(&p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Trial division.
pub fn is_prime(p: &BigInt) -> bool {
    if p < &BigInt::from(2) {
        return false;
    }
    let mut q = BigInt::from(2);
    while &q * &q <= *p {
        if p.is_multiple_of(&q) {
            return false;
        }
        q += 1;
    }
    true
}

/// `a + bω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticInteger {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadraticInteger {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadraticInteger {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn norm(&self, field: &QuadraticField) -> BigInt {
        &self.a * &self.a
            + &self.a * &self.b * field.trace_omega()
            + &self.b * &self.b * field.norm_omega()
    }

    pub fn trace(&self, field: &QuadraticField) -> BigInt {
        &self.a * 2 + &self.b * field.trace_omega()
    }

    /// Real value under the embedding `√D > 0`.
    pub fn to_f64(&self, field: &QuadraticField) -> f64 {
        let sqrt_d = field.d.to_f64().unwrap_or(f64::INFINITY).sqrt();
        let omega = match field.omega {
            Omega::Whole => sqrt_d,
            Omega::Half => (sqrt_d - 1.0) / 2.0,
        };
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * omega
    }

    /// Rendered over `√D`, e.g. `1+√2` or `(1+√5)/2`.
    pub fn display(&self, field: &QuadraticField) -> String {
        let (x, y, den) = match field.omega {
            Omega::Whole => (self.a.clone(), self.b.clone(), 1),
            Omega::Half => (&self.a * 2 - &self.b, self.b.clone(), 2),
        };
        let (x, y, den) = if den == 2 && x.is_even() && y.is_even() {
            (x / 2, y / 2, 1)
        } else {
            (x, y, den)
        };
        let sign = if y.is_negative() { "-" } else { "+" };
        let y_abs = y.abs();
        let surd = if y_abs.is_one() {
            format!("√{}", field.d)
        } else {
            format!("{y_abs}√{}", field.d)
        };
        let body = if y.is_zero() {
            x.to_string()
        } else if x.is_zero() {
            format!("{}{surd}", if y.is_negative() { "-" } else { "" })
        } else {
            format!("{x}{sign}{surd}")
        };
        if den == 1 {
            body
        } else {
            format!("({body})/{den}")
        }
    }
}

/// Continued fraction `[a0; a1, …]` of a quadratic irrational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFExpansion {
    pub a0: BigInt,
    /// Terms after `a0` before the period starts.
    pub preperiod: Vec<BigInt>,
    pub periodic_part: Vec<BigInt>,
    pub period_length: usize,
}

impl CFExpansion {
    /// Terms `a0, a1, …` forever.
    pub fn terms(&self) -> impl Iterator<Item = &BigInt> + '_ {
        std::iter::once(&self.a0)
            .chain(self.preperiod.iter())
            .chain(self.periodic_part.iter().cycle())
    }

    /// Convergents `(p_k, q_k)` for `k = 0, 1, …`.
    pub fn convergents(&self) -> impl Iterator<Item = (BigInt, BigInt)> + '_ {
        let mut prev = (BigInt::zero(), BigInt::one());
        let mut cur = (BigInt::one(), BigInt::zero());
        self.terms().map(move |a| {
            let next = (a * &cur.0 + &prev.0, a * &cur.1 + &prev.1);
            prev = std::mem::replace(&mut cur, next.clone());
            next
        })
    }
}

/// Expansion of `(p0 + √D)/q0`, which needs `q0 > 0` and `q0 | D − p0²`.
fn expand_irrational(d: &BigInt, p0: BigInt, q0: BigInt) -> CFExpansion {
    let s = d.sqrt();
    let mut p = p0;
    let mut q = q0;
    let mut terms = Vec::new();
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    loop {
        debug_assert!(q.is_positive());
        debug_assert!((d - &p * &p).is_multiple_of(&q));
        if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
            let mut terms = terms.into_iter();
            let a0 = terms.next().expect("at least one term");
            let rest: Vec<BigInt> = terms.collect();
            let periodic_part = rest[start - 1..].to_vec();
            return CFExpansion {
                a0,
                preperiod: rest[..start - 1].to_vec(),
                period_length: periodic_part.len(),
                periodic_part,
            };
        }
        if !terms.is_empty() {
            seen.insert((p.clone(), q.clone()), terms.len());
        }
        let a = (&p + &s).div_floor(&q);
        p = &a * &q - &p;
        q = (d - &p * &p) / &q;
        terms.push(a);
    }
}

/// Continued fraction of `√D`.
pub fn cf_expand(d: &BigInt) -> CFExpansion {
    expand_irrational(d, BigInt::zero(), BigInt::one())
}

/// The irrational whose convergents `(p, q)` give units `p + qω`.
fn unit_expansion(field: &QuadraticField) -> CFExpansion {
    match field.omega {
        Omega::Whole => cf_expand(&field.d),
        Omega::Half => expand_irrational(&field.d, BigInt::one(), BigInt::from(2)),
    }
}

fn search_length(cf: &CFExpansion) -> usize {
    1 + cf.preperiod.len() + 2 * cf.period_length + 2
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalUnitData {
    pub epsilon: QuadraticInteger,
    pub unit_norm: i8,
}

/// Smallest unit `ε > 1`: the first convergent `p/q` of `√D`, or of
/// `(1+√D)/2`, with `N(p + qω) = ±1`.
pub fn fundamental_unit(field: &QuadraticField) -> FundamentalUnitData {
    let cf = unit_expansion(field);
    for (p, q) in cf.convergents().take(search_length(&cf)) {
        let u = QuadraticInteger::new(p, q);
        let n = u.norm(field);
        if n.abs().is_one() {
            let unit_norm = if n.is_positive() { 1 } else { -1 };
            return FundamentalUnitData {
                epsilon: u,
                unit_norm,
            };
        }
    }
    unreachable!("a unit appears within two periods")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PellVariant {
    /// `x² − Dy² = −1`
    MinusOne,
    /// `x² − Dy² = 1`
    PlusOne,
    /// `(2x − y)² − Dy² = −4`, only for `D ≡ 1 mod 4`
    MinusFour,
}

impl PellVariant {
    pub fn name(self) -> &'static str {
        match self {
            PellVariant::MinusOne => "MINUS_ONE",
            PellVariant::PlusOne => "PLUS_ONE",
            PellVariant::MinusFour => "MINUS_FOUR",
        }
    }

    /// Left side minus right side of the equation.
    pub fn residual(self, d: &BigInt, x: &BigInt, y: &BigInt) -> BigInt {
        match self {
            PellVariant::MinusOne => x * x - d * y * y + 1,
            PellVariant::PlusOne => x * x - d * y * y - 1,
            PellVariant::MinusFour => {
                let u = x * 2 - y;
                &u * &u - d * y * y + 4
            }
        }
    }
}

impl fmt::Display for PellVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Solution with `x, y > 0` and `y` least, then `x` least; `None` when the
/// equation has no integral solution.
pub fn pell_solve(d: &BigInt, variant: PellVariant) -> Result<Option<(BigInt, BigInt)>> {
    let field = field_data(d)?;
    let found = match variant {
        PellVariant::MinusOne | PellVariant::PlusOne => {
            let cf = cf_expand(d);
            let limit = search_length(&cf) + cf.period_length;
            let hit = cf
                .convergents()
                .take(limit)
                .find(|(p, q)| variant.residual(d, p, q).is_zero());
            hit
        }
        PellVariant::MinusFour => {
            if field.omega != Omega::Half {
                return Err(Error::VariantUnavailable {
                    variant: variant.name(),
                    d: d.clone(),
                });
            }
            let cf = unit_expansion(&field);
            let hit = cf
                .convergents()
                .take(search_length(&cf))
                .find(|(p, q)| variant.residual(d, p, q).is_zero());
            hit.map(|(p, q)| {
                // x ↦ y − x swaps a unit with minus its conjugate
                let other = &q - &p;
                if other.is_positive() && other < p {
                    (other, q)
                } else {
                    (p, q)
                }
            })
        }
    };
    if let Some((x, y)) = &found {
        assert!(
            variant.residual(d, x, y).is_zero(),
            "({x}, {y}) does not solve {variant}"
        );
    }
    Ok(found)
}

/// `#H¹(G, U_K)`.
pub fn unit_group_h1(field: &QuadraticField) -> BigInt {
    match fundamental_unit(field).unit_norm {
        -1 => BigInt::from(2),
        _ => BigInt::from(4),
    }
}

/// `(W_ℚ : N U_K)` with `W_ℚ = {±1}`; `N(−1) = 1`, so only `N(ε)` matters.
pub fn unit_norm_index(field: &QuadraticField) -> BigInt {
    if fundamental_unit(field).unit_norm == -1 {
        BigInt::one()
    } else {
        BigInt::from(2)
    }
}

/// `U_K = ⟨−1⟩ × ⟨ε⟩` written additively as `ℤ²/⟨(2,0)⟩`, with
/// `σ(ε) = N(ε)·ε⁻¹`.
pub fn unit_module(field: &QuadraticField) -> CyclicModule {
    let sigma = if fundamental_unit(field).unit_norm == -1 {
        IntMatrix::from_i64(&[&[1, 1], &[0, -1]])
    } else {
        IntMatrix::from_i64(&[&[1, 0], &[0, -1]])
    };
    let base = PresentedGroup::cyclic_sum(&[BigInt::from(2), BigInt::zero()]);
    CyclicModule::new(2, base, sigma).expect("unit group module")
}

/// `𝒪_K` on the basis `{1, ω}` with the nontrivial automorphism.
pub fn ok_module(field: &QuadraticField) -> CyclicModule {
    let sigma = match field.omega {
        Omega::Whole => IntMatrix::from_i64(&[&[1, 0], &[0, -1]]),
        Omega::Half => IntMatrix::from_i64(&[&[1, -1], &[0, -1]]),
    };
    CyclicModule::lattice_module(2, sigma).expect("ring of integers module")
}

/// `(ℤ : Tr 𝒪_K) = gcd(Tr 1, Tr ω)`.
pub fn trace_index(field: &QuadraticField) -> BigInt {
    BigInt::from(2).gcd(&field.trace_omega())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Infinite,
    Prime(BigInt),
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinite => f.write_str("inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplittingType {
    Split,
    Inert,
    Ramified,
}

impl SplittingType {
    /// Order of the decomposition group.
    pub fn local_degree(self) -> u64 {
        match self {
            SplittingType::Split => 1,
            SplittingType::Inert | SplittingType::Ramified => 2,
        }
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplittingType::Split => "SPLIT",
            SplittingType::Inert => "INERT",
            SplittingType::Ramified => "RAMIFIED",
        })
    }
}

/// Jacobi symbol `(a/n)` for odd `n > 0`.
pub fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    assert!(
        n.is_positive() && n.is_odd(),
        "Jacobi symbol needs odd n > 0"
    );
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut result = 1;
    let eight = BigInt::from(8);
    while !a.is_zero() {
        while a.is_even() {
            a /= 2;
            let r = n.mod_floor(&eight);
            if r == BigInt::from(3) || r == BigInt::from(5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.mod_floor(&BigInt::from(4)) == BigInt::from(3)
            && n.mod_floor(&BigInt::from(4)) == BigInt::from(3)
        {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

pub fn splitting_type(field: &QuadraticField, place: &Place) -> Result<SplittingType> {
    let p = match place {
        Place::Infinite => return Ok(SplittingType::Split),
        Place::Prime(p) => p,
    };
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    if field.disc.is_multiple_of(p) {
        return Ok(SplittingType::Ramified);
    }
    let split = if p == &BigInt::from(2) {
        field.disc.mod_floor(&BigInt::from(8)).is_one()
    } else {
        jacobi(&field.disc, p) == 1
    };
    Ok(if split {
        SplittingType::Split
    } else {
        SplittingType::Inert
    })
}

/// Primes above which roots are counted by direct search.
const ROOT_SEARCH_LIMIT: u64 = 1 << 20;

/// Number of places of `K` above `place`, from the roots of the minimal
/// polynomial of `ω` modulo `p`.
pub fn places_above(field: &QuadraticField, place: &Place) -> Result<usize> {
    let p = match place {
        Place::Infinite => return Ok(2),
        Place::Prime(p) => p,
    };
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    // ω² + tω + n = 0
    let t = -field.trace_omega();
    let n = field.norm_omega();
    let Some(small) = p.to_u64().filter(|&q| q <= ROOT_SEARCH_LIMIT) else {
        let poly_disc: BigInt = &t * &t - &n * 4;
        let r = if poly_disc.is_multiple_of(p) {
            1
        } else if jacobi(&poly_disc, p) == 1 {
            2
        } else {
            0
        };
        return Ok(if r == 2 { 2 } else { 1 });
    };
    let t = t.mod_floor(p).to_u64().unwrap() as u128;
    let n = n.mod_floor(p).to_u64().unwrap() as u128;
    let q = small as u128;
    let roots = (0..q)
        .filter(|&x| (x * x + t * x + n).is_multiple_of(q))
        .count();
    Ok(if roots == 2 { 2 } else { 1 })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SUnitReport {
    pub s_f: Vec<Place>,
    pub s_f_size: usize,
    pub s_k_size: usize,
    /// `½ ∏ n_v`.
    pub herbrand: BigRational,
    pub nv_product: BigInt,
    /// `2^(2♯S_F − ♯S_K − 1)`.
    pub closed_form: BigRational,
}

impl SUnitReport {
    pub fn consistent(&self) -> bool {
        self.herbrand == self.closed_form
    }
}

/// `h(G, U_{K,S})` for `S` the places above `s_f`, computed as `½ ∏ n_v`
/// from local splitting and as `2^(2♯S_F − ♯S_K − 1)` from place counts.
pub fn sunit_herbrand(field: &QuadraticField, s_f: &[Place]) -> Result<SUnitReport> {
    let mut s_f = s_f.to_vec();
    s_f.sort();
    s_f.dedup();
    if s_f.first() != Some(&Place::Infinite) {
        return Err(Error::MissingInfinitePlace);
    }
    let mut nv_product = BigInt::one();
    let mut s_k_size = 0;
    for v in &s_f {
        nv_product *= splitting_type(field, v)?.local_degree();
        s_k_size += places_above(field, v)?;
    }
    let herbrand = BigRational::new(nv_product.clone(), BigInt::from(2));
    let exponent = 2 * s_f.len() as i64 - s_k_size as i64 - 1;
    let closed_form = power_of_two(exponent);
    Ok(SUnitReport {
        s_f_size: s_f.len(),
        s_f,
        s_k_size,
        herbrand,
        nv_product,
        closed_form,
    })
}

fn power_of_two(e: i64) -> BigRational {
    let p = BigInt::from(2).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// `#H¹(G, U_K) = 2^(♯S_K − 2♯S_F + 1)·(W_ℚ : N U_K)` with `S = {∞}`.
pub fn h1_from_norm_index(field: &QuadraticField) -> BigInt {
    let s_k = places_above(field, &Place::Infinite).expect("infinite place");
    let exponent = s_k as u32 + 1 - 2;
    BigInt::from(2).pow(exponent) * unit_norm_index(field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{h1, herbrand_quotient, tate_groups};

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn field(d: i64) -> QuadraticField {
        field_data(&int(d)).unwrap()
    }

    #[test]
    fn field_data_examples() {
        let k = field(2);
        assert_eq!((k.disc().clone(), k.omega()), (int(8), Omega::Whole));
        let k = field(5);
        assert_eq!((k.disc().clone(), k.omega()), (int(5), Omega::Half));
        assert_eq!(field_data(&int(12)), Err(Error::NotSquarefree(int(12))));
        assert_eq!(field_data(&int(1)), Err(Error::DTooSmall(int(1))));
        assert_eq!(field_data(&int(-3)), Err(Error::DTooSmall(int(-3))));
    }

    #[test]
    fn norm_and_trace() {
        let k = field(5);
        let omega = QuadraticInteger::new(0, 1);
        assert_eq!(omega.trace(&k), int(-1));
        assert_eq!(omega.norm(&k), int(-1));
        let k = field(2);
        assert_eq!(QuadraticInteger::new(1, 1).norm(&k), int(-1));
        assert_eq!(QuadraticInteger::new(3, 2).trace(&k), int(6));
    }

    #[test]
    fn cf_examples() {
        let ints = |xs: &[i64]| xs.iter().map(|&x| int(x)).collect::<Vec<_>>();
        let cf = cf_expand(&int(2));
        assert_eq!(
            (cf.a0.clone(), cf.periodic_part.clone()),
            (int(1), ints(&[2]))
        );
        let cf = cf_expand(&int(3));
        assert_eq!(
            (cf.a0.clone(), cf.periodic_part.clone()),
            (int(1), ints(&[1, 2]))
        );
        let cf = cf_expand(&int(5));
        assert_eq!(
            (cf.a0.clone(), cf.periodic_part.clone()),
            (int(2), ints(&[4]))
        );
        for d in [2, 3, 5] {
            let cf = cf_expand(&int(d));
            assert!(cf.preperiod.is_empty());
            for (p, q) in cf.convergents().take(4 * cf.period_length) {
                let n = &p * &p - int(d) * &q * &q;
                assert!(n.abs() < int(2 * d), "D={d}: {p}/{q}");
            }
        }
    }

    #[test]
    fn fundamental_unit_examples() {
        let u = fundamental_unit(&field(2));
        assert_eq!((u.epsilon, u.unit_norm), (QuadraticInteger::new(1, 1), -1));
        let u = fundamental_unit(&field(3));
        assert_eq!((u.epsilon, u.unit_norm), (QuadraticInteger::new(2, 1), 1));
        let u = fundamental_unit(&field(5));
        assert_eq!(
            (u.epsilon.clone(), u.unit_norm),
            (QuadraticInteger::new(1, 1), -1)
        );
        assert_eq!(u.epsilon.display(&field(5)), "(1+√5)/2");
        let u = fundamental_unit(&field(13));
        assert_eq!(u.epsilon.display(&field(13)), "(3+√13)/2");
    }

    #[test]
    fn pell_examples() {
        assert_eq!(
            pell_solve(&int(2), PellVariant::MinusOne),
            Ok(Some((int(1), int(1))))
        );
        assert_eq!(pell_solve(&int(3), PellVariant::MinusOne), Ok(None));
        assert_eq!(
            pell_solve(&int(3), PellVariant::PlusOne),
            Ok(Some((int(2), int(1))))
        );
        assert_eq!(
            pell_solve(&int(5), PellVariant::MinusFour),
            Ok(Some((int(1), int(1))))
        );
        assert_eq!(pell_solve(&int(21), PellVariant::MinusFour), Ok(None));
        assert!(matches!(
            pell_solve(&int(3), PellVariant::MinusFour),
            Err(Error::VariantUnavailable { .. })
        ));
    }

    #[test]
    fn unit_h1_examples() {
        for (d, expected) in [(2, 2), (3, 4), (5, 2), (13, 2)] {
            let k = field(d);
            assert_eq!(unit_group_h1(&k), int(expected));
            assert_eq!(h1_from_norm_index(&k), int(expected));
            assert_eq!(h1(&unit_module(&k)).torsion_order(), int(expected));
            assert_eq!(
                herbrand_quotient(&unit_module(&k)).quotient,
                BigRational::new(int(1), int(2))
            );
        }
    }

    #[test]
    fn splitting_examples() {
        let k = field(2);
        let split = |p: i64| splitting_type(&k, &Place::Prime(int(p))).unwrap();
        assert_eq!(split(7), SplittingType::Split);
        assert_eq!(split(5), SplittingType::Inert);
        assert_eq!(split(2), SplittingType::Ramified);
        assert_eq!(
            splitting_type(&k, &Place::Infinite),
            Ok(SplittingType::Split)
        );
        assert_eq!(
            splitting_type(&k, &Place::Prime(int(9))),
            Err(Error::NotPrime(int(9)))
        );
        let k = field(17);
        assert_eq!(
            splitting_type(&k, &Place::Prime(int(2))),
            Ok(SplittingType::Split)
        );
        let k = field(5);
        assert_eq!(
            splitting_type(&k, &Place::Prime(int(2))),
            Ok(SplittingType::Inert)
        );
    }

    #[test]
    fn jacobi_matches_euler() {
        for p in [3i64, 5, 7, 11, 13, 101] {
            for a in 0..p {
                let e = int(a).modpow(&int((p - 1) / 2), &int(p));
                let expected = if e.is_zero() {
                    0
                } else if e.is_one() {
                    1
                } else {
                    -1
                };
                assert_eq!(jacobi(&int(a), &int(p)), expected, "({a}/{p})");
            }
        }
    }

    #[test]
    fn sunit_examples() {
        let k = field(2);
        let report = sunit_herbrand(&k, &[Place::Infinite]).unwrap();
        assert_eq!((report.s_f_size, report.s_k_size), (1, 2));
        assert_eq!(report.herbrand, BigRational::new(int(1), int(2)));
        assert!(report.consistent());
        let report = sunit_herbrand(&k, &[Place::Infinite, Place::Prime(int(5))]).unwrap();
        assert_eq!(report.herbrand, BigRational::one());
        assert!(report.consistent());
        let report = sunit_herbrand(&k, &[Place::Prime(int(2)), Place::Infinite]).unwrap();
        assert_eq!(report.herbrand, BigRational::one());
        assert!(report.consistent());
        assert_eq!(
            sunit_herbrand(&k, &[Place::Prime(int(7))]),
            Err(Error::MissingInfinitePlace)
        );
    }

    #[test]
    fn trace_and_ok_module_examples() {
        for (d, trace, h1_order) in [(5, 1, 1), (2, 2, 2), (13, 1, 1), (3, 2, 2)] {
            let k = field(d);
            assert_eq!(trace_index(&k), int(trace));
            let m = ok_module(&k);
            let tate = tate_groups(&m);
            assert_eq!(tate.h1_order, int(h1_order), "D={d}");
            assert!(herbrand_quotient(&m).quotient.is_one());
        }
        assert_eq!(tate_groups(&ok_module(&field(2))).h0_order, int(2));
    }
}
