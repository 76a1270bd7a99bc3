//! Integer lattices in ℤᵈ, stored by a canonical Hermite basis.
//!
//! Every subobject of a presented module (fixed points, norm images,
//! kernels) lives between the relation lattice and ℤᵏ, so quotient orders
//! reduce to lattice indices computed here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{Cardinality, PresentedGroup};
use crate::matrix::{hermite_normal_form, kernel_rows, smith_normal_form, IntMatrix};

/// A sublattice of ℤᵈ. The basis rows are in row-style Hermite form, so two
/// lattices are equal iff their `Lattice` values are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lattice {
    dim: usize,
    basis: IntMatrix,
}

impl Lattice {
    /// The lattice spanned by the rows of `gens`.
    pub fn from_generators(gens: &IntMatrix) -> Self {
        let herm = hermite_normal_form(gens);
        let idx: Vec<usize> = (0..herm.rank).collect();
        Lattice {
            dim: gens.cols(),
            basis: herm.h.select_rows(&idx),
        }
    }

    pub fn from_rows(dim: usize, rows: Vec<Vec<BigInt>>) -> Self {
        Self::from_generators(&IntMatrix::from_rows(dim, rows))
    }

    pub fn full(dim: usize) -> Self {
        Lattice {
            dim,
            basis: IntMatrix::identity(dim),
        }
    }

    pub fn zero(dim: usize) -> Self {
        Lattice {
            dim,
            basis: IntMatrix::zeros(0, dim),
        }
    }

    /// `m·ℤᵈ`.
    pub fn scaled_full(dim: usize, m: impl Into<BigInt>) -> Self {
        Self::from_generators(&IntMatrix::scalar(dim, m))
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.dim
    }

    fn pivot(&self, i: usize) -> usize {
        self.basis
            .row(i)
            .iter()
            .position(|x| !x.is_zero())
            .expect("Hermite basis rows are nonzero")
    }

    /// Canonical representative of `v` modulo the lattice: each pivot
    /// coordinate is brought into `[0, pivot)`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for i in 0..self.rank() {
            let c = self.pivot(i);
            let row = self.basis.row(i);
            let q = v[c].div_floor(&row[c]);
            if !q.is_zero() {
                for (x, b) in v.iter_mut().zip(row) {
                    *x -= &q * b;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Integer coefficients `c` with `v = c·basis`, if `v` is in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let c = self.pivot(i);
            let row = self.basis.row(i);
            let (q, r) = v[c].div_rem(&row[c]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (x, b) in v.iter_mut().zip(row) {
                    *x -= &q * b;
                }
            }
            coeffs.push(q);
        }
        v.iter().all(Zero::is_zero).then_some(coeffs)
    }

    /// Index of the first basis row of `other` lying outside `self`.
    pub fn first_outside(&self, other: &Lattice) -> Option<usize> {
        (0..other.rank()).find(|&i| !self.contains(other.basis.row(i)))
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        self.dim == other.dim && self.first_outside(other).is_none()
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.dim, other.dim);
        Self::from_generators(&self.basis.vstack(&other.basis))
    }

    /// `{m·x : x ∈ self}` where `m` acts on column vectors.
    pub fn image(&self, m: &IntMatrix) -> Lattice {
        assert_eq!(m.cols(), self.dim, "matrix does not act on this lattice");
        if self.rank() == 0 {
            return Lattice::zero(m.rows());
        }
        Self::from_generators(&self.basis.mul_mat(&m.transpose()))
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Lattice {
        Self::from_generators(&self.basis.scale(&c.into()))
    }

    pub fn intersection(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.dim, other.dim);
        // x = c·B_other with x ∈ self
        if other.rank() == 0 {
            return Lattice::zero(self.dim);
        }
        let coeffs = preimage_lattice(&other.basis.transpose(), self);
        if coeffs.rank() == 0 {
            return Lattice::zero(self.dim);
        }
        Self::from_generators(&coeffs.basis.mul_mat(&other.basis))
    }

    /// The group `self / sub`, presented on the basis of `self`.
    pub fn quotient(&self, sub: &Lattice) -> Result<PresentedGroup> {
        if self.dim != sub.dim {
            return Err(Error::DimensionMismatch(format!(
                "quotient of lattices in dimensions {} and {}",
                self.dim, sub.dim
            )));
        }
        let mut rels = Vec::with_capacity(sub.rank());
        for i in 0..sub.rank() {
            let c = self
                .coordinates(sub.basis.row(i))
                .ok_or(Error::NotSublattice { row: i })?;
            rels.push(c);
        }
        Ok(PresentedGroup::new(
            self.rank(),
            Lattice::from_rows(self.rank(), rels),
        ))
    }
}

/// Saturated integer kernel `{x : m·x = 0}`.
pub fn kernel_basis(m: &IntMatrix) -> Lattice {
    Lattice::from_generators(&kernel_rows(m))
}

/// `{x : m·x ∈ target}`. `m` maps ℤᵏ into the ambient space of `target`.
pub fn preimage_lattice(m: &IntMatrix, target: &Lattice) -> Lattice {
    assert_eq!(m.rows(), target.ambient_dim(), "matrix codomain mismatch");
    let k = m.cols();
    // m·x − Bᵀ·y = 0
    let bt = target.basis().transpose().scale(&-BigInt::one());
    let system = m.hstack(&bt);
    let ker = kernel_rows(&system);
    Lattice::from_generators(&ker.column_slice(0, k))
}

/// `[outer : inner]`, infinite when `inner` has smaller rank.
pub fn lattice_index(outer: &Lattice, inner: &Lattice) -> Result<Cardinality> {
    if outer.ambient_dim() != inner.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "lattice index across dimensions {} and {}",
            outer.ambient_dim(),
            inner.ambient_dim()
        )));
    }
    if let Some(row) = outer.first_outside(inner) {
        return Err(Error::NotSublattice { row });
    }
    if inner.rank() < outer.rank() {
        return Ok(Cardinality::Infinite);
    }
    let change: Vec<Vec<BigInt>> = (0..inner.rank())
        .map(|i| {
            outer
                .coordinates(inner.basis().row(i))
                .expect("checked above")
        })
        .collect();
    let change = IntMatrix::from_rows(outer.rank(), change);
    let snf = smith_normal_form(&change);
    let index = snf
        .diagonal()
        .iter()
        .fold(BigInt::one(), |acc, d| acc * d.abs());
    Ok(Cardinality::Finite(index))
}
