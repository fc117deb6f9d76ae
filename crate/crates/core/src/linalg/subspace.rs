use serde::{Serialize, Serializer};

use super::matrix::{dot, kernel_of_rref};
use super::{Matrix, Rational};
use crate::error::{Error, Result};

/// A linear subspace of ℚ^`ambient_dim`, stored as the reduced row echelon
/// form of a basis. Two values are equal exactly when they describe the same
/// subspace, so `Subspace` can be hashed and compared directly.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// The row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let rank = pivots.len();
        let rows = r.row_iter().take(rank).map(<[Rational]>::to_vec).collect();
        Subspace {
            ambient_dim: m.cols(),
            basis: Matrix::from_rows(m.cols(), rows).expect("rows of an existing matrix"),
            pivots,
        }
    }

    /// The span of `vectors`, each of length `ambient_dim`.
    pub fn from_spanning<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let rows: Vec<Vec<Rational>> = vectors.into_iter().collect();
        Ok(Self::from_matrix(&Matrix::from_rows(ambient_dim, rows)?))
    }

    pub fn span_of(vector: &[Rational]) -> Self {
        Self::from_spanning(vector.len(), [vector.to_vec()]).expect("single vector")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical basis, one vector per row, in RREF.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// `v` minus its component along the basis, eliminated on pivot columns.
    /// The result is zero iff `v` lies in the subspace, and two vectors have
    /// the same residual iff they agree modulo the subspace.
    pub fn residual(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.row_iter().zip(&self.pivots) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &c * b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim && self.residual(v).iter().all(Rational::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient_dim == self.ambient_dim && other.basis.row_iter().all(|r| self.contains(r))
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim(), "coordinate vector length");
        let mut out = vec![Rational::ZERO; self.ambient_dim];
        for (c, row) in coords.iter().zip(self.basis.row_iter()) {
            if c.is_zero() {
                continue;
            }
            for (x, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x += c * b;
                }
            }
        }
        out
    }

    /// Adds one vector, returning the enlarged subspace (or a clone if `v` is already inside).
    pub fn with_vector(&self, v: &[Rational]) -> Subspace {
        let r = self.residual(v);
        let Some(lead) = r.iter().position(|x| !x.is_zero()) else {
            return self.clone();
        };
        let inv = r[lead].recip();
        let new_row: Vec<Rational> = r.iter().map(|x| x * &inv).collect();
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(self.dim() + 1);
        let mut pivots = Vec::with_capacity(self.dim() + 1);
        let mut inserted = false;
        for (row, &p) in self.basis.row_iter().zip(&self.pivots) {
            if !inserted && lead < p {
                rows.push(new_row.clone());
                pivots.push(lead);
                inserted = true;
            }
            let c = row[lead].clone();
            let reduced = if c.is_zero() {
                row.to_vec()
            } else {
                row.iter().zip(&new_row).map(|(x, y)| x - &c * y).collect()
            };
            rows.push(reduced);
            pivots.push(p);
        }
        if !inserted {
            rows.push(new_row);
            pivots.push(lead);
        }
        Subspace {
            ambient_dim: self.ambient_dim,
            basis: Matrix::from_rows(self.ambient_dim, rows).expect("consistent widths"),
            pivots,
        }
    }

    /// `self + other`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if other.dim() > self.dim() {
            return other.sum(self);
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        Ok(Subspace::from_matrix(&self.basis.vstack(&other.basis)?))
    }

    /// `self ∩ other`, computed as the complement of the sum of complements.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.contains_subspace(other) {
            return Ok(other.clone());
        }
        if other.contains_subspace(self) {
            return Ok(self.clone());
        }
        Ok(self
            .orthogonal_complement()
            .sum(&other.orthogonal_complement())?
            .orthogonal_complement())
    }

    /// Complement with respect to the standard dot product.
    pub fn orthogonal_complement(&self) -> Subspace {
        kernel_of_rref(&self.basis, &self.pivots, self.ambient_dim)
    }

    /// Image under the linear map `m` (acting on column vectors).
    pub fn map(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "map with {} columns applied in ambient dimension {}",
                m.cols(),
                self.ambient_dim
            )));
        }
        let images = self.basis.row_iter().map(|r| m.apply(r)).collect::<Result<Vec<_>>>()?;
        Subspace::from_spanning(m.rows(), images)
    }

    /// Whether `v` is orthogonal to every vector of the subspace.
    pub fn is_orthogonal_to(&self, v: &[Rational]) -> bool {
        self.basis.row_iter().all(|r| dot(r, v).is_zero())
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.basis.serialize(serializer)
    }
}
