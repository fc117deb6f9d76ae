//! Representations of S_n realized inside signed permutation modules.
//!
//! A [`SignedPermutationModule`] has a basis on which every permutation acts
//! by a signed permutation matrix, so the standard dot product is invariant.
//! A [`Realization`] adds an invariant subspace `V` (its [`Frame`]); every
//! computation is carried out in the coordinates of the canonical basis of
//! `V`, which keeps matrices `dim V × dim V` however large the ambient module is.

use crate::combinatorics::{IntPartition, Permutation, SetPartition};
use crate::error::{Error, Result};
use crate::linalg::{dot, primitive_integer_vector, Matrix, Rational, Subspace};

pub trait SignedPermutationModule: Sync {
    /// The `n` of S_n.
    fn degree(&self) -> usize;

    fn ambient_dim(&self) -> usize;

    /// `g · e_j = ± e_k`, returned as `(k, negated)`.
    fn act_on_basis(&self, g: &Permutation, j: usize) -> (usize, bool);

    /// The ambient signed permutation matrix of `g`.
    fn action_matrix(&self, g: &Permutation) -> Matrix {
        let n = self.ambient_dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let (k, neg) = self.act_on_basis(g, j);
            m[(k, j)] = if neg { -Rational::ONE } else { Rational::ONE };
        }
        m
    }

    /// `g · v` for an ambient vector.
    fn act(&self, g: &Permutation, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; v.len()];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (k, neg) = self.act_on_basis(g, j);
            out[k] = if neg { -x } else { x.clone() };
        }
        out
    }
}

/// An invariant subspace `V` with its canonical basis `B` (rows), the Gram
/// matrix `G = B Bᵀ` and its inverse.
#[derive(Clone, Debug)]
pub struct Frame {
    space: Subspace,
    gram_inv: Matrix,
}

impl Frame {
    pub fn new(space: Subspace) -> Self {
        let b = space.basis();
        let d = space.dim();
        let mut gram = Matrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let x = dot(b.row(i), b.row(j));
                gram[(j, i)] = x.clone();
                gram[(i, j)] = x;
            }
        }
        let gram_inv = gram.inverse().expect("Gram matrix of a basis is invertible");
        Frame { space, gram_inv }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Ambient vector with the given coordinates in the canonical basis.
    pub fn to_ambient(&self, coords: &[Rational]) -> Vec<Rational> {
        self.space.combine(coords)
    }

    /// Coordinates of an ambient vector of `V`.
    pub fn to_local(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        self.space.coordinates(v)
    }

    /// The ambient subspace with the given local description.
    pub fn lift(&self, local: &Subspace) -> Subspace {
        let n = self.space.ambient_dim();
        let vectors = local.basis().row_iter().map(|c| self.to_ambient(c));
        Subspace::from_spanning(n, vectors).expect("ambient length")
    }

    /// Local description of an ambient subspace contained in `V`.
    pub fn localize(&self, ambient: &Subspace) -> Result<Subspace> {
        let vectors = ambient
            .basis()
            .row_iter()
            .map(|v| {
                self.to_local(v)
                    .ok_or_else(|| Error::DimensionMismatch("subspace is not contained in V".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Subspace::from_spanning(self.dim(), vectors)
    }

    /// The linear functional `x ↦ (x B) · ν` on local coordinates, i.e. `B ν`.
    pub fn functional_of(&self, ambient_normal: &[Rational]) -> Vec<Rational> {
        self.space.basis().row_iter().map(|r| dot(r, ambient_normal)).collect()
    }

    /// The vector `ν ∈ V` with `B ν = f`: the ambient normal of `ker f`.
    pub fn normal_of(&self, functional: &[Rational]) -> Vec<Rational> {
        let c = self.gram_inv.apply(functional).expect("functional of local length");
        self.to_ambient(&c)
    }

    /// Orthogonal projection of an ambient vector onto `V`.
    pub fn project(&self, v: &[Rational]) -> Vec<Rational> {
        self.normal_of(&self.functional_of(v))
    }
}

/// A representation: a signed permutation module together with an
/// invariant subspace `V`.
pub trait Realization: SignedPermutationModule {
    fn frame(&self) -> &Frame;

    /// The set-partition type λ′ that labels hyperplanes, when `V` is the
    /// irreducible module of shape λ.
    fn hyperplane_type(&self) -> Option<&IntPartition>;

    fn dim(&self) -> usize {
        self.frame().dim()
    }

    /// Matrix of `g` on `V` in local coordinates (acting on column vectors).
    fn local_action(&self, g: &Permutation) -> Matrix {
        let space = self.frame().space();
        let b = space.basis();
        let d = space.dim();
        let g_inv = g.inverse();
        let mut m = Matrix::zeros(d, d);
        for (r, &p) in space.pivots().iter().enumerate() {
            // coordinate r of g·B_i is (g·B_i)[p] = ±B_i[j] where g⁻¹·e_p = ±e_j
            let (j, neg) = self.act_on_basis(&g_inv, p);
            for i in 0..d {
                let x = &b[(i, j)];
                if !x.is_zero() {
                    m[(r, i)] = if neg { -x } else { x.clone() };
                }
            }
        }
        m
    }

    /// `V^G` for the group generated by `gens`, in local coordinates.
    fn fixed_local(&self, gens: &[Permutation]) -> Subspace {
        let d = self.dim();
        if gens.is_empty() {
            return Subspace::full(d);
        }
        let id = Matrix::identity(d);
        let stacked = gens
            .iter()
            .map(|g| self.local_action(g).sub(&id).expect("square"))
            .reduce(|a, b| a.vstack(&b).expect("same width"))
            .expect("nonempty");
        stacked.kernel()
    }

    /// `V^G` as an ambient subspace.
    fn fixed_subspace(&self, gens: &[Permutation]) -> Subspace {
        self.frame().lift(&self.fixed_local(gens))
    }

    /// `Σ_{τ ∈ T} V^τ` in local coordinates.
    fn join_of_fixed_local(&self, gens: &[Permutation]) -> Subspace {
        gens.iter()
            .map(|g| self.fixed_local(std::slice::from_ref(g)))
            .reduce(|a, b| a.sum(&b).expect("same ambient"))
            .unwrap_or_else(|| Subspace::zero(self.dim()))
    }

    fn check_type(&self, alpha: &SetPartition) -> Result<()> {
        let expected = self
            .hyperplane_type()
            .ok_or_else(|| Error::InvalidHyperplane("this representation has no intrinsic hyperplanes".into()))?;
        let actual = alpha.type_partition();
        if &actual != expected || alpha.n() != self.degree() {
            return Err(Error::TypeMismatch {
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
        Ok(())
    }

    /// `H_α = Σ_{τ ∈ T_α} V^τ` in local coordinates, with `T_α` the path
    /// transpositions of the blocks of α.
    fn hyperplane_local(&self, alpha: &SetPartition) -> Result<Subspace> {
        self.check_type(alpha)?;
        Ok(self.join_of_fixed_local(&alpha.spanning_transpositions()))
    }

    fn hyperplane(&self, alpha: &SetPartition) -> Result<Subspace> {
        Ok(self.frame().lift(&self.hyperplane_local(alpha)?))
    }

    /// A functional on local coordinates whose kernel is `H_α`.
    fn hyperplane_functional(&self, alpha: &SetPartition) -> Result<Vec<Rational>> {
        let h = self.hyperplane_local(alpha)?;
        let annihilator = h.orthogonal_complement();
        if annihilator.dim() != 1 {
            return Err(Error::InvalidHyperplane(format!(
                "H_{alpha} has codimension {} in V",
                annihilator.dim()
            )));
        }
        Ok(annihilator.basis().row(0).to_vec())
    }

    /// Primitive integer ambient normal of `H_α` inside `V`.
    fn normal(&self, alpha: &SetPartition) -> Result<Vec<Rational>> {
        let f = self.hyperplane_functional(alpha)?;
        Ok(primitive_integer_vector(&self.frame().normal_of(&f)).expect("nonzero normal"))
    }

    /// Ambient matrix of `Q_{A₁} ⋯ Q_{A_k}`, the product of the block
    /// antisymmetrizers of α.
    fn antisymmetrizer(&self, alpha: &SetPartition) -> Result<Matrix> {
        self.check_type(alpha)?;
        let n = self.ambient_dim();
        let mut q = Matrix::zeros(n, n);
        let elements = signed_young_subgroup(alpha);
        let scale = Rational::new(1, elements.len() as i64);
        for (g, sign) in &elements {
            for j in 0..n {
                let (k, neg) = self.act_on_basis(g, j);
                let s = if neg { -sign } else { *sign };
                q[(k, j)] += &Rational::from_integer(s) * &scale;
            }
        }
        Ok(q)
    }

    /// The same operator restricted to `V`, in local coordinates.
    fn antisymmetrizer_local(&self, alpha: &SetPartition) -> Result<Matrix> {
        self.check_type(alpha)?;
        let d = self.dim();
        let elements = signed_young_subgroup(alpha);
        let mut q = Matrix::zeros(d, d);
        for (g, sign) in &elements {
            let m = self.local_action(g);
            q = if *sign > 0 { q.add(&m) } else { q.sub(&m) }.expect("same shape");
        }
        Ok(q.scale(&Rational::new(1, elements.len() as i64)))
    }

    /// `R_α = π(1 − 2 Q_{A₁} ⋯ Q_{A_k})` on the ambient module.
    fn reflection(&self, alpha: &SetPartition) -> Result<Matrix> {
        let q = self.antisymmetrizer(alpha)?;
        Ok(Matrix::identity(q.rows()).sub(&q.scale(&Rational::from_integer(2))).expect("square"))
    }

    /// The reflection restricted to `V`, in local coordinates.
    fn reflection_local(&self, alpha: &SetPartition) -> Result<Matrix> {
        let q = self.antisymmetrizer_local(alpha)?;
        Ok(Matrix::identity(q.rows()).sub(&q.scale(&Rational::from_integer(2))).expect("square"))
    }
}

/// Every element of the Young subgroup `S_α` with its sign.
pub fn signed_young_subgroup(alpha: &SetPartition) -> Vec<(Permutation, i64)> {
    let n = alpha.n();
    let mut out = vec![((0..n).collect::<Vec<usize>>(), 1i64)];
    for block in alpha.blocks() {
        let arrangements = Permutation::arrangements_with_sign(block);
        let mut next = Vec::with_capacity(out.len() * arrangements.len());
        for (images, sign) in &out {
            for (arr, s) in &arrangements {
                let mut images = images.clone();
                for (&from, &to) in block.iter().zip(arr) {
                    images[from - 1] = to - 1;
                }
                next.push((images, sign * s));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(images, s)| (Permutation::from_zero_based(images), s))
        .collect()
}
