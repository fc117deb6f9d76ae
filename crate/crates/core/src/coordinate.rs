//! The signed module ξ_{λ′} with basis indexed by set partitions of type λ′,
//! and the restriction of its coordinate hyperplanes to the copy of V_λ inside.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::arrangement::{Arrangement, Label};
use crate::combinatorics::{enumerate_type, parity_sign, syt_count, IntPartition, Permutation, SetPartition, StandardTableau};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Subspace};
use crate::representation::{Frame, Realization, SignedPermutationModule};

/// Basis vectors `v_α`, α of type μ, where `v_α` is the wedge of each block's
/// elements in increasing order and blocks of equal size commute.
#[derive(Clone, Debug, Serialize)]
pub struct SignedModule {
    n: usize,
    mu: IntPartition,
    basis: Vec<SetPartition>,
    #[serde(skip)]
    index: HashMap<SetPartition, usize>,
}

/// A permutation together with its signed permutation matrix on a [`SignedModule`].
#[derive(Clone, Debug, Serialize)]
pub struct SignedAction {
    pub g: Permutation,
    pub matrix: Matrix,
}

impl SignedModule {
    /// The module for μ = λ′, i.e. the one containing V_λ.
    pub fn for_lambda(lambda: &IntPartition) -> Self {
        Self::of_type(&lambda.conjugate())
    }

    pub fn of_type(mu: &IntPartition) -> Self {
        let n = mu.n();
        let basis = enumerate_type(n, mu).expect("μ ⊢ n");
        let index = basis.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        SignedModule {
            n,
            mu: mu.clone(),
            basis,
            index,
        }
    }

    pub fn type_partition(&self) -> &IntPartition {
        &self.mu
    }

    pub fn basis(&self) -> &[SetPartition] {
        &self.basis
    }

    pub fn index_of(&self, alpha: &SetPartition) -> Option<usize> {
        self.index.get(alpha).copied()
    }

    /// `g·v_α = ε v_{g(α)}`: returns `(index of g(α), ε)`.
    pub fn image(&self, g: &Permutation, alpha: &SetPartition) -> (SetPartition, i64) {
        let mut sign = 1;
        let blocks: Vec<Vec<usize>> = alpha
            .blocks()
            .iter()
            .map(|b| {
                let image: Vec<usize> = b.iter().map(|&x| g.apply(x)).collect();
                sign *= parity_sign(&image);
                image
            })
            .collect();
        (SetPartition::from_blocks_unchecked(self.n, blocks), sign)
    }

    pub fn signed_action(&self, g: &Permutation) -> SignedAction {
        SignedAction {
            g: g.clone(),
            matrix: self.action_matrix(g),
        }
    }

    /// `Σ_{σ ∈ C_t} ε(σt) v_{α(σt)}`: the column-symmetrized image of a
    /// tableau `t` of shape λ′, where α(s) has the rows of `s` as blocks and
    /// ε(s) is the sign sorting every row of `s`.
    pub fn column_symmetrizer(&self, t: &StandardTableau) -> Vec<Rational> {
        let mut v = vec![Rational::ZERO; self.basis.len()];
        let mut fillings: Vec<Vec<Vec<usize>>> = vec![t.rows().to_vec()];
        for column in t.columns() {
            let arrangements = Permutation::arrangements_with_sign(&column);
            let mut next = Vec::with_capacity(fillings.len() * arrangements.len());
            for rows in &fillings {
                for (arr, _) in &arrangements {
                    // σ maps column[i] to arr[i]; apply it to every entry
                    let mut rows = rows.clone();
                    for row in rows.iter_mut() {
                        for x in row.iter_mut() {
                            if let Some(pos) = column.iter().position(|c| c == x) {
                                *x = arr[pos];
                            }
                        }
                    }
                    next.push(rows);
                }
            }
            fillings = next;
        }
        for rows in fillings {
            let sign: i64 = rows.iter().map(|r| parity_sign(r)).product();
            let alpha = SetPartition::from_blocks_unchecked(self.n, rows);
            v[self.index[&alpha]] += Rational::from_integer(sign);
        }
        v
    }
}

impl SignedPermutationModule for SignedModule {
    fn degree(&self) -> usize {
        self.n
    }

    fn ambient_dim(&self) -> usize {
        self.basis.len()
    }

    fn act_on_basis(&self, g: &Permutation, j: usize) -> (usize, bool) {
        let (image, sign) = self.image(g, &self.basis[j]);
        (self.index[&image], sign < 0)
    }
}

/// The subspace of ξ_{λ′} carrying π_λ: the span of the column
/// symmetrizers of the standard tableaux of shape λ′.
pub fn embed_irreducible(module: &SignedModule, lambda: &IntPartition) -> Result<Subspace> {
    let conj = lambda.conjugate();
    if &conj != module.type_partition() {
        return Err(Error::TypeMismatch {
            expected: conj.to_string(),
            actual: module.type_partition().to_string(),
        });
    }
    let vectors = StandardTableau::all(&conj).iter().map(|t| module.column_symmetrizer(t)).collect::<Vec<_>>();
    let space = Subspace::from_spanning(module.ambient_dim(), vectors)?;
    if space.dim() != syt_count(lambda) {
        return Err(Error::DimensionMismatch(format!(
            "embedded module has dimension {}, expected {}",
            space.dim(),
            syt_count(lambda)
        )));
    }
    Ok(space)
}

/// π_λ inside ξ_{λ′}.
#[derive(Debug)]
pub struct CoordinateRealization {
    lambda: IntPartition,
    module: SignedModule,
    frame: Frame,
}

impl CoordinateRealization {
    pub fn new(lambda: &IntPartition) -> Result<Self> {
        let module = SignedModule::for_lambda(lambda);
        let space = embed_irreducible(&module, lambda)?;
        Ok(CoordinateRealization {
            lambda: lambda.clone(),
            module,
            frame: Frame::new(space),
        })
    }

    pub fn lambda(&self) -> &IntPartition {
        &self.lambda
    }

    pub fn module(&self) -> &SignedModule {
        &self.module
    }

    pub fn space(&self) -> &Subspace {
        self.frame.space()
    }

    /// The coordinate hyperplanes `{x ∈ V_λ : x_α = 0}`. Fails if two of them
    /// coincide or one contains V_λ.
    pub fn boolean_restriction(&self) -> Result<Arrangement> {
        let n = self.module.ambient_dim();
        let hyperplanes = self
            .module
            .basis()
            .iter()
            .enumerate()
            .map(|(i, alpha)| {
                let mut e = vec![Rational::ZERO; n];
                e[i] = Rational::ONE;
                (Label::Partition(alpha.clone()), self.frame.project(&e))
            })
            .collect();
        Arrangement::new(self.space().clone(), hyperplanes)
    }

    /// Whether restricting the coordinate hyperplanes to V_λ gives exactly
    /// the hyperplanes `H_α` built from transposition-fixed subspaces in
    /// this realization, compared as sets of subspaces.
    pub fn verify_tensor_theorem(&self) -> Result<bool> {
        let boolean = self.boolean_restriction()?;
        let intrinsic = Arrangement::intrinsic(self)?;
        if boolean.len() != intrinsic.len() {
            return Ok(false);
        }
        let subspaces = |a: &Arrangement| -> Result<HashSet<Subspace>> {
            (0..a.len()).map(|i| a.hyperplane_subspace(i)).collect()
        };
        let same_sets = subspaces(&boolean)? == subspaces(&intrinsic)?;
        // the labels match as well: x_α = 0 is H_α
        let same_labels = boolean
            .hyperplanes()
            .iter()
            .all(|h| intrinsic.position(&h.label).is_some_and(|j| intrinsic.hyperplanes()[j].normal == h.normal));
        Ok(same_sets && same_labels)
    }
}

impl SignedPermutationModule for CoordinateRealization {
    fn degree(&self) -> usize {
        self.module.degree()
    }

    fn ambient_dim(&self) -> usize {
        self.module.ambient_dim()
    }

    fn act_on_basis(&self, g: &Permutation, j: usize) -> (usize, bool) {
        self.module.act_on_basis(g, j)
    }
}

impl Realization for CoordinateRealization {
    fn frame(&self) -> &Frame {
        &self.frame
    }

    fn hyperplane_type(&self) -> Option<&IntPartition> {
        Some(self.module.type_partition())
    }
}

/// Builds the coordinate realization of λ and checks that its Boolean
/// restriction equals its intrinsic arrangement.
pub fn verify_tensor_theorem(lambda: &IntPartition) -> Result<bool> {
    CoordinateRealization::new(lambda)?.verify_tensor_theorem()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{binomial, count_type};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> IntPartition {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions() {
        for n in 2..=6 {
            for k in 1..n {
                let hook = IntPartition::hook(n, k).unwrap();
                assert_eq!(SignedModule::for_lambda(&hook).ambient_dim(), binomial(n, k + 1));
            }
        }
        assert_eq!(SignedModule::for_lambda(&p("3,2")).ambient_dim(), 15);
        for n in 1..=6 {
            for lam in IntPartition::all(n) {
                let m = SignedModule::for_lambda(&lam);
                assert_eq!(num_bigint::BigUint::from(m.ambient_dim()), count_type(n, &lam.conjugate()).unwrap());
            }
        }
    }

    #[test]
    fn skew_symmetric_convention() {
        let m = SignedModule::for_lambda(&p("3,1"));
        let tau = Permutation::transposition(4, 1, 3).unwrap();
        let a = SetPartition::new(4, vec![vec![1, 3], vec![2], vec![4]]).unwrap();
        let (image, sign) = m.image(&tau, &a);
        assert_eq!((image, sign), (a, -1));
        assert_eq!(m.signed_action(&Permutation::identity(4)).matrix, Matrix::identity(6));
    }

    #[test]
    fn signed_action_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for lam in [p("3,2"), p("3,1,1"), p("2,2,1")] {
            let m = SignedModule::for_lambda(&lam);
            for _ in 0..10 {
                let g = Permutation::random(5, &mut rng);
                let h = Permutation::random(5, &mut rng);
                let prod = m.action_matrix(&g).mul(&m.action_matrix(&h)).unwrap();
                assert_eq!(prod, m.action_matrix(&g.compose(&h)));
                let sa = m.signed_action(&g).matrix;
                for i in 0..sa.rows() {
                    assert_eq!(sa.row(i).iter().filter(|x| !x.is_zero()).count(), 1);
                }
            }
        }
    }

    #[test]
    fn embedded_module_is_invariant_with_the_right_dimension() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 2..=5 {
            for lam in IntPartition::all(n) {
                let real = CoordinateRealization::new(&lam).unwrap();
                assert_eq!(real.space().dim(), syt_count(&lam));
                for _ in 0..20 {
                    let g = Permutation::random(n, &mut rng);
                    assert_eq!(real.space().map(&real.action_matrix(&g)).unwrap(), *real.space());
                }
            }
        }
    }

    #[test]
    fn braid_case_is_differences() {
        // a_ij = x_i − x_j with Σ x = 0
        let n = 4;
        let real = CoordinateRealization::new(&IntPartition::hook(n, 1).unwrap()).unwrap();
        let module = real.module();
        let x = [3i64, -1, 0, -2];
        let v: Vec<Rational> = module
            .basis()
            .iter()
            .map(|a| {
                let b = &a.blocks()[0];
                Rational::from_integer(x[b[0] - 1] - x[b[1] - 1])
            })
            .collect();
        assert!(real.space().contains(&v));
        assert_eq!(real.space().dim(), n - 1);
    }

    #[test]
    fn tensor_theorem_small_cases() {
        assert!(verify_tensor_theorem(&p("2,1")).unwrap());
        assert!(verify_tensor_theorem(&p("3,1,1")).unwrap());
        assert!(verify_tensor_theorem(&p("2,2")).unwrap());
    }
}
