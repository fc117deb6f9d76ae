//! The Specht module V_λ inside the row-tabloid permutation module M^λ.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{syt_count, IntPartition, Permutation, SetPartition, StandardTableau};
use crate::error::Result;
use crate::linalg::{Matrix, Rational, Subspace};
use crate::representation::{Frame, Realization, SignedPermutationModule};

/// A row-equivalence class of fillings of the diagram of λ.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Tabloid {
    shape: IntPartition,
    rows: Vec<Vec<usize>>,
}

impl Tabloid {
    pub fn shape(&self) -> &IntPartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    fn from_labels(shape: &IntPartition, labels: &[u8]) -> Self {
        let mut rows = vec![Vec::new(); shape.len()];
        for (i, &r) in labels.iter().enumerate() {
            rows[r as usize].push(i + 1);
        }
        Tabloid {
            shape: shape.clone(),
            rows,
        }
    }
}

/// π_λ realized as the span of the polytabloids
/// `e_t = Σ_{σ ∈ C_t} sgn(σ) {σ t}` in M^λ.
#[derive(Debug)]
pub struct SpechtRealization {
    lambda: IntPartition,
    lambda_conj: IntPartition,
    /// `labels[k][i]` is the row holding `i + 1` in tabloid `k`, in lexicographic order.
    labels: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    frame: Frame,
}

impl SpechtRealization {
    pub fn new(lambda: &IntPartition) -> Self {
        let labels = row_words(lambda);
        let index: HashMap<Vec<u8>, usize> = labels.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let polytabloids: Vec<Vec<Rational>> = StandardTableau::all(lambda)
            .par_iter()
            .map(|t| polytabloid(t, &index, labels.len()))
            .collect();
        let space = Subspace::from_spanning(labels.len(), polytabloids).expect("tabloid-length vectors");
        debug_assert_eq!(space.dim(), syt_count(lambda));
        SpechtRealization {
            lambda: lambda.clone(),
            lambda_conj: lambda.conjugate(),
            labels,
            index,
            frame: Frame::new(space),
        }
    }

    pub fn lambda(&self) -> &IntPartition {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    /// The Specht subspace V_λ ⊆ M^λ.
    pub fn space(&self) -> &Subspace {
        self.frame.space()
    }

    pub fn tabloid(&self, index: usize) -> Tabloid {
        Tabloid::from_labels(&self.lambda, &self.labels[index])
    }

    pub fn tabloids(&self) -> Vec<Tabloid> {
        (0..self.labels.len()).map(|i| self.tabloid(i)).collect()
    }

    pub fn tabloid_index(&self, tabloid: &Tabloid) -> Option<usize> {
        if tabloid.shape != self.lambda {
            return None;
        }
        let mut labels = vec![u8::MAX; self.n()];
        for (r, row) in tabloid.rows.iter().enumerate() {
            for &x in row {
                *labels.get_mut(x.checked_sub(1)?)? = r as u8;
            }
        }
        self.index.get(&labels).copied()
    }

    /// Whether λ is `(n)` or `(1^n)`, where V_λ is one-dimensional.
    pub fn is_trivial(&self) -> bool {
        self.lambda.is_trivial()
    }

    /// The polytabloid `e_t` as an ambient vector.
    pub fn polytabloid(&self, t: &StandardTableau) -> Vec<Rational> {
        polytabloid(t, &self.index, self.labels.len())
    }

    /// Alias of [`SignedPermutationModule::action_matrix`], the permutation
    /// matrix of `g` on M^λ.
    pub fn permutation_matrix(&self, g: &Permutation) -> Matrix {
        self.action_matrix(g)
    }

    /// Dimension of the S_α-fixed subspace for α of type μ.
    pub fn fixed_dimension(&self, mu: &IntPartition) -> Result<usize> {
        crate::combinatorics::check_same_size(&self.lambda, mu)?;
        let alpha = SetPartition::distinguished(mu);
        Ok(self.fixed_local(&alpha.spanning_transpositions()).dim())
    }
}

impl SignedPermutationModule for SpechtRealization {
    fn degree(&self) -> usize {
        self.lambda.n()
    }

    fn ambient_dim(&self) -> usize {
        self.labels.len()
    }

    fn act_on_basis(&self, g: &Permutation, j: usize) -> (usize, bool) {
        let from = &self.labels[j];
        let mut to = vec![0u8; from.len()];
        for (i, &r) in from.iter().enumerate() {
            to[g.apply0(i)] = r;
        }
        (self.index[&to], false)
    }
}

impl Realization for SpechtRealization {
    fn frame(&self) -> &Frame {
        &self.frame
    }

    fn hyperplane_type(&self) -> Option<&IntPartition> {
        Some(&self.lambda_conj)
    }
}

/// Words over row labels with content λ, in lexicographic order.
fn row_words(lambda: &IntPartition) -> Vec<Vec<u8>> {
    fn go(left: &mut [usize], word: &mut Vec<u8>, n: usize, out: &mut Vec<Vec<u8>>) {
        if word.len() == n {
            out.push(word.clone());
            return;
        }
        for r in 0..left.len() {
            if left[r] > 0 {
                left[r] -= 1;
                word.push(r as u8);
                go(left, word, n, out);
                word.pop();
                left[r] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut lambda.parts().to_vec(), &mut Vec::new(), lambda.n(), &mut out);
    out
}

fn polytabloid(t: &StandardTableau, index: &HashMap<Vec<u8>, usize>, len: usize) -> Vec<Rational> {
    let n = t.shape().n();
    let mut row_of = vec![0u8; n];
    for (r, row) in t.rows().iter().enumerate() {
        for &x in row {
            row_of[x - 1] = r as u8;
        }
    }
    // σ ranges over C_t = ∏ S_column; {σt} puts σ(x) in the row of x.
    let mut terms: Vec<(Vec<u8>, i64)> = vec![(vec![0u8; n], 1)];
    let mut placed: Vec<usize> = Vec::new();
    for column in t.columns() {
        let arrangements = Permutation::arrangements_with_sign(&column);
        let mut next = Vec::with_capacity(terms.len() * arrangements.len());
        for (word, sign) in &terms {
            for (arr, s) in &arrangements {
                let mut word = word.clone();
                for (&x, &y) in column.iter().zip(arr) {
                    word[y - 1] = row_of[x - 1];
                }
                next.push((word, sign * s));
            }
        }
        terms = next;
        placed.extend(column);
    }
    debug_assert_eq!(placed.len(), n);
    let mut v = vec![Rational::ZERO; len];
    for (word, sign) in terms {
        v[index[&word]] += Rational::from_integer(sign);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_type, kostka};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> IntPartition {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions_match_tableau_counts() {
        for n in 1..=6 {
            for lam in IntPartition::all(n) {
                let real = SpechtRealization::new(&lam);
                assert_eq!(real.space().dim(), syt_count(&lam), "{lam}");
            }
        }
        assert_eq!(SpechtRealization::new(&p("5")).ambient_dim(), 1);
        assert!(SpechtRealization::new(&p("5")).space().is_full());
    }

    #[test]
    fn standard_representation_of_s3() {
        let real = SpechtRealization::new(&p("2,1"));
        assert_eq!(real.ambient_dim(), 3);
        assert_eq!(real.space().dim(), 2);
        // tabloids are indexed by the element in the second row; e_t = {t} − {(12)t}
        let ones = vec![Rational::ONE; 3];
        assert!(real.space().is_orthogonal_to(&ones));
        let t = real.tabloid(0);
        assert_eq!(real.tabloid_index(&t), Some(0));
    }

    #[test]
    fn action_is_a_homomorphism_preserving_v() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for lam in [p("3,2"), p("3,1,1"), p("2,2,1")] {
            let real = SpechtRealization::new(&lam);
            assert_eq!(real.action_matrix(&Permutation::identity(5)), Matrix::identity(real.ambient_dim()));
            for _ in 0..10 {
                let g = Permutation::random(5, &mut rng);
                let h = Permutation::random(5, &mut rng);
                let gh = real.action_matrix(&g.compose(&h));
                assert_eq!(real.action_matrix(&g).mul(&real.action_matrix(&h)).unwrap(), gh);
                assert_eq!(real.space().map(&real.action_matrix(&g)).unwrap(), *real.space());
                let local = real.local_action(&g).mul(&real.local_action(&h)).unwrap();
                assert_eq!(local, real.local_action(&g.compose(&h)));
            }
        }
    }

    #[test]
    fn transposition_trace_counts_fixed_tabloids() {
        let real = SpechtRealization::new(&p("4,1"));
        let tau = Permutation::transposition(5, 1, 2).unwrap();
        let m = real.action_matrix(&tau);
        let trace: Rational = (0..real.ambient_dim()).map(|i| m[(i, i)].clone()).sum();
        let fixed = real
            .tabloids()
            .iter()
            .filter(|t| t.rows().iter().any(|r| r.contains(&1) && r.contains(&2)))
            .count();
        assert_eq!(trace, Rational::from_integer(fixed as i64));
        assert_eq!(fixed, 3);
    }

    #[test]
    fn fixed_dimensions_are_kostka_numbers() {
        for n in 1..=5 {
            for lam in IntPartition::all(n) {
                let real = SpechtRealization::new(&lam);
                for mu in IntPartition::all(n) {
                    let k = kostka(&lam, &mu).unwrap() as usize;
                    assert_eq!(real.fixed_dimension(&mu).unwrap(), k, "{lam} {mu}");
                }
            }
        }
    }

    #[test]
    fn braid_mirror_is_a_transposition_fixed_space() {
        let lam = p("3,1");
        let real = SpechtRealization::new(&lam);
        let alpha = SetPartition::new(4, vec![vec![2, 4], vec![1], vec![3]]).unwrap();
        let tau = Permutation::transposition(4, 2, 4).unwrap();
        assert_eq!(real.hyperplane(&alpha).unwrap(), real.fixed_subspace(&[tau]));
        assert_eq!(real.fixed_subspace(&[]), *real.space());
    }

    #[test]
    fn hyperplanes_have_codimension_one_and_ignore_generators() {
        for lam in IntPartition::all(5) {
            let real = SpechtRealization::new(&lam);
            for alpha in enumerate_type(5, &lam.conjugate()).unwrap() {
                let h = real.hyperplane_local(&alpha).unwrap();
                assert_eq!(h.dim() + 1, real.dim(), "{lam} {alpha}");
                assert_eq!(real.join_of_fixed_local(&alpha.star_transpositions()), h);
            }
        }
    }

    #[test]
    fn wrong_type_is_rejected() {
        let real = SpechtRealization::new(&p("3,2"));
        let alpha = SetPartition::singletons(5);
        let err = real.hyperplane(&alpha).unwrap_err();
        assert!(err.to_string().contains("partition type must equal λ′"));
    }

    #[test]
    fn braid_normals_in_the_plane() {
        let real = SpechtRealization::new(&p("2,1"));
        let normals: Vec<Vec<Rational>> = enumerate_type(3, &p("2,1"))
            .unwrap()
            .iter()
            .map(|a| real.normal(a).unwrap())
            .collect();
        assert_eq!(normals.len(), 3);
        for i in 0..3 {
            for j in i + 1..3 {
                let (a, b) = (&normals[i], &normals[j]);
                let d = crate::linalg::dot(a, b);
                let cos2 = &(&d * &d) / &(&crate::linalg::dot(a, a) * &crate::linalg::dot(b, b));
                assert_eq!(cos2, Rational::new(1, 4));
            }
        }
    }
}
