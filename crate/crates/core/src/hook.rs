//! Hooks λ = (n−k,1^k) through the exterior power Λ^k of the natural
//! representation: the simplicial boundary map and the arrangement 𝒞 it cuts out.

use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::{build_intrinsic, Arrangement, Label};
use crate::combinatorics::{binomial, for_each_combination, subsets, IntPartition};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Subspace};

/// The k-subsets of [n] in lexicographic order, a basis of Λ^k.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SubsetBasis {
    pub n: usize,
    pub k: usize,
    pub subsets: Vec<Vec<usize>>,
}

impl SubsetBasis {
    pub fn new(n: usize, k: usize) -> Self {
        SubsetBasis {
            n,
            k,
            subsets: subsets(n, k),
        }
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn index_of(&self, subset: &[usize]) -> Option<usize> {
        self.subsets.binary_search_by(|s| s.as_slice().cmp(subset)).ok()
    }
}

/// `∂: Λ^k → Λ^{k+1}`, one row per (k+1)-subset.
#[derive(Clone, Debug, Serialize)]
pub struct BoundaryMap {
    pub from: SubsetBasis,
    pub to: SubsetBasis,
    pub matrix: Matrix,
}

fn check_k(n: usize, k: usize, max: usize) -> Result<()> {
    if k < 1 || k > max {
        return Err(Error::OutOfRange(format!("k = {k} outside 1..={max} for n = {n}")));
    }
    Ok(())
}

/// `(∂T)_{i₁…i_{k+1}} = Σ_j (−1)^{j+1} T_{i₁…î_j…i_{k+1}}`. Also defined for
/// `k = 0`, where it maps a scalar to the all-ones vector.
pub(crate) fn boundary(n: usize, k: usize) -> BoundaryMap {
    let from = SubsetBasis::new(n, k);
    let to = SubsetBasis::new(n, k + 1);
    let rows: Vec<Vec<i64>> = to
        .subsets
        .iter()
        .map(|face| {
            let mut row = vec![0i64; from.len()];
            for j in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(j);
                row[from.index_of(&sub).expect("k-subset")] = if j % 2 == 0 { 1 } else { -1 };
            }
            row
        })
        .collect();
    let matrix = if rows.is_empty() {
        Matrix::zeros(0, from.len())
    } else {
        Matrix::from_i64_rows(&rows)
    };
    BoundaryMap { from, to, matrix }
}

/// The boundary map `Λ^k → Λ^{k+1}` for `1 ≤ k ≤ n − 1`.
pub fn boundary_matrix(n: usize, k: usize) -> Result<BoundaryMap> {
    check_k(n, k, n.saturating_sub(1))?;
    Ok(boundary(n, k))
}

/// `H_I = {T ∈ Λ^k : (∂T)_I = 0}` for every (k+1)-subset `I`.
pub fn build_c_arrangement(n: usize, k: usize) -> Result<Arrangement> {
    check_k(n, k, n.saturating_sub(2))?;
    let map = boundary(n, k);
    let hyperplanes = map
        .to
        .subsets
        .iter()
        .zip(map.matrix.row_iter())
        .map(|(s, row)| (Label::Subset(s.clone()), row.to_vec()))
        .collect();
    Arrangement::new(Subspace::full(map.from.len()), hyperplanes)
}

/// The two halves of the factorization 𝒞 = 𝒜_{(n−k,1^k)} × Φ_ℓ.
#[derive(Clone, Debug, Serialize)]
pub struct ProductDecomposition {
    pub n: usize,
    pub k: usize,
    /// Dimension of the common intersection of 𝒞.
    pub center_dim: usize,
    /// `C(n−1, k−1)`.
    pub expected_center_dim: usize,
    /// Whether the common intersection is the image of `∂: Λ^{k−1} → Λ^k`.
    pub center_is_boundary_image: bool,
    pub essential_dim: usize,
    /// Whether the essential part and 𝒜_{(n−k,1^k)} have the same lattice invariants.
    pub lattice_matches: bool,
}

impl ProductDecomposition {
    pub fn holds(&self) -> bool {
        self.center_is_boundary_image && self.center_dim == self.expected_center_dim && self.lattice_matches
    }
}

pub fn product_decomposition(n: usize, k: usize) -> Result<ProductDecomposition> {
    let c = build_c_arrangement(n, k)?;
    let center = c.center();
    let image = Subspace::from_matrix(&boundary(n, k - 1).matrix.transpose());
    let essential = c.essentialize();
    let intrinsic = build_intrinsic(&IntPartition::hook(n, k)?)?;
    let lattice_matches = essential.dim() == intrinsic.dim()
        && essential.len() == intrinsic.len()
        && essential.intersection_lattice().invariants() == intrinsic.intersection_lattice().invariants();
    Ok(ProductDecomposition {
        n,
        k,
        center_dim: center.dim(),
        expected_center_dim: binomial(n - 1, k - 1),
        center_is_boundary_image: center == image,
        essential_dim: essential.dim(),
        lattice_matches,
    })
}

pub fn verify_product_decomposition(n: usize, k: usize) -> Result<bool> {
    Ok(product_decomposition(n, k)?.holds())
}

/// Linear relations among the equations of 𝒞: the `c ∈ ℚ^{C(n,k+1)}` with
/// `Σ_I c_I (∂T)_I = 0` for all `T`.
pub fn dependency_space(n: usize, k: usize) -> Result<Subspace> {
    check_k(n, k, n.saturating_sub(2))?;
    Ok(boundary(n, k).matrix.transpose().kernel())
}

/// The relations `Σ_j (−1)^{j+1} E(J∖j_j)` coming from the (k+2)-subsets `J`,
/// i.e. the rows of `∂: Λ^{k+1} → Λ^{k+2}`.
pub fn dependency_generators(n: usize, k: usize) -> Result<Vec<(Vec<usize>, Vec<Rational>)>> {
    check_k(n, k, n.saturating_sub(2))?;
    let map = boundary(n, k + 1);
    Ok(map.to.subsets.iter().cloned().zip(map.matrix.to_rows()).collect())
}

/// The relation attached to one (k+2)-subset, in the basis of (k+1)-subsets.
pub fn relation_vector(n: usize, k: usize, subset: &[usize]) -> Result<Vec<Rational>> {
    check_k(n, k, n.saturating_sub(2))?;
    let target = SubsetBasis::new(n, k + 2);
    let row = target
        .index_of(subset)
        .ok_or_else(|| Error::OutOfRange(format!("{subset:?} is not a {}-subset of [{n}]", k + 2)))?;
    Ok(boundary(n, k + 1).matrix.row(row).to_vec())
}

/// Fewest equations of 𝒞 taking part in a linear relation, searching
/// supports of size up to `bound`. `None` when no relation is that small.
pub fn min_cycle_support(n: usize, k: usize, bound: usize) -> Result<Option<usize>> {
    check_k(n, k, n.saturating_sub(2))?;
    let rows = boundary(n, k).matrix.to_rows();
    let m = rows.len();
    let items: Vec<usize> = (0..m).collect();
    for size in 1..=bound.min(m) {
        // split on the first element so the search runs in parallel
        let found = (0..m).into_par_iter().any(|first| {
            let rest: Vec<usize> = items[first + 1..].to_vec();
            let mut hit = false;
            for_each_combination(&rest, size - 1, &mut |tail| {
                if hit {
                    return;
                }
                let chosen: Vec<Vec<Rational>> = std::iter::once(first)
                    .chain(tail.iter().copied())
                    .map(|i| rows[i].clone())
                    .collect();
                let matrix = Matrix::from_rows(rows[0].len(), chosen).expect("equal lengths");
                hit = matrix.rank() < size;
            });
            hit
        });
        if found {
            return Ok(Some(size));
        }
    }
    Ok(None)
}

/// For `k > 1`: whether every codimension-2 flat of 𝒜_{(n−k,1^k)} lies on
/// exactly two hyperplanes, and the number of hyperplanes.
pub fn verify_double_and_rank(n: usize, k: usize) -> Result<(bool, usize)> {
    if k <= 1 {
        return Err(Error::HookRequiresK(k));
    }
    let essential = build_c_arrangement(n, k)?.essentialize();
    let double = essential.codim2_profile().keys().all(|&m| m == 2);
    Ok((double, essential.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::syt_count;

    fn r(x: i64) -> Rational {
        Rational::from_integer(x)
    }

    #[test]
    fn boundary_squares_to_zero() {
        for n in 2..=8 {
            for k in 0..n - 1 {
                let a = boundary(n, k).matrix;
                let b = boundary(n, k + 1).matrix;
                assert!(b.mul(&a).unwrap().is_zero(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn sign_rule() {
        let map = boundary_matrix(3, 1).unwrap();
        let row = map.to.index_of(&[1, 2]).unwrap();
        // (∂T)_{12} = T_2 − T_1
        assert_eq!(map.matrix.row(row), &[r(-1), r(1), r(0)]);
        assert!(boundary_matrix(3, 0).is_err());
        assert!(boundary_matrix(3, 3).is_err());
    }

    #[test]
    fn rank_is_a_binomial() {
        for n in 2..=7 {
            for k in 1..n {
                assert_eq!(boundary(n, k).matrix.rank(), binomial(n - 1, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn five_two_example() {
        let c = build_c_arrangement(5, 2).unwrap();
        assert_eq!((c.len(), c.dim()), (10, 10));
        assert_eq!(c.center().dim(), 4);
        // t_12 − t_13 + t_23 for I = {1,2,3}
        let basis = SubsetBasis::new(5, 2);
        let mut expected = vec![r(0); 10];
        expected[basis.index_of(&[1, 2]).unwrap()] = r(1);
        expected[basis.index_of(&[1, 3]).unwrap()] = r(-1);
        expected[basis.index_of(&[2, 3]).unwrap()] = r(1);
        let i = c.position(&Label::Subset(vec![1, 2, 3])).unwrap();
        assert_eq!(c.hyperplanes()[i].normal, expected);
    }

    #[test]
    fn k_one_is_the_braid_arrangement() {
        let c = build_c_arrangement(5, 1).unwrap();
        assert_eq!(c.center().dim(), 1);
        let chi: crate::arrangement::IntPolynomial = (0..5).map(crate::arrangement::IntPolynomial::linear_root).product();
        assert_eq!(c.char_poly(), chi);
        let d = product_decomposition(4, 1).unwrap();
        assert!(d.holds());
        assert_eq!(c.codim2_profile().get(&3), Some(&10));
    }

    #[test]
    fn product_decomposition_five_two() {
        let d = product_decomposition(5, 2).unwrap();
        assert!(d.holds());
        assert_eq!((d.center_dim, d.essential_dim), (4, 6));
        assert_eq!(d.essential_dim, syt_count(&IntPartition::hook(5, 2).unwrap()));
    }

    #[test]
    fn dependencies() {
        let dep = dependency_space(5, 2).unwrap();
        let basis = SubsetBasis::new(5, 3);
        let mut relation = vec![r(0); 10];
        for (s, c) in [([1, 2, 3], 1), ([1, 2, 4], -1), ([1, 3, 4], 1), ([2, 3, 4], -1)] {
            relation[basis.index_of(&s).unwrap()] = r(c);
        }
        assert!(dep.contains(&relation));
        // ∂ of {1,2,3,4} starts with +E(234)
        let negated: Vec<Rational> = relation.iter().map(|x| -x).collect();
        assert_eq!(relation_vector(5, 2, &[1, 2, 3, 4]).unwrap(), negated);
        let generators = dependency_generators(5, 2).unwrap();
        assert_eq!(generators.len(), 5);
        let span = Subspace::from_spanning(10, generators.into_iter().map(|(_, v)| v)).unwrap();
        assert_eq!(span, dep);
        for n in 4..=7 {
            for k in 1..=n - 2 {
                assert_eq!(dependency_space(n, k).unwrap().dim(), binomial(n - 1, k + 1));
            }
        }
    }

    #[test]
    fn cycle_support() {
        assert_eq!(min_cycle_support(5, 2, 4).unwrap(), Some(4));
        for n in 4..=7 {
            assert_eq!(min_cycle_support(n, 2, 3).unwrap(), None);
        }
        assert_eq!(min_cycle_support(6, 3, 6).unwrap(), Some(5));
        assert_eq!(min_cycle_support(5, 1, 5).unwrap(), Some(3));
    }

    #[test]
    fn double_intersections() {
        assert_eq!(verify_double_and_rank(5, 2).unwrap(), (true, 10));
        assert_eq!(verify_double_and_rank(5, 1), Err(Error::HookRequiresK(1)));
        assert_eq!(verify_double_and_rank(5, 1).unwrap_err().to_string(), "double-point check requires k > 1 (got k = 1)");
    }
}
