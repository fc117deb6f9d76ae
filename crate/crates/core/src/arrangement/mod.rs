//! Central hyperplane arrangements inside a subspace of ℚ^N, their
//! intersection lattices and characteristic polynomials.

mod lattice;
mod polynomial;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub use lattice::{Flat, IntersectionLattice, LatticeInvariants};
pub use polynomial::IntPolynomial;

use crate::combinatorics::{enumerate_type, IntPartition, SetPartition};
use crate::error::{Error, Result};
use crate::linalg::{dot, primitive_integer_vector, Rational, Subspace};
use crate::representation::Realization;
use crate::specht::SpechtRealization;

/// Identifies a hyperplane within an arrangement.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(untagged)]
pub enum Label {
    /// `H_α`, or the coordinate hyperplane `x_α = 0`.
    Partition(SetPartition),
    /// `H_I` for a subset `I ⊆ [n]`.
    Subset(Vec<usize>),
    Tag(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Partition(a) => write!(f, "{a}"),
            Label::Subset(s) => {
                let s: Vec<String> = s.iter().map(ToString::to_string).collect();
                write!(f, "{{{}}}", s.join(","))
            }
            Label::Tag(t) => write!(f, "{t}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Hyperplane {
    pub label: Label,
    /// Primitive integer normal vector lying in the ambient subspace.
    pub normal: Vec<Rational>,
}

/// A central arrangement of hyperplanes `{x ∈ V : x · ν = 0}` of a subspace `V ⊆ ℚ^N`.
#[derive(Clone, Debug)]
pub struct Arrangement {
    ambient: Subspace,
    hyperplanes: Vec<Hyperplane>,
    /// `B ν` for each normal, with `B` the canonical basis of `V`.
    functionals: Vec<Vec<Rational>>,
}

impl Arrangement {
    /// Validates and normalizes: every normal must be a nonzero vector of
    /// `ambient`, labels must be distinct and no two hyperplanes may coincide.
    pub fn new(ambient: Subspace, hyperplanes: Vec<(Label, Vec<Rational>)>) -> Result<Self> {
        let mut seen_labels = HashMap::new();
        let mut seen_normals = HashMap::new();
        let mut out = Vec::with_capacity(hyperplanes.len());
        for (i, (label, normal)) in hyperplanes.into_iter().enumerate() {
            if normal.len() != ambient.ambient_dim() {
                return Err(Error::DimensionMismatch(format!(
                    "normal of {label} has length {}, expected {}",
                    normal.len(),
                    ambient.ambient_dim()
                )));
            }
            let normal = primitive_integer_vector(&normal)
                .ok_or_else(|| Error::InvalidHyperplane(format!("{label} has a zero normal")))?;
            if !ambient.contains(&normal) {
                return Err(Error::InvalidHyperplane(format!("normal of {label} is not in the ambient space")));
            }
            if let Some(j) = seen_labels.insert(label.clone(), i) {
                return Err(Error::InvalidHyperplane(format!("label {label} used for hyperplanes {j} and {i}")));
            }
            if let Some(j) = seen_normals.insert(normal.clone(), i) {
                return Err(Error::InvalidHyperplane(format!("hyperplanes {j} and {i} ({label}) coincide")));
            }
            out.push(Hyperplane { label, normal });
        }
        Ok(Self::from_normalized(ambient, out))
    }

    fn from_normalized(ambient: Subspace, hyperplanes: Vec<Hyperplane>) -> Self {
        let functionals = hyperplanes
            .iter()
            .map(|h| ambient.basis().row_iter().map(|r| dot(r, &h.normal)).collect())
            .collect();
        Arrangement {
            ambient,
            hyperplanes,
            functionals,
        }
    }

    /// The arrangement with no hyperplanes.
    pub fn empty(ambient: Subspace) -> Self {
        Self::from_normalized(ambient, Vec::new())
    }

    /// 𝒜_λ in the realization `real`: one hyperplane `H_α` for every set
    /// partition α of type λ′.
    pub fn intrinsic<R: Realization>(real: &R) -> Result<Self> {
        let mu = real
            .hyperplane_type()
            .ok_or_else(|| Error::InvalidHyperplane("realization has no hyperplane type".into()))?;
        let alphas = enumerate_type(real.degree(), mu)?;
        let hyperplanes = alphas
            .into_par_iter()
            .map(|a| Ok((Label::Partition(a.clone()), real.normal(&a)?)))
            .collect::<Result<Vec<_>>>()?;
        Arrangement::new(real.frame().space().clone(), hyperplanes)
    }

    pub fn ambient(&self) -> &Subspace {
        &self.ambient
    }

    /// Dimension of the ambient subspace `V`.
    pub fn dim(&self) -> usize {
        self.ambient.dim()
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.hyperplanes.iter().map(|h| &h.label)
    }

    pub fn position(&self, label: &Label) -> Option<usize> {
        self.hyperplanes.iter().position(|h| &h.label == label)
    }

    /// The defining functionals in the coordinates of the canonical basis of `V`.
    pub fn functionals(&self) -> &[Vec<Rational>] {
        &self.functionals
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.len() {
            return Err(Error::InvalidIndex {
                index,
                len: self.len(),
            });
        }
        Ok(())
    }

    /// Local (basis-coordinate) subspace cut out by the given hyperplanes.
    pub(crate) fn local_intersection(&self, indices: &[usize]) -> Subspace {
        Subspace::from_spanning(self.dim(), indices.iter().map(|&i| self.functionals[i].clone()))
            .expect("functional length")
            .orthogonal_complement()
    }

    pub(crate) fn lift(&self, local: &Subspace) -> Subspace {
        let vectors = local.basis().row_iter().map(|c| self.ambient.combine(c));
        Subspace::from_spanning(self.ambient.ambient_dim(), vectors).expect("ambient length")
    }

    /// The intersection of the given hyperplanes with `V`.
    pub fn intersection(&self, indices: &[usize]) -> Result<Subspace> {
        for &i in indices {
            self.check_index(i)?;
        }
        Ok(self.lift(&self.local_intersection(indices)))
    }

    pub fn hyperplane_subspace(&self, index: usize) -> Result<Subspace> {
        self.intersection(&[index])
    }

    /// The intersection of all hyperplanes.
    pub fn center(&self) -> Subspace {
        self.lift(&self.local_intersection(&(0..self.len()).collect::<Vec<_>>()))
    }

    /// Codimension of the center in `V`.
    pub fn rank(&self) -> usize {
        Subspace::from_spanning(self.dim(), self.functionals.iter().cloned())
            .expect("functional length")
            .dim()
    }

    /// Indices of the hyperplanes that contain the given subspace of `V`.
    pub fn containing(&self, subspace: &Subspace) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| subspace.is_orthogonal_to(&self.hyperplanes[i].normal))
            .collect()
    }

    /// Whether `subspace` is an intersection of hyperplanes (the empty
    /// intersection being `V`).
    pub fn is_flat(&self, subspace: &Subspace) -> bool {
        self.ambient.contains_subspace(subspace)
            && self.intersection(&self.containing(subspace)).expect("valid indices") == *subspace
    }

    /// 𝒜′ = 𝒜 ∖ {H}.
    pub fn delete(&self, index: usize) -> Result<Arrangement> {
        self.check_index(index)?;
        let mut hyperplanes = self.hyperplanes.clone();
        hyperplanes.remove(index);
        Ok(Self::from_normalized(self.ambient.clone(), hyperplanes))
    }

    /// 𝒜″ = {K ∩ H : K ≠ H} as an arrangement in `H`, coinciding
    /// intersections merged (the first label is kept).
    pub fn restrict(&self, index: usize) -> Result<Arrangement> {
        self.check_index(index)?;
        let h = &self.hyperplanes[index].normal;
        let hh = dot(h, h);
        let ambient = self.hyperplane_subspace(index)?;
        let mut seen = HashMap::new();
        let mut hyperplanes = Vec::new();
        for (i, k) in self.hyperplanes.iter().enumerate() {
            if i == index {
                continue;
            }
            let c = &dot(&k.normal, h) / &hh;
            let projected: Vec<Rational> = k.normal.iter().zip(h).map(|(x, y)| x - &(&c * y)).collect();
            let Some(normal) = primitive_integer_vector(&projected) else {
                continue;
            };
            if seen.insert(normal.clone(), i).is_none() {
                hyperplanes.push(Hyperplane {
                    label: k.label.clone(),
                    normal,
                });
            }
        }
        Ok(Self::from_normalized(ambient, hyperplanes))
    }

    /// The same hyperplanes inside the span of the normals, dropping the
    /// factor on which every hyperplane vanishes identically.
    pub fn essentialize(&self) -> Arrangement {
        let span = Subspace::from_spanning(self.ambient.ambient_dim(), self.hyperplanes.iter().map(|h| h.normal.clone()))
            .expect("normal length");
        Self::from_normalized(span, self.hyperplanes.clone())
    }

    pub fn intersection_lattice(&self) -> IntersectionLattice {
        IntersectionLattice::build(self, None)
    }

    /// The lattice truncated at the given codimension.
    pub fn intersection_lattice_to(&self, max_codim: usize) -> IntersectionLattice {
        IntersectionLattice::build(self, Some(max_codim))
    }

    pub fn char_poly(&self) -> IntPolynomial {
        self.intersection_lattice().char_poly()
    }

    /// `χ(t) = Σ_{S ⊆ 𝒜} (−1)^{|S|} t^{dim ∩S}`, summed over all subsets.
    /// Exponential in the number of hyperplanes; refused above 24.
    pub fn whitney_char_poly(&self) -> Result<IntPolynomial> {
        const LIMIT: usize = 24;
        if self.len() > LIMIT {
            return Err(Error::OutOfRange(format!(
                "subset expansion over {} hyperplanes (limit {LIMIT})",
                self.len()
            )));
        }
        let d = self.dim();
        let mut by_rank = vec![0i64; d + 1];
        fn go(a: &Arrangement, next: usize, span: &Subspace, parity: i64, by_rank: &mut [i64]) {
            by_rank[span.dim()] += parity;
            for j in next..a.len() {
                go(a, j + 1, &span.with_vector(&a.functionals[j]), -parity, by_rank);
            }
        }
        go(self, 0, &Subspace::zero(d), 1, &mut by_rank);
        Ok(by_rank
            .iter()
            .enumerate()
            .map(|(rank, &c)| IntPolynomial::monomial(c.into(), d - rank))
            .sum())
    }

    /// For every flat of codimension 2, the number of hyperplanes containing
    /// it; returned as multiplicity ↦ number of such flats.
    pub fn codim2_profile(&self) -> BTreeMap<usize, usize> {
        let lattice = self.intersection_lattice_to(2);
        let mut profile = BTreeMap::new();
        for flat in lattice.flats_of_codim(2) {
            *profile.entry(flat.containing().len()).or_insert(0) += 1;
        }
        profile
    }

    /// `Some(|𝒜|)` when every codimension-2 flat lies on exactly two
    /// hyperplanes, which makes the fundamental group of the complement free
    /// abelian of that rank; `None` otherwise.
    pub fn pi1_abelian_rank(&self) -> Option<usize> {
        self.codim2_profile().keys().all(|&m| m <= 2).then_some(self.len())
    }
}

/// Ambient and space dimensions, rank, and the labelled normals.
impl Serialize for Arrangement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Arrangement", 4)?;
        st.serialize_field("ambient_dim", &self.ambient.ambient_dim())?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("rank", &self.rank())?;
        st.serialize_field("hyperplanes", &self.hyperplanes)?;
        st.end()
    }
}

/// 𝒜_λ built in the Specht realization of λ.
pub fn build_intrinsic(lambda: &IntPartition) -> Result<Arrangement> {
    Arrangement::intrinsic(&SpechtRealization::new(lambda))
}

/// `Σ_{j=1}^{n-1} (−1)^{n−1−j} (t−1)^j`, the characteristic polynomial of
/// 𝒜_{(2,1^{n−2})}.
pub fn char_poly_hook_chain(n: usize) -> Result<IntPolynomial> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("the (2,1^(n-2)) chain starts at n = 2, got {n}")));
    }
    let x = IntPolynomial::linear_root(1);
    Ok((1..n)
        .map(|j| {
            let term = x.pow(j as u32);
            if (n - 1 - j).is_multiple_of(2) {
                term
            } else {
                -&term
            }
        })
        .sum())
}
