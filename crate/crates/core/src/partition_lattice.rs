//! The map φ_λ: Π_n → subspaces of V_λ, α ↦ V_λ^{S_α}, and the lattice
//! S^Y(V_λ) of Young-invariant subspaces it sweeps out.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::{Arrangement, Label};
use crate::combinatorics::{kostka, IntPartition, Permutation, SetPartition};
use crate::error::Result;
use crate::linalg::Subspace;
use crate::representation::{Frame, Realization, SignedPermutationModule};
use crate::specht::SpechtRealization;

/// `φ(α) = V^{S_α}` as an ambient subspace.
#[derive(Clone, Debug, Serialize)]
pub struct PhiImage {
    pub alpha: SetPartition,
    #[serde(serialize_with = "serialize_dim")]
    pub subspace: Subspace,
}

fn serialize_dim<S: serde::Serializer>(s: &Subspace, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_u64(s.dim() as u64)
}

pub fn phi<R: Realization>(real: &R, alpha: &SetPartition) -> PhiImage {
    PhiImage {
        alpha: alpha.clone(),
        subspace: real.fixed_subspace(&alpha.spanning_transpositions()),
    }
}

/// φ evaluated on all of Π_n, in local coordinates.
struct PhiTable {
    partitions: Vec<SetPartition>,
    images: Vec<Subspace>,
    index: HashMap<SetPartition, usize>,
}

impl PhiTable {
    fn new<R: Realization>(real: &R) -> Self {
        let partitions = SetPartition::all(real.degree());
        let images = partitions
            .par_iter()
            .map(|a| real.fixed_local(&a.spanning_transpositions()))
            .collect();
        let index = partitions.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        PhiTable {
            partitions,
            images,
            index,
        }
    }

    fn image(&self, alpha: &SetPartition) -> &Subspace {
        &self.images[self.index[alpha]]
    }
}

/// A pair (α, β) with `φ(α) + φ(β)` strictly inside `φ(α ∧ β)`.
#[derive(Clone, Debug, Serialize)]
pub struct StrictWitness {
    pub alpha: SetPartition,
    pub beta: SetPartition,
    pub meet_dim: usize,
    pub sum_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomomorphismReport {
    pub lambda: IntPartition,
    pub pairs_checked: usize,
    /// `φ(α ∨ β) = φ(α) ∩ φ(β)`.
    pub join_to_meet: bool,
    /// `φ(α ∧ β) ⊇ φ(α) + φ(β)`.
    pub meet_contains_sum: bool,
    /// `dim φ(α) = K_{λ,ᾱ}`.
    pub dims_are_kostka: bool,
    /// `φ(α) = 0` whenever λ does not dominate ᾱ.
    pub vanishes_off_dominance: bool,
    /// α refines β implies `φ(β) ⊆ φ(α)`.
    pub order_reversing: bool,
    pub strict_count: usize,
    /// The first few pairs where the containment is strict.
    pub strict_witnesses: Vec<StrictWitness>,
}

impl HomomorphismReport {
    pub fn holds(&self) -> bool {
        self.join_to_meet && self.meet_contains_sum && self.dims_are_kostka && self.vanishes_off_dominance && self.order_reversing
    }
}

const MAX_WITNESSES: usize = 5;

/// Checks the homomorphism properties of φ_λ on unordered pairs of Π_n.
/// When there are more than `max_pairs` pairs, every `stride`-th pair in
/// lexicographic order is visited, with the stride chosen to stay within the limit.
pub fn verify_homomorphism_props(lambda: &IntPartition, max_pairs: usize) -> Result<HomomorphismReport> {
    let real = SpechtRealization::new(lambda);
    let table = PhiTable::new(&real);
    let parts = &table.partitions;
    let m = parts.len();
    let total = m * (m + 1) / 2;
    let stride = total.div_ceil(max_pairs.max(1)).max(1);

    let mut kostka_of = HashMap::new();
    for mu in IntPartition::all(lambda.n()) {
        kostka_of.insert(mu.clone(), kostka(lambda, &mu)?);
    }
    let mut dims_are_kostka = true;
    let mut vanishes_off_dominance = true;
    for (alpha, image) in parts.iter().zip(&table.images) {
        let ty = alpha.type_partition();
        dims_are_kostka &= image.dim() as u64 == kostka_of[&ty];
        if !lambda.dominates(&ty)? {
            vanishes_off_dominance &= image.is_zero();
        }
    }

    struct PairResult {
        join_to_meet: bool,
        meet_contains_sum: bool,
        order_reversing: bool,
        strict: Option<StrictWitness>,
    }
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i..m).map(move |j| (i, j)))
        .step_by(stride)
        .collect();
    let results: Vec<PairResult> = pairs
        .into_par_iter()
        .map(|(i, j)| {
            let (a, b) = (&parts[i], &parts[j]);
            let (pa, pb) = (&table.images[i], &table.images[j]);
            let join = table.image(&a.join(b).expect("same n"));
            let meet = table.image(&a.meet(b).expect("same n"));
            let sum = pa.sum(pb).expect("same ambient");
            let inter = pa.intersect(pb).expect("same ambient");
            let mut order_reversing = true;
            if a.refines(b) {
                order_reversing &= pa.contains_subspace(pb);
            }
            if b.refines(a) {
                order_reversing &= pb.contains_subspace(pa);
            }
            let meet_contains_sum = meet.contains_subspace(&sum);
            let strict = (meet_contains_sum && meet.dim() > sum.dim()).then(|| StrictWitness {
                alpha: a.clone(),
                beta: b.clone(),
                meet_dim: meet.dim(),
                sum_dim: sum.dim(),
            });
            PairResult {
                join_to_meet: *join == inter,
                meet_contains_sum,
                order_reversing,
                strict,
            }
        })
        .collect();

    let strict: Vec<StrictWitness> = results.iter().filter_map(|r| r.strict.clone()).collect();
    Ok(HomomorphismReport {
        lambda: lambda.clone(),
        pairs_checked: results.len(),
        join_to_meet: results.iter().all(|r| r.join_to_meet),
        meet_contains_sum: results.iter().all(|r| r.meet_contains_sum),
        dims_are_kostka,
        vanishes_off_dominance,
        order_reversing: results.iter().all(|r| r.order_reversing),
        strict_count: strict.len(),
        strict_witnesses: strict.into_iter().take(MAX_WITNESSES).collect(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct KostkaInequalityReport {
    pub lambda: IntPartition,
    pub pairs_checked: usize,
    pub holds: bool,
    /// Pairs where `K_{λ,α∨β} + K_{λ,α∧β} > K_{λ,ᾱ} + K_{λ,β̄}`.
    pub strict_count: usize,
    pub strict_example: Option<(SetPartition, SetPartition)>,
    pub violation: Option<(SetPartition, SetPartition)>,
}

/// `K_{λ,α∨β} + K_{λ,α∧β} ≥ K_{λ,ᾱ} + K_{λ,β̄}` over all pairs α, β ∈ Π_n,
/// using only the combinatorial Kostka numbers.
pub fn kostka_inequality(lambda: &IntPartition) -> Result<KostkaInequalityReport> {
    let n = lambda.n();
    let mut k = HashMap::new();
    for mu in IntPartition::all(n) {
        k.insert(mu.clone(), kostka(lambda, &mu)?);
    }
    let parts = SetPartition::all(n);
    let types: Vec<IntPartition> = parts.iter().map(SetPartition::type_partition).collect();
    let outcomes: Vec<(usize, usize, i64)> = (0..parts.len())
        .into_par_iter()
        .flat_map_iter(|i| (i..parts.len()).map(move |j| (i, j)))
        .map(|(i, j)| {
            let join = parts[i].join(&parts[j]).expect("same n").type_partition();
            let meet = parts[i].meet(&parts[j]).expect("same n").type_partition();
            let lhs = k[&join] + k[&meet];
            let rhs = k[&types[i]] + k[&types[j]];
            (i, j, lhs as i64 - rhs as i64)
        })
        .collect();
    let pick = |(i, j, _): &(usize, usize, i64)| (parts[*i].clone(), parts[*j].clone());
    Ok(KostkaInequalityReport {
        lambda: lambda.clone(),
        pairs_checked: outcomes.len(),
        holds: outcomes.iter().all(|o| o.2 >= 0),
        strict_count: outcomes.iter().filter(|o| o.2 > 0).count(),
        strict_example: outcomes.iter().find(|o| o.2 > 0).map(pick),
        violation: outcomes.iter().find(|o| o.2 < 0).map(pick),
    })
}

pub fn verify_kostka_inequality(lambda: &IntPartition) -> Result<bool> {
    Ok(kostka_inequality(lambda)?.holds)
}

/// S^Y(V) = φ(Π_n), ordered by inclusion.
#[derive(Clone, Debug, Serialize)]
pub struct YInvariantLattice {
    pub n: usize,
    /// Distinct images in local coordinates of `V`, largest dimension first.
    #[serde(skip)]
    pub elements: Vec<Subspace>,
    pub dims: Vec<usize>,
    /// For each element, one α with that image.
    pub representatives: Vec<SetPartition>,
    /// `(i, j)` with `elements[i] ⊊ elements[j]`.
    pub order: Vec<(usize, usize)>,
    pub top: usize,
    pub bottom: usize,
    /// Closed under pairwise intersection.
    pub meet_closed: bool,
    /// Two elements whose sum is not an element, when there are any.
    pub join_witness: Option<(usize, usize)>,
    /// The transposition images `V^{(ij)}`, as element indices.
    #[serde(skip)]
    transposition_images: Vec<usize>,
}

pub fn build_sy_lattice<R: Realization>(real: &R) -> YInvariantLattice {
    let table = PhiTable::new(real);
    let n = real.degree();
    let mut elements: Vec<Subspace> = Vec::new();
    let mut representatives = Vec::new();
    let mut seen: HashMap<Subspace, usize> = HashMap::new();
    let mut order_of_first: Vec<usize> = (0..table.partitions.len()).collect();
    // refinement-minimal partitions first, so representatives are as fine as possible
    order_of_first.sort_by_key(|&i| std::cmp::Reverse(table.partitions[i].num_blocks()));
    for i in order_of_first {
        let s = &table.images[i];
        if !seen.contains_key(s) {
            seen.insert(s.clone(), elements.len());
            elements.push(s.clone());
            representatives.push(table.partitions[i].clone());
        }
    }
    let mut perm: Vec<usize> = (0..elements.len()).collect();
    perm.sort_by_key(|&i| std::cmp::Reverse(elements[i].dim()));
    let elements: Vec<Subspace> = perm.iter().map(|&i| elements[i].clone()).collect();
    let representatives: Vec<SetPartition> = perm.iter().map(|&i| representatives[i].clone()).collect();
    let seen: HashMap<Subspace, usize> = elements.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();

    let len = elements.len();
    let pairs: Vec<(usize, usize)> = (0..len).flat_map(|i| (0..len).map(move |j| (i, j))).collect();
    let order: Vec<(usize, usize)> = pairs
        .par_iter()
        .filter(|&&(i, j)| i != j && elements[j].contains_subspace(&elements[i]))
        .copied()
        .collect();
    let closure: Vec<(bool, bool)> = pairs
        .par_iter()
        .filter(|(i, j)| i < j)
        .map(|&(i, j)| {
            let meet = elements[i].intersect(&elements[j]).expect("same ambient");
            let sum = elements[i].sum(&elements[j]).expect("same ambient");
            (seen.contains_key(&meet), seen.contains_key(&sum))
        })
        .collect();
    let meet_closed = closure.iter().all(|c| c.0);
    let join_witness = pairs
        .iter()
        .filter(|(i, j)| i < j)
        .zip(&closure)
        .find(|(_, c)| !c.1)
        .map(|(p, _)| *p);
    let top = seen[table.image(&SetPartition::singletons(n))];
    let bottom = (0..len).min_by_key(|&i| elements[i].dim()).unwrap_or(0);
    let mut transposition_images: Vec<usize> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .map(|(i, j)| seen[table.image(&SetPartition::pair(n, i, j).expect("i < j"))])
        .collect();
    transposition_images.sort_unstable();
    transposition_images.dedup();
    YInvariantLattice {
        n,
        dims: elements.iter().map(Subspace::dim).collect(),
        elements,
        representatives,
        order,
        top,
        bottom,
        meet_closed,
        join_witness,
        transposition_images,
    }
}

impl YInvariantLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements covered by the top.
    pub fn coatoms(&self) -> Vec<usize> {
        let below_top: Vec<usize> = (0..self.len()).filter(|&i| i != self.top).collect();
        below_top
            .iter()
            .copied()
            .filter(|&i| {
                !below_top
                    .iter()
                    .any(|&j| j != i && self.order.binary_search(&(i, j)).is_ok())
            })
            .collect()
    }

    /// Whether every element is the intersection of the coatoms above it,
    /// every coatom is some `V^{(ij)}`, and the top is the only element
    /// lying in no coatom.
    pub fn is_coatomistic(&self) -> bool {
        let coatoms = self.coatoms();
        let d = self.elements[self.top].ambient_dim();
        let coatoms_are_transpositions = coatoms
            .iter()
            .all(|c| self.transposition_images.binary_search(c).is_ok());
        let meets = (0..self.len()).all(|i| {
            let above: Vec<&Subspace> = coatoms
                .iter()
                .filter(|&&c| self.elements[c].contains_subspace(&self.elements[i]))
                .map(|&c| &self.elements[c])
                .collect();
            let meet = above
                .iter()
                .fold(Subspace::full(d), |acc, s| acc.intersect(s).expect("same ambient"));
            meet == self.elements[i]
        });
        coatoms_are_transpositions && meets
    }
}

pub fn verify_coatomistic(lattice: &YInvariantLattice) -> bool {
    lattice.is_coatomistic()
}

/// Each φ(β) rebuilt as the intersection of `V^τ` over the path
/// transpositions of β, compared with the direct fixed space.
pub fn verify_transposition_meets<R: Realization>(real: &R) -> bool {
    SetPartition::all(real.degree()).par_iter().all(|beta| {
        let d = real.dim();
        let meet = beta
            .spanning_transpositions()
            .iter()
            .map(|t| real.fixed_local(std::slice::from_ref(t)))
            .fold(Subspace::full(d), |acc, s| acc.intersect(&s).expect("same ambient"));
        meet == real.fixed_local(&beta.star_transpositions())
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AtomsReport {
    pub lambda: IntPartition,
    /// `V^{(ij)} = ⋂_{α : i ∼_α j} H_α` for every transposition.
    pub equation_holds: bool,
    /// Every φ(β) is a flat of 𝒜_λ and appears in the computed lattice.
    pub embedded: bool,
    pub elements_checked: usize,
    pub lattice_size: usize,
    /// Every `H_α` is the sum of `V^τ` over all transpositions τ ∈ S_α.
    pub hyperplanes_are_joins: bool,
}

impl AtomsReport {
    pub fn holds(&self) -> bool {
        self.equation_holds && self.embedded && self.hyperplanes_are_joins
    }
}

pub fn atoms_equation(lambda: &IntPartition) -> Result<AtomsReport> {
    let real = SpechtRealization::new(lambda);
    let n = lambda.n();
    let arrangement = Arrangement::intrinsic(&real)?;
    let lattice = arrangement.intersection_lattice();

    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let equation_holds = pairs.par_iter().all(|&(i, j)| {
        let indices: Vec<usize> = arrangement
            .hyperplanes()
            .iter()
            .enumerate()
            .filter(|(_, h)| matches!(&h.label, Label::Partition(a) if a.same_block(i, j)))
            .map(|(k, _)| k)
            .collect();
        let tau = Permutation::transposition(n, i, j).expect("i < j");
        arrangement.intersection(&indices).expect("valid") == real.fixed_subspace(&[tau])
    });

    let sy = build_sy_lattice(&real);
    let frame: &Frame = real.frame();
    let embedded = sy.elements.par_iter().all(|local| {
        let s = frame.lift(local);
        let containing = arrangement.containing(&s);
        arrangement.intersection(&containing).expect("valid") == s && lattice.find(&containing).is_some()
    });

    let hyperplanes_are_joins = arrangement.hyperplanes().par_iter().all(|h| {
        let Label::Partition(alpha) = &h.label else {
            return false;
        };
        let all_transpositions: Vec<Permutation> = alpha
            .blocks()
            .iter()
            .flat_map(|b| {
                b.iter()
                    .enumerate()
                    .flat_map(move |(x, &i)| b[x + 1..].iter().map(move |&j| Permutation::transposition(n, i, j).expect("i < j")))
            })
            .collect();
        let join = frame.lift(&real.join_of_fixed_local(&all_transpositions));
        join.is_orthogonal_to(&h.normal) && join.dim() + 1 == real.dim()
    });

    Ok(AtomsReport {
        lambda: lambda.clone(),
        equation_holds,
        embedded,
        elements_checked: sy.len(),
        lattice_size: lattice.len(),
        hyperplanes_are_joins,
    })
}

pub fn verify_atoms_equation(lambda: &IntPartition) -> Result<bool> {
    Ok(atoms_equation(lambda)?.holds())
}

/// Permutation of coordinates on ℚ^n.
#[derive(Debug)]
pub struct NaturalRepresentation {
    n: usize,
    frame: Frame,
    reflection_type: IntPartition,
}

impl NaturalRepresentation {
    pub fn new(n: usize) -> Self {
        let mut parts = vec![1; n.saturating_sub(1)];
        if n >= 2 {
            parts[0] = 2;
        }
        NaturalRepresentation {
            n,
            frame: Frame::new(Subspace::full(n)),
            reflection_type: IntPartition::from_unsorted(parts),
        }
    }
}

impl SignedPermutationModule for NaturalRepresentation {
    fn degree(&self) -> usize {
        self.n
    }

    fn ambient_dim(&self) -> usize {
        self.n
    }

    fn act_on_basis(&self, g: &Permutation, j: usize) -> (usize, bool) {
        (g.apply(j + 1) - 1, false)
    }
}

impl Realization for NaturalRepresentation {
    fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Blocks are transpositions, so `H_α` is the mirror `x_i = x_j`.
    fn hyperplane_type(&self) -> Option<&IntPartition> {
        (self.n >= 2).then_some(&self.reflection_type)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NaturalIsomorphism {
    pub n: usize,
    pub partitions: usize,
    pub images: usize,
    /// α refines β exactly when φ(β) ⊆ φ(α).
    pub order_isomorphism: bool,
    /// The images are exactly the flats of the braid arrangement in ℚ^n.
    pub equals_braid_lattice: bool,
}

impl NaturalIsomorphism {
    pub fn holds(&self) -> bool {
        self.partitions == self.images && self.order_isomorphism && self.equals_braid_lattice
    }
}

pub fn natural_isomorphism(n: usize) -> Result<NaturalIsomorphism> {
    let real = NaturalRepresentation::new(n);
    let table = PhiTable::new(&real);
    let distinct: std::collections::HashSet<&Subspace> = table.images.iter().collect();
    let m = table.partitions.len();
    let order_isomorphism = (0..m).into_par_iter().all(|i| {
        (0..m).all(|j| {
            table.partitions[i].refines(&table.partitions[j]) == table.images[i].contains_subspace(&table.images[j])
        })
    });
    let braid = if n >= 2 {
        Arrangement::intrinsic(&real)?
    } else {
        Arrangement::empty(Subspace::full(n))
    };
    let lattice = braid.intersection_lattice();
    let equals_braid_lattice = lattice.len() == distinct.len()
        && table.images.iter().all(|s| {
            let containing = braid.containing(s);
            braid.intersection(&containing).expect("valid") == *s && lattice.find(&containing).is_some()
        });
    Ok(NaturalIsomorphism {
        n,
        partitions: m,
        images: distinct.len(),
        order_isomorphism,
        equals_braid_lattice,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPartition {
        s.parse().unwrap()
    }

    #[test]
    fn phi_basics() {
        let lam = p("3,1,1");
        let real = SpechtRealization::new(&lam);
        let top = phi(&real, &SetPartition::singletons(5));
        assert_eq!(top.subspace, *real.space());
        let alpha = SetPartition::new(5, vec![vec![1, 2, 3], vec![4, 5]]).unwrap();
        let image = phi(&real, &alpha);
        assert_eq!(image.subspace.dim() as u64, kostka(&lam, &p("3,2")).unwrap());
        assert!(image.subspace.is_zero());
    }

    #[test]
    fn homomorphism_small() {
        for lam in IntPartition::all(4) {
            let report = verify_homomorphism_props(&lam, usize::MAX).unwrap();
            assert!(report.holds(), "{lam}: {report:?}");
            assert_eq!(report.pairs_checked, 15 * 16 / 2);
        }
        let sampled = verify_homomorphism_props(&p("2,2"), 20).unwrap();
        assert!(sampled.pairs_checked <= 20 && sampled.holds());
    }

    #[test]
    fn kostka_inequality_trivial_cases() {
        let r = kostka_inequality(&p("3,2")).unwrap();
        assert!(r.holds && r.violation.is_none());
        assert_eq!(r.pairs_checked, 52 * 53 / 2);
    }

    #[test]
    fn sy_lattice_shape() {
        let real = SpechtRealization::new(&p("2,2"));
        let l = build_sy_lattice(&real);
        assert!(l.meet_closed && l.is_coatomistic());
        assert_eq!(l.dims[l.top], 2);
        assert_eq!(l.dims[l.bottom], 0);
        let trivial = build_sy_lattice(&SpechtRealization::new(&p("4")));
        assert_eq!(trivial.len(), 1);
        assert!(trivial.is_coatomistic());
    }

    #[test]
    fn transposition_meets() {
        for lam in IntPartition::all(4) {
            assert!(verify_transposition_meets(&SpechtRealization::new(&lam)));
        }
    }

    #[test]
    fn atoms_for_braid() {
        let r = atoms_equation(&p("3,1")).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.lattice_size, 15);
    }

    #[test]
    fn natural_small() {
        let iso = natural_isomorphism(4).unwrap();
        assert!(iso.holds(), "{iso:?}");
        assert_eq!(iso.images, 15);
    }
}
