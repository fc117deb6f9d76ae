use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{Arrangement, IntPolynomial};
use crate::linalg::{Rational, Subspace};

/// An intersection of hyperplanes, identified by the (closed) set of all
/// hyperplanes containing it.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Flat {
    containing: Vec<usize>,
    codim: usize,
    mobius: i64,
}

impl Flat {
    /// Indices of the hyperplanes containing this flat, increasing.
    pub fn containing(&self) -> &[usize] {
        &self.containing
    }

    /// Codimension in the ambient space of the arrangement.
    pub fn codim(&self) -> usize {
        self.codim
    }

    /// μ(0̂, x), with 0̂ the ambient space.
    pub fn mobius(&self) -> i64 {
        self.mobius
    }

    /// Whether `self ≤ other` in reverse inclusion.
    pub fn below(&self, other: &Flat) -> bool {
        self.codim <= other.codim && is_subset(&self.containing, &other.containing)
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// L(𝒜): all intersections of hyperplanes ordered by reverse inclusion,
/// graded by codimension, with the Möbius function μ(0̂, ·).
#[derive(Clone, Debug, Serialize)]
pub struct IntersectionLattice {
    dim: usize,
    num_hyperplanes: usize,
    /// Flats sorted by codimension, then by containing set.
    flats: Vec<Flat>,
    /// `rank_start[c]..rank_start[c + 1]` are the flats of codimension `c`.
    #[serde(skip)]
    rank_start: Vec<usize>,
    #[serde(skip)]
    index: HashMap<Vec<usize>, usize>,
    truncated: bool,
}

/// Data that a lattice isomorphism preserves.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LatticeInvariants {
    pub flats_per_codim: Vec<usize>,
    /// Sorted `(codim, μ, number of containing hyperplanes)` over all flats.
    pub profile: Vec<(usize, i64, usize)>,
    pub char_poly: IntPolynomial,
}

struct Pending {
    containing: Vec<usize>,
    /// A flat one level down and a hyperplane that together generate this one.
    parent: usize,
    via: usize,
    mobius: i64,
}

impl IntersectionLattice {
    /// Breadth-first enumeration by codimension.
    ///
    /// For a flat `F` cut out by the functionals in `S`, the residual of each
    /// remaining functional modulo `span(S)` is canonical, so two hyperplanes
    /// give the same cover of `F` exactly when their residuals are parallel.
    /// μ follows Weisner's theorem: with `h` the first hyperplane through `X`,
    /// `μ(X) = −Σ μ(Y)` over lower covers `Y` of `X` not contained in `h`.
    pub(crate) fn build(arrangement: &Arrangement, max_codim: Option<usize>) -> Self {
        let functionals = arrangement.functionals();
        let d = arrangement.dim();
        let m = functionals.len();
        let mut flats = vec![Flat {
            containing: Vec::new(),
            codim: 0,
            mobius: 1,
        }];
        let mut rank_start = vec![0, 1];
        let mut spans = vec![Subspace::zero(d)];
        let limit = max_codim.unwrap_or(d).min(d);
        for codim in 0..limit {
            let level = rank_start[codim]..rank_start[codim + 1];
            let covers: Vec<Vec<(Vec<usize>, usize, i64)>> = level
                .clone()
                .into_par_iter()
                .map(|fi| {
                    let flat = &flats[fi];
                    upper_covers(&flat.containing, &spans[fi - level.start], functionals, m)
                        .into_iter()
                        .map(|(cover, via)| {
                            let first = cover[0];
                            let contributes = flat.containing.first() != Some(&first);
                            (cover, via, if contributes { -flat.mobius } else { 0 })
                        })
                        .collect()
                })
                .collect();
            let mut pending: Vec<Pending> = Vec::new();
            let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
            for (offset, list) in covers.into_iter().enumerate() {
                for (cover, via, contribution) in list {
                    let slot = *seen.entry(cover.clone()).or_insert_with(|| {
                        pending.push(Pending {
                            containing: cover,
                            parent: offset,
                            via,
                            mobius: 0,
                        });
                        pending.len() - 1
                    });
                    pending[slot].mobius += contribution;
                }
            }
            if pending.is_empty() {
                break;
            }
            pending.sort_by(|a, b| a.containing.cmp(&b.containing));
            let new_spans: Vec<Subspace> = pending
                .par_iter()
                .map(|p| spans[p.parent].with_vector(&functionals[p.via]))
                .collect();
            spans = new_spans;
            flats.extend(pending.into_iter().map(|p| Flat {
                containing: p.containing,
                codim: codim + 1,
                mobius: p.mobius,
            }));
            rank_start.push(flats.len());
        }
        let index = flats.iter().enumerate().map(|(i, f)| (f.containing.clone(), i)).collect();
        // stopped early while some flat still has hyperplanes outside it
        let truncated = flats[rank_start[rank_start.len() - 2]..]
            .iter()
            .any(|f| f.containing.len() < m)
            && max_codim.is_some_and(|c| c < d && rank_start.len() - 2 == c);
        IntersectionLattice {
            dim: d,
            num_hyperplanes: m,
            flats,
            rank_start,
            index,
            truncated,
        }
    }

    /// Dimension of the ambient space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.num_hyperplanes
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Whether enumeration stopped at a codimension bound.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    /// Largest codimension reached, the rank of the arrangement when not truncated.
    pub fn rank(&self) -> usize {
        self.rank_start.len() - 2
    }

    pub fn flats_of_codim(&self, codim: usize) -> &[Flat] {
        if codim + 1 >= self.rank_start.len() {
            return &[];
        }
        &self.flats[self.rank_start[codim]..self.rank_start[codim + 1]]
    }

    pub fn flats_per_codim(&self) -> Vec<usize> {
        self.rank_start.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// The flat with exactly this containing set, if it is one.
    pub fn find(&self, containing: &[usize]) -> Option<&Flat> {
        self.index.get(containing).map(|&i| &self.flats[i])
    }

    /// `χ(t) = Σ_x μ(0̂, x) t^{dim x}`.
    pub fn char_poly(&self) -> IntPolynomial {
        self.flats
            .iter()
            .map(|f| IntPolynomial::monomial(f.mobius.into(), self.dim - f.codim))
            .sum()
    }

    /// `Poin(t) = (−t)^ℓ χ(−1/t)` with `ℓ` the ambient dimension.
    pub fn poincare(&self) -> IntPolynomial {
        self.char_poly().reciprocal_alternating(self.dim)
    }

    /// μ recomputed from the definition `Σ_{y ≤ x} μ(0̂, y) = 0` for `x ≠ 0̂`
    /// over the full order relation. Quadratic in the number of flats.
    pub fn mobius_by_order(&self) -> Vec<i64> {
        let mut mu: Vec<i64> = Vec::with_capacity(self.flats.len());
        for (i, x) in self.flats.iter().enumerate() {
            if i == 0 {
                mu.push(1);
                continue;
            }
            let below: i64 = self.flats[..i]
                .iter()
                .zip(&mu)
                .filter(|(y, _)| y.codim < x.codim && y.below(x))
                .map(|(_, m)| m)
                .sum();
            mu.push(-below);
        }
        mu
    }

    pub fn invariants(&self) -> LatticeInvariants {
        let mut profile: Vec<(usize, i64, usize)> = self
            .flats
            .iter()
            .map(|f| (f.codim, f.mobius, f.containing.len()))
            .collect();
        profile.sort_unstable();
        LatticeInvariants {
            flats_per_codim: self.flats_per_codim(),
            profile,
            char_poly: self.char_poly(),
        }
    }
}

/// Upper covers of the flat with containing set `containing` and annihilator
/// `span`, each returned with one hyperplane that generates it.
fn upper_covers(containing: &[usize], span: &Subspace, functionals: &[Vec<Rational>], m: usize) -> Vec<(Vec<usize>, usize)> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut by_direction: HashMap<Vec<Rational>, usize> = HashMap::new();
    let mut inside = containing.iter().peekable();
    for (j, f) in functionals.iter().enumerate().take(m) {
        if inside.peek() == Some(&&j) {
            inside.next();
            continue;
        }
        let r = span.residual(f);
        let lead = r.iter().find(|x| !x.is_zero()).expect("closed containing set").recip();
        let direction: Vec<Rational> = r.iter().map(|x| x * &lead).collect();
        let slot = *by_direction.entry(direction).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[slot].push(j);
    }
    groups
        .into_iter()
        .map(|group| {
            let via = group[0];
            let mut cover: Vec<usize> = containing.iter().copied().chain(group).collect();
            cover.sort_unstable();
            (cover, via)
        })
        .collect()
}
