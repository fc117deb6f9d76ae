use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use super::partition::{check_same_size, factorial, IntPartition};
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// A partition of `[n] = {1, …, n}` into nonempty blocks.
///
/// Blocks are sorted internally and ordered by size (descending), then by
/// smallest element, so equal set partitions have identical values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

fn canonical_order(blocks: &mut [Vec<usize>]) {
    for b in blocks.iter_mut() {
        b.sort_unstable();
    }
    blocks.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidSetPartition { n, reason };
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(invalid("empty block".into()));
            }
            for &x in b {
                if x == 0 || x > n {
                    return Err(invalid(format!("element {x} outside 1..={n}")));
                }
                if seen[x] {
                    return Err(invalid(format!("element {x} appears twice")));
                }
                seen[x] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&x| !seen[x]) {
            return Err(invalid(format!("element {missing} is not covered")));
        }
        Ok(Self::from_blocks_unchecked(n, blocks))
    }

    pub(crate) fn from_blocks_unchecked(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        canonical_order(&mut blocks);
        SetPartition { n, blocks }
    }

    /// Builds a partition from block labels: `labels[i]` is the block of element `i + 1`.
    pub(crate) fn from_labels(labels: &[usize]) -> Self {
        let k = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l].push(i + 1);
        }
        blocks.retain(|b| !b.is_empty());
        Self::from_blocks_unchecked(labels.len(), blocks)
    }

    /// ε, the partition into singletons (bottom of Π_n).
    pub fn singletons(n: usize) -> Self {
        Self::from_blocks_unchecked(n, (1..=n).map(|i| vec![i]).collect())
    }

    /// The one-block partition (top of Π_n).
    pub fn single_block(n: usize) -> Self {
        let blocks = if n == 0 { Vec::new() } else { vec![(1..=n).collect()] };
        Self::from_blocks_unchecked(n, blocks)
    }

    /// The partition with the single two-element block `{i, j}`.
    pub fn pair(n: usize, i: usize, j: usize) -> Result<Self> {
        let mut blocks = vec![vec![i, j]];
        blocks.extend((1..=n).filter(|&x| x != i && x != j).map(|x| vec![x]));
        Self::new(n, blocks)
    }

    /// The distinguished partition of type μ: consecutive blocks
    /// `{1..μ₁}, {μ₁+1 .. μ₁+μ₂}, …`.
    pub fn distinguished(mu: &IntPartition) -> Self {
        let mut start = 1;
        let blocks = mu
            .parts()
            .iter()
            .map(|&len| {
                let b: Vec<usize> = (start..start + len).collect();
                start += len;
                b
            })
            .collect();
        Self::from_blocks_unchecked(mu.n(), blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The integer partition of block sizes, ᾱ.
    pub fn type_partition(&self) -> IntPartition {
        IntPartition::from_unsorted(self.blocks.iter().map(Vec::len).collect())
    }

    /// `labels[i]` = index of the block containing `i + 1`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (bi, b) in self.blocks.iter().enumerate() {
            for &x in b {
                labels[x - 1] = bi;
            }
        }
        labels
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.blocks.iter().any(|b| b.contains(&i) && b.contains(&j))
    }

    fn check_n(&self, other: &SetPartition) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Common refinement α ∧ β.
    pub fn meet(&self, other: &SetPartition) -> Result<SetPartition> {
        self.check_n(other)?;
        let (a, b) = (self.labels(), other.labels());
        let width = other.blocks.len();
        let mut map = std::collections::HashMap::new();
        let labels: Vec<usize> = a
            .iter()
            .zip(&b)
            .map(|(&x, &y)| {
                let next = map.len();
                *map.entry(x * width + y).or_insert(next)
            })
            .collect();
        Ok(Self::from_labels(&labels))
    }

    /// Finest common coarsening α ∨ β.
    pub fn join(&self, other: &SetPartition) -> Result<SetPartition> {
        self.check_n(other)?;
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for b in self.blocks.iter().chain(&other.blocks) {
            for w in b.windows(2) {
                let (x, y) = (find(&mut parent, w[0] - 1), find(&mut parent, w[1] - 1));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        let labels: Vec<usize> = (0..self.n).map(|i| find(&mut parent, i)).collect();
        Ok(Self::from_labels(&labels))
    }

    /// `self ≼ other`: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        if self.n != other.n {
            return false;
        }
        let labels = other.labels();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&x| labels[x - 1] == labels[b[0] - 1]))
    }

    /// The image `g(α)`.
    pub fn image(&self, g: &Permutation) -> SetPartition {
        assert_eq!(g.degree(), self.n, "permutation degree");
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| g.apply(x)).collect())
            .collect();
        Self::from_blocks_unchecked(self.n, blocks)
    }

    /// Path transpositions `(a₁a₂), (a₂a₃), …` within each block; they generate
    /// the Young subgroup S_α.
    pub fn spanning_transpositions(&self) -> Vec<Permutation> {
        self.blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| Permutation::transposition(self.n, w[0], w[1]).expect("distinct")))
            .collect()
    }

    /// Star transpositions `(a₁a₂), (a₁a₃), …` within each block; an alternative
    /// generating set of S_α.
    pub fn star_transpositions(&self) -> Vec<Permutation> {
        self.blocks
            .iter()
            .flat_map(|b| b[1..].iter().map(|&x| Permutation::transposition(self.n, b[0], x).expect("distinct")))
            .collect()
    }

    /// α_T: connected components of the graph Γ(T) on `[n]` whose edges are the
    /// given transpositions.
    pub fn from_transpositions(n: usize, transpositions: &[Permutation]) -> Result<SetPartition> {
        let mut result = SetPartition::singletons(n);
        for t in transpositions {
            let cycles = t.cycles();
            if t.degree() != n || cycles.len() != 1 || cycles[0].len() != 2 {
                return Err(Error::InvalidPermutation(format!("{t} is not a transposition of S_{n}")));
            }
            result = result.join(&SetPartition::pair(n, cycles[0][0], cycles[0][1])?)?;
        }
        Ok(result)
    }

    /// All of Π_n, sorted.
    pub fn all(n: usize) -> Vec<SetPartition> {
        fn go(i: usize, n: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
            if i == n {
                out.push(SetPartition::from_labels(labels));
                return;
            }
            for l in 0..=max {
                labels.push(l);
                go(i + 1, n, if l == max { max + 1 } else { max }, labels, out);
                labels.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            return vec![SetPartition::singletons(0)];
        }
        go(0, n, 0, &mut Vec::with_capacity(n), &mut out);
        out.sort();
        out
    }
}

/// Number of set partitions of `[n]` of type μ: `n! / ∏_k (k!)^{m_k} m_k!`.
pub fn count_type(n: usize, mu: &IntPartition) -> Result<BigUint> {
    check_same_size(&IntPartition::column(n), mu)?;
    Ok(factorial(n) / mu.wreath_order())
}

/// Every set partition of `[n]` of type μ, canonical and sorted.
pub fn enumerate_type(n: usize, mu: &IntPartition) -> Result<Vec<SetPartition>> {
    check_same_size(&IntPartition::column(n), mu)?;
    // Build blocks in order of their smallest element: the smallest unused
    // element opens a new block whose size is drawn from the remaining parts.
    fn go(
        unused: &[usize],
        sizes: &mut Vec<usize>,
        blocks: &mut Vec<Vec<usize>>,
        n: usize,
        out: &mut Vec<SetPartition>,
    ) {
        let Some((&first, rest)) = unused.split_first() else {
            out.push(SetPartition::from_blocks_unchecked(n, blocks.clone()));
            return;
        };
        let mut tried = Vec::new();
        for si in 0..sizes.len() {
            let size = sizes[si];
            if tried.contains(&size) {
                continue;
            }
            tried.push(size);
            sizes.remove(si);
            for_each_combination(rest, size - 1, &mut |chosen: &[usize]| {
                let mut block = vec![first];
                block.extend_from_slice(chosen);
                let remaining: Vec<usize> = rest.iter().copied().filter(|x| !chosen.contains(x)).collect();
                blocks.push(block);
                go(&remaining, sizes, blocks, n, out);
                blocks.pop();
            });
            sizes.insert(si, size);
        }
    }
    let mut out = Vec::new();
    let elements: Vec<usize> = (1..=n).collect();
    go(&elements, &mut mu.parts().to_vec(), &mut Vec::new(), n, &mut out);
    out.sort();
    Ok(out)
}

/// Calls `f` on every `k`-subset of `items`, in lexicographic order.
pub(crate) fn for_each_combination(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(items: &[usize], k: usize, start: usize, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if chosen.len() == k {
            f(chosen);
            return;
        }
        let need = k - chosen.len();
        for i in start..=items.len().saturating_sub(need) {
            if i >= items.len() {
                break;
            }
            chosen.push(items[i]);
            go(items, k, i + 1, chosen, f);
            chosen.pop();
        }
    }
    go(items, k, 0, &mut Vec::with_capacity(k), f);
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let items: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for_each_combination(&items, k, &mut |c| out.push(c.to_vec()));
    out
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.blocks.serialize(serializer)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{{{}}}", blocks.join("|"))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
