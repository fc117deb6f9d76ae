use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};

/// An integer partition λ ⊢ n: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IntPartition {
    parts: Vec<usize>,
}

impl IntPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ParseError> {
        if parts.contains(&0) {
            return Err(ParseError::Partition(format!("{parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ParseError::NotDecreasing(parts));
        }
        Ok(IntPartition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition { parts }
    }

    /// `(n)`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        IntPartition { parts: vec![1; n] }
    }

    /// The hook `(n-k, 1^k)`.
    pub fn hook(n: usize, k: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::OutOfRange(format!("hook (n-k,1^k) needs k < n, got n={n}, k={k}")));
        }
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat_n(1, k));
        Ok(IntPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The transposed diagram λ′.
    pub fn conjugate(&self) -> IntPartition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        IntPartition { parts }
    }

    /// `λ ⊵ μ` in dominance order.
    pub fn dominates(&self, other: &IntPartition) -> Result<bool> {
        check_same_size(self, other)?;
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(m_1, m_2, …)` with `m_k` the number of parts equal to `k`, indexed from 1.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().copied().unwrap_or(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Trivial shapes `(n)` and `(1^n)`, whose representations are one-dimensional.
    pub fn is_trivial(&self) -> bool {
        self.len() <= 1 || self.parts[0] == 1
    }

    /// Every partition of `n`, in reverse lexicographic order: `(n)` first, `(1^n)` last.
    pub fn all(n: usize) -> Vec<IntPartition> {
        fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
            if remaining == 0 {
                out.push(IntPartition { parts: prefix.clone() });
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                prefix.push(p);
                go(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Size of the stabilizer of a set partition of this type:
    /// `∏_k (k!)^{m_k} m_k!`.
    pub fn wreath_order(&self) -> BigUint {
        self.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .fold(BigUint::from(1u8), |acc, (k, &m)| {
                acc * factorial(k).pow(m as u32) * factorial(m)
            })
    }
}

pub(crate) fn check_same_size(a: &IntPartition, b: &IntPartition) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u8), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

impl FromStr for IntPartition {
    type Err = ParseError;

    /// Comma-separated parts, e.g. `"3,1,1"`; brackets are tolerated.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let trimmed = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if trimmed.is_empty() {
            return Err(ParseError::Partition(s.to_string()));
        }
        let parts = trimmed
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| ParseError::Partition(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        IntPartition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for IntPartition {
    type Error = ParseError;
    fn try_from(parts: Vec<usize>) -> Result<Self, ParseError> {
        IntPartition::new(parts)
    }
}

impl From<IntPartition> for Vec<usize> {
    fn from(p: IntPartition) -> Self {
        p.parts
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
