use std::fmt;

use serde::Serialize;

use super::partition::IntPartition;
use crate::error::{Error, Result};

/// A standard Young tableau: the diagram of `shape` filled with `1..=n`,
/// increasing along rows and down columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StandardTableau {
    shape: IntPartition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = IntPartition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::OutOfRange(format!("tableau rows do not form a diagram: {e}")))?;
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::OutOfRange(format!("tableau entries must be exactly 1..={n}")));
            }
            seen[x] = true;
        }
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::OutOfRange(format!("row {} is not increasing", i + 1)));
            }
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(below, above)| below <= above) {
                return Err(Error::OutOfRange(format!("column strictness fails in row {}", i + 1)));
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &IntPartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|j| self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect())
            .collect()
    }

    /// All standard tableaux of shape λ, in lexicographic order of their rows.
    pub fn all(shape: &IntPartition) -> Vec<StandardTableau> {
        // Place 1..=n one at a time at the end of any row that keeps a diagram.
        fn go(shape: &[usize], rows: &mut Vec<Vec<usize>>, next: usize, n: usize, out: &mut Vec<StandardTableau>) {
            if next > n {
                out.push(StandardTableau {
                    shape: IntPartition::from_unsorted(shape.to_vec()),
                    rows: rows.clone(),
                });
                return;
            }
            for i in 0..shape.len() {
                let len = rows[i].len();
                if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
                    rows[i].push(next);
                    go(shape, rows, next + 1, n, out);
                    rows[i].pop();
                }
            }
        }
        let mut out = Vec::new();
        let mut rows = vec![Vec::new(); shape.len()];
        go(shape.parts(), &mut rows, 1, shape.n(), &mut out);
        out.sort();
        out
    }

    /// τ^min_λ: the numbers 1, 2, … inserted down the first column, then the
    /// second, and so on.
    pub fn min_tableau(shape: &IntPartition) -> StandardTableau {
        let mut rows = vec![Vec::new(); shape.len()];
        let mut next = 1;
        for col in shape.conjugate().parts() {
            for row in rows.iter_mut().take(*col) {
                row.push(next);
                next += 1;
            }
        }
        StandardTableau {
            shape: shape.clone(),
            rows,
        }
    }
}

/// Number of standard tableaux of shape λ by the hook length formula.
pub fn syt_count(shape: &IntPartition) -> usize {
    let conj = shape.conjugate();
    let mut count = super::partition::factorial(shape.n());
    for (i, &len) in shape.parts().iter().enumerate() {
        for j in 0..len {
            let hook = (len - j - 1) + (conj.parts()[j] - i - 1) + 1;
            count /= hook;
        }
    }
    usize::try_from(count).expect("tableau count fits in usize")
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPartition {
        s.parse().unwrap()
    }

    /// Tries every arrangement of 1..=n in the diagram and keeps the standard ones.
    fn brute_force_count(shape: &IntPartition) -> usize {
        let n = shape.n();
        let items: Vec<usize> = (1..=n).collect();
        crate::combinatorics::permutation::Permutation::arrangements_with_sign(&items)
            .into_iter()
            .filter(|(arr, _)| {
                let mut rows = Vec::new();
                let mut start = 0;
                for &len in shape.parts() {
                    rows.push(arr[start..start + len].to_vec());
                    start += len;
                }
                StandardTableau::new(rows).is_ok()
            })
            .count()
    }

    #[test]
    fn hook_formula_examples() {
        assert_eq!(syt_count(&p("4,1")), 4);
        assert_eq!(syt_count(&p("3,2")), 5);
        assert_eq!(syt_count(&p("3,1,1")), 6);
        assert_eq!(syt_count(&p("2,1,1,1")), 4);
        assert_eq!(syt_count(&p("7")), 1);
    }

    #[test]
    fn hook_formula_matches_enumeration() {
        for n in 1..=6 {
            for lam in IntPartition::all(n) {
                let all = StandardTableau::all(&lam);
                assert_eq!(all.len(), syt_count(&lam), "{lam}");
                assert_eq!(brute_force_count(&lam), syt_count(&lam), "{lam}");
                assert!(all.iter().all(|t| StandardTableau::new(t.rows().to_vec()).is_ok()));
            }
        }
    }

    #[test]
    fn min_tableau_fills_columns() {
        assert_eq!(StandardTableau::min_tableau(&IntPartition::column(4)).rows(), &[vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(StandardTableau::min_tableau(&p("4")).rows(), &[vec![1, 2, 3, 4]]);
        let t = StandardTableau::min_tableau(&p("2,2"));
        assert_eq!(t.rows(), &[vec![1, 3], vec![2, 4]]);
        assert_eq!(t.columns(), vec![vec![1, 2], vec![3, 4]]);
    }

    #[test]
    fn rejects_non_standard_fillings() {
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![3, 4], vec![5]]).is_ok());
        assert!(StandardTableau::new(vec![vec![1, 4], vec![2, 3]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(StandardTableau::new(vec![vec![2, 3], vec![1, 4]]).is_err());
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
    }
}
