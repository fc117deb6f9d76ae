use super::partition::{check_same_size, IntPartition};
use crate::error::Result;

/// K_{λμ}: the number of semistandard tableaux of shape λ and content μ.
///
/// Entries `1, 2, …` are placed in turn; the cells holding `i` form a
/// horizontal strip of size `μ_i`, so the count is the number of chains
/// `∅ = ν⁰ ⊂ ν¹ ⊂ … = λ` of horizontal strips.
pub fn kostka(lambda: &IntPartition, mu: &IntPartition) -> Result<u64> {
    check_same_size(lambda, mu)?;
    let shape = lambda.parts();
    let mut current = vec![0; shape.len()];
    Ok(count_chains(shape, mu.parts(), &mut current))
}

fn count_chains(shape: &[usize], content: &[usize], current: &mut Vec<usize>) -> u64 {
    let Some((&strip, rest)) = content.split_first() else {
        return u64::from(current.as_slice() == shape);
    };
    let mut total = 0;
    let before = current.clone();
    add_strip(shape, &before, 0, strip, current, &mut |next| total += count_chains(shape, rest, next));
    total
}

/// Enumerates `next ⊇ before` with `next ⊆ shape`, `|next/before| = remaining`
/// and `next_i ≤ before_{i-1}` (no two new cells in a column).
fn add_strip(
    shape: &[usize],
    before: &[usize],
    row: usize,
    remaining: usize,
    next: &mut Vec<usize>,
    visit: &mut dyn FnMut(&mut Vec<usize>),
) {
    if remaining == 0 {
        let saved: Vec<usize> = next[row..].to_vec();
        next[row..].copy_from_slice(&before[row..]);
        visit(next);
        next[row..].copy_from_slice(&saved);
        return;
    }
    if row == shape.len() {
        return;
    }
    let cap = if row == 0 { shape[0] } else { shape[row].min(before[row - 1]) };
    let room = cap.saturating_sub(before[row]);
    for add in 0..=room.min(remaining) {
        next[row] = before[row] + add;
        add_strip(shape, before, row + 1, remaining - add, next, visit);
    }
    next[row] = before[row];
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPartition {
        s.parse().unwrap()
    }

    /// Fills the diagram cell by cell with every content-respecting value and
    /// counts the fillings that are weakly increasing in rows and strictly in columns.
    fn brute_force(lambda: &IntPartition, mu: &IntPartition) -> u64 {
        fn go(cells: &[(usize, usize)], idx: usize, left: &mut [usize], grid: &mut Vec<Vec<usize>>) -> u64 {
            if idx == cells.len() {
                return 1;
            }
            let (r, c) = cells[idx];
            let mut total = 0;
            for v in 0..left.len() {
                if left[v] == 0 {
                    continue;
                }
                if c > 0 && grid[r][c - 1] > v {
                    continue;
                }
                if r > 0 && grid[r - 1][c] >= v {
                    continue;
                }
                left[v] -= 1;
                grid[r][c] = v;
                total += go(cells, idx + 1, left, grid);
                left[v] += 1;
            }
            total
        }
        let shape = lambda.parts();
        let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
        let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
        go(&cells, 0, &mut mu.parts().to_vec(), &mut grid)
    }

    #[test]
    fn known_values() {
        assert_eq!(kostka(&p("2,1"), &p("1,1,1")).unwrap(), 2);
        assert_eq!(kostka(&p("4,1"), &p("2,1,1,1")).unwrap(), 3);
        for n in 2..=7 {
            let hook = IntPartition::hook(n, 1).unwrap();
            let conj = hook.conjugate();
            assert_eq!(kostka(&hook, &conj).unwrap() as usize, n - 2);
            assert_eq!(kostka(&conj, &conj).unwrap(), 1);
        }
        assert!(kostka(&p("2,1"), &p("2,2")).is_err());
    }

    #[test]
    fn matches_brute_force_and_dominance() {
        for n in 1..=7 {
            let all = IntPartition::all(n);
            for lam in &all {
                for mu in &all {
                    let k = kostka(lam, mu).unwrap();
                    if n <= 6 {
                        assert_eq!(k, brute_force(lam, mu), "{lam} {mu}");
                    }
                    assert_eq!(k > 0, lam.dominates(mu).unwrap(), "{lam} {mu}");
                    if lam == mu {
                        assert_eq!(k, 1);
                    }
                }
                // content (1^n) counts standard tableaux
                let column = IntPartition::column(n);
                assert_eq!(kostka(lam, &column).unwrap() as usize, crate::combinatorics::syt_count(lam));
            }
        }
    }
}
