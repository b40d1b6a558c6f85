//! Domino tilings and domino tableaux of Young diagrams.

use std::collections::BTreeSet;

use super::{n_core_quotient, Partition, PartitionError};

/// A domino given by its top-left cell; vertical dominoes also cover
/// `(row + 1, col)`, horizontal ones `(row, col + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domino {
    pub row: usize,
    pub col: usize,
    pub vertical: bool,
    pub label: u32,
}

impl Domino {
    pub fn cells(&self) -> [(usize, usize); 2] {
        if self.vertical {
            [(self.row, self.col), (self.row + 1, self.col)]
        } else {
            [(self.row, self.col), (self.row, self.col + 1)]
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominoTableau {
    pub shape: Partition,
    pub weight: Partition,
    /// Sorted by position.
    pub dominoes: Vec<Domino>,
    /// Number of vertical dominoes (twice the spin).
    pub vertical: usize,
}

impl DominoTableau {
    /// Labels read column by column from left to right, each column from
    /// bottom to top; a domino is read in the column of its top-left cell.
    pub fn column_reading_word(&self) -> Vec<u32> {
        let mut ds = self.dominoes.clone();
        ds.sort_by(|a, b| a.col.cmp(&b.col).then(b.row.cmp(&a.row)));
        ds.iter().map(|d| d.label).collect()
    }

    /// Yamanouchi condition on the column reading word, scanned from its
    /// end: every suffix has at least as many letters `j` as `j + 1`.
    pub fn is_yamanouchi(&self) -> bool {
        let word = self.column_reading_word();
        is_lattice_word(word.iter().rev().copied())
    }
}

/// Every prefix contains at least as many `j` as `j + 1`, for all `j >= 1`.
pub fn is_lattice_word(word: impl IntoIterator<Item = u32>) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for x in word {
        let x = x as usize;
        if counts.len() <= x {
            counts.resize(x + 1, 0);
        }
        counts[x] += 1;
        if x > 1 && counts[x] > counts[x - 1] {
            return false;
        }
    }
    true
}

/// Ways to place one domino on `shape` staying inside `outer`.
fn domino_additions(shape: &[u32], outer: &Partition) -> Vec<(Vec<u32>, Domino)> {
    let part = |s: &[u32], r: usize| -> u32 {
        if r == 0 {
            u32::MAX
        } else {
            s.get(r - 1).copied().unwrap_or(0)
        }
    };
    let mut out = Vec::new();
    for r in 1..=shape.len() + 1 {
        let len = part(shape, r);
        if part(shape, r - 1) >= len + 2 && outer.part(r) >= len + 2 {
            let mut s = shape.to_vec();
            if r > s.len() {
                s.push(0);
            }
            s[r - 1] += 2;
            let d = Domino {
                row: r,
                col: len as usize + 1,
                vertical: false,
                label: 0,
            };
            out.push((s, d));
        }
        if part(shape, r - 1) > len
            && part(shape, r + 1) == len
            && outer.part(r) > len
            && outer.part(r + 1) > len
        {
            let mut s = shape.to_vec();
            s.resize(s.len().max(r + 1), 0);
            s[r - 1] += 1;
            s[r] += 1;
            let d = Domino {
                row: r,
                col: len as usize + 1,
                vertical: true,
                label: 0,
            };
            out.push((s, d));
        }
    }
    out
}

/// All sets of `count` dominoes extending `inner` to a partition inside
/// `outer`, such that no column receives cells of two different dominoes.
fn strips(inner: &[u32], outer: &Partition, count: usize, label: u32) -> Vec<(Vec<u32>, Vec<Domino>)> {
    let mut seen: BTreeSet<Vec<Domino>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut stack = vec![(inner.to_vec(), Vec::<Domino>::new())];
    while let Some((shape, placed)) = stack.pop() {
        if placed.len() == count {
            let mut key = placed.clone();
            key.sort();
            if seen.insert(key.clone()) {
                out.push((shape, key));
            }
            continue;
        }
        for (next, mut d) in domino_additions(&shape, outer) {
            d.label = label;
            let cols_taken: BTreeSet<usize> = placed
                .iter()
                .flat_map(|p| p.cells().map(|c| c.1))
                .collect();
            let clash = d.cells().iter().any(|c| cols_taken.contains(&c.1));
            if clash {
                continue;
            }
            let mut p = placed.clone();
            p.push(d);
            stack.push((next, p));
        }
    }
    out
}

fn trimmed(shape: &[u32]) -> Partition {
    Partition::from_unsorted(shape.to_vec())
}

/// Semistandard domino tableaux of shape `mu` and weight `lambda` (rows weakly
/// increasing, columns strictly increasing, the label-`j` dominoes forming a
/// horizontal domino strip), whatever their reading word.
pub fn domino_tableaux(mu: &Partition, lambda: &Partition) -> Vec<DominoTableau> {
    let mut out = Vec::new();
    if mu.size() != 2 * lambda.size() {
        return out;
    }
    let mut frontier: Vec<(Vec<u32>, Vec<Domino>)> = vec![(Vec::new(), Vec::new())];
    for (j, &count) in lambda.parts().iter().enumerate() {
        let mut next = Vec::new();
        for (shape, placed) in &frontier {
            for (s, ds) in strips(shape, mu, count as usize, j as u32 + 1) {
                let mut all = placed.clone();
                all.extend(ds);
                next.push((s, all));
            }
        }
        frontier = next;
    }
    for (shape, mut dominoes) in frontier {
        if trimmed(&shape) != *mu {
            continue;
        }
        dominoes.sort();
        let vertical = dominoes.iter().filter(|d| d.vertical).count();
        out.push(DominoTableau {
            shape: mu.clone(),
            weight: lambda.clone(),
            dominoes,
            vertical,
        });
    }
    out
}

/// Domino tableaux of shape `mu` and weight `lambda` with a Yamanouchi
/// column reading word.
pub fn yamanouchi_domino_tableaux(mu: &Partition, lambda: &Partition) -> Vec<DominoTableau> {
    domino_tableaux(mu, lambda)
        .into_iter()
        .filter(DominoTableau::is_yamanouchi)
        .collect()
}

/// All domino tilings of `mu`, each as its list of dominoes (labels 0).
pub fn domino_tilings(mu: &Partition) -> Vec<Vec<Domino>> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![(Vec::<u32>::new(), Vec::<Domino>::new())];
    while let Some((shape, placed)) = stack.pop() {
        if trimmed(&shape) == *mu {
            let mut key = placed;
            key.sort();
            seen.insert(key);
            continue;
        }
        for (next, d) in domino_additions(&shape, mu) {
            let mut p = placed.clone();
            p.push(d);
            stack.push((next, p));
        }
    }
    seen.into_iter().collect()
}

/// `(-1)^v` for `v` the number of vertical dominoes in any domino tiling.
pub fn two_sign(mu: &Partition) -> Result<i32, PartitionError> {
    if !n_core_quotient(mu, 2).core.is_empty() {
        return Err(PartitionError::NotTileable(mu.clone()));
    }
    let parities: BTreeSet<usize> = domino_tilings(mu)
        .iter()
        .map(|t| t.iter().filter(|d| d.vertical).count() % 2)
        .collect();
    match parities.into_iter().collect::<Vec<_>>().as_slice() {
        [0] => Ok(1),
        [1] => Ok(-1),
        _ => Err(PartitionError::InconsistentSign(mu.clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::revlex_order;

    #[test]
    fn yamanouchi_small_shapes() {
        let t = yamanouchi_domino_tableaux(&part![1, 1], &part![1]);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].vertical, 1);

        let t = yamanouchi_domino_tableaux(&part![2], &part![1]);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].vertical, 0);

        // two dominoes labelled 1 on a 2x2 square must stand side by side
        let t = yamanouchi_domino_tableaux(&part![2, 2], &part![2]);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].vertical, 2);

        // weight (1,1): both tilings are tableaux, only the horizontal one is Yamanouchi
        assert_eq!(domino_tableaux(&part![2, 2], &part![1, 1]).len(), 2);
        let t = yamanouchi_domino_tableaux(&part![2, 2], &part![1, 1]);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].vertical, 0);
    }

    #[test]
    fn lattice_words() {
        assert!(is_lattice_word([1, 1, 2, 3, 2]));
        assert!(!is_lattice_word([2, 1]));
        assert!(!is_lattice_word([1, 2, 2]));
        assert!(is_lattice_word([]));
    }

    #[test]
    fn tableau_rows_and_columns() {
        for m in 1..=4 {
            for lam in revlex_order(m) {
                for mu in revlex_order(2 * m) {
                    for t in domino_tableaux(&mu, &lam) {
                        let mut grid = vec![vec![0u32; mu.part(1) as usize + 1]; mu.len() + 1];
                        for d in &t.dominoes {
                            for (r, c) in d.cells() {
                                assert_eq!(grid[r][c], 0, "overlap");
                                grid[r][c] = d.label;
                            }
                        }
                        for (r, c) in mu.nodes() {
                            assert!(grid[r][c] > 0);
                            if c > 1 {
                                assert!(grid[r][c - 1] <= grid[r][c]);
                            }
                        }
                        let weight: Vec<u32> = (1..=lam.len() as u32)
                            .map(|j| t.dominoes.iter().filter(|d| d.label == j).count() as u32)
                            .collect();
                        assert_eq!(Partition::new(weight).unwrap(), lam);
                    }
                }
            }
        }
    }

    #[test]
    fn two_signs() {
        assert_eq!(two_sign(&part![2]), Ok(1));
        assert_eq!(two_sign(&part![1, 1]), Ok(-1));
        assert_eq!(two_sign(&part![2, 2]), Ok(1));
        assert!(matches!(two_sign(&part![2, 1]), Err(PartitionError::NotTileable(_))));
        assert_eq!(domino_tilings(&part![2, 2]).len(), 2);
        for m in (0..=10).step_by(2) {
            for mu in revlex_order(m) {
                if n_core_quotient(&mu, 2).core.is_empty() {
                    assert!(two_sign(&mu).is_ok(), "{mu:?}");
                }
            }
        }
    }
}
