//! Horizontal `n`-ribbon strips through the abacus.
//!
//! `mu / lambda` is a horizontal `n`-ribbon strip of weight `k` exactly when
//! the two partitions share an `n`-core and, runner by runner, every bead
//! moves up without reaching the old position of the bead above it (each
//! quotient component grows by a horizontal strip), with `k` runner steps in
//! total. The height statistic `h` is the number of beads crossed when the
//! moves are carried out one runner step at a time, lowest bead first; for
//! `n = 2` it counts vertical dominoes.

use std::collections::BTreeSet;

use super::abacus::{beta_numbers, from_beta_numbers, normalization_length, runners};
use super::Partition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonStrip {
    pub source: Partition,
    pub target: Partition,
    pub n: u32,
    pub weight: usize,
    /// Sum over the ribbons of (height - 1).
    pub h: usize,
}

/// Crossing count of a set of bead moves `(from, to)` applied to `beads`.
/// Moves are split into single runner steps, always advancing the lowest
/// bead that has not arrived; each step adds one ribbon whose height minus
/// one is the number of beads it jumps over.
fn crossings(beads: &[i64], moves: &mut [(i64, i64)], n: u32) -> usize {
    let n = n as i64;
    let mut occupied: BTreeSet<i64> = beads.iter().copied().collect();
    let mut h = 0;
    while let Some(mv) = moves
        .iter_mut()
        .filter(|(from, to)| from < to)
        .min_by_key(|(from, _)| *from)
    {
        let from = mv.0;
        h += occupied.range(from + 1..from + n).count();
        occupied.remove(&from);
        occupied.insert(from + n);
        mv.0 += n;
    }
    h
}

/// Enumerates the ways to raise the beads of each runner, `budget` steps in
/// total, keeping every new level strictly below the old level of the bead
/// above it. `levels[j]` is strictly decreasing.
fn raise_beads(levels: &[Vec<i64>], budget: usize) -> Vec<Vec<Vec<i64>>> {
    fn rec(
        levels: &[Vec<i64>],
        runner: usize,
        bead: usize,
        budget: usize,
        cur: &mut Vec<Vec<i64>>,
        out: &mut Vec<Vec<Vec<i64>>>,
    ) {
        if runner == levels.len() {
            if budget == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if bead == levels[runner].len() {
            rec(levels, runner + 1, 0, budget, cur, out);
            return;
        }
        let x = levels[runner][bead];
        let cap = if bead == 0 {
            budget as i64
        } else {
            (levels[runner][bead - 1] - 1 - x).min(budget as i64)
        };
        for step in 0..=cap {
            cur[runner].push(x + step);
            rec(levels, runner, bead + 1, budget - step as usize, cur, out);
            cur[runner].pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![Vec::new(); levels.len()];
    rec(levels, 0, 0, budget, &mut cur, &mut out);
    out
}

/// Lowering counterpart of [`raise_beads`]: each bead moves down but stays
/// strictly above the old level of the bead below it (or at level >= 0).
fn lower_beads(levels: &[Vec<i64>], budget: usize) -> Vec<Vec<Vec<i64>>> {
    fn rec(
        levels: &[Vec<i64>],
        runner: usize,
        bead: usize,
        budget: usize,
        cur: &mut Vec<Vec<i64>>,
        out: &mut Vec<Vec<Vec<i64>>>,
    ) {
        if runner == levels.len() {
            if budget == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if bead == levels[runner].len() {
            rec(levels, runner + 1, 0, budget, cur, out);
            return;
        }
        let y = levels[runner][bead];
        let floor = levels[runner].get(bead + 1).copied().unwrap_or(-1) + 1;
        let cap = (y - floor).min(budget as i64);
        for step in 0..=cap {
            cur[runner].push(y - step);
            rec(levels, runner, bead + 1, budget - step as usize, cur, out);
            cur[runner].pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![Vec::new(); levels.len()];
    rec(levels, 0, 0, budget, &mut cur, &mut out);
    out
}

fn positions(levels: &[Vec<i64>], n: u32) -> Vec<(i64, usize, usize)> {
    levels
        .iter()
        .enumerate()
        .flat_map(|(j, r)| {
            r.iter()
                .enumerate()
                .map(move |(a, &l)| (l * n as i64 + j as i64, j, a))
        })
        .collect()
}

fn strip_from_moves(
    lower: &[Vec<i64>],
    upper: &[Vec<i64>],
    n: u32,
    k: usize,
) -> RibbonStrip {
    let start = positions(lower, n);
    let beads: Vec<i64> = start.iter().map(|p| p.0).collect();
    let mut moves: Vec<(i64, i64)> = start
        .iter()
        .map(|&(p, j, a)| (p, upper[j][a] * n as i64 + j as i64))
        .filter(|(a, b)| a != b)
        .collect();
    let h = crossings(&beads, &mut moves, n);
    let target: Vec<i64> = positions(upper, n).iter().map(|p| p.0).collect();
    RibbonStrip {
        source: from_beta_numbers(&beads),
        target: from_beta_numbers(&target),
        n,
        weight: k,
        h,
    }
}

/// All `mu` such that `mu / lambda` is a horizontal `n`-ribbon strip of
/// weight `k`, with their height statistics.
pub fn horizontal_ribbon_strips(lambda: &Partition, n: u32, k: usize) -> Vec<RibbonStrip> {
    let count = normalization_length(lambda.len() + n as usize * k, n);
    let levels = runners(&beta_numbers(lambda, count), n);
    raise_beads(&levels, k)
        .into_iter()
        .map(|upper| strip_from_moves(&levels, &upper, n, k))
        .collect()
}

/// All `lambda` such that `mu / lambda` is a horizontal `n`-ribbon strip of
/// weight `k`.
pub fn horizontal_ribbon_strips_below(mu: &Partition, n: u32, k: usize) -> Vec<RibbonStrip> {
    let count = normalization_length(mu.len(), n);
    let levels = runners(&beta_numbers(mu, count), n);
    lower_beads(&levels, k)
        .into_iter()
        .map(|lower| strip_from_moves(&lower, &levels, n, k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::revlex_order;

    fn summary(v: &[RibbonStrip]) -> Vec<(Partition, usize)> {
        let mut out: Vec<_> = v.iter().map(|s| (s.target.clone(), s.h)).collect();
        out.sort_by(|a, b| a.0.revlex_cmp(&b.0));
        out
    }

    #[test]
    fn single_ribbons_from_empty() {
        assert_eq!(
            summary(&horizontal_ribbon_strips(&part![], 2, 1)),
            vec![(part![2], 0), (part![1, 1], 1)]
        );
        assert_eq!(
            summary(&horizontal_ribbon_strips(&part![], 2, 0)),
            vec![(part![], 0)]
        );
        assert_eq!(
            summary(&horizontal_ribbon_strips(&part![], 3, 1)),
            vec![(part![3], 0), (part![2, 1], 1), (part![1, 1, 1], 2)]
        );
    }

    #[test]
    fn weight_two_dominoes() {
        assert_eq!(
            summary(&horizontal_ribbon_strips(&part![], 2, 2)),
            vec![(part![4], 0), (part![3, 1], 1), (part![2, 2], 2)]
        );
    }

    #[test]
    fn below_is_the_transpose_of_above() {
        for n in 2..=3 {
            for k in 0..=3 {
                for m in 0..=6 {
                    for lam in revlex_order(m) {
                        for s in horizontal_ribbon_strips(&lam, n, k) {
                            assert_eq!(s.source, lam);
                            assert_eq!(s.target.size(), lam.size() + n as usize * k);
                            assert!(s.h <= k * (n as usize - 1));
                            let back = horizontal_ribbon_strips_below(&s.target, n, k);
                            assert!(back.contains(&s), "{s:?}");
                        }
                    }
                }
            }
        }
    }
}
