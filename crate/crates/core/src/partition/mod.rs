//! Integer partitions and the combinatorics attached to Young diagrams:
//! dominance and reverse lexicographic orders, residues of nodes, the
//! abacus (cores and quotients), horizontal ribbon strips and domino
//! tableaux.
//!
//! Nodes are addressed as `(row, col)` with both coordinates starting at 1.
//! The `n`-residue of a node is `(col - row) mod n`.

mod abacus;
mod domino;
mod ribbon;

pub use abacus::{beta_numbers, from_beta_numbers, normalization_length, CoreQuotient};
pub use domino::{two_sign, yamanouchi_domino_tableaux, Domino, DominoTableau};
pub use ribbon::{horizontal_ribbon_strips, horizontal_ribbon_strips_below, RibbonStrip};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partitions have different sizes {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("parts {0:?} are not a weakly decreasing sequence of positive integers")]
    NotPartition(Vec<u32>),
    #[error("{0} has a nonempty 2-core and admits no domino tiling")]
    NotTileable(Partition),
    #[error("domino tilings of {0} disagree on the parity of vertical dominoes")]
    InconsistentSign(Partition),
    #[error("cannot parse partition {0:?}")]
    Parse(String),
}

/// A partition, stored as its weakly decreasing positive parts.
///
/// The derived order is lexicographic on the parts; on partitions of the
/// same size it is the reverse lexicographic order with `(1^m)` smallest.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(PartitionError::NotPartition(parts))
        }
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|c| self.0.iter().take_while(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    /// `self ⊴ other`: every prefix sum of `self` is at most that of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, PartitionError> {
        if self.size() != other.size() {
            return Err(PartitionError::SizeMismatch(self.size(), other.size()));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 1..=len {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Comparison in reverse lexicographic order, largest first: `(m)` is
    /// the minimum of this ordering, as in the row order of printed tables.
    pub fn revlex_cmp(&self, other: &Partition) -> Ordering {
        other.cmp(self)
    }

    /// True iff no part value occurs `n` or more times.
    pub fn is_n_regular(&self, n: u32) -> bool {
        self.0
            .chunk_by(|a, b| a == b)
            .all(|run| run.len() < n as usize)
    }

    /// Multiplicity of each part value, indexed by value (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().map_or(1, |&p| p as usize + 1)];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// Addable ("indent") nodes in increasing row order.
    pub fn addable_nodes(&self) -> Vec<(usize, usize)> {
        (1..=self.len() + 1)
            .filter(|&r| r == 1 || self.part(r - 1) > self.part(r))
            .map(|r| (r, self.part(r) as usize + 1))
            .collect()
    }

    /// Removable nodes in increasing row order.
    pub fn removable_nodes(&self) -> Vec<(usize, usize)> {
        (1..=self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| (r, self.part(r) as usize))
            .collect()
    }

    /// All nodes of the diagram.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p as usize).map(move |c| (r + 1, c)))
    }

    fn with_node_added(&self, row: usize) -> Partition {
        let mut parts = self.0.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Partition(parts)
    }

    fn with_node_removed(&self, row: usize) -> Partition {
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Partition(parts)
    }

    /// Shorthand label used in tables: `211`, or `[10,1]` once a part
    /// exceeds one digit; the empty partition prints as `∅`.
    pub fn label(&self) -> String {
        if self.is_empty() {
            "∅".to_string()
        } else if self.0.iter().all(|&p| p < 10) {
            self.0.iter().map(|p| p.to_string()).collect()
        } else {
            format!("{self:?}")
        }
    }

    /// Parts separated by spaces (`2 1 1`), the row-label style of LaTeX tables.
    pub fn spaced_label(&self) -> String {
        if self.is_empty() {
            "\\emptyset".to_string()
        } else {
            itertools::join(&self.0, " ")
        }
    }
}

/// Residue of node `(row, col)` modulo `n`.
pub fn residue(row: usize, col: usize, n: u32) -> u32 {
    (col as i64 - row as i64).rem_euclid(n as i64) as u32
}

/// All partitions of `m` in reverse lexicographic order, e.g. for `m = 4`:
/// `4, 31, 22, 211, 1111`. This order is a linear extension of dominance.
pub fn revlex_order(m: usize) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m as u32, m as u32, &mut Vec::new(), &mut out);
    out
}

/// Addable/removable node tallies of a partition for each residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeCounts {
    pub indent: Vec<usize>,
    pub removable: Vec<usize>,
    /// Number of nodes of residue 0 in the diagram.
    pub zero_nodes: usize,
}

impl NodeCounts {
    pub fn n_i(&self, i: u32) -> i64 {
        self.indent[i as usize] as i64 - self.removable[i as usize] as i64
    }
}

pub fn node_counts(lambda: &Partition, n: u32) -> NodeCounts {
    let mut indent = vec![0; n as usize];
    let mut removable = vec![0; n as usize];
    for (r, c) in lambda.addable_nodes() {
        indent[residue(r, c, n) as usize] += 1;
    }
    for (r, c) in lambda.removable_nodes() {
        removable[residue(r, c, n) as usize] += 1;
    }
    let zero_nodes = lambda.nodes().filter(|&(r, c)| residue(r, c, n) == 0).count();
    NodeCounts {
        indent,
        removable,
        zero_nodes,
    }
}

/// A pair `lambda ⊂ mu` differing by a single node of residue `i`, with the
/// signed counts (addable minus removable `i`-nodes of `lambda`) strictly to
/// the left and right of that node, measured by column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeStep {
    pub lambda: Partition,
    pub mu: Partition,
    pub node: (usize, usize),
    pub left: i64,
    pub right: i64,
}

fn side_counts(lambda: &Partition, node: (usize, usize), i: u32, n: u32) -> (i64, i64) {
    let (mut left, mut right) = (0i64, 0i64);
    let addable = lambda.addable_nodes().into_iter().map(|x| (x, 1));
    let removable = lambda.removable_nodes().into_iter().map(|x| (x, -1));
    for ((r, c), w) in addable.chain(removable) {
        if (r, c) == node || residue(r, c, n) != i {
            continue;
        }
        match c.cmp(&node.1) {
            Ordering::Less => left += w,
            Ordering::Greater => right += w,
            Ordering::Equal => unreachable!("distinct addable/removable nodes share a column"),
        }
    }
    (left, right)
}

/// Every `mu` obtained from `lambda` by adding one `i`-node.
pub fn add_node_variants(lambda: &Partition, i: u32, n: u32) -> Vec<NodeStep> {
    lambda
        .addable_nodes()
        .into_iter()
        .filter(|&(r, c)| residue(r, c, n) == i)
        .map(|node| {
            let (left, right) = side_counts(lambda, node, i, n);
            NodeStep {
                lambda: lambda.clone(),
                mu: lambda.with_node_added(node.0),
                node,
                left,
                right,
            }
        })
        .collect()
}

/// Every `lambda` obtained from `mu` by removing one `i`-node; side counts
/// are taken with respect to `lambda`.
pub fn remove_node_variants(mu: &Partition, i: u32, n: u32) -> Vec<NodeStep> {
    mu.removable_nodes()
        .into_iter()
        .filter(|&(r, c)| residue(r, c, n) == i)
        .map(|node| {
            let lambda = mu.with_node_removed(node.0);
            let (left, right) = side_counts(&lambda, node, i, n);
            NodeStep {
                lambda,
                mu: mu.clone(),
                node,
                left,
                right,
            }
        })
        .collect()
}

pub fn n_core_quotient(lambda: &Partition, n: u32) -> CoreQuotient {
    CoreQuotient::of(lambda, n)
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", itertools::join(&self.0, ","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `[3,1,1]`, `3,1,1`, the digit shorthand `311`, and `[]`,
    /// `∅` or the empty string for the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PartitionError::Parse(s.to_string());
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = if inner.contains(',') || t.starts_with('[') {
            inner
                .split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| err()))
                .collect::<Result<_, _>>()?
        } else {
            inner
                .chars()
                .map(|c| c.to_digit(10).ok_or_else(err))
                .collect::<Result<_, _>>()?
        };
        Partition::new(parts)
    }
}

/// `Partition` from a literal list of parts; panics if not a partition.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($x),+]).expect("literal partition")
    };
}

#[cfg(test)]
mod tests {
    use super::*;


    #[test]
    fn conjugation() {
        assert_eq!(part![2, 1, 1].conjugate(), part![3, 1]);
        assert_eq!(part![].conjugate(), part![]);
        assert_eq!(part![2, 2].conjugate(), part![2, 2]);
        for m in 0..=10 {
            for p in revlex_order(m) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn dominance() {
        assert!(part![1, 1, 1, 1].dominance_leq(&part![4]).unwrap());
        assert!(!part![3, 1].dominance_leq(&part![2, 2]).unwrap());
        assert!(part![2, 2].dominance_leq(&part![2, 2]).unwrap());
        assert_eq!(
            part![2].dominance_leq(&part![1]),
            Err(PartitionError::SizeMismatch(2, 1))
        );
        // incomparable pair
        assert!(!part![3, 1, 1, 1].dominance_leq(&part![2, 2, 2]).unwrap());
        assert!(!part![2, 2, 2].dominance_leq(&part![3, 1, 1, 1]).unwrap());
    }

    #[test]
    fn dominance_reverses_under_conjugation() {
        for m in 0..=8 {
            let ps = revlex_order(m);
            for a in &ps {
                for b in &ps {
                    assert_eq!(
                        a.dominance_leq(b).unwrap(),
                        b.conjugate().dominance_leq(&a.conjugate()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn revlex_listing() {
        assert_eq!(
            revlex_order(4),
            vec![part![4], part![3, 1], part![2, 2], part![2, 1, 1], part![1, 1, 1, 1]]
        );
        assert_eq!(revlex_order(0), vec![part![]]);
        assert_eq!(revlex_order(3), vec![part![3], part![2, 1], part![1, 1, 1]]);
        let counts: Vec<usize> = (0..=10).map(|m| revlex_order(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn revlex_extends_dominance() {
        for m in 0..=10 {
            let ps = revlex_order(m);
            for (a, x) in ps.iter().enumerate() {
                for y in &ps[a + 1..] {
                    assert!(!x.dominance_leq(y).unwrap(), "{x} ⊴ {y} but listed first");
                    assert_eq!(x.revlex_cmp(y), Ordering::Less);
                }
            }
        }
    }

    #[test]
    fn node_counts_examples() {
        let c = node_counts(&part![], 2);
        assert_eq!((c.indent[0], c.removable[0], c.n_i(0)), (1, 0, 1));
        assert_eq!(c.n_i(1), 0);
        assert_eq!(c.zero_nodes, 0);

        let c = node_counts(&part![1], 2);
        assert_eq!((c.n_i(0), c.n_i(1), c.zero_nodes), (-1, 2, 1));

        assert_eq!(node_counts(&part![2, 1], 2).zero_nodes, 1);
    }

    #[test]
    fn node_counts_sum_to_one() {
        for n in 2..=4 {
            for m in 0..=8 {
                for p in revlex_order(m) {
                    let c = node_counts(&p, n);
                    assert_eq!((0..n).map(|i| c.n_i(i)).sum::<i64>(), 1);
                }
            }
        }
    }

    #[test]
    fn add_node_examples() {
        let v = add_node_variants(&part![1], 1, 2);
        let got: Vec<_> = v.iter().map(|s| (s.mu.clone(), s.right, s.left)).collect();
        assert_eq!(got, vec![(part![2], 0, 1), (part![1, 1], 1, 0)]);
        assert!(add_node_variants(&part![1], 0, 2).is_empty());
        let v = add_node_variants(&part![], 0, 2);
        assert_eq!(v.len(), 1);
        assert_eq!((v[0].mu.clone(), v[0].right, v[0].left), (part![1], 0, 0));
    }

    #[test]
    fn side_counts_match_totals() {
        // N_i(lambda) = N^l + N^r + 1 for the added node itself.
        for n in 2..=3 {
            for m in 0..=7 {
                for p in revlex_order(m) {
                    let c = node_counts(&p, n);
                    for i in 0..n {
                        for step in add_node_variants(&p, i, n) {
                            assert_eq!(step.left + step.right + 1, c.n_i(i));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn remove_variants_invert_add() {
        for n in 2..=3 {
            for m in 0..=6 {
                for p in revlex_order(m) {
                    for i in 0..n {
                        for step in add_node_variants(&p, i, n) {
                            let back = remove_node_variants(&step.mu, i, n);
                            assert!(back.contains(&step));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn regularity() {
        assert!(!part![1, 1].is_n_regular(2));
        assert!(part![2, 1].is_n_regular(2));
        assert!(part![3, 3, 1].is_n_regular(3));
        assert!(part![].is_n_regular(2));
        assert!(!part![2, 2, 2, 1].is_n_regular(3));
    }

    #[test]
    fn parsing() {
        assert_eq!("[3,1,1]".parse::<Partition>().unwrap(), part![3, 1, 1]);
        assert_eq!("311".parse::<Partition>().unwrap(), part![3, 1, 1]);
        assert_eq!("[10,1]".parse::<Partition>().unwrap(), part![10, 1]);
        assert_eq!("[]".parse::<Partition>().unwrap(), part![]);
        assert_eq!("".parse::<Partition>().unwrap(), part![]);
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("1x".parse::<Partition>().is_err());
        assert_eq!(part![10, 1].label(), "[10,1]");
        assert_eq!(part![2, 1, 1].label(), "211");
    }

    #[test]
    fn json_form() {
        assert_eq!(serde_json::to_string(&part![2, 1, 1]).unwrap(), "[2,1,1]");
        let p: Partition = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(p, part![3, 1]);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
        assert!(serde_json::from_str::<Partition>("[2,0]").is_err());
    }
}
