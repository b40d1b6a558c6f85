use super::Partition;

/// Smallest multiple of `n` that is at least `len`.
pub fn normalization_length(len: usize, n: u32) -> usize {
    len.div_ceil(n as usize) * n as usize
}

/// Beta-numbers `lambda_k - k + count` for `k = 1..=count`, strictly decreasing
/// and nonnegative. Requires `count >= lambda.len()`.
pub fn beta_numbers(lambda: &Partition, count: usize) -> Vec<i64> {
    assert!(count >= lambda.len(), "too few beads for {lambda:?}");
    (1..=count)
        .map(|k| lambda.part(k) as i64 - k as i64 + count as i64)
        .collect()
}

/// Inverse of [`beta_numbers`]; the input may be in any order.
pub fn from_beta_numbers(beta: &[i64]) -> Partition {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let count = b.len() as i64;
    Partition::from_unsorted(
        b.iter()
            .enumerate()
            .map(|(k, &x)| (x + k as i64 + 1 - count) as u32)
            .collect(),
    )
}

/// An `n`-core together with the `n`-quotient, component `j` read off the
/// beads on runner `j` (positions congruent to `j` mod `n`) for a bead count
/// that is a multiple of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

/// Bead levels on each runner, each list strictly decreasing.
pub(crate) fn runners(beta: &[i64], n: u32) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new(); n as usize];
    for &b in beta {
        out[b.rem_euclid(n as i64) as usize].push(b.div_euclid(n as i64));
    }
    for r in &mut out {
        r.sort_unstable_by(|x, y| y.cmp(x));
    }
    out
}

fn levels_to_partition(levels: &[i64]) -> Partition {
    let s = levels.len() as i64;
    Partition::from_unsorted(
        levels
            .iter()
            .enumerate()
            .map(|(a, &l)| (l - (s - 1 - a as i64)) as u32)
            .collect(),
    )
}

impl CoreQuotient {
    pub fn of(lambda: &Partition, n: u32) -> Self {
        Self::with_beads(lambda, n, normalization_length(lambda.len(), n))
    }

    /// Same computation with an explicit bead count (must be a multiple of `n`).
    pub fn with_beads(lambda: &Partition, n: u32, count: usize) -> Self {
        assert_eq!(count % n as usize, 0);
        let beta = beta_numbers(lambda, count);
        let runs = runners(&beta, n);
        let quotient = runs.iter().map(|r| levels_to_partition(r)).collect();
        let core_beta: Vec<i64> = runs
            .iter()
            .enumerate()
            .flat_map(|(j, r)| (0..r.len() as i64).map(move |l| l * n as i64 + j as i64))
            .collect();
        CoreQuotient {
            core: from_beta_numbers(&core_beta),
            quotient,
        }
    }

    /// Rebuilds the partition with this core and quotient.
    pub fn rebuild(&self, n: u32) -> Partition {
        let extra = self.quotient.iter().map(|q| q.len()).max().unwrap_or(0);
        let count = normalization_length(self.core.len() + extra * n as usize + n as usize, n);
        let runs = runners(&beta_numbers(&self.core, count), n);
        let beta: Vec<i64> = runs
            .iter()
            .zip(&self.quotient)
            .enumerate()
            .flat_map(|(j, (r, q))| {
                let s = r.len();
                (1..=s).map(move |a| {
                    let level = q.part(a) as i64 + (s - a) as i64;
                    level * n as i64 + j as i64
                })
            })
            .collect();
        from_beta_numbers(&beta)
    }

    /// Total size of the quotient, the number of `n`-ribbons removed.
    pub fn weight(&self) -> usize {
        self.quotient.iter().map(|q| q.size()).sum()
    }
}
