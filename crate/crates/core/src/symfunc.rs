//! Symmetric group characters and the Schur-to-complete-homogeneous
//! transition, the two symmetric-function inputs of the plethysm operators.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::{beta_numbers, from_beta_numbers, Partition, PartitionError};

thread_local! {
    static CHARACTERS: RefCell<HashMap<(Partition, Partition), i64>> = RefCell::new(HashMap::new());
}

/// Irreducible character `chi^alpha` evaluated on cycle type `beta`, by
/// Murnaghan–Nakayama: strip border ribbons of length `beta_1` first.
pub fn mn_character(alpha: &Partition, beta: &Partition) -> Result<i64, PartitionError> {
    if alpha.size() != beta.size() {
        return Err(PartitionError::SizeMismatch(alpha.size(), beta.size()));
    }
    Ok(character(alpha, beta.parts()))
}

fn character(alpha: &Partition, cycles: &[u32]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let key = (alpha.clone(), Partition::from_unsorted(cycles.to_vec()));
    if let Some(v) = CHARACTERS.with(|c| c.borrow().get(&key).copied()) {
        return v;
    }
    let beta = beta_numbers(alpha, alpha.len());
    let r = r as i64;
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * character(&from_beta_numbers(&moved), rest);
    }
    CHARACTERS.with(|c| c.borrow_mut().insert(key, total));
    total
}

/// Centralizer order `z_beta = prod_i i^{m_i} m_i!`.
pub fn z_order(beta: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (value, &mult) in beta.multiplicities().iter().enumerate().skip(1) {
        for j in 1..=mult {
            z *= BigInt::from(value) * BigInt::from(j);
        }
    }
    z
}

/// Expansion `s_alpha = sum_mu kappa_{alpha mu} h_mu`; the coefficients are
/// the entries of the inverse Kostka matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HExpansion {
    pub alpha: Partition,
    pub coeffs: BTreeMap<Partition, BigInt>,
}

impl HExpansion {
    pub fn coeff(&self, mu: &Partition) -> BigInt {
        self.coeffs.get(mu).cloned().unwrap_or_default()
    }
}

/// Jacobi–Trudi: `s_alpha = det(h_{alpha_i - i + j})`, expanded over permutations.
pub fn schur_to_h(alpha: &Partition) -> HExpansion {
    let len = alpha.len();
    let mut coeffs: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for perm in (0..len).permutations(len) {
        let mut parts = Vec::with_capacity(len);
        let mut vanishes = false;
        for (i, &j) in perm.iter().enumerate() {
            let d = alpha.part(i + 1) as i64 - i as i64 + j as i64;
            if d < 0 {
                vanishes = true;
                break;
            }
            parts.push(d as u32);
        }
        if vanishes {
            continue;
        }
        let inversions = perm
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        *coeffs.entry(Partition::from_unsorted(parts)).or_default() += sign;
    }
    coeffs.retain(|_, c| !c.is_zero());
    HExpansion {
        alpha: alpha.clone(),
        coeffs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::revlex_order;
    use num_rational::BigRational;

    #[test]
    fn character_examples() {
        for beta in revlex_order(4) {
            assert_eq!(mn_character(&part![4], &beta), Ok(1));
        }
        assert_eq!(mn_character(&part![1, 1], &part![2]), Ok(-1));
        assert_eq!(mn_character(&part![2, 1], &part![1, 1, 1]), Ok(2));
        assert_eq!(mn_character(&part![2, 1], &part![3]), Ok(-1));
        assert_eq!(mn_character(&part![2, 1], &part![2, 1]), Ok(0));
        assert_eq!(mn_character(&part![], &part![]), Ok(1));
        assert!(mn_character(&part![2], &part![1]).is_err());
    }

    #[test]
    fn centralizers() {
        assert_eq!(z_order(&part![1, 1]), BigInt::from(2));
        assert_eq!(z_order(&part![2]), BigInt::from(2));
        assert_eq!(z_order(&part![2, 1, 1]), BigInt::from(4));
        assert_eq!(z_order(&part![]), BigInt::from(1));
        // class sizes r!/z_beta sum to r!
        for r in 0..=7usize {
            let fact: BigInt = (1..=r).map(BigInt::from).product();
            let total: BigRational = revlex_order(r)
                .iter()
                .map(|b| BigRational::new(fact.clone(), z_order(b)))
                .sum();
            assert_eq!(total, BigRational::from_integer(fact));
        }
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(schur_to_h(&part![1]).coeffs, BTreeMap::from([(part![1], 1.into())]));
        assert_eq!(
            schur_to_h(&part![1, 1]).coeffs,
            BTreeMap::from([(part![1, 1], 1.into()), (part![2], (-1).into())])
        );
        assert_eq!(
            schur_to_h(&part![2, 1]).coeffs,
            BTreeMap::from([(part![2, 1], 1.into()), (part![3], (-1).into())])
        );
        assert_eq!(schur_to_h(&part![]).coeffs, BTreeMap::from([(part![], 1.into())]));
    }

    #[test]
    fn column_orthogonality() {
        for r in 0..=6 {
            let ps = revlex_order(r);
            for a in &ps {
                for g in &ps {
                    let s: BigRational = ps
                        .iter()
                        .map(|b| {
                            let x = mn_character(a, b).unwrap() * mn_character(g, b).unwrap();
                            BigRational::new(x.into(), z_order(b))
                        })
                        .sum();
                    let expected = if a == g { 1 } else { 0 };
                    assert_eq!(s, BigRational::from_integer(expected.into()), "{a:?} {g:?}");
                }
            }
        }
    }

    /// Number of semistandard tableaux of shape `shape` and content `content`,
    /// filled value by value as a chain of horizontal strips.
    fn kostka(shape: &Partition, content: &Partition) -> i64 {
        fn rec(cur: &[u32], shape: &Partition, content: &[u32]) -> i64 {
            let Some((&c, rest)) = content.split_first() else {
                return (Partition::from_unsorted(cur.to_vec()) == *shape) as i64;
            };
            let rows = shape.len();
            let mut total = 0;
            let mut add = vec![0u32; rows];
            fn place(
                row: usize,
                left: u32,
                cur: &[u32],
                add: &mut Vec<u32>,
                shape: &Partition,
                rest: &[u32],
                total: &mut i64,
            ) {
                if row == add.len() {
                    if left == 0 {
                        let next: Vec<u32> = cur.iter().zip(add.iter()).map(|(a, b)| a + b).collect();
                        *total += rec(&next, shape, rest);
                    }
                    return;
                }
                // horizontal strip: new row length at most the old length of the row above
                let above = if row == 0 { u32::MAX } else { cur[row - 1] };
                let max = (shape.part(row + 1) - cur[row]).min(above - cur[row]).min(left);
                for a in 0..=max {
                    add[row] = a;
                    place(row + 1, left - a, cur, add, shape, rest, total);
                }
                add[row] = 0;
            }
            place(0, c, cur, &mut add, shape, rest, &mut total);
            total
        }
        rec(&vec![0; shape.len()], shape, content.parts())
    }

    #[test]
    fn inverse_kostka_round_trip() {
        for r in 0..=6 {
            let ps = revlex_order(r);
            let inv: Vec<HExpansion> = ps.iter().map(schur_to_h).collect();
            // sum_mu kappa_{alpha mu} K_{gamma mu} = delta, since h_mu = sum_gamma K_{gamma mu} s_gamma
            for (a, ka) in ps.iter().zip(&inv) {
                for g in &ps {
                    let s: BigInt = ps
                        .iter()
                        .map(|mu| ka.coeff(mu) * BigInt::from(kostka(g, mu)))
                        .sum();
                    assert_eq!(s, BigInt::from((a == g) as i64), "{a:?} {g:?}");
                }
            }
        }
    }

    #[test]
    fn characters_count_standard_tableaux() {
        fn hook_length_count(p: &Partition) -> i64 {
            let conj = p.conjugate();
            let fact: i64 = (1..=p.size() as i64).product();
            let hooks: i64 = p
                .nodes()
                .map(|(r, c)| (p.part(r) as i64 - c as i64) + (conj.part(c) as i64 - r as i64) + 1)
                .product();
            fact / hooks
        }
        for r in 0..=6 {
            let ones = Partition::new(vec![1; r]).unwrap();
            for a in revlex_order(r) {
                assert_eq!(mn_character(&a, &ones).unwrap(), hook_length_count(&a));
                assert_eq!(kostka(&a, &ones), hook_length_count(&a));
            }
        }
    }
}
