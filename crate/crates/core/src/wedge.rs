//! Semi-infinite q-wedges of charge 0.
//!
//! A word `u_{i_1} ∧ ... ∧ u_{i_K} ∧ u_{-K} ∧ u_{-K-1} ∧ ...` is stored by
//! its explicit head `(i_1, ..., i_K)`. Straightening rewrites any head into
//! normally ordered (strictly decreasing) words using the adjacent exchange
//! rule: for `l < m` with `i = (m - l) mod n`,
//!
//! ```text
//! i = 0:  u_l ∧ u_m = -u_m ∧ u_l
//! i > 0:  u_l ∧ u_m = -q^-1 u_m ∧ u_l
//!                     + (q^-2 - 1) sum_t (-q^-1)^t u_{m - s_t} ∧ u_{l + s_t}
//! ```
//!
//! where `s_{2j} = i + jn`, `s_{2j+1} = (j + 1)n` and only terms with
//! `m - s_t > l + s_t` are kept. Adjacent equal indices vanish.
//!
//! The engine inserts letters one at a time from the right into an already
//! normal word and memoizes every insertion. The rule only depends on index
//! differences and residues, so keys are translated by a multiple of `n`
//! before lookup.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::partition::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WedgeError {
    #[error("head length {k} is shorter than the {len} parts of {lambda:?}")]
    KTooSmall { lambda: Partition, k: usize, len: usize },
    #[error("word {0} is not normally ordered")]
    NotNormallyOrdered(WedgeWord),
}

/// Head of a charge-0 semi-infinite wedge; the tail continues with
/// `-K, -K-1, ...` where `K` is the head length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeWord {
    head: Vec<i32>,
}

impl WedgeWord {
    pub fn new(head: Vec<i32>) -> Self {
        WedgeWord { head }
    }

    pub fn head(&self) -> &[i32] {
        &self.head
    }

    /// `sum_k (i_k + k - 1)` over the head.
    pub fn degree(&self) -> i64 {
        self.head
            .iter()
            .enumerate()
            .map(|(k, &i)| i as i64 + k as i64)
            .sum()
    }

    /// Strictly decreasing and strictly above the tail.
    pub fn is_normally_ordered(&self) -> bool {
        let k = self.head.len() as i32;
        self.head.windows(2).all(|w| w[0] > w[1]) && self.head.last().is_none_or(|&x| x > -k)
    }

    /// Drops trailing head entries that coincide with the tail.
    pub fn trimmed(&self) -> WedgeWord {
        let mut head = self.head.clone();
        while let Some(&x) = head.last() {
            if x == -(head.len() as i32) + 1 {
                head.pop();
            } else {
                break;
            }
        }
        WedgeWord { head }
    }

    /// Head padded with tail entries up to length `k` (no-op if longer).
    pub fn extended(&self, k: usize) -> WedgeWord {
        let mut head = self.head.clone();
        while head.len() < k {
            head.push(-(head.len() as i32));
        }
        WedgeWord { head }
    }
}

impl fmt::Display for WedgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u[{},...]", itertools::join(&self.head, ","))
    }
}

impl fmt::Debug for WedgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `i_k = lambda_k - k + 1` for `k = 1..=k`.
pub fn partition_to_word(lambda: &Partition, k: usize) -> Result<WedgeWord, WedgeError> {
    if k < lambda.len() {
        return Err(WedgeError::KTooSmall {
            lambda: lambda.clone(),
            k,
            len: lambda.len(),
        });
    }
    Ok(WedgeWord {
        head: (1..=k)
            .map(|j| lambda.part(j) as i32 - j as i32 + 1)
            .collect(),
    })
}

pub fn word_to_partition(w: &WedgeWord) -> Result<Partition, WedgeError> {
    if !w.is_normally_ordered() {
        return Err(WedgeError::NotNormallyOrdered(w.clone()));
    }
    Ok(Partition::from_unsorted(
        w.head
            .iter()
            .enumerate()
            .map(|(k, &i)| (i + k as i32) as u32)
            .collect(),
    ))
}

/// Finite linear combination of normally ordered, trimmed words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WedgeVector {
    terms: BTreeMap<WedgeWord, LaurentPoly>,
}

impl WedgeVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: WedgeWord) -> Self {
        let mut v = Self::zero();
        v.add_term(w.trimmed(), &LaurentPoly::one());
        v
    }

    pub fn from_partition(lambda: &Partition) -> Self {
        Self::basis(partition_to_word(lambda, lambda.len()).expect("length suffices"))
    }

    /// Adds `c` times a normally ordered word.
    pub fn add_term(&mut self, w: WedgeWord, c: &LaurentPoly) {
        debug_assert!(w.is_normally_ordered());
        let w = w.trimmed();
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None if !c.is_zero() => {
                self.terms.insert(w, c.clone());
            }
            None => {}
        }
    }

    pub fn add_scaled(&mut self, other: &WedgeVector, c: &LaurentPoly) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), &(x * c));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WedgeWord, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &WedgeWord) -> LaurentPoly {
        self.terms.get(&w.trimmed()).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Debug for WedgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(w, c)| (w, c.to_string()))).finish()
    }
}

/// `(h_1, ..., h_L, t, t - 1, ...)`; canonical when strictly decreasing with
/// `h_L > t + 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Semi {
    head: Vec<i32>,
    tail: i32,
}

impl Semi {
    fn first_and_rest(&self) -> (i32, Semi) {
        match self.head.split_first() {
            Some((&x, rest)) => (
                x,
                Semi {
                    head: rest.to_vec(),
                    tail: self.tail,
                },
            ),
            None => (
                self.tail,
                Semi {
                    head: Vec::new(),
                    tail: self.tail - 1,
                },
            ),
        }
    }

    /// Prefix `x`, assumed larger than the current first letter.
    fn prefixed(&self, x: i32) -> Semi {
        if self.head.is_empty() && x == self.tail + 1 {
            Semi {
                head: Vec::new(),
                tail: x,
            }
        } else {
            let mut head = Vec::with_capacity(self.head.len() + 1);
            head.push(x);
            head.extend_from_slice(&self.head);
            Semi {
                head,
                tail: self.tail,
            }
        }
    }

    fn shifted(&self, d: i32) -> Semi {
        Semi {
            head: self.head.iter().map(|x| x + d).collect(),
            tail: self.tail + d,
        }
    }
}

type Expansion = Rc<Vec<(Semi, LaurentPoly)>>;

struct Accumulator(HashMap<Semi, LaurentPoly>);

impl Accumulator {
    fn new() -> Self {
        Accumulator(HashMap::new())
    }

    fn add(&mut self, w: Semi, c: LaurentPoly) {
        use std::collections::hash_map::Entry;
        match self.0.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
        }
    }

    fn finish(self) -> Vec<(Semi, LaurentPoly)> {
        self.0.into_iter().collect()
    }
}

/// Memoized straightening engine for a fixed modulus `n`.
pub struct Straightener {
    n: i32,
    memo: HashMap<(i32, Semi), Expansion>,
    main_coeff: LaurentPoly,
    correction: Vec<LaurentPoly>,
}

impl Straightener {
    pub fn new(n: u32) -> Self {
        assert!(n >= 2, "modulus must be at least 2");
        Straightener {
            n: n as i32,
            memo: HashMap::new(),
            main_coeff: -LaurentPoly::q_pow(-1),
            correction: Vec::new(),
        }
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }

    /// `(q^-2 - 1)(-q^-1)^t`.
    fn correction_coeff(&mut self, t: usize) -> LaurentPoly {
        while self.correction.len() <= t {
            let t = self.correction.len() as i32;
            let sign = if t % 2 == 0 { 1 } else { -1 };
            let c = LaurentPoly::from_terms([
                (-2 - t, BigInt::from(sign)),
                (-t, BigInt::from(-sign)),
            ]);
            self.correction.push(c);
        }
        self.correction[t].clone()
    }

    fn insert(&mut self, x: i32, w: &Semi) -> Expansion {
        let d = self.n * w.tail.div_euclid(self.n);
        if d != 0 {
            let base = self.insert(x - d, &w.shifted(-d));
            return Rc::new(base.iter().map(|(s, c)| (s.shifted(d), c.clone())).collect());
        }
        let key = (x, w.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let result = Rc::new(self.insert_uncached(x, w));
        self.memo.insert(key, result.clone());
        result
    }

    fn insert_uncached(&mut self, x: i32, w: &Semi) -> Vec<(Semi, LaurentPoly)> {
        let (first, rest) = w.first_and_rest();
        if x > first {
            return vec![(w.prefixed(x), LaurentPoly::one())];
        }
        if x == first {
            return Vec::new();
        }
        let (l, m) = (x, first);
        let i = (m - l).rem_euclid(self.n);
        let mut acc = Accumulator::new();
        let main = if i == 0 {
            -LaurentPoly::one()
        } else {
            self.main_coeff.clone()
        };
        for (w2, c2) in self.insert(l, &rest).iter() {
            acc.add(w2.prefixed(m), &main * c2);
        }
        if i != 0 {
            for t in 0.. {
                let s = if t % 2 == 0 {
                    i + (t / 2) as i32 * self.n
                } else {
                    (t / 2 + 1) as i32 * self.n
                };
                let (a, b) = (m - s, l + s);
                if a <= b {
                    break;
                }
                let coeff = self.correction_coeff(t);
                let inner = self.insert(b, &rest);
                for (w2, c2) in inner.iter() {
                    let c = &coeff * c2;
                    for (w3, c3) in self.insert(a, w2).iter() {
                        acc.add(w3.clone(), &c * c3);
                    }
                }
            }
        }
        acc.finish()
    }

    /// Normal form of the charge-0 word with the given head.
    pub fn straighten(&mut self, head: &[i32]) -> WedgeVector {
        let mut current: Vec<(Semi, LaurentPoly)> = vec![(
            Semi {
                head: Vec::new(),
                tail: -(head.len() as i32),
            },
            LaurentPoly::one(),
        )];
        for &x in head.iter().rev() {
            let mut acc = Accumulator::new();
            for (w, c) in &current {
                for (w2, c2) in self.insert(x, w).iter() {
                    acc.add(w2.clone(), c * c2);
                }
            }
            current = acc.finish();
        }
        let mut out = WedgeVector::zero();
        for (w, c) in current {
            debug_assert_eq!(w.tail, -(w.head.len() as i32));
            out.add_term(WedgeWord { head: w.head }, &c);
        }
        out
    }

    /// The Heisenberg generator `B_k`: adds `-k n` to one head entry in all
    /// possible ways. `B_{-k}` (k > 0) raises the degree by `k n`.
    pub fn b_action(&mut self, k: i32, v: &WedgeVector) -> WedgeVector {
        let mut out = WedgeVector::zero();
        if k == 0 {
            return v.clone();
        }
        let shift = -k * self.n;
        for (w, c) in v.terms() {
            let span = w.head().len() + (k.unsigned_abs() as usize + 1) * self.n as usize;
            let base = w.extended(span);
            for j in 0..span {
                let mut head = base.head.clone();
                head[j] += shift;
                let s = self.straighten(&head);
                out.add_scaled(&s, c);
            }
        }
        out
    }
}

thread_local! {
    static ENGINES: RefCell<HashMap<u32, Straightener>> = RefCell::new(HashMap::new());
}

/// Runs `f` with this thread's memoized engine for modulus `n`.
pub fn with_engine<R>(n: u32, f: impl FnOnce(&mut Straightener) -> R) -> R {
    ENGINES.with(|e| {
        let mut map = e.borrow_mut();
        let eng = map.entry(n).or_insert_with(|| Straightener::new(n));
        f(eng)
    })
}

pub fn straighten(head: &[i32], n: u32) -> WedgeVector {
    with_engine(n, |e| e.straighten(head))
}

pub fn b_action(k: i32, v: &WedgeVector, n: u32) -> WedgeVector {
    with_engine(n, |e| e.b_action(k, v))
}

/// Number of pairs `r < s <= k` with `i_r - i_s` not divisible by `n`.
pub fn alpha_exponent(head: &[i32], n: u32) -> i32 {
    let n = n as i32;
    let mut count = 0;
    for r in 0..head.len() {
        for s in r + 1..head.len() {
            if (head[r] - head[s]).rem_euclid(n) != 0 {
                count += 1;
            }
        }
    }
    count
}

/// Image of `|lambda>` under the bar involution, computed with the first
/// `k` wedge factors reversed (`k >= |lambda|`).
pub fn bar_basis_with_k(lambda: &Partition, n: u32, k: usize) -> WedgeVector {
    assert!(k >= lambda.size().max(1), "reversal length too small");
    let mut head = partition_to_word(lambda, k).expect("k >= |lambda| >= len").head;
    let alpha = alpha_exponent(&head, n);
    head.reverse();
    let sign = if (k * (k - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let mut out = WedgeVector::zero();
    out.add_scaled(
        &straighten(&head, n),
        &LaurentPoly::monomial(BigInt::from(sign), alpha),
    );
    out
}

/// Bar image of `|lambda>` with `k = max(|lambda|, 1)`.
pub fn bar_basis(lambda: &Partition, n: u32) -> WedgeVector {
    bar_basis_with_k(lambda, n, lambda.size().max(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::revlex_order;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn w(h: &[i32]) -> WedgeWord {
        WedgeWord::new(h.to_vec())
    }

    #[test]
    fn word_conversions() {
        assert_eq!(partition_to_word(&part![2], 2).unwrap(), w(&[2, -1]));
        assert_eq!(partition_to_word(&part![], 3).unwrap(), w(&[0, -1, -2]));
        assert_eq!(partition_to_word(&part![1, 1], 2).unwrap(), w(&[1, 0]));
        assert!(matches!(
            partition_to_word(&part![1, 1], 1),
            Err(WedgeError::KTooSmall { .. })
        ));
        assert_eq!(word_to_partition(&w(&[2, -1])).unwrap(), part![2]);
        assert_eq!(word_to_partition(&w(&[1, 0])).unwrap(), part![1, 1]);
        assert_eq!(word_to_partition(&w(&[0, -1, -2])).unwrap(), part![]);
        assert!(matches!(
            word_to_partition(&w(&[0, 1])),
            Err(WedgeError::NotNormallyOrdered(_))
        ));
        assert_eq!(w(&[3, 0, -2, -3]).trimmed(), w(&[3, 0]));
        assert_eq!(w(&[2, -1]).to_string(), "u[2,-1,...]");
        for m in 0..=6 {
            for lam in revlex_order(m) {
                let word = partition_to_word(&lam, lam.len() + 2).unwrap();
                assert_eq!(word.degree(), m as i64);
                assert_eq!(word_to_partition(&word).unwrap(), lam);
            }
        }
    }

    #[test]
    fn straighten_examples() {
        let v = straighten(&[0, 1], 2);
        assert_eq!(v.len(), 1);
        assert_eq!(v.coeff(&w(&[1, 0])), p("-q^-1"));

        let v = straighten(&[-1, 2], 2);
        assert_eq!(v.len(), 2);
        assert_eq!(v.coeff(&w(&[2, -1])), p("-q^-1"));
        assert_eq!(v.coeff(&w(&[1, 0])), p("q^-2-1"));

        let v = straighten(&[3, 0], 2);
        assert_eq!(v, WedgeVector::basis(w(&[3, 0])));

        // congruent indices anticommute
        let v = straighten(&[-1, 1], 2);
        assert_eq!(v.coeff(&w(&[1, -1])), p("-1"));
        assert!(straighten(&[1, 1], 3).is_zero());
    }

    #[test]
    fn straighten_preserves_degree_and_is_idempotent() {
        let heads: Vec<Vec<i32>> = vec![
            vec![-3, 2, 0, 4],
            vec![0, 1, 2, 3],
            vec![-2, -1, 5, 1, -4],
            vec![1, -3, 3, -1, 0],
            vec![-5, 3],
        ];
        for n in 2..=4 {
            for h in &heads {
                let deg = WedgeWord::new(h.clone()).degree();
                let v = straighten(h, n);
                for (word, _) in v.terms() {
                    assert!(word.is_normally_ordered());
                    assert_eq!(word.degree(), deg);
                    assert_eq!(straighten(word.head(), n), WedgeVector::basis(word.clone()));
                }
            }
        }
    }

    #[test]
    fn padding_with_tail_is_invisible() {
        for n in 2..=3 {
            let v = straighten(&[-2, 1, 0], n);
            let padded = straighten(&[-2, 1, 0, -3, -4], n);
            assert_eq!(v, padded);
        }
    }

    #[test]
    fn raising_on_vacuum() {
        let vac = WedgeVector::from_partition(&part![]);
        let v = b_action(-1, &vac, 2);
        assert_eq!(v.coeff(&w(&[2])), p("1"));
        assert_eq!(v.coeff(&w(&[1, 0])), p("-q^-1"));
        assert_eq!(v.len(), 2);

        let v = b_action(-1, &vac, 3);
        assert_eq!(v.len(), 3);
        assert_eq!(v.coeff(&w(&[3])), p("1"));
        assert_eq!(v.coeff(&w(&[2, 0])), p("-q^-1"));
        assert_eq!(v.coeff(&w(&[1, 0, -1])), p("q^-2"));

        assert!(b_action(1, &vac, 2).is_zero());
        assert!(b_action(2, &vac, 3).is_zero());
    }

    #[test]
    fn b_action_ignores_deeper_tail_positions() {
        // Contributions from positions beyond the scanned span vanish.
        for n in 2..=3u32 {
            for k in [-2, -1, 1, 2] {
                for m in 0..=4 {
                    for lam in revlex_order(m) {
                        let v = WedgeVector::from_partition(&lam);
                        let got = b_action(k, &v, n);
                        let word = partition_to_word(&lam, lam.len()).unwrap();
                        let span = lam.len() + (k.unsigned_abs() as usize + 3) * n as usize;
                        let base = word.extended(span);
                        let mut wide = WedgeVector::zero();
                        for j in 0..span {
                            let mut h = base.head().to_vec();
                            h[j] -= k * n as i32;
                            wide.add_scaled(&straighten(&h, n), &LaurentPoly::one());
                        }
                        assert_eq!(got, wide, "k={k} n={n} {lam:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn bar_examples() {
        let v = bar_basis(&part![2], 2);
        assert_eq!(v.coeff(&w(&[2])), p("1"));
        assert_eq!(v.coeff(&w(&[1, 0])), p("q-q^-1"));
        assert_eq!(v.len(), 2);
        for n in 2..=4 {
            assert_eq!(bar_basis(&part![1], n), WedgeVector::from_partition(&part![1]));
            assert_eq!(bar_basis(&part![], n), WedgeVector::from_partition(&part![]));
        }
    }

    #[test]
    fn bar_independent_of_reversal_length() {
        for n in 2..=3 {
            for m in 0..=6 {
                for lam in revlex_order(m) {
                    let k = m.max(1);
                    let base = bar_basis_with_k(&lam, n, k);
                    assert_eq!(base, bar_basis_with_k(&lam, n, k + 1), "n={n} {lam:?}");
                    assert_eq!(base, bar_basis_with_k(&lam, n, k + 2), "n={n} {lam:?}");
                }
            }
        }
    }

    #[test]
    fn alpha_counts_index_differences() {
        assert_eq!(alpha_exponent(&[1, -1], 2), 0);
        assert_eq!(alpha_exponent(&[2, -1], 2), 1);
        assert_eq!(alpha_exponent(&[2, 0, -1], 2), 2);
    }
}
