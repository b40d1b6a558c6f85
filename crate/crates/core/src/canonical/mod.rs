//! Bar matrices, the canonical bases `G(mu)` and `G^-(lambda)`, and the
//! transition matrices between them and the standard basis.

mod printed;

pub use printed::{parse_latex_matrix, printed_a, printed_d, printed_d_latex, PrintedTable};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fock::{s_alpha, FockVector};
use crate::laurent::{LaurentError, LaurentPoly};
use crate::partition::{n_core_quotient, revlex_order, two_sign, yamanouchi_domino_tableaux, Partition};
use crate::wedge;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonicalError {
    #[error("bar defect at {at} is not antisymmetric: {source}")]
    NotAntisymmetric {
        at: Partition,
        #[source]
        source: LaurentError,
    },
    #[error("{0} has an {1}-regular conjugate; no Steinberg factorization")]
    NotApplicable(Partition, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MatrixKind {
    /// Bar involution, column `mu` is the image of `|mu>`.
    A,
    /// Column `mu` is `G(mu)`.
    D,
    /// Row `lambda` is `G^-(lambda)`.
    E,
    /// Inverse of `D`; row `lambda` is the adjoint basis vector.
    C,
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for MatrixKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "A" | "a" => Ok(MatrixKind::A),
            "D" | "d" => Ok(MatrixKind::D),
            "E" | "e" => Ok(MatrixKind::E),
            "C" | "c" => Ok(MatrixKind::C),
            _ => Err(format!("unknown matrix kind {s:?} (expected A, D, E or C)")),
        }
    }
}

/// Sparse square matrix indexed by the partitions of `m` in reverse
/// lexicographic order, index 0 being `(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    pub kind: MatrixKind,
    pub n: u32,
    pub m: usize,
    pub order: Vec<Partition>,
    pub entries: BTreeMap<(usize, usize), LaurentPoly>,
}

impl TransitionMatrix {
    pub fn identity(kind: MatrixKind, n: u32, m: usize) -> Self {
        let order = revlex_order(m);
        let entries = (0..order.len()).map(|i| ((i, i), LaurentPoly::one())).collect();
        TransitionMatrix {
            kind,
            n,
            m,
            order,
            entries,
        }
    }

    fn empty(kind: MatrixKind, n: u32, m: usize) -> Self {
        TransitionMatrix {
            kind,
            n,
            m,
            order: revlex_order(m),
            entries: BTreeMap::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.order.iter().position(|x| x == p)
    }

    pub fn get(&self, row: usize, col: usize) -> LaurentPoly {
        self.entries.get(&(row, col)).cloned().unwrap_or_default()
    }

    /// Entry at row `lambda`, column `mu`.
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> LaurentPoly {
        match (self.index_of(lambda), self.index_of(mu)) {
            (Some(i), Some(j)) => self.get(i, j),
            _ => LaurentPoly::zero(),
        }
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly) {
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn column(&self, col: usize) -> FockVector {
        FockVector::from_terms(
            self.entries
                .iter()
                .filter(|((_, j), _)| *j == col)
                .map(|((i, _), c)| (self.order[*i].clone(), c.clone())),
        )
    }

    pub fn row(&self, row: usize) -> FockVector {
        FockVector::from_terms(
            self.entries
                .range((row, 0)..(row + 1, 0))
                .map(|((_, j), c)| (self.order[*j].clone(), c.clone())),
        )
    }

    /// Entrywise `q -> q^-1`.
    pub fn bar_entries(&self) -> TransitionMatrix {
        let mut out = self.clone();
        for c in out.entries.values_mut() {
            *c = c.bar();
        }
        out
    }

    /// Matrix product; the result keeps the kind of `self`.
    pub fn multiply(&self, other: &TransitionMatrix) -> TransitionMatrix {
        assert_eq!(self.order, other.order, "orders differ");
        let mut by_row: BTreeMap<usize, Vec<(usize, &LaurentPoly)>> = BTreeMap::new();
        for ((k, j), c) in &other.entries {
            by_row.entry(*k).or_default().push((*j, c));
        }
        let mut acc: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
        for ((i, k), a) in &self.entries {
            for (j, b) in by_row.get(k).into_iter().flatten() {
                *acc.entry((*i, *j)).or_default() += &(a * *b);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        TransitionMatrix {
            entries: acc,
            ..self.clone()
        }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.len() == self.size()
            && self.entries.iter().all(|((i, j), c)| i == j && c.is_one())
    }

    /// Entries restricted to rows and columns in the block of `core`.
    pub fn restrict_to_core(&self, core: &Partition) -> TransitionMatrix {
        let inside: Vec<bool> = self
            .order
            .iter()
            .map(|p| n_core_quotient(p, self.n).core == *core)
            .collect();
        let mut out = self.clone();
        out.entries.retain(|(i, j), _| inside[*i] && inside[*j]);
        out
    }
}

/// The partitions of `m` grouped by `n`-core, each class in reverse
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub n: u32,
    pub m: usize,
    pub blocks: Vec<(Partition, Vec<Partition>)>,
}

impl BlockDecomposition {
    pub fn of(n: u32, m: usize) -> Self {
        let mut blocks: Vec<(Partition, Vec<Partition>)> = Vec::new();
        for p in revlex_order(m) {
            let core = n_core_quotient(&p, n).core;
            match blocks.iter_mut().find(|(c, _)| *c == core) {
                Some((_, members)) => members.push(p),
                None => blocks.push((core, vec![p])),
            }
        }
        BlockDecomposition { n, m, blocks }
    }

    pub fn block_of(&self, p: &Partition) -> Option<&[Partition]> {
        self.blocks
            .iter()
            .find(|(_, members)| members.contains(p))
            .map(|(_, members)| members.as_slice())
    }
}

/// Bar images of the block members, as columns.
fn bar_block(members: &[Partition], n: u32) -> Vec<FockVector> {
    members
        .iter()
        .map(|mu| FockVector::from_wedge(&wedge::bar_basis(mu, n)))
        .collect()
}

fn assemble(
    kind: MatrixKind,
    n: u32,
    m: usize,
    per_block: Vec<Vec<(Partition, FockVector)>>,
    by_column: bool,
) -> TransitionMatrix {
    let mut out = TransitionMatrix::empty(kind, n, m);
    let index: HashMap<Partition, usize> =
        out.order.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    for block in per_block {
        for (p, v) in block {
            let fixed = index[&p];
            for (q, c) in v.terms() {
                let other = index[q];
                let key = if by_column { (other, fixed) } else { (fixed, other) };
                out.entries.insert(key, c.clone());
            }
        }
    }
    out
}

/// `a_{lambda mu}` with `bar|mu> = sum_lambda a_{lambda mu} |lambda>`.
pub fn a_matrix(n: u32, m: usize) -> TransitionMatrix {
    let blocks = BlockDecomposition::of(n, m).blocks;
    let per_block = blocks
        .par_iter()
        .map(|(_, members)| {
            members
                .iter()
                .cloned()
                .zip(bar_block(members, n))
                .collect::<Vec<_>>()
        })
        .collect();
    assemble(MatrixKind::A, n, m, per_block, true)
}

/// Bar involution applied through the block's own columns.
fn bar_via(columns: &HashMap<Partition, FockVector>, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for (p, c) in v.terms() {
        out.add_scaled(&columns[p], &c.bar());
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Lattice {
    /// Corrections in `qZ[q]`.
    Upper,
    /// Corrections in `q^-1 Z[q^-1]`.
    Lower,
}

/// Bar-invariant basis of a block, one vector per member, congruent to the
/// standard basis modulo the chosen lattice.
fn canonical_block(
    members: &[Partition],
    n: u32,
    lattice: Lattice,
) -> Result<Vec<(Partition, FockVector)>, CanonicalError> {
    let columns: HashMap<Partition, FockVector> =
        members.iter().cloned().zip(bar_block(members, n)).collect();
    let mut basis: HashMap<Partition, FockVector> = HashMap::new();
    let mut out = Vec::with_capacity(members.len());
    for mu in members.iter().rev() {
        let mut v = FockVector::basis(mu.clone());
        loop {
            let delta = &bar_via(&columns, &v) - &v;
            // the revlex-largest defect; its correction only reaches lower terms
            let Some((nu, r)) = delta.terms().next_back() else {
                break;
            };
            let split = r.antisym_split().map_err(|source| CanonicalError::NotAntisymmetric {
                at: nu.clone(),
                source,
            })?;
            let c = match lattice {
                Lattice::Upper => LaurentPoly::from_terms(split),
                Lattice::Lower => -LaurentPoly::from_terms(split.into_iter().map(|(j, x)| (-j, x))),
            };
            let g = basis.get(nu).expect("lower basis vectors come first");
            v.add_scaled(g, &c);
        }
        basis.insert(mu.clone(), v.clone());
        out.push((mu.clone(), v));
    }
    Ok(out)
}

fn canonical_matrix(n: u32, m: usize, lattice: Lattice) -> Result<TransitionMatrix, CanonicalError> {
    let blocks = BlockDecomposition::of(n, m).blocks;
    let per_block = blocks
        .par_iter()
        .map(|(_, members)| canonical_block(members, n, lattice))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match lattice {
        Lattice::Upper => assemble(MatrixKind::D, n, m, per_block, true),
        Lattice::Lower => assemble(MatrixKind::E, n, m, per_block, false),
    })
}

/// `D`: column `mu` holds `G(mu) = sum_lambda d_{lambda mu} |lambda>`.
pub fn canonical_upper(n: u32, m: usize) -> Result<TransitionMatrix, CanonicalError> {
    canonical_matrix(n, m, Lattice::Upper)
}

/// `E`: row `lambda` holds `G^-(lambda) = sum_mu e_{lambda mu} |mu>`.
pub fn canonical_lower(n: u32, m: usize) -> Result<TransitionMatrix, CanonicalError> {
    canonical_matrix(n, m, Lattice::Lower)
}

/// Inverse of a unitriangular `D` by back-substitution.
pub fn adjoint_matrix(d: &TransitionMatrix) -> TransitionMatrix {
    assert_eq!(d.kind, MatrixKind::D, "adjoint_matrix expects a D matrix");
    let size = d.size();
    let mut rows: Vec<Vec<(usize, LaurentPoly)>> = vec![Vec::new(); size];
    for ((i, k), x) in &d.entries {
        if i != k {
            rows[*i].push((*k, x.clone()));
        }
    }
    let mut c = TransitionMatrix::empty(MatrixKind::C, d.n, d.m);
    // nonzero d_{ik} need i >= k, so column j of the inverse is found top-down
    for j in 0..size {
        let mut x: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
        x.insert(j, LaurentPoly::one());
        for (i, row) in rows.iter().enumerate().skip(j + 1) {
            let mut s = LaurentPoly::zero();
            for (k, dik) in row {
                debug_assert!(*k < i, "D is not unitriangular");
                if let Some(xk) = x.get(k) {
                    s -= &(dik * xk);
                }
            }
            if !s.is_zero() {
                x.insert(i, s);
            }
        }
        for (i, v) in x {
            c.entries.insert((i, j), v);
        }
    }
    c
}

/// `c_{lambda mu}(q) = e_{lambda' mu'}(q^-1)` for every entry.
pub fn check_duality(e: &TransitionMatrix, c: &TransitionMatrix) -> bool {
    assert_eq!(e.order, c.order);
    let conj: Vec<usize> = e
        .order
        .iter()
        .map(|p| e.index_of(&p.conjugate()).expect("conjugate has the same size"))
        .collect();
    let size = e.size();
    (0..size).all(|i| (0..size).all(|j| c.get(i, j) == e.get(conj[i], conj[j]).bar()))
}

/// `lambda = mu + n alpha` with `mu'` being `n`-regular.
pub fn steinberg_decomposition(
    lambda: &Partition,
    n: u32,
) -> Result<(Partition, Partition), CanonicalError> {
    let conj = lambda.conjugate();
    let mult = conj.multiplicities();
    let mut mu_conj = Vec::new();
    let mut alpha_conj = Vec::new();
    for (value, &k) in mult.iter().enumerate().skip(1) {
        mu_conj.extend(std::iter::repeat_n(value as u32, k % n as usize));
        alpha_conj.extend(std::iter::repeat_n(value as u32, k / n as usize));
    }
    if alpha_conj.is_empty() {
        return Err(CanonicalError::NotApplicable(lambda.clone(), n));
    }
    let mu = Partition::from_unsorted(mu_conj).conjugate();
    let alpha = Partition::from_unsorted(alpha_conj).conjugate();
    debug_assert!(mu.conjugate().is_n_regular(n));
    debug_assert_eq!(
        (1..=lambda.len())
            .map(|i| mu.part(i) + n * alpha.part(i))
            .collect::<Vec<_>>(),
        lambda.parts()
    );
    Ok((mu, alpha))
}

/// `G^-(lambda) = S_alpha(G^-(mu))`.
pub fn steinberg_g_minus(lambda: &Partition, n: u32) -> Result<FockVector, CanonicalError> {
    let (mu, alpha) = steinberg_decomposition(lambda, n)?;
    let e = canonical_lower(n, mu.size())?;
    let row = e.row(e.index_of(&mu).expect("mu is in its own order"));
    Ok(s_alpha(&alpha, &row, n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominoMismatch {
    pub lambda: Partition,
    pub mu: Partition,
    pub expected: LaurentPoly,
    pub computed: LaurentPoly,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DominoReport {
    pub checked: usize,
    pub mismatches: Vec<DominoMismatch>,
}

impl DominoReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `e_{2 lambda, mu}` for `n = 2` with the signed generating
/// function of Yamanouchi domino tableaux of shape `mu` and weight `lambda`,
/// counted by vertical dominoes.
pub fn domino_theorem_check(m: usize) -> Result<DominoReport, CanonicalError> {
    let mut report = DominoReport::default();
    if m % 2 == 1 {
        return Ok(report);
    }
    let e = canonical_lower(2, m)?;
    for lambda in revlex_order(m / 2) {
        let doubled = Partition::from_unsorted(lambda.parts().iter().map(|x| 2 * x).collect());
        for mu in revlex_order(m) {
            let Ok(sign) = two_sign(&mu) else {
                continue;
            };
            let mut expected = LaurentPoly::zero();
            for t in yamanouchi_domino_tableaux(&mu, &lambda) {
                expected += &LaurentPoly::q_pow(-(t.vertical as i32));
            }
            let expected = expected.scale(&sign.into());
            let computed = e.entry(&doubled, &mu);
            report.checked += 1;
            if expected != computed {
                report.mismatches.push(DominoMismatch {
                    lambda: lambda.clone(),
                    mu,
                    expected,
                    computed,
                });
            }
        }
    }
    Ok(report)
}
