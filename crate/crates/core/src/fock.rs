//! Vectors of the level-one Fock space in the partition basis and the
//! operators acting on them.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{LaurentPoly, RationalLaurentPoly};
use crate::partition::{
    add_node_variants, horizontal_ribbon_strips, horizontal_ribbon_strips_below, node_counts,
    remove_node_variants, revlex_order, Partition,
};
use crate::symfunc::{mn_character, schur_to_h, z_order};
use crate::wedge::{self, partition_to_word, word_to_partition, WedgeVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FockError {
    #[error("expected an integral result, found coefficient {coeff} at {partition}")]
    NonIntegralResult { partition: Partition, coeff: String },
}

/// Finitely supported `Partition -> LaurentPoly`; zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(lambda: Partition) -> Self {
        Self::monomial(lambda, LaurentPoly::one())
    }

    pub fn vacuum() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn monomial(lambda: Partition, c: LaurentPoly) -> Self {
        let mut v = Self::zero();
        v.add_term(lambda, &c);
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, LaurentPoly)>) -> Self {
        let mut v = Self::zero();
        for (p, c) in terms {
            v.add_term(p, &c);
        }
        v
    }

    pub fn add_term(&mut self, lambda: Partition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&lambda) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&lambda);
                }
            }
            None => {
                self.terms.insert(lambda, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FockVector, c: &LaurentPoly) {
        for (p, x) in &other.terms {
            self.add_term(p.clone(), &(x * c));
        }
    }

    pub fn scaled(&self, c: &LaurentPoly) -> FockVector {
        let mut v = FockVector::zero();
        v.add_scaled(self, c);
        v
    }

    pub fn coeff(&self, lambda: &Partition) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
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

    /// Degree `m` homogeneous component.
    pub fn component(&self, m: usize) -> FockVector {
        FockVector {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == m)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies `f` to every basis vector and sums with coefficients.
    pub fn map_linear(&self, mut f: impl FnMut(&Partition) -> FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (p, c) in &self.terms {
            out.add_scaled(&f(p), c);
        }
        out
    }

    pub fn to_wedge(&self) -> WedgeVector {
        let mut out = WedgeVector::zero();
        for (p, c) in &self.terms {
            let w = partition_to_word(p, p.len()).expect("length suffices");
            out.add_term(w, c);
        }
        out
    }

    pub fn from_wedge(w: &WedgeVector) -> FockVector {
        let mut out = FockVector::zero();
        for (word, c) in w.terms() {
            out.add_term(word_to_partition(word).expect("normal form"), c);
        }
        out
    }
}

impl std::ops::Add<&FockVector> for &FockVector {
    type Output = FockVector;
    fn add(self, rhs: &FockVector) -> FockVector {
        let mut v = self.clone();
        v.add_scaled(rhs, &LaurentPoly::one());
        v
    }
}

impl std::ops::Sub<&FockVector> for &FockVector {
    type Output = FockVector;
    fn sub(self, rhs: &FockVector) -> FockVector {
        let mut v = self.clone();
        v.add_scaled(rhs, &-LaurentPoly::one());
        v
    }
}

/// Terms print from the largest partition in reverse lexicographic order.
impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (p, c)) in self.terms.iter().rev().enumerate() {
            let single = c.num_terms() == 1;
            let negative = single && c.terms().next().is_some_and(|(_, x)| x < &BigInt::from(0));
            let shown = if negative { -c } else { c.clone() };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !shown.is_one() {
                if single {
                    write!(f, "{shown}")?;
                } else {
                    write!(f, "({shown})")?;
                }
            }
            write!(f, "|{}>", p.label())?;
        }
        Ok(())
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    partition: Partition,
    poly: LaurentPoly,
}

impl Serialize for FockVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(p, c)| JsonTerm {
            partition: p.clone(),
            poly: c.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for FockVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(d)?;
        Ok(FockVector::from_terms(terms.into_iter().map(|t| (t.partition, t.poly))))
    }
}

/// `f_i |lambda> = sum_mu q^{N_i^r} |mu>` over the ways to add an `i`-node.
pub fn f_action(i: u32, v: &FockVector, n: u32) -> FockVector {
    v.map_linear(|lam| {
        FockVector::from_terms(
            add_node_variants(lam, i, n)
                .into_iter()
                .map(|s| (s.mu, LaurentPoly::q_pow(s.right as i32))),
        )
    })
}

/// `e_i |mu> = sum_lambda q^{-N_i^l} |lambda>` over the ways to remove an
/// `i`-node, the count taken on the smaller partition.
pub fn e_action(i: u32, v: &FockVector, n: u32) -> FockVector {
    v.map_linear(|mu| {
        FockVector::from_terms(
            remove_node_variants(mu, i, n)
                .into_iter()
                .map(|s| (s.lambda, LaurentPoly::q_pow(-s.left as i32))),
        )
    })
}

/// Diagonal weights: `q^{h_i}` acts by `q^{N_i}` and `q^D` by `q^{-N^0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightExponents {
    pub n_i: Vec<i64>,
    pub zero_nodes: usize,
}

pub fn weight_exponents(lambda: &Partition, n: u32) -> WeightExponents {
    let c = node_counts(lambda, n);
    WeightExponents {
        n_i: (0..n).map(|i| c.n_i(i)).collect(),
        zero_nodes: c.zero_nodes,
    }
}

/// Heisenberg generator `B_k` in the partition basis; `B_{-k}` (k > 0)
/// raises the degree by `k n`.
pub fn b_op(k: i32, v: &FockVector, n: u32) -> FockVector {
    FockVector::from_wedge(&wedge::b_action(k, &v.to_wedge(), n))
}

fn strip_coeff(h: usize) -> LaurentPoly {
    let sign = if h.is_multiple_of(2) { 1 } else { -1 };
    LaurentPoly::monomial(BigInt::from(sign), -(h as i32))
}

/// Multiplication by the `q`-analogue of `h_k` of `n`-th powers: the sum over
/// horizontal `n`-ribbon strips of weight `k` with coefficient `(-q^-1)^h`.
pub fn v_op(k: usize, v: &FockVector, n: u32) -> FockVector {
    v.map_linear(|lam| {
        FockVector::from_terms(
            horizontal_ribbon_strips(lam, n, k)
                .into_iter()
                .map(|s| (s.target, strip_coeff(s.h))),
        )
    })
}

/// Adjoint of [`v_op`] for the standard scalar product.
pub fn u_op(k: usize, v: &FockVector, n: u32) -> FockVector {
    v.map_linear(|mu| {
        FockVector::from_terms(
            horizontal_ribbon_strips_below(mu, n, k)
                .into_iter()
                .map(|s| (s.source, strip_coeff(s.h))),
        )
    })
}

type RationalVector = BTreeMap<Partition, RationalLaurentPoly>;

fn add_rational(acc: &mut RationalVector, v: &FockVector, c: &BigRational) {
    for (p, x) in v.terms() {
        let term = x.to_rational().scale(c);
        let slot = acc.entry(p.clone()).or_default();
        *slot += &term;
    }
}

fn integral(acc: RationalVector) -> Result<FockVector, FockError> {
    let mut out = FockVector::zero();
    for (p, c) in acc {
        let c2 = c.to_integral().map_err(|_| FockError::NonIntegralResult {
            partition: p.clone(),
            coeff: c.to_string(),
        })?;
        out.add_term(p, &c2);
    }
    Ok(out)
}

/// `B_{-beta_1} ... B_{-beta_l} v`.
fn b_product(beta: &Partition, v: &FockVector, n: u32) -> FockVector {
    beta.parts()
        .iter()
        .rev()
        .fold(v.clone(), |acc, &b| b_op(-(b as i32), &acc, n))
}

/// `V_k = sum_{rho |- k} B_{-rho} / z_rho`, evaluated through wedges.
pub fn v_op_via_heisenberg(k: usize, v: &FockVector, n: u32) -> Result<FockVector, FockError> {
    let mut acc = RationalVector::new();
    for rho in revlex_order(k) {
        let w = BigRational::new(BigInt::from(1), z_order(&rho));
        add_rational(&mut acc, &b_product(&rho, v, n), &w);
    }
    integral(acc)
}

/// `V_mu = V_{mu_1} ... V_{mu_r}`.
pub fn v_product(mu: &Partition, v: &FockVector, n: u32) -> FockVector {
    mu.parts()
        .iter()
        .rev()
        .fold(v.clone(), |acc, &k| v_op(k as usize, &acc, n))
}

/// `S_alpha = sum_mu kappa_{alpha mu} V_mu`, the inverse Kostka route.
pub fn s_alpha(alpha: &Partition, v: &FockVector, n: u32) -> FockVector {
    let mut out = FockVector::zero();
    for (mu, c) in &schur_to_h(alpha).coeffs {
        out.add_scaled(&v_product(mu, v, n), &LaurentPoly::constant(c.clone()));
    }
    out
}

/// `S_alpha = sum_beta chi^alpha_beta / z_beta B_{-beta}`, through wedges.
pub fn s_alpha_via_characters(
    alpha: &Partition,
    v: &FockVector,
    n: u32,
) -> Result<FockVector, FockError> {
    let mut acc = RationalVector::new();
    for beta in revlex_order(alpha.size()) {
        let chi = mn_character(alpha, &beta).expect("sizes agree");
        if chi == 0 {
            continue;
        }
        let w = BigRational::new(BigInt::from(chi), z_order(&beta));
        add_rational(&mut acc, &b_product(&beta, v, n), &w);
    }
    integral(acc)
}

/// `V_{lambda_1} ... V_{lambda_r} |empty>`.
pub fn psi_q(lambda: &Partition, n: u32) -> FockVector {
    v_product(lambda, &FockVector::vacuum(), n)
}

/// Bilinear pairing with `<lambda|mu> = delta`.
pub fn inner_product(u: &FockVector, v: &FockVector) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (p, c) in u.terms() {
        if let Some(d) = v.terms.get(p) {
            out += &(c * d);
        }
    }
    out
}

thread_local! {
    static BAR_CACHE: RefCell<HashMap<(u32, Partition), FockVector>> = RefCell::new(HashMap::new());
}

/// Bar image of a basis vector, cached per thread.
pub fn bar_basis(lambda: &Partition, n: u32) -> FockVector {
    let key = (n, lambda.clone());
    if let Some(v) = BAR_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let v = FockVector::from_wedge(&wedge::bar_basis(lambda, n));
    BAR_CACHE.with(|c| c.borrow_mut().insert(key, v.clone()));
    v
}

/// Semi-linear bar involution: coefficients `q -> q^-1`, basis vectors
/// replaced by their images.
pub fn bar(v: &FockVector, n: u32) -> FockVector {
    let mut out = FockVector::zero();
    for (p, c) in v.terms() {
        out.add_scaled(&bar_basis(p, n), &c.bar());
    }
    out
}
