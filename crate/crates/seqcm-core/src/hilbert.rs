//! Hilbert series of graded quotients: rational form N(t)/(1-t)^n with
//! exact integer arithmetic, Krull dimension, multiplicity, and
//! Hilbert-function evaluation.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{EngineError, Result};
use crate::groebner::{buchberger, initial_module, GroebnerBasis, SubmoduleBasis};
use crate::module::FreeModule;
use crate::monomial::Monomial;
use crate::order::OrderTag;

/// Integer Laurent polynomial in t, keyed by exponent. Twists can push
/// exponents negative.
pub type Laurent = BTreeMap<i64, i64>;

fn laurent_add(a: &mut Laurent, exp: i64, coeff: i64) {
    if coeff == 0 {
        return;
    }
    let entry = a.entry(exp).or_insert(0);
    *entry += coeff;
    if *entry == 0 {
        a.remove(&exp);
    }
}

fn laurent_value_at_one(a: &Laurent) -> i64 {
    a.values().sum()
}

/// Exact division by (1 - t); only valid when the value at t = 1 is zero.
fn laurent_div_one_minus_t(a: &Laurent) -> Laurent {
    debug_assert_eq!(laurent_value_at_one(a), 0);
    let mut out = Laurent::new();
    if a.is_empty() {
        return out;
    }
    let lo = *a.keys().next().unwrap();
    let hi = *a.keys().next_back().unwrap();
    let mut acc = 0i64;
    for e in lo..hi {
        acc += a.get(&e).copied().unwrap_or(0);
        if acc != 0 {
            out.insert(e, acc);
        }
    }
    out
}

/// The Hilbert series of a graded module, as numerator over (1-t)^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Laurent,
    /// Exponent of (1-t) in the denominator; the ambient variable count.
    pub denominator: usize,
}

/// Krull dimension and multiplicity read off a Hilbert series; dim -1
/// encodes the zero module, which carries no multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DimensionMultiplicity {
    pub dim: i32,
    pub e: Option<i64>,
}

impl HilbertSeries {
    pub fn zero(denominator: usize) -> Self {
        HilbertSeries { numerator: Laurent::new(), denominator }
    }

    pub fn from_pairs(pairs: &[(i64, i64)], denominator: usize) -> Self {
        let mut numerator = Laurent::new();
        for (e, c) in pairs {
            laurent_add(&mut numerator, *e, *c);
        }
        HilbertSeries { numerator, denominator }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    pub fn numerator_pairs(&self) -> Vec<(i64, i64)> {
        self.numerator.iter().map(|(e, c)| (*e, *c)).collect()
    }

    pub fn support(&self) -> Option<(i64, i64)> {
        if self.numerator.is_empty() {
            return None;
        }
        Some((
            *self.numerator.keys().next().unwrap(),
            *self.numerator.keys().next_back().unwrap(),
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.denominator != other.denominator {
            return Err(EngineError::Mismatch("series denominators differ".into()));
        }
        let mut numerator = self.numerator.clone();
        for (e, c) in &other.numerator {
            laurent_add(&mut numerator, *e, *c);
        }
        Ok(HilbertSeries { numerator, denominator: self.denominator })
    }

    /// Numerator difference over the shared denominator. Whether the
    /// result is a module series is the caller's claim; `check_nonnegative`
    /// verifies it on a window.
    pub fn subtract(&self, other: &Self) -> Result<Self> {
        if self.denominator != other.denominator {
            return Err(EngineError::Mismatch("series denominators differ".into()));
        }
        let mut numerator = self.numerator.clone();
        for (e, c) in &other.numerator {
            laurent_add(&mut numerator, *e, -*c);
        }
        Ok(HilbertSeries { numerator, denominator: self.denominator })
    }

    /// Coefficient of t^j in the power-series expansion.
    pub fn hf(&self, j: i64) -> i64 {
        let n = self.denominator as i64;
        let mut acc = 0i64;
        for (e, c) in &self.numerator {
            let d = j - e;
            if d < 0 {
                continue;
            }
            if n == 0 {
                if d == 0 {
                    acc += c;
                }
                continue;
            }
            acc += c * binomial(d + n - 1, n - 1);
        }
        acc
    }

    /// Verify the expanded coefficients are non-negative up to the bound.
    pub fn check_nonnegative(&self, bound: i64) -> Result<()> {
        let lo = self.support().map(|(lo, _)| lo).unwrap_or(0);
        for j in lo..=bound {
            if self.hf(j) < 0 {
                return Err(EngineError::InternalInconsistency(format!(
                    "series has negative coefficient {} in degree {}",
                    self.hf(j),
                    j
                )));
            }
        }
        Ok(())
    }

    /// A window comfortably covering the numerator support, used by the
    /// positivity guard and the finite recursion checks.
    pub fn guard_bound(&self) -> i64 {
        match self.support() {
            None => 8,
            Some((lo, hi)) => (hi - lo + self.denominator as i64 + 2).max(8) + hi.max(0),
        }
    }

    /// Cancel all (1-t) factors: returns (reduced numerator, cancelled count).
    fn cancelled(&self) -> (Laurent, usize) {
        let mut num = self.numerator.clone();
        let mut count = 0;
        while !num.is_empty() && laurent_value_at_one(&num) == 0 {
            num = laurent_div_one_minus_t(&num);
            count += 1;
        }
        (num, count)
    }

    /// Equality as rational functions. The fully cancelled form
    /// Q(t)/(1-t)^d with Q(1) != 0 is canonical, so comparing it decides
    /// equality exactly.
    pub fn same_series(&self, other: &Self) -> bool {
        let (na, ca) = self.cancelled();
        let (nb, cb) = other.cancelled();
        if na.is_empty() || nb.is_empty() {
            return na.is_empty() && nb.is_empty();
        }
        let da = self.denominator as i64 - ca as i64;
        let db = other.denominator as i64 - cb as i64;
        da == db && na == nb
    }

    pub fn dim_mult(&self) -> DimensionMultiplicity {
        if self.numerator.is_empty() {
            return DimensionMultiplicity { dim: -1, e: None };
        }
        let (reduced, cancelled) = self.cancelled();
        let dim = self.denominator as i64 - cancelled as i64;
        let e = laurent_value_at_one(&reduced);
        debug_assert!(e > 0, "multiplicity of a module series must be positive");
        DimensionMultiplicity { dim: dim as i32, e: Some(e) }
    }

    /// Truncated multiplicity: e when r equals the dimension, else 0.
    pub fn e_r(&self, r: usize) -> i64 {
        let dm = self.dim_mult();
        if dm.dim == r as i32 {
            dm.e.unwrap_or(0)
        } else {
            0
        }
    }
}

fn binomial(a: i64, b: i64) -> i64 {
    if b < 0 || a < b {
        return 0;
    }
    let mut acc = 1i64;
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

/// Series of the free module itself: sum of t^{twist} over the basis.
pub fn free_series(module: &FreeModule, n: usize) -> HilbertSeries {
    let mut numerator = Laurent::new();
    for t in &module.twists {
        laurent_add(&mut numerator, *t, 1);
    }
    HilbertSeries { numerator, denominator: n }
}

/// Keep only the divisibility-minimal monomials.
pub fn minimalize_monomials(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut sorted = gens;
    sorted.sort_by_key(|m| m.degree());
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|kept| kept.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Split a monomial submodule of a free module into one monomial ideal
/// per basis component.
pub fn monomial_components(basis: &SubmoduleBasis) -> Result<Vec<Vec<Monomial>>> {
    if !basis.is_monomial() {
        return Err(EngineError::Precondition(
            "monomial decomposition of a non-monomial submodule".into(),
        ));
    }
    let mut comps: Vec<Vec<Monomial>> = vec![Vec::new(); basis.module.rank];
    for g in basis.gens() {
        let t = &g.terms()[0];
        comps[t.comp].push(t.mon.clone());
    }
    Ok(comps.into_iter().map(minimalize_monomials).collect())
}

/// Numerator of the Hilbert series of S/I for a monomial ideal, by the
/// pivot-splitting recursion N(I) = N(I + (m)) + t^deg(m) N(I : m).
pub fn hilbert_numerator(gens: &[Monomial], n: usize) -> Laurent {
    let gens = minimalize_monomials(gens.to_vec());
    numerator_rec(&gens, n)
}

fn numerator_rec(gens: &[Monomial], n: usize) -> Laurent {
    if gens.is_empty() {
        let mut one = Laurent::new();
        one.insert(0, 1);
        return one;
    }
    if gens.iter().any(|m| m.is_one()) {
        return Laurent::new();
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens.iter().skip(i + 1).all(|b| a.coprime(b)));
    if coprime {
        // product of (1 - t^deg) over the generators
        let mut acc = Laurent::new();
        acc.insert(0, 1);
        for g in gens {
            let mut next = Laurent::new();
            for (e, c) in &acc {
                laurent_add(&mut next, *e, *c);
                laurent_add(&mut next, *e + g.degree() as i64, -*c);
            }
            acc = next;
        }
        return acc;
    }
    // pivot: the most frequent variable, split at its lowest positive power
    let (pivot_var, _) = (0..n)
        .map(|v| (v, gens.iter().filter(|g| g.exponent(v) > 0).count()))
        .max_by_key(|(v, count)| (*count, n - v))
        .unwrap();
    let k = gens
        .iter()
        .filter(|g| g.exponent(pivot_var) > 0)
        .map(|g| g.exponent(pivot_var))
        .min()
        .unwrap();
    let pivot = Monomial::var_pow(pivot_var, k, n);
    debug_assert!(!gens.iter().any(|g| g.divides(&pivot)), "pivot lies in the ideal");

    let mut plus = gens.to_vec();
    plus.push(pivot.clone());
    let plus = minimalize_monomials(plus);

    let colon = minimalize_monomials(
        gens.iter()
            .map(|g| {
                let mut exps = g.exponents().to_vec();
                exps[pivot_var] = exps[pivot_var].saturating_sub(k);
                Monomial::new(exps)
            })
            .collect(),
    );

    let mut out = numerator_rec(&plus, n);
    for (e, c) in numerator_rec(&colon, n) {
        laurent_add(&mut out, e + k as i64, c);
    }
    out
}

/// Exact Hilbert series of F/U, twists included.
pub fn quotient_series(basis: &SubmoduleBasis) -> HilbertSeries {
    let gb = buchberger(basis, OrderTag::RevlexTop);
    quotient_series_from_gb(&gb)
}

pub fn quotient_series_from_gb(gb: &GroebnerBasis) -> HilbertSeries {
    let init = initial_module(gb);
    let comps = monomial_components(&init).expect("initial module is monomial");
    let mut numerator = Laurent::new();
    for (i, ideal) in comps.iter().enumerate() {
        let twist = gb.module.twists[i];
        for (e, c) in hilbert_numerator(ideal, gb.ring.n) {
            laurent_add(&mut numerator, e + twist, c);
        }
    }
    HilbertSeries { numerator, denominator: gb.ring.n }
}
