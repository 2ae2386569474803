//! Dense-exponent monomials and the graded reverse lexicographic order.

use std::cmp::Ordering;

use serde::Serialize;

/// A monomial of k[x_1,...,x_n], stored as a dense exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u32,
}

/// An integer weight on the variables, e.g. (0,...,0,-1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    /// The weight (0,...,0,-1) whose initial forms give the partial
    /// revlex submodule.
    pub fn last_var_negative(n: usize) -> Self {
        let mut w = vec![0i64; n];
        w[n - 1] = -1;
        WeightVector(w)
    }
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Monomial { exponents, degree }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exponents: vec![0; n], degree: 0 }
    }

    pub fn var(i: usize, n: usize) -> Self {
        let mut exponents = vec![0; n];
        exponents[i] = 1;
        Monomial { exponents, degree: 1 }
    }

    pub fn var_pow(i: usize, e: u32, n: usize) -> Self {
        let mut exponents = vec![0; n];
        exponents[i] = e;
        Monomial { exponents, degree: e }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a + b)
            .collect();
        Monomial { exponents, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.degree <= other.degree
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient_into(&self, other: &Self) -> Self {
        debug_assert!(self.divides(other));
        let exponents = other
            .exponents
            .iter()
            .zip(&self.exponents)
            .map(|(b, a)| b - a)
            .collect();
        Monomial { exponents, degree: other.degree - self.degree }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let exponents: Vec<u32> = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exponents)
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Drop the last variable; only valid when its exponent is zero.
    pub fn restrict(&self) -> Self {
        debug_assert_eq!(*self.exponents.last().unwrap(), 0);
        Monomial::new(self.exponents[..self.exponents.len() - 1].to_vec())
    }

    /// The dot product of the weight with the exponent vector.
    pub fn weight(&self, omega: &WeightVector) -> i64 {
        debug_assert_eq!(self.nvars(), omega.0.len());
        self.exponents
            .iter()
            .zip(&omega.0)
            .map(|(e, w)| *e as i64 * w)
            .sum()
    }
}

/// Graded reverse lexicographic comparison: higher degree wins; on equal
/// degrees the monomial whose trailing exponents are smaller wins (the
/// last nonzero entry of a - b is negative exactly when a > b).
pub fn revlex_compare(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.nvars(), b.nvars());
    match a.degree.cmp(&b.degree) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.nvars()).rev() {
        match a.exponents[i].cmp(&b.exponents[i]) {
            Ordering::Equal => continue,
            // smaller trailing exponent means greater in revlex
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

/// Plain lexicographic comparison, used to arrange Groebner bases before
/// a syzygy stage.
pub fn lex_compare(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.nvars(), b.nvars());
    for i in 0..a.nvars() {
        match a.exponents[i].cmp(&b.exponents[i]) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// All monomials of the given total degree, in a deterministic order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill(&mut out, &mut current, 0, d, n);
    return out;

    fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, idx: usize, left: u32, n: usize) {
        if idx == n - 1 {
            current[idx] = left;
            out.push(Monomial::new(current.clone()));
            current[idx] = 0;
            return;
        }
        for e in (0..=left).rev() {
            current[idx] = e;
            fill(out, current, idx + 1, left - e, n);
        }
        current[idx] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn revlex_degree_two_chain() {
        // x1^2 > x1 x2 > x2^2 in two variables
        assert_eq!(revlex_compare(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(revlex_compare(&m(&[0, 2]), &m(&[1, 1])), Ordering::Less);
        assert_eq!(revlex_compare(&m(&[1, 1]), &m(&[1, 1])), Ordering::Equal);
    }

    #[test]
    fn weight_of_examples() {
        let w = WeightVector(vec![0, 0, -1]);
        assert_eq!(m(&[1, 1, 0]).weight(&w), 0);
        assert_eq!(m(&[0, 0, 2]).weight(&w), -2);
        assert_eq!(m(&[0, 0, 0]).weight(&w), 0);
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 0, 0]);
        assert!(b.divides(&a));
        assert_eq!(b.quotient_into(&a), m(&[1, 1, 0]));
        assert_eq!(a.lcm(&m(&[0, 2, 1])), m(&[2, 2, 1]));
        assert!(m(&[1, 0, 0]).coprime(&m(&[0, 2, 1])));
    }

    #[test]
    fn degree_enumeration_counts() {
        // binomial(d + n - 1, n - 1)
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(2, 0).len(), 1);
        assert_eq!(monomials_of_degree(1, 5).len(), 1);
    }

    fn arb_monomial(n: usize) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..4, n).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn revlex_total_and_multiplicative(a in arb_monomial(3), b in arb_monomial(3), c in arb_monomial(3)) {
            let ab = revlex_compare(&a, &b);
            prop_assert_eq!(revlex_compare(&b, &a), ab.reverse());
            // multiplication by c preserves the comparison
            prop_assert_eq!(revlex_compare(&a.mul(&c), &b.mul(&c)), ab);
        }

        #[test]
        fn revlex_degree_compatible(a in arb_monomial(4), b in arb_monomial(4)) {
            if a.degree() > b.degree() {
                prop_assert_eq!(revlex_compare(&a, &b), Ordering::Greater);
            }
        }
    }
}
