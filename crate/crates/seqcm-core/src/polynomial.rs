//! Homogeneous polynomials over F_p with revlex-sorted term lists.

use std::cmp::Ordering;
use std::fmt;

use crate::field::PolyRing;
use crate::monomial::{revlex_compare, Monomial};

/// A polynomial stored as (coefficient, monomial) pairs, strictly
/// descending in revlex, with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(u32, Monomial)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(ring: &PolyRing, c: u32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Polynomial { terms: vec![(c % ring.p, Monomial::one(ring.n))] }
    }

    pub fn monomial(c: u32, m: Monomial) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Polynomial { terms: vec![(c, m)] }
    }

    pub fn variable(ring: &PolyRing, i: usize) -> Self {
        Polynomial { terms: vec![(1, Monomial::var(i, ring.n))] }
    }

    /// Build from arbitrary (coefficient, monomial) pairs, combining
    /// duplicates and dropping zeros.
    pub fn from_terms(ring: &PolyRing, raw: Vec<(u32, Monomial)>) -> Self {
        let mut terms: Vec<(u32, Monomial)> = Vec::with_capacity(raw.len());
        let mut sorted = raw;
        sorted.sort_by(|a, b| revlex_compare(&b.1, &a.1));
        for (c, m) in sorted {
            let c = c % ring.p;
            if c == 0 {
                continue;
            }
            if let Some(last) = terms.last_mut() {
                if last.1 == m {
                    last.0 = ring.add(last.0, c);
                    if last.0 == 0 {
                        terms.pop();
                    }
                    continue;
                }
            }
            terms.push((c, m));
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(u32, Monomial)] {
        &self.terms
    }

    /// Leading term in revlex.
    pub fn lead(&self) -> Option<&(u32, Monomial)> {
        self.terms.first()
    }

    /// Total degree of the leading term; homogeneous polynomials have all
    /// terms of this degree.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(_, m)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m0)) => {
                let d = m0.degree();
                self.terms.iter().all(|(_, m)| m.degree() == d)
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn add(&self, ring: &PolyRing, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match revlex_compare(&self.terms[i].1, &other.terms[j].1) {
                Ordering::Greater => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ring.add(self.terms[i].0, other.terms[j].0);
                    if c != 0 {
                        terms.push((c, self.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Polynomial { terms }
    }

    pub fn neg(&self, ring: &PolyRing) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(c, m)| (ring.neg(*c), m.clone())).collect(),
        }
    }

    pub fn sub(&self, ring: &PolyRing, other: &Self) -> Self {
        self.add(ring, &other.neg(ring))
    }

    pub fn scale(&self, ring: &PolyRing, c: u32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(a, m)| (ring.mul(*a, c), m.clone())).collect(),
        }
    }

    pub fn mul_term(&self, ring: &PolyRing, c: u32, m: &Monomial) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(a, ma)| (ring.mul(*a, c), ma.mul(m)))
                .collect(),
        }
    }

    pub fn mul(&self, ring: &PolyRing, other: &Self) -> Self {
        let mut acc = Polynomial::zero();
        for (c, m) in &other.terms {
            acc = acc.add(ring, &self.mul_term(ring, *c, m));
        }
        acc
    }

    pub fn pow(&self, ring: &PolyRing, e: u32) -> Self {
        let mut acc = Polynomial::constant(ring, 1);
        for _ in 0..e {
            acc = acc.mul(ring, self);
        }
        acc
    }

    /// Apply the substitution x_i -> sum_j g[i][j] x_j to one monomial.
    pub fn substitute_monomial(ring: &PolyRing, m: &Monomial, g: &[Vec<u32>]) -> Polynomial {
        let mut acc = Polynomial::constant(ring, 1);
        for i in 0..ring.n {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let image = Polynomial::from_terms(
                ring,
                g[i].iter()
                    .enumerate()
                    .map(|(j, c)| (*c, Monomial::var(j, ring.n)))
                    .collect(),
            );
            acc = acc.mul(ring, &image.pow(ring, e));
        }
        acc
    }

    pub fn display(&self, var_names: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (c, m)) in self.terms.iter().enumerate() {
            if idx > 0 {
                out.push_str(" + ");
            }
            let mut factors = Vec::new();
            if *c != 1 || m.is_one() {
                factors.push(c.to_string());
            }
            for i in 0..m.nvars() {
                match m.exponent(i) {
                    0 => {}
                    1 => factors.push(var_names(i)),
                    e => factors.push(format!("{}^{}", var_names(i), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(|i| format!("x{}", i + 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> PolyRing {
        PolyRing::new(2, 101)
    }

    #[test]
    fn canonical_form_combines_duplicates() {
        let r = ring();
        let m = Monomial::new(vec![1, 1]);
        let f = Polynomial::from_terms(&r, vec![(50, m.clone()), (51, m.clone()), (3, Monomial::one(2))]);
        assert_eq!(f.terms().len(), 1); // 50 + 51 = 0 mod 101
        assert!(f.is_homogeneous() == false || f.terms().len() <= 1);
    }

    #[test]
    fn substitution_examples() {
        let r = ring();
        // identity substitution
        let f = Polynomial::monomial(1, Monomial::new(vec![2, 0]));
        let id = vec![vec![1, 0], vec![0, 1]];
        let g = Polynomial::substitute_monomial(&r, &f.terms()[0].1, &id);
        assert_eq!(g, f);
        // x1 -> x1 + x2
        let shear = vec![vec![1, 1], vec![0, 1]];
        let h = Polynomial::substitute_monomial(&r, &Monomial::var(0, 2), &shear);
        assert_eq!(h.terms().len(), 2);
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((1u32..101, prop::collection::vec(0u32..3, 2)), 0..5).prop_map(|ts| {
            let r = PolyRing::new(2, 101);
            Polynomial::from_terms(&r, ts.into_iter().map(|(c, e)| (c, Monomial::new(e))).collect())
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            let r = ring();
            prop_assert_eq!(f.add(&r, &g), g.add(&r, &f));
            prop_assert_eq!(f.mul(&r, &g), g.mul(&r, &f));
            prop_assert_eq!(f.mul(&r, &g.mul(&r, &h)), f.mul(&r, &g).mul(&r, &h));
            let lhs = f.mul(&r, &g.add(&r, &h));
            let rhs = f.mul(&r, &g).add(&r, &f.mul(&r, &h));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
