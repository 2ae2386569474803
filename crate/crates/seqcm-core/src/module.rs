//! Graded free modules with twists and their homogeneous elements.
//!
//! A free module F = ⊕ S(-t_i)·e_i is described by its rank and the twist
//! vector; the i-th basis element has degree t_i, so the degree of a term
//! m·e_i is deg(m) + t_i.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::field::PolyRing;
use crate::monomial::{revlex_compare, Monomial};
use crate::polynomial::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreeModule {
    pub rank: usize,
    /// Degree of each basis element.
    pub twists: Vec<i64>,
}

impl FreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        assert!(!twists.is_empty(), "free module needs positive rank");
        FreeModule { rank: twists.len(), twists }
    }

    pub fn standard(rank: usize) -> Self {
        Self::new(vec![0; rank])
    }

    /// Hom(F, S): same rank, negated twists.
    pub fn dual(&self) -> Self {
        Self::new(self.twists.iter().map(|t| -t).collect())
    }
}

/// One term of a free-module element: coefficient, monomial, component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModTerm {
    pub coeff: u32,
    pub mon: Monomial,
    pub comp: usize,
}

impl ModTerm {
    pub fn twisted_degree(&self, module: &FreeModule) -> i64 {
        self.mon.degree() as i64 + module.twists[self.comp]
    }
}

/// Structural term comparison used for canonical storage: revlex on the
/// monomial, then smaller component first. Every element keeps its terms
/// strictly descending in this order.
pub fn canonical_term_cmp(a: &ModTerm, b: &ModTerm) -> Ordering {
    match revlex_compare(&a.mon, &b.mon) {
        Ordering::Equal => b.comp.cmp(&a.comp),
        ord => ord,
    }
}

/// A homogeneous element of a graded free module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorElement {
    terms: Vec<ModTerm>,
}

impl VectorElement {
    pub fn zero() -> Self {
        VectorElement { terms: Vec::new() }
    }

    pub fn basis(comp: usize, n: usize) -> Self {
        VectorElement { terms: vec![ModTerm { coeff: 1, mon: Monomial::one(n), comp }] }
    }

    pub fn term(coeff: u32, mon: Monomial, comp: usize) -> Self {
        if coeff == 0 {
            return Self::zero();
        }
        VectorElement { terms: vec![ModTerm { coeff, mon, comp }] }
    }

    pub fn from_terms(ring: &PolyRing, raw: Vec<ModTerm>) -> Self {
        let mut sorted = raw;
        sorted.sort_by(|a, b| canonical_term_cmp(b, a));
        let mut terms: Vec<ModTerm> = Vec::with_capacity(sorted.len());
        for t in sorted {
            let c = t.coeff % ring.p;
            if c == 0 {
                continue;
            }
            if let Some(last) = terms.last_mut() {
                if last.mon == t.mon && last.comp == t.comp {
                    last.coeff = ring.add(last.coeff, c);
                    if last.coeff == 0 {
                        terms.pop();
                    }
                    continue;
                }
            }
            terms.push(ModTerm { coeff: c, ..t });
        }
        VectorElement { terms }
    }

    /// Assemble from one polynomial per component.
    pub fn from_polynomials(ring: &PolyRing, polys: &[Polynomial]) -> Self {
        let mut raw = Vec::new();
        for (comp, poly) in polys.iter().enumerate() {
            for (c, m) in poly.terms() {
                raw.push(ModTerm { coeff: *c, mon: m.clone(), comp });
            }
        }
        Self::from_terms(ring, raw)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[ModTerm] {
        &self.terms
    }

    /// The polynomial sitting in one component.
    pub fn component(&self, ring: &PolyRing, comp: usize) -> Polynomial {
        Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .filter(|t| t.comp == comp)
                .map(|t| (t.coeff, t.mon.clone()))
                .collect(),
        )
    }

    pub fn twisted_degree(&self, module: &FreeModule) -> Option<i64> {
        self.terms.first().map(|t| t.twisted_degree(module))
    }

    pub fn is_homogeneous(&self, module: &FreeModule) -> bool {
        match self.terms.first() {
            None => true,
            Some(t0) => {
                let d = t0.twisted_degree(module);
                self.terms.iter().all(|t| t.twisted_degree(module) == d)
            }
        }
    }

    pub fn add(&self, ring: &PolyRing, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match canonical_term_cmp(&self.terms[i], &other.terms[j]) {
                Ordering::Greater => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ring.add(self.terms[i].coeff, other.terms[j].coeff);
                    if c != 0 {
                        terms.push(ModTerm { coeff: c, ..self.terms[i].clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        VectorElement { terms }
    }

    pub fn neg(&self, ring: &PolyRing) -> Self {
        VectorElement {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm { coeff: ring.neg(t.coeff), ..t.clone() })
                .collect(),
        }
    }

    pub fn sub(&self, ring: &PolyRing, other: &Self) -> Self {
        self.add(ring, &other.neg(ring))
    }

    pub fn scale(&self, ring: &PolyRing, c: u32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        VectorElement {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm { coeff: ring.mul(t.coeff, c), ..t.clone() })
                .collect(),
        }
    }

    /// Multiply by the ring term c·m.
    pub fn mul_term(&self, ring: &PolyRing, c: u32, m: &Monomial) -> Self {
        if c == 0 {
            return Self::zero();
        }
        // multiplication by a monomial preserves the canonical term order
        VectorElement {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm { coeff: ring.mul(t.coeff, c), mon: t.mon.mul(m), comp: t.comp })
                .collect(),
        }
    }

    pub fn mul_poly(&self, ring: &PolyRing, f: &Polynomial) -> Self {
        let mut acc = VectorElement::zero();
        for (c, m) in f.terms() {
            acc = acc.add(ring, &self.mul_term(ring, *c, m));
        }
        acc
    }

    /// Apply an invertible linear change of coordinates entrywise.
    pub fn substitute_linear(&self, ring: &PolyRing, g: &[Vec<u32>]) -> Self {
        assert_eq!(g.len(), ring.n, "substitution matrix dimension mismatch");
        for row in g {
            assert_eq!(row.len(), ring.n, "substitution matrix dimension mismatch");
        }
        let mut raw = Vec::new();
        for t in &self.terms {
            let image = Polynomial::substitute_monomial(ring, &t.mon, g);
            for (c, m) in image.terms() {
                raw.push(ModTerm { coeff: ring.mul(*c, t.coeff), mon: m.clone(), comp: t.comp });
            }
        }
        Self::from_terms(ring, raw)
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|t| {
                let mut s = String::new();
                if t.coeff != 1 || t.mon.is_one() {
                    s.push_str(&format!("{}*", t.coeff));
                }
                if !t.mon.is_one() {
                    s.push_str(&Polynomial::monomial(1, t.mon.clone()).to_string());
                    s.push('*');
                }
                s.push_str(&format!("e{}", t.comp + 1));
                s
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for VectorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homogeneity_with_twists() {
        let ring = PolyRing::new(2, 101);
        let module = FreeModule::new(vec![0, 1]);
        // x1^2 e1 + x2 e2 has twisted degree 2 in both terms
        let v = VectorElement::from_terms(
            &ring,
            vec![
                ModTerm { coeff: 1, mon: Monomial::new(vec![2, 0]), comp: 0 },
                ModTerm { coeff: 1, mon: Monomial::new(vec![0, 1]), comp: 1 },
            ],
        );
        assert!(v.is_homogeneous(&module));
        assert_eq!(v.twisted_degree(&module), Some(2));
        // x1 e1 + x1 e2 is not homogeneous for these twists
        let w = VectorElement::from_terms(
            &ring,
            vec![
                ModTerm { coeff: 1, mon: Monomial::var(0, 2), comp: 0 },
                ModTerm { coeff: 1, mon: Monomial::var(0, 2), comp: 1 },
            ],
        );
        assert!(!w.is_homogeneous(&module));
    }

    #[test]
    fn substitution_identity_and_swap() {
        let ring = PolyRing::new(2, 101);
        let v = VectorElement::term(1, Monomial::var(0, 2), 0);
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(v.substitute_linear(&ring, &id), v);
        let swap = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(
            v.substitute_linear(&ring, &swap),
            VectorElement::term(1, Monomial::var(1, 2), 0)
        );
        let shear = vec![vec![1, 1], vec![0, 1]];
        assert_eq!(v.substitute_linear(&ring, &shear).terms().len(), 2);
    }

    #[test]
    fn substitution_inverse_roundtrip() {
        let ring = PolyRing::new(2, 101);
        let v = VectorElement::from_terms(
            &ring,
            vec![
                ModTerm { coeff: 3, mon: Monomial::new(vec![1, 1]), comp: 0 },
                ModTerm { coeff: 5, mon: Monomial::new(vec![0, 2]), comp: 0 },
            ],
        );
        let g = vec![vec![1, 1], vec![0, 1]];
        let ginv = vec![vec![1, 100], vec![0, 1]]; // inverse of the shear mod 101
        assert_eq!(v.substitute_linear(&ring, &g).substitute_linear(&ring, &ginv), v);
    }
}
