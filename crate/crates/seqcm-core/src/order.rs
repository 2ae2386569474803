//! Term orders on graded free modules.
//!
//! Every order here compares twisted degrees first, so on homogeneous
//! data each comparison happens inside one finite graded piece and the
//! division algorithm terminates. The elimination order is the one
//! exception: its two blocks are compared block-first, which is exactly
//! what makes it an elimination order.

use std::cmp::Ordering;

use crate::module::ModTerm;
use crate::monomial::{revlex_compare, Monomial, WeightVector};

/// Public tag for the two orders exposed by the Groebner layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum OrderTag {
    /// Twisted degree, then revlex on monomials, then smaller component.
    RevlexTop,
    /// Twisted degree, then weight (0,...,0,-1), then revlex, then component.
    WeightRefined,
}

#[derive(Debug, Clone)]
pub enum ModuleOrder {
    RevlexTop {
        twists: Vec<i64>,
    },
    WeightTop {
        twists: Vec<i64>,
        omega: WeightVector,
    },
    /// Components below `boundary` form the dominant block; any term in
    /// the dominant block beats any term in the other block.
    Elimination {
        boundary: usize,
        upper: Box<ModuleOrder>,
        lower: Box<ModuleOrder>,
    },
    /// Order induced on the free module over a Groebner basis: a term
    /// m·ε_u maps to m·in(g_u) in the target and is compared there, ties
    /// broken by smaller index.
    Schreyer {
        target: Box<ModuleOrder>,
        /// Lead term (monomial, component) of each basis image.
        leads: Vec<(Monomial, usize)>,
        twists: Vec<i64>,
    },
}

impl ModuleOrder {
    pub fn revlex_top(twists: Vec<i64>) -> Self {
        ModuleOrder::RevlexTop { twists }
    }

    pub fn weight_top(twists: Vec<i64>, omega: WeightVector) -> Self {
        ModuleOrder::WeightTop { twists, omega }
    }

    pub fn tagged(tag: OrderTag, twists: Vec<i64>, n: usize) -> Self {
        match tag {
            OrderTag::RevlexTop => Self::revlex_top(twists),
            OrderTag::WeightRefined => {
                Self::weight_top(twists, WeightVector::last_var_negative(n))
            }
        }
    }

    pub fn twists(&self) -> &[i64] {
        match self {
            ModuleOrder::RevlexTop { twists } => twists,
            ModuleOrder::WeightTop { twists, .. } => twists,
            ModuleOrder::Schreyer { twists, .. } => twists,
            ModuleOrder::Elimination { .. } => {
                panic!("elimination order has no single twist vector")
            }
        }
    }

    fn twisted_degree(&self, t: &ModTerm) -> i64 {
        match self {
            ModuleOrder::RevlexTop { twists }
            | ModuleOrder::WeightTop { twists, .. }
            | ModuleOrder::Schreyer { twists, .. } => t.mon.degree() as i64 + twists[t.comp],
            ModuleOrder::Elimination { boundary, upper, lower } => {
                if t.comp < *boundary {
                    upper.twisted_degree(t)
                } else {
                    let shifted = ModTerm { comp: t.comp - boundary, ..t.clone() };
                    lower.twisted_degree(&shifted)
                }
            }
        }
    }

    pub fn cmp_terms(&self, a: &ModTerm, b: &ModTerm) -> Ordering {
        match self {
            ModuleOrder::RevlexTop { .. } => {
                match self.twisted_degree(a).cmp(&self.twisted_degree(b)) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                match revlex_compare(&a.mon, &b.mon) {
                    Ordering::Equal => b.comp.cmp(&a.comp),
                    ord => ord,
                }
            }
            ModuleOrder::WeightTop { omega, .. } => {
                match self.twisted_degree(a).cmp(&self.twisted_degree(b)) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                match a.mon.weight(omega).cmp(&b.mon.weight(omega)) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                match revlex_compare(&a.mon, &b.mon) {
                    Ordering::Equal => b.comp.cmp(&a.comp),
                    ord => ord,
                }
            }
            ModuleOrder::Elimination { boundary, upper, lower } => {
                match (a.comp < *boundary, b.comp < *boundary) {
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    (true, true) => upper.cmp_terms(a, b),
                    (false, false) => {
                        let sa = ModTerm { comp: a.comp - boundary, ..a.clone() };
                        let sb = ModTerm { comp: b.comp - boundary, ..b.clone() };
                        lower.cmp_terms(&sa, &sb)
                    }
                }
            }
            ModuleOrder::Schreyer { target, leads, .. } => {
                let (ma, ca) = &leads[a.comp];
                let (mb, cb) = &leads[b.comp];
                let ta = ModTerm { coeff: 1, mon: a.mon.mul(ma), comp: *ca };
                let tb = ModTerm { coeff: 1, mon: b.mon.mul(mb), comp: *cb };
                match target.cmp_terms(&ta, &tb) {
                    Ordering::Equal => b.comp.cmp(&a.comp),
                    ord => ord,
                }
            }
        }
    }

    /// The maximal term of a vector element under this order.
    pub fn lead<'a>(&self, terms: &'a [ModTerm]) -> Option<&'a ModTerm> {
        terms.iter().max_by(|a, b| self.cmp_terms(a, b))
    }
}

/// The term-over-position convention of this engine: twisted degree,
/// then revlex on the monomials, smaller component breaking ties.
pub fn module_term_compare(a: &ModTerm, b: &ModTerm, twists: &[i64]) -> Ordering {
    ModuleOrder::revlex_top(twists.to_vec()).cmp_terms(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn t(exps: &[u32], comp: usize) -> ModTerm {
        ModTerm { coeff: 1, mon: Monomial::new(exps.to_vec()), comp }
    }

    #[test]
    fn rank_one_reduces_to_revlex() {
        let twists = vec![0i64];
        let a = t(&[2, 0], 0);
        let b = t(&[1, 1], 0);
        assert_eq!(module_term_compare(&a, &b, &twists), Ordering::Greater);
        assert_eq!(
            module_term_compare(&a, &b, &twists),
            revlex_compare(&a.mon, &b.mon)
        );
    }

    #[test]
    fn component_tiebreak() {
        // equal twists: (x1, e1) beats (x1, e2)
        let twists = vec![0i64, 0];
        assert_eq!(
            module_term_compare(&t(&[1, 0], 0), &t(&[1, 0], 1), &twists),
            Ordering::Greater
        );
    }

    #[test]
    fn twisted_degree_tie_uses_monomial_revlex() {
        // twists (0,1): (x1, e2) and (x1^2, e1) tie on twisted degree 2,
        // and x1 < x1^2 in revlex
        let twists = vec![0i64, 1];
        assert_eq!(
            module_term_compare(&t(&[1, 0], 1), &t(&[2, 0], 0), &twists),
            Ordering::Less
        );
    }

    #[test]
    fn elimination_block_dominates() {
        let ord = ModuleOrder::Elimination {
            boundary: 1,
            upper: Box::new(ModuleOrder::revlex_top(vec![0])),
            lower: Box::new(ModuleOrder::revlex_top(vec![5])),
        };
        // a low-degree term of the dominant block still wins
        assert_eq!(ord.cmp_terms(&t(&[0, 1], 0), &t(&[3, 0], 1)), Ordering::Greater);
    }

    #[test]
    fn schreyer_maps_into_target() {
        // two basis elements mapping to leads x1·e1 and x2·e1
        let ord = ModuleOrder::Schreyer {
            target: Box::new(ModuleOrder::revlex_top(vec![0])),
            leads: vec![(Monomial::var(0, 2), 0), (Monomial::var(1, 2), 0)],
            twists: vec![1, 1],
        };
        // x2·eps1 -> x1x2·e1, x1·eps2 -> x1x2·e1: tie, smaller index wins
        assert_eq!(ord.cmp_terms(&t(&[0, 1], 0), &t(&[1, 0], 1)), Ordering::Greater);
        // x2·eps2 -> x2^2 e1 < x1·eps1 -> x1^2 e1
        assert_eq!(ord.cmp_terms(&t(&[0, 1], 1), &t(&[1, 0], 0)), Ordering::Less);
    }
}
