//! Buchberger's algorithm for homogeneous submodules of graded free
//! modules, normal forms, syzygies, colon and saturation.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{EngineError, Result};
use crate::field::PolyRing;
use crate::module::{FreeModule, ModTerm, VectorElement};
use crate::monomial::{lex_compare, Monomial, WeightVector};
use crate::order::{ModuleOrder, OrderTag};
use crate::polynomial::Polynomial;

/// A generating set of a homogeneous submodule U of a graded free module.
#[derive(Debug, Clone)]
pub struct SubmoduleBasis {
    pub ring: PolyRing,
    pub module: FreeModule,
    gens: Vec<VectorElement>,
}

impl SubmoduleBasis {
    /// Zero generators are dropped; non-homogeneous generators are an
    /// error (the index refers to the position in the input list).
    pub fn new(ring: PolyRing, module: FreeModule, gens: Vec<VectorElement>) -> Result<Self> {
        for (idx, g) in gens.iter().enumerate() {
            if !g.is_homogeneous(&module) {
                return Err(EngineError::Precondition(format!(
                    "generator {} is not homogeneous",
                    idx + 1
                )));
            }
            for t in g.terms() {
                if t.comp >= module.rank {
                    return Err(EngineError::Mismatch(format!(
                        "generator {} uses component {} of a rank-{} module",
                        idx + 1,
                        t.comp + 1,
                        module.rank
                    )));
                }
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(SubmoduleBasis { ring, module, gens })
    }

    pub fn zero(ring: PolyRing, module: FreeModule) -> Self {
        SubmoduleBasis { ring, module, gens: Vec::new() }
    }

    pub fn gens(&self) -> &[VectorElement] {
        &self.gens
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.terms().len() == 1)
    }

    fn check_compatible(&self, other: &SubmoduleBasis) -> Result<()> {
        if self.ring != other.ring || self.module != other.module {
            return Err(EngineError::Mismatch(
                "submodules live in different ambient modules".into(),
            ));
        }
        Ok(())
    }
}

/// A reduced Groebner basis: monic elements, pairwise indivisible lead
/// terms, no tail term divisible by any lead term.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub ring: PolyRing,
    pub module: FreeModule,
    pub tag: OrderTag,
    order: ModuleOrder,
    elems: Vec<VectorElement>,
    leads: Vec<(Monomial, usize)>,
}

impl GroebnerBasis {
    pub fn elems(&self) -> &[VectorElement] {
        &self.elems
    }

    pub fn leads(&self) -> &[(Monomial, usize)] {
        &self.leads
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Remainder of v on division by the basis; zero iff v lies in the
    /// submodule.
    pub fn normal_form(&self, v: &VectorElement) -> Result<VectorElement> {
        for t in v.terms() {
            if t.comp >= self.module.rank {
                return Err(EngineError::Mismatch("element does not fit the ambient module".into()));
            }
        }
        let (_, r) = divide(&self.ring, v, &self.elems, &self.leads, &self.order, false);
        Ok(r)
    }

    pub fn contains(&self, v: &VectorElement) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// Division with quotient tracking: v = sum q_i g_i + r.
    pub fn reduce_with_quotients(&self, v: &VectorElement) -> (Vec<Polynomial>, VectorElement) {
        let (q, r) = divide(&self.ring, v, &self.elems, &self.leads, &self.order, true);
        (q.unwrap(), r)
    }

    /// Structural reducedness check, used by tests.
    pub fn is_reduced(&self) -> bool {
        for (i, g) in self.elems.iter().enumerate() {
            let lead = self.order.lead(g.terms()).unwrap();
            if lead.coeff != 1 {
                return false;
            }
            for (j, (lm, lc)) in self.leads.iter().enumerate() {
                if i == j {
                    continue;
                }
                for t in g.terms() {
                    if t.comp == *lc && lm.divides(&t.mon) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Standard division: repeatedly take the greatest reducible term under
/// the order and cancel it against the first applicable divisor. The
/// divisor list must be monic.
fn divide(
    ring: &PolyRing,
    v: &VectorElement,
    elems: &[VectorElement],
    leads: &[(Monomial, usize)],
    order: &ModuleOrder,
    track: bool,
) -> (Option<Vec<Polynomial>>, VectorElement) {
    let mut quotients = if track { Some(vec![Polynomial::zero(); elems.len()]) } else { None };
    let mut rem = v.clone();
    loop {
        let mut best: Option<(ModTerm, usize)> = None;
        for t in rem.terms() {
            let divisor = leads
                .iter()
                .position(|(lm, lc)| *lc == t.comp && lm.divides(&t.mon));
            if let Some(k) = divisor {
                let better = match &best {
                    None => true,
                    Some((bt, _)) => order.cmp_terms(t, bt) == std::cmp::Ordering::Greater,
                };
                if better {
                    best = Some((t.clone(), k));
                }
            }
        }
        let Some((t, k)) = best else { break };
        let qm = leads[k].0.quotient_into(&t.mon);
        if let Some(qs) = quotients.as_mut() {
            qs[k] = qs[k].add(ring, &Polynomial::monomial(t.coeff, qm.clone()));
        }
        rem = rem.sub(ring, &elems[k].mul_term(ring, t.coeff, &qm));
    }
    (quotients, rem)
}

fn monic(ring: &PolyRing, v: &VectorElement, order: &ModuleOrder) -> VectorElement {
    let lead = order.lead(v.terms()).expect("monic of zero element");
    v.scale(ring, ring.inv(lead.coeff))
}

fn lead_of(v: &VectorElement, order: &ModuleOrder) -> (Monomial, usize) {
    let t = order.lead(v.terms()).expect("lead of zero element");
    (t.mon.clone(), t.comp)
}

/// Full autoreduction of a generating set that is already a Groebner
/// basis; yields the reduced basis of the same submodule.
fn interreduce(
    ring: &PolyRing,
    order: &ModuleOrder,
    mut work: Vec<VectorElement>,
) -> Vec<VectorElement> {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < work.len() {
            let item = work.remove(i);
            let leads: Vec<_> = work.iter().map(|g| lead_of(g, order)).collect();
            let (_, red) = divide(ring, &item, &work, &leads, order, false);
            if red.is_zero() {
                changed = true;
            } else {
                let red = monic(ring, &red, order);
                if red != item {
                    changed = true;
                }
                work.insert(i, red);
                i += 1;
            }
        }
        if !changed {
            return work;
        }
    }
}

fn single_component(v: &VectorElement) -> bool {
    v.terms().windows(2).all(|w| w[0].comp == w[1].comp)
}

/// Buchberger's algorithm under an arbitrary module order. Pairs are
/// processed lowest twisted degree first; the product criterion is only
/// applied when both elements are supported in a single component (the
/// blanket version is false for modules), and the chain criterion uses
/// the strict-divisor form.
pub(crate) fn buchberger_with_order(
    ring: &PolyRing,
    gens: &[VectorElement],
    order: &ModuleOrder,
) -> Vec<VectorElement> {
    let mut basis: Vec<VectorElement> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| monic(ring, g, order))
        .collect();
    basis.sort_by_key(|g| order.lead(g.terms()).map(|t| order_degree(order, t)).unwrap_or(0));
    if basis.is_empty() {
        return basis;
    }

    let mut leads: Vec<(Monomial, usize)> = basis.iter().map(|g| lead_of(g, order)).collect();
    let mut queue: BinaryHeap<Reverse<(i64, usize, usize)>> = BinaryHeap::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            push_pair(&mut queue, &leads, order, i, j);
        }
    }

    while let Some(Reverse((_, i, j))) = queue.pop() {
        let (mi, ci) = &leads[i];
        let (mj, _) = &leads[j];
        // product criterion, valid only in the single-component case
        if mi.coprime(mj) && single_component(&basis[i]) && single_component(&basis[j]) {
            continue;
        }
        let lcm = mi.lcm(mj);
        // chain criterion, strict-divisor form
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].1 == *ci
                && leads[k].0.divides(&lcm)
                && leads[k].0.lcm(mi) != lcm
                && leads[k].0.lcm(mj) != lcm
        });
        if chained {
            continue;
        }
        let ui = mi.quotient_into(&lcm);
        let uj = mj.quotient_into(&lcm);
        let spair = basis[i]
            .mul_term(ring, 1, &ui)
            .sub(ring, &basis[j].mul_term(ring, 1, &uj));
        let (_, red) = divide(ring, &spair, &basis, &leads, order, false);
        if red.is_zero() {
            continue;
        }
        let red = monic(ring, &red, order);
        let new_idx = basis.len();
        leads.push(lead_of(&red, order));
        basis.push(red);
        for k in 0..new_idx {
            push_pair(&mut queue, &leads, order, k, new_idx);
        }
    }

    let mut reduced = interreduce(ring, order, basis);
    reduced.sort_by(|a, b| {
        let la = order.lead(a.terms()).unwrap();
        let lb = order.lead(b.terms()).unwrap();
        order_degree(order, la)
            .cmp(&order_degree(order, lb))
            .then_with(|| order.cmp_terms(la, lb))
    });
    reduced
}

fn order_degree(order: &ModuleOrder, t: &ModTerm) -> i64 {
    match order {
        ModuleOrder::Elimination { .. } => t.mon.degree() as i64,
        _ => t.mon.degree() as i64 + order.twists()[t.comp],
    }
}

fn push_pair(
    queue: &mut BinaryHeap<Reverse<(i64, usize, usize)>>,
    leads: &[(Monomial, usize)],
    order: &ModuleOrder,
    i: usize,
    j: usize,
) {
    if leads[i].1 != leads[j].1 {
        return;
    }
    let lcm = leads[i].0.lcm(&leads[j].0);
    let t = ModTerm { coeff: 1, mon: lcm, comp: leads[i].1 };
    queue.push(Reverse((order_degree(order, &t), i, j)));
}

/// Reduced Groebner basis of U under the tagged order.
pub fn buchberger(basis: &SubmoduleBasis, tag: OrderTag) -> GroebnerBasis {
    let order = ModuleOrder::tagged(tag, basis.module.twists.clone(), basis.ring.n);
    let elems = buchberger_with_order(&basis.ring, basis.gens(), &order);
    let leads = elems.iter().map(|g| lead_of(g, &order)).collect();
    GroebnerBasis {
        ring: basis.ring,
        module: basis.module.clone(),
        tag,
        order,
        elems,
        leads,
    }
}

/// The monomial submodule of lead terms; the reduced basis makes this a
/// minimal generating set.
pub fn initial_module(gb: &GroebnerBasis) -> SubmoduleBasis {
    let gens = gb
        .leads
        .iter()
        .map(|(m, c)| VectorElement::term(1, m.clone(), *c))
        .collect();
    SubmoduleBasis { ring: gb.ring, module: gb.module.clone(), gens }
}

/// Initial submodule for the weight omega: the basis is computed under
/// the omega-refined order and the maximal-weight sub-sums of its
/// elements generate in_omega(U).
pub fn weight_initial(basis: &SubmoduleBasis, omega: &WeightVector) -> SubmoduleBasis {
    assert_eq!(omega.0.len(), basis.ring.n, "weight length mismatch");
    let gb = buchberger(basis, OrderTag::WeightRefined);
    let gens = gb
        .elems
        .iter()
        .map(|g| {
            let top = g.terms().iter().map(|t| t.mon.weight(omega)).max().unwrap();
            VectorElement::from_terms(
                &basis.ring,
                g.terms()
                    .iter()
                    .filter(|t| t.mon.weight(omega) == top)
                    .cloned()
                    .collect(),
            )
        })
        .collect();
    SubmoduleBasis { ring: basis.ring, module: basis.module.clone(), gens }
}

/// Schreyer syzygies of a Groebner basis, with the induced order on the
/// new free module. The basis elements are first arranged lex-descending
/// within each lead component, which bounds iterated syzygy stages by
/// the number of variables.
pub fn schreyer_syzygies(gb: &GroebnerBasis) -> (FreeModule, Vec<VectorElement>, ModuleOrder) {
    schreyer_syzygies_with(&gb.ring, &gb.elems, &gb.leads, &gb.order)
}

pub(crate) fn schreyer_syzygies_with(
    ring: &PolyRing,
    elems: &[VectorElement],
    leads: &[(Monomial, usize)],
    order: &ModuleOrder,
) -> (FreeModule, Vec<VectorElement>, ModuleOrder) {
    assert!(!elems.is_empty(), "syzygies of an empty basis");
    let twists: Vec<i64> = leads
        .iter()
        .map(|(m, c)| m.degree() as i64 + order_term_twist(order, *c))
        .collect();
    let syz_module = FreeModule::new(twists.clone());
    let syz_order = ModuleOrder::Schreyer {
        target: Box::new(order.clone()),
        leads: leads.to_vec(),
        twists,
    };
    let mut taus = Vec::new();
    for i in 0..elems.len() {
        for j in (i + 1)..elems.len() {
            if leads[i].1 != leads[j].1 {
                continue;
            }
            let lcm = leads[i].0.lcm(&leads[j].0);
            let ui = leads[i].0.quotient_into(&lcm);
            let uj = leads[j].0.quotient_into(&lcm);
            let spair = elems[i]
                .mul_term(ring, 1, &ui)
                .sub(ring, &elems[j].mul_term(ring, 1, &uj));
            let (q, rem) = divide(ring, &spair, elems, leads, order, true);
            assert!(rem.is_zero(), "S-pair of a Groebner basis failed to reduce to zero");
            let mut raw = vec![
                ModTerm { coeff: 1, mon: ui, comp: i },
                ModTerm { coeff: ring.neg(1), mon: uj, comp: j },
            ];
            for (k, qk) in q.unwrap().iter().enumerate() {
                for (c, m) in qk.terms() {
                    raw.push(ModTerm { coeff: ring.neg(*c), mon: m.clone(), comp: k });
                }
            }
            taus.push(VectorElement::from_terms(ring, raw));
        }
    }
    (syz_module, taus, syz_order)
}

fn order_term_twist(order: &ModuleOrder, comp: usize) -> i64 {
    order.twists()[comp]
}

/// Arrange basis elements so same-component lead monomials descend
/// lexicographically; Schreyer syzygy lead terms then avoid the first
/// variable, which is what terminates iterated resolutions.
pub(crate) fn sort_for_schreyer(
    elems: &mut Vec<VectorElement>,
    leads: &mut Vec<(Monomial, usize)>,
) {
    let mut idx: Vec<usize> = (0..elems.len()).collect();
    idx.sort_by(|&a, &b| {
        lex_compare(&leads[b].0, &leads[a].0).then_with(|| leads[a].1.cmp(&leads[b].1))
    });
    *elems = idx.iter().map(|&i| elems[i].clone()).collect();
    *leads = idx.iter().map(|&i| leads[i].clone()).collect();
}

/// Generators of the syzygy module of an arbitrary generating tuple,
/// computed by eliminating the ambient block from the graph submodule
/// {(g_i, eps_i)}.
pub fn syzygies_of_generators(
    ring: &PolyRing,
    ambient: &FreeModule,
    gens: &[VectorElement],
) -> (FreeModule, Vec<VectorElement>) {
    assert!(!gens.is_empty(), "syzygies of an empty tuple");
    let degs: Vec<i64> = gens
        .iter()
        .map(|g| g.twisted_degree(ambient).expect("zero generator in syzygy input"))
        .collect();
    let syz_module = FreeModule::new(degs.clone());
    let boundary = ambient.rank;
    let order = ModuleOrder::Elimination {
        boundary,
        upper: Box::new(ModuleOrder::revlex_top(ambient.twists.clone())),
        lower: Box::new(ModuleOrder::revlex_top(degs)),
    };
    let augmented: Vec<VectorElement> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut raw: Vec<ModTerm> = g.terms().to_vec();
            raw.push(ModTerm { coeff: 1, mon: Monomial::one(ring.n), comp: boundary + i });
            VectorElement::from_terms(ring, raw)
        })
        .collect();
    let gb = buchberger_with_order(ring, &augmented, &order);
    let syzygies = gb
        .into_iter()
        .filter(|g| g.terms().iter().all(|t| t.comp >= boundary))
        .map(|g| {
            VectorElement::from_terms(
                ring,
                g.terms()
                    .iter()
                    .map(|t| ModTerm { comp: t.comp - boundary, ..t.clone() })
                    .collect(),
            )
        })
        .collect();
    (syz_module, syzygies)
}

/// U : f = { v in F : f v in U }, by projecting the f-block coordinates
/// of the syzygies among the generators of U and f e_1, ..., f e_rank.
pub fn colon_element(basis: &SubmoduleBasis, f: &Polynomial) -> Result<SubmoduleBasis> {
    if f.is_zero() {
        return Err(EngineError::ZeroDivisorArgument);
    }
    assert!(f.is_homogeneous(), "colon by a non-homogeneous polynomial");
    if f.is_constant() {
        return Ok(basis.clone());
    }
    let ring = &basis.ring;
    let rank = basis.module.rank;
    let mut tuple: Vec<VectorElement> = basis.gens().to_vec();
    for c in 0..rank {
        tuple.push(VectorElement::basis(c, ring.n).mul_poly(ring, f));
    }
    let (_, syz) = syzygies_of_generators(ring, &basis.module, &tuple);
    let offset = basis.gens().len();
    let mut gens: Vec<VectorElement> = syz
        .iter()
        .map(|s| {
            VectorElement::from_terms(
                ring,
                s.terms()
                    .iter()
                    .filter(|t| t.comp >= offset)
                    .map(|t| ModTerm { comp: t.comp - offset, ..t.clone() })
                    .collect(),
            )
        })
        .filter(|v| !v.is_zero())
        .collect();
    gens.extend(basis.gens().iter().cloned());
    SubmoduleBasis::new(*ring, basis.module.clone(), gens)
}

/// U : f^infinity, by iterating the colon until the chain stabilizes.
pub fn saturate_element(basis: &SubmoduleBasis, f: &Polynomial) -> Result<SubmoduleBasis> {
    let mut current = basis.clone();
    loop {
        let next = colon_element(&current, f)?;
        if submodule_equal(&current, &next)? {
            return Ok(next);
        }
        current = next;
    }
}

/// Generators of U + x_i F.
pub fn add_variable(basis: &SubmoduleBasis, var: usize) -> SubmoduleBasis {
    assert!(var < basis.ring.n, "variable index out of range");
    let mut gens = basis.gens().to_vec();
    for c in 0..basis.module.rank {
        gens.push(VectorElement::term(1, Monomial::var(var, basis.ring.n), c));
    }
    SubmoduleBasis { ring: basis.ring, module: basis.module.clone(), gens }
}

/// Identify F/(U + x_n F) with a module over the subring without the
/// last variable: set x_n = 0 in a Groebner basis of U.
pub fn restrict_to_subring(basis: &SubmoduleBasis) -> Result<SubmoduleBasis> {
    let ring = &basis.ring;
    if ring.n < 2 {
        return Err(EngineError::Precondition("cannot restrict a univariate ring".into()));
    }
    let gb = buchberger(basis, OrderTag::RevlexTop);
    let last = ring.n - 1;
    for c in 0..basis.module.rank {
        let xn_ec = VectorElement::term(1, Monomial::var(last, ring.n), c);
        if !gb.contains(&xn_ec)? {
            return Err(EngineError::Precondition(
                "submodule does not contain x_n F; add the variable first".into(),
            ));
        }
    }
    let subring = ring.subring();
    let gens = gb
        .elems()
        .iter()
        .map(|g| {
            VectorElement::from_terms(
                &subring,
                g.terms()
                    .iter()
                    .filter(|t| t.mon.exponent(last) == 0)
                    .map(|t| ModTerm { coeff: t.coeff, mon: t.mon.restrict(), comp: t.comp })
                    .collect(),
            )
        })
        .filter(|v| !v.is_zero())
        .collect();
    Ok(SubmoduleBasis { ring: subring, module: basis.module.clone(), gens })
}

/// True iff the two generating sets span the same submodule.
pub fn submodule_equal(a: &SubmoduleBasis, b: &SubmoduleBasis) -> Result<bool> {
    a.check_compatible(b)?;
    let gb_a = buchberger(a, OrderTag::RevlexTop);
    let gb_b = buchberger(b, OrderTag::RevlexTop);
    for g in a.gens() {
        if !gb_b.contains(g)? {
            return Ok(false);
        }
    }
    for g in b.gens() {
        if !gb_a.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff span(a) contains span(b).
pub fn submodule_contains(a: &SubmoduleBasis, b: &SubmoduleBasis) -> Result<bool> {
    a.check_compatible(b)?;
    let gb_a = buchberger(a, OrderTag::RevlexTop);
    for g in b.gens() {
        if !gb_a.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PolyRing;

    fn ring2() -> PolyRing {
        PolyRing::new(2, 32003)
    }

    fn rank1(ring: &PolyRing, polys: &[&[(u32, &[u32])]]) -> SubmoduleBasis {
        let module = FreeModule::standard(1);
        let gens = polys
            .iter()
            .map(|terms| {
                VectorElement::from_terms(
                    ring,
                    terms
                        .iter()
                        .map(|(c, e)| ModTerm { coeff: *c, mon: Monomial::new(e.to_vec()), comp: 0 })
                        .collect(),
                )
            })
            .collect();
        SubmoduleBasis::new(*ring, module, gens).unwrap()
    }

    #[test]
    fn buchberger_textbook_example() {
        // (x1^2, x1x2 + x2^2) has reduced basis {x1^2, x1x2 + x2^2, x2^3}
        let r = ring2();
        let u = rank1(&r, &[&[(1, &[2, 0])], &[(1, &[1, 1]), (1, &[0, 2])]]);
        let gb = buchberger(&u, OrderTag::RevlexTop);
        assert_eq!(gb.elems().len(), 3);
        assert!(gb.is_reduced());
        let lead_monos: Vec<_> = gb.leads().iter().map(|(m, _)| m.exponents().to_vec()).collect();
        assert!(lead_monos.contains(&vec![2, 0]));
        assert!(lead_monos.contains(&vec![1, 1]));
        assert!(lead_monos.contains(&vec![0, 3]));
        // x2^3 is in the submodule
        let v = VectorElement::term(1, Monomial::new(vec![0, 3]), 0);
        assert!(gb.contains(&v).unwrap());
    }

    #[test]
    fn buchberger_degenerate_inputs() {
        let r = ring2();
        let empty = SubmoduleBasis::zero(r, FreeModule::standard(1));
        assert!(buchberger(&empty, OrderTag::RevlexTop).is_empty());
        let single = rank1(&r, &[&[(7, &[1, 1])]]);
        let gb = buchberger(&single, OrderTag::RevlexTop);
        assert_eq!(gb.elems().len(), 1);
        assert_eq!(gb.elems()[0].terms()[0].coeff, 1); // monic
    }

    #[test]
    fn normal_form_examples() {
        let r = ring2();
        let u = rank1(&r, &[&[(1, &[1, 0])]]); // (x1)
        let gb = buchberger(&u, OrderTag::RevlexTop);
        let x2 = VectorElement::term(1, Monomial::var(1, 2), 0);
        assert_eq!(gb.normal_form(&x2).unwrap(), x2);
        let x1 = VectorElement::term(1, Monomial::var(0, 2), 0);
        assert!(gb.normal_form(&x1).unwrap().is_zero());
    }

    #[test]
    fn initial_module_fixed_points() {
        let r = ring2();
        let u = rank1(&r, &[&[(1, &[2, 0])], &[(1, &[1, 1])]]);
        let gb = buchberger(&u, OrderTag::RevlexTop);
        let init = initial_module(&gb);
        assert!(init.is_monomial());
        assert!(submodule_equal(&init, &u).unwrap());
    }

    #[test]
    fn weight_initial_examples() {
        let r = PolyRing::new(3, 32003);
        let module = FreeModule::standard(1);
        // no x3: unchanged
        let u = SubmoduleBasis::new(
            r,
            module.clone(),
            vec![VectorElement::from_terms(
                &r,
                vec![
                    ModTerm { coeff: 1, mon: Monomial::new(vec![1, 1, 0]), comp: 0 },
                    ModTerm { coeff: 1, mon: Monomial::new(vec![0, 2, 0]), comp: 0 },
                ],
            )],
        )
        .unwrap();
        let w = WeightVector::last_var_negative(3);
        let wi = weight_initial(&u, &w);
        assert!(submodule_equal(&wi, &u).unwrap());

        // x1^2 + x1x3 -> x1^2
        let r2 = ring2();
        let u2 = rank1(&r2, &[&[(1, &[2, 0]), (1, &[1, 1])]]);
        let w2 = WeightVector::last_var_negative(2);
        let wi2 = weight_initial(&u2, &w2);
        assert_eq!(wi2.gens().len(), 1);
        assert_eq!(wi2.gens()[0].terms().len(), 1);
        assert_eq!(wi2.gens()[0].terms()[0].mon.exponents(), &[2, 0]);
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring2();
        let u = rank1(&r, &[&[(1, &[1, 0])], &[(1, &[0, 1])]]);
        let gb = buchberger(&u, OrderTag::RevlexTop);
        let (syz_mod, taus, _) = schreyer_syzygies(&gb);
        assert_eq!(taus.len(), 1);
        assert_eq!(syz_mod.rank, 2);
        // the syzygy maps to zero under the presentation
        let tau = &taus[0];
        let mut image = VectorElement::zero();
        for t in tau.terms() {
            image = image.add(&r, &gb.elems()[t.comp].mul_term(&r, t.coeff, &t.mon));
        }
        assert!(image.is_zero());
    }

    #[test]
    fn syzygy_of_single_element_is_zero() {
        let r = ring2();
        let u = rank1(&r, &[&[(1, &[1, 1]), (1, &[0, 2])]]);
        let gb = buchberger(&u, OrderTag::RevlexTop);
        let (_, taus, _) = schreyer_syzygies(&gb);
        assert!(taus.is_empty());
        let (_, syz) = syzygies_of_generators(&r, &FreeModule::standard(1), u.gens());
        assert!(syz.is_empty());
    }

    #[test]
    fn colon_examples() {
        let r = ring2();
        // (x1^2, x1x2) : x1 = (x1, x2)
        let u = rank1(&r, &[&[(1, &[2, 0])], &[(1, &[1, 1])]]);
        let f = Polynomial::variable(&r, 0);
        let colon = colon_element(&u, &f).unwrap();
        let expected = rank1(&r, &[&[(1, &[1, 0])], &[(1, &[0, 1])]]);
        assert!(submodule_equal(&colon, &expected).unwrap());
        // U : 1 = U
        let one = Polynomial::constant(&r, 1);
        assert!(submodule_equal(&colon_element(&u, &one).unwrap(), &u).unwrap());
        // colon by zero is an error
        assert!(colon_element(&u, &Polynomial::zero()).is_err());

        let r3 = PolyRing::new(3, 32003);
        let u3 = {
            let module = FreeModule::standard(1);
            SubmoduleBasis::new(
                r3,
                module,
                vec![
                    VectorElement::term(1, Monomial::new(vec![1, 1, 0]), 0),
                    VectorElement::term(1, Monomial::new(vec![1, 0, 1]), 0),
                ],
            )
            .unwrap()
        };
        let colon3 = colon_element(&u3, &Polynomial::variable(&r3, 0)).unwrap();
        let expected3 = SubmoduleBasis::new(
            r3,
            FreeModule::standard(1),
            vec![
                VectorElement::term(1, Monomial::var(1, 3), 0),
                VectorElement::term(1, Monomial::var(2, 3), 0),
            ],
        )
        .unwrap();
        assert!(submodule_equal(&colon3, &expected3).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let r = ring2();
        let u = rank1(&r, &[&[(1, &[2, 0])], &[(1, &[1, 1])]]);
        let sat = saturate_element(&u, &Polynomial::variable(&r, 0)).unwrap();
        let expected = rank1(&r, &[&[(1, &[1, 0])]]);
        assert!(submodule_equal(&sat, &expected).unwrap());
        // idempotent
        let sat2 = saturate_element(&sat, &Polynomial::variable(&r, 0)).unwrap();
        assert!(submodule_equal(&sat, &sat2).unwrap());
        // monotone
        assert!(submodule_contains(&sat, &u).unwrap());
    }

    #[test]
    fn add_variable_and_restrict() {
        let r = ring2();
        let zero = SubmoduleBasis::zero(r, FreeModule::standard(1));
        let with_x2 = add_variable(&zero, 1);
        assert_eq!(with_x2.gens().len(), 1);
        // idempotent up to equality
        let twice = add_variable(&with_x2, 1);
        assert!(submodule_equal(&with_x2, &twice).unwrap());

        // restriction drops the last variable
        let restricted = restrict_to_subring(&with_x2).unwrap();
        assert_eq!(restricted.ring.n, 1);
        assert!(restricted.gens().is_empty());

        // (x1x2, x2) restricts to zero over k[x1]
        let u = rank1(&r, &[&[(1, &[1, 1])], &[(1, &[0, 1])]]);
        let res = restrict_to_subring(&u).unwrap();
        assert!(res.gens().is_empty());

        // precondition failure without x_n
        let v = rank1(&r, &[&[(1, &[1, 0])]]);
        assert!(restrict_to_subring(&v).is_err());
    }

    #[test]
    fn submodule_equality() {
        let r = ring2();
        let a = rank1(&r, &[&[(1, &[1, 0])], &[(1, &[0, 1])]]);
        let b = rank1(&r, &[&[(1, &[0, 1])], &[(1, &[1, 0])]]);
        assert!(submodule_equal(&a, &b).unwrap());
        let c = rank1(&r, &[&[(1, &[1, 0])], &[(1, &[2, 0])]]);
        let d = rank1(&r, &[&[(1, &[1, 0])]]);
        assert!(submodule_equal(&c, &d).unwrap());
        let e = rank1(&r, &[&[(1, &[0, 1])]]);
        assert!(!submodule_equal(&d, &e).unwrap());
    }
}
