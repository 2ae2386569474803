//! Graded free resolutions, dualization, and the Ext modules
//! Ext^{n-r}(F/U, S) as graded subquotients with exact Hilbert series.

use crate::error::{EngineError, Result};
use crate::field::PolyRing;
use crate::groebner::{
    buchberger, buchberger_with_order, schreyer_syzygies_with, sort_for_schreyer,
    syzygies_of_generators, SubmoduleBasis,
};
use crate::hilbert::{free_series, quotient_series, DimensionMultiplicity, HilbertSeries};
use crate::module::{FreeModule, ModTerm, VectorElement};
use crate::order::{ModuleOrder, OrderTag};
use crate::polynomial::Polynomial;

/// A matrix of homogeneous polynomials, row-major.
#[derive(Debug, Clone)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![Polynomial::zero(); rows * cols] }
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn transpose(&self) -> Self {
        let mut out = PolyMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Column c as an element of the target module (indexed by rows).
    pub fn column(&self, ring: &PolyRing, c: usize) -> VectorElement {
        let mut raw = Vec::new();
        for r in 0..self.rows {
            for (coeff, mon) in self.get(r, c).terms() {
                raw.push(ModTerm { coeff: *coeff, mon: mon.clone(), comp: r });
            }
        }
        VectorElement::from_terms(ring, raw)
    }

    pub fn from_columns(ring: &PolyRing, rows: usize, columns: &[VectorElement]) -> Self {
        let mut out = PolyMatrix::zero(rows, columns.len());
        for (c, v) in columns.iter().enumerate() {
            for r in 0..rows {
                out.set(r, c, v.component(ring, r));
            }
        }
        out
    }

    fn delete_row(&mut self, row: usize) {
        let mut entries = Vec::with_capacity((self.rows - 1) * self.cols);
        for r in 0..self.rows {
            if r == row {
                continue;
            }
            entries.extend_from_slice(&self.entries[r * self.cols..(r + 1) * self.cols]);
        }
        self.entries = entries;
        self.rows -= 1;
    }

    fn delete_col(&mut self, col: usize) {
        let mut entries = Vec::with_capacity(self.rows * (self.cols - 1));
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c != col {
                    entries.push(self.entries[r * self.cols + c].clone());
                }
            }
        }
        self.entries = entries;
        self.cols -= 1;
    }
}

/// A chain complex of graded free modules: maps[i] sends modules[i+1]
/// into modules[i], every map is degree zero for the twists, and
/// consecutive maps compose to zero.
#[derive(Debug, Clone)]
pub struct FreeComplex {
    pub ring: PolyRing,
    pub modules: Vec<FreeModule>,
    pub maps: Vec<PolyMatrix>,
}

impl FreeComplex {
    /// Index of the last module.
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    /// Composition-zero check, used by tests and debug assertions.
    pub fn composes_to_zero(&self) -> bool {
        let ring = &self.ring;
        for i in 0..self.maps.len().saturating_sub(1) {
            // maps[i] o maps[i+1]
            let outer = &self.maps[i];
            let inner = &self.maps[i + 1];
            for r in 0..outer.rows {
                for c in 0..inner.cols {
                    let mut acc = Polynomial::zero();
                    for k in 0..outer.cols {
                        acc = acc.add(ring, &outer.get(r, k).mul(ring, inner.get(k, c)));
                    }
                    if !acc.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Schreyer resolution of F/U: iterated syzygies of reduced Groebner
/// bases, each stage arranged lex-descending so the lead terms lose one
/// variable per stage; the length never exceeds n.
pub fn free_resolution_raw(basis: &SubmoduleBasis) -> FreeComplex {
    let ring = basis.ring;
    let gb = buchberger(basis, OrderTag::RevlexTop);
    let mut modules = vec![basis.module.clone()];
    let mut maps = Vec::new();
    if gb.is_empty() {
        return FreeComplex { ring, modules, maps };
    }
    let mut elems = gb.elems().to_vec();
    let mut leads = gb.leads().to_vec();
    let mut order = gb.order().clone();
    loop {
        sort_for_schreyer(&mut elems, &mut leads);
        maps.push(PolyMatrix::from_columns(
            &ring,
            modules.last().unwrap().rank,
            &elems,
        ));
        let (next_module, taus, syz_order) =
            schreyer_syzygies_with(&ring, &elems, &leads, &order);
        modules.push(next_module);
        if taus.is_empty() {
            break;
        }
        assert!(
            maps.len() <= ring.n,
            "Schreyer resolution exceeded the variable count"
        );
        elems = crate::groebner::interreduce_basis(&ring, &syz_order, taus);
        leads = elems
            .iter()
            .map(|g| {
                let t = syz_order.lead(g.terms()).unwrap();
                (t.mon.clone(), t.comp)
            })
            .collect();
        order = syz_order;
    }
    let complex = FreeComplex { ring, modules, maps };
    debug_assert!(complex.composes_to_zero());
    complex
}

/// Resolution with the trivial summands split off. Ext is resolution
/// independent, so every series downstream is unchanged; the splitting
/// keeps the tail ranks small.
pub fn free_resolution(basis: &SubmoduleBasis) -> FreeComplex {
    minimize(free_resolution_raw(basis))
}

/// Split off all scalar entries from the differentials (Gaussian
/// elimination over the complex). The head module F_0 is never touched.
pub fn minimize(mut c: FreeComplex) -> FreeComplex {
    let ring = c.ring;
    loop {
        let Some((k, row, col)) = find_scalar_entry(&c) else { break };
        split_entry(&ring, &mut c, k, row, col);
    }
    while c.modules.len() > 1 && c.modules.last().unwrap().rank == 0 {
        c.modules.pop();
        c.maps.pop();
    }
    debug_assert!(c.composes_to_zero());
    c
}

/// Locate a nonzero degree-zero entry in any differential except the
/// presentation map of F_0.
fn find_scalar_entry(c: &FreeComplex) -> Option<(usize, usize, usize)> {
    for k in 1..c.maps.len() {
        let m = &c.maps[k];
        for r in 0..m.rows {
            for col in 0..m.cols {
                let e = m.get(r, col);
                if !e.is_zero() && e.degree() == Some(0) {
                    return Some((k, r, col));
                }
            }
        }
    }
    None
}

fn split_entry(ring: &PolyRing, c: &mut FreeComplex, k: usize, row: usize, col: usize) {
    let inv = ring.inv(c.maps[k].get(row, col).terms()[0].0);

    // clear the pivot row by column operations in F_{k+1}
    for col2 in 0..c.maps[k].cols {
        if col2 == col {
            continue;
        }
        let e = c.maps[k].get(row, col2).clone();
        if e.is_zero() {
            continue;
        }
        let lambda = e.scale(ring, inv);
        for r in 0..c.maps[k].rows {
            let sub = lambda.mul(ring, c.maps[k].get(r, col));
            let updated = c.maps[k].get(r, col2).sub(ring, &sub);
            c.maps[k].set(r, col2, updated);
        }
        // the basis change is eps_col2 -> eps_col2 - lambda eps_col, so
        // the incoming differential adds lambda times row col2 to row col
        if k + 1 < c.maps.len() {
            for c2 in 0..c.maps[k + 1].cols {
                let add = lambda.mul(ring, c.maps[k + 1].get(col2, c2));
                let updated = c.maps[k + 1].get(col, c2).add(ring, &add);
                c.maps[k + 1].set(col, c2, updated);
            }
        }
    }

    // absorb the pivot column into the F_k basis; the outgoing
    // differential's column for the new basis vector is forced to zero
    // by composition with the (already cleared) pivot row
    for row2 in 0..c.maps[k].rows {
        if row2 == row {
            continue;
        }
        let e = c.maps[k].get(row2, col).clone();
        if e.is_zero() {
            continue;
        }
        let mu = e.scale(ring, inv);
        let prev = k - 1;
        for r2 in 0..c.maps[prev].rows {
            let add = mu.mul(ring, c.maps[prev].get(r2, row2));
            let updated = c.maps[prev].get(r2, row).add(ring, &add);
            c.maps[prev].set(r2, row, updated);
        }
    }

    debug_assert!(
        (0..c.maps[k - 1].rows).all(|r2| c.maps[k - 1].get(r2, row).is_zero()),
        "pivot column of the outgoing differential must vanish"
    );
    if k + 1 < c.maps.len() {
        debug_assert!(
            (0..c.maps[k + 1].cols).all(|c2| c.maps[k + 1].get(row.min(usize::MAX), c2).is_zero()
                || !c.maps[k + 1].get(col, c2).is_zero()
                || c.maps[k + 1].get(col, c2).is_zero()),
        );
    }

    c.maps[k].delete_row(row);
    c.maps[k].delete_col(col);
    c.maps[k - 1].delete_col(row);
    if k + 1 < c.maps.len() {
        c.maps[k + 1].delete_row(col);
    }
    c.modules[k].twists.remove(row);
    c.modules[k].rank -= 1;
    c.modules[k + 1].twists.remove(col);
    c.modules[k + 1].rank -= 1;
}

/// Hom(-, S): reverse the complex, transpose the matrices, negate the
/// twists. The result is again a chain complex, generally inexact.
pub fn dualize(c: &FreeComplex) -> FreeComplex {
    let len = c.modules.len();
    let modules = (0..len).map(|i| c.modules[len - 1 - i].dual()).collect();
    let maps = (0..c.maps.len())
        .map(|i| c.maps[c.maps.len() - 1 - i].transpose())
        .collect();
    let dual = FreeComplex { ring: c.ring, modules, maps };
    debug_assert!(dual.composes_to_zero());
    dual
}

/// Series of the image of maps[k] inside modules[k]; zero outside range.
fn image_series(c: &FreeComplex, k: isize) -> Result<HilbertSeries> {
    let n = c.ring.n;
    if k < 0 || k as usize >= c.maps.len() {
        return Ok(HilbertSeries::zero(n));
    }
    let k = k as usize;
    let target = &c.modules[k];
    let cols: Vec<VectorElement> = (0..c.maps[k].cols)
        .map(|j| c.maps[k].column(&c.ring, j))
        .filter(|v| !v.is_zero())
        .collect();
    if cols.is_empty() {
        return Ok(HilbertSeries::zero(n));
    }
    let sub = SubmoduleBasis::new(c.ring, target.clone(), cols)?;
    free_series(target, n).subtract(&quotient_series(&sub))
}

/// Hilbert series of the homology ker(maps[i-1]) / im(maps[i]).
pub fn homology_series(c: &FreeComplex, i: usize) -> Result<HilbertSeries> {
    let free = free_series(&c.modules[i], c.ring.n);
    let out = image_series(c, i as isize - 1)?;
    let inc = image_series(c, i as isize)?;
    let series = free.subtract(&out)?.subtract(&inc)?;
    series.check_nonnegative(series.guard_bound())?;
    Ok(series)
}

/// Hilbert series of the j-th cohomology of a dualized complex.
pub fn cohomology_series(dual: &FreeComplex, j: usize) -> Result<HilbertSeries> {
    let len = dual.length();
    if j > len {
        return Ok(HilbertSeries::zero(dual.ring.n));
    }
    homology_series(dual, len - j)
}

/// The Hilbert data of one Ext^{n-r}(F/U, S).
#[derive(Debug, Clone)]
pub struct ExtPosition {
    pub r: usize,
    pub series: HilbertSeries,
    pub dm: DimensionMultiplicity,
    pub adeg_r: i64,
}

/// All Ext positions r = 0..n together with the arithmetic degree.
#[derive(Debug, Clone)]
pub struct ExtProfile {
    pub positions: Vec<ExtPosition>,
    pub adeg: i64,
}

impl ExtProfile {
    pub fn position(&self, r: usize) -> &ExtPosition {
        &self.positions[r]
    }

    pub fn adeg_vector(&self) -> Vec<i64> {
        self.positions.iter().map(|p| p.adeg_r).collect()
    }
}

/// Resolution, dual, and profile bundled for reuse.
pub struct ExtAnalysis {
    pub ring: PolyRing,
    pub resolution: FreeComplex,
    pub dual: FreeComplex,
    pub profile: ExtProfile,
}

pub fn ext_analysis(basis: &SubmoduleBasis) -> Result<ExtAnalysis> {
    let ring = basis.ring;
    let n = ring.n;
    let resolution = free_resolution(basis);
    let dual = dualize(&resolution);
    let mut positions = Vec::with_capacity(n + 1);
    let mut adeg = 0i64;
    for r in 0..=n {
        let series = cohomology_series(&dual, n - r)?;
        let dm = series.dim_mult();
        if dm.dim > r as i32 {
            return Err(EngineError::InternalInconsistency(format!(
                "Ext^{} has dimension {} exceeding {}",
                n - r,
                dm.dim,
                r
            )));
        }
        let adeg_r = series.e_r(r);
        adeg += adeg_r;
        positions.push(ExtPosition { r, series, dm, adeg_r });
    }
    Ok(ExtAnalysis { ring, resolution, dual, profile: ExtProfile { positions, adeg } })
}

pub fn ext_profile(basis: &SubmoduleBasis) -> Result<ExtProfile> {
    Ok(ext_analysis(basis)?.profile)
}

impl ExtAnalysis {
    /// Present Ext^{n-r}(F/U, S) as a quotient of a free module: the
    /// generators are a Groebner basis of the kernel, the relations are
    /// its syzygies plus the coordinates of the incoming boundaries.
    /// Returns None when the Ext module is zero.
    pub fn presentation(&self, r: usize) -> Result<Option<SubmoduleBasis>> {
        let n = self.ring.n;
        let j = n - r;
        let len = self.dual.length();
        if j > len || self.profile.positions[r].series.is_zero() {
            return Ok(None);
        }
        let i = len - j;
        let ring = &self.ring;
        let ambient = &self.dual.modules[i];

        // generators of ker(maps[i-1]), or the whole module at the end
        let kernel_gens: Vec<VectorElement> = if i == 0 {
            (0..ambient.rank).map(|c| VectorElement::basis(c, ring.n)).collect()
        } else {
            let map = &self.dual.maps[i - 1];
            let target = &self.dual.modules[i - 1];
            let mut gens: Vec<VectorElement> = Vec::new();
            let mut cols = Vec::new();
            let mut col_index = Vec::new();
            for u in 0..map.cols {
                let col = map.column(ring, u);
                if col.is_zero() {
                    gens.push(VectorElement::basis(u, ring.n));
                } else {
                    col_index.push(u);
                    cols.push(col);
                }
            }
            if !cols.is_empty() {
                let (_, syz) = syzygies_of_generators(ring, target, &cols);
                for s in syz {
                    gens.push(VectorElement::from_terms(
                        ring,
                        s.terms()
                            .iter()
                            .map(|t| ModTerm { comp: col_index[t.comp], ..t.clone() })
                            .collect(),
                    ));
                }
            }
            gens
        };
        if kernel_gens.is_empty() {
            return Ok(None);
        }

        let kernel = SubmoduleBasis::new(*ring, ambient.clone(), kernel_gens)?;
        let order = ModuleOrder::revlex_top(ambient.twists.clone());
        let kgb = buchberger_with_order(ring, kernel.gens(), &order);
        if kgb.is_empty() {
            return Ok(None);
        }
        let leads: Vec<_> = kgb
            .iter()
            .map(|g| {
                let t = order.lead(g.terms()).unwrap();
                (t.mon.clone(), t.comp)
            })
            .collect();
        let (pres_module, taus, _) = schreyer_syzygies_with(ring, &kgb, &leads, &order);
        let mut relations = taus;

        // incoming boundaries, written in coordinates of the kernel basis
        if i < self.dual.maps.len() {
            let incoming = &self.dual.maps[i];
            for u in 0..incoming.cols {
                let col = incoming.column(ring, u);
                if col.is_zero() {
                    continue;
                }
                let (q, rem) = crate::groebner::divide_by(ring, &col, &kgb, &leads, &order);
                if !rem.is_zero() {
                    return Err(EngineError::InternalInconsistency(
                        "boundary not contained in the kernel".into(),
                    ));
                }
                let mut raw = Vec::new();
                for (k, qk) in q.iter().enumerate() {
                    for (c, m) in qk.terms() {
                        raw.push(ModTerm { coeff: *c, mon: m.clone(), comp: k });
                    }
                }
                relations.push(VectorElement::from_terms(ring, raw));
            }
        }
        Ok(Some(SubmoduleBasis::new(*ring, pres_module, relations)?))
    }
}

/// depth(F/U) = n - max{ j : Ext^j(F/U, S) != 0 }.
pub fn depth(basis: &SubmoduleBasis) -> Result<usize> {
    depth_from_profile(&ext_profile(basis)?, basis.ring.n)
}

pub fn depth_from_profile(profile: &ExtProfile, n: usize) -> Result<usize> {
    let min_r = profile
        .positions
        .iter()
        .filter(|p| !p.series.is_zero())
        .map(|p| p.r)
        .min();
    match min_r {
        Some(r) => Ok(r),
        None => Err(EngineError::ZeroModule),
    }
}

/// depth == dim; the zero module counts as Cohen-Macaulay.
pub fn is_cohen_macaulay(basis: &SubmoduleBasis) -> Result<bool> {
    let series = quotient_series(basis);
    if series.is_zero() {
        return Ok(true);
    }
    let dim = series.dim_mult().dim;
    let d = depth(basis)?;
    Ok(d as i32 == dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn ring(n: usize) -> PolyRing {
        PolyRing::new(n, 32003)
    }

    fn ideal(r: &PolyRing, gens: &[&[u32]]) -> SubmoduleBasis {
        SubmoduleBasis::new(
            *r,
            FreeModule::standard(1),
            gens.iter()
                .map(|e| VectorElement::term(1, Monomial::new(e.to_vec()), 0))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn koszul_resolution_shape() {
        let r = ring(2);
        let u = ideal(&r, &[&[1, 0], &[0, 1]]);
        let c = free_resolution(&u);
        assert_eq!(c.modules.len(), 3);
        assert_eq!(c.modules[0].twists, vec![0]);
        assert_eq!(c.modules[1].twists, vec![1, 1]);
        assert_eq!(c.modules[2].twists, vec![2]);
        assert!(c.composes_to_zero());
    }

    #[test]
    fn zero_submodule_resolves_to_ambient() {
        let r = ring(3);
        let u = SubmoduleBasis::zero(r, FreeModule::standard(1));
        let c = free_resolution(&u);
        assert_eq!(c.modules.len(), 1);
        assert!(c.maps.is_empty());
    }

    #[test]
    fn resolution_is_exact_off_zero() {
        let r = ring(2);
        let u = ideal(&r, &[&[2, 0], &[1, 1]]);
        let c = free_resolution(&u);
        for i in 1..c.modules.len() {
            assert!(homology_series(&c, i).unwrap().is_zero(), "position {}", i);
        }
        // position zero is F/U itself
        let h0 = homology_series(&c, 0).unwrap();
        assert!(h0.same_series(&quotient_series(&u)));
    }

    #[test]
    fn euler_characteristic_matches_quotient() {
        let r = ring(3);
        let u = ideal(&r, &[&[1, 1, 0], &[1, 0, 1], &[0, 2, 0]]);
        let c = free_resolution(&u);
        let mut acc = HilbertSeries::zero(3);
        for (i, module) in c.modules.iter().enumerate() {
            let s = free_series(module, 3);
            acc = if i % 2 == 0 { acc.add(&s).unwrap() } else { acc.subtract(&s).unwrap() };
        }
        assert!(acc.same_series(&quotient_series(&u)));
    }

    #[test]
    fn dualize_is_an_involution_on_shape() {
        let r = ring(2);
        let u = ideal(&r, &[&[1, 0], &[0, 1]]);
        let c = free_resolution(&u);
        let dd = dualize(&dualize(&c));
        assert_eq!(dd.modules.len(), c.modules.len());
        for (a, b) in dd.modules.iter().zip(&c.modules) {
            assert_eq!(a.twists, b.twists);
        }
        for (ma, mb) in dd.maps.iter().zip(&c.maps) {
            for r2 in 0..ma.rows {
                for c2 in 0..ma.cols {
                    assert_eq!(ma.get(r2, c2), mb.get(r2, c2));
                }
            }
        }
    }

    #[test]
    fn ext_of_free_module() {
        let r = ring(2);
        let u = SubmoduleBasis::zero(r, FreeModule::standard(1));
        let profile = ext_profile(&u).unwrap();
        assert_eq!(profile.adeg, 1);
        assert_eq!(profile.position(2).adeg_r, 1);
        assert!(profile.position(0).series.is_zero());
        assert!(profile.position(1).series.is_zero());
    }

    #[test]
    fn ext_of_koszul_socle() {
        // S/(x1,x2) over two variables: Ext^2 is one-dimensional in
        // degree -2, Ext^0 and Ext^1 vanish
        let r = ring(2);
        let u = ideal(&r, &[&[1, 0], &[0, 1]]);
        let profile = ext_profile(&u).unwrap();
        assert!(profile.position(1).series.is_zero());
        assert!(profile.position(2).series.is_zero());
        let socle = &profile.position(0).series;
        assert_eq!(socle.hf(-2), 1);
        assert_eq!(socle.hf(-1), 0);
        assert_eq!(socle.hf(0), 0);
        assert_eq!(profile.position(0).dm, DimensionMultiplicity { dim: 0, e: Some(1) });
        assert_eq!(profile.adeg, 1);
    }

    #[test]
    fn ext_of_hyperplane() {
        // S/(x1) over two variables: Ext^1 is (S/(x1))(1)
        let r = ring(2);
        let u = ideal(&r, &[&[1, 0]]);
        let profile = ext_profile(&u).unwrap();
        let e1 = &profile.position(1).series;
        let expected = HilbertSeries::from_pairs(&[(-1, 1), (0, -1)], 2);
        assert!(e1.same_series(&expected));
        assert!(profile.position(0).series.is_zero());
        assert!(profile.position(2).series.is_zero());
    }

    #[test]
    fn depth_examples() {
        let r = ring(3);
        let free = SubmoduleBasis::zero(r, FreeModule::standard(1));
        assert_eq!(depth(&free).unwrap(), 3);
        let max_ideal = ideal(&r, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(depth(&max_ideal).unwrap(), 0);
        // zero module has no depth
        let full = SubmoduleBasis::new(
            r,
            FreeModule::standard(1),
            vec![VectorElement::basis(0, 3)],
        )
        .unwrap();
        assert!(depth(&full).is_err());
    }

    #[test]
    fn cohen_macaulay_examples() {
        let r = ring(2);
        let free = SubmoduleBasis::zero(r, FreeModule::standard(1));
        assert!(is_cohen_macaulay(&free).unwrap());
        let hyper = ideal(&r, &[&[2, 0]]);
        assert!(is_cohen_macaulay(&hyper).unwrap());
        let full = SubmoduleBasis::new(r, FreeModule::standard(1), vec![VectorElement::basis(0, 2)])
            .unwrap();
        assert!(is_cohen_macaulay(&full).unwrap());
    }

    #[test]
    fn two_planes_depth_one() {
        let r = ring(4);
        let u = ideal(&r, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        assert_eq!(depth(&u).unwrap(), 1);
        assert!(!is_cohen_macaulay(&u).unwrap());
    }

    #[test]
    fn minimized_and_raw_agree() {
        let r = ring(3);
        let u = ideal(&r, &[&[1, 1, 0], &[0, 1, 1]]);
        let raw = free_resolution_raw(&u);
        let min = minimize(raw.clone());
        for i in 0..=r.n {
            let a = cohomology_series(&dualize(&raw), i).unwrap();
            let b = cohomology_series(&dualize(&min), i).unwrap();
            assert!(a.same_series(&b), "Ext^{} differs", i);
        }
    }
}
