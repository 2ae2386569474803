//! Slow reference computations by degreewise linear algebra over F_p.
//!
//! These never touch the Groebner machinery; they enumerate monomial
//! bases and row-reduce, and exist to cross-check the fast paths (also
//! reachable from the command line via `--self-check`).

use crate::field::PolyRing;
use crate::groebner::SubmoduleBasis;
use crate::module::{FreeModule, VectorElement};
use crate::monomial::{monomials_of_degree, Monomial};

/// Row-reduce a dense matrix over F_p and return its rank.
pub fn rank(ring: &PolyRing, mut rows: Vec<Vec<u32>>) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    let mut col = 0;
    while rank < rows.len() && col < ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            col += 1;
            continue;
        };
        rows.swap(rank, pivot);
        let inv = ring.inv(rows[rank][col]);
        for c in col..ncols {
            rows[rank][c] = ring.mul(rows[rank][c], inv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in col..ncols {
                    let sub = ring.mul(factor, rows[rank][c]);
                    rows[r][c] = ring.sub(rows[r][c], sub);
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// The module terms spanning the degree-j piece of F, in a fixed order.
pub fn degree_basis(ring: &PolyRing, module: &FreeModule, j: i64) -> Vec<(Monomial, usize)> {
    let mut basis = Vec::new();
    for comp in 0..module.rank {
        let d = j - module.twists[comp];
        if d < 0 {
            continue;
        }
        for m in monomials_of_degree(ring.n, d as u32) {
            basis.push((m, comp));
        }
    }
    basis
}

fn coordinates(
    ring: &PolyRing,
    v: &VectorElement,
    basis: &[(Monomial, usize)],
) -> Vec<u32> {
    let mut row = vec![0u32; basis.len()];
    for t in v.terms() {
        let idx = basis
            .iter()
            .position(|(m, c)| *c == t.comp && *m == t.mon)
            .expect("term outside the degree piece");
        row[idx] = ring.add(row[idx], t.coeff);
    }
    row
}

/// dim_k of the degree-j piece of the span of the generators inside F.
pub fn submodule_dim_in_degree(basis: &SubmoduleBasis, j: i64) -> usize {
    let ring = &basis.ring;
    let ambient = degree_basis(ring, &basis.module, j);
    if ambient.is_empty() {
        return 0;
    }
    let mut rows = Vec::new();
    for g in basis.gens() {
        let Some(d) = g.twisted_degree(&basis.module) else { continue };
        let shift = j - d;
        if shift < 0 {
            continue;
        }
        for m in monomials_of_degree(ring.n, shift as u32) {
            rows.push(coordinates(ring, &g.mul_term(ring, 1, &m), &ambient));
        }
    }
    if rows.is_empty() {
        return 0;
    }
    rank(ring, rows)
}

/// Brute-force HF(F/U; j): ambient dimension minus the span's dimension.
pub fn quotient_hf(basis: &SubmoduleBasis, j: i64) -> i64 {
    let ambient = degree_basis(&basis.ring, &basis.module, j).len() as i64;
    ambient - submodule_dim_in_degree(basis, j) as i64
}

/// A graded map between free modules given by a polynomial matrix, as a
/// plain function on degree pieces; returns its rank in degree j.
pub fn map_rank_in_degree(
    ring: &PolyRing,
    source: &FreeModule,
    target: &FreeModule,
    columns: &[VectorElement],
    j: i64,
) -> usize {
    let source_basis = degree_basis(ring, source, j);
    let target_basis = degree_basis(ring, target, j);
    if source_basis.is_empty() || target_basis.is_empty() {
        return 0;
    }
    let mut rows = Vec::new();
    for (m, comp) in &source_basis {
        let image = columns[*comp].mul_term(ring, 1, m);
        rows.push(coordinates(ring, &image, &target_basis));
    }
    rank(ring, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::ModTerm;

    #[test]
    fn rank_of_small_matrices() {
        let ring = PolyRing::new(1, 101);
        assert_eq!(rank(&ring, vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&ring, vec![vec![1, 0], vec![0, 1]]), 2);
        assert_eq!(rank(&ring, vec![vec![0, 0]]), 0);
    }

    #[test]
    fn quotient_hf_matches_hand_counts() {
        let ring = PolyRing::new(2, 32003);
        let module = FreeModule::standard(1);
        let u = SubmoduleBasis::new(
            ring,
            module,
            vec![
                VectorElement::term(1, Monomial::new(vec![2, 0]), 0),
                VectorElement::from_terms(
                    &ring,
                    vec![
                        ModTerm { coeff: 1, mon: Monomial::new(vec![1, 1]), comp: 0 },
                        ModTerm { coeff: 1, mon: Monomial::new(vec![0, 2]), comp: 0 },
                    ],
                ),
            ],
        )
        .unwrap();
        let counts: Vec<i64> = (0..5).map(|j| quotient_hf(&u, j)).collect();
        assert_eq!(counts, vec![1, 2, 1, 0, 0]);
    }
}
