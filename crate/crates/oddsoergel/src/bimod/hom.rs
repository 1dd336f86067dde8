//! Degreewise Hom-space computation by exact linear solve.
//!
//! A degree-d bimodule map M → N is a matrix whose (α,β) entry is a
//! homogeneous left-ring polynomial of degree d + deg(e_α) − deg(f_β).
//! The unknowns are the coefficients of those polynomials; the equations
//! are the intertwining conditions ρ_M(g)·Φ = Φ·ρ_N(g), one per right-ring
//! generator, expanded over the monomial basis.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::linalg::Matrix;
use crate::skewpoly::{Monomial, Q, SkewPoly};

use super::{Morphism, Obj};

/// Dimension count per degree, with the cutoff it was computed to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDimSeries {
    pub dims: BTreeMap<i64, usize>,
    pub cutoff: i64,
}

impl GradedDimSeries {
    pub fn dim(&self, d: i64) -> usize {
        self.dims.get(&d).copied().unwrap_or(0)
    }
}

struct UnknownTable {
    /// (row, col) → (first unknown id, monomials of the entry's degree)
    blocks: Vec<Vec<(usize, Vec<Monomial>)>>,
    count: usize,
}

fn unknowns_for(m: &Obj, n: &Obj, d: i64) -> UnknownTable {
    let mut blocks = Vec::with_capacity(m.rank());
    let mut count = 0;
    for a in 0..m.rank() {
        let mut row = Vec::with_capacity(n.rank());
        for b in 0..n.rank() {
            let deg = d + m.basis[a].degree - n.basis[b].degree;
            let monos = m.left.monomials_of_degree(deg);
            row.push((count, monos));
            count += row.last().unwrap().1.len();
        }
        blocks.push(row);
    }
    UnknownTable { blocks, count }
}

/// A basis of the space of degree-d bimodule maps M → N.
pub fn hom_basis(m: &Obj, n: &Obj, d: i64) -> Vec<Morphism> {
    assert_eq!(m.left, n.left, "hom requires a shared left ring");
    assert_eq!(m.right, n.right, "hom requires a shared right ring");
    let table = unknowns_for(m, n, d);
    if table.count == 0 {
        return Vec::new();
    }
    // Rows of the constraint matrix, keyed by (generator, row, col, monomial).
    let mut row_index: BTreeMap<(usize, usize, usize, Monomial), usize> = BTreeMap::new();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut add = |key: (usize, usize, usize, Monomial), unknown: usize, coef: Q, width: usize| {
        let idx = *row_index.entry(key).or_insert_with(|| {
            rows.push(vec![Q::zero(); width]);
            rows.len() - 1
        });
        rows[idx][unknown] += coef;
    };
    for g in 0..m.right.nvars() {
        // ρ_M(g)·Φ − Φ·ρ_N(g) = 0
        for a in 0..m.rank() {
            for b in 0..n.rank() {
                // Σ_k ρ_M(g)[a][k] · Φ[k][b]
                for k in 0..m.rank() {
                    let known = &m.action[g][a][k];
                    if known.is_zero() {
                        continue;
                    }
                    let (base, monos) = &table.blocks[k][b];
                    for (u, mono) in monos.iter().enumerate() {
                        let prod = known.mul(&SkewPoly::monomial(mono.clone(), num_traits::One::one()));
                        for (pm, pc) in prod.terms() {
                            add((g, a, b, pm.clone()), base + u, pc.clone(), table.count);
                        }
                    }
                }
                // − Σ_k Φ[a][k] · ρ_N(g)[k][b]
                for k in 0..n.rank() {
                    let known = &n.action[g][k][b];
                    if known.is_zero() {
                        continue;
                    }
                    let (base, monos) = &table.blocks[a][k];
                    for (u, mono) in monos.iter().enumerate() {
                        let prod = SkewPoly::monomial(mono.clone(), num_traits::One::one()).mul(known);
                        for (pm, pc) in prod.terms() {
                            add((g, a, b, pm.clone()), base + u, -pc.clone(), table.count);
                        }
                    }
                }
            }
        }
    }
    let mat = Matrix::from_rows(rows);
    let null = if mat.rows == 0 {
        // no constraints at all: every unknown is free
        let mut vs = Vec::new();
        for i in 0..table.count {
            let mut v = vec![Q::zero(); table.count];
            v[i] = num_traits::One::one();
            vs.push(v);
        }
        vs
    } else {
        mat.nullspace()
    };
    null.into_iter()
        .map(|v| {
            let mut matrix = Vec::with_capacity(m.rank());
            for a in 0..m.rank() {
                let mut row = Vec::with_capacity(n.rank());
                for b in 0..n.rank() {
                    let (base, monos) = &table.blocks[a][b];
                    let mut p = SkewPoly::zero(m.left.nvars());
                    for (u, mono) in monos.iter().enumerate() {
                        if !v[base + u].is_zero() {
                            p = p.add(&SkewPoly::monomial(mono.clone(), v[base + u].clone()));
                        }
                    }
                    row.push(p);
                }
                matrix.push(row);
            }
            Morphism { source: m.clone(), target: n.clone(), degree: d, matrix }
        })
        .collect()
}

/// Hom dimension per degree up to `d_max`, starting from the lowest degree
/// in which a nonzero entry is possible at all.
pub fn graded_hom_series(m: &Obj, n: &Obj, d_max: i64) -> GradedDimSeries {
    let lo = n
        .basis
        .iter()
        .map(|f| f.degree)
        .min()
        .unwrap_or(0)
        .saturating_sub(m.basis.iter().map(|e| e.degree).max().unwrap_or(0));
    let mut dims = BTreeMap::new();
    for d in lo..=d_max {
        let k = hom_basis(m, n, d).len();
        if k > 0 {
            dims.insert(d, k);
        }
    }
    GradedDimSeries { dims, cutoff: d_max }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimod::{base, b_obj, bbar_obj, shift, verify_morphism, BaseTag, Obj, Ring};
    use crate::linalg::Matrix;

    #[test]
    fn hom_b_to_unit_is_multiplication() {
        let b = b_obj();
        let r = shift(&base(BaseTag::UnitR), -1);
        let maps = hom_basis(&b, &r, 0);
        assert_eq!(maps.len(), 1);
        let m = &maps[0];
        assert_eq!(verify_morphism(m), Ok(()));
        // up to a scalar this is 1⊗1 ↦ 1, 1⊗x1 ↦ x1
        let c = m.matrix[0][0].clone();
        assert!(!c.is_zero());
        let unit = c.terms().next().unwrap().1.clone();
        assert_eq!(m.matrix[1][0], SkewPoly::var(2, 0).scale(&unit));
    }

    #[test]
    fn hom_unit_to_twist_vanishes() {
        let r = base(BaseTag::UnitR);
        let u = base(BaseTag::U);
        for d in -4..=12 {
            assert!(hom_basis(&r, &u, d).is_empty(), "degree {}", d);
        }
    }

    #[test]
    fn end_degree_zero_of_b_is_scalars() {
        let b = b_obj();
        let maps = hom_basis(&b, &b, 0);
        assert_eq!(maps.len(), 1);
        assert!(maps[0].matrix[0][1].is_zero());
        let bb = bbar_obj();
        assert_eq!(hom_basis(&bb, &bb, 0).len(), 1);
    }

    #[test]
    fn unit_endomorphisms_are_central() {
        let r = base(BaseTag::UnitR);
        let s = graded_hom_series(&r, &r, 8);
        assert_eq!(s.dim(0), 1);
        assert_eq!(s.dim(2), 0);
        assert_eq!(s.dim(4), 2);
        assert_eq!(s.dim(8), 3);
    }

    #[test]
    fn hom_series_examples() {
        let b = b_obj();
        let r = base(BaseTag::UnitR);
        let s = graded_hom_series(&b, &r, 9);
        assert_eq!(s.dim(1), 1);
        assert_eq!(s.dim(5), 2);
        assert_eq!(s.dim(9), 3);
        let s = graded_hom_series(&r, &b, 11);
        assert_eq!(s.dim(3), 1);
        assert_eq!(s.dim(7), 2);
        assert_eq!(s.dim(11), 3);
        let s = graded_hom_series(&b, &bbar_obj(), 6);
        assert_eq!(s.dim(2), 2);
        assert_eq!(s.dim(6), 4);
    }

    #[test]
    fn solver_results_verify_and_are_order_independent() {
        let b = b_obj();
        let bb = tensor_pair();
        for d in 0..=4 {
            for phi in hom_basis(&b, &bb, d) {
                assert_eq!(verify_morphism(&phi), Ok(()));
            }
        }
    }

    fn tensor_pair() -> Obj {
        crate::bimod::tensor(&b_obj(), &b_obj())
    }

    /// Independent dense oracle: allow every monomial up to the largest
    /// entry degree, impose intertwining only, then read off the dimension
    /// of the degree-d homogeneous part of the solution space.
    fn hom_dim_oracle(m: &Obj, n: &Obj, d: i64) -> usize {
        let cap = d + m.basis.iter().map(|e| e.degree).max().unwrap()
            - n.basis.iter().map(|e| e.degree).min().unwrap();
        // unknowns: (a, b, monomial of degree ≤ cap)
        let mut unknowns = Vec::new();
        for a in 0..m.rank() {
            for b in 0..n.rank() {
                let mut deg = 0;
                while deg <= cap {
                    for mono in m.left.monomials_of_degree(deg) {
                        unknowns.push((a, b, mono));
                    }
                    deg += 2;
                }
            }
        }
        let mut row_index: BTreeMap<(usize, usize, usize, Monomial), usize> = BTreeMap::new();
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for g in 0..m.right.nvars() {
            for (u, (a, b, mono)) in unknowns.iter().enumerate() {
                // contribution of unknown u to every (row, col) of the
                // difference ρ_M(g)Φ − Φρ_N(g)
                for arow in 0..m.rank() {
                    let known = &m.action[g][arow][*a];
                    if known.is_zero() {
                        continue;
                    }
                    let prod = known.mul(&SkewPoly::monomial(mono.clone(), num_traits::One::one()));
                    for (pm, pc) in prod.terms() {
                        let key = (g, arow, *b, pm.clone());
                        let idx = *row_index.entry(key).or_insert_with(|| {
                            rows.push(vec![Q::zero(); unknowns.len()]);
                            rows.len() - 1
                        });
                        rows[idx][u] += pc;
                    }
                }
                for bcol in 0..n.rank() {
                    let known = &n.action[g][*b][bcol];
                    if known.is_zero() {
                        continue;
                    }
                    let prod = SkewPoly::monomial(mono.clone(), num_traits::One::one()).mul(known);
                    for (pm, pc) in prod.terms() {
                        let key = (g, *a, bcol, pm.clone());
                        let idx = *row_index.entry(key).or_insert_with(|| {
                            rows.push(vec![Q::zero(); unknowns.len()]);
                            rows.len() - 1
                        });
                        rows[idx][u] -= pc;
                    }
                }
            }
        }
        let null = Matrix::from_rows(rows).nullspace();
        // degree-d part: solution vectors restricted to the coordinates
        // whose unknown has the right homogeneous degree
        let want: Vec<usize> = unknowns
            .iter()
            .enumerate()
            .filter(|(_, (a, b, mono))| {
                m.left.monomial_degree(mono) == d + m.basis[*a].degree - n.basis[*b].degree
            })
            .map(|(i, _)| i)
            .collect();
        let proj: Vec<Vec<Q>> =
            null.iter().map(|v| want.iter().map(|&i| v[i].clone()).collect()).collect();
        Matrix::independent_rows(&proj).len()
    }

    #[test]
    fn solver_agrees_with_dense_oracle() {
        let b = b_obj();
        let r = base(BaseTag::UnitR);
        let u = base(BaseTag::U);
        let bb = tensor_pair();
        let pairs: Vec<(Obj, Obj)> = vec![
            (r.clone(), r.clone()),
            (b.clone(), r.clone()),
            (r.clone(), b.clone()),
            (b.clone(), b.clone()),
            (u.clone(), b.clone()),
            (bb.clone(), b.clone()),
            (b.clone(), bb.clone()),
        ];
        for (m, n) in pairs {
            for d in -6..=6 {
                assert_eq!(
                    hom_basis(&m, &n, d).len(),
                    hom_dim_oracle(&m, &n, d),
                    "pair {:?} {:?} degree {}",
                    m.basis.iter().map(|e| &e.label).collect::<Vec<_>>(),
                    n.basis.iter().map(|e| &e.label).collect::<Vec<_>>(),
                    d
                );
            }
        }
    }

    #[test]
    fn ring_monomials_of_degree() {
        assert_eq!(Ring::Rs.monomials_of_degree(4).len(), 2);
        assert_eq!(Ring::R2.monomials_of_degree(6).len(), 4);
        assert_eq!(Ring::R3.monomials_of_degree(4).len(), 6);
        assert!(Ring::R2.monomials_of_degree(3).is_empty());
        assert!(Ring::R2.monomials_of_degree(-2).is_empty());
    }
}
