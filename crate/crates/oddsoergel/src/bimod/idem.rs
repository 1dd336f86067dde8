//! Splitting idempotent endomorphisms into explicit direct summands, and
//! isomorphism testing between presented bimodules.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::linalg::Matrix;
use crate::skewpoly::{Monomial, Q, SkewPoly};

use super::{
    compose, hom_basis, verify_morphism, BasisElem, BimoduleObj, Elem, Morphism, Obj,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitError {
    NotIdempotent,
    NotDegreeZero,
}

impl std::fmt::Display for SplitError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SplitError::NotIdempotent => write!(f, "endomorphism is not idempotent"),
            SplitError::NotDegreeZero => write!(f, "idempotent must have degree zero"),
        }
    }
}

/// Coordinates of the degree-d slice of M: pairs (basis index, monomial).
fn slice_coords(m: &BimoduleObj, d: i64) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for (a, e) in m.basis.iter().enumerate() {
        for mono in m.left.monomials_of_degree(d - e.degree) {
            out.push((a, mono));
        }
    }
    out
}

fn elem_to_coords(v: &Elem, coords: &[(usize, Monomial)]) -> Vec<Q> {
    coords.iter().map(|(a, mono)| v[*a].coeff(mono)).collect()
}

fn coords_to_elem(m: &BimoduleObj, cs: &[Q], coords: &[(usize, Monomial)]) -> Elem {
    let mut v = super::elem_zero(m);
    for ((a, mono), c) in coords.iter().zip(cs) {
        if !c.is_zero() {
            v[*a] = v[*a].add(&SkewPoly::monomial(mono.clone(), c.clone()));
        }
    }
    v
}

/// Splits a degree-0 idempotent e = e∘e into (summand, incl, proj) with
/// proj∘incl = id on the summand and incl∘proj = e.
///
/// Generators of the image are chosen degreewise (lowest degree first,
/// leftmost coordinate first), which makes the summand basis deterministic.
pub fn split_idempotent(e: &Morphism) -> Result<(Obj, Morphism, Morphism), SplitError> {
    if e.degree != 0 {
        return Err(SplitError::NotDegreeZero);
    }
    let m = &e.source;
    assert!(Arc::ptr_eq(&e.source, &e.target) || e.source == e.target, "idempotent must be an endomorphism");
    if !compose(e, e).sub(e).is_zero() {
        return Err(SplitError::NotIdempotent);
    }
    let lo = m.basis.iter().map(|b| b.degree).min().unwrap_or(0);
    let hi = m.basis.iter().map(|b| b.degree).max().unwrap_or(0);
    // generators: elements of im(e) not in the left span of earlier ones
    let mut gens: Vec<Elem> = Vec::new();
    let mut gen_degs: Vec<i64> = Vec::new();
    let mut d = lo;
    while d <= hi {
        let coords = slice_coords(m, d);
        if !coords.is_empty() {
            // image of e on this slice
            let mut image_rows: Vec<Vec<Q>> = Vec::new();
            for i in 0..coords.len() {
                let mut unit = vec![Q::zero(); coords.len()];
                unit[i] = Q::one();
                let v = coords_to_elem(m, &unit, &coords);
                image_rows.push(elem_to_coords(&e.apply(&v), &coords));
            }
            // left span of the generators found so far, on this slice
            let mut span_rows: Vec<Vec<Q>> = Vec::new();
            for (g, gd) in gens.iter().zip(&gen_degs) {
                for mono in m.left.monomials_of_degree(d - gd) {
                    let c = SkewPoly::monomial(mono.clone(), Q::one());
                    span_rows.push(elem_to_coords(&super::elem_left_mul(&c, g), &coords));
                }
            }
            let offset = span_rows.len();
            let mut all = span_rows;
            all.extend(image_rows);
            for idx in Matrix::independent_rows(&all) {
                if idx >= offset {
                    let picked = all[idx].clone();
                    gens.push(coords_to_elem(m, &picked, &coords));
                    gen_degs.push(d);
                }
            }
        }
        d += 1;
    }
    // summand object: right action of each generator of the right ring,
    // solved in the left span of the generators
    let nv = m.left.nvars();
    let express = |v: &Elem, vdeg: i64| -> Option<Vec<SkewPoly>> {
        let coords = slice_coords(m, vdeg);
        let target = elem_to_coords(v, &coords);
        // unknowns: one coefficient per (generator, monomial)
        let mut cols: Vec<(usize, Monomial)> = Vec::new();
        for (gi, gd) in gen_degs.iter().enumerate() {
            for mono in m.left.monomials_of_degree(vdeg - gd) {
                cols.push((gi, mono));
            }
        }
        if cols.is_empty() {
            return if target.iter().all(|c| c.is_zero()) {
                Some(vec![SkewPoly::zero(nv); gens.len()])
            } else {
                None
            };
        }
        let mut mat = Matrix::zero(coords.len(), cols.len());
        for (j, (gi, mono)) in cols.iter().enumerate() {
            let c = SkewPoly::monomial(mono.clone(), Q::one());
            let col = elem_to_coords(&super::elem_left_mul(&c, &gens[*gi]), &coords);
            for (i, v) in col.into_iter().enumerate() {
                mat.set(i, j, v);
            }
        }
        let sol = mat.solve(&target)?;
        let mut out = vec![SkewPoly::zero(nv); gens.len()];
        for (j, (gi, mono)) in cols.iter().enumerate() {
            if !sol[j].is_zero() {
                out[*gi] = out[*gi].add(&SkewPoly::monomial(mono.clone(), sol[j].clone()));
            }
        }
        Some(out)
    };
    let mut action = Vec::new();
    for g in 0..m.right.nvars() {
        let gdeg = m.right.weights()[g];
        let mut mat = Vec::new();
        for (gen, gd) in gens.iter().zip(&gen_degs) {
            let moved = super::elem_right_act(m, gen, &SkewPoly::var(m.right.nvars(), g));
            let row = express(&moved, gd + gdeg)
                .expect("image of idempotent is not stable under the right action");
            mat.push(row);
        }
        action.push(mat);
    }
    let summand = Arc::new(BimoduleObj {
        left: m.left,
        right: m.right,
        basis: gen_degs
            .iter()
            .enumerate()
            .map(|(i, &dg)| BasisElem { label: format!("p{}", i), degree: dg })
            .collect(),
        action,
        shift: 0,
    });
    debug_assert_eq!(summand.check(), Ok(()));
    // incl: generators written on M's basis
    let incl = Morphism::new(summand.clone(), e.source.clone(), 0, gens.clone());
    // proj: e(basis of M) expressed over the generators
    let mut proj_rows = Vec::new();
    for a in 0..m.rank() {
        let img = e.apply(&super::elem_unit(m, a));
        let row =
            express(&img, m.basis[a].degree).expect("idempotent image not in generator span");
        proj_rows.push(row);
    }
    let proj = Morphism::new(e.source.clone(), summand.clone(), 0, proj_rows);
    debug_assert_eq!(verify_morphism(&incl), Ok(()));
    debug_assert_eq!(verify_morphism(&proj), Ok(()));
    Ok((summand, incl, proj))
}

/// Searches for a degree-0 isomorphism; returns (forward, backward) with
/// backward ∘ forward = id and forward ∘ backward = id.
pub fn find_iso(m: &Obj, n: &Obj) -> Option<(Morphism, Morphism)> {
    if m.left != n.left || m.right != n.right || m.rank() != n.rank() {
        return None;
    }
    {
        let mut md = m.degrees();
        let mut nd = n.degrees();
        md.sort_unstable();
        nd.sort_unstable();
        if md != nd {
            return None;
        }
    }
    let fwd = hom_basis(m, n, 0);
    let bwd = hom_basis(n, m, 0);
    for f in &fwd {
        for g in &bwd {
            let fg = compose(f, g);
            // f∘g = c·id forces c ≠ 0 and then g/c is a two-sided inverse
            // whenever g∘f is also a scalar (true for the rank-one End
            // spaces this is used on).
            let c = fg.matrix[0][0].clone();
            if let Some(cv) = const_value(&c) {
                if !cv.is_zero() && fg.is_scalar_identity(&cv) {
                    let ginv = g.scale(&(Q::one() / cv));
                    if compose(&ginv, f).is_identity_matrix()
                        && compose(f, &ginv).is_identity_matrix()
                    {
                        return Some((f.clone(), ginv));
                    }
                }
            }
        }
    }
    None
}

fn const_value(p: &SkewPoly) -> Option<Q> {
    if p.is_zero() {
        return Some(Q::zero());
    }
    if p.num_terms() == 1 {
        let (m, c) = p.terms().next().unwrap();
        if m.exps().iter().all(|&e| e == 0) {
            return Some(c.clone());
        }
    }
    None
}

pub fn is_isomorphic(m: &Obj, n: &Obj) -> bool {
    if m == n {
        return true;
    }
    find_iso(m, n).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimod::{b_obj, base, shift, tensor, BaseTag};

    #[test]
    fn identity_idempotent_returns_whole_object() {
        let b = b_obj();
        let id = Morphism::identity(&b);
        let (s, incl, proj) = split_idempotent(&id).unwrap();
        assert_eq!(s.degrees(), b.degrees());
        assert!(compose(&proj, &incl).is_identity_matrix());
        assert!(compose(&incl, &proj).is_identity_matrix());
    }

    #[test]
    fn zero_idempotent_returns_zero_summand() {
        let b = b_obj();
        let z = Morphism::zero(b.clone(), b.clone(), 0);
        let (s, _, _) = split_idempotent(&z).unwrap();
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn non_idempotent_rejected() {
        let b = b_obj();
        let id = Morphism::identity(&b);
        assert_eq!(
            split_idempotent(&id.scale(&crate::skewpoly::q_int(2))),
            Err(SplitError::NotIdempotent)
        );
    }

    #[test]
    fn iso_detects_shifted_copies() {
        let b = b_obj();
        assert!(is_isomorphic(&b, &b));
        assert!(!is_isomorphic(&b, &shift(&b, 2)));
        assert!(!is_isomorphic(&b, &base(BaseTag::UnitR)));
        let uu = tensor(&base(BaseTag::U), &base(BaseTag::U));
        assert!(is_isomorphic(&uu, &base(BaseTag::UnitR)));
    }
}
