//! Three-variable computations: the bimodules B₁, B₂, B̲₁ over the
//! skew-commuting ring in x1, x2, x3, the subring of odd symmetric
//! functions, the presented bimodule R⊗R{−3} over it, and the
//! degreewise verification that the exact sequence
//! 0 → R⊗R{−3} → B₁⊗B₂⊗B₁ → B̲₁ → 0 admits no splitting.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::bimod::{
    elem_left_mul, elem_right_act, elem_zero, hom_basis, BasisElem, BimoduleObj, Elem,
    GradedDimSeries, Morphism, Obj, Ring,
};
use crate::linalg::Matrix;
use crate::skewpoly::{degree_slice, Monomial, Q, RingTag, SkewPoly};

/// Which kernel to slice: of ∂₁, of ∂₂, or of both.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Invariants {
    First,
    Second,
    Both,
}

/// A graded slice of an invariant subring, with its chosen basis.
#[derive(Clone, Debug)]
pub struct DegSlice {
    pub degree: i64,
    pub basis: Vec<SkewPoly>,
}

/// Basis of the degree-d slice of ker ∂₁ (resp. ∂₂, resp. both) in R₃,
/// by exact nullspace computation. Panics on odd d.
pub fn invariant_slice(which: Invariants, d: i64) -> DegSlice {
    assert!(d % 2 == 0, "invariant slices live in even degrees");
    let ambient = degree_slice(RingTag::R3, d);
    if ambient.is_empty() {
        return DegSlice { degree: d, basis: Vec::new() };
    }
    let target = degree_slice(RingTag::R3, d - 2);
    let coords = |p: &SkewPoly| -> Vec<Q> {
        target.iter().map(|m| p.coeff(m.lex_leading().unwrap().0)).collect()
    };
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for f in &ambient {
        let mut row = Vec::new();
        if matches!(which, Invariants::First | Invariants::Both) {
            row.extend(coords(&f.demazure(0)));
        }
        if matches!(which, Invariants::Second | Invariants::Both) {
            row.extend(coords(&f.demazure(1)));
        }
        rows.push(row);
    }
    // nullspace of the transpose: vectors v with Σ v_i · ∂(m_i) = 0
    let cols = rows.first().map_or(0, |r| r.len());
    let mut mat = Matrix::zero(cols, ambient.len());
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            mat.set(j, i, v.clone());
        }
    }
    let basis = mat
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut p = SkewPoly::zero(3);
            for (m, c) in ambient.iter().zip(v) {
                if !c.is_zero() {
                    p = p.add(&m.scale(&c));
                }
            }
            p
        })
        .collect();
    DegSlice { degree: d, basis }
}

fn p3(terms: &[(&[u32], i64)]) -> SkewPoly {
    SkewPoly::from_terms(3, terms)
}

/// B_i = R⊗_{R^i}R{−1} presented on the left basis {1⊗1, 1⊗x_{i+1}}
/// (zero-based `i`); the right action is read off the decomposition
/// f = c0 + c1·x_{i+1} with c0, c1 ∈ ker ∂_{i+1}.
pub fn b_i(i: usize) -> Obj {
    assert!(i < 2);
    let nv = 3;
    let var = |k: usize| SkewPoly::var(nv, k);
    let basis = vec![
        BasisElem { label: "1⊗1".into(), degree: -1 },
        BasisElem { label: format!("1⊗x{}", i + 1), degree: 1 },
    ];
    let mut action = Vec::new();
    for g in 0..3 {
        let mut mat = vec![vec![SkewPoly::zero(nv); 2]; 2];
        for (row, lead) in [SkewPoly::one(nv), var(i)].into_iter().enumerate() {
            let prod = lead.mul(&var(g));
            let (c0, c1) = prod.left_decompose_for(i, i);
            mat[row][0] = c0;
            mat[row][1] = c1;
        }
        action.push(mat);
    }
    let obj = BimoduleObj { left: Ring::R3, right: Ring::R3, basis, action, shift: -1 };
    debug_assert_eq!(obj.check(), Ok(()));
    Arc::new(obj)
}

/// The twisted bimodule R̲¹ with u·f = s₁(f)·u.
pub fn u_1() -> Obj {
    let obj = BimoduleObj {
        left: Ring::R3,
        right: Ring::R3,
        basis: vec![BasisElem { label: "u".into(), degree: 0 }],
        action: vec![
            vec![vec![p3(&[(&[0, 1, 0], -1)])]],
            vec![vec![p3(&[(&[1, 0, 0], -1)])]],
            vec![vec![p3(&[(&[0, 0, 1], -1)])]],
        ],
        shift: 0,
    };
    debug_assert_eq!(obj.check(), Ok(()));
    Arc::new(obj)
}

/// B̲₁ = B₁ ⊗ R̲¹.
pub fn bbar_1() -> Obj {
    crate::bimod::tensor(&b_i(0), &u_1())
}

/// Letters for three-strand tensor words.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    B1,
    B2,
    U1,
}

pub fn word_obj3(word: &[Letter]) -> Obj {
    let mut it = word.iter();
    let first = match it.next().expect("empty word") {
        Letter::B1 => b_i(0),
        Letter::B2 => b_i(1),
        Letter::U1 => u_1(),
    };
    it.fold(first, |acc, l| {
        let next = match l {
            Letter::B1 => b_i(0),
            Letter::B2 => b_i(1),
            Letter::U1 => u_1(),
        };
        crate::bimod::tensor(&acc, &next)
    })
}

/// Dimension of the degree-d slice of a tensor word over R₃.
pub fn bimodule_slice(word: &[Letter], d: i64) -> usize {
    let obj = word_obj3(word);
    obj_slice_dim(&obj, d)
}

fn r3_slice_dim(d: i64) -> usize {
    if d < 0 || d % 2 != 0 {
        0
    } else {
        let k = d / 2;
        ((k + 1) * (k + 2) / 2) as usize
    }
}

fn obj_slice_dim(obj: &BimoduleObj, d: i64) -> usize {
    obj.basis.iter().map(|b| r3_slice_dim(d - b.degree)).sum()
}

/// Coordinates of the degree-d slice of an R₃-presented bimodule.
fn slice_coords(obj: &BimoduleObj, d: i64) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for (a, e) in obj.basis.iter().enumerate() {
        for m in Ring::R3.monomials_of_degree(d - e.degree) {
            out.push((a, m));
        }
    }
    out
}

fn elem_to_coords(v: &Elem, coords: &[(usize, Monomial)]) -> Vec<Q> {
    coords.iter().map(|(a, m)| v[*a].coeff(m)).collect()
}

/// Graded dimensions of the presented bimodule R⊗_{R^[2]}R{−3}: pure
/// tensors of monomials modulo rf⊗r′ − r⊗fr′ for invariant f of positive
/// degree, computed degreewise by exact rank.
pub fn b121hat_dims(d_max: i64) -> GradedDimSeries {
    let mut dims = BTreeMap::new();
    let mut d = -3i64;
    while d <= d_max {
        let n = b121hat_slice_dim(d);
        if n > 0 {
            dims.insert(d, n);
        }
        d += 2;
    }
    GradedDimSeries { dims, cutoff: d_max }
}

/// Degree-d dimension of R⊗_A R{shift} for A the chosen invariant subring,
/// presented by pure tensors of monomials modulo the positive-degree
/// relations rf⊗r′ − r⊗fr′.
pub fn presented_slice_dim(which: Invariants, shift: i64, d: i64) -> usize {
    let total = d - shift;
    if total < 0 || total % 2 != 0 {
        return 0;
    }
    let pairs = pure_tensor_index(total);
    if pairs.is_empty() {
        return 0;
    }
    let index: BTreeMap<(Monomial, Monomial), usize> =
        pairs.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut relations: Vec<Vec<Q>> = Vec::new();
    let mut j = 2i64;
    while j <= total {
        let inv = invariant_slice(which, j);
        for f in &inv.basis {
            let mut d1 = 0i64;
            while d1 + j <= total {
                for r in Ring::R3.monomials_of_degree(d1) {
                    let rp = SkewPoly::monomial(r.clone(), Q::one());
                    let rf = rp.mul(f);
                    for r2 in Ring::R3.monomials_of_degree(total - d1 - j) {
                        let r2p = SkewPoly::monomial(r2.clone(), Q::one());
                        let fr2 = f.mul(&r2p);
                        let mut row = vec![Q::zero(); pairs.len()];
                        for (m, c) in rf.terms() {
                            row[index[&(m.clone(), r2.clone())]] += c;
                        }
                        for (m, c) in fr2.terms() {
                            row[index[&(r.clone(), m.clone())]] -= c;
                        }
                        if row.iter().any(|c| !c.is_zero()) {
                            relations.push(row);
                        }
                    }
                }
                d1 += 2;
            }
        }
        j += 2;
    }
    let rank = Matrix::independent_rows(&relations).len();
    pairs.len() - rank
}

fn pure_tensor_index(total: i64) -> Vec<(Monomial, Monomial)> {
    // pairs of monomials with degree sum `total`
    let mut out = Vec::new();
    let mut d1 = 0i64;
    while d1 <= total {
        for m1 in Ring::R3.monomials_of_degree(d1) {
            for m2 in Ring::R3.monomials_of_degree(total - d1) {
                out.push((m1.clone(), m2.clone()));
            }
        }
        d1 += 2;
    }
    out
}

pub fn b121hat_slice_dim(d: i64) -> usize {
    presented_slice_dim(Invariants::Both, -3, d)
}

/// Outcome of the splitting-obstruction computation.
#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub d_max: i64,
    /// Dimension of {v ∈ (B₁B₂B₁)₋₃ : f·v = v·f for all invariant f of
    /// positive degree up to the working bound}.
    pub inclusion_dim: usize,
    /// Largest degree ≤ d_max through which the inclusion generator stays
    /// injective on every slice (equals d_max on success).
    pub injective_upto: i64,
    /// Cokernel graded dimensions equal those of B̲₁ on every slice ≤ d_max.
    pub cokernel_match: bool,
    /// Dimension of the space of degree-0 maps B̲₁ → B₁B₂B₁ splitting the
    /// quotient (0 = the sequence does not split).
    pub section_dim: usize,
    /// Dimension of the degree-0 Hom space B₁B₂B₁ → B̲₁ the quotient was
    /// drawn from.
    pub quotient_dim: usize,
}

impl ObstructionReport {
    pub fn passes(&self) -> bool {
        self.inclusion_dim == 1
            && self.injective_upto == self.d_max
            && self.cokernel_match
            && self.section_dim == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "inclusion_dim": self.inclusion_dim,
            "injective_upto": self.injective_upto,
            "cokernel_match": self.cokernel_match,
            "section_dim": self.section_dim,
        })
    }
}

/// Runs the full splitting-obstruction computation up to `d_max`.
pub fn obstruction_report(d_max: i64) -> ObstructionReport {
    assert!(d_max >= 8, "too few degrees to constrain the computation");
    let t = word_obj3(&[Letter::B1, Letter::B2, Letter::B1]);
    let bbar = bbar_1();

    // (i) the inclusion: v in the degree −3 slice commuting with every
    // positive-degree invariant element.
    let coords_m3 = slice_coords(&t, -3);
    let inclusion_dim;
    let generator: Elem;
    {
        let mut rows: Vec<Vec<Q>> = Vec::new();
        let mut unit_elems = Vec::new();
        for i in 0..coords_m3.len() {
            let (a, m) = &coords_m3[i];
            let mut v = elem_zero(&t);
            v[*a] = SkewPoly::monomial(m.clone(), Q::one());
            unit_elems.push(v);
        }
        let mut j = 2i64;
        while -3 + j <= d_max {
            let inv = invariant_slice(Invariants::Both, j);
            for f in &inv.basis {
                let out_coords = slice_coords(&t, -3 + j);
                for v in &unit_elems {
                    let lhs = elem_left_mul(f, v);
                    let rhs = elem_right_act(&t, v, f);
                    let diff: Elem =
                        lhs.iter().zip(&rhs).map(|(a, b)| a.sub(b)).collect();
                    rows.push(elem_to_coords(&diff, &out_coords));
                }
            }
            j += 2;
        }
        // rows were generated unknown-major, in blocks of one row per unit
        // vector; transpose each block into constraint rows over the
        // unknown coordinates of v
        let n_unknowns = coords_m3.len();
        let mut constraint_rows: Vec<Vec<Q>> = Vec::new();
        for block in rows.chunks(n_unknowns) {
            let w = block.first().map_or(0, |r| r.len());
            for k in 0..w {
                let mut row = Vec::with_capacity(n_unknowns);
                for u in 0..n_unknowns {
                    row.push(block[u][k].clone());
                }
                if row.iter().any(|c| !c.is_zero()) {
                    constraint_rows.push(row);
                }
            }
        }
        let m = Matrix::from_rows(constraint_rows);
        let null = if m.rows == 0 {
            (0..n_unknowns)
                .map(|i| {
                    let mut v = vec![Q::zero(); n_unknowns];
                    v[i] = Q::one();
                    v
                })
                .collect::<Vec<_>>()
        } else {
            m.nullspace()
        };
        inclusion_dim = null.len();
        generator = if let Some(v0) = null.first() {
            let mut v = elem_zero(&t);
            for ((a, m), c) in coords_m3.iter().zip(v0) {
                if !c.is_zero() {
                    v[*a] = v[*a].add(&SkewPoly::monomial(m.clone(), c.clone()));
                }
            }
            v
        } else {
            elem_zero(&t)
        };
    }

    // (ii) injectivity of r⊗r′ ↦ r·v·r′ per slice, against the presented
    // dimensions, and the cokernel comparison with B̲₁. The right
    // translates v·r′ are built incrementally, one generator at a time.
    let mut right_translates: BTreeMap<Monomial, Elem> = BTreeMap::new();
    right_translates.insert(Monomial::one(3), generator.clone());
    {
        let mut deg = 2i64;
        while deg <= d_max + 3 {
            for mono in Ring::R3.monomials_of_degree(deg) {
                let exps = mono.exps();
                let g = exps.iter().rposition(|&e| e > 0).unwrap();
                let mut parent = mono.exps().to_vec();
                parent[g] -= 1;
                let parent_elem = right_translates[&Monomial::new(parent)].clone();
                right_translates
                    .insert(mono, crate::bimod::elem_act_generator(&t, &parent_elem, g));
            }
            deg += 2;
        }
    }
    let mut injective_upto = d_max;
    let mut cokernel_match = true;
    let mut d = -3i64;
    while d <= d_max {
        let total = d + 3;
        if total % 2 != 0 {
            d += 1;
            continue;
        }
        let pairs = pure_tensor_index(total);
        let out_coords = slice_coords(&t, d);
        let mut rows = Vec::with_capacity(pairs.len());
        for (r, r2) in &pairs {
            let left = SkewPoly::monomial(r.clone(), Q::one());
            let img = elem_left_mul(&left, &right_translates[r2]);
            rows.push(elem_to_coords(&img, &out_coords));
        }
        let rank = Matrix::independent_rows(&rows).len();
        let presented = b121hat_slice_dim(d);
        if rank != presented && injective_upto == d_max {
            injective_upto = d - 1;
        }
        let coker = obj_slice_dim(&t, d) - rank;
        if coker != obj_slice_dim(&bbar, d) {
            cokernel_match = false;
        }
        d += 2;
    }

    // (iii) sections of the quotient. The degree-0 Hom space to B̲₁ is
    // computed exactly; the quotient is its generator normalized to kill
    // the inclusion image, and a section would be a degree-0 map backwards
    // composing with it to the identity.
    let hom_q = hom_basis(&t, &bbar, 0);
    let quotient_dim = hom_q.len();
    let section_dim = if let Some(q) = hom_q.first() {
        let sections = hom_basis(&bbar, &t, 0);
        // solve Σ c_l (σ_l ∘ q) = id over the rationals
        let id = Morphism::identity(&bbar);
        let mut columns: Vec<Vec<Q>> = Vec::new();
        let mut rhs: Vec<Q> = Vec::new();
        let entry_monos: Vec<(usize, usize, Monomial)> = {
            let mut out = Vec::new();
            for a in 0..bbar.rank() {
                for b in 0..bbar.rank() {
                    let deg = bbar.basis[a].degree - bbar.basis[b].degree;
                    for m in Ring::R3.monomials_of_degree(deg) {
                        out.push((a, b, m));
                    }
                }
            }
            out
        };
        for (a, b, m) in &entry_monos {
            rhs.push(id.matrix[*a][*b].coeff(m));
        }
        for s in &sections {
            let comp = crate::bimod::compose(s, q);
            let mut col = Vec::new();
            for (a, b, m) in &entry_monos {
                col.push(comp.matrix[*a][*b].coeff(m));
            }
            columns.push(col);
        }
        let mut mat = Matrix::zero(rhs.len(), sections.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                mat.set(i, j, v.clone());
            }
        }
        match mat.solve(&rhs) {
            Some(_) => 1 + mat.nullspace().len(),
            None => 0,
        }
    } else {
        0
    };

    ObstructionReport {
        d_max,
        inclusion_dim,
        injective_upto,
        cokernel_match,
        section_dim,
        quotient_dim,
    }
}
