//! Graded bimodules over base-ring pairs drawn from {R, R^s} (and R₃ for
//! the three-variable computations), presented by a finite left basis
//! together with one right-action matrix per generator of the right ring.
//!
//! A bimodule M with left ring A and right ring A′ is stored as
//! M = ⊕_α A·e_α with e_α·g = Σ_β ρ(g)[α][β]·e_β for each generator g of
//! A′. Morphisms are matrices over the left ring, rows indexed by the
//! source basis: φ(e_α) = Σ_β Φ[α][β]·f_β.

mod hom;
mod idem;
mod json;

pub use hom::{graded_hom_series, hom_basis, GradedDimSeries};
pub use idem::{find_iso, is_isomorphic, split_idempotent, SplitError};
pub use json::{morphism_to_json, obj_to_json};

use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::skewpoly::{exponent_tuples, Monomial, Q, SkewPoly};

/// Base rings the engine works over. `Rs` is presented on the anticommuting
/// generators E1 (degree 2) and E2 (degree 4).
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum Ring {
    R2,
    Rs,
    R3,
}

impl Ring {
    pub fn nvars(self) -> usize {
        match self {
            Ring::R2 | Ring::Rs => 2,
            Ring::R3 => 3,
        }
    }

    pub fn weights(self) -> &'static [i64] {
        match self {
            Ring::R2 => &[2, 2],
            Ring::Rs => &[2, 4],
            Ring::R3 => &[2, 2, 2],
        }
    }

    pub fn monomial_degree(self, m: &Monomial) -> i64 {
        m.exps().iter().zip(self.weights()).map(|(&e, &w)| e as i64 * w).sum()
    }

    pub fn poly_degree(self, p: &SkewPoly) -> Option<i64> {
        let mut deg = None;
        for (m, _) in p.terms() {
            let d = self.monomial_degree(m);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn is_homogeneous(self, p: &SkewPoly, d: i64) -> bool {
        p.terms().all(|(m, _)| self.monomial_degree(m) == d)
    }

    /// All monomials of the given weighted degree, lexicographic order.
    pub fn monomials_of_degree(self, d: i64) -> Vec<Monomial> {
        if d < 0 || d % 2 != 0 {
            return Vec::new();
        }
        match self {
            Ring::R2 => exponent_tuples(2, (d / 2) as u32).into_iter().map(Monomial::new).collect(),
            Ring::R3 => exponent_tuples(3, (d / 2) as u32).into_iter().map(Monomial::new).collect(),
            Ring::Rs => {
                let k = (d / 2) as u32;
                let mut out = Vec::new();
                for a in (0..=k).rev() {
                    if (k - a) % 2 == 0 {
                        out.push(Monomial::new(vec![a, (k - a) / 2]));
                    }
                }
                out.sort();
                out
            }
        }
    }
}

/// Matrix with skew-polynomial entries in the left ring.
pub type PolyMatrix = Vec<Vec<SkewPoly>>;

pub fn mat_zero(r: usize, c: usize, nvars: usize) -> PolyMatrix {
    vec![vec![SkewPoly::zero(nvars); c]; r]
}

pub fn mat_identity(n: usize, nvars: usize) -> PolyMatrix {
    let mut m = mat_zero(n, n, nvars);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = SkewPoly::one(nvars);
    }
    m
}

pub fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let nvars = a
        .first()
        .and_then(|r| r.first())
        .map(|p| p.nvars())
        .or_else(|| b.first().and_then(|r| r.first()).map(|p| p.nvars()))
        .unwrap_or(2);
    let rows = a.len();
    let mid = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    let mut out = mat_zero(rows, cols, nvars);
    for i in 0..rows {
        debug_assert_eq!(a[i].len(), mid);
        for k in 0..mid {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
            }
        }
    }
    out
}

pub fn mat_add(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.add(y)).collect())
        .collect()
}

pub fn mat_neg(a: &PolyMatrix) -> PolyMatrix {
    a.iter().map(|r| r.iter().map(|x| x.neg()).collect()).collect()
}

pub fn mat_scale(a: &PolyMatrix, c: &Q) -> PolyMatrix {
    a.iter().map(|r| r.iter().map(|x| x.scale(c)).collect()).collect()
}

pub fn mat_eq(a: &PolyMatrix, b: &PolyMatrix) -> bool {
    a == b
}

/// One labeled left-basis element with its internal degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisElem {
    pub label: String,
    pub degree: i64,
}

/// A graded bimodule presented by a finite left basis and right-action
/// matrices. Immutable after construction; shared via `Arc`.
#[derive(Clone, PartialEq, Debug)]
pub struct BimoduleObj {
    pub left: Ring,
    pub right: Ring,
    pub basis: Vec<BasisElem>,
    /// One matrix per generator of the right ring.
    pub action: Vec<PolyMatrix>,
    /// Accumulated grading shift (informational; degrees already include it).
    pub shift: i64,
}

pub type Obj = Arc<BimoduleObj>;

impl BimoduleObj {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.basis.iter().map(|b| b.degree).collect()
    }

    /// Checks the structural invariants: one action matrix per right
    /// generator, homogeneous entries of the correct degree, and exact
    /// pairwise anticommutativity ρ(g)ρ(h) + ρ(h)ρ(g) = 0 for g ≠ h.
    pub fn check(&self) -> Result<(), String> {
        let n = self.rank();
        if self.action.len() != self.right.nvars() {
            return Err("wrong number of action matrices".into());
        }
        for (g, mat) in self.action.iter().enumerate() {
            let gdeg = self.right.weights()[g];
            if mat.len() != n {
                return Err(format!("action matrix {} has wrong row count", g));
            }
            for (a, row) in mat.iter().enumerate() {
                if row.len() != n {
                    return Err(format!("action matrix {} has wrong column count", g));
                }
                for (b, entry) in row.iter().enumerate() {
                    let want = self.basis[a].degree + gdeg - self.basis[b].degree;
                    if !self.left.is_homogeneous(entry, want) {
                        return Err(format!(
                            "action entry ({},{}) of generator {} is not homogeneous of degree {}",
                            a, b, g, want
                        ));
                    }
                }
            }
        }
        for g in 0..self.action.len() {
            for h in (g + 1)..self.action.len() {
                let anti = mat_add(
                    &mat_mul(&self.action[g], &self.action[h]),
                    &mat_mul(&self.action[h], &self.action[g]),
                );
                if anti.iter().flatten().any(|p| !p.is_zero()) {
                    return Err(format!("right actions of generators {} and {} do not anticommute", g, h));
                }
            }
        }
        Ok(())
    }

    /// Extends the right action to an arbitrary element of the right ring,
    /// written in that ring's presentation (monomials act letter by letter).
    pub fn act_matrix(&self, c: &SkewPoly) -> PolyMatrix {
        let n = self.rank();
        let nv = self.left.nvars();
        let mut out = mat_zero(n, n, nv);
        for (m, coef) in c.terms() {
            let mut acc = mat_identity(n, nv);
            for (g, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    acc = mat_mul(&acc, &self.action[g]);
                }
            }
            out = mat_add(&out, &mat_scale(&acc, coef));
        }
        out
    }
}

/// Element of a bimodule: left-ring coordinates over the basis.
pub type Elem = Vec<SkewPoly>;

pub fn elem_zero(m: &BimoduleObj) -> Elem {
    vec![SkewPoly::zero(m.left.nvars()); m.rank()]
}

pub fn elem_unit(m: &BimoduleObj, i: usize) -> Elem {
    let mut v = elem_zero(m);
    v[i] = SkewPoly::one(m.left.nvars());
    v
}

pub fn elem_add(a: &Elem, b: &Elem) -> Elem {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn elem_neg(a: &Elem) -> Elem {
    a.iter().map(|x| x.neg()).collect()
}

/// Left multiplication by an element of the left ring.
pub fn elem_left_mul(c: &SkewPoly, v: &Elem) -> Elem {
    v.iter().map(|x| c.mul(x)).collect()
}

/// Right action by a single generator of the right ring.
pub fn elem_act_generator(m: &BimoduleObj, v: &Elem, g: usize) -> Elem {
    let mut out = elem_zero(m);
    for (a, va) in v.iter().enumerate() {
        if va.is_zero() {
            continue;
        }
        for (b, out_b) in out.iter_mut().enumerate() {
            let entry = &m.action[g][a][b];
            if !entry.is_zero() {
                *out_b = out_b.add(&va.mul(entry));
            }
        }
    }
    out
}

/// Right action by an element of the right ring (in its presentation);
/// monomials act letter by letter.
pub fn elem_right_act(m: &BimoduleObj, v: &Elem, c: &SkewPoly) -> Elem {
    let mut out = elem_zero(m);
    for (mono, coef) in c.terms() {
        let mut acc: Elem = v.iter().map(|p| p.scale(coef)).collect();
        for (g, &e) in mono.exps().iter().enumerate() {
            for _ in 0..e {
                acc = elem_act_generator(m, &acc, g);
            }
        }
        out = elem_add(&out, &acc);
    }
    out
}

/// Grading shift M{n}: every basis degree increases by n.
pub fn shift(m: &Obj, n: i64) -> Obj {
    if n == 0 {
        return m.clone();
    }
    let mut out = (**m).clone();
    for b in &mut out.basis {
        b.degree += n;
    }
    out.shift += n;
    Arc::new(out)
}

/// Tensor product over the shared middle ring. The right action of the
/// result pushes the right factor's coefficients through the left factor's
/// right action.
pub fn tensor(m: &Obj, n: &Obj) -> Obj {
    assert_eq!(m.right, n.left, "tensor over mismatched middle ring");
    let rank_m = m.rank();
    let rank_n = n.rank();
    let nv = m.left.nvars();
    let mut basis = Vec::with_capacity(rank_m * rank_n);
    for a in 0..rank_m {
        for c in 0..rank_n {
            basis.push(BasisElem {
                label: format!("{}⊗{}", m.basis[a].label, n.basis[c].label),
                degree: m.basis[a].degree + n.basis[c].degree,
            });
        }
    }
    let mut action = Vec::new();
    for g in 0..n.right.nvars() {
        let mut mat = mat_zero(rank_m * rank_n, rank_m * rank_n, nv);
        for c in 0..rank_n {
            for d in 0..rank_n {
                let coef = &n.action[g][c][d];
                if coef.is_zero() {
                    continue;
                }
                let push = m.act_matrix(coef);
                for a in 0..rank_m {
                    for b in 0..rank_m {
                        if !push[a][b].is_zero() {
                            mat[a * rank_n + c][b * rank_n + d] =
                                mat[a * rank_n + c][b * rank_n + d].add(&push[a][b]);
                        }
                    }
                }
            }
        }
        action.push(mat);
    }
    Arc::new(BimoduleObj {
        left: m.left,
        right: n.right,
        basis,
        action,
        shift: m.shift + n.shift,
    })
}

/// Block-diagonal direct sum.
pub fn direct_sum(parts: &[Obj]) -> Obj {
    assert!(!parts.is_empty());
    let left = parts[0].left;
    let right = parts[0].right;
    assert!(parts.iter().all(|p| p.left == left && p.right == right));
    let nv = left.nvars();
    let total: usize = parts.iter().map(|p| p.rank()).sum();
    let mut basis = Vec::with_capacity(total);
    for p in parts {
        basis.extend(p.basis.iter().cloned());
    }
    let mut action = Vec::new();
    for g in 0..right.nvars() {
        let mut mat = mat_zero(total, total, nv);
        let mut off = 0;
        for p in parts {
            let r = p.rank();
            for a in 0..r {
                for b in 0..r {
                    mat[off + a][off + b] = p.action[g][a][b].clone();
                }
            }
            off += r;
        }
        action.push(mat);
    }
    Arc::new(BimoduleObj { left, right, basis, action, shift: 0 })
}

/// A graded bimodule map as a matrix over the left ring.
#[derive(Clone, PartialEq, Debug)]
pub struct Morphism {
    pub source: Obj,
    pub target: Obj,
    pub degree: i64,
    pub matrix: PolyMatrix,
}

impl Morphism {
    pub fn new(source: Obj, target: Obj, degree: i64, matrix: PolyMatrix) -> Self {
        Morphism { source, target, degree, matrix }
    }

    pub fn zero(source: Obj, target: Obj, degree: i64) -> Self {
        let m = mat_zero(source.rank(), target.rank(), source.left.nvars());
        Morphism { source, target, degree, matrix: m }
    }

    pub fn identity(obj: &Obj) -> Self {
        let m = mat_identity(obj.rank(), obj.left.nvars());
        Morphism { source: obj.clone(), target: obj.clone(), degree: 0, matrix: m }
    }

    /// Canonical degree-0 map with identity matrix between two objects with
    /// equal presentations (used for unit contractions and relabelings).
    pub fn identity_between(source: &Obj, target: &Obj) -> Self {
        assert_eq!(source.rank(), target.rank(), "identity between different ranks");
        let m = mat_identity(source.rank(), source.left.nvars());
        Morphism { source: source.clone(), target: target.clone(), degree: 0, matrix: m }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        assert!(self.degree == other.degree, "adding maps of different degree");
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            degree: self.degree,
            matrix: mat_add(&self.matrix, &other.matrix),
        }
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Morphism {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            degree: self.degree,
            matrix: mat_neg(&self.matrix),
        }
    }

    pub fn scale(&self, c: &Q) -> Morphism {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            degree: self.degree,
            matrix: mat_scale(&self.matrix, c),
        }
    }

    pub fn apply(&self, v: &Elem) -> Elem {
        let mut out = vec![SkewPoly::zero(self.target.left.nvars()); self.target.rank()];
        for (a, va) in v.iter().enumerate() {
            if va.is_zero() {
                continue;
            }
            for (b, out_b) in out.iter_mut().enumerate() {
                if !self.matrix[a][b].is_zero() {
                    *out_b = out_b.add(&va.mul(&self.matrix[a][b]));
                }
            }
        }
        out
    }

    /// True if this is c·identity for the given scalar (requires equal
    /// source/target presentations).
    pub fn is_scalar_identity(&self, c: &Q) -> bool {
        if self.source.rank() != self.target.rank() {
            return false;
        }
        let n = self.source.rank();
        let nv = self.source.left.nvars();
        for a in 0..n {
            for b in 0..n {
                let want =
                    if a == b { SkewPoly::constant(nv, c.clone()) } else { SkewPoly::zero(nv) };
                if self.matrix[a][b] != want {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_identity_matrix(&self) -> bool {
        self.is_scalar_identity(&Q::one())
    }
}

/// Composition `second ∘ first` (apply `first`, then `second`).
pub fn compose(first: &Morphism, second: &Morphism) -> Morphism {
    assert_eq!(first.target.rank(), second.source.rank(), "composition rank mismatch");
    debug_assert_eq!(first.target.left, second.source.left);
    Morphism {
        source: first.source.clone(),
        target: second.target.clone(),
        degree: first.degree + second.degree,
        matrix: mat_mul(&first.matrix, &second.matrix),
    }
}

/// Tensor product of morphisms over the shared middle ring: the right
/// factor's entries are pushed through the left target's right action.
pub fn tensor_morphisms(f: &Morphism, g: &Morphism) -> Morphism {
    let source = tensor(&f.source, &g.source);
    let target = tensor(&f.target, &g.target);
    let rank_fs = f.source.rank();
    let rank_ft = f.target.rank();
    let rank_gs = g.source.rank();
    let rank_gt = g.target.rank();
    let nv = f.source.left.nvars();
    let mut matrix = mat_zero(rank_fs * rank_gs, rank_ft * rank_gt, nv);
    for c in 0..rank_gs {
        for d in 0..rank_gt {
            if g.matrix[c][d].is_zero() {
                continue;
            }
            // (f ⊗ g)(e_a ⊗ e_c) = f(e_a) ⊗ g(e_c); the coefficient of
            // g(e_c) passes left through the right action of f's target.
            let push = f.target.act_matrix(&g.matrix[c][d]);
            for a in 0..rank_fs {
                for bp in 0..rank_ft {
                    if f.matrix[a][bp].is_zero() {
                        continue;
                    }
                    for b in 0..rank_ft {
                        if push[bp][b].is_zero() {
                            continue;
                        }
                        let add = f.matrix[a][bp].mul(&push[bp][b]);
                        matrix[a * rank_gs + c][b * rank_gt + d] =
                            matrix[a * rank_gs + c][b * rank_gt + d].add(&add);
                    }
                }
            }
        }
    }
    Morphism { source, target, degree: f.degree + g.degree, matrix }
}

/// Why a matrix fails to be a graded bimodule map.
#[derive(Debug, Clone, PartialEq)]
pub enum MorphismFailure {
    Shape(String),
    Inhomogeneous { row: usize, col: usize, want: i64 },
    Intertwining { generator: usize, row: usize, col: usize, difference: SkewPoly },
}

impl fmt::Display for MorphismFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismFailure::Shape(s) => write!(f, "shape error: {}", s),
            MorphismFailure::Inhomogeneous { row, col, want } => {
                write!(f, "entry ({},{}) is not homogeneous of degree {}", row, col, want)
            }
            MorphismFailure::Intertwining { generator, row, col, difference } => write!(
                f,
                "intertwining fails for generator {} at entry ({},{}): difference {}",
                generator, row, col, difference
            ),
        }
    }
}

/// Checks homogeneity and the intertwining condition for every right-ring
/// generator; reports the first failing entry.
pub fn verify_morphism(phi: &Morphism) -> Result<(), MorphismFailure> {
    let src = &phi.source;
    let tgt = &phi.target;
    if src.left != tgt.left {
        return Err(MorphismFailure::Shape("left rings differ".into()));
    }
    if src.right != tgt.right {
        return Err(MorphismFailure::Shape("right rings differ".into()));
    }
    if phi.matrix.len() != src.rank() || phi.matrix.iter().any(|r| r.len() != tgt.rank()) {
        return Err(MorphismFailure::Shape("matrix dimensions".into()));
    }
    for (a, row) in phi.matrix.iter().enumerate() {
        for (b, entry) in row.iter().enumerate() {
            let want = phi.degree + src.basis[a].degree - tgt.basis[b].degree;
            if !src.left.is_homogeneous(entry, want) {
                return Err(MorphismFailure::Inhomogeneous { row: a, col: b, want });
            }
        }
    }
    for g in 0..src.right.nvars() {
        let lhs = mat_mul(&src.action[g], &phi.matrix);
        let rhs = mat_mul(&phi.matrix, &tgt.action[g]);
        for a in 0..src.rank() {
            for b in 0..tgt.rank() {
                let diff = lhs[a][b].sub(&rhs[a][b]);
                if !diff.is_zero() {
                    return Err(MorphismFailure::Intertwining {
                        generator: g,
                        row: a,
                        col: b,
                        difference: diff,
                    });
                }
            }
        }
    }
    Ok(())
}

/// The six base bimodules of the two-variable calculus.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BaseTag {
    /// R as an (R, R)-bimodule.
    UnitR,
    /// R^s as an (R^s, R^s)-bimodule.
    UnitRs,
    /// R as an (R, R^s)-bimodule.
    Ind,
    /// R as an (R^s, R)-bimodule, left basis {1, x1}.
    Res,
    /// The twisted bimodule R̲ with f·u = u·s(f).
    U,
    /// The twisted sub-bimodule R̲^s over (R^s, R^s).
    Us,
}

fn p2(terms: &[(&[u32], i64)]) -> SkewPoly {
    SkewPoly::from_terms(2, terms)
}

/// Explicit presentation of a base bimodule.
pub fn base(tag: BaseTag) -> Obj {
    let obj = match tag {
        BaseTag::UnitR => BimoduleObj {
            left: Ring::R2,
            right: Ring::R2,
            basis: vec![BasisElem { label: "1".into(), degree: 0 }],
            action: vec![vec![vec![p2(&[(&[1, 0], 1)])]], vec![vec![p2(&[(&[0, 1], 1)])]]],
            shift: 0,
        },
        BaseTag::UnitRs => BimoduleObj {
            left: Ring::Rs,
            right: Ring::Rs,
            basis: vec![BasisElem { label: "1".into(), degree: 0 }],
            action: vec![vec![vec![p2(&[(&[1, 0], 1)])]], vec![vec![p2(&[(&[0, 1], 1)])]]],
            shift: 0,
        },
        // 1·E1 = (x1 − x2)·1, 1·E2 = x1x2·1, written in the x-presentation.
        BaseTag::Ind => BimoduleObj {
            left: Ring::R2,
            right: Ring::Rs,
            basis: vec![BasisElem { label: "1".into(), degree: 0 }],
            action: vec![
                vec![vec![p2(&[(&[1, 0], 1), (&[0, 1], -1)])]],
                vec![vec![p2(&[(&[1, 1], 1)])]],
            ],
            shift: 0,
        },
        // Left basis {1, x1}; the right action is read off the left
        // decomposition f = c0·1 + c1·x1 with c0, c1 ∈ R^s, written on
        // the E1, E2 presentation of R^s.
        //   1·x1 = 0·1 + 1·x1            x1·x1 = −E2·1 + E1·x1
        //   1·x2 = −E1·1 + 1·x1          x1·x2 = E2·1
        BaseTag::Res => BimoduleObj {
            left: Ring::Rs,
            right: Ring::R2,
            basis: vec![
                BasisElem { label: "1".into(), degree: 0 },
                BasisElem { label: "x1".into(), degree: 2 },
            ],
            action: vec![
                vec![
                    vec![p2(&[]), p2(&[(&[0, 0], 1)])],
                    vec![p2(&[(&[0, 1], -1)]), p2(&[(&[1, 0], 1)])],
                ],
                vec![
                    vec![p2(&[(&[1, 0], -1)]), p2(&[(&[0, 0], 1)])],
                    vec![p2(&[(&[0, 1], 1)]), p2(&[])],
                ],
            ],
            shift: 0,
        },
        // u·x1 = −x2·u, u·x2 = −x1·u.
        BaseTag::U => BimoduleObj {
            left: Ring::R2,
            right: Ring::R2,
            basis: vec![BasisElem { label: "u".into(), degree: 0 }],
            action: vec![vec![vec![p2(&[(&[0, 1], -1)])]], vec![vec![p2(&[(&[1, 0], -1)])]]],
            shift: 0,
        },
        // us·E1 = E1·us, us·E2 = −E2·us.
        BaseTag::Us => BimoduleObj {
            left: Ring::Rs,
            right: Ring::Rs,
            basis: vec![BasisElem { label: "us".into(), degree: 0 }],
            action: vec![vec![vec![p2(&[(&[1, 0], 1)])]], vec![vec![p2(&[(&[0, 1], -1)])]]],
            shift: 0,
        },
    };
    debug_assert_eq!(obj.check(), Ok(()));
    Arc::new(obj)
}

/// B = Ind ⊗ Res {−1}, the generating bimodule; basis {1⊗1, 1⊗x1}.
pub fn b_obj() -> Obj {
    shift(&tensor(&base(BaseTag::Ind), &base(BaseTag::Res)), -1)
}

/// B̲ represented as B ⊗ R̲; basis {1⊗1⊗u, 1⊗x1⊗u}.
pub fn bbar_obj() -> Obj {
    tensor(&b_obj(), &base(BaseTag::U))
}
