//! Splitting two-letter tensor words into direct sums of atoms, with
//! explicit inclusion/projection pairs drawn from the calculus catalog.

use crate::bimod::{tensor, tensor_morphisms as t, Morphism, Obj};
use crate::calculus::{detach_unit_right, reshift, seq, Catalog};

use super::{atom_obj, Atom};

/// One atom summand of a decomposition: (atom, shift, incl: atom → word,
/// proj: word → atom) with proj∘incl = id and Σ incl∘proj = id.
pub struct Part {
    pub atom: Atom,
    pub shift: i64,
    pub incl: Morphism,
    pub proj: Morphism,
}

/// Decomposes a tensor word at the given total shift into atoms. Single
/// atoms return a trivial part; R-factors are contracted away; longer words
/// are split two letters at a time.
pub fn decompose_word(cat: &Catalog, word: &[Atom], shift: i64) -> Vec<Part> {
    if word.len() > 2 {
        let head = &word[..2];
        let tail = &word[2..];
        let id_tail = Morphism::identity(&word_obj(tail, 0));
        let mut out = Vec::new();
        for hp in decompose_word(cat, head, 0) {
            let incl1 = t(&hp.incl, &id_tail);
            let proj1 = t(&hp.proj, &id_tail);
            let mut sub = vec![hp.atom];
            sub.extend(tail.iter().copied());
            for sp in decompose_word(cat, &sub, hp.shift) {
                out.push(Part {
                    atom: sp.atom,
                    shift: sp.shift + shift,
                    incl: reshift(&seq(&[&sp.incl, &incl1]), shift),
                    proj: reshift(&seq(&[&proj1, &sp.proj]), shift),
                });
            }
        }
        return out;
    }
    match word {
        [a] => {
            let obj = atom_obj(*a, shift);
            let id = Morphism::identity(&obj);
            vec![Part { atom: *a, shift, incl: id.clone(), proj: id }]
        }
        [Atom::R, x] => {
            let obj = word_obj(word, shift);
            let target = atom_obj(*x, shift);
            vec![Part {
                atom: *x,
                shift,
                incl: Morphism::identity_between(&target, &obj),
                proj: Morphism::identity_between(&obj, &target),
            }]
        }
        [x, Atom::R] => {
            let obj = word_obj(word, shift);
            let target = atom_obj(*x, shift);
            vec![Part {
                atom: *x,
                shift,
                incl: Morphism::identity_between(&target, &obj),
                proj: Morphism::identity_between(&obj, &target),
            }]
        }
        [Atom::B, Atom::B] => {
            // B⊗B ≅ B{−1} ⊕ B̲{1} via the orthogonal idempotent pair
            let idb = Morphism::identity(&crate::bimod::b_obj());
            let p1 = seq(&[
                &t(&idb, &reshift_deg0(cat.get("m"), -1)),
                &reshift(&detach_unit_right(&crate::bimod::b_obj()), -1),
            ]);
            let i1 = reshift_deg0(cat.get("split"), 0);
            let p2 = reshift_deg0(cat.get("merge_right"), 1);
            let i2 = reshift_deg0(&t(&idb, cat.get("delta")), 0).neg();
            vec![
                part(Atom::B, shift - 1, &i1, &p1, shift),
                part(Atom::Bbar, shift + 1, &i2, &p2, shift),
            ]
        }
        [Atom::B, Atom::Bbar] => {
            // B⊗B̲ ≅ B{1} ⊕ B̲{−1} via (d1, h0) and (h3, d3')
            vec![
                part(Atom::B, shift + 1, cat.get("d1"), cat.get("h0"), shift),
                part(Atom::Bbar, shift - 1, cat.get("h3"), cat.get("d3prime"), shift),
            ]
        }
        [Atom::Bbar, Atom::B] => {
            // conjugate the B⊗B̲ decomposition by the crossing B̲⊗B ≅ B⊗B̲
            let idb = Morphism::identity(&crate::bimod::b_obj());
            let fwd = t(&idb, cat.get("psi_ur"));
            let bwd = t(&idb, cat.get("psi_ru"));
            conjugated(cat, &[Atom::B, Atom::Bbar], shift, &fwd, &bwd)
        }
        [Atom::Bbar, Atom::Bbar] => {
            // cancel the two inner twists: B̲⊗B̲ ≅ B⊗B
            let idb = Morphism::identity(&crate::bimod::b_obj());
            let idu = Morphism::identity(&crate::bimod::base(crate::bimod::BaseTag::U));
            let bb = tensor(&crate::bimod::b_obj(), &crate::bimod::b_obj());
            let fwd = seq(&[
                &t(&idb, &t(cat.get("psi_ur"), &idu)),
                &t(&Morphism::identity(&bb), cat.get("capU")),
                &detach_unit_right(&bb),
            ]);
            let bwd = seq(&[
                &crate::calculus::attach_unit_right(&bb),
                &t(&Morphism::identity(&bb), cat.get("cupU")),
                &t(&idb, &t(cat.get("psi_ru"), &idu)),
            ]);
            conjugated(cat, &[Atom::B, Atom::B], shift, &fwd, &bwd)
        }
        other => panic!("no decomposition rule for word {:?}", other),
    }
}

fn reshift_deg0(f: &Morphism, k: i64) -> Morphism {
    Morphism::new(
        crate::bimod::shift(&f.source, f.degree + k),
        crate::bimod::shift(&f.target, k),
        0,
        f.matrix.clone(),
    )
}

fn part(atom: Atom, part_shift: i64, incl: &Morphism, proj: &Morphism, word_shift: i64) -> Part {
    Part {
        atom,
        shift: part_shift,
        incl: reshift(incl, word_shift),
        proj: reshift(proj, word_shift),
    }
}

/// Decomposition of `word` pulled back along an isomorphism
/// fwd: (this word) → word, bwd = fwd⁻¹.
fn conjugated(
    cat: &Catalog,
    word: &[Atom],
    shift: i64,
    fwd: &Morphism,
    bwd: &Morphism,
) -> Vec<Part> {
    let fwd = reshift(fwd, shift);
    let bwd = reshift(bwd, shift);
    decompose_word(cat, word, shift)
        .into_iter()
        .map(|p| Part {
            atom: p.atom,
            shift: p.shift,
            incl: seq(&[&p.incl, &bwd]),
            proj: seq(&[&fwd, &p.proj]),
        })
        .collect()
}

pub fn word_obj(word: &[Atom], shift: i64) -> Obj {
    let mut obj = atom_obj(word[0], 0);
    for a in &word[1..] {
        obj = tensor(&obj, &atom_obj(*a, 0));
    }
    crate::bimod::shift(&obj, shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimod::verify_morphism;
    use crate::calculus::Catalog;

    fn check_decomposition(word: &[Atom], shift: i64) {
        let cat = Catalog::new();
        let parts = decompose_word(&cat, word, shift);
        let obj = word_obj(word, shift);
        for p in &parts {
            assert_eq!(verify_morphism(&p.incl), Ok(()), "incl {:?}", p.atom);
            assert_eq!(verify_morphism(&p.proj), Ok(()), "proj {:?}", p.atom);
            assert_eq!(p.incl.source.degrees(), atom_obj(p.atom, p.shift).degrees());
            assert!(seq(&[&p.incl, &p.proj]).is_identity_matrix(), "proj∘incl on {:?}", p.atom);
        }
        for (i, p) in parts.iter().enumerate() {
            for (j, q) in parts.iter().enumerate() {
                if i != j {
                    assert!(seq(&[&p.incl, &q.proj]).is_zero(), "cross {} {}", i, j);
                }
            }
        }
        let mut total = Morphism::zero(obj.clone(), obj.clone(), 0);
        for p in &parts {
            total = total.add(&seq(&[&p.proj, &p.incl]));
        }
        assert!(total.is_identity_matrix(), "completeness for {:?}{{{}}}", word, shift);
    }

    #[test]
    fn all_two_letter_words_decompose() {
        for word in [
            vec![Atom::B, Atom::B],
            vec![Atom::B, Atom::Bbar],
            vec![Atom::Bbar, Atom::B],
            vec![Atom::Bbar, Atom::Bbar],
            vec![Atom::R, Atom::B],
            vec![Atom::Bbar, Atom::R],
        ] {
            check_decomposition(&word, 0);
            check_decomposition(&word, -2);
        }
    }

    #[test]
    fn bb_parts_match_corollary() {
        let cat = Catalog::new();
        let parts = decompose_word(&cat, &[Atom::B, Atom::B], 0);
        assert_eq!(parts.len(), 2);
        assert_eq!((parts[0].atom, parts[0].shift), (Atom::B, -1));
        assert_eq!((parts[1].atom, parts[1].shift), (Atom::Bbar, 1));
    }
}
