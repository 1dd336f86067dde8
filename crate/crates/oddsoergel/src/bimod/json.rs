//! Deterministic JSON views of bimodule objects and morphisms.
//!
//! Polynomials are serialized as term lists `[[exponents...], "coeff"]` in
//! the normal-form monomial order, so output is stable across runs.

use serde_json::{json, Value};

use crate::skewpoly::SkewPoly;

use super::{BimoduleObj, Morphism, PolyMatrix};

fn poly_to_json(p: &SkewPoly) -> Value {
    let terms: Vec<Value> =
        p.terms().map(|(m, c)| json!([m.exps(), c.to_string()])).collect();
    Value::Array(terms)
}

fn matrix_to_json(m: &PolyMatrix) -> Value {
    Value::Array(
        m.iter()
            .map(|row| Value::Array(row.iter().map(poly_to_json).collect()))
            .collect(),
    )
}

pub fn obj_to_json(obj: &BimoduleObj) -> Value {
    json!({
        "left_ring": format!("{:?}", obj.left),
        "right_ring": format!("{:?}", obj.right),
        "shift": obj.shift,
        "basis": obj.basis.iter().map(|b| json!({
            "label": b.label,
            "degree": b.degree,
        })).collect::<Vec<_>>(),
        "right_action": obj.action.iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

pub fn morphism_to_json(m: &Morphism) -> Value {
    json!({
        "degree": m.degree,
        "source": obj_to_json(&m.source),
        "target": obj_to_json(&m.target),
        "matrix": matrix_to_json(&m.matrix),
    })
}

#[cfg(test)]
mod tests {
    use crate::bimod::{b_obj, Morphism};

    #[test]
    fn serialization_is_stable() {
        let b = b_obj();
        let a = serde_json::to_string(&super::obj_to_json(&b)).unwrap();
        let bb = serde_json::to_string(&super::obj_to_json(&b_obj())).unwrap();
        assert_eq!(a, bb);
        let m = Morphism::identity(&b);
        let s = serde_json::to_string(&super::morphism_to_json(&m)).unwrap();
        assert!(s.contains("\"degree\":0"));
    }
}
