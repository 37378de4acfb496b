//! Canonical text rendering. Emission is deterministic and injective on
//! normalized values: terms ascend in the monomial order, rationals
//! print as `p/q` with the denominator omitted when it is one, and
//! repeated letters use `^` sugar.

use num_traits::{One, Signed};

use crate::algebra::{AlgElement, AlgebraPresentation, Scalar, Word};
use crate::bimodule::{BimElement, BimodulePresentation};
use crate::dual::DualElement;

use super::ModelFile;

pub fn emit_scalar(c: &Scalar) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn emit_word(p: &AlgebraPresentation, w: &Word) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut letters = w.letters().iter().peekable();
    while let Some(&g) = letters.next() {
        let mut count = 1usize;
        while letters.peek() == Some(&&g) {
            letters.next();
            count += 1;
        }
        if count == 1 {
            parts.push(p.name(g).to_string());
        } else {
            parts.push(format!("{}^{}", p.name(g), count));
        }
    }
    parts.join(" ")
}

fn emit_term(p: &AlgebraPresentation, w: &Word, magnitude: &Scalar) -> String {
    if w.is_empty() {
        emit_scalar(magnitude)
    } else if magnitude.is_one() {
        emit_word(p, w)
    } else {
        format!("{} {}", emit_scalar(magnitude), emit_word(p, w))
    }
}

pub fn emit_alg(p: &AlgebraPresentation, e: &AlgElement) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (n, (w, c)) in e.terms().enumerate() {
        let negative = c.is_negative();
        if n == 0 {
            if negative {
                out.push_str("- ");
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&emit_term(p, w, &c.abs()));
    }
    out
}

pub fn emit_bim(m: &BimodulePresentation, x: &BimElement) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = x
        .components()
        .map(|(i, a)| format!("{}.( {} )", m.basis_name(i), emit_alg(m.algebra(), a)))
        .collect();
    parts.join(" + ")
}

pub fn emit_dual(m: &BimodulePresentation, x: &DualElement) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = x
        .components()
        .map(|(i, f)| format!("( {} ).{}", emit_alg(m.algebra(), f), m.basis_name(i)))
        .collect();
    parts.join(" + ")
}

/// The canonical model file: fixed section order, one declaration per
/// line, comments dropped.
pub fn emit_model(file: &ModelFile) -> String {
    let p = &file.algebra;
    let mut out = String::new();
    out.push_str(&format!("generators: {}\n", p.generator_names().join(" ")));
    for rule in p.rules() {
        out.push_str(&format!(
            "rule: {} {} = {}\n",
            p.name(rule.greater()),
            p.name(rule.lesser()),
            emit_alg(p, rule.rhs())
        ));
    }
    if let Some(m) = &file.bimodule {
        out.push_str(&format!("basis: {}\n", m.basis_names().join(" ")));
        for g in 0..p.n_generators() {
            let phi = m.phi_gen(crate::algebra::GenId(g));
            for i in 0..m.rank() {
                let mut column = BimElement::zero();
                for j in 0..m.rank() {
                    column.add_component(
                        crate::bimodule::BasisId(j),
                        phi.at(j, i).clone(),
                    );
                }
                out.push_str(&format!(
                    "left: {} {} = {}\n",
                    p.name(crate::algebra::GenId(g)),
                    m.basis_name(crate::bimodule::BasisId(i)),
                    emit_bim(m, &column)
                ));
            }
        }
        if let Some(d) = &file.differential {
            for g in 0..p.n_generators() {
                out.push_str(&format!(
                    "d: {} = {}\n",
                    p.name(crate::algebra::GenId(g)),
                    emit_bim(m, d.on_gen(crate::algebra::GenId(g)))
                ));
            }
        }
        if let Some(action) = &file.action {
            for (i, row) in action.iter().enumerate() {
                for (j, entry) in row.iter().enumerate() {
                    out.push_str(&format!(
                        "rho: {} {} = {}\n",
                        m.basis_name(crate::bimodule::BasisId(i)),
                        p.name(crate::algebra::GenId(j)),
                        emit_alg(p, entry)
                    ));
                }
            }
        }
    }
    out
}
