//! The shipped example models and deterministic random inputs for
//! property trials. The same models are available as `.nc` files in the
//! crate's `fixtures/` directory.

use crate::algebra::{int, ratio, AlgElement, AlgebraPresentation, GenId, RewriteRule, Scalar, Word};
use crate::bimodule::{BasisId, BimElement, BimodulePresentation, Matrix};
use crate::calculus::{CalculusModel, Differential};
use crate::cartan::RightCartanPair;
use crate::dual::DualElement;

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn gen(i: usize) -> AlgElement {
    AlgElement::from_gen(GenId(i))
}

/// The commutative plane `y x = x y` with the diagonal bimodule on
/// `(dx, dy)` and the classical differential.
pub fn poly2() -> CalculusModel {
    let algebra = AlgebraPresentation::commutative(names(&["x", "y"])).unwrap();
    let bimodule =
        BimodulePresentation::scalar_diagonal(algebra, names(&["dx", "dy"])).unwrap();
    let differential = Differential::new(vec![
        BimElement::basis(BasisId(0)),
        BimElement::basis(BasisId(1)),
    ]);
    CalculusModel::new(bimodule, differential).unwrap()
}

/// The quantum plane at `q = 2`: `y x = 2 x y`, with the rank-two
/// bimodule whose structure matrices are
/// `Φ(x) = [[4x, 3y], [0, x/2]]` and `Φ(y) = [[8y, 0], [0, 4y]]`
/// on the basis `(dx, dy)`, and `d x = dx . 1`, `d y = dy . 1`.
pub fn qplane2() -> CalculusModel {
    qplane2_with_ydx_coefficient(int(8))
}

/// The q-plane model with the `y . dx` coefficient replaced: the shipped
/// fixture uses 8; any other value breaks both consistency checks.
pub fn qplane2_with_ydx_coefficient(c: Scalar) -> CalculusModel {
    let algebra = AlgebraPresentation::new(
        names(&["x", "y"]),
        vec![RewriteRule::new(
            GenId(1),
            GenId(0),
            AlgElement::monomial(Word::from_letters(vec![GenId(0), GenId(1)]), int(2)),
        )],
    )
    .unwrap();

    let mut phi_x = Matrix::zero(2);
    *phi_x.at_mut(0, 0) = gen(0).scale(&int(4));
    *phi_x.at_mut(0, 1) = gen(1).scale(&int(3));
    *phi_x.at_mut(1, 1) = gen(0).scale(&ratio(1, 2));
    let mut phi_y = Matrix::zero(2);
    *phi_y.at_mut(0, 0) = gen(1).scale(&c);
    *phi_y.at_mut(1, 1) = gen(1).scale(&int(4));

    let bimodule =
        BimodulePresentation::new(algebra, names(&["dx", "dy"]), vec![phi_x, phi_y]).unwrap();
    let differential = Differential::new(vec![
        BimElement::basis(BasisId(0)),
        BimElement::basis(BasisId(1)),
    ]);
    CalculusModel::new(bimodule, differential).unwrap()
}

/// Three generators whose rules do not resolve the `z y x` overlap:
/// `y x = x y + x`, `z x = x z + 1`, `z y = y z`. The two reduction
/// paths differ by exactly 1.
pub fn nonconfluent3() -> AlgebraPresentation {
    let mut yx = AlgElement::from_word(Word::from_letters(vec![GenId(0), GenId(1)]));
    yx.add_term(Word::single(GenId(0)), int(1));
    let mut zx = AlgElement::from_word(Word::from_letters(vec![GenId(0), GenId(2)]));
    zx.add_term(Word::empty(), int(1));
    let zy = AlgElement::from_word(Word::from_letters(vec![GenId(1), GenId(2)]));
    AlgebraPresentation::new(
        names(&["x", "y", "z"]),
        vec![
            RewriteRule::new(GenId(1), GenId(0), yx),
            RewriteRule::new(GenId(2), GenId(0), zx),
            RewriteRule::new(GenId(2), GenId(1), zy),
        ],
    )
    .unwrap()
}

/// A calculus on the plane whose differential never leaves the `dx`
/// line: `d x = d y = e_dx`. Well defined, but not spanned in the `dy`
/// direction at any bound.
pub fn dx_only_calculus() -> CalculusModel {
    let bimodule = poly2().bimodule().clone();
    let differential = Differential::new(vec![
        BimElement::basis(BasisId(0)),
        BimElement::basis(BasisId(0)),
    ]);
    CalculusModel::new(bimodule, differential).unwrap()
}

/// The rank-two pair over the plane whose action matrix is zero: every
/// bounded kernel is full.
pub fn zero_action_pair() -> RightCartanPair {
    let module = poly2().bimodule().clone();
    let action = vec![vec![AlgElement::zero(); 2]; 2];
    RightCartanPair::new(module, action).unwrap()
}

/// The q-plane partial-derivative pair with one perturbed entry: the
/// action of `e^dx` on `y` changed from 0 to 1, which breaks rule
/// compatibility.
pub fn qplane2_pair_with_perturbed_entry() -> RightCartanPair {
    let derived = RightCartanPair::from_calculus(&qplane2());
    let mut action: Vec<Vec<AlgElement>> = derived
        .action_matrix()
        .iter()
        .map(|row| row.to_vec())
        .collect();
    action[0][1] = AlgElement::unit();
    RightCartanPair::new(derived.module().clone(), action).unwrap()
}

/// A random pair over the plane: action entries of bounded degree. Rule
/// compatibility is automatic for the diagonal structure, so these are
/// always valid.
pub fn random_poly2_pair(degree: usize, seed: u64) -> RightCartanPair {
    let module = poly2().bimodule().clone();
    let p = module.algebra().clone();
    let action = (0..2)
        .map(|i| {
            (0..2)
                .map(|j| p.random_element(degree, seed.wrapping_mul(37).wrapping_add((2 * i + j) as u64)))
                .collect()
        })
        .collect();
    RightCartanPair::new(module, action).unwrap()
}

/// A random q-commutation presentation on two or three generators, with
/// coefficients from a small invertible pool. Always shape-valid and
/// confluent, and always mirrorable.
pub fn random_q_presentation(seed: u64) -> AlgebraPresentation {
    let pool = [int(1), int(2), ratio(1, 2), int(3), ratio(1, 3)];
    let n = 2 + (seed % 2) as usize;
    let mut rules = Vec::new();
    let mut k = seed / 2;
    for j in 1..n {
        for i in 0..j {
            let q = pool[(k % pool.len() as u64) as usize].clone();
            k = k.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407) >> 3;
            rules.push(RewriteRule::new(
                GenId(j),
                GenId(i),
                AlgElement::monomial(Word::from_letters(vec![GenId(i), GenId(j)]), q),
            ));
        }
    }
    let name_pool = ["x", "y", "z"];
    AlgebraPresentation::new(names(&name_pool[..n]), rules).unwrap()
}

/// A random module element with component coefficients of bounded
/// degree, deterministic in the seed.
pub fn random_bim_element(m: &BimodulePresentation, degree: usize, seed: u64) -> BimElement {
    let mut out = BimElement::zero();
    for i in 0..m.rank() {
        out.add_component(
            BasisId(i),
            m.algebra()
                .random_element(degree, seed.wrapping_mul(2477).wrapping_add(i as u64)),
        );
    }
    out
}

/// A random dual element, deterministic in the seed.
pub fn random_dual_element(m: &BimodulePresentation, degree: usize, seed: u64) -> DualElement {
    let mut out = DualElement::zero();
    for i in 0..m.rank() {
        out.add_component(
            BasisId(i),
            m.algebra()
                .random_element(degree, seed.wrapping_mul(7919).wrapping_add(i as u64)),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_validate() {
        assert!(poly2().algebra().check().passed());
        assert!(poly2().bimodule().check().passed());
        assert!(poly2().check().passed());
        assert!(qplane2().algebra().check().passed());
        assert!(qplane2().bimodule().check().passed());
        assert!(qplane2().check().passed());
        assert!(!nonconfluent3().check().passed());
        assert!(dx_only_calculus().check().passed());
    }

    #[test]
    fn random_q_presentations_are_confluent() {
        for seed in 0..20 {
            let p = random_q_presentation(seed);
            assert!(p.check().passed());
        }
    }

    #[test]
    fn shipped_files_match_the_programmatic_fixtures() {
        let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
        let read = |name: &str| {
            let text = std::fs::read_to_string(format!("{dir}/{name}")).unwrap();
            crate::model::parse(&text).unwrap()
        };

        let file = read("poly2.nc");
        assert_eq!(file.bimodule.as_ref().unwrap(), poly2().bimodule());
        assert_eq!(file.differential.as_ref().unwrap(), poly2().differential());

        let file = read("qplane2.nc");
        assert_eq!(file.bimodule.as_ref().unwrap(), qplane2().bimodule());
        assert_eq!(file.differential.as_ref().unwrap(), qplane2().differential());

        let file = read("qplane2_pair.nc");
        let derived = RightCartanPair::from_calculus(&qplane2());
        let pair = RightCartanPair::new(
            file.bimodule.clone().unwrap(),
            file.action.clone().unwrap(),
        )
        .unwrap();
        assert_eq!(pair, derived);

        let file = read("nonconf3.nc");
        assert_eq!(file.algebra, nonconfluent3());
    }
}
