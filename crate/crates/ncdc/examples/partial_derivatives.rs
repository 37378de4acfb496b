//! Partial derivatives as the action of dual one-forms: classical on
//! the commutative plane, q-deformed on the quantum plane.
//!
//! ```bash
//! cargo run -p ncdc --example partial_derivatives
//! ```

use ncdc::algebra::{AlgElement, GenId, Word};
use ncdc::bimodule::BasisId;
use ncdc::cartan::RightCartanPair;
use ncdc::dual::DualElement;
use ncdc::fixtures;
use ncdc::model::emit::emit_alg;

fn x_power(n: usize) -> AlgElement {
    AlgElement::from_word(Word::from_letters(vec![GenId(0); n]))
}

fn main() {
    let classical = RightCartanPair::from_calculus(&fixtures::poly2());
    let quantum = RightCartanPair::from_calculus(&fixtures::qplane2());
    let e_dx = DualElement::basis(BasisId(0));

    println!("derivatives of x^n along e^dx:");
    println!("{:>6} {:>18} {:>18}", "n", "classical", "q = 2");
    for n in 1..=5 {
        let f = x_power(n);
        let c = classical.action_apply(&e_dx, &f);
        let q = quantum.action_apply(&e_dx, &f);
        println!(
            "{:>6} {:>18} {:>18}",
            n,
            emit_alg(classical.algebra(), &c),
            emit_alg(quantum.algebra(), &q)
        );
    }
    // The q-integers 1 + q^2 + q^4 + ... appear as the coefficients.
    assert_eq!(
        emit_alg(quantum.algebra(), &quantum.action_apply(&e_dx, &x_power(3))),
        "21 x^2"
    );

    // Mixed words feel the commutation rule.
    let p = quantum.algebra();
    let xy = p.mul(
        &AlgElement::from_gen(GenId(0)),
        &AlgElement::from_gen(GenId(1)),
    );
    println!(
        "\nquantum derivative of x y along e^dx: {}",
        emit_alg(p, &quantum.action_apply(&e_dx, &xy))
    );

    // The twisted Leibniz axioms certify the extension.
    let report = quantum.check_axioms(300, 3, 0);
    print!("\n{}", report.human());
    assert!(report.passed());
}
