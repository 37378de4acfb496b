//! Opposite algebras and left-handed structure: every left construction
//! runs through the mirror of a right-handed one.
//!
//! ```bash
//! cargo run -p ncdc --example mirror_worlds
//! ```

use ncdc::algebra::{AlgElement, GenId};
use ncdc::bimodule::BasisId;
use ncdc::cartan::RightCartanPair;
use ncdc::dual::DualElement;
use ncdc::fixtures;
use ncdc::model::emit::emit_alg;

fn main() {
    // Reversing every relation of the q-plane re-orients y x = 2 x y
    // into y x = 1/2 x y: the opposite algebra on the same generators.
    let p = fixtures::qplane2().algebra().clone();
    let op = p.mirror().unwrap();
    let rule = op.rule(GenId(1), GenId(0));
    println!("opposite q-plane rule: y x = {}", emit_alg(&op, rule.rhs()));
    assert_eq!(emit_alg(&op, rule.rhs()), "1/2 x y");
    assert_eq!(op.mirror().unwrap(), p);
    println!("mirroring twice restores the original presentation");

    // Translation between the two worlds is word reversal plus
    // renormalization, an anti-isomorphism.
    for seed in 0..100u64 {
        let f = p.random_element(3, seed);
        let g = p.random_element(3, seed + 900);
        assert_eq!(
            op.op_image(&p.mul(&f, &g)),
            op.mul(&op.op_image(&g), &op.op_image(&f))
        );
    }
    println!("translation is anti-multiplicative on 100 random pairs");

    // The commutative plane is its own mirror.
    let plane = fixtures::poly2().algebra().clone();
    assert_eq!(plane.mirror().unwrap(), plane);
    println!("the commutative plane is self-opposite");

    // The mirrored bimodule swaps the module roles: transposed structure
    // matrices with reversed entries, still consistent.
    let m = fixtures::qplane2().bimodule().clone();
    let mirrored = m.mirror().unwrap();
    assert!(mirrored.check().passed());
    assert_eq!(mirrored.mirror().unwrap(), m);
    println!("mirrored bimodule checks out and mirrors back");

    // Left Cartan pairs delegate to the mirror. On the quantum plane
    // the left action differs from the right one...
    let right = RightCartanPair::from_calculus(&fixtures::qplane2());
    let left = right.mirror().unwrap();
    let e_dx = DualElement::basis(BasisId(0));
    let xy = left.algebra().mul(
        &AlgElement::from_gen(GenId(0)),
        &AlgElement::from_gen(GenId(1)),
    );
    println!(
        "\nquantum plane: right action on x y = {}, left action = {}",
        emit_alg(right.algebra(), &right.action_apply(&e_dx, &right.algebra().nf(&xy))),
        emit_alg(left.algebra(), &left.action_apply(&e_dx, &xy)),
    );
    let axioms = left.check_axioms(200, 3, 0);
    assert!(axioms.passed());
    println!("left-pair axioms: PASS (200 trials)");

    // ...while on the commutative plane the two actions coincide.
    let right = RightCartanPair::from_calculus(&fixtures::poly2());
    let left = right.mirror().unwrap();
    for seed in 0..100u64 {
        let f = right.algebra().random_element(3, seed);
        let x = fixtures::random_dual_element(right.module(), 3, seed + 4000);
        assert_eq!(
            left.action_apply(&x, &f),
            right.action_apply(&x, &right.algebra().nf(&f))
        );
    }
    println!("commutative plane: left and right actions agree on 100 random instances");
    assert_eq!(left.mirror(), right);
}
