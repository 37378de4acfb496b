//! The canonical pairing between a free bimodule and its dual: the
//! eight structure laws, the transpose multiplications, and the
//! component-preserving embedding into the double dual.
//!
//! ```bash
//! cargo run -p ncdc --example duality_laws
//! ```

use ncdc::algebra::{AlgElement, GenId};
use ncdc::bimodule::{BasisId, BimElement};
use ncdc::dual::{
    canonical_embed, dual_left_mul, dual_right_mul, pair, pair_dual_dual, DualElement,
    MirrorWorld,
};
use ncdc::fixtures;
use ncdc::model::emit::{emit_alg, emit_dual};

fn main() {
    let c = fixtures::qplane2();
    let m = c.bimodule();
    let p = c.algebra();
    let x = AlgElement::from_gen(GenId(0));
    let y = AlgElement::from_gen(GenId(1));

    // Dual basis: ⟨e^i, e_j⟩ = δ_ij.
    let e_dx = DualElement::basis(BasisId(0));
    println!(
        "<e^dx, e_dx> = {}",
        emit_alg(p, &pair(m, &e_dx, &BimElement::basis(BasisId(0))))
    );
    println!(
        "<e^dx, e_dy> = {}",
        emit_alg(p, &pair(m, &e_dx, &BimElement::basis(BasisId(1))))
    );

    // The transpose right multiplication reads off rows of the
    // structure homomorphism.
    println!("e^dx . x = {}", emit_dual(m, &dual_right_mul(m, &e_dx, &x)));
    println!("e^dx . y = {}", emit_dual(m, &dual_right_mul(m, &e_dx, &y)));

    // The defining law ⟨X.f, v⟩ = ⟨X, f.v⟩ on random instances.
    for seed in 0..200u64 {
        let xd = fixtures::random_dual_element(m, 3, seed);
        let v = fixtures::random_bim_element(m, 3, seed + 500);
        let f = p.random_element(3, seed + 1000);
        assert_eq!(
            pair(m, &dual_right_mul(m, &xd, &f), &v),
            pair(m, &xd, &m.left_mul(&f, &v))
        );
        assert_eq!(
            pair(m, &dual_left_mul(m, &f, &xd), &v),
            p.mul(&f, &pair(m, &xd, &v))
        );
    }
    println!("transpose and left-linearity laws: 200 exact instances each");

    // Reflexivity: the double dual has the same components, the same
    // actions, the same pairings.
    for seed in 0..50u64 {
        let v = fixtures::random_bim_element(m, 3, seed);
        let xd = fixtures::random_dual_element(m, 3, seed + 300);
        let tilde = canonical_embed(&v);
        assert_eq!(tilde.components(), &v);
        assert_eq!(pair_dual_dual(m, &xd, &tilde), pair(m, &xd, &v));
    }
    println!("double-dual embedding is the component identity (50 instances)");

    // The mirrored world carries the left-dual laws.
    let world = MirrorWorld::new(m).unwrap();
    for seed in 0..100u64 {
        let v = world.to_mirror_module(&fixtures::random_bim_element(m, 2, seed));
        let xd = world.to_mirror_dual(&fixtures::random_dual_element(m, 2, seed + 77));
        let f = world.algebra().random_element(2, seed + 154);
        assert_eq!(
            world.pair(&world.module_right_mul(&v, &f), &xd),
            world.pair(&v, &world.dual_left_mul(&f, &xd))
        );
    }
    println!("mirrored transpose law over the opposite algebra: 100 exact instances");
}
