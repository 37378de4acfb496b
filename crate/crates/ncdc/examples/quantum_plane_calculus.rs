//! A first-order differential calculus on the quantum plane: the
//! differential on generators, extended by the Leibniz rule, with its
//! well-definedness certificate.
//!
//! ```bash
//! cargo run -p ncdc --example quantum_plane_calculus
//! ```

use ncdc::algebra::{AlgElement, GenId};
use ncdc::fixtures;
use ncdc::model::emit::emit_bim;

fn main() {
    let c = fixtures::qplane2();
    let p = c.algebra();
    let m = c.bimodule();

    let x = AlgElement::from_gen(GenId(0));
    let y = AlgElement::from_gen(GenId(1));

    // d is defined on generators; everything else follows from
    // d(f g) = (d f).g + f.(d g).
    for (label, f) in [
        ("x", x.clone()),
        ("x^2", p.mul(&x, &x)),
        ("x y", p.mul(&x, &y)),
        ("x^3", p.mul(&p.mul(&x, &x), &x)),
    ] {
        println!("d({label}) = {}", emit_bim(m, &c.diff(&f)));
    }
    assert_eq!(emit_bim(m, &c.diff(&p.mul(&x, &x))), "dx.( 5 x )");

    // The commutation rules move coefficients across the basis one-forms.
    let e_dx = ncdc::bimodule::BimElement::basis(ncdc::bimodule::BasisId(0));
    println!("\nx . dx = {}", emit_bim(m, &m.left_mul(&x, &e_dx)));
    println!("y . dx = {}", emit_bim(m, &m.left_mul(&y, &e_dx)));

    // The Leibniz identity holds exactly on random inputs.
    for seed in 0..200u64 {
        let f = p.random_element(4, 2 * seed);
        let g = p.random_element(4, 2 * seed + 1);
        let lhs = c.diff(&p.mul(&f, &g));
        let rhs = m
            .right_mul(&c.diff(&f), &g)
            .add(&m.left_mul(&f, &c.diff(&g)));
        assert_eq!(lhs, rhs);
    }
    println!("\nLeibniz rule verified exactly on 200 random pairs");

    // The whole structure is certified by the per-rule checks.
    print!("\n{}", c.check().human());

    // Changing a single structure coefficient breaks well-definedness.
    let broken = fixtures::qplane2_with_ydx_coefficient(ncdc::algebra::int(5));
    let report = broken.check();
    println!("\nperturbed model (y . dx coefficient 8 -> 5):");
    print!("{}", report.human());
    assert!(!report.passed());
}
