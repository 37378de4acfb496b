//! Presenting algebras by quadratic rules and rewriting to normal form.
//!
//! ```bash
//! cargo run -p ncdc --example normal_forms
//! ```

use ncdc::algebra::{AlgElement, GenId, Word};
use ncdc::fixtures;
use ncdc::model::emit::emit_alg;

fn main() {
    // The quantum plane at q = 2: generators x, y with y x = 2 x y.
    let q = fixtures::qplane2();
    let p = q.algebra();

    let yx = AlgElement::from_word(Word::from_letters(vec![GenId(1), GenId(0)]));
    println!("nf(y x)   = {}", emit_alg(p, &p.nf(&yx)));

    let yxx = AlgElement::from_word(Word::from_letters(vec![GenId(1), GenId(0), GenId(0)]));
    println!("nf(y x x) = {}", emit_alg(p, &p.nf(&yxx)));
    assert_eq!(emit_alg(p, &p.nf(&yxx)), "4 x^2 y");

    // Products reduce automatically, and confluence makes them
    // associative on normal forms.
    let a = p.random_element(3, 7);
    let b = p.random_element(3, 8);
    let c = p.random_element(3, 9);
    assert_eq!(p.mul(&p.mul(&a, &b), &c), p.mul(&a, &p.mul(&b, &c)));
    println!("random associativity instance holds exactly");

    // A two-generator presentation has no overlaps to check.
    println!("\nqplane2 confluence report:");
    print!("{}", p.check().human());

    // Three generators where the z y x overlap does not resolve: the
    // two reduction orders differ by the constant 1.
    let bad = fixtures::nonconfluent3();
    println!("\nnon-confluent system report:");
    print!("{}", bad.check().human());
    assert!(!bad.check().passed());
}
