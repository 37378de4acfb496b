//! The plain-text model format: parsing, canonical emission, and the
//! reports the `nc` binary prints.
//!
//! ```bash
//! cargo run -p ncdc --example model_files
//! ```

use ncdc::model::{emit, parse, parse_alg_expr, parse_dual_expr};

const WEYL: &str = "
# A Weyl-type presentation: position and momentum.
generators: x p
rule: p x = x p + 1
basis: dx dp
left: x dx = dx.( x )
left: x dp = dp.( x )
left: p dx = dx.( p )
left: p dp = dp.( p )
d: x = dx.( 1 )
d: p = dp.( 1 )
";

fn main() {
    let model = parse::parse(WEYL).unwrap();
    println!("parsed {} generators, rank {}",
        model.algebra.n_generators(),
        model.bimodule.as_ref().unwrap().rank());

    // Canonical emission: comments dropped, sections ordered, terms
    // ascending. Emitting twice is byte-identical.
    let canonical = emit::emit_model(&model);
    println!("\ncanonical form:\n{canonical}");
    let reparsed = parse::parse(&canonical).unwrap();
    assert_eq!(reparsed, model);
    assert_eq!(emit::emit_model(&reparsed), canonical);

    // Is this differential well defined on the quotient? d(p x) must
    // equal d(x p + 1), and it does: the constant has no differential.
    let calculus = model.calculus().unwrap();
    print!("report:\n{}", calculus.check().human());
    assert!(calculus.check().passed());

    // Expression parsing follows the same grammar as the files.
    let p = calculus.algebra();
    let f = parse_alg_expr("x^2 p - 1/2 x", p).unwrap();
    println!("d( x^2 p - 1/2 x ) = {}",
        emit::emit_bim(calculus.bimodule(), &calculus.diff(&f)));

    let m = calculus.bimodule();
    let along = parse_dual_expr("dp", m).unwrap();
    let pair_ = ncdc::cartan::RightCartanPair::from_calculus(&calculus);
    println!(
        "partial of x^2 p along e^dp = {}",
        emit::emit_alg(p, &pair_.action_apply(&along, &parse_alg_expr("x^2 p", p).unwrap()))
    );

    // Parse errors carry line and column information.
    let bad = "generators: x y\nrule: x y = y x\n";
    match parse::parse(bad) {
        Err(e) => println!("\nrejected as expected: {e}"),
        Ok(_) => unreachable!("ascending lhs must be rejected"),
    }
}
