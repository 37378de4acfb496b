//! The calculus/Cartan-pair correspondence, both ways: partial
//! derivatives out of a differential, a differential out of an action,
//! and the exact round trips between them.
//!
//! ```bash
//! cargo run -p ncdc --example correspondence
//! ```

use ncdc::algebra::{AlgElement, GenId};
use ncdc::cartan::{
    action_pairing_identity, roundtrip_calculus, roundtrip_pair, RightCartanPair,
};
use ncdc::dual::pair;
use ncdc::fixtures;
use ncdc::model::emit::{emit_alg, emit_bim};

fn main() {
    for (name, c) in [("poly2", fixtures::poly2()), ("qplane2", fixtures::qplane2())] {
        println!("== {name} ==");

        // Forward: the dual of the one-forms acts by X(f) = <X, d f>,
        // and that action satisfies the twisted Leibniz axioms.
        let derived = RightCartanPair::from_calculus(&c);
        let axioms = derived.check_axioms(300, 3, 0);
        println!("derived pair axioms: {}", axioms.verdict());
        assert!(axioms.passed());

        // The two code paths agree exactly: recursion through the
        // axioms versus pairing with the Leibniz expansion.
        let identity = action_pairing_identity(&c, 300, 3, 0);
        assert!(identity.passed());
        for seed in [3u64, 17, 40] {
            let f = c.algebra().random_element(3, seed);
            let x = fixtures::random_dual_element(c.bimodule(), 2, seed + 100);
            let via_action = derived.action_apply(&x, &f);
            let via_pairing = pair(c.bimodule(), &x, &c.diff(&c.algebra().nf(&f)));
            assert_eq!(via_action, via_pairing);
            println!(
                "  X(f) = <X, d f> instance: {}",
                emit_alg(c.algebra(), &via_action)
            );
        }

        // Backward: the pair determines a differential on the double
        // dual, identified with the original module.
        let rebuilt = derived.to_calculus();
        for g in 0..c.algebra().n_generators() {
            let gid = GenId(g);
            println!(
                "  d_rho({}) = {}",
                c.algebra().name(gid),
                emit_bim(rebuilt.bimodule(), rebuilt.differential().on_gen(gid))
            );
        }

        // Round trips are exact.
        assert!(roundtrip_calculus(&c, 200, 3, 0).passed());
        assert!(roundtrip_pair(&derived, 200, 3, 0).passed());
        println!("round trips: PASS (200 trials each)\n");
    }

    // A pair given first, not derived from any differential: random
    // action matrices over the plane reconstruct consistently.
    let pair_ = fixtures::random_poly2_pair(2, 11);
    let calculus = pair_.to_calculus();
    let d_x = calculus.diff(&AlgElement::from_gen(GenId(0)));
    println!(
        "pair-first model: d_rho(x) = {}",
        emit_bim(calculus.bimodule(), &d_x)
    );
    assert!(roundtrip_pair(&pair_, 100, 2, 0).passed());
    println!("pair-first round trip: PASS");
}
