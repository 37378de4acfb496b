//! Bounded certificates: is the module of one-forms spanned by
//! differentials, and does anything act as zero?
//!
//! ```bash
//! cargo run -p ncdc --example faithfulness
//! ```

use ncdc::cartan::RightCartanPair;
use ncdc::fixtures;

fn main() {
    for (name, c) in [("poly2", fixtures::poly2()), ("qplane2", fixtures::qplane2())] {
        println!("== {name} ==");

        // The spanning hypothesis holds at bound zero: the differentials
        // of the generators are the basis itself.
        let spans = c.spans_check(0);
        print!("{}", spans.to_report(c.bimodule()).human());
        assert!(spans.passed());

        // With spanning certified, the derived action has no bounded
        // kernel: the exact linear solve returns nothing.
        let pair = RightCartanPair::from_calculus(&c);
        for degree in 0..=3 {
            let kernel = pair.faithful_bounded(degree);
            println!(
                "kernel at degree {degree}: dimension {}",
                kernel.kernel.len()
            );
            assert!(kernel.is_faithful_up_to_bound());
        }
        println!();
    }

    // The zero action is as unfaithful as possible: everything bounded
    // is in the kernel.
    let zero = fixtures::zero_action_pair();
    let kernel = zero.faithful_bounded(2);
    println!(
        "zero-action pair: kernel dimension {} at degree 2",
        kernel.kernel.len()
    );
    assert_eq!(kernel.kernel.len(), 12);

    // A well-defined calculus that is NOT spanned: d x = d y = e_dx.
    // The spans check never certifies the dy direction, and it reports
    // INCONCLUSIVE rather than claiming a refutation.
    let degenerate = fixtures::dx_only_calculus();
    for bound in 0..=2 {
        let spans = degenerate.spans_check(bound);
        println!(
            "degenerate calculus at bound {bound}: {}",
            if spans.passed() { "PASS" } else { "INCONCLUSIVE" }
        );
        assert!(!spans.passed());
    }
}
