//! The acceptance suite: one test per criterion, each printing a
//! pass/fail line. Everything is exact rational arithmetic; a failure
//! here is a genuine counterexample, never rounding.
//!
//! Run with `cargo test -p ncdc --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use ncdc::algebra::{int, AlgElement, GenId, Word};
use ncdc::bimodule::BasisId;
use ncdc::cartan::{
    action_pairing_identity, roundtrip_calculus, roundtrip_pair, RightCartanPair,
};
use ncdc::dual::{
    canonical_embed, dual_left_mul, dual_right_mul, pair, pair_dual_dual, DualElement,
    MirrorWorld,
};
use ncdc::fixtures;
use ncdc::model::{emit, parse, ModelFile};

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn nc(args: &[&str]) -> (i32, String, Duration) {
    let start = Instant::now();
    let output = Command::new(env!("CARGO_BIN_EXE_nc"))
        .args(args)
        .output()
        .expect("nc binary runs");
    let elapsed = start.elapsed();
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).into_owned(),
        elapsed,
    )
}

fn pass(n: usize, what: &str) {
    println!("criterion {n}: PASS - {what}");
}

#[test]
fn criterion_1_presentation_validation() {
    for name in ["poly2.nc", "qplane2.nc"] {
        let (code, _, elapsed) = nc(&["check", fixture_path(name).to_str().unwrap()]);
        assert_eq!(code, 0, "check {name} should pass");
        assert!(elapsed < Duration::from_secs(1), "check {name} took {elapsed:?}");
    }
    let (code, out, elapsed) = nc(&[
        "check",
        fixture_path("nonconf3.nc").to_str().unwrap(),
        "--machine",
    ]);
    assert_eq!(code, 1, "the non-confluent fixture must fail");
    assert!(
        out.contains("overlap z y x\tFAIL\t1\n"),
        "discrepancy must be exactly 1, got:\n{out}"
    );
    assert!(elapsed < Duration::from_secs(1));
    pass(1, "check passes on poly2/qplane2, fails on nonconf3 with discrepancy 1");
}

#[test]
fn criterion_2_leibniz_suite() {
    let start = Instant::now();
    for (name, c) in [("poly2", fixtures::poly2()), ("qplane2", fixtures::qplane2())] {
        let p = c.algebra().clone();
        let m = c.bimodule();
        for trial in 0..500u64 {
            let f = p.random_element(4, trial * 2);
            let g = p.random_element(4, trial * 2 + 1);
            let lhs = c.diff(&p.mul(&f, &g));
            let rhs = m.right_mul(&c.diff(&f), &g).add(&m.left_mul(&f, &c.diff(&g)));
            assert_eq!(lhs, rhs, "Leibniz failure on {name} at trial {trial}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "suite took {elapsed:?}");
    pass(2, "500 exact Leibniz identities per fixture");
}

#[test]
fn criterion_3_q_derivative_values() {
    let file = fixture_path("qplane2.nc");
    let (code, out, _) = nc(&["partial", file.to_str().unwrap(), "dx", "x^3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "21 x^2\n", "the cube must differentiate to 1 + q^2 + q^4 at q = 2");
    let (code, out, _) = nc(&["partial", file.to_str().unwrap(), "dx", "x^2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "5 x\n");
    pass(3, "partial of x^3 along e^dx is 21 x^2, of x^2 is 5 x");
}

#[test]
fn criterion_4_cartan_axioms() {
    for (name, c) in [("poly2", fixtures::poly2()), ("qplane2", fixtures::qplane2())] {
        let pair_ = RightCartanPair::from_calculus(&c);
        let report = pair_.check_axioms(500, 3, 0);
        assert!(report.passed(), "{name} axioms:\n{}", report.human());
    }
    let perturbed = fixtures::qplane2_pair_with_perturbed_entry();
    let report = perturbed.check_axioms(500, 3, 0);
    assert!(
        !report.passed(),
        "a perturbed action entry must flip the verdict"
    );
    pass(4, "500-trial axiom suite passes; a single perturbed entry fails");
}

#[test]
fn criterion_5_correspondence_roundtrips() {
    for (name, c) in [("poly2", fixtures::poly2()), ("qplane2", fixtures::qplane2())] {
        assert!(
            roundtrip_calculus(&c, 200, 3, 0).passed(),
            "calculus roundtrip on {name}"
        );
        let pair_ = RightCartanPair::from_calculus(&c);
        assert!(
            roundtrip_pair(&pair_, 200, 3, 0).passed(),
            "pair roundtrip on {name}"
        );
        assert!(
            action_pairing_identity(&c, 500, 3, 0).passed(),
            "two-path identity on {name}"
        );
    }
    for name in ["poly2.nc", "qplane2.nc"] {
        let (code, _, _) = nc(&[
            "roundtrip",
            fixture_path(name).to_str().unwrap(),
            "--trials",
            "200",
            "--degree",
            "3",
            "--seed",
            "0",
        ]);
        assert_eq!(code, 0, "roundtrip exit code on {name}");
    }
    pass(5, "both round-trips and the exact action/pairing identity hold");
}

#[test]
fn criterion_6_duality_laws() {
    for c in [fixtures::poly2(), fixtures::qplane2()] {
        let m = c.bimodule().clone();
        let p = m.algebra().clone();
        for trial in 0..200u64 {
            let base = trial * 11;
            let x = fixtures::random_bim_element(&m, 3, base);
            let y = fixtures::random_bim_element(&m, 3, base + 1);
            let xd = fixtures::random_dual_element(&m, 3, base + 2);
            let yd = fixtures::random_dual_element(&m, 3, base + 3);
            let f = p.random_element(3, base + 4);

            // Additivity in the module slot.
            assert_eq!(
                pair(&m, &xd, &x.add(&y)),
                pair(&m, &xd, &x).add(&pair(&m, &xd, &y))
            );
            // Right multiplication comes out of the pairing.
            assert_eq!(
                pair(&m, &xd, &m.right_mul(&x, &f)),
                p.mul(&pair(&m, &xd, &x), &f)
            );
            // Additivity in the dual slot.
            assert_eq!(
                pair(&m, &xd.add(&yd), &x),
                pair(&m, &xd, &x).add(&pair(&m, &yd, &x))
            );
            // Left multiplication comes out of the pairing.
            assert_eq!(
                pair(&m, &dual_left_mul(&m, &f, &xd), &x),
                p.mul(&f, &pair(&m, &xd, &x))
            );
            // Transpose law.
            assert_eq!(
                pair(&m, &dual_right_mul(&m, &xd, &f), &x),
                pair(&m, &xd, &m.left_mul(&f, &x))
            );
        }

        // The mirrored laws for the left dual.
        let world = MirrorWorld::new(&m).unwrap();
        let q = world.algebra().clone();
        for trial in 0..200u64 {
            let base = trial * 13 + 7;
            let x = world.to_mirror_module(&fixtures::random_bim_element(&m, 3, base));
            let y = world.to_mirror_module(&fixtures::random_bim_element(&m, 3, base + 1));
            let xd = world.to_mirror_dual(&fixtures::random_dual_element(&m, 3, base + 2));
            let yd = world.to_mirror_dual(&fixtures::random_dual_element(&m, 3, base + 3));
            let f = q.random_element(3, base + 4);

            assert_eq!(
                world.pair(&x.add(&y), &xd),
                world.pair(&x, &xd).add(&world.pair(&y, &xd))
            );
            assert_eq!(
                world.pair(&world.module_left_mul(&f, &x), &xd),
                q.mul(&f, &world.pair(&x, &xd))
            );
            assert_eq!(
                world.pair(&x, &xd.add(&yd)),
                world.pair(&x, &xd).add(&world.pair(&x, &yd))
            );
            assert_eq!(
                world.pair(&x, &world.dual_right_mul(&xd, &f)),
                q.mul(&world.pair(&x, &xd), &f)
            );
            assert_eq!(
                world.pair(&world.module_right_mul(&x, &f), &xd),
                world.pair(&x, &world.dual_left_mul(&f, &xd))
            );
        }

        // The canonical embedding is the component identity.
        for trial in 0..50u64 {
            let x = fixtures::random_bim_element(&m, 3, trial * 17 + 3);
            let xd = fixtures::random_dual_element(&m, 3, trial * 17 + 5);
            let tilde = canonical_embed(&x);
            assert_eq!(tilde.components(), &x);
            assert_eq!(pair_dual_dual(&m, &xd, &tilde), pair(&m, &xd, &x));
        }
    }
    pass(6, "all ten pairing laws and the double-dual embedding hold exactly");
}

#[test]
fn criterion_7_faithfulness_and_spans() {
    for (name, c) in [("poly2", fixtures::poly2()), ("qplane2", fixtures::qplane2())] {
        let pair_ = RightCartanPair::from_calculus(&c);
        let kernel = pair_.faithful_bounded(3);
        assert!(
            kernel.is_faithful_up_to_bound(),
            "{name} has a nonzero bounded kernel"
        );
        assert!(c.spans_check(0).passed(), "{name} spans at bound 0");
    }
    let zero = fixtures::zero_action_pair();
    let kernel = zero.faithful_bounded(3);
    // Everything of degree <= 3 lies in the kernel of the zero action:
    // rank 2 times C(2 + 3, 3) = 10 monomials.
    assert_eq!(kernel.kernel.len(), 20);
    pass(7, "empty kernels at degree 3, full kernel for the zero action, spans at bound 0");
}

#[test]
fn criterion_8_commutative_degeneration() {
    let c = fixtures::poly2();
    let right = RightCartanPair::from_calculus(&c);
    let left = right.mirror().unwrap();
    for trial in 0..200u64 {
        let f = c.algebra().random_element(3, trial * 3);
        let x = fixtures::random_dual_element(c.bimodule(), 3, trial * 3 + 1);
        assert_eq!(
            left.action_apply(&x, &f),
            right.action_apply(&x, &c.algebra().nf(&f)),
            "left and right actions must coincide on the plane"
        );
    }
    // The derivative of x² y along e^dx is 2 x y, classically.
    let x2y = AlgElement::from_word(Word::from_letters(vec![GenId(0), GenId(0), GenId(1)]));
    let e_dx = DualElement::basis(BasisId(0));
    let xy = AlgElement::from_word(Word::from_letters(vec![GenId(0), GenId(1)]));
    assert_eq!(right.action_apply(&e_dx, &x2y), xy.scale(&int(2)));
    assert_eq!(left.action_apply(&e_dx, &x2y), xy.scale(&int(2)));
    pass(8, "left/right actions coincide on the plane; classical values recovered");
}

/// A deterministic generator of varied model files: q-commutation
/// algebras, optional bimodules with random structure entries, optional
/// differentials and action matrices.
fn generate_model(seed: u64) -> ModelFile {
    let algebra = fixtures::random_q_presentation(seed);
    let n = algebra.n_generators();
    let with_bimodule = seed % 4 != 3;
    let (bimodule, differential, action) = if with_bimodule {
        let rank = 1 + (seed % 2) as usize;
        let basis: Vec<String> = (0..rank).map(|i| format!("e{i}")).collect();
        let mut phi = Vec::new();
        for g in 0..n {
            let mut matrix = ncdc::bimodule::Matrix::zero(rank);
            for r in 0..rank {
                for c in 0..rank {
                    *matrix.at_mut(r, c) = algebra.random_element(
                        2,
                        seed.wrapping_mul(101)
                            .wrapping_add((g * rank * rank + r * rank + c) as u64),
                    );
                }
            }
            phi.push(matrix);
        }
        let m = ncdc::bimodule::BimodulePresentation::new(algebra.clone(), basis, phi).unwrap();
        let differential = (seed % 2 == 0).then(|| {
            ncdc::calculus::Differential::new(
                (0..n)
                    .map(|g| {
                        fixtures::random_bim_element(&m, 2, seed.wrapping_mul(77).wrapping_add(g as u64))
                    })
                    .collect(),
            )
        });
        let action = (seed % 5 < 2).then(|| {
            (0..m.rank())
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            algebra.random_element(
                                2,
                                seed.wrapping_mul(55).wrapping_add((i * n + j) as u64),
                            )
                        })
                        .collect()
                })
                .collect()
        });
        (Some(m), differential, action)
    } else {
        (None, None, None)
    };
    ModelFile {
        algebra,
        bimodule,
        differential,
        action,
        decl_lines: Default::default(),
    }
}

#[test]
fn criterion_9_parser_roundtrip() {
    for seed in 0..50u64 {
        let model = generate_model(seed);
        let text = emit::emit_model(&model);
        let reparsed = parse(&text).unwrap_or_else(|e| {
            panic!("generated file {seed} failed to reparse: {e}\n{text}")
        });
        assert_eq!(reparsed, model, "roundtrip mismatch for seed {seed}:\n{text}");
        // Canonical text is a fixed point.
        assert_eq!(emit::emit_model(&reparsed), text);
    }

    // Bit-exact canonical rendering of the three printed examples.
    let c = fixtures::qplane2();
    let two_x2y = AlgElement::monomial(
        Word::from_letters(vec![GenId(0), GenId(0), GenId(1)]),
        int(2),
    );
    assert_eq!(emit::emit_alg(c.algebra(), &two_x2y), "2 x^2 y");
    let d = ncdc::bimodule::BimElement::from_component(
        BasisId(0),
        AlgElement::from_gen(GenId(0)).scale(&int(5)),
    );
    assert_eq!(emit::emit_bim(c.bimodule(), &d), "dx.( 5 x )");
    assert_eq!(emit::emit_alg(c.algebra(), &AlgElement::zero()), "0");
    pass(9, "parse-emit identity on 50 generated files; canonical outputs bit-exact");
}
