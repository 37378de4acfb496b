//! Deterministic random elements for property trials.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::element::{int, ratio, AlgElement, Scalar};
use super::presentation::AlgebraPresentation;

/// The coefficient pool used by random elements.
pub fn coefficient_pool() -> Vec<Scalar> {
    vec![
        int(0),
        int(1),
        int(-1),
        ratio(1, 2),
        ratio(-1, 2),
        int(2),
        int(-2),
    ]
}

pub(crate) fn pick_index(rng: &mut ChaCha8Rng, len: usize) -> usize {
    (rng.next_u64() % len as u64) as usize
}

impl AlgebraPresentation {
    /// A random element of degree at most `d`, deterministic in `seed`.
    /// Between one and four terms with coefficients from the small pool
    /// `{0, ±1, ±1/2, ±2}`; the result is in normal form.
    pub fn random_element(&self, d: usize, seed: u64) -> AlgElement {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let monomials = self.enumerate_monomials(d);
        let pool = coefficient_pool();
        let terms = 1 + pick_index(&mut rng, 4);
        let mut out = AlgElement::zero();
        for _ in 0..terms {
            let w = monomials[pick_index(&mut rng, monomials.len())].clone();
            let c = pool[pick_index(&mut rng, pool.len())].clone();
            out.add_term(w, c);
        }
        out
    }
}
