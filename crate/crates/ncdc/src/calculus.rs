//! First-order differential calculi: a differential on generators,
//! extended by the Leibniz rule, with per-rule well-definedness checks
//! and a bounded spanned-by-differentials test.

use num_traits::Zero;

use crate::algebra::{AlgElement, AlgebraPresentation, GenId, Scalar, Word};
use crate::bimodule::{BasisId, BimElement, BimodulePresentation};
use crate::error::{Error, Result};
use crate::linalg;
use crate::report::{Report, Status};

/// Values of the differential on the generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Differential {
    values: Vec<BimElement>,
}

impl Differential {
    pub fn new(values: Vec<BimElement>) -> Self {
        Differential { values }
    }

    pub fn values(&self) -> &[BimElement] {
        &self.values
    }

    pub fn on_gen(&self, g: GenId) -> &BimElement {
        &self.values[g.0]
    }
}

/// A calculus: algebra, bimodule of one-forms, and differential. The
/// constructor checks shapes; `check` verifies that the Leibniz extension
/// is well defined on the quotient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CalculusModel {
    bimodule: BimodulePresentation,
    differential: Differential,
}

impl CalculusModel {
    pub fn new(bimodule: BimodulePresentation, differential: Differential) -> Result<Self> {
        if differential.values.len() != bimodule.algebra().n_generators() {
            return Err(Error::shape(format!(
                "expected one differential value per generator ({}), got {}",
                bimodule.algebra().n_generators(),
                differential.values.len()
            )));
        }
        for v in &differential.values {
            if let Some(i) = v.max_basis() {
                if i.0 >= bimodule.rank() {
                    return Err(Error::shape(
                        "differential value references a basis element out of range",
                    ));
                }
            }
            for (_, a) in v.components() {
                if !bimodule.algebra().element_in_range(a) {
                    return Err(Error::shape(
                        "differential coefficient references a generator out of range",
                    ));
                }
            }
        }
        Ok(CalculusModel {
            bimodule,
            differential,
        })
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        self.bimodule.algebra()
    }

    pub fn bimodule(&self) -> &BimodulePresentation {
        &self.bimodule
    }

    pub fn differential(&self) -> &Differential {
        &self.differential
    }

    /// Leibniz expansion of a single word:
    /// `d(g_1 … g_m) = Σ_t (g_1 … g_{t-1}) . d(g_t) . (g_{t+1} … g_m)`.
    ///
    /// Works on any word, normal or not; this is what makes the per-rule
    /// well-definedness check meaningful.
    fn diff_word(&self, w: &Word) -> BimElement {
        let letters = w.letters();
        let mut out = BimElement::zero();
        for t in 0..letters.len() {
            let prefix = AlgElement::from_word(Word::from_letters(letters[..t].to_vec()));
            let suffix = AlgElement::from_word(Word::from_letters(letters[t + 1..].to_vec()));
            let mid = self
                .bimodule
                .left_mul(&prefix, self.differential.on_gen(letters[t]));
            out = out.add(&self.bimodule.right_mul(&mid, &suffix));
        }
        out
    }

    /// The differential, linear over terms and vanishing on scalars.
    pub fn diff(&self, f: &AlgElement) -> BimElement {
        let mut out = BimElement::zero();
        for (w, c) in f.terms() {
            out = out.add(&self.diff_word(w).scale(c));
        }
        out
    }

    /// Well-definedness of the Leibniz extension: for every rewrite rule
    /// the expansions of both sides agree, and `d` kills the unit. The
    /// reported discrepancy is `diff(rhs) - diff(lhs)`.
    pub fn check(&self) -> Report {
        let mut report = Report::new();
        let p = self.algebra();
        let unit = self.diff(&AlgElement::unit());
        report.push(
            "d(1) = 0",
            if unit.is_zero() {
                Status::Pass
            } else {
                Status::Fail
            },
            String::new(),
        );
        for rule in p.rules() {
            let lhs_word = Word::from_letters(vec![rule.greater(), rule.lesser()]);
            let lhs = self.diff_word(&lhs_word);
            let rhs = self.diff(rule.rhs());
            let key = format!(
                "calculus rule {} {}",
                p.name(rule.greater()),
                p.name(rule.lesser())
            );
            let diff = rhs.sub(&lhs);
            if diff.is_zero() {
                report.push(key, Status::Pass, String::new());
            } else {
                report.push(
                    key,
                    Status::Fail,
                    crate::model::emit::emit_bim(&self.bimodule, &diff),
                );
            }
        }
        report
    }

    /// Bounded test of the spanned-by-differentials hypothesis: is every
    /// basis element a combination `Σ c · w . d(g) . m` with words `w`,
    /// `m` of degree at most `bound`? PASS comes with witnesses; a
    /// failure to reach a basis element within the bound is only ever
    /// INCONCLUSIVE.
    pub fn spans_check(&self, bound: usize) -> SpanReport {
        let p = self.algebra();
        let m = &self.bimodule;
        let words = p.enumerate_monomials(bound);

        let mut columns: Vec<(SpanTerm, BimElement)> = Vec::new();
        for w in &words {
            let w_elem = AlgElement::from_word(w.clone());
            for g in 0..p.n_generators() {
                let base = m.left_mul(&w_elem, self.differential.on_gen(GenId(g)));
                for rm in &words {
                    let value =
                        m.right_mul(&base, &AlgElement::from_word(rm.clone()));
                    if !value.is_zero() {
                        columns.push((
                            SpanTerm {
                                coeff: num_traits::One::one(),
                                left: w.clone(),
                                gen: GenId(g),
                                right: rm.clone(),
                            },
                            value,
                        ));
                    }
                }
            }
        }

        // Coordinatize on (basis, word) pairs.
        let mut coords = std::collections::BTreeMap::new();
        for (_, v) in &columns {
            for (i, a) in v.components() {
                for (w, _) in a.terms() {
                    let key = (i, w.clone());
                    let next = coords.len();
                    coords.entry(key).or_insert(next);
                }
            }
        }
        for i in 0..m.rank() {
            let key = (BasisId(i), Word::empty());
            let next = coords.len();
            coords.entry(key).or_insert(next);
        }
        let rows = coords.len();
        let mut matrix = vec![vec![Scalar::zero(); columns.len()]; rows];
        for (c, (_, v)) in columns.iter().enumerate() {
            for (i, a) in v.components() {
                for (w, coeff) in a.terms() {
                    let r = coords[&(i, w.clone())];
                    matrix[r][c] = coeff.clone();
                }
            }
        }

        let mut witnesses = Vec::new();
        for i in 0..m.rank() {
            let mut target = vec![Scalar::zero(); rows];
            target[coords[&(BasisId(i), Word::empty())]] = num_traits::One::one();
            let witness = linalg::solve_membership(&matrix, columns.len(), &target).map(
                |combination| {
                    let terms = combination
                        .iter()
                        .zip(&columns)
                        .filter(|(c, _)| !c.is_zero())
                        .map(|(c, (term, _))| SpanTerm {
                            coeff: c.clone(),
                            ..term.clone()
                        })
                        .collect();
                    SpanWitness { terms }
                },
            );
            witnesses.push((BasisId(i), witness));
        }
        SpanReport {
            bound,
            witnesses,
        }
    }
}

/// One summand `coeff · left . d(gen) . right` of a span witness.
#[derive(Clone, Debug)]
pub struct SpanTerm {
    pub coeff: Scalar,
    pub left: Word,
    pub gen: GenId,
    pub right: Word,
}

#[derive(Clone, Debug)]
pub struct SpanWitness {
    pub terms: Vec<SpanTerm>,
}

/// Outcome of `spans_check`: PASS with witnesses, or INCONCLUSIVE for
/// every basis element not reached within the bound.
#[derive(Clone, Debug)]
pub struct SpanReport {
    pub bound: usize,
    pub witnesses: Vec<(BasisId, Option<SpanWitness>)>,
}

impl SpanReport {
    pub fn passed(&self) -> bool {
        self.witnesses.iter().all(|(_, w)| w.is_some())
    }

    pub fn to_report(&self, m: &BimodulePresentation) -> Report {
        let mut report = Report::new();
        for (i, witness) in &self.witnesses {
            let key = format!("span {}", m.basis_name(*i));
            match witness {
                Some(w) => {
                    report.push(key, Status::Pass, render_witness(m, w));
                }
                None => {
                    report.push(
                        key,
                        Status::Inconclusive,
                        format!("not reached at bound {}", self.bound),
                    );
                }
            }
        }
        report
    }
}

fn render_witness(m: &BimodulePresentation, w: &SpanWitness) -> String {
    let p = m.algebra();
    let parts: Vec<String> = w
        .terms
        .iter()
        .map(|t| {
            let mut s = String::new();
            if t.coeff != num_traits::One::one() {
                s.push_str(&format!("{} ", t.coeff));
            }
            if !t.left.is_empty() {
                s.push_str(&crate::model::emit::emit_word(p, &t.left));
                s.push(' ');
            }
            s.push_str(&format!("d({})", p.name(t.gen)));
            if !t.right.is_empty() {
                s.push(' ');
                s.push_str(&crate::model::emit::emit_word(p, &t.right));
            }
            s
        })
        .collect();
    parts.join(" + ")
}
