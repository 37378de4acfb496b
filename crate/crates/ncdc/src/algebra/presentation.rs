//! Finitely presented algebras with quadratic rewrite rules and a
//! normal-form basis.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::element::{AlgElement, GenId, Scalar, Word};
use crate::error::{Error, Result};
use crate::linalg;
use crate::report::{Report, Status};

/// One rewrite rule `g_j g_i -> rhs` with `j > i` in generator order.
///
/// Every rhs word is normal, has length at most two, and is strictly
/// smaller than the lhs in the degree-lexicographic order, so rewriting
/// always terminates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RewriteRule {
    greater: GenId,
    lesser: GenId,
    rhs: AlgElement,
}

impl RewriteRule {
    pub fn new(greater: GenId, lesser: GenId, rhs: AlgElement) -> Self {
        RewriteRule {
            greater,
            lesser,
            rhs,
        }
    }

    pub fn greater(&self) -> GenId {
        self.greater
    }

    pub fn lesser(&self) -> GenId {
        self.lesser
    }

    pub fn rhs(&self) -> &AlgElement {
        &self.rhs
    }

    fn lhs_word(&self) -> Word {
        Word::from_letters(vec![self.greater, self.lesser])
    }
}

/// Generators plus one quadratic rule per unordered pair. The listing
/// order of the generators defines the monomial order: earlier = smaller.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraPresentation {
    names: Vec<String>,
    // Indexed triangularly: rule for (j, i) sits at j*(j-1)/2 + i.
    rules: Vec<RewriteRule>,
}

pub(crate) fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl AlgebraPresentation {
    /// Build a presentation, enforcing the rule-shape invariants. Local
    /// confluence is not enforced here; see [`AlgebraPresentation::check`].
    pub fn new(names: Vec<String>, rules: Vec<RewriteRule>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::shape("a presentation needs at least one generator"));
        }
        for name in &names {
            if !valid_identifier(name) {
                return Err(Error::shape(format!("invalid generator name `{name}`")));
            }
        }
        for (a, name) in names.iter().enumerate() {
            if names[..a].contains(name) {
                return Err(Error::shape(format!("duplicate generator name `{name}`")));
            }
        }

        let expected = n * (n - 1) / 2;
        if rules.len() != expected {
            return Err(Error::shape(format!(
                "expected {expected} rules for {n} generators, got {}",
                rules.len()
            )));
        }
        let mut slots: Vec<Option<RewriteRule>> = vec![None; expected];
        for rule in rules {
            let (j, i) = (rule.greater.0, rule.lesser.0);
            if j >= n || i >= n {
                return Err(Error::shape("rule references a generator out of range"));
            }
            if j <= i {
                return Err(Error::shape(format!(
                    "lhs must be in descending generator order: `{} {}`",
                    names[j], names[i]
                )));
            }
            let lhs = rule.lhs_word();
            for (w, _) in rule.rhs.terms() {
                if w.len() > 2 {
                    return Err(Error::shape(format!(
                        "rhs word of rule `{} {}` has length {} > 2",
                        names[j],
                        names[i],
                        w.len()
                    )));
                }
                if !w.is_normal() {
                    return Err(Error::shape(format!(
                        "rhs of rule `{} {}` contains a non-normal word",
                        names[j], names[i]
                    )));
                }
                if let Some(g) = w.max_gen() {
                    if g.0 >= n {
                        return Err(Error::shape("rhs references a generator out of range"));
                    }
                }
                if *w >= lhs {
                    return Err(Error::shape(format!(
                        "rhs of rule `{} {}` is not strictly smaller than its lhs",
                        names[j], names[i]
                    )));
                }
            }
            let slot = j * (j - 1) / 2 + i;
            if slots[slot].is_some() {
                return Err(Error::shape(format!(
                    "duplicate rule for the pair `{} {}`",
                    names[j], names[i]
                )));
            }
            slots[slot] = Some(rule);
        }
        let rules = slots
            .into_iter()
            .map(|s| s.expect("all slots filled by count check"))
            .collect();
        Ok(AlgebraPresentation { names, rules })
    }

    /// The commutative presentation on the given generators: every rule
    /// is `g_j g_i -> g_i g_j`.
    pub fn commutative(names: Vec<String>) -> Result<Self> {
        let n = names.len();
        let mut rules = Vec::new();
        for j in 1..n {
            for i in 0..j {
                rules.push(RewriteRule::new(
                    GenId(j),
                    GenId(i),
                    AlgElement::from_word(Word::from_letters(vec![GenId(i), GenId(j)])),
                ));
            }
        }
        AlgebraPresentation::new(names, rules)
    }

    pub fn n_generators(&self) -> usize {
        self.names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: GenId) -> &str {
        &self.names[g.0]
    }

    pub fn gen_by_name(&self, name: &str) -> Option<GenId> {
        self.names.iter().position(|n| n == name).map(GenId)
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn rule(&self, greater: GenId, lesser: GenId) -> &RewriteRule {
        assert!(greater.0 > lesser.0, "rule lookup needs a descending pair");
        &self.rules[greater.0 * (greater.0 - 1) / 2 + lesser.0]
    }

    fn assert_in_range(&self, e: &AlgElement) {
        if let Some(g) = e.max_gen() {
            assert!(
                g.0 < self.names.len(),
                "generator index {} out of range for a {}-generator presentation",
                g.0,
                self.names.len()
            );
        }
    }

    pub fn element_in_range(&self, e: &AlgElement) -> bool {
        e.max_gen().map_or(true, |g| g.0 < self.names.len())
    }

    /// Normal form of a single word.
    pub fn nf_word(&self, w: &Word) -> AlgElement {
        self.nf(&AlgElement::from_word(w.clone()))
    }

    /// Normal form: eliminate every adjacent descending pair. The result
    /// is equal to `e` modulo the ideal generated by the rules.
    ///
    /// Each replacement is strictly smaller in the monomial order, so the
    /// worklist below pops every word at most once.
    pub fn nf(&self, e: &AlgElement) -> AlgElement {
        self.assert_in_range(e);
        let mut pending: BTreeMap<Word, Scalar> =
            e.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = AlgElement::zero();
        while let Some((w, c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            match w.first_descent() {
                None => out.add_term(w, c),
                Some(t) => {
                    let letters = w.letters();
                    let rule = self.rule(letters[t], letters[t + 1]);
                    for (m, rc) in rule.rhs.terms() {
                        let mut nl = letters[..t].to_vec();
                        nl.extend_from_slice(m.letters());
                        nl.extend_from_slice(&letters[t + 2..]);
                        let nw = Word::from_letters(nl);
                        let coeff = &c * rc;
                        match pending.entry(nw) {
                            std::collections::btree_map::Entry::Vacant(slot) => {
                                slot.insert(coeff);
                            }
                            std::collections::btree_map::Entry::Occupied(mut slot) => {
                                *slot.get_mut() += coeff;
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Product in the presented algebra: concatenation followed by
    /// normal-form reduction.
    pub fn mul(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        self.assert_in_range(a);
        self.assert_in_range(b);
        self.nf(&a.free_mul(b))
    }

    /// Local-confluence report: every overlap word `g_k g_j g_i` with
    /// `k > j > i` must reduce to the same normal form along both paths.
    /// The reported discrepancy is `nf(right-pair first) - nf(left-pair
    /// first)`.
    pub fn check(&self) -> Report {
        let mut report = Report::new();
        let n = self.names.len();
        let mut overlaps = 0usize;
        for k in 2..n {
            for j in 1..k {
                for i in 0..j {
                    overlaps += 1;
                    let (gk, gj, gi) = (GenId(k), GenId(j), GenId(i));
                    let left_first = self.nf(
                        &self
                            .rule(gk, gj)
                            .rhs
                            .free_mul(&AlgElement::from_gen(gi)),
                    );
                    let right_first = self.nf(
                        &AlgElement::from_gen(gk).free_mul(&self.rule(gj, gi).rhs),
                    );
                    let key = format!(
                        "overlap {} {} {}",
                        self.names[k], self.names[j], self.names[i]
                    );
                    let discrepancy = right_first.sub(&left_first);
                    if discrepancy.is_zero() {
                        report.push(key, Status::Pass, String::new());
                    } else {
                        report.push(
                            key,
                            Status::Fail,
                            crate::model::emit::emit_alg(self, &discrepancy),
                        );
                    }
                }
            }
        }
        if overlaps == 0 {
            report.push(
                "overlaps".to_string(),
                Status::Pass,
                "none (fewer than three generators)".to_string(),
            );
        }
        report
    }

    /// All normal words of length at most `d`, ascending in the monomial
    /// order. There are C(n + d, d) of them for n generators.
    pub fn enumerate_monomials(&self, d: usize) -> Vec<Word> {
        let n = self.names.len();
        let mut out = vec![Word::empty()];
        let mut level: Vec<Vec<GenId>> = vec![Vec::new()];
        for _ in 0..d {
            let mut next = Vec::new();
            for word in &level {
                let lo = word.last().map_or(0, |g| g.0);
                for g in lo..n {
                    let mut nw = word.clone();
                    nw.push(GenId(g));
                    next.push(nw);
                }
            }
            out.extend(next.iter().cloned().map(Word::from_letters));
            level = next;
        }
        out
    }

    /// Image of `e` under the word-reversal anti-isomorphism, normalized
    /// in `self`. When `self` is the mirror of the presentation `e` lives
    /// in, this is the canonical translation between the two algebras.
    pub fn op_image(&self, e: &AlgElement) -> AlgElement {
        let mut reversed = AlgElement::zero();
        for (w, c) in e.terms() {
            reversed.add_term(w.reversed(), c.clone());
        }
        self.nf(&reversed)
    }

    /// Present the opposite algebra on the same generator order.
    ///
    /// Reversing each relation expresses every ascending length-two word
    /// in terms of descending ones; solving that linear system over the
    /// rationals re-orients the relations into rule shape. Fails when the
    /// system is singular or a solved rhs is not strictly smaller than
    /// its lhs.
    pub fn mirror(&self) -> Result<Self> {
        let n = self.names.len();
        let pairs: Vec<(usize, usize)> = (1..n)
            .flat_map(|j| (0..j).map(move |i| (j, i)))
            .collect();
        let npairs = pairs.len();
        let pair_index = |j: usize, i: usize| j * (j - 1) / 2 + i;

        // Row per original rule (j, i); column per unknown descending word
        // (b, a). The right-hand sides collect the reversed lhs together
        // with the reversed diagonal and lower-degree terms.
        let mut matrix = vec![vec![Scalar::zero(); npairs]; npairs];
        let mut rhs: Vec<AlgElement> = vec![AlgElement::zero(); npairs];
        for &(j, i) in &pairs {
            let row = pair_index(j, i);
            rhs[row].add_term(
                Word::from_letters(vec![GenId(i), GenId(j)]),
                num_traits::One::one(),
            );
            for (w, c) in self.rule(GenId(j), GenId(i)).rhs.terms() {
                match w.letters() {
                    [a, b] if a < b => {
                        matrix[row][pair_index(b.0, a.0)] += c;
                    }
                    _ => {
                        // Diagonal squares and words of length <= 1 reverse
                        // to themselves.
                        rhs[row].add_term(w.reversed(), -c.clone());
                    }
                }
            }
        }

        let solved = linalg::solve_symbolic(matrix, rhs).ok_or_else(|| {
            Error::Mirror(
                "the reversed relations do not determine the descending words".to_string(),
            )
        })?;

        let mut rules = Vec::with_capacity(npairs);
        for &(b, a) in &pairs {
            let rhs = solved[pair_index(b, a)].clone();
            let lhs = Word::from_letters(vec![GenId(b), GenId(a)]);
            for (w, _) in rhs.terms() {
                if *w >= lhs {
                    return Err(Error::Mirror(format!(
                        "mirrored rule for `{} {}` violates the monomial order",
                        self.names[b], self.names[a]
                    )));
                }
            }
            rules.push(RewriteRule::new(GenId(b), GenId(a), rhs));
        }
        AlgebraPresentation::new(self.names.clone(), rules)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::element::{int, ratio};

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn word(letters: &[usize]) -> Word {
        Word::from_letters(letters.iter().map(|&i| GenId(i)).collect::<Vec<_>>())
    }

    /// y x -> q x y on generators (x, y).
    fn qplane(q: Scalar) -> AlgebraPresentation {
        AlgebraPresentation::new(
            names(&["x", "y"]),
            vec![RewriteRule::new(
                GenId(1),
                GenId(0),
                AlgElement::monomial(word(&[0, 1]), q),
            )],
        )
        .unwrap()
    }

    /// The non-confluent three-generator system:
    /// y x -> x y + x; z x -> x z + 1; z y -> y z.
    fn nonconfluent3() -> AlgebraPresentation {
        let mut yx = AlgElement::from_word(word(&[0, 1]));
        yx.add_term(word(&[0]), int(1));
        let mut zx = AlgElement::from_word(word(&[0, 2]));
        zx.add_term(Word::empty(), int(1));
        let zy = AlgElement::from_word(word(&[1, 2]));
        AlgebraPresentation::new(
            names(&["x", "y", "z"]),
            vec![
                RewriteRule::new(GenId(1), GenId(0), yx),
                RewriteRule::new(GenId(2), GenId(0), zx),
                RewriteRule::new(GenId(2), GenId(1), zy),
            ],
        )
        .unwrap()
    }

    /// Brute-force rewriting oracle: substitute the first descent
    /// recursively, with no worklist merging.
    fn nf_oracle(p: &AlgebraPresentation, e: &AlgElement) -> AlgElement {
        fn word_nf(p: &AlgebraPresentation, w: &Word) -> AlgElement {
            match w.first_descent() {
                None => AlgElement::from_word(w.clone()),
                Some(t) => {
                    let letters = w.letters();
                    let rule = p.rule(letters[t], letters[t + 1]);
                    let mut out = AlgElement::zero();
                    for (m, c) in rule.rhs().terms() {
                        let mut nl = letters[..t].to_vec();
                        nl.extend_from_slice(m.letters());
                        nl.extend_from_slice(&letters[t + 2..]);
                        out = out.add(&word_nf(p, &Word::from_letters(nl)).scale(c));
                    }
                    out
                }
            }
        }
        let mut out = AlgElement::zero();
        for (w, c) in e.terms() {
            out = out.add(&word_nf(p, w).scale(c));
        }
        out
    }

    #[test]
    fn single_rewrite() {
        let p = qplane(int(2));
        let yx = AlgElement::from_word(word(&[1, 0]));
        assert_eq!(p.nf(&yx), AlgElement::monomial(word(&[0, 1]), int(2)));
    }

    #[test]
    fn repeated_rewrite_matches_oracle() {
        let p = qplane(int(2));
        let yxx = AlgElement::from_word(word(&[1, 0, 0]));
        let expected = AlgElement::monomial(word(&[0, 0, 1]), int(4));
        assert_eq!(p.nf(&yxx), expected);
        assert_eq!(nf_oracle(&p, &yxx), expected);
    }

    #[test]
    fn normal_words_are_fixed() {
        let p = qplane(int(2));
        let x = AlgElement::from_gen(GenId(0));
        assert_eq!(p.nf(&x), x);
    }

    #[test]
    fn nf_agrees_with_oracle_on_random_elements() {
        let p = qplane(int(2));
        for seed in 0..40 {
            let a = p.random_element(3, seed);
            let b = p.random_element(3, seed + 1000);
            let prod = a.free_mul(&b);
            assert_eq!(p.nf(&prod), nf_oracle(&p, &prod));
        }
        let w = nonconfluent3();
        for seed in 0..40 {
            let a = w.random_element(2, seed);
            let b = w.random_element(2, seed + 1000);
            let prod = a.free_mul(&b);
            assert_eq!(w.nf(&prod), nf_oracle(&w, &prod));
        }
    }

    #[test]
    fn mul_examples() {
        let p = qplane(int(2));
        let x = AlgElement::from_gen(GenId(0));
        let y = AlgElement::from_gen(GenId(1));
        assert_eq!(p.mul(&x, &y), AlgElement::from_word(word(&[0, 1])));
        assert_eq!(
            p.mul(&y, &x),
            AlgElement::monomial(word(&[0, 1]), int(2))
        );
        for seed in 0..20 {
            let f = p.random_element(4, seed);
            assert_eq!(p.mul(&AlgElement::unit(), &f), p.nf(&f));
            assert_eq!(p.mul(&f, &AlgElement::unit()), p.nf(&f));
        }
    }

    #[test]
    fn two_generator_check_is_vacuous() {
        let p = qplane(int(2));
        assert!(p.check().passed());
        let c = AlgebraPresentation::commutative(names(&["x", "y"])).unwrap();
        assert!(c.check().passed());
    }

    #[test]
    fn nonconfluent_overlap_reports_unit_discrepancy() {
        let report = nonconfluent3().check();
        assert!(!report.passed());
        let entry = report
            .entries()
            .iter()
            .find(|e| e.key == "overlap z y x")
            .expect("overlap entry present");
        assert_eq!(entry.status, Status::Fail);
        assert_eq!(entry.detail, "1");
    }

    #[test]
    fn monomial_enumeration_counts() {
        let p = AlgebraPresentation::commutative(names(&["x", "y"])).unwrap();
        assert_eq!(p.enumerate_monomials(0), vec![Word::empty()]);
        assert_eq!(
            p.enumerate_monomials(1),
            vec![Word::empty(), word(&[0]), word(&[1])]
        );
        assert_eq!(p.enumerate_monomials(2).len(), 6);
        let q = AlgebraPresentation::commutative(names(&["x", "y", "z"])).unwrap();
        // C(3 + 4, 4) = 35
        assert_eq!(q.enumerate_monomials(4).len(), 35);
        let monos = q.enumerate_monomials(3);
        assert!(monos.windows(2).all(|w| w[0] < w[1]), "ascending order");
    }

    #[test]
    fn shape_violations_are_rejected() {
        // Ascending lhs.
        let bad = AlgebraPresentation::new(
            names(&["x", "y"]),
            vec![RewriteRule::new(
                GenId(0),
                GenId(1),
                AlgElement::from_word(word(&[0, 1])),
            )],
        );
        assert!(matches!(bad, Err(Error::Shape(_))));
        // rhs not smaller than lhs.
        let bad = AlgebraPresentation::new(
            names(&["x", "y"]),
            vec![RewriteRule::new(
                GenId(1),
                GenId(0),
                AlgElement::from_word(word(&[1, 1])),
            )],
        );
        assert!(matches!(bad, Err(Error::Shape(_))));
        // Missing rule.
        let bad = AlgebraPresentation::new(names(&["x", "y"]), vec![]);
        assert!(matches!(bad, Err(Error::Shape(_))));
    }

    #[test]
    fn mirror_of_commutative_is_itself() {
        let p = AlgebraPresentation::commutative(names(&["x", "y"])).unwrap();
        assert_eq!(p.mirror().unwrap(), p);
    }

    #[test]
    fn mirror_of_qplane_inverts_the_coefficient() {
        let p = qplane(int(2));
        let m = p.mirror().unwrap();
        assert_eq!(
            m.rule(GenId(1), GenId(0)).rhs(),
            &AlgElement::monomial(word(&[0, 1]), ratio(1, 2))
        );
        // Mirroring twice returns the original presentation.
        assert_eq!(m.mirror().unwrap(), p);
    }

    #[test]
    fn mirror_of_weyl_flips_the_sign() {
        let mut rhs = AlgElement::from_word(word(&[0, 1]));
        rhs.add_term(Word::empty(), int(1));
        let p = AlgebraPresentation::new(
            names(&["x", "y"]),
            vec![RewriteRule::new(GenId(1), GenId(0), rhs)],
        )
        .unwrap();
        let m = p.mirror().unwrap();
        let mut expected = AlgElement::from_word(word(&[0, 1]));
        expected.add_term(Word::empty(), int(-1));
        assert_eq!(m.rule(GenId(1), GenId(0)).rhs(), &expected);
        assert_eq!(m.mirror().unwrap(), p);
    }

    #[test]
    fn mirror_rejects_a_square_relation() {
        // z y -> x x leaves no relation to solve for the descending word
        // y z in the opposite algebra.
        let p = AlgebraPresentation::new(
            names(&["x", "y", "z"]),
            vec![
                RewriteRule::new(GenId(1), GenId(0), AlgElement::from_word(word(&[0, 1]))),
                RewriteRule::new(GenId(2), GenId(0), AlgElement::from_word(word(&[0, 2]))),
                RewriteRule::new(GenId(2), GenId(1), AlgElement::from_word(word(&[0, 0]))),
            ],
        )
        .unwrap();
        assert!(matches!(p.mirror(), Err(Error::Mirror(_))));
    }

    #[test]
    fn op_image_is_an_anti_isomorphism() {
        let p = qplane(int(2));
        let m = p.mirror().unwrap();
        for seed in 0..30 {
            let f = p.random_element(3, seed);
            let g = p.random_element(3, seed + 500);
            let lhs = m.op_image(&p.mul(&f, &g));
            let rhs = m.mul(&m.op_image(&g), &m.op_image(&f));
            assert_eq!(lhs, rhs);
            // Round trip back to the original algebra.
            assert_eq!(p.op_image(&m.op_image(&f)), p.nf(&f));
        }
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn nf_panics_on_out_of_range_generators() {
        let p = qplane(int(2));
        p.nf(&AlgElement::from_gen(GenId(7)));
    }
}
