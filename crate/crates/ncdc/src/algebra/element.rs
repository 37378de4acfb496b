//! Words in the free algebra and exact linear combinations of them.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational scalar. The ground ring of every algebra here.
pub type Scalar = num_rational::BigRational;

/// Scalar from an integer.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Scalar from a numerator/denominator pair. Panics on zero denominator.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Index into a presentation's generator list.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GenId(pub usize);

/// A monomial: a finite sequence of generators. The empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(Vec<GenId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(g: GenId) -> Self {
        Word(vec![g])
    }

    pub fn from_letters(letters: impl Into<Vec<GenId>>) -> Self {
        Word(letters.into())
    }

    pub fn letters(&self) -> &[GenId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.0.clone();
        letters.reverse();
        Word(letters)
    }

    /// First position `t` with `letters[t] > letters[t+1]`, if any.
    pub fn first_descent(&self) -> Option<usize> {
        self.0.windows(2).position(|w| w[0] > w[1])
    }

    /// A word is normal when its letters are non-decreasing.
    pub fn is_normal(&self) -> bool {
        self.first_descent().is_none()
    }

    /// Largest generator index used, if the word is nonempty.
    pub fn max_gen(&self) -> Option<GenId> {
        self.0.iter().copied().max()
    }
}

// Degree-lexicographic order: shorter words first, then left-to-right on
// generator indices. Earlier-listed generators are smaller.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite rational linear combination of words. The zero element is the
/// empty combination; stored coefficients are never zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgElement {
    terms: BTreeMap<Word, Scalar>,
}

impl AlgElement {
    pub fn zero() -> Self {
        AlgElement {
            terms: BTreeMap::new(),
        }
    }

    /// The unit of the algebra: the empty word with coefficient one.
    pub fn unit() -> Self {
        AlgElement::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        AlgElement::monomial(w, Scalar::one())
    }

    pub fn from_gen(g: GenId) -> Self {
        AlgElement::from_word(Word::single(g))
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut e = AlgElement::zero();
        e.add_term(w, c);
        e
    }

    /// A scalar multiple of the unit.
    pub fn scalar(c: Scalar) -> Self {
        AlgElement::monomial(Word::empty(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest word length present; zero for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Merge a term in, dropping the word if the coefficient cancels.
    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        AlgElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return AlgElement::zero();
        }
        AlgElement {
            terms: self
                .terms
                .iter()
                .map(|(w, k)| (w.clone(), k * c))
                .collect(),
        }
    }

    /// Product in the free algebra: bilinear concatenation, no rewriting.
    pub fn free_mul(&self, other: &Self) -> Self {
        let mut out = AlgElement::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in other.terms() {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// Every word normal (non-decreasing letters)?
    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(Word::is_normal)
    }

    /// Largest generator index used across all words.
    pub fn max_gen(&self) -> Option<GenId> {
        self.terms.keys().filter_map(Word::max_gen).max()
    }
}
