//! Free finitely generated right-basis bimodules. The left action comes
//! from a structure homomorphism: matrices of algebra elements, one per
//! generator, extended multiplicatively over words.

use std::collections::BTreeMap;

use crate::algebra::{valid_identifier, AlgElement, AlgebraPresentation, GenId, Scalar, Word};
use crate::error::{Error, Result};
use crate::report::{Report, Status};

/// Index into a bimodule's basis list.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BasisId(pub usize);

/// An element written on the right basis: `x = Σ e_i . a_i` with the
/// coefficients on the right. Absent components are zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BimElement {
    components: BTreeMap<BasisId, AlgElement>,
}

impl BimElement {
    pub fn zero() -> Self {
        BimElement::default()
    }

    pub fn basis(i: BasisId) -> Self {
        BimElement::from_component(i, AlgElement::unit())
    }

    pub fn from_component(i: BasisId, a: AlgElement) -> Self {
        let mut x = BimElement::zero();
        x.add_component(i, a);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, i: BasisId) -> AlgElement {
        self.components.get(&i).cloned().unwrap_or_default()
    }

    pub fn components(&self) -> impl Iterator<Item = (BasisId, &AlgElement)> {
        self.components.iter().map(|(&i, a)| (i, a))
    }

    pub fn add_component(&mut self, i: BasisId, a: AlgElement) {
        if a.is_zero() {
            return;
        }
        match self.components.entry(i) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(a);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().add(&a);
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
        for (i, a) in other.components() {
            out.add_component(i, a.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, a) in other.components() {
            out.add_component(i, a.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = BimElement::zero();
        for (i, a) in self.components() {
            out.add_component(i, a.scale(c));
        }
        out
    }

    /// Largest coefficient degree; zero for the zero element.
    pub fn degree(&self) -> usize {
        self.components.values().map(AlgElement::degree).max().unwrap_or(0)
    }

    pub fn max_basis(&self) -> Option<BasisId> {
        self.components.keys().copied().max()
    }
}

/// A square matrix of algebra elements, row-major. Rows are indexed by
/// the output basis: `g . e_i = Σ_j e_j . Φ_ji(g)` stores `Φ_ji` at row
/// `j`, column `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rank: usize,
    entries: Vec<AlgElement>,
}

impl Matrix {
    pub fn zero(rank: usize) -> Self {
        Matrix {
            rank,
            entries: vec![AlgElement::zero(); rank * rank],
        }
    }

    pub fn identity(rank: usize) -> Self {
        let mut m = Matrix::zero(rank);
        for i in 0..rank {
            *m.at_mut(i, i) = AlgElement::unit();
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn at(&self, row: usize, col: usize) -> &AlgElement {
        &self.entries[row * self.rank + col]
    }

    pub fn at_mut(&mut self, row: usize, col: usize) -> &mut AlgElement {
        &mut self.entries[row * self.rank + col]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank);
        Matrix {
            rank: self.rank,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Matrix {
            rank: self.rank,
            entries: self.entries.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Matrix product with noncommutative entry products, normalized.
    pub fn mul(&self, other: &Self, p: &AlgebraPresentation) -> Self {
        assert_eq!(self.rank, other.rank);
        let mut out = Matrix::zero(self.rank);
        for r in 0..self.rank {
            for c in 0..self.rank {
                let mut sum = AlgElement::zero();
                for k in 0..self.rank {
                    sum = sum.add(&p.mul(self.at(r, k), other.at(k, c)));
                }
                *out.at_mut(r, c) = sum;
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Matrix::zero(self.rank);
        for r in 0..self.rank {
            for c in 0..self.rank {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }
}

/// Which role the stored data plays. A `Left` presentation is the mirror
/// of a right presentation: the same shape of data over the mirrored
/// algebra, with the module roles swapped.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Side {
    Right,
    Left,
}

/// A bimodule that is free as a right module, with left multiplication
/// given by the structure homomorphism on generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BimodulePresentation {
    algebra: AlgebraPresentation,
    basis_names: Vec<String>,
    phi: Vec<Matrix>,
    side: Side,
}

impl BimodulePresentation {
    /// Build a right presentation. Rejects any algebra that fails its
    /// confluence check.
    pub fn new(
        algebra: AlgebraPresentation,
        basis_names: Vec<String>,
        phi: Vec<Matrix>,
    ) -> Result<Self> {
        Self::with_side(algebra, basis_names, phi, Side::Right)
    }

    fn with_side(
        algebra: AlgebraPresentation,
        basis_names: Vec<String>,
        phi: Vec<Matrix>,
        side: Side,
    ) -> Result<Self> {
        if !algebra.check().passed() {
            return Err(Error::invalid(
                "the underlying algebra fails its confluence check",
            ));
        }
        let rank = basis_names.len();
        if rank == 0 {
            return Err(Error::shape("a bimodule needs at least one basis element"));
        }
        for name in &basis_names {
            if !valid_identifier(name) {
                return Err(Error::shape(format!("invalid basis name `{name}`")));
            }
            if algebra.gen_by_name(name).is_some() {
                return Err(Error::shape(format!(
                    "basis name `{name}` collides with a generator"
                )));
            }
        }
        for (a, name) in basis_names.iter().enumerate() {
            if basis_names[..a].contains(name) {
                return Err(Error::shape(format!("duplicate basis name `{name}`")));
            }
        }
        if phi.len() != algebra.n_generators() {
            return Err(Error::shape(format!(
                "expected one structure matrix per generator ({}), got {}",
                algebra.n_generators(),
                phi.len()
            )));
        }
        for (g, m) in phi.iter().enumerate() {
            if m.rank() != rank {
                return Err(Error::shape(format!(
                    "structure matrix for generator `{}` has rank {} instead of {rank}",
                    algebra.name(GenId(g)),
                    m.rank()
                )));
            }
            for e in &m.entries {
                if !algebra.element_in_range(e) {
                    return Err(Error::shape(
                        "structure matrix entry references a generator out of range",
                    ));
                }
            }
        }
        Ok(BimodulePresentation {
            algebra,
            basis_names,
            phi,
            side,
        })
    }

    /// The free rank-one-style presentation where every generator acts
    /// diagonally by itself: `Φ(g) = g · identity`.
    pub fn scalar_diagonal(algebra: AlgebraPresentation, basis_names: Vec<String>) -> Result<Self> {
        let rank = basis_names.len();
        let phi = (0..algebra.n_generators())
            .map(|g| Matrix::identity(rank).scale_by_element(&AlgElement::from_gen(GenId(g))))
            .collect();
        BimodulePresentation::new(algebra, basis_names, phi)
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.basis_names.len()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_name(&self, i: BasisId) -> &str {
        &self.basis_names[i.0]
    }

    pub fn basis_by_name(&self, name: &str) -> Option<BasisId> {
        self.basis_names.iter().position(|n| n == name).map(BasisId)
    }

    pub fn phi_gen(&self, g: GenId) -> &Matrix {
        &self.phi[g.0]
    }

    /// `Φ(word)`: the ordered product of the generator matrices.
    pub fn phi_word(&self, w: &Word) -> Matrix {
        let mut out = Matrix::identity(self.rank());
        for &g in w.letters() {
            out = out.mul(&self.phi[g.0], &self.algebra);
        }
        out
    }

    /// The multiplicative-linear extension of the structure homomorphism:
    /// `Φ(1)` is the identity and `Φ` is linear over terms.
    pub fn phi(&self, f: &AlgElement) -> Matrix {
        let mut out = Matrix::zero(self.rank());
        for (w, c) in f.terms() {
            out = out.add(&self.phi_word(w).scale(c));
        }
        out
    }

    fn assert_element(&self, x: &BimElement) {
        if let Some(i) = x.max_basis() {
            assert!(i.0 < self.rank(), "basis index {} out of range", i.0);
        }
    }

    /// Free right action: component-wise product, normalized.
    pub fn right_mul(&self, x: &BimElement, f: &AlgElement) -> BimElement {
        self.assert_element(x);
        let mut out = BimElement::zero();
        for (i, a) in x.components() {
            out.add_component(i, self.algebra.mul(a, f));
        }
        out
    }

    /// Left action through the structure homomorphism:
    /// `f . (Σ e_i . a_i) = Σ_j e_j . (Σ_i Φ_ji(f) a_i)`.
    ///
    /// The argument is normalized first, so the result only depends on
    /// the class of `f`.
    pub fn left_mul(&self, f: &AlgElement, x: &BimElement) -> BimElement {
        self.assert_element(x);
        let phi = self.phi(&self.algebra.nf(f));
        let mut out = BimElement::zero();
        for (i, a) in x.components() {
            for j in 0..self.rank() {
                let entry = phi.at(j, i.0);
                if !entry.is_zero() {
                    out.add_component(BasisId(j), self.algebra.mul(entry, a));
                }
            }
        }
        out
    }

    /// Per-rule consistency of the structure homomorphism: for every rule
    /// `lhs -> rhs` of the algebra, `Φ(lhs) = Φ(rhs)` entry-wise.
    pub fn check(&self) -> Report {
        let mut report = Report::new();
        for rule in self.algebra.rules() {
            let lhs = self
                .phi_gen(rule.greater())
                .mul(self.phi_gen(rule.lesser()), &self.algebra);
            let rhs = self.phi(rule.rhs());
            let key = format!(
                "bimodule rule {} {}",
                self.algebra.name(rule.greater()),
                self.algebra.name(rule.lesser())
            );
            let mut bad = Vec::new();
            for r in 0..self.rank() {
                for c in 0..self.rank() {
                    let diff = rhs.at(r, c).sub(lhs.at(r, c));
                    if !diff.is_zero() {
                        bad.push(format!(
                            "entry ({}, {}): {}",
                            self.basis_names[r],
                            self.basis_names[c],
                            crate::model::emit::emit_alg(&self.algebra, &diff)
                        ));
                    }
                }
            }
            if bad.is_empty() {
                report.push(key, Status::Pass, String::new());
            } else {
                report.push(key, Status::Fail, bad.join("; "));
            }
        }
        report
    }

    /// The mirror presentation over the opposite algebra: entries are
    /// translated by word reversal and the matrix is transposed, which
    /// keeps the extension multiplicative. Swaps the side marker;
    /// mirroring twice restores the original.
    pub fn mirror(&self) -> Result<Self> {
        let mirrored = self.algebra.mirror()?;
        let rank = self.rank();
        let mut phi = Vec::with_capacity(self.phi.len());
        for m in &self.phi {
            let mut out = Matrix::zero(rank);
            for r in 0..rank {
                for c in 0..rank {
                    *out.at_mut(c, r) = mirrored.op_image(m.at(r, c));
                }
            }
            phi.push(out);
        }
        let side = match self.side {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        };
        BimodulePresentation::with_side(mirrored, self.basis_names.clone(), phi, side)
    }
}

impl Matrix {
    fn scale_by_element(&self, f: &AlgElement) -> Matrix {
        // Left-multiplies every entry by `f` in the free algebra; used
        // only with diagonal identity matrices where order is immaterial.
        Matrix {
            rank: self.rank,
            entries: self.entries.iter().map(|e| f.free_mul(e)).collect(),
        }
    }
}
