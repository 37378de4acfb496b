//! Duals of free finitely generated bimodules: the canonical pairing,
//! transpose multiplications, the embedding into the double dual, and
//! the mirrored left-dual constructions.

use std::collections::BTreeMap;

use crate::algebra::{AlgElement, AlgebraPresentation, Scalar};
use crate::bimodule::{BasisId, BimElement, BimodulePresentation};
use crate::error::Result;

/// An element of the right dual, written on the dual basis with the
/// coefficients on the left: `X = Σ f_i . e^i` where `⟨e^i, e_j⟩ = δ_ij`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DualElement {
    components: BTreeMap<BasisId, AlgElement>,
}

impl DualElement {
    pub fn zero() -> Self {
        DualElement::default()
    }

    pub fn basis(i: BasisId) -> Self {
        DualElement::from_component(i, AlgElement::unit())
    }

    pub fn from_component(i: BasisId, f: AlgElement) -> Self {
        let mut x = DualElement::zero();
        x.add_component(i, f);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, i: BasisId) -> AlgElement {
        self.components.get(&i).cloned().unwrap_or_default()
    }

    pub fn components(&self) -> impl Iterator<Item = (BasisId, &AlgElement)> {
        self.components.iter().map(|(&i, f)| (i, f))
    }

    pub fn add_component(&mut self, i: BasisId, f: AlgElement) {
        if f.is_zero() {
            return;
        }
        match self.components.entry(i) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().add(&f);
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
        for (i, f) in other.components() {
            out.add_component(i, f.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, f) in other.components() {
            out.add_component(i, f.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = DualElement::zero();
        for (i, f) in self.components() {
            out.add_component(i, f.scale(c));
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.components.values().map(AlgElement::degree).max().unwrap_or(0)
    }

    pub fn max_basis(&self) -> Option<BasisId> {
        self.components.keys().copied().max()
    }
}

/// The canonical pairing `⟨Σ f_i . e^i, Σ e_j . a_j⟩ = Σ f_i a_i`,
/// normalized in the algebra.
pub fn pair(m: &BimodulePresentation, x_dual: &DualElement, x: &BimElement) -> AlgElement {
    let p = m.algebra();
    let mut out = AlgElement::zero();
    for (i, f) in x_dual.components() {
        let a = x.component(i);
        if !a.is_zero() {
            out = out.add(&p.mul(f, &a));
        }
    }
    p.nf(&out)
}

/// Transpose right multiplication on the dual: `⟨X.f, x⟩ = ⟨X, f.x⟩`,
/// concretely `e^i . f = Σ_k Φ_ik(f) . e^k`.
pub fn dual_right_mul(m: &BimodulePresentation, x_dual: &DualElement, f: &AlgElement) -> DualElement {
    let p = m.algebra();
    let phi = m.phi(&p.nf(f));
    let mut out = DualElement::zero();
    for (i, g) in x_dual.components() {
        for k in 0..m.rank() {
            let entry = phi.at(i.0, k);
            if !entry.is_zero() {
                out.add_component(BasisId(k), p.mul(g, entry));
            }
        }
    }
    out
}

/// Free left multiplication on the dual: component-wise left product.
pub fn dual_left_mul(m: &BimodulePresentation, f: &AlgElement, x_dual: &DualElement) -> DualElement {
    let p = m.algebra();
    let mut out = DualElement::zero();
    for (i, g) in x_dual.components() {
        out.add_component(i, p.mul(f, g));
    }
    out
}

/// An element of the double dual. For a free finitely generated bimodule
/// the left dual of the right dual is right-free on a basis identified
/// with the original one, so the component map carries over unchanged
/// and both multiplications act exactly as on the original module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualDualElement(BimElement);

impl DualDualElement {
    pub fn components(&self) -> &BimElement {
        &self.0
    }

    pub fn into_components(self) -> BimElement {
        self.0
    }
}

/// The canonical map into the double dual: `⟨X, x̃⟩ = ⟨X, x⟩`. In the
/// free representation it preserves the component map.
pub fn canonical_embed(x: &BimElement) -> DualDualElement {
    DualDualElement(x.clone())
}

/// Evaluate a dual element on a double-dual element.
pub fn pair_dual_dual(
    m: &BimodulePresentation,
    x_dual: &DualElement,
    xx: &DualDualElement,
) -> AlgElement {
    pair(m, x_dual, &xx.0)
}

/// Left and right multiplication on the double dual; the structure
/// homomorphism of the double dual coincides with the original one.
pub fn dual_dual_left_mul(
    m: &BimodulePresentation,
    f: &AlgElement,
    xx: &DualDualElement,
) -> DualDualElement {
    DualDualElement(m.left_mul(f, &xx.0))
}

pub fn dual_dual_right_mul(
    m: &BimodulePresentation,
    xx: &DualDualElement,
    f: &AlgElement,
) -> DualDualElement {
    DualDualElement(m.right_mul(&xx.0, f))
}

/// The mirrored world of a right-presented bimodule: the stage for every
/// left-handed construction.
///
/// Over the mirror algebra, the module elements keep their component
/// maps but are read with the coefficients on the other side; the
/// translation between the worlds is entry-wise word reversal. Module
/// elements here carry left coefficients (`Σ f'_i ∘ e_i`), dual elements
/// carry right coefficients (`Σ e^i ∘ b'_i`), and the eight mirrored
/// pairing laws hold for the operations below.
pub struct MirrorWorld<'a> {
    module: &'a BimodulePresentation,
    algebra: AlgebraPresentation,
}

impl<'a> MirrorWorld<'a> {
    /// Fails when the underlying algebra has no mirror presentation.
    pub fn new(module: &'a BimodulePresentation) -> Result<Self> {
        let algebra = module.algebra().mirror()?;
        Ok(MirrorWorld { module, algebra })
    }

    pub fn module(&self) -> &BimodulePresentation {
        self.module
    }

    /// The mirror algebra everything in this world lives over.
    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    /// Translate an algebra element out of the original world.
    pub fn op(&self, f: &AlgElement) -> AlgElement {
        self.algebra.op_image(f)
    }

    /// Translate an algebra element back into the original world.
    pub fn op_inv(&self, f: &AlgElement) -> AlgElement {
        self.module.algebra().op_image(f)
    }

    /// Module elements translate component-wise.
    pub fn to_mirror_module(&self, x: &BimElement) -> BimElement {
        let mut out = BimElement::zero();
        for (i, a) in x.components() {
            out.add_component(i, self.op(a));
        }
        out
    }

    pub fn from_mirror_module(&self, x: &BimElement) -> BimElement {
        let mut out = BimElement::zero();
        for (i, a) in x.components() {
            out.add_component(i, self.op_inv(a));
        }
        out
    }

    /// Dual elements translate component-wise as well.
    pub fn to_mirror_dual(&self, x: &DualElement) -> DualElement {
        let mut out = DualElement::zero();
        for (i, f) in x.components() {
            out.add_component(i, self.op(f));
        }
        out
    }

    pub fn from_mirror_dual(&self, x: &DualElement) -> DualElement {
        let mut out = DualElement::zero();
        for (i, f) in x.components() {
            out.add_component(i, self.op_inv(f));
        }
        out
    }

    /// The mirrored pairing `⟨x, X⟩`, defined through the original one.
    pub fn pair(&self, x: &BimElement, x_dual: &DualElement) -> AlgElement {
        self.op(&pair(
            self.module,
            &self.from_mirror_dual(x_dual),
            &self.from_mirror_module(x),
        ))
    }

    /// Free left multiplication on mirrored module elements.
    pub fn module_left_mul(&self, f: &AlgElement, x: &BimElement) -> BimElement {
        let mut out = BimElement::zero();
        for (i, a) in x.components() {
            out.add_component(i, self.algebra.mul(f, a));
        }
        out
    }

    /// Twisted right multiplication on mirrored module elements: the
    /// image of the original left action.
    pub fn module_right_mul(&self, x: &BimElement, f: &AlgElement) -> BimElement {
        self.to_mirror_module(
            &self
                .module
                .left_mul(&self.op_inv(f), &self.from_mirror_module(x)),
        )
    }

    /// Free right multiplication on mirrored dual elements.
    pub fn dual_right_mul(&self, x_dual: &DualElement, f: &AlgElement) -> DualElement {
        let mut out = DualElement::zero();
        for (i, g) in x_dual.components() {
            out.add_component(i, self.algebra.mul(g, f));
        }
        out
    }

    /// Twisted left multiplication on mirrored dual elements: the image
    /// of the original transpose right multiplication.
    pub fn dual_left_mul(&self, f: &AlgElement, x_dual: &DualElement) -> DualElement {
        self.to_mirror_dual(&dual_right_mul(
            self.module,
            &self.from_mirror_dual(x_dual),
            &self.op_inv(f),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, GenId};
    use crate::fixtures;

    fn dx() -> BasisId {
        BasisId(0)
    }

    fn dy() -> BasisId {
        BasisId(1)
    }

    fn x() -> AlgElement {
        AlgElement::from_gen(GenId(0))
    }

    fn y() -> AlgElement {
        AlgElement::from_gen(GenId(1))
    }

    #[test]
    fn dual_basis_pairing() {
        let m = fixtures::qplane2().bimodule().clone();
        assert_eq!(
            pair(&m, &DualElement::basis(dx()), &BimElement::basis(dx())),
            AlgElement::unit()
        );
        assert!(pair(&m, &DualElement::basis(dx()), &BimElement::basis(dy())).is_zero());
        // ⟨2.e^dx, e_dx . x⟩ = 2x by bilinearity.
        let two_dx = DualElement::basis(dx()).scale(&int(2));
        let e_dx_x = m.right_mul(&BimElement::basis(dx()), &x());
        assert_eq!(pair(&m, &two_dx, &e_dx_x), x().scale(&int(2)));
    }

    #[test]
    fn transpose_right_multiplication_rows() {
        let m = fixtures::qplane2().bimodule().clone();
        // e^dx . x = 4x . e^dx + 3y . e^dy (row dx of Φ(x)).
        let got = dual_right_mul(&m, &DualElement::basis(dx()), &x());
        let mut expected = DualElement::from_component(dx(), x().scale(&int(4)));
        expected.add_component(dy(), y().scale(&int(3)));
        assert_eq!(got, expected);
        // e^dx . y = 8y . e^dx (row dx of Φ(y)).
        let got = dual_right_mul(&m, &DualElement::basis(dx()), &y());
        assert_eq!(got, DualElement::from_component(dx(), y().scale(&int(8))));
        for seed in 0..20 {
            let xd = fixtures::random_dual_element(&m, 3, seed);
            assert_eq!(dual_right_mul(&m, &xd, &AlgElement::unit()), xd);
        }
    }

    #[test]
    fn transpose_law_on_the_basis() {
        // ⟨e^dx . y, e_dx⟩ computed both ways equals 8y.
        let m = fixtures::qplane2().bimodule().clone();
        let lhs = pair(
            &m,
            &dual_right_mul(&m, &DualElement::basis(dx()), &y()),
            &BimElement::basis(dx()),
        );
        let rhs = pair(
            &m,
            &DualElement::basis(dx()),
            &m.left_mul(&y(), &BimElement::basis(dx())),
        );
        assert_eq!(lhs, y().scale(&int(8)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn free_left_multiplication() {
        let m = fixtures::qplane2().bimodule().clone();
        let got = dual_left_mul(&m, &x(), &DualElement::basis(dx()));
        assert_eq!(got, DualElement::from_component(dx(), x()));
        // (y x) . e^dy normalizes the coefficient to 2xy.
        let yx = y().free_mul(&x());
        let got = dual_left_mul(&m, &yx, &DualElement::basis(dy()));
        let xy2 = m.algebra().mul(&y(), &x());
        assert_eq!(got, DualElement::from_component(dy(), xy2));
        for seed in 0..20 {
            let xd = fixtures::random_dual_element(&m, 3, seed);
            assert_eq!(dual_left_mul(&m, &AlgElement::unit(), &xd), xd);
        }
    }

    #[test]
    fn embedding_preserves_components_and_pairings() {
        let m = fixtures::qplane2().bimodule().clone();
        let embedded = canonical_embed(&BimElement::basis(dx()));
        assert_eq!(embedded.components(), &BimElement::basis(dx()));
        for seed in 0..50 {
            let v = fixtures::random_bim_element(&m, 3, seed);
            let xd = fixtures::random_dual_element(&m, 3, seed + 9000);
            let tilde = canonical_embed(&v);
            assert_eq!(tilde.components(), &v);
            assert_eq!(pair_dual_dual(&m, &xd, &tilde), pair(&m, &xd, &v));
        }
    }

    #[test]
    fn embedding_respects_both_multiplications() {
        let m = fixtures::qplane2().bimodule().clone();
        for seed in 0..100 {
            let v = fixtures::random_bim_element(&m, 2, seed);
            let f = m.algebra().random_element(2, seed + 3000);
            let xd = fixtures::random_dual_element(&m, 2, seed + 6000);
            // f . x̃ evaluated against X equals ⟨X . f, x⟩.
            let lhs = pair_dual_dual(&m, &xd, &dual_dual_left_mul(&m, &f, &canonical_embed(&v)));
            let rhs = pair(&m, &dual_right_mul(&m, &xd, &f), &v);
            assert_eq!(lhs, rhs);
            // x̃ . f evaluated against X equals ⟨X, x⟩ f.
            let lhs = pair_dual_dual(&m, &xd, &dual_dual_right_mul(&m, &canonical_embed(&v), &f));
            let rhs = m.algebra().mul(&pair(&m, &xd, &v), &f);
            assert_eq!(lhs, rhs);
            // Additivity.
            let w = fixtures::random_bim_element(&m, 2, seed + 12000);
            assert_eq!(
                canonical_embed(&v.add(&w)).components().clone(),
                canonical_embed(&v)
                    .components()
                    .add(canonical_embed(&w).components())
            );
        }
    }

    #[test]
    fn mirrored_pairing_agrees_on_the_commutative_fixture() {
        let m = fixtures::poly2().bimodule().clone();
        let world = MirrorWorld::new(&m).unwrap();
        assert_eq!(world.algebra(), m.algebra());
        for seed in 0..50 {
            let v = fixtures::random_bim_element(&m, 3, seed);
            let xd = fixtures::random_dual_element(&m, 3, seed + 4000);
            // Identified elements pair the same through either dual.
            assert_eq!(world.pair(&v, &xd), pair(&m, &xd, &v));
        }
    }

    #[test]
    fn mirrored_transpose_law() {
        let m = fixtures::qplane2().bimodule().clone();
        let world = MirrorWorld::new(&m).unwrap();
        for seed in 0..50 {
            let v = fixtures::random_bim_element(&m, 2, seed);
            let v = world.to_mirror_module(&v);
            let xd = fixtures::random_dual_element(&m, 2, seed + 4000);
            let xd = world.to_mirror_dual(&xd);
            let f = world.algebra().random_element(2, seed + 8000);
            // ⟨x . f, X⟩ = ⟨x, f . X⟩ in the mirrored world.
            let lhs = world.pair(&world.module_right_mul(&v, &f), &xd);
            let rhs = world.pair(&v, &world.dual_left_mul(&f, &xd));
            assert_eq!(lhs, rhs);
        }
    }
}
