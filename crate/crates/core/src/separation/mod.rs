//! Isotropy separation `0 → Γ(M) → M → Φ(M) → 0` and the classification of
//! invertible `C_p`-Mackey functors.

mod classify;
mod iso;

pub use classify::{
    classify_invertible, invert, twisted_form, ClassificationResult, Inverse, NotInvertibleReason, TwistedForm, Verdict,
};
pub use iso::{search_isomorphism, try_find_isomorphism, twisted_iso_criterion, twisted_isomorphism, IsoOutcome, NonIsoReason};

use crate::abgroup::AbGroup;
use crate::intlin::Matrix;
use crate::mackey::{MackeyFunctor, MackeyMorphism};
use crate::scalar::Scalar;

/// `Γ(M)`: top is the image of `tr`, presented on the generators `tr(bⱼ)`,
/// with the inclusion into `M`.
pub fn gamma_functor<T: Scalar>(m: &MackeyFunctor<T>) -> (MackeyFunctor<T>, MackeyMorphism<T>) {
    let nb = m.bottom().ngens();
    let lifted = m.tr_hom().lifted_kernel();
    let top = AbGroup::new(nb, lifted.basis().clone()).expect("lattice lives in Z^nb");
    let gamma = MackeyFunctor::new(m.p(), top, m.bottom().clone(), m.action().clone(), m.norm(), Matrix::identity(nb))
        .expect("shapes agree by construction");
    let inclusion = MackeyMorphism::new(gamma.clone(), m.clone(), m.tr().clone(), Matrix::identity(nb))
        .expect("shapes agree by construction");
    (gamma, inclusion)
}

/// `Φ(M)`: top is the cokernel of `tr`, bottom is trivial; with the projection from `M`.
pub fn phi_functor<T: Scalar>(m: &MackeyFunctor<T>) -> (MackeyFunctor<T>, MackeyMorphism<T>) {
    let (top, _) = m.top().quotient_by_columns(m.tr());
    let mt = top.ngens();
    let phi = MackeyFunctor::new(
        m.p(),
        top,
        AbGroup::trivial(),
        Matrix::zeros(0, 0),
        Matrix::zeros(0, mt),
        Matrix::zeros(mt, 0),
    )
    .expect("shapes agree by construction");
    let projection = MackeyMorphism::new(m.clone(), phi.clone(), Matrix::identity(mt), Matrix::zeros(0, m.bottom().ngens()))
        .expect("shapes agree by construction");
    (phi, projection)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Exactness {
    pub inclusion_valid: bool,
    pub projection_valid: bool,
    pub injective: bool,
    pub surjective: bool,
    pub exact_top: bool,
    pub exact_bottom: bool,
}

impl Exactness {
    pub fn is_exact(&self) -> bool {
        self.inclusion_valid
            && self.projection_valid
            && self.injective
            && self.surjective
            && self.exact_top
            && self.exact_bottom
    }
}

#[derive(Clone, Debug)]
pub struct IsotropySequence<T> {
    pub gamma_part: MackeyFunctor<T>,
    pub inclusion: MackeyMorphism<T>,
    pub original: MackeyFunctor<T>,
    pub projection: MackeyMorphism<T>,
    pub phi_part: MackeyFunctor<T>,
    pub exactness: Exactness,
}

impl<T> IsotropySequence<T> {
    pub fn is_exact(&self) -> bool {
        self.exactness.is_exact()
    }
}

pub fn isotropy_sequence<T: Scalar>(m: &MackeyFunctor<T>) -> IsotropySequence<T> {
    let (gamma_part, inclusion) = gamma_functor(m);
    let (phi_part, projection) = phi_functor(m);
    let exactness = Exactness {
        inclusion_valid: inclusion.is_valid(),
        projection_valid: projection.is_valid(),
        injective: inclusion.top_hom().is_injective() && inclusion.bottom_hom().is_injective(),
        surjective: projection.top_hom().is_surjective() && projection.bottom_hom().is_surjective(),
        exact_top: inclusion.top_hom().lifted_image() == projection.top_hom().lifted_kernel(),
        exact_bottom: inclusion.bottom_hom().lifted_image() == projection.bottom_hom().lifted_kernel(),
    };
    IsotropySequence { gamma_part, inclusion, original: m.clone(), projection, phi_part, exactness }
}

/// Whether `M → Φ(M)` is an isomorphism.
pub fn is_geometric<T: Scalar>(m: &MackeyFunctor<T>) -> bool {
    phi_functor(m).1.is_isomorphism()
}
