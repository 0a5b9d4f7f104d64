use std::fmt;

use crate::abgroup::AbHom;
use crate::error::{Error, Result};
use crate::intlin::Matrix;
use crate::scalar::Scalar;

use super::MackeyFunctor;

/// A pair of tier maps `top: M(*) → N(*)`, `bottom: M(C_p) → N(C_p)`.
#[derive(Clone, Debug)]
pub struct MackeyMorphism<T> {
    pub source: MackeyFunctor<T>,
    pub target: MackeyFunctor<T>,
    pub top: Matrix<T>,
    pub bottom: Matrix<T>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MorphismViolation {
    PrimeMismatch,
    TopIllDefined,
    BottomIllDefined,
    NotEquivariant,
    RestrictionSquare,
    TransferSquare,
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MorphismViolation::PrimeMismatch => "source and target use different primes",
            MorphismViolation::TopIllDefined => "top map is not well-defined",
            MorphismViolation::BottomIllDefined => "bottom map is not well-defined",
            MorphismViolation::NotEquivariant => "bottom map does not commute with the action",
            MorphismViolation::RestrictionSquare => "res . phi_top != phi_bottom . res",
            MorphismViolation::TransferSquare => "tr . phi_bottom != phi_top . tr",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MorphismReport {
    pub violations: Vec<MorphismViolation>,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<T: Scalar> MackeyMorphism<T> {
    pub fn new(source: MackeyFunctor<T>, target: MackeyFunctor<T>, top: Matrix<T>, bottom: Matrix<T>) -> Result<Self> {
        let expected_top = (target.top().ngens(), source.top().ngens());
        if top.shape() != expected_top {
            return Err(Error::Dimension { what: "top map".into(), expected: expected_top, found: top.shape() });
        }
        let expected_bottom = (target.bottom().ngens(), source.bottom().ngens());
        if bottom.shape() != expected_bottom {
            return Err(Error::Dimension { what: "bottom map".into(), expected: expected_bottom, found: bottom.shape() });
        }
        Ok(MackeyMorphism { source, target, top, bottom })
    }

    pub(crate) fn from_parts(source: MackeyFunctor<T>, target: MackeyFunctor<T>, top: Matrix<T>, bottom: Matrix<T>) -> Self {
        debug_assert_eq!(top.shape(), (target.top().ngens(), source.top().ngens()));
        debug_assert_eq!(bottom.shape(), (target.bottom().ngens(), source.bottom().ngens()));
        MackeyMorphism { source, target, top, bottom }
    }

    pub fn identity(m: &MackeyFunctor<T>) -> Self {
        Self::from_parts(
            m.clone(),
            m.clone(),
            Matrix::identity(m.top().ngens()),
            Matrix::identity(m.bottom().ngens()),
        )
    }

    pub fn top_hom(&self) -> AbHom<T> {
        AbHom::from_parts(self.source.top().clone(), self.target.top().clone(), self.top.clone())
    }

    pub fn bottom_hom(&self) -> AbHom<T> {
        AbHom::from_parts(self.source.bottom().clone(), self.target.bottom().clone(), self.bottom.clone())
    }

    /// Checks well-definedness, equivariance and both commuting squares.
    pub fn verify(&self) -> MorphismReport {
        let (s, t) = (&self.source, &self.target);
        let mut violations = Vec::new();
        if s.p() != t.p() {
            violations.push(MorphismViolation::PrimeMismatch);
        }
        if !self.top_hom().is_well_defined() {
            violations.push(MorphismViolation::TopIllDefined);
        }
        if !self.bottom_hom().is_well_defined() {
            violations.push(MorphismViolation::BottomIllDefined);
        }
        let equivariance = t.action().mul(&self.bottom).sub(&self.bottom.mul(s.action()));
        if !t.bottom().kills_columns(&equivariance) {
            violations.push(MorphismViolation::NotEquivariant);
        }
        let res_square = t.res().mul(&self.top).sub(&self.bottom.mul(s.res()));
        if !t.bottom().kills_columns(&res_square) {
            violations.push(MorphismViolation::RestrictionSquare);
        }
        let tr_square = t.tr().mul(&self.bottom).sub(&self.top.mul(s.tr()));
        if !t.top().kills_columns(&tr_square) {
            violations.push(MorphismViolation::TransferSquare);
        }
        MorphismReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.verify().passed()
    }

    /// A valid morphism whose tier maps are both group isomorphisms.
    pub fn is_isomorphism(&self) -> bool {
        self.is_valid() && self.top_hom().is_isomorphism() && self.bottom_hom().is_isomorphism()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MackeyMorphism<T>) -> MackeyMorphism<T> {
        Self::from_parts(
            inner.source.clone(),
            self.target.clone(),
            self.top.mul(&inner.top),
            self.bottom.mul(&inner.bottom),
        )
    }

    pub fn inverse(&self) -> Option<MackeyMorphism<T>> {
        let top = self.top_hom().inverse()?;
        let bottom = self.bottom_hom().inverse()?;
        Some(Self::from_parts(self.target.clone(), self.source.clone(), top.matrix, bottom.matrix))
    }
}
