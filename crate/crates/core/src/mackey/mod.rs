//! `C_p`-Mackey functors given by their Lewis diagram: a top group `M(*)`, a
//! bottom group `M(C_p)` with a `C_p`-action, restriction and transfer.

mod box_product;
mod constructions;
mod morphism;

pub use box_product::{
    box_product, box_product_in_order, burnside_unit_morphism, constant_square_morphism, permutation_product_morphism,
    twisted_product_morphism, BoxLayout, RelationOrder,
};
pub use constructions::{
    burnside, constant_z, fixed_point, gset_product, orbit, permutation, twisted_burnside, zero, CpModule, GSet,
};
pub use morphism::{MackeyMorphism, MorphismReport, MorphismViolation};

use std::fmt;

use crate::abgroup::{AbGroup, AbHom, Invariants};
use crate::error::{Error, Result};
use crate::intlin::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn order(self) -> usize {
        usize::try_from(self.0).expect("prime fits in usize")
    }

    pub fn as_scalar<T: Scalar>(self) -> T {
        T::from_u64_exact(self.0)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MackeyFunctor<T> {
    p: Prime,
    top: AbGroup<T>,
    bottom: AbGroup<T>,
    action: Matrix<T>,
    res: Matrix<T>,
    tr: Matrix<T>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Structure {
    Action,
    Restriction,
    Transfer,
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Structure::Action => "action",
            Structure::Restriction => "res",
            Structure::Transfer => "tr",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxiomViolation {
    IllDefined(Structure),
    /// γ^p ≠ 1
    ActionOrder,
    /// γ · res(x) ≠ res(x)
    RestrictionNotFixed,
    /// tr(γ · y) ≠ tr(y)
    TransferNotInvariant,
    /// res tr(y) ≠ Σ γⁱ · y
    RestrictionOfTransfer,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::IllDefined(s) => write!(f, "{s} is not well-defined"),
            AxiomViolation::ActionOrder => write!(f, "action does not satisfy gamma^p = 1"),
            AxiomViolation::RestrictionNotFixed => write!(f, "gamma . res(x) != res(x)"),
            AxiomViolation::TransferNotInvariant => write!(f, "tr(gamma . y) != tr(y)"),
            AxiomViolation::RestrictionOfTransfer => write!(f, "res(tr(y)) != sum of gamma^i . y"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "pass");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "fail: {}", parts.join("; "))
    }
}

impl<T: Scalar> MackeyFunctor<T> {
    /// Assembles a functor from its Lewis diagram. Only shapes are checked here;
    /// see [`MackeyFunctor::check_axioms`] for the algebraic conditions.
    pub fn new(
        p: Prime,
        top: AbGroup<T>,
        bottom: AbGroup<T>,
        action: Matrix<T>,
        res: Matrix<T>,
        tr: Matrix<T>,
    ) -> Result<Self> {
        let (t, b) = (top.ngens(), bottom.ngens());
        for (what, m, expected) in [("action", &action, (b, b)), ("res", &res, (b, t)), ("tr", &tr, (t, b))] {
            if m.shape() != expected {
                return Err(Error::Dimension { what: what.into(), expected, found: m.shape() });
            }
        }
        Ok(MackeyFunctor { p, top, bottom, action, res, tr })
    }

    /// Like [`MackeyFunctor::new`], but rejects anything failing [`MackeyFunctor::check_axioms`].
    pub fn new_checked(
        p: Prime,
        top: AbGroup<T>,
        bottom: AbGroup<T>,
        action: Matrix<T>,
        res: Matrix<T>,
        tr: Matrix<T>,
    ) -> Result<Self> {
        let m = Self::new(p, top, bottom, action, res, tr)?;
        let report = m.check_axioms();
        if report.passed() {
            Ok(m)
        } else {
            Err(Error::AxiomViolation(report.to_string()))
        }
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn top(&self) -> &AbGroup<T> {
        &self.top
    }

    pub fn bottom(&self) -> &AbGroup<T> {
        &self.bottom
    }

    pub fn action(&self) -> &Matrix<T> {
        &self.action
    }

    pub fn res(&self) -> &Matrix<T> {
        &self.res
    }

    pub fn tr(&self) -> &Matrix<T> {
        &self.tr
    }

    pub fn action_hom(&self) -> AbHom<T> {
        AbHom::from_parts(self.bottom.clone(), self.bottom.clone(), self.action.clone())
    }

    pub fn res_hom(&self) -> AbHom<T> {
        AbHom::from_parts(self.top.clone(), self.bottom.clone(), self.res.clone())
    }

    pub fn tr_hom(&self) -> AbHom<T> {
        AbHom::from_parts(self.bottom.clone(), self.top.clone(), self.tr.clone())
    }

    /// `Σ_{i<p} γⁱ` on the bottom tier.
    pub fn norm(&self) -> Matrix<T> {
        self.action.power_sum(self.p.order())
    }

    pub fn has_trivial_action(&self) -> bool {
        self.bottom.kills_columns(&self.action.sub(&Matrix::identity(self.bottom.ngens())))
    }

    pub fn tier_invariants(&self) -> (Invariants<T>, Invariants<T>) {
        (self.top.invariant_factors(), self.bottom.invariant_factors())
    }

    pub fn is_zero(&self) -> bool {
        self.top.is_trivial() && self.bottom.is_trivial()
    }

    pub fn well_definedness_failures(&self) -> Vec<Structure> {
        let mut out = Vec::new();
        if !self.action_hom().is_well_defined() {
            out.push(Structure::Action);
        }
        if !self.res_hom().is_well_defined() {
            out.push(Structure::Restriction);
        }
        if !self.tr_hom().is_well_defined() {
            out.push(Structure::Transfer);
        }
        out
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let mut violations: Vec<AxiomViolation> =
            self.well_definedness_failures().into_iter().map(AxiomViolation::IllDefined).collect();
        let nb = self.bottom.ngens();
        let id_b = Matrix::identity(nb);
        if !self.bottom.kills_columns(&self.action.pow(self.p.order()).sub(&id_b)) {
            violations.push(AxiomViolation::ActionOrder);
        }
        if !self.bottom.kills_columns(&self.action.mul(&self.res).sub(&self.res)) {
            violations.push(AxiomViolation::RestrictionNotFixed);
        }
        if !self.top.kills_columns(&self.tr.mul(&self.action).sub(&self.tr)) {
            violations.push(AxiomViolation::TransferNotInvariant);
        }
        if !self.bottom.kills_columns(&self.res.mul(&self.tr).sub(&self.norm())) {
            violations.push(AxiomViolation::RestrictionOfTransfer);
        }
        AxiomReport { violations }
    }

    /// An isomorphic functor on canonical presentations of both tiers, with the
    /// isomorphism from `self`.
    pub fn simplified(&self) -> (MackeyFunctor<T>, MackeyMorphism<T>) {
        let dt = self.top.decompose();
        let db = self.bottom.decompose();
        let to_t = &dt.to_canonical.matrix;
        let from_t = &dt.from_canonical.matrix;
        let to_b = &db.to_canonical.matrix;
        let from_b = &db.from_canonical.matrix;
        let simple = MackeyFunctor {
            p: self.p,
            action: reduce_columns(&db.canonical, to_b.mul(&self.action).mul(from_b)),
            res: reduce_columns(&db.canonical, to_b.mul(&self.res).mul(from_t)),
            tr: reduce_columns(&dt.canonical, to_t.mul(&self.tr).mul(from_b)),
            top: dt.canonical,
            bottom: db.canonical,
        };
        let iso = MackeyMorphism::from_parts(self.clone(), simple.clone(), to_t.clone(), to_b.clone());
        (simple, iso)
    }
}

/// Reduces each entry of a matrix whose rows index the generators of a
/// canonical (diagonal) group modulo the corresponding cyclic order.
fn reduce_columns<T: Scalar>(canonical: &AbGroup<T>, mut m: Matrix<T>) -> Matrix<T> {
    let rel = canonical.relations();
    for j in 0..rel.cols() {
        let Some(i) = (0..rel.rows()).find(|&i| !rel[(i, j)].is_zero()) else { continue };
        let d = rel[(i, j)].abs();
        for c in 0..m.cols() {
            m[(i, c)] = m[(i, c)].mod_floor(&d);
        }
    }
    m
}
