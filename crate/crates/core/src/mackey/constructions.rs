//! Standard `C_p`-Mackey functors.

use crate::abgroup::{coinvariants, AbGroup, AbHom};
use crate::error::{Error, Result};
use crate::intlin::{Lattice, Matrix};
use crate::scalar::Scalar;

use super::{MackeyFunctor, Prime};

/// A finitely presented abelian group with a `C_p`-action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CpModule<T> {
    pub group: AbGroup<T>,
    pub action: Matrix<T>,
}

impl<T: Scalar> CpModule<T> {
    /// Fails unless `action` is a well-defined endomorphism with `action^p = 1`.
    pub fn new(p: Prime, group: AbGroup<T>, action: Matrix<T>) -> Result<Self> {
        let n = group.ngens();
        if action.shape() != (n, n) {
            return Err(Error::Dimension { what: "action".into(), expected: (n, n), found: action.shape() });
        }
        let hom = AbHom::from_parts(group.clone(), group.clone(), action.clone());
        crate::abgroup::check_action(&group, &hom, p.get())?;
        Ok(CpModule { group, action })
    }

    pub fn trivial_action(group: AbGroup<T>) -> Self {
        let n = group.ngens();
        CpModule { group, action: Matrix::identity(n) }
    }

    /// `Z^(fixed + p·free)` permuted by `γ`: fixed generators first, then one
    /// block of `p` generators per free orbit with `γ eᵢ = e_{i+1 mod p}`.
    pub fn permutation(p: Prime, s: GSet) -> Self {
        let order = p.order();
        let n = s.fixed + order * s.free;
        let mut action = Matrix::zeros(n, n);
        for i in 0..s.fixed {
            action[(i, i)] = T::one();
        }
        for b in 0..s.free {
            let base = s.fixed + b * order;
            for r in 0..order {
                action[(base + (r + 1) % order, base + r)] = T::one();
            }
        }
        CpModule { group: AbGroup::free(n), action }
    }
}

/// A finite `C_p`-set, up to isomorphism: counts of fixed points and free orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct GSet {
    pub fixed: usize,
    pub free: usize,
}

impl GSet {
    pub fn new(fixed: usize, free: usize) -> Self {
        GSet { fixed, free }
    }

    pub fn cardinality(&self, p: Prime) -> usize {
        self.fixed + p.order() * self.free
    }
}

/// Orbit decomposition of the cartesian product `s × t`.
pub fn gset_product(p: Prime, s: GSet, t: GSet) -> GSet {
    GSet {
        fixed: s.fixed * t.fixed,
        free: s.fixed * t.free + t.fixed * s.free + p.order() * s.free * t.free,
    }
}

/// The twisted Burnside functor: top `Z⟨1, [C_p]⟩`, bottom `Z`, `res = (d, p)`, `tr(1) = [C_p]`.
pub fn twisted_burnside<T: Scalar>(p: Prime, d: T) -> MackeyFunctor<T> {
    MackeyFunctor::new(
        p,
        AbGroup::free(2),
        AbGroup::free(1),
        Matrix::identity(1),
        Matrix::from_vec(1, 2, vec![d, p.as_scalar()]),
        Matrix::from_vec(2, 1, vec![T::zero(), T::one()]),
    )
    .expect("shapes are fixed")
}

pub fn burnside<T: Scalar>(p: Prime) -> MackeyFunctor<T> {
    twisted_burnside(p, T::one())
}

/// Constant functor `Z`: restriction 1, transfer p.
pub fn constant_z<T: Scalar>(p: Prime) -> MackeyFunctor<T> {
    MackeyFunctor::new(
        p,
        AbGroup::free(1),
        AbGroup::free(1),
        Matrix::identity(1),
        Matrix::identity(1),
        Matrix::scalar(1, p.as_scalar()),
    )
    .expect("shapes are fixed")
}

pub fn zero<T: Scalar>(p: Prime) -> MackeyFunctor<T> {
    MackeyFunctor::new(
        p,
        AbGroup::trivial(),
        AbGroup::trivial(),
        Matrix::zeros(0, 0),
        Matrix::zeros(0, 0),
        Matrix::zeros(0, 0),
    )
    .expect("shapes are fixed")
}

/// Fixed-point functor: top is `M^{C_p}`, presented on a Hermite basis of the
/// lattice `{x : γx - x ∈ L}`; `res` is the inclusion, `tr` the norm map.
pub fn fixed_point<T: Scalar>(p: Prime, module: &CpModule<T>) -> MackeyFunctor<T> {
    let n = module.group.ngens();
    let moved = AbHom::from_parts(
        module.group.clone(),
        module.group.clone(),
        module.action.sub(&Matrix::identity(n)),
    );
    let kc = moved.kernel_and_cokernel();
    let inclusion = kc.kernel_inclusion.matrix;
    let fixed = Lattice::spanned_by(&inclusion);
    let norm = module.action.power_sum(p.order());
    let tr_cols: Vec<Vec<T>> = norm
        .columns()
        .iter()
        .map(|c| fixed.coordinates(c).expect("norm elements are fixed"))
        .collect();
    let tr = Matrix::from_columns(inclusion.cols(), &tr_cols);
    MackeyFunctor::new(p, kc.kernel, module.group.clone(), module.action.clone(), inclusion, tr)
        .expect("shapes agree by construction")
}

/// Orbit functor: top is the coinvariants `M_{C_p}`, `tr` the projection and
/// `res` the map induced by the norm on representatives.
pub fn orbit<T: Scalar>(p: Prime, module: &CpModule<T>) -> MackeyFunctor<T> {
    let gamma = AbHom::from_parts(module.group.clone(), module.group.clone(), module.action.clone());
    let (top, proj) = coinvariants(&module.group, &gamma, p.get()).expect("module action was validated");
    let norm = module.action.power_sum(p.order());
    MackeyFunctor::new(p, top, module.group.clone(), module.action.clone(), norm, proj.matrix)
        .expect("shapes agree by construction")
}

/// Permutation functor `Z[S]`, the fixed-point functor of the permutation module.
pub fn permutation<T: Scalar>(p: Prime, s: GSet) -> MackeyFunctor<T> {
    fixed_point(p, &CpModule::permutation(p, s))
}
