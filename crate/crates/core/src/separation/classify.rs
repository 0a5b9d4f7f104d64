use std::fmt;

use crate::abgroup::Invariants;
use crate::error::{Error, Result};
use crate::intlin::{unimodular_inverse, Matrix};
use crate::mackey::{box_product, twisted_burnside, MackeyFunctor, MackeyMorphism};
use crate::scalar::{xgcd, Scalar};

use super::{gamma_functor, twisted_isomorphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NotInvertibleReason {
    BottomNotZ,
    /// Bottom is `Z` with `γ = -1` (only possible at `p = 2`); then `res = 0`.
    BottomActionNontrivial,
    TopNotRank2,
    /// The image of `tr` is not a direct summand of the top tier.
    TransferNotSplit,
    /// Carries the canonical twist class, which shares a factor with `p`.
    TwistNotCoprime(u64),
    /// Equivalent to `TwistNotCoprime` once the other conditions hold, which is
    /// reported instead; kept so callers can match on the full reason list.
    RestrictionNotSurjectiveOntoZ,
}

impl fmt::Display for NotInvertibleReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotInvertibleReason::BottomNotZ => write!(f, "BottomNotZ"),
            NotInvertibleReason::BottomActionNontrivial => write!(f, "BottomActionNontrivial"),
            NotInvertibleReason::TopNotRank2 => write!(f, "TopNotRank2"),
            NotInvertibleReason::TransferNotSplit => write!(f, "TransferNotSplit"),
            NotInvertibleReason::TwistNotCoprime(d) => write!(f, "TwistNotCoprime({d})"),
            NotInvertibleReason::RestrictionNotSurjectiveOntoZ => write!(f, "RestrictionNotSurjectiveOntoZ"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// `d_class = min(d mod p, -d mod p)`; `sign_ambiguous` is set when the two differ.
    TwistedBurnside { d_class: u64, sign_ambiguous: bool },
    NotInvertible(NotInvertibleReason),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::TwistedBurnside { d_class, .. } => write!(f, "TwistedBurnside({d_class})"),
            Verdict::NotInvertible(r) => write!(f, "NotInvertible({r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    /// Free rank `k` of the top tier of `Γ(M)`.
    pub gamma_rank: usize,
}

impl ClassificationResult {
    pub fn is_invertible(&self) -> bool {
        matches!(self.verdict, Verdict::TwistedBurnside { .. })
    }
}

impl fmt::Display for ClassificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.verdict)
    }
}

/// An isomorphism `M → _dA`.
#[derive(Clone, Debug)]
pub struct TwistedForm<T> {
    pub twist: T,
    pub iso: MackeyMorphism<T>,
}

/// Puts `M` in the shape `_dA` if its tiers, action and transfer allow it.
/// The twist is not required to be prime to `p`.
pub fn twisted_form<T: Scalar>(m: &MackeyFunctor<T>) -> std::result::Result<TwistedForm<T>, NotInvertibleReason> {
    let (top_inv, bottom_inv) = m.tier_invariants();
    if bottom_inv != (Invariants { free_rank: 1, torsion: vec![] }) {
        return Err(NotInvertibleReason::BottomNotZ);
    }
    if top_inv != (Invariants { free_rank: 2, torsion: vec![] }) {
        return Err(NotInvertibleReason::TopNotRank2);
    }
    if !m.has_trivial_action() {
        return Err(NotInvertibleReason::BottomActionNontrivial);
    }
    let dt = m.top().decompose();
    let db = m.bottom().decompose();
    let t = dt.to_canonical.matrix.mul(m.tr()).mul(&db.from_canonical.matrix);
    let res = db.to_canonical.matrix.mul(m.res()).mul(&dt.from_canonical.matrix);
    let (t1, t2) = (t[(0, 0)].clone(), t[(1, 0)].clone());
    let (g, u, v) = xgcd(&t1, &t2);
    if !g.is_one() {
        return Err(NotInvertibleReason::TransferNotSplit);
    }
    // (v, -u) completes t to a basis of Z^2: det [g t] = v t2 + u t1 = 1
    let basis = Matrix::from_vec(2, 2, vec![v.clone(), t1, u.neg_exact(), t2]);
    let image = res.mul(&basis);
    let p: T = m.p().as_scalar();
    if image[(0, 1)] != p {
        return Err(NotInvertibleReason::TransferNotSplit);
    }
    let twist = image[(0, 0)].clone();
    let to_basis = unimodular_inverse(&basis).expect("determinant one");
    let target = twisted_burnside(m.p(), twist.clone());
    let iso = MackeyMorphism::new(m.clone(), target, to_basis.mul(&dt.to_canonical.matrix), db.to_canonical.matrix.clone())
        .expect("shapes agree by construction");
    Ok(TwistedForm { twist, iso })
}

fn canonical_class<T: Scalar>(d: &T, p: u64) -> (u64, bool) {
    let q = T::from_u64_exact(p);
    let plus = d.mod_floor(&q).to_u64().expect("residue fits");
    let minus = (p - plus) % p;
    (plus.min(minus), plus != minus)
}

pub fn classify_invertible<T: Scalar>(m: &MackeyFunctor<T>) -> Result<ClassificationResult> {
    let report = m.check_axioms();
    if !report.passed() {
        return Err(Error::AxiomViolation(report.to_string()));
    }
    let gamma_rank = gamma_functor(m).0.top().invariant_factors().free_rank;
    let verdict = match twisted_form(m) {
        Err(reason) => Verdict::NotInvertible(reason),
        Ok(form) => {
            let p = m.p().get();
            let (d_class, sign_ambiguous) = canonical_class(&form.twist, p);
            if d_class % p == 0 {
                Verdict::NotInvertible(NotInvertibleReason::TwistNotCoprime(d_class))
            } else {
                Verdict::TwistedBurnside { d_class, sign_ambiguous }
            }
        }
    };
    Ok(ClassificationResult { verdict, gamma_rank })
}

/// `M⁻¹ = _{d'}A` together with an isomorphism `M □ M⁻¹ → A`.
#[derive(Clone, Debug)]
pub struct Inverse<T> {
    pub inverse: MackeyFunctor<T>,
    pub certificate: MackeyMorphism<T>,
}

pub fn invert<T: Scalar>(m: &MackeyFunctor<T>) -> Option<Inverse<T>> {
    let result = classify_invertible(m).ok()?;
    let Verdict::TwistedBurnside { d_class, .. } = result.verdict else { return None };
    let p = m.p().get();
    let (_, a, _) = xgcd(&T::from_u64_exact(d_class), &T::from_u64_exact(p));
    let d_inv = a.mod_floor(&T::from_u64_exact(p));
    let inverse = twisted_burnside(m.p(), d_inv);
    let product = box_product(m, &inverse).ok()?;
    let form = twisted_form(&product).ok()?;
    let unit = twisted_isomorphism(m.p(), form.twist.clone(), T::one())?;
    let certificate = unit.compose(&form.iso);
    certificate.is_isomorphism().then_some(Inverse { inverse, certificate })
}
