use crate::abgroup::AbGroup;
use crate::intlin::Matrix;
use crate::mackey::{twisted_burnside, MackeyFunctor, MackeyMorphism, Prime};
use crate::scalar::Scalar;

use super::twisted_form;

/// Whether `_cA ≅ _dA`, i.e. `c ≡ ±d (mod p)`.
pub fn twisted_iso_criterion<T: Scalar>(p: Prime, c: &T, d: &T) -> bool {
    let q: T = p.as_scalar();
    c.sub_exact(d).mod_floor(&q).is_zero() || c.add_exact(d).mod_floor(&q).is_zero()
}

/// The isomorphism `_cA → _dA` sending `1 ↦ ±1 + x[C_p]`, `[C_p] ↦ [C_p]`
/// where `c = ±d + px`; `None` when no such `x` exists.
pub fn twisted_isomorphism<T: Scalar>(p: Prime, c: T, d: T) -> Option<MackeyMorphism<T>> {
    let q: T = p.as_scalar();
    let sign = if c.sub_exact(&d).mod_floor(&q).is_zero() {
        T::one()
    } else if c.add_exact(&d).mod_floor(&q).is_zero() {
        T::one().neg_exact()
    } else {
        return None;
    };
    let x = c.sub_exact(&sign.mul_exact(&d)).div_floor(&q);
    let top = Matrix::from_vec(2, 2, vec![sign, T::zero(), x, T::one()]);
    let source = twisted_burnside(p, c);
    let target = twisted_burnside(p, d);
    Some(MackeyMorphism::new(source, target, top, Matrix::identity(1)).expect("2x2 top, 1x1 bottom"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NonIsoReason {
    PrimeMismatch,
    /// Some tier has different invariant factors.
    InvariantMismatch,
    /// Within the twisted Burnside family: twists differ up to sign mod `p`,
    /// or only one side belongs to the family.
    TwistMismatch,
}

#[derive(Clone, Debug)]
pub enum IsoOutcome<T> {
    Found(Box<MackeyMorphism<T>>),
    NotIsomorphic(NonIsoReason),
    Unknown,
}

/// Decides isomorphism by invariants, then in closed form for functors of
/// the shape `_dA`, and finally by bounded search.
pub fn try_find_isomorphism<T: Scalar>(m: &MackeyFunctor<T>, n: &MackeyFunctor<T>, bound: u64) -> IsoOutcome<T> {
    if m.p() != n.p() {
        return IsoOutcome::NotIsomorphic(NonIsoReason::PrimeMismatch);
    }
    if m.tier_invariants() != n.tier_invariants() {
        return IsoOutcome::NotIsomorphic(NonIsoReason::InvariantMismatch);
    }
    match (twisted_form(m), twisted_form(n)) {
        (Ok(fm), Ok(fn_)) => {
            let Some(shear) = twisted_isomorphism(m.p(), fm.twist, fn_.twist) else {
                return IsoOutcome::NotIsomorphic(NonIsoReason::TwistMismatch);
            };
            let back = fn_.iso.inverse().expect("twisted form is an isomorphism");
            IsoOutcome::Found(Box::new(back.compose(&shear).compose(&fm.iso)))
        }
        (Ok(_), Err(_)) | (Err(_), Ok(_)) => IsoOutcome::NotIsomorphic(NonIsoReason::TwistMismatch),
        (Err(_), Err(_)) => match search_isomorphism(m, n, bound) {
            Some(f) => IsoOutcome::Found(Box::new(f)),
            None => IsoOutcome::Unknown,
        },
    }
}

type Check<'a, T> = Box<dyn Fn(&Matrix<T>) -> bool + 'a>;

/// A condition on the unknown matrix that only reads the listed columns.
struct Constraint<'a, T> {
    support: Vec<usize>,
    check: Check<'a, T>,
}

fn support<T: Scalar>(v: &[T]) -> Vec<usize> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect()
}

/// `x · col ∈ L_target` for each relation column of the source.
fn well_defined<'a, T: Scalar>(source: &'a AbGroup<T>, target: &'a AbGroup<T>) -> Vec<Constraint<'a, T>> {
    source
        .relations()
        .columns()
        .into_iter()
        .map(|rel| Constraint {
            support: support(&rel),
            check: Box::new(move |x: &Matrix<T>| target.is_zero_vector(&x.mul_vec(&rel))),
        })
        .collect()
}

/// `0, 1, -1, 2, -2, …` up to `bound`.
fn values<T: Scalar>(bound: u64) -> Vec<T> {
    let mut out = vec![T::zero()];
    for k in 1..=bound {
        let k = T::from_u64_exact(k);
        out.push(k.clone());
        out.push(k.neg_exact());
    }
    out
}

/// Odometer step, last position fastest; `false` after the final tuple.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Depth-first search over the columns of a `rows × cols` matrix with
/// entries in `[-bound, bound]`, in a fixed enumeration order. Each
/// constraint is checked as soon as its support is filled in; `accept` sees
/// complete candidates and stops the search by returning `true`.
fn search_columns<T: Scalar>(
    rows: usize,
    cols: usize,
    bound: u64,
    constraints: &[Constraint<'_, T>],
    mut accept: impl FnMut(&Matrix<T>) -> bool,
) -> bool {
    let mut blank = Matrix::zeros(rows, cols);
    if constraints.iter().any(|c| c.support.is_empty() && !(c.check)(&blank)) {
        return false;
    }
    let vals = values::<T>(bound);
    let mut candidates: Vec<Vec<Vec<T>>> = Vec::with_capacity(cols);
    let mut due: Vec<Vec<&Constraint<'_, T>>> = vec![Vec::new(); cols];
    for c in constraints {
        if let Some(&last) = c.support.iter().max() {
            if c.support.len() > 1 {
                due[last].push(c);
            }
        }
    }
    for j in 0..cols {
        let local: Vec<&Constraint<'_, T>> = constraints.iter().filter(|c| c.support == [j]).collect();
        let mut list = Vec::new();
        let mut digits = vec![0usize; rows];
        loop {
            for (i, &k) in digits.iter().enumerate() {
                blank[(i, j)] = vals[k].clone();
            }
            if local.iter().all(|c| (c.check)(&blank)) {
                list.push(digits.iter().map(|&k| vals[k].clone()).collect());
            }
            if !advance(&mut digits, vals.len()) {
                break;
            }
        }
        for i in 0..rows {
            blank[(i, j)] = T::zero();
        }
        if list.is_empty() {
            return false;
        }
        candidates.push(list);
    }

    let mut x = blank;
    let mut choice = vec![0usize; cols];
    let mut j = 0usize;
    loop {
        if j == cols {
            if accept(&x) {
                return true;
            }
            if cols == 0 {
                return false;
            }
            j -= 1;
            choice[j] += 1;
            continue;
        }
        if choice[j] >= candidates[j].len() {
            choice[j] = 0;
            if j == 0 {
                return false;
            }
            j -= 1;
            choice[j] += 1;
            continue;
        }
        for (i, v) in candidates[j][choice[j]].iter().enumerate() {
            x[(i, j)] = v.clone();
        }
        if due[j].iter().all(|c| (c.check)(&x)) {
            j += 1;
        } else {
            choice[j] += 1;
        }
    }
}

/// Exhaustive search for a Mackey isomorphism `M → N` whose tier matrices
/// have entries in `[-bound, bound]`. The bottom map is chosen first; the
/// first witness in enumeration order is returned.
pub fn search_isomorphism<T: Scalar>(m: &MackeyFunctor<T>, n: &MackeyFunctor<T>, bound: u64) -> Option<MackeyMorphism<T>> {
    if m.p() != n.p() {
        return None;
    }
    let (mb, nb) = (m.bottom().ngens(), n.bottom().ngens());
    let (mt, nt) = (m.top().ngens(), n.top().ngens());

    let mut bottom_constraints = well_defined(m.bottom(), n.bottom());
    for j in 0..mb {
        let gamma_col = m.action().column(j);
        let mut sup = support(&gamma_col);
        if !sup.contains(&j) {
            sup.push(j);
        }
        bottom_constraints.push(Constraint {
            support: sup,
            check: Box::new(move |x: &Matrix<T>| {
                let lhs = n.action().mul_vec(&x.column(j));
                let rhs = x.mul_vec(&gamma_col);
                let diff: Vec<T> = lhs.iter().zip(&rhs).map(|(a, b)| a.sub_exact(b)).collect();
                n.bottom().is_zero_vector(&diff)
            }),
        });
    }

    let mut found = None;
    search_columns(nb, mb, bound, &bottom_constraints, |phi_b| {
        let candidate = MackeyMorphism::new(m.clone(), n.clone(), Matrix::zeros(nt, mt), phi_b.clone()).ok();
        let Some(candidate) = candidate else { return false };
        if !candidate.bottom_hom().is_isomorphism() {
            return false;
        }
        let mut top_constraints = well_defined(m.top(), n.top());
        let pushed_res = phi_b.mul(m.res());
        for j in 0..mt {
            let target = pushed_res.column(j);
            top_constraints.push(Constraint {
                support: vec![j],
                check: Box::new(move |x: &Matrix<T>| {
                    let lhs = n.res().mul_vec(&x.column(j));
                    let diff: Vec<T> = lhs.iter().zip(&target).map(|(a, b)| a.sub_exact(b)).collect();
                    n.bottom().is_zero_vector(&diff)
                }),
            });
        }
        let pushed_tr = n.tr().mul(phi_b);
        for l in 0..mb {
            let tr_col = m.tr().column(l);
            let target = pushed_tr.column(l);
            top_constraints.push(Constraint {
                support: support(&tr_col),
                check: Box::new(move |x: &Matrix<T>| {
                    let rhs = x.mul_vec(&tr_col);
                    let diff: Vec<T> = target.iter().zip(&rhs).map(|(a, b)| a.sub_exact(b)).collect();
                    n.top().is_zero_vector(&diff)
                }),
            });
        }
        search_columns(nt, mt, bound, &top_constraints, |phi_t| {
            let f = MackeyMorphism::new(m.clone(), n.clone(), phi_t.clone(), phi_b.clone()).expect("shapes checked");
            if f.is_isomorphism() {
                found = Some(f);
                true
            } else {
                false
            }
        })
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mackey::{burnside, constant_z, permutation, zero, GSet};

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn criterion_examples() {
        assert!(twisted_iso_criterion(p(3), &1i64, &4));
        assert!(twisted_iso_criterion(p(7), &5i64, &5));
        assert!(!twisted_iso_criterion(p(5), &1i64, &2));
        assert!(twisted_iso_criterion(p(5), &1i64, &-1));
    }

    #[test]
    fn shear_matches_the_criterion() {
        let f = twisted_isomorphism(p(3), 1i64, 4).unwrap();
        assert_eq!(f.top, Matrix::from_i64(2, 2, &[1, 0, -1, 1]));
        assert!(f.is_isomorphism());
        assert!(twisted_isomorphism(p(5), 1i64, 2).is_none());
    }

    #[test]
    fn identity_is_found() {
        let a = burnside::<i64>(p(3));
        let f = search_isomorphism(&a, &a, 1).unwrap();
        assert!(f.is_isomorphism());
        assert!(matches!(try_find_isomorphism(&a, &a, 1), IsoOutcome::Found(_)));
        let perm = permutation::<i64>(p(2), GSet::new(1, 1));
        let f = search_isomorphism(&perm, &perm, 1).unwrap();
        assert!(f.is_isomorphism());
    }

    #[test]
    fn twisted_pair_is_found() {
        let (m, n) = (twisted_burnside::<i64>(p(3), 1), twisted_burnside(p(3), 4));
        let IsoOutcome::Found(f) = try_find_isomorphism(&m, &n, 2) else { panic!() };
        assert!(f.is_isomorphism());
        let g = search_isomorphism(&m, &n, 2).unwrap();
        assert!(g.is_isomorphism());
    }

    #[test]
    fn invariant_mismatch() {
        let out = try_find_isomorphism(&constant_z::<i64>(p(2)), &burnside(p(2)), 0);
        assert!(matches!(out, IsoOutcome::NotIsomorphic(NonIsoReason::InvariantMismatch)));
        let out = try_find_isomorphism(&twisted_burnside::<i64>(p(5), 1), &twisted_burnside(p(5), 2), 3);
        assert!(matches!(out, IsoOutcome::NotIsomorphic(NonIsoReason::TwistMismatch)));
        assert!(search_isomorphism(&twisted_burnside::<i64>(p(5), 1), &twisted_burnside(p(5), 2), 4).is_none());
    }

    #[test]
    fn zero_functors() {
        let z = zero::<i64>(p(3));
        assert!(matches!(try_find_isomorphism(&z, &z, 0), IsoOutcome::Found(_)));
    }

    #[test]
    fn unknown_when_the_bound_is_too_small() {
        // Z[C_2] against itself presented on a shuffled basis
        let m = permutation::<i64>(p(2), GSet::new(0, 1));
        assert!(matches!(try_find_isomorphism(&m, &m, 0), IsoOutcome::Unknown));
        assert!(matches!(try_find_isomorphism(&m, &m, 1), IsoOutcome::Found(_)));
    }
}
