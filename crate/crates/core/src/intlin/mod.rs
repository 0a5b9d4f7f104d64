//! Exact integer linear algebra: Smith and Hermite normal forms, integer
//! kernels and Diophantine solving.

mod hermite;
mod matrix;
mod smith;

pub use hermite::{hermite_normal_form, kernel_basis, Lattice};
pub use matrix::{determinant, Matrix};
pub use smith::{smith_normal_form, SmithDecomposition};

use crate::scalar::Scalar;

/// Solves `a · x = b` over the integers; `None` when no integer solution exists.
pub fn solve_linear<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(b.len(), a.rows(), "right-hand side has wrong length");
    let snf = smith_normal_form(a);
    let c = snf.u.mul_vec(b);
    let diag = snf.diagonal();
    let mut y = vec![T::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        match diag.get(i) {
            Some(d) if !d.is_zero() => {
                let (q, r) = ci.div_mod_floor(d);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            }
            _ => {
                if !ci.is_zero() {
                    return None;
                }
            }
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// Inverse of a unimodular matrix, `None` if the matrix is not invertible over Z.
pub fn unimodular_inverse<T: Scalar>(a: &Matrix<T>) -> Option<Matrix<T>> {
    if !a.is_square() {
        return None;
    }
    let snf = smith_normal_form(a);
    if snf.diagonal().iter().any(|d| !d.is_one()) {
        return None;
    }
    // a = u⁻¹ v⁻¹, so a⁻¹ = v u
    Some(snf.v.mul(&snf.u))
}
