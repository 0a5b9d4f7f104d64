use crate::scalar::{xgcd, Scalar};

use super::Matrix;

/// Column-style Hermite normal form: `h = a · u` with `u` unimodular.
///
/// `h` is lower echelon: pivot rows strictly increase with the column index,
/// pivots are positive, entries left of a pivot (in its row) lie in
/// `[0, pivot)`, and all zero columns come last. The nonzero columns are a
/// canonical basis of the column lattice of `a`.
pub fn hermite_normal_form<T: Scalar>(a: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let (rows, cols) = a.shape();
    let mut h = a.clone();
    let mut u = Matrix::identity(cols);
    let mut pc = 0;
    for row in 0..rows {
        if pc == cols {
            break;
        }
        for j in pc + 1..cols {
            if h[(row, j)].is_zero() {
                continue;
            }
            if h[(row, pc)].is_zero() {
                h.swap_cols(pc, j);
                u.swap_cols(pc, j);
                continue;
            }
            let a = h[(row, pc)].clone();
            let b = h[(row, j)].clone();
            let (g, x, y) = xgcd(&a, &b);
            let (ag, bg) = (a.div_floor(&g), b.div_floor(&g));
            // [x  -b/g; y  a/g] has determinant 1
            h.mix_cols(pc, j, &x, &y, &bg.neg_exact(), &ag);
            u.mix_cols(pc, j, &x, &y, &bg.neg_exact(), &ag);
        }
        if h[(row, pc)].is_zero() {
            continue;
        }
        if h[(row, pc)].is_negative() {
            h.negate_col(pc);
            u.negate_col(pc);
        }
        let pivot = h[(row, pc)].clone();
        for k in 0..pc {
            let q = h[(row, k)].div_floor(&pivot);
            if !q.is_zero() {
                h.add_col_multiple(k, pc, &q.neg_exact());
                u.add_col_multiple(k, pc, &q.neg_exact());
            }
        }
        pc += 1;
    }
    (h, u)
}

/// Number of nonzero columns of a matrix in Hermite normal form.
pub(crate) fn hermite_rank<T: Scalar>(h: &Matrix<T>) -> usize {
    (0..h.cols()).take_while(|&j| (0..h.rows()).any(|i| !h[(i, j)].is_zero())).count()
}

/// Columns form a basis of the integer kernel lattice `{x : a·x = 0}`.
pub fn kernel_basis<T: Scalar>(a: &Matrix<T>) -> Matrix<T> {
    let (h, u) = hermite_normal_form(a);
    let r = hermite_rank(&h);
    let kernel: Vec<usize> = (r..a.cols()).collect();
    let k = u.select_columns(&kernel);
    // canonical representative of the same lattice
    Lattice::spanned_by(&k).basis().clone()
}

/// A sublattice of `Z^n`, stored as its Hermite basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice<T> {
    basis: Matrix<T>,
    pivots: Vec<usize>,
}

impl<T: Scalar> Lattice<T> {
    pub fn spanned_by(generators: &Matrix<T>) -> Self {
        let (h, _) = hermite_normal_form(generators);
        let r = hermite_rank(&h);
        let basis = h.select_columns(&(0..r).collect::<Vec<_>>());
        let pivots = (0..r)
            .map(|j| (0..basis.rows()).find(|&i| !basis[(i, j)].is_zero()).unwrap())
            .collect();
        Lattice { basis, pivots }
    }

    pub fn zero(dim: usize) -> Self {
        Lattice { basis: Matrix::zeros(dim, 0), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    /// Coordinates of `v` in the Hermite basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        assert_eq!(v.len(), self.dim(), "vector length does not match lattice dimension");
        let mut residual = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        let mut next_row = 0;
        for (k, &pr) in self.pivots.iter().enumerate() {
            if residual[next_row..pr].iter().any(|e| !e.is_zero()) {
                return None;
            }
            let (q, r) = residual[pr].div_mod_floor(&self.basis[(pr, k)]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (i, e) in residual.iter_mut().enumerate().skip(pr) {
                    *e = e.sub_exact(&q.mul_exact(&self.basis[(i, k)]));
                }
            }
            coords.push(q);
            next_row = pr + 1;
        }
        if residual[next_row..].iter().any(|e| !e.is_zero()) {
            return None;
        }
        Some(coords)
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_columns(&self, m: &Matrix<T>) -> bool {
        (0..m.cols()).all(|j| self.contains(&m.column(j)))
    }

    pub fn contains_lattice(&self, other: &Lattice<T>) -> bool {
        self.contains_columns(&other.basis)
    }

    pub fn sum(&self, other: &Lattice<T>) -> Lattice<T> {
        Lattice::spanned_by(&self.basis.hstack(&other.basis))
    }
}
