use crate::scalar::Scalar;

use super::Matrix;

/// `u · a · v = s` with `s` diagonal, nonnegative, `d₁ | d₂ | …`, zeros last.
///
/// The inverses of `u` and `v` are tracked alongside; they are what turns an
/// abstract invariant-factor decomposition into explicit coordinates.
#[derive(Clone, Debug)]
pub struct SmithDecomposition<T> {
    pub u: Matrix<T>,
    pub s: Matrix<T>,
    pub v: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub v_inv: Matrix<T>,
}

impl<T: Scalar> SmithDecomposition<T> {
    /// The `min(rows, cols)` diagonal entries of `s`.
    pub fn diagonal(&self) -> Vec<T> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }
}

struct Reducer<T> {
    s: Matrix<T>,
    u: Matrix<T>,
    u_inv: Matrix<T>,
    v: Matrix<T>,
    v_inv: Matrix<T>,
}

impl<T: Scalar> Reducer<T> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &T) {
        self.s.add_row_multiple(dst, src, c);
        self.u.add_row_multiple(dst, src, c);
        self.u_inv.add_col_multiple(src, dst, &c.neg_exact());
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: &T) {
        self.s.add_col_multiple(dst, src, c);
        self.v.add_col_multiple(dst, src, c);
        self.v_inv.add_row_multiple(src, dst, &c.neg_exact());
    }

    fn negate_row(&mut self, i: usize) {
        self.s.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    fn smallest_nonzero(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                let e = &self.s[(i, j)];
                if e.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.s[(bi, bj)].abs() <= e.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    /// Clears row `t` and column `t` outside the pivot. Returns false if some
    /// remainder survived and the pivot has to be re-chosen.
    fn clear_pivot_cross(&mut self, t: usize) -> bool {
        let mut clean = true;
        for i in t + 1..self.s.rows() {
            if !self.s[(i, t)].is_zero() {
                let q = self.s[(i, t)].div_floor(&self.s[(t, t)]);
                self.add_row(i, t, &q.neg_exact());
                clean &= self.s[(i, t)].is_zero();
            }
        }
        for j in t + 1..self.s.cols() {
            if !self.s[(t, j)].is_zero() {
                let q = self.s[(t, j)].div_floor(&self.s[(t, t)]);
                self.add_col(j, t, &q.neg_exact());
                clean &= self.s[(t, j)].is_zero();
            }
        }
        clean
    }

    fn move_to_pivot(&mut self, t: usize, (i, j): (usize, usize)) {
        self.swap_rows(t, i);
        self.swap_cols(t, j);
    }

    fn reduce(&mut self) {
        let (rows, cols) = self.s.shape();
        let mut t = 0;
        while t < rows.min(cols) {
            let Some(pos) = self.smallest_nonzero(t) else { break };
            self.move_to_pivot(t, pos);
            loop {
                if !self.clear_pivot_cross(t) {
                    // a remainder smaller than the pivot is left in row or column t
                    let mut best = (t, t);
                    for i in t + 1..rows {
                        if !self.s[(i, t)].is_zero() && self.s[(i, t)].abs() < self.s[best].abs() {
                            best = (i, t);
                        }
                    }
                    for j in t + 1..cols {
                        if !self.s[(t, j)].is_zero() && self.s[(t, j)].abs() < self.s[best].abs() {
                            best = (t, j);
                        }
                    }
                    self.move_to_pivot(t, best);
                    continue;
                }
                let pivot = self.s[(t, t)].clone();
                let offender = (t + 1..rows).find(|&i| {
                    (t + 1..cols).any(|j| !self.s[(i, j)].is_multiple_of(&pivot))
                });
                match offender {
                    Some(i) => self.add_row(t, i, &T::one()),
                    None => break,
                }
            }
            if self.s[(t, t)].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
    }
}

pub fn smith_normal_form<T: Scalar>(a: &Matrix<T>) -> SmithDecomposition<T> {
    let (rows, cols) = a.shape();
    let mut r = Reducer {
        s: a.clone(),
        u: Matrix::identity(rows),
        u_inv: Matrix::identity(rows),
        v: Matrix::identity(cols),
        v_inv: Matrix::identity(cols),
    };
    r.reduce();
    SmithDecomposition { u: r.u, s: r.s, v: r.v, u_inv: r.u_inv, v_inv: r.v_inv }
}
