//! The box product of `C_p`-Mackey functors and its standard structure maps.

use crate::abgroup::{tensor_product, AbGroup};
use crate::error::{Error, Result};
use crate::intlin::{solve_linear, Matrix};
use crate::scalar::Scalar;

use super::{constant_z, permutation, twisted_burnside, GSet, MackeyFunctor, MackeyMorphism, Prime};

/// Generator numbering of `M □ N`.
///
/// Top generators are `aᵢ ⊗ bⱼ` (`aᵢ ∈ M(*)`, `bⱼ ∈ N(*)`) followed by the
/// transfers `tr(x_k ⊗ y_l)`; bottom generators are `x_k ⊗ y_l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxLayout {
    pub left_top: usize,
    pub right_top: usize,
    pub left_bottom: usize,
    pub right_bottom: usize,
}

impl BoxLayout {
    pub fn of<T: Scalar>(m: &MackeyFunctor<T>, n: &MackeyFunctor<T>) -> Self {
        BoxLayout {
            left_top: m.top().ngens(),
            right_top: n.top().ngens(),
            left_bottom: m.bottom().ngens(),
            right_bottom: n.bottom().ngens(),
        }
    }

    pub fn top_generator(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.left_top && j < self.right_top);
        i * self.right_top + j
    }

    pub fn transfer_generator(&self, k: usize, l: usize) -> usize {
        self.tensor_top_len() + self.bottom_generator(k, l)
    }

    pub fn bottom_generator(&self, k: usize, l: usize) -> usize {
        debug_assert!(k < self.left_bottom && l < self.right_bottom);
        k * self.right_bottom + l
    }

    pub fn tensor_top_len(&self) -> usize {
        self.left_top * self.right_top
    }

    pub fn top_len(&self) -> usize {
        self.tensor_top_len() + self.bottom_len()
    }

    pub fn bottom_len(&self) -> usize {
        self.left_bottom * self.right_bottom
    }
}

/// Order in which the top-tier relations of `M □ N` are listed. The
/// relation lattice, and hence the functor, does not depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationOrder {
    CoinvariantsFirst,
    FrobeniusFirst,
}

/// Relations of `(M(*) ⊗ N(*)) ⊕ (M(C_p) ⊗ N(C_p))_{C_p}` followed by the
/// Frobenius reciprocity relations, as columns.
fn top_relations<T: Scalar>(
    m: &MackeyFunctor<T>,
    n: &MackeyFunctor<T>,
    bottom: &AbGroup<T>,
    action: &Matrix<T>,
    order: RelationOrder,
) -> Matrix<T> {
    let lay = BoxLayout::of(m, n);
    let total = lay.top_len();
    let offset = lay.tensor_top_len();
    let (tt, _) = tensor_product(m.top(), n.top());

    let mut tensor = Matrix::zeros(total, 0);
    tensor = tensor.hstack(&tt.relations().vstack(&Matrix::zeros(lay.bottom_len(), tt.relations().cols())));
    let moved = action.sub(&Matrix::identity(lay.bottom_len()));
    let coinv = Matrix::zeros(offset, bottom.relations().cols() + moved.cols())
        .vstack(&bottom.relations().hstack(&moved));

    let mut frob = Vec::new();
    // a ⊗ tr(y) = tr(res(a) ⊗ y)
    for i in 0..lay.left_top {
        for l in 0..lay.right_bottom {
            let mut v = vec![T::zero(); total];
            for j in 0..lay.right_top {
                v[lay.top_generator(i, j)] = n.tr()[(j, l)].clone();
            }
            for k in 0..lay.left_bottom {
                let idx = lay.transfer_generator(k, l);
                v[idx] = v[idx].sub_exact(&m.res()[(k, i)]);
            }
            frob.push(v);
        }
    }
    // tr(x) ⊗ b = tr(x ⊗ res(b))
    for k in 0..lay.left_bottom {
        for j in 0..lay.right_top {
            let mut v = vec![T::zero(); total];
            for i in 0..lay.left_top {
                v[lay.top_generator(i, j)] = m.tr()[(i, k)].clone();
            }
            for l in 0..lay.right_bottom {
                let idx = lay.transfer_generator(k, l);
                v[idx] = v[idx].sub_exact(&n.res()[(l, j)]);
            }
            frob.push(v);
        }
    }
    let frob = Matrix::from_columns(total, &frob);
    match order {
        RelationOrder::CoinvariantsFirst => tensor.hstack(&coinv).hstack(&frob),
        RelationOrder::FrobeniusFirst => frob.hstack(&tensor).hstack(&coinv),
    }
}

/// `M □ N`, presented on the generators described by [`BoxLayout`].
pub fn box_product<T: Scalar>(m: &MackeyFunctor<T>, n: &MackeyFunctor<T>) -> Result<MackeyFunctor<T>> {
    box_product_in_order(m, n, RelationOrder::CoinvariantsFirst)
}

pub fn box_product_in_order<T: Scalar>(
    m: &MackeyFunctor<T>,
    n: &MackeyFunctor<T>,
    order: RelationOrder,
) -> Result<MackeyFunctor<T>> {
    if m.p() != n.p() {
        return Err(Error::PrimeMismatch(m.p().get(), n.p().get()));
    }
    let lay = BoxLayout::of(m, n);
    let (bottom, _) = tensor_product(m.bottom(), n.bottom());
    let action = m.action().kronecker(n.action());
    let relations = top_relations(m, n, &bottom, &action, order);
    let top = AbGroup::new(lay.top_len(), relations)?;
    let norm = action.power_sum(m.p().order());
    let res = m.res().kronecker(n.res()).hstack(&norm);
    let tr = Matrix::zeros(lay.tensor_top_len(), lay.bottom_len()).vstack(&Matrix::identity(lay.bottom_len()));
    MackeyFunctor::new(m.p(), top, bottom, action, res, tr)
}

/// The unit isomorphism `A □ M → M`.
pub fn burnside_unit_morphism<T: Scalar>(m: &MackeyFunctor<T>) -> MackeyMorphism<T> {
    let a = twisted_burnside(m.p(), T::one());
    let source = box_product(&a, m).expect("same prime");
    let lay = BoxLayout::of(&a, m);
    let (nt, nb) = (m.top().ngens(), m.bottom().ngens());
    let tr_res = m.tr().mul(m.res());
    let mut top = Matrix::zeros(nt, lay.top_len());
    for i in 0..nt {
        for r in 0..nt {
            top[(r, lay.top_generator(0, i))] = if r == i { T::one() } else { T::zero() };
            top[(r, lay.top_generator(1, i))] = tr_res[(r, i)].clone();
        }
    }
    for j in 0..nb {
        for r in 0..nt {
            top[(r, lay.transfer_generator(0, j))] = m.tr()[(r, j)].clone();
        }
    }
    MackeyMorphism::from_parts(source, m.clone(), top, Matrix::identity(nb))
}

/// The multiplication `cA □ dA → (cd)A`.
pub fn twisted_product_morphism<T: Scalar>(p: Prime, c: T, d: T) -> MackeyMorphism<T> {
    let left = twisted_burnside(p, c.clone());
    let right = twisted_burnside(p, d.clone());
    let source = box_product(&left, &right).expect("same prime");
    let target = twisted_burnside(p, c.mul_exact(&d));
    let z = T::zero;
    let top = Matrix::from_vec(2, 5, vec![T::one(), z(), z(), z(), z(), z(), c, d, p.as_scalar(), T::one()]);
    MackeyMorphism::from_parts(source, target, top, Matrix::identity(1))
}

/// The multiplication `Z □ Z → Z`.
pub fn constant_square_morphism<T: Scalar>(p: Prime) -> MackeyMorphism<T> {
    let z = constant_z(p);
    let source = box_product(&z, &z).expect("same prime");
    let top = Matrix::from_vec(1, 2, vec![T::one(), p.as_scalar()]);
    MackeyMorphism::from_parts(source, z, top, Matrix::identity(1))
}

/// Position of a point of `s` (fixed points, then free orbits point by point)
/// as `(orbit, offset)`; fixed points have orbit `None` and their own index.
fn locate(s: GSet, order: usize, x: usize) -> (Option<usize>, usize) {
    if x < s.fixed {
        (None, x)
    } else {
        let y = x - s.fixed;
        (Some(y / order), y % order)
    }
}

/// The comparison map `Z[S] □ Z[T] → Z[S × T]`, with the orbits of `S × T`
/// ordered as fixed × fixed, fixed × free, free × fixed, free × free.
pub fn permutation_product_morphism<T: Scalar>(p: Prime, s: GSet, t: GSet) -> MackeyMorphism<T> {
    let left = permutation::<T>(p, s);
    let right = permutation::<T>(p, t);
    let source = box_product(&left, &right).expect("same prime");
    let target = permutation::<T>(p, super::gset_product(p, s, t));
    let q = p.order();
    let lay = BoxLayout::of(&left, &right);
    let fixed_total = s.fixed * t.fixed;
    let fixed_free = fixed_total;
    let free_fixed = fixed_free + q * s.fixed * t.free;
    let free_free = free_fixed + q * s.free * t.fixed;

    let mut bottom = Matrix::zeros(target.bottom().ngens(), lay.bottom_len());
    for x in 0..s.cardinality(p) {
        for y in 0..t.cardinality(p) {
            let image = match (locate(s, q, x), locate(t, q, y)) {
                ((None, i), (None, j)) => i * t.fixed + j,
                ((None, i), (Some(b), r)) => fixed_free + (i * t.free + b) * q + r,
                ((Some(b), r), (None, j)) => free_fixed + (b * t.fixed + j) * q + r,
                ((Some(b1), r1), (Some(b2), r2)) => {
                    let shift = (r2 + q - r1) % q;
                    free_free + ((b1 * t.free + b2) * q + shift) * q + r1
                }
            };
            bottom[(image, lay.bottom_generator(x, y))] = T::one();
        }
    }

    let pushed = bottom.mul(source.res());
    let cols: Vec<Vec<T>> = pushed
        .columns()
        .iter()
        .map(|c| solve_linear(target.res(), c).expect("fixed elements lift through the inclusion"))
        .collect();
    let top = Matrix::from_columns(target.top().ngens(), &cols);
    MackeyMorphism::from_parts(source, target, top, bottom)
}
