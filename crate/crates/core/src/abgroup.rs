//! Finitely presented abelian groups `Z^n / L` and homomorphisms between them.
//!
//! A group stores its relation vectors as the columns of a matrix with one row
//! per generator; generators are never reordered behind the caller's back, so
//! generator indices stay meaningful through tensor products and quotients.

use std::fmt;

use crate::error::{Error, Result};
use crate::intlin::{kernel_basis, smith_normal_form, solve_linear, Lattice, Matrix};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbGroup<T> {
    ngens: usize,
    relations: Matrix<T>,
    lattice: Lattice<T>,
}

/// An element of a presented group, given by coordinates on its generators.
/// Equality is decided by the group: see [`AbGroup::same_element`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement<T> {
    pub coords: Vec<T>,
}

/// Canonical form `Z^free_rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_k` with `1 < d₁ | d₂ | …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Invariants<T> {
    pub free_rank: usize,
    pub torsion: Vec<T>,
}

impl<T: Scalar> Invariants<T> {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free_of_rank(&self, n: usize) -> bool {
        self.free_rank == n && self.torsion.is_empty()
    }
}

impl<T: Scalar> fmt::Display for Invariants<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            n => parts.push(format!("Z^{n}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// An explicit isomorphism between a presented group and its canonical form.
#[derive(Clone, Debug)]
pub struct Decomposition<T> {
    pub invariants: Invariants<T>,
    /// Torsion summands first (in chain order), then the free summands.
    pub canonical: AbGroup<T>,
    pub to_canonical: AbHom<T>,
    pub from_canonical: AbHom<T>,
}

impl<T: Scalar> AbGroup<T> {
    pub fn new(ngens: usize, relations: Matrix<T>) -> Result<Self> {
        if relations.rows() != ngens {
            return Err(Error::Dimension {
                what: "relation matrix".into(),
                expected: (ngens, relations.cols()),
                found: relations.shape(),
            });
        }
        let lattice = Lattice::spanned_by(&relations);
        Ok(AbGroup { ngens, relations, lattice })
    }

    pub fn free(n: usize) -> Self {
        AbGroup { ngens: n, relations: Matrix::zeros(n, 0), lattice: Lattice::zero(n) }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// `Z/d₁ ⊕ … ⊕ Z/d_k`; a zero entry gives a free summand.
    pub fn diagonal(orders: &[T]) -> Self {
        let n = orders.len();
        let cols: Vec<Vec<T>> = orders
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero())
            .map(|(i, d)| {
                let mut c = vec![T::zero(); n];
                c[i] = d.clone();
                c
            })
            .collect();
        Self::new(n, Matrix::from_columns(n, &cols)).expect("relation columns have one entry per generator")
    }

    pub fn cyclic(order: T) -> Self {
        Self::diagonal(&[order])
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn relations(&self) -> &Matrix<T> {
        &self.relations
    }

    pub fn lattice(&self) -> &Lattice<T> {
        &self.lattice
    }

    pub fn generator(&self, i: usize) -> GroupElement<T> {
        let mut coords = vec![T::zero(); self.ngens];
        coords[i] = T::one();
        GroupElement { coords }
    }

    pub fn element(&self, coords: Vec<T>) -> Result<GroupElement<T>> {
        if coords.len() != self.ngens {
            return Err(Error::Dimension {
                what: "group element".into(),
                expected: (self.ngens, 1),
                found: (coords.len(), 1),
            });
        }
        Ok(GroupElement { coords })
    }

    pub fn is_zero_vector(&self, v: &[T]) -> bool {
        self.lattice.contains(v)
    }

    pub fn same_element(&self, a: &GroupElement<T>, b: &GroupElement<T>) -> bool {
        let diff: Vec<T> = a.coords.iter().zip(&b.coords).map(|(x, y)| x.sub_exact(y)).collect();
        self.is_zero_vector(&diff)
    }

    /// True when every column of `m` is zero in this group.
    pub fn kills_columns(&self, m: &Matrix<T>) -> bool {
        self.lattice.contains_columns(m)
    }

    pub fn invariant_factors(&self) -> Invariants<T> {
        let diag = smith_normal_form(&self.relations).diagonal();
        let rank = diag.iter().take_while(|d| !d.is_zero()).count();
        Invariants {
            free_rank: self.ngens - rank,
            torsion: diag.into_iter().take(rank).filter(|d| !d.is_one()).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.lattice.rank() == self.ngens
            && (0..self.ngens).all(|i| self.lattice.basis()[(i, i)].is_one())
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariant_factors().torsion.is_empty()
    }

    pub fn is_isomorphic(&self, other: &AbGroup<T>) -> bool {
        self.invariant_factors() == other.invariant_factors()
    }

    pub fn decompose(&self) -> Decomposition<T> {
        let snf = smith_normal_form(&self.relations);
        let diag = snf.diagonal();
        let rank = diag.iter().take_while(|d| !d.is_zero()).count();
        let torsion_idx: Vec<usize> = (0..rank).filter(|&i| !diag[i].is_one()).collect();
        let free_idx: Vec<usize> = (rank..self.ngens).collect();
        let torsion: Vec<T> = torsion_idx.iter().map(|&i| diag[i].clone()).collect();
        let mut orders = torsion.clone();
        orders.extend(std::iter::repeat_n(T::zero(), free_idx.len()));
        let canonical = AbGroup::diagonal(&orders);
        let idx: Vec<usize> = torsion_idx.into_iter().chain(free_idx).collect();
        let to = snf.u.select_rows(&idx);
        let from = snf.u_inv.select_columns(&idx);
        Decomposition {
            invariants: Invariants { free_rank: self.ngens - rank, torsion },
            to_canonical: AbHom::from_parts(self.clone(), canonical.clone(), to),
            from_canonical: AbHom::from_parts(canonical.clone(), self.clone(), from),
            canonical,
        }
    }

    /// Same generators, relations extended by `extra`; returns the projection.
    pub fn quotient_by(&self, extra: &[GroupElement<T>]) -> (AbGroup<T>, AbHom<T>) {
        let cols: Vec<Vec<T>> = extra.iter().map(|e| e.coords.clone()).collect();
        self.quotient_by_columns(&Matrix::from_columns(self.ngens, &cols))
    }

    pub fn quotient_by_columns(&self, extra: &Matrix<T>) -> (AbGroup<T>, AbHom<T>) {
        let q = AbGroup::new(self.ngens, self.relations.hstack(extra)).expect("row counts agree");
        let proj = AbHom::from_parts(self.clone(), q.clone(), Matrix::identity(self.ngens));
        (q, proj)
    }
}

impl<T: Scalar> fmt::Display for AbGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.invariant_factors())
    }
}

/// Generator index map of a tensor product: `gᵢ ⊗ hⱼ` is generator `i * right + j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorIndex {
    pub left: usize,
    pub right: usize,
}

impl TensorIndex {
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.left && j < self.right);
        i * self.right + j
    }

    pub fn pair(&self, k: usize) -> (usize, usize) {
        (k / self.right, k % self.right)
    }

    pub fn len(&self) -> usize {
        self.left * self.right
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Raw Kronecker presentation of `G ⊗ H`: relations `R_G ⊗ I` and `I ⊗ R_H`.
pub fn tensor_product<T: Scalar>(g: &AbGroup<T>, h: &AbGroup<T>) -> (AbGroup<T>, TensorIndex) {
    let left = g.relations.kronecker(&Matrix::identity(h.ngens));
    let right = Matrix::identity(g.ngens).kronecker(&h.relations);
    let group = AbGroup::new(g.ngens * h.ngens, left.hstack(&right)).expect("kronecker shapes agree");
    (group, TensorIndex { left: g.ngens, right: h.ngens })
}

pub fn direct_sum<T: Scalar>(g: &AbGroup<T>, h: &AbGroup<T>) -> AbGroup<T> {
    AbGroup::new(g.ngens + h.ngens, g.relations.block_diagonal(&h.relations)).expect("block shapes agree")
}

/// Quotient of `G` by the image of `γ - 1`. Fails unless `γ` is a well-defined
/// endomorphism with `γ^p = 1`.
pub fn coinvariants<T: Scalar>(g: &AbGroup<T>, gamma: &AbHom<T>, p: u64) -> Result<(AbGroup<T>, AbHom<T>)> {
    check_action(g, gamma, p)?;
    let moved = gamma.matrix.sub(&Matrix::identity(g.ngens));
    Ok(g.quotient_by_columns(&moved))
}

pub(crate) fn check_action<T: Scalar>(g: &AbGroup<T>, gamma: &AbHom<T>, p: u64) -> Result<()> {
    if gamma.source != *g || gamma.target != *g || !gamma.is_well_defined() {
        return Err(Error::InvalidAction(p));
    }
    let order = usize::try_from(p).map_err(|_| Error::InvalidAction(p))?;
    if !gamma.pow(order).equals(&AbHom::identity(g)) {
        return Err(Error::InvalidAction(p));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct AbHom<T> {
    pub source: AbGroup<T>,
    pub target: AbGroup<T>,
    /// `target.ngens × source.ngens`; column `j` is the image of generator `j`.
    pub matrix: Matrix<T>,
}

#[derive(Clone, Debug)]
pub struct KernelCokernel<T> {
    pub kernel: AbGroup<T>,
    pub kernel_inclusion: AbHom<T>,
    pub cokernel: AbGroup<T>,
    pub cokernel_projection: AbHom<T>,
}

impl<T: Scalar> AbHom<T> {
    pub fn new(source: AbGroup<T>, target: AbGroup<T>, matrix: Matrix<T>) -> Result<Self> {
        let expected = (target.ngens, source.ngens);
        if matrix.shape() != expected {
            return Err(Error::Dimension { what: "homomorphism matrix".into(), expected, found: matrix.shape() });
        }
        Ok(AbHom { source, target, matrix })
    }

    pub(crate) fn from_parts(source: AbGroup<T>, target: AbGroup<T>, matrix: Matrix<T>) -> Self {
        debug_assert_eq!(matrix.shape(), (target.ngens, source.ngens));
        AbHom { source, target, matrix }
    }

    pub fn source(&self) -> &AbGroup<T> {
        &self.source
    }

    pub fn target(&self) -> &AbGroup<T> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn identity(g: &AbGroup<T>) -> Self {
        Self::from_parts(g.clone(), g.clone(), Matrix::identity(g.ngens))
    }

    pub fn zero(source: &AbGroup<T>, target: &AbGroup<T>) -> Self {
        Self::from_parts(source.clone(), target.clone(), Matrix::zeros(target.ngens, source.ngens))
    }

    pub fn apply(&self, x: &GroupElement<T>) -> GroupElement<T> {
        GroupElement { coords: self.matrix.mul_vec(&x.coords) }
    }

    /// The relation lattice of the source maps into that of the target.
    pub fn is_well_defined(&self) -> bool {
        self.target.kills_columns(&self.matrix.mul(&self.source.relations))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AbHom<T>) -> AbHom<T> {
        assert_eq!(inner.target.ngens, self.source.ngens, "composition of incompatible homomorphisms");
        Self::from_parts(inner.source.clone(), self.target.clone(), self.matrix.mul(&inner.matrix))
    }

    pub fn pow(&self, k: usize) -> AbHom<T> {
        Self::from_parts(self.source.clone(), self.target.clone(), self.matrix.pow(k))
    }

    /// Equality as maps of groups: the columns of the difference vanish in the target.
    pub fn equals(&self, other: &AbHom<T>) -> bool {
        self.matrix.shape() == other.matrix.shape()
            && self.target.kills_columns(&self.matrix.sub(&other.matrix))
    }

    /// `{x ∈ Z^n : f(x) ∈ L_target}`, a lattice containing the source relations.
    pub fn lifted_kernel(&self) -> Lattice<T> {
        let stacked = self.matrix.hstack(self.target.relations());
        let k = kernel_basis(&stacked);
        let top: Vec<usize> = (0..self.source.ngens).collect();
        Lattice::spanned_by(&k.select_rows(&top))
    }

    /// Image plus target relations, as a lattice in target coordinates.
    pub fn lifted_image(&self) -> Lattice<T> {
        Lattice::spanned_by(&self.matrix.hstack(self.target.relations()))
    }

    pub fn kernel_and_cokernel(&self) -> KernelCokernel<T> {
        let lifted = self.lifted_kernel();
        let basis = lifted.basis().clone();
        let rel_cols: Vec<Vec<T>> = self
            .source
            .relations
            .columns()
            .iter()
            .map(|c| lifted.coordinates(c).expect("source relations lie in the kernel of a well-defined map"))
            .collect();
        let kernel = AbGroup::new(basis.cols(), Matrix::from_columns(basis.cols(), &rel_cols)).expect("shapes agree");
        let kernel_inclusion = AbHom::from_parts(kernel.clone(), self.source.clone(), basis);
        let (cokernel, cokernel_projection) = self.target.quotient_by_columns(&self.matrix);
        KernelCokernel { kernel, kernel_inclusion, cokernel, cokernel_projection }
    }

    pub fn is_injective(&self) -> bool {
        self.source.lattice().contains_lattice(&self.lifted_kernel())
    }

    pub fn is_surjective(&self) -> bool {
        let image = self.lifted_image();
        image.rank() == self.target.ngens && (0..self.target.ngens).all(|i| image.basis()[(i, i)].is_one())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_surjective() && self.is_injective()
    }

    /// Inverse of an isomorphism, `None` otherwise.
    pub fn inverse(&self) -> Option<AbHom<T>> {
        if !self.is_isomorphism() {
            return None;
        }
        let stacked = self.matrix.hstack(self.target.relations());
        let n = self.source.ngens;
        let mut cols = Vec::with_capacity(self.target.ngens);
        for j in 0..self.target.ngens {
            let z = solve_linear(&stacked, &self.target.generator(j).coords)?;
            cols.push(z[..n].to_vec());
        }
        Some(Self::from_parts(self.target.clone(), self.source.clone(), Matrix::from_columns(n, &cols)))
    }
}
