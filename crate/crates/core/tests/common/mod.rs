//! Shared generators and oracles for the integration tests.
#![allow(dead_code)]

use mackey::abgroup::AbGroup;
use mackey::intlin::{Lattice, Matrix};
use mackey::mackey::{
    burnside, constant_z, fixed_point, orbit, permutation, twisted_burnside, zero, CpModule, GSet, MackeyFunctor, Prime,
};
use mackey::Scalar;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

pub fn mat<T: Scalar>(rows: usize, cols: usize, entries: &[i64]) -> Matrix<T> {
    Matrix::from_vec(rows, cols, entries.iter().map(|&x| T::from_i64_exact(x)).collect())
}

/// An indecomposable-ish block of an integral `C_p`-representation.
fn action_block<T: Scalar>(rng: &mut TestRng, p: u64, size: usize) -> Matrix<T> {
    let options: Vec<Vec<i64>> = match (p, size) {
        (2, 1) => vec![vec![1], vec![-1]],
        (_, 1) => vec![vec![1]],
        (2, 2) => vec![vec![0, 1, 1, 0], vec![1, 1, 0, -1], vec![0, -1, -1, 0], vec![-1, 0, 0, 1]],
        (3, 2) => vec![vec![0, -1, 1, -1]],
        (3, 3) => vec![vec![0, 0, 1, 1, 0, 0, 0, 1, 0]],
        _ => vec![],
    };
    match options.choose(rng) {
        Some(e) => mat(size, size, e),
        None => Matrix::identity(size),
    }
}

/// `U γ U⁻¹` for a product of a few random elementary matrices `U`.
fn conjugate<T: Scalar>(rng: &mut TestRng, gamma: &Matrix<T>) -> Matrix<T> {
    let n = gamma.rows();
    if n < 2 {
        return gamma.clone();
    }
    let mut u = Matrix::<T>::identity(n);
    let mut u_inv = Matrix::<T>::identity(n);
    for _ in 0..rng.gen_range(0..3) {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = rng.gen_range(-1i64..=1);
        let mut e = Matrix::<T>::identity(n);
        let mut e_inv = Matrix::<T>::identity(n);
        e[(i, j)] = T::from_i64_exact(c);
        e_inv[(i, j)] = T::from_i64_exact(-c);
        u = e.mul(&u);
        u_inv = u_inv.mul(&e_inv);
    }
    u.mul(gamma).mul(&u_inv)
}

/// A random valid action on `Z^n` for the prime `p`.
pub fn random_action<T: Scalar>(rng: &mut TestRng, p: u64, n: usize) -> Matrix<T> {
    let mut gamma = Matrix::<T>::zeros(0, 0);
    let mut left = n;
    while left > 0 {
        let size = rng.gen_range(1..=left.min(3));
        gamma = gamma.block_diagonal(&action_block(rng, p, size));
        left -= size;
    }
    conjugate(rng, &gamma)
}

fn random_vector<T: Scalar>(rng: &mut TestRng, n: usize, range: i64) -> Vec<T> {
    (0..n).map(|_| T::from_i64_exact(rng.gen_range(-range..=range))).collect()
}

/// A random `C_p`-module: free of rank ≤ 3 modulo the `γ`-orbits of a few
/// random vectors with entries in `[-4, 4]`.
pub fn random_module<T: Scalar>(rng: &mut TestRng, p: Prime) -> CpModule<T> {
    let n = if rng.gen_bool(0.1) { 0 } else { rng.gen_range(1..=3) };
    let gamma = random_action::<T>(rng, p.get(), n);
    let mut rel: Vec<Vec<T>> = Vec::new();
    if n > 0 {
        let count = [0, 0, 0, 0, 1, 1, 1, 2][rng.gen_range(0..8)];
        for _ in 0..count {
            let mut v = random_vector::<T>(rng, n, 4);
            for _ in 0..p.order() {
                rel.push(v.clone());
                v = gamma.mul_vec(&v);
            }
        }
    }
    let group = AbGroup::new(n, Matrix::from_columns(n, &rel)).unwrap();
    CpModule::new(p, group, gamma).expect("orbit relations make the action well-defined")
}

/// A random valid Mackey functor with at most 3 generators per tier (after
/// simplification). Top generators are transfers `t_j` of the bottom
/// generators plus free extras restricting to fixed elements; relations are
/// forced by the axioms, plus random elements of the kernel of `res`.
pub fn random_functor<T: Scalar>(rng: &mut TestRng, p: Prime) -> MackeyFunctor<T> {
    loop {
        if let Some(m) = try_random_functor(rng, p) {
            return m;
        }
    }
}

fn try_random_functor<T: Scalar>(rng: &mut TestRng, p: Prime) -> Option<MackeyFunctor<T>> {
    let module = random_module::<T>(rng, p);
    let bottom = module.group.clone();
    let gamma = module.action.clone();
    let nb = bottom.ngens();
    let norm = gamma.power_sum(p.order());

    let moved = gamma.sub(&Matrix::identity(nb));
    let fixed = mackey::abgroup::AbHom::new(bottom.clone(), bottom.clone(), moved.clone()).unwrap().lifted_kernel();
    let extras = if fixed.rank() == 0 { 0 } else { rng.gen_range(0..=2) };
    let mut res_cols: Vec<Vec<T>> = norm.columns();
    for _ in 0..extras {
        let coeffs = random_vector::<T>(rng, fixed.rank(), 2);
        res_cols.push(fixed.basis().mul_vec(&coeffs));
    }
    let nt = nb + extras;
    let res = Matrix::from_columns(nb, &res_cols);
    let tr = Matrix::<T>::identity(nb).vstack(&Matrix::zeros(extras, nb));

    // tr γ = tr and tr well-defined
    let forced = tr.mul(&moved).hstack(&tr.mul(bottom.relations()));
    let pre_top = AbGroup::new(nt, forced.clone()).unwrap();
    let res_kernel = mackey::abgroup::AbHom::new(pre_top, bottom.clone(), res.clone()).unwrap().lifted_kernel();
    let mut extra_rel: Vec<Vec<T>> = Vec::new();
    if res_kernel.rank() > 0 {
        for _ in 0..rng.gen_range(0..=2) {
            let coeffs = random_vector::<T>(rng, res_kernel.rank(), 2);
            extra_rel.push(res_kernel.basis().mul_vec(&coeffs));
        }
    }
    let relations = forced.hstack(&Matrix::from_columns(nt, &extra_rel));
    let top = AbGroup::new(nt, relations).unwrap();
    let m = MackeyFunctor::new(p, top, bottom, gamma, res, tr).unwrap();
    assert!(m.check_axioms().passed(), "generator produced an invalid functor: {:?}", m.check_axioms());
    let (simple, _) = m.simplified();
    (simple.top().ngens() <= 3 && simple.bottom().ngens() <= 3).then_some(simple)
}

/// Every constructor, at `p`, including a few modules and G-sets.
pub fn constructor_outputs<T: Scalar>(p: Prime) -> Vec<(String, MackeyFunctor<T>)> {
    let mut out = vec![
        ("burnside".to_string(), burnside::<T>(p)),
        ("constant".to_string(), constant_z(p)),
        ("zero".to_string(), zero(p)),
    ];
    for d in [-3i64, 0, 2, 5] {
        out.push((format!("twisted({d})"), twisted_burnside(p, T::from_i64_exact(d))));
    }
    for (f, b) in [(0, 1), (1, 1), (2, 0), (0, 2)] {
        out.push((format!("permutation({f},{b})"), permutation(p, GSet::new(f, b))));
    }
    let regular = CpModule::<T>::permutation(p, GSet::new(0, 1));
    out.push(("orbit(Z[C_p])".to_string(), orbit(p, &regular)));
    out.push(("fixed_point(Z[C_p])".to_string(), fixed_point(p, &regular)));
    let torsion = CpModule::trivial_action(AbGroup::<T>::cyclic(T::from_i64_exact(4)));
    out.push(("fixed_point(Z/4)".to_string(), fixed_point(p, &torsion)));
    out.push(("orbit(Z/4)".to_string(), orbit(p, &torsion)));
    if p.get() == 2 {
        let sign = CpModule::new(p, AbGroup::<T>::free(1), mat(1, 1, &[-1])).unwrap();
        out.push(("fixed_point(Z_-)".to_string(), fixed_point(p, &sign)));
        out.push(("orbit(Z_-)".to_string(), orbit(p, &sign)));
    }
    out
}

/// `d_k = gcd of k×k minors / gcd of (k-1)×(k-1) minors`, by brute force.
pub fn minor_gcd_invariants(a: &Matrix<i64>) -> Vec<i64> {
    use num_integer::Integer;
    let (r, c) = a.shape();
    let mut gcds = vec![1i64];
    for k in 1..=r.min(c) {
        let mut g = 0i64;
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let minor = a.select_rows(&rows).select_columns(&cols);
                g = g.gcd(&mackey::intlin::determinant(&minor));
            }
        }
        if g == 0 {
            break;
        }
        gcds.push(g);
    }
    gcds.windows(2).map(|w| w[1] / w[0]).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn random_matrix(rng: &mut TestRng, max_dim: usize, range: i64) -> Matrix<i64> {
    let r = rng.gen_range(0..=max_dim);
    let c = rng.gen_range(0..=max_dim);
    Matrix::from_vec(r, c, (0..r * c).map(|_| rng.gen_range(-range..=range)).collect())
}

pub fn same_lattice<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> bool {
    Lattice::spanned_by(a) == Lattice::spanned_by(b)
}
