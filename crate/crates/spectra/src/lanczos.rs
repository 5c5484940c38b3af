//! Lanczos iteration with full reorthogonalization.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

pub(crate) fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub(crate) fn norm(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

pub(crate) fn normalize(a: &mut [Complex64]) {
    let n = norm(a);
    a.iter_mut().for_each(|x| *x /= n);
}

/// Ritz values and vectors of a Hermitian operator over a Krylov space.
pub(crate) struct Ritz {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<Complex64>>,
}

/// Runs up to `steps` Lanczos steps from `start`, stopping early on breakdown
/// (the Krylov space became invariant).
pub(crate) fn lanczos(
    apply: &mut dyn FnMut(&[Complex64], &mut [Complex64]),
    start: &[Complex64],
    steps: usize,
) -> Ritz {
    let n = start.len();
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(steps);
    let mut alpha = Vec::with_capacity(steps);
    let mut beta: Vec<f64> = Vec::with_capacity(steps);
    let mut v = start.to_vec();
    normalize(&mut v);
    let scale = norm(start).max(1.0);
    let mut w = vec![ZERO; n];
    for _ in 0..steps.min(n) {
        apply(&v, &mut w);
        let a = dot(&v, &w).re;
        basis.push(v.clone());
        alpha.push(a);
        // two passes of classical Gram-Schmidt against the whole basis
        for _ in 0..2 {
            for q in &basis {
                let c = dot(q, &w);
                w.iter_mut().zip(q).for_each(|(wi, qi)| *wi -= c * qi);
            }
        }
        let b = norm(&w);
        if b <= 1e-12 * scale * (1.0 + a.abs()) {
            break;
        }
        beta.push(b);
        v = w.iter().map(|x| x / b).collect();
    }
    let k = alpha.len();
    let t = DMatrix::from_fn(k, k, |i, j| {
        if i == j {
            alpha[i]
        } else if i.abs_diff(j) == 1 {
            beta[i.min(j)]
        } else {
            0.0
        }
    });
    let eig = SymmetricEigen::new(t);
    let mut values = Vec::with_capacity(k);
    let mut vectors = Vec::with_capacity(k);
    for c in 0..k {
        let s = eig.eigenvectors.column(c);
        let mut y = vec![ZERO; n];
        for (q, &sq) in basis.iter().zip(s.iter()) {
            y.iter_mut().zip(q).for_each(|(yi, qi)| *yi += qi * sq);
        }
        normalize(&mut y);
        values.push(eig.eigenvalues[c]);
        vectors.push(y);
    }
    Ritz { values, vectors }
}
