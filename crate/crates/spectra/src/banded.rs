//! Complex band matrices and their LU factorization with partial pivoting.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::SpectraError;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Square matrix with equal lower and upper half-bandwidth `b`.
#[derive(Debug, Clone, PartialEq)]
pub struct BandMatrix {
    n: usize,
    b: usize,
    /// Row `i` holds columns `i - b ..= i + b`.
    data: Vec<Complex64>,
}

impl BandMatrix {
    pub fn zeros(n: usize, b: usize) -> Self {
        BandMatrix { n, b, data: vec![ZERO; n * (2 * b + 1)] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn half_bandwidth(&self) -> usize {
        self.b
    }

    fn slot(&self, i: usize, j: usize) -> Option<usize> {
        if i >= self.n || j >= self.n || i.abs_diff(j) > self.b {
            return None;
        }
        Some(i * (2 * self.b + 1) + (j + self.b - i))
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.slot(i, j).map_or(ZERO, |s| self.data[s])
    }

    /// Adds `v` at (i, j); panics outside the band.
    pub fn add(&mut self, i: usize, j: usize, v: Complex64) {
        let s = self.slot(i, j).expect("entry inside the band");
        self.data[s] += v;
    }

    fn cols(&self, i: usize) -> std::ops::Range<usize> {
        i.saturating_sub(self.b)..(i + self.b + 1).min(self.n)
    }

    pub fn matvec(&self, x: &[Complex64], y: &mut [Complex64]) {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = self.cols(i).map(|j| self.data[i * (2 * self.b + 1) + j + self.b - i] * x[j]).sum();
        }
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j))
    }

    /// `max |A_ij - conj(A_ji)|`.
    pub fn hermiticity_residual(&self) -> f64 {
        let mut r: f64 = 0.0;
        for i in 0..self.n {
            for j in self.cols(i) {
                r = r.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        r
    }

    /// `A - sigma I`.
    pub fn shifted(&self, sigma: f64) -> BandMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            out.add(i, i, Complex64::new(-sigma, 0.0));
        }
        out
    }

    pub fn lu(&self) -> Result<BandLu, SpectraError> {
        BandLu::factor(self)
    }
}

/// `P A = L U` for a band matrix; U gains up to `b` extra superdiagonals from pivoting.
#[derive(Debug, Clone)]
pub struct BandLu {
    n: usize,
    kl: usize,
    ku: usize,
    /// Row `i` holds columns `i - kl ..= i + ku`.
    rows: Vec<Complex64>,
    /// Multipliers of step k, for rows k+1 ..= k+kl.
    lower: Vec<Complex64>,
    piv: Vec<usize>,
}

impl BandLu {
    fn width(&self) -> usize {
        self.kl + self.ku + 1
    }

    fn at(&self, i: usize, j: usize) -> usize {
        i * self.width() + (j + self.kl - i)
    }

    fn factor(a: &BandMatrix) -> Result<BandLu, SpectraError> {
        let (n, b) = (a.n, a.b);
        let mut lu = BandLu { n, kl: b, ku: 2 * b, rows: vec![], lower: vec![ZERO; n * b], piv: vec![0; n] };
        lu.rows = vec![ZERO; n * lu.width()];
        for i in 0..n {
            for j in a.cols(i) {
                let s = lu.at(i, j);
                lu.rows[s] = a.get(i, j);
            }
        }
        for k in 0..n {
            let last = (k + lu.kl).min(n - 1);
            let p = (k..=last)
                .max_by(|&x, &y| lu.rows[lu.at(x, k)].norm().total_cmp(&lu.rows[lu.at(y, k)].norm()))
                .unwrap_or(k);
            lu.piv[k] = p;
            let hi = (k + lu.ku).min(n - 1);
            if p != k {
                for j in k..=hi {
                    let (sk, sp) = (lu.at(k, j), lu.at(p, j));
                    lu.rows.swap(sk, sp);
                }
            }
            let pivot = lu.rows[lu.at(k, k)];
            if pivot.norm() == 0.0 {
                return Err(SpectraError::Singular);
            }
            for i in k + 1..=last {
                let l = lu.rows[lu.at(i, k)] / pivot;
                lu.lower[k * lu.kl + (i - k - 1)] = l;
                let s = lu.at(i, k);
                lu.rows[s] = ZERO;
                if l == ZERO {
                    continue;
                }
                for j in k + 1..=hi {
                    let u = lu.rows[lu.at(k, j)];
                    let s = lu.at(i, j);
                    lu.rows[s] -= l * u;
                }
            }
        }
        Ok(lu)
    }

    /// Solves `A x = rhs` in place.
    pub fn solve(&self, x: &mut [Complex64]) {
        let n = self.n;
        for k in 0..n {
            x.swap(k, self.piv[k]);
            let xk = x[k];
            for i in k + 1..=(k + self.kl).min(n - 1) {
                x[i] -= self.lower[k * self.kl + (i - k - 1)] * xk;
            }
        }
        for k in (0..n).rev() {
            let mut s = x[k];
            for j in k + 1..=(k + self.ku).min(n - 1) {
                s -= self.rows[self.at(k, j)] * x[j];
            }
            x[k] = s / self.rows[self.at(k, k)];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn solve_matches_matvec() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let (n, b) = (40, 3);
        let mut a = BandMatrix::zeros(n, b);
        for i in 0..n {
            for j in a.cols(i) {
                a.add(i, j, Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
            }
        }
        let x: Vec<_> = (0..n).map(|k| Complex64::new(k as f64, 1.0)).collect();
        let mut y = vec![ZERO; n];
        a.matvec(&x, &mut y);
        a.lu().unwrap().solve(&mut y);
        let err = x.iter().zip(&y).map(|(p, q)| (p - q).norm()).fold(0.0, f64::max);
        assert!(err < 1e-9, "{err}");
    }
}
