//! Exact gamma-matrix representations and the objects built from them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::exactpoly::{Coeff, PolyExpr, Rational, Universe};
use crate::minkowski::Dim;
use crate::symbols;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("a reducible representation is only offered in 2+1 dimensions")]
    ReducibleUnavailable,
    #[error("the alternate representation is only offered in 2+1 dimensions")]
    AlternateUnavailable,
    #[error("no chirality matrix exists for the irreducible 2+1 representation")]
    NoChirality,
    #[error("spacetime index {0} out of range for {1}")]
    IndexOutOfRange(usize, Dim),
}

/// Square matrix of exact polynomials.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpinorMatrix {
    n: usize,
    entries: Vec<PolyExpr>,
}

impl SpinorMatrix {
    pub fn zero(n: usize, u: &Arc<Universe>) -> Self {
        SpinorMatrix { n, entries: vec![PolyExpr::zero(u); n * n] }
    }

    pub fn identity(n: usize, u: &Arc<Universe>) -> Self {
        let mut m = Self::zero(n, u);
        for i in 0..n {
            m.entries[i * n + i] = PolyExpr::one(u);
        }
        m
    }

    pub fn from_entries(n: usize, entries: Vec<PolyExpr>) -> Self {
        assert_eq!(entries.len(), n * n, "matrix needs n*n entries");
        SpinorMatrix { n, entries }
    }

    /// Builds a constant matrix from `(re, im)` integer pairs, row-major.
    pub fn from_ints(n: usize, vals: &[(i64, i64)]) -> Self {
        let u = symbols::universe();
        let entries = vals
            .iter()
            .map(|&(re, im)| PolyExpr::constant(u, Coeff::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()))))
            .collect();
        Self::from_entries(n, entries)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &PolyExpr {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: PolyExpr) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[PolyExpr] {
        &self.entries
    }

    fn universe(&self) -> &Arc<Universe> {
        self.entries[0].universe()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(PolyExpr::is_zero)
    }

    pub fn map(&self, f: impl Fn(&PolyExpr) -> PolyExpr) -> SpinorMatrix {
        SpinorMatrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &PolyExpr) -> SpinorMatrix {
        self.map(|e| e * c)
    }

    /// Conjugate transpose; symbols are real.
    pub fn dagger(&self) -> SpinorMatrix {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.entries[i * n + j] = self.entries[j * n + i].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> PolyExpr {
        (0..self.n).fold(PolyExpr::zero(self.universe()), |acc, i| acc + self.get(i, i))
    }

    pub fn commutator(&self, other: &SpinorMatrix) -> SpinorMatrix {
        self * other - other * self
    }

    pub fn anticommutator(&self, other: &SpinorMatrix) -> SpinorMatrix {
        self * other + other * self
    }

    pub fn is_hermitian(&self) -> bool {
        &self.dagger() == self
    }

    pub fn is_antihermitian(&self) -> bool {
        self.dagger() == -self
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &SpinorMatrix) -> SpinorMatrix {
        let n = self.n + other.n;
        let mut out = SpinorMatrix::zero(n, self.universe());
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                out.set(self.n + i, self.n + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Rewrites every entry with `f`, such as a substitution.
    pub fn try_map<E>(&self, f: impl Fn(&PolyExpr) -> Result<PolyExpr, E>) -> Result<SpinorMatrix, E> {
        let entries = self.entries.iter().map(f).collect::<Result<_, _>>()?;
        Ok(SpinorMatrix { n: self.n, entries })
    }
}

impl fmt::Display for SpinorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let r: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", r.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Debug for SpinorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpinorMatrix{self}")
    }
}

impl Add for &SpinorMatrix {
    type Output = SpinorMatrix;
    fn add(self, rhs: &SpinorMatrix) -> SpinorMatrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        SpinorMatrix { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &SpinorMatrix {
    type Output = SpinorMatrix;
    fn sub(self, rhs: &SpinorMatrix) -> SpinorMatrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        SpinorMatrix { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &SpinorMatrix {
    type Output = SpinorMatrix;
    fn mul(self, rhs: &SpinorMatrix) -> SpinorMatrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        let n = self.n;
        let mut out = SpinorMatrix::zero(n, self.universe());
        for i in 0..n {
            for j in 0..n {
                let mut acc = PolyExpr::zero(self.universe());
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = rhs.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
                out.entries[i * n + j] = acc;
            }
        }
        out
    }
}

impl Neg for &SpinorMatrix {
    type Output = SpinorMatrix;
    fn neg(self) -> SpinorMatrix {
        self.map(|e| -e)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<SpinorMatrix> for SpinorMatrix {
            type Output = SpinorMatrix;
            fn $m(self, rhs: SpinorMatrix) -> SpinorMatrix {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&SpinorMatrix> for SpinorMatrix {
            type Output = SpinorMatrix;
            fn $m(self, rhs: &SpinorMatrix) -> SpinorMatrix {
                (&self).$m(rhs)
            }
        }
        impl $tr<SpinorMatrix> for &SpinorMatrix {
            type Output = SpinorMatrix;
            fn $m(self, rhs: SpinorMatrix) -> SpinorMatrix {
                self.$m(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for SpinorMatrix {
    type Output = SpinorMatrix;
    fn neg(self) -> SpinorMatrix {
        -&self
    }
}

/// Which concrete representation to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepChoice {
    /// 2x2 in (1+1) and (2+1), Dirac 4x4 in (3+1).
    Standard,
    /// (2+1) only: gamma^2 = -i sigma_2, the inequivalent 2x2 choice.
    Alternate,
    /// (2+1) only: block sum of the standard and alternate 2x2 representations.
    Reducible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaRep {
    dim: Dim,
    choice: RepChoice,
    gammas: Vec<SpinorMatrix>,
    gamma5: Option<SpinorMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derived {
    pub beta: SpinorMatrix,
    pub alphas: Vec<SpinorMatrix>,
}

fn pauli(k: usize) -> SpinorMatrix {
    match k {
        0 => SpinorMatrix::from_ints(2, &[(1, 0), (0, 0), (0, 0), (1, 0)]),
        1 => SpinorMatrix::from_ints(2, &[(0, 0), (1, 0), (1, 0), (0, 0)]),
        2 => SpinorMatrix::from_ints(2, &[(0, 0), (0, -1), (0, 1), (0, 0)]),
        3 => SpinorMatrix::from_ints(2, &[(1, 0), (0, 0), (0, 0), (-1, 0)]),
        _ => unreachable!(),
    }
}

fn block(a: &SpinorMatrix, b: &SpinorMatrix, c: &SpinorMatrix, d: &SpinorMatrix) -> SpinorMatrix {
    let n = a.size();
    let mut out = SpinorMatrix::zero(2 * n, symbols::universe());
    for (bi, bj, m) in [(0, 0, a), (0, 1, b), (1, 0, c), (1, 1, d)] {
        for i in 0..n {
            for j in 0..n {
                out.set(bi * n + i, bj * n + j, m.get(i, j).clone());
            }
        }
    }
    out
}

/// Convenience wrapper: the standard representation, or the reducible one.
pub fn make_rep(dim: Dim, reducible: bool) -> Result<GammaRep, CliffordError> {
    GammaRep::new(dim, if reducible { RepChoice::Reducible } else { RepChoice::Standard })
}

impl GammaRep {
    pub fn new(dim: Dim, choice: RepChoice) -> Result<GammaRep, CliffordError> {
        let i = symbols::i();
        let s = |k| pauli(k);
        let (gammas, gamma5) = match (dim, choice) {
            (Dim::D1, RepChoice::Standard) => {
                let g = vec![s(3), s(1).scale(&i)];
                let g5 = &g[0] * &g[1];
                (g, Some(g5))
            }
            (Dim::D2, RepChoice::Standard) => (vec![s(3), s(1).scale(&i), s(2).scale(&i)], None),
            (Dim::D2, RepChoice::Alternate) => (vec![s(3), s(1).scale(&i), s(2).scale(&-&i)], None),
            (Dim::D2, RepChoice::Reducible) => {
                let a = [s(3), s(1).scale(&i), s(2).scale(&i)];
                let b = [s(3), s(1).scale(&i), s(2).scale(&-&i)];
                let g = a.iter().zip(&b).map(|(x, y)| x.direct_sum(y)).collect();
                let z = SpinorMatrix::zero(2, symbols::universe());
                let g5 = block(&z, &s(2), &s(2), &z);
                (g, Some(g5))
            }
            (Dim::D3, RepChoice::Standard) => {
                let id = s(0);
                let z = SpinorMatrix::zero(2, symbols::universe());
                let mut g = vec![block(&id, &z, &z, &-&id)];
                for k in 1..=3 {
                    g.push(block(&z, &s(k), &-&s(k), &z));
                }
                let g5 = (&(&(&g[0] * &g[1]) * &g[2]) * &g[3]).scale(&i);
                (g, Some(g5))
            }
            (_, RepChoice::Reducible) => return Err(CliffordError::ReducibleUnavailable),
            (_, RepChoice::Alternate) => return Err(CliffordError::AlternateUnavailable),
        };
        Ok(GammaRep { dim, choice, gammas, gamma5 })
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn choice(&self) -> RepChoice {
        self.choice
    }

    pub fn size(&self) -> usize {
        self.gammas[0].size()
    }

    pub fn gamma(&self, mu: usize) -> Result<&SpinorMatrix, CliffordError> {
        self.gammas.get(mu).ok_or(CliffordError::IndexOutOfRange(mu, self.dim))
    }

    pub fn gammas(&self) -> &[SpinorMatrix] {
        &self.gammas
    }

    pub fn identity(&self) -> SpinorMatrix {
        SpinorMatrix::identity(self.size(), symbols::universe())
    }

    pub fn zero(&self) -> SpinorMatrix {
        SpinorMatrix::zero(self.size(), symbols::universe())
    }

    /// beta = gamma^0, alpha_j = gamma^0 gamma^j.
    pub fn derived(&self) -> Derived {
        let beta = self.gammas[0].clone();
        let alphas = self.gammas[1..].iter().map(|g| &beta * g).collect();
        Derived { beta, alphas }
    }

    pub fn beta(&self) -> SpinorMatrix {
        self.gammas[0].clone()
    }

    pub fn alpha(&self, j: usize) -> Result<SpinorMatrix, CliffordError> {
        if j == 0 || j > self.dim.spatial() {
            return Err(CliffordError::IndexOutOfRange(j, self.dim));
        }
        Ok(&self.gammas[0] * &self.gammas[j])
    }

    /// sigma^{mu nu} = (i/2)[gamma^mu, gamma^nu].
    pub fn sigma(&self, mu: usize, nu: usize) -> Result<SpinorMatrix, CliffordError> {
        let a = self.gamma(mu)?;
        let b = self.gamma(nu)?;
        Ok(a.commutator(b).scale(&symbols::poly("1/2i")))
    }

    pub fn gamma5(&self) -> Result<&SpinorMatrix, CliffordError> {
        self.gamma5.as_ref().ok_or(CliffordError::NoChirality)
    }

    /// (P_R, P_L) = ((I + gamma5)/2, (I - gamma5)/2).
    pub fn chiral_projectors(&self) -> Result<(SpinorMatrix, SpinorMatrix), CliffordError> {
        let g5 = self.gamma5()?;
        let half = symbols::rat(1, 2);
        let id = self.identity();
        Ok(((&id + g5).scale(&half), (&id - g5).scale(&half)))
    }
}

/// Free function form of [`GammaRep::sigma`].
pub fn sigma(rep: &GammaRep, mu: usize, nu: usize) -> Result<SpinorMatrix, CliffordError> {
    rep.sigma(mu, nu)
}

/// Free function form of [`GammaRep::chiral_projectors`].
pub fn chiral_projectors(rep: &GammaRep) -> Result<(SpinorMatrix, SpinorMatrix), CliffordError> {
    rep.chiral_projectors()
}
