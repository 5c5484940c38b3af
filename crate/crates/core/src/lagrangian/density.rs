use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::clifford::SpinorMatrix;
use crate::exactpoly::PolyExpr;
use crate::minkowski::Dim;
use crate::symbols;

/// Formal phase `exp(i * angle)`; products add angles.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Phase(pub PolyExpr);

impl Phase {
    pub fn identity() -> Phase {
        Phase(symbols::zero())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_zero()
    }

    pub fn mul(&self, other: &Phase) -> Phase {
        Phase(&self.0 + &other.0)
    }

    pub fn conj(&self) -> Phase {
        Phase(-&self.0)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "exp(i*{})", self.0)
        } else {
            write!(f, "exp(i*({}))", self.0)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chirality {
    Full,
    R,
    L,
}

impl Chirality {
    fn suffix(self) -> &'static str {
        match self {
            Chirality::Full => "",
            Chirality::R => "_R",
            Chirality::L => "_L",
        }
    }
}

/// What sits between the kernel matrix and the right field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Action {
    /// `psi^dag M psi`, M possibly coordinate dependent.
    Plain,
    /// `psi^dag M d_mu psi`.
    Derivative(usize),
    /// `psi^dag M A_mu psi`.
    GaugeField(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ActionKind {
    Plain,
    Derivative,
    GaugeField,
}

impl Action {
    pub fn kind(self) -> ActionKind {
        match self {
            Action::Plain => ActionKind::Plain,
            Action::Derivative(_) => ActionKind::Derivative,
            Action::GaugeField(_) => ActionKind::GaugeField,
        }
    }
}

/// Identifies a bilinear `phase * psi_left^dag M action psi_right`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey {
    pub phase: Phase,
    pub left: Chirality,
    pub action: Action,
    pub right: Chirality,
}

impl TermKey {
    pub fn plain(left: Chirality, action: Action, right: Chirality) -> TermKey {
        TermKey { phase: Phase::identity(), left, action, right }
    }
}

/// A Lagrangian density in canonical form.
///
/// Fermion bilinears are stored in `psi^dag` form (a `psibar K` term is kept as
/// `psi^dag gamma^0 K`), keyed by phase, chiralities and action, with the kernel
/// matrices of equal keys summed. The gauge-kinetic part is a set of
/// `coeff * (F + shift)^2` entries keyed by the accumulated shift of F.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangianDensity {
    dim: Dim,
    size: usize,
    bilinears: BTreeMap<TermKey, SpinorMatrix>,
    gauge_kinetic: BTreeMap<Vec<PolyExpr>, PolyExpr>,
}

impl LagrangianDensity {
    pub fn new(dim: Dim, size: usize) -> Self {
        LagrangianDensity { dim, size, bilinears: BTreeMap::new(), gauge_kinetic: BTreeMap::new() }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn spinor_size(&self) -> usize {
        self.size
    }

    pub fn bilinears(&self) -> &BTreeMap<TermKey, SpinorMatrix> {
        &self.bilinears
    }

    pub fn gauge_kinetic(&self) -> &BTreeMap<Vec<PolyExpr>, PolyExpr> {
        &self.gauge_kinetic
    }

    pub fn get(&self, key: &TermKey) -> Option<&SpinorMatrix> {
        self.bilinears.get(key)
    }

    pub fn add_bilinear(&mut self, key: TermKey, m: SpinorMatrix) {
        assert_eq!(m.size(), self.size, "kernel size must match spinor size");
        let sum = match self.bilinears.remove(&key) {
            Some(old) => &old + &m,
            None => m,
        };
        if !sum.is_zero() {
            self.bilinears.insert(key, sum);
        }
    }

    /// Adds `coeff * (F + shift)^2`, with `shift` the flattened (d+1)^2 correction.
    pub fn add_gauge_kinetic(&mut self, shift: Vec<PolyExpr>, coeff: PolyExpr) {
        let sum = match self.gauge_kinetic.remove(&shift) {
            Some(old) => old + coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.gauge_kinetic.insert(shift, sum);
        }
    }

    /// The -1/4 F_{mu nu} F^{mu nu} term.
    pub fn add_yang_mills(&mut self) {
        let n = self.dim.spacetime();
        self.add_gauge_kinetic(vec![symbols::zero(); n * n], symbols::rat(-1, 4));
    }

    pub fn is_zero(&self) -> bool {
        self.bilinears.is_empty() && self.gauge_kinetic.is_empty()
    }

    pub fn len(&self) -> usize {
        self.bilinears.len() + self.gauge_kinetic.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn scaled(&self, c: &PolyExpr) -> LagrangianDensity {
        let mut out = LagrangianDensity::new(self.dim, self.size);
        for (k, m) in &self.bilinears {
            out.add_bilinear(k.clone(), m.scale(c));
        }
        for (s, v) in &self.gauge_kinetic {
            out.add_gauge_kinetic(s.clone(), v * c);
        }
        out
    }

    pub fn plus(&self, other: &LagrangianDensity) -> LagrangianDensity {
        let mut out = self.clone();
        for (k, m) in &other.bilinears {
            out.add_bilinear(k.clone(), m.clone());
        }
        for (s, v) in &other.gauge_kinetic {
            out.add_gauge_kinetic(s.clone(), v.clone());
        }
        out
    }

    /// `self - other` as a canonical term multiset.
    pub fn minus(&self, other: &LagrangianDensity) -> LagrangianDensity {
        self.plus(&other.scaled(&symbols::rat(-1, 1)))
    }

    /// Distinct (left chirality, action kind, right chirality) families of bilinears.
    pub fn families(&self) -> BTreeSet<(Chirality, ActionKind, Chirality)> {
        self.bilinears.keys().map(|k| (k.left, k.action.kind(), k.right)).collect()
    }

    pub fn has_chirality_tags(&self) -> bool {
        self.bilinears.keys().any(|k| k.left != Chirality::Full || k.right != Chirality::Full)
    }
}

impl fmt::Display for LagrangianDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (k, m) in &self.bilinears {
            let mut s = String::new();
            if !k.phase.is_identity() {
                s.push_str(&format!("{} ", k.phase));
            }
            s.push_str(&format!("psi{}^dag {m} ", k.left.suffix()));
            match k.action {
                Action::Plain => {}
                Action::Derivative(mu) => s.push_str(&format!("d_{mu} ")),
                Action::GaugeField(mu) => s.push_str(&format!("A_{mu} ")),
            }
            s.push_str(&format!("psi{}", k.right.suffix()));
            parts.push(s);
        }
        for (shift, c) in &self.gauge_kinetic {
            if shift.iter().all(PolyExpr::is_zero) {
                parts.push(format!("({c})*F^2"));
            } else {
                let sh: Vec<String> = shift.iter().map(|e| e.to_string()).collect();
                parts.push(format!("({c})*(F + [{}])^2", sh.join(", ")));
            }
        }
        f.write_str(&parts.join(" + "))
    }
}
