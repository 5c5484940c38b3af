use crate::clifford::GammaRep;
use crate::exactpoly::{Coord, PolyExpr};
use crate::symbols::{self, gradient_name, hessian_name, i, var};

use super::density::{Action, Chirality, LagrangianDensity, Phase, TermKey};
use super::LagrangianError;

/// A gauge function: absent, an opaque spacetime function, or a concrete polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Theta {
    Zero,
    /// One of the phase symbols (`theta`, `theta_R`, `theta_L`); its derivatives are opaque constants.
    Formal(String),
    Poly(PolyExpr),
}

impl Theta {
    pub fn formal(name: &str) -> Result<Theta, LagrangianError> {
        if symbols::PHASES.contains(&name) {
            Ok(Theta::Formal(name.to_string()))
        } else {
            Err(LagrangianError::UnknownPhase(name.to_string()))
        }
    }

    pub fn angle(&self) -> PolyExpr {
        match self {
            Theta::Zero => symbols::zero(),
            Theta::Formal(n) => var(n),
            Theta::Poly(p) => p.clone(),
        }
    }

    /// `d_mu theta`.
    pub fn gradient(&self, mu: usize) -> PolyExpr {
        match self {
            Theta::Zero => symbols::zero(),
            Theta::Formal(n) => var(&gradient_name(n, mu)),
            Theta::Poly(p) => p.d(Coord::from_index(mu).expect("spacetime index")),
        }
    }

    /// `d_mu d_nu theta`.
    pub fn hessian(&self, mu: usize, nu: usize) -> PolyExpr {
        match self {
            Theta::Zero => symbols::zero(),
            Theta::Formal(n) => var(&hessian_name(n, mu, nu)),
            Theta::Poly(_) => self.gradient(nu).d(Coord::from_index(mu).expect("spacetime index")),
        }
    }
}

/// How `A_mu` shifts under a chiral rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaugeShift {
    /// No shift at all (a control that must leave a residual).
    None,
    /// Each gauge coupling shifts with the phase of the chirality it couples.
    MatchChirality,
    /// Every coupling shifts with `theta_R`.
    GlobalR,
    /// Every coupling shifts with `theta_L`.
    GlobalL,
}

/// Phases assigned to each field: `psi_X -> exp(-i theta_X) psi_X`, `psi_X^dag -> exp(i theta_X) psi_X^dag`.
#[derive(Debug, Clone)]
pub struct PhaseRotation {
    pub full: Theta,
    pub right: Theta,
    pub left: Theta,
    pub shift: GaugeShift,
}

impl PhaseRotation {
    fn theta(&self, c: Chirality) -> &Theta {
        match c {
            Chirality::Full => &self.full,
            Chirality::R => &self.right,
            Chirality::L => &self.left,
        }
    }

    fn shift_theta(&self, c: Chirality) -> Option<&Theta> {
        match self.shift {
            GaugeShift::None => None,
            GaugeShift::MatchChirality => Some(self.theta(c)),
            GaugeShift::GlobalR => Some(&self.right),
            GaugeShift::GlobalL => Some(&self.left),
        }
    }
}

/// Applies a local phase rotation with the formal Leibniz rule
/// `d_mu (exp(-i theta) psi) = exp(-i theta) (d_mu psi - i (d_mu theta) psi)`
/// and `A_mu -> A_mu - (1/e) d_mu theta`.
pub fn rotate(l: &LagrangianDensity, rot: &PhaseRotation) -> LagrangianDensity {
    let e_inv = symbols::poly("e^-1");
    let mut out = LagrangianDensity::new(l.dim(), l.spinor_size());
    for (k, m) in l.bilinears() {
        let (tl, tr) = (rot.theta(k.left), rot.theta(k.right));
        let phase = k.phase.mul(&Phase(tl.angle() - tr.angle()));
        out.add_bilinear(TermKey { phase: phase.clone(), ..k.clone() }, m.clone());
        let extra = match k.action {
            Action::Plain => None,
            Action::Derivative(mu) => Some(-i() * tr.gradient(mu)),
            Action::GaugeField(mu) => rot.shift_theta(k.right).map(|t| -&e_inv * t.gradient(mu)),
        };
        if let Some(c) = extra.filter(|c| !c.is_zero()) {
            let key = TermKey { phase, left: k.left, action: Action::Plain, right: k.right };
            out.add_bilinear(key, m.scale(&c));
        }
    }
    // F_{mu nu} -> F_{mu nu} - (1/e)(d_mu d_nu - d_nu d_mu) theta
    let n = l.dim().spacetime();
    // under chiral rotations with matched shifts the field strength follows theta_R
    let theta = match rot.shift {
        GaugeShift::None => None,
        GaugeShift::MatchChirality if rot.full != Theta::Zero => Some(&rot.full),
        GaugeShift::MatchChirality | GaugeShift::GlobalR => Some(&rot.right),
        GaugeShift::GlobalL => Some(&rot.left),
    };
    for (shift, c) in l.gauge_kinetic() {
        let mut s = shift.clone();
        if let Some(t) = theta {
            for mu in 0..n {
                for nu in 0..n {
                    let delta = -&e_inv * (t.hessian(mu, nu) - t.hessian(nu, mu));
                    s[mu * n + nu] = &s[mu * n + nu] + &delta;
                }
            }
        }
        out.add_gauge_kinetic(s, c.clone());
    }
    out
}

/// Local U(1): every field rotates by the same `theta`, and `A_mu` shifts with it.
pub fn u1_transform(l: &LagrangianDensity, theta: &Theta) -> LagrangianDensity {
    rotate(
        l,
        &PhaseRotation { full: theta.clone(), right: theta.clone(), left: theta.clone(), shift: GaugeShift::MatchChirality },
    )
}

/// Splits `psi = psi_R + psi_L`, keeping `psi_X^dag (P_X K P_Y) psi_Y` for the
/// combinations that survive the projector algebra.
pub fn chiral_decompose(l: &LagrangianDensity, rep: &GammaRep) -> Result<LagrangianDensity, LagrangianError> {
    if rep.dim() != l.dim() || rep.size() != l.spinor_size() {
        return Err(LagrangianError::RepMismatch);
    }
    let (pr, pl) = rep.chiral_projectors()?;
    let mut out = LagrangianDensity::new(l.dim(), l.spinor_size());
    for (k, m) in l.bilinears() {
        if k.left != Chirality::Full || k.right != Chirality::Full {
            return Err(LagrangianError::ChiralityTagged);
        }
        for (x, px) in [(Chirality::R, &pr), (Chirality::L, &pl)] {
            for (y, py) in [(Chirality::R, &pr), (Chirality::L, &pl)] {
                let proj = &(px * m) * py;
                if !proj.is_zero() {
                    out.add_bilinear(TermKey { phase: k.phase.clone(), left: x, action: k.action, right: y }, proj);
                }
            }
        }
    }
    for (s, c) in l.gauge_kinetic() {
        out.add_gauge_kinetic(s.clone(), c.clone());
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct ChiralOutcome {
    pub transformed: LagrangianDensity,
    /// `transformed - original`.
    pub residual: LagrangianDensity,
}

/// `psi_R -> exp(-i theta_R) psi_R`, `psi_L -> exp(-i theta_L) psi_L` on a decomposed density.
pub fn chiral_transform(
    l: &LagrangianDensity,
    theta_r: &Theta,
    theta_l: &Theta,
    shift: GaugeShift,
) -> Result<ChiralOutcome, LagrangianError> {
    if l.bilinears().keys().any(|k| k.left == Chirality::Full || k.right == Chirality::Full) {
        return Err(LagrangianError::NotDecomposed);
    }
    let rot = PhaseRotation { full: Theta::Zero, right: theta_r.clone(), left: theta_l.clone(), shift };
    let transformed = rotate(l, &rot);
    let residual = transformed.minus(l);
    Ok(ChiralOutcome { transformed, residual })
}
