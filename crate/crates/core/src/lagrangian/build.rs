use crate::clifford::{GammaRep, SpinorMatrix};
use crate::gaugefields::covariant_field_tensor;
use crate::minkowski::Dim;
use crate::symbols::{self, coord, i, rat, var};

use super::density::{Action, Chirality, LagrangianDensity, TermKey};
use super::{interaction_contraction, LagrangianError};

/// Which oscillator coupling to assemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OscillatorForm {
    /// Free Dirac part plus `-(m omega / 2) psi^dag beta (sigma.F) psi` built from
    /// the rest-frame field tensor with unit strength, i.e. `-i m omega psi^dag beta alpha_j x_j psi`.
    Tensor,
    /// Free Dirac part plus `e psibar gamma^mu A_mu psi - F^2/4 + e B_I psibar gamma^0 gamma^j x_j psi`.
    Qed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub massless: bool,
    pub form: OscillatorForm,
}

fn bilinear(l: &mut LagrangianDensity, action: Action, m: SpinorMatrix) {
    l.add_bilinear(TermKey::plain(Chirality::Full, action, Chirality::Full), m);
}

/// `psibar (i gamma^mu d_mu - m) psi`, optionally massless.
pub fn free_dirac(rep: &GammaRep, massless: bool) -> LagrangianDensity {
    let dim = rep.dim();
    let mut l = LagrangianDensity::new(dim, rep.size());
    let g0 = rep.beta();
    for (mu, g) in rep.gammas().iter().enumerate() {
        bilinear(&mut l, Action::Derivative(mu), (&g0 * g).scale(&i()));
    }
    if !massless {
        bilinear(&mut l, Action::Plain, g0.scale(&-var("m")));
    }
    l
}

/// `e psibar gamma^mu A_mu psi`.
pub fn qed_interaction(rep: &GammaRep) -> LagrangianDensity {
    let mut l = LagrangianDensity::new(rep.dim(), rep.size());
    let g0 = rep.beta();
    for (mu, g) in rep.gammas().iter().enumerate() {
        bilinear(&mut l, Action::GaugeField(mu), (&g0 * g).scale(&var("e")));
    }
    l
}

/// The oscillator kernel `-(m omega / 2) beta sigma^{mu nu} F_{mu nu}` with unit field strength.
pub fn oscillator_kernel(rep: &GammaRep) -> Result<SpinorMatrix, LagrangianError> {
    let f = covariant_field_tensor(&symbols::one(), rep.dim());
    let contraction = interaction_contraction(rep, &f, &symbols::one())?;
    let pref = rat(-1, 2) * var("m") * var("omega");
    Ok((&rep.beta() * &contraction).scale(&pref))
}

/// The kernel of `e B_I psibar gamma^0 gamma^j r_j psi` in `psi^dag` form.
pub fn qed_oscillator_kernel(rep: &GammaRep) -> SpinorMatrix {
    let g0 = rep.beta();
    let mut k = rep.zero();
    for (j, c) in rep.dim().spatial_coords().enumerate() {
        let g = &rep.gammas()[j + 1];
        k = &k + &(&(&g0 * &g0) * g).scale(&coord(c));
    }
    k.scale(&(var("e") * var("B_I")))
}

pub fn build_do_lagrangian(rep: &GammaRep, opts: BuildOptions) -> Result<LagrangianDensity, LagrangianError> {
    if rep.dim() == Dim::D3 {
        return Err(LagrangianError::UnsupportedDim(rep.dim()));
    }
    let mut l = free_dirac(rep, opts.massless);
    match opts.form {
        OscillatorForm::Tensor => bilinear(&mut l, Action::Plain, oscillator_kernel(rep)?),
        OscillatorForm::Qed => {
            l = l.plus(&qed_interaction(rep));
            l.add_yang_mills();
            bilinear(&mut l, Action::Plain, qed_oscillator_kernel(rep));
        }
    }
    Ok(l)
}

/// Expected `alpha_j (p_j - i m omega beta x_j) + beta m` pieces: the
/// momentum coefficients and the coordinate-dependent part.
pub fn oscillator_hamiltonian_parts(rep: &GammaRep) -> (Vec<SpinorMatrix>, SpinorMatrix) {
    let d = rep.derived();
    let mut pot = d.beta.scale(&var("m"));
    let mw = var("m") * var("omega");
    for (j, c) in rep.dim().spatial_coords().enumerate() {
        let shift = d.beta.scale(&(i() * &mw * coord(c)));
        pot = &pot - &(&d.alphas[j] * &shift);
    }
    (d.alphas, pot)
}
