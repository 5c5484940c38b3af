//! The gauge chains: fields, gauge transform, covariant potential and tensor.

use dirosc_core::gaugefields::*;
use dirosc_core::minkowski::Dim;
use dirosc_core::symbols::{poly, var, zero};

use crate::{CheckResult, CliError};

fn potential(dim: Dim, comps: &[&str]) -> Potential {
    Potential::from_components(dim, comps.iter().map(|c| poly(c)).collect()).expect("component count matches")
}

/// Exact checks of the gauge chain in `dim`: five in (1+1), six in (2+1).
pub fn gauge_checks(dim: Dim) -> Result<Vec<CheckResult>, CliError> {
    let fail = |e: GaugeError| CliError::Usage(e.to_string());
    let (c, a, g, fields, displayed, tensor) = match dim {
        Dim::D1 => (
            var("zeta"),
            electric_potential(),
            electric_gauge_fn(),
            FieldPair { e: vec![poly("-zeta*x")], b: Magnetic::Scalar(zero()) },
            potential(dim, &["1/4*zeta*t^2 + 1/4*zeta*x^2", "1/2*zeta*t*x"]),
            vec![(0, 1, poly("zeta*x"))],
        ),
        Dim::D2 => (
            var("rho"),
            magnetic_potential(),
            magnetic_gauge_fn(),
            FieldPair { e: vec![zero(), zero()], b: Magnetic::Scalar(poly("-2*rho")) },
            potential(dim, &["-1/4*rho*x^2 - 1/4*rho*y^2 - 1/4*rho*t^2", "rho*y + 1/2*rho*t*x", "-rho*x + 1/2*rho*t*y"]),
            vec![(0, 1, poly("rho*x")), (0, 2, poly("rho*y"))],
        ),
        Dim::D3 => return Err(CliError::Usage("gauge chains exist for 1+1 and 2+1 only".into())),
    };
    let mut out = Vec::new();

    let f = fields_from_potential(&a);
    out.push(CheckResult::exact("fields from potential", dim, f == fields, &fields, &f));

    let transformed = gauge_transform(&a, &g).map_err(fail)?;
    out.push(CheckResult::exact(
        "gauge transform equals the displayed potential",
        dim,
        transformed == displayed,
        &displayed,
        &transformed,
    ));

    let cov = covariant_potential(&c, dim).map_err(fail)?;
    out.push(CheckResult::exact("covariant potential equals the displayed potential", dim, cov == displayed, &displayed, &cov));

    let ft = covariant_field_tensor(&c, dim);
    let want: Vec<String> = tensor.iter().map(|(m, n, v)| format!("F_{m}{n} = {v}")).collect();
    let got: Vec<String> = tensor.iter().map(|(m, n, _)| format!("F_{m}{n} = {}", ft.get(*m, *n))).collect();
    out.push(CheckResult::exact("covariant field tensor components", dim, want == got, want.join(", "), got.join(", ")));

    let after = fields_from_potential(&transformed);
    out.push(CheckResult::exact("fields invariant under the gauge transform", dim, after == f, &f, &after));

    if dim == Dim::D2 {
        let derived = field_tensor_from_potential(&cov).map_err(fail)?.to_convention(TensorConvention::RestFrame);
        out.push(CheckResult::exact(
            "tensor from the covariant potential matches the covariant tensor",
            dim,
            derived == ft,
            &ft,
            &derived,
        ));
    }
    Ok(out)
}
