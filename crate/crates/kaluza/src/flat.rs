use exactnum::{Coeff, Polynomial, Scalar};
use geometry::exterior_derivative;
use multilinear::{inertia, KForm};
use sugra::{dilatino_kernel, verify, BackgroundSpec, Dilaton, Geometry, Theory, VerificationReport};

use crate::form::reduce_form;
use crate::witness::{vanishes, vector};
use crate::KaluzaError;

/// Flat eleven-dimensional space reduced along a spacelike translation.
#[derive(Clone, Debug)]
pub struct FlatReduction {
    /// Unit representative of the translation, in chart coordinates.
    pub direction: Vec<Scalar>,
    pub given_norm: Scalar,
    pub alpha: KForm<Scalar>,
    /// `h = g − α⊗α`, degenerate along the direction.
    pub metric: Vec<Vec<Scalar>>,
    pub signature: (usize, usize, usize),
    pub dilaton: Scalar,
    /// `dα`.
    pub f2: KForm<Scalar>,
    /// `−ι_ξF`.
    pub h3: KForm<Scalar>,
    /// `F + α∧H₃`.
    pub g4: KForm<Scalar>,
    /// The type IIA background, present when all reduced fluxes vanish.
    pub downstairs: Option<BackgroundSpec>,
    pub report: VerificationReport,
}

/// `|ξ|²` on a chart, when it is constant.
pub(crate) fn chart_norm(b: &BackgroundSpec, direction: &[Scalar]) -> Result<Scalar, KaluzaError> {
    let Geometry::Patch { patch, .. } = &b.geometry else {
        return Err(KaluzaError::Unsupported("translations are reduced on coordinate charts only".into()));
    };
    let n = patch.dim();
    if direction.len() != n {
        return Err(KaluzaError::DimensionMismatch { expected: n, found: direction.len() });
    }
    let g = patch.metric();
    let mut norm = Polynomial::zero();
    for i in 0..n {
        for j in 0..n {
            if !direction[i].is_zero() && !direction[j].is_zero() {
                norm = norm.plus(&g[i][j].scale(&(&direction[i] * &direction[j])));
            }
        }
    }
    let norm = norm
        .as_scalar()
        .ok_or_else(|| KaluzaError::Unsupported("|xi|^2 is not constant, so xi is not a translation of flat space".into()))?;
    if !norm.is_positive() {
        return Err(KaluzaError::NotSpacelike(norm.to_string()));
    }
    Ok(norm)
}

/// Reduces flat `E^{1,10}` along the constant vector `direction`.
pub fn reduce_flat_d11(upstairs: &BackgroundSpec, direction: &[Scalar]) -> Result<FlatReduction, KaluzaError> {
    upstairs.expect_theory(&[Theory::D11])?;
    let given_norm = chart_norm(upstairs, direction)?;
    let Geometry::Patch { patch, .. } = &upstairs.geometry else { unreachable!("chart_norm accepts charts only") };
    let n = patch.dim();
    let metric: Vec<Vec<Scalar>> = patch
        .metric()
        .iter()
        .map(|row| row.iter().map(Polynomial::as_scalar).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| KaluzaError::Unsupported("the chart metric is not constant; only translations of flat space are reduced".into()))?;

    let scale = if given_norm.is_one() { Scalar::one() } else { given_norm.sqrt()?.inv()? };
    let xi: Vec<Scalar> = direction.iter().map(|c| c * &scale).collect();
    let alpha_comps: Vec<Scalar> = (0..n).map(|i| (0..n).map(|j| &xi[j] * &metric[j][i]).sum()).collect();
    let alpha = KForm::one_form(alpha_comps.clone());

    let f2 = exterior_derivative(patch, &alpha.map_coeffs(|c| Polynomial::constant(c.clone())));
    let f2 = sugra::constant_form(&f2).ok_or_else(|| KaluzaError::Unsupported("d alpha is not constant".into()))?;
    let f4 = upstairs.constant_flux("F4", 4)?;
    let split = reduce_form(&f4, &alpha, &xi)?;

    let hmetric: Vec<Vec<Scalar>> =
        (0..n).map(|i| (0..n).map(|j| &metric[i][j] - &(&alpha_comps[i] * &alpha_comps[j])).collect()).collect();
    let signature = inertia(&hmetric);
    let (t, s, _) = inertia(&metric);

    let mut report = VerificationReport::new(format!("{} / <{}>", upstairs.id, vector(&xi)), "d11 -> iia");
    report.invariant("|xi|^2 as given", &given_norm);
    report.invariant("xi (unit)", vector(&xi));
    report.invariant("dilaton", Scalar::zero());
    if !given_norm.is_one() {
        report.note("xi was rescaled to unit norm, which fixes the dilaton to zero");
    }
    report.check(
        "reduced metric h is constant of signature (1,9)",
        if signature == (t, s - 1, 1) { Ok(()) } else { Err(format!("h has (negative, positive, zero) = {signature:?}")) },
    );
    report.check("F2 = d alpha = 0", vanishes(&f2, "F2"));
    report.check("H3 = -i_xi F = 0", vanishes(&split.h, "H3"));
    report.check("G4 = F + alpha ^ H3 = 0", vanishes(&split.g, "G4"));

    let fluxless = f2.is_zero() && split.h.is_zero() && split.g.is_zero();
    let downstairs = if fluxless {
        let b = BackgroundSpec::new(format!("{}-reduced", upstairs.id), Theory::Iia, Geometry::flat(n - 1)?)
            .with_dilaton(Dilaton::constant(n - 1, Scalar::zero()));
        let inner = verify(&b)?;
        let count = dilatino_kernel(&b)?;
        report.invariant("dilatino kernel (iia)", count.iia);
        report.check(
            "maximal supersymmetry preserved",
            if inner.passed() && count.iia == 32 {
                Ok(())
            } else {
                Err(format!("downstairs verification passed = {}, dilatino kernel = {}", inner.passed(), count.iia))
            },
        );
        report.note("the reduced metric is constant, so the quotient is E^{1,9} with a trivial spinor connection");
        Some(b)
    } else {
        None
    };
    Ok(FlatReduction {
        direction: xi,
        given_norm,
        alpha,
        metric: hmetric,
        signature,
        dilaton: Scalar::zero(),
        f2,
        h3: split.h,
        g4: split.g,
        downstairs,
        report,
    })
}
