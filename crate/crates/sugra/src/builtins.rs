//! The classified maximally supersymmetric backgrounds with their default
//! parameter values.

use exactnum::{Coeff, Polynomial, Scalar};
use geometry::{ConstCurvBlock, ProductGeometry};
use liealg::{canonical_three_form, nw6, so12_so3, CwData, MetricLieAlgebra};
use multilinear::KForm;

use crate::background::{BackgroundSpec, Dilaton, Geometry, Theory};
use crate::SugraError;

fn product(blocks: Vec<ConstCurvBlock>, orientation: i32) -> Result<ProductGeometry, SugraError> {
    Ok(ProductGeometry::from_blocks(blocks, orientation)?)
}

fn basis_poly(n: usize, idx: &[usize], c: Scalar) -> KForm<Polynomial> {
    KForm::basis(n, idx).scale(&c)
}

/// Flat `E^{1,n-1}` with no flux.
pub fn flat(id: &str, theory: Theory, dim: usize) -> Result<BackgroundSpec, SugraError> {
    Ok(BackgroundSpec::new(id, theory, Geometry::flat(dim)?))
}

/// `AdS₇ × S⁴` with scalar curvatures `−7R`, `8R` and `F = √(6R) dvol(S⁴)`.
pub fn ads7_s4(r: &Scalar) -> Result<BackgroundSpec, SugraError> {
    ads_sphere_d11("ads7xs4", 7, 4, &r.scale(&Scalar::from(-7)), &r.scale(&Scalar::from(8)), 1, &r.scale(&Scalar::from(6)))
        .map(|b| b.with_param("R", r.clone()))
}

/// `AdS₄ × S⁷` with scalar curvatures `8R`, `−7R` (`R < 0`) and
/// `F = √(−6R) dvol(AdS₄)`.
pub fn ads4_s7(r: &Scalar) -> Result<BackgroundSpec, SugraError> {
    ads_sphere_d11("ads4xs7", 4, 7, &r.scale(&Scalar::from(8)), &r.scale(&Scalar::from(-7)), 0, &r.scale(&Scalar::from(-6)))
        .map(|b| b.with_param("R", r.clone()))
}

/// Freund–Rubin product with the flux along factor `flux_on`, of squared
/// magnitude `f_squared`.
pub fn ads_sphere_d11(
    id: &str,
    ads_dim: usize,
    sphere_dim: usize,
    ads_curvature: &Scalar,
    sphere_curvature: &Scalar,
    flux_on: usize,
    f_squared: &Scalar,
) -> Result<BackgroundSpec, SugraError> {
    let g = product(
        vec![ConstCurvBlock::anti_de_sitter(ads_dim, ads_curvature.clone())?, ConstCurvBlock::sphere(sphere_dim, sphere_curvature.clone())?],
        1,
    )?;
    let vol: KForm<Scalar> = g.block_volume(flux_on)?;
    let f = vol.scale(&f_squared.sqrt()?);
    Ok(BackgroundSpec::new(id, Theory::D11, Geometry::Product(g)).with_constant_flux("F4", &f))
}

/// `A = −(μ²/36) diag(4,4,4,1,1,1,1,1,1)`.
pub fn cw11_matrix(mu: &Scalar) -> Vec<Vec<Scalar>> {
    let s = &(mu * mu) * &Scalar::ratio(-1, 36);
    let diag: Vec<Scalar> = (0..9).map(|i| s.scale(&Scalar::from(if i < 3 { 4 } else { 1 }))).collect();
    CwData::diagonal(&diag).matrix().to_vec()
}

/// The eleven-dimensional Cahen–Wallach wave with `F = μ dx⁻∧dx¹∧dx²∧dx³`.
pub fn cw11(mu: &Scalar) -> Result<BackgroundSpec, SugraError> {
    cw11_with(mu, cw11_matrix(mu))
}

/// `CW₁₁` flux with an arbitrary transverse matrix, for perturbations.
pub fn cw11_with(mu: &Scalar, a: Vec<Vec<Scalar>>) -> Result<BackgroundSpec, SugraError> {
    let data = CwData::new(a)?;
    let geometry = Geometry::cahen_wallach(&data, 1)?;
    let f = basis_poly(11, &[1, 2, 3, 4], mu.clone());
    Ok(BackgroundSpec::new("cw11", Theory::D11, geometry).with_flux("F4", f).with_param("mu", mu.clone()))
}

/// `AdS₅ × S⁵` with scalar curvatures `−R`, `R` and
/// `F = f (dvol(AdS₅) + dvol(S⁵))`, where `f² = coefficient_squared`.
pub fn ads5_s5_with(r: &Scalar, coefficient_squared: &Scalar) -> Result<BackgroundSpec, SugraError> {
    let g = product(vec![ConstCurvBlock::anti_de_sitter(5, -r)?, ConstCurvBlock::sphere(5, r.clone())?], IIB_PRODUCT_ORIENTATION)?;
    let vol = g.block_volume::<Scalar>(0)?.add(&g.block_volume(1)?);
    let f = vol.scale(&coefficient_squared.sqrt()?);
    Ok(BackgroundSpec::new("ads5xs5", Theory::Iib, Geometry::Product(g)).with_constant_flux("F5", &f).with_param("R", r.clone()))
}

/// Orientation making `dvol(AdS₅) + dvol(S⁵)` self-dual.
pub const IIB_PRODUCT_ORIENTATION: i32 = -1;
/// Orientation making the `CW₁₀` five-form self-dual.
pub const IIB_WAVE_ORIENTATION: i32 = 1;

/// `AdS₅ × S⁵` with the self-consistent flux `f = ½√(R/5)`.
pub fn ads5_s5(r: &Scalar) -> Result<BackgroundSpec, SugraError> {
    ads5_s5_with(r, &(r * &Scalar::ratio(1, 20)))
}

/// `A = −μ² 𝟙₈` with `F = c dx⁻∧(dx¹∧dx²∧dx³∧dx⁴ + dx⁵∧dx⁶∧dx⁷∧dx⁸)`.
pub fn cw10_with(mu: &Scalar, c: &Scalar) -> Result<BackgroundSpec, SugraError> {
    let s = -&(mu * mu);
    let data = CwData::diagonal(&vec![s; 8]);
    let geometry = Geometry::cahen_wallach(&data, IIB_WAVE_ORIENTATION)?;
    let f = basis_poly(10, &[1, 2, 3, 4, 5], c.clone()).add(&basis_poly(10, &[1, 6, 7, 8, 9], c.clone()));
    Ok(BackgroundSpec::new("cw10", Theory::Iib, geometry).with_flux("F5", f).with_param("mu", mu.clone()))
}

/// `CW₁₀` with the self-consistent coefficient `c = μ`.
pub fn cw10(mu: &Scalar) -> Result<BackgroundSpec, SugraError> {
    cw10_with(mu, mu)
}

/// `so(1,2) ⊕ so(3)` with its canonical three-form as `H`.
pub fn so12_so3_background(alpha: &Scalar, beta: &Scalar) -> Result<BackgroundSpec, SugraError> {
    group_d6("ads3xs3", so12_so3(alpha, beta)?).map(|b| b.with_param("alpha", alpha.clone()).with_param("beta", beta.clone()))
}

pub fn nw6_background() -> Result<BackgroundSpec, SugraError> {
    group_d6("nw6", nw6())
}

/// A six-dimensional group background with `H(X, Y, Z) = −⟨X, [Y, Z]⟩`,
/// the torsion whose reduction along any unit `X` has `G₂ = dα`.
pub fn group_d6(id: &str, g: MetricLieAlgebra) -> Result<BackgroundSpec, SugraError> {
    let h = canonical_three_form(&g)?.neg();
    Ok(BackgroundSpec::new(id, Theory::D6, Geometry::Group(g)).with_constant_flux("H3", &h))
}

/// Flat ten-dimensional space with `φ = a + b(t + x9)`, a null gradient.
pub fn flat_linear_dilaton(theory: Theory, a: &Scalar, b: &Scalar) -> Result<BackgroundSpec, SugraError> {
    let mut grad = vec![Scalar::zero(); 10];
    grad[0] = b.clone();
    grad[9] = b.clone();
    Ok(flat("flat-linear-dilaton", theory, 10)?.with_dilaton(Dilaton { constant: a.clone(), gradient: grad }))
}

/// The catalog of classified backgrounds at the default parameters:
/// `R = 6` and `μ = 6` in eleven dimensions, `R = 5` and `μ = 1` for IIB.
pub fn builtin_backgrounds() -> Result<Vec<BackgroundSpec>, SugraError> {
    let one = Scalar::one();
    Ok(vec![
        ads7_s4(&Scalar::from(6))?,
        ads4_s7(&Scalar::from(-6))?,
        cw11(&Scalar::from(6))?,
        flat("flat11", Theory::D11, 11)?,
        ads5_s5(&Scalar::from(5))?,
        cw10(&one)?,
        flat("flat10-iib", Theory::Iib, 10)?,
        flat("flat10-iia", Theory::Iia, 10)?,
        so12_so3_background(&one, &one)?,
        nw6_background()?,
        flat("flat6", Theory::D6, 6)?,
    ])
}

/// Looks up a builtin by id.
pub fn builtin(id: &str) -> Result<BackgroundSpec, SugraError> {
    builtin_backgrounds()?
        .into_iter()
        .find(|b| b.id == id)
        .ok_or_else(|| SugraError::Unsupported(format!("unknown background `{id}`")))
}
