use crate::background::{BackgroundSpec, Theory};
use crate::{
    dilatino_kernel, verify_d11, verify_d11_maxsusy, verify_d6, verify_iib_maxsusy, verify_typeii_common, SugraError,
    VerificationReport,
};

/// The field equations of the background's theory followed by its
/// maximal-supersymmetry conditions.
pub fn verify(b: &BackgroundSpec) -> Result<VerificationReport, SugraError> {
    match b.theory {
        Theory::D11 => {
            let mut r = verify_d11(b)?;
            r.absorb(verify_d11_maxsusy(b)?);
            Ok(r)
        }
        Theory::Iib if !b.fluxes.contains_key("H3") && b.dilaton.is_none() => verify_iib_maxsusy(b),
        Theory::Iib | Theory::Iia | Theory::TypeIICommon => {
            let mut r = verify_typeii_common(b)?;
            let count = dilatino_kernel(b)?;
            r.invariant("dilatino kernel (IIA, frame-constant)", count.iia);
            r.invariant("dilatino kernel (IIB, frame-constant)", count.iib);
            Ok(r)
        }
        Theory::D6 => verify_d6(b),
    }
}
