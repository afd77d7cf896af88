use exactnum::Coeff;
use multilinear::KForm;

use crate::KaluzaError;

/// The basic pieces of an invariant form, `F = G − α∧H`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormReduction<C: Coeff> {
    pub g: KForm<C>,
    pub h: KForm<C>,
}

impl<C: Coeff> FormReduction<C> {
    /// `G − α∧H`.
    pub fn reassemble(&self, alpha: &KForm<C>) -> KForm<C> {
        self.g.sub(&alpha.wedge(&self.h))
    }

    /// `ι_ξG = ι_ξH = 0`.
    pub fn is_horizontal(&self, xi: &[C]) -> bool {
        self.g.interior(xi).is_zero() && self.h.interior(xi).is_zero()
    }
}

/// `H = −ι_ξF`, `G = F + α∧H`.
pub fn reduce_form<C: Coeff + std::fmt::Debug>(f: &KForm<C>, alpha: &KForm<C>, xi: &[C]) -> Result<FormReduction<C>, KaluzaError> {
    if xi.len() != f.dim() {
        return Err(KaluzaError::DimensionMismatch { expected: f.dim(), found: xi.len() });
    }
    if alpha.degree() != 1 || alpha.dim() != f.dim() {
        return Err(KaluzaError::Unsupported(format!("connection must be a 1-form on {} dimensions", f.dim())));
    }
    let pairing = alpha.interior(xi).constant_value();
    if pairing != C::one() {
        return Err(KaluzaError::BadConnection(format!("{pairing:?}")));
    }
    if f.degree() == 0 {
        return Ok(FormReduction { g: f.clone(), h: KForm::zero(f.dim(), 0) });
    }
    let h = f.interior(xi).neg();
    let g = f.add(&alpha.wedge(&h));
    Ok(FormReduction { g, h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactnum::Scalar;

    fn s(x: i64) -> Scalar {
        Scalar::from(x)
    }

    #[test]
    fn horizontal_form_is_its_own_g() {
        let f: KForm<Scalar> = KForm::basis(4, &[1, 2]);
        let alpha = KForm::basis(4, &[0]);
        let xi = vec![s(1), s(0), s(0), s(0)];
        let r = reduce_form(&f, &alpha, &xi).unwrap();
        assert_eq!(r.g, f);
        assert!(r.h.is_zero());
    }

    #[test]
    fn vertical_part_moves_to_h() {
        let alpha: KForm<Scalar> = KForm::basis(4, &[0]);
        let omega = KForm::basis(4, &[1, 2]).add(&KForm::basis(4, &[2, 3]).scale(&s(3)));
        let f = alpha.wedge(&omega);
        let xi = vec![s(1), s(0), s(0), s(0)];
        let r = reduce_form(&f, &alpha, &xi).unwrap();
        assert!(r.g.is_zero());
        assert_eq!(r.h, omega.neg());
        assert_eq!(r.reassemble(&alpha), f);
    }

    #[test]
    fn unnormalised_connection_is_rejected() {
        let alpha: KForm<Scalar> = KForm::basis(3, &[0]).scale(&s(2));
        let f = KForm::basis(3, &[0, 1]);
        let err = reduce_form(&f, &alpha, &[s(1), s(0), s(0)]).unwrap_err();
        assert!(matches!(err, KaluzaError::BadConnection(_)));
    }
}
