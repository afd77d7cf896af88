use exactnum::{Coeff, Scalar};

use crate::form::mask_indices;
use crate::{FormError, KForm, QuadraticSpace};

/// Outcome of the Plücker test.
#[derive(Clone, Debug, PartialEq)]
pub enum Decomposability {
    Decomposable,
    /// A basis multi-index `ξ` with `ι_ξ F ∧ F ≠ 0`, and that residual.
    Witness { contraction: Vec<usize>, residual: KForm<Scalar> },
}

impl Decomposability {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, Decomposability::Decomposable)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Decides whether a 4- or 5-form is decomposable via
/// `ι_{e_a}ι_{e_b}⋯ F ∧ F = 0` over all basis multi-indices of length
/// `deg F − 1`.
pub fn plucker_check(f: &KForm<Scalar>) -> Result<Decomposability, FormError> {
    let k = f.degree();
    if k != 4 && k != 5 {
        return Err(FormError::WrongDegree { expected: "4 or 5".into(), found: k });
    }
    for xi in subsets(f.dim(), k - 1) {
        let mut contracted = f.clone();
        for &i in &xi {
            contracted = contracted.interior_basis(i);
            if contracted.is_zero() {
                break;
            }
        }
        if contracted.is_zero() {
            continue;
        }
        let residual = contracted.wedge(f);
        if !residual.is_zero() {
            return Ok(Decomposability::Witness { contraction: xi, residual });
        }
    }
    Ok(Decomposability::Decomposable)
}

/// Action of a 2-form on forms as a derivation: the 2-form becomes the
/// skew endomorphism `θ ↦ ι_{θ♯} ω` of covectors, extended to `Λ^k`.
pub fn lambda_action<C: Coeff>(space: &QuadraticSpace, omega: &KForm<C>, f: &KForm<C>) -> KForm<C> {
    assert_eq!(omega.degree(), 2, "lambda_action needs a 2-form");
    let n = space.dim();
    let inv = space.inverse_metric();
    let images: Vec<KForm<C>> = (0..n)
        .map(|j| {
            let raised: Vec<Scalar> = inv[j].clone();
            omega.interior_scalar(&raised)
        })
        .collect();
    let mut out = KForm::zero(n, f.degree());
    for (mask, c) in f.terms() {
        let idx = mask_indices(mask);
        for p in 0..idx.len() {
            if images[idx[p]].is_zero() {
                continue;
            }
            let prefix: KForm<C> = KForm::basis(n, &idx[..p]);
            let suffix: KForm<C> = KForm::basis(n, &idx[p + 1..]);
            let term = prefix.wedge(&images[idx[p]]).wedge(&suffix);
            out = out.add(&term.scale_by(c));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, idx: &[usize]) -> KForm<Scalar> {
        KForm::basis(n, idx)
    }

    #[test]
    fn single_block_is_decomposable() {
        assert!(plucker_check(&e(8, &[0, 1, 2, 3])).unwrap().is_decomposable());
        assert!(plucker_check(&e(11, &[1, 2, 3, 4]).scale(&Scalar::from(6))).unwrap().is_decomposable());
    }

    #[test]
    fn two_blocks_have_witness() {
        let f = e(8, &[0, 1, 2, 3]).add(&e(8, &[4, 5, 6, 7]));
        match plucker_check(&f).unwrap() {
            Decomposability::Witness { contraction, residual } => {
                assert_eq!(contraction, vec![0, 1, 2]);
                assert_eq!(residual.degree(), 5);
                assert_eq!(residual.num_terms(), 1);
                assert!(!residual.get(&[3, 4, 5, 6, 7]).is_zero());
            }
            Decomposability::Decomposable => panic!("expected a witness"),
        }
    }

    #[test]
    fn wrong_degree() {
        assert!(plucker_check(&e(8, &[0, 1, 2])).is_err());
    }

    #[test]
    fn rotation_generator() {
        let g = QuadraticSpace::euclidean(6);
        let out = lambda_action(&g, &e(6, &[0, 1]), &e(6, &[0, 2, 3, 4, 5]));
        assert_eq!(out, e(6, &[1, 2, 3, 4, 5]));
        assert!(lambda_action(&g, &KForm::zero(6, 2), &e(6, &[0, 2, 3, 4, 5])).is_zero());
    }
}
