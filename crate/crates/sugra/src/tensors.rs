use std::fmt::Display;

use exactnum::{Coeff, Scalar};
use multilinear::{lambda_action, BiSymTensor, KForm, QuadraticSpace, SymTensor};

pub fn lift_metric<C: Coeff>(space: &QuadraticSpace) -> SymTensor<C> {
    space.metric().iter().map(|r| r.iter().map(|x| C::from_scalar(x.clone())).collect()).collect()
}

/// `T²(a,b) = ⟨ι_a F, ι_b F⟩`.
pub fn flux_square<C: Coeff>(f: &KForm<C>, space: &QuadraticSpace) -> SymTensor<C> {
    let n = f.dim();
    let once: Vec<KForm<C>> = (0..n).map(|a| f.interior_basis(a)).collect();
    let mut out = vec![vec![C::zero(); n]; n];
    for a in 0..n {
        for b in a..n {
            if once[a].is_zero() || once[b].is_zero() {
                continue;
            }
            let v = once[a].inner(&once[b], space).expect("equal degrees");
            out[b][a] = v.clone();
            out[a][b] = v;
        }
    }
    out
}

/// `T⁴(a,b,c,d) = ⟨ι_a ι_b F, ι_c ι_d F⟩`.
pub fn flux_quartic<C: Coeff>(f: &KForm<C>, space: &QuadraticSpace) -> BiSymTensor<C> {
    let n = f.dim();
    let twice: Vec<Vec<KForm<C>>> =
        (0..n).map(|a| (0..n).map(|b| f.interior_basis(b).interior_basis(a)).collect()).collect();
    BiSymTensor::from_fn(n, |a, b, c, d| {
        if twice[a][b].is_zero() || twice[c][d].is_zero() {
            C::zero()
        } else {
            twice[a][b].inner(&twice[c][d], space).expect("equal degrees")
        }
    })
}

/// First index set `I` of size `deg F − 1` with `ι_I F ∧ F ≠ 0`; for a
/// four-form this is `ι_Xι_Yι_Z F ∧ F`. Decomposable forms have none.
pub fn plucker_violation<C: Coeff>(f: &KForm<C>) -> Option<Vec<usize>> {
    fn walk<C: Coeff>(f: &KForm<C>, partial: &KForm<C>, start: usize, left: usize, idx: &mut Vec<usize>) -> bool {
        if partial.is_zero() {
            return false;
        }
        if left == 0 {
            return !partial.wedge(f).is_zero();
        }
        for a in start..f.dim() {
            idx.push(a);
            if walk(f, &partial.interior_basis(a), a + 1, left - 1, idx) {
                return true;
            }
            idx.pop();
        }
        false
    }
    if f.degree() < 2 {
        return None;
    }
    let mut idx = Vec::new();
    walk(f, f, 0, f.degree() - 1, &mut idx).then_some(idx)
}

/// First curvature operator that does not annihilate `f`. On a locally
/// symmetric space these operators span the holonomy algebra, so `None`
/// means `f` extends to a parallel form.
pub fn holonomy_violation(space: &QuadraticSpace, operators: &[KForm<Scalar>], f: &KForm<Scalar>) -> Option<usize> {
    operators.iter().position(|op| !lambda_action(space, op, f).is_zero())
}

fn label(labels: &[String], i: usize) -> &str {
    labels.get(i).map_or("?", String::as_str)
}

pub fn sym_mismatch<C: Coeff + Display>(
    lhs: &SymTensor<C>,
    rhs: &SymTensor<C>,
    labels: &[String],
    names: (&str, &str),
) -> Result<(), String> {
    for (i, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        for (j, (x, y)) in l.iter().zip(r).enumerate().skip(i) {
            if x != y {
                return Err(format!(
                    "({}, {}) component: {} = {}, {} = {}",
                    label(labels, i),
                    label(labels, j),
                    names.0,
                    x,
                    names.1,
                    y
                ));
            }
        }
    }
    Ok(())
}

pub fn tensor_mismatch<C: Coeff + Display>(
    lhs: &BiSymTensor<C>,
    rhs: &BiSymTensor<C>,
    labels: &[String],
    names: (&str, &str),
) -> Result<(), String> {
    match lhs.sub(rhs).first_nonzero() {
        None => Ok(()),
        Some(([a, b, c, d], _)) => Err(format!(
            "({}, {}, {}, {}) component: {} = {}, {} = {}",
            label(labels, a),
            label(labels, b),
            label(labels, c),
            label(labels, d),
            names.0,
            lhs.get(a, b, c, d),
            names.1,
            rhs.get(a, b, c, d)
        )),
    }
}

pub fn form_is_zero<C: Coeff + Display>(f: &KForm<C>, labels: &[String], what: &str) -> Result<(), String> {
    match f.indexed_terms().next() {
        None => Ok(()),
        Some((idx, c)) => {
            let names: Vec<&str> = idx.iter().map(|&i| label(labels, i)).collect();
            Err(format!("{what} has component {c} on ({})", names.join(", ")))
        }
    }
}
