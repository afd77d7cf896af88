use crate::{NumError, Scalar};

/// Real `c` satisfying every equation `a + b·c + q·c² = 0` in the system,
/// sorted ascending. `None` means no equation constrains `c`.
pub fn common_real_roots(eqs: &[[Scalar; 3]]) -> Result<Option<Vec<Scalar>>, NumError> {
    let candidates = if let Some([a, b, q]) = eqs.iter().find(|e| !e[2].is_zero()) {
        let disc = &(b * b) - &(&(a * q) * &Scalar::from(4));
        if disc.is_negative() {
            return Ok(Some(Vec::new()));
        }
        let root = disc.sqrt()?;
        let denom = (q * &Scalar::from(2)).inv()?;
        vec![&(&-b - &root) * &denom, &(&-b + &root) * &denom]
    } else if let Some([a, b, _]) = eqs.iter().find(|e| !e[1].is_zero()) {
        vec![&-a * &b.inv()?]
    } else if eqs.iter().all(|e| e[0].is_zero()) {
        return Ok(None);
    } else {
        return Ok(Some(Vec::new()));
    };
    let mut roots: Vec<Scalar> = candidates
        .into_iter()
        .filter(|x| eqs.iter().all(|[a, b, q]| (&(a + &(b * x)) + &(&(q * x) * x)).is_zero()))
        .collect();
    roots.sort();
    roots.dedup();
    Ok(Some(roots))
}
