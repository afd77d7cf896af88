use exactnum::Scalar;
use multilinear::QuadraticSpace;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::KaluzaError;

fn reflect(space: &QuadraticSpace, p: &[Scalar], v: &[Scalar]) -> Option<Vec<Scalar>> {
    let vv = space.pair(v, v);
    if vv.is_zero() {
        return None;
    }
    let k = &(&space.pair(p, v) * &Scalar::from(2)) / &vv;
    Some(p.iter().zip(v).map(|(a, b)| a - &(&k * b)).collect())
}

/// A unit spacelike vector: a basis vector or `eᵢ ± eⱼ`, rescaled.
fn seed_vector(space: &QuadraticSpace) -> Result<Vec<Scalar>, KaluzaError> {
    let n = space.dim();
    let mut candidates: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        candidates.push((0..n).map(|k| Scalar::from((k == i) as i64)).collect());
    }
    for i in 0..n {
        for j in i + 1..n {
            for sign in [1, -1] {
                candidates.push((0..n).map(|k| Scalar::from(if k == i { 1 } else if k == j { sign } else { 0 })).collect());
            }
        }
    }
    let spacelike: Vec<(Vec<Scalar>, Scalar)> =
        candidates.into_iter().map(|v| (space.pair(&v, &v), v)).filter(|(n, _)| n.is_positive()).map(|(n, v)| (v, n)).collect();
    let (v, norm) = spacelike
        .iter()
        .find(|(_, n)| n.sqrt().map(|r| r.is_rational()).unwrap_or(false))
        .or_else(|| spacelike.first())
        .cloned()
        .ok_or_else(|| KaluzaError::NotSpacelike("no spacelike direction".into()))?;
    let inv = norm.sqrt()?.inv()?;
    Ok(v.iter().map(|c| c * &inv).collect())
}

/// `count` distinct points of `⟨X, X⟩ = 1`, obtained from a unit seed by
/// reflections in random small-integer vectors. The points are rational
/// whenever the seed is.
pub fn unit_spacelike_sample(space: &QuadraticSpace, count: usize, seed: u64) -> Result<Vec<Vec<Scalar>>, KaluzaError> {
    let n = space.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = seed_vector(space)?;
    let mut out: Vec<Vec<Scalar>> = vec![p.clone()];
    let mut attempts = 0;
    while out.len() < count && attempts < 100 * count {
        attempts += 1;
        let v: Vec<Scalar> = (0..n).map(|_| Scalar::from(rng.gen_range(-2..=2i64))).collect();
        let Some(q) = reflect(space, &p, &v) else { continue };
        // keep coefficients small by restarting from the seed now and then
        p = if rng.gen_bool(0.3) { out[0].clone() } else { q.clone() };
        if !out.contains(&q) {
            out.push(q);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_points_are_unit_and_rational() {
        let space = QuadraticSpace::lightcone(4);
        let pts = unit_spacelike_sample(&space, 60, 7).unwrap();
        assert_eq!(pts.len(), 60);
        for p in &pts {
            assert!(space.pair(p, p).is_one());
            assert!(p.iter().all(Scalar::is_rational));
        }
    }

    #[test]
    fn irrational_seed_when_no_rational_unit_is_nearby() {
        let space = QuadraticSpace::diagonal(&[Scalar::from(-3), Scalar::from(3)]).unwrap();
        let pts = unit_spacelike_sample(&space, 5, 1).unwrap();
        assert!(pts.iter().all(|p| space.pair(p, p).is_one()));
    }
}
