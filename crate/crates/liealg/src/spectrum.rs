use std::cmp::Ordering;

use exactnum::{BigInt, BigRational, Scalar};
use nalgebra::DMatrix;
use num_traits::{One, Signed, Zero};

/// Eigenvalues of a symmetric matrix, sorted ascending. Exact when every
/// root of the characteristic polynomial is rational or a root of a
/// rational quadratic; otherwise floating point.
#[derive(Clone, Debug, PartialEq)]
pub enum Spectrum {
    Exact(Vec<Scalar>),
    Approximate(Vec<f64>),
}

impl Spectrum {
    pub fn is_exact(&self) -> bool {
        matches!(self, Spectrum::Exact(_))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            Spectrum::Exact(v) => v.iter().map(|x| x.to_f64()).collect(),
            Spectrum::Approximate(v) => v.clone(),
        }
    }
}

/// Coefficients `c_0, …, c_n` of `det(x·1 − A) = Σ c_k x^k` by the
/// Faddeev–LeVerrier recursion.
pub fn characteristic_polynomial(a: &[Vec<Scalar>]) -> Vec<Scalar> {
    let n = a.len();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut m: Vec<Vec<Scalar>> = vec![vec![Scalar::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k−1} + c_{n−k+1} I
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = mat_mul(a, &m);
        let trace: Scalar = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -&(&trace * &Scalar::ratio(1, k as i64));
    }
    coeffs
}

fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Divides `p` by a monic `d`; returns the quotient if the remainder is 0.
fn exact_divide(p: &[BigRational], d: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut rem = p.to_vec();
    let dn = d.len() - 1;
    if rem.len() <= dn {
        return None;
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn].clone();
        quot[k] = c.clone();
        for (i, di) in d.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
    }
    rem[..dn].iter().all(|x| x.is_zero()).then_some(quot)
}

/// Best rational approximation with bounded denominator by continued
/// fractions.
fn rationalize(x: f64, max_den: i64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut r = x;
    for _ in 0..40 {
        let a = r.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > max_den as i128 {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let approx = h1 as f64 / k1 as f64;
        if (approx - x).abs() <= 1e-9 * x.abs().max(1.0) {
            return Some(BigRational::new(BigInt::from(h1), BigInt::from(k1)));
        }
        let frac = r - a;
        if frac.abs() < 1e-15 {
            break;
        }
        r = 1.0 / frac;
    }
    (k1 > 0).then(|| BigRational::new(BigInt::from(h1), BigInt::from(k1)))
}

fn symmetric_eigen_f64(a: &[Vec<Scalar>]) -> Vec<f64> {
    let n = a.len();
    let m = DMatrix::from_fn(n, n, |i, j| a[i][j].to_f64());
    let mut v: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    v.sort_by(|x, y| x.partial_cmp(y).unwrap_or(Ordering::Equal));
    v
}

/// Eigenvalues of a symmetric matrix with entries in the square-root tower.
pub fn symmetric_eigenvalues(a: &[Vec<Scalar>]) -> Spectrum {
    let numeric = symmetric_eigen_f64(a);
    let coeffs = characteristic_polynomial(a);
    let Some(mut p) = coeffs.iter().map(|c| c.as_rational()).collect::<Option<Vec<_>>>() else {
        return Spectrum::Approximate(numeric);
    };
    let mut exact: Vec<Scalar> = Vec::new();
    let mut remaining: Vec<f64> = Vec::new();
    for &x in &numeric {
        match rationalize(x, 1_000_000) {
            Some(q) if eval(&p, &q).is_zero() => {
                p = exact_divide(&p, &[-q.clone(), BigRational::one()]).expect("root divides exactly");
                exact.push(Scalar::from(q));
            }
            _ => remaining.push(x),
        }
    }
    while !remaining.is_empty() {
        let mut found = None;
        'search: for i in 0..remaining.len() {
            for j in i + 1..remaining.len() {
                let s = rationalize(remaining[i] + remaining[j], 1_000_000);
                let pr = rationalize(remaining[i] * remaining[j], 1_000_000);
                if let (Some(s), Some(pr)) = (s, pr) {
                    let quad = [pr.clone(), -s.clone(), BigRational::one()];
                    if let Some(q) = exact_divide(&p, &quad) {
                        found = Some((i, j, s, pr, q));
                        break 'search;
                    }
                }
            }
        }
        let Some((i, j, s, pr, q)) = found else {
            return Spectrum::Approximate(numeric);
        };
        p = q;
        let disc = &s * &s - BigRational::from_integer(4.into()) * &pr;
        if disc.is_negative() {
            return Spectrum::Approximate(numeric);
        }
        let root = match Scalar::sqrt_rational(&disc) {
            Ok(r) => r,
            Err(_) => return Spectrum::Approximate(numeric),
        };
        let half = Scalar::ratio(1, 2);
        let sum = Scalar::from(s);
        exact.push(&(&sum - &root) * &half);
        exact.push(&(&sum + &root) * &half);
        remaining.remove(j);
        remaining.remove(i);
    }
    exact.sort();
    Spectrum::Exact(exact)
}

/// Rounds a float spectrum for display and comparison of approximate
/// results.
pub fn round_spectrum(v: &[f64], digits: i32) -> Vec<f64> {
    let f = 10f64.powi(digits);
    v.iter().map(|x| (x * f).round() / f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| Scalar::from(x)).collect()).collect()
    }

    #[test]
    fn charpoly_of_diagonal() {
        let c = characteristic_polynomial(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(c, vec![Scalar::from(6), Scalar::from(-5), Scalar::one()]);
    }

    #[test]
    fn rational_and_quadratic_roots() {
        assert_eq!(
            symmetric_eigenvalues(&m(&[&[2, 1], &[1, 2]])),
            Spectrum::Exact(vec![Scalar::from(1), Scalar::from(3)])
        );
        let Spectrum::Exact(v) = symmetric_eigenvalues(&m(&[&[1, 1], &[1, 0]])) else {
            panic!("golden ratio spectrum should be exact");
        };
        assert_eq!(v[1], &(&Scalar::one() + &Scalar::sqrt_int(5)) * &Scalar::ratio(1, 2));
    }

    #[test]
    fn cubic_falls_back() {
        // x³ − 3x + 1 style irreducible cubic spectrum.
        let a = m(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert!(!symmetric_eigenvalues(&a).is_exact());
    }
}
