use exactnum::{linalg, Scalar};

use crate::algebra::basis_vector;
use crate::spectrum::{symmetric_eigenvalues, Spectrum};
use crate::{LieAlgebra, LieError, MetricLieAlgebra};

fn apply(m: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    m.iter().map(|row| row.iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum()).collect()
}

/// Double extension of `g` by a one-dimensional algebra acting through the
/// skew derivation `j` (a matrix acting on column vectors of `g`).
///
/// Basis of the result: `e₊, e₋, g₀, …`, with `e₊` central,
/// `[e₋, X] = J X`, `[X, Y] = [X, Y]_g + B(J X, Y) e₊`, scalar product
/// `⟨e₊, e₋⟩ = 1`, `⟨e₋, e₋⟩ = b` and `B` on `g`.
pub fn double_extension(g: &MetricLieAlgebra, j: &[Vec<Scalar>], b: Scalar) -> Result<MetricLieAlgebra, LieError> {
    let n = g.dim();
    if j.len() != n || j.iter().any(|r| r.len() != n) {
        return Err(LieError::Dimension { expected: n, found: j.len() });
    }
    let metric = g.metric();
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| apply(j, &basis_vector(n, i))).collect();
    for a in 0..n {
        for c in a..n {
            let lhs = &g.pair(&images[a], &basis_vector(n, c)) + &g.pair(&basis_vector(n, a), &images[c]);
            if !lhs.is_zero() {
                return Err(LieError::NotSkew(a, c));
            }
        }
    }
    let alg = g.algebra();
    for a in 0..n {
        for c in a + 1..n {
            let lhs = apply(j, alg.bracket_basis(a, c));
            let r1 = alg.bracket(&images[a], &basis_vector(n, c));
            let r2 = alg.bracket(&basis_vector(n, a), &images[c]);
            let rhs: Vec<Scalar> = r1.iter().zip(&r2).map(|(x, y)| x + y).collect();
            if lhs != rhs {
                return Err(LieError::NotDerivation(a, c));
            }
        }
    }

    let dim = n + 2;
    let lift = |v: &[Scalar]| {
        let mut out = vec![Scalar::zero(); dim];
        for (k, x) in v.iter().enumerate() {
            out[k + 2] = x.clone();
        }
        out
    };
    let mut out = LieAlgebra::abelian(dim);
    for a in 0..n {
        out.set_bracket(1, a + 2, lift(&images[a]))?;
        for c in a + 1..n {
            let mut v = lift(alg.bracket_basis(a, c));
            v[0] = g.pair(&images[a], &basis_vector(n, c));
            out.set_bracket(a + 2, c + 2, v)?;
        }
    }
    let mut big = vec![vec![Scalar::zero(); dim]; dim];
    big[0][1] = Scalar::one();
    big[1][0] = Scalar::one();
    big[1][1] = b;
    for a in 0..n {
        for c in 0..n {
            big[a + 2][c + 2] = metric[a][c].clone();
        }
    }
    MetricLieAlgebra::new(format!("d({})", g.name()), out, big)
}

/// Block-diagonal skew map with `J e_{2k} = λ_k e_{2k+1}`,
/// `J e_{2k+1} = −λ_k e_{2k}`.
pub fn skew_blocks(lambdas: &[Scalar]) -> Vec<Vec<Scalar>> {
    let n = 2 * lambdas.len();
    let mut j = vec![vec![Scalar::zero(); n]; n];
    for (k, l) in lambdas.iter().enumerate() {
        j[2 * k + 1][2 * k] = l.clone();
        j[2 * k][2 * k + 1] = -l;
    }
    j
}

/// `𝔡_{2n+2}`: the double extension of euclidean `E^{2n}` by the skew map
/// with the given skew eigenvalues, at `b = 0`.
pub fn d2n2(lambdas: &[Scalar]) -> Result<MetricLieAlgebra, LieError> {
    let n = 2 * lambdas.len();
    let base = MetricLieAlgebra::new(format!("E{n}"), LieAlgebra::abelian(n), linalg::identity(n))?;
    let names: Vec<String> = lambdas.iter().map(|l| l.to_string()).collect();
    Ok(double_extension(&base, &skew_blocks(lambdas), Scalar::zero())?.with_name(format!("d2n2({})", names.join(","))))
}

/// Skew eigenvalues `0 ≤ λ₁ ≤ … ≤ λ_n` of a skew-symmetric matrix, read
/// off from the spectrum of `−J²` (each `λ²` appears twice).
pub fn skew_eigenvalues(j: &[Vec<Scalar>]) -> Result<Vec<Scalar>, LieError> {
    let n = j.len();
    let mut neg_sq = vec![vec![Scalar::zero(); n]; n];
    for a in 0..n {
        for c in 0..n {
            let v: Scalar = (0..n).map(|k| &j[a][k] * &j[k][c]).sum();
            neg_sq[a][c] = -&v;
        }
    }
    let Spectrum::Exact(squares) = symmetric_eigenvalues(&neg_sq) else {
        return Err(LieError::DegenerateAction);
    };
    let mut out = Vec::new();
    for pair in squares.chunks(2) {
        out.push(pair[0].sqrt()?);
    }
    Ok(out)
}

/// Normalizes skew eigenvalues: sorted ascending with the largest scaled
/// to 1, which a reciprocal rescaling of `e₊` and `e₋` absorbs.
pub fn normalize_skew_eigenvalues(lambdas: &[Scalar]) -> Result<Vec<Scalar>, LieError> {
    let mut v: Vec<Scalar> = lambdas.iter().map(|l| l.abs()).collect();
    if v.iter().any(|l| l.is_zero()) {
        return Err(LieError::DegenerateAction);
    }
    v.sort();
    let top = v.last().cloned().ok_or(LieError::DegenerateAction)?;
    Ok(v.iter().map(|l| l / &top).collect())
}

/// The automorphism `e₋ ↦ e₋ − ½ b e₊` (other basis vectors fixed) of a
/// double extension with basis `e₊, e₋, …`. It is an isometry from the
/// `b = 0` scalar product to the one with `⟨e₋, e₋⟩ = b`.
pub fn b_removal_map(dim: usize, b: &Scalar) -> Vec<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = linalg::identity(dim);
    m[0][1] = -&(b * &Scalar::ratio(1, 2));
    m
}
