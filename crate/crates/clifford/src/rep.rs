use exactnum::Scalar;

use crate::{CliffordError, SpinMatrix};

/// Block alphabet: identity, σ₁, ε = iσ₂ (squares to −1), σ₃.
const BLOCKS: [[[i64; 2]; 2]; 4] = [
    [[1, 0], [0, 1]],
    [[0, 1], [1, 0]],
    [[0, 1], [-1, 0]],
    [[1, 0], [0, -1]],
];
const EPS: u8 = 2;
const MAX_QUBITS: usize = 5;

/// A real representation of `Cℓ(t, s)` (mostly plus: the first `t`
/// generators square to −1, the rest to +1) on `2^q`-dimensional spinors.
#[derive(Clone, Debug)]
pub struct CliffordRep {
    t: usize,
    s: usize,
    strings: Vec<Vec<u8>>,
    gammas: Vec<SpinMatrix<Scalar>>,
    chirality: Option<SpinMatrix<Scalar>>,
    pairing: Option<SpinMatrix<Scalar>>,
    pairing_sign: Option<i32>,
}

fn anticommute(a: &[u8], b: &[u8]) -> bool {
    a.iter().zip(b).filter(|(x, y)| **x != 0 && **y != 0 && x != y).count() % 2 == 1
}

fn squares_negative(a: &[u8]) -> bool {
    a.iter().filter(|&&x| x == EPS).count() % 2 == 1
}

fn all_strings(q: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for code in 1..4usize.pow(q as u32) {
        let mut s = vec![0u8; q];
        let mut c = code;
        for k in (0..q).rev() {
            s[k] = (c % 4) as u8;
            c /= 4;
        }
        out.push(s);
    }
    out
}

fn search(neg: usize, pos: usize, chosen: &mut Vec<Vec<u8>>, negs: &[Vec<u8>], poss: &[Vec<u8>]) -> bool {
    if neg > 0 {
        for (i, cand) in negs.iter().enumerate() {
            chosen.push(cand.clone());
            let next_negs: Vec<_> = negs[i + 1..].iter().filter(|x| anticommute(cand, x)).cloned().collect();
            let next_poss: Vec<_> = poss.iter().filter(|x| anticommute(cand, x)).cloned().collect();
            if search(neg - 1, pos, chosen, &next_negs, &next_poss) {
                return true;
            }
            chosen.pop();
        }
        return false;
    }
    if pos == 0 {
        return true;
    }
    for (i, cand) in poss.iter().enumerate() {
        chosen.push(cand.clone());
        let next: Vec<_> = poss[i + 1..].iter().filter(|x| anticommute(cand, x)).cloned().collect();
        if search(0, pos - 1, chosen, &[], &next) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn string_matrix(string: &[u8]) -> SpinMatrix<Scalar> {
    let q = string.len();
    let n = 1usize << q;
    let mut m = SpinMatrix::zero(n);
    for r in 0..n {
        let mut col = 0usize;
        let mut sign = 1i64;
        for (k, &b) in string.iter().enumerate() {
            let rbit = (r >> (q - 1 - k)) & 1;
            let block = BLOCKS[b as usize];
            let cbit = if block[rbit][0] != 0 { 0 } else { 1 };
            sign *= block[rbit][cbit];
            col |= cbit << (q - 1 - k);
        }
        m.set(r, col, Scalar::from(sign));
    }
    m
}

/// Builds exact gamma matrices for signature `(t, s)` with `t ∈ {0, 1}`.
///
/// For `(1, 10)` the volume element `γ₀γ₁⋯γ₁₀` is arranged to act as `−1`.
/// Where the dimension is even a chirality operator `γ₀⋯γ_{n−1}` is
/// attached when it squares to `+1`.
pub fn build_gamma(t: usize, s: usize) -> Result<CliffordRep, CliffordError> {
    if t > 1 || t + s == 0 || t + s > 11 {
        return Err(CliffordError::UnsupportedSignature(t, s));
    }
    let mut strings = None;
    for q in 1..=MAX_QUBITS {
        let all = all_strings(q);
        let negs: Vec<_> = all.iter().filter(|x| squares_negative(x)).cloned().collect();
        let poss: Vec<_> = all.iter().filter(|x| !squares_negative(x)).cloned().collect();
        let mut chosen = Vec::new();
        if search(t, s, &mut chosen, &negs, &poss) {
            strings = Some(chosen);
            break;
        }
    }
    let strings = strings.ok_or(CliffordError::UnsupportedSignature(t, s))?;
    let mut gammas: Vec<SpinMatrix<Scalar>> = strings.iter().map(|x| string_matrix(x)).collect();
    let n = gammas[0].size();
    let volume = gammas.iter().skip(1).fold(gammas[0].clone(), |acc, g| acc.mul(g));
    if t == 1 && s == 10 && volume.is_multiple_of_identity(&Scalar::one()) {
        gammas[0] = gammas[0].neg();
    }
    let dim = t + s;
    let chirality = if dim % 2 == 0 {
        let omega = gammas.iter().skip(1).fold(gammas[0].clone(), |acc, g| acc.mul(g));
        omega.mul(&omega).is_multiple_of_identity(&Scalar::one()).then_some(omega)
    } else {
        None
    };
    let (pairing, pairing_sign) = if t == 1 {
        let c = gammas[0].clone();
        let sign = pairing_sign(&gammas, &c);
        (Some(c), sign)
    } else {
        (None, None)
    };
    debug_assert!(gammas.iter().all(|g| g.size() == n));
    Ok(CliffordRep { t, s, strings, gammas, chirality, pairing, pairing_sign })
}

/// The sign `σ` with `γ_aᵀ C = σ C γ_a` for every `a`, if one exists.
fn pairing_sign(gammas: &[SpinMatrix<Scalar>], c: &SpinMatrix<Scalar>) -> Option<i32> {
    for sigma in [1, -1] {
        let ok = gammas
            .iter()
            .all(|g| g.transpose().mul(c) == c.mul(g).scale(&Scalar::from(sigma as i64)));
        if ok {
            return Some(sigma);
        }
    }
    None
}

impl CliffordRep {
    pub fn signature(&self) -> (usize, usize) {
        (self.t, self.s)
    }

    pub fn dim(&self) -> usize {
        self.t + self.s
    }

    pub fn spinor_dim(&self) -> usize {
        self.gammas[0].size()
    }

    /// Tensor-string labels of the generators, e.g. `"IIIIE"`.
    pub fn labels(&self) -> Vec<String> {
        self.strings
            .iter()
            .map(|s| s.iter().map(|&b| ['I', 'X', 'E', 'Z'][b as usize]).collect())
            .collect()
    }

    /// `η_aa`: −1 for the first `t` generators, +1 otherwise.
    pub fn eta(&self, a: usize) -> i64 {
        if a < self.t {
            -1
        } else {
            1
        }
    }

    pub fn gamma(&self, a: usize) -> &SpinMatrix<Scalar> {
        &self.gammas[a]
    }

    pub fn gammas(&self) -> &[SpinMatrix<Scalar>] {
        &self.gammas
    }

    /// `γ^a = η^{aa} γ_a`.
    pub fn gamma_upper(&self, a: usize) -> SpinMatrix<Scalar> {
        self.gammas[a].scale(&Scalar::from(self.eta(a)))
    }

    /// `γ₀γ₁⋯γ_{n−1}`.
    pub fn volume_element(&self) -> SpinMatrix<Scalar> {
        self.gammas.iter().skip(1).fold(self.gammas[0].clone(), |acc, g| acc.mul(g))
    }

    pub fn chirality(&self) -> Option<&SpinMatrix<Scalar>> {
        self.chirality.as_ref()
    }

    /// Matrix `C` of the bilinear form `(ψ, χ) = ψᵀ C χ`, with `C = γ₀`.
    pub fn pairing(&self) -> Option<&SpinMatrix<Scalar>> {
        self.pairing.as_ref()
    }

    /// `σ` in `(γ_a ψ, χ) = σ (ψ, γ_a χ)`.
    pub fn pairing_sign(&self) -> Option<i32> {
        self.pairing_sign
    }

    pub fn bilinear(&self, psi: &[Scalar], chi: &[Scalar]) -> Result<Scalar, CliffordError> {
        let c = self.pairing.as_ref().ok_or(CliffordError::NoPairing)?;
        let c_chi = c.apply(chi);
        Ok(psi.iter().zip(&c_chi).map(|(a, b)| a * b).sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_clifford(rep: &CliffordRep) {
        let n = rep.spinor_dim();
        for a in 0..rep.dim() {
            for b in 0..rep.dim() {
                let ac = rep.gamma(a).anticommutator(rep.gamma(b));
                let expected = if a == b { Scalar::from(2 * rep.eta(a)) } else { Scalar::zero() };
                assert!(ac.is_multiple_of_identity(&expected), "a={a} b={b}");
                assert_eq!(ac.size(), n);
            }
        }
    }

    #[test]
    fn eleven_dimensional() {
        let rep = build_gamma(1, 10).unwrap();
        assert_eq!(rep.spinor_dim(), 32);
        check_clifford(&rep);
        assert!(rep.volume_element().is_multiple_of_identity(&Scalar::from(-1)));
        assert!(rep.chirality().is_none());
    }

    #[test]
    fn ten_dimensional_chirality() {
        let rep = build_gamma(1, 9).unwrap();
        assert_eq!(rep.spinor_dim(), 32);
        check_clifford(&rep);
        let chi = rep.chirality().unwrap();
        assert!(chi.mul(chi).is_multiple_of_identity(&Scalar::one()));
        for g in rep.gammas() {
            assert!(chi.anticommutator(g).is_zero());
        }
        assert_eq!(chi.trace(), Scalar::zero());
    }

    #[test]
    fn six_dimensional_and_euclidean() {
        let rep = build_gamma(1, 5).unwrap();
        assert_eq!(rep.spinor_dim(), 16);
        check_clifford(&rep);
        for k in 1..=4 {
            check_clifford(&build_gamma(0, k).unwrap());
        }
    }

    #[test]
    fn unsupported() {
        assert!(matches!(build_gamma(2, 3), Err(CliffordError::UnsupportedSignature(2, 3))));
        assert!(build_gamma(1, 11).is_err());
    }

    #[test]
    fn pairing_is_spin_invariant() {
        let rep = build_gamma(1, 10).unwrap();
        let c = rep.pairing().unwrap();
        assert_eq!(rep.pairing_sign(), Some(-1));
        assert_eq!(c.transpose(), c.neg());
        for a in 0..11 {
            for b in 0..11 {
                let gab = rep.gamma(a).mul(rep.gamma(b));
                let lhs = c.mul(&gab).add(&gab.transpose().mul(c));
                if a != b {
                    assert!(lhs.is_zero(), "pairing not invariant under γ_{a}{b}");
                }
            }
        }
    }
}
