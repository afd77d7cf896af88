use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use exactnum::{linalg, Coeff, Scalar};
use multilinear::{KForm, QuadraticSpace};

use crate::{build_gamma, CliffordError, CliffordRep, SpinMatrix};

type RepCache = Mutex<HashMap<(usize, usize), Arc<CliffordRep>>>;

/// Representations are searched for once per signature and shared.
pub(crate) fn shared_rep(t: usize, s: usize) -> Result<Arc<CliffordRep>, CliffordError> {
    static CACHE: OnceLock<RepCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("representation cache poisoned");
    if let Some(rep) = guard.get(&(t, s)) {
        return Ok(rep.clone());
    }
    let rep = Arc::new(build_gamma(t, s)?);
    guard.insert((t, s), rep.clone());
    Ok(rep)
}

/// Clifford multiplication in a constant, not necessarily orthonormal,
/// frame whose metric is built from diagonal entries and lightcone pairs
/// `g(e_i, e_j) = c` with `g(e_i, e_i) = g(e_j, e_j) = 0`.
#[derive(Debug)]
pub struct FrameClifford {
    space: QuadraticSpace,
    rep: Arc<CliffordRep>,
    /// `e_i = Σ_a to_ortho[i][a] ô_a`.
    to_ortho: Vec<Vec<Scalar>>,
    /// `e^i = Σ_a coframe[i][a] ô^a`.
    coframe: Vec<Vec<Scalar>>,
    /// `γ̂^{a₁}⋯γ̂^{a_k}` indexed by the bitmask of `a₁ < ⋯ < a_k`.
    ortho_products: Vec<SpinMatrix<Scalar>>,
    lower: Vec<SpinMatrix<Scalar>>,
    upper: Vec<SpinMatrix<Scalar>>,
    images: Mutex<HashMap<u16, Vec<(u16, Scalar)>>>,
}

enum Slot {
    Diagonal(usize, Scalar, bool),
    Pair(usize, usize, Scalar),
}

fn classify(metric: &[Vec<Scalar>]) -> Result<Vec<Slot>, CliffordError> {
    let n = metric.len();
    let mut seen = vec![false; n];
    let mut slots = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let partners: Vec<usize> = (0..n).filter(|&j| j != i && !metric[i][j].is_zero()).collect();
        if partners.is_empty() {
            let gii = &metric[i][i];
            if gii.is_zero() {
                return Err(CliffordError::UnsupportedFrame);
            }
            slots.push(Slot::Diagonal(i, gii.abs().sqrt()?, gii.is_negative()));
            seen[i] = true;
            continue;
        }
        let j = partners[0];
        let j_partners = (0..n).filter(|&k| k != j && !metric[j][k].is_zero()).count();
        if partners.len() != 1 || !metric[i][i].is_zero() || !metric[j][j].is_zero() || j_partners != 1 {
            return Err(CliffordError::UnsupportedFrame);
        }
        slots.push(Slot::Pair(i, j, metric[i][j].clone()));
        seen[i] = true;
        seen[j] = true;
    }
    Ok(slots)
}

impl FrameClifford {
    pub fn new(metric: Vec<Vec<Scalar>>) -> Result<Self, CliffordError> {
        Self::with_orientation(metric, 1)
    }

    pub fn with_orientation(metric: Vec<Vec<Scalar>>, orientation: i32) -> Result<Self, CliffordError> {
        let space = QuadraticSpace::new(metric, orientation)?;
        let (t, s) = space.signature();
        let rep = shared_rep(t, s)?;
        Self::with_rep(space, rep)
    }

    /// Uses a given representation, which must match the frame signature.
    pub fn with_rep(space: QuadraticSpace, rep: Arc<CliffordRep>) -> Result<Self, CliffordError> {
        let n = space.dim();
        if space.signature() != rep.signature() {
            return Err(CliffordError::SignatureMismatch { frame: space.signature(), rep: rep.signature() });
        }
        let slots = classify(space.metric())?;
        let mut to_ortho = vec![vec![Scalar::zero(); n]; n];
        let mut next_space = rep.signature().0;
        let mut take_space = || {
            let a = next_space;
            next_space += 1;
            a
        };
        for slot in &slots {
            match slot {
                Slot::Diagonal(i, scale, true) => to_ortho[*i][0] = scale.clone(),
                Slot::Diagonal(i, scale, false) => to_ortho[*i][take_space()] = scale.clone(),
                Slot::Pair(i, j, c) => {
                    let a = take_space();
                    let half = c * &Scalar::ratio(1, 2);
                    to_ortho[*i][0] = Scalar::one();
                    to_ortho[*i][a] = Scalar::one();
                    to_ortho[*j][0] = -&half;
                    to_ortho[*j][a] = half;
                }
            }
        }
        let transpose: Vec<Vec<Scalar>> = (0..n).map(|a| (0..n).map(|i| to_ortho[i][a].clone()).collect()).collect();
        let coframe = linalg::inverse(&transpose)?;

        let spin = rep.spinor_dim();
        let upper_ortho: Vec<SpinMatrix<Scalar>> = (0..n).map(|a| rep.gamma_upper(a)).collect();
        let mut ortho_products = Vec::with_capacity(1 << n);
        ortho_products.push(SpinMatrix::identity(spin));
        for mask in 1usize..(1 << n) {
            let top = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
            let rest = mask & !(1 << top);
            let m = ortho_products[rest].mul(&upper_ortho[top]);
            ortho_products.push(m);
        }
        let combine = |coeffs: &[Scalar], gammas: &dyn Fn(usize) -> SpinMatrix<Scalar>| {
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .fold(SpinMatrix::zero(spin), |acc, (a, c)| acc.add(&gammas(a).scale(c)))
        };
        let lower = (0..n).map(|i| combine(&to_ortho[i], &|a| rep.gamma(a).clone())).collect();
        let upper = (0..n).map(|i| combine(&coframe[i], &|a| upper_ortho[a].clone())).collect();
        Ok(FrameClifford {
            space,
            rep,
            to_ortho,
            coframe,
            ortho_products,
            lower,
            upper,
            images: Mutex::new(HashMap::new()),
        })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn spinor_dim(&self) -> usize {
        self.rep.spinor_dim()
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    pub fn rep(&self) -> &CliffordRep {
        &self.rep
    }

    pub fn to_ortho(&self) -> &[Vec<Scalar>] {
        &self.to_ortho
    }

    pub fn coframe(&self) -> &[Vec<Scalar>] {
        &self.coframe
    }

    /// `γ_i = c(e_i♭)`.
    pub fn gamma_lower(&self, i: usize) -> &SpinMatrix<Scalar> {
        &self.lower[i]
    }

    /// `γ^i = c(e^i)`.
    pub fn gamma_upper(&self, i: usize) -> &SpinMatrix<Scalar> {
        &self.upper[i]
    }

    fn image(&self, mask: u16) -> Vec<(u16, Scalar)> {
        if let Some(v) = self.images.lock().expect("image cache poisoned").get(&mask) {
            return v.clone();
        }
        let n = self.dim();
        let mut acc: KForm<Scalar> = KForm::constant(n, Scalar::one());
        for i in multilinear::mask_indices(mask) {
            acc = acc.wedge(&KForm::one_form(self.coframe[i].clone()));
        }
        let out: Vec<(u16, Scalar)> = acc.terms().map(|(m, c)| (m, c.clone())).collect();
        self.images.lock().expect("image cache poisoned").insert(mask, out.clone());
        out
    }

    /// Clifford action `c(F)` of a form given in the coframe `e^i`.
    pub fn clifford_action<C: Coeff>(&self, form: &KForm<C>) -> SpinMatrix<C> {
        assert_eq!(form.dim(), self.dim(), "form dimension does not match frame");
        let mut ortho: HashMap<u16, C> = HashMap::new();
        for (mask, c) in form.terms() {
            for (o, s) in self.image(mask) {
                let term = c.scale(&s);
                let entry = ortho.entry(o).or_insert_with(C::zero);
                *entry = entry.plus(&term);
            }
        }
        let n = self.spinor_dim();
        let mut dense = vec![vec![C::zero(); n]; n];
        let mut keys: Vec<_> = ortho.keys().copied().collect();
        keys.sort_unstable();
        for o in keys {
            let c = &ortho[&o];
            if c.is_zero() {
                continue;
            }
            for (r, col, s) in self.ortho_products[o as usize].entries() {
                dense[r][col] = dense[r][col].plus(&c.scale(s));
            }
        }
        SpinMatrix::from_dense(&dense)
    }

    /// `c(X♭)` for a frame vector `X`.
    pub fn clifford_vector<C: Coeff>(&self, x: &[C]) -> SpinMatrix<C> {
        self.clifford_action(&self.space.flat(x))
    }

    /// `Ω_X(F) = 1/12 c(X♭ ∧ F) − 1/6 c(ι_X F)`.
    pub fn omega_xf<C: Coeff>(&self, x: &[C], f: &KForm<C>) -> SpinMatrix<C> {
        let wedge = self.space.flat(x).wedge(f);
        let inner = f.interior(x);
        self.clifford_action(&wedge)
            .scale(&Scalar::ratio(1, 12))
            .sub(&self.clifford_action(&inner).scale(&Scalar::ratio(1, 6)))
    }

    /// The vector `V` with `g(V, X) = (ε₁, X·ε₂)`, in frame components.
    pub fn spinor_to_vector(&self, eps1: &[Scalar], eps2: &[Scalar]) -> Result<Vec<Scalar>, CliffordError> {
        let n = self.dim();
        let lowered: Vec<Scalar> = (0..n)
            .map(|i| self.rep.bilinear(eps1, &self.lower[i].apply(eps2)))
            .collect::<Result<_, _>>()?;
        let inv = self.space.inverse_metric();
        Ok((0..n)
            .map(|i| (0..n).filter(|&j| !inv[i][j].is_zero()).map(|j| &inv[i][j] * &lowered[j]).sum())
            .collect())
    }

    /// Chirality operator of the representation, where one exists.
    pub fn chirality(&self) -> Option<&SpinMatrix<Scalar>> {
        self.rep.chirality()
    }
}
