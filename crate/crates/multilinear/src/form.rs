use std::collections::BTreeMap;
use std::fmt;

use exactnum::{Coeff, Scalar};

use crate::{FormError, QuadraticSpace};

/// Indices of the set bits of `mask`, ascending.
pub fn mask_indices(mask: u16) -> Vec<usize> {
    (0..16).filter(|i| mask & (1 << i) != 0).collect()
}

/// Sign of `e^a ∧ e^b` relative to `e^{a ∪ b}`; zero if they overlap.
pub(crate) fn merge_sign(a: u16, b: u16) -> i32 {
    if a & b != 0 {
        return 0;
    }
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A homogeneous exterior form of degree `k` on an `n`-dimensional frame.
///
/// All zero forms on the same space compare equal regardless of degree.
#[derive(Clone)]
pub struct KForm<C> {
    dim: usize,
    degree: usize,
    comps: BTreeMap<u16, C>,
}

impl<C: PartialEq> PartialEq for KForm<C> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && (self.degree == other.degree || self.comps.is_empty())
            && self.comps == other.comps
    }
}

impl<C: Coeff> KForm<C> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        KForm { dim, degree, comps: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: C) -> Self {
        let mut f = KForm::zero(dim, 0);
        f.add_term(0, c);
        f
    }

    /// `e^{i₁} ∧ ⋯ ∧ e^{i_k}` for arbitrary (possibly unsorted) indices.
    pub fn basis(dim: usize, indices: &[usize]) -> Self {
        let mut f = KForm::zero(dim, indices.len());
        let mut mask = 0u16;
        let mut sign = 1;
        for &i in indices {
            assert!(i < dim, "index {i} out of range for dimension {dim}");
            let bit = 1u16 << i;
            sign *= merge_sign(mask, bit);
            if sign == 0 {
                return f;
            }
            mask |= bit;
        }
        f.add_term(mask, C::from_int(sign as i64));
        f
    }

    pub fn one_form(comps: Vec<C>) -> Self {
        let dim = comps.len();
        let mut f = KForm::zero(dim, 1);
        for (i, c) in comps.into_iter().enumerate() {
            f.add_term(1 << i, c);
        }
        f
    }

    pub fn from_terms<I>(dim: usize, degree: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<usize>, C)>,
    {
        let mut f = KForm::zero(dim, degree);
        for (idx, c) in terms {
            assert_eq!(idx.len(), degree, "index set length must equal degree");
            f = f.add(&KForm::basis(dim, &idx).scale_by(&c));
        }
        f
    }

    pub(crate) fn add_term(&mut self, mask: u16, c: C) {
        if c.is_zero() {
            return;
        }
        match self.comps.get_mut(&mask) {
            Some(existing) => {
                *existing = existing.plus(&c);
                if existing.is_zero() {
                    self.comps.remove(&mask);
                }
            }
            None => {
                self.comps.insert(mask, c);
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Iterator over `(bitmask, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (u16, &C)> {
        self.comps.iter().map(|(m, c)| (*m, c))
    }

    /// Iterator over `(ascending indices, coefficient)` pairs.
    pub fn indexed_terms(&self) -> impl Iterator<Item = (Vec<usize>, &C)> {
        self.comps.iter().map(|(m, c)| (mask_indices(*m), c))
    }

    pub fn num_terms(&self) -> usize {
        self.comps.len()
    }

    /// Component on `e^{i₁} ∧ ⋯`, accounting for the ordering of `indices`.
    pub fn get(&self, indices: &[usize]) -> C {
        let b: KForm<C> = KForm::basis(self.dim, indices);
        match b.comps.iter().next() {
            None => C::zero(),
            Some((mask, sign)) => self.comps.get(mask).map_or_else(C::zero, |c| c.times(sign)),
        }
    }

    /// Components of a 1-form as a dense vector.
    pub fn one_form_components(&self) -> Vec<C> {
        assert_eq!(self.degree, 1, "not a 1-form");
        (0..self.dim).map(|i| self.comps.get(&(1 << i)).cloned().unwrap_or_else(C::zero)).collect()
    }

    /// The 0-form value.
    pub fn constant_value(&self) -> C {
        assert_eq!(self.degree, 0, "not a 0-form");
        self.comps.get(&0).cloned().unwrap_or_else(C::zero)
    }

    fn check_same(&self, other: &KForm<C>) {
        assert_eq!(self.dim, other.dim, "forms live on different spaces");
        assert_eq!(self.degree, other.degree, "forms have different degrees");
    }

    /// Sum of two forms. A zero form of any degree acts as the identity,
    /// which keeps contractions of 0-forms (degree −1) harmless.
    pub fn add(&self, other: &KForm<C>) -> KForm<C> {
        if other.is_zero() && self.dim == other.dim {
            return self.clone();
        }
        if self.is_zero() && self.dim == other.dim {
            return other.clone();
        }
        self.check_same(other);
        let mut out = self.clone();
        for (m, c) in &other.comps {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &KForm<C>) -> KForm<C> {
        if other.is_zero() && self.dim == other.dim {
            return self.clone();
        }
        if self.is_zero() && self.dim == other.dim {
            return other.neg();
        }
        self.check_same(other);
        let mut out = self.clone();
        for (m, c) in &other.comps {
            out.add_term(*m, c.negate());
        }
        out
    }

    pub fn neg(&self) -> KForm<C> {
        KForm {
            dim: self.dim,
            degree: self.degree,
            comps: self.comps.iter().map(|(m, c)| (*m, c.negate())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> KForm<C> {
        let mut out = KForm::zero(self.dim, self.degree);
        for (m, c) in &self.comps {
            out.add_term(*m, c.scale(s));
        }
        out
    }

    pub fn scale_by(&self, s: &C) -> KForm<C> {
        let mut out = KForm::zero(self.dim, self.degree);
        for (m, c) in &self.comps {
            out.add_term(*m, c.times(s));
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> KForm<D> {
        let mut out = KForm::zero(self.dim, self.degree);
        for (m, c) in &self.comps {
            out.add_term(*m, f(c));
        }
        out
    }

    /// Exterior product. Degrees beyond the dimension give the zero form.
    pub fn wedge(&self, other: &KForm<C>) -> KForm<C> {
        assert_eq!(self.dim, other.dim, "forms live on different spaces");
        let mut out = KForm::zero(self.dim, self.degree + other.degree);
        for (ma, ca) in &self.comps {
            for (mb, cb) in &other.comps {
                let s = merge_sign(*ma, *mb);
                if s == 0 {
                    continue;
                }
                let prod = ca.times(cb);
                out.add_term(ma | mb, if s > 0 { prod } else { prod.negate() });
            }
        }
        out
    }

    /// Contraction `ι_{e_i}` with a basis vector.
    pub fn interior_basis(&self, i: usize) -> KForm<C> {
        let mut out = KForm::zero(self.dim, self.degree.saturating_sub(1));
        if self.degree == 0 {
            return out;
        }
        let bit = 1u16 << i;
        for (m, c) in &self.comps {
            if m & bit == 0 {
                continue;
            }
            let before = (m & (bit - 1)).count_ones();
            out.add_term(m & !bit, if before % 2 == 0 { c.clone() } else { c.negate() });
        }
        out
    }

    /// Contraction `ι_v` with a vector given by frame components.
    pub fn interior(&self, v: &[C]) -> KForm<C> {
        assert_eq!(v.len(), self.dim, "vector has wrong length");
        let mut out = KForm::zero(self.dim, self.degree.saturating_sub(1));
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            out = out.add(&self.interior_basis(i).scale_by(vi));
        }
        out
    }

    /// Contraction with a vector whose components are constants.
    pub fn interior_scalar(&self, v: &[Scalar]) -> KForm<C> {
        let lifted: Vec<C> = v.iter().map(|x| C::from_scalar(x.clone())).collect();
        self.interior(&lifted)
    }

    /// Hodge star, defined by `a ∧ ⋆b = ⟨a, b⟩ vol`.
    pub fn hodge(&self, space: &QuadraticSpace) -> KForm<C> {
        assert_eq!(space.dim(), self.dim, "form and space dimensions differ");
        let n = self.dim;
        let full: u16 = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
        let factor = space.volume_factor() * &Scalar::from(space.orientation() as i64);
        let mut out = KForm::zero(n, n - self.degree);
        for (m, c) in &self.comps {
            for (raised_mask, r) in raise_mask(space, *m).comps {
                let comp = full & !raised_mask;
                let s = merge_sign(raised_mask, comp);
                let coeff = &(&r * &factor) * &Scalar::from(s as i64);
                out.add_term(comp, c.scale(&coeff));
            }
        }
        out
    }

    /// `⟨a, b⟩ = Σ a_I g^{IJ} b_J` over increasing index sets.
    pub fn inner(&self, other: &KForm<C>, space: &QuadraticSpace) -> Result<C, FormError> {
        if self.degree != other.degree {
            return Err(FormError::DegreeMismatch { left: self.degree, right: other.degree });
        }
        assert_eq!(self.dim, other.dim, "forms live on different spaces");
        let mut acc = C::zero();
        for (m, b) in &other.comps {
            for (rm, r) in raise_mask(space, *m).comps {
                if let Some(a) = self.comps.get(&rm) {
                    acc = acc.plus(&a.times(b).scale(&r));
                }
            }
        }
        Ok(acc)
    }

    /// `|a|² = ⟨a, a⟩`; may be negative or zero in indefinite signature.
    pub fn norm_squared(&self, space: &QuadraticSpace) -> C {
        self.inner(self, space).expect("same degree")
    }
}

/// `e^I` with indices raised by the inverse metric, as a combination of
/// `e_J` (stored with the same bitmask encoding).
fn raise_mask(space: &QuadraticSpace, mask: u16) -> KForm<Scalar> {
    let n = space.dim();
    let inv = space.inverse_metric();
    let mut acc: KForm<Scalar> = KForm::constant(n, Scalar::one());
    for i in mask_indices(mask) {
        let row = KForm::one_form(inv[i].clone());
        acc = acc.wedge(&row);
    }
    acc
}

impl<C: Coeff + fmt::Display> fmt::Display for KForm<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let name = if *m == 0 {
                "1".to_string()
            } else {
                mask_indices(*m).iter().map(|j| format!("e{j}")).collect::<Vec<_>>().join("^")
            };
            write!(f, "({c})*{name}")?;
        }
        Ok(())
    }
}

impl<C: Coeff + fmt::Debug> fmt::Debug for KForm<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("KForm")
            .field("dim", &self.dim)
            .field("degree", &self.degree)
            .field("terms", &self.comps.iter().map(|(m, c)| (mask_indices(*m), c)).collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactnum::Polynomial;

    type F = KForm<Scalar>;

    fn e(n: usize, idx: &[usize]) -> F {
        KForm::basis(n, idx)
    }

    #[test]
    fn wedge_examples() {
        assert!(e(4, &[0]).wedge(&e(4, &[0])).is_zero());
        assert_eq!(e(4, &[0, 1]).wedge(&e(4, &[2, 3])), e(4, &[0, 1, 2, 3]));
        assert_eq!(e(4, &[1]).wedge(&e(4, &[0])), e(4, &[0, 1]).neg());
        let f = e(11, &[1, 2, 3, 4]);
        assert!(f.wedge(&f).is_zero());
        let top = e(3, &[0, 1, 2]);
        assert!(top.wedge(&e(3, &[0])).is_zero());
        assert_eq!(top.wedge(&e(3, &[0])).degree(), 4);
    }

    #[test]
    fn interior_examples() {
        assert_eq!(e(3, &[0, 1]).interior_basis(0), e(3, &[1]));
        assert!(e(3, &[0, 1]).interior_basis(2).is_zero());
        assert_eq!(e(3, &[0, 1]).interior_basis(1), e(3, &[0]).neg());
    }

    #[test]
    fn interior_along_lightcone_direction() {
        // frame (+, -, 1, …, 9): dx^- is index 1, ∂_- contracts it
        let mu = Scalar::from(6);
        let f = e(11, &[1, 2, 3, 4]).scale(&mu);
        let mut v = vec![Scalar::zero(); 11];
        v[1] = Scalar::one();
        assert_eq!(f.interior_scalar(&v), e(11, &[2, 3, 4]).scale(&mu));
    }

    #[test]
    fn hodge_euclidean_four() {
        let g = QuadraticSpace::euclidean(4);
        assert_eq!(e(4, &[0, 1]).hodge(&g), e(4, &[2, 3]));
        assert_eq!(KForm::<Scalar>::constant(4, Scalar::one()).hodge(&g), e(4, &[0, 1, 2, 3]));
    }

    #[test]
    fn inner_products() {
        let s4 = QuadraticSpace::euclidean(4);
        assert_eq!(e(4, &[0, 1, 2, 3]).norm_squared(&s4), Scalar::one());
        let e3 = QuadraticSpace::euclidean(3);
        assert!(e(3, &[0, 1]).inner(&e(3, &[0, 2]), &e3).unwrap().is_zero());
        assert_eq!(
            e(3, &[0]).inner(&e(3, &[0, 1]), &e3),
            Err(FormError::DegreeMismatch { left: 1, right: 2 })
        );
        let cw = QuadraticSpace::lightcone(9);
        assert!(e(11, &[1, 2, 3, 4]).scale(&Scalar::from(6)).norm_squared(&cw).is_zero());
        assert_eq!(e(11, &[0, 1]).norm_squared(&cw), Scalar::from(-1));
    }

    #[test]
    fn polynomial_coefficients() {
        let x: Polynomial = Polynomial::variable(&["x"], "x").unwrap();
        let f: KForm<Polynomial> = KForm::basis(3, &[0]).scale_by(&x);
        let g: KForm<Polynomial> = KForm::basis(3, &[1]).scale_by(&x);
        let w = f.wedge(&g);
        assert_eq!(w.get(&[0, 1]), &x * &x);
        assert_eq!(w.get(&[1, 0]), -&(&x * &x));
    }
}
