use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::{Coeff, NumError, Scalar};

/// Sparse multivariate polynomial with [`Scalar`] coefficients.
///
/// Exponent vectors always have one entry per variable. Binary operations
/// on polynomials over different variable lists work over the union, with
/// the left operand's variables first.
#[derive(Clone)]
pub struct Polynomial {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl Polynomial {
    pub fn zero_in(vars: &[&str]) -> Self {
        Polynomial {
            vars: Arc::new(vars.iter().map(|v| v.to_string()).collect()),
            terms: BTreeMap::new(),
        }
    }

    pub fn with_vars(vars: Arc<Vec<String>>) -> Self {
        Polynomial { vars, terms: BTreeMap::new() }
    }

    pub fn constant(s: Scalar) -> Self {
        let mut p = Polynomial::zero_in(&[]);
        if !s.is_zero() {
            p.terms.insert(Vec::new(), s);
        }
        p
    }

    /// The monomial `name` over the given variable list.
    pub fn variable(vars: &[&str], name: &str) -> Result<Self, NumError> {
        let mut p = Polynomial::zero_in(vars);
        let idx = p.index_of(name)?;
        let mut exps = vec![0u32; vars.len()];
        exps[idx] = 1;
        p.terms.insert(exps, Scalar::one());
        Ok(p)
    }

    /// Builds from explicit `(exponents, coefficient)` pairs.
    pub fn from_terms(vars: Arc<Vec<String>>, terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>) -> Self {
        let mut p = Polynomial::with_vars(vars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), p.vars.len(), "exponent vector length mismatch");
            p.insert_term(exps, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    fn index_of(&self, name: &str) -> Result<usize, NumError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| NumError::UnknownVariable(name.to_string()))
    }

    fn insert_term(&mut self, exps: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The value if this polynomial is constant.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (exps, c) = self.terms.iter().next().expect("one term");
                exps.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Scalar {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    fn union_vars(&self, other: &Polynomial) -> Arc<Vec<String>> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            return self.vars.clone();
        }
        if other.vars.iter().all(|v| self.vars.contains(v)) {
            return self.vars.clone();
        }
        if self.vars.is_empty() {
            return other.vars.clone();
        }
        let mut merged: Vec<String> = self.vars.as_ref().clone();
        for v in other.vars.iter() {
            if !merged.contains(v) {
                merged.push(v.clone());
            }
        }
        Arc::new(merged)
    }

    /// Re-expresses over `target`, which must contain every variable.
    pub fn align(&self, target: &Arc<Vec<String>>) -> Result<Polynomial, NumError> {
        if Arc::ptr_eq(&self.vars, target) || self.vars == *target {
            return Ok(Polynomial { vars: target.clone(), terms: self.terms.clone() });
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|t| t == v)
                    .ok_or_else(|| NumError::UnknownVariable(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut out = Polynomial::with_vars(target.clone());
        for (exps, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &x) in exps.iter().enumerate() {
                e[map[i]] = x;
            }
            out.insert_term(e, c.clone());
        }
        Ok(out)
    }

    fn aligned_pair(&self, other: &Polynomial) -> (Polynomial, Polynomial) {
        let vars = self.union_vars(other);
        let a = self.align(&vars).expect("union contains all variables");
        let b = other.align(&vars).expect("union contains all variables");
        (a, b)
    }

    fn combine(&self, other: &Polynomial, sign: i64) -> Polynomial {
        let (mut a, b) = self.aligned_pair(other);
        for (exps, c) in b.terms {
            let c = if sign < 0 { -c } else { c };
            a.insert_term(exps, c);
        }
        a
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        let (a, b) = self.aligned_pair(other);
        let mut out = Polynomial::with_vars(a.vars.clone());
        for (e1, c1) in &a.terms {
            for (e2, c2) in &b.terms {
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.insert_term(exps, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        if s.is_zero() {
            return Polynomial::with_vars(self.vars.clone());
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    /// Formal partial derivative.
    pub fn partial(&self, var: &str) -> Result<Polynomial, NumError> {
        let idx = self.index_of(var)?;
        let mut out = Polynomial::with_vars(self.vars.clone());
        for (exps, c) in &self.terms {
            if exps[idx] == 0 {
                continue;
            }
            let mut e = exps.clone();
            e[idx] -= 1;
            out.insert_term(e, c * &Scalar::from(exps[idx] as i64));
        }
        Ok(out)
    }

    /// Evaluates at values given in variable order.
    pub fn evaluate(&self, values: &[Scalar]) -> Scalar {
        assert_eq!(values.len(), self.vars.len(), "one value per variable");
        let mut total = Scalar::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in values.iter().zip(exps) {
                term = &term * &v.pow(e);
            }
            total += &term;
        }
        total
    }

    /// Monomial exponents mapped to their coefficients.
    pub fn coefficient_map(&self) -> BTreeMap<Vec<u32>, Scalar> {
        self.terms.clone()
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.aligned_pair(other);
        a.terms == b.terms
    }
}

impl<'a, 'b> Add<&'b Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'b Polynomial) -> Polynomial {
        self.combine(rhs, 1)
    }
}

impl<'a, 'b> Sub<&'b Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'b Polynomial) -> Polynomial {
        self.combine(rhs, -1)
    }
}

impl<'a, 'b> Mul<&'b Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'b Polynomial) -> Polynomial {
        self.product(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Scalar::from(-1))
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Coeff for Polynomial {
    fn zero() -> Self {
        Polynomial::zero_in(&[])
    }
    fn one() -> Self {
        Polynomial::constant(Scalar::one())
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_scalar(s: Scalar) -> Self {
        Polynomial::constant(s)
    }
    fn scale(&self, s: &Scalar) -> Self {
        Polynomial::scale(self, s)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let monomial: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        self.vars[j].clone()
                    } else {
                        format!("{}^{}", self.vars[j], e)
                    }
                })
                .collect();
            let needs_parens = c.terms().count() > 1;
            match (monomial.is_empty(), c.is_one(), needs_parens) {
                (true, _, _) => write!(f, "{c}")?,
                (false, true, _) => write!(f, "{}", monomial.join("*"))?,
                (false, false, true) => write!(f, "({c})*{}", monomial.join("*"))?,
                (false, false, false) => write!(f, "{c}*{}", monomial.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
