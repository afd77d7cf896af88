use std::collections::BTreeMap;

use exactnum::{Coeff, Complex, Field, NumError, Polynomial, Scalar};

use crate::SpinMatrix;

/// Monomial label: variable names with their nonzero exponents.
pub type MonomialKey = Vec<(String, u32)>;

/// Matrix entries that split into coefficients over a field, one per
/// monomial. A vector is annihilated by a polynomial matrix at every point
/// iff it is annihilated by each monomial block.
pub trait Expandable: Coeff {
    type Field: Field;
    fn expand(&self) -> Vec<(MonomialKey, Self::Field)>;
}

impl Expandable for Scalar {
    type Field = Scalar;
    fn expand(&self) -> Vec<(MonomialKey, Scalar)> {
        if self.is_zero() {
            Vec::new()
        } else {
            vec![(Vec::new(), self.clone())]
        }
    }
}

impl Expandable for Complex<Scalar> {
    type Field = Complex<Scalar>;
    fn expand(&self) -> Vec<(MonomialKey, Complex<Scalar>)> {
        if self.is_zero() {
            Vec::new()
        } else {
            vec![(Vec::new(), self.clone())]
        }
    }
}

fn monomial_key(vars: &[String], exps: &[u32]) -> MonomialKey {
    let mut key: MonomialKey = vars.iter().cloned().zip(exps.iter().copied()).filter(|(_, e)| *e > 0).collect();
    key.sort();
    key
}

impl Expandable for Polynomial {
    type Field = Scalar;
    fn expand(&self) -> Vec<(MonomialKey, Scalar)> {
        self.terms().map(|(e, c)| (monomial_key(self.vars(), e), c.clone())).collect()
    }
}

impl Expandable for Complex<Polynomial> {
    type Field = Complex<Scalar>;
    fn expand(&self) -> Vec<(MonomialKey, Complex<Scalar>)> {
        let mut out: BTreeMap<MonomialKey, Complex<Scalar>> = BTreeMap::new();
        for (k, c) in self.re.expand() {
            out.entry(k).or_insert_with(Complex::zero).re = c;
        }
        for (k, c) in self.im.expand() {
            out.entry(k).or_insert_with(Complex::zero).im = c;
        }
        out.into_iter().collect()
    }
}

/// Common kernel of a family of operators, with an exact basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Kernel<F> {
    pub dim: usize,
    pub basis: Vec<Vec<F>>,
}

/// Incrementally maintained row space in reduced echelon form.
struct RowSpace<F> {
    n: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> RowSpace<F> {
    fn new(n: usize) -> Self {
        RowSpace { n, rows: Vec::new(), pivots: Vec::new() }
    }

    fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    fn insert(&mut self, mut row: Vec<F>) -> Result<(), NumError> {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x = x.minus(&f.times(y));
                }
            }
        }
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return Ok(());
        };
        let inv = row[p].inverse()?;
        for x in row.iter_mut() {
            *x = x.times(&inv);
        }
        for r in self.rows.iter_mut() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x = x.minus(&f.times(y));
                }
            }
        }
        self.rows.push(row);
        self.pivots.push(p);
        Ok(())
    }

    fn nullspace(&self) -> Vec<Vec<F>> {
        let free: Vec<usize> = (0..self.n).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.n];
                v[f] = F::one();
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    v[pc] = row[f].negate();
                }
                v
            })
            .collect()
    }
}

/// Dimension and basis of `⋂ ker(op)` over the field of the monomial
/// coefficients. Polynomial entries are split per monomial, so the result
/// is the space of constant spinors annihilated identically in the
/// coordinates.
pub fn kernel<C: Expandable>(ops: &[SpinMatrix<C>]) -> Result<Kernel<C::Field>, NumError> {
    let n = ops.first().map_or(0, |m| m.size());
    let mut space = RowSpace::new(n);
    'outer: for op in ops {
        assert_eq!(op.size(), n, "operator sizes differ");
        for i in 0..n {
            let mut blocks: BTreeMap<MonomialKey, Vec<C::Field>> = BTreeMap::new();
            for (_, j, x) in op.entries().filter(|(r, _, _)| *r == i) {
                for (key, c) in x.expand() {
                    blocks.entry(key).or_insert_with(|| vec![C::Field::zero(); n])[j] = c;
                }
            }
            for (_, row) in blocks {
                space.insert(row)?;
                if space.is_full() {
                    break 'outer;
                }
            }
        }
    }
    let basis = space.nullspace();
    Ok(Kernel { dim: basis.len(), basis })
}
