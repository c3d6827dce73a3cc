//! Sparse multivariate polynomials over the matrix coefficient algebra.
//!
//! These realize functions of the zero modes `X^1 ... X^D` (formal power
//! series truncated to polynomials, so every identity is checked without
//! truncation error) and the components of all geometric sections.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::scalars::{MatCoeff, Rat};

/// Exponent vector with graded-lexicographic ordering (total degree first,
/// then lexicographic by variable index). The ordering only governs
/// canonical serialization.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Exps(pub Vec<u32>);

impl Exps {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Exps {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exps {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `num_vars` commuting variables with `MatCoeff`
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poly {
    num_vars: usize,
    coeff_dim: usize,
    terms: BTreeMap<Exps, MatCoeff>,
}

impl Poly {
    pub fn zero(num_vars: usize, coeff_dim: usize) -> Self {
        Poly {
            num_vars,
            coeff_dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: MatCoeff) -> Self {
        let mut p = Poly::zero(num_vars, c.dim());
        p.add_term(Exps(vec![0; num_vars]), c);
        p
    }

    pub fn constant_rat(num_vars: usize, coeff_dim: usize, r: Rat) -> Self {
        Poly::constant(num_vars, MatCoeff::scalar(coeff_dim, r))
    }

    /// The monomial `x_i` (0-based variable index) with unit coefficient.
    pub fn var(num_vars: usize, coeff_dim: usize, i: usize) -> Self {
        assert!(i < num_vars);
        let mut e = vec![0; num_vars];
        e[i] = 1;
        let mut p = Poly::zero(num_vars, coeff_dim);
        p.add_term(Exps(e), MatCoeff::identity(coeff_dim));
        p
    }

    pub fn monomial(num_vars: usize, exps: Vec<u32>, c: MatCoeff) -> Self {
        assert_eq!(exps.len(), num_vars);
        let mut p = Poly::zero(num_vars, c.dim());
        p.add_term(Exps(exps), c);
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn coeff_dim(&self) -> usize {
        self.coeff_dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (graded-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &MatCoeff)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Exps, c: MatCoeff) {
        assert_eq!(exps.0.len(), self.num_vars, "exponent length mismatch");
        assert_eq!(c.dim(), self.coeff_dim, "coefficient dimension mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            None => {
                self.terms.insert(exps, c);
            }
            Some(old) => {
                let sum = &old + &c;
                if !sum.is_zero() {
                    self.terms.insert(exps, sum);
                }
            }
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Poly::zero(self.num_vars, self.coeff_dim);
        }
        Poly {
            num_vars: self.num_vars,
            coeff_dim: self.coeff_dim,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.scale(r)))
                .collect(),
        }
    }

    fn check_compat(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(AlgebraError::VarMismatch(self.num_vars, other.num_vars));
        }
        if self.coeff_dim != other.coeff_dim {
            return Err(AlgebraError::DimMismatch(self.coeff_dim, other.coeff_dim));
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{:?}", c)?;
            for (i, &k) in e.0.iter().enumerate() {
                if k == 1 {
                    write!(f, "*x{}", i + 1)?;
                } else if k > 1 {
                    write!(f, "*x{}^{}", i + 1, k)?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_compat(rhs).expect("incompatible polynomials");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            num_vars: self.num_vars,
            coeff_dim: self.coeff_dim,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

/// Exact product. Coefficients multiply by `mat_mul` in the written
/// argument order, so the product is safe for noncommutative coefficients.
pub fn poly_mul(p: &Poly, q: &Poly) -> Result<Poly> {
    p.check_compat(q)?;
    let mut out = Poly::zero(p.num_vars, p.coeff_dim);
    for (ep, cp) in &p.terms {
        for (eq, cq) in &q.terms {
            let exps = Exps(ep.0.iter().zip(&eq.0).map(|(a, b)| a + b).collect());
            out.add_term(exps, cp * cq);
        }
    }
    Ok(out)
}

/// Formal partial derivative in direction `i` (0-based).
pub fn partial(p: &Poly, i: usize) -> Result<Poly> {
    if i >= p.num_vars {
        return Err(AlgebraError::IndexOutOfRange {
            index: i,
            dim: p.num_vars,
        });
    }
    let mut out = Poly::zero(p.num_vars, p.coeff_dim);
    for (e, c) in &p.terms {
        let k = e.0[i];
        if k == 0 {
            continue;
        }
        let mut exps = e.0.clone();
        exps[i] = k - 1;
        out.add_term(Exps(exps), c.scale(&Rat::int(k as i64)));
    }
    Ok(out)
}
