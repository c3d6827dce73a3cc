//! Exact rational scalars and the square-matrix coefficient algebra.
//!
//! Every identity in this crate is checked with zero tolerance, so the
//! coefficient field is arbitrary-precision rationals and the algebra the
//! complex is tensored with is realized as `n x n` rational matrices
//! (`n = 1` recovers commutative scalars).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{AlgebraError, Result};

/// Arbitrary-precision rational number, kept in lowest terms with a
/// positive denominator. Serializes as `"p/q"` (or `"p"` when `q = 1`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn int(n: i64) -> Self {
        Rat(BigRational::from(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rat(self.0.recip())
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rat {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| {
            BigInt::from_str(t.trim())
                .map_err(|_| AlgebraError::Parse(format!("bad integer `{t}`")))
        };
        match s.split_once('/') {
            Some((p, q)) => {
                let q = parse_int(q)?;
                if q.is_zero() {
                    return Err(AlgebraError::Parse(format!("zero denominator in `{s}`")));
                }
                Ok(Rat(BigRational::new(parse_int(p)?, q)))
            }
            None => Ok(Rat(BigRational::from(parse_int(s)?))),
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

/// Element of the coefficient algebra: an `n x n` exact-rational matrix,
/// stored row-major. `dim = 1` is the commutative scalar case.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatCoeff {
    dim: usize,
    entries: Vec<Rat>,
}

impl MatCoeff {
    pub fn zero(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        MatCoeff {
            dim,
            entries: vec![Rat::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Rat::one();
        }
        m
    }

    pub fn scalar(dim: usize, r: Rat) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = r.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(AlgebraError::Parse("matrix must be square and nonempty".into()));
        }
        Ok(MatCoeff {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::int(x)).collect())
                .collect(),
        )
        .expect("square literal")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.dim + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        self.entries.chunks(self.dim).map(|c| c.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        MatCoeff {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * r).collect(),
        }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            Err(AlgebraError::DimMismatch(self.dim, other.dim))
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for MatCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim == 1 {
            write!(f, "{}", self.entries[0])
        } else {
            write!(f, "{:?}", self.rows())
        }
    }
}

impl Add for &MatCoeff {
    type Output = MatCoeff;
    fn add(self, rhs: &MatCoeff) -> MatCoeff {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        MatCoeff {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &MatCoeff {
    type Output = MatCoeff;
    fn sub(self, rhs: &MatCoeff) -> MatCoeff {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        MatCoeff {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &MatCoeff {
    type Output = MatCoeff;
    fn neg(self) -> MatCoeff {
        MatCoeff {
            dim: self.dim,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl Mul for &MatCoeff {
    type Output = MatCoeff;
    fn mul(self, rhs: &MatCoeff) -> MatCoeff {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        let mut out = MatCoeff::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.entry(k, j);
                    if !b.is_zero() {
                        let cur = out.entry(i, j);
                        out.set_entry(i, j, cur + &(a * b));
                    }
                }
            }
        }
        out
    }
}

/// Exact matrix product with dimension checking.
pub fn mat_mul(a: &MatCoeff, b: &MatCoeff) -> Result<MatCoeff> {
    a.check_dim(b)?;
    Ok(a * b)
}

/// Commutator `ab - ba`; the Lie bracket when the factors sit in a matrix
/// representation of a Lie algebra.
pub fn commutator(a: &MatCoeff, b: &MatCoeff) -> Result<MatCoeff> {
    a.check_dim(b)?;
    Ok(&(a * b) - &(b * a))
}
