//! Geometric data on the flat target: vector fields, one-forms, generalized
//! sections of the twisted bundle `TM (+) T*M`, and the constant symmetric
//! tensor that drives the deformation.
//!
//! Every binary operation keeps the scalar factors coming from its *first*
//! argument on the left of the coefficient product, so all formulas stay
//! valid verbatim when the coefficients are noncommutative matrices.

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::polynomials::{partial, poly_mul, Poly};
use crate::scalars::Rat;

/// Vector field with polynomial components `A^1 ... A^D`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VecField {
    pub comps: Vec<Poly>,
}

/// One-form with polynomial components `B_1 ... B_D`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OneForm {
    pub comps: Vec<Poly>,
}

/// Generalized section `A + B` of `TM (+) T*M`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GenSection {
    pub vec: VecField,
    pub form: OneForm,
}

macro_rules! componentwise {
    ($t:ident) => {
        impl $t {
            pub fn zero(dim: usize, coeff_dim: usize) -> Self {
                $t {
                    comps: vec![Poly::zero(dim, coeff_dim); dim],
                }
            }

            pub fn dim(&self) -> usize {
                self.comps.len()
            }

            pub fn coeff_dim(&self) -> usize {
                self.comps[0].coeff_dim()
            }

            pub fn is_zero(&self) -> bool {
                self.comps.iter().all(|p| p.is_zero())
            }

            pub fn add(&self, other: &Self) -> Self {
                $t {
                    comps: self
                        .comps
                        .iter()
                        .zip(&other.comps)
                        .map(|(a, b)| a + b)
                        .collect(),
                }
            }

            pub fn sub(&self, other: &Self) -> Self {
                $t {
                    comps: self
                        .comps
                        .iter()
                        .zip(&other.comps)
                        .map(|(a, b)| a - b)
                        .collect(),
                }
            }

            pub fn neg(&self) -> Self {
                $t {
                    comps: self.comps.iter().map(|a| -a).collect(),
                }
            }

            pub fn scale(&self, r: &Rat) -> Self {
                $t {
                    comps: self.comps.iter().map(|a| a.scale(r)).collect(),
                }
            }
        }
    };
}

componentwise!(VecField);
componentwise!(OneForm);

impl GenSection {
    pub fn zero(dim: usize, coeff_dim: usize) -> Self {
        GenSection {
            vec: VecField::zero(dim, coeff_dim),
            form: OneForm::zero(dim, coeff_dim),
        }
    }

    pub fn new(vec: VecField, form: OneForm) -> Self {
        assert_eq!(vec.dim(), form.dim());
        GenSection { vec, form }
    }

    pub fn dim(&self) -> usize {
        self.vec.dim()
    }

    pub fn coeff_dim(&self) -> usize {
        self.vec.coeff_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.vec.is_zero() && self.form.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        GenSection {
            vec: self.vec.add(&other.vec),
            form: self.form.add(&other.form),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        GenSection {
            vec: self.vec.sub(&other.vec),
            form: self.form.sub(&other.form),
        }
    }

    pub fn neg(&self) -> Self {
        GenSection {
            vec: self.vec.neg(),
            form: self.form.neg(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        GenSection {
            vec: self.vec.scale(r),
            form: self.form.scale(r),
        }
    }
}

/// Constant symmetric rational tensor `eta^{ij}` (upper indices). Carries an
/// exact inverse `eta_{ij}` on demand for the covariant field redefinitions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Eta {
    dim: usize,
    entries: Vec<Rat>,
}

impl Eta {
    pub fn new(dim: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(AlgebraError::DimMismatch(entries.len(), dim * dim));
        }
        Ok(Eta { dim, entries })
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Rat::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Rat::one();
        }
        Eta { dim, entries }
    }

    pub fn zero(dim: usize) -> Self {
        Eta {
            dim,
            entries: vec![Rat::zero(); dim * dim],
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for r in rows {
            assert_eq!(r.len(), dim);
            entries.extend(r.iter().map(|&v| Rat::int(v)));
        }
        Eta { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.dim + j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..=i).all(|j| (self.entry(i, j) + self.entry(j, i)).is_zero()))
    }

    pub fn transpose(&self) -> Eta {
        let mut entries = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                entries.push(self.entry(j, i).clone());
            }
        }
        Eta {
            dim: self.dim,
            entries,
        }
    }

    /// Exact inverse tensor `eta_{ij}` by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Eta> {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut inv = Eta::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or(AlgebraError::NonInvertibleEta)?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a[col * n + col].clone().recip();
            for j in 0..n {
                a[col * n + j] = &a[col * n + j] * &p;
                inv[col * n + j] = &inv[col * n + j] * &p;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].clone();
                for j in 0..n {
                    a[r * n + j] = &a[r * n + j] - &(&f * &a[col * n + j]);
                    inv[r * n + j] = &inv[r * n + j] - &(&f * &inv[col * n + j]);
                }
            }
        }
        Eta::new(n, inv)
    }
}

/// Exterior derivative of a function: `(df)_i = d_i f`.
pub fn exterior_d(f: &Poly) -> OneForm {
    OneForm {
        comps: (0..f.num_vars())
            .map(|i| partial(f, i).expect("index in range"))
            .collect(),
    }
}

/// Divergence of a vector field: `sum_i d_i A^i`.
pub fn divergence(x: &VecField) -> Poly {
    let mut out = Poly::zero(x.dim(), x.coeff_dim());
    for (i, a) in x.comps.iter().enumerate() {
        out = &out + &partial(a, i).expect("index in range");
    }
    out
}

/// Directional derivative of a function along a vector field,
/// `sum_i A^i d_i f`, with the vector components multiplying on the left.
pub fn lie_fun(x: &VecField, f: &Poly) -> Result<Poly> {
    let mut out = Poly::zero(f.num_vars(), f.coeff_dim());
    for (i, a) in x.comps.iter().enumerate() {
        out = &out + &poly_mul(a, &partial(f, i)?)?;
    }
    Ok(out)
}

/// Canonical pairing `<a, b> = sum_mu (A^mu B'_mu + B_mu A'^mu)`, with the
/// first argument's components on the left.
pub fn pairing(a: &GenSection, b: &GenSection) -> Result<Poly> {
    let mut out = Poly::zero(a.dim(), a.coeff_dim());
    for mu in 0..a.dim() {
        out = &out + &poly_mul(&a.vec.comps[mu], &b.form.comps[mu])?;
        out = &out + &poly_mul(&a.form.comps[mu], &b.vec.comps[mu])?;
    }
    Ok(out)
}

/// Dorfman bracket `[a, b] = [A, A'] + L_A B' - i_{A'} dB`, written so that
/// every scalar factor coming from `a` sits left of the factor from `b`:
///
/// vector part:  `sum_i (A^i d_i A'^j - (d_i A^j) A'^i)`
/// form part:    `sum_i (A^i d_i B'_j + (d_j A^i) B'_i - (d_i B_j - d_j B_i) A'^i)`
pub fn dorfman(a: &GenSection, b: &GenSection) -> Result<GenSection> {
    let d = a.dim();
    let cd = a.coeff_dim();
    let mut out = GenSection::zero(d, cd);
    for j in 0..d {
        let mut v = Poly::zero(d, cd);
        let mut w = Poly::zero(d, cd);
        for i in 0..d {
            v = &v + &poly_mul(&a.vec.comps[i], &partial(&b.vec.comps[j], i)?)?;
            v = &v - &poly_mul(&partial(&a.vec.comps[j], i)?, &b.vec.comps[i])?;

            w = &w + &poly_mul(&a.vec.comps[i], &partial(&b.form.comps[j], i)?)?;
            w = &w + &poly_mul(&partial(&a.vec.comps[i], j)?, &b.form.comps[i])?;
            let curl = &partial(&a.form.comps[j], i)? - &partial(&a.form.comps[i], j)?;
            w = &w - &poly_mul(&curl, &b.vec.comps[i])?;
        }
        out.vec.comps[j] = v;
        out.form.comps[j] = w;
    }
    Ok(out)
}

/// Section times function, section components on the left.
pub fn sec_times_fun(a: &GenSection, f: &Poly) -> Result<GenSection> {
    Ok(GenSection {
        vec: VecField {
            comps: a
                .vec
                .comps
                .iter()
                .map(|c| poly_mul(c, f))
                .collect::<Result<_>>()?,
        },
        form: OneForm {
            comps: a
                .form
                .comps
                .iter()
                .map(|c| poly_mul(c, f))
                .collect::<Result<_>>()?,
        },
    })
}

/// Function times section, function on the left.
pub fn fun_times_sec(f: &Poly, a: &GenSection) -> Result<GenSection> {
    Ok(GenSection {
        vec: VecField {
            comps: a
                .vec
                .comps
                .iter()
                .map(|c| poly_mul(f, c))
                .collect::<Result<_>>()?,
        },
        form: OneForm {
            comps: a
                .form
                .comps
                .iter()
                .map(|c| poly_mul(f, c))
                .collect::<Result<_>>()?,
        },
    })
}

/// Eta-gradient of a function: `(grad_eta f)^j = sum_i eta^{ij} d_i f`.
pub fn grad_hat(f: &Poly, eta: &Eta) -> Result<VecField> {
    let d = eta.dim();
    let mut comps = Vec::with_capacity(d);
    for j in 0..d {
        let mut c = Poly::zero(f.num_vars(), f.coeff_dim());
        for i in 0..d {
            c = &c + &partial(f, i)?.scale(eta.entry(i, j));
        }
        comps.push(c);
    }
    Ok(VecField { comps })
}

/// Eta-divergence of a one-form: `sum_{ij} eta^{ij} d_i B_j`.
pub fn div_hat(b: &OneForm, eta: &Eta) -> Result<Poly> {
    let mut out = Poly::zero(b.dim(), b.coeff_dim());
    for i in 0..eta.dim() {
        for j in 0..eta.dim() {
            out = &out + &partial(&b.comps[j], i)?.scale(eta.entry(i, j));
        }
    }
    Ok(out)
}

/// Eta-Laplacian `sum_{ij} eta^{ij} d_i d_j f`.
pub fn laplacian(f: &Poly, eta: &Eta) -> Result<Poly> {
    div_hat(&exterior_d(f), eta)
}

/// Index raising: `(B*)^j = sum_i eta^{ij} B_i`.
pub fn raise_index(b: &OneForm, eta: &Eta) -> Result<VecField> {
    let d = eta.dim();
    let mut comps = Vec::with_capacity(d);
    for j in 0..d {
        let mut c = Poly::zero(b.comps[0].num_vars(), b.coeff_dim());
        for i in 0..d {
            c = &c + &b.comps[i].scale(eta.entry(i, j));
        }
        comps.push(c);
    }
    Ok(VecField { comps })
}

/// Index lowering with the inverse tensor: `(A_flat)_i = sum_j eta_{ij} A^j`.
pub fn lower_index(a: &VecField, eta_inv: &Eta) -> Result<OneForm> {
    let d = eta_inv.dim();
    let mut comps = Vec::with_capacity(d);
    for i in 0..d {
        let mut c = Poly::zero(a.comps[0].num_vars(), a.coeff_dim());
        for j in 0..d {
            c = &c + &a.comps[j].scale(eta_inv.entry(i, j));
        }
        comps.push(c);
    }
    Ok(OneForm { comps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use crate::polynomials::Exps;

    fn random_poly(rng: &mut ChaCha8Rng, dim: usize) -> Poly {
        let mut p = Poly::zero(dim, 1);
        for _ in 0..3 {
            let exps: Vec<u32> = (0..dim).map(|_| rng.gen_range(0..3)).collect();
            let c = Rat::new(rng.gen_range(-4..5), rng.gen_range(1..4));
            p.add_term(Exps(exps), crate::scalars::MatCoeff::scalar(1, c));
        }
        p
    }

    fn random_section(rng: &mut ChaCha8Rng, dim: usize) -> GenSection {
        GenSection {
            vec: VecField {
                comps: (0..dim).map(|_| random_poly(rng, dim)).collect(),
            },
            form: OneForm {
                comps: (0..dim).map(|_| random_poly(rng, dim)).collect(),
            },
        }
    }

    #[test]
    fn laplacian_is_div_hat_of_gradient() {
        // On symmetric eta: sum eta^{ij} d_i d_j f == div(grad_eta f)
        // where the plain divergence contracts the raised index.
        let eta = Eta::from_i64(&[&[2, 1], &[1, 3]]);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let f = random_poly(&mut rng, 2);
            let lhs = laplacian(&f, &eta).unwrap();
            let rhs = divergence(&grad_hat(&f, &eta).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn dorfman_leibniz_in_second_slot() {
        // [a, f b] = f [a, b] + (A . df) b with commutative coefficients.
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..15 {
            let a = random_section(&mut rng, 2);
            let b = random_section(&mut rng, 2);
            let f = random_poly(&mut rng, 2);
            let lhs = dorfman(&a, &sec_times_fun(&b, &f).unwrap()).unwrap();
            let df = lie_fun(&a.vec, &f).unwrap();
            let rhs = sec_times_fun(&dorfman(&a, &b).unwrap(), &f)
                .unwrap()
                .add(&sec_times_fun(&b, &df).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn dorfman_derives_the_pairing() {
        // A_a <b, c> = <[a,b], c> + <b, [a,c]> (commutative coefficients).
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..10 {
            let a = random_section(&mut rng, 2);
            let b = random_section(&mut rng, 2);
            let c = random_section(&mut rng, 2);
            let lhs = lie_fun(&a.vec, &pairing(&b, &c).unwrap()).unwrap();
            let rhs = &pairing(&dorfman(&a, &b).unwrap(), &c).unwrap()
                + &pairing(&b, &dorfman(&a, &c).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn dorfman_of_exact_form_in_first_slot_vanishes() {
        // [(0, df), b] = 0: exact one-forms are central on the left.
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..10 {
            let f = random_poly(&mut rng, 2);
            let a = GenSection::new(VecField::zero(2, 1), exterior_d(&f));
            let b = random_section(&mut rng, 2);
            assert!(dorfman(&a, &b).unwrap().is_zero());
        }
    }

    #[test]
    fn eta_inverse_roundtrip() {
        let eta = Eta::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 1]]);
        let inv = eta.inverse().unwrap();
        // Product against the inverse is the identity.
        for i in 0..3 {
            for k in 0..3 {
                let mut s = Rat::zero();
                for j in 0..3 {
                    s = &s + &(eta.entry(i, j) * inv.entry(j, k));
                }
                let expect = if i == k { Rat::one() } else { Rat::zero() };
                assert_eq!(s, expect);
            }
        }
        let singular = Eta::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(singular.inverse(), Err(AlgebraError::NonInvertibleEta));
    }

    #[test]
    fn symmetry_predicates() {
        assert!(Eta::from_i64(&[&[2, 1], &[1, 3]]).is_symmetric());
        assert!(!Eta::from_i64(&[&[2, 1], &[0, 3]]).is_symmetric());
        assert!(Eta::from_i64(&[&[0, 1], &[-1, 0]]).is_antisymmetric());
        assert!(!Eta::from_i64(&[&[1, 1], &[-1, 0]]).is_antisymmetric());
    }

    #[test]
    fn raise_and_lower_are_inverse() {
        let eta = Eta::from_i64(&[&[2, 1], &[1, 3]]);
        let inv = eta.inverse().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let b = OneForm {
            comps: (0..2).map(|_| random_poly(&mut rng, 2)).collect(),
        };
        let raised = raise_index(&b, &eta).unwrap();
        let back = lower_index(&raised, &inv).unwrap();
        assert_eq!(back, b);
    }
}
