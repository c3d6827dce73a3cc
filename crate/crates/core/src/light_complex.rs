//! The light-mode complex.
//!
//! An element lives in six slots, graded by ghost number:
//!
//! | ghost | slots                                           |
//! |-------|-------------------------------------------------|
//! | 0     | `u`  (function)                                 |
//! | 1     | `x1` (generalized section), `v1` (function)     |
//! | 2     | `x2` (generalized section), `v2` (function)     |
//! | 3     | `u3` (function)                                 |
//!
//! Three degree `+1` differentials act on it: the BRST operator `Q`, the
//! (rescaled) antighost translation `b0`, and the second-order deformation
//! generator `R_eta`. The deformed differential is `Q_eta = Q + R_eta`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::polynomials::Poly;
use crate::sections::{
    div_hat, divergence, exterior_d, grad_hat, laplacian, Eta, GenSection, OneForm, VecField,
};

/// One element of the light-mode complex, possibly inhomogeneous in ghost
/// number.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LightElement {
    pub u: Poly,
    pub x1: GenSection,
    pub v1: Poly,
    pub x2: GenSection,
    pub v2: Poly,
    pub u3: Poly,
}

impl LightElement {
    pub fn zero(dim: usize, coeff_dim: usize) -> Self {
        LightElement {
            u: Poly::zero(dim, coeff_dim),
            x1: GenSection::zero(dim, coeff_dim),
            v1: Poly::zero(dim, coeff_dim),
            x2: GenSection::zero(dim, coeff_dim),
            v2: Poly::zero(dim, coeff_dim),
            u3: Poly::zero(dim, coeff_dim),
        }
    }

    pub fn from_function(u: Poly) -> Self {
        let mut e = LightElement::zero(u.num_vars(), u.coeff_dim());
        e.u = u;
        e
    }

    pub fn from_section1(x1: GenSection) -> Self {
        let mut e = LightElement::zero(x1.dim(), x1.coeff_dim());
        e.x1 = x1;
        e
    }

    pub fn from_v1(v1: Poly) -> Self {
        let mut e = LightElement::zero(v1.num_vars(), v1.coeff_dim());
        e.v1 = v1;
        e
    }

    pub fn from_section2(x2: GenSection) -> Self {
        let mut e = LightElement::zero(x2.dim(), x2.coeff_dim());
        e.x2 = x2;
        e
    }

    pub fn from_v2(v2: Poly) -> Self {
        let mut e = LightElement::zero(v2.num_vars(), v2.coeff_dim());
        e.v2 = v2;
        e
    }

    pub fn from_u3(u3: Poly) -> Self {
        let mut e = LightElement::zero(u3.num_vars(), u3.coeff_dim());
        e.u3 = u3;
        e
    }

    pub fn dim(&self) -> usize {
        self.u.num_vars()
    }

    pub fn coeff_dim(&self) -> usize {
        self.u.coeff_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero()
            && self.x1.is_zero()
            && self.v1.is_zero()
            && self.x2.is_zero()
            && self.v2.is_zero()
            && self.u3.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        LightElement {
            u: &self.u + &other.u,
            x1: self.x1.add(&other.x1),
            v1: &self.v1 + &other.v1,
            x2: self.x2.add(&other.x2),
            v2: &self.v2 + &other.v2,
            u3: &self.u3 + &other.u3,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LightElement {
            u: -&self.u,
            x1: self.x1.neg(),
            v1: -&self.v1,
            x2: self.x2.neg(),
            v2: -&self.v2,
            u3: -&self.u3,
        }
    }

    pub fn scale(&self, r: &crate::scalars::Rat) -> Self {
        LightElement {
            u: self.u.scale(r),
            x1: self.x1.scale(r),
            v1: self.v1.scale(r),
            x2: self.x2.scale(r),
            v2: self.v2.scale(r),
            u3: self.u3.scale(r),
        }
    }

    /// Projection onto the slots of ghost number `k` (0..=3).
    pub fn ghost_component(&self, k: u32) -> Self {
        let mut out = LightElement::zero(self.dim(), self.coeff_dim());
        match k {
            0 => out.u = self.u.clone(),
            1 => {
                out.x1 = self.x1.clone();
                out.v1 = self.v1.clone();
            }
            2 => {
                out.x2 = self.x2.clone();
                out.v2 = self.v2.clone();
            }
            3 => out.u3 = self.u3.clone(),
            _ => {}
        }
        out
    }

    /// Ghost degrees at which the element has a nonzero slot.
    pub fn ghost_support(&self) -> Vec<u32> {
        let mut out = Vec::new();
        if !self.u.is_zero() {
            out.push(0);
        }
        if !self.x1.is_zero() || !self.v1.is_zero() {
            out.push(1);
        }
        if !self.x2.is_zero() || !self.v2.is_zero() {
            out.push(2);
        }
        if !self.u3.is_zero() {
            out.push(3);
        }
        out
    }

    /// Ghost number if the element is homogeneous (zero counts as any
    /// degree and reports `None`).
    pub fn ghost_number(&self) -> Option<u32> {
        let s = self.ghost_support();
        if s.len() == 1 {
            Some(s[0])
        } else {
            None
        }
    }
}

/// The BRST differential.
///
/// `u -> du` into the form slot of `x1`; `v1 -> (dv1, v1)` into the form
/// slot of `x2` and into `v2`; the vector slots map by half their
/// divergence, `x1 -> div(A)/2` into `v2` and `x2 -> -div(A)/2` into `u3`.
pub fn apply_q(a: &LightElement) -> LightElement {
    let d = a.dim();
    let cd = a.coeff_dim();
    let half = crate::scalars::Rat::new(1, 2);
    let mut out = LightElement::zero(d, cd);
    out.x1.form = exterior_d(&a.u);
    out.x2.form = exterior_d(&a.v1);
    out.v2 = &a.v1 + &divergence(&a.x1.vec).scale(&half);
    out.u3 = -&divergence(&a.x2.vec).scale(&half);
    out
}

/// The rescaled antighost translation: `v1 -> u`, `x2 -> -x1`, `u3 -> -v2`.
pub fn apply_b0(a: &LightElement) -> LightElement {
    let mut out = LightElement::zero(a.dim(), a.coeff_dim());
    out.u = a.v1.clone();
    out.x1 = a.x2.neg();
    out.v2 = -&a.u3;
    out
}

/// The second-order deformation generator attached to the constant tensor
/// `eta^{ij}`.
///
/// With `lap = eta^{ij} d_i d_j`, `grad^j = eta^{ij} d_i` and
/// `divh B = eta^{ij} d_i B_j`:
/// `u -> (grad u, -lap u)`, the ghost-1 section maps componentwise by `lap`
/// with its form slot also sending `divh/2` into `v2`, `v1 -> grad v1` into
/// the vector slot of `x2`, `v2 -> lap v2` into `u3`, and the ghost-2 form
/// slot sends `-divh/2` into `u3`.
pub fn apply_r_eta(a: &LightElement, eta: &Eta) -> Result<LightElement> {
    let d = a.dim();
    let cd = a.coeff_dim();
    let half = crate::scalars::Rat::new(1, 2);
    let mut out = LightElement::zero(d, cd);

    out.x1.vec = grad_hat(&a.u, eta)?;
    out.v1 = -&laplacian(&a.u, eta)?;

    let lap_vec = |v: &VecField| -> Result<VecField> {
        Ok(VecField {
            comps: v
                .comps
                .iter()
                .map(|c| laplacian(c, eta))
                .collect::<Result<_>>()?,
        })
    };
    let lap_form = |w: &OneForm| -> Result<OneForm> {
        Ok(OneForm {
            comps: w
                .comps
                .iter()
                .map(|c| laplacian(c, eta))
                .collect::<Result<_>>()?,
        })
    };

    out.x2.vec = lap_vec(&a.x1.vec)?.add(&grad_hat(&a.v1, eta)?);
    out.x2.form = lap_form(&a.x1.form)?;
    out.v2 = div_hat(&a.x1.form, eta)?.scale(&half);

    out.u3 = &laplacian(&a.v2, eta)? - &div_hat(&a.x2.form, eta)?.scale(&half);
    Ok(out)
}

/// The deformed differential `Q_eta = Q + R_eta`.
pub fn apply_q_eta(a: &LightElement, eta: &Eta) -> Result<LightElement> {
    Ok(apply_q(a).add(&apply_r_eta(a, eta)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use crate::polynomials::Exps;
    use crate::scalars::{MatCoeff, Rat};

    fn random_poly(rng: &mut ChaCha8Rng, dim: usize, cd: usize) -> Poly {
        let mut p = Poly::zero(dim, cd);
        for _ in 0..3 {
            let exps: Vec<u32> = (0..dim).map(|_| rng.gen_range(0..4)).collect();
            let mut m = MatCoeff::zero(cd);
            for r in 0..cd {
                for c in 0..cd {
                    m.set_entry(r, c, Rat::new(rng.gen_range(-3..4), rng.gen_range(1..3)));
                }
            }
            p.add_term(Exps(exps), m);
        }
        p
    }

    fn random_section(rng: &mut ChaCha8Rng, dim: usize, cd: usize) -> GenSection {
        GenSection {
            vec: VecField {
                comps: (0..dim).map(|_| random_poly(rng, dim, cd)).collect(),
            },
            form: OneForm {
                comps: (0..dim).map(|_| random_poly(rng, dim, cd)).collect(),
            },
        }
    }

    pub(crate) fn random_element(rng: &mut ChaCha8Rng, dim: usize, cd: usize) -> LightElement {
        LightElement {
            u: random_poly(rng, dim, cd),
            x1: random_section(rng, dim, cd),
            v1: random_poly(rng, dim, cd),
            x2: random_section(rng, dim, cd),
            v2: random_poly(rng, dim, cd),
            u3: random_poly(rng, dim, cd),
        }
    }

    fn etas() -> Vec<Eta> {
        vec![
            Eta::identity(2),
            Eta::from_i64(&[&[2, 1], &[1, 3]]),
            // Deliberately non-symmetric.
            Eta::from_i64(&[&[1, 2], &[-1, 1]]),
        ]
    }

    #[test]
    fn differentials_square_to_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for cd in [1usize, 2] {
            for _ in 0..10 {
                let a = random_element(&mut rng, 2, cd);
                assert!(apply_q(&apply_q(&a)).is_zero());
                assert!(apply_b0(&apply_b0(&a)).is_zero());
                for eta in etas() {
                    let r2 = apply_r_eta(&apply_r_eta(&a, &eta).unwrap(), &eta).unwrap();
                    assert!(r2.is_zero());
                    let qe = apply_q_eta(&apply_q_eta(&a, &eta).unwrap(), &eta).unwrap();
                    assert!(qe.is_zero());
                }
            }
        }
    }

    #[test]
    fn differentials_anticommute() {
        let mut rng = ChaCha8Rng::seed_from_u64(103);
        for _ in 0..10 {
            let a = random_element(&mut rng, 2, 2);
            let qb = apply_b0(&apply_q(&a)).add(&apply_q(&apply_b0(&a)));
            assert!(qb.is_zero());
            for eta in etas() {
                let qr = apply_r_eta(&apply_q(&a), &eta)
                    .unwrap()
                    .add(&apply_q(&apply_r_eta(&a, &eta).unwrap()));
                assert!(qr.is_zero());
            }
        }
    }

    #[test]
    fn q_on_a_linear_function() {
        // Q(x1) places dx1 in the ghost-1 form slot and nothing else.
        let u = Poly::var(2, 1, 0);
        let qa = apply_q(&LightElement::from_function(u));
        assert_eq!(
            qa.x1.form.comps[0],
            Poly::constant_rat(2, 1, Rat::one())
        );
        assert!(qa.x1.form.comps[1].is_zero());
        assert!(qa.x1.vec.is_zero());
        assert!(qa.v1.is_zero() && qa.v2.is_zero() && qa.u3.is_zero());
        assert!(qa.x2.is_zero());
    }

    #[test]
    fn ghost_projection_partitions_the_element() {
        let mut rng = ChaCha8Rng::seed_from_u64(107);
        let a = random_element(&mut rng, 2, 1);
        let mut sum = LightElement::zero(2, 1);
        for k in 0..4 {
            sum = sum.add(&a.ghost_component(k));
        }
        assert_eq!(sum, a);
        assert_eq!(a.ghost_support(), vec![0, 1, 2, 3]);
        assert_eq!(a.ghost_component(1).ghost_number(), Some(1));
    }
}
