//! Seeded random generation of exact test data.
//!
//! All verification in this crate is property-based over exact rationals: a
//! multilinear identity over the rationals that holds on enough random
//! points of bounded degree holds identically, so randomized trials with
//! zero tolerance are close to a proof. Determinism matters more than
//! statistical quality, hence a fixed ChaCha stream per (seed, trial).

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::light_complex::LightElement;
use crate::polynomials::{Exps, Poly};
use crate::scalars::{MatCoeff, Rat};
use crate::sections::{Eta, GenSection, OneForm, VecField};

/// Bounds for the sampled inputs of a property check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub seed: u64,
    pub dimension: usize,
    pub max_degree: u32,
    pub matrix_dim: usize,
    pub terms_per_component: usize,
    pub trials: usize,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            seed: 42,
            dimension: 2,
            max_degree: 3,
            matrix_dim: 1,
            terms_per_component: 2,
            trials: 100,
        }
    }
}

impl SamplerConfig {
    /// Independent deterministic stream for one trial of one named check.
    pub fn rng(&self, check: &str, trial: usize) -> ChaCha8Rng {
        // Stable string hash (FNV-1a) so the stream survives recompilation.
        let mut h: u64 = 0xcbf29ce484222325;
        for b in check.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h ^ ((trial as u64).wrapping_mul(0x9e3779b97f4a7c15)))
    }
}

pub fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    Rat::new(rng.gen_range(-4..5), rng.gen_range(1..4))
}

pub fn random_coeff(rng: &mut ChaCha8Rng, matrix_dim: usize) -> MatCoeff {
    let mut m = MatCoeff::zero(matrix_dim);
    for r in 0..matrix_dim {
        for c in 0..matrix_dim {
            m.set_entry(r, c, random_rat(rng));
        }
    }
    m
}

pub fn random_poly(rng: &mut ChaCha8Rng, cfg: &SamplerConfig) -> Poly {
    let mut p = Poly::zero(cfg.dimension, cfg.matrix_dim);
    for _ in 0..cfg.terms_per_component {
        // Exponents bounded so the total degree stays within max_degree.
        let mut budget = cfg.max_degree;
        let exps: Vec<u32> = (0..cfg.dimension)
            .map(|_| {
                let e = rng.gen_range(0..=budget.min(2));
                budget -= e;
                e
            })
            .collect();
        p.add_term(Exps(exps), random_coeff(rng, cfg.matrix_dim));
    }
    p
}

pub fn random_section(rng: &mut ChaCha8Rng, cfg: &SamplerConfig) -> GenSection {
    GenSection {
        vec: VecField {
            comps: (0..cfg.dimension).map(|_| random_poly(rng, cfg)).collect(),
        },
        form: OneForm {
            comps: (0..cfg.dimension).map(|_| random_poly(rng, cfg)).collect(),
        },
    }
}

/// Ghost-homogeneous element with every slot of the requested degree
/// populated, so that no operation table cell is starved of samples.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, cfg: &SamplerConfig, ghost: u32) -> LightElement {
    let mut e = LightElement::zero(cfg.dimension, cfg.matrix_dim);
    match ghost {
        0 => e.u = random_poly(rng, cfg),
        1 => {
            e.x1 = random_section(rng, cfg);
            e.v1 = random_poly(rng, cfg);
        }
        2 => {
            e.x2 = random_section(rng, cfg);
            e.v2 = random_poly(rng, cfg);
        }
        3 => e.u3 = random_poly(rng, cfg),
        _ => {}
    }
    e
}

pub fn random_element(rng: &mut ChaCha8Rng, cfg: &SamplerConfig) -> LightElement {
    let mut e = LightElement::zero(cfg.dimension, cfg.matrix_dim);
    for g in 0..4 {
        e = e.add(&random_homogeneous(rng, cfg, g));
    }
    e
}

pub fn random_eta(rng: &mut ChaCha8Rng, dim: usize) -> Eta {
    let entries = (0..dim * dim).map(|_| random_rat(rng)).collect();
    Eta::new(dim, entries).expect("square grid")
}

pub fn random_symmetric_eta(rng: &mut ChaCha8Rng, dim: usize) -> Eta {
    let mut entries = vec![Rat::zero(); dim * dim];
    for i in 0..dim {
        for j in 0..=i {
            let r = random_rat(rng);
            entries[i * dim + j] = r.clone();
            entries[j * dim + i] = r;
        }
    }
    Eta::new(dim, entries).expect("square grid")
}

/// Symmetric tensor resampled until it is invertible (needed by the
/// Yang-Mills layer).
pub fn random_invertible_symmetric_eta(rng: &mut ChaCha8Rng, dim: usize) -> Eta {
    loop {
        let e = random_symmetric_eta(rng, dim);
        if e.inverse().is_ok() {
            return e;
        }
    }
}

pub fn random_antisymmetric_eta(rng: &mut ChaCha8Rng, dim: usize) -> Eta {
    let mut entries = vec![Rat::zero(); dim * dim];
    for i in 0..dim {
        for j in 0..i {
            let r = random_rat(rng);
            entries[i * dim + j] = r.clone();
            entries[j * dim + i] = -&r;
        }
    }
    Eta::new(dim, entries).expect("square grid")
}
