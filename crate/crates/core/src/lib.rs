//! Exact symbolic core for the light-mode homotopy BV algebra of the
//! beta-gamma system, its constant-tensor deformation, and the generalized
//! Maurer-Cartan / Yang-Mills layer built on top of it.
//!
//! All arithmetic is arbitrary-precision rational; every identity that the
//! checker layer verifies holds exactly or fails with a concrete
//! counterexample.

pub mod error;
pub mod homotopy_checker;
pub mod light_complex;
pub mod lz_ops;
pub mod maurer_cartan;
pub mod polynomials;
pub mod sampling;
pub mod scalars;
pub mod sections;

pub use error::{AlgebraError, Result};
pub use homotopy_checker::{
    check_bar_differential, check_bv_suite, check_commutativity, check_deformed_suite,
    check_derived_bracket, check_differentials, check_stasheff, run_battery, CheckReport,
    Counterexample, Perturbation,
};
pub use light_complex::{apply_b0, apply_q, apply_q_eta, apply_r_eta, LightElement};
pub use lz_ops::{
    bracket0, m0, mu0, mu0_eta, n0, nu_eta, search_calibrations, LzOps, SignCalibration,
};
pub use maurer_cartan::{
    covariant_ym_residual, decompose, eliminate_v, embed, first_order_in_eps, gauge_delta,
    gauge_residual_variation, gauge_transform, gmc_symmetry_residual, heisenberg_ym_residual,
    mc_field_from_section, mc_residual, recombination_residual, subcomplex_differential,
    CovariantResidual, Decomposition, FieldFile, GaugeParam, HeisenbergFile, MCField,
};
pub use sampling::SamplerConfig;
pub use polynomials::{partial, poly_mul, Exps, Poly};
pub use scalars::{commutator, mat_mul, MatCoeff, Rat};
pub use sections::{
    div_hat, divergence, dorfman, exterior_d, fun_times_sec, grad_hat, laplacian, lie_fun,
    lower_index, pairing, raise_index, sec_times_fun, Eta, GenSection, OneForm, VecField,
};
