//! Randomized, seeded, exact verification of the graded identities: the
//! Stasheff relations up to arity 4, the square of the bar differential on
//! tensor words, and the strict (commutative-coefficient) suite for the
//! bracket.
//!
//! Every check evaluates a residual that must be exactly zero; any nonzero
//! residual is reported together with the inputs that produced it, and
//! re-evaluating those inputs standalone reproduces the same residual.

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::light_complex::LightElement;
use crate::lz_ops::{
    arity4_residual, associativity_residual, bracket0, bracket_leibniz_residual,
    bracket_with, commutativity_residual, jacobi_residual, leibniz_residual, LzOps,
    SignCalibration,
};
use crate::sampling::{
    random_homogeneous, random_poly, random_section, SamplerConfig,
};
use crate::scalars::Rat;
use crate::sections::{dorfman, lie_fun, pairing, sec_times_fun, Eta};

/// Deliberate corruptions used as negative controls. A perturbed check is
/// expected to FAIL; the harness asserts that it does.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Perturbation {
    None,
    /// Replace the associativity homotopy by zero.
    ZeroN0,
    /// Flip one family of Koszul crossing signs in the bar differential.
    FlipKoszul,
    /// Flip the Dorfman orientation of the frozen calibration.
    FlipDorfman,
}

/// A failing input, kept in full so the failure replays exactly.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Counterexample {
    pub trial: usize,
    pub description: String,
    pub inputs: Vec<LightElement>,
    pub residual: LightElement,
}

/// Outcome of one named check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub pass: bool,
    pub trials: usize,
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub fn passing(name: &str, trials: usize) -> Self {
        CheckReport {
            name: name.to_string(),
            pass: true,
            trials,
            counterexample: None,
        }
    }

    pub fn failing(name: &str, trials: usize, cx: Counterexample) -> Self {
        CheckReport {
            name: name.to_string(),
            pass: false,
            trials,
            counterexample: Some(cx),
        }
    }

    /// The one-line human-readable form.
    pub fn line(&self) -> String {
        format!(
            "CHECK {} {} trials={}",
            self.name,
            if self.pass { "PASS" } else { "FAIL" },
            self.trials
        )
    }
}

/// All ghost-degree tuples of the given arity, lowest total degree first,
/// so that the signatures with nonzero table cells are sampled before the
/// ones that are zero for degree reasons.
fn ghost_signatures(arity: usize) -> Vec<Vec<u32>> {
    let mut sigs: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..arity {
        sigs = sigs
            .iter()
            .flat_map(|s| {
                (0u32..4).map(move |g| {
                    let mut t = s.clone();
                    t.push(g);
                    t
                })
            })
            .collect();
    }
    sigs.sort_by_key(|s| (s.iter().sum::<u32>(), s.clone()));
    sigs
}

fn ops_for(cal: SignCalibration, eta: Option<&Eta>, perturb: Perturbation) -> LzOps {
    let mut cal = cal;
    if perturb == Perturbation::FlipDorfman {
        cal.dorfman = -cal.dorfman;
    }
    let mut ops = match eta {
        None => LzOps::undeformed(cal),
        Some(e) => LzOps::deformed(cal, e.clone()),
    };
    if perturb == Perturbation::ZeroN0 {
        ops.zero_n0 = true;
    }
    ops
}

/// The arity-`n` Stasheff relation (2 = Leibniz rule, 3 = homotopy
/// associativity, 4 = the relation with the vanishing arity-4 operation),
/// evaluated on seeded ghost-homogeneous tuples.
pub fn check_stasheff(
    arity: usize,
    cfg: &SamplerConfig,
    eta: Option<&Eta>,
    perturb: Perturbation,
) -> Result<CheckReport> {
    if !(2..=4).contains(&arity) {
        return Err(AlgebraError::Parse(format!(
            "stasheff arity must be 2..4, got {arity}"
        )));
    }
    let ops = ops_for(SignCalibration::default(), eta, perturb);
    let name = format!(
        "stasheff_arity{}{}",
        arity,
        if eta.is_some() { "_deformed" } else { "" }
    );
    let sigs = ghost_signatures(arity);
    for trial in 0..cfg.trials {
        let mut rng = cfg.rng(&name, trial);
        let sig = &sigs[trial % sigs.len()];
        let inputs: Vec<LightElement> = sig
            .iter()
            .map(|&g| random_homogeneous(&mut rng, cfg, g))
            .collect();
        let residual = match arity {
            2 => leibniz_residual(&ops, &inputs[0], &inputs[1])?,
            3 => associativity_residual(&ops, &inputs[0], &inputs[1], &inputs[2])?,
            _ => arity4_residual(&ops, &inputs[0], &inputs[1], &inputs[2], &inputs[3])?,
        };
        if !residual.is_zero() {
            return Ok(CheckReport::failing(
                &name,
                trial + 1,
                Counterexample {
                    trial,
                    description: format!("ghost signature {:?}", sig),
                    inputs,
                    residual,
                },
            ));
        }
    }
    Ok(CheckReport::passing(&name, cfg.trials))
}

/// Homotopy commutativity (requires commutative coefficients).
pub fn check_commutativity(
    cfg: &SamplerConfig,
    eta: Option<&Eta>,
    perturb: Perturbation,
) -> Result<CheckReport> {
    if cfg.matrix_dim != 1 {
        return Err(AlgebraError::NoncommutativeInput(cfg.matrix_dim));
    }
    let ops = ops_for(SignCalibration::default(), eta, perturb);
    let name = format!(
        "commutativity{}",
        if eta.is_some() { "_deformed" } else { "" }
    );
    let sigs = ghost_signatures(2);
    for trial in 0..cfg.trials {
        let mut rng = cfg.rng(&name, trial);
        let sig = &sigs[trial % sigs.len()];
        let a = random_homogeneous(&mut rng, cfg, sig[0]);
        let b = random_homogeneous(&mut rng, cfg, sig[1]);
        let residual = commutativity_residual(&ops, &a, &b)?;
        if !residual.is_zero() {
            return Ok(CheckReport::failing(
                &name,
                trial + 1,
                Counterexample {
                    trial,
                    description: format!("ghost signature {:?}", sig),
                    inputs: vec![a, b],
                    residual,
                },
            ));
        }
    }
    Ok(CheckReport::passing(&name, cfg.trials))
}

// ---------------------------------------------------------------------------
// Bar differential.
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum SlotKey {
    /// Untouched input slot.
    Orig(usize),
    /// Slot produced by collapsing the half-open input range.
    Block(usize, usize),
}

impl SlotKey {
    fn range(&self) -> (usize, usize) {
        match *self {
            SlotKey::Orig(i) => (i, i + 1),
            SlotKey::Block(s, e) => (s, e),
        }
    }
}

#[derive(Clone)]
struct Slot {
    key: SlotKey,
    ghost: u32,
    value: LightElement,
}

#[derive(Clone)]
struct BarTerm {
    sign: i8,
    slots: Vec<Slot>,
}

/// One application of the bar differential to a tensor word. Arity-`n`
/// operations are inserted at every position; the crossing sign is the
/// Koszul sign of moving an odd symbol over the suspended slots it passes,
/// and each operation carries its suspension sign. Terms whose computed
/// slot vanishes are dropped (the whole decomposable tensor is zero).
fn bar_boundary(ops: &LzOps, slots: &[Slot], flip_koszul: bool) -> Result<Vec<BarTerm>> {
    let mut out = Vec::new();
    for n in 1..=3usize {
        if slots.len() < n {
            continue;
        }
        for l in 0..=slots.len() - n {
            // Crossing sign over the first l suspended slots.
            let mut exp: u32 = slots[..l]
                .iter()
                .map(|s| s.ghost + if flip_koszul { 0 } else { 1 })
                .sum();
            // Suspension sign of the operation itself:
            // sum_k (k-n) * ghost_k over its arguments.
            for (k, s) in slots[l..l + n].iter().enumerate() {
                exp += ((n - 1 - k) as u32) * s.ghost;
            }
            let args: Vec<&LightElement> = slots[l..l + n].iter().map(|s| &s.value).collect();
            let value = match n {
                1 => ops.q(args[0])?,
                2 => ops.mu(args[0], args[1])?,
                _ => ops.n(args[0], args[1], args[2])?,
            };
            if value.is_zero() {
                continue;
            }
            let ghost: u32 = slots[l..l + n].iter().map(|s| s.ghost).sum::<u32>() + 2 - n as u32;
            let start = slots[l].key.range().0;
            let end = slots[l + n - 1].key.range().1;
            let mut new_slots: Vec<Slot> = slots[..l].to_vec();
            new_slots.push(Slot {
                key: SlotKey::Block(start, end),
                ghost,
                value,
            });
            new_slots.extend_from_slice(&slots[l + n..]);
            out.push(BarTerm {
                sign: if exp % 2 == 0 { 1 } else { -1 },
                slots: new_slots,
            });
        }
    }
    Ok(out)
}

/// Exact test that a formal sum of decomposable tensor words vanishes.
///
/// The words of one squared boundary group by their slot pattern (which
/// input ranges were collapsed). Within a group all slots agree except the
/// collapsed one that still varies, so the sum is
/// `common ⊗ (sum of signed varying slots) ⊗ common`, which vanishes iff the
/// folded middle slot does. Returns the first nonzero folded slot.
fn fold_terms(terms: Vec<BarTerm>, dim: usize, cd: usize) -> Option<(String, LightElement)> {
    use std::collections::BTreeMap;
    let mut groups: BTreeMap<Vec<SlotKey>, Vec<BarTerm>> = BTreeMap::new();
    for t in terms {
        let key: Vec<SlotKey> = t.slots.iter().map(|s| s.key.clone()).collect();
        groups.entry(key).or_default().push(t);
    }
    for (key, group) in groups {
        // The varying slot: the block that was produced by the second
        // application (for nested collapses) — operationally, any block
        // whose value differs somewhere in the group; fall back to the
        // first block.
        let nblocks = key
            .iter()
            .enumerate()
            .filter(|(_, k)| matches!(k, SlotKey::Block(_, _)))
            .map(|(i, _)| i)
            .collect::<Vec<_>>();
        let varying = *nblocks
            .iter()
            .find(|&&i| {
                group
                    .windows(2)
                    .any(|w| w[0].slots[i].value != w[1].slots[i].value)
            })
            .unwrap_or(&nblocks[0]);
        let mut folded = LightElement::zero(dim, cd);
        for t in &group {
            let v = &t.slots[varying].value;
            folded = if t.sign > 0 {
                folded.add(v)
            } else {
                folded.sub(v)
            };
        }
        if !folded.is_zero() {
            return Some((format!("{:?}", key), folded));
        }
    }
    None
}

/// `boundary(boundary(word)) = 0` on tensor words up to the given length.
pub fn check_bar_differential(
    max_word_length: usize,
    cfg: &SamplerConfig,
    eta: Option<&Eta>,
    perturb: Perturbation,
) -> Result<CheckReport> {
    let ops = ops_for(SignCalibration::default(), eta, perturb);
    let flip = perturb == Perturbation::FlipKoszul;
    let name = format!(
        "bar_differential{}",
        if eta.is_some() { "_deformed" } else { "" }
    );
    for trial in 0..cfg.trials {
        let mut rng = cfg.rng(&name, trial);
        let len = 2 + trial % (max_word_length.max(2) - 1);
        let sigs = ghost_signatures(len);
        let sig = &sigs[trial % sigs.len()];
        let word: Vec<Slot> = sig
            .iter()
            .enumerate()
            .map(|(i, &g)| Slot {
                key: SlotKey::Orig(i),
                ghost: g,
                value: random_homogeneous(&mut rng, cfg, g),
            })
            .collect();
        let mut squared = Vec::new();
        for t in bar_boundary(&ops, &word, flip)? {
            for mut t2 in bar_boundary(&ops, &t.slots, flip)? {
                t2.sign *= t.sign;
                squared.push(t2);
            }
        }
        if let Some((desc, folded)) = fold_terms(squared, cfg.dimension, cfg.matrix_dim) {
            return Ok(CheckReport::failing(
                &name,
                trial + 1,
                Counterexample {
                    trial,
                    description: format!(
                        "word of length {} with ghosts {:?}, nonzero group {}",
                        len, sig, desc
                    ),
                    inputs: word.into_iter().map(|s| s.value).collect(),
                    residual: folded,
                },
            ));
        }
    }
    Ok(CheckReport::passing(&name, cfg.trials))
}

// ---------------------------------------------------------------------------
// Strict suite at commutative coefficients.
// ---------------------------------------------------------------------------

/// The commutative-coefficient battery: homotopy commutativity, strict
/// Jacobi, strict bracket Leibniz, the defining relation of the bracket as
/// a regression, and the Courant-algebroid properties of sections.
pub fn check_bv_suite(cfg: &SamplerConfig, perturb: Perturbation) -> Result<CheckReport> {
    if cfg.matrix_dim != 1 {
        return Err(AlgebraError::NoncommutativeInput(cfg.matrix_dim));
    }
    let mut cal = SignCalibration::default();
    if perturb == Perturbation::FlipDorfman {
        cal.dorfman = -cal.dorfman;
    }
    let ops = LzOps::undeformed(cal);
    let name = "bv_suite";
    let sigs = ghost_signatures(3);
    for trial in 0..cfg.trials {
        let mut rng = cfg.rng(name, trial);
        let sig = &sigs[trial % sigs.len()];
        let a = random_homogeneous(&mut rng, cfg, sig[0]);
        let b = random_homogeneous(&mut rng, cfg, sig[1]);
        let c = random_homogeneous(&mut rng, cfg, sig[2]);

        let mut failures: Vec<(&str, LightElement)> = Vec::new();

        let r = commutativity_residual(&ops, &a, &b)?;
        if !r.is_zero() {
            failures.push(("commutativity", r));
        }
        let r = jacobi_residual(&ops, &a, &b, &c)?;
        if !r.is_zero() {
            failures.push(("jacobi", r));
        }
        let r = bracket_leibniz_residual(&ops, &a, &b, &c)?;
        if !r.is_zero() {
            failures.push(("bracket_leibniz", r));
        }
        // Regression: the bracket is literally its defining combination.
        let direct = bracket0(&cal, &a, &b)?;
        let reconstructed = bracket_with(&a, &b, &mut |x, y| crate::lz_ops::mu0(&cal, x, y))?;
        let r = direct.sub(&reconstructed);
        if !r.is_zero() {
            failures.push(("bracket_definition", r));
        }
        // Courant-algebroid content on the section parts.
        let x = random_section(&mut rng, cfg);
        let y = random_section(&mut rng, cfg);
        let z = random_section(&mut rng, cfg);
        let f = random_poly(&mut rng, cfg);
        let cal_dorfman = |p: &crate::sections::GenSection,
                               q: &crate::sections::GenSection|
         -> Result<crate::sections::GenSection> {
            Ok(dorfman(p, q)?.scale(&Rat::int(cal.dorfman as i64)))
        };
        // Leibniz in the second slot.
        let lhs = cal_dorfman(&x, &sec_times_fun(&y, &f)?)?;
        let rhs = sec_times_fun(&cal_dorfman(&x, &y)?, &f)?
            .add(&sec_times_fun(&y, &lie_fun(&x.vec, &f)?)?);
        if lhs != rhs {
            let mut res = LightElement::zero(cfg.dimension, cfg.matrix_dim);
            res.x1 = lhs.sub(&rhs);
            failures.push(("dorfman_leibniz", res));
        }
        // Compatibility with the pairing.
        let lhs = lie_fun(&x.vec, &pairing(&y, &z)?)?;
        let rhs = &pairing(&cal_dorfman(&x, &y)?, &z)? + &pairing(&y, &cal_dorfman(&x, &z)?)?;
        if lhs != rhs {
            let mut res = LightElement::zero(cfg.dimension, cfg.matrix_dim);
            res.u = &lhs - &rhs;
            failures.push(("dorfman_pairing", res));
        }

        if let Some((which, residual)) = failures.into_iter().next() {
            return Ok(CheckReport::failing(
                name,
                trial + 1,
                Counterexample {
                    trial,
                    description: format!("{} at ghost signature {:?}", which, sig),
                    inputs: vec![a, b, c],
                    residual,
                },
            ));
        }
    }
    Ok(CheckReport::passing(name, cfg.trials))
}

/// Strict Leibniz rule of the derived bracket built from the deformed
/// product with an antisymmetric deformation tensor.
pub fn check_derived_bracket(cfg: &SamplerConfig) -> Result<CheckReport> {
    if cfg.matrix_dim != 1 {
        return Err(AlgebraError::NoncommutativeInput(cfg.matrix_dim));
    }
    let name = "derived_bracket_antisymmetric";
    let sigs = ghost_signatures(3);
    for trial in 0..cfg.trials {
        let mut rng = cfg.rng(name, trial);
        let eta = crate::sampling::random_antisymmetric_eta(&mut rng, cfg.dimension);
        let ops = LzOps::deformed(SignCalibration::default(), eta);
        let sig = &sigs[trial % sigs.len()];
        let a = random_homogeneous(&mut rng, cfg, sig[0]);
        let b = random_homogeneous(&mut rng, cfg, sig[1]);
        let c = random_homogeneous(&mut rng, cfg, sig[2]);
        let residual = bracket_leibniz_residual(&ops, &a, &b, &c)?;
        if !residual.is_zero() {
            return Ok(CheckReport::failing(
                name,
                trial + 1,
                Counterexample {
                    trial,
                    description: format!("ghost signature {:?}", sig),
                    inputs: vec![a, b, c],
                    residual,
                },
            ));
        }
    }
    Ok(CheckReport::passing(name, cfg.trials))
}

/// Squares and anticommutators of the three differentials, including
/// non-symmetric deformation tensors.
pub fn check_differentials(cfg: &SamplerConfig) -> Result<CheckReport> {
    use crate::light_complex::{apply_b0, apply_q, apply_q_eta, apply_r_eta};
    let name = "differentials";
    for trial in 0..cfg.trials {
        let mut rng = cfg.rng(name, trial);
        let a = crate::sampling::random_element(&mut rng, cfg);
        let eta = crate::sampling::random_eta(&mut rng, cfg.dimension);
        let mut failures: Vec<(&str, LightElement)> = Vec::new();
        let r = apply_q(&apply_q(&a));
        if !r.is_zero() {
            failures.push(("q_squared", r));
        }
        let r = apply_b0(&apply_b0(&a));
        if !r.is_zero() {
            failures.push(("b0_squared", r));
        }
        let r = apply_b0(&apply_q(&a)).add(&apply_q(&apply_b0(&a)));
        if !r.is_zero() {
            failures.push(("q_b0_anticommutator", r));
        }
        let r = apply_r_eta(&apply_r_eta(&a, &eta)?, &eta)?;
        if !r.is_zero() {
            failures.push(("r_squared", r));
        }
        let r = apply_r_eta(&apply_q(&a), &eta)?.add(&apply_q(&apply_r_eta(&a, &eta)?));
        if !r.is_zero() {
            failures.push(("q_r_anticommutator", r));
        }
        let r = apply_q_eta(&apply_q_eta(&a, &eta)?, &eta)?;
        if !r.is_zero() {
            failures.push(("q_eta_squared", r));
        }
        if let Some((which, residual)) = failures.into_iter().next() {
            return Ok(CheckReport::failing(
                name,
                trial + 1,
                Counterexample {
                    trial,
                    description: which.to_string(),
                    inputs: vec![a],
                    residual,
                },
            ));
        }
    }
    Ok(CheckReport::passing(name, cfg.trials))
}

/// The full battery run by the command-line `check`: differentials,
/// undeformed Stasheff relations and bar differential, the strict suite,
/// the deformed suite over sampled symmetric tensors, and the derived
/// bracket over antisymmetric ones. Output order is fixed.
pub fn run_battery(cfg: &SamplerConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    reports.push(check_differentials(cfg)?);
    for arity in 2..=4 {
        reports.push(check_stasheff(arity, cfg, None, Perturbation::None)?);
    }
    reports.push(check_bar_differential(4, cfg, None, Perturbation::None)?);
    if cfg.matrix_dim == 1 {
        reports.push(check_bv_suite(cfg, Perturbation::None)?);
        reports.push(check_derived_bracket(cfg)?);
    }
    // Deformed suite over sampled symmetric tensors: the tensor is resampled
    // per trial inside a wrapper check.
    reports.push(check_deformed_suite(cfg)?);
    Ok(reports)
}

/// Deformed Stasheff relations with a fresh symmetric tensor per trial.
pub fn check_deformed_suite(cfg: &SamplerConfig) -> Result<CheckReport> {
    let name = "deformed_suite";
    let sigs = ghost_signatures(4);
    for trial in 0..cfg.trials {
        let mut rng = cfg.rng(name, trial);
        let eta = crate::sampling::random_symmetric_eta(&mut rng, cfg.dimension);
        let ops = LzOps::deformed(SignCalibration::default(), eta);
        let sig = &sigs[trial % sigs.len()];
        let inputs: Vec<LightElement> = sig
            .iter()
            .map(|&g| random_homogeneous(&mut rng, cfg, g))
            .collect();
        let mut failures: Vec<(&str, LightElement)> = Vec::new();
        let r = leibniz_residual(&ops, &inputs[0], &inputs[1])?;
        if !r.is_zero() {
            failures.push(("leibniz", r));
        }
        if cfg.matrix_dim == 1 {
            let r = commutativity_residual(&ops, &inputs[0], &inputs[1])?;
            if !r.is_zero() {
                failures.push(("commutativity", r));
            }
        }
        let r = associativity_residual(&ops, &inputs[0], &inputs[1], &inputs[2])?;
        if !r.is_zero() {
            failures.push(("associativity", r));
        }
        let r = arity4_residual(&ops, &inputs[0], &inputs[1], &inputs[2], &inputs[3])?;
        if !r.is_zero() {
            failures.push(("arity4", r));
        }
        if let Some((which, residual)) = failures.into_iter().next() {
            return Ok(CheckReport::failing(
                name,
                trial + 1,
                Counterexample {
                    trial,
                    description: format!("{} at ghost signature {:?}", which, sig),
                    inputs,
                    residual,
                },
            ));
        }
    }
    Ok(CheckReport::passing(name, cfg.trials))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_cfg(matrix_dim: usize) -> SamplerConfig {
        SamplerConfig {
            seed: 42,
            dimension: 2,
            max_degree: 2,
            matrix_dim,
            terms_per_component: 2,
            trials: 24,
        }
    }

    #[test]
    fn stasheff_suite_passes() {
        for arity in 2..=4 {
            let r = check_stasheff(arity, &small_cfg(2), None, Perturbation::None).unwrap();
            assert!(r.pass, "{}", r.line());
        }
    }

    #[test]
    fn stasheff_negative_control_fails_with_counterexample() {
        let r = check_stasheff(3, &small_cfg(2), None, Perturbation::ZeroN0).unwrap();
        assert!(!r.pass);
        let cx = r.counterexample.expect("failing report carries inputs");
        // The counterexample replays to the same residual.
        let mut ops = LzOps::undeformed(SignCalibration::default());
        ops.zero_n0 = true;
        let replay =
            associativity_residual(&ops, &cx.inputs[0], &cx.inputs[1], &cx.inputs[2]).unwrap();
        assert_eq!(replay, cx.residual);
        assert!(!replay.is_zero());
    }

    #[test]
    fn bar_differential_squares_to_zero() {
        let r = check_bar_differential(4, &small_cfg(2), None, Perturbation::None).unwrap();
        assert!(r.pass, "{}", r.line());
        let eta = Eta::identity(2);
        let r = check_bar_differential(4, &small_cfg(2), Some(&eta), Perturbation::None).unwrap();
        assert!(r.pass, "{}", r.line());
    }

    #[test]
    fn bar_differential_koszul_control_fails() {
        let r = check_bar_differential(4, &small_cfg(2), None, Perturbation::FlipKoszul).unwrap();
        assert!(!r.pass);
        assert!(r.counterexample.is_some());
    }

    #[test]
    fn bv_suite_passes_and_dorfman_control_fails() {
        let r = check_bv_suite(&small_cfg(1), Perturbation::None).unwrap();
        assert!(r.pass, "{}", r.line());
        let r = check_bv_suite(&small_cfg(1), Perturbation::FlipDorfman).unwrap();
        assert!(!r.pass);
        let r = check_bv_suite(&small_cfg(2), Perturbation::None);
        assert!(matches!(r, Err(AlgebraError::NoncommutativeInput(2))));
    }

    #[test]
    fn battery_is_deterministic() {
        let cfg = small_cfg(1);
        let a = run_battery(&cfg).unwrap();
        let b = run_battery(&cfg).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert!(a.iter().all(|r| r.pass));
    }
}
