//! Probably approximately correct implication bases.
//!
//! Horn query learning with the context as an exact membership oracle and
//! equivalence queries simulated by sampling. The hypothesis holds rules
//! `A → A″`; the `i`-th equivalence check draws
//! `⌈(i + ln(1/δ)) / ε⌉` uniform attribute sets and returns the first `X`
//! on which the hypothesis closure differs from `X″`.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::{AttributeSet, BitSet};
use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::fca::closure::LinClosure;
use crate::fca::derivation::{closure, is_closed};
use crate::fca::implication::{Implication, ImplicationBase};
use crate::kv::KeyValues;
use crate::rational::{to_f64, Rational};

pub const EXACT_DISTANCE_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PacParams {
    pub epsilon: Rational,
    pub delta: Rational,
    pub seed: u64,
}

impl PacParams {
    pub fn new(epsilon: Rational, delta: Rational, seed: u64) -> Result<Self> {
        let unit = |r: Rational| *r.numer() > 0 && r.numer() <= r.denom();
        if !unit(epsilon) || !unit(delta) {
            return Err(Error::InvalidParameter(format!(
                "epsilon and delta must lie in (0, 1], got {epsilon} and {delta}"
            )));
        }
        Ok(PacParams { epsilon, delta, seed })
    }

    /// Samples for the `i`-th equivalence check (1-based).
    pub fn samples_for_check(&self, i: u64) -> u64 {
        let ln_inv_delta = -to_f64(&self.delta).ln();
        ((i as f64 + ln_inv_delta) / to_f64(&self.epsilon)).ceil() as u64
    }
}

/// A learned base and what it took to learn it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PacRun {
    pub base: ImplicationBase,
    pub params: PacParams,
    pub equivalence_checks: u64,
    pub samples_drawn: u64,
    pub counterexamples: u64,
    pub membership_queries: u64,
}

impl PacRun {
    pub fn manifest(&self) -> KeyValues {
        let mut kv = KeyValues::new();
        kv.set("epsilon", self.params.epsilon)
            .set("delta", self.params.delta)
            .set("seed", self.params.seed)
            .set("rng", "chacha8")
            .set("equivalence_checks", self.equivalence_checks)
            .set("iterations", self.counterexamples)
            .set("samples_drawn", self.samples_drawn)
            .set("membership_queries", self.membership_queries)
            .set("rules", self.base.len());
        kv
    }
}

/// Draws `X ⊆ M` as `|M|` fair bits, attribute 0 in the least significant
/// bit of the first 64-bit word.
pub fn random_subset<R: RngCore>(rng: &mut R, m: usize) -> AttributeSet {
    BitSet::from_indices(
        m,
        (0..m.div_ceil(64))
            .flat_map(|w| {
                let word = rng.next_u64();
                (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
            })
            .filter(|&i| i < m),
    )
}

pub fn pac_basis(k: &FormalContext, params: &PacParams) -> ImplicationBase {
    pac_basis_run(k, params).base
}

pub fn pac_basis_run(k: &FormalContext, params: &PacParams) -> PacRun {
    let m = k.attribute_count();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut hypothesis: Vec<Implication> = Vec::new();
    let mut run = PacRun {
        base: ImplicationBase::new(m),
        params: *params,
        equivalence_checks: 0,
        samples_drawn: 0,
        counterexamples: 0,
        membership_queries: 0,
    };
    loop {
        run.equivalence_checks += 1;
        let mut lc = LinClosure::new(m);
        for r in &hypothesis {
            lc.push(r);
        }
        let mut counterexample = None;
        for _ in 0..params.samples_for_check(run.equivalence_checks) {
            run.samples_drawn += 1;
            let x = random_subset(&mut rng, m);
            let hx = lc.close(&x);
            run.membership_queries += 1;
            if closure(k, &x) != hx {
                counterexample = Some(hx);
                break;
            }
        }
        let Some(c) = counterexample else { break };
        run.counterexamples += 1;
        // c is closed under the hypothesis but not in the context
        let mut refined = false;
        for rule in hypothesis.iter_mut() {
            let d = rule.premise.intersection(&c);
            if d == rule.premise {
                continue;
            }
            run.membership_queries += 1;
            if !is_closed(k, &d) {
                let dc = closure(k, &d);
                *rule = Implication::new(d, dc);
                refined = true;
                break;
            }
        }
        if !refined {
            let cc = closure(k, &c);
            hypothesis.push(Implication::new(c, cc));
        }
    }
    run.base = ImplicationBase::from_rules(m, hypothesis);
    run
}

/// Fraction of `X ⊆ M` with `X^L ≠ X″`, by full enumeration.
pub fn horn_distance(base: &ImplicationBase, k: &FormalContext) -> Result<Rational> {
    let m = k.attribute_count();
    if m > EXACT_DISTANCE_CAP {
        return Err(Error::CapExceeded {
            attributes: m,
            cap: EXACT_DISTANCE_CAP,
        });
    }
    check_universe(base, k)?;
    let mut lc = LinClosure::from_base(base);
    let total = 1u64 << m;
    let wrong = (0..total)
        .filter(|bits| {
            let x = BitSet::from_indices(m, (0..m).filter(|i| bits >> i & 1 == 1));
            lc.close(&x) != closure(k, &x)
        })
        .count() as u64;
    Ok(Rational::new(wrong, total))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DistanceEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub samples: u64,
}

/// Monte Carlo Horn distance for contexts too wide to enumerate.
pub fn horn_distance_sampled(
    base: &ImplicationBase,
    k: &FormalContext,
    samples: u64,
    seed: u64,
) -> Result<DistanceEstimate> {
    if samples == 0 {
        return Err(Error::InvalidParameter("sample count must be positive".into()));
    }
    check_universe(base, k)?;
    let m = k.attribute_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lc = LinClosure::from_base(base);
    let wrong = (0..samples)
        .filter(|_| {
            let x = random_subset(&mut rng, m);
            lc.close(&x) != closure(k, &x)
        })
        .count();
    let p = wrong as f64 / samples as f64;
    Ok(DistanceEstimate {
        estimate: p,
        std_error: (p * (1.0 - p) / samples as f64).sqrt(),
        samples,
    })
}

fn check_universe(base: &ImplicationBase, k: &FormalContext) -> Result<()> {
    if base.universe() != k.attribute_count() {
        return Err(Error::InvalidParameter(format!(
            "base over {} attributes, context has {}",
            base.universe(),
            k.attribute_count()
        )));
    }
    Ok(())
}
