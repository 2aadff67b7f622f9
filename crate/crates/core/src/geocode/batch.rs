use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{geo_decode, geo_encode_trace, geo_transmit, GeoParams};
use crate::error::Result;
use crate::hermitian::{FieldVector, HermitianForm};
use crate::kernelgeo::ProjectivePoint;

/// `count` seeded states, uniform over nonzero vectors that are not
/// self-orthogonal.
pub fn random_states(form: &HermitianForm, count: usize, seed: u64) -> Vec<FieldVector> {
    let spec = form.spec();
    let order = spec.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let entries: Vec<_> = (0..form.dim())
            .map(|_| spec.element(rng.gen_range(0..order)).expect("index below order"))
            .collect();
        let v = FieldVector::new(spec, &entries).expect("entries share the field");
        if !v.is_zero() && !form.is_self_orthogonal(&v).expect("matching dimension") {
            out.push(v);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegenerateWitness {
    pub trial: usize,
    pub state: Vec<String>,
    pub meets: [usize; 3],
    pub meet_points: Vec<Vec<String>>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundtripFailure {
    pub trial: usize,
    pub state: Vec<String>,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RoundtripReport {
    pub trials: usize,
    pub successes: usize,
    pub degenerate_count: usize,
    pub degenerate_rate: f64,
    /// Non-degenerate trials whose encode, transmit or decode went wrong.
    pub failures: Vec<RoundtripFailure>,
    pub witnesses: Vec<DegenerateWitness>,
}

impl RoundtripReport {
    /// Every non-degenerate trial came back as the original ray.
    pub fn all_nondegenerate_recovered(&self) -> bool {
        self.failures.is_empty() && self.successes + self.degenerate_count == self.trials
    }
}

enum Outcome {
    Recovered,
    Degenerate(DegenerateWitness),
    Failed(RoundtripFailure),
}

fn one_trial(trial: usize, state: &FieldVector, params: &GeoParams) -> Outcome {
    let fail = |error: String| Outcome::Failed(RoundtripFailure { trial, state: state.to_strings(), error });
    let run = || -> Result<Outcome> {
        let trace = geo_encode_trace(state, params)?;
        let Some(ct) = trace.ciphertext else {
            let geom = params.geom();
            return Ok(Outcome::Degenerate(DegenerateWitness {
                trial,
                state: state.to_strings(),
                meets: trace.meets,
                meet_points: trace.meets.iter().map(|&i| geom.point(i).coords().to_strings()).collect(),
                rank: trace.span_rank,
            }));
        };
        let (received, _) = geo_transmit(&ct, params.geom().form().spec())?;
        let x = geo_decode(&received, params)?;
        if x == ProjectivePoint::from_vector(state)? {
            Ok(Outcome::Recovered)
        } else {
            Ok(fail(format!("decoded {x}, expected {}", trace.x)))
        }
    };
    run().unwrap_or_else(|e| fail(e.to_string()))
}

/// Encode, transmit and decode `trials` seeded random states.
pub fn geo_roundtrip_batch(params: &GeoParams, trials: usize, seed: u64, parallel: bool) -> RoundtripReport {
    let states = random_states(params.geom().form(), trials, seed);
    let outcomes: Vec<Outcome> = if parallel {
        states.par_iter().enumerate().map(|(i, s)| one_trial(i, s, params)).collect()
    } else {
        states.iter().enumerate().map(|(i, s)| one_trial(i, s, params)).collect()
    };
    let mut report = RoundtripReport {
        trials,
        successes: 0,
        degenerate_count: 0,
        degenerate_rate: 0.0,
        failures: vec![],
        witnesses: vec![],
    };
    for o in outcomes {
        match o {
            Outcome::Recovered => report.successes += 1,
            Outcome::Degenerate(w) => {
                report.degenerate_count += 1;
                report.witnesses.push(w);
            }
            Outcome::Failed(f) => report.failures.push(f),
        }
    }
    if trials > 0 {
        report.degenerate_rate = report.degenerate_count as f64 / trials as f64;
    }
    report
}
