//! Seeded sampling from the unitary group of a Hermitian form.
//!
//! Samples are products of [`UNITARY_PRODUCT_LENGTH`] generators of the
//! standard unitary group (coordinate permutations, diagonal matrices with
//! norm-one entries, and 2x2 unitary blocks), conjugated into the given form
//! through an orthonormal basis. No uniformity is claimed.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{is_unitary, FieldMatrix, FieldVector, HermitianForm};
use crate::error::{Error, Result};
use crate::galois::FieldSpec;

pub const UNITARY_PRODUCT_LENGTH: usize = 16;

/// Elements of norm one: g^{j(q-1)} for a primitive g.
fn norm_one_elements(spec: &FieldSpec) -> Vec<u32> {
    let q = spec.q().expect("involution");
    (0..=q).map(|j| spec.pow_raw(spec.exp_raw(1), (j * (q - 1)) as u64)).collect()
}

/// Some c with c^{q+1} = v, for v in the fixed subfield.
fn norm_preimage(spec: &FieldSpec, v: u32, rng: &mut impl Rng) -> u32 {
    if v == 0 {
        return 0;
    }
    let q = spec.q().expect("involution");
    let l = spec.log_raw(v);
    debug_assert_eq!(l % (q + 1), 0, "value outside the fixed subfield");
    let j = rng.gen_range(0..=q);
    let group = spec.order() - 1;
    spec.exp_raw((l / (q + 1) + j * (q - 1)) % group)
}

/// Columns v_1..v_n with <v_i, v_j> = δ_ij, so that P* G P = I.
pub fn orthonormal_basis(form: &HermitianForm) -> FieldMatrix {
    let spec = Arc::clone(form.spec());
    let n = form.dim();
    let mut rest: Vec<FieldVector> = (0..n).map(|i| FieldVector::basis(&spec, n, i)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut found = Vec::with_capacity(n);
    while !rest.is_empty() {
        let v = anisotropic_vector(form, &rest);
        let c = form.evaluate_raw(v.raw(), v.raw());
        let lambda = norm_preimage(&spec, spec.inv_raw(c).expect("anisotropic"), &mut rng);
        let v = v.scale_raw(lambda);
        debug_assert_eq!(form.evaluate_raw(v.raw(), v.raw()), 1);
        // Project the remaining vectors onto the orthogonal complement of v.
        let projected: Vec<FieldVector> = rest
            .iter()
            .map(|w| {
                let coef = form.evaluate_raw(v.raw(), w.raw());
                w.sub(&v.scale_raw(coef)).expect("same shape")
            })
            .collect();
        let mut basis: Vec<FieldVector> = Vec::new();
        for w in projected {
            let mut trial = basis.clone();
            trial.push(w.clone());
            if super::rank_of(&trial) == trial.len() {
                basis = trial;
            }
        }
        found.push(v);
        rest = basis;
    }
    FieldMatrix::from_columns(&found).expect("n columns")
}

/// A vector of span(rest) with nonzero norm. Nondegenerate Hermitian forms
/// always have one since the form is not alternating.
fn anisotropic_vector(form: &HermitianForm, rest: &[FieldVector]) -> FieldVector {
    for w in rest {
        if form.evaluate_raw(w.raw(), w.raw()) != 0 {
            return w.clone();
        }
    }
    let spec = form.spec();
    for (i, a) in rest.iter().enumerate() {
        for b in &rest[i + 1..] {
            for lambda in 1..spec.order() {
                let v = a.add(&b.scale_raw(lambda)).expect("same shape");
                if form.evaluate_raw(v.raw(), v.raw()) != 0 {
                    return v;
                }
            }
        }
    }
    unreachable!("restriction of a nondegenerate Hermitian form is not totally isotropic")
}

fn sample_generator(spec: &Arc<FieldSpec>, n: usize, norm_one: &[u32], rng: &mut ChaCha8Rng) -> FieldMatrix {
    let kind = if n == 1 { 1 } else { rng.gen_range(0..3) };
    match kind {
        0 => {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(rng);
            FieldMatrix::permutation(spec, &perm).expect("shuffle is a permutation")
        }
        1 => {
            let mut data = vec![0; n * n];
            for i in 0..n {
                data[i * n + i] = *norm_one.choose(rng).expect("q+1 elements");
            }
            FieldMatrix::from_raw(spec, n, n, data)
        }
        _ => {
            // [[a, -mu conj(c)], [c, mu conj(a)]] with N(a) + N(c) = 1, N(mu) = 1
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let a = rng.gen_range(0..spec.order());
            let na = spec.mul_raw(a, spec.conj_raw(a));
            let c = norm_preimage(spec, spec.sub_raw(1, na), rng);
            let mu = *norm_one.choose(rng).expect("q+1 elements");
            let mut m = FieldMatrix::identity(spec, n);
            let mut set = |r: usize, col: usize, v: u32| {
                m.set(r, col, &crate::galois::FieldElement::from_raw(spec, v)).expect("same field")
            };
            set(i, i, a);
            set(j, i, c);
            set(i, j, spec.neg_raw(spec.mul_raw(mu, spec.conj_raw(c))));
            set(j, j, spec.mul_raw(mu, spec.conj_raw(a)));
            m
        }
    }
}

/// Deterministic unitary for `form` from `seed`. Every sample is checked
/// against U* G U = G before it is returned.
pub fn random_unitary(form: &HermitianForm, seed: u64) -> FieldMatrix {
    let spec = Arc::clone(form.spec());
    let n = form.dim();
    let norm_one = norm_one_elements(&spec);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut u = FieldMatrix::identity(&spec, n);
    for _ in 0..UNITARY_PRODUCT_LENGTH {
        let g = sample_generator(&spec, n, &norm_one, &mut rng);
        u = g.mul(&u).expect("square");
    }
    let u = if form.is_standard() {
        u
    } else {
        let p = orthonormal_basis(form);
        let p_inv = p.inverse().expect("orthonormal basis is invertible");
        p.mul(&u).and_then(|m| m.mul(&p_inv)).expect("square")
    };
    assert!(
        is_unitary(&u, form).unwrap_or(false),
        "unitary sampler produced a non-unitary matrix"
    );
    u
}

/// Guard used by callers that accept user matrices.
pub(crate) fn require_unitary(u: &FieldMatrix, form: &HermitianForm) -> Result<()> {
    if is_unitary(u, form)? {
        Ok(())
    } else {
        Err(Error::NotUnitary)
    }
}
