//! Cloning and deleting obstructions.
//!
//! A unitary that clones (or deletes) both |φ⟩ and |ψ⟩ forces
//! T = |φ⟩⊗|ψ⟩ + |ψ⟩⊗|φ⟩ = 0, entrywise a_i b_j = -b_i a_j. Over a
//! commutative field that happens only for a zero vector, or for two states
//! on one ray in characteristic 2.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::galois::{build_field, FieldElement, FieldSpec};
use crate::hermitian::{standard_form, FieldMatrix, FieldVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    ZeroState,
    SameRayChar2,
    SameRayCharOdd,
    Independent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ObstructionKind {
    Cloning,
    Deleting,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CloneClassification {
    pub kind: ObstructionKind,
    pub tensor_obstruction: FieldVector,
    pub verdict: Verdict,
    /// ρ with ψ = φ·ρ when both states share a ray.
    pub witness: Option<FieldElement>,
    /// The entrywise test a_i b_j = -b_i a_j, computed independently.
    pub entrywise_vanishes: bool,
    /// All commutators [a_i, a_j] and [b_i, b_j] vanish. Always true over a
    /// field; kept so the noncommutative condition is visible.
    pub commutators_vanish: bool,
}

impl CloneClassification {
    pub fn obstruction_vanishes(&self) -> bool {
        self.tensor_obstruction.is_zero()
    }

    /// The tensor and entrywise computations agree.
    pub fn consistent(&self) -> bool {
        self.obstruction_vanishes() == self.entrywise_vanishes
    }
}

fn classify(phi: &FieldVector, psi: &FieldVector, kind: ObstructionKind) -> Result<CloneClassification> {
    if !crate::galois::same_field(phi.spec(), psi.spec()) {
        return Err(Error::FieldMismatch);
    }
    if phi.len() != psi.len() {
        return Err(Error::DimensionMismatch { expected: phi.len(), found: psi.len() });
    }
    let t = phi.tensor(psi)?.add(&psi.tensor(phi)?)?;

    let a = phi.entries();
    let b = psi.entries();
    let n = a.len();
    let mut entrywise_vanishes = true;
    let mut commutators_vanish = true;
    for i in 0..n {
        for j in 0..n {
            if &a[i] * &b[j] != -(&b[i] * &a[j]) {
                entrywise_vanishes = false;
            }
            if &a[i] * &a[j] != &a[j] * &a[i] || &b[i] * &b[j] != &b[j] * &b[i] {
                commutators_vanish = false;
            }
        }
    }

    let witness = phi.ratio_to(psi).filter(|_| !psi.is_zero());
    let verdict = if phi.is_zero() || psi.is_zero() {
        Verdict::ZeroState
    } else if witness.is_some() {
        if phi.spec().characteristic() == 2 {
            Verdict::SameRayChar2
        } else {
            Verdict::SameRayCharOdd
        }
    } else {
        Verdict::Independent
    };
    Ok(CloneClassification { kind, tensor_obstruction: t, verdict, witness, entrywise_vanishes, commutators_vanish })
}

pub fn clone_obstruction(phi: &FieldVector, psi: &FieldVector) -> Result<CloneClassification> {
    classify(phi, psi, ObstructionKind::Cloning)
}

/// Deleting reduces to the same tensor equation as cloning.
pub fn delete_obstruction(phi: &FieldVector, psi: &FieldVector) -> Result<CloneClassification> {
    classify(phi, psi, ObstructionKind::Deleting)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdempotentCheck {
    pub field_order: u32,
    /// α² = α for every α.
    pub all_idempotent: bool,
    /// First α (as a polynomial string) with α² ≠ α.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct F2SpecialCaseReport {
    pub fields: Vec<IdempotentCheck>,
    /// Only GF(2) is made entirely of idempotents.
    pub holds_only_for_f2: bool,
}

/// Fields of order at most this are scanned by [`f2_orthogonal_special_case`].
pub const SPECIAL_CASE_MAX_ORDER: u32 = 9;

/// The orthogonal-clone condition α² = α, β² = β holds for all scalars
/// only in GF(2). Scans every field of order <= 9.
pub fn f2_orthogonal_special_case() -> F2SpecialCaseReport {
    let mut fields = Vec::new();
    for order in 2..=SPECIAL_CASE_MAX_ORDER {
        let Some((p, k)) = prime_power(order) else { continue };
        let spec = build_field(p as u64, k, None).expect("prime power");
        let counterexample = spec.elements().find(|a| &(a * a) != a).map(|a| a.to_string());
        fields.push(IdempotentCheck { field_order: order, all_idempotent: counterexample.is_none(), counterexample });
    }
    let holds_only_for_f2 = fields.iter().all(|c| c.all_idempotent == (c.field_order == 2));
    F2SpecialCaseReport { fields, holds_only_for_f2 }
}

fn prime_power(n: u32) -> Option<(u32, u32)> {
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut m = n;
    let mut k = 0;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationCloneResult {
    pub is_permutation_clone: bool,
    /// perm[i] = j when U(s_i ⊗ e) = s_j ⊗ s_j.
    pub permutation: Option<Vec<usize>>,
    /// The permutation is the identity, so U clones every state of S.
    pub clones_each: bool,
    /// Index of a state whose image is not of the form s ⊗ s for s in S.
    pub witness: Option<usize>,
}

/// Whether U permutes {ψ ⊗ e : ψ ∈ S} onto {φ ⊗ φ : φ ∈ S}.
///
/// U must preserve the standard form on the tensor space; over fields
/// without an involution (such as GF(2)) that means U^T U = I.
pub fn permutation_clone_check(u: &FieldMatrix, states: &[FieldVector], e: &FieldVector) -> Result<PermutationCloneResult> {
    let spec: &Arc<FieldSpec> = e.spec();
    let n = e.len();
    if u.rows() != n * n || u.cols() != n * n {
        return Err(Error::DimensionMismatch { expected: n * n, found: u.rows().max(u.cols()) });
    }
    for s in states {
        if s.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: s.len() });
        }
    }
    let unitary = if spec.has_involution() {
        crate::hermitian::is_unitary(u, &standard_form(spec, n * n)?)?
    } else {
        u.adjoint_or_transpose().mul(u)?.is_identity()
    };
    if !unitary {
        return Err(Error::NotUnitary);
    }

    let mut targets: HashMap<Vec<u32>, usize> = HashMap::new();
    for (j, s) in states.iter().enumerate() {
        targets.entry(s.tensor(s)?.raw().to_vec()).or_insert(j);
    }
    let mut perm = Vec::with_capacity(states.len());
    let mut hit = vec![false; states.len()];
    let mut witness = None;
    for (i, s) in states.iter().enumerate() {
        let image = u.apply(&s.tensor(e)?)?;
        match targets.get(image.raw()) {
            Some(&j) if !hit[j] => {
                hit[j] = true;
                perm.push(j);
            }
            _ => {
                witness = Some(i);
                break;
            }
        }
    }
    if witness.is_some() || perm.len() != states.len() {
        return Ok(PermutationCloneResult { is_permutation_clone: false, permutation: None, clones_each: false, witness });
    }
    let clones_each = perm.iter().enumerate().all(|(i, &j)| i == j);
    Ok(PermutationCloneResult { is_permutation_clone: true, permutation: Some(perm), clones_each, witness: None })
}

/// Verdict counts over all ordered pairs of vectors in GF(q)^dim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionScan {
    pub kind: ObstructionKind,
    pub pairs: usize,
    pub counts: std::collections::BTreeMap<String, usize>,
    /// Pairs whose vanishing obstruction disagrees with the verdict rule.
    pub rule_violations: usize,
    /// Pairs where the tensor and entrywise tests disagree.
    pub entrywise_disagreements: usize,
    pub samples: Vec<ScanSample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanSample {
    pub verdict: Verdict,
    pub phi: Vec<String>,
    pub psi: Vec<String>,
    pub obstruction_vanishes: bool,
    pub witness: Option<String>,
}

/// The rule T = 0 ⟺ zero vector ∨ (char 2 ∧ same ray), checked on a pair.
pub fn obeys_rule(c: &CloneClassification) -> bool {
    let predicted = matches!(c.verdict, Verdict::ZeroState | Verdict::SameRayChar2);
    c.obstruction_vanishes() == predicted
}

pub fn all_vectors(spec: &Arc<FieldSpec>, dim: usize) -> Vec<FieldVector> {
    let order = spec.order() as u64;
    let total = order.pow(dim as u32);
    (0..total)
        .map(|mut n| {
            let data = (0..dim)
                .map(|_| {
                    let d = (n % order) as u32;
                    n /= order;
                    d
                })
                .collect();
            FieldVector::from_raw(spec, data)
        })
        .collect()
}

/// Exhaustive classification of every ordered pair in GF^dim.
pub fn scan_pairs(spec: &Arc<FieldSpec>, dim: usize, kind: ObstructionKind) -> Result<ObstructionScan> {
    if dim == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    let vectors = all_vectors(spec, dim);
    if (vectors.len() as u64).pow(2) > 1 << 24 {
        return Err(Error::TooLarge { dim, q: spec.q().unwrap_or(spec.order()) });
    }
    let mut scan = ObstructionScan {
        kind,
        pairs: 0,
        counts: Default::default(),
        rule_violations: 0,
        entrywise_disagreements: 0,
        samples: Vec::new(),
    };
    let mut sampled = std::collections::HashSet::new();
    for phi in &vectors {
        for psi in &vectors {
            let c = classify(phi, psi, kind)?;
            scan.pairs += 1;
            *scan.counts.entry(format!("{:?}", c.verdict)).or_insert(0) += 1;
            if !obeys_rule(&c) {
                scan.rule_violations += 1;
            }
            if !c.consistent() {
                scan.entrywise_disagreements += 1;
            }
            // First pair of each verdict is kept as a witness.
            if sampled.insert(c.verdict) {
                scan.samples.push(ScanSample {
                    verdict: c.verdict,
                    phi: phi.to_strings(),
                    psi: psi.to_strings(),
                    obstruction_vanishes: c.obstruction_vanishes(),
                    witness: c.witness.as_ref().map(FieldElement::to_string),
                });
            }
        }
    }
    Ok(scan)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, k: u32) -> Arc<FieldSpec> {
        build_field(p, k, None).unwrap()
    }

    #[test]
    fn clone_examples() {
        let f = gf(2, 2);
        let e0 = FieldVector::basis(&f, 2, 0);
        let e1 = FieldVector::basis(&f, 2, 1);
        let c = clone_obstruction(&e0, &e1).unwrap();
        assert_eq!(c.verdict, Verdict::Independent);
        assert_eq!(c.tensor_obstruction, FieldVector::from_ints(&f, &[0, 1, 1, 0]));

        let phi = FieldVector::parse(&f, &["1", "t"]).unwrap();
        let psi = FieldVector::parse(&f, &["t", "t+1"]).unwrap();
        let c = clone_obstruction(&phi, &psi).unwrap();
        assert_eq!(c.verdict, Verdict::SameRayChar2);
        assert!(c.obstruction_vanishes());
        assert_eq!(c.witness.unwrap().to_string(), "t");

        let c = clone_obstruction(&FieldVector::zero(&f, 2), &phi).unwrap();
        assert_eq!(c.verdict, Verdict::ZeroState);
        assert!(c.obstruction_vanishes());
        assert!(c.commutators_vanish);
    }

    #[test]
    fn delete_examples() {
        let g = gf(3, 2);
        let phi = FieldVector::parse(&g, &["1", "t"]).unwrap();
        let d = delete_obstruction(&phi, &phi).unwrap();
        assert_eq!(d.kind, ObstructionKind::Deleting);
        assert_eq!(d.verdict, Verdict::SameRayCharOdd);
        assert_eq!(d.tensor_obstruction, phi.tensor(&phi).unwrap().scale(&g.from_int(2)));
        assert!(!d.obstruction_vanishes());
        let e0 = FieldVector::basis(&g, 2, 0);
        let e1 = FieldVector::basis(&g, 2, 1);
        assert_eq!(delete_obstruction(&e0, &e1).unwrap().verdict, Verdict::Independent);
        assert!(matches!(
            delete_obstruction(&e0, &FieldVector::basis(&g, 3, 0)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn special_case() {
        let r = f2_orthogonal_special_case();
        assert!(r.holds_only_for_f2);
        let orders: Vec<u32> = r.fields.iter().map(|c| c.field_order).collect();
        assert_eq!(orders, vec![2, 3, 4, 5, 7, 8, 9]);
        let gf4 = r.fields.iter().find(|c| c.field_order == 4).unwrap();
        assert_eq!(gf4.counterexample.as_deref(), Some("t"));
        let gf3 = r.fields.iter().find(|c| c.field_order == 3).unwrap();
        assert_eq!(gf3.counterexample.as_deref(), Some("2"));
    }

    #[test]
    fn cnot_clones_basis_states_over_f2() {
        let f = gf(2, 1);
        // |a b> -> |a, a + b>
        let cnot = FieldMatrix::permutation(&f, &[0, 1, 3, 2]).unwrap();
        let e0 = FieldVector::basis(&f, 2, 0);
        let basis = vec![e0.clone(), FieldVector::basis(&f, 2, 1)];
        let r = permutation_clone_check(&cnot, &basis, &e0).unwrap();
        assert!(r.is_permutation_clone && r.clones_each);
        assert_eq!(r.permutation, Some(vec![0, 1]));

        let id = FieldMatrix::identity(&f, 4);
        let r = permutation_clone_check(&id, std::slice::from_ref(&e0), &e0).unwrap();
        assert!(r.is_permutation_clone);

        let not_unitary = FieldMatrix::from_int_rows(&f, &[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap();
        assert_eq!(permutation_clone_check(&not_unitary, &basis, &e0).unwrap_err(), Error::NotUnitary);
    }

    #[test]
    fn random_unitary_does_not_clone_everything() {
        let f = gf(2, 2);
        let form = standard_form(&f, 4).unwrap();
        let u = crate::hermitian::random_unitary(&form, 3);
        let states = all_vectors(&f, 2);
        let r = permutation_clone_check(&u, &states, &FieldVector::basis(&f, 2, 0)).unwrap();
        assert!(!r.is_permutation_clone);
        assert!(r.witness.is_some());
    }

    #[test]
    fn exhaustive_scan_small() {
        let f = gf(2, 2);
        let s = scan_pairs(&f, 2, ObstructionKind::Cloning).unwrap();
        assert_eq!(s.pairs, 256);
        assert_eq!(s.rule_violations, 0);
        assert_eq!(s.entrywise_disagreements, 0);
        // 16 + 16 - 1 pairs with a zero vector
        assert_eq!(s.counts["ZeroState"], 31);
        // 5 rays x 3 x 3 ordered nonzero pairs per ray
        assert_eq!(s.counts["SameRayChar2"], 45);
    }
}
