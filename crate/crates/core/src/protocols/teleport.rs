use std::sync::Arc;

use super::{bell_basis, bell_state, decompose_in_basis, gates, pick_branch, BellLabel, ProtocolTranscript};
use crate::error::{Error, Result};
use crate::galois::{same_field, FieldElement, FieldSpec};
use crate::hermitian::{FieldMatrix, FieldVector};

fn qubit(alpha: &FieldElement, beta: &FieldElement) -> Result<FieldVector> {
    if !same_field(alpha.spec(), beta.spec()) {
        return Err(Error::FieldMismatch);
    }
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::ZeroState);
    }
    FieldVector::new(alpha.spec(), &[alpha.clone(), beta.clone()])
}

fn correction(label: BellLabel, spec: &Arc<FieldSpec>) -> (&'static str, FieldMatrix) {
    match label {
        BellLabel::PhiPlus => ("id", gates::id2(spec)),
        BellLabel::PhiMinus => ("Z", gates::z(spec)),
        BellLabel::PsiPlus => ("X", gates::x(spec)),
        BellLabel::PsiMinus => ("ZX", gates::zx(spec)),
    }
}

enum Choice {
    Seeded(u64),
    Fixed(usize),
}

/// |00⟩ = ½(φ⁺+φ⁻), |11⟩ = ½(φ⁺−φ⁻), |01⟩ = ½(ψ⁺+ψ⁻), |10⟩ = ½(ψ⁺−ψ⁻).
pub fn verify_bell_change_of_basis(spec: &Arc<FieldSpec>) -> Result<bool> {
    if spec.characteristic() == 2 {
        return Err(Error::Char2NotSupported);
    }
    let half = spec.from_int(2).inv()?;
    let [pp, pm, sp, sm] = [BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus, BellLabel::PsiMinus]
        .map(|l| l.vector(spec));
    let checks = [
        (0, pp.add(&pm)?),
        (3, pp.sub(&pm)?),
        (1, sp.add(&sm)?),
        (2, sp.sub(&sm)?),
    ];
    Ok(checks.iter().all(|(i, v)| v.scale(&half) == FieldVector::basis(spec, 4, *i)))
}

fn run_teleport(alpha: &FieldElement, beta: &FieldElement, choice: Choice) -> Result<ProtocolTranscript> {
    let phi = qubit(alpha, beta)?;
    let spec = phi.spec().clone();
    if spec.characteristic() == 2 {
        return Err(Error::Char2NotSupported);
    }
    let state = phi.tensor(&bell_state(&spec))?;
    let basis = bell_basis(&spec);
    let comps = decompose_in_basis(&state, &basis.vectors)?;
    let possible: Vec<usize> = (0..comps.len()).filter(|&i| !comps[i].is_zero()).collect();
    let (branch, seed) = select(&possible, choice)?;
    let label = basis.labels[branch];
    // The Bell expansion carries a factor 1/2 on every block; Bob's qubit is
    // the block without it.
    let pre = comps[branch].scale(&spec.from_int(2));
    let (corr, gate) = correction(label, &spec);
    let fin = gate.apply(&pre)?;
    Ok(ProtocolTranscript {
        protocol: "teleport",
        alpha: alpha.clone(),
        beta: beta.clone(),
        seed,
        states: vec![("input".into(), phi), ("shared".into(), bell_state(&spec)), ("joint".into(), state)],
        basis_labels: basis.labels.iter().map(|l| l.name()).collect(),
        possible_branches: possible,
        branch,
        classical_message: label.bits().to_string(),
        pre_correction: pre,
        correction: corr,
        final_state: fin,
        expansion_factor: "1/2",
        identity_check: Some(("bell_change_of_basis", verify_bell_change_of_basis(&spec)?)),
    })
}

fn select(possible: &[usize], choice: Choice) -> Result<(usize, Option<u64>)> {
    match choice {
        Choice::Seeded(seed) => Ok((pick_branch(possible, seed), Some(seed))),
        Choice::Fixed(b) if possible.contains(&b) => Ok((b, None)),
        Choice::Fixed(b) => Err(Error::InvalidArgument(format!("branch {b} is not possible for this state"))),
    }
}

pub fn teleport(alpha: &FieldElement, beta: &FieldElement, seed: u64) -> Result<ProtocolTranscript> {
    run_teleport(alpha, beta, Choice::Seeded(seed))
}

/// Runs a specific branch (index into the Bell basis).
pub fn teleport_branch(alpha: &FieldElement, beta: &FieldElement, branch: usize) -> Result<ProtocolTranscript> {
    run_teleport(alpha, beta, Choice::Fixed(branch))
}

pub fn teleport_all_branches(alpha: &FieldElement, beta: &FieldElement) -> Result<Vec<ProtocolTranscript>> {
    (0..4).map(|b| teleport_branch(alpha, beta, b)).collect()
}

fn char2_states(phi: &FieldVector) -> Result<(FieldVector, FieldVector)> {
    let spec = phi.spec();
    let shared = bell_state(spec);
    let shared_tilde = BellLabel::PsiPlus.vector(spec);
    let lhs = phi
        .tensor(&shared)?
        .add(&gates::anti_diagonal8(spec).apply(&phi.tensor(&shared_tilde)?)?)?;
    let flipped = FieldVector::new(spec, &[phi.get(1), phi.get(0)])?;
    let rhs = BellLabel::PhiPlus
        .vector(spec)
        .tensor(phi)?
        .add(&BellLabel::PsiPlus.vector(spec).tensor(&flipped)?)?;
    Ok((lhs, rhs))
}

/// φ_A⊗B + I⁻(φ_A⊗B̃) = φ⁺⊗(α|0⟩+β|1⟩) + ψ⁺⊗(α|1⟩+β|0⟩), coefficient-wise.
pub fn teleport_char2_identity_holds(alpha: &FieldElement, beta: &FieldElement) -> Result<bool> {
    if !same_field(alpha.spec(), beta.spec()) {
        return Err(Error::FieldMismatch);
    }
    if alpha.spec().characteristic() != 2 {
        return Err(Error::NotChar2);
    }
    let phi = FieldVector::new(alpha.spec(), &[alpha.clone(), beta.clone()])?;
    let (lhs, rhs) = char2_states(&phi)?;
    Ok(lhs == rhs)
}

fn run_teleport_char2(alpha: &FieldElement, beta: &FieldElement, choice: Choice) -> Result<ProtocolTranscript> {
    if same_field(alpha.spec(), beta.spec()) && alpha.spec().characteristic() != 2 {
        return Err(Error::NotChar2);
    }
    let phi = qubit(alpha, beta)?;
    let spec = phi.spec().clone();
    let (state, expected) = char2_states(&phi)?;
    let identity = state == expected;
    assert!(identity, "char-2 teleportation identity failed");
    let basis = bell_basis(&spec);
    let comps = decompose_in_basis(&state, &basis.vectors)?;
    let possible: Vec<usize> = (0..comps.len()).filter(|&i| !comps[i].is_zero()).collect();
    let (branch, seed) = select(&possible, choice)?;
    let label = basis.labels[branch];
    let pre = comps[branch].clone();
    let (corr, gate) = correction(label, &spec);
    let fin = gate.apply(&pre)?;
    Ok(ProtocolTranscript {
        protocol: "teleport_char2",
        alpha: alpha.clone(),
        beta: beta.clone(),
        seed,
        states: vec![
            ("input".into(), phi),
            ("shared".into(), bell_state(&spec)),
            ("shared_tilde".into(), BellLabel::PsiPlus.vector(&spec)),
            ("joint".into(), state),
        ],
        basis_labels: basis.labels.iter().map(|l| l.name()).collect(),
        possible_branches: possible,
        branch,
        classical_message: if label == BellLabel::PhiPlus { "0" } else { "1" }.to_string(),
        pre_correction: pre,
        correction: corr,
        final_state: fin,
        expansion_factor: "1",
        identity_check: Some(("char2_bell_plane_expansion", identity)),
    })
}

pub fn teleport_char2(alpha: &FieldElement, beta: &FieldElement, seed: u64) -> Result<ProtocolTranscript> {
    run_teleport_char2(alpha, beta, Choice::Seeded(seed))
}

/// Branch 0 is φ⁺, branch 1 is ψ⁺.
pub fn teleport_char2_branch(alpha: &FieldElement, beta: &FieldElement, branch: usize) -> Result<ProtocolTranscript> {
    run_teleport_char2(alpha, beta, Choice::Fixed(branch))
}

pub fn teleport_char2_all_branches(alpha: &FieldElement, beta: &FieldElement) -> Result<Vec<ProtocolTranscript>> {
    (0..2).map(|b| teleport_char2_branch(alpha, beta, b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;

    #[test]
    fn gf9_psi_minus_example() {
        let f = build_field(3, 2, None).unwrap();
        let t = teleport_branch(&f.from_int(1), &f.from_int(2), 3).unwrap();
        assert_eq!(t.branch_label(), "psi-");
        assert_eq!(t.pre_correction, FieldVector::from_ints(&f, &[-2, 1]));
        assert_eq!(t.pre_correction, FieldVector::from_ints(&f, &[1, 1]));
        assert_eq!(t.correction, "ZX");
        assert_eq!(t.final_state, FieldVector::from_ints(&f, &[1, 2]));
        assert_eq!(t.possible_branches, vec![0, 1, 2, 3]);
        assert_eq!(t.classical_message, "11");
    }

    #[test]
    fn gf9_exhaustive() {
        let f = build_field(3, 2, None).unwrap();
        assert!(verify_bell_change_of_basis(&f).unwrap());
        for a in f.elements() {
            for b in f.elements() {
                if a.is_zero() && b.is_zero() {
                    assert_eq!(teleport(&a, &b, 0).unwrap_err(), Error::ZeroState);
                    continue;
                }
                for t in teleport_all_branches(&a, &b).unwrap() {
                    assert!(t.recovered());
                }
            }
        }
    }

    #[test]
    fn gf4_examples() {
        let f = build_field(2, 2, None).unwrap();
        let a = f.parse_element("t").unwrap();
        let b = f.parse_element("t+1").unwrap();
        let t = teleport_char2_branch(&a, &b, 1).unwrap();
        assert_eq!(t.pre_correction, FieldVector::new(&f, &[b.clone(), a.clone()]).unwrap());
        assert_eq!(t.correction, "X");
        assert!(t.recovered());
        for t in teleport_char2_all_branches(&f.zero(), &f.one()).unwrap() {
            assert_eq!(t.final_state, FieldVector::from_ints(&f, &[0, 1]));
        }
        assert_eq!(teleport(&a, &b, 1).unwrap_err(), Error::Char2NotSupported);
        let g9 = build_field(3, 2, None).unwrap();
        assert_eq!(teleport_char2(&g9.one(), &g9.one(), 1).unwrap_err(), Error::NotChar2);
    }

    #[test]
    fn gf4_exhaustive_and_identity() {
        let f = build_field(2, 2, None).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert!(teleport_char2_identity_holds(&a, &b).unwrap());
                if a.is_zero() && b.is_zero() {
                    continue;
                }
                for t in teleport_char2_all_branches(&a, &b).unwrap() {
                    assert!(t.recovered());
                }
            }
        }
    }

    #[test]
    fn replayable() {
        let f = build_field(3, 2, None).unwrap();
        let a = f.parse_element("t+1").unwrap();
        let b = f.from_int(2);
        let x = teleport(&a, &b, 42).unwrap();
        assert_eq!(x, teleport(&a, &b, 42).unwrap());
        let j1 = serde_json::to_string(&x.to_json()).unwrap();
        let j2 = serde_json::to_string(&teleport(&a, &b, 42).unwrap().to_json()).unwrap();
        assert_eq!(j1, j2);
    }
}
