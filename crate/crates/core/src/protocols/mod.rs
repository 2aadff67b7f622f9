//! Bell states, modal measurement, teleportation and super-dense coding.
//!
//! States are unnormalized. Multi-qubit basis states are ordered with the
//! leftmost factor most significant, so |abc⟩ has index 4a + 2b + c and the
//! anti-diagonal permutation is exactly index reversal.

mod sdc;
mod teleport;
mod transcript;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use sdc::{sdc_alphabet, sdc_decode, sdc_encode, sdc_gate, sdc_run, SdcMessage, SdcTranscript};
pub use teleport::{
    teleport, teleport_all_branches, teleport_branch, teleport_char2, teleport_char2_all_branches,
    teleport_char2_branch, teleport_char2_identity_holds, verify_bell_change_of_basis,
};
pub use transcript::{LabeledTerm, ProtocolTranscript, TranscriptJson, BRANCH_RULE};

use crate::error::{Error, Result};
use crate::galois::FieldSpec;
use crate::hermitian::{FieldMatrix, FieldVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BellLabel {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellLabel {
    pub fn name(self) -> &'static str {
        match self {
            BellLabel::PhiPlus => "phi+",
            BellLabel::PhiMinus => "phi-",
            BellLabel::PsiPlus => "psi+",
            BellLabel::PsiMinus => "psi-",
        }
    }

    /// Two classical bits naming the branch; matches the super-dense coding
    /// message whose gate produces this Bell vector.
    pub fn bits(self) -> &'static str {
        match self {
            BellLabel::PhiPlus => "00",
            BellLabel::PhiMinus => "10",
            BellLabel::PsiPlus => "01",
            BellLabel::PsiMinus => "11",
        }
    }

    /// Vector in the |00⟩,|01⟩,|10⟩,|11⟩ basis.
    pub fn vector(self, spec: &Arc<FieldSpec>) -> FieldVector {
        let coords: [i64; 4] = match self {
            BellLabel::PhiPlus => [1, 0, 0, 1],
            BellLabel::PhiMinus => [1, 0, 0, -1],
            BellLabel::PsiPlus => [0, 1, 1, 0],
            BellLabel::PsiMinus => [0, 1, -1, 0],
        };
        FieldVector::from_ints(spec, &coords)
    }
}

/// The Bell basis available in a field: four vectors, or in characteristic
/// 2 the two survivors φ⁺, ψ⁺ spanning the Bell plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellBasis {
    pub labels: Vec<BellLabel>,
    pub vectors: Vec<FieldVector>,
}

pub fn bell_basis(spec: &Arc<FieldSpec>) -> BellBasis {
    let labels = if spec.characteristic() == 2 {
        vec![BellLabel::PhiPlus, BellLabel::PsiPlus]
    } else {
        vec![BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus, BellLabel::PsiMinus]
    };
    let vectors = labels.iter().map(|l| l.vector(spec)).collect();
    BellBasis { labels, vectors }
}

/// |00⟩ + |11⟩, without the 1/√2.
pub fn bell_state(spec: &Arc<FieldSpec>) -> FieldVector {
    BellLabel::PhiPlus.vector(spec)
}

/// Single-qubit and register gates.
pub mod gates {
    use super::*;

    pub fn id2(spec: &Arc<FieldSpec>) -> FieldMatrix {
        FieldMatrix::identity(spec, 2)
    }

    pub fn x(spec: &Arc<FieldSpec>) -> FieldMatrix {
        FieldMatrix::from_int_rows(spec, &[&[0, 1], &[1, 0]]).expect("2x2")
    }

    pub fn z(spec: &Arc<FieldSpec>) -> FieldMatrix {
        FieldMatrix::from_int_rows(spec, &[&[1, 0], &[0, -1]]).expect("2x2")
    }

    /// Z·X: X first, then Z.
    pub fn zx(spec: &Arc<FieldSpec>) -> FieldMatrix {
        z(spec).mul(&x(spec)).expect("2x2")
    }

    /// 8x8 anti-diagonal permutation I⁻.
    pub fn anti_diagonal8(spec: &Arc<FieldSpec>) -> FieldMatrix {
        FieldMatrix::anti_diagonal(spec, 8)
    }
}

/// Components c_b with state = Σ_b basis_b ⊗ c_b. The basis vectors act on
/// the leading factor; the trailing factor has length
/// `state.len() / basis_len`.
pub fn decompose_in_basis(state: &FieldVector, basis: &[FieldVector]) -> Result<Vec<FieldVector>> {
    let first = basis.first().ok_or_else(|| Error::InvalidArgument("empty measurement basis".into()))?;
    let lead = first.len();
    if state.len() % lead != 0 {
        return Err(Error::DimensionMismatch { expected: lead, found: state.len() });
    }
    let trail = state.len() / lead;
    let b = FieldMatrix::from_columns(basis)?;
    if b.rank() != basis.len() {
        return Err(Error::DependentBasis);
    }
    // Reshape the state to a lead x trail matrix and solve B C = S.
    let spec = state.spec();
    let rows: Vec<Vec<_>> = (0..lead).map(|r| (0..trail).map(|c| state.get(r * trail + c)).collect()).collect();
    let s = FieldMatrix::from_rows(spec, &rows)?;
    let c = b.solve(&s)?.ok_or(Error::NotInSpan)?;
    Ok((0..basis.len()).map(|i| c.row(i)).collect())
}

/// Indices of basis vectors whose component is nonzero.
pub fn all_branches(state: &FieldVector, basis: &[FieldVector]) -> Result<Vec<usize>> {
    let comps = decompose_in_basis(state, basis)?;
    Ok(comps.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeasurementOutcome {
    pub branch: usize,
    pub possible: Vec<usize>,
    /// Branch index in binary, width ceil(log2(basis size)).
    pub bits: String,
}

pub(crate) fn pick_branch(possible: &[usize], seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    possible[rng.gen_range(0..possible.len())]
}

/// Modal measurement: any branch with a nonzero component is possible, and
/// one of them is picked uniformly with the seeded generator.
pub fn measure_modal(state: &FieldVector, basis: &[FieldVector], seed: u64) -> Result<MeasurementOutcome> {
    let possible = all_branches(state, basis)?;
    if possible.is_empty() {
        return Err(Error::ZeroState);
    }
    let branch = pick_branch(&possible, seed);
    let width = (usize::BITS - (basis.len() - 1).leading_zeros()).max(1) as usize;
    Ok(MeasurementOutcome { branch, possible, bits: format!("{branch:0width$b}") })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;
    use crate::hermitian::{is_unitary, rank_of, standard_form};

    #[test]
    fn bell_state_coordinates() {
        for (p, k) in [(2, 2), (3, 2)] {
            let f = build_field(p, k, None).unwrap();
            let b = bell_state(&f);
            assert_eq!(b, FieldVector::from_ints(&f, &[1, 0, 0, 1]));
            let form = standard_form(&f, 4).unwrap();
            assert_eq!(form.evaluate(&b, &b).unwrap(), f.from_int(2));
        }
    }

    #[test]
    fn bell_basis_shape() {
        let g9 = build_field(3, 2, None).unwrap();
        let b = bell_basis(&g9);
        assert_eq!(rank_of(&b.vectors), 4);
        let form = standard_form(&g9, 4).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert!(form.evaluate(&b.vectors[i], &b.vectors[j]).unwrap().is_zero());
                }
            }
        }
        let g4 = build_field(2, 2, None).unwrap();
        assert_eq!(BellLabel::PhiPlus.vector(&g4), BellLabel::PhiMinus.vector(&g4));
        assert_eq!(BellLabel::PsiPlus.vector(&g4), BellLabel::PsiMinus.vector(&g4));
        assert_eq!(rank_of(&bell_basis(&g4).vectors), 2);
    }

    #[test]
    fn gates_are_unitary() {
        for (p, k) in [(2, 2), (3, 2)] {
            let f = build_field(p, k, None).unwrap();
            let f2 = standard_form(&f, 2).unwrap();
            for g in [gates::id2(&f), gates::x(&f), gates::z(&f), gates::zx(&f)] {
                assert!(is_unitary(&g, &f2).unwrap());
            }
            assert!(is_unitary(&gates::anti_diagonal8(&f), &standard_form(&f, 8).unwrap()).unwrap());
        }
    }

    #[test]
    fn measurement_of_a_basis_vector_is_certain() {
        let f = build_field(3, 2, None).unwrap();
        let basis = bell_basis(&f);
        let out = measure_modal(&basis.vectors[0], &basis.vectors, 99).unwrap();
        assert_eq!(out.possible, vec![0]);
        assert_eq!(out.branch, 0);
        assert_eq!(out.bits, "00");
    }

    #[test]
    fn char2_measurement_has_two_branches() {
        let f = build_field(2, 2, None).unwrap();
        let basis = bell_basis(&f);
        assert_eq!(basis.vectors.len(), 2);
        let state = basis.vectors[0].add(&basis.vectors[1]).unwrap();
        assert_eq!(all_branches(&state, &basis.vectors).unwrap(), vec![0, 1]);
        let off_plane = FieldVector::from_ints(&f, &[1, 0, 0, 0]);
        assert_eq!(all_branches(&off_plane, &basis.vectors).unwrap_err(), Error::NotInSpan);
    }
}
