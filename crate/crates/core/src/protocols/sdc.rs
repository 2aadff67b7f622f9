use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use super::{bell_basis, bell_state, gates, BellLabel};
use crate::error::{Error, Result};
use crate::galois::{FieldSpec, FieldSpecJson};
use crate::hermitian::{FieldMatrix, FieldVector};
use super::transcript::{labeled_terms, LabeledTerm};

/// Two classical bits (b0 b1), written as in "01".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SdcMessage {
    pub bits: [bool; 2],
}

impl SdcMessage {
    pub const ALL: [SdcMessage; 4] = [
        SdcMessage { bits: [false, false] },
        SdcMessage { bits: [false, true] },
        SdcMessage { bits: [true, false] },
        SdcMessage { bits: [true, true] },
    ];

    pub fn label(self) -> BellLabel {
        match self.bits {
            [false, false] => BellLabel::PhiPlus,
            [true, false] => BellLabel::PhiMinus,
            [false, true] => BellLabel::PsiPlus,
            [true, true] => BellLabel::PsiMinus,
        }
    }

    fn from_label(label: BellLabel) -> Self {
        *Self::ALL.iter().find(|m| m.label() == label).expect("every label has a message")
    }
}

impl fmt::Display for SdcMessage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.bits[0] as u8, self.bits[1] as u8)
    }
}

impl FromStr for SdcMessage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let b: Vec<char> = s.trim().chars().collect();
        match b.as_slice() {
            [x @ ('0' | '1'), y @ ('0' | '1')] => Ok(SdcMessage { bits: [*x == '1', *y == '1'] }),
            _ => Err(Error::InvalidArgument(format!("message must be two bits, got {s:?}"))),
        }
    }
}

/// Messages that can be sent over the field: all four, or {00, 01} in
/// characteristic 2.
pub fn sdc_alphabet(spec: &Arc<FieldSpec>) -> Vec<SdcMessage> {
    if spec.characteristic() == 2 {
        SdcMessage::ALL[..2].to_vec()
    } else {
        SdcMessage::ALL.to_vec()
    }
}

/// Alice's single-qubit gate for a message.
pub fn sdc_gate(message: SdcMessage, spec: &Arc<FieldSpec>) -> Result<(&'static str, FieldMatrix)> {
    if spec.characteristic() == 2 && message.bits[0] {
        return Err(Error::Char2MessageUnsupported(message.to_string()));
    }
    Ok(match message.label() {
        BellLabel::PhiPlus => ("id", gates::id2(spec)),
        BellLabel::PhiMinus => ("Z", gates::z(spec)),
        BellLabel::PsiPlus => ("X", gates::x(spec)),
        BellLabel::PsiMinus => ("ZX", gates::zx(spec)),
    })
}

pub fn sdc_encode(message: SdcMessage, spec: &Arc<FieldSpec>) -> Result<FieldVector> {
    let (_, gate) = sdc_gate(message, spec)?;
    gate.tensor(&gates::id2(spec))?.apply(&bell_state(spec))
}

pub fn sdc_decode(state: &FieldVector, spec: &Arc<FieldSpec>) -> Result<SdcMessage> {
    if state.len() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: state.len() });
    }
    if state.is_zero() {
        return Err(Error::NotBellRay);
    }
    let basis = bell_basis(spec);
    let hits: Vec<BellLabel> = basis
        .labels
        .iter()
        .zip(&basis.vectors)
        .filter(|(_, v)| v.same_ray(state))
        .map(|(l, _)| *l)
        .collect();
    match hits.as_slice() {
        [l] => Ok(SdcMessage::from_label(*l)),
        _ => Err(Error::NotBellRay),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SdcTranscript {
    pub protocol: &'static str,
    pub field: FieldSpecJson,
    pub message: String,
    pub shared: Vec<LabeledTerm>,
    pub gate: String,
    pub transmitted: Vec<LabeledTerm>,
    pub bell_outcome: &'static str,
    pub decoded: String,
    pub recovered: bool,
}

/// Encode, measure in the Bell basis and decode one message.
pub fn sdc_run(message: SdcMessage, spec: &Arc<FieldSpec>) -> Result<SdcTranscript> {
    let (gate, _) = sdc_gate(message, spec)?;
    let sent = sdc_encode(message, spec)?;
    let decoded = sdc_decode(&sent, spec)?;
    Ok(SdcTranscript {
        protocol: "sdc",
        field: spec.to_json(),
        message: message.to_string(),
        shared: labeled_terms(&bell_state(spec)),
        gate: format!("{gate} (x) id"),
        transmitted: labeled_terms(&sent),
        bell_outcome: decoded.label().name(),
        decoded: decoded.to_string(),
        recovered: decoded == message,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;

    fn m(s: &str) -> SdcMessage {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let g9 = build_field(3, 2, None).unwrap();
        assert_eq!(sdc_encode(m("00"), &g9).unwrap(), FieldVector::from_ints(&g9, &[1, 0, 0, 1]));
        assert_eq!(sdc_encode(m("01"), &g9).unwrap(), FieldVector::from_ints(&g9, &[0, 1, 1, 0]));
        assert_eq!(sdc_encode(m("10"), &g9).unwrap(), FieldVector::from_ints(&g9, &[1, 0, 0, 2]));
        assert_eq!(sdc_encode(m("11"), &g9).unwrap(), FieldVector::from_ints(&g9, &[0, 1, -1, 0]));
        assert_eq!(sdc_decode(&FieldVector::from_ints(&g9, &[0, 1, 1, 0]), &g9).unwrap(), m("01"));
        assert_eq!(sdc_decode(&FieldVector::from_ints(&g9, &[1, 0, 0, -1]), &g9).unwrap(), m("10"));
        assert_eq!(sdc_decode(&FieldVector::from_ints(&g9, &[2, 0, 0, 2]), &g9).unwrap(), m("00"));
        assert_eq!(sdc_decode(&FieldVector::from_ints(&g9, &[1, 1, 0, 0]), &g9).unwrap_err(), Error::NotBellRay);
    }

    #[test]
    fn roundtrip_and_char2() {
        for (p, k) in [(2, 2), (3, 2)] {
            let f = build_field(p, k, None).unwrap();
            for msg in sdc_alphabet(&f) {
                assert_eq!(sdc_decode(&sdc_encode(msg, &f).unwrap(), &f).unwrap(), msg);
                assert!(sdc_run(msg, &f).unwrap().recovered);
            }
        }
        let g4 = build_field(2, 2, None).unwrap();
        assert_eq!(sdc_alphabet(&g4).len(), 2);
        for s in ["10", "11"] {
            assert_eq!(sdc_encode(m(s), &g4).unwrap_err(), Error::Char2MessageUnsupported(s.into()));
        }
        // Z ⊗ id fixes the Bell state in characteristic 2.
        let z = gates::z(&g4).tensor(&gates::id2(&g4)).unwrap();
        assert_eq!(z.apply(&bell_state(&g4)).unwrap(), bell_state(&g4));
    }

    #[test]
    fn parse_messages() {
        assert_eq!(m("10").to_string(), "10");
        assert!("2".parse::<SdcMessage>().is_err());
        assert!("012".parse::<SdcMessage>().is_err());
    }
}
