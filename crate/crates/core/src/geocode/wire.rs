use std::sync::Arc;

use serde::Serialize;

use super::GeoCiphertext;
use crate::error::{Error, Result};
use crate::galois::FieldSpec;
use crate::hermitian::FieldVector;
use crate::kernelgeo::ProjectivePoint;
use crate::protocols::{sdc_decode, sdc_encode, SdcMessage};

/// Serialization layout identifier, recorded in every report that carries a
/// bitstream.
pub const BIT_LAYOUT: &str = "gqt-bits/1: points in order, coordinates in order, \
coefficients c0..c(k-1), each ceil(log2 p) bits most significant first; \
points normalized so the leftmost nonzero coordinate is 1; hex packs bits \
most significant first with zero padding";

fn coeff_width(spec: &FieldSpec) -> usize {
    (u32::BITS - (spec.p() - 1).leading_zeros()) as usize
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bitstream {
    pub bits: Vec<bool>,
}

impl Bitstream {
    pub fn from_points(points: &[ProjectivePoint]) -> Result<Self> {
        let first = points.first().ok_or_else(|| Error::MalformedBitstream("empty ciphertext".into()))?;
        let spec = first.coords().spec();
        let w = coeff_width(spec);
        let mut bits = Vec::new();
        for p in points {
            for e in p.coords().entries() {
                for c in e.coeffs() {
                    bits.extend((0..w).rev().map(|i| (c >> i) & 1 == 1));
                }
            }
        }
        Ok(Bitstream { bits })
    }

    /// Parses canonical points of length `dim`.
    pub fn to_points(&self, spec: &Arc<FieldSpec>, dim: usize) -> Result<Vec<ProjectivePoint>> {
        let w = coeff_width(spec);
        let k = spec.k() as usize;
        let per_point = dim * k * w;
        if self.bits.is_empty() || per_point == 0 || self.bits.len() % per_point != 0 {
            return Err(Error::MalformedBitstream(format!(
                "{} bits is not a positive multiple of {per_point}",
                self.bits.len()
            )));
        }
        self.bits
            .chunks(per_point)
            .map(|chunk| {
                let entries = chunk
                    .chunks(k * w)
                    .map(|elem| {
                        let coeffs: Vec<u32> =
                            elem.chunks(w).map(|c| c.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32)).collect();
                        if coeffs.iter().any(|&c| c >= spec.p()) {
                            return Err(Error::MalformedBitstream(format!("coefficient out of range in {coeffs:?}")));
                        }
                        spec.from_coeffs(&coeffs)
                    })
                    .collect::<Result<Vec<_>>>()?;
                let v = FieldVector::new(spec, &entries)?;
                let point = ProjectivePoint::from_vector(&v)
                    .map_err(|_| Error::MalformedBitstream("zero point".into()))?;
                if point.coords() != &v {
                    return Err(Error::MalformedBitstream(format!("point {v} is not normalized")));
                }
                Ok(point)
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn to_hex(&self) -> String {
        let bytes: Vec<u8> = self
            .bits
            .chunks(8)
            .map(|c| c.iter().enumerate().fold(0u8, |acc, (i, &b)| acc | ((b as u8) << (7 - i))))
            .collect();
        hex::encode(bytes)
    }

    pub fn from_hex(text: &str, bit_len: usize) -> Result<Self> {
        let bytes = hex::decode(text.trim()).map_err(|e| Error::MalformedBitstream(e.to_string()))?;
        if bytes.len() != bit_len.div_ceil(8) {
            return Err(Error::MalformedBitstream(format!(
                "{} bytes cannot hold exactly {bit_len} bits",
                bytes.len()
            )));
        }
        let all: Vec<bool> = bytes.iter().flat_map(|b| (0..8).rev().map(move |i| (b >> i) & 1 == 1)).collect();
        if all[bit_len..].iter().any(|&b| b) {
            return Err(Error::MalformedBitstream("nonzero padding bits".into()));
        }
        Ok(Bitstream { bits: all[..bit_len].to_vec() })
    }

    pub fn to_string_bits(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

/// Bit length of a ciphertext of `points` points.
pub fn ciphertext_bits(spec: &FieldSpec, dim: usize, points: usize) -> usize {
    points * dim * spec.k() as usize * coeff_width(spec)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransmitReport {
    pub layout: &'static str,
    pub bit_len: usize,
    pub hex: String,
    /// 4 messages per use, or 2 in characteristic 2.
    pub alphabet_size: usize,
    pub sdc_uses: usize,
    pub received: Vec<Vec<String>>,
    pub identical: bool,
}

/// Sends a ciphertext bit-by-chunk through super-dense coding and parses
/// what arrives. Characteristic 2 carries one bit per use, as message "0b".
pub fn geo_transmit(ct: &GeoCiphertext, spec: &Arc<FieldSpec>) -> Result<(GeoCiphertext, TransmitReport)> {
    let sent = ct.bitstream()?;
    let dim = ct.points[0].dim();
    let char2 = spec.characteristic() == 2;
    let chunk = if char2 { 1 } else { 2 };
    let mut received_bits = Vec::with_capacity(sent.len() + 1);
    let mut uses = 0;
    for c in sent.bits.chunks(chunk) {
        let msg = if char2 {
            SdcMessage { bits: [false, c[0]] }
        } else {
            SdcMessage { bits: [c[0], c.get(1).copied().unwrap_or(false)] }
        };
        let got = sdc_decode(&sdc_encode(msg, spec)?, spec)?;
        uses += 1;
        if char2 {
            received_bits.push(got.bits[1]);
        } else {
            received_bits.extend_from_slice(&got.bits);
        }
    }
    received_bits.truncate(sent.len());
    let received = GeoCiphertext { points: Bitstream { bits: received_bits }.to_points(spec, dim)? };
    let report = TransmitReport {
        layout: BIT_LAYOUT,
        bit_len: sent.len(),
        hex: sent.to_hex(),
        alphabet_size: if char2 { 2 } else { 4 },
        sdc_uses: uses,
        received: received.to_strings(),
        identical: &received == ct,
    };
    Ok((received, report))
}
