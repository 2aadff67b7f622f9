//! Point transport through the quantum kernel.
//!
//! A non-self-orthogonal state x is replaced by three kernel points: the
//! meets of three agreed, pairwise disjoint kernel lines with the Hermitian
//! curve π(x) ∩ kernel, moved by a shared unitary η. The receiver undoes η,
//! spans the plane Π through the three points and recovers x = π(Π).

mod batch;
mod wire;

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use batch::{geo_roundtrip_batch, random_states, DegenerateWitness, RoundtripFailure, RoundtripReport};
pub use wire::{ciphertext_bits, geo_transmit, Bitstream, TransmitReport, BIT_LAYOUT};

use crate::error::{Error, Result};
use crate::galois::same_field;
use crate::hermitian::{random_unitary, rank_of, require_unitary, FieldMatrix, FieldVector};
use crate::kernelgeo::{hermitian_curve, polar_of_subspace, unique_meet, KernelGeometry, ProjectivePoint};

/// Attempts at reshuffling before line agreement gives up.
const AGREEMENT_ATTEMPTS: usize = 64;

/// Shared secret of sender and receiver.
#[derive(Clone)]
pub struct GeoParams {
    geom: Arc<KernelGeometry>,
    lines: [usize; 3],
    eta: FieldMatrix,
    eta_inv: FieldMatrix,
    seed: Option<u64>,
}

impl GeoParams {
    /// Checks that the lines are pairwise disjoint and η is unitary.
    pub fn new(geom: Arc<KernelGeometry>, lines: [usize; 3], eta: FieldMatrix, seed: Option<u64>) -> Result<Self> {
        for &l in &lines {
            if l >= geom.lines().len() {
                return Err(Error::InvalidArgument(format!("no line with index {l}")));
            }
        }
        for i in 0..3 {
            for j in i + 1..3 {
                if !lines_disjoint(&geom, lines[i], lines[j]) {
                    return Err(Error::InvalidArgument(format!(
                        "lines {} and {} are not disjoint",
                        lines[i], lines[j]
                    )));
                }
            }
        }
        require_unitary(&eta, geom.form())?;
        let eta_inv = eta.inverse()?;
        Ok(GeoParams { geom, lines, eta, eta_inv, seed })
    }

    pub fn geom(&self) -> &Arc<KernelGeometry> {
        &self.geom
    }

    pub fn lines(&self) -> [usize; 3] {
        self.lines
    }

    pub fn eta(&self) -> &FieldMatrix {
        &self.eta
    }

    pub fn eta_inv(&self) -> &FieldMatrix {
        &self.eta_inv
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn summary(&self) -> ParamsSummary {
        ParamsSummary {
            seed: self.seed,
            lines: self.lines,
            line_points: self.lines.map(|l| self.geom.line(l).to_vec()),
            eta: self.eta.to_json().iter().map(|row| row.iter().map(|e| e.coeffs.clone()).collect()).collect(),
        }
    }
}

impl std::fmt::Debug for GeoParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GeoParams").field("lines", &self.lines).field("seed", &self.seed).finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamsSummary {
    pub seed: Option<u64>,
    pub lines: [usize; 3],
    pub line_points: [Vec<usize>; 3],
    /// Rows of η, each entry as its coefficient list.
    pub eta: Vec<Vec<Vec<u32>>>,
}

fn lines_disjoint(geom: &KernelGeometry, a: usize, b: usize) -> bool {
    a != b && !geom.line(a).iter().any(|p| geom.line(b).contains(p))
}

/// Seeded greedy choice of three pairwise disjoint lines, plus η from the
/// unitary sampler.
pub fn agree_parameters(geom: Arc<KernelGeometry>, seed: u64) -> Result<GeoParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..geom.lines().len()).collect();
    let mut chosen = None;
    for _ in 0..AGREEMENT_ATTEMPTS {
        order.shuffle(&mut rng);
        let mut picked: Vec<usize> = Vec::with_capacity(3);
        for &l in &order {
            if picked.iter().all(|&m| lines_disjoint(&geom, l, m)) {
                picked.push(l);
                if picked.len() == 3 {
                    break;
                }
            }
        }
        if picked.len() == 3 {
            chosen = Some([picked[0], picked[1], picked[2]]);
            break;
        }
    }
    let lines = chosen.ok_or_else(|| Error::ExhaustedSearch("no three pairwise disjoint kernel lines".into()))?;
    let eta = random_unitary(geom.form(), seed);
    GeoParams::new(geom, lines, eta, Some(seed))
}

/// Three kernel points sent in place of the state.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeoCiphertext {
    pub points: Vec<ProjectivePoint>,
}

impl GeoCiphertext {
    pub fn bitstream(&self) -> Result<Bitstream> {
        Bitstream::from_points(&self.points)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.points.iter().map(|p| p.coords().to_strings()).collect()
    }
}

/// Everything geo_encode computed on the way to the ciphertext.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodeTrace {
    pub x: ProjectivePoint,
    pub curve_size: usize,
    /// Point indices of the meets of U, V, W with the curve.
    pub meets: [usize; 3],
    pub span_rank: usize,
    /// ⟨x,x⟩ ≠ 0 while every meet is self-orthogonal, so no unitary maps x
    /// onto any of them; the crossing into the kernel is geometric.
    pub no_unitary_transport: bool,
    pub ciphertext: Option<GeoCiphertext>,
}

fn check_state(state: &FieldVector, params: &GeoParams) -> Result<ProjectivePoint> {
    let form = params.geom.form();
    if state.len() != form.dim() {
        return Err(Error::DimensionMismatch { expected: form.dim(), found: state.len() });
    }
    if !same_field(state.spec(), form.spec()) {
        return Err(Error::FieldMismatch);
    }
    let x = ProjectivePoint::from_vector(state)?;
    if form.is_self_orthogonal(state)? {
        return Err(Error::SelfOrthogonalState);
    }
    Ok(x)
}

/// Runs the encoder and keeps intermediate data. The ciphertext is absent
/// when the three meets do not span a plane.
pub fn geo_encode_trace(state: &FieldVector, params: &GeoParams) -> Result<EncodeTrace> {
    let x = check_state(state, params)?;
    let geom = &params.geom;
    let curve = hermitian_curve(&x, geom)?;
    let mut meets = [0usize; 3];
    for (slot, &line) in meets.iter_mut().zip(&params.lines) {
        *slot = unique_meet(geom, line, &curve)?;
    }
    let vectors: Vec<FieldVector> = meets.iter().map(|&i| geom.point(i).coords().clone()).collect();
    let span_rank = rank_of(&vectors);
    let form = geom.form();
    let x_value = form.evaluate(x.coords(), x.coords())?;
    let no_unitary_transport = !x_value.is_zero()
        && vectors.iter().all(|v| form.is_self_orthogonal(v).unwrap_or(false));
    let ciphertext = if span_rank == 3 {
        let points = vectors
            .iter()
            .map(|v| ProjectivePoint::from_vector(&params.eta.apply(v)?))
            .collect::<Result<Vec<_>>>()?;
        Some(GeoCiphertext { points })
    } else {
        None
    };
    Ok(EncodeTrace { x, curve_size: curve.len(), meets, span_rank, no_unitary_transport, ciphertext })
}

pub fn geo_encode(state: &FieldVector, params: &GeoParams) -> Result<GeoCiphertext> {
    let trace = geo_encode_trace(state, params)?;
    trace.ciphertext.ok_or(Error::DegenerateSpan { rank: trace.span_rank })
}

pub fn geo_decode(ct: &GeoCiphertext, params: &GeoParams) -> Result<ProjectivePoint> {
    let form = params.geom.form();
    if ct.points.len() != 3 {
        return Err(Error::InvalidArgument(format!("ciphertext needs 3 points, got {}", ct.points.len())));
    }
    let mut vectors = Vec::with_capacity(3);
    for p in &ct.points {
        if p.dim() != form.dim() {
            return Err(Error::DimensionMismatch { expected: form.dim(), found: p.dim() });
        }
        if !same_field(p.coords().spec(), form.spec()) {
            return Err(Error::FieldMismatch);
        }
        if !form.is_self_orthogonal(p.coords())? {
            return Err(Error::NotKernelPoint);
        }
        vectors.push(params.eta_inv.apply(p.coords())?);
    }
    let rank = rank_of(&vectors);
    if rank != 3 {
        return Err(Error::DegenerateSpan { rank });
    }
    let polar = polar_of_subspace(&vectors, form)?;
    match polar.as_slice() {
        [x] => ProjectivePoint::from_vector(x),
        _ => Err(Error::DegenerateSpan { rank: form.dim() - polar.len() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;
    use crate::hermitian::standard_form;
    use crate::kernelgeo::enumerate_kernel;

    fn geom_q2() -> Arc<KernelGeometry> {
        let f = build_field(2, 2, None).unwrap();
        Arc::new(enumerate_kernel(&standard_form(&f, 4).unwrap(), Default::default()).unwrap())
    }

    #[test]
    fn agreement_is_deterministic_and_disjoint() {
        let g = geom_q2();
        let a = agree_parameters(g.clone(), 7).unwrap();
        let b = agree_parameters(g.clone(), 7).unwrap();
        assert_eq!(a.lines(), b.lines());
        assert_eq!(a.eta(), b.eta());
        let l = a.lines();
        for i in 0..3 {
            for j in i + 1..3 {
                assert!(g.line(l[i]).iter().all(|p| !g.line(l[j]).contains(p)));
            }
        }
        assert!(a.eta().mul(a.eta_inv()).unwrap().is_identity());
    }

    #[test]
    fn meeting_lines_rejected() {
        let g = geom_q2();
        let through0 = g.lines_through(0);
        let far = (0..g.lines().len()).find(|&l| lines_disjoint(&g, l, through0[0]) && lines_disjoint(&g, l, through0[1]));
        let id = FieldMatrix::identity(g.form().spec(), 4);
        let err = GeoParams::new(g.clone(), [through0[0], through0[1], far.unwrap()], id, None).unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(_)));
    }

    #[test]
    fn identity_eta_example() {
        let g = geom_q2();
        let f = g.form().spec().clone();
        let seeded = agree_parameters(g.clone(), 7).unwrap();
        let params = GeoParams::new(g.clone(), seeded.lines(), FieldMatrix::identity(&f, 4), None).unwrap();
        let state = FieldVector::from_ints(&f, &[1, 0, 0, 0]);
        let trace = geo_encode_trace(&state, &params).unwrap();
        assert_eq!(trace.curve_size, 9);
        assert!(trace.no_unitary_transport);
        let ct = trace.ciphertext.clone().unwrap();
        for (p, &m) in ct.points.iter().zip(&trace.meets) {
            assert_eq!(p, g.point(m));
        }
        assert_eq!(geo_decode(&ct, &params).unwrap(), ProjectivePoint::from_vector(&state).unwrap());
    }

    #[test]
    fn errors() {
        let g = geom_q2();
        let f = g.form().spec().clone();
        let params = agree_parameters(g, 3).unwrap();
        let iso = FieldVector::from_ints(&f, &[1, 1, 0, 0]);
        assert_eq!(geo_encode(&iso, &params).unwrap_err(), Error::SelfOrthogonalState);
        let state = FieldVector::from_ints(&f, &[1, 0, 0, 0]);
        let mut ct = match geo_encode(&state, &params) {
            Ok(ct) => ct,
            Err(Error::DegenerateSpan { .. }) => return,
            Err(e) => panic!("{e}"),
        };
        ct.points[0] = ProjectivePoint::from_vector(&state).unwrap();
        assert_eq!(geo_decode(&ct, &params).unwrap_err(), Error::NotKernelPoint);
    }
}
