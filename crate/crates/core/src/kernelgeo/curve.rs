use serde::Serialize;

use super::{KernelGeometry, ProjectivePoint};
use crate::error::{Error, Result};

/// Kernel points in the polar plane of a non-self-orthogonal point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HermitianCurve {
    /// Indices into the geometry's point list, ascending.
    pub points: Vec<usize>,
}

impl HermitianCurve {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: usize) -> bool {
        self.points.binary_search(&point).is_ok()
    }
}

/// π(x) ∩ kernel. Has q^3 + 1 points in H(3,q^2).
pub fn hermitian_curve(x: &ProjectivePoint, geom: &KernelGeometry) -> Result<HermitianCurve> {
    let form = geom.form();
    if x.dim() != form.dim() {
        return Err(Error::DimensionMismatch { expected: form.dim(), found: x.dim() });
    }
    let xr = x.coords().raw();
    if form.evaluate_raw(xr, xr) == 0 {
        return Err(Error::SelfOrthogonalInput);
    }
    let points = (0..geom.points().len())
        .filter(|&i| form.evaluate_raw(xr, geom.point(i).coords().raw()) == 0)
        .collect();
    Ok(HermitianCurve { points })
}

/// The single point shared by a kernel line and a Hermitian curve.
pub fn unique_meet(geom: &KernelGeometry, line: usize, curve: &HermitianCurve) -> Result<usize> {
    let members = geom
        .lines()
        .get(line)
        .ok_or_else(|| Error::InvalidArgument(format!("no line with index {line}")))?;
    let common: Vec<usize> = members.iter().copied().filter(|&p| curve.contains(p)).collect();
    match common.as_slice() {
        [p] => Ok(*p),
        _ => Err(Error::NotUnique { count: common.len() }),
    }
}
