//! The quantum kernel: self-orthogonal rays of a Hermitian form together
//! with the totally isotropic lines they span.
//!
//! For the standard form on GF(q^2)^4 this is the Hermitian surface
//! H(3,q^2), a generalized quadrangle whose lines carry q^2+1 points and
//! whose points lie on q+1 lines.

mod action;
mod axioms;
mod catalog;
mod curve;
mod enumerate;
mod polarity;

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

pub use action::{apply_operator, unitary_action, KernelAction};
pub use axioms::{verify_one_or_all, OneOrAllReport, OneOrAllViolation, UniqueLineFailure};
pub use catalog::{CatalogHeader, KernelCatalog};
pub use curve::{hermitian_curve, unique_meet, HermitianCurve};
pub use enumerate::{enumerate_kernel, EnumerationOptions, GUARD_MAX_DIM, GUARD_MAX_Q};
pub use polarity::{polar_hyperplane, polar_of_subspace, subspace_contains};

use crate::error::{Error, Result};
use crate::hermitian::{FieldVector, HermitianForm};

/// A ray, stored by its representative with leftmost nonzero coordinate 1.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjectivePoint {
    coords: FieldVector,
}

impl ProjectivePoint {
    pub fn from_vector(v: &FieldVector) -> Result<Self> {
        v.normalized().map(|coords| ProjectivePoint { coords }).ok_or(Error::ZeroVector)
    }

    pub fn coords(&self) -> &FieldVector {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

impl Hash for ProjectivePoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.raw().hash(state);
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.coords.to_strings().join(" : "))
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn is_self_orthogonal(v: &FieldVector, f: &HermitianForm) -> Result<bool> {
    f.is_self_orthogonal(v)
}

/// Enumerated kernel points and lines with their incidence.
#[derive(Clone)]
pub struct KernelGeometry {
    form: HermitianForm,
    points: Vec<ProjectivePoint>,
    lines: Vec<Vec<usize>>,
    point_lines: Vec<Vec<usize>>,
    index: HashMap<Vec<u32>, usize>,
}

impl KernelGeometry {
    /// Assembles a geometry without checking any kernel invariant. Lines are
    /// sorted point-index lists. Intended for catalogs read back from disk
    /// and for negative controls.
    pub fn from_parts_unchecked(form: HermitianForm, points: Vec<ProjectivePoint>, lines: Vec<Vec<usize>>) -> Self {
        let mut point_lines = vec![Vec::new(); points.len()];
        for (li, line) in lines.iter().enumerate() {
            for &p in line {
                point_lines[p].push(li);
            }
        }
        let index = points.iter().enumerate().map(|(i, p)| (p.coords.raw().to_vec(), i)).collect();
        KernelGeometry { form, points, lines, point_lines, index }
    }

    pub fn form(&self) -> &HermitianForm {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn point(&self, i: usize) -> &ProjectivePoint {
        &self.points[i]
    }

    pub fn line(&self, i: usize) -> &[usize] {
        &self.lines[i]
    }

    /// Indices of the lines through point `i`.
    pub fn lines_through(&self, i: usize) -> &[usize] {
        &self.point_lines[i]
    }

    pub fn point_index(&self, p: &ProjectivePoint) -> Option<usize> {
        self.index.get(p.coords.raw()).copied()
    }

    /// Index of the ray of `v`, if that ray is a kernel point.
    pub fn index_of_vector(&self, v: &FieldVector) -> Option<usize> {
        self.index.get(v.normalized()?.raw()).copied()
    }

    pub fn point_on_line(&self, point: usize, line: usize) -> bool {
        self.lines[line].binary_search(&point).is_ok()
    }

    /// Number of lines through each point.
    pub fn point_degrees(&self) -> Vec<usize> {
        self.point_lines.iter().map(Vec::len).collect()
    }

    /// Number of points on each line.
    pub fn line_sizes(&self) -> Vec<usize> {
        self.lines.iter().map(Vec::len).collect()
    }

    /// (points per line, lines per point) when both are constant.
    pub fn regularity(&self) -> Option<(usize, usize)> {
        let sizes = self.line_sizes();
        let degrees = self.point_degrees();
        let s = *sizes.first()?;
        let d = *degrees.first()?;
        (sizes.iter().all(|&x| x == s) && degrees.iter().all(|&x| x == d)).then_some((s, d))
    }

    /// Σ over points of their degree equals Σ over lines of their size.
    pub fn double_count(&self) -> (usize, usize) {
        (self.point_degrees().iter().sum(), self.line_sizes().iter().sum())
    }

    pub(crate) fn raw_form_value(&self, a: usize, b: usize) -> u32 {
        self.form.evaluate_raw(self.points[a].coords.raw(), self.points[b].coords.raw())
    }

    /// Whether two enumerated points share a line of the catalog.
    pub fn share_line(&self, a: usize, b: usize) -> bool {
        let (la, lb) = (&self.point_lines[a], &self.point_lines[b]);
        la.iter().any(|l| lb.contains(l))
    }

    /// Kernel points in the given projective point set of span(vectors).
    pub fn points_in_span(&self, vectors: &[FieldVector]) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&i| {
                let mut joined = vectors.to_vec();
                joined.push(self.points[i].coords.clone());
                crate::hermitian::rank_of(&joined) == crate::hermitian::rank_of(vectors)
            })
            .collect()
    }

    /// Checks the stored data against the form: every point isotropic,
    /// every line a full totally isotropic projective line.
    pub fn validate(&self) -> Result<()> {
        let q = self.form.spec().order() as usize;
        for p in &self.points {
            if !self.form.is_self_orthogonal(p.coords())? {
                return Err(Error::NotKernelPoint);
            }
        }
        for line in &self.lines {
            if line.len() != q + 1 {
                return Err(Error::InvalidArgument(format!("line with {} points, expected {}", line.len(), q + 1)));
            }
            for &a in line {
                for &b in line {
                    if self.raw_form_value(a, b) != 0 {
                        return Err(Error::NotKernelPoint);
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for KernelGeometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("KernelGeometry")
            .field("dim", &self.dim())
            .field("points", &self.points.len())
            .field("lines", &self.lines.len())
            .finish()
    }
}

/// ⟨x, y⟩ = 0 for two kernel points of `geom`.
pub fn collinear(x: &ProjectivePoint, y: &ProjectivePoint, geom: &KernelGeometry) -> Result<bool> {
    let a = geom.point_index(x).ok_or(Error::NotKernelPoint)?;
    let b = geom.point_index(y).ok_or(Error::NotKernelPoint)?;
    Ok(geom.raw_form_value(a, b) == 0)
}

/// Σ x_i^{q+1}, the Hermitian surface polynomial evaluated directly.
pub fn hermitian_surface_value(v: &FieldVector) -> Result<crate::galois::FieldElement> {
    let q = v.spec().q().ok_or(Error::NoInvolution)?;
    let mut acc = v.spec().zero();
    for x in v.entries() {
        acc = &acc + &x.pow(q as i64 + 1)?;
    }
    Ok(acc)
}
