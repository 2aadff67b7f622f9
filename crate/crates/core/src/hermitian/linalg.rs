//! Exact vectors and matrices over a [`FieldSpec`].

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::galois::{same_field, ElementJson, FieldElement, FieldSpec};

/// A state vector; entries stored by field index.
#[derive(Clone)]
pub struct FieldVector {
    spec: Arc<FieldSpec>,
    data: Vec<u32>,
}

impl FieldVector {
    pub fn new(spec: &Arc<FieldSpec>, entries: &[FieldElement]) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("vectors have length at least 1".into()));
        }
        if entries.iter().any(|e| !same_field(e.spec(), spec)) {
            return Err(Error::FieldMismatch);
        }
        Ok(Self::from_raw(spec, entries.iter().map(FieldElement::raw).collect()))
    }

    pub(crate) fn from_raw(spec: &Arc<FieldSpec>, data: Vec<u32>) -> Self {
        debug_assert!(!data.is_empty());
        FieldVector { spec: Arc::clone(spec), data }
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.data
    }

    pub fn from_ints(spec: &Arc<FieldSpec>, entries: &[i64]) -> Self {
        let data = entries.iter().map(|&n| spec.from_int(n).raw()).collect();
        Self::from_raw(spec, data)
    }

    pub fn parse(spec: &Arc<FieldSpec>, entries: &[&str]) -> Result<Self> {
        let elems = entries.iter().map(|s| spec.parse_element(s)).collect::<Result<Vec<_>>>()?;
        Self::new(spec, &elems)
    }

    pub fn zero(spec: &Arc<FieldSpec>, len: usize) -> Self {
        Self::from_raw(spec, vec![0; len])
    }

    /// Standard basis vector e_i of length `len`.
    pub fn basis(spec: &Arc<FieldSpec>, len: usize, i: usize) -> Self {
        let mut data = vec![0; len];
        data[i] = 1;
        Self::from_raw(spec, data)
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize) -> FieldElement {
        FieldElement::from_raw(&self.spec, self.data[i])
    }

    pub fn entries(&self) -> Vec<FieldElement> {
        self.data.iter().map(|&v| FieldElement::from_raw(&self.spec, v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if !same_field(&self.spec, &other.spec) {
            return Err(Error::FieldMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), found: other.len() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| self.spec.add_raw(a, b)).collect();
        Ok(Self::from_raw(&self.spec, data))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| self.spec.sub_raw(a, b)).collect();
        Ok(Self::from_raw(&self.spec, data))
    }

    /// Right scalar multiplication v * s.
    pub fn scale(&self, s: &FieldElement) -> Self {
        self.scale_raw(s.raw())
    }

    pub(crate) fn scale_raw(&self, s: u32) -> Self {
        let data = self.data.iter().map(|&a| self.spec.mul_raw(a, s)).collect();
        Self::from_raw(&self.spec, data)
    }

    /// Entrywise involution.
    pub fn conj(&self) -> Result<Self> {
        if !self.spec.has_involution() {
            return Err(Error::NoInvolution);
        }
        Ok(Self::from_raw(&self.spec, self.data.iter().map(|&a| self.spec.conj_raw(a)).collect()))
    }

    /// Kronecker product; index of (i, j) is `i * other.len() + j`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if !same_field(&self.spec, &other.spec) {
            return Err(Error::FieldMismatch);
        }
        let mut data = Vec::with_capacity(self.len() * other.len());
        for &a in &self.data {
            for &b in &other.data {
                data.push(self.spec.mul_raw(a, b));
            }
        }
        Ok(Self::from_raw(&self.spec, data))
    }

    /// Canonical ray representative: leftmost nonzero coordinate scaled to 1.
    pub fn normalized(&self) -> Option<Self> {
        let lead = *self.data.iter().find(|&&v| v != 0)?;
        let inv = self.spec.inv_raw(lead).expect("nonzero");
        Some(self.scale_raw(inv))
    }

    /// Same projective point (both nonzero).
    pub fn same_ray(&self, other: &Self) -> bool {
        match (self.normalized(), other.normalized()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// `Some(rho)` with `other = self * rho` when `self` is nonzero and
    /// `other` lies on its ray or is zero.
    pub fn ratio_to(&self, other: &Self) -> Option<FieldElement> {
        if self.len() != other.len() {
            return None;
        }
        let pivot = self.data.iter().position(|&v| v != 0)?;
        let rho = self.spec.mul_raw(other.data[pivot], self.spec.inv_raw(self.data[pivot])?);
        if self.scale_raw(rho).data == other.data {
            Some(FieldElement::from_raw(&self.spec, rho))
        } else {
            None
        }
    }

    pub fn to_json(&self) -> Vec<ElementJson> {
        self.entries().iter().map(FieldElement::to_json).collect()
    }

    pub fn from_json(spec: &Arc<FieldSpec>, json: &[ElementJson]) -> Result<Self> {
        let elems = json.iter().map(|e| FieldElement::from_json(spec, e)).collect::<Result<Vec<_>>>()?;
        Self::new(spec, &elems)
    }

    /// Entries as polynomial strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.data.iter().map(|&v| self.spec.format_raw(v)).collect()
    }
}

impl PartialEq for FieldVector {
    fn eq(&self, other: &Self) -> bool {
        self.data == other.data && same_field(&self.spec, &other.spec)
    }
}

impl Eq for FieldVector {}

impl fmt::Display for FieldVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl fmt::Debug for FieldVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dense row-major matrix.
#[derive(Clone)]
pub struct FieldMatrix {
    spec: Arc<FieldSpec>,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FieldMatrix {
    pub(crate) fn from_raw(spec: &Arc<FieldSpec>, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        FieldMatrix { spec: Arc::clone(spec), rows, cols, data }
    }

    pub fn zeros(spec: &Arc<FieldSpec>, rows: usize, cols: usize) -> Self {
        Self::from_raw(spec, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(spec: &Arc<FieldSpec>, n: usize) -> Self {
        let mut m = Self::zeros(spec, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(spec: &Arc<FieldSpec>, rows: &[Vec<FieldElement>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::InvalidArgument("matrices are at least 1x1".into()));
        }
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, found: row.len() });
            }
            for e in row {
                if !same_field(e.spec(), spec) {
                    return Err(Error::FieldMismatch);
                }
                data.push(e.raw());
            }
        }
        Ok(Self::from_raw(spec, r, c, data))
    }

    pub fn from_int_rows(spec: &Arc<FieldSpec>, rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<FieldElement>> =
            rows.iter().map(|r| r.iter().map(|&n| spec.from_int(n)).collect()).collect();
        Self::from_rows(spec, &rows)
    }

    pub fn parse_rows(spec: &Arc<FieldSpec>, rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| spec.parse_element(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(spec, &rows)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[FieldVector]) -> Result<Self> {
        let first = columns.first().ok_or_else(|| Error::InvalidArgument("no columns".into()))?;
        let spec = first.spec().clone();
        let rows = first.len();
        for c in columns {
            if !same_field(c.spec(), &spec) {
                return Err(Error::FieldMismatch);
            }
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: c.len() });
            }
        }
        let cols = columns.len();
        let mut data = vec![0; rows * cols];
        for (j, c) in columns.iter().enumerate() {
            for i in 0..rows {
                data[i * cols + j] = c.raw()[i];
            }
        }
        Ok(Self::from_raw(&spec, rows, cols, data))
    }

    /// Permutation matrix sending e_j to e_{perm[j]}.
    pub fn permutation(spec: &Arc<FieldSpec>, perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        let mut m = Self::zeros(spec, n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.data[i * n + j] = 1;
        }
        Ok(m)
    }

    /// Ones on the anti-diagonal: reverses coordinate order.
    pub fn anti_diagonal(spec: &Arc<FieldSpec>, n: usize) -> Self {
        let perm: Vec<usize> = (0..n).rev().collect();
        Self::permutation(spec, &perm).expect("reversal is a permutation")
    }

    pub fn diagonal(entries: &[FieldElement]) -> Result<Self> {
        let first = entries.first().ok_or_else(|| Error::InvalidArgument("empty diagonal".into()))?;
        let spec = first.spec().clone();
        let n = entries.len();
        let mut m = Self::zeros(&spec, n, n);
        for (i, e) in entries.iter().enumerate() {
            if !same_field(e.spec(), &spec) {
                return Err(Error::FieldMismatch);
            }
            m.data[i * n + i] = e.raw();
        }
        Ok(m)
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        FieldElement::from_raw(&self.spec, self.data[i * self.cols + j])
    }

    pub(crate) fn raw(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: &FieldElement) -> Result<()> {
        if !same_field(value.spec(), &self.spec) {
            return Err(Error::FieldMismatch);
        }
        self.data[i * self.cols + j] = value.raw();
        Ok(())
    }

    pub fn row(&self, i: usize) -> FieldVector {
        FieldVector::from_raw(&self.spec, self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> FieldVector {
        FieldVector::from_raw(&self.spec, (0..self.rows).map(|i| self.raw(i, j)).collect())
    }

    pub fn columns(&self) -> Vec<FieldVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.raw(i, j) == u32::from(i == j)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if !same_field(&self.spec, &other.spec) {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let f = &self.spec;
        let mut data = vec![0; self.rows * other.cols];
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.raw(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cell = &mut data[i * other.cols + j];
                    *cell = f.add_raw(*cell, f.mul_raw(a, other.raw(l, j)));
                }
            }
        }
        Ok(Self::from_raw(f, self.rows, other.cols, data))
    }

    /// Operator applied on the left of a column vector.
    pub fn apply(&self, v: &FieldVector) -> Result<FieldVector> {
        if !same_field(&self.spec, v.spec()) {
            return Err(Error::FieldMismatch);
        }
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let f = &self.spec;
        let data = (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(0, |acc, j| f.add_raw(acc, f.mul_raw(self.raw(i, j), v.raw()[j])))
            })
            .collect();
        Ok(FieldVector::from_raw(f, data))
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![0; self.data.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                data[j * self.rows + i] = self.raw(i, j);
            }
        }
        Self::from_raw(&self.spec, self.cols, self.rows, data)
    }

    /// Transpose with the involution applied entrywise (U*).
    pub fn conj_transpose(&self) -> Result<Self> {
        if !self.spec.has_involution() {
            return Err(Error::NoInvolution);
        }
        Ok(self.adjoint_or_transpose())
    }

    /// U* when the field has an involution, the plain transpose otherwise.
    pub(crate) fn adjoint_or_transpose(&self) -> Self {
        let mut t = self.transpose();
        for v in &mut t.data {
            *v = self.spec.conj_raw(*v);
        }
        t
    }

    /// Kronecker product with row-major block layout.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if !same_field(&self.spec, &other.spec) {
            return Err(Error::FieldMismatch);
        }
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = vec![0; rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.raw(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        data[(i * other.rows + k) * cols + j * other.cols + l] =
                            self.spec.mul_raw(a, other.raw(k, l));
                    }
                }
            }
        }
        Ok(Self::from_raw(&self.spec, rows, cols, data))
    }

    /// Reduced row echelon form in place; returns pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let f = Arc::clone(&self.spec);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.raw(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv_raw(self.raw(r, c)).expect("pivot is nonzero");
            for j in 0..self.cols {
                let idx = r * self.cols + j;
                self.data[idx] = f.mul_raw(self.data[idx], inv);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.raw(i, c);
                if factor == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let sub = f.mul_raw(factor, self.raw(r, j));
                    let idx = i * self.cols + j;
                    self.data[idx] = f.sub_raw(self.data[idx], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of {x : A x = 0}.
    pub fn nullspace(&self) -> Vec<FieldVector> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut data = vec![0; self.cols];
                data[fc] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    data[pc] = self.spec.neg_raw(m.raw(r, fc));
                }
                FieldVector::from_raw(&self.spec, data)
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = Self::zeros(&self.spec, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.raw(i, j);
            }
            aug.data[i * 2 * n + n + i] = 1;
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            data.extend_from_slice(&aug.data[i * 2 * n + n..(i + 1) * 2 * n]);
        }
        Ok(Self::from_raw(&self.spec, n, n, data))
    }

    /// Solves A X = B; `None` when some column of B is outside the column
    /// space of A. Free variables are set to zero.
    pub fn solve(&self, rhs: &Self) -> Result<Option<Self>> {
        if !same_field(&self.spec, &rhs.spec) {
            return Err(Error::FieldMismatch);
        }
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: rhs.rows });
        }
        let (n, m) = (self.cols, rhs.cols);
        let width = n + m;
        let mut aug = Self::zeros(&self.spec, self.rows, width);
        for i in 0..self.rows {
            for j in 0..n {
                aug.data[i * width + j] = self.raw(i, j);
            }
            for j in 0..m {
                aug.data[i * width + n + j] = rhs.raw(i, j);
            }
        }
        let pivots = aug.rref();
        if pivots.iter().any(|&c| c >= n) {
            return Ok(None);
        }
        let mut out = Self::zeros(&self.spec, n, m);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..m {
                out.data[pc * m + j] = aug.raw(r, n + j);
            }
        }
        Ok(Some(out))
    }

    pub fn to_json(&self) -> Vec<Vec<ElementJson>> {
        (0..self.rows).map(|i| self.row(i).to_json()).collect()
    }

    pub fn from_json(spec: &Arc<FieldSpec>, json: &[Vec<ElementJson>]) -> Result<Self> {
        let rows = json
            .iter()
            .map(|r| r.iter().map(|e| FieldElement::from_json(spec, e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(spec, &rows)
    }
}

/// Rank of a family of vectors.
pub fn rank_of(vectors: &[FieldVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    FieldMatrix::from_columns(vectors).map_or(0, |m| m.rank())
}

impl PartialEq for FieldMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
            && same_field(&self.spec, &other.spec)
    }
}

impl Eq for FieldMatrix {}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows).map(|i| self.row(i).to_string()).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;

    #[test]
    fn tensor_basis_bookkeeping() {
        let f = build_field(2, 2, None).unwrap();
        let e0 = FieldVector::basis(&f, 2, 0);
        let e1 = FieldVector::basis(&f, 2, 1);
        assert_eq!(e0.tensor(&e1).unwrap(), FieldVector::from_ints(&f, &[0, 1, 0, 0]));
        let id2 = FieldMatrix::identity(&f, 2);
        assert_eq!(id2.tensor(&id2).unwrap(), FieldMatrix::identity(&f, 4));
    }

    #[test]
    fn inverse_and_solve() {
        let f = build_field(3, 2, None).unwrap();
        let a = FieldMatrix::parse_rows(&f, &[&["1", "t"], &["2", "t+1"]]).unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        let singular = FieldMatrix::from_int_rows(&f, &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(singular.inverse().unwrap_err(), Error::Singular);
        assert_eq!(singular.rank(), 1);
        let ns = singular.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(singular.apply(&ns[0]).unwrap().is_zero());
        let b = FieldMatrix::from_int_rows(&f, &[&[1], &[0]]).unwrap();
        assert!(singular.solve(&b).unwrap().is_none());
        let x = a.solve(&b).unwrap().unwrap();
        assert_eq!(a.mul(&x).unwrap(), b);
    }

    #[test]
    fn normalization_and_rays() {
        let f = build_field(2, 2, None).unwrap();
        let v = FieldVector::parse(&f, &["0", "t", "1"]).unwrap();
        let n = v.normalized().unwrap();
        assert_eq!(n.get(1), f.one());
        assert!(v.same_ray(&n));
        let rho = n.ratio_to(&v).unwrap();
        assert_eq!(rho.to_string(), "t");
        assert!(FieldVector::zero(&f, 3).normalized().is_none());
    }

    #[test]
    fn permutation_and_antidiagonal() {
        let f = build_field(3, 2, None).unwrap();
        let p = FieldMatrix::permutation(&f, &[1, 2, 0]).unwrap();
        assert_eq!(p.apply(&FieldVector::basis(&f, 3, 0)).unwrap(), FieldVector::basis(&f, 3, 1));
        let r = FieldMatrix::anti_diagonal(&f, 8);
        assert_eq!(r.apply(&FieldVector::basis(&f, 8, 1)).unwrap(), FieldVector::basis(&f, 8, 6));
        assert!(FieldMatrix::permutation(&f, &[0, 0]).is_err());
    }
}
