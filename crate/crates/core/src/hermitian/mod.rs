//! Hermitian forms over GF(q^2), unitarity, and tensor products.
//!
//! Convention: the first argument is conjugated,
//! `<x, y> = sum_ij conj(x_i) G_ij y_j`. Values in the opposite convention
//! are obtained by swapping the arguments.

mod linalg;
mod unitary;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use linalg::{rank_of, FieldMatrix, FieldVector};
pub use unitary::{orthonormal_basis, random_unitary, UNITARY_PRODUCT_LENGTH};
pub(crate) use unitary::require_unitary;

use crate::error::{Error, Result};
use crate::galois::{same_field, ElementJson, FieldElement, FieldSpec};

/// A nondegenerate (σ,1)-Hermitian form given by its Gram matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct HermitianForm {
    gram: FieldMatrix,
    standard: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub dim: usize,
    pub gram: Vec<Vec<ElementJson>>,
}

impl HermitianForm {
    /// Validates that `gram` is Hermitian and invertible.
    pub fn new(gram: FieldMatrix) -> Result<Self> {
        if !is_hermitian_matrix(&gram)? {
            return Err(Error::NotHermitian);
        }
        if gram.inverse().is_err() {
            return Err(Error::DegenerateForm);
        }
        let standard = gram.is_identity();
        Ok(HermitianForm { gram, standard })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &FieldMatrix {
        &self.gram
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        self.gram.spec()
    }

    pub fn is_standard(&self) -> bool {
        self.standard
    }

    pub fn evaluate(&self, x: &FieldVector, y: &FieldVector) -> Result<FieldElement> {
        let n = self.dim();
        for v in [x, y] {
            if !same_field(v.spec(), self.spec()) {
                return Err(Error::FieldMismatch);
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
        }
        Ok(FieldElement::from_raw(self.spec(), self.evaluate_raw(x.raw(), y.raw())))
    }

    /// Unchecked evaluation on raw coordinates of matching length.
    pub(crate) fn evaluate_raw(&self, x: &[u32], y: &[u32]) -> u32 {
        let f = self.spec();
        if self.standard {
            return x.iter().zip(y).fold(0, |acc, (&a, &b)| f.add_raw(acc, f.mul_raw(f.conj_raw(a), b)));
        }
        let n = self.dim();
        let mut acc = 0;
        for (i, &xi) in x.iter().enumerate().take(n) {
            if xi == 0 {
                continue;
            }
            let cx = f.conj_raw(xi);
            let gy = (0..n).fold(0, |s, j| f.add_raw(s, f.mul_raw(self.gram.raw(i, j), y[j])));
            acc = f.add_raw(acc, f.mul_raw(cx, gy));
        }
        acc
    }

    pub fn is_self_orthogonal(&self, v: &FieldVector) -> Result<bool> {
        Ok(self.evaluate(v, v)?.is_zero())
    }

    /// Form on the tensor product space with Gram matrix `G1 (x) G2`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let gram = self.gram.tensor(&other.gram)?;
        let standard = gram.is_identity();
        Ok(HermitianForm { gram, standard })
    }

    pub fn to_json(&self) -> FormJson {
        FormJson { dim: self.dim(), gram: self.gram.to_json() }
    }

    pub fn from_json(spec: &Arc<FieldSpec>, json: &FormJson) -> Result<Self> {
        let gram = FieldMatrix::from_json(spec, &json.gram)?;
        if gram.rows() != json.dim {
            return Err(Error::DimensionMismatch { expected: json.dim, found: gram.rows() });
        }
        Self::new(gram)
    }
}

impl std::fmt::Debug for HermitianForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HermitianForm({})", self.gram)
    }
}

/// x_1^σ y_1 + ... + x_d^σ y_d.
pub fn standard_form(spec: &Arc<FieldSpec>, dim: usize) -> Result<HermitianForm> {
    if !spec.has_involution() {
        return Err(Error::NoInvolution);
    }
    if dim == 0 {
        return Err(Error::InvalidArgument("form dimension must be positive".into()));
    }
    Ok(HermitianForm { gram: FieldMatrix::identity(spec, dim), standard: true })
}

pub fn evaluate_form(f: &HermitianForm, x: &FieldVector, y: &FieldVector) -> Result<FieldElement> {
    f.evaluate(x, y)
}

/// Whether the conjugate transpose of `a` equals `a`.
pub fn is_hermitian_matrix(a: &FieldMatrix) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    Ok(a.conj_transpose()? == *a)
}

/// U* G U = G.
pub fn is_unitary(u: &FieldMatrix, f: &HermitianForm) -> Result<bool> {
    if !u.is_square() {
        return Err(Error::NotSquare { rows: u.rows(), cols: u.cols() });
    }
    if u.rows() != f.dim() {
        return Err(Error::DimensionMismatch { expected: f.dim(), found: u.rows() });
    }
    let lhs = u.conj_transpose()?.mul(f.gram())?.mul(u)?;
    Ok(lhs == *f.gram())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;

    #[test]
    fn standard_forms() {
        let g4 = build_field(2, 2, None).unwrap();
        assert!(standard_form(&g4, 2).unwrap().gram().is_identity());
        let g9 = build_field(3, 2, None).unwrap();
        assert_eq!(standard_form(&g9, 4).unwrap().dim(), 4);
        let g8 = build_field(2, 3, None).unwrap();
        assert_eq!(standard_form(&g8, 2).unwrap_err(), Error::NoInvolution);
    }

    #[test]
    fn evaluation_examples() {
        let f = build_field(2, 2, None).unwrap();
        let form = standard_form(&f, 2).unwrap();
        let e1 = FieldVector::basis(&f, 2, 0);
        assert!(form.evaluate(&e1, &e1).unwrap().is_one());
        let v = FieldVector::parse(&f, &["1", "t"]).unwrap();
        assert!(form.evaluate(&v, &v).unwrap().is_zero());
        let short = FieldVector::basis(&f, 3, 0);
        assert!(matches!(form.evaluate(&short, &e1), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn hermitian_matrix_examples() {
        let f = build_field(2, 2, None).unwrap();
        assert!(is_hermitian_matrix(&FieldMatrix::identity(&f, 3)).unwrap());
        let h = FieldMatrix::parse_rows(&f, &[&["0", "t"], &["t+1", "0"]]).unwrap();
        assert!(is_hermitian_matrix(&h).unwrap());
        let n = FieldMatrix::parse_rows(&f, &[&["0", "t"], &["t", "0"]]).unwrap();
        assert!(!is_hermitian_matrix(&n).unwrap());
        let rect = FieldMatrix::zeros(&f, 2, 3);
        assert!(matches!(is_hermitian_matrix(&rect), Err(Error::NotSquare { .. })));
        assert!(HermitianForm::new(h).is_ok());
        assert_eq!(HermitianForm::new(n).unwrap_err(), Error::NotHermitian);
        let zero = FieldMatrix::zeros(&f, 2, 2);
        assert_eq!(HermitianForm::new(zero).unwrap_err(), Error::DegenerateForm);
    }

    #[test]
    fn unitary_examples() {
        let f = build_field(2, 2, None).unwrap();
        let form = standard_form(&f, 2).unwrap();
        assert!(is_unitary(&FieldMatrix::identity(&f, 2), &form).unwrap());
        let x = FieldMatrix::from_int_rows(&f, &[&[0, 1], &[1, 0]]).unwrap();
        assert!(is_unitary(&x, &form).unwrap());
        let shear = FieldMatrix::from_int_rows(&f, &[&[1, 1], &[0, 1]]).unwrap();
        assert!(!is_unitary(&shear, &form).unwrap());
        let big = FieldMatrix::identity(&f, 3);
        assert!(matches!(is_unitary(&big, &form), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn tensor_form_factorizes() {
        let f = build_field(3, 2, None).unwrap();
        let h = FieldMatrix::parse_rows(&f, &[&["1", "t"], &["2t", "2"]]).unwrap();
        let a = HermitianForm::new(h).unwrap();
        let b = standard_form(&f, 2).unwrap();
        let ab = a.tensor(&b).unwrap();
        let x = FieldVector::parse(&f, &["t", "1"]).unwrap();
        let y = FieldVector::parse(&f, &["2", "t+1"]).unwrap();
        let x2 = FieldVector::parse(&f, &["1", "2t"]).unwrap();
        let y2 = FieldVector::parse(&f, &["t", "0"]).unwrap();
        let lhs = ab.evaluate(&x.tensor(&y).unwrap(), &x2.tensor(&y2).unwrap()).unwrap();
        let rhs = &a.evaluate(&x, &x2).unwrap() * &b.evaluate(&y, &y2).unwrap();
        assert_eq!(lhs, rhs);
    }
}
