use crate::error::{Error, Result};
use crate::hermitian::{rank_of, FieldMatrix, FieldVector, HermitianForm};

fn check_len(v: &FieldVector, f: &HermitianForm) -> Result<()> {
    if v.len() != f.dim() {
        return Err(Error::DimensionMismatch { expected: f.dim(), found: v.len() });
    }
    if !crate::galois::same_field(v.spec(), f.spec()) {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// Coefficients c of the functional w -> <v, w>, so that
/// π(v) = {w : Σ c_j w_j = 0}.
pub fn polar_hyperplane(v: &FieldVector, f: &HermitianForm) -> Result<FieldVector> {
    check_len(v, f)?;
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let spec = f.spec();
    let n = f.dim();
    let data = (0..n)
        .map(|j| {
            (0..n).fold(0, |acc, i| spec.add_raw(acc, spec.mul_raw(spec.conj_raw(v.raw()[i]), f.gram().raw(i, j))))
        })
        .collect();
    Ok(FieldVector::from_raw(spec, data))
}

/// Basis of π(W), the intersection of the polar hyperplanes of a basis of W.
/// An empty basis (the zero subspace) yields the whole space.
pub fn polar_of_subspace(basis: &[FieldVector], f: &HermitianForm) -> Result<Vec<FieldVector>> {
    for v in basis {
        check_len(v, f)?;
    }
    let n = f.dim();
    if basis.is_empty() {
        return Ok((0..n).map(|i| FieldVector::basis(f.spec(), n, i)).collect());
    }
    if rank_of(basis) != basis.len() {
        return Err(Error::DependentBasis);
    }
    let functionals = basis.iter().map(|v| polar_hyperplane(v, f)).collect::<Result<Vec<_>>>()?;
    let rows = FieldMatrix::from_columns(&functionals)?.transpose();
    Ok(rows.nullspace())
}

/// Whether span(inner) ⊆ span(outer).
pub fn subspace_contains(outer: &[FieldVector], inner: &[FieldVector]) -> bool {
    let mut joined = outer.to_vec();
    joined.extend_from_slice(inner);
    rank_of(&joined) == rank_of(outer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;
    use crate::hermitian::standard_form;

    #[test]
    fn polar_of_basis_vector() {
        let f = build_field(2, 2, None).unwrap();
        let form = standard_form(&f, 4).unwrap();
        let e1 = FieldVector::basis(&f, 4, 0);
        assert_eq!(polar_hyperplane(&e1, &form).unwrap(), e1);
        let plane = polar_of_subspace(std::slice::from_ref(&e1), &form).unwrap();
        assert_eq!(plane.len(), 3);
        assert!(plane.iter().all(|w| form.evaluate(&e1, w).unwrap().is_zero()));
        assert_eq!(polar_hyperplane(&FieldVector::zero(&f, 4), &form).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn dependent_basis_rejected() {
        let f = build_field(3, 2, None).unwrap();
        let form = standard_form(&f, 4).unwrap();
        let v = FieldVector::from_ints(&f, &[1, 2, 0, 1]);
        assert_eq!(polar_of_subspace(&[v.clone(), v.scale(&f.from_int(2))], &form).unwrap_err(), Error::DependentBasis);
        assert_eq!(polar_of_subspace(&[], &form).unwrap().len(), 4);
    }
}
