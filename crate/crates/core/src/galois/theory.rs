use std::sync::Arc;

use serde::Serialize;

use super::{build_field, poly, FieldSpec};
use crate::error::{Error, Result};

/// One point (i, m, p) of the lattice of finite modal theories: states in
/// GF(p^{2i})^m with the involution x -> x^{p^i}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoryDescriptor {
    pub i: u32,
    pub m: u32,
    pub p: u64,
    /// Extension degree of the scalar field, 2i.
    pub field_degree: u32,
    pub field_order: u64,
    pub subfield_order: u64,
    pub dimension: u32,
    /// The involution is x -> x^involution_exponent.
    pub involution_exponent: u64,
}

pub fn theory_coordinates(i: u32, m: u32, p: u64) -> Result<TheoryDescriptor> {
    if !poly::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if i == 0 || m == 0 {
        return Err(Error::InvalidArgument("theory coordinates i and m must be positive".into()));
    }
    let subfield_order = p
        .checked_pow(i)
        .ok_or_else(|| Error::InvalidArgument("subfield order overflows".into()))?;
    let field_order = subfield_order
        .checked_mul(subfield_order)
        .ok_or_else(|| Error::InvalidArgument("field order overflows".into()))?;
    Ok(TheoryDescriptor {
        i,
        m,
        p,
        field_degree: 2 * i,
        field_order,
        subfield_order,
        dimension: m,
        involution_exponent: subfield_order,
    })
}

impl TheoryDescriptor {
    pub fn build_field(&self) -> Result<Arc<FieldSpec>> {
        build_field(self.p, self.field_degree, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_points() {
        let d = theory_coordinates(1, 2, 2).unwrap();
        assert_eq!((d.field_order, d.subfield_order, d.dimension), (4, 2, 2));
        let d = theory_coordinates(1, 4, 3).unwrap();
        assert_eq!((d.field_order, d.subfield_order, d.dimension), (9, 3, 4));
        let d = theory_coordinates(2, 2, 2).unwrap();
        assert_eq!((d.field_order, d.subfield_order, d.dimension), (16, 4, 2));
        let f = d.build_field().unwrap();
        assert_eq!(f.modulus(), &[1, 0, 0, 1, 1]);
        assert_eq!(f.q(), Some(4));
        assert_eq!(f.subfield().unwrap().len(), 4);
        assert_eq!(theory_coordinates(1, 1, 6).unwrap_err(), Error::NotPrime(6));
        assert!(theory_coordinates(0, 1, 2).is_err());
    }
}
