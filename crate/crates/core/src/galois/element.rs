use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{same_field, FieldSpec};
use crate::error::{Error, Result};

/// An element of GF(p^k), held as its canonical index together with the
/// field it lives in.
///
/// The arithmetic operators panic when the operands come from different
/// fields; the `try_*` methods and [`arith`] report `FieldMismatch` instead.
#[derive(Clone)]
pub struct FieldElement {
    spec: Arc<FieldSpec>,
    value: u32,
}

/// JSON shape of an element: `{"coeffs":[c0,..,c_{k-1}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub coeffs: Vec<u32>,
}

impl FieldElement {
    pub(crate) fn from_raw(spec: &Arc<FieldSpec>, value: u32) -> Self {
        debug_assert!(value < spec.order);
        FieldElement { spec: Arc::clone(spec), value }
    }

    pub(crate) fn raw(&self) -> u32 {
        self.value
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    /// Canonical index, `sum c_i p^i`.
    pub fn index(&self) -> u32 {
        self.value
    }

    /// Exactly k coefficients, constant term first.
    pub fn coeffs(&self) -> Vec<u32> {
        self.spec.coeffs_raw(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    pub fn to_json(&self) -> ElementJson {
        ElementJson { coeffs: self.coeffs() }
    }

    pub fn from_json(spec: &Arc<FieldSpec>, json: &ElementJson) -> Result<Self> {
        if json.coeffs.len() != spec.k as usize {
            return Err(Error::InvalidElement(format!(
                "expected {} coefficients, got {}",
                spec.k,
                json.coeffs.len()
            )));
        }
        spec.from_coeffs(&json.coeffs)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_field(&self.spec, &other.spec) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_raw(&self.spec, self.spec.add_raw(self.value, other.value)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_raw(&self.spec, self.spec.sub_raw(self.value, other.value)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_raw(&self.spec, self.spec.mul_raw(self.value, other.value)))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Self> {
        self.spec
            .inv_raw(self.value)
            .map(|v| Self::from_raw(&self.spec, v))
            .ok_or(Error::DivisionByZero)
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        Ok(Self::from_raw(&self.spec, self.spec.pow_raw(self.value, e as u64)))
    }

    /// The involution x -> x^q of GF(q^2).
    pub fn frobenius_involution(&self) -> Result<Self> {
        let q = self.spec.q.ok_or(Error::NoInvolution)?;
        Ok(Self::from_raw(&self.spec, self.spec.pow_raw(self.value, q as u64)))
    }

    /// Shorthand for [`Self::frobenius_involution`] for callers that already
    /// know the field has one.
    pub fn conj(&self) -> Self {
        self.frobenius_involution().expect("field has no involution")
    }

    pub fn in_subfield(&self) -> Result<bool> {
        Ok(self.frobenius_involution()? == *self)
    }

    /// Unique `(a, b)` in the fixed subfield with `self = a + kappa * b`.
    pub fn decompose(&self) -> Result<(Self, Self)> {
        let kappa = self.spec.kappa()?;
        let conj = self.conj();
        // x - conj(x) = (kappa - conj(kappa)) b
        let b = (self - &conj).try_div(&(&kappa - &kappa.conj()))?;
        let a = self - &(&kappa * &b);
        Ok((a, b))
    }

    pub fn recompose(a: &Self, b: &Self) -> Result<Self> {
        let kappa = a.spec.kappa()?;
        a.try_add(&kappa.try_mul(b)?)
    }

    /// Multiplicative norm x * conj(x) = x^(q+1), the default Born quantity.
    pub fn norm(&self) -> Result<Self> {
        Ok(self * &self.frobenius_involution()?)
    }

    /// a^2 + b^2 where `self = a + kappa b`. Depends on kappa.
    pub fn sum_of_squares(&self) -> Result<Self> {
        let (a, b) = self.decompose()?;
        Ok(&(&a * &a) + &(&b * &b))
    }

    /// Both Born readings side by side.
    pub fn born_quantities(&self) -> Result<BornQuantities> {
        let norm = self.norm()?;
        let sum_of_squares = self.sum_of_squares()?;
        let agree = norm == sum_of_squares;
        Ok(BornQuantities { norm, sum_of_squares, agree })
    }
}

/// The two finite-field readings of |z|^2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BornQuantities {
    pub norm: FieldElement,
    pub sum_of_squares: FieldElement,
    pub agree: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Inv,
    Pow,
}

#[derive(Debug, Clone)]
pub enum ArithOperand {
    Element(FieldElement),
    Integer(i64),
}

/// Dispatching entry point used by the CLI and the C ABI.
pub fn arith(op: ArithOp, x: &FieldElement, y: Option<&ArithOperand>) -> Result<FieldElement> {
    let element = |y: Option<&ArithOperand>| match y {
        Some(ArithOperand::Element(e)) => Ok(e.clone()),
        Some(ArithOperand::Integer(n)) => Ok(x.spec.from_int(*n)),
        None => Err(Error::InvalidArgument("missing second operand".into())),
    };
    match op {
        ArithOp::Add => x.try_add(&element(y)?),
        ArithOp::Sub => x.try_sub(&element(y)?),
        ArithOp::Mul => x.try_mul(&element(y)?),
        ArithOp::Inv => x.inv(),
        ArithOp::Pow => match y {
            Some(ArithOperand::Integer(n)) => x.pow(*n),
            _ => Err(Error::InvalidArgument("pow takes an integer exponent".into())),
        },
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && same_field(&self.spec, &other.spec)
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec.format_raw(self.value))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$try(rhs).expect("operands from different fields")
            }
        }

        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::from_raw(&self.spec, self.spec.neg_raw(self.value))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
