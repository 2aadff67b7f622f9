//! Exact arithmetic in GF(p^k).
//!
//! A [`FieldSpec`] is built once (modulus, log/antilog tables, involution
//! data) and shared behind an `Arc`. Elements are stored by their index,
//! the little-endian base-p reading of their coefficient vector, so the
//! canonical enumeration order of the field is just `0..order`.

mod element;
pub(crate) mod poly;
mod theory;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use element::{arith, ArithOp, ArithOperand, BornQuantities, ElementJson, FieldElement};
pub use theory::{theory_coordinates, TheoryDescriptor};

use crate::error::{Error, Result};

/// Largest field order the table-driven arithmetic accepts.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// GF(p^k) together with its precomputed arithmetic tables.
pub struct FieldSpec {
    p: u32,
    k: u32,
    modulus: Vec<u32>,
    order: u32,
    q: Option<u32>,
    kappa: Option<u32>,
    /// p^i for i in 0..k
    place: Vec<u32>,
    /// exp[i] = g^i for a fixed primitive element g, i in 0..order-1
    exp: Vec<u32>,
    /// log[x] for x != 0; log[0] is unused
    log: Vec<u32>,
}

/// Serialized form: `{"p":..,"k":..,"modulus":[..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpecJson {
    pub p: u32,
    pub k: u32,
    pub modulus: Vec<u32>,
}

/// Builds GF(p^k). Without an explicit modulus the first monic irreducible
/// of degree `k` (comparing coefficients from the constant term up) is used.
pub fn build_field(p: u64, k: u32, modulus: Option<&[u32]>) -> Result<Arc<FieldSpec>> {
    FieldSpec::new(p, k, modulus).map(Arc::new)
}

impl FieldSpec {
    pub fn new(p: u64, k: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !poly::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::DegreeMismatch { expected: 1, found: vec![] });
        }
        let p32 = p as u32;
        let order = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        if order > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge { p: p32, k });
        }
        let order = order as u32;

        let modulus = match modulus {
            Some(m) => {
                if m.len() != k as usize + 1 || m[k as usize] != 1 || m.iter().any(|&c| c >= p32) {
                    return Err(Error::DegreeMismatch { expected: k, found: m.to_vec() });
                }
                if !poly::is_irreducible(m, p32) {
                    return Err(Error::Reducible(m.to_vec()));
                }
                m.to_vec()
            }
            None => poly::smallest_irreducible(p32, k as usize),
        };

        let place: Vec<u32> = (0..k).map(|i| p32.pow(i)).collect();
        let mut spec = FieldSpec {
            p: p32,
            k,
            modulus,
            order,
            q: None,
            kappa: None,
            place,
            exp: Vec::new(),
            log: Vec::new(),
        };
        spec.build_tables();
        if k % 2 == 0 {
            let q = p32.pow(k / 2);
            spec.q = Some(q);
            spec.kappa = (0..order).find(|&x| spec.pow_raw(x, q as u64) != x);
        }
        Ok(spec)
    }

    fn build_tables(&mut self) {
        let n = self.order as usize;
        let group = n - 1;
        let k = self.k as usize;
        let mut generator_found = false;
        for g in 1..self.order {
            let g_coeffs = poly::digits(g as u64, self.p, k);
            let mut exp = Vec::with_capacity(group);
            let mut seen = vec![false; n];
            let mut cur = vec![0u32; k];
            cur[0] = 1;
            let mut ok = true;
            for _ in 0..group {
                let idx = self.index_of(&cur);
                if seen[idx as usize] {
                    ok = false;
                    break;
                }
                seen[idx as usize] = true;
                exp.push(idx);
                cur = poly::mul_mod(&cur, &g_coeffs, &self.modulus, self.p);
            }
            if ok {
                let mut log = vec![0u32; n];
                for (i, &x) in exp.iter().enumerate() {
                    log[x as usize] = i as u32;
                }
                self.exp = exp;
                self.log = log;
                generator_found = true;
                break;
            }
        }
        assert!(generator_found, "multiplicative group of a finite field is cyclic");
    }

    fn index_of(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().zip(&self.place).map(|(c, w)| c * w).sum()
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Order of the subfield fixed by the involution, when k is even.
    pub fn q(&self) -> Option<u32> {
        self.q
    }

    pub fn has_involution(&self) -> bool {
        self.q.is_some()
    }

    pub fn to_json(&self) -> FieldSpecJson {
        FieldSpecJson { p: self.p, k: self.k, modulus: self.modulus.clone() }
    }

    pub fn from_json(json: &FieldSpecJson) -> Result<Arc<Self>> {
        build_field(json.p as u64, json.k, Some(&json.modulus))
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement::from_raw(self, 0)
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        FieldElement::from_raw(self, 1)
    }

    /// Element with the given canonical index (`sum c_i p^i`).
    pub fn element(self: &Arc<Self>, index: u32) -> Result<FieldElement> {
        if index >= self.order {
            return Err(Error::InvalidElement(format!("index {index} >= field order {}", self.order)));
        }
        Ok(FieldElement::from_raw(self, index))
    }

    /// Integer `n` mapped into the prime field.
    pub fn from_int(self: &Arc<Self>, n: i64) -> FieldElement {
        FieldElement::from_raw(self, n.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coeffs(self: &Arc<Self>, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidElement(format!(
                "coefficients {coeffs:?} do not describe an element of GF({}^{})",
                self.p, self.k
            )));
        }
        Ok(FieldElement::from_raw(self, self.index_of(coeffs)))
    }

    /// All elements in canonical enumeration order.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(move |i| FieldElement::from_raw(self, i))
    }

    /// The distinguished element outside the fixed subfield: the first one in
    /// enumeration order.
    pub fn kappa(self: &Arc<Self>) -> Result<FieldElement> {
        self.kappa.map(|x| FieldElement::from_raw(self, x)).ok_or(Error::NoInvolution)
    }

    /// Elements of the subfield fixed by the involution.
    pub fn subfield(self: &Arc<Self>) -> Result<Vec<FieldElement>> {
        let q = self.q.ok_or(Error::NoInvolution)?;
        Ok((0..self.order)
            .filter(|&x| self.pow_raw(x, q as u64) == x)
            .map(|x| FieldElement::from_raw(self, x))
            .collect())
    }

    /// Parses `"t^2+2t+1"`, `"2"`, `"[1,2]"` or `"1,2"` (coefficients low
    /// degree first).
    pub fn parse_element(self: &Arc<Self>, text: &str) -> Result<FieldElement> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidElement(text.to_string());
        if s.is_empty() {
            return Err(bad());
        }
        if s.starts_with('[') || s.contains(',') {
            let inner = s.trim_start_matches('[').trim_end_matches(']');
            let coeffs = inner
                .split(',')
                .map(|c| c.parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            return self.from_coeffs(&coeffs);
        }
        let mut acc = vec![0u64; self.k as usize];
        for term in s.split('+') {
            let (coef, power) = match term.find('t') {
                None => (term.parse::<u64>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let head = &term[..pos];
                    let coef = match head.trim_end_matches('*') {
                        "" => 1,
                        h => h.parse::<u64>().map_err(|_| bad())?,
                    };
                    let tail = &term[pos + 1..];
                    let power = match tail {
                        "" => 1,
                        t => t.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?,
                    };
                    (coef, power)
                }
            };
            // Higher powers are reduced through the field itself.
            if power >= self.k as usize {
                let t = FieldElement::from_raw(self, if self.k > 1 { self.p } else { 0 });
                let mono = t.pow(power as i64)?;
                let mono_coeffs = mono.coeffs();
                for (a, c) in acc.iter_mut().zip(mono_coeffs) {
                    *a += coef * c as u64;
                }
            } else {
                acc[power] += coef;
            }
        }
        let coeffs: Vec<u32> = acc.into_iter().map(|c| (c % self.p as u64) as u32).collect();
        self.from_coeffs(&coeffs)
    }

    // Raw arithmetic on element indices. Callers guarantee indices < order.

    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for &w in &self.place {
            out += ((a % self.p + b % self.p) % self.p) * w;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        for &w in &self.place {
            out += ((self.p - a % self.p) % self.p) * w;
            a /= self.p;
        }
        out
    }

    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let group = self.order - 1;
        let e = (self.log[a as usize] + self.log[b as usize]) % group;
        self.exp[e as usize]
    }

    pub(crate) fn inv_raw(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let group = self.order - 1;
        Some(self.exp[((group - self.log[a as usize]) % group) as usize])
    }

    pub(crate) fn pow_raw(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let group = (self.order - 1) as u64;
        let l = (self.log[a as usize] as u64 * (e % group)) % group;
        self.exp[l as usize]
    }

    pub(crate) fn exp_raw(&self, e: u32) -> u32 {
        self.exp[(e % (self.order - 1)) as usize]
    }

    pub(crate) fn log_raw(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        self.log[a as usize]
    }

    /// x -> x^q, or the identity when the field has no involution.
    pub(crate) fn conj_raw(&self, a: u32) -> u32 {
        match self.q {
            Some(q) => self.pow_raw(a, q as u64),
            None => a,
        }
    }

    pub(crate) fn coeffs_raw(&self, a: u32) -> Vec<u32> {
        poly::digits(a as u64, self.p, self.k as usize)
    }

    /// Schoolbook product through the polynomial basis; used to cross-check
    /// the tables.
    #[cfg(test)]
    pub(crate) fn mul_poly_raw(&self, a: u32, b: u32) -> u32 {
        let prod = poly::mul_mod(&self.coeffs_raw(a), &self.coeffs_raw(b), &self.modulus, self.p);
        self.index_of(&prod)
    }

    pub(crate) fn format_raw(&self, a: u32) -> String {
        let coeffs = self.coeffs_raw(a);
        let mut terms = Vec::new();
        for (i, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}t^{i}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.k, self.modulus)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order)
    }
}

pub(crate) fn same_field(a: &Arc<FieldSpec>, b: &Arc<FieldSpec>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_modulus_and_kappa() {
        let f = build_field(2, 2, None).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.q(), Some(2));
        assert_eq!(f.kappa().unwrap().coeffs(), vec![0, 1]);
    }

    #[test]
    fn gf9_modulus() {
        let f = build_field(3, 2, None).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        assert_eq!(f.kappa().unwrap().to_string(), "t");
    }

    #[test]
    fn construction_errors() {
        assert_eq!(build_field(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(build_field(1, 1, None).unwrap_err(), Error::NotPrime(1));
        assert!(matches!(build_field(2, 2, Some(&[1, 0, 1])), Err(Error::Reducible(_))));
        assert!(matches!(build_field(2, 2, Some(&[1, 1])), Err(Error::DegreeMismatch { .. })));
        assert!(matches!(build_field(3, 2, Some(&[1, 0, 2])), Err(Error::DegreeMismatch { .. })));
        assert!(matches!(build_field(2, 17, None), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn explicit_modulus_is_kept() {
        // t^2 + t + 2 is also irreducible over F3.
        let f = build_field(3, 2, Some(&[2, 1, 1])).unwrap();
        assert_eq!(f.modulus(), &[2, 1, 1]);
        assert_ne!(*f, *build_field(3, 2, None).unwrap());
    }

    #[test]
    fn tables_agree_with_polynomial_products() {
        for (p, k) in [(2, 2), (3, 2), (2, 4), (5, 2), (2, 3), (7, 1)] {
            let f = build_field(p, k, None).unwrap();
            for a in 0..f.order() {
                for b in 0..f.order() {
                    assert_eq!(f.mul_raw(a, b), f.mul_poly_raw(a, b), "GF({p}^{k}) {a}*{b}");
                }
            }
        }
    }

    #[test]
    fn parse_and_format() {
        let f = build_field(3, 2, None).unwrap();
        let x = f.parse_element("2t+1").unwrap();
        assert_eq!(x.coeffs(), vec![1, 2]);
        assert_eq!(x.to_string(), "2t+1");
        assert_eq!(f.parse_element("[1,2]").unwrap(), x);
        assert_eq!(f.parse_element("1, 2").unwrap(), x);
        assert_eq!(f.parse_element("t+t+1").unwrap(), x);
        // t^2 = -1 in GF(9) with modulus t^2 + 1
        assert_eq!(f.parse_element("t^2").unwrap(), f.from_int(-1));
        assert_eq!(f.parse_element("0").unwrap().to_string(), "0");
        assert!(f.parse_element("x+1").is_err());
        assert!(f.parse_element("[3,0]").is_err());
        assert!(f.parse_element("").is_err());
    }
}
