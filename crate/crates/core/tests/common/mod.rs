//! Reference arithmetic for GF(q^2) = GF(q)[t]/(t^2 + m1 t + m0), q prime,
//! written from scratch so that the library's tables are not used to check
//! themselves. Elements are pairs (a0, a1) meaning a0 + a1 t.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub q: u32,
    m0: u32,
    m1: u32,
}

pub type E = (u32, u32);

impl Oracle {
    /// GF(4) with t^2 + t + 1.
    pub fn gf4() -> Self {
        Oracle { q: 2, m0: 1, m1: 1 }
    }

    /// GF(9) with t^2 + 1.
    pub fn gf9() -> Self {
        Oracle { q: 3, m0: 1, m1: 0 }
    }

    pub fn for_q(q: u32) -> Self {
        match q {
            2 => Self::gf4(),
            3 => Self::gf9(),
            _ => panic!("oracle only covers q = 2, 3"),
        }
    }

    pub fn elements(&self) -> Vec<E> {
        (0..self.q).flat_map(|a1| (0..self.q).map(move |a0| (a0, a1))).collect()
    }

    pub fn from_coeffs(&self, c: &[u32]) -> E {
        (c[0], c[1])
    }

    pub fn add(&self, x: E, y: E) -> E {
        ((x.0 + y.0) % self.q, (x.1 + y.1) % self.q)
    }

    pub fn neg(&self, x: E) -> E {
        ((self.q - x.0) % self.q, (self.q - x.1) % self.q)
    }

    pub fn mul(&self, x: E, y: E) -> E {
        let q = self.q;
        let c0 = x.0 * y.0;
        let c1 = x.0 * y.1 + x.1 * y.0;
        let c2 = x.1 * y.1;
        // t^2 = -m1 t - m0
        let r0 = (c0 + c2 * (q - self.m0)) % q;
        let r1 = (c1 + c2 * (q - self.m1)) % q;
        (r0, r1)
    }

    pub fn pow(&self, x: E, e: u32) -> E {
        (0..e).fold((1, 0), |acc, _| self.mul(acc, x))
    }

    pub fn conj(&self, x: E) -> E {
        self.pow(x, self.q)
    }

    pub fn is_zero(x: E) -> bool {
        x == (0, 0)
    }

    pub fn inv(&self, x: E) -> E {
        *self.elements().iter().find(|&&y| self.mul(x, y) == (1, 0)).expect("nonzero")
    }

    /// Standard form Σ conj(x_i) y_i.
    pub fn form(&self, x: &[E], y: &[E]) -> E {
        x.iter().zip(y).fold((0, 0), |acc, (&a, &b)| self.add(acc, self.mul(self.conj(a), b)))
    }

    /// Σ x_i^(q+1), evaluated by repeated multiplication.
    pub fn surface(&self, x: &[E]) -> E {
        x.iter().fold((0, 0), |acc, &a| self.add(acc, self.pow(a, self.q + 1)))
    }

    pub fn normalize(&self, v: &[E]) -> Option<Vec<E>> {
        let lead = *v.iter().find(|&&a| !Self::is_zero(a))?;
        let inv = self.inv(lead);
        Some(v.iter().map(|&a| self.mul(a, inv)).collect())
    }

    /// Every normalized vector of length n.
    pub fn rays(&self, n: usize) -> Vec<Vec<E>> {
        let els = self.elements();
        let mut all: Vec<Vec<E>> = vec![vec![]];
        for _ in 0..n {
            all = all
                .into_iter()
                .flat_map(|v| els.iter().map(move |&e| [v.clone(), vec![e]].concat()))
                .collect();
        }
        all.into_iter().filter(|v| self.normalize(v).as_deref() == Some(v.as_slice())).collect()
    }

    /// Kernel points and lines of the standard form in dimension 4, lines
    /// as sets of point indices. Brute force over all rays and all
    /// orthogonal pairs.
    pub fn kernel(&self) -> (Vec<Vec<E>>, BTreeSet<Vec<usize>>) {
        let points: Vec<Vec<E>> = self.rays(4).into_iter().filter(|v| Self::is_zero(self.surface(v))).collect();
        let positions: HashMap<&[E], usize> = points.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let index = |v: &[E]| positions.get(v).copied();
        let els = self.elements();
        let mut lines = BTreeSet::new();
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if !Self::is_zero(self.form(&points[i], &points[j])) {
                    continue;
                }
                let mut members = BTreeSet::new();
                for &a in &els {
                    for &b in &els {
                        let v: Vec<E> = (0..4)
                            .map(|c| self.add(self.mul(a, points[i][c]), self.mul(b, points[j][c])))
                            .collect();
                        if let Some(n) = self.normalize(&v) {
                            members.insert(index(&n).expect("span of isotropic pair stays in the kernel"));
                        }
                    }
                }
                lines.insert(members.into_iter().collect());
            }
        }
        (points, lines)
    }
}
