use std::sync::Arc;

use rayon::prelude::*;

use super::{KernelGeometry, ProjectivePoint};
use crate::error::{Error, Result};
use crate::galois::FieldSpec;
use crate::hermitian::{FieldVector, HermitianForm};

pub const GUARD_MAX_DIM: usize = 4;
pub const GUARD_MAX_Q: u32 = 5;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Lift the dim <= 4, q <= 5 guard.
    pub guard_override: bool,
    /// Partition the enumeration over threads. Output order is unaffected.
    pub parallel: bool,
}

/// Normalized rays whose leading 1 sits at `lead`, tail indices in `range`.
fn rays_with_lead(spec: &FieldSpec, dim: usize, lead: usize, range: std::ops::Range<u64>) -> Vec<Vec<u32>> {
    let order = spec.order() as u64;
    let tail = dim - lead - 1;
    range
        .map(|mut n| {
            let mut v = vec![0u32; dim];
            v[lead] = 1;
            // Last coordinate varies fastest.
            for slot in v[lead + 1..].iter_mut().rev() {
                *slot = (n % order) as u32;
                n /= order;
            }
            debug_assert!(tail == 0 || n == 0);
            v
        })
        .collect()
}

/// Chunks of the ray space: one per (lead position, first free coordinate).
fn ray_partitions(spec: &FieldSpec, dim: usize) -> Vec<(usize, std::ops::Range<u64>)> {
    let order = spec.order() as u64;
    let mut parts = Vec::new();
    for lead in 0..dim {
        let tail = (dim - lead - 1) as u32;
        let total = order.pow(tail);
        let chunk = if tail == 0 { 1 } else { order.pow(tail - 1) };
        let mut start = 0;
        while start < total {
            parts.push((lead, start..(start + chunk).min(total)));
            start += chunk;
        }
    }
    parts
}

/// Points of the line spanned by kernel points `i` and `j`, if the whole
/// line lies in the kernel; sorted.
fn line_through(form: &HermitianForm, spec: &Arc<FieldSpec>, index: &std::collections::HashMap<Vec<u32>, usize>, a: &[u32], b: &[u32], j: usize) -> Option<Vec<usize>> {
    let mut members = Vec::with_capacity(spec.order() as usize + 1);
    members.push(j);
    for lambda in 0..spec.order() {
        let v: Vec<u32> = a.iter().zip(b).map(|(&x, &y)| spec.add_raw(x, spec.mul_raw(lambda, y))).collect();
        let v = FieldVector::from_raw(spec, v).normalized()?;
        if form.evaluate_raw(v.raw(), v.raw()) != 0 {
            return None;
        }
        members.push(*index.get(v.raw())?);
    }
    members.sort_unstable();
    Some(members)
}

/// All self-orthogonal rays of `form` and all totally isotropic lines.
///
/// Points are ordered by coordinate index sequence, lines by their sorted
/// point-index lists, so serial and parallel runs agree exactly.
pub fn enumerate_kernel(form: &HermitianForm, opts: EnumerationOptions) -> Result<KernelGeometry> {
    let spec = Arc::clone(form.spec());
    let q = spec.q().ok_or(Error::NoInvolution)?;
    let dim = form.dim();
    if !opts.guard_override && (dim > GUARD_MAX_DIM || q > GUARD_MAX_Q) {
        return Err(Error::TooLarge { dim, q });
    }

    let parts = ray_partitions(&spec, dim);
    let scan = |(lead, range): &(usize, std::ops::Range<u64>)| -> Vec<Vec<u32>> {
        rays_with_lead(&spec, dim, *lead, range.clone())
            .into_iter()
            .filter(|v| form.evaluate_raw(v, v) == 0)
            .collect()
    };
    let mut raw_points: Vec<Vec<u32>> = if opts.parallel {
        parts.par_iter().flat_map_iter(scan).collect()
    } else {
        parts.iter().flat_map(scan).collect()
    };
    raw_points.sort_unstable();

    let index: std::collections::HashMap<Vec<u32>, usize> =
        raw_points.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();

    // Each line is reported once, from its two smallest point indices.
    let lines_from = |i: usize| -> Vec<Vec<usize>> {
        let a = &raw_points[i];
        let mut found = Vec::new();
        for (j, b) in raw_points.iter().enumerate().skip(i + 1) {
            if form.evaluate_raw(a, b) != 0 {
                continue;
            }
            if let Some(line) = line_through(form, &spec, &index, a, b, j) {
                if line[0] == i && line[1] == j {
                    found.push(line);
                }
            }
        }
        found
    };
    let n = raw_points.len();
    let mut lines: Vec<Vec<usize>> = if opts.parallel {
        (0..n).into_par_iter().flat_map_iter(lines_from).collect()
    } else {
        (0..n).flat_map(lines_from).collect()
    };
    lines.sort_unstable();

    let points = raw_points
        .into_iter()
        .map(|v| ProjectivePoint::from_vector(&FieldVector::from_raw(&spec, v)).expect("nonzero ray"))
        .collect();
    Ok(KernelGeometry::from_parts_unchecked(form.clone(), points, lines))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;
    use crate::hermitian::standard_form;

    #[test]
    fn ray_count() {
        let f = build_field(2, 2, None).unwrap();
        let total: usize = ray_partitions(&f, 4)
            .into_iter()
            .map(|(lead, r)| rays_with_lead(&f, 4, lead, r).len())
            .sum();
        assert_eq!(total, 85);
    }

    #[test]
    fn small_dimensions() {
        let f = build_field(2, 2, None).unwrap();
        let g1 = enumerate_kernel(&standard_form(&f, 1).unwrap(), Default::default()).unwrap();
        assert!(g1.points().is_empty() && g1.lines().is_empty());
        // dim 2: q + 1 isotropic points, no lines
        let g2 = enumerate_kernel(&standard_form(&f, 2).unwrap(), Default::default()).unwrap();
        assert_eq!((g2.points().len(), g2.lines().len()), (3, 0));
        // dim 3: the Hermitian curve, q^3 + 1 points
        let g3 = enumerate_kernel(&standard_form(&f, 3).unwrap(), Default::default()).unwrap();
        assert_eq!((g3.points().len(), g3.lines().len()), (9, 0));
    }

    #[test]
    fn guard() {
        let f = build_field(7, 2, None).unwrap();
        let form = standard_form(&f, 2).unwrap();
        assert_eq!(enumerate_kernel(&form, Default::default()).unwrap_err(), Error::TooLarge { dim: 2, q: 7 });
        let opts = EnumerationOptions { guard_override: true, parallel: false };
        assert_eq!(enumerate_kernel(&form, opts).unwrap().points().len(), 8);
        let g = build_field(2, 2, None).unwrap();
        let five = standard_form(&g, 5).unwrap();
        assert!(matches!(enumerate_kernel(&five, Default::default()), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn parallel_matches_serial() {
        let f = build_field(3, 2, None).unwrap();
        let form = standard_form(&f, 4).unwrap();
        let a = enumerate_kernel(&form, EnumerationOptions { guard_override: false, parallel: false }).unwrap();
        let b = enumerate_kernel(&form, EnumerationOptions { guard_override: false, parallel: true }).unwrap();
        assert_eq!(a.points(), b.points());
        assert_eq!(a.lines(), b.lines());
    }
}
