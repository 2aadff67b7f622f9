use std::collections::BTreeMap;

use serde::Serialize;

use super::KernelGeometry;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OneOrAllViolation {
    pub point: usize,
    pub line: usize,
    /// Points of the line collinear with the point.
    pub collinear_count: usize,
    pub line_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniqueLineFailure {
    pub point: usize,
    pub line: usize,
    /// Lines through the point that meet the line.
    pub meeting_lines: usize,
}

/// Outcome of the exhaustive One-or-All check over non-incident pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OneOrAllReport {
    pub points: usize,
    pub lines: usize,
    pub pairs_checked: usize,
    /// collinear count -> number of (point, line) pairs
    pub distribution: BTreeMap<usize, usize>,
    pub violations: Vec<OneOrAllViolation>,
    /// Pairs where exactly one point of the line was collinear, so a unique
    /// line through the point meeting the line is expected.
    pub unique_line_checks: usize,
    pub unique_line_failures: Vec<UniqueLineFailure>,
}

impl OneOrAllReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.unique_line_failures.is_empty()
    }
}

/// For every point x and line U not through x, the points of U collinear
/// with x must number exactly one or all of U. When it is one, exactly one
/// line through x meets U.
pub fn verify_one_or_all(geom: &KernelGeometry) -> OneOrAllReport {
    let mut report = OneOrAllReport {
        points: geom.points().len(),
        lines: geom.lines().len(),
        pairs_checked: 0,
        distribution: BTreeMap::new(),
        violations: Vec::new(),
        unique_line_checks: 0,
        unique_line_failures: Vec::new(),
    };
    for x in 0..geom.points().len() {
        for (li, line) in geom.lines().iter().enumerate() {
            if geom.point_on_line(x, li) {
                continue;
            }
            report.pairs_checked += 1;
            let count = line.iter().filter(|&&y| geom.raw_form_value(x, y) == 0).count();
            *report.distribution.entry(count).or_insert(0) += 1;
            if count != 1 && count != line.len() {
                report.violations.push(OneOrAllViolation {
                    point: x,
                    line: li,
                    collinear_count: count,
                    line_size: line.len(),
                });
                continue;
            }
            if count == 1 {
                report.unique_line_checks += 1;
                let meeting = geom
                    .lines_through(x)
                    .iter()
                    .filter(|&&m| geom.line(m).iter().any(|p| line.binary_search(p).is_ok()))
                    .count();
                if meeting != 1 {
                    report.unique_line_failures.push(UniqueLineFailure { point: x, line: li, meeting_lines: meeting });
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;
    use crate::hermitian::{standard_form, FieldVector};
    use crate::kernelgeo::{enumerate_kernel, KernelGeometry};

    #[test]
    fn h34_passes() {
        let f = build_field(2, 2, None).unwrap();
        let geom = enumerate_kernel(&standard_form(&f, 4).unwrap(), Default::default()).unwrap();
        let r = verify_one_or_all(&geom);
        assert!(r.passed());
        assert_eq!(r.pairs_checked, 45 * 27 - 45 * 3);
        assert_eq!(r.distribution.keys().copied().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn fabricated_line_is_reported() {
        let f = build_field(2, 2, None).unwrap();
        let form = standard_form(&f, 4).unwrap();
        let geom = enumerate_kernel(&form, Default::default()).unwrap();
        // (1,1,0,0) and (1,0,1,0) are isotropic but not orthogonal, so their
        // projective line is a secant carrying q + 1 = 3 kernel points.
        let a = FieldVector::from_ints(&f, &[1, 1, 0, 0]);
        let c = FieldVector::from_ints(&f, &[1, 0, 1, 0]);
        assert!(!form.evaluate(&a, &c).unwrap().is_zero());
        let secant = geom.points_in_span(&[a, c]);
        assert_eq!(secant.len(), 3);
        let mut lines = geom.lines().to_vec();
        lines.push(secant);
        let fake = KernelGeometry::from_parts_unchecked(form, geom.points().to_vec(), lines);
        let r = verify_one_or_all(&fake);
        assert!(!r.passed());
        assert!(!r.violations.is_empty() || !r.unique_line_failures.is_empty());
        assert!(fake.validate().is_err());
    }
}
