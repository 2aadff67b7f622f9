use std::collections::HashMap;

use serde::Serialize;

use super::KernelGeometry;
use crate::error::{Error, Result};
use crate::hermitian::{is_unitary, FieldMatrix};

/// How an operator moves the enumerated kernel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelAction {
    /// Image index of each point, or None if it left the kernel.
    pub point_images: Vec<Option<usize>>,
    /// Image index of each line, or None if its image is not a kernel line.
    pub line_images: Vec<Option<usize>>,
    pub point_escapes: usize,
    pub line_escapes: usize,
    pub is_point_permutation: bool,
    pub is_line_permutation: bool,
}

impl KernelAction {
    pub fn preserves_geometry(&self) -> bool {
        self.point_escapes == 0 && self.line_escapes == 0 && self.is_point_permutation && self.is_line_permutation
    }
}

fn is_permutation(images: &[Option<usize>]) -> bool {
    let mut seen = vec![false; images.len()];
    for img in images {
        match img {
            Some(i) if *i < seen.len() && !seen[*i] => seen[*i] = true,
            _ => return false,
        }
    }
    true
}

/// Applies `u` to every point and line. Requires `u` unitary for the
/// geometry's form.
pub fn unitary_action(geom: &KernelGeometry, u: &FieldMatrix) -> Result<KernelAction> {
    if !is_unitary(u, geom.form())? {
        return Err(Error::NotUnitary);
    }
    apply_operator(geom, u)
}

/// Same as [`unitary_action`] without the unitarity precondition, so that
/// non-unitary controls can be measured.
pub fn apply_operator(geom: &KernelGeometry, u: &FieldMatrix) -> Result<KernelAction> {
    let point_images = geom
        .points()
        .iter()
        .map(|p| Ok(geom.index_of_vector(&u.apply(p.coords())?)))
        .collect::<Result<Vec<_>>>()?;
    let by_members: HashMap<&[usize], usize> =
        geom.lines().iter().enumerate().map(|(i, l)| (l.as_slice(), i)).collect();
    let line_images: Vec<Option<usize>> = geom
        .lines()
        .iter()
        .map(|line| {
            let mut img: Vec<usize> = line.iter().map(|&p| point_images[p]).collect::<Option<Vec<_>>>()?;
            img.sort_unstable();
            by_members.get(img.as_slice()).copied()
        })
        .collect();
    Ok(KernelAction {
        point_escapes: point_images.iter().filter(|i| i.is_none()).count(),
        line_escapes: line_images.iter().filter(|i| i.is_none()).count(),
        is_point_permutation: is_permutation(&point_images),
        is_line_permutation: is_permutation(&line_images),
        point_images,
        line_images,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;
    use crate::hermitian::{random_unitary, standard_form};
    use crate::kernelgeo::enumerate_kernel;

    #[test]
    fn unitaries_permute_h34() {
        let f = build_field(2, 2, None).unwrap();
        let form = standard_form(&f, 4).unwrap();
        let geom = enumerate_kernel(&form, Default::default()).unwrap();
        for seed in 0..5 {
            let a = unitary_action(&geom, &random_unitary(&form, seed)).unwrap();
            assert!(a.preserves_geometry());
        }
    }

    #[test]
    fn shear_is_rejected_and_escapes() {
        let f = build_field(2, 2, None).unwrap();
        let form = standard_form(&f, 4).unwrap();
        let geom = enumerate_kernel(&form, Default::default()).unwrap();
        let shear = FieldMatrix::from_int_rows(&f, &[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap();
        assert_eq!(unitary_action(&geom, &shear).unwrap_err(), Error::NotUnitary);
        let a = apply_operator(&geom, &shear).unwrap();
        assert!(a.point_escapes > 0);
        assert!(!a.preserves_geometry());
    }
}
