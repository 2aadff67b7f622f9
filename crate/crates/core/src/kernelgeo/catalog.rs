//! Self-describing point/line catalogs (JSON and CSV).

use serde::{Deserialize, Serialize};

use super::{KernelGeometry, ProjectivePoint};
use crate::error::{Error, Result};
use crate::galois::{ElementJson, FieldSpec, FieldSpecJson};
use crate::hermitian::{FieldVector, FormJson, HermitianForm};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogHeader {
    pub p: u32,
    pub k: u32,
    pub dim: usize,
    pub modulus: Vec<u32>,
    pub point_count: usize,
    pub line_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelCatalog {
    pub header: CatalogHeader,
    pub form: FormJson,
    pub points: Vec<Vec<ElementJson>>,
    pub lines: Vec<Vec<usize>>,
}

impl KernelCatalog {
    pub fn from_geometry(geom: &KernelGeometry) -> Self {
        let spec = geom.form().spec();
        KernelCatalog {
            header: CatalogHeader {
                p: spec.p(),
                k: spec.k(),
                dim: geom.dim(),
                modulus: spec.modulus().to_vec(),
                point_count: geom.points().len(),
                line_count: geom.lines().len(),
            },
            form: geom.form().to_json(),
            points: geom.points().iter().map(|p| p.coords().to_json()).collect(),
            lines: geom.lines().to_vec(),
        }
    }

    /// Rebuilds the geometry and checks it against the form.
    pub fn to_geometry(&self) -> Result<KernelGeometry> {
        let h = &self.header;
        let spec = FieldSpec::from_json(&FieldSpecJson { p: h.p, k: h.k, modulus: h.modulus.clone() })?;
        let form = HermitianForm::from_json(&spec, &self.form)?;
        let points = self
            .points
            .iter()
            .map(|p| ProjectivePoint::from_vector(&FieldVector::from_json(&spec, p)?))
            .collect::<Result<Vec<_>>>()?;
        for line in &self.lines {
            if line.iter().any(|&i| i >= points.len()) || line.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidArgument("line lists must be sorted valid point indices".into()));
            }
        }
        let geom = KernelGeometry::from_parts_unchecked(form, points, self.lines.clone());
        geom.validate()?;
        Ok(geom)
    }

    /// CSV rendering: `#`-prefixed header records, then one row per point
    /// (coordinates as polynomial strings in t) and one per line (point
    /// indices).
    pub fn to_csv(&self, geom: &KernelGeometry) -> String {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        let h = &self.header;
        let modulus: Vec<String> = h.modulus.iter().map(u32::to_string).collect();
        let header_rows: [Vec<String>; 6] = [
            vec!["#p".into(), h.p.to_string()],
            vec!["#k".into(), h.k.to_string()],
            vec!["#dim".into(), h.dim.to_string()],
            [vec!["#modulus".to_string()], modulus].concat(),
            vec!["#points".into(), h.point_count.to_string()],
            vec!["#lines".into(), h.line_count.to_string()],
        ];
        for row in header_rows {
            w.write_record(&row).expect("in-memory write");
        }
        w.write_record(["kind", "index", "entries"]).expect("in-memory write");
        for (i, p) in geom.points().iter().enumerate() {
            let row = [vec!["point".to_string(), i.to_string()], p.coords().to_strings()].concat();
            w.write_record(&row).expect("in-memory write");
        }
        for (i, line) in geom.lines().iter().enumerate() {
            let row = [vec!["line".to_string(), i.to_string()], line.iter().map(usize::to_string).collect()].concat();
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;
    use crate::hermitian::standard_form;
    use crate::kernelgeo::enumerate_kernel;

    #[test]
    fn json_and_csv() {
        let f = build_field(2, 2, None).unwrap();
        let geom = enumerate_kernel(&standard_form(&f, 4).unwrap(), Default::default()).unwrap();
        let cat = KernelCatalog::from_geometry(&geom);
        let text = serde_json::to_string(&cat).unwrap();
        let back: KernelCatalog = serde_json::from_str(&text).unwrap();
        let g2 = back.to_geometry().unwrap();
        assert_eq!(g2.points(), geom.points());
        assert_eq!(g2.lines(), geom.lines());

        let csv = cat.to_csv(&geom);
        let mut rows = csv.lines();
        assert_eq!(rows.next(), Some("#p,2"));
        assert_eq!(csv.lines().filter(|l| l.starts_with("point,")).count(), 45);
        assert_eq!(csv.lines().filter(|l| l.starts_with("line,")).count(), 27);
        assert!(csv.contains("#modulus,1,1,1"));
    }

    #[test]
    fn tampered_catalog_rejected() {
        let f = build_field(2, 2, None).unwrap();
        let geom = enumerate_kernel(&standard_form(&f, 4).unwrap(), Default::default()).unwrap();
        let mut cat = KernelCatalog::from_geometry(&geom);
        cat.lines[0].pop();
        assert!(cat.to_geometry().is_err());
    }
}
