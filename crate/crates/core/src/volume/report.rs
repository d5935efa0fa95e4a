//! Partition of the PT region into disjoint cells generated by CPT, EBC and
//! TLG, with closed-form and Monte Carlo volumes side by side.

use serde::{Deserialize, Serialize};

use super::analytic::{analytic_volume, catalog_measure};
use super::mc::{mc_counts, sigma};
use super::{BaseRegion, Measure, RegionSpec};
use crate::error::VolumeError;
use crate::geometry::Hypersurface;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    /// One disjoint cell of the partition.
    Cell,
    /// A union of cells, i.e. one of the named regions.
    Region,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub kind: RowKind,
    pub name: String,
    pub analytic: Option<f64>,
    pub mc: f64,
    #[serde(rename = "stdError")]
    pub std_error: f64,
    pub deviation_sigma: Option<f64>,
    pub analytic_fraction_of_pt: Option<f64>,
    pub mc_fraction_of_pt: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub surface: Hypersurface,
    pub measure: Measure,
    pub samples: u64,
    pub seed: u64,
    pub rows: Vec<ReportRow>,
}

impl Report {
    pub fn row(&self, name: &str) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.name == name)
    }
}

/// Cells indexed by `cpt | ebc << 1 | tlg << 2` inside PT (EBC ⊆ CPT, so
/// the index with `ebc` set and `cpt` clear never occurs).
const CELLS: [(&str, usize); 6] = [
    ("PT-CPT-TLG", 0b000),
    ("PTxTLG-CPT", 0b100),
    ("CPT-EBC-TLG", 0b001),
    ("CPTxTLG-EBC", 0b101),
    ("EBC-TLG", 0b011),
    ("EBCxTLG", 0b111),
];
const OUTSIDE: usize = 8;

/// Which cell indices make up each named region.
fn region_cells(base: BaseRegion) -> Vec<usize> {
    let mut v: Vec<usize> = (0..8)
        .filter(|&i| {
            let (cpt, ebc, tlg) = (i & 1 != 0, i & 2 != 0, i & 4 != 0);
            match base {
                BaseRegion::Pt => true,
                BaseRegion::Cpt => cpt,
                BaseRegion::Ebc => ebc,
                BaseRegion::PtTlg => tlg,
                BaseRegion::CptTlg => cpt && tlg,
                BaseRegion::EbcTlg => ebc && tlg,
                BaseRegion::Tlg => false,
            }
        })
        .collect();
    v.retain(|i| CELLS.iter().any(|(_, c)| c == i));
    v
}

fn cell_analytic(name: &str, v: impl Fn(BaseRegion) -> Option<f64>) -> Option<f64> {
    use BaseRegion::*;
    let x = match name {
        "PT-CPT-TLG" => v(Pt)? - v(Cpt)? - v(PtTlg)? + v(CptTlg)?,
        "PTxTLG-CPT" => v(PtTlg)? - v(CptTlg)?,
        "CPT-EBC-TLG" => v(Cpt)? - v(Ebc)? - v(CptTlg)? + v(EbcTlg)?,
        "CPTxTLG-EBC" => v(CptTlg)? - v(EbcTlg)?,
        "EBC-TLG" => v(Ebc)? - v(EbcTlg)?,
        "EBCxTLG" => v(EbcTlg)?,
        _ => return None,
    };
    // Empty cells come out of the inclusion-exclusion as rounding noise.
    Some(if x.abs() < 1e-14 * v(Pt)? { 0.0 } else { x })
}

/// Builds the partition table for `surface` from one Monte Carlo pass.
///
/// Volumes are stated in the measure the closed forms use on that surface.
pub fn summary_report(
    surface: Hypersurface,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<Report, VolumeError> {
    let counts = mc_counts(surface, samples, seed, workers, OUTSIDE + 1, |c| {
        if !BaseRegion::Pt.contains(c) {
            return OUTSIDE;
        }
        usize::from(c.is_cpt(0.0))
            | usize::from(c.is_ebc(0.0)) << 1
            | usize::from(BaseRegion::PtTlg.contains(c)) << 2
    })?;

    let measure = catalog_measure(surface);
    let scale = {
        let flat = RegionSpec::new(BaseRegion::Pt, surface)
            .bounding_box()
            .volume();
        match measure {
            Measure::Lebesgue => flat,
            Measure::HilbertSchmidt => flat * surface.measure_density().value(),
        }
    };
    let n = samples as f64;
    let estimate = |hits: u64| {
        let p = hits as f64 / n;
        (p * scale, (p * (1.0 - p) / n).sqrt() * scale)
    };
    let analytic = |base: BaseRegion| {
        analytic_volume(&RegionSpec::new(base, surface)).map(|a| a.in_measure(surface, measure))
    };

    let pt_hits: u64 = CELLS.iter().map(|(_, i)| counts[*i]).sum();
    let pt_mc = estimate(pt_hits).0;
    let pt_analytic = analytic(BaseRegion::Pt);

    let make_row = |kind, name: &str, hits: u64, exact: Option<f64>| {
        let (mc, se) = estimate(hits);
        ReportRow {
            kind,
            name: name.to_string(),
            analytic: exact,
            mc,
            std_error: se,
            deviation_sigma: exact.map(|a| sigma(mc - a, se)),
            analytic_fraction_of_pt: exact.zip(pt_analytic).map(|(a, p)| a / p),
            mc_fraction_of_pt: if pt_mc > 0.0 { mc / pt_mc } else { 0.0 },
        }
    };

    let mut rows = Vec::new();
    for (name, index) in CELLS {
        rows.push(make_row(
            RowKind::Cell,
            name,
            counts[index],
            cell_analytic(name, analytic),
        ));
    }
    for base in [
        BaseRegion::Pt,
        BaseRegion::Cpt,
        BaseRegion::Ebc,
        BaseRegion::PtTlg,
        BaseRegion::CptTlg,
    ] {
        let hits = region_cells(base).iter().map(|i| counts[*i]).sum();
        rows.push(make_row(RowKind::Region, base.name(), hits, analytic(base)));
    }

    Ok(Report {
        surface,
        measure,
        samples,
        seed,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn full_space_fractions() {
        let rep = summary_report(Hypersurface::Full3D, 400_000, 7, 4).unwrap();
        let not_cpt: f64 = ["PT-CPT-TLG", "PTxTLG-CPT"]
            .iter()
            .map(|n| rep.row(n).unwrap().analytic_fraction_of_pt.unwrap())
            .sum();
        assert!((not_cpt - 5.0 / 9.0).abs() < 1e-15);

        let smallest = rep.row("EBCxTLG").unwrap();
        let expect = 0.25 * 3.0 * PI / 16.0 * 4.0 / 9.0;
        assert!((smallest.analytic_fraction_of_pt.unwrap() - expect).abs() < 1e-15);
        let min_cell = rep
            .rows
            .iter()
            .filter(|r| r.kind == RowKind::Cell)
            .min_by(|a, b| a.analytic.unwrap().total_cmp(&b.analytic.unwrap()))
            .unwrap();
        assert_eq!(min_cell.name, "EBCxTLG");
        for row in &rep.rows {
            assert!(row.deviation_sigma.unwrap().abs() < 4.0, "{row:?}");
        }
    }

    #[test]
    fn cells_partition_pt() {
        for s in Hypersurface::ALL {
            let rep = summary_report(s, 50_000, 1, 2).unwrap();
            let cells: f64 = rep
                .rows
                .iter()
                .filter(|r| r.kind == RowKind::Cell)
                .map(|r| r.mc)
                .sum();
            let pt = rep.row("PT").unwrap();
            assert!((cells - pt.mc).abs() < 1e-12, "{s}");
            let exact: f64 = rep
                .rows
                .iter()
                .filter(|r| r.kind == RowKind::Cell)
                .map(|r| r.analytic.unwrap())
                .sum();
            assert!((exact - pt.analytic.unwrap()).abs() < 1e-14, "{s}");
        }
    }

    #[test]
    fn coinciding_regions_on_l1_zero() {
        let rep = summary_report(Hypersurface::NonInvertibleL1, 100_000, 3, 2).unwrap();
        let v = |n: &str| rep.row(n).unwrap().mc;
        assert_eq!(v("PT"), v("CPT"));
        assert_eq!(v("CPT"), v("EBC"));
        assert_eq!(v("PTxTLG"), 0.0);
    }

    #[test]
    fn empty_cells_are_exactly_zero() {
        let rep = summary_report(Hypersurface::Isotropic, 100_000, 3, 2).unwrap();
        for name in ["PTxTLG-CPT", "CPT-EBC-TLG"] {
            let row = rep.row(name).unwrap();
            assert_eq!(row.analytic, Some(0.0));
            assert_eq!(row.mc, 0.0);
            assert_eq!(row.deviation_sigma, Some(0.0));
        }
    }

    #[test]
    fn isotropic_cpt_fraction() {
        let rep = summary_report(Hypersurface::Isotropic, 200_000, 3, 2).unwrap();
        let f = rep.row("CPT").unwrap().analytic_fraction_of_pt.unwrap();
        assert!((f - 0.7364).abs() < 1e-4);
    }
}
