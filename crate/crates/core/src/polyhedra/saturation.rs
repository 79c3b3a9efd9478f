//! Comparison of cone sections with finite point data.

use std::collections::{BTreeMap, BTreeSet};

use super::lattice::lattice_points_in_section;
use super::RationalCone;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionComparison {
    pub lambda: Vec<i64>,
    pub cone_count: usize,
    pub data_count: usize,
    /// Integral points of the section that the data lacks.
    pub missing_from_data: Vec<Vec<i64>>,
    /// Data points outside the cone.
    pub missing_from_cone: Vec<Vec<i64>>,
}

impl SectionComparison {
    pub fn agrees(&self) -> bool {
        self.missing_from_data.is_empty() && self.missing_from_cone.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationReport {
    pub sections: Vec<SectionComparison>,
}

impl SaturationReport {
    pub fn saturated(&self) -> bool {
        self.sections.iter().all(SectionComparison::agrees)
    }

    pub fn first_discrepancy(&self) -> Option<&SectionComparison> {
        self.sections.iter().find(|s| !s.agrees())
    }
}

/// For each `lambda` in `data`, compares the integral points of the section of `cone`
/// over `lambda` with the given fibre. Cone points are `(lambda, psi)`.
pub fn saturation_check(
    cone: &RationalCone,
    data: &BTreeMap<Vec<i64>, BTreeSet<Vec<i64>>>,
) -> Result<SaturationReport> {
    let mut sections = Vec::with_capacity(data.len());
    for (lambda, fibre) in data {
        let section: BTreeSet<Vec<i64>> = lattice_points_in_section(cone, lambda)?.into_iter().collect();
        let missing_from_data = section.difference(fibre).cloned().collect();
        let missing_from_cone = fibre.difference(&section).cloned().collect();
        sections.push(SectionComparison {
            lambda: lambda.clone(),
            cone_count: section.len(),
            data_count: fibre.len(),
            missing_from_data,
            missing_from_cone,
        });
    }
    Ok(SaturationReport { sections })
}
