//! Exact rational polyhedral cones: double description, dual descriptions,
//! lattice points of sections, faces, Hilbert bases and saturation checks.
//!
//! A [`RationalCone`] stores both descriptions in canonical form. For a cone
//! with a lineality space `L`, the ray list contains `+-` a canonical basis of
//! `L` plus the extreme rays projected onto `L^perp`; facets are handled the
//! same way with the equations of the cone. Both lists are primitive and
//! sorted, so two equal cones have byte-identical descriptions.

pub mod dd;
pub mod face;
pub mod hilbert;
pub mod lattice;
pub mod linalg;
pub mod saturation;

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use linalg::{canonical_basis, dot_i64, negated, project_out, rank_of, to_big, to_i64, IntVec};

pub use face::{is_face, FaceCheck};
pub use hilbert::{hilbert_basis, HilbertBasis};
pub use lattice::{lattice_points_in_section, lattice_points_of_degree};
pub use saturation::{saturation_check, SaturationReport, SectionComparison};
pub use face::supports_face;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCone {
    ambient_dim: usize,
    rays: Vec<IntVec>,
    facets: Vec<IntVec>,
    pointed: bool,
}

/// Canonical list from DD output: `+-` lineality basis plus projected rays.
fn canonical_generators(g: dd::Generators, dim: usize) -> (Vec<IntVec>, usize) {
    let basis = canonical_basis(&g.lineality, dim);
    let mut out: Vec<IntVec> = Vec::new();
    for b in &basis {
        out.push(b.clone());
        out.push(negated(b));
    }
    for r in &g.rays {
        let p = project_out(r, &basis);
        if !linalg::is_zero(&p) {
            out.push(p);
        }
    }
    out.sort();
    out.dedup();
    (out, basis.len())
}

impl RationalCone {
    /// Cone generated by the given vectors.
    pub fn conic_hull(points: &[Vec<i64>]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let dim = first.len();
        let big: Vec<IntVec> = points
            .iter()
            .map(|p| {
                if p.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, got: p.len() });
                }
                Ok(to_big(p))
            })
            .collect::<Result<_>>()?;
        Ok(Self::from_generators(&big, dim))
    }

    pub fn from_generators(generators: &[IntVec], dim: usize) -> Self {
        let (facets, _) = canonical_generators(dd::generators(generators, dim), dim);
        let (rays, lineality_dim) = canonical_generators(dd::generators(&facets, dim), dim);
        RationalCone { ambient_dim: dim, rays, facets, pointed: lineality_dim == 0 }
    }

    /// Cone `{x : <u, x> >= 0 for all u in facets}`.
    pub fn from_facets(facets: &[IntVec], dim: usize) -> Self {
        let (rays, lineality_dim) = canonical_generators(dd::generators(facets, dim), dim);
        let (facets, _) = canonical_generators(dd::generators(&rays, dim), dim);
        RationalCone { ambient_dim: dim, rays, facets, pointed: lineality_dim == 0 }
    }

    /// Polar dual: rays and facets trade places.
    pub fn dualize(&self) -> Self {
        RationalCone {
            ambient_dim: self.ambient_dim,
            rays: self.facets.clone(),
            facets: self.rays.clone(),
            pointed: rank_of(&self.rays) == self.ambient_dim,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn facets(&self) -> &[IntVec] {
        &self.facets
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    /// Dimension of the linear span of the cone.
    pub fn dim(&self) -> usize {
        rank_of(&self.rays)
    }

    pub fn rays_i64(&self) -> Result<Vec<Vec<i64>>> {
        self.rays.iter().map(|r| to_i64(r)).collect()
    }

    pub fn facets_i64(&self) -> Result<Vec<Vec<i64>>> {
        self.facets.iter().map(|r| to_i64(r)).collect()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.facets.iter().all(|u| !dot_i64(u, x).is_negative())
    }

    /// Facet normals that vanish on `x`.
    pub fn tight_facets(&self, x: &[i64]) -> Vec<usize> {
        (0..self.facets.len()).filter(|&k| dot_i64(&self.facets[k], x).is_zero()).collect()
    }

    /// `dim d` header followed by one facet per line.
    pub fn to_hrep_text(&self) -> String {
        format_vectors(self.ambient_dim, &self.facets)
    }

    /// Same layout as the H-representation, listing rays.
    pub fn to_vrep_text(&self) -> String {
        format_vectors(self.ambient_dim, &self.rays)
    }

    pub fn from_hrep_text(text: &str) -> Result<Self> {
        let (dim, facets) = parse_vectors(text)?;
        Ok(Self::from_facets(&facets, dim))
    }
}

pub fn format_vectors(dim: usize, vectors: &[IntVec]) -> String {
    let mut out = String::new();
    writeln!(out, "dim {dim}").unwrap();
    for v in vectors {
        let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", parts.join(" ")).unwrap();
    }
    out
}

pub fn parse_vectors(text: &str) -> Result<(usize, Vec<IntVec>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("missing 'dim d' header".into()))?;
    let dim = header
        .trim()
        .strip_prefix("dim ")
        .and_then(|d| d.trim().parse::<usize>().ok())
        .ok_or_else(|| Error::Parse(format!("bad header '{header}'")))?;
    let mut out = Vec::new();
    for line in lines {
        let v: IntVec = line
            .split_whitespace()
            .map(|t| t.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad integer '{t}'"))))
            .collect::<Result<_>>()?;
        if v.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
        }
        out.push(v);
    }
    Ok((dim, out))
}

#[cfg(test)]
fn vanishes_on(u: &[BigInt], r: &[BigInt]) -> bool {
    linalg::dot(u, r).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bs(v: &[&[i64]]) -> Vec<IntVec> {
        v.iter().map(|x| to_big(x)).collect()
    }

    #[test]
    fn first_orthant() {
        let c = RationalCone::conic_hull(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(c.rays(), bs(&[&[0, 1], &[1, 0]]).as_slice());
        assert_eq!(c.facets(), bs(&[&[0, 1], &[1, 0]]).as_slice());
        assert!(c.is_pointed());
        assert_eq!(c.dualize(), c);
    }

    #[test]
    fn interior_point_dropped() {
        let c = RationalCone::conic_hull(&[vec![1, 0], vec![1, 1], vec![1, 2]]).unwrap();
        assert_eq!(c.rays(), bs(&[&[1, 0], &[1, 2]]).as_slice());
        assert_eq!(c.facets(), bs(&[&[0, 1], &[2, -1]]).as_slice());
    }

    #[test]
    fn halfplane_dual_is_ray() {
        let c = RationalCone::conic_hull(&[vec![1, 0], vec![-1, 0], vec![0, 1]]).unwrap();
        assert!(!c.is_pointed());
        assert_eq!(c.facets(), bs(&[&[0, 1]]).as_slice());
        let d = c.dualize();
        assert_eq!(d.rays(), bs(&[&[0, 1]]).as_slice());
        assert!(d.is_pointed());
        assert_eq!(d.dualize(), c);
    }

    #[test]
    fn origin_cone_dual_is_everything() {
        let c = RationalCone::conic_hull(&[vec![0, 0]]).unwrap();
        assert!(c.rays().is_empty());
        let d = c.dualize();
        assert!(d.facets().is_empty());
        assert_eq!(d.rays().len(), 4);
        assert!(!d.is_pointed());
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(RationalCone::conic_hull(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn lower_dimensional_hull() {
        // a 2-dimensional wedge inside R^3
        let c = RationalCone::conic_hull(&[vec![1, 0, 0], vec![1, 1, 0]]).unwrap();
        assert_eq!(c.rays(), bs(&[&[1, 0, 0], &[1, 1, 0]]).as_slice());
        assert_eq!(c.dim(), 2);
        assert!(c.contains(&[2, 1, 0]));
        assert!(!c.contains(&[2, 1, 1]));
        assert!(!c.contains(&[0, 1, 0]));
    }

    #[test]
    fn hrep_text_round_trip() {
        let c = RationalCone::conic_hull(&[vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![1, 1, 1]]).unwrap();
        let text = c.to_hrep_text();
        assert!(text.starts_with("dim 3\n"));
        assert!(text.lines().all(|l| l == l.trim_end()));
        assert_eq!(RationalCone::from_hrep_text(&text).unwrap(), c);
        assert!(RationalCone::from_hrep_text("dims 3\n").is_err());
        assert!(RationalCone::from_hrep_text("dim 2\n1 2 3\n").is_err());
    }

    proptest! {
        #[test]
        fn double_description_round_trip(
            pts in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 3), 1..9)
        ) {
            let c = RationalCone::conic_hull(&pts).unwrap();
            // every generator satisfies every facet
            for r in c.rays() {
                for u in c.facets() {
                    prop_assert!(!linalg::dot(u, r).is_negative());
                }
            }
            for p in &pts {
                prop_assert!(c.contains(p));
            }
            // hull of the rays is the same cone
            let again = RationalCone::from_generators(c.rays(), 3);
            prop_assert_eq!(&again, &c);
            prop_assert_eq!(c.dualize().dualize(), c.clone());
            // pointed cones: each ray lies on at least dim - 1 facets
            if c.is_pointed() && c.dim() == 3 {
                for r in c.rays() {
                    let tight = c.facets().iter().filter(|u| vanishes_on(u, r)).count();
                    prop_assert!(tight >= 2);
                }
            }
        }
    }
}
