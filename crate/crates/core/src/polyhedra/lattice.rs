//! Lattice points of bounded sections of a cone.
//!
//! The section is bounded by the exact vertex box (vertices from a double
//! description of the homogenized system), then enumerated coordinate by
//! coordinate. At each level the admissible range of the next coordinate is
//! tightened by every inequality, using the box for the coordinates not yet fixed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::dd;
use super::linalg::{to_i64, IntVec};
use super::RationalCone;
use crate::error::{Error, Result};

/// `coeffs . x + constant >= 0`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineInequality {
    pub coeffs: Vec<i64>,
    pub constant: i64,
}

pub enum Vertices {
    Empty,
    Bounded(Vec<Vec<BigRational>>),
}

/// Vertices of `{x : coeffs . x + constant >= 0}`; rejects unbounded systems.
pub fn polytope_vertices(rows: &[AffineInequality], dim: usize) -> Result<Vertices> {
    let mut hom: Vec<IntVec> = rows
        .iter()
        .map(|r| {
            let mut v = vec![BigInt::from(r.constant)];
            v.extend(r.coeffs.iter().map(|&c| BigInt::from(c)));
            v
        })
        .collect();
    let mut t = vec![BigInt::zero(); dim + 1];
    t[0] = BigInt::from(1);
    hom.push(t);
    let g = dd::generators(&hom, dim + 1);
    if let Some(l) = g.lineality.first() {
        return Err(Error::UnboundedSection { ray: to_i64(&l[1..]).unwrap_or_default() });
    }
    let mut vertices = Vec::new();
    for r in &g.rays {
        if r[0].is_zero() {
            return Err(Error::UnboundedSection { ray: to_i64(&r[1..]).unwrap_or_default() });
        }
        let t = &r[0];
        vertices.push(r[1..].iter().map(|x| BigRational::new(x.clone(), t.clone())).collect());
    }
    if vertices.is_empty() {
        return Ok(Vertices::Empty);
    }
    Ok(Vertices::Bounded(vertices))
}

fn integer_box(vertices: &[Vec<BigRational>], dim: usize) -> Result<Vec<(i64, i64)>> {
    (0..dim)
        .map(|k| {
            let lo = vertices.iter().map(|v| v[k].ceil().to_integer()).min().unwrap();
            let hi = vertices.iter().map(|v| v[k].floor().to_integer()).max().unwrap();
            let lo = lo.to_i64().ok_or_else(|| Error::Overflow(lo.to_string()))?;
            let hi = hi.to_i64().ok_or_else(|| Error::Overflow(hi.to_string()))?;
            Ok((lo, hi))
        })
        .collect()
}

/// All integer points of a bounded system, in lexicographic order.
pub fn enumerate_polytope(rows: &[AffineInequality], dim: usize) -> Result<Vec<Vec<i64>>> {
    let vertices = match polytope_vertices(rows, dim)? {
        Vertices::Empty => return Ok(Vec::new()),
        Vertices::Bounded(v) => v,
    };
    let bounds = integer_box(&vertices, dim)?;
    Ok(enumerate_in_box(rows, &bounds))
}

/// Integer points of the system inside `bounds`, lexicographic order.
pub fn enumerate_in_box(rows: &[AffineInequality], bounds: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let dim = bounds.len();
    if bounds.iter().any(|(lo, hi)| lo > hi) {
        return Vec::new();
    }
    // suffix_max[r][k] = max over the box of sum_{j >= k} c_j x_j
    let suffix_max: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            let mut s = vec![0i128; dim + 1];
            for k in (0..dim).rev() {
                let c = r.coeffs[k] as i128;
                let (lo, hi) = (bounds[k].0 as i128, bounds[k].1 as i128);
                s[k] = s[k + 1] + (c * lo).max(c * hi);
            }
            s
        })
        .collect();
    let mut out = Vec::new();
    let mut x = vec![0i64; dim];
    let mut partial: Vec<i128> = rows.iter().map(|r| r.constant as i128).collect();
    recurse(rows, bounds, &suffix_max, 0, &mut x, &mut partial, &mut out);
    out
}

fn recurse(
    rows: &[AffineInequality],
    bounds: &[(i64, i64)],
    suffix_max: &[Vec<i128>],
    k: usize,
    x: &mut Vec<i64>,
    partial: &mut Vec<i128>,
    out: &mut Vec<Vec<i64>>,
) {
    let dim = bounds.len();
    if k == dim {
        if partial.iter().all(|&p| p >= 0) {
            out.push(x.clone());
        }
        return;
    }
    let (mut lo, mut hi) = (bounds[k].0 as i128, bounds[k].1 as i128);
    for (r, row) in rows.iter().enumerate() {
        let c = row.coeffs[k] as i128;
        let slack = partial[r] + suffix_max[r][k + 1];
        if c > 0 {
            // c x >= -slack
            lo = lo.max(Integer::div_ceil(&(-slack), &c));
        } else if c < 0 {
            // -c x <= slack
            hi = hi.min(Integer::div_floor(&slack, &(-c)));
        } else if slack < 0 {
            return;
        }
        if lo > hi {
            return;
        }
    }
    for v in lo..=hi {
        x[k] = v as i64;
        for (r, row) in rows.iter().enumerate() {
            partial[r] += row.coeffs[k] as i128 * v;
        }
        recurse(rows, bounds, suffix_max, k + 1, x, partial, out);
        for (r, row) in rows.iter().enumerate() {
            partial[r] -= row.coeffs[k] as i128 * v;
        }
    }
}

/// Integer `psi` with `(lambda, psi)` in the cone; the first `lambda.len()`
/// coordinates of the ambient space are the fixed block.
pub fn lattice_points_in_section(cone: &RationalCone, lambda: &[i64]) -> Result<Vec<Vec<i64>>> {
    let d = cone.ambient_dim();
    let fixed = lambda.len();
    if fixed > d {
        return Err(Error::DimensionMismatch { expected: d, got: fixed });
    }
    let free = d - fixed;
    let rows: Vec<AffineInequality> = cone
        .facets_i64()?
        .into_iter()
        .map(|u| AffineInequality {
            constant: u[..fixed].iter().zip(lambda).map(|(a, b)| a * b).sum(),
            coeffs: u[fixed..].to_vec(),
        })
        .collect();
    enumerate_polytope(&rows, free).map_err(|e| match e {
        Error::UnboundedSection { ray } => {
            let mut full = vec![0; fixed];
            full.extend(ray);
            Error::UnboundedSection { ray: full }
        }
        other => other,
    })
}

/// Integer points `x` of a pointed cone with `grading . x == degree`.
pub fn lattice_points_of_degree(cone: &RationalCone, grading: &[i64], degree: i64) -> Result<Vec<Vec<i64>>> {
    let d = cone.ambient_dim();
    if grading.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: grading.len() });
    }
    let mut rows: Vec<AffineInequality> =
        cone.facets_i64()?.into_iter().map(|u| AffineInequality { coeffs: u, constant: 0 }).collect();
    rows.push(AffineInequality { coeffs: grading.to_vec(), constant: -degree });
    rows.push(AffineInequality { coeffs: grading.iter().map(|g| -g).collect(), constant: degree });
    // vertices of the slice are the rays scaled to the requested degree
    let rays = cone.rays_i64()?;
    let mut vertices = Vec::new();
    for r in &rays {
        let g: i64 = r.iter().zip(grading).map(|(a, b)| a * b).sum();
        if g <= 0 {
            return Err(Error::BadGrading(grading.to_vec()));
        }
        vertices.push(r.iter().map(|&x| BigRational::new(BigInt::from(x * degree), BigInt::from(g))).collect());
    }
    if vertices.is_empty() {
        return Ok(if degree == 0 { vec![vec![0; d]] } else { Vec::new() });
    }
    if degree < 0 {
        return Ok(Vec::new());
    }
    let bounds = integer_box(&vertices, d)?;
    Ok(enumerate_in_box(&rows, &bounds))
}
