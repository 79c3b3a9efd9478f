//! Double description method: generators of `{y : <a_k, y> >= 0 for all k}`.
//!
//! The cone is kept as `lineality + cone(rays)`. A constraint that is not
//! identically zero on the lineality space consumes one lineality direction;
//! otherwise rays are split by sign and adjacent positive/negative pairs are
//! combined. Adjacency is decided by the exact rank of the constraints both
//! rays satisfy with equality.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::{combine, dot, is_zero, negated, primitive, rank, IntVec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generators {
    pub lineality: Vec<IntVec>,
    pub rays: Vec<IntVec>,
}

#[derive(Clone)]
struct Ray {
    v: IntVec,
    zeros: Bits,
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn all_below(k: usize, len: usize) -> Self {
        let mut b = Bits::new(len);
        for i in 0..k {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter(move |b| word & (1 << b) != 0).map(move |b| w * 64 + b)
        })
    }
}

/// Normalizes, drops zero rows and duplicates, and sorts the constraints.
pub fn canonical_constraints(constraints: &[IntVec]) -> Vec<IntVec> {
    let mut cs: Vec<IntVec> = constraints.iter().filter(|c| !is_zero(c)).map(|c| primitive(c.clone())).collect();
    cs.sort();
    cs.dedup();
    cs
}

/// Generators of the cone cut out by `constraints` in `R^dim`.
pub fn generators(constraints: &[IntVec], dim: usize) -> Generators {
    let cs = canonical_constraints(constraints);
    let total = cs.len();
    let mut lineality: Vec<IntVec> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in cs.iter().enumerate() {
        if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l = lineality.remove(pos);
            let mut al = dot(a, &l);
            if al.is_negative() {
                l = negated(&l);
                al = -al;
            }
            for other in lineality.iter_mut() {
                let c = dot(a, other);
                if !c.is_zero() {
                    *other = primitive(combine(&al, other, &-c, &l));
                }
            }
            for r in rays.iter_mut() {
                let c = dot(a, &r.v);
                if !c.is_zero() {
                    r.v = primitive(combine(&al, &r.v, &-c, &l));
                }
                r.zeros.set(k);
            }
            rays.push(Ray { v: l, zeros: Bits::all_below(k, total) });
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        if values.iter().all(|v| !v.is_negative()) {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.zeros.set(k);
                }
            }
            continue;
        }

        let target = dim as isize - lineality.len() as isize - 2;
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.and(&rays[n].zeros);
                if target < 0 || (common.count() as isize) < target {
                    continue;
                }
                let rows: Vec<&[BigInt]> = common.iter().map(|j| cs[j].as_slice()).collect();
                if rank(&rows) as isize != target {
                    continue;
                }
                let v = primitive(combine(&values[p], &rays[n].v, &-&values[n], &rays[p].v));
                let mut zeros = common;
                zeros.set(k);
                next.push(Ray { v, zeros });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + next.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                r.zeros.set(k);
            }
            kept.push(r);
        }
        kept.extend(next);
        rays = kept;
    }

    Generators { lineality, rays: rays.into_iter().map(|r| r.v).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::linalg::to_big;

    fn sorted(mut v: Vec<IntVec>) -> Vec<IntVec> {
        v.sort();
        v
    }

    #[test]
    fn orthant() {
        let g = generators(&[to_big(&[1, 0]), to_big(&[0, 1])], 2);
        assert!(g.lineality.is_empty());
        assert_eq!(sorted(g.rays), vec![to_big(&[0, 1]), to_big(&[1, 0])]);
    }

    #[test]
    fn halfplane_keeps_a_line() {
        let g = generators(&[to_big(&[0, 1])], 2);
        assert_eq!(g.lineality.len(), 1);
        assert_eq!(g.rays.len(), 1);
    }

    #[test]
    fn dual_of_wedge() {
        // cone spanned by (1,0), (1,2): its dual has rays (0,1), (2,-1)
        let g = generators(&[to_big(&[1, 0]), to_big(&[1, 2])], 2);
        assert!(g.lineality.is_empty());
        assert_eq!(sorted(g.rays), vec![to_big(&[0, 1]), to_big(&[2, -1])]);
    }

    #[test]
    fn square_pyramid() {
        // cone over the unit square at height 1: four rays, four facets
        let pts: Vec<IntVec> =
            [[1, 0, 0], [1, 1, 0], [1, 0, 1], [1, 1, 1]].iter().map(|p| to_big(p)).collect();
        let facets = generators(&pts, 3);
        assert_eq!(facets.rays.len(), 4);
        let rays = generators(&facets.rays, 3);
        assert_eq!(sorted(rays.rays), sorted(pts));
    }

    #[test]
    fn empty_interior_is_origin() {
        let g = generators(&[to_big(&[1]), to_big(&[-1])], 1);
        assert!(g.lineality.is_empty() && g.rays.is_empty());
    }
}
