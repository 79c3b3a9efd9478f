//! Hilbert basis of the integral points of a pointed rational cone.
//!
//! Generators are found degree by degree: an integral point of degree `k` is
//! a generator iff it is not a generator of lower degree plus another cone
//! point. Every generator lies in the half-open parallelepiped of some simplex
//! of a triangulation by rays, or is a ray itself, which bounds the degrees
//! that need to be scanned.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::lattice::lattice_points_of_degree;
use super::linalg::{det_adjugate, dot, rank, to_big, IntVec};
use super::RationalCone;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBasis {
    /// Sorted by degree, then lexicographically.
    pub elements: Vec<Vec<i64>>,
    /// Highest degree scanned; no generator can have larger degree.
    pub degree_bound: i64,
}

/// Pulling triangulation of a pointed cone by its rays; each simplex is a list of ray indices.
pub fn triangulate(cone: &RationalCone) -> Vec<Vec<usize>> {
    let rays = cone.rays();
    if rays.is_empty() {
        return Vec::new();
    }
    let all: Vec<usize> = (0..rays.len()).collect();
    let dim = cone.dim();
    let mut memo: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
    triangulate_face(cone, &all, dim, &mut memo)
}

fn face_rank(rays: &[IntVec], idx: &[usize]) -> usize {
    let rows: Vec<&[BigInt]> = idx.iter().map(|&i| rays[i].as_slice()).collect();
    rank(&rows)
}

fn triangulate_face(
    cone: &RationalCone,
    face: &[usize],
    dim: usize,
    memo: &mut HashMap<Vec<usize>, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if let Some(t) = memo.get(face) {
        return t.clone();
    }
    let rays = cone.rays();
    let result = if face.len() == dim {
        vec![face.to_vec()]
    } else {
        let apex = face[0];
        let mut subfaces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for u in cone.facets() {
            let sub: Vec<usize> = face.iter().copied().filter(|&i| dot(u, &rays[i]).is_zero()).collect();
            if sub.len() == face.len() || sub.contains(&apex) || sub.is_empty() {
                continue;
            }
            if face_rank(rays, &sub) == dim - 1 {
                subfaces.insert(sub);
            }
        }
        let mut out = Vec::new();
        for sub in subfaces {
            for mut simplex in triangulate_face(cone, &sub, dim - 1, memo) {
                simplex.insert(0, apex);
                simplex.sort();
                out.push(simplex);
            }
        }
        out
    };
    memo.insert(face.to_vec(), result.clone());
    result
}

/// Integral points `sum c_r r` with all `c_r` in `[0, 1)` for a full-dimensional simplex.
pub fn parallelepiped_points(rays: &[IntVec]) -> Vec<Vec<i64>> {
    let d = rays.len();
    // matrix with the rays as columns
    let m: Vec<IntVec> = (0..d).map(|i| (0..d).map(|j| rays[j][i].clone()).collect()).collect();
    let (det, adj) = det_adjugate(&m);
    assert!(!det.is_zero(), "simplex rays are linearly independent");
    let modulus = det.abs();
    let sign = if det.is_negative() { BigInt::from(-1) } else { BigInt::from(1) };
    let columns: Vec<IntVec> =
        (0..d).map(|j| (0..d).map(|i| (&adj[i][j] * &sign).mod_floor(&modulus)).collect()).collect();
    let zero = vec![BigInt::zero(); d];
    let mut seen: HashSet<IntVec> = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(q) = queue.pop_front() {
        for col in &columns {
            let next: IntVec = q.iter().zip(col).map(|(a, b)| (a + b).mod_floor(&modulus)).collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Vec<i64>> = seen
        .into_iter()
        .map(|q| {
            (0..d)
                .map(|i| {
                    let s: BigInt = (0..d).map(|j| &m[i][j] * &q[j]).sum();
                    debug_assert!((&s % &modulus).is_zero());
                    (s / &modulus).to_i64().expect("parallelepiped point fits in i64")
                })
                .collect()
        })
        .collect();
    out.sort();
    out
}

fn degree(grading: &[i64], x: &[i64]) -> i64 {
    grading.iter().zip(x).map(|(a, b)| a * b).sum()
}

/// Largest degree a Hilbert basis element can have.
pub fn degree_bound(cone: &RationalCone, grading: &[i64]) -> Result<i64> {
    let rays = cone.rays_i64()?;
    let mut bound = rays.iter().map(|r| degree(grading, r)).max().unwrap_or(0);
    let full = cone.dim() == cone.ambient_dim();
    for simplex in triangulate(cone) {
        if full {
            let srays: Vec<IntVec> = simplex.iter().map(|&i| cone.rays()[i].clone()).collect();
            for p in parallelepiped_points(&srays) {
                bound = bound.max(degree(grading, &p));
            }
        } else {
            let s: i64 = simplex.iter().map(|&i| degree(grading, &rays[i])).sum();
            bound = bound.max(s - 1);
        }
    }
    Ok(bound)
}

pub fn hilbert_basis(cone: &RationalCone, grading: &[i64]) -> Result<HilbertBasis> {
    if !cone.is_pointed() {
        return Err(Error::NotPointed);
    }
    if grading.len() != cone.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: cone.ambient_dim(), got: grading.len() });
    }
    let g = to_big(grading);
    if cone.rays().iter().any(|r| !dot(&g, r).is_positive()) {
        return Err(Error::BadGrading(grading.to_vec()));
    }
    let bound = degree_bound(cone, grading)?;
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for k in 1..=bound {
        let mut found = Vec::new();
        for x in lattice_points_of_degree(cone, grading, k)? {
            if !reducible(cone, &basis, &x) {
                found.push(x);
            }
        }
        basis.extend(found);
    }
    Ok(HilbertBasis { elements: basis, degree_bound: bound })
}

/// `x - h` lies in the cone for some generator `h != x`.
fn reducible(cone: &RationalCone, basis: &[Vec<i64>], x: &[i64]) -> bool {
    basis.iter().any(|h| {
        if h.as_slice() == x {
            return false;
        }
        let diff: Vec<i64> = x.iter().zip(h).map(|(a, b)| a - b).collect();
        cone.contains(&diff)
    })
}

/// Memoized search for a nonnegative integer combination of `basis` equal to `x`.
pub struct Decomposer<'a> {
    cone: &'a RationalCone,
    basis: &'a [Vec<i64>],
    memo: BTreeMap<Vec<i64>, bool>,
}

impl<'a> Decomposer<'a> {
    pub fn new(cone: &'a RationalCone, basis: &'a [Vec<i64>]) -> Self {
        Decomposer { cone, basis, memo: BTreeMap::new() }
    }

    pub fn decomposes(&mut self, x: &[i64]) -> bool {
        if x.iter().all(|&c| c == 0) {
            return true;
        }
        if !self.cone.contains(x) {
            return false;
        }
        if let Some(&v) = self.memo.get(x) {
            return v;
        }
        let mut ok = false;
        for h in self.basis {
            let rest: Vec<i64> = x.iter().zip(h).map(|(a, b)| a - b).collect();
            if self.cone.contains(&rest) && self.decomposes(&rest) {
                ok = true;
                break;
            }
        }
        self.memo.insert(x.to_vec(), ok);
        ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_ray() {
        let c = RationalCone::conic_hull(&[vec![1, 0]]).unwrap();
        let hb = hilbert_basis(&c, &[1, 0]).unwrap();
        assert_eq!(hb.elements, vec![vec![1, 0]]);
    }

    #[test]
    fn orthant() {
        let c = RationalCone::conic_hull(&[vec![1, 0], vec![0, 1]]).unwrap();
        let hb = hilbert_basis(&c, &[1, 1]).unwrap();
        assert_eq!(hb.elements, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn wedge_needs_middle_point() {
        let c = RationalCone::conic_hull(&[vec![1, 0], vec![1, 2]]).unwrap();
        let hb = hilbert_basis(&c, &[1, 0]).unwrap();
        assert_eq!(hb.elements, vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn steep_wedge() {
        let c = RationalCone::conic_hull(&[vec![0, 1], vec![3, 1]]).unwrap();
        assert_eq!(hilbert_basis(&c, &[1, 0]).unwrap_err(), Error::BadGrading(vec![1, 0]));
        let c = RationalCone::conic_hull(&[vec![1, 0], vec![1, 3]]).unwrap();
        let hb = hilbert_basis(&c, &[1, 0]).unwrap();
        assert_eq!(hb.elements, vec![vec![1, 0], vec![1, 1], vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn non_pointed_rejected() {
        let c = RationalCone::conic_hull(&[vec![1, 0], vec![-1, 0], vec![0, 1]]).unwrap();
        assert_eq!(hilbert_basis(&c, &[0, 1]), Err(Error::NotPointed));
    }

    #[test]
    fn parallelepiped_of_wedge() {
        let pts = parallelepiped_points(&[to_big(&[1, 0]), to_big(&[1, 2])]);
        assert_eq!(pts, vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn triangulation_of_square_cone() {
        let c = RationalCone::conic_hull(&[vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![1, 1, 1]]).unwrap();
        let t = triangulate(&c);
        assert_eq!(t.len(), 2);
        assert!(t.iter().all(|s| s.len() == 3));
    }

    /// Brute force: irreducible cone points of small degree.
    fn brute_force_basis(cone: &RationalCone, grading: &[i64], max_degree: i64) -> Vec<Vec<i64>> {
        let mut all: Vec<Vec<i64>> = Vec::new();
        for k in 1..=max_degree {
            all.extend(lattice_points_of_degree(cone, grading, k).unwrap());
        }
        let set: BTreeSet<Vec<i64>> = all.iter().cloned().collect();
        let mut out: Vec<Vec<i64>> = all
            .iter()
            .filter(|x| {
                !set.iter().any(|y| {
                    y != *x && {
                        let diff: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
                        diff.iter().any(|&c| c != 0) && set.contains(&diff)
                    }
                })
            })
            .cloned()
            .collect();
        out.sort_by_key(|x| (degree(grading, x), x.clone()));
        out
    }

    #[test]
    fn matches_brute_force_on_random_cones() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let mut pts: Vec<Vec<i64>> = Vec::new();
            for _ in 0..rng.gen_range(3..6) {
                pts.push(vec![rng.gen_range(1..4), rng.gen_range(0..4), rng.gen_range(0..4)]);
            }
            let cone = RationalCone::conic_hull(&pts).unwrap();
            let grading = [1, 0, 0];
            let hb = hilbert_basis(&cone, &grading).unwrap();
            let brute = brute_force_basis(&cone, &grading, hb.degree_bound + 2);
            assert_eq!(hb.elements, brute, "{pts:?}");
            let mut dec = Decomposer::new(&cone, &hb.elements);
            for k in 0..=hb.degree_bound + 2 {
                for x in lattice_points_of_degree(&cone, &grading, k).unwrap() {
                    assert!(dec.decomposes(&x));
                }
            }
        }
    }
}
