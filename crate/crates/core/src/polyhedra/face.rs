//! Face test for the cone spanned by a point set.

use num_bigint::BigInt;
use num_traits::Zero;

use super::linalg::{dot, to_big, IntVec};
use super::RationalCone;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCheck {
    pub is_face: bool,
    /// Valid inequality vanishing exactly on the face (sum of the facets tight on the points).
    pub normal: Option<IntVec>,
    /// Rays of the smallest face containing the points.
    pub face_rays: Vec<IntVec>,
}

/// Decides whether `cone(points)` is a face of `cone`.
///
/// The smallest face containing the points is cut out by the facets that vanish on all
/// of them; the points span a face iff each ray of that face lies in `cone(points)`.
pub fn is_face(cone: &RationalCone, points: &[Vec<i64>]) -> Result<FaceCheck> {
    let dim = cone.ambient_dim();
    let pts: Vec<IntVec> = points.iter().map(|p| to_big(p)).collect();
    if pts.iter().any(|p| !cone.contains(&super::linalg::to_i64(p).unwrap_or_default())) {
        return Ok(FaceCheck { is_face: false, normal: None, face_rays: Vec::new() });
    }
    let tight: Vec<&IntVec> =
        cone.facets().iter().filter(|u| pts.iter().all(|p| dot(u, p).is_zero())).collect();
    let face_rays: Vec<IntVec> =
        cone.rays().iter().filter(|r| tight.iter().all(|u| dot(u, r).is_zero())).cloned().collect();
    let spanned = if pts.is_empty() {
        RationalCone::from_generators(&[vec![BigInt::zero(); dim]], dim)
    } else {
        RationalCone::from_generators(&pts, dim)
    };
    let is_face = face_rays.iter().all(|r| spanned.facets().iter().all(|u| dot(u, r) >= BigInt::zero()));
    let mut normal = vec![BigInt::zero(); dim];
    for u in &tight {
        for (n, x) in normal.iter_mut().zip(u.iter()) {
            *n += x;
        }
    }
    Ok(FaceCheck { is_face, normal: is_face.then_some(normal), face_rays })
}

/// True when `normal` is nonnegative on the cone and vanishes on exactly the given face rays.
pub fn supports_face(cone: &RationalCone, normal: &[BigInt], face_rays: &[IntVec]) -> bool {
    cone.rays().iter().all(|r| {
        let v = dot(normal, r);
        if face_rays.contains(r) {
            v.is_zero()
        } else {
            v > BigInt::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_cone() -> RationalCone {
        RationalCone::conic_hull(&[vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![1, 1, 1]]).unwrap()
    }

    #[test]
    fn vertex_face() {
        let c = square_cone();
        let f = is_face(&c, &[vec![0, 0, 0]]).unwrap();
        assert!(f.is_face);
        assert!(f.face_rays.is_empty());
        assert!(supports_face(&c, f.normal.as_ref().unwrap(), &f.face_rays));
    }

    #[test]
    fn whole_cone() {
        let c = square_cone();
        let rays = c.rays_i64().unwrap();
        let f = is_face(&c, &rays).unwrap();
        assert!(f.is_face);
        assert_eq!(f.normal.unwrap(), vec![BigInt::zero(); 3]);
    }

    #[test]
    fn edges_and_non_faces() {
        let c = square_cone();
        let edge = is_face(&c, &[vec![1, 0, 0], vec![1, 1, 0]]).unwrap();
        assert!(edge.is_face);
        assert!(supports_face(&c, edge.normal.as_ref().unwrap(), &edge.face_rays));
        // a point inside a facet spans only a ray of it
        assert!(!is_face(&c, &[vec![2, 1, 0]]).unwrap().is_face);
        assert!(!is_face(&c, &[vec![1, 0, 0], vec![2, 1, 0]]).unwrap().is_face);
        // a diagonal is not a face
        assert!(!is_face(&c, &[vec![1, 0, 0], vec![1, 1, 1]]).unwrap().is_face);
        // a point outside the cone
        assert!(!is_face(&c, &[vec![-1, 0, 0]]).unwrap().is_face);
    }
}
