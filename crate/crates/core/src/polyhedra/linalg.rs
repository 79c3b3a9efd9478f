//! Exact integer linear algebra on small dense matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type IntVec = Vec<BigInt>;

pub fn to_big(v: &[i64]) -> IntVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn to_i64(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(|x| x.to_i64().ok_or_else(|| Error::Overflow(x.to_string()))).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_i64(a: &[BigInt], b: &[i64]) -> BigInt {
    a.iter().zip(b).map(|(x, &y)| x * y).sum()
}

pub fn is_zero(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides by the content; the zero vector is left alone.
pub fn make_primitive(v: &mut [BigInt]) {
    let g = content(v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

pub fn primitive(mut v: IntVec) -> IntVec {
    make_primitive(&mut v);
    v
}

pub fn negated(v: &[BigInt]) -> IntVec {
    v.iter().map(|x| -x).collect()
}

/// `alpha * u + beta * v`
pub fn combine(alpha: &BigInt, u: &[BigInt], beta: &BigInt, v: &[BigInt]) -> IntVec {
    u.iter().zip(v).map(|(x, y)| alpha * x + beta * y).collect()
}

fn rank_i128(rows: &[&[BigInt]]) -> Option<usize> {
    let mut m: Vec<Vec<i128>> = Vec::with_capacity(rows.len());
    for r in rows {
        let mut row = Vec::with_capacity(r.len());
        for x in r.iter() {
            row.push(x.to_i128()?);
        }
        m.push(row);
    }
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for k in c + 1..cols {
                // Bareiss step, exact division by the previous pivot
                let a = m[rank][c].checked_mul(m[r][k])?;
                let b = m[r][c].checked_mul(m[rank][k])?;
                m[r][k] = a.checked_sub(b)? / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    Some(rank)
}

fn rank_big(rows: &[&[BigInt]]) -> usize {
    let mut m: Vec<IntVec> = rows.iter().map(|r| r.to_vec()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for k in c + 1..cols {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Exact rank by fraction-free elimination; machine integers first, big integers on overflow.
pub fn rank(rows: &[&[BigInt]]) -> usize {
    rank_i128(rows).unwrap_or_else(|| rank_big(rows))
}

pub fn rank_of(rows: &[IntVec]) -> usize {
    let refs: Vec<&[BigInt]> = rows.iter().map(|r| r.as_slice()).collect();
    rank(&refs)
}

fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

/// Clears denominators and divides by the content.
pub fn rational_to_primitive(v: &[BigRational]) -> IntVec {
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    primitive(v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect())
}

/// Reduced row echelon basis of the row space, rows made primitive with positive pivots.
/// Canonical: depends only on the span.
pub fn canonical_basis(rows: &[IntVec], dim: usize) -> Vec<IntVec> {
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| to_rational(r)).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..dim {
                    let sub = &f * &m[r][k];
                    m[i][k] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    m.iter().map(|row| rational_to_primitive(row)).collect()
}

/// Orthogonal projection of `v` onto the complement of `span(basis)`, made primitive.
pub fn project_out(v: &[BigInt], basis: &[IntVec]) -> IntVec {
    if basis.is_empty() {
        return primitive(v.to_vec());
    }
    // Gram-Schmidt over Q
    let mut ortho: Vec<Vec<BigRational>> = Vec::new();
    for b in basis {
        let mut w = to_rational(b);
        for o in &ortho {
            let num: BigRational = w.iter().zip(o).map(|(x, y)| x * y).sum();
            let den: BigRational = o.iter().map(|y| y * y).sum();
            let f = num / den;
            for (x, y) in w.iter_mut().zip(o) {
                *x -= &f * y;
            }
        }
        ortho.push(w);
    }
    let mut w = to_rational(v);
    for o in &ortho {
        let num: BigRational = w.iter().zip(o).map(|(x, y)| x * y).sum();
        let den: BigRational = o.iter().map(|y| y * y).sum();
        let f = num / den;
        for (x, y) in w.iter_mut().zip(o) {
            *x -= &f * y;
        }
    }
    rational_to_primitive(&w)
}

/// Determinant and adjugate of a square matrix (`adj * m = det * I`).
pub fn det_adjugate(m: &[IntVec]) -> (BigInt, Vec<IntVec>) {
    let n = m.len();
    // Gauss-Jordan over Q on [m | I]
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = to_rational(row);
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return (BigInt::zero(), vec![vec![BigInt::zero(); n]; n]);
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..2 * n {
                    let sub = &f * &a[c][k];
                    a[i][k] -= sub;
                }
            }
        }
    }
    let det = det.to_integer();
    let adj = a
        .iter()
        .map(|row| row[n..].iter().map(|x| (x * BigRational::from_integer(det.clone())).to_integer()).collect())
        .collect();
    (det, adj)
}

/// Basis of the integer kernel `{v in Z^K : sum_k v_k g_k = 0}` of the given columns,
/// by unimodular row reduction of `[G^T | I]` to echelon form.
pub fn integer_kernel(columns: &[IntVec]) -> Vec<IntVec> {
    let k = columns.len();
    if k == 0 {
        return Vec::new();
    }
    let d = columns[0].len();
    let mut rows: Vec<(IntVec, IntVec)> = columns
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut e = vec![BigInt::zero(); k];
            e[i] = BigInt::one();
            (g.clone(), e)
        })
        .collect();
    let mut r = 0;
    for c in 0..d {
        // Euclid on column c among rows r.. until a single nonzero remains
        loop {
            let nonzero: Vec<usize> = (r..k).filter(|&i| !rows[i].0[c].is_zero()).collect();
            if nonzero.len() <= 1 {
                if let Some(&p) = nonzero.first() {
                    rows.swap(r, p);
                    if rows[r].0[c].is_negative() {
                        let (g, e) = &mut rows[r];
                        g.iter_mut().for_each(|x| *x = -&*x);
                        e.iter_mut().for_each(|x| *x = -&*x);
                    }
                    r += 1;
                }
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&i| rows[i].0[c].abs()).unwrap();
            let pivot = rows[p].clone();
            for &i in &nonzero {
                if i == p {
                    continue;
                }
                let q = rows[i].0[c].div_floor(&pivot.0[c]);
                let (g, e) = &mut rows[i];
                for (x, y) in g.iter_mut().zip(&pivot.0) {
                    *x -= &q * y;
                }
                for (x, y) in e.iter_mut().zip(&pivot.1) {
                    *x -= &q * y;
                }
            }
        }
        if r == k {
            break;
        }
    }
    let mut basis: Vec<IntVec> = rows[r..].iter().map(|(_, e)| e.clone()).collect();
    for v in basis.iter_mut() {
        if let Some(first) = v.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                v.iter_mut().for_each(|x| *x = -&*x);
            }
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: &[i64]) -> IntVec {
        to_big(v)
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_of(&[b(&[1, 2, 3]), b(&[2, 4, 6]), b(&[0, 1, 1])]), 2);
        assert_eq!(rank_of(&[]), 0);
        assert_eq!(rank_of(&[b(&[0, 0])]), 0);
        let big = BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
        let rows = vec![vec![big.clone(), BigInt::one()], vec![big.clone() * 2, BigInt::from(2)]];
        assert_eq!(rank_of(&rows), 1);
    }

    #[test]
    fn canonical_basis_depends_on_span_only() {
        let a = canonical_basis(&[b(&[1, 1, 0]), b(&[0, 1, 1])], 3);
        let c = canonical_basis(&[b(&[1, 2, 1]), b(&[2, 2, 0]), b(&[1, 0, -1])], 3);
        assert_eq!(a, c);
    }

    #[test]
    fn projection() {
        assert_eq!(project_out(&b(&[1, 1]), &[b(&[1, 0])]), b(&[0, 1]));
        assert_eq!(project_out(&b(&[2, 4]), &[]), b(&[1, 2]));
    }

    #[test]
    fn adjugate() {
        let m = vec![b(&[2, 1]), b(&[1, 3])];
        let (det, adj) = det_adjugate(&m);
        assert_eq!(det, BigInt::from(5));
        assert_eq!(adj, vec![b(&[3, -1]), b(&[-1, 2])]);
    }

    #[test]
    fn kernels() {
        let k = integer_kernel(&[b(&[1, 0]), b(&[0, 1]), b(&[1, 1])]);
        assert_eq!(k, vec![b(&[1, 1, -1])]);
        assert!(integer_kernel(&[b(&[1, 0]), b(&[0, 1])]).is_empty());
        // kernel lattice of (2, 3): spanned by (3, -2), not a multiple
        let k = integer_kernel(&[b(&[2]), b(&[3])]);
        assert_eq!(k.len(), 1);
        assert_eq!(content(&k[0]), BigInt::one());
        assert!(dot(&k[0], &b(&[2, 3])).is_zero());
    }
}
