//! Piecewise-linear path realization of the crystal `B(lambda)`.
//!
//! A path is a sequence of segments `(direction, duration)`; directions are
//! integral weights (they are Weyl-group images of `lambda`), durations are
//! positive rationals summing to one. Because `<varpi_j, alpha_i^vee> = delta_ij`,
//! the height function `h_i(t) = <pi(t), alpha_i^vee>` is just the `i`-th
//! coordinate of the path.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::cartan::{CartanDatum, Weight, WeylWord};
use crate::error::{Error, Result};

pub const DEFAULT_NODE_CAP: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub direction: Vec<i64>,
    pub duration: Rational64,
}

/// Canonical piecewise-linear path starting at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiecewisePath {
    segments: Vec<Segment>,
}

impl PiecewisePath {
    pub fn new(segments: Vec<Segment>) -> Self {
        let mut p = PiecewisePath { segments };
        p.canonicalize();
        p
    }

    /// Straight line `t -> t lambda`.
    pub fn highest(datum: &CartanDatum, lambda: &Weight) -> Result<Self> {
        datum.check_dominant(lambda)?;
        Ok(PiecewisePath::new(vec![Segment { direction: lambda.0.clone(), duration: Rational64::one() }]))
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    fn rank(&self) -> usize {
        self.segments[0].direction.len()
    }

    fn canonicalize(&mut self) {
        let mut merged: Vec<Segment> = Vec::with_capacity(self.segments.len());
        for seg in self.segments.drain(..) {
            if seg.duration.is_zero() {
                continue;
            }
            match merged.last_mut() {
                Some(last) if last.direction == seg.direction => last.duration += seg.duration,
                _ => merged.push(seg),
            }
        }
        self.segments = merged;
    }

    /// Endpoint `pi(1)`.
    pub fn weight(&self) -> Weight {
        let n = self.rank();
        let mut end = vec![Rational64::zero(); n];
        for seg in &self.segments {
            for (e, &d) in end.iter_mut().zip(&seg.direction) {
                *e += seg.duration * d;
            }
        }
        Weight(
            end.into_iter()
                .map(|x| {
                    assert!(x.is_integer(), "path endpoint is not integral");
                    x.to_integer()
                })
                .collect(),
        )
    }

    /// Values of `h_i` at the breakpoints `0 = t_0 < t_1 < ... < t_k = 1`.
    fn heights(&self, i: usize) -> Vec<Rational64> {
        let mut out = Vec::with_capacity(self.segments.len() + 1);
        let mut h = Rational64::zero();
        out.push(h);
        for seg in &self.segments {
            h += seg.duration * seg.direction[i];
            out.push(h);
        }
        out
    }

    fn min_height(heights: &[Rational64]) -> Rational64 {
        *heights.iter().min().expect("nonempty")
    }

    /// `(epsilon_i, phi_i)` with `epsilon = -min h_i`, `phi = h_i(1) - min h_i`.
    pub fn epsilon_phi(&self, i: usize) -> (u32, u32) {
        let h = self.heights(i);
        let m = Self::min_height(&h);
        let end = *h.last().unwrap();
        let eps = -m;
        let phi = end - m;
        assert!(eps.is_integer() && phi.is_integer(), "non-integral local minimum on path");
        (eps.to_integer() as u32, phi.to_integer() as u32)
    }

    fn reflect(datum: &CartanDatum, i: usize, direction: &[i64]) -> Vec<i64> {
        let mut v = direction.to_vec();
        datum.reflect_weight_in_place(i, &mut v);
        v
    }

    /// Splits segment `k` at local offset `offset` (0 < offset < duration).
    fn split(segments: &mut Vec<Segment>, k: usize, offset: Rational64) {
        let seg = segments[k].clone();
        segments[k].duration = offset;
        segments.insert(k + 1, Segment { direction: seg.direction, duration: seg.duration - offset });
    }

    /// Lowering operator `f_i` (0-based `i`).
    pub fn lower(&self, datum: &CartanDatum, i: usize) -> Option<PiecewisePath> {
        let h = self.heights(i);
        let m = Self::min_height(&h);
        let end = *h.last().unwrap();
        if end - m < Rational64::one() {
            return None;
        }
        let target = m + Rational64::one();
        // last time the minimum is attained
        let k0 = h.iter().rposition(|x| *x == m).unwrap();
        // first segment after k0 reaching m + 1
        let s = (k0..self.segments.len()).find(|&s| h[s + 1] >= target).unwrap();
        let mut segs = self.segments.clone();
        let slope = segs[s].direction[i];
        debug_assert!(slope > 0);
        let offset = (target - h[s]) / slope;
        if offset < segs[s].duration {
            Self::split(&mut segs, s, offset);
        }
        for seg in segs.iter_mut().take(s + 1).skip(k0) {
            seg.direction = Self::reflect(datum, i, &seg.direction);
        }
        Some(PiecewisePath::new(segs))
    }

    /// Raising operator `e_i` (0-based `i`).
    pub fn raise(&self, datum: &CartanDatum, i: usize) -> Option<PiecewisePath> {
        let h = self.heights(i);
        let m = Self::min_height(&h);
        if m > -Rational64::one() {
            return None;
        }
        let target = m + Rational64::one();
        // first time the minimum is attained
        let k1 = h.iter().position(|x| *x == m).unwrap();
        // last breakpoint before k1 still at height >= m + 1; the crossing lies in that segment
        let s = (0..k1).rev().find(|&s| h[s] >= target).unwrap();
        let mut segs = self.segments.clone();
        let slope = segs[s].direction[i];
        debug_assert!(slope < 0);
        let offset = (target - h[s]) / slope;
        let mut first_reflected = s;
        if offset > Rational64::zero() {
            Self::split(&mut segs, s, offset);
            first_reflected = s + 1;
        }
        let last_reflected = if offset > Rational64::zero() { k1 } else { k1 - 1 };
        for seg in segs.iter_mut().take(last_reflected + 1).skip(first_reflected) {
            seg.direction = Self::reflect(datum, i, &seg.direction);
        }
        Some(PiecewisePath::new(segs))
    }
}

/// The finite crystal `B(lambda)` realized by paths, with cached edges and statistics.
#[derive(Debug, Clone)]
pub struct CrystalGraph {
    lambda: Weight,
    rank: usize,
    nodes: Vec<PiecewisePath>,
    index: HashMap<PiecewisePath, usize>,
    f: Vec<Vec<Option<usize>>>,
    e: Vec<Vec<Option<usize>>>,
    eps: Vec<Vec<u32>>,
    phi: Vec<Vec<u32>>,
    weights: Vec<Weight>,
}

impl CrystalGraph {
    /// Breadth-first closure of the highest path under all `f_i`, expanding
    /// nodes in discovery order and operators in increasing index.
    pub fn enumerate(datum: &CartanDatum, lambda: &Weight, cap: usize) -> Result<Self> {
        let n = datum.rank();
        let top = PiecewisePath::highest(datum, lambda)?;
        let mut nodes = vec![top.clone()];
        let mut index = HashMap::new();
        index.insert(top, 0usize);
        let mut f: Vec<Vec<Option<usize>>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let mut row = vec![None; n];
            for (i, slot) in row.iter_mut().enumerate() {
                if let Some(y) = nodes[x].lower(datum, i) {
                    let id = match index.get(&y) {
                        Some(&id) => id,
                        None => {
                            let id = nodes.len();
                            if id >= cap {
                                return Err(Error::CrystalTooLarge { lambda: lambda.0.clone(), cap });
                            }
                            index.insert(y.clone(), id);
                            nodes.push(y);
                            queue.push_back(id);
                            id
                        }
                    };
                    *slot = Some(id);
                }
            }
            f.push(row);
        }

        let mut e = vec![vec![None; n]; nodes.len()];
        let mut eps = Vec::with_capacity(nodes.len());
        let mut phi = Vec::with_capacity(nodes.len());
        let mut weights = Vec::with_capacity(nodes.len());
        for (x, path) in nodes.iter().enumerate() {
            let mut ex = Vec::with_capacity(n);
            let mut px = Vec::with_capacity(n);
            for i in 0..n {
                let (a, b) = path.epsilon_phi(i);
                ex.push(a);
                px.push(b);
                if let Some(y) = path.raise(datum, i) {
                    let id = *index.get(&y).expect("crystal closed under e_i");
                    e[x][i] = Some(id);
                }
            }
            eps.push(ex);
            phi.push(px);
            weights.push(path.weight());
        }

        Ok(CrystalGraph { lambda: lambda.clone(), rank: n, nodes, index, f, e, eps, phi, weights })
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn highest_node(&self) -> usize {
        0
    }

    pub fn path(&self, node: usize) -> &PiecewisePath {
        &self.nodes[node]
    }

    pub fn node_of(&self, path: &PiecewisePath) -> Option<usize> {
        self.index.get(path).copied()
    }

    /// `f_i` on node ids, 0-based `i`.
    pub fn f(&self, node: usize, i: usize) -> Option<usize> {
        self.f[node][i]
    }

    pub fn e(&self, node: usize, i: usize) -> Option<usize> {
        self.e[node][i]
    }

    pub fn epsilon(&self, node: usize, i: usize) -> u32 {
        self.eps[node][i]
    }

    pub fn phi(&self, node: usize, i: usize) -> u32 {
        self.phi[node][i]
    }

    pub fn weight(&self, node: usize) -> &Weight {
        &self.weights[node]
    }

    /// `e_i^max`: climbs to the top of the `i`-string through `node`.
    pub fn raise_fully(&self, node: usize, i: usize) -> usize {
        let mut x = node;
        while let Some(y) = self.e[x][i] {
            x = y;
        }
        x
    }

    /// `f_{j1}^* ... f_{jp}^* {highest}`: the last letter is applied first.
    pub fn demazure_nodes(&self, w_word: &WeylWord) -> BTreeSet<usize> {
        let mut set = BTreeSet::from([self.highest_node()]);
        for &l in w_word.letters().iter().rev() {
            let i = l - 1;
            let mut next = BTreeSet::new();
            for &x in &set {
                let mut y = Some(x);
                while let Some(z) = y {
                    next.insert(z);
                    y = self.f[z][i];
                }
            }
            set = next;
        }
        set
    }

    /// One line per `f_i` edge, `src i dst`, with letters 1-based, preceded by a node-count comment.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# nodes {}", self.len()).unwrap();
        for (x, row) in self.f.iter().enumerate() {
            for (i, y) in row.iter().enumerate() {
                if let Some(y) = y {
                    writeln!(out, "{x} {} {y}", i + 1).unwrap();
                }
            }
        }
        out
    }
}

/// Rejects words that are not reduced before building a Demazure subset.
pub fn demazure_crystal(datum: &CartanDatum, graph: &CrystalGraph, w_word: &WeylWord) -> Result<BTreeSet<usize>> {
    datum.check_letters(w_word)?;
    datum.require_reduced(w_word)?;
    Ok(graph.demazure_nodes(w_word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::TypeLabel;
    use crate::characters::{demazure_character, weyl_character, weyl_dim};
    use std::collections::BTreeMap;

    fn d(t: TypeLabel, r: usize) -> CartanDatum {
        CartanDatum::new(t, r).unwrap()
    }

    fn wt(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn highest_path_statistics() {
        let a2 = d(TypeLabel::A, 2);
        let zero = PiecewisePath::highest(&a2, &wt(&[0, 0])).unwrap();
        assert_eq!(zero.epsilon_phi(0), (0, 0));
        assert_eq!(zero.epsilon_phi(1), (0, 0));
        let a1 = d(TypeLabel::A, 1);
        assert_eq!(PiecewisePath::highest(&a1, &wt(&[2])).unwrap().epsilon_phi(0), (0, 2));
        let p = PiecewisePath::highest(&a2, &wt(&[1, 0])).unwrap();
        assert_eq!((p.epsilon_phi(0).1, p.epsilon_phi(1).1), (1, 0));
        assert!(PiecewisePath::highest(&a2, &wt(&[1, -1])).is_err());
    }

    #[test]
    fn sl2_chain() {
        let a1 = d(TypeLabel::A, 1);
        let top = PiecewisePath::highest(&a1, &wt(&[1])).unwrap();
        let low = top.lower(&a1, 0).unwrap();
        assert_eq!(low.weight(), wt(&[-1]));
        assert!(low.lower(&a1, 0).is_none());
        assert!(top.raise(&a1, 0).is_none());
        assert_eq!(low.raise(&a1, 0).unwrap(), top);

        let g = CrystalGraph::enumerate(&a1, &wt(&[2]), 100).unwrap();
        assert_eq!(g.len(), 3);
        let mid = g.f(0, 0).unwrap();
        let bottom = g.f(mid, 0).unwrap();
        assert_eq!((g.epsilon(mid, 0), g.phi(mid, 0)), (1, 1));
        assert_eq!((g.epsilon(bottom, 0), g.phi(bottom, 0)), (2, 0));
        assert_eq!(g.e(mid, 0), Some(0));
    }

    #[test]
    fn a2_lowering_absent_when_phi_zero() {
        let a2 = d(TypeLabel::A, 2);
        let top = PiecewisePath::highest(&a2, &wt(&[1, 0])).unwrap();
        assert!(top.lower(&a2, 1).is_none());
        let f1 = top.lower(&a2, 0).unwrap();
        assert_eq!(f1.weight(), wt(&[-1, 1]));
    }

    #[test]
    fn crystal_sizes() {
        let a2 = d(TypeLabel::A, 2);
        assert_eq!(CrystalGraph::enumerate(&a2, &wt(&[1, 0]), 100).unwrap().len(), 3);
        assert_eq!(CrystalGraph::enumerate(&a2, &wt(&[1, 1]), 100).unwrap().len(), 8);
        assert_eq!(CrystalGraph::enumerate(&a2, &wt(&[0, 0]), 100).unwrap().len(), 1);
        assert!(matches!(
            CrystalGraph::enumerate(&a2, &wt(&[3, 3]), 10),
            Err(Error::CrystalTooLarge { .. })
        ));
    }

    #[test]
    fn zero_weight_dump_is_single_node() {
        let g2 = d(TypeLabel::G, 2);
        let g = CrystalGraph::enumerate(&g2, &wt(&[0, 0]), 10).unwrap();
        assert_eq!(g.dump(), "# nodes 1\n");
    }

    fn check_crystal_laws(datum: &CartanDatum, lambda: &Weight) {
        let g = CrystalGraph::enumerate(datum, lambda, DEFAULT_NODE_CAP).unwrap();
        let n = datum.rank();
        assert_eq!(g.len() as u64, weyl_dim(datum, lambda).unwrap(), "{lambda:?}");
        let mut highest = 0;
        for x in 0..g.len() {
            for i in 0..n {
                if let Some(y) = g.f(x, i) {
                    assert_eq!(g.e(y, i), Some(x));
                    let mut expect = g.weight(x).0.clone();
                    for (c, a) in expect.iter_mut().zip(datum.simple_root(i)) {
                        *c -= a;
                    }
                    assert_eq!(g.weight(y).0, expect);
                }
                if let Some(y) = g.e(x, i) {
                    assert_eq!(g.f(y, i), Some(x));
                }
                assert_eq!(g.phi(x, i) as i64 - g.epsilon(x, i) as i64, g.weight(x).0[i]);
                assert_eq!(g.e(x, i).is_none(), g.epsilon(x, i) == 0);
                assert_eq!(g.f(x, i).is_none(), g.phi(x, i) == 0);
            }
            if (0..n).all(|i| g.epsilon(x, i) == 0) {
                highest += 1;
            }
        }
        assert_eq!(highest, 1);

        // weight multiset against the Weyl character
        let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
        for x in 0..g.len() {
            *mult.entry(g.weight(x).clone()).or_default() += 1;
        }
        let ch = weyl_character(datum, lambda).unwrap();
        let ch: BTreeMap<Weight, i64> = ch.terms().map(|(k, v)| (k.clone(), v)).collect();
        assert_eq!(mult, ch);

        // lowest node has weight w0 lambda
        let w0l = datum.apply_word(&datum.longest_word(), lambda).unwrap();
        assert!((0..g.len()).any(|x| g.weight(x) == &w0l && (0..n).all(|i| g.phi(x, i) == 0)));
    }

    #[test]
    fn crystal_laws_across_types() {
        for (t, r) in [
            (TypeLabel::A, 1),
            (TypeLabel::A, 2),
            (TypeLabel::A, 3),
            (TypeLabel::B, 2),
            (TypeLabel::C, 2),
            (TypeLabel::B, 3),
            (TypeLabel::C, 3),
            (TypeLabel::D, 4),
            (TypeLabel::G, 2),
        ] {
            let datum = d(t, r);
            for lambda in datum.dominant_weights_up_to(1) {
                check_crystal_laws(&datum, &lambda);
            }
        }
        let g2 = d(TypeLabel::G, 2);
        check_crystal_laws(&g2, &wt(&[2, 1]));
        let b2 = d(TypeLabel::B, 2);
        check_crystal_laws(&b2, &wt(&[2, 3]));
    }

    #[test]
    fn demazure_subsets() {
        let a2 = d(TypeLabel::A, 2);
        let g = CrystalGraph::enumerate(&a2, &wt(&[1, 0]), 100).unwrap();
        assert_eq!(demazure_crystal(&a2, &g, &WeylWord::empty()).unwrap(), BTreeSet::from([0]));
        assert_eq!(demazure_crystal(&a2, &g, &WeylWord(vec![1])).unwrap().len(), 2);
        assert_eq!(demazure_crystal(&a2, &g, &a2.longest_word()).unwrap().len(), 3);
        assert!(demazure_crystal(&a2, &g, &WeylWord(vec![2, 2])).is_err());

        for (t, r) in [(TypeLabel::A, 2), (TypeLabel::B, 2), (TypeLabel::G, 2), (TypeLabel::A, 3)] {
            let datum = d(t, r);
            for lambda in datum.dominant_weights_up_to(1) {
                let g = CrystalGraph::enumerate(&datum, &lambda, DEFAULT_NODE_CAP).unwrap();
                for w in datum.weyl_group_elements() {
                    let nodes = g.demazure_nodes(&w);
                    let ch = demazure_character(&datum, &lambda, &w).unwrap();
                    assert_eq!(nodes.len() as i64, ch.dimension(), "{t}{r} {lambda:?} {w:?}");
                    // monotone along prefixes
                    for p in 0..w.len() {
                        assert!(g.demazure_nodes(&w.prefix(p)).is_subset(&nodes));
                    }
                }
            }
        }
    }
}
