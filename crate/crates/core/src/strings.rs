//! String parametrization: peel a crystal element along a reduced word of `w0`.
//!
//! Letter order: the first letter of the word peels first. With
//! `(j1, ..., jN)`, `t1 = eps_{j1}(b)`, `b <- e_{j1}^{t1} b`, `t2 = eps_{j2}(b)`, ...
//! A word is adapted to `w` when its length-`l(w)` prefix is a reduced word of `w`;
//! then the Demazure crystal `B_w(lambda)` has string vectors supported on that prefix.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, Weight, WeylWord};
use crate::error::{Error, Result};
use crate::pathcrystal::CrystalGraph;

/// Image of a crystal element under the string map; relative to a fixed reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StringVector(pub Vec<i64>);

impl StringVector {
    pub fn zero(len: usize) -> Self {
        StringVector(vec![0; len])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Lexicographic order, first peeled entry most significant.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }

    pub fn add(&self, other: &Self) -> Self {
        StringVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for StringVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A point `(lambda, psi)` of the weighted string cone, living in `Z^{n+N}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightedPoint {
    pub lambda: Weight,
    pub psi: StringVector,
}

impl WeightedPoint {
    pub fn to_point(&self) -> Vec<i64> {
        let mut v = self.lambda.0.clone();
        v.extend_from_slice(&self.psi.0);
        v
    }

    pub fn from_point(point: &[i64], rank: usize) -> Self {
        WeightedPoint { lambda: Weight(point[..rank].to_vec()), psi: StringVector(point[rank..].to_vec()) }
    }
}

/// Peels `node` without validating the word; returns the string and the final node.
fn peel(graph: &CrystalGraph, node: usize, word: &WeylWord) -> (StringVector, usize) {
    let mut b = node;
    let mut out = Vec::with_capacity(word.len());
    for &l in word.letters() {
        let i = l - 1;
        out.push(graph.epsilon(b, i) as i64);
        b = graph.raise_fully(b, i);
    }
    (StringVector(out), b)
}

pub fn string_param(datum: &CartanDatum, graph: &CrystalGraph, node: usize, word: &WeylWord) -> Result<StringVector> {
    datum.require_longest(word)?;
    let (psi, end) = peel(graph, node, word);
    if end != graph.highest_node() {
        return Err(Error::PeelIncomplete { lambda: graph.lambda().0.clone(), node });
    }
    Ok(psi)
}

/// String image of one crystal, with the injectivity and full-peel laws enforced.
pub fn string_image_of(datum: &CartanDatum, graph: &CrystalGraph, word: &WeylWord) -> Result<BTreeSet<StringVector>> {
    datum.require_longest(word)?;
    let mut image = BTreeSet::new();
    for node in 0..graph.len() {
        let (psi, end) = peel(graph, node, word);
        if end != graph.highest_node() {
            return Err(Error::PeelIncomplete { lambda: graph.lambda().0.clone(), node });
        }
        if !image.insert(psi.clone()) {
            return Err(Error::NotInjective { lambda: graph.lambda().0.clone(), psi: psi.0 });
        }
    }
    Ok(image)
}

pub fn string_image(datum: &CartanDatum, lambda: &Weight, word: &WeylWord, cap: usize) -> Result<BTreeSet<StringVector>> {
    datum.require_longest(word)?;
    let graph = CrystalGraph::enumerate(datum, lambda, cap)?;
    string_image_of(datum, &graph, word)
}

/// `lambda - sum_k psi_k alpha_{j_k}` in fundamental coordinates.
pub fn string_weight(datum: &CartanDatum, lambda: &Weight, psi: &StringVector, word: &WeylWord) -> Weight {
    let mut mu = lambda.0.clone();
    for (&l, &t) in word.letters().iter().zip(&psi.0) {
        for (x, a) in mu.iter_mut().zip(datum.simple_root(l - 1)) {
            *x -= t * a;
        }
    }
    Weight(mu)
}

/// Per-`lambda` string images for all dominant `lambda` with coordinates `<= level`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringData {
    pub word: WeylWord,
    pub level: i64,
    pub images: BTreeMap<Weight, BTreeSet<StringVector>>,
}

impl StringData {
    pub fn compute(datum: &CartanDatum, word: &WeylWord, level: i64, cap: usize) -> Result<Self> {
        datum.require_longest(word)?;
        let lambdas = datum.dominant_weights_up_to(level);
        let images: Vec<(Weight, BTreeSet<StringVector>)> = lambdas
            .into_par_iter()
            .map(|lambda| {
                let graph = CrystalGraph::enumerate(datum, &lambda, cap)?;
                let image = string_image_of(datum, &graph, word)?;
                Ok((lambda, image))
            })
            .collect::<Result<_>>()?;
        Ok(StringData { word: word.clone(), level, images: images.into_iter().collect() })
    }

    /// Restriction to weights with coordinates `<= level`.
    pub fn restrict(&self, level: i64) -> StringData {
        StringData {
            word: self.word.clone(),
            level: level.min(self.level),
            images: self
                .images
                .iter()
                .filter(|(l, _)| l.0.iter().all(|&c| c <= level))
                .map(|(l, s)| (l.clone(), s.clone()))
                .collect(),
        }
    }

    pub fn points(&self) -> Vec<WeightedPoint> {
        self.images
            .iter()
            .flat_map(|(lambda, image)| {
                image.iter().map(move |psi| WeightedPoint { lambda: lambda.clone(), psi: psi.clone() })
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.images.values().map(|s| s.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// All `(lambda, psi)` with `lambda` dominant, coordinates `<= level_bound`, sorted.
pub fn weighted_points(datum: &CartanDatum, word: &WeylWord, level_bound: i64, cap: usize) -> Result<Vec<WeightedPoint>> {
    Ok(StringData::compute(datum, word, level_bound, cap)?.points())
}

pub fn demazure_strings_of(
    datum: &CartanDatum,
    graph: &CrystalGraph,
    w_word: &WeylWord,
    w0_word: &WeylWord,
) -> Result<BTreeSet<StringVector>> {
    datum.require_reduced(w_word)?;
    datum.require_longest(w0_word)?;
    graph
        .demazure_nodes(w_word)
        .into_iter()
        .map(|node| string_param(datum, graph, node, w0_word))
        .collect()
}

pub fn demazure_strings(
    datum: &CartanDatum,
    lambda: &Weight,
    w_word: &WeylWord,
    w0_word: &WeylWord,
    cap: usize,
) -> Result<BTreeSet<StringVector>> {
    let graph = CrystalGraph::enumerate(datum, lambda, cap)?;
    demazure_strings_of(datum, &graph, w_word, w0_word)
}

/// True when `w0_word` starts with `w_word`, the adapted convention used here.
pub fn is_adapted(w0_word: &WeylWord, w_word: &WeylWord) -> bool {
    w0_word.letters().starts_with(w_word.letters())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::TypeLabel;
    use crate::characters::{demazure_character, weyl_dim};
    use crate::pathcrystal::DEFAULT_NODE_CAP;

    fn d(t: TypeLabel, r: usize) -> CartanDatum {
        CartanDatum::new(t, r).unwrap()
    }

    fn wt(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn sv(v: &[i64]) -> StringVector {
        StringVector(v.to_vec())
    }

    fn word(v: &[usize]) -> WeylWord {
        WeylWord(v.to_vec())
    }

    #[test]
    fn a1_chain_strings() {
        let a1 = d(TypeLabel::A, 1);
        let g = CrystalGraph::enumerate(&a1, &wt(&[3]), 100).unwrap();
        let mut node = 0;
        for k in 0..=3 {
            assert_eq!(string_param(&a1, &g, node, &word(&[1])).unwrap(), sv(&[k]));
            if let Some(next) = g.f(node, 0) {
                node = next;
            }
        }
        let image = string_image(&a1, &wt(&[2]), &word(&[1]), 100).unwrap();
        assert_eq!(image, BTreeSet::from([sv(&[0]), sv(&[1]), sv(&[2])]));
    }

    #[test]
    fn a2_fundamental_strings() {
        let a2 = d(TypeLabel::A, 2);
        let w0 = word(&[1, 2, 1]);
        let g = CrystalGraph::enumerate(&a2, &wt(&[1, 0]), 100).unwrap();
        let lowest = (0..g.len()).find(|&x| g.f(x, 0).is_none() && g.f(x, 1).is_none()).unwrap();
        assert_eq!(string_param(&a2, &g, lowest, &w0).unwrap(), sv(&[0, 1, 1]));
        assert_eq!(string_param(&a2, &g, 0, &w0).unwrap(), sv(&[0, 0, 0]));
        let image = string_image(&a2, &wt(&[1, 0]), &w0, 100).unwrap();
        assert_eq!(image, BTreeSet::from([sv(&[0, 0, 0]), sv(&[1, 0, 0]), sv(&[0, 1, 1])]));
        assert_eq!(string_image(&a2, &wt(&[0, 0]), &w0, 100).unwrap(), BTreeSet::from([sv(&[0, 0, 0])]));
        assert!(string_param(&a2, &g, 0, &word(&[1, 2])).is_err());
        assert!(string_param(&a2, &g, 0, &word(&[1, 1, 2])).is_err());
    }

    #[test]
    fn string_weights() {
        let a1 = d(TypeLabel::A, 1);
        assert_eq!(string_weight(&a1, &wt(&[5]), &sv(&[2]), &word(&[1])), wt(&[1]));
        let a2 = d(TypeLabel::A, 2);
        let w0 = word(&[1, 2, 1]);
        assert_eq!(string_weight(&a2, &wt(&[1, 0]), &sv(&[0, 0, 0]), &w0), wt(&[1, 0]));
        assert_eq!(string_weight(&a2, &wt(&[1, 0]), &sv(&[0, 1, 1]), &w0), wt(&[0, -1]));
        for (t, r) in [(TypeLabel::B, 2), (TypeLabel::G, 2), (TypeLabel::A, 3)] {
            let datum = d(t, r);
            let w0 = datum.longest_word();
            for lambda in datum.dominant_weights_up_to(1) {
                let g = CrystalGraph::enumerate(&datum, &lambda, DEFAULT_NODE_CAP).unwrap();
                for x in 0..g.len() {
                    let psi = string_param(&datum, &g, x, &w0).unwrap();
                    assert_eq!(&string_weight(&datum, &lambda, &psi, &w0), g.weight(x));
                }
            }
        }
    }

    #[test]
    fn weighted_point_counts() {
        let a1 = d(TypeLabel::A, 1);
        let pts = weighted_points(&a1, &word(&[1]), 1, 100).unwrap();
        let flat: Vec<Vec<i64>> = pts.iter().map(|p| p.to_point()).collect();
        assert_eq!(flat, vec![vec![0, 0], vec![1, 0], vec![1, 1]]);
        assert_eq!(weighted_points(&a1, &word(&[1]), 0, 100).unwrap().len(), 1);
        let a2 = d(TypeLabel::A, 2);
        assert_eq!(weighted_points(&a2, &word(&[1, 2, 1]), 1, 100).unwrap().len(), 15);
    }

    #[test]
    fn demazure_string_faces() {
        let a2 = d(TypeLabel::A, 2);
        let w0 = word(&[1, 2, 1]);
        assert_eq!(
            demazure_strings(&a2, &wt(&[1, 0]), &word(&[]), &w0, 100).unwrap(),
            BTreeSet::from([sv(&[0, 0, 0])])
        );
        assert_eq!(
            demazure_strings(&a2, &wt(&[1, 0]), &word(&[1]), &w0, 100).unwrap(),
            BTreeSet::from([sv(&[0, 0, 0]), sv(&[1, 0, 0])])
        );
        assert_eq!(
            demazure_strings(&a2, &wt(&[1, 1]), &w0, &w0, 100).unwrap(),
            string_image(&a2, &wt(&[1, 1]), &w0, 100).unwrap()
        );

        for (t, r) in [(TypeLabel::A, 2), (TypeLabel::B, 2), (TypeLabel::G, 2)] {
            let datum = d(t, r);
            for w in datum.weyl_group_elements() {
                let adapted = datum.adapted_word(&w).unwrap();
                assert!(is_adapted(&adapted, &w));
                for lambda in datum.dominant_weights_up_to(2) {
                    let strings = demazure_strings(&datum, &lambda, &w, &adapted, DEFAULT_NODE_CAP).unwrap();
                    assert!(strings.iter().all(|s| s.0[w.len()..].iter().all(|&x| x == 0)));
                    let dim = demazure_character(&datum, &lambda, &w).unwrap().dimension();
                    assert_eq!(strings.len() as i64, dim);
                }
            }
        }
    }

    #[test]
    fn semigroup_closure_a2_b2() {
        for (t, r) in [(TypeLabel::A, 2), (TypeLabel::B, 2)] {
            let datum = d(t, r);
            let w0 = datum.longest_word();
            let data = StringData::compute(&datum, &w0, 2, DEFAULT_NODE_CAP).unwrap();
            let low = data.restrict(1);
            for (l1, s1) in &low.images {
                for (l2, s2) in &low.images {
                    let target = &data.images[&l1.add(l2)];
                    for a in s1 {
                        for b in s2 {
                            assert!(target.contains(&a.add(b)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn counts_match_dimension_for_all_words() {
        let b2 = d(TypeLabel::B, 2);
        for w0 in b2.all_reduced_words(&b2.longest_word(), 10).unwrap() {
            for lambda in b2.dominant_weights_up_to(2) {
                let image = string_image(&b2, &lambda, &w0, DEFAULT_NODE_CAP).unwrap();
                assert_eq!(image.len() as u64, weyl_dim(&b2, &lambda).unwrap());
            }
        }
    }
}
