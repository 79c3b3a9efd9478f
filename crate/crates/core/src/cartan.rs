//! Root data and Weyl group combinatorics for the finite types we support.
//!
//! Conventions (fixed once, used everywhere):
//!
//! * `cartan[i][j] = <alpha_i, alpha_j^vee>`, so row `i` of the Cartan matrix is
//!   the simple root `alpha_i` written in the fundamental-weight basis.
//! * Symmetrizers `d_i = (alpha_i, alpha_i) / 2` normalised to coprime
//!   integers; with this orientation `cartan[i][j] * d[j] == cartan[j][i] * d[i]`.
//! * Non-simply-laced orientation table:
//!
//! | type | Cartan matrix            | d         |
//! |------|--------------------------|-----------|
//! | B2   | `[[2,-2],[-1,2]]`        | `(2,1)`   |
//! | B3   | `a23 = -2, a32 = -1`     | `(2,2,1)` |
//! | C2   | `[[2,-1],[-2,2]]`        | `(1,2)`   |
//! | C3   | `a23 = -1, a32 = -2`     | `(1,1,2)` |
//! | G2   | `[[2,-1],[-3,2]]`        | `(1,3)`   |
//!
//! Words are written with letters `1..=n` and act right to left:
//! `(j1, ..., jk)` is the element `s_j1 * ... * s_jk`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLabel::A => "A",
            TypeLabel::B => "B",
            TypeLabel::C => "C",
            TypeLabel::D => "D",
            TypeLabel::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(TypeLabel::A),
            "B" | "b" => Ok(TypeLabel::B),
            "C" | "c" => Ok(TypeLabel::C),
            "D" | "d" => Ok(TypeLabel::D),
            "G" | "g" => Ok(TypeLabel::G),
            other => Err(Error::Parse(format!("unknown root system type '{other}'"))),
        }
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Sum of the coordinates; the grading used on the weighted cone.
    pub fn level(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// A word in the simple reflections, letters in `1..=rank`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn empty() -> Self {
        WeylWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn prefix(&self, len: usize) -> WeylWord {
        WeylWord(self.0[..len].to_vec())
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<i64> = self.0.iter().map(|&l| l as i64).collect();
        write_list(f, &v)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    for (k, x) in v.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    pub type_label: TypeLabel,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub symmetrizers: Vec<i64>,
    /// Positive roots in the simple-root basis, sorted by height then lexicographically.
    pub positive_roots: Vec<Vec<i64>>,
}

impl CartanDatum {
    pub fn new(type_label: TypeLabel, rank: usize) -> Result<Self> {
        let unsupported = || Error::UnsupportedType { label: type_label.to_string(), rank };
        let supported = match type_label {
            TypeLabel::A => (1..=4).contains(&rank),
            TypeLabel::B | TypeLabel::C => (2..=3).contains(&rank),
            TypeLabel::D => rank == 4,
            TypeLabel::G => rank == 2,
        };
        if !supported {
            return Err(unsupported());
        }

        let mut a = vec![vec![0i64; rank]; rank];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut d = vec![1i64; rank];
        let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match type_label {
            TypeLabel::A => {
                for i in 0..rank - 1 {
                    link(&mut a, i, i + 1);
                }
            }
            TypeLabel::B => {
                for i in 0..rank - 1 {
                    link(&mut a, i, i + 1);
                }
                // alpha_n short
                a[rank - 2][rank - 1] = -2;
                a[rank - 1][rank - 2] = -1;
                d = vec![2; rank];
                d[rank - 1] = 1;
            }
            TypeLabel::C => {
                for i in 0..rank - 1 {
                    link(&mut a, i, i + 1);
                }
                // alpha_n long
                a[rank - 2][rank - 1] = -1;
                a[rank - 1][rank - 2] = -2;
                d[rank - 1] = 2;
            }
            TypeLabel::D => {
                link(&mut a, 0, 1);
                link(&mut a, 1, 2);
                link(&mut a, 1, 3);
            }
            TypeLabel::G => {
                a[0][1] = -1;
                a[1][0] = -3;
                d = vec![1, 3];
            }
        }

        let mut datum = CartanDatum {
            type_label,
            rank,
            cartan_matrix: a,
            symmetrizers: d,
            positive_roots: Vec::new(),
        };
        datum.positive_roots = datum.close_positive_roots();
        Ok(datum)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, `N`.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// `alpha_i` (0-based index) in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.cartan_matrix[i]
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    pub fn check_letters(&self, word: &WeylWord) -> Result<()> {
        for &l in word.letters() {
            if l == 0 || l > self.rank {
                return Err(Error::LetterOutOfRange { letter: l, rank: self.rank });
            }
        }
        Ok(())
    }

    pub fn check_weight(&self, weight: &Weight) -> Result<()> {
        if weight.rank() != self.rank {
            return Err(Error::WeightArity {
                weight: weight.0.clone(),
                got: weight.rank(),
                expected: self.rank,
            });
        }
        Ok(())
    }

    pub fn check_dominant(&self, weight: &Weight) -> Result<()> {
        self.check_weight(weight)?;
        if !weight.is_dominant() {
            return Err(Error::NotDominant(weight.0.clone()));
        }
        Ok(())
    }

    /// `s_i(mu) = mu - <mu, alpha_i^vee> alpha_i`, with `i` 0-based.
    pub fn reflect_weight_in_place(&self, i: usize, mu: &mut [i64]) {
        let m = mu[i];
        if m != 0 {
            for (x, a) in mu.iter_mut().zip(&self.cartan_matrix[i]) {
                *x -= m * a;
            }
        }
    }

    pub fn apply_word(&self, word: &WeylWord, weight: &Weight) -> Result<Weight> {
        self.check_letters(word)?;
        self.check_weight(weight)?;
        let mut mu = weight.0.clone();
        for &l in word.letters().iter().rev() {
            self.reflect_weight_in_place(l - 1, &mut mu);
        }
        Ok(Weight(mu))
    }

    /// `<beta, alpha_i^vee>` for `beta` in simple-root coordinates.
    fn root_pairing(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().enumerate().map(|(k, c)| c * self.cartan_matrix[k][i]).sum()
    }

    fn reflect_root_in_place(&self, i: usize, beta: &mut [i64]) {
        let m = self.root_pairing(beta, i);
        beta[i] -= m;
    }

    fn close_positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let mut gamma = beta.clone();
                self.reflect_root_in_place(i, &mut gamma);
                if gamma.iter().all(|&c| c >= 0) && seen.insert(gamma.clone()) {
                    queue.push_back(gamma);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
        roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        roots
    }

    /// Image of a simple-root-coordinate vector under the word (right to left).
    fn act_on_root(&self, word: &[usize], beta: &[i64]) -> Vec<i64> {
        let mut gamma = beta.to_vec();
        for &l in word.iter().rev() {
            self.reflect_root_in_place(l - 1, &mut gamma);
        }
        gamma
    }

    /// Number of positive roots sent to negative roots by the element the word represents.
    pub fn inversion_count(&self, word: &WeylWord) -> Result<usize> {
        self.check_letters(word)?;
        Ok(self
            .positive_roots
            .iter()
            .filter(|beta| {
                let image = self.act_on_root(word.letters(), beta);
                image.iter().any(|&c| c < 0)
            })
            .count())
    }

    pub fn is_reduced(&self, word: &WeylWord) -> Result<bool> {
        Ok(self.inversion_count(word)? == word.len())
    }

    pub fn require_reduced(&self, word: &WeylWord) -> Result<()> {
        if !self.is_reduced(word)? {
            return Err(Error::NotReduced(word.0.clone()));
        }
        Ok(())
    }

    /// Rejects anything that is not a reduced word of `w0`.
    pub fn require_longest(&self, word: &WeylWord) -> Result<()> {
        let n = self.num_positive_roots();
        if word.len() != n {
            return Err(Error::NotLongestWord { word: word.0.clone(), got: word.len(), expected: n });
        }
        self.require_reduced(word)
    }

    /// Reduced word for `w0`, obtained by descending from `rho` to `-rho`:
    /// at each step the smallest index with a positive coordinate is reflected.
    pub fn longest_word(&self) -> WeylWord {
        let mut mu = self.rho().0;
        let mut letters = Vec::new();
        while let Some(i) = mu.iter().position(|&c| c > 0) {
            self.reflect_weight_in_place(i, &mut mu);
            letters.push(i + 1);
        }
        // s_{ik} ... s_{i1} rho = -rho; w0 is an involution so the forward order is also a word for it.
        WeylWord(letters)
    }

    /// `m_ij`, the order of `s_i s_j` (0-based indices).
    pub fn braid_order(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        match self.cartan_matrix[i][j] * self.cartan_matrix[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            p => unreachable!("finite type has a_ij a_ji in 0..=3, got {p}"),
        }
    }

    /// Every reduced word of the element represented by `element_word`,
    /// found by closing under braid moves. Output is sorted lexicographically.
    pub fn all_reduced_words(&self, element_word: &WeylWord, cap: usize) -> Result<Vec<WeylWord>> {
        self.require_reduced(element_word)?;
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(element_word.0.clone());
        queue.push_back(element_word.0.clone());
        while let Some(word) = queue.pop_front() {
            for next in self.braid_neighbours(&word) {
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded { what: "reduced word enumeration".into(), cap });
                    }
                    queue.push_back(next);
                }
            }
        }
        Ok(seen.into_iter().map(WeylWord).collect())
    }

    fn braid_neighbours(&self, word: &[usize]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for start in 0..word.len() {
            let i = word[start];
            for j in 1..=self.rank {
                if j == i {
                    continue;
                }
                let m = self.braid_order(i - 1, j - 1);
                if start + m > word.len() {
                    continue;
                }
                let matches = (0..m).all(|k| word[start + k] == if k % 2 == 0 { i } else { j });
                if matches {
                    let mut next = word.to_vec();
                    for k in 0..m {
                        next[start + k] = if k % 2 == 0 { j } else { i };
                    }
                    out.push(next);
                }
            }
        }
        out
    }

    /// Extends a reduced word for `w` to a reduced word of `w0` whose prefix is `w_word`.
    pub fn adapted_word(&self, w_word: &WeylWord) -> Result<WeylWord> {
        self.require_reduced(w_word)?;
        let mut letters = w_word.0.clone();
        let n = self.num_positive_roots();
        while letters.len() < n {
            // w s_j is longer than w iff w(alpha_j) > 0
            let j = (1..=self.rank)
                .find(|&j| {
                    let mut e = vec![0; self.rank];
                    e[j - 1] = 1;
                    self.act_on_root(&letters, &e).iter().all(|&c| c >= 0)
                })
                .expect("an element shorter than w0 has a right ascent");
            letters.push(j);
        }
        Ok(WeylWord(letters))
    }

    /// One reduced word per element of `W`, in breadth-first (length) order.
    pub fn weyl_group_elements(&self) -> Vec<WeylWord> {
        let rho = self.rho();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut out = vec![WeylWord::empty()];
        seen.insert(rho.0.clone(), ());
        let mut frontier = vec![WeylWord::empty()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for j in 1..=self.rank {
                    let mut cand = w.0.clone();
                    cand.push(j);
                    let cand = WeylWord(cand);
                    let image = self.apply_word(&cand, &rho).expect("letters in range");
                    if seen.contains_key(&image.0) {
                        continue;
                    }
                    // a new element at this BFS depth is automatically reduced
                    seen.insert(image.0, ());
                    next.push(cand.clone());
                    out.push(cand);
                }
            }
            frontier = next;
        }
        out
    }

    /// Same group element, decided by the action on the regular weight `rho`.
    pub fn same_element(&self, u: &WeylWord, v: &WeylWord) -> Result<bool> {
        let rho = self.rho();
        Ok(self.apply_word(u, &rho)? == self.apply_word(v, &rho)?)
    }

    /// `sum_k c_k d_k mu_k`, proportional to `<mu, beta^vee>` for a positive root
    /// `beta = sum_k c_k alpha_k`; the proportionality factor depends only on `beta`.
    pub fn scaled_coroot_pairing(&self, mu: &[i64], beta: &[i64]) -> i64 {
        beta.iter()
            .zip(&self.symmetrizers)
            .zip(mu)
            .map(|((c, d), m)| c * d * m)
            .sum()
    }

    /// `alpha` (simple-root coordinates) expressed in fundamental-weight coordinates.
    pub fn root_to_weight(&self, beta: &[i64]) -> Weight {
        let mut w = vec![0; self.rank];
        for (k, &c) in beta.iter().enumerate() {
            for (x, a) in w.iter_mut().zip(&self.cartan_matrix[k]) {
                *x += c * a;
            }
        }
        Weight(w)
    }

    /// Dominant weights with every coordinate in `0..=bound`, lexicographic order.
    pub fn dominant_weights_up_to(&self, bound: i64) -> Vec<Weight> {
        let mut out = vec![Vec::new()];
        for _ in 0..self.rank {
            let mut next = Vec::new();
            for prefix in &out {
                for c in 0..=bound.max(0) {
                    let mut p: Vec<i64> = prefix.clone();
                    p.push(c);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(Weight).collect()
    }
}

/// Parses `"1,2,1"` into a word; the empty string is the empty word.
impl FromStr for WeylWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" || s == "e" {
            return Ok(WeylWord::empty());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("malformed word letter '{t}' in '{s}'")))
            })
            .collect::<Result<Vec<_>>>()
            .map(WeylWord)
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("malformed weight coordinate '{t}' in '{s}'")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(t: TypeLabel, r: usize) -> CartanDatum {
        CartanDatum::new(t, r).unwrap()
    }

    fn w(v: &[usize]) -> WeylWord {
        WeylWord(v.to_vec())
    }

    const SUPPORTED: &[(TypeLabel, usize)] = &[
        (TypeLabel::A, 1),
        (TypeLabel::A, 2),
        (TypeLabel::A, 3),
        (TypeLabel::A, 4),
        (TypeLabel::B, 2),
        (TypeLabel::B, 3),
        (TypeLabel::C, 2),
        (TypeLabel::C, 3),
        (TypeLabel::D, 4),
        (TypeLabel::G, 2),
    ];

    #[test]
    fn small_cartan_matrices() {
        let a1 = datum(TypeLabel::A, 1);
        assert_eq!(a1.cartan_matrix, vec![vec![2]]);
        assert_eq!(a1.num_positive_roots(), 1);

        let a2 = datum(TypeLabel::A, 2);
        assert_eq!(a2.cartan_matrix, vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.symmetrizers, vec![1, 1]);

        let g2 = datum(TypeLabel::G, 2);
        assert_eq!(g2.cartan_matrix, vec![vec![2, -1], vec![-3, 2]]);
        assert_eq!(g2.symmetrizers, vec![1, 3]);
        assert_eq!(g2.num_positive_roots(), 6);
    }

    #[test]
    fn root_counts() {
        let expected = [1, 3, 6, 10, 4, 9, 4, 9, 12, 6];
        for (&(t, r), &n) in SUPPORTED.iter().zip(&expected) {
            assert_eq!(datum(t, r).num_positive_roots(), n, "{t}{r}");
        }
    }

    #[test]
    fn unsupported_rejected() {
        assert!(matches!(CartanDatum::new(TypeLabel::A, 0), Err(Error::UnsupportedType { .. })));
        assert!(CartanDatum::new(TypeLabel::A, 5).is_err());
        assert!(CartanDatum::new(TypeLabel::B, 1).is_err());
        assert!(CartanDatum::new(TypeLabel::D, 3).is_err());
        assert!(CartanDatum::new(TypeLabel::G, 3).is_err());
    }

    #[test]
    fn cartan_invariants() {
        for &(t, r) in SUPPORTED {
            let d = datum(t, r);
            let a = &d.cartan_matrix;
            for i in 0..r {
                assert_eq!(a[i][i], 2);
                for j in 0..r {
                    if i != j {
                        assert!(a[i][j] <= 0);
                        assert_eq!(a[i][j] == 0, a[j][i] == 0);
                    }
                    assert_eq!(a[i][j] * d.symmetrizers[j], a[j][i] * d.symmetrizers[i]);
                }
            }
        }
    }

    #[test]
    fn apply_word_examples() {
        let a1 = datum(TypeLabel::A, 1);
        assert_eq!(a1.apply_word(&w(&[]), &Weight(vec![3])).unwrap(), Weight(vec![3]));
        assert_eq!(a1.apply_word(&w(&[1]), &Weight(vec![3])).unwrap(), Weight(vec![-3]));
        let a2 = datum(TypeLabel::A, 2);
        assert_eq!(a2.apply_word(&w(&[1]), &Weight(vec![1, 0])).unwrap(), Weight(vec![-1, 1]));
        assert!(matches!(
            a2.apply_word(&w(&[3]), &Weight(vec![1, 0])),
            Err(Error::LetterOutOfRange { letter: 3, rank: 2 })
        ));
    }

    #[test]
    fn reducedness() {
        let a2 = datum(TypeLabel::A, 2);
        assert!(!a2.is_reduced(&w(&[1, 1])).unwrap());
        assert!(a2.is_reduced(&w(&[1, 2, 1])).unwrap());
        assert!(a2.is_reduced(&w(&[])).unwrap());
        assert!(!a2.is_reduced(&w(&[1, 2, 1, 2])).unwrap());
    }

    #[test]
    fn longest_words() {
        assert_eq!(datum(TypeLabel::A, 1).longest_word(), w(&[1]));
        assert_eq!(datum(TypeLabel::A, 2).longest_word(), w(&[1, 2, 1]));
        assert_eq!(datum(TypeLabel::B, 2).longest_word(), w(&[1, 2, 1, 2]));
        for &(t, r) in SUPPORTED {
            let d = datum(t, r);
            let w0 = d.longest_word();
            assert_eq!(w0.len(), d.num_positive_roots(), "{t}{r}");
            assert!(d.is_reduced(&w0).unwrap());
            let rho = d.rho();
            let neg: Vec<i64> = rho.0.iter().map(|x| -x).collect();
            assert_eq!(d.apply_word(&w0, &rho).unwrap().0, neg);
        }
    }

    #[test]
    fn reduced_word_sets() {
        let a1 = datum(TypeLabel::A, 1);
        assert_eq!(a1.all_reduced_words(&w(&[1]), 10).unwrap(), vec![w(&[1])]);
        let a2 = datum(TypeLabel::A, 2);
        assert_eq!(a2.all_reduced_words(&a2.longest_word(), 10).unwrap(), vec![w(&[1, 2, 1]), w(&[2, 1, 2])]);
        let b2 = datum(TypeLabel::B, 2);
        assert_eq!(
            b2.all_reduced_words(&b2.longest_word(), 10).unwrap(),
            vec![w(&[1, 2, 1, 2]), w(&[2, 1, 2, 1])]
        );
        let g2 = datum(TypeLabel::G, 2);
        assert_eq!(g2.all_reduced_words(&g2.longest_word(), 10).unwrap().len(), 2);
        let a3 = datum(TypeLabel::A, 3);
        let words = a3.all_reduced_words(&a3.longest_word(), 100).unwrap();
        assert_eq!(words.len(), 16);
        assert!(matches!(a3.all_reduced_words(&a3.longest_word(), 5), Err(Error::CapExceeded { .. })));
        for word in &words {
            assert!(a3.is_reduced(word).unwrap());
            assert!(a3.same_element(word, &a3.longest_word()).unwrap());
        }
    }

    #[test]
    fn adapted_words() {
        let a2 = datum(TypeLabel::A, 2);
        assert_eq!(a2.adapted_word(&w(&[1])).unwrap(), w(&[1, 2, 1]));
        assert_eq!(a2.adapted_word(&w(&[1, 2, 1])).unwrap(), w(&[1, 2, 1]));
        assert_eq!(a2.adapted_word(&w(&[])).unwrap().len(), 3);
        for &(t, r) in SUPPORTED {
            let d = datum(t, r);
            for v in d.weyl_group_elements() {
                let ad = d.adapted_word(&v).unwrap();
                assert_eq!(ad.len(), d.num_positive_roots());
                assert!(d.is_reduced(&ad).unwrap());
                assert_eq!(ad.prefix(v.len()), v);
            }
        }
    }

    #[test]
    fn weyl_group_orders() {
        let orders = [2, 6, 24, 120, 8, 48, 8, 48, 192, 12];
        for (&(t, r), &o) in SUPPORTED.iter().zip(&orders) {
            let d = datum(t, r);
            let els = d.weyl_group_elements();
            assert_eq!(els.len(), o, "{t}{r}");
            assert!(els.iter().all(|e| d.is_reduced(e).unwrap()));
        }
    }

    #[test]
    fn parsing() {
        assert_eq!("1,2,1".parse::<WeylWord>().unwrap(), w(&[1, 2, 1]));
        assert_eq!("".parse::<WeylWord>().unwrap(), w(&[]));
        assert!("1,x".parse::<WeylWord>().is_err());
        assert_eq!("1, -2".parse::<Weight>().unwrap(), Weight(vec![1, -2]));
        assert_eq!("g".parse::<TypeLabel>().unwrap(), TypeLabel::G);
        assert!("Z".parse::<TypeLabel>().is_err());
    }
}
