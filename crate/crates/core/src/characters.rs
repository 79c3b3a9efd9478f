//! Character oracles: the Weyl dimension formula and Demazure operators on
//! the group algebra of the weight lattice. Nothing here touches crystals,
//! so these serve as independent checks for the crystal and cone code.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::cartan::{CartanDatum, Weight, WeylWord};
use crate::error::Result;

/// Finite `Z`-linear combination of formal exponentials `e^mu`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightPolynomial {
    terms: BTreeMap<Weight, i64>,
}

impl WeightPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(mu: Weight) -> Self {
        let mut p = Self::zero();
        p.add_term(mu, 1);
        p
    }

    pub fn add_term(&mut self, mu: Weight, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(mu) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn coefficient(&self, mu: &Weight) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    /// Terms in lexicographic order of the weights.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(k, v)| (k, *v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the coefficients (the dimension, for a character).
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl FromIterator<(Weight, i64)> for WeightPolynomial {
    fn from_iter<T: IntoIterator<Item = (Weight, i64)>>(iter: T) -> Self {
        let mut p = WeightPolynomial::zero();
        for (mu, c) in iter {
            p.add_term(mu, c);
        }
        p
    }
}

pub fn dimension_of(f: &WeightPolynomial) -> i64 {
    f.dimension()
}

/// `prod_{beta > 0} <lambda + rho, beta^vee> / <rho, beta^vee>`.
pub fn weyl_dim(datum: &CartanDatum, lambda: &Weight) -> Result<u64> {
    datum.check_dominant(lambda)?;
    let shifted: Vec<i64> = lambda.0.iter().map(|c| c + 1).collect();
    let rho = datum.rho();
    let mut acc = BigRational::one();
    for beta in &datum.positive_roots {
        let num = datum.scaled_coroot_pairing(&shifted, beta);
        let den = datum.scaled_coroot_pairing(&rho.0, beta);
        acc *= BigRational::new(BigInt::from(num), BigInt::from(den));
    }
    assert!(acc.is_integer(), "Weyl dimension of {lambda:?} is not integral: {acc}");
    Ok(acc.to_integer().to_u64().expect("dimension fits in u64"))
}

/// Demazure operator `D_i` (0-based `i`), linear extension of
/// `e^mu -> (e^mu - e^{s_i mu - alpha_i}) / (1 - e^{-alpha_i})`.
pub fn demazure_operator(datum: &CartanDatum, i: usize, f: &WeightPolynomial) -> WeightPolynomial {
    let alpha = datum.simple_root(i);
    let mut out = WeightPolynomial::zero();
    for (mu, c) in f.terms() {
        let m = mu.0[i];
        if m >= 0 {
            // e^mu + e^{mu - alpha} + ... + e^{mu - m alpha}
            let mut nu = mu.0.clone();
            for step in 0..=m {
                if step > 0 {
                    for (x, a) in nu.iter_mut().zip(alpha) {
                        *x -= a;
                    }
                }
                out.add_term(Weight(nu.clone()), c);
            }
        } else if m <= -2 {
            // -(e^{mu + alpha} + ... + e^{s_i mu - alpha}), that is -m - 1 terms
            let mut nu = mu.0.clone();
            for _ in 0..(-m - 1) {
                for (x, a) in nu.iter_mut().zip(alpha) {
                    *x += a;
                }
                out.add_term(Weight(nu.clone()), -c);
            }
        }
    }
    out
}

/// `D_{j1} o ... o D_{jp} (e^lambda)`: the last letter acts first.
pub fn demazure_character(datum: &CartanDatum, lambda: &Weight, w_word: &WeylWord) -> Result<WeightPolynomial> {
    datum.check_dominant(lambda)?;
    datum.require_reduced(w_word)?;
    let mut f = WeightPolynomial::monomial(lambda.clone());
    for &l in w_word.letters().iter().rev() {
        f = demazure_operator(datum, l - 1, &f);
    }
    Ok(f)
}

/// Full Weyl character, via the Demazure character of the longest element.
pub fn weyl_character(datum: &CartanDatum, lambda: &Weight) -> Result<WeightPolynomial> {
    demazure_character(datum, lambda, &datum.longest_word())
}
