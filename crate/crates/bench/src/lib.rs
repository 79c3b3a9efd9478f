//! Fixtures shared by the benchmarks.

use stringcone::{CartanDatum, TypeLabel, Weight};

pub fn datum(label: TypeLabel, rank: usize) -> CartanDatum {
    CartanDatum::new(label, rank).expect("supported type")
}

/// `(datum, lambda)` pairs of moderate crystal size.
pub fn crystal_cases() -> Vec<(CartanDatum, Weight)> {
    vec![
        (datum(TypeLabel::A, 2), Weight(vec![2, 2])),
        (datum(TypeLabel::B, 2), Weight(vec![2, 2])),
        (datum(TypeLabel::G, 2), Weight(vec![1, 1])),
        (datum(TypeLabel::A, 3), Weight(vec![1, 1, 1])),
    ]
}
