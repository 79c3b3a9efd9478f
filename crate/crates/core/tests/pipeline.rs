use stringcone::degeneration::{degeneration_certificate, CertificateOptions};
use stringcone::{CartanDatum, TypeLabel};

fn certify(label: TypeLabel, rank: usize, level_bound: i64, check_level: i64) {
    let datum = CartanDatum::new(label, rank).unwrap();
    let word = datum.longest_word();
    let opts = CertificateOptions { level_bound, check_level, record_timings: true, ..Default::default() };
    let report = degeneration_certificate(&datum, &word, None, &opts).unwrap();
    eprintln!(
        "{label}{rank}: rays {} facets {} hilbert {} relations {} level {} timings {:?}",
        report.rays.len(),
        report.facets.len(),
        report.hilbert_basis.len(),
        report.relations.len(),
        report.certified_level,
        report.timings_ms
    );
    assert!(report.passing(), "{:?}", report.failed_checks());
    assert!(report.certified_level >= check_level);
}

#[test]
fn b2_certificate() {
    certify(TypeLabel::B, 2, 2, 3);
}

#[test]
fn c2_certificate() {
    certify(TypeLabel::C, 2, 2, 3);
}

#[test]
fn g2_certificate() {
    certify(TypeLabel::G, 2, 1, 2);
}

#[test]
fn a3_certificate() {
    certify(TypeLabel::A, 3, 1, 2);
}

#[test]
fn adapted_demazure_words_give_faces() {
    let datum = CartanDatum::new(TypeLabel::B, 2).unwrap();
    for w in datum.weyl_group_elements() {
        let word = datum.adapted_word(&w).unwrap();
        let opts = CertificateOptions { level_bound: 1, ..Default::default() };
        let report = degeneration_certificate(&datum, &word, Some(&w), &opts).unwrap();
        assert!(report.passing(), "{w}: {:?}", report.failed_checks());
    }
}
