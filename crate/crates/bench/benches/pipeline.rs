use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use stringcone::degeneration::{degeneration_certificate, CertificateOptions};
use stringcone::pathcrystal::{CrystalGraph, DEFAULT_NODE_CAP};
use stringcone::polyhedra::{hilbert_basis, RationalCone};
use stringcone::strings::{string_image_of, StringData};
use stringcone::TypeLabel;
use stringcone_bench::{crystal_cases, datum};

fn crystals(c: &mut Criterion) {
    let mut group = c.benchmark_group("crystal");
    for (d, lambda) in crystal_cases() {
        let id = format!("{}{} {}", d.type_label, d.rank, lambda);
        group.bench_function(BenchmarkId::new("enumerate", &id), |b| {
            b.iter(|| CrystalGraph::enumerate(&d, &lambda, DEFAULT_NODE_CAP).unwrap())
        });
        let graph = CrystalGraph::enumerate(&d, &lambda, DEFAULT_NODE_CAP).unwrap();
        let word = d.longest_word();
        group.bench_function(BenchmarkId::new("string_image", &id), |b| {
            b.iter(|| string_image_of(&d, &graph, &word).unwrap())
        });
    }
    group.finish();
}

fn cones(c: &mut Criterion) {
    let mut group = c.benchmark_group("cone");
    group.sample_size(10);
    for (label, rank, level) in [(TypeLabel::A, 2, 2), (TypeLabel::B, 2, 2), (TypeLabel::A, 3, 1)] {
        let d = datum(label, rank);
        let data = StringData::compute(&d, &d.longest_word(), level, DEFAULT_NODE_CAP).unwrap();
        let points: Vec<Vec<i64>> = data.points().iter().map(|p| p.to_point()).collect();
        let id = format!("{label}{rank} level {level}");
        group.bench_function(BenchmarkId::new("conic_hull", &id), |b| b.iter(|| RationalCone::conic_hull(&points).unwrap()));
        let cone = RationalCone::conic_hull(&points).unwrap();
        let mut grading = vec![1; rank];
        grading.resize(cone.ambient_dim(), 0);
        group.bench_function(BenchmarkId::new("hilbert_basis", &id), |b| b.iter(|| hilbert_basis(&cone, &grading).unwrap()));
    }
    group.finish();
}

fn certificates(c: &mut Criterion) {
    let mut group = c.benchmark_group("certificate");
    group.sample_size(10);
    for (label, rank) in [(TypeLabel::A, 2), (TypeLabel::B, 2)] {
        let d = datum(label, rank);
        let word = d.longest_word();
        let opts = CertificateOptions::default();
        group.bench_function(format!("{label}{rank}"), |b| {
            b.iter(|| degeneration_certificate(&d, &word, None, &opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, crystals, cones, certificates);
criterion_main!(benches);
