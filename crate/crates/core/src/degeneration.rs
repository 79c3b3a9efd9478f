//! Toric degeneration certificates.
//!
//! The pipeline infers the weighted string cone from enumerated data, certifies
//! it by saturation, computes its Hilbert basis and relation lattice, builds a
//! linear form separating every equal-weight pair of strings, and optionally
//! checks that a Demazure image is a face.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::cartan::{CartanDatum, TypeLabel, Weight, WeylWord};
use crate::characters::{demazure_character, dimension_of, weyl_dim};
use crate::error::{Error, Result};
use crate::pathcrystal::CrystalGraph;
use crate::polyhedra::hilbert::Decomposer;
use crate::polyhedra::linalg::{dot, integer_kernel, to_big, to_i64};
use crate::polyhedra::{
    hilbert_basis, is_face, lattice_points_in_section, saturation_check, supports_face, RationalCone, SaturationReport,
};
use crate::strings::{demazure_strings_of, is_adapted, string_weight, StringData, StringVector, WeightedPoint};

/// Levels above the requested bound the inference loop may try before giving up.
pub const MAX_EXTRA_LEVELS: i64 = 3;

/// Cone inferred from string data together with its certification.
#[derive(Debug, Clone)]
pub struct InferredCone {
    pub cone: RationalCone,
    /// Level of the data the hull was computed from.
    pub hull_level: i64,
    /// All sections with coordinates up to this level match the data.
    pub certified_level: i64,
    /// String data up to the certified level.
    pub data: StringData,
    pub saturation: SaturationReport,
}

fn fibres(data: &StringData) -> BTreeMap<Vec<i64>, BTreeSet<Vec<i64>>> {
    data.images.iter().map(|(l, s)| (l.0.clone(), s.iter().map(|p| p.0.clone()).collect())).collect()
}

fn points_of(data: &StringData) -> Vec<Vec<i64>> {
    data.points().iter().map(WeightedPoint::to_point).collect()
}

/// Points that are not the sum of two data points of smaller nonzero weight; their hull is the hull of all data.
fn hull_candidates(data: &StringData) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for (lambda, image) in &data.images {
        let smaller: Vec<(&Weight, &BTreeSet<StringVector>)> = data
            .images
            .iter()
            .filter(|(mu, _)| *mu != lambda && mu.0.iter().any(|&c| c > 0) && mu.0.iter().zip(&lambda.0).all(|(a, b)| a <= b))
            .collect();
        for psi in image {
            let decomposes = smaller.iter().any(|(mu, sub)| {
                let rest = Weight(lambda.0.iter().zip(&mu.0).map(|(a, b)| a - b).collect());
                data.images.get(&rest).is_some_and(|other| {
                    sub.iter().any(|phi| {
                        let diff = StringVector(psi.0.iter().zip(&phi.0).map(|(a, b)| a - b).collect());
                        diff.0.iter().all(|&c| c >= 0) && other.contains(&diff)
                    })
                })
            });
            if !decomposes {
                out.push(WeightedPoint { lambda: lambda.clone(), psi: psi.clone() }.to_point());
            }
        }
    }
    out
}

/// Cone inference loop: hull of the data at level `L`, checked against the data at
/// `max(L + 1, check_level)`; `L` grows until both agree.
pub fn infer_cone(
    datum: &CartanDatum,
    word: &WeylWord,
    level_bound: i64,
    check_level: i64,
    cap: usize,
) -> Result<InferredCone> {
    let level_bound = level_bound.max(1);
    let limit = level_bound.max(check_level) + MAX_EXTRA_LEVELS;
    let mut hull_level = level_bound;
    let mut data = StringData::compute(datum, word, (hull_level + 1).max(check_level), cap)?;
    loop {
        let target = (hull_level + 1).max(check_level);
        if data.level < target {
            data = StringData::compute(datum, word, target, cap)?;
        }
        let hull_data = data.restrict(hull_level);
        let cone = RationalCone::conic_hull(&hull_candidates(&hull_data))?;
        let check_data = data.restrict(target);
        let saturation = saturation_check(&cone, &fibres(&check_data))?;
        if saturation.saturated() {
            return Ok(InferredCone { cone, hull_level, certified_level: target, data: check_data, saturation });
        }
        hull_level += 1;
        if hull_level > limit {
            return Err(Error::CapExceeded { what: "cone inference level".into(), cap: limit as usize });
        }
    }
}

/// Equal-weight pair of strings in one `B(lambda)`, with `phi` lexicographically below `psi`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StringPair {
    pub lambda: Weight,
    pub phi: StringVector,
    pub psi: StringVector,
}

/// All ordered equal-weight pairs of distinct strings within each image of `data`.
pub fn build_pairs(datum: &CartanDatum, data: &StringData) -> Vec<StringPair> {
    let mut out = Vec::new();
    for (lambda, image) in &data.images {
        let mut by_weight: BTreeMap<Weight, Vec<&StringVector>> = BTreeMap::new();
        for psi in image {
            by_weight.entry(string_weight(datum, lambda, psi, &data.word)).or_default().push(psi);
        }
        for group in by_weight.values() {
            for (a, phi) in group.iter().enumerate() {
                for psi in &group[a + 1..] {
                    let (phi, psi) = match phi.lex_cmp(psi) {
                        Ordering::Less => (*phi, *psi),
                        _ => (*psi, *phi),
                    };
                    out.push(StringPair { lambda: lambda.clone(), phi: phi.clone(), psi: psi.clone() });
                }
            }
        }
    }
    out.sort();
    out
}

/// Positive integer linear form `e` on string coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SeparatingForm {
    pub coefficients: Vec<i64>,
}

impl SeparatingForm {
    pub fn eval(&self, v: &[i64]) -> i64 {
        self.coefficients.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    pub fn separates(&self, phi: &[i64], psi: &[i64]) -> bool {
        self.eval(phi) < self.eval(psi)
    }
}

fn eval_rational(form: &[BigRational], v: &[i64]) -> BigRational {
    form.iter().zip(v).map(|(a, &b)| a * BigRational::from_integer(BigInt::from(b))).sum()
}

/// Form on `Z^len` with `e(phi) < e(psi)` for every pair, built coordinate by coordinate
/// from the last: `e_s = a_s + eps * e_{s+1}` where `eps` is the largest power of `1/2`
/// with `eps * e_{s+1}(phi) < psi_s - phi_s` on the pairs first separated at `s`.
pub fn separating_form(len: usize, pairs: &[(StringVector, StringVector)]) -> Result<SeparatingForm> {
    let mut first_split: Vec<Vec<(&StringVector, &StringVector)>> = vec![Vec::new(); len];
    for (phi, psi) in pairs {
        if phi.0.len() != len || psi.0.len() != len {
            return Err(Error::DimensionMismatch { expected: len, got: phi.0.len().max(psi.0.len()) });
        }
        match phi.0.iter().zip(&psi.0).position(|(a, b)| a != b) {
            Some(s) if phi.0[s] < psi.0[s] => first_split[s].push((phi, psi)),
            _ => return Err(Error::InvalidPair { phi: phi.0.clone(), psi: psi.0.clone() }),
        }
    }
    if len == 0 {
        return Ok(SeparatingForm { coefficients: Vec::new() });
    }
    let mut form = vec![BigRational::zero(); len];
    form[len - 1] = BigRational::one();
    for s in (0..len - 1).rev() {
        let mut eps = BigRational::one();
        for (phi, psi) in &first_split[s] {
            let gap = BigRational::from_integer(BigInt::from(psi.0[s] - phi.0[s]));
            let tail = eval_rational(&form, &phi.0);
            while &eps * &tail >= gap {
                eps /= BigRational::from_integer(BigInt::from(2));
            }
        }
        for c in form.iter_mut() {
            *c *= &eps;
        }
        form[s] = BigRational::one();
    }
    let denominator = form.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let coefficients = form
        .iter()
        .map(|c| {
            let v = (c * BigRational::from_integer(denominator.clone())).to_integer();
            v.to_i64().ok_or_else(|| Error::Overflow(v.to_string()))
        })
        .collect::<Result<Vec<i64>>>()?;
    let out = SeparatingForm { coefficients };
    debug_assert!(pairs.iter().all(|(phi, psi)| out.separates(&phi.0, &psi.0)));
    Ok(out)
}

/// Integer kernel basis of the matrix with the generators as columns.
pub fn lattice_relations(generators: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let columns: Vec<_> = generators.iter().map(|g| to_big(g)).collect();
    integer_kernel(&columns).iter().map(|v| to_i64(v)).collect()
}

pub fn relation_balances(generators: &[Vec<i64>], relation: &[i64]) -> bool {
    let dim = generators.first().map_or(0, Vec::len);
    (0..dim).all(|c| {
        generators.iter().zip(relation).map(|(g, &v)| BigInt::from(g[c]) * v).sum::<BigInt>().is_zero()
    })
}

/// Demazure image of `w` inside the weighted string cone.
#[derive(Debug, Clone)]
pub struct DemazureQuotient {
    pub word: WeylWord,
    pub adapted: bool,
    pub points: BTreeMap<Weight, BTreeSet<StringVector>>,
    pub dimensions: BTreeMap<Weight, i64>,
    pub is_face: bool,
    pub normal: Option<Vec<i64>>,
    /// The face is cut out by the string coordinates past the length of `w`.
    pub coordinate_face: bool,
    /// Every string vanishes past the length of `w`.
    pub zero_tail: bool,
}

pub fn demazure_quotient(
    datum: &CartanDatum,
    cone: &RationalCone,
    w0_word: &WeylWord,
    w_word: &WeylWord,
    level_bound: i64,
    cap: usize,
) -> Result<DemazureQuotient> {
    datum.require_reduced(w_word)?;
    let entries: Vec<(Weight, BTreeSet<StringVector>, i64)> = datum
        .dominant_weights_up_to(level_bound)
        .into_par_iter()
        .map(|lambda| {
            let graph = CrystalGraph::enumerate(datum, &lambda, cap)?;
            let strings = demazure_strings_of(datum, &graph, w_word, w0_word)?;
            let dim = dimension_of(&demazure_character(datum, &lambda, w_word)?);
            Ok((lambda, strings, dim))
        })
        .collect::<Result<_>>()?;
    let rank = datum.rank();
    let ell = w_word.len();
    let mut all_points = Vec::new();
    let mut points = BTreeMap::new();
    let mut dimensions = BTreeMap::new();
    for (lambda, strings, dim) in entries {
        for psi in &strings {
            all_points.push(WeightedPoint { lambda: lambda.clone(), psi: psi.clone() }.to_point());
        }
        dimensions.insert(lambda.clone(), dim);
        points.insert(lambda, strings);
    }
    let zero_tail = points.values().flatten().all(|psi| psi.0[ell..].iter().all(|&c| c == 0));
    let face = is_face(cone, &all_points)?;
    let normal = face.normal.as_ref().map(|n| to_i64(n)).transpose()?;
    let mut coordinate = vec![BigInt::zero(); cone.ambient_dim()];
    for c in coordinate.iter_mut().skip(rank + ell) {
        *c = BigInt::one();
    }
    let coordinate_face = face.is_face
        && cone.rays().iter().all(|r| !dot(&coordinate, r).is_negative())
        && supports_face(cone, &coordinate, &face.face_rays);
    Ok(DemazureQuotient {
        adapted: is_adapted(w0_word, w_word),
        word: w_word.clone(),
        points,
        dimensions,
        is_face: face.is_face,
        normal,
        coordinate_face,
        zero_tail,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionRecord {
    pub lambda: Weight,
    pub points: usize,
    pub weyl_dim: u64,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub demazure_points: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub demazure_dim: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub demazure_match: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DemazureSummary {
    pub word: WeylWord,
    pub adapted: bool,
    pub face: bool,
    pub normal: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeSummary {
    pub rays: Vec<Vec<i64>>,
    pub facets: Vec<Vec<i64>>,
}

/// Certificate; field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegenerationReport {
    #[serde(rename = "type")]
    pub type_label: TypeLabel,
    pub rank: usize,
    pub word: WeylWord,
    pub demazure_word: Option<DemazureSummary>,
    pub rays: Vec<Vec<i64>>,
    pub facets: Vec<Vec<i64>>,
    pub certified_level: i64,
    pub hilbert_basis: Vec<WeightedPoint>,
    pub relations: Vec<Vec<i64>>,
    pub weight_form: SeparatingForm,
    pub sections: Vec<SectionRecord>,
    pub checks: BTreeMap<String, bool>,
    pub timings_ms: BTreeMap<String, u64>,
}

impl DegenerationReport {
    pub fn passing(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|(_, &ok)| !ok).map(|(k, _)| k.as_str()).collect()
    }
}

#[derive(Debug, Clone)]
pub struct CertificateOptions {
    pub level_bound: i64,
    /// Sections are certified at least up to this level.
    pub check_level: i64,
    pub cap: usize,
    pub record_timings: bool,
}

impl Default for CertificateOptions {
    fn default() -> Self {
        CertificateOptions { level_bound: 2, check_level: 0, cap: crate::pathcrystal::DEFAULT_NODE_CAP, record_timings: false }
    }
}

struct Stopwatch {
    enabled: bool,
    last: Instant,
    timings: BTreeMap<String, u64>,
}

impl Stopwatch {
    fn lap(&mut self, stage: &str) {
        if self.enabled {
            self.timings.insert(stage.to_string(), self.last.elapsed().as_millis() as u64);
        }
        self.last = Instant::now();
    }
}

pub fn degeneration_certificate(
    datum: &CartanDatum,
    w0_word: &WeylWord,
    w_word: Option<&WeylWord>,
    options: &CertificateOptions,
) -> Result<DegenerationReport> {
    datum.require_longest(w0_word).map_err(|e| e.at_stage("input"))?;
    if let Some(w) = w_word {
        datum.require_reduced(w).map_err(|e| e.at_stage("input"))?;
    }
    let rank = datum.rank();
    let mut clock = Stopwatch { enabled: options.record_timings, last: Instant::now(), timings: BTreeMap::new() };
    let mut checks: BTreeMap<String, bool> = BTreeMap::new();

    let inferred = infer_cone(datum, w0_word, options.level_bound, options.check_level, options.cap)
        .map_err(|e| e.at_stage("cone"))?;
    clock.lap("cone");
    let cone = &inferred.cone;
    checks.insert("saturation".into(), inferred.saturation.saturated());

    let mut sections = Vec::new();
    for s in &inferred.saturation.sections {
        let lambda = Weight(s.lambda.clone());
        let dim = weyl_dim(datum, &lambda).map_err(|e| e.at_stage("sections"))?;
        sections.push(SectionRecord {
            lambda,
            points: s.cone_count,
            weyl_dim: dim,
            matches: s.cone_count as u64 == dim,
            demazure_points: None,
            demazure_dim: None,
            demazure_match: None,
        });
    }
    checks.insert("section_dimensions".into(), sections.iter().all(|s| s.matches));
    checks.insert(
        "sections_consistent".into(),
        sections.iter().zip(inferred.data.images.values()).all(|(s, image)| s.points == image.len()),
    );

    let mut grading = vec![1; rank];
    grading.resize(cone.ambient_dim(), 0);
    let basis = hilbert_basis(cone, &grading).map_err(|e| e.at_stage("hilbert"))?;
    clock.lap("hilbert");
    let generators = basis.elements.clone();
    let minimal = (0..generators.len()).all(|k| {
        let others: Vec<Vec<i64>> =
            generators.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, g)| g.clone()).collect();
        !Decomposer::new(cone, &others).decomposes(&generators[k])
    });
    checks.insert("hilbert_minimal".into(), minimal);
    let mut decomposer = Decomposer::new(cone, &generators);
    let generates = points_of(&inferred.data).iter().all(|p| decomposer.decomposes(p));
    checks.insert("hilbert_generates".into(), generates);
    clock.lap("hilbert_checks");

    let relations = lattice_relations(&generators).map_err(|e| e.at_stage("relations"))?;
    checks.insert("relations_balance".into(), relations.iter().all(|r| relation_balances(&generators, r)));
    clock.lap("relations");

    let pair_data = inferred.data.restrict(options.level_bound.max(0));
    let pairs = build_pairs(datum, &pair_data);
    checks.insert(
        "pairs_grading_compatible".into(),
        pairs.iter().all(|p| {
            string_weight(datum, &p.lambda, &p.phi, w0_word) == string_weight(datum, &p.lambda, &p.psi, w0_word)
                && p.phi.lex_cmp(&p.psi) == Ordering::Less
        }),
    );
    let plain: Vec<(StringVector, StringVector)> = pairs.iter().map(|p| (p.phi.clone(), p.psi.clone())).collect();
    let form = separating_form(w0_word.len(), &plain).map_err(|e| e.at_stage("form"))?;
    checks.insert("form_positive".into(), form.coefficients.iter().all(|&c| c >= 1));
    checks.insert("form_separates".into(), plain.iter().all(|(phi, psi)| form.separates(&phi.0, &psi.0)));
    clock.lap("form");

    let demazure = match w_word {
        None => None,
        Some(w) => {
            // rays of the cone come from hull-level data, so the face test needs at least that level
            let level = options.level_bound.max(inferred.hull_level);
            let q = demazure_quotient(datum, cone, w0_word, w, level, options.cap)
                .map_err(|e| e.at_stage("demazure"))?;
            for s in sections.iter_mut() {
                if let (Some(pts), Some(&dim)) = (q.points.get(&s.lambda), q.dimensions.get(&s.lambda)) {
                    s.demazure_points = Some(pts.len());
                    s.demazure_dim = Some(dim);
                    s.demazure_match = Some(pts.len() as i64 == dim);
                }
            }
            checks.insert(
                "demazure_dimensions".into(),
                q.points.iter().all(|(l, pts)| q.dimensions.get(l) == Some(&(pts.len() as i64))),
            );
            if q.adapted {
                checks.insert("demazure_zero_tail".into(), q.zero_tail);
                checks.insert("demazure_face".into(), q.is_face);
                checks.insert("demazure_coordinate_face".into(), q.coordinate_face);
            }
            clock.lap("demazure");
            Some(DemazureSummary { word: q.word, adapted: q.adapted, face: q.is_face, normal: q.normal })
        }
    };

    Ok(DegenerationReport {
        type_label: datum.type_label,
        rank,
        word: w0_word.clone(),
        demazure_word: demazure,
        rays: cone.rays_i64()?,
        facets: cone.facets_i64()?,
        certified_level: inferred.certified_level,
        hilbert_basis: generators.iter().map(|g| WeightedPoint::from_point(g, rank)).collect(),
        relations,
        weight_form: form,
        sections,
        checks,
        timings_ms: clock.timings,
    })
}

/// Integral points of the section of `cone` over `lambda`, as strings.
pub fn section_strings(cone: &RationalCone, lambda: &Weight) -> Result<BTreeSet<StringVector>> {
    Ok(lattice_points_in_section(cone, &lambda.0)?.into_iter().map(StringVector).collect())
}
