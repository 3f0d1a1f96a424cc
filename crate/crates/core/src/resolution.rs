//! Exhaustive check that `A_n` supports a cellular resolution of `J_n`.
//!
//! A labeled complex supports a resolution iff every restriction
//! `X_{<=sigma}` is acyclic or empty, and the resolution is minimal iff no
//! cover pair has equal labels. Squarefree `sigma` suffice since `J_n` is
//! squarefree, so the sweep visits all `2^n` vertex subsets.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{build, restrict, LabeledComplex, MonomialLabel};
use crate::error::{Error, Result};
use crate::field::FieldKind;
use crate::homology::{acyclicity, Acyclicity};
use crate::polygon::{check_polygon, Diagonal};

/// Largest `n` verified unless the caller raises the cap.
pub const DEFAULT_MAX_N: usize = 8;

/// What went wrong at one `sigma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FailureKind {
    /// The restriction has nonvanishing reduced homology.
    NotAcyclic,
    /// The cone apex disagrees with the homology verdict or misses a facet.
    ConeMismatch {
        apex: Option<Diagonal>,
        verdict: Acyclicity,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub sigma: MonomialLabel,
    #[serde(flatten)]
    pub kind: FailureKind,
}

/// A cover pair with equal labels, rendered for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub lower: String,
    pub upper: String,
    pub label: MonomialLabel,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionReport {
    pub n: usize,
    #[serde(serialize_with = "field_name")]
    pub field: FieldKind,
    pub checked: usize,
    /// Sorted by `sigma`; the first entry is the first failing subset.
    pub failures: Vec<Failure>,
    pub minimal: bool,
    pub witnesses: Vec<Witness>,
}

fn field_name<S: serde::Serializer>(f: &FieldKind, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(f.name())
}

impl ResolutionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies the resolution property of `A_n` for `4 <= n <= DEFAULT_MAX_N`.
pub fn verify_supports_resolution(n: usize, field: FieldKind) -> Result<ResolutionReport> {
    verify_supports_resolution_capped(n, field, DEFAULT_MAX_N)
}

/// As [`verify_supports_resolution`] with a caller-chosen cap on `n`.
///
/// Every nonempty proper restriction is also checked against
/// [`cone_witness`]: an apex must exist exactly when the restriction has a
/// vertex, it must lie in every facet, and the homology verdict must then be
/// acyclic.
pub fn verify_supports_resolution_capped(n: usize, field: FieldKind, max_n: usize) -> Result<ResolutionReport> {
    check_polygon(n)?;
    if n > max_n {
        return Err(Error::SizeOutOfRange { n, min: 4, max: max_n });
    }
    let complex = build(n)?;
    let full = MonomialLabel::full(n).mask();
    let mut failures: Vec<Failure> = (0..=full)
        .into_par_iter()
        .map(|mask| check_sigma(&complex, MonomialLabel::from_mask(mask), field))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    failures.sort_by_key(|f| f.sigma);
    let witnesses: Vec<Witness> = minimality_witnesses(&complex)
        .into_iter()
        .map(|(lo, hi)| Witness {
            lower: complex.face(lo).to_string(),
            upper: complex.face(hi).to_string(),
            label: complex.face(lo).label,
        })
        .collect();
    Ok(ResolutionReport {
        n,
        field,
        checked: full as usize + 1,
        failures,
        minimal: witnesses.is_empty(),
        witnesses,
    })
}

fn check_sigma(complex: &LabeledComplex, sigma: MonomialLabel, field: FieldKind) -> Result<Option<Failure>> {
    let n = complex.n();
    let sub = restrict(complex, sigma)?;
    let verdict = acyclicity(&sub, field)?;
    if !verdict.is_admissible() {
        return Ok(Some(Failure {
            sigma,
            kind: FailureKind::NotAcyclic,
        }));
    }
    if sigma.degree() == 0 || sigma == MonomialLabel::full(n) {
        return Ok(None);
    }
    let apex = cone_witness(n, sigma)?;
    let agrees = match apex {
        None => verdict == Acyclicity::Empty,
        Some(d) => {
            verdict == Acyclicity::Acyclic
                && sub
                    .simplicial_facets()
                    .into_iter()
                    .all(|f| sub.face(f).dissection().is_some_and(|x| x.contains(d)))
        }
    };
    Ok((!agrees).then_some(Failure {
        sigma,
        kind: FailureKind::ConeMismatch { apex, verdict },
    }))
}

/// Apex of the cone `(A_n)_{<=sigma}` for a proper subset `sigma`, or
/// `None` when the restriction has no vertices.
///
/// The polygon is first rotated so that `sigma` contains 1 and omits `n`:
/// the smallest `s` in `sigma` whose cyclic predecessor is not in `sigma` is
/// sent to 1. With `j` the largest element above 2 of the rotated set, the
/// apex is `(1, j)` rotated back. No diagonal inside the rotated `sigma`
/// reaches past `j`, so none crosses `(1, j)`.
pub fn cone_witness(n: usize, sigma: MonomialLabel) -> Result<Option<Diagonal>> {
    check_polygon(n)?;
    let full = MonomialLabel::full(n);
    if !sigma.divides(&full) {
        return Err(Error::LabelOutOfRange(sigma.mask()));
    }
    if sigma == full {
        return Err(Error::NotProperSubset(sigma.mask()));
    }
    let n32 = n as u32;
    let pred = |v: u32| if v == 1 { n32 } else { v - 1 };
    let Some(s) = sigma.vertices().into_iter().find(|&v| !sigma.contains(pred(v))) else {
        return Ok(None);
    };
    let to_rotated = |v: u32| (v + n32 - s) % n32 + 1;
    let from_rotated = |v: u32| (v + s - 2) % n32 + 1;
    let Some(j) = sigma.vertices().into_iter().map(to_rotated).filter(|&v| v > 2).max() else {
        return Ok(None);
    };
    Diagonal::new(n, from_rotated(1), from_rotated(j)).map(Some)
}

/// Cover pairs `(F, G)` of the Hasse diagram with equal labels. Empty iff
/// the supported resolution is minimal.
pub fn minimality_witnesses(complex: &LabeledComplex) -> Vec<(usize, usize)> {
    complex
        .covers()
        .iter()
        .copied()
        .filter(|&(lo, hi)| complex.face(lo).label == complex.face(hi).label)
        .collect()
}
