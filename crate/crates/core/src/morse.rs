//! Algebraic discrete Morse matchings on the labeled face poset of `A_n`.
//!
//! A matching pairs Hasse cover relations with equal monomial labels.
//! Orienting matched covers upward and all others downward must leave the
//! Hasse diagram acyclic; the unmatched faces are the critical cells.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{build, LabeledComplex};
use crate::error::{Error, Result};
use crate::polygon::{classify, Diagonal, SupportClass};

/// A set of matched cover pairs `(lower id, upper id)`, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MorseMatching {
    pairs: Vec<(usize, usize)>,
}

impl MorseMatching {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        Self { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, pair: (usize, usize)) -> bool {
        self.pairs.binary_search(&pair).is_ok()
    }
}

/// Why a matching fails to be an acyclic algebraic matching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    FaceOutOfRange {
        face: usize,
    },
    MatchedTwice {
        face: usize,
    },
    NotACover {
        lower: usize,
        upper: usize,
    },
    LabelMismatch {
        lower: usize,
        upper: usize,
    },
    /// Faces along a directed cycle of the oriented Hasse diagram.
    Cycle {
        faces: Vec<usize>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FaceOutOfRange { face } => write!(f, "face {face} does not exist"),
            Violation::MatchedTwice { face } => write!(f, "face {face} is matched twice"),
            Violation::NotACover { lower, upper } => write!(f, "({lower}, {upper}) is not a cover relation"),
            Violation::LabelMismatch { lower, upper } => {
                write!(f, "faces {lower} and {upper} carry different labels")
            }
            Violation::Cycle { faces } => write!(f, "directed cycle through faces {faces:?}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// Matched partners and cover adjacency, shared by the checks below.
struct Oriented<'a> {
    complex: &'a LabeledComplex,
    below: Vec<Vec<usize>>,
    up: Vec<Option<usize>>,
    down: Vec<Option<usize>>,
}

impl<'a> Oriented<'a> {
    fn new(complex: &'a LabeledComplex) -> Self {
        let len = complex.len();
        let mut below = vec![Vec::new(); len];
        for &(lo, hi) in complex.covers() {
            below[hi].push(lo);
        }
        Self {
            complex,
            below,
            up: vec![None; len],
            down: vec![None; len],
        }
    }

    fn is_cover(&self, lo: usize, hi: usize) -> bool {
        self.complex.covers().binary_search(&(lo, hi)).is_ok()
    }

    fn insert(&mut self, lo: usize, hi: usize) {
        self.up[lo] = Some(hi);
        self.down[hi] = Some(lo);
    }

    fn remove(&mut self, lo: usize, hi: usize) {
        self.up[lo] = None;
        self.down[hi] = None;
    }

    /// Upper faces reachable from `start` by alternately stepping down an
    /// unmatched cover and up a matched one. Returns a path ending in an
    /// upper face that covers `target` through an unmatched cover.
    fn alternating_path(&self, start: usize, target: usize) -> Option<Vec<usize>> {
        let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
        let mut stack = vec![start];
        parent.insert(start, start);
        while let Some(u) = stack.pop() {
            for &c in &self.below[u] {
                if self.down[u] == Some(c) {
                    continue;
                }
                if c == target {
                    let mut path = vec![c, u];
                    let mut x = u;
                    while parent[&x] != x {
                        x = parent[&x];
                        path.push(x);
                    }
                    path.reverse();
                    return Some(path);
                }
                if let Some(next) = self.up[c] {
                    if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(next) {
                        e.insert(u);
                        stack.push(next);
                    }
                }
            }
        }
        None
    }

    /// A cycle through some matched pair, found by alternating search.
    fn find_cycle(&self) -> Option<Vec<usize>> {
        for lo in 0..self.up.len() {
            if let Some(hi) = self.up[lo] {
                if let Some(path) = self.alternating_path(hi, lo) {
                    let mut cycle = vec![lo];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
        None
    }

    /// Kahn's algorithm on the whole oriented Hasse diagram.
    fn acyclic_full(&self) -> bool {
        let len = self.up.len();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); len];
        let mut indeg = vec![0usize; len];
        for &(lo, hi) in self.complex.covers() {
            let (from, to) = if self.up[lo] == Some(hi) { (lo, hi) } else { (hi, lo) };
            out[from].push(to);
            indeg[to] += 1;
        }
        let mut ready: Vec<usize> = (0..len).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        seen == len
    }
}

/// Checks that `m` is a matching of cover pairs with equal labels whose
/// induced orientation is acyclic.
pub fn validate(m: &MorseMatching, complex: &LabeledComplex) -> ValidationReport {
    let mut violations = Vec::new();
    let mut o = Oriented::new(complex);
    let mut used = vec![false; complex.len()];
    for &(lo, hi) in m.pairs() {
        if lo >= complex.len() || hi >= complex.len() {
            violations.push(Violation::FaceOutOfRange { face: lo.max(hi) });
            continue;
        }
        for face in [lo, hi] {
            if used[face] {
                violations.push(Violation::MatchedTwice { face });
            }
            used[face] = true;
        }
        if !o.is_cover(lo, hi) {
            violations.push(Violation::NotACover { lower: lo, upper: hi });
            continue;
        }
        if complex.face(lo).label != complex.face(hi).label {
            violations.push(Violation::LabelMismatch { lower: lo, upper: hi });
        }
        o.insert(lo, hi);
    }
    if violations.is_empty() {
        if let Some(faces) = o.find_cycle() {
            violations.push(Violation::Cycle { faces });
        }
    }
    ValidationReport {
        valid: violations.is_empty(),
        violations,
    }
}

/// Acyclicity of the oriented Hasse diagram by a topological sort of every
/// face. Slower than the alternating-path search in [`validate`]; kept as
/// an independent check.
pub fn is_acyclic_full(m: &MorseMatching, complex: &LabeledComplex) -> bool {
    let mut o = Oriented::new(complex);
    for &(lo, hi) in m.pairs() {
        o.insert(lo, hi);
    }
    o.acyclic_full()
}

/// The rank-two matching on `A_n`, `n >= 6`; empty for smaller `n`.
///
/// Two disjoint diagonals `{ij, kl}` (`i<j`, `k<l`, `i<k`) are matched up
/// with `{ij, kl, jl}` when `j < k` and with `{ij, kl, il}` otherwise. An
/// inscribed triangle `{ij, ik, jk}` is matched down with `{ij, jk}`.
pub fn d2_matching(complex: &LabeledComplex) -> Result<MorseMatching> {
    let n = complex.n();
    let mut pairs = Vec::new();
    if n < 6 {
        return Ok(MorseMatching::default());
    }
    let lookup = |ds: &[Diagonal]| {
        complex
            .id_of_diagonals(ds)
            .ok_or_else(|| Error::Orientation(format!("partner face {ds:?} missing from the complex")))
    };
    for face in complex.faces() {
        let Some(diss) = face.dissection() else { continue };
        let ds = diss.diagonals();
        match (ds.len(), classify(diss).ok()) {
            (2, Some(SupportClass::Superproper)) => {
                let (first, second) = (ds[0], ds[1]);
                let (i, j, k, l) = (first.a(), first.b(), second.a(), second.b());
                debug_assert!(i < k);
                let extra = if j < k {
                    Diagonal::new(n, j, l)?
                } else {
                    Diagonal::new(n, i, l)?
                };
                pairs.push((face.id, lookup(&[first, second, extra])?));
            }
            (3, Some(SupportClass::Subproper)) => {
                // sorted: ij, ik, jk
                let lower = lookup(&[ds[0], ds[2]])?;
                pairs.push((lower, face.id));
            }
            _ => {}
        }
    }
    Ok(MorseMatching::new(pairs))
}

/// Unmatched faces per dimension `0..=max_dim`. The empty face is left
/// out; it is never matched.
pub fn critical_cells(m: &MorseMatching, complex: &LabeledComplex) -> Vec<usize> {
    let mut matched = vec![false; complex.len()];
    for &(lo, hi) in m.pairs() {
        matched[lo] = true;
        matched[hi] = true;
    }
    let top = complex.max_dim().max(0) as usize;
    let mut counts = vec![0; top + 1];
    for f in complex.faces() {
        if f.dim >= 0 && !matched[f.id] {
            counts[f.dim as usize] += 1;
        }
    }
    counts
}

/// Closed-form counts behind the rank-two matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct D2Counts {
    /// Proper two-diagonal dissections: `n(n-3)(n-4)/2`.
    pub proper_d2: u64,
    /// Inscribed triangles: `n(n-4)(n-5)/6`.
    pub inscribed_triangles: u64,
    /// Their difference, the critical edges left by the matching.
    pub critical_edges: u64,
}

pub fn count_formulas(n: usize) -> Result<D2Counts> {
    if n < 6 {
        return Err(Error::SizeOutOfRange {
            n,
            min: 6,
            max: usize::MAX,
        });
    }
    let n = n as u64;
    let proper_d2 = n * (n - 3) * (n - 4) / 2;
    let inscribed_triangles = n * (n - 4) * (n - 5) / 6;
    Ok(D2Counts {
        proper_d2,
        inscribed_triangles,
        critical_edges: proper_d2 - inscribed_triangles,
    })
}

/// Faces of `A_n` bucketed by `(number of diagonals, support class)`.
pub fn classification_counts(complex: &LabeledComplex) -> BTreeMap<(usize, SupportClass), u64> {
    let mut out = BTreeMap::new();
    for f in complex.faces() {
        if let Some(d) = f.dissection() {
            if let Ok(class) = classify(d) {
                *out.entry((d.len(), class)).or_insert(0) += 1;
            }
        }
    }
    out
}

/// [`count_formulas`] recomputed by classifying every face.
pub fn count_by_enumeration(complex: &LabeledComplex) -> D2Counts {
    let c = classification_counts(complex);
    let get = |k| c.get(&k).copied().unwrap_or(0);
    let proper_d2 = get((2, SupportClass::Proper));
    let inscribed_triangles = get((3, SupportClass::Subproper));
    D2Counts {
        proper_d2,
        inscribed_triangles,
        critical_edges: proper_d2 - inscribed_triangles,
    }
}

/// The hand-extended matching at `n = 7`, in numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct N7Extension {
    pub superproper_d2: u64,
    pub subproper_d3: u64,
    pub superproper_d3: u64,
    pub subproper_d4: u64,
    /// Critical 1-, 2- and 3-faces after matching all four families.
    pub edges: u64,
    pub two_faces: u64,
    pub three_faces: u64,
}

pub fn n7_extension_counts() -> Result<N7Extension> {
    let a7 = build(7)?;
    let c = classification_counts(&a7);
    let get = |d, class| c.get(&(d, class)).copied().unwrap_or(0);
    let faces = a7.face_counts();
    // face_counts is indexed by number of diagonals
    let (f2, f3, f4) = (faces[2] as u64, faces[3] as u64, faces[4] as u64);
    let superproper_d2 = get(2, SupportClass::Superproper);
    let subproper_d3 = get(3, SupportClass::Subproper);
    let superproper_d3 = get(3, SupportClass::Superproper);
    let subproper_d4 = get(4, SupportClass::Subproper);
    Ok(N7Extension {
        superproper_d2,
        subproper_d3,
        superproper_d3,
        subproper_d4,
        edges: f2 - superproper_d2 - subproper_d3,
        two_faces: f3 - superproper_d2 - subproper_d3 - superproper_d3 - subproper_d4,
        three_faces: f4 - superproper_d3 - subproper_d4,
    })
}

/// Greedily adds equal-label cover pairs, in cover order, whenever the
/// result stays an acyclic matching. `m` must already be valid.
pub fn greedy_extend(m: &MorseMatching, complex: &LabeledComplex) -> MorseMatching {
    let mut o = Oriented::new(complex);
    let mut pairs = m.pairs().to_vec();
    for &(lo, hi) in m.pairs() {
        o.insert(lo, hi);
    }
    for &(lo, hi) in complex.covers() {
        if o.up[lo].is_some() || o.down[lo].is_some() || o.up[hi].is_some() || o.down[hi].is_some() {
            continue;
        }
        if complex.face(lo).label != complex.face(hi).label {
            continue;
        }
        o.insert(lo, hi);
        // a new cycle would have to run through lo -> hi
        if o.alternating_path(hi, lo).is_some() {
            o.remove(lo, hi);
        } else {
            pairs.push((lo, hi));
        }
    }
    MorseMatching::new(pairs)
}
