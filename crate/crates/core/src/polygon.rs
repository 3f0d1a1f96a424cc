//! Diagonals and dissections of the labeled n-gon.
//!
//! Vertices are labeled `1..=n` in cyclic order. A diagonal is a chord
//! joining two non-adjacent vertices; a dissection is a set of pairwise
//! non-crossing diagonals. Dissections of size `d` are the `(d-1)`-faces
//! of the simplicial associahedron.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest polygon supported. Vertex sets are stored as `u32` bitmasks.
pub const MAX_N: usize = 32;

pub(crate) fn check_polygon(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::PolygonTooSmall(n));
    }
    if n > MAX_N {
        return Err(Error::PolygonTooLarge(n));
    }
    Ok(())
}

pub(crate) fn check_diagonal_count(n: usize, d: usize) -> Result<()> {
    check_polygon(n)?;
    if d > n - 3 {
        return Err(Error::DiagonalCountOutOfRange { n, d });
    }
    Ok(())
}

/// A chord `(a, b)` of the n-gon with `a < b`, `b - a >= 2` and
/// `(a, b) != (1, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[u32; 2]", try_from = "[u32; 2]")]
pub struct Diagonal {
    a: u32,
    b: u32,
}

impl Diagonal {
    /// Builds the diagonal joining `x` and `y` in an `n`-gon. Endpoint order
    /// does not matter.
    pub fn new(n: usize, x: u32, y: u32) -> Result<Self> {
        check_polygon(n)?;
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        let n32 = n as u32;
        if a < 1 || b > n32 || b - a < 2 || (a == 1 && b == n32) {
            return Err(Error::NotADiagonal { n, a: x, b: y });
        }
        Ok(Self { a, b })
    }

    /// Caller guarantees the diagonal invariants.
    pub(crate) const fn new_unchecked(a: u32, b: u32) -> Self {
        Self { a, b }
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// Endpoints as a vertex bitmask (bit `v - 1` for vertex `v`).
    pub fn mask(&self) -> u32 {
        (1 << (self.a - 1)) | (1 << (self.b - 1))
    }

    pub fn touches(&self, v: u32) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b < 10 {
            write!(f, "{}{}", self.a, self.b)
        } else {
            write!(f, "({},{})", self.a, self.b)
        }
    }
}

impl From<Diagonal> for [u32; 2] {
    fn from(d: Diagonal) -> Self {
        [d.a, d.b]
    }
}

impl TryFrom<[u32; 2]> for Diagonal {
    type Error = Error;

    // Deserialization cannot know n; only the n-independent invariants are
    // checked here. `Dissection::new` rechecks against its own n.
    fn try_from([x, y]: [u32; 2]) -> Result<Self> {
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        if a < 1 || b - a < 2 || b as usize > MAX_N {
            return Err(Error::NotADiagonal { n: 0, a: x, b: y });
        }
        Ok(Self { a, b })
    }
}

/// Whether two diagonals meet in the interior of the polygon.
///
/// Diagonals sharing an endpoint never cross. Otherwise they cross iff
/// their endpoints interleave; with vertices labeled in cyclic order this is
/// the linear test `a < c < b < d` up to swapping the two chords.
pub fn crosses(d1: Diagonal, d2: Diagonal) -> bool {
    let inside = |v: u32| d1.a < v && v < d1.b;
    if d1.touches(d2.a) || d1.touches(d2.b) {
        return false;
    }
    inside(d2.a) != inside(d2.b)
}

/// All `C(n,2) - n` diagonals of the n-gon in lexicographic order.
pub fn all_diagonals(n: usize) -> Result<Vec<Diagonal>> {
    check_polygon(n)?;
    let n = n as u32;
    let mut out = Vec::with_capacity((n * (n - 3) / 2) as usize);
    for a in 1..=n {
        for b in a + 2..=n {
            if a == 1 && b == n {
                continue;
            }
            out.push(Diagonal::new_unchecked(a, b));
        }
    }
    Ok(out)
}

/// How the endpoint count `s` of a dissection with `d >= 1` diagonals
/// compares to `d + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SupportClass {
    Proper,
    Superproper,
    Subproper,
}

/// A set of pairwise non-crossing diagonals of the n-gon, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Dissection {
    n: usize,
    diagonals: Vec<Diagonal>,
}

impl Dissection {
    /// Validates and canonicalizes a set of diagonals.
    pub fn new(n: usize, diagonals: impl IntoIterator<Item = Diagonal>) -> Result<Self> {
        check_polygon(n)?;
        let mut diagonals: Vec<Diagonal> = diagonals.into_iter().collect();
        for d in &diagonals {
            // revalidate against this n
            Diagonal::new(n, d.a, d.b)?;
        }
        diagonals.sort_unstable();
        for w in diagonals.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateDiagonal(w[0]));
            }
        }
        for (i, &x) in diagonals.iter().enumerate() {
            for &y in &diagonals[i + 1..] {
                if crosses(x, y) {
                    return Err(Error::Crossing(x, y));
                }
            }
        }
        Ok(Self { n, diagonals })
    }

    /// Parses pairs such as `[(1,3), (4,6)]`.
    pub fn from_pairs(n: usize, pairs: &[(u32, u32)]) -> Result<Self> {
        let ds = pairs
            .iter()
            .map(|&(a, b)| Diagonal::new(n, a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, ds)
    }

    /// Caller guarantees the diagonals are sorted, distinct and non-crossing.
    pub(crate) fn from_sorted_unchecked(n: usize, diagonals: Vec<Diagonal>) -> Self {
        debug_assert!(diagonals.windows(2).all(|w| w[0] < w[1]));
        Self { n, diagonals }
    }

    pub fn empty(n: usize) -> Result<Self> {
        check_polygon(n)?;
        Ok(Self {
            n,
            diagonals: Vec::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.diagonals.binary_search(&d).is_ok()
    }

    /// Endpoint set as a bitmask.
    pub fn support_mask(&self) -> u32 {
        self.diagonals.iter().fold(0, |m, d| m | d.mask())
    }

    pub fn support(&self) -> Vec<u32> {
        support(self)
    }

    pub fn pairs(&self) -> Vec<[u32; 2]> {
        self.diagonals.iter().map(|&d| d.into()).collect()
    }
}

impl fmt::Display for Dissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.diagonals.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn mask_to_vertices(mask: u32) -> Vec<u32> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Sorted endpoint set of a dissection.
pub fn support(dissection: &Dissection) -> Vec<u32> {
    mask_to_vertices(dissection.support_mask())
}

/// Proper / superproper / subproper classification. The empty dissection
/// has no class.
pub fn classify(dissection: &Dissection) -> Result<SupportClass> {
    let d = dissection.len();
    if d == 0 {
        return Err(Error::EmptyDissection);
    }
    let s = dissection.support_mask().count_ones() as usize;
    Ok(match s.cmp(&(d + 1)) {
        std::cmp::Ordering::Equal => SupportClass::Proper,
        std::cmp::Ordering::Greater => SupportClass::Superproper,
        std::cmp::Ordering::Less => SupportClass::Subproper,
    })
}

/// Whether the graph on the support with the diagonals as edges is a tree.
pub fn is_tree(dissection: &Dissection) -> bool {
    let d = dissection.len();
    if d == 0 {
        return false;
    }
    let mask = dissection.support_mask();
    if mask.count_ones() as usize != d + 1 {
        return false;
    }
    // d edges on d+1 vertices: a tree iff there is no cycle
    let mut parent: Vec<u32> = (0..=dissection.n as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    for diag in &dissection.diagonals {
        let (ra, rb) = (find(&mut parent, diag.a), find(&mut parent, diag.b));
        if ra == rb {
            return false;
        }
        parent[ra as usize] = rb;
    }
    true
}

/// Visits every non-crossing subset of diagonals with at most `max_d`
/// elements, in lexicographic order of the sorted diagonal lists (the empty
/// set first). The slice passed to `visit` is sorted.
pub fn for_each_dissection<F>(n: usize, max_d: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&[Diagonal]),
{
    let diagonals = all_diagonals(n)?;
    let mut stack = Vec::with_capacity(n);
    fn rec<F: FnMut(&[Diagonal])>(
        all: &[Diagonal],
        start: usize,
        max_d: usize,
        stack: &mut Vec<Diagonal>,
        visit: &mut F,
    ) {
        visit(stack);
        if stack.len() == max_d {
            return;
        }
        for i in start..all.len() {
            let cand = all[i];
            if stack.iter().all(|&d| !crosses(d, cand)) {
                stack.push(cand);
                rec(all, i + 1, max_d, stack, visit);
                stack.pop();
            }
        }
    }
    rec(&diagonals, 0, max_d, &mut stack, &mut visit);
    Ok(())
}

/// All dissections with exactly `d` diagonals, lexicographically ordered.
pub fn dissections(n: usize, d: usize) -> Result<Vec<Dissection>> {
    check_diagonal_count(n, d)?;
    let mut out = Vec::new();
    for_each_dissection(n, d, |ds| {
        if ds.len() == d {
            out.push(Dissection::from_sorted_unchecked(n, ds.to_vec()));
        }
    })?;
    Ok(out)
}

/// `f(n, d, j)`: the number of `d`-diagonal dissections with exactly `j`
/// endpoints, keyed by `j`. Zero buckets are omitted.
pub fn count_by_support(n: usize, d: usize) -> Result<BTreeMap<usize, u64>> {
    check_diagonal_count(n, d)?;
    let mut counts = BTreeMap::new();
    for_each_dissection(n, d, |ds| {
        if ds.len() == d {
            let s = ds.iter().fold(0u32, |m, x| m | x.mask()).count_ones() as usize;
            *counts.entry(s).or_insert(0) += 1;
        }
    })?;
    Ok(counts)
}

/// Number of `d`-diagonal dissections whose diagonals form a tree.
pub fn count_trees(n: usize, d: usize) -> Result<u64> {
    check_diagonal_count(n, d)?;
    let mut count = 0;
    for_each_dissection(n, d, |ds| {
        if ds.len() == d && d > 0 {
            let diss = Dissection::from_sorted_unchecked(n, ds.to_vec());
            if is_tree(&diss) {
                count += 1;
            }
        }
    })?;
    Ok(count)
}
