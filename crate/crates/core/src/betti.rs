//! Graded Betti numbers of `R/J_n`, the face ring of the n-cycle.
//!
//! Three routes: Hochster's formula summed over all vertex subsets of the
//! cycle, the hook-length closed form, and the Pascal-like recursion. The
//! recursion's correction term is `C(n-2, d)`; with `C(n-2, d+1)` it already
//! fails at `n = 8`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binomial::{binomial, exact_div};
use crate::complex::f_formula;
use crate::error::{Error, Result};
use crate::field::FieldKind;
use crate::homology::{reduced_homology, CellComplex, SimplicialComplex};

/// Default upper limit for the Hochster subset sweep.
pub const HOCHSTER_MAX_N: usize = 16;

/// Largest `n` for which [`hochster_betti`] also runs the generic homology
/// engine as a cross-check.
pub const HOCHSTER_CROSS_CHECK_MAX_N: usize = 8;

/// `β_{d,j}` of `R/J_n`. Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, usize), u128>,
}

impl BettiTable {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, d: usize, j: usize) -> u128 {
        self.entries.get(&(d, j)).copied().unwrap_or(0)
    }

    fn add(&mut self, d: usize, j: usize, v: u128) {
        if v != 0 {
            *self.entries.entry((d, j)).or_insert(0) += v;
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u128)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Total Betti number `β_d = Σ_j β_{d,j}`.
    pub fn total(&self, d: usize) -> u128 {
        self.entries.range((d, 0)..(d + 1, 0)).map(|(_, v)| v).sum()
    }

    /// `β_0, ..., β_{n-2}`.
    pub fn totals(&self) -> Vec<u128> {
        (0..=self.n.saturating_sub(2)).map(|d| self.total(d)).collect()
    }

    /// Nonzero only at `(0,0)`, `(d, d+1)` for `1 <= d < n-2`, and
    /// `(n-2, n)`.
    pub fn is_almost_linear(&self) -> bool {
        let n = self.n;
        self.entries
            .keys()
            .all(|&(d, j)| (d == 0 && j == 0) || (d >= 1 && d < n - 2 && j == d + 1) || (d == n - 2 && j == n))
    }

    /// `β_d = β_{n-d-2}` for `1 <= d <= n-3`.
    pub fn is_palindromic(&self) -> bool {
        (1..=self.n - 3).all(|d| self.total(d) == self.total(self.n - d - 2))
    }

    /// Cells where two tables differ.
    pub fn diff(&self, other: &Self) -> Vec<(usize, usize)> {
        let mut keys: Vec<_> = self.entries.keys().chain(other.entries.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter(|&(d, j)| self.get(d, j) != other.get(d, j))
            .collect()
    }
}

#[derive(Serialize)]
struct BettiEntry {
    d: usize,
    j: usize,
    value: u128,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let entries: Vec<BettiEntry> = self
            .entries()
            .map(|((d, j), value)| BettiEntry { d, j, value })
            .collect();
        let mut st = s.serialize_struct("BettiTable", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("entries", &entries)?;
        st.serialize_field("totals", &self.totals())?;
        st.end()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row: Vec<String> = self.totals().iter().map(u128::to_string).collect();
        write!(f, "β^{}_d: {}", self.n, row.join(" "))
    }
}

fn check_n(n: usize, min: usize, max: usize) -> Result<()> {
    if n < min || n > max {
        return Err(Error::SizeOutOfRange { n, min, max });
    }
    Ok(())
}

fn check_d(n: usize, d: usize) -> Result<()> {
    if n < 4 || d < 1 || d > n - 3 {
        return Err(Error::BettiIndexOutOfRange { n, d });
    }
    Ok(())
}

/// Connected components of the induced subgraph of the n-cycle on `w`
/// (a proper nonempty subset): maximal cyclic runs.
fn cycle_components(n: usize, w: u32) -> u32 {
    let rotated = (w << 1 | w >> (n - 1)) & ((1u32 << n) - 1);
    // a run starts at i when i is in w but its predecessor is not
    (w & !rotated).count_ones()
}

/// Hochster's formula with reduced homology of induced subgraphs of `C_n`
/// computed by counting components, for `4 <= n <= HOCHSTER_MAX_N`. For
/// `n <= 8` the result is cross-checked against the generic homology
/// engine.
pub fn hochster_betti(n: usize) -> Result<BettiTable> {
    hochster_betti_capped(n, HOCHSTER_MAX_N)
}

pub fn hochster_betti_capped(n: usize, max_n: usize) -> Result<BettiTable> {
    check_n(n, 4, max_n.min(31))?;
    let full = (1u32 << n) - 1;
    let counts = Mutex::new(vec![vec![0u128; n + 1]; n + 1]);
    (0..=full)
        .into_par_iter()
        .fold(
            || vec![vec![0u128; n + 1]; n + 1],
            |mut acc, w| {
                let j = w.count_ones() as usize;
                if w == 0 {
                    acc[0][0] += 1; // H̃_{-1} of the empty complex
                } else if w == full {
                    acc[n - 2][n] += 1; // H̃_1 of the cycle itself
                } else {
                    let c = cycle_components(n, w) as u128;
                    if c > 1 {
                        acc[j - 1][j] += c - 1;
                    }
                }
                acc
            },
        )
        .for_each(|part| {
            let mut total = counts.lock().unwrap();
            for (row, prow) in total.iter_mut().zip(part) {
                for (x, y) in row.iter_mut().zip(prow) {
                    *x += y;
                }
            }
        });
    let mut table = BettiTable::new(n);
    for (d, row) in counts.into_inner().unwrap().into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            table.add(d, j, v);
        }
    }
    if n <= HOCHSTER_CROSS_CHECK_MAX_N {
        let generic = hochster_betti_via_homology(n, FieldKind::Gf2)?;
        let cells = table.diff(&generic);
        if !cells.is_empty() {
            return Err(Error::MethodMismatch { cells });
        }
    }
    Ok(table)
}

/// Hochster's formula evaluated with the general simplicial homology
/// engine on every induced subcomplex of the cycle.
pub fn hochster_betti_via_homology(n: usize, field: FieldKind) -> Result<BettiTable> {
    check_n(n, 4, 16)?;
    let cycle = SimplicialComplex::cycle(n as u32);
    let mut table = BettiTable::new(n);
    for w in 0u32..(1 << n) {
        let j = w.count_ones() as usize;
        let induced = cycle.induced(|v| w >> (v - 1) & 1 == 1);
        let h = reduced_homology(&CellComplex::from_simplicial(&induced), field)?;
        // H̃_i contributes to β_{d,j} with i = j - d - 1
        if h.empty_class > 0 {
            table.add(j, j, h.empty_class as u128);
        }
        for (i, &b) in h.betti.iter().enumerate() {
            if b > 0 && j > i {
                table.add(j - i - 1, j, b as u128);
            }
        }
    }
    Ok(table)
}

/// `β^n_{d,d+1} = C(n, d+1) d (n-d-2) / (n-1)` for `1 <= d <= n-3`.
pub fn betti_closed_form(n: usize, d: usize) -> Result<u128> {
    check_d(n, d)?;
    let (n64, d64) = (n as u64, d as u64);
    let num = binomial(n64, d64 + 1)?
        .checked_mul(d as u128 * (n - d - 2) as u128)
        .ok_or(Error::Overflow("closed-form Betti number"))?;
    exact_div(num, (n - 1) as u128, "closed-form Betti number")
}

/// `F(n,d) = F(n-1,d-1) + F(n-1,d) + C(n-2,d)`, seeded by
/// `F(n,1) = F(n,n-3) = C(n,2) - n`.
pub fn betti_recursion(n: usize, d: usize) -> Result<u128> {
    check_d(n, d)?;
    let mut memo = HashMap::new();
    recurse(n, d, &mut memo)
}

fn recurse(n: usize, d: usize, memo: &mut HashMap<(usize, usize), u128>) -> Result<u128> {
    if d == 1 || d == n - 3 {
        return Ok(binomial(n as u64, 2)? - n as u128);
    }
    if let Some(&v) = memo.get(&(n, d)) {
        return Ok(v);
    }
    let v = recurse(n - 1, d - 1, memo)? + recurse(n - 1, d, memo)? + binomial(n as u64 - 2, d as u64)?;
    memo.insert((n, d), v);
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Hochster,
    Closed,
    Recursion,
    /// All three, which must agree.
    All,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "hochster" => Ok(Method::Hochster),
            "closed" => Ok(Method::Closed),
            "recursion" => Ok(Method::Recursion),
            "all" => Ok(Method::All),
            other => Err(format!("unknown method '{other}'")),
        }
    }
}

fn table_from(n: usize, middle: impl Fn(usize, usize) -> Result<u128>) -> Result<BettiTable> {
    let mut t = BettiTable::new(n);
    t.add(0, 0, 1);
    for d in 1..=n - 3 {
        t.add(d, d + 1, middle(n, d)?);
    }
    t.add(n - 2, n, 1);
    Ok(t)
}

/// Full table by one method. `Method::All` computes all three and fails
/// with the differing cells if they disagree.
pub fn betti_table(n: usize, method: Method) -> Result<BettiTable> {
    check_n(n, 4, HOCHSTER_MAX_N.max(30))?;
    match method {
        Method::Hochster => hochster_betti(n),
        Method::Closed => table_from(n, betti_closed_form),
        Method::Recursion => table_from(n, betti_recursion),
        Method::All => {
            let h = hochster_betti(n)?;
            let c = table_from(n, betti_closed_form)?;
            let r = table_from(n, betti_recursion)?;
            let mut cells = h.diff(&c);
            cells.extend(h.diff(&r));
            cells.sort_unstable();
            cells.dedup();
            if !cells.is_empty() {
                return Err(Error::MethodMismatch { cells });
            }
            Ok(h)
        }
    }
}

/// Indices `1 <= d <= n-3` where `β_d > f(n, d)`, plus whether equality
/// holds at `d = 1`. A resolution supported on `A_n` forces the bound.
pub fn face_bound(table: &BettiTable) -> Result<(Vec<usize>, bool)> {
    let n = table.n();
    let mut violations = Vec::new();
    for d in 1..=n - 3 {
        if table.total(d) > f_formula(n, d)? {
            violations.push(d);
        }
    }
    Ok((violations, table.total(1) == f_formula(n, 1)?))
}
