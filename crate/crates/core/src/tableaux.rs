//! Partitions, standard Young tableaux, and the matching on associahedron
//! tableaux.
//!
//! Associahedron tableaux of type `(n, d)` have shape
//! `(d+1, d+1, 1^{n-d-3})` and count the `d`-diagonal dissections of the
//! n-gon; syzygy tableaux have shape `(d+1, 2, 1^{n-d-3})` and count the
//! Betti number `β_d` of the cycle's face ring.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of cells for explicit enumeration.
pub const ENUMERATION_CAP: usize = 14;

/// An integer partition with positive, weakly decreasing parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(parts));
        }
        Ok(Self(parts))
    }

    /// `(d+1, d+1, 1^{n-d-3})`.
    pub fn associahedron(n: usize, d: usize) -> Result<Self> {
        check_family(n, d)?;
        let mut parts = vec![d + 1, d + 1];
        parts.extend(std::iter::repeat_n(1, n - d - 3));
        Self::new(parts)
    }

    /// `(d+1, 2, 1^{n-d-3})`.
    pub fn syzygy(n: usize, d: usize) -> Result<Self> {
        check_family(n, d)?;
        let mut parts = vec![d + 1, 2];
        parts.extend(std::iter::repeat_n(1, n - d - 3));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn cells(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of column `c` (0-based).
    pub fn column_len(&self, c: usize) -> usize {
        self.0.iter().take_while(|&&p| p > c).count()
    }

    pub fn hooks(&self) -> Vec<Vec<usize>> {
        let conj = conjugate(self);
        self.0
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|c| (len - c - 1) + (conj.0[c] - r - 1) + 1).collect())
            .collect()
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Self {
        s.0
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Transpose of the Young diagram.
pub fn conjugate(shape: &Shape) -> Shape {
    let width = shape.0.first().copied().unwrap_or(0);
    Shape((0..width).map(|c| shape.column_len(c)).collect())
}

/// Number of SYT of a shape, `N! / Π hooks`.
///
/// # Panics
/// If the count does not fit in a `u128` (shapes far beyond 30 cells).
pub fn hook_count(shape: &Shape) -> u128 {
    let mut num = BigUint::one();
    for k in 2..=shape.cells() {
        num *= k;
    }
    let mut den = BigUint::one();
    for h in shape.hooks().into_iter().flatten() {
        den *= h;
    }
    (num / den).to_u128().expect("tableau count exceeds u128")
}

/// A filling stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Validates a standard filling: entries are `1..=N`, rows and columns
    /// strictly increase.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Self { rows };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<()> {
        let shape: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        Shape::new(shape.clone())?;
        let total: usize = shape.iter().sum();
        let mut seen = vec![false; total + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                let xi = x as usize;
                if xi == 0 || xi > total || seen[xi] {
                    return Err(Error::InvalidTableau(format!(
                        "entry {x} repeated or out of 1..={total}"
                    )));
                }
                seen[xi] = true;
                if c > 0 && row[c - 1] >= x {
                    return Err(Error::InvalidTableau(format!("row {} not increasing", r + 1)));
                }
                if r > 0 && self.rows[r - 1][c] >= x {
                    return Err(Error::InvalidTableau(format!("column {} not increasing", c + 1)));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row-reading word: the rows concatenated top to bottom.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.concat()
    }

    /// `(row, column)` of an entry, 0-based.
    pub fn position(&self, x: u32) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&y| y == x).map(|c| (r, c)))
    }
}

impl fmt::Display for Tableau {
    /// ASCII Young diagram in English notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, row) in self.rows.iter().enumerate() {
            let border = format!("+{}", format!("{}+", "-".repeat(width + 2)).repeat(row.len()));
            if i == 0 {
                writeln!(f, "{border}")?;
            }
            write!(f, "|")?;
            for x in row {
                write!(f, " {x:>width$} |")?;
            }
            writeln!(f)?;
            writeln!(f, "{border}")?;
        }
        Ok(())
    }
}

/// All SYT of `shape`, ordered lexicographically by reading word.
pub fn enumerate_syt(shape: &Shape) -> Result<Vec<Tableau>> {
    enumerate_syt_capped(shape, ENUMERATION_CAP)
}

pub fn enumerate_syt_capped(shape: &Shape, cap: usize) -> Result<Vec<Tableau>> {
    let cells = shape.cells();
    if cells > cap {
        return Err(Error::EnumerationCap { cells, cap });
    }
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.0.len()];
    let mut out = Vec::new();
    fn place(shape: &[usize], rows: &mut Vec<Vec<u32>>, next: u32, total: u32, out: &mut Vec<Tableau>) {
        if next > total {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            // addable corner: room in the row, and the cell above is filled
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                place(shape, rows, next + 1, total, out);
                rows[r].pop();
            }
        }
    }
    place(&shape.0, &mut rows, 1, cells as u32, &mut out);
    out.sort_by_cached_key(Tableau::reading_word);
    Ok(out)
}

fn check_family(n: usize, d: usize) -> Result<()> {
    if n < 4 || d < 1 || d > n - 3 {
        return Err(Error::BettiIndexOutOfRange { n, d });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "family")]
pub enum TableauFamily {
    /// Shape `(d+1, d+1, 1^{n-d-3})`, `n + d - 1` boxes.
    Associahedron { n: usize, d: usize },
    /// Shape `(d+1, 2, 1^{n-d-3})`, `n` boxes.
    Syzygy { n: usize, d: usize },
}

impl TableauFamily {
    pub fn shape(&self) -> Result<Shape> {
        match *self {
            TableauFamily::Associahedron { n, d } => Shape::associahedron(n, d),
            TableauFamily::Syzygy { n, d } => Shape::syzygy(n, d),
        }
    }

    pub fn count(&self) -> Result<u128> {
        Ok(hook_count(&self.shape()?))
    }

    pub fn enumerate(&self) -> Result<Vec<Tableau>> {
        enumerate_syt(&self.shape()?)
    }

    pub fn contains(&self, t: &Tableau) -> bool {
        self.shape().is_ok_and(|s| s == t.shape())
    }
}

impl fmt::Display for TableauFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableauFamily::Associahedron { n, d } => write!(f, "associahedron(n={n}, d={d})"),
            TableauFamily::Syzygy { n, d } => write!(f, "syzygy(n={n}, d={d})"),
        }
    }
}

/// Number of SYT of shape `(d+1, 2, 1^{n-d-3})`.
pub fn syzygy_count(n: usize, d: usize) -> Result<u128> {
    Ok(hook_count(&Shape::syzygy(n, d)?))
}

/// `(n, d)` of an associahedron tableau, recovered from its shape.
pub fn associahedron_type(t: &Tableau) -> Result<(usize, usize)> {
    let s = t.shape();
    let p = s.parts();
    let bad = || Error::FamilyMismatch(format!("associahedron family (shape {s})"));
    if p.len() < 2 || p[0] != p[1] || p[0] < 2 || p[2..].iter().any(|&x| x != 1) {
        return Err(bad());
    }
    let d = p[0] - 1;
    let n = p.len() + d + 1;
    check_family(n, d).map_err(|_| bad())?;
    Ok((n, d))
}

fn require_family(t: &Tableau, n: usize, d: usize) -> Result<()> {
    let fam = TableauFamily::Associahedron { n, d };
    if !fam.contains(t) {
        return Err(Error::FamilyMismatch(fam.to_string()));
    }
    Ok(())
}

/// Whether `n+1, ..., n+d-1` fill second-row positions `3..=d+1` in order.
/// Removing those boxes then leaves a syzygy tableau.
pub fn restricts_to_syzygy(t: &Tableau, n: usize, d: usize) -> Result<bool> {
    require_family(t, n, d)?;
    let second = &t.rows[1];
    Ok((0..d - 1).all(|k| second[2 + k] == (n + 1 + k) as u32))
}

/// The syzygy tableau obtained by deleting the large second-row entries.
pub fn restrict_to_syzygy(t: &Tableau, n: usize, d: usize) -> Result<Option<Tableau>> {
    if !restricts_to_syzygy(t, n, d)? {
        return Ok(None);
    }
    let mut rows = t.rows.clone();
    rows[1].truncate(2);
    Ok(Some(Tableau::new(rows)?))
}

/// Result of applying the involution to a tableau of type `(n, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionImage {
    pub tableau: Tableau,
    /// Type of the image: `d`, `d + 1` or `d - 1`.
    pub d: usize,
    pub fixed: bool,
}

/// The box-moving involution on associahedron tableaux.
///
/// Fixed points are the tableaux that restrict to syzygy tableaux. Any
/// other tableau has a largest entry `i` among `n+1..n+d-1` outside the
/// second row. If `i` ends the first column it moves to the end of the
/// first row and `n+d` is appended to the second row (type `d+1`). If `i`
/// ends the first row it moves to the bottom of the first column and the
/// last second-row entry, necessarily `n+d-1`, is dropped (type `d-1`).
pub fn involution(t: &Tableau, n: usize, d: usize) -> Result<InvolutionImage> {
    require_family(t, n, d)?;
    if restricts_to_syzygy(t, n, d)? {
        return Ok(InvolutionImage {
            tableau: t.clone(),
            d,
            fixed: true,
        });
    }
    let second = &t.rows[1];
    let i = ((n + 1)..=(n + d - 1))
        .rev()
        .map(|x| x as u32)
        .find(|x| !second.contains(x))
        .ok_or_else(|| Error::Involution("no large entry outside the second row".into()))?;
    let (r, c) = t.position(i).expect("entry present in a standard filling");
    let mut rows = t.rows.clone();
    let last_row = rows.len() - 1;
    let at_row_end = r == 0 && c == rows[0].len() - 1;
    let at_col_bottom = c == 0 && r == last_row && r >= 2;
    let image = if at_col_bottom {
        rows.pop();
        rows[0].push(i);
        rows[1].push((n + d) as u32);
        InvolutionImage {
            tableau: Tableau { rows },
            d: d + 1,
            fixed: false,
        }
    } else if at_row_end {
        if d < 2 {
            return Err(Error::Involution("cannot lower d below 1".into()));
        }
        rows[0].pop();
        let dropped = rows[1].pop().unwrap();
        if dropped != (n + d - 1) as u32 {
            return Err(Error::Involution(format!(
                "dropped entry {dropped}, expected {}",
                n + d - 1
            )));
        }
        rows.push(vec![i]);
        InvolutionImage {
            tableau: Tableau { rows },
            d: d - 1,
            fixed: false,
        }
    } else {
        return Err(Error::Involution(format!(
            "entry {i} sits at ({}, {}), neither ending row 1 nor column 1",
            r + 1,
            c + 1
        )));
    };
    image
        .tableau
        .check()
        .map_err(|e| Error::Involution(format!("image is not standard: {e}")))?;
    Ok(image)
}

/// Exhaustive check of the involution on all tableaux of type `(n, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionCheck {
    pub n: usize,
    pub d: usize,
    pub tableaux: usize,
    pub fixed: usize,
    /// Images of type `d + 1` and `d - 1`.
    pub raised: usize,
    pub lowered: usize,
    /// Number of syzygy tableaux, which the fixed points must match.
    pub syzygy: u128,
    pub failures: Vec<String>,
}

impl InvolutionCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.fixed as u128 == self.syzygy
    }
}

/// Applies the involution twice to every tableau of type `(n, d)` and
/// checks that it returns home, that non-fixed images gain or lose exactly
/// one box, and that fixed points restrict to distinct syzygy tableaux.
pub fn verify_involution(n: usize, d: usize) -> Result<InvolutionCheck> {
    let all = TableauFamily::Associahedron { n, d }.enumerate()?;
    let mut check = InvolutionCheck {
        n,
        d,
        tableaux: all.len(),
        fixed: 0,
        raised: 0,
        lowered: 0,
        syzygy: syzygy_count(n, d)?,
        failures: Vec::new(),
    };
    let mut restricted = std::collections::BTreeSet::new();
    for t in &all {
        let img = match involution(t, n, d) {
            Ok(img) => img,
            Err(e) => {
                check.failures.push(format!("{:?}: {e}", t.rows));
                continue;
            }
        };
        if img.fixed {
            check.fixed += 1;
            if let Some(r) = restrict_to_syzygy(t, n, d)? {
                restricted.insert(r);
            }
            continue;
        }
        let boxes = img.tableau.size() as isize - t.size() as isize;
        match (img.d == d + 1, img.d + 1 == d, boxes) {
            (true, _, 1) => check.raised += 1,
            (_, true, -1) => check.lowered += 1,
            _ => check
                .failures
                .push(format!("{:?}: image has type {} and {boxes:+} boxes", t.rows, img.d)),
        }
        match involution(&img.tableau, n, img.d) {
            Ok(back) if back.tableau == *t && back.d == d => {}
            Ok(back) => check
                .failures
                .push(format!("{:?}: returns to {:?}", t.rows, back.tableau.rows)),
            Err(e) => check
                .failures
                .push(format!("{:?}: second application failed: {e}", t.rows)),
        }
    }
    if restricted.len() != check.fixed {
        check.failures.push(format!(
            "{} fixed points restrict to only {} syzygy tableaux",
            check.fixed,
            restricted.len()
        ));
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(p: &[usize]) -> Shape {
        Shape::new(p.to_vec()).unwrap()
    }

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn involution_checks_small() {
        for n in 4..=7 {
            for d in 1..=n - 3 {
                let c = verify_involution(n, d).unwrap();
                assert!(c.passed(), "{c:?}");
                assert_eq!(c.fixed + c.raised + c.lowered, c.tableaux);
            }
        }
    }

    #[test]
    fn shape_validation() {
        assert!(Shape::new(vec![2, 3]).is_err());
        assert!(Shape::new(vec![2, 0]).is_err());
        assert!(Shape::new(vec![]).is_ok());
        assert_eq!(Shape::associahedron(7, 2).unwrap(), shape(&[3, 3, 1, 1]));
        assert_eq!(Shape::syzygy(6, 2).unwrap(), shape(&[3, 2, 1]));
        assert!(Shape::syzygy(6, 4).is_err());
    }

    #[test]
    fn hook_counts() {
        assert_eq!(hook_count(&shape(&[2, 2, 1])), 5);
        assert_eq!(hook_count(&shape(&[1])), 1);
        assert_eq!(hook_count(&shape(&[])), 1);
        assert_eq!(hook_count(&shape(&[3, 2, 1])), 16);
        assert_eq!(hook_count(&shape(&[3, 2])), 5);
        assert_eq!(shape(&[3, 2, 1]).hooks(), vec![vec![5, 3, 1], vec![3, 1], vec![1]]);
    }

    #[test]
    fn pentagon_tableaux() {
        let all = enumerate_syt(&shape(&[2, 2, 1])).unwrap();
        let expected = vec![
            tab(&[&[1, 2], &[3, 4], &[5]]),
            tab(&[&[1, 2], &[3, 5], &[4]]),
            tab(&[&[1, 3], &[2, 4], &[5]]),
            tab(&[&[1, 3], &[2, 5], &[4]]),
            tab(&[&[1, 4], &[2, 5], &[3]]),
        ];
        assert_eq!(all, expected);
    }

    #[test]
    fn enumeration_edges() {
        assert_eq!(enumerate_syt(&shape(&[7])).unwrap().len(), 1);
        assert_eq!(enumerate_syt(&shape(&[3, 2, 1])).unwrap().len(), 16);
        assert!(matches!(
            enumerate_syt(&shape(&[8, 7])),
            Err(Error::EnumerationCap { cells: 15, cap: 14 })
        ));
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&shape(&[2, 2, 1, 1])), shape(&[4, 2]));
        assert_eq!(conjugate(&shape(&[1])), shape(&[1]));
        for n in 5..=12 {
            for d in 1..=n - 3 {
                let mut p = vec![n - d - 1, 2];
                p.extend(std::iter::repeat_n(1, d - 1));
                assert_eq!(conjugate(&Shape::syzygy(n, d).unwrap()), shape(&p));
            }
        }
    }

    #[test]
    fn syzygy_counts() {
        assert_eq!(syzygy_count(6, 2).unwrap(), 16);
        assert_eq!(syzygy_count(9, 3).unwrap(), 189);
        assert_eq!(syzygy_count(5, 1).unwrap(), 5);
        assert!(syzygy_count(6, 0).is_err());
    }

    #[test]
    fn tableau_validation() {
        assert!(Tableau::new(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(Tableau::new(vec![vec![1, 3], vec![4]]).is_err());
        assert!(Tableau::new(vec![vec![2, 3], vec![1, 4]]).is_err());
    }

    #[test]
    fn restriction_examples() {
        // n = 7, d = 3: shape (4,4,1), entries 1..=9
        let left = tab(&[&[1, 2, 3, 4], &[5, 6, 8, 9], &[7]]);
        assert!(restricts_to_syzygy(&left, 7, 3).unwrap());
        assert_eq!(
            restrict_to_syzygy(&left, 7, 3).unwrap().unwrap(),
            tab(&[&[1, 2, 3, 4], &[5, 6], &[7]])
        );
        let right = tab(&[&[1, 2, 3, 4], &[5, 6, 7, 8], &[9]]);
        assert!(!restricts_to_syzygy(&right, 7, 3).unwrap());
        for t in enumerate_syt(&Shape::associahedron(7, 1).unwrap()).unwrap() {
            assert!(restricts_to_syzygy(&t, 7, 1).unwrap());
        }
        assert!(matches!(
            restricts_to_syzygy(&left, 7, 2),
            Err(Error::FamilyMismatch(_))
        ));
    }

    #[test]
    fn involution_pair_3311_441() {
        // n = 7, d = 2, with 8 at the bottom of the first column
        let x = tab(&[&[1, 3, 5], &[2, 4, 6], &[7], &[8]]);
        let y = involution(&x, 7, 2).unwrap();
        assert_eq!(y.d, 3);
        assert_eq!(y.tableau, tab(&[&[1, 3, 5, 8], &[2, 4, 6, 9], &[7]]));
        assert_eq!(y.tableau.size(), x.size() + 1);
        let back = involution(&y.tableau, 7, 3).unwrap();
        assert_eq!(back.d, 2);
        assert_eq!(back.tableau, x);
    }

    #[test]
    fn involution_fixes_restricting_tableaux() {
        let left = tab(&[&[1, 2, 3, 4], &[5, 6, 8, 9], &[7]]);
        let img = involution(&left, 7, 3).unwrap();
        assert!(img.fixed);
        assert_eq!(img.tableau, left);
    }

    #[test]
    fn involution_rejects_foreign_shapes() {
        let t = tab(&[&[1, 2, 3], &[4, 5], &[6]]);
        assert!(matches!(involution(&t, 6, 2), Err(Error::FamilyMismatch(_))));
        assert!(associahedron_type(&t).is_err());
        assert_eq!(
            associahedron_type(&tab(&[&[1, 3, 5], &[2, 4, 6], &[7], &[8]])).unwrap(),
            (7, 2)
        );
    }

    #[test]
    fn ascii_rendering() {
        let t = tab(&[&[1, 2], &[3]]);
        assert_eq!(t.to_string(), "+---+---+\n| 1 | 2 |\n+---+---+\n| 3 |\n+---+\n");
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[1,2],[3]]");
    }
}
