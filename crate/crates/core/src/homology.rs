//! Exact reduced homology of finite cell complexes.
//!
//! A complex is first turned into a [`CellComplex`]: signed integer
//! incidences between cells of adjacent dimensions, with a single empty
//! cell in dimension -1 so that augmentation (and hence reduced homology)
//! falls out of the ordinary rank formula. A [`ChainComplex`] then carries
//! those incidences into a coefficient [`Field`] and checks `∂∘∂ = 0`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::complex::{Cell, LabeledComplex};
use crate::error::{Error, Result};
use crate::field::{BigRational, Field, FieldKind, Gf2};

/// Sparse matrix stored by columns; each column is sorted by row and holds
/// no explicit zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<F> {
    rows: usize,
    columns: Vec<Vec<(usize, F)>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds a matrix from `(row, value)` column lists. Entries are sorted
    /// and zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, F)>>) -> Self {
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.sort_by_key(|e| e.0);
                c.retain(|e| !e.1.is_zero());
                debug_assert!(c.iter().all(|e| e.0 < rows));
                c
            })
            .collect();
        Self { rows, columns }
    }

    pub fn from_dense(rows: &[Vec<F>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let columns = (0..ncols)
            .map(|j| (0..nrows).map(|i| (i, rows[i][j].clone())).collect())
            .collect();
        Self::from_columns(nrows, columns)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, F)] {
        &self.columns[j]
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.columns[j]
            .binary_search_by_key(&i, |e| e.0)
            .map_or_else(|_| F::zero(), |k| self.columns[j][k].1.clone())
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols(), rhs.rows, "dimension mismatch");
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, F> = BTreeMap::new();
                for (k, v) in col {
                    for (i, w) in &self.columns[*k] {
                        let slot = acc.entry(*i).or_insert_with(F::zero);
                        *slot = slot.clone() + w.clone() * v.clone();
                    }
                }
                acc.into_iter().filter(|e| !e.1.is_zero()).collect()
            })
            .collect();
        Self {
            rows: self.rows,
            columns,
        }
    }

    /// Rank by exact column reduction: each column is reduced against
    /// earlier columns until its lowest nonzero row is unclaimed.
    pub fn rank(&self) -> usize {
        let mut owner: HashMap<usize, Vec<(usize, F)>> = HashMap::new();
        let mut rank = 0;
        for col in &self.columns {
            let mut v = col.clone();
            while let Some((low, lead)) = v.last().cloned() {
                match owner.get(&low) {
                    Some(pivot) => {
                        let factor = lead * pivot.last().unwrap().1.inverse();
                        v = axpy(&v, &factor, pivot);
                    }
                    None => {
                        owner.insert(low, v);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }

    pub fn nullity(&self) -> usize {
        self.cols() - self.rank()
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        let mut out = vec![vec![F::zero(); self.cols()]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                out[*i][j] = v.clone();
            }
        }
        out
    }
}

impl<F: Field + fmt::Display> SparseMatrix<F> {
    /// Dense rows of display strings, for JSON debugging dumps.
    pub fn to_rows(&self) -> Vec<Vec<String>> {
        self.to_dense()
            .into_iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    }
}

/// `x - a * y` for sorted sparse vectors.
fn axpy<F: Field>(x: &[(usize, F)], a: &F, y: &[(usize, F)]) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(a.clone() * y[j].1.clone())));
            j += 1;
        } else {
            let v = x[i].1.clone() - a.clone() * y[j].1.clone();
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Integer cell incidences grouped by level, where level `k` holds the
/// cells of dimension `k - 1`. Level 0 is the empty cell.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CellComplex {
    levels: Vec<Vec<Vec<(usize, i8)>>>,
}

impl CellComplex {
    /// `boundaries[k][c]` lists the signed faces (indices into level `k-1`)
    /// of cell `c` at level `k`.
    pub fn from_levels(levels: Vec<Vec<Vec<(usize, i8)>>>) -> Self {
        Self { levels }
    }

    /// Largest cell dimension, or -1 if only the empty cell is present, or
    /// -2 for the void complex.
    pub fn dim(&self) -> isize {
        self.levels.len() as isize - 2
    }

    pub fn cell_count(&self, dim: isize) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.levels.get(k))
            .map_or(0, Vec::len)
    }

    /// Whether the complex has any nonempty cell.
    pub fn has_cells(&self) -> bool {
        self.levels.len() > 1 && self.levels[1..].iter().any(|l| !l.is_empty())
    }

    /// Orients a (sub)complex of the labeled associahedron.
    ///
    /// A simplex orders its vertex diagonals canonically and gets the usual
    /// alternating boundary. The interior cell's boundary coefficients are
    /// found by propagating signs across ridges of the boundary sphere so
    /// that every ridge cancels.
    pub fn from_labeled(complex: &LabeledComplex) -> Result<Self> {
        let top = complex.max_dim();
        if complex.is_empty() {
            return Ok(Self::default());
        }
        let mut position = vec![0usize; complex.len()];
        let mut levels: Vec<Vec<Vec<(usize, i8)>>> = vec![Vec::new(); (top + 2) as usize];
        for face in complex.faces() {
            let level = (face.dim + 1) as usize;
            position[face.id] = levels[level].len();
            levels[level].push(Vec::new());
        }
        for face in complex.faces() {
            let Cell::Simplex(d) = &face.cell else { continue };
            let ds = d.diagonals();
            let mut bd = Vec::with_capacity(ds.len());
            for skip in 0..ds.len() {
                let sub: Vec<_> = ds
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &x)| x)
                    .collect();
                let lower = complex
                    .id_of_diagonals(&sub)
                    .ok_or_else(|| Error::Orientation(format!("face {d} is missing a facet")))?;
                let sign = if skip % 2 == 0 { 1 } else { -1 };
                bd.push((position[lower], sign));
            }
            levels[(face.dim + 1) as usize][position[face.id]] = bd;
        }
        if let Some(interior) = complex.interior() {
            let signs = orient_top_cell(complex, &levels)?;
            let level = (complex.face(interior).dim + 1) as usize;
            levels[level][position[interior]] = signs;
        }
        Ok(Self { levels })
    }

    /// Orients an abstract simplicial complex with sorted vertex lists.
    pub fn from_simplicial(complex: &SimplicialComplex) -> Self {
        let mut levels: Vec<Vec<Vec<(usize, i8)>>> = Vec::new();
        let mut index: HashMap<&[u32], usize> = HashMap::new();
        for s in complex.simplices() {
            let level = s.len();
            while levels.len() <= level {
                levels.push(Vec::new());
            }
            let mut bd = Vec::with_capacity(s.len());
            for skip in 0..s.len() {
                let sub: Vec<u32> = s
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                let sign = if skip % 2 == 0 { 1 } else { -1 };
                bd.push((index[sub.as_slice()], sign));
            }
            index.insert(s.as_slice(), levels[level].len());
            levels[level].push(bd);
        }
        Self { levels }
    }

    /// Carries the incidences into `F` and checks `∂∘∂ = 0`.
    pub fn chain_complex<F: Field>(&self) -> Result<ChainComplex<F>> {
        let mut boundaries = Vec::with_capacity(self.levels.len());
        for (k, level) in self.levels.iter().enumerate() {
            let rows = if k == 0 { 0 } else { self.levels[k - 1].len() };
            let columns = level
                .iter()
                .map(|bd| bd.iter().map(|&(i, s)| (i, F::from_sign(s))).collect())
                .collect();
            boundaries.push(SparseMatrix::from_columns(rows, columns));
        }
        let cc = ChainComplex { boundaries };
        cc.check_boundary_squared()?;
        Ok(cc)
    }
}

/// Coefficients of the interior cell on the facets of the boundary sphere.
fn orient_top_cell(complex: &LabeledComplex, levels: &[Vec<Vec<(usize, i8)>>]) -> Result<Vec<(usize, i8)>> {
    let top_simplex = complex
        .faces()
        .iter()
        .filter(|f| !f.is_interior())
        .map(|f| f.dim)
        .max()
        .ok_or_else(|| Error::Orientation("no simplices below the interior cell".into()))?;
    let facet_level = &levels[(top_simplex + 1) as usize];
    // ridge -> [(facet, sign of ridge in facet)]
    let mut ridges: HashMap<usize, Vec<(usize, i8)>> = HashMap::new();
    for (facet, bd) in facet_level.iter().enumerate() {
        for &(ridge, sign) in bd {
            ridges.entry(ridge).or_default().push((facet, sign));
        }
    }
    for (ridge, users) in &ridges {
        if users.len() != 2 {
            return Err(Error::Orientation(format!(
                "ridge {ridge} lies in {} facets, expected 2",
                users.len()
            )));
        }
    }
    let mut coeff: Vec<i8> = vec![0; facet_level.len()];
    let mut queue = VecDeque::new();
    if !coeff.is_empty() {
        coeff[0] = 1;
        queue.push_back(0);
    }
    while let Some(f) = queue.pop_front() {
        for &(ridge, sign) in &facet_level[f] {
            let users = &ridges[&ridge];
            let (g, g_sign) = if users[0].0 == f { users[1] } else { users[0] };
            // coeff[f] * sign + coeff[g] * g_sign = 0
            let want = -coeff[f] * sign * g_sign;
            if coeff[g] == 0 {
                coeff[g] = want;
                queue.push_back(g);
            } else if coeff[g] != want {
                return Err(Error::Orientation(format!(
                    "facets {f} and {g} disagree across ridge {ridge}"
                )));
            }
        }
    }
    if let Some(lost) = coeff.iter().position(|&c| c == 0) {
        return Err(Error::Orientation(format!("facet {lost} unreachable from facet 0")));
    }
    Ok(coeff.into_iter().enumerate().collect())
}

/// Finite simplicial complex on positive vertex labels, closed under
/// subsets and stored with the empty simplex first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    simplices: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    /// Downward closure of the given faces. An empty facet list yields the
    /// complex whose only face is the empty simplex.
    pub fn from_facets<I, S>(facets: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = u32>,
    {
        let mut all: std::collections::BTreeSet<Vec<u32>> = std::collections::BTreeSet::new();
        all.insert(Vec::new());
        for facet in facets {
            let mut vs: Vec<u32> = facet.into_iter().collect();
            vs.sort_unstable();
            vs.dedup();
            assert!(vs.len() < 32, "simplex too large");
            for bits in 1u32..(1 << vs.len()) {
                let sub = vs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| bits >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                all.insert(sub);
            }
        }
        let mut simplices: Vec<Vec<u32>> = all.into_iter().collect();
        simplices.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Self { simplices }
    }

    /// The cycle graph `C_n` on `1..=n`.
    pub fn cycle(n: u32) -> Self {
        Self::from_facets((1..=n).map(|i| [i, i % n + 1]))
    }

    /// Induced subcomplex on the vertices in `keep`.
    pub fn induced(&self, keep: impl Fn(u32) -> bool) -> Self {
        Self {
            simplices: self
                .simplices
                .iter()
                .filter(|s| s.iter().all(|&v| keep(v)))
                .cloned()
                .collect(),
        }
    }

    pub fn simplices(&self) -> &[Vec<u32>] {
        &self.simplices
    }
}

/// Boundary matrices over a field. `boundary(dim)` maps dimension `dim`
/// chains to dimension `dim - 1`, down to the augmentation at `dim = 0`.
#[derive(Clone, Debug)]
pub struct ChainComplex<F> {
    boundaries: Vec<SparseMatrix<F>>,
}

impl<F: Field> ChainComplex<F> {
    pub fn dim(&self) -> isize {
        self.boundaries.len() as isize - 2
    }

    /// `∂_dim`; dimension -1 gives the zero map out of the empty cell.
    pub fn boundary(&self, dim: isize) -> Option<&SparseMatrix<F>> {
        usize::try_from(dim + 1).ok().and_then(|k| self.boundaries.get(k))
    }

    fn check_boundary_squared(&self) -> Result<()> {
        for k in 1..self.boundaries.len() {
            if !self.boundaries[k - 1].mul(&self.boundaries[k]).is_zero() {
                return Err(Error::BoundarySquared { dim: k as isize - 1 });
            }
        }
        Ok(())
    }

    pub fn reduced_homology(&self) -> ReducedHomology {
        let ranks: Vec<usize> = self.boundaries.iter().map(SparseMatrix::rank).collect();
        let mut dims = Vec::with_capacity(self.boundaries.len());
        for (k, b) in self.boundaries.iter().enumerate() {
            let cycles = b.cols() - ranks[k];
            let borders = ranks.get(k + 1).copied().unwrap_or(0);
            dims.push(cycles - borders);
        }
        let empty_class = dims.first().copied().unwrap_or(0);
        let betti = dims.into_iter().skip(1).collect();
        ReducedHomology { empty_class, betti }
    }
}

/// Reduced Betti numbers: `empty_class` is `dim H̃_{-1}` (nonzero only for
/// a complex with no vertices), `betti[i]` is `dim H̃_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedHomology {
    pub empty_class: usize,
    pub betti: Vec<usize>,
}

impl ReducedHomology {
    pub fn vanishes(&self) -> bool {
        self.empty_class == 0 && self.betti.iter().all(|&b| b == 0)
    }
}

/// Outcome of an acyclicity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Acyclicity {
    Acyclic,
    /// No nonempty faces.
    Empty,
    NotAcyclic,
}

impl Acyclicity {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, Acyclicity::Acyclic)
    }

    /// Acyclic or empty: what a cellular resolution needs.
    pub fn is_admissible(&self) -> bool {
        !matches!(self, Acyclicity::NotAcyclic)
    }
}

pub type Gf2ChainComplex = ChainComplex<Gf2>;
pub type RationalChainComplex = ChainComplex<BigRational>;

pub fn reduced_homology_in<F: Field>(cells: &CellComplex) -> Result<ReducedHomology> {
    Ok(cells.chain_complex::<F>()?.reduced_homology())
}

pub fn reduced_homology(cells: &CellComplex, field: FieldKind) -> Result<ReducedHomology> {
    match field {
        FieldKind::Gf2 => reduced_homology_in::<Gf2>(cells),
        FieldKind::Rational => reduced_homology_in::<BigRational>(cells),
    }
}

/// Dimensions of `H̃_0, H̃_1, ...` of a labeled complex.
pub fn reduced_betti_numbers(complex: &LabeledComplex, field: FieldKind) -> Result<Vec<usize>> {
    Ok(reduced_homology(&CellComplex::from_labeled(complex)?, field)?.betti)
}

pub fn acyclicity_of(cells: &CellComplex, field: FieldKind) -> Result<Acyclicity> {
    if !cells.has_cells() {
        return Ok(Acyclicity::Empty);
    }
    Ok(if reduced_homology(cells, field)?.vanishes() {
        Acyclicity::Acyclic
    } else {
        Acyclicity::NotAcyclic
    })
}

pub fn acyclicity(complex: &LabeledComplex, field: FieldKind) -> Result<Acyclicity> {
    acyclicity_of(&CellComplex::from_labeled(complex)?, field)
}

/// True iff every reduced Betti number vanishes. Empty complexes are
/// reported as not acyclic; use [`acyclicity`] to tell them apart.
pub fn is_acyclic(complex: &LabeledComplex, field: FieldKind) -> Result<bool> {
    Ok(acyclicity(complex, field)?.is_acyclic())
}

/// Chain complex of a labeled complex over a runtime-chosen field, with
/// boundary matrices rendered for export.
pub fn boundary_matrices(complex: &LabeledComplex, field: FieldKind) -> Result<Vec<Vec<Vec<String>>>> {
    let cells = CellComplex::from_labeled(complex)?;
    fn dump<F: Field + fmt::Display>(cc: ChainComplex<F>) -> Vec<Vec<Vec<String>>> {
        cc.boundaries.iter().skip(1).map(SparseMatrix::to_rows).collect()
    }
    Ok(match field {
        FieldKind::Gf2 => dump(cells.chain_complex::<Gf2>()?),
        FieldKind::Rational => dump(cells.chain_complex::<BigRational>()?),
    })
}

impl<F: Field> SparseMatrix<F> {
    /// Column `j` as a dense vector.
    pub fn column_entries(&self, j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.rows];
        for (i, v) in &self.columns[j] {
            out[*i] = v.clone();
        }
        out
    }
}

impl<F: Field> ChainComplex<F> {
    /// Whether every coefficient in column `col` of the top boundary is ±1.
    pub fn top_cell_is_unit_row(&self, col: usize) -> bool {
        let Some(top) = self.boundaries.last() else {
            return false;
        };
        top.column_entries(col)
            .iter()
            .all(|v| *v == F::one() || *v == -F::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build, restrict, MonomialLabel};
    use num_rational::Ratio;

    type Q64 = Ratio<i64>;

    fn q(v: i64) -> Q64 {
        Q64::from_integer(v)
    }

    #[test]
    fn rank_small_matrices() {
        let m = SparseMatrix::from_dense(&[vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(1), q(0), q(1)]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.nullity(), 1);
        let g = SparseMatrix::from_dense(&[
            vec![Gf2(true), Gf2(true), Gf2(false)],
            vec![Gf2(false), Gf2(true), Gf2(true)],
            vec![Gf2(true), Gf2(false), Gf2(true)],
        ]);
        // rows sum to zero mod 2
        assert_eq!(g.rank(), 2);
        let z: SparseMatrix<Gf2> = SparseMatrix::zeros(3, 4);
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn rank_plus_nullity() {
        // brute-force rank of 3x3 GF(2) matrices via determinant-style enumeration
        for bits in 0u32..512 {
            let rows: Vec<Vec<Gf2>> = (0..3)
                .map(|i| (0..3).map(|j| Gf2(bits >> (3 * i + j) & 1 == 1)).collect())
                .collect();
            let m = SparseMatrix::from_dense(&rows);
            // span size of the columns
            let col = |j: usize| (0..3).fold(0u32, |acc, i| acc | (rows[i][j].0 as u32) << i);
            let mut span = std::collections::HashSet::new();
            for c in 0..8u32 {
                let v = (0..3).filter(|j| c >> j & 1 == 1).fold(0, |acc, j| acc ^ col(j));
                span.insert(v);
            }
            let oracle = span.len().trailing_zeros() as usize;
            assert_eq!(m.rank(), oracle);
            assert_eq!(m.rank() + m.nullity(), 3);
        }
    }

    #[test]
    fn pentagon_edge_boundary_rank() {
        let a5 = build(5).unwrap();
        let cc = CellComplex::from_labeled(&a5)
            .unwrap()
            .chain_complex::<BigRational>()
            .unwrap();
        assert_eq!(cc.boundary(1).unwrap().cols(), 5);
        assert_eq!(cc.boundary(1).unwrap().rank(), 4);
    }

    #[test]
    fn interior_row_over_gf2_is_all_ones() {
        for n in 4..=8 {
            let a = build(n).unwrap();
            let cc = CellComplex::from_labeled(&a).unwrap().chain_complex::<Gf2>().unwrap();
            let top = cc.boundary(n as isize - 3).unwrap();
            assert_eq!(top.cols(), 1);
            let entries = top.column_entries(0);
            assert_eq!(entries.len() as u128, crate::complex::f_formula(n, n - 3).unwrap());
            assert!(entries.iter().all(|e| *e == Gf2(true)));
            let ccq = CellComplex::from_labeled(&a)
                .unwrap()
                .chain_complex::<BigRational>()
                .unwrap();
            assert!(ccq.top_cell_is_unit_row(0));
        }
    }

    #[test]
    fn boundary_squared_vanishes_n6() {
        let a6 = build(6).unwrap();
        let cells = CellComplex::from_labeled(&a6).unwrap();
        let g = cells.chain_complex::<Gf2>().unwrap();
        let r = cells.chain_complex::<BigRational>().unwrap();
        for dim in 0..=3 {
            assert!(g.boundary(dim - 1).unwrap().mul(g.boundary(dim).unwrap()).is_zero());
            assert!(r.boundary(dim - 1).unwrap().mul(r.boundary(dim).unwrap()).is_zero());
        }
    }

    #[test]
    fn bad_sign_is_caught() {
        // a triangle boundary with one flipped sign on an edge
        let levels = vec![
            vec![vec![]],
            vec![vec![(0, 1)], vec![(0, 1)], vec![(0, 1)]],
            vec![vec![(0, -1), (1, 1)], vec![(0, -1), (2, 1)], vec![(1, -1), (2, 1)]],
            vec![vec![(0, 1), (1, 1), (2, 1)]],
        ];
        let cells = CellComplex::from_levels(levels);
        assert!(matches!(
            cells.chain_complex::<BigRational>(),
            Err(Error::BoundarySquared { dim: 2 })
        ));
        // over GF(2) the same incidences are fine
        assert!(cells.chain_complex::<Gf2>().is_ok());
    }

    #[test]
    fn sphere_point_and_circle() {
        let boundary = build(6).unwrap().boundary();
        for field in [FieldKind::Gf2, FieldKind::Rational] {
            assert_eq!(reduced_betti_numbers(&boundary, field).unwrap(), vec![0, 0, 1]);
            assert_eq!(acyclicity(&boundary, field).unwrap(), Acyclicity::NotAcyclic);
            let point = SimplicialComplex::from_facets([[7u32]]);
            let h = reduced_homology(&CellComplex::from_simplicial(&point), field).unwrap();
            assert!(h.vanishes());
            assert_eq!(h.betti, vec![0]);
            let circle = SimplicialComplex::cycle(6);
            let h = reduced_homology(&CellComplex::from_simplicial(&circle), field).unwrap();
            assert_eq!(h.betti, vec![0, 1]);
        }
    }

    #[test]
    fn acyclicity_examples() {
        let a6 = build(6).unwrap();
        for field in [FieldKind::Gf2, FieldKind::Rational] {
            assert!(is_acyclic(&a6, field).unwrap());
            let path = restrict(&a6, MonomialLabel::from_vertices([1, 2, 3, 4]).unwrap()).unwrap();
            assert!(is_acyclic(&path, field).unwrap());
            let empty = restrict(&a6, MonomialLabel::from_vertices([1, 2]).unwrap()).unwrap();
            assert!(!is_acyclic(&empty, field).unwrap());
            assert_eq!(acyclicity(&empty, field).unwrap(), Acyclicity::Empty);
        }
    }

    #[test]
    fn empty_simplex_only() {
        let nothing = SimplicialComplex::from_facets(Vec::<Vec<u32>>::new());
        let h = reduced_homology(&CellComplex::from_simplicial(&nothing), FieldKind::Gf2).unwrap();
        assert_eq!(h.empty_class, 1);
        assert!(h.betti.is_empty());
    }

    #[test]
    fn matrices_export() {
        let a4 = build(4).unwrap();
        let ms = boundary_matrices(&a4, FieldKind::Rational).unwrap();
        // ∂_0: two vertices onto the empty face; ∂_1: the interior segment
        assert_eq!(ms[0], vec![vec!["1".to_string(), "1".to_string()]]);
        assert_eq!(ms[1].len(), 2);
        let col: Vec<&str> = ms[1].iter().map(|r| r[0].as_str()).collect();
        assert!(col == ["1", "-1"] || col == ["-1", "1"]);
    }
}
