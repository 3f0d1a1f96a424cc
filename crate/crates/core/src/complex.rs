//! The monomial-labeled associahedron `A_n`.
//!
//! Simplicial faces are dissections; each is labeled by the squarefree
//! monomial on its endpoints (the lcm of its vertex labels `x_a x_b`).
//! On top of the boundary sphere sits one interior cell of dimension
//! `n - 3` labeled by `x_1 ... x_n`. The empty face is stored explicitly at
//! dimension -1.

use std::collections::HashMap;
use std::fmt;

use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::binomial::{binomial, exact_div};
use crate::error::{Error, Result};
use crate::polygon::{self, check_diagonal_count, check_polygon, Diagonal, Dissection};

/// A squarefree monomial, stored as the set of variable indices it uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialLabel(u32);

impl MonomialLabel {
    pub const EMPTY: Self = Self(0);

    pub fn from_mask(mask: u32) -> Self {
        Self(mask)
    }

    /// `x_1 x_2 ... x_n`.
    pub fn full(n: usize) -> Self {
        Self(if n >= 32 { u32::MAX } else { (1u32 << n) - 1 })
    }

    pub fn from_vertices(vertices: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut mask = 0u32;
        for v in vertices {
            if v == 0 || v > 32 {
                return Err(Error::LabelOutOfRange(v));
            }
            mask |= 1 << (v - 1);
        }
        Ok(Self(mask))
    }

    pub fn mask(&self) -> u32 {
        self.0
    }

    pub fn contains(&self, v: u32) -> bool {
        (1..=32).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    /// Divisibility of monomials.
    pub fn divides(&self, other: &Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn degree(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn vertices(&self) -> Vec<u32> {
        polygon::mask_to_vertices(self.0)
    }
}

impl fmt::Display for MonomialLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        for v in self.vertices() {
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

impl Serialize for MonomialLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<u32>::deserialize(d)?;
        Self::from_vertices(vs).map_err(serde::de::Error::custom)
    }
}

/// What a face of the labeled complex is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    /// A simplex: the set of its vertex diagonals.
    Simplex(Dissection),
    /// The single top-dimensional cell filling the boundary sphere.
    Interior,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub dim: isize,
    pub cell: Cell,
    pub label: MonomialLabel,
}

impl Face {
    pub fn dissection(&self) -> Option<&Dissection> {
        match &self.cell {
            Cell::Simplex(d) => Some(d),
            Cell::Interior => None,
        }
    }

    pub fn is_interior(&self) -> bool {
        matches!(self.cell, Cell::Interior)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.cell {
            Cell::Simplex(d) => write!(f, "{d}"),
            Cell::Interior => write!(f, "interior"),
        }
    }
}

/// Face poset of (a subcomplex of) `A_n` with monomial labels and the
/// Hasse cover relation.
///
/// Faces are sorted by dimension, then by dissection; the interior cell is
/// last. Ids are positions in that order.
#[derive(Clone, Debug)]
pub struct LabeledComplex {
    n: usize,
    faces: Vec<Face>,
    covers: Vec<(usize, usize)>,
    index: HashMap<Vec<Diagonal>, usize>,
    interior: Option<usize>,
}

impl LabeledComplex {
    fn assemble(n: usize, cells: Vec<(Cell, MonomialLabel)>) -> Self {
        let mut faces = Vec::with_capacity(cells.len());
        let mut index = HashMap::with_capacity(cells.len());
        let mut interior = None;
        for (id, (cell, label)) in cells.into_iter().enumerate() {
            let dim = match &cell {
                Cell::Simplex(d) => {
                    index.insert(d.diagonals().to_vec(), id);
                    d.len() as isize - 1
                }
                Cell::Interior => {
                    interior = Some(id);
                    n as isize - 3
                }
            };
            faces.push(Face { id, dim, cell, label });
        }
        let mut covers = Vec::new();
        let mut facets = Vec::new();
        let mut top = -1;
        for face in &faces {
            if let Cell::Simplex(d) = &face.cell {
                let ds = d.diagonals();
                for skip in 0..ds.len() {
                    let sub: Vec<Diagonal> = ds
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &x)| x)
                        .collect();
                    if let Some(&lower) = index.get(&sub) {
                        covers.push((lower, face.id));
                    }
                }
                if face.dim > top {
                    top = face.dim;
                    facets.clear();
                }
                if face.dim == top {
                    facets.push(face.id);
                }
            }
        }
        if let Some(top_cell) = interior {
            covers.extend(facets.into_iter().map(|f| (f, top_cell)));
        }
        covers.sort_unstable();
        Self {
            n,
            faces,
            covers,
            index,
            interior,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    /// No faces at all, not even the empty face.
    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// True when the only face is the empty face (or there are none).
    pub fn has_no_vertices(&self) -> bool {
        self.faces.iter().all(|f| f.dim < 0)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn interior(&self) -> Option<usize> {
        self.interior
    }

    pub fn id_of(&self, dissection: &Dissection) -> Option<usize> {
        self.index.get(dissection.diagonals()).copied()
    }

    pub fn id_of_diagonals(&self, diagonals: &[Diagonal]) -> Option<usize> {
        let mut sorted = diagonals.to_vec();
        sorted.sort_unstable();
        self.index.get(&sorted).copied()
    }

    pub fn max_dim(&self) -> isize {
        self.faces.iter().map(|f| f.dim).max().unwrap_or(-2)
    }

    /// Number of faces in each dimension `-1..=max_dim`, indexed from -1.
    pub fn face_counts(&self) -> Vec<usize> {
        let top = self.max_dim();
        let mut counts = vec![0; (top + 2).max(0) as usize];
        for f in &self.faces {
            counts[(f.dim + 1) as usize] += 1;
        }
        counts
    }

    /// Maximal simplicial faces, i.e. those not covered by another simplex.
    pub fn simplicial_facets(&self) -> Vec<usize> {
        let mut covered = vec![false; self.faces.len()];
        for &(lo, hi) in &self.covers {
            if !self.faces[hi].is_interior() {
                covered[lo] = true;
            }
        }
        self.faces
            .iter()
            .filter(|f| !f.is_interior() && f.dim >= 0 && !covered[f.id])
            .map(|f| f.id)
            .collect()
    }

    /// The boundary sphere: the same complex without its interior cell.
    pub fn boundary(&self) -> Self {
        let cells = self
            .faces
            .iter()
            .filter(|f| !f.is_interior())
            .map(|f| (f.cell.clone(), f.label))
            .collect();
        Self::assemble(self.n, cells)
    }
}

/// Builds `A_n` with its monomial labels, the empty face, and the interior
/// cell.
pub fn build(n: usize) -> Result<LabeledComplex> {
    check_polygon(n)?;
    let mut simplices: Vec<Dissection> = Vec::new();
    polygon::for_each_dissection(n, n - 3, |ds| {
        simplices.push(Dissection::from_sorted_unchecked(n, ds.to_vec()));
    })?;
    simplices.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.diagonals().cmp(y.diagonals())));
    let mut cells: Vec<(Cell, MonomialLabel)> = simplices
        .into_iter()
        .map(|d| {
            let label = MonomialLabel(d.support_mask());
            (Cell::Simplex(d), label)
        })
        .collect();
    cells.push((Cell::Interior, MonomialLabel::full(n)));
    Ok(LabeledComplex::assemble(n, cells))
}

/// `f(n, d)`, the number of dissections of the n-gon by `d` diagonals:
/// `C(n+d, d+1) C(n-3, d) / (n+d)`.
pub fn f_formula(n: usize, d: usize) -> Result<u128> {
    check_diagonal_count(n, d)?;
    let (n, d) = (n as u64, d as u64);
    let num = binomial(n + d, d + 1)?
        .checked_mul(binomial(n - 3, d)?)
        .ok_or(Error::Overflow("f(n, d)"))?;
    exact_div(num, (n + d) as u128, "f(n, d)")
}

/// Subcomplex of faces whose label divides `sigma`.
///
/// The empty face always survives, so a restriction with no vertices still
/// contains it. The interior cell survives iff `sigma` is everything.
pub fn restrict(complex: &LabeledComplex, sigma: MonomialLabel) -> Result<LabeledComplex> {
    if !sigma.divides(&MonomialLabel::full(complex.n)) {
        return Err(Error::LabelOutOfRange(sigma.mask()));
    }
    let cells = complex
        .faces
        .iter()
        .filter(|f| f.label.divides(&sigma))
        .map(|f| (f.cell.clone(), f.label))
        .collect();
    Ok(LabeledComplex::assemble(complex.n, cells))
}

/// The Hasse diagram's cover pairs `(lower, upper)`, including the covers
/// of the empty face and of the interior cell.
pub fn hasse(complex: &LabeledComplex) -> &[(usize, usize)] {
    complex.covers()
}

#[derive(Serialize)]
struct FaceRecord<'a> {
    id: usize,
    dim: isize,
    #[serde(skip_serializing_if = "Option::is_none")]
    diagonals: Option<Vec<[u32; 2]>>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    interior: bool,
    label: &'a MonomialLabel,
}

impl Serialize for LabeledComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let faces: Vec<FaceRecord<'_>> = self
            .faces
            .iter()
            .map(|f| FaceRecord {
                id: f.id,
                dim: f.dim,
                diagonals: f.dissection().map(|d| d.pairs()),
                interior: f.is_interior(),
                label: &f.label,
            })
            .collect();
        let covers: Vec<[usize; 2]> = self.covers.iter().map(|&(a, b)| [a, b]).collect();
        let mut st = s.serialize_struct("LabeledComplex", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("faces", &faces)?;
        st.serialize_field("covers", &covers)?;
        st.end()
    }
}
