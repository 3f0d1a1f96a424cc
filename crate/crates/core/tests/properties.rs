use proptest::prelude::*;

use assoc_core::betti::{betti_table, Method};
use assoc_core::complex::{build, restrict, MonomialLabel};
use assoc_core::homology::{reduced_homology_in, CellComplex, SimplicialComplex, SparseMatrix};
use assoc_core::polygon::{all_diagonals, crosses, Diagonal, Dissection};
use assoc_core::tableaux::{conjugate, enumerate_syt, hook_count, Shape};
use assoc_core::{Gf2, Rational};

/// Chord intersection with vertices placed on the unit circle.
fn crosses_geometric(n: usize, x: Diagonal, y: Diagonal) -> bool {
    let p = |v: u32| {
        let t = 2.0 * std::f64::consts::PI * f64::from(v) / n as f64;
        (t.cos(), t.sin())
    };
    let orient = |a: (f64, f64), b: (f64, f64), c: (f64, f64)| (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
    if x.touches(y.a()) || x.touches(y.b()) {
        return false;
    }
    let (a, b, c, d) = (p(x.a()), p(x.b()), p(y.a()), p(y.b()));
    (orient(a, b, c) > 0.0) != (orient(a, b, d) > 0.0) && (orient(c, d, a) > 0.0) != (orient(c, d, b) > 0.0)
}

fn diagonal(n: usize) -> impl Strategy<Value = Diagonal> {
    let all = all_diagonals(n).unwrap();
    (0..all.len()).prop_map(move |i| all[i])
}

fn partition() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=5, 0..=5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

/// Rank by dense elimination over GF(2) on bit rows.
fn gf2_rank_dense(rows: &[Vec<bool>]) -> usize {
    let mut rows: Vec<u64> = rows
        .iter()
        .map(|r| r.iter().enumerate().fold(0, |m, (i, &b)| m | (u64::from(b) << i)))
        .collect();
    let mut rank = 0;
    for bit in 0..64 {
        if let Some(p) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) {
            rows.swap(rank, p);
            for i in 0..rows.len() {
                if i != rank && rows[i] >> bit & 1 == 1 {
                    rows[i] ^= rows[rank];
                }
            }
            rank += 1;
        }
    }
    rank
}

proptest! {
    #[test]
    fn crossing_is_symmetric_and_geometric((n, x, y) in (4usize..=20).prop_flat_map(|n| (Just(n), diagonal(n), diagonal(n)))) {
        prop_assert_eq!(crosses(x, y), crosses(y, x));
        prop_assert_eq!(crosses(x, y), crosses_geometric(n, x, y));
        prop_assert!(!crosses(x, x));
    }

    #[test]
    fn dissection_accepts_exactly_noncrossing_sets((n, picks) in (4usize..=10).prop_flat_map(|n| (Just(n), prop::collection::btree_set(diagonal(n), 0..5)))) {
        let ds: Vec<Diagonal> = picks.into_iter().collect();
        let ok = ds.iter().enumerate().all(|(i, &x)| ds[i + 1..].iter().all(|&y| !crosses(x, y)));
        prop_assert_eq!(Dissection::new(n, ds).is_ok(), ok);
    }

    #[test]
    fn gf2_rank_matches_dense(rows in prop::collection::vec(prop::collection::vec(any::<bool>(), 7), 0..9)) {
        let dense: Vec<Vec<Gf2>> = rows.iter().map(|r| r.iter().map(|&b| Gf2(b)).collect()).collect();
        let m = if dense.is_empty() { SparseMatrix::zeros(0, 7) } else { SparseMatrix::from_dense(&dense) };
        prop_assert_eq!(m.rank(), gf2_rank_dense(&rows));
    }

    #[test]
    fn rational_rank_is_transpose_invariant(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6)) {
        let q = |x: i64| Rational::from_integer(x.into());
        let dense: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let transposed: Vec<Vec<Rational>> = (0..5).map(|j| rows.iter().map(|r| q(r[j])).collect()).collect();
        let a = SparseMatrix::from_dense(&dense);
        prop_assert_eq!(a.rank(), SparseMatrix::from_dense(&transposed).rank());
        prop_assert_eq!(a.rank() + a.nullity(), 5);
    }

    #[test]
    fn simplicial_boundary_squares_to_zero(facets in prop::collection::vec(prop::collection::btree_set(1u32..=7, 1..=4), 1..6)) {
        let k = SimplicialComplex::from_facets(facets.into_iter().map(|f| f.into_iter().collect::<Vec<_>>()));
        let cells = CellComplex::from_simplicial(&k);
        prop_assert!(cells.chain_complex::<Gf2>().is_ok());
        prop_assert!(cells.chain_complex::<Rational>().is_ok());
        // Euler characteristic agrees with the homology over both fields
        let euler: i64 = k.simplices().iter().map(|s| if s.len() % 2 == 1 { 1 } else { -1 }).sum::<i64>();
        for h in [reduced_homology_in::<Gf2>(&cells).unwrap(), reduced_homology_in::<Rational>(&cells).unwrap()] {
            let chi: i64 = h.betti.iter().enumerate().map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
            prop_assert_eq!(chi - h.empty_class as i64, euler);
        }
    }

    #[test]
    fn restrictions_are_chain_complexes_with_monotone_labels((n, mask) in (4usize..=7).prop_flat_map(|n| (Just(n), 0u32..(1 << n)))) {
        let sub = restrict(&build(n).unwrap(), MonomialLabel::from_mask(mask)).unwrap();
        prop_assert!(CellComplex::from_labeled(&sub).unwrap().chain_complex::<Rational>().is_ok());
        for &(f, g) in sub.covers() {
            prop_assert!(sub.face(f).label.divides(&sub.face(g).label));
            prop_assert!(sub.face(g).label.divides(&MonomialLabel::from_mask(mask)));
        }
    }

    #[test]
    fn betti_numbers_are_palindromic(n in 4usize..=30) {
        let t = betti_table(n, Method::Closed).unwrap();
        prop_assert!(t.is_palindromic());
        for d in 0..=n - 2 {
            prop_assert_eq!(t.total(d), t.total(n - 2 - d));
        }
    }

    #[test]
    fn conjugation_preserves_hook_count(parts in partition()) {
        let s = Shape::new(parts).unwrap();
        let c = conjugate(&s);
        prop_assert_eq!(conjugate(&c), s.clone());
        prop_assert_eq!(hook_count(&c), hook_count(&s));
        if s.cells() <= 12 {
            prop_assert_eq!(enumerate_syt(&s).unwrap().len() as u128, hook_count(&s));
        }
    }
}
