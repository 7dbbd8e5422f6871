//! Shared helpers for integration tests: named rings, random modules and a
//! small dense rational linear algebra kept independent of the library's
//! sparse routines.

#![allow(dead_code)]

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use reflexa::random::{random_modules, RandomShape};
use reflexa::{ArtinianAlgebra, RealizedModule, RingSpec, Scalar};

pub type Q = BigRational;

/// Rings exercised across the suite.
pub const RINGS: &[&str] = &["lam", "ex56", "gor415", "kxn:3", "kxn:4", "kxn:5", "power:2,3", "power:3,2"];

pub fn ring(id: &str) -> Arc<ArtinianAlgebra> {
    RingSpec::named(id).unwrap().build().unwrap()
}

pub fn randoms(alg: &Arc<ArtinianAlgebra>, seed: u64, count: usize) -> Vec<Arc<RealizedModule>> {
    random_modules(alg, seed, count, &RandomShape::default())
}

pub fn q(s: &Scalar) -> Q {
    s.as_rational().expect("rational scalars").clone()
}

/// Dense columns of a sparse matrix.
pub fn dense_cols(m: &reflexa::linalg::SMat) -> Vec<Vec<Q>> {
    m.cols()
        .iter()
        .map(|c| {
            let mut v = vec![Q::zero(); m.nrows()];
            for (i, x) in c.iter() {
                v[i] = q(x);
            }
            v
        })
        .collect()
}

/// Row-reduces in place and returns the pivot columns.
fn rref(rows: &mut [Vec<Q>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Q::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row).take(ncols) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank of the matrix with the given columns.
pub fn rank_of_cols(cols: &[Vec<Q>]) -> usize {
    if cols.is_empty() {
        return 0;
    }
    // rank of the transpose: columns become rows
    let mut rows: Vec<Vec<Q>> = cols.to_vec();
    let n = rows[0].len();
    rref(&mut rows, n).len()
}

/// Basis of `{v : Σ v_j col_j = 0}`.
pub fn nullspace(cols: &[Vec<Q>], nrows: usize) -> Vec<Vec<Q>> {
    let ncols = cols.len();
    let mut rows: Vec<Vec<Q>> = (0..nrows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let pivots = rref(&mut rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn mat_vec(cols: &[Vec<Q>], v: &[Q], nrows: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); nrows];
    for (c, x) in cols.iter().zip(v) {
        if x.is_zero() {
            continue;
        }
        for i in 0..nrows {
            out[i] = &out[i] + &c[i] * x;
        }
    }
    out
}
