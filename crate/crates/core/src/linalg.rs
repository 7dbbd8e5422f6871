//! Sparse exact linear algebra: vectors, column-major matrices, echelon
//! forms with optional preimage tracking, kernels and subspaces.
//!
//! Every routine here is deterministic: pivots are always the smallest
//! surviving index, and columns are processed in index order.

use std::collections::{BTreeMap, HashMap};

use crate::scalar::{Field, Scalar};

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SVec {
    entries: Vec<(usize, Scalar)>,
}

impl SVec {
    pub fn zero() -> Self {
        SVec { entries: Vec::new() }
    }

    pub fn unit(i: usize, field: Field) -> Self {
        SVec { entries: vec![(i, field.one())] }
    }

    /// Builds a vector from entries in any order, summing duplicates.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc = Accumulator::new();
        for (i, c) in entries {
            acc.add(i, &c);
        }
        acc.finish()
    }

    pub(crate) fn from_sorted(entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, c)| !c.is_zero()));
        SVec { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries.binary_search_by_key(&i, |e| e.0).ok().map(|k| &self.entries[k].1)
    }

    pub fn lead(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn last(&self) -> Option<(usize, &Scalar)> {
        self.entries.last().map(|(i, c)| (*i, c))
    }

    pub fn scaled(&self, c: &Scalar) -> SVec {
        if c.is_zero() {
            return SVec::zero();
        }
        SVec { entries: self.entries.iter().map(|(i, a)| (*i, a.mul(c))).collect() }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Scalar, other: &SVec) -> SVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, ca)), Some((ib, cb))) => {
                    if ia < ib {
                        out.push((*ia, ca.clone()));
                        a.next();
                    } else if ib < ia {
                        out.push((*ib, cb.mul(c)));
                        b.next();
                    } else {
                        let s = ca.add(&cb.mul(c));
                        if !s.is_zero() {
                            out.push((*ia, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, ca)), None) => {
                    out.push((*ia, ca.clone()));
                    a.next();
                }
                (None, Some((ib, cb))) => {
                    out.push((*ib, cb.mul(c)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SVec { entries: out }
    }

    pub fn add(&self, other: &SVec, field: Field) -> SVec {
        self.add_scaled(&field.one(), other)
    }

    pub fn sub(&self, other: &SVec, field: Field) -> SVec {
        self.add_scaled(&field.from_i64(-1), other)
    }

    /// Re-indexes every entry by `offset`.
    pub fn shifted(&self, offset: usize) -> SVec {
        SVec { entries: self.entries.iter().map(|(i, c)| (i + offset, c.clone())).collect() }
    }

    /// Entries with index in `[start, start + len)`, re-indexed from zero.
    pub fn block(&self, start: usize, len: usize) -> SVec {
        SVec {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= start && *i < start + len)
                .map(|(i, c)| (i - start, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize, field: Field) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }
}

/// Ordered accumulator for building sparse linear combinations.
#[derive(Default)]
pub struct Accumulator {
    map: BTreeMap<usize, Scalar>,
}

impl Accumulator {
    pub fn new() -> Self {
        Accumulator { map: BTreeMap::new() }
    }

    pub fn add(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.map.entry(i) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, v: &SVec) {
        if c.is_zero() {
            return;
        }
        for (i, a) in v.iter() {
            self.add(i, &a.mul(c));
        }
    }

    pub fn add_vec(&mut self, v: &SVec) {
        for (i, a) in v.iter() {
            self.add(i, a);
        }
    }

    fn pop_first(&mut self) -> Option<(usize, Scalar)> {
        self.map.pop_first()
    }

    pub fn finish(self) -> SVec {
        SVec { entries: self.map.into_iter().collect() }
    }
}

/// Column-major sparse matrix: `cols[j]` is the image of the `j`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SMat {
    nrows: usize,
    cols: Vec<SVec>,
}

impl SMat {
    pub fn from_cols(nrows: usize, cols: Vec<SVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.last().is_none_or(|(i, _)| i < nrows)));
        SMat { nrows, cols }
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SMat { nrows, cols: vec![SVec::zero(); ncols] }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        SMat { nrows: n, cols: (0..n).map(|i| SVec::unit(i, field)).collect() }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn cols(&self) -> &[SVec] {
        &self.cols
    }

    pub fn col(&self, j: usize) -> &SVec {
        &self.cols[j]
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SVec::is_zero)
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        match v.nnz() {
            0 => SVec::zero(),
            1 => {
                let (j, c) = v.lead().unwrap();
                self.cols[j].scaled(c)
            }
            _ => {
                let mut acc = Accumulator::new();
                for (j, c) in v.iter() {
                    acc.add_scaled(c, &self.cols[j]);
                }
                acc.finish()
            }
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SMat) -> SMat {
        assert_eq!(self.ncols(), other.nrows, "composition dimension mismatch");
        SMat { nrows: self.nrows, cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn transpose(&self) -> SMat {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.iter() {
                rows[i].push((j, c.clone()));
            }
        }
        SMat { nrows: self.cols.len(), cols: rows.into_iter().map(SVec::from_sorted).collect() }
    }

    pub fn rank(&self, field: Field) -> usize {
        let mut ech = Echelon::new(field, false);
        for c in &self.cols {
            ech.insert(c, None);
        }
        ech.rank()
    }

    pub fn add(&self, other: &SMat, field: Field) -> SMat {
        assert_eq!(self.nrows, other.nrows);
        assert_eq!(self.ncols(), other.ncols());
        SMat {
            nrows: self.nrows,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.add(b, field)).collect(),
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &SMat) -> SMat {
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().map(|c| c.shifted(self.nrows)));
        SMat { nrows: self.nrows + other.nrows, cols }
    }

    pub fn to_dense(&self, field: Field) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![field.zero(); self.ncols()]; self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.iter() {
                out[i][j] = c.clone();
            }
        }
        out
    }
}

/// Outcome of reducing a vector against an [`Echelon`].
#[derive(Clone, Debug)]
pub struct Reduction {
    pub remainder: SVec,
    /// `(row index, multiplier)` pairs: `v = remainder + Σ multiplier * row`.
    pub coeffs: Vec<(usize, Scalar)>,
}

/// Semi-echelon basis: each row has leading coefficient one at a distinct
/// leading index, and every other entry of a row lies strictly after it.
///
/// With tracking enabled each row remembers a companion vector (typically
/// its preimage under a linear map) which is carried through every row
/// operation.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    rows: Vec<SVec>,
    lead: HashMap<usize, usize>,
    track: Option<Vec<SVec>>,
}

impl Echelon {
    pub fn new(field: Field, tracking: bool) -> Self {
        Echelon { field, rows: Vec::new(), lead: HashMap::new(), track: tracking.then(Vec::new) }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SVec] {
        &self.rows
    }

    pub fn tracked(&self, row: usize) -> Option<&SVec> {
        self.track.as_ref().map(|t| &t[row])
    }

    pub fn is_lead(&self, i: usize) -> bool {
        self.lead.contains_key(&i)
    }

    pub fn lead_row(&self, i: usize) -> Option<usize> {
        self.lead.get(&i).copied()
    }

    pub fn reduce(&self, v: &SVec) -> Reduction {
        let mut acc = Accumulator::new();
        acc.add_vec(v);
        let mut remainder = Vec::new();
        let mut coeffs = Vec::new();
        while let Some((i, c)) = acc.pop_first() {
            match self.lead.get(&i) {
                Some(&r) => {
                    let neg = c.neg();
                    for (j, a) in self.rows[r].iter().skip(1) {
                        acc.add(j, &a.mul(&neg));
                    }
                    coeffs.push((r, c));
                }
                None => remainder.push((i, c)),
            }
        }
        Reduction { remainder: SVec::from_sorted(remainder), coeffs }
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).remainder.is_zero()
    }

    /// Combination of tracked vectors matching `coeffs`.
    pub fn combine_tracked(&self, coeffs: &[(usize, Scalar)]) -> SVec {
        let track = self.track.as_ref().expect("tracking disabled");
        let mut acc = Accumulator::new();
        for (r, c) in coeffs {
            acc.add_scaled(c, &track[*r]);
        }
        acc.finish()
    }

    /// Adds `v` if independent; returns the new row index.
    pub fn insert(&mut self, v: &SVec, tag: Option<SVec>) -> Option<usize> {
        let red = self.reduce(v);
        self.insert_reduced(red, tag)
    }

    fn insert_reduced(&mut self, red: Reduction, tag: Option<SVec>) -> Option<usize> {
        let (lead_idx, lead_c) = red.remainder.lead()?;
        let inv = lead_c.inv();
        let row = red.remainder.scaled(&inv);
        let r = self.rows.len();
        if let Some(track) = self.track.as_mut() {
            let tag = tag.expect("tracking echelon needs a tag");
            let mut acc = Accumulator::new();
            acc.add_vec(&tag);
            let neg_one = self.field.from_i64(-1);
            for (rr, c) in &red.coeffs {
                acc.add_scaled(&c.mul(&neg_one), &track[*rr]);
            }
            track.push(acc.finish().scaled(&inv));
        }
        self.lead.insert(lead_idx, r);
        self.rows.push(row);
        Some(r)
    }
}

/// Kernel and image of the linear map whose columns are `cols`.
///
/// Kernel vectors come out "marked": the `t`-th one has coefficient one at
/// a dependent column index where every other kernel vector vanishes, and
/// that index is its last entry. The returned echelon spans the image and
/// tracks a preimage for each of its rows.
pub fn kernel_and_image(cols: &[SVec], field: Field) -> (Vec<SVec>, Echelon) {
    let mut ech = Echelon::new(field, true);
    let mut kernel = Vec::new();
    for (j, col) in cols.iter().enumerate() {
        let red = ech.reduce(col);
        if red.remainder.is_zero() {
            let mut acc = Accumulator::new();
            acc.add(j, &field.one());
            let neg_one = field.from_i64(-1);
            for (r, c) in &red.coeffs {
                acc.add_scaled(&c.mul(&neg_one), ech.tracked(*r).unwrap());
            }
            kernel.push(acc.finish());
        } else {
            ech.insert_reduced(red, Some(SVec::unit(j, field)));
        }
    }
    (kernel, ech)
}

/// A subspace of `k^ambient` with a fixed basis and a way to find
/// coordinates of member vectors.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SVec>,
    locator: Locator,
}

#[derive(Clone, Debug)]
enum Locator {
    Echelon(Echelon),
    /// `marker[t]` is an index where basis vector `t` is one and all others vanish.
    Marked(HashMap<usize, usize>),
}

impl Subspace {
    /// The span of `vectors`; the basis is an echelon form of them.
    pub fn span(ambient: usize, field: Field, vectors: impl IntoIterator<Item = SVec>) -> Self {
        let mut ech = Echelon::new(field, false);
        for v in vectors {
            ech.insert(&v, None);
        }
        Subspace { ambient, basis: ech.rows.clone(), locator: Locator::Echelon(ech) }
    }

    /// Wraps an echelon whose rows become the basis.
    pub fn from_echelon(ambient: usize, ech: Echelon) -> Self {
        Subspace { ambient, basis: ech.rows.clone(), locator: Locator::Echelon(ech) }
    }

    /// Kernel of the map with columns `cols` (a map out of `k^cols.len()`).
    pub fn kernel(cols: &[SVec], field: Field) -> Self {
        let (kernel, _) = kernel_and_image(cols, field);
        Self::from_marked(cols.len(), kernel)
    }

    /// Basis vectors that are marked in the sense of [`kernel_and_image`].
    pub fn from_marked(ambient: usize, basis: Vec<SVec>) -> Self {
        let markers = basis
            .iter()
            .enumerate()
            .map(|(t, v)| {
                let (i, c) = v.last().expect("nonzero basis vector");
                debug_assert!(c.is_one());
                (i, t)
            })
            .collect();
        Subspace { ambient, basis, locator: Locator::Marked(markers) }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SVec] {
        &self.basis
    }

    /// Coordinates of `v` (assumed to lie in the subspace) in the basis.
    pub fn coords(&self, v: &SVec) -> SVec {
        match &self.locator {
            Locator::Marked(markers) => {
                let mut out: Vec<(usize, Scalar)> =
                    v.iter().filter_map(|(i, c)| markers.get(&i).map(|t| (*t, c.clone()))).collect();
                out.sort_by_key(|e| e.0);
                SVec::from_sorted(out)
            }
            Locator::Echelon(ech) => {
                let red = ech.reduce(v);
                debug_assert!(red.remainder.is_zero(), "vector outside subspace");
                SVec::from_entries(red.coeffs)
            }
        }
    }

    /// Membership test (exact for echelon-backed subspaces).
    pub fn contains(&self, v: &SVec) -> bool {
        match &self.locator {
            Locator::Echelon(ech) => ech.contains(v),
            Locator::Marked(_) => self.embed(&self.coords(v)) == *v,
        }
    }

    /// Embeds coordinates back into the ambient space.
    pub fn embed(&self, coords: &SVec) -> SVec {
        let mut acc = Accumulator::new();
        for (t, a) in coords.iter() {
            acc.add_scaled(a, &self.basis[t]);
        }
        acc.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    fn v(entries: &[(usize, i64)]) -> SVec {
        SVec::from_entries(entries.iter().map(|(i, c)| (*i, q(*c))))
    }

    #[test]
    fn kernel_vectors_are_marked_and_annihilated() {
        let f = Field::Rational;
        // columns of a 2x4 map
        let cols = vec![v(&[(0, 1)]), v(&[(0, 2)]), v(&[(1, 1)]), v(&[(0, 1), (1, 1)])];
        let (ker, im) = kernel_and_image(&cols, f);
        assert_eq!(ker.len(), 2);
        assert_eq!(im.rank(), 2);
        let m = SMat::from_cols(2, cols);
        for k in &ker {
            assert!(m.apply(k).is_zero());
            assert!(k.last().unwrap().1.is_one());
        }
        let sub = Subspace::from_marked(4, ker.clone());
        let w = ker[0].scaled(&q(3)).add_scaled(&q(-2), &ker[1]);
        assert_eq!(sub.coords(&w), v(&[(0, 3), (1, -2)]));
    }

    #[test]
    fn tracked_preimages_map_onto_rows() {
        let f = Field::Rational;
        let cols = vec![v(&[(0, 1), (2, 1)]), v(&[(1, 3)]), v(&[(0, 1), (1, 3), (2, 1)])];
        let (_, im) = kernel_and_image(&cols, f);
        let m = SMat::from_cols(3, cols);
        for r in 0..im.rank() {
            assert_eq!(m.apply(im.tracked(r).unwrap()), im.rows()[r]);
        }
    }

    #[test]
    fn transpose_and_rank() {
        let f = Field::Rational;
        let m = SMat::from_cols(3, vec![v(&[(0, 1), (1, 2)]), v(&[(2, 5)])]);
        let t = m.transpose();
        assert_eq!(t.nrows(), 2);
        assert_eq!(t.transpose(), m);
        assert_eq!(m.rank(f), 2);
        assert_eq!(SMat::zero(3, 3).rank(f), 0);
    }

    #[test]
    fn echelon_coordinates() {
        let f = Field::Rational;
        let s = Subspace::span(3, f, vec![v(&[(0, 2), (1, 2)]), v(&[(1, 1), (2, 1)])]);
        assert_eq!(s.dim(), 2);
        let w = v(&[(0, 1), (1, 2), (2, 1)]);
        assert!(s.contains(&w));
        assert_eq!(s.embed(&s.coords(&w)), w);
        assert!(!s.contains(&v(&[(2, 1)])));
    }
}
