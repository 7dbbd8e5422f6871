//! Minimal free resolutions, Betti numbers and `Ext^i(M, R)` lengths.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::ArtinianAlgebra;
use crate::linalg::{SMat, SVec};
use crate::module::{free, RealizedModule};
use crate::scalar::rational_string;

/// An `R`-linear map `R^source → R^target` given by its columns.
#[derive(Clone, Debug)]
pub struct FreeMap {
    algebra: Arc<ArtinianAlgebra>,
    source_rank: usize,
    target_rank: usize,
    columns: Vec<SVec>,
}

impl FreeMap {
    pub fn new(algebra: Arc<ArtinianAlgebra>, target_rank: usize, columns: Vec<SVec>) -> Self {
        FreeMap { algebra, source_rank: columns.len(), target_rank, columns }
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn columns(&self) -> &[SVec] {
        &self.columns
    }

    /// Entry `(i, j)` as an element of `R`.
    pub fn entry(&self, i: usize, j: usize) -> SVec {
        let len = self.algebra.length();
        self.columns[j].block(i * len, len)
    }

    /// The `k`-linear matrix, with column `j·ℓ(R) + a` the image of `m_a e_j`.
    pub fn k_matrix(&self) -> SMat {
        let f = free(&self.algebra, self.target_rank);
        let cols = self.columns.iter().flat_map(|c| f.orbit(c)).collect();
        SMat::from_cols(self.target_rank * self.algebra.length(), cols)
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        self.k_matrix().apply(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeMap) -> FreeMap {
        let k = self.k_matrix();
        FreeMap::new(self.algebra.clone(), self.target_rank, other.columns.iter().map(|c| k.apply(c)).collect())
    }

    /// The transposed matrix, i.e. `Hom(-, R)` of this map.
    pub fn transpose(&self) -> FreeMap {
        let len = self.algebra.length();
        let cols = (0..self.target_rank)
            .map(|i| {
                let mut parts = Vec::new();
                for j in 0..self.source_rank {
                    parts.extend(self.entry(i, j).shifted(j * len).iter().map(|(x, c)| (x, c.clone())));
                }
                SVec::from_entries(parts)
            })
            .collect();
        FreeMap::new(self.algebra.clone(), self.source_rank, cols)
    }

    /// `k`-rank of the induced map on `R^n`.
    pub fn k_rank(&self) -> usize {
        self.k_matrix().rank(self.algebra.field())
    }

    /// Rank of `self ⊗ k`.
    pub fn residue_rank(&self) -> usize {
        let len = self.algebra.length();
        let cols = self
            .columns
            .iter()
            .map(|c| {
                SVec::from_entries((0..self.target_rank).filter_map(|i| c.get(i * len).map(|v| (i, v.clone()))))
            })
            .collect();
        SMat::from_cols(self.target_rank, cols).rank(self.algebra.field())
    }

    /// Every entry lies in `𝔪`.
    pub fn is_minimal(&self) -> bool {
        self.residue_rank() == 0
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SVec::is_zero)
    }
}

/// A (possibly truncated) minimal free resolution
/// `… → R^β₂ → R^β₁ → R^β₀ → M`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub betti: Vec<usize>,
    /// `differentials[i]` is `d_{i+1}: R^β_{i+1} → R^β_i`.
    pub differentials: Vec<FreeMap>,
    /// `syzygies[i]` is `Syz_i(M)`, with `syzygies[0] = M`.
    pub syzygies: Vec<Arc<RealizedModule>>,
    pub requested_steps: usize,
    /// Set when the dimension budget stopped the computation early.
    pub partial: bool,
}

impl Resolution {
    /// Largest `i` with `β_i` known.
    pub fn computed_up_to(&self) -> usize {
        self.betti.len() - 1
    }
}

/// Resolves `M` through `β_steps`. A step needing a free module of
/// `k`-dimension above `budget` is skipped and the result marked partial.
pub fn min_resolution(m: &Arc<RealizedModule>, steps: usize, budget: usize) -> Resolution {
    let len = m.algebra().length();
    let mut betti = vec![m.mu()];
    let mut differentials = Vec::new();
    let mut syzygies = vec![m.clone()];
    let mut partial = false;
    for i in 0..steps {
        let cur = syzygies[i].clone();
        if cur.mu() * len > budget {
            partial = true;
            break;
        }
        let rels = cur.relations();
        betti.push(rels.len());
        differentials.push(FreeMap::new(m.algebra().clone(), betti[i], rels));
        syzygies.push(cur.syzygy());
    }
    Resolution { betti, differentials, syzygies, requested_steps: steps, partial }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtLengths {
    /// `lengths[i] = ℓ(Ext^i(M, R))`.
    pub lengths: Vec<usize>,
    pub betti: Vec<usize>,
    pub requested: usize,
    pub partial: bool,
}

impl ExtLengths {
    pub fn computed_up_to(&self) -> usize {
        self.lengths.len().saturating_sub(1)
    }

    /// First `i` in `range` with `Ext^i ≠ 0`.
    pub fn first_nonzero(&self, from: usize) -> Option<usize> {
        (from..self.lengths.len()).find(|&i| self.lengths[i] != 0)
    }
}

/// `ℓ(Ext^i(M, R))` for `0 ≤ i ≤ bound`, from the dualized resolution.
pub fn ext_lengths(m: &Arc<RealizedModule>, bound: usize, budget: usize) -> ExtLengths {
    let res = min_resolution(m, bound + 1, budget);
    ext_from_resolution(&res, bound)
}

pub fn ext_from_resolution(res: &Resolution, bound: usize) -> ExtLengths {
    let len = res.syzygies[0].algebra().length();
    let dual_ranks: Vec<usize> = res.differentials.iter().map(|d| d.transpose().k_rank()).collect();
    let top = bound.min(res.differentials.len().saturating_sub(1));
    let lengths = if res.differentials.is_empty() {
        Vec::new()
    } else {
        (0..=top)
            .map(|i| {
                let incoming = if i == 0 { 0 } else { dual_ranks[i - 1] };
                res.betti[i] * len - dual_ranks[i] - incoming
            })
            .collect()
    };
    ExtLengths {
        partial: lengths.len() < bound + 1,
        lengths,
        betti: res.betti.clone(),
        requested: bound,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundStep {
    pub i: usize,
    pub lhs: usize,
    pub rhs: i64,
    pub holds: bool,
}

/// `β_{i+1} ≥ c·β_i` checked for every computed `i ≥ from`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub constant: i64,
    pub from: usize,
    pub steps: Vec<BoundStep>,
    pub holds: bool,
}

impl BoundCheck {
    fn evaluate(betti: &[usize], constant: i64, from: usize) -> Self {
        let steps: Vec<BoundStep> = (from..betti.len().saturating_sub(1))
            .map(|i| {
                let rhs = constant * betti[i] as i64;
                BoundStep { i, lhs: betti[i + 1], rhs, holds: betti[i + 1] as i64 >= rhs }
            })
            .collect();
        BoundCheck { constant, from, holds: steps.iter().all(|s| s.holds), steps }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiBoundReport {
    pub betti: Vec<usize>,
    pub free: bool,
    /// Socle bound, `c = dim((0:𝔪) + 𝔪²)/𝔪²` for `i ≥ 1`; only when `𝔪² = 0`.
    pub socle_bound: Option<BoundCheck>,
    /// `c = 2μ(𝔪) − ℓ(R) + h − 1` with `𝔪^{h+1} = 0`, for `i ≥ μ(M)`.
    pub loewy_bound: BoundCheck,
    pub holds: bool,
}

/// `dim((0:𝔪) + 𝔪²)/𝔪²`.
pub fn socle_excess(algebra: &ArtinianAlgebra) -> usize {
    let m2 = algebra.max_ideal_power(2);
    let sum = crate::linalg::Subspace::span(
        algebra.length(),
        algebra.field(),
        m2.basis().iter().chain(algebra.socle().basis()).cloned(),
    );
    sum.dim() - m2.dim()
}

pub fn loewy_constant(algebra: &ArtinianAlgebra) -> i64 {
    let inv = algebra.invariants();
    let h = inv.loewy as i64 - 1;
    2 * inv.mu_m as i64 - inv.length as i64 + h - 1
}

pub fn betti_bound_checks(m: &Arc<RealizedModule>, steps: usize, budget: usize) -> BettiBoundReport {
    let alg = m.algebra();
    let res = min_resolution(m, steps, budget);
    let free = m.is_free();
    let betti = res.betti.clone();
    let (socle_bound, loewy_bound) = if free {
        (None, BoundCheck::evaluate(&[], loewy_constant(alg), m.mu()))
    } else {
        let square_zero = alg.max_ideal_power(2).dim() == 0;
        (
            square_zero.then(|| BoundCheck::evaluate(&betti, socle_excess(alg) as i64, 1)),
            BoundCheck::evaluate(&betti, loewy_constant(alg), m.mu()),
        )
    };
    let holds = loewy_bound.holds && socle_bound.as_ref().is_none_or(|b| b.holds);
    BettiBoundReport { betti, free, socle_bound, loewy_bound, holds }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtFormulaRow {
    pub i: usize,
    pub computed: usize,
    pub closed_form: String,
    pub deviation: String,
    pub agrees: bool,
    /// `ℓ(Ext^i) / ℓ(R)^i`, exact.
    pub ratio: String,
}

/// Computed `ℓ(Ext^i(M, R))` against `(ℓ(R)−1)^{i−2}·β₁(M)·((ℓ(R)−1)²−1)`
/// over rings with `𝔪² = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtFormulaReport {
    pub applicable: bool,
    pub beta1: usize,
    pub rows: Vec<ExtFormulaRow>,
    pub all_agree: bool,
    /// The closed form over `ℓ(R)^i` tends to zero, so no limit equal to
    /// `β₁` is claimed.
    pub ratio_trend: String,
}

pub fn ext_formula_report(m: &Arc<RealizedModule>, from: usize, to: usize, budget: usize) -> ExtFormulaReport {
    let alg = m.algebra();
    let applicable = alg.max_ideal_power(2).dim() == 0 && alg.length() > 1;
    let ext = ext_lengths(m, to, budget);
    let beta1 = ext.betti.get(1).copied().unwrap_or(0);
    let len = BigInt::from(alg.length());
    let e: BigInt = &len - 1;
    let mut rows = Vec::new();
    let mut ratios = Vec::new();
    if applicable {
        for i in from.max(2)..=ext.computed_up_to() {
            let closed: BigInt = e.pow(i as u32 - 2) * BigInt::from(beta1) * (&e * &e - 1u32);
            let computed = BigInt::from(ext.lengths[i]);
            let ratio = BigRational::new(computed.clone(), len.pow(i as u32));
            ratios.push(ratio.clone());
            rows.push(ExtFormulaRow {
                i,
                computed: ext.lengths[i],
                closed_form: closed.to_string(),
                deviation: (&computed - &closed).to_string(),
                agrees: computed == closed,
                ratio: rational_string(&ratio),
            });
        }
    }
    let decreasing = ratios.windows(2).all(|w| w[1] < w[0]);
    let ratio_trend = if !applicable {
        "not applicable".to_string()
    } else if rows.iter().all(|r| r.computed == 0) {
        "identically 0".to_string()
    } else if rows.len() >= 2 && decreasing {
        "strictly decreasing toward 0".to_string()
    } else {
        "not monotone on the computed range".to_string()
    };
    ExtFormulaReport { applicable, beta1, all_agree: rows.iter().all(|r| r.agrees), rows, ratio_trend }
}
