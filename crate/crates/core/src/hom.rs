//! Hom modules, duals, the natural map into the bidual, the Auslander
//! transpose and iterated dual towers.
//!
//! A homomorphism `f: M → N` is stored by its values on the minimal
//! generators of `M`, i.e. as a vector of `N^μ(M)` with block `j` equal to
//! `f(g_j)`. The admissible vectors are those killed by every minimal
//! relation of `M`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Accumulator, SMat, SVec, Subspace};
use crate::module::{free, ModuleMap, Presentation, RealizedModule};
use crate::scalar::rational_string;

/// `Hom_R(M, N)` with explicit functional coordinates.
#[derive(Debug)]
pub struct HomSpace {
    source: Arc<RealizedModule>,
    target: Arc<RealizedModule>,
    functionals: Subspace,
    module: Arc<RealizedModule>,
}

impl HomSpace {
    pub fn source(&self) -> &Arc<RealizedModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<RealizedModule> {
        &self.target
    }

    /// The admissible value vectors, a subspace of `N^μ(M)`.
    pub fn functionals(&self) -> &Subspace {
        &self.functionals
    }

    /// `Hom(M, N)` as an `R`-module; its basis is `functionals().basis()`.
    pub fn module(&self) -> &Arc<RealizedModule> {
        &self.module
    }

    pub fn length(&self) -> usize {
        self.module.length()
    }

    /// The value vector in `N^μ` of the element with coordinates `f`.
    pub fn values(&self, f: &SVec) -> SVec {
        self.functionals.embed(f)
    }

    /// Coordinates of the homomorphism with values `v` on the generators.
    pub fn from_values(&self, v: &SVec) -> SVec {
        self.functionals.coords(v)
    }

    /// `f(m)` for `f` in coordinates of this space and `m ∈ M`.
    pub fn eval(&self, f: &SVec, m: &SVec) -> SVec {
        self.eval_values(&self.values(f), m)
    }

    fn eval_values(&self, values: &SVec, m: &SVec) -> SVec {
        let cover = self.source.cover();
        let len = self.source.algebra().length();
        let dim_n = self.target.length();
        let lifted = cover.lift(m);
        let mut acc = Accumulator::new();
        for j in 0..cover.mu() {
            let r = lifted.block(j * len, len);
            if r.is_zero() {
                continue;
            }
            acc.add_vec(&self.target.act(&r, &values.block(j * dim_n, dim_n)));
        }
        acc.finish()
    }
}

/// `Hom_R(M, N)`.
pub fn hom_module(m: &Arc<RealizedModule>, n: &Arc<RealizedModule>) -> Result<Arc<HomSpace>> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(Arc::new(compute_hom(m, n)))
}

fn compute_hom(m: &Arc<RealizedModule>, n: &Arc<RealizedModule>) -> HomSpace {
    let field = m.field();
    let len = m.algebra().length();
    let mu = m.mu();
    let dim_n = n.length();
    let relations = m.relations();

    // column (j, b): the images of e_b placed in generator slot j, pushed
    // through every relation
    let orbits: Vec<Vec<SVec>> = (0..dim_n).map(|b| n.orbit(&SVec::unit(b, field))).collect();
    let mut cols = Vec::with_capacity(mu * dim_n);
    for j in 0..mu {
        let comps: Vec<SVec> = relations.iter().map(|rel| rel.block(j * len, len)).collect();
        for orbit in &orbits {
            let mut acc = Accumulator::new();
            for (t, r) in comps.iter().enumerate() {
                for (a, c) in r.iter() {
                    acc.add_scaled(c, &orbit[a].shifted(t * dim_n));
                }
            }
            cols.push(acc.finish());
        }
    }
    let functionals = Subspace::kernel(&cols, field);
    let actions = n
        .actions()
        .iter()
        .map(|a| {
            let cols = functionals
                .basis()
                .iter()
                .map(|f| functionals.coords(&block_apply(a, f, mu, dim_n)))
                .collect();
            SMat::from_cols(functionals.dim(), cols)
        })
        .collect();
    let module = RealizedModule::from_parts(m.algebra().clone(), functionals.dim(), actions, None);
    HomSpace { source: m.clone(), target: n.clone(), functionals, module }
}

fn block_apply(a: &SMat, v: &SVec, blocks: usize, dim: usize) -> SVec {
    let mut acc = Accumulator::new();
    for j in 0..blocks {
        let b = v.block(j * dim, dim);
        if !b.is_zero() {
            acc.add_vec(&a.apply(&b).shifted(j * dim));
        }
    }
    acc.finish()
}

/// `M* = Hom_R(M, R)`, computed once per module so that iterated duals are
/// the same objects.
pub fn dual(m: &Arc<RealizedModule>) -> Arc<HomSpace> {
    m.dual
        .get_or_init(|| Arc::new(compute_hom(m, &free(m.algebra(), 1))))
        .clone()
}

/// `φ_M: M → M**`, `m ↦ (f ↦ f(m))`.
pub fn natural_map(m: &Arc<RealizedModule>) -> ModuleMap {
    let d1 = dual(m);
    let d2 = dual(d1.module());
    let field = m.field();
    let len = m.algebra().length();
    let gens: Vec<SVec> = d1.module().cover().gens().iter().map(|g| d1.values(g)).collect();
    let cols = (0..m.length())
        .map(|b| {
            let e = SVec::unit(b, field);
            let mut acc = Accumulator::new();
            for (u, g) in gens.iter().enumerate() {
                acc.add_vec(&d1.eval_values(g, &e).shifted(u * len));
            }
            d2.from_values(&acc.finish())
        })
        .collect();
    ModuleMap::new_unchecked(m.clone(), d2.module().clone(), SMat::from_cols(d2.length(), cols))
}

/// `f*: N* → M*`, `ψ ↦ ψ ∘ f`.
pub fn dual_map(f: &ModuleMap) -> ModuleMap {
    let dm = dual(f.source());
    let dn = dual(f.target());
    let len = f.source().algebra().length();
    let gens = f.source().cover().gens();
    let cols = dn
        .functionals()
        .basis()
        .iter()
        .map(|psi| {
            let mut acc = Accumulator::new();
            for (j, g) in gens.iter().enumerate() {
                acc.add_vec(&dn.eval_values(psi, &f.apply(g)).shifted(j * len));
            }
            dm.from_values(&acc.finish())
        })
        .collect();
    ModuleMap::new_unchecked(dn.module().clone(), dm.module().clone(), SMat::from_cols(dm.length(), cols))
}

/// `M*`, `M**` and `φ_M`.
pub struct DualTriple {
    pub dual: Arc<HomSpace>,
    pub bidual: Arc<HomSpace>,
    pub nat: ModuleMap,
}

pub fn dual_triple(m: &Arc<RealizedModule>) -> DualTriple {
    let d1 = dual(m);
    let d2 = dual(d1.module());
    DualTriple { dual: d1, bidual: d2, nat: natural_map(m) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReflexivityFlags {
    pub torsionless: bool,
    pub weakly_reflexive: bool,
    pub reflexive: bool,
    pub phi_rank: usize,
    pub length: usize,
    pub bidual_length: usize,
}

pub fn reflexivity_flags(m: &Arc<RealizedModule>) -> ReflexivityFlags {
    let nat = natural_map(m);
    let rank = nat.rank();
    let (length, bidual_length) = (m.length(), nat.target().length());
    ReflexivityFlags {
        torsionless: rank == length,
        weakly_reflexive: rank == bidual_length,
        reflexive: rank == length && rank == bidual_length,
        phi_rank: rank,
        length,
        bidual_length,
    }
}

/// `(φ_M)* ∘ φ_{M*}`, which is the identity of `M*`.
pub fn third_dual_composite(m: &Arc<RealizedModule>) -> ModuleMap {
    let phi_m = natural_map(m);
    let phi_dual = natural_map(dual(m).module());
    dual_map(&phi_m).compose(&phi_dual).expect("M*** is shared")
}

/// The transposed minimal presentation of `M`: `β₁(M)` rows, `μ(M)` columns.
pub fn transpose_presentation(m: &Arc<RealizedModule>) -> Presentation {
    let len = m.algebra().length();
    let relations = m.relations();
    let cols = (0..m.mu())
        .map(|j| {
            let mut acc = Accumulator::new();
            for (t, rel) in relations.iter().enumerate() {
                acc.add_vec(&rel.block(j * len, len).shifted(t * len));
            }
            acc.finish()
        })
        .collect();
    Presentation::from_columns(m.algebra().clone(), relations.len(), cols)
}

/// The Auslander transpose `D(M) = coker(A^T)` for a minimal presentation `A`.
pub fn aus_transpose(m: &Arc<RealizedModule>) -> Arc<RealizedModule> {
    transpose_presentation(m).realize()
}

/// Lengths of iterated duals `M, M*, M**, …` with ratios `ℓ(M^{i*}) / type(R)^i`.
#[derive(Clone, Debug, Serialize)]
pub struct Tower {
    pub lengths: Vec<usize>,
    pub ratios: Vec<String>,
    #[serde(skip)]
    pub exact_ratios: Vec<BigRational>,
    pub mu: Vec<usize>,
    pub ring_type: usize,
    pub requested_depth: usize,
    pub budget: usize,
    pub partial: bool,
    pub lengths_nondecreasing: bool,
    pub ratios_nonincreasing: bool,
    #[serde(skip)]
    pub modules: Vec<Arc<RealizedModule>>,
}

/// Iterated duals up to `depth`. A step whose Hom computation would need
/// more than `budget` unknowns is not attempted and the tower is marked
/// partial.
pub fn dual_tower(m: &Arc<RealizedModule>, depth: usize, budget: usize) -> Tower {
    let ring_type = m.algebra().invariants().socle_dim;
    let len = m.algebra().length();
    let mut modules = vec![m.clone()];
    let mut partial = false;
    for _ in 0..depth {
        let cur = modules.last().unwrap();
        if cur.mu() * len > budget {
            partial = true;
            break;
        }
        let next = dual(cur).module().clone();
        modules.push(next);
    }
    let lengths: Vec<usize> = modules.iter().map(|x| x.length()).collect();
    let mu = modules.iter().map(|x| x.mu()).collect();
    let ty = BigInt::from(ring_type);
    let mut denom = BigInt::from(1);
    let mut exact_ratios = Vec::with_capacity(lengths.len());
    for &l in &lengths {
        exact_ratios.push(BigRational::new(BigInt::from(l), denom.clone()));
        denom *= &ty;
    }
    Tower {
        ratios: exact_ratios.iter().map(rational_string).collect(),
        lengths_nondecreasing: lengths.windows(2).all(|w| w[0] <= w[1]),
        ratios_nonincreasing: exact_ratios.windows(2).all(|w| w[0] >= w[1]),
        lengths,
        exact_ratios,
        mu,
        ring_type,
        requested_depth: depth,
        budget,
        partial,
        modules,
    }
}
