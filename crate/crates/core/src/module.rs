//! Finitely generated modules over an [`ArtinianAlgebra`], realized as
//! finite-dimensional vector spaces with commuting variable actions.

use std::sync::{Arc, OnceLock};

use crate::algebra::ArtinianAlgebra;
use crate::error::{Error, Result};
use crate::hom::HomSpace;
use crate::linalg::{kernel_and_image, Accumulator, Echelon, SMat, SVec, Subspace};
use crate::poly::Poly;
use crate::scalar::Field;

/// A module `M` given by `dim M` and one `dim × dim` matrix per variable.
#[derive(Debug)]
pub struct RealizedModule {
    algebra: Arc<ArtinianAlgebra>,
    dim: usize,
    actions: Vec<SMat>,
    gen_markers: Option<Vec<SVec>>,
    cover: OnceLock<Arc<Cover>>,
    pub(crate) dual: OnceLock<Arc<HomSpace>>,
}

/// The minimal cover `R^μ → M` together with the data needed to lift
/// elements through it and to present `M`.
#[derive(Debug)]
pub struct Cover {
    gens: Vec<SVec>,
    map: SMat,
    image: Echelon,
    kernel: Subspace,
    syzygy: OnceLock<Arc<RealizedModule>>,
    relations: OnceLock<Vec<SVec>>,
    ring_length: usize,
}

impl Cover {
    /// `μ(M)`.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    /// Minimal generators, as vectors of `M`.
    pub fn gens(&self) -> &[SVec] {
        &self.gens
    }

    /// The cover as a `k`-matrix `R^μ → M` (coordinates `t·ℓ(R) + a`).
    pub fn matrix(&self) -> &SMat {
        &self.map
    }

    /// The first syzygy as a subspace of `R^μ`.
    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    /// A preimage in `R^μ` of `m ∈ M`.
    pub fn lift(&self, m: &SVec) -> SVec {
        let red = self.image.reduce(m);
        debug_assert!(red.remainder.is_zero());
        self.image.combine_tracked(&red.coeffs)
    }

    /// Component `j` (an element of `R`) of a vector of `R^μ`.
    pub fn component(&self, v: &SVec, j: usize) -> SVec {
        v.block(j * self.ring_length, self.ring_length)
    }
}

impl RealizedModule {
    /// Validating constructor: the actions must commute and satisfy every
    /// relation of the algebra (which forces nilpotency).
    pub fn new(algebra: Arc<ArtinianAlgebra>, dim: usize, actions: Vec<SMat>) -> Result<Arc<Self>> {
        if actions.len() != algebra.nvars() {
            return Err(Error::Dimension(format!(
                "{} action matrices for {} variables",
                actions.len(),
                algebra.nvars()
            )));
        }
        for a in &actions {
            if a.nrows() != dim || a.ncols() != dim {
                return Err(Error::Dimension(format!("action matrix is not {dim}×{dim}")));
            }
        }
        let m = Self::from_parts(algebra, dim, actions, None);
        m.check_actions()?;
        Ok(m)
    }

    pub(crate) fn from_parts(
        algebra: Arc<ArtinianAlgebra>,
        dim: usize,
        actions: Vec<SMat>,
        gen_markers: Option<Vec<SVec>>,
    ) -> Arc<Self> {
        Arc::new(RealizedModule {
            algebra,
            dim,
            actions,
            gen_markers,
            cover: OnceLock::new(),
            dual: OnceLock::new(),
        })
    }

    pub fn algebra(&self) -> &Arc<ArtinianAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    /// `ℓ(M) = dim_k M`.
    pub fn length(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[SMat] {
        &self.actions
    }

    pub fn gen_markers(&self) -> Option<&[SVec]> {
        self.gen_markers.as_deref()
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Checks that the actions commute pairwise and kill every generator
    /// of the defining ideal.
    pub fn check_actions(&self) -> Result<()> {
        let names = self.algebra.vars();
        for i in 0..self.actions.len() {
            for j in i + 1..self.actions.len() {
                if self.actions[i].compose(&self.actions[j]) != self.actions[j].compose(&self.actions[i]) {
                    return Err(Error::Input(format!("actions of {} and {} do not commute", names[i], names[j])));
                }
            }
        }
        for g in self.algebra.groebner().generators() {
            for b in 0..self.dim {
                let v = SVec::unit(b, self.field());
                if !self.eval_poly(g, &v).is_zero() {
                    return Err(Error::Input(format!("module action does not satisfy relation {g}")));
                }
            }
        }
        Ok(())
    }

    /// `p(x) · v` for a polynomial `p` in the ambient variables.
    pub fn eval_poly(&self, p: &Poly, v: &SVec) -> SVec {
        let mut acc = Accumulator::new();
        for (m, c) in p.terms() {
            let mut w = v.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    w = self.actions[i].apply(&w);
                }
            }
            acc.add_scaled(c, &w);
        }
        acc.finish()
    }

    /// `m_a · v` for every standard monomial `m_a` of the algebra.
    pub fn orbit(&self, v: &SVec) -> Vec<SVec> {
        let len = self.algebra.length();
        let mut out: Vec<SVec> = Vec::with_capacity(len);
        for a in 0..len {
            let w = match self.algebra.parent(a) {
                None => v.clone(),
                Some((i, b)) => self.actions[i].apply(&out[b]),
            };
            out.push(w);
        }
        out
    }

    /// `r · v` for an algebra element `r`.
    pub fn act(&self, r: &SVec, v: &SVec) -> SVec {
        if r.is_zero() || v.is_zero() {
            return SVec::zero();
        }
        let orbit = self.orbit(v);
        let mut acc = Accumulator::new();
        for (a, c) in r.iter() {
            acc.add_scaled(c, &orbit[a]);
        }
        acc.finish()
    }

    /// The minimal cover, computed once.
    pub fn cover(&self) -> &Arc<Cover> {
        self.cover.get_or_init(|| Arc::new(self.compute_cover()))
    }

    fn compute_cover(&self) -> Cover {
        let field = self.field();
        let len = self.algebra.length();
        let mut m_m = Echelon::new(field, false);
        for a in &self.actions {
            for c in a.cols() {
                m_m.insert(c, None);
            }
        }
        let gens: Vec<SVec> =
            (0..self.dim).filter(|&j| !m_m.is_lead(j)).map(|j| SVec::unit(j, field)).collect();
        let mut cols = Vec::with_capacity(gens.len() * len);
        for g in &gens {
            cols.extend(self.orbit(g));
        }
        let (kernel, image) = kernel_and_image(&cols, field);
        debug_assert_eq!(image.rank(), self.dim);
        let n = cols.len();
        Cover {
            gens,
            map: SMat::from_cols(self.dim, cols),
            image,
            kernel: Subspace::from_marked(n, kernel),
            syzygy: OnceLock::new(),
            relations: OnceLock::new(),
            ring_length: len,
        }
    }

    /// `μ(M)`.
    pub fn mu(&self) -> usize {
        self.cover().mu()
    }

    /// The first syzygy module `ker(R^μ → M)`, computed once.
    pub fn syzygy(&self) -> Arc<RealizedModule> {
        let cover = self.cover().clone();
        cover
            .syzygy
            .get_or_init(|| {
                let free = free(&self.algebra, cover.mu());
                submodule_unchecked(&free, cover.kernel.clone())
            })
            .clone()
    }

    /// Minimal relations: generators of the first syzygy, as vectors of `R^μ`.
    pub fn relations(&self) -> Vec<SVec> {
        let cover = self.cover().clone();
        cover
            .relations
            .get_or_init(|| {
                let syz = self.syzygy();
                syz.cover().gens().iter().map(|g| cover.kernel.embed(g)).collect()
            })
            .clone()
    }

    /// `ℓ(M) = μ(M)·ℓ(R)`.
    pub fn is_free(&self) -> bool {
        self.dim == self.mu() * self.algebra.length()
    }

    pub fn same_algebra(&self, other: &RealizedModule) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
    }

    /// `μ(M)` and the minimal cover as a module map `R^μ → M`.
    pub fn min_generators(self: &Arc<Self>) -> (usize, ModuleMap) {
        let cover = self.cover();
        let free = free(&self.algebra, cover.mu());
        let map = ModuleMap::new_unchecked(free, self.clone(), cover.map.clone());
        (cover.mu(), map)
    }

    /// The trace ideal `Σ_{f ∈ M*} f(M)`, as a submodule of `R`.
    pub fn trace_ideal(self: &Arc<Self>) -> Arc<RealizedModule> {
        let dual = crate::hom::dual(self);
        let len = self.algebra.length();
        let r = free(&self.algebra, 1);
        let values: Vec<SVec> = dual
            .functionals()
            .basis()
            .iter()
            .flat_map(|f| (0..self.mu()).map(move |j| f.block(j * len, len)))
            .collect();
        let span: Vec<SVec> = values.iter().flat_map(|v| r.orbit(v)).collect();
        submodule_unchecked(&r, Subspace::span(len, self.field(), span))
    }

    /// `M` has a free direct summand iff its trace ideal is all of `R`.
    pub fn has_free_summand(self: &Arc<Self>) -> bool {
        self.trace_ideal().length() == self.algebra.length()
    }
}

/// A `k`-linear map between realized modules that commutes with every
/// variable action.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: Arc<RealizedModule>,
    target: Arc<RealizedModule>,
    matrix: SMat,
}

impl ModuleMap {
    /// Checks dimensions, the common algebra, and R-linearity.
    pub fn new(source: Arc<RealizedModule>, target: Arc<RealizedModule>, matrix: SMat) -> Result<Self> {
        if !source.same_algebra(&target) {
            return Err(Error::AlgebraMismatch);
        }
        if matrix.ncols() != source.length() || matrix.nrows() != target.length() {
            return Err(Error::Dimension(format!(
                "map matrix is {}×{}, expected {}×{}",
                matrix.nrows(),
                matrix.ncols(),
                target.length(),
                source.length()
            )));
        }
        for (i, (a, b)) in source.actions.iter().zip(&target.actions).enumerate() {
            if matrix.compose(a) != b.compose(&matrix) {
                return Err(Error::NotLinear { variable: source.algebra.vars()[i].clone() });
            }
        }
        Ok(ModuleMap { source, target, matrix })
    }

    pub(crate) fn new_unchecked(source: Arc<RealizedModule>, target: Arc<RealizedModule>, matrix: SMat) -> Self {
        ModuleMap { source, target, matrix }
    }

    pub fn identity(m: &Arc<RealizedModule>) -> Self {
        ModuleMap::new_unchecked(m.clone(), m.clone(), SMat::identity(m.length(), m.field()))
    }

    pub fn source(&self) -> &Arc<RealizedModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<RealizedModule> {
        &self.target
    }

    pub fn matrix(&self) -> &SMat {
        &self.matrix
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        self.matrix.apply(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if !Arc::ptr_eq(&other.target, &self.source) && other.target.length() != self.source.length() {
            return Err(Error::Dimension("composition of incompatible maps".into()));
        }
        Ok(ModuleMap::new_unchecked(other.source.clone(), self.target.clone(), self.matrix.compose(&other.matrix)))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank(self.source.field())
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.length()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.length()
    }

    /// Kernel with its inclusion into the source.
    pub fn kernel(&self) -> (Arc<RealizedModule>, ModuleMap) {
        let sub = Subspace::kernel(self.matrix.cols(), self.source.field());
        let k = submodule_unchecked(&self.source, sub.clone());
        let incl = SMat::from_cols(self.source.length(), sub.basis().to_vec());
        let map = ModuleMap::new_unchecked(k.clone(), self.source.clone(), incl);
        (k, map)
    }

    /// Image with its inclusion into the target.
    pub fn image(&self) -> (Arc<RealizedModule>, ModuleMap) {
        let sub = Subspace::span(self.target.length(), self.source.field(), self.matrix.cols().iter().cloned());
        let im = submodule_unchecked(&self.target, sub.clone());
        let incl = SMat::from_cols(self.target.length(), sub.basis().to_vec());
        (im.clone(), ModuleMap::new_unchecked(im, self.target.clone(), incl))
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> (Arc<RealizedModule>, ModuleMap) {
        let mut ech = Echelon::new(self.source.field(), false);
        for c in self.matrix.cols() {
            ech.insert(c, None);
        }
        quotient_with_projection(&self.target, ech)
    }
}

/// Restricts the actions of `ambient` to an invariant subspace.
pub(crate) fn submodule_unchecked(ambient: &Arc<RealizedModule>, sub: Subspace) -> Arc<RealizedModule> {
    let actions = ambient
        .actions
        .iter()
        .map(|a| SMat::from_cols(sub.dim(), sub.basis().iter().map(|b| sub.coords(&a.apply(b))).collect()))
        .collect();
    RealizedModule::from_parts(ambient.algebra.clone(), sub.dim(), actions, None)
}

/// `ambient / span(ech)`, with basis the non-pivot coordinates.
pub(crate) fn quotient_with_projection(
    ambient: &Arc<RealizedModule>,
    ech: Echelon,
) -> (Arc<RealizedModule>, ModuleMap) {
    let n = ambient.length();
    let keep: Vec<usize> = (0..n).filter(|&j| !ech.is_lead(j)).collect();
    let mut slot = vec![usize::MAX; n];
    for (q, &j) in keep.iter().enumerate() {
        slot[j] = q;
    }
    let project = |v: &SVec| -> SVec {
        let rem = ech.reduce(v).remainder;
        SVec::from_entries(rem.iter().map(|(j, c)| (slot[j], c.clone())))
    };
    let field = ambient.field();
    let actions = ambient
        .actions
        .iter()
        .map(|a| SMat::from_cols(keep.len(), keep.iter().map(|&j| project(a.col(j))).collect()))
        .collect();
    let markers = ambient.gen_markers.as_ref().map(|ms| ms.iter().map(&project).collect());
    let q = RealizedModule::from_parts(ambient.algebra.clone(), keep.len(), actions, markers);
    let proj = SMat::from_cols(keep.len(), (0..n).map(|j| project(&SVec::unit(j, field))).collect());
    let map = ModuleMap::new_unchecked(ambient.clone(), q.clone(), proj);
    (q, map)
}

/// A presentation matrix `F₁ → F₀` whose cokernel is the module.
#[derive(Clone, Debug)]
pub struct Presentation {
    algebra: Arc<ArtinianAlgebra>,
    rows: usize,
    /// `columns[j]` is the image of the `j`-th basis vector of `F₁` in `R^rows`.
    columns: Vec<SVec>,
}

impl Presentation {
    /// `entries[i][j]` is the `(i, j)` entry; `rows` fixes the rank of `F₀`
    /// even when there are no columns.
    pub fn new(algebra: Arc<ArtinianAlgebra>, rows: usize, entries: &[Vec<Poly>]) -> Result<Self> {
        if entries.len() != rows {
            return Err(Error::Dimension(format!("{} matrix rows, expected {rows}", entries.len())));
        }
        let ncols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged presentation matrix".into()));
        }
        let len = algebra.length();
        let mut columns = Vec::with_capacity(ncols);
        for j in 0..ncols {
            let mut acc = Accumulator::new();
            for (i, row) in entries.iter().enumerate() {
                acc.add_vec(&algebra.element(&row[j])?.shifted(i * len));
            }
            columns.push(acc.finish());
        }
        Ok(Presentation { algebra, rows, columns })
    }

    pub fn from_strings(algebra: Arc<ArtinianAlgebra>, rows: usize, entries: &[Vec<String>]) -> Result<Self> {
        let polys = entries
            .iter()
            .map(|r| r.iter().map(|s| Poly::parse(s, algebra.vars(), algebra.field())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra, rows, &polys)
    }

    /// From columns already expressed as vectors of `R^rows`.
    pub fn from_columns(algebra: Arc<ArtinianAlgebra>, rows: usize, columns: Vec<SVec>) -> Self {
        Presentation { algebra, rows, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[SVec] {
        &self.columns
    }

    pub fn entry(&self, i: usize, j: usize) -> Poly {
        let len = self.algebra.length();
        self.algebra.to_poly(&self.columns[j].block(i * len, len))
    }

    /// The cokernel, as a quotient of `R^rows`.
    pub fn realize(&self) -> Arc<RealizedModule> {
        let f0 = free(&self.algebra, self.rows);
        let mut ech = Echelon::new(self.algebra.field(), false);
        for c in &self.columns {
            for v in f0.orbit(c) {
                ech.insert(&v, None);
            }
        }
        quotient_with_projection(&f0, ech).0
    }
}

/// `R^n`, with basis `e_t ⊗ m_a` at index `t·ℓ(R) + a`.
pub fn free(algebra: &Arc<ArtinianAlgebra>, n: usize) -> Arc<RealizedModule> {
    let len = algebra.length();
    let field = algebra.field();
    let actions = algebra
        .var_actions()
        .iter()
        .map(|a| {
            let cols = (0..n).flat_map(|t| a.cols().iter().map(move |c| c.shifted(t * len))).collect();
            SMat::from_cols(n * len, cols)
        })
        .collect();
    let markers = (0..n).map(|t| SVec::unit(t * len, field)).collect();
    RealizedModule::from_parts(algebra.clone(), n * len, actions, Some(markers))
}

/// `k = R/𝔪`.
pub fn residue_field(algebra: &Arc<ArtinianAlgebra>) -> Arc<RealizedModule> {
    let actions = (0..algebra.nvars()).map(|_| SMat::zero(1, 1)).collect();
    RealizedModule::from_parts(algebra.clone(), 1, actions, Some(vec![SVec::unit(0, algebra.field())]))
}

/// The ideal generated by `gens`, which must all lie in `𝔪`.
pub fn ideal(algebra: &Arc<ArtinianAlgebra>, gens: &[Poly]) -> Result<Arc<RealizedModule>> {
    let r = free(algebra, 1);
    let mut elems = Vec::with_capacity(gens.len());
    for g in gens {
        let e = algebra.element(g)?;
        if algebra.is_unit(&e) {
            return Err(Error::UnitGenerator(g.to_string()));
        }
        elems.push(e);
    }
    let span: Vec<SVec> = elems.iter().flat_map(|e| r.orbit(e)).collect();
    let sub = Subspace::span(algebra.length(), algebra.field(), span);
    Ok(submodule_unchecked(&r, sub))
}

pub fn ideal_from_strings(algebra: &Arc<ArtinianAlgebra>, gens: &[&str]) -> Result<Arc<RealizedModule>> {
    let polys = gens
        .iter()
        .map(|g| Poly::parse(g, algebra.vars(), algebra.field()))
        .collect::<Result<Vec<_>>>()?;
    ideal(algebra, &polys)
}

/// The maximal ideal `𝔪 = (x_1, …, x_n)`.
pub fn max_ideal(algebra: &Arc<ArtinianAlgebra>) -> Arc<RealizedModule> {
    let gens: Vec<Poly> =
        (0..algebra.nvars()).map(|i| Poly::var(algebra.field(), algebra.vars().clone(), i)).collect();
    ideal(algebra, &gens).expect("variables lie in the maximal ideal")
}

/// `ω_R = Hom_k(R, k)` with the transposed actions.
pub fn canonical(algebra: &Arc<ArtinianAlgebra>) -> Arc<RealizedModule> {
    let actions = algebra.var_actions().iter().map(SMat::transpose).collect();
    RealizedModule::from_parts(algebra.clone(), algebra.length(), actions, None)
}

pub fn direct_sum(a: &Arc<RealizedModule>, b: &Arc<RealizedModule>) -> Result<Arc<RealizedModule>> {
    if !a.same_algebra(b) {
        return Err(Error::AlgebraMismatch);
    }
    let actions = a.actions.iter().zip(&b.actions).map(|(x, y)| x.direct_sum(y)).collect();
    let markers = match (&a.gen_markers, &b.gen_markers) {
        (Some(ma), Some(mb)) => {
            Some(ma.iter().cloned().chain(mb.iter().map(|v| v.shifted(a.dim))).collect())
        }
        _ => None,
    };
    Ok(RealizedModule::from_parts(a.algebra.clone(), a.dim + b.dim, actions, markers))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    fn alg(vars: &[&str], gens: &[&str]) -> Arc<ArtinianAlgebra> {
        ArtinianAlgebra::from_strings(Field::Rational, vars, gens, MonomialOrder::GrevLex).unwrap()
    }

    fn lam() -> Arc<ArtinianAlgebra> {
        alg(&["x", "y"], &["x^2", "x*y", "y^2"])
    }

    #[test]
    fn zero_presentation_is_free() {
        let r = lam();
        let p = Presentation::new(r.clone(), 3, &[vec![], vec![], vec![]]).unwrap();
        let m = p.realize();
        assert_eq!(m.length(), 9);
        assert!(m.is_free());
        assert_eq!(m.mu(), 3);
    }

    #[test]
    fn row_of_variables_gives_residue_field() {
        let r = lam();
        let p = Presentation::from_strings(r, 1, &[vec!["x".into(), "y".into()]]).unwrap();
        let m = p.realize();
        assert_eq!(m.length(), 1);
        assert!(m.check_actions().is_ok());
    }

    #[test]
    fn builders() {
        let r = alg(&["x", "y"], &["x^2", "x*y", "y^3"]);
        let m = max_ideal(&r);
        assert_eq!((m.length(), m.mu()), (3, 2));
        let f = free(&r, 1);
        assert_eq!((f.length(), f.mu()), (4, 1));
        let w = canonical(&r);
        assert_eq!((w.length(), w.mu()), (4, 2));
        assert!(w.check_actions().is_ok());
        assert!(matches!(ideal_from_strings(&r, &["1 + x"]), Err(Error::UnitGenerator(_))));
    }

    #[test]
    fn multiplication_kernel() {
        let r = lam();
        let f = free(&r, 1);
        let x = r.parse_element("x").unwrap();
        let cols = (0..3).map(|b| r.mul(&x, &SVec::unit(b, r.field()))).collect();
        let map = ModuleMap::new(f.clone(), f.clone(), SMat::from_cols(3, cols)).unwrap();
        let (k, incl) = map.kernel();
        assert_eq!(k.length(), 2);
        assert!(map.compose(&incl).unwrap().matrix().is_zero());
        let (im, _) = map.image();
        assert_eq!(im.length() + k.length(), f.length());
        let (ck, _) = map.cokernel();
        assert_eq!(ck.length(), 2);
        assert!(ModuleMap::identity(&f).kernel().0.is_zero());
    }

    #[test]
    fn non_linear_maps_are_rejected() {
        let r = lam();
        let f = free(&r, 1);
        let k = residue_field(&r);
        // sends 1 to 0 and x to the generator of k: not R-linear
        let m = SMat::from_cols(1, vec![SVec::zero(), SVec::unit(0, r.field()), SVec::zero()]);
        assert!(matches!(ModuleMap::new(f, k, m), Err(Error::NotLinear { .. })));
    }

    #[test]
    fn freeness_and_trace() {
        let r = lam();
        let k = residue_field(&r);
        assert!(!k.is_free());
        assert!(!k.has_free_summand());
        assert_eq!(k.trace_ideal().length(), 2);
        let f = free(&r, 1);
        assert!(f.has_free_summand());
        assert!(direct_sum(&k, &f).unwrap().has_free_summand());
        assert!(!max_ideal(&r).is_free());
        let zero = Presentation::new(r.clone(), 0, &[]).unwrap().realize();
        assert!(zero.is_free());
        assert_eq!(zero.mu(), 0);
    }

    #[test]
    fn syzygy_of_residue_field() {
        let r = lam();
        let k = residue_field(&r);
        let syz = k.syzygy();
        assert_eq!(syz.length(), 2);
        assert_eq!(k.relations().len(), 2);
    }
}
