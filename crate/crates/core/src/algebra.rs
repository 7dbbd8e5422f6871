//! Artinian local quotient algebras `k[x…]/I` realized through a
//! standard-monomial basis and the matrices of multiplication by each
//! variable.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::linalg::{Accumulator, SMat, SVec, Subspace};
use crate::poly::{Monomial, MonomialOrder, Poly};
use crate::scalar::Field;
use crate::verdict::{Verdict, Witness};

/// Cached local invariants of an artinian algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraInvariants {
    pub length: usize,
    /// `dim (0:𝔪)`, the type of the ring.
    pub socle_dim: usize,
    /// `μ(𝔪) = dim 𝔪/𝔪²`.
    pub mu_m: usize,
    /// Least `n` with `𝔪^n = 0`.
    pub loewy: usize,
    pub is_gorenstein: bool,
}

/// `R = k[x…]/I` for an ideal `I` primary to the origin.
#[derive(Debug)]
pub struct ArtinianAlgebra {
    gb: GroebnerBasis,
    std_monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    var_actions: Vec<SMat>,
    mono_actions: Vec<SMat>,
    /// `parent[a] = Some((i, b))` when `m_a = x_i * m_b`.
    parent: Vec<Option<(usize, usize)>>,
    socle: Subspace,
    /// `powers[n]` spans `𝔪^n`; the last entry is the zero space.
    powers: Vec<Subspace>,
    invariants: AlgebraInvariants,
}

impl ArtinianAlgebra {
    /// Builds the quotient by the ideal generated by `gens`.
    pub fn from_generators(gens: &[Poly], order: MonomialOrder) -> Result<Arc<Self>> {
        Self::from_groebner(buchberger(gens, order)?)
    }

    /// Parses generator strings and builds the quotient.
    pub fn from_strings(field: Field, vars: &[&str], gens: &[&str], order: MonomialOrder) -> Result<Arc<Self>> {
        let field = field.checked()?;
        let vars: Arc<[String]> = vars.iter().map(|s| s.to_string()).collect();
        let polys = gens.iter().map(|g| Poly::parse(g, &vars, field)).collect::<Result<Vec<_>>>()?;
        if polys.is_empty() {
            // the zero ideal of k[] when there are no variables
            if vars.is_empty() {
                return Self::from_generators(&[Poly::zero(field, vars)], order);
            }
            return Err(Error::NotFiniteDimensional { variable: vars[0].clone() });
        }
        Self::from_generators(&polys, order)
    }

    /// The quotient by a Gröbner basis.
    pub fn from_groebner(gb: GroebnerBasis) -> Result<Arc<Self>> {
        let order = gb.order();
        let field = gb.field();
        let nvars = gb.vars().len();
        let leads = gb.leading_monomials();
        if leads.iter().any(Monomial::is_one) {
            return Err(Error::UnitIdeal);
        }
        for i in 0..nvars {
            if !leads.iter().any(|m| m.pure_power_var() == Some(i)) {
                return Err(Error::NotFiniteDimensional { variable: gb.vars()[i].clone() });
            }
        }

        // standard monomials form an order ideal; grow it from 1
        let is_std = |m: &Monomial| !leads.iter().any(|l| l.divides(m));
        let mut std_monomials = vec![Monomial::one(nvars)];
        let mut frontier = std_monomials.clone();
        let mut seen: std::collections::HashSet<Monomial> = frontier.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for m in &frontier {
                for i in 0..nvars {
                    let n = m.mul(&Monomial::var(nvars, i));
                    if is_std(&n) && seen.insert(n.clone()) {
                        next.push(n);
                    }
                }
            }
            std_monomials.extend(next.iter().cloned());
            frontier = next;
        }
        std_monomials.sort_by(|a, b| order.cmp(a, b));
        let len = std_monomials.len();
        let index: HashMap<Monomial, usize> =
            std_monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();

        let parent: Vec<Option<(usize, usize)>> = std_monomials
            .iter()
            .map(|m| {
                let i = m.exponents().iter().position(|&e| e > 0)?;
                let b = Monomial::var(nvars, i).quotient_of(m);
                Some((i, index[&b]))
            })
            .collect();

        let coords = |p: &Poly| -> SVec {
            SVec::from_entries(p.terms().map(|(m, c)| (index[m], c.clone())))
        };
        let var_actions: Vec<SMat> = (0..nvars)
            .map(|i| {
                let x = Monomial::var(nvars, i);
                let cols = std_monomials
                    .iter()
                    .map(|m| {
                        let p = Poly::monomial(field, gb.vars().clone(), m.mul(&x), field.one());
                        coords(&gb.normal_form(&p))
                    })
                    .collect();
                SMat::from_cols(len, cols)
            })
            .collect();

        for (i, a) in var_actions.iter().enumerate() {
            let mut vecs: Vec<SVec> = (0..len).map(|b| SVec::unit(b, field)).collect();
            for _ in 0..len {
                vecs = vecs.iter().map(|v| a.apply(v)).collect();
            }
            if vecs.iter().any(|v| !v.is_zero()) {
                return Err(Error::NotLocal { variable: gb.vars()[i].clone() });
            }
        }

        let mut mono_actions: Vec<SMat> = Vec::with_capacity(len);
        for &p in &parent {
            let m = match p {
                None => SMat::identity(len, field),
                Some((i, b)) => var_actions[i].compose(&mono_actions[b]),
            };
            mono_actions.push(m);
        }

        // socle: joint kernel of the variable actions
        let stacked: Vec<SVec> = (0..len)
            .map(|b| {
                let mut acc = Accumulator::new();
                for (i, a) in var_actions.iter().enumerate() {
                    acc.add_vec(&a.col(b).shifted(i * len));
                }
                acc.finish()
            })
            .collect();
        let socle = Subspace::kernel(&stacked, field);

        let mut powers = vec![Subspace::span(len, field, (0..len).map(|b| SVec::unit(b, field)))];
        powers.push(Subspace::span(len, field, (1..len).map(|b| SVec::unit(b, field))));
        while powers.last().unwrap().dim() > 0 {
            let prev = powers.last().unwrap();
            let next = Subspace::span(
                len,
                field,
                prev.basis().iter().flat_map(|v| var_actions.iter().map(move |a| a.apply(v))).collect::<Vec<_>>(),
            );
            powers.push(next);
        }
        let mu_m = powers[1].dim() - powers.get(2).map_or(0, Subspace::dim);
        let loewy = powers.len() - 1;
        let invariants = AlgebraInvariants {
            length: len,
            socle_dim: socle.dim(),
            mu_m,
            loewy,
            is_gorenstein: socle.dim() == 1,
        };

        Ok(Arc::new(ArtinianAlgebra {
            gb,
            std_monomials,
            index,
            var_actions,
            mono_actions,
            parent,
            socle,
            powers,
            invariants,
        }))
    }

    pub fn field(&self) -> Field {
        self.gb.field()
    }

    pub fn vars(&self) -> &Arc<[String]> {
        self.gb.vars()
    }

    pub fn nvars(&self) -> usize {
        self.gb.vars().len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.gb.order()
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn std_monomials(&self) -> &[Monomial] {
        &self.std_monomials
    }

    /// `ℓ(R)`.
    pub fn length(&self) -> usize {
        self.std_monomials.len()
    }

    pub fn invariants(&self) -> &AlgebraInvariants {
        &self.invariants
    }

    pub fn var_actions(&self) -> &[SMat] {
        &self.var_actions
    }

    /// Multiplication by the `a`-th standard monomial.
    pub fn mono_action(&self, a: usize) -> &SMat {
        &self.mono_actions[a]
    }

    /// `(i, b)` with `m_a = x_i m_b`, or `None` for `a = 0` (the monomial 1).
    pub fn parent(&self, a: usize) -> Option<(usize, usize)> {
        self.parent[a]
    }

    pub fn socle(&self) -> &Subspace {
        &self.socle
    }

    /// `𝔪^n` as a subspace of `R` (zero for `n ≥ loewy`).
    pub fn max_ideal_power(&self, n: usize) -> &Subspace {
        &self.powers[n.min(self.powers.len() - 1)]
    }

    /// Coordinates of the normal form of `p`.
    pub fn element(&self, p: &Poly) -> Result<SVec> {
        if p.field() != self.field() {
            return Err(Error::FieldMismatch(p.field().to_string(), self.field().to_string()));
        }
        if p.vars() != self.vars() {
            return Err(Error::VariableMismatch);
        }
        let nf = self.gb.normal_form(p);
        Ok(SVec::from_entries(nf.terms().map(|(m, c)| (self.index[m], c.clone()))))
    }

    pub fn parse_element(&self, text: &str) -> Result<SVec> {
        self.element(&Poly::parse(text, self.vars(), self.field())?)
    }

    pub fn to_poly(&self, v: &SVec) -> Poly {
        Poly::from_terms(
            self.field(),
            self.vars().clone(),
            v.iter().map(|(a, c)| (self.std_monomials[a].clone(), c.clone())),
        )
    }

    /// Product of two elements.
    pub fn mul(&self, a: &SVec, b: &SVec) -> SVec {
        let mut acc = Accumulator::new();
        for (i, c) in a.iter() {
            acc.add_scaled(c, &self.mono_actions[i].apply(b));
        }
        acc.finish()
    }

    pub fn is_unit(&self, a: &SVec) -> bool {
        a.get(0).is_some()
    }

    /// `Some((m, n))` when the ideal is `(x_1,…,x_m)^n`.
    pub fn power_of_max_ideal(&self) -> Option<(usize, u32)> {
        let gens = self.gb.generators();
        let m = self.nvars();
        let n = gens.first()?.total_degree()?;
        let all_monomial = gens.iter().all(|g| {
            g.num_terms() == 1 && g.total_degree() == Some(n) && g.terms().next().unwrap().1.is_one()
        });
        // number of degree-n monomials in m variables
        let count = binomial(m as u64 + n as u64 - 1, n as u64);
        (all_monomial && gens.len() as u64 == count).then_some((m, n))
    }

    /// A variable generating `𝔪` when `μ(𝔪) = 1`.
    fn principal_generator(&self) -> Option<usize> {
        let sq = self.max_ideal_power(2);
        (0..self.nvars()).find(|&i| {
            let x = self.index.get(&Monomial::var(self.nvars(), i));
            x.is_some_and(|&a| !sq.contains(&SVec::unit(a, self.field())))
        })
    }

    /// Sufficient conditions for strictly increasing Betti numbers, and the
    /// structural counterexample when `𝔪` is principal.
    pub fn bnsi_certificate(&self) -> Verdict {
        let inv = &self.invariants;
        let m2 = self.max_ideal_power(2).dim();
        let m3 = self.max_ideal_power(3).dim();
        let mut facts = BTreeMap::new();
        facts.insert("length".to_string(), inv.length.to_string());
        facts.insert("mu_m".to_string(), inv.mu_m.to_string());
        facts.insert("dim_m2".to_string(), m2.to_string());
        facts.insert("dim_m3".to_string(), m3.to_string());
        facts.insert("socle_dim".to_string(), inv.socle_dim.to_string());

        if inv.length == 1 {
            return Verdict::certified(true, "field", Witness::Preconditions { facts });
        }
        if m2 == 0 && inv.mu_m > 1 {
            return Verdict::certified(true, "m2=0", Witness::Preconditions { facts });
        }
        // 𝔪³ = 0 puts 𝔪² inside the socle, so comparing dimensions decides equality
        if m3 == 0 && inv.mu_m > 1 && m2 != inv.socle_dim {
            return Verdict::certified(true, "m3=0,m2!=soc", Witness::Preconditions { facts });
        }
        if let Some((m, n)) = self.power_of_max_ideal() {
            if m > 1 {
                facts.insert("power".to_string(), format!("({m} variables)^{n}"));
                return Verdict::certified(true, "power-of-max-ideal", Witness::Preconditions { facts });
            }
        }
        if inv.mu_m == 1 {
            if let Some(i) = self.principal_generator() {
                return Verdict::certified(
                    false,
                    "principal-max-ideal",
                    Witness::Module { module: format!("R/({})", self.vars()[i]), betti: vec![1, 1] },
                );
            }
        }
        Verdict::unknown(0, "no-rule", Witness::Preconditions { facts })
    }

    /// Socle basis as polynomials.
    pub fn socle_polys(&self) -> Vec<Poly> {
        self.socle.basis().iter().map(|v| self.to_poly(v)).collect()
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(vars: &[&str], gens: &[&str]) -> Arc<ArtinianAlgebra> {
        ArtinianAlgebra::from_strings(Field::Rational, vars, gens, MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn lam_ring_basis() {
        let r = alg(&["x", "y"], &["x^2", "x*y", "y^2"]);
        assert_eq!(r.length(), 3);
        assert_eq!(r.invariants().socle_dim, 2);
        assert_eq!(r.invariants().loewy, 2);
    }

    #[test]
    fn cubic_socle_example() {
        let r = alg(&["x", "y"], &["x^2", "x*y", "y^3"]);
        let inv = r.invariants();
        assert_eq!(
            inv,
            &AlgebraInvariants { length: 4, socle_dim: 2, mu_m: 2, loewy: 3, is_gorenstein: false }
        );
        let socle: Vec<String> = r.socle_polys().iter().map(|p| p.to_string()).collect();
        let expected = Subspace::span(
            4,
            Field::Rational,
            vec![r.parse_element("x").unwrap(), r.parse_element("y^2").unwrap()],
        );
        for v in r.socle().basis() {
            assert!(expected.contains(v), "unexpected socle element among {socle:?}");
        }
    }

    #[test]
    fn gorenstein_three_variables() {
        let r = alg(&["x", "y", "z"], &["x^2 - y^2", "y^2 - z^2", "x*y", "y*z", "z*x"]);
        let inv = r.invariants();
        assert_eq!(
            inv,
            &AlgebraInvariants { length: 5, socle_dim: 1, mu_m: 3, loewy: 3, is_gorenstein: true }
        );
        let stds: Vec<String> = r.std_monomials().iter().map(|m| m.format(r.vars())).collect();
        assert_eq!(stds.len(), 5);
        for s in ["1", "x", "y", "z"] {
            assert!(stds.contains(&s.to_string()));
        }
    }

    #[test]
    fn truncated_polynomial_ring() {
        let r = alg(&["x"], &["x^3"]);
        assert_eq!(
            r.invariants(),
            &AlgebraInvariants { length: 3, socle_dim: 1, mu_m: 1, loewy: 3, is_gorenstein: true }
        );
        let v = r.bnsi_certificate();
        assert!(v.is_false());
        assert_eq!(v.witness, Witness::Module { module: "R/(x)".into(), betti: vec![1, 1] });
    }

    #[test]
    fn infinite_quotients_are_rejected() {
        let e = ArtinianAlgebra::from_strings(Field::Rational, &["x", "y"], &["x*y"], MonomialOrder::GrevLex)
            .unwrap_err();
        assert_eq!(e, Error::NotFiniteDimensional { variable: "x".into() });
        let e = ArtinianAlgebra::from_strings(Field::Rational, &["x"], &["x^2 - x"], MonomialOrder::GrevLex)
            .unwrap_err();
        assert_eq!(e, Error::NotLocal { variable: "x".into() });
        let e = ArtinianAlgebra::from_strings(Field::Rational, &["x"], &["x", "x - 1"], MonomialOrder::GrevLex)
            .unwrap_err();
        assert_eq!(e, Error::UnitIdeal);
    }

    #[test]
    fn bnsi_rules() {
        assert_eq!(alg(&["x", "y"], &["x^2", "x*y", "y^2"]).bnsi_certificate().rule, "m2=0");
        assert_eq!(alg(&["x", "y"], &["x^2", "x*y", "y^3"]).bnsi_certificate().rule, "m3=0,m2!=soc");
        let p = alg(&["x", "y"], &["x^3", "x^2*y", "x*y^2", "y^3"]);
        assert_eq!(p.power_of_max_ideal(), Some((2, 3)));
        assert_eq!(p.bnsi_certificate().rule, "power-of-max-ideal");
        // Gorenstein with m^3 = 0: m^2 equals the socle, no rule applies
        let g = alg(&["x", "y", "z"], &["x^2 - y^2", "y^2 - z^2", "x*y", "y*z", "z*x"]);
        assert!(g.bnsi_certificate().is_unknown());
    }

    #[test]
    fn multiplication_is_commutative_and_associative() {
        let r = alg(&["x", "y"], &["x^2 - y^3", "x*y"]);
        let a = r.parse_element("1 + x + 2*y").unwrap();
        let b = r.parse_element("y - 3*x").unwrap();
        let c = r.parse_element("y^2 + x").unwrap();
        assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
    }
}
