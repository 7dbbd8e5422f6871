//! Buchberger's algorithm and normal forms.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Poly};
use crate::scalar::Field;

/// A reduced, monic Gröbner basis, sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    field: Field,
    vars: Arc<[String]>,
    order: MonomialOrder,
    generators: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().map(|g| g.leading(self.order).unwrap().0.clone()).collect()
    }

    /// Fully reduced remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Poly) -> Poly {
        normal_form(f, &self.generators, self.order)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// True when every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let g = &self.generators;
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                if !normal_form(&s_polynomial(&g[i], &g[j], self.order), g, self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// True when no term of any generator is divisible by another
    /// generator's leading monomial and every generator is monic.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.generators.iter().enumerate().all(|(i, g)| {
            g.leading(self.order).unwrap().1.is_one()
                && g.terms().all(|(m, _)| {
                    lms.iter().enumerate().all(|(j, lm)| j == i || !lm.divides(m))
                })
        })
    }
}

fn normal_form(f: &Poly, basis: &[Poly], order: MonomialOrder) -> Poly {
    let mut p = f.clone();
    let mut rem = Poly::zero(f.field(), f.vars().clone());
    let leads: Vec<_> = basis.iter().map(|g| g.leading(order).unwrap()).collect();
    while let Some((lm, lc)) = p.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        match leads.iter().position(|(glm, _)| glm.divides(&lm)) {
            Some(k) => {
                let (glm, glc) = &leads[k];
                let factor = lc.mul(&glc.inv());
                let shift = glm.quotient_of(&lm);
                p = p.add_unchecked(&basis[k].mul_term(&shift, &factor), true);
            }
            None => {
                p = p.add_unchecked(&Poly::monomial(p.field(), p.vars().clone(), lm.clone(), lc.clone()), true);
                rem.add_term(lm, lc);
            }
        }
    }
    rem
}

fn s_polynomial(a: &Poly, b: &Poly, order: MonomialOrder) -> Poly {
    let (la, ca) = a.leading(order).unwrap();
    let (lb, cb) = b.leading(order).unwrap();
    let l = la.lcm(lb);
    let pa = a.mul_term(&la.quotient_of(&l), &ca.inv());
    let pb = b.mul_term(&lb.quotient_of(&l), &cb.inv());
    pa.add_unchecked(&pb, true)
}

fn monic(p: &Poly, order: MonomialOrder) -> Poly {
    let c = p.leading(order).unwrap().1.inv();
    p.scale(&c)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed by the normal strategy: smallest lcm of leading
/// monomials first (ties broken by pair index), skipping pairs with
/// coprime leading monomials.
pub fn buchberger(gens: &[Poly], order: MonomialOrder) -> Result<GroebnerBasis> {
    let first = gens.first().ok_or_else(|| Error::Input("empty generator list".into()))?;
    let (field, vars) = (first.field(), first.vars().clone());
    for g in gens {
        if g.field() != field {
            return Err(Error::FieldMismatch(field.to_string(), g.field().to_string()));
        }
        if *g.vars() != vars {
            return Err(Error::VariableMismatch);
        }
    }

    let mut basis: Vec<Poly> = Vec::new();
    for g in gens {
        let r = normal_form(g, &basis, order);
        if !r.is_zero() {
            basis.push(monic(&r, order));
        }
    }
    let lead = |p: &Poly| p.leading(order).unwrap().0.clone();
    let mut pairs: Vec<(Monomial, usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((lead(&basis[i]).lcm(&lead(&basis[j])), i, j));
        }
    }

    while !pairs.is_empty() {
        let k = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(&pairs[a].0, &pairs[b].0)
                    .then_with(|| (pairs[a].1, pairs[a].2).cmp(&(pairs[b].1, pairs[b].2)))
            })
            .unwrap();
        let (l, i, j) = pairs.swap_remove(k);
        if l == lead(&basis[i]).mul(&lead(&basis[j])) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let r = monic(&r, order);
            let lr = lead(&r);
            let n = basis.len();
            for (t, g) in basis.iter().enumerate() {
                pairs.push((lead(g).lcm(&lr), t, n));
            }
            basis.push(r);
        }
    }

    // minimize: drop generators whose leading monomial is divisible by another's
    let leads: Vec<Monomial> = basis.iter().map(lead).collect();
    let mut keep: Vec<Poly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = leads.iter().enumerate().any(|(j, lj)| {
            j != i && lj.divides(&leads[i]) && (lj != &leads[i] || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    // interreduce
    let mut reduced = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Poly> =
            keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let lm = lead(&keep[i]);
        let lc = keep[i].leading(order).unwrap().1.clone();
        let tail = keep[i].add_unchecked(&Poly::monomial(field, vars.clone(), lm.clone(), lc.clone()), true);
        let tail = normal_form(&tail, &others, order);
        let g = Poly::monomial(field, vars.clone(), lm, lc).add_unchecked(&tail, false);
        reduced.push(monic(&g, order));
    }
    reduced.sort_by(|a, b| order.cmp(&lead(a), &lead(b)));
    Ok(GroebnerBasis { field, vars, order, generators: reduced })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&str], vars: &[&str]) -> Vec<Poly> {
        let v: Arc<[String]> = vars.iter().map(|s| s.to_string()).collect();
        gens.iter().map(|g| Poly::parse(g, &v, Field::Rational).unwrap()).collect()
    }

    #[test]
    fn monomial_ideals_are_their_own_basis() {
        for gens in [&["x^2", "x*y", "y^2"][..], &["x^2", "x*y", "y^3"][..]] {
            let g = ideal(gens, &["x", "y"]);
            let gb = buchberger(&g, MonomialOrder::GrevLex).unwrap();
            assert_eq!(gb.generators().len(), gens.len());
            for p in &g {
                assert!(gb.generators().contains(p));
            }
        }
    }

    #[test]
    fn gorenstein_example_basis() {
        let g = ideal(&["x^2 - y^2", "y^2 - z^2", "x*y", "y*z", "z*x"], &["x", "y", "z"]);
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::DegLex] {
            let gb = buchberger(&g, order).unwrap();
            assert!(gb.is_groebner());
            assert!(gb.is_reduced());
            for p in &g {
                assert!(gb.contains(p));
            }
        }
    }

    #[test]
    fn principal_ideal_normal_form() {
        let g = ideal(&["x^2 + x*y"], &["x", "y"]);
        let gb = buchberger(&g, MonomialOrder::GrevLex).unwrap();
        let v = gb.vars().clone();
        let f = Poly::parse("x^3 + x^2*y", &v, Field::Rational).unwrap();
        assert!(gb.contains(&f));
        let h = Poly::parse("x^2", &v, Field::Rational).unwrap();
        assert_eq!(gb.normal_form(&h), Poly::parse("-x*y", &v, Field::Rational).unwrap());
    }

    #[test]
    fn unit_ideal_collapses() {
        let g = ideal(&["x + 1", "x"], &["x"]);
        let gb = buchberger(&g, MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb.generators().len(), 1);
        assert!(gb.generators()[0].leading(MonomialOrder::GrevLex).unwrap().0.is_one());
    }
}
