//! Structural invariants over randomly generated inputs.

mod common;

use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::{randoms, ring, RINGS};
use reflexa::hom::{aus_transpose, dual, natural_map, reflexivity_flags};
use reflexa::random::{random_max_ideal_element, rng, RandomShape};
use reflexa::{
    classify, direct_sum, ext_lengths, free, min_resolution, ArtinianAlgebra, Field, ModuleMap, Monomial, Poly,
    Presentation, RealizedModule,
};

const BUDGET: usize = 100_000;
const FIELDS: [Field; 3] = [Field::Rational, Field::Fp(2), Field::Fp(101)];

fn xy() -> Arc<[String]> {
    vec!["x".to_string(), "y".to_string()].into()
}

type Terms = Vec<(Vec<u32>, i64, i64)>;

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((prop::collection::vec(0u32..4, 3), -6i64..=6, 1i64..=4), 0..5)
}

/// `num/den · x^e` summed, with exponents truncated to the number of variables.
fn poly_from(field: Field, vars: &Arc<[String]>, t: &Terms) -> Poly {
    Poly::from_terms(
        field,
        vars.clone(),
        t.iter().map(|(e, n, d)| {
            let c = field.fraction(&BigInt::from(*n), &BigInt::from(*d)).unwrap_or_else(|_| field.zero());
            (Monomial::from_exponents(e[..vars.len()].to_vec()), c)
        }),
    )
}

fn module_case() -> impl Strategy<Value = (usize, u64)> {
    (0..RINGS.len(), any::<u64>())
}

fn random_module(ring_ix: usize, seed: u64) -> (Arc<ArtinianAlgebra>, Arc<RealizedModule>) {
    let alg = ring(RINGS[ring_ix]);
    let m = randoms(&alg, seed, 1).pop().unwrap();
    (alg, m)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn polynomial_ring_axioms(f in 0..3usize, a in terms(), b in terms(), c in terms()) {
        let field = FIELDS[f];
        let v = xy();
        let (a, b, c) = (poly_from(field, &v, &a), poly_from(field, &v, &b), poly_from(field, &v, &c));
        let ab_c = a.try_mul(&b).unwrap().try_mul(&c).unwrap();
        let a_bc = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let left = a.try_mul(&b.try_add(&c).unwrap()).unwrap();
        let right = a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(a.try_sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
    }

    #[test]
    fn printing_then_parsing_is_identity(f in 0..3usize, a in terms()) {
        let field = FIELDS[f];
        let v = xy();
        let p = poly_from(field, &v, &a);
        let back = Poly::parse(&p.to_string(), &v, field).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn nonzero_scalars_are_invertible(f in 0..3usize, n in -50i64..=50, d in 1i64..=50) {
        let field = FIELDS[f];
        let s = field.fraction(&BigInt::from(n), &BigInt::from(d));
        prop_assume!(s.is_ok());
        let s = s.unwrap();
        prop_assume!(!s.is_zero());
        prop_assert!(s.mul(&s.inv()).is_one());
    }

    #[test]
    fn normal_form_is_idempotent_and_multiplicative(r in 0..RINGS.len(), a in terms(), b in terms()) {
        let alg = ring(RINGS[r]);
        let (p, q) = (poly_from(alg.field(), alg.vars(), &a), poly_from(alg.field(), alg.vars(), &b));
        let (ep, eq) = (alg.element(&p).unwrap(), alg.element(&q).unwrap());
        prop_assert_eq!(alg.element(&alg.to_poly(&ep)).unwrap(), ep.clone());
        prop_assert_eq!(alg.element(&p.try_mul(&q).unwrap()).unwrap(), alg.mul(&ep, &eq));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn random_modules_are_modules((r, seed) in module_case()) {
        let (_, m) = random_module(r, seed);
        prop_assert!(m.check_actions().is_ok());
        prop_assert!(m.mu() <= m.length());
    }

    #[test]
    fn direct_sums_add((r, seed) in module_case()) {
        let alg = ring(RINGS[r]);
        let ms = randoms(&alg, seed, 2);
        let s = direct_sum(&ms[0], &ms[1]).unwrap();
        prop_assert_eq!(s.length(), ms[0].length() + ms[1].length());
        prop_assert_eq!(s.mu(), ms[0].mu() + ms[1].mu());
        prop_assert_eq!(dual(&s).length(), dual(&ms[0]).length() + dual(&ms[1]).length());
    }

    #[test]
    fn kernel_image_cokernel_are_exact((r, seed) in module_case(), var in 0usize..3) {
        let (alg, m) = random_module(r, seed);
        let act = m.actions()[var % alg.nvars()].clone();
        let f = ModuleMap::new(m.clone(), m.clone(), act).unwrap();
        let (k, inc) = f.kernel();
        let (im, _) = f.image();
        let (c, proj) = f.cokernel();
        prop_assert_eq!(k.length() + im.length(), m.length());
        prop_assert_eq!(c.length() + im.length(), m.length());
        prop_assert!(f.compose(&inc).unwrap().matrix().is_zero());
        prop_assert!(proj.compose(&f).unwrap().matrix().is_zero());
        prop_assert!(inc.is_injective() && proj.is_surjective());
    }

    #[test]
    fn adding_a_free_summand_is_detected((r, seed) in module_case()) {
        let (alg, m) = random_module(r, seed);
        prop_assert!(direct_sum(&m, &free(&alg, 1)).unwrap().has_free_summand());
    }

    #[test]
    fn nonzero_modules_have_nonzero_duals((r, seed) in module_case()) {
        let (_, m) = random_module(r, seed);
        prop_assume!(!m.is_zero());
        prop_assert!(dual(&m).length() > 0);
    }

    #[test]
    fn gorenstein_rings_make_every_module_reflexive(r in 0..2usize, seed in any::<u64>()) {
        let alg = ring(["gor415", "kxn:4"][r]);
        prop_assert!(alg.invariants().is_gorenstein);
        let m = randoms(&alg, seed, 1).pop().unwrap();
        prop_assert_eq!(dual(&m).length(), m.length());
        prop_assert!(reflexivity_flags(&m).reflexive);
    }

    #[test]
    fn torsionless_modules_embed_in_the_bidual((r, seed) in module_case()) {
        let (_, m) = random_module(r, seed);
        let flags = reflexivity_flags(&m);
        prop_assert_eq!(flags.torsionless, flags.phi_rank == m.length());
        if flags.torsionless {
            prop_assert!(m.length() <= flags.bidual_length);
        }
        if flags.reflexive {
            prop_assert!(flags.torsionless && flags.weakly_reflexive);
            prop_assert_eq!(m.length(), flags.bidual_length);
        }
    }

    #[test]
    fn resolutions_are_minimal_complexes((r, seed) in module_case()) {
        let (_, m) = random_module(r, seed);
        let res = min_resolution(&m, 4, BUDGET);
        prop_assert!(!res.partial);
        for d in &res.differentials {
            prop_assert!(d.is_minimal());
        }
        for w in res.differentials.windows(2) {
            prop_assert!(w[0].compose(&w[1]).is_zero());
        }
        prop_assert_eq!(res.betti[0], m.mu());
    }

    #[test]
    fn ext_zero_is_the_dual((r, seed) in module_case()) {
        let (_, m) = random_module(r, seed);
        let ext = ext_lengths(&m, 3, BUDGET);
        prop_assert_eq!(ext.lengths[0], dual(&m).length());
    }

    #[test]
    fn certified_rings_have_strictly_increasing_betti_numbers(r in 0..4usize, seed in any::<u64>()) {
        let alg = ring(["lam", "ex56", "power:2,3", "power:3,2"][r]);
        prop_assert!(alg.bnsi_certificate().is_true());
        let m = randoms(&alg, seed, 1).pop().unwrap();
        prop_assume!(!m.is_free());
        let res = min_resolution(&m, 5, BUDGET);
        for i in 2..res.betti.len() - 1 {
            prop_assert!(res.betti[i + 1] > res.betti[i], "{:?}", res.betti);
        }
        let ext = ext_lengths(&m, 4, BUDGET);
        for i in 2..=4 {
            prop_assert!(ext.lengths[i] > 0, "{:?}", ext.lengths);
        }
    }

    #[test]
    fn ideal_and_quotient_lengths_add_up((r, seed) in module_case()) {
        let alg = ring(RINGS[r]);
        let mut g = rng(seed);
        let gens: Vec<_> = (0..2)
            .map(|_| random_max_ideal_element(&alg, &mut g, &RandomShape::default()))
            .filter(|v| !v.is_zero())
            .collect();
        prop_assume!(!gens.is_empty());
        let polys: Vec<Poly> = gens.iter().map(|v| alg.to_poly(v)).collect();
        let i = reflexa::ideal(&alg, &polys).unwrap();
        let quotient = Presentation::from_columns(alg.clone(), 1, gens).realize();
        prop_assert_eq!(i.length() + quotient.length(), alg.length());
    }

    #[test]
    fn classification_is_closed_under_implications((r, seed) in module_case()) {
        let (_, m) = random_module(r, seed);
        let rep = classify(&m, 3, BUDGET).unwrap();
        prop_assert!(rep.check_closure().is_ok());
        prop_assert_eq!(rep.free.is_true(), m.is_free());
    }

    #[test]
    fn phi_kernel_and_cokernel_are_ext_of_the_transpose((r, seed) in module_case()) {
        let (_, m) = random_module(r, seed);
        let phi = natural_map(&m);
        let ext = ext_lengths(&aus_transpose(&m), 2, BUDGET);
        prop_assert_eq!(phi.kernel().0.length(), ext.lengths[1]);
        prop_assert_eq!(phi.cokernel().0.length(), ext.lengths[2]);
    }
}

#[test]
fn variable_actions_commute_and_are_nilpotent() {
    for id in RINGS {
        let alg = ring(id);
        let acts = alg.var_actions();
        for a in acts {
            for b in acts {
                assert_eq!(a.compose(b), b.compose(a), "{id}");
            }
            let mut p = a.clone();
            for _ in 0..alg.invariants().loewy {
                p = p.compose(a);
            }
            assert!(p.is_zero(), "{id}");
        }
    }
}
