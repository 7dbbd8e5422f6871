//! Seeded random presentations with entries in the maximal ideal.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::ArtinianAlgebra;
use crate::linalg::SVec;
use crate::module::{Presentation, RealizedModule};

/// Presentation shape and entry density.
#[derive(Clone, Copy, Debug)]
pub struct RandomShape {
    pub max_rows: usize,
    pub max_cols: usize,
    /// Largest absolute coefficient.
    pub coeff: i64,
    /// Probability that a monomial appears in an entry.
    pub density: f64,
}

impl Default for RandomShape {
    fn default() -> Self {
        RandomShape { max_rows: 3, max_cols: 3, coeff: 2, density: 0.4 }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An element of `𝔪` with small integer coefficients.
pub fn random_max_ideal_element(alg: &ArtinianAlgebra, rng: &mut impl Rng, shape: &RandomShape) -> SVec {
    let field = alg.field();
    SVec::from_entries((1..alg.length()).filter_map(|a| {
        if !rng.gen_bool(shape.density) {
            return None;
        }
        let c = rng.gen_range(-shape.coeff..=shape.coeff);
        (c != 0).then(|| (a, field.from_i64(c)))
    }))
}

pub fn random_presentation(alg: &Arc<ArtinianAlgebra>, rng: &mut impl Rng, shape: &RandomShape) -> Presentation {
    let len = alg.length();
    let rows = rng.gen_range(1..=shape.max_rows);
    let cols = rng.gen_range(1..=shape.max_cols);
    let columns = (0..cols)
        .map(|_| {
            let mut parts = Vec::new();
            for i in 0..rows {
                let e = random_max_ideal_element(alg, rng, shape);
                parts.extend(e.shifted(i * len).iter().map(|(x, c)| (x, c.clone())));
            }
            SVec::from_entries(parts)
        })
        .collect();
    Presentation::from_columns(alg.clone(), rows, columns)
}

/// `count` modules from `seed`, reproducibly.
pub fn random_modules(alg: &Arc<ArtinianAlgebra>, seed: u64, count: usize, shape: &RandomShape) -> Vec<Arc<RealizedModule>> {
    let mut r = rng(seed);
    (0..count).map(|_| random_presentation(alg, &mut r, shape).realize()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;
    use crate::scalar::Field;

    #[test]
    fn reproducible_and_valid() {
        let alg =
            ArtinianAlgebra::from_strings(Field::Rational, &["x", "y"], &["x^2", "x*y", "y^3"], MonomialOrder::GrevLex)
                .unwrap();
        let a = random_modules(&alg, 7, 10, &RandomShape::default());
        let b = random_modules(&alg, 7, 10, &RandomShape::default());
        for (m, n) in a.iter().zip(&b) {
            assert_eq!(m.length(), n.length());
            assert_eq!(m.actions(), n.actions());
            assert!(m.check_actions().is_ok());
        }
    }
}
