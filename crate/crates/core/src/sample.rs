//! Seeded random generators for series, used by tests and the CLI demos.

use std::ops::RangeInclusive;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::laurent::TruncatedLaurent;
use crate::monoid::{MonoidElem, OrderedMonoid};
use crate::scalar::{Ring, Scalar};
use crate::series::Series;

pub const SEED_VAR: &str = "GPS_RB_SEED";

/// RNG seeded from `GPS_RB_SEED` when set and numeric, else from `default`.
pub fn rng_from_env(default: u64) -> ChaCha8Rng {
    let seed = std::env::var(SEED_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default);
    ChaCha8Rng::seed_from_u64(seed)
}

/// Scalar with numerator in `[-bound, bound]`; rationals get a denominator in `1..=bound`.
pub fn random_scalar(rng: &mut impl Rng, ring: Ring, bound: i64) -> Scalar {
    let bound = bound.max(1);
    let num = rng.gen_range(-bound..=bound);
    match ring {
        Ring::Rational => ring
            .from_fraction(num.into(), rng.gen_range(1..=bound).into())
            .expect("nonzero denominator"),
        _ => ring.from_i64(num),
    }
}

/// Element of `monoid` with coordinates in `[-bound, bound]` (clamped to the carrier).
pub fn random_elem(rng: &mut impl Rng, monoid: &OrderedMonoid, bound: i64) -> MonoidElem {
    match monoid {
        OrderedMonoid::IntLine => MonoidElem::Int(rng.gen_range(-bound..=bound)),
        OrderedMonoid::NatLine => MonoidElem::Int(rng.gen_range(0..=bound.max(0))),
        OrderedMonoid::VectorProduct(d) | OrderedMonoid::VectorLex(d) => {
            MonoidElem::Vector((0..*d).map(|_| rng.gen_range(-bound..=bound)).collect())
        }
        OrderedMonoid::FiniteTable(t) => MonoidElem::Index(rng.gen_range(0..t.size())),
    }
}

/// Series with up to `max_terms` terms, exponents within `bound`.
pub fn random_series(
    rng: &mut impl Rng,
    monoid: &Arc<OrderedMonoid>,
    ring: Ring,
    max_terms: usize,
    bound: i64,
) -> Series {
    let n = rng.gen_range(0..=max_terms);
    let terms: Vec<_> = (0..n)
        .map(|_| (random_elem(rng, monoid, bound), random_scalar(rng, ring, 5)))
        .collect();
    Series::from_terms(Arc::clone(monoid), ring, terms).expect("elements drawn from the carrier")
}

/// Truncated Laurent series with `ord` drawn from `ords` and truncation
/// point drawn from `truncs` (raised to `ord` if it falls below).
pub fn random_laurent(
    rng: &mut impl Rng,
    ring: Ring,
    ords: RangeInclusive<i64>,
    truncs: RangeInclusive<i64>,
) -> TruncatedLaurent {
    let ord = rng.gen_range(ords);
    let trunc = rng.gen_range(truncs).max(ord);
    let coeffs = (ord..trunc).map(|_| random_scalar(rng, ring, 5)).collect();
    TruncatedLaurent::new(ring, ord, coeffs, trunc).expect("shape fits")
}
