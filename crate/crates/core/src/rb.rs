//! Rota-Baxter projectors on generalized power series.
//!
//! A decomposition `S = S1 ⊔ S2` of the exponent monoid induces the
//! projector keeping the `S1` part of a series. It satisfies the weight -1
//! Rota-Baxter identity
//!
//! ```text
//! P(f)P(g) = P(f P(g)) + P(P(f) g) - P(fg)
//! ```
//!
//! exactly when both parts are closed under addition. The cut-off at `w`
//! is the special case `S1 = {s : s < w}`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::monoid::{MonoidElem, MonoidError, OrderedMonoid, Window};
use crate::outcome::CheckOutcome;
use crate::scalar::Ring;
use crate::series::{Series, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RbError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error("MonoidMismatch: projector on {0}, series on {1}")]
    MonoidMismatch(String, String),
    #[error("unknown decomposition {0:?}")]
    UnknownDecomposition(String),
    #[error("decomposition {name} needs an integer exponent monoid, not {monoid}")]
    Unsupported { name: String, monoid: String },
    #[error("mask has {got} entries, monoid has {expected} elements")]
    MaskSize { expected: usize, got: usize },
}

/// Membership rule for the first part `S1`; everything else is `S2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Negatives,
    NonNegatives,
    Positives,
    NonPositives,
    Evens,
    Odds,
    /// `{s : s < w}`.
    Below(MonoidElem),
    /// `{s : s ≮ w}`.
    NotBelow(MonoidElem),
    /// Explicit indicator over the elements of a finite table.
    Mask(Vec<bool>),
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Membership::Negatives => write!(f, "negatives"),
            Membership::NonNegatives => write!(f, "nonnegatives"),
            Membership::Positives => write!(f, "positives"),
            Membership::NonPositives => write!(f, "nonpositives"),
            Membership::Evens => write!(f, "evens"),
            Membership::Odds => write!(f, "odds"),
            Membership::Below(w) => write!(f, "below({w})"),
            Membership::NotBelow(w) => write!(f, "notbelow({w})"),
            Membership::Mask(bits) => {
                write!(f, "mask:")?;
                for b in bits {
                    write!(f, "{}", u8::from(*b))?;
                }
                Ok(())
            }
        }
    }
}

/// A disjoint union `S = S1 ⊔ S2`. Every element lands in exactly one
/// part because `S2` is defined as the complement of `S1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    monoid: Arc<OrderedMonoid>,
    membership: Membership,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    S1,
    S2,
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Part::S1 => write!(f, "S1"),
            Part::S2 => write!(f, "S2"),
        }
    }
}

impl Decomposition {
    pub fn new(monoid: Arc<OrderedMonoid>, membership: Membership) -> Result<Self, RbError> {
        let integer_line = matches!(*monoid, OrderedMonoid::IntLine | OrderedMonoid::NatLine);
        match &membership {
            Membership::Below(w) | Membership::NotBelow(w) => monoid.check(w)?,
            Membership::Mask(bits) => match monoid.as_table() {
                Some(t) if t.size() == bits.len() => {}
                Some(t) => {
                    return Err(RbError::MaskSize {
                        expected: t.size(),
                        got: bits.len(),
                    })
                }
                None => {
                    return Err(RbError::Unsupported {
                        name: membership.to_string(),
                        monoid: monoid.to_string(),
                    })
                }
            },
            _ if !integer_line => {
                return Err(RbError::Unsupported {
                    name: membership.to_string(),
                    monoid: monoid.to_string(),
                })
            }
            _ => {}
        }
        Ok(Decomposition { monoid, membership })
    }

    /// Decomposition of a finite table from a bitmask: bit `i` set puts
    /// element `i` into `S1`.
    pub fn from_bitmask(monoid: Arc<OrderedMonoid>, mask: u64) -> Result<Self, RbError> {
        let n = monoid
            .as_table()
            .map(|t| t.size())
            .ok_or_else(|| RbError::Unsupported {
                name: format!("bitmask {mask:#b}"),
                monoid: monoid.to_string(),
            })?;
        let bits = (0..n).map(|i| mask >> i & 1 == 1).collect();
        Decomposition::new(monoid, Membership::Mask(bits))
    }

    /// Parses the decomposition vocabulary: `negatives`, `nonnegatives`,
    /// `positives`, `nonpositives`, `evens`, `odds`, `below(w)`,
    /// `notbelow(w)` and `mask:<bits>` (bit `i` is element `i`).
    pub fn parse(monoid: Arc<OrderedMonoid>, text: &str) -> Result<Self, RbError> {
        let text = text.trim();
        let unknown = || RbError::UnknownDecomposition(text.to_string());
        let membership = match text {
            "negatives" => Membership::Negatives,
            "nonnegatives" => Membership::NonNegatives,
            "positives" => Membership::Positives,
            "nonpositives" => Membership::NonPositives,
            "evens" => Membership::Evens,
            "odds" => Membership::Odds,
            _ => {
                if let Some(bits) = text.strip_prefix("mask:") {
                    let bits = bits
                        .chars()
                        .map(|c| match c {
                            '0' => Ok(false),
                            '1' => Ok(true),
                            _ => Err(unknown()),
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    Membership::Mask(bits)
                } else {
                    let (name, arg) = text
                        .strip_suffix(')')
                        .and_then(|t| t.split_once('('))
                        .ok_or_else(unknown)?;
                    let parts = arg
                        .split(',')
                        .map(|p| p.trim().parse::<i64>().map_err(|_| unknown()))
                        .collect::<Result<Vec<_>, _>>()?;
                    let w = monoid.elem_from_ints(&parts)?;
                    match name.trim() {
                        "below" => Membership::Below(w),
                        "notbelow" => Membership::NotBelow(w),
                        _ => return Err(unknown()),
                    }
                }
            }
        };
        Decomposition::new(monoid, membership)
    }

    /// Reads `{"s1": [elements...]}` for a finite table.
    pub fn from_json(monoid: Arc<OrderedMonoid>, value: &serde_json::Value) -> Result<Self, RbError> {
        let n = monoid.as_table().map(|t| t.size()).ok_or_else(|| RbError::Unsupported {
            name: "explicit set".into(),
            monoid: monoid.to_string(),
        })?;
        let items = value
            .get("s1")
            .and_then(|v| v.as_array())
            .ok_or_else(|| RbError::UnknownDecomposition(value.to_string()))?;
        let mut bits = vec![false; n];
        for item in items {
            match monoid.elem_from_json(item)? {
                MonoidElem::Index(i) => bits[i] = true,
                other => return Err(MonoidError::BadElement(other.to_string()).into()),
            }
        }
        Decomposition::new(monoid, Membership::Mask(bits))
    }

    pub fn monoid(&self) -> &Arc<OrderedMonoid> {
        &self.monoid
    }

    pub fn membership(&self) -> &Membership {
        &self.membership
    }

    pub fn in_s1(&self, s: &MonoidElem) -> Result<bool, RbError> {
        self.monoid.check(s)?;
        let int = || s.as_int().expect("integer monoid");
        Ok(match &self.membership {
            Membership::Negatives => int() < 0,
            Membership::NonNegatives => int() >= 0,
            Membership::Positives => int() > 0,
            Membership::NonPositives => int() <= 0,
            Membership::Evens => int().rem_euclid(2) == 0,
            Membership::Odds => int().rem_euclid(2) == 1,
            Membership::Below(w) => self.monoid.lt(s, w)?,
            Membership::NotBelow(w) => !self.monoid.lt(s, w)?,
            Membership::Mask(bits) => match s {
                MonoidElem::Index(i) => bits[*i],
                _ => unreachable!("checked membership in a table"),
            },
        })
    }

    pub fn in_part(&self, part: Part, s: &MonoidElem) -> Result<bool, RbError> {
        Ok(self.in_s1(s)? == (part == Part::S1))
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.membership, self.monoid)
    }
}

/// A linear operator on series that keeps some coefficients and zeroes the
/// rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Projector {
    Decomp(Decomposition),
    /// `P_w`: keeps exponents `s < w`.
    Cutoff {
        monoid: Arc<OrderedMonoid>,
        w: MonoidElem,
    },
    /// `id - P`.
    Complement(Box<Projector>),
}

impl Projector {
    pub fn cutoff(monoid: Arc<OrderedMonoid>, w: MonoidElem) -> Result<Self, RbError> {
        monoid.check(&w)?;
        Ok(Projector::Cutoff { monoid, w })
    }

    pub fn complement(self) -> Self {
        Projector::Complement(Box::new(self))
    }

    pub fn monoid(&self) -> &Arc<OrderedMonoid> {
        match self {
            Projector::Decomp(d) => d.monoid(),
            Projector::Cutoff { monoid, .. } => monoid,
            Projector::Complement(p) => p.monoid(),
        }
    }

    /// Whether `P(e_s) = e_s` (as opposed to `P(e_s) = 0`).
    pub fn keeps(&self, s: &MonoidElem) -> Result<bool, RbError> {
        match self {
            Projector::Decomp(d) => d.in_s1(s),
            Projector::Cutoff { monoid, w } => Ok(monoid.lt(s, w)?),
            Projector::Complement(p) => Ok(!p.keeps(s)?),
        }
    }

    /// The decomposition this projector is induced by.
    pub fn decomposition(&self) -> Result<Decomposition, RbError> {
        match self {
            Projector::Decomp(d) => Ok(d.clone()),
            Projector::Cutoff { monoid, w } => {
                Decomposition::new(Arc::clone(monoid), Membership::Below(w.clone()))
            }
            Projector::Complement(p) => {
                let inner = p.decomposition()?;
                let flipped = match inner.membership {
                    Membership::Negatives => Membership::NonNegatives,
                    Membership::NonNegatives => Membership::Negatives,
                    Membership::Positives => Membership::NonPositives,
                    Membership::NonPositives => Membership::Positives,
                    Membership::Evens => Membership::Odds,
                    Membership::Odds => Membership::Evens,
                    Membership::Below(w) => Membership::NotBelow(w),
                    Membership::NotBelow(w) => Membership::Below(w),
                    Membership::Mask(bits) => Membership::Mask(bits.iter().map(|b| !b).collect()),
                };
                Decomposition::new(inner.monoid, flipped)
            }
        }
    }

    fn check_series(&self, f: &Series) -> Result<(), RbError> {
        let m = self.monoid();
        if !Arc::ptr_eq(m, f.monoid()) && **m != **f.monoid() {
            return Err(RbError::MonoidMismatch(m.to_string(), f.monoid().to_string()));
        }
        Ok(())
    }

    /// Coefficientwise projection. The complement is computed literally as
    /// `f - P(f)`.
    pub fn apply(&self, f: &Series) -> Result<Series, RbError> {
        self.check_series(f)?;
        match self {
            Projector::Complement(p) => Ok(f.sub(&p.apply(f)?)?),
            _ => f.filter(|s| self.keeps(s)),
        }
    }
}

impl fmt::Display for Projector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Projector::Decomp(d) => write!(f, "P[{}]", d.membership()),
            Projector::Cutoff { w, .. } => write!(f, "P_{w}"),
            Projector::Complement(p) => write!(f, "(id - {p})"),
        }
    }
}

/// The four terms of the identity, evaluated independently.
#[derive(Debug, Clone)]
pub struct RbTerms {
    /// `P(f) P(g)`
    pub lhs: Series,
    /// `P(f P(g))`
    pub right_inner: Series,
    /// `P(P(f) g)`
    pub left_inner: Series,
    /// `P(fg)`
    pub product: Series,
}

impl RbTerms {
    pub fn defect(&self) -> Result<Series, RbError> {
        Ok(self
            .lhs
            .sub(&self.right_inner)?
            .sub(&self.left_inner)?
            .add(&self.product)?)
    }
}

pub fn rb_terms(p: &Projector, f: &Series, g: &Series) -> Result<RbTerms, RbError> {
    let pf = p.apply(f)?;
    let pg = p.apply(g)?;
    Ok(RbTerms {
        lhs: pf.convolve(&pg)?,
        right_inner: p.apply(&f.convolve(&pg)?)?,
        left_inner: p.apply(&pf.convolve(g)?)?,
        product: p.apply(&f.convolve(g)?)?,
    })
}

/// `P(f)P(g) - P(f P(g)) - P(P(f) g) + P(fg)`; zero iff the identity holds
/// for this pair.
pub fn rb_defect(p: &Projector, f: &Series, g: &Series) -> Result<Series, RbError> {
    rb_terms(p, f, g)?.defect()
}

/// Closure of one part under addition, searched over `window`. The verdict
/// is conclusive (`Pass`) only when the window is a whole finite carrier.
pub fn is_subsemigroup(d: &Decomposition, part: Part, window: &Window) -> Result<CheckOutcome, RbError> {
    let members: Vec<&MonoidElem> = window
        .elements()
        .iter()
        .filter_map(|s| match d.in_part(part, s) {
            Ok(true) => Some(Ok(s)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<_, _>>()?;
    for u in &members {
        for v in &members {
            let sum = d.monoid().add(u, v)?;
            if !d.in_part(part, &sum)? {
                return Ok(CheckOutcome::fail(
                    format!("{part} not closed"),
                    vec![(*u).clone(), (*v).clone()],
                ));
            }
        }
    }
    if window.covers(d.monoid()) {
        Ok(CheckOutcome::Pass)
    } else {
        Ok(CheckOutcome::PassOnWindow {
            window: window.label().to_string(),
        })
    }
}

pub type Pair = (MonoidElem, MonoidElem);

/// Obstruction sets of the cut-off at `w`, restricted to `window`:
/// `A_w` holds pairs with `u ≮ w`, `v ≮ w` and `u + v < w`;
/// `B_w` holds pairs with `u < w`, `v < w` and `u + v ≮ w`.
pub fn compute_aw_bw(
    monoid: &OrderedMonoid,
    w: &MonoidElem,
    window: &Window,
) -> Result<(Vec<Pair>, Vec<Pair>), RbError> {
    monoid.check(w)?;
    let below: Vec<bool> = window
        .elements()
        .iter()
        .map(|s| monoid.lt(s, w))
        .collect::<Result<_, _>>()?;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (i, u) in window.elements().iter().enumerate() {
        for (j, v) in window.elements().iter().enumerate() {
            if below[i] != below[j] {
                continue;
            }
            let sum_below = monoid.lt(&monoid.add(u, v)?, w)?;
            match (below[i], sum_below) {
                (false, true) => a.push((u.clone(), v.clone())),
                (true, false) => b.push((u.clone(), v.clone())),
                _ => {}
            }
        }
    }
    Ok((a, b))
}

/// Whether `P(Q(f)) = Q(P(f))`.
pub fn commute_check(p: &Projector, q: &Projector, f: &Series) -> Result<bool, RbError> {
    let pq = p.apply(&q.apply(f)?)?;
    let qp = q.apply(&p.apply(f)?)?;
    Ok(pq.series_eq(&qp)?)
}

/// A nonzero defect on a pair of indicator series.
#[derive(Debug, Clone)]
pub struct DefectWitness {
    pub u: MonoidElem,
    pub v: MonoidElem,
    pub defect: Series,
}

/// Evaluates the defect on every indicator pair `(e_u, e_v)` from the
/// window and returns the first nonzero one. By bilinearity the defect
/// vanishes on all series supported in a set iff it vanishes on these pairs.
pub fn indicator_scan(p: &Projector, ring: Ring, window: &Window) -> Result<Option<DefectWitness>, RbError> {
    let monoid = p.monoid();
    let indicators = window
        .elements()
        .iter()
        .map(|s| Series::indicator(Arc::clone(monoid), ring, s.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    for (u, eu) in window.elements().iter().zip(&indicators) {
        for (v, ev) in window.elements().iter().zip(&indicators) {
            let defect = rb_defect(p, eu, ev)?;
            if !defect.is_empty() {
                return Ok(Some(DefectWitness {
                    u: u.clone(),
                    v: v.clone(),
                    defect,
                }));
            }
        }
    }
    Ok(None)
}

/// [`indicator_scan`] packaged as a verdict.
pub fn indicator_check(p: &Projector, ring: Ring, window: &Window) -> Result<CheckOutcome, RbError> {
    Ok(match indicator_scan(p, ring, window)? {
        Some(w) => CheckOutcome::fail("nonzero defect", vec![w.u, w.v]),
        None if window.covers(p.monoid()) => CheckOutcome::Pass,
        None => CheckOutcome::PassOnWindow {
            window: window.label().to_string(),
        },
    })
}

impl FromStr for Part {
    type Err = RbError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "S1" | "s1" => Ok(Part::S1),
            "S2" | "s2" => Ok(Part::S2),
            _ => Err(RbError::UnknownDecomposition(s.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::FiniteTable;
    use crate::scalar::make_rational;

    fn z() -> Arc<OrderedMonoid> {
        Arc::new(OrderedMonoid::IntLine)
    }

    fn zs(terms: &[(i64, i64)]) -> Series {
        Series::from_terms(
            z(),
            Ring::Rational,
            terms.iter().map(|&(e, c)| (MonoidElem::Int(e), make_rational(c, 1).unwrap())),
        )
        .unwrap()
    }

    fn decomp(name: &str) -> Projector {
        Projector::Decomp(Decomposition::parse(z(), name).unwrap())
    }

    #[test]
    fn apply_examples() {
        let f = zs(&[(-2, 1), (0, 3), (5, 7)]);
        let neg = decomp("negatives");
        assert_eq!(neg.apply(&f).unwrap(), zs(&[(-2, 1)]));
        assert_eq!(neg.apply(&zs(&[(-4, 1)])).unwrap(), zs(&[(-4, 1)]));
        assert_eq!(neg.clone().complement().apply(&f).unwrap(), zs(&[(0, 3), (5, 7)]));
        let cut = Projector::cutoff(z(), MonoidElem::Int(0)).unwrap();
        assert_eq!(cut.apply(&f).unwrap(), neg.apply(&f).unwrap());
    }

    #[test]
    fn apply_rejects_foreign_series() {
        let n = Series::one(Arc::new(OrderedMonoid::NatLine), Ring::Rational);
        assert!(matches!(decomp("evens").apply(&n), Err(RbError::MonoidMismatch(..))));
    }

    #[test]
    fn defect_examples() {
        let odds = decomp("odds");
        let e1 = zs(&[(1, 1)]);
        assert_eq!(rb_defect(&odds, &e1, &e1).unwrap(), zs(&[(2, 1)]));

        let neg = decomp("negatives");
        let f = zs(&[(-2, 1), (1, 1)]);
        let g = zs(&[(-1, 1), (3, 1)]);
        assert!(rb_defect(&neg, &f, &g).unwrap().is_empty());

        let zero = Series::zero(z(), Ring::Rational);
        assert!(rb_defect(&odds, &zero, &g).unwrap().is_empty());
    }

    #[test]
    fn defect_terms_by_hand() {
        // P = odds, f = g = e_1: P(f)P(g) = e_2, the other three project e_2
        // (even) to zero.
        let t = rb_terms(&decomp("odds"), &zs(&[(1, 1)]), &zs(&[(1, 1)])).unwrap();
        assert_eq!(t.lhs, zs(&[(2, 1)]));
        assert!(t.right_inner.is_empty());
        assert!(t.left_inner.is_empty());
        assert!(t.product.is_empty());
    }

    #[test]
    fn subsemigroup_examples() {
        let w = Window::range(&z(), -10, 10);
        let neg = Decomposition::parse(z(), "negatives").unwrap();
        assert!(matches!(is_subsemigroup(&neg, Part::S1, &w).unwrap(), CheckOutcome::PassOnWindow { .. }));
        let odds = Decomposition::parse(z(), "odds").unwrap();
        let out = is_subsemigroup(&odds, Part::S1, &w).unwrap();
        assert_eq!(out.witness().unwrap().elements, vec![MonoidElem::Int(1), MonoidElem::Int(1)]);

        let c3 = Arc::new(OrderedMonoid::FiniteTable(FiniteTable::cyclic(3)));
        let zero_only = Decomposition::from_bitmask(c3.clone(), 0b001).unwrap();
        let carrier = Window::carrier(c3.as_table().unwrap());
        assert_eq!(is_subsemigroup(&zero_only, Part::S1, &carrier).unwrap(), CheckOutcome::Pass);
        assert!(is_subsemigroup(&zero_only, Part::S2, &carrier).unwrap().is_fail());
    }

    #[test]
    fn aw_bw_examples() {
        let m = OrderedMonoid::IntLine;
        let w = Window::range(&m, -5, 5);
        let (a, _) = compute_aw_bw(&m, &MonoidElem::Int(-1), &w).unwrap();
        assert!(a.contains(&(MonoidElem::Int(-1), MonoidElem::Int(-1))));
        let (_, b) = compute_aw_bw(&m, &MonoidElem::Int(2), &w).unwrap();
        assert!(b.contains(&(MonoidElem::Int(1), MonoidElem::Int(1))));
        let (a, b) = compute_aw_bw(&m, &MonoidElem::Int(0), &w).unwrap();
        assert!(a.is_empty() && b.is_empty());
    }

    #[test]
    fn aw_bw_partial_order() {
        // Incomparable to (0,0) counts as "not below", and two such elements
        // can sum below it.
        let m = OrderedMonoid::VectorProduct(2);
        let w = Window::range(&m, -3, 3);
        let (a, b) = compute_aw_bw(&m, &MonoidElem::Vector(vec![0, 0]), &w).unwrap();
        assert!(a.contains(&(MonoidElem::Vector(vec![1, -2]), MonoidElem::Vector(vec![-2, 1]))));
        assert!(b.is_empty());
    }

    #[test]
    fn commute_examples() {
        let f = zs(&[(-3, 1), (-2, 2), (0, 5), (1, -1), (4, 3)]);
        let p = decomp("negatives");
        let q = decomp("evens");
        assert!(commute_check(&p, &q, &f).unwrap());
        assert!(commute_check(&p, &p, &f).unwrap());
        assert!(commute_check(&p, &p.clone().complement(), &f).unwrap());
    }

    #[test]
    fn vocabulary() {
        for name in ["negatives", "nonnegatives", "positives", "nonpositives", "evens", "odds", "below(3)", "notbelow(-1)"] {
            let d = Decomposition::parse(z(), name).unwrap();
            assert_eq!(d.membership().to_string(), name);
        }
        assert!(matches!(Decomposition::parse(z(), "primes"), Err(RbError::UnknownDecomposition(_))));
        assert!(Decomposition::parse(z(), "below(1,2)").is_err());
        let v = Arc::new(OrderedMonoid::VectorProduct(2));
        assert!(matches!(Decomposition::parse(v.clone(), "evens"), Err(RbError::Unsupported { .. })));
        assert!(Decomposition::parse(v, "below(0,0)").is_ok());
        let c3 = Arc::new(OrderedMonoid::FiniteTable(FiniteTable::cyclic(3)));
        assert!(Decomposition::parse(c3.clone(), "mask:101").is_ok());
        assert!(matches!(Decomposition::parse(c3.clone(), "mask:10"), Err(RbError::MaskSize { .. })));
        let d = Decomposition::from_json(c3, &serde_json::json!({"s1": [0, 2]})).unwrap();
        assert_eq!(d.membership(), &Membership::Mask(vec![true, false, true]));
    }

    #[test]
    fn complement_decomposition() {
        let p = decomp("odds").complement();
        let d = p.decomposition().unwrap();
        assert_eq!(d.membership(), &Membership::Evens);
        let cut = Projector::cutoff(z(), MonoidElem::Int(2)).unwrap().complement();
        assert_eq!(cut.decomposition().unwrap().membership(), &Membership::NotBelow(MonoidElem::Int(2)));
    }

    #[test]
    fn indicator_scan_finds_odd_witness() {
        let w = Window::range(&z(), 0, 6);
        let hit = indicator_scan(&decomp("odds"), Ring::Rational, &w).unwrap().unwrap();
        assert_eq!((hit.u.clone(), hit.v.clone()), (MonoidElem::Int(1), MonoidElem::Int(1)));
        assert_eq!(hit.defect, zs(&[(2, 1)]));
        assert!(indicator_scan(&decomp("negatives"), Ring::Rational, &Window::range(&z(), -6, 6))
            .unwrap()
            .is_none());
    }
}
