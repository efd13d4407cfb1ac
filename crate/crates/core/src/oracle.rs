//! Exhaustive checks of the decomposition and cut-off criteria on finite
//! monoids and finite windows.

use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::monoid::{FiniteTable, MonoidElem, OrderedMonoid, Window};
use crate::outcome::CheckOutcome;
use crate::rb::{self, Decomposition, Pair, Part, Projector, RbError};
use crate::scalar::Ring;

/// Largest table enumerated by default (2^12 decompositions).
pub const DEFAULT_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Rb(#[from] RbError),
    #[error("theorem verification needs a finite table monoid, got {0}")]
    NotFinite(String),
    #[error("TooLarge: {n} elements exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("monoid fails validation: {0}")]
    Invalid(CheckOutcome),
    #[error("NotTotalOrder: {0} and {1} are incomparable")]
    NotTotalOrder(MonoidElem, MonoidElem),
    #[error("set criterion and defect criterion disagree at w = {0}")]
    Inconsistent(MonoidElem),
}

impl From<crate::monoid::MonoidError> for OracleError {
    fn from(e: crate::monoid::MonoidError) -> Self {
        OracleError::Rb(e.into())
    }
}

/// Which side of the equivalence broke for a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    /// Both parts closed, yet some indicator pair has nonzero defect.
    ClosedButNotRb,
    /// Defect vanishes everywhere, yet a part is not closed.
    RbButNotClosed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub mask: u64,
    pub direction: Direction,
}

/// Both verdicts for one decomposition of a finite monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionVerdict {
    /// Bit `i` set means element `i` is in `S1`.
    pub mask: u64,
    pub s1_violation: Option<Pair>,
    pub s2_violation: Option<Pair>,
    /// First indicator pair with nonzero defect.
    pub defect_pair: Option<Pair>,
}

impl DecompositionVerdict {
    pub fn parts_closed(&self) -> bool {
        self.s1_violation.is_none() && self.s2_violation.is_none()
    }

    pub fn is_rb(&self) -> bool {
        self.defect_pair.is_none()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub monoid: serde_json::Value,
    pub decompositions_total: u64,
    pub rb_count: u64,
    pub mismatches: Vec<Mismatch>,
    pub verdicts: Vec<DecompositionVerdict>,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "decompositions: {}", self.decompositions_total)?;
        writeln!(f, "rota-baxter:    {}", self.rb_count)?;
        writeln!(f, "mismatches:     {}", self.mismatches.len())?;
        writeln!(f, "elapsed:        {:.3} ms", self.elapsed.as_secs_f64() * 1000.0)?;
        writeln!(f)?;
        writeln!(f, "{:<10} {:<8} {:<8} {:<4}", "mask", "S1", "S2", "RB")?;
        for v in &self.verdicts {
            let closed = |w: &Option<Pair>| match w {
                None => "closed".to_string(),
                Some((u, v)) => format!("({u},{v})"),
            };
            writeln!(
                f,
                "{:<10} {:<8} {:<8} {:<4}",
                format!("{:#b}", v.mask),
                closed(&v.s1_violation),
                closed(&v.s2_violation),
                if v.is_rb() { "yes" } else { "no" }
            )?;
        }
        for m in &self.mismatches {
            writeln!(f, "MISMATCH mask {:#b}: {:?}", m.mask, m.direction)?;
        }
        Ok(())
    }
}

fn pair_of(outcome: CheckOutcome) -> Option<Pair> {
    outcome.witness().map(|w| (w.elements[0].clone(), w.elements[1].clone()))
}

/// Runs both criteria on every decomposition of a finite monoid, with
/// rational coefficients and the default size limit.
pub fn verify_theorem_decomposition(monoid: &Arc<OrderedMonoid>) -> Result<TheoremReport, OracleError> {
    verify_theorem_decomposition_with(monoid, Ring::Rational, DEFAULT_LIMIT)
}

/// For each of the `2^n` bitmasks: (a) are both parts closed under
/// addition, (b) does the defect vanish on all `n^2` indicator pairs.
/// Records every mask where (a) and (b) differ.
pub fn verify_theorem_decomposition_with(
    monoid: &Arc<OrderedMonoid>,
    ring: Ring,
    limit: usize,
) -> Result<TheoremReport, OracleError> {
    let start = Instant::now();
    let table = monoid
        .as_table()
        .ok_or_else(|| OracleError::NotFinite(monoid.to_string()))?;
    let n = table.size();
    if n > limit || n >= 64 {
        return Err(OracleError::TooLarge { n, limit });
    }
    let validity = monoid.validate()?;
    if validity.is_fail() {
        return Err(OracleError::Invalid(validity));
    }
    let carrier = Window::carrier(table);
    let total = 1u64 << n;

    let verdicts = (0..total)
        .into_par_iter()
        .map(|mask| {
            let d = Decomposition::from_bitmask(Arc::clone(monoid), mask)?;
            let s1 = rb::is_subsemigroup(&d, Part::S1, &carrier)?;
            let s2 = rb::is_subsemigroup(&d, Part::S2, &carrier)?;
            let p = Projector::Decomp(d);
            let defect = rb::indicator_scan(&p, ring, &carrier)?;
            Ok(DecompositionVerdict {
                mask,
                s1_violation: pair_of(s1),
                s2_violation: pair_of(s2),
                defect_pair: defect.map(|w| (w.u, w.v)),
            })
        })
        .collect::<Result<Vec<_>, RbError>>()?;

    let mismatches = verdicts
        .iter()
        .filter(|v| v.parts_closed() != v.is_rb())
        .map(|v| Mismatch {
            mask: v.mask,
            direction: if v.parts_closed() {
                Direction::ClosedButNotRb
            } else {
                Direction::RbButNotClosed
            },
        })
        .collect();
    let rb_count = verdicts.iter().filter(|v| v.is_rb()).count() as u64;

    Ok(TheoremReport {
        monoid: monoid.to_json_value(),
        decompositions_total: total,
        rb_count,
        mismatches,
        verdicts,
        elapsed: start.elapsed(),
    })
}

/// Cut-off verdict at one point `w`, from both criteria.
#[derive(Debug, Clone, Serialize)]
pub struct CutoffVerdict {
    pub w: MonoidElem,
    pub a_w: Vec<Pair>,
    pub b_w: Vec<Pair>,
    pub defect_pair: Option<Pair>,
    pub outcome: CheckOutcome,
}

impl CutoffVerdict {
    /// `A_w` and `B_w` are empty on the window.
    pub fn is_rb(&self) -> bool {
        self.a_w.is_empty() && self.b_w.is_empty()
    }
}

/// For each `w`, computes `A_w`, `B_w` over the window and independently
/// evaluates the defect of `P_w` on all indicator pairs from the window.
/// Errors with [`OracleError::Inconsistent`] if the two disagree.
pub fn scan_cutoffs(
    monoid: &Arc<OrderedMonoid>,
    w_set: &[MonoidElem],
    window: &Window,
) -> Result<Vec<CutoffVerdict>, OracleError> {
    w_set
        .par_iter()
        .map(|w| {
            let (a_w, b_w) = rb::compute_aw_bw(monoid, w, window)?;
            let p = Projector::cutoff(Arc::clone(monoid), w.clone())?;
            let defect_pair = rb::indicator_scan(&p, Ring::Rational, window)?.map(|d| (d.u, d.v));
            let set_rb = a_w.is_empty() && b_w.is_empty();
            if set_rb != defect_pair.is_none() {
                return Err(OracleError::Inconsistent(w.clone()));
            }
            let outcome = match (a_w.first(), b_w.first()) {
                (Some((u, v)), _) => CheckOutcome::fail("A_w", vec![u.clone(), v.clone()]),
                (None, Some((u, v))) => CheckOutcome::fail("B_w", vec![u.clone(), v.clone()]),
                (None, None) if window.covers(monoid) => CheckOutcome::Pass,
                (None, None) => CheckOutcome::PassOnWindow {
                    window: window.label().to_string(),
                },
            };
            Ok(CutoffVerdict {
                w: w.clone(),
                a_w,
                b_w,
                defect_pair,
                outcome,
            })
        })
        .collect()
}

/// On a totally ordered monoid, checks `A_w = ∅ ⟺ w >= 0` over the window
/// for each `w`.
pub fn verify_cor_strict(
    monoid: &OrderedMonoid,
    w_set: &[MonoidElem],
    window: &Window,
) -> Result<CheckOutcome, OracleError> {
    let mut all: Vec<MonoidElem> = window.elements().to_vec();
    all.extend(w_set.iter().cloned());
    if let Some((a, b)) = monoid.incomparable_pair(&all)? {
        return Err(OracleError::NotTotalOrder(a, b));
    }
    let zero = monoid.zero();
    for w in w_set {
        let (a_w, _) = rb::compute_aw_bw(monoid, w, window)?;
        let nonnegative = monoid.leq(&zero, w)?;
        if a_w.is_empty() != nonnegative {
            let mut elements = vec![w.clone()];
            if let Some((u, v)) = a_w.first() {
                elements.extend([u.clone(), v.clone()]);
            }
            return Ok(CheckOutcome::fail("A_w empty iff w >= 0", elements));
        }
    }
    Ok(if window.covers(monoid) {
        CheckOutcome::Pass
    } else {
        CheckOutcome::PassOnWindow {
            window: window.label().to_string(),
        }
    })
}

/// Largest table whose order relations [`valid_strict_orders`] enumerates
/// (`2^(n(n-1))` candidate relations).
pub const ORDER_ENUM_LIMIT: usize = 5;

/// Every order matrix on the table's carrier that passes validation
/// (partial order, strictly compatible with addition), discrete order first.
pub fn valid_strict_orders(table: &FiniteTable) -> Result<Vec<FiniteTable>, OracleError> {
    let n = table.size();
    if n > ORDER_ENUM_LIMIT {
        return Err(OracleError::TooLarge { n, limit: ORDER_ENUM_LIMIT });
    }
    let off_diagonal: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..(1 << off_diagonal.len()) {
        let mut leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| a == b).collect()).collect();
        for (k, &(a, b)) in off_diagonal.iter().enumerate() {
            leq[a][b] = bits >> k & 1 == 1;
        }
        let candidate = table.with_order(leq)?;
        if OrderedMonoid::FiniteTable(candidate.clone()).validate()?.passed() {
            out.push(candidate);
        }
    }
    Ok(out)
}

/// The finite monoids every theorem check runs over: `Z/n` for `n <= 6`,
/// truncated addition on `{0..m}` for `m <= 4`, and `{0, e}` with `e + e = e`.
pub fn default_corpus() -> Vec<(String, FiniteTable)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push((format!("Z/{n}"), FiniteTable::cyclic(n)));
    }
    for m in 1..=4 {
        out.push((format!("truncated {{0..{m}}}"), FiniteTable::truncated(m)));
    }
    out.push(("idempotent {0, e}".to_string(), FiniteTable::idempotent_pair()));
    out
}
