//! Truncated Laurent series `sum_{n >= ord} a_n e^n + O(e^trunc)`.
//!
//! Coefficients are known exactly for `ord <= n < trunc`. A series flagged
//! exact has all coefficients at `n >= trunc` equal to zero, which is what
//! the pole-part projector produces: its output is fully determined even
//! when its input is truncated.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::monoid::{MonoidElem, OrderedMonoid};
use crate::scalar::{Ring, Scalar, ScalarError};
use crate::series::{render_term, Series};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("InsufficientPrecision: coefficients are only known below e^{trunc}, need all negative exponents")]
    InsufficientPrecision { trunc: i64 },
    #[error("{len} coefficients do not fit between e^{ord} and e^{trunc}")]
    Shape { ord: i64, trunc: i64, len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedLaurent {
    ring: Ring,
    ord: i64,
    coeffs: Vec<Scalar>,
    trunc: i64,
    exact: bool,
}

impl TruncatedLaurent {
    /// Coefficients for `e^ord .. e^(trunc-1)`, unknown from `e^trunc` on.
    pub fn new(ring: Ring, ord: i64, coeffs: Vec<Scalar>, trunc: i64) -> Result<Self, LaurentError> {
        Self::build(ring, ord, coeffs, trunc, false)
    }

    /// A Laurent polynomial: every coefficient outside `coeffs` is zero.
    pub fn exact(ring: Ring, ord: i64, coeffs: Vec<Scalar>) -> Result<Self, LaurentError> {
        let trunc = ord + coeffs.len() as i64;
        Self::build(ring, ord, coeffs, trunc, true)
    }

    /// `O(e^n)`.
    pub fn big_o(ring: Ring, n: i64) -> Self {
        TruncatedLaurent {
            ring,
            ord: n,
            coeffs: Vec::new(),
            trunc: n,
            exact: false,
        }
    }

    pub fn zero(ring: Ring) -> Self {
        TruncatedLaurent {
            ring,
            ord: 0,
            coeffs: Vec::new(),
            trunc: 0,
            exact: true,
        }
    }

    /// Sparse constructor: the listed terms, zero elsewhere below `trunc`
    /// (`None` for an exact polynomial). Terms at or above `trunc` are dropped.
    pub fn from_terms(
        ring: Ring,
        terms: &[(i64, Scalar)],
        trunc: Option<i64>,
    ) -> Result<Self, LaurentError> {
        let lo = terms.iter().map(|t| t.0).min();
        let hi = terms.iter().map(|t| t.0 + 1).max();
        let (ord, end) = match (lo, trunc) {
            (Some(lo), Some(t)) => (lo.min(t), t),
            (Some(lo), None) => (lo, hi.expect("nonempty")),
            (None, Some(t)) => (t, t),
            (None, None) => return Ok(Self::zero(ring)),
        };
        let mut coeffs = vec![ring.zero(); (end - ord) as usize];
        for (n, c) in terms {
            if *n >= end {
                continue;
            }
            let slot = &mut coeffs[(n - ord) as usize];
            *slot = slot.try_add(c)?;
        }
        Self::build(ring, ord, coeffs, end, trunc.is_none())
    }

    fn build(ring: Ring, ord: i64, coeffs: Vec<Scalar>, trunc: i64, exact: bool) -> Result<Self, LaurentError> {
        if ord > trunc || (trunc - ord) as usize != coeffs.len() {
            return Err(LaurentError::Shape {
                ord,
                trunc,
                len: coeffs.len(),
            });
        }
        if let Some(c) = coeffs.iter().find(|c| c.ring() != ring) {
            return Err(ScalarError::RingMismatch(ring, c.ring()).into());
        }
        let mut out = TruncatedLaurent {
            ring,
            ord,
            coeffs,
            trunc,
            exact,
        };
        out.normalize();
        Ok(out)
    }

    /// Advances `ord` past leading zeros. Exact series also drop trailing
    /// zeros, and the exact zero is stored as `ord = trunc = 0`.
    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        self.coeffs.drain(..lead);
        self.ord += lead as i64;
        if self.exact {
            while self.coeffs.last().is_some_and(|c| c.is_zero()) {
                self.coeffs.pop();
            }
            self.trunc = self.ord + self.coeffs.len() as i64;
            if self.coeffs.is_empty() {
                self.ord = 0;
                self.trunc = 0;
            }
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Lowest possibly nonzero exponent.
    pub fn ord(&self) -> i64 {
        self.ord
    }

    /// First exponent not stored. For inexact series this is where the
    /// unknown tail starts.
    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// The exponent from which coefficients are unknown; `None` if exact.
    pub fn validity(&self) -> Option<i64> {
        (!self.exact).then_some(self.trunc)
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.exact && self.coeffs.is_empty()
    }

    /// `None` when the coefficient lies in the unknown tail.
    pub fn coefficient(&self, n: i64) -> Option<Scalar> {
        if n >= self.trunc {
            return self.exact.then(|| self.ring.zero());
        }
        if n < self.ord {
            return Some(self.ring.zero());
        }
        Some(self.coeffs[(n - self.ord) as usize].clone())
    }

    fn known(&self, n: i64) -> &Scalar {
        &self.coeffs[(n - self.ord) as usize]
    }

    fn check_ring(&self, other: &Self) -> Result<(), LaurentError> {
        if self.ring != other.ring {
            return Err(ScalarError::RingMismatch(self.ring, other.ring).into());
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_ring(other)?;
        let ord = self.ord.min(other.ord);
        let (end, exact) = match (self.validity(), other.validity()) {
            (None, None) => (self.trunc.max(other.trunc), true),
            (Some(a), None) | (None, Some(a)) => (a, false),
            (Some(a), Some(b)) => (a.min(b), false),
        };
        let coeffs = (ord..end)
            .map(|n| {
                let a = self.coefficient(n).expect("below validity bound");
                let b = other.coefficient(n).expect("below validity bound");
                a.try_add(&b)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::build(self.ring, ord, coeffs, end, exact)
    }

    pub fn neg(&self) -> Self {
        TruncatedLaurent {
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.add(&other.neg())
    }

    /// Cauchy product. The result starts at `f.ord + g.ord` and is valid
    /// below `min(f.trunc + g.ord, g.trunc + f.ord)`; an exact factor
    /// contributes no unknown tail of its own.
    pub fn mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring));
        }
        let ord = self.ord + other.ord;
        let (end, exact) = match (self.validity(), other.validity()) {
            (None, None) => (self.trunc + other.trunc - 1, true),
            (None, Some(t)) => (t + self.ord, false),
            (Some(t), None) => (t + other.ord, false),
            (Some(a), Some(b)) => ((a + other.ord).min(b + self.ord), false),
        };
        let end = end.max(ord);
        let mut coeffs = vec![self.ring.zero(); (end - ord) as usize];
        for i in self.ord..self.trunc {
            let a = self.known(i);
            if a.is_zero() {
                continue;
            }
            for j in other.ord..other.trunc {
                let n = i + j;
                if n >= end {
                    break;
                }
                let slot = &mut coeffs[(n - ord) as usize];
                *slot = slot.try_add(&a.try_mul(other.known(j))?)?;
            }
        }
        Self::build(self.ring, ord, coeffs, end, exact)
    }

    /// The pole part: coefficients at negative exponents, exactly zero from
    /// `e^0` on. Needs every negative coefficient to be known.
    pub fn pole_part(&self) -> Result<Self, LaurentError> {
        if !self.exact && self.trunc < 0 {
            return Err(LaurentError::InsufficientPrecision { trunc: self.trunc });
        }
        let end = if self.exact { self.trunc.min(0) } else { 0 };
        let ord = self.ord.min(end);
        let coeffs = (ord..end)
            .map(|n| self.coefficient(n).expect("negative exponents are known"))
            .collect();
        Self::build(self.ring, ord, coeffs, end, true)
    }

    /// The four terms `P(f)P(g)`, `P(f P(g))`, `P(P(f) g)`, `P(fg)` with `P`
    /// the pole part.
    pub fn rb_terms(&self, other: &Self) -> Result<[Self; 4], LaurentError> {
        let pf = self.pole_part()?;
        let pg = other.pole_part()?;
        Ok([
            pf.mul(&pg)?,
            self.mul(&pg)?.pole_part()?,
            pf.mul(other)?.pole_part()?,
            self.mul(other)?.pole_part()?,
        ])
    }

    /// `P(f)P(g) - P(f P(g)) - P(P(f) g) + P(fg)` for the pole part `P`.
    /// Every term is a pole part, so the result is exact.
    pub fn rb_defect(&self, other: &Self) -> Result<Self, LaurentError> {
        let [lhs, a, b, c] = self.rb_terms(other)?;
        lhs.sub(&a)?.sub(&b)?.add(&c)
    }

    /// The known coefficients as a finitely supported series over `Z`.
    pub fn to_series(&self, monoid: Arc<OrderedMonoid>) -> Series {
        Series::from_terms(
            monoid,
            self.ring,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (MonoidElem::Int(self.ord + i as i64), c.clone())),
        )
        .expect("integer exponents with coefficients in one ring")
    }

    /// `{"ring", "ord", "trunc", "exact", "coeffs"}` with coefficients as strings.
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "ring": self.ring,
            "ord": self.ord,
            "trunc": self.trunc,
            "exact": self.exact,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn render(&self, var: &str) -> String {
        let zero = MonoidElem::Int(0);
        let mut parts: Vec<(bool, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let e = MonoidElem::Int(self.ord + i as i64);
                (c.is_negative(), render_term(&c.abs(), &e, &zero, var))
            })
            .collect();
        if !self.exact {
            parts.push((false, format!("O({var}^{})", self.trunc)));
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (negative, text)) in parts.into_iter().enumerate() {
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&text);
        }
        out
    }
}

impl fmt::Display for TruncatedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("e"))
    }
}
