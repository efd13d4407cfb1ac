//! Finitely supported generalized power series.
//!
//! A [`Series`] maps exponents of an ordered monoid to coefficients of an
//! exact ring. Only finite supports are stored, and a finite subset of any
//! ordered set is artinian and narrow, so every value here is a genuine
//! element of the generalized power series ring.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::monoid::{MonoidElem, MonoidError, OrderedMonoid};
use crate::scalar::{Ring, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("MonoidMismatch: {0} vs {1}")]
    MonoidMismatch(String, String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error("bad series JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone)]
pub struct Series {
    monoid: Arc<OrderedMonoid>,
    ring: Ring,
    terms: BTreeMap<MonoidElem, Scalar>,
}

impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.same_monoid(other) && self.terms == other.terms
    }
}

impl Eq for Series {}

impl Series {
    pub fn zero(monoid: Arc<OrderedMonoid>, ring: Ring) -> Self {
        Series {
            monoid,
            ring,
            terms: BTreeMap::new(),
        }
    }

    /// `e_w`: coefficient one at `w`, zero elsewhere.
    pub fn indicator(monoid: Arc<OrderedMonoid>, ring: Ring, w: MonoidElem) -> Result<Self, SeriesError> {
        Series::monomial(monoid, ring.one(), w)
    }

    /// The convolution unit `e_0`.
    pub fn one(monoid: Arc<OrderedMonoid>, ring: Ring) -> Self {
        let zero = monoid.zero();
        Series::indicator(monoid, ring, zero).expect("neutral element belongs to its monoid")
    }

    pub fn monomial(monoid: Arc<OrderedMonoid>, coeff: Scalar, w: MonoidElem) -> Result<Self, SeriesError> {
        let ring = coeff.ring();
        Series::from_terms(monoid, ring, [(w, coeff)])
    }

    /// Collects terms, summing repeated exponents and dropping zeros.
    pub fn from_terms(
        monoid: Arc<OrderedMonoid>,
        ring: Ring,
        terms: impl IntoIterator<Item = (MonoidElem, Scalar)>,
    ) -> Result<Self, SeriesError> {
        let mut acc: BTreeMap<MonoidElem, Scalar> = BTreeMap::new();
        for (e, c) in terms {
            monoid.check(&e)?;
            if c.ring() != ring {
                return Err(ScalarError::RingMismatch(ring, c.ring()).into());
            }
            accumulate(&mut acc, e, c)?;
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Series { monoid, ring, terms: acc })
    }

    pub fn monoid(&self) -> &Arc<OrderedMonoid> {
        &self.monoid
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coefficient(&self, e: &MonoidElem) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Exponents with nonzero coefficient, in canonical order.
    pub fn support(&self) -> impl Iterator<Item = &MonoidElem> {
        self.terms.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonoidElem, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_monoid(&self, other: &Series) -> bool {
        Arc::ptr_eq(&self.monoid, &other.monoid) || *self.monoid == *other.monoid
    }

    fn check_compatible(&self, other: &Series) -> Result<(), SeriesError> {
        if !self.same_monoid(other) {
            return Err(SeriesError::MonoidMismatch(
                self.monoid.to_string(),
                other.monoid.to_string(),
            ));
        }
        if self.ring != other.ring {
            return Err(ScalarError::RingMismatch(self.ring, other.ring).into());
        }
        Ok(())
    }

    fn with_terms(&self, mut terms: BTreeMap<MonoidElem, Scalar>) -> Series {
        terms.retain(|_, c| !c.is_zero());
        Series {
            monoid: Arc::clone(&self.monoid),
            ring: self.ring,
            terms,
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_compatible(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut terms, e.clone(), c.clone())?;
        }
        Ok(self.with_terms(terms))
    }

    pub fn neg(&self) -> Series {
        self.with_terms(self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect())
    }

    pub fn sub(&self, other: &Series) -> Result<Series, SeriesError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Result<Series, SeriesError> {
        let terms = self
            .terms
            .iter()
            .map(|(e, a)| Ok((e.clone(), c.try_mul(a)?)))
            .collect::<Result<BTreeMap<_, _>, ScalarError>>()?;
        Ok(self.with_terms(terms))
    }

    /// Convolution product: `(fg)(s)` is the sum of `f(u) g(v)` over the
    /// pairs `u + v = s` of the two supports.
    pub fn convolve(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_compatible(other)?;
        let mut out = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let s = self.monoid.add(u, v)?;
                accumulate(&mut out, s, a.try_mul(b)?)?;
            }
        }
        Ok(self.with_terms(out))
    }

    /// Keeps the terms whose exponent satisfies `keep`.
    pub fn filter<E>(&self, mut keep: impl FnMut(&MonoidElem) -> Result<bool, E>) -> Result<Series, E> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if keep(e)? {
                terms.insert(e.clone(), c.clone());
            }
        }
        Ok(self.with_terms(terms))
    }

    /// Coefficient map equality; errors when the series live in different rings.
    pub fn series_eq(&self, other: &Series) -> Result<bool, SeriesError> {
        self.check_compatible(other)?;
        Ok(self.terms == other.terms)
    }

    /// Renders in the expression syntax accepted by the parser, with `var`
    /// as the series variable.
    pub fn render(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let zero = self.monoid.zero();
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => out.push('-'),
                (0, _) => {}
                _ => {
                    out.push(' ');
                    out.push_str(sign);
                    out.push(' ');
                }
            }
            out.push_str(&render_term(&c.abs(), e, &zero, var));
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = SeriesJson {
            monoid: self.monoid.to_json_value(),
            ring: Some(self.ring),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exp: serde_json::to_value(e).expect("element serializes"),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("series serializes")
    }

    /// Reads the JSON form. The ring defaults to the rationals when absent.
    pub fn from_json_value(value: &serde_json::Value) -> Result<Series, SeriesError> {
        let doc: SeriesJson =
            serde_json::from_value(value.clone()).map_err(|e| SeriesError::Json(e.to_string()))?;
        let monoid = Arc::new(OrderedMonoid::from_json_value(&doc.monoid)?);
        let ring = doc.ring.unwrap_or(Ring::Rational);
        let terms = doc
            .terms
            .iter()
            .map(|t| Ok((monoid.elem_from_json(&t.exp)?, ring.parse_scalar(&t.coeff)?)))
            .collect::<Result<Vec<_>, SeriesError>>()?;
        Series::from_terms(monoid, ring, terms)
    }
}

pub(crate) fn render_term(c: &Scalar, e: &MonoidElem, zero: &MonoidElem, var: &str) -> String {
    let coeff = c.to_expr_string();
    if e == zero {
        return coeff;
    }
    let power = format!("{var}^{e}");
    if c.is_one() {
        power
    } else {
        format!("{coeff}*{power}")
    }
}

fn accumulate(
    terms: &mut BTreeMap<MonoidElem, Scalar>,
    e: MonoidElem,
    c: Scalar,
) -> Result<(), ScalarError> {
    match terms.get_mut(&e) {
        Some(existing) => *existing = existing.try_add(&c)?,
        None => {
            terms.insert(e, c);
        }
    }
    Ok(())
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("e"))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: serde_json::Value,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    monoid: serde_json::Value,
    #[serde(default)]
    ring: Option<Ring>,
    terms: Vec<TermJson>,
}
