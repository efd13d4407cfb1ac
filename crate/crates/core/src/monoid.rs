//! Exponent monoids `(S, <=)`: a commutative monoid together with a partial
//! order that is strictly compatible with addition (`s < s'` implies
//! `s + t < s' + t`).

use std::cmp::Ordering;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::outcome::{CheckOutcome, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("BadElement: {0}")]
    BadElement(String),
    #[error("BadTable: {0}")]
    BadTable(String),
    #[error("exponent overflow adding {0} and {1}")]
    Overflow(MonoidElem, MonoidElem),
    #[error("unknown monoid spec {0:?}")]
    BadSpec(String),
    #[error("table rejected: {0}")]
    Rejected(Witness),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

/// An exponent. The payload shape is fixed by the monoid it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum MonoidElem {
    Int(i64),
    Vector(Vec<i64>),
    Index(usize),
}

impl MonoidElem {
    fn tag(&self) -> u8 {
        match self {
            MonoidElem::Int(_) => 0,
            MonoidElem::Vector(_) => 1,
            MonoidElem::Index(_) => 2,
        }
    }

    /// Canonical byte encoding: kind tag followed by the payload, integers
    /// big-endian with the sign bit flipped. Byte order agrees with `Ord`.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        fn push_i64(out: &mut Vec<u8>, x: i64) {
            out.extend_from_slice(&((x as u64) ^ (1 << 63)).to_be_bytes());
        }
        let mut out = vec![self.tag()];
        match self {
            MonoidElem::Int(x) => push_i64(&mut out, *x),
            MonoidElem::Vector(v) => {
                out.extend_from_slice(&(v.len() as u32).to_be_bytes());
                for x in v {
                    push_i64(&mut out, *x);
                }
            }
            MonoidElem::Index(i) => out.extend_from_slice(&(*i as u64).to_be_bytes()),
        }
        out
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            MonoidElem::Int(x) => Some(*x),
            _ => None,
        }
    }
}

// Not the monoid order: a total order on encodings, used for map keys and
// deterministic rendering.
impl Ord for MonoidElem {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (MonoidElem::Int(a), MonoidElem::Int(b)) => a.cmp(b),
            (MonoidElem::Vector(a), MonoidElem::Vector(b)) => {
                a.len().cmp(&b.len()).then_with(|| a.cmp(b))
            }
            (MonoidElem::Index(a), MonoidElem::Index(b)) => a.cmp(b),
            _ => self.tag().cmp(&other.tag()),
        }
    }
}

impl PartialOrd for MonoidElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonoidElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidElem::Int(x) => write!(f, "{x}"),
            MonoidElem::Index(i) => write!(f, "{i}"),
            MonoidElem::Vector(v) => {
                write!(f, "(")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A finite commutative monoid on `{0, .., n-1}` given by its addition table
/// and an explicit order matrix (`leq[a][b]` means `a <= b`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTable {
    n: usize,
    neutral: usize,
    add: Vec<Vec<usize>>,
    leq: Vec<Vec<bool>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TableFile {
    n: usize,
    neutral: usize,
    add: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    leq: Option<Vec<Vec<bool>>>,
}

fn discrete_order(n: usize) -> Vec<Vec<bool>> {
    (0..n).map(|a| (0..n).map(|b| a == b).collect()).collect()
}

impl FiniteTable {
    /// Checks only the shape of the data. Algebraic axioms are checked by
    /// [`OrderedMonoid::validate`].
    pub fn new(
        add: Vec<Vec<usize>>,
        neutral: usize,
        leq: Option<Vec<Vec<bool>>>,
    ) -> Result<Self, MonoidError> {
        let n = add.len();
        if n == 0 {
            return Err(MonoidError::BadTable("empty table".into()));
        }
        if neutral >= n {
            return Err(MonoidError::BadTable(format!("neutral {neutral} out of range")));
        }
        for (i, row) in add.iter().enumerate() {
            if row.len() != n {
                return Err(MonoidError::BadTable(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(MonoidError::BadTable(format!("entry {bad} in row {i} out of range")));
            }
        }
        let leq = leq.unwrap_or_else(|| discrete_order(n));
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(MonoidError::BadTable("order matrix is not n x n".into()));
        }
        Ok(FiniteTable { n, neutral, add, leq })
    }

    /// `Z/n` with the discrete order.
    pub fn cyclic(n: usize) -> Self {
        let add = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteTable::new(add, 0, None).expect("cyclic table is well formed")
    }

    /// `{0, .., m}` with `a + b := min(a + b, m)`, discrete order.
    pub fn truncated(m: usize) -> Self {
        let add = (0..=m).map(|a| (0..=m).map(|b| (a + b).min(m)).collect()).collect();
        FiniteTable::new(add, 0, None).expect("truncated table is well formed")
    }

    /// `{0, e}` with `e + e = e`, discrete order.
    pub fn idempotent_pair() -> Self {
        FiniteTable::new(vec![vec![0, 1], vec![1, 1]], 0, None).expect("well formed")
    }

    /// Same addition table, different order matrix.
    pub fn with_order(&self, leq: Vec<Vec<bool>>) -> Result<Self, MonoidError> {
        FiniteTable::new(self.add.clone(), self.neutral, Some(leq))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn neutral(&self) -> usize {
        self.neutral
    }

    pub fn sum(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn addition_table(&self) -> &[Vec<usize>] {
        &self.add
    }

    pub fn order_matrix(&self) -> &[Vec<bool>] {
        &self.leq
    }

    pub fn from_json(text: &str) -> Result<Self, MonoidError> {
        let file: TableFile =
            serde_json::from_str(text).map_err(|e| MonoidError::BadTable(e.to_string()))?;
        if file.add.len() != file.n {
            return Err(MonoidError::BadTable(format!(
                "n = {} but table has {} rows",
                file.n,
                file.add.len()
            )));
        }
        let mut add = Vec::with_capacity(file.n);
        for row in file.add {
            let row = row
                .into_iter()
                .map(|x| {
                    usize::try_from(x)
                        .map_err(|_| MonoidError::BadTable(format!("negative entry {x}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            add.push(row);
        }
        FiniteTable::new(add, file.neutral, file.leq)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let file = TableFile {
            n: self.n,
            neutral: self.neutral,
            add: self
                .add
                .iter()
                .map(|r| r.iter().map(|&x| x as i64).collect())
                .collect(),
            leq: Some(self.leq.clone()),
        };
        serde_json::to_value(file).expect("table serializes")
    }

    fn validate(&self) -> CheckOutcome {
        let n = self.n;
        let ix = MonoidElem::Index;
        for a in 0..n {
            for b in 0..n {
                if self.add[a][b] != self.add[b][a] {
                    return CheckOutcome::fail("commutativity", vec![ix(a), ix(b)]);
                }
            }
        }
        for a in 0..n {
            if self.add[self.neutral][a] != a {
                return CheckOutcome::fail("neutrality", vec![ix(a)]);
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.add[self.add[a][b]][c] != self.add[a][self.add[b][c]] {
                        return CheckOutcome::fail("associativity", vec![ix(a), ix(b), ix(c)]);
                    }
                }
            }
        }
        for a in 0..n {
            if !self.leq[a][a] {
                return CheckOutcome::fail("reflexivity", vec![ix(a)]);
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq[a][b] && self.leq[b][a] {
                    return CheckOutcome::fail("antisymmetry", vec![ix(a), ix(b)]);
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.leq[a][b] && self.leq[b][c] && !self.leq[a][c] {
                        return CheckOutcome::fail("transitivity", vec![ix(a), ix(b), ix(c)]);
                    }
                }
            }
        }
        let lt = |a: usize, b: usize| a != b && self.leq[a][b];
        for s in 0..n {
            for s2 in 0..n {
                if !lt(s, s2) {
                    continue;
                }
                for t in 0..n {
                    if !lt(self.add[s][t], self.add[s2][t]) {
                        return CheckOutcome::fail("strict-compatibility", vec![ix(s), ix(s2), ix(t)]);
                    }
                }
            }
        }
        CheckOutcome::Pass
    }
}

/// The exponent structures supported as series exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderedMonoid {
    /// `(Z, <=)`.
    IntLine,
    /// `({0, 1, 2, ..}, <=)`.
    NatLine,
    /// `Z^d` with the componentwise (product) order.
    VectorProduct(usize),
    /// `Z^d` with the lexicographic order.
    VectorLex(usize),
    FiniteTable(FiniteTable),
}

impl OrderedMonoid {
    /// Parses `Z`, `N`, `Z^d:product`, `Z^d:lex`, `table:<path>`, and the
    /// shorthands `cyclic:<n>` and `truncated:<m>`.
    pub fn from_spec(spec: &str) -> Result<Self, MonoidError> {
        let bad = || MonoidError::BadSpec(spec.to_string());
        let spec = spec.trim();
        match spec {
            "Z" => return Ok(OrderedMonoid::IntLine),
            "N" => return Ok(OrderedMonoid::NatLine),
            _ => {}
        }
        if let Some(path) = spec.strip_prefix("table:") {
            return OrderedMonoid::load_table(path);
        }
        if let Some(n) = spec.strip_prefix("cyclic:") {
            let n: usize = n.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            return Ok(OrderedMonoid::FiniteTable(FiniteTable::cyclic(n)));
        }
        if let Some(m) = spec.strip_prefix("truncated:") {
            let m: usize = m.parse().map_err(|_| bad())?;
            return Ok(OrderedMonoid::FiniteTable(FiniteTable::truncated(m)));
        }
        let rest = spec.strip_prefix("Z^").ok_or_else(bad)?;
        let (d, order) = rest.split_once(':').ok_or_else(bad)?;
        let d: usize = d.parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        match order {
            "product" => Ok(OrderedMonoid::VectorProduct(d)),
            "lex" => Ok(OrderedMonoid::VectorLex(d)),
            _ => Err(bad()),
        }
    }

    /// Reads a table file and rejects it unless it validates.
    pub fn load_table(path: impl AsRef<Path>) -> Result<Self, MonoidError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| MonoidError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        OrderedMonoid::table_from_json(&text)
    }

    pub fn table_from_json(text: &str) -> Result<Self, MonoidError> {
        let monoid = OrderedMonoid::FiniteTable(FiniteTable::from_json(text)?);
        match monoid.validate()? {
            CheckOutcome::Fail { witness } => Err(MonoidError::Rejected(witness)),
            _ => Ok(monoid),
        }
    }

    pub fn zero(&self) -> MonoidElem {
        match self {
            OrderedMonoid::IntLine | OrderedMonoid::NatLine => MonoidElem::Int(0),
            OrderedMonoid::VectorProduct(d) | OrderedMonoid::VectorLex(d) => {
                MonoidElem::Vector(vec![0; *d])
            }
            OrderedMonoid::FiniteTable(t) => MonoidElem::Index(t.neutral),
        }
    }

    pub fn contains(&self, e: &MonoidElem) -> bool {
        match (self, e) {
            (OrderedMonoid::IntLine, MonoidElem::Int(_)) => true,
            (OrderedMonoid::NatLine, MonoidElem::Int(x)) => *x >= 0,
            (
                OrderedMonoid::VectorProduct(d) | OrderedMonoid::VectorLex(d),
                MonoidElem::Vector(v),
            ) => v.len() == *d,
            (OrderedMonoid::FiniteTable(t), MonoidElem::Index(i)) => *i < t.n,
            _ => false,
        }
    }

    pub fn check(&self, e: &MonoidElem) -> Result<(), MonoidError> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(MonoidError::BadElement(format!("{e} is not an element of {self}")))
        }
    }

    pub fn add(&self, a: &MonoidElem, b: &MonoidElem) -> Result<MonoidElem, MonoidError> {
        self.check(a)?;
        self.check(b)?;
        let overflow = || MonoidError::Overflow(a.clone(), b.clone());
        Ok(match (self, a, b) {
            (OrderedMonoid::FiniteTable(t), MonoidElem::Index(x), MonoidElem::Index(y)) => {
                MonoidElem::Index(t.add[*x][*y])
            }
            (_, MonoidElem::Int(x), MonoidElem::Int(y)) => {
                MonoidElem::Int(x.checked_add(*y).ok_or_else(overflow)?)
            }
            (_, MonoidElem::Vector(x), MonoidElem::Vector(y)) => MonoidElem::Vector(
                x.iter()
                    .zip(y)
                    .map(|(p, q)| p.checked_add(*q))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(overflow)?,
            ),
            _ => unreachable!("membership checked above"),
        })
    }

    /// The monoid order. `None` means incomparable.
    pub fn compare(&self, a: &MonoidElem, b: &MonoidElem) -> Result<Option<Ordering>, MonoidError> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (OrderedMonoid::FiniteTable(t), MonoidElem::Index(x), MonoidElem::Index(y)) => {
                match (t.leq[*x][*y], t.leq[*y][*x]) {
                    _ if x == y => Some(Ordering::Equal),
                    (true, _) => Some(Ordering::Less),
                    (_, true) => Some(Ordering::Greater),
                    _ => None,
                }
            }
            (_, MonoidElem::Int(x), MonoidElem::Int(y)) => Some(x.cmp(y)),
            (OrderedMonoid::VectorLex(_), MonoidElem::Vector(x), MonoidElem::Vector(y)) => {
                Some(x.cmp(y))
            }
            (OrderedMonoid::VectorProduct(_), MonoidElem::Vector(x), MonoidElem::Vector(y)) => {
                let le = x.iter().zip(y).all(|(p, q)| p <= q);
                let ge = x.iter().zip(y).all(|(p, q)| p >= q);
                match (le, ge) {
                    (true, true) => Some(Ordering::Equal),
                    (true, false) => Some(Ordering::Less),
                    (false, true) => Some(Ordering::Greater),
                    (false, false) => None,
                }
            }
            _ => unreachable!("membership checked above"),
        })
    }

    pub fn leq(&self, a: &MonoidElem, b: &MonoidElem) -> Result<bool, MonoidError> {
        Ok(matches!(
            self.compare(a, b)?,
            Some(Ordering::Less | Ordering::Equal)
        ))
    }

    /// `a <= b` and `a != b`. Both `lt(a, b)` and `lt(b, a)` are false for
    /// incomparable elements, so `!lt(s, w)` is weaker than `w <= s`.
    pub fn lt(&self, a: &MonoidElem, b: &MonoidElem) -> Result<bool, MonoidError> {
        Ok(self.compare(a, b)? == Some(Ordering::Less))
    }

    /// Checks the monoid and order axioms. Finite tables are checked
    /// exhaustively; built-in instances satisfy them by construction.
    pub fn validate(&self) -> Result<CheckOutcome, MonoidError> {
        Ok(match self {
            OrderedMonoid::FiniteTable(t) => t.validate(),
            _ => CheckOutcome::Pass,
        })
    }

    /// Whether every pair of elements is comparable.
    pub fn is_total(&self) -> bool {
        match self {
            OrderedMonoid::IntLine | OrderedMonoid::NatLine | OrderedMonoid::VectorLex(_) => true,
            OrderedMonoid::VectorProduct(d) => *d <= 1,
            OrderedMonoid::FiniteTable(t) => {
                (0..t.n).all(|a| (0..t.n).all(|b| t.leq[a][b] || t.leq[b][a]))
            }
        }
    }

    /// First incomparable pair in `elems`, if any.
    pub fn incomparable_pair(
        &self,
        elems: &[MonoidElem],
    ) -> Result<Option<(MonoidElem, MonoidElem)>, MonoidError> {
        for (i, a) in elems.iter().enumerate() {
            for b in &elems[i + 1..] {
                if self.compare(a, b)?.is_none() {
                    return Ok(Some((a.clone(), b.clone())));
                }
            }
        }
        Ok(None)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, OrderedMonoid::FiniteTable(_))
    }

    pub fn as_table(&self) -> Option<&FiniteTable> {
        match self {
            OrderedMonoid::FiniteTable(t) => Some(t),
            _ => None,
        }
    }

    /// Number of integers needed to write an exponent.
    pub fn arity(&self) -> usize {
        match self {
            OrderedMonoid::VectorProduct(d) | OrderedMonoid::VectorLex(d) => *d,
            _ => 1,
        }
    }

    /// Builds an element from its integer components, checking arity and range.
    pub fn elem_from_ints(&self, parts: &[i64]) -> Result<MonoidElem, MonoidError> {
        if parts.len() != self.arity() {
            return Err(MonoidError::BadElement(format!(
                "{self} exponents take {} component(s), got {}",
                self.arity(),
                parts.len()
            )));
        }
        let e = match self {
            OrderedMonoid::IntLine | OrderedMonoid::NatLine => MonoidElem::Int(parts[0]),
            OrderedMonoid::VectorProduct(_) | OrderedMonoid::VectorLex(_) => {
                MonoidElem::Vector(parts.to_vec())
            }
            OrderedMonoid::FiniteTable(_) => {
                let i = usize::try_from(parts[0])
                    .map_err(|_| MonoidError::BadElement(format!("index {} is negative", parts[0])))?;
                MonoidElem::Index(i)
            }
        };
        self.check(&e)?;
        Ok(e)
    }

    pub fn elem_from_json(&self, value: &serde_json::Value) -> Result<MonoidElem, MonoidError> {
        let bad = || MonoidError::BadElement(value.to_string());
        let parts = match value {
            serde_json::Value::Number(n) => vec![n.as_i64().ok_or_else(bad)?],
            serde_json::Value::Array(xs) => xs
                .iter()
                .map(|x| x.as_i64().ok_or_else(bad))
                .collect::<Result<Vec<_>, _>>()?,
            _ => return Err(bad()),
        };
        let is_vector = matches!(self, OrderedMonoid::VectorProduct(_) | OrderedMonoid::VectorLex(_));
        if value.is_array() != is_vector {
            return Err(bad());
        }
        self.elem_from_ints(&parts)
    }

    /// JSON descriptor: the spec string for built-ins, the table object for
    /// finite monoids.
    pub fn to_json_value(&self) -> serde_json::Value {
        match self {
            OrderedMonoid::FiniteTable(t) => t.to_json_value(),
            other => serde_json::Value::String(other.to_string()),
        }
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Self, MonoidError> {
        match value {
            serde_json::Value::String(s) => OrderedMonoid::from_spec(s),
            obj @ serde_json::Value::Object(_) => OrderedMonoid::table_from_json(&obj.to_string()),
            other => Err(MonoidError::BadSpec(other.to_string())),
        }
    }
}

impl fmt::Display for OrderedMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderedMonoid::IntLine => write!(f, "Z"),
            OrderedMonoid::NatLine => write!(f, "N"),
            OrderedMonoid::VectorProduct(d) => write!(f, "Z^{d}:product"),
            OrderedMonoid::VectorLex(d) => write!(f, "Z^{d}:lex"),
            OrderedMonoid::FiniteTable(t) => write!(f, "table(n={})", t.n),
        }
    }
}

/// A finite set of exponents over which windowed checks run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    elements: Vec<MonoidElem>,
    label: String,
}

impl Window {
    pub fn new(elements: Vec<MonoidElem>, label: impl Into<String>) -> Self {
        Window {
            elements,
            label: label.into(),
        }
    }

    /// The integer interval `[lo, hi]` in each coordinate, intersected with
    /// the carrier: `[lo, hi]` on `Z`, `[max(lo, 0), hi]` on `N`, the box
    /// `[lo, hi]^d` on `Z^d`, and the valid indices in `[lo, hi]` for tables.
    ///
    /// Integer points are listed outward from zero (`0, 1, -1, 2, -2, ..`),
    /// so scans report witnesses of smallest magnitude first.
    pub fn range(monoid: &OrderedMonoid, lo: i64, hi: i64) -> Self {
        fn outward(v: &[i64]) -> (u64, Vec<(u64, bool)>) {
            let norm = v.iter().map(|x| x.unsigned_abs()).sum();
            (norm, v.iter().map(|x| (x.unsigned_abs(), *x < 0)).collect())
        }
        match monoid {
            OrderedMonoid::IntLine => {
                let mut xs: Vec<i64> = (lo..=hi).collect();
                xs.sort_by_key(|x| outward(&[*x]));
                Window::new(xs.into_iter().map(MonoidElem::Int).collect(), format!("[{lo}, {hi}]"))
            }
            OrderedMonoid::NatLine => {
                let lo = lo.max(0);
                Window::new(
                    (lo..=hi).map(MonoidElem::Int).collect(),
                    format!("[{lo}, {hi}]"),
                )
            }
            OrderedMonoid::VectorProduct(d) | OrderedMonoid::VectorLex(d) => {
                let mut points: Vec<Vec<i64>> = vec![vec![]];
                for _ in 0..*d {
                    points = points
                        .into_iter()
                        .flat_map(|p| {
                            (lo..=hi).map(move |x| {
                                let mut q = p.clone();
                                q.push(x);
                                q
                            })
                        })
                        .collect();
                }
                points.sort_by_key(|p| outward(p));
                Window::new(
                    points.into_iter().map(MonoidElem::Vector).collect(),
                    format!("[{lo}, {hi}]^{d}"),
                )
            }
            OrderedMonoid::FiniteTable(t) => {
                let lo = lo.max(0);
                let hi = hi.min(t.n as i64 - 1);
                let elems: Vec<_> = (lo..=hi).map(|i| MonoidElem::Index(i as usize)).collect();
                if elems.len() == t.n {
                    Window::carrier(t)
                } else {
                    Window::new(elems, format!("indices [{lo}, {hi}]"))
                }
            }
        }
    }

    /// Every element of a finite table.
    pub fn carrier(table: &FiniteTable) -> Self {
        Window::new(
            (0..table.n).map(MonoidElem::Index).collect(),
            format!("whole carrier (n={})", table.n),
        )
    }

    pub fn elements(&self) -> &[MonoidElem] {
        &self.elements
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// True when the window is the entire carrier of a finite monoid, so a
    /// search over it is conclusive.
    pub fn covers(&self, monoid: &OrderedMonoid) -> bool {
        match monoid {
            OrderedMonoid::FiniteTable(t) => {
                (0..t.n).all(|i| self.elements.contains(&MonoidElem::Index(i)))
            }
            _ => false,
        }
    }
}
