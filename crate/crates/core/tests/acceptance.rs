//! Acceptance criteria. Each prints one `[PASS]` or `[FAIL]` line; the
//! process exits nonzero if any criterion fails.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use gps_rb::oracle::{self, default_corpus, DecompositionVerdict, TheoremReport};
use gps_rb::rb::{self, Decomposition, Projector};
use gps_rb::sample::{random_laurent, random_series, rng_from_env};
use gps_rb::{FiniteTable, MonoidElem, OrderedMonoid, Ring, Series, Window};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
/// Monoid, range of cut-off points, window range.
type ScanCase = (Arc<OrderedMonoid>, (i64, i64), (i64, i64));

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || format!("{what} took {elapsed:?}, limit {limit:?}"))
}

fn z() -> Arc<OrderedMonoid> {
    Arc::new(OrderedMonoid::IntLine)
}

fn indicator(m: &Arc<OrderedMonoid>, s: &MonoidElem) -> Series {
    Series::indicator(Arc::clone(m), Ring::Rational, s.clone()).unwrap()
}

fn corpus_reports() -> Result<Vec<(String, FiniteTable, TheoremReport)>, String> {
    default_corpus()
        .into_iter()
        .map(|(name, t)| {
            let m = Arc::new(OrderedMonoid::FiniteTable(t.clone()));
            let report = oracle::verify_theorem_decomposition(&m).map_err(|e| format!("{name}: {e}"))?;
            Ok((name, t, report))
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_gps-rb"))
        .args(["cutoff-scan", "--monoid", "Z", "--w-range", "-5..5", "--window", "-12..12", "--json"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), || format!("exit status {:?}", out.status.code()))?;
    within(elapsed, Duration::from_secs(1), "cutoff-scan")?;
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let verdicts = v["verdicts"].as_array().ok_or("no verdicts")?;
    ensure(verdicts.len() == 11, || format!("{} verdicts", verdicts.len()))?;
    let mut rb_at = Vec::new();
    for verdict in verdicts {
        let w = verdict["w"].as_i64().ok_or("w not an integer")?;
        let a = verdict["a_w"].as_array().ok_or("a_w")?;
        let b = verdict["b_w"].as_array().ok_or("b_w")?;
        if a.is_empty() && b.is_empty() {
            rb_at.push(w);
            continue;
        }
        let witness = &verdict["outcome"]["witness"];
        let label = witness["label"].as_str().unwrap_or_default();
        let (u, v) = (
            witness["elements"][0].as_i64().ok_or("witness")?,
            witness["elements"][1].as_i64().ok_or("witness")?,
        );
        let ok = match label {
            "A_w" => u >= w && v >= w && u + v < w,
            "B_w" => u < w && v < w && u + v >= w,
            _ => false,
        };
        ensure(ok, || format!("w = {w}: bad witness {label} ({u}, {v})"))?;
    }
    ensure(rb_at == [0, 1], || format!("RB at {rb_at:?}"))?;
    Ok(format!("RB exactly at w = 0, 1; witnesses for the other 9 ({elapsed:.2?})"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let reports = corpus_reports()?;
    let elapsed = start.elapsed();
    let mut total = 0;
    for (name, t, r) in &reports {
        ensure(r.decompositions_total == 1 << t.size(), || format!("{name}: wrong count"))?;
        ensure(r.holds(), || format!("{name}: mismatches {:?}", r.mismatches))?;
        total += r.decompositions_total;
    }
    within(elapsed, Duration::from_secs(10), "corpus verification")?;
    Ok(format!("{} monoids, {total} decompositions, 0 mismatches ({elapsed:.2?})", reports.len()))
}

fn unit_defect(p: &Projector, m: &Arc<OrderedMonoid>, u: &MonoidElem, v: &MonoidElem) -> Result<bool, String> {
    let d = rb::rb_defect(p, &indicator(m, u), &indicator(m, v)).map_err(|e| e.to_string())?;
    let sum = m.add(u, v).map_err(|e| e.to_string())?;
    Ok(d.coefficient(&sum).is_one())
}

fn criterion_3() -> Outcome {
    let (mut s1, mut s2) = (0, 0);
    for (name, t, report) in corpus_reports()? {
        let m = Arc::new(OrderedMonoid::FiniteTable(t));
        for DecompositionVerdict { mask, s1_violation, s2_violation, .. } in &report.verdicts {
            let p = Projector::Decomp(Decomposition::from_bitmask(Arc::clone(&m), *mask).map_err(|e| e.to_string())?);
            if let Some((u, v)) = s1_violation {
                ensure(unit_defect(&p, &m, u, v)?, || format!("{name} mask {mask:#b}: S1 pair ({u}, {v})"))?;
                s1 += 1;
            }
            if let Some((u, v)) = s2_violation {
                let q = p.clone().complement();
                ensure(unit_defect(&q, &m, u, v)? && unit_defect(&p, &m, u, v)?, || {
                    format!("{name} mask {mask:#b}: S2 pair ({u}, {v})")
                })?;
                s2 += 1;
            }
        }
    }
    Ok(format!("{s1} S1 witnesses and {s2} S2 witnesses (via id - P) all have defect 1 at u+v"))
}

fn criterion_4() -> Outcome {
    let m = z();
    let p = Projector::Decomp(Decomposition::parse(Arc::clone(&m), "negatives").map_err(|e| e.to_string())?);
    let mut rng = rng_from_env(4);
    let start = Instant::now();
    for i in 0..1000 {
        let f = random_series(&mut rng, &m, Ring::Rational, 8, 10);
        let g = random_series(&mut rng, &m, Ring::Rational, 8, 10);
        let d = rb::rb_defect(&p, &f, &g).map_err(|e| e.to_string())?;
        ensure(d.is_empty(), || format!("pair {i}: defect {}", d.render("e")))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5), "1000 defects")?;
    Ok(format!("1000 random pairs, defect identically 0 ({elapsed:.2?})"))
}

fn random_projector(rng: &mut impl Rng) -> Result<Projector, String> {
    let names = ["negatives", "nonnegatives", "positives", "nonpositives", "evens", "odds"];
    let k = rng.gen_range(0..names.len() + 2);
    let text = match k {
        k if k < names.len() => names[k].to_string(),
        k if k == names.len() => format!("below({})", rng.gen_range(-5..=5)),
        _ => format!("notbelow({})", rng.gen_range(-5..=5)),
    };
    Ok(Projector::Decomp(Decomposition::parse(z(), &text).map_err(|e| e.to_string())?))
}

fn criterion_5() -> Outcome {
    let m = z();
    let mut rng = rng_from_env(5);
    let mut nonzero = 0;
    for i in 0..200 {
        let p = random_projector(&mut rng)?;
        let f = random_series(&mut rng, &m, Ring::Rational, 5, 6);
        let g = random_series(&mut rng, &m, Ring::Rational, 5, 6);
        let direct = rb::rb_defect(&p, &f, &g).map_err(|e| e.to_string())?;
        let mut expanded = Series::zero(Arc::clone(&m), Ring::Rational);
        for (u, a) in f.terms() {
            for (v, b) in g.terms() {
                let d = rb::rb_defect(&p, &indicator(&m, u), &indicator(&m, v)).map_err(|e| e.to_string())?;
                let c = a.try_mul(b).map_err(|e| e.to_string())?;
                expanded = expanded.add(&d.scale(&c).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            }
        }
        ensure(direct == expanded, || format!("triple {i}: direct and expanded defects differ"))?;
        nonzero += usize::from(!direct.is_empty());
    }
    Ok(format!("200 triples match the indicator expansion ({nonzero} with nonzero defect)"))
}

fn criterion_6() -> Outcome {
    let m = z();
    let p = Projector::Decomp(Decomposition::parse(Arc::clone(&m), "negatives").map_err(|e| e.to_string())?);
    let q = Projector::Decomp(Decomposition::parse(Arc::clone(&m), "evens").map_err(|e| e.to_string())?);
    let mut rng = rng_from_env(6);
    for i in 0..500 {
        let f = random_series(&mut rng, &m, Ring::Rational, 8, 10);
        ensure(rb::commute_check(&p, &q, &f).map_err(|e| e.to_string())?, || format!("series {i}"))?;
    }
    Ok("500 random series, PQ = QP".into())
}

fn cross_check(m: &Arc<OrderedMonoid>, ws: &[MonoidElem], window: &Window) -> Result<usize, String> {
    for w in ws {
        let (a, b) = rb::compute_aw_bw(m, w, window).map_err(|e| e.to_string())?;
        let p = Projector::cutoff(Arc::clone(m), w.clone()).map_err(|e| e.to_string())?;
        let scan = rb::indicator_scan(&p, Ring::Rational, window).map_err(|e| e.to_string())?;
        ensure((a.is_empty() && b.is_empty()) == scan.is_none(), || {
            format!("{m}, w = {w}: |A_w| = {}, |B_w| = {}, defect pair {:?}", a.len(), b.len(), scan.map(|s| (s.u, s.v)))
        })?;
    }
    Ok(ws.len())
}

fn criterion_7() -> Outcome {
    let mut cases = 0;
    let lines: [ScanCase; 4] = [
        (z(), (-5, 5), (-8, 8)),
        (Arc::new(OrderedMonoid::NatLine), (0, 5), (0, 10)),
        (Arc::new(OrderedMonoid::VectorProduct(2)), (-1, 1), (-2, 2)),
        (Arc::new(OrderedMonoid::VectorLex(2)), (-1, 1), (-2, 2)),
    ];
    for (m, (wl, wh), (lo, hi)) in lines {
        let ws = Window::range(&m, wl, wh).elements().to_vec();
        cases += cross_check(&m, &ws, &Window::range(&m, lo, hi))?;
    }
    let product = OrderedMonoid::VectorProduct(2);
    let incomparable = product
        .incomparable_pair(Window::range(&product, -2, 2).elements())
        .map_err(|e| e.to_string())?;
    ensure(incomparable.is_some(), || "product window has no incomparable pair".into())?;
    for (_, t) in default_corpus() {
        let m = Arc::new(OrderedMonoid::FiniteTable(t.clone()));
        let carrier = Window::carrier(&t);
        cases += cross_check(&m, carrier.elements(), &carrier)?;
    }
    Ok(format!("{cases} (monoid, w) cases agree, including Z^2 with the product order"))
}

fn criterion_8() -> Outcome {
    let z = OrderedMonoid::IntLine;
    let ws: Vec<_> = (-5..=5).map(MonoidElem::Int).collect();
    let r = oracle::verify_cor_strict(&z, &ws, &Window::range(&z, -12, 12)).map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("Z: {r}"))?;
    let n = OrderedMonoid::NatLine;
    let ws: Vec<_> = (0..=5).map(MonoidElem::Int).collect();
    let r = oracle::verify_cor_strict(&n, &ws, &Window::range(&n, 0, 12)).map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("N: {r}"))?;
    Ok("A_w empty iff w >= 0 on Z (w in [-5,5]) and N (w in [0,5])".into())
}

fn criterion_9() -> Outcome {
    let m = z();
    let mut rng = rng_from_env(9);
    for i in 0..500 {
        let f = random_laurent(&mut rng, Ring::Rational, -4..=2, 4..=8);
        let g = random_laurent(&mut rng, Ring::Rational, -4..=2, 4..=8);
        let fg = f.mul(&g).map_err(|e| e.to_string())?;
        let conv = f
            .to_series(Arc::clone(&m))
            .convolve(&g.to_series(Arc::clone(&m)))
            .map_err(|e| e.to_string())?;
        for n in (f.ord() + g.ord())..fg.trunc() {
            ensure(fg.coefficient(n) == Some(conv.coefficient(&MonoidElem::Int(n))), || {
                format!("pair {i}: coefficient of e^{n} differs")
            })?;
        }
        let d = f.rb_defect(&g).map_err(|e| e.to_string())?;
        ensure(d.is_zero(), || format!("pair {i}: defect {}", d.render("e")))?;
    }
    Ok("500 products match convolution on their validity window; pole-part defect 0".into())
}

fn criterion_10() -> Outcome {
    let base = FiniteTable::cyclic(4);
    let orders = oracle::valid_strict_orders(&base).map_err(|e| e.to_string())?;
    let verdicts = |t: &FiniteTable| -> Result<Vec<bool>, String> {
        let m = Arc::new(OrderedMonoid::FiniteTable(t.clone()));
        let r = oracle::verify_theorem_decomposition(&m).map_err(|e| e.to_string())?;
        Ok(r.verdicts.iter().map(|v| v.is_rb()).collect())
    };
    let reference = verdicts(&base)?;
    for t in &orders {
        ensure(verdicts(t)? == reference, || "RB verdicts depend on the order".into())?;
    }
    ensure(orders.len() >= 3, || {
        format!(
            "Z/4 admits {} valid strict order matrix (the discrete one) out of 4096 relations; \
             the trivial order plus two others are required",
            orders.len()
        )
    })?;
    Ok(format!("verdicts identical under {} valid orders", orders.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("cut-off classification on Z", criterion_1),
        ("decomposition criterion on the finite corpus", criterion_2),
        ("converse witness defect equals 1", criterion_3),
        ("RB identity for the negatives projector", criterion_4),
        ("bilinear reduction to indicator pairs", criterion_5),
        ("negatives and evens projectors commute", criterion_6),
        ("A_w/B_w emptiness agrees with indicator defects", criterion_7),
        ("A_w empty iff w >= 0 on total orders", criterion_8),
        ("truncated Laurent oracle equivalence", criterion_9),
        ("Z/4 verdicts independent of the strict order", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
