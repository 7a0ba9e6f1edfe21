//! Desk-scale acceptance run: one PASS/FAIL line per criterion, then a
//! summary. Criterion numbers given as arguments restrict the run.
//!
//! QUADSUM_ACCEPTANCE_STRICT=1 makes any FAIL exit nonzero.
//! QUADSUM_LIVE_OEIS=1 adds the live b-file comparison to criterion 10.

use std::process::ExitCode;
use std::time::Instant;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quadsum::oeis::{self, Client};
use quadsum::verify::verify_range;
use quadsum_core::arith::is_square;
use quadsum_core::constructive::{
    decompose_1_1_ii, decompose_1_1_iv, decompose_1_2_i, decompose_1_4_ii, decompose_1_6,
    identity_check, seven_map, seven_unmap, SixPart,
};
use quadsum_core::statements::{classify_quadruple, listed_quadruples, sequence, QuadruplePart};
use quadsum_core::ternary::*;
use quadsum_core::{lookup, registry, validate_witness, Result, Witness};

const WORKERS: usize = 4;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn naive_represents(a: i64, b: i64, c: i64, n: i64) -> bool {
    let mut x = 0;
    while a * x * x <= n {
        let mut y = 0;
        while a * x * x + b * y * y <= n {
            let r = n - a * x * x - b * y * y;
            if r % c == 0 && is_square(r / c) {
                return true;
            }
            y += 1;
        }
        x += 1;
    }
    false
}

fn exceptional_sets() -> Outcome {
    let ds = descriptors();
    let mut bad = Vec::new();
    for d in &ds {
        let TernaryForm { a, b, c } = d.form;
        for n in 0..=10_000 {
            if in_exceptional_set(d, n).map_err(|e| e.to_string())? == naive_represents(a, b, c, n)
            {
                bad.push(format!("E({a},{b},{c}) at {n}"));
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("{} forms, n <= 10^4, 0 discrepancies", ds.len()))
    } else {
        Err(format!("{} discrepancies, first {}", bad.len(), bad[0]))
    }
}

/// Statements whose witness space is too wide for 10^5 at desk scale.
fn short_range(id: &str) -> bool {
    id.starts_with("T1.5")
        || id.starts_with("T1.6")
        || id.ends_with("-sq")
        || id.ends_with("-sq0")
        || id.ends_with("-sq1")
}

fn theorem_suite() -> Outcome {
    let mut failed = Vec::new();
    let mut count = 0;
    for rec in registry().into_iter().filter(|r| r.id().starts_with("T1.")) {
        let hi = if short_range(rec.id()) {
            10_000
        } else {
            100_000
        };
        let r = verify_range(&rec.statement, 1, hi, WORKERS)
            .map_err(|e| format!("{}: {e}", rec.id()))?;
        count += 1;
        if let Some(n) = r.first_counterexample {
            failed.push(format!("{} at n = {n}", rec.id()));
        }
    }
    if failed.is_empty() {
        Ok(format!("{count} statements, 0 counterexamples"))
    } else {
        Err(failed.join(", "))
    }
}

fn validates(
    id: &str,
    lo: i64,
    hi: i64,
    f: impl Fn(i64) -> Result<Witness>,
) -> std::result::Result<u64, String> {
    let st = lookup(id).map_err(|e| e.to_string())?.statement;
    let mut ok = 0;
    for n in lo..=hi {
        if !st.applies(n) {
            continue;
        }
        let w = f(n).map_err(|e| format!("{id} at {n}: {e}"))?;
        if !validate_witness(&st, &w).map_err(|e| format!("{id} at {n}: {e}"))? {
            return Err(format!("{id} at {n}: witness does not validate"));
        }
        ok += 1;
    }
    Ok(ok)
}

fn decomposers() -> Outcome {
    let mut total = 0;
    total += validates("T1.1ii", 1, 10_000, decompose_1_1_ii)?;
    total += validates("T1.1iv", 1, 10_000, decompose_1_1_iv)?;
    total += validates("T1.2i", 1, 10_000, decompose_1_2_i)?;
    total += validates("T1.6i-sq", 0, 5000, |n| decompose_1_6(n, 2, SixPart::Sum))?;
    total += validates("T1.6i-cube", 0, 5000, |n| decompose_1_6(n, 3, SixPart::Sum))?;
    total += validates("T1.6ii-sq-var", 0, 5000, |n| {
        decompose_1_6(n, 2, SixPart::Weighted)
    })?;
    total += validates("T1.6ii-cube-var", 0, 5000, |n| {
        decompose_1_6(n, 3, SixPart::Weighted)
    })?;
    total += validates("T1.4ii", 1, 2000, |n| decompose_1_4_ii(n, 2))?;
    Ok(format!("{total} witnesses validated, 0 errors"))
}

fn identities() -> Outcome {
    let r = identity_check(10_000, 0).map_err(|e| e.to_string())?;
    if !r.passed() {
        return Err(format!(
            "three-by-seven identity fails at {:?}",
            r.first_failure
        ));
    }
    let mut grid = 0;
    for s in -20..=20 {
        for t in -20..=20 {
            for u in -20..=20 {
                for v in -20..=20 {
                    let img = seven_map(s, t, u, v).map_err(|e| e.to_string())?;
                    let lhs = 7 * (s * s + t * t + u * u + 2 * v * v);
                    let rhs =
                        img[0] * img[0] + img[1] * img[1] + img[2] * img[2] + 2 * img[3] * img[3];
                    if lhs != rhs
                        || seven_unmap(img[0], img[1], img[2], img[3]) != Some([s, t, u, v])
                    {
                        return Err(format!("seven-fold map fails at ({s},{t},{u},{v})"));
                    }
                    grid += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let p: Vec<i64> = (0..4)
            .map(|_| (rng.next_u64() % 2001) as i64 - 1000)
            .collect();
        let img = seven_map(p[0], p[1], p[2], p[3]).map_err(|e| e.to_string())?;
        if seven_unmap(img[0], img[1], img[2], img[3]).map(Vec::from) != Some(p.clone()) {
            return Err(format!("round trip fails at {p:?}"));
        }
    }
    Ok(format!(
        "10^4 sampled tuples, {grid} grid points, 10^3 round trips"
    ))
}

fn kaplansky() -> Outcome {
    let f = TernaryForm::new(1, 7, 14);
    let mut missed = Vec::new();
    for n in (1..=100_000i64).filter(|n| [1, 2, 4].contains(&(n % 7))) {
        if represent_ternary(f, n, &[])
            .map_err(|e| e.to_string())?
            .is_none()
        {
            missed.push(n);
        }
    }
    if missed == [2, 74, 506] {
        Ok("missed set {2, 74, 506}".into())
    } else {
        Err(format!("missed set {missed:?}"))
    }
}

fn c410_exceptions() -> Outcome {
    let st = lookup("C4.10-noexcept")
        .map_err(|e| e.to_string())?
        .statement;
    let mut fails = Vec::new();
    let s = quadsum_core::forms::Searcher::new(&st).map_err(|e| e.to_string())?;
    for n in 1..=10_000 {
        if s.has_witness(n).map_err(|e| e.to_string())? == Some(false) {
            fails.push(n);
        }
    }
    if fails == [71, 85] {
        Ok("failures {71, 85}".into())
    } else {
        Err(format!("failures {fails:?}"))
    }
}

fn unique_lists() -> Outcome {
    let ones: Vec<i64> = sequence("C4.15i", 0, 225)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|p| p.1 == 1)
        .map(|p| p.0)
        .collect();
    if ones != [0, 1, 3, 5, 7, 14, 15, 16, 25, 30, 84, 169, 225] {
        return Err(format!("count 1 at {ones:?}"));
    }
    for n in [1, 2, 3, 7, 11, 13, 14, 17, 49, 61] {
        let c = sequence("C4.15ii", n, n).map_err(|e| e.to_string())?[0].1;
        if c != 1 {
            return Err(format!("squared variant has count {c} at {n}"));
        }
    }
    Ok("13 unique n up to 225, 10 squared n".into())
}

fn conjectures() -> Outcome {
    let mut lines = Vec::new();
    for (id, lo, hi) in [
        ("C1.1i", 1, 100_000),
        ("C4.1i", 2, 1_000_000),
        ("C4.7i", 1, 100_000),
    ] {
        let st = lookup(id).map_err(|e| e.to_string())?.statement;
        let r = verify_range(&st, lo, hi, WORKERS).map_err(|e| e.to_string())?;
        if let Some(n) = r.first_counterexample {
            return Err(format!("{id} fails at {n}"));
        }
        lines.push(format!(
            "{id} [{lo}, {hi}] {:.0} s",
            r.elapsed.as_secs_f64()
        ));
    }
    Ok(lines.join(", "))
}

fn lemmas() -> Outcome {
    for n in 1..=3000i64 {
        if n % 16 == 0 {
            continue;
        }
        for m in (16..=n + 16).step_by(16) {
            if !gap_lemma_check(n, GapPattern::Pair { m }).map_err(|e| e.to_string())? {
                return Err(format!("pair gap at n={n}, m={m}"));
            }
        }
    }
    for n in (4..=100_000i64).filter(|n| n % 64 != 0) {
        if !gap_lemma_check(n, GapPattern::Quarter).map_err(|e| e.to_string())? {
            return Err(format!("quarter gap at {n}"));
        }
    }
    for n in 1..=5000i64 {
        if !in_e0(n) {
            let (a, b, c) = mod3_adjust(n).map_err(|e| e.to_string())?;
            if a * a + b * b + c * c != n || (a + b).rem_euclid(3) != 1 {
                return Err(format!("residue adjustment at {n}"));
            }
        }
    }
    for u in -60..=60i64 {
        for v in -60..=60i64 {
            let s = u * u + v * v;
            if s > 0 && s % 5 == 0 {
                let (x, y) = five_rotate(u, v).map_err(|e| e.to_string())?;
                if x * x + y * y != s || x % 5 == 0 || y % 5 == 0 {
                    return Err(format!("five rotation at ({u},{v})"));
                }
            }
        }
    }
    let f = TernaryForm::new(1, 3, 6);
    for n in 1..=2000 {
        for delta in [0, 1] {
            let cond = [Congruence::parity(0, delta)];
            if represent_ternary(f, 6 * n + 1, &cond)
                .map_err(|e| e.to_string())?
                .is_none()
            {
                return Err(format!("(1,3,6) at 6*{n}+1 with parity {delta}"));
            }
        }
    }
    let g = TernaryForm::new(1, 3, 3);
    for n in (4..=10_000).step_by(12) {
        if represent_ternary(g, n, &[Congruence::parity(0, 1)])
            .map_err(|e| e.to_string())?
            .is_none()
        {
            return Err(format!("(1,3,3) at {n} with odd x"));
        }
    }
    for n in (4..=5000i64).step_by(8) {
        let (mut all, mut odd) = (0i64, 0i64);
        let r = quadsum_core::arith::isqrt(n);
        for x in -r..=r {
            let rest = n - x * x;
            if rest % 3 != 0 || !is_square(rest / 3) {
                continue;
            }
            let y = quadsum_core::arith::isqrt(rest / 3);
            for y in if y == 0 { vec![0] } else { vec![y, -y] } {
                all += 1;
                if x % 2 != 0 && y % 2 != 0 {
                    odd += 1;
                }
            }
        }
        if 3 * odd != 2 * all {
            return Err(format!("two-thirds count at {n}: {odd} of {all}"));
        }
    }
    Ok("gap patterns, residue adjustment, five rotation, parity-constrained forms, two-thirds count".into())
}

fn oeis_cross_check() -> Outcome {
    let rec = lookup("T1.1iv").map_err(|e| e.to_string())?;
    let b = oeis::fixture("A281494")
        .expect("bundled")
        .map_err(|e| e.to_string())?;
    let r = oeis::check_statement(&rec, &b, 50).map_err(|e| e.to_string())?;
    if r.first_mismatch.is_some() || r.matched < 50 {
        return Err(format!("A281494 fixture: {r:?}"));
    }
    if std::env::var("QUADSUM_LIVE_OEIS").as_deref() != Ok("1") {
        return Ok(
            "A281494 fixture 50 terms match; live comparison skipped (QUADSUM_LIVE_OEIS unset)"
                .into(),
        );
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let client = Client::new(dir.path().to_path_buf(), false);
    let mut lines = vec!["A281494 fixture 50 terms match".to_string()];
    for (id, a) in [
        ("T1.1iv", "A281494"),
        ("C4.15i", "A275344"),
        ("C4.15ii", "A299924"),
    ] {
        let rec = lookup(id).map_err(|e| e.to_string())?;
        let b = client.fetch_bfile(a).map_err(|e| e.to_string())?;
        let r = oeis::check_statement(&rec, &b, 50).map_err(|e| e.to_string())?;
        if r.first_mismatch.is_some() || r.matched < 50 {
            return Err(format!("live {a}: {r:?}"));
        }
        lines.push(format!("live {a} {} terms match", r.matched));
    }
    Ok(lines.join(", "))
}

fn classification() -> Outcome {
    let part = QuadruplePart::Eights;
    for &[a, b, c, d] in listed_quadruples(part) {
        let r = classify_quadruple(a, b, c, d, part, 2000).map_err(|e| e.to_string())?;
        if let Some(n) = r.first_failure {
            return Err(format!("listed ({a},{b},{c},{d}) fails at {n}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut picked = Vec::new();
    while picked.len() < 20 {
        let mut q: Vec<i64> = (0..4).map(|_| (rng.next_u64() % 16) as i64).collect();
        q.sort_unstable_by(|x, y| y.cmp(x));
        let q = [q[0], q[1], q[2], q[3]];
        if q[0] == 0 || listed_quadruples(part).contains(&q) || picked.contains(&q) {
            continue;
        }
        let g = [q[1], q[2], q[3]]
            .iter()
            .fold(q[0], |g, &x| quadsum_core::arith::gcd(g, x));
        if g % 4 == 0 {
            continue;
        }
        picked.push(q);
    }
    let mut latest = 0;
    for &[a, b, c, d] in &picked {
        let r = classify_quadruple(a, b, c, d, part, 2000).map_err(|e| e.to_string())?;
        match r.first_failure {
            Some(n) => latest = latest.max(n),
            None => {
                return Err(format!(
                    "non-listed ({a},{b},{c},{d}) has no failure up to 2000"
                ))
            }
        }
    }
    Ok(format!(
        "12 listed hold to 2000; 20 seeded others fail, latest first failure {latest}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("exceptional sets vs brute force", exceptional_sets),
        ("theorem suite", theorem_suite),
        ("constructive decomposers", decomposers),
        ("identities and seven-fold map", identities),
        ("Kaplansky exceptions", kaplansky),
        ("C4.10 exceptions", c410_exceptions),
        ("unique-representation lists", unique_lists),
        ("conjecture desk ranges", conjectures),
        ("lemma suites", lemmas),
        ("OEIS cross-check", oeis_cross_check),
        ("quadruple classification", classification),
    ];
    let only: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (mut passed, mut failures) = (0, 0);
    for (i, (name, run)) in criteria.iter().enumerate() {
        let k = i + 1;
        if !only.is_empty() && !only.contains(&k) {
            continue;
        }
        let t = Instant::now();
        let out = run();
        let secs = t.elapsed().as_secs_f64();
        match out {
            Ok(msg) => {
                passed += 1;
                println!("PASS criterion {k} ({name}): {msg} [{secs:.1} s]");
            }
            Err(msg) => {
                failures += 1;
                println!("FAIL criterion {k} ({name}): {msg} [{secs:.1} s]");
            }
        }
    }
    println!("acceptance: {passed} passed, {failures} failed");
    let strict = std::env::var("QUADSUM_ACCEPTANCE_STRICT").as_deref() == Ok("1");
    if failures == 0 || !strict {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
