//! Argument parsing and the command implementations. Exit codes: 0 for
//! success, 1 for a counterexample or mismatch, 2 for usage and
//! configuration errors.

use std::ffi::OsString;
use std::io::Write;
use std::sync::atomic::{AtomicU64, Ordering};

use clap::{Parser, Subcommand};
use serde_json::json;

use quadsum_core::constructive::{identity_3_7, identity_check_with};
use quadsum_core::statements::{
    classify_quadruple, lookup, registry, sequence_of, Convention, QuadruplePart, StatementRecord,
};
use quadsum_core::{find_witness, Error as CoreError};

use crate::error::Error;
use crate::json::WitnessRecord;
use crate::oeis::{self, Client, Source};
use crate::verify::verify_range_with;

pub const OK: i32 = 0;
pub const FAILED: i32 = 1;
pub const USAGE: i32 = 2;

/// Overrides the OEIS host (used by tests against a local server).
pub const URL_ENV: &str = "QUADSUM_OEIS_URL";

const PROGRESS_EVERY: u64 = 100_000;

#[derive(Parser, Debug)]
#[command(
    name = "quadsum",
    version,
    about = "Check four-square representations with side constraints"
)]
struct Cli {
    /// Emit JSON lines instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for `verify` (default: available parallelism)
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Seed for randomized commands
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Never touch the network; use the cache or bundled b-file snapshots
    #[arg(long, global = true)]
    offline: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find a witness for one n
    Represent {
        id: String,
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Search a range for the least n without a witness
    Verify {
        id: String,
        #[arg(allow_negative_numbers = true)]
        lo: i64,
        #[arg(allow_negative_numbers = true)]
        hi: i64,
    },
    /// Print representation counts under the statement's counting convention
    Seq {
        id: String,
        #[arg(allow_negative_numbers = true)]
        lo: i64,
        #[arg(allow_negative_numbers = true)]
        hi: i64,
    },
    /// Compare computed counts with an OEIS b-file
    OeisCheck {
        id: String,
        a_number: String,
        #[arg(default_value_t = 50)]
        limit: usize,
    },
    /// Evaluate both sides of the seven-fold identity on random tuples
    IdentityCheck {
        #[arg(default_value_t = 10_000)]
        samples: u64,
        seed: Option<u64>,
        #[arg(long, hide = true)]
        tamper: bool,
    },
    /// Search n for a linear form over four squares taking values 8^k (or 2·8^k)
    ClassifyQuad {
        a: i64,
        b: i64,
        c: i64,
        d: i64,
        /// target 2·8^k instead of 8^k
        #[arg(long)]
        twice: bool,
        #[arg(long, default_value_t = 2000)]
        bound: i64,
    },
    /// List registered statements
    List,
}

struct Ctx<'a> {
    json: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn fail(&mut self, e: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "error: {e}");
        USAGE
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            let text = e.render();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        out,
        err,
    };
    let workers = cli
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let code = match cli.command {
        Command::Represent { id, n } => represent(&mut ctx, &id, n),
        Command::Verify { id, lo, hi } => verify(&mut ctx, &id, lo, hi, workers),
        Command::Seq { id, lo, hi } => seq(&mut ctx, &id, lo, hi),
        Command::OeisCheck {
            id,
            a_number,
            limit,
        } => oeis_check(&mut ctx, &id, &a_number, limit, cli.offline),
        Command::IdentityCheck {
            samples,
            seed,
            tamper,
        } => identity(&mut ctx, samples, seed.or(cli.seed).unwrap_or(0), tamper),
        Command::ClassifyQuad {
            a,
            b,
            c,
            d,
            twice,
            bound,
        } => classify(&mut ctx, [a, b, c, d], twice, bound),
        Command::List => list(&mut ctx),
    };
    let _ = ctx.out.flush();
    code
}

fn record(ctx: &mut Ctx, id: &str) -> Result<StatementRecord, i32> {
    lookup(id).map_err(|e| ctx.fail(e))
}

fn represent(ctx: &mut Ctx, id: &str, n: i64) -> i32 {
    let rec = match record(ctx, id) {
        Ok(r) => r,
        Err(c) => return c,
    };
    let st = &rec.statement;
    match find_witness(st, n) {
        Ok(Some(w)) => {
            let r = WitnessRecord::new(st, n, &w);
            if ctx.json {
                let _ = writeln!(
                    ctx.out,
                    "{}",
                    serde_json::to_string(&r).expect("plain record")
                );
            } else {
                let terms: Vec<String> = r.terms.iter().map(i64::to_string).collect();
                let _ = writeln!(
                    ctx.out,
                    "{id} {n}: {} = {}  values {:?}",
                    r.target,
                    terms.join(" + "),
                    r.values
                );
            }
            OK
        }
        Ok(None) => {
            if ctx.json {
                let _ = writeln!(
                    ctx.out,
                    "{}",
                    json!({"n": n, "statement": id, "witness": null})
                );
            } else {
                let _ = writeln!(ctx.out, "none");
            }
            FAILED
        }
        Err(e) => ctx.fail(e),
    }
}

fn verify(ctx: &mut Ctx, id: &str, lo: i64, hi: i64, workers: usize) -> i32 {
    let rec = match record(ctx, id) {
        Ok(r) => r,
        Err(c) => return c,
    };
    let done = AtomicU64::new(0);
    let progress = |k: u64| {
        let before = done.fetch_add(k, Ordering::Relaxed);
        let after = before + k;
        if after / PROGRESS_EVERY > before / PROGRESS_EVERY {
            eprintln!(
                "{id}: {} n scanned",
                after / PROGRESS_EVERY * PROGRESS_EVERY
            );
        }
    };
    let r = match verify_range_with(&rec.statement, lo, hi, workers, Some(&progress)) {
        Ok(r) => r,
        Err(e) => return ctx.fail(e),
    };
    if ctx.json {
        let line = json!({
            "statement": r.statement,
            "lo": r.lo,
            "hi": r.hi,
            "workers": r.workers,
            "checked_count": r.checked_count,
            "first_counterexample": r.first_counterexample,
            "elapsed_ms": r.elapsed.as_millis() as u64,
        });
        let _ = writeln!(ctx.out, "{line}");
    } else {
        let verdict = match r.first_counterexample {
            Some(n) => format!("counterexample at n = {n}"),
            None => "no counterexample".to_string(),
        };
        let _ = writeln!(
            ctx.out,
            "{id} [{lo}, {hi}]: {} applicable n checked, {verdict} ({:.2} s, workers: {})",
            r.checked_count,
            r.elapsed.as_secs_f64(),
            r.workers
        );
    }
    if r.first_counterexample.is_some() {
        FAILED
    } else {
        OK
    }
}

fn convention_for(rec: &StatementRecord) -> Result<bool, CoreError> {
    match rec.convention().map(|c| c.1) {
        Some(Convention::Canonical) => Ok(true),
        Some(Convention::Ordered) => Ok(false),
        _ => Err(CoreError::UnknownConvention(rec.id().to_string())),
    }
}

fn seq(ctx: &mut Ctx, id: &str, lo: i64, hi: i64) -> i32 {
    let rec = match record(ctx, id) {
        Ok(r) => r,
        Err(c) => return c,
    };
    if lo > hi {
        return ctx.fail(Error::EmptyRange { lo, hi });
    }
    let values = match convention_for(&rec).and_then(|c| sequence_of(&rec.statement, c, lo, hi)) {
        Ok(v) => v,
        Err(e) => return ctx.fail(e),
    };
    for (n, c) in values {
        let _ = if ctx.json {
            writeln!(ctx.out, "{}", json!({"n": n, "count": c}))
        } else {
            writeln!(ctx.out, "{n} {c}")
        };
    }
    OK
}

fn oeis_check(ctx: &mut Ctx, id: &str, a_number: &str, limit: usize, offline: bool) -> i32 {
    let rec = match record(ctx, id) {
        Ok(r) => r,
        Err(c) => return c,
    };
    if let Err(e) = oeis::convention(&rec, a_number) {
        return ctx.fail(e);
    }
    if limit == 0 {
        return ctx.fail("limit must be at least 1");
    }
    let mut client = Client::new(oeis::default_cache_dir(), offline);
    if let Ok(url) = std::env::var(URL_ENV) {
        client.base_url = url;
    }
    let b = match client.fetch_bfile(a_number) {
        Ok(b) => b,
        Err(e @ Error::Unavailable { .. }) if !offline => {
            return ctx.fail(format!("{e} (try --offline for the bundled snapshots)"));
        }
        Err(e) => return ctx.fail(e),
    };
    let rep = match oeis::check_statement(&rec, &b, limit) {
        Ok(r) => r,
        Err(e) => return ctx.fail(e),
    };
    let source = match b.source {
        Source::Network => "network",
        Source::Cache => "cache",
        Source::Fixture => "bundled snapshot",
    };
    if ctx.json {
        let mm = rep
            .first_mismatch
            .map(|(i, e, g)| json!({"index": i, "expected": e, "got": g}));
        let line = json!({"statement": id, "a_number": a_number, "source": source,
                          "matched": rep.matched, "first_mismatch": mm});
        let _ = writeln!(ctx.out, "{line}");
    } else {
        match rep.first_mismatch {
            None => {
                let _ = writeln!(
                    ctx.out,
                    "{id} vs {a_number} ({source}): {} terms match",
                    rep.matched
                );
            }
            Some((i, e, g)) => {
                let _ = writeln!(
                    ctx.out,
                    "{id} vs {a_number} ({source}): mismatch at n = {i}: b-file {e}, computed {g} ({} matched before)",
                    rep.matched
                );
            }
        }
    }
    if rep.first_mismatch.is_none() {
        OK
    } else {
        FAILED
    }
}

fn identity(ctx: &mut Ctx, samples: u64, seed: u64, tamper: bool) -> i32 {
    if samples == 0 {
        return ctx.fail("samples must be at least 1");
    }
    let mut eval = |t: [i64; 6]| {
        let (lhs, mut terms) = identity_3_7(t[0], t[1], t[2], t[3], t[4], t[5])?;
        if tamper {
            // wrong coefficient on the first term
            terms[0] = terms[0].checked_mul(2).ok_or(CoreError::Overflow)?;
        }
        Ok((lhs, terms))
    };
    let r = match identity_check_with(samples, seed, &mut eval) {
        Ok(r) => r,
        Err(e) => return ctx.fail(e),
    };
    if ctx.json {
        let line = json!({"samples": r.samples, "seed": r.seed, "failures": r.failures,
                          "first_failure": r.first_failure, "passed": r.passed()});
        let _ = writeln!(ctx.out, "{line}");
    } else {
        let verdict = if r.passed() {
            "pass".to_string()
        } else {
            format!("FAIL ({} mismatches)", r.failures)
        };
        let _ = writeln!(
            ctx.out,
            "identity: {} samples, seed {}: {verdict}",
            r.samples, r.seed
        );
    }
    if r.passed() {
        OK
    } else {
        FAILED
    }
}

fn classify(ctx: &mut Ctx, q: [i64; 4], twice: bool, bound: i64) -> i32 {
    let part = if twice {
        QuadruplePart::TwiceEights
    } else {
        QuadruplePart::Eights
    };
    let c = match classify_quadruple(q[0], q[1], q[2], q[3], part, bound) {
        Ok(c) => c,
        Err(e) => return ctx.fail(e),
    };
    if ctx.json {
        let line = json!({"a": c.a, "b": c.b, "c": c.c, "d": c.d, "twice": twice, "bound": bound,
                          "listed": c.listed, "first_failure": c.first_failure});
        let _ = writeln!(ctx.out, "{line}");
    } else {
        let found = match c.first_failure {
            Some(n) => format!("first failure at n = {n}"),
            None => format!("no failure up to {bound}"),
        };
        let listed = if c.listed { "listed" } else { "not listed" };
        let _ = writeln!(ctx.out, "{q:?} ({listed}): {found}");
    }
    OK
}

fn list(ctx: &mut Ctx) -> i32 {
    for r in registry() {
        if ctx.json {
            let refs: Vec<_> = r
                .oeis_refs
                .iter()
                .map(|o| json!({"a_number": o.a_number, "convention": format!("{:?}", o.convention).to_lowercase()}))
                .collect();
            let line = json!({"id": r.id(), "locus": r.paper_locus, "verified_bound": r.verified_bound_paper,
                              "oeis": refs, "probabilistic": r.probabilistic});
            let _ = writeln!(ctx.out, "{line}");
        } else {
            let mut extra = String::new();
            if let Some(b) = r.verified_bound_paper {
                extra.push_str(&format!("  [checked to {b}]"));
            }
            for o in &r.oeis_refs {
                extra.push_str(&format!("  {}", o.a_number));
            }
            if r.probabilistic {
                extra.push_str("  (probable primes)");
            }
            let _ = writeln!(ctx.out, "{:<20} {}{extra}", r.id(), r.paper_locus);
        }
    }
    OK
}
