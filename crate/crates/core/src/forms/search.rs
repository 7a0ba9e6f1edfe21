//! Depth-first witness search.
//!
//! For each represented integer N a plan fixes the order in which slots are
//! assigned and how each depth produces candidates:
//!
//! * `Iterate` walks every base value whose term fits in the remainder;
//! * `Solve` takes a linear conjunct whose other variables are already set and
//!   back-solves the slot from each target value in range;
//! * `Leaf` (last slot) inverts the remainder directly;
//! * `Pair` (last two square slots sharing a linear conjunct) intersects the
//!   conjunct's line with the ellipse `c1·u² + c2·v² = remainder`.
//!
//! The order is chosen by a crude cost model. Candidates at each depth are
//! visited in the order 0, 1, -1, 2, -2, ... (signed) or ascending (unsigned),
//! so witnesses come out lexicographically in plan order.

use alloc::vec::Vec;

use super::{PredicateExpr, SideCondition, Sign, SlotGenerator, Statement, TargetSet};
use crate::arith::{central_binomial, iroot4, is_square, isqrt, power_exponent};
use crate::error::{Error, Result};
use crate::poly::MAX_VARS;
use crate::ternary::in_e0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Lower {
    Any,
    NonNeg,
    Pos,
}

struct Linear<'a> {
    coeffs: [i64; MAX_VARS],
    constant: i64,
    absolute: bool,
    target: &'a TargetSet,
}

struct Conj<'a> {
    pred: &'a PredicateExpr,
    mask: u8,
    linear: Option<Linear<'a>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Action {
    Iterate,
    Solve(usize),
    Leaf,
    Pair(usize),
}

#[derive(Debug, Clone)]
struct Plan {
    order: [usize; MAX_VARS],
    action: [Action; MAX_VARS],
    conj_at: [u32; MAX_VARS],
    side_at: [u32; MAX_VARS],
    /// `(depth, c)` when the slots from `depth` on are three free `c·v²`
    /// slots: the remainder there must be `c` times a sum of three squares.
    tail3: Option<(usize, i64)>,
    /// every witness value is a multiple of this
    stride: i64,
}

pub(super) struct Engine<'a> {
    st: &'a Statement,
    k: usize,
    lower: [Lower; MAX_VARS],
    conjs: Vec<Conj<'a>>,
    sides: Vec<SideCondition>,
}

type Visit<'v> = dyn FnMut(&[i64]) -> Result<bool> + 'v;

fn flatten<'a>(p: &'a PredicateExpr, out: &mut Vec<&'a PredicateExpr>) {
    match p {
        PredicateExpr::True => {}
        PredicateExpr::And(list) => list.iter().for_each(|q| flatten(q, out)),
        _ => out.push(p),
    }
}

fn key(v: i64) -> u64 {
    // 0, 1, -1, 2, -2, ...
    let a = v.unsigned_abs() * 2;
    if v > 0 {
        a - 1
    } else {
        a
    }
}

fn isqrt128(n: i128) -> i128 {
    if n <= 0 {
        0
    } else {
        (n as u128).isqrt() as i128
    }
}

impl<'a> Engine<'a> {
    pub(super) fn new(st: &'a Statement, canonical: bool) -> Result<Self> {
        st.validate()?;
        let k = st.slots.len();
        let mut lower = [Lower::Any; MAX_VARS];
        for (i, g) in st.slots.iter().enumerate() {
            lower[i] = if g.is_signed() && st.domain.sign == Sign::Integers {
                Lower::Any
            } else {
                Lower::NonNeg
            };
        }
        let mut sides = Vec::new();
        for c in &st.domain.side_conditions {
            match *c {
                SideCondition::Positive(i) => lower[i] = Lower::Pos,
                SideCondition::NonNegative(i) if lower[i] == Lower::Any => lower[i] = Lower::NonNeg,
                SideCondition::NonNegative(_) => {}
                other => sides.push(other),
            }
        }
        if canonical && st.domain.sign == Sign::Integers {
            let mut p = 1;
            while p < k && st.slots[p] == st.slots[0] {
                p += 1;
            }
            for i in 1..p {
                sides.push(SideCondition::AbsOrderLe { i: i - 1, j: i });
            }
        }
        let mut flat = Vec::new();
        flatten(&st.constraint, &mut flat);
        let conjs = flat
            .into_iter()
            .map(|pred| {
                let linear = match pred {
                    PredicateExpr::Atom(a) if a.target.is_enumerable() => {
                        a.expr.linear().map(|(c, k0)| Linear {
                            coeffs: *c,
                            constant: *k0,
                            absolute: a.absolute,
                            target: &a.target,
                        })
                    }
                    _ => None,
                };
                Conj {
                    pred,
                    mask: pred.vars(),
                    linear,
                }
            })
            .collect();
        Ok(Engine {
            st,
            k,
            lower,
            conjs,
            sides,
        })
    }

    /// Visits witnesses for the represented integer `n` until `visit` returns false.
    pub(super) fn run(&self, n: i64, visit: &mut Visit<'_>) -> Result<()> {
        if n < 0 {
            return Ok(());
        }
        let mut plan = self.plan(n);
        plan.stride = self.stride(n);
        let mut vals = [0i64; MAX_VARS];
        let mut bufs: [Vec<i64>; MAX_VARS] = Default::default();
        let mut pairs = Vec::new();
        self.rec(&plan, 0, n, n, &mut vals, visit, &mut bufs, &mut pairs)?;
        Ok(())
    }

    /// A sum of four squares divisible by 8 has all four roots even, so
    /// `4^j·m` with `8 | m` forces multiples of `2^(j+1)`.
    fn stride(&self, n: i64) -> i64 {
        if self.k != 4
            || self
                .st
                .slots
                .iter()
                .any(|g| *g != SlotGenerator::ScaledSquare(1))
            || n == 0
        {
            return 1;
        }
        let mut g = 1;
        let mut m = n;
        while m % 8 == 0 {
            g *= 2;
            m /= 4;
        }
        g
    }

    // ---- per-slot value sets -------------------------------------------------

    fn gen(&self, s: usize) -> &SlotGenerator {
        &self.st.slots[s]
    }

    /// Inclusive range of base values whose term can fit in `rem`.
    fn value_range(&self, s: usize, rem: i64) -> (i64, i64) {
        let hi = match self.gen(s) {
            SlotGenerator::ScaledSquare(c) => isqrt(rem / c),
            SlotGenerator::ScaledFourth(c) => iroot4(rem / c),
            SlotGenerator::PowerOf(b) => max_exponent(1, *b, rem),
            SlotGenerator::ScaledPowerOf { scale, base } => max_exponent(*scale, *base, rem),
            SlotGenerator::ExplicitSet(vals) => vals
                .iter()
                .copied()
                .filter(|&v| v <= rem)
                .max()
                .unwrap_or(-1),
            SlotGenerator::CentralBinomial => {
                let mut c = -1;
                while central_binomial(c + 1).is_ok_and(|t| t <= rem) {
                    c += 1;
                }
                c
            }
            SlotGenerator::Triangular => (isqrt(8 * rem + 1) - 1) / 2,
        };
        let lo = match self.lower[s] {
            Lower::Any if self.gen(s).is_signed() => -hi,
            Lower::Pos => 1,
            _ => match self.gen(s) {
                SlotGenerator::ExplicitSet(vals) => vals.iter().copied().min().unwrap_or(0),
                _ => 0,
            },
        };
        (lo, hi)
    }

    /// Term of a base value already known to be in range; `None` if the
    /// value is not admissible for the slot.
    fn term(&self, s: usize, v: i64) -> Option<i64> {
        match self.gen(s) {
            SlotGenerator::ScaledSquare(c) => Some(c * v * v),
            SlotGenerator::ScaledFourth(c) => Some(c * v * v * v * v),
            SlotGenerator::PowerOf(b) => (v >= 0).then(|| b.checked_pow(v as u32)).flatten(),
            SlotGenerator::ScaledPowerOf { scale, base } => (v >= 0)
                .then(|| {
                    base.checked_pow(v as u32)
                        .and_then(|p| p.checked_mul(*scale))
                })
                .flatten(),
            SlotGenerator::ExplicitSet(vals) => vals.contains(&v).then_some(v),
            SlotGenerator::CentralBinomial => central_binomial(v).ok(),
            SlotGenerator::Triangular => Some(v * (v + 1) / 2),
        }
    }

    /// Base values whose term equals `rem` exactly, in visiting order.
    fn leaf_values(&self, s: usize, rem: i64, out: &mut [i64; 2]) -> usize {
        let signed_root = |r: i64, out: &mut [i64; 2]| -> usize {
            match (r, self.lower[s]) {
                (0, Lower::Pos) => 0,
                (0, _) => {
                    out[0] = 0;
                    1
                }
                (_, Lower::Any) => {
                    out[0] = r;
                    out[1] = -r;
                    2
                }
                _ => {
                    out[0] = r;
                    1
                }
            }
        };
        let single = |v: Option<i64>, out: &mut [i64; 2]| -> usize {
            match v {
                Some(v) if !(v == 0 && self.lower[s] == Lower::Pos) => {
                    out[0] = v;
                    1
                }
                _ => 0,
            }
        };
        match self.gen(s) {
            SlotGenerator::ScaledSquare(c) => {
                if rem % c != 0 || !is_square(rem / c) {
                    return 0;
                }
                signed_root(isqrt(rem / c), out)
            }
            SlotGenerator::ScaledFourth(c) => {
                if rem % c != 0 {
                    return 0;
                }
                let q = rem / c;
                let r = iroot4(q);
                if r * r * r * r != q {
                    return 0;
                }
                signed_root(r, out)
            }
            SlotGenerator::PowerOf(b) => single(power_exponent(rem, *b).map(|k| k as i64), out),
            SlotGenerator::ScaledPowerOf { scale, base } => single(
                super::target::exponent_of(rem, *scale, *base).map(|k| k as i64),
                out,
            ),
            SlotGenerator::ExplicitSet(vals) => single(vals.contains(&rem).then_some(rem), out),
            SlotGenerator::CentralBinomial => {
                let mut c = 0;
                loop {
                    match central_binomial(c) {
                        Ok(t) if t < rem => c += 1,
                        Ok(t) if t == rem => return single(Some(c), out),
                        _ => return 0,
                    }
                }
            }
            SlotGenerator::Triangular => {
                let d = 8 * rem + 1;
                if !is_square(d) {
                    return 0;
                }
                single(Some((isqrt(d) - 1) / 2), out)
            }
        }
    }

    // ---- checks ---------------------------------------------------------------

    fn checks_pass(&self, plan: &Plan, d: usize, vals: &[i64; MAX_VARS], n: i64) -> Result<bool> {
        let mut m = plan.side_at[d];
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            if !self.sides[i].holds(vals) {
                return Ok(false);
            }
        }
        let mut m = plan.conj_at[d];
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            if !self.conjs[i].pred.eval(vals, n)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    // ---- recursion ------------------------------------------------------------

    #[allow(clippy::too_many_arguments)]
    fn rec(
        &self,
        plan: &Plan,
        d: usize,
        rem: i64,
        n: i64,
        vals: &mut [i64; MAX_VARS],
        visit: &mut Visit<'_>,
        bufs: &mut [Vec<i64>],
        pairs: &mut Vec<(i64, i64)>,
    ) -> Result<bool> {
        let s = plan.order[d];
        let last = d + 1 == self.k;
        if let Some((td, c)) = plan.tail3 {
            if td == d && (rem % c != 0 || in_e0(rem / c)) {
                return Ok(true);
            }
        }
        match plan.action[d] {
            Action::Leaf => {
                let mut cand = [0i64; 2];
                let cnt = self.leaf_values(s, rem, &mut cand);
                for &v in &cand[..cnt] {
                    if v % plan.stride != 0 {
                        continue;
                    }
                    vals[s] = v;
                    if self.checks_pass(plan, d, vals, n)? && !visit(&vals[..self.k])? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Action::Pair(c) => self.pair(plan, d, c, rem, n, vals, visit, pairs),
            Action::Solve(c) => {
                let (buf, rest_bufs) = bufs.split_first_mut().unwrap();
                buf.clear();
                self.solve_candidates(s, c, rem, n, vals, buf)?;
                let cands = core::mem::take(buf);
                let mut keep_going = true;
                for &v in &cands {
                    if v % plan.stride != 0 {
                        continue;
                    }
                    let t = match self.term(s, v) {
                        Some(t) if t <= rem => t,
                        _ => continue,
                    };
                    vals[s] = v;
                    if !self.checks_pass(plan, d, vals, n)? {
                        continue;
                    }
                    let cont = if last {
                        if t == rem {
                            visit(&vals[..self.k])?
                        } else {
                            true
                        }
                    } else {
                        self.rec(plan, d + 1, rem - t, n, vals, visit, rest_bufs, pairs)?
                    };
                    if !cont {
                        keep_going = false;
                        break;
                    }
                }
                *buf = cands;
                Ok(keep_going)
            }
            Action::Iterate => {
                let (_, rest_bufs) = bufs.split_first_mut().unwrap();
                let (lo, hi) = self.value_range(s, rem);
                let mut visit_one = |v: i64, vals: &mut [i64; MAX_VARS]| -> Result<bool> {
                    let t = match self.term(s, v) {
                        Some(t) if t <= rem => t,
                        _ => return Ok(true),
                    };
                    vals[s] = v;
                    if !self.checks_pass(plan, d, vals, n)? {
                        return Ok(true);
                    }
                    if last {
                        return if t == rem {
                            visit(&vals[..self.k])
                        } else {
                            Ok(true)
                        };
                    }
                    self.rec(plan, d + 1, rem - t, n, vals, visit, rest_bufs, pairs)
                };
                let g = plan.stride;
                if lo < 0 {
                    // signed walk: 0, 1, -1, 2, -2, ...
                    for a in (0..=hi).step_by(g as usize) {
                        if !visit_one(a, vals)? {
                            return Ok(false);
                        }
                        if a > 0 && !visit_one(-a, vals)? {
                            return Ok(false);
                        }
                    }
                } else {
                    for v in (lo + (g - lo.rem_euclid(g)) % g..=hi).step_by(g as usize) {
                        if !visit_one(v, vals)? {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
        }
    }

    /// Linear part of conjunct `c` without slot `skip` (all others assigned).
    fn rest_value(&self, lin: &Linear<'_>, skip: &[usize], vals: &[i64; MAX_VARS]) -> Result<i64> {
        let mut acc = lin.constant as i128;
        for (i, &a) in lin.coeffs.iter().enumerate() {
            if a != 0 && !skip.contains(&i) {
                acc += a as i128 * vals[i] as i128;
            }
        }
        i64::try_from(acc).map_err(|_| Error::Overflow)
    }

    /// Target values of `lin` inside `[lo, hi]`, honouring the absolute flag.
    fn targets(&self, lin: &Linear<'_>, lo: i64, hi: i64, n: i64, out: &mut Vec<i64>) {
        if !lin.absolute {
            lin.target.members_in(lo, hi, n, out);
            return;
        }
        let top = lo
            .unsigned_abs()
            .max(hi.unsigned_abs())
            .min(i64::MAX as u64) as i64;
        let mut mags = Vec::new();
        lin.target.members_in(0, top, n, &mut mags);
        for t in mags {
            if lo <= t && t <= hi {
                out.push(t);
            }
            if t != 0 && lo <= -t && -t <= hi {
                out.push(-t);
            }
        }
    }

    fn solve_candidates(
        &self,
        s: usize,
        c: usize,
        rem: i64,
        n: i64,
        vals: &[i64; MAX_VARS],
        out: &mut Vec<i64>,
    ) -> Result<()> {
        let lin = self.conjs[c].linear.as_ref().unwrap();
        let a = lin.coeffs[s];
        let rest = self.rest_value(lin, &[s], vals)?;
        let (vlo, vhi) = self.value_range(s, rem);
        if vlo > vhi {
            return Ok(());
        }
        let e1 = rest as i128 + a as i128 * vlo as i128;
        let e2 = rest as i128 + a as i128 * vhi as i128;
        let (lo, hi) = (e1.min(e2), e1.max(e2));
        let lo = i64::try_from(lo).map_err(|_| Error::Overflow)?;
        let hi = i64::try_from(hi).map_err(|_| Error::Overflow)?;
        let mut ts = Vec::new();
        self.targets(lin, lo, hi, n, &mut ts);
        for e in ts {
            let num = e - rest;
            if num % a != 0 {
                continue;
            }
            let v = num / a;
            if v < vlo || v > vhi {
                continue;
            }
            out.push(v);
        }
        if self.gen(s).is_signed() {
            out.sort_unstable_by_key(|&v| key(v));
        } else {
            out.sort_unstable();
        }
        out.dedup();
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn pair(
        &self,
        plan: &Plan,
        d: usize,
        c: usize,
        rem: i64,
        n: i64,
        vals: &mut [i64; MAX_VARS],
        visit: &mut Visit<'_>,
        pairs: &mut Vec<(i64, i64)>,
    ) -> Result<bool> {
        let s1 = plan.order[d];
        let s2 = plan.order[d + 1];
        let (c1, c2) = match (self.gen(s1), self.gen(s2)) {
            (SlotGenerator::ScaledSquare(a), SlotGenerator::ScaledSquare(b)) => {
                (*a as i128, *b as i128)
            }
            _ => unreachable!("pair step planned on non-square slots"),
        };
        let lin = self.conjs[c].linear.as_ref().unwrap();
        let (a1, a2) = (lin.coeffs[s1] as i128, lin.coeffs[s2] as i128);
        let rest = self.rest_value(lin, &[s1, s2], vals)?;
        let (l1, h1) = self.value_range(s1, rem);
        let (l2, h2) = self.value_range(s2, rem);
        if l1 > h1 || l2 > h2 {
            return Ok(true);
        }
        let span = |a: i128, l: i64, h: i64| {
            let (x, y) = (a * l as i128, a * h as i128);
            (x.min(y), x.max(y))
        };
        let (p_lo, p_hi) = span(a1, l1, h1);
        let (q_lo, q_hi) = span(a2, l2, h2);
        let lo = i64::try_from(rest as i128 + p_lo + q_lo).map_err(|_| Error::Overflow)?;
        let hi = i64::try_from(rest as i128 + p_hi + q_hi).map_err(|_| Error::Overflow)?;
        let mut ts = Vec::new();
        self.targets(lin, lo, hi, n, &mut ts);
        ts.sort_unstable();
        ts.dedup();

        pairs.clear();
        let r = rem as i128;
        let big_a = c1 * a2 * a2 + c2 * a1 * a1;
        for e in ts {
            let sv = e as i128 - rest as i128;
            let big_b = -2 * c2 * a1 * sv;
            let big_c = c2 * sv * sv - r * a2 * a2;
            let disc = big_b * big_b - 4 * big_a * big_c;
            if disc < 0 {
                continue;
            }
            let root = isqrt128(disc);
            if root * root != disc {
                continue;
            }
            for num in [-big_b + root, -big_b - root] {
                if num % (2 * big_a) != 0 {
                    continue;
                }
                let v1 = num / (2 * big_a);
                let rhs = sv - a1 * v1;
                if rhs % a2 != 0 {
                    continue;
                }
                let v2 = rhs / a2;
                if c1 * v1 * v1 + c2 * v2 * v2 != r {
                    continue;
                }
                if v1 < l1 as i128 || v1 > h1 as i128 || v2 < l2 as i128 || v2 > h2 as i128 {
                    continue;
                }
                pairs.push((v1 as i64, v2 as i64));
            }
        }
        pairs.sort_unstable_by_key(|&(u, v)| (key(u), key(v)));
        pairs.dedup();
        let found = core::mem::take(pairs);
        let mut keep_going = true;
        for &(u, v) in &found {
            if u % plan.stride != 0 || v % plan.stride != 0 {
                continue;
            }
            vals[s1] = u;
            if !self.checks_pass(plan, d, vals, n)? {
                continue;
            }
            vals[s2] = v;
            if !self.checks_pass(plan, d + 1, vals, n)? {
                continue;
            }
            if !visit(&vals[..self.k])? {
                keep_going = false;
                break;
            }
        }
        *pairs = found;
        Ok(keep_going)
    }

    // ---- planning -------------------------------------------------------------

    fn slot_count(&self, s: usize, n: i64) -> f64 {
        let (lo, hi) = self.value_range(s, n);
        if hi < lo {
            return 0.0;
        }
        match self.gen(s) {
            SlotGenerator::ExplicitSet(v) => v.len() as f64,
            _ if lo < 0 => (2 * hi + 1) as f64,
            _ => (hi - lo + 1) as f64,
        }
    }

    fn slot_extent(&self, s: usize, n: i64) -> f64 {
        let (lo, hi) = self.value_range(s, n);
        lo.unsigned_abs().max(hi.unsigned_abs()) as f64
    }

    /// Rough magnitude of a predicate's expression, for selectivity.
    fn magnitude(&self, p: &PredicateExpr, n: i64) -> f64 {
        match p {
            PredicateExpr::Atom(a) => a
                .expr
                .terms()
                .iter()
                .map(|m| {
                    let mut t = m.coeff.unsigned_abs() as f64;
                    for (i, &e) in m.exps.iter().enumerate() {
                        for _ in 0..e {
                            t *= self.slot_extent(i, n).max(1.0);
                        }
                    }
                    t
                })
                .sum(),
            _ => 1.0,
        }
    }

    fn selectivity(&self, p: &PredicateExpr, n: i64) -> f64 {
        match p {
            PredicateExpr::True => 1.0,
            PredicateExpr::Atom(a) => {
                let w = self.magnitude(p, n);
                (a.target.density(w) / (w + 1.0)).min(1.0)
            }
            PredicateExpr::And(l) => l.iter().map(|q| self.selectivity(q, n)).product(),
            PredicateExpr::Or(l) => l
                .iter()
                .map(|q| self.selectivity(q, n))
                .sum::<f64>()
                .min(1.0),
            PredicateExpr::PowerSumPrime(_) => 0.1,
        }
    }

    fn side_selectivity(c: &SideCondition) -> f64 {
        match *c {
            SideCondition::CongruenceEq { m, .. } => 1.0 / m as f64,
            SideCondition::Positive(_) | SideCondition::NonNegative(_) => 1.0,
            _ => 0.5,
        }
    }

    fn plan(&self, n: i64) -> Plan {
        let k = self.k;
        let mut perm: Vec<usize> = (0..k).collect();
        let mut best: Option<(f64, Plan)> = None;
        loop {
            for use_pair in [false, true] {
                if let Some((cost, plan)) = self.evaluate(&perm, use_pair, n) {
                    if best.as_ref().is_none_or(|(b, _)| cost < *b) {
                        best = Some((cost, plan));
                    }
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        best.expect("iterate/leaf plan always exists").1
    }

    fn evaluate(&self, perm: &[usize], use_pair: bool, n: i64) -> Option<(f64, Plan)> {
        let k = self.k;
        let mut order = [0usize; MAX_VARS];
        order[..k].copy_from_slice(perm);
        let mut depth_of = [0usize; MAX_VARS];
        for (d, &s) in perm.iter().enumerate() {
            depth_of[s] = d;
        }
        let at_depth = |mask: u8| -> usize {
            (0..k)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| depth_of[i])
                .max()
                .unwrap_or(0)
        };
        let mut conj_at = [0u32; MAX_VARS];
        for (i, c) in self.conjs.iter().enumerate() {
            conj_at[at_depth(c.mask)] |= 1 << i;
        }
        let mut side_at = [0u32; MAX_VARS];
        for (i, c) in self.sides.iter().enumerate() {
            side_at[at_depth(c.slots())] |= 1 << i;
        }

        let mut action = [Action::Iterate; MAX_VARS];
        action[k - 1] = Action::Leaf;
        if use_pair {
            if k < 2 {
                return None;
            }
            let (s1, s2) = (perm[k - 2], perm[k - 1]);
            let squares = matches!(self.gen(s1), SlotGenerator::ScaledSquare(_))
                && matches!(self.gen(s2), SlotGenerator::ScaledSquare(_));
            if !squares {
                return None;
            }
            let c = (0..self.conjs.len())
                .filter(|&c| {
                    self.conjs[c]
                        .linear
                        .as_ref()
                        .is_some_and(|l| l.coeffs[s1] != 0 && l.coeffs[s2] != 0)
                })
                .min_by(|&x, &y| self.target_width(x, n).total_cmp(&self.target_width(y, n)))?;
            action[k - 2] = Action::Pair(c);
            action[k - 1] = Action::Pair(c);
        }

        let mut nodes = 1.0f64;
        let mut cost = 0.0f64;
        let n_f = (n.max(1)) as f64;
        for d in 0..k {
            let s = perm[d];
            let mut solved = None;
            let branch;
            match action[d] {
                Action::Pair(c) => {
                    let t = self.target_width(c, n);
                    cost += nodes * (t + 1.0);
                    break;
                }
                Action::Leaf => {
                    cost += nodes;
                    break;
                }
                _ => {
                    let count = self.slot_count(s, n);
                    let mut choice = (count, None);
                    for (ci, c) in self.conjs.iter().enumerate() {
                        let Some(lin) = c.linear.as_ref() else {
                            continue;
                        };
                        if lin.coeffs[s] == 0 || at_depth(c.mask) != d {
                            continue;
                        }
                        let t = lin.target.density(
                            self.slot_extent(s, n) * lin.coeffs[s].unsigned_abs() as f64 * 2.0,
                        );
                        if t < choice.0 {
                            choice = (t, Some(ci));
                        }
                    }
                    if let Some(ci) = choice.1 {
                        action[d] = Action::Solve(ci);
                        solved = Some(ci);
                        cost += nodes * (choice.0 + 1.0);
                        branch = choice.0.min(count).max(0.05);
                    } else {
                        cost += nodes * count;
                        branch = count;
                    }
                }
            }
            let mut sel = 1.0;
            for (ci, c) in self.conjs.iter().enumerate() {
                if conj_at[d] & (1 << ci) != 0 && Some(ci) != solved {
                    sel *= self.selectivity(c.pred, n);
                }
            }
            for (i, c) in self.sides.iter().enumerate() {
                if side_at[d] & (1 << i) != 0 {
                    sel *= Self::side_selectivity(c);
                }
            }
            nodes *= (branch * sel).max(1.0 / n_f);
        }
        let tail3 = self.free_tail(perm, &action, &conj_at, &side_at);
        Some((
            cost,
            Plan {
                order,
                action,
                conj_at,
                side_at,
                tail3,
                stride: 1,
            },
        ))
    }

    fn free_tail(
        &self,
        perm: &[usize],
        action: &[Action; MAX_VARS],
        conj_at: &[u32; MAX_VARS],
        side_at: &[u32; MAX_VARS],
    ) -> Option<(usize, i64)> {
        let k = self.k;
        if k < 3 {
            return None;
        }
        let d = k - 3;
        let c = match self.gen(perm[d]) {
            SlotGenerator::ScaledSquare(c) => *c,
            _ => return None,
        };
        let tail = &perm[d..k];
        for j in d..k {
            if self.gen(perm[j]) != &SlotGenerator::ScaledSquare(c)
                || self.lower[perm[j]] == Lower::Pos
                || conj_at[j] != 0
                || matches!(action[j], Action::Solve(_) | Action::Pair(_))
            {
                return None;
            }
            let mut m = side_at[j];
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                // reordering within the tail keeps a representation
                match self.sides[i] {
                    SideCondition::AbsOrderLe { i, j }
                        if tail.contains(&i) && tail.contains(&j) => {}
                    _ => return None,
                }
            }
        }
        Some((d, c))
    }

    fn target_width(&self, c: usize, n: i64) -> f64 {
        let lin = self.conjs[c].linear.as_ref().unwrap();
        let w: f64 = (0..self.k)
            .map(|i| lin.coeffs[i].unsigned_abs() as f64 * self.slot_extent(i, n))
            .sum::<f64>()
            + 1.0;
        lin.target.density(w)
    }
}

fn max_exponent(scale: i64, base: i64, rem: i64) -> i64 {
    if rem < scale {
        return -1;
    }
    let mut k = 0;
    let mut p = scale;
    while let Some(q) = p.checked_mul(base) {
        if q > rem {
            break;
        }
        p = q;
        k += 1;
    }
    k
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
