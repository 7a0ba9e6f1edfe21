//! Statements over quaternary (and ternary) forms with side constraints, and
//! the brute-force witness engine.

mod search;
mod target;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{self, central_binomial, triangular};
use crate::error::{invalid, Error, Result};
use crate::poly::{Poly, MAX_VARS};
use crate::prime::power_sum_plus_one_is_prime;
use crate::ternary::Family;

pub use target::TargetSet;

/// Value set of one term of a form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlotGenerator {
    /// `c·v²`
    ScaledSquare(i64),
    /// `c·v⁴`
    ScaledFourth(i64),
    /// `b^k`, base value is k
    PowerOf(i64),
    /// `s·b^k`, base value is k
    ScaledPowerOf { scale: i64, base: i64 },
    /// one listed element, base value is the element itself
    ExplicitSet(Vec<i64>),
    /// `binomial(2c, c)`, base value is c
    CentralBinomial,
    /// `v(v+1)/2`
    Triangular,
}

impl SlotGenerator {
    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            SlotGenerator::ScaledSquare(c) | SlotGenerator::ScaledFourth(c) => *c >= 1,
            SlotGenerator::PowerOf(b) => *b >= 2,
            SlotGenerator::ScaledPowerOf { scale, base } => *scale >= 1 && *base >= 2,
            SlotGenerator::ExplicitSet(vals) => {
                let mut s = vals.clone();
                s.sort_unstable();
                s.dedup();
                s.len() == vals.len() && vals.iter().all(|&v| v >= 0)
            }
            SlotGenerator::CentralBinomial | SlotGenerator::Triangular => true,
        };
        if ok {
            Ok(())
        } else {
            Err(invalid(format!("malformed slot generator {self:?}")))
        }
    }

    /// Whether negative base values are meaningful (the even-power slots).
    pub fn is_signed(&self) -> bool {
        matches!(
            self,
            SlotGenerator::ScaledSquare(_) | SlotGenerator::ScaledFourth(_)
        )
    }
}

/// The contribution of base value `v` in slot `g`.
pub fn term_value(g: &SlotGenerator, v: i64) -> Result<i64> {
    match g {
        SlotGenerator::ScaledSquare(c) => arith::mul(*c, arith::mul(v, v)?),
        SlotGenerator::ScaledFourth(c) => {
            let sq = arith::mul(v, v)?;
            arith::mul(*c, arith::mul(sq, sq)?)
        }
        SlotGenerator::PowerOf(b) => power_term(1, *b, v),
        SlotGenerator::ScaledPowerOf { scale, base } => power_term(*scale, *base, v),
        SlotGenerator::ExplicitSet(vals) => {
            if vals.contains(&v) {
                Ok(v)
            } else {
                Err(invalid(format!("{v} is not in {vals:?}")))
            }
        }
        SlotGenerator::CentralBinomial => central_binomial(v),
        SlotGenerator::Triangular => triangular(v),
    }
}

fn power_term(scale: i64, base: i64, k: i64) -> Result<i64> {
    if k < 0 {
        return Err(invalid("negative exponent"));
    }
    let k = u32::try_from(k).map_err(|_| Error::Overflow)?;
    arith::mul(scale, arith::checked_pow(base, k)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Naturals,
    Integers,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideCondition {
    /// `v_i ≡ v_j (mod m)`
    CongruenceEq {
        i: usize,
        j: usize,
        m: i64,
    },
    /// `v_i ≤ v_j`
    OrderLe {
        i: usize,
        j: usize,
    },
    /// `|v_i| ≤ |v_j|`, used for canonical counting
    AbsOrderLe {
        i: usize,
        j: usize,
    },
    Positive(usize),
    NonNegative(usize),
    /// `v_i ≡ p (mod 2)`
    Parity {
        i: usize,
        p: i64,
    },
}

impl SideCondition {
    fn slots(&self) -> u8 {
        match *self {
            SideCondition::CongruenceEq { i, j, .. }
            | SideCondition::OrderLe { i, j }
            | SideCondition::AbsOrderLe { i, j } => (1 << i) | (1 << j),
            SideCondition::Positive(i)
            | SideCondition::NonNegative(i)
            | SideCondition::Parity { i, .. } => 1 << i,
        }
    }

    fn holds(&self, v: &[i64]) -> bool {
        match *self {
            SideCondition::CongruenceEq { i, j, m } => (v[i] - v[j]).rem_euclid(m) == 0,
            SideCondition::OrderLe { i, j } => v[i] <= v[j],
            SideCondition::AbsOrderLe { i, j } => v[i].unsigned_abs() <= v[j].unsigned_abs(),
            SideCondition::Positive(i) => v[i] >= 1,
            SideCondition::NonNegative(i) => v[i] >= 0,
            SideCondition::Parity { i, p } => v[i].rem_euclid(2) == p.rem_euclid(2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableDomain {
    pub sign: Sign,
    pub side_conditions: Vec<SideCondition>,
}

impl VariableDomain {
    pub fn naturals() -> Self {
        VariableDomain {
            sign: Sign::Naturals,
            side_conditions: Vec::new(),
        }
    }

    pub fn integers() -> Self {
        VariableDomain {
            sign: Sign::Integers,
            side_conditions: Vec::new(),
        }
    }

    pub fn with(mut self, c: SideCondition) -> Self {
        self.side_conditions.push(c);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub expr: Poly,
    pub absolute: bool,
    pub target: TargetSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredicateExpr {
    True,
    Atom(Atom),
    And(Vec<PredicateExpr>),
    Or(Vec<PredicateExpr>),
    /// `1 + Σ 2^(e_i)` is prime; each exponent is a polynomial in the slots.
    PowerSumPrime(Vec<Poly>),
}

/// Round count for the probabilistic branch of [`PredicateExpr::PowerSumPrime`].
pub const BIG_PRIME_ROUNDS: u32 = 25;

impl PredicateExpr {
    pub fn atom(expr: &str, target: TargetSet) -> Result<Self> {
        Ok(PredicateExpr::Atom(Atom {
            expr: Poly::parse(expr)?,
            absolute: false,
            target,
        }))
    }

    pub fn abs_atom(expr: &str, target: TargetSet) -> Result<Self> {
        Ok(PredicateExpr::Atom(Atom {
            expr: Poly::parse(expr)?,
            absolute: true,
            target,
        }))
    }

    pub fn eval(&self, v: &[i64], n: i64) -> Result<bool> {
        match self {
            PredicateExpr::True => Ok(true),
            PredicateExpr::Atom(a) => {
                let mut x = a.expr.eval(v)?;
                if a.absolute {
                    x = x.checked_abs().ok_or(Error::Overflow)?;
                }
                Ok(a.target.contains(x, n))
            }
            PredicateExpr::And(list) => {
                for p in list {
                    if !p.eval(v, n)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            PredicateExpr::Or(list) => {
                for p in list {
                    if p.eval(v, n)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            PredicateExpr::PowerSumPrime(exps) => {
                let mut e = Vec::with_capacity(exps.len());
                for p in exps {
                    let k = p.eval(v)?;
                    if k < 0 {
                        return Ok(false);
                    }
                    e.push(u32::try_from(k).map_err(|_| Error::Overflow)?);
                }
                Ok(power_sum_plus_one_is_prime(&e, BIG_PRIME_ROUNDS).0)
            }
        }
    }

    pub(crate) fn vars(&self) -> u8 {
        match self {
            PredicateExpr::True => 0,
            PredicateExpr::Atom(a) => a.expr.vars(),
            PredicateExpr::And(l) | PredicateExpr::Or(l) => l.iter().fold(0, |m, p| m | p.vars()),
            PredicateExpr::PowerSumPrime(e) => e.iter().fold(0, |m, p| m | p.vars()),
        }
    }

    pub fn is_probabilistic(&self) -> bool {
        match self {
            PredicateExpr::PowerSumPrime(_) => true,
            PredicateExpr::And(l) | PredicateExpr::Or(l) => l.iter().any(|p| p.is_probabilistic()),
            _ => false,
        }
    }
}

/// How the statement parameter n maps to the integer being represented.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Represented {
    Identity,
    Square,
    TwiceSquare,
    /// `mul·n + add`
    Affine {
        mul: i64,
        add: i64,
    },
}

impl Represented {
    pub fn apply(&self, n: i64) -> Result<i64> {
        match *self {
            Represented::Identity => Ok(n),
            Represented::Square => arith::mul(n, n),
            Represented::TwiceSquare => arith::mul(2, arith::mul(n, n)?),
            Represented::Affine { mul, add } => arith::add(arith::mul(mul, n)?, add),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Applicability {
    pub min: i64,
    /// each entry `(m, residues)` requires `n mod m ∈ residues`
    pub congruences: Vec<(i64, Vec<i64>)>,
    pub ord2_odd: bool,
    pub excluded_families: Vec<Family>,
    pub excluded_values: Vec<i64>,
}

impl Applicability {
    pub fn from(min: i64) -> Self {
        Applicability {
            min,
            congruences: Vec::new(),
            ord2_odd: false,
            excluded_families: Vec::new(),
            excluded_values: Vec::new(),
        }
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= self.min
            && self
                .congruences
                .iter()
                .all(|(m, r)| r.contains(&n.rem_euclid(*m)))
            && (!self.ord2_odd || arith::ord2(n).map(|s| s.ord % 2 == 1).unwrap_or(false))
            && !self.excluded_families.iter().any(|f| f.contains(n))
            && !self.excluded_values.contains(&n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    pub id: String,
    pub slots: Vec<SlotGenerator>,
    pub domain: VariableDomain,
    pub constraint: PredicateExpr,
    pub applicability: Applicability,
    pub represented: Represented,
}

impl Statement {
    pub fn validate(&self) -> Result<()> {
        let k = self.slots.len();
        if k == 0 || k > MAX_VARS {
            return Err(invalid(format!("{}: {k} slots", self.id)));
        }
        for g in &self.slots {
            g.validate()?;
        }
        let full: u8 = ((1u16 << k) - 1) as u8;
        if self.constraint.vars() & !full != 0 {
            return Err(invalid(format!(
                "{}: constraint references a missing slot",
                self.id
            )));
        }
        for c in &self.domain.side_conditions {
            if c.slots() & !full != 0 {
                return Err(invalid(format!(
                    "{}: side condition references a missing slot",
                    self.id
                )));
            }
        }
        Ok(())
    }

    /// Copy with excluded families and values dropped.
    pub fn without_exclusions(&self) -> Statement {
        let mut s = self.clone();
        s.applicability.excluded_families.clear();
        s.applicability.excluded_values.clear();
        s
    }

    pub fn applies(&self, n: i64) -> bool {
        self.applicability.contains(n)
    }

    /// The represented integer for parameter `n`, or an error outside the
    /// applicability set.
    pub fn target_for(&self, n: i64) -> Result<i64> {
        if !self.applies(n) {
            return Err(Error::NotApplicable {
                id: self.id.clone(),
                n,
            });
        }
        self.represented.apply(n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// the represented integer
    pub n: i64,
    pub values: Vec<i64>,
    pub terms: Vec<i64>,
}

impl Witness {
    pub fn from_values(s: &Statement, n: i64, values: Vec<i64>) -> Result<Witness> {
        let terms = s
            .slots
            .iter()
            .zip(&values)
            .map(|(g, &v)| term_value(g, v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Witness { n, values, terms })
    }
}

/// Re-checks a witness from scratch: slot domains, term values, the sum,
/// side conditions and the constraint.
pub fn validate_witness(s: &Statement, w: &Witness) -> Result<bool> {
    if w.values.len() != s.slots.len() || w.terms.len() != s.slots.len() {
        return Ok(false);
    }
    let mut sum: i64 = 0;
    for ((g, &v), &t) in s.slots.iter().zip(&w.values).zip(&w.terms) {
        if !g.is_signed() && v < 0 {
            return Ok(false);
        }
        if s.domain.sign == Sign::Naturals && v < 0 {
            return Ok(false);
        }
        match term_value(g, v) {
            Ok(tv) if tv == t => sum = arith::add(sum, tv)?,
            Ok(_) | Err(Error::InvalidArgument(_)) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    if sum != w.n {
        return Ok(false);
    }
    let mut vals = [0i64; MAX_VARS];
    vals[..w.values.len()].copy_from_slice(&w.values);
    if !s.domain.side_conditions.iter().all(|c| c.holds(&vals)) {
        return Ok(false);
    }
    s.constraint.eval(&vals, w.n)
}

pub fn find_witness(s: &Statement, n: i64) -> Result<Option<Witness>> {
    let target = s.target_for(n)?;
    let engine = search::Engine::new(s, false)?;
    let mut found = None;
    engine.run(target, &mut |vals| {
        found = Some(Witness::from_values(s, target, vals.to_vec())?);
        Ok(false)
    })?;
    Ok(found)
}

pub fn enumerate_witnesses(s: &Statement, n: i64, canonical: bool) -> Result<Vec<Witness>> {
    let target = s.target_for(n)?;
    let engine = search::Engine::new(s, canonical)?;
    let mut out = Vec::new();
    engine.run(target, &mut |vals| {
        out.push(Witness::from_values(s, target, vals.to_vec())?);
        Ok(true)
    })?;
    Ok(out)
}

pub fn count_witnesses(s: &Statement, n: i64, canonical: bool) -> Result<u64> {
    let target = s.target_for(n)?;
    let engine = search::Engine::new(s, canonical)?;
    let mut count = 0u64;
    engine.run(target, &mut |_| {
        count += 1;
        Ok(true)
    })?;
    Ok(count)
}

/// Reusable search state for scanning many n with one statement.
pub struct Searcher<'a> {
    statement: &'a Statement,
    engine: search::Engine<'a>,
}

impl<'a> Searcher<'a> {
    pub fn new(s: &'a Statement) -> Result<Self> {
        Ok(Searcher {
            statement: s,
            engine: search::Engine::new(s, false)?,
        })
    }

    /// `Ok(None)` when n lies outside the applicability set.
    pub fn has_witness(&self, n: i64) -> Result<Option<bool>> {
        if !self.statement.applies(n) {
            return Ok(None);
        }
        let target = self.statement.represented.apply(n)?;
        let mut hit = false;
        self.engine.run(target, &mut |_| {
            hit = true;
            Ok(false)
        })?;
        Ok(Some(hit))
    }
}

/// Least applicable n in `[lo, hi]` without a witness, scanning in order.
pub fn first_failure(s: &Statement, lo: i64, hi: i64) -> Result<Option<i64>> {
    let searcher = Searcher::new(s)?;
    for n in lo..=hi {
        if searcher.has_witness(n)? == Some(false) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Number of applicable n in `[lo, hi]`.
pub fn applicable_count(s: &Statement, lo: i64, hi: i64) -> u64 {
    (lo..=hi).filter(|&n| s.applies(n)).count() as u64
}
