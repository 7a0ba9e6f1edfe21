use alloc::format;

use super::registry::{record, squares};
use super::StatementRecord;
use crate::arith::{gcd, is_squarefree};
use crate::error::{Error, Result};
use crate::forms::{
    first_failure, Applicability, Atom, PredicateExpr, Represented, TargetSet, VariableDomain,
};
use crate::poly::Poly;

/// Target family of a linear form over four integer squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadruplePart {
    /// ax+by+cz+dw ∈ {8^k}, with 4 ∤ gcd
    Eights,
    /// ax+by+cz+dw ∈ {2·8^k}, with 2 ∤ gcd
    TwiceEights,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrupleClass {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub listed: bool,
    pub first_failure: Option<i64>,
}

const EIGHTS: [[i64; 4]; 12] = [
    [7, 3, 2, 1],
    [7, 5, 2, 1],
    [8, 4, 2, 1],
    [8, 4, 3, 2],
    [8, 5, 4, 2],
    [8, 6, 2, 1],
    [8, 6, 3, 2],
    [8, 6, 5, 1],
    [8, 6, 5, 2],
    [9, 8, 7, 4],
    [10, 4, 3, 1],
    [12, 4, 3, 1],
];

const TWICE_EIGHTS: [[i64; 4]; 12] = [
    [7, 3, 2, 1],
    [7, 5, 2, 1],
    [8, 4, 2, 1],
    [8, 4, 3, 2],
    [8, 5, 4, 2],
    [8, 6, 2, 1],
    [8, 6, 3, 2],
    [8, 6, 5, 2],
    [9, 5, 4, 2],
    [14, 3, 2, 1],
    [14, 5, 2, 1],
    [14, 7, 3, 2],
];

pub fn listed_quadruples(part: QuadruplePart) -> &'static [[i64; 4]] {
    match part {
        QuadruplePart::Eights => &EIGHTS,
        QuadruplePart::TwiceEights => &TWICE_EIGHTS,
    }
}

fn check_quadruple(a: i64, b: i64, c: i64, d: i64, part: QuadruplePart) -> Result<()> {
    if !(a >= b && b >= c && c >= d && d >= 0 && a >= 1) {
        return Err(Error::Precondition(format!(
            "need a >= b >= c >= d >= 0 and a >= 1, got ({a},{b},{c},{d})"
        )));
    }
    let g = gcd(gcd(a, b), gcd(c, d));
    let m = match part {
        QuadruplePart::Eights => 4,
        QuadruplePart::TwiceEights => 2,
    };
    if g % m == 0 {
        return Err(Error::Precondition(format!(
            "{m} divides gcd({a},{b},{c},{d})"
        )));
    }
    Ok(())
}

fn linear_atom(p: Poly, target: TargetSet) -> PredicateExpr {
    PredicateExpr::Atom(Atom {
        expr: p,
        absolute: false,
        target,
    })
}

/// The four-square statement with `ax+by+cz+dw` in the part's target family.
pub fn quadruple_statement(a: i64, b: i64, c: i64, d: i64, part: QuadruplePart) -> StatementRecord {
    let (scale, locus) = match part {
        QuadruplePart::Eights => (1, "Conjecture 4.6(i)"),
        QuadruplePart::TwiceEights => (2, "Conjecture 4.6(ii)"),
    };
    record(
        &format!("quad-{scale}x8k-{a}-{b}-{c}-{d}"),
        locus,
        squares(&[1, 1, 1, 1]),
        VariableDomain::integers(),
        linear_atom(
            Poly::linear_form(&[a, b, c, d]),
            TargetSet::ScaledPowersOf(scale, 8),
        ),
        Applicability::from(1),
    )
}

/// Searches `1..=bound` for the least n with no witness.
pub fn classify_quadruple(
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    part: QuadruplePart,
    bound: i64,
) -> Result<QuadrupleClass> {
    check_quadruple(a, b, c, d, part)?;
    let rec = quadruple_statement(a, b, c, d, part);
    let listed = listed_quadruples(part).contains(&[a, b, c, d]);
    let first_failure = first_failure(&rec.statement, 1, bound)?;
    Ok(QuadrupleClass {
        a,
        b,
        c,
        d,
        listed,
        first_failure,
    })
}

/// Which cubic form is required to be a square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairPart {
    /// ax³ + b(y−z)³ over naturals
    Difference,
    /// ax³ + by³ over integers, a ≤ b
    Plain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairClass {
    pub a: i64,
    pub b: i64,
    pub listed: bool,
    pub first_failure: Option<i64>,
}

const DIFFERENCE_PAIRS: [(i64, i64); 11] = [
    (1, 1),
    (1, 9),
    (2, 18),
    (8, 1),
    (9, 5),
    (9, 8),
    (9, 40),
    (16, 2),
    (18, 16),
    (25, 16),
    (72, 1),
];

const PLAIN_PAIRS: [(i64, i64); 11] = [
    (1, 2),
    (1, 8),
    (2, 16),
    (4, 23),
    (4, 31),
    (5, 9),
    (8, 9),
    (8, 225),
    (9, 47),
    (25, 88),
    (50, 54),
];

pub fn listed_pairs(part: PairPart) -> &'static [(i64, i64)] {
    match part {
        PairPart::Difference => &DIFFERENCE_PAIRS,
        PairPart::Plain => &PLAIN_PAIRS,
    }
}

pub fn pair_statement(a: i64, b: i64, part: PairPart) -> StatementRecord {
    let cube = |p: Poly, k: i64| {
        p.pow(3)
            .and_then(|q| q.scale(k))
            .expect("small coefficients")
    };
    let (second, domain, locus) = match part {
        PairPart::Difference => (
            Poly::var(1).sub(&Poly::var(2)).expect("linear"),
            VariableDomain::naturals(),
            "Conjecture 4.11(i)",
        ),
        PairPart::Plain => (
            Poly::var(1),
            VariableDomain::integers(),
            "Conjecture 4.11(ii)",
        ),
    };
    let expr = cube(Poly::var(0), a)
        .add(&cube(second, b))
        .expect("small coefficients");
    let tag = if part == PairPart::Difference {
        "diff"
    } else {
        "plain"
    };
    record(
        &format!("pair-{tag}-{a}-{b}"),
        locus,
        squares(&[1, 1, 1, 1]),
        domain,
        linear_atom(expr, TargetSet::Squares),
        Applicability::from(0),
    )
}

/// Searches `0..=bound` for the least n with no witness.
pub fn classify_pair(a: i64, b: i64, part: PairPart, bound: i64) -> Result<PairClass> {
    if a < 1 || b < 1 || !is_squarefree(gcd(a, b)) {
        return Err(Error::Precondition(format!(
            "need positive a, b with squarefree gcd, got ({a},{b})"
        )));
    }
    if part == PairPart::Plain && a > b {
        return Err(Error::Precondition(format!("need a <= b, got ({a},{b})")));
    }
    let rec = pair_statement(a, b, part);
    let listed = listed_pairs(part).contains(&(a, b));
    let first_failure = first_failure(&rec.statement, 0, bound)?;
    Ok(PairClass {
        a,
        b,
        listed,
        first_failure,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleClass {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    /// least m with no witness for m², if any
    pub first_failure: Option<i64>,
}

/// Squares m² as four natural squares with ax+by+cz a power of 4.
pub fn triple_statement(a: i64, b: i64, c: i64) -> StatementRecord {
    record(
        &format!("triple-{a}-{b}-{c}"),
        "Remark 4.10, closing conjecture",
        squares(&[1, 1, 1, 1]),
        VariableDomain::naturals(),
        linear_atom(Poly::linear_form(&[a, b, c]), TargetSet::PowersOf(4)),
        Applicability::from(1),
    )
    .with_represented(Represented::Square)
}

/// Searches `1..=bound` for the least m whose square has no witness.
pub fn classify_triple(a: i64, b: i64, c: i64, bound: i64) -> Result<TripleClass> {
    if a < 1 || b < 1 || c < 1 || !is_squarefree(gcd(gcd(a, b), c)) {
        return Err(Error::Precondition(format!(
            "need positive a, b, c with squarefree gcd, got ({a},{b},{c})"
        )));
    }
    let rec = triple_statement(a, b, c);
    let first_failure = first_failure(&rec.statement, 1, bound)?;
    Ok(TripleClass {
        a,
        b,
        c,
        first_failure,
    })
}

impl StatementRecord {
    fn with_represented(mut self, r: Represented) -> Self {
        self.statement.represented = r;
        self
    }
}
