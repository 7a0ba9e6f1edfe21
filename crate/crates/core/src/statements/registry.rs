use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::classify::{
    listed_pairs, listed_quadruples, pair_statement, quadruple_statement, PairPart, QuadruplePart,
};
use super::{Convention, OeisRef, StatementRecord};
use crate::forms::{
    Applicability, PredicateExpr, Represented, SideCondition, SlotGenerator, Statement,
    TargetSet as T, VariableDomain,
};
use crate::ternary::Family;

use SideCondition::*;
use SlotGenerator::*;

pub(super) fn squares(cs: &[i64]) -> Vec<SlotGenerator> {
    cs.iter().map(|&c| ScaledSquare(c)).collect()
}

fn four() -> Vec<SlotGenerator> {
    squares(&[1, 1, 1, 1])
}

pub(super) fn atom(e: &str, t: T) -> PredicateExpr {
    PredicateExpr::atom(e, t).expect("registry expression parses")
}

fn abs(e: &str, t: T) -> PredicateExpr {
    PredicateExpr::abs_atom(e, t).expect("registry expression parses")
}

fn and(v: Vec<PredicateExpr>) -> PredicateExpr {
    PredicateExpr::And(v)
}

fn or(v: Vec<PredicateExpr>) -> PredicateExpr {
    PredicateExpr::Or(v)
}

fn pow(b: i64) -> T {
    T::PowersOf(b)
}

fn pow_or_zero(b: i64) -> T {
    T::AnyOf(vec![T::PowersOf(b), T::Exact(0)])
}

fn nat() -> VariableDomain {
    VariableDomain::naturals()
}

fn int() -> VariableDomain {
    VariableDomain::integers()
}

fn from(min: i64) -> Applicability {
    Applicability::from(min)
}

fn odd(min: i64) -> Applicability {
    let mut a = Applicability::from(min);
    a.congruences.push((2, vec![1]));
    a
}

pub(super) fn record(
    id: &str,
    locus: &str,
    slots: Vec<SlotGenerator>,
    domain: VariableDomain,
    constraint: PredicateExpr,
    app: Applicability,
) -> StatementRecord {
    let probabilistic = constraint.is_probabilistic();
    StatementRecord {
        statement: Statement {
            id: id.to_string(),
            slots,
            domain,
            constraint,
            applicability: app,
            represented: Represented::Identity,
        },
        paper_locus: locus.to_string(),
        verified_bound_paper: None,
        oeis_refs: Vec::new(),
        probabilistic,
    }
}

trait Tweak {
    fn bound(self, b: u64) -> Self;
    fn oeis(self, a: &str, c: Convention) -> Self;
    fn represent(self, r: Represented) -> Self;
}

impl Tweak for StatementRecord {
    fn bound(mut self, b: u64) -> Self {
        self.verified_bound_paper = Some(b);
        self
    }

    fn oeis(mut self, a: &str, c: Convention) -> Self {
        self.oeis_refs.push(OeisRef {
            a_number: a.to_string(),
            convention: c,
        });
        self
    }

    fn represent(mut self, r: Represented) -> Self {
        self.statement.represented = r;
        self
    }
}

const C44_I: [&str; 44] = [
    "2x-y",
    "2x-3y",
    "3x+y-z",
    "6x+y-z",
    "2x-2y-z",
    "4x-2y-z",
    "4x-3y-z",
    "4x-4y-3z",
    "x+y-z",
    "x+y-2z",
    "x+2y-z",
    "x+2y-2z",
    "x+3y-z",
    "x+3y-2z",
    "x+3y-3z",
    "x+3y-4z",
    "x+3y-5z",
    "x+4y-z",
    "x+4y-2z",
    "x+4y-3z",
    "x+4y-4z",
    "x+5y-z",
    "x+5y-2z",
    "x+5y-4z",
    "x+5y-5z",
    "x+6y-3z",
    "x+7y-4z",
    "x+7y-7z",
    "x+8y-z",
    "x+9y-2z",
    "2x+3y-z",
    "2x+3y-3z",
    "2x+3y-4z",
    "2x+5y-z",
    "2x+5y-3z",
    "2x+5y-4z",
    "2x+5y-5z",
    "2x+7y-z",
    "2x+7y-3z",
    "2x+7y-7z",
    "2x+9y-3z",
    "2x+11y-5z",
    "3x+4y-3z",
    "7x+8y-7z",
];

const C44_II: [&str; 32] = [
    "x+y+2z-2w",
    "x+y+2z-3w",
    "x+y+2z-4w",
    "x+2y+2z-3w",
    "x+2y+3z-4w",
    "x+2y+4z-3w",
    "x+2y+6z-7w",
    "x+3y+4z-4w",
    "x+4y+6z-5w",
    "2x+3y+5z-4w",
    "2x+y-z-w",
    "2x+y-2z-w",
    "2x+y-3z-w",
    "2x+2y-3z-2w",
    "3x+y-3z-2w",
    "3x+y-4z-2w",
    "3x+2y-2z-w",
    "3x+2y-3z-w",
    "3x+2y-3z-2w",
    "3x+y-2z-w",
    "3x+2y-6z-w",
    "4x+3y-4z-3w",
    "4x+3y-5z-w",
    "4x+3y-5z-2w",
    "5x+2y-2z-w",
    "5x+2y-3z-2w",
    "5x+2y-4z-3w",
    "5x+4y-5z-w",
    "7x+y-6z-2w",
    "8x+3y-3z-2w",
    "8x+3y-10z-w",
    "9x+y-4z-w",
];

const C45_I: [&str; 17] = [
    "2x-y",
    "x+y-z",
    "x-y-z",
    "x+y-2z",
    "2x+y-z",
    "2x-y-z",
    "2x-2y-z",
    "2x+y-3z",
    "2x+2y-2z",
    "2x+2y-4z",
    "3x-2y-z",
    "x+3y-3z",
    "2x+3y-3z",
    "4x+2y-2z",
    "8x+2y-2z",
    "2(x-y)+z-w",
    "4(x-y)+2(z-w)",
];

const C45_II: [&str; 20] = [
    "x+y-3z",
    "x+2y-3z",
    "x+2y-4z",
    "x+2y-5z",
    "x+3y-3z",
    "x+3y-5z",
    "x+4y-2z",
    "x+5y-2z",
    "x+5y-7z",
    "2x+3y-4z",
    "2x+4y-6z",
    "2x+4y-10z",
    "2x+5y-4z",
    "4x+6y-6z",
    "4x+6y-14z",
    "x+4y-2z-w",
    "x+8y-3z-w",
    "2x+3y-3z-w",
    "x+y+2z-2w",
    "x+2y+3z-4w",
];

const C45_III: [&str; 13] = [
    "x+2y-2z",
    "x+3y-3z",
    "2x+3y-3z",
    "4x+6y-6z",
    "4x+8y-8z",
    "4x+2y-10z",
    "4x+12y-12z",
    "8x+12y-12z",
    "8x+4y-20z",
    "2x+y-z-w",
    "8x+4y-4z-4w",
    "2x+8y-4z-2w",
    "4x+16y-8z-4w",
];

const C412_I: [&str; 7] = [
    "2y+z+w",
    "2y+z+3w",
    "2x+2y+z+w",
    "2x+2y+z+3w",
    "4x+2y+z+w",
    "4x+2y+z+3w",
    "4x+2y+z+5w",
];

const C412_II: [&str; 6] = [
    "x+2y+w",
    "y+z+w",
    "y+2z+w",
    "y+2z+3w",
    "x+2y+2z+w",
    "x+2y+2z+3w",
];

const C413_I: [&str; 15] = [
    "x+2y+3z",
    "x+2y+5z",
    "x+3y+4z",
    "y+3z+2w",
    "y+3z+4w",
    "2y+z+w",
    "x+y+2z+2w",
    "x+2y+2z+2w",
    "x+2y+3z+w",
    "x+2y+3z+2w",
    "x+2y+3z+4w",
    "x+2y+5z+2w",
    "x+2y+5z+6w",
    "x+3y+4z+2w",
    "x+3y+4z+4w",
];

const C413_II: [&str; 7] = [
    "x+y+2z+2w",
    "x+y+2z+6w",
    "x+2y+3z+2w",
    "x+2y+3z+6w",
    "x+2y+4z+4w",
    "x+2y+5z+2w",
    "3x+3y+2z+2w",
];

const C413_III: [&str; 3] = ["x+2y+3z+2w", "x+2y+3z+4w", "x+2y+3z+6w"];

fn family(
    out: &mut Vec<StatementRecord>,
    prefix: &str,
    locus: &str,
    polys: &[&str],
    slots: &[i64],
    domain: VariableDomain,
    target: T,
    absolute: bool,
    min: i64,
) {
    for (i, p) in polys.iter().enumerate() {
        let c = if absolute {
            abs(p, target.clone())
        } else {
            atom(p, target.clone())
        };
        let id = format!("{prefix}-{:02}", i + 1);
        let mut note = format!("{locus}, polynomial {}: {p}", i + 1);
        if prefix == "C4.4i" && (i == 2 || i == 3) {
            let orig = if i == 2 { "x+(y-z)/3" } else { "2x+(y-z)/3" };
            note = format!(
                "{locus}, polynomial {}: {orig}, cleared of the division as {p} in 3*2^k",
                i + 1
            );
        }
        if prefix == "C4.5i" && i == 1 {
            note.push_str(
                " (printed with a doubled comma after it; read as the single polynomial)",
            );
        }
        let mut rec = record(&id, &note, squares(slots), domain.clone(), c, from(min));
        if prefix == "C4.4i" && (i == 2 || i == 3) {
            rec.statement.constraint = atom(p, T::ScaledPowersOf(3, 2));
        }
        out.push(rec);
    }
}

/// Every registered statement, in a fixed order with unique ids.
pub fn registry() -> Vec<StatementRecord> {
    let mut r: Vec<StatementRecord> = Vec::new();

    // ---- Theorem 1.1 ----
    r.push(record(
        "T1.1i",
        "Theorem 1.1(i), first assertion",
        vec![
            ScaledSquare(1),
            ScaledSquare(1),
            ScaledSquare(1),
            ExplicitSet(vec![1, 8, 64]),
        ],
        nat(),
        PredicateExpr::True,
        from(1),
    ));
    r.push(
        record(
            "T1.1i-sq0",
            "Theorem 1.1(i), squares with r = 0",
            vec![
                ScaledSquare(1),
                ScaledSquare(1),
                ScaledSquare(1),
                PowerOf(16),
            ],
            nat(),
            PredicateExpr::True,
            from(1),
        )
        .represent(Represented::Square),
    );
    r.push(
        record(
            "T1.1i-sq1",
            "Theorem 1.1(i), squares with r = 1",
            vec![
                ScaledSquare(1),
                ScaledSquare(1),
                ScaledSquare(1),
                ScaledPowerOf { scale: 4, base: 16 },
            ],
            nat(),
            PredicateExpr::True,
            from(2),
        )
        .represent(Represented::Square),
    );
    r.push(record(
        "T1.1ii",
        "Theorem 1.1(ii)",
        four(),
        nat(),
        atom("x-y", T::TwoAdicHalf),
        from(1),
    ));
    let mut a = from(0);
    a.excluded_families.push(Family::ScaledPowers {
        scale: 56,
        base: 64,
    });
    r.push(record(
        "T1.1iii-unsigned",
        "Theorem 1.1(iii), first assertion",
        four(),
        nat(),
        atom("x-y", pow_or_zero(8)),
        a,
    ));
    r.push(record(
        "T1.1iii-signed",
        "Theorem 1.1(iii), consequence over the integers",
        four(),
        int(),
        atom("x+y", pow_or_zero(8)),
        from(0),
    ));
    r.push(
        record(
            "T1.1iv",
            "Theorem 1.1(iv)",
            four(),
            int(),
            atom("x+y+z+w", T::TwoAdicHalfUp),
            from(1),
        )
        .oeis("A281494", Convention::Canonical),
    );

    // ---- Theorem 1.2 ----
    r.push(record(
        "T1.2i",
        "Theorem 1.2(i)",
        four(),
        nat(),
        abs("2x-y", pow(4)),
        from(1),
    ));
    for a in [1, 2] {
        r.push(record(
            &format!("T1.2ii-a{a}"),
            &format!("Theorem 1.2(ii) with a = {a}"),
            four(),
            nat(),
            atom("2x-y", T::SignedScaledPowersWithZero(a, 8)),
            from(0),
        ));
    }
    r.push(record(
        "T1.2iii-conclusion",
        "Theorem 1.2(iii), conclusion (conditional on H-1.2iii)",
        four(),
        int(),
        atom("x+3y", pow(4)),
        from(1),
    ));
    let mut a = from(1);
    a.congruences.push((20, vec![9]));
    r.push(record(
        "H-1.2iii",
        "Theorem 1.2(iii), hypothesis; also Remark 1.2",
        squares(&[5, 5, 1]),
        int().with(Parity { i: 2, p: 1 }),
        PredicateExpr::True,
        a,
    ));

    // ---- Theorem 1.3 and Remark 1.3 ----
    r.push(record(
        "T1.3i",
        "Theorem 1.3(i)",
        four(),
        nat(),
        abs("x+y-z", pow(4)),
        from(1),
    ));
    for a in [1, 2] {
        r.push(record(
            &format!("T1.3ii-a{a}"),
            &format!("Theorem 1.3(ii) with a = {a}"),
            four(),
            nat(),
            atom("x+y-z", T::SignedScaledPowersWithZero(a, 8)),
            from(0),
        ));
    }
    r.push(
        record(
            "R1.3a",
            "Remark 1.3, first conjecture",
            four(),
            nat().with(CongruenceEq { i: 0, j: 1, m: 2 }),
            abs("x+y-z", pow(4)),
            from(1),
        )
        .oeis("A299825", Convention::Unknown),
    );
    r.push(
        record(
            "R1.3b",
            "Remark 1.3, second conjecture",
            four(),
            nat()
                .with(OrderLe { i: 1, j: 0 })
                .with(OrderLe { i: 1, j: 2 })
                .with(CongruenceEq { i: 0, j: 1, m: 2 }),
            atom("x+y-z", T::Cubes),
            from(0),
        )
        .oeis("A282091", Convention::Unknown),
    );

    // ---- Theorem 1.4 ----
    for c in [1, 2] {
        r.push(record(
            &format!("T1.4i-c{c}"),
            &format!("Theorem 1.4(i) with c = {c}"),
            four(),
            int(),
            atom("x+y+2z", T::ScaledPowersOf(c, 4)),
            from(1),
        ));
    }
    r.push(record(
        "T1.4ii",
        "Theorem 1.4(ii), first assertion",
        four(),
        int(),
        atom("x+2y+2z", pow(4)),
        from(1),
    ));
    r.push(
        record(
            "T1.4ii-sq",
            "Theorem 1.4(ii), squares",
            four(),
            int(),
            atom("x+2y+2z", pow(8)),
            from(1),
        )
        .represent(Represented::Square),
    );
    let mut a = from(1);
    a.excluded_families
        .push(Family::ScaledPowers { scale: 1, base: 16 });
    a.excluded_families
        .push(Family::ScaledPowers { scale: 8, base: 16 });
    r.push(record(
        "T1.4iii",
        "Theorem 1.4(iii), first assertion",
        four(),
        int(),
        atom("x+2y+2z", T::ScaledPowersOf(3, 4)),
        a,
    ));
    r.push(record(
        "T1.4iii-b",
        "Theorem 1.4(iii), consequence",
        four(),
        int(),
        atom("x+2y+2z", T::ScaledPowersOf(3, 2)),
        from(2),
    ));

    // ---- Theorem 1.5 ----
    let one = || T::Exact(1);
    let t15: [(&str, &str, [i64; 4], bool, &str); 11] = [
        (
            "T1.5i-a",
            "Theorem 1.5(i), first assertion",
            [1, 1, 1, 2],
            true,
            "x-y",
        ),
        (
            "T1.5i-b",
            "Theorem 1.5(i), second assertion",
            [1, 2, 2, 2],
            false,
            "x+y+z",
        ),
        (
            "T1.5ii-a",
            "Theorem 1.5(ii), first assertion",
            [1, 1, 1, 2],
            false,
            "x+y+2z",
        ),
        (
            "T1.5ii-b",
            "Theorem 1.5(ii), second assertion",
            [1, 4, 1, 2],
            false,
            "x+2y+2z",
        ),
        (
            "T1.5ii-c",
            "Theorem 1.5(ii), third assertion",
            [1, 2, 2, 2],
            false,
            "x+y+3z",
        ),
        (
            "T1.5iii-a",
            "Theorem 1.5(iii), first assertion",
            [1, 1, 1, 2],
            false,
            "y+z+2w",
        ),
        (
            "T1.5iii-b",
            "Theorem 1.5(iii), second assertion",
            [1, 1, 4, 2],
            false,
            "y+2z+2w",
        ),
        (
            "T1.5iii-c",
            "Theorem 1.5(iii), third assertion",
            [1, 2, 2, 2],
            false,
            "x+y+z+2w",
        ),
        ("T1.5iv", "Theorem 1.5(iv)", [1, 1, 1, 2], false, "y+z+w"),
        (
            "T1.5v-a",
            "Theorem 1.5(v), first assertion",
            [1, 1, 2, 5],
            false,
            "y+w",
        ),
        (
            "T1.5v-b",
            "Theorem 1.5(v), second assertion (conditional on H-1.5v)",
            [1, 1, 2, 6],
            false,
            "y+w",
        ),
    ];
    for (id, locus, cs, naturals, p) in t15 {
        r.push(record(
            id,
            locus,
            squares(&cs),
            if naturals { nat() } else { int() },
            atom(p, one()),
            from(1),
        ));
    }
    r.push(
        record(
            "H-1.5v",
            "Theorem 1.5(v), hypothesis; also Remark 1.6",
            squares(&[1, 7, 14]),
            int(),
            PredicateExpr::True,
            from(0),
        )
        .represent(Represented::Affine { mul: 7, add: 1 }),
    );
    r.push(record(
        "T1.5vi",
        "Theorem 1.5(vi)",
        squares(&[1, 1, 1, 3]),
        int(),
        atom("x+y+2z", T::Exact(2)),
        from(1),
    ));
    r.push(record(
        "T1.5vii",
        "Theorem 1.5(vii)",
        squares(&[1, 1, 1, 2]),
        int(),
        atom("x+y+z", T::FiniteChoice(vec![1, 4])),
        from(5),
    ));
    r.push(record(
        "T1.5viii",
        "Theorem 1.5(viii)",
        squares(&[1, 1, 1, 2]),
        int(),
        atom("x+y+2z", T::FiniteChoice(vec![2, 8])),
        from(8),
    ));

    // ---- Theorem 1.6 ----
    for (tag, t) in [("sq", T::Squares), ("cube", T::Cubes)] {
        let what = if tag == "sq" { "square" } else { "cube" };
        r.push(record(
            &format!("T1.6i-{tag}"),
            &format!("Theorem 1.6(i), {what}"),
            squares(&[1, 1, 1, 2]),
            int(),
            atom("x+y+z+w", t.clone()),
            from(0),
        ));
        r.push(record(
            &format!("T1.6ii-{tag}"),
            &format!("Theorem 1.6(ii), {what}, as stated"),
            squares(&[1, 1, 1, 2]),
            int(),
            atom("x+2y+2z", t.clone()),
            from(0),
        ));
        r.push(record(
            &format!("T1.6ii-{tag}-var"),
            &format!(
                "Theorem 1.6(ii), {what}, in the form its proof constructs (the weighted slot enters the linear form)"
            ),
            squares(&[1, 1, 1, 2]),
            int(),
            atom("x+2z+2w", t),
            from(0),
        ));
    }

    // ---- Conjecture 1.1 ----
    r.push(
        record(
            "C1.1i",
            "Conjecture 1.1(i), first assertion",
            four(),
            nat(),
            atom("x+2(y-z)", pow(4)),
            from(1),
        )
        .bound(1_000_000_000)
        .oeis("A279612", Convention::Unknown)
        .oeis("A279616", Convention::Unknown),
    );
    r.push(
        record(
            "C1.1i-sq",
            "Conjecture 1.1(i), squares",
            four(),
            nat(),
            atom("x+2(y-z)", pow(8)),
            from(1),
        )
        .represent(Represented::Square),
    );
    for c in [1, 2, 4] {
        r.push(
            record(
                &format!("C1.1ii-c{c}"),
                &format!("Conjecture 1.1(ii) with c = {c}"),
                four(),
                nat().with(OrderLe { i: 1, j: 2 }),
                atom(&format!("{c}(2x+y-z)"), pow_or_zero(8)),
                from(0),
            )
            .bound(2_000_000)
            .oeis("A284343", Convention::Unknown),
        );
    }

    // ---- Conjecture 4.1 and Remark 4.1 ----
    r.push(
        record(
            "C4.1i",
            "Conjecture 4.1(i)",
            vec![ScaledSquare(1), ScaledSquare(1), PowerOf(3), PowerOf(5)],
            nat(),
            PredicateExpr::True,
            from(2),
        )
        .bound(20_000_000_000),
    );
    r.push(
        record(
            "C4.1ii",
            "Conjecture 4.1(ii)",
            vec![
                ScaledSquare(1),
                ScaledSquare(1),
                CentralBinomial,
                CentralBinomial,
            ],
            nat(),
            PredicateExpr::True,
            from(2),
        )
        .bound(10_000_000_000),
    );
    r.push(
        record(
            "C4.1iii",
            "Conjecture 4.1(iii)",
            vec![
                ScaledSquare(1),
                ScaledSquare(1),
                PowerOf(2),
                ScaledPowerOf { scale: 5, base: 2 },
            ],
            nat(),
            PredicateExpr::True,
            from(6),
        )
        .bound(5_000_000_000),
    );
    r.push(
        record(
            "R4.1-triangular",
            "Remark 4.1, two triangular numbers and two powers of 5",
            vec![Triangular, Triangular, PowerOf(5), PowerOf(5)],
            nat(),
            PredicateExpr::True,
            from(2),
        )
        .oeis("A303389", Convention::Unknown),
    );

    // ---- Conjecture 4.2 ----
    let mut a = from(1);
    a.ord2_odd = true;
    r.push(record(
        "C4.2i-sq",
        "Conjecture 4.2(i), square",
        squares(&[1, 1, 1]),
        int(),
        atom("x+3y+5z", T::Squares),
        a.clone(),
    ));
    r.push(record(
        "C4.2i-2sq",
        "Conjecture 4.2(i), twice a square",
        squares(&[1, 1, 1]),
        int(),
        atom("x+3y+5z", T::ScaledSquares(2)),
        a,
    ));
    let mut a = from(0);
    a.excluded_families.push(Family::e0());
    r.push(record(
        "C4.2ii",
        "Conjecture 4.2(ii)",
        squares(&[1, 1, 1]),
        int(),
        atom("x+2y+3z", T::SquareOrTwiceSquare),
        a,
    ));
    r.push(
        record(
            "C4.2iii-a",
            "Conjecture 4.2(iii), first assertion (8n+1)",
            squares(&[1, 1, 1]),
            int().with(Positive(2)),
            atom("x+3y", T::Squares),
            from(0),
        )
        .represent(Represented::Affine { mul: 8, add: 1 }),
    );
    r.push(
        record(
            "C4.2iii-b",
            "Conjecture 4.2(iii), second assertion (8n+6)",
            squares(&[1, 1, 1]),
            int()
                .with(NonNegative(1))
                .with(NonNegative(2))
                .with(Parity { i: 2, p: 1 }),
            atom("x+2y", T::Squares),
            from(0),
        )
        .represent(Represented::Affine { mul: 8, add: 6 }),
    );
    r.push(record(
        "C4.2iv",
        "Conjecture 4.2(iv)",
        squares(&[1, 2, 3]),
        int(),
        atom("x+y+z", T::SquareOrTwiceSquare),
        odd(1),
    ));

    // ---- Conjecture 4.3 ----
    let p = "x^2+3y^2+5z^2+7w^2";
    r.push(record(
        "C4.3i",
        "Conjecture 4.3(i)",
        four(),
        int(),
        and(vec![atom(p, T::Primes), atom(&format!("{p}-2"), T::Primes)]),
        odd(1),
    ));
    let mut a = from(2);
    a.congruences.push((4, vec![1, 2, 3]));
    r.push(record(
        "C4.3ii",
        "Conjecture 4.3(ii)",
        four(),
        nat(),
        and(vec![
            atom("x+2y+5z", T::Primes),
            atom("x+2y+5z-2", T::Primes),
            atom("x+2y+5z+4", T::Primes),
            atom("x+2y+5z+10", T::Primes),
        ]),
        a,
    ));
    let poly = |s: &str| crate::poly::Poly::parse(s).expect("registry expression parses");
    r.push(record(
        "C4.3iii",
        "Conjecture 4.3(iii)",
        squares(&[1, 1, 1, 4]),
        nat(),
        PredicateExpr::PowerSumPrime(vec![poly("x"), poly("y"), poly("z")]),
        odd(1),
    ));
    r.push(record(
        "C4.3iv",
        "Conjecture 4.3(iv)",
        four(),
        nat(),
        PredicateExpr::PowerSumPrime(vec![poly("x+y"), poly("z+w")]),
        odd(2),
    ));

    // ---- Conjectures 4.4, 4.5 ----
    family(
        &mut r,
        "C4.4i",
        "Conjecture 4.4(i)",
        &C44_I,
        &[1, 1, 1, 1],
        nat(),
        pow(2),
        false,
        1,
    );
    family(
        &mut r,
        "C4.4ii",
        "Conjecture 4.4(ii)",
        &C44_II,
        &[1, 1, 1, 1],
        nat(),
        pow(2),
        false,
        1,
    );
    family(
        &mut r,
        "C4.5i",
        "Conjecture 4.5(i)",
        &C45_I,
        &[1, 1, 1, 1],
        nat(),
        pow_or_zero(4),
        false,
        0,
    );
    family(
        &mut r,
        "C4.5ii",
        "Conjecture 4.5(ii)",
        &C45_II,
        &[1, 1, 1, 1],
        nat(),
        pow(4),
        true,
        1,
    );
    family(
        &mut r,
        "C4.5iii",
        "Conjecture 4.5(iii)",
        &C45_III,
        &[1, 1, 1, 1],
        nat(),
        T::SignedScaledPowersWithZero(1, 8),
        false,
        0,
    );

    // ---- Conjecture 4.6 (listed quadruples) ----
    for part in [QuadruplePart::Eights, QuadruplePart::TwiceEights] {
        for (i, q) in listed_quadruples(part).iter().enumerate() {
            let (tag, locus) = match part {
                QuadruplePart::Eights => ("i", "Conjecture 4.6(i)"),
                QuadruplePart::TwiceEights => ("ii", "Conjecture 4.6(ii)"),
            };
            let mut rec = quadruple_statement(q[0], q[1], q[2], q[3], part);
            rec.statement.id = format!("C4.6{tag}-{:02}", i + 1);
            rec.paper_locus = format!("{locus}, listed quadruple {q:?}");
            r.push(rec);
        }
    }

    // ---- Conjecture 4.7 ----
    let sqx = || atom("x", T::Squares);
    r.push(
        record(
            "C4.7i",
            "Conjecture 4.7(i)",
            four(),
            nat(),
            and(vec![sqx(), atom("x+24y", T::Squares)]),
            from(0),
        )
        .bound(10_000_000_000),
    );
    r.push(
        record(
            "C4.7ii-a",
            "Conjecture 4.7(ii), first assertion",
            four(),
            nat(),
            and(vec![sqx(), atom("49x+48(y-z)", T::Squares)]),
            from(0),
        )
        .bound(1_000_000_000),
    );
    r.push(
        record(
            "C4.7ii-b",
            "Conjecture 4.7(ii), second assertion",
            four(),
            nat(),
            and(vec![sqx(), atom("121x+48(y-z)", T::Squares)]),
            from(0),
        )
        .bound(1_000_000_000),
    );
    r.push(
        record(
            "C4.7iii",
            "Conjecture 4.7(iii)",
            four(),
            nat(),
            and(vec![sqx(), atom("-7x-8y+8z+16w", T::Squares)]),
            from(0),
        )
        .bound(100_000_000),
    );
    r.push(record(
        "C4.7iv",
        "Conjecture 4.7(iv)",
        four(),
        nat().with(CongruenceEq { i: 0, j: 1, m: 2 }),
        and(vec![sqx(), atom("x^2+62xy+y^2", T::Squares)]),
        from(0),
    ));

    // ---- Conjecture 4.8 ----
    r.push(record(
        "C4.8i-a",
        "Conjecture 4.8(i), first assertion",
        vec![
            ScaledFourth(1),
            ScaledSquare(1),
            ScaledSquare(1),
            ScaledSquare(1),
        ],
        nat().with(Positive(3)),
        atom("9y^2-8yz+8z^2", T::Squares),
        from(1),
    ));
    r.push(record(
        "C4.8i-b",
        "Conjecture 4.8(i), second assertion",
        vec![
            ScaledFourth(4),
            ScaledSquare(1),
            ScaledSquare(1),
            ScaledSquare(1),
        ],
        nat(),
        atom("79y^2-220yz+205z^2", T::Squares),
        from(0),
    ));
    r.push(record(
        "C4.8ii",
        "Conjecture 4.8(ii)",
        four(),
        int().with(Positive(3)),
        and(vec![atom("2x+y", T::Squares), atom("2x+z", T::Squares)]),
        from(1),
    ));
    r.push(record(
        "C4.8iii-a",
        "Conjecture 4.8(iii), first assertion",
        four(),
        int().with(NonNegative(0)).with(NonNegative(3)),
        and(vec![atom("x+2y", T::Squares), atom("z+2w", T::Squares)]),
        from(0),
    ));
    r.push(record(
        "C4.8iii-b",
        "Conjecture 4.8(iii), second assertion",
        four(),
        int().with(NonNegative(3)),
        and(vec![atom("x+3y", T::Squares), atom("z+3w", T::Squares)]),
        from(0),
    ));

    // ---- Conjecture 4.9 ----
    let sq = |e: &str| atom(e, T::Squares);
    r.push(record(
        "C4.9i",
        "Conjecture 4.9(i)",
        four(),
        nat(),
        and(vec![or(vec![sq("x"), sq("y")]), sq("x-y")]),
        from(0),
    ));
    for (tag, lead) in [("a", "2x"), ("b", "3x")] {
        r.push(record(
            &format!("C4.9ii-{tag}"),
            &format!("Conjecture 4.9(ii), one of {lead}, y, z a square"),
            four(),
            nat(),
            and(vec![
                atom("x+3y+5z", T::PositiveSquares),
                or(vec![sq(lead), sq("y"), sq("z")]),
            ]),
            from(1),
        ));
    }
    r.push(record(
        "C4.9iii-a",
        "Conjecture 4.9(iii), first assertion",
        four(),
        nat().with(Positive(3)),
        and(vec![
            sq("(3x)^2+(4y)^2+(12z)^2"),
            or(vec![sq("z"), sq("2z"), sq("3z")]),
        ]),
        from(1),
    ));
    r.push(record(
        "C4.9iii-b",
        "Conjecture 4.9(iii), second assertion",
        four(),
        nat().with(Positive(3)),
        and(vec![
            sq("(12x)^2+(15y)^2+(20z)^2"),
            or(vec![sq("x"), sq("y"), sq("z")]),
        ]),
        from(1),
    ));
    r.push(record(
        "C4.9iii-c",
        "Conjecture 4.9(iii), third assertion",
        four(),
        nat(),
        and(vec![
            sq("(12x)^2+(21y)^2+(28z)^2"),
            or(vec![sq("x"), sq("2y"), sq("z")]),
        ]),
        from(0),
    ));

    // ---- Conjecture 4.10 ----
    let mut a = from(0);
    a.excluded_values = vec![71, 85];
    r.push(record(
        "C4.10",
        "Conjecture 4.10",
        four(),
        int(),
        sq("9x^2+16y^2+24z^2+48w^2"),
        a,
    ));

    // ---- Conjecture 4.11 (listed pairs) ----
    for part in [PairPart::Difference, PairPart::Plain] {
        for (i, &(a, b)) in listed_pairs(part).iter().enumerate() {
            let (tag, locus) = match part {
                PairPart::Difference => ("i", "Conjecture 4.11(i)"),
                PairPart::Plain => ("ii", "Conjecture 4.11(ii)"),
            };
            let mut rec = pair_statement(a, b, part);
            rec.statement.id = format!("C4.11{tag}-{:02}", i + 1);
            rec.paper_locus = format!("{locus}, listed pair ({a}, {b})");
            r.push(rec);
        }
    }

    // ---- Conjectures 4.12, 4.13 ----
    family(
        &mut r,
        "C4.12i",
        "Conjecture 4.12(i)",
        &C412_I,
        &[1, 1, 1, 3],
        int(),
        T::Exact(1),
        false,
        1,
    );
    family(
        &mut r,
        "C4.12ii",
        "Conjecture 4.12(ii)",
        &C412_II,
        &[1, 1, 2, 3],
        int(),
        T::Exact(1),
        false,
        1,
    );
    r.push(record(
        "C4.12iii-a",
        "Conjecture 4.12(iii), first assertion",
        squares(&[1, 1, 3, 4]),
        int(),
        atom("y+z+2w", T::Exact(1)),
        from(1),
    ));
    r.push(record(
        "C4.12iii-b",
        "Conjecture 4.12(iii), second assertion",
        squares(&[1, 1, 2, 5]),
        int(),
        atom("y+2z+w", T::Exact(1)),
        from(1),
    ));
    family(
        &mut r,
        "C4.13i",
        "Conjecture 4.13(i)",
        &C413_I,
        &[1, 1, 1, 2],
        int(),
        T::Exact(1),
        false,
        1,
    );
    family(
        &mut r,
        "C4.13ii",
        "Conjecture 4.13(ii)",
        &C413_II,
        &[1, 1, 1, 2],
        int(),
        T::Exact(2),
        false,
        1,
    );
    family(
        &mut r,
        "C4.13iii",
        "Conjecture 4.13(iii)",
        &C413_III,
        &[1, 1, 1, 2],
        int(),
        T::Exact(3),
        false,
        1,
    );

    // ---- Conjecture 4.14 ----
    for (tag, p) in [("a", "x+2y"), ("b", "y-z+3w"), ("c", "y+2z-w")] {
        r.push(record(
            &format!("C4.14-{tag}"),
            &format!("Conjecture 4.14 with {p}"),
            squares(&[1, 1, 1, 2]),
            nat(),
            atom(p, pow(4)),
            from(1),
        ));
    }

    // ---- Conjecture 4.15 ----
    r.push(
        record(
            "C4.15i",
            "Conjecture 4.15(i)",
            squares(&[1, 1, 1, 2]),
            nat(),
            atom("x+2y+3z", T::Squares),
            from(0),
        )
        .oeis("A275344", Convention::Ordered),
    );
    r.push(
        record(
            "C4.15ii",
            "Conjecture 4.15(ii)",
            four(),
            nat(),
            atom("x+2y+3z", pow(4)),
            from(1),
        )
        .represent(Represented::Square)
        .oeis("A299924", Convention::Ordered),
    );

    // ---- Conjecture 4.16 ----
    for d in [0i64, 1] {
        let t = || T::ScaledPowersOf(1 << d, 4);
        r.push(
            record(
                &format!("C4.16i-d{d}"),
                &format!("Conjecture 4.16(i) with delta = {d}"),
                four(),
                nat(),
                and(vec![atom("x", t()), atom("4x-3y", t())]),
                from(d + 1),
            )
            .represent(Represented::Square)
            .bound(10_000_000),
        );
        r.push(
            record(
                &format!("C4.16ii-d{d}"),
                &format!("Conjecture 4.16(ii) with delta = {d}"),
                four(),
                nat(),
                atom("x+3y+5z+15w", t()),
                from(1),
            )
            .represent(Represented::TwiceSquare),
        );
    }

    // ---- Remark 1.7 ----
    r.push(record(
        "R1.7",
        "Remark 1.7, conjecture",
        squares(&[1, 1, 1, 2]),
        int()
            .with(NonNegative(0))
            .with(NonNegative(1))
            .with(NonNegative(2)),
        atom("x+y-z+w", T::FiniteChoice(vec![0, 1])),
        from(0),
    ));

    r
}

/// Statement ids a complete registry must contain, one per clause.
pub fn clause_ids() -> Vec<String> {
    let mut v: Vec<String> = [
        "T1.1i",
        "T1.1i-sq0",
        "T1.1i-sq1",
        "T1.1ii",
        "T1.1iii-unsigned",
        "T1.1iii-signed",
        "T1.1iv",
        "T1.2i",
        "T1.2ii-a1",
        "T1.2ii-a2",
        "T1.2iii-conclusion",
        "H-1.2iii",
        "T1.3i",
        "T1.3ii-a1",
        "T1.3ii-a2",
        "R1.3a",
        "R1.3b",
        "T1.4i-c1",
        "T1.4i-c2",
        "T1.4ii",
        "T1.4ii-sq",
        "T1.4iii",
        "T1.4iii-b",
        "T1.5i-a",
        "T1.5i-b",
        "T1.5ii-a",
        "T1.5ii-b",
        "T1.5ii-c",
        "T1.5iii-a",
        "T1.5iii-b",
        "T1.5iii-c",
        "T1.5iv",
        "T1.5v-a",
        "T1.5v-b",
        "H-1.5v",
        "T1.5vi",
        "T1.5vii",
        "T1.5viii",
        "T1.6i-sq",
        "T1.6i-cube",
        "T1.6ii-sq",
        "T1.6ii-cube",
        "C1.1i",
        "C1.1i-sq",
        "C1.1ii-c1",
        "C1.1ii-c2",
        "C1.1ii-c4",
        "C4.1i",
        "C4.1ii",
        "C4.1iii",
        "R4.1-triangular",
        "C4.2i-sq",
        "C4.2i-2sq",
        "C4.2ii",
        "C4.2iii-a",
        "C4.2iii-b",
        "C4.2iv",
        "C4.3i",
        "C4.3ii",
        "C4.3iii",
        "C4.3iv",
        "C4.7i",
        "C4.7ii-a",
        "C4.7ii-b",
        "C4.7iii",
        "C4.7iv",
        "C4.8i-a",
        "C4.8i-b",
        "C4.8ii",
        "C4.8iii-a",
        "C4.8iii-b",
        "C4.9i",
        "C4.9ii-a",
        "C4.9ii-b",
        "C4.9iii-a",
        "C4.9iii-b",
        "C4.9iii-c",
        "C4.10",
        "C4.12iii-a",
        "C4.12iii-b",
        "C4.14-a",
        "C4.14-b",
        "C4.14-c",
        "C4.15i",
        "C4.15ii",
        "C4.16i-d0",
        "C4.16i-d1",
        "C4.16ii-d0",
        "C4.16ii-d1",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let counted: [(&str, usize); 12] = [
        ("C4.4i", 44),
        ("C4.4ii", 32),
        ("C4.5i", 17),
        ("C4.5ii", 20),
        ("C4.5iii", 13),
        ("C4.6i", 12),
        ("C4.6ii", 12),
        ("C4.11i", 11),
        ("C4.11ii", 11),
        ("C4.12i", 7),
        ("C4.12ii", 6),
        ("C4.13i", 15),
    ];
    for (prefix, k) in counted
        .iter()
        .chain([("C4.13ii", 7), ("C4.13iii", 3)].iter())
    {
        for i in 1..=*k {
            v.push(format!("{prefix}-{i:02}"));
        }
    }
    v
}
