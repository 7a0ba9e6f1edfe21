//! Integer polynomials over up to four slot variables, with a small parser
//! for strings like `"x+2(y-z)"` or `"9x^2+16y^2+24z^2+48w^2"`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 4;
const NAMES: [char; MAX_VARS] = ['x', 'y', 'z', 'w'];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: i64,
    pub exps: [u8; MAX_VARS],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    terms: Vec<Monomial>,
    // (per-variable coefficient, constant) when every monomial has degree <= 1
    linear: Option<([i64; MAX_VARS], i64)>,
}

impl Poly {
    fn from_map(map: BTreeMap<[u8; MAX_VARS], i64>) -> Poly {
        let terms: Vec<Monomial> = map
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(exps, coeff)| Monomial { coeff, exps })
            .collect();
        let mut lin = [0i64; MAX_VARS];
        let mut constant = 0;
        let mut is_linear = true;
        for m in &terms {
            let deg: u32 = m.exps.iter().map(|&e| e as u32).sum();
            match deg {
                0 => constant = m.coeff,
                1 => {
                    let i = m.exps.iter().position(|&e| e == 1).unwrap();
                    lin[i] = m.coeff;
                }
                _ => is_linear = false,
            }
        }
        let linear = if is_linear {
            Some((lin, constant))
        } else {
            None
        };
        Poly { terms, linear }
    }

    fn to_map(&self) -> BTreeMap<[u8; MAX_VARS], i64> {
        self.terms.iter().map(|m| (m.exps, m.coeff)).collect()
    }

    pub fn constant(c: i64) -> Poly {
        let mut map = BTreeMap::new();
        map.insert([0; MAX_VARS], c);
        Poly::from_map(map)
    }

    pub fn var(i: usize) -> Poly {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        let mut map = BTreeMap::new();
        map.insert(e, 1);
        Poly::from_map(map)
    }

    /// Linear form `Σ coeffs[i]·v_i`.
    pub fn linear_form(coeffs: &[i64]) -> Poly {
        let mut map = BTreeMap::new();
        for (i, &c) in coeffs.iter().enumerate() {
            let mut e = [0; MAX_VARS];
            e[i] = 1;
            map.insert(e, c);
        }
        Poly::from_map(map)
    }

    pub fn parse(src: &str) -> Result<Poly> {
        let mut p = Parser {
            s: src.as_bytes(),
            pos: 0,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn linear(&self) -> Option<&([i64; MAX_VARS], i64)> {
        self.linear.as_ref()
    }

    /// Bitmask of variables that occur.
    pub fn vars(&self) -> u8 {
        let mut mask = 0;
        for m in &self.terms {
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    mask |= 1 << i;
                }
            }
        }
        mask
    }

    pub fn degree_in(&self, i: usize) -> u8 {
        self.terms.iter().map(|m| m.exps[i]).max().unwrap_or(0)
    }

    pub fn eval(&self, v: &[i64]) -> Result<i64> {
        if let Some((lin, c)) = &self.linear {
            let mut acc = *c as i128;
            for (i, &a) in lin.iter().enumerate() {
                if a != 0 {
                    acc += a as i128 * v[i] as i128;
                }
            }
            return i64::try_from(acc).map_err(|_| Error::Overflow);
        }
        let mut acc: i64 = 0;
        for m in &self.terms {
            let mut t = m.coeff;
            for (i, &e) in m.exps.iter().enumerate() {
                for _ in 0..e {
                    t = t.checked_mul(v[i]).ok_or(Error::Overflow)?;
                }
            }
            acc = acc.checked_add(t).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }

    fn combine(&self, other: &Poly, sign: i64) -> Result<Poly> {
        let mut map = self.to_map();
        for m in &other.terms {
            let e = map.entry(m.exps).or_insert(0);
            *e = m
                .coeff
                .checked_mul(sign)
                .and_then(|c| e.checked_add(c))
                .ok_or(Error::Overflow)?;
        }
        Ok(Poly::from_map(map))
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.combine(other, -1)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        let mut map: BTreeMap<[u8; MAX_VARS], i64> = BTreeMap::new();
        for a in &self.terms {
            for b in &other.terms {
                let mut e = [0u8; MAX_VARS];
                for i in 0..MAX_VARS {
                    e[i] = a.exps[i].checked_add(b.exps[i]).ok_or(Error::Overflow)?;
                }
                let c = a.coeff.checked_mul(b.coeff).ok_or(Error::Overflow)?;
                let slot = map.entry(e).or_insert(0);
                *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
            }
        }
        Ok(Poly::from_map(map))
    }

    pub fn pow(&self, k: u32) -> Result<Poly> {
        let mut out = Poly::constant(1);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Result<Poly> {
        self.mul(&Poly::constant(c))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest total degree first, then variable order
        let mut terms: Vec<&Monomial> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.exps.iter().map(|&e| e as u32).sum();
            let db: u32 = b.exps.iter().map(|&e| e as u32).sum();
            db.cmp(&da).then(b.exps.cmp(&a.exps))
        });
        for (k, m) in terms.iter().enumerate() {
            let is_const = m.exps.iter().all(|&e| e == 0);
            let mag = m.coeff.unsigned_abs();
            if k == 0 {
                if m.coeff < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if m.coeff < 0 { "-" } else { "+" })?;
            }
            if mag != 1 || is_const {
                write!(f, "{mag}")?;
            }
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "{}", NAMES[i])?,
                    _ => write!(f, "{}^{}", NAMES[i], e)?,
                }
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: String::from(msg),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut neg = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            neg = true;
        }
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?)?;
                }
                // implicit multiplication: 2x, xy, 2(y-z)
                Some(c) if c == b'(' || c.is_ascii_digit() || NAMES.contains(&(c as char)) => {
                    acc = acc.mul(&self.factor()?)?;
                }
                _ => break,
            }
        }
        if neg {
            acc = acc.scale(-1)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let k = self.integer()?;
            if k > 16 {
                return Err(self.err("exponent too large"));
            }
            return base.pow(k as u32);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Poly::constant(self.integer()?)),
            Some(c) => match NAMES.iter().position(|&n| n == c as char) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Poly::var(i))
                }
                None => Err(self.err(&format!("unexpected character {:?}", c as char))),
            },
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let text = core::str::from_utf8(&self.s[start..self.pos]).unwrap();
        text.parse::<i64>()
            .map_err(|_| self.err("number out of range"))
    }
}
