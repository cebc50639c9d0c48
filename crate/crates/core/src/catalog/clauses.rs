//! Clause instances for each registry row at a fixed length `n`.

use super::{CheckedParams, ConditionId};
use crate::error::{Error, Result};
use crate::rational::{self, int};
use crate::sequence::DegreeSequence;
use num_integer::Integer;
use serde::Serialize;

/// A single degree comparison. Indices `<= 0` read as `d_0 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Atom {
    Le { idx: i64, value: i64 },
    Ge { idx: i64, value: i64 },
    SumGe { a: i64, b: i64, value: i64 },
}

fn read(pi: &DegreeSequence, idx: i64) -> Result<i64> {
    if idx > pi.len() as i64 {
        return Err(Error::Internal(format!("index {idx} beyond n = {}", pi.len())));
    }
    Ok(pi.d(idx) as i64)
}

impl Atom {
    pub fn holds(&self, pi: &DegreeSequence) -> Result<bool> {
        Ok(match *self {
            Atom::Le { idx, value } => read(pi, idx)? <= value,
            Atom::Ge { idx, value } => read(pi, idx)? >= value,
            Atom::SumGe { a, b, value } => read(pi, a)? + read(pi, b)? >= value,
        })
    }
}

impl std::fmt::Display for Atom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Atom::Le { idx, value } => write!(f, "d[{idx}] <= {value}"),
            Atom::Ge { idx, value } => write!(f, "d[{idx}] >= {value}"),
            Atom::SumGe { a, b, value } => write!(f, "d[{a}] + d[{b}] >= {value}"),
        }
    }
}

/// `AND(when) => OR(then)`. An empty `when` makes the clause unconditional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub clause: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    pub when: Vec<Atom>,
    pub then: Vec<Atom>,
}

impl Instance {
    fn fixed(clause: &'static str, when: Vec<Atom>, then: Vec<Atom>) -> Self {
        Instance { clause, i: None, j: None, when, then }
    }

    fn at(clause: &'static str, i: i64, when: Vec<Atom>, then: Vec<Atom>) -> Self {
        Instance { clause, i: Some(i), j: None, when, then }
    }

    fn at2(clause: &'static str, i: i64, j: i64, when: Vec<Atom>, then: Vec<Atom>) -> Self {
        Instance { clause, i: Some(i), j: Some(j), when, then }
    }

    pub fn antecedent(&self, pi: &DegreeSequence) -> Result<bool> {
        for a in &self.when {
            if !a.holds(pi)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn consequent(&self, pi: &DegreeSequence) -> Result<bool> {
        for a in &self.then {
            if a.holds(pi)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The consequent is only read when the antecedent holds.
    pub fn holds(&self, pi: &DegreeSequence) -> Result<bool> {
        Ok(!self.antecedent(pi)? || self.consequent(pi)?)
    }
}

impl std::fmt::Display for Instance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |atoms: &[Atom], sep: &str| atoms.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(sep);
        write!(f, "{}", self.clause)?;
        match (self.i, self.j) {
            (Some(i), Some(j)) => write!(f, "(i={i}, j={j})")?,
            (Some(i), None) => write!(f, "(i={i})")?,
            _ => {}
        }
        f.write_str(": ")?;
        if !self.when.is_empty() {
            write!(f, "{} => ", join(&self.when, " and "))?;
        }
        f.write_str(&join(&self.then, " or "))
    }
}

fn le(idx: i64, value: i64) -> Atom {
    Atom::Le { idx, value }
}

fn ge(idx: i64, value: i64) -> Atom {
    Atom::Ge { idx, value }
}

/// `lo..=hi` where `hi` may be below `lo`.
fn span(lo: i64, hi: i64) -> std::ops::RangeInclusive<i64> {
    lo..=hi
}

fn fdiv(a: i64, b: i64) -> i64 {
    Integer::div_floor(&a, &b)
}

fn too_short(n: usize, min: i64) -> Result<()> {
    if (n as i64) < min {
        Err(Error::SequenceTooShort { n, min: min.max(0) as usize })
    } else {
        Ok(())
    }
}

fn param_range(cond: ConditionId, what: String) -> Error {
    Error::ParamOutOfDomain(format!("{cond}: {what}"))
}

/// `d_i <= i => d_{n-i} >= n-i` over `lo <= i <= (n-1)/2`.
fn chvatal(out: &mut Vec<Instance>, label: &'static str, n: i64, lo: i64, hi: i64) {
    for i in span(lo, hi) {
        out.push(Instance::at(label, i, vec![le(i, i)], vec![ge(n - i, n - i)]));
    }
}

/// Checks the length-dependent domain and lists every clause instance in
/// reporting order.
pub(crate) fn instances(cond: ConditionId, p: &CheckedParams, len: usize) -> Result<Vec<Instance>> {
    use ConditionId::*;
    let n = len as i64;
    too_short(len, 1)?;
    let mut out = Vec::new();
    match cond {
        Ham | TraceHam => {
            too_short(len, 3)?;
            chvatal(&mut out, "A", n, 1, fdiv(n - 1, 2));
        }
        Conn2Ham => {
            too_short(len, 3)?;
            chvatal(&mut out, "A", n, 2, fdiv(n - 1, 2));
        }
        Kconn => {
            too_short(len, 2)?;
            let k = p.k() as i64;
            if k > n - 1 {
                return Err(param_range(cond, format!("k = {k} exceeds n-1 = {}", n - 1)));
            }
            for i in span(1, fdiv(n - k + 1, 2)) {
                out.push(Instance::at("A", i, vec![le(i, i + k - 2)], vec![ge(n - k + 1, n - i)]));
            }
        }
        Edge2 => {
            out.push(Instance::fixed("A", vec![], vec![ge(1, 2)]));
            for i in (3..).take_while(|i| 2 * i < n) {
                out.push(Instance::at(
                    "B",
                    i,
                    vec![le(i - 1, i - 1), le(i, i)],
                    vec![ge(n - 1, n - i), ge(n, n - i + 1)],
                ));
            }
            if n % 2 == 0 {
                let h = n / 2;
                out.push(Instance::fixed("C", vec![le(h, h - 1)], vec![ge(n - 2, h), ge(n, h + 1)]));
            }
        }
        Edge3 => {
            out.push(Instance::fixed("A", vec![], vec![ge(1, 3)]));
            for i in (4..).take_while(|i| 2 * i < n) {
                out.push(Instance::at(
                    "B",
                    i,
                    vec![le(i - 2, i - 1), le(i, i)],
                    vec![ge(n - 2, n - i), ge(n, n - i + 1)],
                ));
            }
            for i in (4..).take_while(|i| 2 * i < n - 1) {
                out.push(Instance::at(
                    "C",
                    i,
                    vec![le(i - 1, i - 1), le(i, i + 1)],
                    vec![ge(n - 2, n - i), ge(n, n - i + 1)],
                ));
            }
            for i in (4..).take_while(|i| 2 * i < n) {
                out.push(Instance::at(
                    "D",
                    i,
                    vec![le(i - 2, i - 1), le(i, i)],
                    vec![ge(n - 1, n - i), ge(n, n - i + 2)],
                ));
            }
            let h = n / 2;
            if n % 2 == 0 {
                out.push(Instance::fixed("E", vec![le(h, h - 1)], vec![ge(n - 4, h), ge(n, h + 1)]));
            } else {
                let m = (n - 3) / 2;
                out.push(Instance::fixed("F", vec![le(m, m)], vec![ge(n - 3, (n + 1) / 2), ge(n, (n + 3) / 2)]));
            }
            if n % 2 == 0 {
                out.push(Instance::fixed("G", vec![le(h, h - 1)], vec![ge(n - 3, h), ge(n - 1, h + 1), ge(n, h + 2)]));
            }
        }
        Edgek => {
            let k = p.k() as i64;
            out.push(Instance::fixed("A", vec![], vec![ge(1, k)]));
            for i in span(k + 1, n / 2) {
                out.push(Instance::at(
                    "B",
                    i,
                    vec![le(i - k + 1, i - 1), le(i, i + k - 2)],
                    vec![ge(n, n - i + k - 1)],
                ));
            }
        }
        Bindlo | Bindhi => {
            let b = p.b();
            if cond == Bindlo {
                too_short(len, 2)?;
            } else {
                too_short(len, rational::ceil(b + int(1)))?;
            }
            let m = rational::floor(int(n) / (b + int(1)));
            for i in span(1, m) {
                if cond == Bindlo {
                    let c = rational::ceil(b * int(i));
                    out.push(Instance::at("A", i, vec![le(i, c - 1)], vec![ge(n - c + 1, n - i)]));
                } else {
                    let q = rational::floor(int(n - i) / b);
                    out.push(Instance::at("A", i, vec![le(i, n - q - 1)], vec![ge(q + 1, n - i)]));
                }
            }
            out.push(Instance::fixed("B", vec![], vec![ge(m + 1, n - m)]));
        }
        Tough => {
            let t = p.t();
            too_short(len, rational::ceil(t) + 2)?;
            let mut i = rational::ceil(t);
            while int(i) * (t + int(1)) < t * int(n) {
                let f = rational::floor(int(i) / t);
                out.push(Instance::at("A", i, vec![le(f, i)], vec![ge(n - i, n - f)]));
                i += 1;
            }
        }
        Toughlo => {
            let l = rational::floor(p.t().recip());
            too_short(len, l + 2)?;
            for i in (l..).take_while(|i| 2 * i < n + l - 1) {
                out.push(Instance::at("A", i, vec![le(i, i - l + 1)], vec![ge(n - i + l - 1, n - i)]));
            }
            for i in span(1, n / 2) {
                out.push(Instance::at("B", i, vec![le(i, i - 1)], vec![ge(n, n - i)]));
            }
        }
        Defic => {
            let beta = p.beta() as i64;
            if beta > n {
                return Err(param_range(cond, format!("beta = {beta} exceeds n = {n}")));
            }
            if (n - beta) % 2 != 0 {
                return Err(Error::LengthOutOfDomain {
                    n: len,
                    reason: format!("n and beta = {beta} must have the same parity"),
                });
            }
            let lo = if beta == 0 { 0 } else { 1 };
            for i in span(lo, fdiv(n + beta - 2, 2)) {
                out.push(Instance::at("A", i, vec![le(i + 1, i - beta)], vec![ge(n + beta - i, n - i - 1)]));
            }
        }
        Factor2 => {
            too_short(len, 3)?;
            if n % 2 == 1 {
                let h = (n + 1) / 2;
                out.push(Instance::fixed("A", vec![], vec![ge(h, h)]));
            } else {
                let h = n / 2;
                out.push(Instance::fixed("B", vec![], vec![ge(h - 1, h), ge(h + 1, h + 1)]));
            }
            for i in span(0, fdiv(n - 2, 2)) {
                out.push(Instance::at(
                    "C",
                    i,
                    vec![le(i, i), le(i + 1, i + 1)],
                    vec![ge(n - i - 1, n - i - 1), ge(n - i, n - i)],
                ));
            }
            for i in span(1, fdiv(n - 5, 2)) {
                out.push(Instance::at(
                    "D",
                    i,
                    vec![le(i - 1, i), le(i + 2, i + 1)],
                    vec![ge(n - i - 3, n - i - 2), ge(n - i, n - i - 1)],
                ));
            }
        }
        Kham | Kedgeham => {
            too_short(len, 3)?;
            let k = p.k() as i64;
            if k > n - 3 {
                return Err(param_range(cond, format!("k = {k} exceeds n-3 = {}", n - 3)));
            }
            if cond == Kham {
                for i in (1..).take_while(|i| 2 * i < n - k) {
                    out.push(Instance::at("A", i, vec![le(i, i + k)], vec![ge(n - i - k, n - i)]));
                }
            } else {
                for i in (k + 1..).take_while(|i| 2 * i < n + k) {
                    out.push(Instance::at("A", i, vec![le(i - k, i)], vec![ge(n - i, n - i + k)]));
                }
            }
        }
        Kpath => {
            let k = p.k() as i64;
            for i in (0..).take_while(|i| 2 * i < n - k) {
                out.push(Instance::at("A", i, vec![le(i + k, i)], vec![ge(n - i, n - i - k)]));
            }
        }
        Hamconn => {
            too_short(len, 4)?;
            for i in (2..).take_while(|i| 2 * i < n + 1) {
                out.push(Instance::at("A", i, vec![le(i - 1, i)], vec![ge(n - i, n - i + 1)]));
            }
        }
        Pancyc => {
            too_short(len, 3)?;
            chvatal(&mut out, "A", n, 1, fdiv(n - 1, 2));
            if n % 2 == 0 {
                out.push(Instance::fixed("B", vec![], vec![ge(n, n / 2 + 1)]));
            }
        }
        AlphaLe => {
            let k = p.k() as i64;
            if k > n - 1 {
                return Err(param_range(cond, format!("k = {k} must be at most n-1 = {}", n - 1)));
            }
            out.push(Instance::fixed("A", vec![], vec![ge(k + 1, n - k)]));
        }
        ChiLe => {
            let k = p.k() as i64;
            if k > n {
                return Err(param_range(cond, format!("k = {k} exceeds n = {n}")));
            }
            out.push(Instance::fixed("A", vec![], vec![le(n - k, k - 1)]));
        }
        ArbLe => {
            let k = p.k() as i64;
            if 2 * k > n {
                return Err(param_range(cond, format!("k = {k} exceeds n/2")));
            }
            out.push(Instance::fixed("A", vec![], vec![le(n - 2 * k, 2 * k - 1)]));
        }
        Bind1Ham => {
            too_short(len, 3)?;
            chvatal(&mut out, "A", n, 1, fdiv(n - 2, 2));
            if n % 2 == 1 {
                for i in span(1, fdiv(n - 3, 2)) {
                    out.push(Instance::at("B", i, vec![le(i - 1, i)], vec![ge(n - i, (n + 1) / 2)]));
                }
            }
        }
        Bind1_1f => {
            if n % 2 != 0 {
                return Err(Error::LengthOutOfDomain { n: len, reason: "n must be even".into() });
            }
            for i in span(0, fdiv(n - 6, 2)) {
                for j in span(1, fdiv(n - 2 * i - 2, 4)) {
                    out.push(Instance::at2(
                        "A",
                        i,
                        j,
                        vec![le(i, i), le(i + 2 * j + 1, i + 2 * j)],
                        vec![ge(n - i, n - i - 2 * j - 1)],
                    ));
                }
            }
            if n >= 10 {
                let h = n / 2;
                out.push(Instance::fixed("B", vec![], vec![ge(h - 5, h - 3), ge(h + 4, h - 1)]));
            }
        }
        F2Tough1 => {
            too_short(len, 3)?;
            chvatal(&mut out, "A", n, 2, fdiv(n - 3, 2));
            if n % 2 == 1 {
                for i in span(1, fdiv(n - 5, 2)) {
                    out.push(Instance::at("B", i, vec![le(i - 1, i)], vec![ge(n - i, (n + 1) / 2)]));
                }
            } else {
                let h = n / 2;
                for i in span(1, fdiv(n - 4, 2)) {
                    out.push(Instance::at("C", i, vec![le(i - 1, i)], vec![ge(h - 1, h), ge(n - i, h + 1)]));
                }
            }
        }
        Jung => {
            too_short(len, 11)?;
            out.push(Instance::fixed("A", vec![], vec![ge(1, rational::ceil(rational::half(n)) - 2)]));
        }
        Dirac => {
            too_short(len, 3)?;
            out.push(Instance::fixed("A", vec![], vec![ge(1, rational::ceil(rational::half(n)))]));
        }
        Hoang => {
            too_short(len, 3)?;
            let top = rational::ceil(rational::half(n));
            for i in span(1, top) {
                for j in span(i + 1, top) {
                    out.push(Instance::at2(
                        "A",
                        i,
                        j,
                        vec![le(i, i), le(n - i + 1, n - i - 1)],
                        vec![Atom::SumGe { a: j, b: n - j + 1, value: n }],
                    ));
                }
            }
        }
        HoangCor => {
            too_short(len, 3)?;
            for i in span(1, fdiv(n - 1, 2)) {
                out.push(Instance::at("A", i, vec![le(i, i)], vec![ge(n - i + 1, n - i)]));
            }
        }
        Tough1F2 => {
            too_short(len, 3)?;
            for i in span(0, fdiv(n - 7, 2)) {
                for j in span(1, fdiv(n - 2 * i - 2, 5)) {
                    out.push(Instance::at2(
                        "A",
                        i,
                        j,
                        vec![le(i, i + j), le(i + 2 * j + 1, i + j + 1)],
                        vec![ge(n - i - 3 * j - 1, n - i - 2 * j - 1), ge(n - i - j, n - i - 2 * j)],
                    ));
                }
            }
            let h = n / 2;
            if n % 2 == 0 && n >= 18 {
                for i in span(0, (n - 18) / 2) {
                    out.push(Instance::at(
                        "B",
                        i,
                        vec![le(i, i + 2), le(i + 4, i + 3)],
                        vec![ge(n - i - 6, h - 1), ge(n - i - 2, h)],
                    ));
                }
            }
            if n % 2 == 0 && n >= 16 {
                for i in span(0, (n - 16) / 2) {
                    out.push(Instance::at(
                        "C",
                        i,
                        vec![le(i, i + 1), le(i + 2, i + 2), le(i + 3, i + 3)],
                        vec![ge(n - i - 5, h - 1), ge(n - i - 1, h)],
                    ));
                }
            }
            if n % 2 == 0 && n >= 10 {
                out.push(Instance::fixed("D", vec![], vec![ge(h - 5, h - 2), ge(h, h - 1), ge(h + 3, h + 1)]));
            }
        }
    }
    Ok(out)
}
