//! Degree-sequence bounds on independence, clique, chromatic and
//! arboricity numbers, plus the binding-number-to-toughness table.

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};
use crate::sequence::DegreeSequence;
use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    #[serde(with = "rational::serde_one")]
    pub value: Rational,
    /// Ceiling for lower bounds, floor for upper bounds.
    pub integer: i64,
}

impl BoundResult {
    fn exact(v: usize) -> Self {
        BoundResult { value: int(v as i64), integer: v as i64 }
    }
}

impl std::fmt::Display for BoundResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.value.is_integer() {
            write!(f, "{}", self.integer)
        } else {
            write!(f, "{} ({})", self.integer, rational::format_rational(&self.value))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FValue {
    Finite(usize),
    Infinite,
}

impl Serialize for FValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FValue::Finite(v) => s.serialize_u64(*v as u64),
            FValue::Infinite => s.serialize_str("inf"),
        }
    }
}

impl std::fmt::Display for FValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FValue::Finite(v) => write!(f, "{v}"),
            FValue::Infinite => f.write_str("inf"),
        }
    }
}

fn graphical(pi: &DegreeSequence) -> Result<()> {
    if pi.is_graphical() {
        Ok(())
    } else {
        Err(Error::NotGraphical)
    }
}

/// Lower bound `sum 1/(d_j + 1)` on the independence number.
pub fn caro_wei(pi: &DegreeSequence) -> Result<BoundResult> {
    graphical(pi)?;
    let value = pi.degrees().iter().map(|&d| Rational::new(1, d as i64 + 1)).sum::<Rational>();
    Ok(BoundResult { value, integer: rational::ceil(value) })
}

/// Greedy index walk: start at `d_1`, then jump `f + 1` positions.
/// Ends with one `Infinite` entry.
pub fn murphy_f_trace(pi: &DegreeSequence) -> Result<Vec<FValue>> {
    graphical(pi)?;
    let n = pi.len();
    let mut out = Vec::new();
    let mut j = 1usize;
    while j <= n {
        let f = pi.degrees()[j - 1];
        out.push(FValue::Finite(f));
        j += f + 1;
    }
    out.push(FValue::Infinite);
    Ok(out)
}

pub fn murphy_alpha(pi: &DegreeSequence) -> Result<BoundResult> {
    let finite = murphy_f_trace(pi)?.len() - 1;
    Ok(BoundResult::exact(finite))
}

/// Lower bound for both clique and chromatic number.
pub fn clique_chromatic_lower(pi: &DegreeSequence) -> Result<BoundResult> {
    graphical(pi)?;
    murphy_alpha(&pi.complement()?)
}

pub fn chi_trivial_upper(pi: &DegreeSequence) -> Result<BoundResult> {
    graphical(pi)?;
    Ok(BoundResult::exact(pi.max_degree() + 1))
}

/// `max_j min(n - j + 1, d_j + 1)`.
pub fn welsh_powell_chi_upper(pi: &DegreeSequence) -> Result<BoundResult> {
    graphical(pi)?;
    let n = pi.len();
    let best = (1..=n).map(|j| (n - j + 1).min(pi.d(j as i64) + 1)).max().unwrap_or(0);
    Ok(BoundResult::exact(best))
}

pub fn arboricity_trivial_upper(pi: &DegreeSequence) -> Result<BoundResult> {
    graphical(pi)?;
    Ok(BoundResult::exact(pi.max_degree() / 2 + 1))
}

/// `max_j min(ceil((n - j + 1)/2), ceil((d_j + 1)/2))`.
pub fn arboricity_upper(pi: &DegreeSequence) -> Result<BoundResult> {
    graphical(pi)?;
    let n = pi.len();
    let best = (1..=n).map(|j| (n - j + 1).div_ceil(2).min((pi.d(j as i64) + 1).div_ceil(2))).max().unwrap_or(0);
    Ok(BoundResult::exact(best))
}

/// Best lower bound on toughness for graphs with binding number exactly `b >= 2`.
pub fn binding_toughness_bound(b: Rational) -> Result<Rational> {
    if b < int(2) {
        return Err(Error::ParamOutOfDomain(format!("binding number {} below 2", rational::format_rational(&b))));
    }
    if b == int(2) {
        return Ok(Rational::new(3, 2));
    }
    if b == Rational::new(9, 4) {
        return Ok(int(2));
    }
    let excess = b - int(2);
    // 2 + 1/(2m-1) and 2 + 2/(2m-1) with m >= 2
    if excess < int(1) {
        let (p, q) = (*excess.numer(), *excess.denom());
        if p == 1 && q % 2 == 1 && q >= 3 {
            return Ok(int(2));
        }
        if p == 2 && q % 2 == 1 && q >= 3 {
            let m = (q + 1) / 2;
            return Ok(int(2) + Rational::new(1, m));
        }
    }
    Ok(b)
}
