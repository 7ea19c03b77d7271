//! Doubling dynamics on Gamma arguments and minimal closing computation chains.
//!
//! A chain starts at `x0 = p/q` in `(0, 1]` and repeatedly applies the doubling
//! rule `x -> 2x`, folding back into `(0, 1]` with the unit shift whenever the
//! result exceeds 1. It stops at the first argument that is exactly 1, equals
//! an earlier argument, or is the reflection `1 - x` of an earlier argument.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fraction::Fraction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    /// `x -> 2x` (duplication relation).
    Double,
    /// `y -> y - 1` for `1 < y < 2` (unit recurrence).
    ReduceMod,
    /// `x -> 1 - x` (reflection), only ever the closing step.
    Reflect,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChainStep {
    pub kind: StepKind,
    /// The argument the step was applied to.
    pub at: Fraction,
}

impl ChainStep {
    /// The argument produced by this step.
    pub fn result(&self) -> Result<Fraction> {
        match self.kind {
            StepKind::Double => self.at.double(),
            StepKind::ReduceMod => self.at.minus_one(),
            StepKind::Reflect => self.at.one_minus(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Closure {
    /// Returned to an earlier argument.
    CycleSamePlus,
    /// Reached `1 - x` for an earlier argument `x`.
    CycleReflectMinus,
    /// Reached `Gamma(1) = 1`.
    TerminatesAtOne,
}

impl Closure {
    pub fn sign(&self) -> Option<i8> {
        match self {
            Closure::CycleSamePlus => Some(1),
            Closure::CycleReflectMinus => Some(-1),
            Closure::TerminatesAtOne => None,
        }
    }
}

impl fmt::Display for Closure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Closure::CycleSamePlus => "cycle (+)",
            Closure::CycleReflectMinus => "cycle via reflection (-)",
            Closure::TerminatesAtOne => "terminates at Gamma(1)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub start: Fraction,
    pub steps: Vec<ChainStep>,
    pub closure: Closure,
    /// Number of `Double` steps.
    pub doublings: u32,
    /// Index into [`Chain::visited`] of the argument the chain closes on.
    /// For [`Closure::TerminatesAtOne`] this is the index of the final 1,
    /// which is the fixed point of the folded doubling map.
    pub reentry_index: usize,
}

impl Chain {
    /// Every argument the chain passes through, including the unreduced
    /// doubled values above 1, obtained by replaying the steps.
    pub fn trace(&self) -> Result<Vec<Fraction>> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(self.start);
        let mut cur = self.start;
        for step in &self.steps {
            if step.at != cur {
                return Err(Error::Internal(format!(
                    "step {:?} applied to {} but chain is at {}",
                    step.kind, step.at, cur
                )));
            }
            cur = step.result()?;
            out.push(cur);
        }
        Ok(out)
    }

    /// The reduced arguments `x_0, ..., x_m` in `(0, 1]`, one per doubling,
    /// excluding the reflected closing value.
    pub fn visited(&self) -> Vec<Fraction> {
        let mut out = vec![self.start];
        for step in &self.steps {
            match step.kind {
                StepKind::Double => {
                    let cur = step.at.double().expect("recorded step");
                    if cur <= Fraction::ONE {
                        out.push(cur);
                    }
                }
                StepKind::ReduceMod => {
                    out.push(step.at.minus_one().expect("recorded step"));
                }
                StepKind::Reflect => {}
            }
        }
        out
    }

    /// The final argument before any closing reflection.
    pub fn last(&self) -> Fraction {
        *self.visited().last().expect("non-empty")
    }
}

/// One doubling of `x` in `(0, 1)` folded back into `(0, 1]`.
pub fn double_step(x: Fraction) -> Result<(Fraction, Vec<ChainStep>)> {
    if !x.in_open_unit() {
        return Err(Error::domain(
            "double_step",
            x,
            "argument must lie in (0, 1)",
        ));
    }
    let doubled = x.double()?;
    let mut steps = vec![ChainStep {
        kind: StepKind::Double,
        at: x,
    }];
    if doubled <= Fraction::ONE {
        return Ok((doubled, steps));
    }
    steps.push(ChainStep {
        kind: StepKind::ReduceMod,
        at: doubled,
    });
    Ok((doubled.minus_one()?, steps))
}

/// Minimal closing chain for `p/q`; non-reduced input is reduced first.
pub fn minimal_chain(p: u64, q: u64) -> Result<Chain> {
    if q == 0 || p == 0 || p > q {
        return Err(Error::domain(
            "minimal_chain",
            format!("{p}/{q}"),
            "requires 1 <= p <= q",
        ));
    }
    minimal_chain_from(Fraction::new(p, q)?)
}

pub fn minimal_chain_from(start: Fraction) -> Result<Chain> {
    if start.is_one() {
        return Ok(Chain {
            start,
            steps: Vec::new(),
            closure: Closure::TerminatesAtOne,
            doublings: 0,
            reentry_index: 0,
        });
    }
    if !start.in_open_unit() {
        return Err(Error::domain(
            "minimal_chain",
            start,
            "requires 0 < p/q <= 1",
        ));
    }

    let cap = 4 * start.den();
    let mut seen: HashMap<Fraction, usize> = HashMap::from([(start, 0)]);
    let mut steps = Vec::new();
    let mut cur = start;
    let mut doublings: u32 = 0;

    loop {
        if u64::from(doublings) >= cap {
            return Err(Error::ChainCap { start, cap });
        }
        let (next, st) = double_step(cur)?;
        steps.extend(st);
        doublings += 1;
        let index = doublings as usize;

        let finish = |closure, reentry_index, steps| Chain {
            start,
            steps,
            closure,
            doublings,
            reentry_index,
        };
        if next.is_one() {
            return Ok(finish(Closure::TerminatesAtOne, index, steps));
        }
        if let Some(&j) = seen.get(&next) {
            return Ok(finish(Closure::CycleSamePlus, j, steps));
        }
        if let Some(&j) = seen.get(&next.one_minus()?) {
            steps.push(ChainStep {
                kind: StepKind::Reflect,
                at: next,
            });
            return Ok(finish(Closure::CycleReflectMinus, j, steps));
        }
        seen.insert(next, index);
        cur = next;
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least `m >= 1` with `a^m = +1` or `-1 (mod n)`, for odd `n` coprime to `a`.
pub fn pm_order(a: u64, n: u64) -> Result<(u32, i8)> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::domain(
            "pm_order",
            n,
            "modulus must be odd and positive",
        ));
    }
    if n == 1 {
        return Ok((1, 1));
    }
    if gcd(a % n, n) != 1 {
        return Err(Error::domain(
            "pm_order",
            format!("({a}, {n})"),
            "base must be a unit",
        ));
    }
    let base = (a % n) as u128;
    let modulus = n as u128;
    let mut acc = 1u128;
    for m in 1..=n {
        acc = acc * base % modulus;
        if acc == 1 {
            return Ok((m as u32, 1));
        }
        if acc == modulus - 1 {
            return Ok((m as u32, -1));
        }
    }
    Err(Error::Internal(format!("no order found for {a} mod {n}")))
}
