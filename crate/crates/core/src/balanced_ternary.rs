//! Balanced ternary: every integer is `sum u_n 3^n` with digits in
//! `{-1, 0, +1}` and a nonzero leading digit, and this representation is
//! unique. Zero has no digits at all.
//!
//! Digits are stored low-to-high (`u_0` first) because that is the order the
//! automaton consumes them; text is rendered high-to-low.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use crate::alphabet::{Balanced, Symbol};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BalancedDigits(Vec<Balanced>);

impl BalancedDigits {
    /// Validates the leading-digit invariant.
    pub fn from_low_to_high(digits: Vec<Balanced>) -> Result<Self> {
        match digits.last() {
            Some(Balanced::Zero) => Err(Error::MalformedDigits),
            _ => Ok(BalancedDigits(digits)),
        }
    }

    /// Low-to-high digits, `u_0` first.
    pub fn digits(&self) -> &[Balanced] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Neg for BalancedDigits {
    type Output = BalancedDigits;

    fn neg(self) -> BalancedDigits {
        BalancedDigits(self.0.into_iter().map(Balanced::negate).collect())
    }
}

impl Neg for &BalancedDigits {
    type Output = BalancedDigits;

    fn neg(self) -> BalancedDigits {
        -self.clone()
    }
}

impl fmt::Display for BalancedDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().rev().try_for_each(|d| write!(f, "{}", d.to_char()))
    }
}

impl FromStr for BalancedDigits {
    type Err = Error;

    /// Parses the high-to-low form, e.g. `"+0-"` for 8.
    fn from_str(s: &str) -> Result<Self> {
        let mut digits = s
            .chars()
            .enumerate()
            .map(|(position, c)| {
                Balanced::from_char(c).ok_or(Error::AlphabetMismatch {
                    alphabet: Balanced::ALPHABET,
                    found: c,
                    position,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        digits.reverse();
        BalancedDigits::from_low_to_high(digits)
    }
}

/// Balanced ternary digits of `i`.
pub fn encode(i: i64) -> BalancedDigits {
    // i128 keeps `x - d` in range at i64::MIN.
    let mut x = i as i128;
    let mut digits = Vec::with_capacity(41);
    while x != 0 {
        let d = match x.rem_euclid(3) {
            0 => Balanced::Zero,
            1 => Balanced::Plus,
            _ => Balanced::Minus,
        };
        digits.push(d);
        x = (x - d.value() as i128) / 3;
    }
    BalancedDigits(digits)
}

/// `sum u_n 3^n`, failing with [`Error::Overflow`] outside the `i64` range.
pub fn decode(d: &BalancedDigits) -> Result<i64> {
    if d.0.last() == Some(&Balanced::Zero) {
        return Err(Error::MalformedDigits);
    }
    let mut acc: i128 = 0;
    for &digit in d.0.iter().rev() {
        acc = acc
            .checked_mul(3)
            .and_then(|a| a.checked_add(digit.value() as i128))
            .ok_or(Error::Overflow)?;
    }
    i64::try_from(acc).map_err(|_| Error::Overflow)
}

/// Adds one in place, keeping the leading-digit invariant.
pub(crate) fn increment(digits: &mut Vec<Balanced>) {
    let mut k = 0;
    loop {
        match digits.get(k) {
            None => {
                digits.push(Balanced::Plus);
                break;
            }
            Some(Balanced::Minus) => {
                digits[k] = Balanced::Zero;
                break;
            }
            Some(Balanced::Zero) => {
                digits[k] = Balanced::Plus;
                break;
            }
            Some(Balanced::Plus) => {
                digits[k] = Balanced::Minus;
                k += 1;
            }
        }
    }
    while digits.last() == Some(&Balanced::Zero) {
        digits.pop();
    }
}
