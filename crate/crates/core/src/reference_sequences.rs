//! The Thue-Morse word by doubling and by binary digit sums, its 2-state
//! automaton, and the classical square-free word `v` counting the ones
//! between consecutive zeros.
//!
//! The Arshon, Leech and Zech square-free words belong to the same family but
//! are not implemented here.

use crate::alphabet::{Bit, Trit, Word};
use crate::dfao::Dfao;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// `psi^n(0)` under the default depth limit, where `psi(a) = a a-bar`.
pub fn thue_morse_psi(n: u32) -> Result<Word<Bit>> {
    thue_morse_psi_with(n, &Limits::default())
}

pub fn thue_morse_psi_with(n: u32, limits: &Limits) -> Result<Word<Bit>> {
    if n > limits.thue_morse_max_depth {
        return Err(Error::DepthLimit {
            requested: n,
            max: limits.thue_morse_max_depth,
        });
    }
    let mut word = vec![Bit::Zero];
    word.reserve((1usize << n) - 1);
    for _ in 0..n {
        let len = word.len();
        for k in 0..len {
            word.push(word[k].flip());
        }
    }
    Ok(Word::new(word))
}

/// `t_i` as the parity of the number of ones in the binary form of `i`.
pub fn thue_morse_direct(i: u64) -> Bit {
    if i.count_ones().is_multiple_of(2) {
        Bit::Zero
    } else {
        Bit::One
    }
}

/// Base-2 digits of `i`, least significant first; empty for zero.
pub fn binary_digits(i: u64) -> Vec<Bit> {
    let bits = 64 - i.leading_zeros();
    (0..bits)
        .map(|k| if i >> k & 1 == 1 { Bit::One } else { Bit::Zero })
        .collect()
}

/// Two states `q0/0` and `q1/1`; digit 1 swaps them, digit 0 fixes them.
pub fn thue_morse_dfao() -> Dfao<Bit, Bit> {
    Dfao::new(
        vec![("q0/0".into(), Bit::Zero), ("q1/1".into(), Bit::One)],
        0,
        |q, d| match d {
            Bit::Zero => q,
            Bit::One => 1 - q,
        },
    )
    .expect("two-state machine is well formed")
}

/// Number of ones strictly between each pair of consecutive zeros.
pub fn derive_v(t_prefix: &[Bit]) -> Result<Word<Trit>> {
    let zeros: Vec<usize> = t_prefix
        .iter()
        .enumerate()
        .filter(|(_, &b)| b == Bit::Zero)
        .map(|(k, _)| k)
        .collect();
    if zeros.len() < 2 {
        return Err(Error::InsufficientInput { zeros: zeros.len() });
    }
    zeros
        .windows(2)
        .map(|pair| match pair[1] - pair[0] - 1 {
            0 => Ok(Trit::Zero),
            1 => Ok(Trit::One),
            2 => Ok(Trit::Two),
            count => Err(Error::AlphabetOverflow {
                position: pair[1],
                count,
            }),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repetition::is_squarefree;

    fn bits(s: &str) -> Word<Bit> {
        s.parse().unwrap()
    }

    #[test]
    fn psi_examples() {
        assert_eq!(thue_morse_psi(0).unwrap().to_string(), "0");
        assert_eq!(thue_morse_psi(1).unwrap().to_string(), "01");
        assert_eq!(thue_morse_psi(2).unwrap().to_string(), "0110");
        assert_eq!(thue_morse_psi(4).unwrap().to_string(), "0110100110010110");
        assert!(matches!(thue_morse_psi(21), Err(Error::DepthLimit { requested: 21, max: 20 })));
    }

    #[test]
    fn direct_examples() {
        assert_eq!(thue_morse_direct(0), Bit::Zero);
        assert_eq!(thue_morse_direct(3), Bit::Zero);
        assert_eq!(thue_morse_direct(4), Bit::One);
    }

    #[test]
    fn definitions_agree() {
        let t = thue_morse_psi(16).unwrap();
        for (i, &b) in t.iter().enumerate() {
            assert_eq!(b, thue_morse_direct(i as u64), "i = {i}");
        }
    }

    #[test]
    fn doubling_converges() {
        let words: Vec<_> = (0..=19).map(|n| thue_morse_psi(n).unwrap()).collect();
        for pair in words.windows(2) {
            assert!(pair[1].starts_with(&pair[0]));
        }
    }

    #[test]
    fn dfao_examples() {
        let m = thue_morse_dfao();
        assert_eq!(m.run(binary_digits(0)), Bit::Zero);
        assert_eq!(binary_digits(3), vec![Bit::One, Bit::One]);
        assert_eq!(m.run(binary_digits(3)), Bit::Zero);
        assert_eq!(binary_digits(4), vec![Bit::Zero, Bit::Zero, Bit::One]);
        assert_eq!(m.run(binary_digits(4)), Bit::One);
    }

    #[test]
    fn dfao_matches_direct_in_either_digit_order() {
        let m = thue_morse_dfao();
        for i in 0..1u64 << 16 {
            let digits = binary_digits(i);
            assert_eq!(m.run(digits.iter().copied()), thue_morse_direct(i));
            assert_eq!(m.run(digits.iter().rev().copied()), thue_morse_direct(i));
        }
        // both transitions commute
        for q in 0..2 {
            assert_eq!(m.step(m.step(q, Bit::Zero), Bit::One), m.step(m.step(q, Bit::One), Bit::Zero));
        }
        assert!(m.is_group_automaton());
    }

    #[test]
    fn derive_v_examples() {
        let t = thue_morse_psi(10).unwrap();
        assert!(derive_v(&t).unwrap().to_string().starts_with("21020121012"));
        assert_eq!(derive_v(&bits("00")).unwrap().to_string(), "0");
        assert_eq!(derive_v(&bits("0110")).unwrap().to_string(), "2");
    }

    #[test]
    fn derive_v_errors() {
        assert_eq!(derive_v(&bits("0111")).unwrap_err(), Error::InsufficientInput { zeros: 1 });
        assert_eq!(derive_v(&[]).unwrap_err(), Error::InsufficientInput { zeros: 0 });
        assert_eq!(
            derive_v(&bits("001110")).unwrap_err(),
            Error::AlphabetOverflow { position: 5, count: 3 }
        );
    }

    #[test]
    fn v_is_squarefree() {
        let v = derive_v(&thue_morse_psi(14).unwrap()).unwrap();
        assert!(v.len() > 5000);
        assert!(is_squarefree(&v));
    }
}
