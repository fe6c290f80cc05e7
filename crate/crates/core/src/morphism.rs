//! The tripling morphism `phi(a) = sigma(a) a rho(a)` over `{1,2,3}`, its
//! iterates from the seed `2`, and the center-extraction operator that undoes
//! one iteration.
//!
//! Iterates are built bottom-up from the seed, one tripling per step, so
//! `phi_power(n)` costs `O(3^n)` and never recomputes a sub-block.

use crate::alphabet::{Ternary, TwoSidedWindow, Word};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Exchanges 1 and 2.
pub fn sigma_symbol(s: Ternary) -> Ternary {
    match s {
        Ternary::One => Ternary::Two,
        Ternary::Two => Ternary::One,
        Ternary::Three => Ternary::Three,
    }
}

/// Exchanges 2 and 3.
pub fn rho_symbol(s: Ternary) -> Ternary {
    match s {
        Ternary::One => Ternary::One,
        Ternary::Two => Ternary::Three,
        Ternary::Three => Ternary::Two,
    }
}

pub fn sigma(w: &[Ternary]) -> Word<Ternary> {
    w.iter().map(|&s| sigma_symbol(s)).collect()
}

pub fn rho(w: &[Ternary]) -> Word<Ternary> {
    w.iter().map(|&s| rho_symbol(s)).collect()
}

/// `sigma(w) w rho(w)`. Accepts any word, not only iterates.
pub fn phi(w: &[Ternary]) -> Word<Ternary> {
    let mut out = Vec::with_capacity(3 * w.len());
    out.extend(w.iter().map(|&s| sigma_symbol(s)));
    out.extend_from_slice(w);
    out.extend(w.iter().map(|&s| rho_symbol(s)));
    Word::new(out)
}

/// Infinite iterator over `phi^0(seed), phi^1(seed), ...`.
pub fn iterates(seed: Ternary) -> impl Iterator<Item = Word<Ternary>> {
    std::iter::successors(Some(Word::new(vec![seed])), |w| Some(phi(w)))
}

/// `phi^n(2)` under the default depth limit.
pub fn phi_power(n: u32) -> Result<Word<Ternary>> {
    phi_power_with(Ternary::Two, n, &Limits::default())
}

/// `phi^n(seed)`, refusing depths beyond `limits.max_depth`.
pub fn phi_power_with(seed: Ternary, n: u32, limits: &Limits) -> Result<Word<Ternary>> {
    limits.check_depth(n)?;
    let mut word = Word::new(vec![seed]);
    for _ in 0..n {
        word = phi(&word);
    }
    Ok(word)
}

/// Keeps the middle symbol of every aligned 3-block.
pub fn center_extract(w: &[Ternary]) -> Result<Word<Ternary>> {
    if !w.len().is_multiple_of(3) {
        return Err(Error::LengthNotMultipleOfThree { len: w.len() });
    }
    Ok(w.chunks_exact(3).map(|block| block[1]).collect())
}

/// `phi^n(2)` numbered from `-(3^n-1)/2` to `(3^n-1)/2`.
pub fn phi_window(n: u32) -> Result<TwoSidedWindow<Ternary>> {
    phi_window_with(n, &Limits::default())
}

pub fn phi_window_with(n: u32, limits: &Limits) -> Result<TwoSidedWindow<Ternary>> {
    let word = phi_power_with(Ternary::Two, n, limits)?;
    TwoSidedWindow::centered(word)
}

/// True when the three symbols of every aligned 3-block are pairwise distinct.
/// Returns the index of the first offending block otherwise.
pub fn first_non_permutation_block(w: &[Ternary]) -> Option<usize> {
    w.chunks(3).position(|block| {
        block.len() != 3 || block[0] == block[1] || block[1] == block[2] || block[0] == block[2]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Symbol;
    use proptest::prelude::*;

    fn t(s: &str) -> Word<Ternary> {
        s.parse().unwrap()
    }

    const PHI3: &str = "123213231213123132312132123";

    #[test]
    fn sigma_and_rho_examples() {
        assert_eq!(sigma(&t("2")), t("1"));
        assert_eq!(sigma(&t("123")), t("213"));
        assert_eq!(sigma(&t("333")), t("333"));
        assert_eq!(rho(&t("2")), t("3"));
        assert_eq!(rho(&t("123")), t("132"));
        assert_eq!(rho(&t("111")), t("111"));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&t("2")), t("123"));
        assert_eq!(phi(&t("123")), t("213123132"));
        assert_eq!(phi(&Word::empty()), Word::empty());
    }

    #[test]
    fn phi_power_listings() {
        assert_eq!(phi_power(0).unwrap(), t("2"));
        assert_eq!(phi_power(1).unwrap(), t("123"));
        assert_eq!(phi_power(2).unwrap(), t("213123132"));
        assert_eq!(phi_power(3).unwrap(), t(PHI3));
        for n in 0..=8 {
            assert_eq!(phi_power(n).unwrap().len(), 3usize.pow(n));
        }
    }

    #[test]
    fn phi_power_respects_depth_limit() {
        assert_eq!(
            phi_power(14).unwrap_err(),
            Error::DepthLimit {
                requested: 14,
                max: 13
            }
        );
        let tight = Limits::with_max_depth(2);
        assert!(phi_power_with(Ternary::Two, 2, &tight).is_ok());
        assert!(phi_power_with(Ternary::Two, 3, &tight).is_err());
    }

    #[test]
    fn iterates_match_phi_power() {
        for (n, w) in iterates(Ternary::Two).take(7).enumerate() {
            assert_eq!(w, phi_power(n as u32).unwrap());
        }
    }

    #[test]
    fn center_extract_examples() {
        assert_eq!(center_extract(&t("123")).unwrap(), t("2"));
        assert_eq!(center_extract(&t("213123132")).unwrap(), t("123"));
        assert_eq!(center_extract(&[]).unwrap(), Word::empty());
        assert_eq!(
            center_extract(&t("1231")).unwrap_err(),
            Error::LengthNotMultipleOfThree { len: 4 }
        );
    }

    #[test]
    fn phi_window_examples() {
        assert_eq!(phi_window(1).unwrap().at(0).unwrap(), Ternary::Two);
        assert_eq!(phi_window(2).unwrap().at(-4).unwrap(), Ternary::Two);
        let w2 = phi_window(2).unwrap();
        let w3 = phi_window(3).unwrap();
        for i in -4..=4 {
            assert_eq!(w2.at(i).unwrap(), w3.at(i).unwrap());
        }
    }

    #[test]
    fn windows_nest() {
        let windows: Vec<_> = (0..=9).map(|n| phi_window(n).unwrap()).collect();
        for pair in windows.windows(2) {
            let (inner, outer) = (&pair[0], &pair[1]);
            assert_eq!(outer.center_offset(), (outer.word().len() - 1) / 2);
            for i in inner.lo()..=inner.hi() {
                assert_eq!(inner.at(i).unwrap(), outer.at(i).unwrap(), "index {i}");
            }
        }
    }

    #[test]
    fn blocks_are_permutations() {
        for n in 1..=9 {
            assert_eq!(first_non_permutation_block(&phi_power(n).unwrap()), None, "n = {n}");
        }
        assert_eq!(first_non_permutation_block(&t("123121")), Some(1));
    }

    #[test]
    fn center_extract_inverts_phi_on_iterates() {
        for n in 1..=9 {
            assert_eq!(
                center_extract(&phi_power(n).unwrap()).unwrap(),
                phi_power(n - 1).unwrap()
            );
        }
    }

    #[test]
    fn boundary_forms() {
        for n in 1..=9u32 {
            let w = phi_power(n).unwrap().to_string();
            let (head, tail) = if n % 2 == 1 { ("123", "123") } else { ("213", "132") };
            assert!(w.starts_with(head) && w.ends_with(tail), "n = {n}: {w:.12}");
        }
    }

    fn ternary_word(max_len: usize) -> impl Strategy<Value = Word<Ternary>> {
        proptest::collection::vec(0usize..3, 0..max_len)
            .prop_map(|codes| codes.into_iter().map(|c| Ternary::ALL[c]).collect())
    }

    proptest! {
        #[test]
        fn sigma_and_rho_are_involutions(w in ternary_word(100)) {
            prop_assert_eq!(sigma(&sigma(&w)), w.clone());
            prop_assert_eq!(rho(&rho(&w)), w);
        }

        #[test]
        fn phi_triples_length(w in ternary_word(100)) {
            prop_assert_eq!(phi(&w).len(), 3 * w.len());
        }

        #[test]
        fn center_extract_commutes_with_phi(blocks in proptest::collection::vec(ternary_word(4), 0..40)) {
            let w: Word<Ternary> = blocks
                .iter()
                .flat_map(|b| {
                    let mut b = b.to_vec();
                    b.resize(3, Ternary::One);
                    b
                })
                .collect();
            prop_assert_eq!(
                center_extract(&phi(&w)).unwrap(),
                phi(&center_extract(&w).unwrap())
            );
        }
    }
}
