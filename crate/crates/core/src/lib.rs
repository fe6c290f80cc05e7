//! A ternary square-free word indexed by all integers, built two ways: by
//! iterating the tripling morphism `phi(a) = sigma(a) a rho(a)` from `2`, and
//! directly, by running a three-state automaton over the balanced ternary
//! digits of the index. The crate also ships square detectors and a
//! verification harness that checks the two constructions against each other.
//!
//! ```
//! use sqfw::{alphabet::relabel_to_balanced, dfao::b_range, morphism::phi_power};
//!
//! let word = phi_power(2).unwrap();
//! assert_eq!(word.to_string(), "213123132");
//! assert_eq!(b_range(-4, 4).unwrap(), relabel_to_balanced(&word));
//! assert!(sqfw::repetition::is_squarefree(&word));
//! ```

pub mod alphabet;
pub mod balanced_ternary;
pub mod cli;
pub mod dfao;
pub mod error;
pub mod limits;
pub mod morphism;
pub mod reference_sequences;
pub mod repetition;
pub mod verification;

pub use alphabet::{Balanced, Bit, Symbol, Ternary, Trit, TwoSidedWindow, Word};
pub use balanced_ternary::{decode, encode, BalancedDigits};
pub use dfao::{b_at, b_range, squarefree_dfao, to_dot, Dfao};
pub use error::{Error, Result};
pub use limits::Limits;
pub use morphism::{center_extract, phi, phi_power, phi_window, rho, sigma};
pub use repetition::{find_square, find_square_naive, is_squarefree, SquareWitness};
