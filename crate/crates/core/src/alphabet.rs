//! Closed alphabets, finite words over them, and two-sided windows.
//!
//! Every symbol type is a small `Copy` enum implementing [`Symbol`], so a
//! [`Word`] can only ever hold symbols of its declared alphabet. Parsing from
//! text is the one place where an alphabet mismatch can surface.

use std::fmt;
use std::hash::Hash;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A symbol of a fixed, finite alphabet.
pub trait Symbol: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    /// Alphabet name used in error messages and CLI flags.
    const ALPHABET: &'static str;
    /// Every symbol, ordered by [`Symbol::index`].
    const ALL: &'static [Self];

    /// Dense index in `0..ALL.len()`.
    fn index(self) -> usize;
    /// Integer value of the symbol.
    fn value(self) -> i8;
    /// Single character used in compact word rendering.
    fn to_char(self) -> char;
    /// Numeric label, e.g. `"+1"` for the balanced plus digit.
    fn label(self) -> &'static str;

    fn from_char(c: char) -> Option<Self> {
        Self::ALL.iter().copied().find(|s| s.to_char() == c)
    }

    fn from_value(v: i8) -> Option<Self> {
        Self::ALL.iter().copied().find(|s| s.value() == v)
    }
}

/// Symbols of the `{1, 2, 3}` alphabet the morphism works over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Ternary {
    One = 1,
    Two = 2,
    Three = 3,
}

impl Symbol for Ternary {
    const ALPHABET: &'static str = "{1,2,3}";
    const ALL: &'static [Self] = &[Ternary::One, Ternary::Two, Ternary::Three];

    fn index(self) -> usize {
        self as usize - 1
    }

    fn value(self) -> i8 {
        self as i8
    }

    fn to_char(self) -> char {
        match self {
            Ternary::One => '1',
            Ternary::Two => '2',
            Ternary::Three => '3',
        }
    }

    fn label(self) -> &'static str {
        match self {
            Ternary::One => "1",
            Ternary::Two => "2",
            Ternary::Three => "3",
        }
    }
}

/// Balanced ternary digits and sequence symbols, `{-1, 0, +1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(i8)]
pub enum Balanced {
    Minus = -1,
    Zero = 0,
    Plus = 1,
}

impl Balanced {
    pub fn negate(self) -> Self {
        match self {
            Balanced::Minus => Balanced::Plus,
            Balanced::Zero => Balanced::Zero,
            Balanced::Plus => Balanced::Minus,
        }
    }
}

impl std::ops::Neg for Balanced {
    type Output = Balanced;

    fn neg(self) -> Balanced {
        self.negate()
    }
}

impl Symbol for Balanced {
    const ALPHABET: &'static str = "{-1,0,+1}";
    const ALL: &'static [Self] = &[Balanced::Minus, Balanced::Zero, Balanced::Plus];

    fn index(self) -> usize {
        (self as i8 + 1) as usize
    }

    fn value(self) -> i8 {
        self as i8
    }

    fn to_char(self) -> char {
        match self {
            Balanced::Minus => '-',
            Balanced::Zero => '0',
            Balanced::Plus => '+',
        }
    }

    fn label(self) -> &'static str {
        match self {
            Balanced::Minus => "-1",
            Balanced::Zero => "0",
            Balanced::Plus => "+1",
        }
    }
}

/// Binary symbols, used for the Thue-Morse word and base-2 digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Bit {
    Zero = 0,
    One = 1,
}

impl Bit {
    pub fn flip(self) -> Self {
        match self {
            Bit::Zero => Bit::One,
            Bit::One => Bit::Zero,
        }
    }
}

impl Symbol for Bit {
    const ALPHABET: &'static str = "{0,1}";
    const ALL: &'static [Self] = &[Bit::Zero, Bit::One];

    fn index(self) -> usize {
        self as usize
    }

    fn value(self) -> i8 {
        self as i8
    }

    fn to_char(self) -> char {
        match self {
            Bit::Zero => '0',
            Bit::One => '1',
        }
    }

    fn label(self) -> &'static str {
        match self {
            Bit::Zero => "0",
            Bit::One => "1",
        }
    }
}

/// Unsigned ternary digits `{0, 1, 2}`; the alphabet of the run-length word
/// derived from Thue-Morse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Trit {
    Zero = 0,
    One = 1,
    Two = 2,
}

impl Symbol for Trit {
    const ALPHABET: &'static str = "{0,1,2}";
    const ALL: &'static [Self] = &[Trit::Zero, Trit::One, Trit::Two];

    fn index(self) -> usize {
        self as usize
    }

    fn value(self) -> i8 {
        self as i8
    }

    fn to_char(self) -> char {
        match self {
            Trit::Zero => '0',
            Trit::One => '1',
            Trit::Two => '2',
        }
    }

    fn label(self) -> &'static str {
        match self {
            Trit::Zero => "0",
            Trit::One => "1",
            Trit::Two => "2",
        }
    }
}

/// A finite word over the alphabet `S`. The empty word is valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word<S>(Vec<S>);

impl<S: Symbol> Word<S> {
    pub fn new(symbols: Vec<S>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn as_slice(&self) -> &[S] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<S> {
        self.0
    }

    /// Maps every symbol through `f`, possibly into another alphabet.
    pub fn map<T: Symbol>(&self, f: impl Fn(S) -> T) -> Word<T> {
        Word(self.0.iter().map(|&s| f(s)).collect())
    }

    /// Symbols joined by single spaces using their numeric labels.
    pub fn to_spaced(&self) -> String {
        self.0
            .iter()
            .map(|s| s.label())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses a word, ignoring ASCII whitespace.
    pub fn parse(text: &str) -> Result<Self> {
        text.chars()
            .filter(|c| !c.is_ascii_whitespace())
            .enumerate()
            .map(|(position, c)| {
                S::from_char(c).ok_or(Error::AlphabetMismatch {
                    alphabet: S::ALPHABET,
                    found: c,
                    position,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl<S> Deref for Word<S> {
    type Target = [S];

    fn deref(&self) -> &[S] {
        &self.0
    }
}

impl<S> From<Vec<S>> for Word<S> {
    fn from(symbols: Vec<S>) -> Self {
        Word(symbols)
    }
}

impl<S> FromIterator<S> for Word<S> {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<S> IntoIterator for Word<S> {
    type Item = S;
    type IntoIter = std::vec::IntoIter<S>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a, S> IntoIterator for &'a Word<S> {
    type Item = &'a S;
    type IntoIter = std::slice::Iter<'a, S>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl<S: Symbol> fmt::Display for Word<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.to_char()))
    }
}

impl<S: Symbol> FromStr for Word<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl<S: Symbol> Serialize for Word<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        serializer.collect_str(self)
    }
}

pub fn ternary_to_balanced(s: Ternary) -> Balanced {
    match s {
        Ternary::One => Balanced::Minus,
        Ternary::Two => Balanced::Zero,
        Ternary::Three => Balanced::Plus,
    }
}

pub fn balanced_to_ternary(s: Balanced) -> Ternary {
    match s {
        Balanced::Minus => Ternary::One,
        Balanced::Zero => Ternary::Two,
        Balanced::Plus => Ternary::Three,
    }
}

/// Relabels `1, 2, 3` as `-1, 0, +1`.
pub fn relabel_to_balanced(w: &Word<Ternary>) -> Word<Balanced> {
    w.map(ternary_to_balanced)
}

/// Inverse of [`relabel_to_balanced`].
pub fn relabel_to_ternary(w: &Word<Balanced>) -> Word<Ternary> {
    w.map(balanced_to_ternary)
}

/// A finite word carrying a two-sided numbering: logical index `i` lives at
/// position `center_offset + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSidedWindow<S> {
    word: Word<S>,
    center_offset: usize,
}

impl<S: Symbol> TwoSidedWindow<S> {
    /// Fails with [`Error::OutOfRange`] if the word is empty or the center is
    /// not a position of the word.
    pub fn new(word: Word<S>, center_offset: usize) -> Result<Self> {
        if center_offset >= word.len() {
            return Err(Error::OutOfRange {
                index: center_offset as i64,
                lo: 0,
                hi: word.len() as i64 - 1,
            });
        }
        Ok(TwoSidedWindow { word, center_offset })
    }

    /// Window over an odd-length word with the middle symbol at index 0.
    pub fn centered(word: Word<S>) -> Result<Self> {
        let center = word.len() / 2;
        Self::new(word, center)
    }

    pub fn word(&self) -> &Word<S> {
        &self.word
    }

    pub fn into_word(self) -> Word<S> {
        self.word
    }

    pub fn center_offset(&self) -> usize {
        self.center_offset
    }

    /// Smallest valid logical index.
    pub fn lo(&self) -> i64 {
        -(self.center_offset as i64)
    }

    /// Largest valid logical index.
    pub fn hi(&self) -> i64 {
        (self.word.len() - 1 - self.center_offset) as i64
    }

    pub fn at(&self, i: i64) -> Result<S> {
        if i < self.lo() || i > self.hi() {
            return Err(Error::OutOfRange {
                index: i,
                lo: self.lo(),
                hi: self.hi(),
            });
        }
        Ok(self.word[(self.center_offset as i64 + i) as usize])
    }

    /// `(logical index, symbol)` pairs from `lo()` to `hi()`.
    pub fn indexed(&self) -> impl Iterator<Item = (i64, S)> + '_ {
        let lo = self.lo();
        self.word
            .iter()
            .enumerate()
            .map(move |(k, &s)| (lo + k as i64, s))
    }
}

/// Free function form of [`TwoSidedWindow::at`].
pub fn window_at<S: Symbol>(win: &TwoSidedWindow<S>, i: i64) -> Result<S> {
    win.at(i)
}
