//! Code words over `{O, M, P}` naming hexagonal chains.
//!
//! A chain of `n` hexagons is described by `n - 2` letters; the letter at
//! (1-based) index `i` records whether the cut-vertex leaving hexagon `i` sits
//! at ring distance 1, 2 or 3 from the one entering it. Chains of length 1 and
//! 2 have an empty code, so the length is carried explicitly.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Position of the exit vertex of a hexagon relative to its entry vertex.
///
/// The derived ordering `O < M < P` is the order used for canonical codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    /// Ortho, ring distance 1.
    O,
    /// Meta, ring distance 2.
    M,
    /// Para, ring distance 3.
    P,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::O, Letter::M, Letter::P];

    /// Ring distance between the entry and exit vertex.
    pub const fn ring_distance(self) -> usize {
        match self {
            Letter::O => 1,
            Letter::M => 2,
            Letter::P => 3,
        }
    }

    pub const fn as_char(self) -> char {
        match self {
            Letter::O => 'O',
            Letter::M => 'M',
            Letter::P => 'P',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c.to_ascii_uppercase() {
            'O' => Some(Letter::O),
            'M' => Some(Letter::M),
            'P' => Some(Letter::P),
            _ => None,
        }
    }

    pub(crate) const fn from_digit(d: u64) -> Letter {
        match d {
            0 => Letter::O,
            1 => Letter::M,
            _ => Letter::P,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A validated chain code: `n - 2` letters plus the chain length `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CodeWord {
    letters: Vec<Letter>,
    n: usize,
}

impl CodeWord {
    /// Builds a code for a chain of `letters.len() + 2` hexagons.
    pub fn new(letters: Vec<Letter>) -> CodeWord {
        let n = letters.len() + 2;
        CodeWord { letters, n }
    }

    /// The empty code of a chain with one or two hexagons.
    pub fn short(n: usize) -> Result<CodeWord> {
        match n {
            1 | 2 => Ok(CodeWord {
                letters: Vec::new(),
                n,
            }),
            0 => Err(Error::ChainTooShort { n, min: 1 }),
            _ => Err(Error::LengthMismatch {
                letters: 0,
                implied: 2,
                given: n,
            }),
        }
    }

    /// The constant code `x x ... x` of a chain with `n` hexagons.
    pub fn constant(letter: Letter, n: usize) -> Result<CodeWord> {
        if n <= 2 {
            return CodeWord::short(n);
        }
        Ok(CodeWord::new(vec![letter; n - 2]))
    }

    /// Draws a uniformly random code for a chain of `n` hexagons.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<CodeWord> {
        if n <= 2 {
            return CodeWord::short(n);
        }
        let letters = (0..n - 2)
            .map(|_| Letter::from_digit(rng.random_range(0..3)))
            .collect();
        Ok(CodeWord::new(letters))
    }

    /// Number of hexagons in the chain.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter governing cut-vertex `c_k` (equivalently tail `t_k`) for
    /// `2 <= k <= n - 1`. `c_1` has no letter.
    pub fn letter_for_cut(&self, k: usize) -> Option<Letter> {
        k.checked_sub(2).and_then(|i| self.letters.get(i).copied())
    }

    /// The single letter of a constant code, if the code is constant.
    ///
    /// Empty codes are constant for every letter and report `None` here;
    /// use [`CodeWord::is_constant`] to test for constancy.
    pub fn constant_letter(&self) -> Option<Letter> {
        let first = *self.letters.first()?;
        self.letters.iter().all(|&l| l == first).then_some(first)
    }

    pub fn is_constant(&self) -> bool {
        self.is_empty() || self.constant_letter().is_some()
    }

    pub fn reversed(&self) -> CodeWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        CodeWord { letters, n: self.n }
    }

    pub fn is_palindrome(&self) -> bool {
        self.letters.iter().eq(self.letters.iter().rev())
    }

    /// Whether this code is the representative of its chain, i.e. not larger
    /// than its reversal.
    pub fn is_canonical(&self) -> bool {
        self.letters.iter().cmp(self.letters.iter().rev()).is_le()
    }

    /// The lexicographically smaller of the code and its reversal.
    pub fn canonicalize(&self) -> CodeWord {
        if self.is_canonical() {
            self.clone()
        } else {
            self.reversed()
        }
    }

    /// Code of the hexagonal squeeze of the polyphenyl chain with this code.
    ///
    /// A polyphenyl chain and its squeeze are described by the same word, so
    /// this is the identity; see [`crate::graph::squeeze_graph`] for the
    /// graph-level operation.
    pub fn squeeze(&self) -> CodeWord {
        self.clone()
    }
}

impl fmt::Display for CodeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for CodeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<CodeWord> {
        parse_code(s, None)
    }
}

/// Parses a code word, case-insensitively.
///
/// When `n` is given it must agree with the code length; an empty code needs
/// `n` to be 1 or 2.
pub fn parse_code(text: &str, n: Option<usize>) -> Result<CodeWord> {
    let letters = text
        .chars()
        .enumerate()
        .map(|(i, c)| {
            Letter::from_char(c).ok_or(Error::InvalidLetter {
                position: i + 1,
                found: c,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    match (letters.is_empty(), n) {
        (true, None) => Err(Error::AmbiguousEmptyCode),
        (true, Some(n)) => CodeWord::short(n),
        (false, Some(given)) if given != letters.len() + 2 => Err(Error::LengthMismatch {
            letters: letters.len(),
            implied: letters.len() + 2,
            given,
        }),
        (false, _) => Ok(CodeWord::new(letters)),
    }
}

/// Canonical representative of the chain named by `code`.
pub fn canonicalize(code: &CodeWord) -> CodeWord {
    code.canonicalize()
}
