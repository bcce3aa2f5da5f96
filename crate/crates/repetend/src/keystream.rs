//! Key generation and digit keystreams over pure repetends.
//!
//! A key is a reduced fraction with a denominator coprime to 10, so its
//! expansion repeats from the first fractional digit, plus an offset into
//! that digit stream. [`generate_key`] searches for a denominator whose
//! repetend is at least as long as the message, so no digit block recurs
//! within a single message.

use alloc::string::String;
use core::fmt;

use crate::expansion::{self, DigitStream, ExpansionError};
use crate::numtheory::{self, NumTheoryError, SearchPolicy};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KeyError {
    /// Numerator and denominator share a factor.
    NotReduced { numerator: u64, denominator: u64 },
    /// The denominator is divisible by 2 or 5, so the expansion would carry
    /// a non-repeating prefix.
    ImpureDenominator(u64),
    /// The numerator must satisfy 1 <= numerator < denominator.
    NumeratorOutOfRange { numerator: u64, denominator: u64 },
    /// A generated key failed its final period check.
    PeriodShortfall { needed: u64, got: u64 },
    NumTheory(NumTheoryError),
    Expansion(ExpansionError),
}

impl fmt::Display for KeyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KeyError::NotReduced {
                numerator,
                denominator,
            } => write!(f, "{numerator}/{denominator} is not in lowest terms"),
            KeyError::ImpureDenominator(d) => {
                write!(f, "denominator {d} shares a factor with 10")
            }
            KeyError::NumeratorOutOfRange {
                numerator,
                denominator,
            } => write!(
                f,
                "numerator {numerator} not in 1..{denominator}"
            ),
            KeyError::PeriodShortfall { needed, got } => {
                write!(f, "key period {got} is shorter than required {needed}")
            }
            KeyError::NumTheory(e) => write!(f, "{e}"),
            KeyError::Expansion(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for KeyError {}

impl From<NumTheoryError> for KeyError {
    fn from(e: NumTheoryError) -> Self {
        KeyError::NumTheory(e)
    }
}

impl From<ExpansionError> for KeyError {
    fn from(e: ExpansionError) -> Self {
        KeyError::Expansion(e)
    }
}

/// A keystream source: reduced fraction with a pure repetend, plus how many
/// leading digits of the stream to skip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KeyDescriptor {
    numerator: u64,
    denominator: u64,
    offset: u64,
}

impl KeyDescriptor {
    /// Validates the key invariants: `1 <= numerator < denominator`,
    /// `gcd(numerator, denominator) = 1`, `gcd(denominator, 10) = 1`.
    pub fn new(numerator: u64, denominator: u64, offset: u64) -> Result<Self, KeyError> {
        if denominator == 0 || numerator == 0 || numerator >= denominator {
            return Err(KeyError::NumeratorOutOfRange {
                numerator,
                denominator,
            });
        }
        if denominator % 2 == 0 || denominator % 5 == 0 {
            return Err(KeyError::ImpureDenominator(denominator));
        }
        if numtheory::gcd_u64(numerator, denominator) != 1 {
            return Err(KeyError::NotReduced {
                numerator,
                denominator,
            });
        }
        Ok(KeyDescriptor {
            numerator,
            denominator,
            offset,
        })
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn offset(&self) -> u64 {
        self.offset
    }

    /// The same key material with a different stream offset.
    pub fn with_offset(&self, offset: u64) -> Self {
        KeyDescriptor { offset, ..*self }
    }

    /// Repetend length of the underlying fraction.
    pub fn period(&self) -> Result<u64, KeyError> {
        Ok(expansion::period_length(self.denominator)?)
    }
}

/// Builds a key whose repetend covers a message of `message_length`
/// characters.
///
/// The denominator is the smallest (under `policy`) with repetend length at
/// least `message_length`; the numerator is the smallest value coprime to it
/// that is at least `max(1, numerator_seed mod denominator)`; the offset is
/// zero. The period is re-checked before the key is returned.
pub fn generate_key(
    message_length: u64,
    policy: SearchPolicy,
    numerator_seed: u64,
) -> Result<KeyDescriptor, KeyError> {
    let needed = message_length.max(1);
    let denominator = numtheory::find_denominator_with_min_order(needed, policy)?;

    let mut numerator = (numerator_seed % denominator).max(1);
    while numtheory::gcd_u64(numerator, denominator) != 1 {
        numerator += 1;
    }
    // numerator never reaches denominator: denominator - 1 is coprime to it
    let key = KeyDescriptor::new(numerator, denominator, 0)?;

    let got = key.period()?;
    if got < needed {
        return Err(KeyError::PeriodShortfall { needed, got });
    }
    Ok(key)
}

/// The digit stream of the key's fraction, fast-forwarded past `offset`
/// digits.
///
/// Skipping is a modular power, not a digit-by-digit walk: after k digits
/// the long-division remainder is numerator * 10^k mod denominator. That
/// remainder stays coprime to the denominator, so the shifted stream is the
/// digit stream of another reduced fraction.
pub fn keystream(key: &KeyDescriptor) -> DigitStream {
    let den = key.denominator;
    let shift = numtheory::mod_pow(10, key.offset, den).expect("denominator is at least 3");
    let rem = (key.numerator as u128 * shift as u128 % den as u128) as u64;
    let shifted = expansion::make_rational(rem, den).expect("denominator is nonzero");
    expansion::digit_stream(&shifted)
}

/// The first `count` digits of the key's stream as an ASCII string.
pub fn keystream_digits(key: &KeyDescriptor, count: usize) -> String {
    keystream(key)
        .take(count)
        .map(|d| char::from(b'0' + d))
        .collect()
}
