//! Exact decimal expansion of non-negative rationals.
//!
//! Every rational a/b expands as an integer part, a finite pre-period, and a
//! repetend (the minimal repeating block). The pre-period length is
//! max(v2, v5) of the reduced denominator and the repetend length is the
//! multiplicative order of 10 modulo the denominator with all factors 2 and 5
//! removed. [`expand`] recovers the structure by long division with
//! remainder-cycle detection and never consults the order computation, so the
//! two routes can check each other.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::numtheory::{self, NumTheoryError};

/// Fractional-digit budget used by callers that do not pick their own.
pub const DEFAULT_MAX_DIGITS: usize = 1_000_000;

/// Above this denominator the remainder-position table switches from a
/// directly indexed vector to an ordered map.
const DIRECT_TABLE_LIMIT: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpansionError {
    /// Denominators must be at least 1.
    ZeroDenominator,
    /// The pre-period plus period would exceed the digit budget.
    DigitBudgetExceeded { max_total_digits: usize },
    /// A digit string handed to [`DecimalExpansion::new`] is not a canonical
    /// expansion.
    Malformed(&'static str),
    /// The reconstructed fraction does not fit in 64 bits.
    ValueOutOfRange,
    /// Failure inside the order computation backing [`period_length`].
    NumTheory(NumTheoryError),
}

impl fmt::Display for ExpansionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpansionError::ZeroDenominator => write!(f, "denominator must be nonzero"),
            ExpansionError::DigitBudgetExceeded { max_total_digits } => write!(
                f,
                "expansion needs more than {max_total_digits} fractional digits"
            ),
            ExpansionError::Malformed(why) => write!(f, "malformed expansion: {why}"),
            ExpansionError::ValueOutOfRange => {
                write!(f, "reconstructed fraction does not fit in 64 bits")
            }
            ExpansionError::NumTheory(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ExpansionError {}

impl From<NumTheoryError> for ExpansionError {
    fn from(e: NumTheoryError) -> Self {
        ExpansionError::NumTheory(e)
    }
}

/// A reduced non-negative fraction. `gcd(numerator, denominator) = 1` and
/// `denominator >= 1` hold for every constructed value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactRational {
    numerator: u64,
    denominator: u64,
}

impl ExactRational {
    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Builds the reduced fraction numerator/denominator.
///
/// Reduction happens here, so 3/9 and 1/3 construct the same value.
pub fn make_rational(numerator: u64, denominator: u64) -> Result<ExactRational, ExpansionError> {
    if denominator == 0 {
        return Err(ExpansionError::ZeroDenominator);
    }
    let g = numtheory::gcd_u64(numerator, denominator);
    Ok(ExactRational {
        numerator: numerator / g,
        denominator: denominator / g,
    })
}

/// The exact decimal structure of a rational: integer part, pre-period, and
/// minimal repetend. An empty repetend means the expansion terminates.
///
/// Values are canonical: the repetend is the shortest repeating block, the
/// pre-period is as short as possible, and terminating expansions carry no
/// trailing zeros. [`expand`] only produces such values and
/// [`DecimalExpansion::new`] rejects everything else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecimalExpansion {
    integer_part: String,
    pre_period: String,
    repetend: String,
}

fn all_ascii_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// True when `repetend` cannot be generated by repeating one of its proper
/// prefixes whose length divides it.
fn is_minimal_repetend(repetend: &str) -> bool {
    let bytes = repetend.as_bytes();
    let n = bytes.len();
    for d in 1..n {
        if n % d != 0 {
            continue;
        }
        if bytes.chunks(d).all(|chunk| chunk == &bytes[..d]) {
            return false;
        }
    }
    true
}

impl DecimalExpansion {
    /// Validates and wraps the three digit strings of a canonical expansion.
    ///
    /// Rejects non-digit characters, integer parts with leading zeros,
    /// non-minimal repetends, all-zero or all-nine repetends, terminating
    /// expansions with trailing zeros, and pre-periods that could be folded
    /// into the repetend by rotation. Every value [`expand`] produces passes.
    pub fn new(
        integer_part: impl Into<String>,
        pre_period: impl Into<String>,
        repetend: impl Into<String>,
    ) -> Result<Self, ExpansionError> {
        let integer_part = integer_part.into();
        let pre_period = pre_period.into();
        let repetend = repetend.into();

        if !all_ascii_digits(&integer_part) {
            return Err(ExpansionError::Malformed(
                "integer part must be a nonempty digit string",
            ));
        }
        if integer_part.len() > 1 && integer_part.starts_with('0') {
            return Err(ExpansionError::Malformed("integer part has leading zeros"));
        }
        if !pre_period.is_empty() && !all_ascii_digits(&pre_period) {
            return Err(ExpansionError::Malformed("pre-period must be digits"));
        }
        if !repetend.is_empty() {
            if !all_ascii_digits(&repetend) {
                return Err(ExpansionError::Malformed("repetend must be digits"));
            }
            if repetend.bytes().all(|b| b == b'0') {
                return Err(ExpansionError::Malformed(
                    "an all-zero repetend denotes a terminating expansion",
                ));
            }
            if repetend.bytes().all(|b| b == b'9') {
                return Err(ExpansionError::Malformed(
                    "an all-nine repetend is not produced by long division",
                ));
            }
            if !is_minimal_repetend(&repetend) {
                return Err(ExpansionError::Malformed("repetend is not minimal"));
            }
            if pre_period.as_bytes().last() == repetend.as_bytes().last() {
                return Err(ExpansionError::Malformed(
                    "pre-period can be shortened by rotating the repetend",
                ));
            }
        } else if pre_period.ends_with('0') {
            return Err(ExpansionError::Malformed(
                "terminating expansion has trailing zeros",
            ));
        }

        Ok(DecimalExpansion {
            integer_part,
            pre_period,
            repetend,
        })
    }

    pub fn integer_part(&self) -> &str {
        &self.integer_part
    }

    pub fn pre_period(&self) -> &str {
        &self.pre_period
    }

    pub fn repetend(&self) -> &str {
        &self.repetend
    }

    pub fn is_terminating(&self) -> bool {
        self.repetend.is_empty()
    }

    /// Canonical text form: integer part, dot, pre-period, repetend in
    /// parentheses. Terminating decimals omit the parentheses and integers
    /// omit the dot: `0.(142857)`, `0.1(6)`, `0.5`, `3`.
    pub fn render(&self) -> String {
        let mut out = self.integer_part.clone();
        if self.pre_period.is_empty() && self.repetend.is_empty() {
            return out;
        }
        out.push('.');
        out.push_str(&self.pre_period);
        if !self.repetend.is_empty() {
            out.push('(');
            out.push_str(&self.repetend);
            out.push(')');
        }
        out
    }
}

impl fmt::Display for DecimalExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// First-seen positions of long-division remainders. Directly indexed for
/// small denominators, ordered map above [`DIRECT_TABLE_LIMIT`].
enum RemainderTable {
    Direct(Vec<usize>),
    Sparse(BTreeMap<u64, usize>),
}

const UNSEEN: usize = usize::MAX;

impl RemainderTable {
    fn new(denominator: u64) -> Self {
        if denominator <= DIRECT_TABLE_LIMIT {
            RemainderTable::Direct(vec![UNSEEN; denominator as usize])
        } else {
            RemainderTable::Sparse(BTreeMap::new())
        }
    }

    fn first_seen(&self, rem: u64) -> Option<usize> {
        match self {
            RemainderTable::Direct(v) => {
                let pos = v[rem as usize];
                (pos != UNSEEN).then_some(pos)
            }
            RemainderTable::Sparse(m) => m.get(&rem).copied(),
        }
    }

    fn record(&mut self, rem: u64, pos: usize) {
        match self {
            RemainderTable::Direct(v) => v[rem as usize] = pos,
            RemainderTable::Sparse(m) => {
                m.insert(rem, pos);
            }
        }
    }
}

/// Exact decomposition of `r` by long division.
///
/// Each remainder's first position is recorded; the repetend starts where a
/// remainder recurs, and a zero remainder terminates the expansion. The
/// budget counts fractional digits: if pre-period plus period would exceed
/// `max_total_digits`, the call fails rather than truncate.
pub fn expand(
    r: &ExactRational,
    max_total_digits: usize,
) -> Result<DecimalExpansion, ExpansionError> {
    let den = r.denominator;
    let integer_part = (r.numerator / den).to_string();
    let mut rem = r.numerator % den;

    let mut digits: Vec<u8> = Vec::new();
    let mut table = RemainderTable::new(den);
    let period_start = loop {
        if rem == 0 {
            break None;
        }
        if let Some(start) = table.first_seen(rem) {
            break Some(start);
        }
        if digits.len() >= max_total_digits {
            return Err(ExpansionError::DigitBudgetExceeded { max_total_digits });
        }
        table.record(rem, digits.len());
        let wide = rem as u128 * 10;
        digits.push((wide / den as u128) as u8);
        rem = (wide % den as u128) as u64;
    };

    let to_string = |slice: &[u8]| -> String {
        slice.iter().map(|&d| char::from(b'0' + d)).collect()
    };
    let (pre_period, repetend) = match period_start {
        None => (to_string(&digits), String::new()),
        Some(start) => (to_string(&digits[..start]), to_string(&digits[start..])),
    };
    Ok(DecimalExpansion {
        integer_part,
        pre_period,
        repetend,
    })
}

/// Repetend length shared by every reduced fraction with this denominator:
/// strip all factors 2 and 5, then take the multiplicative order of 10
/// modulo what remains (zero when nothing remains).
pub fn period_length(denominator: u64) -> Result<u64, ExpansionError> {
    if denominator == 0 {
        return Err(ExpansionError::ZeroDenominator);
    }
    let mut cofactor = denominator;
    while cofactor % 2 == 0 {
        cofactor /= 2;
    }
    while cofactor % 5 == 0 {
        cofactor /= 5;
    }
    if cofactor == 1 {
        return Ok(0);
    }
    Ok(numtheory::multiplicative_order(10, cofactor)?)
}

/// Infinite stream of the fractional digits of a rational.
///
/// State is the current remainder; each step emits floor(10 rem / den) and
/// keeps 10 rem mod den. Terminating expansions continue with zeros, so the
/// stream is total. One instance is single-owner mutable state; create one
/// per consumer.
#[derive(Debug, Clone)]
pub struct DigitStream {
    remainder: u64,
    denominator: u64,
}

impl DigitStream {
    pub(crate) fn from_parts(remainder: u64, denominator: u64) -> Self {
        DigitStream {
            remainder,
            denominator,
        }
    }

    /// The next fractional digit, 0 through 9.
    pub fn next_digit(&mut self) -> u8 {
        let wide = self.remainder as u128 * 10;
        let digit = (wide / self.denominator as u128) as u8;
        self.remainder = (wide % self.denominator as u128) as u64;
        digit
    }
}

impl Iterator for DigitStream {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        Some(self.next_digit())
    }
}

/// Stream of the fractional-part digits of `r`, starting at the first digit
/// after the decimal point.
pub fn digit_stream(r: &ExactRational) -> DigitStream {
    DigitStream::from_parts(r.numerator % r.denominator, r.denominator)
}

fn big_from_digits(digits: &str) -> BigUint {
    if digits.is_empty() {
        return BigUint::from(0u32);
    }
    BigUint::parse_bytes(digits.as_bytes(), 10).expect("validated digit string")
}

fn big_pow10(exp: usize) -> BigUint {
    let mut digits = vec![b'0'; exp + 1];
    digits[0] = b'1';
    BigUint::parse_bytes(&digits, 10).expect("constructed digit string")
}

/// 10^len - 1, the denominator block contributed by a repetend of `len`
/// digits.
fn big_repunit_nines(len: usize) -> BigUint {
    BigUint::parse_bytes(&vec![b'9'; len], 10).expect("constructed digit string")
}

fn big_gcd(mut a: BigUint, mut b: BigUint) -> BigUint {
    let zero = BigUint::from(0u32);
    while b != zero {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

/// The unique rational whose expansion is `e`, by the finite-geometric-series
/// identity; the exact inverse of [`expand`].
///
/// Intermediates are arbitrary precision, so any canonical expansion is
/// accepted; the reduced result must still fit in 64 bits.
pub fn reconstruct(e: &DecimalExpansion) -> Result<ExactRational, ExpansionError> {
    let p = e.pre_period.len();
    let l = e.repetend.len();
    let integer = big_from_digits(&e.integer_part);
    let pre = big_from_digits(&e.pre_period);

    let (num, den) = if l == 0 {
        let den = big_pow10(p);
        (&integer * &den + pre, den)
    } else {
        let block = big_repunit_nines(l);
        let rep = big_from_digits(&e.repetend);
        let den = &block * big_pow10(p);
        let num = &integer * &den + &pre * &block + rep;
        (num, den)
    };

    let g = big_gcd(num.clone(), den.clone());
    let numerator = u64::try_from(&(&num / &g)).map_err(|_| ExpansionError::ValueOutOfRange)?;
    let denominator = u64::try_from(&(&den / &g)).map_err(|_| ExpansionError::ValueOutOfRange)?;
    Ok(ExactRational {
        numerator,
        denominator,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: u64, d: u64) -> ExactRational {
        make_rational(n, d).unwrap()
    }

    #[test]
    fn rational_reduction() {
        assert_eq!(rat(3, 9), rat(1, 3));
        assert_eq!(rat(1, 7).numerator(), 1);
        assert_eq!(rat(64, 2431).denominator(), 2431);
        assert_eq!(rat(0, 5), rat(0, 1));
        assert_eq!(make_rational(1, 0), Err(ExpansionError::ZeroDenominator));
    }

    #[test]
    fn expand_examples() {
        let e = expand(&rat(1, 7), DEFAULT_MAX_DIGITS).unwrap();
        assert_eq!(
            (e.integer_part(), e.pre_period(), e.repetend()),
            ("0", "", "142857")
        );

        let e = expand(&rat(4, 9), DEFAULT_MAX_DIGITS).unwrap();
        assert_eq!(
            (e.integer_part(), e.pre_period(), e.repetend()),
            ("0", "", "4")
        );

        let e = expand(&rat(1, 2), DEFAULT_MAX_DIGITS).unwrap();
        assert_eq!(
            (e.integer_part(), e.pre_period(), e.repetend()),
            ("0", "5", "")
        );
        assert!(e.is_terminating());

        let e = expand(&rat(1, 6), DEFAULT_MAX_DIGITS).unwrap();
        assert_eq!(
            (e.integer_part(), e.pre_period(), e.repetend()),
            ("0", "1", "6")
        );

        let e = expand(&rat(22, 7), DEFAULT_MAX_DIGITS).unwrap();
        assert_eq!(
            (e.integer_part(), e.pre_period(), e.repetend()),
            ("3", "", "142857")
        );
    }

    #[test]
    fn expand_integers_and_zero() {
        let e = expand(&rat(5, 1), DEFAULT_MAX_DIGITS).unwrap();
        assert_eq!((e.integer_part(), e.pre_period(), e.repetend()), ("5", "", ""));
        assert_eq!(e.render(), "5");

        let e = expand(&rat(0, 3), DEFAULT_MAX_DIGITS).unwrap();
        assert_eq!(e.render(), "0");
    }

    #[test]
    fn expand_respects_budget() {
        // period of 1/7 is 6, so five digits cannot close the cycle
        assert_eq!(
            expand(&rat(1, 7), 5),
            Err(ExpansionError::DigitBudgetExceeded { max_total_digits: 5 })
        );
        // exactly pre + period digits suffice
        assert!(expand(&rat(1, 7), 6).is_ok());
        assert!(expand(&rat(1, 6), 2).is_ok());
        assert_eq!(
            expand(&rat(1, 6), 1),
            Err(ExpansionError::DigitBudgetExceeded { max_total_digits: 1 })
        );
    }

    #[test]
    fn render_formats() {
        let cases = [
            ((1, 7), "0.(142857)"),
            ((4, 9), "0.(4)"),
            ((1, 2), "0.5"),
            ((1, 6), "0.1(6)"),
            ((22, 7), "3.(142857)"),
            ((151, 300), "0.50(3)"),
        ];
        for ((n, d), want) in cases {
            assert_eq!(expand(&rat(n, d), DEFAULT_MAX_DIGITS).unwrap().render(), want);
        }
    }

    #[test]
    fn period_length_examples() {
        assert_eq!(period_length(7).unwrap(), 6);
        assert_eq!(period_length(9).unwrap(), 1);
        assert_eq!(period_length(2431).unwrap(), 48);
        assert_eq!(period_length(1).unwrap(), 0);
        assert_eq!(period_length(2).unwrap(), 0);
        assert_eq!(period_length(6).unwrap(), 1);
        assert_eq!(period_length(300).unwrap(), 1);
        assert_eq!(period_length(0), Err(ExpansionError::ZeroDenominator));
    }

    #[test]
    fn digit_stream_examples() {
        let take = |r: &ExactRational, n: usize| -> String {
            digit_stream(r)
                .take(n)
                .map(|d| char::from(b'0' + d))
                .collect()
        };
        assert_eq!(take(&rat(1, 7), 8), "14285714");
        assert_eq!(take(&rat(1, 2), 3), "500");
        let first = take(&rat(64, 2431), 48);
        let both = take(&rat(64, 2431), 96);
        assert_eq!(&both[..48], first);
        assert_eq!(&both[48..], first);
    }

    #[test]
    fn reconstruct_examples() {
        let e = DecimalExpansion::new("0", "", "142857").unwrap();
        assert_eq!(reconstruct(&e).unwrap(), rat(1, 7));

        let e = DecimalExpansion::new("0", "5", "").unwrap();
        assert_eq!(reconstruct(&e).unwrap(), rat(1, 2));

        let e = DecimalExpansion::new("0", "1", "6").unwrap();
        assert_eq!(reconstruct(&e).unwrap(), rat(1, 6));

        let e = DecimalExpansion::new("3", "", "142857").unwrap();
        assert_eq!(reconstruct(&e).unwrap(), rat(22, 7));
    }

    #[test]
    fn expansion_validation() {
        assert!(DecimalExpansion::new("0", "", "142857").is_ok());
        assert!(DecimalExpansion::new("", "", "3").is_err());
        assert!(DecimalExpansion::new("01", "", "3").is_err());
        assert!(DecimalExpansion::new("0", "x", "3").is_err());
        assert!(DecimalExpansion::new("0", "", "3x").is_err());
        // "142857142857" repeats a 6-digit block
        assert!(DecimalExpansion::new("0", "", "142857142857").is_err());
        assert!(DecimalExpansion::new("0", "1", "0").is_err());
        assert!(DecimalExpansion::new("0", "", "9").is_err());
        assert!(DecimalExpansion::new("0", "50", "").is_err());
        // 0.04(54) is 0.0(45) rotated; only the latter is canonical
        assert!(DecimalExpansion::new("0", "04", "54").is_err());
        assert!(DecimalExpansion::new("0", "0", "45").is_ok());
    }

    #[test]
    fn reconstruct_overflow_is_reported() {
        // 39 ones and a two: minimal, and reduces to a denominator of
        // 10^40 - 1, far beyond 64 bits
        let digits = "1".repeat(39) + "2";
        let e = DecimalExpansion::new("0", "", digits).unwrap();
        assert_eq!(reconstruct(&e), Err(ExpansionError::ValueOutOfRange));
    }
}
