//! Counting arguments over bounded ranges: the census of pure-repetend
//! fractions, coprime-pair counts, coprime density in windows of odd
//! numbers, and the position arithmetic of the odd-number series 3, 5, 7...

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::numtheory::{self, NumTheoryError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CensusError {
    /// The census is defined from denominator 3 upward.
    MaxTooSmall(u64),
    /// An odd-series operation received an even value.
    EvenValue(u64),
    /// The odd-number series starts at 3.
    OddTooSmall(u64),
    /// Multiplier ranges start at 1.
    ZeroMultiplier,
    /// A count or position does not fit in 64 bits.
    Overflow,
    NumTheory(NumTheoryError),
}

impl fmt::Display for CensusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusError::MaxTooSmall(max) => {
                write!(f, "census bound {max} is below the minimum of 3")
            }
            CensusError::EvenValue(v) => {
                write!(f, "{v} is even; this operation takes odd numbers")
            }
            CensusError::OddTooSmall(v) => {
                write!(f, "odd value {v} is below the series start 3")
            }
            CensusError::ZeroMultiplier => write!(f, "multiplier count must be at least 1"),
            CensusError::Overflow => write!(f, "result does not fit in 64 bits"),
            CensusError::NumTheory(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CensusError {}

impl From<NumTheoryError> for CensusError {
    fn from(e: NumTheoryError) -> Self {
        CensusError::NumTheory(e)
    }
}

/// Count of reduced proper fractions with pure repetends, itemized by
/// denominator.
///
/// A denominator qualifies when it is at least 3 and coprime to 10; each
/// contributes its totient many numerators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    max_denominator: u64,
    per_denominator_counts: Vec<(u64, u64)>,
    fraction_count: u64,
}

impl CensusReport {
    pub fn max_denominator(&self) -> u64 {
        self.max_denominator
    }

    /// (denominator, numerator count) rows in increasing denominator order.
    pub fn per_denominator_counts(&self) -> &[(u64, u64)] {
        &self.per_denominator_counts
    }

    pub fn qualifying_denominators(&self) -> impl Iterator<Item = u64> + '_ {
        self.per_denominator_counts.iter().map(|&(d, _)| d)
    }

    pub fn fraction_count(&self) -> u64 {
        self.fraction_count
    }

    /// Comma-separated rows `denominator,count`, closed by a `TOTAL` row.
    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        for (d, c) in &self.per_denominator_counts {
            out.push_str(&format!("{d},{c}\n"));
        }
        out.push_str(&format!("TOTAL,{}\n", self.fraction_count));
        out
    }

    /// Right-aligned two-column table with a header and a `TOTAL` row.
    pub fn render_table(&self) -> String {
        let headers = ("denominator", "count");
        let digits = |n: u64| n.to_string().len();
        let mut w1 = headers.0.len().max("TOTAL".len());
        let mut w2 = headers.1.len().max(digits(self.fraction_count));
        for &(d, c) in &self.per_denominator_counts {
            w1 = w1.max(digits(d));
            w2 = w2.max(digits(c));
        }
        let mut out = format!("{:>w1$}  {:>w2$}\n", headers.0, headers.1);
        for &(d, c) in &self.per_denominator_counts {
            out.push_str(&format!("{d:>w1$}  {c:>w2$}\n"));
        }
        out.push_str(&format!("{:>w1$}  {:>w2$}\n", "TOTAL", self.fraction_count));
        out
    }
}

/// Counts the reduced fractions a/b with 1 <= a < b <= `max_denominator`
/// whose expansions are pure repetends, itemized by denominator.
///
/// Reducible fractions are excluded by counting only numerators coprime to
/// the denominator, which is exactly the totient of each qualifying
/// denominator.
pub fn repetend_census(max_denominator: u64) -> Result<CensusReport, CensusError> {
    if max_denominator < 3 {
        return Err(CensusError::MaxTooSmall(max_denominator));
    }
    let mut per_denominator_counts = Vec::new();
    let mut fraction_count: u64 = 0;
    let mut d = 3;
    while d <= max_denominator {
        if d % 5 != 0 {
            let phi = numtheory::euler_phi(d)?;
            fraction_count = fraction_count
                .checked_add(phi)
                .ok_or(CensusError::Overflow)?;
            per_denominator_counts.push((d, phi));
        }
        d += 2;
    }
    Ok(CensusReport {
        max_denominator,
        per_denominator_counts,
        fraction_count,
    })
}

/// Number of unordered pairs {a, b} with 1 <= a < b <= n and gcd(a, b) = 1,
/// by direct enumeration. Returns 0 for n < 2. Quadratic in n; intended for
/// desk-scale bounds.
pub fn count_coprime_pairs(n: u64) -> u64 {
    let mut count = 0;
    for b in 2..=n.max(1) {
        for a in 1..b {
            if numtheory::gcd_u64(a, b) == 1 {
                count += 1;
            }
        }
    }
    count
}

/// [`count_coprime_pairs`] restricted to pairs of odd numbers.
pub fn count_odd_coprime_pairs(n: u64) -> u64 {
    let mut count = 0;
    let mut b = 3;
    while b <= n {
        let mut a = 1;
        while a < b {
            if numtheory::gcd_u64(a, b) == 1 {
                count += 1;
            }
            a += 2;
        }
        b += 2;
    }
    count
}

/// How many of any `n` consecutive odd integers are coprime to `n`.
///
/// The count is independent of where the window starts, because the window
/// covers each residue class modulo odd `n` exactly once; this is checked
/// against two shifted windows rather than assumed.
pub fn coprime_count_in_odd_window(n: u64) -> Result<u64, CensusError> {
    if n % 2 == 0 {
        return Err(CensusError::EvenValue(n));
    }
    if n < 3 {
        return Err(CensusError::OddTooSmall(n));
    }
    let count_from = |start: u128| -> u64 {
        (0..n)
            .filter(|&k| {
                let member = (start + 2 * k as u128) % n as u128;
                numtheory::gcd_u64(member as u64, n) == 1
            })
            .count() as u64
    };
    let count = count_from(1);
    assert_eq!(count, count_from(n as u128 + 2));
    assert_eq!(count, count_from(3 * n as u128 + 4));
    Ok(count)
}

/// The odd number at a 1-based position of the series 3, 5, 7, ...
///
/// Positions start at 1; `odd_at(1) = 3`.
pub fn odd_at(position: u64) -> u64 {
    2 * position + 1
}

/// Position of odd `o` in the series 3, 5, 7, ...; inverse of [`odd_at`].
pub fn first_position(o: u64) -> Result<u64, CensusError> {
    if o % 2 == 0 {
        return Err(CensusError::EvenValue(o));
    }
    if o < 3 {
        return Err(CensusError::OddTooSmall(o));
    }
    Ok((o - 1) / 2)
}

/// One row of the odd-multiples table: the series position and the odd
/// value found there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddSeriesEntry {
    position: u64,
    value: u64,
}

impl OddSeriesEntry {
    pub fn position(&self) -> u64 {
        self.position
    }

    pub fn value(&self) -> u64 {
        self.value
    }
}

/// Positions of the odd multiples of `o` within the series 3, 5, 7, ...
///
/// Stepping `o` positions from where `o` first occurs lands on the next odd
/// multiple: position `first_position(o) + o * m` holds the value
/// `o * (2m + 1)`. Returns the rows for m = 1 through `max_multiplier`.
pub fn odd_multiple_positions(
    o: u64,
    max_multiplier: u64,
) -> Result<Vec<(u64, OddSeriesEntry)>, CensusError> {
    if max_multiplier < 1 {
        return Err(CensusError::ZeroMultiplier);
    }
    let f = first_position(o)?;
    let mut rows = Vec::with_capacity(max_multiplier as usize);
    for m in 1..=max_multiplier {
        let position = o
            .checked_mul(m)
            .and_then(|step| f.checked_add(step))
            .ok_or(CensusError::Overflow)?;
        if position > (u64::MAX - 1) / 2 {
            return Err(CensusError::Overflow);
        }
        let value = odd_at(position);
        debug_assert!(value % o == 0 && value / o == 2 * m + 1);
        rows.push((m, OddSeriesEntry { position, value }));
    }
    Ok(rows)
}
