//! Integer number-theory primitives: gcd, modular exponentiation, primality,
//! factorization, Euler's totient, multiplicative order, and denominator
//! search by minimum order.
//!
//! All functions are pure and deterministic. Inputs are `u64`; intermediates
//! widen to `u128` where products could overflow.

use alloc::vec::Vec;
use core::fmt;

/// Iteration budget for the rho stage of [`factorize`].
///
/// Generous for 64-bit inputs; exceeding it returns
/// [`NumTheoryError::FactorBudgetExhausted`] rather than a wrong answer.
pub const DEFAULT_FACTOR_BUDGET: u64 = 1 << 22;

/// Candidate limit for [`find_denominator_with_min_order`].
pub const DEFAULT_SEARCH_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NumTheoryError {
    /// gcd(0, 0) is undefined.
    GcdOfZeroes,
    /// A modulus below 2 was supplied.
    BadModulus(u64),
    /// Factorization is defined for n >= 2.
    FactorizeOfSmall(u64),
    /// Euler's totient is defined for n >= 1.
    PhiOfZero,
    /// The rho stage gave up before the budget found a splitter.
    FactorBudgetExhausted { n: u64, cofactor: u64 },
    /// Multiplicative order requires gcd(a, n) = 1.
    NotCoprime { a: u64, n: u64 },
    /// Denominator search scanned `cap` candidates without a hit.
    SearchExhausted { min_order: u64, cap: u64 },
}

impl fmt::Display for NumTheoryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumTheoryError::GcdOfZeroes => write!(f, "gcd(0, 0) is undefined"),
            NumTheoryError::BadModulus(m) => write!(f, "modulus must be at least 2, got {m}"),
            NumTheoryError::FactorizeOfSmall(n) => {
                write!(f, "cannot factorize {n}: input must be at least 2")
            }
            NumTheoryError::PhiOfZero => write!(f, "euler_phi(0) is undefined"),
            NumTheoryError::FactorBudgetExhausted { n, cofactor } => write!(
                f,
                "factorization of {n} exhausted its budget on cofactor {cofactor}"
            ),
            NumTheoryError::NotCoprime { a, n } => {
                write!(f, "{a} and {n} are not coprime, so no multiplicative order exists")
            }
            NumTheoryError::SearchExhausted { min_order, cap } => write!(
                f,
                "no denominator with period >= {min_order} found within {cap} candidates"
            ),
        }
    }
}

impl core::error::Error for NumTheoryError {}

/// A complete prime factorization: `(prime, exponent)` pairs with the primes
/// strictly increasing and every exponent at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The `(prime, exponent)` pairs in increasing prime order.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// The distinct primes in increasing order.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Recomputes the factored integer as the product of prime powers.
    pub fn value(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Greatest common divisor by Euclid's algorithm.
///
/// `gcd(a, b) == 1` exactly when `a` and `b` are coprime. The two arguments
/// may not both be zero.
///
/// ```
/// # use repetend::numtheory::gcd;
/// assert_eq!(gcd(4, 9).unwrap(), 1); // coprime without being prime
/// assert_eq!(gcd(3, 9).unwrap(), 3);
/// ```
pub fn gcd(a: u64, b: u64) -> Result<u64, NumTheoryError> {
    if a == 0 && b == 0 {
        return Err(NumTheoryError::GcdOfZeroes);
    }
    Ok(gcd_u64(a, b))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn mod_pow_u64(base: u64, mut exponent: u64, modulus: u64) -> u64 {
    debug_assert!(modulus >= 2);
    let mut result = 1u64;
    let mut base = base % modulus;
    while exponent > 0 {
        if exponent & 1 == 1 {
            result = mul_mod(result, base, modulus);
        }
        base = mul_mod(base, base, modulus);
        exponent >>= 1;
    }
    result
}

/// `base.pow(exponent) mod modulus` by binary exponentiation with widening
/// intermediates, exact for all `u64` operands.
pub fn mod_pow(base: u64, exponent: u64, modulus: u64) -> Result<u64, NumTheoryError> {
    if modulus < 2 {
        return Err(NumTheoryError::BadModulus(modulus));
    }
    Ok(mod_pow_u64(base, exponent, modulus))
}

const MILLER_RABIN_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality test for the full `u64` range.
///
/// Miller-Rabin with the fixed witness set 2..37, which is known to be exact
/// for every n below 3.3e24. Follows the standard convention: 1 is not prime,
/// 2 is.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in MILLER_RABIN_WITNESSES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in MILLER_RABIN_WITNESSES {
        let mut x = mod_pow_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// One Pollard rho round with polynomial x^2 + c, Floyd cycle detection.
enum RhoOutcome {
    Factor(u64),
    Retry,
    OutOfBudget,
}

fn pollard_rho(n: u64, c: u64, budget: &mut u64) -> RhoOutcome {
    let step = |x: u64| ((x as u128 * x as u128 + c as u128) % n as u128) as u64;
    let mut x = 2u64;
    let mut y = 2u64;
    loop {
        if *budget == 0 {
            return RhoOutcome::OutOfBudget;
        }
        *budget -= 1;
        x = step(x);
        y = step(step(y));
        if x == y {
            return RhoOutcome::Retry;
        }
        let g = gcd_u64(x.abs_diff(y), n);
        if g > 1 {
            return if g == n { RhoOutcome::Retry } else { RhoOutcome::Factor(g) };
        }
    }
}

const TRIAL_DIVISION_LIMIT: u64 = 1024;

/// Complete prime factorization with an explicit work budget.
///
/// Trial division removes every prime factor below 1024; any remaining
/// composite cofactor is split by Pollard rho seeded deterministically
/// (c = 1, 2, 3, ...), so identical inputs always take identical paths.
/// `budget` caps the total rho iterations; running out yields an error,
/// never a partial or wrong factorization.
pub fn factorize_with_budget(n: u64, budget: u64) -> Result<Factorization, NumTheoryError> {
    if n < 2 {
        return Err(NumTheoryError::FactorizeOfSmall(n));
    }
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut m = n;

    fn strip(m: &mut u64, d: u64) -> u32 {
        let mut e = 0u32;
        while *m % d == 0 {
            *m /= d;
            e += 1;
        }
        e
    }
    for d in [2u64, 3, 5] {
        let e = strip(&mut m, d);
        if e > 0 {
            factors.push((d, e));
        }
    }
    let wheel = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut d = 7u64;
    let mut w = 0usize;
    while d <= TRIAL_DIVISION_LIMIT && d * d <= m {
        let e = strip(&mut m, d);
        if e > 0 {
            factors.push((d, e));
        }
        d += wheel[w];
        w = (w + 1) % wheel.len();
    }
    if m > 1 && d * d > m {
        // whatever survives trial division up to sqrt(m) is prime
        factors.push((m, 1));
        m = 1;
    }

    // Split remaining composite cofactors by rho.
    let mut budget = budget;
    let mut pending: Vec<u64> = Vec::new();
    if m > 1 {
        pending.push(m);
    }
    let mut found: Vec<u64> = Vec::new();
    while let Some(cof) = pending.pop() {
        if is_prime(cof) {
            found.push(cof);
            continue;
        }
        let mut c = 1u64;
        let split = loop {
            match pollard_rho(cof, c, &mut budget) {
                RhoOutcome::Factor(g) => break g,
                RhoOutcome::Retry => c += 1,
                RhoOutcome::OutOfBudget => {
                    return Err(NumTheoryError::FactorBudgetExhausted { n, cofactor: cof })
                }
            }
        };
        pending.push(split);
        pending.push(cof / split);
    }
    found.sort_unstable();
    let mut i = 0;
    while i < found.len() {
        let p = found[i];
        let mut e = 0u32;
        while i < found.len() && found[i] == p {
            e += 1;
            i += 1;
        }
        factors.push((p, e));
    }

    factors.sort_unstable_by_key(|&(p, _)| p);
    debug_assert_eq!(
        factors.iter().fold(1u64, |acc, &(p, e)| acc * p.pow(e)),
        n
    );
    Ok(Factorization { factors })
}

/// [`factorize_with_budget`] with [`DEFAULT_FACTOR_BUDGET`].
pub fn factorize(n: u64) -> Result<Factorization, NumTheoryError> {
    factorize_with_budget(n, DEFAULT_FACTOR_BUDGET)
}

/// Euler's totient: how many integers in `[1, n]` are coprime to `n`.
///
/// Computed from the factorization by the product formula.
pub fn euler_phi(n: u64) -> Result<u64, NumTheoryError> {
    if n == 0 {
        return Err(NumTheoryError::PhiOfZero);
    }
    if n == 1 {
        return Ok(1);
    }
    let mut phi = 1u64;
    for &(p, e) in factorize(n)?.factors() {
        phi *= p.pow(e - 1) * (p - 1);
    }
    Ok(phi)
}

/// Least k >= 1 with `a^k = 1 (mod n)`; requires `gcd(a, n) = 1`.
///
/// Starts from phi(n) and strips prime factors while the power stays 1,
/// which keeps large orders cheap (no linear scan).
pub fn multiplicative_order(a: u64, n: u64) -> Result<u64, NumTheoryError> {
    if n < 2 {
        return Err(NumTheoryError::BadModulus(n));
    }
    if gcd_u64(a, n) != 1 {
        return Err(NumTheoryError::NotCoprime { a, n });
    }
    let phi = euler_phi(n)?;
    if phi == 1 {
        return Ok(1);
    }
    let a = a % n;
    let mut order = phi;
    for &(p, _) in factorize(phi)?.factors() {
        while order % p == 0 && mod_pow_u64(a, order / p, n) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// True iff `p` is a prime whose decimal repetend reaches the maximal
/// length p - 1, i.e. 10 generates the full multiplicative group mod p.
pub fn is_full_reptend_prime(p: u64) -> bool {
    if !is_prime(p) || p == 2 || p == 5 {
        return false;
    }
    // gcd(10, p) = 1 here, and p - 1 < 2^64 keeps the order computation in
    // budget, so the only failure mode left is a genuine library bug.
    multiplicative_order(10, p).expect("order of 10 must exist for a prime not dividing 10")
        == p - 1
}

/// Which denominators [`find_denominator_with_min_order`] may return.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchPolicy {
    /// Primes only (skipping 2 and 5).
    PrimesOnly,
    /// Any integer coprime to 10.
    AnyCoprimeToTen,
}

/// Smallest denominator d > 2 coprime to 10 whose repetend period
/// (the order of 10 mod d) is at least `min_order`, scanning ascending
/// under the policy and giving up after `cap` candidates.
pub fn find_denominator_with_min_order_capped(
    min_order: u64,
    policy: SearchPolicy,
    cap: u64,
) -> Result<u64, NumTheoryError> {
    let mut tested = 0u64;
    let mut d = 3u64;
    while tested < cap {
        // d is always odd; 5 is the one odd value not coprime to 10
        let qualifies = d != 5
            && match policy {
                SearchPolicy::PrimesOnly => is_prime(d),
                SearchPolicy::AnyCoprimeToTen => d % 5 != 0,
            };
        if qualifies {
            tested += 1;
            // order divides phi, so phi < min_order rules d out for free
            let phi = euler_phi(d)?;
            if phi >= min_order && multiplicative_order(10, d)? >= min_order {
                return Ok(d);
            }
        }
        d += 2;
    }
    Err(NumTheoryError::SearchExhausted { min_order, cap })
}

/// [`find_denominator_with_min_order_capped`] with [`DEFAULT_SEARCH_CAP`].
pub fn find_denominator_with_min_order(
    min_order: u64,
    policy: SearchPolicy,
) -> Result<u64, NumTheoryError> {
    find_denominator_with_min_order_capped(min_order, policy, DEFAULT_SEARCH_CAP)
}
