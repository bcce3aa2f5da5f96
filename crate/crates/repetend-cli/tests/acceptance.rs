//! Acceptance gate: one check per shipped guarantee. Each prints a PASS or
//! FAIL line; the process exits nonzero if anything fails. Wall-clock
//! budgets are pinned below next to the work they bound.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use repetend::census;
use repetend::cipher::{self, CipherText};
use repetend::expansion::{self, make_rational};
use repetend::keystream::KeyDescriptor;
use repetend::numtheory;

const DIGIT_BUDGET: usize = 1_000_000;

const FAST_CALL: Duration = Duration::from_millis(10);
const FIVE_SECONDS: Duration = Duration::from_secs(5);
const TEN_SECONDS: Duration = Duration::from_secs(10);
const THIRTY_SECONDS: Duration = Duration::from_secs(30);

fn main() {
    type Criterion = (&'static str, fn() -> Result<(), String>);
    let criteria: [Criterion; 9] = [
        ("worked expansion examples, under 10 ms each", expansion_fidelity),
        ("census to 10 reports 14 fractions as 2+6+6", census_reproduction),
        ("odd-multiples table for 15 reproduces exactly", odd_series_table),
        ("Fermat and period-divisor checks, primes to 10^4", fermat_suite),
        ("digit-cycle and order routes agree; round trips hold", oracle_equivalence),
        ("window coprime counts equal the totient to 999", window_density),
        ("keygen covers a 500-letter message, digit-verified", key_generation_contract),
        ("randomized cipher round trips plus the fixed vector", cipher_suite),
        ("repeating fractions and coprime pairs outnumber primes", dominance_counts),
    ];

    let mut failures = 0;
    for (index, (what, check)) in criteria.iter().enumerate() {
        let verdict = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| Err(panic_text(p)));
        match verdict {
            Ok(()) => println!("PASS: criterion {} - {what}", index + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL: criterion {} - {what}: {why}", index + 1);
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}

fn panic_text(panic: Box<dyn std::any::Any + Send>) -> String {
    panic
        .downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| panic.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| String::from("panicked"))
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

fn within(elapsed: Duration, budget: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed <= budget, || {
        format!("{what} took {elapsed:?}, budget {budget:?}")
    })
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_repetend"))
        .args(args)
        .output()
        .map_err(|e| format!("failed to launch binary: {e}"))?;
    if !out.status.success() {
        return Err(format!(
            "{args:?} exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    String::from_utf8(out.stdout).map_err(|e| format!("binary wrote non-text output: {e}"))
}

fn primes_to(limit: usize) -> Vec<u64> {
    let mut flags = vec![true; limit + 1];
    flags[0] = false;
    if limit >= 1 {
        flags[1] = false;
    }
    let mut p = 2;
    while p * p <= limit {
        if flags[p] {
            let mut q = p * p;
            while q <= limit {
                flags[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    flags
        .iter()
        .enumerate()
        .filter_map(|(n, &f)| f.then_some(n as u64))
        .collect()
}

fn expansion_fidelity() -> Result<(), String> {
    let (e, t) = timed(|| expansion::expand(&make_rational(1, 7).unwrap(), DIGIT_BUDGET).unwrap());
    ensure(e.repetend() == "142857", || {
        format!("repetend of 1/7 is {:?}", e.repetend())
    })?;
    within(t, FAST_CALL, "expanding 1/7")?;

    let (e, t) = timed(|| expansion::expand(&make_rational(4, 9).unwrap(), DIGIT_BUDGET).unwrap());
    ensure(e.repetend() == "4", || {
        format!("repetend of 4/9 is {:?}", e.repetend())
    })?;
    within(t, FAST_CALL, "expanding 4/9")?;

    let got = cli(&["expand", "1/7"])?;
    ensure(got == "0.(142857)\n", || format!("cli expand 1/7 printed {got:?}"))?;
    let got = cli(&["expand", "4/9"])?;
    ensure(got == "0.(4)\n", || format!("cli expand 4/9 printed {got:?}"))?;
    Ok(())
}

fn census_reproduction() -> Result<(), String> {
    let (report, t) = timed(|| census::repetend_census(10).unwrap());
    ensure(report.fraction_count() == 14, || {
        format!("fraction count is {}", report.fraction_count())
    })?;
    ensure(
        report.per_denominator_counts() == [(3, 2), (7, 6), (9, 6)],
        || format!("rows are {:?}", report.per_denominator_counts()),
    )?;
    within(t, FAST_CALL, "census to 10")?;

    let got = cli(&["census", "--max", "10"])?;
    ensure(got == "3,2\n7,6\n9,6\nTOTAL,14\n", || {
        format!("cli census printed {got:?}")
    })?;
    Ok(())
}

fn odd_series_table() -> Result<(), String> {
    let (rows, t) = timed(|| census::odd_multiple_positions(15, 4).unwrap());
    let positions: Vec<u64> = rows.iter().map(|(_, e)| e.position()).collect();
    let values: Vec<u64> = rows.iter().map(|(_, e)| e.value()).collect();
    ensure(positions == [22, 37, 52, 67], || format!("positions {positions:?}"))?;
    ensure(values == [45, 75, 105, 135], || format!("values {values:?}"))?;
    within(t, FAST_CALL, "odd-multiples table for 15")?;

    let got = cli(&["odd-analysis", "--odd", "15", "--multipliers", "4"])?;
    let want = "odd=15\nfirst_position=7\nwindow_coprime_count=8\nwindow_upper_bound=14\n\
                window_meets_upper_bound=false\nm,position,value\n1,22,45\n2,37,75\n3,52,105\n4,67,135\n";
    ensure(got == want, || format!("cli odd-analysis printed {got:?}"))?;
    Ok(())
}

fn fermat_suite() -> Result<(), String> {
    let (bad, t) = timed(|| {
        let mut bad = Vec::new();
        for p in primes_to(10_000) {
            if p == 2 || p == 5 {
                continue;
            }
            if numtheory::mod_pow(10, p - 1, p).unwrap() != 1 {
                bad.push(format!("10^(p-1) != 1 mod {p}"));
            }
            let period = expansion::period_length(p).unwrap();
            if (p - 1) % period != 0 {
                bad.push(format!("period {period} of {p} does not divide {}", p - 1));
            }
        }
        bad
    });
    ensure(bad.is_empty(), || format!("{} failures, first: {}", bad.len(), bad[0]))?;
    within(t, FIVE_SECONDS, "Fermat suite")
}

fn oracle_equivalence() -> Result<(), String> {
    let (result, t) = timed(|| -> Result<(), String> {
        for b in 2..=2_000u64 {
            let e = expansion::expand(&make_rational(1, b).unwrap(), DIGIT_BUDGET).unwrap();
            let order_route = expansion::period_length(b).unwrap();
            if e.repetend().len() as u64 != order_route {
                return Err(format!(
                    "1/{b}: digit cycle {} vs order arithmetic {order_route}",
                    e.repetend().len()
                ));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0005);
        let mut sampled = 0u32;
        while sampled < 10_000 {
            let b = rng.gen_range(2..=2_000u64);
            let a = rng.gen_range(1..b);
            if numtheory::gcd(a, b).unwrap() != 1 {
                continue;
            }
            let r = make_rational(a, b).unwrap();
            let e = expansion::expand(&r, DIGIT_BUDGET).unwrap();
            if expansion::reconstruct(&e) != Ok(r) {
                return Err(format!("{a}/{b} does not round trip"));
            }
            sampled += 1;
        }
        Ok(())
    });
    result?;
    within(t, THIRTY_SECONDS, "oracle equivalence sweep")
}

fn window_density() -> Result<(), String> {
    let (result, t) = timed(|| -> Result<(), String> {
        for n in (3..=999u64).step_by(2) {
            let window = census::coprime_count_in_odd_window(n).unwrap();
            let phi = numtheory::euler_phi(n).unwrap();
            if window != phi {
                return Err(format!("window count {window} != phi {phi} at {n}"));
            }
            if numtheory::is_prime(n) && window != n - 1 {
                return Err(format!("prime {n} window count {window} != {}", n - 1));
            }
        }
        Ok(())
    });
    result?;
    within(t, TEN_SECONDS, "window density sweep")
}

fn key_generation_contract() -> Result<(), String> {
    let (result, t) = timed(|| -> Result<(), String> {
        let text = cli(&["keygen", "--min-period", "500"])?;
        let key = repetend_cli::keyfile::parse(&text).map_err(|e| format!("key file: {e}"))?;

        // period verified by running the division out, not by order math
        let unit = make_rational(1, key.denominator()).unwrap();
        let e = expansion::expand(&unit, DIGIT_BUDGET).unwrap();
        ensure(e.pre_period().is_empty(), || {
            format!("1/{} has a pre-period", key.denominator())
        })?;
        ensure(e.repetend().len() >= 500, || {
            format!("digit cycle of 1/{} is {} long", key.denominator(), e.repetend().len())
        })?;

        let message: String = (0..500u32)
            .map(|i| char::from(b'A' + ((i * 7 + 3) % 26) as u8))
            .collect();
        let ct = cipher::encrypt(&message, &key).map_err(|e| e.to_string())?;
        ensure(cipher::decrypt(&ct, &key) == message, || {
            String::from("500-letter round trip failed")
        })
    });
    result?;
    within(t, FIVE_SECONDS, "key generation contract")
}

fn cipher_suite() -> Result<(), String> {
    let (result, t) = timed(|| -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0008);
        for round in 0..1_000u32 {
            let mut d = 2 * rng.gen_range(1..=1_500u64) + 1;
            if d % 5 == 0 {
                d += 2;
            }
            let mut n = rng.gen_range(1..d);
            while numtheory::gcd(n, d).unwrap() != 1 {
                n += 1;
                if n == d {
                    n = 1;
                }
            }
            let key = KeyDescriptor::new(n, d, rng.gen_range(0..1_000)).unwrap();
            let len = rng.gen_range(0..=120usize);
            let message: String = (0..len)
                .map(|_| char::from(rng.gen_range(0x20u8..=0x7E)))
                .collect();
            let ct = cipher::encrypt(&message, &key).map_err(|e| e.to_string())?;
            if cipher::decrypt(&ct, &key) != message.to_ascii_uppercase() {
                return Err(format!("round {round}: {message:?} failed under {n}/{d}"));
            }
        }

        let key = KeyDescriptor::new(1, 7, 0).unwrap();
        let ct = cipher::encrypt("ATTACK", &key).map_err(|e| e.to_string())?;
        ensure(ct.as_str() == "BXVIHR", || format!("vector gave {:?}", ct.as_str()))?;
        ensure(
            cipher::decrypt(&CipherText::new("BXVIHR").unwrap(), &key) == "ATTACK",
            || String::from("vector does not decrypt"),
        )
    });
    result?;
    within(t, FIVE_SECONDS, "cipher suite")
}

fn dominance_counts() -> Result<(), String> {
    let (result, t) = timed(|| -> Result<(), String> {
        for n in [20u64, 50, 100, 200] {
            let primes = primes_to(n as usize).len() as u64;
            let fractions = census::repetend_census(n).unwrap().fraction_count();
            let pairs = census::count_coprime_pairs(n);
            ensure(fractions > primes, || {
                format!("at {n}: {fractions} fractions vs {primes} primes")
            })?;
            ensure(pairs > primes, || {
                format!("at {n}: {pairs} pairs vs {primes} primes")
            })?;
        }
        Ok(())
    });
    result?;
    within(t, FIVE_SECONDS, "dominance counts")
}
