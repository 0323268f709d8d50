//! Integer utilities: a small prime sieve, deterministic Miller–Rabin,
//! Pollard rho, and full factorization of the integers that show up as
//! polynomial discriminants and curve norms.

use num_bigint::{BigInt, BigUint, ToBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::sync::OnceLock;

const SIEVE_LIMIT: usize = 1_000_000;

fn sieve() -> &'static Vec<u32> {
    static SIEVE: OnceLock<Vec<u32>> = OnceLock::new();
    SIEVE.get_or_init(|| {
        let mut is_comp = vec![false; SIEVE_LIMIT + 1];
        let mut primes = Vec::new();
        for n in 2..=SIEVE_LIMIT {
            if !is_comp[n] {
                primes.push(n as u32);
                let mut m = n * n;
                while m <= SIEVE_LIMIT {
                    is_comp[m] = true;
                    m += n;
                }
            }
        }
        primes
    })
}

/// Iterator over the primes below 10^6, in ascending order.
pub struct Primes {
    idx: usize,
}

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        let p = sieve().get(self.idx)?;
        self.idx += 1;
        Some(u64::from(*p))
    }
}

pub fn prime_iter() -> Primes {
    Primes { idx: 0 }
}

fn mulmod(a: u128, b: u128, m: u128) -> u128 {
    // m < 2^64 so the product fits in u128
    a * b % m
}

fn powmod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut acc: u128 = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

fn miller_rabin_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // deterministic witness set for n < 3.3 * 10^24, ample for u64
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a as u128, d as u128, n as u128);
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n as u128);
            if x == (n - 1) as u128 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn miller_rabin_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return miller_rabin_u64(small);
    }
    let one = BigUint::one();
    let two = &one + &one;
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0u32;
    while (&d % &two).is_zero() {
        d /= &two;
        s += 1;
    }
    // fixed witness set; inputs here are discriminant-sized, not adversarial
    for &a in &[2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        let mut composite = true;
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                composite = false;
                break;
            }
        }
        if composite {
            return false;
        }
    }
    true
}

/// Primality test for (the absolute value of) an arbitrary-precision integer.
pub fn is_prime_int(n: &BigInt) -> bool {
    miller_rabin_big(n.magnitude())
}

fn pollard_rho(n: &BigUint) -> BigUint {
    // Brent's cycle variant with a deterministic parameter schedule.
    let one = BigUint::one();
    let two = &one + &one;
    if (n % &two).is_zero() {
        return two;
    }
    let mut c = BigUint::from(1u32);
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = BigUint::one();
        while d == one {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if d != one && !d.is_zero() && &d != n {
            return d;
        }
        c += &one;
    }
}

fn factor_biguint(n: &BigUint, out: &mut BTreeMap<BigInt, u32>) {
    if n.is_one() {
        return;
    }
    if miller_rabin_big(n) {
        *out.entry(n.to_bigint().unwrap()).or_insert(0) += 1;
        return;
    }
    let d = pollard_rho(n);
    factor_biguint(&d, out);
    factor_biguint(&(n / &d), out);
}

/// Full factorization of |n| as a map prime -> exponent. n must be nonzero.
pub fn factor_int(n: &BigInt) -> BTreeMap<BigInt, u32> {
    assert!(!n.is_zero(), "factor_int(0)");
    let mut out = BTreeMap::new();
    let mut rem = n.abs().to_biguint().unwrap();
    for p in sieve() {
        let p = BigUint::from(*p);
        if &p * &p > rem {
            break;
        }
        while (&rem % &p).is_zero() {
            rem /= &p;
            *out.entry(p.to_bigint().unwrap()).or_insert(0) += 1;
        }
    }
    if !rem.is_one() {
        factor_biguint(&rem, &mut out);
    }
    out
}
