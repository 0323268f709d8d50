//! Rational reconstruction: recover n/d from its image mod M when
//! |n|, d <= floor(sqrt(M/2)).

use super::Rat;
use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Signed, Zero};

/// Returns the unique n/d with |n|, d <= floor(sqrt(M/2)), d*r = n mod M and
/// gcd(d, M) = 1, if such a representative exists.
pub fn rational_reconstruction(r: &BigInt, m: &BigInt) -> Option<Rat> {
    assert!(m > &BigInt::from(1), "modulus must exceed 1");
    let bound = (m / BigInt::from(2)).sqrt();
    let mut r0 = m.clone();
    let mut r1 = r.mod_floor(m);
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::from(1);
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = r1;
        r1 = r2;
        let t2 = &t0 - &q * &t1;
        t0 = t1;
        t1 = t2;
    }
    let (mut n, mut d) = (r1, t1);
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    if d.is_zero() || d > bound || n.abs() > bound {
        return None;
    }
    if n.gcd(&d) != BigInt::from(1) || d.gcd(m) != BigInt::from(1) {
        return None;
    }
    debug_assert!((&d * r - &n).mod_floor(m).is_zero());
    Some(Rat::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn reconstruct_examples() {
        // 3 * 3336 = 10008 = 1 mod 10007, so 3336 represents 1/3
        let got = rational_reconstruction(&BigInt::from(3336), &BigInt::from(10007)).unwrap();
        assert_eq!(got, Rat::new(BigInt::one(), BigInt::from(3)));

        // small integers come back unchanged
        let got = rational_reconstruction(&BigInt::from(5), &BigInt::from(10007)).unwrap();
        assert_eq!(got, Rat::from_integer(BigInt::from(5)));

        // 2 * 4999 = 9998 = -9 mod 10007, so 4999 represents -9/2
        let got = rational_reconstruction(&BigInt::from(4999), &BigInt::from(10007)).unwrap();
        assert_eq!(got, Rat::new(BigInt::from(-9), BigInt::from(2)));

        // 71 sits just past the bound floor(sqrt(10007/2)) = 70: no representative
        assert!(rational_reconstruction(&BigInt::from(71), &BigInt::from(10007)).is_none());
    }

    #[test]
    fn reconstruct_no_small_rep_exhaustive() {
        // cross-check the r = 71 case by brute force over all d <= 70
        let m = 10007i64;
        let bound = 70i64;
        for d in 1..=bound {
            let n_mod = (d * 71) % m;
            let n = if n_mod * 2 > m { n_mod - m } else { n_mod };
            assert!(
                n.abs() > bound || num_integer::gcd(n.abs(), d) != 1,
                "unexpected small representative {}/{}",
                n,
                d
            );
        }
    }

    #[test]
    fn roundtrip_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let m = BigInt::from(1_000_003i64) * BigInt::from(999_983i64);
        let bound = (&m / BigInt::from(2)).sqrt();
        for _ in 0..200 {
            let n = BigInt::from(rng.gen_range(-1_000_000i64..=1_000_000));
            let d = BigInt::from(rng.gen_range(1i64..=1_000_000));
            if n.gcd(&d) != BigInt::one() || n.abs() > bound || d > bound {
                continue;
            }
            if d.gcd(&m) != BigInt::one() {
                continue;
            }
            let dinv = d.extended_gcd(&m).x.mod_floor(&m);
            let r = (&n * &dinv).mod_floor(&m);
            let got = rational_reconstruction(&r, &m).unwrap();
            assert_eq!(got, Rat::new(n, d));
        }
    }
}
