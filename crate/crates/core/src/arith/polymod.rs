//! Dense univariate polynomials over a prime field F_p with word-sized p.
//! Backs prime splitting in number fields, Zassenhaus factorization, and the
//! modular stages of root finding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct PolyModP {
    p: u64,
    coeffs: Vec<u64>,
}

pub(crate) fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub(crate) fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powm(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, b, p);
        }
        b = mulm(b, b, p);
        e >>= 1;
    }
    acc
}

pub fn invm(a: u64, p: u64) -> u64 {
    // extended Euclid; a must be nonzero mod p
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        let r = r0 - q * r1;
        r0 = r1;
        r1 = r;
        let t = t0 - q * t1;
        t0 = t1;
        t1 = t;
    }
    debug_assert_eq!(r0, 1, "not invertible mod p");
    t0.rem_euclid(p as i128) as u64
}

pub(crate) fn reduce_bigint(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

impl PolyModP {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyModP { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        PolyModP { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        PolyModP::new(p, vec![1])
    }

    pub fn constant(p: u64, c: u64) -> Self {
        PolyModP::new(p, vec![c])
    }

    pub fn x(p: u64) -> Self {
        PolyModP::new(p, vec![0, 1])
    }

    pub fn from_bigint_coeffs(p: u64, cs: &[BigInt]) -> Self {
        PolyModP::new(p, cs.iter().map(|c| reduce_bigint(c, p)).collect())
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let out = (0..n).map(|i| addm(self.coeff(i), rhs.coeff(i), self.p)).collect();
        PolyModP::new(self.p, out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let out = (0..n).map(|i| subm(self.coeff(i), rhs.coeff(i), self.p)).collect();
        PolyModP::new(self.p, out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        if self.is_zero() || rhs.is_zero() {
            return PolyModP::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = addm(out[i + j], mulm(a, b, self.p), self.p);
            }
        }
        PolyModP::new(self.p, out)
    }

    pub fn scale(&self, c: u64) -> Self {
        PolyModP::new(self.p, self.coeffs.iter().map(|&a| mulm(a, c, self.p)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(invm(self.lc(), self.p))
    }

    pub fn divrem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero());
        let db = rhs.deg();
        if self.is_zero() || self.deg() < db {
            return (PolyModP::zero(self.p), self.clone());
        }
        let p = self.p;
        let linv = invm(rhs.lc(), p);
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0u64; rem.len() - db];
        for i in (db..rem.len()).rev() {
            if rem[i] == 0 {
                continue;
            }
            let q = mulm(rem[i], linv, p);
            quo[i - db] = q;
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                rem[i - db + j] = subm(rem[i - db + j], mulm(q, b, p), p);
            }
        }
        (PolyModP::new(p, quo), PolyModP::new(p, rem))
    }

    pub fn rem(&self, rhs: &Self) -> Self {
        self.divrem(rhs).1
    }

    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns (g, s, t) with s*self + t*rhs = g, g monic.
    pub fn xgcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (PolyModP::one(p), PolyModP::zero(p));
        let (mut t0, mut t1) = (PolyModP::zero(p), PolyModP::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = r1;
            r1 = r;
            let ns = s0.sub(&q.mul(&s1));
            s0 = s1;
            s1 = ns;
            let nt = t0.sub(&q.mul(&t1));
            t0 = t1;
            t1 = nt;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let c = invm(r0.lc(), p);
        (r0.scale(c), s0.scale(c), t0.scale(c))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return PolyModP::zero(self.p);
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulm(c, (i as u64) % self.p, self.p))
            .collect();
        PolyModP::new(self.p, out)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = addm(mulm(acc, x, self.p), c, self.p);
        }
        acc
    }

    /// self^e mod m, by square and multiply.
    pub fn powmod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = PolyModP::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// x^(p^k) mod m, repeated Frobenius powering.
    pub fn frobenius_power(m: &Self, k: usize) -> Self {
        let mut acc = PolyModP::x(m.p);
        for _ in 0..k {
            acc = acc.powmod(m.p, m);
        }
        acc.rem(m)
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.deg() == 0 {
            return true;
        }
        let d = self.derivative();
        if d.is_zero() {
            return false;
        }
        self.gcd(&d).deg() == 0
    }

    /// All roots in F_p by direct evaluation; fine for word-sized p.
    pub fn roots(&self) -> Vec<u64> {
        let mut out = Vec::new();
        if self.is_zero() {
            return out;
        }
        for x in 0..self.p {
            if self.eval(x) == 0 {
                out.push(x);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let p = 7;
        let f = PolyModP::new(p, vec![1, 0, 1]); // x^2 + 1
        let g = PolyModP::new(p, vec![3, 1]); // x + 3
        let (q, r) = f.divrem(&g);
        assert_eq!(g.mul(&q).add(&r), f);
        assert_eq!(f.eval(2), 5);
    }

    #[test]
    fn xgcd_identity() {
        let p = 10007;
        let f = PolyModP::new(p, vec![1, 2, 3, 1]);
        let g = PolyModP::new(p, vec![5, 0, 1]);
        let (d, s, t) = f.xgcd(&g);
        assert_eq!(s.mul(&f).add(&t.mul(&g)), d);
        assert_eq!(d.deg(), 0);
    }

    #[test]
    fn frobenius() {
        let p = 5;
        let m = PolyModP::new(p, vec![2, 0, 1]); // x^2 + 2 irreducible mod 5
        let xp = PolyModP::frobenius_power(&m, 2); // x^(25) = x mod m
        assert_eq!(xp, PolyModP::x(p));
    }
}
