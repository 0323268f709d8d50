//! Finite fields F_{p^k}, k <= 6, as residue fields of prime splittings;
//! square detection and square roots drive curve point enumeration.

use crate::arith::{is_irreducible_mod_p, PolyModP};
use crate::field::Field;
use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Field-size cap: brute-force curve enumeration stays O(q) with a cheap
/// constant. Sextic residue fields at p = 7 give q = 117 649, within cap.
pub const FQ_SIZE_CAP: u64 = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FqError {
    #[error("field size {q} exceeds the enumeration cap {cap}")]
    CapExceeded { q: u64, cap: u64 },
    #[error("modulus of degree {0} is not irreducible mod {1}")]
    ReducibleModulus(usize, u64),
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug)]
struct FqInner {
    p: u64,
    k: usize,
    modulus: PolyModP,
    q: u64,
}

/// The field F_{p^k} = F_p[t]/(g), p odd prime, g irreducible of degree k.
#[derive(Clone, Debug)]
pub struct FqField(Arc<FqInner>);

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.modulus == other.0.modulus
    }
}

/// Element of F_{p^k}: k residues, ascending powers of t, reduced mod (p, g).
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct FqElem {
    coeffs: Vec<u64>,
}

impl FqField {
    pub fn new(p: u64, modulus: PolyModP) -> Result<Self, FqError> {
        assert_eq!(modulus.p(), p);
        assert!(p % 2 == 1 && p > 2, "p must be an odd prime");
        let k = modulus.deg();
        let mut q: u64 = 1;
        for _ in 0..k {
            q = q.saturating_mul(p);
        }
        if q > FQ_SIZE_CAP {
            return Err(FqError::CapExceeded { q, cap: FQ_SIZE_CAP });
        }
        if k > 1 && !is_irreducible_mod_p(&modulus) {
            return Err(FqError::ReducibleModulus(k, p));
        }
        Ok(FqField(Arc::new(FqInner { p, k, modulus: modulus.monic(), q })))
    }

    /// Prime field F_p.
    pub fn prime_field(p: u64) -> Result<Self, FqError> {
        FqField::new(p, PolyModP::x(p))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn ext_degree(&self) -> usize {
        self.0.k
    }

    pub fn size(&self) -> u64 {
        self.0.q
    }

    pub fn modulus(&self) -> &PolyModP {
        &self.0.modulus
    }

    pub fn elem(&self, coeffs: Vec<u64>) -> FqElem {
        let poly = PolyModP::new(self.0.p, coeffs).rem(&self.0.modulus);
        self.from_poly(poly)
    }

    fn from_poly(&self, poly: PolyModP) -> FqElem {
        let mut coeffs = poly.coeffs().to_vec();
        coeffs.resize(self.0.k, 0);
        FqElem { coeffs }
    }

    fn as_poly(&self, x: &FqElem) -> PolyModP {
        PolyModP::new(self.0.p, x.coeffs.clone())
    }

    /// The residue class generator t (image of the number-field generator).
    pub fn gen(&self) -> FqElem {
        self.elem(vec![0, 1])
    }

    /// Element with index i in the lexicographic enumeration by base-p digits.
    pub fn from_index(&self, mut i: u64) -> FqElem {
        let mut coeffs = vec![0u64; self.0.k];
        for c in coeffs.iter_mut() {
            *c = i % self.0.p;
            i /= self.0.p;
        }
        FqElem { coeffs }
    }

    pub fn pow_big(&self, x: &FqElem, e: &BigUint) -> FqElem {
        let mut acc = self.one();
        let mut base = x.clone();
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
        }
        acc
    }

    pub fn is_square(&self, x: &FqElem) -> bool {
        if self.is_zero(x) {
            return true;
        }
        let e = (BigUint::from(self.0.q) - BigUint::one()) / BigUint::from(2u32);
        self.is_one(&self.pow_big(x, &e))
    }

    /// Tonelli-Shanks over F_q with a seeded deterministic non-residue
    /// search; returns None when x is not a square.
    pub fn sqrt(&self, x: &FqElem) -> Option<FqElem> {
        if self.is_zero(x) {
            return Some(self.zero());
        }
        let q = self.0.q;
        if !self.is_square(x) {
            return None;
        }
        if q % 4 == 3 {
            let e = BigUint::from((q + 1) / 4);
            let r = self.pow_big(x, &e);
            debug_assert_eq!(self.square(&r), *x);
            return Some(r);
        }
        // q - 1 = 2^s * t with t odd
        let mut t = q - 1;
        let mut s = 0u32;
        while t % 2 == 0 {
            t /= 2;
            s += 1;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(crate::DEFAULT_SEED ^ q);
        let z = loop {
            let cand = self.from_index(rng.gen_range(1..q));
            if !self.is_zero(&cand) && !self.is_square(&cand) {
                break cand;
            }
        };
        let mut m = s;
        let mut c = self.pow_big(&z, &BigUint::from(t));
        let mut u = self.pow_big(x, &BigUint::from(t));
        let mut r = self.pow_big(x, &BigUint::from((t + 1) / 2));
        loop {
            if self.is_one(&u) {
                debug_assert_eq!(self.square(&r), *x);
                return Some(r);
            }
            let mut i = 0u32;
            let mut probe = u.clone();
            while !self.is_one(&probe) {
                probe = self.square(&probe);
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = self.square(&b);
            }
            m = i;
            c = self.square(&b);
            u = self.mul(&u, &c);
            r = self.mul(&r, &b);
        }
    }
}

impl Field for FqField {
    type Elem = FqElem;

    fn zero(&self) -> FqElem {
        FqElem { coeffs: vec![0; self.0.k] }
    }

    fn one(&self) -> FqElem {
        self.from_index(1)
    }

    fn from_i64(&self, n: i64) -> FqElem {
        let p = self.0.p as i64;
        let r = n.rem_euclid(p) as u64;
        self.from_index(r)
    }

    fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let p = self.0.p;
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| {
                let s = x + y;
                if s >= p {
                    s - p
                } else {
                    s
                }
            })
            .collect();
        FqElem { coeffs }
    }

    fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let p = self.0.p;
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| if x >= y { x - y } else { x + p - y })
            .collect();
        FqElem { coeffs }
    }

    fn neg(&self, a: &FqElem) -> FqElem {
        self.sub(&self.zero(), a)
    }

    fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let prod = self.as_poly(a).mul(&self.as_poly(b)).rem(&self.0.modulus);
        self.from_poly(prod)
    }

    fn inv(&self, a: &FqElem) -> Option<FqElem> {
        if self.is_zero(a) {
            return None;
        }
        let (g, s, _) = self.as_poly(a).xgcd(&self.0.modulus);
        debug_assert_eq!(g.deg(), 0);
        Some(self.from_poly(s.rem(&self.0.modulus)))
    }

    fn is_zero(&self, a: &FqElem) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }
}

impl FqElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FqField {
        // F_9 = F_3[t]/(t^2+1)
        FqField::new(3, PolyModP::new(3, vec![1, 0, 1])).unwrap()
    }

    #[test]
    fn field_axioms_small() {
        for field in [f9(), FqField::prime_field(5).unwrap()] {
            let q = field.size();
            for i in 1..q {
                let x = field.from_index(i);
                let xi = field.inv(&x).unwrap();
                assert!(field.is_one(&field.mul(&x, &xi)));
                assert!(field.is_one(&field.pow(&x, q - 1)));
            }
        }
    }

    #[test]
    fn t_squared_is_minus_one_in_f9() {
        let f = f9();
        let t = f.gen();
        assert_eq!(f.mul(&t, &t), f.from_i64(-1));
        assert_eq!(f.from_i64(-1), f.from_index(2));
    }

    #[test]
    fn sqrt_examples() {
        let f5 = FqField::prime_field(5).unwrap();
        assert_eq!(f5.sqrt(&f5.zero()), Some(f5.zero()));
        let r = f5.sqrt(&f5.from_i64(4)).unwrap();
        assert!(r == f5.from_i64(2) || r == f5.from_i64(-2));
        // residues mod 5 are {0, 1, 4}
        assert!(f5.sqrt(&f5.from_i64(2)).is_none());
    }

    #[test]
    fn sqrt_of_square_roundtrip() {
        for field in [f9(), FqField::prime_field(13).unwrap(), FqField::prime_field(17).unwrap()] {
            for i in 0..field.size() {
                let x = field.from_index(i);
                let sq = field.square(&x);
                let r = field.sqrt(&sq).expect("square has a root");
                assert_eq!(field.square(&r), sq);
            }
        }
    }

    #[test]
    fn square_count() {
        // exactly (q-1)/2 nonzero squares, exhaustively for q <= 121
        for field in [
            FqField::prime_field(7).unwrap(),
            f9(),
            FqField::new(5, PolyModP::new(5, vec![2, 0, 1])).unwrap(), // F_25
            FqField::new(11, PolyModP::new(11, vec![9, 0, 1])).unwrap(), // F_121
        ] {
            let q = field.size();
            let squares: std::collections::HashSet<FqElem> =
                (1..q).map(|i| field.square(&field.from_index(i))).collect();
            assert_eq!(squares.len() as u64, (q - 1) / 2, "q = {}", q);
            for s in &squares {
                assert!(field.is_square(s));
            }
        }
    }

    #[test]
    fn cap_enforced() {
        let p = 101;
        let g = PolyModP::new(p, vec![2, 0, 0, 1]); // q = 101^3 > cap
        match FqField::new(p, g) {
            Err(FqError::CapExceeded { .. }) => {}
            other => panic!("expected cap error, got {:?}", other),
        }
    }
}
