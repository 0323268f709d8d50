//! Field abstraction shared by the elliptic-curve code: number fields and
//! finite fields both implement [`Field`], so one group-law implementation
//! serves curves over Q, over Q(a), and over F_{p^k}.

use std::fmt::Debug;

pub trait Field: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// None when `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// Dense univariate polynomial over an abstract field, ascending
/// coefficients, no trailing zero. Only what division polynomials and the
/// root finder need.
#[derive(Clone, Debug, PartialEq)]
pub struct FPoly<F: Field> {
    pub coeffs: Vec<F::Elem>,
}

impl<F: Field> FPoly<F> {
    pub fn new(k: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().map_or(false, |c| k.is_zero(c)) {
            coeffs.pop();
        }
        FPoly { coeffs }
    }

    pub fn zero() -> Self {
        FPoly { coeffs: vec![] }
    }

    pub fn constant(k: &F, c: F::Elem) -> Self {
        FPoly::new(k, vec![c])
    }

    pub fn x(k: &F) -> Self {
        FPoly { coeffs: vec![k.zero(), k.one()] }
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

    pub fn coeff(&self, k: &F, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| k.zero())
    }

    pub fn lc(&self, k: &F) -> F::Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| k.zero())
    }

    pub fn add(&self, k: &F, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FPoly::new(k, (0..n).map(|i| k.add(&self.coeff(k, i), &rhs.coeff(k, i))).collect())
    }

    pub fn sub(&self, k: &F, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FPoly::new(k, (0..n).map(|i| k.sub(&self.coeff(k, i), &rhs.coeff(k, i))).collect())
    }

    pub fn neg(&self, k: &F) -> Self {
        FPoly { coeffs: self.coeffs.iter().map(|c| k.neg(c)).collect() }
    }

    pub fn mul(&self, k: &F, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return FPoly::zero();
        }
        let mut out = vec![k.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = k.add(&out[i + j], &k.mul(a, b));
            }
        }
        FPoly::new(k, out)
    }

    pub fn scale(&self, k: &F, c: &F::Elem) -> Self {
        FPoly::new(k, self.coeffs.iter().map(|a| k.mul(a, c)).collect())
    }

    pub fn divrem(&self, k: &F, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let db = rhs.deg();
        if self.is_zero() || self.deg() < db {
            return (FPoly::zero(), self.clone());
        }
        let linv = k.inv(&rhs.lc(k)).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![k.zero(); rem.len() - db];
        for i in (db..rem.len()).rev() {
            if k.is_zero(&rem[i]) {
                continue;
            }
            let q = k.mul(&rem[i], &linv);
            quo[i - db] = q.clone();
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = k.mul(&q, b);
                rem[i - db + j] = k.sub(&rem[i - db + j], &t);
            }
        }
        (FPoly::new(k, quo), FPoly::new(k, rem))
    }

    pub fn gcd(&self, k: &F, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.divrem(k, &b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let linv = k.inv(&a.lc(k)).unwrap();
        a.scale(k, &linv)
    }

    pub fn derivative(&self, k: &F) -> Self {
        if self.coeffs.len() <= 1 {
            return FPoly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| k.mul(c, &k.from_i64(i as i64)))
            .collect();
        FPoly::new(k, out)
    }

    pub fn eval(&self, k: &F, x: &F::Elem) -> F::Elem {
        let mut acc = k.zero();
        for c in self.coeffs.iter().rev() {
            acc = k.add(&k.mul(&acc, x), c);
        }
        acc
    }
}
