//! Dense univariate polynomials over Q (and over Z for the factorization
//! internals). Coefficients are stored ascending by degree with no trailing
//! zero; the zero polynomial is the empty coefficient vector, which stands
//! in for the degree -infinity convention.

use super::{ArithError, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyQ {
    coeffs: Vec<Rat>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyQ::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        PolyQ::new(vec![c])
    }

    pub fn x() -> Self {
        PolyQ::monomial(1, Rat::one())
    }

    pub fn monomial(k: usize, c: Rat) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        PolyQ::new(coeffs)
    }

    pub fn from_int_coeffs(cs: &[i64]) -> Self {
        PolyQ::new(cs.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
    }

    pub fn from_bigint_coeffs(cs: &[BigInt]) -> Self {
        PolyQ::new(cs.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` encodes the zero polynomial.
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

    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn neg(&self) -> Self {
        PolyQ::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        PolyQ::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyQ::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        PolyQ::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return PolyQ::zero();
        }
        self.scale(&self.lc().recip())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return PolyQ::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
            .collect();
        PolyQ::new(out)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division; panics if `rhs` is zero.
    pub fn divrem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let dd = rhs.deg();
        if self.is_zero() || self.deg() < dd {
            return (PolyQ::zero(), self.clone());
        }
        let lc_inv = rhs.lc().recip();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rat::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lc_inv;
            quo[i - dd] = q.clone();
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = &q * b;
                rem[i - dd + j] -= t;
            }
        }
        (PolyQ::new(quo), PolyQ::new(rem))
    }

    pub fn rem(&self, rhs: &Self) -> Self {
        self.divrem(rhs).1
    }

    pub fn div_exact(&self, rhs: &Self) -> Self {
        let (q, r) = self.divrem(rhs);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Extended Euclid: (g, s, t) with s*self + t*rhs = g, g monic.
    pub fn xgcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (PolyQ::one(), PolyQ::zero());
        let (mut t0, mut t1) = (PolyQ::zero(), PolyQ::one());
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
        let c = r0.lc().recip();
        (r0.scale(&c), s0.scale(&c), t0.scale(&c))
    }

    /// Monic greatest common divisor. gcd(f, 0) = monic(f); gcd(0, 0) = 0.
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

    /// Resultant via the integer sub-resultant PRS after clearing contents.
    pub fn resultant(&self, rhs: &Self) -> Result<Rat, ArithError> {
        if self.is_zero() || rhs.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        let (fc, fz) = self.content_split();
        let (gc, gz) = rhs.content_split();
        let r = resultant_z(&fz, &gz);
        let s = pow_rat(&fc, rhs.deg()) * pow_rat(&gc, self.deg());
        Ok(Rat::from_integer(r) * s)
    }

    /// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f), for deg f >= 1.
    pub fn discriminant(&self) -> Rat {
        let d = self.deg();
        assert!(d >= 1, "discriminant needs degree >= 1");
        let fp = self.derivative();
        if fp.is_zero() {
            return Rat::zero();
        }
        let res = self.resultant(&fp).expect("nonzero inputs");
        let sign = if (d * (d - 1) / 2) % 2 == 0 { Rat::one() } else { -Rat::one() };
        sign * res / self.lc()
    }

    /// f / gcd(f, f'), made monic. Input must be nonzero.
    pub fn squarefree_part(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        if self.deg() == 0 {
            return Ok(PolyQ::one());
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_exact(&g).monic())
    }

    /// Yun's algorithm: returns monic squarefree parts with multiplicities,
    /// ascending by multiplicity, skipping trivial parts.
    pub fn squarefree_decomposition(&self) -> Vec<(PolyQ, usize)> {
        assert!(!self.is_zero());
        let f = self.monic();
        if f.deg() == 0 {
            return Vec::new();
        }
        let fp = f.derivative();
        let g = f.gcd(&fp);
        if g.deg() == 0 {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut c = f.div_exact(&g);
        let mut d = fp.div_exact(&g).sub(&c.derivative());
        let mut i = 1;
        while c.deg() > 0 {
            let h = c.gcd(&d);
            if h.deg() > 0 {
                out.push((h.clone(), i));
            }
            c = c.div_exact(&h);
            d = d.div_exact(&h).sub(&c.derivative());
            i += 1;
        }
        out
    }

    /// Split into rational content and primitive integer part with positive
    /// leading coefficient: self = content * primitive.
    pub fn content_split(&self) -> (Rat, PolyZ) {
        assert!(!self.is_zero());
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut cont = BigInt::zero();
        for c in &ints {
            cont = cont.gcd(c);
        }
        let mut prim: Vec<BigInt> = ints.iter().map(|c| c / &cont).collect();
        if prim.last().unwrap().is_negative() {
            for c in &mut prim {
                *c = -(c.clone());
            }
            cont = -cont;
        }
        (Rat::new(cont, den), PolyZ::new(prim))
    }

    /// Number of distinct real roots, by Sturm's theorem on the squarefree part.
    pub fn count_real_roots(&self) -> usize {
        assert!(!self.is_zero());
        let f = self.squarefree_part().expect("nonzero");
        if f.deg() == 0 {
            return 0;
        }
        let mut seq = vec![f.clone(), f.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]).neg();
            seq.push(r);
        }
        seq.pop();
        let sign_at = |p: &PolyQ, at_plus_inf: bool| -> i32 {
            let lc = p.lc();
            let mut s = if lc.is_positive() { 1 } else { -1 };
            if !at_plus_inf && p.deg() % 2 == 1 {
                s = -s;
            }
            s
        };
        let variations = |at_plus_inf: bool| -> usize {
            let signs: Vec<i32> = seq.iter().map(|p| sign_at(p, at_plus_inf)).collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        variations(false) - variations(true)
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

fn pow_rat(c: &Rat, e: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= c;
    }
    acc
}

/// Dense univariate polynomial with integer coefficients; same trailing-zero
/// normalization as `PolyQ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

impl PolyZ {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PolyZ { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
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

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn to_polyq(&self) -> PolyQ {
        PolyQ::from_bigint_coeffs(&self.coeffs)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return PolyZ::new(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyZ::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        PolyZ::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        PolyZ::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        let mut m = BigInt::zero();
        for c in &self.coeffs {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        m
    }

    pub fn one_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Exact division by an integer; panics if not exact.
    pub fn div_int_exact(&self, c: &BigInt) -> Self {
        PolyZ::new(
            self.coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    assert!(r.is_zero(), "inexact integer division of coefficients");
                    q
                })
                .collect(),
        )
    }

    /// Exact polynomial division in Z[x]; returns None when rhs does not
    /// divide self over the rationals with integer quotient.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        assert!(!rhs.is_zero());
        if self.is_zero() {
            return Some(PolyZ::new(vec![]));
        }
        if self.deg() < rhs.deg() {
            return None;
        }
        let db = rhs.deg();
        let lb = rhs.lc();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); rem.len() - db];
        for i in (db..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(&lb);
            if !r.is_zero() {
                return None;
            }
            quo[i - db] = q.clone();
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[i - db + j] -= &q * b;
            }
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(PolyZ::new(quo))
        } else {
            None
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// Resultant of two nonzero integer polynomials by the sub-resultant PRS.
pub(crate) fn resultant_z(a: &PolyZ, b: &PolyZ) -> BigInt {
    assert!(!a.is_zero() && !b.is_zero());
    let mut a = a.clone();
    let mut b = b.clone();
    let mut sign = BigInt::one();
    if a.deg() < b.deg() {
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.deg() == 0 {
        return sign * pow_int(&b.lc(), a.deg());
    }
    let ca = a.content();
    let cb = b.content();
    let a = a.div_int_exact(&ca);
    let b = b.div_int_exact(&cb);
    let t = pow_int(&ca, b.deg()) * pow_int(&cb, a.deg());

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    let mut a = a;
    let mut b = b;
    loop {
        let da = a.deg();
        let db = b.deg();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_rem(&a, &b);
        if r.is_zero() {
            return BigInt::zero();
        }
        a = b;
        let divisor = &g * pow_int(&h, delta);
        b = r.div_int_exact(&divisor);
        g = a.lc();
        // h = g^delta / h^(delta-1), exact in Z
        h = if delta == 0 {
            h
        } else {
            let num = pow_int(&g, delta);
            let den = pow_int(&h, delta - 1);
            let (q, rr) = num.div_rem(&den);
            debug_assert!(rr.is_zero());
            q
        };
        if b.deg() == 0 {
            let da = a.deg();
            let num = pow_int(&b.lc(), da);
            let den = pow_int(&h, da.saturating_sub(1));
            let (q, rr) = num.div_rem(&den);
            debug_assert!(rr.is_zero());
            return sign * t * q;
        }
    }
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed fraction-free. Requires
/// deg a >= deg b; the loop runs exactly (deg a - deg b + 1) times, each
/// scaling by lc(b) once, which accounts for the full lc power.
fn pseudo_rem(a: &PolyZ, b: &PolyZ) -> PolyZ {
    let db = b.deg();
    let lb = b.lc();
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    for i in (db..rem.len()).rev() {
        let top = rem[i].clone();
        for c in rem.iter_mut().take(i + 1) {
            *c *= &lb;
        }
        for (j, bc) in b.coeffs().iter().enumerate() {
            let t = &top * bc;
            rem[i - db + j] -= t;
        }
        debug_assert!(rem[i].is_zero());
    }
    PolyZ::new(rem)
}

fn pow_int(c: &BigInt, e: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    fn p(cs: &[i64]) -> PolyQ {
        PolyQ::from_int_coeffs(cs)
    }

    /// Independent oracle: resultant as the Sylvester matrix determinant,
    /// by rational Gaussian elimination.
    fn sylvester_resultant(f: &PolyQ, g: &PolyQ) -> Rat {
        let m = f.deg();
        let n = g.deg();
        let size = m + n;
        if size == 0 {
            return Rat::one();
        }
        let mut mat = vec![vec![Rat::zero(); size]; size];
        for row in 0..n {
            for k in 0..=m {
                mat[row][row + (m - k)] = f.coeff(k);
            }
        }
        for row in 0..m {
            for k in 0..=n {
                mat[n + row][row + (n - k)] = g.coeff(k);
            }
        }
        let mut det = Rat::one();
        for col in 0..size {
            let piv = (col..size).find(|&r| !mat[r][col].is_zero());
            let piv = match piv {
                Some(p) => p,
                None => return Rat::zero(),
            };
            if piv != col {
                mat.swap(piv, col);
                det = -det;
            }
            det *= mat[col][col].clone();
            let inv = mat[col][col].clone().recip();
            for r in col + 1..size {
                if mat[r][col].is_zero() {
                    continue;
                }
                let factor = &mat[r][col] * &inv;
                for c in col..size {
                    let t = &factor * &mat[col][c];
                    mat[r][c] -= t;
                }
            }
        }
        det
    }

    #[test]
    fn gcd_basics() {
        // gcd(x^2-1, x-1) = x-1
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        // gcd(f, 0) = monic(f)
        assert_eq!(p(&[2, 4]).gcd(&PolyQ::zero()), p(&[1, 2]).monic());
        // gcd(0, 0) = 0
        assert!(PolyQ::zero().gcd(&PolyQ::zero()).is_zero());
        // gcd(x^4-1, x^6-1) = x^{gcd(4,6)} - 1 = x^2 - 1
        assert_eq!(
            p(&[-1, 0, 0, 0, 1]).gcd(&p(&[-1, 0, 0, 0, 0, 0, 1])),
            p(&[-1, 0, 1])
        );
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(p(&[-2, 1]).resultant(&p(&[-3, 1])).unwrap(), rat_int(-1));
        assert_eq!(p(&[1, 0, 1]).resultant(&p(&[0, 1])).unwrap(), rat_int(1));
        assert_eq!(p(&[-2, 0, 1]).resultant(&p(&[-2, 0, 1])).unwrap(), rat_int(0));
        assert!(PolyQ::zero().resultant(&p(&[1])).is_err());
    }

    #[test]
    fn resultant_matches_sylvester_oracle() {
        // deterministic pseudo-random small polynomials
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..60 {
            let df = (next() % 5 + 1) as usize;
            let dg = (next() % 5 + 1) as usize;
            let mk = |d: usize, next: &mut dyn FnMut() -> u64| {
                let mut cs: Vec<i64> = (0..=d).map(|_| (next() % 11) as i64 - 5).collect();
                if cs[d] == 0 {
                    cs[d] = 1;
                }
                PolyQ::from_int_coeffs(&cs)
            };
            let f = mk(df, &mut next);
            let g = mk(dg, &mut next);
            let prs = f.resultant(&g).unwrap();
            let syl = sylvester_resultant(&f, &g);
            assert_eq!(prs, syl, "f={} g={}", f, g);
        }
    }

    #[test]
    fn discriminant_examples() {
        // disc(x^2 + 1) = -4
        assert_eq!(p(&[1, 0, 1]).discriminant(), rat_int(-4));
        // disc(x^3 - x^2 + x + 1): cubic formula 18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2
        // with (a,b,c) = (-1,1,1) gives -44; must be negative (one real root).
        let f = p(&[1, 1, -1, 1]);
        assert_eq!(f.discriminant(), rat_int(-44));
        assert_eq!(f.count_real_roots(), 1);
    }

    #[test]
    fn squarefree_examples() {
        // (x-1)^2 (x+2) -> (x-1)(x+2)
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        assert_eq!(f.squarefree_part().unwrap(), p(&[-1, 1]).mul(&p(&[2, 1])));
        // already squarefree -> monic(input)
        let g = p(&[2, 0, 2]);
        assert_eq!(g.squarefree_part().unwrap(), p(&[1, 0, 1]));
        // x^4 - 2x^2 + 1 = (x^2-1)^2 -> x^2 - 1
        assert_eq!(p(&[1, 0, -2, 0, 1]).squarefree_part().unwrap(), p(&[-1, 0, 1]));
    }

    #[test]
    fn discriminant_zero_iff_not_squarefree() {
        let sq = p(&[1, 1]).mul(&p(&[1, 1])).mul(&p(&[3, 1]));
        assert!(sq.discriminant().is_zero());
        assert!(!p(&[1, 1, 1]).discriminant().is_zero());
    }

    #[test]
    fn yun_decomposition() {
        // f = (x-1)(x+2)^2 (x-3)^3
        let f = p(&[-1, 1])
            .mul(&p(&[2, 1]))
            .mul(&p(&[2, 1]))
            .mul(&p(&[-3, 1]))
            .mul(&p(&[-3, 1]))
            .mul(&p(&[-3, 1]));
        let parts = f.squarefree_decomposition();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], (p(&[-1, 1]), 1));
        assert_eq!(parts[1], (p(&[2, 1]), 2));
        assert_eq!(parts[2], (p(&[-3, 1]), 3));
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(p(&[-2, 0, 1]).count_real_roots(), 2);
        assert_eq!(p(&[1, 0, 1]).count_real_roots(), 0);
        assert_eq!(p(&[0, -1, 0, 1]).count_real_roots(), 3);
        // x^5 - x^4 - 4x^3 + 3x^2 + 3x - 1 is totally real (max real subfield of Q(zeta_11))
        assert_eq!(p(&[-1, 3, 3, -4, -1, 1]).count_real_roots(), 5);
    }
}
