//! Polynomial factorization: squarefree/distinct-degree/equal-degree
//! splitting over F_p, quadratic Hensel lifting, and Zassenhaus
//! factorization over Q with subset recombination.

use super::polymod::{invm, PolyModP};
use super::polyq::{PolyQ, PolyZ};
use super::{ArithError, Rat, FACTOR_DEGREE_CAP, RECOMBINATION_SUBSET_CAP};
use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------------------
// factorization over F_p
// ---------------------------------------------------------------------------

/// Monic irreducible factors with multiplicities, sorted by (degree,
/// coefficients); the unit is lc(f). Cantor-Zassenhaus randomness is drawn
/// from a generator seeded by `seed` and p, so runs are reproducible.
pub fn factor_mod_p(f: &PolyModP, seed: u64) -> Vec<(PolyModP, usize)> {
    assert!(!f.is_zero(), "factor of zero polynomial");
    let p = f.p();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut out: Vec<(PolyModP, usize)> = Vec::new();
    let monic = f.monic();
    if monic.deg() == 0 {
        return out;
    }
    for (part, mult) in squarefree_decomp_mod_p(&monic) {
        for (deg, product) in distinct_degree_split(&part) {
            for irr in equal_degree_split(&product, deg, &mut rng) {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by(|a, b| {
        (a.0.deg(), a.0.coeffs(), a.1).cmp(&(b.0.deg(), b.0.coeffs(), b.1))
    });
    out
}

pub fn is_irreducible_mod_p(f: &PolyModP) -> bool {
    if f.is_zero() || f.deg() == 0 {
        return false;
    }
    if f.deg() == 1 {
        return true;
    }
    if !f.is_squarefree() {
        return false;
    }
    let g = f.monic();
    // x^(p^n) = x mod g and gcd(x^(p^(n/q)) - x, g) = 1 for prime q | n
    let n = g.deg();
    let xn = PolyModP::frobenius_power(&g, n);
    if xn != PolyModP::x(g.p()).rem(&g) {
        return false;
    }
    let mut m = n;
    let mut qs = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            qs.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        qs.push(m);
    }
    for q in qs {
        let xq = PolyModP::frobenius_power(&g, n / q);
        let diff = xq.sub(&PolyModP::x(g.p()).rem(&g));
        if g.gcd(&diff).deg() > 0 {
            return false;
        }
    }
    true
}

fn pth_root_mod_p(f: &PolyModP) -> PolyModP {
    // f = u(x^p) over F_p implies f = u~^p where u~ has the same coefficients
    let p = f.p() as usize;
    let mut coeffs = Vec::with_capacity(f.coeffs().len() / p + 1);
    for (i, &c) in f.coeffs().iter().enumerate() {
        if i % p == 0 {
            coeffs.push(c);
        } else {
            debug_assert_eq!(c, 0);
        }
    }
    PolyModP::new(f.p(), coeffs)
}

fn squarefree_decomp_mod_p(f: &PolyModP) -> Vec<(PolyModP, usize)> {
    fn rec(f: &PolyModP, e: usize, out: &mut Vec<(PolyModP, usize)>) {
        if f.deg() == 0 {
            return;
        }
        let fp = f.derivative();
        if fp.is_zero() {
            let inner = pth_root_mod_p(f);
            rec(&inner, e * f.p() as usize, out);
            return;
        }
        let mut c = f.gcd(&fp);
        let mut w = f.divrem(&c).0;
        let mut i = 1;
        while w.deg() > 0 {
            let y = w.gcd(&c);
            let z = w.divrem(&y).0;
            if z.deg() > 0 {
                out.push((z, i * e));
            }
            w = y.clone();
            c = c.divrem(&y).0;
            i += 1;
        }
        if c.deg() > 0 {
            let inner = pth_root_mod_p(&c);
            rec(&inner, e * f.p() as usize, out);
        }
    }
    let mut out = Vec::new();
    rec(&f.monic(), 1, &mut out);
    out
}

/// Splits a monic squarefree polynomial into (d, product of all monic
/// irreducible factors of degree d).
fn distinct_degree_split(f: &PolyModP) -> Vec<(usize, PolyModP)> {
    let mut out = Vec::new();
    let mut rest = f.monic();
    let mut h = PolyModP::x(f.p());
    let mut d = 0usize;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.powmod(f.p(), &rest);
        let g = rest.gcd(&h.sub(&PolyModP::x(f.p())));
        if g.deg() > 0 {
            out.push((d, g.clone()));
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
        }
    }
    if rest.deg() > 0 {
        out.push((rest.deg(), rest));
    }
    out
}

fn powmod_big(base: &PolyModP, e: &BigUint, m: &PolyModP) -> PolyModP {
    let mut acc = PolyModP::one(base.p());
    let mut b = base.rem(m);
    for i in 0..e.bits() {
        if e.bit(i) {
            acc = acc.mul(&b).rem(m);
        }
        b = b.mul(&b).rem(m);
    }
    acc
}

/// Cantor-Zassenhaus equal-degree splitting for odd p: f is monic squarefree,
/// a product of irreducibles all of degree d.
fn equal_degree_split(f: &PolyModP, d: usize, rng: &mut ChaCha8Rng) -> Vec<PolyModP> {
    if f.deg() == d {
        return vec![f.monic()];
    }
    let p = f.p();
    let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let coeffs: Vec<u64> = (0..f.deg()).map(|_| rng.gen_range(0..p)).collect();
        let r = PolyModP::new(p, coeffs);
        if r.is_zero() {
            continue;
        }
        let w = powmod_big(&r, &exp, f).sub(&PolyModP::one(p));
        let g = f.gcd(&w);
        if g.deg() > 0 && g.deg() < f.deg() {
            let h = f.divrem(&g).0;
            let mut out = equal_degree_split(&g, d, rng);
            out.extend(equal_degree_split(&h, d, rng));
            return out;
        }
    }
}

// ---------------------------------------------------------------------------
// polynomials over Z/M for Hensel lifting
// ---------------------------------------------------------------------------

fn zm_norm(mut v: Vec<BigInt>, m: &BigInt) -> Vec<BigInt> {
    for c in &mut v {
        *c = c.mod_floor(m);
    }
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zm_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let get = |v: &[BigInt], i: usize| v.get(i).cloned().unwrap_or_else(BigInt::zero);
    zm_norm((0..n).map(|i| get(a, i) + get(b, i)).collect(), m)
}

fn zm_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let get = |v: &[BigInt], i: usize| v.get(i).cloned().unwrap_or_else(BigInt::zero);
    zm_norm((0..n).map(|i| get(a, i) - get(b, i)).collect(), m)
}

fn zm_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zm_norm(out, m)
}

/// Division with remainder by a monic divisor, over Z/M.
fn zm_divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(b.last().map_or(false, |c| c.is_one()), "divisor must be monic");
    let db = b.len() - 1;
    let mut rem: Vec<BigInt> = a.to_vec();
    if rem.len() <= db {
        return (vec![], zm_norm(rem, m));
    }
    let mut quo = vec![BigInt::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        let q = rem[i].mod_floor(m);
        if q.is_zero() {
            rem[i] = BigInt::zero();
            continue;
        }
        quo[i - db] = q.clone();
        for (j, bc) in b.iter().enumerate() {
            let t = &q * bc;
            rem[i - db + j] -= t;
        }
        rem[i] = BigInt::zero();
    }
    (zm_norm(quo, m), zm_norm(rem, m))
}

/// A factorization of a monic polynomial modulo p^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedFactors {
    pub p: u64,
    pub k: u32,
    pub modulus: BigInt,
    /// Monic factors, coefficients reduced to [0, p^k).
    pub factors: Vec<PolyZ>,
}

/// Quadratically lifts a coprime monic factorization of `f` from mod p to
/// mod p^k. `f` must have integer coefficients with lc(f) invertible mod p
/// and be squarefree mod p; the supplied factors must be pairwise coprime
/// mod p with product congruent to monic(f) mod p.
pub fn hensel_lift(f: &PolyQ, factors: &[PolyModP], p: u64, k: u32) -> Result<LiftedFactors, ArithError> {
    assert!(f.has_integer_coeffs(), "hensel_lift needs integral input");
    assert!(k >= 1);
    let (_, fz) = f.content_split();
    let modulus = BigInt::from(p).pow(k);

    // monicize f mod p^k
    let lc = fz.lc().mod_floor(&modulus);
    let lc_inv = modinv(&lc, &modulus).ok_or(ArithError::NotCoprime { p: BigInt::from(p) })?;
    let fhat: Vec<BigInt> = zm_norm(
        fz.coeffs().iter().map(|c| c * &lc_inv).collect(),
        &modulus,
    );

    let monic_factors: Vec<PolyModP> = factors.iter().map(|g| g.monic()).collect();
    // sanity: product matches mod p
    let mut prod = PolyModP::one(p);
    for g in &monic_factors {
        prod = prod.mul(g);
    }
    let fmodp = PolyModP::from_bigint_coeffs(p, &fhat).monic();
    if prod != fmodp {
        return Err(ArithError::NotCoprime { p: BigInt::from(p) });
    }
    if !fmodp.is_squarefree() {
        return Err(ArithError::NotCoprime { p: BigInt::from(p) });
    }

    let lifted = lift_tree(&fhat, &monic_factors, p, &modulus)?;
    Ok(LiftedFactors {
        p,
        k,
        modulus,
        factors: lifted.into_iter().map(PolyZ::new).collect(),
    })
}

fn modinv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

fn to_zm(g: &PolyModP, m: &BigInt) -> Vec<BigInt> {
    zm_norm(g.coeffs().iter().map(|&c| BigInt::from(c)).collect(), m)
}

/// Recursive tree lifting: f monic mod `target`, factors monic mod p.
fn lift_tree(
    f: &[BigInt],
    factors: &[PolyModP],
    p: u64,
    target: &BigInt,
) -> Result<Vec<Vec<BigInt>>, ArithError> {
    if factors.len() == 1 {
        return Ok(vec![zm_norm(f.to_vec(), target)]);
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let p_big = BigInt::from(p);
    let mut g0 = PolyModP::one(p);
    for fac in left {
        g0 = g0.mul(fac);
    }
    let mut h0 = PolyModP::one(p);
    for fac in right {
        h0 = h0.mul(fac);
    }
    let (d, s0, t0) = g0.xgcd(&h0);
    if d.deg() != 0 {
        return Err(ArithError::NotCoprime { p: p_big });
    }

    let mut m = p_big.clone();
    let mut g = to_zm(&g0, &m);
    let mut h = to_zm(&h0, &m);
    let mut s = to_zm(&s0, &m);
    let mut t = to_zm(&t0, &m);
    while &m < target {
        let m2 = &m * &m;
        let fe = zm_norm(f.to_vec(), &m2);
        // e = f - g h
        let e = zm_sub(&fe, &zm_mul(&g, &h, &m2), &m2);
        // (q, r) = (s e) / h
        let (q, r) = zm_divrem_monic(&zm_mul(&s, &e, &m2), &h, &m2);
        let g1 = zm_add(&g, &zm_add(&zm_mul(&t, &e, &m2), &zm_mul(&q, &g, &m2), &m2), &m2);
        let h1 = zm_add(&h, &r, &m2);
        // refresh the Bezout pair
        let b = zm_sub(
            &zm_add(&zm_mul(&s, &g1, &m2), &zm_mul(&t, &h1, &m2), &m2),
            &[BigInt::one()],
            &m2,
        );
        let (c, d) = zm_divrem_monic(&zm_mul(&s, &b, &m2), &h1, &m2);
        let s1 = zm_sub(&s, &d, &m2);
        let t1 = zm_sub(&zm_sub(&t, &zm_mul(&t, &b, &m2), &m2), &zm_mul(&c, &g1, &m2), &m2);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = m2;
    }
    let g = zm_norm(g, target);
    let h = zm_norm(h, target);
    debug_assert_eq!(
        zm_sub(&zm_norm(f.to_vec(), target), &zm_mul(&g, &h, target), target),
        Vec::<BigInt>::new()
    );
    let mut out = lift_tree(&g, left, p, target)?;
    out.extend(lift_tree(&h, right, p, target)?);
    Ok(out)
}

// ---------------------------------------------------------------------------
// factorization over Q (Zassenhaus)
// ---------------------------------------------------------------------------

/// Monic irreducible factors over Q with multiplicities, sorted
/// canonically; the input equals lc(f) times the product of the factors
/// raised to their multiplicities.
pub fn factor_over_q(f: &PolyQ) -> Result<Vec<(PolyQ, usize)>, ArithError> {
    factor_over_q_seeded(f, crate::DEFAULT_SEED)
}

pub fn factor_over_q_seeded(f: &PolyQ, seed: u64) -> Result<Vec<(PolyQ, usize)>, ArithError> {
    if f.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    let deg = f.deg();
    if deg > FACTOR_DEGREE_CAP {
        return Err(ArithError::DegreeCapExceeded { degree: deg, cap: FACTOR_DEGREE_CAP });
    }
    if deg == 0 {
        return Ok(vec![]);
    }
    let mut out: Vec<(PolyQ, usize)> = Vec::new();
    for (part, mult) in f.squarefree_decomposition() {
        for irr in factor_squarefree(&part, seed)? {
            out.push((irr, mult));
        }
    }
    out.sort_by(|a, b| {
        let ka = (a.0.deg(), a.1);
        let kb = (b.0.deg(), b.1);
        ka.cmp(&kb).then_with(|| cmp_coeffs(&a.0, &b.0))
    });
    Ok(out)
}

fn cmp_coeffs(a: &PolyQ, b: &PolyQ) -> std::cmp::Ordering {
    for i in 0..a.coeffs().len().max(b.coeffs().len()) {
        let o = a.coeff(i).cmp(&b.coeff(i));
        if o != std::cmp::Ordering::Equal {
            return o;
        }
    }
    std::cmp::Ordering::Equal
}

/// Factor a monic squarefree rational polynomial into monic irreducibles.
fn factor_squarefree(f: &PolyQ, seed: u64) -> Result<Vec<PolyQ>, ArithError> {
    if f.deg() == 1 {
        return Ok(vec![f.monic()]);
    }
    let (_, g) = f.content_split();

    // choose an odd prime keeping g squarefree, minimizing the modular
    // factor count over a few candidates
    let mut best: Option<(u64, Vec<PolyModP>)> = None;
    let mut tried = 0;
    for p in super::int::prime_iter().skip(1) {
        if (g.lc().mod_floor(&BigInt::from(p))).is_zero() {
            continue;
        }
        let gp = PolyModP::from_bigint_coeffs(p, g.coeffs());
        if !gp.is_squarefree() {
            continue;
        }
        let factors: Vec<PolyModP> = factor_mod_p(&gp, seed).into_iter().map(|(h, _)| h).collect();
        let better = best.as_ref().map_or(true, |(_, bf)| factors.len() < bf.len());
        if better {
            best = Some((p, factors));
        }
        tried += 1;
        if tried >= 4 || best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    let (p, modular) = best.expect("squarefree integer polynomial has good primes");
    if modular.len() == 1 {
        return Ok(vec![g.to_polyq().monic()]);
    }

    // Landau-Mignotte: coefficients of lc * (any monic rational factor)
    // are bounded by sqrt(n+1) * 2^n * |g|_inf * |lc|
    let n = g.deg();
    let bound = (BigInt::from(n as u64 + 1).sqrt() + 1)
        * (BigInt::one() << n)
        * g.max_abs_coeff()
        * g.lc().abs();
    let mut k = 1u32;
    let p_big = BigInt::from(p);
    let mut modulus = p_big.clone();
    while modulus <= &bound * 2 {
        modulus *= &p_big;
        k += 1;
    }
    let lifted = hensel_lift(&g.to_polyq(), &modular, p, k)?;

    recombine(&g, lifted)
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn symmetric_poly(v: &[BigInt], m: &BigInt) -> PolyZ {
    PolyZ::new(v.iter().map(|c| symmetric(c, m)).collect())
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < i + n - k {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn recombine(g: &PolyZ, lifted: LiftedFactors) -> Result<Vec<PolyQ>, ArithError> {
    let modulus = lifted.modulus.clone();
    let mut pool: Vec<PolyZ> = lifted.factors;
    let mut g = g.clone();
    let mut found: Vec<PolyQ> = Vec::new();
    let mut tested: u64 = 0;

    'outer: loop {
        let r = pool.len();
        if r == 0 {
            break;
        }
        if r == 1 {
            found.push(g.to_polyq().monic());
            break;
        }
        // every nontrivial split of g uses a subset of at most r/2 modular
        // factors on one side
        let lc = g.lc();
        for size in 1..=(r / 2) {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                tested += 1;
                if tested > RECOMBINATION_SUBSET_CAP {
                    return Err(ArithError::RecombinationCapExceeded);
                }
                let mut prod = vec![lc.mod_floor(&modulus)];
                for &i in &combo {
                    prod = zm_mul(&prod, pool[i].coeffs(), &modulus);
                }
                let cand = symmetric_poly(&prod, &modulus).primitive_part();
                if !cand.is_zero() && cand.deg() > 0 {
                    if let Some(q) = g.div_exact(&cand) {
                        found.push(cand.to_polyq().monic());
                        g = q;
                        let mut keep = Vec::new();
                        for (i, fac) in pool.into_iter().enumerate() {
                            if !combo.contains(&i) {
                                keep.push(fac);
                            }
                        }
                        pool = keep;
                        continue 'outer;
                    }
                }
                if !next_combination(&mut combo, r) {
                    break;
                }
            }
        }
        // no subset of size <= r/2 divides: remainder is irreducible
        found.push(g.to_polyq().monic());
        break;
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    fn p(cs: &[i64]) -> PolyQ {
        PolyQ::from_int_coeffs(cs)
    }

    #[test]
    fn factor_mod_p_examples() {
        // x^2 + 1 mod 5 = (x+2)(x+3): 2^2 = 4 = -1, 3^2 = 9 = -1 mod 5
        let f = PolyModP::new(5, vec![1, 0, 1]);
        let fs = factor_mod_p(&f, 1);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].0, PolyModP::new(5, vec![2, 1]));
        assert_eq!(fs[1].0, PolyModP::new(5, vec![3, 1]));

        // x^2 + 1 mod 3 irreducible: -1 is a non-residue mod 3
        let g = PolyModP::new(3, vec![1, 0, 1]);
        let gs = factor_mod_p(&g, 1);
        assert_eq!(gs.len(), 1);
        assert_eq!(gs[0], (g.clone(), 1));
        assert!(is_irreducible_mod_p(&g));

        // x mod p -> x
        let h = PolyModP::x(7);
        assert_eq!(factor_mod_p(&h, 1), vec![(PolyModP::x(7), 1)]);
    }

    #[test]
    fn factor_mod_p_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for &p in &[3u64, 5, 13, 101] {
            for _ in 0..20 {
                let deg = rng.gen_range(1..=8);
                let mut cs: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..p)).collect();
                if cs[deg] == 0 {
                    cs[deg] = 1;
                }
                let f = PolyModP::new(p, cs);
                let fs = factor_mod_p(&f, 7);
                let mut prod = PolyModP::constant(p, f.lc());
                for (g, m) in &fs {
                    assert!(is_irreducible_mod_p(g), "claimed factor not irreducible");
                    for _ in 0..*m {
                        prod = prod.mul(g);
                    }
                }
                assert_eq!(prod, f, "product of factors mismatch mod {}", p);
            }
        }
    }

    #[test]
    fn hensel_examples() {
        // exact factors lift to themselves
        let f = p(&[-1, 0, 1]);
        let fs = vec![PolyModP::new(3, vec![2, 1]), PolyModP::new(3, vec![1, 1])];
        let lifted = hensel_lift(&f, &fs, 3, 2).unwrap();
        assert_eq!(lifted.modulus, BigInt::from(9));
        let got: Vec<Vec<BigInt>> = lifted.factors.iter().map(|g| g.coeffs().to_vec()).collect();
        assert_eq!(got[0], vec![BigInt::from(8), BigInt::from(1)]); // x - 1 = x + 8 mod 9
        assert_eq!(got[1], vec![BigInt::from(1), BigInt::from(1)]);

        // f = x^2 + x + 7 mod 3 is (x-1)^2: not squarefree, so lifting the
        // repeated root is rejected rather than guessed at
        let f = p(&[7, 1, 1]);
        let sq = vec![PolyModP::new(3, vec![2, 1]), PolyModP::new(3, vec![2, 1])];
        assert!(matches!(hensel_lift(&f, &sq, 3, 2), Err(ArithError::NotCoprime { .. })));

        // same f mod 7 splits as x(x+1); lift to mod 49, product must match
        let fs = factor_mod_p(&PolyModP::new(7, vec![0, 1, 1]), 1);
        assert_eq!(fs.len(), 2);
        let fs: Vec<PolyModP> = fs.into_iter().map(|(g, _)| g).collect();
        let lifted = hensel_lift(&f, &fs, 7, 2).unwrap();
        let m = BigInt::from(49);
        let prod = zm_mul(lifted.factors[0].coeffs(), lifted.factors[1].coeffs(), &m);
        let expect = zm_norm(vec![BigInt::from(7), BigInt::from(1), BigInt::from(1)], &m);
        assert_eq!(prod, expect);
        // reduced mod p the lift equals the inputs
        for (orig, lifted) in fs.iter().zip(&lifted.factors) {
            assert_eq!(&PolyModP::from_bigint_coeffs(7, lifted.coeffs()), orig);
        }

        // single factor input reduces to f mod p^k
        let f = p(&[1, 2, 1, 1]);
        let single = vec![PolyModP::from_bigint_coeffs(5, f.content_split().1.coeffs())];
        let lifted = hensel_lift(&f, &single, 5, 3).unwrap();
        assert_eq!(lifted.factors.len(), 1);
        assert_eq!(lifted.factors[0].coeffs()[3], BigInt::one());
    }

    #[test]
    fn hensel_bigger_roundtrip() {
        // f = (x^2+1)(x-3)(x+5)(x^2+x+41) lifted mod 7^6
        let f = p(&[1, 0, 1]).mul(&p(&[-3, 1])).mul(&p(&[5, 1])).mul(&p(&[41, 1, 1]));
        let fp = PolyModP::from_bigint_coeffs(7, f.content_split().1.coeffs());
        let factors: Vec<PolyModP> = factor_mod_p(&fp, 3).into_iter().map(|(g, _)| g).collect();
        assert!(factors.len() >= 4);
        let lifted = hensel_lift(&f, &factors, 7, 6).unwrap();
        let m = lifted.modulus.clone();
        let mut prod = vec![BigInt::one()];
        for g in &lifted.factors {
            prod = zm_mul(&prod, g.coeffs(), &m);
        }
        let expect = zm_norm(f.coeffs().iter().map(|c| c.to_integer()).collect(), &m);
        assert_eq!(prod, expect);
    }

    #[test]
    fn factor_q_examples() {
        // x^4 - 1 = (x-1)(x+1)(x^2+1)
        let fs = factor_over_q(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(fs[0].0, p(&[-1, 1]));
        assert_eq!(fs[1].0, p(&[1, 1]));
        assert_eq!(fs[2].0, p(&[1, 0, 1]));

        // Table-style minimal polynomials are irreducible
        for cs in [vec![1i64, 1, -1, -1, 1], vec![1, 0, 0, -1, 0, 0, 1]] {
            let f = PolyQ::from_int_coeffs(&cs);
            let fs = factor_over_q(&f).unwrap();
            assert_eq!(fs.len(), 1, "{} should be irreducible", f);
            assert_eq!(fs[0].1, 1);
        }
    }

    #[test]
    fn factor_q_with_multiplicities_and_content() {
        // f = 6 (x-1)^2 (x^2+x+1) (2x+3)  -> monic factors with lc carried
        let f = p(&[-1, 1])
            .mul(&p(&[-1, 1]))
            .mul(&p(&[1, 1, 1]))
            .mul(&p(&[3, 2]))
            .scale(&rat_int(6));
        let fs = factor_over_q(&f).unwrap();
        let mut prod = PolyQ::constant(f.lc());
        for (g, m) in &fs {
            assert!(g.is_monic());
            for _ in 0..*m {
                prod = prod.mul(g);
            }
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn factor_q_degree_cap() {
        let mut cs = vec![0i64; 66];
        cs[65] = 1;
        cs[0] = 1;
        let e = factor_over_q(&PolyQ::from_int_coeffs(&cs));
        assert!(matches!(e, Err(ArithError::DegreeCapExceeded { .. })));
    }

    #[test]
    fn factor_q_cyclotomic_like() {
        // x^6 - x^3 + 1 (Phi_18) irreducible; x^6 - 1 splits fully
        assert_eq!(factor_over_q(&p(&[1, 0, 0, -1, 0, 0, 1])).unwrap().len(), 1);
        let fs = factor_over_q(&p(&[-1, 0, 0, 0, 0, 0, 1])).unwrap();
        let degs: Vec<usize> = fs.iter().map(|(g, _)| g.deg()).collect();
        assert_eq!(degs, vec![1, 1, 2, 2]);
    }
}
