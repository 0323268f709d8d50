//! Factorization of the defining polynomial mod p and the induced residue
//! maps K -> F_{p^k}. A prime is usable when it is odd and does not divide
//! disc(f): then f is squarefree mod p, Z[a] is p-maximal at p, and p is
//! unramified, which is exactly what torsion injection needs.

use super::{NfElem, NfError, NumberField};
use crate::arith::{factor_mod_p, PolyModP};
use crate::fq::{FqElem, FqField};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

#[derive(Clone, Debug)]
pub struct PrimeSplitting {
    pub p: u64,
    /// (irreducible factor of f mod p, residue degree), ascending by degree.
    pub factors: Vec<(PolyModP, usize)>,
    /// True iff p is odd and does not divide disc(f).
    pub usable: bool,
}

impl PrimeSplitting {
    /// The smallest residue degree among the factors.
    pub fn min_residue_degree(&self) -> usize {
        self.factors.iter().map(|(_, k)| *k).min().unwrap_or(0)
    }

    pub fn residue_field(&self, index: usize) -> Result<FqField, crate::fq::FqError> {
        FqField::new(self.p, self.factors[index].0.clone())
    }
}

pub fn split_prime(k: &NumberField, p: u64) -> PrimeSplitting {
    assert!(p >= 3, "split_prime expects an odd prime");
    let fp = PolyModP::from_bigint_coeffs(
        p,
        &k.defining_poly()
            .coeffs()
            .iter()
            .map(|c| c.to_integer())
            .collect::<Vec<_>>(),
    );
    let usable = !(k.poly_disc() % BigInt::from(p)).is_zero();
    let mut factors: Vec<(PolyModP, usize)> = factor_mod_p(&fp, crate::DEFAULT_SEED)
        .into_iter()
        .map(|(g, _mult)| {
            let d = g.deg();
            (g, d)
        })
        .collect();
    factors.sort_by(|a, b| (a.1, a.0.coeffs()).cmp(&(b.1, b.0.coeffs())));
    if usable {
        debug_assert_eq!(factors.iter().map(|(_, d)| d).sum::<usize>(), k.degree());
    }
    PrimeSplitting { p, factors, usable }
}

/// Image of x in F_p[t]/(g_i): coordinates reduce mod p, the generator maps
/// to t. Fails with DenominatorAtP when a coordinate denominator shares a
/// factor with p.
pub fn residue_map(x: &NfElem, s: &PrimeSplitting, index: usize) -> Result<FqElem, NfError> {
    assert!(s.usable, "residue maps need a usable prime");
    let field = s
        .residue_field(index)
        .unwrap_or_else(|e| panic!("residue field construction failed: {e}"));
    residue_map_in(x, s.p, &field)
}

/// Same map with a prebuilt residue field (avoids re-validating the modulus
/// when mapping many elements).
pub fn residue_map_in(x: &NfElem, p: u64, field: &FqField) -> Result<FqElem, NfError> {
    let p_big = BigInt::from(p);
    let mut coeffs = Vec::with_capacity(x.coords().len());
    for c in x.coords() {
        if c.denom().gcd(&p_big) != BigInt::from(1) {
            return Err(NfError::DenominatorAtP { p });
        }
        let num = c.numer().mod_floor(&p_big).to_u64().unwrap();
        let den = c.denom().mod_floor(&p_big).to_u64().unwrap();
        coeffs.push(crate::arith::mulm(num, crate::arith::invm(den, p), p));
    }
    Ok(field.elem(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PolyQ;
    use crate::field::Field;
    use crate::Rat;

    fn gauss() -> NumberField {
        NumberField::new(PolyQ::from_int_coeffs(&[1, 0, 1]), None).unwrap()
    }

    #[test]
    fn split_examples() {
        let k = gauss();
        // x^2+1 = (x+2)(x+3) mod 5: two degree-1 primes
        let s5 = split_prime(&k, 5);
        assert!(s5.usable);
        assert_eq!(s5.factors.len(), 2);
        assert!(s5.factors.iter().all(|(_, d)| *d == 1));
        // x^2+1 irreducible mod 3: one degree-2 prime
        let s3 = split_prime(&k, 3);
        assert!(s3.usable);
        assert_eq!(s3.factors.len(), 1);
        assert_eq!(s3.factors[0].1, 2);
        // disc = -4: every odd prime is usable
        assert!(split_prime(&k, 7).usable);
    }

    #[test]
    fn residue_is_homomorphism() {
        let k = NumberField::new(PolyQ::from_int_coeffs(&[1, 1, -1, -1, 1]), None).unwrap();
        let s = split_prime(&k, 11);
        assert!(s.usable);
        let field = s.residue_field(0).unwrap();
        let x = k.elem_from_coords(vec![
            Rat::new(1.into(), 2.into()),
            Rat::new(3.into(), 5.into()),
            Rat::from_integer(2.into()),
            Rat::from_integer((-1).into()),
        ]);
        let y = k.elem_from_coords(vec![
            Rat::from_integer(4.into()),
            Rat::new((-2).into(), 3.into()),
            Rat::from_integer(0.into()),
            Rat::from_integer(5.into()),
        ]);
        let rx = residue_map_in(&x, s.p, &field).unwrap();
        let ry = residue_map_in(&y, s.p, &field).unwrap();
        let sum = residue_map_in(&k.add(&x, &y), s.p, &field).unwrap();
        let prod = residue_map_in(&k.mul(&x, &y), s.p, &field).unwrap();
        assert_eq!(field.add(&rx, &ry), sum);
        assert_eq!(field.mul(&rx, &ry), prod);
    }

    #[test]
    fn generator_maps_to_t_and_denominators_fail() {
        let k = gauss();
        let s = split_prime(&k, 3);
        // a -> t in F_9
        let img = residue_map(&k.gen(), &s, 0).unwrap();
        let field = s.residue_field(0).unwrap();
        assert_eq!(img, field.gen());
        // 1/3 * a has a denominator at 3
        let bad = k.elem_from_coords(vec![Rat::zero(), Rat::new(1.into(), 3.into())]);
        assert!(matches!(residue_map(&bad, &s, 0), Err(NfError::DenominatorAtP { p: 3 })));
        // integers map mod p
        let c = residue_map(&k.integer(7), &s, 0).unwrap();
        assert_eq!(c, field.from_i64(7));
    }
}
