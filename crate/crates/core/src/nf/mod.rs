//! Number fields K = Q[x]/(f): element arithmetic in the power basis,
//! minimal polynomials, norms, prime splitting and residue maps, the
//! Dedekind criterion, p-maximal orders and exact field discriminants.

mod order;
mod splitting;

pub use order::{dedekind_p_maximal, field_discriminant, p_maximal_order, OrderBasis};
pub use splitting::{residue_map, split_prime, PrimeSplitting};

use crate::arith::{factor_over_q, parse_poly_expr, ArithError, PolyQ, Rat};
use crate::field::Field;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NfError {
    #[error("defining polynomial is not monic")]
    NonMonic,
    #[error("defining polynomial has non-integral coefficients")]
    NonIntegral,
    #[error("defining polynomial is reducible: {0:?}")]
    Reducible(Vec<String>),
    #[error("degree {0} outside the supported range 1..=8")]
    DegreeOutOfRange(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different number fields")]
    ParentMismatch,
    #[error("coordinate denominator not coprime to {p}")]
    DenominatorAtP { p: u64 },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug)]
struct NfInner {
    f: PolyQ,
    degree: usize,
    label: Option<String>,
    disc_f: BigInt,
}

/// The field Q[x]/(f) for a monic integral irreducible f of degree 1..=8.
/// Cheap to clone; equality compares defining polynomials.
#[derive(Clone)]
pub struct NumberField(Arc<NfInner>);

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.f == other.0.f
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.label {
            Some(l) => write!(fm, "NumberField({}; {})", self.0.f, l),
            None => write!(fm, "NumberField({})", self.0.f),
        }
    }
}

/// Element of a number field: exactly d coordinates in the power basis
/// 1, a, ..., a^(d-1).
#[derive(Clone, PartialEq)]
pub struct NfElem {
    parent: NumberField,
    coords: Vec<Rat>,
}

impl NumberField {
    /// Validates monicity, integrality and irreducibility (the latter via
    /// factorization over Q).
    pub fn new(f: PolyQ, label: Option<String>) -> Result<Self, NfError> {
        if f.is_zero() || f.deg() == 0 {
            return Err(NfError::DegreeOutOfRange(0));
        }
        if !f.is_monic() {
            return Err(NfError::NonMonic);
        }
        if !f.has_integer_coeffs() {
            return Err(NfError::NonIntegral);
        }
        let d = f.deg();
        if !(1..=8).contains(&d) {
            return Err(NfError::DegreeOutOfRange(d));
        }
        if d > 1 {
            let factors = factor_over_q(&f)?;
            if factors.len() != 1 || factors[0].1 != 1 {
                return Err(NfError::Reducible(
                    factors.iter().map(|(g, m)| format!("({})^{}", g, m)).collect(),
                ));
            }
        }
        let disc_f = if d == 1 {
            BigInt::one()
        } else {
            let disc = f.discriminant();
            debug_assert!(disc.is_integer());
            disc.to_integer()
        };
        Ok(NumberField(Arc::new(NfInner { f, degree: d, label, disc_f })))
    }

    pub fn parse(poly: &str, label: Option<String>) -> Result<Self, NfError> {
        let f = parse_poly_expr(poly, 'x')?;
        NumberField::new(f, label)
    }

    /// Q, presented as Q[x]/(x) so that every code path is uniform in d.
    pub fn rationals() -> Self {
        NumberField::new(PolyQ::x(), Some("Q".into())).expect("x is irreducible")
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn defining_poly(&self) -> &PolyQ {
        &self.0.f
    }

    pub fn label(&self) -> Option<&str> {
        self.0.label.as_deref()
    }

    /// Discriminant of the defining polynomial (1 for degree 1).
    pub fn poly_disc(&self) -> &BigInt {
        &self.0.disc_f
    }

    /// (real embeddings, conjugate pairs); computed by Sturm sequences.
    pub fn signature(&self) -> (usize, usize) {
        let r1 = if self.degree() == 1 { 1 } else { self.0.f.count_real_roots() };
        (r1, (self.degree() - r1) / 2)
    }

    pub fn elem_from_coords(&self, mut coords: Vec<Rat>) -> NfElem {
        assert!(coords.len() <= self.degree(), "too many coordinates");
        coords.resize(self.degree(), Rat::zero());
        NfElem { parent: self.clone(), coords }
    }

    /// Reduces an arbitrary polynomial in the generator modulo f.
    pub fn elem_from_poly(&self, p: &PolyQ) -> NfElem {
        let r = p.rem(&self.0.f);
        let mut coords = r.coeffs().to_vec();
        coords.resize(self.degree(), Rat::zero());
        NfElem { parent: self.clone(), coords }
    }

    pub fn parse_elem(&self, s: &str) -> Result<NfElem, NfError> {
        let p = parse_poly_expr(s, 'a')?;
        Ok(self.elem_from_poly(&p))
    }

    pub fn rational(&self, c: Rat) -> NfElem {
        let mut coords = vec![Rat::zero(); self.degree()];
        coords[0] = c;
        NfElem { parent: self.clone(), coords }
    }

    pub fn integer(&self, n: i64) -> NfElem {
        self.rational(Rat::from_integer(BigInt::from(n)))
    }

    /// The generator a (the residue class of x). In degree 1 this is the
    /// rational root of f, i.e. 0 for f = x.
    pub fn gen(&self) -> NfElem {
        if self.degree() == 1 {
            return self.rational(-self.0.f.coeff(0));
        }
        let mut coords = vec![Rat::zero(); self.degree()];
        coords[1] = Rat::one();
        NfElem { parent: self.clone(), coords }
    }

    fn rep(&self, x: &NfElem) -> PolyQ {
        PolyQ::new(x.coords.clone())
    }

    /// Monic minimal polynomial over Q, found as the first linear dependence
    /// among the powers 1, x, x^2, ...
    pub fn min_poly(&self, x: &NfElem) -> PolyQ {
        let d = self.degree();
        // rows: power index -> coordinates
        let mut powers: Vec<Vec<Rat>> = Vec::with_capacity(d + 1);
        let mut cur = self.one();
        powers.push(cur.coords.clone());
        for _ in 0..d {
            cur = self.mul(&cur, x);
            powers.push(cur.coords.clone());
        }
        for k in 1..=d {
            // solve sum_{i<k} c_i * powers[i] = -powers[k]
            if let Some(cs) = solve_rational(&powers[..k], &powers[k]) {
                let mut coeffs = cs;
                coeffs.push(Rat::one());
                let mp = PolyQ::new(coeffs);
                debug_assert!(self.is_zero(&self.eval_poly(&mp, x)));
                return mp;
            }
        }
        unreachable!("powers of an element are dependent by degree d")
    }

    pub fn eval_poly(&self, p: &PolyQ, x: &NfElem) -> NfElem {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, x), &self.rational(c.clone()));
        }
        acc
    }

    /// Field norm N_{K/Q}(x) = Res(f, rep(x)) for monic f.
    pub fn norm(&self, x: &NfElem) -> Rat {
        let rep = self.rep(x);
        if rep.is_zero() {
            return Rat::zero();
        }
        self.0.f.resultant(&rep).expect("nonzero arguments")
    }

    /// Trace of the multiplication-by-x map.
    pub fn trace(&self, x: &NfElem) -> Rat {
        let d = self.degree();
        let mut tr = Rat::zero();
        for i in 0..d {
            let mut basis = vec![Rat::zero(); d];
            basis[i] = Rat::one();
            let e = NfElem { parent: self.clone(), coords: basis };
            let prod = self.mul(x, &e);
            tr += prod.coords[i].clone();
        }
        tr
    }
}

impl Field for NumberField {
    type Elem = NfElem;

    fn zero(&self) -> NfElem {
        NfElem { parent: self.clone(), coords: vec![Rat::zero(); self.degree()] }
    }

    fn one(&self) -> NfElem {
        self.rational(Rat::one())
    }

    fn from_i64(&self, n: i64) -> NfElem {
        self.integer(n)
    }

    fn add(&self, a: &NfElem, b: &NfElem) -> NfElem {
        assert_eq!(a.parent, *self, "parent mismatch");
        assert_eq!(b.parent, *self, "parent mismatch");
        let coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        NfElem { parent: self.clone(), coords }
    }

    fn sub(&self, a: &NfElem, b: &NfElem) -> NfElem {
        let coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect();
        NfElem { parent: self.clone(), coords }
    }

    fn neg(&self, a: &NfElem) -> NfElem {
        let coords = a.coords.iter().map(|x| -x.clone()).collect();
        NfElem { parent: self.clone(), coords }
    }

    fn mul(&self, a: &NfElem, b: &NfElem) -> NfElem {
        assert_eq!(a.parent, *self, "parent mismatch");
        let prod = self.rep(a).mul(&self.rep(b));
        self.elem_from_poly(&prod)
    }

    fn inv(&self, a: &NfElem) -> Option<NfElem> {
        let rep = self.rep(a);
        if rep.is_zero() {
            return None;
        }
        // s*rep + t*f = 1  =>  s = rep^{-1} mod f
        let (g, s, _) = rep.xgcd(&self.0.f);
        debug_assert_eq!(g.deg(), 0);
        Some(self.elem_from_poly(&s))
    }

    fn is_zero(&self, a: &NfElem) -> bool {
        a.coords.iter().all(|c| c.is_zero())
    }
}

impl NfElem {
    pub fn parent(&self) -> &NumberField {
        &self.parent
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// The rational value of a degree-1 element, or of a constant element.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coords.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Lexicographic comparison of coordinate vectors; used for the
    /// deterministic choice among conjugate roots.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coords.cmp(&other.coords)
    }

    /// lcm of coordinate denominators.
    pub fn denom_lcm(&self) -> BigInt {
        use num_integer::Integer;
        let mut l = BigInt::one();
        for c in &self.coords {
            l = l.lcm(c.denom());
        }
        l
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{}", self)
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.iter().all(|c| c.is_zero()) {
            return write!(fm, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(fm, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(fm, "-")?;
            } else {
                write!(fm, "+")?;
            }
            if i == 0 {
                write!(fm, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(fm, "{}*", mag)?;
                }
                if i == 1 {
                    write!(fm, "a")?;
                } else {
                    write!(fm, "a^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

/// Solves sum c_i rows[i] = target over Q; None if inconsistent.
fn solve_rational(rows: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let k = rows.len();
    let d = target.len();
    // transpose: columns are the row vectors; solve A c = -target
    let mut mat: Vec<Vec<Rat>> = (0..d)
        .map(|j| {
            let mut row: Vec<Rat> = (0..k).map(|i| rows[i][j].clone()).collect();
            row.push(-target[j].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..k {
        let piv = (r..d).find(|&i| !mat[i][c].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => continue,
        };
        mat.swap(r, piv);
        let inv = mat[r][c].clone().recip();
        for j in c..=k {
            mat[r][j] = &mat[r][j] * &inv;
        }
        for i in 0..d {
            if i != r && !mat[i][c].is_zero() {
                let factor = mat[i][c].clone();
                for j in c..=k {
                    let t = &factor * &mat[r][j];
                    mat[i][j] -= t;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == d {
            break;
        }
    }
    // consistency: zero rows must have zero rhs
    for i in r..d {
        if !mat[i][k].is_zero() {
            return None;
        }
    }
    // require full column rank for a unique solution (powers are independent
    // until the first dependence)
    if pivots.len() != k {
        return None;
    }
    let mut sol = vec![Rat::zero(); k];
    for (row, col) in pivots {
        sol[col] = mat[row][k].clone();
    }
    Some(sol)
}
