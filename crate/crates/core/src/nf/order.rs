//! Dedekind's criterion and the Pohst-Zassenhaus radical-multiplier
//! iteration (Round 2) computing p-maximal orders, feeding exact field
//! discriminants.

use crate::arith::{factor_int, factor_mod_p, PolyModP, PolyQ, PolyZ, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Basis of an order containing Z[a]: rows of `mat`/`den` are the basis
/// elements in power-basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderBasis {
    pub mat: Vec<Vec<BigInt>>,
    pub den: BigInt,
}

impl OrderBasis {
    pub fn identity(d: usize) -> Self {
        OrderBasis { mat: ident(d), den: BigInt::one() }
    }

    pub fn is_identity(&self) -> bool {
        self.den.is_one() && self.mat == ident(self.mat.len())
    }

    pub fn degree(&self) -> usize {
        self.mat.len()
    }

    /// Index [O : Z(a)] = den^d / det(mat); always a positive integer.
    pub fn index(&self) -> BigInt {
        let d = self.degree();
        let det = det_bareiss(self.mat.clone()).abs();
        let num = pow_big(&self.den, d);
        let (q, r) = num.div_rem(&det);
        assert!(r.is_zero(), "order basis index is not integral");
        q
    }

    pub fn basis_rows(&self) -> Vec<Vec<Rat>> {
        self.mat
            .iter()
            .map(|row| row.iter().map(|c| Rat::new(c.clone(), self.den.clone())).collect())
            .collect()
    }
}

fn ident(d: usize) -> Vec<Vec<BigInt>> {
    (0..d)
        .map(|i| (0..d).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn pow_big(c: &BigInt, e: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= c;
    }
    acc
}

// --- integer/rational matrix helpers (d <= 8, nothing fancy needed) -------

fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = t.div_rem(&prev);
                debug_assert!(r.is_zero());
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Row Hermite normal form of a full-column-rank stack; returns the d x d
/// upper-triangular basis with positive diagonal and reduced off-diagonals.
fn hnf(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let d = rows[0].len();
    let mut row = 0usize;
    for col in 0..d {
        loop {
            let mut nonzero: Vec<usize> =
                (row..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
            if nonzero.is_empty() {
                panic!("hnf: stack not of full column rank");
            }
            if nonzero.len() == 1 {
                let i = nonzero[0];
                rows.swap(row, i);
                break;
            }
            nonzero.sort_by_key(|&i| rows[i][col].abs());
            let a = nonzero[0];
            for &b in &nonzero[1..] {
                let q = &rows[b][col] / &rows[a][col];
                for j in 0..d {
                    let t = &q * &rows[a][j];
                    rows[b][j] -= t;
                }
            }
        }
        if rows[row][col].is_negative() {
            for j in 0..d {
                rows[row][j] = -rows[row][j].clone();
            }
        }
        // reduce the entries above the pivot into [0, pivot)
        for i in 0..row {
            let q = rows[i][col].div_floor(&rows[row][col]);
            if !q.is_zero() {
                for j in 0..d {
                    let t = &q * &rows[row][j];
                    rows[i][j] -= t;
                }
            }
        }
        row += 1;
    }
    rows.truncate(row);
    rows
}

fn rat_mat_inverse(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular matrix");
        a.swap(col, piv);
        inv.swap(col, piv);
        let s = a[col][col].clone().recip();
        for j in 0..n {
            a[col][j] = &a[col][j] * &s;
            inv[col][j] = &inv[col][j] * &s;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t1 = &f * &a[col][j];
                    a[r][j] -= t1;
                    let t2 = &f * &inv[col][j];
                    inv[r][j] -= t2;
                }
            }
        }
    }
    inv
}

/// Basis of {v : v M = 0} over F_p, via row reduction of [M | I].
fn fp_left_kernel(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    use crate::arith::{invm, mulm};
    let n = m.len();
    let cols = if n == 0 { 0 } else { m[0].len() };
    let mut aug: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut row = m[i].clone();
            row.extend((0..n).map(|j| u64::from(j == i)));
            row
        })
        .collect();
    let mut rank_row = 0usize;
    for col in 0..cols {
        let piv = (rank_row..n).find(|&r| aug[r][col] % p != 0);
        let piv = match piv {
            Some(r) => r,
            None => continue,
        };
        aug.swap(rank_row, piv);
        let s = invm(aug[rank_row][col] % p, p);
        for j in 0..cols + n {
            aug[rank_row][j] = mulm(aug[rank_row][j] % p, s, p);
        }
        for r in 0..n {
            if r != rank_row && aug[r][col] % p != 0 {
                let f = aug[r][col] % p;
                for j in 0..cols + n {
                    let t = mulm(f, aug[rank_row][j] % p, p);
                    aug[r][j] = (aug[r][j] % p + p - t) % p;
                }
            }
        }
        rank_row += 1;
    }
    aug[rank_row..]
        .iter()
        .map(|row| row[cols..].iter().map(|&c| c % p).collect())
        .collect()
}

// ---------------------------------------------------------------------------

fn poly_to_polyz(f: &PolyQ) -> PolyZ {
    PolyZ::new(f.coeffs().iter().map(|c| c.to_integer()).collect())
}

/// Dedekind's criterion: true iff Z[a] is p-maximal in the maximal order.
pub fn dedekind_p_maximal(f: &PolyQ, p: u64) -> bool {
    assert!(f.is_monic() && f.has_integer_coeffs());
    let fz = poly_to_polyz(f);
    let fp = PolyModP::from_bigint_coeffs(p, fz.coeffs());
    let factors = factor_mod_p(&fp, crate::DEFAULT_SEED);
    let mut g_bar = PolyModP::one(p);
    let mut h_bar = PolyModP::one(p);
    for (gi, e) in &factors {
        g_bar = g_bar.mul(gi);
        for _ in 1..*e {
            h_bar = h_bar.mul(gi);
        }
    }
    let lift = |q: &PolyModP| PolyZ::new(q.coeffs().iter().map(|&c| BigInt::from(c)).collect());
    let g = lift(&g_bar);
    let h = lift(&h_bar);
    let gh = g.mul(&h);
    let num = PolyZ::new(
        (0..gh.coeffs().len().max(fz.coeffs().len()))
            .map(|i| gh.coeff(i) - fz.coeff(i))
            .collect(),
    );
    let t = num.div_int_exact(&BigInt::from(p));
    let t_bar = PolyModP::from_bigint_coeffs(p, t.coeffs());
    let d = t_bar.gcd(&g_bar).gcd(&h_bar);
    d.is_zero() || d.deg() == 0
}

/// One Pohst-Zassenhaus run: the p-maximal order containing Z[a], as an
/// iterated radical/multiplier fixpoint.
pub fn p_maximal_order(f: &PolyQ, p: u64) -> OrderBasis {
    assert!(f.is_monic() && f.has_integer_coeffs());
    let d = f.deg();
    let p_big = BigInt::from(p);
    let disc = f.discriminant().to_integer();
    let mut vp = 0usize;
    let mut tmp = disc.clone();
    while !tmp.is_zero() && (&tmp % &p_big).is_zero() {
        tmp /= &p_big;
        vp += 1;
    }
    if vp < 2 {
        return OrderBasis::identity(d);
    }

    let mut order = OrderBasis::identity(d);
    for _round in 0..=vp {
        let next = round2_step(f, p, &order);
        if next == order {
            return order;
        }
        order = next;
    }
    panic!("p-maximal order iteration exceeded the discriminant valuation bound");
}

fn round2_step(f: &PolyQ, p: u64, order: &OrderBasis) -> OrderBasis {
    let d = f.deg();
    let p_big = BigInt::from(p);
    let basis: Vec<PolyQ> = order
        .mat
        .iter()
        .map(|row| {
            PolyQ::new(row.iter().map(|c| Rat::new(c.clone(), order.den.clone())).collect())
        })
        .collect();
    let basis_rat: Vec<Vec<Rat>> = order.basis_rows();
    let binv = rat_mat_inverse(&basis_rat);

    // structure constants: b_i b_j in order coordinates (integral because
    // the order is closed under multiplication)
    let coords_in_order = |v: &PolyQ| -> Vec<BigInt> {
        let mut coords = v.coeffs().to_vec();
        coords.resize(d, Rat::zero());
        (0..d)
            .map(|j| {
                let mut acc = Rat::zero();
                for (i, ci) in coords.iter().enumerate() {
                    acc += ci * &binv[i][j];
                }
                assert!(acc.is_integer(), "order not multiplicatively closed");
                acc.to_integer()
            })
            .collect()
    };
    let mut mult = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in i..d {
            let prod = basis[i].mul(&basis[j]).rem(f);
            let c = coords_in_order(&prod);
            mult[i][j] = c.clone();
            mult[j][i] = c;
        }
    }
    let mult_p: Vec<Vec<Vec<u64>>> = mult
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.iter().map(|c| c.mod_floor(&p_big).to_u64().unwrap()).collect())
                .collect()
        })
        .collect();

    let mul_alg = |u: &[u64], v: &[u64]| -> Vec<u64> {
        use crate::arith::mulm;
        let mut out = vec![0u64; d];
        for i in 0..d {
            if u[i] == 0 {
                continue;
            }
            for j in 0..d {
                if v[j] == 0 {
                    continue;
                }
                let c = mulm(u[i], v[j], p);
                for (o, m) in out.iter_mut().zip(&mult_p[i][j]) {
                    *o = (*o + mulm(c, *m, p)) % p;
                }
            }
        }
        out
    };

    // Frobenius power x -> x^(p^m) with p^m >= d: an F_p-linear map whose
    // kernel is the p-radical of O/pO
    let mut pm = 1u32;
    {
        let mut q = p;
        while (q as usize) < d {
            q = q.saturating_mul(p);
            pm += 1;
        }
    }
    let exponent = num_bigint::BigUint::from(p).pow(pm);
    let alg_pow = |e0: &[u64]| -> Vec<u64> {
        let mut acc = vec![0u64; d];
        // represent 1 in order coordinates: solve from basis (1 = e_row such
        // that row of B equals unit) -- compute via coords_in_order(1)
        let one = coords_in_order(&PolyQ::one());
        for (a, o) in acc.iter_mut().zip(&one) {
            *a = o.mod_floor(&p_big).to_u64().unwrap();
        }
        let mut base = e0.to_vec();
        for i in 0..exponent.bits() {
            if exponent.bit(i) {
                acc = mul_alg(&acc, &base);
            }
            base = mul_alg(&base, &base);
        }
        acc
    };

    let phi: Vec<Vec<u64>> = (0..d)
        .map(|i| {
            let mut e = vec![0u64; d];
            e[i] = 1;
            alg_pow(&e)
        })
        .collect();
    let radical_gens = fp_left_kernel(&phi, p);

    // I = pO + <radical lifts> as a sublattice of O (order coordinates)
    let mut stack: Vec<Vec<BigInt>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { p_big.clone() } else { BigInt::zero() }).collect())
        .collect();
    for g in &radical_gens {
        stack.push(g.iter().map(|&c| BigInt::from(c)).collect());
    }
    let t = hnf(stack);

    // multiplier condition: y * v_k lands in p*I for every I-basis row v_k
    let t_rat: Vec<Vec<Rat>> =
        t.iter().map(|row| row.iter().map(|c| Rat::from_integer(c.clone())).collect()).collect();
    let tinv = rat_mat_inverse(&t_rat);
    let mut cond_cols: Vec<Vec<u64>> = vec![Vec::new(); d];
    for vk in &t {
        // M_k[i] = coords_O(b_i * v_k) = sum_j vk[j] mult[i][j]
        for (i, cond) in cond_cols.iter_mut().enumerate() {
            let mut coords = vec![BigInt::zero(); d];
            for (j, vkj) in vk.iter().enumerate() {
                if vkj.is_zero() {
                    continue;
                }
                for (c, m) in coords.iter_mut().zip(&mult[i][j]) {
                    *c += vkj * m;
                }
            }
            // express in I coordinates (integral since I is an ideal)
            for col in 0..d {
                let mut acc = Rat::zero();
                for (r, coord) in coords.iter().enumerate() {
                    acc += Rat::from_integer(coord.clone()) * &tinv[r][col];
                }
                assert!(acc.is_integer(), "radical is not an ideal of the order");
                cond.push(acc.to_integer().mod_floor(&p_big).to_u64().unwrap());
            }
        }
    }
    let multiplier_kernel = fp_left_kernel(&cond_cols, p);

    if multiplier_kernel.is_empty() {
        return order.clone();
    }

    // O' = O + (1/p) * kernel lifts (in power-basis coordinates)
    let mut new_stack: Vec<Vec<BigInt>> =
        order.mat.iter().map(|row| row.iter().map(|c| c * &p_big).collect()).collect();
    for y in &multiplier_kernel {
        // y in order coordinates -> power-basis numerator over den
        let mut row = vec![BigInt::zero(); d];
        for (i, &yi) in y.iter().enumerate() {
            if yi == 0 {
                continue;
            }
            let yi = BigInt::from(yi);
            for (r, m) in row.iter_mut().zip(&order.mat[i]) {
                *r += &yi * m;
            }
        }
        new_stack.push(row);
    }
    let new_mat = hnf(new_stack);
    let new_den = &order.den * &p_big;
    // normalize the common factor
    let mut g = new_den.clone();
    for row in &new_mat {
        for c in row {
            g = g.gcd(c);
        }
    }
    let mat = new_mat.iter().map(|row| row.iter().map(|c| c / &g).collect()).collect();
    OrderBasis { mat, den: new_den / g }
}

/// Discriminant of the maximal order: disc(f) / index^2, refining at every
/// prime whose square divides disc(f).
pub fn field_discriminant(k: &super::NumberField) -> BigInt {
    let f = k.defining_poly();
    if k.degree() == 1 {
        return BigInt::one();
    }
    let disc = k.poly_disc().clone();
    let mut index = BigInt::one();
    for (p, e) in factor_int(&disc) {
        if e < 2 {
            continue;
        }
        let p_u = p.to_u64().expect("discriminant prime fits in u64");
        let order = p_maximal_order(f, p_u);
        index *= order.index();
    }
    disc / (&index * &index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nf::NumberField;

    fn poly(cs: &[i64]) -> PolyQ {
        PolyQ::from_int_coeffs(cs)
    }

    #[test]
    fn dedekind_examples() {
        let f = poly(&[-5, 0, 1]); // x^2 - 5
        assert!(!dedekind_p_maximal(&f, 2));
        assert!(dedekind_p_maximal(&f, 5));
        assert!(dedekind_p_maximal(&f, 3)); // 3 does not divide disc = 20
    }

    #[test]
    fn golden_ratio_order_at_two() {
        let f = poly(&[-5, 0, 1]);
        let o = p_maximal_order(&f, 2);
        // basis {1, (1+a)/2}
        assert_eq!(o.den, BigInt::from(2));
        assert_eq!(o.index(), BigInt::from(2));
        // (1+a)/2 satisfies t^2 - t - 1
        let k = NumberField::new(f, None).unwrap();
        use crate::field::Field;
        let half = Rat::new(1.into(), 2.into());
        let w = k.elem_from_coords(vec![half.clone(), half]);
        assert_eq!(k.min_poly(&w), poly(&[-1, -1, 1]));
    }

    #[test]
    fn identity_when_p_unramified() {
        let f = poly(&[1, 1, -1, -1, 1]);
        // disc(f) = 3^2 * 13: only p = 3 can be non-maximal
        assert!(p_maximal_order(&f, 7).is_identity());
    }

    #[test]
    fn quartic_117_order_at_three() {
        // disc(Q(a)) = 117 = 3^2 * 13 for x^4 - x^3 - x^2 + x + 1
        let f = poly(&[1, 1, -1, -1, 1]);
        let disc_f = f.discriminant().to_integer();
        let o = p_maximal_order(&f, 3);
        let idx = o.index();
        let field_disc = &disc_f / (&idx * &idx);
        let mut v3 = 0;
        let mut t = field_disc.clone();
        while (&t % BigInt::from(3)).is_zero() {
            t /= BigInt::from(3);
            v3 += 1;
        }
        assert_eq!(v3, 2);
    }

    #[test]
    fn field_discriminants_known_fields() {
        for (cs, want) in [
            (vec![1i64, 1, -1, -1, 1], 117i64),
            (vec![1, 0, -1, 0, 1], 144),
            (vec![1, -1, 1, -1, 1], 125),
            (vec![1, 2, 0, -1, 1], 189),
            // disc(f) = 900 here, but (1 + a^3)/2 is integral (root of
            // x^2 + x - 1), so the index is 2 and the field disc is 225
            (vec![1, 1, 2, -1, 1], 225),
            (vec![1, 0, 3, 0, 1], 400),
            (vec![4, -2, -1, -1, 1], 1764),
            (vec![1, -1, 0, 1, -1, 1], 1649),
            (vec![1, 1, -1, -1, 0, 1], 1609),
            (vec![1, 1, -2, 1, -1, 1], 1777),
            (vec![1, -2, 2, -2, 2, -1, 1], -10051),
            (vec![1, -1, 0, 2, -1, -1, 1], -10571),
            (vec![1, -3, 4, -2, 1, -1, 1], -9747),
            (vec![1, 0, 1, -2, 1, -1, 1], -14283),
            (vec![1, 0, 2, 0, 1, 0, 1], -33856),
            (vec![1, 2, 0, -2, -1, 0, 1], -10816),
        ] {
            let k = NumberField::new(poly(&cs), None).unwrap();
            assert_eq!(field_discriminant(&k), BigInt::from(want), "poly {:?}", cs);
        }
    }

    #[test]
    fn half_integral_witness_in_disc_225_field() {
        // the quartic x^4 - x^3 + 2x^2 + x + 1 has poly disc 900 and a
        // genuine index-2 element, pinning the field disc at 225
        let f = poly(&[1, 1, 2, -1, 1]);
        assert_eq!(f.discriminant(), Rat::from_integer(BigInt::from(900)));
        let k = NumberField::new(f, None).unwrap();
        let half = Rat::new(1.into(), 2.into());
        let w = k.elem_from_coords(vec![half.clone(), Rat::zero(), Rat::zero(), half]);
        let mp = k.min_poly(&w);
        assert_eq!(mp, poly(&[-1, 1, 1]));
        assert!(mp.is_monic() && mp.has_integer_coeffs());
    }

    #[test]
    fn disc_sign_matches_signature() {
        for cs in [vec![1i64, 1, -1, -1, 1], vec![-1, 3, 3, -4, -1, 1], vec![1, -1, 2, -3, 2, -1, 1]] {
            let k = NumberField::new(poly(&cs), None).unwrap();
            let disc = field_discriminant(&k);
            let (_, s) = k.signature();
            let expect_negative = s % 2 == 1;
            assert_eq!(disc.is_negative(), expect_negative);
            // quotient disc(f)/disc(K) is a perfect square
            let q = k.poly_disc() / &disc;
            let r = q.sqrt();
            assert_eq!(&r * &r, q);
        }
    }

    #[test]
    fn dedekind_agrees_with_round2() {
        for cs in [
            vec![-5i64, 0, 1],
            vec![1, 1, -1, -1, 1],
            vec![1, 0, -1, 0, 1],
            vec![1, -1, 1, -1, 1],
            vec![4, -2, -1, -1, 1],
            vec![1, 0, 3, 0, 1],
        ] {
            let f = poly(&cs);
            let disc = f.discriminant().to_integer();
            for (p, e) in factor_int(&disc) {
                if e < 2 {
                    continue;
                }
                let p = p.to_u64().unwrap();
                let maximal = dedekind_p_maximal(&f, p);
                let order = p_maximal_order(&f, p);
                assert_eq!(maximal, order.is_identity(), "p = {} f = {:?}", p, cs);
            }
        }
    }
}
