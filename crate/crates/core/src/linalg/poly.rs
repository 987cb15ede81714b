//! Univariate polynomials over an exact field, and the characteristic /
//! minimal polynomials of square maps.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::echelon::determinant;
use super::map::LinearMap;
use super::sparse::SparseVec;
use super::subspace::kernel_of_columns;
use crate::error::Result;
use crate::scalar::{FieldSpec, Scalar};

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_i64(field: FieldSpec, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::new(field, vec![field.one()])
    }

    /// `λ − root`.
    pub fn linear(root: Scalar) -> Self {
        let field = root.field();
        Self::new(field, vec![-root, field.one()])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inv().expect("nonzero leading coefficient");
        Poly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(self.field, vec![]);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(self.field), |acc, _| acc.mul(self))
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        Poly::new(
            self.field,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Poly::new(self.field, vec![]), self.clone());
        }
        let lead_inv = divisor.leading().inv().unwrap();
        let mut quot = vec![self.field.zero(); self.coeffs.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let t = &c * b;
                rem[k + j] -= &t;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(self.field, vec![]);
        }
        self.mul(other).div_rem(&self.gcd(other)).0.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.field,
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * &self.field.from_i64(i as i64)).collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Splits off linear factors over the base field, then groups the rest
    /// into square-free powers. Factors are not guaranteed irreducible.
    pub fn factor(&self) -> Vec<(Poly, usize)> {
        let mut rest = self.monic();
        let mut linear: Vec<(Poly, usize)> = Vec::new();
        for root in candidate_roots(&rest) {
            let lin = Poly::linear(root);
            let mut mult = 0;
            loop {
                let (q, r) = rest.div_rem(&lin);
                if !r.is_zero() || rest.degree() == 0 {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                linear.push((lin, mult));
            }
        }
        let mut out = Vec::new();
        if rest.degree() > 0 {
            let squarefree_ok = match self.field.characteristic() {
                0 => true,
                p => (rest.degree() as u64) < p,
            };
            if squarefree_ok {
                out.extend(yun(&rest));
            } else {
                out.push((rest, 1));
            }
        }
        out.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()));
        linear.sort_by(|(a, _), (b, _)| {
            let ra = -a.coeffs[0].as_rational();
            let rb = -b.coeffs[0].as_rational();
            ra.cmp(&rb)
        });
        out.extend(linear);
        out
    }

    /// Product form such as `(λ²+1)²(λ+1)⁴(λ−1)⁸`.
    pub fn factored_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        let lead = self.leading();
        if !lead.is_one() {
            s.push_str(&lead.to_string());
        }
        for (p, m) in self.factor() {
            s.push('(');
            s.push_str(&p.to_string());
            s.push(')');
            if m > 1 {
                s.push_str(&superscript(m));
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(Scalar::to_string).collect()
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

impl fmt::Display for Poly {
    /// Descending powers of λ, no spaces, `−` for minus: `λ²−3λ+1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative_repr();
            let abs = if neg { -c.clone() } else { c.clone() };
            if neg {
                write!(f, "−")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "λ".to_string(),
                _ => format!("λ{}", superscript(i)),
            };
            if i == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            write!(f, "{mono}")?;
        }
        Ok(())
    }
}

/// Yun's square-free decomposition of a monic polynomial (char 0 or degree < p).
fn yun(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let fp = f.derivative();
    let mut a = f.gcd(&fp);
    let mut b = f.div_rem(&a).0;
    let mut c = fp.div_rem(&a).0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree() > 0 {
        a = b.gcd(&d);
        if a.degree() > 0 {
            out.push((a.monic(), i));
        }
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

/// Rational-root-theorem candidates over ℚ; all residues over small 𝔽_p.
fn candidate_roots(f: &Poly) -> Vec<Scalar> {
    let field = f.field();
    match field {
        FieldSpec::PrimeField(p) if p <= 100_000 => (0..p as i64).map(|r| field.from_i64(r)).collect(),
        FieldSpec::PrimeField(_) => vec![field.zero()],
        FieldSpec::Rationals => {
            // scale to integer coefficients
            let l = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.as_rational().denom()));
            let ints: Vec<BigInt> =
                f.coeffs().iter().map(|c| c.as_rational().numer() * (&l / c.as_rational().denom())).collect();
            let mut cands = vec![field.zero()];
            let Some(first_nonzero) = ints.iter().find(|c| !c.is_zero()) else {
                return cands;
            };
            let (Some(a0), Some(an)) = (first_nonzero.abs().to_u64(), ints.last().unwrap().abs().to_u64()) else {
                return cands;
            };
            if a0 > 1_000_000 || an > 1_000_000 {
                return cands;
            }
            for p in divisors(a0) {
                for q in divisors(an) {
                    for s in [1i64, -1] {
                        let r = field
                            .from_ratio(&BigInt::from(s * p as i64), &BigInt::from(q))
                            .expect("nonzero denominator");
                        if !cands.contains(&r) {
                            cands.push(r);
                        }
                    }
                }
            }
            cands
        }
    }
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|k| n % k == 0).collect()
}

/// Monic `det(λ·1 − f)` by the division-free Berkowitz recurrence.
pub fn char_poly(f: &LinearMap) -> Result<Poly> {
    f.require_square()?;
    let field = f.field();
    let a = f.to_dense_rows();
    let n = a.len();
    // descending coefficients of the characteristic polynomial of the leading r×r block
    let mut v: Vec<Scalar> = vec![field.one()];
    for r in 0..n {
        // column t of the Toeplitz matrix: 1, −a_rr, −R·A_r^k·C
        let mut t = vec![field.one(), -a[r][r].clone()];
        let mut col: Vec<Scalar> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let rc = (0..r).fold(field.zero(), |acc, j| &acc + &(&a[r][j] * &col[j]));
            t.push(-rc);
            col = (0..r)
                .map(|i| (0..r).fold(field.zero(), |acc, j| &acc + &(&a[i][j] * &col[j])))
                .collect();
        }
        let mut next = vec![field.zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                if i >= j && i - j < t.len() {
                    *slot += &(&t[i - j] * vj);
                }
            }
        }
        v = next;
    }
    v.reverse();
    Ok(Poly::new(field, v))
}

pub fn det(f: &LinearMap) -> Result<Scalar> {
    f.require_square()?;
    Ok(determinant(f.field(), &f.to_dense_rows()))
}

/// Least-degree monic annihilator, as the lcm of the Krylov annihilators of
/// the basis vectors.
pub fn min_poly(f: &LinearMap) -> Result<Poly> {
    f.require_square()?;
    let field = f.field();
    let n = f.rows();
    let mut acc = Poly::one(field);
    for i in 0..n {
        let mut krylov = vec![SparseVec::unit(i, field)];
        loop {
            let next = f.apply(krylov.last().unwrap());
            krylov.push(next);
            let k = krylov.len();
            let kernel = kernel_of_columns(field, k, krylov.clone());
            if kernel.dim() > 0 {
                let rel = kernel.vectors()[0].to_dense(k, field);
                let p = Poly::new(field, rel).monic();
                acc = acc.lcm(&p);
                break;
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn rectangular_maps_have_no_char_poly() {
        let m = LinearMap::zero(q(), 2, 2, 1);
        assert!(matches!(char_poly(&m), Err(crate::Error::NotSquare { rows: 2, cols: 4 })));
        assert!(matches!(det(&m), Err(crate::Error::NotSquare { .. })));
    }

    #[test]
    fn identity_polys() {
        let id = LinearMap::identity(q(), 2, 1);
        // (λ−1)² = λ² − 2λ + 1
        assert_eq!(char_poly(&id).unwrap(), Poly::from_i64(q(), &[1, -2, 1]));
        assert_eq!(min_poly(&id).unwrap(), Poly::from_i64(q(), &[-1, 1]));
    }

    #[test]
    fn nilpotent_jordan_block() {
        let n = LinearMap::from_rows(q(), 2, 1, 1, &[vec![q().zero(), q().one()], vec![q().zero(), q().zero()]]).unwrap();
        assert_eq!(min_poly(&n).unwrap(), Poly::from_i64(q(), &[0, 0, 1]));
        assert_eq!(char_poly(&n).unwrap(), Poly::from_i64(q(), &[0, 0, 1]));
    }

    #[test]
    fn swap_char_poly_matches_cofactor_expansion() {
        // independent oracle: Laplace expansion of det(λI − τ) at several λ
        fn laplace(m: &[Vec<Scalar>], f: FieldSpec) -> Scalar {
            if m.len() == 1 {
                return m[0][0].clone();
            }
            let mut acc = f.zero();
            for j in 0..m.len() {
                let minor: Vec<Vec<Scalar>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect()).collect();
                let term = &m[0][j] * &laplace(&minor, f);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        let tau = LinearMap::swap(q(), 2);
        let cp = char_poly(&tau).unwrap();
        let rows = tau.to_dense_rows();
        for lam in -3..=3 {
            let l = q().from_i64(lam);
            let m: Vec<Vec<Scalar>> = (0..4)
                .map(|i| (0..4).map(|j| if i == j { &l - &rows[i][j] } else { -rows[i][j].clone() }).collect())
                .collect();
            assert_eq!(cp.eval(&l), laplace(&m, q()));
        }
        let expected = Poly::linear(q().one()).pow(3).mul(&Poly::linear(q().from_i64(-1)));
        assert_eq!(cp, expected);
    }

    #[test]
    fn factor_display() {
        let p = Poly::from_i64(q(), &[1, 0, 1])
            .pow(2)
            .mul(&Poly::linear(q().from_i64(-1)).pow(4))
            .mul(&Poly::linear(q().one()).pow(8));
        assert_eq!(p.factored_string(), "(λ²+1)²(λ+1)⁴(λ−1)⁸");
        assert_eq!(Poly::from_i64(q(), &[1, -2, 1]).to_string(), "λ²−2λ+1");
    }

    #[test]
    fn gcd_and_lcm() {
        let a = Poly::linear(q().one()).mul(&Poly::linear(q().from_i64(2)));
        let b = Poly::linear(q().one()).mul(&Poly::linear(q().from_i64(3)));
        assert_eq!(a.gcd(&b), Poly::linear(q().one()));
        assert_eq!(a.lcm(&b).degree(), 3);
    }
}
