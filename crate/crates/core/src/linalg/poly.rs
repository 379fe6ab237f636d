//! Univariate polynomials over [`Scalar`], with the handful of algorithms
//! the spectral checks need: characteristic polynomials, gcd, Sturm
//! counting and exact root extraction over ℚ and ℚ(i).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Field, Matrix, Scalar};
use crate::error::{Error, Result};

/// Trial division gives up past this divisor when looking for roots.
const TRIAL_DIVISION_LIMIT: u64 = 10_000_000;

/// Coefficients stored lowest degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Polynomial::new(vec![c])
    }

    /// `∏ (t − rᵢ)`.
    pub fn from_roots(roots: &[Scalar]) -> Self {
        roots.iter().fold(Polynomial::constant(Scalar::one()), |acc, r| {
            acc.mul(&Polynomial::new(vec![-r, Scalar::one()]))
        })
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Scalar::from_int(k as i64))
                .collect(),
        )
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Scalar::zero();
        Polynomial::new(
            (0..n)
                .map(|k| {
                    self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip().expect("leading coefficient is nonzero")),
            None => Polynomial::zero(),
        }
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv_lc = divisor.leading().and_then(Scalar::recip).expect("nonzero lc");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let f = &rem[rem.len() - 1] * &inv_lc;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                let d = &f * c;
                rem[k + j] -= &d;
            }
            quot[k] = f;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Monic gcd; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True iff `gcd(p, p′)` is constant, i.e. no repeated roots over the
    /// algebraic closure.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derivative()).degree() == Some(0))
    }

    fn require_real(&self) -> Result<()> {
        match self.coeffs.iter().find(|c| !c.is_real()) {
            Some(c) => Err(Error::NonReal(c.clone())),
            None => Ok(()),
        }
    }

    /// Canonical Sturm chain `p, p′, −rem(p₀, p₁), …`.
    pub fn sturm_chain(&self) -> Result<Vec<Polynomial>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        self.require_real()?;
        let mut chain = vec![self.clone(), self.derivative()];
        while !chain[chain.len() - 1].is_zero() {
            let n = chain.len();
            let r = chain[n - 2].div_rem(&chain[n - 1]).1.neg();
            chain.push(r);
        }
        chain.pop();
        Ok(chain)
    }

    /// Number of distinct real roots, from sign variations of the Sturm
    /// chain at −∞ and +∞.
    pub fn count_real_roots(&self) -> Result<usize> {
        let chain = self.sturm_chain()?;
        let signs_at = |neg_inf: bool| -> Vec<Ordering> {
            chain
                .iter()
                .map(|p| {
                    let lc = p.leading().expect("chain has no zero entries");
                    let s = lc.real_sign().expect("real coefficients");
                    let odd = p.degree().unwrap_or(0) % 2 == 1;
                    if neg_inf && odd {
                        s.reverse()
                    } else {
                        s
                    }
                })
                .collect()
        };
        Ok(variations(&signs_at(true)) - variations(&signs_at(false)))
    }

    /// The distinct roots, sorted by [`Scalar::cmp_lex`], provided the
    /// polynomial splits into linear factors over `field` (ℚ for `Real`,
    /// ℚ(i) for `Complex`). Otherwise [`Error::IrrationalSpectrum`].
    ///
    /// Works on the squarefree part; uses the integrality of roots of a
    /// monic Gaussian-integer polynomial, so every root is a Gaussian
    /// divisor of the constant term.
    pub fn roots_in_field(&self, field: Field) -> Result<Vec<Scalar>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if field == Field::Real {
            self.require_real()?;
        }
        let g = self.gcd(&self.derivative());
        let mut p = self.div_rem(&g).0.monic();
        let mut roots = Vec::new();
        if p.eval(&Scalar::zero()).is_zero() {
            roots.push(Scalar::zero());
            p = p.div_rem(&Polynomial::from_roots(&[Scalar::zero()])).0;
        }
        let Some(n) = p.degree() else {
            return Err(Error::Invariant("squarefree part vanished".into()));
        };
        if n > 0 {
            roots.extend(nonzero_roots(&p, n, field)?);
        }
        roots.sort_by(Scalar::cmp_lex);
        Ok(roots)
    }
}

fn variations(signs: &[Ordering]) -> usize {
    let nonzero: Vec<_> = signs.iter().filter(|s| **s != Ordering::Equal).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Roots of a monic polynomial with nonzero constant term.
fn nonzero_roots(p: &Polynomial, n: usize, field: Field) -> Result<Vec<Scalar>> {
    // t = s / d turns p into a monic polynomial with Gaussian-integer coefficients.
    let d = p
        .coeffs
        .iter()
        .flat_map(|c| [c.re().denom().clone(), c.im().denom().clone()])
        .fold(BigInt::one(), |acc, x| acc.lcm(&x));
    let ds = Scalar::real(d.clone().into());
    let mut power = Scalar::one();
    let mut scaled = vec![Scalar::zero(); n + 1];
    for k in (0..=n).rev() {
        scaled[k] = &p.coeffs[k] * &power;
        power = &power * &ds;
    }
    let q = Polynomial::new(scaled);
    let c0 = &q.coeffs[0];
    let norm = c0.norm_sqr();
    debug_assert!(norm.is_integer());
    let norm = norm
        .to_integer()
        .to_biguint()
        .ok_or_else(|| Error::Invariant("negative norm".into()))?;

    let mut roots = Vec::new();
    for m in divisors(&norm)? {
        for s in gaussian_with_norm(&m, field) {
            if q.eval(&s).is_zero() {
                roots.push(&s / &ds);
                if roots.len() == n {
                    return Ok(roots);
                }
            }
        }
    }
    Err(Error::IrrationalSpectrum)
}

fn divisors(n: &BigUint) -> Result<Vec<BigUint>> {
    let mut rest = n.clone();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut d = 2u64;
    while BigUint::from(d) * BigUint::from(d) <= rest {
        if d > TRIAL_DIVISION_LIMIT {
            return Err(Error::Invariant(format!(
                "root search: {n} has no small factorization"
            )));
        }
        let db = BigUint::from(d);
        let mut e = 0;
        while (&rest % &db).is_zero() {
            rest /= &db;
            e += 1;
        }
        if e > 0 {
            factors.push((db, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > BigUint::one() {
        factors.push((rest, 1));
    }
    let mut divs = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for base in &divs {
            let mut pk = base.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}

/// Gaussian integers `x + yi` with `x² + y² = m` (real ones only over `Real`).
fn gaussian_with_norm(m: &BigUint, field: Field) -> Vec<Scalar> {
    let to_scalar = |x: &BigInt, y: &BigInt| Scalar::new(x.clone().into(), y.clone().into());
    let exact_sqrt = |v: &BigUint| {
        let r = v.sqrt();
        (&r * &r == *v).then_some(r)
    };
    let mut out = Vec::new();
    if field == Field::Real {
        if let Some(r) = exact_sqrt(m) {
            let r = BigInt::from_biguint(Sign::Plus, r);
            out.push(to_scalar(&r, &BigInt::zero()));
            out.push(to_scalar(&-r, &BigInt::zero()));
        }
        return out;
    }
    let bound = m.sqrt();
    let mut x = BigUint::zero();
    while x <= bound {
        let rest = m - &x * &x;
        if let Some(y) = exact_sqrt(&rest) {
            let xi = BigInt::from_biguint(Sign::Plus, x.clone());
            let yi = BigInt::from_biguint(Sign::Plus, y);
            for sx in [1i32, -1] {
                for sy in [1i32, -1] {
                    if (sx == -1 && xi.is_zero()) || (sy == -1 && yi.is_zero()) {
                        continue;
                    }
                    out.push(to_scalar(&(&xi * sx), &(&yi * sy)));
                }
            }
        }
        x += 1u32;
    }
    out
}

/// Characteristic polynomial `det(t·Id − M)` by the Faddeev–LeVerrier
/// recurrence (exact in characteristic 0).
pub fn char_poly(m: &Matrix) -> Result<Polynomial> {
    let n = m.require_square()?;
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut aux = Matrix::zeros(n, n);
    for k in 1..=n {
        // aux_k = M · aux_{k−1} + c_{n−k+1} · Id
        let mut next = m * &aux;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        let prod = m * &next;
        let trace: Scalar = (0..n).map(|i| prod[(i, i)].clone()).sum();
        coeffs[n - k] = -(&trace / &Scalar::from_int(k as i64));
        aux = next;
    }
    Ok(Polynomial::new(coeffs))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sc;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn char_poly_of_diagonal_and_zero() {
        let p = char_poly(&Matrix::diag(&ints(&[1, 2, 3]))).unwrap();
        assert_eq!(p, Polynomial::from_roots(&ints(&[1, 2, 3])));
        assert_eq!(p, Polynomial::from_ints(&[-6, 11, -6, 1]));
        let z = char_poly(&Matrix::zeros(2, 2)).unwrap();
        assert_eq!(z, Polynomial::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn char_poly_annihilates_eigenvalue() {
        let m = Matrix::from_int_rows(&[[2, 1, 0], [0, 2, 0], [1, 0, 5]]);
        let p = char_poly(&m).unwrap();
        assert_eq!(p, Polynomial::from_roots(&ints(&[2, 2, 5])));
        assert!(p.eval(&sc("5")).is_zero());
    }

    #[test]
    fn squarefree() {
        assert!(!Polynomial::from_ints(&[0, 0, 1]).is_squarefree().unwrap());
        assert!(Polynomial::from_roots(&ints(&[0, 1, 2])).is_squarefree().unwrap());
        assert!(Polynomial::from_ints(&[1, 0, 1]).is_squarefree().unwrap());
        assert_eq!(Polynomial::zero().is_squarefree(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(Polynomial::from_ints(&[1, 0, 1]).count_real_roots().unwrap(), 0);
        assert_eq!(
            Polynomial::from_roots(&ints(&[0, 1, 2])).count_real_roots().unwrap(),
            3
        );
        assert_eq!(Polynomial::from_ints(&[-2, 0, 0, 1]).count_real_roots().unwrap(), 1);
        // repeated roots counted once
        assert_eq!(
            Polynomial::from_roots(&ints(&[1, 1, 3])).count_real_roots().unwrap(),
            2
        );
        assert_eq!(Polynomial::zero().count_real_roots(), Err(Error::ZeroPolynomial));
        let complex = Polynomial::new(vec![sc("0+1i"), sc("1")]);
        assert!(matches!(complex.count_real_roots(), Err(Error::NonReal(_))));
    }

    #[test]
    fn rational_roots() {
        let p = Polynomial::from_roots(&[sc("-3/2"), sc("0"), sc("7"), sc("1/3")]);
        assert_eq!(
            p.roots_in_field(Field::Real).unwrap(),
            vec![sc("-3/2"), sc("0"), sc("1/3"), sc("7")]
        );
        let irrational = Polynomial::from_ints(&[-2, 0, 1]);
        assert_eq!(irrational.roots_in_field(Field::Real), Err(Error::IrrationalSpectrum));
        let rotation = Polynomial::from_ints(&[1, 0, 1]);
        assert_eq!(rotation.roots_in_field(Field::Real), Err(Error::IrrationalSpectrum));
    }

    #[test]
    fn gaussian_roots() {
        let rotation = Polynomial::from_ints(&[1, 0, 1]);
        assert_eq!(
            rotation.roots_in_field(Field::Complex).unwrap(),
            vec![sc("0-1i"), sc("0+1i")]
        );
        let p = Polynomial::from_roots(&[sc("1/2+3i"), sc("-2"), sc("2/3-1/5i")]);
        assert_eq!(
            p.roots_in_field(Field::Complex).unwrap(),
            vec![sc("-2"), sc("1/2+3i"), sc("2/3-1/5i")]
        );
    }
}
