use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::qt::QtPoly;

/// Element of the fraction field of integer polynomials in q and t.
///
/// Always kept in canonical form: gcd(num, den) = 1 (integer content
/// included), the denominator's leading coefficient is positive, and zero is
/// 0/1. Equality is therefore plain structural equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QtRat {
    num: QtPoly,
    den: QtPoly,
}

impl QtRat {
    pub fn new(num: QtPoly, den: QtPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(QtRat::zero());
        }
        if den.is_one() {
            return Ok(QtRat {
                num,
                den: QtPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        Ok(Self::sign_normalized(num, den))
    }

    /// num and den already coprime; fix the sign convention only.
    fn sign_normalized(num: QtPoly, den: QtPoly) -> Self {
        debug_assert!(
            num.gcd(&den).is_one(),
            "non-canonical fraction: gcd({num}, {den}) != 1"
        );
        if den.leading_coeff().is_negative() {
            QtRat {
                num: num.neg(),
                den: den.neg(),
            }
        } else {
            QtRat { num, den }
        }
    }

    pub fn zero() -> Self {
        QtRat {
            num: QtPoly::zero(),
            den: QtPoly::one(),
        }
    }

    pub fn one() -> Self {
        QtRat {
            num: QtPoly::one(),
            den: QtPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QtRat {
            num: QtPoly::from_int(n),
            den: QtPoly::one(),
        }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        QtRat {
            num: QtPoly::from_bigint(n),
            den: QtPoly::one(),
        }
    }

    pub fn from_poly(p: QtPoly) -> Self {
        QtRat {
            num: p,
            den: QtPoly::one(),
        }
    }

    pub fn q() -> Self {
        QtRat::from_poly(QtPoly::q())
    }

    pub fn t() -> Self {
        QtRat::from_poly(QtPoly::t())
    }

    /// q^k for any integer k, negative powers landing in the denominator.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            QtRat::from_poly(QtPoly::monomial(k as u32, 0, BigInt::from(1)))
        } else {
            QtRat {
                num: QtPoly::one(),
                den: QtPoly::monomial((-k) as u32, 0, BigInt::from(1)),
            }
        }
    }

    pub fn t_pow(k: i64) -> Self {
        if k >= 0 {
            QtRat::from_poly(QtPoly::monomial(0, k as u32, BigInt::from(1)))
        } else {
            QtRat {
                num: QtPoly::one(),
                den: QtPoly::monomial(0, (-k) as u32, BigInt::from(1)),
            }
        }
    }

    pub fn num(&self) -> &QtPoly {
        &self.num
    }

    pub fn den(&self) -> &QtPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The underlying polynomial when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&QtPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn add(&self, other: &QtRat) -> QtRat {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // Henrici's scheme: only gcds against the common factor of the
        // denominators are needed to stay in lowest terms.
        let g1 = self.den.gcd(&other.den);
        if g1.is_one() {
            let num = self
                .num
                .mul(&other.den)
                .add(&other.num.mul(&self.den));
            if num.is_zero() {
                return QtRat::zero();
            }
            return Self::sign_normalized(num, self.den.mul(&other.den));
        }
        let d2g = other.den.exact_div(&g1).expect("gcd divides");
        let d1g = self.den.exact_div(&g1).expect("gcd divides");
        let t = self.num.mul(&d2g).add(&other.num.mul(&d1g));
        if t.is_zero() {
            return QtRat::zero();
        }
        let g2 = t.gcd(&g1);
        if g2.is_one() {
            Self::sign_normalized(t, d1g.mul(&other.den))
        } else {
            Self::sign_normalized(
                t.exact_div(&g2).expect("gcd divides"),
                d1g.mul(&other.den.exact_div(&g2).expect("gcd divides")),
            )
        }
    }

    pub fn sub(&self, other: &QtRat) -> QtRat {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QtRat {
        QtRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &QtRat) -> QtRat {
        if self.is_zero() || other.is_zero() {
            return QtRat::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let n2 = other.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let d2 = other.den.exact_div(&g1).expect("gcd divides");
        Self::sign_normalized(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn div(&self, other: &QtRat) -> Result<QtRat> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn inv(&self) -> Result<QtRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::sign_normalized(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i64) -> Result<QtRat> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = QtRat::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

impl fmt::Display for QtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

macro_rules! ref_binop {
    ($trait:ident, $method:ident, $impl_method:ident) => {
        impl $trait<&QtRat> for &QtRat {
            type Output = QtRat;
            fn $method(self, rhs: &QtRat) -> QtRat {
                self.$impl_method(rhs)
            }
        }
    };
}

ref_binop!(Add, add, add);
ref_binop!(Sub, sub, sub);
ref_binop!(Mul, mul, mul);

impl Div<&QtRat> for &QtRat {
    type Output = QtRat;
    fn div(self, rhs: &QtRat) -> QtRat {
        self.div(rhs).expect("division by zero")
    }
}

impl Neg for &QtRat {
    type Output = QtRat;
    fn neg(self) -> QtRat {
        QtRat::neg(self)
    }
}

/// Finite product (a; base)_n = (1 - a)(1 - base a) ... (1 - base^{n-1} a),
/// with (a; base)_0 = 1.
pub fn pochhammer(a: &QtRat, base: &QtRat, n: usize) -> QtRat {
    let one = QtRat::one();
    let mut acc = QtRat::one();
    let mut shifted = a.clone();
    for _ in 0..n {
        acc = acc.mul(&one.sub(&shifted));
        shifted = shifted.mul(base);
    }
    acc
}

/// Gaussian binomial coefficient at the given base:
/// (base; base)_n / ((base; base)_k (base; base)_{n-k}).
pub fn qbinom(n: usize, k: usize, base: &QtRat) -> Result<QtRat> {
    if k > n {
        return Err(Error::BinomialRange { n, k });
    }
    let top = pochhammer(base, base, n);
    let bottom = pochhammer(base, base, k).mul(&pochhammer(base, base, n - k));
    top.div(&bottom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> QtPoly {
        s.parse().unwrap()
    }

    fn rat(num: &str, den: &str) -> QtRat {
        QtRat::new(poly(num), poly(den)).unwrap()
    }

    #[test]
    fn reduction_on_construction() {
        // (1-q^2)/(1-q) reduces to 1+q
        let r = rat("1 - q^2", "1 - q");
        assert_eq!(r, QtRat::from_poly(poly("1 + q")));
    }

    #[test]
    fn additive_identity() {
        let a = rat("1 - q*t", "1 + t");
        assert_eq!(a.add(&QtRat::zero()), a);
    }

    #[test]
    fn product_expansion() {
        // (1-t)(1-qt) = 1 - t - qt + qt^2
        let a = QtRat::from_poly(poly("1 - t"));
        let b = QtRat::from_poly(poly("1 - q*t"));
        assert_eq!(a.mul(&b), QtRat::from_poly(poly("1 - t - q*t + q*t^2")));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(QtRat::one().div(&QtRat::zero()).is_err());
        assert!(QtRat::new(QtPoly::one(), QtPoly::zero()).is_err());
    }

    #[test]
    fn denominator_sign_convention() {
        // 1/(q-1) has negative-leading denominator after naive construction
        let r = QtRat::new(poly("1"), poly("1 - q")).unwrap();
        assert_eq!(r.num(), &poly("-1"));
        assert_eq!(r.den(), &poly("-1 + q"));
    }

    #[test]
    fn pochhammer_base_cases() {
        let a = rat("q", "1 + t");
        assert!(pochhammer(&a, &QtRat::q(), 0).is_one());
        // (a;q)_2 = (1-a)(1-qa)
        let expected = QtRat::one()
            .sub(&a)
            .mul(&QtRat::one().sub(&QtRat::q().mul(&a)));
        assert_eq!(pochhammer(&a, &QtRat::q(), 2), expected);
        // single factor with inverse powers: (q^-1; t^-1)_1 = 1 - q^-1
        let got = pochhammer(&QtRat::q_pow(-1), &QtRat::t_pow(-1), 1);
        assert_eq!(got, rat("-1 + q", "q"));
    }

    #[test]
    fn qbinom_small_values() {
        let t = QtRat::t();
        assert_eq!(qbinom(2, 1, &t).unwrap(), QtRat::from_poly(poly("1 + t")));
        assert_eq!(qbinom(3, 1, &t).unwrap(), QtRat::from_poly(poly("1 + t + t^2")));
        assert!(qbinom(5, 0, &t).unwrap().is_one());
        assert!(qbinom(1, 2, &t).is_err());
    }

    #[test]
    fn qbinom_symmetry_and_integrality() {
        let t = QtRat::t();
        for n in 0..=6usize {
            for k in 0..=n {
                let a = qbinom(n, k, &t).unwrap();
                let b = qbinom(n, n - k, &t).unwrap();
                assert_eq!(a, b);
                let p = a.as_polynomial().expect("gaussian binomial is a polynomial");
                assert!(p.terms().all(|(_, c)| c > &BigInt::from(0)));
            }
        }
    }

    #[test]
    fn pochhammer_recurrence() {
        let a = rat("1 - t", "1 + q");
        let b = rat("q*t", "2");
        for n in 0..=5usize {
            let lhs = pochhammer(&a, &b, n)
                .mul(&QtRat::one().sub(&b.pow(n as i64).unwrap().mul(&a)));
            assert_eq!(lhs, pochhammer(&a, &b, n + 1));
        }
    }
}
