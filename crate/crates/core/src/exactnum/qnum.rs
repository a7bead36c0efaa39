//! Elements of the biquadratic field Q(√2, √5).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::NumError;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `a + b√2 + c√5 + d√10` with rational coefficients.
///
/// The four basis elements are linearly independent over Q, so the derived
/// equality and hash are equality and hash of field elements.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QNum {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl QNum {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        QNum { a, b, c, d }
    }

    pub fn from_rational(a: Rational) -> Self {
        QNum { a, ..Self::default() }
    }

    pub fn int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn sqrt2() -> Self {
        QNum { b: Rational::one(), ..Self::default() }
    }

    pub fn sqrt5() -> Self {
        QNum { c: Rational::one(), ..Self::default() }
    }

    pub fn sqrt10() -> Self {
        QNum { d: Rational::one(), ..Self::default() }
    }

    /// The golden ratio (1+√5)/2.
    pub fn tau() -> Self {
        QNum { a: rat(1, 2), c: rat(1, 2), ..Self::default() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Integer value, if the element is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// Conjugation √2 ↦ −√2.
    pub fn conj2(&self) -> Self {
        QNum::new(self.a.clone(), -&self.b, self.c.clone(), -&self.d)
    }

    /// Conjugation √5 ↦ −√5.
    pub fn conj5(&self) -> Self {
        QNum::new(self.a.clone(), self.b.clone(), -&self.c, -&self.d)
    }

    pub fn inv(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        // x·σ₂(x) lies in Q(√5); multiplying by its √5-conjugate lands in Q.
        let s2 = self.conj2();
        let y = self * &s2;
        let y5 = y.conj5();
        let z = &y * &y5;
        debug_assert!(z.is_rational());
        let num = &s2 * &y5;
        Ok(num.scale(&(Rational::one() / z.a)))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QNum::new(&self.a * r, &self.b * r, &self.c * r, &self.d * r)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Exact sign of the real number represented.
    pub fn signum(&self) -> Ordering {
        // x = P + Q√5 with P = a + b√2, Q = c + d√2.
        let p = (&self.a, &self.b);
        let q = (&self.c, &self.d);
        let sp = sign_sqrt2(p.0, p.1);
        let sq = sign_sqrt2(q.0, q.1);
        if sq == Ordering::Equal {
            return sp;
        }
        if sp == Ordering::Equal || sp == sq {
            return if sp == Ordering::Equal { sq } else { sp };
        }
        // Opposite signs: compare P² with 5Q² in Q(√2).
        let p2 = (p.0 * p.0 + rat(2, 1) * p.1 * p.1, rat(2, 1) * p.0 * p.1);
        let q2 = (
            rat(5, 1) * (q.0 * q.0 + rat(2, 1) * q.1 * q.1),
            rat(10, 1) * q.0 * q.1,
        );
        let diff = sign_sqrt2(&(&p2.0 - &q2.0), &(&p2.1 - &q2.1));
        match diff {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let f = |r: &Rational| r.to_f64().unwrap_or(f64::NAN);
        f(&self.a) + f(&self.b) * 2f64.sqrt() + f(&self.c) * 5f64.sqrt() + f(&self.d) * 10f64.sqrt()
    }

    /// Coefficients as `[a, b, c, d]` strings, used by the JSON exports.
    pub fn coefficient_strings(&self) -> [String; 4] {
        [&self.a, &self.b, &self.c, &self.d].map(|r| r.to_string())
    }
}

/// Sign of `p + q√2`.
fn sign_sqrt2(p: &Rational, q: &Rational) -> Ordering {
    let sp = p.cmp(&Rational::zero());
    let sq = q.cmp(&Rational::zero());
    if sq == Ordering::Equal {
        return sp;
    }
    if sp == Ordering::Equal || sp == sq {
        return if sp == Ordering::Equal { sq } else { sp };
    }
    let lhs = p * p;
    let rhs = rat(2, 1) * q * q;
    match lhs.cmp(&rhs) {
        Ordering::Greater => sp,
        Ordering::Less => sq,
        Ordering::Equal => Ordering::Equal,
    }
}

impl PartialOrd for QNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QNum {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl fmt::Debug for QNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (coef, unit) in [(&self.a, ""), (&self.b, "√2"), (&self.c, "√5"), (&self.d, "√10")] {
            if coef.is_zero() {
                continue;
            }
            if unit.is_empty() {
                parts.push(coef.to_string());
            } else if coef.is_one() {
                parts.push(unit.to_string());
            } else if (-coef).is_one() {
                parts.push(format!("-{unit}"));
            } else {
                parts.push(format!("{coef}{unit}"));
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        write!(f, "{out}")
    }
}

impl<'a> Add<&'a QNum> for &'a QNum {
    type Output = QNum;
    fn add(self, o: &QNum) -> QNum {
        QNum::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }
}

impl<'a> Sub<&'a QNum> for &'a QNum {
    type Output = QNum;
    fn sub(self, o: &QNum) -> QNum {
        QNum::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }
}

impl<'a> Mul<&'a QNum> for &'a QNum {
    type Output = QNum;
    fn mul(self, o: &QNum) -> QNum {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&o.a, &o.b, &o.c, &o.d);
        let two = rat(2, 1);
        let five = rat(5, 1);
        let ten = rat(10, 1);
        // 1·1, √2√2 = 2, √5√5 = 5, √10√10 = 10
        let r0 = a * e + &two * b * f + &five * c * g + &ten * d * h;
        // √2: a f + b e + 5(c h + d g)
        let r1 = a * f + b * e + &five * (c * h + d * g);
        // √5: a g + c e + 2(b h + d f)
        let r2 = a * g + c * e + &two * (b * h + d * f);
        // √10: a h + d e + b g + c f
        let r3 = a * h + d * e + b * g + c * f;
        QNum::new(r0, r1, r2, r3)
    }
}

impl<'a> Neg for &'a QNum {
    type Output = QNum;
    fn neg(self) -> QNum {
        QNum::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Neg for QNum {
    type Output = QNum;
    fn neg(self) -> QNum {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QNum> for QNum {
            type Output = QNum;
            fn $m(self, o: QNum) -> QNum {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a QNum> for QNum {
            type Output = QNum;
            fn $m(self, o: &QNum) -> QNum {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<QNum> for &'a QNum {
            type Output = QNum;
            fn $m(self, o: QNum) -> QNum {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<'a> Div<&'a QNum> for &'a QNum {
    type Output = QNum;
    /// Panics on division by zero; use [`QNum::inv`] for the fallible form.
    fn div(self, o: &QNum) -> QNum {
        self * &o.inv().expect("division by zero in QNum")
    }
}

impl AddAssign<&QNum> for QNum {
    fn add_assign(&mut self, o: &QNum) {
        self.a += &o.a;
        self.b += &o.b;
        self.c += &o.c;
        self.d += &o.d;
    }
}

impl SubAssign<&QNum> for QNum {
    fn sub_assign(&mut self, o: &QNum) {
        self.a -= &o.a;
        self.b -= &o.b;
        self.c -= &o.c;
        self.d -= &o.d;
    }
}

impl From<i64> for QNum {
    fn from(n: i64) -> Self {
        QNum::int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        assert_eq!(QNum::sqrt2().square(), QNum::int(2));
        assert_eq!(&QNum::sqrt2() * &QNum::sqrt5(), QNum::sqrt10());
        assert_eq!(QNum::sqrt10().square(), QNum::int(10));
    }

    #[test]
    fn golden_ratio_square() {
        // ((1+√5)/2)² = (1 + 2√5 + 5)/4 = (3+√5)/2
        let t = QNum::tau();
        let expected = QNum::new(rat(3, 2), rat(0, 1), rat(1, 2), rat(0, 1));
        assert_eq!(t.square(), expected);
        assert_eq!(&t.square() - &t, QNum::one());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(QNum::zero().inv(), Err(NumError::DivisionByZero));
    }

    #[test]
    fn signs() {
        // √10 − 3 > 0, 2√2 − √5 − 0.6 > 0 (2.828 − 2.236 = 0.592 < 0.6 → negative)
        assert!((QNum::sqrt10() - QNum::int(3)).is_positive());
        let x = &(&QNum::sqrt2() * &QNum::int(2)) - &QNum::sqrt5();
        assert!((&x - &QNum::frac(3, 5)).is_negative());
        assert!((&x - &QNum::frac(59, 100)).is_positive());
        assert_eq!(QNum::zero().signum(), Ordering::Equal);
    }

    #[test]
    fn display() {
        let x = QNum::new(rat(1, 2), rat(-1, 1), rat(0, 1), rat(3, 1));
        assert_eq!(x.to_string(), "1/2 - √2 + 3√10");
    }
}
