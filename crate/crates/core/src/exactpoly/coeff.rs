use std::fmt::Write;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Gaussian rational `re + im*i`.
pub type Coeff = Complex<Rational>;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn real(num: i64, den: i64) -> Coeff {
    Coeff::new(rational(num, den), Rational::zero())
}

pub fn imag(num: i64, den: i64) -> Coeff {
    Coeff::new(Rational::zero(), rational(num, den))
}

pub fn from_rational(r: Rational) -> Coeff {
    Coeff::new(r, Rational::zero())
}

pub fn i_unit() -> Coeff {
    Coeff::new(Rational::zero(), Rational::one())
}

pub fn is_real(c: &Coeff) -> bool {
    c.im.is_zero()
}

/// Sign used when a term is joined into a sum; complex values carry their own parentheses.
pub(crate) fn is_negative_like(c: &Coeff) -> bool {
    if c.im.is_zero() {
        c.re.is_negative()
    } else if c.re.is_zero() {
        c.im.is_negative()
    } else {
        false
    }
}

fn write_imag(out: &mut String, im: &Rational) {
    if im.is_one() {
        out.push('i');
    } else if (-im).is_one() {
        out.push_str("-i");
    } else {
        write!(out, "{im}i").unwrap();
    }
}

/// Canonical text of a coefficient: `3`, `-1/4`, `3/4i`, `-i`, `(1/2+3/4i)`.
pub fn coeff_text(c: &Coeff) -> String {
    let mut out = String::new();
    if c.im.is_zero() {
        write!(out, "{}", c.re).unwrap();
    } else if c.re.is_zero() {
        write_imag(&mut out, &c.im);
    } else {
        write!(out, "({}", c.re).unwrap();
        if c.im.is_positive() {
            out.push('+');
        }
        write_imag(&mut out, &c.im);
        out.push(')');
    }
    out
}
