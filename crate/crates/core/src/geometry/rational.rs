//! Arbitrary-precision rational scalars and certified square-root bounds.
//!
//! `Rational` is the scalar type of every predicate in this crate. Values are
//! always in lowest terms with a positive denominator (the representation
//! canonicalises on construction), so equality and ordering are exact.

use num_bigint::{BigInt, ToBigInt};
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// `n / d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Denominator used by the directed square-root bounds: the returned
/// enclosure has width exactly `1 / (den(x) * SQRT_SLACK_DEN)`, so at most
/// `1e-9` for any input.
pub const SQRT_SLACK_DEN: u64 = 1_000_000_000;

fn sqrt_floor_scaled(x: &Rational) -> (BigInt, BigInt) {
    assert!(!x.is_negative(), "square root of a negative rational");
    let b = BigInt::from(SQRT_SLACK_DEN);
    // sqrt(p/q) = sqrt(p*q) / q; scale by B to control the enclosure width.
    let scaled = x.numer() * x.denom() * &b * &b;
    (scaled.sqrt(), x.denom() * &b)
}

/// Largest rational of the form `k / (den(x) * 1e9)` that is `<= sqrt(x)`.
pub fn sqrt_lower(x: &Rational) -> Rational {
    let (s, denom) = sqrt_floor_scaled(x);
    Rational::new(s, denom)
}

/// Smallest rational of the form `k / (den(x) * 1e9)` that is `>= sqrt(x)`.
pub fn sqrt_upper(x: &Rational) -> Rational {
    let (s, denom) = sqrt_floor_scaled(x);
    let exact = &s * &s == x.numer() * x.denom() * BigInt::from(SQRT_SLACK_DEN).pow(2);
    if exact {
        Rational::new(s, denom)
    } else {
        Rational::new(s + BigInt::one(), denom)
    }
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// via the continued-fraction expansion. Deterministic in `x`.
pub fn approx_rational(x: f64, max_den: u64) -> Rational {
    assert!(x.is_finite(), "cannot approximate a non-finite float");
    let negative = x < 0.0;
    let mut a = x.abs();
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let cap = BigInt::from(max_den);
    for _ in 0..64 {
        let whole = a.floor();
        if whole > 1e18 {
            break;
        }
        let term = (whole as i64).to_bigint().unwrap();
        let q2 = &term * &q1 + &q0;
        if q2 > cap && !q1.is_zero() {
            break;
        }
        let p2 = &term * &p1 + &p0;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        let frac = a - whole;
        if frac < 1e-15 {
            break;
        }
        a = 1.0 / frac;
    }
    if q1.is_zero() {
        return Rational::zero();
    }
    let r = Rational::new(p1, q1);
    if negative {
        -r
    } else {
        r
    }
}

/// Lossy view for display and for seeding the floating-point solver.
pub fn to_f64(x: &Rational) -> f64 {
    x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
}

/// Render as `"n"` or `"n/d"` in lowest terms.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `"n"`, `"n/d"`, or a plain decimal such as `"-0.25"`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty rational literal".into());
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| format!("bad numerator in {t:?}"))?;
        let d: BigInt = den.trim().parse().map_err(|_| format!("bad denominator in {t:?}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {t:?}"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let sign = if whole.trim_start().starts_with('-') { -1 } else { 1 };
        let w: BigInt = if whole == "-" || whole.is_empty() {
            BigInt::zero()
        } else {
            whole.parse().map_err(|_| format!("bad decimal in {t:?}"))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad decimal fraction in {t:?}"));
        }
        let f: BigInt = frac.parse().map_err(|_| format!("bad decimal in {t:?}"))?;
        let scale = BigInt::from(10u8).pow(frac.len() as u32);
        let abs = Rational::from_integer(w.abs()) + Rational::new(f, scale);
        return Ok(if sign < 0 { -abs } else { abs });
    }
    let n: BigInt = t.parse().map_err(|_| format!("bad integer in {t:?}"))?;
    Ok(Rational::from_integer(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_bounds_enclose_root() {
        for (n, d) in [(2i64, 1i64), (3, 4), (15, 16), (1, 1), (0, 1), (143, 144)] {
            let x = rat(n, d);
            let lo = sqrt_lower(&x);
            let hi = sqrt_upper(&x);
            assert!(&lo * &lo <= x, "lower bound exceeds root for {n}/{d}");
            assert!(&hi * &hi >= x, "upper bound below root for {n}/{d}");
            assert!(&hi - &lo <= rat(1, 1_000_000_000));
        }
    }

    #[test]
    fn sqrt_exact_squares_are_tight() {
        let x = rat(9, 4);
        assert_eq!(sqrt_lower(&x), rat(3, 2));
        assert_eq!(sqrt_upper(&x), rat(3, 2));
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-2", "0", "7", "-5/9"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("2.").is_err(), true);
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn continued_fraction_approximation() {
        let r = approx_rational(std::f64::consts::SQRT_2, 1000);
        assert_eq!(r, rat(1393, 985));
        let half_err = to_f64(&(&r * &r - rat(2, 1))).abs();
        assert!(half_err < 1e-5);
        assert_eq!(approx_rational(0.5, 10), rat(1, 2));
        assert_eq!(approx_rational(-0.5, 10), rat(-1, 2));
    }
}
