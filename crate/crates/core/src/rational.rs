//! Exact ratios for supports, confidences and thresholds.

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Non-negative exact ratio. Supports and confidences are counts over counts,
/// so comparisons against thresholds never suffer rounding.
pub type Rational = Ratio<u64>;

/// Parses `"0.0001"`, `"2/3"`, `"1"` or `"1e-4"` into an exact ratio.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::InvalidParameter(format!("not a non-negative number: {text:?}"));
    if let Some((num, den)) = text.split_once('/') {
        let num: u64 = num.trim().parse().map_err(|_| bad())?;
        let den: u64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(num, den));
    }
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = text[pos + 1..].parse().map_err(|_| bad())?;
            (&text[..pos], exp)
        }
        None => (text, 0),
    };
    let mantissa = mantissa.strip_prefix('+').unwrap_or(mantissa);
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let digits = digits.trim_start_matches('0');
    let numer: u64 = if digits.is_empty() {
        0
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let scale = exponent - frac_part.len() as i32;
    let pow = |e: i32| 10u64.checked_pow(e as u32).ok_or_else(bad);
    let value = if scale >= 0 {
        Ratio::from_integer(numer.checked_mul(pow(scale)?).ok_or_else(bad)?)
    } else {
        Ratio::new(numer, pow(-scale)?)
    };
    Ok(value)
}

/// Ratio as a float, for percentages in human-readable reports only.
pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
