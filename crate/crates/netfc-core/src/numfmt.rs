//! Decimal rendering for persisted real values: 12 significant digits,
//! plain notation, no trailing zeros, so files are compact and byte-stable
//! across platforms.

/// Formats `x` rounded to 12 significant digits. Exact zero renders as
/// "0"; magnitudes outside plain-decimal range fall back to exponent
/// notation (never reached by the quantities this crate persists).
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let formatted = format!("{x:.11e}");
    let (mantissa, exp) = formatted.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("exponent digits");
    if !(-9..=15).contains(&exp) {
        return formatted;
    }
    let neg = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), 12);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if exp < 0 {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(digits.trim_end_matches('0'));
    } else {
        let point = exp as usize + 1;
        if point >= digits.len() {
            out.push_str(&digits);
            for _ in 0..point - digits.len() {
                out.push('0');
            }
        } else {
            let frac = digits[point..].trim_end_matches('0');
            out.push_str(&digits[..point]);
            if !frac.is_empty() {
                out.push('.');
                out.push_str(frac);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representative_values() {
        assert_eq!(format_sig(0.0), "0");
        assert_eq!(format_sig(-0.0), "0");
        assert_eq!(format_sig(1.0), "1");
        assert_eq!(format_sig(1.8), "1.8");
        assert_eq!(format_sig(1.6912559519688268), "1.69125595197");
        assert_eq!(format_sig(1.8666666666666667), "1.86666666667");
        assert_eq!(format_sig(-0.43), "-0.43");
        assert_eq!(format_sig(0.0001234567890123), "0.000123456789012");
        assert_eq!(format_sig(7.637487575570847), "7.63748757557");
        assert_eq!(format_sig(26704.0), "26704");
        assert_eq!(format_sig(0.5), "0.5");
    }

    #[test]
    fn rounding_carries() {
        assert_eq!(format_sig(0.99999999999999), "1");
        assert_eq!(format_sig(9.9999999999999), "10");
    }

    #[test]
    fn round_trips_within_half_ulp_of_12_digits() {
        for &x in &[1.8365916681089791, 3.647869792568112, 0.33158088246926737, 123.456] {
            let back: f64 = format_sig(x).parse().unwrap();
            assert!((back - x).abs() <= x.abs() * 5e-12, "{x} -> {back}");
        }
    }
}
