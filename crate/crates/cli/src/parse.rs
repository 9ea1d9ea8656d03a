//! Flag-value parsers for the shell-safe complex syntax `a+bi` / `a-bi`
//! (plain `a` for reals, `bi` for pure imaginaries).

use mzv_core::numerics::Complex64;

/// Parse a complex literal. Scientific notation is allowed in both parts;
/// a sign directly after `e`/`E` is an exponent sign, not a separator.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err("empty complex literal".into());
    }
    let Some(body) = trimmed.strip_suffix(['i', 'I']) else {
        let re: f64 = trimmed
            .parse()
            .map_err(|_| format!("`{trimmed}` is not a real number"))?;
        return Ok(Complex64::new(re, 0.0));
    };

    // Split at the last +/- that starts the imaginary part.
    let bytes = body.as_bytes();
    let mut split = None;
    for pos in (1..bytes.len()).rev() {
        let c = bytes[pos];
        if (c == b'+' || c == b'-') && !matches!(bytes[pos - 1], b'e' | b'E') {
            split = Some(pos);
            break;
        }
    }
    let (re_str, im_str) = match split {
        Some(pos) => (&body[..pos], &body[pos..]),
        None => ("0", body),
    };
    let re: f64 = if re_str.is_empty() {
        0.0
    } else {
        re_str
            .parse()
            .map_err(|_| format!("`{re_str}` is not a real number"))?
    };
    let im: f64 = match im_str {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other
            .parse()
            .map_err(|_| format!("`{other}` is not a real number"))?,
    };
    Ok(Complex64::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_forms() {
        assert_eq!(parse_complex("-0.3").unwrap(), Complex64::new(-0.3, 0.0));
        assert_eq!(parse_complex("2").unwrap(), Complex64::new(2.0, 0.0));
        assert_eq!(parse_complex("1e-3").unwrap(), Complex64::new(1e-3, 0.0));
    }

    #[test]
    fn full_forms() {
        assert_eq!(parse_complex("1.5-2i").unwrap(), Complex64::new(1.5, -2.0));
        assert_eq!(parse_complex("0+1i").unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(
            parse_complex("1e-3+2e-4i").unwrap(),
            Complex64::new(1e-3, 2e-4)
        );
        assert_eq!(parse_complex("3+i").unwrap(), Complex64::new(3.0, 1.0));
        assert_eq!(parse_complex("3-i").unwrap(), Complex64::new(3.0, -1.0));
    }

    #[test]
    fn pure_imaginary_forms() {
        assert_eq!(parse_complex("2i").unwrap(), Complex64::new(0.0, 2.0));
        assert_eq!(parse_complex("-2i").unwrap(), Complex64::new(0.0, -2.0));
        assert_eq!(parse_complex("i").unwrap(), Complex64::new(0.0, 1.0));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_complex("").is_err());
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("1+2j").is_err());
        assert!(parse_complex("1 + 2i").is_err());
    }
}
