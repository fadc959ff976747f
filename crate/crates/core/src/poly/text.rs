//! Polynomial text format: comma-separated rationals lowest degree first
//! (`-1,0,1` is x^2 - 1), or a root list `roots:1,-1;lc:2`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// `n` or `n/d`; integers print without a denominator.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn parse_int(s: &str, pos: usize) -> Result<BigInt> {
    let body = s.strip_prefix(['+', '-']).unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(pos, format!("expected an integer, found `{s}`")));
    }
    s.trim_start_matches('+')
        .parse()
        .map_err(|_| parse_err(pos, format!("expected an integer, found `{s}`")))
}

/// Parses one rational, reporting errors relative to byte offset `base`.
fn parse_rational_at(s: &str, base: usize) -> Result<Rational> {
    let lead = s.len() - s.trim_start().len();
    let t = s.trim();
    let pos = base + lead;
    if t.is_empty() {
        return Err(parse_err(pos, "empty number"));
    }
    match t.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(t, pos)?)),
        Some((n, d)) => {
            let num = parse_int(n, pos)?;
            let den = parse_int(d, pos + n.len() + 1)?;
            if den.is_zero() {
                return Err(parse_err(pos + n.len() + 1, "zero denominator"));
            }
            Ok(Rational::new(num, den))
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    parse_rational_at(s, 0)
}

fn parse_list_at(s: &str, base: usize) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    let mut off = 0;
    for piece in s.split(',') {
        out.push(parse_rational_at(piece, base + off)?);
        off += piece.len() + 1;
    }
    Ok(out)
}

/// Comma-separated rationals, e.g. a `--kappa` list.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    parse_list_at(s, 0)
}

pub fn parse_poly(s: &str) -> Result<Poly> {
    let lead = s.len() - s.trim_start().len();
    let t = s.trim();
    let Some(rest) = t.strip_prefix("roots:") else {
        return Ok(Poly::from_coeffs(parse_list_at(t, lead)?));
    };
    let base = lead + "roots:".len();
    let (roots_part, lc) = match rest.split_once(';') {
        None => (rest, Rational::one()),
        Some((r, tail)) => {
            let tail_base = base + r.len() + 1;
            let tl = tail.trim_start();
            let skip = tail.len() - tl.len();
            let Some(v) = tl.strip_prefix("lc:") else {
                return Err(parse_err(tail_base + skip, "expected `lc:` after `;`"));
            };
            (r, parse_rational_at(v, tail_base + skip + 3)?)
        }
    };
    if lc.is_zero() {
        return Err(parse_err(base, "leading coefficient must be nonzero"));
    }
    let roots = if roots_part.trim().is_empty() {
        Vec::new()
    } else {
        parse_list_at(roots_part, base)?
    };
    Ok(Poly::from_roots(&roots, lc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    #[test]
    fn coefficient_form() {
        assert_eq!(parse_poly("-1,0,1").unwrap(), Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(
            parse_poly(" 1/2, -3/4 ,0").unwrap(),
            Poly::from_coeffs(vec![rat(1, 2), rat(-3, 4)])
        );
        assert!(parse_poly("0").unwrap().is_zero());
        assert_eq!(parse_poly("+3,2/4").unwrap().coeff(1), rat(1, 2));
    }

    #[test]
    fn root_form() {
        assert_eq!(
            parse_poly("roots:1,-1;lc:1").unwrap(),
            Poly::from_ints(&[-1, 0, 1])
        );
        assert_eq!(
            parse_poly("roots:1/2;lc:-2").unwrap(),
            Poly::from_ints(&[1, -2])
        );
        assert_eq!(parse_poly("roots:0,0").unwrap(), Poly::from_ints(&[0, 0, 1]));
        assert_eq!(parse_poly("roots:;lc:3").unwrap(), Poly::constant(int(3)));
    }

    #[test]
    fn error_positions() {
        assert_eq!(
            parse_poly("1,x,2"),
            Err(Error::Parse {
                pos: 2,
                msg: "expected an integer, found `x`".into()
            })
        );
        assert!(matches!(parse_poly("1,2/0"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("1,,2"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(
            parse_poly("roots:1;lx:2"),
            Err(Error::Parse { pos: 8, .. })
        ));
        assert!(matches!(parse_poly("roots:1;lc:0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_rational("3/-"), Err(Error::Parse { pos: 2, .. })));
    }

    #[test]
    fn format_round_trip() {
        for s in ["-1/2,0,3", "7", "0,0,0,1", "-5/3,4/9"] {
            assert_eq!(parse_poly(s).unwrap().to_string(), s);
        }
        assert_eq!(format_rational(&rat(6, -4)), "-3/2");
    }
}
