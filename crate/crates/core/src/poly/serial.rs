//! JSON encodings: rationals and polynomials travel as strings in the text
//! format so that no value is ever rounded through a float.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{format_rational, parse_poly, Poly, Rational};

pub(crate) fn rational_str<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub(crate) fn opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&format_rational(r)),
        None => s.serialize_none(),
    }
}

pub(crate) fn rational_strs<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rational))
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_poly(&text).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    #[test]
    fn poly_json_round_trip() {
        let p = Poly::from_coeffs(vec![rat(-1, 3), int(0), int(2)]);
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, "\"-1/3,0,2\"");
        let back: Poly = serde_json::from_str(&j).unwrap();
        assert_eq!(back, p);
    }
}
