//! JSON encodings. Fractions are strings `"a/b"` (or `"a"` when integral),
//! and object keys come out sorted, so equal values serialize identically.

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::arc::MonomialGeometry;
use crate::error::{Error, Result};
use crate::gauss::UElement;
use crate::motive::{Character, MotiveClass, MotiveFrac, Q};
use crate::series::{ArithmeticTerm, Coefficient, IndexPoly, RationalSeries};
use crate::spectra::SpectrumPoly;

pub trait Json: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

fn bad(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {what}, found {v}"))
}

pub fn q_to_json(c: &Q) -> Value {
    Value::String(c.to_string())
}

pub fn q_from_json(v: &Value) -> Result<Q> {
    match v {
        Value::String(s) => s.trim().parse::<Q>().map_err(|_| bad("a fraction string", v)),
        Value::Number(n) => n.as_i64().map(|i| Q::from_integer(BigInt::from(i))).ok_or_else(|| bad("an integer", v)),
        _ => Err(bad("a fraction string", v)),
    }
}

pub fn r64_to_json(c: &Rational64) -> Value {
    Value::String(c.to_string())
}

pub fn r64_from_json(v: &Value) -> Result<Rational64> {
    let c = q_from_json(v)?;
    match (c.numer().to_i64(), c.denom().to_i64()) {
        (Some(n), Some(d)) => Ok(Rational64::new(n, d)),
        _ => Err(bad("a fraction with 64-bit parts", v)),
    }
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(what, v))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field \"{key}\" in {v}")))
}

fn as_i64(v: &Value) -> Result<i64> {
    v.as_i64().ok_or_else(|| bad("an integer", v))
}

fn as_u32(v: &Value) -> Result<u32> {
    v.as_u64().and_then(|n| u32::try_from(n).ok()).ok_or_else(|| bad("a nonnegative integer", v))
}

impl Json for Character {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self> {
        v.as_str().ok_or_else(|| bad("a character string \"a/d\"", v))?.parse()
    }
}

impl Json for MotiveClass {
    fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(deg, c)| json!([r64_to_json(&deg.p), r64_to_json(&deg.q), q_to_json(c)]))
                .collect(),
        )
    }

    fn from_json(v: &Value) -> Result<Self> {
        let mut out = MotiveClass::zero();
        for t in as_array(v, "a list of [p, q, c]")? {
            match t.as_array().map(Vec::as_slice) {
                Some([p, q, c]) => {
                    out = &out + &MotiveClass::monomial(r64_from_json(p)?, r64_from_json(q)?, q_from_json(c)?)?;
                }
                _ => return Err(bad("[p, q, c]", t)),
            }
        }
        Ok(out)
    }
}

impl Json for MotiveFrac {
    fn to_json(&self) -> Value {
        let den: Vec<Value> = self.denominator_factors().into_iter().map(|(a, b)| json!([a, b])).collect();
        json!({ "num": self.numerator().to_json(), "den": den })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let num = MotiveClass::from_json(field(v, "num")?)?;
        let mut factors = Vec::new();
        if let Some(den) = v.get("den") {
            for f in as_array(den, "a list of [a, b]")? {
                match f.as_array().map(Vec::as_slice) {
                    Some([a, b]) => factors.push((as_i64(a)?, as_i64(b)?)),
                    _ => return Err(bad("[a, b]", f)),
                }
            }
        }
        MotiveFrac::from_parts(num, &factors)
    }
}

impl Json for UElement {
    fn to_json(&self) -> Value {
        let gauss: Vec<Value> = self.gauss_part().iter().map(|(a, c)| json!([a.to_json(), c.to_json()])).collect();
        json!({ "scalar": self.scalar().to_json(), "gauss": gauss })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let mut out = UElement::from_scalar(MotiveFrac::from_json(field(v, "scalar")?)?);
        if let Some(g) = v.get("gauss") {
            for entry in as_array(g, "a list of [character, coefficient]")? {
                match entry.as_array().map(Vec::as_slice) {
                    Some([a, c]) => out.add_gauss(Character::from_json(a)?, MotiveFrac::from_json(c)?),
                    _ => return Err(bad("[character, coefficient]", entry)),
                }
            }
        }
        Ok(out)
    }
}

impl<B: Coefficient + Json> Json for RationalSeries<B> {
    fn to_json(&self) -> Value {
        let poly: Vec<Value> = self.poly().iter().map(|(e, c)| json!([e, c.to_json()])).collect();
        let one = B::from_frac(MotiveFrac::one());
        let terms: Vec<Value> = self
            .terms()
            .map(|t| {
                let f: Vec<Value> = t.poly.coeffs().iter().map(Json::to_json).collect();
                json!({ "r": t.offset, "d": t.step, "a": t.lexp, "c": one.to_json(), "f": f })
            })
            .collect();
        json!({ "poly": poly, "terms": terms })
    }

    /// `f` entries may be fraction strings (scaled by `c`) or coefficients.
    fn from_json(v: &Value) -> Result<Self> {
        let mut out = RationalSeries::zero();
        if let Some(p) = v.get("poly") {
            for entry in as_array(p, "a list of [i, coefficient]")? {
                match entry.as_array().map(Vec::as_slice) {
                    Some([e, c]) => out.add_poly_coefficient(as_i64(e)?, B::from_json(c)?),
                    _ => return Err(bad("[i, coefficient]", entry)),
                }
            }
        }
        if let Some(ts) = v.get("terms") {
            for t in as_array(ts, "a list of terms")? {
                let step = field(t, "d")?.as_u64().filter(|&d| d >= 1).ok_or_else(|| bad("a positive step", t))?;
                let c = match t.get("c") {
                    Some(c) => B::from_json(c)?,
                    None => B::from_frac(MotiveFrac::one()),
                };
                let mut coeffs = Vec::new();
                for x in as_array(field(t, "f")?, "a coefficient list")? {
                    coeffs.push(match x {
                        Value::String(_) | Value::Number(_) => c.scale_q(&q_from_json(x)?),
                        _ => B::from_json(x)?.times(&c),
                    });
                }
                out.add_term(ArithmeticTerm {
                    offset: as_i64(field(t, "r")?)?,
                    step,
                    lexp: as_i64(field(t, "a")?)?,
                    poly: IndexPoly::new(coeffs),
                });
            }
        }
        Ok(out)
    }
}

impl Json for MonomialGeometry {
    fn to_json(&self) -> Value {
        json!({
            "ambient_dim": self.ambient_dim(),
            "f_exponents": self.f_exponents(),
            "g_exponents": self.g_exponents(),
            "w_indices": self.w_indices(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let list = |key: &str| -> Result<Vec<u32>> {
            match v.get(key) {
                None | Some(Value::Null) => Ok(Vec::new()),
                Some(x) => as_array(x, "a list of exponents")?.iter().map(as_u32).collect(),
            }
        };
        let f = list("f_exponents")?;
        let g = list("g_exponents")?;
        let w: Vec<usize> = list("w_indices")?.into_iter().map(|i| i as usize).collect();
        if let Some(m) = v.get("ambient_dim") {
            let m = m.as_u64().ok_or_else(|| bad("a dimension", m))?;
            if m as usize != f.len() {
                return Err(Error::Geometry(format!("ambient_dim {m} but {} f-exponents", f.len())));
            }
        }
        let w = if w.is_empty() && v.get("w_indices").is_none() { (1..=f.len()).collect() } else { w };
        MonomialGeometry::new(f, g, &w)
    }
}

impl Json for SpectrumPoly {
    fn to_json(&self) -> Value {
        Value::Array(self.terms().iter().map(|(b, n)| json!([r64_to_json(b), n])).collect())
    }

    fn from_json(v: &Value) -> Result<Self> {
        let mut out = SpectrumPoly::zero();
        for entry in as_array(v, "a list of [exponent, multiplicity]")? {
            match entry.as_array().map(Vec::as_slice) {
                Some([b, n]) => out.add(r64_from_json(b)?, as_i64(n)?),
                _ => return Err(bad("[exponent, multiplicity]", entry)),
            }
        }
        Ok(out)
    }
}

/// Deterministic pretty rendering.
pub fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

/// Parses JSON text into a value of `T`.
pub fn parse<T: Json>(text: &str) -> Result<T> {
    T::from_json(&serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motive::q;

    fn roundtrip<T: Json + PartialEq + std::fmt::Debug>(x: &T) {
        let text = render(&x.to_json());
        let back: T = parse(&text).unwrap();
        assert_eq!(&back, x, "{text}");
        assert_eq!(render(&back.to_json()), text);
    }

    #[test]
    fn roundtrips() {
        roundtrip(&Character::new(5, 12).unwrap());
        let c = &MotiveClass::lefschetz_poly([(2, q(3)), (-1, q(-1))])
            + &crate::gauss::realize_gauss(&Character::new(1, 3).unwrap());
        roundtrip(&c);
        let f = &MotiveFrac::from(c.clone()) * &MotiveFrac::inv_lefschetz_difference(0, -3).unwrap();
        roundtrip(&f);
        let mut u = UElement::gauss_scaled(Character::new(1, 6).unwrap(), f.clone());
        u.add_scalar(&MotiveFrac::lefschetz_pow(2));
        roundtrip(&u);
        let g = MonomialGeometry::new(vec![2, 0, 3], vec![1, 1, 0], &[1, 3]).unwrap();
        roundtrip(&g);
        roundtrip(&g.zeta_series(&Character::TRIVIAL));
        roundtrip(&g.exp_series());
        roundtrip(&crate::spectra::brieskorn_oracle(&[2, 3, 4]).unwrap());
    }

    #[test]
    fn accepts_rational_f_and_general_den() {
        let v = json!({
            "poly": [[0, {"num": [["0", "0", "3"]], "den": []}]],
            "terms": [{"r": 1, "d": 1, "a": 0, "c": {"num": [["1", "1", "1"]], "den": [[0, -2]]}, "f": ["1", "1/2"]}]
        });
        let s: RationalSeries<MotiveFrac> = RationalSeries::from_json(&v).unwrap();
        let c = &MotiveFrac::lefschetz_pow(1) * &MotiveFrac::inv_lefschetz_difference(0, -2).unwrap();
        let expected = RationalSeries::from_terms([ArithmeticTerm::new(1, 1, 0, &c, &[q(1), crate::motive::q_frac(1, 2)])])
            .plus(&RationalSeries::monomial(0, MotiveFrac::from_int(3)));
        assert_eq!(s, expected);
    }

    #[test]
    fn geometry_defaults() {
        let g: MonomialGeometry = parse(r#"{"f_exponents": [2, 3]}"#).unwrap();
        assert_eq!(g.w_indices(), vec![1, 2]);
        assert!(parse::<MonomialGeometry>(r#"{"ambient_dim": 3, "f_exponents": [2, 3]}"#).is_err());
        assert!(parse::<MonomialGeometry>(r#"{"f_exponents": [0, 3], "w_indices": [1]}"#).is_err());
    }
}
