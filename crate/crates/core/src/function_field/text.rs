//! The coefficient-list text form `([a0,a1,...] + [b0,...]*y)/[c0,...]`.
//!
//! Prime-field coefficients are integers (negative values are reduced);
//! extension-field coefficients are residue lists such as `[1,0,1]`.

use serde_json::Value;

use super::{FunctionFieldElement, FunctionFieldError};
use crate::curve::HyperellipticCurve;
use crate::field::{Field, FieldElement};
use crate::poly::Polynomial;

impl FunctionFieldElement {
    pub fn to_text(&self) -> String {
        format!(
            "({} + {}*y)/{}",
            self.a.coefficient_list(),
            self.b.coefficient_list(),
            self.c.coefficient_list()
        )
    }

    pub fn parse(curve: &HyperellipticCurve, text: &str) -> Result<FunctionFieldElement, FunctionFieldError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |msg: &str| FunctionFieldError::Parse(format!("{msg} in {text:?}"));
        let rest = compact.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
        let (a, rest) = split_array(rest).ok_or_else(|| err("expected coefficient list for a"))?;
        let rest = rest.strip_prefix('+').ok_or_else(|| err("expected '+'"))?;
        let (b, rest) = split_array(rest).ok_or_else(|| err("expected coefficient list for b"))?;
        let rest = rest.strip_prefix("*y)/").ok_or_else(|| err("expected '*y)/'"))?;
        let (c, rest) = split_array(rest).ok_or_else(|| err("expected coefficient list for c"))?;
        if !rest.is_empty() {
            return Err(err("trailing characters"));
        }
        let field = curve.field();
        let a = parse_polynomial(field, a)?;
        let b = parse_polynomial(field, b)?;
        let c = parse_polynomial(field, c)?;
        FunctionFieldElement::new(curve, a, b, c)
    }
}

/// Splits off a leading balanced `[...]`.
fn split_array(s: &str) -> Option<(&str, &str)> {
    if !s.starts_with('[') {
        return None;
    }
    let mut depth = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth == 0 {
                    return Some((&s[..=i], &s[i + 1..]));
                }
            }
            _ => {}
        }
    }
    None
}

fn parse_polynomial(field: &Field, list: &str) -> Result<Polynomial, FunctionFieldError> {
    let value: Value = serde_json::from_str(list).map_err(|e| FunctionFieldError::Parse(e.to_string()))?;
    let items = value.as_array().ok_or_else(|| FunctionFieldError::Parse(format!("{list} is not a list")))?;
    let coeffs = items
        .iter()
        .map(|v| parse_element(field, v))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::from_elements(field, &coeffs).expect("same field"))
}

pub(crate) fn parse_element(field: &Field, v: &Value) -> Result<FieldElement, FunctionFieldError> {
    let bad = || FunctionFieldError::Parse(format!("bad coefficient {v}"));
    match v {
        Value::Number(n) => {
            let n = n.as_i64().ok_or_else(bad)?;
            if field.is_prime_field() {
                Ok(field.from_i64(n))
            } else if n >= 0 {
                field.element(n as u64).map_err(|_| bad())
            } else {
                Err(bad())
            }
        }
        Value::Array(digits) => {
            let residues = digits.iter().map(|d| d.as_u64().ok_or_else(bad)).collect::<Result<Vec<_>, _>>()?;
            field.from_coefficients(&residues).map_err(|_| bad())
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let f = Field::prime(101).unwrap();
        let curve = HyperellipticCurve::new(Polynomial::from_ints(&f, &[3, 1, 0, 1, 0, 1]), Polynomial::zero(&f)).unwrap();
        let psi = FunctionFieldElement::new(
            &curve,
            Polynomial::from_ints(&f, &[1, 0, 1]),
            Polynomial::one(&f),
            Polynomial::from_ints(&f, &[1, 0, 0, 1]),
        )
        .unwrap();
        let text = psi.to_text();
        assert_eq!(text, "([1,0,1] + [1]*y)/[1,0,0,1]");
        assert_eq!(FunctionFieldElement::parse(&curve, &text).unwrap(), psi);
        assert_eq!(FunctionFieldElement::parse(&curve, "( [ -1 ] + [] * y ) / [1]").unwrap().num_a().coeff(0).value(), 100);
        assert!(FunctionFieldElement::parse(&curve, "([1] + [1]*y)/[0]").is_err());
        assert!(FunctionFieldElement::parse(&curve, "([1] + [1]*y)").is_err());
    }

    #[test]
    fn extension_coefficients() {
        let f = Field::new(2, 3, None).unwrap();
        let curve = HyperellipticCurve::new(
            Polynomial::from_elements(&f, &[f.one(), f.zero(), f.zero(), f.one()]).unwrap(),
            Polynomial::one(&f),
        )
        .unwrap();
        let g = FunctionFieldElement::parse(&curve, "([[0,1,0],[1,1,0]] + [[1,0,0]]*y)/[[1,0,0]]").unwrap();
        assert_eq!(FunctionFieldElement::parse(&curve, &g.to_text()).unwrap(), g);
    }
}
