//! Curve-spec documents: JSON ingestion with exact-rational coefficients.

use num_complex::Complex64;
use psilab_algebra::{parse_rational, HyperellipticCurveG2, Rat, Scalar};
use psilab_elliptic::EllipticCurveW;
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("malformed curve spec: {0}")]
    Malformed(String),
    #[error("malformed rational in field `{field}`: {detail}")]
    BadRational { field: String, detail: String },
    #[error("singular curve: {0}")]
    Singular(String),
    #[error("declared point ({x}, {y}) does not lie on the curve")]
    OffCurvePoint { x: String, y: String },
    #[error("malformed complex number `{0}` (expected forms like 1.5, 2i, 1+2i)")]
    BadComplex(String),
}

#[derive(Deserialize)]
struct RawSpec {
    kind: String,
    lambda: Option<Vec<String>>,
    g2: Option<String>,
    g3: Option<String>,
    point: Option<Vec<String>>,
    lattice: Option<[String; 2]>,
}

#[derive(Clone, Debug)]
pub enum CurveKind {
    Elliptic(EllipticCurveW<Rat>),
    Genus2(HyperellipticCurveG2),
}

#[derive(Clone, Debug)]
pub struct CurveSpec {
    pub kind: CurveKind,
    /// Optional point: (x₀) alone or (x₀, y₀); validated to lie on the curve.
    pub point: Option<(Rat, Option<Rat>)>,
    pub lattice: Option<(Complex64, Complex64)>,
    /// Human-readable description used in reports.
    pub label: String,
}

fn parse_field(field: &str, text: &str) -> Result<Rat, SpecError> {
    parse_rational(text).map_err(|e| SpecError::BadRational {
        field: field.to_string(),
        detail: e.reason,
    })
}

/// Parses `a`, `bi`, `a+bi`, `a-bi` with f64 components.
pub fn parse_complex(text: &str) -> Result<Complex64, SpecError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || SpecError::BadComplex(text.to_string());
    if s.is_empty() {
        return Err(err());
    }
    if let Some(imag) = s.strip_suffix('i') {
        // split into real and imaginary at the last +/- that is not leading
        // and not part of an exponent
        let bytes = imag.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => {
                let re: f64 = imag[..k].parse().map_err(|_| err())?;
                let im_str = &imag[k..];
                let im: f64 = if im_str == "+" {
                    1.0
                } else if im_str == "-" {
                    -1.0
                } else {
                    im_str.parse().map_err(|_| err())?
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                let im: f64 = if imag.is_empty() {
                    1.0
                } else if imag == "-" {
                    -1.0
                } else {
                    imag.parse().map_err(|_| err())?
                };
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = s.parse().map_err(|_| err())?;
        Ok(Complex64::new(re, 0.0))
    }
}

pub fn parse_curve_spec(text: &str) -> Result<CurveSpec, SpecError> {
    let raw: RawSpec =
        serde_json::from_str(text).map_err(|e| SpecError::Malformed(e.to_string()))?;
    let kind = match raw.kind.as_str() {
        "elliptic" => {
            let g2 = parse_field(
                "g2",
                raw.g2
                    .as_deref()
                    .ok_or_else(|| SpecError::Malformed("elliptic spec needs g2".into()))?,
            )?;
            let g3 = parse_field(
                "g3",
                raw.g3
                    .as_deref()
                    .ok_or_else(|| SpecError::Malformed("elliptic spec needs g3".into()))?,
            )?;
            let curve = EllipticCurveW::new(g2, g3)
                .map_err(|e| SpecError::Singular(e.to_string()))?;
            CurveKind::Elliptic(curve)
        }
        "genus2" => {
            let lam = raw
                .lambda
                .as_ref()
                .ok_or_else(|| SpecError::Malformed("genus2 spec needs lambda".into()))?;
            if lam.len() != 5 {
                return Err(SpecError::Malformed(format!(
                    "lambda must list the 5 coefficients lambda0..lambda4, got {}",
                    lam.len()
                )));
            }
            let mut l = Vec::with_capacity(5);
            for (i, s) in lam.iter().enumerate() {
                l.push(parse_field(&format!("lambda{}", i), s)?);
            }
            let curve = HyperellipticCurveG2::new([
                l[0].clone(),
                l[1].clone(),
                l[2].clone(),
                l[3].clone(),
                l[4].clone(),
            ])
            .map_err(|e| SpecError::Singular(e.to_string()))?;
            CurveKind::Genus2(curve)
        }
        other => {
            return Err(SpecError::Malformed(format!(
                "unknown curve kind `{}` (expected elliptic or genus2)",
                other
            )))
        }
    };
    let point = match &raw.point {
        None => None,
        Some(coords) if coords.len() == 1 => Some((parse_field("point.x", &coords[0])?, None)),
        Some(coords) if coords.len() == 2 => Some((
            parse_field("point.x", &coords[0])?,
            Some(parse_field("point.y", &coords[1])?),
        )),
        Some(coords) => {
            return Err(SpecError::Malformed(format!(
                "point must have 1 or 2 coordinates, got {}",
                coords.len()
            )))
        }
    };
    // Validate the point against the curve.
    if let Some((x, y)) = &point {
        let on_curve = match (&kind, y) {
            (CurveKind::Elliptic(c), Some(y)) => c.contains(x, y),
            (CurveKind::Genus2(c), Some(y)) => c.contains(x, y),
            (CurveKind::Elliptic(c), None) => c.f().eval(x).is_zero(),
            (CurveKind::Genus2(c), None) => c.f().eval(x).is_zero(),
        };
        if !on_curve {
            return Err(SpecError::OffCurvePoint {
                x: psilab_algebra::rational_string(x),
                y: y.as_ref()
                    .map(psilab_algebra::rational_string)
                    .unwrap_or_else(|| "0".into()),
            });
        }
    }
    let lattice = match &raw.lattice {
        None => None,
        Some([w1, w2]) => Some((parse_complex(w1)?, parse_complex(w2)?)),
    };
    let label = match &kind {
        CurveKind::Elliptic(c) => format!("elliptic(g2={}, g3={})", c.g2(), c.g3()),
        CurveKind::Genus2(c) => {
            let l = c.lambda();
            format!(
                "genus2(lambda=[{}])",
                l.iter()
                    .map(psilab_algebra::rational_string)
                    .collect::<Vec<_>>()
                    .join(",")
            )
        }
    };
    Ok(CurveSpec {
        kind,
        point,
        lattice,
        label,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_genus2_with_weierstrass_point() {
        let spec =
            parse_curve_spec(r#"{"kind":"genus2","lambda":["0","1","0","0","0"],"point":["0"]}"#)
                .unwrap();
        assert!(matches!(spec.kind, CurveKind::Genus2(_)));
        assert!(spec.point.is_some());
    }

    #[test]
    fn parses_elliptic() {
        let spec = parse_curve_spec(r#"{"kind":"elliptic","g2":"4","g3":"0"}"#).unwrap();
        assert!(matches!(spec.kind, CurveKind::Elliptic(_)));
    }

    #[test]
    fn rejects_singular_genus2() {
        let err =
            parse_curve_spec(r#"{"kind":"genus2","lambda":["0","0","0","0","0"]}"#).unwrap_err();
        assert!(matches!(err, SpecError::Singular(_)));
    }

    #[test]
    fn rejects_bad_rational_distinctly() {
        let err = parse_curve_spec(r#"{"kind":"elliptic","g2":"x","g3":"0"}"#).unwrap_err();
        assert!(matches!(err, SpecError::BadRational { .. }));
    }

    #[test]
    fn rejects_off_curve_point_distinctly() {
        let err = parse_curve_spec(
            r#"{"kind":"elliptic","g2":"4","g3":"-4","point":["1","3"]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, SpecError::OffCurvePoint { .. }));
    }

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("2").unwrap(), Complex64::new(2.0, 0.0));
        assert_eq!(parse_complex("2i").unwrap(), Complex64::new(0.0, 2.0));
        assert_eq!(parse_complex("1+2i").unwrap(), Complex64::new(1.0, 2.0));
        assert_eq!(parse_complex("1.5-0.5i").unwrap(), Complex64::new(1.5, -0.5));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert!(parse_complex("nope+i*").is_err());
    }
}
