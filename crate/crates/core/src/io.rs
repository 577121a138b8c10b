//! On-disk formats: map JSON, deterministic JSON output and boundary CSV.
//!
//! Map files are a top-level object holding either `"h"` and `"g"` (arrays of
//! `[re, im]` pairs, index = power) or `"closed_form"` (`"K"`, `"KH_1"` ..
//! `"KH_4"`). An optional `"meta"` object is ignored on read.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::harmonic::{ClosedFormId, HarmonicMap};
use crate::radius::{BoundaryProfile, MapSource};
use crate::series::PowerSeries;
use crate::Complex;

/// Writes floats with 17 significant digits in exponent form.
#[derive(Debug, Clone, Copy, Default)]
pub struct FixedDigits;

impl Formatter for FixedDigits {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{}", fmt_float(value))
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// `{:.16e}`, the float format shared by JSON and CSV output.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// Serializes with sorted keys and [`FixedDigits`] floats.
pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    // Value maps are ordered, so the round trip sorts every key.
    let value = serde_json::to_value(value).map_err(|e| Error::Format(e.to_string()))?;
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedDigits);
    value
        .serialize(&mut ser)
        .map_err(|e| Error::Format(e.to_string()))?;
    Ok(String::from_utf8(out).expect("serde_json emits UTF-8"))
}

fn series_to_value(s: &PowerSeries) -> Value {
    Value::Array(
        s.coeffs()
            .iter()
            .map(|c| serde_json::json!([c.re, c.im]))
            .collect(),
    )
}

/// `{"h": .., "g": ..}` plus an optional `"meta"` object.
pub fn map_to_json(map: &HarmonicMap, meta: Option<Value>) -> Result<String> {
    let mut obj = Map::new();
    obj.insert("h".into(), series_to_value(map.h()));
    obj.insert("g".into(), series_to_value(map.g()));
    if let Some(meta) = meta {
        obj.insert("meta".into(), meta);
    }
    to_json_string(&Value::Object(obj))
}

fn series_from_value(v: &Value, key: &str) -> Result<PowerSeries> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Format(format!("\"{key}\" must be an array of [re, im] pairs")))?;
    let coeffs = arr
        .iter()
        .enumerate()
        .map(|(n, pair)| match pair.as_array().map(Vec::as_slice) {
            Some([re, im]) => match (re.as_f64(), im.as_f64()) {
                (Some(re), Some(im)) => Ok(Complex::new(re, im)),
                _ => Err(Error::Format(format!("\"{key}\"[{n}] is not numeric"))),
            },
            _ => Err(Error::Format(format!(
                "\"{key}\"[{n}] is not a [re, im] pair"
            ))),
        })
        .collect::<Result<Vec<_>>>()?;
    PowerSeries::from_coeffs(coeffs).map_err(|e| Error::Format(format!("\"{key}\": {e}")))
}

fn closed_form_from(obj: &Map<String, Value>, name: &Value) -> Result<ClosedFormId> {
    let name = name
        .as_str()
        .ok_or_else(|| Error::Format("\"closed_form\" must be a string".into()))?;
    let m = match obj.get("m") {
        None => None,
        Some(v) => Some(
            v.as_u64()
                .filter(|m| (1..=4).contains(m))
                .ok_or_else(|| Error::Format("\"m\" must be an integer in 1..=4".into()))?
                as u8,
        ),
    };
    match (name.parse::<ClosedFormId>(), m) {
        (Ok(id), None) => Ok(id),
        (Ok(ClosedFormId::HarmonicKoebe(a)), Some(b)) if a == b => {
            Ok(ClosedFormId::HarmonicKoebe(a))
        }
        (Ok(id), Some(m)) => Err(Error::Format(format!(
            "\"m\" = {m} contradicts closed form {id}"
        ))),
        (Err(_), Some(m)) if name == "KH" || name == "KH_m" => ClosedFormId::harmonic(m),
        (Err(e), _) => Err(e),
    }
}

/// Parses a map file. Malformed input is an [`Error::Format`], never a panic.
pub fn map_from_json(text: &str) -> Result<MapSource> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Format("top level must be an object".into()))?;
    if let Some(name) = obj.get("closed_form") {
        return closed_form_from(obj, name).map(MapSource::Closed);
    }
    match (obj.get("h"), obj.get("g")) {
        (Some(h), Some(g)) => Ok(MapSource::Series(HarmonicMap::new(
            series_from_value(h, "h")?,
            series_from_value(g, "g")?,
        ))),
        _ => Err(Error::Format(
            "expected \"h\" and \"g\", or \"closed_form\"".into(),
        )),
    }
}

/// `theta,re,im,modulus` rows with LF endings.
pub fn write_boundary_csv<W: Write>(profile: &BoundaryProfile, mut out: W) -> io::Result<()> {
    writeln!(out, "theta,re,im,modulus")?;
    for ((theta, v), m) in profile
        .thetas
        .iter()
        .zip(&profile.values)
        .zip(&profile.moduli)
    {
        writeln!(
            out,
            "{},{},{},{}",
            fmt_float(*theta),
            fmt_float(v.re),
            fmt_float(v.im),
            fmt_float(*m)
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonic::DilatationSpec;
    use crate::shear::shear_koebe;
    use proptest::prelude::*;

    #[test]
    fn seventeen_digits_and_sorted_keys() {
        let v = serde_json::json!({"b": 1.0 / 3.0, "a": [0.5, -2.0]});
        let s = to_json_string(&v).unwrap();
        assert_eq!(
            s,
            r#"{"a":[5.0000000000000000e-1,-2.0000000000000000e0],"b":3.3333333333333331e-1}"#
        );
    }

    #[test]
    fn map_round_trip() {
        let spec = DilatationSpec::new(0.5, 2.0, 0.7).unwrap();
        let map = shear_koebe(&spec, 16).unwrap();
        let text = map_to_json(&map, Some(serde_json::json!({"order": 16}))).unwrap();
        match map_from_json(&text).unwrap() {
            MapSource::Series(back) => assert_eq!(back, map),
            other => panic!("expected series map, got {other:?}"),
        }
    }

    #[test]
    fn closed_form_files() {
        let cases = [
            (r#"{"closed_form": "KH_3"}"#, ClosedFormId::HarmonicKoebe(3)),
            (
                r#"{"closed_form": "K", "meta": {"x": 1}}"#,
                ClosedFormId::AnalyticKoebe,
            ),
            (
                r#"{"closed_form": "KH_m", "m": 2}"#,
                ClosedFormId::HarmonicKoebe(2),
            ),
            (
                r#"{"closed_form": "KH_4", "m": 4}"#,
                ClosedFormId::HarmonicKoebe(4),
            ),
        ];
        for (text, want) in cases {
            match map_from_json(text).unwrap() {
                MapSource::Closed(id) => assert_eq!(id, want),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn malformed_files_are_format_errors() {
        for text in [
            "",
            "[]",
            "{}",
            r#"{"h": [[0, 0]]}"#,
            r#"{"h": [[0, 0], [1]], "g": []}"#,
            r#"{"h": "x", "g": [[0, 0]]}"#,
            r#"{"h": [], "g": [[0, 0]]}"#,
            r#"{"closed_form": "KH_7"}"#,
            r#"{"closed_form": 3}"#,
            r#"{"closed_form": "KH_1", "m": 3}"#,
            r#"{"closed_form": "KH_m", "m": 9}"#,
        ] {
            assert!(
                matches!(map_from_json(text), Err(Error::Format(_))),
                "{text}"
            );
        }
    }

    #[test]
    fn csv_layout() {
        let profile = BoundaryProfile {
            r: 0.5,
            thetas: vec![0.0, 1.0],
            values: vec![Complex::new(0.5, 0.0), Complex::new(0.25, -0.5)],
            moduli: vec![0.5, 0.5590169943749475],
        };
        let mut out = Vec::new();
        write_boundary_csv(&profile, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.split('\n').collect();
        assert_eq!(lines[0], "theta,re,im,modulus");
        assert_eq!(
            lines[1],
            "0.0000000000000000e0,5.0000000000000000e-1,0.0000000000000000e0,5.0000000000000000e-1"
        );
        assert_eq!(lines.len(), 4);
        assert!(!text.contains('\r'));
    }

    proptest! {
        #[test]
        fn float_format_round_trips(v in proptest::num::f64::NORMAL | proptest::num::f64::ZERO) {
            prop_assert_eq!(fmt_float(v).parse::<f64>().unwrap(), v);
        }

        #[test]
        fn arbitrary_text_never_panics(text in ".{0,64}") {
            let _ = map_from_json(&text);
        }
    }
}
