//! Point file parsing and solution encoding.
//!
//! Points come as CSV (one `x,y` pair per line, optional `x,y` header,
//! blank lines ignored) or JSON (`{"points": [[x, y], ...]}`). Solutions are
//! written as JSON with infinite sides spelled `"inf"` / `"-inf"`.

use std::fmt;

use annulus_core::{AnnulusSolution, OrthoRect, PointSet, RectAnnulus};
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// A malformed input file, located by 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

/// Parses a point file. Ids follow file order.
pub fn parse_points(text: &str, format: Format) -> Result<PointSet, ParseError> {
    let coords = match format {
        Format::Csv => parse_csv(text)?,
        Format::Json => parse_json(text)?,
    };
    Ok(PointSet::from_coords(&coords).expect("coordinates were checked finite"))
}

fn parse_csv(text: &str) -> Result<Vec<(f64, f64)>, ParseError> {
    let mut out = Vec::new();
    let mut seen_data = false;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split(',').collect();
        if !seen_data && fields.len() == 2 && fields[0].trim() == "x" && fields[1].trim() == "y" {
            seen_data = true;
            continue;
        }
        seen_data = true;
        if fields.len() != 2 {
            return Err(err(line, 1, format!("expected two comma-separated values, found {}", fields.len())));
        }
        let mut pair = [0.0; 2];
        let mut column = 1;
        for (slot, field) in pair.iter_mut().zip(&fields) {
            let lead = field.len() - field.trim_start().len();
            *slot = parse_coord(field.trim()).map_err(|m| err(line, column + lead, m))?;
            column += field.len() + 1;
        }
        out.push((pair[0], pair[1]));
    }
    Ok(out)
}

fn parse_coord(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not a finite coordinate"))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointsDoc {
    points: Vec<(f64, f64)>,
}

fn parse_json(text: &str) -> Result<Vec<(f64, f64)>, ParseError> {
    let doc: PointsDoc = serde_json::from_str(text).map_err(|e| err(e.line(), e.column(), e.to_string()))?;
    Ok(doc.points)
}

/// CSV text with an `x,y` header, coordinates in shortest round-trip form.
pub fn points_to_csv(ps: &PointSet) -> String {
    let mut out = String::from("x,y\n");
    for p in ps.points() {
        out.push_str(&format!("{},{}\n", p.x, p.y));
    }
    out
}

/// `{"points": [[x, y], ...]}`.
pub fn points_to_json(coords: &[(f64, f64)]) -> Value {
    json!({ "points": coords.iter().map(|&(x, y)| json!([x, y])).collect::<Vec<_>>() })
}

/// A coordinate as JSON: a number, or `"inf"` / `"-inf"`.
pub fn encode_coord(v: f64) -> Value {
    if v == f64::INFINITY {
        json!("inf")
    } else if v == f64::NEG_INFINITY {
        json!("-inf")
    } else {
        json!(v)
    }
}

fn decode_coord(v: &Value) -> Option<f64> {
    match v {
        Value::String(s) if s == "inf" => Some(f64::INFINITY),
        Value::String(s) if s == "-inf" => Some(f64::NEG_INFINITY),
        _ => v.as_f64(),
    }
}

fn encode_rect(r: &OrthoRect) -> Value {
    json!({
        "left": encode_coord(r.left),
        "right": encode_coord(r.right),
        "bottom": encode_coord(r.bottom),
        "top": encode_coord(r.top),
    })
}

fn decode_rect(v: &Value) -> Option<OrthoRect> {
    let side = |k: &str| decode_coord(v.get(k)?);
    Some(OrthoRect::new(side("left")?, side("right")?, side("bottom")?, side("top")?))
}

/// The solve output document.
pub fn solution_json(problem: &str, sol: &AnnulusSolution) -> Value {
    json!({
        "problem": problem,
        "width": encode_coord(sol.width),
        "case": sol.shape.name(),
        "outer": encode_rect(&sol.rect_form.outer),
        "inner": encode_rect(&sol.rect_form.inner),
        "witness_indices": sol.witness_ids,
    })
}

/// Reads the annulus back out of a solve output document.
pub fn annulus_from_json(doc: &Value) -> Option<RectAnnulus> {
    Some(RectAnnulus::new(decode_rect(doc.get("outer")?)?, decode_rect(doc.get("inner")?)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_examples() {
        let ps = parse_points("0,0\n1,2\n", Format::Csv).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!((ps.point(1).x, ps.point(1).y, ps.point(1).id), (1.0, 2.0, 1));
        assert_eq!(parse_points("x,y\n\n 3.5 , -1e2\n", Format::Csv).unwrap().point(0).y, -100.0);
        let e = parse_points("0,abc", Format::Csv).unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
        let e = parse_points("1,1\n2,2\n3\n", Format::Csv).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(parse_points("1,NaN\n", Format::Csv).is_err());
        assert!(parse_points("inf,0\n", Format::Csv).is_err());
        assert!(parse_points("1,2\nx,y\n", Format::Csv).is_err());
    }

    #[test]
    fn json_examples() {
        assert_eq!(parse_points(r#"{"points":[[0,0]]}"#, Format::Json).unwrap().len(), 1);
        let e = parse_points("{\"points\":\n[[0,0],[1]]}", Format::Json).unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse_points(r#"{"points":[[0,1e400]]}"#, Format::Json).is_err());
        assert!(parse_points(r#"{"pts":[]}"#, Format::Json).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let ps = PointSet::from_coords(&[(0.1, 3.0), (-2.5, 1e-7)]).unwrap();
        let back = parse_points(&points_to_csv(&ps), Format::Csv).unwrap();
        assert_eq!(back.points(), ps.points());
    }

    #[test]
    fn infinities_are_strings() {
        assert_eq!(encode_coord(f64::INFINITY), json!("inf"));
        assert_eq!(encode_coord(0.1).to_string(), "0.1");
        let r = RectAnnulus::new(
            OrthoRect::new(f64::NEG_INFINITY, 2.0, 0.0, 4.0),
            OrthoRect::new(f64::NEG_INFINITY, 1.0, 1.0, 3.0),
        );
        let doc = json!({ "outer": encode_rect(&r.outer), "inner": encode_rect(&r.inner) });
        assert_eq!(annulus_from_json(&doc), Some(r));
    }
}
