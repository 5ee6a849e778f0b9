//! Browser bindings for the demo page in `www/`. Every export takes plain
//! strings and returns a JSON string; errors become JavaScript exceptions.

use dominotab::pavings::shifted_pavings;
use dominotab::{
    enumerate_domino_tableaux, enumerate_pavings, gamma_merge, gamma_split, is_pavable, is_shifted_pavable,
    to_canonical, two_quotient, verify_identity, Document, Domino, DominoTableau, DominoType, Error, Family,
    Orientation, Partition, Paving,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const BOX: usize = 36;
const MAX_PAVINGS: usize = 12;

fn parse_shape(shape: &str) -> Result<Partition, String> {
    shape.trim().parse().map_err(|e: Error| e.to_string())
}

fn parse_family(family: &str) -> Result<Family, String> {
    family.trim().parse().map_err(|e: Error| e.to_string())
}

/// SVG drawing of dominoes on `shape`, shaded by type, with dotted even
/// diagonals. `labels` pairs each domino with its fill text.
fn svg(shape: &Partition, labels: &[(Domino, String)]) -> String {
    let (w, h) = (shape.row_len(1) * BOX, shape.len() * BOX);
    let mut s = format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="-2 -2 {} {}">"#,
        w + 4,
        h + 4,
        w + 4,
        h + 4
    );
    for (d, label) in labels {
        let c = d.top_left();
        let (dw, dh) = match d.orient {
            Orientation::Horizontal => (2 * BOX, BOX),
            Orientation::Vertical => (BOX, 2 * BOX),
        };
        let (x, y) = ((c.col - 1) * BOX, (c.row - 1) * BOX);
        let class = match d.domino_type() {
            DominoType::One => "one",
            DominoType::Two => "two",
        };
        s.push_str(&format!(
            r#"<rect class="{class}" x="{x}" y="{y}" width="{dw}" height="{dh}"/><text x="{}" y="{}">{}</text>"#,
            x + dw / 2,
            y + dh / 2,
            escape(label)
        ));
    }
    let rows = shape.len() as i64;
    for k in (1 - rows..shape.row_len(1) as i64).filter(|k| k % 2 == 0) {
        // D_k joins the top left corners of its cells to the bottom right ones.
        let cells = shape.diagonal(k);
        if let (Some(first), Some(last)) = (cells.first(), cells.last()) {
            s.push_str(&format!(
                r#"<line class="diag" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                (first.col - 1) * BOX,
                (first.row - 1) * BOX,
                last.col * BOX,
                last.row * BOX
            ));
        }
    }
    s.push_str("</svg>");
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn unlabelled(p: &Paving) -> Vec<(Domino, String)> {
    p.dominoes().iter().map(|&d| (d, String::new())).collect()
}

fn labelled(t: &DominoTableau) -> Vec<(Domino, String)> {
    t.dominoes().map(|fd| (fd.domino, fd.fill.to_string())).collect()
}

pub fn explore_json(shape: &str) -> Result<String, String> {
    let lambda = parse_shape(shape)?;
    if lambda.size() > 40 {
        return Err("shapes above 40 boxes are too large for the demo".into());
    }
    let (mu, nu) = two_quotient(&lambda);
    let pavings = enumerate_pavings(&lambda);
    let shifted = if is_pavable(&lambda) { shifted_pavings(&lambda) } else { Vec::new() };
    let drawings: Vec<Value> = pavings
        .iter()
        .take(MAX_PAVINGS)
        .map(|p| json!({ "text": p.to_string(), "svg": svg(&lambda, &unlabelled(p)), "shifted": shifted.contains(p) }))
        .collect();
    Ok(json!({
        "shape": lambda.to_string(),
        "size": lambda.size(),
        "quotient": [mu.to_string(), nu.to_string()],
        "pavable": is_pavable(&lambda),
        "shifted_pavable": is_shifted_pavable(&lambda),
        "pavings": pavings.len(),
        "shifted_pavings": shifted.len(),
        "drawings": drawings,
    })
    .to_string())
}

pub fn split_json(family: &str, shape: &str, max_letter: u32, index: usize) -> Result<String, String> {
    let family = parse_family(family)?;
    let lambda = parse_shape(shape)?;
    if lambda.size() > 16 || max_letter > 4 {
        return Err("keep the shape to 16 boxes and the letters to 4".into());
    }
    let all = enumerate_domino_tableaux(family, &lambda, max_letter).map_err(|e| e.to_string())?;
    if all.is_empty() {
        return Err(format!("no {family} domino tableaux of shape {lambda} with letters up to {max_letter}"));
    }
    let t = &all[index % all.len()];
    let (t1, t2) = gamma_split(t).map_err(|e| e.to_string())?;
    let back = gamma_merge(family, &t1, &t2).map_err(|e| e.to_string())?;
    Ok(json!({
        "count": all.len(),
        "index": index % all.len(),
        "tableau": t.to_string(),
        "svg": svg(&lambda, &labelled(t)),
        "t1": t1.to_string(),
        "t2": t2.to_string(),
        "merged": back.to_string(),
        "canonical": to_canonical(&Document::DominoTableau { tableau: t.clone() }),
    })
    .to_string())
}

pub fn verify_json(family: &str, shape: &str, vars: usize) -> Result<String, String> {
    let family = parse_family(family)?;
    let lambda = parse_shape(shape)?;
    if lambda.size() > 20 || vars > 3 {
        return Err("keep the shape to 20 boxes and the variables to 3".into());
    }
    let r = verify_identity(family, &lambda, vars);
    Ok(json!({
        "status": r.status.to_string(),
        "line": r.to_string(),
        "lhs": r.lhs.to_string(),
        "rhs": r.rhs.to_string(),
    })
    .to_string())
}

/// Quotient, pavability and the first few pavings of a shape.
#[wasm_bindgen]
pub fn explore(shape: &str) -> Result<String, JsError> {
    explore_json(shape).map_err(|e| JsError::new(&e))
}

/// The `index`-th domino tableau (wrapping around) and its split.
#[wasm_bindgen]
pub fn split(family: &str, shape: &str, max_letter: u32, index: usize) -> Result<String, JsError> {
    split_json(family, shape, max_letter, index).map_err(|e| JsError::new(&e))
}

/// Both sides of the product formula for one shape.
#[wasm_bindgen]
pub fn verify(family: &str, shape: &str, vars: usize) -> Result<String, JsError> {
    verify_json(family, shape, vars).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn explore_reports_quotient_and_pavings() {
        let v = parse(&explore_json("[6,5,5,4]").unwrap());
        assert_eq!(v["quotient"], json!(["[2,2]", "[3,3]"]));
        assert_eq!(v["shifted_pavable"], json!(true));
        assert!(v["drawings"][0]["svg"].as_str().unwrap().starts_with("<svg"));
        let v = parse(&explore_json("[5,3,3,2,1]").unwrap());
        assert_eq!(v["pavable"], json!(false));
        assert_eq!(v["pavings"], json!(0));
        assert!(explore_json("[1,2]").is_err());
    }

    #[test]
    fn split_wraps_and_merges_back() {
        let v = parse(&split_json("plain", "[2,2]", 2, 7).unwrap());
        let count = v["count"].as_u64().unwrap() as usize;
        assert_eq!(v["index"].as_u64().unwrap() as usize, 7 % count);
        assert_eq!(v["merged"], v["tableau"]);
        assert!(split_json("plain", "[3]", 2, 0).is_err());
        assert!(split_json("tall", "[2]", 2, 0).is_err());
    }

    #[test]
    fn verify_passes() {
        let v = parse(&verify_json("shifted-set-valued", "[6,5,5,4]", 2).unwrap());
        assert_eq!(v["status"], json!("PASS"));
        assert_eq!(v["lhs"], v["rhs"]);
    }
}
