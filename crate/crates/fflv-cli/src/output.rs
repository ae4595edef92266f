//! Rendering helpers shared by the subcommands: JSON encodings of triangles,
//! certificates and families, and the compact strings used in table mode.

use fflv::perm::{PermA, SignedPermC};
use fflv::polytope_a::{positions_a, TriangleA};
use fflv::polytope_c::{positions_c, TriangleC};
use fflv::rat::format_rat;
use fflv::segments::SegmentFamily;
use fflv::vertices_a::Antichain;
use fflv::weights::EpsWeight;
use serde_json::{json, Map, Value};

pub fn triangle_a_json(x: &TriangleA) -> Value {
    let mut map = Map::new();
    for p in positions_a(x.n()) {
        map.insert(format!("{},{}", p.i, p.j), json!(format_rat(x.get(p))));
    }
    Value::Object(map)
}

pub fn triangle_c_json(x: &TriangleC) -> Value {
    let mut map = Map::new();
    for p in positions_c(x.n()) {
        map.insert(format!("{},{}", p.i, p.j), json!(format_rat(x.get(p))));
    }
    Value::Object(map)
}

/// Entries in canonical order, grouped by row length: "1,0; 1".
pub fn triangle_a_compact(x: &TriangleA) -> String {
    let mut groups: Vec<Vec<String>> = Vec::new();
    let mut last_len = 0;
    for p in positions_a(x.n()) {
        if p.j - p.i != last_len {
            last_len = p.j - p.i;
            groups.push(Vec::new());
        }
        groups.last_mut().unwrap().push(format_rat(x.get(p)));
    }
    groups
        .iter()
        .map(|g| g.join(","))
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn triangle_c_compact(x: &TriangleC) -> String {
    let mut groups: Vec<Vec<String>> = Vec::new();
    let mut last_len = 0;
    for p in positions_c(x.n()) {
        if p.j - p.i != last_len {
            last_len = p.j - p.i;
            groups.push(Vec::new());
        }
        groups.last_mut().unwrap().push(format_rat(x.get(p)));
    }
    groups
        .iter()
        .map(|g| g.join(","))
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn certificate_json(tuple: &[Antichain]) -> Value {
    Value::Array(
        tuple
            .iter()
            .map(|a| {
                Value::Array(
                    a.elements()
                        .iter()
                        .map(|p| json!(format!("{},{}", p.i, p.j)))
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn certificate_compact(tuple: &[Antichain]) -> String {
    tuple
        .iter()
        .map(|a| {
            let inner = a
                .elements()
                .iter()
                .map(|p| format!("({},{})", p.i, p.j))
                .collect::<Vec<_>>()
                .join("");
            format!("{{{inner}}}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn family_json(family: &SegmentFamily) -> Value {
    Value::Array(
        family
            .segments()
            .iter()
            .map(|s| json!(format!("{}-{}", s.i, s.j)))
            .collect(),
    )
}

pub fn family_compact(family: &SegmentFamily) -> String {
    if family.is_empty() {
        return "(empty)".to_string();
    }
    family
        .segments()
        .iter()
        .map(|s| format!("{}-{}", s.i, s.j))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn perm_json(w: &PermA) -> Value {
    Value::Array(w.images().iter().map(|&v| json!(v)).collect())
}

pub fn perm_compact(w: &PermA) -> String {
    w.images()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn signed_perm_json(w: &SignedPermC) -> Value {
    json!({
        "sigma": perm_json(&w.sigma),
        "signs": w.signs.iter().map(|&s| json!(s)).collect::<Vec<_>>(),
    })
}

pub fn signed_perm_compact(w: &SignedPermC) -> String {
    let signs = w
        .signs
        .iter()
        .map(|&s| if s > 0 { "+" } else { "-" })
        .collect::<String>();
    format!("{} [{signs}]", perm_compact(&w.sigma))
}

pub fn eps_json(mu: &EpsWeight) -> Value {
    Value::Array(mu.coords().iter().map(|c| json!(format_rat(c))).collect())
}

pub fn eps_compact(mu: &EpsWeight) -> String {
    let inner = mu
        .coords()
        .iter()
        .map(format_rat)
        .collect::<Vec<_>>()
        .join(",");
    format!("({inner})")
}

pub fn weight_compact(coords: &[i64]) -> String {
    let inner = coords
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("({inner})")
}

/// Pads every column to its widest entry. The first row is the header.
pub fn aligned(rows: &[Vec<String>]) -> String {
    if rows.is_empty() {
        return String::new();
    }
    let cols = rows.iter().map(Vec::len).max().unwrap();
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (k, cell) in row.iter().enumerate() {
            widths[k] = widths[k].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (k, cell) in row.iter().enumerate() {
            if k > 0 {
                line.push_str("  ");
            }
            if k + 1 == row.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<width$}", width = widths[k]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
