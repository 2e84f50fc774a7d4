//! JSON and DOT renderings. Big integers and rationals are written as
//! decimal strings; key order and element order are fixed.

use std::fmt::Write;

use serde_json::{json, Map, Value};

use crate::cone::HilbertBasis;
use crate::ehrhart::{EhrhartFit, EhrhartFunction};
use crate::faces::{isomorphism_classes_by, FacePoset, IsoClass, IsoMode, PolytopeVertex};
use crate::graph::{Host, Labeling};

pub fn host_json(host: &Host) -> Value {
    let edges: Vec<Value> = host
        .edges()
        .iter()
        .map(|&(u, v)| json!([host.vertices()[u], host.vertices()[v]]))
        .collect();
    json!({
        "kind": host.kind(),
        "vertices": host.vertices(),
        "edges": edges,
    })
}

pub fn labeling_json(l: &Labeling) -> Value {
    json!({ "values": l.values(), "magic_sum": l.magic_sum() })
}

pub fn hilbert_basis_json(hb: &HilbertBasis) -> Value {
    json!({
        "host": host_json(hb.host()),
        "elements": hb.iter().map(labeling_json).collect::<Vec<_>>(),
    })
}

/// A list of labelings on one host, such as matchings or factors.
pub fn labelings_json(host: &Host, labelings: &[Labeling]) -> Value {
    json!({
        "host": host_json(host),
        "labelings": labelings.iter().map(labeling_json).collect::<Vec<_>>(),
    })
}

pub fn ehrhart_json(fit: &EhrhartFit) -> Value {
    let strings = |v: &[num_rational::BigRational]| -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    };
    let (i, j) = match &fit.function {
        EhrhartFunction::Quasi(p) => (strings(p.i()), strings(p.j())),
        EhrhartFunction::KroneckerDelta => (Vec::new(), Vec::new()),
    };
    let samples: Map<String, Value> = fit
        .samples
        .iter()
        .enumerate()
        .map(|(r, h)| (r.to_string(), Value::String(h.to_string())))
        .collect();
    json!({
        "degree": fit.degree(),
        "I": i,
        "J": j,
        "delta_case": fit.is_delta(),
        "samples": samples,
    })
}

fn vertex_strings(v: &PolytopeVertex) -> Vec<String> {
    v.coordinates.iter().map(ToString::to_string).collect()
}

/// Class id of every face, counted from 0 within each dimension.
pub fn class_ids(poset: &FacePoset, mode: IsoMode) -> Vec<usize> {
    let mut ids = vec![0; poset.faces.len()];
    for d in -1..=poset.dimension() {
        for (k, class) in isomorphism_classes_by(poset, d, mode).iter().enumerate() {
            for &m in &class.members {
                ids[m] = k;
            }
        }
    }
    ids
}

/// Faces of the given dimension, or all faces.
pub fn faces_json(poset: &FacePoset, dim: Option<i64>, mode: IsoMode) -> Value {
    let ids = class_ids(poset, mode);
    let faces: Vec<Value> = poset
        .faces
        .iter()
        .enumerate()
        .filter(|(_, f)| dim.is_none_or(|d| f.dim == d))
        .map(|(i, f)| {
            let mut obj = Map::new();
            obj.insert("id".into(), json!(i));
            obj.insert("dim".into(), json!(f.dim));
            obj.insert("support".into(), json!(f.support));
            obj.insert("rays".into(), json!(f.rays));
            obj.insert("class".into(), json!(ids[i]));
            if let Some(v) = poset.vertex_of(f) {
                obj.insert("vertex".into(), json!(vertex_strings(&v)));
            }
            Value::Object(obj)
        })
        .collect();
    json!({
        "host": host_json(&poset.host),
        "dimension": poset.dimension(),
        "f_vector": poset.f_vector(),
        "faces": faces,
    })
}

pub fn classes_json(poset: &FacePoset, d: i64, classes: &[IsoClass]) -> Value {
    let list: Vec<Value> = classes
        .iter()
        .enumerate()
        .map(|(k, c)| {
            json!({
                "class": k,
                "count": c.count(),
                "representative": c.representative,
                "support": poset.faces[c.representative].support,
                "members": c.members,
            })
        })
        .collect();
    json!({ "dim": d, "classes": list })
}

fn coordinate_label(v: &PolytopeVertex) -> String {
    format!("({})", vertex_strings(v).join(","))
}

/// The polytope's vertex-edge graph, nodes labelled by coordinates.
pub fn edge_graph_dot(poset: &FacePoset) -> String {
    let mut out = String::from("graph edge_graph {\n");
    let mut ray_node = vec![usize::MAX; poset.rays.len()];
    for (k, (_, f)) in poset.faces_of_dim(0).enumerate() {
        ray_node[f.rays[0]] = k;
        let v = poset.vertex_of(f).expect("0-faces have one ray");
        let _ = writeln!(out, "  v{k} [label=\"{}\"];", coordinate_label(&v));
    }
    for (_, f) in poset.faces_of_dim(1) {
        let _ = writeln!(
            out,
            "  v{} -- v{};",
            ray_node[f.rays[0]], ray_node[f.rays[1]]
        );
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the face poset, one rank per dimension.
pub fn poset_dot(poset: &FacePoset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
    for d in -1..=poset.dimension() {
        let _ = write!(out, "  {{ rank=same;");
        for (i, _) in poset.faces_of_dim(d) {
            let _ = write!(out, " f{i};");
        }
        out.push_str(" }\n");
    }
    for (i, f) in poset.faces.iter().enumerate() {
        let edges: Vec<String> = f.support.iter().map(|&e| poset.host.edge_name(e)).collect();
        let _ = writeln!(
            out,
            "  f{i} [label=\"d{} {{{}}}\"];",
            f.dim,
            edges.join(" ")
        );
    }
    for &(lo, hi) in &poset.covers {
        let _ = writeln!(out, "  f{lo} -> f{hi};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::fit_quasipolynomial;
    use crate::faces::enumerate_faces;
    use crate::graph::{complete_digraph, complete_graph};

    #[test]
    fn ehrhart_shape() {
        let fit = fit_quasipolynomial(&complete_graph(3).unwrap()).unwrap();
        let v = ehrhart_json(&fit);
        assert_eq!(v["degree"], json!(0));
        assert_eq!(v["I"], json!(["1/2"]));
        assert_eq!(v["J"], json!(["1/2"]));
        assert_eq!(v["delta_case"], json!(false));
        assert_eq!(v["samples"]["0"], json!("1"));
        assert_eq!(v["samples"]["1"], json!("0"));
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["degree", "I", "J", "delta_case", "samples"]);
    }

    #[test]
    fn dot_for_segment() {
        let poset = enumerate_faces(&complete_digraph(2).unwrap()).unwrap();
        let dot = edge_graph_dot(&poset);
        assert_eq!(dot.matches(" -- ").count(), 1);
        assert!(dot.contains("label=\"(1,0,0,1)\""));
        let hasse = poset_dot(&poset);
        assert!(hasse.contains("rankdir=BT"));
        assert_eq!(hasse.matches(" -> ").count(), poset.covers.len());
    }

    #[test]
    fn face_json_has_classes() {
        let poset = enumerate_faces(&complete_digraph(3).unwrap()).unwrap();
        let v = faces_json(&poset, Some(0), IsoMode::Support);
        assert_eq!(v["faces"].as_array().unwrap().len(), 6);
        assert_eq!(v["f_vector"], json!([6, 15, 18, 9, 1]));
        let one = faces_json(&poset, Some(0), IsoMode::BipartiteImage);
        assert!(one["faces"]
            .as_array()
            .unwrap()
            .iter()
            .all(|f| f["class"] == json!(0)));
    }
}
