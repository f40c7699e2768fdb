//! File formats.
//!
//! * Graph: plain text, first line `n m`, then `m` lines `u v`, 0-based.
//! * Hypergraph: JSON `{"k": int, "n": int, "edges": [[v, …], …]}`.
//! * Tensor: JSON `{"order": k, "dim": n, "entries": [[i1, …, ik, value], …]}`.
//! * Partition: JSON `{"blocks": [[…], …]}`.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph};
use crate::partition::Partition;
use crate::tensor::SparseTensor;

/// Parse the plain-text graph format.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), "n")?;
    let m: usize = parse_field(parts.next(), "m")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {m} edge lines")))?;
        let mut ends = line.split_whitespace();
        let u: usize = parse_field(ends.next(), "u")?;
        let v: usize = parse_field(ends.next(), "v")?;
        edges.push((u, v));
    }
    Graph::new(n, edges).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_field<T: std::str::FromStr>(field: Option<&str>, name: &str) -> Result<T> {
    field
        .ok_or_else(|| Error::Parse(format!("missing field {name}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad value for field {name}")))
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn read_graph_file(path: &std::path::Path) -> Result<Graph> {
    parse_graph_text(&std::fs::read_to_string(path)?)
}

#[derive(Deserialize)]
struct HypergraphRaw {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

pub fn hypergraph_from_json(text: &str) -> Result<Hypergraph> {
    let raw: HypergraphRaw = serde_json::from_str(text)?;
    Hypergraph::new(raw.n, raw.k, raw.edges).map_err(|e| Error::Parse(e.to_string()))
}

pub fn hypergraph_to_json(h: &Hypergraph) -> Value {
    json!({
        "k": h.k(),
        "n": h.n(),
        "edges": h.edges(),
    })
}

pub fn read_hypergraph_file(path: &std::path::Path) -> Result<Hypergraph> {
    hypergraph_from_json(&std::fs::read_to_string(path)?)
}

#[derive(Deserialize)]
struct PartitionRaw {
    blocks: Vec<Vec<usize>>,
}

pub fn partition_from_json(text: &str) -> Result<Partition> {
    let raw: PartitionRaw = serde_json::from_str(text)?;
    Partition::new(raw.blocks).map_err(|e| Error::Parse(e.to_string()))
}

pub fn partition_to_json(p: &Partition) -> Value {
    json!({ "blocks": p.blocks() })
}

/// Tensor JSON: entries are `[i1, …, ik, value]` rows in index order.
pub fn tensor_to_json(t: &SparseTensor) -> Value {
    let entries: Vec<Value> = t
        .entries()
        .map(|(idx, v)| {
            let mut row: Vec<Value> = idx.iter().map(|&i| json!(i)).collect();
            row.push(json!(v));
            Value::Array(row)
        })
        .collect();
    json!({
        "order": t.order(),
        "dim": t.dim(),
        "entries": entries,
    })
}

pub fn tensor_from_json(text: &str) -> Result<SparseTensor> {
    let value: Value = serde_json::from_str(text)?;
    let order = value
        .get("order")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing integer field 'order'".into()))? as usize;
    let dim = value
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing integer field 'dim'".into()))? as usize;
    let entries = value
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing array field 'entries'".into()))?;
    let mut t = SparseTensor::new(order, dim).map_err(|e| Error::Parse(e.to_string()))?;
    for row in entries {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse("entry rows must be arrays".into()))?;
        if row.len() != order + 1 {
            return Err(Error::Parse(format!(
                "entry row has {} elements, expected {}",
                row.len(),
                order + 1
            )));
        }
        let idx: Vec<usize> = row[..order]
            .iter()
            .map(|v| {
                v.as_u64()
                    .map(|i| i as usize)
                    .ok_or_else(|| Error::Parse(format!("bad index {v}")))
            })
            .collect::<Result<_>>()?;
        let val = row[order]
            .as_f64()
            .ok_or_else(|| Error::Parse(format!("bad value {}", row[order])))?;
        t.set(&idx, val).map_err(|e| Error::Parse(e.to_string()))?;
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_text_round_trip() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (0, 3)]).unwrap();
        let text = graph_to_text(&g);
        assert_eq!(parse_graph_text(&text).unwrap(), g);
    }

    #[test]
    fn graph_parse_errors() {
        assert!(parse_graph_text("").is_err());
        assert!(parse_graph_text("2 1\n").is_err());
        assert!(parse_graph_text("2 1\n0 x\n").is_err());
        assert!(parse_graph_text("2 1\n0 0\n").is_err());
    }

    #[test]
    fn hypergraph_json_round_trip() {
        let h = Hypergraph::new(5, 3, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let text = hypergraph_to_json(&h).to_string();
        assert_eq!(hypergraph_from_json(&text).unwrap(), h);
    }

    #[test]
    fn tensor_json_round_trip() {
        let mut t = SparseTensor::new(3, 4).unwrap();
        t.set(&[0, 1, 2], 0.5).unwrap();
        t.set(&[3, 3, 3], -2.0).unwrap();
        let text = tensor_to_json(&t).to_string();
        assert_eq!(tensor_from_json(&text).unwrap(), t);
    }

    #[test]
    fn partition_json_round_trip() {
        let p = Partition::new(vec![vec![0, 2], vec![1]]).unwrap();
        let text = partition_to_json(&p).to_string();
        assert_eq!(partition_from_json(&text).unwrap(), p);
    }

    #[test]
    fn tensor_json_rejects_malformed() {
        assert!(tensor_from_json("{}").is_err());
        assert!(tensor_from_json(r#"{"order":2,"dim":2,"entries":[[0,1]]}"#).is_err());
        assert!(tensor_from_json(r#"{"order":2,"dim":2,"entries":[[0,5,1.0]]}"#).is_err());
    }
}
