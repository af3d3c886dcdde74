//! A small ordered document tree rendered either as indented key-value
//! text or as JSON. Both renderings come from the same tree, so they always
//! carry the same content in the same order.

use serde_json::{Map, Value as Json};
use unigen_core::certificate::{Certificate, Value};
use unigen_core::construct::GenSystem;
use unigen_core::gf::FieldSpec;
use unigen_core::matrix::{FMatrix, DEFAULT_ORDER_CAP};
use unigen_core::verify::ConditionReport;

use crate::format::{render_fel, render_fel_poly, render_field};

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Bool(bool),
    Int(i64),
    Str(String),
    List(Vec<Node>),
    Map(Vec<(String, Node)>),
}

impl Node {
    pub fn str(s: impl Into<String>) -> Self {
        Node::Str(s.into())
    }

    fn is_scalar(&self) -> bool {
        matches!(self, Node::Bool(_) | Node::Int(_) | Node::Str(_))
    }

    /// Scalars that can sit in an inline `[a, b]` list without ambiguity.
    fn is_inline_safe(&self) -> bool {
        match self {
            Node::Str(s) => !s.is_empty() && !s.contains([',', '[', ']', '\n']),
            other => other.is_scalar(),
        }
    }

    fn scalar_text(&self) -> String {
        match self {
            Node::Bool(b) => b.to_string(),
            Node::Int(i) => i.to_string(),
            Node::Str(s) if s.is_empty() || s.contains('\n') || s.trim() != s => {
                serde_json::to_string(s).expect("strings serialise")
            }
            Node::Str(s) => s.clone(),
            _ => unreachable!("not a scalar"),
        }
    }

    pub fn to_json(&self) -> Json {
        match self {
            Node::Bool(b) => Json::Bool(*b),
            Node::Int(i) => Json::from(*i),
            Node::Str(s) => Json::String(s.clone()),
            Node::List(items) => Json::Array(items.iter().map(Node::to_json).collect()),
            Node::Map(entries) => {
                let mut m = Map::new();
                for (k, v) in entries {
                    m.insert(k.clone(), v.to_json());
                }
                Json::Object(m)
            }
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("tree serialises");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Node::Map(entries) => write_map(&mut out, entries, 0),
            Node::List(items) => write_list(&mut out, items, 0),
            scalar => {
                out.push_str(&scalar.scalar_text());
                out.push('\n');
            }
        }
        out
    }
}

fn inline(items: &[Node]) -> Option<String> {
    if !items.iter().all(Node::is_inline_safe) {
        return None;
    }
    let parts: Vec<String> = items.iter().map(Node::scalar_text).collect();
    Some(format!("[{}]", parts.join(", ")))
}

fn write_value(out: &mut String, value: &Node, depth: usize) {
    match value {
        Node::List(items) => match inline(items) {
            Some(s) => {
                out.push(' ');
                out.push_str(&s);
                out.push('\n');
            }
            None => {
                out.push('\n');
                write_list(out, items, depth + 1);
            }
        },
        Node::Map(entries) if entries.is_empty() => out.push_str(" {}\n"),
        Node::Map(entries) => {
            out.push('\n');
            write_map(out, entries, depth + 1);
        }
        scalar => {
            out.push(' ');
            out.push_str(&scalar.scalar_text());
            out.push('\n');
        }
    }
}

fn write_map(out: &mut String, entries: &[(String, Node)], depth: usize) {
    let pad = "  ".repeat(depth);
    for (k, v) in entries {
        out.push_str(&pad);
        out.push_str(k);
        out.push(':');
        write_value(out, v, depth);
    }
}

fn write_list(out: &mut String, items: &[Node], depth: usize) {
    let pad = "  ".repeat(depth);
    for item in items {
        match item {
            Node::Map(entries) if !entries.is_empty() => {
                // first entry shares the dash line, the rest align under it
                let mut sub = String::new();
                write_map(&mut sub, entries, depth + 1);
                let body = &sub[(depth + 1) * 2..];
                out.push_str(&pad);
                out.push_str("- ");
                out.push_str(body);
            }
            Node::List(inner) => {
                out.push_str(&pad);
                out.push('-');
                write_value(out, &Node::List(inner.clone()), depth);
            }
            other => {
                out.push_str(&pad);
                out.push('-');
                write_value(out, other, depth);
            }
        }
    }
}

/// Builder for ordered maps.
#[derive(Default)]
pub struct MapBuilder(Vec<(String, Node)>);

impl MapBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn put(mut self, key: &str, value: impl Into<Node>) -> Self {
        self.0.push((key.to_string(), value.into()));
        self
    }

    pub fn build(self) -> Node {
        Node::Map(self.0)
    }
}

impl From<bool> for Node {
    fn from(b: bool) -> Self {
        Node::Bool(b)
    }
}

impl From<i64> for Node {
    fn from(v: i64) -> Self {
        Node::Int(v)
    }
}

impl From<u64> for Node {
    fn from(v: u64) -> Self {
        Node::Int(v as i64)
    }
}

impl From<usize> for Node {
    fn from(v: usize) -> Self {
        Node::Int(v as i64)
    }
}

impl From<&str> for Node {
    fn from(s: &str) -> Self {
        Node::Str(s.to_string())
    }
}

impl From<String> for Node {
    fn from(s: String) -> Self {
        Node::Str(s)
    }
}

impl From<Vec<Node>> for Node {
    fn from(v: Vec<Node>) -> Self {
        Node::List(v)
    }
}

pub fn matrix_node(field: &FieldSpec, m: &FMatrix) -> Node {
    Node::List(
        m.rows()
            .map(|row| {
                Node::List(
                    row.iter()
                        .map(|&x| Node::Str(render_fel(field, x)))
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn value_node(field: &FieldSpec, v: &Value) -> Node {
    match v {
        Value::Bool(b) => Node::Bool(*b),
        Value::Int(i) => Node::Int(*i),
        Value::Text(s) => Node::Str(s.clone()),
        Value::Elem(x) => Node::Str(render_fel(field, *x)),
        Value::Poly(p) => Node::List(
            p.coeffs()
                .iter()
                .map(|&c| Node::Str(render_fel(field, c)))
                .collect(),
        ),
        Value::Matrix(m) => matrix_node(field, m),
        Value::List(items) => Node::List(items.iter().map(|i| value_node(field, i)).collect()),
    }
}

pub fn conditions_node(report: &ConditionReport) -> Node {
    Node::Map(
        report
            .flags()
            .iter()
            .map(|&(k, v)| (k.to_string(), Node::Bool(v)))
            .collect(),
    )
}

fn order_node(m: &FMatrix, field: &FieldSpec) -> Node {
    match m.order(DEFAULT_ORDER_CAP, field).map(|o| o.finite()) {
        Ok(Some(k)) => Node::Int(k as i64),
        Ok(None) => Node::str(format!("> {DEFAULT_ORDER_CAP}")),
        Err(_) => Node::str("singular"),
    }
}

/// The matrices of a constructed pair and their orders.
pub fn system_node(sys: &GenSystem) -> Node {
    let f = sys.field();
    let labels: Vec<Node> = sys
        .basis_labels()
        .iter()
        .map(|l| Node::str(l.as_str()))
        .collect();
    let mut b = MapBuilder::new()
        .put("n", sys.n())
        .put("field", render_field(f))
        .put("basis", labels);
    if let Some(p) = sys.params() {
        b = b
            .put("a", render_fel(f, p.a))
            .put("a_poly", render_fel_poly(f, p.a))
            .put("b", render_fel(f, p.b))
            .put("c", render_fel(f, p.c))
            .put("gamma", render_fel(f, p.gamma));
    }
    b.put("order_x", order_node(sys.x(), f))
        .put("order_y", order_node(sys.y(), f))
        .put("x", matrix_node(f, sys.x()))
        .put("y", matrix_node(f, sys.y()))
        .put("gram", matrix_node(f, sys.gram()))
        .build()
}

/// The canonical certificate body. Field order is fixed; nothing depends on
/// the clock or the environment.
pub fn certificate_node(cert: &Certificate, modulus_input: Option<&str>) -> Node {
    let f = &cert.field;
    let checks: Vec<Node> = cert
        .checks
        .iter()
        .map(|c| {
            let mut entries = vec![
                ("name".to_string(), Node::str(c.name.as_str())),
                ("status".to_string(), Node::str(c.status.as_str())),
            ];
            entries.extend(c.payload.iter().map(|(k, v)| (k.clone(), value_node(f, v))));
            Node::Map(entries)
        })
        .collect();
    let labels: Vec<Node> = cert.basis.iter().map(|l| Node::str(l.as_str())).collect();
    let mut b = MapBuilder::new()
        .put("format", "unigen-certificate/1")
        .put("version", cert.version)
        .put("n", cert.n)
        .put("q", f.q())
        .put("field", render_field(f));
    if let Some(m) = modulus_input {
        b = b.put("modulus_input", m);
    }
    b = match cert.a {
        Some(a) => b
            .put("a", render_fel(f, a))
            .put("a_poly", render_fel_poly(f, a)),
        None => b.put("a", "none"),
    };
    let mut b = b
        .put("claim", cert.claim.as_str())
        .put("passed", cert.passed())
        .put("basis", labels)
        .put("checks", checks);
    if let Some(sys) = &cert.system {
        b = b.put(
            "matrices",
            MapBuilder::new()
                .put("x", matrix_node(f, sys.x()))
                .put("y", matrix_node(f, sys.y()))
                .put("gram", matrix_node(f, sys.gram()))
                .build(),
        );
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_layout() {
        let tree = MapBuilder::new()
            .put("a", 1i64)
            .put("flags", vec![Node::Bool(true), Node::Bool(false)])
            .put(
                "items",
                vec![
                    MapBuilder::new().put("name", "x").put("ok", true).build(),
                    MapBuilder::new().put("name", "note, with comma").build(),
                ],
            )
            .put(
                "m",
                vec![Node::List(vec![Node::str("1:0"), Node::str("0:0")])],
            )
            .put("words", vec![Node::str("a, b")])
            .put("empty", "")
            .build();
        let expect = "\
a: 1
flags: [true, false]
items:
  - name: x
    ok: true
  - name: note, with comma
m:
  - [1:0, 0:0]
words:
  - a, b
empty: \"\"
";
        assert_eq!(tree.to_text(), expect);
    }

    #[test]
    fn json_keeps_order() {
        let tree = MapBuilder::new().put("z", 1i64).put("a", 2i64).build();
        assert_eq!(tree.to_json_string(), "{\n  \"z\": 1,\n  \"a\": 2\n}\n");
    }
}
