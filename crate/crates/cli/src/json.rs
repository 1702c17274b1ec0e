//! Deterministic JSON writer.
//!
//! Machine output must be byte-identical across identical invocations, so
//! floats are printed in a fixed form rather than shortest-round-trip:
//! general values use exactly 9 significant digits (`1.20160214e-1`),
//! while counterexample payloads use full precision (`{:e}`, which prints
//! the shortest string that parses back to the same bits). Keys keep
//! insertion order.

use std::fmt::Write;

#[derive(Debug, Clone, PartialEq)]
pub enum Json {
    Null,
    Bool(bool),
    UInt(u64),
    /// Fixed 9-significant-digit float.
    F9(f64),
    /// Full-precision float (counterexample payloads).
    FFull(f64),
    Str(String),
    Array(Vec<Json>),
    Object(Vec<(&'static str, Json)>),
}

impl Json {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out);
        out
    }

    fn write(&self, out: &mut String) {
        match self {
            Self::Null => out.push_str("null"),
            Self::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Self::UInt(v) => {
                write!(out, "{v}").unwrap();
            }
            Self::F9(v) => {
                write!(out, "{v:.8e}").unwrap();
            }
            Self::FFull(v) => {
                write!(out, "{v:e}").unwrap();
            }
            Self::Str(s) => write_escaped(s, out),
            Self::Array(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.write(out);
                }
                out.push(']');
            }
            Self::Object(fields) => {
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    write_escaped(key, out);
                    out.push(':');
                    value.write(out);
                }
                out.push('}');
            }
        }
    }
}

/// Convenience constructors for optional values.
pub fn opt_uint(v: Option<u64>) -> Json {
    v.map_or(Json::Null, Json::UInt)
}

pub fn opt_f9(v: Option<f64>) -> Json {
    v.map_or(Json::Null, Json::F9)
}

pub fn opt_str(v: Option<&str>) -> Json {
    v.map_or(Json::Null, |s| Json::Str(s.to_string()))
}

fn write_escaped(s: &str, out: &mut String) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                write!(out, "\\u{:04x}", c as u32).unwrap();
            }
            c => out.push(c),
        }
    }
    out.push('"');
}
