use herbrand::InvariantFactors;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

/// What a command produced: aligned text, the same content as JSON, and
/// whether everything it checked held.
#[derive(Clone, Debug)]
pub struct Rendered {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Rendered {
    pub fn new(table: Table, json: Value) -> Self {
        Rendered {
            text: table.render(),
            json,
            ok: true,
        }
    }

    pub fn failed(mut self) -> Self {
        self.ok = false;
        self
    }
}

/// Key/value lines with the values lined up.
#[derive(Default)]
pub struct Table {
    rows: Vec<(String, String)>,
}

impl Table {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn row(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.rows.push((key.into(), value.to_string()));
        self
    }

    pub fn render(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|(k, _)| k.chars().count())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.rows {
            let pad = width - k.chars().count() + 2;
            out.push_str(k);
            out.extend(std::iter::repeat_n(' ', pad));
            out.push_str(v);
            out.push('\n');
        }
        out
    }
}

/// A JSON number when it fits in `i64`, a decimal string otherwise.
pub fn json_int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn json_factors(f: &InvariantFactors) -> Value {
    json!({
        "free_rank": f.free_rank,
        "torsion": f.torsion_divisors.iter().map(json_int).collect::<Vec<_>>(),
    })
}
