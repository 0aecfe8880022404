//! Versioned JSON image of a bracket table.
//!
//! Generators are listed in table order; each stored bracket (i <= j)
//! carries its expansion as (index, coefficient-string) pairs, with the
//! coefficient in the canonical scalar text form so a round trip is exact.

use serde_json::{json, Map, Value};
use symbolic_core::parse_scalar;

use crate::error::AlgebraError;
use crate::table::{BracketTable, GenCombo, Generator, Parity, table_from_parts};

pub const SCHEMA_VERSION: u64 = 1;

pub fn table_to_json(table: &BracketTable) -> Value {
    let generators: Vec<Value> = table
        .generators()
        .iter()
        .map(|g| json!({ "name": g.name, "parity": g.parity.label() }))
        .collect();
    let brackets: Vec<Value> = table
        .raw_brackets()
        .iter()
        .map(|((i, j), combo)| {
            let terms: Vec<Value> = combo
                .iter()
                .map(|(k, coeff)| json!({ "k": k, "coeff": coeff.to_string() }))
                .collect();
            json!({ "i": i, "j": j, "terms": terms })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "name": table.name(),
        "source": table.source(),
        "generators": generators,
        "brackets": brackets,
        "params": table.params_used(),
    })
}

pub fn table_to_json_string(table: &BracketTable) -> String {
    serde_json::to_string_pretty(&table_to_json(table)).expect("table serializes")
}

fn bad(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::BadSerialization(msg.into())
}

fn obj<'v>(value: &'v Value, what: &str) -> Result<&'v Map<String, Value>, AlgebraError> {
    value
        .as_object()
        .ok_or_else(|| bad(format!("{what} is not an object")))
}

fn field<'v>(map: &'v Map<String, Value>, key: &str) -> Result<&'v Value, AlgebraError> {
    map.get(key).ok_or_else(|| bad(format!("missing field `{key}`")))
}

fn str_field(map: &Map<String, Value>, key: &str) -> Result<String, AlgebraError> {
    field(map, key)?
        .as_str()
        .map(str::to_string)
        .ok_or_else(|| bad(format!("field `{key}` is not a string")))
}

fn index_field(map: &Map<String, Value>, key: &str) -> Result<usize, AlgebraError> {
    field(map, key)?
        .as_u64()
        .map(|v| v as usize)
        .ok_or_else(|| bad(format!("field `{key}` is not an index")))
}

pub fn table_from_json(value: &Value) -> Result<BracketTable, AlgebraError> {
    let root = obj(value, "table")?;
    let version = field(root, "schema_version")?
        .as_u64()
        .ok_or_else(|| bad("schema_version is not an integer"))?;
    if version != SCHEMA_VERSION {
        return Err(bad(format!(
            "unsupported schema_version {version}, expected {SCHEMA_VERSION}"
        )));
    }
    let name = str_field(root, "name")?;
    let source = str_field(root, "source")?;
    let gen_values = field(root, "generators")?
        .as_array()
        .ok_or_else(|| bad("generators is not an array"))?;
    let mut generators = Vec::with_capacity(gen_values.len());
    for gv in gen_values {
        let g = obj(gv, "generator")?;
        let gname = str_field(g, "name")?;
        let parity = match str_field(g, "parity")?.as_str() {
            "even" => Parity::Even,
            "odd" => Parity::Odd,
            other => return Err(bad(format!("unknown parity `{other}`"))),
        };
        generators.push(Generator {
            name: gname,
            parity,
        });
    }
    let bracket_values = field(root, "brackets")?
        .as_array()
        .ok_or_else(|| bad("brackets is not an array"))?;
    let mut entries = Vec::with_capacity(bracket_values.len());
    for bv in bracket_values {
        let b = obj(bv, "bracket")?;
        let i = index_field(b, "i")?;
        let j = index_field(b, "j")?;
        let terms = field(b, "terms")?
            .as_array()
            .ok_or_else(|| bad("terms is not an array"))?;
        let mut combo = GenCombo::zero();
        for tv in terms {
            let t = obj(tv, "term")?;
            let k = index_field(t, "k")?;
            let coeff = parse_scalar(&str_field(t, "coeff")?)?;
            combo.add_term(k, coeff);
        }
        entries.push((i, j, combo));
    }
    table_from_parts(name, source, generators, entries)
}

pub fn table_from_json_str(text: &str) -> Result<BracketTable, AlgebraError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| bad(format!("invalid JSON: {e}")))?;
    table_from_json(&value)
}
