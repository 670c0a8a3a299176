//! Reports shared by every subcommand, rendered as JSON or as a text table.

use num_bigint::BigInt;
use qrgp_core::cycint::CycInt;
use qrgp_core::gf::{FieldCtx, FqElem};
use qrgp_core::qrext::{Check, QrFamily};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Named fields plus a list of checks. Field order is kept for text output;
/// JSON objects have sorted keys.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    fields: Vec<(String, Value, String)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), fields: Vec::new(), checks: Vec::new() }
    }

    /// Adds a field whose text form is the compact JSON.
    pub fn field(&mut self, key: &str, value: Value) -> &mut Self {
        let text = match &value {
            Value::String(s) => s.clone(),
            v => v.to_string(),
        };
        self.field_with_text(key, value, text)
    }

    pub fn field_with_text(&mut self, key: &str, value: Value, text: impl Into<String>) -> &mut Self {
        self.fields.push((key.to_string(), value, text.into()));
        self
    }

    pub fn check(&mut self, check: Check) -> &mut Self {
        self.checks.push(check);
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _, _)| k == key).map(|(_, v, _)| v)
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("command".into(), Value::String(self.command.clone()));
        for (k, v, _) in &self.fields {
            map.insert(k.clone(), v.clone());
        }
        map.insert("checks".into(), Value::Array(self.checks.iter().map(check_json).collect()));
        map.insert("pass".into(), Value::Bool(self.pass()));
        Value::Object(map)
    }

    pub fn to_text(&self) -> String {
        let key_w = self.fields.iter().map(|(k, _, _)| k.len()).max().unwrap_or(0);
        let mut out = format!("qr {}\n", self.command);
        for (k, _, t) in &self.fields {
            out.push_str(&format!("{k:<key_w$}  {t}\n"));
        }
        let name_w = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0).max(5);
        out.push_str(&format!("\n{:<name_w$}  {:<6}  {}\n", "CHECK", "RESULT", "WITNESS"));
        for c in &self.checks {
            let verdict = if c.pass { "pass" } else { "FAIL" };
            let witness = c.witness.as_deref().unwrap_or("");
            out.push_str(format!("{:<name_w$}  {verdict:<6}  {witness}", c.name).trim_end());
            out.push('\n');
        }
        out.push_str(&format!("\nverdict: {}\n", if self.pass() { "pass" } else { "FAIL" }));
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.to_json()).expect("serializable") + "\n",
            Format::Text => self.to_text(),
        }
    }
}

pub fn check_json(c: &Check) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), Value::String(c.name.clone()));
    m.insert("pass".into(), Value::Bool(c.pass));
    if let Some(w) = &c.witness {
        m.insert("witness".into(), Value::String(w.clone()));
    }
    Value::Object(m)
}

/// `{"p", "m", "coeffs"}` with coefficients in the polynomial basis.
pub fn fq_json(ctx: &FieldCtx, a: FqElem) -> Value {
    json!({ "p": ctx.characteristic(), "m": ctx.degree(), "coeffs": ctx.coeffs(a) })
}

/// The integer for a prime-field element, the coefficient list otherwise.
pub fn fq_text(ctx: &FieldCtx, a: FqElem) -> String {
    if ctx.is_prime_field() {
        a.index().to_string()
    } else {
        format!("{:?}", ctx.coeffs(a))
    }
}

/// `{"ell", "coeffs"}` with decimal-string coefficients.
pub fn cycint_json(a: &CycInt) -> Value {
    let coeffs: Vec<Value> = a.coeffs().iter().map(|c: &BigInt| Value::String(c.to_string())).collect();
    json!({ "ell": a.ell(), "coeffs": coeffs })
}

/// Binary words as a hex string of the bits (coordinate 0 least
/// significant), other words as symbol arrays.
pub fn word_json(p: u64, word: &[u32]) -> Value {
    if p == 2 {
        let mut nibbles = vec![0u8; word.len().div_ceil(4).max(1)];
        for (j, &b) in word.iter().enumerate() {
            nibbles[j / 4] |= ((b & 1) as u8) << (j % 4);
        }
        let hex: String = nibbles.iter().rev().map(|n| format!("{n:x}")).collect();
        Value::String(hex)
    } else {
        json!(word)
    }
}

pub fn symbols(word: &[FqElem]) -> Vec<u32> {
    word.iter().map(|c| c.index() as u32).collect()
}

/// `ell`, `p`, `gamma`, `eta`, `eta_prime` of a family.
pub fn family_fields(report: &mut Report, fam: &QrFamily) {
    let k = fam.prime.as_ref();
    report.field("ell", json!(fam.ell));
    report.field("p", json!(fam.p));
    for (key, v) in [("gamma", fam.gamma), ("eta", fam.eta), ("eta_prime", fam.eta_prime)] {
        report.field_with_text(key, fq_json(k, v), fq_text(k, v));
    }
}
