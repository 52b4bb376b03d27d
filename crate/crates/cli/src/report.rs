//! Report assembly and emission (JSON or aligned table).
//!
//! Reports are byte-identical for identical (inputs, seed, window, version):
//! rows are emitted in construction order, which the suites already sort by
//! a stable key.

use std::fmt::Write as _;

#[derive(Clone, Copy, PartialEq)]
pub enum Format {
    Json,
    Table,
}

pub struct Report {
    command: String,
    seed: u64,
    window: u32,
    values: Vec<(String, String)>,
    checks: Vec<(String, String, bool, String)>,
}

impl Report {
    pub fn new(command: &str, seed: u64, window: u32) -> Report {
        Report {
            command: command.to_string(),
            seed,
            window,
            values: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn value(&mut self, key: &str, value: &str) {
        self.values.push((key.to_string(), value.to_string()));
    }

    pub fn check(&mut self, check: &str, subject: &str, pass: bool, detail: &str) {
        self.checks.push((
            check.to_string(),
            subject.to_string(),
            pass,
            detail.to_string(),
        ));
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|(_, _, p, _)| *p)
    }

    fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("version".into(), env!("CARGO_PKG_VERSION").into());
        obj.insert("command".into(), self.command.clone().into());
        obj.insert("seed".into(), self.seed.into());
        obj.insert("window".into(), self.window.into());
        if !self.values.is_empty() {
            let mut vals = serde_json::Map::new();
            for (k, v) in &self.values {
                vals.insert(k.clone(), v.clone().into());
            }
            obj.insert("values".into(), vals.into());
        }
        if !self.checks.is_empty() {
            let rows: Vec<serde_json::Value> = self
                .checks
                .iter()
                .map(|(c, s, p, d)| {
                    serde_json::json!({
                        "check": c, "subject": s, "pass": p, "detail": d,
                    })
                })
                .collect();
            obj.insert("checks".into(), rows.into());
            obj.insert("pass".into(), self.pass().into());
        }
        obj.into()
    }

    fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# {} (seed {}, window {}, v{})",
            self.command,
            self.seed,
            self.window,
            env!("CARGO_PKG_VERSION")
        );
        for (k, v) in &self.values {
            let _ = writeln!(out, "{k:>12}: {v}");
        }
        if !self.checks.is_empty() {
            let wide = self
                .checks
                .iter()
                .map(|(c, s, _, _)| c.len() + s.len())
                .max()
                .unwrap_or(0);
            for (c, s, p, d) in &self.checks {
                let status = if *p { "pass" } else { "FAIL" };
                let label = format!("{c}  {s}");
                let _ = writeln!(out, "{status}  {label:<w$}  {d}", w = wide + 2);
            }
            let _ = writeln!(
                out,
                "{}: {} checks, {} failed",
                if self.pass() { "PASS" } else { "FAIL" },
                self.checks.len(),
                self.checks.iter().filter(|(_, _, p, _)| !p).count()
            );
        }
        out
    }
}

pub fn emit(rep: &Report, format: Format, out: Option<&str>) -> Result<(), String> {
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rep.to_json()).expect("serializable");
            s.push('\n');
            s
        }
        Format::Table => rep.to_table(),
    };
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{path}: {e}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
