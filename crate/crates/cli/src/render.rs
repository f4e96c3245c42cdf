use serde::Serialize;
use serde_json::Value;

enum Line {
    Plain(String),
    Status(String, bool, &'static str, &'static str),
}

/// A command result with a JSON body and a human-readable rendering.
pub struct Report {
    command: &'static str,
    body: Value,
    lines: Vec<Line>,
}

impl Report {
    pub fn new(command: &'static str, body: impl Serialize) -> Self {
        let body = serde_json::to_value(body).expect("report serializes");
        Report { command, body, lines: Vec::new() }
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(Line::Plain(text.into()));
        self
    }

    /// `label: true|false`, colored when enabled.
    pub fn flag(&mut self, label: impl Into<String>, ok: bool) -> &mut Self {
        self.lines.push(Line::Status(label.into(), ok, "true", "false"));
        self
    }

    pub fn verdict(&mut self, label: impl Into<String>, ok: bool, yes: &'static str, no: &'static str) -> &mut Self {
        self.lines.push(Line::Status(label.into(), ok, yes, no));
        self
    }

    pub fn json(&self) -> String {
        let wrapped = serde_json::json!({ "command": self.command, "result": self.body });
        let mut s = serde_json::to_string_pretty(&wrapped).expect("json");
        s.push('\n');
        s
    }

    pub fn text(&self, color: bool) -> String {
        let mut out = String::new();
        for line in &self.lines {
            match line {
                Line::Plain(s) => out.push_str(s),
                Line::Status(label, ok, yes, no) => {
                    let word = if *ok { yes } else { no };
                    out.push_str(label);
                    if color {
                        let code = if *ok { "32" } else { "31" };
                        out.push_str(&format!("\x1b[{code}m{word}\x1b[0m"));
                    } else {
                        out.push_str(word);
                    }
                }
            }
            out.push('\n');
        }
        out
    }
}

pub fn color_enabled() -> bool {
    matches!(std::env::var("GDERHAM_COLOR").as_deref(), Ok("1" | "true" | "always" | "yes"))
}

pub fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

pub fn opt_f64(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_string(), |v| format!("{v:.3e}"))
}
