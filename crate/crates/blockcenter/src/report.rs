//! Deterministic run reports with text and JSON emission.
//!
//! JSON output is hand-assembled with a fixed key order (`schema` is 1) and
//! carries every number as a decimal string, so consumers never lose
//! precision and two runs with the same inputs emit byte-identical bytes.

use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Verdict { pass: bool, detail: String },
    Table { header: Vec<String>, rows: Vec<Vec<String>> },
    Text { lines: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub title: String,
    pub items: Vec<Item>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report { command: command.into(), status: Status::Pass, sections: Vec::new() }
    }

    pub fn section(&mut self, title: impl Into<String>) -> &mut Section {
        self.sections.push(Section { title: title.into(), items: Vec::new() });
        self.sections.last_mut().expect("just pushed")
    }

    /// Records a verdict in the most recent section (creating one if needed)
    /// and folds it into the overall status.
    pub fn verdict(&mut self, pass: bool, detail: impl Into<String>) {
        if self.sections.is_empty() {
            self.section("result");
        }
        self.sections
            .last_mut()
            .expect("nonempty")
            .items
            .push(Item::Verdict { pass, detail: detail.into() });
        if !pass && self.status == Status::Pass {
            self.status = Status::Fail;
        }
    }

    pub fn error(&mut self, detail: impl Into<String>) {
        if self.sections.is_empty() {
            self.section("error");
        }
        self.sections
            .last_mut()
            .expect("nonempty")
            .items
            .push(Item::Text { lines: vec![detail.into()] });
        self.status = Status::Error;
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} — {}\n", self.command, self.status.as_str());
        for section in &self.sections {
            let _ = writeln!(out, "\n[{}]", section.title);
            for item in &section.items {
                match item {
                    Item::Verdict { pass, detail } => {
                        let _ = writeln!(out, "  {} {detail}", if *pass { "✓" } else { "✗" });
                    }
                    Item::Text { lines } => {
                        for line in lines {
                            let _ = writeln!(out, "  {line}");
                        }
                    }
                    Item::Table { header, rows } => {
                        let cols = header.len().max(rows.iter().map(Vec::len).max().unwrap_or(0));
                        let mut widths = vec![0usize; cols];
                        let measure = |widths: &mut Vec<usize>, row: &[String]| {
                            for (j, cell) in row.iter().enumerate() {
                                widths[j] = widths[j].max(cell.chars().count());
                            }
                        };
                        measure(&mut widths, header);
                        for row in rows {
                            measure(&mut widths, row);
                        }
                        let render = |row: &[String]| {
                            let mut line = String::from(" ");
                            for (j, cell) in row.iter().enumerate() {
                                let pad = widths[j] - cell.chars().count();
                                let _ = write!(line, " {}{cell}", " ".repeat(pad));
                            }
                            line
                        };
                        if !header.is_empty() {
                            let _ = writeln!(out, " {}", render(header));
                        }
                        for row in rows {
                            let _ = writeln!(out, " {}", render(row));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("{\"schema\":1,\"command\":");
        json_string(&mut out, &self.command);
        out.push_str(",\"status\":");
        json_string(&mut out, self.status.as_str());
        out.push_str(",\"sections\":[");
        for (i, section) in self.sections.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str("{\"title\":");
            json_string(&mut out, &section.title);
            out.push_str(",\"items\":[");
            for (j, item) in section.items.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                match item {
                    Item::Verdict { pass, detail } => {
                        out.push_str("{\"kind\":\"verdict\",\"pass\":");
                        out.push_str(if *pass { "true" } else { "false" });
                        out.push_str(",\"detail\":");
                        json_string(&mut out, detail);
                        out.push('}');
                    }
                    Item::Text { lines } => {
                        out.push_str("{\"kind\":\"text\",\"lines\":");
                        json_string_array(&mut out, lines);
                        out.push('}');
                    }
                    Item::Table { header, rows } => {
                        out.push_str("{\"kind\":\"table\",\"header\":");
                        json_string_array(&mut out, header);
                        out.push_str(",\"rows\":[");
                        for (r, row) in rows.iter().enumerate() {
                            if r > 0 {
                                out.push(',');
                            }
                            json_string_array(&mut out, row);
                        }
                        out.push_str("]}");
                    }
                }
            }
            out.push_str("]}");
        }
        out.push_str("]}");
        out.push('\n');
        out
    }
}

fn json_string(out: &mut String, s: &str) {
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

fn json_string_array(out: &mut String, items: &[String]) {
    out.push('[');
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        json_string(out, item);
    }
    out.push(']');
}
