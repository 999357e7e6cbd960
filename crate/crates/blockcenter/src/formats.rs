//! Text formats for the objects the CLI reads and writes.
//!
//! Three formats, all line-based, `#`-comments and blank lines ignored:
//!
//! * **matrix** — one row per line, whitespace-separated integers.
//! * **block** — `SCALE n`, then `SUBSECTION label` groups each holding a
//!   `Q r c` and a `CARTAN r c` matrix payload (dimension header followed by
//!   that many rows), and optionally a trailing `LAMBDA r c` table of stable
//!   generalized characters (columns in subsection order).
//! * **algebra** — header `DIM n P p UNIT i`, a line of `n` basis labels,
//!   then structure-constant triples `i j k c` meaning `e_i·e_j` contains
//!   `c·e_k` (omitted triples are zero).

use std::fmt::Write as _;

use blockcenter_core::{BlockDatum, FinDimAlgebra, IntMatrix, SubsectionDatum};
use num_bigint::BigInt;

/// A parse failure with a 1-based line number and a message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// Content lines paired with their original 1-based line numbers.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_row(line_no: usize, line: &str) -> Result<Vec<BigInt>, ParseError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<BigInt>()
                .map_err(|_| ParseError { line: line_no, message: format!("bad integer `{tok}`") })
        })
        .collect()
}

/// Parses a whole file as one matrix: every content line is a row.
pub fn parse_matrix(text: &str) -> Result<IntMatrix, ParseError> {
    let lines = content_lines(text);
    if lines.is_empty() {
        return err(1, "empty matrix");
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(lines.len());
    let mut width = 0usize;
    for (no, line) in lines {
        let row = parse_row(no, line)?;
        if rows.is_empty() {
            width = row.len();
        } else if row.len() != width {
            return err(no, format!("row has {} entries, expected {width}", row.len()));
        }
        rows.push(row);
    }
    let mut m = IntMatrix::zeros(rows.len(), width);
    for (i, row) in rows.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    Ok(m)
}

pub fn format_matrix(m: &IntMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if j > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}", m[(i, j)]);
        }
        out.push('\n');
    }
    out
}

/// Reads `count` rows of exactly `width` entries from the cursor position.
fn take_matrix(
    lines: &[(usize, &str)],
    pos: &mut usize,
    rows: usize,
    cols: usize,
) -> Result<IntMatrix, ParseError> {
    let mut m = IntMatrix::zeros(rows, cols);
    let last_no = lines.last().map_or(1, |&(n, _)| n);
    for i in 0..rows {
        let Some(&(no, line)) = lines.get(*pos) else {
            return err(last_no, format!("matrix truncated: expected {rows} rows"));
        };
        *pos += 1;
        let row = parse_row(no, line)?;
        if row.len() != cols {
            return err(no, format!("row has {} entries, expected {cols}", row.len()));
        }
        for (j, v) in row.into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    Ok(m)
}

/// Parses a `KEYWORD rows cols` header.
fn parse_dims(no: usize, rest: &[&str], keyword: &str) -> Result<(usize, usize), ParseError> {
    if rest.len() != 2 {
        return err(no, format!("`{keyword}` expects `rows cols`"));
    }
    let r = rest[0].parse::<usize>();
    let c = rest[1].parse::<usize>();
    match (r, c) {
        (Ok(r), Ok(c)) if r > 0 && c > 0 => Ok((r, c)),
        _ => err(no, format!("`{keyword}` expects positive `rows cols`")),
    }
}

pub fn parse_block(text: &str) -> Result<BlockDatum, ParseError> {
    let lines = content_lines(text);
    let mut pos = 0usize;
    let Some(&(no, first)) = lines.get(pos) else {
        return err(1, "empty block file");
    };
    let toks: Vec<&str> = first.split_whitespace().collect();
    if toks.len() != 2 || toks[0] != "SCALE" {
        return err(no, "block file must start with `SCALE n`");
    }
    let scale: BigInt = match toks[1].parse() {
        Ok(s) => s,
        Err(_) => return err(no, format!("bad integer `{}`", toks[1])),
    };
    pos += 1;

    let mut subsections: Vec<SubsectionDatum> = Vec::new();
    let mut lambda: Option<IntMatrix> = None;
    while let Some(&(no, line)) = lines.get(pos) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "SUBSECTION" => {
                if lambda.is_some() {
                    return err(no, "SUBSECTION after LAMBDA");
                }
                if toks.len() != 2 {
                    return err(no, "`SUBSECTION` expects a label");
                }
                let label = toks[1].to_string();
                pos += 1;
                let Some(&(qno, qline)) = lines.get(pos) else {
                    return err(no, "subsection truncated before `Q`");
                };
                let qtoks: Vec<&str> = qline.split_whitespace().collect();
                if qtoks.first() != Some(&"Q") {
                    return err(qno, "expected `Q rows cols`");
                }
                let (qr, qc) = parse_dims(qno, &qtoks[1..], "Q")?;
                pos += 1;
                let q = take_matrix(&lines, &mut pos, qr, qc)?;
                let Some(&(cno, cline)) = lines.get(pos) else {
                    return err(qno, "subsection truncated before `CARTAN`");
                };
                let ctoks: Vec<&str> = cline.split_whitespace().collect();
                if ctoks.first() != Some(&"CARTAN") {
                    return err(cno, "expected `CARTAN rows cols`");
                }
                let (cr, cc) = parse_dims(cno, &ctoks[1..], "CARTAN")?;
                pos += 1;
                let cartan = take_matrix(&lines, &mut pos, cr, cc)?;
                subsections.push(SubsectionDatum { label, q, cartan });
            }
            "LAMBDA" => {
                if lambda.is_some() {
                    return err(no, "duplicate LAMBDA");
                }
                let (lr, lc) = parse_dims(no, &toks[1..], "LAMBDA")?;
                pos += 1;
                lambda = Some(take_matrix(&lines, &mut pos, lr, lc)?);
            }
            other => return err(no, format!("unexpected keyword `{other}`")),
        }
    }
    if subsections.is_empty() {
        return err(1, "block file has no subsections");
    }
    Ok(BlockDatum { scale, subsections, lambda })
}

pub fn format_block(block: &BlockDatum) -> String {
    let mut out = format!("SCALE {}\n", block.scale);
    for sub in &block.subsections {
        let _ = writeln!(out, "SUBSECTION {}", sub.label);
        let _ = writeln!(out, "Q {} {}", sub.q.rows(), sub.q.cols());
        out.push_str(&format_matrix(&sub.q));
        let _ = writeln!(out, "CARTAN {} {}", sub.cartan.rows(), sub.cartan.cols());
        out.push_str(&format_matrix(&sub.cartan));
    }
    if let Some(lambda) = &block.lambda {
        let _ = writeln!(out, "LAMBDA {} {}", lambda.rows(), lambda.cols());
        out.push_str(&format_matrix(lambda));
    }
    out
}

pub fn parse_algebra(text: &str) -> Result<FinDimAlgebra, ParseError> {
    let lines = content_lines(text);
    let Some(&(no, header)) = lines.first() else {
        return err(1, "empty algebra file");
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 6 || toks[0] != "DIM" || toks[2] != "P" || toks[4] != "UNIT" {
        return err(no, "expected header `DIM n P p UNIT i`");
    }
    let dim: usize = match toks[1].parse() {
        Ok(d) if d > 0 => d,
        _ => return err(no, "bad dimension"),
    };
    let p: u64 = match toks[3].parse() {
        Ok(p) => p,
        Err(_) => return err(no, "bad characteristic"),
    };
    let unit: usize = match toks[5].parse() {
        Ok(u) if u < dim => u,
        _ => return err(no, "unit index out of range"),
    };
    let Some(&(lno, label_line)) = lines.get(1) else {
        return err(no, "missing label line");
    };
    let labels: Vec<String> = label_line.split_whitespace().map(String::from).collect();
    if labels.len() != dim {
        return err(lno, format!("expected {dim} labels, found {}", labels.len()));
    }
    let mut table = vec![vec![0u64; dim]; dim * dim];
    for &(no, line) in &lines[2..] {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 4 {
            return err(no, "expected structure triple `i j k c`");
        }
        let idx: Vec<usize> = toks[..3]
            .iter()
            .map(|t| t.parse::<usize>().map_err(|_| ParseError {
                line: no,
                message: format!("bad index `{t}`"),
            }))
            .collect::<Result<_, _>>()?;
        let c: u64 = match toks[3].parse() {
            Ok(c) => c,
            Err(_) => return err(no, format!("bad coefficient `{}`", toks[3])),
        };
        if idx.iter().any(|&i| i >= dim) {
            return err(no, "structure index out of range");
        }
        table[idx[0] * dim + idx[1]][idx[2]] = c;
    }
    FinDimAlgebra::new(p, unit, labels, table)
        .map_err(|e| ParseError { line: 1, message: format!("invalid algebra: {e}") })
}

pub fn format_algebra(alg: &FinDimAlgebra) -> String {
    let mut out = format!("DIM {} P {} UNIT {}\n", alg.dim(), alg.p(), alg.unit_index());
    out.push_str(&alg.labels().join(" "));
    out.push('\n');
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            for (k, &c) in alg.basis_product(i, j).iter().enumerate() {
                if c != 0 {
                    let _ = writeln!(out, "{i} {j} {k} {c}");
                }
            }
        }
    }
    out
}

/// Parses a bracketed or bare comma/space-separated coordinate vector over
/// GF(p), e.g. `0,1,0,1` or `[0 1 0 1]`.
pub fn parse_vector(text: &str, dim: usize, p: u64) -> Result<Vec<u64>, ParseError> {
    let cleaned = text.trim().trim_start_matches('[').trim_end_matches(']');
    let entries: Vec<u64> = cleaned
        .split(|ch: char| ch == ',' || ch.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| ParseError { line: 1, message: format!("bad coordinate `{t}`") })
        })
        .collect::<Result<_, _>>()?;
    if entries.len() != dim {
        return err(1, format!("expected {dim} coordinates, found {}", entries.len()));
    }
    Ok(entries.into_iter().map(|e| e % p).collect())
}
