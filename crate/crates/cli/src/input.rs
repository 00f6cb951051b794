//! Ideal and complex files.
//!
//! ```text
//! # comments run to the end of the line
//! field: Fp 101          # or `field: Q`
//! vars: x y z t
//! I = y^2*z - x^2*t, z^4 - x*t^3
//! ```
//!
//! A complex file has the same header followed by maps `φ_1, φ_2, …`, each a
//! `map:` line with target and source twists and one line per row:
//!
//! ```text
//! map: 3 4 5 -> 6 6
//!   x*t^2, z^3
//!   x^2, y^2
//!   z, t
//! ```

use std::fmt;

use gradedalg::{Field, GradedMatrix, Ideal, Polynomial, Ring};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct InputError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn fail<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, InputError> {
    Err(InputError { line, column, message: message.into() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Rationals,
    Prime(u32),
}

impl FieldChoice {
    pub fn from_characteristic(ch: u64) -> Result<Self, String> {
        match ch {
            0 => Ok(FieldChoice::Rationals),
            p => u32::try_from(p).map(FieldChoice::Prime).map_err(|_| format!("characteristic {p} is too large")),
        }
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rationals => write!(f, "Q"),
            FieldChoice::Prime(p) => write!(f, "Fp {p}"),
        }
    }
}

/// A piece of source text and where it starts (1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Located {
    pub text: String,
    pub line: usize,
    pub column: usize,
}

impl Located {
    /// Parses as a polynomial, shifting parser columns to file positions.
    pub fn polynomial<F: Field>(&self, ring: &Ring<F>) -> Result<Polynomial<F>, InputError> {
        ring.parse(&self.text).map_err(|e| {
            let msg = e.to_string();
            let inner = msg.strip_prefix("parse error: ").unwrap_or(&msg);
            match inner.strip_prefix("column ").and_then(|r| r.split_once(": ")) {
                Some((c, rest)) if c.parse::<usize>().is_ok() => InputError {
                    line: self.line,
                    column: self.column + c.parse::<usize>().unwrap() - 1,
                    message: rest.to_string(),
                },
                _ => InputError { line: self.line, column: self.column, message: inner.to_string() },
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedIdeal {
    pub name: String,
    pub gens: Vec<Located>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapBlock {
    pub target: Vec<i64>,
    pub source: Vec<i64>,
    pub rows: Vec<Vec<Located>>,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputFile {
    pub field: FieldChoice,
    pub vars: Vec<String>,
    pub ideals: Vec<NamedIdeal>,
    pub maps: Vec<MapBlock>,
}

/// Splits on top-level commas, keeping the 1-based column of each piece.
fn split_items(s: &str, line: usize, col0: usize) -> Result<Vec<Located>, InputError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let chars: Vec<char> = s.chars().collect();
    let push = |from: usize, to: usize, out: &mut Vec<Located>| -> Result<(), InputError> {
        let piece: String = chars[from..to].iter().collect();
        let lead = piece.chars().take_while(|c| c.is_whitespace()).count();
        let text = piece.trim().to_string();
        if text.is_empty() {
            return fail(line, col0 + from + lead, "empty item");
        }
        out.push(Located { text, line, column: col0 + from + lead });
        Ok(())
    };
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                push(start, i, &mut out)?;
                start = i + 1;
            }
            _ => {}
        }
    }
    push(start, chars.len(), &mut out)?;
    Ok(out)
}

fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

fn twists(s: &str, line: usize, col0: usize) -> Result<Vec<i64>, InputError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for tok in s.split_whitespace() {
        let at = s[offset..].find(tok).unwrap() + offset;
        offset = at + tok.len();
        match tok.parse::<i64>() {
            Ok(v) => out.push(v),
            Err(_) => return fail(line, col0 + at, format!("expected an integer twist, found `{tok}`")),
        }
    }
    Ok(out)
}

impl InputFile {
    pub fn parse(src: &str) -> Result<Self, InputError> {
        let mut field = None;
        let mut vars: Option<Vec<String>> = None;
        let mut ideals: Vec<NamedIdeal> = Vec::new();
        let mut maps: Vec<MapBlock> = Vec::new();
        for (idx, raw) in src.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let indent = content.chars().take_while(|c| c.is_whitespace()).count();
            let body = content.trim_end();
            let body_t = body.trim_start();
            let col_of = |byte: usize| body[..byte].chars().count() + 1;
            if let Some(rest) = body_t.strip_prefix("field:") {
                let words: Vec<&str> = rest.split_whitespace().collect();
                let at = indent + 7 + rest.chars().take_while(|c| c.is_whitespace()).count();
                field = Some(match words.as_slice() {
                    ["Q"] | ["QQ"] => FieldChoice::Rationals,
                    ["Fp", p] | ["GF", p] => match p.parse::<u32>() {
                        Ok(p) => FieldChoice::Prime(p),
                        Err(_) => return fail(line, at, format!("invalid characteristic `{p}`")),
                    },
                    _ => return fail(line, at, "expected `Q` or `Fp <prime>`"),
                });
            } else if let Some(rest) = body_t.strip_prefix("vars:") {
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if names.is_empty() {
                    return fail(line, indent + 7, "no variables given");
                }
                if let Some(bad) = names.iter().find(|n| !is_identifier(n)) {
                    let col = col_of(body.find(bad.as_str()).unwrap());
                    return fail(line, col, format!("invalid variable name `{bad}`"));
                }
                vars = Some(names);
            } else if let Some(rest) = body_t.strip_prefix("map:") {
                let start = body.len() - rest.len();
                let Some((t, s)) = rest.split_once("->") else {
                    return fail(line, col_of(start), "expected `map: <target twists> -> <source twists>`");
                };
                let target = twists(t, line, col_of(start))?;
                let s_start = start + t.len() + 2;
                let source = twists(s, line, col_of(s_start))?;
                maps.push(MapBlock { target, source, rows: Vec::new(), line });
            } else if let Some(eq) = body.find('=').filter(|_| indent == 0 || maps.is_empty()) {
                let name = body[..eq].trim();
                if !is_identifier(name) {
                    return fail(line, indent + 1, format!("invalid ideal name `{name}`"));
                }
                if ideals.iter().any(|i| i.name == name) {
                    return fail(line, indent + 1, format!("ideal `{name}` defined twice"));
                }
                let gens = split_items(&body[eq + 1..], line, col_of(eq + 1))?;
                ideals.push(NamedIdeal { name: name.to_string(), gens });
            } else if let Some(map) = maps.last_mut() {
                map.rows.push(split_items(body, line, 1)?);
            } else {
                return fail(line, indent + 1, "expected `field:`, `vars:`, `NAME = ...` or `map:`");
            }
        }
        let Some(vars) = vars else { return fail(1, 1, "missing `vars:` line") };
        for map in &maps {
            if map.rows.len() != map.target.len() {
                return fail(map.line, 1, format!("map has {} target twists but {} rows", map.target.len(), map.rows.len()));
            }
            for row in &map.rows {
                if row.len() != map.source.len() {
                    let first = &row[0];
                    return fail(first.line, first.column, format!("expected {} entries, found {}", map.source.len(), row.len()));
                }
            }
        }
        Ok(InputFile { field: field.unwrap_or(FieldChoice::Rationals), vars, ideals, maps })
    }

    pub fn ring<F: Field>(&self, field: F) -> Result<Ring<F>, InputError> {
        Ring::new(field, &self.vars).map_err(|e| InputError { line: 1, column: 1, message: e.to_string() })
    }

    /// The named ideal, or the first one when `name` is `None`.
    pub fn ideal<F: Field>(&self, ring: &Ring<F>, name: Option<&str>) -> Result<(String, Ideal<F>), InputError> {
        let found = match name {
            Some(n) => self.ideals.iter().find(|i| i.name == n),
            None => self.ideals.first(),
        };
        let Some(params) = found else {
            return fail(1, 1, match name {
                Some(n) => format!("no ideal named `{n}`"),
                None => "file defines no ideal".to_string(),
            });
        };
        let gens = params.gens.iter().map(|g| g.polynomial(ring)).collect::<Result<Vec<_>, _>>()?;
        let ideal = Ideal::new(ring, gens).map_err(|e| InputError { line: 1, column: 1, message: e.to_string() })?;
        Ok((params.name.clone(), ideal))
    }

    pub fn matrices<F: Field>(&self, ring: &Ring<F>) -> Result<Vec<GradedMatrix<F>>, InputError> {
        if self.maps.is_empty() {
            return fail(1, 1, "file defines no maps");
        }
        self.maps
            .iter()
            .map(|m| {
                let rows = m
                    .rows
                    .iter()
                    .map(|row| row.iter().map(|e| e.polynomial(ring)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                GradedMatrix::new(ring, m.target.clone(), m.source.clone(), rows)
                    .map_err(|e| InputError { line: m.line, column: 1, message: e.to_string() })
            })
            .collect()
    }
}

/// Renders named ideals in the file format accepted by [`InputFile::parse`].
pub fn render_ideals<F: Field>(field: FieldChoice, ring: &Ring<F>, ideals: &[(&str, &[Polynomial<F>])]) -> String {
    let mut out = format!("field: {field}\nvars: {}\n", ring.vars().join(" "));
    for (name, gens) in ideals {
        let gens: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        out.push_str(&format!("{name} = {}\n", if gens.is_empty() { "0".to_string() } else { gens.join(", ") }));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use gradedalg::Rationals;

    const SAMPLE: &str = "# the complete intersection\nfield: Q\nvars: x y z t\nI = y^2*z - x^2*t, z^4 - x*t^3   # two gens\n";

    #[test]
    fn parses_header_and_ideal() {
        let f = InputFile::parse(SAMPLE).unwrap();
        assert_eq!(f.field, FieldChoice::Rationals);
        assert_eq!(f.vars, ["x", "y", "z", "t"]);
        assert_eq!(f.ideals[0].gens[1].column, 20);
        let r = f.ring(Rationals).unwrap();
        let (name, i) = f.ideal(&r, None).unwrap();
        assert_eq!(name, "I");
        assert_eq!(i.gens().len(), 2);
    }

    #[test]
    fn round_trip_is_identity() {
        let f = InputFile::parse(SAMPLE).unwrap();
        let r = f.ring(Rationals).unwrap();
        let (_, i) = f.ideal(&r, None).unwrap();
        let text = render_ideals(f.field, &r, &[("I", i.gens())]);
        let g = InputFile::parse(&text).unwrap();
        let (_, j) = g.ideal(&g.ring(Rationals).unwrap(), None).unwrap();
        assert_eq!(render_ideals(g.field, &r, &[("I", j.gens())]), text);
    }

    #[test]
    fn errors_carry_positions() {
        let e = InputFile::parse("field: Q\nvars: x y\nI = x + y, x + w\n").unwrap();
        let r = e.ring(Rationals).unwrap();
        let err = e.ideal(&r, None).unwrap_err();
        assert_eq!((err.line, err.column), (3, 16));
        let err = InputFile::parse("field: R\nvars: x\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = InputFile::parse("vars: x\nI = x,, x\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 7));
        assert!(InputFile::parse("field: Fp 7\n").is_err());
    }

    #[test]
    fn parses_maps() {
        let src = "vars: x y\nmap: 0 -> 1 1\n  x, y\nmap: 1 1 -> 2\n  -y\n  x\n";
        let f = InputFile::parse(src).unwrap();
        let ms = f.matrices(&f.ring(Rationals).unwrap()).unwrap();
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[1].nrows(), 2);
        let bad = InputFile::parse("vars: x y\nmap: 0 -> 1 1\n  x\n").unwrap_err();
        assert_eq!(bad.line, 3);
    }
}
