//! Line-oriented text formats.
//!
//! All formats are deterministic plain text with fixed keywords: `dims:`
//! lines for graded ordered sets, `updown:` lines for the compressed
//! vectors, nested parentheses for trees, an `adc` block format for general
//! complexes, a `morphism` block format with per-degree matrices, a
//! `cochain` block format for duals, and a `wreath` spec listing component
//! objects.  Serialization is bit-exact: writing and re-parsing any value
//! reproduces it.

use crate::adc::{AugmentedDirectedComplex, Chain, ChainMorphism, Coeff};
use crate::cells::Cell;
use crate::disc::CochainComplex;
use crate::rep::{DimensionSequence, LevelTree, UpDownVector};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

fn parse_ints(line: usize, tokens: &[&str]) -> Result<Vec<i64>, ParseError> {
    tokens
        .iter()
        .map(|t| i64::from_str(t).map_err(|_| ParseError {
            line,
            message: format!("expected an integer, got `{t}`"),
        }))
        .collect()
}

/// Accepts either a `dims: ...` line or bare space-separated integers.
pub fn parse_dims(text: &str) -> Result<DimensionSequence, ParseError> {
    let body = text.trim();
    let body = body.strip_prefix("dims:").unwrap_or(body);
    let tokens: Vec<&str> = body.split_whitespace().collect();
    let values = parse_ints(1, &tokens)?;
    DimensionSequence::new(values).map_err(|e| ParseError { line: 1, message: e.to_string() })
}

/// Accepts either an `updown: ...` line or bare space-separated integers.
pub fn parse_updown(text: &str) -> Result<UpDownVector, ParseError> {
    let body = text.trim();
    let body = body.strip_prefix("updown:").unwrap_or(body);
    let tokens: Vec<&str> = body.split_whitespace().collect();
    let values = parse_ints(1, &tokens)?;
    UpDownVector::new(values).map_err(|e| ParseError { line: 1, message: e.to_string() })
}

/// Nested-parenthesis tree form, e.g. `(()(()))`.
pub fn parse_tree(text: &str) -> Result<LevelTree, ParseError> {
    let bytes: Vec<u8> = text.trim().bytes().filter(|b| !b.is_ascii_whitespace()).collect();
    fn node(bytes: &[u8], pos: &mut usize) -> Result<LevelTree, ParseError> {
        if bytes.get(*pos) != Some(&b'(') {
            return err(1, "expected `(`");
        }
        *pos += 1;
        let mut children = Vec::new();
        loop {
            match bytes.get(*pos) {
                Some(&b'(') => children.push(node(bytes, pos)?),
                Some(&b')') => {
                    *pos += 1;
                    return Ok(LevelTree::node(children));
                }
                _ => return err(1, "unbalanced parentheses"),
            }
        }
    }
    let mut pos = 0;
    let tree = node(&bytes, &mut pos)?;
    if pos != bytes.len() {
        return err(1, "trailing input after the tree");
    }
    Ok(tree)
}

fn format_terms(chain: &Chain) -> String {
    let mut s = String::new();
    for (ix, c) in chain.terms() {
        let _ = write!(s, " {c}*{ix}");
    }
    s
}

fn parse_terms(line: usize, degree: usize, tokens: &[&str]) -> Result<Chain, ParseError> {
    let mut terms = Vec::new();
    for t in tokens {
        let (c, ix) = match t.split_once('*') {
            Some(pair) => pair,
            None => return err(line, format!("expected `coeff*index`, got `{t}`")),
        };
        let c = Coeff::from_str(c)
            .map_err(|_| ParseError { line, message: format!("bad coefficient `{c}`") })?;
        let ix = usize::from_str(ix)
            .map_err(|_| ParseError { line, message: format!("bad index `{ix}`") })?;
        terms.push((ix, c));
    }
    Ok(Chain::from_terms(degree, terms))
}

/// The `adc` block format: a header line, then one line per basis element
/// in declaration order, `i deg=q boundary= c*j ...` for positive degrees
/// and `i deg=0 aug= e` for degree 0.
pub fn format_adc(complex: &AugmentedDirectedComplex) -> String {
    let mut out = String::from("adc\n");
    for i in 0..complex.basis_len() {
        let d = complex.degree(i);
        if d == 0 {
            let _ = writeln!(out, "{i} deg=0 aug= {}", complex.augmentation(i));
        } else {
            let _ = writeln!(out, "{i} deg={d} boundary={}", format_terms(complex.boundary(i)));
        }
    }
    out
}

pub fn parse_adc(text: &str) -> Result<Arc<AugmentedDirectedComplex>, ParseError> {
    let mut lines = numbered_lines(text);
    match lines.next() {
        Some((_, "adc")) => {}
        Some((n, other)) => return err(n, format!("expected `adc` header, got `{other}`")),
        None => return err(1, "empty input"),
    }
    let mut degrees = Vec::new();
    let mut boundary = Vec::new();
    let mut augmentation = Vec::new();
    for (n, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() < 3 {
            return err(n, "expected `<i> deg=<q> boundary=|aug= ...`");
        }
        let ix = usize::from_str(tokens[0])
            .map_err(|_| ParseError { line: n, message: format!("bad index `{}`", tokens[0]) })?;
        if ix != degrees.len() {
            return err(n, format!("expected element {} in order, got {ix}", degrees.len()));
        }
        let degree = match tokens[1].strip_prefix("deg=") {
            Some(q) => usize::from_str(q)
                .map_err(|_| ParseError { line: n, message: format!("bad degree `{q}`") })?,
            None => return err(n, format!("expected `deg=<q>`, got `{}`", tokens[1])),
        };
        match tokens[2] {
            "aug=" => {
                if degree != 0 {
                    return err(n, "`aug=` is only valid for degree-0 elements");
                }
                if tokens.len() != 4 {
                    return err(n, "expected a single augmentation value");
                }
                let e = Coeff::from_str(tokens[3]).map_err(|_| ParseError {
                    line: n,
                    message: format!("bad augmentation `{}`", tokens[3]),
                })?;
                degrees.push(0);
                boundary.push(Chain::zero(0));
                augmentation.push(e);
            }
            "boundary=" => {
                if degree == 0 {
                    return err(n, "degree-0 elements take `aug=`, not `boundary=`");
                }
                let chain = parse_terms(n, degree - 1, &tokens[3..])?;
                degrees.push(degree);
                boundary.push(chain);
                augmentation.push(Coeff::from(0));
            }
            other => return err(n, format!("expected `boundary=` or `aug=`, got `{other}`")),
        }
    }
    AugmentedDirectedComplex::new(degrees, boundary, augmentation)
        .map(Arc::new)
        .map_err(|e| ParseError { line: 1, message: e.to_string() })
}

/// Object inputs come either as `dims:` lines or as `adc` blocks.
pub enum ObjectFile {
    Dims(DimensionSequence),
    Adc(Arc<AugmentedDirectedComplex>),
}

pub fn parse_object(text: &str) -> Result<ObjectFile, ParseError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    if first == "adc" {
        parse_adc(text).map(ObjectFile::Adc)
    } else {
        parse_dims(text).map(ObjectFile::Dims)
    }
}

/// The `morphism` block format: a header naming the endpoint files, then
/// per-degree matrices (rows indexed by target elements of that degree,
/// columns by source elements).  Degrees where either side is empty are
/// omitted; omitted degrees where both sides are nonempty mean zero blocks.
pub fn format_morphism(f: &ChainMorphism, source_label: &str, target_label: &str) -> String {
    let mut out = format!("morphism {source_label} -> {target_label}\n");
    let top = f.source().max_degree().min(f.target().max_degree());
    for q in 0..=top {
        let rows = f.target().elements_of_degree(q).len();
        let cols = f.source().elements_of_degree(q).len();
        if rows == 0 || cols == 0 {
            continue;
        }
        let _ = writeln!(out, "deg {q}:");
        for row in f.degree_matrix(q) {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
    }
    out
}

pub struct MorphismFile {
    pub source_name: String,
    pub target_name: String,
    pub matrices: BTreeMap<usize, Vec<Vec<Coeff>>>,
}

pub fn parse_morphism(text: &str) -> Result<MorphismFile, ParseError> {
    let mut lines = numbered_lines(text).peekable();
    let (header_line, header) = match lines.next() {
        Some(pair) => pair,
        None => return err(1, "empty input"),
    };
    let rest = match header.strip_prefix("morphism ") {
        Some(rest) => rest,
        None => return err(header_line, "expected `morphism <src> -> <dst>` header"),
    };
    let (source_name, target_name) = match rest.split_once(" -> ") {
        Some((s, t)) => (s.trim().to_string(), t.trim().to_string()),
        None => return err(header_line, "expected `morphism <src> -> <dst>` header"),
    };
    let mut matrices: BTreeMap<usize, Vec<Vec<Coeff>>> = BTreeMap::new();
    let mut current: Option<usize> = None;
    for (n, line) in lines {
        if let Some(deg) = line.strip_prefix("deg ") {
            let deg = match deg.strip_suffix(':') {
                Some(d) => d,
                None => return err(n, "expected `deg <q>:`"),
            };
            let q = usize::from_str(deg.trim())
                .map_err(|_| ParseError { line: n, message: format!("bad degree `{deg}`") })?;
            if matrices.contains_key(&q) {
                return err(n, format!("duplicate block for degree {q}"));
            }
            matrices.insert(q, Vec::new());
            current = Some(q);
            continue;
        }
        let q = match current {
            Some(q) => q,
            None => return err(n, "matrix row before any `deg <q>:` header"),
        };
        let row: Result<Vec<Coeff>, ParseError> = line
            .split_whitespace()
            .map(|t| {
                Coeff::from_str(t)
                    .map_err(|_| ParseError { line: n, message: format!("bad entry `{t}`") })
            })
            .collect();
        matrices.get_mut(&q).expect("current block exists").push(row?);
    }
    Ok(MorphismFile { source_name, target_name, matrices })
}

/// The `cochain` block format mirrors the `adc` format with `coboundary=`
/// lines and a final `eta=` line.
pub fn format_cochain(complex: &CochainComplex) -> String {
    let mut out = String::from("cochain\n");
    for i in 0..complex.basis_len() {
        let _ = writeln!(
            out,
            "{i} deg={} coboundary={}",
            complex.degree(i),
            format_terms(complex.coboundary(i))
        );
    }
    let _ = writeln!(out, "eta={}", format_terms(complex.eta()));
    out
}

pub fn format_cells(cells: &[Cell]) -> String {
    let mut out = String::new();
    for cell in cells {
        let _ = writeln!(out, "{cell}");
    }
    out
}

/// A wreath spec: `wreath <m>` followed by m component lines, each either
/// an inline `dims:` sequence or a path to an object file.
pub enum WreathComponentSource {
    Inline(DimensionSequence),
    Path(String),
}

pub fn parse_wreath_spec(text: &str) -> Result<Vec<WreathComponentSource>, ParseError> {
    let mut lines = numbered_lines(text);
    let (header_line, header) = match lines.next() {
        Some(pair) => pair,
        None => return err(1, "empty input"),
    };
    let m = match header.strip_prefix("wreath") {
        Some(rest) => usize::from_str(rest.trim())
            .map_err(|_| ParseError { line: header_line, message: "expected `wreath <m>`".into() })?,
        None => return err(header_line, "expected `wreath <m>` header"),
    };
    let mut components = Vec::new();
    for (n, line) in lines {
        if line.starts_with("dims:") {
            let dims = parse_dims(line).map_err(|e| ParseError { line: n, message: e.message })?;
            components.push(WreathComponentSource::Inline(dims));
        } else {
            components.push(WreathComponentSource::Path(line.to_string()));
        }
    }
    if components.len() != m {
        return err(
            header_line,
            format!("declared {m} components, found {}", components.len()),
        );
    }
    Ok(components)
}

fn numbered_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simple::{Convention, SimpleAdc};

    fn arrow() -> SimpleAdc {
        SimpleAdc::from_dims(&parse_dims("0 1 0").unwrap(), Convention::Std)
    }

    #[test]
    fn dims_round_trip() {
        let d = parse_dims("dims: 0 1 2 1 0").unwrap();
        assert_eq!(d.to_string(), "dims: 0 1 2 1 0");
        assert_eq!(parse_dims("0 1 2 1 0").unwrap(), d);
        assert!(parse_dims("0 2 0").is_err());
        assert!(parse_dims("0 x 0").is_err());
    }

    #[test]
    fn tree_round_trip() {
        for text in ["()", "(()())", "(()(()))"] {
            let t = parse_tree(text).unwrap();
            assert_eq!(t.to_string(), text);
        }
        assert!(parse_tree("(()").is_err());
        assert!(parse_tree("()()").is_err());
    }

    #[test]
    fn adc_round_trip() {
        let k = arrow();
        let text = format_adc(k.adc());
        assert_eq!(
            text,
            "adc\n0 deg=0 aug= 1\n1 deg=1 boundary= -1*0 1*2\n2 deg=0 aug= 1\n"
        );
        let back = parse_adc(&text).unwrap();
        assert_eq!(back.as_ref(), k.adc().as_ref());
    }

    #[test]
    fn morphism_round_trip() {
        let k = arrow();
        let id = ChainMorphism::identity(k.adc());
        let text = format_morphism(&id, "a.adc", "b.adc");
        let parsed = parse_morphism(&text).unwrap();
        assert_eq!(parsed.source_name, "a.adc");
        assert_eq!(parsed.target_name, "b.adc");
        let rebuilt = ChainMorphism::from_degree_matrices(
            k.adc().clone(),
            k.adc().clone(),
            &parsed.matrices,
        )
        .unwrap();
        assert_eq!(rebuilt, id);
    }

    #[test]
    fn cochain_format_is_stable() {
        let k = arrow();
        let d = crate::disc::dualize(k.adc());
        assert_eq!(
            format_cochain(&d),
            "cochain\n0 deg=0 coboundary= -1*1\n1 deg=1 coboundary=\n2 deg=0 coboundary= 1*1\neta= 1*0 1*2\n"
        );
    }

    #[test]
    fn wreath_spec_parses() {
        let spec = "wreath 2\ndims: 0\ndims: 0 1 0\n";
        let components = parse_wreath_spec(spec).unwrap();
        assert_eq!(components.len(), 2);
        assert!(matches!(components[0], WreathComponentSource::Inline(_)));
        assert!(parse_wreath_spec("wreath 3\ndims: 0\n").is_err());
    }
}
