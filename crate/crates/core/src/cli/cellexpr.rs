//! Surface syntax for pasting expressions and fixture files.
//!
//! Expression grammar (prefix, comma-separated arguments):
//!
//! ```text
//! e ::= name | v(e,e) | h(e,e) | wl(f,e) | wr(e,f)
//!     | a(f,f,f) | l(f) | r(f) | inv(e)
//! f ::= name | c(f,f) | id(objectname)
//! ```
//!
//! `v(e1,e2)` is e1 then e2 vertically; `h(e1,e2)` pastes e1 then e2 in
//! path order; `a`, `l`, `r` are the constraint leaves; `c(g,f)` is g⊙f.
//!
//! Fixture files hold blocks:
//!
//! ```text
//! fixture <label>
//! family pent            # pent|mu|lam|rho|hex_r|hex_s|syl
//! objects {0} {0} {0 1} {0 1}
//! eq <name> : <expr> = <expr>
//! ```

use crate::bicat::expr::{CellExpr, OneExpr};
use crate::error::{Error, Result};
use crate::finbase::FinSet;
use crate::lift::monoidal::{FixtureEq, FixtureFamily};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::ParseError {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t') | Some(b'\n') | Some(b'\r')) {
            self.bump();
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.bump();
        }
        if self.pos == start {
            return Err(self.err("expected an identifier"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .to_string())
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }
}

fn parse_one(lx: &mut Lexer) -> Result<OneExpr> {
    let name = lx.ident()?;
    match name.as_str() {
        "c" => {
            lx.expect(b'(')?;
            let g = parse_one(lx)?;
            lx.expect(b',')?;
            let f = parse_one(lx)?;
            lx.expect(b')')?;
            Ok(OneExpr::Comp(Box::new(g), Box::new(f)))
        }
        "id" => {
            lx.expect(b'(')?;
            let ob = lx.ident()?;
            lx.expect(b')')?;
            Ok(OneExpr::Id(ob))
        }
        _ => Ok(OneExpr::Name(name)),
    }
}

fn parse_cell(lx: &mut Lexer) -> Result<CellExpr> {
    let name = lx.ident()?;
    let mut args = |n: usize| -> Result<Vec<CellExpr>> {
        lx.expect(b'(')?;
        let mut out = Vec::new();
        for i in 0..n {
            if i > 0 {
                lx.expect(b',')?;
            }
            out.push(parse_cell(lx)?);
        }
        lx.expect(b')')?;
        Ok(out)
    };
    match name.as_str() {
        "v" => {
            let mut a = args(2)?;
            let e2 = a.pop().unwrap();
            let e1 = a.pop().unwrap();
            Ok(CellExpr::V(Box::new(e1), Box::new(e2)))
        }
        "h" => {
            let mut a = args(2)?;
            let e2 = a.pop().unwrap();
            let e1 = a.pop().unwrap();
            Ok(CellExpr::H(Box::new(e1), Box::new(e2)))
        }
        "inv" => {
            let mut a = args(1)?;
            Ok(CellExpr::Inv(Box::new(a.pop().unwrap())))
        }
        "wl" => {
            lx.expect(b'(')?;
            let f = parse_one(lx)?;
            lx.expect(b',')?;
            let e = parse_cell(lx)?;
            lx.expect(b')')?;
            Ok(CellExpr::Wl(f, Box::new(e)))
        }
        "wr" => {
            lx.expect(b'(')?;
            let e = parse_cell(lx)?;
            lx.expect(b',')?;
            let f = parse_one(lx)?;
            lx.expect(b')')?;
            Ok(CellExpr::Wr(Box::new(e), f))
        }
        "a" => {
            lx.expect(b'(')?;
            let f = parse_one(lx)?;
            lx.expect(b',')?;
            let g = parse_one(lx)?;
            lx.expect(b',')?;
            let h = parse_one(lx)?;
            lx.expect(b')')?;
            Ok(CellExpr::Assoc(f, g, h))
        }
        "l" => {
            lx.expect(b'(')?;
            let f = parse_one(lx)?;
            lx.expect(b')')?;
            Ok(CellExpr::Lunit(f))
        }
        "r" => {
            lx.expect(b'(')?;
            let f = parse_one(lx)?;
            lx.expect(b')')?;
            Ok(CellExpr::Runit(f))
        }
        _ => Ok(CellExpr::Named(name)),
    }
}

/// Parse one pasting expression.
pub fn parse_cell_expr(text: &str) -> Result<CellExpr> {
    let mut lx = Lexer::new(text);
    let e = parse_cell(&mut lx)?;
    if !lx.at_end() {
        return Err(lx.err("trailing input after expression"));
    }
    Ok(e)
}

/// One fixture block: a family, an object tuple, and its equations.
#[derive(Debug, Clone)]
pub struct FixtureBlock {
    pub label: String,
    pub family: FixtureFamily,
    pub objects: Vec<FinSet>,
    pub eqs: Vec<FixtureEq>,
}

/// Parse a fixture file into blocks.
pub fn parse_fixture_file(text: &str) -> Result<Vec<FixtureBlock>> {
    let mut out: Vec<FixtureBlock> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let perr = |msg: &str| Error::ParseError {
            line: line_no,
            col: 1,
            msg: msg.into(),
        };
        if let Some(rest) = line.strip_prefix("fixture ") {
            out.push(FixtureBlock {
                label: rest.trim().to_string(),
                family: FixtureFamily::Pent,
                objects: vec![],
                eqs: vec![],
            });
        } else if let Some(rest) = line.strip_prefix("family ") {
            let block = out.last_mut().ok_or_else(|| perr("`family` before `fixture`"))?;
            block.family = rest.trim().parse()?;
        } else if let Some(rest) = line.strip_prefix("objects ") {
            let block = out
                .last_mut()
                .ok_or_else(|| perr("`objects` before `fixture`"))?;
            // sets written as {a b c}
            let mut rest = rest.trim();
            let mut sets = Vec::new();
            while !rest.is_empty() {
                if !rest.starts_with('{') {
                    return Err(perr("object sets are written {a b c}"));
                }
                let end = rest
                    .find('}')
                    .ok_or_else(|| perr("unterminated object set"))?;
                let inner = &rest[1..end];
                let labels: Vec<&str> = inner.split_whitespace().collect();
                sets.push(FinSet::from_atoms(&labels)?);
                rest = rest[end + 1..].trim_start();
            }
            block.objects = sets;
        } else if let Some(rest) = line.strip_prefix("eq ") {
            let block = out.last_mut().ok_or_else(|| perr("`eq` before `fixture`"))?;
            let (name, body) = rest
                .split_once(':')
                .ok_or_else(|| perr("expected `eq name : lhs = rhs`"))?;
            let (lhs, rhs) = body
                .split_once('=')
                .ok_or_else(|| perr("expected `eq name : lhs = rhs`"))?;
            block.eqs.push(FixtureEq {
                name: name.trim().to_string(),
                lhs: parse_cell_expr(lhs.trim())?,
                rhs: parse_cell_expr(rhs.trim())?,
            });
        } else {
            return Err(perr("unknown fixture declaration"));
        }
    }
    if out.is_empty() {
        return Err(Error::ParseError {
            line: 1,
            col: 1,
            msg: "no fixture blocks found".into(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_expressions() {
        let e = parse_cell_expr("v(theta_left_diag, theta_diag_right)").unwrap();
        assert!(matches!(e, CellExpr::V(_, _)));
        let e = parse_cell_expr("inv(r(left))").unwrap();
        assert!(matches!(e, CellExpr::Inv(_)));
        let e = parse_cell_expr("wl(c(f, id(A)), h(x, y))").unwrap();
        assert!(matches!(e, CellExpr::Wl(OneExpr::Comp(_, _), _)));
        assert!(parse_cell_expr("v(x,)").is_err());
        assert!(parse_cell_expr("v(x, y) z").is_err());
    }

    #[test]
    fn parses_fixture_blocks() {
        let text = "\
# the pentagon comparison at a specific tuple
fixture pent-main
family pent
objects {0} {0} {0 1} {0 1}
eq reroute : pent = v(theta_left_diag, theta_diag_right)
eq padding : inv(r(left)) = theta_runit
";
        let blocks = parse_fixture_file(text).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].objects.len(), 4);
        assert_eq!(blocks[0].eqs.len(), 2);
        assert_eq!(blocks[0].objects[2].len(), 2);
    }
}
