//! The presentation file format for table-backed double categories:
//! line-oriented, one declaration per line, `#` comments.
//!
//! ```text
//! dcat thin
//! object A
//! object B
//! tight t : A -> B
//! tight.comp g f = h          # g∘f = h, identities are implicit
//! loose M : A -> B
//! loose.comp N M = P          # N⊙M = P, units are implicit
//! cell al : M => N over f g   # 2-cell named al over (left f, right g)
//! cell.vcomp b a = c          # only for non-thin instances
//! cell.hcomp b a = c
//! monoidal                    # optional strict monoidal section
//! unit.ob X
//! tensor.ob A B = C
//! tensor.ti f g = h
//! tensor.lo M N = P
//! ```
//!
//! Table instances are strict: the constraint cells are identities and
//! `⊙` must be strictly associative and unital (validated on load).

use crate::dbl::table::{SqInfo, TableDbl};
use crate::error::{Error, Result};
use crate::instances::lax::TableMon;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub base: TableDbl,
    pub monoidal: Option<MonSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonSection {
    pub unit: String,
    pub tensor_ob: BTreeMap<(String, String), String>,
    pub tensor_ti: BTreeMap<(String, String), String>,
    pub tensor_lo: BTreeMap<(String, String), String>,
}

impl Presentation {
    pub fn into_table(self) -> Result<TableDbl> {
        self.base.validate()?;
        Ok(self.base)
    }

    pub fn into_monoidal(self) -> Result<TableMon> {
        let mon = self
            .monoidal
            .clone()
            .ok_or_else(|| Error::SemanticError("presentation has no monoidal section".into()))?;
        let t = TableMon {
            base: self.base,
            unit: mon.unit,
            tensor_ob_tab: mon.tensor_ob,
            tensor_ti_tab: mon.tensor_ti,
            tensor_lo_tab: mon.tensor_lo,
        };
        t.validate()?;
        Ok(t)
    }
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::ParseError {
        line,
        col,
        msg: msg.into(),
    }
}

/// Parse a presentation; errors carry line and column.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut base = TableDbl::default();
    let mut monoidal: Option<MonSection> = None;
    let mut seen_header = false;

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
        let toks: Vec<&str> = line.split_whitespace().collect();
        let head = toks[0];
        let col = raw.find(head).map(|i| i + 1).unwrap_or(1);
        let need = |n: usize, shape: &str| -> Result<()> {
            if toks.len() != n {
                Err(perr(line_no, col, format!("expected `{shape}`")))
            } else {
                Ok(())
            }
        };
        match head {
            "dcat" => {
                seen_header = true;
                if toks.len() > 1 {
                    if toks[1] == "thin" {
                        base.thin = true;
                    } else {
                        return Err(perr(line_no, col, "expected `dcat` or `dcat thin`"));
                    }
                }
            }
            _ if !seen_header => {
                return Err(perr(line_no, col, "file must start with `dcat`"));
            }
            "object" => {
                need(2, "object A")?;
                base.objects.push(toks[1].to_string());
            }
            "tight" => {
                need(6, "tight f : A -> B")?;
                if toks[2] != ":" || toks[4] != "->" {
                    return Err(perr(line_no, col, "expected `tight f : A -> B`"));
                }
                base.tights
                    .insert(toks[1].into(), (toks[3].into(), toks[5].into()));
            }
            "tight.comp" => {
                need(5, "tight.comp g f = h")?;
                base.ti_comp_tab
                    .insert((toks[1].into(), toks[2].into()), toks[4].into());
            }
            "loose" => {
                need(6, "loose M : A -> B")?;
                if toks[2] != ":" || toks[4] != "->" {
                    return Err(perr(line_no, col, "expected `loose M : A -> B`"));
                }
                base.looses
                    .insert(toks[1].into(), (toks[3].into(), toks[5].into()));
            }
            "loose.comp" => {
                need(5, "loose.comp N M = P")?;
                base.lo_comp_tab
                    .insert((toks[1].into(), toks[2].into()), toks[4].into());
            }
            "cell" => {
                need(9, "cell a : M => N over f g")?;
                if toks[2] != ":" || toks[4] != "=>" || toks[6] != "over" {
                    return Err(perr(line_no, col, "expected `cell a : M => N over f g`"));
                }
                base.squares.insert(
                    toks[1].into(),
                    SqInfo {
                        top: toks[3].into(),
                        bot: toks[5].into(),
                        left: toks[7].into(),
                        right: toks[8].into(),
                    },
                );
            }
            "cell.vcomp" => {
                need(5, "cell.vcomp b a = c")?;
                base.vcomp_tab
                    .insert((toks[1].into(), toks[2].into()), toks[4].into());
            }
            "cell.hcomp" => {
                need(5, "cell.hcomp b a = c")?;
                base.hcomp_tab
                    .insert((toks[1].into(), toks[2].into()), toks[4].into());
            }
            "monoidal" => {
                need(1, "monoidal")?;
                monoidal = Some(MonSection::default());
            }
            "unit.ob" | "tensor.ob" | "tensor.ti" | "tensor.lo" => {
                let sec = monoidal.as_mut().ok_or_else(|| {
                    perr(line_no, col, "monoidal declarations need a `monoidal` line")
                })?;
                match head {
                    "unit.ob" => {
                        need(2, "unit.ob X")?;
                        sec.unit = toks[1].into();
                    }
                    "tensor.ob" => {
                        need(5, "tensor.ob A B = C")?;
                        sec.tensor_ob
                            .insert((toks[1].into(), toks[2].into()), toks[4].into());
                    }
                    "tensor.ti" => {
                        need(5, "tensor.ti f g = h")?;
                        sec.tensor_ti
                            .insert((toks[1].into(), toks[2].into()), toks[4].into());
                    }
                    "tensor.lo" => {
                        need(5, "tensor.lo M N = P")?;
                        sec.tensor_lo
                            .insert((toks[1].into(), toks[2].into()), toks[4].into());
                    }
                    _ => unreachable!(),
                }
            }
            other => {
                return Err(perr(line_no, col, format!("unknown declaration `{other}`")));
            }
        }
    }
    if !seen_header {
        return Err(perr(1, 1, "file must start with `dcat`"));
    }
    // semantic validation happens in table form
    let pres = Presentation { base, monoidal };
    pres.base.validate().map_err(|e| match e {
        Error::SemanticError(m) => Error::SemanticError(m),
        other => other,
    })?;
    if pres.monoidal.is_some() {
        pres.clone().into_monoidal()?;
    }
    Ok(pres)
}

/// Serialize back to the surface syntax; `parse ∘ print` is the identity
/// on parsed values.
pub fn print_presentation(p: &Presentation) -> String {
    let mut out = String::new();
    out.push_str(if p.base.thin { "dcat thin\n" } else { "dcat\n" });
    for o in &p.base.objects {
        out.push_str(&format!("object {o}\n"));
    }
    for (f, (a, b)) in &p.base.tights {
        out.push_str(&format!("tight {f} : {a} -> {b}\n"));
    }
    for ((g, f), h) in &p.base.ti_comp_tab {
        out.push_str(&format!("tight.comp {g} {f} = {h}\n"));
    }
    for (m, (a, b)) in &p.base.looses {
        out.push_str(&format!("loose {m} : {a} -> {b}\n"));
    }
    for ((n, m), q) in &p.base.lo_comp_tab {
        out.push_str(&format!("loose.comp {n} {m} = {q}\n"));
    }
    for (s, info) in &p.base.squares {
        out.push_str(&format!(
            "cell {s} : {} => {} over {} {}\n",
            info.top, info.bot, info.left, info.right
        ));
    }
    for ((b, a), c) in &p.base.vcomp_tab {
        out.push_str(&format!("cell.vcomp {b} {a} = {c}\n"));
    }
    for ((b, a), c) in &p.base.hcomp_tab {
        out.push_str(&format!("cell.hcomp {b} {a} = {c}\n"));
    }
    if let Some(m) = &p.monoidal {
        out.push_str("monoidal\n");
        out.push_str(&format!("unit.ob {}\n", m.unit));
        for ((a, b), c) in &m.tensor_ob {
            out.push_str(&format!("tensor.ob {a} {b} = {c}\n"));
        }
        for ((f, g), h) in &m.tensor_ti {
            out.push_str(&format!("tensor.ti {f} {g} = {h}\n"));
        }
        for ((x, y), z) in &m.tensor_lo {
            out.push_str(&format!("tensor.lo {x} {y} = {z}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIXTURE: &str = "\
# one object, an idempotent tight cell, and a companion loose cell
dcat thin
object A
tight t : A -> A
tight.comp t t = t
loose v : A -> A
loose.comp v v = v
cell eta : U_A => v over 1_A t
cell eps : v => U_A over t 1_A
cell uv : U_A => v over t t
cell ve : v => U_A over t t
cell ev : v => v over t t
cell e1 : v => v over t 1_A
cell e2 : v => v over 1_A t
";

    #[test]
    fn parses_and_validates() {
        let p = parse_presentation(FIXTURE).unwrap();
        assert!(p.base.thin);
        assert_eq!(p.base.objects, vec!["A"]);
        assert_eq!(p.base.squares.len(), 7);
    }

    #[test]
    fn round_trip_is_stable() {
        let p = parse_presentation(FIXTURE).unwrap();
        let printed = print_presentation(&p);
        let p2 = parse_presentation(&printed).unwrap();
        assert_eq!(p, p2);
        assert_eq!(printed, print_presentation(&p2));
    }

    #[test]
    fn bad_boundary_is_a_semantic_error() {
        let text = "\
dcat thin
object A
object B
loose v : A -> A
loose w : B -> B
cell bad : v => w over 1_A 1_A
";
        match parse_presentation(text) {
            Err(Error::SemanticError(m)) => {
                assert!(m.contains("incoherent square boundary"), "{m}")
            }
            other => panic!("expected a semantic error, got {other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_presentation("dcat\nobject\n") {
            Err(Error::ParseError { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected a parse error, got {other:?}"),
        }
        match parse_presentation("object A\n") {
            Err(Error::ParseError { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }
}
