//! An explicit term language for 2-cell pastings in a bicategory, and its
//! evaluator. Expressions insert no constraints silently: every associator
//! or unitor is a leaf, and every composition node must boundary-check.
//!
//! Orientation conventions (shared with the surface syntax):
//! - `v(e1, e2)`: e1 then e2, vertically;
//! - `h(e1, e2)`: e1 then e2 along the loose direction (e1 innermost);
//! - `wl(f, e)`: whisker on the outside, `1_f ⊙ e`;
//! - `wr(e, f)`: whisker on the inside, `e ⊙ 1_f`;
//! - `a(f,g,h)`, `l(f)`, `r(f)`: constraint leaves, `inv(...)` for
//!   inverses of invertible cells.

use super::Bicat;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OneExpr {
    /// A named 1-cell from the environment.
    Name(String),
    /// Identity 1-cell on a named object.
    Id(String),
    /// c(g, f) = g ⊙ f.
    Comp(Box<OneExpr>, Box<OneExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellExpr {
    Named(String),
    V(Box<CellExpr>, Box<CellExpr>),
    H(Box<CellExpr>, Box<CellExpr>),
    Wl(OneExpr, Box<CellExpr>),
    Wr(Box<CellExpr>, OneExpr),
    Assoc(OneExpr, OneExpr, OneExpr),
    Lunit(OneExpr),
    Runit(OneExpr),
    Inv(Box<CellExpr>),
}

/// Named cells and 1-cells available to an expression.
pub struct Env<B: Bicat> {
    pub objects: BTreeMap<String, B::Ob>,
    pub ones: BTreeMap<String, B::One>,
    pub twos: BTreeMap<String, B::Two>,
}

impl<B: Bicat> Default for Env<B> {
    fn default() -> Self {
        Env {
            objects: BTreeMap::new(),
            ones: BTreeMap::new(),
            twos: BTreeMap::new(),
        }
    }
}

impl<B: Bicat> Env<B> {
    pub fn new() -> Self {
        Self::default()
    }
}

fn berr(path: &str, msg: impl Into<String>) -> Error {
    Error::BoundaryError {
        path: if path.is_empty() { "root".into() } else { path.into() },
        msg: msg.into(),
    }
}

pub fn eval_one_expr<B: Bicat>(
    b: &B,
    env: &Env<B>,
    e: &OneExpr,
    path: &str,
) -> Result<B::One> {
    match e {
        OneExpr::Name(n) => env
            .ones
            .get(n)
            .cloned()
            .ok_or_else(|| berr(path, format!("unknown 1-cell {n}"))),
        OneExpr::Id(ob) => {
            let a = env
                .objects
                .get(ob)
                .ok_or_else(|| berr(path, format!("unknown object {ob}")))?;
            Ok(b.id1(a))
        }
        OneExpr::Comp(g, f) => {
            let gf = eval_one_expr(b, env, f, &format!("{path}.c1"))?;
            let gg = eval_one_expr(b, env, g, &format!("{path}.c0"))?;
            if b.one_src(&gg) != b.one_tgt(&gf) {
                return Err(berr(path, "1-cells do not compose"));
            }
            b.comp1(&gg, &gf)
        }
    }
}

/// Evaluate a pasting expression to a concrete 2-cell, checking every
/// boundary and reporting the offending node path on failure.
pub fn eval_cell_expr<B: Bicat>(b: &B, env: &Env<B>, e: &CellExpr) -> Result<B::Two> {
    eval_at(b, env, e, "")
}

fn eval_at<B: Bicat>(b: &B, env: &Env<B>, e: &CellExpr, path: &str) -> Result<B::Two> {
    match e {
        CellExpr::Named(n) => env
            .twos
            .get(n)
            .cloned()
            .ok_or_else(|| berr(path, format!("unknown 2-cell {n}"))),
        CellExpr::V(e1, e2) => {
            let c1 = eval_at(b, env, e1, &format!("{path}.v0"))?;
            let c2 = eval_at(b, env, e2, &format!("{path}.v1"))?;
            if b.two_tgt(&c1) != b.two_src(&c2) {
                return Err(berr(
                    path,
                    format!(
                        "vertical composite mismatch: target {} differs from source {}",
                        b.show_one(&b.two_tgt(&c1)),
                        b.show_one(&b.two_src(&c2))
                    ),
                ));
            }
            b.vcomp2(&c2, &c1)
        }
        CellExpr::H(e1, e2) => {
            let c1 = eval_at(b, env, e1, &format!("{path}.h0"))?;
            let c2 = eval_at(b, env, e2, &format!("{path}.h1"))?;
            if b.one_src(&b.two_src(&c2)) != b.one_tgt(&b.two_src(&c1)) {
                return Err(berr(path, "loose composite mismatch"));
            }
            b.hcomp2(&c2, &c1)
        }
        CellExpr::Wl(f, e1) => {
            let c = eval_at(b, env, e1, &format!("{path}.w"))?;
            let one = eval_one_expr(b, env, f, &format!("{path}.f"))?;
            if b.one_src(&one) != b.one_tgt(&b.two_src(&c)) {
                return Err(berr(path, "left whisker does not attach"));
            }
            b.hcomp2(&b.id2(&one), &c)
        }
        CellExpr::Wr(e1, f) => {
            let c = eval_at(b, env, e1, &format!("{path}.w"))?;
            let one = eval_one_expr(b, env, f, &format!("{path}.f"))?;
            if b.one_src(&b.two_src(&c)) != b.one_tgt(&one) {
                return Err(berr(path, "right whisker does not attach"));
            }
            b.hcomp2(&c, &b.id2(&one))
        }
        CellExpr::Assoc(f, g, h) => {
            let fo = eval_one_expr(b, env, f, &format!("{path}.a0"))?;
            let go = eval_one_expr(b, env, g, &format!("{path}.a1"))?;
            let ho = eval_one_expr(b, env, h, &format!("{path}.a2"))?;
            if b.one_src(&fo) != b.one_tgt(&go) || b.one_src(&go) != b.one_tgt(&ho) {
                return Err(berr(path, "associator arguments do not compose"));
            }
            b.assoc2(&fo, &go, &ho)
        }
        CellExpr::Lunit(f) => {
            let fo = eval_one_expr(b, env, f, &format!("{path}.l"))?;
            Ok(b.lunit2(&fo))
        }
        CellExpr::Runit(f) => {
            let fo = eval_one_expr(b, env, f, &format!("{path}.r"))?;
            Ok(b.runit2(&fo))
        }
        CellExpr::Inv(e1) => {
            let c = eval_at(b, env, e1, &format!("{path}.i"))?;
            b.invert2(&c)
                .ok_or_else(|| Error::NotInvertible(format!("at {path}: {}", b.show_two(&c))))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicat::{loose_bicategory, LooseBicat};
    use crate::finbase::{FinFun, FinSet};
    use crate::instances::span::{Span, SpanDbl};

    type B<'a> = LooseBicat<'a, SpanDbl>;

    fn env_with_spans<'a>(b: &B<'a>) -> Env<B<'a>> {
        let mut env = Env::new();
        let two = FinSet::from_atoms(&["0", "1"]).unwrap();
        let one = FinSet::from_atoms(&["0"]).unwrap();
        env.objects.insert("A".into(), two.clone());
        env.objects.insert("B".into(), one.clone());
        let f = FinFun::new(two.clone(), one.clone(), vec![0, 0]).unwrap();
        let g = FinFun::new(one.clone(), two.clone(), vec![1]).unwrap();
        env.ones.insert("F".into(), Span::graph(&f));
        env.ones.insert("G".into(), Span::graph(&g));
        env.ones.insert("H".into(), Span::graph(&FinFun::identity(&two)));
        env.twos
            .insert("idF".into(), b.id2(&Span::graph(&f)));
        env
    }

    #[test]
    fn identity_leaf() {
        let d = SpanDbl;
        let b = loose_bicategory(&d);
        let env = env_with_spans(&b);
        let c = eval_cell_expr(&b, &env, &CellExpr::Named("idF".into())).unwrap();
        assert_eq!(c, b.id2(env.ones.get("F").unwrap()));
    }

    #[test]
    fn pentagon_sides_evaluate_equal() {
        // both pasting sides of the ⊙-pentagon as expressions over H(Span)
        let d = SpanDbl;
        let b = loose_bicategory(&d);
        let mut env = env_with_spans(&b);
        // a 4-chain F: A→B, G: B→A, F again, G again
        env.ones.insert("F2".into(), env.ones["F"].clone());
        env.ones.insert("G2".into(), env.ones["G"].clone());
        let f = OneExpr::Name("F".into());
        let g = OneExpr::Name("G".into());
        let f2 = OneExpr::Name("F2".into());
        let g2 = OneExpr::Name("G2".into());
        let comp = |x: &OneExpr, y: &OneExpr| {
            OneExpr::Comp(Box::new(x.clone()), Box::new(y.clone()))
        };
        // lhs: a(GF,F2,G2?) — path order: innermost G2? use chain g2 then f2 then g then f
        // composite ((f⊙g)⊙f2)⊙g2 rebracketed fully
        let lhs = CellExpr::V(
            Box::new(CellExpr::Assoc(comp(&f, &g), f2.clone(), g2.clone())),
            Box::new(CellExpr::Assoc(f.clone(), g.clone(), comp(&f2, &g2))),
        );
        let rhs = CellExpr::V(
            Box::new(CellExpr::V(
                Box::new(CellExpr::Wr(
                    Box::new(CellExpr::Assoc(f.clone(), g.clone(), f2.clone())),
                    g2.clone(),
                )),
                Box::new(CellExpr::Assoc(f.clone(), comp(&g, &f2), g2.clone())),
            )),
            Box::new(CellExpr::Wl(f.clone(), Box::new(CellExpr::Assoc(g, f2, g2)))),
        );
        let cl = eval_cell_expr(&b, &env, &lhs).unwrap();
        let cr = eval_cell_expr(&b, &env, &rhs).unwrap();
        assert_eq!(cl, cr);
    }

    #[test]
    fn interchange_two_ways() {
        let d = SpanDbl;
        let b = loose_bicategory(&d);
        let mut env = env_with_spans(&b);
        // two non-identity parallel endocells on the doubled span
        let two = FinSet::from_atoms(&["0", "1"]).unwrap();
        let copies = crate::instances::span::span_looses(&two, &two, 10)
            .into_iter()
            .find(|s| s.apex().len() == 4)
            .unwrap();
        let endos = crate::dbl::Dbl::globular_between(&d, &copies, &copies).unwrap();
        let swap = endos
            .iter()
            .find(|c| c.map != FinFun::identity(copies.apex()) && c.map.is_bijection())
            .unwrap()
            .clone();
        env.ones.insert("C".into(), copies.clone());
        env.twos.insert("s".into(), swap.clone());
        env.twos.insert("t".into(), swap);
        let s = CellExpr::Named("s".into());
        let t = CellExpr::Named("t".into());
        // (t⊙s) built vertically-then-horizontally vs horizontally-then-vertically
        let hv = CellExpr::H(
            Box::new(CellExpr::V(Box::new(s.clone()), Box::new(s.clone()))),
            Box::new(CellExpr::V(Box::new(t.clone()), Box::new(t.clone()))),
        );
        let vh = CellExpr::V(
            Box::new(CellExpr::H(Box::new(s.clone()), Box::new(t.clone()))),
            Box::new(CellExpr::H(Box::new(s), Box::new(t))),
        );
        let a = eval_cell_expr(&b, &env, &hv).unwrap();
        let c = eval_cell_expr(&b, &env, &vh).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn boundary_error_has_path() {
        let d = SpanDbl;
        let b = loose_bicategory(&d);
        let env = env_with_spans(&b);
        // idF ∘ idF vertically is fine; idF after a mismatched unitor is not
        let bad = CellExpr::V(
            Box::new(CellExpr::Named("idF".into())),
            Box::new(CellExpr::Lunit(OneExpr::Name("G".into()))),
        );
        match eval_cell_expr(&b, &env, &bad) {
            Err(Error::BoundaryError { path, .. }) => assert_eq!(path, "root"),
            other => panic!("expected boundary error, got {other:?}"),
        }
        let unknown = CellExpr::Named("nope".into());
        assert!(matches!(
            eval_cell_expr(&b, &env, &unknown),
            Err(Error::BoundaryError { .. })
        ));
    }
}
