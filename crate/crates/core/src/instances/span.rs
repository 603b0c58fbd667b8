//! The double category of finite sets, functions, spans and span maps,
//! with loose composition by the chosen pullback.

use crate::dbl::{Dbl, DblUniverse, UniverseCaps};
use crate::error::{Error, Result};
use crate::finbase::{all_functions, compose_functions, pullback, El, FinFun, FinSet};

/// A span A ←l– X –r→ B; S = cod(left), T = cod(right).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Span {
    pub left: FinFun,
    pub right: FinFun,
}

impl Span {
    pub fn new(left: FinFun, right: FinFun) -> Result<Span> {
        if left.dom != right.dom {
            return Err(Error::BoundaryMismatch(
                "span legs must share their apex".into(),
            ));
        }
        Ok(Span { left, right })
    }

    pub fn apex(&self) -> &FinSet {
        &self.left.dom
    }

    /// The unit span A ← A → A.
    pub fn unit(a: &FinSet) -> Span {
        Span {
            left: FinFun::identity(a),
            right: FinFun::identity(a),
        }
    }

    /// The graph span A ←id– A –f→ B: the canonical companion of f.
    pub fn graph(f: &FinFun) -> Span {
        Span {
            left: FinFun::identity(&f.dom),
            right: f.clone(),
        }
    }

    /// The reversed graph span B ←f– A –id→ A: the canonical conjoint of f.
    pub fn cograph(f: &FinFun) -> Span {
        Span {
            left: f.clone(),
            right: FinFun::identity(&f.dom),
        }
    }
}

/// A map of spans over a pair of functions (f on sources, g on targets).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpanCell {
    pub src: Span,
    pub dst: Span,
    pub f: FinFun,
    pub g: FinFun,
    pub map: FinFun,
}

impl SpanCell {
    pub fn new(src: Span, dst: Span, f: FinFun, g: FinFun, map: FinFun) -> Result<SpanCell> {
        let c = SpanCell {
            src,
            dst,
            f,
            g,
            map,
        };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        if self.map.dom != *self.src.apex() || self.map.cod != *self.dst.apex() {
            return Err(Error::BoundaryMismatch("span map apex mismatch".into()));
        }
        let lhs = compose_functions(&self.dst.left, &self.map)?;
        let rhs = compose_functions(&self.f, &self.src.left)?;
        if lhs != rhs {
            return Err(Error::BoundaryMismatch(
                "span map does not commute with left legs".into(),
            ));
        }
        let lhs = compose_functions(&self.dst.right, &self.map)?;
        let rhs = compose_functions(&self.g, &self.src.right)?;
        if lhs != rhs {
            return Err(Error::BoundaryMismatch(
                "span map does not commute with right legs".into(),
            ));
        }
        Ok(())
    }
}

/// The rule-backed Span(FinSet) double category.
#[derive(Debug, Clone, Copy, Default)]
pub struct SpanDbl;

impl SpanDbl {
    /// Backtracking enumeration of leg-commuting maps src.apex → dst.apex
    /// over the tight pair (f, g).
    pub fn cells_over(&self, src: &Span, dst: &Span, f: &FinFun, g: &FinFun) -> Vec<SpanCell> {
        let fl = match compose_functions(f, &src.left) {
            Ok(x) => x,
            Err(_) => return vec![],
        };
        let gr = match compose_functions(g, &src.right) {
            Ok(x) => x,
            Err(_) => return vec![],
        };
        let n = src.apex().len();
        // candidate images per apex element
        let mut cands: Vec<Vec<usize>> = Vec::with_capacity(n);
        for i in 0..n {
            let want_l = fl.table[i];
            let want_r = gr.table[i];
            let cs: Vec<usize> = (0..dst.apex().len())
                .filter(|&j| dst.left.table[j] == want_l && dst.right.table[j] == want_r)
                .collect();
            if cs.is_empty() {
                return vec![];
            }
            cands.push(cs);
        }
        let mut out = Vec::new();
        let mut pick = vec![0usize; n];
        loop {
            let table: Vec<usize> = (0..n).map(|i| cands[i][pick[i]]).collect();
            let map = FinFun::new(src.apex().clone(), dst.apex().clone(), table).unwrap();
            out.push(SpanCell {
                src: src.clone(),
                dst: dst.clone(),
                f: f.clone(),
                g: g.clone(),
                map,
            });
            let mut k = n;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                pick[k] += 1;
                if pick[k] < cands[k].len() {
                    break;
                }
                pick[k] = 0;
            }
        }
    }
}

impl Dbl for SpanDbl {
    type Ob = FinSet;
    type Ti = FinFun;
    type Lo = Span;
    type Sq = SpanCell;

    fn ti_dom(&self, f: &FinFun) -> FinSet {
        f.dom.clone()
    }
    fn ti_cod(&self, f: &FinFun) -> FinSet {
        f.cod.clone()
    }
    fn lo_src(&self, m: &Span) -> FinSet {
        m.left.cod.clone()
    }
    fn lo_tgt(&self, m: &Span) -> FinSet {
        m.right.cod.clone()
    }
    fn sq_left(&self, s: &SpanCell) -> FinFun {
        s.f.clone()
    }
    fn sq_right(&self, s: &SpanCell) -> FinFun {
        s.g.clone()
    }
    fn sq_top(&self, s: &SpanCell) -> Span {
        s.src.clone()
    }
    fn sq_bot(&self, s: &SpanCell) -> Span {
        s.dst.clone()
    }

    fn ti_id(&self, a: &FinSet) -> FinFun {
        FinFun::identity(a)
    }
    fn ti_comp(&self, g: &FinFun, f: &FinFun) -> Result<FinFun> {
        compose_functions(g, f)
    }
    fn ti_inverse(&self, f: &FinFun) -> Option<FinFun> {
        f.inverse()
    }

    fn lo_unit(&self, a: &FinSet) -> Span {
        Span::unit(a)
    }

    fn lo_comp(&self, n: &Span, m: &Span) -> Result<Span> {
        if n.left.cod != m.right.cod {
            return Err(Error::BoundaryMismatch(format!(
                "spans do not meet: {} vs {}",
                n.left.cod, m.right.cod
            )));
        }
        let (_, p, q) = pullback(&m.right, &n.left)?;
        Ok(Span {
            left: compose_functions(&m.left, &p)?,
            right: compose_functions(&n.right, &q)?,
        })
    }

    fn sq_id(&self, m: &Span) -> SpanCell {
        SpanCell {
            src: m.clone(),
            dst: m.clone(),
            f: FinFun::identity(&m.left.cod),
            g: FinFun::identity(&m.right.cod),
            map: FinFun::identity(m.apex()),
        }
    }

    fn sq_unit(&self, f: &FinFun) -> SpanCell {
        SpanCell {
            src: Span::unit(&f.dom),
            dst: Span::unit(&f.cod),
            f: f.clone(),
            g: f.clone(),
            map: f.clone(),
        }
    }

    fn vcomp(&self, b: &SpanCell, a: &SpanCell) -> Result<SpanCell> {
        if a.dst != b.src {
            return Err(Error::BoundaryMismatch(
                "2-cells do not stack: bottom ≠ top".into(),
            ));
        }
        Ok(SpanCell {
            src: a.src.clone(),
            dst: b.dst.clone(),
            f: compose_functions(&b.f, &a.f)?,
            g: compose_functions(&b.g, &a.g)?,
            map: compose_functions(&b.map, &a.map)?,
        })
    }

    fn hcomp(&self, b: &SpanCell, a: &SpanCell) -> Result<SpanCell> {
        if a.g != b.f {
            return Err(Error::BoundaryMismatch(
                "2-cells do not paste: middle tights differ".into(),
            ));
        }
        let src = self.lo_comp(&b.src, &a.src)?;
        let dst = self.lo_comp(&b.dst, &a.dst)?;
        let map = FinFun::from_map(src.apex(), dst.apex(), |e| match e {
            El::Pair(x, y) => El::pair(
                a.map.apply(x).expect("apex element").clone(),
                b.map.apply(y).expect("apex element").clone(),
            ),
            _ => unreachable!("composite apex elements are pairs"),
        })?;
        Ok(SpanCell {
            src,
            dst,
            f: a.f.clone(),
            g: b.g.clone(),
            map,
        })
    }

    fn assoc(&self, m: &Span, n: &Span, p: &Span) -> Result<SpanCell> {
        let mn = self.lo_comp(m, n)?;
        let np = self.lo_comp(n, p)?;
        let src = self.lo_comp(&mn, p)?; // elements (p, (n, m))
        let dst = self.lo_comp(m, &np)?; // elements ((p, n), m)
        let map = FinFun::from_map(src.apex(), dst.apex(), |e| match e {
            El::Pair(pe, nm) => match nm.as_ref() {
                El::Pair(ne, me) => El::pair(
                    El::pair(pe.as_ref().clone(), ne.as_ref().clone()),
                    me.as_ref().clone(),
                ),
                _ => unreachable!(),
            },
            _ => unreachable!(),
        })?;
        Ok(SpanCell {
            src: src.clone(),
            dst,
            f: FinFun::identity(&src.left.cod),
            g: FinFun::identity(&src.right.cod),
            map,
        })
    }

    fn assoc_inv(&self, m: &Span, n: &Span, p: &Span) -> Result<SpanCell> {
        let a = self.assoc(m, n, p)?;
        Ok(SpanCell {
            map: a.map.inverse().expect("associator is a bijection"),
            src: a.dst.clone(),
            dst: a.src.clone(),
            f: a.f,
            g: a.g,
        })
    }

    fn lunit(&self, m: &Span) -> SpanCell {
        let b = m.right.cod.clone();
        let src = self
            .lo_comp(&Span::unit(&b), m)
            .expect("unit composite defined");
        // elements (x, r(x)) ↦ x
        let map = FinFun::from_map(src.apex(), m.apex(), |e| match e {
            El::Pair(x, _) => x.as_ref().clone(),
            _ => unreachable!(),
        })
        .expect("left unitor");
        SpanCell {
            src,
            dst: m.clone(),
            f: FinFun::identity(&m.left.cod),
            g: FinFun::identity(&b),
            map,
        }
    }

    fn lunit_inv(&self, m: &Span) -> SpanCell {
        let l = self.lunit(m);
        SpanCell {
            map: l.map.inverse().expect("left unitor is a bijection"),
            src: l.dst.clone(),
            dst: l.src.clone(),
            f: l.f,
            g: l.g,
        }
    }

    fn runit(&self, m: &Span) -> SpanCell {
        let a = m.left.cod.clone();
        let src = self
            .lo_comp(m, &Span::unit(&a))
            .expect("unit composite defined");
        // elements (l(x), x) ↦ x
        let map = FinFun::from_map(src.apex(), m.apex(), |e| match e {
            El::Pair(_, x) => x.as_ref().clone(),
            _ => unreachable!(),
        })
        .expect("right unitor");
        SpanCell {
            src,
            dst: m.clone(),
            f: FinFun::identity(&a),
            g: FinFun::identity(&m.right.cod),
            map,
        }
    }

    fn runit_inv(&self, m: &Span) -> SpanCell {
        let r = self.runit(m);
        SpanCell {
            map: r.map.inverse().expect("right unitor is a bijection"),
            src: r.dst.clone(),
            dst: r.src.clone(),
            f: r.f,
            g: r.g,
        }
    }

    fn sq_invert(&self, s: &SpanCell) -> Option<SpanCell> {
        Some(SpanCell {
            src: s.dst.clone(),
            dst: s.src.clone(),
            f: s.f.inverse()?,
            g: s.g.inverse()?,
            map: s.map.inverse()?,
        })
    }

    fn cells_with_boundary(
        &self,
        m: &Span,
        n: &Span,
        f: &FinFun,
        g: &FinFun,
    ) -> Result<Vec<SpanCell>> {
        Ok(self.cells_over(m, n, f, g))
    }

    fn show_ob(&self, a: &FinSet) -> String {
        a.to_string()
    }
    fn show_ti(&self, f: &FinFun) -> String {
        format!("{}→{}{:?}", f.dom, f.cod, f.table)
    }
    fn show_lo(&self, m: &Span) -> String {
        format!(
            "{}←{}{:?}|{:?}→{}",
            m.left.cod,
            m.apex(),
            m.left.table,
            m.right.table,
            m.right.cod
        )
    }
    fn show_sq(&self, s: &SpanCell) -> String {
        format!(
            "[{} ⇒ {} over f{:?} g{:?} via {:?}]",
            self.show_lo(&s.src),
            self.show_lo(&s.dst),
            s.f.table,
            s.g.table,
            s.map.table
        )
    }
}

impl crate::mondbl::MonDbl for SpanDbl {
    fn tensor_ob(&self, a: &FinSet, b: &FinSet) -> FinSet {
        a.product(b)
    }
    fn tensor_ti(&self, f: &FinFun, g: &FinFun) -> FinFun {
        f.product(g)
    }
    fn tensor_lo(&self, m: &Span, n: &Span) -> Span {
        Span {
            left: m.left.product(&n.left),
            right: m.right.product(&n.right),
        }
    }
    fn tensor_sq(&self, s: &SpanCell, t: &SpanCell) -> SpanCell {
        SpanCell {
            src: self.tensor_lo(&s.src, &t.src),
            dst: self.tensor_lo(&s.dst, &t.dst),
            f: s.f.product(&t.f),
            g: s.g.product(&t.g),
            map: s.map.product(&t.map),
        }
    }
    fn unit_ob(&self) -> FinSet {
        FinSet::from_atoms(&["*"]).unwrap()
    }

    fn x_cell(&self, m1: &Span, n1: &Span, m2: &Span, n2: &Span) -> Result<SpanCell> {
        let src = self.lo_comp(&self.tensor_lo(m1, n1), &self.tensor_lo(m2, n2))?;
        let dst = self.tensor_lo(&self.lo_comp(m1, m2)?, &self.lo_comp(n1, n2)?);
        // ((x2,y2),(x1,y1)) ↦ ((x2,x1),(y2,y1))
        let map = FinFun::from_map(src.apex(), dst.apex(), |e| match e {
            El::Pair(inner, outer) => match (inner.as_ref(), outer.as_ref()) {
                (El::Pair(x2, y2), El::Pair(x1, y1)) => El::pair(
                    El::pair(x2.as_ref().clone(), x1.as_ref().clone()),
                    El::pair(y2.as_ref().clone(), y1.as_ref().clone()),
                ),
                _ => unreachable!(),
            },
            _ => unreachable!(),
        })?;
        Ok(SpanCell {
            f: FinFun::identity(&src.left.cod),
            g: FinFun::identity(&src.right.cod),
            src,
            dst,
            map,
        })
    }

    fn x_cell_inv(&self, m1: &Span, n1: &Span, m2: &Span, n2: &Span) -> Result<SpanCell> {
        let x = self.x_cell(m1, n1, m2, n2)?;
        Ok(SpanCell {
            map: x.map.inverse().expect("interchange cell is a bijection"),
            src: x.dst.clone(),
            dst: x.src.clone(),
            f: x.f,
            g: x.g,
        })
    }

    fn u_cell(&self, a: &FinSet, b: &FinSet) -> SpanCell {
        // U_{A×B} and U_A ⊗ U_B are the same span on the nose
        self.sq_id(&Span::unit(&a.product(b)))
    }
    fn u_cell_inv(&self, a: &FinSet, b: &FinSet) -> SpanCell {
        self.u_cell(a, b)
    }

    fn massoc(&self, a: &FinSet, b: &FinSet, c: &FinSet) -> FinFun {
        let src = a.product(b).product(c);
        let dst = a.product(&b.product(c));
        FinFun::from_map(&src, &dst, |e| match e {
            El::Pair(ab, z) => match ab.as_ref() {
                El::Pair(x, y) => El::pair(
                    x.as_ref().clone(),
                    El::pair(y.as_ref().clone(), z.as_ref().clone()),
                ),
                _ => unreachable!(),
            },
            _ => unreachable!(),
        })
        .expect("object associator")
    }
    fn massoc_inv(&self, a: &FinSet, b: &FinSet, c: &FinSet) -> FinFun {
        self.massoc(a, b, c).inverse().expect("bijection")
    }
    fn massoc_lo(&self, m: &Span, n: &Span, p: &Span) -> SpanCell {
        let src = self.tensor_lo(&self.tensor_lo(m, n), p);
        let dst = self.tensor_lo(m, &self.tensor_lo(n, p));
        let f = self.massoc(&m.left.cod, &n.left.cod, &p.left.cod);
        let g = self.massoc(&m.right.cod, &n.right.cod, &p.right.cod);
        let map = self.massoc(m.apex(), n.apex(), p.apex());
        SpanCell {
            src,
            dst,
            f,
            g,
            map,
        }
    }
    fn massoc_lo_inv(&self, m: &Span, n: &Span, p: &Span) -> SpanCell {
        let a = self.massoc_lo(m, n, p);
        SpanCell {
            src: a.dst.clone(),
            dst: a.src.clone(),
            f: a.f.inverse().unwrap(),
            g: a.g.inverse().unwrap(),
            map: a.map.inverse().unwrap(),
        }
    }

    fn mlunit(&self, a: &FinSet) -> FinFun {
        let src = self.unit_ob().product(a);
        FinFun::from_map(&src, a, |e| match e {
            El::Pair(_, x) => x.as_ref().clone(),
            _ => unreachable!(),
        })
        .expect("left unit")
    }
    fn mlunit_inv(&self, a: &FinSet) -> FinFun {
        self.mlunit(a).inverse().expect("bijection")
    }
    fn mlunit_lo(&self, m: &Span) -> SpanCell {
        let ui = Span::unit(&self.unit_ob());
        SpanCell {
            src: self.tensor_lo(&ui, m),
            dst: m.clone(),
            f: self.mlunit(&m.left.cod),
            g: self.mlunit(&m.right.cod),
            map: self.mlunit(m.apex()),
        }
    }
    fn mlunit_lo_inv(&self, m: &Span) -> SpanCell {
        let l = self.mlunit_lo(m);
        SpanCell {
            src: l.dst.clone(),
            dst: l.src.clone(),
            f: l.f.inverse().unwrap(),
            g: l.g.inverse().unwrap(),
            map: l.map.inverse().unwrap(),
        }
    }
    fn mrunit(&self, a: &FinSet) -> FinFun {
        let src = a.product(&self.unit_ob());
        FinFun::from_map(&src, a, |e| match e {
            El::Pair(x, _) => x.as_ref().clone(),
            _ => unreachable!(),
        })
        .expect("right unit")
    }
    fn mrunit_inv(&self, a: &FinSet) -> FinFun {
        self.mrunit(a).inverse().expect("bijection")
    }
    fn mrunit_lo(&self, m: &Span) -> SpanCell {
        let ui = Span::unit(&self.unit_ob());
        SpanCell {
            src: self.tensor_lo(m, &ui),
            dst: m.clone(),
            f: self.mrunit(&m.left.cod),
            g: self.mrunit(&m.right.cod),
            map: self.mrunit(m.apex()),
        }
    }
    fn mrunit_lo_inv(&self, m: &Span) -> SpanCell {
        let r = self.mrunit_lo(m);
        SpanCell {
            src: r.dst.clone(),
            dst: r.src.clone(),
            f: r.f.inverse().unwrap(),
            g: r.g.inverse().unwrap(),
            map: r.map.inverse().unwrap(),
        }
    }

    fn level(&self) -> crate::mondbl::Level {
        crate::mondbl::Level::Symmetric
    }
    fn braid(&self, a: &FinSet, b: &FinSet) -> Result<FinFun> {
        let src = a.product(b);
        let dst = b.product(a);
        FinFun::from_map(&src, &dst, |e| match e {
            El::Pair(x, y) => El::pair(y.as_ref().clone(), x.as_ref().clone()),
            _ => unreachable!(),
        })
    }
    fn braid_inv(&self, a: &FinSet, b: &FinSet) -> Result<FinFun> {
        self.braid(b, a)
    }
    fn braid_lo(&self, m: &Span, n: &Span) -> Result<SpanCell> {
        Ok(SpanCell {
            src: self.tensor_lo(m, n),
            dst: self.tensor_lo(n, m),
            f: self.braid(&m.left.cod, &n.left.cod)?,
            g: self.braid(&m.right.cod, &n.right.cod)?,
            map: self.braid(m.apex(), n.apex())?,
        })
    }
    fn braid_lo_inv(&self, m: &Span, n: &Span) -> Result<SpanCell> {
        self.braid_lo(n, m)
    }
}

/// All subsets of the canonical alphabet {"0", ..., "n-1"}, in bitmask
/// order; the objects of the bounded Span universe.
pub fn span_objects(size_bound: usize) -> Vec<FinSet> {
    let labels: Vec<String> = (0..size_bound).map(|i| i.to_string()).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << size_bound) {
        let elems: Vec<El> = (0..size_bound)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| El::atom(labels[i].clone()))
            .collect();
        out.push(FinSet::new(elems).unwrap());
    }
    out
}

/// Curated loose cells between a pair of objects: the unit (when A = B),
/// an empty span, graph spans, and a two-copy span on A = B.
pub fn span_looses(a: &FinSet, b: &FinSet, per_pair: usize) -> Vec<Span> {
    let mut out: Vec<Span> = Vec::new();
    let push = |s: Span, out: &mut Vec<Span>| {
        if !out.contains(&s) {
            out.push(s);
        }
    };
    if a == b {
        push(Span::unit(a), &mut out);
    }
    let empty = FinSet::empty();
    push(
        Span {
            left: FinFun::new(empty.clone(), a.clone(), vec![]).unwrap(),
            right: FinFun::new(empty, b.clone(), vec![]).unwrap(),
        },
        &mut out,
    );
    let funs = all_functions(a, b);
    if let Some(f) = funs.first() {
        push(Span::graph(f), &mut out);
    }
    if funs.len() > 1 {
        push(Span::graph(funs.last().unwrap()), &mut out);
    }
    if a == b && !a.is_empty() {
        // two parallel copies of A
        let two = FinSet::from_atoms(&["0", "1"]).unwrap();
        let apex = a.product(&two);
        let proj = FinFun::from_map(&apex, a, |e| match e {
            El::Pair(x, _) => x.as_ref().clone(),
            _ => unreachable!(),
        })
        .unwrap();
        push(
            Span {
                left: proj.clone(),
                right: proj,
            },
            &mut out,
        );
    }
    out.truncate(per_pair);
    out
}

/// Bounded universe for Span(FinSet).
pub fn span_universe(d: &SpanDbl, size_bound: usize, caps: UniverseCaps) -> DblUniverse<SpanDbl> {
    let objects = span_objects(size_bound);
    let mut tights = Vec::new();
    for a in &objects {
        for b in &objects {
            tights.extend(all_functions(a, b));
        }
    }
    let looses_per_pair = if size_bound >= 3 { 3 } else { 4 };
    let mut looses = Vec::new();
    for a in &objects {
        for b in &objects {
            looses.extend(span_looses(a, b, looses_per_pair));
        }
    }
    // squares: identities, units, and cells over (id, id) and one non-id
    // tight pair between the first few parallel loose pairs
    let mut squares = Vec::new();
    for m in &looses {
        squares.push(d.sq_id(m));
    }
    for f in tights.iter().take(24) {
        squares.push(d.sq_unit(f));
    }
    for m in &looses {
        for n in &looses {
            if d.lo_src(m) == d.lo_src(n) && d.lo_tgt(m) == d.lo_tgt(n) && m != n {
                for c in d.globular_between(m, n).unwrap().into_iter().take(2) {
                    squares.push(c);
                }
            }
        }
    }
    // a few genuinely non-globular cells: graph-span cells over (f, f)
    for f in tights.iter().filter(|f| f.dom != f.cod).take(12) {
        let uf = d.sq_unit(f);
        squares.push(uf.clone());
        let m = Span::graph(f);
        for c in d
            .cells_over(&Span::unit(&f.dom), &m, &FinFun::identity(&f.dom), f)
            .into_iter()
            .take(1)
        {
            squares.push(c);
        }
    }
    squares.sort();
    squares.dedup();
    DblUniverse::derive(d, objects, tights, looses, squares, caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::{check_double_category, loose_compose, loose_opposite};

    fn set(labels: &[&str]) -> FinSet {
        FinSet::from_atoms(labels).unwrap()
    }

    #[test]
    fn compose_spans_by_pullback() {
        let d = SpanDbl;
        let a = set(&["0", "1"]);
        let b = set(&["0"]);
        // m: {0,1} ← {0,1} → {0}, n: {0} ← {0} → {0}
        let m = Span {
            left: FinFun::identity(&a),
            right: FinFun::new(a.clone(), b.clone(), vec![0, 0]).unwrap(),
        };
        let n = Span::unit(&b);
        let nm = loose_compose(&d, &n, &m).unwrap();
        assert_eq!(nm.apex().len(), 2);
        assert_eq!(d.lo_src(&nm), a);
        assert_eq!(d.lo_tgt(&nm), b);

        // mismatched middle object
        let k = Span::unit(&a);
        assert!(loose_compose(&d, &k, &m).is_err());
    }

    #[test]
    fn unitors_and_associator_are_isos() {
        let d = SpanDbl;
        let a = set(&["0", "1"]);
        let f = FinFun::new(a.clone(), set(&["0"]), vec![0, 0]).unwrap();
        let m = Span::graph(&f);
        let l = d.lunit(&m);
        let r = d.runit(&m);
        assert!(d.is_globular(&l) && d.is_globular(&r));
        assert_eq!(
            d.vcomp(&d.lunit_inv(&m), &l).unwrap(),
            d.sq_id(&d.sq_top(&l))
        );
        assert_eq!(d.vcomp(&r, &d.runit_inv(&m)).unwrap(), d.sq_id(&m));
    }

    #[test]
    fn globular_enumeration() {
        let d = SpanDbl;
        let a = set(&["0"]);
        // unit to unit: exactly the identity
        let u = Span::unit(&a);
        let cells = d.globular_between(&u, &u).unwrap();
        assert_eq!(cells.len(), 1);
        assert_eq!(cells[0], d.sq_id(&u));

        // two parallel copies of {0,1}: the leg-preserving endomaps include
        // the swap of the two copies
        let two = set(&["0", "1"]);
        let copies = span_looses(&two, &two, 10)
            .into_iter()
            .find(|s| s.apex().len() == 4)
            .unwrap();
        let endos = d.globular_between(&copies, &copies).unwrap();
        // oracle: filter all apex endofunctions on leg commutation
        let brute: Vec<FinFun> = all_functions(copies.apex(), copies.apex())
            .into_iter()
            .filter(|u| {
                compose_functions(&copies.left, u).unwrap() == copies.left
                    && compose_functions(&copies.right, u).unwrap() == copies.right
            })
            .collect();
        assert_eq!(endos.len(), brute.len());
        assert_eq!(endos.len(), 16, "2 fibre choices for each of 4 elements");
        // the wholesale swap of the two sheets is among them
        let swap = FinFun::from_map(copies.apex(), copies.apex(), |e| match e {
            El::Pair(x, i) => El::pair(
                x.as_ref().clone(),
                if **i == El::atom("0") {
                    El::atom("1")
                } else {
                    El::atom("0")
                },
            ),
            _ => unreachable!(),
        })
        .unwrap();
        assert!(endos.iter().any(|c| c.map == swap && c.map.is_bijection()));

        // non-isomorphic apexes with no leg-commuting map
        let empty_span = Span {
            left: FinFun::new(FinSet::empty(), two.clone(), vec![]).unwrap(),
            right: FinFun::new(FinSet::empty(), two.clone(), vec![]).unwrap(),
        };
        let cells = d.globular_between(&Span::unit(&two), &empty_span).unwrap();
        assert!(cells.is_empty());
    }

    #[test]
    fn loose_opposite_is_involution() {
        let d = SpanDbl;
        let op = loose_opposite(&d);
        let opop = loose_opposite(&op);
        let a = set(&["0", "1"]);
        let b = set(&["0"]);
        let f = FinFun::new(a.clone(), b.clone(), vec![0, 0]).unwrap();
        let m = Span::graph(&f);
        let n = Span::cograph(&f);
        assert_eq!(op.lo_src(&m), b);
        assert_eq!(opop.lo_src(&m), d.lo_src(&m));
        assert_eq!(
            opop.lo_comp(&n, &m).unwrap(),
            d.lo_comp(&n, &m).unwrap()
        );
        assert_eq!(op.lo_unit(&a), d.lo_unit(&a));
    }

    #[test]
    fn double_category_axioms_size_two() {
        let d = SpanDbl;
        let u = span_universe(&d, 2, UniverseCaps::default());
        let report = check_double_category(&d, &u, None);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn corrupted_associator_fails_naturality() {
        // Wrap Span with an associator precomposed by a nontrivial apex
        // automorphism whenever one exists.
        #[derive(Clone, Copy)]
        struct Corrupt(SpanDbl);
        impl Dbl for Corrupt {
            type Ob = FinSet;
            type Ti = FinFun;
            type Lo = Span;
            type Sq = SpanCell;
            fn ti_dom(&self, f: &FinFun) -> FinSet {
                self.0.ti_dom(f)
            }
            fn ti_cod(&self, f: &FinFun) -> FinSet {
                self.0.ti_cod(f)
            }
            fn lo_src(&self, m: &Span) -> FinSet {
                self.0.lo_src(m)
            }
            fn lo_tgt(&self, m: &Span) -> FinSet {
                self.0.lo_tgt(m)
            }
            fn sq_left(&self, s: &SpanCell) -> FinFun {
                self.0.sq_left(s)
            }
            fn sq_right(&self, s: &SpanCell) -> FinFun {
                self.0.sq_right(s)
            }
            fn sq_top(&self, s: &SpanCell) -> Span {
                self.0.sq_top(s)
            }
            fn sq_bot(&self, s: &SpanCell) -> Span {
                self.0.sq_bot(s)
            }
            fn ti_id(&self, a: &FinSet) -> FinFun {
                self.0.ti_id(a)
            }
            fn ti_comp(&self, g: &FinFun, f: &FinFun) -> Result<FinFun> {
                self.0.ti_comp(g, f)
            }
            fn ti_inverse(&self, f: &FinFun) -> Option<FinFun> {
                self.0.ti_inverse(f)
            }
            fn lo_unit(&self, a: &FinSet) -> Span {
                self.0.lo_unit(a)
            }
            fn lo_comp(&self, n: &Span, m: &Span) -> Result<Span> {
                self.0.lo_comp(n, m)
            }
            fn sq_id(&self, m: &Span) -> SpanCell {
                self.0.sq_id(m)
            }
            fn sq_unit(&self, f: &FinFun) -> SpanCell {
                self.0.sq_unit(f)
            }
            fn vcomp(&self, b: &SpanCell, a: &SpanCell) -> Result<SpanCell> {
                self.0.vcomp(b, a)
            }
            fn hcomp(&self, b: &SpanCell, a: &SpanCell) -> Result<SpanCell> {
                self.0.hcomp(b, a)
            }
            fn assoc(&self, m: &Span, n: &Span, p: &Span) -> Result<SpanCell> {
                let mut a = self.0.assoc(m, n, p)?;
                if a.map.table.len() >= 2 {
                    a.map.table.swap(0, 1);
                    // keep it a valid function value; legs may now disagree,
                    // which is exactly the corruption we want to detect
                }
                Ok(a)
            }
            fn assoc_inv(&self, m: &Span, n: &Span, p: &Span) -> Result<SpanCell> {
                self.0.assoc_inv(m, n, p)
            }
            fn lunit(&self, m: &Span) -> SpanCell {
                self.0.lunit(m)
            }
            fn lunit_inv(&self, m: &Span) -> SpanCell {
                self.0.lunit_inv(m)
            }
            fn runit(&self, m: &Span) -> SpanCell {
                self.0.runit(m)
            }
            fn runit_inv(&self, m: &Span) -> SpanCell {
                self.0.runit_inv(m)
            }
            fn sq_invert(&self, s: &SpanCell) -> Option<SpanCell> {
                self.0.sq_invert(s)
            }
            fn cells_with_boundary(
                &self,
                m: &Span,
                n: &Span,
                f: &FinFun,
                g: &FinFun,
            ) -> Result<Vec<SpanCell>> {
                self.0.cells_with_boundary(m, n, f, g)
            }
        }
        let d = Corrupt(SpanDbl);
        let u = span_universe(&SpanDbl, 2, UniverseCaps::default());
        let u = DblUniverse::derive(&d, u.objects, u.tights, u.looses, u.squares, UniverseCaps::default());
        let report = check_double_category(&d, &u, None);
        assert!(!report.passed());
        let has_witness = report
            .checks
            .iter()
            .filter(|c| c.name == "dbl.pentagon" || c.name == "dbl.naturality" || c.name == "dbl.constraints")
            .any(|c| !c.witnesses.is_empty());
        assert!(has_witness, "{}", report.render_text());
    }
}
