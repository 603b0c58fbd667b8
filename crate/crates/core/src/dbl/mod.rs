//! The pseudo double category abstraction: a trait over objects, tight and
//! loose 1-cells and square 2-cells, together with bounded universes and an
//! exhaustive axiom checker.
//!
//! Conventions fixed once for the whole engine:
//! - the loose composite of `A ↛ B ↛ C` by `m` then `n` is written and
//!   computed as `lo_comp(n, m)` ("n after m"), with source `S(m)` and
//!   target `T(n)`;
//! - the constraint cells are `assoc(m,n,p): (m⊙n)⊙p → m⊙(n⊙p)`,
//!   `lunit(m): U_B ⊙ m → m` and `runit(m): m ⊙ U_A → m`;
//! - a 2-cell has a left and a right tight boundary and a top and bottom
//!   loose boundary; `vcomp(b, a)` stacks tightly ("b after a"), and
//!   `hcomp(b, a)` pastes loosely ("b after a", matching `lo_comp`).

pub mod table;

use crate::error::{Error, Result};
use crate::report::{Family, Report};
use std::fmt::Debug;

pub trait Dbl {
    type Ob: Clone + Eq + Ord + Debug;
    type Ti: Clone + Eq + Ord + Debug;
    type Lo: Clone + Eq + Ord + Debug;
    type Sq: Clone + Eq + Ord + Debug;

    fn ti_dom(&self, f: &Self::Ti) -> Self::Ob;
    fn ti_cod(&self, f: &Self::Ti) -> Self::Ob;
    fn lo_src(&self, m: &Self::Lo) -> Self::Ob;
    fn lo_tgt(&self, m: &Self::Lo) -> Self::Ob;
    fn sq_left(&self, s: &Self::Sq) -> Self::Ti;
    fn sq_right(&self, s: &Self::Sq) -> Self::Ti;
    fn sq_top(&self, s: &Self::Sq) -> Self::Lo;
    fn sq_bot(&self, s: &Self::Sq) -> Self::Lo;

    fn ti_id(&self, a: &Self::Ob) -> Self::Ti;
    fn ti_comp(&self, g: &Self::Ti, f: &Self::Ti) -> Result<Self::Ti>;
    /// Two-sided inverse in the tight category, when one exists.
    fn ti_inverse(&self, f: &Self::Ti) -> Option<Self::Ti>;

    fn lo_unit(&self, a: &Self::Ob) -> Self::Lo;
    fn lo_comp(&self, n: &Self::Lo, m: &Self::Lo) -> Result<Self::Lo>;

    fn sq_id(&self, m: &Self::Lo) -> Self::Sq;
    fn sq_unit(&self, f: &Self::Ti) -> Self::Sq;
    fn vcomp(&self, b: &Self::Sq, a: &Self::Sq) -> Result<Self::Sq>;
    fn hcomp(&self, b: &Self::Sq, a: &Self::Sq) -> Result<Self::Sq>;

    fn assoc(&self, m: &Self::Lo, n: &Self::Lo, p: &Self::Lo) -> Result<Self::Sq>;
    fn assoc_inv(&self, m: &Self::Lo, n: &Self::Lo, p: &Self::Lo) -> Result<Self::Sq>;
    fn lunit(&self, m: &Self::Lo) -> Self::Sq;
    fn lunit_inv(&self, m: &Self::Lo) -> Self::Sq;
    fn runit(&self, m: &Self::Lo) -> Self::Sq;
    fn runit_inv(&self, m: &Self::Lo) -> Self::Sq;

    /// Exact inverse of a 2-cell when the instance can decide it.
    fn sq_invert(&self, s: &Self::Sq) -> Option<Self::Sq>;

    /// Complete enumeration of 2-cells m → n over the tight pair (f, g).
    fn cells_with_boundary(
        &self,
        m: &Self::Lo,
        n: &Self::Lo,
        f: &Self::Ti,
        g: &Self::Ti,
    ) -> Result<Vec<Self::Sq>>;

    /// Complete enumeration of globular 2-cells m → n.
    fn globular_between(&self, m: &Self::Lo, n: &Self::Lo) -> Result<Vec<Self::Sq>> {
        self.cells_with_boundary(
            m,
            n,
            &self.ti_id(&self.lo_src(m)),
            &self.ti_id(&self.lo_tgt(m)),
        )
    }

    fn is_globular(&self, s: &Self::Sq) -> bool {
        let l = self.sq_left(s);
        let r = self.sq_right(s);
        l == self.ti_id(&self.ti_dom(&l)) && r == self.ti_id(&self.ti_dom(&r))
    }

    fn show_ob(&self, a: &Self::Ob) -> String {
        format!("{a:?}")
    }
    fn show_ti(&self, f: &Self::Ti) -> String {
        format!("{f:?}")
    }
    fn show_lo(&self, m: &Self::Lo) -> String {
        format!("{m:?}")
    }
    fn show_sq(&self, s: &Self::Sq) -> String {
        format!("{s:?}")
    }
}

/// Spec-level operation: loose composition `n ⊙ m` with the boundary check.
pub fn loose_compose<D: Dbl>(d: &D, n: &D::Lo, m: &D::Lo) -> Result<D::Lo> {
    if d.lo_src(n) != d.lo_tgt(m) {
        return Err(Error::BoundaryMismatch(format!(
            "loose cells do not meet: src {} vs tgt {}",
            d.show_ob(&d.lo_src(n)),
            d.show_ob(&d.lo_tgt(m))
        )));
    }
    d.lo_comp(n, m)
}

/// Spec-level operation: enumerate globular 2-cells between parallel looses.
pub fn globular_cells_between<D: Dbl>(d: &D, m: &D::Lo, n: &D::Lo) -> Result<Vec<D::Sq>> {
    if d.lo_src(m) != d.lo_src(n) || d.lo_tgt(m) != d.lo_tgt(n) {
        return Err(Error::BoundaryMismatch(
            "globular cells require parallel loose cells".into(),
        ));
    }
    d.globular_between(m, n)
}

/// Left-to-right composite of a path `[m1, m2, ..., mk]` (m1 first):
/// `mk ⊙ (… ⊙ (m2 ⊙ m1))`.
pub fn lo_comp_path<D: Dbl>(d: &D, path: &[D::Lo]) -> Result<D::Lo> {
    let mut it = path.iter();
    let mut acc = it
        .next()
        .ok_or_else(|| Error::BoundaryMismatch("empty loose path".into()))?
        .clone();
    for m in it {
        acc = d.lo_comp(m, &acc)?;
    }
    Ok(acc)
}

/// Loose composite of a row of 2-cells in path order (first cell leftmost),
/// bracketed like `lo_comp_path`.
pub fn hcomp_path<D: Dbl>(d: &D, row: &[D::Sq]) -> Result<D::Sq> {
    let mut it = row.iter();
    let mut acc = it
        .next()
        .ok_or_else(|| Error::BoundaryMismatch("empty cell row".into()))?
        .clone();
    for s in it {
        acc = d.hcomp(s, &acc)?;
    }
    Ok(acc)
}

/// Vertical composite of a stack of 2-cells, first applied first.
pub fn vcomp_stack<D: Dbl>(d: &D, stack: &[D::Sq]) -> Result<D::Sq> {
    let mut it = stack.iter();
    let mut acc = it
        .next()
        .ok_or_else(|| Error::BoundaryMismatch("empty cell stack".into()))?
        .clone();
    for s in it {
        acc = d.vcomp(s, &acc)?;
    }
    Ok(acc)
}

/// A pseudo double functor, carried as closures plus its globular
/// constraint cells. `comp(m, n)` is the constraint
/// `F(m) ⊙ F(n) → F(m⊙n)` for a composable pair (m after n), and
/// `unit(a)` is `U_{F A} → F(U_A)`.
pub struct DblFun<'x, S: Dbl, T: Dbl> {
    pub name: String,
    pub ob: Box<dyn Fn(&S::Ob) -> T::Ob + 'x>,
    pub ti: Box<dyn Fn(&S::Ti) -> T::Ti + 'x>,
    pub lo: Box<dyn Fn(&S::Lo) -> T::Lo + 'x>,
    pub sq: Box<dyn Fn(&S::Sq) -> T::Sq + 'x>,
    pub comp: Box<dyn Fn(&S::Lo, &S::Lo) -> T::Sq + 'x>,
    pub comp_inv: Box<dyn Fn(&S::Lo, &S::Lo) -> T::Sq + 'x>,
    pub unit: Box<dyn Fn(&S::Ob) -> T::Sq + 'x>,
    pub unit_inv: Box<dyn Fn(&S::Ob) -> T::Sq + 'x>,
}

/// The identity double functor.
pub fn identity_fun<D: Dbl>(d: &D) -> DblFun<'_, D, D> {
    DblFun {
        name: "id".into(),
        ob: Box::new(|a: &D::Ob| a.clone()),
        ti: Box::new(|f: &D::Ti| f.clone()),
        lo: Box::new(|m: &D::Lo| m.clone()),
        sq: Box::new(|s: &D::Sq| s.clone()),
        comp: Box::new(move |m, n| d.sq_id(&d.lo_comp(m, n).expect("composable"))),
        comp_inv: Box::new(move |m, n| d.sq_id(&d.lo_comp(m, n).expect("composable"))),
        unit: Box::new(move |a| d.sq_id(&d.lo_unit(a))),
        unit_inv: Box::new(move |a| d.sq_id(&d.lo_unit(a))),
    }
}

/// Composite G∘F of double functors, with pasted constraint cells.
pub fn compose_fun<'x, A: Dbl, B: Dbl, C: Dbl>(
    c: &'x C,
    g: &'x DblFun<'x, B, C>,
    f: &'x DblFun<'x, A, B>,
) -> DblFun<'x, A, C> {
    DblFun {
        name: format!("{}∘{}", g.name, f.name),
        ob: Box::new(move |a| (g.ob)(&(f.ob)(a))),
        ti: Box::new(move |t| (g.ti)(&(f.ti)(t))),
        lo: Box::new(move |m| (g.lo)(&(f.lo)(m))),
        sq: Box::new(move |s| (g.sq)(&(f.sq)(s))),
        comp: Box::new(move |m, n| {
            // G F(m) ⊙ G F(n) → G(F(m) ⊙ F(n)) → G F(m⊙n)
            let first = (g.comp)(&(f.lo)(m), &(f.lo)(n));
            let second = (g.sq)(&(f.comp)(m, n));
            c.vcomp(&second, &first).expect("constraint pasting")
        }),
        comp_inv: Box::new(move |m, n| {
            let first = (g.sq)(&(f.comp_inv)(m, n));
            let second = (g.comp_inv)(&(f.lo)(m), &(f.lo)(n));
            c.vcomp(&second, &first).expect("constraint pasting")
        }),
        unit: Box::new(move |a| {
            // U_{G F A} → G(U_{F A}) → G F(U_A)
            let first = (g.unit)(&(f.ob)(a));
            let second = (g.sq)(&(f.unit)(a));
            c.vcomp(&second, &first).expect("constraint pasting")
        }),
        unit_inv: Box::new(move |a| {
            let first = (g.sq)(&(f.unit_inv)(a));
            let second = (g.unit_inv)(&(f.ob)(a));
            c.vcomp(&second, &first).expect("constraint pasting")
        }),
    }
}

/// A tight transformation α: F → G between double functors, carried as its
/// object components α_A (tight cells) and loose components α_M (2-cells
/// F M → G M over (α_SM, α_TM)).
pub struct DblTransf<'x, S: Dbl, T: Dbl> {
    pub name: String,
    pub at_ob: Box<dyn Fn(&S::Ob) -> T::Ti + 'x>,
    pub at_lo: Box<dyn Fn(&S::Lo) -> T::Sq + 'x>,
}

/// The identity transformation on a double functor.
pub fn identity_transf<'x, S: Dbl + 'x, T: Dbl + 'x>(
    t: &'x T,
    f: &'x DblFun<'x, S, T>,
) -> DblTransf<'x, S, T> {
    DblTransf {
        name: format!("1_{}", f.name),
        at_ob: Box::new(move |a| t.ti_id(&(f.ob)(a))),
        at_lo: Box::new(move |m| t.sq_id(&(f.lo)(m))),
    }
}

/// Check the tight-transformation axioms of α: F → G over a universe:
/// naturality of the object components, boundary compatibility of the loose
/// components, and the two pasting equalities against F_⊙/G_⊙ and F_U/G_U.
pub fn check_dbl_transformation<S: Dbl, T: Dbl>(
    s: &S,
    t: &T,
    f: &DblFun<'_, S, T>,
    g: &DblFun<'_, S, T>,
    al: &DblTransf<'_, S, T>,
    u: &DblUniverse<S>,
) -> Report {
    let mut report = Report::new();

    let mut fam = Family::new(format!("transf.{}.naturality", al.name));
    for ti in &u.tights {
        let key = format!("[{}]", s.show_ti(ti));
        let lhs = t.ti_comp(&(al.at_ob)(&s.ti_cod(ti)), &(f.ti)(ti));
        let rhs = t.ti_comp(&(g.ti)(ti), &(al.at_ob)(&s.ti_dom(ti)));
        let ok = lhs.is_ok() && lhs == rhs;
        fam.record(&key, ok, || format!("{lhs:?} vs {rhs:?}"));
    }
    for sq in &u.squares {
        // naturality of α_M in 2-cells: α_N ∘ F(s) = G(s) ∘ α_M
        let key = format!("cell[{}]", s.show_sq(sq));
        let m = s.sq_top(sq);
        let n = s.sq_bot(sq);
        let lhs = t.vcomp(&(al.at_lo)(&n), &(f.sq)(sq));
        let rhs = t.vcomp(&(g.sq)(sq), &(al.at_lo)(&m));
        let ok = lhs.is_ok() && lhs == rhs;
        fam.record(&key, ok, || format!("{lhs:?} vs {rhs:?}"));
    }
    report.checks.push(fam.finish());

    let mut fam = Family::new(format!("transf.{}.boundaries", al.name));
    for m in &u.looses {
        let key = format!("[{}]", s.show_lo(m));
        let c = (al.at_lo)(m);
        let ok = t.sq_top(&c) == (f.lo)(m)
            && t.sq_bot(&c) == (g.lo)(m)
            && t.sq_left(&c) == (al.at_ob)(&s.lo_src(m))
            && t.sq_right(&c) == (al.at_ob)(&s.lo_tgt(m));
        fam.record(&key, ok, || "loose component has the wrong boundary".into());
    }
    report.checks.push(fam.finish());

    let mut fam = Family::new(format!("transf.{}.odot", al.name));
    for (n, m) in &u.loose_pairs {
        let key = format!("[{};{}]", s.show_lo(n), s.show_lo(m));
        let lhs = s
            .lo_comp(n, m)
            .and_then(|nm| t.vcomp(&(al.at_lo)(&nm), &(f.comp)(n, m)));
        let rhs = t
            .hcomp(&(al.at_lo)(n), &(al.at_lo)(m))
            .and_then(|row| t.vcomp(&(g.comp)(n, m), &row));
        let ok = lhs.is_ok() && lhs == rhs;
        fam.record(&key, ok, || format!("{lhs:?} vs {rhs:?}"));
    }
    report.checks.push(fam.finish());

    let mut fam = Family::new(format!("transf.{}.unit", al.name));
    for a in &u.objects {
        let key = format!("[{}]", s.show_ob(a));
        let lhs = t.vcomp(&(al.at_lo)(&s.lo_unit(a)), &(f.unit)(a));
        let rhs = t.vcomp(&(g.unit)(a), &t.sq_unit(&(al.at_ob)(a)));
        let ok = lhs.is_ok() && lhs == rhs;
        fam.record(&key, ok, || format!("{lhs:?} vs {rhs:?}"));
    }
    report.checks.push(fam.finish());

    report
}

/// The loose opposite: loose 1-cells and the loose direction of 2-cells are
/// reversed; tight data is untouched. Conjoints become companions here.
#[derive(Clone, Copy)]
pub struct OpDbl<'a, D: Dbl>(pub &'a D);

impl<'a, D: Dbl> Dbl for OpDbl<'a, D> {
    type Ob = D::Ob;
    type Ti = D::Ti;
    type Lo = D::Lo;
    type Sq = D::Sq;

    fn ti_dom(&self, f: &D::Ti) -> D::Ob {
        self.0.ti_dom(f)
    }
    fn ti_cod(&self, f: &D::Ti) -> D::Ob {
        self.0.ti_cod(f)
    }
    fn lo_src(&self, m: &D::Lo) -> D::Ob {
        self.0.lo_tgt(m)
    }
    fn lo_tgt(&self, m: &D::Lo) -> D::Ob {
        self.0.lo_src(m)
    }
    fn sq_left(&self, s: &D::Sq) -> D::Ti {
        self.0.sq_right(s)
    }
    fn sq_right(&self, s: &D::Sq) -> D::Ti {
        self.0.sq_left(s)
    }
    fn sq_top(&self, s: &D::Sq) -> D::Lo {
        self.0.sq_top(s)
    }
    fn sq_bot(&self, s: &D::Sq) -> D::Lo {
        self.0.sq_bot(s)
    }

    fn ti_id(&self, a: &D::Ob) -> D::Ti {
        self.0.ti_id(a)
    }
    fn ti_comp(&self, g: &D::Ti, f: &D::Ti) -> Result<D::Ti> {
        self.0.ti_comp(g, f)
    }
    fn ti_inverse(&self, f: &D::Ti) -> Option<D::Ti> {
        self.0.ti_inverse(f)
    }

    fn lo_unit(&self, a: &D::Ob) -> D::Lo {
        self.0.lo_unit(a)
    }
    fn lo_comp(&self, n: &D::Lo, m: &D::Lo) -> Result<D::Lo> {
        self.0.lo_comp(m, n)
    }

    fn sq_id(&self, m: &D::Lo) -> D::Sq {
        self.0.sq_id(m)
    }
    fn sq_unit(&self, f: &D::Ti) -> D::Sq {
        self.0.sq_unit(f)
    }
    fn vcomp(&self, b: &D::Sq, a: &D::Sq) -> Result<D::Sq> {
        self.0.vcomp(b, a)
    }
    fn hcomp(&self, b: &D::Sq, a: &D::Sq) -> Result<D::Sq> {
        self.0.hcomp(a, b)
    }

    fn assoc(&self, m: &D::Lo, n: &D::Lo, p: &D::Lo) -> Result<D::Sq> {
        self.0.assoc_inv(p, n, m)
    }
    fn assoc_inv(&self, m: &D::Lo, n: &D::Lo, p: &D::Lo) -> Result<D::Sq> {
        self.0.assoc(p, n, m)
    }
    fn lunit(&self, m: &D::Lo) -> D::Sq {
        self.0.runit(m)
    }
    fn lunit_inv(&self, m: &D::Lo) -> D::Sq {
        self.0.runit_inv(m)
    }
    fn runit(&self, m: &D::Lo) -> D::Sq {
        self.0.lunit(m)
    }
    fn runit_inv(&self, m: &D::Lo) -> D::Sq {
        self.0.lunit_inv(m)
    }

    fn sq_invert(&self, s: &D::Sq) -> Option<D::Sq> {
        self.0.sq_invert(s)
    }
    fn cells_with_boundary(
        &self,
        m: &D::Lo,
        n: &D::Lo,
        f: &D::Ti,
        g: &D::Ti,
    ) -> Result<Vec<D::Sq>> {
        self.0.cells_with_boundary(m, n, g, f)
    }
    fn globular_between(&self, m: &D::Lo, n: &D::Lo) -> Result<Vec<D::Sq>> {
        self.0.globular_between(m, n)
    }

    fn show_ob(&self, a: &D::Ob) -> String {
        self.0.show_ob(a)
    }
    fn show_ti(&self, f: &D::Ti) -> String {
        self.0.show_ti(f)
    }
    fn show_lo(&self, m: &D::Lo) -> String {
        self.0.show_lo(m)
    }
    fn show_sq(&self, s: &D::Sq) -> String {
        self.0.show_sq(s)
    }
}

/// Spec-level operation.
pub fn loose_opposite<D: Dbl>(d: &D) -> OpDbl<'_, D> {
    OpDbl(d)
}

/// Finite power D × ⋯ × D with componentwise structure; cells are vectors.
#[derive(Clone, Copy)]
pub struct PowDbl<'a, D: Dbl> {
    pub base: &'a D,
    pub arity: usize,
}

impl<'a, D: Dbl> PowDbl<'a, D> {
    pub fn new(base: &'a D, arity: usize) -> Self {
        PowDbl { base, arity }
    }

    fn zip2<T, U: Clone + Eq + Ord + Debug>(
        &self,
        b: &[T],
        a: &[T],
        f: impl Fn(&T, &T) -> Result<U>,
    ) -> Result<Vec<U>> {
        if a.len() != self.arity || b.len() != self.arity {
            return Err(Error::BoundaryMismatch(format!(
                "expected arity {}",
                self.arity
            )));
        }
        b.iter().zip(a.iter()).map(|(x, y)| f(x, y)).collect()
    }
}

impl<'a, D: Dbl> Dbl for PowDbl<'a, D> {
    type Ob = Vec<D::Ob>;
    type Ti = Vec<D::Ti>;
    type Lo = Vec<D::Lo>;
    type Sq = Vec<D::Sq>;

    fn ti_dom(&self, f: &Self::Ti) -> Self::Ob {
        f.iter().map(|x| self.base.ti_dom(x)).collect()
    }
    fn ti_cod(&self, f: &Self::Ti) -> Self::Ob {
        f.iter().map(|x| self.base.ti_cod(x)).collect()
    }
    fn lo_src(&self, m: &Self::Lo) -> Self::Ob {
        m.iter().map(|x| self.base.lo_src(x)).collect()
    }
    fn lo_tgt(&self, m: &Self::Lo) -> Self::Ob {
        m.iter().map(|x| self.base.lo_tgt(x)).collect()
    }
    fn sq_left(&self, s: &Self::Sq) -> Self::Ti {
        s.iter().map(|x| self.base.sq_left(x)).collect()
    }
    fn sq_right(&self, s: &Self::Sq) -> Self::Ti {
        s.iter().map(|x| self.base.sq_right(x)).collect()
    }
    fn sq_top(&self, s: &Self::Sq) -> Self::Lo {
        s.iter().map(|x| self.base.sq_top(x)).collect()
    }
    fn sq_bot(&self, s: &Self::Sq) -> Self::Lo {
        s.iter().map(|x| self.base.sq_bot(x)).collect()
    }

    fn ti_id(&self, a: &Self::Ob) -> Self::Ti {
        a.iter().map(|x| self.base.ti_id(x)).collect()
    }
    fn ti_comp(&self, g: &Self::Ti, f: &Self::Ti) -> Result<Self::Ti> {
        self.zip2(g, f, |x, y| self.base.ti_comp(x, y))
    }
    fn ti_inverse(&self, f: &Self::Ti) -> Option<Self::Ti> {
        f.iter().map(|x| self.base.ti_inverse(x)).collect()
    }

    fn lo_unit(&self, a: &Self::Ob) -> Self::Lo {
        a.iter().map(|x| self.base.lo_unit(x)).collect()
    }
    fn lo_comp(&self, n: &Self::Lo, m: &Self::Lo) -> Result<Self::Lo> {
        self.zip2(n, m, |x, y| self.base.lo_comp(x, y))
    }

    fn sq_id(&self, m: &Self::Lo) -> Self::Sq {
        m.iter().map(|x| self.base.sq_id(x)).collect()
    }
    fn sq_unit(&self, f: &Self::Ti) -> Self::Sq {
        f.iter().map(|x| self.base.sq_unit(x)).collect()
    }
    fn vcomp(&self, b: &Self::Sq, a: &Self::Sq) -> Result<Self::Sq> {
        self.zip2(b, a, |x, y| self.base.vcomp(x, y))
    }
    fn hcomp(&self, b: &Self::Sq, a: &Self::Sq) -> Result<Self::Sq> {
        self.zip2(b, a, |x, y| self.base.hcomp(x, y))
    }

    fn assoc(&self, m: &Self::Lo, n: &Self::Lo, p: &Self::Lo) -> Result<Self::Sq> {
        (0..self.arity)
            .map(|i| self.base.assoc(&m[i], &n[i], &p[i]))
            .collect()
    }
    fn assoc_inv(&self, m: &Self::Lo, n: &Self::Lo, p: &Self::Lo) -> Result<Self::Sq> {
        (0..self.arity)
            .map(|i| self.base.assoc_inv(&m[i], &n[i], &p[i]))
            .collect()
    }
    fn lunit(&self, m: &Self::Lo) -> Self::Sq {
        m.iter().map(|x| self.base.lunit(x)).collect()
    }
    fn lunit_inv(&self, m: &Self::Lo) -> Self::Sq {
        m.iter().map(|x| self.base.lunit_inv(x)).collect()
    }
    fn runit(&self, m: &Self::Lo) -> Self::Sq {
        m.iter().map(|x| self.base.runit(x)).collect()
    }
    fn runit_inv(&self, m: &Self::Lo) -> Self::Sq {
        m.iter().map(|x| self.base.runit_inv(x)).collect()
    }

    fn sq_invert(&self, s: &Self::Sq) -> Option<Self::Sq> {
        s.iter().map(|x| self.base.sq_invert(x)).collect()
    }
    fn cells_with_boundary(
        &self,
        m: &Self::Lo,
        n: &Self::Lo,
        f: &Self::Ti,
        g: &Self::Ti,
    ) -> Result<Vec<Self::Sq>> {
        // cartesian product of componentwise enumerations
        let mut acc: Vec<Vec<D::Sq>> = vec![vec![]];
        for i in 0..self.arity {
            let cells = self.base.cells_with_boundary(&m[i], &n[i], &f[i], &g[i])?;
            let mut next = Vec::new();
            for prefix in &acc {
                for c in &cells {
                    let mut row = prefix.clone();
                    row.push(c.clone());
                    next.push(row);
                }
            }
            acc = next;
        }
        Ok(acc)
    }
}

/// Caps applied while deriving composite lists for a universe.
#[derive(Debug, Clone, Copy)]
pub struct UniverseCaps {
    pub pairs: usize,
    pub triples: usize,
    pub quads: usize,
    pub grids: usize,
}

impl Default for UniverseCaps {
    fn default() -> Self {
        UniverseCaps {
            pairs: 600,
            triples: 400,
            quads: 250,
            grids: 400,
        }
    }
}

/// A finite window onto a double category: explicit cell lists plus
/// deterministically derived (and capped) composable tuples.
#[derive(Clone)]
pub struct DblUniverse<D: Dbl> {
    pub objects: Vec<D::Ob>,
    pub tights: Vec<D::Ti>,
    pub looses: Vec<D::Lo>,
    pub squares: Vec<D::Sq>,
    /// (g, f) with dom g = cod f.
    pub tight_pairs: Vec<(D::Ti, D::Ti)>,
    pub tight_triples: Vec<(D::Ti, D::Ti, D::Ti)>,
    /// (n, m) with S(n) = T(m), composite n⊙m.
    pub loose_pairs: Vec<(D::Lo, D::Lo)>,
    /// (m, n, p) in constraint order: (m⊙n)⊙p is defined.
    pub loose_triples: Vec<(D::Lo, D::Lo, D::Lo)>,
    pub loose_quads: Vec<(D::Lo, D::Lo, D::Lo, D::Lo)>,
    /// (b, a) tightly stackable.
    pub sq_v_pairs: Vec<(D::Sq, D::Sq)>,
    pub sq_v_triples: Vec<(D::Sq, D::Sq, D::Sq)>,
    /// (b, a) loosely pastable.
    pub sq_h_pairs: Vec<(D::Sq, D::Sq)>,
    /// h-composable triples of 2-cells (a, b, c) in path order.
    pub sq_h_triples: Vec<(D::Sq, D::Sq, D::Sq)>,
    /// Interchange grids [top inner, top outer, bottom inner, bottom outer].
    pub sq_grids: Vec<[D::Sq; 4]>,
}

impl<D: Dbl> DblUniverse<D> {
    pub fn derive(
        d: &D,
        objects: Vec<D::Ob>,
        tights: Vec<D::Ti>,
        looses: Vec<D::Lo>,
        squares: Vec<D::Sq>,
        caps: UniverseCaps,
    ) -> Self {
        let mut tight_pairs = Vec::new();
        for g in &tights {
            for f in &tights {
                if d.ti_dom(g) == d.ti_cod(f) {
                    tight_pairs.push((g.clone(), f.clone()));
                    if tight_pairs.len() >= caps.pairs {
                        break;
                    }
                }
            }
            if tight_pairs.len() >= caps.pairs {
                break;
            }
        }
        let mut tight_triples = Vec::new();
        'tt: for h in &tights {
            for g in &tights {
                if d.ti_dom(h) != d.ti_cod(g) {
                    continue;
                }
                for f in &tights {
                    if d.ti_dom(g) == d.ti_cod(f) {
                        tight_triples.push((h.clone(), g.clone(), f.clone()));
                        if tight_triples.len() >= caps.triples {
                            break 'tt;
                        }
                    }
                }
            }
        }

        let mut loose_pairs = Vec::new();
        'lp: for n in &looses {
            for m in &looses {
                if d.lo_src(n) == d.lo_tgt(m) {
                    loose_pairs.push((n.clone(), m.clone()));
                    if loose_pairs.len() >= caps.pairs {
                        break 'lp;
                    }
                }
            }
        }
        let mut loose_triples = Vec::new();
        'lt: for m in &looses {
            for n in &looses {
                if d.lo_src(m) != d.lo_tgt(n) {
                    continue;
                }
                for p in &looses {
                    if d.lo_src(n) == d.lo_tgt(p) {
                        loose_triples.push((m.clone(), n.clone(), p.clone()));
                        if loose_triples.len() >= caps.triples {
                            break 'lt;
                        }
                    }
                }
            }
        }
        let mut loose_quads = Vec::new();
        'lq: for m in &looses {
            for n in &looses {
                if d.lo_src(m) != d.lo_tgt(n) {
                    continue;
                }
                for p in &looses {
                    if d.lo_src(n) != d.lo_tgt(p) {
                        continue;
                    }
                    for q in &looses {
                        if d.lo_src(p) == d.lo_tgt(q) {
                            loose_quads.push((m.clone(), n.clone(), p.clone(), q.clone()));
                            if loose_quads.len() >= caps.quads {
                                break 'lq;
                            }
                        }
                    }
                }
            }
        }

        let mut sq_v_pairs = Vec::new();
        'vp: for b in &squares {
            for a in &squares {
                if d.sq_top(b) == d.sq_bot(a) {
                    sq_v_pairs.push((b.clone(), a.clone()));
                    if sq_v_pairs.len() >= caps.pairs {
                        break 'vp;
                    }
                }
            }
        }
        let mut sq_v_triples = Vec::new();
        'vt: for c in &squares {
            for b in &squares {
                if d.sq_top(c) != d.sq_bot(b) {
                    continue;
                }
                for a in &squares {
                    if d.sq_top(b) == d.sq_bot(a) {
                        sq_v_triples.push((c.clone(), b.clone(), a.clone()));
                        if sq_v_triples.len() >= caps.triples {
                            break 'vt;
                        }
                    }
                }
            }
        }

        let h_ok = |b: &D::Sq, a: &D::Sq| {
            d.lo_src(&d.sq_top(b)) == d.lo_tgt(&d.sq_top(a)) && d.sq_left(b) == d.sq_right(a)
        };
        let mut sq_h_pairs = Vec::new();
        'hp: for b in &squares {
            for a in &squares {
                if h_ok(b, a) {
                    sq_h_pairs.push((b.clone(), a.clone()));
                    if sq_h_pairs.len() >= caps.pairs {
                        break 'hp;
                    }
                }
            }
        }
        let mut sq_h_triples = Vec::new();
        'ht: for a in &squares {
            for b in &squares {
                if !h_ok(b, a) {
                    continue;
                }
                for c in &squares {
                    if h_ok(c, b) {
                        sq_h_triples.push((a.clone(), b.clone(), c.clone()));
                        if sq_h_triples.len() >= caps.triples {
                            break 'ht;
                        }
                    }
                }
            }
        }

        let mut sq_grids = Vec::new();
        'gr: for a in &squares {
            for b in &squares {
                if !h_ok(b, a) {
                    continue;
                }
                for c in &squares {
                    if d.sq_top(c) != d.sq_bot(a) {
                        continue;
                    }
                    for e in &squares {
                        if d.sq_top(e) == d.sq_bot(b) && h_ok(e, c) {
                            sq_grids.push([a.clone(), b.clone(), c.clone(), e.clone()]);
                            if sq_grids.len() >= caps.grids {
                                break 'gr;
                            }
                        }
                    }
                }
            }
        }

        DblUniverse {
            objects,
            tights,
            looses,
            squares,
            tight_pairs,
            tight_triples,
            loose_pairs,
            loose_triples,
            loose_quads,
            sq_v_pairs,
            sq_v_triples,
            sq_h_pairs,
            sq_h_triples,
            sq_grids,
        }
    }
}

fn eq_or_witness<D: Dbl, T: PartialEq + Debug>(
    fam: &mut Family,
    key: &str,
    lhs: Result<T>,
    rhs: Result<T>,
) {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => {
            let ok = l == r;
            fam.record(key, ok, || format!("lhs = {l:?}\n    rhs = {r:?}"));
        }
        (l, r) => fam.record(key, false, || format!("lhs = {l:?}\n    rhs = {r:?}")),
    }
    let _ = std::marker::PhantomData::<D>;
}

/// Exhaustively verify the double category axioms over a universe.
///
/// Families: tight and square category laws, boundary functoriality of
/// S/T/U/⊙ (including interchange and 1_{U_A} = U_{1_A}), naturality,
/// globularity and invertibility of the constraint cells, and the
/// pentagon and triangle for ⊙. `filter`, when given, restricts every
/// family to the instantiation with that key (witness replay).
pub fn check_double_category<D: Dbl>(
    d: &D,
    u: &DblUniverse<D>,
    filter: Option<&str>,
) -> Report {
    let mut report = Report::new();
    let f = |name: &str| Family::with_filter(name, filter.map(|s| s.to_string()));

    // D0 category laws.
    let mut fam = f("dbl.tight-category");
    for (h, g, fa) in &u.tight_triples {
        let key = format!(
            "assoc[{};{};{}]",
            d.show_ti(h),
            d.show_ti(g),
            d.show_ti(fa)
        );
        if !fam.admits(&key) {
            continue;
        }
        let lhs = d.ti_comp(h, g).and_then(|hg| d.ti_comp(&hg, fa));
        let rhs = d.ti_comp(g, fa).and_then(|gf| d.ti_comp(h, &gf));
        eq_or_witness::<D, _>(&mut fam, &key, lhs, rhs);
    }
    for t in &u.tights {
        let key = format!("unit[{}]", d.show_ti(t));
        if !fam.admits(&key) {
            continue;
        }
        let l = d.ti_comp(&d.ti_id(&d.ti_cod(t)), t);
        let r = d.ti_comp(t, &d.ti_id(&d.ti_dom(t)));
        let ok = l.as_ref() == Ok(t) && r.as_ref() == Ok(t);
        fam.record(&key, ok, || format!("id∘f = {l:?}, f∘id = {r:?}"));
    }
    report.checks.push(fam.finish());

    // D1 category laws (vertical composition of 2-cells).
    let mut fam = f("dbl.square-category");
    for (c, b, a) in &u.sq_v_triples {
        let key = format!(
            "assoc[{};{};{}]",
            d.show_sq(c),
            d.show_sq(b),
            d.show_sq(a)
        );
        if !fam.admits(&key) {
            continue;
        }
        let lhs = d.vcomp(c, b).and_then(|cb| d.vcomp(&cb, a));
        let rhs = d.vcomp(b, a).and_then(|ba| d.vcomp(c, &ba));
        eq_or_witness::<D, _>(&mut fam, &key, lhs, rhs);
    }
    for s in &u.squares {
        let key = format!("unit[{}]", d.show_sq(s));
        if !fam.admits(&key) {
            continue;
        }
        let l = d.vcomp(&d.sq_id(&d.sq_bot(s)), s);
        let r = d.vcomp(s, &d.sq_id(&d.sq_top(s)));
        let ok = l.as_ref() == Ok(s) && r.as_ref() == Ok(s);
        fam.record(&key, ok, || format!("1∘s = {l:?}, s∘1 = {r:?}"));
    }
    report.checks.push(fam.finish());

    // Structure functors: boundaries of U and ⊙, functoriality of U.
    let mut fam = f("dbl.structure-functors");
    for a in &u.objects {
        let key = format!("unit-boundary[{}]", d.show_ob(a));
        if fam.admits(&key) {
            let ua = d.lo_unit(a);
            let ok = d.lo_src(&ua) == *a && d.lo_tgt(&ua) == *a;
            fam.record(&key, ok, || "S(U_A) or T(U_A) differs from A".into());
        }
        let key = format!("unit-of-identity[{}]", d.show_ob(a));
        if fam.admits(&key) {
            let lhs = d.sq_unit(&d.ti_id(a));
            let rhs = d.sq_id(&d.lo_unit(a));
            fam.record(&key, lhs == rhs, || {
                format!("U_(1_A) = {} vs 1_(U_A) = {}", d.show_sq(&lhs), d.show_sq(&rhs))
            });
        }
    }
    for (n, m) in &u.loose_pairs {
        let key = format!("odot-boundary[{};{}]", d.show_lo(n), d.show_lo(m));
        if !fam.admits(&key) {
            continue;
        }
        match d.lo_comp(n, m) {
            Ok(nm) => {
                let ok = d.lo_src(&nm) == d.lo_src(m) && d.lo_tgt(&nm) == d.lo_tgt(n);
                fam.record(&key, ok, || "S(n⊙m) ≠ S(m) or T(n⊙m) ≠ T(n)".into());
            }
            Err(e) => fam.record(&key, false, || format!("composite undefined: {e}")),
        }
    }
    for (g, fa) in &u.tight_pairs {
        let key = format!("unit-functorial[{};{}]", d.show_ti(g), d.show_ti(fa));
        if !fam.admits(&key) {
            continue;
        }
        let lhs = d
            .ti_comp(g, fa)
            .map(|gf| d.sq_unit(&gf));
        let rhs = d.vcomp(&d.sq_unit(g), &d.sq_unit(fa));
        eq_or_witness::<D, _>(&mut fam, &key, lhs, rhs);
    }
    report.checks.push(fam.finish());

    // Functoriality of ⊙ on 2-cells: identities and interchange.
    let mut fam = f("dbl.interchange");
    for (n, m) in &u.loose_pairs {
        let key = format!("odot-identity[{};{}]", d.show_lo(n), d.show_lo(m));
        if !fam.admits(&key) {
            continue;
        }
        let lhs = d.lo_comp(n, m).map(|nm| d.sq_id(&nm));
        let rhs = d.hcomp(&d.sq_id(n), &d.sq_id(m));
        eq_or_witness::<D, _>(&mut fam, &key, lhs, rhs);
    }
    for [a, b, c, e] in &u.sq_grids {
        let key = format!(
            "interchange[{};{};{};{}]",
            d.show_sq(a),
            d.show_sq(b),
            d.show_sq(c),
            d.show_sq(e)
        );
        if !fam.admits(&key) {
            continue;
        }
        let lhs = d
            .hcomp(b, a)
            .and_then(|top| d.hcomp(e, c).and_then(|bot| d.vcomp(&bot, &top)));
        let rhs = d
            .vcomp(e, b)
            .and_then(|right| d.vcomp(c, a).and_then(|left| d.hcomp(&right, &left)));
        eq_or_witness::<D, _>(&mut fam, &key, lhs, rhs);
    }
    report.checks.push(fam.finish());

    // Constraint cells: globular, invertible.
    let mut fam = f("dbl.constraints");
    for (m, n, p) in &u.loose_triples {
        let key = format!(
            "assoc[{};{};{}]",
            d.show_lo(m),
            d.show_lo(n),
            d.show_lo(p)
        );
        if !fam.admits(&key) {
            continue;
        }
        let ok = (|| -> Result<bool> {
            let a = d.assoc(m, n, p)?;
            let ai = d.assoc_inv(m, n, p)?;
            let src = d.sq_top(&a);
            let tgt = d.sq_bot(&a);
            Ok(d.is_globular(&a)
                && d.vcomp(&ai, &a)? == d.sq_id(&src)
                && d.vcomp(&a, &ai)? == d.sq_id(&tgt))
        })();
        fam.record(&key, ok == Ok(true), || format!("{ok:?}"));
    }
    for m in &u.looses {
        let key = format!("unitors[{}]", d.show_lo(m));
        if !fam.admits(&key) {
            continue;
        }
        let ok = (|| -> Result<bool> {
            let l = d.lunit(m);
            let li = d.lunit_inv(m);
            let r = d.runit(m);
            let ri = d.runit_inv(m);
            Ok(d.is_globular(&l)
                && d.is_globular(&r)
                && d.sq_bot(&l) == *m
                && d.sq_bot(&r) == *m
                && d.vcomp(&li, &l)? == d.sq_id(&d.sq_top(&l))
                && d.vcomp(&l, &li)? == d.sq_id(m)
                && d.vcomp(&ri, &r)? == d.sq_id(&d.sq_top(&r))
                && d.vcomp(&r, &ri)? == d.sq_id(m))
        })();
        fam.record(&key, ok == Ok(true), || format!("{ok:?}"));
    }
    report.checks.push(fam.finish());

    // Naturality of the constraints.
    let mut fam = f("dbl.naturality");
    for (a, b, c) in &u.sq_h_triples {
        let key = format!(
            "assoc-nat[{};{};{}]",
            d.show_sq(a),
            d.show_sq(b),
            d.show_sq(c)
        );
        if !fam.admits(&key) {
            continue;
        }
        // cells a: P→P', b: N→N', c: M→M' in path order (a innermost)
        let lhs = (|| -> Result<D::Sq> {
            let left = d.hcomp(&d.hcomp(c, b)?, a)?;
            let con = d.assoc(&d.sq_bot(c), &d.sq_bot(b), &d.sq_bot(a))?;
            d.vcomp(&con, &left)
        })();
        let rhs = (|| -> Result<D::Sq> {
            let right = d.hcomp(c, &d.hcomp(b, a)?)?;
            let con = d.assoc(&d.sq_top(c), &d.sq_top(b), &d.sq_top(a))?;
            d.vcomp(&right, &con)
        })();
        eq_or_witness::<D, _>(&mut fam, &key, lhs, rhs);
    }
    for s in &u.squares {
        let key = format!("unitor-nat[{}]", d.show_sq(s));
        if !fam.admits(&key) {
            continue;
        }
        let m = d.sq_top(s);
        let n = d.sq_bot(s);
        let g = d.sq_right(s);
        let fa = d.sq_left(s);
        let lhs_l = d
            .hcomp(&d.sq_unit(&g), s)
            .and_then(|x| d.vcomp(&d.lunit(&n), &x));
        let rhs_l = d.vcomp(s, &d.lunit(&m));
        let lhs_r = d
            .hcomp(s, &d.sq_unit(&fa))
            .and_then(|x| d.vcomp(&d.runit(&n), &x));
        let rhs_r = d.vcomp(s, &d.runit(&m));
        let ok = lhs_l.is_ok() && lhs_l == rhs_l && lhs_r.is_ok() && lhs_r == rhs_r;
        fam.record(&key, ok, || {
            format!("l: {lhs_l:?} vs {rhs_l:?}; r: {lhs_r:?} vs {rhs_r:?}")
        });
    }
    report.checks.push(fam.finish());

    // Pentagon and triangle for ⊙.
    let mut fam = f("dbl.pentagon");
    for (m, n, p, q) in &u.loose_quads {
        let key = format!(
            "[{};{};{};{}]",
            d.show_lo(m),
            d.show_lo(n),
            d.show_lo(p),
            d.show_lo(q)
        );
        if !fam.admits(&key) {
            continue;
        }
        let lhs = (|| -> Result<D::Sq> {
            let mn = d.lo_comp(m, n)?;
            let pq = d.lo_comp(p, q)?;
            d.vcomp(&d.assoc(m, n, &pq)?, &d.assoc(&mn, p, q)?)
        })();
        let rhs = (|| -> Result<D::Sq> {
            let np = d.lo_comp(n, p)?;
            let first = d.hcomp(&d.assoc(m, n, p)?, &d.sq_id(q))?;
            let second = d.assoc(m, &np, q)?;
            let third = d.hcomp(&d.sq_id(m), &d.assoc(n, p, q)?)?;
            d.vcomp(&third, &d.vcomp(&second, &first)?)
        })();
        eq_or_witness::<D, _>(&mut fam, &key, lhs, rhs);
    }
    report.checks.push(fam.finish());

    let mut fam = f("dbl.triangle");
    for (m, n) in &u.loose_pairs {
        let key = format!("[{};{}]", d.show_lo(m), d.show_lo(n));
        if !fam.admits(&key) {
            continue;
        }
        let b = d.lo_tgt(n);
        let lhs = (|| -> Result<D::Sq> {
            let first = d.assoc(m, &d.lo_unit(&b), n)?;
            d.vcomp(&d.hcomp(&d.sq_id(m), &d.lunit(n))?, &first)
        })();
        let rhs = d.hcomp(&d.runit(m), &d.sq_id(n));
        eq_or_witness::<D, _>(&mut fam, &key, lhs, rhs);
    }
    report.checks.push(fam.finish());

    report
}
