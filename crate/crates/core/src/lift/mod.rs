//! Lifting structure from double categories to their loose bicategories:
//! pseudofunctors from double functors, (op)lax/pseudo transformations from
//! tight transformations via chosen companions, comparison icons between
//! choices, and the full monoidal assembly.

pub mod monoidal;

pub use crate::bicat::{lift_double_functor, loose_bicategory};

use crate::bicat::{check_icon, Bicat, Icon, Modification, PsFun, Transf, TransfMode};
use crate::companion::{
    compose_companions, identity_companion, theta, CompanionChoice, CompanionPair,
};
use crate::dbl::{Dbl, DblFun, DblTransf, DblUniverse};
use crate::error::{Error, Result};
use crate::finbase::FinCategory;
use crate::report::Report;
use std::collections::BTreeMap;

/// A companion assignment with an optional generator for tight cells not
/// listed explicitly (rule-backed instances can provide canonical
/// companions for every tight cell).
pub struct Choice<'x, D: Dbl> {
    pub map: CompanionChoice<D>,
    pub fallback: Option<Box<dyn Fn(&D::Ti) -> Option<CompanionPair<D>> + 'x>>,
}

impl<'x, D: Dbl> Choice<'x, D> {
    pub fn from_map(map: CompanionChoice<D>) -> Self {
        Choice {
            map,
            fallback: None,
        }
    }

    pub fn with_fallback(
        map: CompanionChoice<D>,
        f: impl Fn(&D::Ti) -> Option<CompanionPair<D>> + 'x,
    ) -> Self {
        Choice {
            map,
            fallback: Some(Box::new(f)),
        }
    }

    pub fn get(&self, f: &D::Ti) -> Result<CompanionPair<D>> {
        if let Ok(p) = self.map.get(f) {
            return Ok(p.clone());
        }
        if let Some(gen) = &self.fallback {
            if let Some(p) = gen(f) {
                return Ok(p);
            }
        }
        Err(Error::MissingCompanion(format!("{f:?}")))
    }
}

/// The canonical graph-span companion assignment for Span(FinSet).
pub fn span_canonical_choice<'x>() -> Choice<'x, crate::instances::span::SpanDbl> {
    use crate::finbase::FinFun;
    use crate::instances::span::{Span, SpanDbl};
    Choice::with_fallback(CompanionChoice::new(), |f: &FinFun| {
        let d = SpanDbl;
        let hat = Span::graph(f);
        let eta = d
            .cells_over(&Span::unit(&f.dom), &hat, &FinFun::identity(&f.dom), f)
            .into_iter()
            .find(|c| c.map == FinFun::identity(&f.dom))?;
        let eps = d
            .cells_over(&hat, &Span::unit(&f.cod), f, &FinFun::identity(&f.cod))
            .pop()?;
        Some(CompanionPair {
            f: f.clone(),
            hat,
            eta,
            eps,
        })
    })
}

/// A second, relabelled companion assignment for Span(FinSet): graph spans
/// whose apex elements are wrapped into pairs.
pub fn span_relabelled_choice<'x>() -> Choice<'x, crate::instances::span::SpanDbl> {
    use crate::finbase::{El, FinFun, FinSet};
    use crate::instances::span::{Span, SpanDbl};
    Choice::with_fallback(CompanionChoice::new(), |f: &FinFun| {
        let d = SpanDbl;
        let apex = FinSet::new(
            f.dom
                .elems()
                .iter()
                .map(|e| El::pair(e.clone(), e.clone()))
                .collect(),
        )
        .ok()?;
        let left = FinFun::new(apex.clone(), f.dom.clone(), (0..f.dom.len()).collect()).ok()?;
        let right = crate::finbase::compose_functions(f, &left).ok()?;
        let hat = Span::new(left, right).ok()?;
        let eta = d
            .cells_over(&Span::unit(&f.dom), &hat, &FinFun::identity(&f.dom), f)
            .into_iter()
            .next()?;
        let eps = d
            .cells_over(&hat, &Span::unit(&f.cod), f, &FinFun::identity(&f.cod))
            .pop()?;
        let p = CompanionPair {
            f: f.clone(),
            hat,
            eta,
            eps,
        };
        crate::companion::check_companion(&d, &p).ok()?.then_some(p)
    })
}

/// The characteristic-matrix companion assignment for Mat(Q).
pub fn mat_canonical_choice<'x>(
    m: &'x crate::instances::mat::MatDbl,
) -> Choice<'x, crate::instances::mat::MatDbl> {
    use crate::finbase::FinFun;
    use crate::instances::mat::{QCell, QMat};
    Choice::with_fallback(CompanionChoice::new(), move |f: &FinFun| {
        let hat = QMat::characteristic(&m.q, f);
        let eta = QCell {
            src: m.lo_unit(&f.dom),
            dst: hat.clone(),
            f: FinFun::identity(&f.dom),
            g: f.clone(),
        };
        let eps = QCell {
            src: hat.clone(),
            dst: m.lo_unit(&f.cod),
            f: f.clone(),
            g: FinFun::identity(&f.cod),
        };
        if !m.cell_valid(&eta) || !m.cell_valid(&eps) {
            return None;
        }
        Some(CompanionPair {
            f: f.clone(),
            hat,
            eta,
            eps,
        })
    })
}

/// The 2-cell component of a companion-lifted transformation at a loose
/// cell, with the unit constraints inserted left to right:
///   α̂_B ⊙ F M → α̂_B ⊙ (F M ⊙ U) → U ⊙ (G M ⊙ α̂_A) → G M ⊙ α̂_A.
pub fn lifted_component<S: Dbl, T: Dbl>(
    t: &T,
    al: &DblTransf<'_, S, T>,
    s_engine: &S,
    choice: &Choice<'_, T>,
    m: &S::Lo,
) -> Result<T::Sq> {
    let a = s_engine.lo_src(m);
    let b = s_engine.lo_tgt(m);
    let pa = choice.get(&(al.at_ob)(&a))?;
    let pb = choice.get(&(al.at_ob)(&b))?;
    let mid = (al.at_lo)(m);
    let fm = t.sq_top(&mid);
    let gm = t.sq_bot(&mid);
    let row = t.hcomp(&pb.eps, &t.hcomp(&mid, &pa.eta)?)?;
    let pre = t.hcomp(&t.sq_id(&pb.hat), &t.runit_inv(&fm))?;
    let post = t.lunit(&t.lo_comp(&gm, &pa.hat)?);
    t.vcomp(&post, &t.vcomp(&row, &pre)?)
}

/// Lift a tight transformation to a transformation of loose bicategories
/// by choosing companions for its components. The result is always lawful
/// in oplax mode; pseudo mode additionally requires loose strength.
#[allow(clippy::too_many_arguments)]
pub fn lift_tight_transformation<'x, S: Dbl, T: Dbl, BS, BT>(
    s: &'x S,
    t: &'x T,
    al: &'x DblTransf<'x, S, T>,
    choice: &'x Choice<'x, T>,
    u: &DblUniverse<S>,
    mode: TransfMode,
) -> Result<Transf<'x, BS, BT>>
where
    BS: Bicat<Ob = S::Ob, One = S::Lo, Two = S::Sq>,
    BT: Bicat<Ob = T::Ob, One = T::Lo, Two = T::Sq>,
{
    if mode == TransfMode::Lax {
        return Err(Error::ConfigError(
            "companion lifting produces oplax or pseudo transformations; \
             lax ones arise through the loose opposite"
                .into(),
        ));
    }
    // the choice must cover every component over the universe
    for a in &u.objects {
        choice.get(&(al.at_ob)(a))?;
    }
    Ok(Transf {
        name: format!("lift({})", al.name),
        mode,
        at_ob: Box::new(move |a: &S::Ob| {
            choice
                .get(&(al.at_ob)(a))
                .expect("choice covers the universe")
                .hat
        }),
        at_one: Box::new(move |m: &S::Lo| {
            lifted_component(t, al, s, choice, m).expect("lifted 2-cell component")
        }),
    })
}

/// True iff every lifted 2-cell component over the universe is invertible.
pub fn is_loosely_strong<S: Dbl, T: Dbl>(
    s: &S,
    t: &T,
    al: &DblTransf<'_, S, T>,
    choice: &Choice<'_, T>,
    u: &DblUniverse<S>,
) -> Result<bool> {
    for m in &u.looses {
        let c = lifted_component(t, al, s, choice, m)?;
        let invertible = t.sq_invert(&c).is_some() || {
            let cands = t.globular_between(&t.sq_bot(&c), &t.sq_top(&c))?;
            cands.iter().any(|x| {
                t.vcomp(x, &c).ok() == Some(t.sq_id(&t.sq_top(&c)))
                    && t.vcomp(&c, x).ok() == Some(t.sq_id(&t.sq_bot(&c)))
            })
        };
        if !invertible {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The componentwise comparison family between two lifts of one tight
/// transformation: θ at every object, an invertible modification.
pub fn compare_companion_choices<'x, S: Dbl, T: Dbl, BS, BT>(
    t: &'x T,
    al: &'x DblTransf<'x, S, T>,
    choice1: &'x Choice<'x, T>,
    choice2: &'x Choice<'x, T>,
) -> Modification<'x, BS, BT>
where
    BS: Bicat<Ob = S::Ob, One = S::Lo, Two = S::Sq>,
    BT: Bicat<Ob = T::Ob, One = T::Lo, Two = T::Sq>,
{
    Modification {
        name: format!("compare({})", al.name),
        at_ob: Box::new(move |a: &S::Ob| {
            let p = choice1
                .get(&(al.at_ob)(a))
                .expect("choice 1 covers the universe");
            let q = choice2
                .get(&(al.at_ob)(a))
                .expect("choice 2 covers the universe");
            theta(t, &p, &q).expect("comparison cell")
        }),
    }
}

/// The composition constraint of the lifting: at each object, θ between
/// the chosen companion of (β∘α)_A and the composite companion
/// β̂_A ⊙ α̂_A.
pub fn composition_constraint<'x, S: Dbl, T: Dbl, BS, BT>(
    t: &'x T,
    al: &'x DblTransf<'x, S, T>,
    be: &'x DblTransf<'x, S, T>,
    choice: &'x Choice<'x, T>,
) -> Modification<'x, BS, BT>
where
    BS: Bicat<Ob = S::Ob, One = S::Lo, Two = S::Sq>,
    BT: Bicat<Ob = T::Ob, One = T::Lo, Two = T::Sq>,
{
    Modification {
        name: format!("comp-constraint({},{})", al.name, be.name),
        at_ob: Box::new(move |a: &S::Ob| {
            let pa = choice.get(&(al.at_ob)(a)).expect("choice covers α");
            let pb = choice.get(&(be.at_ob)(a)).expect("choice covers β");
            let composite = t
                .ti_comp(&pb.f, &pa.f)
                .expect("components compose");
            let direct = choice.get(&composite).expect("choice covers β∘α");
            let paired = compose_companions(t, &pa, &pb).expect("composite companion");
            theta(t, &direct, &paired).expect("constraint cell")
        }),
    }
}

// ---------------------------------------------------------------------
// Reified hom-bicategory of colax transformations, for icon-level checks.
// ---------------------------------------------------------------------

/// A transformation materialized over a finite universe: its companion
/// 1-cell components and lifted 2-cell components, tabulated.
pub struct ColaxData<S: Dbl, T: Dbl> {
    pub src: usize,
    pub tgt: usize,
    pub at_ob: BTreeMap<S::Ob, T::Lo>,
    pub at_lo: BTreeMap<S::Lo, T::Sq>,
}

impl<S: Dbl, T: Dbl> Clone for ColaxData<S, T> {
    fn clone(&self) -> Self {
        ColaxData {
            src: self.src,
            tgt: self.tgt,
            at_ob: self.at_ob.clone(),
            at_lo: self.at_lo.clone(),
        }
    }
}
impl<S: Dbl, T: Dbl> PartialEq for ColaxData<S, T> {
    fn eq(&self, o: &Self) -> bool {
        (self.src, self.tgt, &self.at_ob, &self.at_lo)
            == (o.src, o.tgt, &o.at_ob, &o.at_lo)
    }
}
impl<S: Dbl, T: Dbl> Eq for ColaxData<S, T> {}
impl<S: Dbl, T: Dbl> PartialOrd for ColaxData<S, T> {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl<S: Dbl, T: Dbl> Ord for ColaxData<S, T> {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        (self.src, self.tgt, &self.at_ob, &self.at_lo).cmp(&(
            o.src,
            o.tgt,
            &o.at_ob,
            &o.at_lo,
        ))
    }
}
impl<S: Dbl, T: Dbl> std::fmt::Debug for ColaxData<S, T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ColaxData({}→{})", self.src, self.tgt)
    }
}

/// A modification materialized over the universe.
pub struct ModData<S: Dbl, T: Dbl> {
    pub src: ColaxData<S, T>,
    pub tgt: ColaxData<S, T>,
    pub at: BTreeMap<S::Ob, T::Sq>,
}

impl<S: Dbl, T: Dbl> Clone for ModData<S, T> {
    fn clone(&self) -> Self {
        ModData {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            at: self.at.clone(),
        }
    }
}
impl<S: Dbl, T: Dbl> PartialEq for ModData<S, T> {
    fn eq(&self, o: &Self) -> bool {
        self.src == o.src && self.tgt == o.tgt && self.at == o.at
    }
}
impl<S: Dbl, T: Dbl> Eq for ModData<S, T> {}
impl<S: Dbl, T: Dbl> PartialOrd for ModData<S, T> {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl<S: Dbl, T: Dbl> Ord for ModData<S, T> {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        (&self.src, &self.tgt, &self.at).cmp(&(&o.src, &o.tgt, &o.at))
    }
}
impl<S: Dbl, T: Dbl> std::fmt::Debug for ModData<S, T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModData({:?}→{:?})", self.src, self.tgt)
    }
}

/// The reified bicategory of materialized colax transformations between a
/// fixed list of double functors, over a fixed finite domain universe:
/// 1-cells compose componentwise with the top-right pasting convention,
/// 2-cells are componentwise modifications.
pub struct LiftHomBicat<'x, S: Dbl, T: Dbl> {
    pub s: &'x S,
    pub t: &'x T,
    pub funs: Vec<&'x DblFun<'x, S, T>>,
    pub dom_obs: Vec<S::Ob>,
    pub dom_los: Vec<S::Lo>,
}

impl<'x, S: Dbl, T: Dbl> LiftHomBicat<'x, S, T> {
    /// Materialize a lifted transformation over the stored domain.
    pub fn materialize(
        &self,
        src: usize,
        tgt: usize,
        al: &DblTransf<'_, S, T>,
        choice: &Choice<'_, T>,
    ) -> Result<ColaxData<S, T>> {
        let mut at_ob = BTreeMap::new();
        for a in &self.dom_obs {
            at_ob.insert(a.clone(), choice.get(&(al.at_ob)(a))?.hat);
        }
        let mut at_lo = BTreeMap::new();
        for m in &self.dom_los {
            at_lo.insert(
                m.clone(),
                lifted_component(self.t, al, self.s, choice, m)?,
            );
        }
        Ok(ColaxData {
            src,
            tgt,
            at_ob,
            at_lo,
        })
    }

    /// The identity transformation on functor i, lifted with identity
    /// companions.
    pub fn identity_data(&self, i: usize) -> ColaxData<S, T> {
        let f = self.funs[i];
        let mut at_ob = BTreeMap::new();
        for a in &self.dom_obs {
            at_ob.insert(a.clone(), self.t.lo_unit(&(f.ob)(a)));
        }
        let mut at_lo = BTreeMap::new();
        for m in &self.dom_los {
            let p = identity_companion(self.t, &(f.ob)(&self.s.lo_src(m)));
            let q = identity_companion(self.t, &(f.ob)(&self.s.lo_tgt(m)));
            let mid = self.t.sq_id(&(f.lo)(m));
            let fm = self.t.sq_top(&mid);
            let row = self
                .t
                .hcomp(&q.eps, &self.t.hcomp(&mid, &p.eta).unwrap())
                .unwrap();
            let pre = self
                .t
                .hcomp(&self.t.sq_id(&q.hat), &self.t.runit_inv(&fm))
                .unwrap();
            let post = self
                .t
                .lunit(&self.t.lo_comp(&self.t.sq_bot(&mid), &p.hat).unwrap());
            at_lo.insert(
                m.clone(),
                self.t
                    .vcomp(&post, &self.t.vcomp(&row, &pre).unwrap())
                    .unwrap(),
            );
        }
        ColaxData {
            src: i,
            tgt: i,
            at_ob,
            at_lo,
        }
    }
}

impl<'x, S: Dbl, T: Dbl> Bicat for LiftHomBicat<'x, S, T> {
    type Ob = usize;
    type One = ColaxData<S, T>;
    type Two = ModData<S, T>;

    fn one_src(&self, f: &Self::One) -> usize {
        f.src
    }
    fn one_tgt(&self, f: &Self::One) -> usize {
        f.tgt
    }
    fn two_src(&self, a: &Self::Two) -> Self::One {
        a.src.clone()
    }
    fn two_tgt(&self, a: &Self::Two) -> Self::One {
        a.tgt.clone()
    }
    fn id1(&self, i: &usize) -> Self::One {
        self.identity_data(*i)
    }
    fn comp1(&self, g: &Self::One, f: &Self::One) -> Result<Self::One> {
        if f.tgt != g.src {
            return Err(Error::BoundaryMismatch(
                "transformations do not compose".into(),
            ));
        }
        let t = self.t;
        let mut at_ob = BTreeMap::new();
        for (a, fa) in &f.at_ob {
            let ga = g
                .at_ob
                .get(a)
                .ok_or_else(|| Error::UnresolvableUniverse("domain mismatch".into()))?;
            at_ob.insert(a.clone(), t.lo_comp(ga, fa)?);
        }
        let mut at_lo = BTreeMap::new();
        for (m, fc) in &f.at_lo {
            let gc = g
                .at_lo
                .get(m)
                .ok_or_else(|| Error::UnresolvableUniverse("domain mismatch".into()))?;
            // (β⊙α)_M: (β_B⊙α_B)⊙FM → β_B⊙(α_B⊙FM) → β_B⊙(GM⊙α_A)
            //        → (β_B⊙GM)⊙α_A → (HM⊙β_A)⊙α_A → HM⊙(β_A⊙α_A)
            let a_ob = self.s.lo_src(m);
            let b_ob = self.s.lo_tgt(m);
            let alpha_a = &f.at_ob[&a_ob];
            let alpha_b = &f.at_ob[&b_ob];
            let beta_a = &g.at_ob[&a_ob];
            let beta_b = &g.at_ob[&b_ob];
            let fm = t.sq_top(fc);
            let gm = t.sq_bot(fc);
            let hm = t.sq_bot(gc);
            let s1 = t.assoc(beta_b, alpha_b, &fm)?;
            let s2 = t.hcomp(&t.sq_id(beta_b), fc)?;
            let s3 = t.assoc_inv(beta_b, &gm, alpha_a)?;
            let s4 = t.hcomp(gc, &t.sq_id(alpha_a))?;
            let s5 = t.assoc(&hm, beta_a, alpha_a)?;
            let mut acc = s1;
            for step in [s2, s3, s4, s5] {
                acc = t.vcomp(&step, &acc)?;
            }
            at_lo.insert(m.clone(), acc);
        }
        Ok(ColaxData {
            src: f.src,
            tgt: g.tgt,
            at_ob,
            at_lo,
        })
    }
    fn id2(&self, f: &Self::One) -> Self::Two {
        let at = f
            .at_ob
            .iter()
            .map(|(a, m)| (a.clone(), self.t.sq_id(m)))
            .collect();
        ModData {
            src: f.clone(),
            tgt: f.clone(),
            at,
        }
    }
    fn vcomp2(&self, b: &Self::Two, a: &Self::Two) -> Result<Self::Two> {
        if a.tgt != b.src {
            return Err(Error::BoundaryMismatch("modifications do not stack".into()));
        }
        let mut at = BTreeMap::new();
        for (ob, x) in &a.at {
            let y = b
                .at
                .get(ob)
                .ok_or_else(|| Error::UnresolvableUniverse("domain mismatch".into()))?;
            at.insert(ob.clone(), self.t.vcomp(y, x)?);
        }
        Ok(ModData {
            src: a.src.clone(),
            tgt: b.tgt.clone(),
            at,
        })
    }
    fn hcomp2(&self, b: &Self::Two, a: &Self::Two) -> Result<Self::Two> {
        let src = self.comp1(&b.src, &a.src)?;
        let tgt = self.comp1(&b.tgt, &a.tgt)?;
        let mut at = BTreeMap::new();
        for (ob, x) in &a.at {
            let y = b
                .at
                .get(ob)
                .ok_or_else(|| Error::UnresolvableUniverse("domain mismatch".into()))?;
            at.insert(ob.clone(), self.t.hcomp(y, x)?);
        }
        Ok(ModData { src, tgt, at })
    }
    fn assoc2(&self, f: &Self::One, g: &Self::One, h: &Self::One) -> Result<Self::Two> {
        let src = self.comp1(&self.comp1(f, g)?, h)?;
        let tgt = self.comp1(f, &self.comp1(g, h)?)?;
        let mut at = BTreeMap::new();
        for (ob, hm) in &h.at_ob {
            at.insert(
                ob.clone(),
                self.t.assoc(&f.at_ob[ob], &g.at_ob[ob], hm)?,
            );
        }
        Ok(ModData { src, tgt, at })
    }
    fn assoc2_inv(&self, f: &Self::One, g: &Self::One, h: &Self::One) -> Result<Self::Two> {
        let src = self.comp1(f, &self.comp1(g, h)?)?;
        let tgt = self.comp1(&self.comp1(f, g)?, h)?;
        let mut at = BTreeMap::new();
        for (ob, hm) in &h.at_ob {
            at.insert(
                ob.clone(),
                self.t.assoc_inv(&f.at_ob[ob], &g.at_ob[ob], hm)?,
            );
        }
        Ok(ModData { src, tgt, at })
    }
    fn lunit2(&self, f: &Self::One) -> Self::Two {
        let idt = self.identity_data(f.tgt);
        let src = self.comp1(&idt, f).expect("unit composite");
        let at = f
            .at_ob
            .iter()
            .map(|(a, m)| (a.clone(), self.t.lunit(m)))
            .collect();
        ModData {
            src,
            tgt: f.clone(),
            at,
        }
    }
    fn lunit2_inv(&self, f: &Self::One) -> Self::Two {
        let l = self.lunit2(f);
        let at = f
            .at_ob
            .iter()
            .map(|(a, m)| (a.clone(), self.t.lunit_inv(m)))
            .collect();
        ModData {
            src: l.tgt,
            tgt: l.src,
            at,
        }
    }
    fn runit2(&self, f: &Self::One) -> Self::Two {
        let ids = self.identity_data(f.src);
        let src = self.comp1(f, &ids).expect("unit composite");
        let at = f
            .at_ob
            .iter()
            .map(|(a, m)| (a.clone(), self.t.runit(m)))
            .collect();
        ModData {
            src,
            tgt: f.clone(),
            at,
        }
    }
    fn runit2_inv(&self, f: &Self::One) -> Self::Two {
        let r = self.runit2(f);
        let at = f
            .at_ob
            .iter()
            .map(|(a, m)| (a.clone(), self.t.runit_inv(m)))
            .collect();
        ModData {
            src: r.tgt,
            tgt: r.src,
            at,
        }
    }
    fn invert2(&self, a: &Self::Two) -> Option<Self::Two> {
        let at: Option<BTreeMap<_, _>> = a
            .at
            .iter()
            .map(|(ob, x)| self.t.sq_invert(x).map(|y| (ob.clone(), y)))
            .collect();
        Some(ModData {
            src: a.tgt.clone(),
            tgt: a.src.clone(),
            at: at?,
        })
    }
    fn cells2_between(&self, _f: &Self::One, _g: &Self::One) -> Result<Vec<Self::Two>> {
        Err(Error::EnumerationUnsupported(
            "materialized transformation cells are not enumerable".into(),
        ))
    }
}

/// A finite category regarded as a bicategory with only identity 2-cells.
#[derive(Clone)]
pub struct CatAsBicat(pub FinCategory);

impl Bicat for CatAsBicat {
    type Ob = usize;
    type One = usize;
    type Two = usize;

    fn one_src(&self, f: &usize) -> usize {
        self.0.dom(*f)
    }
    fn one_tgt(&self, f: &usize) -> usize {
        self.0.cod(*f)
    }
    fn two_src(&self, a: &usize) -> usize {
        *a
    }
    fn two_tgt(&self, a: &usize) -> usize {
        *a
    }
    fn id1(&self, a: &usize) -> usize {
        self.0.ids[*a]
    }
    fn comp1(&self, g: &usize, f: &usize) -> Result<usize> {
        self.0
            .compose(*g, *f)
            .ok_or_else(|| Error::BoundaryMismatch("arrows do not compose".into()))
    }
    fn id2(&self, f: &usize) -> usize {
        *f
    }
    fn vcomp2(&self, b: &usize, a: &usize) -> Result<usize> {
        if a != b {
            return Err(Error::BoundaryMismatch("only identity 2-cells".into()));
        }
        Ok(*a)
    }
    fn hcomp2(&self, b: &usize, a: &usize) -> Result<usize> {
        self.comp1(b, a)
    }
    fn assoc2(&self, f: &usize, g: &usize, h: &usize) -> Result<usize> {
        self.comp1(&self.comp1(f, g)?, h)
    }
    fn assoc2_inv(&self, f: &usize, g: &usize, h: &usize) -> Result<usize> {
        self.assoc2(f, g, h)
    }
    fn lunit2(&self, f: &usize) -> usize {
        *f
    }
    fn lunit2_inv(&self, f: &usize) -> usize {
        *f
    }
    fn runit2(&self, f: &usize) -> usize {
        *f
    }
    fn runit2_inv(&self, f: &usize) -> usize {
        *f
    }
    fn invert2(&self, a: &usize) -> Option<usize> {
        Some(*a)
    }
    fn cells2_between(&self, f: &usize, g: &usize) -> Result<Vec<usize>> {
        Ok(if f == g { vec![*f] } else { vec![] })
    }
}

/// Build, per companion choice, the lifting pseudofunctor from a finite
/// category of transformations into the reified hom-bicategory, with the
/// θ composition constraints; then compare two of them with `check_icon`.
///
/// `gens[arrow]` gives the tight transformation for each non-identity
/// arrow; identities lift to identity data.
#[allow(clippy::too_many_arguments)]
pub fn choice_comparison_icon_report<'x, S: Dbl, T: Dbl>(
    hom: &'x LiftHomBicat<'x, S, T>,
    cat: &'x CatAsBicat,
    gens: &'x BTreeMap<usize, &'x DblTransf<'x, S, T>>,
    choice1: &'x Choice<'x, T>,
    choice2: &'x Choice<'x, T>,
    u: &crate::bicat::BUniverse<CatAsBicat>,
) -> Result<Report> {
    let mk_fun = |choice: &'x Choice<'x, T>, name: &str| -> Result<
        PsFun<'x, CatAsBicat, LiftHomBicat<'x, S, T>>,
    > {
        // materialize every arrow up front so closures stay total
        let mut table: BTreeMap<usize, ColaxData<S, T>> = BTreeMap::new();
        for (arrow, tr) in gens {
            table.insert(
                *arrow,
                hom.materialize(cat.0.dom(*arrow), cat.0.cod(*arrow), tr, choice)?,
            );
        }
        for (i, &id_arrow) in cat.0.ids.iter().enumerate() {
            table.insert(id_arrow, hom.identity_data(i));
        }
        let table2 = table.clone();
        let choice_for_comp = choice;
        let gens_ref = gens;
        let cat_ref = cat;
        Ok(PsFun {
            name: name.into(),
            ob: Box::new(|i: &usize| *i),
            one: Box::new(move |f: &usize| table[f].clone()),
            two: Box::new(move |x: &usize| hom.id2(&table2[x])),
            comp: Box::new(move |g: &usize, f: &usize| {
                constraint_cell(hom, cat_ref, gens_ref, choice_for_comp, g, f, false)
            }),
            comp_inv: Box::new(move |g: &usize, f: &usize| {
                constraint_cell(hom, cat_ref, gens_ref, choice_for_comp, g, f, true)
            }),
            unit: Box::new(move |i: &usize| {
                // H is strictly unital: identity arrows materialize to the
                // identity data
                hom.id2(&hom.identity_data(*i))
            }),
            unit_inv: Box::new(move |i: &usize| hom.id2(&hom.identity_data(*i))),
        })
    };
    let h1 = mk_fun(choice1, "H")?;
    let h2 = mk_fun(choice2, "H'")?;
    let icon = Icon {
        name: "θ".into(),
        at_one: Box::new(move |f: &usize| {
            let d1 = materialize_arrow(hom, cat, gens, choice1, f).expect("arrow data");
            let d2 = materialize_arrow(hom, cat, gens, choice2, f).expect("arrow data");
            let mut at = BTreeMap::new();
            for a in &hom.dom_obs {
                let c = match gens.get(f) {
                    Some(tr) => {
                        let p = choice1.get(&(tr.at_ob)(a)).expect("choice 1");
                        let q = choice2.get(&(tr.at_ob)(a)).expect("choice 2");
                        theta(hom.t, &p, &q).expect("θ")
                    }
                    None => {
                        // identity arrow: both lifts are the identity data
                        hom.t.sq_id(&d1.at_ob[a])
                    }
                };
                at.insert(a.clone(), c);
            }
            ModData {
                src: d1,
                tgt: d2,
                at,
            }
        }),
    };
    Ok(check_icon(cat, hom, &h1, &h2, &icon, u, None))
}

fn materialize_arrow<S: Dbl, T: Dbl>(
    hom: &LiftHomBicat<'_, S, T>,
    cat: &CatAsBicat,
    gens: &BTreeMap<usize, &DblTransf<'_, S, T>>,
    choice: &Choice<'_, T>,
    arrow: &usize,
) -> Result<ColaxData<S, T>> {
    match gens.get(arrow) {
        Some(tr) => hom.materialize(cat.0.dom(*arrow), cat.0.cod(*arrow), tr, choice),
        None => Ok(hom.identity_data(cat.0.dom(*arrow))),
    }
}

/// θ constraint between the direct lift of g∘f and the pasted composite.
fn constraint_cell<S: Dbl, T: Dbl>(
    hom: &LiftHomBicat<'_, S, T>,
    cat: &CatAsBicat,
    gens: &BTreeMap<usize, &DblTransf<'_, S, T>>,
    choice: &Choice<'_, T>,
    g: &usize,
    f: &usize,
    inverted: bool,
) -> ModData<S, T> {
    let gf = cat.0.compose(*g, *f).expect("arrows compose");
    let direct = materialize_arrow(hom, cat, gens, choice, &gf).expect("direct");
    let fa = materialize_arrow(hom, cat, gens, choice, f).expect("first");
    let ga = materialize_arrow(hom, cat, gens, choice, g).expect("second");
    let paired = hom.comp1(&ga, &fa).expect("pasted");
    let t = hom.t;
    let mut at = BTreeMap::new();
    for a in &hom.dom_obs {
        let p_direct = arrow_pair(hom, cat, gens, choice, &gf, a);
        let p_f = arrow_pair(hom, cat, gens, choice, f, a);
        let p_g = arrow_pair(hom, cat, gens, choice, g, a);
        let composite = compose_companions(t, &p_f, &p_g).expect("composable pair");
        // constraint of the lifting: H g ⊙ H f → H(g∘f), i.e. the pasted
        // composite to the direct lift
        let cell = if inverted {
            theta(t, &p_direct, &composite).expect("θ")
        } else {
            theta(t, &composite, &p_direct).expect("θ")
        };
        at.insert(a.clone(), cell);
    }
    if inverted {
        ModData {
            src: direct,
            tgt: paired,
            at,
        }
    } else {
        ModData {
            src: paired,
            tgt: direct,
            at,
        }
    }
}

/// The companion pair an arrow's component uses at an object.
fn arrow_pair<S: Dbl, T: Dbl>(
    hom: &LiftHomBicat<'_, S, T>,
    cat: &CatAsBicat,
    gens: &BTreeMap<usize, &DblTransf<'_, S, T>>,
    choice: &Choice<'_, T>,
    arrow: &usize,
    a: &S::Ob,
) -> CompanionPair<T> {
    match gens.get(arrow) {
        Some(tr) => choice.get(&(tr.at_ob)(a)).expect("choice covers"),
        None => {
            let i = cat.0.dom(*arrow);
            let f = hom.funs[i];
            identity_companion(hom.t, &(f.ob)(a))
        }
    }
}
