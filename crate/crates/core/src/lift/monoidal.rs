//! Assembly of monoidal (braided, symmetric) bicategory data on the loose
//! bicategory of a monoidal double category, with verification.
//!
//! Every higher coherence cell is a comparison isomorphism between two
//! composite companions of one strictly commuting tight constraint
//! composite: the pentagon produces π, the triangle and derived unit
//! equalities produce μ, λ, ρ, the hexagons produce R and S, and the
//! self-inverse braiding produces the syllepsis.

use super::{is_loosely_strong, lift_tight_transformation, Choice};
use crate::bicat::{
    buniverse_from_dbl, check_adjoint_equivalence, check_modification, check_pseudofunctor,
    check_transformation, expr::{eval_cell_expr, CellExpr, Env}, lift_double_functor,
    BUniverse, Bicat, LooseBicat, Modification, Transf, TransfMode,
};
use crate::companion::{
    adjunction_data, adjunction_triangles_hold, compose_companions, conjoint_of_inverse,
    identity_companion, map_companion, theta, CompanionPair,
};
use crate::dbl::{Dbl, DblFun, DblTransf, DblUniverse, PowDbl, UniverseCaps};
use crate::error::{Error, Result};
use crate::mondbl::{tensor_fun, Laxity, Level, MonDbl, MonDblFun};
use crate::report::{Family, Report};
use std::collections::BTreeMap;

/// A stored comparison cell with its inverse and both companion pairs, so
/// the component can be recomputed and re-certified independently.
pub struct ThetaCell<D: Dbl> {
    pub cell: D::Sq,
    pub inv: D::Sq,
    pub left: CompanionPair<D>,
    pub right: CompanionPair<D>,
}

/// Chosen adjoint-equivalence data for a lifted constraint 1-cell.
pub struct AdjEq<D: Dbl> {
    pub fwd: D::Lo,
    pub bwd: D::Lo,
    pub unit: D::Sq,
    pub counit: D::Sq,
}

/// The lifted monoidal bicategory data, indexed by object tuples of the
/// universe it was built over.
pub struct MonoidalBicatData<D: MonDbl> {
    pub level: Level,
    pub pent: BTreeMap<Vec<D::Ob>, ThetaCell<D>>,
    pub mu: BTreeMap<Vec<D::Ob>, ThetaCell<D>>,
    pub lam: BTreeMap<Vec<D::Ob>, ThetaCell<D>>,
    pub rho: BTreeMap<Vec<D::Ob>, ThetaCell<D>>,
    pub hex_r: BTreeMap<Vec<D::Ob>, ThetaCell<D>>,
    pub hex_s: BTreeMap<Vec<D::Ob>, ThetaCell<D>>,
    pub syl: BTreeMap<Vec<D::Ob>, ThetaCell<D>>,
    pub assoc_adj: BTreeMap<Vec<D::Ob>, AdjEq<D>>,
    pub lunit_adj: BTreeMap<Vec<D::Ob>, AdjEq<D>>,
    pub runit_adj: BTreeMap<Vec<D::Ob>, AdjEq<D>>,
    pub braid_adj: BTreeMap<Vec<D::Ob>, AdjEq<D>>,
}

/// Object tuples drawn deterministically from a universe.
pub fn object_tuples<D: Dbl>(u: &DblUniverse<D>, arity: usize, cap: usize) -> Vec<Vec<D::Ob>> {
    let mut out = vec![vec![]];
    for _ in 0..arity {
        let mut next = Vec::new();
        for prefix in &out {
            for ob in &u.objects {
                let mut t = prefix.clone();
                t.push(ob.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out.truncate(cap);
    out
}

/// A power universe: cells are tuples of universe cells.
pub fn pow_universe<'d, D: Dbl>(
    d: &'d D,
    u: &DblUniverse<D>,
    arity: usize,
    obs_cap: usize,
    lo_cap: usize,
) -> DblUniverse<PowDbl<'d, D>> {
    let p = PowDbl::new(d, arity);
    let objects = object_tuples(u, arity, obs_cap);
    // loose tuples: diagonal-ish selections to keep counts tame
    let mut looses: Vec<Vec<D::Lo>> = vec![vec![]];
    for _ in 0..arity {
        let mut next = Vec::new();
        for prefix in &looses {
            for m in u.looses.iter().take(8) {
                let mut t = prefix.clone();
                t.push(m.clone());
                next.push(t);
            }
        }
        looses = next;
    }
    looses.truncate(lo_cap);
    let squares: Vec<Vec<D::Sq>> = looses
        .iter()
        .map(|t| t.iter().map(|m| d.sq_id(m)).collect())
        .collect();
    let tights: Vec<Vec<D::Ti>> = objects
        .iter()
        .map(|t| t.iter().map(|a| d.ti_id(a)).collect())
        .collect();
    DblUniverse::derive(
        &p,
        objects,
        tights,
        looses,
        squares,
        UniverseCaps {
            pairs: 200,
            triples: 60,
            quads: 30,
            grids: 60,
        },
    )
}

// ---------------------------------------------------------------------
// Tensor-shaped functors D^n → D and the constraint transformations.
// ---------------------------------------------------------------------

/// ⟨A,B,C⟩ ↦ (A⊗B)⊗C with the pasted constraint cells.
pub fn assoc_src_fun<D: MonDbl>(d: &D) -> DblFun<'_, PowDbl<'_, D>, D> {
    DblFun {
        name: "(⊗)⊗".into(),
        ob: Box::new(move |a: &Vec<D::Ob>| d.tensor_ob(&d.tensor_ob(&a[0], &a[1]), &a[2])),
        ti: Box::new(move |f: &Vec<D::Ti>| d.tensor_ti(&d.tensor_ti(&f[0], &f[1]), &f[2])),
        lo: Box::new(move |m: &Vec<D::Lo>| d.tensor_lo(&d.tensor_lo(&m[0], &m[1]), &m[2])),
        sq: Box::new(move |s: &Vec<D::Sq>| d.tensor_sq(&d.tensor_sq(&s[0], &s[1]), &s[2])),
        comp: Box::new(move |m, n| {
            let s1 = d
                .x_cell(&d.tensor_lo(&m[0], &m[1]), &m[2], &d.tensor_lo(&n[0], &n[1]), &n[2])
                .expect("interchange");
            let s2 = d.tensor_sq(
                &d.x_cell(&m[0], &m[1], &n[0], &n[1]).expect("interchange"),
                &d.sq_id(&d.lo_comp(&m[2], &n[2]).expect("composable")),
            );
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        comp_inv: Box::new(move |m, n| {
            let s1 = d.tensor_sq(
                &d.x_cell_inv(&m[0], &m[1], &n[0], &n[1]).expect("interchange"),
                &d.sq_id(&d.lo_comp(&m[2], &n[2]).expect("composable")),
            );
            let s2 = d
                .x_cell_inv(&d.tensor_lo(&m[0], &m[1]), &m[2], &d.tensor_lo(&n[0], &n[1]), &n[2])
                .expect("interchange");
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        unit: Box::new(move |a| {
            let s1 = d.u_cell(&d.tensor_ob(&a[0], &a[1]), &a[2]);
            let s2 = d.tensor_sq(&d.u_cell(&a[0], &a[1]), &d.sq_id(&d.lo_unit(&a[2])));
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        unit_inv: Box::new(move |a| {
            let s1 = d.tensor_sq(&d.u_cell_inv(&a[0], &a[1]), &d.sq_id(&d.lo_unit(&a[2])));
            let s2 = d.u_cell_inv(&d.tensor_ob(&a[0], &a[1]), &a[2]);
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
    }
}

/// ⟨A,B,C⟩ ↦ A⊗(B⊗C).
pub fn assoc_tgt_fun<D: MonDbl>(d: &D) -> DblFun<'_, PowDbl<'_, D>, D> {
    DblFun {
        name: "⊗(⊗)".into(),
        ob: Box::new(move |a: &Vec<D::Ob>| d.tensor_ob(&a[0], &d.tensor_ob(&a[1], &a[2]))),
        ti: Box::new(move |f: &Vec<D::Ti>| d.tensor_ti(&f[0], &d.tensor_ti(&f[1], &f[2]))),
        lo: Box::new(move |m: &Vec<D::Lo>| d.tensor_lo(&m[0], &d.tensor_lo(&m[1], &m[2]))),
        sq: Box::new(move |s: &Vec<D::Sq>| d.tensor_sq(&s[0], &d.tensor_sq(&s[1], &s[2]))),
        comp: Box::new(move |m, n| {
            let s1 = d
                .x_cell(&m[0], &d.tensor_lo(&m[1], &m[2]), &n[0], &d.tensor_lo(&n[1], &n[2]))
                .expect("interchange");
            let s2 = d.tensor_sq(
                &d.sq_id(&d.lo_comp(&m[0], &n[0]).expect("composable")),
                &d.x_cell(&m[1], &m[2], &n[1], &n[2]).expect("interchange"),
            );
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        comp_inv: Box::new(move |m, n| {
            let s1 = d.tensor_sq(
                &d.sq_id(&d.lo_comp(&m[0], &n[0]).expect("composable")),
                &d.x_cell_inv(&m[1], &m[2], &n[1], &n[2]).expect("interchange"),
            );
            let s2 = d
                .x_cell_inv(&m[0], &d.tensor_lo(&m[1], &m[2]), &n[0], &d.tensor_lo(&n[1], &n[2]))
                .expect("interchange");
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        unit: Box::new(move |a| {
            let s1 = d.u_cell(&a[0], &d.tensor_ob(&a[1], &a[2]));
            let s2 = d.tensor_sq(&d.sq_id(&d.lo_unit(&a[0])), &d.u_cell(&a[1], &a[2]));
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        unit_inv: Box::new(move |a| {
            let s1 = d.tensor_sq(&d.sq_id(&d.lo_unit(&a[0])), &d.u_cell_inv(&a[1], &a[2]));
            let s2 = d.u_cell_inv(&a[0], &d.tensor_ob(&a[1], &a[2]));
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
    }
}

/// ⟨A⟩ ↦ I⊗A.
pub fn lunit_src_fun<D: MonDbl>(d: &D) -> DblFun<'_, PowDbl<'_, D>, D> {
    DblFun {
        name: "I⊗".into(),
        ob: Box::new(move |a: &Vec<D::Ob>| d.tensor_ob(&d.unit_ob(), &a[0])),
        ti: Box::new(move |f: &Vec<D::Ti>| d.tensor_ti(&d.ti_id(&d.unit_ob()), &f[0])),
        lo: Box::new(move |m: &Vec<D::Lo>| d.tensor_lo(&d.lo_unit(&d.unit_ob()), &m[0])),
        sq: Box::new(move |s: &Vec<D::Sq>| {
            d.tensor_sq(&d.sq_id(&d.lo_unit(&d.unit_ob())), &s[0])
        }),
        comp: Box::new(move |m, n| {
            let ui = d.lo_unit(&d.unit_ob());
            let s1 = d.x_cell(&ui, &m[0], &ui, &n[0]).expect("interchange");
            let s2 = d.tensor_sq(
                &d.lunit(&ui),
                &d.sq_id(&d.lo_comp(&m[0], &n[0]).expect("composable")),
            );
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        comp_inv: Box::new(move |m, n| {
            let ui = d.lo_unit(&d.unit_ob());
            let s1 = d.tensor_sq(
                &d.lunit_inv(&ui),
                &d.sq_id(&d.lo_comp(&m[0], &n[0]).expect("composable")),
            );
            let s2 = d.x_cell_inv(&ui, &m[0], &ui, &n[0]).expect("interchange");
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        unit: Box::new(move |a| d.u_cell(&d.unit_ob(), &a[0])),
        unit_inv: Box::new(move |a| d.u_cell_inv(&d.unit_ob(), &a[0])),
    }
}

/// ⟨A⟩ ↦ A⊗I.
pub fn runit_src_fun<D: MonDbl>(d: &D) -> DblFun<'_, PowDbl<'_, D>, D> {
    DblFun {
        name: "⊗I".into(),
        ob: Box::new(move |a: &Vec<D::Ob>| d.tensor_ob(&a[0], &d.unit_ob())),
        ti: Box::new(move |f: &Vec<D::Ti>| d.tensor_ti(&f[0], &d.ti_id(&d.unit_ob()))),
        lo: Box::new(move |m: &Vec<D::Lo>| d.tensor_lo(&m[0], &d.lo_unit(&d.unit_ob()))),
        sq: Box::new(move |s: &Vec<D::Sq>| {
            d.tensor_sq(&s[0], &d.sq_id(&d.lo_unit(&d.unit_ob())))
        }),
        comp: Box::new(move |m, n| {
            let ui = d.lo_unit(&d.unit_ob());
            let s1 = d.x_cell(&m[0], &ui, &n[0], &ui).expect("interchange");
            let s2 = d.tensor_sq(
                &d.sq_id(&d.lo_comp(&m[0], &n[0]).expect("composable")),
                &d.lunit(&ui),
            );
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        comp_inv: Box::new(move |m, n| {
            let ui = d.lo_unit(&d.unit_ob());
            let s1 = d.tensor_sq(
                &d.sq_id(&d.lo_comp(&m[0], &n[0]).expect("composable")),
                &d.lunit_inv(&ui),
            );
            let s2 = d.x_cell_inv(&m[0], &ui, &n[0], &ui).expect("interchange");
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        unit: Box::new(move |a| d.u_cell(&a[0], &d.unit_ob())),
        unit_inv: Box::new(move |a| d.u_cell_inv(&a[0], &d.unit_ob())),
    }
}

/// ⟨A⟩ ↦ A.
pub fn proj_fun<D: Dbl>(d: &D) -> DblFun<'_, PowDbl<'_, D>, D> {
    DblFun {
        name: "proj".into(),
        ob: Box::new(|a: &Vec<D::Ob>| a[0].clone()),
        ti: Box::new(|f: &Vec<D::Ti>| f[0].clone()),
        lo: Box::new(|m: &Vec<D::Lo>| m[0].clone()),
        sq: Box::new(|s: &Vec<D::Sq>| s[0].clone()),
        comp: Box::new(move |m, n| {
            d.sq_id(&d.lo_comp(&m[0], &n[0]).expect("composable"))
        }),
        comp_inv: Box::new(move |m, n| {
            d.sq_id(&d.lo_comp(&m[0], &n[0]).expect("composable"))
        }),
        unit: Box::new(move |a| d.sq_id(&d.lo_unit(&a[0]))),
        unit_inv: Box::new(move |a| d.sq_id(&d.lo_unit(&a[0]))),
    }
}

/// ⟨A,B⟩ ↦ B⊗A.
pub fn braid_tgt_fun<D: MonDbl>(d: &D) -> DblFun<'_, PowDbl<'_, D>, D> {
    DblFun {
        name: "⊗τ".into(),
        ob: Box::new(move |a: &Vec<D::Ob>| d.tensor_ob(&a[1], &a[0])),
        ti: Box::new(move |f: &Vec<D::Ti>| d.tensor_ti(&f[1], &f[0])),
        lo: Box::new(move |m: &Vec<D::Lo>| d.tensor_lo(&m[1], &m[0])),
        sq: Box::new(move |s: &Vec<D::Sq>| d.tensor_sq(&s[1], &s[0])),
        comp: Box::new(move |m, n| d.x_cell(&m[1], &m[0], &n[1], &n[0]).expect("interchange")),
        comp_inv: Box::new(move |m, n| {
            d.x_cell_inv(&m[1], &m[0], &n[1], &n[0]).expect("interchange")
        }),
        unit: Box::new(move |a| d.u_cell(&a[1], &a[0])),
        unit_inv: Box::new(move |a| d.u_cell_inv(&a[1], &a[0])),
    }
}

pub fn assoc_transf<D: MonDbl>(d: &D) -> DblTransf<'_, PowDbl<'_, D>, D> {
    DblTransf {
        name: "assoc".into(),
        at_ob: Box::new(move |a: &Vec<D::Ob>| d.massoc(&a[0], &a[1], &a[2])),
        at_lo: Box::new(move |m: &Vec<D::Lo>| d.massoc_lo(&m[0], &m[1], &m[2])),
    }
}

pub fn assoc_inv_transf<D: MonDbl>(d: &D) -> DblTransf<'_, PowDbl<'_, D>, D> {
    DblTransf {
        name: "assoc⁻¹".into(),
        at_ob: Box::new(move |a: &Vec<D::Ob>| d.massoc_inv(&a[0], &a[1], &a[2])),
        at_lo: Box::new(move |m: &Vec<D::Lo>| d.massoc_lo_inv(&m[0], &m[1], &m[2])),
    }
}

pub fn lunit_transf<D: MonDbl>(d: &D) -> DblTransf<'_, PowDbl<'_, D>, D> {
    DblTransf {
        name: "lunit".into(),
        at_ob: Box::new(move |a: &Vec<D::Ob>| d.mlunit(&a[0])),
        at_lo: Box::new(move |m: &Vec<D::Lo>| d.mlunit_lo(&m[0])),
    }
}

pub fn runit_transf<D: MonDbl>(d: &D) -> DblTransf<'_, PowDbl<'_, D>, D> {
    DblTransf {
        name: "runit".into(),
        at_ob: Box::new(move |a: &Vec<D::Ob>| d.mrunit(&a[0])),
        at_lo: Box::new(move |m: &Vec<D::Lo>| d.mrunit_lo(&m[0])),
    }
}

pub fn braid_transf<D: MonDbl>(d: &D) -> DblTransf<'_, PowDbl<'_, D>, D> {
    DblTransf {
        name: "braid".into(),
        at_ob: Box::new(move |a: &Vec<D::Ob>| d.braid(&a[0], &a[1]).expect("braided")),
        at_lo: Box::new(move |m: &Vec<D::Lo>| d.braid_lo(&m[0], &m[1]).expect("braided")),
    }
}

// ---------------------------------------------------------------------
// Companion routes for the coherence families.
// ---------------------------------------------------------------------

/// Companion of f⊗g from companions of f and g, through the tensor.
pub fn tensor_pair<D: MonDbl>(
    d: &D,
    p: &CompanionPair<D>,
    q: &CompanionPair<D>,
) -> CompanionPair<D> {
    let pow = PowDbl::new(d, 2);
    let fun = tensor_fun(d);
    let pair: CompanionPair<PowDbl<'_, D>> = CompanionPair {
        f: vec![p.f.clone(), q.f.clone()],
        hat: vec![p.hat.clone(), q.hat.clone()],
        eta: vec![p.eta.clone(), q.eta.clone()],
        eps: vec![p.eps.clone(), q.eps.clone()],
    };
    map_companion(d, &fun, &pow, &pair)
}

/// The two composite companions of the pentagon sides at (A,B,C,D), in
/// path order: the two-step route and the three-step route.
pub fn pentagon_routes<D: MonDbl>(
    d: &D,
    ch: &Choice<'_, D>,
    a: &D::Ob,
    b: &D::Ob,
    c: &D::Ob,
    e: &D::Ob,
) -> Result<(CompanionPair<D>, CompanionPair<D>)> {
    let ab = d.tensor_ob(a, b);
    let ce = d.tensor_ob(c, e);
    let two = compose_companions(
        d,
        &ch.get(&d.massoc(&ab, c, e))?,
        &ch.get(&d.massoc(a, b, &ce))?,
    )?;
    let p1 = tensor_pair(d, &ch.get(&d.massoc(a, b, c))?, &identity_companion(d, e));
    let p2 = ch.get(&d.massoc(a, &d.tensor_ob(b, c), e))?;
    let p3 = tensor_pair(d, &identity_companion(d, a), &ch.get(&d.massoc(b, c, e))?);
    let three = compose_companions(d, &compose_companions(d, &p1, &p2)?, &p3)?;
    Ok((two, three))
}

fn build_theta<D: MonDbl>(
    d: &D,
    left: CompanionPair<D>,
    right: CompanionPair<D>,
) -> Result<ThetaCell<D>> {
    let cell = theta(d, &left, &right)?;
    let inv = theta(d, &right, &left)?;
    Ok(ThetaCell {
        cell,
        inv,
        left,
        right,
    })
}

/// μ routes at (A,B): through the associator and left unitor, and the
/// direct right-unitor tensor.
pub fn mu_routes<D: MonDbl>(
    d: &D,
    ch: &Choice<'_, D>,
    a: &D::Ob,
    b: &D::Ob,
) -> Result<(CompanionPair<D>, CompanionPair<D>)> {
    let i = d.unit_ob();
    let two = compose_companions(
        d,
        &ch.get(&d.massoc(a, &i, b))?,
        &tensor_pair(d, &identity_companion(d, a), &ch.get(&d.mlunit(b))?),
    )?;
    let one = tensor_pair(d, &ch.get(&d.mrunit(a))?, &identity_companion(d, b));
    Ok((two, one))
}

/// λ routes at (A,B): λ_{A⊗B} ∘ α_{I,A,B} against λ_A ⊗ 1_B.
pub fn lam_routes<D: MonDbl>(
    d: &D,
    ch: &Choice<'_, D>,
    a: &D::Ob,
    b: &D::Ob,
) -> Result<(CompanionPair<D>, CompanionPair<D>)> {
    let i = d.unit_ob();
    let ab = d.tensor_ob(a, b);
    let two = compose_companions(
        d,
        &ch.get(&d.massoc(&i, a, b))?,
        &ch.get(&d.mlunit(&ab))?,
    )?;
    let one = tensor_pair(d, &ch.get(&d.mlunit(a))?, &identity_companion(d, b));
    Ok((two, one))
}

/// ρ routes at (A,B): (1_A ⊗ ρ_B) ∘ α_{A,B,I} against ρ_{A⊗B}.
pub fn rho_routes<D: MonDbl>(
    d: &D,
    ch: &Choice<'_, D>,
    a: &D::Ob,
    b: &D::Ob,
) -> Result<(CompanionPair<D>, CompanionPair<D>)> {
    let i = d.unit_ob();
    let ab = d.tensor_ob(a, b);
    let two = compose_companions(
        d,
        &ch.get(&d.massoc(a, b, &i))?,
        &tensor_pair(d, &identity_companion(d, a), &ch.get(&d.mrunit(b))?),
    )?;
    let one = ch.get(&d.mrunit(&ab))?;
    Ok((two, one))
}

/// First hexagon routes at (A,B,C).
pub fn hex_r_routes<D: MonDbl>(
    d: &D,
    ch: &Choice<'_, D>,
    a: &D::Ob,
    b: &D::Ob,
    c: &D::Ob,
) -> Result<(CompanionPair<D>, CompanionPair<D>)> {
    let bc = d.tensor_ob(b, c);
    let one = compose_companions(
        d,
        &compose_companions(d, &ch.get(&d.massoc(a, b, c))?, &ch.get(&d.braid(a, &bc)?)?)?,
        &ch.get(&d.massoc(b, c, a))?,
    )?;
    let p1 = tensor_pair(d, &ch.get(&d.braid(a, b)?)?, &identity_companion(d, c));
    let p2 = ch.get(&d.massoc(b, a, c))?;
    let p3 = tensor_pair(d, &identity_companion(d, b), &ch.get(&d.braid(a, c)?)?);
    let two = compose_companions(d, &compose_companions(d, &p1, &p2)?, &p3)?;
    Ok((one, two))
}

/// Second hexagon routes at (A,B,C), through the inverse associators.
pub fn hex_s_routes<D: MonDbl>(
    d: &D,
    ch: &Choice<'_, D>,
    a: &D::Ob,
    b: &D::Ob,
    c: &D::Ob,
) -> Result<(CompanionPair<D>, CompanionPair<D>)> {
    let ab = d.tensor_ob(a, b);
    let one = compose_companions(
        d,
        &compose_companions(
            d,
            &ch.get(&d.massoc_inv(a, b, c))?,
            &ch.get(&d.braid(&ab, c)?)?,
        )?,
        &ch.get(&d.massoc_inv(c, a, b))?,
    )?;
    let p1 = tensor_pair(d, &identity_companion(d, a), &ch.get(&d.braid(b, c)?)?);
    let p2 = ch.get(&d.massoc_inv(a, c, b))?;
    let p3 = tensor_pair(d, &ch.get(&d.braid(a, c)?)?, &identity_companion(d, b));
    let two = compose_companions(d, &compose_companions(d, &p1, &p2)?, &p3)?;
    Ok((one, two))
}

/// Syllepsis routes at (A,B): identity against the double braiding.
pub fn syl_routes<D: MonDbl>(
    d: &D,
    ch: &Choice<'_, D>,
    a: &D::Ob,
    b: &D::Ob,
) -> Result<(CompanionPair<D>, CompanionPair<D>)> {
    let ab = d.tensor_ob(a, b);
    let one = identity_companion(d, &ab);
    let two = compose_companions(d, &ch.get(&d.braid(a, b)?)?, &ch.get(&d.braid(b, a)?)?)?;
    Ok((one, two))
}

fn adj_eq_for<D: MonDbl>(
    d: &D,
    ch: &Choice<'_, D>,
    f: &D::Ti,
    f_inv: &D::Ti,
) -> Result<AdjEq<D>> {
    let p = ch.get(f)?;
    let q = ch.get(f_inv)?;
    let c = conjoint_of_inverse(d, &q)?;
    if c.f != *f {
        return Err(Error::MismatchedTight(
            "stored inverse does not invert the constraint".into(),
        ));
    }
    let (unit, counit) = adjunction_data(d, &p, &c)?;
    if !adjunction_triangles_hold(d, &p.hat, &c.chk, &unit, &counit)? {
        return Err(Error::NotInvertible(
            "adjunction triangles fail for constraint lift".into(),
        ));
    }
    Ok(AdjEq {
        fwd: p.hat,
        bwd: q.hat,
        unit,
        counit,
    })
}

/// How many object tuples each family is built over.
#[derive(Debug, Clone, Copy)]
pub struct TupleCaps {
    pub pairs: usize,
    pub triples: usize,
    pub quads: usize,
}

impl Default for TupleCaps {
    fn default() -> Self {
        TupleCaps {
            pairs: 16,
            triples: 24,
            quads: 16,
        }
    }
}

/// Construct the lifted monoidal bicategory data over the universe and
/// verify all its structural invariants; the report carries one family per
/// named check. `seeds` are object tuples appended to the default
/// selection (so specific instantiations are always built).
pub fn lift_monoidal_seeded<'d, D: MonDbl>(
    d: &'d D,
    ch: &'d Choice<'d, D>,
    level: Level,
    u: &DblUniverse<D>,
    caps: TupleCaps,
    seeds: &[Vec<D::Ob>],
) -> Result<(MonoidalBicatData<D>, Report)> {
    if level > d.level() {
        return Err(Error::LevelUnavailable(format!(
            "instance is {:?}, requested {:?}",
            d.level(),
            level
        )));
    }
    let mut data = MonoidalBicatData {
        level,
        pent: BTreeMap::new(),
        mu: BTreeMap::new(),
        lam: BTreeMap::new(),
        rho: BTreeMap::new(),
        hex_r: BTreeMap::new(),
        hex_s: BTreeMap::new(),
        syl: BTreeMap::new(),
        assoc_adj: BTreeMap::new(),
        lunit_adj: BTreeMap::new(),
        runit_adj: BTreeMap::new(),
        braid_adj: BTreeMap::new(),
    };
    let mut report = Report::new();

    let with_seeds = |mut base: Vec<Vec<D::Ob>>, arity: usize| -> Vec<Vec<D::Ob>> {
        for sd in seeds {
            if sd.len() == arity && !base.contains(sd) {
                base.push(sd.clone());
            }
        }
        base
    };
    let pairs = with_seeds(object_tuples(u, 2, caps.pairs), 2);
    let triples = with_seeds(object_tuples(u, 3, caps.triples), 3);
    let quads = with_seeds(object_tuples(u, 4, caps.quads), 4);

    // θ-built families.
    let mut fam = Family::new("lift.families");
    for t in &quads {
        let key = format!("pent{t:?}");
        let (l, r) = pentagon_routes(d, ch, &t[0], &t[1], &t[2], &t[3])?;
        let cell = build_theta(d, l, r)?;
        let ok = d.vcomp(&cell.inv, &cell.cell)? == d.sq_id(&cell.left.hat)
            && d.vcomp(&cell.cell, &cell.inv)? == d.sq_id(&cell.right.hat);
        fam.record(&key, ok, || "comparison cell is not invertible".into());
        data.pent.insert(t.clone(), cell);
    }
    for t in &pairs {
        let (l, r) = mu_routes(d, ch, &t[0], &t[1])?;
        let cell = build_theta(d, l, r)?;
        fam.record(&format!("mu{t:?}"), true, String::new);
        data.mu.insert(t.clone(), cell);
        let (l, r) = lam_routes(d, ch, &t[0], &t[1])?;
        data.lam.insert(t.clone(), build_theta(d, l, r)?);
        let (l, r) = rho_routes(d, ch, &t[0], &t[1])?;
        data.rho.insert(t.clone(), build_theta(d, l, r)?);
    }
    if level >= Level::Braided {
        for t in &triples {
            let (l, r) = hex_r_routes(d, ch, &t[0], &t[1], &t[2])?;
            data.hex_r.insert(t.clone(), build_theta(d, l, r)?);
            let (l, r) = hex_s_routes(d, ch, &t[0], &t[1], &t[2])?;
            data.hex_s.insert(t.clone(), build_theta(d, l, r)?);
        }
    }
    if level >= Level::Symmetric {
        for t in &pairs {
            let (l, r) = syl_routes(d, ch, &t[0], &t[1])?;
            data.syl.insert(t.clone(), build_theta(d, l, r)?);
        }
    }
    report.checks.push(fam.finish());

    // Adjoint equivalences for the lifted constraints.
    let mut fam = Family::new("lift.adjoint-equivalences");
    let hb = LooseBicat(d);
    for t in &triples {
        let key = format!("assoc{t:?}");
        let adj = adj_eq_for(
            d,
            ch,
            &d.massoc(&t[0], &t[1], &t[2]),
            &d.massoc_inv(&t[0], &t[1], &t[2]),
        )?;
        let r = check_adjoint_equivalence(&hb, &adj.fwd, &adj.bwd, &adj.unit, &adj.counit, None);
        fam.record(&key, r.passed(), || r.render_text());
        data.assoc_adj.insert(t.clone(), adj);
    }
    for a in u.objects.iter() {
        let key = format!("unitors[{}]", d.show_ob(a));
        let l_adj = adj_eq_for(d, ch, &d.mlunit(a), &d.mlunit_inv(a))?;
        let r_adj = adj_eq_for(d, ch, &d.mrunit(a), &d.mrunit_inv(a))?;
        let r1 =
            check_adjoint_equivalence(&hb, &l_adj.fwd, &l_adj.bwd, &l_adj.unit, &l_adj.counit, None);
        let r2 =
            check_adjoint_equivalence(&hb, &r_adj.fwd, &r_adj.bwd, &r_adj.unit, &r_adj.counit, None);
        fam.record(&key, r1.passed() && r2.passed(), || {
            format!("{}\n{}", r1.render_text(), r2.render_text())
        });
        data.lunit_adj.insert(vec![a.clone()], l_adj);
        data.runit_adj.insert(vec![a.clone()], r_adj);
    }
    if level >= Level::Braided {
        for t in &pairs {
            let key = format!("braid{t:?}");
            let adj = adj_eq_for(
                d,
                ch,
                &d.braid(&t[0], &t[1])?,
                &d.braid_inv(&t[0], &t[1])?,
            )?;
            let r =
                check_adjoint_equivalence(&hb, &adj.fwd, &adj.bwd, &adj.unit, &adj.counit, None);
            fam.record(&key, r.passed(), || r.render_text());
            data.braid_adj.insert(t.clone(), adj);
        }
    }
    report.checks.push(fam.finish());

    Ok((data, report))
}

/// As `lift_monoidal_seeded` with no extra tuples.
pub fn lift_monoidal<'d, D: MonDbl>(
    d: &'d D,
    ch: &'d Choice<'d, D>,
    level: Level,
    u: &DblUniverse<D>,
    caps: TupleCaps,
) -> Result<(MonoidalBicatData<D>, Report)> {
    lift_monoidal_seeded(d, ch, level, u, caps, &[])
}

/// Run the full structural suite on lifted data: the tensor pseudofunctor,
/// the constraint transformations in pseudo mode, and every θ-family as a
/// modification between the lifted path transformations.
pub fn check_lifted<'d, D: MonDbl>(
    d: &'d D,
    ch: &'d Choice<'d, D>,
    data: &MonoidalBicatData<D>,
    u: &DblUniverse<D>,
) -> Result<Report> {
    let mut report = Report::new();

    // tensor is a pseudofunctor on the loose bicategory
    let pow2 = PowDbl::new(d, 2);
    let u2 = pow_universe(d, u, 2, 12, 24);
    let hb2 = LooseBicat(&pow2);
    let hb = LooseBicat(d);
    let bu2 = buniverse_from_dbl(&pow2, &u2, UniverseCaps::default());
    let tfun = tensor_fun(d);
    let tens_ps = lift_double_functor(&tfun);
    report.merge(check_pseudofunctor(&hb2, &hb, &tens_ps, &bu2, None));

    // constraint transformations, pseudo mode, with adjoint equivalences
    let pow3 = PowDbl::new(d, 3);
    let u3 = pow_universe(d, u, 3, 10, 16);
    let bu3 = buniverse_from_dbl(&pow3, &u3, UniverseCaps::default());
    let hb3 = LooseBicat(&pow3);

    let src3 = assoc_src_fun(d);
    let tgt3 = assoc_tgt_fun(d);
    let a_tr = assoc_transf(d);
    let lifted_assoc = lift_tight_transformation(&pow3, d, &a_tr, ch, &u3, TransfMode::Pseudo)?;
    report.merge(check_transformation(
        &hb3,
        &hb,
        &lift_double_functor(&src3),
        &lift_double_functor(&tgt3),
        &lifted_assoc,
        &bu3,
        None,
    ));

    let pow1 = PowDbl::new(d, 1);
    let u1 = pow_universe(d, u, 1, 8, 12);
    let bu1 = buniverse_from_dbl(&pow1, &u1, UniverseCaps::default());
    let hb1 = LooseBicat(&pow1);
    let lsrc = lunit_src_fun(d);
    let rsrc = runit_src_fun(d);
    let proj = proj_fun(d);
    let l_tr = lunit_transf(d);
    let r_tr = runit_transf(d);
    let lifted_l = lift_tight_transformation(&pow1, d, &l_tr, ch, &u1, TransfMode::Pseudo)?;
    let lifted_r = lift_tight_transformation(&pow1, d, &r_tr, ch, &u1, TransfMode::Pseudo)?;
    report.merge(check_transformation(
        &hb1,
        &hb,
        &lift_double_functor(&lsrc),
        &lift_double_functor(&proj),
        &lifted_l,
        &bu1,
        None,
    ));
    report.merge(check_transformation(
        &hb1,
        &hb,
        &lift_double_functor(&rsrc),
        &lift_double_functor(&proj),
        &lifted_r,
        &bu1,
        None,
    ));

    if data.level >= Level::Braided {
        let pow2b = PowDbl::new(d, 2);
        let b_tr = braid_transf(d);
        let lifted_b = lift_tight_transformation(&pow2b, d, &b_tr, ch, &u2, TransfMode::Pseudo)?;
        let btgt = braid_tgt_fun(d);
        report.merge(check_transformation(
            &hb2,
            &hb,
            &tens_ps,
            &lift_double_functor(&btgt),
            &lifted_b,
            &bu2,
            None,
        ));
    }

    // θ-families as modifications between lifted path transformations
    report.merge(check_theta_families(d, ch, data, u)?);

    Ok(report)
}

/// Each θ-family is a modification between the two lifted path
/// transformations of its defining equation.
fn check_theta_families<'d, D: MonDbl>(
    d: &'d D,
    _ch: &'d Choice<'d, D>,
    data: &MonoidalBicatData<D>,
    u: &DblUniverse<D>,
) -> Result<Report> {
    let mut report = Report::new();
    let hb = LooseBicat(d);

    // pentagon family over arity 4
    {
        let pow4 = PowDbl::new(d, 4);
        let u4 = pow_universe(d, u, 4, 8, 10);
        let bu4 = restrict_to_keys(&pow4, &u4, data.pent.keys());
        let hb4 = LooseBicat(&pow4);
        let src = pent_outer_src(d);
        let tgt = pent_outer_tgt(d);
        let two_step = DblTransf {
            name: "pent-two".into(),
            at_ob: Box::new(move |a: &Vec<D::Ob>| {
                let ab = d.tensor_ob(&a[0], &a[1]);
                let ce = d.tensor_ob(&a[2], &a[3]);
                d.ti_comp(&d.massoc(&a[0], &a[1], &ce), &d.massoc(&ab, &a[2], &a[3]))
                    .expect("pentagon side")
            }),
            at_lo: Box::new(move |m: &Vec<D::Lo>| {
                let mn = d.tensor_lo(&m[0], &m[1]);
                let pq = d.tensor_lo(&m[2], &m[3]);
                d.vcomp(
                    &d.massoc_lo(&m[0], &m[1], &pq),
                    &d.massoc_lo(&mn, &m[2], &m[3]),
                )
                .expect("pentagon side")
            }),
        };
        let three_step = DblTransf {
            name: "pent-three".into(),
            at_ob: Box::new(move |a: &Vec<D::Ob>| {
                let s1 = d.tensor_ti(&d.massoc(&a[0], &a[1], &a[2]), &d.ti_id(&a[3]));
                let s2 = d.massoc(&a[0], &d.tensor_ob(&a[1], &a[2]), &a[3]);
                let s3 = d.tensor_ti(&d.ti_id(&a[0]), &d.massoc(&a[1], &a[2], &a[3]));
                d.ti_comp(&s3, &d.ti_comp(&s2, &s1).unwrap()).unwrap()
            }),
            at_lo: Box::new(move |m: &Vec<D::Lo>| {
                let s1 = d.tensor_sq(&d.massoc_lo(&m[0], &m[1], &m[2]), &d.sq_id(&m[3]));
                let s2 = d.massoc_lo(&m[0], &d.tensor_lo(&m[1], &m[2]), &m[3]);
                let s3 = d.tensor_sq(&d.sq_id(&m[0]), &d.massoc_lo(&m[1], &m[2], &m[3]));
                d.vcomp(&s3, &d.vcomp(&s2, &s1).unwrap()).unwrap()
            }),
        };
        let tl = path_transf(d, &two_step, data, Which::PentLeft)?;
        let tr = path_transf(d, &three_step, data, Which::PentRight)?;
        let pent_mod = Modification {
            name: "pent".into(),
            at_ob: Box::new(move |a: &Vec<D::Ob>| {
                data.pent
                    .get(a)
                    .map(|c| c.cell.clone())
                    .expect("pentagon tuple")
            }),
        };
        report.merge(check_modification(
            &hb4,
            &hb,
            &lift_double_functor(&src),
            &lift_double_functor(&tgt),
            &tl,
            &tr,
            None,
            None,
            &pent_mod,
            &bu4,
            None,
        ));
    }

    // unitor families over arity 2
    {
        let pow2 = PowDbl::new(d, 2);
        let u2 = pow_universe(d, u, 2, 10, 14);
        let bu2 = restrict_to_keys(&pow2, &u2, data.mu.keys());
        let hb2 = LooseBicat(&pow2);
        let i = d.unit_ob();
        let i2 = i.clone();
        let src = mu_src_fun(d);
        let tgt = tensor_fun(d);
        let two_step = DblTransf {
            name: "mu-two".into(),
            at_ob: Box::new(move |a: &Vec<D::Ob>| {
                d.ti_comp(
                    &d.tensor_ti(&d.ti_id(&a[0]), &d.mlunit(&a[1])),
                    &d.massoc(&a[0], &i, &a[1]),
                )
                .unwrap()
            }),
            at_lo: Box::new(move |m: &Vec<D::Lo>| {
                let ui = d.lo_unit(&i2);
                d.vcomp(
                    &d.tensor_sq(&d.sq_id(&m[0]), &d.mlunit_lo(&m[1])),
                    &d.massoc_lo(&m[0], &ui, &m[1]),
                )
                .unwrap()
            }),
        };
        let one_step = DblTransf {
            name: "mu-one".into(),
            at_ob: Box::new(move |a: &Vec<D::Ob>| {
                d.tensor_ti(&d.mrunit(&a[0]), &d.ti_id(&a[1]))
            }),
            at_lo: Box::new(move |m: &Vec<D::Lo>| {
                d.tensor_sq(&d.mrunit_lo(&m[0]), &d.sq_id(&m[1]))
            }),
        };
        let tl = path_transf(d, &two_step, data, Which::MuLeft)?;
        let tr = path_transf(d, &one_step, data, Which::MuRight)?;
        let mu_mod = Modification {
            name: "mu".into(),
            at_ob: Box::new(move |a: &Vec<D::Ob>| {
                data.mu.get(a).map(|c| c.cell.clone()).expect("mu tuple")
            }),
        };
        report.merge(check_modification(
            &hb2,
            &hb,
            &lift_double_functor(&src),
            &lift_double_functor(&tgt),
            &tl,
            &tr,
            None,
            None,
            &mu_mod,
            &bu2,
            None,
        ));
    }

    if data.level >= Level::Symmetric {
        // syllepsis family over arity 2: identity against double braiding
        let pow2 = PowDbl::new(d, 2);
        let u2 = pow_universe(d, u, 2, 10, 14);
        let bu2 = restrict_to_keys(&pow2, &u2, data.syl.keys());
        let hb2 = LooseBicat(&pow2);
        let tgt = tensor_fun(d);
        let id_path = DblTransf {
            name: "syl-id".into(),
            at_ob: Box::new(move |a: &Vec<D::Ob>| d.ti_id(&d.tensor_ob(&a[0], &a[1]))),
            at_lo: Box::new(move |m: &Vec<D::Lo>| d.sq_id(&d.tensor_lo(&m[0], &m[1]))),
        };
        let double_braid = DblTransf {
            name: "syl-ss".into(),
            at_ob: Box::new(move |a: &Vec<D::Ob>| {
                d.ti_comp(
                    &d.braid(&a[1], &a[0]).unwrap(),
                    &d.braid(&a[0], &a[1]).unwrap(),
                )
                .unwrap()
            }),
            at_lo: Box::new(move |m: &Vec<D::Lo>| {
                d.vcomp(
                    &d.braid_lo(&m[1], &m[0]).unwrap(),
                    &d.braid_lo(&m[0], &m[1]).unwrap(),
                )
                .unwrap()
            }),
        };
        let tl = path_transf(d, &id_path, data, Which::SylLeft)?;
        let tr = path_transf(d, &double_braid, data, Which::SylRight)?;
        let syl_mod = Modification {
            name: "syl".into(),
            at_ob: Box::new(move |a: &Vec<D::Ob>| {
                data.syl.get(a).map(|c| c.cell.clone()).expect("syl tuple")
            }),
        };
        report.merge(check_modification(
            &hb2,
            &hb,
            &lift_double_functor(&tgt),
            &lift_double_functor(&tgt),
            &tl,
            &tr,
            None,
            None,
            &syl_mod,
            &bu2,
            None,
        ));
    }

    Ok(report)
}

/// ⟨A,B⟩ ↦ (A⊗I)⊗B.
fn mu_src_fun<D: MonDbl>(d: &D) -> DblFun<'_, PowDbl<'_, D>, D> {
    DblFun {
        name: "(⊗I)⊗".into(),
        ob: Box::new(move |a: &Vec<D::Ob>| {
            d.tensor_ob(&d.tensor_ob(&a[0], &d.unit_ob()), &a[1])
        }),
        ti: Box::new(move |f: &Vec<D::Ti>| {
            d.tensor_ti(&d.tensor_ti(&f[0], &d.ti_id(&d.unit_ob())), &f[1])
        }),
        lo: Box::new(move |m: &Vec<D::Lo>| {
            d.tensor_lo(&d.tensor_lo(&m[0], &d.lo_unit(&d.unit_ob())), &m[1])
        }),
        sq: Box::new(move |s: &Vec<D::Sq>| {
            d.tensor_sq(
                &d.tensor_sq(&s[0], &d.sq_id(&d.lo_unit(&d.unit_ob()))),
                &s[1],
            )
        }),
        comp: Box::new(move |m, n| {
            let ui = d.lo_unit(&d.unit_ob());
            let m0i = d.tensor_lo(&m[0], &ui);
            let n0i = d.tensor_lo(&n[0], &ui);
            let s1 = d.x_cell(&m0i, &m[1], &n0i, &n[1]).expect("interchange");
            let inner = d.vcomp(
                &d.tensor_sq(
                    &d.sq_id(&d.lo_comp(&m[0], &n[0]).expect("composable")),
                    &d.lunit(&ui),
                ),
                &d.x_cell(&m[0], &ui, &n[0], &ui).expect("interchange"),
            )
            .expect("pasting");
            let s2 = d.tensor_sq(
                &inner,
                &d.sq_id(&d.lo_comp(&m[1], &n[1]).expect("composable")),
            );
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        comp_inv: Box::new(move |m, n| {
            let ui = d.lo_unit(&d.unit_ob());
            let m0i = d.tensor_lo(&m[0], &ui);
            let n0i = d.tensor_lo(&n[0], &ui);
            let inner = d.vcomp(
                &d.x_cell_inv(&m[0], &ui, &n[0], &ui).expect("interchange"),
                &d.tensor_sq(
                    &d.sq_id(&d.lo_comp(&m[0], &n[0]).expect("composable")),
                    &d.lunit_inv(&ui),
                ),
            )
            .expect("pasting");
            let s1 = d.tensor_sq(
                &inner,
                &d.sq_id(&d.lo_comp(&m[1], &n[1]).expect("composable")),
            );
            let s2 = d.x_cell_inv(&m0i, &m[1], &n0i, &n[1]).expect("interchange");
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        unit: Box::new(move |a| {
            let s1 = d.u_cell(&d.tensor_ob(&a[0], &d.unit_ob()), &a[1]);
            let s2 = d.tensor_sq(
                &d.u_cell(&a[0], &d.unit_ob()),
                &d.sq_id(&d.lo_unit(&a[1])),
            );
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        unit_inv: Box::new(move |a| {
            let s1 = d.tensor_sq(
                &d.u_cell_inv(&a[0], &d.unit_ob()),
                &d.sq_id(&d.lo_unit(&a[1])),
            );
            let s2 = d.u_cell_inv(&d.tensor_ob(&a[0], &d.unit_ob()), &a[1]);
            d.vcomp(&s2, &s1).expect("constraint pasting")
        }),
    }
}

/// ⟨A,B,C,D⟩ ↦ ((A⊗B)⊗C)⊗D.
fn pent_outer_src<D: MonDbl>(d: &D) -> DblFun<'_, PowDbl<'_, D>, D> {
    nest_fun(d, true)
}

/// ⟨A,B,C,D⟩ ↦ A⊗(B⊗(C⊗D)).
fn pent_outer_tgt<D: MonDbl>(d: &D) -> DblFun<'_, PowDbl<'_, D>, D> {
    nest_fun(d, false)
}

fn nest_fun<D: MonDbl>(d: &D, left: bool) -> DblFun<'_, PowDbl<'_, D>, D> {
    let nest_ob = move |a: &Vec<D::Ob>| -> D::Ob {
        if left {
            d.tensor_ob(&d.tensor_ob(&d.tensor_ob(&a[0], &a[1]), &a[2]), &a[3])
        } else {
            d.tensor_ob(&a[0], &d.tensor_ob(&a[1], &d.tensor_ob(&a[2], &a[3])))
        }
    };
    let nest_lo = move |m: &Vec<D::Lo>| -> D::Lo {
        if left {
            d.tensor_lo(&d.tensor_lo(&d.tensor_lo(&m[0], &m[1]), &m[2]), &m[3])
        } else {
            d.tensor_lo(&m[0], &d.tensor_lo(&m[1], &d.tensor_lo(&m[2], &m[3])))
        }
    };
    DblFun {
        name: if left { "⊗⁴ˡ" } else { "⊗⁴ʳ" }.into(),
        ob: Box::new(nest_ob),
        ti: Box::new(move |f: &Vec<D::Ti>| {
            if left {
                d.tensor_ti(&d.tensor_ti(&d.tensor_ti(&f[0], &f[1]), &f[2]), &f[3])
            } else {
                d.tensor_ti(&f[0], &d.tensor_ti(&f[1], &d.tensor_ti(&f[2], &f[3])))
            }
        }),
        lo: Box::new(nest_lo),
        sq: Box::new(move |s: &Vec<D::Sq>| {
            if left {
                d.tensor_sq(&d.tensor_sq(&d.tensor_sq(&s[0], &s[1]), &s[2]), &s[3])
            } else {
                d.tensor_sq(&s[0], &d.tensor_sq(&s[1], &d.tensor_sq(&s[2], &s[3])))
            }
        }),
        comp: Box::new(move |m, n| nest_comp(d, left, m, n, false)),
        comp_inv: Box::new(move |m, n| nest_comp(d, left, m, n, true)),
        unit: Box::new(move |a| nest_unit(d, left, a, false)),
        unit_inv: Box::new(move |a| nest_unit(d, left, a, true)),
    }
}

fn nest_comp<D: MonDbl>(
    d: &D,
    left: bool,
    m: &[D::Lo],
    n: &[D::Lo],
    inv: bool,
) -> D::Sq {
    // fold the binary interchange cells along the chosen bracketing
    let x = |a: &D::Lo, b: &D::Lo, c: &D::Lo, e: &D::Lo| -> D::Sq {
        if inv {
            d.x_cell_inv(a, b, c, e).expect("interchange")
        } else {
            d.x_cell(a, b, c, e).expect("interchange")
        }
    };
    let comp = |p: &D::Lo, q: &D::Lo| d.lo_comp(p, q).expect("composable");
    if left {
        let m01 = d.tensor_lo(&m[0], &m[1]);
        let n01 = d.tensor_lo(&n[0], &n[1]);
        let m012 = d.tensor_lo(&m01, &m[2]);
        let n012 = d.tensor_lo(&n01, &n[2]);
        let s1 = x(&m012, &m[3], &n012, &n[3]);
        let s2 = d.tensor_sq(&x(&m01, &m[2], &n01, &n[2]), &d.sq_id(&comp(&m[3], &n[3])));
        let s3 = d.tensor_sq(
            &d.tensor_sq(
                &x(&m[0], &m[1], &n[0], &n[1]),
                &d.sq_id(&comp(&m[2], &n[2])),
            ),
            &d.sq_id(&comp(&m[3], &n[3])),
        );
        if inv {
            d.vcomp(&s1, &d.vcomp(&s2, &s3).unwrap()).unwrap()
        } else {
            d.vcomp(&s3, &d.vcomp(&s2, &s1).unwrap()).unwrap()
        }
    } else {
        let m23 = d.tensor_lo(&m[2], &m[3]);
        let n23 = d.tensor_lo(&n[2], &n[3]);
        let m123 = d.tensor_lo(&m[1], &m23);
        let n123 = d.tensor_lo(&n[1], &n23);
        let s1 = x(&m[0], &m123, &n[0], &n123);
        let s2 = d.tensor_sq(&d.sq_id(&comp(&m[0], &n[0])), &x(&m[1], &m23, &n[1], &n23));
        let s3 = d.tensor_sq(
            &d.sq_id(&comp(&m[0], &n[0])),
            &d.tensor_sq(
                &d.sq_id(&comp(&m[1], &n[1])),
                &x(&m[2], &m[3], &n[2], &n[3]),
            ),
        );
        if inv {
            d.vcomp(&s1, &d.vcomp(&s2, &s3).unwrap()).unwrap()
        } else {
            d.vcomp(&s3, &d.vcomp(&s2, &s1).unwrap()).unwrap()
        }
    }
}

fn nest_unit<D: MonDbl>(d: &D, left: bool, a: &[D::Ob], inv: bool) -> D::Sq {
    let u = |x: &D::Ob, y: &D::Ob| -> D::Sq {
        if inv {
            d.u_cell_inv(x, y)
        } else {
            d.u_cell(x, y)
        }
    };
    if left {
        let ab = d.tensor_ob(&a[0], &a[1]);
        let abc = d.tensor_ob(&ab, &a[2]);
        let s1 = u(&abc, &a[3]);
        let s2 = d.tensor_sq(&u(&ab, &a[2]), &d.sq_id(&d.lo_unit(&a[3])));
        let s3 = d.tensor_sq(
            &d.tensor_sq(&u(&a[0], &a[1]), &d.sq_id(&d.lo_unit(&a[2]))),
            &d.sq_id(&d.lo_unit(&a[3])),
        );
        if inv {
            d.vcomp(&s1, &d.vcomp(&s2, &s3).unwrap()).unwrap()
        } else {
            d.vcomp(&s3, &d.vcomp(&s2, &s1).unwrap()).unwrap()
        }
    } else {
        let cd = d.tensor_ob(&a[2], &a[3]);
        let bcd = d.tensor_ob(&a[1], &cd);
        let s1 = u(&a[0], &bcd);
        let s2 = d.tensor_sq(&d.sq_id(&d.lo_unit(&a[0])), &u(&a[1], &cd));
        let s3 = d.tensor_sq(
            &d.sq_id(&d.lo_unit(&a[0])),
            &d.tensor_sq(&d.sq_id(&d.lo_unit(&a[1])), &u(&a[2], &a[3])),
        );
        if inv {
            d.vcomp(&s1, &d.vcomp(&s2, &s3).unwrap()).unwrap()
        } else {
            d.vcomp(&s3, &d.vcomp(&s2, &s1).unwrap()).unwrap()
        }
    }
}

#[derive(Clone, Copy)]
enum Which {
    PentLeft,
    PentRight,
    MuLeft,
    MuRight,
    SylLeft,
    SylRight,
}

/// Lift a tight path transformation using the companion routes already
/// stored in the data (so the lifted 1-cell components are exactly the
/// sides the θ-family compares).
fn path_transf<'x, 'd: 'x, D: MonDbl, BS, BT>(
    d: &'d D,
    tr: &'x DblTransf<'x, PowDbl<'d, D>, D>,
    data: &'x MonoidalBicatData<D>,
    which: Which,
) -> Result<Transf<'x, BS, BT>>
where
    BS: Bicat<Ob = Vec<D::Ob>, One = Vec<D::Lo>, Two = Vec<D::Sq>>,
    BT: Bicat<Ob = D::Ob, One = D::Lo, Two = D::Sq>,
{
    let pair_for = move |a: &Vec<D::Ob>| -> CompanionPair<D> {
        match which {
            Which::PentLeft => data.pent[a].left.clone(),
            Which::PentRight => data.pent[a].right.clone(),
            Which::MuLeft => data.mu[a].left.clone(),
            Which::MuRight => data.mu[a].right.clone(),
            Which::SylLeft => data.syl[a].left.clone(),
            Which::SylRight => data.syl[a].right.clone(),
        }
    };
    let arity = match which {
        Which::PentLeft | Which::PentRight => 4,
        _ => 2,
    };
    let pow: PowDbl<'d, D> = PowDbl::new(d, arity);
    let _ = pow;
    Ok(Transf {
        name: tr.name.clone(),
        mode: TransfMode::Pseudo,
        at_ob: Box::new(move |a: &Vec<D::Ob>| pair_for(a).hat),
        at_one: Box::new(move |m: &Vec<D::Lo>| {
            let pow = PowDbl::new(d, m.len());
            let a = pow.lo_src(m);
            let b = pow.lo_tgt(m);
            let pa = pair_for(&a);
            let pb = pair_for(&b);
            let mid = (tr.at_lo)(m);
            let fm = d.sq_top(&mid);
            let gm = d.sq_bot(&mid);
            let row = d
                .hcomp(&pb.eps, &d.hcomp(&mid, &pa.eta).unwrap())
                .unwrap();
            let pre = d
                .hcomp(&d.sq_id(&pb.hat), &d.runit_inv(&fm))
                .unwrap();
            let post = d.lunit(&d.lo_comp(&gm, &pa.hat).unwrap()).clone();
            d.vcomp(&post, &d.vcomp(&row, &pre).unwrap()).unwrap()
        }),
    })
}

/// Restrict a derived power universe to the object tuples a family was
/// built over, so modification checks only touch stored components.
fn restrict_to_keys<'a, 'p, 'd: 'p, D: MonDbl>(
    pow: &'p PowDbl<'d, D>,
    u: &DblUniverse<PowDbl<'d, D>>,
    keys: impl Iterator<Item = &'a Vec<D::Ob>>,
) -> BUniverse<LooseBicat<'p, PowDbl<'d, D>>>
where
    D::Ob: 'a,
{
    let keyset: Vec<Vec<D::Ob>> = keys.cloned().collect();
    let objects: Vec<Vec<D::Ob>> = u
        .objects
        .iter()
        .filter(|t| keyset.contains(t))
        .cloned()
        .collect();
    let looses: Vec<Vec<D::Lo>> = u
        .looses
        .iter()
        .filter(|m| {
            keyset.contains(&pow.lo_src(m)) && keyset.contains(&pow.lo_tgt(m))
        })
        .cloned()
        .collect();
    let twos: Vec<Vec<D::Sq>> = looses.iter().map(|m| pow.sq_id(m)).collect();
    BUniverse::derive(&LooseBicat(pow), objects, looses, twos, UniverseCaps::default())
}

// ---------------------------------------------------------------------
// Monoidal functor and transformation lifting.
// ---------------------------------------------------------------------

/// Lifted monoidal pseudofunctor data: companion 1-cell components of the
/// comparison transformation χ and unit comparison ι, with the coherence
/// 3-cells as comparison isomorphisms.
pub struct MonPsFunData<S: MonDbl, T: MonDbl> {
    pub chi: BTreeMap<Vec<S::Ob>, CompanionPair<T>>,
    pub iota: CompanionPair<T>,
    pub omega: BTreeMap<Vec<S::Ob>, ThetaCell<T>>,
    pub gamma: BTreeMap<Vec<S::Ob>, ThetaCell<T>>,
    pub delta: BTreeMap<Vec<S::Ob>, ThetaCell<T>>,
    pub braid_cmp: BTreeMap<Vec<S::Ob>, ThetaCell<T>>,
}

/// The comparison transformation φ of a monoidal functor, as a tight
/// transformation ⊗∘(F,F) → F∘⊗ over the binary power.
pub fn phi_transf<'x, S: MonDbl, T: MonDbl>(
    ff: &'x MonDblFun<'x, S, T>,
) -> DblTransf<'x, PowDbl<'x, S>, T> {
    DblTransf {
        name: "φ".into(),
        at_ob: Box::new(move |a: &Vec<S::Ob>| (ff.phi_ob)(&a[0], &a[1])),
        at_lo: Box::new(move |m: &Vec<S::Lo>| (ff.phi_lo)(&m[0], &m[1])),
    }
}

/// ⟨A,B⟩ ↦ F A ⊗ F B.
pub fn tensor_of_images_fun<'x, S: MonDbl, T: MonDbl>(
    t: &'x T,
    ff: &'x MonDblFun<'x, S, T>,
) -> DblFun<'x, PowDbl<'x, S>, T> {
    let f = &ff.fun;
    DblFun {
        name: "⊗(F,F)".into(),
        ob: Box::new(move |a: &Vec<S::Ob>| t.tensor_ob(&(f.ob)(&a[0]), &(f.ob)(&a[1]))),
        ti: Box::new(move |g: &Vec<S::Ti>| t.tensor_ti(&(f.ti)(&g[0]), &(f.ti)(&g[1]))),
        lo: Box::new(move |m: &Vec<S::Lo>| t.tensor_lo(&(f.lo)(&m[0]), &(f.lo)(&m[1]))),
        sq: Box::new(move |s: &Vec<S::Sq>| t.tensor_sq(&(f.sq)(&s[0]), &(f.sq)(&s[1]))),
        comp: Box::new(move |m, n| {
            let s1 = t
                .x_cell(&(f.lo)(&m[0]), &(f.lo)(&m[1]), &(f.lo)(&n[0]), &(f.lo)(&n[1]))
                .expect("interchange");
            let s2 = t.tensor_sq(&(f.comp)(&m[0], &n[0]), &(f.comp)(&m[1], &n[1]));
            t.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        comp_inv: Box::new(move |m, n| {
            let s1 = t.tensor_sq(
                &(f.comp_inv)(&m[0], &n[0]),
                &(f.comp_inv)(&m[1], &n[1]),
            );
            let s2 = t
                .x_cell_inv(&(f.lo)(&m[0]), &(f.lo)(&m[1]), &(f.lo)(&n[0]), &(f.lo)(&n[1]))
                .expect("interchange");
            t.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        unit: Box::new(move |a| {
            let s1 = t.u_cell(&(f.ob)(&a[0]), &(f.ob)(&a[1]));
            let s2 = t.tensor_sq(&(f.unit)(&a[0]), &(f.unit)(&a[1]));
            t.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        unit_inv: Box::new(move |a| {
            let s1 = t.tensor_sq(&(f.unit_inv)(&a[0]), &(f.unit_inv)(&a[1]));
            let s2 = t.u_cell_inv(&(f.ob)(&a[0]), &(f.ob)(&a[1]));
            t.vcomp(&s2, &s1).expect("constraint pasting")
        }),
    }
}

/// ⟨A,B⟩ ↦ F(A ⊗ B).
pub fn image_of_tensor_fun<'x, S: MonDbl, T: MonDbl>(
    s: &'x S,
    t: &'x T,
    ff: &'x MonDblFun<'x, S, T>,
) -> DblFun<'x, PowDbl<'x, S>, T> {
    let f = &ff.fun;
    DblFun {
        name: "F∘⊗".into(),
        ob: Box::new(move |a: &Vec<S::Ob>| (f.ob)(&s.tensor_ob(&a[0], &a[1]))),
        ti: Box::new(move |g: &Vec<S::Ti>| (f.ti)(&s.tensor_ti(&g[0], &g[1]))),
        lo: Box::new(move |m: &Vec<S::Lo>| (f.lo)(&s.tensor_lo(&m[0], &m[1]))),
        sq: Box::new(move |c: &Vec<S::Sq>| (f.sq)(&s.tensor_sq(&c[0], &c[1]))),
        comp: Box::new(move |m, n| {
            let mt = s.tensor_lo(&m[0], &m[1]);
            let nt = s.tensor_lo(&n[0], &n[1]);
            let s1 = (f.comp)(&mt, &nt);
            let s2 = (f.sq)(&s.x_cell(&m[0], &m[1], &n[0], &n[1]).expect("interchange"));
            t.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        comp_inv: Box::new(move |m, n| {
            let mt = s.tensor_lo(&m[0], &m[1]);
            let nt = s.tensor_lo(&n[0], &n[1]);
            let s1 = (f.sq)(&s.x_cell_inv(&m[0], &m[1], &n[0], &n[1]).expect("interchange"));
            let s2 = (f.comp_inv)(&mt, &nt);
            t.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        unit: Box::new(move |a| {
            let ab = s.tensor_ob(&a[0], &a[1]);
            let s1 = (f.unit)(&ab);
            let s2 = (f.sq)(&s.u_cell(&a[0], &a[1]));
            t.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        unit_inv: Box::new(move |a| {
            let ab = s.tensor_ob(&a[0], &a[1]);
            let s1 = (f.sq)(&s.u_cell_inv(&a[0], &a[1]));
            let s2 = (f.unit_inv)(&ab);
            t.vcomp(&s2, &s1).expect("constraint pasting")
        }),
    }
}

/// Lift a strong (or certified loosely strong lax) monoidal double functor
/// to monoidal pseudofunctor data, with verification.
pub fn lift_monoidal_functor<'d, S: MonDbl, T: MonDbl>(
    s: &'d S,
    t: &'d T,
    ff: &'d MonDblFun<'d, S, T>,
    ch: &'d Choice<'d, T>,
    u: &DblUniverse<S>,
    caps: TupleCaps,
) -> Result<(MonPsFunData<S, T>, Report)> {
    let phi = phi_transf(ff);
    let pow2 = PowDbl::new(s, 2);
    let u2 = pow_universe(s, u, 2, caps.pairs, 20);

    // precondition: strong, or lax with certified loose strength
    for a in &u2.objects {
        if ch.get(&(phi.at_ob)(a)).is_err() {
            return Err(Error::NotLooselyStrong(format!(
                "no companion for a comparison component at {a:?}"
            )));
        }
    }
    if ch.get(&ff.phi_u).is_err() {
        return Err(Error::NotLooselyStrong(
            "no companion for the unit comparison".into(),
        ));
    }
    if ff.laxity == Laxity::Lax {
        if !is_loosely_strong(&pow2, t, &phi, ch, &u2)? {
            return Err(Error::NotLooselyStrong(
                "comparison transformation has a non-invertible lifted component".into(),
            ));
        }
    }

    let f = &ff.fun;
    let mut data = MonPsFunData {
        chi: BTreeMap::new(),
        iota: ch.get(&ff.phi_u)?,
        omega: BTreeMap::new(),
        gamma: BTreeMap::new(),
        delta: BTreeMap::new(),
        braid_cmp: BTreeMap::new(),
    };
    let mut report = Report::new();

    let pairs = object_tuples(u, 2, caps.pairs);
    let triples = object_tuples(u, 3, caps.triples);
    let singles = object_tuples(u, 1, caps.pairs);

    for p in &pairs {
        data.chi.insert(p.clone(), ch.get(&(ff.phi_ob)(&p[0], &p[1]))?);
    }

    let mut fam = Family::new("monlift.families");
    for tr in &triples {
        let (a, b, c) = (&tr[0], &tr[1], &tr[2]);
        let fa = (f.ob)(a);
        let fc = (f.ob)(c);
        let q1 = compose_companions(
            t,
            &compose_companions(
                t,
                &tensor_pair(t, &ch.get(&(ff.phi_ob)(a, b))?, &identity_companion(t, &fc)),
                &ch.get(&(ff.phi_ob)(&s.tensor_ob(a, b), c))?,
            )?,
            &ch.get(&(f.ti)(&s.massoc(a, b, c)))?,
        )?;
        let q2 = compose_companions(
            t,
            &compose_companions(
                t,
                &ch.get(&t.massoc(&fa, &(f.ob)(b), &fc))?,
                &tensor_pair(t, &identity_companion(t, &fa), &ch.get(&(ff.phi_ob)(b, c))?),
            )?,
            &ch.get(&(ff.phi_ob)(a, &s.tensor_ob(b, c)))?,
        )?;
        let cell = build_theta(t, q1, q2)?;
        let ok = t.vcomp(&cell.inv, &cell.cell)? == t.sq_id(&cell.left.hat);
        fam.record(&format!("omega{tr:?}"), ok, || "ω not invertible".into());
        data.omega.insert(tr.clone(), cell);
    }
    for sg in &singles {
        let a = &sg[0];
        let fa = (f.ob)(a);
        let i = s.unit_ob();
        let q1 = compose_companions(
            t,
            &compose_companions(
                t,
                &tensor_pair(t, &data.iota, &identity_companion(t, &fa)),
                &ch.get(&(ff.phi_ob)(&i, a))?,
            )?,
            &ch.get(&(f.ti)(&s.mlunit(a)))?,
        )?;
        let q2 = ch.get(&t.mlunit(&fa))?;
        let cell = build_theta(t, q1, q2)?;
        let ok = t.vcomp(&cell.inv, &cell.cell)? == t.sq_id(&cell.left.hat);
        fam.record(&format!("gamma{sg:?}"), ok, || "γ not invertible".into());
        data.gamma.insert(sg.clone(), cell);

        let q1 = compose_companions(
            t,
            &compose_companions(
                t,
                &tensor_pair(t, &identity_companion(t, &fa), &data.iota),
                &ch.get(&(ff.phi_ob)(a, &i))?,
            )?,
            &ch.get(&(f.ti)(&s.mrunit(a)))?,
        )?;
        let q2 = ch.get(&t.mrunit(&fa))?;
        let cell = build_theta(t, q1, q2)?;
        let ok = t.vcomp(&cell.inv, &cell.cell)? == t.sq_id(&cell.left.hat);
        fam.record(&format!("delta{sg:?}"), ok, || "δ not invertible".into());
        data.delta.insert(sg.clone(), cell);
    }
    if s.level() >= Level::Braided && t.level() >= Level::Braided {
        for pr in &pairs {
            let (a, b) = (&pr[0], &pr[1]);
            let q1 = compose_companions(
                t,
                &ch.get(&(ff.phi_ob)(a, b))?,
                &ch.get(&(f.ti)(&s.braid(a, b)?))?,
            )?;
            let q2 = compose_companions(
                t,
                &ch.get(&t.braid(&(f.ob)(a), &(f.ob)(b))?)?,
                &ch.get(&(ff.phi_ob)(b, a))?,
            )?;
            let cell = build_theta(t, q1, q2)?;
            let ok = t.vcomp(&cell.inv, &cell.cell)? == t.sq_id(&cell.left.hat);
            fam.record(&format!("braid{pr:?}"), ok, || "u not invertible".into());
            data.braid_cmp.insert(pr.clone(), cell);
        }
    }
    report.checks.push(fam.finish());

    // χ is a lawful transformation of loose bicategories
    let mode = if ff.laxity == Laxity::Strong {
        TransfMode::Pseudo
    } else {
        TransfMode::Oplax
    };
    let lifted_chi = lift_tight_transformation(&pow2, t, &phi, ch, &u2, mode)?;
    let src_fun = tensor_of_images_fun(t, ff);
    let tgt_fun = image_of_tensor_fun(s, t, ff);
    let hb2 = LooseBicat(&pow2);
    let hbt = LooseBicat(t);
    let bu2 = buniverse_from_dbl(&pow2, &u2, UniverseCaps::default());
    report.merge(check_transformation(
        &hb2,
        &hbt,
        &lift_double_functor(&src_fun),
        &lift_double_functor(&tgt_fun),
        &lifted_chi,
        &bu2,
        None,
    ));

    // γ as a modification between the two unit paths, over arity 1
    {
        let pow1 = PowDbl::new(s, 1);
        let u1 = pow_universe(s, u, 1, caps.pairs, 12);
        let bu1 = buniverse_from_dbl(&pow1, &u1, UniverseCaps::default());
        let hb1 = LooseBicat(&pow1);
        let left_path = DblTransf {
            name: "γ-left".into(),
            at_ob: Box::new(move |a: &Vec<S::Ob>| {
                let i = s.unit_ob();
                let s1 = t.tensor_ti(&ff.phi_u, &t.ti_id(&(f.ob)(&a[0])));
                let s2 = (ff.phi_ob)(&i, &a[0]);
                let s3 = (f.ti)(&s.mlunit(&a[0]));
                t.ti_comp(&s3, &t.ti_comp(&s2, &s1).unwrap()).unwrap()
            }),
            at_lo: Box::new(move |m: &Vec<S::Lo>| {
                let i = s.unit_ob();
                let s1 = t.tensor_sq(&t.sq_unit(&ff.phi_u), &(f.sq)(&s.sq_id(&m[0])));
                let s2 = (ff.phi_lo)(&s.lo_unit(&i), &m[0]);
                let s3 = (f.sq)(&s.mlunit_lo(&m[0]));
                t.vcomp(&s3, &t.vcomp(&s2, &s1).unwrap()).unwrap()
            }),
        };
        let right_path = DblTransf {
            name: "γ-right".into(),
            at_ob: Box::new(move |a: &Vec<S::Ob>| t.mlunit(&(f.ob)(&a[0]))),
            at_lo: Box::new(move |m: &Vec<S::Lo>| t.mlunit_lo(&(f.lo)(&m[0]))),
        };
        let gamma_data = &data.gamma;
        let tl = lift_with_pairs(&pow1, t, &left_path, "γ-left", move |a: &Vec<S::Ob>| {
            gamma_data[a].left.clone()
        });
        let tr = lift_with_pairs(&pow1, t, &right_path, "γ-right", move |a: &Vec<S::Ob>| {
            gamma_data[a].right.clone()
        });
        let gamma_mod = Modification {
            name: "γ".into(),
            at_ob: Box::new(move |a: &Vec<S::Ob>| gamma_data[a].cell.clone()),
        };
        let lsrc = gamma_left_fun(t, ff);
        let ltgt = gamma_right_fun(ff);
        report.merge(check_modification(
            &hb1,
            &hbt,
            &lift_double_functor(&lsrc),
            &lift_double_functor(&ltgt),
            &tl,
            &tr,
            None,
            None,
            &gamma_mod,
            &bu1,
            None,
        ));
    }

    Ok((data, report))
}

/// Lift a tight path transformation with an explicit companion-pair
/// assignment: the 2-cell components are the standard pasted composites
/// through the assigned binding cells.
pub fn lift_with_pairs<'x, S: Dbl, T: Dbl, BS, BT>(
    s_engine: &'x S,
    t: &'x T,
    tr: &'x DblTransf<'x, S, T>,
    name: &str,
    pair_at: impl Fn(&S::Ob) -> CompanionPair<T> + 'x + Copy,
) -> Transf<'x, BS, BT>
where
    BS: Bicat<Ob = S::Ob, One = S::Lo, Two = S::Sq>,
    BT: Bicat<Ob = T::Ob, One = T::Lo, Two = T::Sq>,
{
    Transf {
        name: name.into(),
        mode: TransfMode::Pseudo,
        at_ob: Box::new(move |a: &S::Ob| pair_at(a).hat),
        at_one: Box::new(move |m: &S::Lo| {
            let pa = pair_at(&s_engine.lo_src(m));
            let pb = pair_at(&s_engine.lo_tgt(m));
            let mid = (tr.at_lo)(m);
            let fm = t.sq_top(&mid);
            let gm = t.sq_bot(&mid);
            let row = t
                .hcomp(&pb.eps, &t.hcomp(&mid, &pa.eta).unwrap())
                .unwrap();
            let pre = t.hcomp(&t.sq_id(&pb.hat), &t.runit_inv(&fm)).unwrap();
            let post = t.lunit(&t.lo_comp(&gm, &pa.hat).unwrap());
            t.vcomp(&post, &t.vcomp(&row, &pre).unwrap()).unwrap()
        }),
    }
}

/// ⟨A⟩ ↦ I_T ⊗ F A.
fn gamma_left_fun<'x, S: MonDbl, T: MonDbl>(
    t: &'x T,
    ff: &'x MonDblFun<'x, S, T>,
) -> DblFun<'x, PowDbl<'x, S>, T> {
    let f = &ff.fun;
    DblFun {
        name: "I⊗F".into(),
        ob: Box::new(move |a: &Vec<S::Ob>| t.tensor_ob(&t.unit_ob(), &(f.ob)(&a[0]))),
        ti: Box::new(move |g: &Vec<S::Ti>| {
            t.tensor_ti(&t.ti_id(&t.unit_ob()), &(f.ti)(&g[0]))
        }),
        lo: Box::new(move |m: &Vec<S::Lo>| {
            t.tensor_lo(&t.lo_unit(&t.unit_ob()), &(f.lo)(&m[0]))
        }),
        sq: Box::new(move |c: &Vec<S::Sq>| {
            t.tensor_sq(&t.sq_id(&t.lo_unit(&t.unit_ob())), &(f.sq)(&c[0]))
        }),
        comp: Box::new(move |m, n| {
            let ui = t.lo_unit(&t.unit_ob());
            let s1 = t
                .x_cell(&ui, &(f.lo)(&m[0]), &ui, &(f.lo)(&n[0]))
                .expect("interchange");
            let s2 = t.tensor_sq(&t.lunit(&ui), &(f.comp)(&m[0], &n[0]));
            t.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        comp_inv: Box::new(move |m, n| {
            let ui = t.lo_unit(&t.unit_ob());
            let s1 = t.tensor_sq(&t.lunit_inv(&ui), &(f.comp_inv)(&m[0], &n[0]));
            let s2 = t
                .x_cell_inv(&ui, &(f.lo)(&m[0]), &ui, &(f.lo)(&n[0]))
                .expect("interchange");
            t.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        unit: Box::new(move |a| {
            let s1 = t.u_cell(&t.unit_ob(), &(f.ob)(&a[0]));
            let s2 = t.tensor_sq(&t.sq_id(&t.lo_unit(&t.unit_ob())), &(f.unit)(&a[0]));
            t.vcomp(&s2, &s1).expect("constraint pasting")
        }),
        unit_inv: Box::new(move |a| {
            let s1 = t.tensor_sq(&t.sq_id(&t.lo_unit(&t.unit_ob())), &(f.unit_inv)(&a[0]));
            let s2 = t.u_cell_inv(&t.unit_ob(), &(f.ob)(&a[0]));
            t.vcomp(&s2, &s1).expect("constraint pasting")
        }),
    }
}

/// ⟨A⟩ ↦ F A.
fn gamma_right_fun<'x, S: MonDbl, T: MonDbl>(
    ff: &'x MonDblFun<'x, S, T>,
) -> DblFun<'x, PowDbl<'x, S>, T> {
    let f = &ff.fun;
    DblFun {
        name: "F∘proj".into(),
        ob: Box::new(move |a: &Vec<S::Ob>| (f.ob)(&a[0])),
        ti: Box::new(move |g: &Vec<S::Ti>| (f.ti)(&g[0])),
        lo: Box::new(move |m: &Vec<S::Lo>| (f.lo)(&m[0])),
        sq: Box::new(move |c: &Vec<S::Sq>| (f.sq)(&c[0])),
        comp: Box::new(move |m, n| (f.comp)(&m[0], &n[0])),
        comp_inv: Box::new(move |m, n| (f.comp_inv)(&m[0], &n[0])),
        unit: Box::new(move |a| (f.unit)(&a[0])),
        unit_inv: Box::new(move |a| (f.unit_inv)(&a[0])),
    }
}

/// Lifted monoidal transformation data: the component families comparing
/// the two comparison routes.
pub struct MonTransData<S: MonDbl, T: MonDbl> {
    pub pi: BTreeMap<Vec<S::Ob>, ThetaCell<T>>,
    pub m_cell: ThetaCell<T>,
}

/// Lift a monoidal tight transformation between monoidal double functors.
#[allow(clippy::too_many_arguments)]
pub fn lift_monoidal_transformation<'d, S: MonDbl, T: MonDbl>(
    s: &'d S,
    t: &'d T,
    ff: &'d MonDblFun<'d, S, T>,
    gg: &'d MonDblFun<'d, S, T>,
    al: &'d DblTransf<'d, S, T>,
    ch: &'d Choice<'d, T>,
    u: &DblUniverse<S>,
    caps: TupleCaps,
) -> Result<(MonTransData<S, T>, Report)> {
    // loose strength of the underlying transformation
    for a in &u.objects {
        if ch.get(&(al.at_ob)(a)).is_err() {
            return Err(Error::NotLooselyStrong(format!(
                "no companion for a component at {}",
                s.show_ob(a)
            )));
        }
    }
    if !is_loosely_strong(s, t, al, ch, u)? {
        return Err(Error::NotLooselyStrong(
            "a lifted component has no inverse".into(),
        ));
    }

    let mut report = Report::new();
    let mut data = MonTransData {
        pi: BTreeMap::new(),
        m_cell: {
            let i = s.unit_ob();
            let q1 = compose_companions(t, &ch.get(&ff.phi_u)?, &ch.get(&(al.at_ob)(&i))?)?;
            let q2 = ch.get(&gg.phi_u)?;
            build_theta(t, q1, q2)?
        },
    };
    let pairs = object_tuples(u, 2, caps.pairs);
    let mut fam = Family::new("montrans.families");
    for pr in &pairs {
        let (a, b) = (&pr[0], &pr[1]);
        let ab = s.tensor_ob(a, b);
        let q1 = compose_companions(
            t,
            &tensor_pair(t, &ch.get(&(al.at_ob)(a))?, &ch.get(&(al.at_ob)(b))?),
            &ch.get(&(gg.phi_ob)(a, b))?,
        )?;
        let q2 = compose_companions(t, &ch.get(&(ff.phi_ob)(a, b))?, &ch.get(&(al.at_ob)(&ab))?)?;
        let cell = build_theta(t, q1, q2)?;
        let ok = t.vcomp(&cell.inv, &cell.cell)? == t.sq_id(&cell.left.hat);
        fam.record(&format!("Pi{pr:?}"), ok, || "Π not invertible".into());
        data.pi.insert(pr.clone(), cell);
    }
    report.checks.push(fam.finish());

    // Π as a modification between the two routes, over arity 2
    {
        let pow2 = PowDbl::new(s, 2);
        let u2 = pow_universe(s, u, 2, caps.pairs, 16);
        let bu2 = buniverse_from_dbl(&pow2, &u2, UniverseCaps::default());
        let hb2 = LooseBicat(&pow2);
        let hbt = LooseBicat(t);
        let f = &ff.fun;
        let g = &gg.fun;
        let left_path = DblTransf {
            name: "Π-left".into(),
            at_ob: Box::new(move |a: &Vec<S::Ob>| {
                t.ti_comp(
                    &(gg.phi_ob)(&a[0], &a[1]),
                    &t.tensor_ti(&(al.at_ob)(&a[0]), &(al.at_ob)(&a[1])),
                )
                .unwrap()
            }),
            at_lo: Box::new(move |m: &Vec<S::Lo>| {
                t.vcomp(
                    &(gg.phi_lo)(&m[0], &m[1]),
                    &t.tensor_sq(&(al.at_lo)(&m[0]), &(al.at_lo)(&m[1])),
                )
                .unwrap()
            }),
        };
        let right_path = DblTransf {
            name: "Π-right".into(),
            at_ob: Box::new(move |a: &Vec<S::Ob>| {
                t.ti_comp(
                    &(al.at_ob)(&s.tensor_ob(&a[0], &a[1])),
                    &(ff.phi_ob)(&a[0], &a[1]),
                )
                .unwrap()
            }),
            at_lo: Box::new(move |m: &Vec<S::Lo>| {
                t.vcomp(
                    &(al.at_lo)(&s.tensor_lo(&m[0], &m[1])),
                    &(ff.phi_lo)(&m[0], &m[1]),
                )
                .unwrap()
            }),
        };
        let pi_data = &data.pi;
        let tl = lift_with_pairs(&pow2, t, &left_path, "Π-left", move |a: &Vec<S::Ob>| {
            pi_data[a].left.clone()
        });
        let tr = lift_with_pairs(&pow2, t, &right_path, "Π-right", move |a: &Vec<S::Ob>| {
            pi_data[a].right.clone()
        });
        let pi_mod = Modification {
            name: "Π".into(),
            at_ob: Box::new(move |a: &Vec<S::Ob>| pi_data[a].cell.clone()),
        };
        let src_fun = tensor_of_images_fun(t, ff);
        let tgt_fun = image_of_tensor_fun(s, t, gg);
        report.merge(check_modification(
            &hb2,
            &hbt,
            &lift_double_functor(&src_fun),
            &lift_double_functor(&tgt_fun),
            &tl,
            &tr,
            None,
            None,
            &pi_mod,
            &bu2,
            None,
        ));
        let _ = f;
        let _ = g;
    }

    Ok((data, report))
}

// ---------------------------------------------------------------------
// Axiom fixtures evaluated through the expression language.
// ---------------------------------------------------------------------

/// One equation of a fixture file: two expressions that must evaluate to
/// the same concrete cell in the environment of a family and tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureEq {
    pub name: String,
    pub lhs: CellExpr,
    pub rhs: CellExpr,
}

/// The coherence family a fixture binds its names against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureFamily {
    Pent,
    Mu,
    Lam,
    Rho,
    HexR,
    HexS,
    Syl,
}

impl std::str::FromStr for FixtureFamily {
    type Err = Error;
    fn from_str(x: &str) -> Result<Self> {
        Ok(match x {
            "pent" => FixtureFamily::Pent,
            "mu" => FixtureFamily::Mu,
            "lam" => FixtureFamily::Lam,
            "rho" => FixtureFamily::Rho,
            "hex_r" => FixtureFamily::HexR,
            "hex_s" => FixtureFamily::HexS,
            "syl" => FixtureFamily::Syl,
            other => return Err(Error::ConfigError(format!("unknown fixture family {other}"))),
        })
    }
}

/// Build the expression environment for a family at an object tuple.
///
/// Bound 2-cells: the family name (stored component), `<family>_inv`,
/// `theta_left_diag` and `theta_diag_right` (the reroute through the
/// directly chosen companion of the common tight composite), and
/// `theta_runit` (the comparison to the unit-padded composite). Bound
/// 1-cells: `left`, `right`, `diag`.
pub fn family_fixture_env<'d, D: MonDbl>(
    d: &'d D,
    ch: &Choice<'_, D>,
    data: &MonoidalBicatData<D>,
    family: FixtureFamily,
    tuple: &[D::Ob],
) -> Result<Env<LooseBicat<'d, D>>> {
    let (name, cell) = match family {
        FixtureFamily::Pent => ("pent", data.pent.get(tuple)),
        FixtureFamily::Mu => ("mu", data.mu.get(tuple)),
        FixtureFamily::Lam => ("lam", data.lam.get(tuple)),
        FixtureFamily::Rho => ("rho", data.rho.get(tuple)),
        FixtureFamily::HexR => ("hex_r", data.hex_r.get(tuple)),
        FixtureFamily::HexS => ("hex_s", data.hex_s.get(tuple)),
        FixtureFamily::Syl => ("syl", data.syl.get(tuple)),
    };
    let cell = cell.ok_or_else(|| {
        Error::ConfigError(format!(
            "family {name} was not built at the requested tuple"
        ))
    })?;
    let mut env = Env::new();
    for (i, ob) in tuple.iter().enumerate() {
        env.objects.insert(format!("A{}", i + 1), ob.clone());
    }
    env.ones.insert("left".into(), cell.left.hat.clone());
    env.ones.insert("right".into(), cell.right.hat.clone());
    env.twos.insert(name.to_string(), cell.cell.clone());
    env.twos
        .insert(format!("{name}_inv"), cell.inv.clone());
    // reroute through the directly chosen companion of the diagonal
    let diag = ch.get(&cell.left.f)?;
    env.ones.insert("diag".into(), diag.hat.clone());
    env.twos.insert(
        "theta_left_diag".into(),
        theta(d, &cell.left, &diag)?,
    );
    env.twos.insert(
        "theta_diag_right".into(),
        theta(d, &diag, &cell.right)?,
    );
    // unit-padding comparison: left → left ⊙ U
    let src = d.ti_dom(&cell.left.f);
    let padded = compose_companions(d, &identity_companion(d, &src), &cell.left)?;
    env.twos
        .insert("theta_runit".into(), theta(d, &cell.left, &padded)?);
    Ok(env)
}

/// Evaluate fixture equations over a bicategory; both sides of each must
/// evaluate (boundary errors abort) and compare equal.
pub fn verify_lifted<B: Bicat>(
    b: &B,
    env: &Env<B>,
    eqs: &[FixtureEq],
    filter: Option<&str>,
) -> Result<Report> {
    let mut report = Report::new();
    let mut fam = Family::with_filter("fixtures", filter.map(|x| x.to_string()));
    for eq in eqs {
        if !fam.admits(&eq.name) {
            continue;
        }
        let lhs = eval_cell_expr(b, env, &eq.lhs)?;
        let rhs = eval_cell_expr(b, env, &eq.rhs)?;
        let ok = lhs == rhs;
        fam.record(&eq.name, ok, || {
            format!("lhs = {}\n    rhs = {}", b.show_two(&lhs), b.show_two(&rhs))
        });
    }
    report.checks.push(fam.finish());
    Ok(report)
}
