//! Monoid/bimodule composition against the independent profunctor oracle,
//! plus the double-category and monoidal axiom suites for the standard
//! span instance of the construction.

use dblcheck_core::dbl::{check_double_category, Dbl, DblUniverse, UniverseCaps};
use dblcheck_core::finbase::{El, FinFun, FinSet};
use dblcheck_core::instances::alg::{
    alg_construction, arrow_category, check_bimodule, check_local_coequalizers, check_monoid,
    discrete_category, profunctor_oracle, span_bimodule, z2_category, AlgDbl, Bimodule, Monoid,
};
use dblcheck_core::instances::span::{span_universe, Span, SpanDbl};
use dblcheck_core::mondbl::{check_monoidal_double_category, Level, MonDbl};

fn set(labels: &[&str]) -> FinSet {
    FinSet::from_atoms(labels).unwrap()
}

/// A bimodule between discrete categories: just a span with trivial
/// actions.
fn discrete_bim(
    name: &str,
    src: &Monoid<SpanDbl>,
    tgt: &Monoid<SpanDbl>,
    carrier: Span,
) -> Bimodule<SpanDbl> {
    let d = SpanDbl;
    let ma = d.lo_comp(&carrier, &src.loose).unwrap();
    let lact = FinFun::from_map(ma.apex(), carrier.apex(), |e| match e {
        El::Pair(_, x) => x.as_ref().clone(),
        _ => unreachable!(),
    })
    .unwrap();
    let bm = d.lo_comp(&tgt.loose, &carrier).unwrap();
    let ract = FinFun::from_map(bm.apex(), carrier.apex(), |e| match e {
        El::Pair(x, _) => x.as_ref().clone(),
        _ => unreachable!(),
    })
    .unwrap();
    span_bimodule(name, src, tgt, carrier, lact, ract).unwrap()
}

/// The free rank-one Z/2-set as a bimodule; `side` selects which side the
/// group acts on (the other end is the one-point discrete category).
fn z2_free_bim(name: &str, left_acting: bool) -> Bimodule<SpanDbl> {
    let d = SpanDbl;
    let z2 = z2_category();
    let pt = discrete_category("pt", set(&["*"]));
    let carrier = Span::new(
        FinFun::new(set(&["x0", "x1"]), set(&["*"]), vec![0, 0]).unwrap(),
        FinFun::new(set(&["x0", "x1"]), set(&["*"]), vec![0, 0]).unwrap(),
    )
    .unwrap();
    let flip = |x: &El, g: &El| -> El {
        let xi = matches!(x, El::Atom(s) if s == "x1");
        let gi = matches!(g, El::Atom(s) if s == "1");
        if xi ^ gi {
            El::atom("x1")
        } else {
            El::atom("x0")
        }
    };
    if left_acting {
        // source = Z2 acting through the source side
        let ma = d.lo_comp(&carrier, &z2.loose).unwrap();
        let lact = FinFun::from_map(ma.apex(), carrier.apex(), |e| match e {
            El::Pair(g, x) => flip(x, g),
            _ => unreachable!(),
        })
        .unwrap();
        let bm = d.lo_comp(&pt.loose, &carrier).unwrap();
        let ract = FinFun::from_map(bm.apex(), carrier.apex(), |e| match e {
            El::Pair(x, _) => x.as_ref().clone(),
            _ => unreachable!(),
        })
        .unwrap();
        span_bimodule(name, &z2, &pt, carrier, lact, ract).unwrap()
    } else {
        let ma = d.lo_comp(&carrier, &pt.loose).unwrap();
        let lact = FinFun::from_map(ma.apex(), carrier.apex(), |e| match e {
            El::Pair(_, x) => x.as_ref().clone(),
            _ => unreachable!(),
        })
        .unwrap();
        let bm = d.lo_comp(&z2.loose, &carrier).unwrap();
        let ract = FinFun::from_map(bm.apex(), carrier.apex(), |e| match e {
            El::Pair(x, g) => flip(x, g),
            _ => unreachable!(),
        })
        .unwrap();
        span_bimodule(name, &pt, &z2, carrier, lact, ract).unwrap()
    }
}

#[test]
fn fixture_monoids_and_bimodules_are_lawful() {
    let d = SpanDbl;
    for m in [
        discrete_category("d0", set(&[])),
        discrete_category("d1", set(&["0"])),
        discrete_category("d2", set(&["0", "1"])),
        z2_category(),
        arrow_category(),
    ] {
        assert!(check_monoid(&d, &m).unwrap(), "{}", m.name);
    }
    assert!(check_bimodule(&d, &z2_free_bim("zl", true)).unwrap());
    assert!(check_bimodule(&d, &z2_free_bim("zr", false)).unwrap());
}

#[test]
fn local_coequalizers_hold_for_span() {
    let d = SpanDbl;
    let u = span_universe(&d, 2, UniverseCaps::default());
    let r = check_local_coequalizers(&d, &u, None);
    assert!(r.passed(), "{}", r.render_text());
}

#[test]
fn local_coequalizers_trivial_for_mat() {
    let mat = dblcheck_core::instances::mat::MatDbl::new(
        dblcheck_core::instances::mat::Quantale::booleans(),
    )
    .unwrap();
    let u = dblcheck_core::instances::mat::mat_universe(&mat, 2, UniverseCaps::default());
    let r = check_local_coequalizers(&mat, &u, None);
    assert!(r.passed(), "{}", r.render_text());
}

#[test]
fn discrete_composition_is_matrix_of_sets() {
    let d = SpanDbl;
    let u = span_universe(&d, 2, UniverseCaps::default());
    let alg = alg_construction(&d, &u).unwrap();
    let a = discrete_category("A", set(&["0", "1"]));
    let b = discrete_category("B", set(&["0"]));
    let c = discrete_category("C", set(&["0", "1"]));
    // m: A→B with 3 elements, n: B→C with 2
    let m = discrete_bim(
        "m",
        &a,
        &b,
        Span::new(
            FinFun::new(set(&["p", "q", "r"]), a.ob.clone(), vec![0, 0, 1]).unwrap(),
            FinFun::new(set(&["p", "q", "r"]), b.ob.clone(), vec![0, 0, 0]).unwrap(),
        )
        .unwrap(),
    );
    let n = discrete_bim(
        "n",
        &b,
        &c,
        Span::new(
            FinFun::new(set(&["s", "t"]), b.ob.clone(), vec![0, 0]).unwrap(),
            FinFun::new(set(&["s", "t"]), c.ob.clone(), vec![0, 1]).unwrap(),
        )
        .unwrap(),
    );
    let comp = alg.lo_comp(&n, &m).unwrap();
    // over a discrete middle the quotient is trivial: 3 × 2 pairs
    assert_eq!(comp.loose.apex().len(), 6);
    let oracle = profunctor_oracle(&m, &n).unwrap();
    assert_eq!(oracle.loose.apex().len(), 6);
}

#[test]
fn z2_tensor_gives_orbits() {
    let m = z2_free_bim("zl", false); // pt → Z2, group acts on the target side
    let n = z2_free_bim("zr", true); // Z2 → pt, group acts on the source side
    let oracle = profunctor_oracle(&m, &n).unwrap();
    // free ⊗_{Z2} free: 4 pairs collapse to 2 orbits
    assert_eq!(oracle.loose.apex().len(), 2);
    let d = SpanDbl;
    let u = span_universe(&d, 2, UniverseCaps::default());
    let alg = alg_construction(&d, &u).unwrap();
    let comp = alg.lo_comp(&n, &m).unwrap();
    assert_eq!(comp.loose.apex().len(), 2);
}

#[test]
fn oracle_matches_pipeline_on_many_pairs() {
    let d = SpanDbl;
    let u = span_universe(&d, 2, UniverseCaps::default());
    let alg = alg_construction(&d, &u).unwrap();

    let d1 = discrete_category("d1", set(&["0"]));
    let d2 = discrete_category("d2", set(&["0", "1"]));
    let z2 = z2_category();
    let arrow = arrow_category();
    let pt = discrete_category("pt", set(&["*"]));

    let mut pairs: Vec<(Bimodule<SpanDbl>, Bimodule<SpanDbl>)> = Vec::new();
    // unit bimodules composed with themselves and each other
    for mon in [&d1, &d2, &z2, &arrow] {
        let u_bim = alg.unit_bim(mon);
        pairs.push((u_bim.clone(), u_bim.clone()));
    }
    // discrete matrix-of-sets examples
    let m = discrete_bim(
        "m",
        &d2,
        &d1,
        Span::new(
            FinFun::new(set(&["p", "q"]), d2.ob.clone(), vec![0, 1]).unwrap(),
            FinFun::new(set(&["p", "q"]), d1.ob.clone(), vec![0, 0]).unwrap(),
        )
        .unwrap(),
    );
    let n = discrete_bim(
        "n",
        &d1,
        &d2,
        Span::new(
            FinFun::new(set(&["s", "t", "u"]), d1.ob.clone(), vec![0, 0, 0]).unwrap(),
            FinFun::new(set(&["s", "t", "u"]), d2.ob.clone(), vec![0, 1, 1]).unwrap(),
        )
        .unwrap(),
    );
    pairs.push((m.clone(), n.clone()));
    pairs.push((n.clone(), m.clone()));
    pairs.push((m.clone(), alg.unit_bim(&d1)));
    pairs.push((alg.unit_bim(&d2), m.clone()));
    // Z/2 examples
    let zl = z2_free_bim("zl", false);
    let zr = z2_free_bim("zr", true);
    pairs.push((zl.clone(), zr.clone()));
    pairs.push((zl.clone(), alg.unit_bim(&z2)));
    pairs.push((alg.unit_bim(&z2), zr.clone()));
    pairs.push((alg.unit_bim(&z2), alg.unit_bim(&z2)));
    assert!(pairs.len() >= 10, "need at least ten fixture pairs");

    for (m, n) in &pairs {
        let comp = alg.lo_comp(n, m).unwrap();
        let oracle = profunctor_oracle(m, n).unwrap();
        // explicitly construct the comparison and certify it is an
        // invertible equivariant cell
        let cells = alg
            .cells_with_boundary(
                &comp,
                &oracle,
                &alg.id_hom(&m.src),
                &alg.id_hom(&n.tgt),
            )
            .unwrap();
        let iso = cells.iter().find(|c| alg.sq_invert(&c.cell_holder()).is_some());
        assert!(
            iso.is_some(),
            "no invertible comparison between pipeline and oracle for ({}, {})",
            m.name,
            n.name
        );
    }
}

trait CellHolder {
    fn cell_holder(&self) -> Self;
}
impl<T: Clone> CellHolder for T {
    fn cell_holder(&self) -> Self {
        self.clone()
    }
}

#[test]
fn unit_bimodule_laws_via_constructed_unitors() {
    let d = SpanDbl;
    let u = span_universe(&d, 2, UniverseCaps::default());
    let alg = alg_construction(&d, &u).unwrap();
    let z2 = z2_category();
    let zl = z2_free_bim("zl", false);
    for m in [&zl, &alg.unit_bim(&z2)] {
        let l = alg.lunit(m);
        let li = alg.lunit_inv(m);
        assert_eq!(alg.vcomp(&l, &li).unwrap(), alg.sq_id(m));
        assert_eq!(
            alg.vcomp(&li, &l).unwrap(),
            alg.sq_id(&alg.sq_top(&l))
        );
        let r = alg.runit(m);
        let ri = alg.runit_inv(m);
        assert_eq!(alg.vcomp(&r, &ri).unwrap(), alg.sq_id(m));
    }
}

fn alg_universe<'a>(
    alg: &AlgDbl<'a, SpanDbl>,
) -> DblUniverse<AlgDbl<'a, SpanDbl>> {
    let d1 = discrete_category("d1", set(&["0"]));
    let z2 = z2_category();
    let objects = vec![d1.clone(), z2.clone()];
    let mut tights = vec![alg.id_hom(&d1), alg.id_hom(&z2)];
    // the collapse homomorphism Z2 → d1 on the point... Z2's object is
    // {*}, d1's is {0}: use the unique function between them
    let f = FinFun::new(z2.ob.clone(), d1.ob.clone(), vec![0]).unwrap();
    let cell_map = FinFun::new(
        z2.loose.apex().clone(),
        d1.loose.apex().clone(),
        vec![0, 0],
    )
    .unwrap();
    let cell = dblcheck_core::instances::span::SpanCell::new(
        z2.loose.clone(),
        d1.loose.clone(),
        f.clone(),
        f.clone(),
        cell_map,
    )
    .unwrap();
    tights.push(dblcheck_core::instances::alg::AlgHom {
        src: z2.clone(),
        tgt: d1.clone(),
        f,
        cell,
    });
    let zl = z2_free_bim("zl", false);
    let zr = z2_free_bim("zr", true);
    // relocate endpoints: zl is pt→Z2 and zr is Z2→pt with pt ≠ d1 as a
    // value; include pt too
    let pt = discrete_category("pt", set(&["*"]));
    let objects = {
        let mut o = objects;
        o.push(pt.clone());
        o
    };
    let looses = vec![
        alg.unit_bim(&d1),
        alg.unit_bim(&z2),
        alg.unit_bim(&pt),
        zl.clone(),
        zr.clone(),
    ];
    let mut squares = Vec::new();
    for m in &looses {
        squares.push(alg.sq_id(m));
    }
    for t in &tights {
        squares.push(alg.sq_unit(t));
    }
    DblUniverse::derive(
        alg,
        objects,
        tights,
        looses,
        squares,
        UniverseCaps {
            pairs: 60,
            triples: 30,
            quads: 12,
            grids: 40,
        },
    )
}

#[test]
fn alg_double_category_axioms_hold() {
    let r = dblcheck_core::report::with_big_stack(|| {
        let d = SpanDbl;
        let u = span_universe(&d, 2, UniverseCaps::default());
        let alg = alg_construction(&d, &u).unwrap();
        let au = alg_universe(&alg);
        check_double_category(&alg, &au, None)
    });
    assert!(r.passed(), "{}", r.render_text());
}

/// A two-object universe for the heavier monoidal diagrams.
fn alg_mon_universe<'a>(
    alg: &AlgDbl<'a, SpanDbl>,
) -> DblUniverse<AlgDbl<'a, SpanDbl>> {
    let d1 = discrete_category("d1", set(&["0"]));
    let z2 = z2_category();
    // a (Z2, d1)-bimodule: the free rank-one set acted on from the source
    let carrier = Span::new(
        FinFun::new(set(&["x0", "x1"]), z2.ob.clone(), vec![0, 0]).unwrap(),
        FinFun::new(set(&["x0", "x1"]), d1.ob.clone(), vec![0, 0]).unwrap(),
    )
    .unwrap();
    let dd = SpanDbl;
    let ma = dd.lo_comp(&carrier, &z2.loose).unwrap();
    let lact = FinFun::from_map(ma.apex(), carrier.apex(), |e| match e {
        El::Pair(g, x) => {
            let xi = matches!(x.as_ref(), El::Atom(s) if s == "x1");
            let gi = matches!(g.as_ref(), El::Atom(s) if s == "1");
            if xi ^ gi {
                El::atom("x1")
            } else {
                El::atom("x0")
            }
        }
        _ => unreachable!(),
    })
    .unwrap();
    let bm = dd.lo_comp(&d1.loose, &carrier).unwrap();
    let ract = FinFun::from_map(bm.apex(), carrier.apex(), |e| match e {
        El::Pair(x, _) => x.as_ref().clone(),
        _ => unreachable!(),
    })
    .unwrap();
    let zb = span_bimodule("zb", &z2, &d1, carrier, lact, ract).unwrap();
    let objects = vec![d1.clone(), z2.clone()];
    let tights = vec![alg.id_hom(&d1), alg.id_hom(&z2)];
    let looses = vec![alg.unit_bim(&d1), alg.unit_bim(&z2), zb];
    let mut squares = Vec::new();
    for m in &looses {
        squares.push(alg.sq_id(m));
    }
    DblUniverse::derive(
        alg,
        objects,
        tights,
        looses,
        squares,
        UniverseCaps {
            pairs: 24,
            triples: 12,
            quads: 6,
            grids: 12,
        },
    )
}

#[test]
fn alg_monoidal_axioms_hold() {
    let r = dblcheck_core::report::with_big_stack(|| {
        let d = SpanDbl;
        let u = span_universe(&d, 2, UniverseCaps::default());
        let alg = alg_construction(&d, &u).unwrap();
        let au = alg_mon_universe(&alg);
        check_monoidal_double_category(&alg, &au, Level::Symmetric, None).unwrap()
    });
    assert!(r.passed(), "{}", r.render_text());
}
