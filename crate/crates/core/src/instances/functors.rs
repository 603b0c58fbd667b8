//! The relation functor Span(FinSet) → Mat(Q): a span maps to the matrix
//! marking which pairs are connected through the apex. Strong monoidal; on
//! the Boolean quantale it is the usual span-to-relation collapse.

use crate::dbl::{Dbl, DblFun};
use crate::finbase::FinFun;
use crate::instances::mat::{MatDbl, QMat};
use crate::instances::span::{Span, SpanDbl};
use crate::mondbl::{Laxity, MonDbl, MonDblFun};

/// The matrix of a span: unit where some apex element connects a to b.
pub fn span_relation(d: &MatDbl, m: &Span) -> QMat {
    let mut out = QMat::constant(&m.left.cod, &m.right.cod, d.q.bottom);
    for x in 0..m.apex().len() {
        out.entries[m.right.table[x]][m.left.table[x]] = d.q.unit;
    }
    out
}

pub fn span_to_mat<'x>(mat: &'x MatDbl) -> DblFun<'x, SpanDbl, MatDbl> {
    DblFun {
        name: "relation".into(),
        ob: Box::new(|a| a.clone()),
        ti: Box::new(|f| f.clone()),
        lo: Box::new(move |m| span_relation(mat, m)),
        sq: Box::new(move |c| {
            // a span map forces containment of relations
            mat.cell(
                &span_relation(mat, &c.src),
                &span_relation(mat, &c.dst),
                &c.f,
                &c.g,
            )
            .expect("span map image is an inequality cell")
        }),
        comp: Box::new(move |m, n| {
            // relation composition equals the relation of the pullback
            let sd = SpanDbl;
            let lhs = mat
                .lo_comp(&span_relation(mat, m), &span_relation(mat, n))
                .expect("composable");
            let rhs = span_relation(mat, &sd.lo_comp(m, n).expect("composable"));
            mat.cell(
                &lhs,
                &rhs,
                &FinFun::identity(&lhs.src),
                &FinFun::identity(&lhs.dst),
            )
            .expect("relation composition agrees with pullback image")
        }),
        comp_inv: Box::new(move |m, n| {
            let sd = SpanDbl;
            let lhs = span_relation(mat, &sd.lo_comp(m, n).expect("composable"));
            let rhs = mat
                .lo_comp(&span_relation(mat, m), &span_relation(mat, n))
                .expect("composable");
            mat.cell(
                &lhs,
                &rhs,
                &FinFun::identity(&lhs.src),
                &FinFun::identity(&lhs.dst),
            )
            .expect("relation composition agrees with pullback image")
        }),
        unit: Box::new(move |a| mat.sq_id(&mat.lo_unit(a))),
        unit_inv: Box::new(move |a| mat.sq_id(&mat.lo_unit(a))),
    }
}

/// The relation functor with its (strict) strong monoidal structure.
pub fn span_to_mat_monoidal<'x>(mat: &'x MatDbl) -> MonDblFun<'x, SpanDbl, MatDbl> {
    let sd = SpanDbl;
    MonDblFun {
        fun: span_to_mat(mat),
        laxity: Laxity::Strong,
        phi_ob: Box::new(move |a, b| FinFun::identity(&a.product(b))),
        phi_lo: Box::new(move |m, n| {
            let lhs = mat.tensor_lo(&span_relation(mat, m), &span_relation(mat, n));
            let rhs = span_relation(mat, &sd.tensor_lo(m, n));
            mat.cell(
                &lhs,
                &rhs,
                &FinFun::identity(&lhs.src),
                &FinFun::identity(&lhs.dst),
            )
            .expect("relation of a product span is the Kronecker product")
        }),
        phi_u: FinFun::identity(&MonDbl::unit_ob(&SpanDbl)),
        phi_ob_inv: Some(Box::new(move |a, b| FinFun::identity(&a.product(b)))),
        phi_lo_inv: Some(Box::new(move |m, n| {
            let lhs = span_relation(mat, &sd.tensor_lo(m, n));
            let rhs = mat.tensor_lo(&span_relation(mat, m), &span_relation(mat, n));
            mat.cell(
                &lhs,
                &rhs,
                &FinFun::identity(&lhs.src),
                &FinFun::identity(&lhs.dst),
            )
            .expect("relation of a product span is the Kronecker product")
        })),
        phi_u_inv: Some(FinFun::identity(&MonDbl::unit_ob(&SpanDbl))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::companion::{check_companion, map_companion, theta};
    use crate::dbl::UniverseCaps;
    use crate::finbase::FinSet;
    use crate::instances::mat::Quantale;
    use crate::instances::span::span_universe;
    use crate::mondbl::check_monoidal_double_functor;

    #[test]
    fn relation_functor_is_strong_monoidal() {
        let mat = MatDbl::new(Quantale::booleans()).unwrap();
        let ff = span_to_mat_monoidal(&mat);
        let u = span_universe(&SpanDbl, 2, UniverseCaps::default());
        let r = check_monoidal_double_functor(&SpanDbl, &mat, &ff, &u, None);
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn companion_maps_to_matrix_companion() {
        let mat = MatDbl::new(Quantale::booleans()).unwrap();
        let ff = span_to_mat(&mat);
        let two = FinSet::from_atoms(&["0", "1"]).unwrap();
        let one = FinSet::from_atoms(&["0"]).unwrap();
        let f = FinFun::new(two.clone(), one, vec![0, 0]).unwrap();
        let hat = Span::graph(&f);
        let p = crate::companion::search_companions(&SpanDbl, &f, &[hat])
            .unwrap()
            .pop()
            .unwrap();
        let fp = map_companion(&mat, &ff, &SpanDbl, &p);
        assert!(check_companion(&mat, &fp).unwrap());
        assert_eq!(fp.hat, QMat::characteristic(&mat.q, &f));
    }

    #[test]
    fn theta_commutes_with_the_functor() {
        // θ of the images equals the image of θ
        let mat = MatDbl::new(Quantale::booleans()).unwrap();
        let ff = span_to_mat(&mat);
        let two = FinSet::from_atoms(&["0", "1"]).unwrap();
        let id = FinFun::identity(&two);
        let p = crate::companion::search_companions(&SpanDbl, &id, &[Span::graph(&id)])
            .unwrap()
            .pop()
            .unwrap();
        // relabelled second companion
        let apex = FinSet::new(
            two.elems()
                .iter()
                .map(|e| crate::finbase::El::pair(e.clone(), e.clone()))
                .collect(),
        )
        .unwrap();
        let l = FinFun::new(apex.clone(), two.clone(), vec![0, 1]).unwrap();
        let q = crate::companion::search_companions(
            &SpanDbl,
            &id,
            &[Span::new(l.clone(), l).unwrap()],
        )
        .unwrap()
        .pop()
        .unwrap();
        let th = theta(&SpanDbl, &p, &q).unwrap();
        let lhs = (ff.sq)(&th);
        let rhs = theta(
            &mat,
            &map_companion(&mat, &ff, &SpanDbl, &p),
            &map_companion(&mat, &ff, &SpanDbl, &q),
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn functor_unit_constraint_is_theta() {
        // F_U at A equals θ(canonical companion of 1_{FA} → image companion)
        let mat = MatDbl::new(Quantale::booleans()).unwrap();
        let ff = span_to_mat(&mat);
        let two = FinSet::from_atoms(&["0", "1"]).unwrap();
        let lhs = (ff.unit)(&two);
        let p = crate::companion::identity_companion(&SpanDbl, &two);
        let fp = map_companion(&mat, &ff, &SpanDbl, &p);
        let rhs = theta(&mat, &crate::companion::identity_companion(&mat, &two), &fp).unwrap();
        assert_eq!(lhs, rhs);
    }
}
