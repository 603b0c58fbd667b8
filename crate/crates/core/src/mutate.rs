//! Mutation harness: wrap a monoidal double category and corrupt a single
//! constraint-cell family, to confirm the checkers can fail.
//!
//! The corruption post-composes the true constraint with a nontrivial
//! globular automorphism of its target whenever one exists; where the
//! hom-posets are too thin for that, the constraint is replaced by a cell
//! with a mismatched source, which the diagram evaluation surfaces as an
//! error witness.

use crate::dbl::Dbl;
use crate::error::Result;
use crate::mondbl::{Level, MonDbl};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    XCell,
    UCell,
    AssocLo,
    LunitLo,
    RunitLo,
    BraidLo,
}

pub const ALL_MUTATIONS: [Mutation; 6] = [
    Mutation::XCell,
    Mutation::UCell,
    Mutation::AssocLo,
    Mutation::LunitLo,
    Mutation::RunitLo,
    Mutation::BraidLo,
];

pub struct Mutated<'a, D: MonDbl> {
    pub base: &'a D,
    pub target: Mutation,
}

impl<'a, D: MonDbl> Mutated<'a, D> {
    pub fn new(base: &'a D, target: Mutation) -> Self {
        Mutated { base, target }
    }

    /// Twist a globular cell by a nontrivial automorphism of its target.
    fn corrupt(&self, c: D::Sq) -> D::Sq {
        let n = self.base.sq_bot(&c);
        if let Ok(autos) = self.base.globular_between(&n, &n) {
            for t in autos {
                if t != self.base.sq_id(&n) && self.base.sq_invert(&t).is_some() {
                    if let Ok(bad) = self.base.vcomp(&t, &c) {
                        return bad;
                    }
                }
            }
        }
        // rigid target: no twist exists, so break the boundary instead;
        // diagram evaluation then fails with a composition-error witness
        self.base.sq_id(&self.base.lo_unit(&self.base.unit_ob()))
    }
}

macro_rules! delegate_dbl {
    () => {
        type Ob = D::Ob;
        type Ti = D::Ti;
        type Lo = D::Lo;
        type Sq = D::Sq;

        fn ti_dom(&self, f: &D::Ti) -> D::Ob {
            self.base.ti_dom(f)
        }
        fn ti_cod(&self, f: &D::Ti) -> D::Ob {
            self.base.ti_cod(f)
        }
        fn lo_src(&self, m: &D::Lo) -> D::Ob {
            self.base.lo_src(m)
        }
        fn lo_tgt(&self, m: &D::Lo) -> D::Ob {
            self.base.lo_tgt(m)
        }
        fn sq_left(&self, s: &D::Sq) -> D::Ti {
            self.base.sq_left(s)
        }
        fn sq_right(&self, s: &D::Sq) -> D::Ti {
            self.base.sq_right(s)
        }
        fn sq_top(&self, s: &D::Sq) -> D::Lo {
            self.base.sq_top(s)
        }
        fn sq_bot(&self, s: &D::Sq) -> D::Lo {
            self.base.sq_bot(s)
        }
        fn ti_id(&self, a: &D::Ob) -> D::Ti {
            self.base.ti_id(a)
        }
        fn ti_comp(&self, g: &D::Ti, f: &D::Ti) -> Result<D::Ti> {
            self.base.ti_comp(g, f)
        }
        fn ti_inverse(&self, f: &D::Ti) -> Option<D::Ti> {
            self.base.ti_inverse(f)
        }
        fn lo_unit(&self, a: &D::Ob) -> D::Lo {
            self.base.lo_unit(a)
        }
        fn lo_comp(&self, n: &D::Lo, m: &D::Lo) -> Result<D::Lo> {
            self.base.lo_comp(n, m)
        }
        fn sq_id(&self, m: &D::Lo) -> D::Sq {
            self.base.sq_id(m)
        }
        fn sq_unit(&self, f: &D::Ti) -> D::Sq {
            self.base.sq_unit(f)
        }
        fn vcomp(&self, b: &D::Sq, a: &D::Sq) -> Result<D::Sq> {
            self.base.vcomp(b, a)
        }
        fn hcomp(&self, b: &D::Sq, a: &D::Sq) -> Result<D::Sq> {
            self.base.hcomp(b, a)
        }
        fn assoc(&self, m: &D::Lo, n: &D::Lo, p: &D::Lo) -> Result<D::Sq> {
            self.base.assoc(m, n, p)
        }
        fn assoc_inv(&self, m: &D::Lo, n: &D::Lo, p: &D::Lo) -> Result<D::Sq> {
            self.base.assoc_inv(m, n, p)
        }
        fn lunit(&self, m: &D::Lo) -> D::Sq {
            self.base.lunit(m)
        }
        fn lunit_inv(&self, m: &D::Lo) -> D::Sq {
            self.base.lunit_inv(m)
        }
        fn runit(&self, m: &D::Lo) -> D::Sq {
            self.base.runit(m)
        }
        fn runit_inv(&self, m: &D::Lo) -> D::Sq {
            self.base.runit_inv(m)
        }
        fn sq_invert(&self, s: &D::Sq) -> Option<D::Sq> {
            self.base.sq_invert(s)
        }
        fn cells_with_boundary(
            &self,
            m: &D::Lo,
            n: &D::Lo,
            f: &D::Ti,
            g: &D::Ti,
        ) -> Result<Vec<D::Sq>> {
            self.base.cells_with_boundary(m, n, f, g)
        }
        fn show_ob(&self, a: &D::Ob) -> String {
            self.base.show_ob(a)
        }
        fn show_ti(&self, f: &D::Ti) -> String {
            self.base.show_ti(f)
        }
        fn show_lo(&self, m: &D::Lo) -> String {
            self.base.show_lo(m)
        }
        fn show_sq(&self, s: &D::Sq) -> String {
            self.base.show_sq(s)
        }
    };
}

impl<'a, D: MonDbl> Dbl for Mutated<'a, D> {
    delegate_dbl!();
}

impl<'a, D: MonDbl> MonDbl for Mutated<'a, D> {
    fn tensor_ob(&self, a: &D::Ob, b: &D::Ob) -> D::Ob {
        self.base.tensor_ob(a, b)
    }
    fn tensor_ti(&self, f: &D::Ti, g: &D::Ti) -> D::Ti {
        self.base.tensor_ti(f, g)
    }
    fn tensor_lo(&self, m: &D::Lo, n: &D::Lo) -> D::Lo {
        self.base.tensor_lo(m, n)
    }
    fn tensor_sq(&self, s: &D::Sq, t: &D::Sq) -> D::Sq {
        self.base.tensor_sq(s, t)
    }
    fn unit_ob(&self) -> D::Ob {
        self.base.unit_ob()
    }

    fn x_cell(&self, m1: &D::Lo, n1: &D::Lo, m2: &D::Lo, n2: &D::Lo) -> Result<D::Sq> {
        let c = self.base.x_cell(m1, n1, m2, n2)?;
        Ok(if self.target == Mutation::XCell {
            self.corrupt(c)
        } else {
            c
        })
    }
    fn x_cell_inv(&self, m1: &D::Lo, n1: &D::Lo, m2: &D::Lo, n2: &D::Lo) -> Result<D::Sq> {
        self.base.x_cell_inv(m1, n1, m2, n2)
    }
    fn u_cell(&self, a: &D::Ob, b: &D::Ob) -> D::Sq {
        let c = self.base.u_cell(a, b);
        if self.target == Mutation::UCell {
            self.corrupt(c)
        } else {
            c
        }
    }
    fn u_cell_inv(&self, a: &D::Ob, b: &D::Ob) -> D::Sq {
        self.base.u_cell_inv(a, b)
    }

    fn massoc(&self, a: &D::Ob, b: &D::Ob, c: &D::Ob) -> D::Ti {
        self.base.massoc(a, b, c)
    }
    fn massoc_inv(&self, a: &D::Ob, b: &D::Ob, c: &D::Ob) -> D::Ti {
        self.base.massoc_inv(a, b, c)
    }
    fn massoc_lo(&self, m: &D::Lo, n: &D::Lo, p: &D::Lo) -> D::Sq {
        let c = self.base.massoc_lo(m, n, p);
        if self.target == Mutation::AssocLo {
            self.corrupt(c)
        } else {
            c
        }
    }
    fn massoc_lo_inv(&self, m: &D::Lo, n: &D::Lo, p: &D::Lo) -> D::Sq {
        self.base.massoc_lo_inv(m, n, p)
    }
    fn mlunit(&self, a: &D::Ob) -> D::Ti {
        self.base.mlunit(a)
    }
    fn mlunit_inv(&self, a: &D::Ob) -> D::Ti {
        self.base.mlunit_inv(a)
    }
    fn mlunit_lo(&self, m: &D::Lo) -> D::Sq {
        let c = self.base.mlunit_lo(m);
        if self.target == Mutation::LunitLo {
            self.corrupt(c)
        } else {
            c
        }
    }
    fn mlunit_lo_inv(&self, m: &D::Lo) -> D::Sq {
        self.base.mlunit_lo_inv(m)
    }
    fn mrunit(&self, a: &D::Ob) -> D::Ti {
        self.base.mrunit(a)
    }
    fn mrunit_inv(&self, a: &D::Ob) -> D::Ti {
        self.base.mrunit_inv(a)
    }
    fn mrunit_lo(&self, m: &D::Lo) -> D::Sq {
        let c = self.base.mrunit_lo(m);
        if self.target == Mutation::RunitLo {
            self.corrupt(c)
        } else {
            c
        }
    }
    fn mrunit_lo_inv(&self, m: &D::Lo) -> D::Sq {
        self.base.mrunit_lo_inv(m)
    }

    fn level(&self) -> Level {
        self.base.level()
    }
    fn braid(&self, a: &D::Ob, b: &D::Ob) -> Result<D::Ti> {
        self.base.braid(a, b)
    }
    fn braid_inv(&self, a: &D::Ob, b: &D::Ob) -> Result<D::Ti> {
        self.base.braid_inv(a, b)
    }
    fn braid_lo(&self, m: &D::Lo, n: &D::Lo) -> Result<D::Sq> {
        let c = self.base.braid_lo(m, n)?;
        Ok(if self.target == Mutation::BraidLo {
            self.corrupt(c)
        } else {
            c
        })
    }
    fn braid_lo_inv(&self, m: &D::Lo, n: &D::Lo) -> Result<D::Sq> {
        self.base.braid_lo_inv(m, n)
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::{DblUniverse, UniverseCaps};
    use crate::instances::span::{span_universe, SpanDbl};
    use crate::mondbl::check_monoidal_double_category;

    #[test]
    fn every_mutation_is_caught_on_span() {
        let d = SpanDbl;
        let u0 = span_universe(&d, 2, UniverseCaps::default());
        for target in ALL_MUTATIONS {
            let m = Mutated::new(&d, target);
            let u = DblUniverse::derive(
                &m,
                u0.objects.clone(),
                u0.tights.clone(),
                u0.looses.clone(),
                u0.squares.clone(),
                UniverseCaps::default(),
            );
            let report =
                check_monoidal_double_category(&m, &u, crate::mondbl::Level::Symmetric, None)
                    .unwrap();
            assert!(
                !report.passed(),
                "mutation {target:?} was not caught by any diagram"
            );
            // at least one named family carries a witness
            assert!(report
                .checks
                .iter()
                .any(|c| c.failures > 0 && !c.witnesses.is_empty()));
        }
    }
}
