//! Table-backed monoidal double categories, and the designed fixture of a
//! genuinely lax monoidal functor: its unit comparison is a non-invertible
//! tight cell with no companion, so strong-mode checks and the lifting
//! pipeline must reject it.

use crate::dbl::table::TableDbl;
use crate::dbl::Dbl;
use crate::error::{Error, Result};
use crate::instances::monoid::CommMonoidDbl;
use crate::mondbl::{Laxity, Level, MonDbl, MonDblFun};
use std::collections::BTreeMap;

/// Strict monoidal structure over a thin table double category.
#[derive(Debug, Clone)]
pub struct TableMon {
    pub base: TableDbl,
    pub unit: String,
    pub tensor_ob_tab: BTreeMap<(String, String), String>,
    /// f⊗g for tight pairs not both identities.
    pub tensor_ti_tab: BTreeMap<(String, String), String>,
    /// m⊗n for loose pairs not both units.
    pub tensor_lo_tab: BTreeMap<(String, String), String>,
}

impl TableMon {
    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        if !self.base.thin {
            return Err(Error::SemanticError(
                "monoidal tables require a thin base".into(),
            ));
        }
        let obs = &self.base.objects;
        let ten = |a: &String, b: &String| -> Result<String> {
            self.tensor_ob_tab
                .get(&(a.clone(), b.clone()))
                .cloned()
                .ok_or_else(|| Error::SemanticError(format!("⊗ undefined on ({a},{b})")))
        };
        for a in obs {
            if ten(a, &self.unit)? != *a || ten(&self.unit, a)? != *a {
                return Err(Error::SemanticError(format!(
                    "unit object is not strict at {a}"
                )));
            }
            for b in obs {
                if ten(a, b)? != ten(b, a)? {
                    return Err(Error::SemanticError(format!(
                        "tensor table is not symmetric on ({a},{b})"
                    )));
                }
                for c in obs {
                    if ten(&ten(a, b)?, c)? != ten(a, &ten(b, c)?)? {
                        return Err(Error::SemanticError(format!(
                            "tensor table is not associative on ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        // tight tensor total and boundary-correct
        for f in self.base.all_tights() {
            for g in self.base.all_tights() {
                let fg = self.tensor_ti(&f, &g);
                let want_dom = self.tensor_ob(&self.ti_dom(&f), &self.ti_dom(&g));
                let want_cod = self.tensor_ob(&self.ti_cod(&f), &self.ti_cod(&g));
                if self.ti_dom(&fg) != want_dom || self.ti_cod(&fg) != want_cod {
                    return Err(Error::SemanticError(format!(
                        "tight tensor boundary wrong on ({f},{g})"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl Dbl for TableMon {
    type Ob = String;
    type Ti = String;
    type Lo = String;
    type Sq = String;

    fn ti_dom(&self, f: &String) -> String {
        self.base.ti_dom(f)
    }
    fn ti_cod(&self, f: &String) -> String {
        self.base.ti_cod(f)
    }
    fn lo_src(&self, m: &String) -> String {
        self.base.lo_src(m)
    }
    fn lo_tgt(&self, m: &String) -> String {
        self.base.lo_tgt(m)
    }
    fn sq_left(&self, s: &String) -> String {
        self.base.sq_left(s)
    }
    fn sq_right(&self, s: &String) -> String {
        self.base.sq_right(s)
    }
    fn sq_top(&self, s: &String) -> String {
        self.base.sq_top(s)
    }
    fn sq_bot(&self, s: &String) -> String {
        self.base.sq_bot(s)
    }
    fn ti_id(&self, a: &String) -> String {
        self.base.ti_id(a)
    }
    fn ti_comp(&self, g: &String, f: &String) -> Result<String> {
        self.base.ti_comp(g, f)
    }
    fn ti_inverse(&self, f: &String) -> Option<String> {
        self.base.ti_inverse(f)
    }
    fn lo_unit(&self, a: &String) -> String {
        self.base.lo_unit(a)
    }
    fn lo_comp(&self, n: &String, m: &String) -> Result<String> {
        self.base.lo_comp(n, m)
    }
    fn sq_id(&self, m: &String) -> String {
        self.base.sq_id(m)
    }
    fn sq_unit(&self, f: &String) -> String {
        self.base.sq_unit(f)
    }
    fn vcomp(&self, b: &String, a: &String) -> Result<String> {
        self.base.vcomp(b, a)
    }
    fn hcomp(&self, b: &String, a: &String) -> Result<String> {
        self.base.hcomp(b, a)
    }
    fn assoc(&self, m: &String, n: &String, p: &String) -> Result<String> {
        self.base.assoc(m, n, p)
    }
    fn assoc_inv(&self, m: &String, n: &String, p: &String) -> Result<String> {
        self.base.assoc_inv(m, n, p)
    }
    fn lunit(&self, m: &String) -> String {
        self.base.lunit(m)
    }
    fn lunit_inv(&self, m: &String) -> String {
        self.base.lunit_inv(m)
    }
    fn runit(&self, m: &String) -> String {
        self.base.runit(m)
    }
    fn runit_inv(&self, m: &String) -> String {
        self.base.runit_inv(m)
    }
    fn sq_invert(&self, s: &String) -> Option<String> {
        self.base.sq_invert(s)
    }
    fn cells_with_boundary(
        &self,
        m: &String,
        n: &String,
        f: &String,
        g: &String,
    ) -> Result<Vec<String>> {
        self.base.cells_with_boundary(m, n, f, g)
    }
    fn show_ob(&self, a: &String) -> String {
        a.clone()
    }
    fn show_ti(&self, f: &String) -> String {
        f.clone()
    }
    fn show_lo(&self, m: &String) -> String {
        m.clone()
    }
    fn show_sq(&self, s: &String) -> String {
        s.clone()
    }
}

impl MonDbl for TableMon {
    fn tensor_ob(&self, a: &String, b: &String) -> String {
        self.tensor_ob_tab
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(|| panic!("⊗ undefined on objects ({a},{b})"))
    }
    fn tensor_ti(&self, f: &String, g: &String) -> String {
        if let (Some(a), Some(b)) = (f.strip_prefix("1_"), g.strip_prefix("1_")) {
            if self.base.objects.iter().any(|o| o == a)
                && self.base.objects.iter().any(|o| o == b)
            {
                return self.ti_id(&self.tensor_ob(&a.to_string(), &b.to_string()));
            }
        }
        self.tensor_ti_tab
            .get(&(f.clone(), g.clone()))
            .cloned()
            .unwrap_or_else(|| panic!("⊗ undefined on tights ({f},{g})"))
    }
    fn tensor_lo(&self, m: &String, n: &String) -> String {
        if let (Some(a), Some(b)) = (m.strip_prefix("U_"), n.strip_prefix("U_")) {
            if self.base.objects.iter().any(|o| o == a)
                && self.base.objects.iter().any(|o| o == b)
            {
                return self.lo_unit(&self.tensor_ob(&a.to_string(), &b.to_string()));
            }
        }
        self.tensor_lo_tab
            .get(&(m.clone(), n.clone()))
            .cloned()
            .unwrap_or_else(|| panic!("⊗ undefined on looses ({m},{n})"))
    }
    fn tensor_sq(&self, s: &String, t: &String) -> String {
        // thin: resolve by the tensored boundary
        let top = self.tensor_lo(&self.sq_top(s), &self.sq_top(t));
        let bot = self.tensor_lo(&self.sq_bot(s), &self.sq_bot(t));
        let left = self.tensor_ti(&self.sq_left(s), &self.sq_left(t));
        let right = self.tensor_ti(&self.sq_right(s), &self.sq_right(t));
        for cand in self.base.all_squares() {
            if self.sq_top(&cand) == top
                && self.sq_bot(&cand) == bot
                && self.sq_left(&cand) == left
                && self.sq_right(&cand) == right
            {
                return cand;
            }
        }
        panic!("⊗ undefined on 2-cells ({s},{t})")
    }
    fn unit_ob(&self) -> String {
        self.unit.clone()
    }
    fn x_cell(&self, m1: &String, n1: &String, m2: &String, n2: &String) -> Result<String> {
        let c = self.lo_comp(&self.tensor_lo(m1, n1), &self.tensor_lo(m2, n2))?;
        Ok(self.sq_id(&c))
    }
    fn x_cell_inv(&self, m1: &String, n1: &String, m2: &String, n2: &String) -> Result<String> {
        self.x_cell(m1, n1, m2, n2)
    }
    fn u_cell(&self, a: &String, b: &String) -> String {
        self.sq_id(&self.lo_unit(&self.tensor_ob(a, b)))
    }
    fn u_cell_inv(&self, a: &String, b: &String) -> String {
        self.u_cell(a, b)
    }
    fn massoc(&self, a: &String, b: &String, c: &String) -> String {
        self.ti_id(&self.tensor_ob(&self.tensor_ob(a, b), c))
    }
    fn massoc_inv(&self, a: &String, b: &String, c: &String) -> String {
        self.massoc(a, b, c)
    }
    fn massoc_lo(&self, m: &String, n: &String, p: &String) -> String {
        self.sq_id(&self.tensor_lo(&self.tensor_lo(m, n), p))
    }
    fn massoc_lo_inv(&self, m: &String, n: &String, p: &String) -> String {
        self.massoc_lo(m, n, p)
    }
    fn mlunit(&self, a: &String) -> String {
        self.ti_id(a)
    }
    fn mlunit_inv(&self, a: &String) -> String {
        self.ti_id(a)
    }
    fn mlunit_lo(&self, m: &String) -> String {
        self.sq_id(m)
    }
    fn mlunit_lo_inv(&self, m: &String) -> String {
        self.sq_id(m)
    }
    fn mrunit(&self, a: &String) -> String {
        self.ti_id(a)
    }
    fn mrunit_inv(&self, a: &String) -> String {
        self.ti_id(a)
    }
    fn mrunit_lo(&self, m: &String) -> String {
        self.sq_id(m)
    }
    fn mrunit_lo_inv(&self, m: &String) -> String {
        self.sq_id(m)
    }
    fn level(&self) -> Level {
        Level::Symmetric
    }
    fn braid(&self, a: &String, b: &String) -> Result<String> {
        Ok(self.ti_id(&self.tensor_ob(a, b)))
    }
    fn braid_inv(&self, a: &String, b: &String) -> Result<String> {
        self.braid(a, b)
    }
    fn braid_lo(&self, m: &String, n: &String) -> Result<String> {
        Ok(self.sq_id(&self.tensor_lo(m, n)))
    }
    fn braid_lo_inv(&self, m: &String, n: &String) -> Result<String> {
        self.braid_lo(m, n)
    }
}

/// The lax-fixture codomain: objects X ≤ Y with tensor = join, one
/// non-invertible tight cell t: X → Y, and only unit loose cells.
pub fn lax_codomain() -> TableMon {
    let mut base = TableDbl::default();
    base.thin = true;
    base.objects = vec!["X".into(), "Y".into()];
    base.tights.insert("t".into(), ("X".into(), "Y".into()));

    let mut tensor_ob_tab = BTreeMap::new();
    for (a, b, c) in [
        ("X", "X", "X"),
        ("X", "Y", "Y"),
        ("Y", "X", "Y"),
        ("Y", "Y", "Y"),
    ] {
        tensor_ob_tab.insert((a.to_string(), b.to_string()), c.to_string());
    }
    let mut tensor_ti_tab = BTreeMap::new();
    for (f, g, h) in [
        ("t", "t", "t"),
        ("t", "1_X", "t"),
        ("1_X", "t", "t"),
        ("t", "1_Y", "1_Y"),
        ("1_Y", "t", "1_Y"),
    ] {
        tensor_ti_tab.insert((f.to_string(), g.to_string()), h.to_string());
    }
    TableMon {
        base,
        unit: "X".into(),
        tensor_ob_tab,
        tensor_ti_tab,
        tensor_lo_tab: BTreeMap::new(),
    }
}

/// A genuinely lax monoidal functor from the terminal double category into
/// `lax_codomain`: the unit comparison is t, which has no inverse and no
/// companion, so the strong check and the lifting pipeline reject it.
pub fn lax_functor<'x>(
    s: &'x CommMonoidDbl,
    e: &'x TableMon,
) -> MonDblFun<'x, CommMonoidDbl, TableMon> {
    let fun = crate::dbl::DblFun {
        name: "laxfix".into(),
        ob: Box::new(|_: &u8| "Y".to_string()),
        ti: Box::new(|_: &u8| "1_Y".to_string()),
        lo: Box::new(|_: &usize| "U_Y".to_string()),
        sq: Box::new(|_: &usize| "1_U_Y".to_string()),
        comp: Box::new(|_, _| "1_U_Y".to_string()),
        comp_inv: Box::new(|_, _| "1_U_Y".to_string()),
        unit: Box::new(|_| "1_U_Y".to_string()),
        unit_inv: Box::new(|_| "1_U_Y".to_string()),
    };
    let _ = (s, e);
    MonDblFun {
        fun,
        laxity: Laxity::Lax,
        phi_ob: Box::new(|_, _| "1_Y".to_string()),
        phi_lo: Box::new(|_, _| "1_U_Y".to_string()),
        phi_u: "t".to_string(),
        phi_ob_inv: None,
        phi_lo_inv: None,
        phi_u_inv: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::{DblUniverse, UniverseCaps};
    use crate::mondbl::{check_monoidal_double_category, check_monoidal_double_functor};

    fn universe(d: &CommMonoidDbl) -> DblUniverse<CommMonoidDbl> {
        d.universe()
    }

    #[test]
    fn codomain_is_symmetric_monoidal() {
        let e = lax_codomain();
        e.validate().unwrap();
        let u = DblUniverse::derive(
            &e,
            e.base.objects.clone(),
            e.base.all_tights(),
            e.base.all_looses(),
            e.base.all_squares(),
            UniverseCaps::default(),
        );
        let r = check_monoidal_double_category(&e, &u, Level::Symmetric, None).unwrap();
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn lax_passes_strong_fails() {
        let s = CommMonoidDbl::trivial();
        let e = lax_codomain();
        let u = universe(&s);
        let ff = lax_functor(&s, &e);
        let r = check_monoidal_double_functor(&s, &e, &ff, &u, None);
        assert!(r.passed(), "{}", r.render_text());

        let mut strong = lax_functor(&s, &e);
        strong.laxity = Laxity::Strong;
        let r = check_monoidal_double_functor(&s, &e, &strong, &u, None);
        assert!(!r.passed());
        let fam = r.check("monfun.strong").unwrap();
        assert!(fam.failures > 0);
    }

    #[test]
    fn t_has_no_companion() {
        let e = lax_codomain();
        let cands = e.base.all_looses();
        let found =
            crate::companion::search_companions(&e, &"t".to_string(), &cands).unwrap();
        assert!(found.is_empty());
    }
}
