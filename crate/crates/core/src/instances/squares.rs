//! The squares double category of a finite category: tight and loose
//! 1-cells are both the morphisms, and a 2-cell is a commuting square.
//! Strict, thin, and every tight cell has itself as a companion.

use crate::dbl::{Dbl, DblUniverse, UniverseCaps};
use crate::error::{Error, Result};
use crate::finbase::{check_category, FinCategory};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquaresDbl {
    pub cat: FinCategory,
}

/// A commuting square (top, bot, left, right): right∘top = bot∘left.
pub type Square = (usize, usize, usize, usize);

/// Spec-level constructor with the category validity precondition.
pub fn square_double(cat: FinCategory) -> Result<SquaresDbl> {
    let r = check_category(&cat);
    if !r.passed() {
        return Err(Error::InvalidCategory(r.render_text()));
    }
    Ok(SquaresDbl { cat })
}

impl SquaresDbl {
    fn commutes(&self, top: usize, bot: usize, left: usize, right: usize) -> bool {
        self.cat.dom(top) == self.cat.dom(left)
            && self.cat.cod(top) == self.cat.dom(right)
            && self.cat.dom(bot) == self.cat.cod(left)
            && self.cat.cod(bot) == self.cat.cod(right)
            && self.cat.compose(right, top) == self.cat.compose(bot, left)
    }

    pub fn square(&self, top: usize, bot: usize, left: usize, right: usize) -> Result<Square> {
        if self.commutes(top, bot, left, right) {
            Ok((top, bot, left, right))
        } else {
            Err(Error::BoundaryMismatch(format!(
                "square ({top},{bot},{left},{right}) does not commute"
            )))
        }
    }

    fn name(&self, a: usize) -> &str {
        &self.cat.arrows[a].0
    }
}

impl Dbl for SquaresDbl {
    type Ob = usize;
    type Ti = usize;
    type Lo = usize;
    type Sq = Square;

    fn ti_dom(&self, f: &usize) -> usize {
        self.cat.dom(*f)
    }
    fn ti_cod(&self, f: &usize) -> usize {
        self.cat.cod(*f)
    }
    fn lo_src(&self, m: &usize) -> usize {
        self.cat.dom(*m)
    }
    fn lo_tgt(&self, m: &usize) -> usize {
        self.cat.cod(*m)
    }
    fn sq_left(&self, s: &Square) -> usize {
        s.2
    }
    fn sq_right(&self, s: &Square) -> usize {
        s.3
    }
    fn sq_top(&self, s: &Square) -> usize {
        s.0
    }
    fn sq_bot(&self, s: &Square) -> usize {
        s.1
    }

    fn ti_id(&self, a: &usize) -> usize {
        self.cat.ids[*a]
    }
    fn ti_comp(&self, g: &usize, f: &usize) -> Result<usize> {
        self.cat
            .compose(*g, *f)
            .ok_or_else(|| Error::BoundaryMismatch(format!("{}∘{}", self.name(*g), self.name(*f))))
    }
    fn ti_inverse(&self, f: &usize) -> Option<usize> {
        let d = self.cat.dom(*f);
        let c = self.cat.cod(*f);
        (0..self.cat.arrows.len()).find(|&g| {
            self.cat.compose(g, *f) == Some(self.cat.ids[d])
                && self.cat.compose(*f, g) == Some(self.cat.ids[c])
        })
    }

    fn lo_unit(&self, a: &usize) -> usize {
        self.cat.ids[*a]
    }
    fn lo_comp(&self, n: &usize, m: &usize) -> Result<usize> {
        self.ti_comp(n, m)
    }

    fn sq_id(&self, m: &usize) -> Square {
        (
            *m,
            *m,
            self.cat.ids[self.cat.dom(*m)],
            self.cat.ids[self.cat.cod(*m)],
        )
    }
    fn sq_unit(&self, f: &usize) -> Square {
        (
            self.cat.ids[self.cat.dom(*f)],
            self.cat.ids[self.cat.cod(*f)],
            *f,
            *f,
        )
    }

    fn vcomp(&self, b: &Square, a: &Square) -> Result<Square> {
        if a.1 != b.0 {
            return Err(Error::BoundaryMismatch("squares do not stack".into()));
        }
        self.square(a.0, b.1, self.ti_comp(&b.2, &a.2)?, self.ti_comp(&b.3, &a.3)?)
    }

    fn hcomp(&self, b: &Square, a: &Square) -> Result<Square> {
        if a.3 != b.2 {
            return Err(Error::BoundaryMismatch("squares do not paste".into()));
        }
        self.square(
            self.lo_comp(&b.0, &a.0)?,
            self.lo_comp(&b.1, &a.1)?,
            a.2,
            b.3,
        )
    }

    fn assoc(&self, m: &usize, n: &usize, p: &usize) -> Result<Square> {
        Ok(self.sq_id(&self.lo_comp(&self.lo_comp(m, n)?, p)?))
    }
    fn assoc_inv(&self, m: &usize, n: &usize, p: &usize) -> Result<Square> {
        self.assoc(m, n, p)
    }
    fn lunit(&self, m: &usize) -> Square {
        self.sq_id(m)
    }
    fn lunit_inv(&self, m: &usize) -> Square {
        self.sq_id(m)
    }
    fn runit(&self, m: &usize) -> Square {
        self.sq_id(m)
    }
    fn runit_inv(&self, m: &usize) -> Square {
        self.sq_id(m)
    }

    fn sq_invert(&self, s: &Square) -> Option<Square> {
        let li = self.ti_inverse(&s.2)?;
        let ri = self.ti_inverse(&s.3)?;
        if self.commutes(s.1, s.0, li, ri) {
            Some((s.1, s.0, li, ri))
        } else {
            None
        }
    }

    fn cells_with_boundary(
        &self,
        m: &usize,
        n: &usize,
        f: &usize,
        g: &usize,
    ) -> Result<Vec<Square>> {
        if self.commutes(*m, *n, *f, *g) {
            Ok(vec![(*m, *n, *f, *g)])
        } else {
            Ok(vec![])
        }
    }

    fn show_ob(&self, a: &usize) -> String {
        self.cat.objects[*a].clone()
    }
    fn show_ti(&self, f: &usize) -> String {
        self.name(*f).to_string()
    }
    fn show_lo(&self, m: &usize) -> String {
        self.name(*m).to_string()
    }
    fn show_sq(&self, s: &Square) -> String {
        format!(
            "⟦{}⇒{} over {},{}⟧",
            self.name(s.0),
            self.name(s.1),
            self.name(s.2),
            self.name(s.3)
        )
    }
}

pub fn squares_universe(d: &SquaresDbl, caps: UniverseCaps) -> DblUniverse<SquaresDbl> {
    let objects: Vec<usize> = (0..d.cat.objects.len()).collect();
    let arrows: Vec<usize> = (0..d.cat.arrows.len()).collect();
    let mut squares = Vec::new();
    for t in &arrows {
        for b in &arrows {
            for l in &arrows {
                for r in &arrows {
                    if d.commutes(*t, *b, *l, *r) {
                        squares.push((*t, *b, *l, *r));
                    }
                }
            }
        }
    }
    DblUniverse::derive(d, objects, arrows.clone(), arrows, squares, caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::check_double_category;

    #[test]
    fn terminal_is_trivial() {
        let d = square_double(FinCategory::terminal()).unwrap();
        let u = squares_universe(&d, UniverseCaps::default());
        assert_eq!(u.objects.len(), 1);
        assert!(check_double_category(&d, &u, None).passed());
    }

    #[test]
    fn z2_axioms_hold() {
        let d = square_double(FinCategory::z2()).unwrap();
        let u = squares_universe(&d, UniverseCaps::default());
        let report = check_double_category(&d, &u, None);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn non_commuting_square_rejected() {
        let d = square_double(FinCategory::z2()).unwrap();
        // top=1, bot=1, left=g, right=1: 1∘1 = 1 ≠ 1∘g = g
        assert!(d.square(0, 0, 1, 0).is_err());
        assert!(d.square(0, 0, 1, 1).is_ok());
    }

    #[test]
    fn invalid_category_rejected() {
        let mut bad = FinCategory::z2();
        bad.comp.insert((1, 0), 0);
        assert!(matches!(
            square_double(bad),
            Err(Error::InvalidCategory(_))
        ));
    }
}
