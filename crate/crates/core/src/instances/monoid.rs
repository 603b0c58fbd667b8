//! One-object double category of a finite commutative monoid: loose cells
//! are the monoid elements, both compositions are the monoid operation,
//! and the only 2-cells are identities. Everything is strict, so the
//! lifted higher cells all collapse to identities.

use crate::dbl::Dbl;
use crate::error::{Error, Result};
use crate::mondbl::{Level, MonDbl};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommMonoidDbl {
    pub names: Vec<String>,
    /// mult[a][b] = a·b, commutative, with two-sided unit.
    pub mult: Vec<Vec<usize>>,
    pub unit: usize,
}

impl CommMonoidDbl {
    pub fn new(names: Vec<String>, mult: Vec<Vec<usize>>, unit: usize) -> Result<Self> {
        let n = names.len();
        for a in 0..n {
            if mult[a][unit] != a || mult[unit][a] != a {
                return Err(Error::SemanticError("unit law fails".into()));
            }
            for b in 0..n {
                if mult[a][b] != mult[b][a] {
                    return Err(Error::NotCommutative);
                }
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(Error::SemanticError("associativity fails".into()));
                    }
                }
            }
        }
        Ok(CommMonoidDbl { names, mult, unit })
    }

    /// The trivial one-element monoid (the terminal double category).
    pub fn trivial() -> Self {
        CommMonoidDbl::new(vec!["e".into()], vec![vec![0]], 0).unwrap()
    }

    /// Z/2 as a commutative monoid.
    pub fn z2() -> Self {
        CommMonoidDbl::new(
            vec!["0".into(), "1".into()],
            vec![vec![0, 1], vec![1, 0]],
            0,
        )
        .unwrap()
    }

    pub fn universe(&self) -> crate::dbl::DblUniverse<Self> {
        let looses: Vec<usize> = (0..self.names.len()).collect();
        let squares: Vec<usize> = looses.clone();
        crate::dbl::DblUniverse::derive(
            self,
            vec![0u8],
            vec![0u8],
            looses,
            squares,
            crate::dbl::UniverseCaps::default(),
        )
    }
}

impl Dbl for CommMonoidDbl {
    type Ob = u8;
    type Ti = u8;
    type Lo = usize;
    /// The identity 2-cell on a loose cell.
    type Sq = usize;

    fn ti_dom(&self, _: &u8) -> u8 {
        0
    }
    fn ti_cod(&self, _: &u8) -> u8 {
        0
    }
    fn lo_src(&self, _: &usize) -> u8 {
        0
    }
    fn lo_tgt(&self, _: &usize) -> u8 {
        0
    }
    fn sq_left(&self, _: &usize) -> u8 {
        0
    }
    fn sq_right(&self, _: &usize) -> u8 {
        0
    }
    fn sq_top(&self, s: &usize) -> usize {
        *s
    }
    fn sq_bot(&self, s: &usize) -> usize {
        *s
    }

    fn ti_id(&self, _: &u8) -> u8 {
        0
    }
    fn ti_comp(&self, _: &u8, _: &u8) -> Result<u8> {
        Ok(0)
    }
    fn ti_inverse(&self, _: &u8) -> Option<u8> {
        Some(0)
    }

    fn lo_unit(&self, _: &u8) -> usize {
        self.unit
    }
    fn lo_comp(&self, n: &usize, m: &usize) -> Result<usize> {
        Ok(self.mult[*n][*m])
    }

    fn sq_id(&self, m: &usize) -> usize {
        *m
    }
    fn sq_unit(&self, _: &u8) -> usize {
        self.unit
    }
    fn vcomp(&self, b: &usize, a: &usize) -> Result<usize> {
        if b != a {
            return Err(Error::BoundaryMismatch("only identity 2-cells".into()));
        }
        Ok(*a)
    }
    fn hcomp(&self, b: &usize, a: &usize) -> Result<usize> {
        Ok(self.mult[*b][*a])
    }

    fn assoc(&self, m: &usize, n: &usize, p: &usize) -> Result<usize> {
        Ok(self.mult[self.mult[*m][*n]][*p])
    }
    fn assoc_inv(&self, m: &usize, n: &usize, p: &usize) -> Result<usize> {
        self.assoc(m, n, p)
    }
    fn lunit(&self, m: &usize) -> usize {
        *m
    }
    fn lunit_inv(&self, m: &usize) -> usize {
        *m
    }
    fn runit(&self, m: &usize) -> usize {
        *m
    }
    fn runit_inv(&self, m: &usize) -> usize {
        *m
    }

    fn sq_invert(&self, s: &usize) -> Option<usize> {
        Some(*s)
    }
    fn cells_with_boundary(
        &self,
        m: &usize,
        n: &usize,
        _f: &u8,
        _g: &u8,
    ) -> Result<Vec<usize>> {
        Ok(if m == n { vec![*m] } else { vec![] })
    }

    fn show_lo(&self, m: &usize) -> String {
        self.names[*m].clone()
    }
    fn show_sq(&self, s: &usize) -> String {
        format!("1_{}", self.names[*s])
    }
}

impl MonDbl for CommMonoidDbl {
    fn tensor_ob(&self, _: &u8, _: &u8) -> u8 {
        0
    }
    fn tensor_ti(&self, _: &u8, _: &u8) -> u8 {
        0
    }
    fn tensor_lo(&self, m: &usize, n: &usize) -> usize {
        self.mult[*m][*n]
    }
    fn tensor_sq(&self, s: &usize, t: &usize) -> usize {
        self.mult[*s][*t]
    }
    fn unit_ob(&self) -> u8 {
        0
    }
    fn x_cell(&self, m1: &usize, n1: &usize, m2: &usize, n2: &usize) -> Result<usize> {
        // (m1⊗n1)⊙(m2⊗n2) = (m1⊙m2)⊗(n1⊙n2) by commutativity
        Ok(self.mult[self.mult[*m1][*n1]][self.mult[*m2][*n2]])
    }
    fn x_cell_inv(&self, m1: &usize, n1: &usize, m2: &usize, n2: &usize) -> Result<usize> {
        self.x_cell(m1, n1, m2, n2)
    }
    fn u_cell(&self, _: &u8, _: &u8) -> usize {
        self.unit
    }
    fn u_cell_inv(&self, _: &u8, _: &u8) -> usize {
        self.unit
    }
    fn massoc(&self, _: &u8, _: &u8, _: &u8) -> u8 {
        0
    }
    fn massoc_inv(&self, _: &u8, _: &u8, _: &u8) -> u8 {
        0
    }
    fn massoc_lo(&self, m: &usize, n: &usize, p: &usize) -> usize {
        self.mult[self.mult[*m][*n]][*p]
    }
    fn massoc_lo_inv(&self, m: &usize, n: &usize, p: &usize) -> usize {
        self.massoc_lo(m, n, p)
    }
    fn mlunit(&self, _: &u8) -> u8 {
        0
    }
    fn mlunit_inv(&self, _: &u8) -> u8 {
        0
    }
    fn mlunit_lo(&self, m: &usize) -> usize {
        *m
    }
    fn mlunit_lo_inv(&self, m: &usize) -> usize {
        *m
    }
    fn mrunit(&self, _: &u8) -> u8 {
        0
    }
    fn mrunit_inv(&self, _: &u8) -> u8 {
        0
    }
    fn mrunit_lo(&self, m: &usize) -> usize {
        *m
    }
    fn mrunit_lo_inv(&self, m: &usize) -> usize {
        *m
    }
    fn level(&self) -> Level {
        Level::Symmetric
    }
    fn braid(&self, _: &u8, _: &u8) -> Result<u8> {
        Ok(0)
    }
    fn braid_inv(&self, _: &u8, _: &u8) -> Result<u8> {
        Ok(0)
    }
    fn braid_lo(&self, m: &usize, n: &usize) -> Result<usize> {
        Ok(self.mult[*m][*n])
    }
    fn braid_lo_inv(&self, m: &usize, n: &usize) -> Result<usize> {
        Ok(self.mult[*m][*n])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::check_double_category;
    use crate::mondbl::check_monoidal_double_category;

    #[test]
    fn z2_is_a_symmetric_monoidal_double_category() {
        let d = CommMonoidDbl::z2();
        let u = d.universe();
        assert!(check_double_category(&d, &u, None).passed());
        let r = check_monoidal_double_category(&d, &u, Level::Symmetric, None).unwrap();
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn noncommutative_monoid_rejected() {
        // S3-flavoured: a·b ≠ b·a
        let r = CommMonoidDbl::new(
            vec!["1".into(), "a".into(), "b".into()],
            vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 2, 0]],
            0,
        );
        assert!(r.is_err());
    }
}
