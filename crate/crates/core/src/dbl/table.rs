//! Table-backed double categories.
//!
//! Cells are names; identities and units are generated with the reserved
//! prefixes `1_` and `U_`, so `1_U_A` is both the identity square on `U_A`
//! and the unit square on `1_A` (they coincide by the axioms, and the
//! engine canonicalizes to the identity-square form). Table instances are
//! strict: the constraint cells are identity squares, and construction
//! validates that `⊙` really is strictly associative and unital.

use super::Dbl;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SqInfo {
    pub top: String,
    pub bot: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TableDbl {
    pub objects: Vec<String>,
    /// name → (dom, cod); generated identities not included.
    pub tights: BTreeMap<String, (String, String)>,
    /// name → (src, tgt); generated units not included.
    pub looses: BTreeMap<String, (String, String)>,
    /// name → boundary; generated identity/unit squares not included.
    pub squares: BTreeMap<String, SqInfo>,
    /// (g, f) → g∘f on named tights.
    pub ti_comp_tab: BTreeMap<(String, String), String>,
    /// (n, m) → n⊙m on named looses.
    pub lo_comp_tab: BTreeMap<(String, String), String>,
    /// (b, a) → b∘a on named squares (unused when `thin`).
    pub vcomp_tab: BTreeMap<(String, String), String>,
    /// (b, a) → b⊙a on named squares (unused when `thin`).
    pub hcomp_tab: BTreeMap<(String, String), String>,
    /// Thin instances have at most one 2-cell per square boundary, and
    /// 2-cell composition resolves by boundary lookup.
    pub thin: bool,
}

fn reserved(name: &str) -> bool {
    name.starts_with("1_") || name.starts_with("U_")
}

impl TableDbl {
    fn is_object(&self, name: &str) -> bool {
        self.objects.iter().any(|o| o == name)
    }

    fn tid(a: &str) -> String {
        format!("1_{a}")
    }

    fn uname(a: &str) -> String {
        format!("U_{a}")
    }

    /// Identity tight? Returns the object.
    fn as_tid<'s>(&self, name: &'s str) -> Option<&'s str> {
        name.strip_prefix("1_").filter(|o| self.is_object(o))
    }

    /// Unit loose? Returns the object.
    fn as_unit_lo<'s>(&self, name: &'s str) -> Option<&'s str> {
        name.strip_prefix("U_").filter(|o| self.is_object(o))
    }

    /// Identity square `1_<loose>`? Returns the loose name.
    fn as_sq_id<'s>(&self, name: &'s str) -> Option<&'s str> {
        name.strip_prefix("1_")
            .filter(|m| self.looses.contains_key(*m) || self.as_unit_lo(m).is_some())
    }

    /// Unit square `U_<tight>` on a named (non-identity) tight.
    fn as_sq_unit<'s>(&self, name: &'s str) -> Option<&'s str> {
        name.strip_prefix("U_").filter(|f| self.tights.contains_key(*f))
    }

    fn lo_bounds(&self, m: &str) -> Result<(String, String)> {
        if let Some(a) = self.as_unit_lo(m) {
            return Ok((a.to_string(), a.to_string()));
        }
        self.looses
            .get(m)
            .cloned()
            .ok_or_else(|| Error::SemanticError(format!("unknown loose cell {m}")))
    }

    fn ti_bounds(&self, f: &str) -> Result<(String, String)> {
        if let Some(a) = self.as_tid(f) {
            return Ok((a.to_string(), a.to_string()));
        }
        self.tights
            .get(f)
            .cloned()
            .ok_or_else(|| Error::SemanticError(format!("unknown tight cell {f}")))
    }

    fn sq_info(&self, s: &str) -> Result<SqInfo> {
        if let Some(m) = self.as_sq_id(s) {
            let (a, b) = self.lo_bounds(m)?;
            return Ok(SqInfo {
                top: m.to_string(),
                bot: m.to_string(),
                left: Self::tid(&a),
                right: Self::tid(&b),
            });
        }
        if let Some(f) = self.as_sq_unit(s) {
            let (a, b) = self.ti_bounds(f)?;
            return Ok(SqInfo {
                top: Self::uname(&a),
                bot: Self::uname(&b),
                left: f.to_string(),
                right: f.to_string(),
            });
        }
        self.squares
            .get(s)
            .cloned()
            .ok_or_else(|| Error::SemanticError(format!("unknown 2-cell {s}")))
    }

    /// All square names, generated ones included.
    pub fn all_squares(&self) -> Vec<String> {
        let mut out: Vec<String> = self.squares.keys().cloned().collect();
        for m in self.looses.keys() {
            out.push(format!("1_{m}"));
        }
        for a in &self.objects {
            out.push(format!("1_U_{a}"));
        }
        for f in self.tights.keys() {
            out.push(format!("U_{f}"));
        }
        out.sort();
        out
    }

    pub fn all_tights(&self) -> Vec<String> {
        let mut out: Vec<String> = self.tights.keys().cloned().collect();
        for a in &self.objects {
            out.push(Self::tid(a));
        }
        out.sort();
        out
    }

    pub fn all_looses(&self) -> Vec<String> {
        let mut out: Vec<String> = self.looses.keys().cloned().collect();
        for a in &self.objects {
            out.push(Self::uname(a));
        }
        out.sort();
        out
    }

    /// Validate boundaries, name hygiene, totality of the composition
    /// tables on composable named pairs, and strictness of ⊙.
    pub fn validate(&self) -> Result<()> {
        for name in self
            .tights
            .keys()
            .chain(self.looses.keys())
            .chain(self.squares.keys())
        {
            if reserved(name) {
                return Err(Error::SemanticError(format!(
                    "name {name} uses a reserved prefix (1_ or U_)"
                )));
            }
        }
        for o in &self.objects {
            if reserved(o) {
                return Err(Error::SemanticError(format!(
                    "object {o} uses a reserved prefix"
                )));
            }
        }
        for (f, (a, b)) in &self.tights {
            if !self.is_object(a) || !self.is_object(b) {
                return Err(Error::SemanticError(format!(
                    "tight {f} has unknown boundary {a} -> {b}"
                )));
            }
        }
        for (m, (a, b)) in &self.looses {
            if !self.is_object(a) || !self.is_object(b) {
                return Err(Error::SemanticError(format!(
                    "loose {m} has unknown boundary {a} -> {b}"
                )));
            }
        }
        // eq:square-shaped boundary coherence for every declared 2-cell.
        for (s, info) in &self.squares {
            let (ts, tt) = self.lo_bounds(&info.top)?;
            let (bs, bt) = self.lo_bounds(&info.bot)?;
            let (ld, lc) = self.ti_bounds(&info.left)?;
            let (rd, rc) = self.ti_bounds(&info.right)?;
            if ts != ld || tt != rd || bs != lc || bt != rc {
                return Err(Error::SemanticError(format!(
                    "2-cell {s} has an incoherent square boundary: \
                     top {}: {ts}→{tt}, bottom {}: {bs}→{bt}, left {}: {ld}→{lc}, right {}: {rd}→{rc}",
                    info.top, info.bot, info.left, info.right
                )));
            }
        }
        // Totality and boundary-correctness of the tables.
        let tights = self.all_tights();
        for g in &tights {
            for f in &tights {
                let (gd, _) = self.ti_bounds(g)?;
                let (_, fc) = self.ti_bounds(f)?;
                if gd == fc {
                    let h = self.ti_comp(g, f)?;
                    let (hd, hc) = self.ti_bounds(&h)?;
                    let (fd, _) = self.ti_bounds(f)?;
                    let (_, gc) = self.ti_bounds(g)?;
                    if hd != fd || hc != gc {
                        return Err(Error::SemanticError(format!(
                            "tight composite {g}∘{f} = {h} has the wrong boundary"
                        )));
                    }
                }
            }
        }
        let looses = self.all_looses();
        for n in &looses {
            for m in &looses {
                let (ns, _) = self.lo_bounds(n)?;
                let (_, mt) = self.lo_bounds(m)?;
                if ns == mt {
                    let nm = self.lo_comp_name(n, m)?;
                    let (s, t) = self.lo_bounds(&nm)?;
                    if s != self.lo_bounds(m)?.0 || t != self.lo_bounds(n)?.1 {
                        return Err(Error::SemanticError(format!(
                            "loose composite {n}⊙{m} = {nm} has the wrong boundary"
                        )));
                    }
                }
            }
        }
        // 2-cell composition must be total on composable pairs.
        let squares = self.all_squares();
        for b in &squares {
            for a in &squares {
                let ia = self.sq_info(a)?;
                let ib = self.sq_info(b)?;
                if ib.top == ia.bot {
                    self.vcomp(b, a)?;
                }
                if self.lo_bounds(&ib.top)?.0 == self.lo_bounds(&ia.top)?.1
                    && ib.left == ia.right
                {
                    self.hcomp(b, a)?;
                }
            }
        }
        // Strictness of ⊙ (tables model strict instances only).
        for p in &looses {
            for n in &looses {
                for m in &looses {
                    let ok = self.lo_bounds(n).unwrap().0 == self.lo_bounds(m).unwrap().1
                        && self.lo_bounds(p).unwrap().0 == self.lo_bounds(n).unwrap().1;
                    if ok {
                        let l = self.lo_comp_name(&self.lo_comp_name(p, n)?, m)?;
                        let r = self.lo_comp_name(p, &self.lo_comp_name(n, m)?)?;
                        if l != r {
                            return Err(Error::SemanticError(format!(
                                "⊙ is not strictly associative on ({p},{n},{m}); \
                                 table instances must be strict"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The unique square with the given boundary, in thin mode.
    fn by_boundary(&self, info: &SqInfo) -> Result<String> {
        let mut found = None;
        for s in self.all_squares() {
            if &self.sq_info(&s)? == info {
                if found.is_some() {
                    return Err(Error::SemanticError(format!(
                        "thin instance has two 2-cells with boundary {info:?}"
                    )));
                }
                found = Some(s);
            }
        }
        found.ok_or_else(|| {
            Error::UnresolvableUniverse(format!("no 2-cell with boundary {info:?}"))
        })
    }

    fn lo_comp_name(&self, n: &str, m: &str) -> Result<String> {
        if self.as_unit_lo(m).is_some() {
            return Ok(n.to_string());
        }
        if self.as_unit_lo(n).is_some() {
            return Ok(m.to_string());
        }
        self.lo_comp_tab
            .get(&(n.to_string(), m.to_string()))
            .cloned()
            .ok_or_else(|| Error::UnresolvableUniverse(format!("⊙ undefined on ({n},{m})")))
    }
}

impl Dbl for TableDbl {
    type Ob = String;
    type Ti = String;
    type Lo = String;
    type Sq = String;

    fn ti_dom(&self, f: &String) -> String {
        self.ti_bounds(f).expect("tight boundary").0
    }
    fn ti_cod(&self, f: &String) -> String {
        self.ti_bounds(f).expect("tight boundary").1
    }
    fn lo_src(&self, m: &String) -> String {
        self.lo_bounds(m).expect("loose boundary").0
    }
    fn lo_tgt(&self, m: &String) -> String {
        self.lo_bounds(m).expect("loose boundary").1
    }
    fn sq_left(&self, s: &String) -> String {
        self.sq_info(s).expect("square boundary").left
    }
    fn sq_right(&self, s: &String) -> String {
        self.sq_info(s).expect("square boundary").right
    }
    fn sq_top(&self, s: &String) -> String {
        self.sq_info(s).expect("square boundary").top
    }
    fn sq_bot(&self, s: &String) -> String {
        self.sq_info(s).expect("square boundary").bot
    }

    fn ti_id(&self, a: &String) -> String {
        Self::tid(a)
    }

    fn ti_comp(&self, g: &String, f: &String) -> Result<String> {
        let (gd, _) = self.ti_bounds(g)?;
        let (_, fc) = self.ti_bounds(f)?;
        if gd != fc {
            return Err(Error::BoundaryMismatch(format!("{g}∘{f}")));
        }
        if self.as_tid(f).is_some() {
            return Ok(g.clone());
        }
        if self.as_tid(g).is_some() {
            return Ok(f.clone());
        }
        self.ti_comp_tab
            .get(&(g.clone(), f.clone()))
            .cloned()
            .ok_or_else(|| Error::UnresolvableUniverse(format!("∘ undefined on ({g},{f})")))
    }

    fn ti_inverse(&self, f: &String) -> Option<String> {
        if let Some(a) = self.as_tid(f) {
            return Some(Self::tid(a));
        }
        let (d, c) = self.ti_bounds(f).ok()?;
        for g in self.all_tights() {
            let (gd, gc) = self.ti_bounds(&g).ok()?;
            if gd != c || gc != d {
                continue;
            }
            if self.ti_comp(&g, f) == Ok(Self::tid(&d)) && self.ti_comp(f, &g) == Ok(Self::tid(&c))
            {
                return Some(g);
            }
        }
        None
    }

    fn lo_unit(&self, a: &String) -> String {
        Self::uname(a)
    }

    fn lo_comp(&self, n: &String, m: &String) -> Result<String> {
        let (ns, _) = self.lo_bounds(n)?;
        let (_, mt) = self.lo_bounds(m)?;
        if ns != mt {
            return Err(Error::BoundaryMismatch(format!("{n}⊙{m}")));
        }
        self.lo_comp_name(n, m)
    }

    fn sq_id(&self, m: &String) -> String {
        format!("1_{m}")
    }

    fn sq_unit(&self, f: &String) -> String {
        match self.as_tid(f) {
            Some(a) => format!("1_U_{a}"),
            None => format!("U_{f}"),
        }
    }

    fn vcomp(&self, b: &String, a: &String) -> Result<String> {
        let ia = self.sq_info(a)?;
        let ib = self.sq_info(b)?;
        if ib.top != ia.bot {
            return Err(Error::BoundaryMismatch(format!("{b}∘{a}")));
        }
        if self.as_sq_id(a).is_some() {
            return Ok(b.clone());
        }
        if self.as_sq_id(b).is_some() {
            return Ok(a.clone());
        }
        if let (Some(f), Some(g)) = (self.as_sq_unit(a), self.as_sq_unit(b)) {
            return Ok(self.sq_unit(&self.ti_comp(&g.to_string(), &f.to_string())?));
        }
        if self.thin {
            return self.by_boundary(&SqInfo {
                top: ia.top,
                bot: ib.bot,
                left: self.ti_comp(&ib.left, &ia.left)?,
                right: self.ti_comp(&ib.right, &ia.right)?,
            });
        }
        self.vcomp_tab
            .get(&(b.clone(), a.clone()))
            .cloned()
            .ok_or_else(|| Error::UnresolvableUniverse(format!("∘ undefined on 2-cells ({b},{a})")))
    }

    fn hcomp(&self, b: &String, a: &String) -> Result<String> {
        let ia = self.sq_info(a)?;
        let ib = self.sq_info(b)?;
        if self.lo_bounds(&ib.top)?.0 != self.lo_bounds(&ia.top)?.1 || ib.left != ia.right {
            return Err(Error::BoundaryMismatch(format!("{b}⊙{a}")));
        }
        // strict unit square absorbed on either side
        if a == &self.sq_unit(&ib.left) {
            return Ok(b.clone());
        }
        if b == &self.sq_unit(&ia.right) {
            return Ok(a.clone());
        }
        if let (Some(m), Some(n)) = (self.as_sq_id(a), self.as_sq_id(b)) {
            return Ok(self.sq_id(&self.lo_comp(&n.to_string(), &m.to_string())?));
        }
        if self.thin {
            return self.by_boundary(&SqInfo {
                top: self.lo_comp(&ib.top, &ia.top)?,
                bot: self.lo_comp(&ib.bot, &ia.bot)?,
                left: ia.left,
                right: ib.right,
            });
        }
        self.hcomp_tab
            .get(&(b.clone(), a.clone()))
            .cloned()
            .ok_or_else(|| Error::UnresolvableUniverse(format!("⊙ undefined on 2-cells ({b},{a})")))
    }

    fn assoc(&self, m: &String, n: &String, p: &String) -> Result<String> {
        let c = self.lo_comp(&self.lo_comp(m, n)?, p)?;
        Ok(self.sq_id(&c))
    }
    fn assoc_inv(&self, m: &String, n: &String, p: &String) -> Result<String> {
        self.assoc(m, n, p)
    }
    fn lunit(&self, m: &String) -> String {
        self.sq_id(m)
    }
    fn lunit_inv(&self, m: &String) -> String {
        self.sq_id(m)
    }
    fn runit(&self, m: &String) -> String {
        self.sq_id(m)
    }
    fn runit_inv(&self, m: &String) -> String {
        self.sq_id(m)
    }

    fn sq_invert(&self, s: &String) -> Option<String> {
        let info = self.sq_info(s).ok()?;
        if self.as_sq_id(s).is_some() {
            return Some(s.clone());
        }
        for t in self.all_squares() {
            let it = self.sq_info(&t).ok()?;
            if it.top != info.bot || it.bot != info.top {
                continue;
            }
            if self.vcomp(&t, s) == Ok(self.sq_id(&info.top))
                && self.vcomp(s, &t) == Ok(self.sq_id(&info.bot))
            {
                return Some(t);
            }
        }
        None
    }

    fn cells_with_boundary(
        &self,
        m: &String,
        n: &String,
        f: &String,
        g: &String,
    ) -> Result<Vec<String>> {
        let want = SqInfo {
            top: m.clone(),
            bot: n.clone(),
            left: f.clone(),
            right: g.clone(),
        };
        let mut out = Vec::new();
        for s in self.all_squares() {
            if self.sq_info(&s)? == want {
                out.push(s);
            }
        }
        Ok(out)
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::{check_double_category, DblUniverse, UniverseCaps};

    /// One object, one idempotent tight cell t, one loose cell v that is a
    /// companion of t. Thin: one 2-cell per inhabited boundary.
    pub fn idempotent_fixture() -> TableDbl {
        let mut d = TableDbl::default();
        d.thin = true;
        d.objects = vec!["A".into()];
        d.tights.insert("t".into(), ("A".into(), "A".into()));
        d.ti_comp_tab.insert(("t".into(), "t".into()), "t".into());
        d.looses.insert("v".into(), ("A".into(), "A".into()));
        d.lo_comp_tab.insert(("v".into(), "v".into()), "v".into());
        // Implicit: 1_U_A (U→U over (1,1)) and U_t (U→U over (t,t)),
        // 1_v (v→v over (1,1)).
        for (name, top, bot, left, right) in [
            ("eta", "U_A", "v", "1_A", "t"),
            ("eps", "v", "U_A", "t", "1_A"),
            ("uv", "U_A", "v", "t", "t"),
            ("ve", "v", "U_A", "t", "t"),
            ("ev", "v", "v", "t", "t"),
            ("e1", "v", "v", "t", "1_A"),
            ("e2", "v", "v", "1_A", "t"),
        ] {
            d.squares.insert(
                name.into(),
                SqInfo {
                    top: top.into(),
                    bot: bot.into(),
                    left: left.into(),
                    right: right.into(),
                },
            );
        }
        d
    }

    #[test]
    fn validates() {
        idempotent_fixture().validate().unwrap();
    }

    #[test]
    fn rejects_bad_square_boundary() {
        let mut d = idempotent_fixture();
        d.squares.insert(
            "bad".into(),
            SqInfo {
                top: "v".into(),
                bot: "v".into(),
                left: "1_A".into(),
                right: "t".into(),
            },
        );
        // top v: A→A needs dom(right) = A; boundary objects agree here, so
        // corrupt harder: left boundary of a cell whose bottom starts at B.
        d.objects.push("B".into());
        d.looses.insert("w".into(), ("B".into(), "B".into()));
        d.squares.insert(
            "worse".into(),
            SqInfo {
                top: "v".into(),
                bot: "w".into(),
                left: "1_A".into(),
                right: "1_A".into(),
            },
        );
        assert!(matches!(d.validate(), Err(Error::SemanticError(_))));
    }

    #[test]
    fn axioms_hold() {
        let d = idempotent_fixture();
        let u = DblUniverse::derive(
            &d,
            d.objects.clone(),
            d.all_tights(),
            d.all_looses(),
            d.all_squares(),
            UniverseCaps::default(),
        );
        let report = check_double_category(&d, &u, None);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn unit_square_of_identity_is_canonical() {
        let d = idempotent_fixture();
        assert_eq!(d.sq_unit(&"1_A".to_string()), "1_U_A");
        assert_eq!(d.sq_id(&"U_A".to_string()), "1_U_A");
    }
}
