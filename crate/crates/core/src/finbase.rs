//! Canonical finite sets, functions and categories, with the chosen
//! pullback and coequalizer that drive the span and bimodule instances.
//!
//! Everything here is a value: construction fixes the element order once,
//! and all operations are pure, so results compare by structural equality.

use crate::error::{Error, Result};
use crate::report::{Family, Report};
use std::fmt;

/// An element label: an atom or a canonical pair of labels.
///
/// Pairs are produced by pullbacks and cartesian products, so apexes of
/// composite spans carry their provenance in the label itself.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum El {
    Atom(String),
    Pair(Box<El>, Box<El>),
}

impl El {
    pub fn atom(s: impl Into<String>) -> El {
        El::Atom(s.into())
    }

    pub fn pair(a: El, b: El) -> El {
        El::Pair(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for El {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            El::Atom(s) => write!(f, "{s}"),
            El::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// A finite set with a fixed, duplicate-free element order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinSet {
    elems: Vec<El>,
}

impl FinSet {
    /// Build a set from labels in the given order; duplicates are rejected.
    pub fn new(elems: Vec<El>) -> Result<FinSet> {
        for (i, e) in elems.iter().enumerate() {
            if elems[..i].contains(e) {
                return Err(Error::DuplicateLabel(e.to_string()));
            }
        }
        Ok(FinSet { elems })
    }

    pub fn from_atoms<S: Into<String> + Clone>(labels: &[S]) -> Result<FinSet> {
        FinSet::new(labels.iter().cloned().map(|s| El::atom(s)).collect())
    }

    pub fn empty() -> FinSet {
        FinSet { elems: vec![] }
    }

    pub fn singleton(e: El) -> FinSet {
        FinSet { elems: vec![e] }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[El] {
        &self.elems
    }

    pub fn index_of(&self, e: &El) -> Option<usize> {
        self.elems.iter().position(|x| x == e)
    }

    /// Cartesian product with pair labels, ordered lexicographically by
    /// (index in self, index in other).
    pub fn product(&self, other: &FinSet) -> FinSet {
        let mut elems = Vec::with_capacity(self.len() * other.len());
        for a in &self.elems {
            for b in &other.elems {
                elems.push(El::pair(a.clone(), b.clone()));
            }
        }
        FinSet { elems }
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A total function between finite sets, tabulated by element index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinFun {
    pub dom: FinSet,
    pub cod: FinSet,
    /// table[i] = index in cod of the image of dom element i.
    pub table: Vec<usize>,
}

impl FinFun {
    pub fn new(dom: FinSet, cod: FinSet, table: Vec<usize>) -> Result<FinFun> {
        if table.len() != dom.len() {
            return Err(Error::BoundaryMismatch(format!(
                "function table has {} entries for a domain of size {}",
                table.len(),
                dom.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&i| i >= cod.len()) {
            return Err(Error::BoundaryMismatch(format!(
                "table entry {bad} outside codomain of size {}",
                cod.len()
            )));
        }
        Ok(FinFun { dom, cod, table })
    }

    pub fn identity(a: &FinSet) -> FinFun {
        FinFun {
            dom: a.clone(),
            cod: a.clone(),
            table: (0..a.len()).collect(),
        }
    }

    /// Build from an element-level mapping.
    pub fn from_map(dom: &FinSet, cod: &FinSet, f: impl Fn(&El) -> El) -> Result<FinFun> {
        let mut table = Vec::with_capacity(dom.len());
        for e in dom.elems() {
            let img = f(e);
            let idx = cod.index_of(&img).ok_or_else(|| {
                Error::BoundaryMismatch(format!("image {img} not in codomain {cod}"))
            })?;
            table.push(idx);
        }
        Ok(FinFun {
            dom: dom.clone(),
            cod: cod.clone(),
            table,
        })
    }

    pub fn apply_idx(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn apply(&self, e: &El) -> Option<&El> {
        self.dom.index_of(e).map(|i| &self.cod.elems()[self.table[i]])
    }

    pub fn is_bijection(&self) -> bool {
        if self.dom.len() != self.cod.len() {
            return false;
        }
        let mut seen = vec![false; self.cod.len()];
        for &i in &self.table {
            if seen[i] {
                return false;
            }
            seen[i] = true;
        }
        true
    }

    pub fn inverse(&self) -> Option<FinFun> {
        if !self.is_bijection() {
            return None;
        }
        let mut table = vec![0; self.cod.len()];
        for (i, &j) in self.table.iter().enumerate() {
            table[j] = i;
        }
        Some(FinFun {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            table,
        })
    }

    /// Pointwise pairing: dom must agree; lands in cod1 × cod2.
    pub fn pair(&self, other: &FinFun) -> Result<FinFun> {
        if self.dom != other.dom {
            return Err(Error::BoundaryMismatch(
                "pairing requires a common domain".into(),
            ));
        }
        let cod = self.cod.product(&other.cod);
        let w = other.cod.len();
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(&i, &j)| i * w + j)
            .collect();
        FinFun::new(self.dom.clone(), cod, table)
    }

    /// Product of two functions on product sets.
    pub fn product(&self, other: &FinFun) -> FinFun {
        let dom = self.dom.product(&other.dom);
        let cod = self.cod.product(&other.cod);
        let w_dom = other.dom.len();
        let w_cod = other.cod.len();
        let mut table = Vec::with_capacity(dom.len());
        for i in 0..self.dom.len() {
            for j in 0..w_dom {
                table.push(self.table[i] * w_cod + other.table[j]);
            }
        }
        FinFun { dom, cod, table }
    }
}

/// g ∘ f, defined when cod(f) = dom(g).
pub fn compose_functions(g: &FinFun, f: &FinFun) -> Result<FinFun> {
    if f.cod != g.dom {
        return Err(Error::BoundaryMismatch(format!(
            "cod {} of the first function differs from dom {} of the second",
            f.cod, g.dom
        )));
    }
    Ok(FinFun {
        dom: f.dom.clone(),
        cod: g.cod.clone(),
        table: f.table.iter().map(|&i| g.table[i]).collect(),
    })
}

/// The labels of `canonical_finset` become atoms in the given order.
pub fn canonical_finset(labels: &[&str]) -> Result<FinSet> {
    FinSet::from_atoms(labels)
}

/// Chosen pullback of f: X→Z, g: Y→Z.
///
/// The apex is the literal set of agreeing pairs (x, y), ordered
/// lexicographically by (index of x, index of y), so equal inputs always
/// produce the identical apex value.
pub fn pullback(f: &FinFun, g: &FinFun) -> Result<(FinSet, FinFun, FinFun)> {
    if f.cod != g.cod {
        return Err(Error::BoundaryMismatch(format!(
            "pullback legs land in different sets: {} vs {}",
            f.cod, g.cod
        )));
    }
    let mut elems = Vec::new();
    let mut p_table = Vec::new();
    let mut q_table = Vec::new();
    for (i, x) in f.dom.elems().iter().enumerate() {
        for (j, y) in g.dom.elems().iter().enumerate() {
            if f.table[i] == g.table[j] {
                elems.push(El::pair(x.clone(), y.clone()));
                p_table.push(i);
                q_table.push(j);
            }
        }
    }
    let apex = FinSet { elems };
    let p = FinFun {
        dom: apex.clone(),
        cod: f.dom.clone(),
        table: p_table,
    };
    let q = FinFun {
        dom: apex.clone(),
        cod: g.dom.clone(),
        table: q_table,
    };
    Ok((apex, p, q))
}

/// Disjoint-set forest used for quotient computations.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, i: usize) -> usize {
        let mut root = i;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut i = i;
        while self.parent[i] != root {
            let next = self.parent[i];
            self.parent[i] = root;
            i = next;
        }
        root
    }

    /// Union keeping the least index as representative.
    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return;
        }
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
    }
}

/// Coequalizer of a parallel pair f, g: X → Y.
///
/// Q is the quotient of Y by the relation generated by f(x) ~ g(x); each
/// class is labelled by its least-index member, and q sends an element to
/// its class representative's label.
pub fn coequalizer(f: &FinFun, g: &FinFun) -> Result<(FinSet, FinFun)> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::BoundaryMismatch(
            "coequalizer needs a parallel pair".into(),
        ));
    }
    let y = &f.cod;
    let mut uf = UnionFind::new(y.len());
    for i in 0..f.dom.len() {
        uf.union(f.table[i], g.table[i]);
    }
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = vec![0usize; y.len()];
    for i in 0..y.len() {
        let r = uf.find(i);
        let pos = match reps.iter().position(|&x| x == r) {
            Some(p) => p,
            None => {
                reps.push(r);
                reps.len() - 1
            }
        };
        class_of[i] = pos;
    }
    let q_set = FinSet {
        elems: reps.iter().map(|&r| y.elems()[r].clone()).collect(),
    };
    let q = FinFun {
        dom: y.clone(),
        cod: q_set.clone(),
        table: class_of,
    };
    Ok((q_set, q))
}

/// Enumerate all functions dom → cod in lexicographic table order.
pub fn all_functions(dom: &FinSet, cod: &FinSet) -> Vec<FinFun> {
    let n = dom.len();
    let m = cod.len();
    if n == 0 {
        return vec![FinFun {
            dom: dom.clone(),
            cod: cod.clone(),
            table: vec![],
        }];
    }
    if m == 0 {
        return vec![];
    }
    let total = m.checked_pow(n as u32).expect("function space too large");
    let mut out = Vec::with_capacity(total);
    let mut table = vec![0usize; n];
    loop {
        out.push(FinFun {
            dom: dom.clone(),
            cod: cod.clone(),
            table: table.clone(),
        });
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            table[k] += 1;
            if table[k] < m {
                break;
            }
            table[k] = 0;
        }
    }
}

/// A finite category presented by tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    pub objects: Vec<String>,
    /// (name, dom index, cod index), identities included.
    pub arrows: Vec<(String, usize, usize)>,
    /// comp[(g, f)] = g∘f by arrow index.
    pub comp: std::collections::BTreeMap<(usize, usize), usize>,
    /// identity arrow index per object.
    pub ids: Vec<usize>,
}

impl FinCategory {
    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|(n, _, _)| n == name)
    }

    pub fn dom(&self, a: usize) -> usize {
        self.arrows[a].1
    }

    pub fn cod(&self, a: usize) -> usize {
        self.arrows[a].2
    }

    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        if self.cod(f) != self.dom(g) {
            return None;
        }
        self.comp.get(&(g, f)).copied()
    }

    /// The terminal category.
    pub fn terminal() -> FinCategory {
        FinCategory {
            objects: vec!["*".into()],
            arrows: vec![("1".into(), 0, 0)],
            comp: [((0, 0), 0)].into(),
            ids: vec![0],
        }
    }

    /// A finite monoid as a one-object category; table[g][f] = g∘f.
    pub fn from_monoid(names: &[&str], unit: usize, table: &[Vec<usize>]) -> FinCategory {
        let mut comp = std::collections::BTreeMap::new();
        for g in 0..names.len() {
            for f in 0..names.len() {
                comp.insert((g, f), table[g][f]);
            }
        }
        FinCategory {
            objects: vec!["*".into()],
            arrows: names.iter().map(|n| (n.to_string(), 0, 0)).collect(),
            comp,
            ids: vec![unit],
        }
    }

    /// The group Z/2 as a one-object category.
    pub fn z2() -> FinCategory {
        FinCategory::from_monoid(&["1", "g"], 0, &[vec![0, 1], vec![1, 0]])
    }
}

/// Verify totality on composable pairs, associativity and unit laws.
pub fn check_category(c: &FinCategory) -> Report {
    let mut report = Report::new();

    let mut fam = Family::new("category.totality");
    for g in 0..c.arrows.len() {
        for f in 0..c.arrows.len() {
            if c.cod(f) == c.dom(g) {
                let key = format!("{}∘{}", c.arrows[g].0, c.arrows[f].0);
                match c.comp.get(&(g, f)) {
                    Some(&h) => {
                        let ok = c.dom(h) == c.dom(f) && c.cod(h) == c.cod(g);
                        fam.record(&key, ok, || {
                            format!("composite {} has wrong boundary", c.arrows[h].0)
                        });
                    }
                    None => fam.record(&key, false, || "no composite defined".into()),
                }
            }
        }
    }
    report.checks.push(fam.finish());

    let mut fam = Family::new("category.associativity");
    for h in 0..c.arrows.len() {
        for g in 0..c.arrows.len() {
            for f in 0..c.arrows.len() {
                if c.cod(f) == c.dom(g) && c.cod(g) == c.dom(h) {
                    let key = format!(
                        "{}∘{}∘{}",
                        c.arrows[h].0, c.arrows[g].0, c.arrows[f].0
                    );
                    let lhs = c.compose(h, g).and_then(|hg| c.compose(hg, f));
                    let rhs = c.compose(g, f).and_then(|gf| c.compose(h, gf));
                    fam.record(&key, lhs.is_some() && lhs == rhs, || {
                        format!("(h∘g)∘f = {lhs:?} but h∘(g∘f) = {rhs:?}")
                    });
                }
            }
        }
    }
    report.checks.push(fam.finish());

    let mut fam = Family::new("category.units");
    for f in 0..c.arrows.len() {
        let key = c.arrows[f].0.clone();
        let idd = c.ids[c.dom(f)];
        let idc = c.ids[c.cod(f)];
        let left = c.compose(idc, f);
        let right = c.compose(f, idd);
        fam.record(&key, left == Some(f) && right == Some(f), || {
            format!("id∘f = {left:?}, f∘id = {right:?}")
        });
    }
    report.checks.push(fam.finish());

    report
}

/// A strict functor between finite categories, given by index maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatFunctor {
    pub src: FinCategory,
    pub dst: FinCategory,
    pub ob_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

impl CatFunctor {
    /// Check strict preservation of identities and composition.
    pub fn check(&self) -> Report {
        let mut report = Report::new();
        let mut fam = Family::new("functor.identities");
        for (a, &ia) in self.src.ids.iter().enumerate() {
            let key = self.src.objects[a].clone();
            let ok = self.arrow_map[ia] == self.dst.ids[self.ob_map[a]];
            fam.record(&key, ok, || "identity not preserved".into());
        }
        report.checks.push(fam.finish());

        let mut fam = Family::new("functor.composition");
        for (&(g, f), &h) in &self.src.comp {
            let key = format!("{}∘{}", self.src.arrows[g].0, self.src.arrows[f].0);
            let lhs = self.dst.compose(self.arrow_map[g], self.arrow_map[f]);
            fam.record(&key, lhs == Some(self.arrow_map[h]), || {
                format!("F(g)∘F(f) = {lhs:?} ≠ F(g∘f)")
            });
        }
        report.checks.push(fam.finish());
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(labels: &[&str]) -> FinSet {
        canonical_finset(labels).unwrap()
    }

    #[test]
    fn canonical_finset_basic() {
        assert_eq!(set(&["0", "1"]).len(), 2);
        assert_eq!(canonical_finset(&[]).unwrap().len(), 0);
        assert!(matches!(
            canonical_finset(&["a", "a"]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn compose_identity_and_pointwise() {
        let a = set(&["0", "1"]);
        let b = set(&["0"]);
        let f = FinFun::new(a.clone(), b.clone(), vec![0, 0]).unwrap();
        let id = FinFun::identity(&a);
        assert_eq!(compose_functions(&f, &id).unwrap(), f);

        // f: {0,1}→{0} constant, g: {0}→{0,1} with 0 ↦ 1: g∘f is constantly 1.
        let g = FinFun::new(b.clone(), a.clone(), vec![1]).unwrap();
        let gf = compose_functions(&g, &f).unwrap();
        assert_eq!(gf.table, vec![1, 1]);

        // cod(g) = {0,1} does not match dom(g) = {0}.
        assert!(matches!(
            compose_functions(&g, &g),
            Err(Error::BoundaryMismatch(_))
        ));
    }

    #[test]
    fn pullback_agreeing_pairs() {
        let x = set(&["0", "1"]);
        let z = set(&["0"]);
        let f = FinFun::new(x.clone(), z.clone(), vec![0, 0]).unwrap();
        let g = FinFun::new(z.clone(), z.clone(), vec![0]).unwrap();
        let (apex, p, q) = pullback(&f, &g).unwrap();
        assert_eq!(apex.len(), 2);
        assert_eq!(p.table, vec![0, 1]);
        assert_eq!(q.table, vec![0, 0]);

        // g = id_Z makes p a bijection onto X.
        let z2 = set(&["0", "1"]);
        let f2 = FinFun::new(x.clone(), z2.clone(), vec![1, 0]).unwrap();
        let (apex2, p2, q2) = pullback(&f2, &FinFun::identity(&z2)).unwrap();
        assert_eq!(apex2.len(), x.len());
        assert!(p2.is_bijection());
        for i in 0..apex2.len() {
            assert_eq!(f2.table[p2.table[i]], q2.table[i]);
        }

        // disjoint images
        let y = set(&["0"]);
        let f3 = FinFun::new(y.clone(), z2.clone(), vec![0]).unwrap();
        let g3 = FinFun::new(y.clone(), z2.clone(), vec![1]).unwrap();
        let (apex3, _, _) = pullback(&f3, &g3).unwrap();
        assert!(apex3.is_empty());
    }

    #[test]
    fn pullback_deterministic() {
        let x = set(&["a", "b", "c"]);
        let z = set(&["0", "1"]);
        let f = FinFun::new(x.clone(), z.clone(), vec![0, 1, 0]).unwrap();
        let g = FinFun::new(x.clone(), z.clone(), vec![1, 1, 0]).unwrap();
        let r1 = pullback(&f, &g).unwrap();
        let r2 = pullback(&f, &g).unwrap();
        assert_eq!(r1, r2);
    }

    /// Brute-force universal property over all spans in a bounded universe.
    #[test]
    fn pullback_universal_property() {
        let sets: Vec<FinSet> = vec![set(&[]), set(&["0"]), set(&["0", "1"]), set(&["0", "1", "2"])];
        for x in &sets[..3] {
            for y in &sets[..3] {
                for z in &sets[1..3] {
                    for f in all_functions(x, z) {
                        for g in all_functions(y, z) {
                            let (apex, p, q) = pullback(&f, &g).unwrap();
                            for w in &sets[..3] {
                                for h in all_functions(w, x) {
                                    for k in all_functions(w, y) {
                                        let fh = compose_functions(&f, &h).unwrap();
                                        let gk = compose_functions(&g, &k).unwrap();
                                        if fh != gk {
                                            continue;
                                        }
                                        let mediating: Vec<FinFun> = all_functions(w, &apex)
                                            .into_iter()
                                            .filter(|u| {
                                                compose_functions(&p, u).unwrap() == h
                                                    && compose_functions(&q, u).unwrap() == k
                                            })
                                            .collect();
                                        assert_eq!(
                                            mediating.len(),
                                            1,
                                            "universal property fails for f={f:?} g={g:?}"
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn coequalizer_cases() {
        // f = g: quotient is a bijection.
        let y = set(&["0", "1"]);
        let f = FinFun::new(y.clone(), y.clone(), vec![1, 0]).unwrap();
        let (q, qm) = coequalizer(&f, &f).unwrap();
        assert_eq!(q.len(), 2);
        assert!(qm.is_bijection());

        // One generated class.
        let x = set(&["0"]);
        let f = FinFun::new(x.clone(), y.clone(), vec![0]).unwrap();
        let g = FinFun::new(x.clone(), y.clone(), vec![1]).unwrap();
        let (q, _) = coequalizer(&f, &g).unwrap();
        assert_eq!(q.len(), 1);

        // Transitive closure: 0~1 and 1~2 collapse everything.
        let x = set(&["0", "1"]);
        let y3 = set(&["0", "1", "2"]);
        let f = FinFun::new(x.clone(), y3.clone(), vec![0, 1]).unwrap();
        let g = FinFun::new(x.clone(), y3.clone(), vec![1, 2]).unwrap();
        let (q, qm) = coequalizer(&f, &g).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(q.elems()[0], El::atom("0"), "least-index representative");
        assert_eq!(qm.table, vec![0, 0, 0]);
    }

    #[test]
    fn coequalizer_universal_property() {
        let sets: Vec<FinSet> = vec![
            set(&[]),
            set(&["0"]),
            set(&["0", "1"]),
            set(&["0", "1", "2"]),
            set(&["0", "1", "2", "3"]),
        ];
        for x in &sets[..3] {
            for y in &sets {
                if y.len() > 4 {
                    continue;
                }
                for f in all_functions(x, y) {
                    for g in all_functions(x, y) {
                        let (qset, q) = coequalizer(&f, &g).unwrap();
                        assert_eq!(
                            compose_functions(&q, &f).unwrap(),
                            compose_functions(&q, &g).unwrap()
                        );
                        for w in &sets[..3] {
                            for h in all_functions(y, w) {
                                if compose_functions(&h, &f).unwrap()
                                    != compose_functions(&h, &g).unwrap()
                                {
                                    continue;
                                }
                                let mediating: Vec<FinFun> = all_functions(&qset, w)
                                    .into_iter()
                                    .filter(|u| compose_functions(u, &q).unwrap() == h)
                                    .collect();
                                assert_eq!(mediating.len(), 1);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn category_checks() {
        assert!(check_category(&FinCategory::terminal()).passed());
        assert!(check_category(&FinCategory::z2()).passed());

        // Corrupt one composite: g∘1 = 1 breaks the unit law with a witness.
        let mut bad = FinCategory::z2();
        bad.comp.insert((1, 0), 0);
        let report = check_category(&bad);
        assert!(!report.passed());
        let units = report.check("category.units").unwrap();
        assert!(units.failures > 0);
        assert_eq!(units.witnesses[0].key, "g");
    }

    #[test]
    fn functor_check() {
        let z2 = FinCategory::z2();
        let idf = CatFunctor {
            src: z2.clone(),
            dst: z2.clone(),
            ob_map: vec![0],
            arrow_map: vec![0, 1],
        };
        assert!(idf.check().passed());
        let collapse = CatFunctor {
            src: z2.clone(),
            dst: z2.clone(),
            ob_map: vec![0],
            arrow_map: vec![0, 0],
        };
        assert!(collapse.check().passed());
        let bad = CatFunctor {
            src: z2.clone(),
            dst: z2,
            ob_map: vec![0],
            arrow_map: vec![1, 0],
        };
        assert!(!bad.check().passed());
    }
}

#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_fun(dom: usize, cod: usize) -> impl Strategy<Value = FinFun> {
        let mk_set = |n: usize| {
            FinSet::new((0..n).map(|i| El::atom(i.to_string())).collect()).unwrap()
        };
        proptest::collection::vec(0..cod.max(1), dom).prop_map(move |table| {
            FinFun::new(mk_set(dom), mk_set(cod), table).unwrap()
        })
    }

    proptest! {
        #[test]
        fn pullback_is_deterministic_and_mediates(
            f in (1usize..4, 1usize..3).prop_flat_map(|(d, c)| arb_fun(d, c)),
            g_table in proptest::collection::vec(0usize..2, 0..3),
        ) {
            let z = f.cod.clone();
            let gdom = FinSet::new(
                (0..g_table.len()).map(|i| El::atom(format!("y{i}"))).collect(),
            ).unwrap();
            let g = FinFun::new(
                gdom,
                z.clone(),
                g_table.iter().map(|&i| i % z.len()).collect(),
            ).unwrap();
            let r1 = pullback(&f, &g).unwrap();
            let r2 = pullback(&f, &g).unwrap();
            prop_assert_eq!(&r1, &r2);
            let (apex, p, q) = r1;
            // projections agree over the cospan
            prop_assert_eq!(
                compose_functions(&f, &p).unwrap(),
                compose_functions(&g, &q).unwrap()
            );
            prop_assert_eq!(apex.len(), p.table.len());
        }

        #[test]
        fn coequalizer_is_universal(
            (f, g) in (1usize..4, 1usize..5).prop_flat_map(|(d, c)| {
                (arb_fun(d, c), arb_fun(d, c))
            }),
        ) {
            let (qset, q) = coequalizer(&f, &g).unwrap();
            prop_assert_eq!(
                compose_functions(&q, &f).unwrap(),
                compose_functions(&q, &g).unwrap()
            );
            // q is surjective and classes are labelled by least members
            let mut seen = vec![false; qset.len()];
            for &c in &q.table {
                seen[c] = true;
            }
            prop_assert!(seen.iter().all(|&b| b));
            // every coequalizing map factors uniquely
            let w = FinSet::from_atoms(&["w0", "w1"]).unwrap();
            for h in all_functions(&f.cod, &w) {
                if compose_functions(&h, &f).unwrap() != compose_functions(&h, &g).unwrap() {
                    continue;
                }
                let mediating: Vec<FinFun> = all_functions(&qset, &w)
                    .into_iter()
                    .filter(|u| compose_functions(u, &q).unwrap() == h)
                    .collect();
                prop_assert_eq!(mediating.len(), 1);
            }
        }

        #[test]
        fn composition_is_associative(
            f in (1usize..4, 1usize..4).prop_flat_map(|(d, c)| arb_fun(d, c)),
            g_table in proptest::collection::vec(0usize..3, 1..4),
            h_table in proptest::collection::vec(0usize..3, 1..4),
        ) {
            let mk = |n: usize, tag: &str| {
                FinSet::new((0..n).map(|i| El::atom(format!("{tag}{i}"))).collect()).unwrap()
            };
            let b = f.cod.clone();
            let cset = mk(g_table.len(), "c");
            let g = FinFun::new(
                b,
                cset.clone(),
                f.cod.elems().iter().enumerate().map(|(i, _)| g_table[i % g_table.len()] % cset.len()).collect(),
            ).unwrap();
            let dset = mk(h_table.len(), "d");
            let h = FinFun::new(
                cset.clone(),
                dset.clone(),
                (0..cset.len()).map(|i| h_table[i % h_table.len()] % dset.len()).collect(),
            ).unwrap();
            let lhs = compose_functions(&h, &compose_functions(&g, &f).unwrap()).unwrap();
            let rhs = compose_functions(&compose_functions(&h, &g).unwrap(), &f).unwrap();
            prop_assert_eq!(lhs.clone(), rhs);
            prop_assert_eq!(compose_functions(&lhs, &FinFun::identity(&lhs.dom)).unwrap(), lhs);
        }
    }
}
