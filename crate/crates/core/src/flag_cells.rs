//! Facets of the base alcove, double cosets `W_{J'} \ W / W_J` and Schubert
//! cell tables.
//!
//! A facet in the closure of the base alcove is recorded by its type `J`,
//! the set of simple affine reflections fixing it. Cell tables are always
//! computed in the Iwahori refinement: the rows of the table for a bound
//! `w` are the minimal representatives `v` in `W/W_J` with `v <= w`, each
//! an affine space of dimension `l(v)`. Every row also carries the
//! double coset (the `P_{J'}`-orbit) that contains it.

use std::collections::{BTreeSet, HashSet};

use num::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::affine_weyl::{AffineRoot, AffineWeylGroup, ApartmentPoint, ElementJson, IwElement};
use crate::error::{Error, Result};
use crate::lattice::Q;
use crate::root_datum::Cocharacter;

/// Facet of the closure of the base alcove, given by its type `J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    j: Vec<usize>,
}

impl Facet {
    /// Validates that `W_J` is finite: `J` omits a node of every component.
    pub fn new(g: &AffineWeylGroup, j: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = j.into_iter().collect();
        let gens = g.generators();
        if let Some(&bad) = set.iter().find(|&&s| s >= gens.len()) {
            return Err(Error::InvalidFacet(format!("no simple reflection with index {bad}")));
        }
        for c in 0..g.datum().components().len() {
            if gens.iter().enumerate().filter(|(_, s)| s.component == c).all(|(i, _)| set.contains(&i)) {
                return Err(Error::InvalidFacet(format!(
                    "type contains every node of component {}, so W_J is infinite",
                    c + 1
                )));
            }
        }
        Ok(Facet { j: set.into_iter().collect() })
    }

    /// The base alcove, `J` empty.
    pub fn alcove() -> Self {
        Facet { j: Vec::new() }
    }

    /// The base point `0`, `J` = the finite simple reflections.
    pub fn base_point(g: &AffineWeylGroup) -> Self {
        Facet { j: (0..g.datum().semisimple_rank()).collect() }
    }

    /// Every facet type in the closure of the base alcove.
    pub fn all(g: &AffineWeylGroup) -> Vec<Facet> {
        let n = g.num_generators();
        let mut out: Vec<Facet> = (0u64..1 << n)
            .filter_map(|mask| Facet::new(g, (0..n).filter(|i| mask >> i & 1 == 1)).ok())
            .collect();
        out.sort_by_key(|f| (f.j.len(), f.j.clone()));
        out
    }

    pub fn nodes(&self) -> &[usize] {
        &self.j
    }

    pub fn contains(&self, s: usize) -> bool {
        self.j.binary_search(&s).is_ok()
    }

    pub fn is_subset(&self, other: &Facet) -> bool {
        self.j.iter().all(|&s| other.contains(s))
    }

    pub fn is_alcove(&self) -> bool {
        self.j.is_empty()
    }

    pub fn is_base_point(&self, g: &AffineWeylGroup) -> bool {
        *self == Facet::base_point(g)
    }

    /// `a0`, `0` or `J=i,j,..` with the labels of the simple reflections.
    pub fn name(&self, g: &AffineWeylGroup) -> String {
        if self.is_alcove() {
            "a0".into()
        } else if self.is_base_point(g) {
            "0".into()
        } else {
            let labels: Vec<&str> =
                self.j.iter().map(|&s| g.generators()[s].label.trim_start_matches('s')).collect();
            format!("J={}", labels.join(","))
        }
    }

    /// Barycenter: per component, the average of the alcove vertices not
    /// fixed by `J`. The vertex opposite the affine wall is `0`, the one
    /// opposite `alpha_i` is `omega_i^vee / c_i` where `theta = sum c_i alpha_i`.
    pub fn barycenter(&self, g: &AffineWeylGroup) -> ApartmentPoint {
        let d = g.datum();
        let mut x = vec![Q::zero(); d.rank()];
        for (c, comp) in d.components().iter().enumerate() {
            let theta = &d.roots()[comp.highest_root];
            let free: Vec<usize> = g
                .generators()
                .iter()
                .enumerate()
                .filter(|(i, s)| s.component == c && !self.contains(*i))
                .map(|(i, _)| i)
                .collect();
            let count = Q::from_integer(free.len() as i64);
            for i in free {
                if g.generators()[i].is_affine {
                    continue;
                }
                let ci = Q::from_integer(theta.coords[i]);
                for (xk, wk) in x.iter_mut().zip(&d.fundamental_coweights()[i]) {
                    *xk += *wk / ci / count;
                }
            }
        }
        ApartmentPoint(x)
    }
}

/// Double coset `W_{J'} w W_J`, stored through its minimal representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoubleCoset {
    pub left: Facet,
    pub right: Facet,
    pub min_rep: IwElement,
}

/// Minimal element of `W_{J'} w W_J`, by greedy descent.
pub fn min_rep(g: &AffineWeylGroup, w: &IwElement, left: &Facet, right: &Facet) -> IwElement {
    let mut cur = w.clone();
    loop {
        if let Some(&s) = left.nodes().iter().find(|&&s| g.is_left_descent(&cur, s)) {
            cur = g.left_mul(s, &cur);
        } else if let Some(&s) = right.nodes().iter().find(|&&s| g.is_right_descent(&cur, s)) {
            cur = g.right_mul(&cur, s);
        } else {
            return cur;
        }
    }
}

/// Maximal element of `W_{J'} w W_J`, by greedy ascent.
pub fn max_rep(g: &AffineWeylGroup, w: &IwElement, left: &Facet, right: &Facet) -> IwElement {
    let mut cur = w.clone();
    loop {
        if let Some(&s) = left.nodes().iter().find(|&&s| !g.is_left_descent(&cur, s)) {
            cur = g.left_mul(s, &cur);
        } else if let Some(&s) = right.nodes().iter().find(|&&s| !g.is_right_descent(&cur, s)) {
            cur = g.right_mul(&cur, s);
        } else {
            return cur;
        }
    }
}

/// Longest element of the finite group `W_J`.
pub fn longest_element(g: &AffineWeylGroup, f: &Facet) -> IwElement {
    max_rep(g, &g.identity(), &Facet::alcove(), f)
}

/// Minimal representative of `w W_J`.
pub fn coset_min_rep(g: &AffineWeylGroup, w: &IwElement, f: &Facet) -> IwElement {
    min_rep(g, w, &Facet::alcove(), f)
}

/// `w` is minimal in `w W_J`.
pub fn is_min_rep(g: &AffineWeylGroup, w: &IwElement, f: &Facet) -> bool {
    f.nodes().iter().all(|&s| !g.is_right_descent(w, s))
}

/// Elements of `W_J`, sorted by length then element.
pub fn parabolic_elements(g: &AffineWeylGroup, f: &Facet) -> Vec<IwElement> {
    let mut seen: HashSet<IwElement> = HashSet::from([g.identity()]);
    let mut frontier = vec![g.identity()];
    let mut out = frontier.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in &frontier {
            for &s in f.nodes() {
                let y = g.right_mul(u, s);
                if seen.insert(y.clone()) {
                    next.push(y.clone());
                    out.push(y);
                }
            }
        }
        frontier = next;
    }
    out.sort_by_cached_key(|u| (g.length(u), u.clone()));
    out
}

/// Poincare polynomial `W_J(q) = sum over u in W_J of q^{l(u)}`, as coefficients.
pub fn parabolic_poincare(g: &AffineWeylGroup, f: &Facet) -> Vec<u64> {
    let mut coeffs = Vec::new();
    for u in parabolic_elements(g, f) {
        let l = g.length(&u);
        if coeffs.len() <= l {
            coeffs.resize(l + 1, 0);
        }
        coeffs[l] += 1;
    }
    coeffs
}

pub fn double_coset_of(g: &AffineWeylGroup, w: &IwElement, left: &Facet, right: &Facet) -> DoubleCoset {
    DoubleCoset { left: left.clone(), right: right.clone(), min_rep: min_rep(g, w, left, right) }
}

/// Dimension of the orbit `P_{J'} w P_J / P_J`: the length of the top
/// Iwahori cell, `l(w_max) - l(w_{0,J})`. For `J'` empty this is the
/// length of the minimal representative in `W/W_J`; for `J' = J` = the
/// finite reflections it is `<2rho, mu>` on the dominant representative.
pub fn coset_length(g: &AffineWeylGroup, c: &DoubleCoset) -> usize {
    let top = max_rep(g, &c.min_rep, &c.left, &c.right);
    g.length(&top) - g.length(&longest_element(g, &c.right))
}

/// Minimal representative in `W/W_J` of the open Iwahori cell of the orbit.
pub fn top_cell(g: &AffineWeylGroup, c: &DoubleCoset) -> IwElement {
    coset_min_rep(g, &max_rep(g, &c.min_rep, &c.left, &c.right), &c.right)
}

/// Order induced by the Bruhat order on minimal representatives.
pub fn coset_bruhat_leq(g: &AffineWeylGroup, v: &DoubleCoset, w: &DoubleCoset) -> Result<bool> {
    if v.left != w.left || v.right != w.right {
        return Err(Error::FacetMismatch);
    }
    Ok(g.bruhat_leq(&v.min_rep, &w.min_rep))
}

/// Dimension of the orbit computed as the largest Iwahori cell it contains:
/// the maximum over `u` in `W_{J'}` of the length of `u w_min` in `W/W_J`.
pub fn cell_dimension(g: &AffineWeylGroup, c: &DoubleCoset) -> usize {
    parabolic_elements(g, &c.left)
        .iter()
        .map(|u| g.length(&coset_min_rep(g, &g.multiply(u, &c.min_rep), &c.right)))
        .max()
        .unwrap_or(0)
}

/// Number of affine roots `alpha` with `alpha < 0` at the barycenter of `f`
/// and `w alpha > 0` on the base alcove.
///
/// Only levels `|k| <= l(w) * maxheight + 1` are searched; a counted root
/// on the boundary of that window is treated as a bug.
pub fn cell_dimension_by_roots(g: &AffineWeylGroup, w: &IwElement, f: &Facet) -> usize {
    let d = g.datum();
    let xf = f.barycenter(g);
    let bound = g.length(w) as i64 * d.max_height().max(1) + 1;
    let mut count = 0;
    for r in d.roots() {
        for k in -bound..=bound {
            let alpha = AffineRoot { finite: r.root.clone(), level: k };
            if g.evaluate(&alpha, &xf) >= Q::zero() {
                continue;
            }
            if g.is_positive(&g.act_on_affine_root(w, &alpha)) {
                assert!(k.abs() < bound, "affine root search window too small for {w:?}");
                count += 1;
            }
        }
    }
    count
}

/// Minimal representatives in `W/W_J` of length at most `max_len` whose
/// length-zero part lies in `omegas`, sorted by length then element.
pub fn min_reps_by_length(
    g: &AffineWeylGroup,
    f: &Facet,
    max_len: usize,
    omegas: &[IwElement],
) -> Result<Vec<IwElement>> {
    let mut seen: HashSet<IwElement> = HashSet::new();
    let mut layer = Vec::new();
    for tau in omegas {
        if g.length(tau) != 0 {
            return Err(Error::Domain("Omega component has positive length".into()));
        }
        if seen.insert(tau.clone()) {
            layer.push(tau.clone());
        }
    }
    let mut out = Vec::new();
    for depth in 0..=max_len {
        layer.sort();
        out.extend(layer.iter().cloned());
        if depth == max_len {
            break;
        }
        let mut next = Vec::new();
        for v in &layer {
            for s in 0..g.num_generators() {
                if g.is_left_descent(v, s) {
                    continue;
                }
                let y = g.left_mul(s, v);
                if is_min_rep(g, &y, f) && seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        layer = next;
    }
    Ok(out)
}

/// `{v in W^J : v <= w}` for `w` minimal in `w W_J`, built along a reduced
/// word of `w`.
pub fn lower_interval(g: &AffineWeylGroup, w: &IwElement, f: &Facet) -> Vec<IwElement> {
    let (word, tau) = g.reduced_word(w);
    let mut set: HashSet<IwElement> = HashSet::from([tau.clone()]);
    let mut list = vec![tau];
    for &s in word.iter().rev() {
        let added: Vec<IwElement> = list
            .iter()
            .map(|v| coset_min_rep(g, &g.left_mul(s, v), f))
            .filter(|y| !set.contains(y))
            .collect();
        for y in added {
            if set.insert(y.clone()) {
                list.push(y);
            }
        }
    }
    list
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellRow {
    /// minimal representative in `W/W_J` of the Iwahori cell
    pub rep: IwElement,
    pub dim: usize,
    /// minimal representative of the double coset containing the cell
    pub orbit: IwElement,
}

/// Cells of a Schubert variety `Fl^{<= w}` in the partial flag variety of
/// type `J`, stratified by Iwahori orbits.
#[derive(Clone, Debug)]
pub struct CellTable {
    pub bound: DoubleCoset,
    pub rows: Vec<CellRow>,
    /// Hasse diagram as `(lower, upper)` row indices
    pub covers: Vec<(usize, usize)>,
}

pub fn schubert_cells(g: &AffineWeylGroup, bound: &DoubleCoset) -> CellTable {
    let top = top_cell(g, bound);
    let mut rows: Vec<CellRow> = lower_interval(g, &top, &bound.right)
        .into_par_iter()
        .map(|v| CellRow {
            dim: g.length(&v),
            orbit: min_rep(g, &v, &bound.left, &bound.right),
            rep: v,
        })
        .collect();
    let keys: Vec<_> = rows.iter().map(|r| (r.dim, r.rep.t.clone(), g.finite_word(&r.rep.w))).collect();
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    rows = order.into_iter().map(|i| rows[i].clone()).collect();
    let covers = hasse_covers(g, &rows);
    CellTable { bound: bound.clone(), rows, covers }
}

/// Transitive reduction of the Bruhat order on the rows, via bitsets.
fn hasse_covers(g: &AffineWeylGroup, rows: &[CellRow]) -> Vec<(usize, usize)> {
    let n = rows.len();
    let words = n.div_ceil(64);
    // below[j] = rows strictly below row j; rows are sorted by dimension so
    // only earlier rows can lie below
    let below: Vec<Vec<u64>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let mut bits = vec![0u64; words];
            for i in 0..j {
                if rows[i].dim < rows[j].dim && g.bruhat_leq(&rows[i].rep, &rows[j].rep) {
                    bits[i / 64] |= 1 << (i % 64);
                }
            }
            bits
        })
        .collect();
    let mut covers = Vec::new();
    for j in 0..n {
        let mut reach = vec![0u64; words];
        for i in 0..j {
            if below[j][i / 64] >> (i % 64) & 1 == 1 {
                for (r, b) in reach.iter_mut().zip(&below[i]) {
                    *r |= b;
                }
            }
        }
        for i in 0..j {
            let bit = 1 << (i % 64);
            if below[j][i / 64] & bit != 0 && reach[i / 64] & bit == 0 {
                covers.push((i, j));
            }
        }
    }
    covers
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRowJson {
    pub rep: String,
    pub element: ElementJson,
    pub dim: usize,
    pub orbit: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellTableJson {
    pub group: String,
    pub facets: [String; 2],
    pub bound: String,
    pub rows: Vec<CellRowJson>,
    pub covers: Vec<[usize; 2]>,
}

impl CellTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row labels: cocharacters `mu` (cell of `varpi^mu`) when the right
    /// facet is the base point, elements otherwise.
    pub fn label(&self, g: &AffineWeylGroup, w: &IwElement) -> String {
        element_label(g, w, &self.bound.right)
    }

    /// Label of the open cell, e.g. the dominant `mu` for `Gr^{<= mu}`.
    pub fn bound_label(&self, g: &AffineWeylGroup) -> String {
        self.label(g, &top_cell(g, &self.bound))
    }

    pub fn to_tsv(&self, g: &AffineWeylGroup) -> String {
        let mut s = String::from("rep\tdim\n");
        for r in &self.rows {
            s.push_str(&format!("{}\t{}\n", self.label(g, &r.rep), r.dim));
        }
        s
    }

    pub fn to_json(&self, g: &AffineWeylGroup) -> CellTableJson {
        CellTableJson {
            group: g.datum().label().to_string(),
            facets: [self.bound.left.name(g), self.bound.right.name(g)],
            bound: self.bound_label(g),
            rows: self
                .rows
                .iter()
                .map(|r| CellRowJson {
                    rep: self.label(g, &r.rep),
                    element: g.to_json(&r.rep),
                    dim: r.dim,
                    orbit: self.label(g, &r.orbit),
                })
                .collect(),
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_dot(&self, g: &AffineWeylGroup) -> String {
        let mut s = String::from("digraph cells {\n  rankdir=BT;\n");
        for (i, r) in self.rows.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{} / {}\"];\n", self.label(g, &r.rep), r.dim));
        }
        for &(a, b) in &self.covers {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }

    /// Rows below (or equal to) row `j` in the order generated by the covers.
    pub fn down_closure(&self, j: usize) -> Vec<usize> {
        let mut seen = vec![false; self.rows.len()];
        let mut stack = vec![j];
        seen[j] = true;
        while let Some(x) = stack.pop() {
            for &(a, b) in &self.covers {
                if b == x && !seen[a] {
                    seen[a] = true;
                    stack.push(a);
                }
            }
        }
        (0..self.rows.len()).filter(|&i| seen[i]).collect()
    }

    /// `None` if `subset` is closed downward, else a row that is missing.
    pub fn check_down_closed(&self, subset: &[usize]) -> Option<usize> {
        let inside: HashSet<usize> = subset.iter().copied().collect();
        self.covers.iter().find(|(a, b)| inside.contains(b) && !inside.contains(a)).map(|&(a, _)| a)
    }
}

/// Display label of a minimal representative of `w W_J`.
pub fn element_label(g: &AffineWeylGroup, w: &IwElement, right: &Facet) -> String {
    if right.is_base_point(g) {
        // w W_0 = t_{-mu} W_0 is the point varpi^mu
        Cocharacter(w.t.iter().map(|x| -x).collect()).to_string()
    } else {
        g.display(w)
    }
}

/// The double coset `W_0 t_{-mu} W_0` of the point `varpi^mu` in the
/// affine Grassmannian.
pub fn grassmannian_coset(g: &AffineWeylGroup, mu: &Cocharacter) -> Result<DoubleCoset> {
    if mu.0.len() != g.rank() {
        return Err(Error::RankMismatch { expected: g.rank(), got: mu.0.len() });
    }
    let f = Facet::base_point(g);
    Ok(double_coset_of(g, &g.loop_translation(mu), &f, &f))
}

/// Decomposition of the fibers of `Fl_{J'} -> Fl_J` over the cell of `w W_J`.
///
/// Every `v` in `w W_J` factors as `w_min u` with `u` in `W_J`; the list holds
/// the distinct cells `v W_{J'}` with relative dimension `l(v) - l(w_min)`.
pub fn projection_fiber_decomposition(
    g: &AffineWeylGroup,
    w: &IwElement,
    inner: &Facet,
    outer: &Facet,
) -> Result<Vec<(IwElement, usize)>> {
    if !inner.is_subset(outer) {
        return Err(Error::FacetNotContained { inner: inner.name(g), outer: outer.name(g) });
    }
    let wmin = coset_min_rep(g, w, outer);
    let base = g.length(&wmin);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for u in parabolic_elements(g, outer) {
        let v = coset_min_rep(g, &g.multiply(&wmin, &u), inner);
        if seen.insert(v.clone()) {
            let d = g.length(&v) - base;
            out.push((v, d));
        }
    }
    out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{build_root_datum, DynkinType, Isogeny};

    fn group(ty: DynkinType, n: usize, iso: Isogeny) -> AffineWeylGroup {
        AffineWeylGroup::new(build_root_datum(ty, n, iso).unwrap())
    }

    #[test]
    fn facet_validation() {
        let g = group(DynkinType::A, 2, Isogeny::SimplyConnected);
        assert!(Facet::new(&g, [0, 1, 2]).is_err());
        assert!(Facet::new(&g, [5]).is_err());
        assert_eq!(Facet::all(&g).len(), 7);
        assert_eq!(Facet::base_point(&g).name(&g), "0");
        assert_eq!(Facet::new(&g, [2]).unwrap().name(&g), "J=0");
    }

    #[test]
    fn barycenters_lie_on_the_right_walls() {
        for (ty, n) in [(DynkinType::A, 2), (DynkinType::C, 2), (DynkinType::G, 2)] {
            let g = group(ty, n, Isogeny::SimplyConnected);
            for f in Facet::all(&g) {
                let x = f.barycenter(&g);
                for (i, s) in g.generators().iter().enumerate() {
                    let v = g.evaluate(&s.root, &x);
                    assert_eq!(v.is_zero(), f.contains(i), "{ty}{n} facet {:?} node {i}", f.nodes());
                    assert!(v >= Q::zero());
                }
            }
        }
    }

    #[test]
    fn gl2_grassmannian_lengths() {
        let g = group(DynkinType::GL, 2, Isogeny::General);
        let zero = Facet::base_point(&g);
        let a0 = Facet::alcove();
        let c = grassmannian_coset(&g, &Cocharacter(vec![1, 0])).unwrap();
        assert_eq!(coset_length(&g, &c), 1);
        assert_eq!(cell_dimension(&g, &c), 1);
        let iw = double_coset_of(&g, &g.loop_translation(&Cocharacter(vec![0, 1])), &a0, &zero);
        assert_eq!(coset_length(&g, &iw), 0);
        assert_eq!(cell_dimension_by_roots(&g, &iw.min_rep, &zero), 0);
        let iw = double_coset_of(&g, &g.loop_translation(&Cocharacter(vec![1, 0])), &a0, &zero);
        assert_eq!(coset_length(&g, &iw), 1);
        assert_eq!(cell_dimension_by_roots(&g, &iw.min_rep, &zero), 1);
    }

    #[test]
    fn sl2_spherical_coset_of_coroot() {
        let g = group(DynkinType::A, 1, Isogeny::SimplyConnected);
        let c = grassmannian_coset(&g, &Cocharacter(vec![1])).unwrap();
        assert_eq!(coset_length(&g, &c), 2);
        assert_eq!(cell_dimension(&g, &c), 2);
        let t = schubert_cells(&g, &c);
        assert_eq!(t.rows.iter().map(|r| r.dim).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(t.covers, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn gl2_table_is_projective_line() {
        let g = group(DynkinType::GL, 2, Isogeny::General);
        let c = grassmannian_coset(&g, &Cocharacter(vec![1, 0])).unwrap();
        let t = schubert_cells(&g, &c);
        assert_eq!(t.to_tsv(&g), "rep\tdim\n(0,1)\t0\n(1,0)\t1\n");
        assert!(t.to_dot(&g).contains("n0 -> n1"));
    }

    #[test]
    fn identity_coset() {
        let g = group(DynkinType::C, 2, Isogeny::SimplyConnected);
        let f = Facet::base_point(&g);
        let c = double_coset_of(&g, &g.identity(), &f, &f);
        assert_eq!(c.min_rep, g.identity());
        assert_eq!(coset_length(&g, &c), 0);
        let t = schubert_cells(&g, &c);
        assert_eq!(t.rows.len(), 1);
    }

    #[test]
    fn fibers_over_sl2_coroot() {
        let g = group(DynkinType::A, 1, Isogeny::SimplyConnected);
        let zero = Facet::base_point(&g);
        let fibers =
            projection_fiber_decomposition(&g, &g.loop_translation(&Cocharacter(vec![1])), &Facet::alcove(), &zero)
                .unwrap();
        assert_eq!(fibers.iter().map(|f| f.1).collect::<Vec<_>>(), vec![0, 1]);
        assert!(projection_fiber_decomposition(&g, &g.identity(), &zero, &Facet::alcove()).is_err());
    }

    #[test]
    fn parabolic_poincare_of_b2() {
        let g = group(DynkinType::B, 2, Isogeny::SimplyConnected);
        assert_eq!(parabolic_poincare(&g, &Facet::base_point(&g)), vec![1, 2, 2, 2, 1]);
    }
}
