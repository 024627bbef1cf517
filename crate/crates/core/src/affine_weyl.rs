//! The extended affine Weyl group `W = X_*(T) x| W_0`.
//!
//! An element `(lambda, v)` acts on the apartment by `x -> v x + lambda`.
//! Finite Weyl group elements are stored as integer matrices on `X_*` (and
//! on `X^*`, which makes inverses free). Positivity of an affine root on the
//! base alcove is decided by exact evaluation at the interior point
//! `x0 = sum over components of rho^vee / (2h)`.
//!
//! Cocharacters and the loop group: the Schubert cell of the point
//! `varpi^mu` corresponds to the element `t_{-mu} = (-mu, 1)`; see
//! [`AffineWeylGroup::loop_translation`].

use std::collections::{HashMap, HashSet};
use std::fmt;

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{self, Q};
use crate::root_datum::{Cocharacter, RootDatum};

/// Element of the finite Weyl group `W_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteWeyl {
    /// matrix on `X_*`, row-major
    act: Vec<i64>,
    /// matrix on `X^*`, the inverse transpose of `act`
    dual: Vec<i64>,
}

impl FiniteWeyl {
    pub fn identity(rank: usize) -> Self {
        FiniteWeyl { act: lattice::identity(rank), dual: lattice::identity(rank) }
    }

    fn rank(&self) -> usize {
        (self.act.len() as f64).sqrt() as usize
    }

    /// Reflection `x -> x - <a, x> a^vee` for a root `a` with coroot `a^vee`.
    pub fn reflection(root: &[i64], coroot: &[i64]) -> Self {
        let n = root.len();
        let mut act = lattice::identity(n);
        let mut dual = lattice::identity(n);
        for i in 0..n {
            for j in 0..n {
                act[i * n + j] -= coroot[i] * root[j];
                dual[i * n + j] -= root[i] * coroot[j];
            }
        }
        FiniteWeyl { act, dual }
    }

    pub fn compose(&self, other: &FiniteWeyl) -> FiniteWeyl {
        let n = self.rank();
        FiniteWeyl { act: lattice::mat_mul(&self.act, &other.act, n), dual: lattice::mat_mul(&self.dual, &other.dual, n) }
    }

    pub fn inverse(&self) -> FiniteWeyl {
        let n = self.rank();
        FiniteWeyl { act: lattice::transpose(&self.dual, n), dual: lattice::transpose(&self.act, n) }
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        lattice::mat_vec(&self.act, x)
    }

    pub fn apply_dual(&self, chi: &[i64]) -> Vec<i64> {
        lattice::mat_vec(&self.dual, chi)
    }

    pub fn apply_q(&self, x: &[Q]) -> Vec<Q> {
        let n = x.len();
        (0..n)
            .map(|i| (0..n).map(|j| Q::from_integer(self.act[i * n + j]) * x[j]).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.act == lattice::identity(self.rank())
    }
}

/// Element `(translation, finite)` of the Iwahori-Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IwElement {
    pub t: Vec<i64>,
    pub w: FiniteWeyl,
}

/// Affine function `x -> <finite, x> + level` with `finite` a root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineRoot {
    pub finite: Vec<i64>,
    pub level: i64,
}

/// Point of the apartment `X_*(T) (x) Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ApartmentPoint(pub Vec<Q>);

impl ApartmentPoint {
    pub fn from_integers(x: &[i64]) -> Self {
        ApartmentPoint(x.iter().map(|&c| Q::from_integer(c)).collect())
    }
}

#[derive(Clone, Debug)]
pub struct SimpleReflection {
    pub root: AffineRoot,
    pub element: IwElement,
    pub label: String,
    pub component: usize,
    /// true for the affine node `-theta + 1` of a component
    pub is_affine: bool,
}

/// Serialized form of an element: translation part and a word in the
/// finite simple reflections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub t: Vec<i64>,
    pub w: String,
}

/// The extended affine Weyl group of a root datum, with its simple affine
/// reflections `S` relative to the base alcove.
///
/// `S` is indexed as follows: the finite simple reflections come first, in
/// the order of the simple roots, followed by one affine reflection per
/// irreducible component.
#[derive(Clone, Debug)]
pub struct AffineWeylGroup {
    datum: RootDatum,
    simple: Vec<SimpleReflection>,
    finite_simple: Vec<FiniteWeyl>,
    /// 4h per root, used for exact positivity at x0
    root_scale: Vec<i64>,
}

impl AffineWeylGroup {
    pub fn new(datum: RootDatum) -> Self {
        let finite_simple: Vec<FiniteWeyl> = datum
            .simple_roots()
            .iter()
            .zip(datum.simple_coroots())
            .map(|(a, c)| FiniteWeyl::reflection(a, c))
            .collect();
        let root_scale = datum
            .roots()
            .iter()
            .map(|r| 4 * datum.components()[r.component].coxeter_number)
            .collect();
        let mut g = AffineWeylGroup { datum, simple: Vec::new(), finite_simple, root_scale };
        let mut simple = Vec::new();
        let multi = g.datum.components().len() > 1;
        for (c, comp) in g.datum.components().iter().enumerate() {
            for i in comp.nodes() {
                let root = AffineRoot { finite: g.datum.simple_roots()[i].clone(), level: 0 };
                simple.push(SimpleReflection {
                    element: g.reflection(&root),
                    root,
                    label: format!("s{}", i + 1),
                    component: c,
                    is_affine: false,
                });
            }
        }
        for (c, comp) in g.datum.components().iter().enumerate() {
            let theta = &g.datum.roots()[comp.highest_root].root;
            let root = AffineRoot { finite: lattice::neg(theta), level: 1 };
            simple.push(SimpleReflection {
                element: g.reflection(&root),
                root,
                label: if multi { format!("s0_{}", c + 1) } else { "s0".to_string() },
                component: c,
                is_affine: true,
            });
        }
        g.simple = simple;
        g
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// The simple affine reflections `S`.
    pub fn simple_reflections(&self) -> Result<&[SimpleReflection]> {
        if self.simple.is_empty() {
            return Err(Error::NoSemisimplePart);
        }
        Ok(&self.simple)
    }

    /// `S`, possibly empty for a torus.
    pub fn generators(&self) -> &[SimpleReflection] {
        &self.simple
    }

    pub fn num_generators(&self) -> usize {
        self.simple.len()
    }

    /// Index into `S` from a label such as `s1`, `1`, `s0`, `0` or `0_2`.
    pub fn generator_index(&self, label: &str) -> Option<usize> {
        let l = label.trim();
        let l = l.strip_prefix('s').unwrap_or(l);
        if let Some(c) = l.strip_prefix("0_") {
            let c: usize = c.parse().ok()?;
            return self.simple.iter().position(|s| s.is_affine && s.component + 1 == c);
        }
        let i: usize = l.parse().ok()?;
        if i == 0 {
            if self.datum.components().len() != 1 {
                return None;
            }
            return self.simple.iter().position(|s| s.is_affine);
        }
        (i <= self.datum.semisimple_rank()).then(|| i - 1)
    }

    pub fn identity(&self) -> IwElement {
        IwElement { t: vec![0; self.rank()], w: FiniteWeyl::identity(self.rank()) }
    }

    /// Translation `t_lambda = (lambda, 1)`, acting on the apartment by `+lambda`.
    pub fn translation(&self, lambda: &Cocharacter) -> IwElement {
        IwElement { t: lambda.0.clone(), w: FiniteWeyl::identity(self.rank()) }
    }

    /// The element attached to the loop-group point `varpi^mu`.
    ///
    /// Cocharacters enter the loop group through `lambda -> varpi^{-lambda}`,
    /// so the cell of `varpi^mu` is indexed by `t_{-mu}`. With this choice the
    /// Iwahori orbit of `mu` in the affine Grassmannian has dimension
    /// `<2rho, mu_dom> - #{a > 0 : <a, mu> < 0}`.
    pub fn loop_translation(&self, mu: &Cocharacter) -> IwElement {
        self.translation(&mu.neg())
    }

    pub fn finite_element(&self, w: FiniteWeyl) -> IwElement {
        IwElement { t: vec![0; self.rank()], w }
    }

    pub fn finite_from_word(&self, word: &[usize]) -> FiniteWeyl {
        word.iter().fold(FiniteWeyl::identity(self.rank()), |acc, &i| acc.compose(&self.finite_simple[i]))
    }

    pub fn multiply(&self, a: &IwElement, b: &IwElement) -> IwElement {
        IwElement { t: lattice::add(&a.t, &a.w.apply(&b.t)), w: a.w.compose(&b.w) }
    }

    pub fn inverse(&self, a: &IwElement) -> IwElement {
        let wi = a.w.inverse();
        IwElement { t: lattice::neg(&wi.apply(&a.t)), w: wi }
    }

    pub fn product(&self, word: &[usize]) -> IwElement {
        word.iter().fold(self.identity(), |acc, &i| self.multiply(&acc, &self.simple[i].element))
    }

    pub fn act_on_apartment(&self, w: &IwElement, x: &ApartmentPoint) -> ApartmentPoint {
        let mut y = w.w.apply_q(&x.0);
        for (yi, &ti) in y.iter_mut().zip(&w.t) {
            *yi += Q::from_integer(ti);
        }
        ApartmentPoint(y)
    }

    /// `(w alpha)(x) = alpha(w^{-1} x)`.
    pub fn act_on_affine_root(&self, w: &IwElement, alpha: &AffineRoot) -> AffineRoot {
        let va = w.w.apply_dual(&alpha.finite);
        let level = alpha.level - lattice::dot(&va, &w.t);
        AffineRoot { finite: va, level }
    }

    /// `(w^{-1} alpha)(x) = alpha(w x)`.
    fn act_inverse_on_affine_root(&self, w: &IwElement, alpha: &AffineRoot) -> AffineRoot {
        let n = self.rank();
        let finite = lattice::mat_vec(&lattice::transpose(&w.w.act, n), &alpha.finite);
        AffineRoot { finite, level: alpha.level + lattice::dot(&alpha.finite, &w.t) }
    }

    pub fn evaluate(&self, alpha: &AffineRoot, x: &ApartmentPoint) -> Q {
        alpha.finite.iter().zip(&x.0).map(|(&a, b)| Q::from_integer(a) * b).sum::<Q>() + Q::from_integer(alpha.level)
    }

    /// Interior point `x0` of the base alcove.
    pub fn base_alcove_point(&self) -> ApartmentPoint {
        let mut x = vec![Q::zero(); self.rank()];
        for (c, comp) in self.datum.components().iter().enumerate() {
            let h = comp.coxeter_number;
            for r in self.datum.positive_roots().filter(|r| r.component == c) {
                for (xi, &c) in x.iter_mut().zip(&r.coroot) {
                    // rho^vee / (2h) = (sum of positive coroots) / (4h)
                    *xi += Q::new(c, 4 * h);
                }
            }
        }
        ApartmentPoint(x)
    }

    /// Sign of `alpha(x0)`; never zero for an affine root.
    pub fn is_positive(&self, alpha: &AffineRoot) -> bool {
        let idx = self.datum.root_index(&alpha.finite).expect("finite part is not a root");
        // alpha(x0) = <a, 2rho^vee> / 4h + k
        let v = lattice::dot(&alpha.finite, self.datum.two_rho_check()) + self.root_scale[idx] * alpha.level;
        debug_assert!(v != 0);
        v > 0
    }

    /// Reflection in the hyperplane `alpha = 0`: `x -> x - alpha(x) a^vee`.
    pub fn reflection(&self, alpha: &AffineRoot) -> IwElement {
        let idx = self.datum.root_index(&alpha.finite).expect("finite part is not a root");
        let coroot = &self.datum.roots()[idx].coroot;
        IwElement { t: lattice::scale(-alpha.level, coroot), w: FiniteWeyl::reflection(&alpha.finite, coroot) }
    }

    /// Number of positive affine roots made negative by `w`.
    ///
    /// For each finite root `b` the affine roots `b + k` form an arithmetic
    /// progression, so the count over levels is summed in closed form.
    pub fn length(&self, w: &IwElement) -> usize {
        let mut count = 0i64;
        let rho = self.datum.two_rho_check();
        for r in self.datum.roots() {
            let vb = w.w.apply_dual(&r.root);
            let m = lattice::dot(&vb, &w.t);
            let kmin = if r.is_positive() { 0 } else { 1 };
            let vb_negative = lattice::dot(&vb, rho) < 0;
            count += (m - kmin).max(0);
            if m >= kmin && vb_negative {
                count += 1;
            }
        }
        count as usize
    }

    /// `l(w s) < l(w)`.
    pub fn is_right_descent(&self, w: &IwElement, s: usize) -> bool {
        !self.is_positive(&self.act_on_affine_root(w, &self.simple[s].root))
    }

    /// `l(s w) < l(w)`.
    pub fn is_left_descent(&self, w: &IwElement, s: usize) -> bool {
        !self.is_positive(&self.act_inverse_on_affine_root(w, &self.simple[s].root))
    }

    pub fn left_mul(&self, s: usize, w: &IwElement) -> IwElement {
        self.multiply(&self.simple[s].element, w)
    }

    pub fn right_mul(&self, w: &IwElement, s: usize) -> IwElement {
        self.multiply(w, &self.simple[s].element)
    }

    pub fn first_left_descent(&self, w: &IwElement) -> Option<usize> {
        (0..self.simple.len()).find(|&s| self.is_left_descent(w, s))
    }

    /// `w = s_{i_1} ... s_{i_q} tau` with `q = l(w)` and `l(tau) = 0`,
    /// always peeling off the smallest-index left descent.
    pub fn reduced_word(&self, w: &IwElement) -> (Vec<usize>, IwElement) {
        let mut word = Vec::new();
        let mut cur = w.clone();
        while let Some(s) = self.first_left_descent(&cur) {
            word.push(s);
            cur = self.left_mul(s, &cur);
        }
        (word, cur)
    }

    /// The length-zero component `tau_w`.
    pub fn omega_part(&self, w: &IwElement) -> IwElement {
        self.reduced_word(w).1
    }

    /// Length-zero element in the `W_aff`-coset of `t_lambda`.
    pub fn omega_of_translation(&self, lambda: &Cocharacter) -> IwElement {
        self.omega_part(&self.translation(lambda))
    }

    /// Permutation of `S` induced by conjugation with a length-zero element:
    /// `tau s_i tau^{-1} = s_{perm[i]}`, read off from the action on the
    /// affine simple roots.
    pub fn omega_permutation(&self, tau: &IwElement) -> Result<Vec<usize>> {
        if self.length(tau) != 0 {
            return Err(Error::Domain("element does not stabilize the base alcove".into()));
        }
        self.simple
            .iter()
            .map(|s| {
                let image = self.act_on_affine_root(tau, &s.root);
                self.simple
                    .iter()
                    .position(|t| t.root == image)
                    .ok_or_else(|| Error::Domain("length-zero element does not permute the walls".into()))
            })
            .collect()
    }

    /// Bruhat order: `v <= w` iff `tau_v = tau_w` and `v` is a subword of a
    /// reduced word of `w`. Uses the descent recursion: for `s w < w`,
    /// `v <= w` iff `s v <= s w` (when `s v < v`) or `v <= s w` (otherwise).
    pub fn bruhat_leq(&self, v: &IwElement, w: &IwElement) -> bool {
        let mut v = v.clone();
        let mut w = w.clone();
        let mut lv = self.length(&v);
        let mut lw = self.length(&w);
        loop {
            if lv > lw {
                return false;
            }
            if lv == lw {
                return v == w;
            }
            let s = self.first_left_descent(&w).expect("positive length without descent");
            w = self.left_mul(s, &w);
            lw -= 1;
            if self.is_left_descent(&v, s) {
                v = self.left_mul(s, &v);
                lv -= 1;
            }
        }
    }

    /// All elements of length at most `max_len` whose length-zero part lies in
    /// `omegas`, sorted by length then element.
    pub fn enumerate_by_length(&self, max_len: usize, omegas: &[IwElement], cap: usize) -> Result<Vec<IwElement>> {
        if max_len > cap {
            return Err(Error::Limit { what: "length bound", value: max_len, cap });
        }
        let mut layers = self.bfs_layers(max_len, omegas)?;
        let mut out = Vec::new();
        for layer in layers.iter_mut() {
            layer.sort();
            out.append(layer);
        }
        Ok(out)
    }

    /// Breadth-first layers by word length over `S`, seeded with length-zero
    /// elements; `layers[k]` holds the elements of length `k`.
    pub fn bfs_layers(&self, max_len: usize, omegas: &[IwElement]) -> Result<Vec<Vec<IwElement>>> {
        let mut seen: HashSet<IwElement> = HashSet::new();
        let mut layer = Vec::new();
        for tau in omegas {
            if self.length(tau) != 0 {
                return Err(Error::Domain("Omega component has positive length".into()));
            }
            if seen.insert(tau.clone()) {
                layer.push(tau.clone());
            }
        }
        let mut layers = vec![layer];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for u in layers.last().unwrap() {
                for s in 0..self.simple.len() {
                    let y = self.left_mul(s, u);
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            layers.push(next);
        }
        Ok(layers)
    }

    /// Reduced word of a finite Weyl group element (smallest-index left
    /// descents first), as indices of finite simple reflections.
    pub fn finite_word(&self, w: &FiniteWeyl) -> Vec<usize> {
        let mut cur = w.clone();
        let mut word = Vec::new();
        'outer: loop {
            let inv = cur.inverse();
            for (i, cv) in self.datum.simple_coroots().iter().enumerate() {
                // s_i cur < cur iff cur^{-1} alpha_i^vee is negative
                if lattice::dot(self.datum.two_rho(), &inv.apply(cv)) < 0 {
                    word.push(i);
                    cur = self.finite_simple[i].compose(&cur);
                    continue 'outer;
                }
            }
            break;
        }
        debug_assert!(cur.is_identity());
        word
    }

    pub fn to_json(&self, w: &IwElement) -> ElementJson {
        let word = self.finite_word(&w.w);
        let w_str = if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
        };
        ElementJson { t: w.t.clone(), w: w_str }
    }

    pub fn from_json(&self, e: &ElementJson) -> Result<IwElement> {
        if e.t.len() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: e.t.len() });
        }
        let word = crate::parse::parse_finite_word(&e.w, self.datum.semisimple_rank())?;
        Ok(IwElement { t: e.t.clone(), w: self.finite_from_word(&word) })
    }

    pub fn display(&self, w: &IwElement) -> String {
        let j = self.to_json(w);
        format!("{}{}", Cocharacter(j.t), if j.w == "e" { String::new() } else { format!("·{}", j.w.replace(' ', "")) })
    }

    /// Labels of a word in `S`.
    pub fn word_labels(&self, word: &[usize]) -> Vec<String> {
        word.iter().map(|&i| self.simple[i].label.clone()).collect()
    }

    /// Exact count of the lengths over the whole finite Weyl group, for
    /// small groups only (used by tests and reports).
    pub fn finite_weyl_group(&self, cap: usize) -> Result<Vec<FiniteWeyl>> {
        let mut seen: HashMap<FiniteWeyl, ()> = HashMap::new();
        let mut frontier = vec![FiniteWeyl::identity(self.rank())];
        seen.insert(frontier[0].clone(), ());
        let mut out = frontier.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for s in &self.finite_simple {
                    let y = s.compose(w);
                    if !seen.contains_key(&y) {
                        if seen.len() >= cap {
                            return Err(Error::Limit { what: "finite Weyl group order", value: seen.len() + 1, cap });
                        }
                        seen.insert(y.clone(), ());
                        next.push(y.clone());
                        out.push(y);
                    }
                }
            }
            frontier = next;
        }
        Ok(out)
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}", Cocharacter(self.finite.clone()), self.level)
    }
}

impl ApartmentPoint {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn negated(&self) -> ApartmentPoint {
        ApartmentPoint(self.0.iter().map(|c| -*c).collect())
    }

    pub fn abs_max(&self) -> Q {
        self.0.iter().map(|c| c.abs()).max().unwrap_or_else(Q::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{build_root_datum, DynkinType, Isogeny};

    fn group(ty: DynkinType, n: usize, iso: Isogeny) -> AffineWeylGroup {
        AffineWeylGroup::new(build_root_datum(ty, n, iso).unwrap())
    }
    fn sl2() -> AffineWeylGroup {
        group(DynkinType::A, 1, Isogeny::SimplyConnected)
    }
    fn gl2() -> AffineWeylGroup {
        group(DynkinType::GL, 2, Isogeny::General)
    }

    #[test]
    fn apartment_action() {
        let g = sl2();
        let zero = ApartmentPoint::from_integers(&[0]);
        assert_eq!(g.act_on_apartment(&g.identity(), &zero), zero);
        let t = g.translation(&Cocharacter(vec![1]));
        assert_eq!(g.act_on_apartment(&t, &zero), ApartmentPoint::from_integers(&[1]));
        let s = &g.simple_reflections().unwrap()[0].element;
        let half = ApartmentPoint(vec![Q::new(1, 2)]);
        assert_eq!(g.act_on_apartment(s, &half), ApartmentPoint(vec![Q::new(-1, 2)]));
    }

    #[test]
    fn affine_root_action() {
        let g = sl2();
        let alpha = AffineRoot { finite: vec![2], level: 0 };
        assert_eq!(g.act_on_affine_root(&g.identity(), &alpha), alpha);
        let s = &g.simple_reflections().unwrap()[0].element;
        assert_eq!(g.act_on_affine_root(s, &alpha), AffineRoot { finite: vec![-2], level: 0 });
        // t_lambda (a + k) = a + (k - <a, lambda>)
        let t = g.translation(&Cocharacter(vec![3]));
        assert_eq!(g.act_on_affine_root(&t, &alpha), AffineRoot { finite: vec![2], level: -6 });
    }

    #[test]
    fn simple_reflection_counts() {
        assert_eq!(sl2().simple_reflections().unwrap().len(), 2);
        assert_eq!(group(DynkinType::A, 2, Isogeny::SimplyConnected).simple_reflections().unwrap().len(), 3);
        assert_eq!(gl2().simple_reflections().unwrap().len(), 2);
        let torus = AffineWeylGroup::new(build_root_datum(DynkinType::GL, 1, Isogeny::General).unwrap());
        assert_eq!(torus.simple_reflections().unwrap_err(), Error::NoSemisimplePart);
    }

    #[test]
    fn sl2_lengths() {
        let g = sl2();
        assert_eq!(g.length(&g.identity()), 0);
        assert_eq!(g.length(&g.translation(&Cocharacter(vec![1]))), 2);
        assert_eq!(g.length(&g.translation(&Cocharacter(vec![-1]))), 2);
        for s in g.simple_reflections().unwrap() {
            assert_eq!(g.length(&s.element), 1);
        }
    }

    #[test]
    fn sl2_reduced_word_of_translation() {
        let g = sl2();
        let t = g.translation(&Cocharacter(vec![1]));
        let (word, tau) = g.reduced_word(&t);
        assert_eq!(word, vec![1, 0]);
        assert_eq!(tau, g.identity());
        assert_eq!(g.product(&word), t);
    }

    #[test]
    fn gl2_translation_has_length_zero_tail() {
        let g = gl2();
        let t = g.translation(&Cocharacter(vec![1, 0]));
        let (word, tau) = g.reduced_word(&t);
        assert_eq!(word.len(), 1);
        assert_eq!(g.length(&tau), 0);
        assert_ne!(tau, g.identity());
        assert_eq!(g.multiply(&g.product(&word), &tau), t);
        // tau swaps the two walls of the base alcove
        assert_eq!(g.omega_permutation(&tau).unwrap(), vec![1, 0]);
    }

    #[test]
    fn bruhat_basics() {
        let g = gl2();
        let tau = g.omega_of_translation(&Cocharacter(vec![1, 0]));
        assert!(!g.bruhat_leq(&g.identity(), &tau));
        assert!(g.bruhat_leq(&tau, &tau));
        let s0 = &g.simple_reflections().unwrap()[1].element;
        assert!(g.bruhat_leq(&g.identity(), s0));
        assert!(!g.bruhat_leq(s0, &g.identity()));
    }

    #[test]
    fn enumerate_small() {
        let g = sl2();
        let e = g.identity();
        assert_eq!(g.enumerate_by_length(0, std::slice::from_ref(&e), 10).unwrap(), vec![e.clone()]);
        assert_eq!(g.enumerate_by_length(3, std::slice::from_ref(&e), 10).unwrap().len(), 7);
        assert!(matches!(g.enumerate_by_length(11, &[e], 10), Err(Error::Limit { .. })));
        let a2 = group(DynkinType::A, 2, Isogeny::SimplyConnected);
        assert_eq!(a2.enumerate_by_length(2, &[a2.identity()], 10).unwrap().len(), 10);
    }

    #[test]
    fn base_alcove_point_is_interior() {
        for (ty, n) in [(DynkinType::A, 2), (DynkinType::C, 2), (DynkinType::G, 2), (DynkinType::B, 3)] {
            let g = group(ty, n, Isogeny::SimplyConnected);
            let x0 = g.base_alcove_point();
            for s in g.simple_reflections().unwrap() {
                assert!(g.evaluate(&s.root, &x0) > Q::zero());
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let g = group(DynkinType::C, 2, Isogeny::SimplyConnected);
        let w = g.product(&[2, 0, 1, 0]);
        let j = g.to_json(&w);
        assert_eq!(g.from_json(&j).unwrap(), w);
    }
}
