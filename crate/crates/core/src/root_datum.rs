//! Root data of split reductive groups.
//!
//! A datum is assembled from factors (a simple type with an isogeny class,
//! `GL_n`, or a split torus). Cocharacters live in `X_*(T) = Z^rank` and
//! characters in the dual lattice, with the pairing given by the dot
//! product of coordinates.
//!
//! * simply connected factors use the simple coroots as basis of `X_*`;
//! * adjoint factors use the fundamental coweights;
//! * `GL_n` uses the standard basis with roots `e_i - e_j`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{self, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DynkinType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    /// General linear group; `rank` is `n` in `GL_n`.
    GL,
    /// Split torus of the given rank.
    T,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DynkinType::A => "A",
            DynkinType::B => "B",
            DynkinType::C => "C",
            DynkinType::D => "D",
            DynkinType::E => "E",
            DynkinType::F => "F",
            DynkinType::G => "G",
            DynkinType::GL => "GL",
            DynkinType::T => "T",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Isogeny {
    #[serde(rename = "sc")]
    SimplyConnected,
    #[serde(rename = "ad")]
    Adjoint,
    #[serde(rename = "gl")]
    General,
}

impl fmt::Display for Isogeny {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Isogeny::SimplyConnected => "sc",
            Isogeny::Adjoint => "ad",
            Isogeny::General => "gl",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    #[serde(rename = "type")]
    pub ty: DynkinType,
    pub rank: usize,
    pub isogeny: Isogeny,
}

impl Factor {
    pub fn new(ty: DynkinType, rank: usize, isogeny: Isogeny) -> Result<Self> {
        let ok_rank = match ty {
            DynkinType::A => rank >= 1,
            DynkinType::B | DynkinType::C => rank >= 2,
            DynkinType::D => rank >= 4,
            DynkinType::E => (6..=8).contains(&rank),
            DynkinType::F => rank == 4,
            DynkinType::G => rank == 2,
            DynkinType::GL | DynkinType::T => rank >= 1,
        };
        if !ok_rank {
            return Err(Error::InvalidDatum(format!("no Dynkin type {ty}{rank}")));
        }
        let ok_iso = match ty {
            DynkinType::GL => isogeny == Isogeny::General,
            DynkinType::T => true,
            _ => isogeny != Isogeny::General,
        };
        if !ok_iso {
            return Err(Error::InvalidDatum(format!(
                "isogeny class {isogeny} is not available for type {ty}"
            )));
        }
        Ok(Factor { ty, rank, isogeny })
    }

    /// Rank of the semisimple part.
    fn semisimple_rank(&self) -> usize {
        match self.ty {
            DynkinType::GL => self.rank - 1,
            DynkinType::T => 0,
            _ => self.rank,
        }
    }

    fn label(&self) -> String {
        match self.ty {
            DynkinType::GL => format!("GL{}", self.rank),
            DynkinType::T => format!("T{}", self.rank),
            DynkinType::A if self.isogeny == Isogeny::SimplyConnected => format!("SL{}", self.rank + 1),
            DynkinType::A => format!("PGL{}", self.rank + 1),
            _ => format!("{}{}{}", self.ty, self.rank, self.isogeny),
        }
    }
}

/// Cartan matrix with `m[i][j] = <alpha_j, alpha_i^vee>` (Bourbaki numbering).
pub fn cartan_matrix(ty: DynkinType, n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match ty {
        DynkinType::A | DynkinType::B | DynkinType::C | DynkinType::GL => {
            for i in 1..n {
                link(i - 1, i);
            }
        }
        DynkinType::D => {
            for i in 1..n - 1 {
                link(i - 1, i);
            }
            link(n - 3, n - 1);
        }
        DynkinType::E => {
            // 1-3-4-5-6-7-8 with 2 attached to 4
            link(0, 2);
            link(1, 3);
            for i in 3..n {
                link(i - 1, i);
            }
        }
        DynkinType::F => {
            for i in 1..4 {
                link(i - 1, i);
            }
        }
        DynkinType::G => link(0, 1),
        DynkinType::T => {}
    }
    match ty {
        // alpha_n short
        DynkinType::B => m[n - 1][n - 2] = -2,
        // alpha_n long
        DynkinType::C => m[n - 2][n - 1] = -2,
        // alpha_1, alpha_2 long
        DynkinType::F => m[2][1] = -2,
        // alpha_1 short
        DynkinType::G => m[0][1] = -3,
        _ => {}
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub root: Vec<i64>,
    pub coroot: Vec<i64>,
    /// coefficients in the simple roots
    pub coords: Vec<i64>,
    pub height: i64,
    pub component: usize,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.height > 0
    }
}

/// An irreducible component of the root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub ty: DynkinType,
    pub rank: usize,
    /// global index of the first simple root
    pub first_node: usize,
    /// index into `RootDatum::roots`
    pub highest_root: usize,
    pub coxeter_number: i64,
}

impl Component {
    pub fn nodes(&self) -> std::ops::Range<usize> {
        self.first_node..self.first_node + self.rank
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cocharacter(pub Vec<i64>);

impl Cocharacter {
    pub fn zero(rank: usize) -> Self {
        Cocharacter(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Cocharacter) -> Cocharacter {
        Cocharacter(lattice::add(&self.0, &other.0))
    }

    pub fn neg(&self) -> Cocharacter {
        Cocharacter(lattice::neg(&self.0))
    }
}

impl fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Element of `pi_1(G) = X_*(T) / coroot lattice` in Smith coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Pi1Class(pub Vec<i64>);

impl Pi1Class {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Pi1 {
    /// invariant factors, `0` meaning a free summand `Z`
    factors: Vec<i64>,
    rows: Vec<Vec<i64>>,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    label: String,
    factors: Vec<Factor>,
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Root>,
    root_index: HashMap<Vec<i64>, usize>,
    components: Vec<Component>,
    two_rho: Vec<i64>,
    two_rho_check: Vec<i64>,
    torus_rank: usize,
    fund_weights: Vec<Vec<Q>>,
    fund_coweights: Vec<Vec<Q>>,
    pi1: Pi1,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for RootDatum {}

/// Builds the datum of a single factor.
pub fn build_root_datum(ty: DynkinType, rank: usize, isogeny: Isogeny) -> Result<RootDatum> {
    RootDatum::from_factors(&[Factor::new(ty, rank, isogeny)?])
}

impl RootDatum {
    pub fn from_factors(factors: &[Factor]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidDatum("empty list of factors".into()));
        }
        let rank: usize = factors.iter().map(|f| f.rank).sum();
        let mut simple_roots = Vec::new();
        let mut simple_coroots = Vec::new();
        let mut comp_specs = Vec::new();
        let mut offset = 0;
        let mut torus_rank = 0;
        for f in factors {
            let n = f.semisimple_rank();
            let embed = |local: Vec<i64>| {
                let mut v = vec![0; rank];
                v[offset..offset + local.len()].copy_from_slice(&local);
                v
            };
            match f.ty {
                DynkinType::T => torus_rank += f.rank,
                DynkinType::GL => {
                    // the center of GL_n
                    torus_rank += 1;
                    for i in 0..n {
                        let mut v = vec![0; f.rank];
                        v[i] = 1;
                        v[i + 1] = -1;
                        simple_roots.push(embed(v.clone()));
                        simple_coroots.push(embed(v));
                    }
                    if n > 0 {
                        comp_specs.push((DynkinType::A, n));
                    }
                }
                _ => {
                    let c = cartan_matrix(f.ty, n);
                    for j in 0..n {
                        let (root, coroot) = match f.isogeny {
                            Isogeny::SimplyConnected => {
                                let mut e = vec![0; n];
                                e[j] = 1;
                                ((0..n).map(|i| c[i][j]).collect(), e)
                            }
                            _ => {
                                let mut e = vec![0; n];
                                e[j] = 1;
                                (e, c[j].clone())
                            }
                        };
                        simple_roots.push(embed(root));
                        simple_coroots.push(embed(coroot));
                    }
                    comp_specs.push((f.ty, n));
                }
            }
            offset += f.rank;
        }
        let ell = simple_roots.len();
        let cartan: Vec<Vec<i64>> = (0..ell)
            .map(|i| (0..ell).map(|j| lattice::dot(&simple_roots[j], &simple_coroots[i])).collect())
            .collect();

        // Full root system by closing the simple (root, coroot) pairs under
        // simple reflections.
        let mut roots: Vec<Root> = Vec::new();
        let mut root_index = HashMap::new();
        let mut queue = VecDeque::new();
        let mut node_component = vec![0usize; ell];
        {
            let mut first = 0;
            for (c, &(_, n)) in comp_specs.iter().enumerate() {
                for k in first..first + n {
                    node_component[k] = c;
                }
                first += n;
            }
        }
        for i in 0..ell {
            let mut coords = vec![0; ell];
            coords[i] = 1;
            let r = Root {
                root: simple_roots[i].clone(),
                coroot: simple_coroots[i].clone(),
                coords,
                height: 1,
                component: node_component[i],
            };
            root_index.insert(r.root.clone(), roots.len());
            queue.push_back(roots.len());
            roots.push(r);
        }
        while let Some(idx) = queue.pop_front() {
            for j in 0..ell {
                let r = &roots[idx];
                let p = lattice::dot(&r.root, &simple_coroots[j]);
                let pc = lattice::dot(&simple_roots[j], &r.coroot);
                if p == 0 && pc == 0 {
                    continue;
                }
                let root = lattice::sub(&r.root, &lattice::scale(p, &simple_roots[j]));
                if root_index.contains_key(&root) {
                    continue;
                }
                let coroot = lattice::sub(&r.coroot, &lattice::scale(pc, &simple_coroots[j]));
                let mut coords = r.coords.clone();
                coords[j] -= p;
                let height = coords.iter().sum();
                let component = r.component;
                root_index.insert(root.clone(), roots.len());
                queue.push_back(roots.len());
                roots.push(Root { root, coroot, coords, height, component });
            }
        }
        for r in &roots {
            let nonneg = r.coords.iter().all(|&c| c >= 0);
            let nonpos = r.coords.iter().all(|&c| c <= 0);
            if !(nonneg || nonpos) {
                return Err(Error::InvalidDatum("root with mixed-sign coefficients".into()));
            }
        }
        // canonical order: positive roots by height, then negatives
        roots.sort_by(|a, b| {
            (b.is_positive(), a.height.abs(), &a.coords).cmp(&(a.is_positive(), b.height.abs(), &b.coords))
        });
        let root_index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.root.clone(), i)).collect();

        let mut two_rho = vec![0; rank];
        let mut two_rho_check = vec![0; rank];
        for r in roots.iter().filter(|r| r.is_positive()) {
            two_rho = lattice::add(&two_rho, &r.root);
            two_rho_check = lattice::add(&two_rho_check, &r.coroot);
        }

        let mut components = Vec::new();
        let mut first = 0;
        for (c, &(ty, n)) in comp_specs.iter().enumerate() {
            let highest_root = (0..roots.len())
                .filter(|&i| roots[i].component == c)
                .max_by_key(|&i| (roots[i].height, std::cmp::Reverse(roots[i].coords.clone())))
                .expect("component without roots");
            let coxeter_number = roots[highest_root].height + 1;
            components.push(Component { ty, rank: n, first_node: first, highest_root, coxeter_number });
            first += n;
        }

        // fundamental (co)weights inside the rational span of the simple (co)roots
        let cq: Vec<Q> = cartan.iter().flatten().map(|&x| Q::from_integer(x)).collect();
        let inv = if ell > 0 {
            lattice::rational_inverse(&cq, ell)
                .ok_or_else(|| Error::InvalidDatum("singular Cartan matrix".into()))?
        } else {
            Vec::new()
        };
        let fund_coweights: Vec<Vec<Q>> = (0..ell)
            .map(|i| {
                let mut v = vec![Q::zero(); rank];
                for k in 0..ell {
                    let y = inv[i * ell + k];
                    for (vx, &c) in v.iter_mut().zip(&simple_coroots[k]) {
                        *vx += y * Q::from_integer(c);
                    }
                }
                v
            })
            .collect();
        let fund_weights: Vec<Vec<Q>> = (0..ell)
            .map(|i| {
                let mut v = vec![Q::zero(); rank];
                for k in 0..ell {
                    let z = inv[k * ell + i];
                    for (vx, &c) in v.iter_mut().zip(&simple_roots[k]) {
                        *vx += z * Q::from_integer(c);
                    }
                }
                v
            })
            .collect();

        let pi1 = compute_pi1(rank, &simple_coroots);
        let label = factors.iter().map(Factor::label).collect::<Vec<_>>().join("x");

        let datum = RootDatum {
            label,
            factors: factors.to_vec(),
            rank,
            simple_roots,
            simple_coroots,
            cartan,
            roots,
            root_index,
            components,
            two_rho,
            two_rho_check,
            torus_rank,
            fund_weights,
            fund_coweights,
            pi1,
        };
        datum.check_invariants()?;
        Ok(datum)
    }

    fn check_invariants(&self) -> Result<()> {
        let mut offset = 0;
        for f in &self.factors {
            if !matches!(f.ty, DynkinType::GL | DynkinType::T) {
                let n = f.rank;
                let c = cartan_matrix(f.ty, n);
                for i in 0..n {
                    for j in 0..n {
                        if self.cartan[offset + i][offset + j] != c[i][j] {
                            return Err(Error::InvalidDatum("Cartan matrix mismatch".into()));
                        }
                    }
                }
            }
            offset += f.semisimple_rank();
        }
        for cv in &self.simple_coroots {
            if lattice::dot(&self.two_rho, cv) != 2 {
                return Err(Error::InvalidDatum("2rho does not pair to 2 with a simple coroot".into()));
            }
        }
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Rank of `X_*(T)`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// All roots: positive roots first (by height), then negative roots.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// Sum of the positive coroots.
    pub fn two_rho_check(&self) -> &[i64] {
        &self.two_rho_check
    }

    pub fn max_height(&self) -> i64 {
        self.components.iter().map(|c| c.coxeter_number - 1).max().unwrap_or(0)
    }

    pub fn fundamental_coweights(&self) -> &[Vec<Q>] {
        &self.fund_coweights
    }

    pub fn pi1_invariant_factors(&self) -> &[i64] {
        &self.pi1.factors
    }

    fn check_rank(&self, mu: &Cocharacter) -> Result<()> {
        if mu.0.len() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: mu.0.len() });
        }
        Ok(())
    }

    pub fn pairing(&self, chi: &[i64], mu: &Cocharacter) -> i64 {
        lattice::dot(chi, &mu.0)
    }

    pub fn is_dominant(&self, mu: &Cocharacter) -> bool {
        // positive roots are nonnegative combinations of simple roots
        mu.0.len() == self.rank && self.simple_roots.iter().all(|a| lattice::dot(a, &mu.0) >= 0)
    }

    /// Coefficients of `x` in the simple coroots, if `x` lies in their
    /// rational span.
    pub fn coroot_coordinates(&self, x: &[i64]) -> Option<Vec<Q>> {
        let n: Vec<Q> = self
            .fund_weights
            .iter()
            .map(|w| w.iter().zip(x).map(|(a, &b)| *a * Q::from_integer(b)).sum())
            .collect();
        let mut back = vec![Q::zero(); self.rank];
        for (c, cv) in n.iter().zip(&self.simple_coroots) {
            for (b, &v) in back.iter_mut().zip(cv) {
                *b += *c * Q::from_integer(v);
            }
        }
        let same = back.iter().zip(x).all(|(b, &v)| *b == Q::from_integer(v));
        same.then_some(n)
    }

    /// `lambda <= mu` in the dominance order.
    pub fn dominance_leq(&self, lambda: &Cocharacter, mu: &Cocharacter) -> Result<bool> {
        self.check_rank(lambda)?;
        self.check_rank(mu)?;
        for x in [lambda, mu] {
            if !self.is_dominant(x) {
                return Err(Error::NotDominant(x.0.clone()));
            }
        }
        let diff = lattice::sub(&mu.0, &lambda.0);
        Ok(match self.coroot_coordinates(&diff) {
            Some(n) => n.iter().all(|c| c.is_integer() && !c.is_negative()),
            None => false,
        })
    }

    /// Dominant element of the `W_0`-orbit of `mu`, together with the
    /// simple reflections applied to reach it (in order of application).
    pub fn dominant_representative(&self, mu: &Cocharacter) -> Result<(Cocharacter, Vec<usize>)> {
        self.check_rank(mu)?;
        let mut x = mu.0.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..self.semisimple_rank()).find(|&i| lattice::dot(&self.simple_roots[i], &x) < 0) {
            x = self.reflect_cocharacter(i, &x);
            word.push(i);
        }
        Ok((Cocharacter(x), word))
    }

    /// `s_i(x) = x - <alpha_i, x> alpha_i^vee`.
    pub fn reflect_cocharacter(&self, i: usize, x: &[i64]) -> Vec<i64> {
        let p = lattice::dot(&self.simple_roots[i], x);
        lattice::sub(x, &lattice::scale(p, &self.simple_coroots[i]))
    }

    /// Full `W_0`-orbit of `mu`, by breadth-first search.
    pub fn weyl_orbit(&self, mu: &Cocharacter) -> Vec<Cocharacter> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::from([mu.0.clone()]);
        seen.insert(mu.0.clone());
        while let Some(x) = queue.pop_front() {
            for i in 0..self.semisimple_rank() {
                let y = self.reflect_cocharacter(i, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
            out.push(Cocharacter(x));
        }
        out.sort();
        out
    }

    pub fn pi1_class(&self, mu: &Cocharacter) -> Result<Pi1Class> {
        self.check_rank(mu)?;
        Ok(Pi1Class(
            self.pi1
                .rows
                .iter()
                .zip(&self.pi1.factors)
                .map(|(row, &d)| {
                    let v = lattice::dot(row, &mu.0);
                    if d == 0 {
                        v
                    } else {
                        v.rem_euclid(d)
                    }
                })
                .collect(),
        ))
    }

    pub fn pi1_add(&self, a: &Pi1Class, b: &Pi1Class) -> Pi1Class {
        Pi1Class(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.pi1.factors)
                .map(|((x, y), &d)| if d == 0 { x + y } else { (x + y).rem_euclid(d) })
                .collect(),
        )
    }

    /// Fundamental coweight `omega_i^vee` if it is integral in `X_*`.
    pub fn integral_fundamental_coweight(&self, i: usize) -> Option<Cocharacter> {
        let w = self.fund_coweights.get(i)?;
        w.iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Cocharacter)
    }

    /// All dominant cocharacters `mu` with `<2rho, mu> <= bound`.
    ///
    /// Only for semisimple data: with a central torus the set is infinite.
    pub fn dominant_cocharacters(&self, bound: i64) -> Result<Vec<Cocharacter>> {
        if self.torus_rank > 0 {
            return Err(Error::Domain("dominant cocharacters of bounded height form an infinite set".into()));
        }
        let ell = self.semisimple_rank();
        // <2rho, omega_i^vee> for each i
        let weights: Vec<Q> = self
            .fund_coweights
            .iter()
            .map(|w| w.iter().zip(&self.two_rho).map(|(a, &b)| *a * Q::from_integer(b)).sum())
            .collect();
        let mut out = Vec::new();
        let mut n = vec![0i64; ell];
        fn rec(
            d: &RootDatum,
            weights: &[Q],
            bound: Q,
            i: usize,
            n: &mut Vec<i64>,
            used: Q,
            out: &mut Vec<Cocharacter>,
        ) {
            if i == n.len() {
                let mut v = vec![Q::zero(); d.rank];
                for (k, &c) in n.iter().enumerate() {
                    for (x, w) in v.iter_mut().zip(&d.fund_coweights[k]) {
                        *x += *w * Q::from_integer(c);
                    }
                }
                if v.iter().all(|c| c.is_integer()) {
                    out.push(Cocharacter(v.iter().map(|c| c.to_integer()).collect()));
                }
                return;
            }
            let mut c = 0;
            loop {
                let u = used + weights[i] * Q::from_integer(c);
                if u > bound {
                    break;
                }
                n[i] = c;
                rec(d, weights, bound, i + 1, n, u, out);
                c += 1;
            }
            n[i] = 0;
        }
        rec(self, &weights, Q::from_integer(bound), 0, &mut n, Q::zero(), &mut out);
        out.sort_by_key(|mu| (lattice::dot(&self.two_rho, &mu.0), mu.clone()));
        Ok(out)
    }

    /// Dominant `lambda` with `lambda <= mu`.
    pub fn dominant_below(&self, mu: &Cocharacter) -> Result<Vec<Cocharacter>> {
        self.check_rank(mu)?;
        if !self.is_dominant(mu) {
            return Err(Error::NotDominant(mu.0.clone()));
        }
        // every such lambda is mu minus a nonnegative combination of simple
        // coroots, and <2rho, .> drops by 2 per simple coroot
        let mut seen = HashSet::new();
        let mut queue = VecDeque::from([mu.0.clone()]);
        seen.insert(mu.0.clone());
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            if self.is_dominant(&Cocharacter(x.clone())) {
                out.push(Cocharacter(x.clone()));
            }
            for cv in &self.simple_coroots {
                let y = lattice::sub(&x, cv);
                if lattice::dot(&self.two_rho, &y) >= 0 && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        out.sort_by_key(|l| (lattice::dot(&self.two_rho, &l.0), l.clone()));
        Ok(out)
    }

    pub fn to_json(&self) -> RootDatumJson {
        RootDatumJson {
            ty: self.factors.iter().map(|f| format!("{}{}", f.ty, f.rank)).collect::<Vec<_>>().join("x"),
            label: self.label.clone(),
            rank: self.rank,
            isogeny: self.factors.iter().map(|f| f.isogeny.to_string()).collect::<Vec<_>>().join("x"),
            simple_roots: self.simple_roots.clone(),
            simple_coroots: self.simple_coroots.clone(),
            positive_roots: self.positive_roots().map(|r| r.root.clone()).collect(),
            two_rho: self.two_rho.clone(),
            pi1_invariant_factors: self.pi1.factors.clone(),
        }
    }
}

fn compute_pi1(rank: usize, coroots: &[Vec<i64>]) -> Pi1 {
    let ell = coroots.len();
    if ell == 0 {
        let rows = (0..rank)
            .map(|i| {
                let mut e = vec![0; rank];
                e[i] = 1;
                e
            })
            .collect();
        return Pi1 { factors: vec![0; rank], rows };
    }
    // columns are the simple coroots
    let mut a = vec![0; rank * ell];
    for (j, cv) in coroots.iter().enumerate() {
        for i in 0..rank {
            a[i * ell + j] = cv[i];
        }
    }
    let (u, diag) = lattice::smith_left(&a, rank, ell);
    let mut factors = Vec::new();
    let mut rows = Vec::new();
    for (i, &d) in diag.iter().enumerate() {
        if d.abs() > 1 {
            factors.push(d.abs());
            rows.push(u[i * rank..(i + 1) * rank].to_vec());
        }
    }
    let free: Vec<Vec<i64>> = (diag.len()..rank).map(|i| u[i * rank..(i + 1) * rank].to_vec()).collect();
    for row in lattice::row_echelon_basis(&free) {
        factors.push(0);
        rows.push(row);
    }
    Pi1 { factors, rows }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDatumJson {
    #[serde(rename = "type")]
    pub ty: String,
    pub label: String,
    pub rank: usize,
    pub isogeny: String,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub two_rho: Vec<i64>,
    pub pi1_invariant_factors: Vec<i64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> RootDatum {
        build_root_datum(DynkinType::A, 1, Isogeny::SimplyConnected).unwrap()
    }
    fn pgl2() -> RootDatum {
        build_root_datum(DynkinType::A, 1, Isogeny::Adjoint).unwrap()
    }
    fn gl2() -> RootDatum {
        build_root_datum(DynkinType::GL, 2, Isogeny::General).unwrap()
    }
    fn mu(v: &[i64]) -> Cocharacter {
        Cocharacter(v.to_vec())
    }

    #[test]
    fn sl2_data() {
        let d = sl2();
        assert_eq!(d.simple_coroots(), &[vec![1]]);
        assert_eq!(d.two_rho(), &[2]);
        assert_eq!(lattice::dot(&d.simple_roots()[0], &d.simple_coroots()[0]), 2);
        assert!(d.pi1_invariant_factors().is_empty());
    }

    #[test]
    fn gl2_data() {
        let d = gl2();
        let pos: Vec<_> = d.positive_roots().map(|r| r.root.clone()).collect();
        assert_eq!(pos, vec![vec![1, -1]]);
        assert_eq!(d.two_rho(), &[1, -1]);
        assert_eq!(d.pi1_invariant_factors(), &[0]);
    }

    #[test]
    fn pgl2_data() {
        let d = pgl2();
        assert_eq!(d.simple_coroots(), &[vec![2]]);
        assert_eq!(d.pi1_invariant_factors(), &[2]);
    }

    #[test]
    fn positive_root_counts_and_coxeter_numbers() {
        let cases = [
            (DynkinType::A, 3, 6, 4),
            (DynkinType::B, 3, 9, 6),
            (DynkinType::C, 4, 16, 8),
            (DynkinType::D, 5, 20, 8),
            (DynkinType::E, 6, 36, 12),
            (DynkinType::E, 7, 63, 18),
            (DynkinType::E, 8, 120, 30),
            (DynkinType::F, 4, 24, 12),
            (DynkinType::G, 2, 6, 6),
        ];
        for (ty, n, npos, h) in cases {
            for iso in [Isogeny::SimplyConnected, Isogeny::Adjoint] {
                let d = build_root_datum(ty, n, iso).unwrap();
                assert_eq!(d.positive_roots().count(), npos, "{ty}{n}");
                assert_eq!(d.components()[0].coxeter_number, h, "{ty}{n}");
                assert_eq!(d.roots().len(), 2 * npos);
            }
        }
    }

    #[test]
    fn fundamental_groups() {
        let cases = [
            (DynkinType::A, 2, Isogeny::Adjoint, vec![3]),
            (DynkinType::B, 3, Isogeny::Adjoint, vec![2]),
            (DynkinType::C, 3, Isogeny::Adjoint, vec![2]),
            (DynkinType::D, 4, Isogeny::Adjoint, vec![2, 2]),
            (DynkinType::D, 5, Isogeny::Adjoint, vec![4]),
            (DynkinType::E, 6, Isogeny::Adjoint, vec![3]),
            (DynkinType::E, 7, Isogeny::Adjoint, vec![2]),
            (DynkinType::E, 8, Isogeny::Adjoint, vec![]),
            (DynkinType::G, 2, Isogeny::Adjoint, vec![]),
            (DynkinType::E, 6, Isogeny::SimplyConnected, vec![]),
        ];
        for (ty, n, iso, f) in cases {
            let d = build_root_datum(ty, n, iso).unwrap();
            assert_eq!(d.pi1_invariant_factors(), f.as_slice(), "{ty}{n}{iso}");
        }
    }

    #[test]
    fn invalid_combinations() {
        assert!(build_root_datum(DynkinType::G, 3, Isogeny::SimplyConnected).is_err());
        assert!(build_root_datum(DynkinType::A, 2, Isogeny::General).is_err());
        assert!(build_root_datum(DynkinType::GL, 2, Isogeny::Adjoint).is_err());
        assert!(build_root_datum(DynkinType::E, 9, Isogeny::Adjoint).is_err());
        assert!(build_root_datum(DynkinType::D, 3, Isogeny::Adjoint).is_err());
    }

    #[test]
    fn dominance_examples() {
        let d = gl2();
        assert!(!d.is_dominant(&mu(&[0, 1])));
        assert!(d.is_dominant(&mu(&[1, 0])));
        assert!(d.dominance_leq(&mu(&[0, 0]), &mu(&[1, -1])).unwrap());
        let p = pgl2();
        assert!(p.dominance_leq(&mu(&[1]), &mu(&[3])).unwrap());
        assert!(!p.dominance_leq(&mu(&[1]), &mu(&[2])).unwrap());
        assert!(p.dominance_leq(&mu(&[0]), &mu(&[-1])).is_err());
    }

    #[test]
    fn dominant_representative_examples() {
        let d = gl2();
        assert_eq!(d.dominant_representative(&mu(&[0, 1])).unwrap(), (mu(&[1, 0]), vec![0]));
        let s = sl2();
        assert_eq!(s.dominant_representative(&mu(&[-1])).unwrap(), (mu(&[1]), vec![0]));
        assert_eq!(s.dominant_representative(&mu(&[3])).unwrap(), (mu(&[3]), vec![]));
    }

    #[test]
    fn pi1_examples() {
        assert!(sl2().pi1_class(&mu(&[5])).unwrap().is_zero());
        assert_eq!(pgl2().pi1_class(&mu(&[1])).unwrap(), Pi1Class(vec![1]));
        assert_eq!(gl2().pi1_class(&mu(&[1, 0])).unwrap(), Pi1Class(vec![1]));
        assert_eq!(gl2().pi1_class(&mu(&[3, -1])).unwrap(), Pi1Class(vec![2]));
    }

    #[test]
    fn dominant_cocharacters_of_pgl2() {
        let d = pgl2();
        let all = d.dominant_cocharacters(3).unwrap();
        assert_eq!(all, vec![mu(&[0]), mu(&[1]), mu(&[2]), mu(&[3])]);
        let sl3 = build_root_datum(DynkinType::A, 2, Isogeny::SimplyConnected).unwrap();
        // <2rho, n1 w1 + n2 w2> = 2(n1 + n2); integral iff n1 = n2 mod 3
        let all = sl3.dominant_cocharacters(4).unwrap();
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn product_datum() {
        let d = RootDatum::from_factors(&[
            Factor::new(DynkinType::A, 1, Isogeny::SimplyConnected).unwrap(),
            Factor::new(DynkinType::GL, 2, Isogeny::General).unwrap(),
        ])
        .unwrap();
        assert_eq!(d.rank(), 3);
        assert_eq!(d.components().len(), 2);
        assert_eq!(d.pi1_invariant_factors(), &[0]);
        assert_eq!(d.label(), "SL2xGL2");
    }
}
