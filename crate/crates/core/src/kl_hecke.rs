//! Kazhdan-Lusztig polynomials of the extended affine Weyl group and the
//! resulting classes of intersection motives.
//!
//! Polynomials are computed one column `{P_{x,w} : x <= w}` at a time with
//! the descent recursion, for `w` in `W_aff`; a length-zero factor on the
//! right is stripped first. Columns are cached and shared between threads.
//!
//! Classes of `IC_w(n)` drop the shift and keep the twist: a cell of
//! dimension `d` carrying `P(q)` contributes `P(L) L^d`. Parabolic classes
//! use maximal-length representatives of `v W_J`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::affine_weyl::{AffineWeylGroup, IwElement};
use crate::error::{Error, Result};
use crate::flag_cells::{self, CellTable};
use crate::motive::{MotiveClass, TatePoly};

pub const CONVENTION: &str = "max-rep-parabolic";

/// Integer polynomial in `q`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KlPoly(pub Vec<i64>);

impl KlPoly {
    pub fn one() -> Self {
        KlPoly(vec![1])
    }

    pub fn zero() -> Self {
        KlPoly(Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    pub fn to_tate(&self) -> TatePoly {
        TatePoly::from_coeffs(self.0.iter().enumerate().map(|(d, &c)| (d as i64, c)))
    }

    fn trimmed(mut v: Vec<i64>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        KlPoly(v)
    }
}

impl fmt::Display for KlPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_tate().to_string().replace('L', "q");
        f.write_str(&s)
    }
}

/// `acc += c * q^shift * p`.
fn axpy(acc: &mut Vec<i64>, c: i64, shift: usize, p: &[i64]) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &x) in p.iter().enumerate() {
        acc[i + shift] += c * x;
    }
}

struct Column {
    len: usize,
    entries: HashMap<IwElement, Vec<i64>>,
}

impl Column {
    fn get(&self, x: &IwElement) -> &[i64] {
        self.entries.get(x).map_or(&[], |p| p.as_slice())
    }

    /// `mu(z, w)`: coefficient of `q^{(l(w)-l(z)-1)/2}` in `P_{z,w}`.
    fn mu(&self, z: &IwElement, lz: usize) -> i64 {
        let d = self.len - lz;
        if d.is_multiple_of(2) {
            return 0;
        }
        self.get(z).get((d - 1) / 2).copied().unwrap_or(0)
    }
}

/// Memoized Kazhdan-Lusztig polynomials up to a length bound.
pub struct KazhdanLusztig<'a> {
    g: &'a AffineWeylGroup,
    max_len: usize,
    columns: Mutex<HashMap<IwElement, Arc<Column>>>,
}

impl<'a> KazhdanLusztig<'a> {
    pub fn new(g: &'a AffineWeylGroup, max_len: usize) -> Self {
        KazhdanLusztig { g, max_len, columns: Mutex::new(HashMap::new()) }
    }

    pub fn group(&self) -> &AffineWeylGroup {
        self.g
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// `P_{x,w}`; errors when `x` is not below `w`, including the case of
    /// different length-zero components.
    pub fn kl_polynomial(&self, x: &IwElement, w: &IwElement) -> Result<KlPoly> {
        let p = self.kl_polynomial_or_zero(x, w)?;
        if p.is_zero() {
            return Err(Error::Incomparable);
        }
        Ok(p)
    }

    /// `P_{x,w}`, zero when `x` is not below `w`.
    pub fn kl_polynomial_or_zero(&self, x: &IwElement, w: &IwElement) -> Result<KlPoly> {
        let g = self.g;
        let lw = g.length(w);
        if lw > self.max_len {
            return Err(Error::Limit { what: "length for Kazhdan-Lusztig polynomials", value: lw, cap: self.max_len });
        }
        let tau_inv = g.inverse(&g.omega_part(w));
        let w0 = g.multiply(w, &tau_inv);
        let x0 = g.multiply(x, &tau_inv);
        let col = self.column(&w0);
        Ok(KlPoly::trimmed(col.get(&x0).to_vec()))
    }

    /// All `x <= w` with `P_{x,w}`, sorted by length then element.
    pub fn column_of(&self, w: &IwElement) -> Result<Vec<(IwElement, KlPoly)>> {
        let g = self.g;
        let lw = g.length(w);
        if lw > self.max_len {
            return Err(Error::Limit { what: "length for Kazhdan-Lusztig polynomials", value: lw, cap: self.max_len });
        }
        let tau = g.omega_part(w);
        let tau_inv = g.inverse(&tau);
        let col = self.column(&g.multiply(w, &tau_inv));
        let mut out: Vec<(IwElement, KlPoly)> = col
            .entries
            .iter()
            .map(|(x, p)| (g.multiply(x, &tau), KlPoly::trimmed(p.clone())))
            .collect();
        out.sort_by_cached_key(|(x, _)| (g.length(x), x.clone()));
        Ok(out)
    }

    fn column(&self, w: &IwElement) -> Arc<Column> {
        if let Some(c) = self.columns.lock().unwrap().get(w) {
            return c.clone();
        }
        let c = Arc::new(self.compute_column(w));
        self.columns.lock().unwrap().entry(w.clone()).or_insert(c).clone()
    }

    fn compute_column(&self, w: &IwElement) -> Column {
        let g = self.g;
        let Some(s) = g.first_left_descent(w) else {
            return Column { len: 0, entries: HashMap::from([(w.clone(), vec![1])]) };
        };
        let v = g.left_mul(s, w);
        let cv = self.column(&v);
        let lw = cv.len + 1;
        // z < v with s z < z and mu(z, v) != 0
        let mut corrections = Vec::new();
        for z in cv.entries.keys() {
            let lz = g.length(z);
            if lz < cv.len && g.is_left_descent(z, s) {
                let m = cv.mu(z, lz);
                if m != 0 {
                    corrections.push((self.column(z), m, (lw - lz) / 2));
                }
            }
        }
        let mut entries = HashMap::new();
        let mut support: Vec<IwElement> = cv.entries.keys().cloned().collect();
        support.extend(cv.entries.keys().map(|x| g.left_mul(s, x)));
        for x in support {
            if entries.contains_key(&x) {
                continue;
            }
            let sx = g.left_mul(s, &x);
            let c = usize::from(g.is_left_descent(&x, s));
            let mut p = Vec::new();
            axpy(&mut p, 1, 1 - c, cv.get(&sx));
            axpy(&mut p, 1, c, cv.get(&x));
            for (cz, m, shift) in &corrections {
                axpy(&mut p, -m, *shift, cz.get(&x));
            }
            let p = KlPoly::trimmed(p).0;
            if !p.is_empty() {
                entries.insert(x, p);
            }
        }
        Column { len: lw, entries }
    }
}

/// Class of the intersection motive supported on a Schubert variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IcClass {
    #[serde(flatten)]
    pub poly: TatePoly,
    pub bound: String,
    pub convention: String,
    /// the same sum with every polynomial replaced by 1
    #[serde(skip)]
    pub schubert: TatePoly,
}

impl IcClass {
    pub fn as_motive(&self) -> MotiveClass {
        MotiveClass::new(self.poly.clone(), format!("IC {}", self.bound))
    }
}

/// `sum over rows v of P_{v~, w~}(L) L^{d_v}`, where `~` is the maximal
/// representative in `v W_J`.
pub fn ic_class(g: &AffineWeylGroup, kl: &KazhdanLusztig<'_>, table: &CellTable) -> Result<IcClass> {
    let right = &table.bound.right;
    let w0j = flag_cells::longest_element(g, right);
    let top = flag_cells::top_cell(g, &table.bound);
    let top_max = g.multiply(&top, &w0j);
    let mut poly = TatePoly::zero();
    let mut schubert = TatePoly::zero();
    for row in &table.rows {
        let p = kl.kl_polynomial(&g.multiply(&row.rep, &w0j), &top_max)?;
        poly = &poly + &p.to_tate().shift(row.dim as i64);
        schubert.add_term(row.dim as i64, 1);
    }
    Ok(IcClass { poly, bound: table.bound_label(g), convention: CONVENTION.into(), schubert })
}

/// `IC_w(n)`: multiplies the class by `L^n`.
pub fn twist(c: &IcClass, n: i64) -> IcClass {
    IcClass { poly: c.poly.shift(n), schubert: c.schubert.shift(n), ..c.clone() }
}
