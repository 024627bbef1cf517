//! Classes in the Tate part `Z[L, L^-1]` of the Grothendieck ring.
//!
//! The class of `1(n)[2n]` is `L^n`; an affine cell of dimension `d`
//! contributes `L^d`. Odd shifts and half twists have no class here.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Zero};
use serde::{Deserialize, Serialize};

use crate::affine_weyl::{AffineWeylGroup, IwElement};
use crate::error::{Error, Result};
use crate::flag_cells::{self, CellTable, Facet};

/// Laurent polynomial `sum c_d L^d` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTate")]
pub struct TatePoly {
    coeffs: BTreeMap<i64, i64>,
}

#[derive(Deserialize)]
struct RawTate {
    coeffs: BTreeMap<i64, i64>,
}

impl TryFrom<RawTate> for TatePoly {
    type Error = String;

    fn try_from(raw: RawTate) -> std::result::Result<Self, String> {
        if raw.coeffs.values().any(|&c| c == 0) {
            return Err("zero coefficients are not stored".into());
        }
        Ok(TatePoly { coeffs: raw.coeffs })
    }
}

impl TatePoly {
    pub fn zero() -> Self {
        TatePoly::default()
    }

    pub fn one() -> Self {
        TatePoly::monomial(0, 1)
    }

    /// The Lefschetz class `L`.
    pub fn lefschetz() -> Self {
        TatePoly::monomial(1, 1)
    }

    pub fn monomial(degree: i64, coeff: i64) -> Self {
        let mut p = TatePoly::zero();
        p.add_term(degree, coeff);
        p
    }

    /// Class of `1(twist)[shift]`; only even Tate objects have a class.
    pub fn tate_class(twist: i64, shift: i64) -> Result<Self> {
        if shift != 2 * twist {
            return Err(Error::Domain(format!("1({twist})[{shift}] is not an even Tate object")));
        }
        Ok(TatePoly::monomial(twist, 1))
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = TatePoly::zero();
        for (d, c) in coeffs {
            p.add_term(d, c);
        }
        p
    }

    pub fn add_term(&mut self, degree: i64, coeff: i64) {
        let c = self.coeffs.entry(degree).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.coeffs.remove(&degree);
        }
    }

    pub fn coeff(&self, degree: i64) -> i64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Multiplication by `L^n`.
    pub fn shift(&self, n: i64) -> Self {
        TatePoly { coeffs: self.coeffs.iter().map(|(&d, &c)| (d + n, c)).collect() }
    }

    /// Value at `L = q`, exact. Errors on negative powers that do not cancel.
    pub fn point_count(&self, q: i64) -> Result<BigInt> {
        if q < 2 {
            return Err(Error::Domain(format!("point counts need q >= 2, got {q}")));
        }
        let low = self.low_degree().unwrap_or(0).min(0);
        // sum c_d q^(d - low), then divide by q^(-low)
        let mut acc = BigInt::zero();
        for (d, c) in self.terms() {
            acc += BigInt::from(c) * num::pow(BigInt::from(q), (d - low) as usize);
        }
        let den = num::pow(BigInt::from(q), (-low) as usize);
        if !(&acc % &den).is_zero() {
            return Err(Error::Domain("point count is not an integer".into()));
        }
        Ok(acc / den)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|&c| c > 0)
    }
}

impl fmt::Display for TatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            let power = match d {
                0 => String::new(),
                1 => "L".to_string(),
                _ => format!("L^{d}"),
            };
            match (mag, power.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (1, false) => f.write_str(&power)?,
                _ => write!(f, "{mag}*{power}")?,
            }
        }
        Ok(())
    }
}

impl Add for &TatePoly {
    type Output = TatePoly;
    fn add(self, rhs: &TatePoly) -> TatePoly {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d, c);
        }
        out
    }
}

impl Sub for &TatePoly {
    type Output = TatePoly;
    fn sub(self, rhs: &TatePoly) -> TatePoly {
        self + &(-rhs)
    }
}

impl Neg for &TatePoly {
    type Output = TatePoly;
    fn neg(self) -> TatePoly {
        TatePoly { coeffs: self.coeffs.iter().map(|(&d, &c)| (d, -c)).collect() }
    }
}

impl Mul for &TatePoly {
    type Output = TatePoly;
    fn mul(self, rhs: &TatePoly) -> TatePoly {
        let mut out = TatePoly::zero();
        for (d1, c1) in self.terms() {
            for (d2, c2) in rhs.terms() {
                out.add_term(d1 + d2, c1 * c2);
            }
        }
        out
    }
}

/// A class together with a description of what it was computed from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotiveClass {
    pub poly: TatePoly,
    pub source: String,
}

impl MotiveClass {
    pub fn new(poly: TatePoly, source: impl Into<String>) -> Self {
        MotiveClass { poly, source: source.into() }
    }

    pub fn point_count(&self, q: i64) -> Result<BigInt> {
        self.poly.point_count(q)
    }
}

impl fmt::Display for MotiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

fn class_of_rows(t: &CellTable, rows: impl IntoIterator<Item = usize>) -> TatePoly {
    let mut p = TatePoly::zero();
    for i in rows {
        p.add_term(t.rows[i].dim as i64, 1);
    }
    p
}

/// `sum over rows of L^{dim}`.
pub fn class_of_cell_table(t: &CellTable) -> MotiveClass {
    MotiveClass::new(class_of_rows(t, 0..t.rows.len()), "cell table")
}

/// Splits the class of a table along a closed union of cells `Z` and its
/// open complement `U`.
pub fn localization_split(t: &CellTable, closed: &[usize]) -> Result<(MotiveClass, MotiveClass)> {
    if let Some(&bad) = closed.iter().find(|&&i| i >= t.rows.len()) {
        return Err(Error::Domain(format!("row {bad} does not exist")));
    }
    if let Some(missing) = t.check_down_closed(closed) {
        return Err(Error::NotDownClosed(missing));
    }
    let inside: HashSet<usize> = closed.iter().copied().collect();
    let z = class_of_rows(t, inside.iter().copied());
    let u = class_of_rows(t, (0..t.rows.len()).filter(|i| !inside.contains(i)));
    Ok((MotiveClass::new(z, "closed part"), MotiveClass::new(u, "open part")))
}

pub fn box_product(a: &MotiveClass, b: &MotiveClass) -> MotiveClass {
    MotiveClass::new(&a.poly * &b.poly, format!("{} x {}", a.source, b.source))
}

/// Class of the union of the `P_{J'}`-orbits on `Fl_J` of dimension at most
/// `max_dim`, within the given components of `pi_0`. Each orbit contributes
/// the classes of its Iwahori cells.
pub fn truncated_flag_class(
    g: &AffineWeylGroup,
    left: &Facet,
    right: &Facet,
    max_dim: usize,
    omegas: &[IwElement],
) -> Result<MotiveClass> {
    let cells = flag_cells::min_reps_by_length(g, right, max_dim, omegas)?;
    let mut orbit_dims = std::collections::HashMap::new();
    let mut p = TatePoly::zero();
    for v in cells {
        let orbit = flag_cells::min_rep(g, &v, left, right);
        let d = *orbit_dims.entry(orbit.clone()).or_insert_with(|| {
            flag_cells::coset_length(
                g,
                &flag_cells::DoubleCoset { left: left.clone(), right: right.clone(), min_rep: orbit },
            )
        });
        if d <= max_dim {
            p.add_term(g.length(&v) as i64, 1);
        }
    }
    Ok(MotiveClass::new(p, format!("orbits of dimension <= {max_dim}")))
}
