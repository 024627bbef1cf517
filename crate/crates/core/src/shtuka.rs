//! Bounds for iterated shtukas: admissibility, local-model classes,
//! dimensions and fusion strata.
//!
//! The ordered partition of the legs and the level degree are carried as
//! metadata; none of the computed invariants depends on them.

use serde::{Deserialize, Serialize};

use crate::affine_weyl::AffineWeylGroup;
use crate::error::{Error, Result};
use crate::flag_cells::{grassmannian_coset, schubert_cells};
use crate::kl_hecke::{ic_class, IcClass, KazhdanLusztig, CONVENTION};
use crate::lattice;
use crate::motive::{box_product, class_of_cell_table, MotiveClass, TatePoly};
use crate::root_datum::{Cocharacter, RootDatum};

/// Legs `mu_i` indexed by `I = 1..n`, with an ordered partition of `I` into
/// consecutive blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundTuple {
    mu: Vec<Cocharacter>,
    partition: Vec<Vec<usize>>,
    level_degree: u64,
}

impl BoundTuple {
    /// Single-block partition.
    pub fn new(datum: &RootDatum, mu: Vec<Cocharacter>) -> Result<Self> {
        let n = mu.len();
        let partition = if n == 0 { Vec::new() } else { vec![(1..=n).collect()] };
        BoundTuple::with_partition(datum, mu, partition, 0)
    }

    pub fn with_partition(
        datum: &RootDatum,
        mu: Vec<Cocharacter>,
        partition: Vec<Vec<usize>>,
        level_degree: u64,
    ) -> Result<Self> {
        for m in &mu {
            check_dominant(datum, m)?;
        }
        let mut next = 1;
        for block in &partition {
            if block.is_empty() {
                return Err(Error::Domain("empty block in the partition of I".into()));
            }
            for &i in block {
                if i != next {
                    return Err(Error::Domain("partition blocks must be consecutive and cover I = 1..n".into()));
                }
                next += 1;
            }
        }
        if next != mu.len() + 1 {
            return Err(Error::Domain("partition blocks must be consecutive and cover I = 1..n".into()));
        }
        Ok(BoundTuple { mu, partition, level_degree })
    }

    pub fn legs(&self) -> &[Cocharacter] {
        &self.mu
    }

    pub fn partition(&self) -> &[Vec<usize>] {
        &self.partition
    }

    pub fn level_degree(&self) -> u64 {
        self.level_degree
    }
}

fn check_dominant(datum: &RootDatum, m: &Cocharacter) -> Result<()> {
    if m.0.len() != datum.rank() {
        return Err(Error::RankMismatch { expected: datum.rank(), got: m.0.len() });
    }
    if !datum.is_dominant(m) {
        return Err(Error::NotDominant(m.0.clone()));
    }
    Ok(())
}

/// `sum mu_i = 0` in `pi_1(G)`.
pub fn is_admissible(datum: &RootDatum, mu: &[Cocharacter]) -> Result<bool> {
    let mut acc = datum.pi1_class(&Cocharacter::zero(datum.rank()))?;
    for m in mu {
        check_dominant(datum, m)?;
        acc = datum.pi1_add(&acc, &datum.pi1_class(m)?);
    }
    Ok(acc.is_zero())
}

fn require_admissible(datum: &RootDatum, b: &BoundTuple) -> Result<()> {
    if !is_admissible(datum, &b.mu)? {
        return Err(Error::Inadmissible);
    }
    Ok(())
}

/// Product over the legs of the classes of `Gr^{<= mu_i}`.
pub fn local_model_class(g: &AffineWeylGroup, b: &BoundTuple) -> Result<MotiveClass> {
    require_admissible(g.datum(), b)?;
    let mut acc = MotiveClass::new(TatePoly::one(), "point");
    for m in &b.mu {
        let t = schubert_cells(g, &grassmannian_coset(g, m)?);
        acc = box_product(&acc, &class_of_cell_table(&t));
    }
    Ok(MotiveClass::new(acc.poly, "local model"))
}

/// `sum <2rho, mu_i>`.
pub fn bound_dimension(datum: &RootDatum, b: &BoundTuple) -> usize {
    b.mu.iter().map(|m| lattice::dot(datum.two_rho(), &m.0) as usize).sum()
}

/// Product over the legs of the intersection classes of `Gr^{<= mu_i}`.
pub fn ic_box_class(g: &AffineWeylGroup, kl: &KazhdanLusztig<'_>, b: &BoundTuple) -> Result<IcClass> {
    require_admissible(g.datum(), b)?;
    let mut poly = TatePoly::one();
    let mut schubert = TatePoly::one();
    for m in &b.mu {
        let t = schubert_cells(g, &grassmannian_coset(g, m)?);
        let c = ic_class(g, kl, &t)?;
        poly = &poly * &c.poly;
        schubert = &schubert * &c.schubert;
    }
    let bound = b.mu.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(";");
    Ok(IcClass { poly, bound, convention: CONVENTION.into(), schubert })
}

/// Strata of the diagonal fiber of a two-leg bound: dominant
/// `lambda <= mu1 + mu2`.
pub fn fusion_degenerate(datum: &RootDatum, mu1: &Cocharacter, mu2: &Cocharacter) -> Result<Vec<Cocharacter>> {
    check_dominant(datum, mu1)?;
    check_dominant(datum, mu2)?;
    datum.dominant_below(&mu1.add(mu2))
}

/// Strata after fusing all legs: dominant `lambda <= sum mu_i`.
pub fn fusion_strata(datum: &RootDatum, b: &BoundTuple) -> Result<Vec<Cocharacter>> {
    let total = b.mu.iter().fold(Cocharacter::zero(datum.rank()), |acc, m| acc.add(m));
    datum.dominant_below(&total)
}

/// Input of the `shtuka` report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShtukaRequest {
    pub group: String,
    #[serde(rename = "I", default)]
    pub index_set: Option<Vec<usize>>,
    #[serde(default)]
    pub partition: Option<Vec<Vec<usize>>>,
    pub mu: Vec<Cocharacter>,
    #[serde(default)]
    pub level_degree: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShtukaReport {
    pub admissible: bool,
    pub dimension: Option<usize>,
    pub local_model_class: Option<TatePoly>,
    pub ic_class: Option<IcClass>,
    pub fusion_strata: Option<Vec<Cocharacter>>,
    pub partition: Vec<Vec<usize>>,
    pub level_degree: u64,
}

pub fn shtuka_report(g: &AffineWeylGroup, kl: &KazhdanLusztig<'_>, b: &BoundTuple) -> Result<ShtukaReport> {
    let datum = g.datum();
    let admissible = is_admissible(datum, &b.mu)?;
    let mut report = ShtukaReport {
        admissible,
        dimension: None,
        local_model_class: None,
        ic_class: None,
        fusion_strata: None,
        partition: b.partition.clone(),
        level_degree: b.level_degree,
    };
    if admissible {
        report.dimension = Some(bound_dimension(datum, b));
        report.local_model_class = Some(local_model_class(g, b)?.poly);
        report.ic_class = Some(ic_box_class(g, kl, b)?);
        report.fusion_strata = Some(fusion_strata(datum, b)?);
    }
    Ok(report)
}
