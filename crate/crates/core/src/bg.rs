//! Bogomolov-Gieseker discriminants and the two equality predicates for
//! `T_X(-log D)`.
//!
//! For a rank `r` sheaf `E` on an `n`-fold the discriminant against `H` is
//! `(c2(E) - (r-1)/(2r) c1(E)^2)·H^{n-2}`. The log tangent bundle has rank
//! `n`; its extension by `O_X` has rank `n+1` and the same `c1`, `c2`, so
//! both predicates read off one pair `(c1^2·H^{n-2}, c2·H^{n-2})`.

use serde::{Deserialize, Serialize};

use crate::ambient::ChernData;
use crate::chow::CycleClass;
use crate::log_invariants::LogPair;
use crate::rational::Rational;
use crate::{Error, Result};

/// `(r-1) / (2r)`.
pub fn bg_coefficient(rank: u32) -> Rational {
    let r = i64::from(rank);
    Rational::ratio(r - 1, 2 * r)
}

/// `c2_eval - (r-1)/(2r) · c1_sq`.
pub fn bg_form(c1_sq: &Rational, c2_eval: &Rational, rank: u32) -> Rational {
    c2_eval - bg_coefficient(rank) * c1_sq
}

fn check_polarization(chern: &ChernData, polarization: &CycleClass) -> Result<()> {
    if polarization.grade() != 1 {
        return Err(Error::GradeMismatch {
            expected: 1,
            found: polarization.grade(),
        });
    }
    if polarization.model() != chern.model() {
        return Err(Error::ModelMismatch {
            left: chern.model().to_string(),
            right: polarization.model().to_string(),
        });
    }
    Ok(())
}

/// `(c1^2·H^{n-2}, c2·H^{n-2})`. On a surface `H^0` is the identity.
pub fn evaluate_pair(chern: &ChernData, polarization: &CycleClass) -> Result<(Rational, Rational)> {
    check_polarization(chern, polarization)?;
    let k = chern.model().dim() - 2;
    let c1_sq = chern
        .c1
        .checked_mul(&chern.c1)?
        .pair_with_polarization(polarization, k)?;
    let c2_eval = chern.c2.pair_with_polarization(polarization, k)?;
    Ok((c1_sq, c2_eval))
}

pub fn discriminant(chern: &ChernData, polarization: &CycleClass) -> Result<Rational> {
    if chern.rank == 0 {
        return Err(Error::InvalidRank(0));
    }
    let (c1_sq, c2_eval) = evaluate_pair(chern, polarization)?;
    Ok(bg_form(&c1_sq, &c2_eval, chern.rank))
}

/// Equality with coefficient `(n-1)/(2n)`: the rank-`n` discriminant of
/// `T_X(-log D)` vanishes.
pub fn check_equality_n(pair: &LogPair, polarization: &CycleClass) -> Result<bool> {
    Ok(discriminant(&pair.log_tangent_chern(), polarization)?.is_zero())
}

/// Equality with coefficient `n/(2(n+1))`: the discriminant of the
/// extension sheaf vanishes.
pub fn check_equality_n_plus_1(pair: &LogPair, polarization: &CycleClass) -> Result<bool> {
    Ok(discriminant(&pair.extension_chern(), polarization)?.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BGReport {
    /// Rank of `T_X(-log D)`, i.e. `dim X`.
    pub rank: u32,
    pub log_c1: CycleClass,
    pub log_c2: CycleClass,
    /// `c1^2·H^{n-2}`
    pub c1_sq: Rational,
    /// `c2·H^{n-2}`
    pub c2_eval: Rational,
    /// Rank-`n` discriminant.
    pub discriminant: Rational,
    /// Rank-`(n+1)` discriminant of the extension sheaf.
    pub discriminant_n_plus_1: Rational,
    pub equality_n: bool,
    pub equality_n_plus_1: bool,
    pub minus_k_plus_d_nef: bool,
    pub polarization: CycleClass,
}

/// Evaluates every field of [`BGReport`]; `polarization` defaults to the
/// model's [`default_polarization`](crate::AmbientModel::default_polarization).
pub fn full_report(pair: &LogPair, polarization: Option<&CycleClass>) -> Result<BGReport> {
    let model = pair.model();
    let polarization = match polarization {
        Some(h) => h.clone(),
        None => model.default_polarization(),
    };
    let chern = pair.log_tangent_chern();
    let (c1_sq, c2_eval) = evaluate_pair(&chern, &polarization)?;
    let n = model.dim();
    let discriminant = bg_form(&c1_sq, &c2_eval, n);
    let discriminant_n_plus_1 = bg_form(&c1_sq, &c2_eval, n + 1);
    // -(K_X + D) is c1 of the log tangent bundle
    let minus_k_plus_d_nef = model.is_nef(&chern.c1)?;
    Ok(BGReport {
        rank: n,
        equality_n: discriminant.is_zero(),
        equality_n_plus_1: discriminant_n_plus_1.is_zero(),
        log_c1: chern.c1,
        log_c2: chern.c2,
        c1_sq,
        c2_eval,
        discriminant,
        discriminant_n_plus_1,
        minus_k_plus_d_nef,
        polarization,
    })
}
