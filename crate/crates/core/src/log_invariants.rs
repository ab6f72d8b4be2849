//! Chern classes of the logarithmic tangent bundle `T_X(-log D)`, of the
//! extension sheaf `0 -> O_X -> E -> T_X(-log D) -> 0`, and slopes.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::ambient::{binomial, AmbientModel, ChernData, ModelKind};
use crate::chow::CycleClass;
use crate::rational::Rational;
use crate::{Error, Result};

/// One prime component `D_i` of the boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub label: String,
    pub class: CycleClass,
}

/// A log smooth pair `(X, D)` at the level of numerical classes.
///
/// The components are an ordered list: two distinct hyperplanes share the
/// class `H` yet still contribute `H·H` to the `Σ_{i<j} D_i·D_j` term.
/// Simple normal crossings is assumed, not checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogPair {
    model: AmbientModel,
    components: Vec<Component>,
}

fn effective(model: &AmbientModel, class: &CycleClass) -> std::result::Result<(), String> {
    if !class.coeffs().iter().all(Rational::is_integer) {
        return Err("coefficients must be integers".into());
    }
    match model.kind() {
        ModelKind::ProjectiveSpace { .. } | ModelKind::Hypersurface { .. } => {
            if class.coeffs()[0].is_positive() {
                Ok(())
            } else {
                Err("degree must be at least 1".into())
            }
        }
        ModelKind::Hirzebruch { .. } => {
            if class.coeffs().iter().any(Rational::is_negative) {
                Err("coordinates in (C0, f) must be nonnegative".into())
            } else if class.is_zero() {
                Err("class must be nonzero".into())
            } else {
                Ok(())
            }
        }
    }
}

impl LogPair {
    pub fn new(model: AmbientModel, components: Vec<Component>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for c in &components {
            if !seen.insert(c.label.as_str()) {
                return Err(Error::DuplicateLabel(c.label.clone()));
            }
            let invalid = |reason: String| Error::InvalidComponent {
                label: c.label.clone(),
                reason,
            };
            if c.class.model() != &model {
                return Err(invalid(format!(
                    "class lives on {}, pair is on {model}",
                    c.class.model()
                )));
            }
            if c.class.grade() != 1 {
                return Err(invalid(format!(
                    "grade {} is not a divisor",
                    c.class.grade()
                )));
            }
            effective(&model, &c.class).map_err(invalid)?;
        }
        Ok(LogPair { model, components })
    }

    /// `(P^n, D_1 + ... + D_l)` with `D_i ~ d_i H`.
    pub fn projective_with_degrees(n: u32, degrees: &[u32]) -> Result<Self> {
        let model = AmbientModel::projective_space(n)?;
        Self::with_hyperplane_multiples(model, degrees)
    }

    /// `l` hyperplane sections on a degree-`q` hypersurface.
    pub fn hypersurface_with_sections(n: u32, q: u32, l: u32) -> Result<Self> {
        let model = AmbientModel::hypersurface(n, q)?;
        Self::with_hyperplane_multiples(model, &vec![1; l as usize])
    }

    fn with_hyperplane_multiples(model: AmbientModel, degrees: &[u32]) -> Result<Self> {
        let components = degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                Ok(Component {
                    label: format!("D{}", i + 1),
                    class: model.divisor(&[i64::from(d)])?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        LogPair::new(model, components)
    }

    /// `(F_m, C0 + C_inf)` with `C_inf ~ C0 + m f`.
    pub fn hirzebruch_two_sections(m: u32) -> Result<Self> {
        let model = AmbientModel::hirzebruch(m)?;
        LogPair::new(
            model,
            vec![
                Component {
                    label: "C0".into(),
                    class: model.divisor(&[1, 0])?,
                },
                Component {
                    label: "Cinf".into(),
                    class: model.divisor(&[1, i64::from(m)])?,
                },
            ],
        )
    }

    pub fn model(&self) -> &AmbientModel {
        &self.model
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// `D = Σ D_i`.
    pub fn boundary(&self) -> CycleClass {
        self.components
            .iter()
            .try_fold(
                CycleClass::zero(self.model, 1).expect("grade 1"),
                |acc, c| acc.checked_add(&c.class),
            )
            .expect("components validated against the model")
    }

    /// `c1(T_X(-log D)) = -(K_X + D)`.
    pub fn log_c1(&self) -> CycleClass {
        self.model
            .tangent_chern()
            .c1
            .checked_sub(&self.boundary())
            .expect("same model and grade")
    }

    /// `c2(T_X(-log D)) = c2(T_X) + K_X·D + D^2 - Σ_{i<j} D_i·D_j`.
    pub fn log_c2(&self) -> CycleClass {
        self.try_log_c2()
            .expect("components validated against the model")
    }

    fn try_log_c2(&self) -> Result<CycleClass> {
        let tangent = self.model.tangent_chern();
        let k = self.model.canonical_class();
        let d = self.boundary();
        let mut c2 = tangent
            .c2
            .checked_add(&k.checked_mul(&d)?)?
            .checked_add(&d.checked_mul(&d)?)?;
        for (i, di) in self.components.iter().enumerate() {
            for dj in &self.components[i + 1..] {
                c2 = c2.checked_sub(&di.class.checked_mul(&dj.class)?)?;
            }
        }
        Ok(c2)
    }

    /// Chern data of `T_X(-log D)` itself (rank `dim X`).
    pub fn log_tangent_chern(&self) -> ChernData {
        ChernData {
            rank: self.model.dim(),
            c1: self.log_c1(),
            c2: self.log_c2(),
        }
    }

    /// Chern data of the extension of `T_X(-log D)` by `O_X`. The extension
    /// class does not affect `c1` or `c2`, so it is not a parameter.
    pub fn extension_chern(&self) -> ChernData {
        ChernData {
            rank: self.model.dim() + 1,
            c1: self.log_c1(),
            c2: self.log_c2(),
        }
    }
}

/// `μ_H(F) = c1(F)·H^{n-1} / rank F`.
pub fn slope(
    model: &AmbientModel,
    c1: &CycleClass,
    rank: u32,
    polarization: &CycleClass,
) -> Result<Rational> {
    if rank == 0 {
        return Err(Error::InvalidRank(rank));
    }
    if c1.grade() != 1 {
        return Err(Error::GradeMismatch {
            expected: 1,
            found: c1.grade(),
        });
    }
    if c1.model() != model {
        return Err(Error::ModelMismatch {
            left: c1.model().to_string(),
            right: model.to_string(),
        });
    }
    let degree = c1.pair_with_polarization(polarization, model.dim() - 1)?;
    Ok(degree / Rational::from_int(i64::from(rank)))
}

/// Slope of `Λ^r Ω^1_{P^n}` with respect to `H`, from
/// `c1(Λ^r Ω^1) = -C(n-1, r-1)(n+1) H` and `rank = C(n, r)`.
pub fn wedge_cotangent_slope(n: u32, r: u32) -> Result<Rational> {
    if r < 1 || r > n {
        return Err(Error::WedgeIndex { n, r });
    }
    let model = AmbientModel::projective_space(n)?;
    let (n64, r64) = (u64::from(n), u64::from(r));
    let c1 = model.divisor(&[-binomial(n64 - 1, r64 - 1) * (i64::from(n) + 1)])?;
    let rank = u32::try_from(binomial(n64, r64))
        .map_err(|_| Error::InvalidModel(format!("rank of Λ^{r} Ω^1 on P^{n} overflows")))?;
    slope(&model, &c1, rank, &model.default_polarization())
}
