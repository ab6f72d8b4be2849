//! The supported ambient varieties and their intrinsic Chern data.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chow::CycleClass;
use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModelKind {
    ProjectiveSpace {
        n: u32,
    },
    /// Smooth degree-`q` hypersurface of dimension `n` in `P^{n+1}`.
    Hypersurface {
        n: u32,
        q: u32,
    },
    /// `F_m = P(O + O(-m))` over `P^1`.
    Hirzebruch {
        m: u32,
    },
}

/// A validated ambient model. Cheap to copy; serves as the identity that
/// every [`CycleClass`] carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ModelKind", into = "ModelKind")]
pub struct AmbientModel {
    kind: ModelKind,
}

impl TryFrom<ModelKind> for AmbientModel {
    type Error = Error;

    fn try_from(kind: ModelKind) -> Result<Self> {
        match kind {
            ModelKind::ProjectiveSpace { n } => AmbientModel::projective_space(n),
            ModelKind::Hypersurface { n, q } => AmbientModel::hypersurface(n, q),
            ModelKind::Hirzebruch { m } => AmbientModel::hirzebruch(m),
        }
    }
}

impl From<AmbientModel> for ModelKind {
    fn from(model: AmbientModel) -> Self {
        model.kind
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc as i64
}

impl AmbientModel {
    pub fn projective_space(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidModel(format!(
                "projective space needs n >= 2, got {n}"
            )));
        }
        Ok(AmbientModel {
            kind: ModelKind::ProjectiveSpace { n },
        })
    }

    pub fn hypersurface(n: u32, q: u32) -> Result<Self> {
        if n < 2 || q < 1 {
            return Err(Error::InvalidModel(format!(
                "hypersurface needs n >= 2 and q >= 1, got n = {n}, q = {q}"
            )));
        }
        Ok(AmbientModel {
            kind: ModelKind::Hypersurface { n, q },
        })
    }

    pub fn hirzebruch(m: u32) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidModel(
                "Hirzebruch surface needs m >= 1".into(),
            ));
        }
        Ok(AmbientModel {
            kind: ModelKind::Hirzebruch { m },
        })
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn dim(&self) -> u32 {
        match self.kind {
            ModelKind::ProjectiveSpace { n } | ModelKind::Hypersurface { n, .. } => n,
            ModelKind::Hirzebruch { .. } => 2,
        }
    }

    fn class(&self, grade: u32, coeffs: &[i64]) -> CycleClass {
        CycleClass::from_ints(*self, grade, coeffs).expect("basis sizes are fixed per model")
    }

    /// Divisor class from integer coordinates in the codimension-1 basis.
    pub fn divisor(&self, coeffs: &[i64]) -> Result<CycleClass> {
        CycleClass::from_ints(*self, 1, coeffs)
    }

    /// Total Chern data `(rank, c1, c2)` of the tangent bundle.
    ///
    /// For a hypersurface the total Chern class is `(1+h)^{n+2} / (1+qh)`,
    /// truncated; its first two terms are the closed forms used here.
    pub fn tangent_chern(&self) -> ChernData {
        let (c1, c2) = match self.kind {
            ModelKind::ProjectiveSpace { n } => {
                let n = u64::from(n);
                (
                    self.class(1, &[n as i64 + 1]),
                    self.class(2, &[binomial(n + 1, 2)]),
                )
            }
            ModelKind::Hypersurface { n, q } => {
                let (n, q) = (i64::from(n), i64::from(q));
                let c2 = binomial(n as u64 + 2, 2) - q * (n + 2) + q * q;
                (self.class(1, &[n + 2 - q]), self.class(2, &[c2]))
            }
            ModelKind::Hirzebruch { m } => {
                (self.class(1, &[2, i64::from(m) + 2]), self.class(2, &[4]))
            }
        };
        ChernData {
            rank: self.dim(),
            c1,
            c2,
        }
    }

    pub fn canonical_class(&self) -> CycleClass {
        self.tangent_chern().c1.neg()
    }

    /// An ample class: `H`, `h`, or `C0 + (m+1) f`.
    pub fn default_polarization(&self) -> CycleClass {
        match self.kind {
            ModelKind::ProjectiveSpace { .. } | ModelKind::Hypersurface { .. } => {
                self.class(1, &[1])
            }
            ModelKind::Hirzebruch { m } => self.class(1, &[1, i64::from(m) + 1]),
        }
    }

    /// Generators of the cone of curves, as classes of dimension one.
    pub fn mori_generators(&self) -> Vec<CycleClass> {
        match self.kind {
            ModelKind::ProjectiveSpace { n } | ModelKind::Hypersurface { n, .. } => {
                vec![self.class(n - 1, &[1])]
            }
            ModelKind::Hirzebruch { .. } => vec![self.class(1, &[0, 1]), self.class(1, &[1, 0])],
        }
    }

    /// A divisor is nef iff it meets every generator of the cone of curves
    /// nonnegatively.
    pub fn is_nef(&self, divisor: &CycleClass) -> Result<bool> {
        if divisor.grade() != 1 {
            return Err(Error::GradeMismatch {
                expected: 1,
                found: divisor.grade(),
            });
        }
        for curve in self.mori_generators() {
            if divisor.checked_mul(&curve)?.degree()?.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for AmbientModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ModelKind::ProjectiveSpace { n } => write!(f, "P^{n}"),
            ModelKind::Hypersurface { n, q } => write!(f, "X_{q} in P^{}", n + 1),
            ModelKind::Hirzebruch { m } => write!(f, "F_{m}"),
        }
    }
}

/// Rank and first two Chern classes of a sheaf.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernData {
    pub rank: u32,
    pub c1: CycleClass,
    pub c2: CycleClass,
}

impl ChernData {
    pub fn new(rank: u32, c1: CycleClass, c2: CycleClass) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank(rank));
        }
        if c1.grade() != 1 {
            return Err(Error::GradeMismatch {
                expected: 1,
                found: c1.grade(),
            });
        }
        if c2.grade() != 2 {
            return Err(Error::GradeMismatch {
                expected: 2,
                found: c2.grade(),
            });
        }
        if c1.model() != c2.model() {
            return Err(Error::ModelMismatch {
                left: c1.model().to_string(),
                right: c2.model().to_string(),
            });
        }
        Ok(ChernData { rank, c1, c2 })
    }

    pub fn model(&self) -> &AmbientModel {
        self.c1.model()
    }

    /// Chern data of the split bundle `O(b)^{⊕ rank}`.
    pub fn split(rank: u32, b: &CycleClass) -> Result<Self> {
        let r = i64::from(rank);
        let c1 = b.scale(&Rational::from_int(r));
        let c2 = b
            .checked_mul(b)?
            .scale(&Rational::from_int(binomial(r as u64, 2)));
        ChernData::new(rank, c1, c2)
    }
}
