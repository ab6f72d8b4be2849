//! Graded cycle classes and intersection products.
//!
//! Each supported model has a fixed basis per codimension:
//!
//! | model                | codim 0 | codim 1    | codim k ≥ 2 |
//! |----------------------|---------|------------|-------------|
//! | projective space     | `1`     | `H`        | `H^k`       |
//! | hypersurface (deg q) | `1`     | `h`        | `h^k`       |
//! | Hirzebruch `F_m`     | `1`     | `C0`, `f`  | `pt`        |
//!
//! On `F_m` the products are `C0^2 = -m pt`, `C0 f = pt`, `f^2 = 0`, and a
//! section `C_inf` is the class `C0 + m f`. On a hypersurface `deg(h^n) = q`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ambient::{AmbientModel, ModelKind};
use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCycleClass")]
pub struct CycleClass {
    model: AmbientModel,
    grade: u32,
    coeffs: Vec<Rational>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCycleClass {
    model: AmbientModel,
    grade: u32,
    coeffs: Vec<Rational>,
}

impl TryFrom<RawCycleClass> for CycleClass {
    type Error = Error;

    fn try_from(raw: RawCycleClass) -> Result<Self> {
        CycleClass::new(raw.model, raw.grade, raw.coeffs)
    }
}

impl AmbientModel {
    /// Number of basis elements in codimension `grade`.
    pub fn basis_len(&self, grade: u32) -> usize {
        match self.kind() {
            ModelKind::Hirzebruch { .. } if grade == 1 => 2,
            _ => 1,
        }
    }

    /// Printable names of the basis elements in codimension `grade`.
    pub fn basis_names(&self, grade: u32) -> Vec<String> {
        let power = |g: &str| match grade {
            0 => "1".to_string(),
            1 => g.to_string(),
            k => format!("{g}^{k}"),
        };
        match self.kind() {
            ModelKind::ProjectiveSpace { .. } => vec![power("H")],
            ModelKind::Hypersurface { .. } => vec![power("h")],
            ModelKind::Hirzebruch { .. } => match grade {
                0 => vec!["1".into()],
                1 => vec!["C0".into(), "f".into()],
                _ => vec!["pt".into()],
            },
        }
    }
}

impl CycleClass {
    pub fn new(model: AmbientModel, grade: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if grade > model.dim() {
            return Err(Error::GradeOverflow {
                grade,
                dim: model.dim(),
            });
        }
        let expected = model.basis_len(grade);
        if coeffs.len() != expected {
            return Err(Error::BasisLength {
                grade,
                expected,
                found: coeffs.len(),
            });
        }
        Ok(CycleClass {
            model,
            grade,
            coeffs,
        })
    }

    pub fn from_ints(model: AmbientModel, grade: u32, coeffs: &[i64]) -> Result<Self> {
        CycleClass::new(
            model,
            grade,
            coeffs.iter().map(|&c| Rational::from_int(c)).collect(),
        )
    }

    pub fn zero(model: AmbientModel, grade: u32) -> Result<Self> {
        CycleClass::new(model, grade, vec![Rational::zero(); model.basis_len(grade)])
    }

    /// The fundamental class `[X]`.
    pub fn unit(model: AmbientModel) -> Self {
        CycleClass {
            model,
            grade: 0,
            coeffs: vec![Rational::one()],
        }
    }

    pub fn model(&self) -> &AmbientModel {
        &self.model
    }

    pub fn grade(&self) -> u32 {
        self.grade
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    fn check_model(&self, other: &CycleClass) -> Result<()> {
        if self.model != other.model {
            return Err(Error::ModelMismatch {
                left: self.model.to_string(),
                right: other.model.to_string(),
            });
        }
        Ok(())
    }

    fn check_same(&self, other: &CycleClass) -> Result<()> {
        self.check_model(other)?;
        if self.grade != other.grade {
            return Err(Error::GradeMismatch {
                expected: self.grade,
                found: other.grade,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &CycleClass) -> Result<CycleClass> {
        self.check_same(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &CycleClass) -> Result<CycleClass> {
        self.check_same(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &CycleClass, op: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        CycleClass {
            model: self.model,
            grade: self.grade,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| op(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> CycleClass {
        CycleClass {
            model: self.model,
            grade: self.grade,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn neg(&self) -> CycleClass {
        self.scale(&Rational::from_int(-1))
    }

    /// Intersection product.
    pub fn checked_mul(&self, other: &CycleClass) -> Result<CycleClass> {
        self.check_model(other)?;
        let grade = self.grade + other.grade;
        let dim = self.model.dim();
        if grade > dim {
            return Err(Error::GradeOverflow { grade, dim });
        }
        if self.grade == 0 {
            return Ok(other.scale(&self.coeffs[0]));
        }
        if other.grade == 0 {
            return Ok(self.scale(&other.coeffs[0]));
        }
        let coeffs = match self.model.kind() {
            ModelKind::ProjectiveSpace { .. } | ModelKind::Hypersurface { .. } => {
                vec![&self.coeffs[0] * &other.coeffs[0]]
            }
            ModelKind::Hirzebruch { m } => {
                // Both factors are divisors here: grade 0 was handled above and
                // any other combination overflows dimension 2.
                let (a, b) = (&self.coeffs[0], &self.coeffs[1]);
                let (c, d) = (&other.coeffs[0], &other.coeffs[1]);
                let m = Rational::from_int(i64::from(m));
                vec![-(a * c) * m + a * d + b * c]
            }
        };
        CycleClass::new(self.model, grade, coeffs)
    }

    /// `self^k`, with `self^0 = [X]`.
    pub fn checked_pow(&self, k: u32) -> Result<CycleClass> {
        let mut acc = CycleClass::unit(self.model);
        for _ in 0..k {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Degree of a top-codimension class.
    pub fn degree(&self) -> Result<Rational> {
        let dim = self.model.dim();
        if self.grade != dim {
            return Err(Error::GradeMismatch {
                expected: dim,
                found: self.grade,
            });
        }
        Ok(match self.model.kind() {
            ModelKind::Hypersurface { q, .. } => &self.coeffs[0] * Rational::from_int(i64::from(q)),
            ModelKind::ProjectiveSpace { .. } | ModelKind::Hirzebruch { .. } => {
                self.coeffs[0].clone()
            }
        })
    }

    /// `deg(self · H^k)`; requires `grade(self) + k = dim X`.
    pub fn pair_with_polarization(&self, polarization: &CycleClass, k: u32) -> Result<Rational> {
        self.check_model(polarization)?;
        if polarization.grade != 1 {
            return Err(Error::GradeMismatch {
                expected: 1,
                found: polarization.grade,
            });
        }
        let dim = self.model.dim();
        if self.grade + k != dim {
            return Err(Error::GradeMismatch {
                expected: dim - k.min(dim),
                found: self.grade,
            });
        }
        self.checked_mul(&polarization.checked_pow(k)?)?.degree()
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.model.basis_names(self.grade);
        let mut terms = self
            .coeffs
            .iter()
            .zip(&names)
            .filter(|(c, _)| !c.is_zero())
            .peekable();
        if terms.peek().is_none() {
            return write!(f, "0");
        }
        let mut first = true;
        for (c, name) in terms {
            let (sign, abs) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coefficient = if abs == Rational::one() && name != "1" {
                String::new()
            } else if abs.is_integer() {
                abs.to_string()
            } else {
                format!("({abs})")
            };
            if name == "1" {
                write!(
                    f,
                    "{}",
                    if coefficient.is_empty() {
                        "1".into()
                    } else {
                        coefficient
                    }
                )?;
            } else {
                write!(f, "{coefficient}{name}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fm(m: u32) -> AmbientModel {
        AmbientModel::hirzebruch(m).unwrap()
    }

    fn div(model: AmbientModel, a: i64, b: i64) -> CycleClass {
        CycleClass::from_ints(model, 1, &[a, b]).unwrap()
    }

    #[test]
    fn hirzebruch_additions() {
        for m in 1..=6 {
            let x = fm(m);
            let sum = div(x, 2, m as i64).checked_add(&div(x, 0, 2)).unwrap();
            assert_eq!(sum, div(x, 2, m as i64 + 2));
        }
    }

    #[test]
    fn rank_one_additions() {
        let p7 = AmbientModel::projective_space(7).unwrap();
        let h = |c| CycleClass::from_ints(p7, 1, &[c]).unwrap();
        assert!(h(0).checked_add(&h(0)).unwrap().is_zero());
        assert_eq!(h(2).checked_add(&h(1)).unwrap(), h(3));
    }

    #[test]
    fn hirzebruch_products() {
        for m in 1..=10 {
            let x = fm(m);
            let mi = m as i64;
            let c0 = div(x, 1, 0);
            let f = div(x, 0, 1);
            assert_eq!(c0.checked_mul(&c0).unwrap().degree().unwrap(), (-mi).into());
            assert_eq!(c0.checked_mul(&f).unwrap().degree().unwrap(), 1.into());
            assert_eq!(f.checked_mul(&f).unwrap().degree().unwrap(), 0.into());
            let rel = div(x, 2, mi).checked_mul(&div(x, 0, 2)).unwrap();
            assert_eq!(rel.degree().unwrap(), 4.into());
            let two_f = div(x, 0, 2);
            assert!(two_f.checked_mul(&two_f).unwrap().is_zero());
            // K + D = -2f against C0 and f
            let k_plus_d = div(x, 0, -2);
            assert_eq!(
                k_plus_d.checked_mul(&c0).unwrap().degree().unwrap(),
                (-2).into()
            );
            assert_eq!(
                k_plus_d.checked_mul(&f).unwrap().degree().unwrap(),
                0.into()
            );
        }
    }

    #[test]
    fn degree_maps() {
        for n in 2..=9 {
            let p = AmbientModel::projective_space(n).unwrap();
            let h = CycleClass::from_ints(p, 1, &[1]).unwrap();
            assert_eq!(h.checked_pow(n).unwrap().degree().unwrap(), 1.into());
        }
        let x = AmbientModel::hypersurface(7, 2).unwrap();
        let h = CycleClass::from_ints(x, 1, &[1]).unwrap();
        assert_eq!(h.checked_pow(7).unwrap().degree().unwrap(), 2.into());
        let c = CycleClass::from_ints(x, 2, &[5]).unwrap();
        assert_eq!(c.pair_with_polarization(&h, 5).unwrap(), 10.into());
        let surf = fm(4);
        let pt = CycleClass::from_ints(surf, 2, &[7]).unwrap();
        assert_eq!(
            pt.pair_with_polarization(&div(surf, 1, 5), 0).unwrap(),
            7.into()
        );
    }

    #[test]
    fn rejects_mismatches() {
        let p3 = AmbientModel::projective_space(3).unwrap();
        let p4 = AmbientModel::projective_space(4).unwrap();
        let a = CycleClass::from_ints(p3, 1, &[1]).unwrap();
        let b = CycleClass::from_ints(p4, 1, &[1]).unwrap();
        assert!(matches!(
            a.checked_add(&b),
            Err(Error::ModelMismatch { .. })
        ));
        assert!(matches!(
            a.checked_mul(&b),
            Err(Error::ModelMismatch { .. })
        ));
        let a2 = CycleClass::from_ints(p3, 2, &[1]).unwrap();
        assert!(matches!(
            a.checked_add(&a2),
            Err(Error::GradeMismatch { .. })
        ));
        assert!(matches!(
            a2.checked_mul(&a2),
            Err(Error::GradeOverflow { grade: 4, dim: 3 })
        ));
        assert!(matches!(a.degree(), Err(Error::GradeMismatch { .. })));
        assert!(matches!(
            CycleClass::from_ints(fm(1), 1, &[1]),
            Err(Error::BasisLength { .. })
        ));
        assert!(matches!(
            a2.pair_with_polarization(&a, 2),
            Err(Error::GradeMismatch { .. })
        ));
    }

    #[test]
    fn display() {
        let x = fm(3);
        assert_eq!(div(x, 2, 5).to_string(), "2C0 + 5f");
        assert_eq!(div(x, 0, -2).to_string(), "-2f");
        assert_eq!(div(x, 1, -1).to_string(), "C0 - f");
        let p = AmbientModel::projective_space(4).unwrap();
        assert_eq!(
            CycleClass::from_ints(p, 2, &[7]).unwrap().to_string(),
            "7H^2"
        );
        assert_eq!(CycleClass::zero(p, 3).unwrap().to_string(), "0");
        let half = CycleClass::new(p, 1, vec![Rational::ratio(1, 2)]).unwrap();
        assert_eq!(half.to_string(), "(1/2)H");
    }

    fn small() -> impl Strategy<Value = i64> {
        -6i64..=6
    }

    fn model_strategy() -> impl Strategy<Value = AmbientModel> {
        prop_oneof![
            (2u32..=6).prop_map(|n| AmbientModel::projective_space(n).unwrap()),
            (2u32..=6, 1u32..=5).prop_map(|(n, q)| AmbientModel::hypersurface(n, q).unwrap()),
            (1u32..=8).prop_map(|m| AmbientModel::hirzebruch(m).unwrap()),
        ]
    }

    fn divisor(model: AmbientModel, a: i64, b: i64) -> CycleClass {
        match model.basis_len(1) {
            1 => CycleClass::from_ints(model, 1, &[a]).unwrap(),
            _ => CycleClass::from_ints(model, 1, &[a, b]).unwrap(),
        }
    }

    proptest! {
        #[test]
        fn ring_laws_on_divisors(
            model in model_strategy(),
            (a1, a2, b1, b2, c1, c2) in (small(), small(), small(), small(), small(), small()),
            t in -5i64..=5,
        ) {
            let a = divisor(model, a1, a2);
            let b = divisor(model, b1, b2);
            let c = divisor(model, c1, c2);
            let ab = a.checked_mul(&b).unwrap();
            prop_assert_eq!(&ab, &b.checked_mul(&a).unwrap());
            // bilinearity
            let lhs = a.checked_add(&b).unwrap().checked_mul(&c).unwrap();
            let rhs = a.checked_mul(&c).unwrap().checked_add(&b.checked_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(&lhs, &rhs);
            let t = Rational::from_int(t);
            prop_assert_eq!(a.scale(&t).checked_mul(&b).unwrap(), ab.scale(&t));
            // associativity where the triple product fits
            if model.dim() >= 3 {
                let l = ab.checked_mul(&c).unwrap();
                let r = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
                prop_assert_eq!(l, r);
            }
            // degree of a top product is symmetric and linear
            let k = model.dim() - 2;
            let h = divisor(model, 1, 1);
            let d_ab = ab.pair_with_polarization(&h, k).unwrap();
            let d_ba = b.checked_mul(&a).unwrap().pair_with_polarization(&h, k).unwrap();
            prop_assert_eq!(&d_ab, &d_ba);
            let d_sum = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap().pair_with_polarization(&h, k).unwrap();
            let d_ac = a.checked_mul(&c).unwrap().pair_with_polarization(&h, k).unwrap();
            prop_assert_eq!(d_sum, d_ab + d_ac);
        }

        #[test]
        fn hirzebruch_gram_matrix(m in 1u32..=200) {
            let x = fm(m);
            let basis = [div(x, 1, 0), div(x, 0, 1)];
            let expected = [[-(m as i64), 1], [1, 0]];
            for (i, u) in basis.iter().enumerate() {
                for (j, v) in basis.iter().enumerate() {
                    prop_assert_eq!(u.checked_mul(v).unwrap().degree().unwrap(), expected[i][j].into());
                }
            }
        }
    }
}
