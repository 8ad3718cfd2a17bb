//! Integral Weierstrass models, their standard invariants, coordinate
//! changes, and the two-parameter constructor y^2 = x(x - A)(x + B).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};
use crate::ser;

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with integer coefficients.
///
/// A zero discriminant is representable (so transformation pipelines can pass
/// through intermediate states); callers that need a curve use [`Self::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeierstrassModel {
    #[serde(with = "ser::decimal")]
    pub a1: BigInt,
    #[serde(with = "ser::decimal")]
    pub a2: BigInt,
    #[serde(with = "ser::decimal")]
    pub a3: BigInt,
    #[serde(with = "ser::decimal")]
    pub a4: BigInt,
    #[serde(with = "ser::decimal")]
    pub a6: BigInt,
}

impl WeierstrassModel {
    pub fn new(a1: BigInt, a2: BigInt, a3: BigInt, a4: BigInt, a6: BigInt) -> Self {
        WeierstrassModel { a1, a2, a3, a4, a6 }
    }

    pub fn from_ainvs(ainvs: [BigInt; 5]) -> Self {
        let [a1, a2, a3, a4, a6] = ainvs;
        WeierstrassModel { a1, a2, a3, a4, a6 }
    }

    pub fn from_i64(a: [i64; 5]) -> Self {
        Self::from_ainvs(a.map(BigInt::from))
    }

    pub fn ainvs(&self) -> [&BigInt; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn invariants(&self) -> CurveInvariants {
        CurveInvariants::of(self)
    }

    pub fn discriminant(&self) -> BigInt {
        self.invariants().disc
    }

    pub fn is_singular(&self) -> bool {
        self.discriminant().is_zero()
    }

    /// Errors with [`Error::SingularCurve`] when the discriminant vanishes.
    pub fn validate(&self) -> Result<()> {
        if self.is_singular() {
            Err(Error::SingularCurve)
        } else {
            Ok(())
        }
    }

    /// Change of variables x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.
    ///
    /// Parameters are exact rationals; the result must come out integral
    /// (otherwise [`Error::NonIntegralTransform`]). The discriminant scales
    /// by u^-12, c4 by u^-4, c6 by u^-6 and j is unchanged.
    pub fn transform(
        &self,
        u: &BigRational,
        r: &BigRational,
        s: &BigRational,
        t: &BigRational,
    ) -> Result<WeierstrassModel> {
        if u.is_zero() {
            return Err(Error::domain("transform scale u must be nonzero"));
        }
        let rat = |x: &BigInt| BigRational::from_integer(x.clone());
        let (a1, a2, a3, a4, a6) =
            (rat(&self.a1), rat(&self.a2), rat(&self.a3), rat(&self.a4), rat(&self.a6));
        let u2 = u * u;
        let u3 = &u2 * u;
        let u4 = &u2 * &u2;
        let u6 = &u3 * &u3;
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());

        let na1 = (&a1 + &two * s) / u;
        let na2 = (&a2 - s * &a1 + &three * r - s * s) / &u2;
        let na3 = (&a3 + r * &a1 + &two * t) / &u3;
        let na4 =
            (&a4 - s * &a3 + &two * r * &a2 - (t + r * s) * &a1 + &three * r * r - &two * s * t)
                / &u4;
        let na6 = (&a6 + r * &a4 + r * r * &a2 + r * r * r - t * &a3 - t * t - r * t * &a1) / &u6;

        let to_int = |x: BigRational| -> Result<BigInt> {
            if x.denom().is_one() {
                Ok(x.to_integer())
            } else {
                Err(Error::NonIntegralTransform)
            }
        };
        Ok(WeierstrassModel {
            a1: to_int(na1)?,
            a2: to_int(na2)?,
            a3: to_int(na3)?,
            a4: to_int(na4)?,
            a6: to_int(na6)?,
        })
    }

    /// Integer-parameter translation (u = 1); always integral.
    pub(crate) fn translate(&self, r: &BigInt, s: &BigInt, t: &BigInt) -> WeierstrassModel {
        let a1 = &self.a1 + 2 * s;
        let a2 = &self.a2 - s * &self.a1 + 3 * r - s * s;
        let a3 = &self.a3 + r * &self.a1 + 2 * t;
        let a4 = &self.a4 - s * &self.a3 + 2 * r * &self.a2 - (t + r * s) * &self.a1 + 3 * r * r
            - 2 * s * t;
        let a6 = &self.a6 + r * &self.a4 + r * r * &self.a2 + r * r * r
            - t * &self.a3
            - t * t
            - r * t * &self.a1;
        WeierstrassModel { a1, a2, a3, a4, a6 }
    }

    /// Divides a_i by p^i; caller guarantees exactness (checked).
    pub(crate) fn scale_down(&self, p: &BigInt) -> WeierstrassModel {
        let p2 = p * p;
        let p3 = &p2 * p;
        let p4 = &p2 * &p2;
        let p6 = &p3 * &p3;
        for (a, q) in [
            (&self.a1, p),
            (&self.a2, &p2),
            (&self.a3, &p3),
            (&self.a4, &p4),
            (&self.a6, &p6),
        ] {
            assert!((a % q).is_zero(), "scale_down requires divisible coefficients");
        }
        WeierstrassModel {
            a1: &self.a1 / p,
            a2: &self.a2 / &p2,
            a3: &self.a3 / &p3,
            a4: &self.a4 / &p4,
            a6: &self.a6 / &p6,
        }
    }

    /// c4^3 / disc in lowest terms; errors on singular models.
    pub fn j_invariant(&self) -> Result<BigRational> {
        let inv = self.invariants();
        inv.j.ok_or(Error::SingularCurve)
    }
}

impl fmt::Display for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}, {}, {}]",
            self.a1, self.a2, self.a3, self.a4, self.a6
        )
    }
}

/// The b-, c-invariants, discriminant and j-invariant of a model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveInvariants {
    #[serde(with = "ser::decimal")]
    pub b2: BigInt,
    #[serde(with = "ser::decimal")]
    pub b4: BigInt,
    #[serde(with = "ser::decimal")]
    pub b6: BigInt,
    #[serde(with = "ser::decimal")]
    pub b8: BigInt,
    #[serde(with = "ser::decimal")]
    pub c4: BigInt,
    #[serde(with = "ser::decimal")]
    pub c6: BigInt,
    #[serde(with = "ser::decimal")]
    pub disc: BigInt,
    /// None marks the undefined j of a singular model.
    #[serde(with = "ser::ratio_opt")]
    pub j: Option<BigRational>,
}

impl CurveInvariants {
    pub fn of(m: &WeierstrassModel) -> CurveInvariants {
        let (a1, a2, a3, a4, a6) = (&m.a1, &m.a2, &m.a3, &m.a4, &m.a6);
        let b2 = a1 * a1 + 4 * a2;
        let b4 = 2 * a4 + a1 * a3;
        let b6 = a3 * a3 + 4 * a6;
        let b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        let c4 = &b2 * &b2 - 24 * &b4;
        let c6 = -(&b2 * &b2 * &b2) + 36 * &b2 * &b4 - 216 * &b6;
        let disc =
            -(&b2 * &b2 * &b8) - 8 * (&b4 * &b4 * &b4) - 27 * (&b6 * &b6) + 9 * &b2 * &b4 * &b6;
        assert_eq!(4 * &b8, &b2 * &b6 - &b4 * &b4, "b8 relation violated");
        assert_eq!(
            1728 * &disc,
            &c4 * &c4 * &c4 - &c6 * &c6,
            "1728 disc relation violated"
        );
        let j = if disc.is_zero() {
            None
        } else {
            Some(BigRational::new(&c4 * &c4 * &c4, disc.clone()))
        };
        CurveInvariants { b2, b4, b6, b8, c4, c6, disc, j }
    }
}

/// The curve y^2 = x(x - a)(x + b), i.e. coefficients (0, b-a, 0, -ab, 0).
///
/// Errors with [`Error::SingularCurve`] when ab(a+b) = 0 (repeated root).
pub fn frey_curve(a: &BigInt, b: &BigInt) -> Result<WeierstrassModel> {
    if (a * b * (a + b)).is_zero() {
        return Err(Error::SingularCurve);
    }
    Ok(WeierstrassModel {
        a1: BigInt::zero(),
        a2: b - a,
        a3: BigInt::zero(),
        a4: -(a * b),
        a6: BigInt::zero(),
    })
}

/// Closed form for the discriminant of a Frey-shape model: 2^4 a^2 b^2 (a+b)^2.
pub fn frey_discriminant(a: &BigInt, b: &BigInt) -> BigInt {
    let s = a + b;
    BigInt::from(16) * a * a * b * b * &s * &s
}

/// Closed form for c4 of a Frey-shape model: 2^4 (a^2 + ab + b^2).
pub fn frey_c4(a: &BigInt, b: &BigInt) -> BigInt {
    BigInt::from(16) * (a * a + a * b + b * b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(bi(n), bi(d))
    }

    #[test]
    fn frey_examples() {
        assert_eq!(
            frey_curve(&bi(3), &bi(16)).unwrap(),
            WeierstrassModel::from_i64([0, 13, 0, -48, 0])
        );
        assert_eq!(
            frey_curve(&bi(-1), &bi(2)).unwrap(),
            WeierstrassModel::from_i64([0, 3, 0, 2, 0])
        );
        // a2 = B - A and a4 = -A*B computed exactly.
        let a = bi(1996915);
        let b = bi(32725616);
        let m = frey_curve(&a, &b).unwrap();
        assert_eq!(m.a2, bi(30728701));
        assert_eq!(m.a4, -(&a * &b));
        assert_eq!(m.a4.to_string(), "-65350273474640");
    }

    #[test]
    fn frey_rejects_repeated_roots() {
        assert_eq!(frey_curve(&bi(0), &bi(5)), Err(Error::SingularCurve));
        assert_eq!(frey_curve(&bi(2), &bi(-2)), Err(Error::SingularCurve));
    }

    #[test]
    fn invariants_examples() {
        let inv = frey_curve(&bi(3), &bi(16)).unwrap().invariants();
        assert_eq!(inv.c4, bi(5008));
        assert_eq!(inv.disc, bi(13307904));
        // Closed forms 2^4(A^2+AB+B^2) and 2^4 A^2 B^2 (A+B)^2 as the oracle.
        assert_eq!(inv.c4, frey_c4(&bi(3), &bi(16)));
        assert_eq!(inv.disc, frey_discriminant(&bi(3), &bi(16)));

        let inv = WeierstrassModel::from_i64([1, 3, 0, -3, 0]).invariants();
        assert_eq!(inv.disc, bi(3249));
        assert_eq!(inv.c4, bi(313));

        let inv = WeierstrassModel::from_i64([0, 0, 0, 0, 0]).invariants();
        assert_eq!(inv.disc, bi(0));
        assert!(inv.j.is_none());
    }

    #[test]
    fn transform_examples() {
        let m = frey_curve(&bi(3), &bi(16)).unwrap();
        let id = m
            .transform(&rat(1, 1), &rat(0, 1), &rat(0, 1), &rat(0, 1))
            .unwrap();
        assert_eq!(id, m);

        let half = m
            .transform(&rat(2, 1), &rat(0, 1), &rat(1, 1), &rat(0, 1))
            .unwrap();
        assert_eq!(half, WeierstrassModel::from_i64([1, 3, 0, -3, 0]));

        // a2' = 13/4 is not integral.
        assert_eq!(
            m.transform(&rat(2, 1), &rat(0, 1), &rat(0, 1), &rat(0, 1)),
            Err(Error::NonIntegralTransform)
        );

        assert!(m
            .transform(&rat(0, 1), &rat(0, 1), &rat(0, 1), &rat(0, 1))
            .is_err());
    }

    #[test]
    fn transform_scaling_laws() {
        let m = frey_curve(&bi(3), &bi(16)).unwrap();
        let inv = m.invariants();
        let m2 = m
            .transform(&rat(2, 1), &rat(0, 1), &rat(1, 1), &rat(0, 1))
            .unwrap();
        let inv2 = m2.invariants();
        let u12 = bi(2).pow(12);
        assert_eq!(&inv2.disc * u12, inv.disc);
        assert_eq!(&inv2.c4 * bi(16), inv.c4);
        assert_eq!(&inv2.c6 * bi(64), inv.c6);
        assert_eq!(inv2.j, inv.j);
    }

    #[test]
    fn j_invariant_examples() {
        let j = frey_curve(&bi(3), &bi(16)).unwrap().j_invariant().unwrap();
        assert_eq!(j, rat(30664297, 3249));
        // Closed form 256 (A^2+AB+B^2)^3 / (A^2 B^2 (A+B)^2) as second route.
        let closed = BigRational::new(bi(256) * bi(313).pow(3), bi(9) * bi(256) * bi(361));
        assert_eq!(j, closed);

        let j = WeierstrassModel::from_i64([0, 0, 0, -1, 0])
            .j_invariant()
            .unwrap();
        assert_eq!(j, BigRational::from_integer(bi(1728)));

        assert_eq!(
            WeierstrassModel::from_i64([0, 0, 0, 0, 0]).j_invariant(),
            Err(Error::SingularCurve)
        );
    }

    #[test]
    fn j_is_reduced() {
        let j = frey_curve(&bi(3), &bi(16)).unwrap().j_invariant().unwrap();
        use num_integer::Integer;
        assert!(j.numer().gcd(j.denom()).is_one());
        assert!(j.denom() > &BigInt::from(0));
    }
}
