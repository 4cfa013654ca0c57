//! Exact rational functions over the integers in the session parameters.

mod param;
mod poly;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use param::Param;
pub use poly::{Mono, Poly};

use crate::error::{Error, Result};
use crate::expr::{self, Expr};

/// Values assigned to parameters for evaluation or specialization.
pub type Assignment = BTreeMap<Param, BigRational>;

/// Canonical quotient `num/den` with coprime parts and positive leading
/// denominator coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Scalar {
        Scalar {
            num: Poly::constant(n),
            den: Poly::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Scalar {
        Scalar::new(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
            .expect("rational denominators are nonzero")
    }

    pub fn ratio(n: i64, d: i64) -> Scalar {
        Scalar::new(Poly::constant(BigInt::from(n)), Poly::constant(BigInt::from(d)))
            .expect("nonzero denominator")
    }

    pub fn param(p: Param) -> Scalar {
        Scalar {
            num: Poly::var(p),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Scalar {
        Scalar {
            num: p,
            den: Poly::one(),
        }
    }

    /// Builds the canonical form of `num/den`.
    pub fn new(num: Poly, den: Poly) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Scalar::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        if den.is_one() {
            return Scalar { num, den };
        }
        let g = Poly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        if den.leading_coeff_sign() == std::cmp::Ordering::Less {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a rational number when no parameter occurs.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.is_zero() {
            return Some(BigRational::zero());
        }
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n.clone(), d.clone()))
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// True when both parts are single terms, so the value is a nonzero
    /// constant times a Laurent monomial and never vanishes.
    pub fn is_unit_monomial(&self) -> bool {
        self.num.len() == 1 && self.den.len() == 1
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading_coeff_sign() == std::cmp::Ordering::Less {
            num = num.neg();
            den = den.neg();
        }
        Some(Scalar { num, den })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        let inv = other.inv().ok_or(Error::ZeroDenominator)?;
        Ok(self * &inv)
    }

    pub fn pow(&self, e: i32) -> Scalar {
        if e < 0 {
            return self
                .inv()
                .expect("negative power of zero")
                .pow(-e);
        }
        Scalar {
            num: self.num.pow(e as u32),
            den: self.den.pow(e as u32),
        }
    }

    pub fn params(&self) -> Vec<Param> {
        let mut v = self.num.params();
        v.extend(self.den.params());
        v.sort();
        v.dedup();
        v
    }

    /// Exact value under a full assignment.
    pub fn eval(&self, assignment: &Assignment) -> Result<BigRational> {
        let lookup = |p: Param| assignment.get(&p).cloned();
        let missing = || {
            self.params()
                .into_iter()
                .find(|p| !assignment.contains_key(p))
                .map(|p| p.name().to_string())
                .unwrap_or_default()
        };
        let n = self.num.eval(&lookup).ok_or_else(|| Error::Unassigned(missing()))?;
        let d = self.den.eval(&lookup).ok_or_else(|| Error::Unassigned(missing()))?;
        if d.is_zero() {
            return Err(Error::Pole {
                den: self.den.to_string(),
            });
        }
        Ok(n / d)
    }

    /// Replaces the assigned parameters by their values, keeping the others.
    pub fn substitute(&self, assignment: &Assignment) -> Result<Scalar> {
        if assignment.is_empty() || self.is_constant() {
            return Ok(self.clone());
        }
        let sub = |p: &Poly| -> Scalar {
            let mut acc = Scalar::zero();
            for (m, c) in p.terms() {
                let mut t = Scalar::from_bigint(c.clone());
                for (v, e) in m.vars() {
                    let f = match assignment.get(&v) {
                        Some(r) => Scalar::from_rational(r),
                        None => Scalar::param(v),
                    };
                    t = &t * &f.pow(e as i32);
                }
                acc += &t;
            }
            acc
        };
        let d = sub(&self.den);
        if d.is_zero() {
            return Err(Error::Pole {
                den: self.den.to_string(),
            });
        }
        Ok(&sub(&self.num) * &d.inv().expect("nonzero"))
    }

    /// True when the printed form starts with a minus sign, so that sums
    /// can print `a - b` instead of `a + -b`.
    pub fn is_negative_leading(&self) -> bool {
        if self.num.len() != 1 {
            return false;
        }
        self.num.terms().next().is_some_and(|(_, c)| c.is_negative())
    }

    /// Formats as a factor that can be followed by `*` without ambiguity.
    pub fn factor_string(&self) -> String {
        let s = self.to_string();
        if self.num.len() <= 1 && self.den.is_one() {
            s
        } else if self.num.len() <= 1 {
            format!("({s})")
        } else if self.den.is_one() {
            s
        } else {
            format!("({s})")
        }
    }
}

impl Scalar {
    /// Parses a scalar expression over the registered parameters.
    pub fn parse(src: &str) -> Result<Scalar> {
        Scalar::from_expr(&expr::parse(src)?)
    }

    pub(crate) fn from_expr(e: &Expr) -> Result<Scalar> {
        Ok(match e {
            Expr::Int(n) => Scalar::from_bigint(n.clone()),
            Expr::Ident { name, pos } => match Param::lookup(name) {
                Some(p) => Scalar::param(p),
                None => {
                    return Err(Error::Syntax {
                        pos: *pos,
                        msg: format!("unknown parameter `{name}`"),
                    })
                }
            },
            Expr::Diff { pos, .. } => {
                return Err(Error::Syntax {
                    pos: *pos,
                    msg: "differential in a scalar expression".into(),
                })
            }
            Expr::Neg(a) => -Scalar::from_expr(a)?,
            Expr::Add(a, b) => Scalar::from_expr(a)? + Scalar::from_expr(b)?,
            Expr::Sub(a, b) => Scalar::from_expr(a)? - Scalar::from_expr(b)?,
            Expr::Mul(a, b) => Scalar::from_expr(a)? * Scalar::from_expr(b)?,
            Expr::Div(a, b, pos) => {
                let d = Scalar::from_expr(b)?;
                if d.is_zero() {
                    return Err(Error::Syntax {
                        pos: *pos,
                        msg: "division by zero".into(),
                    });
                }
                Scalar::from_expr(a)? / d
            }
            Expr::Pow(a, k, pos) => {
                let base = Scalar::from_expr(a)?;
                if base.is_zero() && *k < 0 {
                    return Err(Error::Syntax {
                        pos: *pos,
                        msg: "negative power of zero".into(),
                    });
                }
                base.pow(*k as i32)
            }
        })
    }
}

fn poly_single_var_power(p: &Poly) -> bool {
    p.len() == 1
        && p.terms().next().is_some_and(|(m, c)| c.is_one() && m.vars().count() == 1)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let multi = self.num.len() > 1;
        if self.den.is_one() {
            if multi {
                return write!(f, "({})", self.num);
            }
            return write!(f, "{}", self.num);
        }
        if multi {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.as_constant().is_some() || poly_single_var_power(&self.den) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Scalar::reduce(self.num.add(&rhs.num), self.den.clone());
        }
        // Common factors of the sum can only come from gcd(d1, d2).
        let g = Poly::gcd(&self.den, &rhs.den);
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d2).add(&rhs.num.mul(&d1));
        if num.is_zero() {
            return Scalar::zero();
        }
        let h = Poly::gcd(&num, &g);
        let num = num.div_exact(&h).expect("gcd divides");
        let mut den = d1.mul(&d2).mul(&g.div_exact(&h).expect("gcd divides"));
        let mut num = num;
        if den.leading_coeff_sign() == std::cmp::Ordering::Less {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar {
                num: self.num.mul(&rhs.num),
                den: Poly::one(),
            };
        }
        let g1 = Poly::gcd(&self.num, &rhs.den);
        let g2 = Poly::gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if den.leading_coeff_sign() == std::cmp::Ordering::Less {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

macro_rules! assign_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            fn $m(&mut self, rhs: Scalar) {
                self.$m(&rhs);
            }
        }
    )*};
}
assign_owned!(AddAssign add_assign, SubAssign sub_assign, MulAssign mul_assign);

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

impl From<Param> for Scalar {
    fn from(p: Param) -> Scalar {
        Scalar::param(p)
    }
}

/// Builds an assignment from `(name, numerator, denominator)` triples.
pub fn assignment(values: &[(&str, i64, i64)]) -> Assignment {
    values
        .iter()
        .map(|&(n, a, b)| {
            (
                Param::named(n),
                BigRational::new(BigInt::from(a), BigInt::from(b)),
            )
        })
        .collect()
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
