//! Parsing expressions into elements of a presentation.

use super::poly::NCPoly;
use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::expr::{self, Expr};
use crate::scalars::{Param, Scalar};

/// Parses `text` over the generators and parameters of `pres`. The result
/// has canonical coefficients but is not normal-formed.
pub fn parse_element(text: &str, pres: &Presentation) -> Result<NCPoly> {
    eval(&expr::parse(text)?, pres)
}

fn eval(e: &Expr, pres: &Presentation) -> Result<NCPoly> {
    Ok(match e {
        Expr::Int(n) => NCPoly::scalar(Scalar::from_bigint(n.clone())),
        Expr::Ident { name, .. } => {
            if let Some(s) = pres.find(name) {
                NCPoly::gen(s)
            } else if let Some(p) = Param::lookup(name) {
                NCPoly::scalar(Scalar::param(p))
            } else {
                return Err(Error::UnknownGenerator(name.clone()));
            }
        }
        Expr::Diff { name, pos } => {
            let s = pres.find(name).ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
            let d = pres.differential().ok_or_else(|| Error::Syntax {
                pos: *pos,
                msg: format!("presentation `{}` has no differential", pres.name()),
            })?;
            if pres.degree(s) > 0 {
                NCPoly::zero()
            } else {
                d.get(&s).cloned().ok_or_else(|| Error::Syntax {
                    pos: *pos,
                    msg: format!("no differential assigned to `{name}`"),
                })?
            }
        }
        Expr::Neg(a) => -eval(a, pres)?,
        Expr::Add(a, b) => eval(a, pres)? + eval(b, pres)?,
        Expr::Sub(a, b) => eval(a, pres)? - eval(b, pres)?,
        Expr::Mul(a, b) => eval(a, pres)?.mul_raw(&eval(b, pres)?),
        Expr::Div(a, b, pos) => {
            let d = eval(b, pres)?;
            let s = d.as_scalar().ok_or_else(|| Error::Syntax {
                pos: *pos,
                msg: "division by a non-scalar".into(),
            })?;
            let inv = s.inv().ok_or_else(|| Error::Syntax {
                pos: *pos,
                msg: "division by zero".into(),
            })?;
            eval(a, pres)?.scale(&inv)
        }
        Expr::Pow(a, k, pos) => {
            let base = eval(a, pres)?;
            if *k >= 0 {
                let mut acc = NCPoly::one();
                for _ in 0..*k {
                    acc = acc.mul_raw(&base);
                }
                acc
            } else {
                let s = base.as_scalar().filter(|s| !s.is_zero()).ok_or_else(|| Error::Syntax {
                    pos: *pos,
                    msg: "negative power of a non-invertible element".into(),
                })?;
                NCPoly::scalar(s.pow(*k as i32))
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::presentation::Builder;
    use crate::freealg::symbol::Sym;

    fn disc_calc() -> Presentation {
        Builder::new("calc").calculus(&["x", "xs"]).build_unchecked().unwrap()
    }

    #[test]
    fn parses_relation() {
        let p = disc_calc();
        let e = parse_element("xs*x - p*x*xs", &p).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.coeff(&[Sym::new("xs"), Sym::new("x")]), Scalar::one());
    }

    #[test]
    fn differential_atom() {
        let p = disc_calc();
        let e = parse_element("d(x)*x", &p).unwrap();
        assert_eq!(e, NCPoly::word(vec![Sym::new("dx"), Sym::new("x")]));
    }

    #[test]
    fn scalar_times_unit() {
        let p = disc_calc();
        let e = parse_element("(1-p)*1", &p).unwrap();
        assert_eq!(e, NCPoly::scalar(Scalar::parse("1-p").unwrap()));
    }

    #[test]
    fn unknown_generator() {
        let p = disc_calc();
        assert!(matches!(parse_element("x*w", &p), Err(Error::UnknownGenerator(n)) if n == "w"));
    }

    #[test]
    fn display_round_trip() {
        let p = disc_calc();
        let e = parse_element("1/4*(x*d(xs) - xs*d(x)) - (1+p)/(1-nu)*dx*dxs + 3", &p).unwrap();
        assert_eq!(parse_element(&e.to_string(), &p).unwrap(), e);
    }
}
