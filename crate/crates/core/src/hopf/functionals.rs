use crate::error::{Error, Result};
use crate::freealg::{NCPoly, Sym};
use crate::scalars::Scalar;

use super::{HopfData, RightIdeal};

/// The functionals `X` and `f` dual to the basis `(α − 1) + R` of
/// `ker ε / R` for `R = ⟨α + ν α* − (1+ν)⟩`: `f` is the character with
/// `f(α) = ν`, and `X(hk) = X(h) f(k) + ε(h) X(k)` with `X(α) = 1`.
#[derive(Clone, Debug)]
pub struct FunctionalPair {
    alpha: Sym,
    alphas: Sym,
    nu: Scalar,
}

/// Reads `ν` off the single generator of `R` on the built-in U(1).
pub fn functionals_for_u1(h: &HopfData, r: &RightIdeal) -> Result<FunctionalPair> {
    let p = h.presentation();
    let (alpha, alphas) = match (p.find("alpha"), p.find("alphas")) {
        (Some(a), Some(s)) if p.generators().len() == 2 => (a, s),
        _ => return Err(Error::Unsupported("functionals are implemented for U(1) only".into())),
    };
    let [g] = r.generators() else {
        return Err(Error::Unsupported("R must have exactly one generator".into()));
    };
    let ca = g.coeff(&[alpha]);
    if ca.is_zero() || g.len() > 3 {
        return Err(Error::Unsupported(format!("R generator {g} is not of the form α + ν α* − (1+ν)")));
    }
    let nu = g.coeff(&[alphas]).checked_div(&ca)?;
    let expect = &(&NCPoly::gen(alpha) + &NCPoly::gen(alphas).scale(&nu))
        - &NCPoly::scalar(&Scalar::one() + &nu);
    if g.scale(&ca.inv().expect("nonzero")) != expect || nu.is_zero() {
        return Err(Error::Unsupported(format!("R generator {g} is not of the form α + ν α* − (1+ν)")));
    }
    Ok(FunctionalPair { alpha, alphas, nu })
}

impl FunctionalPair {
    pub fn nu(&self) -> &Scalar {
        &self.nu
    }

    fn letter(&self, s: Sym) -> Result<(Scalar, Scalar)> {
        if s == self.alpha {
            Ok((Scalar::one(), self.nu.clone()))
        } else if s == self.alphas {
            let inv = self.nu.inv().expect("nonzero");
            Ok((-&inv, inv))
        } else {
            Err(Error::OutsideSource(s.name().to_string()))
        }
    }

    /// `f` on a word: product of letter values.
    pub fn f_word(&self, w: &[Sym]) -> Result<Scalar> {
        let mut v = Scalar::one();
        for &s in w {
            v *= &self.letter(s)?.1;
        }
        Ok(v)
    }

    /// `X` on a word, by `X(g·k) = X(g) f(k) + X(k)` (all letters have
    /// counit 1).
    pub fn x_word(&self, w: &[Sym]) -> Result<Scalar> {
        let mut x = Scalar::zero();
        let mut f = Scalar::one();
        for &s in w.iter().rev() {
            let (xs, fs) = self.letter(s)?;
            x = &(&xs * &f) + &x;
            f *= &fs;
        }
        Ok(x)
    }

    pub fn x(&self, h: &NCPoly) -> Result<Scalar> {
        let mut out = Scalar::zero();
        for (w, c) in h.terms() {
            out += c * &self.x_word(w)?;
        }
        Ok(out)
    }

    pub fn f(&self, h: &NCPoly) -> Result<Scalar> {
        let mut out = Scalar::zero();
        for (w, c) in h.terms() {
            out += c * &self.f_word(w)?;
        }
        Ok(out)
    }
}
