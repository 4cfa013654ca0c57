//! Words and noncommutative polynomials with parameter coefficients.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::symbol::Sym;
use crate::scalars::Scalar;

pub type Word = Vec<Sym>;

pub fn word_string(w: &[Sym]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|s| s.name()).collect::<Vec<_>>().join("*")
}

/// Finite linear combination of words. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> NCPoly {
        NCPoly::default()
    }

    pub fn one() -> NCPoly {
        NCPoly::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> NCPoly {
        NCPoly::term(Word::new(), c)
    }

    pub fn word(w: Word) -> NCPoly {
        NCPoly::term(w, Scalar::one())
    }

    pub fn gen(s: Sym) -> NCPoly {
        NCPoly::word(vec![s])
    }

    pub fn term(w: Word, c: Scalar) -> NCPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(it: I) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in it {
            out.add_term(w, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Word, Scalar> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &[Sym]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The coefficient of the empty word when nothing else occurs.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::new()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NCPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, k) in &other.terms {
            self.add_term(w.clone(), k * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Concatenation product, without normal forms.
    pub fn mul_raw(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> NCPoly {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn symbols(&self) -> impl Iterator<Item = Sym> + '_ {
        self.terms.keys().flat_map(|w| w.iter().copied())
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    /// Terms in printing order: longer words first, then by name.
    pub fn sorted_terms(&self) -> Vec<(&Word, &Scalar)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by_cached_key(|(w, _)| {
            (
                std::cmp::Reverse(w.len()),
                w.iter().map(|s| s.name()).collect::<Vec<_>>(),
            )
        });
        t
    }

    pub fn write_terms(f: &mut impl fmt::Write, terms: &[(&Word, &Scalar)]) -> fmt::Result {
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in terms.iter().enumerate() {
            let neg = c.is_negative_leading();
            let mag = if neg { -*c } else { (*c).clone() };
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if w.is_empty() {
                write!(f, "{}", mag.factor_string())?;
            } else if mag.is_one() {
                f.write_str(&word_string(w))?;
            } else {
                write!(f, "{}*{}", mag.factor_string(), word_string(w))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        NCPoly::write_terms(f, &self.sorted_terms())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl<'a> Sub<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_int(-1));
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Add for NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: NCPoly) -> NCPoly {
        &self + &rhs
    }
}

impl Sub for NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: NCPoly) -> NCPoly {
        &self - &rhs
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

impl<'a> Mul<&'a Scalar> for &'a NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &Scalar) -> NCPoly {
        self.scale(rhs)
    }
}

impl From<Scalar> for NCPoly {
    fn from(c: Scalar) -> NCPoly {
        NCPoly::scalar(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Param;

    #[test]
    fn zero_coefficients_dropped() {
        let x = NCPoly::gen(Sym::new("x"));
        assert!((&x - &x).is_zero());
        assert_eq!((&x - &x).len(), 0);
    }

    #[test]
    fn display_signs() {
        let x = Sym::new("x");
        let xs = Sym::new("xs");
        let p = Scalar::param(Param::P);
        let mut e = NCPoly::term(vec![xs, x], Scalar::one());
        e.add_term(vec![x, xs], -p.clone());
        e.add_term(vec![], Scalar::from_int(-1) + p);
        assert_eq!(e.to_string(), "-p*x*xs + xs*x + (-1 + p)");
    }
}
