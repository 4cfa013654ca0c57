//! Irreducible-word enumeration and bounded two-sided ideal membership.

use super::linalg::{Echelon, SparseVec};
use super::poly::{NCPoly, Word};
use super::presentation::Presentation;
use crate::error::{Error, Result};

/// Irreducible words of weighted length at most `max_len`, in ascending
/// monomial order, optionally restricted to one form degree.
pub fn irreducible_words(pres: &Presentation, degree: Option<u32>, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut stack: Vec<Word> = vec![Vec::new()];
    while let Some(w) = stack.pop() {
        let deg = pres.word_degree(&w);
        if degree.is_none_or(|d| d == deg) {
            out.push(w.clone());
        }
        for g in pres.generators() {
            if degree.is_some_and(|d| deg + g.degree > d) {
                continue;
            }
            let mut nw = w.clone();
            nw.push(g.sym);
            if pres.weight(&nw) as usize > max_len {
                continue;
            }
            if ends_with_redex(pres, &nw) {
                continue;
            }
            stack.push(nw);
        }
    }
    out.sort_by_cached_key(|w| pres.key(w));
    out
}

fn ends_with_redex(pres: &Presentation, w: &[super::symbol::Sym]) -> bool {
    pres.rules().iter().any(|r| w.ends_with(&r.lhs))
}

/// Irreducible words of the given form degree up to the length bound.
pub fn graded_basis(pres: &Presentation, degree: u32, length_bound: usize) -> Vec<Word> {
    irreducible_words(pres, Some(degree), length_bound)
}

pub fn to_sparse(e: &NCPoly) -> SparseVec<Word> {
    e.clone().into_terms()
}

pub fn from_sparse(v: SparseVec<Word>) -> NCPoly {
    NCPoly::from_terms(v)
}

/// Span of `nf(u·g·v)` over irreducible words `u`, `v` with
/// `|u| + |g| + |v| <= bound`.
pub struct IdealSpan {
    ech: Echelon<Word>,
    bound: usize,
}

impl IdealSpan {
    pub fn new(pres: &Presentation, gens: &[NCPoly], bound: usize) -> Result<IdealSpan> {
        let words = irreducible_words(pres, None, bound);
        let mut ech = Echelon::new();
        for g in gens {
            let g = pres.normal_form(g)?;
            if g.is_zero() {
                continue;
            }
            let gl = g.words().map(|w| pres.weight(w) as usize).max().unwrap_or(0);
            for u in &words {
                let ul = pres.weight(u) as usize;
                if ul + gl > bound {
                    continue;
                }
                let ug = pres.normal_form(&NCPoly::word(u.clone()).mul_raw(&g))?;
                for v in &words {
                    if ul + gl + pres.weight(v) as usize > bound {
                        continue;
                    }
                    let e = pres.normal_form(&ug.mul_raw(&NCPoly::word(v.clone())))?;
                    if !e.is_zero() {
                        ech.insert(to_sparse(&e));
                    }
                }
            }
        }
        Ok(IdealSpan { ech, bound })
    }

    /// Plain linear span of already-computed elements.
    pub fn from_elements(elems: &[NCPoly]) -> IdealSpan {
        let mut ech = Echelon::new();
        for e in elems {
            if !e.is_zero() {
                ech.insert(to_sparse(e));
            }
        }
        IdealSpan { ech, bound: usize::MAX }
    }

    pub fn dimension(&self) -> usize {
        self.ech.rank()
    }

    pub fn contains(&self, pres: &Presentation, e: &NCPoly) -> Result<bool> {
        let e = pres.normal_form(e)?;
        let deg = e.words().map(|w| pres.weight(w) as usize).max().unwrap_or(0);
        if deg > self.bound {
            return Err(Error::DegreeBound {
                bound: self.bound,
                degree: deg,
            });
        }
        Ok(self.ech.contains(&to_sparse(&e)))
    }
}

/// Decides membership of `e` in the ideal generated by `gens` up to the
/// length bound by exact linear algebra.
pub fn ideal_membership_bounded(
    e: &NCPoly,
    gens: &[NCPoly],
    pres: &Presentation,
    degree_bound: usize,
) -> Result<bool> {
    let deg = e.words().map(|w| pres.weight(w) as usize).max().unwrap_or(0);
    if degree_bound < deg {
        return Err(Error::DegreeBound {
            bound: degree_bound,
            degree: deg,
        });
    }
    IdealSpan::new(pres, gens, degree_bound)?.contains(pres, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse::parse_element;
    use crate::freealg::poly::word_string;
    use crate::freealg::presentation::Builder;

    #[test]
    fn disc_words_of_length_two() {
        let d = Builder::new("disc")
            .gens(&["x", "xs"])
            .relation("xs*x - p*x*xs - (1-p)")
            .build()
            .unwrap();
        let two: Vec<String> = graded_basis(&d, 0, 2)
            .into_iter()
            .filter(|w| w.len() == 2)
            .map(|w| word_string(&w))
            .collect();
        assert_eq!(two, vec!["x*x", "x*xs", "xs*xs"]);
        assert_eq!(graded_basis(&d, 0, 0), vec![Word::new()]);
    }

    #[test]
    fn circle_basis() {
        let c = Builder::new("circle")
            .gens(&["alpha", "alphas"])
            .relations(&["alpha*alphas - 1", "alphas*alpha - 1"])
            .build()
            .unwrap();
        let got: Vec<String> = graded_basis(&c, 0, 2).iter().map(|w| word_string(w)).collect();
        assert_eq!(got, vec!["1", "alpha", "alphas", "alpha*alpha", "alphas*alphas"]);
    }

    #[test]
    fn membership_examples() {
        let free = Builder::new("free").gens(&["x", "xs"]).build().unwrap();
        let rel = parse_element("xs*x - p*x*xs - (1-p)", &free).unwrap();
        assert!(ideal_membership_bounded(&rel, &[rel.clone()], &free, 4).unwrap());
        assert!(!ideal_membership_bounded(&NCPoly::one(), &[rel.clone()], &free, 4).unwrap());
        assert!(matches!(
            ideal_membership_bounded(&rel, &[rel.clone()], &free, 1),
            Err(Error::DegreeBound { .. })
        ));
        let ab = Builder::new("ab").gens(&["a", "as", "b", "bs"]).build().unwrap();
        let g = parse_element("(1-a*as)*(1-b*bs)", &ab).unwrap();
        assert!(ideal_membership_bounded(&g, &[g.clone()], &ab, 4).unwrap());
    }
}
