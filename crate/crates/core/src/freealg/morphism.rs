//! Algebra maps given by generator images.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::parse::parse_element;
use super::poly::NCPoly;
use super::presentation::Presentation;
use super::symbol::Sym;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Morphism {
    name: String,
    source: Arc<Presentation>,
    target: Arc<Presentation>,
    images: BTreeMap<Sym, NCPoly>,
}

#[derive(Clone, Debug, Default)]
pub struct MorphismReport {
    pub checked: usize,
    /// Source relations whose image does not vanish, with the residue.
    pub failures: Vec<(NCPoly, NCPoly)>,
    /// Generators whose image has the wrong degree.
    pub degree_failures: Vec<Sym>,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.degree_failures.is_empty()
    }
}

impl Morphism {
    /// Every source generator needs an image in the target.
    pub fn new(
        name: &str,
        source: Arc<Presentation>,
        target: Arc<Presentation>,
        images: BTreeMap<Sym, NCPoly>,
    ) -> Result<Morphism> {
        for g in source.generators() {
            let img = images
                .get(&g.sym)
                .ok_or_else(|| Error::Presentation(format!("{name}: no image for `{}`", g.sym)))?;
            target.check_symbols(img)?;
        }
        for s in images.keys() {
            if !source.has(*s) {
                return Err(Error::OutsideSource(s.name().to_string()));
            }
        }
        let images = images
            .into_iter()
            .map(|(s, e)| target.normal_form(&e).map(|n| (s, n)))
            .collect::<Result<_>>()?;
        Ok(Morphism {
            name: name.to_string(),
            source,
            target,
            images,
        })
    }

    /// Images written as expressions over the target.
    pub fn from_strs(
        name: &str,
        source: Arc<Presentation>,
        target: Arc<Presentation>,
        images: &[(&str, &str)],
    ) -> Result<Morphism> {
        let mut map = BTreeMap::new();
        for (g, img) in images {
            map.insert(source.sym(g)?, parse_element(img, &target)?);
        }
        Morphism::new(name, source, target, map)
    }

    pub fn identity(p: Arc<Presentation>) -> Morphism {
        let images = p.generators().iter().map(|g| (g.sym, NCPoly::gen(g.sym))).collect();
        Morphism {
            name: format!("id_{}", p.name()),
            source: p.clone(),
            target: p,
            images,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Presentation> {
        &self.target
    }

    pub fn image(&self, s: Sym) -> Option<&NCPoly> {
        self.images.get(&s)
    }

    pub fn images(&self) -> &BTreeMap<Sym, NCPoly> {
        &self.images
    }

    /// Multiplicative linear extension, normal-formed in the target.
    pub fn apply(&self, e: &NCPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in e.terms() {
            let mut acc = NCPoly::one();
            for s in w {
                let img = self
                    .images
                    .get(s)
                    .ok_or_else(|| Error::OutsideSource(s.name().to_string()))?;
                acc = self.target.normal_form(&acc.mul_raw(img))?;
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    pub fn ap(&self, e: &NCPoly) -> NCPoly {
        self.apply(e).unwrap_or_else(|err| panic!("{}: {err}", self.name))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        let images = inner
            .images
            .iter()
            .map(|(s, e)| self.apply(e).map(|v| (*s, v)))
            .collect::<Result<_>>()?;
        Morphism::new(
            &format!("{}∘{}", self.name, inner.name),
            inner.source.clone(),
            self.target.clone(),
            images,
        )
    }

    /// Checks that every source relation maps to zero and that generator
    /// degrees are preserved.
    pub fn check(&self) -> Result<MorphismReport> {
        let mut rep = MorphismReport::default();
        for g in self.source.generators() {
            let img = &self.images[&g.sym];
            if img.words().any(|w| self.target.word_degree(w) != g.degree) {
                rep.degree_failures.push(g.sym);
            }
        }
        for rel in self.source.relations() {
            rep.checked += 1;
            let res = self.apply(&rel)?;
            if !res.is_zero() {
                rep.failures.push((rel, res));
            }
        }
        Ok(rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::presentation::Builder;
    use crate::scalars::Scalar;

    fn circle() -> Arc<Presentation> {
        Arc::new(
            Builder::new("circle")
                .gens(&["alpha", "alphas"])
                .relations(&["alpha*alphas - 1", "alphas*alpha - 1"])
                .build()
                .unwrap(),
        )
    }

    #[test]
    fn group_like_transition_passes() {
        let c = circle();
        let m = Morphism::from_strs("tau", c.clone(), c.clone(), &[("alpha", "alpha"), ("alphas", "alphas")]).unwrap();
        assert!(m.check().unwrap().passed());
        assert!(Morphism::identity(c).check().unwrap().passed());
    }

    #[test]
    fn collapsed_conjugate_fails_with_residue() {
        let c = circle();
        let m = Morphism::from_strs("bad", c.clone(), c.clone(), &[("alpha", "alpha"), ("alphas", "alpha")]).unwrap();
        let rep = m.check().unwrap();
        assert!(!rep.passed());
        let a2m1 = &c.pow(&c.g("alpha"), 2) - &NCPoly::one();
        assert!(rep.failures.iter().any(|(_, r)| *r == a2m1));
    }

    #[test]
    fn disc_to_circle() {
        let d = Arc::new(
            Builder::new("disc")
                .gens(&["x", "xs"])
                .relation("xs*x - p*x*xs - (1-p)")
                .build()
                .unwrap(),
        );
        let c = circle();
        let phi = Morphism::from_strs("phi", d.clone(), c.clone(), &[("x", "alpha"), ("xs", "alphas")]).unwrap();
        assert!(phi.check().unwrap().passed());
        let xxs = d.g("x").mul_raw(&d.g("xs"));
        assert_eq!(phi.ap(&xxs), NCPoly::one());
        let e = &xxs + &d.g("x").scale(&Scalar::from_int(3));
        assert!(matches!(
            phi.apply(&NCPoly::gen(Sym::new("zz"))),
            Err(Error::OutsideSource(_))
        ));
        assert_eq!(phi.ap(&e), &NCPoly::one() + &c.g("alpha").scale(&Scalar::from_int(3)));
    }
}
