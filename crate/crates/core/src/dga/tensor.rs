use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::freealg::{Generator, Morphism, NCPoly, Presentation, Rule, Sym, Word};
use crate::scalars::Scalar;

/// Graded tensor product `A_1 ⊗ ... ⊗ A_n` of presentations. Generators of
/// different legs supercommute; names shared by several legs are tagged
/// `name.k` with the 1-based leg index.
#[derive(Clone, Debug)]
pub struct SkewTensor {
    pres: Arc<Presentation>,
    factors: Vec<Arc<Presentation>>,
    to_tensor: Vec<HashMap<Sym, Sym>>,
    to_factor: HashMap<Sym, (usize, Sym)>,
}

/// Substitutes symbols letter by letter; unmapped symbols are kept.
pub fn rename(e: &NCPoly, map: &HashMap<Sym, Sym>) -> NCPoly {
    NCPoly::from_terms(e.terms().map(|(w, c)| {
        (
            w.iter().map(|s| *map.get(s).unwrap_or(s)).collect::<Word>(),
            c.clone(),
        )
    }))
}

impl SkewTensor {
    pub fn new(name: &str, factors: &[Arc<Presentation>]) -> Result<SkewTensor> {
        let mut count: HashMap<Sym, usize> = HashMap::new();
        for f in factors {
            for g in f.generators() {
                *count.entry(g.sym).or_default() += 1;
            }
        }
        let mut to_tensor = Vec::with_capacity(factors.len());
        let mut to_factor = HashMap::new();
        let mut gens = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            let map: HashMap<Sym, Sym> = f
                .generators()
                .iter()
                .map(|g| {
                    let t = if count[&g.sym] > 1 {
                        Sym::new(&format!("{}.{}", g.sym.name(), i + 1))
                    } else {
                        g.sym
                    };
                    (g.sym, t)
                })
                .collect();
            for g in f.generators() {
                let t = map[&g.sym];
                if to_factor.insert(t, (i, g.sym)).is_some() {
                    return Err(Error::Presentation(format!("tensor name clash on `{t}`")));
                }
                gens.push(Generator {
                    sym: t,
                    degree: g.degree,
                    base: g.base.map(|b| map[&b]),
                    weight: g.weight,
                });
            }
            to_tensor.push(map);
        }
        let mut pres = Presentation::free(name, gens)?;
        let mut rules = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            if f.is_relator_only() {
                return Err(Error::Unsupported(format!(
                    "tensor leg {} is relator-only",
                    f.name()
                )));
            }
            for r in f.rules() {
                rules.push(Rule {
                    lhs: r.lhs.iter().map(|s| to_tensor[i][s]).collect(),
                    rhs: rename(&r.rhs, &to_tensor[i]),
                });
            }
        }
        for (i, fi) in factors.iter().enumerate() {
            for (j, fj) in factors.iter().enumerate().skip(i + 1) {
                for gl in fi.generators() {
                    for gr in fj.generators() {
                        let l = to_tensor[i][&gl.sym];
                        let r = to_tensor[j][&gr.sym];
                        let sign = if gl.degree * gr.degree % 2 == 1 { -1 } else { 1 };
                        rules.push(Rule {
                            lhs: vec![r, l],
                            rhs: NCPoly::term(vec![l, r], Scalar::from_int(sign)),
                        });
                    }
                }
            }
        }
        pres.add_rules(rules)?;
        if factors.iter().all(|f| f.differential().is_some()) {
            let mut d = BTreeMap::new();
            for (i, f) in factors.iter().enumerate() {
                for (s, img) in f.differential().expect("checked") {
                    d.insert(to_tensor[i][s], rename(img, &to_tensor[i]));
                }
            }
            pres.set_differential(d)?;
        }
        for f in factors {
            for n in f.notes() {
                pres.add_note(n.clone());
            }
        }
        Ok(SkewTensor {
            pres: Arc::new(pres),
            factors: factors.to_vec(),
            to_tensor,
            to_factor,
        })
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn factors(&self) -> &[Arc<Presentation>] {
        &self.factors
    }

    pub fn legs(&self) -> usize {
        self.factors.len()
    }

    /// Tensor name of a leg generator.
    pub fn sym(&self, leg: usize, s: Sym) -> Sym {
        self.to_tensor[leg][&s]
    }

    /// Leg and original name of a tensor generator.
    pub fn leg_of(&self, s: Sym) -> Option<(usize, Sym)> {
        self.to_factor.get(&s).copied()
    }

    /// `1 ⊗ ... ⊗ e ⊗ ... ⊗ 1` with `e` in position `leg`.
    pub fn embed(&self, leg: usize, e: &NCPoly) -> NCPoly {
        rename(e, &self.to_tensor[leg])
    }

    /// `e_1 ⊗ ... ⊗ e_n`, each leg taken in normal form.
    pub fn assemble(&self, legs: &[NCPoly]) -> Result<NCPoly> {
        if legs.len() != self.legs() {
            return Err(Error::Validation(format!(
                "{} legs given to a {}-fold tensor",
                legs.len(),
                self.legs()
            )));
        }
        let mut out = NCPoly::one();
        for (i, e) in legs.iter().enumerate() {
            let n = self.factors[i].normal_form(e)?;
            out = out.mul_raw(&self.embed(i, &n));
        }
        Ok(out)
    }

    /// Splits an element into simple tensors `(leg words, coefficient)`.
    /// The element is normalised first, so each word is ordered by leg.
    pub fn split(&self, e: &NCPoly) -> Result<Vec<(Vec<Word>, Scalar)>> {
        let n = self.pres.normal_form(e)?;
        let mut out = Vec::with_capacity(n.len());
        for (w, c) in n.terms() {
            let mut legs = vec![Word::new(); self.legs()];
            let mut last = 0;
            for s in w {
                let (i, fs) = self.to_factor[s];
                if i < last {
                    return Err(Error::Validation(format!("word {w:?} is not ordered by leg")));
                }
                last = i;
                legs[i].push(fs);
            }
            out.push((legs, c.clone()));
        }
        Ok(out)
    }

    /// Applies one morphism per leg. Each morphism's source must be the
    /// matching factor and its target the matching factor of `target`.
    pub fn tensor_map(
        &self,
        name: &str,
        target: &SkewTensor,
        maps: &[&Morphism],
    ) -> Result<Morphism> {
        if maps.len() != self.legs() || target.legs() != self.legs() {
            return Err(Error::Validation("leg counts differ".into()));
        }
        let mut images = BTreeMap::new();
        for (i, m) in maps.iter().enumerate() {
            for g in self.factors[i].generators() {
                let img = m.image(g.sym).ok_or_else(|| {
                    Error::Presentation(format!("{}: no image for `{}`", m.name(), g.sym))
                })?;
                images.insert(self.sym(i, g.sym), target.embed(i, img));
            }
        }
        Morphism::new(name, self.pres.clone(), target.pres.clone(), images)
    }

    /// Symbols of the tensor that belong to `leg`.
    pub fn leg_symbols(&self, leg: usize) -> HashSet<Sym> {
        self.to_tensor[leg].values().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dga::differentiate;
    use crate::freealg::{check_local_confluence, default_overlap_bound, parse_element, Builder};
    use crate::scalars::Param;

    #[test]
    fn tensor_of_disc_calculi() {
        let c = Arc::new(super::super::tests::disc_calculus());
        let t = SkewTensor::new("c2", &[c.clone(), c.clone()]).unwrap();
        let p = t.presentation();
        let rep = check_local_confluence(p, default_overlap_bound(p)).unwrap();
        assert!(rep.is_confluent(), "{}", rep.summary(p));
        let e = parse_element("dx.2*dx.1", p).unwrap();
        assert_eq!(p.nf(&e), parse_element("-dx.1*dx.2", p).unwrap());
        let e = parse_element("x.2*dx.1", p).unwrap();
        assert_eq!(p.nf(&e), parse_element("dx.1*x.2", p).unwrap());
        let x1 = t.embed(0, &c.g("x"));
        let x2 = t.embed(1, &c.g("x"));
        let prod = p.mul(&x1, &x2);
        let want = &t.embed(0, &c.g("dx")).mul_raw(&x2) + &x1.mul_raw(&t.embed(1, &c.g("dx")));
        assert_eq!(differentiate(&prod, p).unwrap(), want);
    }

    #[test]
    fn split_and_assemble_round_trip() {
        let a = Arc::new(
            Builder::new("a")
                .gens(&["u", "v"])
                .relation("v*u - q*u*v")
                .build()
                .unwrap(),
        );
        let b = Arc::new(Builder::new("b").gens(&["w"]).build().unwrap());
        let t = SkewTensor::new("ab", &[a.clone(), b.clone()]).unwrap();
        let e = t
            .assemble(&[parse_element("v*u", &a).unwrap(), b.g("w")])
            .unwrap();
        let parts = t.split(&e).unwrap();
        assert_eq!(parts.len(), 1);
        let (legs, c) = &parts[0];
        assert_eq!(c, &Scalar::param(Param::Q));
        assert_eq!(legs[0], vec![a.sym("u").unwrap(), a.sym("v").unwrap()]);
        assert_eq!(legs[1], vec![b.sym("w").unwrap()]);
    }
}
