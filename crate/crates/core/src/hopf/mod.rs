//! Hopf algebra structure on a presentation: coproduct and Sweedler legs,
//! counit, antipode, right-covariant calculi from right ideals, the map
//! `eta`, the invariant projection and the functionals of the U(1) case.

pub mod file;
mod functionals;

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

pub use functionals::{functionals_for_u1, FunctionalPair};

use crate::dga::{close_differential_ideal, differentiate, SkewTensor};
use crate::error::{Error, Result};
use crate::freealg::{parse_element, Builder, Generator, IdealSpan, NCPoly, Presentation, Sym, Word};
use crate::report::Record;
use crate::scalars::Scalar;

/// One simple tensor `coeff · w_1 ⊗ ... ⊗ w_n` of a Sweedler expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweedlerTerm {
    pub coeff: Scalar,
    pub legs: Vec<Word>,
}

impl SweedlerTerm {
    pub fn leg(&self, i: usize) -> NCPoly {
        NCPoly::word(self.legs[i].clone())
    }
}

fn collect(terms: impl IntoIterator<Item = (Vec<Word>, Scalar)>) -> Vec<SweedlerTerm> {
    let mut acc: BTreeMap<Vec<Word>, Scalar> = BTreeMap::new();
    for (legs, c) in terms {
        let e = acc.entry(legs).or_insert_with(Scalar::zero);
        *e += c;
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(legs, coeff)| SweedlerTerm { coeff, legs })
        .collect()
}

/// Hopf algebra `H` with coproduct into the untwisted tensor square.
#[derive(Debug)]
pub struct HopfData {
    pres: Arc<Presentation>,
    square: SkewTensor,
    delta: BTreeMap<Sym, NCPoly>,
    counit: BTreeMap<Sym, Scalar>,
    antipode: BTreeMap<Sym, NCPoly>,
    inv_antipode: Option<BTreeMap<Sym, NCPoly>>,
    powers: Mutex<BTreeMap<usize, SkewTensor>>,
    delta_cache: Mutex<BTreeMap<Word, Vec<SweedlerTerm>>>,
}

impl HopfData {
    /// Validates the structure maps on generators: the coproduct, counit
    /// and antipode respect the relations, and the Hopf axioms hold.
    pub fn new(
        pres: Arc<Presentation>,
        delta: BTreeMap<Sym, NCPoly>,
        counit: BTreeMap<Sym, Scalar>,
        antipode: BTreeMap<Sym, NCPoly>,
        inv_antipode: Option<BTreeMap<Sym, NCPoly>>,
    ) -> Result<HopfData> {
        if pres.generators().iter().any(|g| g.degree != 0) {
            return Err(Error::Presentation(format!("{}: Hopf generators must have degree 0", pres.name())));
        }
        let square = SkewTensor::new(&format!("{0}⊗{0}", pres.name()), &[pres.clone(), pres.clone()])?;
        for g in pres.generators() {
            let ok = delta.contains_key(&g.sym) && counit.contains_key(&g.sym) && antipode.contains_key(&g.sym);
            if !ok || inv_antipode.as_ref().is_some_and(|m| !m.contains_key(&g.sym)) {
                return Err(Error::Presentation(format!("incomplete structure maps at `{}`", g.sym)));
            }
        }
        let delta = delta
            .into_iter()
            .map(|(s, e)| square.presentation().normal_form(&e).map(|n| (s, n)))
            .collect::<Result<_>>()?;
        let h = HopfData {
            pres,
            square,
            delta,
            counit,
            antipode,
            inv_antipode,
            powers: Mutex::new(BTreeMap::new()),
            delta_cache: Mutex::new(BTreeMap::new()),
        };
        let failures: Vec<Record> = h
            .check_axioms(&[])?
            .into_iter()
            .filter(|r| r.status == crate::report::Status::Fail)
            .collect();
        if let Some(r) = failures.first() {
            return Err(Error::Validation(format!(
                "{}: {} fails: {}",
                h.pres.name(),
                r.name,
                r.residue.clone().unwrap_or_default()
            )));
        }
        Ok(h)
    }

    /// The Hopf algebra of polynomial functions on U(1): `α` group-like,
    /// `α* = α⁻¹`, with `S⁻¹ = S`.
    pub fn u1() -> HopfData {
        let pres = Arc::new(u1_algebra("P(U(1))"));
        let a = pres.sym("alpha").expect("builtin");
        let s = pres.sym("alphas").expect("builtin");
        let square = SkewTensor::new("sq", &[pres.clone(), pres.clone()]).expect("builtin");
        let gl = |g: Sym| square.assemble(&[NCPoly::gen(g), NCPoly::gen(g)]).expect("builtin");
        let delta = BTreeMap::from([(a, gl(a)), (s, gl(s))]);
        let counit = BTreeMap::from([(a, Scalar::one()), (s, Scalar::one())]);
        let antipode = BTreeMap::from([(a, NCPoly::gen(s)), (s, NCPoly::gen(a))]);
        HopfData::new(pres, delta, counit, antipode.clone(), Some(antipode)).expect("U(1) is a Hopf algebra")
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn square(&self) -> &SkewTensor {
        &self.square
    }

    pub fn has_inverse_antipode(&self) -> bool {
        self.inv_antipode.is_some()
    }

    /// `H^{⊗n}` as an untwisted tensor presentation.
    pub fn tensor_power(&self, n: usize) -> Result<SkewTensor> {
        if n == 2 {
            return Ok(self.square.clone());
        }
        let mut cache = self.powers.lock().expect("cache poisoned");
        if let Some(t) = cache.get(&n) {
            return Ok(t.clone());
        }
        let legs = vec![self.pres.clone(); n];
        let t = SkewTensor::new(&format!("{}^⊗{n}", self.pres.name()), &legs)?;
        cache.insert(n, t.clone());
        Ok(t)
    }

    fn delta_word(&self, w: &Word) -> Result<Vec<SweedlerTerm>> {
        if let Some(t) = self.delta_cache.lock().expect("cache poisoned").get(w) {
            return Ok(t.clone());
        }
        let sq = self.square.presentation();
        let mut acc = NCPoly::one();
        for s in w {
            let img = self.delta.get(s).ok_or_else(|| Error::OutsideSource(s.name().to_string()))?;
            acc = sq.normal_form(&acc.mul_raw(img))?;
        }
        let terms = collect(self.square.split(&acc)?);
        self.delta_cache.lock().expect("cache poisoned").insert(w.clone(), terms.clone());
        Ok(terms)
    }

    /// Applies the coproduct to leg `leg` of every term.
    pub fn delta_on_leg(&self, terms: &[SweedlerTerm], leg: usize) -> Result<Vec<SweedlerTerm>> {
        let mut out = Vec::new();
        for t in terms {
            for d in self.delta_word(&t.legs[leg])? {
                let mut legs = t.legs[..leg].to_vec();
                legs.extend(d.legs);
                legs.extend_from_slice(&t.legs[leg + 1..]);
                out.push((legs, &t.coeff * &d.coeff));
            }
        }
        Ok(collect(out))
    }

    /// `h` as a one-leg expansion of its normal form.
    pub fn terms_of(&self, h: &NCPoly) -> Result<Vec<SweedlerTerm>> {
        let n = self.pres.normal_form(h)?;
        Ok(collect(n.into_terms().into_iter().map(|(w, c)| (vec![w], c))))
    }

    /// `Δ^{(n)}(h)` as Sweedler terms with `n` legs, expanding the last leg.
    pub fn coproduct_terms(&self, h: &NCPoly, n: usize) -> Result<Vec<SweedlerTerm>> {
        if n == 0 {
            return Err(Error::Validation("coproduct needs at least one leg".into()));
        }
        let mut t = self.terms_of(h)?;
        for k in 1..n {
            t = self.delta_on_leg(&t, k - 1)?;
        }
        Ok(t)
    }

    /// `Δ^{(n)}(h)` as an element of `H^{⊗n}`.
    pub fn iterated_coproduct(&self, h: &NCPoly, n: usize) -> Result<NCPoly> {
        if n < 2 {
            return Err(Error::Validation("iterated coproduct needs n ≥ 2".into()));
        }
        let t = self.tensor_power(n)?;
        self.assemble(&t, &self.coproduct_terms(h, n)?)
    }

    pub fn assemble(&self, t: &SkewTensor, terms: &[SweedlerTerm]) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for term in terms {
            let legs: Vec<NCPoly> = term.legs.iter().map(|w| NCPoly::word(w.clone())).collect();
            out.add_scaled(&t.assemble(&legs)?, &term.coeff);
        }
        Ok(out)
    }

    /// Splits a normal-formed tensor element into its Sweedler terms.
    pub fn sweedler_legs(&self, t: &SkewTensor, e: &NCPoly) -> Result<Vec<SweedlerTerm>> {
        Ok(collect(t.split(e)?))
    }

    pub fn counit(&self, h: &NCPoly) -> Result<Scalar> {
        let mut out = Scalar::zero();
        for (w, c) in h.terms() {
            let mut v = c.clone();
            for s in w {
                v *= self.counit.get(s).ok_or_else(|| Error::OutsideSource(s.name().to_string()))?;
            }
            out += v;
        }
        Ok(out)
    }

    pub fn counit_word(&self, w: &[Sym]) -> Result<Scalar> {
        self.counit(&NCPoly::word(w.to_vec()))
    }

    fn anti(&self, map: &BTreeMap<Sym, NCPoly>, h: &NCPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in h.terms() {
            let mut acc = NCPoly::one();
            for s in w.iter().rev() {
                let img = map.get(s).ok_or_else(|| Error::OutsideSource(s.name().to_string()))?;
                acc = self.pres.normal_form(&acc.mul_raw(img))?;
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    /// Antipode, extended as an algebra anti-homomorphism.
    pub fn antipode(&self, h: &NCPoly) -> Result<NCPoly> {
        self.anti(&self.antipode, h)
    }

    pub fn inv_antipode(&self, h: &NCPoly) -> Result<NCPoly> {
        let m = self
            .inv_antipode
            .as_ref()
            .ok_or_else(|| Error::Unsupported(format!("{} has no inverse antipode", self.pres.name())))?;
        self.anti(m, h)
    }

    /// Coassociativity, counit and antipode laws on the generators and on
    /// `samples`, plus `S⁻¹∘S = id` on generators.
    pub fn check_axioms(&self, samples: &[NCPoly]) -> Result<Vec<Record>> {
        let mut hs: Vec<NCPoly> = vec![NCPoly::one()];
        hs.extend(self.pres.generators().iter().map(|g| NCPoly::gen(g.sym)));
        hs.extend(samples.iter().cloned());
        let mut recs = Vec::new();
        let mut bad = |name: &str, anchor: &str, res: Vec<String>| {
            recs.push(Record::check(name, anchor, res.into_iter().next()));
        };

        let mut res = Vec::new();
        let t3 = self.tensor_power(3)?;
        for h in &hs {
            let d = self.coproduct_terms(h, 2)?;
            let left = self.assemble(&t3, &self.delta_on_leg(&d, 0)?)?;
            let right = self.assemble(&t3, &self.delta_on_leg(&d, 1)?)?;
            let r = &left - &right;
            if !r.is_zero() {
                res.push(format!("h = {}: {}", h, r));
            }
        }
        bad("coassociativity", "(Δ⊗id)Δ(h) = (id⊗Δ)Δ(h)", res);

        let mut res = Vec::new();
        for h in &hs {
            let hn = self.pres.normal_form(h)?;
            let d = self.coproduct_terms(h, 2)?;
            let mut l = NCPoly::zero();
            let mut r = NCPoly::zero();
            for t in &d {
                l.add_scaled(&t.leg(1), &(&t.coeff * &self.counit_word(&t.legs[0])?));
                r.add_scaled(&t.leg(0), &(&t.coeff * &self.counit_word(&t.legs[1])?));
            }
            for (side, v) in [("left", l), ("right", r)] {
                let diff = &self.pres.normal_form(&v)? - &hn;
                if !diff.is_zero() {
                    res.push(format!("{side}, h = {h}: {diff}"));
                }
            }
        }
        bad("counit", "(ε⊗id)Δ(h) = h = (id⊗ε)Δ(h)", res);

        let mut res = Vec::new();
        for h in &hs {
            let eps = NCPoly::scalar(self.counit(h)?);
            let d = self.coproduct_terms(h, 2)?;
            let mut l = NCPoly::zero();
            let mut r = NCPoly::zero();
            for t in &d {
                l.add_scaled(&self.antipode(&t.leg(0))?.mul_raw(&t.leg(1)), &t.coeff);
                r.add_scaled(&t.leg(0).mul_raw(&self.antipode(&t.leg(1))?), &t.coeff);
            }
            for (side, v) in [("m(S⊗id)Δ", l), ("m(id⊗S)Δ", r)] {
                let diff = &self.pres.normal_form(&v)? - &eps;
                if !diff.is_zero() {
                    res.push(format!("{side}, h = {h}: {diff}"));
                }
            }
        }
        bad("antipode", "m(S⊗id)Δ(h) = ε(h)1 = m(id⊗S)Δ(h)", res);

        let mut res = Vec::new();
        for rel in self.pres.relations() {
            let d = self.coproduct_terms(&rel, 2);
            let d = match d {
                Ok(d) => d,
                Err(e) => {
                    res.push(e.to_string());
                    continue;
                }
            };
            let dr = self.assemble(&self.square, &d)?;
            let checks = [
                (!dr.is_zero()).then(|| format!("Δ({rel}) = {dr}")),
                (!self.counit(&rel)?.is_zero()).then(|| format!("ε({rel}) ≠ 0")),
                {
                    let s = self.antipode(&rel)?;
                    (!s.is_zero()).then(|| format!("S({rel}) = {s}"))
                },
            ];
            res.extend(checks.into_iter().flatten());
        }
        bad("structure maps respect relations", "Δ, ε, S vanish on defining relations", res);

        if self.inv_antipode.is_some() {
            let mut res = Vec::new();
            for g in self.pres.generators() {
                let h = NCPoly::gen(g.sym);
                let back = self.inv_antipode(&self.antipode(&h)?)?;
                if back != h {
                    res.push(format!("S⁻¹(S({h})) = {back}"));
                }
            }
            bad("inverse antipode", "S⁻¹∘S = id on generators", res);
        }
        Ok(recs)
    }

    /// `η(h) = Σ S⁻¹(h₂) d(h₁)` in a calculus containing `H`.
    pub fn eta(&self, h: &NCPoly, calc: &Presentation) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for t in self.coproduct_terms(h, 2)? {
            let s = self.inv_antipode(&t.leg(1))?;
            let dh = differentiate(&t.leg(0), calc)?;
            out.add_scaled(&s.mul_raw(&dh), &t.coeff);
        }
        calc.normal_form(&out)
    }

    /// The right-covariant calculus determined by the right ideal `r`: the
    /// universal calculus modulo the differential ideal generated by `η(R)`.
    pub fn covariant_calculus(&self, r: &RightIdeal) -> Result<Presentation> {
        let omega = universal_calculus(&self.pres, &format!("Γ({})", self.pres.name()))?;
        let gens = r
            .generators()
            .iter()
            .map(|g| self.eta(g, &omega))
            .collect::<Result<Vec<_>>>()?;
        close_differential_ideal(&omega, &gens)
    }

    /// Sampled Ad-invariance: `Σ S(r₁)r₃ ⊗ r₂ ∈ H ⊗ R` for each generator.
    pub fn ad_invariance(&self, r: &RightIdeal, bound: usize) -> Result<Record> {
        let mut res = None;
        for g in r.generators() {
            for (lhs, right) in self.ad_terms(g)? {
                if !r.contains(self, &right, bound)? {
                    res = Some(format!("r = {g}: component {right} at {lhs} not in R"));
                }
            }
        }
        Ok(Record::check("Ad-invariance of R", "Σ S(r₁)r₃ ⊗ r₂ ∈ H ⊗ R", res))
    }

    /// `Σ S(r₁)r₃ ⊗ r₂` grouped by the normal-formed left factor.
    pub fn ad_terms(&self, r: &NCPoly) -> Result<Vec<(NCPoly, NCPoly)>> {
        let mut by_left: BTreeMap<Word, NCPoly> = BTreeMap::new();
        for t in self.coproduct_terms(r, 3)? {
            let left = self.pres.normal_form(&self.antipode(&t.leg(0))?.mul_raw(&t.leg(2)))?;
            for (w, c) in left.terms() {
                by_left
                    .entry(w.clone())
                    .or_default()
                    .add_scaled(&t.leg(1), &(c * &t.coeff));
            }
        }
        Ok(by_left
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(w, v)| (NCPoly::word(w), v))
            .collect())
    }

    /// `(id ⊗ ε)` on the last leg of a tensor whose last factor is `H`.
    pub fn counit_right_leg(&self, t: &SkewTensor, j: &NCPoly) -> Result<NCPoly> {
        let n = t.legs();
        let mut out = NCPoly::zero();
        for (legs, c) in t.split(j)? {
            let e = self.counit_word(&legs[n - 1])?;
            let mut rest: Vec<NCPoly> = legs[..n - 1].iter().map(|w| NCPoly::word(w.clone())).collect();
            let first = rest.remove(0);
            let mut acc = first;
            for l in rest {
                acc = acc.mul_raw(&l);
            }
            out.add_scaled(&acc, &(&c * &e));
        }
        Ok(out)
    }

    /// `P_inv(ρ) = Σ ρ₀ S(ρ₁)` for `ρ` in a chart `B ⊗ H` (last leg `H`)
    /// with the coaction `id ⊗ Δ`.
    pub fn p_inv(&self, t: &SkewTensor, rho: &NCPoly) -> Result<NCPoly> {
        let n = t.legs();
        let mut out = NCPoly::zero();
        for (legs, c) in t.split(rho)? {
            let one_leg = vec![SweedlerTerm { coeff: c, legs: vec![legs[n - 1].clone()] }];
            for d in self.delta_on_leg(&one_leg, 0)? {
                let h = self.pres.normal_form(&d.leg(0).mul_raw(&self.antipode(&d.leg(1))?))?;
                let mut parts: Vec<NCPoly> = legs[..n - 1].iter().map(|w| NCPoly::word(w.clone())).collect();
                parts.push(h);
                out.add_scaled(&t.assemble(&parts)?, &d.coeff);
            }
        }
        t.presentation().normal_form(&out)
    }
}

/// The two-generator algebra `α α* = α* α = 1`.
pub fn u1_algebra(name: &str) -> Presentation {
    Builder::new(name)
        .gens(&["alpha", "alphas"])
        .relations(&["alpha*alphas - 1", "alphas*alpha - 1"])
        .build()
        .expect("circle algebra")
}

/// Free calculus over an algebra: generators `d<g>` below the algebra
/// generators, the algebra relations and the standard differential. The
/// differentials of the relations are added by `close_differential_ideal`.
pub fn universal_calculus(pres: &Presentation, name: &str) -> Result<Presentation> {
    let mut gens: Vec<Generator> = pres
        .generators()
        .iter()
        .map(|g| Generator {
            sym: Sym::new(&format!("d{}", g.sym.name())),
            degree: g.degree + 1,
            base: Some(g.sym),
            weight: g.weight,
        })
        .collect();
    gens.extend(pres.generators().iter().cloned());
    let mut omega = Presentation::free(name, gens)?;
    omega.set_max_steps(pres.max_steps());
    omega.set_standard_differential();
    omega.add_relations(&pres.relations())?;
    for n in pres.notes() {
        omega.add_note(n.clone());
    }
    Ok(omega)
}

/// A right ideal `R ⊂ ker ε`, given by generators.
#[derive(Clone, Debug)]
pub struct RightIdeal {
    gens: Vec<NCPoly>,
}

impl RightIdeal {
    pub fn new(h: &HopfData, gens: Vec<NCPoly>) -> Result<RightIdeal> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            h.presentation().check_symbols(&g)?;
            let e = h.counit(&g)?;
            if !e.is_zero() {
                return Err(Error::Validation(format!("ε({g}) = {e} ≠ 0")));
            }
            out.push(h.presentation().normal_form(&g)?);
        }
        Ok(RightIdeal { gens: out })
    }

    pub fn parse(h: &HopfData, gens: &[&str]) -> Result<RightIdeal> {
        let gens = gens
            .iter()
            .map(|s| parse_element(s, h.presentation()))
            .collect::<Result<Vec<_>>>()?;
        RightIdeal::new(h, gens)
    }

    pub fn generators(&self) -> &[NCPoly] {
        &self.gens
    }

    /// Right multiples `r·w` for irreducible words `w` of weighted length
    /// at most `bound`.
    pub fn sample(&self, h: &HopfData, bound: usize) -> Result<Vec<NCPoly>> {
        let words = crate::freealg::irreducible_words(h.presentation(), None, bound);
        let mut out = Vec::new();
        for g in &self.gens {
            for w in &words {
                out.push(h.presentation().normal_form(&g.mul_raw(&NCPoly::word(w.clone())))?);
            }
        }
        Ok(out)
    }

    /// Whether `e` lies in the span of the right multiples `r·w`, with `w`
    /// irreducible of weighted length at most `bound + len(e)`.
    pub fn contains(&self, h: &HopfData, e: &NCPoly, bound: usize) -> Result<bool> {
        let pres = h.presentation();
        let e = pres.normal_form(e)?;
        let span = IdealSpan::from_elements(&self.sample(h, bound + e.max_len())?);
        span.contains(pres, &e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use crate::scalars::Param;

    fn ps(h: &Presentation, s: &str) -> NCPoly {
        parse_element(s, h).unwrap()
    }

    #[test]
    fn u1_axioms_hold() {
        let h = HopfData::u1();
        let p = h.presentation().clone();
        let samples: Vec<NCPoly> = (1..=5)
            .flat_map(|k| [p.pow(&p.g("alpha"), k), p.pow(&p.g("alphas"), k)])
            .collect();
        for r in h.check_axioms(&samples).unwrap() {
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
    }

    #[test]
    fn group_like_coproducts() {
        let h = HopfData::u1();
        let p = h.presentation();
        let t = h.coproduct_terms(&p.g("alpha"), 2).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].legs, vec![vec![p.sym("alpha").unwrap()]; 2]);
        let one = h.coproduct_terms(&NCPoly::one(), 2).unwrap();
        assert_eq!(one[0].legs, vec![Word::new(), Word::new()]);
        let a2 = p.pow(&p.g("alpha"), 2);
        let t3 = h.coproduct_terms(&a2, 3).unwrap();
        assert_eq!(t3.len(), 1);
        assert!(t3[0].legs.iter().all(|l| NCPoly::word(l.clone()) == a2));
        assert!(h.coproduct_terms(&NCPoly::zero(), 2).unwrap().is_empty());
    }

    #[test]
    fn sweedler_legs_of_right_ideal_generator() {
        let h = HopfData::u1();
        let p = h.presentation();
        let r = ps(p, "alpha + nu*alphas - (1+nu)");
        let t = h.iterated_coproduct(&r, 2).unwrap();
        let legs = h.sweedler_legs(h.square(), &t).unwrap();
        assert_eq!(legs.len(), 3);
        let nu = Scalar::param(Param::NU);
        let find = |w: Word| legs.iter().find(|l| l.legs[0] == w).unwrap().coeff.clone();
        assert_eq!(find(vec![p.sym("alpha").unwrap()]), Scalar::one());
        assert_eq!(find(vec![p.sym("alphas").unwrap()]), nu.clone());
        assert_eq!(find(vec![]), -(&Scalar::one() + &nu));
    }

    #[test]
    fn covariant_calculus_relation() {
        let h = HopfData::u1();
        let r = RightIdeal::parse(&h, &["alpha + nu*alphas - (1+nu)"]).unwrap();
        let g = h.covariant_calculus(&r).unwrap();
        let rel = ps(&g, "alphas*dalpha + nu*alpha*dalphas");
        assert!(g.nf(&rel).is_zero());
        let lhs = ps(&g, "dalphas");
        let rhs = ps(&g, "-nu^-1*alphas*alphas*dalpha");
        assert_eq!(g.nf(&lhs), g.nf(&rhs));
        assert!(!g.nf(&ps(&g, "dalpha")).is_zero());
    }

    #[test]
    fn eta_properties() {
        let h = HopfData::u1();
        let r = RightIdeal::parse(&h, &["alpha + nu*alphas - (1+nu)"]).unwrap();
        let g = h.covariant_calculus(&r).unwrap();
        let a = g.g("alpha");
        assert_eq!(h.eta(&a, &g).unwrap(), g.nf(&ps(&g, "alphas*dalpha")));
        assert!(h.eta(&NCPoly::one(), &g).unwrap().is_zero());
        assert_eq!(g.mul(&a, &h.eta(&a, &g).unwrap()), g.g("dalpha"));
    }

    #[test]
    fn rejects_ideal_outside_counit_kernel() {
        let h = HopfData::u1();
        assert!(RightIdeal::parse(&h, &["alpha"]).is_err());
    }

    #[test]
    fn ad_invariance_for_u1() {
        let h = HopfData::u1();
        let r = RightIdeal::parse(&h, &["alpha + nu*alphas - (1+nu)"]).unwrap();
        assert_eq!(h.ad_invariance(&r, 2).unwrap().status, Status::Pass);
    }

    #[test]
    fn right_ideal_membership() {
        let h = HopfData::u1();
        let p = h.presentation();
        let r = RightIdeal::parse(&h, &["alpha + nu*alphas - (1+nu)"]).unwrap();
        let m = ps(p, "(alpha + nu*alphas - (1+nu))*alpha*alpha");
        assert!(r.contains(&h, &m, 2).unwrap());
        assert!(!r.contains(&h, &ps(p, "alpha - 1"), 3).unwrap());
    }

    #[test]
    fn counit_leg_and_invariant_projection() {
        let h = HopfData::u1();
        let b = Arc::new(Builder::new("b").gens(&["a"]).build().unwrap());
        let t = SkewTensor::new("bh", &[b.clone(), h.presentation().clone()]).unwrap();
        let hp = h.presentation();
        let a_alpha = t.assemble(&[b.g("a"), hp.g("alpha")]).unwrap();
        assert_eq!(h.counit_right_leg(&t, &a_alpha).unwrap(), b.g("a"));
        let a_km = t.assemble(&[b.g("a"), &hp.g("alpha") - &NCPoly::one()]).unwrap();
        assert!(h.counit_right_leg(&t, &a_km).unwrap().is_zero());
        let inv = h.p_inv(&t, &a_alpha).unwrap();
        assert_eq!(inv, t.embed(0, &b.g("a")));
        assert!(h.p_inv(&t, &NCPoly::zero()).unwrap().is_zero());
    }
}
