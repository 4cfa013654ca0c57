//! Two-chart locally trivial bundles: coverings, transition functions,
//! the gluing isomorphisms `φ_ij`, bundle elements as chart pairs, the
//! coaction, the base embedding and bounded coinvariants.

mod calculus;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use calculus::{check_jbij, jm_ideal, JmIdeal};

use crate::dga::SkewTensor;
use crate::error::{Error, Result};
use crate::freealg::linalg::{kernel, Echelon, SparseVec};
use crate::freealg::{irreducible_words, Morphism, NCPoly, Presentation, Word};
use crate::hopf::HopfData;
use crate::report::Record;
use crate::scalars::Scalar;

/// Two charts `B_1`, `B_2`, their overlap `B_12` and the restrictions
/// `π¹₂: B_1 → B_12`, `π²₁: B_2 → B_12`, optionally with a base algebra
/// and its projections `π_i: B → B_i`.
#[derive(Clone, Debug)]
pub struct CoveringData {
    charts: [Arc<Presentation>; 2],
    overlap: Arc<Presentation>,
    proj: [Morphism; 2],
    base: Option<(Arc<Presentation>, [Morphism; 2])>,
}

fn require_well_defined(m: &Morphism) -> Result<()> {
    let rep = m.check()?;
    if let Some((rel, res)) = rep.failures.first() {
        return Err(Error::Validation(format!("{}: relation {rel} maps to {res}", m.name())));
    }
    if let Some(s) = rep.degree_failures.first() {
        return Err(Error::Validation(format!("{}: image of `{s}` has the wrong degree", m.name())));
    }
    Ok(())
}

impl CoveringData {
    pub fn new(charts: [Arc<Presentation>; 2], overlap: Arc<Presentation>, proj: [Morphism; 2]) -> Result<CoveringData> {
        for (i, m) in proj.iter().enumerate() {
            if m.source().name() != charts[i].name() || m.target().name() != overlap.name() {
                return Err(Error::Validation(format!(
                    "{} must map {} to {}",
                    m.name(),
                    charts[i].name(),
                    overlap.name()
                )));
            }
            require_well_defined(m)?;
            for g in overlap.generators() {
                let hit = m.images().values().any(|img| *img == NCPoly::gen(g.sym));
                if !hit {
                    return Err(Error::Validation(format!("{} does not hit the generator `{}`", m.name(), g.sym)));
                }
            }
        }
        Ok(CoveringData {
            charts,
            overlap,
            proj,
            base: None,
        })
    }

    /// Attaches a base algebra with projections onto both charts.
    pub fn with_base(mut self, base: Arc<Presentation>, maps: [Morphism; 2]) -> Result<CoveringData> {
        for (i, m) in maps.iter().enumerate() {
            if m.source().name() != base.name() || m.target().name() != self.charts[i].name() {
                return Err(Error::Validation(format!("{} must map the base to chart {}", m.name(), i + 1)));
            }
            require_well_defined(m)?;
        }
        self.base = Some((base, maps));
        Ok(self)
    }

    pub fn charts(&self) -> &[Arc<Presentation>; 2] {
        &self.charts
    }

    pub fn overlap(&self) -> &Arc<Presentation> {
        &self.overlap
    }

    pub fn projections(&self) -> &[Morphism; 2] {
        &self.proj
    }

    pub fn base(&self) -> Option<&(Arc<Presentation>, [Morphism; 2])> {
        self.base.as_ref()
    }
}

/// Transition functions `τ_12`, `τ_21: H → B_12`.
#[derive(Clone, Debug)]
pub struct TransitionData {
    hopf: Arc<HopfData>,
    tau: [Morphism; 2],
}

impl TransitionData {
    /// Both maps must be well-defined algebra maps into the same overlap.
    pub fn new(hopf: Arc<HopfData>, tau12: Morphism, tau21: Morphism) -> Result<TransitionData> {
        for m in [&tau12, &tau21] {
            if m.source().name() != hopf.presentation().name() {
                return Err(Error::Validation(format!("{} is not defined on {}", m.name(), hopf.presentation().name())));
            }
            require_well_defined(m)?;
        }
        if tau12.target().name() != tau21.target().name() {
            return Err(Error::Validation("transition functions land in different overlaps".into()));
        }
        Ok(TransitionData {
            hopf,
            tau: [tau12, tau21],
        })
    }

    /// `τ⁽ⁿ⁾_12(α) = αⁿ`, `τ⁽ⁿ⁾_21(α) = α*ⁿ` into a circle algebra whose
    /// generators carry the Hopf generator names.
    pub fn u1_winding(hopf: Arc<HopfData>, overlap: Arc<Presentation>, n: u32) -> Result<TransitionData> {
        let h = hopf.presentation().clone();
        let a = overlap.g("alpha");
        let s = overlap.g("alphas");
        let pw = |e: &NCPoly| overlap.pow(e, n);
        let m12 = BTreeMap::from([(h.sym("alpha")?, pw(&a)), (h.sym("alphas")?, pw(&s))]);
        let m21 = BTreeMap::from([(h.sym("alpha")?, pw(&s)), (h.sym("alphas")?, pw(&a))]);
        let t12 = Morphism::new(&format!("τ{n}_12"), h.clone(), overlap.clone(), m12)?;
        let t21 = Morphism::new(&format!("τ{n}_21"), h, overlap, m21)?;
        TransitionData::new(hopf, t12, t21)
    }

    pub fn hopf(&self) -> &Arc<HopfData> {
        &self.hopf
    }

    pub fn tau12(&self) -> &Morphism {
        &self.tau[0]
    }

    pub fn tau21(&self) -> &Morphism {
        &self.tau[1]
    }

    /// `τ_ij` with `(i, j) = (1, 2)` for `ij = 0` and `(2, 1)` otherwise.
    pub fn tau(&self, ij: usize) -> &Morphism {
        &self.tau[ij]
    }

    pub fn overlap(&self) -> &Arc<Presentation> {
        self.tau[0].target()
    }

    /// Irreducible words of `H` up to `len`.
    pub fn samples(&self, len: usize) -> Vec<NCPoly> {
        irreducible_words(self.hopf.presentation(), None, len)
            .into_iter()
            .map(NCPoly::word)
            .collect()
    }

    /// `Σ τ_a(h₁) τ_b(h₂)`.
    pub fn convolution(&self, a: usize, b: usize, h: &NCPoly) -> Result<NCPoly> {
        let b12 = self.overlap();
        let mut out = NCPoly::zero();
        for t in self.hopf.coproduct_terms(h, 2)? {
            let prod = self.tau[a].apply(&t.leg(0))?.mul_raw(&self.tau[b].apply(&t.leg(1))?);
            out.add_scaled(&prod, &t.coeff);
        }
        b12.normal_form(&out)
    }

    /// The conditions on transition functions on words of `H` up to
    /// `sample_len`: convolution inverse, antipode relation and centrality.
    /// The three-chart cocycle is reported as skipped.
    pub fn check(&self, sample_len: usize) -> Result<Vec<Record>> {
        let b12 = self.overlap().clone();
        let hs = self.samples(sample_len);
        let mut recs = Vec::new();

        let mut res = None;
        for h in &hs {
            let eps = NCPoly::scalar(self.hopf.counit(h)?);
            for (a, b) in [(0, 1), (1, 0)] {
                let r = &self.convolution(a, b, h)? - &eps;
                if !r.is_zero() && res.is_none() {
                    res = Some(format!("h = {h}, order {}{}: {r}", a + 1, b + 1));
                }
            }
        }
        recs.push(Record::check(
            "transition: convolution inverse",
            "Σ τ_12(h₁)τ_21(h₂) = ε(h)1 = Σ τ_21(h₁)τ_12(h₂)",
            res,
        ));

        let mut res = None;
        for h in &hs {
            let s = self.hopf.antipode(h)?;
            for (a, b) in [(1, 0), (0, 1)] {
                let r = &self.tau[a].apply(&s)? - &self.tau[b].apply(h)?;
                if !r.is_zero() && res.is_none() {
                    res = Some(format!("h = {h}: {r}"));
                }
            }
        }
        recs.push(Record::check(
            "transition: antipode relation",
            "τ_21(S(h)) = τ_12(h), τ_12(S(h)) = τ_21(h)",
            res,
        ));

        let mut res = None;
        for h in &hs {
            for m in &self.tau {
                let t = m.apply(h)?;
                for g in b12.generators() {
                    let a = NCPoly::gen(g.sym);
                    let r = &b12.normal_form(&t.mul_raw(&a))? - &b12.normal_form(&a.mul_raw(&t))?;
                    if !r.is_zero() && res.is_none() {
                        res = Some(format!("{}({h}) against {a}: {r}", m.name()));
                    }
                }
            }
        }
        recs.push(Record::check("transition: centrality", "τ_ij(h) a = a τ_ij(h)", res));

        recs.push(Record::skipped(
            "transition: triple cocycle",
            "Σ τ_ij(h₁)τ_jk(h₂) = τ_ik(h) on triple overlaps",
            "two charts: there are no triple overlaps",
        ));
        for r in &mut recs {
            r.notes.push(format!("sampled on words of length ≤ {sample_len}"));
        }
        Ok(recs)
    }
}

/// A bundle element as its pair of chart components `f_i ∈ B_i ⊗ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleElement {
    pub parts: [NCPoly; 2],
}

/// Outcome of the gluing condition; `witness` is the nonzero difference
/// of the two sides on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub holds: bool,
    pub witness: NCPoly,
}

/// Bounded coinvariants at one length.
#[derive(Clone, Debug)]
pub struct Coinvariants {
    pub length: usize,
    pub basis: Vec<BundleElement>,
    /// Rank of the span of `ι` applied to base words of the same length.
    pub iota_rank: usize,
    /// Whether every `ι`-image lies in the coinvariant span.
    pub iota_contained: bool,
}

impl Coinvariants {
    pub fn agrees(&self) -> bool {
        self.iota_contained && self.iota_rank == self.basis.len()
    }
}

/// The glued bundle: chart algebras `B_i ⊗ H`, the overlap `B_12 ⊗ H`,
/// the restrictions `π ⊗ id` and the gluing maps, with their three-leg
/// variants `B ⊗ H ⊗ H` for the coaction.
#[derive(Clone, Debug)]
pub struct BundleData {
    covering: CoveringData,
    transition: TransitionData,
    chart: [SkewTensor; 2],
    chart3: [SkewTensor; 2],
    overlap: SkewTensor,
    overlap3: SkewTensor,
    restrict: [Morphism; 2],
    restrict3: [Morphism; 2],
    phi: [Morphism; 2],
    phi3: [Morphism; 2],
}

/// `φ(a ⊗ h ⊗ ...) = Σ a τ(h₁) ⊗ h₂ ⊗ ...` on a tensor whose legs are
/// `B_12, H, H, ...`.
fn gluing_map(name: &str, t: &SkewTensor, hopf: &HopfData, tau: &Morphism) -> Result<Morphism> {
    let mut images = BTreeMap::new();
    let ones = vec![NCPoly::one(); t.legs()];
    for (leg, f) in t.factors().iter().enumerate() {
        for g in f.generators() {
            let s = t.sym(leg, g.sym);
            let img = if leg == 1 {
                let mut out = NCPoly::zero();
                for term in hopf.coproduct_terms(&NCPoly::gen(g.sym), 2)? {
                    let mut legs = ones.clone();
                    legs[0] = tau.apply(&term.leg(0))?;
                    legs[1] = term.leg(1);
                    out.add_scaled(&t.assemble(&legs)?, &term.coeff);
                }
                out
            } else {
                t.embed(leg, &NCPoly::gen(g.sym))
            };
            images.insert(s, img);
        }
    }
    let m = Morphism::new(name, t.presentation().clone(), t.presentation().clone(), images)?;
    require_well_defined(&m)?;
    Ok(m)
}

fn identity_on(h: &Arc<Presentation>) -> Morphism {
    Morphism::identity(h.clone())
}

impl BundleData {
    pub fn new(covering: CoveringData, transition: TransitionData) -> Result<BundleData> {
        if transition.overlap().name() != covering.overlap().name() {
            return Err(Error::Validation("transition functions do not land in the covering overlap".into()));
        }
        let hopf = transition.hopf().clone();
        let h = hopf.presentation().clone();
        let b12 = covering.overlap().clone();
        let mk2 = |b: &Arc<Presentation>| SkewTensor::new(&format!("{}⊗{}", b.name(), h.name()), &[b.clone(), h.clone()]);
        let mk3 = |b: &Arc<Presentation>| {
            SkewTensor::new(&format!("{}⊗{}⊗{}", b.name(), h.name(), h.name()), &[b.clone(), h.clone(), h.clone()])
        };
        let chart = [mk2(&covering.charts[0])?, mk2(&covering.charts[1])?];
        let chart3 = [mk3(&covering.charts[0])?, mk3(&covering.charts[1])?];
        let overlap = mk2(&b12)?;
        let overlap3 = mk3(&b12)?;
        let id = identity_on(&h);
        let restrict = [
            chart[0].tensor_map("π¹₂⊗id", &overlap, &[&covering.proj[0], &id])?,
            chart[1].tensor_map("π²₁⊗id", &overlap, &[&covering.proj[1], &id])?,
        ];
        let restrict3 = [
            chart3[0].tensor_map("π¹₂⊗id⊗id", &overlap3, &[&covering.proj[0], &id, &id])?,
            chart3[1].tensor_map("π²₁⊗id⊗id", &overlap3, &[&covering.proj[1], &id, &id])?,
        ];
        // φ_12 uses τ_21 and φ_21 uses τ_12.
        let phi = [
            gluing_map("φ_12", &overlap, &hopf, transition.tau21())?,
            gluing_map("φ_21", &overlap, &hopf, transition.tau12())?,
        ];
        let phi3 = [
            gluing_map("φ_12⊗id", &overlap3, &hopf, transition.tau21())?,
            gluing_map("φ_21⊗id", &overlap3, &hopf, transition.tau12())?,
        ];
        Ok(BundleData {
            covering,
            transition,
            chart,
            chart3,
            overlap,
            overlap3,
            restrict,
            restrict3,
            phi,
            phi3,
        })
    }

    pub fn covering(&self) -> &CoveringData {
        &self.covering
    }

    pub fn transition(&self) -> &TransitionData {
        &self.transition
    }

    pub fn hopf(&self) -> &Arc<HopfData> {
        self.transition.hopf()
    }

    /// `B_i ⊗ H` for chart index 0 or 1.
    pub fn chart(&self, i: usize) -> &SkewTensor {
        &self.chart[i]
    }

    pub fn chart3(&self, i: usize) -> &SkewTensor {
        &self.chart3[i]
    }

    pub fn overlap(&self) -> &SkewTensor {
        &self.overlap
    }

    pub fn overlap3(&self) -> &SkewTensor {
        &self.overlap3
    }

    pub fn restriction(&self, i: usize) -> &Morphism {
        &self.restrict[i]
    }

    /// `φ_12` for index 0, `φ_21` for index 1.
    pub fn phi(&self, ij: usize) -> &Morphism {
        &self.phi[ij]
    }

    /// A pair normal-formed in the chart algebras.
    pub fn element(&self, f1: &NCPoly, f2: &NCPoly) -> Result<BundleElement> {
        Ok(BundleElement {
            parts: [
                self.chart[0].presentation().normal_form(f1)?,
                self.chart[1].presentation().normal_form(f2)?,
            ],
        })
    }

    /// `(b_1 ⊗ h_1, b_2 ⊗ h_2)` from chart and Hopf components.
    pub fn element_from_legs(&self, legs: [(&NCPoly, &NCPoly); 2]) -> Result<BundleElement> {
        let f1 = self.chart[0].assemble(&[legs[0].0.clone(), legs[0].1.clone()])?;
        let f2 = self.chart[1].assemble(&[legs[1].0.clone(), legs[1].1.clone()])?;
        self.element(&f1, &f2)
    }

    fn glue(&self, parts: &[NCPoly; 2], three: bool) -> Result<Membership> {
        let (restrict, phi) = if three {
            (&self.restrict3, &self.phi3)
        } else {
            (&self.restrict, &self.phi)
        };
        let lhs = restrict[0].apply(&parts[0])?;
        let rhs = phi[0].apply(&restrict[1].apply(&parts[1])?)?;
        let witness = &lhs - &rhs;
        Ok(Membership {
            holds: witness.is_zero(),
            witness,
        })
    }

    /// `(π¹₂ ⊗ id)(f_1) = φ_12((π²₁ ⊗ id)(f_2))`.
    pub fn is_member(&self, f: &BundleElement) -> Result<Membership> {
        self.glue(&f.parts, false)
    }

    /// The gluing condition for chart pairs in `B_i ⊗ H ⊗ H`.
    pub fn is_member3(&self, parts: &[NCPoly; 2]) -> Result<Membership> {
        self.glue(parts, true)
    }

    pub fn mul(&self, f: &BundleElement, g: &BundleElement) -> Result<BundleElement> {
        let p = |i: usize| self.chart[i].presentation().normal_form(&f.parts[i].mul_raw(&g.parts[i]));
        Ok(BundleElement { parts: [p(0)?, p(1)?] })
    }

    fn chart_coaction(&self, t2: &SkewTensor, t3: &SkewTensor, e: &NCPoly) -> Result<NCPoly> {
        let hopf = self.hopf();
        let mut out = NCPoly::zero();
        for (legs, c) in t2.split(e)? {
            for d in hopf.coproduct_terms(&NCPoly::word(legs[1].clone()), 2)? {
                let a = t3.assemble(&[NCPoly::word(legs[0].clone()), d.leg(0), d.leg(1)])?;
                out.add_scaled(&a, &(&c * &d.coeff));
            }
        }
        t3.presentation().normal_form(&out)
    }

    /// `Δ_P(f) = (id ⊗ Δ)(f_i)` componentwise, in `B_i ⊗ H ⊗ H`.
    pub fn coaction(&self, f: &BundleElement) -> Result<[NCPoly; 2]> {
        Ok([
            self.chart_coaction(&self.chart[0], &self.chart3[0], &f.parts[0])?,
            self.chart_coaction(&self.chart[1], &self.chart3[1], &f.parts[1])?,
        ])
    }

    /// `f ⊗ h` componentwise, in `B_i ⊗ H ⊗ H`.
    pub fn tensor_h(&self, f: &BundleElement, h: &NCPoly) -> Result<[NCPoly; 2]> {
        let emb = |i: usize| -> Result<NCPoly> {
            let t3 = &self.chart3[i];
            let mut out = NCPoly::zero();
            for (legs, c) in self.chart[i].split(&f.parts[i])? {
                let a = t3.assemble(&[NCPoly::word(legs[0].clone()), NCPoly::word(legs[1].clone()), h.clone()])?;
                out.add_scaled(&a, &c);
            }
            t3.presentation().normal_form(&out)
        };
        Ok([emb(0)?, emb(1)?])
    }

    /// `(id ⊗ ε)` on both components.
    pub fn counit_leg(&self, parts: &[NCPoly; 2]) -> Result<BundleElement> {
        let hopf = self.hopf();
        let mut out = [NCPoly::zero(), NCPoly::zero()];
        for i in 0..2 {
            for (legs, c) in self.chart3[i].split(&parts[i])? {
                let e = hopf.counit_word(&legs[2])?;
                let a = self.chart[i].assemble(&[NCPoly::word(legs[0].clone()), NCPoly::word(legs[1].clone())])?;
                out[i].add_scaled(&a, &(&c * &e));
            }
        }
        self.element(&out[0], &out[1])
    }

    /// `ι(a) = (π_1(a) ⊗ 1, π_2(a) ⊗ 1)`.
    pub fn iota(&self, a: &NCPoly) -> Result<BundleElement> {
        let (_, maps) = self
            .covering
            .base()
            .ok_or_else(|| Error::Unsupported("the covering has no base algebra".into()))?;
        self.element(&self.chart[0].embed(0, &maps[0].apply(a)?), &self.chart[1].embed(0, &maps[1].apply(a)?))
    }

    /// `φ_12 ∘ φ_21 = id = φ_21 ∘ φ_12` on `B_12 ⊗ H` words up to `len`.
    pub fn check_phi_inverse(&self, len: usize) -> Result<Record> {
        let words = irreducible_words(self.overlap.presentation(), None, len);
        let mut res = None;
        for w in &words {
            let e = NCPoly::word(w.clone());
            for (a, b) in [(0, 1), (1, 0)] {
                let back = self.phi[a].apply(&self.phi[b].apply(&e)?)?;
                let r = &back - &e;
                if !r.is_zero() && res.is_none() {
                    res = Some(format!("{} ∘ {} on {e}: {r}", self.phi[a].name(), self.phi[b].name()));
                }
            }
        }
        Ok(Record::check("gluing maps are inverse", "φ_12 ∘ φ_21 = id = φ_21 ∘ φ_12", res)
            .note(format!("sampled on {} words of length ≤ {len}", words.len())))
    }

    fn require_group_like_basis(&self) -> Result<()> {
        let hopf = self.hopf();
        for g in hopf.presentation().generators() {
            let t = hopf.coproduct_terms(&NCPoly::gen(g.sym), 2)?;
            let ok = t.len() == 1 && t[0].coeff.is_one() && t[0].legs.iter().all(|l| *l == vec![g.sym]);
            if !ok {
                return Err(Error::Unsupported(format!(
                    "coinvariants need group-like Hopf generators; `{}` is not",
                    g.sym
                )));
            }
        }
        Ok(())
    }

    fn pair_vector(&self, f: &BundleElement) -> SparseVec<(usize, Word)> {
        let mut v = SparseVec::new();
        for (i, p) in f.parts.iter().enumerate() {
            for (w, c) in p.terms() {
                v.insert((i, w.clone()), c.clone());
            }
        }
        v
    }

    /// Coinvariant bundle elements whose chart components are words of
    /// length at most `len`, compared with the `ι`-image of base words of
    /// weighted length at most `len`. With group-like Hopf generators every
    /// Hopf word is homogeneous, so `Δ_P f = f ⊗ 1` forces the Hopf legs to
    /// be `1` and the coinvariants are the compatible pairs in `B_i ⊗ 1`.
    pub fn coinvariants_bounded(&self, len: usize) -> Result<Coinvariants> {
        self.require_group_like_basis()?;
        let mut cols = Vec::new();
        let mut labels = Vec::new();
        for i in 0..2 {
            for w in irreducible_words(&self.covering.charts[i], Some(0), len) {
                let e = self.chart[i].embed(0, &NCPoly::word(w.clone()));
                let img = if i == 0 {
                    self.restrict[0].apply(&e)?
                } else {
                    self.phi[0].apply(&self.restrict[1].apply(&e)?)?.scale(&Scalar::from_int(-1))
                };
                cols.push(img.into_terms());
                labels.push((i, e));
            }
        }
        let mut basis = Vec::new();
        for k in kernel(&cols) {
            let mut parts = [NCPoly::zero(), NCPoly::zero()];
            for (j, c) in &k {
                let (i, e) = &labels[*j];
                parts[*i].add_scaled(e, c);
            }
            basis.push(BundleElement { parts });
        }
        let mut span = Echelon::new();
        for b in &basis {
            span.insert(self.pair_vector(b));
        }
        let (iota_rank, iota_contained) = match self.covering.base() {
            None => (0, false),
            Some((base, _)) => {
                let mut iota_span = Echelon::new();
                let mut contained = true;
                for w in irreducible_words(base, None, len) {
                    let v = self.pair_vector(&self.iota(&NCPoly::word(w))?);
                    contained &= span.contains(&v);
                    iota_span.insert(v);
                }
                (iota_span.rank(), contained)
            }
        };
        Ok(Coinvariants {
            length: len,
            basis,
            iota_rank,
            iota_contained,
        })
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::freealg::{parse_element, Builder};
    use crate::hopf::u1_algebra;

    pub(crate) fn disc(name: &str, x: &str, param: &str) -> Arc<Presentation> {
        let xs = format!("{x}s");
        Arc::new(
            Builder::new(name)
                .gens(&[x, &xs])
                .relation(&format!("{xs}*{x} - {param}*{x}*{xs} - (1-{param})"))
                .build()
                .unwrap(),
        )
    }

    pub(crate) fn sphere_bundle(n: u32) -> BundleData {
        let d1 = disc("D_p", "x", "p");
        let d2 = disc("D_q", "y", "q");
        let c = Arc::new(u1_algebra("S1"));
        let pr1 = Morphism::from_strs("π¹₂", d1.clone(), c.clone(), &[("x", "alpha"), ("xs", "alphas")]).unwrap();
        let pr2 = Morphism::from_strs("π²₁", d2.clone(), c.clone(), &[("y", "alpha"), ("ys", "alphas")]).unwrap();
        let base = Arc::new(
            Builder::new("S2")
                .gens(&["f1", "fm1", "f0"])
                .relator("fm1*f1 - q*f1*fm1 - (p-q)*f0 - (1-p)")
                .relator("f0*f1 - p*f1*f0 - (1-p)*f1")
                .relator("fm1*f0 - p*f0*fm1 - (1-p)*fm1")
                .relator("(1-f0)*(f1*fm1 - f0)")
                .weight("f0", 2)
                .build_unchecked()
                .unwrap(),
        );
        let b1 = Morphism::from_strs("π_1", base.clone(), d1.clone(), &[("f1", "x"), ("fm1", "xs"), ("f0", "x*xs")]).unwrap();
        let b2 = Morphism::from_strs("π_2", base.clone(), d2.clone(), &[("f1", "y"), ("fm1", "ys"), ("f0", "1")]).unwrap();
        let cov = CoveringData::new([d1, d2], c.clone(), [pr1, pr2])
            .unwrap()
            .with_base(base, [b1, b2])
            .unwrap();
        let hopf = Arc::new(HopfData::u1());
        let t = TransitionData::u1_winding(hopf, c, n).unwrap();
        BundleData::new(cov, t).unwrap()
    }

    fn el(b: &BundleData, f1: &str, f2: &str) -> BundleElement {
        b.element(
            &parse_element(f1, b.chart(0).presentation()).unwrap(),
            &parse_element(f2, b.chart(1).presentation()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn transition_conditions_hold_for_windings() {
        for n in 1..=3 {
            let b = sphere_bundle(n);
            for r in b.transition().check(4).unwrap() {
                assert_ne!(r.status, crate::report::Status::Fail, "{r:?}");
            }
        }
    }

    #[test]
    fn equal_transitions_fail_convolution() {
        let b = sphere_bundle(1);
        let t = b.transition();
        let bad = TransitionData::new(t.hopf().clone(), t.tau12().clone(), t.tau12().clone()).unwrap();
        let recs = bad.check(2).unwrap();
        let conv = recs.iter().find(|r| r.name.contains("convolution")).unwrap();
        assert_eq!(conv.status, crate::report::Status::Fail);
        assert!(conv.residue.as_ref().unwrap().contains("alpha"));
    }

    #[test]
    fn gluing_map_values() {
        let b = sphere_bundle(1);
        let o = b.overlap().presentation();
        let one_alpha = parse_element("alpha.2", o).unwrap();
        assert_eq!(b.phi(0).ap(&one_alpha), parse_element("alphas.1*alpha.2", o).unwrap());
        let a1 = parse_element("alpha.1", o).unwrap();
        assert_eq!(b.phi(0).ap(&a1), a1);
        assert_eq!(b.phi(0).ap(&b.phi(1).ap(&one_alpha)), one_alpha);
        assert_eq!(b.check_phi_inverse(4).unwrap().status, crate::report::Status::Pass);
    }

    #[test]
    fn membership_and_witness() {
        let b = sphere_bundle(1);
        for (f1, f2) in [("alpha", "y*alpha"), ("alphas", "ys*alphas"), ("x*alphas", "alphas"), ("xs*alpha", "alpha"), ("1", "1")] {
            let m = b.is_member(&el(&b, f1, f2)).unwrap();
            assert!(m.holds, "({f1}, {f2}): {}", m.witness);
        }
        let m = b.is_member(&el(&b, "x", "1")).unwrap();
        assert!(!m.holds);
        assert_eq!(m.witness, parse_element("alpha.1 - 1", b.overlap().presentation()).unwrap());
    }

    #[test]
    fn products_of_members_are_members() {
        let b = sphere_bundle(1);
        let a = el(&b, "alpha", "y*alpha");
        let bs = el(&b, "xs*alpha", "alpha");
        let prod = b.mul(&a, &bs).unwrap();
        assert!(b.is_member(&prod).unwrap().holds);
    }

    #[test]
    fn coaction_of_generators() {
        let b = sphere_bundle(1);
        let h = b.hopf().presentation();
        let a = el(&b, "alpha", "y*alpha");
        assert_eq!(b.coaction(&a).unwrap(), b.tensor_h(&a, &h.g("alpha")).unwrap());
        let bt = el(&b, "x*alphas", "alphas");
        let co = b.coaction(&bt).unwrap();
        assert_eq!(co, b.tensor_h(&bt, &h.g("alphas")).unwrap());
        assert!(b.is_member3(&co).unwrap().holds);
        assert_eq!(b.counit_leg(&co).unwrap(), bt);
        let zero = el(&b, "0", "0");
        assert!(b.coaction(&zero).unwrap().iter().all(NCPoly::is_zero));
    }

    #[test]
    fn iota_values() {
        let b = sphere_bundle(1);
        let base = b.covering().base().unwrap().0.clone();
        let f1 = b.iota(&base.g("f1")).unwrap();
        assert_eq!(f1, el(&b, "x", "y"));
        let ba = b.mul(&el(&b, "x*alphas", "alphas"), &el(&b, "alpha", "y*alpha")).unwrap();
        assert_eq!(f1, ba);
        assert_eq!(b.iota(&base.g("f0")).unwrap(), el(&b, "x*xs", "1"));
        assert_eq!(b.iota(&NCPoly::one()).unwrap(), el(&b, "1", "1"));
        let co = b.coaction(&f1).unwrap();
        assert_eq!(co, b.tensor_h(&f1, &NCPoly::one()).unwrap());
    }

    #[test]
    fn coinvariants_match_base_image() {
        let b = sphere_bundle(1);
        for len in 0..=3 {
            let c = b.coinvariants_bounded(len).unwrap();
            let l = len;
            assert_eq!(c.basis.len(), l * l + l + 1, "length {len}");
            assert!(c.agrees(), "length {len}: rank {} vs {}", c.iota_rank, c.basis.len());
            for e in &c.basis {
                assert_eq!(b.coaction(e).unwrap(), b.tensor_h(e, &NCPoly::one()).unwrap());
            }
        }
        assert_eq!(b.coinvariants_bounded(0).unwrap().basis[0], el(&b, "1", "1"));
    }
}
