//! Presentations by generators and oriented rewrite rules, normal forms and
//! relation orientation.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::poly::{word_string, NCPoly, Word};
use super::symbol::Sym;
use crate::error::{Error, Result};
use crate::scalars::Scalar;

pub const DEFAULT_MAX_STEPS: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub sym: Sym,
    pub degree: u32,
    /// For a differential generator, the generator it differentiates.
    pub base: Option<Sym>,
    /// Weight in the degree part of the monomial order.
    pub weight: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

impl Rule {
    /// The relation `lhs - rhs` the rule encodes.
    pub fn relation(&self) -> NCPoly {
        let mut r = NCPoly::word(self.lhs.clone());
        r.add_scaled(&self.rhs, &Scalar::from_int(-1));
        r
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", word_string(&self.lhs), self.rhs)
    }
}

/// An algebra (or graded calculus) given by generators, a monomial order and
/// rewrite rules. Relator-only presentations carry relations that are not
/// rewritten; they are only used as sources of morphisms.
#[derive(Clone)]
pub struct Presentation {
    name: String,
    gens: Vec<Generator>,
    rank: HashMap<Sym, u32>,
    rules: Vec<Rule>,
    by_first: HashMap<Sym, Vec<usize>>,
    relators: Vec<NCPoly>,
    diff: Option<BTreeMap<Sym, NCPoly>>,
    notes: Vec<String>,
    max_steps: usize,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("name", &self.name)
            .field("generators", &self.gens.iter().map(|g| g.sym).collect::<Vec<_>>())
            .field("rules", &self.rules.len())
            .finish()
    }
}

impl Presentation {
    /// Free algebra on `gens`, listed in ascending precedence.
    pub fn free(name: &str, gens: Vec<Generator>) -> Result<Presentation> {
        let mut rank = HashMap::new();
        for (i, g) in gens.iter().enumerate() {
            if rank.insert(g.sym, i as u32).is_some() {
                return Err(Error::Presentation(format!("duplicate generator `{}`", g.sym)));
            }
            if g.weight == 0 {
                return Err(Error::Presentation(format!("generator `{}` has weight 0", g.sym)));
            }
        }
        for g in &gens {
            if let Some(b) = g.base {
                let bg = rank
                    .get(&b)
                    .map(|&i| &gens[i as usize])
                    .ok_or_else(|| Error::Presentation(format!("unknown base `{b}` of `{}`", g.sym)))?;
                if g.degree != bg.degree + 1 {
                    return Err(Error::Presentation(format!(
                        "differential generator `{}` must have degree {}",
                        g.sym,
                        bg.degree + 1
                    )));
                }
            }
        }
        Ok(Presentation {
            name: name.to_string(),
            gens,
            rank,
            rules: Vec::new(),
            by_first: HashMap::new(),
            relators: Vec::new(),
            diff: None,
            notes: Vec::new(),
            max_steps: DEFAULT_MAX_STEPS,
        })
    }

    /// The ground field, as a presentation without generators.
    pub fn ground() -> Presentation {
        Presentation::free("k", Vec::new()).expect("empty presentation")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn generator(&self, s: Sym) -> Option<&Generator> {
        self.rank.get(&s).map(|&i| &self.gens[i as usize])
    }

    pub fn find(&self, name: &str) -> Option<Sym> {
        let s = Sym::new(name);
        self.rank.contains_key(&s).then_some(s)
    }

    /// Looks up a generator by name, failing with `UnknownGenerator`.
    pub fn sym(&self, name: &str) -> Result<Sym> {
        self.find(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn g(&self, name: &str) -> NCPoly {
        NCPoly::gen(self.sym(name).unwrap_or_else(|e| panic!("{e}")))
    }

    pub fn has(&self, s: Sym) -> bool {
        self.rank.contains_key(&s)
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn relators(&self) -> &[NCPoly] {
        &self.relators
    }

    pub fn is_relator_only(&self) -> bool {
        !self.relators.is_empty()
    }

    /// All defining relations: rules as `lhs - rhs` and raw relators.
    pub fn relations(&self) -> Vec<NCPoly> {
        let mut v: Vec<NCPoly> = self.rules.iter().map(Rule::relation).collect();
        v.extend(self.relators.iter().cloned());
        v
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn add_note(&mut self, note: String) {
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    pub fn max_steps(&self) -> usize {
        self.max_steps
    }

    pub fn set_max_steps(&mut self, n: usize) {
        self.max_steps = n;
    }

    pub fn differential(&self) -> Option<&BTreeMap<Sym, NCPoly>> {
        self.diff.as_ref()
    }

    pub fn set_differential(&mut self, d: BTreeMap<Sym, NCPoly>) -> Result<()> {
        for (s, img) in &d {
            let g = self
                .generator(*s)
                .ok_or_else(|| Error::UnknownGenerator(s.name().to_string()))?;
            self.check_symbols(img)?;
            for w in img.words() {
                if self.word_degree(w) != g.degree + 1 {
                    return Err(Error::Presentation(format!(
                        "d({s}) = {img} does not raise the degree by one"
                    )));
                }
            }
        }
        self.diff = Some(d);
        Ok(())
    }

    /// Assigns `d(b) = db` for every differential generator `db` with base `b`.
    pub fn set_standard_differential(&mut self) {
        let d = self
            .gens
            .iter()
            .filter_map(|g| g.base.map(|b| (b, NCPoly::gen(g.sym))))
            .collect();
        self.diff = Some(d);
    }

    pub fn set_relators(&mut self, rels: Vec<NCPoly>) -> Result<()> {
        for r in &rels {
            self.check_symbols(r)?;
        }
        self.relators = rels;
        Ok(())
    }

    pub fn degree(&self, s: Sym) -> u32 {
        self.generator(s).map_or(0, |g| g.degree)
    }

    pub fn word_degree(&self, w: &[Sym]) -> u32 {
        w.iter().map(|&s| self.degree(s)).sum()
    }

    pub fn weight(&self, w: &[Sym]) -> u32 {
        w.iter()
            .map(|s| self.generator(*s).map_or(1, |g| g.weight))
            .sum()
    }

    /// Degrees occurring in `e`.
    pub fn degrees(&self, e: &NCPoly) -> Vec<u32> {
        let mut v: Vec<u32> = e.words().map(|w| self.word_degree(w)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn homogeneous_part(&self, e: &NCPoly, degree: u32) -> NCPoly {
        NCPoly::from_terms(
            e.terms()
                .filter(|(w, _)| self.word_degree(w) == degree)
                .map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    pub fn check_symbols(&self, e: &NCPoly) -> Result<()> {
        for s in e.symbols() {
            if !self.has(s) {
                return Err(Error::UnknownGenerator(s.name().to_string()));
            }
        }
        Ok(())
    }

    /// Order key: weighted length, then precedence ranks.
    pub fn key(&self, w: &[Sym]) -> Vec<u32> {
        let mut k = Vec::with_capacity(w.len() + 1);
        k.push(self.weight(w));
        k.extend(w.iter().map(|s| self.rank[s]));
        k
    }

    fn decode(&self, k: &[u32]) -> Word {
        k[1..].iter().map(|&r| self.gens[r as usize].sym).collect()
    }

    pub fn cmp_words(&self, a: &[Sym], b: &[Sym]) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    /// Largest word of `e` in the monomial order.
    pub fn leading(&self, e: &NCPoly) -> Option<(Word, Scalar)> {
        e.terms()
            .max_by(|a, b| self.cmp_words(a.0, b.0))
            .map(|(w, c)| (w.clone(), c.clone()))
    }

    /// Terms in descending monomial order.
    pub fn ordered_terms<'a>(&self, e: &'a NCPoly) -> Vec<(&'a Word, &'a Scalar)> {
        let mut t: Vec<_> = e.terms().collect();
        t.sort_by_cached_key(|(w, _)| std::cmp::Reverse(self.key(w)));
        t
    }

    /// Prints `e` with terms in descending monomial order.
    pub fn display(&self, e: &NCPoly) -> String {
        let mut s = String::new();
        NCPoly::write_terms(&mut s, &self.ordered_terms(e)).expect("write to string");
        s
    }

    fn reindex(&mut self) {
        self.by_first.clear();
        for (i, r) in self.rules.iter().enumerate() {
            self.by_first.entry(r.lhs[0]).or_default().push(i);
        }
    }

    /// Leftmost occurrence of a rule left-hand side in `w`.
    pub fn find_redex(&self, w: &[Sym]) -> Option<(usize, usize)> {
        for i in 0..w.len() {
            if let Some(cands) = self.by_first.get(&w[i]) {
                for &ri in cands {
                    if w[i..].starts_with(&self.rules[ri].lhs) {
                        return Some((i, ri));
                    }
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &[Sym]) -> bool {
        self.find_redex(w).is_none()
    }

    /// Normal form under the rules, processing words from the largest down.
    pub fn normal_form(&self, e: &NCPoly) -> Result<NCPoly> {
        if self.rules.is_empty() {
            self.check_symbols(e)?;
            return Ok(e.clone());
        }
        let mut work: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
        for (w, c) in e.terms() {
            for s in w {
                if !self.has(*s) {
                    return Err(Error::UnknownGenerator(s.name().to_string()));
                }
            }
            push(&mut work, self.key(w), c.clone());
        }
        let mut out = NCPoly::zero();
        let mut steps = 0usize;
        while let Some((k, c)) = work.pop_last() {
            let w = self.decode(&k);
            match self.find_redex(&w) {
                None => out.add_term(w, c),
                Some((pos, ri)) => {
                    steps += 1;
                    if steps > self.max_steps {
                        return Err(Error::StepBound {
                            steps: self.max_steps,
                            word: word_string(&w),
                        });
                    }
                    let rule = &self.rules[ri];
                    let (pre, post) = (&w[..pos], &w[pos + rule.lhs.len()..]);
                    for (rw, rc) in rule.rhs.terms() {
                        let mut nw = Vec::with_capacity(pre.len() + rw.len() + post.len());
                        nw.extend_from_slice(pre);
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(post);
                        push(&mut work, self.key(&nw), &c * rc);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn nf(&self, e: &NCPoly) -> NCPoly {
        self.normal_form(e).unwrap_or_else(|err| panic!("{}: {err}", self.name))
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.nf(&a.mul_raw(b))
    }

    pub fn product(&self, factors: &[&NCPoly]) -> NCPoly {
        let mut acc = NCPoly::one();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn pow(&self, a: &NCPoly, k: u32) -> NCPoly {
        let mut acc = NCPoly::one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Orients a relation so its largest word becomes the left-hand side.
    pub fn orient(&self, rel: &NCPoly) -> Result<(Rule, Option<String>)> {
        let (lw, lc) = self.leading(rel).ok_or_else(|| Error::Orientation {
            relation: "0".into(),
            reason: "zero relation".into(),
        })?;
        if lw.is_empty() {
            return Err(Error::Orientation {
                relation: self.display(rel),
                reason: "nonzero scalar relation makes the algebra trivial".into(),
            });
        }
        let degs = self.degrees(rel);
        if degs.len() > 1 {
            return Err(Error::Orientation {
                relation: self.display(rel),
                reason: "relation is not homogeneous in form degree".into(),
            });
        }
        let inv = lc.inv().expect("leading coefficient is nonzero");
        let mut rhs = rel.scale(&-&inv);
        rhs.add_term(lw.clone(), Scalar::one());
        let note = (!lc.is_unit_monomial()).then(|| {
            format!(
                "relation `{}` divided by {} (assumed nonzero for generic parameters)",
                self.display(rel),
                lc
            )
        });
        Ok((Rule { lhs: lw, rhs }, note))
    }

    /// Adds rules from explicit left-hand sides without orientation, checking
    /// only that every right-hand word is smaller.
    pub fn add_rules(&mut self, rules: Vec<Rule>) -> Result<()> {
        for r in &rules {
            if r.lhs.is_empty() {
                return Err(Error::Presentation("empty left-hand side".into()));
            }
            self.check_symbols(&r.rhs)?;
            self.check_symbols(&NCPoly::word(r.lhs.clone()))?;
            for w in r.rhs.words() {
                if self.cmp_words(w, &r.lhs) != Ordering::Less {
                    return Err(Error::Orientation {
                        relation: r.to_string(),
                        reason: format!("right-hand word {} is not smaller", word_string(w)),
                    });
                }
            }
        }
        self.rules.extend(rules);
        self.reindex();
        Ok(())
    }

    /// Adds relations, orienting and interreducing until every rule is
    /// reduced with respect to the others.
    pub fn add_relations(&mut self, rels: &[NCPoly]) -> Result<()> {
        let mut queue: Vec<NCPoly> = rels.to_vec();
        for r in &queue {
            self.check_symbols(r)?;
        }
        queue.reverse();
        while let Some(rel) = queue.pop() {
            let r = self.normal_form(&rel)?;
            if r.is_zero() {
                continue;
            }
            let (rule, note) = self.orient(&r)?;
            if let Some(n) = note {
                self.add_note(n);
            }
            let mut kept = Vec::with_capacity(self.rules.len() + 1);
            for old in std::mem::take(&mut self.rules) {
                if contains(&old.lhs, &rule.lhs) {
                    queue.push(old.relation());
                } else {
                    kept.push(old);
                }
            }
            kept.push(rule);
            self.rules = kept;
            self.reindex();
        }
        self.reduce_right_sides()
    }

    fn reduce_right_sides(&mut self) -> Result<()> {
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..self.rules.len() {
                let rhs = self.normal_form(&self.rules[i].rhs)?;
                if rhs != self.rules[i].rhs {
                    self.rules[i].rhs = rhs;
                    changed = true;
                }
            }
        }
        let mut rules = std::mem::take(&mut self.rules);
        rules.sort_by_cached_key(|r| self.key(&r.lhs));
        self.rules = rules;
        self.reindex();
        Ok(())
    }
}

fn push(work: &mut BTreeMap<Vec<u32>, Scalar>, k: Vec<u32>, c: Scalar) {
    use std::collections::btree_map::Entry;
    match work.entry(k) {
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

/// Whether `needle` occurs as a contiguous subword of `hay`.
pub fn contains(hay: &[Sym], needle: &[Sym]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// Fluent construction of presentations from names and relation strings.
pub struct Builder {
    name: String,
    gens: Vec<Generator>,
    relations: Vec<String>,
    relators: Vec<String>,
    standard_d: bool,
    max_steps: usize,
    values: crate::scalars::Assignment,
}

impl Builder {
    pub fn new(name: &str) -> Builder {
        Builder {
            name: name.to_string(),
            gens: Vec::new(),
            relations: Vec::new(),
            relators: Vec::new(),
            standard_d: false,
            max_steps: DEFAULT_MAX_STEPS,
            values: Default::default(),
        }
    }

    /// Appends generators of degree 0 in ascending precedence.
    pub fn gens(mut self, names: &[&str]) -> Builder {
        for n in names {
            self.gens.push(Generator {
                sym: Sym::new(n),
                degree: 0,
                base: None,
                weight: 1,
            });
        }
        self
    }

    /// Appends `d<name>` generators below all base generators, so that the
    /// precedence reads `d<a> < d<b> < ... < a < b < ...`, and assigns the
    /// standard differential.
    pub fn calculus(mut self, names: &[&str]) -> Builder {
        let mut diffs: Vec<Generator> = names
            .iter()
            .map(|n| Generator {
                sym: Sym::new(&format!("d{n}")),
                degree: 1,
                base: Some(Sym::new(n)),
                weight: 1,
            })
            .collect();
        let bases: Vec<Generator> = names
            .iter()
            .map(|n| Generator {
                sym: Sym::new(n),
                degree: 0,
                base: None,
                weight: 1,
            })
            .collect();
        diffs.extend(bases);
        diffs.extend(std::mem::take(&mut self.gens));
        self.gens = diffs;
        self.standard_d = true;
        self
    }

    pub fn weight(mut self, name: &str, w: u32) -> Builder {
        let s = Sym::new(name);
        for g in &mut self.gens {
            if g.sym == s {
                g.weight = w;
            }
        }
        self
    }

    pub fn relation(mut self, rel: &str) -> Builder {
        self.relations.push(rel.to_string());
        self
    }

    pub fn relations(mut self, rels: &[&str]) -> Builder {
        self.relations.extend(rels.iter().map(|s| s.to_string()));
        self
    }

    pub fn relator(mut self, rel: &str) -> Builder {
        self.relators.push(rel.to_string());
        self
    }

    /// Parameter values substituted into every relation.
    pub fn values(mut self, values: &crate::scalars::Assignment) -> Builder {
        self.values = values.clone();
        self
    }

    pub fn max_steps(mut self, n: usize) -> Builder {
        self.max_steps = n;
        self
    }

    /// Builds without checking confluence.
    pub fn build_unchecked(self) -> Result<Presentation> {
        let mut p = Presentation::free(&self.name, self.gens)?;
        p.max_steps = self.max_steps;
        if self.standard_d {
            p.set_standard_differential();
        }
        let rels = self
            .relations
            .iter()
            .map(|r| super::parse::parse_element(r, &p).and_then(|e| super::file::specialize(&e, &self.values)))
            .collect::<Result<Vec<_>>>()?;
        p.add_relations(&rels)?;
        let relators = self
            .relators
            .iter()
            .map(|r| super::parse::parse_element(r, &p).and_then(|e| super::file::specialize(&e, &self.values)))
            .collect::<Result<Vec<_>>>()?;
        p.set_relators(relators)?;
        Ok(p)
    }

    /// Builds and rejects presentations with unresolved critical pairs.
    pub fn build(self) -> Result<Presentation> {
        let p = self.build_unchecked()?;
        super::confluence::require_confluent(&p)?;
        Ok(p)
    }
}
