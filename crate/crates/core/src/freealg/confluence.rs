//! Critical pairs, local confluence and bounded completion.

use super::poly::{word_string, NCPoly, Word};
use super::presentation::Presentation;
use crate::error::{Error, Result};

/// An ambiguity `word` with the normal forms of its two reductions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub word: Word,
    pub rules: (usize, usize),
    pub left: NCPoly,
    pub right: NCPoly,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub checked: usize,
    pub unresolved: Vec<CriticalPair>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.unresolved.is_empty()
    }

    pub fn summary(&self, pres: &Presentation) -> String {
        let mut s = format!("{} critical pairs, {} unresolved", self.checked, self.unresolved.len());
        for cp in self.unresolved.iter().take(5) {
            s.push_str(&format!(
                "; {}: {} vs {}",
                word_string(&cp.word),
                pres.display(&cp.left),
                pres.display(&cp.right)
            ));
        }
        s
    }
}

pub fn default_overlap_bound(pres: &Presentation) -> usize {
    2 * pres.rules().iter().map(|r| r.lhs.len()).max().unwrap_or(0)
}

/// Unreduced critical pairs `(word, rule indices, branch, branch)` whose
/// word has length at most `bound`.
pub fn critical_pairs(pres: &Presentation, bound: usize) -> Vec<(Word, (usize, usize), NCPoly, NCPoly)> {
    let rules = pres.rules();
    let mut out = Vec::new();
    for (i, r1) in rules.iter().enumerate() {
        let l1 = &r1.lhs;
        for (j, r2) in rules.iter().enumerate() {
            let l2 = &r2.lhs;
            for k in 1..l1.len().min(l2.len()) {
                if l1[l1.len() - k..] != l2[..k] {
                    continue;
                }
                let tail: Word = l2[k..].to_vec();
                let mut word = l1.clone();
                word.extend_from_slice(&tail);
                if word.len() > bound {
                    continue;
                }
                let a = r1.rhs.mul_raw(&NCPoly::word(tail));
                let b = NCPoly::word(l1[..l1.len() - k].to_vec()).mul_raw(&r2.rhs);
                out.push((word, (i, j), a, b));
            }
            if i != j && l2.len() <= l1.len() && l1.len() <= bound {
                for pos in 0..=(l1.len() - l2.len()) {
                    if l1[pos..pos + l2.len()] == l2[..] {
                        let b = NCPoly::word(l1[..pos].to_vec())
                            .mul_raw(&r2.rhs)
                            .mul_raw(&NCPoly::word(l1[pos + l2.len()..].to_vec()));
                        out.push((l1.clone(), (i, j), r1.rhs.clone(), b));
                    }
                }
            }
        }
    }
    out
}

/// Reduces both branches of every critical pair up to `bound` and reports
/// those with distinct normal forms.
pub fn check_local_confluence(pres: &Presentation, bound: usize) -> Result<ConfluenceReport> {
    let pairs = critical_pairs(pres, bound);
    let mut report = ConfluenceReport {
        checked: pairs.len(),
        unresolved: Vec::new(),
    };
    for (word, rules, a, b) in pairs {
        let left = pres.normal_form(&a)?;
        let right = pres.normal_form(&b)?;
        if left != right {
            report.unresolved.push(CriticalPair {
                word,
                rules,
                left,
                right,
            });
        }
    }
    Ok(report)
}

pub fn require_confluent(pres: &Presentation) -> Result<()> {
    let rep = check_local_confluence(pres, default_overlap_bound(pres))?;
    if rep.is_confluent() {
        Ok(())
    } else {
        Err(Error::NotConfluent(format!("{}: {}", pres.name(), rep.summary(pres))))
    }
}

/// Adds the differences of unresolved critical pairs as new relations, for
/// at most `rounds` rounds. Fails if pairs remain unresolved afterwards.
pub fn complete_bounded(pres: &mut Presentation, rounds: usize) -> Result<()> {
    for _ in 0..rounds {
        let rep = check_local_confluence(pres, default_overlap_bound(pres))?;
        if rep.is_confluent() {
            return Ok(());
        }
        let rels: Vec<NCPoly> = rep.unresolved.iter().map(|cp| &cp.left - &cp.right).collect();
        pres.add_relations(&rels)?;
    }
    require_confluent(pres)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::presentation::{Builder, Rule};
    use crate::freealg::symbol::Sym;

    #[test]
    fn disc_is_confluent() {
        let d = Builder::new("disc")
            .gens(&["x", "xs"])
            .relation("xs*x - p*x*xs - (1-p)")
            .build_unchecked()
            .unwrap();
        let rep = check_local_confluence(&d, default_overlap_bound(&d)).unwrap();
        assert!(rep.is_confluent());
    }

    #[test]
    fn empty_rules_confluent() {
        let f = Builder::new("free").gens(&["a", "b"]).build_unchecked().unwrap();
        let rep = check_local_confluence(&f, 4).unwrap();
        assert_eq!(rep.checked, 0);
        assert!(rep.is_confluent());
    }

    #[test]
    fn hand_enumerated_failure() {
        let (a, b) = (Sym::new("a"), Sym::new("b"));
        let mut f = Builder::new("ab").gens(&["a", "b"]).build_unchecked().unwrap();
        f.add_rules(vec![
            Rule { lhs: vec![a, b], rhs: NCPoly::gen(a) },
            Rule { lhs: vec![b, a], rhs: NCPoly::gen(b) },
        ])
        .unwrap();
        let rep = check_local_confluence(&f, 4).unwrap();
        let aba = rep.unresolved.iter().find(|cp| cp.word == vec![a, b, a]).expect("aba witness");
        let mut sides = [aba.left.clone(), aba.right.clone()];
        sides.sort_by_key(|e| e.to_string());
        assert_eq!(sides[0], NCPoly::gen(a));
        assert_eq!(sides[1], NCPoly::word(vec![a, a]));
    }

    #[test]
    fn completion_resolves_simple_system() {
        let mut p = Builder::new("c")
            .gens(&["a", "b"])
            .relations(&["b*a - a", "a*a - b"])
            .build_unchecked()
            .unwrap();
        complete_bounded(&mut p, 8).unwrap();
        assert!(check_local_confluence(&p, default_overlap_bound(&p)).unwrap().is_confluent());
    }
}
