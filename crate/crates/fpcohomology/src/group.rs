use std::fmt;

use crate::error::CohomError;

/// A word in the generators: `(generator index, exponent)` letters read left to right.
pub type Word = Vec<(usize, i64)>;

/// A finitely presented group `⟨ generators | relations ⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPGroup {
    labels: Vec<String>,
    relations: Vec<Word>,
}

/// Merges adjacent letters in the same generator and drops zero exponents.
pub fn reduce_word(w: &[(usize, i64)]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &(g, e) in w {
        if e == 0 {
            continue;
        }
        match out.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    out
}

impl FPGroup {
    pub fn new(labels: Vec<String>, relations: Vec<Word>) -> Result<Self, CohomError> {
        for r in &relations {
            if let Some(&(g, _)) = r.iter().find(|(g, _)| *g >= labels.len()) {
                return Err(CohomError::UnknownGenerator(format!("#{g}")));
            }
        }
        let relations = relations.iter().map(|r| reduce_word(r)).filter(|r| !r.is_empty()).collect();
        Ok(FPGroup { labels, relations })
    }

    /// Free group on `r` generators `x1, ..., xr`.
    pub fn free(r: usize) -> Self {
        FPGroup { labels: (1..=r).map(|i| format!("x{i}")).collect(), relations: Vec::new() }
    }

    /// Cyclic group `⟨ t | t^order ⟩`.
    pub fn cyclic(order: i64) -> Self {
        FPGroup { labels: vec!["t".into()], relations: vec![vec![(0, order)]] }
    }

    /// Tame local group `⟨ σ, τ | σ τ σ⁻¹ τ^{-v} ⟩`.
    pub fn tame(v: i64) -> Self {
        FPGroup {
            labels: vec!["sigma".into(), "tau".into()],
            relations: vec![reduce_word(&[(0, 1), (1, 1), (0, -1), (1, -v)])],
        }
    }

    /// If this is the tame presentation, the exponent `v`.
    pub fn tame_parameter(&self) -> Option<i64> {
        if self.labels.len() != 2 || self.relations.len() != 1 {
            return None;
        }
        match self.relations[0].as_slice() {
            [(0, 1), (1, 1), (0, -1), (1, e)] => Some(-e),
            _ => None,
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn relations(&self) -> &[Word] {
        &self.relations
    }
    pub fn num_generators(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Parses `a*b^-1*c^5` (also accepts spaces as separators).
    pub fn parse_word(&self, s: &str) -> Result<Word, CohomError> {
        let mut w = Vec::new();
        for tok in s.split(|c: char| c == '*' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e.trim().parse().map_err(|_| CohomError::BadWord(tok.to_string()))?;
                    (n.trim(), e)
                }
                None => (tok, 1),
            };
            let g = self.index_of(name).ok_or_else(|| CohomError::UnknownGenerator(name.to_string()))?;
            w.push((g, exp));
        }
        Ok(reduce_word(&w))
    }

    pub fn render_word(&self, w: &[(usize, i64)]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&(g, e)| if e == 1 { self.labels[g].clone() } else { format!("{}^{}", self.labels[g], e) })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for FPGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(|r| self.render_word(r)).collect();
        write!(f, "< {} | {} >", self.labels.join(", "), rels.join(", "))
    }
}
