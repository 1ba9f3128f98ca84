//! Patterns: k totally ordered vertices with each pair classified as
//! mandatory, forbidden, or undecided.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairClass {
    Mandatory,
    Forbidden,
    Undecided,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern needs at least one vertex")]
    Empty,
    #[error("pair ({a},{b}) out of range for k={k}")]
    PairOutOfRange { a: usize, b: usize, k: usize },
    #[error("pair ({a},{b}) classified twice with conflicting classes")]
    ConflictingPair { a: usize, b: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternParseError {
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: malformed record `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: PatternError },
}

/// A pattern on positions `1..=k`. Every unordered pair belongs to exactly
/// one of M, F, U.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    k: usize,
    /// Pair classes in lexicographic order of (a, b), a < b.
    pairs: Vec<PairClass>,
}

fn pair_index(a: usize, b: usize, k: usize) -> usize {
    debug_assert!(1 <= a && a < b && b <= k);
    // Pairs (1,2),(1,3),...,(1,k),(2,3),...
    (a - 1) * k - a * (a - 1) / 2 + (b - a) - 1
}

impl Pattern {
    /// The all-undecided pattern on k vertices.
    pub fn new(k: usize) -> Pattern {
        assert!(k >= 1, "pattern needs at least one vertex");
        Pattern { k, pairs: vec![PairClass::Undecided; k * (k - 1) / 2] }
    }

    pub fn from_pairs(
        k: usize,
        mandatory: &[(usize, usize)],
        forbidden: &[(usize, usize)],
    ) -> Result<Pattern, PatternError> {
        if k == 0 {
            return Err(PatternError::Empty);
        }
        let mut p = Pattern::new(k);
        for &(a, b) in mandatory {
            p.set_pair(a, b, PairClass::Mandatory)?;
        }
        for &(a, b) in forbidden {
            p.set_pair(a, b, PairClass::Forbidden)?;
        }
        Ok(p)
    }

    pub fn set_pair(&mut self, a: usize, b: usize, class: PairClass) -> Result<(), PatternError> {
        if a < 1 || b <= a || b > self.k {
            return Err(PatternError::PairOutOfRange { a, b, k: self.k });
        }
        let idx = pair_index(a, b, self.k);
        if self.pairs[idx] != PairClass::Undecided && self.pairs[idx] != class {
            return Err(PatternError::ConflictingPair { a, b });
        }
        self.pairs[idx] = class;
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Class of the unordered pair (a, b); panics unless 1 ≤ a < b ≤ k.
    pub fn pair(&self, a: usize, b: usize) -> PairClass {
        self.pairs[pair_index(a, b, self.k)]
    }

    pub fn mandatory_edges(&self) -> Vec<(usize, usize)> {
        self.pairs_of(PairClass::Mandatory)
    }

    pub fn forbidden_edges(&self) -> Vec<(usize, usize)> {
        self.pairs_of(PairClass::Forbidden)
    }

    /// M ∪ F with classes; used wherever forbidden edges play the same
    /// role as mandatory ones.
    pub fn decided_edges(&self) -> Vec<(usize, usize, PairClass)> {
        let mut out = Vec::new();
        for a in 1..=self.k {
            for b in a + 1..=self.k {
                let c = self.pair(a, b);
                if c != PairClass::Undecided {
                    out.push((a, b, c));
                }
            }
        }
        out
    }

    fn pairs_of(&self, class: PairClass) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.k {
            for b in a + 1..=self.k {
                if self.pair(a, b) == class {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Swaps mandatory and forbidden; undecided pairs are untouched.
    pub fn complement(&self) -> Pattern {
        let pairs = self
            .pairs
            .iter()
            .map(|c| match c {
                PairClass::Mandatory => PairClass::Forbidden,
                PairClass::Forbidden => PairClass::Mandatory,
                PairClass::Undecided => PairClass::Undecided,
            })
            .collect();
        Pattern { k: self.k, pairs }
    }

    /// The same pattern under the reverse ordering: pair (a, b) moves to
    /// (k+1-b, k+1-a).
    pub fn mirror(&self) -> Pattern {
        let mut p = Pattern::new(self.k);
        for a in 1..=self.k {
            for b in a + 1..=self.k {
                let idx = pair_index(self.k + 1 - b, self.k + 1 - a, self.k);
                p.pairs[idx] = self.pair(a, b);
            }
        }
        p
    }

    /// Parses the pattern format: header `k`, then lines `a b M` or
    /// `a b F`, 1 ≤ a < b ≤ k. Unlisted pairs are undecided.
    pub fn parse(text: &str) -> Result<Pattern, PatternParseError> {
        let mut pattern: Option<Pattern> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            match pattern {
                None => {
                    let k: usize = content.parse().map_err(|_| PatternParseError::Malformed {
                        line,
                        text: content.into(),
                    })?;
                    if k == 0 {
                        return Err(PatternParseError::Invalid { line, source: PatternError::Empty });
                    }
                    pattern = Some(Pattern::new(k));
                }
                Some(ref mut p) => {
                    let tokens: Vec<&str> = content.split_whitespace().collect();
                    let malformed = || PatternParseError::Malformed { line, text: content.into() };
                    if tokens.len() != 3 {
                        return Err(malformed());
                    }
                    let a: usize = tokens[0].parse().map_err(|_| malformed())?;
                    let b: usize = tokens[1].parse().map_err(|_| malformed())?;
                    let class = match tokens[2] {
                        "M" | "m" => PairClass::Mandatory,
                        "F" | "f" => PairClass::Forbidden,
                        _ => return Err(malformed()),
                    };
                    p.set_pair(a, b, class)
                        .map_err(|source| PatternParseError::Invalid { line, source })?;
                }
            }
        }
        pattern.ok_or(PatternParseError::MissingHeader)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.k);
        for (a, b, c) in self.decided_edges() {
            let tag = match c {
                PairClass::Mandatory => "M",
                PairClass::Forbidden => "F",
                PairClass::Undecided => unreachable!(),
            };
            let _ = writeln!(out, "{a} {b} {tag}");
        }
        out
    }
}

/// Structural classification of a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternClass {
    /// F = ∅.
    pub positive: bool,
    /// U = ∅.
    pub fully_specified: bool,
    /// Pairs of decided edges (i,j), (i',j') with i < i' < j < j'.
    pub crossings: usize,
    /// crossings == 0.
    pub outerplanar: bool,
    /// Decided edges are acyclic.
    pub forest: bool,
}

/// Two edges cross when i < i' < j < j' (in either role order).
pub fn edges_cross(e: (usize, usize), f: (usize, usize)) -> bool {
    let ((i, j), (i2, j2)) = if e.0 <= f.0 { (e, f) } else { (f, e) };
    i < i2 && i2 < j && j < j2
}

pub fn classify(p: &Pattern) -> PatternClass {
    let decided: Vec<(usize, usize)> =
        p.decided_edges().iter().map(|&(a, b, _)| (a, b)).collect();
    let positive = p.forbidden_edges().is_empty();
    let fully_specified = decided.len() == p.k() * (p.k() - 1) / 2;
    let mut crossings = 0;
    for (t, &e) in decided.iter().enumerate() {
        for &f in &decided[t + 1..] {
            if edges_cross(e, f) {
                crossings += 1;
            }
        }
    }
    // Union-find over positions; a cycle shows up as a redundant union.
    let mut parent: Vec<usize> = (0..=p.k()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let nxt = parent[c];
            parent[c] = r;
            c = nxt;
        }
        r
    }
    let mut forest = true;
    for &(a, b) in &decided {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            forest = false;
        } else {
            parent[ra] = rb;
        }
    }
    PatternClass { positive, fully_specified, crossings, outerplanar: crossings == 0, forest }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let interval = Pattern::parse("3\n1 3 M\n1 2 F\n").unwrap();
        assert_eq!(interval.mandatory_edges(), vec![(1, 3)]);
        assert_eq!(interval.forbidden_edges(), vec![(1, 2)]);

        let comparability = Pattern::parse("3\n1 2 M\n2 3 M\n1 3 F\n").unwrap();
        assert_eq!(comparability.mandatory_edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(comparability.forbidden_edges(), vec![(1, 3)]);

        let single = Pattern::parse("1\n").unwrap();
        assert_eq!(single.k(), 1);
        assert!(single.decided_edges().is_empty());
    }

    #[test]
    fn parse_conflicts_and_range() {
        let err = Pattern::parse("3\n1 2 M\n1 2 F\n").unwrap_err();
        assert!(matches!(err, PatternParseError::Invalid { line: 3, .. }));
        let err = Pattern::parse("3\n1 4 M\n").unwrap_err();
        assert!(matches!(err, PatternParseError::Invalid { line: 2, .. }));
    }

    #[test]
    fn complement_examples() {
        // Complement of Chordal is the catalog's co-Chordal, not its mirror.
        let chordal = Pattern::from_pairs(3, &[(1, 3), (2, 3)], &[(1, 2)]).unwrap();
        let co = chordal.complement();
        assert_eq!(co.mandatory_edges(), vec![(1, 2)]);
        assert_eq!(co.forbidden_edges(), vec![(1, 3), (2, 3)]);

        let free = Pattern::new(3);
        assert_eq!(free.complement(), free);
    }

    #[test]
    fn mirror_examples() {
        let mirror_chordal = Pattern::from_pairs(3, &[(1, 2), (1, 3)], &[(2, 3)]).unwrap();
        let chordal = Pattern::from_pairs(3, &[(1, 3), (2, 3)], &[(1, 2)]).unwrap();
        assert_eq!(mirror_chordal.mirror(), chordal);

        let split = Pattern::from_pairs(3, &[(1, 2)], &[(2, 3)]).unwrap();
        assert_eq!(split.mirror(), split.complement());

        let symmetric = Pattern::from_pairs(3, &[(1, 3)], &[]).unwrap();
        assert_eq!(symmetric.mirror(), symmetric);
    }

    #[test]
    fn classify_examples() {
        let flat4 =
            Pattern::from_pairs(4, &[(1, 2), (2, 3), (3, 4), (1, 4)], &[]).unwrap();
        let c = classify(&flat4);
        assert!(c.outerplanar);
        assert!(!c.forest);

        let crossing = Pattern::from_pairs(4, &[(1, 3), (2, 4)], &[]).unwrap();
        let c = classify(&crossing);
        assert_eq!(c.crossings, 1);
        assert!(!c.outerplanar);

        let edge = Pattern::from_pairs(2, &[(1, 2)], &[]).unwrap();
        let c = classify(&edge);
        assert!(c.positive && c.outerplanar && c.forest);
    }

    fn arb_pattern(max_k: usize) -> impl Strategy<Value = Pattern> {
        (1..=max_k).prop_flat_map(|k| {
            proptest::collection::vec(0u8..3, k * (k - 1) / 2).prop_map(move |classes| {
                let mut p = Pattern::new(k);
                p.pairs = classes
                    .into_iter()
                    .map(|c| match c {
                        0 => PairClass::Mandatory,
                        1 => PairClass::Forbidden,
                        _ => PairClass::Undecided,
                    })
                    .collect();
                p
            })
        })
    }

    proptest! {
        #[test]
        fn complement_involution(p in arb_pattern(6)) {
            prop_assert_eq!(p.complement().complement(), p);
        }

        #[test]
        fn mirror_involution(p in arb_pattern(6)) {
            prop_assert_eq!(p.mirror().mirror(), p);
        }

        #[test]
        fn mirror_preserves_outerplanarity(p in arb_pattern(6)) {
            prop_assert_eq!(classify(&p.mirror()).outerplanar, classify(&p).outerplanar);
            prop_assert_eq!(classify(&p.mirror()).crossings, classify(&p).crossings);
        }

        #[test]
        fn render_parse_round_trip(p in arb_pattern(6)) {
            prop_assert_eq!(Pattern::parse(&p.render()).unwrap(), p);
        }
    }
}
