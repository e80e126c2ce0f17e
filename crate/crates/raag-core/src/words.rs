//! Elements of the right-angled Artin group of a graph, as words in signed
//! generators with a canonical normal form.
//!
//! A word is reduced by repeatedly cancelling a pair x ... x^-1 whose
//! intervening letters all commute with x, which yields a geodesic; the
//! canonical form is the least linearization of the geodesic's trace, built
//! by greedily emitting the least letter that commutes past everything
//! before it. Letters order by vertex construction order, positive before
//! negative.

use crate::graph::{Graph, VertexId, VertexSet};
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

pub const DEFAULT_MAX_WORD_LEN: usize = 4096;
pub const MAX_CENTRALIZER_RADIUS: usize = 8;

#[derive(Debug, Error)]
pub enum WordError {
    #[error("letter refers to vertex #{0}, which is not in the graph")]
    ForeignLetter(usize),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("word of length {len} exceeds the limit {limit}")]
    TooLong { len: usize, limit: usize },
    #[error("elements belong to different ambient graphs")]
    AmbientMismatch,
    #[error("radius {radius} exceeds the centralizer search bound {bound}")]
    RadiusBound { radius: usize, bound: usize },
    #[error("cannot parse word token `{0}`")]
    BadToken(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn exponent(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A signed generator occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub vertex: VertexId,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(vertex: VertexId) -> Letter {
        Letter {
            vertex,
            sign: Sign::Pos,
        }
    }

    pub fn neg(vertex: VertexId) -> Letter {
        Letter {
            vertex,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            vertex: self.vertex,
            sign: self.sign.flip(),
        }
    }

    pub fn render(&self, g: &Graph) -> String {
        match self.sign {
            Sign::Pos => g.name(self.vertex).to_owned(),
            Sign::Neg => format!("{}^-1", g.name(self.vertex)),
        }
    }
}

/// An unnormalized sequence of letters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn empty() -> Word {
        Word {
            letters: Vec::new(),
        }
    }

    /// Parses whitespace-separated tokens: `a` positive, `a^-1` negative.
    /// The empty string and `1` both denote the identity.
    pub fn parse(g: &Graph, text: &str) -> Result<Word, WordError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, sign) = match token.strip_suffix("^-1") {
                Some(base) => (base, Sign::Neg),
                None => (token, Sign::Pos),
            };
            if name.is_empty() || name.contains('^') {
                return Err(WordError::BadToken(token.to_owned()));
            }
            let vertex = g
                .vertex(name)
                .map_err(|_| WordError::UnknownGenerator(name.to_owned()))?;
            letters.push(Letter { vertex, sign });
        }
        Ok(Word { letters })
    }

    pub fn render(&self, g: &Graph) -> String {
        self.letters
            .iter()
            .map(|l| l.render(g))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// An element of the group in canonical normal form.
#[derive(Debug, Clone)]
pub struct GroupElement {
    graph: Arc<Graph>,
    letters: Vec<Letter>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && same_graph(&self.graph, &other.graph)
    }
}

impl Eq for GroupElement {}

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

pub(crate) fn same_graph(a: &Arc<Graph>, b: &Arc<Graph>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl GroupElement {
    pub fn identity(graph: Arc<Graph>) -> GroupElement {
        GroupElement {
            graph,
            letters: Vec::new(),
        }
    }

    pub fn generator(graph: Arc<Graph>, letter: Letter) -> Result<GroupElement, WordError> {
        normal_form(graph, &Word::new(vec![letter]))
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Vertices whose letters occur in the normal form.
    pub fn support(&self) -> VertexSet {
        self.letters.iter().map(|l| l.vertex).collect()
    }

    pub fn as_word(&self) -> Word {
        Word::new(self.letters.clone())
    }

    /// Exponent sum per vertex.
    pub fn exponent_vector(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.graph.vertex_count()];
        for l in &self.letters {
            v[l.vertex] += l.sign.exponent();
        }
        v
    }

    pub fn render(&self) -> String {
        self.as_word().render(&self.graph)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.render())
        }
    }
}

/// Cancels pairs x ... x^-1 whose intervening letters all commute with x,
/// until none remain. The result is a geodesic spelling.
fn reduce_to_geodesic(g: &Graph, letters: &mut Vec<Letter>) {
    'again: loop {
        for i in 0..letters.len() {
            let li = letters[i];
            for j in (i + 1)..letters.len() {
                let lj = letters[j];
                if lj.vertex == li.vertex {
                    if lj.sign != li.sign {
                        letters.remove(j);
                        letters.remove(i);
                        continue 'again;
                    }
                    break; // same-sign occurrence blocks any later partner
                }
                if !g.adjacent(lj.vertex, li.vertex) {
                    break;
                }
            }
        }
        return;
    }
}

/// Least linearization of a geodesic's trace: repeatedly emit the least
/// letter all of whose predecessors commute with it.
fn lex_linearize(g: &Graph, mut letters: Vec<Letter>) -> Vec<Letter> {
    let mut out = Vec::with_capacity(letters.len());
    while !letters.is_empty() {
        let mut best: Option<usize> = None;
        'pos: for p in 0..letters.len() {
            for q in 0..p {
                if !g.adjacent(letters[q].vertex, letters[p].vertex) {
                    continue 'pos;
                }
            }
            if best.is_none_or(|b| letters[p] < letters[b]) {
                best = Some(p);
            }
        }
        out.push(letters.remove(best.expect("the first letter is always available")));
    }
    out
}

/// Canonical representative of the element the word spells.
pub fn normal_form(graph: Arc<Graph>, word: &Word) -> Result<GroupElement, WordError> {
    normal_form_with_limit(graph, word, DEFAULT_MAX_WORD_LEN)
}

pub fn normal_form_with_limit(
    graph: Arc<Graph>,
    word: &Word,
    limit: usize,
) -> Result<GroupElement, WordError> {
    if word.letters.len() > limit {
        return Err(WordError::TooLong {
            len: word.letters.len(),
            limit,
        });
    }
    for l in &word.letters {
        if l.vertex >= graph.vertex_count() {
            return Err(WordError::ForeignLetter(l.vertex));
        }
    }
    let mut letters = word.letters.clone();
    reduce_to_geodesic(&graph, &mut letters);
    let letters = lex_linearize(&graph, letters);
    Ok(GroupElement { graph, letters })
}

/// Group product in normal form.
pub fn concat_reduce(u: &GroupElement, v: &GroupElement) -> Result<GroupElement, WordError> {
    if !same_graph(&u.graph, &v.graph) {
        return Err(WordError::AmbientMismatch);
    }
    let mut letters = u.letters.clone();
    letters.extend_from_slice(&v.letters);
    normal_form(u.graph.clone(), &Word::new(letters))
}

/// Group inverse in normal form.
pub fn invert(u: &GroupElement) -> GroupElement {
    let letters: Vec<Letter> = u.letters.iter().rev().map(|l| l.inverse()).collect();
    // a reversed geodesic is geodesic; only the linearization is redone
    let letters = lex_linearize(&u.graph, letters);
    GroupElement {
        graph: u.graph.clone(),
        letters,
    }
}

/// Whether two words spell the same group element.
pub fn equal(graph: &Arc<Graph>, w1: &Word, w2: &Word) -> Result<bool, WordError> {
    Ok(normal_form(graph.clone(), w1)? == normal_form(graph.clone(), w2)?)
}

impl GroupElement {
    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement, WordError> {
        concat_reduce(self, other)
    }

    pub fn inverse(&self) -> GroupElement {
        invert(self)
    }

    /// u^-1 self u
    pub fn conjugate_by(&self, u: &GroupElement) -> Result<GroupElement, WordError> {
        invert(u).mul(self)?.mul(u)
    }

    pub fn pow(&self, n: i64) -> Result<GroupElement, WordError> {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = GroupElement::identity(self.graph.clone());
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base)?;
        }
        Ok(out)
    }
}

/// Positions whose letters can commute to the front of the word.
fn front_available(g: &Graph, letters: &[Letter]) -> Vec<usize> {
    let mut out = Vec::new();
    'pos: for p in 0..letters.len() {
        for q in 0..p {
            if !g.adjacent(letters[q].vertex, letters[p].vertex) {
                continue 'pos;
            }
        }
        out.push(p);
    }
    out
}

/// Positions whose letters can commute to the back of the word.
fn back_available(g: &Graph, letters: &[Letter]) -> Vec<usize> {
    let mut out = Vec::new();
    'pos: for p in 0..letters.len() {
        for q in (p + 1)..letters.len() {
            if !g.adjacent(letters[q].vertex, letters[p].vertex) {
                continue 'pos;
            }
        }
        out.push(p);
    }
    out
}

/// If `w` is conjugate to the generator `v`, returns the canonical conjugator
/// u with w = u^-1 v u: the unique shortest one, obtained by cyclic peeling
/// followed by removal of the maximal st(v)-supported prefix.
pub fn extract_conjugator(g: &Arc<Graph>, v: VertexId, w: &GroupElement) -> Option<GroupElement> {
    if !same_graph(g, &w.graph) || v >= g.vertex_count() {
        return None;
    }
    let mut letters = w.letters.clone();
    let mut peeled: Vec<Letter> = Vec::new();
    loop {
        if letters.len() == 1 && letters[0] == Letter::pos(v) {
            break;
        }
        let fronts = front_available(g, &letters);
        let backs = back_available(g, &letters);
        let mut found = None;
        'search: for &i in &fronts {
            for &j in backs.iter().rev() {
                if j > i
                    && letters[j].vertex == letters[i].vertex
                    && letters[j].sign != letters[i].sign
                {
                    found = Some((i, j));
                    break 'search;
                }
            }
        }
        match found {
            Some((i, j)) => {
                peeled.push(letters[j]);
                letters.remove(j);
                letters.remove(i);
            }
            None => return None,
        }
    }
    // conjugator letters, outermost peel last
    peeled.reverse();
    let u0 = normal_form(w.graph.clone(), &Word::new(peeled)).expect("peeled letters are valid");
    let star = g.star(v).expect("v checked above");
    // strip the maximal prefix supported on st(v); what remains is the
    // unique shortest conjugator
    let mut rest = u0.letters;
    loop {
        let fronts = front_available(g, &rest);
        match fronts.iter().find(|&&p| star.contains(rest[p].vertex)) {
            Some(&p) => {
                rest.remove(p);
            }
            None => break,
        }
    }
    let canonical = GroupElement {
        graph: w.graph.clone(),
        letters: lex_linearize(g, rest),
    };
    debug_assert_eq!(
        GroupElement::generator(w.graph.clone(), Letter::pos(v))
            .unwrap()
            .conjugate_by(&canonical)
            .unwrap(),
        *w
    );
    Some(canonical)
}

/// Whether `h` lies in the product ⟨A⟩·⟨B⟩ of the subgroups generated by the
/// vertex sets A and B. Decided by alternately stripping front-available
/// letters supported in A and back-available letters supported in B; the
/// element is in the product exactly when nothing survives.
pub fn in_parabolic_product(g: &Graph, h: &GroupElement, a: &VertexSet, b: &VertexSet) -> bool {
    let mut letters = h.letters.clone();
    loop {
        let before = letters.len();
        while let Some(&p) = front_available(g, &letters)
            .iter()
            .find(|&&p| a.contains(letters[p].vertex))
        {
            letters.remove(p);
        }
        while let Some(&p) = back_available(g, &letters)
            .iter()
            .find(|&&p| b.contains(letters[p].vertex))
        {
            letters.remove(p);
        }
        if letters.is_empty() {
            return true;
        }
        if letters.len() == before {
            return false;
        }
    }
}

/// All normal-form elements of length at most `radius` supported on st(v);
/// each commutes with v. Sorted by length, then lexicographically.
pub fn centralizer_members(
    g: &Arc<Graph>,
    v: VertexId,
    radius: usize,
) -> Result<Vec<GroupElement>, WordError> {
    if radius > MAX_CENTRALIZER_RADIUS {
        return Err(WordError::RadiusBound {
            radius,
            bound: MAX_CENTRALIZER_RADIUS,
        });
    }
    if v >= g.vertex_count() {
        return Err(WordError::ForeignLetter(v));
    }
    let star = g.star(v).expect("v checked above");
    let alphabet: Vec<Letter> = star
        .iter()
        .flat_map(|&u| [Letter::pos(u), Letter::neg(u)])
        .collect();
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    let mut out: Vec<GroupElement> = vec![GroupElement::identity(g.clone())];
    seen.insert(Vec::new());
    let mut frontier: Vec<GroupElement> = out.clone();
    for target_len in 1..=radius {
        let mut next_level: Vec<GroupElement> = Vec::new();
        for elem in &frontier {
            for &l in &alphabet {
                let mut letters = elem.letters.clone();
                letters.push(l);
                let cand = normal_form(g.clone(), &Word::new(letters)).expect("valid letters");
                if cand.len() == target_len && seen.insert(cand.letters.clone()) {
                    next_level.push(cand);
                }
            }
        }
        next_level.sort_by(|a, b| a.letters.cmp(&b.letters));
        out.extend(next_level.iter().cloned());
        frontier = next_level;
    }
    Ok(out)
}
