//! The quiver family `(Q(n), I(n))`, walks on it, and the string and band
//! predicates.
//!
//! `Q(n)` has vertices `0..=n` and arrows `α_i: i+1 → i`, `β_i: i → i+1` for
//! `i ∈ [0, n−1]`. Walks are stored in composition order: a walk
//! `w = γ_1 γ_2 … γ_m` satisfies `t(γ_{k+1}) = s(γ_k)`, so the source of the
//! whole walk is `s(γ_m)` and its target is `t(γ_1)`.

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// The two arrow families of `Q(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArrowKind {
    Alpha,
    Beta,
}

/// An honest arrow `α_i` or `β_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub kind: ArrowKind,
    pub index: usize,
}

impl Arrow {
    pub fn alpha(index: usize) -> Self {
        Arrow {
            kind: ArrowKind::Alpha,
            index,
        }
    }

    pub fn beta(index: usize) -> Self {
        Arrow {
            kind: ArrowKind::Beta,
            index,
        }
    }

    /// `α_i: i+1 → i`, `β_i: i → i+1`.
    pub fn source(&self) -> usize {
        match self.kind {
            ArrowKind::Alpha => self.index + 1,
            ArrowKind::Beta => self.index,
        }
    }

    pub fn target(&self) -> usize {
        match self.kind {
            ArrowKind::Alpha => self.index,
            ArrowKind::Beta => self.index + 1,
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ArrowKind::Alpha => write!(f, "a{}", self.index),
            ArrowKind::Beta => write!(f, "b{}", self.index),
        }
    }
}

/// An arrow or the formal inverse of an arrow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub arrow: Arrow,
    pub inverted: bool,
}

impl Letter {
    pub fn honest(arrow: Arrow) -> Self {
        Letter {
            arrow,
            inverted: false,
        }
    }

    pub fn inverse(arrow: Arrow) -> Self {
        Letter {
            arrow,
            inverted: true,
        }
    }

    /// `s(γ*) = t(γ)`, `t(γ*) = s(γ)`.
    pub fn source(&self) -> usize {
        if self.inverted {
            self.arrow.target()
        } else {
            self.arrow.source()
        }
    }

    pub fn target(&self) -> usize {
        if self.inverted {
            self.arrow.source()
        } else {
            self.arrow.target()
        }
    }

    /// The formal inverse.
    pub fn star(&self) -> Letter {
        Letter {
            arrow: self.arrow,
            inverted: !self.inverted,
        }
    }

    /// The honest arrow underlying this letter (`γ̃`).
    pub fn honest_arrow(&self) -> Arrow {
        self.arrow
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.arrow)?;
        if self.inverted {
            write!(f, "*")?;
        }
        Ok(())
    }
}

/// A walk on `Q(n)`: either the trivial walk `ε_i` at a vertex or a nonempty
/// letter sequence in composition order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Walk {
    Trivial(usize),
    Seq(Vec<Letter>),
}

impl Walk {
    pub fn trivial(vertex: usize) -> Self {
        Walk::Trivial(vertex)
    }

    /// Build a walk from letters `γ_1 … γ_m`, checking `t(γ_{k+1}) = s(γ_k)`.
    pub fn from_letters(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidParameter(
                "a letter sequence walk must be nonempty; use Walk::trivial".into(),
            ));
        }
        for k in 0..letters.len() - 1 {
            if letters[k + 1].target() != letters[k].source() {
                return Err(Error::InvalidParameter(format!(
                    "letters {} and {} do not chain",
                    letters[k],
                    letters[k + 1]
                )));
            }
        }
        Ok(Walk::Seq(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        match self {
            Walk::Trivial(_) => &[],
            Walk::Seq(letters) => letters,
        }
    }

    pub fn len(&self) -> usize {
        self.letters().len()
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Walk::Trivial(_))
    }

    /// `s(w) = s(γ_m)`; the trivial walk has source its vertex.
    pub fn source(&self) -> usize {
        match self {
            Walk::Trivial(i) => *i,
            Walk::Seq(letters) => letters.last().unwrap().source(),
        }
    }

    /// `t(w) = t(γ_1)`.
    pub fn target(&self) -> usize {
        match self {
            Walk::Trivial(i) => *i,
            Walk::Seq(letters) => letters[0].target(),
        }
    }

    /// The walk `w* = γ_m* … γ_1*`; trivial walks are fixed points.
    pub fn star(&self) -> Walk {
        match self {
            Walk::Trivial(i) => Walk::Trivial(*i),
            Walk::Seq(letters) => Walk::Seq(letters.iter().rev().map(Letter::star).collect()),
        }
    }

    /// No `γ_k = γ_{k+1}*`; trivial walks are reduced.
    pub fn is_reduced(&self) -> bool {
        let letters = self.letters();
        letters.windows(2).all(|p| p[0] != p[1].star())
    }

    pub fn is_cycle(&self) -> bool {
        !self.is_empty() && self.source() == self.target()
    }

    /// Reduced with indices taken modulo the length (`γ_m ≠ γ_1*` as well).
    pub fn is_cyclically_reduced(&self) -> bool {
        let letters = self.letters();
        if letters.is_empty() {
            return false;
        }
        self.is_reduced() && (letters.len() == 1 || *letters.last().unwrap() != letters[0].star())
    }

    /// `γ_k` honest iff `γ_{k+1}` inverted, for all consecutive pairs.
    pub fn is_alternating(&self) -> bool {
        self.letters()
            .windows(2)
            .all(|p| p[0].inverted != p[1].inverted)
    }

    /// `w` concatenated with itself `h` times; requires a cycle for `h > 1`.
    pub fn power(&self, h: usize) -> Result<Walk> {
        if h == 0 || self.is_empty() {
            return Err(Error::InvalidParameter(
                "power requires a nonempty walk and h >= 1".into(),
            ));
        }
        if h > 1 && !self.is_cycle() {
            return Err(Error::InvalidParameter("power of a non-cycle".into()));
        }
        let mut letters = Vec::with_capacity(self.len() * h);
        for _ in 0..h {
            letters.extend_from_slice(self.letters());
        }
        Walk::from_letters(letters)
    }

    pub fn max_vertex(&self) -> usize {
        match self {
            Walk::Trivial(i) => *i,
            Walk::Seq(letters) => letters
                .iter()
                .map(|l| l.source().max(l.target()))
                .max()
                .unwrap(),
        }
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Walk::Trivial(i) => write!(f, "e{i}"),
            Walk::Seq(letters) => {
                for l in letters {
                    write!(f, "{l}")?;
                }
                Ok(())
            }
        }
    }
}

/// The presentation `(Q(n), I(n))` with the forbidden length-2 paths computed
/// from the generators of `I(n)`.
#[derive(Clone, Debug)]
pub struct QuiverPresentation {
    n: usize,
    arrows: Vec<Arrow>,
    monomial_generators: Vec<[Arrow; 2]>,
    commuting_pairs: Vec<([Arrow; 2], [Arrow; 2])>,
    forbidden: BTreeSet<[Arrow; 2]>,
}

/// Build `(Q(n), I(n))` for `n ≥ 1`.
///
/// The ideal is generated by the monomials `α_i α_{i+1}`, `β_{i+1} β_i`
/// (`i ∈ [0, n−2]`), the monomial `α_0 β_0`, and the binomials
/// `β_i α_i − α_{i+1} β_{i+1}` (`i ∈ [0, n−2]`). The forbidden-path set is the
/// set of monomials appearing in any generator; it is derived here, not
/// hard-coded.
pub fn build_quiver(n: usize) -> Result<QuiverPresentation> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "build_quiver requires n >= 1".into(),
        ));
    }
    let mut arrows = Vec::with_capacity(2 * n);
    for i in 0..n {
        arrows.push(Arrow::alpha(i));
        arrows.push(Arrow::beta(i));
    }

    let mut monomial_generators = Vec::new();
    let mut commuting_pairs = Vec::new();
    for i in 0..n.saturating_sub(1) {
        // paths written γ_1 γ_2 in composition order, γ_2 applied first
        monomial_generators.push([Arrow::alpha(i), Arrow::alpha(i + 1)]);
        monomial_generators.push([Arrow::beta(i + 1), Arrow::beta(i)]);
        commuting_pairs.push((
            [Arrow::beta(i), Arrow::alpha(i)],
            [Arrow::alpha(i + 1), Arrow::beta(i + 1)],
        ));
    }
    monomial_generators.push([Arrow::alpha(0), Arrow::beta(0)]);

    let mut forbidden = BTreeSet::new();
    for m in &monomial_generators {
        forbidden.insert(*m);
    }
    for (lhs, rhs) in &commuting_pairs {
        forbidden.insert(*lhs);
        forbidden.insert(*rhs);
    }

    Ok(QuiverPresentation {
        n,
        arrows,
        monomial_generators,
        commuting_pairs,
        forbidden,
    })
}

impl QuiverPresentation {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n + 1
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// All letters (arrows and formal inverses) in a fixed order.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(4 * self.n);
        for a in &self.arrows {
            out.push(Letter::honest(*a));
            out.push(Letter::inverse(*a));
        }
        out.sort();
        out
    }

    pub fn monomial_generators(&self) -> &[[Arrow; 2]] {
        &self.monomial_generators
    }

    pub fn commuting_pairs(&self) -> &[([Arrow; 2], [Arrow; 2])] {
        &self.commuting_pairs
    }

    /// Monomials of length 2 appearing in some generator of `I(n)`.
    pub fn forbidden_paths(&self) -> &BTreeSet<[Arrow; 2]> {
        &self.forbidden
    }

    pub fn is_forbidden(&self, first: Arrow, second: Arrow) -> bool {
        self.forbidden.contains(&[first, second])
    }

    fn contains_letter(&self, l: &Letter) -> bool {
        l.arrow.index < self.n
    }

    /// Letters valid on this quiver and vertices in range.
    pub fn is_walk_on(&self, w: &Walk) -> bool {
        match w {
            Walk::Trivial(i) => *i <= self.n,
            Walk::Seq(letters) => letters.iter().all(|l| self.contains_letter(l)),
        }
    }
}

/// String test: `w` is reduced and no nontrivial path contained in `w` (a
/// contiguous subword `p` with `p` or `p*` a path) is a monomial of a
/// generator of `I(n)`.
///
/// All monomials in the generators have length exactly 2, so it suffices to
/// inspect adjacent letter pairs: an all-honest pair is itself a path, an
/// all-inverse pair contains the starred path.
pub fn is_string(w: &Walk, q: &QuiverPresentation) -> bool {
    if !q.is_walk_on(w) || !w.is_reduced() {
        return false;
    }
    for p in w.letters().windows(2) {
        let (x, y) = (&p[0], &p[1]);
        if !x.inverted && !y.inverted && q.is_forbidden(x.arrow, y.arrow) {
            return false;
        }
        if x.inverted && y.inverted && q.is_forbidden(y.arrow, x.arrow) {
            return false;
        }
    }
    true
}

/// All strings on `(Q(n), I(n))`: the `n+1` trivial walks, the two cycles
/// `β_{n−1} α_{n−1}` and its star, and every alternating string (both
/// `*`-representatives).
///
/// Enumeration is breadth-first by appending one letter at the source end;
/// every prefix of a string is a string, so this finds everything. It
/// terminates because alternating strings have length at most `n` and the
/// cycles have length 2.
pub fn enumerate_strings(n: usize) -> Result<Vec<Walk>> {
    let q = build_quiver(n)?;
    let letters = q.letters();
    let mut out: Vec<Walk> = (0..=n).map(Walk::Trivial).collect();
    let mut level: Vec<Walk> = Vec::new();
    for l in &letters {
        level.push(Walk::Seq(vec![*l]));
    }
    while !level.is_empty() {
        out.extend(level.iter().cloned());
        let mut next = Vec::new();
        for w in &level {
            let src = w.source();
            for l in &letters {
                if l.target() != src {
                    continue;
                }
                let mut ls = w.letters().to_vec();
                ls.push(*l);
                let cand = Walk::Seq(ls);
                if is_string(&cand, &q) {
                    next.push(cand);
                }
            }
        }
        level = next;
    }
    Ok(out)
}

/// Band test, with a configurable power bound.
///
/// A band is a nontrivial, cyclically reduced cycle `w` such that `w^h` is a
/// string for every `h ≥ 1` and `w` is not a proper power of a shorter
/// string. On `(Q(n), I(n))` checking powers up to `h = 2` suffices: an
/// alternating cycle is impossible and the square of either string cycle
/// contains `α_{n−1} β_{n−1}`.
pub fn is_band_with_power_bound(w: &Walk, q: &QuiverPresentation, power_bound: usize) -> bool {
    if w.is_empty() || !w.is_cycle() || !w.is_cyclically_reduced() {
        return false;
    }
    for h in 1..=power_bound.max(1) {
        let wh = match w.power(h) {
            Ok(wh) => wh,
            Err(_) => return false,
        };
        if !is_string(&wh, q) {
            return false;
        }
    }
    // not a proper power of a shorter walk
    let m = w.len();
    let letters = w.letters();
    for d in 1..m {
        if !m.is_multiple_of(d) {
            continue;
        }
        if (d..m).all(|k| letters[k] == letters[k % d]) {
            return false;
        }
    }
    true
}

/// Band test with the default power bound of 2.
pub fn is_band(w: &Walk, q: &QuiverPresentation) -> bool {
    is_band_with_power_bound(w, q, 2)
}

/// Exhaustive band scan: all reduced walks up to the alternating-length bound
/// `max(n, 2)` are generated and tested. Returns the empty list for every `n`.
pub fn find_bands(n: usize) -> Result<Vec<Walk>> {
    let q = build_quiver(n)?;
    let letters = q.letters();
    let bound = n.max(2);
    let mut bands = Vec::new();
    let mut level: Vec<Walk> = letters.iter().map(|l| Walk::Seq(vec![*l])).collect();
    for _ in 1..=bound {
        for w in &level {
            if is_band(w, &q) {
                bands.push(w.clone());
            }
        }
        let mut next = Vec::new();
        for w in &level {
            let src = w.source();
            for l in &letters {
                if l.target() != src {
                    continue;
                }
                let mut ls = w.letters().to_vec();
                ls.push(*l);
                let cand = Walk::Seq(ls);
                if cand.is_reduced() {
                    next.push(cand);
                }
            }
        }
        level = next;
    }
    Ok(bands)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize) -> Letter {
        Letter::honest(Arrow::alpha(i))
    }

    fn ai(i: usize) -> Letter {
        Letter::inverse(Arrow::alpha(i))
    }

    fn b(i: usize) -> Letter {
        Letter::honest(Arrow::beta(i))
    }

    fn bi(i: usize) -> Letter {
        Letter::inverse(Arrow::beta(i))
    }

    fn walk(letters: Vec<Letter>) -> Walk {
        Walk::from_letters(letters).unwrap()
    }

    #[test]
    fn forbidden_paths_n2_match_relations() {
        let q = build_quiver(2).unwrap();
        let f = q.forbidden_paths();
        assert!(f.contains(&[Arrow::alpha(0), Arrow::alpha(1)]));
        assert!(f.contains(&[Arrow::beta(1), Arrow::beta(0)]));
        assert!(f.contains(&[Arrow::alpha(0), Arrow::beta(0)]));
        assert!(f.contains(&[Arrow::beta(0), Arrow::alpha(0)]));
        assert!(f.contains(&[Arrow::alpha(1), Arrow::beta(1)]));
        assert!(!f.contains(&[Arrow::beta(1), Arrow::alpha(1)]));
        assert_eq!(f.len(), 5);
    }

    #[test]
    fn forbidden_paths_n1_only_alpha0_beta0() {
        let q = build_quiver(1).unwrap();
        assert_eq!(q.forbidden_paths().len(), 1);
        assert!(q.is_forbidden(Arrow::alpha(0), Arrow::beta(0)));
        assert!(q.commuting_pairs().is_empty());
    }

    #[test]
    fn forbidden_paths_n3_index_ranges() {
        let q = build_quiver(3).unwrap();
        assert!(!q.is_forbidden(Arrow::beta(2), Arrow::alpha(2)));
        assert!(q.is_forbidden(Arrow::beta(1), Arrow::alpha(1)));
    }

    /// The closed-form description of the forbidden set, as a check on the
    /// generator-derived construction.
    #[test]
    fn forbidden_paths_match_closed_form() {
        for n in 1..=6 {
            let q = build_quiver(n).unwrap();
            let mut expect = BTreeSet::new();
            for i in 0..n.saturating_sub(1) {
                expect.insert([Arrow::alpha(i), Arrow::alpha(i + 1)]);
                expect.insert([Arrow::beta(i + 1), Arrow::beta(i)]);
                expect.insert([Arrow::beta(i), Arrow::alpha(i)]);
            }
            expect.insert([Arrow::alpha(0), Arrow::beta(0)]);
            for j in 1..n {
                expect.insert([Arrow::alpha(j), Arrow::beta(j)]);
            }
            assert_eq!(q.forbidden_paths(), &expect, "n = {n}");
        }
    }

    #[test]
    fn build_quiver_rejects_zero() {
        assert!(build_quiver(0).is_err());
    }

    #[test]
    fn vertex_degrees_at_most_two() {
        for n in 1..=6 {
            let q = build_quiver(n).unwrap();
            for v in 0..=n {
                let out_deg = q.arrows().iter().filter(|a| a.source() == v).count();
                let in_deg = q.arrows().iter().filter(|a| a.target() == v).count();
                assert!(out_deg <= 2 && in_deg <= 2, "vertex {v} at n = {n}");
            }
        }
    }

    #[test]
    fn star_examples() {
        let w = walk(vec![ai(1), b(0)]);
        assert_eq!(w.star(), walk(vec![bi(0), a(1)]));
        assert_eq!(Walk::trivial(2).star(), Walk::trivial(2));
        let c = walk(vec![b(0), a(0)]);
        assert_eq!(c.star().star(), c);
    }

    #[test]
    fn walk_source_target_convention() {
        // w = β_0 α_0 : first α_0 : 1 → 0, then β_0 : 0 → 1
        let w = walk(vec![b(0), a(0)]);
        assert_eq!(w.source(), 1);
        assert_eq!(w.target(), 1);
        assert!(w.is_cycle());
    }

    #[test]
    fn is_string_known_cases() {
        let q = build_quiver(2).unwrap();
        assert!(is_string(&walk(vec![ai(1), b(0)]), &q));
        assert!(!is_string(&walk(vec![bi(0), a(1), b(1)]), &q));
        assert!(!is_string(&walk(vec![b(1), b(0)]), &q));
    }

    #[test]
    fn is_string_rejects_unreduced_and_foreign() {
        let q = build_quiver(2).unwrap();
        assert!(!is_string(&walk(vec![a(0), ai(0)]), &q));
        // valid on Q(3) but not on Q(2)
        assert!(!is_string(&walk(vec![a(2)]), &q));
        assert!(!is_string(&Walk::trivial(3), &q));
    }

    #[test]
    fn enumerate_strings_n1_golden() {
        let got: BTreeSet<Walk> = enumerate_strings(1).unwrap().into_iter().collect();
        let expect: BTreeSet<Walk> = [
            Walk::trivial(0),
            Walk::trivial(1),
            walk(vec![a(0)]),
            walk(vec![ai(0)]),
            walk(vec![b(0)]),
            walk(vec![bi(0)]),
            walk(vec![b(0), a(0)]),
            walk(vec![ai(0), bi(0)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn enumerate_strings_counts() {
        // n+1 trivial, 2 cycles, 2·n(n+1) alternating
        for n in 1..=6 {
            let count = enumerate_strings(n).unwrap().len();
            assert_eq!(count, (n + 1) + 2 + 2 * n * (n + 1), "n = {n}");
        }
    }

    #[test]
    fn strings_closed_under_star() {
        for n in 1..=6 {
            let q = build_quiver(n).unwrap();
            for w in enumerate_strings(n).unwrap() {
                assert!(is_string(&w.star(), &q), "star of {w} at n = {n}");
            }
        }
    }

    #[test]
    fn only_cycles_contain_long_paths() {
        for n in 1..=6 {
            let cycle = walk(vec![b(n - 1), a(n - 1)]);
            let cycle_star = cycle.star();
            for w in enumerate_strings(n).unwrap() {
                if w.len() < 2 || w == cycle || w == cycle_star {
                    continue;
                }
                assert!(w.is_alternating(), "non-alternating string {w} at n = {n}");
                for p in w.letters().windows(2) {
                    assert!(p[0].inverted != p[1].inverted);
                }
            }
        }
    }

    #[test]
    fn alternating_strings_have_length_at_most_n() {
        for n in 1..=6 {
            for w in enumerate_strings(n).unwrap() {
                if w.is_alternating() {
                    assert!(w.len() <= n, "{w} too long at n = {n}");
                }
            }
        }
    }

    #[test]
    fn is_band_examples() {
        let q1 = build_quiver(1).unwrap();
        assert!(!is_band(&walk(vec![b(0), a(0)]), &q1)); // w^2 not a string
        assert!(!is_band(&Walk::trivial(0), &q1));
        assert!(!is_band(&walk(vec![a(0), ai(0)]), &q1)); // not reduced
    }

    #[test]
    fn no_bands_up_to_n6() {
        for n in 1..=6 {
            assert!(find_bands(n).unwrap().is_empty(), "n = {n}");
        }
    }

    #[test]
    fn band_bound_is_insensitive() {
        let q = build_quiver(3).unwrap();
        let cycle = walk(vec![b(2), a(2)]);
        for bound in 1..=6 {
            // h = 1 passes for the cycle string, h >= 2 fails
            let verdict = is_band_with_power_bound(&cycle, &q, bound);
            assert_eq!(verdict, bound < 2);
        }
    }
}
