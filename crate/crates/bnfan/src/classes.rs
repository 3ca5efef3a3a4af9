//! `*`-classes of strings on `(Q(n), I(n))`: the profile function `f_w`, the
//! bijection with the parameter set `{(a, b, η) | 0 ≤ a < b ≤ n, η = ±1}`,
//! and canonical representatives.
//!
//! The canonical representative of an alternating class is the one whose
//! profile is strictly increasing; the canonical cycle representative is
//! `β_{n−1} α_{n−1}`.

use std::fmt;
use std::str::FromStr;

use crate::quiver::{is_string, Arrow, Letter, QuiverPresentation, Walk};
use crate::{Error, Result};

/// Sign parameter of an alternating class: `+1` iff the rightmost letter of
/// the increasing-profile representative is an honest arrow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Eta {
    Minus,
    Plus,
}

impl Eta {
    pub fn flip(self) -> Eta {
        match self {
            Eta::Minus => Eta::Plus,
            Eta::Plus => Eta::Minus,
        }
    }
}

impl fmt::Display for Eta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eta::Minus => write!(f, "-1"),
            Eta::Plus => write!(f, "+1"),
        }
    }
}

/// A `*`-class of strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StringClass {
    /// The trivial walk `ε_i`.
    Trivial(usize),
    /// The class `{β_{n−1} α_{n−1}, α_{n−1}* β_{n−1}*}`.
    Cycle,
    /// Alternating class `(a, b, η)` with `0 ≤ a < b ≤ n`.
    Interval { a: usize, b: usize, eta: Eta },
}

impl StringClass {
    pub fn interval(a: usize, b: usize, eta: Eta) -> Self {
        StringClass::Interval { a, b, eta }
    }

    pub fn is_thin_class(&self) -> bool {
        !matches!(self, StringClass::Cycle)
    }
}

impl fmt::Display for StringClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StringClass::Trivial(i) => write!(f, "S{i}"),
            StringClass::Cycle => write!(f, "cycle"),
            StringClass::Interval { a, b, eta } => write!(f, "({a},{b},{eta})"),
        }
    }
}

impl FromStr for StringClass {
    type Err = Error;

    /// Accepts `S<i>`, `cycle`, or `a,b,eta` with `eta` one of `+1`, `1`, `-1`
    /// (optionally wrapped in parentheses).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.eq_ignore_ascii_case("cycle") {
            return Ok(StringClass::Cycle);
        }
        if let Some(rest) = s.strip_prefix('S').or_else(|| s.strip_prefix('s')) {
            let i = rest
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad trivial class '{s}'")))?;
            return Ok(StringClass::Trivial(i));
        }
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::InvalidParameter(format!(
                "expected 'a,b,eta', 'S<i>' or 'cycle', got '{s}'"
            )));
        }
        let a = parts[0]
            .parse::<usize>()
            .map_err(|_| Error::InvalidParameter(format!("bad a in '{s}'")))?;
        let b = parts[1]
            .parse::<usize>()
            .map_err(|_| Error::InvalidParameter(format!("bad b in '{s}'")))?;
        let eta = match parts[2] {
            "+1" | "1" => Eta::Plus,
            "-1" => Eta::Minus,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "bad eta '{other}' in '{s}'"
                )))
            }
        };
        Ok(StringClass::Interval { a, b, eta })
    }
}

/// The value list of the profile function `f_w`: `f_w(0) = s(w)` and
/// `f_w(j) = t(γ_{m−j+1})`, so the list reads the walk from its source to its
/// target. A trivial walk yields the singleton list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile(pub Vec<usize>);

impl Profile {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|p| p[0] < p[1])
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.0.windows(2).all(|p| p[0] > p[1])
    }

    pub fn is_strictly_monotone(&self) -> bool {
        self.0.len() <= 1 || self.is_strictly_increasing() || self.is_strictly_decreasing()
    }
}

/// Profile of a walk.
pub fn profile(w: &Walk) -> Profile {
    match w {
        Walk::Trivial(i) => Profile(vec![*i]),
        Walk::Seq(letters) => {
            let m = letters.len();
            let mut values = Vec::with_capacity(m + 1);
            values.push(letters[m - 1].source());
            for j in 1..=m {
                values.push(letters[m - j].target());
            }
            Profile(values)
        }
    }
}

fn cycle_walk(n: usize) -> Walk {
    Walk::from_letters(vec![
        Letter::honest(Arrow::beta(n - 1)),
        Letter::honest(Arrow::alpha(n - 1)),
    ])
    .expect("cycle letters chain")
}

/// Class of a string: trivial and cycle strings dispatch to their tags; an
/// alternating string (replaced by its star when its profile decreases) maps
/// to `(f_w(0), f_w(m), η)` with `η = +1` iff `γ_m` is an honest arrow.
pub fn phi(w: &Walk, q: &QuiverPresentation) -> Result<StringClass> {
    if !is_string(w, q) {
        return Err(Error::NotAString(w.to_string()));
    }
    if let Walk::Trivial(i) = w {
        return Ok(StringClass::Trivial(*i));
    }
    let cycle = cycle_walk(q.n());
    if *w == cycle || *w == cycle.star() {
        return Ok(StringClass::Cycle);
    }
    let prof = profile(w);
    let (w, prof) = if prof.is_strictly_increasing() {
        (w.clone(), prof)
    } else {
        let star = w.star();
        let prof = profile(&star);
        (star, prof)
    };
    debug_assert!(prof.is_strictly_increasing());
    let values = prof.values();
    let last = *w.letters().last().unwrap();
    let eta = if last.inverted { Eta::Minus } else { Eta::Plus };
    Ok(StringClass::Interval {
        a: values[0],
        b: *values.last().unwrap(),
        eta,
    })
}

/// Canonical representative of a class on `(Q(n), I(n))`.
///
/// For `(a, b, η)` this is the alternating walk with increasing profile
/// `[a, a+1, …, b]`; the leftmost letter is picked by the four-case table
/// (on `η` and the parity of `b − a`) and kinds alternate from there:
///
/// * `η = +1`, `a ≡₂ b`:  `α_{b−1}* β_{b−2} … α_{a+1}* β_a`
/// * `η = +1`, `a ≢₂ b`:  `β_{b−1} α_{b−2}* … α_{a+1}* β_a`
/// * `η = −1`, `a ≡₂ b`:  `β_{b−1} α_{b−2}* … β_{a+1} α_a*`
/// * `η = −1`, `a ≢₂ b`:  `α_{b−1}* β_{b−2} … β_{a+1} α_a*`
pub fn psi(c: &StringClass, n: usize) -> Result<Walk> {
    match c {
        StringClass::Trivial(i) => {
            if *i > n {
                return Err(Error::InvalidParameter(format!("vertex {i} > n = {n}")));
            }
            Ok(Walk::trivial(*i))
        }
        StringClass::Cycle => {
            if n < 1 {
                return Err(Error::InvalidParameter("cycle requires n >= 1".into()));
            }
            Ok(cycle_walk(n))
        }
        StringClass::Interval { a, b, eta } => {
            if a >= b || *b > n {
                return Err(Error::InvalidParameter(format!(
                    "interval class needs 0 <= a < b <= n, got ({a},{b}) with n = {n}"
                )));
            }
            let same_parity = (a % 2) == (b % 2);
            // leftmost letter kind: true = α*, false = β
            let left_is_alpha_star = match (eta, same_parity) {
                (Eta::Plus, true) => true,
                (Eta::Plus, false) => false,
                (Eta::Minus, true) => false,
                (Eta::Minus, false) => true,
            };
            let m = b - a;
            let mut letters = Vec::with_capacity(m);
            for k in 0..m {
                let index = b - 1 - k;
                let alpha_star = left_is_alpha_star == (k % 2 == 0);
                letters.push(if alpha_star {
                    Letter::inverse(Arrow::alpha(index))
                } else {
                    Letter::honest(Arrow::beta(index))
                });
            }
            Walk::from_letters(letters)
        }
    }
}

/// All `*`-classes for a given `n`: `n+1` trivial classes, the cycle class,
/// and `n(n+1)` interval classes — `(n+1)² + 1` in total.
pub fn star_classes(n: usize) -> Result<Vec<StringClass>> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "star_classes requires n >= 1".into(),
        ));
    }
    let mut out: Vec<StringClass> = (0..=n).map(StringClass::Trivial).collect();
    out.push(StringClass::Cycle);
    for a in 0..n {
        for b in a + 1..=n {
            for eta in [Eta::Minus, Eta::Plus] {
                out.push(StringClass::Interval { a, b, eta });
            }
        }
    }
    Ok(out)
}
