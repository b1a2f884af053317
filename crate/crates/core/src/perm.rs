//! Permutations on `0..n`, groups given by generators, orbits and stabilizers.
//!
//! Points are 0-indexed internally. Cycle notation is 1-indexed on input and
//! output, so `"(1 5)(2 4)"` swaps points 0,4 and 1,3.
//!
//! Actions are right actions: `x.then(y)` applies `x` first, and
//! `stabilizer(obj^x) = x^-1 * stabilizer(obj) * x`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use thiserror::Error;

/// Default cap on the number of group elements materialized by closure.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image list is not a bijection on 0..{0}")]
    NotABijection(usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group closure exceeded cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("object references point {point} outside a group of degree {degree}")]
    ActionKindMismatch { point: usize, degree: usize },
    #[error("empty object set")]
    EmptyObjectSet,
    #[error("cannot parse cycle notation {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("induced action is not faithful")]
    NotFaithful,
    #[error("element list is not closed under composition and inverse")]
    NotClosed,
}

/// A permutation of `0..n`, stored by images: point `i` goes to `images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotABijection(n));
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// Builds a permutation from 0-indexed cycles. Cycles need not be disjoint;
    /// they are composed left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut result = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            let mut seen = HashSet::new();
            for (pos, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(PermError::ActionKindMismatch { point: p, degree });
                }
                if !seen.insert(p) {
                    return Err(PermError::NotABijection(degree));
                }
                images[p] = cycle[(pos + 1) % cycle.len()];
            }
            result = result.then(&Permutation::from_images(images)?);
        }
        Ok(result)
    }

    /// Parses 1-indexed cycle notation such as `"(1 5)(2 4)"`, `"(1)"` or the
    /// compact single-digit form `"(345)"`.
    pub fn parse(input: &str, degree: usize) -> Result<Self, PermError> {
        let err = |reason: &str| PermError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = input.trim();
        if trimmed.is_empty() || trimmed == "()" || trimmed == "e" || trimmed == "id" {
            return Ok(Permutation::identity(degree));
        }
        let mut cycles = Vec::new();
        let mut rest = trimmed;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !rest.starts_with('(') {
                return Err(err("expected '('"));
            }
            let close = rest.find(')').ok_or_else(|| err("unclosed '('"))?;
            let body = &rest[1..close];
            rest = &rest[close + 1..];
            let tokens: Vec<&str> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .collect();
            let points: Vec<usize> = if tokens.len() == 1 && tokens[0].len() > 1 {
                // compact form: every digit is a point
                tokens[0]
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| err("non-digit in compact cycle"))
                    })
                    .collect::<Result<_, _>>()?
            } else {
                tokens
                    .iter()
                    .map(|t| t.parse::<usize>().map_err(|_| err("bad point")))
                    .collect::<Result<_, _>>()?
            };
            let mut zero_based = Vec::with_capacity(points.len());
            for p in points {
                if p == 0 || p > degree {
                    return Err(err("point out of range"));
                }
                zero_based.push(p - 1);
            }
            if zero_based.len() > 1 {
                cycles.push(zero_based);
            }
        }
        Permutation::from_cycles(degree, &cycles).map_err(|e| err(&e.to_string()))
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "(1)");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self)
    }
}

/// Something a permutation group can act on.
pub trait Action: Clone + Eq + Hash + Ord {
    fn act(&self, p: &Permutation) -> Self;
    /// Largest point referenced, if any.
    fn max_point(&self) -> Option<usize>;
}

impl Action for usize {
    fn act(&self, p: &Permutation) -> Self {
        p.apply(*self)
    }
    fn max_point(&self) -> Option<usize> {
        Some(*self)
    }
}

/// An unordered set of points, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(pub Vec<usize>);

impl PointSet {
    pub fn new(mut points: Vec<usize>) -> Self {
        points.sort_unstable();
        points.dedup();
        PointSet(points)
    }
}

impl Action for PointSet {
    fn act(&self, p: &Permutation) -> Self {
        PointSet::new(self.0.iter().map(|&x| p.apply(x)).collect())
    }
    fn max_point(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

/// An ordered sequence of points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple(pub Vec<usize>);

impl Action for Tuple {
    fn act(&self, p: &Permutation) -> Self {
        Tuple(self.0.iter().map(|&x| p.apply(x)).collect())
    }
    fn max_point(&self) -> Option<usize> {
        self.0.iter().copied().max()
    }
}

impl<A: Action, B: Action> Action for (A, B) {
    fn act(&self, p: &Permutation) -> Self {
        (self.0.act(p), self.1.act(p))
    }
    fn max_point(&self) -> Option<usize> {
        self.0.max_point().max(self.1.max_point())
    }
}

/// Uniform carrier for the objects the library acts on. Sets are sorted and
/// sequences keep their order, so equal objects always encode identically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ActionObject {
    Point(usize),
    PointSet(PointSet),
    Tuple(Tuple),
    /// A set of arcs (each a vertex sequence), sorted lexicographically.
    ArcSequence(Vec<Vec<usize>>),
    Star(Vec<Vec<usize>>),
    StarPair(Vec<Vec<usize>>, Vec<Vec<usize>>),
    PartitionBlock(PointSet),
}

fn act_arcs(arcs: &[Vec<usize>], p: &Permutation) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = arcs
        .iter()
        .map(|a| a.iter().map(|&x| p.apply(x)).collect())
        .collect();
    out.sort();
    out
}

fn max_arcs(arcs: &[Vec<usize>]) -> Option<usize> {
    arcs.iter().flat_map(|a| a.iter().copied()).max()
}

impl ActionObject {
    pub fn kind(&self) -> &'static str {
        match self {
            ActionObject::Point(_) => "point",
            ActionObject::PointSet(_) => "point-set",
            ActionObject::Tuple(_) => "tuple",
            ActionObject::ArcSequence(_) => "arc-sequence",
            ActionObject::Star(_) => "star",
            ActionObject::StarPair(..) => "star-pair",
            ActionObject::PartitionBlock(_) => "partition-block",
        }
    }

    pub fn arcs(mut arcs: Vec<Vec<usize>>) -> Self {
        arcs.sort();
        arcs.dedup();
        ActionObject::ArcSequence(arcs)
    }
}

impl Action for ActionObject {
    fn act(&self, p: &Permutation) -> Self {
        match self {
            ActionObject::Point(x) => ActionObject::Point(p.apply(*x)),
            ActionObject::PointSet(s) => ActionObject::PointSet(s.act(p)),
            ActionObject::Tuple(t) => ActionObject::Tuple(t.act(p)),
            ActionObject::ArcSequence(a) => ActionObject::ArcSequence(act_arcs(a, p)),
            ActionObject::Star(a) => ActionObject::Star(act_arcs(a, p)),
            ActionObject::StarPair(a, b) => ActionObject::StarPair(act_arcs(a, p), act_arcs(b, p)),
            ActionObject::PartitionBlock(s) => ActionObject::PartitionBlock(s.act(p)),
        }
    }

    fn max_point(&self) -> Option<usize> {
        match self {
            ActionObject::Point(x) => Some(*x),
            ActionObject::PointSet(s) | ActionObject::PartitionBlock(s) => s.max_point(),
            ActionObject::Tuple(t) => t.max_point(),
            ActionObject::ArcSequence(a) | ActionObject::Star(a) => max_arcs(a),
            ActionObject::StarPair(a, b) => max_arcs(a).max(max_arcs(b)),
        }
    }
}

/// Running tally of orbit–stabilizer audits. In builds with debug assertions
/// every [`orbit`] call recounts the stabilizer by filtering and records
/// whether `|orbit| * |stabilizer| = |group|`.
pub mod audit {
    use super::*;

    pub(super) static CHECKED: AtomicUsize = AtomicUsize::new(0);
    pub(super) static VIOLATIONS: AtomicUsize = AtomicUsize::new(0);

    pub fn orbits_checked() -> usize {
        CHECKED.load(Ordering::Relaxed)
    }

    pub fn violations() -> usize {
        VIOLATIONS.load(Ordering::Relaxed)
    }
}

/// A permutation group with its full element list.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: OnceLock<Vec<Permutation>>,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, usize>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

/// Subgroup equality is by sorted element list.
impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.elements.iter().all(|e| other.contains(e))
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        Self::from_elements_unchecked(degree, vec![Permutation::identity(degree)])
    }

    /// Materializes the group generated by `generators` by breadth-first
    /// multiplication, starting from the identity.
    pub fn closure(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut lookup = HashMap::new();
        let mut elements = vec![identity.clone()];
        lookup.insert(identity, 0);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for g in &generators {
                let next = current.then(g);
                if !lookup.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(PermError::ClosureCapExceeded { cap });
                    }
                    lookup.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
        }
        let group = PermGroup {
            degree,
            generators: OnceLock::new(),
            elements,
            lookup,
        };
        let _ = group.generators.set(generators);
        Ok(group)
    }

    /// Wraps an element list already known to be closed.
    pub(crate) fn from_elements_unchecked(degree: usize, elements: Vec<Permutation>) -> Self {
        let lookup = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        PermGroup {
            degree,
            generators: OnceLock::new(),
            elements,
            lookup,
        }
    }

    /// Builds a group from an explicit element list, verifying closure.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self, PermError> {
        let g = Self::from_elements_unchecked(degree, elements);
        if !g.contains(&Permutation::identity(degree)) {
            return Err(PermError::NotClosed);
        }
        for a in &g.elements {
            if a.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: a.degree(),
                });
            }
            if !g.contains(&a.inverse()) {
                return Err(PermError::NotClosed);
            }
        }
        for a in &g.elements {
            for b in &g.elements {
                if !g.contains(&a.then(b)) {
                    return Err(PermError::NotClosed);
                }
            }
        }
        Ok(g)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.lookup.contains_key(p)
    }

    /// Generators as given to [`PermGroup::closure`], or a greedily chosen
    /// generating set for groups built from element lists.
    pub fn generators(&self) -> &[Permutation] {
        self.generators.get_or_init(|| {
            let mut gens: Vec<Permutation> = Vec::new();
            let mut reached: HashSet<Permutation> = HashSet::new();
            reached.insert(Permutation::identity(self.degree));
            for e in &self.elements {
                if reached.contains(e) {
                    continue;
                }
                gens.push(e.clone());
                // re-close: multiply everything reached by every generator
                let mut frontier: Vec<Permutation> = reached.iter().cloned().collect();
                while let Some(x) = frontier.pop() {
                    for g in &gens {
                        let y = x.then(g);
                        if reached.insert(y.clone()) {
                            frontier.push(y);
                        }
                    }
                }
            }
            gens
        })
    }

    /// Elements sorted ascending; the canonical form used for equality.
    pub fn sorted_elements(&self) -> Vec<Permutation> {
        let mut v = self.elements.clone();
        v.sort();
        v
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        let elements = self
            .elements
            .iter()
            .filter(|e| other.contains(e))
            .cloned()
            .collect();
        PermGroup::from_elements_unchecked(self.degree, elements)
    }

    /// Conjugate subgroup `x^-1 * self * x`.
    pub fn conjugate(&self, x: &Permutation) -> PermGroup {
        let inv = x.inverse();
        let elements = self
            .elements
            .iter()
            .map(|e| inv.then(e).then(x))
            .collect();
        PermGroup::from_elements_unchecked(self.degree, elements)
    }

    /// Image of the group under a homomorphism into `Sym(degree)`, given
    /// pointwise by `f`. Elements keep their order; duplicates (from a
    /// non-faithful action) keep their first occurrence.
    pub fn induced<F>(&self, degree: usize, f: F) -> Result<PermGroup, PermError>
    where
        F: Fn(&Permutation) -> Result<Permutation, PermError>,
    {
        let mut elements = Vec::with_capacity(self.order());
        let mut lookup = HashMap::with_capacity(self.order());
        for e in &self.elements {
            let img = f(e)?;
            if img.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: img.degree(),
                });
            }
            if !lookup.contains_key(&img) {
                lookup.insert(img.clone(), elements.len());
                elements.push(img);
            }
        }
        let group = PermGroup {
            degree,
            generators: OnceLock::new(),
            elements,
            lookup,
        };
        if let Some(gens) = self.generators.get() {
            let images: Vec<Permutation> = gens.iter().map(&f).collect::<Result<_, _>>()?;
            let _ = group.generators.set(images);
        }
        Ok(group)
    }

    fn check_object<T: Action>(&self, obj: &T) -> Result<(), PermError> {
        match obj.max_point() {
            Some(p) if p >= self.degree => Err(PermError::ActionKindMismatch {
                point: p,
                degree: self.degree,
            }),
            _ => Ok(()),
        }
    }

    /// Orbit of `seed` by breadth-first application of the generators, in
    /// discovery order.
    pub fn orbit<T: Action>(&self, seed: &T) -> Result<Vec<T>, PermError> {
        self.check_object(seed)?;
        let gens = self.generators();
        let mut seen: HashSet<T> = HashSet::new();
        let mut out = vec![seed.clone()];
        seen.insert(seed.clone());
        let mut queue = VecDeque::from([seed.clone()]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.act(g);
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        if cfg!(debug_assertions) {
            let stab = self.elements.iter().filter(|e| seed.act(e) == *seed).count();
            audit::CHECKED.fetch_add(1, Ordering::Relaxed);
            if out.len() * stab != self.order() {
                audit::VIOLATIONS.fetch_add(1, Ordering::Relaxed);
            }
        }
        Ok(out)
    }

    /// Orbit computed as `{seed^x | x in elements}`, sorted.
    pub fn orbit_by_elements<T: Action>(&self, seed: &T) -> Result<Vec<T>, PermError> {
        self.check_object(seed)?;
        let mut v: Vec<T> = self.elements.iter().map(|e| seed.act(e)).collect();
        v.sort();
        v.dedup();
        Ok(v)
    }

    /// Set-wise stabilizer `{x | obj^x = obj}`.
    pub fn stabilizer<T: Action>(&self, obj: &T) -> Result<PermGroup, PermError> {
        self.check_object(obj)?;
        let elements = self
            .elements
            .iter()
            .filter(|e| obj.act(e) == *obj)
            .cloned()
            .collect();
        Ok(PermGroup::from_elements_unchecked(self.degree, elements))
    }

    /// Kernel of the action on a family of objects.
    pub fn kernel_on<T: Action>(&self, objects: &[T]) -> Result<PermGroup, PermError> {
        for o in objects {
            self.check_object(o)?;
        }
        let elements = self
            .elements
            .iter()
            .filter(|e| objects.iter().all(|o| o.act(e) == *o))
            .cloned()
            .collect();
        Ok(PermGroup::from_elements_unchecked(self.degree, elements))
    }

    /// True iff `objects` (as a set) is a single orbit.
    pub fn is_transitive_on<T: Action>(&self, objects: &[T]) -> Result<bool, PermError> {
        let first = objects.first().ok_or(PermError::EmptyObjectSet)?;
        let target: HashSet<&T> = objects.iter().collect();
        let orbit = self.orbit(first)?;
        Ok(orbit.len() == target.len() && orbit.iter().all(|o| target.contains(o)))
    }

    /// First element (in element order) mapping `from` to `to`.
    pub fn find_mapping<T: Action>(&self, from: &T, to: &T) -> Option<&Permutation> {
        self.elements.iter().find(|e| from.act(e) == *to)
    }
}

/// Cycle-notation strings of the group's elements, sorted.
pub fn element_strings(elements: &[Permutation]) -> Vec<String> {
    let mut v: Vec<String> = elements.iter().map(|e| e.to_string()).collect();
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let z = p("(1 5)(2 4)", 5);
        assert_eq!(z.to_string(), "(1 5)(2 4)");
        assert_eq!(p("(345)", 5).to_string(), "(3 4 5)");
        assert_eq!(p("(543)", 5), p("(3 5 4)", 5));
        assert_eq!(Permutation::identity(5).to_string(), "(1)");
        assert_eq!(p("(1)", 5), Permutation::identity(5));
        assert!(Permutation::parse("(1 6)", 5).is_err());
        assert!(Permutation::parse("1 2", 5).is_err());
    }

    #[test]
    fn compose_inverse() {
        let a = p("(1 2 3 4 5)", 5);
        let b = p("(1 2)", 5);
        assert!(a.then(&a.inverse()).is_identity());
        // right action: apply a then b
        assert_eq!(a.then(&b).apply(0), b.apply(a.apply(0)));
        assert!(!b.is_even());
        assert!(a.is_even());
    }

    #[test]
    fn closure_orders() {
        let trivial = PermGroup::closure(5, vec![Permutation::identity(5)], 10).unwrap();
        assert_eq!(trivial.order(), 1);
        let a5 = PermGroup::closure(5, vec![p("(1 2 3 4 5)", 5), p("(1 2 3)", 5)], 1000).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(a5.elements().iter().all(|e| e.is_even()));
        let err = PermGroup::closure(5, vec![p("(1 2 3 4 5)", 5), p("(1 2)", 5)], 50);
        assert_eq!(err.unwrap_err(), PermError::ClosureCapExceeded { cap: 50 });
        let mismatch = PermGroup::closure(5, vec![Permutation::identity(4)], 10);
        assert!(matches!(mismatch, Err(PermError::DegreeMismatch { .. })));
    }

    #[test]
    fn wreath_order() {
        // Sym(3) wr Sym(2) on points 1..3 | 4..6
        let gens = vec![p("(1 2)", 6), p("(1 2 3)", 6), p("(1 4)(2 5)(3 6)", 6)];
        let g = PermGroup::closure(6, gens, 1000).unwrap();
        assert_eq!(g.order(), 72);
    }

    #[test]
    fn orbit_and_stabilizer() {
        let a5 = PermGroup::closure(5, vec![p("(1 2 3 4 5)", 5), p("(1 2 3)", 5)], 1000).unwrap();
        assert_eq!(a5.orbit(&0usize).unwrap().len(), 5);
        let star = ActionObject::arcs(vec![vec![0, 4], vec![0, 3], vec![0, 2]]);
        let orbit = a5.orbit(&star).unwrap();
        assert_eq!(orbit.len(), 20);
        let stab = a5.stabilizer(&star).unwrap();
        assert_eq!(stab.order() * orbit.len(), 60);
        assert!(matches!(
            a5.orbit(&7usize),
            Err(PermError::ActionKindMismatch { point: 7, degree: 5 })
        ));
    }

    #[test]
    fn transitivity() {
        let a5 = PermGroup::closure(5, vec![p("(1 2 3 4 5)", 5), p("(1 2 3)", 5)], 1000).unwrap();
        let pts: Vec<usize> = (0..5).collect();
        assert!(a5.is_transitive_on(&pts).unwrap());
        let t = PermGroup::trivial(5);
        assert!(!t.is_transitive_on(&[0usize, 1]).unwrap());
        assert!(t.is_transitive_on::<usize>(&[]).is_err());
    }

    #[test]
    fn generators_of_filtered_subgroup() {
        let a5 = PermGroup::closure(5, vec![p("(1 2 3 4 5)", 5), p("(1 2 3)", 5)], 1000).unwrap();
        let stab = a5.stabilizer(&PointSet::new(vec![0, 1])).unwrap();
        assert_eq!(stab.order(), 6);
        let regen = PermGroup::closure(5, stab.generators().to_vec(), 100).unwrap();
        assert_eq!(regen, stab);
    }
}
