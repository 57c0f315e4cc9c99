//! Segments, multisegments, the two total orders, and weights.
//!
//! A segment `[i,j]` is the integer interval from `i` to `j` (`i <= j`); a
//! multisegment is a finite multiset of segments. Contents are plain integers:
//! no modular reduction is ever applied. The empty segment `[j, j-1]` is
//! represented by absence and never stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

/// A content, i.e. an exponent `i` standing for `q^i`. Any integer is valid.
pub type Content = i64;

/// The integer interval `[start, end]` with `start <= end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    start: Content,
    end: Content,
}

impl Segment {
    /// Creates `[start, end]`. Panics if `start > end`; use [`Segment::try_new`]
    /// when the interval may be empty.
    pub fn new(start: Content, end: Content) -> Self {
        assert!(start <= end, "empty segment [{start},{end}] may not be stored");
        Segment { start, end }
    }

    /// Creates `[start, end]`, or `None` if the interval is empty.
    pub fn try_new(start: Content, end: Content) -> Option<Self> {
        (start <= end).then_some(Segment { start, end })
    }

    pub fn start(&self) -> Content {
        self.start
    }

    pub fn end(&self) -> Content {
        self.end
    }

    /// Number of contents in the interval; at least 1, since empty segments
    /// are never constructed.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        (self.end - self.start + 1) as usize
    }

    pub fn contains(&self, c: Content) -> bool {
        self.start <= c && c <= self.end
    }

    /// Right order: greater means earlier in a right-ordered listing.
    /// `[i1,j1]` precedes `[i2,j2]` if `i1 > i2`, or `i1 = i2` and `j1 < j2`.
    pub fn right_cmp(&self, other: &Segment) -> Ordering {
        other
            .start
            .cmp(&self.start)
            .then(self.end.cmp(&other.end))
    }

    /// Left order: `[i1,j1]` precedes `[i2,j2]` if `j1 > j2`, or `j1 = j2`
    /// and `i1 < i2`.
    pub fn left_cmp(&self, other: &Segment) -> Ordering {
        other.end.cmp(&self.end).then(self.start.cmp(&other.start))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

/// A finite multiset of segments, stored canonically in right order.
///
/// Two multisegments are equal iff their canonical forms are identical, so
/// the derived `Eq`/`Hash` implement multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multisegment {
    segs: Vec<Segment>,
}

impl Multisegment {
    pub fn empty() -> Self {
        Multisegment::default()
    }

    pub fn is_empty(&self) -> bool {
        self.segs.is_empty()
    }

    /// Total size `n`: the sum of segment lengths.
    pub fn n(&self) -> usize {
        self.segs.iter().map(Segment::len).sum()
    }

    /// Number of segments `m`.
    pub fn m(&self) -> usize {
        self.segs.len()
    }

    /// Segments in right order (the canonical storage order).
    pub fn right_order(&self) -> &[Segment] {
        &self.segs
    }

    /// Segments in left order, computed on demand.
    pub fn left_order(&self) -> Vec<Segment> {
        let mut v = self.segs.clone();
        v.sort_by(Segment::left_cmp);
        v
    }

    /// The sub-multiset of segments with end `j`.
    pub fn group_by_end(&self, j: Content) -> Multisegment {
        self.segs.iter().filter(|s| s.end == j).copied().collect()
    }

    /// Counts, per content, how many segments contain it.
    pub fn content_multiset(&self) -> ContentMultiset {
        let mut counts = ContentMultiset::default();
        for s in &self.segs {
            for c in s.start..=s.end {
                counts.add(c, 1);
            }
        }
        counts
    }

    /// Adds one segment, keeping the canonical order.
    pub fn insert(&mut self, s: Segment) {
        let pos = self.segs.partition_point(|t| t.right_cmp(&s) != Ordering::Greater);
        self.segs.insert(pos, s);
    }

    /// Removes one copy of `s`; returns whether a copy was present.
    pub fn remove(&mut self, s: &Segment) -> bool {
        match self.segs.iter().position(|t| t == s) {
            Some(idx) => {
                self.segs.remove(idx);
                true
            }
            None => false,
        }
    }

    /// Multiset union.
    pub fn union(&self, other: &Multisegment) -> Multisegment {
        self.segs.iter().chain(other.segs.iter()).copied().collect()
    }

    /// Replaces the segment at `idx` (right-order position) with `repl`, or
    /// deletes it when `repl` is `None`. Re-canonicalizes.
    pub(crate) fn with_replaced(&self, idx: usize, repl: Option<Segment>) -> Multisegment {
        let mut segs = self.segs.clone();
        match repl {
            Some(s) => segs[idx] = s,
            None => {
                segs.remove(idx);
            }
        }
        segs.into_iter().collect()
    }

    /// Canonical label: segments in right order joined by `+`, or `∅`.
    pub fn label(&self) -> String {
        if self.segs.is_empty() {
            "∅".to_string()
        } else {
            self.segs
                .iter()
                .map(Segment::to_string)
                .collect::<Vec<_>>()
                .join("+")
        }
    }

    /// JSON form `{"segments": [[i, j], ...]}` in right order.
    pub fn to_json(&self) -> Value {
        json!({
            "segments": self.segs.iter().map(|s| json!([s.start, s.end])).collect::<Vec<_>>()
        })
    }

    /// Parses `{"segments": [[i, j], ...]}`; input order is irrelevant.
    pub fn from_json(v: &Value) -> Option<Multisegment> {
        let arr = v.get("segments")?.as_array()?;
        let mut segs = Vec::with_capacity(arr.len());
        for pair in arr {
            let pair = pair.as_array()?;
            if pair.len() != 2 {
                return None;
            }
            let start = pair[0].as_i64()?;
            let end = pair[1].as_i64()?;
            segs.push(Segment::try_new(start, end)?);
        }
        Some(segs.into_iter().collect())
    }
}

impl FromIterator<Segment> for Multisegment {
    fn from_iter<T: IntoIterator<Item = Segment>>(iter: T) -> Self {
        let mut segs: Vec<Segment> = iter.into_iter().collect();
        segs.sort_by(Segment::right_cmp);
        Multisegment { segs }
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A weight `λ = Σ m_i Λ_i` with non-negative multiplicities `m_i`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Weight {
    mults: BTreeMap<Content, u32>,
}

impl Weight {
    pub fn zero() -> Self {
        Weight::default()
    }

    /// Builds a weight from a list of colors with multiplicity, in any order.
    pub fn from_colors<I: IntoIterator<Item = Content>>(colors: I) -> Self {
        let mut mults = BTreeMap::new();
        for c in colors {
            *mults.entry(c).or_insert(0) += 1;
        }
        Weight { mults }
    }

    /// Builds a weight from `(color, multiplicity)` pairs, dropping zeros.
    pub fn from_multiplicities<I: IntoIterator<Item = (Content, u32)>>(pairs: I) -> Self {
        let mut mults = BTreeMap::new();
        for (c, m) in pairs {
            if m > 0 {
                *mults.entry(c).or_insert(0) += m;
            }
        }
        Weight { mults }
    }

    /// The multiplicity `m_i` of `Λ_i`.
    pub fn multiplicity(&self, i: Content) -> u32 {
        self.mults.get(&i).copied().unwrap_or(0)
    }

    /// The level `r = Σ m_i`.
    pub fn level(&self) -> u32 {
        self.mults.values().sum()
    }

    /// Colors `i_1 >= i_2 >= ... >= i_r`, each repeated `m_i` times.
    pub fn components(&self) -> Vec<Content> {
        let mut v = Vec::with_capacity(self.level() as usize);
        for (&c, &m) in self.mults.iter().rev() {
            v.extend(std::iter::repeat_n(c, m as usize));
        }
        v
    }

    /// Supported colors with nonzero multiplicity, ascending.
    pub fn support(&self) -> Vec<Content> {
        self.mults.keys().copied().collect()
    }

    pub fn min_color(&self) -> Option<Content> {
        self.mults.keys().next().copied()
    }

    pub fn max_color(&self) -> Option<Content> {
        self.mults.keys().next_back().copied()
    }

    /// JSON form `{"lambda": [i_1, i_2, ...]}` sorted descending.
    pub fn to_json(&self) -> Value {
        json!({ "lambda": self.components() })
    }

    /// Parses either `{"lambda": [...]}` or a bare color array.
    pub fn from_json(v: &Value) -> Option<Weight> {
        let arr = match v {
            Value::Array(a) => a,
            _ => v.get("lambda")?.as_array()?,
        };
        let mut colors = Vec::with_capacity(arr.len());
        for c in arr {
            colors.push(c.as_i64()?);
        }
        Some(Weight::from_colors(colors))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .mults
            .iter()
            .rev()
            .map(|(c, m)| {
                if *m == 1 {
                    format!("Λ_{c}")
                } else {
                    format!("{m}Λ_{c}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A multiset of contents, used for weight bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ContentMultiset {
    counts: BTreeMap<Content, u64>,
}

impl ContentMultiset {
    pub fn add(&mut self, c: Content, k: u64) {
        if k > 0 {
            *self.counts.entry(c).or_insert(0) += k;
        }
    }

    /// Removes `k` copies of `c`; returns false if fewer than `k` are present.
    pub fn remove(&mut self, c: Content, k: u64) -> bool {
        match self.counts.get_mut(&c) {
            Some(n) if *n >= k => {
                *n -= k;
                if *n == 0 {
                    self.counts.remove(&c);
                }
                true
            }
            _ => false,
        }
    }

    pub fn count(&self, c: Content) -> u64 {
        self.counts.get(&c).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Content, u64)> + '_ {
        self.counts.iter().map(|(&c, &n)| (c, n))
    }

    pub fn union(&self, other: &ContentMultiset) -> ContentMultiset {
        let mut out = self.clone();
        for (c, n) in other.iter() {
            out.add(c, n);
        }
        out
    }
}
