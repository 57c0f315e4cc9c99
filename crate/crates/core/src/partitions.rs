//! Partitions, colored Young diagrams, multipartitions, and the conversion
//! maps between level-1 multisegments and colored partitions.
//!
//! A partition colored by `i` has the `(x, y)` box (column `x`, row `y`, both
//! 1-indexed) filled with content `i + x - y`; row `m` of the diagram is the
//! segment `[i-m+1, i-m+mu_m]`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::segments::{Content, Multisegment, Segment, Weight};

/// Default enumeration bound for [`enumerate_partitions`].
pub const PARTITION_ENUM_BOUND: usize = 30;
/// Default enumeration bound for [`enumerate_kleshchev`].
pub const MULTIPARTITION_ENUM_BOUND: usize = 12;

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Panics if the remaining
    /// parts are not weakly decreasing.
    pub fn new<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive: {parts:?}"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The part `mu_y`, zero beyond the length.
    pub fn part(&self, y: usize) -> u32 {
        if y >= 1 && y <= self.parts.len() {
            self.parts[y - 1]
        } else {
            0
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// The transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let parts = (1..=cols)
            .map(|x| self.parts.iter().take_while(|&&p| p as usize >= x).count() as u32)
            .collect::<Vec<_>>();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A box position in a Young diagram, 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoxPos {
    pub row: u32,
    pub col: u32,
}

/// A partition together with an integer color.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredPartition {
    pub shape: Partition,
    pub color: Content,
}

impl ColoredPartition {
    pub fn new(shape: Partition, color: Content) -> Self {
        ColoredPartition { shape, color }
    }

    pub fn empty(color: Content) -> Self {
        ColoredPartition::new(Partition::empty(), color)
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Content of the box in row `y`, column `x`.
    pub fn content_at(&self, y: u32, x: u32) -> Content {
        self.color + x as Content - y as Content
    }

    /// Boxes whose removal leaves a partition, keyed by content. Per content
    /// there is at most one.
    pub fn removable_boxes(&self) -> BTreeMap<Content, BoxPos> {
        let mut out = BTreeMap::new();
        let parts = self.shape.parts();
        for (y0, &p) in parts.iter().enumerate() {
            let y = (y0 + 1) as u32;
            let below = parts.get(y0 + 1).copied().unwrap_or(0);
            if p > below {
                let pos = BoxPos { row: y, col: p };
                out.insert(self.content_at(y, p), pos);
            }
        }
        out
    }

    /// Positions where a box may be added, keyed by content. Per content
    /// there is at most one, and never a removable box of the same content.
    pub fn addable_boxes(&self) -> BTreeMap<Content, BoxPos> {
        let mut out = BTreeMap::new();
        let parts = self.shape.parts();
        for y0 in 0..parts.len() {
            let y = (y0 + 1) as u32;
            let above = if y0 == 0 { u32::MAX } else { parts[y0 - 1] };
            if above > parts[y0] {
                let col = parts[y0] + 1;
                out.insert(self.content_at(y, col), BoxPos { row: y, col });
            }
        }
        let y = (parts.len() + 1) as u32;
        out.insert(self.content_at(y, 1), BoxPos { row: y, col: 1 });
        out
    }

    /// Removes the removable box of content `j`, if any.
    pub fn remove_box(&self, j: Content) -> Option<ColoredPartition> {
        let pos = self.removable_boxes().remove(&j)?;
        let mut parts = self.shape.parts().to_vec();
        parts[(pos.row - 1) as usize] -= 1;
        Some(ColoredPartition::new(Partition::new(parts), self.color))
    }

    /// Adds a box at the addable position of content `j`, if any.
    pub fn add_box(&self, j: Content) -> Option<ColoredPartition> {
        let pos = self.addable_boxes().remove(&j)?;
        let mut parts = self.shape.parts().to_vec();
        if (pos.row - 1) as usize == parts.len() {
            parts.push(1);
        } else {
            parts[(pos.row - 1) as usize] += 1;
        }
        Some(ColoredPartition::new(Partition::new(parts), self.color))
    }

    /// The multisegment with one segment per row: row `m` gives
    /// `[i-m+1, i-m+mu_m]`.
    pub fn to_multisegment(&self) -> Multisegment {
        let i = self.color;
        self.shape
            .parts()
            .iter()
            .enumerate()
            .map(|(m0, &p)| {
                let m = (m0 + 1) as Content;
                Segment::new(i - m + 1, i - m + p as Content)
            })
            .collect()
    }

    /// Canonical label, e.g. `(3,1|0)`.
    pub fn label(&self) -> String {
        format!(
            "({}|{})",
            self.shape
                .parts()
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(","),
            self.color
        )
    }

    /// JSON form `{"parts": [..], "color": i}`.
    pub fn to_json(&self) -> Value {
        json!({ "parts": self.shape.parts(), "color": self.color })
    }

    pub fn from_json(v: &Value) -> Option<ColoredPartition> {
        let color = v.get("color")?.as_i64()?;
        let parts = parse_parts(v.get("parts")?)?;
        Some(ColoredPartition::new(parts, color))
    }
}

fn parse_parts(v: &Value) -> Option<Partition> {
    let arr = v.as_array()?;
    let mut parts = Vec::with_capacity(arr.len());
    for p in arr {
        let p = p.as_u64()?;
        parts.push(u32::try_from(p).ok()?);
    }
    if !parts.iter().all(|&p| p > 0) || !parts.windows(2).all(|w| w[0] >= w[1]) {
        return None;
    }
    Some(Partition::new(parts))
}

/// Converts a level-1 multisegment back to its colored partition: starts must
/// be `i, i-1, ..., i-k+1` (consecutive, each once) with strictly decreasing
/// ends.
pub fn mu_of_level1(d: &Multisegment) -> Result<ColoredPartition> {
    if d.is_empty() {
        return Err(Error::MalformedLevel1("empty multisegment has no color".into()));
    }
    let segs = d.right_order();
    let i = segs[0].start();
    let mut parts = Vec::with_capacity(segs.len());
    let mut prev_end = None;
    for (m0, s) in segs.iter().enumerate() {
        let expected_start = i - m0 as Content;
        if s.start() != expected_start {
            return Err(Error::MalformedLevel1(format!(
                "start {} at position {} (expected {})",
                s.start(),
                m0 + 1,
                expected_start
            )));
        }
        if let Some(prev) = prev_end {
            if s.end() >= prev {
                return Err(Error::MalformedLevel1(format!(
                    "ends not strictly decreasing: {} then {}",
                    prev,
                    s.end()
                )));
            }
        }
        prev_end = Some(s.end());
        parts.push((s.end() - i + m0 as Content + 1) as u32);
    }
    Ok(ColoredPartition::new(Partition::new(parts), i))
}

/// An ordered tuple of colored partitions with weakly decreasing colors
/// `i_1 >= i_2 >= ... >= i_r`; equal colors keep their given relative order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multipartition {
    components: Vec<ColoredPartition>,
}

impl Multipartition {
    /// Builds a multipartition, stably sorting components by color descending.
    pub fn new<I: IntoIterator<Item = ColoredPartition>>(components: I) -> Self {
        let mut components: Vec<ColoredPartition> = components.into_iter().collect();
        components.sort_by_key(|c| std::cmp::Reverse(c.color));
        Multipartition { components }
    }

    /// The empty multipartition colored by `lambda`.
    pub fn empty(lambda: &Weight) -> Self {
        Multipartition {
            components: lambda
                .components()
                .into_iter()
                .map(ColoredPartition::empty)
                .collect(),
        }
    }

    pub fn components(&self) -> &[ColoredPartition] {
        &self.components
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.components.iter().map(ColoredPartition::size).sum()
    }

    /// The weight whose components are the colors in order.
    pub fn lambda(&self) -> Weight {
        Weight::from_colors(self.components.iter().map(|c| c.color))
    }

    /// Multiset union of the per-component conversions.
    pub fn to_multisegment(&self) -> Multisegment {
        self.components
            .iter()
            .map(ColoredPartition::to_multisegment)
            .fold(Multisegment::empty(), |acc, d| acc.union(&d))
    }

    pub fn with_component(&self, idx: usize, repl: ColoredPartition) -> Multipartition {
        let mut components = self.components.clone();
        assert_eq!(components[idx].color, repl.color);
        components[idx] = repl;
        Multipartition { components }
    }

    /// Canonical label: concatenated component labels, `∅` for level 0.
    pub fn label(&self) -> String {
        if self.components.is_empty() {
            "∅".to_string()
        } else {
            self.components.iter().map(ColoredPartition::label).collect()
        }
    }

    /// JSON form `{"components": [{"color": i, "parts": [..]}], "lambda": [..]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "components": self
                .components
                .iter()
                .map(|c| json!({ "color": c.color, "parts": c.shape.parts() }))
                .collect::<Vec<_>>(),
            "lambda": self.lambda().components(),
        })
    }

    /// Parses the JSON form; a `lambda` field, when present, must agree with
    /// the component colors.
    pub fn from_json(v: &Value) -> Option<Multipartition> {
        let arr = v.get("components")?.as_array()?;
        let mut components = Vec::with_capacity(arr.len());
        for c in arr {
            let color = c.get("color")?.as_i64()?;
            let parts = parse_parts(c.get("parts")?)?;
            components.push(ColoredPartition::new(parts, color));
        }
        let mp = Multipartition::new(components);
        if let Some(lam) = v.get("lambda") {
            if Weight::from_json(lam)? != mp.lambda() {
                return None;
            }
        }
        Some(mp)
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The Kleshchev condition: `mu^(t)_{i_t - i_{t+1} + x} <= mu^(t+1)_x` for all
/// `x >= 1` and `1 <= t <= r-1`, with parts beyond the length read as zero.
pub fn is_kleshchev(mp: &Multipartition) -> bool {
    let comps = mp.components();
    comps.windows(2).all(|w| {
        let shift = w[0].color - w[1].color;
        debug_assert!(shift >= 0);
        let upper = &w[0].shape;
        let lower = &w[1].shape;
        (1..=upper.len())
            .filter_map(|row| {
                let x = row as i64 - shift;
                (x >= 1).then_some((row, x as usize))
            })
            .all(|(row, x)| upper.part(row) <= lower.part(x))
    })
}

/// All partitions of exactly `n`, in lexicographic order of their part lists.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    enumerate_partitions_bounded(n, PARTITION_ENUM_BOUND)
}

pub fn enumerate_partitions_bounded(n: usize, bound: usize) -> Result<Vec<Partition>> {
    if n > bound {
        return Err(Error::BoundExceeded { requested: n, max: bound });
    }
    // build parts weakly decreasing, largest part chosen first
    let mut raw: Vec<Vec<u32>> = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    fn rec(remaining: usize, max_part: usize, stack: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(stack.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            stack.push(part as u32);
            rec(remaining - part, part, stack, out);
            stack.pop();
        }
    }
    rec(n, n, &mut stack, &mut raw);
    let mut out: Vec<Partition> = raw.into_iter().map(Partition::new).collect();
    out.sort();
    Ok(out)
}

/// All `lambda`-colored multipartitions of total size `n` passing
/// [`is_kleshchev`], in a deterministic order.
pub fn enumerate_kleshchev(lambda: &Weight, n: usize) -> Result<Vec<Multipartition>> {
    enumerate_kleshchev_bounded(lambda, n, MULTIPARTITION_ENUM_BOUND)
}

pub fn enumerate_kleshchev_bounded(
    lambda: &Weight,
    n: usize,
    bound: usize,
) -> Result<Vec<Multipartition>> {
    if n > bound {
        return Err(Error::BoundExceeded { requested: n, max: bound });
    }
    let colors = lambda.components();
    let r = colors.len();
    if r == 0 {
        return Ok(if n == 0 {
            vec![Multipartition::default()]
        } else {
            vec![]
        });
    }
    let mut out = Vec::new();
    let mut current: Vec<ColoredPartition> = Vec::with_capacity(r);
    fn rec(
        colors: &[Content],
        idx: usize,
        remaining: usize,
        current: &mut Vec<ColoredPartition>,
        out: &mut Vec<Multipartition>,
    ) {
        if idx == colors.len() {
            if remaining == 0 {
                let mp = Multipartition {
                    components: current.clone(),
                };
                if is_kleshchev(&mp) {
                    out.push(mp);
                }
            }
            return;
        }
        let leftover_components = colors.len() - idx - 1;
        for k in 0..=remaining {
            if leftover_components == 0 && k != remaining {
                continue;
            }
            for shape in enumerate_partitions_bounded(k, usize::MAX).expect("unbounded") {
                current.push(ColoredPartition::new(shape, colors[idx]));
                rec(colors, idx + 1, remaining - k, current, out);
                current.pop();
            }
        }
    }
    rec(&colors, 0, n, &mut current, &mut out);
    Ok(out)
}
