//! Formal characters of modules induced from segment tuples.
//!
//! A character is a finite formal sum of words of contents with positive
//! integer multiplicities; induction corresponds to the shuffle product. Term
//! counts grow multinomially, so the size bound is enforced, not assumed.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::bounds;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::segments::{Content, Multisegment, Segment};

/// A word `γ = γ_1 γ_2 ⋯ γ_n`, each letter standing for `q^{γ_k}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CharWord(pub Vec<Content>);

impl CharWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word `(i, i+1, ..., j)` of a segment.
    pub fn of_segment(s: &Segment) -> CharWord {
        CharWord((s.start()..=s.end()).collect())
    }
}

/// A formal sum of equal-length words with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    terms: BTreeMap<CharWord, u64>,
    length: usize,
}

impl Character {
    /// The character with the single term `w`, multiplicity 1.
    pub fn unit(w: CharWord) -> Character {
        let length = w.len();
        let mut terms = BTreeMap::new();
        terms.insert(w, 1);
        Character { terms, length }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Terms in lexicographic word order.
    pub fn terms(&self) -> impl Iterator<Item = (&CharWord, u64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all multiplicities; for an induced character this is the
    /// multinomial coset count.
    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }

    /// The stored multiplicity of `w`, or zero.
    pub fn multiplicity(&self, w: &CharWord) -> Result<u64> {
        if w.len() != self.length {
            return Err(Error::LengthMismatch {
                expected: self.length,
                got: w.len(),
            });
        }
        Ok(self.terms.get(w).copied().unwrap_or(0))
    }

    /// JSON form `{"length": n, "terms": [{"word": [...], "mult": m}]}`,
    /// terms sorted lexicographically.
    pub fn to_json(&self) -> Value {
        json!({
            "length": self.length,
            "terms": self
                .terms
                .iter()
                .map(|(w, m)| json!({ "word": w.0, "mult": m }))
                .collect::<Vec<_>>(),
        })
    }
}

/// The shuffle product: the bilinear extension of the formal sum over all
/// interleavings of two words.
pub fn shuffle(a: &Character, b: &Character) -> Character {
    let mut terms: BTreeMap<CharWord, u64> = BTreeMap::new();
    for (t, mt) in a.terms() {
        for (u, mu) in b.terms() {
            let mut buf = Vec::with_capacity(t.len() + u.len());
            interleave(&t.0, &u.0, mt * mu, &mut buf, &mut terms);
        }
    }
    Character {
        terms,
        length: a.length + b.length,
    }
}

fn interleave(
    t: &[Content],
    u: &[Content],
    mult: u64,
    buf: &mut Vec<Content>,
    out: &mut BTreeMap<CharWord, u64>,
) {
    if t.is_empty() {
        let mut word = buf.clone();
        word.extend_from_slice(u);
        *out.entry(CharWord(word)).or_insert(0) += mult;
        return;
    }
    if u.is_empty() {
        let mut word = buf.clone();
        word.extend_from_slice(t);
        *out.entry(CharWord(word)).or_insert(0) += mult;
        return;
    }
    buf.push(t[0]);
    interleave(&t[1..], u, mult, buf, out);
    buf.pop();
    buf.push(u[0]);
    interleave(t, &u[1..], mult, buf, out);
    buf.pop();
}

/// The character of the module induced from the given segments, in the given
/// order: the iterated shuffle of their single words. The result does not
/// depend on the order.
pub fn char_of_ind(segments: &[Segment]) -> Result<Character> {
    char_of_ind_bounded(segments, bounds::char_bound())
}

pub fn char_of_ind_bounded(segments: &[Segment], bound: usize) -> Result<Character> {
    let n: usize = segments.iter().map(Segment::len).sum();
    if n > bound {
        return Err(Error::BoundExceeded { requested: n, max: bound });
    }
    let mut ch = Character::unit(CharWord::default());
    for s in segments {
        ch = shuffle(&ch, &Character::unit(CharWord::of_segment(s)));
    }
    Ok(ch)
}

fn require_single_end(dj: &Multisegment) -> Result<()> {
    let mut ends = dj.right_order().iter().map(Segment::end);
    match ends.next() {
        None => Ok(()),
        Some(j) => {
            if ends.all(|e| e == j) {
                Ok(())
            } else {
                Err(Error::MalformedSingleEnd(dj.to_string()))
            }
        }
    }
}

/// The weakly increasing staircase word of a single-end multisegment: each
/// content repeated once per segment containing it.
pub fn q_word(dj: &Multisegment) -> Result<CharWord> {
    require_single_end(dj)?;
    let mut word = Vec::with_capacity(dj.n());
    for (c, count) in dj.content_multiset().iter() {
        word.extend(std::iter::repeat_n(c, count as usize));
    }
    Ok(CharWord(word))
}

/// The partition conjugate to the weakly decreasing list of segment lengths
/// of a single-end multisegment.
pub fn beta_of(dj: &Multisegment) -> Result<Partition> {
    require_single_end(dj)?;
    let mut lengths: Vec<u32> = dj.right_order().iter().map(|s| s.len() as u32).collect();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Partition::new(lengths).conjugate())
}

/// `β_1! β_2! ⋯` as a u64.
pub fn beta_factorial(beta: &Partition) -> u64 {
    beta.parts()
        .iter()
        .map(|&p| (1..=p as u64).product::<u64>())
        .product()
}
