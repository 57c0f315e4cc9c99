//! Generic crystal elements and tensor products in the reversed convention.
//!
//! In the reversed convention `B_1 ⊗* B_2 = B_2 ⊗ B_1`. For an r-fold product
//! the operators run on one flat signature word: factor `k` contributes
//! `phi_i(b_k)` plus symbols followed by `eps_i(b_k)` minus symbols, factors
//! concatenated left to right, cancelling `-+`. `E` acts on the factor owning
//! the leftmost uncanceled `-`, `F` on the one owning the rightmost
//! uncanceled `+`. For r = 2 this is: `E` acts on the left factor exactly
//! when `eps_i(b_1) > phi_i(b_2)`, and `F` exactly when
//! `eps_i(b_1) >= phi_i(b_2)`. The standard (unreversed) convention is kept
//! alongside for cross-checking.

use crate::partitions::{ColoredPartition, Multipartition};
use crate::segments::{Content, ContentMultiset, Multisegment};
use crate::signature::{reduce, CancelPattern, SignatureWord, TokenKind};
use crate::{mp_crystal, seg_crystal, signature::ReducedSignature};

/// An element of an abstract crystal: statistics, partial operators, and a
/// canonical label.
pub trait CrystalElement: Clone + Eq + std::hash::Hash {
    fn eps(&self, i: Content) -> usize;
    fn phi(&self, i: Content) -> usize;
    fn e(&self, i: Content) -> Option<Self>;
    fn f(&self, i: Content) -> Option<Self>;
    /// Number of boxes / total segment length.
    fn size(&self) -> usize;
    fn weight(&self) -> ContentMultiset;
    fn label(&self) -> String;
}

/// The level-1 crystal: all partitions colored by a fixed integer.
impl CrystalElement for ColoredPartition {
    fn eps(&self, i: Content) -> usize {
        usize::from(self.removable_boxes().contains_key(&i))
    }

    fn phi(&self, i: Content) -> usize {
        usize::from(self.addable_boxes().contains_key(&i))
    }

    fn e(&self, i: Content) -> Option<Self> {
        self.remove_box(i)
    }

    fn f(&self, i: Content) -> Option<Self> {
        self.add_box(i)
    }

    fn size(&self) -> usize {
        ColoredPartition::size(self)
    }

    fn weight(&self) -> ContentMultiset {
        self.to_multisegment().content_multiset()
    }

    fn label(&self) -> String {
        ColoredPartition::label(self)
    }
}

impl CrystalElement for Multisegment {
    fn eps(&self, i: Content) -> usize {
        seg_crystal::eps(self, i)
    }

    fn phi(&self, i: Content) -> usize {
        seg_crystal::phi(self, i)
    }

    fn e(&self, i: Content) -> Option<Self> {
        seg_crystal::apply_e(self, i)
    }

    fn f(&self, i: Content) -> Option<Self> {
        Some(seg_crystal::apply_f(self, i))
    }

    fn size(&self) -> usize {
        self.n()
    }

    fn weight(&self) -> ContentMultiset {
        self.content_multiset()
    }

    fn label(&self) -> String {
        Multisegment::label(self)
    }
}

impl CrystalElement for Multipartition {
    fn eps(&self, i: Content) -> usize {
        mp_crystal::eps_mp(self, i)
    }

    fn phi(&self, i: Content) -> usize {
        mp_crystal::phi_mp(self, i)
    }

    fn e(&self, i: Content) -> Option<Self> {
        mp_crystal::apply_e_mp(self, i)
    }

    fn f(&self, i: Content) -> Option<Self> {
        mp_crystal::apply_f_mp(self, i)
    }

    fn size(&self) -> usize {
        Multipartition::size(self)
    }

    fn weight(&self) -> ContentMultiset {
        self.to_multisegment().content_multiset()
    }

    fn label(&self) -> String {
        Multipartition::label(self)
    }
}

/// `b_1 ⊗* b_2 ⊗* … ⊗* b_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorElement<B: CrystalElement> {
    factors: Vec<B>,
}

impl<B: CrystalElement> TensorElement<B> {
    pub fn new(factors: Vec<B>) -> Self {
        TensorElement { factors }
    }

    pub fn factors(&self) -> &[B] {
        &self.factors
    }

    pub fn reversed(&self) -> TensorElement<B> {
        let mut factors = self.factors.clone();
        factors.reverse();
        TensorElement { factors }
    }

    fn with_factor(&self, idx: usize, repl: B) -> TensorElement<B> {
        let mut factors = self.factors.clone();
        factors[idx] = repl;
        TensorElement { factors }
    }

    fn reversed_word(&self, i: Content) -> SignatureWord {
        let mut w = SignatureWord::default();
        for (idx, b) in self.factors.iter().enumerate() {
            for _ in 0..b.phi(i) {
                w.push(TokenKind::Plus, idx);
            }
            for _ in 0..b.eps(i) {
                w.push(TokenKind::Minus, idx);
            }
        }
        w
    }

    fn standard_word(&self, i: Content) -> SignatureWord {
        let mut w = SignatureWord::default();
        for (idx, b) in self.factors.iter().enumerate() {
            for _ in 0..b.eps(i) {
                w.push(TokenKind::Minus, idx);
            }
            for _ in 0..b.phi(i) {
                w.push(TokenKind::Plus, idx);
            }
        }
        w
    }

    fn reduced(&self, i: Content) -> ReducedSignature {
        reduce(&self.reversed_word(i), CancelPattern::MinusPlus)
    }
}

/// `E_i` in the reversed convention.
pub fn tensor_e<B: CrystalElement>(t: &TensorElement<B>, i: Content) -> Option<TensorElement<B>> {
    let idx = t.reduced(i).leftmost_minus()?;
    let repl = t.factors[idx].e(i).expect("uncanceled - implies eps > 0");
    Some(t.with_factor(idx, repl))
}

/// `F_i` in the reversed convention.
pub fn tensor_f<B: CrystalElement>(t: &TensorElement<B>, i: Content) -> Option<TensorElement<B>> {
    let idx = t.reduced(i).rightmost_plus()?;
    let repl = t.factors[idx].f(i).expect("uncanceled + implies phi > 0");
    Some(t.with_factor(idx, repl))
}

/// `E_i` in the standard convention: for r = 2 it acts on the left factor
/// exactly when `phi_i(b_1) >= eps_i(b_2)`.
pub fn tensor_e_std<B: CrystalElement>(
    t: &TensorElement<B>,
    i: Content,
) -> Option<TensorElement<B>> {
    let r = reduce(&t.standard_word(i), CancelPattern::PlusMinus);
    let idx = r.rightmost_minus()?;
    let repl = t.factors[idx].e(i).expect("uncanceled - implies eps > 0");
    Some(t.with_factor(idx, repl))
}

/// `F_i` in the standard convention.
pub fn tensor_f_std<B: CrystalElement>(
    t: &TensorElement<B>,
    i: Content,
) -> Option<TensorElement<B>> {
    let r = reduce(&t.standard_word(i), CancelPattern::PlusMinus);
    let idx = r.leftmost_plus()?;
    let repl = t.factors[idx].f(i).expect("uncanceled + implies phi > 0");
    Some(t.with_factor(idx, repl))
}

impl<B: CrystalElement> CrystalElement for TensorElement<B> {
    fn eps(&self, i: Content) -> usize {
        self.reduced(i).eps()
    }

    fn phi(&self, i: Content) -> usize {
        self.reduced(i).phi()
    }

    fn e(&self, i: Content) -> Option<Self> {
        tensor_e(self, i)
    }

    fn f(&self, i: Content) -> Option<Self> {
        tensor_f(self, i)
    }

    fn size(&self) -> usize {
        self.factors.iter().map(B::size).sum()
    }

    fn weight(&self) -> ContentMultiset {
        self.factors
            .iter()
            .map(B::weight)
            .fold(ContentMultiset::default(), |acc, w| acc.union(&w))
    }

    fn label(&self) -> String {
        if self.factors.is_empty() {
            "∅".to_string()
        } else {
            self.factors.iter().map(B::label).collect()
        }
    }
}
