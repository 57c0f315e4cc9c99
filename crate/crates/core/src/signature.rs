//! The ± word reduction engine shared by all three crystal realizations.
//!
//! Every crystal rule in this crate is an instance of the same procedure:
//! write a word of `-`, `+`, and blank symbols, one per item, cancel adjacent
//! pairs transitively (ignoring blanks and previously canceled symbols), and
//! read off the uncanceled symbols. `MinusPlus` cancels `-+` and leaves
//! `++…+--…-`; `PlusMinus` cancels `+-` and leaves `--…-++…+`.

/// The symbol an item contributes to a signature word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Minus,
    Plus,
    Blank,
}

/// One token: a symbol plus an opaque id pointing back at the contributing
/// item (segment index, multipartition component, tensor factor).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignatureToken {
    pub kind: TokenKind,
    pub item: usize,
}

impl SignatureToken {
    pub fn new(kind: TokenKind, item: usize) -> Self {
        SignatureToken { kind, item }
    }
}

/// An ordered word of tokens.
#[derive(Debug, Clone, Default)]
pub struct SignatureWord {
    pub tokens: Vec<SignatureToken>,
}

impl SignatureWord {
    pub fn new(tokens: Vec<SignatureToken>) -> Self {
        SignatureWord { tokens }
    }

    pub fn push(&mut self, kind: TokenKind, item: usize) {
        self.tokens.push(SignatureToken::new(kind, item));
    }
}

/// Which adjacent pair cancels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CancelPattern {
    /// Cancel `-+`; reduced shape is `+*-*`.
    MinusPlus,
    /// Cancel `+-`; reduced shape is `-*+*`.
    PlusMinus,
}

/// The uncanceled symbols of a reduced word, as item ids in word order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedSignature {
    pub uncanceled_minus: Vec<usize>,
    pub uncanceled_plus: Vec<usize>,
}

impl ReducedSignature {
    pub fn eps(&self) -> usize {
        self.uncanceled_minus.len()
    }

    pub fn phi(&self) -> usize {
        self.uncanceled_plus.len()
    }

    pub fn leftmost_minus(&self) -> Option<usize> {
        self.uncanceled_minus.first().copied()
    }

    pub fn rightmost_minus(&self) -> Option<usize> {
        self.uncanceled_minus.last().copied()
    }

    pub fn leftmost_plus(&self) -> Option<usize> {
        self.uncanceled_plus.first().copied()
    }

    pub fn rightmost_plus(&self) -> Option<usize> {
        self.uncanceled_plus.last().copied()
    }
}

/// Reduces a word in one left-to-right pass with a stack of open symbols.
///
/// For `MinusPlus`, a minus is pushed as open and a plus cancels the most
/// recent open minus, else is recorded uncanceled; `PlusMinus` is the mirror
/// image. Blanks never participate. The result equals repeated full-scan
/// cancellation to fixpoint.
pub fn reduce(word: &SignatureWord, pattern: CancelPattern) -> ReducedSignature {
    let (open_kind, closing_kind) = match pattern {
        CancelPattern::MinusPlus => (TokenKind::Minus, TokenKind::Plus),
        CancelPattern::PlusMinus => (TokenKind::Plus, TokenKind::Minus),
    };
    let mut open: Vec<usize> = Vec::new();
    let mut closing_uncanceled: Vec<usize> = Vec::new();
    for tok in &word.tokens {
        if tok.kind == open_kind {
            open.push(tok.item);
        } else if tok.kind == closing_kind && open.pop().is_none() {
            closing_uncanceled.push(tok.item);
        }
    }
    match pattern {
        CancelPattern::MinusPlus => ReducedSignature {
            uncanceled_minus: open,
            uncanceled_plus: closing_uncanceled,
        },
        CancelPattern::PlusMinus => ReducedSignature {
            uncanceled_minus: closing_uncanceled,
            uncanceled_plus: open,
        },
    }
}
