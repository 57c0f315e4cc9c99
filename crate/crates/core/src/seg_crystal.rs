//! Crystal operators and statistics on multisegments.
//!
//! `E_j`/`F_j`/`eps`/`phi` read the right order and look at segment *ends*
//! (`-` for end `j`, `+` for end `j-1`, cancel `-+`). The hatted variants
//! read the left order and look at segment *starts* (`-` for start `i`, `+`
//! for start `i+1`, cancel `+-`). `E`-type operators are partial and return
//! `None` for the zero symbol, which is distinct from the empty multisegment.

use crate::segments::{Content, Multisegment, Segment, Weight};
use crate::signature::{reduce, CancelPattern, ReducedSignature, SignatureWord, TokenKind};

/// Sentinel item id for the virtual empty-segment token used by `F`-operators.
const VIRTUAL: usize = usize::MAX;

fn e_word(d: &Multisegment, j: Content, with_virtual: bool) -> SignatureWord {
    let mut w = SignatureWord::default();
    // the virtual segment [j, j-1] sorts before every real ± token in right order
    if with_virtual {
        w.push(TokenKind::Plus, VIRTUAL);
    }
    for (idx, s) in d.right_order().iter().enumerate() {
        let kind = if s.end() == j {
            TokenKind::Minus
        } else if s.end() == j - 1 {
            TokenKind::Plus
        } else {
            TokenKind::Blank
        };
        w.push(kind, idx);
    }
    w
}

fn e_hat_word(d: &Multisegment, i: Content, with_virtual: bool) -> (SignatureWord, Vec<Segment>) {
    let left = d.left_order();
    let mut w = SignatureWord::default();
    for (idx, s) in left.iter().enumerate() {
        let kind = if s.start() == i {
            TokenKind::Minus
        } else if s.start() == i + 1 {
            TokenKind::Plus
        } else {
            TokenKind::Blank
        };
        w.push(kind, idx);
    }
    // the virtual segment [i+1, i] sorts after every real ± token in left order
    if with_virtual {
        w.push(TokenKind::Plus, VIRTUAL);
    }
    (w, left)
}

fn reduce_e(d: &Multisegment, j: Content) -> ReducedSignature {
    reduce(&e_word(d, j, false), CancelPattern::MinusPlus)
}

fn reduce_e_hat(d: &Multisegment, i: Content) -> (ReducedSignature, Vec<Segment>) {
    let (w, left) = e_hat_word(d, i, false);
    (reduce(&w, CancelPattern::PlusMinus), left)
}

/// Number of uncanceled `-` symbols in the `E_j` word; the number of times
/// `E_j` applies before hitting the zero symbol.
pub fn eps(d: &Multisegment, j: Content) -> usize {
    reduce_e(d, j).eps()
}

/// Number of uncanceled `+` symbols in the `E_j` word (the virtual segment is
/// not counted).
pub fn phi(d: &Multisegment, j: Content) -> usize {
    reduce_e(d, j).phi()
}

/// `E_j`: shortens the segment owning the leftmost uncanceled `-` from end
/// `j` to end `j-1`, deleting it if it becomes empty. `None` if no `-`.
pub fn apply_e(d: &Multisegment, j: Content) -> Option<Multisegment> {
    let idx = reduce_e(d, j).leftmost_minus()?;
    let seg = d.right_order()[idx];
    debug_assert_eq!(seg.end(), j);
    Some(d.with_replaced(idx, Segment::try_new(seg.start(), j - 1)))
}

/// `F_j`: the inverse of `E_j`. Extends the segment owning the rightmost
/// uncanceled `+` from end `j-1` to end `j`; when the rightmost uncanceled
/// `+` is the virtual token for the empty segment `[j, j-1]`, inserts `[j,j]`.
/// Always succeeds.
pub fn apply_f(d: &Multisegment, j: Content) -> Multisegment {
    let r = reduce(&e_word(d, j, true), CancelPattern::MinusPlus);
    let idx = r
        .rightmost_plus()
        .expect("virtual + is leftmost, hence never canceled");
    if idx == VIRTUAL {
        let mut out = d.clone();
        out.insert(Segment::new(j, j));
        out
    } else {
        let seg = d.right_order()[idx];
        debug_assert_eq!(seg.end(), j - 1);
        d.with_replaced(idx, Some(Segment::new(seg.start(), j)))
    }
}

/// Number of uncanceled `-` symbols in the `Ê_i` word.
pub fn eps_hat(d: &Multisegment, i: Content) -> usize {
    reduce_e_hat(d, i).0.eps()
}

/// Number of uncanceled `+` symbols in the `Ê_i` word.
pub fn phi_hat(d: &Multisegment, i: Content) -> usize {
    reduce_e_hat(d, i).0.phi()
}

/// `Ê_i`: replaces the segment `[i, z]` owning the rightmost uncanceled `-`
/// with `[i+1, z]`, deleting it if it becomes empty. `None` if no `-`.
pub fn apply_e_hat(d: &Multisegment, i: Content) -> Option<Multisegment> {
    let (r, left) = reduce_e_hat(d, i);
    let idx = r.rightmost_minus()?;
    let seg = left[idx];
    debug_assert_eq!(seg.start(), i);
    let mut out = d.clone();
    out.remove(&seg);
    if let Some(repl) = Segment::try_new(i + 1, seg.end()) {
        out.insert(repl);
    }
    Some(out)
}

/// `F̂_i`: the inverse of `Ê_i`. Replaces the segment `[i+1, z]` owning the
/// leftmost uncanceled `+` with `[i, z]`; when that is the virtual token for
/// `[i+1, i]`, inserts `[i, i]`. Always succeeds.
pub fn apply_f_hat(d: &Multisegment, i: Content) -> Multisegment {
    let (w, left) = e_hat_word(d, i, true);
    let r = reduce(&w, CancelPattern::PlusMinus);
    let idx = r
        .leftmost_plus()
        .expect("virtual + is rightmost, hence never canceled");
    let mut out = d.clone();
    if idx == VIRTUAL {
        out.insert(Segment::new(i, i));
    } else {
        let seg = left[idx];
        debug_assert_eq!(seg.start(), i + 1);
        out.remove(&seg);
        out.insert(Segment::new(i, seg.end()));
    }
    out
}

/// True iff `eps_hat(d, i) <= m_i` for every content `i`; contents outside
/// the support of `lambda` require `eps_hat = 0`.
pub fn cyclotomic_check(d: &Multisegment, lambda: &Weight) -> bool {
    // eps_hat(d, i) can be nonzero only if some segment starts at i
    let mut starts: Vec<Content> = d.right_order().iter().map(Segment::start).collect();
    starts.dedup();
    starts
        .iter()
        .all(|&i| eps_hat(d, i) <= lambda.multiplicity(i) as usize)
}

/// The componentwise-minimal weight passing [`cyclotomic_check`]:
/// `m_i = eps_hat(d, i)` for every `i`.
pub fn minimal_weight(d: &Multisegment) -> Weight {
    let mut starts: Vec<Content> = d.right_order().iter().map(Segment::start).collect();
    starts.dedup();
    Weight::from_multiplicities(
        starts
            .into_iter()
            .map(|i| (i, eps_hat(d, i) as u32)),
    )
}

/// The distinguished path to the highest-weight node: repeatedly take the
/// smallest `j` with `eps(d, j) > 0` and apply `E_j`, until the multisegment
/// is empty. The result has length `n(d)`.
pub fn hw_path(d: &Multisegment) -> Vec<Content> {
    let mut path = Vec::with_capacity(d.n());
    let mut cur = d.clone();
    while !cur.is_empty() {
        // the smallest active j is the smallest end occurring in cur, where
        // no + token can exist and eps equals the number of ends
        let j = cur
            .right_order()
            .iter()
            .map(Segment::end)
            .min()
            .expect("nonempty");
        debug_assert!(eps(&cur, j) > 0);
        cur = apply_e(&cur, j).expect("smallest end is always active");
        path.push(j);
    }
    path
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(pairs: &[(i64, i64)]) -> Multisegment {
        pairs.iter().map(|&(a, b)| Segment::new(a, b)).collect()
    }

    fn big_example() -> Multisegment {
        ms(&[
            (5, 6),
            (5, 7),
            (4, 7),
            (3, 3),
            (3, 6),
            (3, 6),
            (3, 7),
            (3, 7),
            (2, 6),
            (2, 7),
            (2, 9),
            (-1, 7),
            (-1, 1),
            (-2, 2),
        ])
    }

    #[test]
    fn eps_worked_example() {
        assert_eq!(eps(&big_example(), 7), 3);
        assert_eq!(phi(&big_example(), 7), 1);
    }

    #[test]
    fn eps_small_cases() {
        assert_eq!(eps(&Multisegment::empty(), 0), 0);
        assert_eq!(phi(&Multisegment::empty(), 0), 0);
        // right order [1,1],[0,1]: word "--"
        assert_eq!(eps(&ms(&[(0, 1), (1, 1)]), 1), 2);
        assert_eq!(phi(&ms(&[(0, 1), (1, 1)]), 1), 0);
    }

    #[test]
    fn e7_chain_on_worked_example() {
        let d0 = big_example();
        let d1 = apply_e(&d0, 7).unwrap();
        let mut expect = d0.clone();
        expect.remove(&Segment::new(3, 7));
        expect.insert(Segment::new(3, 6));
        assert_eq!(d1, expect);

        let d2 = apply_e(&d1, 7).unwrap();
        let mut expect = d1.clone();
        expect.remove(&Segment::new(2, 7));
        expect.insert(Segment::new(2, 6));
        assert_eq!(d2, expect);

        let d3 = apply_e(&d2, 7).unwrap();
        let mut expect = d2.clone();
        expect.remove(&Segment::new(-1, 7));
        expect.insert(Segment::new(-1, 6));
        assert_eq!(d3, expect);

        assert_eq!(apply_e(&d3, 7), None);
    }

    #[test]
    fn apply_e_deletes_singleton() {
        assert_eq!(apply_e(&ms(&[(5, 5)]), 5), Some(Multisegment::empty()));
    }

    #[test]
    fn apply_e_decrements_n() {
        let d = big_example();
        for j in -3..=10 {
            if let Some(e) = apply_e(&d, j) {
                assert_eq!(e.n(), d.n() - 1);
            }
        }
    }

    #[test]
    fn apply_f_examples() {
        assert_eq!(apply_f(&Multisegment::empty(), 0), ms(&[(0, 0)]));
        // real + from end 1 is rightmost
        assert_eq!(apply_f(&ms(&[(0, 1)]), 2), ms(&[(0, 2)]));
        assert_eq!(apply_e(&ms(&[(0, 2)]), 2), Some(ms(&[(0, 1)])));
        // word "virtual+, -": no cancellation, virtual chosen
        assert_eq!(apply_f(&ms(&[(0, 1)]), 1), ms(&[(1, 1), (0, 1)]));
        assert_eq!(apply_e(&ms(&[(1, 1), (0, 1)]), 1), Some(ms(&[(0, 1)])));
    }

    #[test]
    fn eps_hat_worked_example() {
        let d = big_example();
        assert_eq!(eps_hat(&d, -1), 2);
        assert_eq!(eps_hat(&d, 2), 2);
        assert_eq!(eps_hat(&d, 3), 4);
        assert_eq!(eps_hat(&d, 4), 1);
        assert_eq!(eps_hat(&d, 5), 2);
        // the +- pair over [-1,7],[-2,2],[-1,1] cancels
        assert_eq!(eps_hat(&d, -2), 0);
        assert_eq!(eps_hat(&d, 0), 0);
        assert_eq!(eps_hat(&d, 1), 0);
        assert_eq!(eps_hat(&Multisegment::empty(), 0), 0);
        // uncanceled plus counts on the same words
        assert_eq!(phi_hat(&d, -2), 1);
        assert_eq!(phi_hat(&d, 2), 4);
        assert_eq!(phi_hat(&d, 4), 2);
        assert_eq!(phi_hat(&Multisegment::empty(), 0), 0);
    }

    #[test]
    fn apply_e_hat_examples() {
        assert_eq!(apply_e_hat(&ms(&[(0, 0)]), 0), Some(Multisegment::empty()));
        // word "+-" in left order cancels
        assert_eq!(apply_e_hat(&ms(&[(0, 3), (1, 5)]), 0), None);
        // unique uncanceled minus at i=4 is [4,7]
        let d = big_example();
        let got = apply_e_hat(&d, 4).unwrap();
        let mut expect = d.clone();
        expect.remove(&Segment::new(4, 7));
        expect.insert(Segment::new(5, 7));
        assert_eq!(got, expect);
    }

    #[test]
    fn apply_f_hat_examples() {
        assert_eq!(apply_f_hat(&Multisegment::empty(), 0), ms(&[(0, 0)]));
        // real + is leftmost
        assert_eq!(apply_f_hat(&ms(&[(1, 1)]), 0), ms(&[(0, 1)]));
        assert_eq!(apply_e_hat(&ms(&[(0, 1)]), 0), Some(ms(&[(1, 1)])));
        // the minus precedes the virtual plus; virtual chosen
        assert_eq!(apply_f_hat(&ms(&[(0, 0)]), 0), ms(&[(0, 0), (0, 0)]));
        assert_eq!(apply_e_hat(&ms(&[(0, 0), (0, 0)]), 0), Some(ms(&[(0, 0)])));
    }

    #[test]
    fn cyclotomic_examples() {
        let lam0 = Weight::from_colors([0]);
        assert!(cyclotomic_check(&Multisegment::empty(), &lam0));
        assert!(cyclotomic_check(&Multisegment::empty(), &Weight::zero()));
        assert!(cyclotomic_check(&ms(&[(0, 2), (-1, 0)]), &lam0));
        assert!(!cyclotomic_check(&big_example(), &lam0));
    }

    #[test]
    fn minimal_weight_examples() {
        assert_eq!(minimal_weight(&Multisegment::empty()), Weight::zero());
        assert_eq!(
            minimal_weight(&big_example()),
            Weight::from_multiplicities([(-1, 2), (2, 2), (3, 4), (4, 1), (5, 2)])
        );
        assert_eq!(
            minimal_weight(&ms(&[(0, 0), (0, 0)])),
            Weight::from_multiplicities([(0, 2)])
        );
        // the minimal weight always passes the check
        for d in [big_example(), ms(&[(0, 2), (1, 1)])] {
            assert!(cyclotomic_check(&d, &minimal_weight(&d)));
        }
    }

    #[test]
    fn hw_path_examples() {
        assert_eq!(hw_path(&Multisegment::empty()), Vec::<i64>::new());
        // first active j is 1 (no segment ends at 0)
        assert_eq!(hw_path(&ms(&[(0, 1)])), vec![1, 0]);
        assert_eq!(hw_path(&ms(&[(0, 0), (1, 1)])), vec![0, 1]);
        assert_eq!(hw_path(&big_example()).len(), big_example().n());
    }

    #[test]
    fn hw_path_steps_are_smallest_active() {
        let mut cur = big_example();
        for j in hw_path(&big_example()) {
            for smaller in j - 3..j {
                assert_eq!(eps(&cur, smaller), 0);
            }
            assert!(eps(&cur, j) > 0);
            cur = apply_e(&cur, j).unwrap();
        }
        assert!(cur.is_empty());
    }

    #[test]
    fn eps_bounded_by_end_group() {
        let d = big_example();
        for j in -4..=10 {
            assert!(eps(&d, j) <= d.group_by_end(j).m());
        }
        // equality at the smallest occurring end
        let jmin = d.right_order().iter().map(Segment::end).min().unwrap();
        assert_eq!(eps(&d, jmin), d.group_by_end(jmin).m());
    }

    #[test]
    fn inverse_laws_medium() {
        let cases = [
            Multisegment::empty(),
            ms(&[(0, 0)]),
            ms(&[(0, 1), (1, 1)]),
            ms(&[(0, 2), (-1, 0), (2, 2)]),
            big_example(),
        ];
        for d in &cases {
            for j in -3..=10 {
                assert_eq!(apply_e(&apply_f(d, j), j).as_ref(), Some(d));
                if let Some(e) = apply_e(d, j) {
                    assert_eq!(apply_f(&e, j), *d);
                }
                assert_eq!(apply_e_hat(&apply_f_hat(d, j), j).as_ref(), Some(d));
                if let Some(e) = apply_e_hat(d, j) {
                    assert_eq!(apply_f_hat(&e, j), *d);
                }
            }
        }
    }

    #[test]
    fn content_law() {
        let d = big_example();
        for j in -4..=10 {
            if let Some(e) = apply_e(&d, j) {
                let mut cm = d.content_multiset();
                assert!(cm.remove(j, 1));
                assert_eq!(e.content_multiset(), cm);
            }
        }
    }
}
