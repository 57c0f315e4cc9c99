//! Crystal operators on colored multipartitions via the removable/addable
//! box rule.
//!
//! Each component contributes one symbol in stored component order: `-` if it
//! has a removable `j`-box, `+` if an addable `j`-box, blank otherwise.
//! Adjacent `-+` pairs cancel; `E_j` removes the box of the leftmost
//! uncanceled `-`, `F_j` adds at the rightmost uncanceled `+`. Unlike the
//! multisegment crystal, `F` here may return `None`: there is no virtual
//! token, so the highest-weight crystal is bounded above.

use crate::partitions::Multipartition;
use crate::segments::Content;
use crate::signature::{reduce, CancelPattern, ReducedSignature, SignatureWord, TokenKind};

fn mp_word(mp: &Multipartition, j: Content) -> SignatureWord {
    let mut w = SignatureWord::default();
    for (idx, comp) in mp.components().iter().enumerate() {
        let kind = if comp.removable_boxes().contains_key(&j) {
            TokenKind::Minus
        } else if comp.addable_boxes().contains_key(&j) {
            TokenKind::Plus
        } else {
            TokenKind::Blank
        };
        w.push(kind, idx);
    }
    w
}

fn reduce_mp(mp: &Multipartition, j: Content) -> ReducedSignature {
    reduce(&mp_word(mp, j), CancelPattern::MinusPlus)
}

/// Number of uncanceled `-` symbols in the box word.
pub fn eps_mp(mp: &Multipartition, j: Content) -> usize {
    reduce_mp(mp, j).eps()
}

/// Number of uncanceled `+` symbols in the box word.
pub fn phi_mp(mp: &Multipartition, j: Content) -> usize {
    reduce_mp(mp, j).phi()
}

/// `E_j`: removes the removable `j`-box of the component owning the leftmost
/// uncanceled `-`, or `None`.
pub fn apply_e_mp(mp: &Multipartition, j: Content) -> Option<Multipartition> {
    let idx = reduce_mp(mp, j).leftmost_minus()?;
    let comp = mp.components()[idx].remove_box(j).expect("minus implies removable");
    Some(mp.with_component(idx, comp))
}

/// `F_j`: adds the addable `j`-box of the component owning the rightmost
/// uncanceled `+`, or `None`.
pub fn apply_f_mp(mp: &Multipartition, j: Content) -> Option<Multipartition> {
    let idx = reduce_mp(mp, j).rightmost_plus()?;
    let comp = mp.components()[idx].add_box(j).expect("plus implies addable");
    Some(mp.with_component(idx, comp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_kleshchev, is_kleshchev, ColoredPartition, Partition};
    use crate::segments::Weight;

    fn cp(parts: &[u32], color: i64) -> ColoredPartition {
        ColoredPartition::new(Partition::new(parts.iter().copied()), color)
    }

    fn mp(comps: &[(&[u32], i64)]) -> Multipartition {
        Multipartition::new(comps.iter().map(|&(parts, color)| cp(parts, color)))
    }

    #[test]
    fn eps_phi_examples() {
        let m = mp(&[(&[1], 0), (&[1], 0)]);
        assert_eq!(eps_mp(&m, 0), 2);
        assert_eq!(phi_mp(&m, 0), 0);
        assert_eq!(eps_mp(&m, 1), 0);
        assert_eq!(phi_mp(&m, 1), 2);

        let empty = Multipartition::empty(&Weight::from_colors([0]));
        assert_eq!(eps_mp(&empty, 0), 0);
        assert_eq!(phi_mp(&empty, 0), 1);
    }

    #[test]
    fn apply_e_examples() {
        let m = mp(&[(&[1], 0), (&[1], 0)]);
        assert_eq!(apply_e_mp(&m, 0), Some(mp(&[(&[], 0), (&[1], 0)])));
        assert_eq!(apply_e_mp(&m, 1), None);

        let m = mp(&[(&[1], 1), (&[2], 0)]);
        assert_eq!(apply_e_mp(&m, 1), Some(mp(&[(&[], 1), (&[2], 0)])));
    }

    #[test]
    fn apply_f_examples() {
        let empty = Multipartition::empty(&Weight::from_colors([0, 0]));
        assert_eq!(apply_f_mp(&empty, 0), Some(mp(&[(&[], 0), (&[1], 0)])));

        // word "+-": no cancellation; rightmost uncanceled + is component 1
        let m = mp(&[(&[], 0), (&[1], 0)]);
        assert_eq!(apply_f_mp(&m, 0), Some(mp(&[(&[1], 0), (&[1], 0)])));

        // word "--": phi = 0
        let m = mp(&[(&[1], 0), (&[1], 0)]);
        assert_eq!(apply_f_mp(&m, 0), None);
    }

    #[test]
    fn level1_eps_at_most_one() {
        for n in 0..=6 {
            for shape in crate::partitions::enumerate_partitions(n).unwrap() {
                let m = Multipartition::new([ColoredPartition::new(shape.clone(), 0)]);
                for j in -7..=7 {
                    let e = eps_mp(&m, j);
                    assert!(e <= 1);
                    let has_removable =
                        m.components()[0].removable_boxes().contains_key(&j);
                    assert_eq!(e == 1, has_removable);
                }
            }
        }
    }

    #[test]
    fn inverse_laws_small() {
        let lambdas = [
            Weight::from_colors([0]),
            Weight::from_colors([0, 0]),
            Weight::from_colors([1, 0]),
        ];
        for lam in &lambdas {
            for n in 0..=4 {
                for m in enumerate_kleshchev(lam, n).unwrap() {
                    for j in -5..=5 {
                        if let Some(f) = apply_f_mp(&m, j) {
                            assert_eq!(apply_e_mp(&f, j), Some(m.clone()));
                        }
                        if let Some(e) = apply_e_mp(&m, j) {
                            assert_eq!(apply_f_mp(&e, j), Some(m.clone()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kleshchev_closure_small() {
        let lam = Weight::from_colors([1, 0]);
        for n in 0..=4 {
            for m in enumerate_kleshchev(&lam, n).unwrap() {
                for j in -5..=5 {
                    if let Some(f) = apply_f_mp(&m, j) {
                        assert!(is_kleshchev(&f), "F_{j} of {m} gave non-Kleshchev {f}");
                    }
                    if let Some(e) = apply_e_mp(&m, j) {
                        assert!(is_kleshchev(&e), "E_{j} of {m} gave non-Kleshchev {e}");
                    }
                }
            }
        }
    }
}
