//! Conversion between cyclotomic multisegments and Kleshchev multipartitions
//! by crystal-path transport, plus the direct level-2 decomposition used as an
//! independent oracle.

use crate::error::{Error, Result};
use crate::mp_crystal::apply_f_mp;
use crate::partitions::{is_kleshchev, mu_of_level1, ColoredPartition, Multipartition};
use crate::seg_crystal::{cyclotomic_check, hw_path};
use crate::segments::{Content, Multisegment, Segment, Weight};

/// Maps a cyclotomic multisegment to the Kleshchev multipartition labelling
/// the same node of the highest-weight crystal.
///
/// Walks the distinguished path from `d` to the empty multisegment, then
/// retraces it upward from the empty multipartition with `F` steps. The
/// result is verified to convert back to `d`.
pub fn seg_to_mp(d: &Multisegment, lambda: &Weight) -> Result<Multipartition> {
    if !cyclotomic_check(d, lambda) {
        return Err(Error::NotCyclotomic(format!("{d} for {lambda}")));
    }
    let path = hw_path(d);
    let mut mp = Multipartition::empty(lambda);
    for &j in path.iter().rev() {
        mp = apply_f_mp(&mp, j).ok_or_else(|| {
            Error::TransportFailure(format!("F_{j} returned zero while lifting {d}"))
        })?;
    }
    if mp.to_multisegment() != *d {
        return Err(Error::TransportFailure(format!(
            "round trip gave {} instead of {d}",
            mp.to_multisegment()
        )));
    }
    debug_assert!(is_kleshchev(&mp));
    Ok(mp)
}

/// Direct decomposition for level 2: splits a cyclotomic multisegment for
/// `Λ_i + Λ_h` (`i >= h`) into two level-1 pieces.
///
/// A start lying only in `i`'s window goes to the first piece, only in `h`'s
/// window to the second; for a start in both windows the shorter segment goes
/// to the first piece and the longer to the second.
pub fn decompose_level2(
    d: &Multisegment,
    i: Content,
    h: Content,
) -> Result<(ColoredPartition, ColoredPartition)> {
    assert!(i >= h, "call with i >= h");
    let lambda = Weight::from_colors([i, h]);
    if !cyclotomic_check(d, &lambda) {
        return Err(Error::NotCyclotomic(format!("{d} for {lambda}")));
    }
    if d.is_empty() {
        return Ok((ColoredPartition::empty(i), ColoredPartition::empty(h)));
    }

    // Walk starts downward from i, tracking whether each window is still
    // running. The Kleshchev inequality forces the first window to end at or
    // above the second, so when both run and only one segment is present it
    // is the first window that has closed.
    let mut by_start: Vec<(Content, Vec<Segment>)> = Vec::new();
    for s in d.right_order() {
        match by_start.last_mut() {
            Some((a, group)) if *a == s.start() => group.push(*s),
            _ => by_start.push((s.start(), vec![*s])),
        }
    }
    let min_start = by_start.last().expect("nonempty").0;
    if by_start[0].0 > i {
        return Err(Error::MalformedLevel1(format!(
            "start {} above the top color {i}",
            by_start[0].0
        )));
    }

    let mut first = Vec::new();
    let mut second = Vec::new();
    let mut window1_open = true;
    let mut window2_open = true;
    let mut groups = by_start.iter();
    let mut next = groups.next();
    for a in (min_start..=i).rev() {
        let group: &[Segment] = match &next {
            Some((start, group)) if *start == a => {
                let g = &group[..];
                next = groups.next();
                g
            }
            _ => &[],
        };
        let in1 = a <= i && window1_open;
        let in2 = a <= h && window2_open;
        match (in1, in2, group.len()) {
            (true, true, 2) => {
                // same start: right order puts the shorter (smaller end) first
                first.push(group[0]);
                second.push(group[1]);
            }
            (true, true, 1) => {
                window1_open = false;
                second.push(group[0]);
            }
            (true, true, 0) => {
                window1_open = false;
                window2_open = false;
            }
            (true, false, 1) => first.push(group[0]),
            (true, false, 0) => window1_open = false,
            (false, true, 1) => second.push(group[0]),
            (false, true, 0) => window2_open = false,
            (false, false, 0) => {}
            _ => {
                return Err(Error::MalformedLevel1(format!(
                    "{} segments at start {a} with windows ({in1}, {in2})",
                    group.len()
                )))
            }
        }
    }
    if next.is_some() {
        return Err(Error::MalformedLevel1("segments below both windows".into()));
    }

    let to_cp = |segs: Vec<Segment>, color: Content| -> Result<ColoredPartition> {
        if segs.is_empty() {
            Ok(ColoredPartition::empty(color))
        } else {
            mu_of_level1(&segs.into_iter().collect())
        }
    };
    let mu = to_cp(first, i)?;
    let nu = to_cp(second, h)?;

    // the split must satisfy mu_{i-h+x} <= nu_x
    let shift = i - h;
    let ok = (1..=mu.shape.len()).all(|row| {
        let x = row as i64 - shift;
        x < 1 || mu.shape.part(row) <= nu.shape.part(x as usize)
    });
    if !ok {
        return Err(Error::MalformedLevel1(format!(
            "split {}/{} violates the interleaving inequality",
            mu.label(),
            nu.label()
        )));
    }
    Ok((mu, nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn ms(pairs: &[(i64, i64)]) -> Multisegment {
        pairs.iter().map(|&(a, b)| Segment::new(a, b)).collect()
    }

    fn cp(parts: &[u32], color: i64) -> ColoredPartition {
        ColoredPartition::new(Partition::new(parts.iter().copied()), color)
    }

    #[test]
    fn seg_to_mp_examples() {
        let lam = Weight::from_colors([0, 0]);
        assert_eq!(
            seg_to_mp(&Multisegment::empty(), &lam).unwrap(),
            Multipartition::empty(&lam)
        );
        assert_eq!(
            seg_to_mp(&ms(&[(0, 0), (0, 0)]), &lam).unwrap(),
            Multipartition::new([cp(&[1], 0), cp(&[1], 0)])
        );
        let lam = Weight::from_colors([1, 0]);
        assert_eq!(
            seg_to_mp(&ms(&[(1, 1), (0, 1)]), &lam).unwrap(),
            Multipartition::new([cp(&[1], 1), cp(&[2], 0)])
        );
    }

    #[test]
    fn seg_to_mp_rejects_non_cyclotomic() {
        let lam = Weight::from_colors([0]);
        assert!(matches!(
            seg_to_mp(&ms(&[(1, 1)]), &lam),
            Err(Error::NotCyclotomic(_))
        ));
    }

    #[test]
    fn round_trip_medium() {
        let lam = Weight::from_colors([1, 0, 0]);
        let d = ms(&[(1, 2), (0, 1), (0, 0), (-1, 0)]);
        assert!(cyclotomic_check(&d, &lam));
        let mp = seg_to_mp(&d, &lam).unwrap();
        assert_eq!(mp.to_multisegment(), d);
        assert!(is_kleshchev(&mp));
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(
            decompose_level2(&ms(&[(0, 0), (0, 1)]), 0, 0).unwrap(),
            (cp(&[1], 0), cp(&[2], 0))
        );
        assert_eq!(
            decompose_level2(&ms(&[(1, 1), (0, 1)]), 1, 0).unwrap(),
            (cp(&[1], 1), cp(&[2], 0))
        );
        assert_eq!(
            decompose_level2(&Multisegment::empty(), 2, 0).unwrap(),
            (cp(&[], 2), cp(&[], 0))
        );
    }

    #[test]
    fn decompose_rejects_non_cyclotomic() {
        assert!(matches!(
            decompose_level2(&ms(&[(0, 0), (0, 0), (0, 0)]), 0, 0),
            Err(Error::NotCyclotomic(_))
        ));
    }

    #[test]
    fn decompose_agrees_with_transport() {
        let cases = [
            (ms(&[(0, 0), (0, 1)]), 0, 0),
            (ms(&[(1, 1), (0, 1)]), 1, 0),
            (ms(&[(2, 3), (0, 0)]), 2, 0),
            (ms(&[(1, 4), (0, 2), (0, 1)]), 1, 0),
            (ms(&[(0, 2), (-1, 0), (0, 3)]), 0, 0),
        ];
        for (d, i, h) in cases {
            let lam = Weight::from_colors([i, h]);
            assert!(cyclotomic_check(&d, &lam), "{d}");
            let (mu, nu) = decompose_level2(&d, i, h).unwrap();
            let mp = seg_to_mp(&d, &lam).unwrap();
            assert_eq!(mp.components(), &[mu, nu], "{d}");
        }
    }
}
