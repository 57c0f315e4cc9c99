//! Built-in invariant suites: differential and structural checks runnable in
//! the field without the test harness. Prints one line per suite to stderr
//! and a single JSON result to stdout.

use clap::ValueEnum;
use serde_json::json;

use crystal_core::graph::{enumerate_multisegments, lambda_window, verify_blambda};
use crystal_core::mp_crystal::apply_e_mp;
use crystal_core::partitions::enumerate_kleshchev_bounded;
use crystal_core::seg_crystal::{apply_e, apply_e_hat, apply_f, apply_f_hat, eps};
use crystal_core::segments::{Content, Weight};
use crystal_core::signature::{reduce, CancelPattern, SignatureToken, SignatureWord, TokenKind};
use crystal_core::{characters, transport};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

struct Limits {
    word_len: usize,
    seg_contents: Vec<Content>,
    seg_n: usize,
    labels: Vec<Content>,
    iso_n: usize,
    char_n: usize,
}

impl Limits {
    fn of(level: Level) -> Limits {
        match level {
            Level::Quick => Limits {
                word_len: 10,
                seg_contents: (-3..=3).collect(),
                seg_n: 6,
                labels: (-4..=4).collect(),
                iso_n: 4,
                char_n: 6,
            },
            Level::Full => Limits {
                word_len: 12,
                seg_contents: (-3..=3).collect(),
                seg_n: 7,
                labels: (-4..=4).collect(),
                iso_n: 6,
                char_n: 8,
            },
        }
    }
}

fn test_lambdas() -> Vec<Weight> {
    vec![
        Weight::from_colors([0]),
        Weight::from_colors([0, 0]),
        Weight::from_colors([1, 0]),
        Weight::from_colors([2, 0]),
        Weight::from_colors([1, 0, 0]),
    ]
}

type Suite = fn(&Limits) -> Result<(), String>;

pub fn run(level: Level) -> Result<(), String> {
    let limits = Limits::of(level);
    let suites: &[(&str, Suite)] = &[
        ("signature-oracle", signature_oracle),
        ("inverse-laws", inverse_laws),
        ("eps-laws", eps_laws),
        ("intertwining", intertwining),
        ("three-way-isomorphism", three_way),
        ("characters", characters_suite),
    ];
    for (name, suite) in suites {
        match suite(&limits) {
            Ok(()) => eprintln!("selfcheck {name}: ok"),
            Err(e) => {
                eprintln!("selfcheck {name}: FAILED");
                println!(
                    "{}",
                    json!({ "ok": false, "suite": name, "detail": e })
                );
                return Err(format!("{name}: {e}"));
            }
        }
    }
    println!("{}", json!({ "ok": true }));
    Ok(())
}

fn fixpoint(kinds: &[TokenKind], pattern: CancelPattern) -> (Vec<usize>, Vec<usize>) {
    let (first, second) = match pattern {
        CancelPattern::MinusPlus => (TokenKind::Minus, TokenKind::Plus),
        CancelPattern::PlusMinus => (TokenKind::Plus, TokenKind::Minus),
    };
    let mut alive: Vec<(usize, TokenKind)> = kinds
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, k)| k != TokenKind::Blank)
        .collect();
    loop {
        let hit = (0..alive.len().saturating_sub(1))
            .find(|&k| alive[k].1 == first && alive[k + 1].1 == second);
        match hit {
            Some(k) => {
                alive.drain(k..=k + 1);
            }
            None => break,
        }
    }
    (
        alive.iter().filter(|&&(_, k)| k == TokenKind::Minus).map(|&(i, _)| i).collect(),
        alive.iter().filter(|&&(_, k)| k == TokenKind::Plus).map(|&(i, _)| i).collect(),
    )
}

fn signature_oracle(limits: &Limits) -> Result<(), String> {
    for len in 0..=limits.word_len {
        for code in 0..(1u64 << len) {
            let kinds: Vec<TokenKind> = (0..len)
                .map(|b| {
                    if code >> b & 1 == 0 {
                        TokenKind::Minus
                    } else {
                        TokenKind::Plus
                    }
                })
                .collect();
            let word = SignatureWord::new(
                kinds
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| SignatureToken::new(k, i))
                    .collect(),
            );
            for pattern in [CancelPattern::MinusPlus, CancelPattern::PlusMinus] {
                let got = reduce(&word, pattern);
                let (minus, plus) = fixpoint(&kinds, pattern);
                if got.uncanceled_minus != minus || got.uncanceled_plus != plus {
                    return Err(format!("word code {code:b} length {len}"));
                }
            }
        }
    }
    Ok(())
}

fn inverse_laws(limits: &Limits) -> Result<(), String> {
    for d in enumerate_multisegments(&limits.seg_contents, limits.seg_n) {
        for &j in &limits.labels {
            if apply_e(&apply_f(&d, j), j).as_ref() != Some(&d) {
                return Err(format!("E_{j}F_{j} != id at {d}"));
            }
            if let Some(e) = apply_e(&d, j) {
                if apply_f(&e, j) != d {
                    return Err(format!("F_{j}E_{j} != id at {d}"));
                }
            }
            if apply_e_hat(&apply_f_hat(&d, j), j).as_ref() != Some(&d) {
                return Err(format!("Êhat_{j}F̂hat_{j} != id at {d}"));
            }
            if let Some(e) = apply_e_hat(&d, j) {
                if apply_f_hat(&e, j) != d {
                    return Err(format!("F̂hat_{j}Êhat_{j} != id at {d}"));
                }
            }
        }
    }
    Ok(())
}

fn eps_laws(limits: &Limits) -> Result<(), String> {
    for d in enumerate_multisegments(&limits.seg_contents, limits.seg_n) {
        for &i in &limits.labels {
            let Some(e) = apply_e(&d, i) else { continue };
            if eps(&e, i) != eps(&d, i) - 1 {
                return Err(format!("eps drop at {d}, label {i}"));
            }
            for nb in [i - 1, i + 1] {
                let diff = eps(&e, nb) as i64 - eps(&d, nb) as i64;
                if diff != 0 && diff != 1 {
                    return Err(format!("eps_{nb} changed by {diff} under E_{i} at {d}"));
                }
            }
        }
    }
    Ok(())
}

fn intertwining(limits: &Limits) -> Result<(), String> {
    for lam in test_lambdas() {
        let window = lambda_window(&lam, limits.iso_n + 1);
        for n in 0..=limits.iso_n {
            for mp in enumerate_kleshchev_bounded(&lam, n, usize::MAX)
                .map_err(|e| e.to_string())?
            {
                let d = mp.to_multisegment();
                for &j in &window {
                    let via_mp = apply_e_mp(&mp, j).map(|m| m.to_multisegment());
                    if via_mp != apply_e(&d, j) {
                        return Err(format!("E_{j} disagrees at {mp}"));
                    }
                }
                if transport::seg_to_mp(&d, &lam).map_err(|e| e.to_string())? != mp {
                    return Err(format!("transport does not invert at {mp}"));
                }
            }
        }
    }
    Ok(())
}

fn three_way(limits: &Limits) -> Result<(), String> {
    for lam in test_lambdas() {
        let check = verify_blambda(&lam, limits.iso_n).map_err(|e| e.to_string())?;
        if !check.ok {
            return Err(format!("{lam}: {}", check.certificate.unwrap_or_default()));
        }
    }
    Ok(())
}

fn characters_suite(limits: &Limits) -> Result<(), String> {
    use crystal_core::partitions::enumerate_partitions_bounded;
    use crystal_core::segments::{Multisegment, Segment};

    // beta!-multiplicity on single-end multisegments
    for n in 0..=limits.char_n {
        for shape in enumerate_partitions_bounded(n, usize::MAX).map_err(|e| e.to_string())? {
            let dj: Multisegment = shape
                .parts()
                .iter()
                .map(|&len| Segment::new(1 - len as i64, 0))
                .collect();
            let ch = characters::char_of_ind_bounded(dj.right_order(), limits.char_n)
                .map_err(|e| e.to_string())?;
            let q = characters::q_word(&dj).map_err(|e| e.to_string())?;
            let beta = characters::beta_of(&dj).map_err(|e| e.to_string())?;
            let want = characters::beta_factorial(&beta);
            if ch.multiplicity(&q).map_err(|e| e.to_string())? != want {
                return Err(format!("beta! identity fails at {dj}"));
            }
        }
    }
    // Kato k!
    for k in 0..=limits.char_n {
        let segs = vec![Segment::new(0, 0); k];
        let ch = characters::char_of_ind_bounded(&segs, limits.char_n)
            .map_err(|e| e.to_string())?;
        let word = characters::CharWord(vec![0; k]);
        let factorial: u64 = (1..=k as u64).product();
        if ch.multiplicity(&word).map_err(|e| e.to_string())? != factorial {
            return Err(format!("Kato identity fails at k={k}"));
        }
    }
    Ok(())
}
