//! Values computed for the V(Λ₁) table entries where the table
//! disagrees with the closed forms and the oracle.

use qfock::fock::{Actions, ClosedForm};
use qfock::verify::golden_corpus;
use qfock::{FockVector, HalfLaurent, Partition, Word};

fn q(terms: &[(i64, i64)]) -> HalfLaurent {
    HalfLaurent::from_q_terms(terms.iter().copied())
}

fn vec1(terms: &[(i64, &[usize], HalfLaurent)]) -> FockVector {
    let mut out = FockVector::zero(1);
    for (m, parts, c) in terms {
        out = out.add(&FockVector::term(
            1,
            *m,
            Partition::new(parts.to_vec()).unwrap(),
            c.clone(),
        ));
    }
    out
}

fn computed() -> Vec<(&'static str, FockVector)> {
    let sq = |a: &HalfLaurent| a * a;
    let one_q2 = q(&[(0, 1), (2, 1)]);
    vec![
        ("f0 f1", vec1(&[(0, &[1], q(&[(2, 1), (0, 1)]))])),
        ("f1 f0 f1", vec1(&[(-1, &[1], q(&[(4, -1), (2, -1)]))])),
        (
            "f0 f1 f0 f1",
            vec1(&[
                (0, &[2], q(&[(0, 1), (2, 1)])),
                (0, &[1, 1], q(&[(6, -1), (4, -1)])),
            ]),
        ),
        (
            "f1 f0 f1 f0 f1",
            vec1(&[
                (-1, &[2], &q(&[(4, 1)]) * &sq(&one_q2)),
                (-1, &[1, 1], &q(&[(4, 1)]) * &sq(&one_q2)),
            ]),
        ),
        (
            "f1^(2) f0^(2) f1",
            vec1(&[
                (-1, &[2], q(&[(8, 1), (6, 1), (4, 1)])),
                (-1, &[1, 1], q(&[(6, 1)])),
            ]),
        ),
        (
            "f0^(2) f1 f0 f1",
            vec1(&[(1, &[1], q(&[(5, -1), (3, -1)]))]),
        ),
    ]
}

#[test]
fn lambda1_mismatched_entries_are_locked() {
    let table = golden_corpus();
    for (word, expected) in computed() {
        let w: Word = word.parse().unwrap();
        let got = ClosedForm
            .apply_word(&w, &FockVector::vacuum(1, 0))
            .unwrap();
        assert_eq!(got, expected, "{word}");
        let entry = table
            .iter()
            .find(|e| e.sector == 1 && e.word == word)
            .unwrap();
        assert_ne!(entry.expected, got, "{word} now matches the table");
    }
}

#[test]
fn lambda1_matching_entries() {
    let locked: Vec<&str> = computed().iter().map(|(w, _)| *w).collect();
    let rest: Vec<_> = golden_corpus()
        .into_iter()
        .filter(|e| e.sector == 1 && !locked.contains(&e.word))
        .collect();
    assert_eq!(rest.len(), 4);
    for e in rest {
        let w: Word = e.word.parse().unwrap();
        assert_eq!(
            ClosedForm
                .apply_word(&w, &FockVector::vacuum(1, 0))
                .unwrap(),
            e.expected,
            "{}",
            e.word
        );
    }
}
