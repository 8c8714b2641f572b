use foam_core::exactalg::{Matrix, PolyMatrix};
use foam_core::statespace::{basis_word, cobordism_matrix, g_alpha_matrix, state_space, Factor, Theory};
use foam_core::surfaces_sl2::{Circle, CircleConfig, Cobordism2, Component2};
use foam_core::{Poly, RingSpec};

use super::oracle::{laurent_mul, laurent_pow, Laurent};
use super::{ok, Check};

pub fn sl2_ranks() -> Check {
    let q_part = Laurent::from([((1, 0), 1), ((-1, 0), 1)]);
    let a_part = Laurent::from([((0, 1), 1), ((0, -1), 1)]);
    let mut configs = 0;
    for n in 0..=4usize {
        for m in 0..=4 - n {
            let res = ok(state_space(&CircleConfig::standard(n, m), Theory::Sl2), format!("n={n} m={m}"))?;
            ensure!(res.rank == 1 << (n + m), "n={n} m={m}: rank {}", res.rank);
            let expect = laurent_mul(&laurent_pow(&q_part, n), &laurent_pow(&a_part, m));
            ensure!(res.grank.0 == expect, "n={n} m={m}: graded rank {}", res.grank);
            configs += 1;
        }
    }
    let r = RingSpec::ALPHA;
    let e1 = &r.var(0) + &r.var(1);
    let (zero, one) = (Poly::zero(r), Poly::one(r));
    let con = ok(state_space(&CircleConfig::new(vec![Circle::contractible()]), Theory::Sl2), "contractible")?;
    let expect = Matrix::from_rows(vec![vec![zero.clone(), one.clone()], vec![one.clone(), e1]]);
    ensure!(con.gram.matrix == expect, "contractible Gram matrix {:?}", con.gram.matrix);
    let ess = ok(state_space(&CircleConfig::new(vec![Circle::essential(0)]), Theory::Sl2), "essential")?;
    let expect = Matrix::from_rows(vec![vec![one.clone(), zero.clone()], vec![zero, one]]);
    ensure!(ess.gram.matrix == expect, "essential Gram matrix {:?}", ess.gram.matrix);
    Ok(format!("{configs} configurations with n+m ≤ 4 match; single-circle Gram matrices exact"))
}

pub fn sl3_ranks() -> Check {
    let circle = Laurent::from([((2, 0), 1), ((0, 0), 1), ((-2, 0), 1)]);
    let mut configs = 0;
    for theory in [Theory::Sl3u, Theory::Sl3o] {
        for n in 0..=3usize {
            for m in 0..=3 - n {
                let res = ok(state_space(&CircleConfig::standard(n, m), theory), format!("{theory:?} n={n} m={m}"))?;
                ensure!(res.rank == 3usize.pow((n + m) as u32), "{theory:?} n={n} m={m}: rank {}", res.rank);
                let mut expect = laurent_pow(&circle, n);
                expect.values_mut().for_each(|v| *v *= 3usize.pow(m as u32));
                ensure!(res.grank.0 == expect, "{theory:?} n={n} m={m}: graded rank {}", res.grank);
                ensure!(res.grank.at_one() == res.rank, "{theory:?} n={n} m={m}: rank at q=1");
                configs += 1;
            }
        }
    }
    Ok(format!("{configs} configurations over both theories have rank 3^(n+m) and the expected q-grading"))
}

fn ess(r: u32) -> Circle {
    Circle::essential(r)
}

fn con() -> Circle {
    Circle::contractible()
}

fn piece(bottom: &[usize], top: &[usize]) -> Component2 {
    Component2 { bottom: bottom.to_vec(), top: top.to_vec(), ..Component2::default() }
}

fn cob(pieces: Vec<Component2>, bottom: &[Circle], top: &[Circle]) -> Cobordism2 {
    Cobordism2::new(pieces, vec![], CircleConfig::new(bottom.to_vec()), CircleConfig::new(top.to_vec()))
        .expect("valid cobordism")
}

/// Types A–D; `extra` adds an essential spectator outside, which swaps the
/// parity of the active essential circles.
fn elementary(kind: char, extra: bool) -> Cobordism2 {
    let spectator = piece(&[0], &[0]);
    match (kind, extra) {
        ('A', false) => cob(vec![piece(&[0, 1], &[0])], &[ess(0), con()], &[ess(0)]),
        ('A', true) => cob(vec![spectator, piece(&[1, 2], &[1])], &[ess(0), ess(1), con()], &[ess(0), ess(1)]),
        ('B', false) => cob(vec![piece(&[0, 1], &[0])], &[ess(0), ess(1)], &[con()]),
        ('B', true) => cob(vec![spectator, piece(&[1, 2], &[1])], &[ess(0), ess(1), ess(2)], &[ess(0), con()]),
        ('C', false) => cob(vec![piece(&[0], &[0, 1])], &[ess(0)], &[ess(0), con()]),
        ('C', true) => cob(vec![spectator, piece(&[1], &[1, 2])], &[ess(0), ess(1)], &[ess(0), ess(1), con()]),
        ('D', false) => cob(vec![piece(&[0], &[0, 1])], &[con()], &[ess(0), ess(1)]),
        ('D', true) => cob(vec![spectator, piece(&[1], &[1, 2])], &[ess(0), con()], &[ess(0), ess(1), ess(2)]),
        _ => unreachable!("types are A to D"),
    }
}

fn coeff(m: &PolyMatrix, s: &Cobordism2, from: &[Factor], to: &[Factor]) -> Poly {
    let find = |c: &CircleConfig, w: &[Factor]| {
        (0..1usize << c.len()).find(|&i| basis_word(c, i).0 == w).expect("word in basis")
    };
    m.get(find(&s.top, to), find(&s.bottom, from)).clone()
}

/// `(type, spectator, from, to, value)`
type SpotEntry = (char, bool, Vec<Factor>, Vec<Factor>, &'static str);

fn spot_entries() -> Vec<SpotEntry> {
    use Factor::*;
    vec![
        ('A', false, vec![One, V0], vec![V0], "1"),
        ('A', false, vec![One, V1], vec![V1], "1"),
        ('A', false, vec![X, V0], vec![V0], "a1"),
        ('A', false, vec![X, V1], vec![V1], "a2"),
        ('A', false, vec![X, V1], vec![V0], "0"),
        ('B', false, vec![V0, V0p], vec![X], "0"),
        ('B', false, vec![V1, V0p], vec![One], "-a1"),
        ('B', false, vec![V1, V0p], vec![X], "1"),
        ('B', false, vec![V0, V1p], vec![One], "-a2"),
        ('B', false, vec![V0, V1p], vec![X], "1"),
        ('B', false, vec![V1, V1p], vec![X], "0"),
        ('C', false, vec![V0], vec![X, V0], "1"),
        ('C', false, vec![V0], vec![One, V0], "-a2"),
        ('C', false, vec![V1], vec![X, V1], "1"),
        ('C', false, vec![V1], vec![One, V1], "-a1"),
        ('D', false, vec![One], vec![V0, V1p], "1"),
        ('D', false, vec![One], vec![V1, V0p], "1"),
        ('D', false, vec![One], vec![V0, V0p], "0"),
        ('D', false, vec![X], vec![V0, V1p], "a1"),
        ('D', false, vec![X], vec![V1, V0p], "a2"),
        ('A', true, vec![X, V1, V0p], vec![V1, V0p], "a2"),
        ('A', true, vec![X, V1, V1p], vec![V1, V1p], "a1"),
        ('B', true, vec![V0, V1p, V0], vec![X, V0], "1"),
        ('B', true, vec![V0, V1p, V0], vec![One, V0], "-a2"),
        ('B', true, vec![V0, V0p, V1], vec![One, V0], "-a1"),
        ('C', true, vec![V1, V0p], vec![One, V1, V0p], "-a1"),
        ('D', true, vec![X, V1], vec![V1, V0p, V1], "a2"),
        ('D', true, vec![X, V1], vec![V1, V1p, V0], "a1"),
    ]
}

pub fn functor() -> Check {
    let mut compared = 0;
    for kind in ['A', 'B', 'C', 'D'] {
        for extra in [false, true] {
            let s = elementary(kind, extra);
            let m = ok(cobordism_matrix(&s), format!("type {kind}"))?;
            let g = ok(g_alpha_matrix(&s), format!("type {kind}"))?;
            ensure!(m == g, "type {kind} (spectator: {extra}): evaluated matrix differs from the formula side");
            compared += 1;
        }
    }
    let entries = spot_entries();
    for (kind, extra, from, to, value) in &entries {
        let s = elementary(*kind, *extra);
        let m = ok(cobordism_matrix(&s), format!("type {kind}"))?;
        let got = coeff(&m, &s, from, to);
        let expect = ok(Poly::parse(RingSpec::ALPHA, value), "entry")?;
        ensure!(got == expect, "type {kind} (spectator: {extra}) {from:?} → {to:?}: got {got}, expected {expect}");
    }
    Ok(format!("{compared} matrices agree; {} explicit entries exact", entries.len()))
}
