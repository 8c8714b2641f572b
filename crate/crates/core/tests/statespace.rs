use foam_core::exactalg::{Matrix, Poly, PolyMatrix, RingSpec};
use foam_core::statespace::{
    basis_word, cobordism_matrix, g_alpha_matrix, gram_matrix, phi_map, standard_generators, state_space, Factor,
    GeneratorFoam, GradedRank, TensorWord, Theory,
};
use foam_core::surfaces_sl2::{compose, Circle, CircleConfig, Cobordism2, Component2};
use foam_core::Error;

fn a(s: &str) -> Poly {
    Poly::parse(RingSpec::ALPHA, s).unwrap()
}

fn x(ring: RingSpec, s: &str) -> Poly {
    Poly::parse(ring, s).unwrap()
}

fn poly_matrix(ring: RingSpec, rows: &[&[&str]]) -> PolyMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| x(ring, s)).collect()).collect())
}

fn ess(r: u32) -> Circle {
    Circle::essential(r)
}

fn con() -> Circle {
    Circle::contractible()
}

fn cfg(c: &[Circle]) -> CircleConfig {
    CircleConfig::new(c.to_vec())
}

fn piece(bottom: &[usize], top: &[usize], dots: u32) -> Component2 {
    Component2 { dots, bottom: bottom.to_vec(), top: top.to_vec(), ..Component2::default() }
}

fn cob(pieces: Vec<Component2>, bottom: &[Circle], top: &[Circle]) -> Cobordism2 {
    Cobordism2::new(pieces, vec![], cfg(bottom), cfg(top)).unwrap()
}

fn laurent(plus: i64, minus: i64, on_a: bool) -> GradedRank {
    if on_a {
        GradedRank::from_terms(&[(0, plus), (0, minus)])
    } else {
        GradedRank::from_terms(&[(plus, 0), (minus, 0)])
    }
}

#[test]
fn generator_examples() {
    let one_con = standard_generators(&cfg(&[con()]), Theory::Sl2);
    let degs: Vec<_> = one_con.iter().map(GeneratorFoam::bidegree).collect();
    assert_eq!(degs, vec![(-1, 0), (1, 0)]);
    let one_ess = standard_generators(&cfg(&[ess(0)]), Theory::Sl2);
    let degs: Vec<_> = one_ess.iter().map(GeneratorFoam::bidegree).collect();
    assert_eq!(degs, vec![(0, 1), (0, -1)]);
    assert_eq!(standard_generators(&CircleConfig::standard(1, 2), Theory::Sl2).len(), 8);
    assert_eq!(standard_generators(&CircleConfig::standard(1, 2), Theory::Sl3o).len(), 27);
}

#[test]
fn gram_examples() {
    let g = gram_matrix(&standard_generators(&cfg(&[con()]), Theory::Sl2), Theory::Sl2).unwrap();
    assert_eq!(g.matrix, poly_matrix(RingSpec::ALPHA, &[&["0", "1"], &["1", "a1 + a2"]]));
    let g = gram_matrix(&standard_generators(&cfg(&[ess(0)]), Theory::Sl2), Theory::Sl2).unwrap();
    assert_eq!(g.matrix, poly_matrix(RingSpec::ALPHA, &[&["1", "0"], &["0", "1"]]));
    let r = RingSpec::X_INT;
    let e1 = r.elementary(1);
    let e2 = r.elementary(2);
    let h2 = &(&e1 * &e1) - &e2;
    let expect = Matrix::from_rows(vec![
        vec![Poly::zero(r), Poly::zero(r), -Poly::one(r)],
        vec![Poly::zero(r), -Poly::one(r), -e1.clone()],
        vec![-Poly::one(r), -e1, -h2],
    ]);
    let g = gram_matrix(&standard_generators(&cfg(&[con()]), Theory::Sl3o), Theory::Sl3o).unwrap();
    assert_eq!(g.matrix, expect);
    let g = gram_matrix(&standard_generators(&cfg(&[ess(0)]), Theory::Sl3o), Theory::Sl3o).unwrap();
    assert_eq!(g.matrix, poly_matrix(r, &[&["-1", "0", "0"], &["0", "1", "0"], &["0", "0", "-1"]]));
    let u = RingSpec::X_MOD2;
    let g = gram_matrix(&standard_generators(&cfg(&[con()]), Theory::Sl3u), Theory::Sl3u).unwrap();
    let h2u = &(&u.elementary(1) * &u.elementary(1)) + &u.elementary(2);
    assert_eq!(g.matrix.get(2, 2), &h2u);
    assert_eq!(g.matrix.get(0, 2), &Poly::one(u));
}

#[test]
fn sl2_rank_theorem() {
    for n in 0..=4usize {
        for m in 0..=4 - n {
            let res = state_space(&CircleConfig::standard(n, m), Theory::Sl2).unwrap();
            assert_eq!(res.rank, 1 << (n + m));
            let mut expect = GradedRank::one();
            for _ in 0..n {
                expect = expect.mul(&laurent(1, -1, false));
            }
            for _ in 0..m {
                expect = expect.mul(&laurent(1, -1, true));
            }
            assert_eq!(res.grank, expect, "n={n} m={m}");
            assert_eq!(res.grank.at_one(), res.rank);
        }
    }
    let empty = state_space(&CircleConfig::empty(), Theory::Sl2).unwrap();
    assert_eq!((empty.rank, empty.grank.clone()), (1, GradedRank::one()));
    assert_eq!(format!("{}", empty.grank), "1");
}

#[test]
fn sl3_rank_proposition() {
    for theory in [Theory::Sl3o, Theory::Sl3u] {
        for n in 0..=3usize {
            for m in 0..=3 - n {
                let res = state_space(&CircleConfig::standard(n, m), theory).unwrap();
                assert_eq!(res.rank, 3usize.pow((n + m) as u32));
                let mut expect = GradedRank::from_terms(&[(0, 0), (0, 0), (0, 0)]);
                expect = GradedRank(expect.0.into_iter().map(|(k, v)| (k, v.pow(m as u32))).collect());
                for _ in 0..n {
                    expect = expect.mul(&GradedRank::from_terms(&[(2, 0), (0, 0), (-2, 0)]));
                }
                assert_eq!(res.grank, expect, "{theory:?} n={n} m={m}");
            }
        }
    }
}

#[test]
fn phi_examples() {
    let c = cfg(&[con()]);
    let gens = standard_generators(&c, Theory::Sl2);
    let w = phi_map(&gens[0]).unwrap();
    assert_eq!(w, TensorWord(vec![Factor::One]));
    assert_eq!(w.bidegree(), (-1, 0));
    let c = CircleConfig::standard(1, 2);
    let gens = standard_generators(&c, Theory::Sl2);
    // Labels (1, 1) on the two essential circles: v₁ outside, v₀' inside.
    let w = phi_map(&gens[0]).unwrap();
    assert_eq!(w, TensorWord(vec![Factor::One, Factor::V1, Factor::V0p]));
    assert_eq!(format!("{w}"), "1⊗v1⊗v0'");
    for g in &gens {
        let w = phi_map(g).unwrap();
        let (q, adeg) = g.bidegree();
        assert_eq!(w.bidegree(), (q, adeg));
    }
    let outer = standard_generators(&cfg(&[ess(0)]), Theory::Sl2);
    assert_eq!(phi_map(&outer[0]).unwrap().bidegree(), (0, 1));
    let dotted = match &outer[0] {
        GeneratorFoam::Sl2(c) => {
            let mut c = c.clone();
            c.components[0].dots = 1;
            GeneratorFoam::Sl2(c)
        }
        _ => unreachable!(),
    };
    assert_eq!(phi_map(&dotted), Err(Error::NotStandardGenerator));
}

/// Coefficient of `to` in the image of `from`.
fn coeff(m: &PolyMatrix, s: &Cobordism2, from: &[Factor], to: &[Factor]) -> Poly {
    let find = |c: &CircleConfig, w: &[Factor]| {
        (0..1usize << c.len()).find(|&i| basis_word(c, i).0 == w).expect("word in basis")
    };
    m.get(find(&s.top, to), find(&s.bottom, from)).clone()
}

fn type_a(extra: bool) -> Cobordism2 {
    if extra {
        cob(vec![piece(&[0], &[0], 0), piece(&[1, 2], &[1], 0)], &[ess(0), ess(1), con()], &[ess(0), ess(1)])
    } else {
        cob(vec![piece(&[0, 1], &[0], 0)], &[ess(0), con()], &[ess(0)])
    }
}

fn type_b(extra: bool) -> Cobordism2 {
    if extra {
        cob(vec![piece(&[0], &[0], 0), piece(&[1, 2], &[1], 0)], &[ess(0), ess(1), ess(2)], &[ess(0), con()])
    } else {
        cob(vec![piece(&[0, 1], &[0], 0)], &[ess(0), ess(1)], &[con()])
    }
}

fn type_c(extra: bool) -> Cobordism2 {
    if extra {
        cob(vec![piece(&[0], &[0], 0), piece(&[1], &[1, 2], 0)], &[ess(0), ess(1)], &[ess(0), ess(1), con()])
    } else {
        cob(vec![piece(&[0], &[0, 1], 0)], &[ess(0)], &[ess(0), con()])
    }
}

fn type_d(extra: bool) -> Cobordism2 {
    if extra {
        cob(vec![piece(&[0], &[0], 0), piece(&[1], &[1, 2], 0)], &[ess(0), con()], &[ess(0), ess(1), ess(2)])
    } else {
        cob(vec![piece(&[0], &[0, 1], 0)], &[con()], &[ess(0), ess(1)])
    }
}

#[test]
fn elementary_formulas() {
    use Factor::*;
    let s = type_a(false);
    let m = cobordism_matrix(&s).unwrap();
    assert_eq!(coeff(&m, &s, &[One, V0], &[V0]), a("1"));
    assert_eq!(coeff(&m, &s, &[One, V1], &[V1]), a("1"));
    assert_eq!(coeff(&m, &s, &[X, V0], &[V0]), a("a1"));
    assert_eq!(coeff(&m, &s, &[X, V1], &[V1]), a("a2"));
    assert_eq!(coeff(&m, &s, &[X, V1], &[V0]), a("0"));

    let s = type_b(false);
    let m = cobordism_matrix(&s).unwrap();
    for (from, one, xc) in [([V0, V0p], "0", "0"), ([V1, V0p], "-a1", "1"), ([V0, V1p], "-a2", "1"), ([V1, V1p], "0", "0")] {
        assert_eq!(coeff(&m, &s, &from, &[One]), a(one), "{from:?}");
        assert_eq!(coeff(&m, &s, &from, &[X]), a(xc), "{from:?}");
    }

    let s = type_c(false);
    let m = cobordism_matrix(&s).unwrap();
    assert_eq!(coeff(&m, &s, &[V0], &[X, V0]), a("1"));
    assert_eq!(coeff(&m, &s, &[V0], &[One, V0]), a("-a2"));
    assert_eq!(coeff(&m, &s, &[V1], &[X, V1]), a("1"));
    assert_eq!(coeff(&m, &s, &[V1], &[One, V1]), a("-a1"));

    let s = type_d(false);
    let m = cobordism_matrix(&s).unwrap();
    assert_eq!(coeff(&m, &s, &[One], &[V0, V1p]), a("1"));
    assert_eq!(coeff(&m, &s, &[One], &[V1, V0p]), a("1"));
    assert_eq!(coeff(&m, &s, &[One], &[V0, V0p]), a("0"));
    assert_eq!(coeff(&m, &s, &[X], &[V0, V1p]), a("a1"));
    assert_eq!(coeff(&m, &s, &[X], &[V1, V0p]), a("a2"));

    // Contractible merge: X ⊗ X ↦ E₁X - E₂.
    let s = cob(vec![piece(&[0, 1], &[0], 0)], &[con(), con()], &[con()]);
    let m = cobordism_matrix(&s).unwrap();
    assert_eq!(coeff(&m, &s, &[X, X], &[X]), a("a1 + a2"));
    assert_eq!(coeff(&m, &s, &[X, X], &[One]), a("-a1*a2"));
}

fn catalogue() -> Vec<Cobordism2> {
    let mut out = Vec::new();
    for extra in [false, true] {
        out.extend([type_a(extra), type_b(extra), type_c(extra), type_d(extra)]);
    }
    out.push(cob(vec![piece(&[], &[0], 0)], &[], &[con()]));
    out.push(cob(vec![piece(&[0], &[], 0)], &[con()], &[]));
    out.push(cob(vec![piece(&[0, 1], &[0], 0)], &[con(), con()], &[con()]));
    out.push(cob(vec![piece(&[0], &[0, 1], 0)], &[con()], &[con(), con()]));
    out.push(cob(vec![piece(&[0], &[0], 1)], &[con()], &[con()]));
    out.push(cob(vec![piece(&[0], &[0], 1)], &[ess(0)], &[ess(0)]));
    out.push(cob(vec![piece(&[0], &[0], 0), piece(&[1], &[1], 1)], &[ess(0), ess(1)], &[ess(0), ess(1)]));
    out.push(cob(vec![piece(&[0], &[0], 0), piece(&[], &[1], 0)], &[ess(0)], &[ess(0), con()]));
    out.push(cob(vec![piece(&[0], &[0], 0), piece(&[1], &[], 0)], &[ess(0), con()], &[ess(0)]));
    out.push(cob(vec![piece(&[0, 1], &[0], 2)], &[ess(0), con()], &[ess(0)]));
    out
}

#[test]
fn functor_isomorphism() {
    for s in catalogue() {
        let m = cobordism_matrix(&s).unwrap();
        assert_eq!(m, g_alpha_matrix(&s).unwrap(), "{s:?}");
    }
}

#[test]
fn parity_swapped_variants() {
    use Factor::*;
    // A spectator circle outside moves the active circles one step inward:
    // primed factors and α₁ ↔ α₂.
    let s = type_a(true);
    let m = cobordism_matrix(&s).unwrap();
    assert_eq!(coeff(&m, &s, &[X, V1, V0p], &[V1, V0p]), a("a2"));
    assert_eq!(coeff(&m, &s, &[X, V1, V1p], &[V1, V1p]), a("a1"));
    let s = type_b(true);
    let m = cobordism_matrix(&s).unwrap();
    assert_eq!(coeff(&m, &s, &[V0, V1p, V0], &[X, V0]), a("1"));
    assert_eq!(coeff(&m, &s, &[V0, V1p, V0], &[One, V0]), a("-a2"));
    assert_eq!(coeff(&m, &s, &[V0, V0p, V1], &[One, V0]), a("-a1"));
    let s = type_c(true);
    let m = cobordism_matrix(&s).unwrap();
    assert_eq!(coeff(&m, &s, &[V1, V0p], &[One, V1, V0p]), a("-a1"));
    let s = type_d(true);
    let m = cobordism_matrix(&s).unwrap();
    assert_eq!(coeff(&m, &s, &[X, V1], &[V1, V0p, V1]), a("a2"));
    assert_eq!(coeff(&m, &s, &[X, V1], &[V1, V1p, V0]), a("a1"));
}

#[test]
fn functoriality_and_homogeneity() {
    let cat = catalogue();
    let mut pairs = 0;
    for s1 in &cat {
        for s2 in &cat {
            if s1.top != s2.bottom {
                continue;
            }
            pairs += 1;
            let whole = compose(s1, s2).unwrap();
            let lhs = cobordism_matrix(&whole).unwrap();
            let rhs = cobordism_matrix(s2).unwrap().mul_with(&cobordism_matrix(s1).unwrap(), &a("0"));
            assert_eq!(lhs, rhs);
        }
    }
    assert!(pairs >= 20, "only {pairs} composable pairs");
    for s in &cat {
        let m = cobordism_matrix(s).unwrap();
        let (q, adeg) = s.bidegree();
        let src: Vec<_> = standard_generators(&s.bottom, Theory::Sl2).iter().map(GeneratorFoam::bidegree).collect();
        let dst: Vec<_> = standard_generators(&s.top, Theory::Sl2).iter().map(GeneratorFoam::bidegree).collect();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let e = m.get(i, j);
                if e.is_zero() {
                    continue;
                }
                assert_eq!(e.homogeneous_degree().map(i64::from), Some(q + src[j].0 - dst[i].0));
                assert_eq!(dst[i].1, src[j].1 + adeg);
            }
        }
    }
}

#[test]
fn anchored_cobordism_maps() {
    // An anchored disk capping an essential circle reads off the label.
    let cap = Cobordism2::new(
        vec![Component2 { anchors: vec![0], bottom: vec![0], ..Component2::default() }],
        vec![1],
        cfg(&[ess(0)]),
        CircleConfig::empty(),
    )
    .unwrap();
    let m = cobordism_matrix(&cap).unwrap();
    assert_eq!(m, poly_matrix(RingSpec::ALPHA, &[&["1", "0"]]));
    assert_eq!(cap.bidegree(), (0, -1));
}
