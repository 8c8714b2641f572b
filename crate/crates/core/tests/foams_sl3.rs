use foam_core::exactalg::{Monomial, Poly, RingSpec};
use foam_core::foams_sl3::{AnnularDegree, Facet, Foam3, Seam, Theory3};
use foam_core::Error;
use proptest::prelude::*;

const O: Theory3 = Theory3::Oriented;
const U: Theory3 = Theory3::Unoriented;

fn x(ring: RingSpec, i: usize) -> Poly {
    ring.var(i)
}

fn mono(ring: RingSpec, e: [u32; 3], c: i128) -> Poly {
    Poly::monomial(ring, Monomial(e), c)
}

/// `h_n(x₁, x₂, x₃)` by listing monomials.
fn complete_h(ring: RingSpec, n: i64) -> Poly {
    let mut out = Poly::zero(ring);
    if n < 0 {
        return out;
    }
    let n = n as u32;
    for a in 0..=n {
        for b in 0..=n - a {
            out += &mono(ring, [a, b, n - a - b], 1);
        }
    }
    out
}

const PERMS: [([usize; 3], i128); 6] = [
    ([0, 1, 2], 1),
    ([1, 2, 0], 1),
    ([2, 0, 1], 1),
    ([1, 0, 2], -1),
    ([0, 2, 1], -1),
    ([2, 1, 0], -1),
];

/// Bialternant `a_d / a_(2,1,0)`.
fn bialternant(d: [u32; 3]) -> Poly {
    let ring = RingSpec::X_INT;
    let mut num = Poly::zero(ring);
    for (p, sgn) in PERMS {
        let mut e = [0u32; 3];
        for j in 0..3 {
            e[p[j]] = d[j];
        }
        num += &mono(ring, e, sgn);
    }
    let vdm = &(&ring.linear_form(0, 1) * &ring.linear_form(0, 2)) * &ring.linear_form(1, 2);
    num.exact_divide(&vdm).unwrap()
}

#[test]
fn coloring_counts() {
    assert_eq!(Foam3::theta(U, [0; 3], &[]).admissible_colorings().len(), 6);
    let anchored = Foam3::theta(U, [0; 3], &[2, 3, 1]);
    assert_eq!(anchored.admissible_colorings(), vec![vec![2, 3, 1]]);
    assert!(Foam3::sphere(U, 0, &[1, 2]).admissible_colorings().is_empty());
    let two = Foam3::sphere(U, 0, &[]).disjoint_union(&Foam3::sphere(U, 0, &[]));
    assert_eq!(two.admissible_colorings().len(), 9);
    assert_eq!(Foam3::theta(U, [0; 3], &[]).admissible_colorings()[0], vec![1, 2, 3]);
}

#[test]
fn unoriented_examples() {
    let r = RingSpec::X_MOD2;
    for i in 0..3usize {
        let l = i as u8 + 1;
        for d in 0..=4 {
            assert_eq!(Foam3::sphere(U, d, &[l, l]).evaluate().unwrap(), x(r, i).pow(d));
        }
    }
    for d in 0..=5 {
        assert_eq!(Foam3::sphere(U, d, &[]).evaluate().unwrap(), complete_h(r, d as i64 - 2));
    }
    for (labels, d) in [([1u8, 2, 3], [2u32, 0, 1]), ([3, 1, 2], [1, 1, 0]), ([2, 3, 1], [0, 3, 2])] {
        let mut e = [0u32; 3];
        for k in 0..3 {
            e[labels[k] as usize - 1] = d[k];
        }
        assert_eq!(Foam3::theta(U, d, &labels).evaluate().unwrap(), mono(r, e, 1));
    }
    for g in 0..=2u32 {
        for n in 1..=2usize {
            for d in 0..=2u32 {
                for i in 0..3usize {
                    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
                    let f = Foam3::closed(
                        U,
                        vec![Facet::new(g, 0, d, (0..2 * n).collect())],
                        vec![],
                        vec![i as u8 + 1; 2 * n],
                    );
                    let base = &r.linear_form(i.min(j), i.max(j)) * &r.linear_form(i.min(k), i.max(k));
                    let expect = &x(r, i).pow(d) * &base.pow(n as u32 + g - 1);
                    assert_eq!(f.evaluate().unwrap(), expect, "g={g} n={n} d={d} i={i}");
                }
            }
        }
    }
}

#[test]
fn parity_violation_reported() {
    let f = Foam3::sphere(U, 0, &[1]);
    assert_eq!(f.evaluate(), Err(Error::ParityViolation { i: 1, j: 2 }));
}

#[test]
fn oriented_sphere_is_minus_complete_h() {
    let r = RingSpec::X_INT;
    for d in 0..=6 {
        assert_eq!(Foam3::sphere(O, d, &[]).evaluate().unwrap(), -complete_h(r, d as i64 - 2), "d={d}");
    }
    assert_eq!(Foam3::sphere(O, 2, &[]).evaluate().unwrap().as_constant(), Some(-1));
    assert_eq!(Foam3::sphere(O, 3, &[]).evaluate().unwrap(), -r.elementary(1));
}

#[test]
fn oriented_theta_is_schur() {
    for total in 0..=5u32 {
        for d1 in 0..=total {
            for d2 in 0..=total - d1 {
                let d = [d1, d2, total - d1 - d2];
                assert_eq!(Foam3::theta(O, d, &[]).evaluate().unwrap(), bialternant(d), "{d:?}");
            }
        }
    }
    assert_eq!(Foam3::theta(O, [2, 1, 0], &[]).evaluate().unwrap().as_constant(), Some(1));
    assert_eq!(Foam3::theta(O, [2, 0, 1], &[]).evaluate().unwrap().as_constant(), Some(-1));
}

#[test]
fn oriented_anchored_examples() {
    let r = RingSpec::X_INT;
    for i in 0..3usize {
        let l = i as u8 + 1;
        for d in 0..=4 {
            let sign = if l.is_multiple_of(2) { 1 } else { -1 };
            assert_eq!(Foam3::sphere(O, d, &[l, l]).evaluate().unwrap(), x(r, i).pow(d).scale(sign));
        }
    }
    let c = Foam3::theta(O, [0; 3], &[]);
    assert_eq!(c.sign_exponent(&[1, 2, 3]).unwrap(), 0);
    assert_eq!(Foam3::sphere(O, 0, &[]).sign_exponent(&[1]).unwrap(), 1);
    assert_eq!(Foam3::sphere(O, 0, &[]).sign_exponent(&[2]).unwrap(), 0);
    for (p, sgn) in PERMS {
        let col: Vec<u8> = p.iter().map(|&k| k as u8 + 1).collect();
        let expect = if sgn == 1 { 0 } else { 1 };
        assert_eq!(c.sign_exponent(&col).unwrap(), expect, "{col:?}");
        let f = Foam3::theta(O, [1, 2, 0], &col);
        let mut e = [0u32; 3];
        e[p[0]] = 1;
        e[p[1]] = 2;
        assert_eq!(f.evaluate().unwrap(), mono(r, e, sgn));
    }
}

#[test]
fn permute_label_examples() {
    let f = Foam3::sphere(O, 2, &[3, 3]);
    let (g, eps) = f.permute_labels([2, 1, 3]);
    assert_eq!(eps, 0);
    assert_eq!(g.evaluate().unwrap(), f.evaluate().unwrap().permute_vars(&[1, 0, 2]));
    let f = Foam3::sphere(O, 2, &[1, 1]);
    let (g, eps) = f.permute_labels([2, 1, 3]);
    assert_eq!(eps, 1);
    assert_eq!(g.anchor_labels, vec![2, 2]);
    assert_eq!(f.evaluate().unwrap().permute_vars(&[1, 0, 2]), -g.evaluate().unwrap());
}

#[test]
fn kempe_examples() {
    let f = Foam3::theta(O, [0; 3], &[]);
    assert_eq!(f.kempe_move(&[1, 2, 3], 1, 2, 0).unwrap(), vec![2, 1, 3]);
    assert_ne!(f.sign_exponent(&[1, 2, 3]).unwrap(), f.sign_exponent(&[2, 1, 3]).unwrap());
    assert_eq!(f.kempe_move(&[1, 2, 3], 1, 2, 5).unwrap(), vec![1, 2, 3]);
    let two = Foam3::sphere(O, 0, &[]).disjoint_union(&Foam3::sphere(O, 0, &[]));
    assert_eq!(two.kempe_move(&[1, 2], 1, 2, 0).unwrap(), vec![2, 2]);
    let anchored = Foam3::theta(O, [0; 3], &[1, 2, 3]);
    assert_eq!(anchored.kempe_move(&[1, 2, 3], 1, 2, 0), Err(Error::AnchoredComponent));
}

#[test]
fn annular_degree_examples() {
    assert_eq!(Foam3::sphere(U, 0, &[1, 1]).annular_degree(), AnnularDegree::Klein([0, 0]));
    assert_eq!(Foam3::theta(U, [0; 3], &[1, 2, 3]).annular_degree(), AnnularDegree::Klein([0, 0]));
    assert_eq!(Foam3::sphere(U, 0, &[1, 2]).annular_degree(), AnnularDegree::Klein([1, 1]));
    let mut disk = Foam3::sphere(O, 0, &[3]);
    disk.anchor_signs = vec![1];
    assert_eq!(disk.annular_degree(), AnnularDegree::Lattice([-1, -1]));
    let mut s = Foam3::sphere(O, 0, &[2, 2]);
    s.anchor_signs = vec![1, -1];
    assert!(s.annular_degree().is_zero());
}

#[test]
fn validation_rejects_bad_input() {
    let bad_slot = Foam3::closed(U, vec![Facet::new(0, 1, 0, vec![])], vec![], vec![]);
    assert!(bad_slot.validate().is_err());
    let bad_label = Foam3::sphere(U, 0, &[4, 4]);
    assert!(bad_label.validate().is_err());
    let reuse = Foam3::closed(
        U,
        vec![Facet::new(0, 2, 0, vec![]), Facet::new(0, 1, 0, vec![])],
        vec![Seam::new([(0, 0), (0, 0), (1, 0)])],
        vec![],
    );
    assert!(reuse.validate().is_err());
    assert!(Foam3::theta(O, [1, 2, 3], &[3, 1, 2]).validate().is_ok());
}

/// Random seam-circle foams whose anchor counts respect the parity forced by
/// a line meeting every closed bicolored surface an even number of times.
/// Oriented anchor signs alternate on a facet and agree across a pierced seam.
fn arb_foam(theory: Theory3) -> impl Strategy<Value = Foam3> {
    (1usize..=6)
        .prop_flat_map(|n| {
            (
                prop::collection::vec((0u32..=2, 0u32..=3, 0usize..=1, 1u8..=3), n),
                prop::collection::vec((prop::sample::subsequence((0..n).collect::<Vec<_>>(), 3.min(n)), any::<bool>(), any::<bool>(), any::<bool>()), 0..=3),
                any::<u64>(),
            )
        })
        .prop_map(move |(facets, seams, seed)| {
            let n = facets.len();
            let mut out: Vec<Facet> = facets.iter().map(|&(g, d, _, _)| Facet::new(g, 0, d, vec![])).collect();
            let mut labels = Vec::new();
            let mut signs = Vec::new();
            let mut seam_list = Vec::new();
            for (fs, flip, pierce, up) in seams {
                if fs.len() < 3 {
                    continue;
                }
                let mut sides = [(0, 0); 3];
                for (k, &f) in fs.iter().enumerate() {
                    sides[k] = (f, out[f].slots as usize);
                    out[f].slots += 1;
                }
                if flip {
                    sides.swap(1, 2);
                }
                seam_list.push(Seam::new(sides));
                if pierce {
                    // Labels get fixed below from the facet's own label.
                    for &f in &fs {
                        out[f].anchors.push(labels.len());
                        labels.push(0);
                        signs.push(if up { 1 } else { -1 });
                    }
                }
            }
            for (f, &(_, _, pairs, label)) in facets.iter().enumerate() {
                for k in 0..2 * pairs {
                    out[f].anchors.push(labels.len());
                    labels.push(label);
                    signs.push(if k % 2 == 0 { 1 } else { -1 });
                }
            }
            // Pierced facets reuse their own label when they have one.
            let mut s = seed;
            for f in 0..n {
                let own = facets[f].3;
                for &a in &out[f].anchors {
                    if labels[a] == 0 {
                        labels[a] = if facets[f].2 > 0 { own } else { (s % 3) as u8 + 1 };
                        s /= 3;
                    }
                }
            }
            let mut foam = Foam3::closed(theory, out, seam_list, labels);
            if theory == Theory3::Oriented {
                foam.anchor_signs = signs;
            }
            foam
        })
}

fn coloring_strategy() -> impl Strategy<Value = (Foam3, usize, (u8, u8), usize)> {
    (arb_foam(O), any::<usize>(), prop::sample::select(vec![(1u8, 2u8), (1, 3), (2, 3)]), 0usize..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn unoriented_integral_and_graded(f in arb_foam(U)) {
        prop_assert!(f.validate().is_ok());
        let v = match f.evaluate() {
            Ok(v) => v,
            Err(Error::ParityViolation { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
        };
        if !v.is_zero() {
            prop_assert_eq!(v.homogeneous_degree().map(i64::from), Some(f.expected_degree()));
            prop_assert!(f.annular_degree().is_zero());
        }
    }

    #[test]
    fn oriented_integral_symmetric_graded(f in arb_foam(O)) {
        let v = match f.evaluate() {
            Ok(v) => v,
            Err(Error::ParityViolation { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
        };
        if !v.is_zero() {
            prop_assert_eq!(v.homogeneous_degree().map(i64::from), Some(f.expected_degree()));
        }
        if !f.admissible_colorings().is_empty() {
            prop_assert!(f.annular_degree().is_zero());
        }
        let g = Foam3 { anchor_labels: vec![], anchor_signs: vec![], facets: f.facets.iter().map(|x| Facet { anchors: vec![], ..x.clone() }).collect(), ..f.clone() };
        let w = g.evaluate().unwrap();
        for p in [[1usize, 0, 2], [0, 2, 1]] {
            prop_assert_eq!(w.permute_vars(&p), w.clone());
        }
    }

    #[test]
    fn multiplicative(f in arb_foam(O), g in arb_foam(O)) {
        if let (Ok(a), Ok(b)) = (f.evaluate(), g.evaluate()) {
            prop_assert_eq!(f.disjoint_union(&g).evaluate().unwrap(), &a * &b);
        }
    }

    #[test]
    fn multiplicative_unoriented(f in arb_foam(U), g in arb_foam(U)) {
        if let (Ok(a), Ok(b)) = (f.evaluate(), g.evaluate()) {
            prop_assert_eq!(f.disjoint_union(&g).evaluate().unwrap(), &a * &b);
        }
    }

    #[test]
    fn label_permutation_sign(f in arb_foam(O), k in 0usize..6) {
        let sigma = PERMS[k].0;
        let sigma_labels = [sigma[0] as u8 + 1, sigma[1] as u8 + 1, sigma[2] as u8 + 1];
        let Ok(v) = f.evaluate() else { return Ok(()) };
        let (g, eps) = f.permute_labels(sigma_labels);
        let w = g.evaluate().unwrap();
        let lhs = v.permute_vars(&sigma);
        prop_assert_eq!(lhs, if eps == 1 { -w } else { w });
    }

    #[test]
    fn kempe_sign_lemma((f, pick, (i, j), comp) in coloring_strategy()) {
        let cols = f.admissible_colorings();
        if cols.is_empty() {
            return Ok(());
        }
        let c = &cols[pick % cols.len()];
        match f.kempe_move(c, i, j, comp) {
            Ok(d) => prop_assert!(cols.contains(&d)),
            Err(Error::AnchoredComponent) => {}
            Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
        }
    }
}
