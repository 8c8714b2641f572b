use foam_core::exactalg::{Poly, RingSpec};
use foam_core::surfaces_sl2::{
    compose, pairing, AnchoredSurface, Circle, CircleConfig, Cobordism2, Component2,
};
use foam_core::Error;
use proptest::prelude::*;

fn a(s: &str) -> Poly {
    Poly::parse(RingSpec::ALPHA, s).unwrap()
}

fn alpha(i: usize) -> Poly {
    RingSpec::ALPHA.var(i)
}

/// `h_n(α₁, α₂)` as an explicit monomial sum.
fn complete_h(n: i64) -> Poly {
    let mut out = Poly::zero(RingSpec::ALPHA);
    if n < 0 {
        return out;
    }
    for i in 0..=n as u32 {
        out += &(&alpha(0).pow(i) * &alpha(1).pow(n as u32 - i));
    }
    out
}

#[test]
fn sphere_table() {
    for d in 0..=4 {
        assert_eq!(AnchoredSurface::sphere(d, &[2, 2]).evaluate().unwrap(), alpha(0).pow(d));
        assert_eq!(AnchoredSurface::sphere(d, &[1, 1]).evaluate().unwrap(), alpha(1).pow(d));
        assert!(AnchoredSurface::sphere(d, &[1, 2]).evaluate().unwrap().is_zero());
        assert!(AnchoredSurface::sphere(d, &[2, 1]).evaluate().unwrap().is_zero());
    }
    assert_eq!(AnchoredSurface::sphere(1, &[]).evaluate().unwrap(), a("1"));
    assert!(AnchoredSurface::sphere(0, &[]).evaluate().unwrap().is_zero());
}

fn genus_surface(g: u32, d: u32, labels: &[u8]) -> AnchoredSurface {
    AnchoredSurface::new(vec![Component2::closed(g, d, (0..labels.len()).collect())], labels.to_vec()).unwrap()
}

#[test]
fn genus_family() {
    let diff = &alpha(0) - &alpha(1);
    for g in 0..=3u32 {
        for d in 0..=3u32 {
            // Unanchored: (α₁^d + (-1)^{g-1} α₂^d) (α₁ - α₂)^{g-1}.
            let expect = if g == 0 {
                complete_h(d as i64 - 1)
            } else {
                let sign = if (g - 1) % 2 == 0 { 1 } else { -1 };
                &(&alpha(0).pow(d) + &alpha(1).pow(d).scale(sign)) * &diff.pow(g - 1)
            };
            assert_eq!(genus_surface(g, d, &[]).evaluate().unwrap(), expect, "g={g} d={d}");
            for k in 1..=2u32 {
                let twos = vec![2u8; 2 * k as usize];
                let ones = vec![1u8; 2 * k as usize];
                let e = k + g - 1;
                assert_eq!(genus_surface(g, d, &twos).evaluate().unwrap(), &alpha(0).pow(d) * &diff.pow(e));
                let neg = &alpha(1) - &alpha(0);
                assert_eq!(genus_surface(g, d, &ones).evaluate().unwrap(), &alpha(1).pow(d) * &neg.pow(e));
            }
        }
    }
    assert!(genus_surface(2, 0, &[]).evaluate().unwrap().is_zero());
}

fn essential_disk(label: u8) -> Cobordism2 {
    Cobordism2::new(
        vec![Component2 { anchors: vec![0], top: vec![0], ..Component2::default() }],
        vec![label],
        CircleConfig::empty(),
        CircleConfig::new(vec![Circle::essential(0)]),
    )
    .unwrap()
}

fn cup(dots: u32) -> Cobordism2 {
    Cobordism2::new(
        vec![Component2 { dots, top: vec![0], ..Component2::default() }],
        vec![],
        CircleConfig::empty(),
        CircleConfig::new(vec![Circle::contractible()]),
    )
    .unwrap()
}

#[test]
fn bidegree_examples() {
    let two = essential_disk(1).disjoint_union(&essential_disk(2));
    let two = Cobordism2 { top: CircleConfig::standard(0, 2), ..two };
    assert_eq!(two.bidegree(), (0, 2));
    let swapped = Cobordism2 { anchor_labels: vec![2, 1], ..two.clone() };
    assert_eq!(swapped.bidegree(), (0, -2));
    let same = Cobordism2 { anchor_labels: vec![1, 1], ..two };
    assert_eq!(same.bidegree(), (0, 0));
    assert_eq!(cup(0).bidegree(), (-1, 0));
    assert_eq!(cup(1).bidegree(), (1, 0));
    assert_eq!(AnchoredSurface::sphere(0, &[]).bidegree(), (-2, 0));
}

#[test]
fn composition_examples() {
    let s = compose(&essential_disk(1), &essential_disk(1).reflect()).unwrap().into_closed().unwrap();
    assert_eq!(s.components.len(), 1);
    assert_eq!(s.euler(), 2);
    assert_eq!(s.anchor_labels, vec![1, 1]);
    assert_eq!(s.evaluate().unwrap(), a("1"));
    assert_eq!(pairing(&cup(0), &cup(1)).unwrap(), a("1"));
    assert_eq!(pairing(&essential_disk(1), &essential_disk(2)).unwrap(), a("0"));
    let q = compose(&cup(1), &cup(0).reflect()).unwrap();
    assert_eq!(q.bidegree().0, cup(1).bidegree().0 + cup(0).reflect().bidegree().0);
    assert!(matches!(compose(&cup(0), &essential_disk(1).reflect()), Err(Error::BoundaryMismatch(_))));
}

#[test]
fn tau_examples() {
    let s = AnchoredSurface::sphere(1, &[2, 2]);
    let t = s.tau();
    assert_eq!(t.anchor_labels, vec![1, 1]);
    assert_eq!(t.evaluate().unwrap(), s.evaluate().unwrap().permute_vars(&[1, 0]));
    let two = AnchoredSurface::sphere(0, &[1, 2]);
    assert_eq!(two.bidegree().1, 2);
    assert_eq!(two.tau().bidegree().1, -2);
}

#[test]
fn validation_rejects_bad_input() {
    assert!(AnchoredSurface::new(vec![Component2::closed(0, 0, vec![0])], vec![1]).is_err());
    assert!(AnchoredSurface::new(vec![Component2::closed(0, 0, vec![0, 1])], vec![1, 3]).is_err());
    assert!(AnchoredSurface::new(vec![Component2::closed(0, 0, vec![0, 0])], vec![1, 1]).is_err());
}

/// Realizable anchor orders: each component's anchors go in as one
/// consecutive block, inserted into a random gap of the line so far.
fn arb_surface() -> impl Strategy<Value = AnchoredSurface> {
    prop::collection::vec((0u32..=3, 0u32..=4, 0usize..=3, 0u32..=1, 0u32..=1, any::<u16>()), 1..=5)
        .prop_flat_map(|comps| {
            let nanchors: usize = comps.iter().map(|c| 2 * c.2).sum();
            (Just(comps), prop::collection::vec(1u8..=2, nanchors))
        })
        .prop_map(|(comps, labels)| {
            let mut line: Vec<usize> = Vec::new();
            for (ci, c) in comps.iter().enumerate() {
                let at = c.5 as usize % (line.len() + 1);
                line.splice(at..at, std::iter::repeat_n(ci, 2 * c.2));
            }
            let components = comps
                .iter()
                .enumerate()
                .map(|(ci, &(g, d, _, s1, s2, _))| {
                    let anchors = (0..line.len()).filter(|&p| line[p] == ci).collect();
                    Component2 { genus: g, dots: d, shifted: [s1, s2], anchors, ..Component2::default() }
                })
                .collect();
            AnchoredSurface { components, anchor_labels: labels }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn homogeneous_and_integral(s in arb_surface()) {
        prop_assert!(s.validate().is_ok());
        let v = s.evaluate().unwrap();
        let (q, adeg) = s.bidegree();
        if !v.is_zero() {
            prop_assert_eq!(v.homogeneous_degree().map(i64::from), Some(q));
        }
        prop_assert!(v.is_zero() || adeg == 0);
    }

    #[test]
    fn shifted_dots_expand_to_plain_dots(s in arb_surface()) {
        let mut total = Poly::zero(RingSpec::ALPHA);
        for (c, plain) in s.expand_shifted() {
            total += &(&c * &plain.evaluate().unwrap());
        }
        prop_assert_eq!(total, s.evaluate().unwrap());
    }

    #[test]
    fn multiplicative(s in arb_surface(), t in arb_surface()) {
        let u = s.disjoint_union(&t);
        prop_assert_eq!(u.evaluate().unwrap(), &s.evaluate().unwrap() * &t.evaluate().unwrap());
    }

    #[test]
    fn tau_swaps_variables(s in arb_surface()) {
        prop_assert_eq!(s.tau().evaluate().unwrap(), s.evaluate().unwrap().permute_vars(&[1, 0]));
        prop_assert_eq!(s.tau().bidegree().1, -s.bidegree().1);
    }

    #[test]
    fn pairing_symmetric(labels in prop::collection::vec(1u8..=2, 2), d in 0u32..3, e in 0u32..3) {
        let x = essential_disk(labels[0]).disjoint_union(&cup(d));
        let y = essential_disk(labels[1]).disjoint_union(&cup(e));
        prop_assert_eq!(pairing(&x, &y).unwrap(), pairing(&y, &x).unwrap());
    }
}
