//! Seeded random surfaces and foams for the property checks.

use foam_core::foams_sl3::{Facet, Foam3, Seam, Theory3};
use foam_core::surfaces_sl2::{AnchoredSurface, Component2};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Up to five components with genus ≤ 3, at most 4 dots (plain or
/// shifted) and at most 3 anchor pairs. Each component's anchors form one
/// consecutive block on the line, as for disjoint embedded surfaces.
/// Half of the components carry a single anchor label.
pub fn surface(rng: &mut ChaCha8Rng) -> AnchoredSurface {
    let n = rng.gen_range(1..=5);
    let mut line: Vec<usize> = Vec::new();
    let mut components = Vec::with_capacity(n);
    for ci in 0..n {
        let total = rng.gen_range(0..=4u32);
        let s1 = rng.gen_range(0..=total.min(1));
        let s2 = rng.gen_range(0..=(total - s1).min(1));
        let pairs = rng.gen_range(0..=3usize);
        let at = rng.gen_range(0..=line.len());
        line.splice(at..at, std::iter::repeat_n(ci, 2 * pairs));
        components.push(Component2 {
            genus: rng.gen_range(0..=3),
            dots: total - s1 - s2,
            shifted: [s1, s2],
            ..Component2::default()
        });
    }
    for (p, &ci) in line.iter().enumerate() {
        components[ci].anchors.push(p);
    }
    let uniform: Vec<Option<u8>> = (0..n).map(|_| rng.gen::<bool>().then(|| rng.gen_range(1..=2))).collect();
    let anchor_labels = line.iter().map(|&ci| uniform[ci].unwrap_or_else(|| rng.gen_range(1..=2))).collect();
    AnchoredSurface { components, anchor_labels }
}

/// Seam-circle foam with at most `max_facets` facets (genus ≤ 2, dots ≤ 3)
/// and up to three seams on distinct facets. The line meets a facet in
/// pairs of points (signs +, -) or pierces a seam through its three facets
/// (one common sign). Most pairs share a label and most piercings use three
/// distinct labels; the rest are labeled at random.
pub fn foam(rng: &mut ChaCha8Rng, theory: Theory3, max_facets: usize, anchored: bool) -> Foam3 {
    let n = rng.gen_range(1..=max_facets);
    let mut facets: Vec<Facet> =
        (0..n).map(|_| Facet::new(rng.gen_range(0..=2), 0, rng.gen_range(0..=3), vec![])).collect();
    let mut seams = Vec::new();
    let mut labels: Vec<u8> = Vec::new();
    let mut signs: Vec<i8> = Vec::new();
    fn anchor(f: &mut Facet, l: u8, s: i8, labels: &mut Vec<u8>, signs: &mut Vec<i8>) {
        f.anchors.push(labels.len());
        labels.push(l);
        signs.push(s);
    }
    if n >= 3 {
        for _ in 0..rng.gen_range(0..=3) {
            let picked: Vec<usize> = rand::seq::index::sample(rng, n, 3).into_vec();
            let mut sides = [(0, 0); 3];
            for (k, &f) in picked.iter().enumerate() {
                sides[k] = (f, facets[f].slots as usize);
                facets[f].slots += 1;
            }
            seams.push(Seam::new(sides));
            if rng.gen_ratio(1, 3) {
                let mut ls = [1u8, 2, 3];
                if rng.gen_ratio(3, 4) {
                    ls.shuffle(rng);
                } else {
                    ls = [rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3)];
                }
                let s = if rng.gen() { 1 } else { -1 };
                for (k, &f) in picked.iter().enumerate() {
                    anchor(&mut facets[f], ls[k], s, &mut labels, &mut signs);
                }
            }
        }
    }
    for (f, facet) in facets.iter_mut().enumerate() {
        let forced = anchored && f == 0 && labels.is_empty();
        if forced || rng.gen_ratio(1, 3) {
            let a = rng.gen_range(1..=3);
            let b = if rng.gen_ratio(3, 4) { a } else { rng.gen_range(1..=3) };
            anchor(facet, a, 1, &mut labels, &mut signs);
            anchor(facet, b, -1, &mut labels, &mut signs);
        }
    }
    let mut out = Foam3::closed(theory, facets, seams, labels);
    if theory == Theory3::Oriented {
        out.anchor_signs = signs;
    }
    out
}

/// The same foam with the line removed.
pub fn unanchored(f: &Foam3) -> Foam3 {
    Foam3 {
        anchor_labels: vec![],
        anchor_signs: vec![],
        facets: f.facets.iter().map(|x| Facet { anchors: vec![], ..x.clone() }).collect(),
        ..f.clone()
    }
}
