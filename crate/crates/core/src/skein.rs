//! Randomized local-relation suites. A case embeds a local pattern into a
//! random closed context and compares the evaluations of the two sides.
//!
//! Contexts are built from abstract pieces: a tube between two pieces merges
//! them, a tube from a piece to itself adds a handle. Every SL(3) piece has a
//! target color so that most contexts admit a coloring.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactalg::{Poly, RingSpec};
use crate::foams_sl3::{Facet, Foam3, Seam, Theory3};
use crate::surfaces_sl2::{AnchoredSurface, Component2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Sl2TwoDots,
    Sl2NeckCutting,
    Sl2NeckCuttingLine,
    Sl2CupOffLine,
    Sl2ShiftedDots,
    Sl3uNeckCuttingLine,
    Sl3uDotRelation,
    Sl3uHandleSum,
    Sl3uCupOffLine,
    Sl3uLinePastSeam,
    Sl3oThreeDots,
    Sl3oNeckCutting,
    Sl3oBigon,
    Sl3oSquare,
    Sl3oBubble,
    Sl3oAnchoredNeckCutting,
    Sl3oCupOffLine,
    Sl3oLinePastSeam,
    Sl3oMvRelations,
}

impl Suite {
    pub const ALL: [Suite; 19] = [
        Suite::Sl2TwoDots,
        Suite::Sl2NeckCutting,
        Suite::Sl2NeckCuttingLine,
        Suite::Sl2CupOffLine,
        Suite::Sl2ShiftedDots,
        Suite::Sl3uNeckCuttingLine,
        Suite::Sl3uDotRelation,
        Suite::Sl3uHandleSum,
        Suite::Sl3uCupOffLine,
        Suite::Sl3uLinePastSeam,
        Suite::Sl3oThreeDots,
        Suite::Sl3oNeckCutting,
        Suite::Sl3oBigon,
        Suite::Sl3oSquare,
        Suite::Sl3oBubble,
        Suite::Sl3oAnchoredNeckCutting,
        Suite::Sl3oCupOffLine,
        Suite::Sl3oLinePastSeam,
        Suite::Sl3oMvRelations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sl2TwoDots => "sl2-two-dots",
            Suite::Sl2NeckCutting => "sl2-neck-cutting",
            Suite::Sl2NeckCuttingLine => "sl2-neck-cutting-line",
            Suite::Sl2CupOffLine => "sl2-cup-off-line",
            Suite::Sl2ShiftedDots => "sl2-shifted-dots",
            Suite::Sl3uNeckCuttingLine => "sl3u-neck-cutting-line",
            Suite::Sl3uDotRelation => "sl3u-dot-relation",
            Suite::Sl3uHandleSum => "sl3u-handle-sum",
            Suite::Sl3uCupOffLine => "sl3u-cup-off-line",
            Suite::Sl3uLinePastSeam => "sl3u-line-past-seam",
            Suite::Sl3oThreeDots => "sl3o-three-dots",
            Suite::Sl3oNeckCutting => "sl3o-neck-cutting",
            Suite::Sl3oBigon => "sl3o-bigon",
            Suite::Sl3oSquare => "sl3o-square",
            Suite::Sl3oBubble => "sl3o-bubble",
            Suite::Sl3oAnchoredNeckCutting => "sl3o-anchored-neck-cutting",
            Suite::Sl3oCupOffLine => "sl3o-cup-off-line",
            Suite::Sl3oLinePastSeam => "sl3o-line-past-seam",
            Suite::Sl3oMvRelations => "sl3o-mv-relations",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }

    /// Runs case `index` of the suite. Cases are independent, so they can be
    /// run in any order or in parallel.
    pub fn check_case(self, seed: u64, index: usize) -> CaseOutcome {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index as u64);
        let rng = &mut rng;
        let relations = match self {
            Suite::Sl2TwoDots => sl2_two_dots(rng),
            Suite::Sl2NeckCutting => sl2_neck_cutting(rng),
            Suite::Sl2NeckCuttingLine => sl2_neck_cutting_line(rng),
            Suite::Sl2CupOffLine => sl2_cup_off_line(rng),
            Suite::Sl2ShiftedDots => sl2_shifted_dots(rng),
            Suite::Sl3uNeckCuttingLine => line_neck_cutting(rng, Theory3::Unoriented, false),
            Suite::Sl3uDotRelation => sl3u_dot_relation(rng),
            Suite::Sl3uHandleSum => line_neck_cutting(rng, Theory3::Unoriented, true),
            Suite::Sl3uCupOffLine => cup_off_line(rng, Theory3::Unoriented),
            Suite::Sl3uLinePastSeam => line_past_seam(rng, Theory3::Unoriented),
            Suite::Sl3oThreeDots => sl3o_three_dots(rng),
            Suite::Sl3oNeckCutting => sl3o_neck_cutting(rng),
            Suite::Sl3oBigon => sl3o_bigon(rng),
            Suite::Sl3oSquare => sl3o_square(rng),
            Suite::Sl3oBubble => sl3o_bubble(rng),
            Suite::Sl3oAnchoredNeckCutting => {
                let mut rels = line_neck_cutting(rng, Theory3::Oriented, false);
                rels.extend(line_neck_cutting(rng, Theory3::Oriented, true));
                rels
            }
            Suite::Sl3oCupOffLine => cup_off_line(rng, Theory3::Oriented),
            Suite::Sl3oLinePastSeam => line_past_seam(rng, Theory3::Oriented),
            Suite::Sl3oMvRelations => sl3o_mv_relations(rng),
        };
        check_relations(index, relations)
    }
}

/// A closed object taking part in a relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Surface(AnchoredSurface),
    Foam(Foam3),
}

impl Witness {
    pub fn evaluate(&self) -> Result<Poly> {
        match self {
            Witness::Surface(s) => s.evaluate(),
            Witness::Foam(f) => f.evaluate(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub index: usize,
    pub relation: &'static str,
    pub detail: String,
    /// First object on the left-hand side.
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseOutcome {
    /// The left-hand side evaluated to something nonzero.
    pub nontrivial: bool,
    pub failure: Option<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinReport {
    pub suite: Suite,
    pub seed: u64,
    pub count: usize,
    pub nontrivial: usize,
    pub failures: Vec<Failure>,
}

impl SkeinReport {
    pub fn from_outcomes(suite: Suite, seed: u64, outcomes: Vec<CaseOutcome>) -> SkeinReport {
        let count = outcomes.len();
        let nontrivial = outcomes.iter().filter(|o| o.nontrivial).count();
        let failures = outcomes.into_iter().filter_map(|o| o.failure).collect();
        SkeinReport { suite, seed, count, nontrivial, failures }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run_suite(suite: Suite, seed: u64, count: usize) -> SkeinReport {
    let outcomes = (0..count).map(|i| suite.check_case(seed, i)).collect();
    SkeinReport::from_outcomes(suite, seed, outcomes)
}

struct Relation {
    name: &'static str,
    ring: RingSpec,
    lhs: Vec<(Poly, Witness)>,
    rhs: Vec<(Poly, Witness)>,
}

fn total(ring: RingSpec, side: &[(Poly, Witness)]) -> Result<Poly> {
    let mut sum = Poly::zero(ring);
    for (c, w) in side {
        sum += &(c * &w.evaluate()?);
    }
    Ok(sum)
}

fn check_relations(index: usize, relations: Vec<Relation>) -> CaseOutcome {
    let mut nontrivial = false;
    for rel in relations {
        let fail = |detail: String| CaseOutcome {
            nontrivial,
            failure: Some(Failure { index, relation: rel.name, detail, witness: rel.lhs[0].1.clone() }),
        };
        let (l, r) = match (total(rel.ring, &rel.lhs), total(rel.ring, &rel.rhs)) {
            (Ok(l), Ok(r)) => (l, r),
            (Err(e), _) | (_, Err(e)) => return fail(format!("evaluation failed: {e}")),
        };
        if l != r {
            return fail(format!("lhs = {}, rhs = {}", l.pretty(), r.pretty()));
        }
        nontrivial |= !l.is_zero();
    }
    CaseOutcome { nontrivial, failure: None }
}

fn constant(ring: RingSpec, c: i128) -> Poly {
    Poly::constant(ring, c)
}

/// `x_i` (or `α_i`) for a label `i` counted from 1.
fn var(ring: RingSpec, i: u8) -> Poly {
    ring.var(i as usize - 1)
}

fn others(i: u8) -> (u8, u8) {
    match i {
        1 => (2, 3),
        2 => (1, 3),
        _ => (1, 2),
    }
}

// ---------------------------------------------------------------- SL(2)

#[derive(Clone, Debug, Default)]
struct Comp {
    genus: u32,
    dots: u32,
    shifted: [u32; 2],
    labels: Vec<u8>,
}

impl Comp {
    fn dotted(&self, k: u32) -> Comp {
        Comp { dots: self.dots + k, ..self.clone() }
    }

    fn handle(&self) -> Comp {
        Comp { genus: self.genus + 1, ..self.clone() }
    }

    fn shift(&self, i: u8) -> Comp {
        let mut c = self.clone();
        c.shifted[i as usize - 1] += 1;
        c
    }

    fn anchored(&self, extra: &[u8]) -> Comp {
        let mut c = self.clone();
        c.labels.extend_from_slice(extra);
        c
    }

    fn tube(&self, other: &Comp) -> Comp {
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        Comp {
            genus: self.genus + other.genus,
            dots: self.dots + other.dots,
            shifted: [self.shifted[0] + other.shifted[0], self.shifted[1] + other.shifted[1]],
            labels,
        }
    }
}

fn surface(ctx: &[Comp], local: &[Comp]) -> Witness {
    let mut components = Vec::new();
    let mut anchor_labels = Vec::new();
    for c in ctx.iter().chain(local) {
        let start = anchor_labels.len();
        anchor_labels.extend_from_slice(&c.labels);
        components.push(Component2 {
            genus: c.genus,
            dots: c.dots,
            shifted: c.shifted,
            anchors: (start..anchor_labels.len()).collect(),
            ..Component2::default()
        });
    }
    Witness::Surface(AnchoredSurface { components, anchor_labels })
}

fn random_comp(rng: &mut ChaCha8Rng, odd: bool) -> Comp {
    let n = 2 * rng.gen_range(0..=2) + odd as usize;
    let base = rng.gen_range(1..=2u8);
    let labels = (0..n).map(|_| if rng.gen_bool(0.85) { base } else { rng.gen_range(1..=2) }).collect();
    Comp { genus: rng.gen_range(0..=2), dots: rng.gen_range(0..=3), shifted: [0, 0], labels }
}

fn uniform_comp(rng: &mut ChaCha8Rng, label: u8) -> Comp {
    let n = 2 * rng.gen_range(1..=2);
    Comp { genus: rng.gen_range(0..=2), dots: rng.gen_range(0..=3), shifted: [0, 0], labels: vec![label; n] }
}

fn context2(rng: &mut ChaCha8Rng) -> Vec<Comp> {
    let n = rng.gen_range(0..=2);
    (0..n).map(|_| random_comp(rng, false)).collect()
}

fn rel2(name: &'static str, lhs: Vec<(Poly, Witness)>, rhs: Vec<(Poly, Witness)>) -> Relation {
    Relation { name, ring: RingSpec::ALPHA, lhs, rhs }
}

fn sl2_two_dots(rng: &mut ChaCha8Rng) -> Vec<Relation> {
    let ring = RingSpec::ALPHA;
    let ctx = context2(rng);
    let c = random_comp(rng, false);
    let s = |k| surface(&ctx, &[c.dotted(k)]);
    vec![rel2(
        "two dots",
        vec![(constant(ring, 1), s(2))],
        vec![(ring.elementary(1), s(1)), (-ring.elementary(2), s(0))],
    )]
}

fn sl2_neck_cutting(rng: &mut ChaCha8Rng) -> Vec<Relation> {
    let ring = RingSpec::ALPHA;
    let one = constant(ring, 1);
    let e1 = ring.elementary(1);
    let ctx = context2(rng);
    let (a, b, c) = (random_comp(rng, false), random_comp(rng, false), random_comp(rng, false));
    vec![
        rel2(
            "separating neck",
            vec![(one.clone(), surface(&ctx, &[a.tube(&b)]))],
            vec![
                (one.clone(), surface(&ctx, &[a.dotted(1), b.clone()])),
                (one.clone(), surface(&ctx, &[a.clone(), b.dotted(1)])),
                (-&e1, surface(&ctx, &[a.clone(), b.clone()])),
            ],
        ),
        rel2(
            "handle",
            vec![(one, surface(&ctx, &[c.handle()]))],
            vec![(constant(ring, 2), surface(&ctx, &[c.dotted(1)])), (-e1, surface(&ctx, &[c]))],
        ),
    ]
}

fn sl2_neck_cutting_line(rng: &mut ChaCha8Rng) -> Vec<Relation> {
    let one = constant(RingSpec::ALPHA, 1);
    let ctx = context2(rng);
    let (a, b) = (random_comp(rng, true), random_comp(rng, true));
    let c = random_comp(rng, false);
    vec![
        rel2(
            "separating neck around the line",
            vec![(one.clone(), surface(&ctx, &[a.tube(&b)]))],
            (1..=2u8).map(|l| (one.clone(), surface(&ctx, &[a.anchored(&[l]), b.anchored(&[l])]))).collect(),
        ),
        rel2(
            "handle around the line",
            vec![(one.clone(), surface(&ctx, &[c.handle()]))],
            (1..=2u8).map(|l| (one.clone(), surface(&ctx, &[c.anchored(&[l, l])]))).collect(),
        ),
    ]
}

fn sl2_cup_off_line(rng: &mut ChaCha8Rng) -> Vec<Relation> {
    let one = constant(RingSpec::ALPHA, 1);
    let ctx = context2(rng);
    let c = random_comp(rng, false);
    let l1 = rng.gen_range(1..=2u8);
    let l2 = if rng.gen_bool(0.75) { l1 } else { 3 - l1 };
    let rhs = if l1 == l2 { vec![(one.clone(), surface(&ctx, &[c.shift(l1)]))] } else { vec![] };
    vec![rel2("cup off line", vec![(one, surface(&ctx, &[c.anchored(&[l1, l2])]))], rhs)]
}

fn sl2_shifted_dots(rng: &mut ChaCha8Rng) -> Vec<Relation> {
    let ring = RingSpec::ALPHA;
    let one = constant(ring, 1);
    let ctx = context2(rng);
    let i = rng.gen_range(1..=2u8);
    let mut opposite = random_comp(rng, false);
    opposite.labels.push(3 - i);
    opposite.labels.push(3 - i);
    let same = uniform_comp(rng, i);
    let any = random_comp(rng, false);
    let (a, b) = (random_comp(rng, false), random_comp(rng, false));
    let sign = if i == 1 { -1 } else { 1 };
    let tau = 3 - same.labels[0];
    vec![
        rel2("shifted dot against the opposite label", vec![(one.clone(), surface(&ctx, &[opposite.shift(i)]))], vec![]),
        rel2(
            "shifted dot on a uniformly labeled component",
            vec![(one.clone(), surface(&ctx, &[same.shift(i)]))],
            vec![(ring.linear_form(0, 1).scale(sign), surface(&ctx, core::slice::from_ref(&same)))],
        ),
        rel2(
            "shifted dot is a dot minus alpha",
            vec![(one.clone(), surface(&ctx, &[any.shift(i)]))],
            vec![(one.clone(), surface(&ctx, &[any.dotted(1)])), (-var(ring, i), surface(&ctx, core::slice::from_ref(&any)))],
        ),
        rel2(
            "neck cutting with shifted dots",
            vec![(one.clone(), surface(&ctx, &[a.tube(&b)]))],
            vec![
                (one.clone(), surface(&ctx, &[a.shift(1), b.clone()])),
                (one.clone(), surface(&ctx, &[a.clone(), b.shift(2)])),
            ],
        ),
        rel2(
            "dot next to an anchor",
            vec![(one, surface(&ctx, &[same.dotted(1)]))],
            vec![(var(ring, tau), surface(&ctx, &[same]))],
        ),
    ]
}

// ---------------------------------------------------------------- SL(3)

#[derive(Clone, Debug)]
struct Sheet {
    genus: u32,
    dots: u32,
    labels: Vec<u8>,
    /// Target color; random seams only join sheets of distinct colors.
    color: u8,
}

#[derive(Clone, Debug)]
struct Pool {
    theory: Theory3,
    sheets: Vec<Sheet>,
    /// Cyclic facet triples.
    seams: Vec<[usize; 3]>,
}

impl Pool {
    fn push(&mut self, s: Sheet) -> usize {
        self.sheets.push(s);
        self.sheets.len() - 1
    }

    fn with_seam(&self, t: [usize; 3]) -> Pool {
        let mut p = self.clone();
        p.seams.push(t);
        p
    }

    fn dotted(&self, f: usize, k: u32) -> Pool {
        let mut p = self.clone();
        p.sheets[f].dots += k;
        p
    }

    fn anchored(&self, f: usize, labels: &[u8]) -> Pool {
        let mut p = self.clone();
        p.sheets[f].labels.extend_from_slice(labels);
        p
    }

    /// Adds a tube for each pair: between distinct pieces it merges them,
    /// otherwise it adds a handle.
    fn glue(&self, pairs: &[(usize, usize)]) -> Pool {
        let n = self.sheets.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut handles = Vec::new();
        for &(a, b) in pairs {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                handles.push(a);
            } else {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let roots: Vec<usize> = (0..n).filter(|&i| find(&mut parent, i) == i).collect();
        let new_index: Vec<usize> = (0..n)
            .map(|i| {
                let r = find(&mut parent, i);
                roots.iter().position(|&x| x == r).unwrap()
            })
            .collect();
        let mut sheets: Vec<Sheet> = roots
            .iter()
            .map(|&r| Sheet { genus: 0, dots: 0, labels: vec![], color: self.sheets[r].color })
            .collect();
        for (i, s) in self.sheets.iter().enumerate() {
            let t = &mut sheets[new_index[i]];
            t.genus += s.genus;
            t.dots += s.dots;
            t.labels.extend_from_slice(&s.labels);
        }
        for h in handles {
            sheets[new_index[h]].genus += 1;
        }
        let seams = self.seams.iter().map(|t| t.map(|f| new_index[f])).collect();
        Pool { theory: self.theory, sheets, seams }
    }

    fn foam(&self) -> Witness {
        let mut slots = vec![0usize; self.sheets.len()];
        let seams = self
            .seams
            .iter()
            .map(|t| {
                Seam::new(t.map(|f| {
                    slots[f] += 1;
                    (f, slots[f] - 1)
                }))
            })
            .collect();
        let mut labels = Vec::new();
        let mut signs = Vec::new();
        let facets = self
            .sheets
            .iter()
            .zip(&slots)
            .map(|(s, &b)| {
                let start = labels.len();
                labels.extend_from_slice(&s.labels);
                signs.extend((0..s.labels.len()).map(|k| if k % 2 == 0 { 1i8 } else { -1 }));
                Facet::new(s.genus, b as u32, s.dots, (start..labels.len()).collect())
            })
            .collect();
        let mut f = Foam3::closed(self.theory, facets, seams, labels);
        if self.theory == Theory3::Oriented {
            f.anchor_signs = signs;
        }
        Witness::Foam(f)
    }
}

fn permutation(rng: &mut ChaCha8Rng) -> [u8; 3] {
    let mut c = [1u8, 2, 3];
    c.shuffle(rng);
    c
}

fn random_sheet(rng: &mut ChaCha8Rng, color: u8) -> Sheet {
    Sheet {
        genus: rng.gen_bool(0.25) as u32,
        dots: rng.gen_range(0..=2),
        labels: vec![color; 2 * rng.gen_bool(0.3) as usize],
        color,
    }
}

/// A context around the given pattern pieces (indices `0..pattern.len()`):
/// up to `extra` more pieces and `seams` random seams. A random seam may be
/// pierced by the line once per side, except on pattern pieces listed in
/// `fixed`, whose anchor counts matter.
fn context(
    rng: &mut ChaCha8Rng,
    theory: Theory3,
    pattern: Vec<Sheet>,
    extra: core::ops::RangeInclusive<usize>,
    seams: usize,
    fixed: usize,
) -> Pool {
    let mut pool = Pool { theory, sheets: pattern, seams: vec![] };
    for _ in 0..rng.gen_range(extra) {
        let color = rng.gen_range(1..=3);
        let s = random_sheet(rng, color);
        pool.push(s);
    }
    'seams: for _ in 0..rng.gen_range(0..=seams) {
        let mut t = [0usize; 3];
        for (slot, color) in t.iter_mut().zip(1..=3u8) {
            let cands: Vec<usize> = (0..pool.sheets.len()).filter(|&f| pool.sheets[f].color == color).collect();
            match cands.choose(rng) {
                Some(&f) => *slot = f,
                None => continue 'seams,
            }
        }
        t.shuffle(rng);
        pool.seams.push(t);
    }
    if !pool.seams.is_empty() && rng.gen_bool(0.3) {
        let t = *pool.seams.choose(rng).unwrap();
        if t.iter().all(|&f| f >= fixed) {
            for f in t {
                let c = pool.sheets[f].color;
                pool.sheets[f].labels.push(c);
            }
        }
    }
    pool
}

fn rel3(name: &'static str, theory: Theory3, lhs: Vec<(Poly, Witness)>, rhs: Vec<(Poly, Witness)>) -> Relation {
    Relation { name, ring: theory.ring(), lhs, rhs }
}

/// Signs in the relation cutting a tube around the line into two disks
/// carrying anchors labeled `l`.
fn line_cut_sign(theory: Theory3, l: u8) -> i128 {
    match theory {
        Theory3::Unoriented => 1,
        Theory3::Oriented => LINE_CUT_SIGNS[l as usize - 1],
    }
}

const LINE_CUT_SIGNS: [i128; 3] = [-1, 1, -1];

/// Separating (`handle == false`) or handle version of cutting a tube
/// around the line.
fn line_neck_cutting(rng: &mut ChaCha8Rng, theory: Theory3, handle: bool) -> Vec<Relation> {
    let ring = theory.ring();
    let one = constant(ring, 1);
    let i = rng.gen_range(1..=3u8);
    if handle {
        let pool = context(rng, theory, vec![], 1..=4, 2, 0);
        let f = rng.gen_range(0..pool.sheets.len());
        return vec![rel3(
            "handle around the line",
            theory,
            vec![(one, pool.glue(&[(f, f)]).foam())],
            (1..=3u8)
                .map(|l| (constant(ring, line_cut_sign(theory, l)), pool.anchored(f, &[l, l]).foam()))
                .collect(),
        )];
    }
    // Both halves meet the line an odd number of times.
    let mut half = || {
        let mut s = random_sheet(rng, i);
        s.labels = vec![i; 1 + 2 * rng.gen_range(0..=1)];
        s
    };
    let pattern = vec![half(), half()];
    let pool = context(rng, theory, pattern, 0..=3, 2, 2);
    vec![rel3(
        "separating neck around the line",
        theory,
        vec![(one, pool.glue(&[(0, 1)]).foam())],
        (1..=3u8)
            .map(|l| (constant(ring, line_cut_sign(theory, l)), pool.anchored(0, &[l]).anchored(1, &[l]).foam()))
            .collect(),
    )]
}

fn sl3u_dot_relation(rng: &mut ChaCha8Rng) -> Vec<Relation> {
    let theory = Theory3::Unoriented;
    let ring = theory.ring();
    let mut pool = context(rng, theory, vec![], 1..=4, 2, 0);
    let f = rng.gen_range(0..pool.sheets.len());
    if pool.sheets[f].labels.is_empty() {
        let c = pool.sheets[f].color;
        pool.sheets[f].labels = vec![c, c];
    }
    let l = pool.sheets[f].labels[0];
    vec![rel3(
        "dot next to an anchor",
        theory,
        vec![(constant(ring, 1), pool.dotted(f, 1).foam())],
        vec![(var(ring, l), pool.foam())],
    )]
}

fn cup_off_line(rng: &mut ChaCha8Rng, theory: Theory3) -> Vec<Relation> {
    let ring = theory.ring();
    let pool = context(rng, theory, vec![], 1..=4, 2, 0);
    let f = rng.gen_range(0..pool.sheets.len());
    let l1 = if rng.gen_bool(0.8) { pool.sheets[f].color } else { rng.gen_range(1..=3) };
    let l2 = if rng.gen_bool(0.8) { l1 } else { rng.gen_range(1..=3) };
    let rhs = if l1 == l2 {
        // Two anchors labeled l act as the shifted dots for the other two
        // labels: (• - x_j)(• - x_k).
        let (j, k) = others(l1);
        let sign = constant(ring, if theory == Theory3::Oriented && l1 == 2 { -1 } else { 1 });
        vec![
            (sign.clone(), pool.dotted(f, 2).foam()),
            (-&(&sign * &(&var(ring, j) + &var(ring, k))), pool.dotted(f, 1).foam()),
            (&sign * &(&var(ring, j) * &var(ring, k)), pool.foam()),
        ]
    } else {
        vec![]
    };
    vec![rel3("cup off line", theory, vec![(constant(ring, 1), pool.anchored(f, &[l1, l2]).foam())], rhs)]
}

fn line_past_seam(rng: &mut ChaCha8Rng, theory: Theory3) -> Vec<Relation> {
    let ring = theory.ring();
    let [i, j, k] = permutation(rng);
    let pattern = vec![random_sheet(rng, i), random_sheet(rng, j), random_sheet(rng, k)];
    let mut pool = context(rng, theory, pattern, 0..=3, 2, 0);
    let mut seam = [0, 1, 2];
    if rng.gen_bool(0.5) {
        seam.swap(1, 2);
    }
    pool.seams.push(seam);
    // The line also passes through the two sides not colored i of some seam,
    // which keeps the anchor counts of all colors at one parity.
    let t = *pool.seams.choose(rng).unwrap();
    for f in t {
        let c = pool.sheets[f].color;
        if c != i {
            pool.sheets[f].labels.push(c);
        }
    }
    let (a, b) = others(i);
    vec![rel3(
        "line past seam",
        theory,
        vec![(ring.linear_form(a as usize - 1, b as usize - 1), pool.anchored(0, &[i]).foam())],
        vec![
            (constant(ring, 1), pool.anchored(1, &[a]).anchored(2, &[b]).foam()),
            (constant(ring, 1), pool.anchored(1, &[b]).anchored(2, &[a]).foam()),
        ],
    )]
}

fn sl3o_three_dots(rng: &mut ChaCha8Rng) -> Vec<Relation> {
    let theory = Theory3::Oriented;
    let ring = theory.ring();
    let pool = context(rng, theory, vec![], 1..=4, 2, 0);
    let f = rng.gen_range(0..pool.sheets.len());
    vec![three_dots(&pool, f, "three dots", [ring.elementary(1), -ring.elementary(2), ring.elementary(3)])]
}

/// `•³ = a•² + b• + c` on sheet `f`.
fn three_dots(pool: &Pool, f: usize, name: &'static str, abc: [Poly; 3]) -> Relation {
    let [a, b, c] = abc;
    rel3(
        name,
        pool.theory,
        vec![(constant(pool.theory.ring(), 1), pool.dotted(f, 3).foam())],
        vec![(a, pool.dotted(f, 2).foam()), (b, pool.dotted(f, 1).foam()), (c, pool.foam())],
    )
}

/// Separating neck cutting away from the line, in the form
/// `-tube = Σ_{p+q=2} x^p⊗x^q - a Σ_{p+q=1} x^p⊗x^q - b 1⊗1`.
fn neck_cut(pool: &Pool, name: &'static str, a: &Poly, b: &Poly) -> Relation {
    let ring = pool.theory.ring();
    let two = |p: u32, q: u32| pool.dotted(0, p).dotted(1, q).foam();
    rel3(
        name,
        pool.theory,
        vec![(constant(ring, -1), pool.glue(&[(0, 1)]).foam())],
        vec![
            (constant(ring, 1), two(2, 0)),
            (constant(ring, 1), two(1, 1)),
            (constant(ring, 1), two(0, 2)),
            (-a, two(1, 0)),
            (-a, two(0, 1)),
            (-b, two(0, 0)),
        ],
    )
}

fn even_halves(rng: &mut ChaCha8Rng, theory: Theory3) -> Pool {
    let i = rng.gen_range(1..=3u8);
    let pattern = vec![random_sheet(rng, i), random_sheet(rng, i)];
    context(rng, theory, pattern, 0..=3, 2, 2)
}

fn sl3o_neck_cutting(rng: &mut ChaCha8Rng) -> Vec<Relation> {
    let theory = Theory3::Oriented;
    let ring = theory.ring();
    let (e1, e2) = (ring.elementary(1), ring.elementary(2));
    let pool = even_halves(rng, theory);
    let f = rng.gen_range(0..pool.sheets.len());
    vec![
        neck_cut(&pool, "separating neck", &e1, &-&e2),
        rel3(
            "handle",
            theory,
            vec![(constant(ring, 1), pool.glue(&[(f, f)]).foam())],
            vec![
                (constant(ring, -3), pool.dotted(f, 2).foam()),
                (e1.scale(2), pool.dotted(f, 1).foam()),
                (-e2, pool.foam()),
            ],
        ),
    ]
}

/// Sign of the bigon relation `id = σ (dot on a - dot on b)`, where both
/// seams read `(outer, a, b)`.
const BIGON_SIGN: i128 = 1;

fn sl3o_bigon(rng: &mut ChaCha8Rng) -> Vec<Relation> {
    let theory = Theory3::Oriented;
    let ring = theory.ring();
    let [i, j, k] = permutation(rng);
    let single = rng.gen_bool(0.25);
    let mut pattern = vec![random_sheet(rng, j), random_sheet(rng, k), random_sheet(rng, i)];
    if !single {
        pattern.push(random_sheet(rng, i));
    }
    let (a, b, e_in) = (0, 1, 2);
    let e_out = if single { 2 } else { 3 };
    let pool = context(rng, theory, pattern, 0..=2, 2, 0);
    let lhs = pool.with_seam([e_in, a, b]).with_seam([e_out, a, b]);
    let zipped = |f: usize| pool.with_seam([e_in, a, b]).dotted(f, 1).glue(&[(e_in, e_out)]).foam();
    vec![rel3(
        "bigon",
        theory,
        vec![(constant(ring, 1), lhs.foam())],
        vec![(constant(ring, BIGON_SIGN), zipped(a)), (constant(ring, -BIGON_SIGN), zipped(b))],
    )]
}

/// Sign of both terms in the square relation.
const SQUARE_SIGN: i128 = -1;

fn sl3o_square(rng: &mut ChaCha8Rng) -> Vec<Relation> {
    let theory = Theory3::Oriented;
    let ring = theory.ring();
    let [i, j, k] = permutation(rng);
    // Outer sheets o1..o4 then inner edges q1..q4, q_m joining corners m and m+1.
    let (outer, inner) = if rng.gen_bool(0.5) { ([i, i, i, i], [j, k, j, k]) } else { ([k, i, i, k], [j, k, j, i]) };
    let pattern = outer.iter().chain(&inner).map(|&c| random_sheet(rng, c)).collect();
    let (o, q) = ([0, 1, 2, 3], [4, 5, 6, 7]);
    let pool = context(rng, theory, pattern, 0..=1, 1, 0);
    let lhs = pool
        .with_seam([o[0], q[0], q[3]])
        .with_seam([o[1], q[0], q[1]])
        .with_seam([o[2], q[2], q[1]])
        .with_seam([o[3], q[2], q[3]]);
    let horizontal =
        pool.with_seam([o[0], q[0], q[1]]).with_seam([o[2], q[2], q[1]]).glue(&[(o[0], o[1]), (o[2], o[3]), (q[1], q[3])]);
    let vertical =
        pool.with_seam([o[1], q[0], q[1]]).with_seam([o[3], q[2], q[3]]).glue(&[(o[1], o[2]), (o[3], o[0]), (q[0], q[2])]);
    vec![rel3(
        "square",
        theory,
        vec![(constant(ring, 1), lhs.foam())],
        vec![(constant(ring, SQUARE_SIGN), horizontal.foam()), (constant(ring, SQUARE_SIGN), vertical.foam())],
    )]
}

/// `⟨F_{1,0}⟩ = BUBBLE_SIGN ⟨F⟩` for a bubble whose seam reads `(f, D₁, D₂)`
/// with the dot on `D₁`.
const BUBBLE_SIGN: i128 = 1;

fn sl3o_bubble(rng: &mut ChaCha8Rng) -> Vec<Relation> {
    let theory = Theory3::Oriented;
    let ring = theory.ring();
    let pool = context(rng, theory, vec![], 1..=4, 2, 0);
    let f = rng.gen_range(0..pool.sheets.len());
    let (j, k) = others(pool.sheets[f].color);
    let bubble = |p: u32, q: u32| {
        let mut b = pool.clone();
        let d1 = b.push(Sheet { genus: 0, dots: p, labels: vec![], color: j });
        let d2 = b.push(Sheet { genus: 0, dots: q, labels: vec![], color: k });
        b.seams.push([f, d1, d2]);
        b.foam()
    };
    let one = constant(ring, 1);
    let n = rng.gen_range(0..=2);
    vec![
        rel3("bubble with one dot", theory, vec![(one.clone(), bubble(1, 0))], vec![(constant(ring, BUBBLE_SIGN), pool.foam())]),
        rel3("bubble with the other dot", theory, vec![(one.clone(), bubble(0, 1))], vec![(constant(ring, -BUBBLE_SIGN), pool.foam())]),
        rel3("balanced bubble", theory, vec![(one.clone(), bubble(n, n))], vec![]),
        rel3("bubble antisymmetry", theory, vec![(one.clone(), bubble(2, 0))], vec![(-one, bubble(0, 2))]),
    ]
}

/// Sphere and theta values, then three dots and neck cutting, in the
/// parameters `a, b, c` specialized to `E₁, -E₂, E₃`.
fn sl3o_mv_relations(rng: &mut ChaCha8Rng) -> Vec<Relation> {
    let theory = Theory3::Oriented;
    let ring = theory.ring();
    let (a, b, c) = (ring.elementary(1), -ring.elementary(2), ring.elementary(3));
    let one = constant(ring, 1);
    let empty = Witness::Foam(Foam3::closed(theory, vec![], vec![], vec![]));
    let mut rels = Vec::new();
    for d in 0..=2u32 {
        let value = if d == 2 { vec![(constant(ring, -1), empty.clone())] } else { vec![] };
        rels.push(rel3("(S)", theory, vec![(one.clone(), Witness::Foam(Foam3::sphere(theory, d, &[])))], value));
    }
    for d in 0..27u32 {
        let dots = [d / 9, d / 3 % 3, d % 3];
        let value: i128 = match dots {
            [2, 1, 0] | [0, 2, 1] | [1, 0, 2] => 1,
            [1, 2, 0] | [0, 1, 2] | [2, 0, 1] => -1,
            _ => 0,
        };
        rels.push(rel3(
            "(Θ)",
            theory,
            vec![(one.clone(), Witness::Foam(Foam3::theta(theory, dots, &[])))],
            vec![(constant(ring, value), empty.clone())],
        ));
    }
    let pool = even_halves(rng, theory);
    let f = rng.gen_range(0..pool.sheets.len());
    rels.push(three_dots(&pool, f, "(3D)", [a.clone(), b.clone(), c]));
    rels.push(neck_cut(&pool, "(CN)", &a, &b));
    rels
}
