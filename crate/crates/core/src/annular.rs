//! Equivariant annular SL(2) homology of braid closures.
//!
//! Strand position 1 is outermost. A positive letter resolves to the
//! identity smoothing at bit 0 and to cap-cup at bit 1; negative letters the
//! other way round. Homological degree is `r - n₋` and `qdeg'` is shifted by
//! `-r - n₊ + 2n₋`, `r` the number of 1-bits.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{rational_rank, smith_normal_form, IntMatrix, Matrix, Poly, RingSpec};
use crate::statespace::{basis_word, g_alpha_matrix, standard_generators, GeneratorFoam, TensorWord, Theory};
use crate::surfaces_sl2::{Circle, CircleConfig, Cobordism2, Component2};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub strands: usize,
    pub word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<BraidWord> {
        let b = BraidWord { strands, word };
        b.validate()?;
        Ok(b)
    }

    pub fn identity(strands: usize) -> BraidWord {
        BraidWord { strands, word: Vec::new() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.strands == 0 {
            return Err(Error::InvariantViolation("a braid needs at least one strand".into()));
        }
        for &l in &self.word {
            if l == 0 || l.unsigned_abs() as usize >= self.strands {
                return Err(Error::InvariantViolation(format!("letter {l} out of range for {} strands", self.strands)));
            }
        }
        Ok(())
    }

    pub fn positive_count(&self) -> usize {
        self.word.iter().filter(|&&l| l > 0).count()
    }

    pub fn negative_count(&self) -> usize {
        self.word.iter().filter(|&&l| l < 0).count()
    }

    /// Parses `"1,-2,1"`; the empty string is the identity word.
    pub fn parse(strands: usize, text: &str) -> Result<BraidWord> {
        let mut word = Vec::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let l: i32 = part
                .parse()
                .map_err(|_| Error::InvariantViolation(format!("braid letter {part:?} is not an integer")))?;
            word.push(l);
        }
        BraidWord::new(strands, word)
    }
}

/// One circle of a resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleTrace {
    /// Nodes `(level, position)` in traversal order, position 1-based.
    pub nodes: Vec<(usize, usize)>,
    /// Signed number of passes through the closure.
    pub winding: i64,
}

impl CircleTrace {
    pub fn min_position(&self) -> usize {
        self.nodes.iter().map(|n| n.1).min().unwrap_or(usize::MAX)
    }

    fn key(&self) -> Vec<(usize, usize)> {
        let mut k = self.nodes.clone();
        k.sort_unstable();
        k
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub vertex: Vec<bool>,
    pub config: CircleConfig,
    pub circles: Vec<CircleTrace>,
}

/// Arcs between nodes; the closure arc `(L, p) → (0, p)` carries `wrap = true`.
struct Arc {
    ends: [(usize, usize); 2],
    wrap: bool,
}

pub fn resolve(b: &BraidWord, vertex: &[bool]) -> Result<Resolution> {
    b.validate()?;
    if vertex.len() != b.word.len() {
        return Err(Error::InvariantViolation("vertex length differs from word length".into()));
    }
    let n = b.strands;
    let len = b.word.len();
    let mut arcs: Vec<Arc> = Vec::new();
    for (t, (&l, &bit)) in b.word.iter().zip(vertex).enumerate() {
        let i = l.unsigned_abs() as usize;
        let identity = (l > 0) != bit;
        for p in 1..=n {
            if p != i && p != i + 1 {
                arcs.push(Arc { ends: [(t, p), (t + 1, p)], wrap: false });
            }
        }
        if identity {
            arcs.push(Arc { ends: [(t, i), (t + 1, i)], wrap: false });
            arcs.push(Arc { ends: [(t, i + 1), (t + 1, i + 1)], wrap: false });
        } else {
            arcs.push(Arc { ends: [(t, i), (t, i + 1)], wrap: false });
            arcs.push(Arc { ends: [(t + 1, i), (t + 1, i + 1)], wrap: false });
        }
    }
    for p in 1..=n {
        arcs.push(Arc { ends: [(len, p), (0, p)], wrap: true });
    }
    // Two incidences per node; a self-loop supplies both.
    let node_id = |(t, p): (usize, usize)| t * n + (p - 1);
    let mut incidences: Vec<Vec<(usize, usize)>> = vec![Vec::new(); (len + 1) * n];
    for (k, arc) in arcs.iter().enumerate() {
        incidences[node_id(arc.ends[0])].push((k, 0));
        incidences[node_id(arc.ends[1])].push((k, 1));
    }
    if incidences.iter().any(|v| v.len() != 2) {
        return Err(Error::InternalInconsistency("resolution graph is not 2-regular".into()));
    }
    let mut used = vec![false; arcs.len()];
    let mut traces = Vec::new();
    for start in 0..arcs.len() {
        if used[start] {
            continue;
        }
        let mut nodes = Vec::new();
        let mut winding = 0i64;
        let (mut arc, mut from) = (start, 0usize);
        loop {
            used[arc] = true;
            let a = &arcs[arc];
            nodes.push(a.ends[from]);
            if a.wrap {
                winding += if from == 0 { 1 } else { -1 };
            }
            let at = a.ends[1 - from];
            let inc = &incidences[node_id(at)];
            let arrived = (arc, 1 - from);
            let (next, end) = if inc[0] == arrived { inc[1] } else { inc[0] };
            if next == start && end == 0 {
                break;
            }
            arc = next;
            from = end;
        }
        // Closure nodes at level L duplicate level 0.
        nodes.retain(|&(t, _)| t < len || len == 0);
        nodes.sort_unstable();
        nodes.dedup();
        traces.push(CircleTrace { nodes, winding });
    }
    traces.sort_by_key(|c| c.nodes[0]);
    let mut essential: Vec<usize> = (0..traces.len()).filter(|&c| traces[c].winding != 0).collect();
    essential.sort_by_key(|&c| traces[c].min_position());
    let mut circles = vec![Circle::contractible(); traces.len()];
    for (depth, &c) in essential.iter().enumerate() {
        if traces[c].winding.abs() != 1 {
            return Err(Error::InternalInconsistency("essential circle with winding other than ±1".into()));
        }
        circles[c] = Circle::essential(depth as u32);
    }
    Ok(Resolution { vertex: vertex.to_vec(), config: CircleConfig::new(circles), circles: traces })
}

fn bits(v: u64, len: usize) -> Vec<bool> {
    (0..len).map(|k| (v >> k) & 1 == 1).collect()
}

/// The saddle from `low` to `high`, which differ in bit `k`.
pub fn edge_cobordism(b: &BraidWord, low: &Resolution, high: &Resolution, k: usize) -> Result<Cobordism2> {
    let i = b.word[k].unsigned_abs() as usize;
    let touched = [(k, i), (k, i + 1), (k + 1, i), (k + 1, i + 1)];
    let len = b.word.len();
    let touches = |c: &CircleTrace| touched.iter().any(|&(t, p)| c.nodes.contains(&(t % len.max(1), p)));
    let mut components = Vec::new();
    let mut active = Component2::default();
    let high_keys: Vec<_> = high.circles.iter().map(CircleTrace::key).collect();
    for (ci, c) in low.circles.iter().enumerate() {
        if touches(c) {
            active.bottom.push(ci);
            continue;
        }
        let key = c.key();
        let cj = high_keys
            .iter()
            .position(|h| *h == key)
            .ok_or_else(|| Error::InternalInconsistency("untouched circle lost across a saddle".into()))?;
        components.push(Component2 { bottom: vec![ci], top: vec![cj], ..Component2::default() });
    }
    for (cj, c) in high.circles.iter().enumerate() {
        if touches(c) {
            active.top.push(cj);
        }
    }
    if active.bottom.len() + active.top.len() != 3 {
        return Err(Error::InternalInconsistency("saddle does not join three circles".into()));
    }
    components.push(active);
    Cobordism2::new(components, Vec::new(), low.config.clone(), high.config.clone())
}

/// Sparse matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<BTreeMap<usize, Poly>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix { rows, cols, columns: vec![BTreeMap::new(); cols] }
    }

    pub fn add(&mut self, i: usize, j: usize, v: Poly) {
        if v.is_zero() {
            return;
        }
        let col = &mut self.columns[j];
        let sum = match col.get(&i) {
            Some(old) => old + &v,
            None => v,
        };
        if sum.is_zero() {
            col.remove(&i);
        } else {
            col.insert(i, sum);
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(BTreeMap::len).sum()
    }

    /// `other · self`.
    pub fn then(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = SparseMatrix::zero(other.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for (&k, v) in col {
                for (&i, w) in &other.columns[k] {
                    out.add(i, j, w * v);
                }
            }
        }
        out
    }

    pub fn dense(&self, ring: RingSpec) -> Matrix<Poly> {
        let mut m = Matrix::filled(self.rows, self.cols, Poly::zero(ring));
        for (j, col) in self.columns.iter().enumerate() {
            for (&i, v) in col {
                m.set(i, j, v.clone());
            }
        }
        m
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainGenerator {
    pub vertex: u64,
    pub index: usize,
    pub word: TensorWord,
    /// Shifted `qdeg'`.
    pub qdeg: i64,
    pub adeg: i64,
}

#[derive(Clone, Debug)]
pub struct CubeComplex {
    pub braid: BraidWord,
    /// Chain groups by `r`, the number of 1-bits; homological degree `r - n₋`.
    pub groups: Vec<Vec<ChainGenerator>>,
    /// `d_r : C_r → C_{r+1}`.
    pub differentials: Vec<SparseMatrix>,
    pub resolutions: Vec<Resolution>,
}

impl CubeComplex {
    pub fn homological_degree(&self, r: usize) -> i64 {
        r as i64 - self.braid.negative_count() as i64
    }

    pub fn d_squared_is_zero(&self) -> bool {
        self.differentials.windows(2).all(|w| w[0].then(&w[1]).nnz() == 0)
    }

    /// Every nonzero entry joins generators of equal `adeg` and has
    /// polynomial degree matching the `qdeg'` difference.
    pub fn check_gradings(&self) -> Result<()> {
        for (r, d) in self.differentials.iter().enumerate() {
            for (j, col) in d.columns.iter().enumerate() {
                let src = &self.groups[r][j];
                for (&i, v) in col {
                    let dst = &self.groups[r + 1][i];
                    if dst.adeg != src.adeg {
                        return Err(Error::InternalInconsistency("differential changes adeg".into()));
                    }
                    if v.homogeneous_degree().map(i64::from) != Some(src.qdeg - dst.qdeg) {
                        return Err(Error::InternalInconsistency("differential is not qdeg'-homogeneous".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn build_complex(b: &BraidWord) -> Result<CubeComplex> {
    b.validate()?;
    let len = b.word.len();
    if len > 20 {
        return Err(Error::InvariantViolation("braid words longer than 20 letters are not supported".into()));
    }
    let (n_plus, n_minus) = (b.positive_count() as i64, b.negative_count() as i64);
    let resolutions: Vec<Resolution> =
        (0..1u64 << len).map(|v| resolve(b, &bits(v, len))).collect::<Result<_>>()?;
    let mut groups: Vec<Vec<ChainGenerator>> = vec![Vec::new(); len + 1];
    // Offset of vertex v's block inside its chain group.
    let mut offset = vec![0usize; 1 << len];
    for v in 0..1u64 << len {
        let r = v.count_ones() as usize;
        offset[v as usize] = groups[r].len();
        let res = &resolutions[v as usize];
        let shift = -(r as i64) - n_plus + 2 * n_minus;
        for (index, g) in standard_generators(&res.config, Theory::Sl2).iter().enumerate() {
            let GeneratorFoam::Sl2(_) = g else { unreachable!("SL(2) generators") };
            let (q, a) = g.bidegree();
            groups[r].push(ChainGenerator { vertex: v, index, word: basis_word(&res.config, index), qdeg: q + shift, adeg: a });
        }
    }
    let mut differentials: Vec<SparseMatrix> =
        (0..len).map(|r| SparseMatrix::zero(groups[r + 1].len(), groups[r].len())).collect();
    for v in 0..1u64 << len {
        let r = v.count_ones() as usize;
        for k in 0..len {
            if (v >> k) & 1 == 1 {
                continue;
            }
            let w = v | (1 << k);
            let cob = edge_cobordism(b, &resolutions[v as usize], &resolutions[w as usize], k)?;
            let m = g_alpha_matrix(&cob)?;
            let negative = (v & ((1u64 << k) - 1)).count_ones() % 2 == 1;
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let e = m.get(i, j);
                    if !e.is_zero() {
                        let e = if negative { -e.clone() } else { e.clone() };
                        differentials[r].add(offset[w as usize] + i, offset[v as usize] + j, e);
                    }
                }
            }
        }
    }
    let cx = CubeComplex { braid: b.clone(), groups, differentials, resolutions };
    if !cx.d_squared_is_zero() {
        return Err(Error::InternalInconsistency("d² ≠ 0".into()));
    }
    cx.check_gradings()?;
    Ok(cx)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologySpec {
    /// `α₁ = α₂ = 0` over Z.
    Aps,
    /// Distinct rationals over Q; only `adeg` survives as a grading.
    Rational(BigRational, BigRational),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupSummary {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

/// `(h, qdeg', adeg) → group`; `qdeg'` is `None` for rational specializations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyTable(pub BTreeMap<(i64, Option<i64>, i64), GroupSummary>);

impl HomologyTable {
    pub fn total_rank(&self) -> usize {
        self.0.values().map(|g| g.rank).sum()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.0.values().all(|g| g.torsion.is_empty())
    }
}

type BlockKey = (Option<i64>, i64);

pub fn homology(cx: &CubeComplex, spec: &HomologySpec) -> Result<HomologyTable> {
    if let HomologySpec::Rational(a, b) = spec {
        if a == b {
            return Err(Error::InvariantViolation("rational specialization needs α₁ ≠ α₂".into()));
        }
    }
    let key = |g: &ChainGenerator| -> BlockKey {
        match spec {
            HomologySpec::Aps => (Some(g.qdeg), g.adeg),
            HomologySpec::Rational(..) => (None, g.adeg),
        }
    };
    let blocks: Vec<BTreeMap<BlockKey, Vec<usize>>> = cx
        .groups
        .iter()
        .map(|gens| {
            let mut m: BTreeMap<BlockKey, Vec<usize>> = BTreeMap::new();
            for (i, g) in gens.iter().enumerate() {
                m.entry(key(g)).or_default().push(i);
            }
            m
        })
        .collect();
    // rank and torsion of d_r restricted to each block
    let mut image: Vec<BTreeMap<BlockKey, GroupSummary>> = Vec::with_capacity(cx.differentials.len());
    for (r, d) in cx.differentials.iter().enumerate() {
        let mut per_block = BTreeMap::new();
        for (bk, cols) in &blocks[r] {
            let Some(rows) = blocks[r + 1].get(bk) else { continue };
            let row_pos: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(p, &i)| (i, p)).collect();
            let summary = match spec {
                HomologySpec::Aps => {
                    let mut m = IntMatrix::zeros(rows.len(), cols.len());
                    for (cj, &j) in cols.iter().enumerate() {
                        for (&i, v) in &d.columns[j] {
                            let Some(&pi) = row_pos.get(&i) else { continue };
                            m.set(pi, cj, v.eval_int(&[0, 0]));
                        }
                    }
                    let snf = smith_normal_form(&m, false);
                    let nonzero: Vec<BigInt> = snf.diagonal.into_iter().filter(|x| !x.is_zero()).collect();
                    GroupSummary {
                        rank: nonzero.len(),
                        torsion: nonzero.into_iter().filter(|x| !x.is_one() && *x != -BigInt::one()).collect(),
                    }
                }
                HomologySpec::Rational(a1, a2) => {
                    let vals = [a1.clone(), a2.clone()];
                    let mut m = Matrix::filled(rows.len(), cols.len(), BigRational::zero());
                    for (cj, &j) in cols.iter().enumerate() {
                        for (&i, v) in &d.columns[j] {
                            let Some(&pi) = row_pos.get(&i) else { continue };
                            m.set(pi, cj, v.eval_rational(&vals));
                        }
                    }
                    GroupSummary { rank: rational_rank(&m), torsion: Vec::new() }
                }
            };
            per_block.insert(*bk, summary);
        }
        image.push(per_block);
    }
    let mut table = BTreeMap::new();
    for (r, bl) in blocks.iter().enumerate() {
        for (bk, gens) in bl {
            let out_rank = image.get(r).and_then(|m| m.get(bk)).map_or(0, |s| s.rank);
            let incoming = if r > 0 { image[r - 1].get(bk) } else { None };
            let in_rank = incoming.map_or(0, |s| s.rank);
            let rank = gens.len() - out_rank - in_rank;
            let torsion = incoming.map(|s| s.torsion.clone()).unwrap_or_default();
            if rank > 0 || !torsion.is_empty() {
                table.insert((cx.homological_degree(r), bk.0, bk.1), GroupSummary { rank, torsion });
            }
        }
    }
    Ok(HomologyTable(table))
}
