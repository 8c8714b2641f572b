use foam_core::annular::{build_complex, homology as table, BraidWord, HomologySpec, HomologyTable};

use super::oracle::{laurent_pow, Laurent};
use super::{ok, Check};
use crate::runner::par_map;

fn aps(b: &BraidWord) -> Result<HomologyTable, String> {
    let cx = ok(build_complex(b), format!("complex of {:?}", b.word))?;
    ok(table(&cx, &HomologySpec::Aps), format!("homology of {:?}", b.word))
}

fn braid(n: usize, w: &[i32]) -> BraidWord {
    BraidWord::new(n, w.to_vec()).expect("valid braid word")
}

/// All words of length at most `len` in the letters ±1, ±2.
fn words_b3(len: usize) -> Vec<Vec<i32>> {
    let mut all = vec![vec![]];
    let mut layer: Vec<Vec<i32>> = vec![vec![]];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w| {
                [1, -1, 2, -2].map(|l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

pub fn homology() -> Check {
    let a_part = Laurent::from([((0, 1), 1), ((0, -1), 1)]);
    for n in 1..=3usize {
        let t = aps(&BraidWord::identity(n))?;
        let mut got = Laurent::new();
        for (&(h, q, a), g) in &t.0 {
            ensure!(h == 0 && q == Some(0), "identity {n}-braid has homology at (h, q) = ({h}, {q:?})");
            ensure!(g.torsion.is_empty(), "identity {n}-braid has torsion");
            got.insert((0, a), g.rank);
        }
        ensure!(got == laurent_pow(&a_part, n), "identity {n}-braid: Poincaré polynomial {got:?}");
        ensure!(t.total_rank() == 1 << n, "identity {n}-braid: total rank {}", t.total_rank());
    }
    let words = words_b3(6);
    let failures: Vec<String> = par_map(words.len(), |k| {
        let b = braid(3, &words[k]);
        let cx = match build_complex(&b) {
            Ok(cx) => cx,
            Err(e) => return Some(format!("{:?}: {e}", b.word)),
        };
        if !cx.d_squared_is_zero() {
            return Some(format!("{:?}: d² ≠ 0", b.word));
        }
        for (r, d) in cx.differentials.iter().enumerate() {
            for (j, col) in d.columns.iter().enumerate() {
                if col.keys().any(|&i| cx.groups[r + 1][i].adeg != cx.groups[r][j].adeg) {
                    return Some(format!("{:?}: differential changes adeg", b.word));
                }
            }
        }
        cx.check_gradings().err().map(|e| format!("{:?}: {e}", b.word))
    })
    .into_iter()
    .flatten()
    .collect();
    ensure!(failures.is_empty(), "{} words fail, first {}", failures.len(), failures[0]);
    let pairs: Vec<(BraidWord, BraidWord)> = vec![
        (braid(2, &[1, -1]), BraidWord::identity(2)),
        (braid(2, &[-1, 1]), BraidWord::identity(2)),
        (braid(3, &[1, 2, 1]), braid(3, &[2, 1, 2])),
        (braid(3, &[-1, -2, -1]), braid(3, &[-2, -1, -2])),
        (braid(3, &[1, 2]), braid(3, &[2, 1])),
        (braid(3, &[1, 1, -2]), braid(3, &[2, 1, 1, -2, -2])),
        (braid(3, &[1, -2, 1]), braid(3, &[-1, 1, -2, 1, 1])),
        (braid(3, &[1, 1, 2]), braid(3, &[-2, 1, 1, 2, 2])),
        (braid(2, &[1, 1, 1]), braid(2, &[-1, 1, 1, 1, 1])),
    ];
    for (x, y) in &pairs {
        ensure!(aps(x)? == aps(y)?, "APS tables differ for {:?} and {:?}", x.word, y.word);
    }
    Ok(format!(
        "identity braids n ≤ 3 give (a+a⁻¹)ⁿ; d²=0 and gradings on all {} words ≤ 6 letters over B₃; {} invariance pairs agree",
        words.len(),
        pairs.len()
    ))
}
