//! Partition agreement scores.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Relabel clusters `0..k` in order of first appearance.
pub fn canonical_labels(labels: &[usize]) -> Vec<usize> {
    let mut map = BTreeMap::new();
    labels
        .iter()
        .map(|&l| {
            let next = map.len();
            *map.entry(l).or_insert(next)
        })
        .collect()
}

struct Contingency {
    n: usize,
    joint: BTreeMap<(usize, usize), usize>,
    rows: BTreeMap<usize, usize>,
    cols: BTreeMap<usize, usize>,
}

fn contingency(a: &[usize], b: &[usize]) -> Result<Contingency> {
    if a.len() != b.len() {
        return Err(Error::Dimension {
            expected: a.len(),
            actual: b.len(),
        });
    }
    let mut joint = BTreeMap::new();
    let mut rows = BTreeMap::new();
    let mut cols = BTreeMap::new();
    for (&x, &y) in a.iter().zip(b) {
        *joint.entry((x, y)).or_insert(0) += 1;
        *rows.entry(x).or_insert(0) += 1;
        *cols.entry(y).or_insert(0) += 1;
    }
    Ok(Contingency { n: a.len(), joint, rows, cols })
}

fn pairs(k: usize) -> f64 {
    let k = k as f64;
    k * (k - 1.0) / 2.0
}

/// Adjusted Rand Index under the hypergeometric null model.
///
/// When both labelings are trivial in the same way (one block each, or all
/// singletons) the expected and maximal index coincide and the score is 1.
pub fn ari(a: &[usize], b: &[usize]) -> Result<f64> {
    let c = contingency(a, b)?;
    if c.n < 2 {
        return Err(Error::InvalidArgument("ARI needs at least 2 items".into()));
    }
    let index: f64 = c.joint.values().map(|&k| pairs(k)).sum();
    let sum_a: f64 = c.rows.values().map(|&k| pairs(k)).sum();
    let sum_b: f64 = c.cols.values().map(|&k| pairs(k)).sum();
    let expected = sum_a * sum_b / pairs(c.n);
    let max = 0.5 * (sum_a + sum_b);
    if max == expected {
        return Ok(1.0);
    }
    Ok((index - expected) / (max - expected))
}

fn entropy<'a>(counts: impl Iterator<Item = &'a usize>, n: f64) -> f64 {
    counts
        .filter(|&&k| k > 0)
        .map(|&k| {
            let p = k as f64 / n;
            -p * p.ln()
        })
        .sum()
}

/// Normalized mutual information `2I/(H_U + H_V)`.
///
/// Two constant labelings score 1; exactly one constant labeling scores 0.
pub fn nmi(a: &[usize], b: &[usize]) -> Result<f64> {
    let c = contingency(a, b)?;
    if c.n == 0 {
        return Err(Error::InvalidArgument("NMI needs at least 1 item".into()));
    }
    let n = c.n as f64;
    let ha = entropy(c.rows.values(), n);
    let hb = entropy(c.cols.values(), n);
    match (c.rows.len() == 1, c.cols.len() == 1) {
        (true, true) => return Ok(1.0),
        (true, false) | (false, true) => return Ok(0.0),
        _ => {}
    }
    let mut mi = 0.0;
    for (&(x, y), &k) in &c.joint {
        let pxy = k as f64 / n;
        let px = c.rows[&x] as f64 / n;
        let py = c.cols[&y] as f64 / n;
        mi += pxy * (pxy / (px * py)).ln();
    }
    Ok((2.0 * mi / (ha + hb)).clamp(0.0, 1.0))
}
