//! Fillings of dg(λ), the diagram with bottom-justified columns of heights
//! λ₁ ≥ λ₂ ≥ …, with the coquinv and maj statistics.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::base::{join, Partition};
use crate::error::{Error, Result};
use crate::mlq::{enumerate_mlq, MultilineQueue};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColumnFilling {
    shape: Partition,
    n: usize,
    /// rows[r-1][c-1] = τ(r, c), rows bottom-up.
    rows: Vec<Vec<usize>>,
}

impl ColumnFilling {
    pub fn new(shape: Partition, n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let conj = shape.conjugate();
        if rows.len() != conj.len() || rows.iter().zip(conj.parts()).any(|(r, &k)| r.len() != k) {
            return Err(Error::ShapeMismatch(format!("rows do not fill dg({shape})")));
        }
        if let Some(&x) = rows.iter().flatten().find(|&&x| x == 0 || x > n) {
            return Err(Error::OutOfRange(x));
        }
        Ok(ColumnFilling { shape, n, rows })
    }

    /// Rows bottom-up; the shape is read off the row lengths.
    pub fn from_rows(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens = Partition::new(rows.iter().map(Vec::len).collect())?;
        if lens.len() != rows.len() {
            return Err(Error::InvalidPartition("empty row".into()));
        }
        ColumnFilling::new(lens.conjugate(), n, rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// τ(r, c), 1-based.
    pub fn get(&self, r: usize, c: usize) -> Option<usize> {
        self.rows.get(r.checked_sub(1)?)?.get(c.checked_sub(1)?).copied()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: ColumnFilling = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        ColumnFilling::new(f.shape, f.n, f.rows)
    }
}

impl fmt::Display for ColumnFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| join(r, " ")).collect();
        write!(f, "n={};{}", self.n, rows.join(" / "))
    }
}

impl std::str::FromStr for ColumnFilling {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (head, body) = s.split_once(';').ok_or_else(|| Error::Parse("expected n=<k>;rows".into()))?;
        let n = head
            .trim()
            .strip_prefix("n=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header {head:?}")))?;
        let rows = if body.trim().is_empty() {
            vec![]
        } else {
            body.split('/')
                .map(|r| {
                    r.split_whitespace()
                        .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("entry {t:?}: {e}"))))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?
        };
        ColumnFilling::from_rows(n, rows)
    }
}

/// (x, y, z) = ((r, i), (r-1, i), (r-1, j)) with i < j is a coquinv triple
/// when read counterclockwise it is cyclically decreasing. A missing x
/// counts when τ(y) ≥ τ(z).
fn is_triple(x: Option<usize>, y: usize, z: usize) -> bool {
    match x {
        None => y >= z,
        Some(x) => (x > y && y >= z) || (y >= z && z >= x) || (z >= x && x > y),
    }
}

/// Triples whose y and z sit in row `r - 1`, given rows as a slice.
fn row_triples(shape: &Partition, rows: &[Vec<usize>], r: usize) -> usize {
    let below = &rows[r - 2];
    let mut count = 0;
    for i in 1..=below.len() {
        let x = match shape.part(i) {
            h if h >= r => Some(rows[r - 1][i - 1]),
            h if h == r - 1 => None,
            _ => continue,
        };
        for j in i + 1..=below.len() {
            if is_triple(x, below[i - 1], below[j - 1]) {
                count += 1;
            }
        }
    }
    count
}

pub fn coquinv(tau: &ColumnFilling) -> usize {
    let h = tau.rows.len();
    let mut rows = tau.rows.clone();
    rows.push(Vec::new());
    (2..=h + 1).map(|r| row_triples(&tau.shape, &rows, r)).sum()
}

pub fn maj_filling(tau: &ColumnFilling) -> usize {
    let mut total = 0;
    for r in 2..=tau.rows.len() {
        for (c0, &v) in tau.rows[r - 1].iter().enumerate() {
            if v > tau.rows[r - 2][c0] {
                total += tau.shape.part(c0 + 1) - r + 1;
            }
        }
    }
    total
}

/// The coquinv-free fillings whose row r is a permutation of `contents[r-1]`.
fn arrangements(shape: &Partition, contents: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    search(shape, contents, &mut rows, &mut out);
    out
}

fn search(shape: &Partition, contents: &[Vec<usize>], rows: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    let k = rows.len();
    if k == contents.len() {
        let mut probe = rows.clone();
        probe.push(Vec::new());
        if k == 0 || row_triples(shape, &probe, k + 1) == 0 {
            out.push(rows.clone());
        }
        return;
    }
    for perm in contents[k].iter().copied().permutations(contents[k].len()) {
        rows.push(perm);
        if k == 0 || row_triples(shape, rows, k + 1) == 0 {
            search(shape, contents, rows, out);
        }
        rows.pop();
    }
}

/// The unique coquinv-free filling with the row contents of M.
pub fn filling_of_mlq(m: &MultilineQueue) -> Result<ColumnFilling> {
    if !m.is_straight() {
        return Err(Error::NotStraight);
    }
    let m = m.trimmed();
    let shape = m.shape();
    let found = arrangements(&shape, m.rows());
    match found.as_slice() {
        [rows] => ColumnFilling::new(shape, m.n(), rows.clone()),
        _ => Err(Error::IdentityViolation(format!("{} coquinv-free fillings for {m}", found.len()))),
    }
}

pub fn mlq_of_filling(tau: &ColumnFilling) -> Result<MultilineQueue> {
    if coquinv(tau) != 0 {
        return Err(Error::NotCoquinvFree);
    }
    MultilineQueue::new(tau.n, tau.rows.clone())
}

pub fn enumerate_coquinv_free(lam: &Partition, n: usize) -> Result<Vec<ColumnFilling>> {
    enumerate_mlq(lam, n)?.map(|m| filling_of_mlq(&m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mlq::{count_mlq, fm_label, maj, PairingMultiset};
    use std::collections::BTreeMap;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn label_example() -> MultilineQueue {
        "n=6;1,2,3,4|1,3,5,6|2,3|3,5".parse().unwrap()
    }

    /// Every filling of dg(λ) with entries in [n].
    fn all_fillings(lam: &Partition, n: usize) -> Vec<ColumnFilling> {
        let conj = lam.conjugate();
        let cells: usize = conj.size();
        (0..cells)
            .map(|_| 1..=n)
            .multi_cartesian_product()
            .map(|v| {
                let mut it = v.into_iter();
                let rows = conj.parts().iter().map(|&k| it.by_ref().take(k).collect()).collect();
                ColumnFilling::new(lam.clone(), n, rows).unwrap()
            })
            .collect()
    }

    fn weight(rows: &[Vec<usize>], n: usize) -> Vec<usize> {
        let mut w = vec![0; n];
        for &x in rows.iter().flatten() {
            w[x - 1] += 1;
        }
        w
    }

    #[test]
    fn small_statistics() {
        let single = ColumnFilling::new(p(&[3]), 3, vec![vec![1], vec![3], vec![2]]).unwrap();
        assert_eq!(coquinv(&single), 0);
        let two = |a, b| ColumnFilling::new(p(&[1, 1]), 3, vec![vec![a, b]]).unwrap();
        assert_eq!(coquinv(&two(3, 2)), 1);
        assert_eq!(coquinv(&two(2, 3)), 0);
        let col = ColumnFilling::new(p(&[2]), 2, vec![vec![1], vec![2]]).unwrap();
        assert_eq!(maj_filling(&col), 1);
        let flat = ColumnFilling::new(p(&[2, 2]), 2, vec![vec![1, 2], vec![1, 2]]).unwrap();
        assert_eq!(maj_filling(&flat), 0);
    }

    #[test]
    fn degenerate_convention_matches_queues() {
        for size in 0..=5 {
            for lam in Partition::all_of_size(size) {
                for n in 1..=3 {
                    if lam.conjugate().size() > 6 && n == 3 {
                        continue;
                    }
                    let mut by_filling: BTreeMap<(Vec<usize>, usize), usize> = BTreeMap::new();
                    for f in all_fillings(&lam, n).into_iter().filter(|f| coquinv(f) == 0) {
                        *by_filling.entry((weight(f.rows(), n), maj_filling(&f))).or_default() += 1;
                    }
                    let mut by_queue: BTreeMap<(Vec<usize>, usize), usize> = BTreeMap::new();
                    if lam.len() <= n {
                        for m in enumerate_mlq(&lam, n).unwrap() {
                            *by_queue.entry((m.column_content().0, maj(&m).unwrap())).or_default() += 1;
                        }
                    }
                    assert_eq!(by_filling, by_queue, "{lam}, n={n}");
                }
            }
        }
    }

    #[test]
    fn label_example_round_trip() {
        let m = label_example();
        let f = filling_of_mlq(&m).unwrap();
        assert_eq!(maj_filling(&f), 5);
        assert_eq!(mlq_of_filling(&f).unwrap(), m);
        assert_eq!(f.shape(), &m.shape());
    }

    #[test]
    fn canonical_filling() {
        let lam = p(&[3, 2, 2]);
        let m = crate::mlq::canonical_mlq(&lam, 3).unwrap();
        let f = filling_of_mlq(&m).unwrap();
        assert_eq!(f.rows(), &[vec![1, 2, 3], vec![1, 2, 3], vec![1]]);
        assert_eq!(maj_filling(&f), 0);
    }

    #[test]
    fn bijection_exhaustive() {
        for size in 0..=6 {
            for lam in Partition::all_of_size(size) {
                for n in lam.len().max(1)..=4 {
                    let fs = enumerate_coquinv_free(&lam, n).unwrap();
                    assert_eq!(fs.len() as u128, count_mlq(&lam, n));
                    for f in fs {
                        let m = mlq_of_filling(&f).unwrap();
                        assert_eq!(maj_filling(&f), maj(&m).unwrap());
                        assert_eq!(filling_of_mlq(&m).unwrap(), f);
                        check_label_columns(&m, &f);
                    }
                }
            }
        }
        assert_eq!(enumerate_coquinv_free(&p(&[1]), 2).unwrap().len(), 2);
    }

    /// Balls labelled ℓ in row r sit in columns of height ℓ, and descents
    /// there count the wrapping pairings of label ℓ into row r - 1.
    fn check_label_columns(m: &MultilineQueue, f: &ColumnFilling) {
        let (lab, pairs): (_, PairingMultiset) = fm_label(m).unwrap();
        for r in 1..=f.rows().len() {
            let labels = lab.row_labels(r);
            for (c0, &v) in f.rows()[r - 1].iter().enumerate() {
                assert_eq!(labels[v - 1], f.shape().part(c0 + 1));
            }
            if r >= 2 {
                let mut desc: BTreeMap<usize, usize> = BTreeMap::new();
                for (c0, &v) in f.rows()[r - 1].iter().enumerate() {
                    if v > f.rows()[r - 2][c0] {
                        *desc.entry(f.shape().part(c0 + 1)).or_default() += 1;
                    }
                }
                let mut wraps: BTreeMap<usize, usize> = BTreeMap::new();
                for e in pairs.entries.iter().filter(|e| e.origin_row == r && e.wraps) {
                    *wraps.entry(e.label).or_default() += 1;
                }
                assert_eq!(desc, wraps);
            }
        }
    }

    #[test]
    fn errors_and_formats() {
        assert!(matches!(filling_of_mlq(&"n=3;1|1,2".parse().unwrap()), Err(Error::NotStraight)));
        let bad = ColumnFilling::new(p(&[1, 1]), 3, vec![vec![3, 2]]).unwrap();
        assert!(matches!(mlq_of_filling(&bad), Err(Error::NotCoquinvFree)));
        let f = filling_of_mlq(&label_example()).unwrap();
        assert_eq!(f.to_string().parse::<ColumnFilling>().unwrap(), f);
        assert_eq!(ColumnFilling::from_json(&f.to_json()).unwrap(), f);
        assert!("n=2;1 3".parse::<ColumnFilling>().is_err());
        assert!("n=2;1 / 1 2".parse::<ColumnFilling>().is_err());
    }
}
