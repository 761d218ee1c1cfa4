//! Multiline queues and generalized multiline queues.
//!
//! Rows are indexed from the bottom (row 1). A straight queue has weakly
//! decreasing row sizes; any tuple of subsets is a generalized queue.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::base::{join, parse_list, Composition, Partition, Word};
use crate::error::{Error, Result};
use crate::matching::{bracket, s_letters};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMlq", into = "RawMlq")]
pub struct MultilineQueue {
    n: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawMlq {
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<RawMlq> for MultilineQueue {
    type Error = Error;
    fn try_from(r: RawMlq) -> Result<Self> {
        MultilineQueue::new(r.n, r.rows)
    }
}

impl From<MultilineQueue> for RawMlq {
    fn from(m: MultilineQueue) -> Self {
        RawMlq { n: m.n, rows: m.rows }
    }
}

impl MultilineQueue {
    /// Rows are given bottom-up; entries are sorted and must be distinct
    /// columns in 1..=n.
    pub fn new(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = rows;
        for row in rows.iter_mut() {
            row.sort_unstable();
            if row.windows(2).any(|p| p[0] == p[1]) {
                return Err(Error::Parse(format!("repeated column in row {row:?}")));
            }
            if let Some(&c) = row.iter().find(|&&c| c == 0 || c > n) {
                return Err(Error::OutOfRange(c));
            }
        }
        Ok(MultilineQueue { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Row `j`, 1-based from the bottom.
    pub fn row(&self, j: usize) -> &[usize] {
        &self.rows[j - 1]
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn has_ball(&self, row: usize, col: usize) -> bool {
        self.rows[row - 1].binary_search(&col).is_ok()
    }

    pub fn row_sizes(&self) -> Composition {
        Composition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn is_straight(&self) -> bool {
        self.rows.windows(2).all(|p| p[0].len() >= p[1].len())
    }

    /// The partition λ with λ′ equal to the sorted row sizes.
    pub fn shape(&self) -> Partition {
        self.row_sizes().sort_to_partition().conjugate()
    }

    /// Number of balls in each column, as a length-n composition.
    pub fn column_content(&self) -> Composition {
        let mut c = vec![0; self.n];
        for row in &self.rows {
            for &b in row {
                c[b - 1] += 1;
            }
        }
        Composition(c)
    }

    pub fn with_top_row(&self, row: Vec<usize>) -> Result<Self> {
        let mut rows = self.rows.clone();
        rows.push(row);
        MultilineQueue::new(self.n, rows)
    }

    /// Drops empty rows at the top.
    pub fn trimmed(&self) -> Self {
        let mut rows = self.rows.clone();
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        MultilineQueue { n: self.n, rows }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    fn require_straight(&self) -> Result<()> {
        if self.is_straight() {
            Ok(())
        } else {
            Err(Error::NotStraight)
        }
    }
}

impl fmt::Display for MultilineQueue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| if r.is_empty() { "-".to_string() } else { join(r, ",") })
            .collect();
        write!(f, "n={};{}", self.n, rows.join("|"))
    }
}

impl FromStr for MultilineQueue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, body) = s.split_once(';').ok_or_else(|| Error::Parse("missing ';'".into()))?;
        let n = head
            .trim()
            .strip_prefix("n=")
            .ok_or_else(|| Error::Parse("missing n=".into()))?
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(e.to_string()))?;
        let body = body.trim();
        let rows = if body.is_empty() {
            Vec::new()
        } else {
            body.split('|')
                .map(|r| if r.trim() == "-" { Ok(Vec::new()) } else { parse_list(r, ',') })
                .collect::<Result<Vec<_>>>()?
        };
        MultilineQueue::new(n, rows)
    }
}

/// Column numbers of balls, rows bottom-up, left to right.
pub fn row_word(m: &MultilineQueue) -> Word {
    Word::new(m.rows.iter().flatten().copied().collect()).expect("columns are positive")
}

/// Row numbers of balls, columns left to right, top-down within a column.
pub fn column_word(m: &MultilineQueue) -> Word {
    Word::new(column_sites(m).into_iter().map(|(r, _)| r).collect()).expect("rows are positive")
}

/// Sites (row, column) in column-reading order.
pub(crate) fn column_sites(m: &MultilineQueue) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(m.size());
    for c in 1..=m.n {
        for r in (1..=m.rows.len()).rev() {
            if m.has_ball(r, c) {
                v.push((r, c));
            }
        }
    }
    v
}

pub type Biword = (Word, Word);

/// Row biword (rows over columns, lexicographic) and column biword (columns
/// over rows, antilexicographic).
pub fn biwords(m: &MultilineQueue) -> (Biword, Biword) {
    let mut pairs: Vec<(usize, usize)> =
        m.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |&c| (r + 1, c))).collect();
    pairs.sort_unstable();
    let row_bi = (
        Word::new(pairs.iter().map(|p| p.0).collect()).unwrap(),
        Word::new(pairs.iter().map(|p| p.1).collect()).unwrap(),
    );
    pairs.sort_unstable_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
    let col_bi = (
        Word::new(pairs.iter().map(|p| p.1).collect()).unwrap(),
        Word::new(pairs.iter().map(|p| p.0).collect()).unwrap(),
    );
    (row_bi, col_bi)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledMLQ {
    pub base: MultilineQueue,
    /// (row, column) of each ball to its label.
    pub particle_labels: BTreeMap<(usize, usize), usize>,
    /// (row, column) of each vacancy to its label; only the generalized
    /// labelling fills this.
    pub antiparticle_labels: BTreeMap<(usize, usize), usize>,
}

impl LabelledMLQ {
    /// Labels of row `r` read left to right, over all n sites. Unlabelled
    /// sites read 0.
    pub fn row_labels(&self, r: usize) -> Vec<usize> {
        (1..=self.base.n)
            .map(|c| {
                self.particle_labels
                    .get(&(r, c))
                    .or_else(|| self.antiparticle_labels.get(&(r, c)))
                    .copied()
                    .unwrap_or(0)
            })
            .collect()
    }

    /// Particle labels of row `r` left to right, vacancies read 0.
    pub fn particle_row(&self, r: usize) -> Vec<usize> {
        (1..=self.base.n).map(|c| self.particle_labels.get(&(r, c)).copied().unwrap_or(0)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing {
    pub origin_row: usize,
    pub label: usize,
    pub wraps: bool,
}

/// Sorted multiset of pairings.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairingMultiset {
    pub entries: Vec<Pairing>,
}

impl PairingMultiset {
    pub fn from_triples(t: &[(usize, usize, usize)]) -> Self {
        let mut entries: Vec<Pairing> =
            t.iter().map(|&(r, l, d)| Pairing { origin_row: r, label: l, wraps: d == 1 }).collect();
        entries.sort_unstable();
        PairingMultiset { entries }
    }

    pub fn maj(&self) -> usize {
        self.entries.iter().filter(|p| p.wraps).map(|p| p.label + 1 - p.origin_row).sum()
    }
}

/// One strand segment of the FM algorithm: the ball at `from` in row r pairs
/// with the ball at `to` in row r-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Strand {
    pub row: usize,
    pub from: usize,
    pub to: usize,
    pub label: usize,
}

/// Pairing order within a label class. The left-to-right order is the
/// canonical one; the reversed order is kept for testing order independence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PairingOrder {
    #[default]
    LeftToRight,
    RightToLeft,
}

pub fn fm_label(m: &MultilineQueue) -> Result<(LabelledMLQ, PairingMultiset)> {
    fm_label_ordered(m, PairingOrder::LeftToRight).map(|(l, p, _)| (l, p))
}

pub fn fm_label_ordered(
    m: &MultilineQueue,
    order: PairingOrder,
) -> Result<(LabelledMLQ, PairingMultiset, Vec<Strand>)> {
    m.require_straight()?;
    let n = m.n;
    let top = m.rows.len();
    let mut labels: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut pairs = Vec::new();
    let mut strands = Vec::new();
    for r in (2..=top).rev() {
        for &c in m.row(r) {
            labels.entry((r, c)).or_insert(r);
        }
        let mut sources: Vec<(usize, usize)> = m.row(r).iter().map(|&c| (labels[&(r, c)], c)).collect();
        sources.sort_unstable_by(|a, b| {
            b.0.cmp(&a.0).then(match order {
                PairingOrder::LeftToRight => a.1.cmp(&b.1),
                PairingOrder::RightToLeft => b.1.cmp(&a.1),
            })
        });
        let mut free: Vec<bool> = vec![false; n + 1];
        for &c in m.row(r - 1) {
            free[c] = true;
        }
        for (label, c) in sources {
            let t = next_weakly_right(&free, c, n).expect("straight rows leave a free ball");
            free[t] = false;
            labels.insert((r - 1, t), label);
            pairs.push(Pairing { origin_row: r, label, wraps: t < c });
            strands.push(Strand { row: r, from: c, to: t, label });
        }
    }
    if top >= 1 {
        for &c in m.row(1) {
            labels.entry((1, c)).or_insert(1);
        }
    }
    pairs.sort_unstable();
    let lm = LabelledMLQ { base: m.clone(), particle_labels: labels, antiparticle_labels: BTreeMap::new() };
    Ok((lm, PairingMultiset { entries: pairs }, strands))
}

fn next_weakly_right(free: &[bool], c: usize, n: usize) -> Option<usize> {
    (0..n).map(|k| (c - 1 + k) % n + 1).find(|&t| free[t])
}

fn next_weakly_left(free: &[bool], c: usize, n: usize) -> Option<usize> {
    (0..n).map(|k| (c - 1 + n - k) % n + 1).find(|&t| free[t])
}

pub fn maj(m: &MultilineQueue) -> Result<usize> {
    Ok(fm_label(m)?.1.maj())
}

pub fn is_nonwrapping(m: &MultilineQueue) -> Result<bool> {
    Ok(maj(m)? == 0)
}

/// The left-justified queue M(ν): row j holds columns 1..ν′ⱼ.
pub fn canonical_mlq(nu: &Partition, n: usize) -> Result<MultilineQueue> {
    let conj = nu.conjugate();
    if conj.first() > n {
        return Err(Error::TooNarrow { need: conj.first(), have: n });
    }
    Ok(MultilineQueue { n, rows: conj.parts().iter().map(|&k| (1..=k).collect()).collect() })
}

/// Bottom-row labels of the generalized labelling. For straight queues the
/// vacancies read 0 and this is the FM projection.
pub fn projection(m: &MultilineQueue) -> Vec<usize> {
    if m.rows.is_empty() {
        return vec![0; m.n];
    }
    gmlq_label(m).row_labels(1)
}

/// Number of queues of shape (λ, n) projecting to each state.
pub fn stationary_counts(lam: &Partition, n: usize) -> Result<BTreeMap<Vec<usize>, usize>> {
    if lam.len() > n {
        return Err(Error::TooNarrow { need: lam.len(), have: n });
    }
    let mut counts = BTreeMap::new();
    for m in enumerate_mlq(lam, n)? {
        *counts.entry(projection(&m)).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Generalized labelling, with the wrap data of every pairing.
#[derive(Debug, Clone)]
pub struct GmlqPairings {
    pub labelled: LabelledMLQ,
    /// (origin row, source label) of particle pairings wrapping right.
    pub particle_wraps: Vec<(usize, usize)>,
    /// (origin row, source label) of anti-particle pairings wrapping left.
    pub antiparticle_wraps: Vec<(usize, usize)>,
}

/// Labels row r from the label word of row r+1. Returns the label word of
/// row r with the particle and anti-particle wrap labels.
pub fn gmlq_step(w: &[usize], row: &[usize], n: usize) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by(|&a, &b| w[b - 1].cmp(&w[a - 1]));
    let s = row.len();
    let mut is_particle = vec![false; n + 1];
    for &c in row {
        is_particle[c] = true;
    }
    let mut labels = vec![0usize; n];
    let mut free: Vec<bool> = is_particle.clone();
    let mut pwraps = Vec::new();
    for &i in &order[..s] {
        let t = next_weakly_right(&free, i, n).expect("particle available");
        free[t] = false;
        labels[t - 1] = w[i - 1];
        if t < i {
            pwraps.push(w[i - 1]);
        }
    }
    let mut free: Vec<bool> = (0..=n).map(|c| c > 0 && !is_particle[c]).collect();
    let mut awraps = Vec::new();
    for &i in order[s..].iter().rev() {
        let t = next_weakly_left(&free, i, n).expect("vacancy available");
        free[t] = false;
        labels[t - 1] = w[i - 1] - 1;
        if t > i {
            awraps.push(w[i - 1]);
        }
    }
    (labels, pwraps, awraps)
}

pub fn gmlq_pairings(b: &MultilineQueue) -> GmlqPairings {
    let n = b.n;
    let top = b.rows.len();
    let mut particle_labels = BTreeMap::new();
    let mut antiparticle_labels = BTreeMap::new();
    let mut particle_wraps = Vec::new();
    let mut antiparticle_wraps = Vec::new();
    if top > 0 {
        let mut w: Vec<usize> =
            (1..=n).map(|c| if b.has_ball(top, c) { top } else { top - 1 }).collect();
        record(&mut particle_labels, &mut antiparticle_labels, b, top, &w);
        for r in (1..top).rev() {
            let (next, pw, aw) = gmlq_step(&w, b.row(r), n);
            particle_wraps.extend(pw.into_iter().map(|l| (r + 1, l)));
            antiparticle_wraps.extend(aw.into_iter().map(|l| (r + 1, l)));
            record(&mut particle_labels, &mut antiparticle_labels, b, r, &next);
            w = next;
        }
    }
    GmlqPairings {
        labelled: LabelledMLQ { base: b.clone(), particle_labels, antiparticle_labels },
        particle_wraps,
        antiparticle_wraps,
    }
}

fn record(
    p: &mut BTreeMap<(usize, usize), usize>,
    a: &mut BTreeMap<(usize, usize), usize>,
    b: &MultilineQueue,
    r: usize,
    w: &[usize],
) {
    for c in 1..=b.n {
        if b.has_ball(r, c) {
            p.insert((r, c), w[c - 1]);
        } else {
            a.insert((r, c), w[c - 1]);
        }
    }
}

pub fn gmlq_label(b: &MultilineQueue) -> LabelledMLQ {
    gmlq_pairings(b).labelled
}

pub fn maj_g(b: &MultilineQueue) -> i64 {
    let p = gmlq_pairings(b);
    let term = |&(r, l): &(usize, usize)| l as i64 - r as i64 + 1;
    p.particle_wraps.iter().map(term).sum::<i64>() - p.antiparticle_wraps.iter().map(term).sum::<i64>()
}

/// Exchanges the cylindrically unmatched balls of rows i and i+1.
pub fn sigma(b: &MultilineQueue, i: usize) -> Result<MultilineQueue> {
    if i == 0 || i >= b.rows.len() {
        return Err(Error::BadRowIndex(i));
    }
    let sites = column_sites(b);
    let w: Vec<usize> = sites.iter().map(|s| s.0).collect();
    let v = s_letters(&w, i);
    let mut rows = vec![Vec::new(); b.rows.len()];
    for (k, &(_, c)) in sites.iter().enumerate() {
        rows[v[k] - 1].push(c);
    }
    MultilineQueue::new(b.n, rows)
}

/// Applies σ along a word, leftmost letter first.
pub fn sigma_word(b: &MultilineQueue, word: &[usize]) -> Result<MultilineQueue> {
    word.iter().try_fold(b.clone(), |m, &i| sigma(&m, i))
}

/// Number of wrapping pairs when the columns in `opens` (upper row) are matched
/// cylindrically against the columns in `closes` (lower row).
pub(crate) fn wrapping_between(opens: &[usize], closes: &[usize], n: usize) -> usize {
    let marks = two_row_marks(opens, closes, n);
    bracket(&marks, true).wrapping_pairs.len()
}

pub(crate) fn two_row_marks(upper: &[usize], lower: &[usize], n: usize) -> Vec<Option<bool>> {
    let mut marks = Vec::new();
    for c in 1..=n {
        if upper.contains(&c) {
            marks.push(Some(true));
        }
        if lower.contains(&c) {
            marks.push(Some(false));
        }
    }
    marks
}

/// Energy function: wrapping counts between each nested indicator level of
/// the label word of row i+1 and row i.
pub fn energy_h(b: &MultilineQueue) -> usize {
    energy_table(b).values().sum()
}

/// H(w_j^{(i+1)}; B_i) keyed by (i+1, j).
pub fn energy_table(b: &MultilineQueue) -> BTreeMap<(usize, usize), usize> {
    let lm = gmlq_label(b);
    let top = b.rows.len();
    let mut table = BTreeMap::new();
    for i in 1..top {
        let w = lm.row_labels(i + 1);
        for j in 1..=top {
            let level: Vec<usize> = (1..=b.n).filter(|&c| w[c - 1] >= j).collect();
            table.insert((i + 1, j), wrapping_between(&level, b.row(i), b.n));
        }
    }
    table
}

/// All queues with the given row sizes, lexicographic on rows bottom-up.
pub fn enumerate_by_row_sizes(sizes: &[usize], n: usize) -> Result<impl Iterator<Item = MultilineQueue>> {
    if let Some(&k) = sizes.iter().find(|&&k| k > n) {
        return Err(Error::TooNarrow { need: k, have: n });
    }
    let per_row: Vec<Vec<Vec<usize>>> =
        sizes.iter().map(|&k| (1..=n).combinations(k).collect()).collect();
    let it: Box<dyn Iterator<Item = Vec<Vec<usize>>>> = if per_row.is_empty() {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new(per_row.into_iter().multi_cartesian_product())
    };
    Ok(it.map(move |rows| MultilineQueue { n, rows }))
}

/// MLQ(λ, n): row sizes λ′.
pub fn enumerate_mlq(shape: &Partition, n: usize) -> Result<impl Iterator<Item = MultilineQueue>> {
    enumerate_by_row_sizes(shape.conjugate().parts(), n)
}

/// GMLQ(α, n): row j has αⱼ balls.
pub fn enumerate_gmlq(alpha: &Composition, n: usize) -> Result<impl Iterator<Item = MultilineQueue>> {
    enumerate_by_row_sizes(alpha.parts(), n)
}

/// All L×n binary matrices as generalized queues.
pub fn enumerate_matrices(l: usize, n: usize) -> impl Iterator<Item = MultilineQueue> {
    (0..1u64 << (l * n)).map(move |bits| {
        let rows = (0..l)
            .map(|r| (1..=n).filter(|&c| bits >> (r * n + c - 1) & 1 == 1).collect())
            .collect();
        MultilineQueue { n, rows }
    })
}

pub fn count_mlq(shape: &Partition, n: usize) -> u128 {
    shape.conjugate().parts().iter().map(|&k| binom(n, k)).product()
}

pub(crate) fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charge::{charge_generalized, charge_letters};
    use proptest::prelude::*;

    fn q(n: usize, rows: &[&[usize]]) -> MultilineQueue {
        MultilineQueue::new(n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn label_example() -> MultilineQueue {
        q(6, &[&[1, 2, 3, 4], &[1, 3, 5, 6], &[2, 3], &[3, 5]])
    }

    fn collapse_example() -> MultilineQueue {
        q(5, &[&[1, 3, 4], &[1, 4, 5], &[2, 5], &[1, 3], &[4]])
    }

    fn gmlq_example() -> MultilineQueue {
        q(4, &[&[2, 3], &[1, 4], &[2, 3, 4]])
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn words() {
        assert_eq!(row_word(&label_example()).to_string(), "1 2 3 4 1 3 5 6 2 3 3 5");
        assert_eq!(column_word(&label_example()).to_string(), "2 1 3 1 4 3 2 1 1 4 2 2");
        assert_eq!(row_word(&q(6, &[&[2, 5]])).to_string(), "2 5");
        assert_eq!(row_word(&collapse_example()).to_string(), "1 3 4 1 4 5 2 5 1 3 4");
        assert!(column_word(&q(4, &[])).is_empty());
        assert_eq!(column_word(&gmlq_example()).to_string(), "2 3 1 3 1 3 2");
    }

    #[test]
    fn biword_example() {
        let ((top, bottom), (ctop, cbottom)) = biwords(&label_example());
        assert_eq!(top.to_string(), "1 1 1 1 2 2 2 2 3 3 4 4");
        assert_eq!(bottom, row_word(&label_example()));
        assert_eq!(ctop.to_string(), "1 1 2 2 3 3 3 3 4 5 5 6");
        assert_eq!(cbottom.to_string(), "2 1 3 1 4 3 2 1 1 4 2 2");
        let ((t, b), (ct, cb)) = biwords(&q(1, &[&[1]]));
        assert_eq!((t.to_string(), b.to_string(), ct.to_string(), cb.to_string()), ("1".into(), "1".into(), "1".into(), "1".into()));
    }

    #[test]
    fn fm_example() {
        let (lm, pairs) = fm_label(&label_example()).unwrap();
        let expect = PairingMultiset::from_triples(&[
            (4, 4, 0),
            (4, 4, 1),
            (3, 4, 0),
            (3, 4, 0),
            (2, 4, 0),
            (2, 4, 1),
            (2, 2, 0),
            (2, 2, 1),
        ]);
        assert_eq!(pairs, expect);
        assert_eq!(pairs.maj(), 5);
        assert_eq!(lm.particle_row(1), vec![4, 2, 4, 2, 0, 0]);
        assert_eq!(projection(&label_example()), vec![4, 2, 4, 2, 0, 0]);
        let (lr, pr, _) = fm_label_ordered(&label_example(), PairingOrder::RightToLeft).unwrap();
        assert_eq!(lr, lm);
        assert_eq!(pr, pairs);
        assert!(!is_nonwrapping(&label_example()).unwrap());
    }

    #[test]
    fn fm_small_cases() {
        let (lm, pairs) = fm_label(&q(5, &[&[2, 4, 5]])).unwrap();
        assert!(pairs.entries.is_empty());
        assert!(lm.particle_labels.values().all(|&l| l == 1));
        assert_eq!(maj(&q(5, &[&[2, 4, 5]])).unwrap(), 0);
        assert_eq!(maj(&collapse_example()).unwrap(), 4);
        assert!(matches!(fm_label(&q(3, &[&[1], &[1, 2]])), Err(Error::NotStraight)));
        assert_eq!(projection(&q(4, &[&[3]])), vec![0, 0, 1, 0]);
    }

    #[test]
    fn canonical() {
        assert_eq!(canonical_mlq(&p(&[2, 1]), 3).unwrap(), q(3, &[&[1, 2], &[1]]));
        assert!(matches!(canonical_mlq(&p(&[1, 1, 1]), 2), Err(Error::TooNarrow { .. })));
        for nu in Partition::all_up_to(8) {
            let m = canonical_mlq(&nu, nu.len().max(1)).unwrap();
            assert_eq!(maj(&m).unwrap(), 0);
            assert_eq!(m.shape(), nu);
        }
    }

    #[test]
    fn text_and_json() {
        let m = label_example();
        assert_eq!(m.to_string(), "n=6;1,2,3,4|1,3,5,6|2,3|3,5");
        assert_eq!("n=6;1,2,3,4|1,3,5,6|2,3|3,5".parse::<MultilineQueue>().unwrap(), m);
        assert_eq!(m.to_json(), r#"{"n":6,"rows":[[1,2,3,4],[1,3,5,6],[2,3],[3,5]]}"#);
        assert_eq!(MultilineQueue::from_json(&m.to_json()).unwrap(), m);
        let e = q(3, &[&[1], &[]]);
        assert_eq!(e.to_string(), "n=3;1|-");
        assert_eq!("n=3;1|".parse::<MultilineQueue>().unwrap(), e);
        assert_eq!("n=3;".parse::<MultilineQueue>().unwrap().num_rows(), 0);
        assert!("n=3;4".parse::<MultilineQueue>().is_err());
        assert!("n=3;1,1".parse::<MultilineQueue>().is_err());
        assert!("3;1".parse::<MultilineQueue>().is_err());
        assert!(MultilineQueue::from_json(r#"{"n":2,"rows":[[3]]}"#).is_err());
    }

    #[test]
    fn gmlq_pairing_step() {
        let (row, _, _) = gmlq_step(&[2, 5, 4, 2, 4, 2], &[1, 5], 6);
        assert_eq!(row, vec![4, 3, 1, 1, 5, 1]);
        let (row, _, _) = gmlq_step(&[2, 5, 2, 3, 4, 2], &[1, 5], 6);
        assert_eq!(row, vec![4, 2, 1, 1, 5, 1]);
    }

    #[test]
    fn gmlq_example_labels() {
        let b = gmlq_example();
        let lm = gmlq_label(&b);
        assert_eq!(lm.row_labels(3), vec![2, 3, 3, 3]);
        assert_eq!(lm.row_labels(2), vec![3, 2, 1, 3]);
        assert_eq!(lm.row_labels(1), vec![0, 3, 3, 1]);
        assert_eq!(maj_g(&b), 2);
        let s2 = sigma(&b, 2).unwrap();
        assert_eq!(s2, q(4, &[&[2, 3], &[1, 2, 4], &[3, 4]]));
        let s12 = sigma(&s2, 1).unwrap();
        assert_eq!(s12, q(4, &[&[2, 3, 4], &[1, 2], &[3, 4]]));
        assert_eq!(maj_g(&s2), 2);
        assert_eq!(maj_g(&s12), 2);
    }

    #[test]
    fn energy_example() {
        let b = gmlq_example();
        let t = energy_table(&b);
        let nonzero: Vec<_> = t.iter().filter(|(_, &v)| v > 0).map(|(&k, &v)| (k, v)).collect();
        assert_eq!(nonzero, vec![((2, 3), 1), ((3, 3), 1)]);
        assert_eq!(energy_h(&b), 2);
        assert_eq!(energy_h(&q(3, &[&[1, 2]])), 0);
    }

    #[test]
    fn sigma_errors_and_fixed_points() {
        let b = gmlq_example();
        assert!(matches!(sigma(&b, 3), Err(Error::BadRowIndex(3))));
        assert!(matches!(sigma(&b, 0), Err(Error::BadRowIndex(0))));
        let m = q(4, &[&[1, 3], &[2, 4]]);
        assert_eq!(sigma(&m, 1).unwrap(), m);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_mlq(&p(&[2]), 2).unwrap().count(), 4);
        assert_eq!(enumerate_mlq(&p(&[1, 1]), 2).unwrap().collect::<Vec<_>>(), vec![q(2, &[&[1, 2]])]);
        assert_eq!(enumerate_mlq(&p(&[2, 1]), 3).unwrap().count(), 9);
        assert_eq!(count_mlq(&p(&[2, 1]), 3), 9);
        assert!(enumerate_mlq(&p(&[1, 1, 1]), 2).is_err());
        assert_eq!(enumerate_matrices(2, 3).count(), 64);
        let v: Vec<_> = enumerate_mlq(&p(&[2]), 2).unwrap().collect();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn stationary() {
        let c = stationary_counts(&p(&[1]), 2).unwrap();
        assert_eq!(c.values().copied().collect::<Vec<_>>(), vec![1, 1]);
        for (lam, n) in [(p(&[2, 1]), 3), (p(&[3, 1]), 3), (p(&[2, 2, 1]), 4), (p(&[3, 2, 1]), 4)] {
            let c = stationary_counts(&lam, n).unwrap();
            assert_eq!(c.values().sum::<usize>() as u128, count_mlq(&lam, n));
            for (state, &k) in &c {
                let mut rot = state.clone();
                rot.rotate_left(1);
                assert_eq!(c.get(&rot), Some(&k), "{state:?}");
            }
        }
    }

    /// The labelling by iterated cylindrical matching of the column word.
    type SiteMap = BTreeMap<(usize, usize), usize>;

    fn fm_by_matching(m: &MultilineQueue) -> (SiteMap, SiteMap) {
        let mut labels = BTreeMap::new();
        let mut wraps = BTreeMap::new();
        let top = m.num_rows();
        for r in (2..=top).rev() {
            for &c in m.row(r) {
                labels.entry((r, c)).or_insert(r);
            }
            for l in (r..=top).rev() {
                let upper: Vec<usize> = m.row(r).iter().copied().filter(|&c| labels[&(r, c)] == l).collect();
                let lower: Vec<usize> =
                    m.row(r - 1).iter().copied().filter(|&c| !labels.contains_key(&(r - 1, c))).collect();
                let marks = two_row_marks(&upper, &lower, m.n());
                let cols: Vec<usize> = (1..=m.n())
                    .flat_map(|c| {
                        let mut v = Vec::new();
                        if upper.contains(&c) {
                            v.push(c);
                        }
                        if lower.contains(&c) {
                            v.push(c);
                        }
                        v
                    })
                    .collect();
                let md = bracket(&marks, true);
                for &(_, close) in &md.matched_pairs {
                    labels.insert((r - 1, cols[close - 1]), l);
                }
                if !md.wrapping_pairs.is_empty() {
                    wraps.insert((l, r), md.wrapping_pairs.len());
                }
            }
        }
        if top >= 1 {
            for &c in m.row(1) {
                labels.entry((1, c)).or_insert(1);
            }
        }
        (labels, wraps)
    }

    fn straight_small() -> Vec<MultilineQueue> {
        let mut out = Vec::new();
        for size in 0..=6 {
            for lam in Partition::all_of_size(size) {
                for n in lam.len().max(1)..=4 {
                    out.extend(enumerate_mlq(&lam, n).unwrap());
                }
            }
        }
        out
    }

    #[test]
    fn labelling_definitions_agree() {
        for m in straight_small() {
            let (lm, pairs) = fm_label(&m).unwrap();
            let (labels, wraps) = fm_by_matching(&m);
            assert_eq!(lm.particle_labels, labels, "{m}");
            let mut counted = BTreeMap::new();
            for p in pairs.entries.iter().filter(|p| p.wraps) {
                *counted.entry((p.label, p.origin_row)).or_insert(0) += 1;
            }
            assert_eq!(counted, wraps, "{m}");
        }
    }

    #[test]
    fn maj_is_charge_of_column_word() {
        for m in straight_small() {
            let cw = column_word(&m);
            assert_eq!(maj(&m).unwrap(), charge_letters(cw.letters()).unwrap(), "{m}");
        }
    }

    #[test]
    fn straight_gmlq_agrees_with_fm() {
        for m in straight_small() {
            let (lm, _) = fm_label(&m).unwrap();
            let g = gmlq_label(&m);
            assert_eq!(g.particle_labels, lm.particle_labels, "{m}");
            for (&(r, _), &l) in &g.antiparticle_labels {
                assert_eq!(l + 1, r, "{m}");
            }
            assert_eq!(maj_g(&m), maj(&m).unwrap() as i64);
        }
    }

    fn gmlq_small() -> Vec<MultilineQueue> {
        let mut out = Vec::new();
        for l in 1..=3 {
            for n in 1..=4 {
                if l * n <= 12 {
                    out.extend(enumerate_matrices(l, n));
                }
            }
        }
        out
    }

    #[test]
    fn gmlq_identities() {
        for b in gmlq_small() {
            let g = maj_g(&b);
            assert_eq!(energy_h(&b) as i64, g, "{b}");
            assert_eq!(charge_generalized(&column_word(&b)) as i64, g, "{b}");
            let lm = gmlq_label(&b);
            for r in 1..=b.num_rows() {
                let pmin = b.row(r).iter().map(|&c| lm.particle_labels[&(r, c)]).min();
                let amax = (1..=b.n()).filter(|&c| !b.has_ball(r, c)).map(|c| lm.antiparticle_labels[&(r, c)]).max();
                if let (Some(p), Some(a)) = (pmin, amax) {
                    assert!(a < p, "{b} row {r}");
                }
            }
            let no_wraps = gmlq_pairings(&b).particle_wraps.is_empty();
            assert_eq!(g == 0, no_wraps, "{b}");
            for i in 1..b.num_rows() {
                let s = sigma(&b, i).unwrap();
                assert_eq!(sigma(&s, i).unwrap(), b);
                assert_eq!(s.row_sizes(), b.row_sizes().swapped(i));
                assert_eq!(maj_g(&s), g, "{b} sigma {i}");
                assert_eq!(projection(&s), projection(&b));
                let ls = gmlq_label(&s);
                for r in (1..=b.num_rows()).filter(|&r| r != i + 1) {
                    assert_eq!(ls.row_labels(r), lm.row_labels(r), "{b} sigma {i} row {r}");
                }
            }
        }
    }

    #[test]
    fn coxeter_relations() {
        for n in 1..=3 {
            for b in enumerate_matrices(4, n) {
                let s = |m: &MultilineQueue, w: &[usize]| sigma_word(m, w).unwrap();
                assert_eq!(s(&b, &[1, 3]), s(&b, &[3, 1]));
                for i in 1..=2 {
                    assert_eq!(s(&b, &[i, i + 1, i]), s(&b, &[i + 1, i, i + 1]), "{b}");
                }
            }
        }
        for b in enumerate_gmlq(&Composition(vec![1, 2]), 3).unwrap() {
            assert_eq!(projection(&sigma(&b, 1).unwrap()), projection(&b));
        }
    }

    proptest! {
        #[test]
        fn biword_bottom_rows(rows in proptest::collection::vec(proptest::collection::btree_set(1usize..=5, 0..=5), 0..5)) {
            let m = MultilineQueue::new(5, rows.into_iter().map(|s| s.into_iter().collect()).collect()).unwrap();
            let ((_, b), (_, cb)) = biwords(&m);
            prop_assert_eq!(b, row_word(&m));
            prop_assert_eq!(cb, column_word(&m));
            prop_assert_eq!(m.to_string().parse::<MultilineQueue>().unwrap(), m.clone());
            prop_assert_eq!(MultilineQueue::from_json(&m.to_json()).unwrap(), m);
        }
    }
}
