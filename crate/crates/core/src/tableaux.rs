//! Semistandard tableaux in French notation (rows bottom-up), insertion,
//! the bijection with nonwrapping multiline queues, skew queues and
//! Littlewood-Richardson coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::base::{content_of, is_lattice, join, Composition, Partition, Word};
use crate::charge::charge_letters;
use crate::collapse::{collapse_rho, CollapseResult};
use crate::error::{Error, Result};
use crate::mlq::{maj, row_word, MultilineQueue};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Rows bottom-up. Trailing empty rows are dropped.
    pub fn new(mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        let t = Tableau { rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidTableau(format!("{m}: {self}")));
        for (j, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return bad("empty row");
            }
            if row.contains(&0) {
                return bad("zero entry");
            }
            if row.windows(2).any(|p| p[0] > p[1]) {
                return bad("row not weakly increasing");
            }
            if j > 0 {
                let below = &self.rows[j - 1];
                if row.len() > below.len() {
                    return bad("not a partition shape");
                }
                if row.iter().zip(below).any(|(a, b)| a <= b) {
                    return bad("column not strictly increasing");
                }
            }
        }
        Ok(())
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    /// Row j holds j's, with row lengths given by `shape`.
    pub fn superstandard(shape: &Partition) -> Self {
        Tableau { rows: shape.parts().iter().enumerate().map(|(j, &k)| vec![j + 1; k]).collect() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn content(&self) -> Composition {
        content_of(&self.rows.iter().flatten().copied().collect::<Vec<_>>())
    }

    /// Column c (0-based), bottom to top.
    pub fn column(&self, c: usize) -> Vec<usize> {
        self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Builds a tableau from columns given bottom to top.
    pub fn from_columns(cols: &[Vec<usize>]) -> Result<Self> {
        let h = cols.iter().map(Vec::len).max().unwrap_or(0);
        let rows = (0..h).map(|j| cols.iter().take_while(|c| c.len() > j).map(|c| c[j]).collect()).collect();
        let t = Tableau::new(rows)?;
        if t.num_columns() != cols.iter().filter(|c| !c.is_empty()).count() {
            return Err(Error::InvalidTableau("columns do not form a partition shape".into()));
        }
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| join(r, " ")).collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl FromStr for Tableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Tableau::empty());
        }
        let rows = s
            .split('/')
            .map(|r| {
                r.split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("entry {t:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

/// Row reading word: rows top to bottom, left to right.
pub fn rrw(t: &Tableau) -> Word {
    Word::new(t.rows.iter().rev().flatten().copied().collect()).expect("positive entries")
}

/// Column reading word: columns left to right, top to bottom.
pub fn crw(t: &Tableau) -> Word {
    let mut v = Vec::with_capacity(t.size());
    for c in 0..t.num_columns() {
        v.extend(t.column(c).into_iter().rev());
    }
    Word::new(v).expect("positive entries")
}

/// Reversed column reading word: columns right to left, bottom to top.
pub fn revcrw(t: &Tableau) -> Word {
    crw(t).reversed()
}

pub fn ssyt_charge(t: &Tableau) -> Result<usize> {
    charge_letters(rrw(t).letters())
}

fn column_insert_letter(rows: &mut Vec<Vec<usize>>, x: usize) {
    let mut x = x;
    let mut c = 0;
    loop {
        let height = rows.iter().take_while(|r| r.len() > c).count();
        match (0..height).find(|&j| rows[j][c] >= x) {
            Some(j) => {
                std::mem::swap(&mut rows[j][c], &mut x);
                c += 1;
            }
            None => {
                if height == rows.len() {
                    rows.push(Vec::new());
                }
                rows[height].push(x);
                return;
            }
        }
    }
}

/// Column insertion of w, first letter first.
pub fn column_insert(w: &Word) -> Tableau {
    column_insert_letters(w.letters())
}

pub(crate) fn column_insert_letters(w: &[usize]) -> Tableau {
    let mut rows = Vec::new();
    for &x in w {
        column_insert_letter(&mut rows, x);
    }
    Tableau { rows }
}

/// Row insertion of w, first letter first.
pub fn row_insert(w: &Word) -> Tableau {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &a in w.letters() {
        let mut x = a;
        let mut j = 0;
        loop {
            if j == rows.len() {
                rows.push(vec![x]);
                break;
            }
            match rows[j].iter().position(|&y| y > x) {
                Some(p) => {
                    std::mem::swap(&mut rows[j][p], &mut x);
                    j += 1;
                }
                None => {
                    rows[j].push(x);
                    break;
                }
            }
        }
    }
    Tableau { rows }
}

/// The nonwrapping queue of T on n columns: collapse of the one-ball rows
/// read off revcrw(T).
pub fn mlq_of_tableau(t: &Tableau, n: usize) -> Result<MultilineQueue> {
    if t.max_entry() > n {
        return Err(Error::AlphabetTooSmall(t.max_entry(), n));
    }
    Ok(collapse_word(revcrw(t).letters(), n))
}

/// ρ_N of the queue whose k-th row is {w_k}, with empty top rows dropped.
pub fn collapse_word(w: &[usize], n: usize) -> MultilineQueue {
    let b = MultilineQueue::new(n, w.iter().map(|&x| vec![x]).collect()).expect("letters within n");
    collapse_rho(&b).queue.trimmed()
}

pub fn tab_of_mlq(m: &MultilineQueue) -> Result<Tableau> {
    match maj(m) {
        Ok(0) => Ok(column_insert(&row_word(m))),
        _ => Err(Error::NotNonwrapping),
    }
}

/// k → M: add {k} as a new top row and collapse.
pub fn insert_into_mlq(m: &MultilineQueue, k: usize) -> Result<MultilineQueue> {
    if k == 0 || k > m.n() {
        return Err(Error::OutOfRange(k));
    }
    Ok(collapse_rho(&m.trimmed().with_top_row(vec![k])?).queue.trimmed())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    /// `rows[j]` fills the cells of row j+1 right of the inner shape.
    pub fn new(outer: Partition, inner: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeMismatch(format!("{inner} is not inside {outer}")));
        }
        let mut rows = rows;
        rows.resize(outer.len(), Vec::new());
        if rows.len() != outer.len() {
            return Err(Error::ShapeMismatch("too many rows".into()));
        }
        let t = SkewTableau { outer, inner, rows };
        for j in 1..=t.outer.len() {
            if t.rows[j - 1].len() != t.outer.part(j) - t.inner.part(j) {
                return Err(Error::ShapeMismatch(format!("row {j} has the wrong length")));
            }
            let cells: Vec<usize> = t.rows[j - 1].clone();
            if cells.contains(&0) || cells.windows(2).any(|p| p[0] > p[1]) {
                return Err(Error::InvalidTableau(format!("row {j}")));
            }
            for c in t.inner.part(j) + 1..=t.outer.part(j) {
                if let Some(b) = t.get(j - 1, c) {
                    if b >= t.get(j, c).unwrap() {
                        return Err(Error::InvalidTableau(format!("column {c}")));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn from_straight(t: &Tableau) -> Self {
        SkewTableau { outer: t.shape(), inner: Partition::empty(), rows: t.rows.clone() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at row j, column c (1-based), if the cell is in the skew shape.
    pub fn get(&self, j: usize, c: usize) -> Option<usize> {
        if j == 0 || j > self.outer.len() || c <= self.inner.part(j) || c > self.outer.part(j) {
            return None;
        }
        Some(self.rows[j - 1][c - self.inner.part(j) - 1])
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn content(&self) -> Composition {
        content_of(&self.rows.iter().flatten().copied().collect::<Vec<_>>())
    }

    /// Rows top to bottom, left to right.
    pub fn row_reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (1..=self.outer.len())
            .map(|j| {
                let mut cells = vec![".".to_string(); self.inner.part(j)];
                cells.extend(self.rows[j - 1].iter().map(|x| x.to_string()));
                cells.join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl FromStr for SkewTableau {
    type Err = Error;
    /// Rows bottom-up separated by "/", inner cells written ".".
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(SkewTableau { outer: Partition::empty(), inner: Partition::empty(), rows: vec![] });
        }
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for r in s.split('/') {
            let toks: Vec<&str> = r.split_whitespace().collect();
            let k = toks.iter().take_while(|&&t| t == ".").count();
            let row = toks[k..]
                .iter()
                .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("entry {t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            outer.push(toks.len());
            inner.push(k);
            rows.push(row);
        }
        SkewTableau::new(Partition::new(outer)?, Partition::new(inner)?, rows)
    }
}

/// Fills the inner cells of row j with the hatted letter j. Hatted j is
/// encoded as j and an unhatted letter a as a + ℓ(inner). Returns the
/// straight tableau and the number of hatted letters ℓ(inner).
pub fn straighten(t: &SkewTableau) -> (Tableau, usize) {
    let h = t.inner.len();
    let rows = (1..=t.outer.len())
        .map(|j| {
            let mut row = vec![j; t.inner.part(j)];
            row.extend(t.rows[j - 1].iter().map(|&a| a + h));
            row
        })
        .collect();
    (Tableau::new(rows).expect("straightening is semistandard"), h)
}

/// A nonwrapping queue whose first `skew_column_count` columns are skew.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BicoloredMLQ {
    pub base: MultilineQueue,
    pub skew_column_count: usize,
}

impl BicoloredMLQ {
    /// Row word restricted to the skew columns.
    pub fn skew_row_word(&self) -> Vec<usize> {
        row_word(&self.base).letters().iter().copied().filter(|&c| c <= self.skew_column_count).collect()
    }

    pub fn is_valid(&self) -> bool {
        matches!(maj(&self.base), Ok(0)) && is_lattice(&self.skew_row_word())
    }

    /// The straight columns, shifted to start at column 1.
    pub fn straight_part(&self) -> MultilineQueue {
        let h = self.skew_column_count;
        let rows = self.base.rows().iter().map(|r| r.iter().filter(|&&c| c > h).map(|&c| c - h).collect()).collect();
        MultilineQueue::new(self.base.n() - h, rows).expect("shifted columns stay in range").trimmed()
    }
}

/// mlq of the straightening, with the hatted columns marked skew. `n` is the
/// size of the unhatted alphabet.
pub fn skew_mlq_of(t: &SkewTableau, n: usize) -> Result<BicoloredMLQ> {
    if t.max_entry() > n {
        return Err(Error::AlphabetTooSmall(t.max_entry(), n));
    }
    let (that, h) = straighten(t);
    Ok(BicoloredMLQ { base: mlq_of_tableau(&that, n + h)?, skew_column_count: h })
}

/// Recovers the skew tableau from a bicolored queue.
pub fn skew_tableau_of(m: &BicoloredMLQ) -> Result<SkewTableau> {
    let h = m.skew_column_count;
    let t = tab_of_mlq(&m.base)?;
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    let mut rows = Vec::new();
    for row in t.rows() {
        let k = row.iter().take_while(|&&x| x <= h).count();
        outer.push(row.len());
        inner.push(k);
        rows.push(row[k..].iter().map(|&x| x - h).collect());
    }
    SkewTableau::new(Partition::new(outer)?, Partition::new(inner)?, rows)
}

pub fn rectify_via_mlq(t: &SkewTableau) -> Tableau {
    let n = t.max_entry();
    let m = skew_mlq_of(t, n).expect("alphabet sized to the tableau");
    column_insert(&row_word(&m.straight_part()))
}

/// Rectification by jeu de taquin: slide into inner corners, moving the
/// smaller of the right and upper neighbours (the upper one on ties).
type Grid = BTreeMap<(usize, usize), usize>;

pub fn jdt_rectify(s: &SkewTableau) -> Tableau {
    let mut grid: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for j in 1..=s.outer().len() {
        for c in s.inner().part(j) + 1..=s.outer().part(j) {
            grid.insert((j, c), s.get(j, c).unwrap());
        }
    }
    let mut inner: Vec<usize> = s.inner().parts().to_vec();
    while let Some(j) = (0..inner.len()).rev().find(|&j| inner[j] > 0 && inner.get(j + 1).copied().unwrap_or(0) < inner[j]) {
        let (mut r, mut c) = (j + 1, inner[j]);
        inner[j] -= 1;
        loop {
            let right = grid.get(&(r, c + 1)).copied();
            let up = grid.get(&(r + 1, c)).copied();
            let next = match (right, up) {
                (None, None) => break,
                (Some(_), None) => (r, c + 1),
                (None, Some(_)) => (r + 1, c),
                (Some(a), Some(b)) => {
                    if b <= a {
                        (r + 1, c)
                    } else {
                        (r, c + 1)
                    }
                }
            };
            let v = grid.remove(&next).unwrap();
            grid.insert((r, c), v);
            (r, c) = next;
        }
        while inner.last() == Some(&0) {
            inner.pop();
        }
    }
    let h = grid.keys().map(|k| k.0).max().unwrap_or(0);
    let rows = (1..=h).map(|j| grid.range((j, 0)..(j + 1, 0)).map(|(_, &v)| v).collect()).collect();
    Tableau::new(rows).unwrap()
}

/// Stacks M2 on top of M1 and collapses.
pub fn mult_mlq(m1: &MultilineQueue, m2: &MultilineQueue) -> Result<CollapseResult> {
    if m1.n() != m2.n() {
        return Err(Error::ColumnMismatch(m1.n(), m2.n()));
    }
    let mut rows = m1.trimmed().rows().to_vec();
    rows.extend(m2.trimmed().rows().iter().cloned());
    Ok(collapse_rho(&MultilineQueue::new(m1.n(), rows)?))
}

fn fill_cells(
    cells: &[(usize, usize)],
    k: usize,
    max: usize,
    grid: &mut Grid,
    left: &mut Option<Vec<usize>>,
    out: &mut dyn FnMut(&Grid),
) {
    if k == cells.len() {
        out(grid);
        return;
    }
    let (j, c) = cells[k];
    let lo_row = grid.get(&(j, c - 1)).copied().unwrap_or(1);
    let lo_col = grid.get(&(j - 1, c)).map_or(1, |&b| b + 1);
    for x in lo_row.max(lo_col)..=max {
        if let Some(rem) = left.as_mut() {
            if rem[x - 1] == 0 {
                continue;
            }
            rem[x - 1] -= 1;
        }
        grid.insert((j, c), x);
        fill_cells(cells, k + 1, max, grid, left, out);
        grid.remove(&(j, c));
        if let Some(rem) = left.as_mut() {
            rem[x - 1] += 1;
        }
    }
}

fn skew_cells(outer: &Partition, inner: &Partition) -> Vec<(usize, usize)> {
    (1..=outer.len()).flat_map(|j| (inner.part(j) + 1..=outer.part(j)).map(move |c| (j, c))).collect()
}

/// All SSYT of shape outer/inner with entries at most n, optionally with
/// fixed content.
pub fn enumerate_skew_ssyt(
    outer: &Partition,
    inner: &Partition,
    n: usize,
    content: Option<&[usize]>,
) -> Vec<SkewTableau> {
    if !outer.contains(inner) {
        return Vec::new();
    }
    let cells = skew_cells(outer, inner);
    let mut left = content.map(|c| {
        let mut v = c.to_vec();
        v.resize(n.max(v.len()), 0);
        v
    });
    let max = content.map_or(n, |c| c.len().min(n.max(c.len())));
    if let Some(c) = content {
        if c.iter().sum::<usize>() != cells.len() || c.len() > n && c[n..].iter().any(|&x| x > 0) {
            return Vec::new();
        }
    }
    let mut out = Vec::new();
    let mut grid = std::collections::BTreeMap::new();
    fill_cells(&cells, 0, max, &mut grid, &mut left, &mut |g| {
        let rows = (1..=outer.len())
            .map(|j| (inner.part(j) + 1..=outer.part(j)).map(|c| g[&(j, c)]).collect())
            .collect();
        out.push(SkewTableau { outer: outer.clone(), inner: inner.clone(), rows });
    });
    out
}

pub fn enumerate_ssyt(shape: &Partition, n: usize) -> Vec<Tableau> {
    enumerate_skew_ssyt(shape, &Partition::empty(), n, None)
        .into_iter()
        .map(|s| Tableau { rows: s.rows })
        .collect()
}

pub fn enumerate_ssyt_content(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
    enumerate_skew_ssyt(shape, &Partition::empty(), content.len(), Some(content))
        .into_iter()
        .map(|s| Tableau { rows: s.rows })
        .collect()
}

/// Skew tableaux of shape λ/μ and content ν whose rows read bottom to top,
/// each right to left, form a lattice word.
pub fn lr_count_fillings(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lam.contains(mu) || lam.size() != mu.size() + nu.size() {
        return 0;
    }
    enumerate_skew_ssyt(lam, mu, nu.len(), Some(nu.parts()))
        .iter()
        .filter(|t| {
            let mut w = t.row_reading_word();
            w.reverse();
            is_lattice(&w)
        })
        .count() as u64
}

/// Counts the skew-ball configurations in columns 1..ℓ(μ) that extend the
/// queue of the superstandard tableau of shape ν to a valid bicolored queue
/// of total shape λ with skew column content μ.
pub fn lr_count_mlq(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lam.contains(mu) || lam.size() != mu.size() + nu.size() || !lam.contains(nu) {
        return 0;
    }
    let h = mu.len();
    let straight = mlq_of_tableau(&Tableau::superstandard(nu), nu.len()).expect("alphabet fits");
    let lam_c = lam.conjugate();
    let nu_c = nu.conjugate();
    let rows = lam_c.len();
    let need: Vec<usize> = (1..=rows).map(|j| lam_c.part(j) - nu_c.part(j)).collect();
    let shifted: Vec<Vec<usize>> = (1..=rows)
        .map(|j| if j <= straight.num_rows() { straight.row(j).iter().map(|&c| c + h).collect() } else { vec![] })
        .collect();
    let n = h + nu.len();
    let mut count = 0;
    let mut chosen: Vec<Vec<usize>> = Vec::new();
    let mut col_left: Vec<usize> = mu.parts().to_vec();
    place_skew(&need, h, &mut chosen, &mut col_left, &mut |sk| {
        let full: Vec<Vec<usize>> =
            sk.iter().zip(&shifted).map(|(a, b)| a.iter().chain(b.iter()).copied().collect()).collect();
        let m = BicoloredMLQ { base: MultilineQueue::new(n, full).expect("in range"), skew_column_count: h };
        if m.is_valid() {
            count += 1;
        }
    });
    count
}

fn place_skew(
    need: &[usize],
    h: usize,
    chosen: &mut Vec<Vec<usize>>,
    col_left: &mut Vec<usize>,
    out: &mut dyn FnMut(&[Vec<usize>]),
) {
    use itertools::Itertools;
    let j = chosen.len();
    if j == need.len() {
        if col_left.iter().all(|&x| x == 0) {
            out(chosen);
        }
        return;
    }
    for subset in (1..=h).combinations(need[j]) {
        if subset.iter().any(|&c| col_left[c - 1] == 0) {
            continue;
        }
        // Lattice prefixes need the skew rows read so far to stay lattice.
        for &c in &subset {
            col_left[c - 1] -= 1;
        }
        chosen.push(subset.clone());
        let prefix: Vec<usize> = chosen.iter().flatten().copied().collect();
        if is_lattice(&prefix) {
            place_skew(need, h, chosen, col_left, out);
        }
        chosen.pop();
        for &c in &subset {
            col_left[c - 1] += 1;
        }
    }
}

/// c^λ_{μν} when |λ| = |μ| + |ν|, or c^ν_{λμ} when |ν| = |λ| + |μ|. Both
/// counting methods run and must agree.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let (outer, a, b) = if lam.size() == mu.size() + nu.size() {
        (lam, mu, nu)
    } else if nu.size() == lam.size() + mu.size() {
        (nu, lam, mu)
    } else {
        return Err(Error::SizeMismatch(format!("{lam}, {mu}, {nu}")));
    };
    let x = lr_count_fillings(outer, a, b);
    let y = lr_count_mlq(outer, a, b);
    if x != y {
        return Err(Error::IdentityViolation(format!("LR counts {x} and {y} for {outer}/{a}, {b}")));
    }
    Ok(x)
}
