//! Dropping and lifting operators on binary matrices, collapsing to
//! nonwrapping queues with a recording tableau, its inverse, rotations and
//! the mRSK correspondence.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matching::bracket;
use crate::mlq::{maj, sigma, two_row_marks, MultilineQueue};
use crate::tableaux::Tableau;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseResult {
    pub queue: MultilineQueue,
    pub recorder: Tableau,
    /// φ(r, j): balls moved from row j+1 to row j while inserting row r.
    pub drop_counts: BTreeMap<(usize, usize), usize>,
}

/// Columns of row i+1 unmatched above and of row i unmatched below, each
/// left to right. A ball pairs with the nearest free ball weakly right of it
/// in the row beneath.
fn unmatched(b: &MultilineQueue, i: usize) -> (Vec<usize>, Vec<usize>) {
    let upper = b.row(i + 1);
    let lower = b.row(i);
    let marks = two_row_marks(upper, lower, b.n());
    let md = bracket(&marks, false);
    let mut cols = Vec::with_capacity(marks.len());
    for c in 1..=b.n() {
        if upper.contains(&c) {
            cols.push(c);
        }
        if lower.contains(&c) {
            cols.push(c);
        }
    }
    let up = md.unmatched_opens.iter().map(|&p| cols[p - 1]).collect();
    let down = md.unmatched_closes.iter().map(|&p| cols[p - 1]).collect();
    (up, down)
}

fn check_row(b: &MultilineQueue, i: usize) -> Result<()> {
    if i == 0 || i >= b.num_rows() {
        return Err(Error::BadRowIndex(i));
    }
    Ok(())
}

fn move_balls(b: &MultilineQueue, from: usize, to: usize, cols: &[usize]) -> MultilineQueue {
    let mut rows = b.rows().to_vec();
    rows[from - 1].retain(|c| !cols.contains(c));
    rows[to - 1].extend_from_slice(cols);
    MultilineQueue::new(b.n(), rows).expect("moving balls keeps columns free")
}

pub fn drop_e(b: &MultilineQueue, i: usize) -> Result<MultilineQueue> {
    check_row(b, i)?;
    let (up, _) = unmatched(b, i);
    Ok(match up.first() {
        Some(&c) => move_balls(b, i + 1, i, &[c]),
        None => b.clone(),
    })
}

pub fn lift_f(b: &MultilineQueue, i: usize) -> Result<MultilineQueue> {
    check_row(b, i)?;
    let (_, down) = unmatched(b, i);
    Ok(match down.last() {
        Some(&c) => move_balls(b, i, i + 1, &[c]),
        None => b.clone(),
    })
}

pub fn drop_e_star(b: &MultilineQueue, i: usize) -> Result<MultilineQueue> {
    check_row(b, i)?;
    Ok(e_star_counted(b, i).0)
}

fn e_star_counted(b: &MultilineQueue, i: usize) -> (MultilineQueue, usize) {
    let (up, _) = unmatched(b, i);
    (move_balls(b, i + 1, i, &up), up.len())
}

fn lift_times(b: &MultilineQueue, i: usize, k: usize) -> MultilineQueue {
    let mut cur = b.clone();
    for _ in 0..k {
        let (_, down) = unmatched(&cur, i);
        let c = *down.last().expect("enough unmatched balls to lift");
        cur = move_balls(&cur, i, i + 1, &[c]);
    }
    cur
}

/// Bottom-to-top collapse: rows r = 2..L are inserted in turn by
/// e*_{r-1}, ..., e*_1, recording the growth of each row.
pub fn collapse_rho(b: &MultilineQueue) -> CollapseResult {
    let l = b.num_rows();
    let mut cur = b.clone();
    let mut drop_counts = BTreeMap::new();
    let mut q: Vec<Vec<usize>> = vec![Vec::new(); l];
    if l > 0 {
        q[0] = vec![1; b.row(1).len()];
    }
    for r in 2..=l {
        let before: Vec<usize> = (1..=r).map(|j| if j < r { cur.row(j).len() } else { 0 }).collect();
        for j in (1..r).rev() {
            let (next, k) = e_star_counted(&cur, j);
            cur = next;
            drop_counts.insert((r, j), k);
        }
        debug_assert!((1..r).all(|j| unmatched(&cur, j).0.is_empty()), "collapsed prefix must stay fixed");
        for j in 1..=r {
            let grown = cur.row(j).len() - before[j - 1];
            q[j - 1].extend(std::iter::repeat_n(r, grown));
        }
    }
    let recorder = Tableau::new(q).expect("recorder is semistandard");
    CollapseResult { queue: cur, recorder, drop_counts }
}

/// Top-to-bottom collapse: e*_{[1,L-1]}, then e*_{[2,L-1]}, and so on.
pub fn collapse_top_to_bottom(b: &MultilineQueue) -> MultilineQueue {
    let l = b.num_rows();
    let mut cur = b.clone();
    for a in 1..l {
        for j in (a..l).rev() {
            cur = e_star_counted(&cur, j).0;
        }
    }
    cur
}

type Labels = BTreeMap<(usize, usize), usize>;

fn initial_labels(b: &MultilineQueue) -> Labels {
    (1..=b.num_rows()).flat_map(|r| b.row(r).iter().map(move |&c| ((r, c), r))).collect()
}

/// e*_j on a labelled configuration. Going through row j left to right, the
/// ball paired with b takes the least free label among row j+1 balls weakly
/// left of b; the leftover labels go in order to the balls that drop.
fn labelled_e_star(cur: &MultilineQueue, lab: &mut Labels, j: usize) -> MultilineQueue {
    let upper: Vec<usize> = cur.row(j + 1).to_vec();
    let lower: Vec<usize> = cur.row(j).to_vec();
    let marks = two_row_marks(&upper, &lower, cur.n());
    let md = bracket(&marks, false);
    let mut cols = Vec::with_capacity(marks.len());
    for c in 1..=cur.n() {
        if upper.contains(&c) {
            cols.push(c);
        }
        if lower.contains(&c) {
            cols.push(c);
        }
    }
    let partner: BTreeMap<usize, usize> = md.matched_pairs.iter().map(|&(o, cl)| (cols[cl - 1], cols[o - 1])).collect();
    let mut pool: Vec<(usize, usize)> = upper.iter().map(|&c| (c, lab[&(j + 1, c)])).collect();
    let mut assigned: BTreeMap<usize, usize> = BTreeMap::new();
    for &bc in &lower {
        let Some(&a) = partner.get(&bc) else { continue };
        let (k, _) = pool
            .iter()
            .enumerate()
            .filter(|(_, &(c, _))| c <= bc)
            .min_by_key(|(_, &(_, v))| v)
            .expect("a matched ball has a candidate label");
        assigned.insert(a, pool.remove(k).1);
    }
    let mut rest = pool.into_iter().map(|(_, v)| v);
    let mut dropped = Vec::new();
    for &c in &upper {
        lab.remove(&(j + 1, c));
        match assigned.get(&c) {
            Some(&v) => {
                lab.insert((j + 1, c), v);
            }
            None => {
                lab.insert((j, c), rest.next().expect("one label per ball"));
                dropped.push(c);
            }
        }
    }
    move_balls(cur, j + 1, j, &dropped)
}

/// Bottom-to-top collapse carrying a label on every ball, initially its row
/// index. Returns the final labels by site.
pub fn labelled_collapse_sites(b: &MultilineQueue) -> Labels {
    let mut lab = initial_labels(b);
    let mut cur = b.clone();
    for r in 2..=b.num_rows() {
        for j in (1..r).rev() {
            cur = labelled_e_star(&cur, &mut lab, j);
        }
    }
    lab
}

pub fn labelled_collapse_top_to_bottom_sites(b: &MultilineQueue) -> Labels {
    let l = b.num_rows();
    let mut lab = initial_labels(b);
    let mut cur = b.clone();
    for a in 1..l {
        for j in (a..l).rev() {
            cur = labelled_e_star(&cur, &mut lab, j);
        }
    }
    lab
}

fn recorder_of(sites: &Labels, rows: usize) -> Tableau {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); rows];
    for (&(r, _), &v) in sites {
        out[r - 1].push(v);
    }
    for row in out.iter_mut() {
        row.sort_unstable();
    }
    Tableau::new(out).expect("labelled collapse gives a semistandard tableau")
}

pub fn labelled_collapse_top_to_bottom(b: &MultilineQueue) -> Tableau {
    recorder_of(&labelled_collapse_top_to_bottom_sites(b), b.num_rows())
}

pub fn labelled_collapse(b: &MultilineQueue) -> Tableau {
    recorder_of(&labelled_collapse_sites(b), b.num_rows())
}

/// Rebuilds B from ρ_N(B) and ρ_Q(B). For r = L down to 2, lifts
/// φ(r, j) balls from row j to j+1 for j = 1, ..., r-1, where φ(r, j) counts
/// the r's in rows 1..=j of the recorder.
pub fn collapse_inverse(queue: &MultilineQueue, recorder: &Tableau) -> Result<MultilineQueue> {
    if !matches!(maj(queue), Ok(0)) {
        return Err(Error::NotNonwrapping);
    }
    let sizes: Vec<usize> = queue.trimmed().row_sizes().0;
    let q_lens: Vec<usize> = recorder.rows().iter().map(Vec::len).collect();
    if sizes != q_lens {
        return Err(Error::ShapeMismatch(format!("queue row sizes {sizes:?}, recorder rows {q_lens:?}")));
    }
    let l = queue.num_rows().max(recorder.max_entry());
    let mut rows = queue.rows().to_vec();
    rows.resize(l, Vec::new());
    let mut cur = MultilineQueue::new(queue.n(), rows)?;
    for r in (2..=l).rev() {
        let mut phi = 0;
        for j in 1..r {
            phi += recorder.rows().get(j - 1).map_or(0, |row| row.iter().filter(|&&x| x == r).count());
            let (_, down) = unmatched(&cur, j);
            if down.len() < phi {
                return Err(Error::ShapeMismatch(format!("cannot lift {phi} balls from row {j}")));
            }
            cur = lift_times(&cur, j, phi);
        }
    }
    Ok(cur)
}

/// Inverse using the φ counts recorded during collapsing.
pub fn collapse_inverse_counts(result: &CollapseResult, rows: usize) -> MultilineQueue {
    let mut r0 = result.queue.rows().to_vec();
    r0.resize(rows.max(r0.len()), Vec::new());
    let mut cur = MultilineQueue::new(result.queue.n(), r0).expect("same columns");
    for r in (2..=cur.num_rows()).rev() {
        for j in 1..r {
            let k = result.drop_counts.get(&(r, j)).copied().unwrap_or(0);
            cur = lift_times(&cur, j, k);
        }
    }
    cur
}

/// 90° counterclockwise: (r, c) in an L×n matrix goes to (c, L-r+1) in n×L.
pub fn rotate90(b: &MultilineQueue) -> MultilineQueue {
    let l = b.num_rows();
    let mut rows = vec![Vec::new(); b.n()];
    for r in 1..=l {
        for &c in b.row(r) {
            rows[c - 1].push(l - r + 1);
        }
    }
    MultilineQueue::new(l, rows).expect("rotated sites are in range")
}

pub fn rot_inv(b: &MultilineQueue) -> MultilineQueue {
    let (a, w) = (b.num_rows(), b.n());
    let mut rows = vec![Vec::new(); w];
    for r in 1..=a {
        for &c in b.row(r) {
            rows[w - c].push(r);
        }
    }
    MultilineQueue::new(a, rows).expect("rotated sites are in range")
}

pub fn rot180(b: &MultilineQueue) -> MultilineQueue {
    let n = b.n();
    let rows = b.rows().iter().rev().map(|row| row.iter().map(|&c| n - c + 1).collect()).collect();
    MultilineQueue::new(n, rows).expect("rotated sites are in range")
}

/// ρ←(B) = rot⁻¹(ρ_N(rot(B))).
pub fn collapse_left(b: &MultilineQueue) -> MultilineQueue {
    rot_inv(&collapse_rho(&rotate90(b)).queue)
}

/// The two collapses of a binary matrix. `down` = ρ_N(B) on n columns;
/// `left` = ρ_N(rot(B)) on L columns, the rotated form of ρ←(B).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MrskPair {
    pub left: MultilineQueue,
    pub down: MultilineQueue,
}

pub fn mrsk(b: &MultilineQueue) -> MrskPair {
    MrskPair { left: collapse_rho(&rotate90(b)).queue, down: collapse_rho(b).queue }
}

pub fn mrsk_inverse(left: &MultilineQueue, down: &MultilineQueue) -> Result<MultilineQueue> {
    if left.shape() != down.shape().conjugate() {
        return Err(Error::ShapeMismatch(format!("{} and {} are not conjugate", left.shape(), down.shape())));
    }
    if left.num_rows() != down.n() || left.n() != down.num_rows() {
        return Err(Error::ShapeMismatch("matrix dimensions disagree".into()));
    }
    // Columns of ρ←(B), bottom to top, are the columns of ρ_Q(B).
    let lc = rot_inv(left);
    let cols: Vec<Vec<usize>> = (1..=lc.n())
        .map(|c| (1..=lc.num_rows()).filter(|&r| lc.has_ball(r, c)).collect())
        .collect();
    let q = Tableau::from_columns(&cols)?;
    collapse_inverse(down, &q)
}

/// ρ↑ = ρ_N ∘ rot².
pub fn collapse_up_flip(n: &MultilineQueue) -> Result<MultilineQueue> {
    if !matches!(maj(n), Ok(0)) {
        return Err(Error::NotNonwrapping);
    }
    Ok(collapse_rho(&rot180(n)).queue)
}

/// σ ∘ ρ_N ∘ σ⁻¹ for σ = s_{i1} ⋯ s_{ik}. The word must carry the row sizes
/// of B to a weakly decreasing sequence.
pub fn collapse_sigma_down(b: &MultilineQueue, word: &[usize]) -> Result<MultilineQueue> {
    if word.iter().any(|&i| i == 0 || i >= b.num_rows()) {
        return Err(Error::BadSigmaWord(format!("{word:?}")));
    }
    let mut cur = b.clone();
    for &i in word {
        cur = sigma(&cur, i)?;
    }
    if !cur.is_straight() {
        return Err(Error::BadSigmaWord(format!("{word:?} does not sort {}", b.row_sizes())));
    }
    cur = collapse_rho(&cur).queue;
    for &i in word.iter().rev() {
        cur = sigma(&cur, i)?;
    }
    Ok(cur)
}
