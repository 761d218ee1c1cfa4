//! Charge and cocharge of permutations and words.

use crate::base::{content_of, Composition, Partition, Word};
use crate::error::{Error, Result};
use crate::matching::s_letters;

pub fn charge_perm(perm: &Word) -> Result<usize> {
    charge_perm_letters(perm.letters())
}

pub(crate) fn charge_perm_letters(p: &[usize]) -> Result<usize> {
    let n = p.len();
    let mut pos = vec![0usize; n + 1];
    for (k, &a) in p.iter().enumerate() {
        if a == 0 || a > n || pos[a] != 0 {
            return Err(Error::NotAPermutation(format!("{p:?}")));
        }
        pos[a] = k + 1;
    }
    Ok((1..n).filter(|&i| pos[i] < pos[i + 1]).map(|i| n - i).sum())
}

fn partition_content(w: &[usize]) -> Result<Partition> {
    let c = content_of(w);
    if !c.is_partition() || c.parts().contains(&0) {
        return Err(Error::NonPartitionContent(c.to_string()));
    }
    Partition::new(c.0)
}

/// Charge subwords: repeatedly take the first occurrence of the largest
/// remaining letter, then cyclically the next smaller letter, down to 1.
pub fn extract_charge_subwords(w: &Word) -> Result<Vec<Word>> {
    Ok(subword_positions(w.letters())?
        .into_iter()
        .map(|ps| Word::new(ps.iter().map(|&p| w.letters()[p]).collect()).unwrap())
        .collect())
}

fn subword_positions(w: &[usize]) -> Result<Vec<Vec<usize>>> {
    partition_content(w)?;
    let n = w.len();
    let mut used = vec![false; n];
    let mut left = n;
    let mut out = Vec::new();
    while left > 0 {
        let k = (0..n).filter(|&p| !used[p]).map(|p| w[p]).max().unwrap();
        let mut cur = (0..n).find(|&p| !used[p] && w[p] == k).unwrap();
        let mut picked = vec![cur];
        for letter in (1..k).rev() {
            let mut p = (cur + 1) % n;
            while used[p] || w[p] != letter {
                p = (p + 1) % n;
            }
            picked.push(p);
            cur = p;
        }
        for &p in &picked {
            used[p] = true;
        }
        left -= picked.len();
        picked.sort_unstable();
        out.push(picked);
    }
    Ok(out)
}

pub fn charge_word(w: &Word) -> Result<usize> {
    charge_letters(w.letters())
}

pub(crate) fn charge_letters(w: &[usize]) -> Result<usize> {
    let mut total = 0;
    for ps in subword_positions(w)? {
        let sub: Vec<usize> = ps.iter().map(|&p| w[p]).collect();
        total += charge_perm_letters(&sub)?;
    }
    Ok(total)
}

pub fn cocharge_word(w: &Word) -> Result<usize> {
    let mu = partition_content(w.letters())?;
    Ok(mu.n_stat() - charge_word(w)?)
}

/// Charge through cylindrical and classical bracketing, level by level.
pub fn charge_via_operators(w: &Word) -> Result<usize> {
    let w = w.letters();
    partition_content(w)?;
    let top = w.iter().copied().max().unwrap_or(0);
    let mut remaining: Vec<bool> = vec![true; w.len()];
    let mut total = 0;
    for r in (1..=top).rev() {
        let mut chosen: Vec<usize> = (0..w.len()).filter(|&p| remaining[p] && w[p] == r).collect();
        let mut all_chosen = chosen.clone();
        for k in (1..r).rev() {
            let marks: Vec<Option<bool>> = (0..w.len())
                .map(|p| {
                    if chosen.contains(&p) {
                        Some(true)
                    } else if remaining[p] && w[p] == k {
                        Some(false)
                    } else {
                        None
                    }
                })
                .collect();
            let cyc = crate::matching::bracket(&marks, true);
            let classical = crate::matching::bracket(&marks, false);
            let next: Vec<usize> = cyc.matched_pairs.iter().map(|&(_, c)| c - 1).collect();
            let a = next.iter().filter(|&&p| classical.unmatched_closes.contains(&(p + 1))).count();
            total += a * (r - k);
            chosen = next;
            all_chosen.extend(chosen.iter().copied());
        }
        for p in all_chosen {
            remaining[p] = false;
        }
    }
    Ok(total)
}

/// Straightens the content with reflections (moving the largest part left by
/// a stable selection sort) and takes the charge of the result.
pub fn charge_generalized(w: &Word) -> usize {
    let word = straighten(w.letters(), &sorting_word(&content_of(w.letters())));
    charge_letters(&word).expect("straightened word has partition content")
}

/// Reflection indices, in application order, sorting `alpha` to a partition.
pub fn sorting_word(alpha: &Composition) -> Vec<usize> {
    let mut a = alpha.0.clone();
    let mut seq = Vec::new();
    for target in 0..a.len() {
        let best = (target..a.len()).fold(target, |b, j| if a[j] > a[b] { j } else { b });
        for j in (target..best).rev() {
            if a[j] != a[j + 1] {
                seq.push(j + 1);
            }
            a.swap(j, j + 1);
        }
    }
    seq
}

pub fn straighten(w: &[usize], seq: &[usize]) -> Vec<usize> {
    seq.iter().fold(w.to_vec(), |v, &i| s_letters(&v, i))
}

/// Generalized charge along an explicit reflection sequence; the sequence must
/// sort the content to a partition.
pub fn charge_generalized_along(w: &Word, seq: &[usize]) -> Result<usize> {
    let v = straighten(w.letters(), seq);
    charge_letters(&v)
}
