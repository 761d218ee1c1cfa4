//! Bracketing of letters `i+1` (open) against letters `i` (close), classical
//! and cylindrical, and the word operators built on it.

use crate::base::Word;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MatchData {
    pub positions_of_i: Vec<usize>,
    pub positions_of_i_plus_1: Vec<usize>,
    /// (open, close) pairs, including wrapping pairs in cyclic mode.
    pub matched_pairs: Vec<(usize, usize)>,
    pub unmatched_opens: Vec<usize>,
    pub unmatched_closes: Vec<usize>,
    pub cyclic: bool,
    /// Pairs matched only by going around the cylinder; open lies right of close.
    pub wrapping_pairs: Vec<(usize, usize)>,
}

impl MatchData {
    pub fn is_matched(&self, pos: usize) -> bool {
        !self.unmatched_opens.contains(&pos) && !self.unmatched_closes.contains(&pos)
    }
}

/// Matches opens against closes given as a sequence of `Some(true)` (open),
/// `Some(false)` (close) and `None` (ignored). Positions are 1-based.
pub fn bracket(marks: &[Option<bool>], cyclic: bool) -> MatchData {
    let mut md = MatchData { cyclic, ..Default::default() };
    let mut stack = Vec::new();
    let mut closes = Vec::new();
    for (k, m) in marks.iter().enumerate() {
        let pos = k + 1;
        match m {
            Some(true) => {
                md.positions_of_i_plus_1.push(pos);
                stack.push(pos);
            }
            Some(false) => {
                md.positions_of_i.push(pos);
                match stack.pop() {
                    Some(o) => md.matched_pairs.push((o, pos)),
                    None => closes.push(pos),
                }
            }
            None => {}
        }
    }
    let mut opens = stack;
    if cyclic {
        let w = opens.len().min(closes.len());
        for _ in 0..w {
            let o = opens.pop().unwrap();
            let c = closes.remove(0);
            md.wrapping_pairs.push((o, c));
            md.matched_pairs.push((o, c));
        }
    }
    md.unmatched_opens = opens;
    md.unmatched_closes = closes;
    md
}

fn marks_for(w: &[usize], i: usize) -> Vec<Option<bool>> {
    w.iter()
        .map(|&a| {
            if a == i + 1 {
                Some(true)
            } else if a == i {
                Some(false)
            } else {
                None
            }
        })
        .collect()
}

pub fn par_match_letters(w: &[usize], i: usize, cyclic: bool) -> MatchData {
    bracket(&marks_for(w, i), cyclic)
}

pub fn par_match(w: &Word, i: usize, cyclic: bool) -> MatchData {
    par_match_letters(w.letters(), i, cyclic)
}

pub fn e_letters(w: &[usize], i: usize) -> Vec<usize> {
    let md = par_match_letters(w, i, false);
    let mut v = w.to_vec();
    if let Some(&p) = md.unmatched_opens.first() {
        v[p - 1] = i;
    }
    v
}

pub fn f_letters(w: &[usize], i: usize) -> Vec<usize> {
    let md = par_match_letters(w, i, false);
    let mut v = w.to_vec();
    if let Some(&p) = md.unmatched_closes.last() {
        v[p - 1] = i + 1;
    }
    v
}

pub fn e_star_letters(w: &[usize], i: usize) -> Vec<usize> {
    let md = par_match_letters(w, i, false);
    let mut v = w.to_vec();
    for &p in &md.unmatched_opens {
        v[p - 1] = i;
    }
    v
}

pub fn s_letters(w: &[usize], i: usize) -> Vec<usize> {
    let md = par_match_letters(w, i, true);
    let mut v = w.to_vec();
    for &p in &md.unmatched_opens {
        v[p - 1] = i;
    }
    for &p in &md.unmatched_closes {
        v[p - 1] = i + 1;
    }
    v
}

fn wrap(v: Vec<usize>) -> Word {
    Word::new(v).expect("operators keep letters positive")
}

pub fn op_e(w: &Word, i: usize) -> Word {
    wrap(e_letters(w.letters(), i))
}

pub fn op_f(w: &Word, i: usize) -> Word {
    wrap(f_letters(w.letters(), i))
}

pub fn op_e_star(w: &Word, i: usize) -> Word {
    wrap(e_star_letters(w.letters(), i))
}

pub fn op_s(w: &Word, i: usize) -> Word {
    wrap(s_letters(w.letters(), i))
}
