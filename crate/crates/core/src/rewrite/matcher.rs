//! Multi-pattern subword matching over leading words (Aho–Corasick).

use crate::words::{Letter, Word};

#[derive(Clone, Debug)]
struct State {
    next: Vec<u32>,
    fail: u32,
    /// Patterns ending at this state, including those inherited through
    /// failure links.
    out: Vec<usize>,
}

/// Finds occurrences of a fixed set of patterns inside words.
#[derive(Clone, Debug)]
pub(crate) struct Matcher {
    letters: usize,
    states: Vec<State>,
    lens: Vec<usize>,
    max_len: usize,
    /// Patterns equal to the empty word; they occur everywhere.
    empty: Vec<usize>,
}

pub(crate) type StateId = u32;

const ROOT: StateId = 0;

impl Matcher {
    pub fn new(letters: usize, patterns: &[&Word]) -> Self {
        let fresh = |letters| State { next: vec![u32::MAX; letters], fail: ROOT, out: Vec::new() };
        let mut states = vec![fresh(letters)];
        let mut empty = Vec::new();
        for (idx, p) in patterns.iter().enumerate() {
            if p.is_empty() {
                empty.push(idx);
                continue;
            }
            let mut s = ROOT as usize;
            for &l in p.letters() {
                let l = l as usize;
                if states[s].next[l] == u32::MAX {
                    states.push(fresh(letters));
                    let id = (states.len() - 1) as u32;
                    states[s].next[l] = id;
                }
                s = states[s].next[l] as usize;
            }
            states[s].out.push(idx);
        }

        // Breadth-first construction of failure links and the full
        // transition function.
        let mut queue = std::collections::VecDeque::new();
        for l in 0..letters {
            let t = states[0].next[l];
            if t == u32::MAX {
                states[0].next[l] = ROOT;
            } else {
                states[t as usize].fail = ROOT;
                queue.push_back(t);
            }
        }
        while let Some(s) = queue.pop_front() {
            let s = s as usize;
            let inherited = states[states[s].fail as usize].out.clone();
            states[s].out.extend(inherited);
            for l in 0..letters {
                let t = states[s].next[l];
                let via_fail = states[states[s].fail as usize].next[l];
                if t == u32::MAX {
                    states[s].next[l] = via_fail;
                } else {
                    states[t as usize].fail = via_fail;
                    queue.push_back(t);
                }
            }
        }

        Matcher {
            letters,
            states,
            lens: patterns.iter().map(|p| p.len()).collect(),
            max_len: patterns.iter().map(|p| p.len()).max().unwrap_or(0),
            empty,
        }
    }

    pub fn start(&self) -> StateId {
        ROOT
    }

    pub fn step(&self, s: StateId, l: Letter) -> StateId {
        debug_assert!((l as usize) < self.letters);
        self.states[s as usize].next[l as usize]
    }

    /// Whether some pattern ends at state `s` (or the empty pattern exists).
    pub fn accepting(&self, s: StateId) -> bool {
        !self.empty.is_empty() || !self.states[s as usize].out.is_empty()
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    /// Leftmost occurrence; ties broken by lowest pattern index.
    /// Returns `(start, pattern)`.
    pub fn leftmost(&self, w: &Word) -> Option<(usize, usize)> {
        if let Some(&p) = self.empty.first() {
            return Some((0, p));
        }
        let mut best: Option<(usize, usize)> = None;
        let mut s = ROOT;
        for (i, &l) in w.letters().iter().enumerate() {
            if let Some((start, _)) = best {
                // any later match starts after `start`
                if i + 1 > start + self.max_len {
                    break;
                }
            }
            s = self.step(s, l);
            for &p in &self.states[s as usize].out {
                let start = i + 1 - self.lens[p];
                if best.is_none_or(|b| (start, p) < b) {
                    best = Some((start, p));
                }
            }
        }
        best
    }

    /// Every occurrence `(start, pattern)`, sorted.
    pub fn all_matches(&self, w: &Word) -> Vec<(usize, usize)> {
        let mut found = Vec::new();
        for &p in &self.empty {
            found.extend((0..=w.len()).map(|i| (i, p)));
        }
        let mut s = ROOT;
        for (i, &l) in w.letters().iter().enumerate() {
            s = self.step(s, l);
            for &p in &self.states[s as usize].out {
                found.push((i + 1 - self.lens[p], p));
            }
        }
        found.sort_unstable();
        found
    }
}
