//! Brute-force reference implementations used by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use gs_core::words::words_of_degree;
use gs_core::{Overlap, OverlapKind, Word};

/// Intersections and inclusions of `u` with `v`, found by trying every
/// split, in the engine's listing order.
pub fn brute_overlaps(u: &Word, v: &Word) -> (Vec<Overlap>, Vec<Overlap>) {
    let (us, vs) = (u.letters(), v.letters());
    let mut inter = Vec::new();
    for k in (1..us.len().min(vs.len())).rev() {
        // suffix of u of length k equals prefix of v of length k
        if us[us.len() - k..] == vs[..k] {
            let a = Word::new(us[..us.len() - k].to_vec());
            let b = Word::new(vs[k..].to_vec());
            let w = a.concat(v);
            inter.push(Overlap { kind: OverlapKind::Intersection, a, b, w });
        }
    }
    let mut incl = Vec::new();
    if vs.len() <= us.len() {
        for start in 0..=us.len() - vs.len() {
            if us[start..start + vs.len()] == *vs {
                incl.push(Overlap {
                    kind: OverlapKind::Inclusion,
                    a: Word::new(us[..start].to_vec()),
                    b: Word::new(us[start + vs.len()..].to_vec()),
                    w: u.clone(),
                });
            }
        }
    }
    (inter, incl)
}

/// Rotation test: `u` is strictly greater (deg-lex within a fixed length
/// is plain lex) than every proper rotation.
pub fn alsw_by_rotation(u: &Word) -> bool {
    !u.is_empty() && (1..u.len()).all(|k| u.rotate(k) < *u)
}

/// Partition of all words of length `len` into classes of the congruence
/// generated by length-preserving word relations, via union-find over
/// single relation applications in both directions.
pub fn closure_classes(letters: usize, relations: &[(Word, Word)], len: usize) -> Vec<usize> {
    let words = words_of_degree(letters, len);
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for (i, w) in words.iter().enumerate() {
        for (u, v) in relations {
            for (from, to) in [(u, v), (v, u)] {
                if from.len() != to.len() || from.len() > w.len() {
                    continue;
                }
                for pos in 0..=w.len() - from.len() {
                    if w.letters()[pos..pos + from.len()] == *from.letters() {
                        let image = w.splice(pos, from.len(), to);
                        let j = index[&image];
                        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                        parent[ri] = rj;
                    }
                }
            }
        }
    }
    (0..words.len()).map(|i| find(&mut parent, i)).collect()
}

/// Whether two labelings of the same index set induce the same partition.
pub fn same_partition<A: Eq + std::hash::Hash + Clone, B: Eq + std::hash::Hash + Clone>(x: &[A], y: &[B]) -> bool {
    let mut fwd: HashMap<A, B> = HashMap::new();
    let mut back: HashMap<B, A> = HashMap::new();
    x.len() == y.len()
        && x.iter().zip(y).all(|(a, b)| {
            fwd.entry(a.clone()).or_insert_with(|| b.clone()) == b
                && back.entry(b.clone()).or_insert_with(|| a.clone()) == a
        })
}
