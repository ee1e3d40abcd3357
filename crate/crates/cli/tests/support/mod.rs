//! Independent reference computations for the acceptance and CLI tests.
#![allow(dead_code)]

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gs_core::words::words_of_degree;
use gs_core::Word;

pub fn gsb() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gsb"))
}

pub fn run(args: &[&str]) -> Output {
    gsb().args(args).output().expect("gsb runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

pub fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).expect("writable temp dir");
    path
}

/// Strictly greater than every proper rotation.
pub fn alsw_by_rotation(u: &[u32]) -> bool {
    let n = u.len();
    n > 0
        && (1..n).all(|k| {
            let rotated: Vec<u32> = u[k..].iter().chain(&u[..k]).copied().collect();
            rotated.as_slice() < u
        })
}

/// Lexicographic order with a proper prefix counted as greater.
pub fn prefix_greater_le(u: &[u32], v: &[u32]) -> bool {
    for (a, b) in u.iter().zip(v) {
        if a != b {
            return a < b;
        }
    }
    u.len() >= v.len()
}

/// Every factorization of `u` into rotation-maximal factors that is
/// non-decreasing under [`prefix_greater_le`].
pub fn monotone_factorizations(u: &[u32]) -> Vec<Vec<Vec<u32>>> {
    fn go(rest: &[u32], prev: Option<&[u32]>, acc: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for k in 1..=rest.len() {
            let f = &rest[..k];
            if !alsw_by_rotation(f) || prev.is_some_and(|p| !prefix_greater_le(p, f)) {
                continue;
            }
            acc.push(f.to_vec());
            go(&rest[k..], Some(f), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(u, None, &mut Vec::new(), &mut out);
    out
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of aperiodic necklaces (Lyndon words) of length `d` over `k`
/// letters.
pub fn necklaces(k: u64, d: u64) -> u64 {
    let total: i64 = (1..=d).filter(|e| d.is_multiple_of(*e)).map(|e| mobius(e) * (k.pow((d / e) as u32) as i64)).sum();
    (total / d as i64) as u64
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Dense antisymmetric bracket over the integers: `table[i][j]` is the
/// coefficient vector of `[x_i, x_j]`.
pub type Table = Vec<Vec<Vec<i64>>>;

fn bracket_vec(t: &Table, u: &[i64], v: &[i64]) -> Vec<i64> {
    let n = t.len();
    let mut out = vec![0; n];
    for i in 0..n {
        for j in 0..n {
            let c = u[i] * v[j];
            if c != 0 {
                for (o, x) in out.iter_mut().zip(&t[i][j]) {
                    *o += c * x;
                }
            }
        }
    }
    out
}

/// Whether `[a,[b,c]] + [b,[c,a]] + [c,[a,b]]` vanishes for all basis
/// triples.
pub fn jacobi_holds(t: &Table) -> bool {
    let n = t.len();
    let e = |i: usize| (0..n).map(|k| i64::from(k == i)).collect::<Vec<_>>();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (x, y, z) = (e(a), e(b), e(c));
                let j1 = bracket_vec(t, &x, &bracket_vec(t, &y, &z));
                let j2 = bracket_vec(t, &y, &bracket_vec(t, &z, &x));
                let j3 = bracket_vec(t, &z, &bracket_vec(t, &x, &y));
                if (0..n).any(|k| j1[k] + j2[k] + j3[k] != 0) {
                    return false;
                }
            }
        }
    }
    true
}

/// Partition of the words of length `len` by the congruence generated by
/// the given length-preserving relations (union-find over single
/// applications in both directions).
pub fn closure_classes(letters: usize, relations: &[(Word, Word)], len: usize) -> Vec<usize> {
    let words = words_of_degree(letters, len);
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, w) in words.iter().enumerate() {
        for (u, v) in relations {
            for (from, to) in [(u, v), (v, u)] {
                assert_eq!(from.len(), to.len(), "closure oracle needs length-preserving relations");
                if from.len() > w.len() {
                    continue;
                }
                for pos in 0..=w.len() - from.len() {
                    if w.letters()[pos..pos + from.len()] == *from.letters() {
                        let j = index[&w.splice(pos, from.len(), to)];
                        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                        parent[ri] = rj;
                    }
                }
            }
        }
    }
    (0..words.len()).map(|i| find(&mut parent, i)).collect()
}

/// Whether two labelings of the same items induce the same partition.
pub fn same_partition<A: Eq + std::hash::Hash + Clone, B: Eq + std::hash::Hash + Clone>(x: &[A], y: &[B]) -> bool {
    let mut fwd: HashMap<A, B> = HashMap::new();
    let mut back: HashMap<B, A> = HashMap::new();
    x.len() == y.len()
        && x.iter().zip(y).all(|(a, b)| {
            fwd.entry(a.clone()).or_insert_with(|| b.clone()) == b
                && back.entry(b.clone()).or_insert_with(|| a.clone()) == a
        })
}
