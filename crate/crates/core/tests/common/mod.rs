#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use tait_core::checker::{ingest, TableEntry};
use tait_core::{Diagram, Poly};

pub const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
pub const FIGURE8: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

pub fn data_path(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(file)
}

pub fn fixture_path(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(file)
}

pub fn table(file: &str) -> Vec<TableEntry> {
    let t = ingest(&data_path(file)).unwrap();
    assert!(t.errors.is_empty(), "{file}: {:?}", t.errors);
    t.entries
}

pub fn alternating() -> Vec<TableEntry> {
    table("alternating_upto9.jsonl")
}

pub fn nonalternating() -> Vec<TableEntry> {
    table("nonalternating_upto10.jsonl")
}

pub fn synthetic() -> Vec<TableEntry> {
    table("synthetic_semiadequate.jsonl")
}

pub fn all_corpus() -> Vec<TableEntry> {
    let mut v = alternating();
    v.extend(nonalternating());
    v.extend(synthetic());
    v
}

pub fn pd(s: &str) -> Diagram {
    s.parse().unwrap()
}

/// Sparse integer polynomial used by the oracle: exponent -> coefficient.
pub type Sparse = BTreeMap<i64, i128>;

fn add(p: &mut Sparse, e: i64, c: i128) {
    let v = p.entry(e).or_insert(0);
    *v += c;
    if *v == 0 {
        p.remove(&e);
    }
}

fn mul(p: &Sparse, q: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (a, x) in p {
        for (b, y) in q {
            add(&mut out, a + b, x * y);
        }
    }
    out
}

/// Loops after smoothing, counted by walking arcs (no union-find).
fn loops(xs: &[[u32; 4]], mask: u64) -> usize {
    let m = 2 * xs.len();
    if m == 0 {
        return 1;
    }
    // each edge label has two ends; link ends through the smoothing arcs
    let mut partner: Vec<Vec<usize>> = vec![Vec::new(); m + 1];
    for (k, x) in xs.iter().enumerate() {
        let [a, b, c, d] = x.map(|v| v as usize);
        let pairs = if mask >> k & 1 == 0 { [(a, b), (c, d)] } else { [(a, d), (b, c)] };
        for (p, q) in pairs {
            partner[p].push(q);
            partner[q].push(p);
        }
    }
    let mut seen = vec![false; m + 1];
    let mut count = 0;
    for start in 1..=m {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(e) = stack.pop() {
            for &f in &partner[e] {
                if !seen[f] {
                    seen[f] = true;
                    stack.push(f);
                }
            }
        }
    }
    count
}

/// Kauffman bracket by direct enumeration of all `2^n` states.
pub fn oracle_bracket(xs: &[[u32; 4]]) -> Sparse {
    let n = xs.len();
    assert!(n <= 20, "oracle is for small diagrams");
    let delta: Sparse = [(2, -1), (-2, -1)].into_iter().collect();
    let mut by_state: BTreeMap<(i64, usize), i128> = BTreeMap::new();
    for mask in 0u64..1 << n {
        let b = mask.count_ones() as i64;
        *by_state.entry((n as i64 - 2 * b, loops(xs, mask))).or_default() += 1;
    }
    let mut out = Sparse::new();
    for ((e, l), count) in by_state {
        let mut term: Sparse = [(e, count)].into_iter().collect();
        for _ in 1..l {
            term = mul(&term, &delta);
        }
        for (k, v) in term {
            add(&mut out, k, v);
        }
    }
    out
}

pub fn oracle_writhe(xs: &[[u32; 4]]) -> i64 {
    let m = 2 * xs.len() as u32;
    let succ = |v: u32| v % m + 1;
    xs.iter().map(|&[a, b, _, d]| if b == succ(d) && (xs.len() > 1 || d != a) { 1 } else { -1 }).sum()
}

/// Jones polynomial in `t` from the oracle bracket.
pub fn oracle_jones(xs: &[[u32; 4]]) -> Sparse {
    let w = oracle_writhe(xs);
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let mut out = Sparse::new();
    for (e, c) in oracle_bracket(xs) {
        let a = e - 3 * w;
        assert_eq!(a % 4, 0);
        add(&mut out, -a / 4, sign * c);
    }
    out
}

pub fn to_poly(p: &Sparse) -> Poly {
    Poly::from_terms(p.iter().map(|(&e, &c)| (e, c.into())))
}

/// Reads KnotInfo's polynomial notation (`t^(-2)-t^(-1)+ 1-t+ t^2`).
pub fn parse_knotinfo(s: &str) -> Poly {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace() && *c != '(' && *c != ')').collect();
    Poly::parse(&cleaned, 't').unwrap_or_else(|e| panic!("{s:?}: {e}"))
}
