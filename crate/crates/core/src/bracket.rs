//! Kauffman bracket state sum and the Jones polynomial.
//!
//! `<D> = sum over states s of A^(a(s) - b(s)) * delta^(|s| - 1)` with
//! `delta = -A^2 - A^-2`. The A-smoothing of `[a, b, c, d]` joins edges
//! `a, b` and `c, d`; the B-smoothing joins `a, d` and `b, c`.
//! The Jones polynomial is `(-A)^(-3w) <D>` read in `t = A^-4`.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Diagram, EdgeLabel};
use crate::graph::UnionFind;
use crate::laurent::{Coefficient, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error("expected {expected} smoothing choices, got {got}")]
    ChoiceLength { expected: usize, got: usize },
    #[error("brute-force state sum refused: {crossings} crossings exceeds the cap of {cap}")]
    BruteCap { crossings: usize, cap: usize },
    #[error("contraction boundary of {width} strands exceeds the cap of {cap}")]
    BoundaryCap { width: usize, cap: usize },
    #[error("normalized bracket has exponent {exponent}, not divisible by 4")]
    NonIntegralJones { exponent: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Smoothing {
    A,
    B,
}

/// The two edge pairs joined by smoothing `[a, b, c, d]`.
pub fn smoothing_arcs(x: [EdgeLabel; 4], s: Smoothing) -> [(EdgeLabel, EdgeLabel); 2] {
    let [a, b, c, d] = x;
    match s {
        Smoothing::A => [(a, b), (c, d)],
        Smoothing::B => [(a, d), (b, c)],
    }
}

/// A full assignment of smoothings together with its loop count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmoothingState {
    pub choices: Vec<Smoothing>,
    pub loop_count: usize,
    pub a_count: usize,
    pub b_count: usize,
}

impl SmoothingState {
    pub fn new(d: &Diagram, choices: Vec<Smoothing>) -> Result<Self, BracketError> {
        let loop_count = smooth_loops(d, &choices)?;
        let a_count = choices.iter().filter(|&&s| s == Smoothing::A).count();
        let b_count = choices.len() - a_count;
        Ok(SmoothingState { choices, loop_count, a_count, b_count })
    }

    pub fn uniform(d: &Diagram, s: Smoothing) -> Self {
        Self::new(d, vec![s; d.crossing_count()]).expect("length matches")
    }
}

/// Loops of a state: `loop_of[l - 1]` is the loop through edge `l`, with
/// loops numbered by their smallest edge label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopPartition {
    pub count: usize,
    pub loop_of: Vec<usize>,
}

pub fn loop_partition(d: &Diagram, choices: &[Smoothing]) -> Result<LoopPartition, BracketError> {
    let n = d.crossing_count();
    if choices.len() != n {
        return Err(BracketError::ChoiceLength { expected: n, got: choices.len() });
    }
    if n == 0 {
        return Ok(LoopPartition { count: 1, loop_of: Vec::new() });
    }
    let m = d.edge_count();
    let mut uf = UnionFind::new(m);
    for (x, &s) in d.crossings().iter().zip(choices) {
        for (p, q) in smoothing_arcs(*x, s) {
            uf.union(p as usize - 1, q as usize - 1);
        }
    }
    let mut ids = vec![usize::MAX; m];
    let mut loop_of = Vec::with_capacity(m);
    let mut count = 0;
    for l in 0..m {
        let r = uf.find(l);
        if ids[r] == usize::MAX {
            ids[r] = count;
            count += 1;
        }
        loop_of.push(ids[r]);
    }
    Ok(LoopPartition { count, loop_of })
}

/// Number of circles after smoothing every crossing as chosen.
pub fn smooth_loops(d: &Diagram, choices: &[Smoothing]) -> Result<usize, BracketError> {
    Ok(loop_partition(d, choices)?.count)
}

/// The loop factor `-A^2 - A^-2`.
pub fn delta<C: Coefficient>() -> LaurentPoly<C> {
    LaurentPoly::from_terms([(2, -C::one()), (-2, -C::one())])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Engine {
    Brute,
    Contract,
    #[default]
    Auto,
}

impl std::str::FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Engine::Brute),
            "contract" => Ok(Engine::Contract),
            "auto" => Ok(Engine::Auto),
            other => Err(format!("unknown engine {other:?} (expected brute, contract or auto)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BracketConfig {
    pub engine: Engine,
    /// Largest crossing count the brute-force sum will attempt.
    pub brute_cap: usize,
    /// `Auto` uses brute force up to this many crossings.
    pub auto_threshold: usize,
    /// Largest number of open strands the contraction table may carry.
    pub max_boundary: usize,
}

impl Default for BracketConfig {
    fn default() -> Self {
        BracketConfig { engine: Engine::Auto, brute_cap: 20, auto_threshold: 14, max_boundary: 40 }
    }
}

impl BracketConfig {
    pub fn with_engine(engine: Engine) -> Self {
        BracketConfig { engine, ..Self::default() }
    }
}

/// Bracket polynomial in `A` using the configured engine.
pub fn bracket<C: Coefficient>(d: &Diagram, cfg: &BracketConfig) -> Result<LaurentPoly<C>, BracketError> {
    match cfg.engine {
        Engine::Brute => bracket_brute(d, cfg.brute_cap),
        Engine::Contract => bracket_contract(d, cfg.max_boundary),
        Engine::Auto if d.crossing_count() <= cfg.auto_threshold => bracket_brute(d, cfg.brute_cap),
        Engine::Auto => bracket_contract(d, cfg.max_boundary),
    }
}

/// Sums all `2^n` states. States are split into ranges evaluated in
/// parallel; each range only records how many states share a given
/// `(a_count, loops)` pair, so the polynomial work is done once at the end.
pub fn bracket_brute<C: Coefficient>(d: &Diagram, cap: usize) -> Result<LaurentPoly<C>, BracketError> {
    let n = d.crossing_count();
    if n > cap || n >= 63 {
        return Err(BracketError::BruteCap { crossings: n, cap });
    }
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let m = d.edge_count();
    let arcs: Vec<[[(usize, usize); 2]; 2]> = d
        .crossings()
        .iter()
        .map(|x| {
            [Smoothing::A, Smoothing::B].map(|s| smoothing_arcs(*x, s).map(|(p, q)| (p as usize - 1, q as usize - 1)))
        })
        .collect();
    let width = m + 2;
    let total: u64 = 1 << n;
    let chunk: u64 = 1 << n.min(12);
    let hist = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut h = vec![0u64; (n + 1) * width];
            let mut uf = UnionFind::new(m);
            for bits in c * chunk..((c + 1) * chunk).min(total) {
                uf.reset();
                for (k, pair) in arcs.iter().enumerate() {
                    for &(p, q) in &pair[(bits >> k & 1) as usize] {
                        uf.union(p, q);
                    }
                }
                let b = bits.count_ones() as usize;
                h[(n - b) * width + uf.count()] += 1;
            }
            h
        })
        .reduce(
            || vec![0u64; (n + 1) * width],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(p, q)| *p += q);
                x
            },
        );

    let dl = delta::<C>();
    let mut powers = vec![LaurentPoly::<C>::one()];
    for _ in 1..width {
        let next = powers.last().unwrap() * &dl;
        powers.push(next);
    }
    let mut sum = LaurentPoly::zero();
    for a in 0..=n {
        for loops in 1..width {
            let count = hist[a * width + loops];
            if count > 0 {
                let c = C::from_u64(count).expect("state count fits the coefficient type");
                sum += &powers[loops - 1].mono_mul(&c, 2 * a as i64 - n as i64);
            }
        }
    }
    Ok(sum)
}

/// Crossing order for contraction: repeatedly take the crossing that
/// opens the fewest new strands, preferring crossings touching the current
/// boundary, then the lowest index.
pub fn contraction_order(d: &Diagram) -> Vec<usize> {
    let n = d.crossing_count();
    let mut seen = vec![0u8; d.edge_count() + 1];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(i64, bool, usize)> = None;
        for k in (0..n).filter(|&k| !done[k]) {
            let mut growth = 0i64;
            let mut touches = false;
            let x = d.crossings()[k];
            for (i, l) in x.iter().enumerate() {
                let before = seen[*l as usize] + x[..i].iter().filter(|&m| m == l).count() as u8;
                if seen[*l as usize] == 1 {
                    touches = true;
                }
                growth += if before == 0 { 1 } else { -1 };
            }
            let key = (growth, !touches, k);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let k = best.unwrap().2;
        done[k] = true;
        for l in d.crossings()[k] {
            seen[l as usize] += 1;
        }
        order.push(k);
    }
    order
}

/// Open strands: sorted pairs of boundary edge labels joined by a path.
type Matching = Vec<(EdgeLabel, EdgeLabel)>;

fn take_partner(pairs: &mut Matching, l: EdgeLabel) -> EdgeLabel {
    let i = pairs.iter().position(|&(p, q)| p == l || q == l).expect("open edge is matched");
    let (p, q) = pairs.swap_remove(i);
    if p == l {
        q
    } else {
        p
    }
}

/// Bracket by crossing-at-a-time contraction. The table maps a matching of
/// the open boundary edges (plus whether a loop has already closed) to the
/// summed weight of all partial states producing it.
pub fn bracket_contract<C: Coefficient>(d: &Diagram, max_boundary: usize) -> Result<LaurentPoly<C>, BracketError> {
    if d.crossing_count() == 0 {
        return Ok(LaurentPoly::one());
    }
    let dl = delta::<C>();
    let one = C::one();
    let mut seen = vec![0u8; d.edge_count() + 1];
    let mut table: HashMap<(Matching, bool), LaurentPoly<C>> = HashMap::new();
    table.insert((Vec::new(), false), LaurentPoly::one());

    for k in contraction_order(d) {
        let x = d.crossings()[k];
        let mut next: HashMap<(Matching, bool), LaurentPoly<C>> = HashMap::with_capacity(table.len() * 2);
        for (s, shift) in [(Smoothing::A, 1), (Smoothing::B, -1)] {
            // (edge, its other end already processed) for both ends of each arc
            let mut local = seen.clone();
            let plan: Vec<[(EdgeLabel, bool); 2]> = smoothing_arcs(x, s)
                .iter()
                .map(|&(p, q)| {
                    [p, q].map(|l| {
                        let open = local[l as usize] == 1;
                        local[l as usize] += 1;
                        (l, open)
                    })
                })
                .collect();
            for ((pairs, closed), w) in &table {
                let mut pairs = pairs.clone();
                let mut loops = 0usize;
                for &[(p, p_open), (q, q_open)] in &plan {
                    if p == q {
                        loops += 1;
                        continue;
                    }
                    let p_end = if p_open { take_partner(&mut pairs, p) } else { p };
                    if p_open && p_end == q {
                        loops += 1;
                        continue;
                    }
                    let q_end = if q_open { take_partner(&mut pairs, q) } else { q };
                    pairs.push((p_end.min(q_end), p_end.max(q_end)));
                }
                pairs.sort_unstable();
                let factors = if *closed { loops } else { loops.saturating_sub(1) };
                let mut weight = w.mono_mul(&one, shift);
                for _ in 0..factors {
                    weight = &weight * &dl;
                }
                let entry = next.entry((pairs, *closed || loops > 0)).or_insert_with(LaurentPoly::zero);
                *entry += &weight;
            }
        }
        for l in x {
            seen[l as usize] += 1;
        }
        let width = seen.iter().filter(|&&c| c == 1).count();
        if width > max_boundary {
            return Err(BracketError::BoundaryCap { width, cap: max_boundary });
        }
        next.retain(|_, w| !w.is_zero());
        table = next;
    }
    Ok(table.remove(&(Vec::new(), true)).unwrap_or_else(LaurentPoly::zero))
}

/// Converts a bracket into the Jones polynomial in `t`.
pub fn jones_from_bracket<C: Coefficient>(br: &LaurentPoly<C>, writhe: i64) -> Result<LaurentPoly<C>, BracketError> {
    let sign = if writhe % 2 == 0 { C::one() } else { -C::one() };
    let normalized = br.mono_mul(&sign, -3 * writhe);
    if let Some((exponent, _)) = normalized.terms().find(|(e, _)| e % 4 != 0) {
        return Err(BracketError::NonIntegralJones { exponent });
    }
    Ok(normalized.map_exponents(|e| Some(-e / 4)).expect("exponents checked"))
}

/// Jones polynomial with the configured engine.
pub fn jones_with<C: Coefficient>(d: &Diagram, cfg: &BracketConfig) -> Result<LaurentPoly<C>, BracketError> {
    jones_from_bracket(&bracket::<C>(d, cfg)?, d.writhe())
}

/// Jones polynomial with exact integer coefficients and the default engine.
pub fn jones(d: &Diagram) -> LaurentPoly<num_bigint::BigInt> {
    jones_with(d, &BracketConfig::default()).expect("default engine handles every valid knot diagram")
}
