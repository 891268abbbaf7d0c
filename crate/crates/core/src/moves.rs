//! Reidemeister moves and flypes as surgery on PD codes.
//!
//! Every move edits an unoriented copy of the crossing list, re-walks the
//! strand to relabel edges and returns the canonical form of the result, so
//! diagrams produced by different move sequences compare structurally.

use std::collections::HashSet;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Diagram, DiagramError, EdgeLabel, RawDiagram, Slot};
use crate::graph::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("move site {0} does not match the diagram")]
    InvalidSite(String),
    #[error("move produced an invalid diagram: {0}")]
    Diagram(#[from] DiagramError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    #[serde(rename = "R1+")]
    R1Add,
    #[serde(rename = "R1-")]
    R1Remove,
    #[serde(rename = "R2+")]
    R2Add,
    #[serde(rename = "R2-")]
    R2Remove,
    #[serde(rename = "R3")]
    R3,
    #[serde(rename = "FLYPE")]
    Flype,
}

impl MoveKind {
    /// The Reidemeister moves; flypes are only searched for on request.
    pub const REIDEMEISTER: [MoveKind; 5] =
        [MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3];

    /// Change in crossing count.
    pub fn crossing_delta(self) -> i64 {
        match self {
            MoveKind::R1Add => 1,
            MoveKind::R1Remove => -1,
            MoveKind::R2Add => 2,
            MoveKind::R2Remove => -2,
            MoveKind::R3 | MoveKind::Flype => 0,
        }
    }
}

impl std::str::FromStr for MoveKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "R1+" => Ok(MoveKind::R1Add),
            "R1-" => Ok(MoveKind::R1Remove),
            "R2+" => Ok(MoveKind::R2Add),
            "R2-" => Ok(MoveKind::R2Remove),
            "R3" => Ok(MoveKind::R3),
            "FLYPE" => Ok(MoveKind::Flype),
            _ => Err(format!("unknown move kind {s:?}")),
        }
    }
}

/// A flype: pivot crossing `pivot` sits left of the tangle `tangle`. Going
/// counterclockwise from slot `side` the pivot's slots face the tangle's
/// north-west edge, the outside above, the outside below, and the tangle's
/// south-west edge. `ne` and `se` are the tangle's other two boundary edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlypeSite {
    pub pivot: usize,
    pub side: u8,
    pub nw: EdgeLabel,
    pub ne: EdgeLabel,
    pub sw: EdgeLabel,
    pub se: EdgeLabel,
    pub tangle: Vec<usize>,
}

/// Where a move applies. Face indices refer to [`Diagram::faces`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum MoveSite {
    /// Kink on `edge` (0 on the 0-crossing diagram).
    #[serde(rename = "R1+")]
    R1Add { edge: EdgeLabel, first_under: bool, positive: bool },
    #[serde(rename = "R1-")]
    R1Remove { crossing: usize },
    /// Push a finger from boundary edge `finger` of `face` across boundary
    /// edge `target`. When both are the same edge, `finger_first` says which
    /// part comes first along the orientation.
    #[serde(rename = "R2+")]
    R2Add { face: usize, finger: usize, target: usize, finger_over: bool, finger_first: bool },
    /// Remove the bigon `face`.
    #[serde(rename = "R2-")]
    R2Remove { face: usize },
    /// Slide a strand across the triangle `face`.
    #[serde(rename = "R3")]
    R3 { face: usize },
    #[serde(rename = "FLYPE")]
    Flype(FlypeSite),
}

impl MoveSite {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveSite::R1Add { .. } => MoveKind::R1Add,
            MoveSite::R1Remove { .. } => MoveKind::R1Remove,
            MoveSite::R2Add { .. } => MoveKind::R2Add,
            MoveSite::R2Remove { .. } => MoveKind::R2Remove,
            MoveSite::R3 { .. } => MoveKind::R3,
            MoveSite::Flype(_) => MoveKind::Flype,
        }
    }
}

/// Largest tangle searched by [`enumerate_sites`] when flypes are requested.
pub const DEFAULT_FLYPE_TANGLE_CAP: usize = 16;

pub fn enumerate_sites(d: &Diagram, kinds: &[MoveKind]) -> Vec<MoveSite> {
    let mut out = Vec::new();
    let mut kinds = kinds.to_vec();
    kinds.sort_unstable();
    kinds.dedup();
    for k in kinds {
        match k {
            MoveKind::R1Add => r1_add_sites(d, &mut out),
            MoveKind::R1Remove => r1_remove_sites(d, &mut out),
            MoveKind::R2Add => r2_add_sites(d, &mut out),
            MoveKind::R2Remove => r2_remove_sites(d, &mut out),
            MoveKind::R3 => r3_sites(d, &mut out),
            MoveKind::Flype => out.extend(flype_sites(d, DEFAULT_FLYPE_TANGLE_CAP).into_iter().map(MoveSite::Flype)),
        }
    }
    out
}

/// Applies a move after checking that `site` is one of the diagram's sites.
pub fn apply_move(d: &Diagram, site: &MoveSite) -> Result<Diagram, MoveError> {
    let legal = match site {
        MoveSite::Flype(f) => flype_site_valid(d, f),
        _ => enumerate_sites(d, &[site.kind()]).contains(site),
    };
    if !legal {
        return Err(MoveError::InvalidSite(serde_json::to_string(site).unwrap_or_default()));
    }
    apply_unchecked(d, site)
}

/// Applies a list of moves in order.
pub fn apply_script(d: &Diagram, script: &[MoveSite]) -> Result<Diagram, MoveError> {
    script.iter().try_fold(d.clone(), |cur, s| apply_move(&cur, s))
}

fn apply_unchecked(d: &Diagram, site: &MoveSite) -> Result<Diagram, MoveError> {
    let raw = match site {
        MoveSite::R1Add { edge, first_under, positive } => r1_add(d, *edge, *first_under, *positive),
        MoveSite::R1Remove { crossing } => r1_remove(d, *crossing),
        MoveSite::R2Add { face, finger, target, finger_over, finger_first } => {
            r2_add(d, *face, *finger, *target, *finger_over, *finger_first)
        }
        MoveSite::R2Remove { face } => r2_remove(d, *face),
        MoveSite::R3 { face } => r3(d, *face),
        MoveSite::Flype(f) => flype(d, f),
    };
    Ok(raw.into_diagram()?.canonical())
}

// ---------------------------------------------------------------- R1

fn r1_add_sites(d: &Diagram, out: &mut Vec<MoveSite>) {
    let edges = if d.is_unknot_diagram() { 0..=0 } else { 1..=d.edge_count() as EdgeLabel };
    for edge in edges {
        for first_under in [true, false] {
            for positive in [true, false] {
                out.push(MoveSite::R1Add { edge, first_under, positive });
            }
        }
    }
}

fn r1_add(d: &Diagram, edge: EdgeLabel, first_under: bool, positive: bool) -> RawDiagram {
    let mut raw = d.to_raw();
    let m = d.edge_count() as u32;
    let (x1, x2, l) = if d.is_unknot_diagram() {
        (1, 1, 2)
    } else {
        let head = d.head(edge);
        raw.xs[head.crossing][head.pos as usize] = m + 1;
        (edge, m + 1, m + 2)
    };
    // the strand enters on x1, runs once round the loop l and leaves on x2
    let (record, x1_pos) = match (first_under, positive) {
        (true, true) => ([x1, x2, l, l], 0),
        (true, false) => ([x1, l, l, x2], 0),
        (false, true) => ([l, l, x2, x1], 3),
        (false, false) => ([l, x1, x2, l], 1),
    };
    raw.xs.push(record);
    raw.seed = Some(Slot::new(raw.xs.len() - 1, x1_pos));
    raw
}

/// Adjacent slots `(s, s + 1)` of crossing `k` joined by a kink loop.
fn kink_slot(d: &Diagram, k: usize) -> Option<u8> {
    (0..4u8).find(|&s| d.label_at(Slot::new(k, s)) == d.label_at(Slot::new(k, s + 1)))
}

fn r1_remove_sites(d: &Diagram, out: &mut Vec<MoveSite>) {
    for k in 0..d.crossing_count() {
        if kink_slot(d, k).is_some() {
            out.push(MoveSite::R1Remove { crossing: k });
        }
    }
}

fn r1_remove(d: &Diagram, k: usize) -> RawDiagram {
    let s = kink_slot(d, k).expect("validated site");
    let mut raw = d.to_raw();
    let keep = d.label_at(Slot::new(k, s + 2));
    let drop = d.label_at(Slot::new(k, s + 3));
    raw.xs.remove(k);
    raw.rename(|id| if id == drop { keep } else { id });
    raw.seed = None;
    raw
}

// ---------------------------------------------------------------- R2

fn r2_add_sites(d: &Diagram, out: &mut Vec<MoveSite>) {
    if d.is_unknot_diagram() {
        for face in 0..2 {
            for finger_over in [true, false] {
                for finger_first in [true, false] {
                    out.push(MoveSite::R2Add { face, finger: 0, target: 0, finger_over, finger_first });
                }
            }
        }
        return;
    }
    for (face, f) in d.faces().iter().enumerate() {
        for (finger, x) in f.edges.iter().enumerate() {
            for (target, y) in f.edges.iter().enumerate() {
                let firsts: &[bool] = if x.label == y.label { &[true, false] } else { &[false] };
                for finger_over in [true, false] {
                    for &finger_first in firsts {
                        out.push(MoveSite::R2Add { face, finger, target, finger_over, finger_first });
                    }
                }
            }
        }
    }
}

fn r2_add(d: &Diagram, face: usize, finger: usize, target: usize, finger_over: bool, finger_first: bool) -> RawDiagram {
    let mut raw = d.to_raw();
    let m = d.edge_count() as u32;
    let mut next = m;
    let mut fresh = || {
        next += 1;
        next
    };
    let (x_label, y_label, x_left, y_left) = if d.is_unknot_diagram() {
        // the circle bounds face 0 on its left and face 1 on its right
        (0, 0, face == 0, face == 0)
    } else {
        let f = &d.faces()[face];
        let (x, y) = (f.edges[finger], f.edges[target]);
        (x.label, y.label, x.face_on_left, y.face_on_left)
    };
    // Picture: target horizontal, the face above it, the finger coming down
    // from above and crossing the target at L (left) and R (right).
    let rightwards = y_left;
    let down_at_l = !x_left;

    let relabel_head = |raw: &mut RawDiagram, label: EdgeLabel, new: u32| {
        let h = d.head(label);
        raw.xs[h.crossing][h.pos as usize] = new;
    };
    let (x1, x3, y1, y3);
    if x_label != y_label {
        x1 = x_label;
        x3 = fresh();
        y1 = y_label;
        y3 = fresh();
        relabel_head(&mut raw, x_label, x3);
        relabel_head(&mut raw, y_label, y3);
    } else {
        let (e_in, e_out) = if d.is_unknot_diagram() {
            let c = fresh();
            (c, c)
        } else {
            let e_out = fresh();
            relabel_head(&mut raw, x_label, e_out);
            (x_label, e_out)
        };
        let mid = fresh();
        if finger_first {
            (x1, x3, y1, y3) = (e_in, mid, mid, e_out);
        } else {
            (y1, y3, x1, x3) = (e_in, mid, mid, e_out);
        }
    }
    let (x2, y2) = (fresh(), fresh());

    let layout = |right: u32, top: u32, left: u32, bottom: u32| {
        if finger_over {
            [right, top, left, bottom]
        } else {
            [top, left, bottom, right]
        }
    };
    let l = layout(y2, if down_at_l { x1 } else { x3 }, if rightwards { y1 } else { y3 }, x2);
    let r = layout(if rightwards { y3 } else { y1 }, if down_at_l { x3 } else { x1 }, y2, x2);
    let n = raw.xs.len();
    raw.xs.push(l);
    raw.xs.push(r);
    let top_pos = if finger_over { 1 } else { 0 };
    raw.seed = Some(Slot::new(if down_at_l { n } else { n + 1 }, top_pos));
    raw
}

/// Bigon corners `(P, s)`, `(Q, t)` if `face` is a bigon whose two edges
/// each pass over (or under) at both ends.
fn removable_bigon(d: &Diagram, face: usize) -> Option<(Slot, Slot)> {
    let f = &d.faces()[face];
    if f.len() != 2 {
        return None;
    }
    let (p, q) = (f.corners[0], f.corners[1]);
    if p.crossing == q.crossing {
        return None;
    }
    // the first edge leaves P through slot s + 1 and arrives at Q through t
    (Diagram::is_over(p.turn(1)) == Diagram::is_over(q)).then_some((p, q))
}

fn r2_remove_sites(d: &Diagram, out: &mut Vec<MoveSite>) {
    for face in 0..d.faces().len() {
        if !d.is_unknot_diagram() && removable_bigon(d, face).is_some() {
            out.push(MoveSite::R2Remove { face });
        }
    }
}

fn r2_remove(d: &Diagram, face: usize) -> RawDiagram {
    let (p, q) = removable_bigon(d, face).expect("validated site");
    let mut raw = d.to_raw();
    let mut uf = UnionFind::new(d.edge_count() + 1);
    uf.union(d.label_at(p.turn(3)) as usize, d.label_at(q.turn(2)) as usize);
    uf.union(d.label_at(q.turn(3)) as usize, d.label_at(p.turn(2)) as usize);
    let (hi, lo) = (p.crossing.max(q.crossing), p.crossing.min(q.crossing));
    raw.xs.remove(hi);
    raw.xs.remove(lo);
    raw.rename(|id| uf.find(id as usize) as u32);
    raw.seed = None;
    raw
}

// ---------------------------------------------------------------- R3

fn r3_triangle(d: &Diagram, face: usize) -> Option<[Slot; 3]> {
    let f = &d.faces()[face];
    if f.len() != 3 {
        return None;
    }
    let c = [f.corners[0], f.corners[1], f.corners[2]];
    if c[0].crossing == c[1].crossing || c[1].crossing == c[2].crossing || c[0].crossing == c[2].crossing {
        return None;
    }
    // some side must be over at both ends (or under at both)
    (0..3).any(|i| Diagram::is_over(c[i].turn(1)) == Diagram::is_over(c[(i + 1) % 3])).then_some(c)
}

fn r3_sites(d: &Diagram, out: &mut Vec<MoveSite>) {
    for face in 0..d.faces().len() {
        if !d.is_unknot_diagram() && r3_triangle(d, face).is_some() {
            out.push(MoveSite::R3 { face });
        }
    }
}

/// Each side of the triangle lies on one strand. On that strand the two
/// triangle crossings swap places: the inner slot at one end takes the outer
/// edge of the other end, and a fresh edge joins the two former outer slots.
fn r3(d: &Diagram, face: usize) -> RawDiagram {
    let c = r3_triangle(d, face).expect("validated site");
    let mut raw = d.to_raw();
    let m = d.edge_count() as u32;
    for i in 0..3 {
        let inner_a = c[i].turn(1);
        let inner_b = c[(i + 1) % 3];
        let outer_a = inner_a.opposite();
        let outer_b = inner_b.opposite();
        let fresh = m + 1 + i as u32;
        let set = |raw: &mut RawDiagram, s: Slot, id: u32| raw.xs[s.crossing][s.pos as usize] = id;
        set(&mut raw, inner_a, d.label_at(outer_b));
        set(&mut raw, inner_b, d.label_at(outer_a));
        set(&mut raw, outer_a, fresh);
        set(&mut raw, outer_b, fresh);
    }
    raw.seed = None;
    raw
}

// ---------------------------------------------------------------- flypes

/// Faces on the left and right of an edge.
fn edge_faces(d: &Diagram, label: EdgeLabel) -> (usize, usize) {
    let t = d.tail(label);
    (d.corner_face(t), d.corner_face(t.turn(3)))
}

/// Crossings reachable from `start` without using the edges in `cut`.
fn component_without(d: &Diagram, start: usize, cut: &[EdgeLabel]) -> Vec<bool> {
    let n = d.crossing_count();
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(k) = stack.pop() {
        for s in 0..4u8 {
            let slot = Slot::new(k, s);
            if cut.contains(&d.label_at(slot)) {
                continue;
            }
            let o = d.other_end(slot).crossing;
            if !seen[o] {
                seen[o] = true;
                stack.push(o);
            }
        }
    }
    seen
}

fn flype_candidate(d: &Diagram, pivot: usize, side: u8, ne: EdgeLabel, se: EdgeLabel, cap: usize) -> Option<FlypeSite> {
    let at = |k: u8| Slot::new(pivot, side + k);
    let (nw, ltop, lbot, sw) = (d.label_at(at(0)), d.label_at(at(1)), d.label_at(at(2)), d.label_at(at(3)));
    let labels = [nw, ltop, lbot, sw, ne, se];
    if labels.iter().collect::<HashSet<_>>().len() != 6 {
        return None;
    }
    let (ft, fl, fb) = (d.corner_face(at(0)), d.corner_face(at(1)), d.corner_face(at(2)));
    let (ne_l, ne_r) = edge_faces(d, ne);
    let (se_l, se_r) = edge_faces(d, se);
    let fx = match (ne_l == ft, ne_r == ft) {
        (true, false) => ne_r,
        (false, true) => ne_l,
        _ => return None,
    };
    let se_ok = (se_l == fb && se_r == fx) || (se_r == fb && se_l == fx);
    if !se_ok || [ft, fl, fb, fx].iter().collect::<HashSet<_>>().len() != 4 {
        return None;
    }
    let cut = [ltop, lbot, ne, se];
    let inside = component_without(d, pivot, &cut);
    let tangle: Vec<usize> = (0..d.crossing_count()).filter(|&k| inside[k] && k != pivot).collect();
    if tangle.is_empty() || tangle.len() > cap || tangle.len() + 1 == d.crossing_count() {
        return None;
    }
    let crosses = |l: EdgeLabel| inside[d.head(l).crossing] != inside[d.tail(l).crossing];
    if !cut.iter().all(|&l| crosses(l)) {
        return None;
    }
    // the pivot reaches the tangle only through nw and sw
    let tangle_end = |s: Slot| d.other_end(s).crossing;
    if tangle_end(at(0)) == pivot || tangle_end(at(3)) == pivot {
        return None;
    }
    Some(FlypeSite { pivot, side: side % 4, nw, ne, sw, se, tangle })
}

/// Flype sites with at most `max_tangle` crossings in the tangle.
pub fn flype_sites(d: &Diagram, max_tangle: usize) -> Vec<FlypeSite> {
    let mut out = Vec::new();
    for pivot in 0..d.crossing_count() {
        for side in 0..4u8 {
            let ft = d.corner_face(Slot::new(pivot, side));
            let fb = d.corner_face(Slot::new(pivot, side + 2));
            for ne in d.faces()[ft].labels() {
                for se in d.faces()[fb].labels() {
                    if let Some(site) = flype_candidate(d, pivot, side, ne, se, max_tangle) {
                        if !out.contains(&site) {
                            out.push(site);
                        }
                    }
                }
            }
        }
    }
    out
}

fn flype_site_valid(d: &Diagram, f: &FlypeSite) -> bool {
    f.pivot < d.crossing_count()
        && f.ne as usize <= d.edge_count()
        && f.se as usize <= d.edge_count()
        && f.ne > 0
        && f.se > 0
        && flype_candidate(d, f.pivot, f.side, f.ne, f.se, usize::MAX).as_ref() == Some(f)
}

/// Turns the tangle over (a half-turn about the horizontal axis, which
/// mirrors its planar picture and exchanges over and under) and moves the
/// pivot crossing to the tangle's right.
fn flype(d: &Diagram, f: &FlypeSite) -> RawDiagram {
    let mut raw = d.to_raw();
    let n = d.crossing_count();
    let mut inside = vec![false; n];
    for &k in &f.tangle {
        inside[k] = true;
    }
    let at = |k: u8| Slot::new(f.pivot, f.side + k);
    let ends = |l: EdgeLabel| {
        let (h, t) = (d.head(l), d.tail(l));
        if inside[h.crossing] {
            (h, t)
        } else {
            (t, h)
        }
    };
    let q_ltop = d.other_end(at(1));
    let q_lbot = d.other_end(at(2));
    let p_nw = d.other_end(at(0));
    let p_sw = d.other_end(at(3));
    let (p_ne, q_ne) = ends(f.ne);
    let (p_se, q_se) = ends(f.se);
    let m = d.edge_count() as u32;
    let id: [u32; 6] = std::array::from_fn(|i| m + 1 + i as u32);
    for (slot, new) in [
        (q_ltop, id[0]),
        (p_sw, id[0]),
        (q_lbot, id[1]),
        (p_nw, id[1]),
        (p_se, id[2]),
        (p_ne, id[3]),
        (q_ne, id[4]),
        (q_se, id[5]),
        (at(0), id[4]),
        (at(1), id[2]),
        (at(2), id[3]),
        (at(3), id[5]),
    ] {
        raw.xs[slot.crossing][slot.pos as usize] = new;
    }
    for &k in &f.tangle {
        raw.xs[k].reverse();
    }
    let outside = (0..n).find(|&k| k != f.pivot && !inside[k]).expect("validated site has an outside");
    raw.seed = Some(Slot::new(outside, 0));
    raw
}

// ---------------------------------------------------------------- walks

/// Applies `steps` random Reidemeister moves. Each step picks a move kind
/// uniformly among the kinds with a legal site that keeps the diagram within
/// `max_crossings`, then a site of that kind uniformly.
pub fn random_move_walk(d: &Diagram, steps: usize, max_crossings: usize, seed: u64) -> Diagram {
    random_move_walk_trace(d, steps, max_crossings, seed).0
}

/// As [`random_move_walk`], also returning the applied moves.
pub fn random_move_walk_trace(d: &Diagram, steps: usize, max_crossings: usize, seed: u64) -> (Diagram, Vec<MoveSite>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = d.clone();
    let mut trace = Vec::with_capacity(steps);
    for _ in 0..steps {
        let n = cur.crossing_count() as i64;
        let options: Vec<(MoveKind, Vec<MoveSite>)> = MoveKind::REIDEMEISTER
            .iter()
            .filter(|k| n + k.crossing_delta() <= max_crossings as i64)
            .map(|&k| (k, enumerate_sites(&cur, &[k])))
            .filter(|(_, s)| !s.is_empty())
            .collect();
        let Some((_, sites)) = options.choose(&mut rng) else {
            continue;
        };
        let site = sites.choose(&mut rng).expect("non-empty").clone();
        cur = apply_unchecked(&cur, &site).expect("enumerated sites apply cleanly");
        trace.push(site);
    }
    (cur, trace)
}

/// Removes kinks and bigons until none are left.
pub fn greedy_simplify(d: &Diagram) -> Diagram {
    let mut cur = d.clone();
    loop {
        let site = enumerate_sites(&cur, &[MoveKind::R1Remove])
            .into_iter()
            .next()
            .or_else(|| enumerate_sites(&cur, &[MoveKind::R2Remove]).into_iter().next());
        match site {
            Some(s) => cur = apply_unchecked(&cur, &s).expect("enumerated sites apply cleanly"),
            None => return cur,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    const FIGURE8: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn kinked_unknot_has_one_removal_site() {
        let k = d("X[1,1,2,2]");
        let sites = enumerate_sites(&k, &[MoveKind::R1Remove]);
        assert_eq!(sites, vec![MoveSite::R1Remove { crossing: 0 }]);
        assert!(apply_move(&k, &sites[0]).unwrap().is_unknot_diagram());
    }

    #[test]
    fn trefoil_has_no_removable_bigon() {
        assert!(enumerate_sites(&d(TREFOIL), &[MoveKind::R2Remove]).is_empty());
        assert!(enumerate_sites(&d(TREFOIL), &[MoveKind::R1Remove]).is_empty());
    }

    #[test]
    fn unknot_only_admits_insertions() {
        let u = Diagram::unknot();
        for k in [MoveKind::R1Remove, MoveKind::R2Remove, MoveKind::R3, MoveKind::Flype] {
            assert!(enumerate_sites(&u, &[k]).is_empty());
        }
        assert_eq!(enumerate_sites(&u, &[MoveKind::R1Add]).len(), 4);
        assert_eq!(enumerate_sites(&u, &[MoveKind::R2Add]).len(), 8);
    }

    #[test]
    fn kink_round_trip() {
        for s in [TREFOIL, FIGURE8] {
            let x = d(s);
            for site in enumerate_sites(&x, &[MoveKind::R1Add]) {
                let y = apply_move(&x, &site).unwrap();
                assert_eq!(y.crossing_count(), x.crossing_count() + 1);
                assert_eq!(greedy_simplify(&y), x.canonical(), "{site:?}");
            }
        }
    }

    #[test]
    fn kink_signs() {
        let u = Diagram::unknot();
        for positive in [true, false] {
            for first_under in [true, false] {
                let k = apply_move(&u, &MoveSite::R1Add { edge: 0, first_under, positive }).unwrap();
                assert_eq!(k.writhe(), if positive { 1 } else { -1 });
            }
        }
    }

    #[test]
    fn finger_moves_validate_and_undo() {
        for s in ["", TREFOIL, FIGURE8] {
            let x = d(s);
            for site in enumerate_sites(&x, &[MoveKind::R2Add]) {
                let y = apply_move(&x, &site).unwrap_or_else(|e| panic!("{s} {site:?}: {e}"));
                assert_eq!(y.crossing_count(), x.crossing_count() + 2);
                assert_eq!(y.writhe(), x.writhe());
                assert!(!enumerate_sites(&y, &[MoveKind::R2Remove]).is_empty(), "{site:?}");
            }
        }
    }

    #[test]
    fn stale_sites_are_rejected() {
        let t = d(TREFOIL);
        assert!(matches!(apply_move(&t, &MoveSite::R1Remove { crossing: 0 }), Err(MoveError::InvalidSite(_))));
        assert!(matches!(apply_move(&t, &MoveSite::R3 { face: 99 }), Err(MoveError::InvalidSite(_))));
    }

    #[test]
    fn greedy_simplify_examples() {
        let dk = d("X[1,3,2,2] X[3,4,4,1]");
        assert!(greedy_simplify(&dk).is_unknot_diagram());
        assert_eq!(greedy_simplify(&d(TREFOIL)), d(TREFOIL));
    }

    #[test]
    fn walks_are_reproducible() {
        let t = d(TREFOIL);
        assert_eq!(random_move_walk(&t, 0, 14, 7), t);
        let a = random_move_walk(&t, 40, 12, 7);
        assert_eq!(a, random_move_walk(&t, 40, 12, 7));
        assert!(a.crossing_count() <= 12);
    }

    #[test]
    fn site_json_round_trip() {
        let s = MoveSite::R2Add { face: 3, finger: 1, target: 0, finger_over: true, finger_first: false };
        let j = serde_json::to_string(&s).unwrap();
        assert!(j.contains("\"kind\":\"R2+\""));
        assert_eq!(serde_json::from_str::<MoveSite>(&j).unwrap(), s);
        assert_eq!("r3".parse::<MoveKind>(), Ok(MoveKind::R3));
    }
}
