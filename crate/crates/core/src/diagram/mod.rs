//! Oriented knot diagrams in planar-diagram (PD) notation.
//!
//! A crossing is a record `[a, b, c, d]` of edge labels listed
//! counterclockwise, starting at the incoming under-strand edge `a`; the
//! under-strand leaves along `c = a + 1 (mod 2n)`. The over-strand runs
//! `d -> b` at a positive crossing and `b -> d` at a negative one.
//! Edges are labelled `1..=2n` consecutively along the orientation.

mod faces;
mod raw;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{articulation_points, UnionFind};

pub use faces::{Face, FaceEdge};
pub(crate) use raw::RawDiagram;

pub type EdgeLabel = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("PD syntax error at byte {pos}: {reason}")]
    Syntax { pos: usize, reason: &'static str },
    #[error("edge label {label} breaks the label multiset (labels must be 1..={max}, each used twice)")]
    LabelMultiset { label: i64, max: usize },
    #[error("crossing {crossing}: under-strand must run a -> a+1")]
    UnderStrand { crossing: usize },
    #[error("crossing {crossing}: over-strand labels are not consecutive")]
    OverStrand { crossing: usize },
    #[error("edge {label} does not have exactly one incoming and one outgoing end")]
    Orientation { label: EdgeLabel },
    #[error("diagram has {components} components; only knots are supported")]
    MultiComponent { components: usize },
    #[error("shadow graph is disconnected")]
    Disconnected,
    #[error("crossing orders are not planar: {faces} faces, expected {expected}")]
    NonPlanar { faces: usize, expected: usize },
    #[error("Dowker-Thistlethwaite code undefined: {0}")]
    Dt(&'static str),
}

/// Crossing sign (local writhe).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// A half-edge position: crossing index and slot `0..4` in its record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slot {
    pub crossing: usize,
    pub pos: u8,
}

impl Slot {
    pub fn new(crossing: usize, pos: u8) -> Self {
        Slot { crossing, pos: pos % 4 }
    }

    /// The slot `k` steps counterclockwise around the same crossing.
    pub fn turn(self, k: u8) -> Slot {
        Slot::new(self.crossing, self.pos + k)
    }

    pub fn opposite(self) -> Slot {
        self.turn(2)
    }
}

/// A validated knot diagram. Immutable; derived data is computed once at
/// construction.
#[derive(Clone)]
pub struct Diagram {
    crossings: Vec<[EdgeLabel; 4]>,
    signs: Vec<Sign>,
    heads: Vec<Slot>,
    tails: Vec<Slot>,
    faces: Vec<Face>,
    corner_faces: Vec<[usize; 4]>,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings
    }
}

impl Eq for Diagram {}

impl std::hash::Hash for Diagram {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.crossings.hash(state);
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram({self})")
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, [a, b, c, d]) in self.crossings.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "X[{a},{b},{c},{d}]")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Diagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Diagram::parse_pd(s)
    }
}

impl Diagram {
    /// The 0-crossing unknot diagram.
    pub fn unknot() -> Self {
        Diagram {
            crossings: Vec::new(),
            signs: Vec::new(),
            heads: Vec::new(),
            tails: Vec::new(),
            faces: vec![Face::default(), Face::default()],
            corner_faces: Vec::new(),
        }
    }

    /// Validates crossing records and builds the diagram.
    pub fn new(crossings: Vec<[EdgeLabel; 4]>) -> Result<Self, DiagramError> {
        let n = crossings.len();
        if n == 0 {
            return Ok(Self::unknot());
        }
        let m = 2 * n;
        let mut uses = vec![0u8; m + 1];
        for x in &crossings {
            for &l in x {
                let li = l as usize;
                if li == 0 || li > m || uses[li] == 2 {
                    return Err(DiagramError::LabelMultiset { label: l as i64, max: m });
                }
                uses[li] += 1;
            }
        }
        if let Some(l) = (1..=m).find(|&l| uses[l] != 2) {
            return Err(DiagramError::LabelMultiset { label: l as i64, max: m });
        }

        // strands pair opposite slots; one strand set per link component
        let mut uf = UnionFind::new(m + 1);
        for [a, b, c, d] in &crossings {
            uf.union(*a as usize, *c as usize);
            uf.union(*b as usize, *d as usize);
        }
        let components = uf.count() - 1;
        if components > 1 {
            return Err(DiagramError::MultiComponent { components });
        }

        let succ = |l: EdgeLabel| (l as usize % m) as EdgeLabel + 1;
        let mut signs = Vec::with_capacity(n);
        let unset = Slot::new(usize::MAX, 0);
        let mut heads = vec![unset; m];
        let mut tails = vec![unset; m];
        for (k, &[a, b, c, d]) in crossings.iter().enumerate() {
            if c != succ(a) {
                return Err(DiagramError::UnderStrand { crossing: k });
            }
            let d_to_b = b == succ(d);
            let b_to_d = d == succ(b);
            let sign = match (d_to_b, b_to_d) {
                (true, false) => Sign::Positive,
                (false, true) => Sign::Negative,
                // only with 2n = 2: the over-strand enters on the label that is not `a`
                (true, true) if d != a => Sign::Positive,
                (true, true) => Sign::Negative,
                (false, false) => return Err(DiagramError::OverStrand { crossing: k }),
            };
            let (over_in, over_out) = match sign {
                Sign::Positive => (3, 1),
                Sign::Negative => (1, 3),
            };
            for (pos, is_head) in [(0u8, true), (2, false), (over_in, true), (over_out, false)] {
                let label = crossings[k][pos as usize];
                let table = if is_head { &mut heads } else { &mut tails };
                let entry = &mut table[label as usize - 1];
                if entry.crossing != usize::MAX {
                    return Err(DiagramError::Orientation { label });
                }
                *entry = Slot::new(k, pos);
            }
            signs.push(sign);
        }

        let mut shadow = UnionFind::new(n);
        for l in 0..m {
            shadow.union(heads[l].crossing, tails[l].crossing);
        }
        if shadow.count() != 1 {
            return Err(DiagramError::Disconnected);
        }

        let mut diagram = Diagram { crossings, signs, heads, tails, faces: Vec::new(), corner_faces: Vec::new() };
        let (faces, corner_faces) = faces::trace(&diagram);
        if faces.len() != n + 2 {
            return Err(DiagramError::NonPlanar { faces: faces.len(), expected: n + 2 });
        }
        diagram.faces = faces;
        diagram.corner_faces = corner_faces;
        Ok(diagram)
    }

    /// Parses whitespace- or comma-separated `X[a,b,c,d]` records, optionally
    /// wrapped in `PD[...]`. The empty string is the 0-crossing unknot.
    pub fn parse_pd(text: &str) -> Result<Self, DiagramError> {
        Self::new(parse_records(text)?)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn crossings(&self) -> &[[EdgeLabel; 4]] {
        &self.crossings
    }

    pub fn is_unknot_diagram(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn label_at(&self, slot: Slot) -> EdgeLabel {
        self.crossings[slot.crossing][slot.pos as usize]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, crossing: usize) -> Sign {
        self.signs[crossing]
    }

    /// Slot where edge `label` ends (its incoming end).
    pub fn head(&self, label: EdgeLabel) -> Slot {
        self.heads[label as usize - 1]
    }

    /// Slot where edge `label` starts (its outgoing end).
    pub fn tail(&self, label: EdgeLabel) -> Slot {
        self.tails[label as usize - 1]
    }

    /// The other end of the edge attached at `slot`.
    pub fn other_end(&self, slot: Slot) -> Slot {
        let l = self.label_at(slot);
        let h = self.head(l);
        if h == slot {
            self.tail(l)
        } else {
            h
        }
    }

    /// Whether the edge at `slot` leaves the crossing there.
    pub fn is_outgoing(&self, slot: Slot) -> bool {
        self.tail(self.label_at(slot)) == slot
    }

    /// Whether `slot` belongs to the over-strand of its crossing.
    pub fn is_over(slot: Slot) -> bool {
        slot.pos % 2 == 1
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|s| s.value()).sum()
    }

    /// Switches over and under at one crossing, keeping the shadow and the
    /// orientation.
    pub fn crossing_change(&self, crossing: usize) -> Self {
        let mut xs = self.crossings.clone();
        xs[crossing] = switched(xs[crossing], self.signs[crossing]);
        Self::new(xs).expect("crossing change preserves validity")
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> Self {
        let xs = self.crossings.iter().zip(&self.signs).map(|(x, s)| switched(*x, *s)).collect();
        Self::new(xs).expect("mirror preserves validity")
    }

    /// Same diagram with the opposite orientation, relabelled so that edges
    /// are again consecutive.
    pub fn reversed(&self) -> Self {
        let m = self.edge_count() as EdgeLabel;
        let relabel = |l: EdgeLabel| m + 1 - l;
        let xs = self.crossings.iter().map(|&[a, b, c, d]| [relabel(c), relabel(d), relabel(a), relabel(b)]).collect();
        Self::new(xs).expect("reversal preserves validity")
    }

    /// Canonical representative under cyclic relabelling and crossing order:
    /// the lexicographically least sorted record list over all label shifts.
    pub fn canonical(&self) -> Self {
        let n = self.crossing_count();
        if n == 0 {
            return self.clone();
        }
        let m = 2 * n as EdgeLabel;
        let mut best: Option<Vec<[EdgeLabel; 4]>> = None;
        for shift in 0..m {
            let mut xs: Vec<[EdgeLabel; 4]> =
                self.crossings.iter().map(|x| x.map(|l| (l - 1 + shift) % m + 1)).collect();
            xs.sort_unstable();
            if best.as_ref().is_none_or(|b| xs < *b) {
                best = Some(xs);
            }
        }
        Self::new(best.unwrap()).expect("relabelling preserves validity")
    }

    /// Whether the strand passes crossings alternately over and under.
    pub fn is_alternating(&self) -> bool {
        let m = self.edge_count();
        (1..=m as EdgeLabel).all(|e| {
            let next = e % m as EdgeLabel + 1;
            Self::is_over(self.head(e)) != Self::is_over(self.head(next))
        })
    }

    /// Crossings whose vertex is a cut vertex of the shadow graph.
    pub fn nugatory_crossings(&self) -> Vec<usize> {
        let n = self.crossing_count();
        if n == 0 {
            return Vec::new();
        }
        // subdivide every edge so loops and parallel edges become simple paths
        let m = self.edge_count();
        let mut adj = vec![Vec::new(); n + m];
        for l in 1..=m as EdgeLabel {
            let mid = n + l as usize - 1;
            for end in [self.head(l), self.tail(l)] {
                adj[end.crossing].push(mid);
                adj[mid].push(end.crossing);
            }
        }
        let cut = articulation_points(&adj);
        (0..n).filter(|&k| cut[k]).collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.nugatory_crossings().is_empty()
    }

    /// Dowker-Thistlethwaite code: for passages `1, 3, ..., 2n-1` the paired
    /// even passage, negated when the odd passage goes over.
    pub fn dt_code(&self) -> Result<Vec<i64>, DiagramError> {
        let n = self.crossing_count();
        if n == 0 {
            return Err(DiagramError::Dt("the 0-crossing diagram has no DT code"));
        }
        let mut code = vec![0i64; n];
        for (k, x) in self.crossings.iter().enumerate() {
            let under = x[0];
            let over = match self.signs[k] {
                Sign::Positive => x[3],
                Sign::Negative => x[1],
            };
            let (odd, even, odd_over) = match (under % 2, over % 2) {
                (1, 0) => (under, over, false),
                (0, 1) => (over, under, true),
                _ => return Err(DiagramError::Dt("crossing visited twice with equal parity")),
            };
            let entry = even as i64;
            code[(odd as usize - 1) / 2] = if odd_over { -entry } else { entry };
        }
        Ok(code)
    }

    /// Faces of the planar embedding. The 0-crossing diagram has two empty
    /// faces.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Face containing the corner between `slot` and the next slot
    /// counterclockwise.
    pub fn corner_face(&self, slot: Slot) -> usize {
        self.corner_faces[slot.crossing][slot.pos as usize]
    }

    pub(crate) fn to_raw(&self) -> RawDiagram {
        let seed = self.heads.last().copied();
        RawDiagram { xs: self.crossings.clone(), seed }
    }
}

/// Record of the same crossing with over and under exchanged.
fn switched([a, b, c, d]: [EdgeLabel; 4], sign: Sign) -> [EdgeLabel; 4] {
    match sign {
        Sign::Positive => [d, a, b, c],
        Sign::Negative => [b, c, d, a],
    }
}

fn parse_records(text: &str) -> Result<Vec<[EdgeLabel; 4]>, DiagramError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let err = |pos, reason| Err(DiagramError::Syntax { pos, reason });
    let skip = |pos: &mut usize, seps: &[u8]| {
        while *pos < bytes.len() && (bytes[*pos].is_ascii_whitespace() || seps.contains(&bytes[*pos])) {
            *pos += 1;
        }
    };
    skip(&mut pos, b"");
    let wrapped = text[pos..].starts_with("PD[");
    if wrapped {
        pos += 3;
    }
    let mut records = Vec::new();
    loop {
        skip(&mut pos, b",");
        if pos == bytes.len() || (wrapped && bytes[pos] == b']') {
            break;
        }
        if !text[pos..].starts_with("X[") {
            return err(pos, "expected X[");
        }
        pos += 2;
        let mut rec = [0; 4];
        for (i, slot) in rec.iter_mut().enumerate() {
            skip(&mut pos, b"");
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return err(pos, "expected a positive integer label");
            }
            *slot = match text[start..pos].parse() {
                Ok(v) => v,
                Err(_) => return err(start, "label out of range"),
            };
            skip(&mut pos, b"");
            let want = if i == 3 { b']' } else { b',' };
            if pos == bytes.len() || bytes[pos] != want {
                return err(pos, if i == 3 { "expected ]" } else { "expected ," });
            }
            pos += 1;
        }
        records.push(rec);
    }
    if wrapped {
        if pos == bytes.len() {
            return err(pos, "unterminated PD[");
        }
        pos += 1;
        skip(&mut pos, b"");
        if pos != bytes.len() {
            return err(pos, "trailing input after PD[...]");
        }
    }
    Ok(records)
}
