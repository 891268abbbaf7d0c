//! Diagram families: braid closures, twist chains and random knot diagrams.

use rand::Rng;
use thiserror::Error;

use crate::diagram::{Diagram, DiagramError, RawDiagram, Slot};
use crate::moves::random_move_walk;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("generator {0} is out of range for the strand count")]
    Generator(i32),
    #[error("braid closure is not a knot diagram: {0}")]
    Closure(#[from] DiagramError),
}

/// Closure of a braid word. Generator `j > 0` crosses strands `j` and
/// `j + 1` with sign `+1`, `-j` is its inverse; strands are numbered from 1.
pub fn braid_closure(word: &[i32], strands: usize) -> Result<Diagram, BraidError> {
    if word.is_empty() {
        return match strands {
            1 => Ok(Diagram::unknot()),
            _ => Err(DiagramError::MultiComponent { components: strands }.into()),
        };
    }
    let mut cur: Vec<u32> = (1..=strands as u32).collect();
    let mut next = strands as u32;
    let mut xs = Vec::with_capacity(word.len());
    for &g in word {
        let j = g.unsigned_abs() as usize;
        if g == 0 || j >= strands {
            return Err(BraidError::Generator(g));
        }
        // strands run upwards; bottom-left enters at position j
        let (bl, br) = (cur[j - 1], cur[j]);
        let (tl, tr) = (next + 1, next + 2);
        next += 2;
        xs.push(if g > 0 { [br, tr, tl, bl] } else { [bl, br, tr, tl] });
        cur[j - 1] = tl;
        cur[j] = tr;
    }
    // an untouched strand closes to a separate circle
    let free = (0..strands).filter(|&i| cur[i] == i as u32 + 1).count();
    if free > 0 {
        return Err(DiagramError::MultiComponent { components: free + 1 }.into());
    }
    let mut raw = RawDiagram { xs, seed: Some(Slot::new(0, 0)) };
    let top = cur.clone();
    raw.rename(|id| top.iter().position(|&t| t == id).map_or(id, |p| p as u32 + 1));
    Ok(raw.into_diagram()?)
}

/// Closure of `s1^k s2^-k` on three strands: an alternating knot with `2k`
/// crossings. `k` must be odd.
pub fn twist_chain(k: usize) -> Diagram {
    assert!(k % 2 == 1, "twist chain needs an odd twist count");
    let mut word = vec![1; k];
    word.extend(std::iter::repeat_n(-2, k));
    braid_closure(&word, 3).expect("odd twist counts close to a knot")
}

/// A random braid closure with between 1 and `max_crossings` crossings that
/// is a knot. Generators and signs are uniform; words that close to links
/// are redrawn.
pub fn random_braid_knot<R: Rng>(rng: &mut R, max_crossings: usize) -> Diagram {
    assert!(max_crossings >= 1);
    loop {
        let strands = rng.random_range(2..=4usize);
        let len = rng.random_range(1..=max_crossings);
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let j = rng.random_range(1..strands as i32);
                if rng.random_bool(0.5) {
                    j
                } else {
                    -j
                }
            })
            .collect();
        if let Ok(d) = braid_closure(&word, strands) {
            return d;
        }
    }
}

/// A random knot diagram with at most `max_crossings` crossings: either a
/// random braid closure or a short move walk away from one.
pub fn random_diagram<R: Rng>(rng: &mut R, max_crossings: usize) -> Diagram {
    let d = random_braid_knot(rng, max_crossings);
    if rng.random_bool(0.5) {
        random_move_walk(&d, rng.random_range(1..=8), max_crossings, rng.random())
    } else {
        d
    }
}
