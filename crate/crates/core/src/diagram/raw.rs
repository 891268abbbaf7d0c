use std::collections::HashMap;

use super::{Diagram, DiagramError, EdgeLabel, Slot};

/// Unoriented working form used for diagram surgery. Each crossing lists four
/// arbitrary edge ids counterclockwise with the under-strand on slots 0 and
/// 2; every id must occur exactly twice. `seed` is a slot whose edge enters
/// the crossing and fixes the orientation of the rebuilt diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RawDiagram {
    pub xs: Vec<[u32; 4]>,
    pub seed: Option<Slot>,
}

impl RawDiagram {
    pub fn endpoints(&self) -> HashMap<u32, Vec<Slot>> {
        let mut ends: HashMap<u32, Vec<Slot>> = HashMap::new();
        for (k, x) in self.xs.iter().enumerate() {
            for (s, id) in x.iter().enumerate() {
                ends.entry(*id).or_default().push(Slot::new(k, s as u8));
            }
        }
        ends
    }

    /// Replaces every occurrence of an id by its representative.
    pub fn rename(&mut self, mut map: impl FnMut(u32) -> u32) {
        for x in &mut self.xs {
            for id in x.iter_mut() {
                *id = map(*id);
            }
        }
    }

    /// Walks the strand from the seed, labels edges `1..=2n` in order and
    /// rebuilds a validated diagram.
    pub fn into_diagram(self) -> Result<Diagram, DiagramError> {
        let n = self.xs.len();
        if n == 0 {
            return Ok(Diagram::unknot());
        }
        let ends = self.endpoints();
        for (id, e) in &ends {
            if e.len() != 2 {
                return Err(DiagramError::LabelMultiset { label: *id as i64, max: 2 * n });
            }
        }
        let other = |slot: Slot| -> Slot {
            let e = &ends[&self.xs[slot.crossing][slot.pos as usize]];
            if e[0] == slot {
                e[1]
            } else {
                e[0]
            }
        };
        let seed = self.seed.unwrap_or(Slot::new(0, 0));
        let mut labels = vec![[0 as EdgeLabel; 4]; n];
        let mut incoming = vec![[false; 4]; n];
        let mut cur = seed;
        let mut next_label: EdgeLabel = 0;
        loop {
            let out = cur.opposite();
            let arrive = other(out);
            next_label += 1;
            if next_label as usize > 2 * n {
                return Err(DiagramError::Orientation { label: next_label });
            }
            labels[out.crossing][out.pos as usize] = next_label;
            labels[arrive.crossing][arrive.pos as usize] = next_label;
            incoming[arrive.crossing][arrive.pos as usize] = true;
            cur = arrive;
            if cur == seed {
                break;
            }
        }
        if next_label as usize != 2 * n {
            let labelled = next_label as usize;
            return Err(DiagramError::MultiComponent { components: if labelled < 2 * n { 2 } else { 1 } });
        }
        let mut records = Vec::with_capacity(n);
        for k in 0..n {
            let l = labels[k];
            records.push(if incoming[k][0] {
                l
            } else if incoming[k][2] {
                [l[2], l[3], l[0], l[1]]
            } else {
                return Err(DiagramError::UnderStrand { crossing: k });
            });
        }
        Diagram::new(records)
    }
}
