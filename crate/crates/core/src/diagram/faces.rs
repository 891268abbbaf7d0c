use serde::Serialize;

use super::{Diagram, EdgeLabel, Slot};

/// One side of an edge as seen from a face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FaceEdge {
    pub label: EdgeLabel,
    /// Whether the face lies to the left of the edge's orientation.
    pub face_on_left: bool,
}

/// A face of the planar embedding: a cyclic sequence of corners, where the
/// corner `Slot { crossing, pos }` is the angle between slots `pos` and
/// `pos + 1` (counterclockwise) of that crossing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Face {
    pub corners: Vec<Slot>,
    pub edges: Vec<FaceEdge>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = EdgeLabel> + '_ {
        self.edges.iter().map(|e| e.label)
    }
}

/// Traces all faces. Walking out of corner `(k, s)` along the edge at slot
/// `s + 1` keeps the face on the right; arriving through slot `t` of the next
/// crossing puts it in corner `t` there.
pub(super) fn trace(d: &Diagram) -> (Vec<Face>, Vec<[usize; 4]>) {
    let n = d.crossing_count();
    let mut corner_faces = vec![[usize::MAX; 4]; n];
    let mut faces = Vec::new();
    for k in 0..n {
        for s in 0..4u8 {
            if corner_faces[k][s as usize] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut face = Face::default();
            let mut corner = Slot::new(k, s);
            while corner_faces[corner.crossing][corner.pos as usize] == usize::MAX {
                corner_faces[corner.crossing][corner.pos as usize] = id;
                face.corners.push(corner);
                let leave = corner.turn(1);
                face.edges.push(FaceEdge { label: d.label_at(leave), face_on_left: !d.is_outgoing(leave) });
                corner = d.other_end(leave);
            }
            faces.push(face);
        }
    }
    (faces, corner_faces)
}
