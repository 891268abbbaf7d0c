//! Small graph utilities shared by the diagram and state-sum code.

/// Disjoint-set forest with path compression and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<u32>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n], sets: n }
    }

    pub fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
        self.size.fill(1);
        self.sets = self.parent.len();
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Returns `true` if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        true
    }

    /// Number of disjoint sets.
    pub fn count(&self) -> usize {
        self.sets
    }
}

/// Articulation points of an undirected multigraph given as adjacency lists
/// (parallel edges are repeated entries). Iterative Hopcroft-Tarjan lowpoint
/// search; each undirected edge must appear in both endpoint lists.
pub fn articulation_points(adj: &[Vec<usize>]) -> Vec<bool> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut cut = vec![false; n];
    let mut timer = 0;
    // (vertex, parent, next adjacency index, skipped-parent-edge flag)
    let mut stack: Vec<(usize, usize, usize, bool)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        stack.push((root, usize::MAX, 0, false));
        while let Some(top) = stack.last_mut() {
            let (v, parent, idx, skipped) = *top;
            if idx < adj[v].len() {
                top.2 += 1;
                let w = adj[v][idx];
                if w == parent && !skipped {
                    // only one copy of the tree edge back to the parent is ignored
                    top.3 = true;
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0, false));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        cut[parent] = true;
                    }
                }
            }
        }
        cut[root] = root_children > 1;
    }
    cut
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    #[test]
    fn union_find_counts_sets() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 1));
        assert!(uf.union(3, 4));
        assert!(!uf.union(1, 0));
        assert_eq!(uf.count(), 3);
        assert_eq!(uf.find(0), uf.find(1));
        assert_ne!(uf.find(0), uf.find(3));
        uf.reset();
        assert_eq!(uf.count(), 5);
    }

    #[test]
    fn path_has_interior_cut_vertices() {
        let cut = articulation_points(&graph(4, &[(0, 1), (1, 2), (2, 3)]));
        assert_eq!(cut, vec![false, true, true, false]);
    }

    #[test]
    fn cycle_has_none() {
        let cut = articulation_points(&graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]));
        assert!(cut.iter().all(|c| !c));
    }

    #[test]
    fn parallel_edges_are_not_bridges() {
        // double edge 0=1 then a pendant 2 on 1
        let cut = articulation_points(&graph(3, &[(0, 1), (0, 1), (1, 2)]));
        assert_eq!(cut, vec![false, true, false]);
        let cut = articulation_points(&graph(2, &[(0, 1), (0, 1)]));
        assert_eq!(cut, vec![false, false]);
    }

    #[test]
    fn bowtie_centre() {
        let cut = articulation_points(&graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]));
        assert_eq!(cut, vec![false, false, true, false, false]);
    }
}
