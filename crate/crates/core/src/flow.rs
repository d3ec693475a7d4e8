//! Unit-capacity max-flow networks for local vertex and edge cuts.

use std::collections::VecDeque;

use crate::connectivity::Cut;
use crate::graph::{Edge, Graph};

const UNBOUNDED: u32 = u32::MAX / 4;

/// Directed network with paired arcs: arc `a ^ 1` is the residual partner of
/// arc `a`.
///
/// In vertex mode every vertex `v` becomes `in = 2v` and `out = 2v + 1`
/// joined by a unit arc; graph edges become unbounded `out -> in` arcs, so
/// every finite cut consists of split arcs only. In edge mode each graph edge
/// is a pair of unit arcs that serve as each other's residual.
#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    split: bool,
    adj: Vec<Vec<u32>>,
    to: Vec<u32>,
    cap0: Vec<u32>,
    cap: Vec<u32>,
    level: Vec<i32>,
    cursor: Vec<usize>,
}

impl FlowNetwork {
    pub(crate) fn vertex_split(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut net = FlowNetwork::with_nodes(2 * n, true);
        for v in 0..n as u32 {
            net.add_pair(2 * v, 2 * v + 1, 1, 0);
        }
        for e in g.edges() {
            net.add_pair(2 * e.u + 1, 2 * e.v, UNBOUNDED, 0);
            net.add_pair(2 * e.v + 1, 2 * e.u, UNBOUNDED, 0);
        }
        net
    }

    pub(crate) fn edge_unit(g: &Graph) -> Self {
        let mut net = FlowNetwork::with_nodes(g.vertex_count(), false);
        for e in g.edges() {
            net.add_pair(e.u, e.v, 1, 1);
        }
        net
    }

    fn with_nodes(nodes: usize, split: bool) -> Self {
        FlowNetwork {
            split,
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap0: Vec::new(),
            cap: Vec::new(),
            level: vec![0; nodes],
            cursor: vec![0; nodes],
        }
    }

    fn add_pair(&mut self, a: u32, b: u32, forward: u32, backward: u32) {
        let id = self.to.len() as u32;
        self.adj[a as usize].push(id);
        self.adj[b as usize].push(id + 1);
        self.to.extend([b, a]);
        self.cap0.extend([forward, backward]);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let v = self.to[a as usize] as usize;
                if self.cap[a as usize] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: u32) -> u32 {
        if u == t {
            return pushed;
        }
        while self.cursor[u] < self.adj[u].len() {
            let a = self.adj[u][self.cursor[u]] as usize;
            let v = self.to[a] as usize;
            if self.cap[a] > 0 && self.level[v] == self.level[u] + 1 {
                let got = self.dfs(v, t, pushed.min(self.cap[a]));
                if got > 0 {
                    self.cap[a] -= got;
                    self.cap[a ^ 1] += got;
                    return got;
                }
            }
            self.cursor[u] += 1;
        }
        0
    }

    fn terminals(&self, s: u32, t: u32) -> (usize, usize) {
        if self.split {
            (2 * s as usize + 1, 2 * t as usize)
        } else {
            (s as usize, t as usize)
        }
    }

    /// Maximum `s`-`t` flow, stopping early once it reaches `limit`.
    /// Returns the flow value and the minimum cut when the flow is below
    /// `limit` (the cut is the source side's residual frontier).
    pub(crate) fn min_cut(&mut self, s: u32, t: u32, limit: usize) -> (usize, Option<Cut>) {
        self.cap.clone_from(&self.cap0);
        let (src, sink) = self.terminals(s, t);
        let mut flow = 0usize;
        while flow < limit && self.bfs(src, sink) {
            self.cursor.iter_mut().for_each(|c| *c = 0);
            loop {
                let f = self.dfs(src, sink, UNBOUNDED) as usize;
                if f == 0 {
                    break;
                }
                flow += f;
                if flow >= limit {
                    break;
                }
            }
        }
        if flow >= limit {
            return (flow, None);
        }
        // after the final failed BFS, level >= 0 marks the residual source side
        let reach: Vec<bool> = self.level.iter().map(|&l| l >= 0).collect();
        (flow, Some(self.extract(&reach)))
    }

    fn extract(&self, reach: &[bool]) -> Cut {
        if self.split {
            let n = reach.len() / 2;
            let members = (0..n)
                .filter(|&v| reach[2 * v] && !reach[2 * v + 1])
                .map(|v| v as u32)
                .collect();
            Cut::Vertex(members)
        } else {
            let mut edges = Vec::new();
            for u in 0..reach.len() {
                if !reach[u] {
                    continue;
                }
                for &a in &self.adj[u] {
                    let v = self.to[a as usize] as usize;
                    if !reach[v] {
                        edges.push(Edge::new(u as u32, v as u32));
                    }
                }
            }
            edges.sort_unstable();
            edges.dedup();
            Cut::Edge(edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        let edges: Vec<Edge> = (0..n).map(|v| Edge::new(v, (v + 1) % n)).collect();
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    #[test]
    fn cycle_has_two_disjoint_paths() {
        let g = cycle(6);
        let mut vn = FlowNetwork::vertex_split(&g);
        let (f, cut) = vn.min_cut(0, 3, usize::MAX);
        assert_eq!(f, 2);
        match cut.unwrap() {
            Cut::Vertex(v) => assert_eq!(v.len(), 2),
            other => panic!("{other:?}"),
        }
        let mut en = FlowNetwork::edge_unit(&g);
        let (f, cut) = en.min_cut(0, 3, usize::MAX);
        assert_eq!(f, 2);
        assert!(matches!(cut, Some(Cut::Edge(e)) if e.len() == 2));
    }

    #[test]
    fn limit_stops_early_and_network_resets() {
        let g = cycle(5);
        let mut en = FlowNetwork::edge_unit(&g);
        assert_eq!(en.min_cut(0, 2, 1), (1, None));
        assert_eq!(en.min_cut(0, 2, usize::MAX).0, 2);
    }
}
