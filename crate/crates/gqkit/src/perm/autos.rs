//! Color-preserving graph automorphism groups by equitable partition
//! refinement plus backtracking over base-point images.
//!
//! The search fixes the canonical base by repeatedly individualizing the
//! minimum of the first smallest non-singleton cell. Alternative images are
//! explored depth-first; refinement-trace mismatches prune branches, orbits
//! of already-found automorphisms prune siblings on the spine, and every
//! candidate bijection is verified edge-by-edge before it is accepted, so a
//! pruning bug can only cost time, never correctness of emitted generators.

use super::{Perm, PermGroup};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AutosError {
    #[error("search budget of {0} refinement steps exceeded")]
    BudgetExceeded(u64),
    #[error("colors length {got} does not match vertex count {want}")]
    BadColors { got: usize, want: usize },
}

/// An undirected graph with vertex colors that automorphisms must preserve.
#[derive(Debug, Clone)]
pub struct ColoredGraph {
    pub adj: Vec<Vec<usize>>,
    pub colors: Vec<u32>,
}

impl ColoredGraph {
    pub fn new(adj: Vec<Vec<usize>>, colors: Vec<u32>) -> Result<ColoredGraph, AutosError> {
        if colors.len() != adj.len() {
            return Err(AutosError::BadColors { got: colors.len(), want: adj.len() });
        }
        let mut adj = adj;
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        Ok(ColoredGraph { adj, colors })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    fn is_automorphism(&self, p: &Perm) -> bool {
        for v in 0..self.n() {
            if self.colors[p.apply(v)] != self.colors[v] {
                return false;
            }
            for &w in &self.adj[v] {
                if !self.has_edge(p.apply(v), p.apply(w)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Ordered partition of the vertex set into cells.
type Partition = Vec<Vec<usize>>;

/// Refines to the coarsest equitable partition: vertices in one cell must
/// have the same number of neighbors in every cell. New cells are ordered by
/// (parent cell, signature), which is invariant under aligned relabelings.
fn refine(graph: &ColoredGraph, mut part: Partition) -> Partition {
    loop {
        let mut cell_of = vec![0usize; graph.n()];
        for (ci, cell) in part.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let n_cells = part.len();
        let mut next: Partition = Vec::with_capacity(n_cells);
        let mut split = false;
        for cell in &part {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            // signature: neighbor counts per cell index
            let mut buckets: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
            for &v in cell {
                let mut sig = vec![0u32; n_cells];
                for &w in &graph.adj[v] {
                    sig[cell_of[w]] += 1;
                }
                match buckets.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, members)) => members.push(v),
                    None => buckets.push((sig, vec![v])),
                }
            }
            if buckets.len() > 1 {
                split = true;
            }
            buckets.sort_by(|a, b| a.0.cmp(&b.0));
            for (_, mut members) in buckets {
                members.sort_unstable();
                next.push(members);
            }
        }
        part = next;
        if !split {
            return part;
        }
    }
}

/// Initial partition: cells grouped by color value, ascending.
fn initial_partition(graph: &ColoredGraph) -> Partition {
    let mut colors: Vec<u32> = graph.colors.clone();
    colors.sort_unstable();
    colors.dedup();
    colors
        .into_iter()
        .map(|c| (0..graph.n()).filter(|&v| graph.colors[v] == c).collect())
        .collect()
}

/// Index of the first smallest cell with at least two vertices.
fn target_cell(part: &Partition) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for (i, cell) in part.iter().enumerate() {
        if cell.len() >= 2 {
            match best {
                Some((_, sz)) if sz <= cell.len() => {}
                _ => best = Some((i, cell.len())),
            }
        }
    }
    best.map(|(i, _)| i)
}

fn individualize(part: &Partition, cell_idx: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(part.len() + 1);
    for (i, cell) in part.iter().enumerate() {
        if i == cell_idx {
            out.push(vec![v]);
            out.push(cell.iter().copied().filter(|&w| w != v).collect());
        } else {
            out.push(cell.clone());
        }
    }
    out
}

fn sizes(part: &Partition) -> Vec<usize> {
    part.iter().map(|c| c.len()).collect()
}

fn leaf_order(part: &Partition) -> Option<Vec<usize>> {
    if part.iter().all(|c| c.len() == 1) {
        Some(part.iter().map(|c| c[0]).collect())
    } else {
        None
    }
}

struct Search<'a> {
    graph: &'a ColoredGraph,
    base_cells: Vec<usize>,
    base_choice: Vec<usize>,
    traces: Vec<Vec<usize>>,
    canonical_leaf: Vec<usize>,
    found: Vec<Perm>,
    steps: u64,
    budget: u64,
}

enum SubtreeOutcome {
    FoundAuto,
    Nothing,
}

impl<'a> Search<'a> {
    fn tick(&mut self) -> Result<(), AutosError> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(AutosError::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    /// Walks the canonical spine: always individualize the minimum of the
    /// target cell. Records per-depth target cells, refinement traces and the
    /// canonical leaf ordering.
    fn build_canonical(&mut self, mut part: Partition) -> Result<(), AutosError> {
        self.traces.push(sizes(&part));
        loop {
            match target_cell(&part) {
                None => {
                    self.canonical_leaf = leaf_order(&part).expect("discrete");
                    return Ok(());
                }
                Some(ci) => {
                    let v = part[ci][0];
                    self.base_cells.push(ci);
                    self.base_choice.push(v);
                    self.tick()?;
                    part = refine(self.graph, individualize(&part, ci, v));
                    self.traces.push(sizes(&part));
                }
            }
        }
    }

    /// Tries to extract an automorphism from an aligned candidate leaf.
    fn try_leaf(&mut self, leaf: &[usize]) -> bool {
        let n = self.graph.n();
        let mut images = vec![0u32; n];
        for (pos, &v) in self.canonical_leaf.iter().enumerate() {
            images[v] = leaf[pos] as u32;
        }
        let p = match Perm::from_images(images) {
            Ok(p) => p,
            Err(_) => return false,
        };
        if p.is_identity() || !self.graph.is_automorphism(&p) {
            return false;
        }
        self.found.push(p);
        true
    }

    /// Explores the subtree where the image of base point `depth` is `v`;
    /// leaves must stay aligned with the canonical traces. Bails out at the
    /// first automorphism found.
    fn explore(&mut self, part: &Partition, depth: usize) -> Result<SubtreeOutcome, AutosError> {
        if depth == self.base_cells.len() {
            if let Some(leaf) = leaf_order(part) {
                if self.try_leaf(&leaf) {
                    return Ok(SubtreeOutcome::FoundAuto);
                }
            }
            return Ok(SubtreeOutcome::Nothing);
        }
        let ci = self.base_cells[depth];
        if ci >= part.len() {
            return Ok(SubtreeOutcome::Nothing);
        }
        let cell = part[ci].clone();
        for v in cell {
            self.tick()?;
            let child = refine(self.graph, individualize(part, ci, v));
            if sizes(&child) != self.traces[depth + 1] {
                continue;
            }
            if let SubtreeOutcome::FoundAuto = self.explore(&child, depth + 1)? {
                return Ok(SubtreeOutcome::FoundAuto);
            }
        }
        Ok(SubtreeOutcome::Nothing)
    }

    /// Orbit of v under the found generators that fix base_choice[..depth]
    /// pointwise.
    fn orbit_under_prefix_stabilizer(&self, depth: usize, v: usize) -> Vec<usize> {
        let fixing: Vec<&Perm> = self
            .found
            .iter()
            .filter(|p| self.base_choice[..depth].iter().all(|&b| p.apply(b) == b))
            .collect();
        let mut seen = vec![v];
        let mut head = 0;
        while head < seen.len() {
            let x = seen[head];
            head += 1;
            for p in &fixing {
                let y = p.apply(x);
                if !seen.contains(&y) {
                    seen.push(y);
                }
                let z = p.inverse().apply(x);
                if !seen.contains(&z) {
                    seen.push(z);
                }
            }
        }
        seen
    }

    /// Walks the spine; at each depth explores every non-canonical image of
    /// the base point modulo orbits of the group found so far.
    fn run(&mut self, root: Partition) -> Result<(), AutosError> {
        let mut spine = vec![root.clone()];
        for depth in 0..self.base_cells.len() {
            let part = spine.last().unwrap().clone();
            let ci = self.base_cells[depth];
            let canonical = self.base_choice[depth];
            let cell = part[ci].clone();
            let mut explored: Vec<usize> = vec![canonical];
            for &v in cell.iter().filter(|&&v| v != canonical) {
                let already =
                    explored.iter().any(|&e| self.orbit_under_prefix_stabilizer(depth, e).contains(&v));
                if already {
                    continue;
                }
                self.tick()?;
                let child = refine(self.graph, individualize(&part, ci, v));
                if sizes(&child) == self.traces[depth + 1] {
                    let _found = self.explore(&child, depth + 1)?;
                }
                explored.push(v);
            }
            // descend the spine canonically
            let child = refine(self.graph, individualize(&part, ci, canonical));
            spine.push(child);
        }
        Ok(())
    }
}

/// Generators of the full color-preserving automorphism group. `budget`
/// bounds the number of refinement steps; exceeding it is an explicit
/// resource error.
pub fn graph_autos(graph: &ColoredGraph, budget: u64) -> Result<PermGroup, AutosError> {
    let root = refine(graph, initial_partition(graph));
    let mut search = Search {
        graph,
        base_cells: Vec::new(),
        base_choice: Vec::new(),
        traces: Vec::new(),
        canonical_leaf: Vec::new(),
        found: Vec::new(),
        steps: 0,
        budget,
    };
    search.traces.clear();
    search.build_canonical(root.clone())?;
    search.run(root)?;
    let gens = search.found;
    // paranoia: every emitted generator must be a genuine automorphism
    for g in &gens {
        debug_assert!(graph.is_automorphism(g));
    }
    Ok(PermGroup::new(graph.n(), gens).expect("validated generators"))
}

/// Colored graph of an incidence structure: color 0 for points, 1 for lines.
pub fn colored_incidence_graph(g: &crate::incidence::IncidenceGraph) -> ColoredGraph {
    let mut colors = vec![0u32; g.n_vertices()];
    for c in colors.iter_mut().skip(g.n_points) {
        *c = 1;
    }
    ColoredGraph::new(g.adj.clone(), colors).expect("sizes match")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn cycle_graph(n: usize) -> ColoredGraph {
        let adj = (0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect();
        ColoredGraph::new(adj, vec![0; n]).unwrap()
    }

    #[test]
    fn hexagon_has_dihedral_group() {
        let g = cycle_graph(6);
        let aut = graph_autos(&g, 1_000_000).unwrap();
        assert_eq!(aut.order(), BigUint::from(12u32));
    }

    #[test]
    fn path_has_single_reflection() {
        let adj = vec![vec![1], vec![0, 2], vec![1]];
        let g = ColoredGraph::new(adj, vec![0, 0, 0]).unwrap();
        let aut = graph_autos(&g, 10_000).unwrap();
        assert_eq!(aut.order(), BigUint::from(2u32));
    }

    #[test]
    fn colors_break_symmetry() {
        // same hexagon, alternating colors: only rotations by even steps and
        // color-preserving reflections survive: order 6
        let mut g = cycle_graph(6);
        g.colors = vec![0, 1, 0, 1, 0, 1];
        let aut = graph_autos(&g, 100_000).unwrap();
        assert_eq!(aut.order(), BigUint::from(6u32));
    }

    #[test]
    fn complete_bipartite_k23() {
        let adj = vec![vec![2, 3, 4], vec![2, 3, 4], vec![0, 1], vec![0, 1], vec![0, 1]];
        let g = ColoredGraph::new(adj, vec![0; 5]).unwrap();
        let aut = graph_autos(&g, 100_000).unwrap();
        // S2 x S3
        assert_eq!(aut.order(), BigUint::from(12u32));
    }

    #[test]
    fn budget_error_is_reported() {
        let g = cycle_graph(6);
        match graph_autos(&g, 1) {
            Err(AutosError::BudgetExceeded(1)) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
