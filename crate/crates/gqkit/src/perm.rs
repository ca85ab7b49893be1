//! Permutation groups on explicit domains: orbits, a deterministic
//! Schreier-Sims base/strong-generating-set engine, stabilizers, local
//! arc-transitivity tests on incidence graphs, and the PRM v1 generator file
//! format.
//!
//! Composition is right action: `(g then h)` maps x to h(g(x)). Base points
//! are chosen as the smallest moved domain point and all closure loops scan
//! in index order, so repeated runs produce identical chains.

pub mod autos;
pub mod matgen;

use crate::incidence::IncidenceGraph;
use num_bigint::BigUint;
use num_traits::One;
use std::collections::HashMap;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("images of length {got} do not match domain size {want}")]
    WrongDomain { got: usize, want: usize },
    #[error("images are not a bijection: value {0} repeats")]
    NotABijection(usize),
    #[error("point {0} out of domain range {1}")]
    OutOfRange(usize, usize),
    #[error("generator {gen_index} is not a graph automorphism: edge ({u},{v}) maps to a non-edge")]
    NotAnAutomorphism { gen_index: usize, u: usize, v: usize },
    #[error("generator {gen_index} does not preserve the vertex colors at {v}")]
    ColorNotPreserved { gen_index: usize, v: usize },
    #[error("bad PRM file: {0}")]
    BadPrm(String),
}

/// A permutation of {0, .., n-1} stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { images: (0..n as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Perm, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            let im = im as usize;
            if im >= n {
                return Err(PermError::OutOfRange(im, n));
            }
            if seen[im] {
                return Err(PermError::NotABijection(im));
            }
            seen[im] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }

    /// x^(self · other) = other(self(x)).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: self.images.iter().map(|&im| other.images[im as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &im)| *i as u32 != im).map(|(i, _)| i)
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }
}

/// Chain level: base point, the strong generators stored at this depth
/// (those fixing all earlier base points but moving this one or deeper),
/// and the fundamental orbit with transversal representatives.
#[derive(Debug, Clone)]
struct Level {
    point: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    transversal: HashMap<usize, Perm>,
}

#[derive(Debug, Clone)]
pub struct Bsgs {
    domain: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        let mut o = BigUint::one();
        for l in &self.levels {
            o *= BigUint::from(l.orbit.len());
        }
        o
    }

    /// Strong generators fixing the first `depth` base points pointwise.
    fn gens_at(&self, depth: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        for l in &self.levels[depth..] {
            out.extend(l.gens.iter().cloned());
        }
        out
    }

    /// Strips g through the chain; returns the residue and the level reached.
    fn strip(&self, mut g: Perm) -> (Perm, usize) {
        for (i, level) in self.levels.iter().enumerate() {
            let image = g.apply(level.point);
            match level.transversal.get(&image) {
                Some(rep) => g = g.compose(&rep.inverse()),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.domain {
            return false;
        }
        let (r, _) = self.strip(g.clone());
        r.is_identity()
    }
}

fn recompute_orbit(level: &mut Level, gens: &[Perm], domain: usize) {
    level.orbit.clear();
    level.transversal.clear();
    level.orbit.push(level.point);
    level.transversal.insert(level.point, Perm::identity(domain));
    let mut head = 0;
    while head < level.orbit.len() {
        let beta = level.orbit[head];
        head += 1;
        let rep = level.transversal[&beta].clone();
        for g in gens {
            let img = g.apply(beta);
            if !level.transversal.contains_key(&img) {
                level.orbit.push(img);
                level.transversal.insert(img, rep.compose(g));
            }
        }
    }
}

/// Deterministic Schreier-Sims. `forced_first` pins the first base point
/// (used by stabilizer computations); otherwise the base follows the
/// smallest-moved-point rule.
fn build_bsgs(domain: usize, gens: &[Perm], forced_first: Option<usize>) -> Bsgs {
    let mut bsgs = Bsgs { domain, levels: Vec::new() };
    if let Some(b) = forced_first {
        bsgs.levels.push(Level {
            point: b,
            gens: Vec::new(),
            orbit: vec![b],
            transversal: HashMap::new(),
        });
    }
    for g in gens {
        add_generator(&mut bsgs, g.clone());
    }
    close(&mut bsgs);
    bsgs
}

/// Stores a nontrivial residue at the deepest level whose base prefix it
/// fixes, extending the base if it fixes every current base point.
fn add_generator(bsgs: &mut Bsgs, g: Perm) {
    if g.is_identity() {
        return;
    }
    let (r, lvl) = bsgs.strip(g);
    if r.is_identity() {
        return;
    }
    let mut depth = lvl;
    // the residue may fix deeper base points than where stripping stopped;
    // store it at the deepest prefix it fixes pointwise
    while depth < bsgs.levels.len() && r.apply(bsgs.levels[depth].point) == bsgs.levels[depth].point
    {
        depth += 1;
    }
    if depth == bsgs.levels.len() {
        let b = r.smallest_moved_point().expect("nontrivial");
        bsgs.levels.push(Level {
            point: b,
            gens: Vec::new(),
            orbit: vec![b],
            transversal: HashMap::new(),
        });
        // keep depth pointing at the new last level only if r moves its point;
        // r moves b by construction
        let last = bsgs.levels.len() - 1;
        bsgs.levels[last].gens.push(r);
    } else {
        bsgs.levels[depth].gens.push(r);
    }
}

/// Verifies Schreier closure bottom-up until every level is stable.
fn close(bsgs: &mut Bsgs) {
    if bsgs.levels.is_empty() {
        return;
    }
    let mut i = bsgs.levels.len() - 1;
    loop {
        let gens_i = bsgs.gens_at(i);
        {
            let domain = bsgs.domain;
            let level = &mut bsgs.levels[i];
            recompute_orbit(level, &gens_i, domain);
        }
        let mut dirty_level: Option<usize> = None;
        'scan: for oi in 0..bsgs.levels[i].orbit.len() {
            let beta = bsgs.levels[i].orbit[oi];
            let u_beta = bsgs.levels[i].transversal[&beta].clone();
            for s in &gens_i {
                let img = s.apply(beta);
                let u_img = bsgs.levels[i].transversal[&img].clone();
                let schreier = u_beta.compose(s).compose(&u_img.inverse());
                if schreier.is_identity() {
                    continue;
                }
                // strip through the chain below level i
                let mut r = schreier;
                let mut j = i + 1;
                while j < bsgs.levels.len() {
                    let image = r.apply(bsgs.levels[j].point);
                    match bsgs.levels[j].transversal.get(&image) {
                        Some(rep) => {
                            r = r.compose(&rep.inverse());
                            j += 1;
                        }
                        None => break,
                    }
                }
                if r.is_identity() {
                    continue;
                }
                let mut depth = j;
                while depth < bsgs.levels.len()
                    && r.apply(bsgs.levels[depth].point) == bsgs.levels[depth].point
                {
                    depth += 1;
                }
                if depth == bsgs.levels.len() {
                    let b = r.smallest_moved_point().expect("nontrivial");
                    bsgs.levels.push(Level {
                        point: b,
                        gens: Vec::new(),
                        orbit: vec![b],
                        transversal: HashMap::new(),
                    });
                }
                bsgs.levels[depth].gens.push(r);
                dirty_level = Some(depth);
                break 'scan;
            }
        }
        match dirty_level {
            Some(j) => i = j,
            None => {
                if i == 0 {
                    break;
                }
                i -= 1;
            }
        }
    }
}

/// A finitely generated permutation group with a lazily built BSGS.
#[derive(Debug)]
pub struct PermGroup {
    domain: usize,
    gens: Vec<Perm>,
    bsgs: OnceLock<Bsgs>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup { domain: self.domain, gens: self.gens.clone(), bsgs: OnceLock::new() }
    }
}

impl PermGroup {
    pub fn new(domain: usize, gens: Vec<Perm>) -> Result<PermGroup, PermError> {
        for g in &gens {
            if g.degree() != domain {
                return Err(PermError::WrongDomain { got: g.degree(), want: domain });
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup { domain, gens, bsgs: OnceLock::new() })
    }

    pub fn trivial(domain: usize) -> PermGroup {
        PermGroup { domain, gens: Vec::new(), bsgs: OnceLock::new() }
    }

    pub fn domain_size(&self) -> usize {
        self.domain
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    fn chain(&self) -> &Bsgs {
        self.bsgs.get_or_init(|| build_bsgs(self.domain, &self.gens, None))
    }

    /// Orbit of a point, ascending.
    pub fn orbit(&self, x: usize) -> Result<Vec<usize>, PermError> {
        if x >= self.domain {
            return Err(PermError::OutOfRange(x, self.domain));
        }
        let mut seen = vec![false; self.domain];
        seen[x] = true;
        let mut queue = vec![x];
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            head += 1;
            for g in &self.gens {
                let im = g.apply(p);
                if !seen[im] {
                    seen[im] = true;
                    queue.push(im);
                }
            }
        }
        queue.sort_unstable();
        Ok(queue)
    }

    /// Orbit of a tuple under the coordinatewise action, as a sorted set.
    pub fn orbit_on_tuples(&self, tuple: &[usize]) -> Result<Vec<Vec<usize>>, PermError> {
        for &x in tuple {
            if x >= self.domain {
                return Err(PermError::OutOfRange(x, self.domain));
            }
        }
        let start: Vec<u32> = tuple.iter().map(|&x| x as u32).collect();
        let mut seen = std::collections::HashSet::new();
        seen.insert(start.clone());
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let t = queue[head].clone();
            head += 1;
            for g in &self.gens {
                let im: Vec<u32> = t.iter().map(|&x| g.images()[x as usize]).collect();
                if seen.insert(im.clone()) {
                    queue.push(im);
                }
            }
        }
        let mut out: Vec<Vec<usize>> =
            seen.into_iter().map(|t| t.into_iter().map(|x| x as usize).collect()).collect();
        out.sort();
        Ok(out)
    }

    /// Exact group order from the stabilizer chain.
    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Base and fundamental orbit lengths, for determinism checks.
    pub fn base_and_orbit_lengths(&self) -> (Vec<usize>, Vec<usize>) {
        let c = self.chain();
        (c.base(), c.orbit_lengths())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    /// Point stabilizer as a new group (strong generators of the chain built
    /// with x as the first base point).
    pub fn stabilizer(&self, x: usize) -> Result<PermGroup, PermError> {
        if x >= self.domain {
            return Err(PermError::OutOfRange(x, self.domain));
        }
        let chain = build_bsgs(self.domain, &self.gens, Some(x));
        let gens = chain.gens_at(1);
        // drop duplicates while keeping deterministic order
        let mut seen = std::collections::HashSet::new();
        let gens: Vec<Perm> = gens.into_iter().filter(|g| seen.insert(g.clone())).collect();
        PermGroup::new(self.domain, gens)
    }

    /// Serializes generators in the PRM v1 format.
    pub fn to_prm(&self) -> String {
        let mut out = format!("prm 1 {} {}\n", self.domain, self.gens.len());
        for g in &self.gens {
            let words: Vec<String> = g.images().iter().map(|x| x.to_string()).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_prm(text: &str) -> Result<PermGroup, PermError> {
        let mut it = text.lines();
        let header = it.next().ok_or_else(|| PermError::BadPrm("empty file".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 4 || parts[0] != "prm" || parts[1] != "1" {
            return Err(PermError::BadPrm(format!("bad header {header:?}")));
        }
        let domain: usize =
            parts[2].parse().map_err(|e| PermError::BadPrm(format!("domain: {e}")))?;
        let n_gens: usize =
            parts[3].parse().map_err(|e| PermError::BadPrm(format!("generator count: {e}")))?;
        let mut gens = Vec::with_capacity(n_gens);
        for raw in it {
            if raw.trim().is_empty() {
                continue;
            }
            let images: Result<Vec<u32>, _> =
                raw.split_whitespace().map(|w| w.parse::<u32>()).collect();
            let images = images.map_err(|e| PermError::BadPrm(format!("image: {e}")))?;
            gens.push(Perm::from_images(images)?);
        }
        if gens.len() != n_gens {
            return Err(PermError::BadPrm(format!(
                "header says {} generators, found {}",
                n_gens,
                gens.len()
            )));
        }
        PermGroup::new(domain, gens)
    }
}

/// Checks that every generator maps edges to edges and preserves the
/// point/line biparts of an incidence graph.
pub fn verify_graph_action(graph: &IncidenceGraph, group: &PermGroup) -> Result<(), PermError> {
    let n = graph.n_vertices();
    for (gi, g) in group.generators().iter().enumerate() {
        if g.degree() != n {
            return Err(PermError::WrongDomain { got: g.degree(), want: n });
        }
        for v in 0..n {
            if graph.is_point_vertex(v) != graph.is_point_vertex(g.apply(v)) {
                return Err(PermError::ColorNotPreserved { gen_index: gi, v });
            }
            for &w in &graph.adj[v] {
                if !graph.has_edge(g.apply(v), g.apply(w)) {
                    return Err(PermError::NotAnAutomorphism { gen_index: gi, u: v, v: w });
                }
            }
        }
    }
    Ok(())
}

/// All s-arcs starting at `start`: paths of s+1 vertices, consecutive ones
/// adjacent, with no immediate backtracking.
pub fn arcs_from(graph: &IncidenceGraph, start: usize, s: usize) -> Vec<Vec<usize>> {
    let mut arcs = Vec::new();
    let mut current = vec![start];
    fn rec(graph: &IncidenceGraph, s: usize, current: &mut Vec<usize>, arcs: &mut Vec<Vec<usize>>) {
        if current.len() == s + 1 {
            arcs.push(current.clone());
            return;
        }
        let last = *current.last().unwrap();
        let forbid = if current.len() >= 2 { Some(current[current.len() - 2]) } else { None };
        for &w in &graph.adj[last] {
            if Some(w) == forbid {
                continue;
            }
            current.push(w);
            rec(graph, s, current, arcs);
            current.pop();
        }
    }
    rec(graph, s, &mut current, &mut arcs);
    arcs
}

/// Local s-arc-transitivity: the group must act as color-preserving
/// automorphisms, be transitive on each bipart, and have a single orbit on
/// the s-arcs starting at one representative vertex per bipart.
pub fn is_locally_s_arc_transitive(
    graph: &IncidenceGraph,
    group: &PermGroup,
    s: usize,
) -> Result<bool, PermError> {
    verify_graph_action(graph, group)?;
    let n_p = graph.n_points;
    let n_l = graph.n_lines;
    if n_p == 0 || n_l == 0 {
        return Ok(false);
    }
    if group.orbit(0)?.len() != n_p || group.orbit(n_p)?.len() != n_l {
        return Ok(false);
    }
    for rep in [0, n_p] {
        let arcs = arcs_from(graph, rep, s);
        if arcs.is_empty() {
            return Ok(false);
        }
        let orbit = group.orbit_on_tuples(&arcs[0])?;
        let orbit_set: std::collections::HashSet<&Vec<usize>> = orbit.iter().collect();
        if !arcs.iter().all(|a| orbit_set.contains(a)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Local 2-transitivity of a GQ through its incidence graph: the vertex
/// stabilizer at one representative point (and dually one line) must be
/// transitive on ordered pairs of distinct neighbors.
pub fn is_locally_2_transitive_gq(
    graph: &IncidenceGraph,
    group: &PermGroup,
) -> Result<bool, PermError> {
    verify_graph_action(graph, group)?;
    let n_p = graph.n_points;
    if group.orbit(0)?.len() != n_p || group.orbit(n_p)?.len() != graph.n_lines {
        return Ok(false);
    }
    for rep in [0, n_p] {
        let nbrs = &graph.adj[rep];
        if nbrs.len() < 2 {
            return Ok(false);
        }
        let stab = group.stabilizer(rep)?;
        let pair = [nbrs[0], nbrs[1]];
        let orbit = stab.orbit_on_tuples(&pair)?;
        let want = nbrs.len() * (nbrs.len() - 1);
        if orbit.len() != want {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_gq35;
    use crate::incidence::incidence_graph;

    fn cycle(n: usize) -> Perm {
        Perm::from_images((0..n).map(|i| ((i + 1) % n) as u32).collect()).unwrap()
    }

    #[test]
    fn perm_validation() {
        assert!(Perm::from_images(vec![0, 1, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3]).is_err());
        let p = Perm::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Perm::identity(3));
    }

    #[test]
    fn orbit_identity_and_cycle() {
        let triv = PermGroup::trivial(5);
        assert_eq!(triv.orbit(3).unwrap(), vec![3]);
        let c5 = PermGroup::new(5, vec![cycle(5)]).unwrap();
        assert_eq!(c5.orbit(0).unwrap(), vec![0, 1, 2, 3, 4]);
        assert!(c5.orbit(7).is_err());
    }

    #[test]
    fn symmetric_group_order() {
        // S4 from a transposition and a 4-cycle
        let t = Perm::from_images(vec![1, 0, 2, 3]).unwrap();
        let s4 = PermGroup::new(4, vec![t, cycle(4)]).unwrap();
        assert_eq!(s4.order(), BigUint::from(24u32));
        assert_eq!(PermGroup::trivial(4).order(), BigUint::one());
    }

    #[test]
    fn stabilizer_orders_multiply() {
        let t = Perm::from_images(vec![1, 0, 2, 3, 4]).unwrap();
        let g = PermGroup::new(5, vec![t, cycle(5)]).unwrap();
        assert_eq!(g.order(), BigUint::from(120u32));
        let stab = g.stabilizer(0).unwrap();
        assert_eq!(stab.order(), BigUint::from(24u32));
        for p in stab.generators() {
            assert_eq!(p.apply(0), 0);
        }
        // 5-cycle group: point stabilizer is trivial
        let c5 = PermGroup::new(5, vec![cycle(5)]).unwrap();
        assert_eq!(c5.stabilizer(0).unwrap().order(), BigUint::one());
    }

    #[test]
    fn orbit_stabilizer_identity_randomized() {
        // deterministic pseudo-random subgroups of S8
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..25 {
            let n = 8;
            let mut gens = Vec::new();
            for _ in 0..2 {
                // random permutation by Fisher-Yates on [0..n)
                let mut v: Vec<u32> = (0..n as u32).collect();
                for i in (1..n).rev() {
                    let j = (next() % (i as u64 + 1)) as usize;
                    v.swap(i, j);
                }
                gens.push(Perm::from_images(v).unwrap());
            }
            let g = PermGroup::new(n, gens).unwrap();
            let x = (next() % n as u64) as usize;
            let orbit = g.orbit(x).unwrap();
            let stab = g.stabilizer(x).unwrap();
            assert_eq!(g.order(), stab.order() * BigUint::from(orbit.len()));
        }
    }

    #[test]
    fn bsgs_deterministic() {
        let t = Perm::from_images(vec![1, 0, 2, 3, 4, 5]).unwrap();
        let g1 = PermGroup::new(6, vec![t.clone(), cycle(6)]).unwrap();
        let g2 = PermGroup::new(6, vec![t, cycle(6)]).unwrap();
        assert_eq!(g1.base_and_orbit_lengths(), g2.base_and_orbit_lengths());
        assert_eq!(g1.order(), g2.order());
    }

    #[test]
    fn membership_via_sifting() {
        let t = Perm::from_images(vec![1, 0, 2, 3]).unwrap();
        let a4_gens = vec![
            Perm::from_images(vec![1, 2, 0, 3]).unwrap(),
            Perm::from_images(vec![0, 2, 3, 1]).unwrap(),
        ];
        let a4 = PermGroup::new(4, a4_gens).unwrap();
        assert_eq!(a4.order(), BigUint::from(12u32));
        assert!(!a4.contains(&t)); // odd permutation
        assert!(a4.contains(&Perm::from_images(vec![1, 0, 3, 2]).unwrap()));
    }

    #[test]
    fn tuple_orbits() {
        let c5 = PermGroup::new(5, vec![cycle(5)]).unwrap();
        let orb = c5.orbit_on_tuples(&[0, 1]).unwrap();
        assert_eq!(orb.len(), 5);
        assert!(orb.contains(&vec![4, 0]));
    }

    #[test]
    fn prm_round_trip() {
        let t = Perm::from_images(vec![1, 0, 2, 3]).unwrap();
        let g = PermGroup::new(4, vec![t, cycle(4)]).unwrap();
        let text = g.to_prm();
        let back = PermGroup::from_prm(&text).unwrap();
        assert_eq!(back.to_prm(), text);
        assert_eq!(back.order(), g.order());
    }

    #[test]
    fn translations_of_gq35_are_not_locally_2_transitive() {
        let gq = build_gq35();
        let graph = incidence_graph(&gq);
        // the 64 translations act on points by x -> x + v and permute lines
        let n_p = gq.n_points();
        let n = n_p + gq.n_lines();
        let mut line_index = std::collections::HashMap::new();
        for (li, line) in gq.lines().iter().enumerate() {
            line_index.insert(line.clone(), li);
        }
        let mut gens = Vec::new();
        for v in [1usize, 4, 16] {
            // addition in GF(4)^3 via nim-addition of base-4 digits (char 2)
            let add = |a: usize, b: usize| -> usize {
                let mut out = 0;
                let mut mult = 1;
                let (mut a, mut b) = (a, b);
                for _ in 0..3 {
                    out += ((a % 4) ^ (b % 4)) * mult;
                    a /= 4;
                    b /= 4;
                    mult *= 4;
                }
                out
            };
            let mut images = vec![0u32; n];
            for p in 0..n_p {
                images[p] = add(p, v) as u32;
            }
            for (li, line) in gq.lines().iter().enumerate() {
                let mut mapped: Vec<usize> = line.iter().map(|&p| add(p, v)).collect();
                mapped.sort_unstable();
                images[n_p + li] = (n_p + line_index[&mapped]) as u32;
            }
            gens.push(Perm::from_images(images).unwrap());
        }
        let translations = PermGroup::new(n, gens).unwrap();
        assert_eq!(translations.order(), BigUint::from(64u32));
        assert!(!is_locally_2_transitive_gq(&graph, &translations).unwrap());
        // and with the trivial group, not even locally 1-arc-transitive
        let triv = PermGroup::trivial(n);
        assert!(!is_locally_s_arc_transitive(&graph, &triv, 1).unwrap());
    }
}
