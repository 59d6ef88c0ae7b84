//! Automorphism groups and canonical forms via individualization-refinement.
//!
//! The search refines an ordered partition to its coarsest equitable
//! refinement, individualizes one vertex of the first smallest non-singleton
//! cell, and recurses. Discrete partitions are leaves; the lexicographically
//! largest leaf certificate defines the canonical labeling, and pairs of
//! leaves with equal certificates yield automorphisms. Discovered
//! automorphisms prune sibling branches and, through a union-find, produce
//! the vertex orbits. The exact group order comes from a stabilizer chain
//! built over the discovered generators.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use std::collections::HashMap;

/// Bijection on `0..n`, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn from_image(image: Vec<usize>) -> Option<Permutation> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` after `other`: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        Permutation { image }
    }

    /// Image of a vertex bitmask.
    pub fn apply_mask(&self, mut mask: u64) -> u64 {
        let mut out = 0u64;
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            out |= 1 << self.image[v];
            mask &= mask - 1;
        }
        out
    }
}

/// True iff `p` preserves adjacency in both directions.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> bool {
    if p.len() != g.vertex_count() {
        return false;
    }
    (0..g.vertex_count()).all(|u| p.apply_mask(g.neighbors(u)) == g.neighbors(p.apply(u)))
}

/// Ordered partition of `0..n` into non-empty cells; cell order is significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    cells: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// The unit partition: one cell holding every vertex.
    pub fn unit(n: usize) -> VertexPartition {
        VertexPartition {
            cells: vec![(0..n).collect()],
        }
    }

    pub fn from_cells(cells: Vec<Vec<usize>>) -> VertexPartition {
        let mut cells = cells;
        for c in &mut cells {
            c.sort_unstable();
        }
        VertexPartition { cells }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }
}

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0u64, |m, &v| m | (1 << v))
}

/// Coarsest equitable refinement of `p`: within every cell, each vertex has
/// the same number of neighbors in every cell. Idempotent, never merges
/// cells, and fragment order depends only on neighbor counts, so the result
/// is isomorphism-invariant.
pub fn color_refine(g: &Graph, p: &VertexPartition) -> VertexPartition {
    let mut cells = p.cells.clone();
    'outer: loop {
        for si in 0..cells.len() {
            let splitter = cell_mask(&cells[si]);
            for ci in 0..cells.len() {
                if cells[ci].len() <= 1 {
                    continue;
                }
                let mut groups: std::collections::BTreeMap<u32, Vec<usize>> =
                    std::collections::BTreeMap::new();
                for &v in &cells[ci] {
                    let key = (g.neighbors(v) & splitter).count_ones();
                    groups.entry(key).or_default().push(v);
                }
                if groups.len() > 1 {
                    let frags: Vec<Vec<usize>> = groups.into_values().collect();
                    cells.splice(ci..=ci, frags);
                    continue 'outer;
                }
            }
        }
        return VertexPartition { cells };
    }
}

fn individualize(p: &VertexPartition, cell_index: usize, v: usize) -> VertexPartition {
    let mut cells = Vec::with_capacity(p.cells.len() + 1);
    for (i, c) in p.cells.iter().enumerate() {
        if i == cell_index {
            cells.push(vec![v]);
            cells.push(c.iter().copied().filter(|&u| u != v).collect());
        } else {
            cells.push(c.clone());
        }
    }
    VertexPartition { cells }
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // lower root wins, keeping orbit representatives deterministic
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

type Leaf = (Vec<u64>, Vec<usize>); // (certificate, position -> vertex labeling)

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Permutation>,
    dsu: Dsu,
}

impl<'a> Search<'a> {
    fn run(g: &'a Graph) -> Search<'a> {
        let n = g.vertex_count();
        let mut s = Search {
            g,
            n,
            first: None,
            best: None,
            autos: Vec::new(),
            dsu: Dsu::new(n),
        };
        let root = color_refine(g, &VertexPartition::unit(n));
        let mut fixed = Vec::new();
        s.node(root, &mut fixed);
        s
    }

    fn node(&mut self, p: VertexPartition, fixed: &mut Vec<usize>) {
        if p.is_discrete() {
            let labeling: Vec<usize> = p.cells.iter().map(|c| c[0]).collect();
            self.leaf(labeling);
            return;
        }
        let target = {
            let min_len = p
                .cells
                .iter()
                .map(|c| c.len())
                .filter(|&l| l > 1)
                .min()
                .expect("non-discrete partition has a non-singleton cell");
            p.cells.iter().position(|c| c.len() == min_len).unwrap()
        };
        let candidates = p.cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &candidates {
            if self.equivalent_to_tried(v, &tried, fixed) {
                continue;
            }
            let child = color_refine(self.g, &individualize(&p, target, v));
            fixed.push(v);
            self.node(child, fixed);
            fixed.pop();
            tried.push(v);
        }
    }

    /// Sibling pruning: skip `v` when an already-discovered automorphism
    /// fixing every individualized vertex maps a tried candidate to `v`.
    fn equivalent_to_tried(&self, v: usize, tried: &[usize], fixed: &[usize]) -> bool {
        if tried.is_empty() {
            return false;
        }
        let gens: Vec<&Permutation> = self
            .autos
            .iter()
            .filter(|a| fixed.iter().all(|&x| a.apply(x) == x))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut d = Dsu::new(self.n);
        for a in &gens {
            for x in 0..self.n {
                d.union(x, a.apply(x));
            }
        }
        let rv = d.find(v);
        tried.iter().any(|&u| d.find(u) == rv)
    }

    fn certificate(&self, labeling: &[usize]) -> Vec<u64> {
        // position i holds vertex labeling[i]; relabel so that vertex -> position
        let mut pos = vec![0usize; self.n];
        for (i, &v) in labeling.iter().enumerate() {
            pos[v] = i;
        }
        let relabeled = self.g.relabeled(&pos);
        (0..self.n).map(|i| relabeled.neighbors(i)).collect()
    }

    fn leaf(&mut self, labeling: Vec<usize>) {
        let cert = self.certificate(&labeling);
        if let Some((fc, fl)) = &self.first {
            if *fc == cert {
                let fl = fl.clone();
                self.record_automorphism(&fl, &labeling);
            }
        } else {
            self.first = Some((cert.clone(), labeling.clone()));
        }
        match &self.best {
            None => self.best = Some((cert, labeling)),
            Some((bc, bl)) => {
                if cert > *bc {
                    self.best = Some((cert, labeling));
                } else if cert == *bc {
                    let bl = bl.clone();
                    self.record_automorphism(&bl, &labeling);
                }
            }
        }
    }

    /// Two leaves with equal certificates: vertex `a[i]` maps to `b[i]`.
    fn record_automorphism(&mut self, a: &[usize], b: &[usize]) {
        let mut image = vec![0usize; self.n];
        for i in 0..self.n {
            image[a[i]] = b[i];
        }
        let p = Permutation::from_image(image).expect("leaf labelings are bijections");
        if p.is_identity() {
            return;
        }
        assert!(
            is_automorphism(self.g, &p),
            "internal error: refinement produced a non-automorphism"
        );
        for x in 0..self.n {
            self.dsu.union(x, p.apply(x));
        }
        if !self.autos.contains(&p) {
            self.autos.push(p);
        }
    }
}

/// A stabilizer chain over a generator set; gives the exact group order and
/// unique-decomposition enumeration of all elements.
struct StabChain {
    n: usize,
    levels: Vec<ChainLevel>,
}

struct ChainLevel {
    point: usize,
    gens: Vec<Permutation>,
    /// orbit element -> coset representative mapping `point` to it
    transversal: HashMap<usize, Permutation>,
    /// orbit in discovery order, for deterministic enumeration
    orbit: Vec<usize>,
}

impl ChainLevel {
    fn new(n: usize, point: usize) -> ChainLevel {
        let mut transversal = HashMap::new();
        transversal.insert(point, Permutation::identity(n));
        ChainLevel {
            point,
            gens: Vec::new(),
            transversal,
            orbit: vec![point],
        }
    }

    /// `gens` must be every generator of this level's group, i.e. the union
    /// over this and all deeper levels.
    fn rebuild_orbit(&mut self, n: usize, gens: &[Permutation]) {
        self.transversal.clear();
        self.orbit.clear();
        self.transversal.insert(self.point, Permutation::identity(n));
        self.orbit.push(self.point);
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            let rep = self.transversal[&x].clone();
            for gen in gens {
                let y = gen.apply(x);
                if !self.transversal.contains_key(&y) {
                    self.transversal.insert(y, gen.compose(&rep));
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

impl StabChain {
    fn from_generators(n: usize, gens: &[Permutation]) -> StabChain {
        let mut chain = StabChain {
            n,
            levels: Vec::new(),
        };
        for g in gens {
            let (res, level) = chain.strip(g.clone(), 0);
            if !res.is_identity() {
                chain.insert_at(level, res);
            }
        }
        chain.close();
        chain
    }

    /// Multiply out inverse transversal representatives until stuck.
    fn strip(&self, mut p: Permutation, from: usize) -> (Permutation, usize) {
        for l in from..self.levels.len() {
            if p.is_identity() {
                return (p, l);
            }
            let x = p.apply(self.levels[l].point);
            match self.levels[l].transversal.get(&x) {
                Some(rep) => p = rep.inverse().compose(&p),
                None => return (p, l),
            }
        }
        (p, self.levels.len())
    }

    fn insert_at(&mut self, level: usize, p: Permutation) {
        debug_assert!(!p.is_identity());
        if level == self.levels.len() {
            let b = (0..self.n)
                .find(|&x| p.apply(x) != x)
                .expect("non-identity permutation moves a point");
            self.levels.push(ChainLevel::new(self.n, b));
        }
        self.levels[level].gens.push(p);
    }

    /// Generators of the group at `level`: this level and every deeper one.
    fn gens_from(&self, level: usize) -> Vec<Permutation> {
        self.levels[level..]
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    fn rebuild_all(&mut self) {
        for l in (0..self.levels.len()).rev() {
            let gens = self.gens_from(l);
            self.levels[l].rebuild_orbit(self.n, &gens);
        }
    }

    /// Sift Schreier generators until every one strips to the identity.
    /// Each pass works on freshly rebuilt orbits, and every insertion grows
    /// some orbit or adds a level, so the loop terminates.
    fn close(&mut self) {
        loop {
            self.rebuild_all();
            let mut pending: Option<(usize, Permutation)> = None;
            'scan: for l in 0..self.levels.len() {
                let gens = self.gens_from(l);
                let lvl = &self.levels[l];
                for &x in &lvl.orbit {
                    let rep = &lvl.transversal[&x];
                    for gen in &gens {
                        let y = gen.apply(x);
                        let rep_y = &lvl.transversal[&y];
                        let sch = rep_y.inverse().compose(&gen.compose(rep));
                        let (res, level) = self.strip(sch, l + 1);
                        if !res.is_identity() {
                            pending = Some((level, res));
                            break 'scan;
                        }
                    }
                }
            }
            match pending {
                Some((level, res)) => self.insert_at(level, res),
                None => return,
            }
        }
    }

    fn order(&self) -> Result<u128> {
        let mut order: u128 = 1;
        for lvl in &self.levels {
            order = order
                .checked_mul(lvl.transversal.len() as u128)
                .ok_or(Error::Overflow)?;
        }
        Ok(order)
    }

    /// Every group element exactly once, as products of coset representatives.
    fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.n)];
        for lvl in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * lvl.orbit.len());
            for &x in &lvl.orbit {
                let rep = &lvl.transversal[&x];
                for e in &out {
                    next.push(rep.compose(e));
                }
            }
            out = next;
        }
        out
    }
}

/// Generators, exact order, and the vertex-orbit partition of `Aut(G)`.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    pub generators: Vec<Permutation>,
    pub order: u128,
    pub orbits: Vec<Vec<usize>>,
}

/// One canonical-labeling search, shared by every consumer.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub group: AutomorphismGroup,
    /// position -> original vertex of the canonical labeling
    pub canonical_labeling: Vec<usize>,
    pub canonical_graph: Graph,
    pub canonical_g6: String,
}

/// Runs the IR search once and packages group, orbits, and canonical form.
pub fn analyze(g: &Graph) -> Result<Analysis> {
    let n = g.vertex_count();
    let mut search = Search::run(g);
    let (_, canonical_labeling) = search
        .best
        .take()
        .expect("search on a non-empty graph reaches a leaf");
    let mut pos = vec![0usize; n];
    for (i, &v) in canonical_labeling.iter().enumerate() {
        pos[v] = i;
    }
    let canonical_graph = g.relabeled(&pos);
    let canonical_g6 = graph6::emit(&canonical_graph);

    let chain = StabChain::from_generators(n, &search.autos);
    let order = chain.order()?;
    let mut dsu = search.dsu;
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut root_to_cell: HashMap<usize, usize> = HashMap::new();
    for v in 0..n {
        let r = dsu.find(v);
        match root_to_cell.get(&r) {
            Some(&i) => cells[i].push(v),
            None => {
                root_to_cell.insert(r, cells.len());
                cells.push(vec![v]);
            }
        }
    }
    cells.sort_by_key(|c| c[0]);
    Ok(Analysis {
        group: AutomorphismGroup {
            generators: search.autos,
            order,
            orbits: cells,
        },
        canonical_labeling,
        canonical_graph,
        canonical_g6,
    })
}

/// Full automorphism group: generators, exact order, vertex orbits.
pub fn automorphism_group(g: &Graph) -> Result<AutomorphismGroup> {
    Ok(analyze(g)?.group)
}

/// Vertex orbits under the natural action, cells sorted by minimum id.
pub fn orbits(g: &Graph) -> Result<Vec<Vec<usize>>> {
    Ok(analyze(g)?.group.orbits)
}

/// Cap for materializing every automorphism.
pub const ENUMERATION_CAP: usize = 10;

/// Every automorphism exactly once. Capped: the full group is only needed
/// for the double-sum GP cross-check on desk-scale graphs.
pub fn all_automorphisms(g: &Graph) -> Result<Vec<Permutation>> {
    let n = g.vertex_count();
    if n > ENUMERATION_CAP {
        return Err(Error::EnumerationCap(ENUMERATION_CAP));
    }
    let analysis = analyze(g)?;
    let chain = StabChain::from_generators(n, &analysis.group.generators);
    let elements = chain.elements();
    debug_assert_eq!(elements.len() as u128, analysis.group.order);
    Ok(elements)
}

/// Labeling-independent certificate: the graph6 string of the canonically
/// relabeled graph. Equal iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<String> {
    Ok(analyze(g)?.canonical_g6)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_automorphisms(g: &Graph) -> Vec<Permutation> {
        let n = g.vertex_count();
        let mut out = Vec::new();
        let mut image: Vec<usize> = (0..n).collect();
        permute(&mut image, 0, &mut |p| {
            let perm = Permutation::from_image(p.to_vec()).unwrap();
            if is_automorphism(g, &perm) {
                out.push(perm);
            }
        });
        out
    }

    fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, visit);
            items.swap(k, i);
        }
    }

    fn brute_force_orbits(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.vertex_count();
        let autos = brute_force_automorphisms(g);
        let mut d = Dsu::new(n);
        for a in &autos {
            for x in 0..n {
                d.union(x, a.apply(x));
            }
        }
        let mut map: HashMap<usize, Vec<usize>> = HashMap::new();
        for v in 0..n {
            map.entry(d.find(v)).or_default().push(v);
        }
        let mut cells: Vec<Vec<usize>> = map.into_values().collect();
        cells.sort_by_key(|c| c[0]);
        cells
    }

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn refine_regular_graph_is_no_op() {
        let g = c5();
        let p = color_refine(&g, &VertexPartition::unit(5));
        assert_eq!(p.cells(), &[vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn refine_p3_splits_by_degree() {
        let p = color_refine(&p3(), &VertexPartition::unit(3));
        assert_eq!(p.cells(), &[vec![0, 2], vec![1]]);
    }

    #[test]
    fn refine_star_plus_edge() {
        // degrees 4,1,2,2,1: center / leaves / triangle pair
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (2, 3)]).unwrap();
        let p = color_refine(&g, &VertexPartition::unit(5));
        let mut cells: Vec<Vec<usize>> = p.cells().to_vec();
        cells.sort();
        assert_eq!(cells, vec![vec![0], vec![1, 4], vec![2, 3]]);
    }

    #[test]
    fn refine_is_idempotent_and_never_merges() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3)]).unwrap();
        let p1 = color_refine(&g, &VertexPartition::unit(6));
        let p2 = color_refine(&g, &p1);
        assert_eq!(p1, p2);
        assert!(p1.cells().len() >= 1);
    }

    #[test]
    fn k2_group() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let a = automorphism_group(&g).unwrap();
        assert_eq!(a.order, 2);
        assert_eq!(a.orbits, vec![vec![0, 1]]);
    }

    #[test]
    fn k1_group() {
        let g = Graph::empty(1).unwrap();
        let a = automorphism_group(&g).unwrap();
        assert_eq!(a.order, 1);
        assert_eq!(all_automorphisms(&g).unwrap().len(), 1);
    }

    #[test]
    fn c5_group_is_dihedral() {
        let a = automorphism_group(&c5()).unwrap();
        assert_eq!(a.order, 10);
        assert_eq!(a.orbits, vec![vec![0, 1, 2, 3, 4]]);
        let all = all_automorphisms(&c5()).unwrap();
        assert_eq!(all.len(), 10);
        // closed under composition
        for x in &all {
            for y in &all {
                assert!(all.contains(&x.compose(y)));
            }
        }
        assert_eq!(all, {
            let mut b = brute_force_automorphisms(&c5());
            let mut a = all.clone();
            a.sort_by(|x, y| x.image().cmp(y.image()));
            b.sort_by(|x, y| x.image().cmp(y.image()));
            assert_eq!(a, b);
            all.clone()
        });
    }

    #[test]
    fn asymmetric_six_vertex_graph() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3)]).unwrap();
        assert_eq!(brute_force_automorphisms(&g).len(), 1);
        let a = automorphism_group(&g).unwrap();
        assert_eq!(a.order, 1);
        assert_eq!(a.orbits.len(), 6);
    }

    #[test]
    fn asymmetric_seven_vertex_tree() {
        // branches of lengths 1, 2, 3 from a center: the smallest identity tree
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
        assert_eq!(brute_force_automorphisms(&g).len(), 1);
        assert_eq!(automorphism_group(&g).unwrap().order, 1);
    }

    #[test]
    fn friendship_orbit_structure() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 3)]).unwrap();
        assert_eq!(orbits(&g).unwrap(), brute_force_orbits(&g));
        assert_eq!(orbits(&g).unwrap(), vec![vec![0], vec![1, 2, 3, 4]]);
    }

    #[test]
    fn p3_orbits() {
        assert_eq!(orbits(&p3()).unwrap(), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn generators_are_automorphisms() {
        for g in [
            c5(),
            p3(),
            Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (2, 3)]).unwrap(),
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap(),
        ] {
            for gen in automorphism_group(&g).unwrap().generators {
                assert!(is_automorphism(&g, &gen));
            }
        }
    }

    #[test]
    fn orbit_sizes_divide_order() {
        for g in [
            c5(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap(),
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap(),
        ] {
            let a = automorphism_group(&g).unwrap();
            for orbit in &a.orbits {
                assert_eq!(a.order % orbit.len() as u128, 0);
            }
        }
    }

    #[test]
    fn complete_graph_orders() {
        for n in 1..=7usize {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    edges.push((u, v));
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let expected: u128 = (1..=n as u128).product();
            assert_eq!(automorphism_group(&g).unwrap().order, expected);
            assert_eq!(all_automorphisms(&g).unwrap().len() as u128, expected);
        }
    }

    #[test]
    fn octahedron_with_apex() {
        // regression: the level-orbit of the stabilizer chain must be
        // computed with the generators of this level and every deeper one
        let g = crate::graph6::parse("F@QFw").unwrap();
        let a = automorphism_group(&g).unwrap();
        assert_eq!(a.order, 48);
        assert_eq!(all_automorphisms(&g).unwrap().len(), 48);
        assert_eq!(a.orbits, vec![vec![0, 1, 2, 3, 4, 5], vec![6]]);
    }

    #[test]
    fn canonical_form_identifies_isomorphs() {
        // P3 with center 1 vs center 0
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&k3).unwrap());
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3)]).unwrap();
        let base = canonical_form(&g).unwrap();
        let mut image: Vec<usize> = (0..6).collect();
        // a few fixed relabelings
        for rot in 1..6 {
            image.rotate_left(1);
            let h = g.relabeled(&image);
            assert_eq!(canonical_form(&h).unwrap(), base, "rotation {rot}");
        }
    }

    #[test]
    fn enumeration_cap_enforced() {
        let g = Graph::empty(11).unwrap();
        assert_eq!(
            all_automorphisms(&g).unwrap_err(),
            Error::EnumerationCap(10)
        );
    }
}
