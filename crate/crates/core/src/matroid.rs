//! Matroids as rank oracles.
//!
//! Every oracle lives on a dense ground set `0..ground_size()` and exposes its
//! rank function. Oracles are immutable after construction; all queries take
//! `&self` and may run concurrently.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::union_find::UnionFind;
use crate::{ElementSet, Error, Result};

pub trait RankOracle: Send + Sync {
    fn ground_size(&self) -> usize;

    /// `rank(E)`, the size of every basis.
    fn full_rank(&self) -> usize;

    /// Rank of `set`, which must be drawn from this oracle's ground set.
    /// [`RankOracle::rank`] is the checked entry point.
    fn eval_rank(&self, set: &ElementSet) -> usize;

    /// Incremental rank bookkeeping starting from the empty set. The default
    /// re-evaluates the rank function on every query.
    fn tracker(&self) -> Box<dyn RankTracker + '_> {
        Box::new(FreshTracker::new(self))
    }

    /// True if `e` can never raise the rank of any set.
    fn is_loop(&self, e: usize) -> bool {
        let mut single = ElementSet::empty(self.ground_size());
        single.insert(e);
        self.eval_rank(&single) == 0
    }

    fn rank(&self, set: &ElementSet) -> Result<usize> {
        set.check_ground(self.ground_size())?;
        Ok(self.eval_rank(set))
    }

    /// True iff `set` spans the matroid, i.e. contains a basis.
    fn contains_basis(&self, set: &ElementSet) -> Result<bool> {
        Ok(self.rank(set)? == self.full_rank())
    }

    fn is_independent(&self, set: &ElementSet) -> Result<bool> {
        Ok(self.rank(set)? == set.len())
    }
}

impl<T: RankOracle + ?Sized> RankOracle for &T {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn full_rank(&self) -> usize {
        (**self).full_rank()
    }
    fn eval_rank(&self, set: &ElementSet) -> usize {
        (**self).eval_rank(set)
    }
    fn tracker(&self) -> Box<dyn RankTracker + '_> {
        (**self).tracker()
    }
    fn is_loop(&self, e: usize) -> bool {
        (**self).is_loop(e)
    }
}

impl<T: RankOracle + ?Sized> RankOracle for Box<T> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn full_rank(&self) -> usize {
        (**self).full_rank()
    }
    fn eval_rank(&self, set: &ElementSet) -> usize {
        (**self).eval_rank(set)
    }
    fn tracker(&self) -> Box<dyn RankTracker + '_> {
        (**self).tracker()
    }
    fn is_loop(&self, e: usize) -> bool {
        (**self).is_loop(e)
    }
}

/// Rank of a growing set `F`, one insertion at a time.
pub trait RankTracker {
    /// `rank(F)`.
    fn rank(&self) -> usize;
    /// `rank(F + e) - rank(F)` for `e` not in `F`.
    fn gain(&self, e: usize) -> usize;
    fn insert(&mut self, e: usize);
}

/// Tracker that keeps `F` explicitly and calls the rank function.
pub struct FreshTracker<'a, M: ?Sized> {
    oracle: &'a M,
    chosen: ElementSet,
    rank: usize,
}

impl<'a, M: RankOracle + ?Sized> FreshTracker<'a, M> {
    pub fn new(oracle: &'a M) -> Self {
        FreshTracker {
            oracle,
            chosen: ElementSet::empty(oracle.ground_size()),
            rank: 0,
        }
    }
}

impl<M: RankOracle + ?Sized> RankTracker for FreshTracker<'_, M> {
    fn rank(&self) -> usize {
        self.rank
    }

    fn gain(&self, e: usize) -> usize {
        if self.chosen.contains(e) {
            return 0;
        }
        self.oracle.eval_rank(&self.chosen.with(e)) - self.rank
    }

    fn insert(&mut self, e: usize) {
        if self.chosen.insert(e) {
            self.rank = self.oracle.eval_rank(&self.chosen);
        }
    }
}

/// Graphic matroid of the induced subgraph `G[S]`.
///
/// Ground elements are host-graph edges. An edge with an endpoint outside `S`
/// is a loop. `rank(A) = |S| - c(S, A ∩ E(G[S]))`, with isolated vertices
/// counted as components.
#[derive(Debug, Clone)]
pub struct GraphicMatroid {
    subset: Vec<usize>,
    // per ground element: endpoints as positions in `subset`, None for loops
    endpoints: Vec<Option<(u32, u32)>>,
    full_rank: usize,
}

impl GraphicMatroid {
    /// `ground_edges[e]` holds the host endpoints of ground element `e`.
    /// Repeated vertices in `subset` are collapsed.
    pub fn new(
        host_vertices: usize,
        ground_edges: &[(usize, usize)],
        subset: &[usize],
    ) -> Result<Self> {
        let mut local = alloc::vec![u32::MAX; host_vertices];
        let mut members: Vec<usize> = subset.to_vec();
        members.sort_unstable();
        members.dedup();
        for (i, &v) in members.iter().enumerate() {
            if v >= host_vertices {
                return Err(Error::VertexOutOfRange(v));
            }
            local[v] = i as u32;
        }
        let mut endpoints = Vec::with_capacity(ground_edges.len());
        for &(u, v) in ground_edges {
            if u >= host_vertices {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= host_vertices {
                return Err(Error::VertexOutOfRange(v));
            }
            let (a, b) = (local[u], local[v]);
            endpoints.push((a != u32::MAX && b != u32::MAX && a != b).then_some((a, b)));
        }
        let mut matroid = GraphicMatroid {
            subset: members,
            endpoints,
            full_rank: 0,
        };
        matroid.full_rank = matroid.eval_rank(&ElementSet::full(ground_edges.len()));
        Ok(matroid)
    }

    /// Graphic matroid of `G[S]` with every edge of `graph` as ground set.
    pub fn on_graph(graph: &Graph, subset: &[usize]) -> Result<Self> {
        let ends: Vec<_> = graph.edges().iter().map(|e| (e.u, e.v)).collect();
        Self::new(graph.vertex_count(), &ends, subset)
    }

    /// Sorted, deduplicated host vertices of `S`.
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    /// Ground elements lying inside `G[S]`.
    pub fn edges_within(&self) -> impl Iterator<Item = usize> + '_ {
        self.endpoints
            .iter()
            .enumerate()
            .filter_map(|(e, ends)| ends.map(|_| e))
    }

    /// Union-find state for the empty set over the vertices of `S`.
    pub fn graphic_tracker(&self) -> GraphicTracker<'_> {
        GraphicTracker {
            matroid: self,
            components: UnionFind::new(self.subset.len()),
        }
    }

    /// `1` iff `e` joins two components of `state`, which must reflect the
    /// chosen set restricted to `G[S]`.
    pub fn rank_gain(&self, state: &UnionFind, e: usize) -> usize {
        match self.endpoints[e] {
            Some((a, b)) => usize::from(!state.same(a as usize, b as usize)),
            None => 0,
        }
    }
}

impl RankOracle for GraphicMatroid {
    fn ground_size(&self) -> usize {
        self.endpoints.len()
    }

    fn full_rank(&self) -> usize {
        self.full_rank
    }

    fn eval_rank(&self, set: &ElementSet) -> usize {
        debug_assert_eq!(set.ground_size(), self.ground_size());
        let mut uf = UnionFind::new(self.subset.len());
        for e in set.iter() {
            if let Some((a, b)) = self.endpoints[e] {
                uf.union(a as usize, b as usize);
            }
        }
        self.subset.len() - uf.components()
    }

    fn tracker(&self) -> Box<dyn RankTracker + '_> {
        Box::new(self.graphic_tracker())
    }

    fn is_loop(&self, e: usize) -> bool {
        self.endpoints[e].is_none()
    }
}

/// Incremental rank of a graphic matroid via union-find over `S`.
#[derive(Debug, Clone)]
pub struct GraphicTracker<'a> {
    matroid: &'a GraphicMatroid,
    components: UnionFind,
}

impl GraphicTracker<'_> {
    pub fn state(&self) -> &UnionFind {
        &self.components
    }
}

impl RankTracker for GraphicTracker<'_> {
    fn rank(&self) -> usize {
        self.components.len() - self.components.components()
    }

    fn gain(&self, e: usize) -> usize {
        self.matroid.rank_gain(&self.components, e)
    }

    fn insert(&mut self, e: usize) {
        if let Some((a, b)) = self.matroid.endpoints[e] {
            self.components.union(a as usize, b as usize);
        }
    }
}

/// Rank-1 uniform matroid on a member set `C`: the independent sets are the
/// empty set and the singletons of `C`.
#[derive(Debug, Clone)]
pub struct UniformRank1Matroid {
    members: ElementSet,
}

impl UniformRank1Matroid {
    pub fn new(ground: usize, members: &[usize]) -> Result<Self> {
        Ok(UniformRank1Matroid {
            members: ElementSet::from_indices(ground, members.iter().copied())?,
        })
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }
}

impl RankOracle for UniformRank1Matroid {
    fn ground_size(&self) -> usize {
        self.members.ground_size()
    }

    fn full_rank(&self) -> usize {
        usize::from(!self.members.is_empty())
    }

    fn eval_rank(&self, set: &ElementSet) -> usize {
        usize::from(set.intersects(&self.members))
    }

    fn tracker(&self) -> Box<dyn RankTracker + '_> {
        Box::new(UniformTracker {
            matroid: self,
            hit: false,
        })
    }

    fn is_loop(&self, e: usize) -> bool {
        !self.members.contains(e)
    }
}

struct UniformTracker<'a> {
    matroid: &'a UniformRank1Matroid,
    hit: bool,
}

impl RankTracker for UniformTracker<'_> {
    fn rank(&self) -> usize {
        usize::from(self.hit)
    }

    fn gain(&self, e: usize) -> usize {
        usize::from(!self.hit && self.matroid.members.contains(e))
    }

    fn insert(&mut self, e: usize) {
        self.hit |= self.matroid.members.contains(e);
    }
}

/// Dual matroid: `rank*(A) = |A| + rank(E \ A) - rank(E)`.
///
/// `F` contains a basis of `M` exactly when `E \ F` is independent in the dual.
#[derive(Debug, Clone)]
pub struct DualMatroid<M> {
    primal: M,
}

impl<M: RankOracle> DualMatroid<M> {
    pub fn new(primal: M) -> Self {
        DualMatroid { primal }
    }

    pub fn primal(&self) -> &M {
        &self.primal
    }
}

impl<M: RankOracle> RankOracle for DualMatroid<M> {
    fn ground_size(&self) -> usize {
        self.primal.ground_size()
    }

    fn full_rank(&self) -> usize {
        self.primal.ground_size() - self.primal.full_rank()
    }

    fn eval_rank(&self, set: &ElementSet) -> usize {
        set.len() + self.primal.eval_rank(&set.complement()) - self.primal.full_rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // vertices 0..3, edges 0:{0,1} 1:{0,2} 2:{1,2}
    fn triangle() -> GraphicMatroid {
        GraphicMatroid::new(3, &[(0, 1), (0, 2), (1, 2)], &[0, 1, 2]).unwrap()
    }

    fn set(ground: usize, items: &[usize]) -> ElementSet {
        ElementSet::from_indices(ground, items.iter().copied()).unwrap()
    }

    #[test]
    fn graphic_rank_examples() {
        let m = triangle();
        assert_eq!(m.rank(&set(3, &[])).unwrap(), 0);
        assert_eq!(m.rank(&set(3, &[0, 1])).unwrap(), 2);
        assert_eq!(m.rank(&set(3, &[0, 1, 2])).unwrap(), 2);
        assert_eq!(m.full_rank(), 2);
    }

    #[test]
    fn rank_rejects_foreign_sets() {
        let m = triangle();
        assert_eq!(
            m.rank(&ElementSet::empty(4)),
            Err(Error::GroundMismatch {
                expected: 3,
                found: 4
            })
        );
    }

    #[test]
    fn graphic_loops_and_forests() {
        // S = {0, 1, 3}; edge {1,2} leaves S, and vertex 3 is isolated.
        let m = GraphicMatroid::new(4, &[(0, 1), (1, 2)], &[3, 1, 0, 1]).unwrap();
        assert_eq!(m.subset(), &[0, 1, 3]);
        assert!(m.is_loop(1));
        assert_eq!(m.full_rank(), 1);
        assert_eq!(m.rank(&set(2, &[1])).unwrap(), 0);
        assert!(GraphicMatroid::new(2, &[(0, 5)], &[0]).is_err());
    }

    #[test]
    fn uniform_rank_examples() {
        // a=0, b=1, c=2
        let m = UniformRank1Matroid::new(3, &[0, 1]).unwrap();
        assert_eq!(m.rank(&set(3, &[0])).unwrap(), 1);
        assert_eq!(m.rank(&set(3, &[])).unwrap(), 0);
        assert_eq!(m.rank(&set(3, &[2])).unwrap(), 0);
        assert!(m.is_independent(&set(3, &[1])).unwrap());
        assert!(!m.is_independent(&set(3, &[0, 1])).unwrap());
    }

    #[test]
    fn dual_rank_examples() {
        let d = DualMatroid::new(triangle());
        assert_eq!(d.full_rank(), 1);
        assert_eq!(d.rank(&set(3, &[])).unwrap(), 0);
        assert_eq!(d.rank(&set(3, &[2])).unwrap(), 1);
        assert_eq!(d.rank(&set(3, &[0, 1, 2])).unwrap(), 1);
    }

    #[test]
    fn dual_independent_sets_by_enumeration() {
        // Dual independent sets of the triangle are complements of spanning
        // sets: ∅ and the three singletons.
        let m = triangle();
        let d = DualMatroid::new(&m);
        for mask in 0u64..8 {
            let a = ElementSet::from_mask(3, mask);
            let spanning = m.contains_basis(&a.complement()).unwrap();
            assert_eq!(d.is_independent(&a).unwrap(), spanning);
            assert_eq!(spanning, a.len() <= 1);
        }
    }

    #[test]
    fn contains_basis_examples() {
        let m = triangle();
        assert!(m.contains_basis(&set(3, &[0, 1])).unwrap());
        assert!(!m.contains_basis(&set(3, &[0])).unwrap());
        assert!(m.contains_basis(&ElementSet::full(3)).unwrap());
    }

    #[test]
    fn trackers_agree_with_rank() {
        let m = GraphicMatroid::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)], &[0, 1, 2]).unwrap();
        let mut fast = m.tracker();
        let mut slow = FreshTracker::new(&m);
        for e in [3, 0, 2, 1] {
            for probe in 0..4 {
                if probe != e {
                    assert_eq!(fast.gain(probe), slow.gain(probe));
                }
            }
            fast.insert(e);
            slow.insert(e);
            assert_eq!(fast.rank(), slow.rank());
        }
        assert_eq!(fast.rank(), 2);
    }

    #[test]
    fn graphic_rank_gain_examples() {
        // S = {1,4,5} in host labels; host edges 0:{1,4} 1:{1,5} 2:{4,5}
        let m = GraphicMatroid::new(6, &[(1, 4), (1, 5), (4, 5)], &[1, 4, 5]).unwrap();
        let mut t = m.graphic_tracker();
        assert_eq!(m.rank_gain(t.state(), 0), 1);
        t.insert(0);
        t.insert(1);
        assert_eq!(m.rank_gain(t.state(), 2), 0);

        let other = GraphicMatroid::new(6, &[(1, 4)], &[2, 4, 5]).unwrap();
        assert_eq!(other.rank_gain(other.graphic_tracker().state(), 0), 0);
    }
}
