use std::sync::Arc;

use super::{CoxeterSystem, ElementId, Group};
use crate::error::{Error, Result};

/// Largest group for which the Bruhat reachability bitsets are built by
/// default (`|W|^2` bits). Covers D_6 and B_6.
pub const DEFAULT_POSET_LIMIT: usize = 50_000;

/// Bruhat order on an enumerated group: reflections, covers in both
/// directions, and one down-set bitset per element.
#[derive(Debug)]
pub struct BruhatPoset {
    group: Arc<Group>,
    reflections: Vec<ElementId>,
    lower: Vec<Vec<ElementId>>,
    upper: Vec<Vec<ElementId>>,
    below: Vec<u64>,
    stride: usize,
}

impl BruhatPoset {
    /// Enumerates `system` and builds its Bruhat order.
    pub fn build(system: CoxeterSystem) -> Result<Self> {
        let group = Group::enumerate(system)?;
        Self::from_group(Arc::new(group))
    }

    pub fn from_group(group: Arc<Group>) -> Result<Self> {
        Self::from_group_with_limit(group, DEFAULT_POSET_LIMIT)
    }

    pub fn from_group_with_limit(group: Arc<Group>, limit: usize) -> Result<Self> {
        if group.order() > limit {
            return Err(Error::LimitExceeded {
                order: group.order(),
                limit,
            });
        }
        let reflections = Self::reflections_of(&group);
        let n = group.order();
        let mut lower = vec![Vec::new(); n];
        for u in group.ids() {
            for &t in &reflections {
                let v = group.multiply(u, t);
                if group.length(v) == group.length(u) + 1 {
                    lower[v.index()].push(u);
                }
            }
        }
        for l in lower.iter_mut() {
            l.sort();
        }
        Ok(Self::from_covers(group, reflections, lower))
    }

    /// Rebuilds the poset from previously computed lower covers.
    pub(crate) fn from_covers(
        group: Arc<Group>,
        reflections: Vec<ElementId>,
        lower: Vec<Vec<ElementId>>,
    ) -> Self {
        let n = group.order();
        let mut upper = vec![Vec::new(); n];
        for (v, l) in lower.iter().enumerate() {
            for &u in l {
                upper[u.index()].push(ElementId::from(v));
            }
        }
        let stride = n.div_ceil(64);
        let mut below = vec![0u64; n * stride];
        // ids are sorted by length, so lower covers are always processed first
        for v in 0..n {
            below[v * stride + v / 64] |= 1 << (v % 64);
            for &u in &lower[v] {
                let (src, dst) = (u.index() * stride, v * stride);
                debug_assert!(src < dst);
                let (head, tail) = below.split_at_mut(dst);
                for (d, s) in tail[..stride].iter_mut().zip(&head[src..src + stride]) {
                    *d |= *s;
                }
            }
        }
        Self {
            group,
            reflections,
            lower,
            upper,
            below,
            stride,
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<Group> {
        Arc::clone(&self.group)
    }

    pub fn reflections(&self) -> &[ElementId] {
        &self.reflections
    }

    /// `u <= w` in Bruhat order.
    #[inline]
    pub fn leq(&self, u: ElementId, w: ElementId) -> bool {
        let (u, w) = (u.index(), w.index());
        self.below[w * self.stride + u / 64] >> (u % 64) & 1 == 1
    }

    pub fn lower_covers(&self, w: ElementId) -> &[ElementId] {
        &self.lower[w.index()]
    }

    pub fn upper_covers(&self, w: ElementId) -> &[ElementId] {
        &self.upper[w.index()]
    }

    pub(crate) fn all_lower_covers(&self) -> &[Vec<ElementId>] {
        &self.lower
    }

    /// `[e, w]`, sorted by index (hence by length).
    pub fn lower_interval(&self, w: ElementId) -> Vec<ElementId> {
        let row = &self.below[w.index() * self.stride..(w.index() + 1) * self.stride];
        let mut out = Vec::new();
        for (k, &word) in row.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(ElementId::from(k * 64 + b));
                bits &= bits - 1;
            }
        }
        out
    }

    pub fn lower_interval_size(&self, w: ElementId) -> usize {
        self.below[w.index() * self.stride..(w.index() + 1) * self.stride]
            .iter()
            .map(|x| x.count_ones() as usize)
            .sum()
    }

    /// `[u, w] = { z : u <= z <= w }`.
    pub fn interval(&self, u: ElementId, w: ElementId) -> Vec<ElementId> {
        self.lower_interval(w)
            .into_iter()
            .filter(|&z| self.leq(u, z))
            .collect()
    }

    /// Covers `u -> us` of the right weak order.
    pub fn right_weak_upper_covers(&self, u: ElementId) -> Vec<ElementId> {
        let g = &self.group;
        (0..g.rank())
            .map(|s| g.right_mul(u, s))
            .filter(|&v| g.length(v) > g.length(u))
            .collect()
    }

    /// Covers `u -> su` of the left weak order.
    pub fn left_weak_upper_covers(&self, u: ElementId) -> Vec<ElementId> {
        let g = &self.group;
        (0..g.rank())
            .map(|s| g.left_mul(u, s))
            .filter(|&v| g.length(v) > g.length(u))
            .collect()
    }
}

impl BruhatPoset {
    /// `T = { w s w^-1 }`, sorted.
    pub(crate) fn reflections_of(g: &Group) -> Vec<ElementId> {
        let mut seen = vec![false; g.order()];
        for w in g.ids() {
            let wi = g.inverse(w);
            for s in 0..g.rank() {
                let t = g.multiply(g.right_mul(w, s), wi);
                seen[t.index()] = true;
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| ElementId::from(i))
            .collect()
    }
}
