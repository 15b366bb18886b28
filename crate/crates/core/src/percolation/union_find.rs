use super::Occupancy;

/// Disjoint sets with union by rank and path compression.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect(), rank: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: u32) -> u32 {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = x;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    /// Merge the sets of `a` and `b`; false if they were already one set.
    pub fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (hi, lo) = if self.rank[ra as usize] >= self.rank[rb as usize] { (ra, rb) } else { (rb, ra) };
        self.parent[lo as usize] = hi;
        if self.rank[hi as usize] == self.rank[lo as usize] {
            self.rank[hi as usize] += 1;
        }
        true
    }
}

/// Component label (a representative site) of every occupied site, `None`
/// for vacant ones. Occupied neighbours share a label.
pub fn label_clusters<C: Occupancy>(c: &C) -> Vec<Option<u32>> {
    let g = c.geometry();
    let n = g.num_sites();
    assert!(n <= u64::from(u32::MAX), "box too large for dense labelling");
    let mut uf = UnionFind::new(n as usize);
    for s in 0..n {
        if !c.is_occupied(s) {
            continue;
        }
        for axis in 0..g.dim() {
            let t = g.step(s, axis, 1);
            if c.is_occupied(t) {
                uf.union(s as u32, t as u32);
            }
        }
    }
    (0..n).map(|s| c.is_occupied(s).then(|| uf.find(s as u32))).collect()
}
