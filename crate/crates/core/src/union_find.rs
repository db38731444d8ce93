/// Union-find with union by size and an undo log.
///
/// No path compression, so every union can be rolled back exactly; finds
/// stay logarithmic thanks to the size heuristic.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
    components: usize,
    log: Vec<Option<u32>>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect(), size: vec![1; n], components: n, log: Vec::new() }
    }

    pub(crate) fn find(&self, mut i: u32) -> u32 {
        while self.parent[i as usize] != i {
            i = self.parent[i as usize];
        }
        i
    }

    /// Merges the classes of `a` and `b`, logging the change for [`Self::rollback`].
    pub(crate) fn union(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.log.push(None);
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.components -= 1;
        self.log.push(Some(rb));
    }

    /// Undoes the most recent union.
    pub(crate) fn rollback(&mut self) {
        if let Some(Some(child)) = self.log.pop() {
            let root = self.parent[child as usize];
            self.parent[child as usize] = child;
            self.size[root as usize] -= self.size[child as usize];
            self.components += 1;
        }
    }

    pub(crate) fn components(&self) -> usize {
        self.components
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_and_rollback() {
        let mut uf = UnionFind::new(5);
        uf.union(0, 1);
        uf.union(1, 2);
        uf.union(0, 2);
        assert_eq!(uf.components(), 3);
        assert_eq!(uf.find(2), uf.find(0));
        uf.rollback();
        uf.rollback();
        assert_eq!(uf.components(), 4);
        assert_ne!(uf.find(2), uf.find(0));
        uf.rollback();
        assert_eq!(uf.components(), 5);
        uf.rollback();
        assert_eq!(uf.components(), 5);
    }
}
