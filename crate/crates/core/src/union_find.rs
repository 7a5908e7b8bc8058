//! Disjoint-set forest used to form quotients of finite sets.

#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind { parent: (0..len).collect(), rank: vec![0; len] }
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

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }

    /// Class index of every element, classes numbered by their least member.
    pub fn classes(&mut self) -> (Vec<usize>, usize) {
        let len = self.parent.len();
        let mut label = vec![usize::MAX; len];
        let mut class_of_root = vec![usize::MAX; len];
        let mut count = 0;
        for x in 0..len {
            let r = self.find(x);
            if class_of_root[r] == usize::MAX {
                class_of_root[r] = count;
                count += 1;
            }
            label[x] = class_of_root[r];
        }
        (label, count)
    }
}
