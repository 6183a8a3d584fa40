//! Abstract simplicial complexes stored by their maximal faces.

use std::collections::BTreeSet;

/// A finite abstract simplicial complex. The stored face list is canonical:
/// every face sorted, the list itself sorted, and no face contained in
/// another, so derived `PartialEq` is combinatorial equality on the nose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    maximal: Vec<Vec<usize>>,
}

/// Call `f` on every `k`-subset of `set`, in lexicographic order.
pub(crate) fn for_each_subset(set: &[usize], k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(set: &[usize], k: usize, start: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if buf.len() == k {
            f(buf);
            return;
        }
        let need = k - buf.len();
        let mut i = start;
        while i + need <= set.len() {
            buf.push(set[i]);
            rec(set, k, i + 1, buf, f);
            buf.pop();
            i += 1;
        }
    }
    let mut buf = Vec::with_capacity(k);
    rec(set, k, 0, &mut buf, f);
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex { vertices: Vec::new(), maximal: Vec::new() }
    }

    /// Build from an arbitrary collection of faces: each face is sorted and
    /// deduplicated, contained faces are pruned, and the survivors are the
    /// maximal faces. Empty faces are ignored.
    pub fn from_faces<I>(faces: I) -> Self
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut cleaned: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .filter(|f| !f.is_empty())
            .collect();
        // Longer faces first so the containment scan only looks backwards.
        cleaned.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        cleaned.dedup();
        let mut maximal: Vec<Vec<usize>> = Vec::new();
        'next: for f in cleaned {
            for m in &maximal {
                if is_subset(&f, m) {
                    continue 'next;
                }
            }
            maximal.push(f);
        }
        maximal.sort();
        let mut vertices: Vec<usize> = maximal.iter().flatten().copied().collect();
        vertices.sort_unstable();
        vertices.dedup();
        SimplicialComplex { vertices, maximal }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn maximal_faces(&self) -> &[Vec<usize>] {
        &self.maximal
    }

    pub fn is_empty(&self) -> bool {
        self.maximal.is_empty()
    }

    /// Dimension of the largest face; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.maximal.iter().map(|f| f.len() - 1).max()
    }

    /// Is the (unsorted, possibly repeated) vertex list a face?
    pub fn contains_face(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        if f.is_empty() {
            return !self.maximal.is_empty();
        }
        self.maximal.iter().any(|m| is_subset(&f, m))
    }

    /// All distinct faces of dimension `k`, sorted lexicographically.
    pub fn faces_of_dim(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        for m in &self.maximal {
            if m.len() >= k + 1 {
                for_each_subset(m, k + 1, &mut |s| {
                    out.insert(s.to_vec());
                });
            }
        }
        out.into_iter().collect()
    }

    /// All nonempty faces up to `max_dim` (or all of them), sorted by
    /// dimension then lexicographically.
    pub fn all_faces(&self, max_dim: Option<usize>) -> Vec<Vec<usize>> {
        let top = match (self.dim(), max_dim) {
            (None, _) => return Vec::new(),
            (Some(d), None) => d,
            (Some(d), Some(m)) => d.min(m),
        };
        let mut out = Vec::new();
        for k in 0..=top {
            out.extend(self.faces_of_dim(k));
        }
        out
    }

    /// Face counts by dimension, from dimension 0 upward.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.dim() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|k| self.faces_of_dim(k).len()).collect(),
        }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.faces_of_dim(1).into_iter().map(|e| (e[0], e[1])).collect()
    }

    /// Faces not containing `v` whose union with `v` is a face.
    pub fn link(&self, v: usize) -> SimplicialComplex {
        assert!(self.vertices.binary_search(&v).is_ok(), "vertex {v} not in complex");
        SimplicialComplex::from_faces(
            self.maximal
                .iter()
                .filter(|m| m.binary_search(&v).is_ok())
                .map(|m| m.iter().copied().filter(|&w| w != v).collect()),
        )
    }

    /// Faces not meeting `face` whose union with it is a face.
    pub fn link_of_face(&self, face: &[usize]) -> SimplicialComplex {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        assert!(self.contains_face(&f), "not a face: {f:?}");
        SimplicialComplex::from_faces(
            self.maximal
                .iter()
                .filter(|m| is_subset(&f, m))
                .map(|m| m.iter().copied().filter(|w| f.binary_search(w).is_err()).collect()),
        )
    }

    /// Union of all closed faces containing `v`.
    pub fn closed_star(&self, v: usize) -> SimplicialComplex {
        assert!(self.vertices.binary_search(&v).is_ok(), "vertex {v} not in complex");
        SimplicialComplex::from_faces(
            self.maximal
                .iter()
                .filter(|m| m.binary_search(&v).is_ok())
                .cloned(),
        )
    }

    /// Subcomplex of faces contained in the vertex set `s`.
    pub fn induced(&self, s: &[usize]) -> SimplicialComplex {
        let mut keep = s.to_vec();
        keep.sort_unstable();
        keep.dedup();
        SimplicialComplex::from_faces(
            self.maximal
                .iter()
                .map(|m| m.iter().copied().filter(|w| keep.binary_search(w).is_ok()).collect()),
        )
    }

    /// Cone with a fresh apex vertex: every face gains the apex.
    pub fn cone(&self, apex: usize) -> SimplicialComplex {
        assert!(self.vertices.binary_search(&apex).is_err(), "apex {apex} already present");
        if self.maximal.is_empty() {
            return SimplicialComplex::from_faces([vec![apex]]);
        }
        SimplicialComplex::from_faces(self.maximal.iter().map(|m| {
            let mut f = m.clone();
            f.push(apex);
            f
        }))
    }

    /// Suspension by two fresh vertices `a` and `b`.
    pub fn suspension(&self, a: usize, b: usize) -> SimplicialComplex {
        assert_ne!(a, b);
        assert!(self.vertices.binary_search(&a).is_err(), "vertex {a} already present");
        assert!(self.vertices.binary_search(&b).is_err(), "vertex {b} already present");
        if self.maximal.is_empty() {
            return SimplicialComplex::from_faces([vec![a], vec![b]]);
        }
        SimplicialComplex::from_faces(self.maximal.iter().flat_map(|m| {
            let mut fa = m.clone();
            fa.push(a);
            let mut fb = m.clone();
            fb.push(b);
            [fa, fb]
        }))
    }

    /// Is the 1-skeleton connected? Empty and single-vertex complexes count
    /// as connected.
    pub fn is_connected(&self) -> bool {
        if self.vertices.len() <= 1 {
            return true;
        }
        let index = |v: usize| self.vertices.binary_search(&v).unwrap();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for m in &self.maximal {
            for w in &m[1..] {
                let (a, b) = (find(&mut parent, index(m[0])), find(&mut parent, index(*w)));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, 0);
        (1..self.vertices.len()).all(|i| find(&mut parent, i) == root)
    }

    /// Number of connected components of the 1-skeleton.
    pub fn component_count(&self) -> usize {
        let index = |v: usize| self.vertices.binary_search(&v).unwrap();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for m in &self.maximal {
            for w in &m[1..] {
                let (a, b) = (find(&mut parent, index(m[0])), find(&mut parent, index(*w)));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        (0..self.vertices.len())
            .filter(|&i| find(&mut parent, i) == i)
            .count()
    }
}

pub(crate) fn is_subset(small: &[usize], big: &[usize]) -> bool {
    // Both sorted; classic merge scan.
    let mut it = big.iter();
    'outer: for s in small {
        for b in it.by_ref() {
            if b == s {
                continue 'outer;
            }
            if b > s {
                return false;
            }
        }
        return false;
    }
    true
}
