//! Proximity graphs and their clique (flag) complexes.

use super::cloud::PointCloud;
use super::complex::{for_each_subset, SimplicialComplex};

/// Dense bit-matrix adjacency for clique enumeration.
#[derive(Clone, Debug)]
pub(crate) struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitGraph { n, words, rows: vec![0; n * words] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j && i < self.n && j < self.n);
        self.rows[i * self.words + j / 64] |= 1 << (j % 64);
        self.rows[j * self.words + i / 64] |= 1 << (i % 64);
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Fixed-width bitset matching a graph's word count.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(words: usize) -> Self {
        VertexSet { words: vec![0; words] }
    }

    pub fn full(n: usize, words: usize) -> Self {
        let mut w = vec![u64::MAX; words];
        let spill = words * 64 - n;
        if spill > 0 {
            if let Some(last) = w.last_mut() {
                *last >>= spill;
            }
        }
        if n == 0 {
            w.iter_mut().for_each(|x| *x = 0);
        }
        VertexSet { words: w }
    }

    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and_row(&self, row: &[u64]) -> VertexSet {
        VertexSet {
            words: self.words.iter().zip(row).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn intersection_size(&self, row: &[u64]) -> usize {
        self.words
            .iter()
            .zip(row)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// All maximal cliques, each sorted, in deterministic order. Pivoted
/// Bron-Kerbosch; the pivot is the candidate dominating the most of `P`,
/// ties to the lowest vertex index.
pub(crate) fn maximal_cliques(g: &BitGraph) -> Vec<Vec<usize>> {
    let words = g.n().div_ceil(64);
    let mut out = Vec::new();
    let mut r = Vec::new();
    let p = VertexSet::full(g.n(), words);
    let x = VertexSet::empty(words);
    bk(g, &mut r, p, x, &mut out);
    out.sort();
    out
}

fn bk(g: &BitGraph, r: &mut Vec<usize>, p: VertexSet, x: VertexSet, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() && x.is_empty() {
        let mut clique = r.clone();
        clique.sort_unstable();
        out.push(clique);
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .map(|u| (p.intersection_size(g.row(u)), u))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
        .map(|(_, u)| u)
        .unwrap();
    let mut p = p;
    let mut x = x;
    let candidates: Vec<usize> = p.iter().filter(|&v| !g.adjacent(pivot, v)).collect();
    for v in candidates {
        r.push(v);
        bk(g, r, p.and_row(g.row(v)), x.and_row(g.row(v)), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Edges `{i, j}` of the proximity graph: pairs within the cloud's scale.
pub fn proximity_graph(cloud: &PointCloud) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..cloud.len() {
        for j in (i + 1)..cloud.len() {
            if cloud.within(i, j) {
                edges.push((i, j));
            }
        }
    }
    edges
}

pub(crate) fn adjacency_of(cloud: &PointCloud, ids: &[usize]) -> BitGraph {
    let mut g = BitGraph::new(ids.len());
    for a in 0..ids.len() {
        for b in (a + 1)..ids.len() {
            if cloud.within(ids[a], ids[b]) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// Clique complex of the proximity graph restricted to `ids` (which must be
/// strictly increasing); vertex ids in the result are the original cloud
/// indices. If `max_dim` is set, faces above that dimension are truncated
/// away, keeping the full skeleton below the cut.
pub fn rips_complex_on(
    cloud: &PointCloud,
    ids: &[usize],
    max_dim: Option<usize>,
) -> SimplicialComplex {
    assert!(ids.windows(2).all(|w| w[0] < w[1]), "ids must be strictly increasing");
    assert!(ids.iter().all(|&i| i < cloud.len()), "id out of range");
    let g = adjacency_of(cloud, ids);
    let cliques = maximal_cliques(&g);
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for c in cliques {
        let mapped: Vec<usize> = c.iter().map(|&p| ids[p]).collect();
        match max_dim {
            Some(k) if mapped.len() > k + 1 => {
                for_each_subset(&mapped, k + 1, &mut |s| faces.push(s.to_vec()));
            }
            _ => faces.push(mapped),
        }
    }
    SimplicialComplex::from_faces(faces)
}

/// Clique complex of the whole cloud's proximity graph.
pub fn rips_complex(cloud: &PointCloud, max_dim: Option<usize>) -> SimplicialComplex {
    let ids: Vec<usize> = (0..cloud.len()).collect();
    rips_complex_on(cloud, &ids, max_dim)
}
