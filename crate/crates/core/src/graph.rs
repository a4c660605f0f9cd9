//! Connected components of crystals as labeled graphs.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::hash::Hash;

use crate::alphabet::{weight_dominates, Index, Weight};
use crate::crystal::{Crystal, Op};

/// Vertices in sorted order; edges are the f-arrows `src --i--> dst`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph<V> {
    pub vertices: Vec<V>,
    pub edges: Vec<(usize, Index, usize)>,
}

impl<V: Clone + Ord + Hash> CrystalGraph<V> {
    /// BFS closure of `seed` under every raising and lowering operator in `indices`.
    pub fn component<F>(seed: V, indices: &[Index], step: F) -> CrystalGraph<V>
    where
        F: Fn(&V, Index, Op) -> Option<V>,
    {
        let mut seen: HashMap<V, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(seed.clone(), ());
        queue.push_back(seed);
        let mut raw_edges = Vec::new();
        while let Some(v) = queue.pop_front() {
            for &i in indices {
                for op in [Op::Raise, Op::Lower] {
                    if let Some(w) = step(&v, i, op) {
                        if op == Op::Lower {
                            raw_edges.push((v.clone(), i, w.clone()));
                        }
                        if seen.insert(w.clone(), ()).is_none() {
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        let mut vertices: Vec<V> = seen.into_keys().collect();
        vertices.sort();
        let pos: HashMap<&V, usize> = vertices.iter().enumerate().map(|(k, v)| (v, k)).collect();
        let mut edges: Vec<(usize, Index, usize)> =
            raw_edges.iter().map(|(a, i, b)| (pos[a], *i, pos[b])).collect();
        edges.sort();
        CrystalGraph { vertices, edges }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn position(&self, v: &V) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// Vertices with no incoming f-arrow. Fake highest weight vectors are included.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.vertices.len()];
        for &(_, _, d) in &self.edges {
            has_in[d] = true;
        }
        (0..self.vertices.len()).filter(|&k| !has_in[k]).collect()
    }

    /// The vertex whose weight dominates every other weight, if there is one.
    pub fn dominant_vertex(&self, weight: impl Fn(&V) -> Weight) -> Option<usize> {
        let ws: Vec<Weight> = self.vertices.iter().map(&weight).collect();
        let cand = self.sources().into_iter().find(|&k| ws.iter().all(|w| weight_dominates(&ws[k], w)))?;
        Some(cand)
    }

    /// A relabeling-invariant description: BFS from `root`, visiting arrows in
    /// (index, direction) order, recording each vertex's weight and its arrows
    /// in discovery numbering.
    pub fn canonical_form(&self, root: usize, weight: impl Fn(&V) -> Weight) -> CanonicalForm {
        let mut out_f: Vec<BTreeMap<Index, usize>> = vec![BTreeMap::new(); self.len()];
        let mut out_e: Vec<BTreeMap<Index, usize>> = vec![BTreeMap::new(); self.len()];
        for &(s, i, d) in &self.edges {
            out_f[s].insert(i, d);
            out_e[d].insert(i, s);
        }
        let mut order = vec![usize::MAX; self.len()];
        let mut visit = Vec::new();
        let mut queue = VecDeque::from([root]);
        order[root] = 0;
        visit.push(root);
        while let Some(v) = queue.pop_front() {
            let nbrs = out_e[v].values().chain(out_f[v].values()).copied().collect::<Vec<_>>();
            for w in nbrs {
                if order[w] == usize::MAX {
                    order[w] = visit.len();
                    visit.push(w);
                    queue.push_back(w);
                }
            }
        }
        let nodes = visit
            .iter()
            .map(|&v| {
                let arrows = out_f[v].iter().map(|(i, d)| (*i, order[*d])).collect();
                (weight(&self.vertices[v]), arrows)
            })
            .collect();
        CanonicalForm { nodes }
    }

    pub fn to_dot(&self, name: &str, label: impl Fn(&V) -> String) -> String {
        let mut s = format!("digraph {name} {{\n");
        for (k, v) in self.vertices.iter().enumerate() {
            s.push_str(&format!("  v{k} [label=\"{}\"];\n", label(v).replace('"', "\\\"")));
        }
        for &(a, i, b) in &self.edges {
            s.push_str(&format!("  v{a} -> v{b} [label=\"{}\"];\n", i.0));
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub nodes: Vec<(Weight, Vec<(Index, usize)>)>,
}

/// Component of a crystal element under the indices given.
pub fn connected_component<C>(seed: C, indices: &[Index]) -> CrystalGraph<C>
where
    C: Crystal + Ord + Hash,
{
    CrystalGraph::component(seed, indices, |v, i, op| v.apply(i, op))
}

/// Canonical form rooted at the dominant vertex of a crystal component.
pub fn canonical<C: Crystal + Ord + Hash>(g: &CrystalGraph<C>) -> Option<CanonicalForm> {
    let root = g.dominant_vertex(|v| v.weight())?;
    Some(g.canonical_form(root, |v| v.weight()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Rank;
    use crate::word::Word;

    #[test]
    fn empty_word_component() {
        let g = connected_component(Word(Vec::new()), &Rank::new(2, 2).indices());
        assert_eq!(g.len(), 1);
        assert!(g.edges.is_empty());
    }

    #[test]
    fn natural_crystal() {
        let r = Rank::new(2, 2);
        let g = connected_component(Word::from_codes(&[-2]), &r.indices());
        assert_eq!(g.len(), 4);
        assert_eq!(g.edges.len(), 3);
        let dot = g.to_dot("B", |w| w.to_string());
        assert!(dot.contains("label=\"0\""));
    }
}
