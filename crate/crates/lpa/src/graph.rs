//! Finite directed graphs and the vertex-set surgeries that drive
//! everything else: hereditary/saturated predicates, the Λ-iteration
//! closure, restriction and quotient graphs, and source/sink removal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge `{0}`")]
    DuplicateEdge(String),
    #[error("edge `{edge}` references missing vertex `{vertex}`")]
    MissingEndpoint { edge: String, vertex: String },
    #[error("invalid identifier `{0}` (expected letters, digits, `_`, starting with a letter or `_`)")]
    InvalidIdentifier(String),
    #[error("the vertex set {0} must be hereditary (closed under ranges of outgoing edges)")]
    NotHereditary(VertexSet),
    #[error("the vertex set {0} must be saturated (contain every non-sink whose edge ranges all lie in it)")]
    NotSaturated(VertexSet),
}

/// A directed edge. `source` and `range` name vertices of the owning graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub id: String,
    pub source: String,
    pub range: String,
}

/// A finite directed graph with named vertices and edges.
///
/// Vertices and edges keep their insertion order; all set-valued results
/// are emitted sorted by identifier. Graphs are immutable values: the
/// surgeries below return new graphs and record what produced them in
/// `provenance`.
#[derive(Debug, Clone, Serialize)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    #[serde(skip)]
    vertex_pos: BTreeMap<String, usize>,
    #[serde(skip)]
    edge_pos: BTreeMap<String, usize>,
    provenance: Vec<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        // Provenance is bookkeeping, not graph identity.
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

fn valid_identifier(id: &str) -> bool {
    let mut chars = id.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Graph {
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Graph, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = Edge>,
    {
        let mut g = Graph {
            vertices: Vec::new(),
            edges: Vec::new(),
            vertex_pos: BTreeMap::new(),
            edge_pos: BTreeMap::new(),
            provenance: Vec::new(),
        };
        for v in vertices {
            let v = v.into();
            if !valid_identifier(&v) {
                return Err(GraphError::InvalidIdentifier(v));
            }
            if g.vertex_pos.insert(v.clone(), g.vertices.len()).is_some() {
                return Err(GraphError::DuplicateVertex(v));
            }
            g.vertices.push(v);
        }
        for e in edges {
            if !valid_identifier(&e.id) {
                return Err(GraphError::InvalidIdentifier(e.id));
            }
            for endpoint in [&e.source, &e.range] {
                if !g.vertex_pos.contains_key(endpoint) {
                    return Err(GraphError::MissingEndpoint {
                        edge: e.id.clone(),
                        vertex: endpoint.clone(),
                    });
                }
            }
            if g.edge_pos.insert(e.id.clone(), g.edges.len()).is_some() {
                return Err(GraphError::DuplicateEdge(e.id));
            }
            g.edges.push(e);
        }
        Ok(g)
    }

    /// Convenience constructor from `(id, source, range)` triples.
    pub fn from_parts<'a, V, E>(vertices: V, edges: E) -> Result<Graph, GraphError>
    where
        V: IntoIterator<Item = &'a str>,
        E: IntoIterator<Item = (&'a str, &'a str, &'a str)>,
    {
        Graph::new(
            vertices,
            edges.into_iter().map(|(id, s, r)| Edge {
                id: id.to_string(),
                source: s.to_string(),
                range: r.to_string(),
            }),
        )
    }

    pub fn empty() -> Graph {
        Graph::new(Vec::<String>::new(), Vec::new()).expect("empty graph is valid")
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(String::as_str)
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertex_pos.contains_key(v)
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edge_pos.get(id).map(|&i| &self.edges[i])
    }

    /// Outgoing edges of `v`, in insertion order (the paper-side s⁻¹(v)).
    pub fn outgoing(&self, v: &str) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.source == v)
    }

    /// Incoming edges of `v` (r⁻¹(v)).
    pub fn incoming(&self, v: &str) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.range == v)
    }

    pub fn is_sink(&self, v: &str) -> bool {
        self.outgoing(v).next().is_none()
    }

    pub fn is_source(&self, v: &str) -> bool {
        self.incoming(v).next().is_none()
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    fn derived(&self, vertices: Vec<String>, edges: Vec<Edge>, op: String) -> Graph {
        let mut g = Graph::new(vertices, edges).expect("surgery output is valid by construction");
        g.provenance = self.provenance.clone();
        g.provenance.push(op);
        g
    }

    fn check_subset(&self, set: &VertexSet) -> Result<(), GraphError> {
        for v in set.iter() {
            if !self.has_vertex(v) {
                return Err(GraphError::UnknownVertex(v.to_string()));
            }
        }
        Ok(())
    }

    /// True when the graph has no directed cycle (Kahn's algorithm).
    pub fn is_acyclic(&self) -> bool {
        let mut out_degree: BTreeMap<&str, usize> = BTreeMap::new();
        for v in self.vertices() {
            out_degree.insert(v, 0);
        }
        for e in &self.edges {
            *out_degree.get_mut(e.source.as_str()).unwrap() += 1;
        }
        let mut removed: BTreeSet<&str> = BTreeSet::new();
        let mut queue: Vec<&str> = out_degree
            .iter()
            .filter(|(_, &d)| d == 0)
            .map(|(&v, _)| v)
            .collect();
        while let Some(v) = queue.pop() {
            removed.insert(v);
            for e in self.incoming(v) {
                if removed.contains(e.source.as_str()) {
                    continue;
                }
                let d = out_degree.get_mut(e.source.as_str()).unwrap();
                *d -= 1;
                if *d == 0 {
                    queue.push(e.source.as_str());
                }
            }
        }
        removed.len() == self.vertices.len()
    }
}

/// A subset of a graph's vertices. Always iterated in sorted order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct VertexSet(BTreeSet<String>);

impl VertexSet {
    pub fn new() -> VertexSet {
        VertexSet(BTreeSet::new())
    }

    pub fn contains(&self, v: &str) -> bool {
        self.0.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn insert(&mut self, v: impl Into<String>) {
        self.0.insert(v.into());
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.difference(&other.0).cloned().collect())
    }
}

impl<S: Into<String>> FromIterator<S> for VertexSet {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> VertexSet {
        VertexSet(iter.into_iter().map(Into::into).collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite path: a base vertex for the trivial path, plus a composable
/// edge sequence. For nonempty paths the base is the source of the first
/// edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    base: String,
    edges: Vec<String>,
}

impl Path {
    pub fn trivial(v: impl Into<String>) -> Path {
        Path {
            base: v.into(),
            edges: Vec::new(),
        }
    }

    /// Builds a path from an edge-id sequence, checking composability.
    pub fn from_edges<'a, I>(graph: &Graph, edges: I) -> Result<Path, GraphError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut ids: Vec<String> = Vec::new();
        let mut expected_source: Option<String> = None;
        for id in edges {
            let edge = graph
                .edge(id)
                .ok_or_else(|| GraphError::UnknownEdge(id.to_string()))?;
            if let Some(src) = &expected_source {
                if *src != edge.source {
                    return Err(GraphError::MissingEndpoint {
                        edge: id.to_string(),
                        vertex: src.clone(),
                    });
                }
            }
            expected_source = Some(edge.range.clone());
            ids.push(id.to_string());
        }
        match ids.first() {
            Some(first) => Ok(Path {
                base: graph.edge(first).unwrap().source.clone(),
                edges: ids,
            }),
            None => Err(GraphError::UnknownEdge(String::new())),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = &str> {
        self.edges.iter().map(String::as_str)
    }

    pub fn source(&self) -> &str {
        &self.base
    }

    pub fn range<'a>(&'a self, graph: &'a Graph) -> &'a str {
        match self.edges.last() {
            Some(id) => &graph.edge(id).expect("path edge belongs to graph").range,
            None => &self.base,
        }
    }

    pub fn last_edge(&self) -> Option<&str> {
        self.edges.last().map(String::as_str)
    }

    /// Drops the final edge; the base vertex stays put.
    pub fn without_last(&self) -> Path {
        Path {
            base: self.base.clone(),
            edges: self.edges[..self.edges.len() - 1].to_vec(),
        }
    }

    /// Appends one edge (caller guarantees composability).
    pub fn extended(&self, edge: &str) -> Path {
        let mut edges = self.edges.clone();
        edges.push(edge.to_string());
        Path {
            base: self.base.clone(),
            edges,
        }
    }

    /// True when `self` is an initial segment of `other` starting at the
    /// same vertex.
    pub fn is_prefix_of(&self, other: &Path) -> bool {
        self.base == other.base && other.edges.starts_with(&self.edges)
    }

    /// The remainder `γ'` with `other = self · γ'`; `tail_base` is the
    /// range of `self`.
    pub fn strip_prefix(&self, other: &Path, tail_base: &str) -> Path {
        debug_assert!(self.is_prefix_of(other));
        Path {
            base: tail_base.to_string(),
            edges: other.edges[self.edges.len()..].to_vec(),
        }
    }

    pub fn concat(&self, other: &Path) -> Path {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().cloned());
        Path {
            base: self.base.clone(),
            edges,
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}", self.edges.join("."))
        }
    }
}

/// Vertices with no incoming edge. An isolated vertex is both a source
/// and a sink.
pub fn sources(g: &Graph) -> VertexSet {
    g.vertices().filter(|v| g.is_source(v)).collect()
}

/// Vertices with no outgoing edge.
pub fn sinks(g: &Graph) -> VertexSet {
    g.vertices().filter(|v| g.is_sink(v)).collect()
}

/// Hereditary: every edge leaving the set lands back in it
/// (s(e) ∈ H ⇒ r(e) ∈ H).
pub fn is_hereditary(g: &Graph, h: &VertexSet) -> Result<bool, GraphError> {
    g.check_subset(h)?;
    Ok(g.edges()
        .all(|e| !h.contains(&e.source) || h.contains(&e.range)))
}

/// Saturated: every non-sink vertex all of whose edge ranges lie in the
/// set is itself in the set.
pub fn is_saturated(g: &Graph, x: &VertexSet) -> Result<bool, GraphError> {
    g.check_subset(x)?;
    Ok(g.vertices().all(|v| {
        let mut out = g.outgoing(v).peekable();
        if out.peek().is_none() {
            return true; // sinks impose no condition
        }
        x.contains(v) || !out.all(|e| x.contains(&e.range))
    }))
}

/// The hereditary saturated closure H̄ of a hereditary set, by iterating
/// the rule "adjoin every non-sink whose edge ranges all lie in the
/// current set" to a fixed point.
pub fn saturated_closure(g: &Graph, h: &VertexSet) -> Result<VertexSet, GraphError> {
    if !is_hereditary(g, h)? {
        return Err(GraphError::NotHereditary(h.clone()));
    }
    let mut current = h.clone();
    loop {
        let additions: Vec<&str> = g
            .vertices()
            .filter(|v| !current.contains(v))
            .filter(|v| {
                let mut out = g.outgoing(v).peekable();
                out.peek().is_some() && out.all(|e| current.contains(&e.range))
            })
            .collect();
        if additions.is_empty() {
            return Ok(current);
        }
        for v in additions {
            current.insert(v);
        }
    }
}

/// Smallest hereditary superset: everything reachable from `s` by
/// directed paths.
pub fn hereditary_closure(g: &Graph, s: &VertexSet) -> Result<VertexSet, GraphError> {
    g.check_subset(s)?;
    let mut reached = s.clone();
    let mut frontier: Vec<String> = s.iter().map(str::to_string).collect();
    while let Some(v) = frontier.pop() {
        for e in g.outgoing(&v) {
            if !reached.contains(&e.range) {
                reached.insert(e.range.clone());
                frontier.push(e.range.clone());
            }
        }
    }
    Ok(reached)
}

/// Convenience for arbitrary input sets: hereditary closure first, then
/// the saturated closure.
pub fn full_closure(g: &Graph, s: &VertexSet) -> Result<VertexSet, GraphError> {
    saturated_closure(g, &hereditary_closure(g, s)?)
}

/// The restriction graph E_H: vertices H, edges starting in H.
pub fn restriction(g: &Graph, h: &VertexSet) -> Result<Graph, GraphError> {
    if !is_hereditary(g, h)? {
        return Err(GraphError::NotHereditary(h.clone()));
    }
    let vertices: Vec<String> = g
        .vertices()
        .filter(|v| h.contains(v))
        .map(str::to_string)
        .collect();
    let edges: Vec<Edge> = g
        .edges()
        .filter(|e| h.contains(&e.source))
        .cloned()
        .collect();
    Ok(g.derived(vertices, edges, format!("restriction({h})")))
}

/// The quotient graph E/X: vertices outside X, edges whose range avoids
/// X. Requires X hereditary and saturated.
pub fn quotient(g: &Graph, x: &VertexSet) -> Result<Graph, GraphError> {
    if !is_hereditary(g, x)? {
        return Err(GraphError::NotHereditary(x.clone()));
    }
    if !is_saturated(g, x)? {
        return Err(GraphError::NotSaturated(x.clone()));
    }
    let vertices: Vec<String> = g
        .vertices()
        .filter(|v| !x.contains(v))
        .map(str::to_string)
        .collect();
    let edges: Vec<Edge> = g
        .edges()
        .filter(|e| !x.contains(&e.range))
        .cloned()
        .collect();
    Ok(g.derived(vertices, edges, format!("quotient({x})")))
}

/// Repeatedly deletes every vertex that is a source but not a sink,
/// together with its outgoing edges.
pub fn eliminate_sources(g: &Graph) -> Graph {
    let mut vertices: Vec<String> = g.vertices().map(str::to_string).collect();
    let mut edges: Vec<Edge> = g.edges().cloned().collect();
    loop {
        let doomed: BTreeSet<String> = vertices
            .iter()
            .filter(|v| {
                let has_in = edges.iter().any(|e| &e.range == *v);
                let has_out = edges.iter().any(|e| &e.source == *v);
                !has_in && has_out
            })
            .cloned()
            .collect();
        if doomed.is_empty() {
            break;
        }
        vertices.retain(|v| !doomed.contains(v));
        edges.retain(|e| !doomed.contains(&e.source));
    }
    g.derived(vertices, edges, "eliminate_sources".to_string())
}

/// The sink- and source-free core Ē: quotient by the saturated closure
/// of the sink set, then repeated source elimination. Isolated vertices
/// count as sinks, so the sink pass removes them first.
pub fn sink_source_free_core(g: &Graph) -> Result<Graph, GraphError> {
    let sink_closure = saturated_closure(g, &sinks(g))?;
    let no_sinks = quotient(g, &sink_closure)?;
    Ok(eliminate_sources(&no_sinks))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn toeplitz() -> Graph {
        Graph::from_parts(["u", "w"], [("e", "u", "u"), ("f", "u", "w")]).unwrap()
    }

    fn chain2() -> Graph {
        Graph::from_parts(["v", "w"], [("f", "v", "w")]).unwrap()
    }

    fn chain3() -> Graph {
        Graph::from_parts(["v1", "v2", "v3"], [("f1", "v1", "v2"), ("f2", "v2", "v3")]).unwrap()
    }

    fn double_loop() -> Graph {
        Graph::from_parts(["u", "w"], [("e", "u", "u"), ("f", "u", "w"), ("g", "w", "w")])
            .unwrap()
    }

    fn set<const N: usize>(vs: [&str; N]) -> VertexSet {
        vs.into_iter().collect()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            Graph::from_parts(["u", "u"], []),
            Err(GraphError::DuplicateVertex(_))
        ));
        assert!(matches!(
            Graph::from_parts(["u"], [("e", "u", "z")]),
            Err(GraphError::MissingEndpoint { .. })
        ));
        assert!(matches!(
            Graph::from_parts(["a b"], []),
            Err(GraphError::InvalidIdentifier(_))
        ));
        assert!(matches!(
            Graph::from_parts(["u"], [("e", "u", "u"), ("e", "u", "u")]),
            Err(GraphError::DuplicateEdge(_))
        ));
    }

    #[test]
    fn sources_and_sinks() {
        let g = toeplitz();
        assert_eq!(sinks(&g), set(["w"]));
        assert_eq!(sources(&g), set([]));

        let isolated = Graph::from_parts(["v"], []).unwrap();
        assert_eq!(sources(&isolated), set(["v"]));
        assert_eq!(sinks(&isolated), set(["v"]));

        let g = chain3();
        assert_eq!(sources(&g), set(["v1"]));
        assert_eq!(sinks(&g), set(["v3"]));
    }

    #[test]
    fn hereditary_predicate() {
        let g = toeplitz();
        assert!(is_hereditary(&g, &set(["w"])).unwrap());
        assert!(!is_hereditary(&g, &set(["u"])).unwrap());
        assert!(is_hereditary(&g, &set([])).unwrap());
        assert!(is_hereditary(&g, &set(["u", "w"])).unwrap());
        assert!(matches!(
            is_hereditary(&g, &set(["nope"])),
            Err(GraphError::UnknownVertex(_))
        ));
    }

    #[test]
    fn saturated_predicate() {
        let chain = chain2();
        assert!(!is_saturated(&chain, &set(["w"])).unwrap());
        let g = toeplitz();
        assert!(is_saturated(&g, &set(["w"])).unwrap());
        assert!(is_saturated(&g, &set(["u", "w"])).unwrap());
    }

    #[test]
    fn closure_examples() {
        let g = toeplitz();
        assert_eq!(saturated_closure(&g, &set(["w"])).unwrap(), set(["w"]));

        let chain = chain2();
        assert_eq!(
            saturated_closure(&chain, &set(["w"])).unwrap(),
            set(["v", "w"])
        );

        // two Λ iterations
        let g = chain3();
        assert_eq!(
            saturated_closure(&g, &set(["v3"])).unwrap(),
            set(["v1", "v2", "v3"])
        );
        let all: VertexSet = g.vertices().collect();
        assert_eq!(saturated_closure(&g, &all).unwrap(), all);

        assert!(matches!(
            saturated_closure(&toeplitz(), &set(["u"])),
            Err(GraphError::NotHereditary(_))
        ));
    }

    #[test]
    fn full_closure_repairs_non_hereditary_input() {
        let g = toeplitz();
        assert_eq!(full_closure(&g, &set(["u"])).unwrap(), set(["u", "w"]));
    }

    #[test]
    fn restriction_examples() {
        let g = toeplitz();
        let r = restriction(&g, &set(["w"])).unwrap();
        assert_eq!(r, Graph::from_parts(["w"], []).unwrap());

        let all: VertexSet = g.vertices().collect();
        assert_eq!(restriction(&g, &all).unwrap(), g);

        let r = restriction(&double_loop(), &set(["w"])).unwrap();
        assert_eq!(r, Graph::from_parts(["w"], [("g", "w", "w")]).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let g = toeplitz();
        let q = quotient(&g, &set(["w"])).unwrap();
        assert_eq!(q, Graph::from_parts(["u"], [("e", "u", "u")]).unwrap());

        assert_eq!(quotient(&g, &set([])).unwrap(), g);

        let chain = chain2();
        let q = quotient(&chain, &set(["v", "w"])).unwrap();
        assert!(q.is_empty());

        // {w} in the chain is hereditary but not saturated
        assert!(matches!(
            quotient(&chain, &set(["w"])),
            Err(GraphError::NotSaturated(_))
        ));
    }

    #[test]
    fn core_examples() {
        let core = sink_source_free_core(&toeplitz()).unwrap();
        assert_eq!(core, Graph::from_parts(["u"], [("e", "u", "u")]).unwrap());

        let core = sink_source_free_core(&chain3()).unwrap();
        assert!(core.is_empty());

        let g = double_loop();
        assert_eq!(sink_source_free_core(&g).unwrap(), g);
    }

    #[test]
    fn eliminate_sources_terminates_and_cleans() {
        let g = chain3();
        let trimmed = eliminate_sources(&g);
        // v1 goes first, then v2 becomes a source; v3 stays as an isolated sink.
        assert_eq!(trimmed, Graph::from_parts(["v3"], []).unwrap());
        assert!(trimmed
            .vertices()
            .all(|v| !(trimmed.is_source(v) && !trimmed.is_sink(v))));
    }

    #[test]
    fn provenance_records_surgeries() {
        let g = toeplitz();
        let q = quotient(&g, &set(["w"])).unwrap();
        assert_eq!(q.provenance(), ["quotient({w})"]);
        let trimmed = eliminate_sources(&q);
        assert_eq!(
            trimmed.provenance(),
            ["quotient({w})", "eliminate_sources"]
        );
    }

    #[test]
    fn paths_compose() {
        let g = chain3();
        let p = Path::from_edges(&g, ["f1", "f2"]).unwrap();
        assert_eq!(p.source(), "v1");
        assert_eq!(p.range(&g), "v3");
        assert!(Path::from_edges(&g, ["f2", "f1"]).is_err());
        let t = Path::trivial("v2");
        assert_eq!(t.range(&g), "v2");
    }
}
