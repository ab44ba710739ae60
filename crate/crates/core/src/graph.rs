//! Hexagonal cactus chains and their pendant-path auxiliary graphs.
//!
//! Every hexagon is stored as a 6-tuple of vertex ids in clockwise order,
//! starting at its entry cut vertex (the vertex it shares with the previous
//! hexagon). The first hexagon starts at the vertex it shares with the
//! second one, so for every `n >= 1` the terminal hexagon's tuple starts at
//! the vertex from which the pendant attachment distance is measured.
//!
//! Attachment at distance 1 or 2 always uses the clockwise candidate; the
//! counter-clockwise choice yields an isomorphic graph.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AttachmentType {
    Ortho,
    Meta,
    Para,
}

impl AttachmentType {
    pub const ALL: [AttachmentType; 3] = [Self::Ortho, Self::Meta, Self::Para];

    /// Cyclic distance between the two cut vertices of a hexagon.
    pub fn distance(self) -> usize {
        match self {
            Self::Ortho => 1,
            Self::Meta => 2,
            Self::Para => 3,
        }
    }

    pub fn from_distance(distance: usize) -> Option<Self> {
        match distance {
            1 => Some(Self::Ortho),
            2 => Some(Self::Meta),
            3 => Some(Self::Para),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Self::Ortho => 'o',
            Self::Meta => 'm',
            Self::Para => 'p',
        }
    }

    /// Case-insensitive inverse of [`AttachmentType::symbol`].
    pub fn from_symbol(c: char) -> Option<Self> {
        match c.to_ascii_lowercase() {
            'o' => Some(Self::Ortho),
            'm' => Some(Self::Meta),
            'p' => Some(Self::Para),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Ortho => "ortho",
            Self::Meta => "meta",
            Self::Para => "para",
        }
    }
}

impl fmt::Display for AttachmentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One realization of the random model: `n` hexagons and the attachment
/// choices for hexagons `3..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AttachmentSequence {
    n: usize,
    choices: Vec<AttachmentType>,
}

impl AttachmentSequence {
    /// Number of attachment choices needed for a chain of `n` hexagons.
    pub fn choice_count(n: usize) -> usize {
        n.saturating_sub(2)
    }

    pub fn new(n: usize, choices: Vec<AttachmentType>) -> Result<Self> {
        let expected = Self::choice_count(n);
        if choices.len() != expected {
            return Err(Error::InvalidSequence(format!(
                "a chain of {n} hexagons needs {expected} attachment choices, got {}",
                choices.len()
            )));
        }
        Ok(Self { n, choices })
    }

    /// Chain whose internal hexagons all use the same attachment.
    pub fn uniform(n: usize, kind: AttachmentType) -> Self {
        Self {
            n,
            choices: vec![kind; Self::choice_count(n)],
        }
    }

    /// Parses a string over `{o, m, p}` (any case) for a chain of `n` hexagons.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let choices = text
            .trim()
            .chars()
            .map(|c| {
                AttachmentType::from_symbol(c).ok_or_else(|| {
                    Error::InvalidSequence(format!("unexpected character {c:?}, expected o, m or p"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, choices)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn choices(&self) -> &[AttachmentType] {
        &self.choices
    }

    /// Every sequence for a chain of `n` hexagons, in lexicographic order
    /// (ortho < meta < para).
    pub fn all(n: usize) -> impl Iterator<Item = AttachmentSequence> {
        let len = Self::choice_count(n);
        let total = 3usize.pow(len as u32);
        (0..total).map(move |mut index| {
            let mut choices = vec![AttachmentType::Ortho; len];
            for slot in choices.iter_mut().rev() {
                *slot = AttachmentType::ALL[index % 3];
                index /= 3;
            }
            AttachmentSequence { n, choices }
        })
    }
}

impl fmt::Display for AttachmentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for choice in &self.choices {
            f.write_char(choice.symbol())?;
        }
        Ok(())
    }
}

pub fn reverse_sequence(seq: &AttachmentSequence) -> AttachmentSequence {
    let mut choices = seq.choices.clone();
    choices.reverse();
    AttachmentSequence { n: seq.n, choices }
}

/// Which vertex of the pendant path `x1 x2 x3 x4 x5` is glued to the chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AuxVariant {
    /// `x1`, an end of the path.
    Prime,
    /// `x2`.
    Tilde,
    /// `x3`, the middle of the path.
    Hat,
}

impl AuxVariant {
    pub const ALL: [AuxVariant; 3] = [Self::Prime, Self::Tilde, Self::Hat];

    /// Zero-based position of the glued vertex on the path.
    pub fn path_index(self) -> usize {
        match self {
            Self::Prime => 0,
            Self::Tilde => 1,
            Self::Hat => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Prime => "prime",
            Self::Tilde => "tilde",
            Self::Hat => "hat",
        }
    }
}

impl std::str::FromStr for AuxVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "prime" => Ok(Self::Prime),
            "tilde" => Ok(Self::Tilde),
            "hat" => Ok(Self::Hat),
            other => Err(Error::InvalidArgument(format!(
                "unknown auxiliary variant {other:?}, expected prime, tilde or hat"
            ))),
        }
    }
}

/// A simple undirected graph together with the hexagon structure it was
/// built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CactusGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    hexagons: Vec<[usize; 6]>,
    cut_vertices: Vec<usize>,
    terminal_cut: Option<usize>,
    pendant_path: Option<[usize; 5]>,
}

impl CactusGraph {
    pub fn empty() -> Self {
        Self {
            vertex_count: 0,
            edges: Vec::new(),
            hexagons: Vec::new(),
            cut_vertices: Vec::new(),
            terminal_cut: None,
            pendant_path: None,
        }
    }

    /// Builds a bare graph from an edge list. Used for oracle decompositions
    /// and tests; carries no hexagon structure.
    pub fn from_edges(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            if u == v || u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) is not valid on {vertex_count} vertices"
                )));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &edges {
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidArgument(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Self {
            vertex_count,
            edges,
            ..Self::empty()
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn hexagons(&self) -> &[[usize; 6]] {
        &self.hexagons
    }

    /// Vertices shared by consecutive hexagons, in chain order.
    pub fn cut_vertices(&self) -> &[usize] {
        &self.cut_vertices
    }

    /// First vertex of the last hexagon's tuple; `None` for the empty chain.
    pub fn terminal_cut(&self) -> Option<usize> {
        self.terminal_cut
    }

    /// Vertex ids of `x1..x5` for auxiliary graphs.
    pub fn pendant_path(&self) -> Option<[usize; 5]> {
        self.pendant_path
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        reached == self.vertex_count
    }

    fn push_hexagon(&mut self, entry: Option<usize>) -> [usize; 6] {
        let mut tuple = [0; 6];
        let start = match entry {
            Some(v) => {
                tuple[0] = v;
                1
            }
            None => 0,
        };
        for slot in tuple.iter_mut().skip(start) {
            *slot = self.vertex_count;
            self.vertex_count += 1;
        }
        for i in 0..6 {
            self.edges.push((tuple[i], tuple[(i + 1) % 6]));
        }
        self.hexagons.push(tuple);
        tuple
    }
}

/// Realizes the chain `R_n` described by `seq`.
pub fn build_chain(seq: &AttachmentSequence) -> CactusGraph {
    let mut g = CactusGraph::empty();
    if seq.n() == 0 {
        return g;
    }
    let first = g.push_hexagon(None);
    let mut previous = first;
    for k in 2..=seq.n() {
        // Hexagon k glues onto hexagon k-1; for k = 2 any vertex of the first
        // hexagon will do, and we take the start of its tuple.
        let entry = if k == 2 {
            first[0]
        } else {
            previous[seq.choices()[k - 3].distance()]
        };
        g.cut_vertices.push(entry);
        previous = g.push_hexagon(Some(entry));
    }
    g.terminal_cut = Some(previous[0]);
    g
}

/// Realizes `R_n` with a pendant path on five vertices whose vertex selected
/// by `variant` is glued at cyclic distance `pendant.distance()` from the last
/// hexagon's cut vertex. For `n = 0` the result is the bare path.
pub fn build_aux(seq: &AttachmentSequence, pendant: AttachmentType, variant: AuxVariant) -> CactusGraph {
    let mut g = build_chain(seq);
    let anchor = g
        .hexagons
        .last()
        .map(|last| last[pendant.distance()]);
    let mut path = [0; 5];
    for (i, slot) in path.iter_mut().enumerate() {
        *slot = match anchor {
            Some(v) if i == variant.path_index() => v,
            _ => {
                g.vertex_count += 1;
                g.vertex_count - 1
            }
        };
    }
    for pair in path.windows(2) {
        g.edges.push((pair[0], pair[1]));
    }
    g.pendant_path = Some(path);
    g
}

/// Renders `g` in Graphviz DOT syntax. Cut vertices are drawn as double
/// circles and carry a `cut=true` attribute.
pub fn to_dot(g: &CactusGraph) -> String {
    let mut out = String::from("graph cactus {\n");
    for v in 0..g.vertex_count {
        if g.cut_vertices.contains(&v) {
            let _ = writeln!(out, "  v{v} [shape=doublecircle, cut=true];");
        } else {
            let _ = writeln!(out, "  v{v};");
        }
    }
    for &(u, v) in &g.edges {
        let _ = writeln!(out, "  v{u} -- v{v};");
    }
    out.push_str("}\n");
    out
}
