//! Edge lists of the fixed exceptional graphs and the auxiliary graphs
//! F0..F3, with the vertex letters of the published drawings kept as-is
//! (`a` is vertex 0, `b` is vertex 1, ...).

use crate::graph::Graph;

type Letters = &'static [(char, char)];

/// Petersen graph: outer hexagon a..f, inner vertices g..j.
pub const P10: Letters = &[
    ('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'e'), ('e', 'f'), ('f', 'a'),
    ('a', 'i'), ('d', 'i'), ('f', 'g'), ('g', 'c'), ('e', 'h'), ('b', 'h'),
    ('i', 'j'), ('g', 'j'), ('h', 'j'),
];

/// Wagner graph: octagon a..h with the four long diagonals.
pub const W8: Letters = &[
    ('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'e'), ('e', 'f'), ('f', 'g'),
    ('g', 'h'), ('h', 'a'), ('a', 'e'), ('b', 'f'), ('c', 'g'), ('d', 'h'),
];

/// W8 plus a ninth vertex i joined to f, a, c.
pub const W8_PLUS: Letters = &[
    ('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'e'), ('e', 'f'), ('f', 'g'),
    ('g', 'h'), ('h', 'a'), ('a', 'e'), ('b', 'f'), ('c', 'g'), ('d', 'h'),
    ('i', 'f'), ('i', 'a'), ('i', 'c'),
];

/// Groetzsch graph: outer 5-cycle a..e, inner f..j, hub k.
pub const M11: Letters = &[
    ('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'e'), ('e', 'a'),
    ('a', 'g'), ('a', 'j'), ('b', 'f'), ('b', 'h'), ('c', 'g'), ('c', 'i'),
    ('d', 'h'), ('d', 'j'), ('e', 'i'), ('e', 'f'),
    ('k', 'f'), ('k', 'g'), ('k', 'h'), ('k', 'i'), ('k', 'j'),
];

/// Groetzsch graph without j. Letters skip j, so k is vertex 9.
pub const M11_MINUS: Letters = &[
    ('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'e'), ('e', 'a'),
    ('a', 'g'), ('b', 'f'), ('b', 'h'), ('c', 'g'), ('c', 'i'),
    ('d', 'h'), ('e', 'i'), ('e', 'f'),
    ('k', 'f'), ('k', 'g'), ('k', 'h'), ('k', 'i'),
];

/// Groetzsch graph without i and j. Letters skip i, j, so k is vertex 8.
pub const M11_EQ: Letters = &[
    ('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'e'), ('e', 'a'),
    ('a', 'g'), ('b', 'f'), ('b', 'h'), ('c', 'g'),
    ('d', 'h'), ('e', 'f'),
    ('k', 'f'), ('k', 'g'), ('k', 'h'),
];

/// K3,4*: octagon a..h with chords ad, bf, ch, dg, eh.
pub const K34_STAR: Letters = &[
    ('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'e'), ('e', 'f'), ('f', 'g'),
    ('g', 'h'), ('h', 'a'), ('a', 'd'), ('b', 'f'), ('c', 'h'), ('d', 'g'),
    ('e', 'h'),
];

/// F0: square a b c d (missing da) with inner vertices e..i. The drawing
/// lists `eg`, a straight segment through `i`; it is read as `ig`, which
/// keeps F0..F3 triangle-free (as their use inside triangle-free graphs
/// requires) and leaves the picture unchanged.
pub const F0: Letters = &[
    ('a', 'b'), ('b', 'c'), ('c', 'd'), ('a', 'f'), ('f', 'c'), ('a', 'h'),
    ('h', 'c'), ('d', 'e'), ('e', 'b'), ('d', 'g'), ('g', 'b'), ('h', 'i'),
    ('i', 'f'), ('e', 'i'), ('i', 'g'),
];

/// F1 = F0 plus the edge da.
pub const F1: Letters = &[
    ('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'a'), ('a', 'f'), ('f', 'c'),
    ('a', 'h'), ('h', 'c'), ('d', 'e'), ('e', 'b'), ('d', 'g'), ('g', 'b'),
    ('h', 'i'), ('i', 'f'), ('e', 'i'), ('i', 'g'),
];

/// F2: F1 with bc subdivided by j and gb rerouted to gj.
pub const F2: Letters = &[
    ('a', 'b'), ('b', 'j'), ('j', 'c'), ('c', 'd'), ('d', 'a'), ('a', 'f'),
    ('f', 'c'), ('a', 'h'), ('h', 'c'), ('d', 'e'), ('e', 'b'), ('d', 'g'),
    ('g', 'j'), ('h', 'i'), ('i', 'f'), ('e', 'i'), ('i', 'g'),
];

/// F3: F2 with cd subdivided by k and de rerouted to ke.
pub const F3: Letters = &[
    ('a', 'b'), ('b', 'j'), ('j', 'c'), ('c', 'k'), ('d', 'k'), ('d', 'a'),
    ('a', 'f'), ('f', 'c'), ('a', 'h'), ('h', 'c'), ('k', 'e'), ('e', 'b'),
    ('d', 'g'), ('g', 'j'), ('h', 'i'), ('i', 'f'), ('e', 'i'), ('i', 'g'),
];

/// Build a graph from letter pairs. `skip` lists letters absent from the
/// drawing; later letters shift down to keep vertices dense.
pub fn from_letters(order: usize, edges: Letters, skip: &[char]) -> Graph {
    let index = |c: char| -> usize {
        let raw = (c as u8 - b'a') as usize;
        raw - skip.iter().filter(|&&s| s < c).count()
    };
    Graph::from_edge_list(order, edges.iter().map(|&(u, v)| (index(u), index(v))))
        .expect("fixture edge lists are well formed")
}

pub fn f0() -> Graph {
    from_letters(9, F0, &[])
}
