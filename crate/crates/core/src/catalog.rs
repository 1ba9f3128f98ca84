//! The canonical catalog of the 27 three-vertex patterns, their names, and
//! the mirror reduction down to 18 representatives. Names drive detector
//! dispatch and CLI lookup.

use crate::pattern::{PairClass, Pattern};

/// One catalog entry: pair classes for (1,2), (1,3), (2,3).
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub id: usize,
    pub name: &'static str,
    pub classes: [PairClass; 3],
    /// Entry id of the mirror pattern (self for symmetric patterns).
    pub mirror_id: usize,
    /// True for the 18 representatives kept after mirror reduction.
    pub canonical: bool,
}

use PairClass::{Forbidden as F, Mandatory as M, Undecided as U};

pub const TRIANGLE: usize = 0;
pub const MIRROR_CHORDAL: usize = 1;
pub const COMPARABILITY: usize = 2;
pub const CO_CHORDAL: usize = 3;
pub const CHORDAL: usize = 4;
pub const CO_COMPARABILITY: usize = 5;
pub const MIRROR_CO_CHORDAL: usize = 6;
pub const CO_TRIANGLE: usize = 7;
pub const FOREST: usize = 8;
pub const MIRROR_INTERVAL: usize = 9;
pub const MIRROR_CO_INTERVAL: usize = 10;
pub const CO_FOREST: usize = 11;
pub const BIPARTITE: usize = 12;
pub const SPLIT: usize = 13;
pub const CO_SPLIT: usize = 14;
pub const CO_BIPARTITE: usize = 15;
pub const MIRROR_FOREST: usize = 16;
pub const CO_INTERVAL: usize = 17;
pub const INTERVAL: usize = 18;
pub const MIRROR_CO_FOREST: usize = 19;
pub const MIRROR_STAR: usize = 20;
pub const MIRROR_CO_STAR: usize = 21;
pub const LINEAR_FOREST: usize = 22;
pub const CO_LINEAR_FOREST: usize = 23;
pub const STAR: usize = 24;
pub const CO_STAR: usize = 25;
pub const NO_GRAPH: usize = 26;

/// The 27 patterns on three vertices. `classes` lists the pair classes for
/// (1,2), (1,3), (2,3) in that order. mirror-Split equals co-Split, so only
/// the latter appears.
pub const CATALOG3: [CatalogEntry; 27] = [
    CatalogEntry { id: 0, name: "triangle", classes: [M, M, M], mirror_id: 0, canonical: true },
    CatalogEntry { id: 1, name: "mirror-chordal", classes: [M, M, F], mirror_id: 4, canonical: false },
    CatalogEntry { id: 2, name: "comparability", classes: [M, F, M], mirror_id: 2, canonical: true },
    CatalogEntry { id: 3, name: "co-chordal", classes: [M, F, F], mirror_id: 6, canonical: true },
    CatalogEntry { id: 4, name: "chordal", classes: [F, M, M], mirror_id: 1, canonical: true },
    CatalogEntry { id: 5, name: "co-comparability", classes: [F, M, F], mirror_id: 5, canonical: true },
    CatalogEntry { id: 6, name: "mirror-co-chordal", classes: [F, F, M], mirror_id: 3, canonical: false },
    CatalogEntry { id: 7, name: "co-triangle", classes: [F, F, F], mirror_id: 7, canonical: true },
    CatalogEntry { id: 8, name: "forest", classes: [U, M, M], mirror_id: 16, canonical: true },
    CatalogEntry { id: 9, name: "mirror-interval", classes: [U, M, F], mirror_id: 18, canonical: false },
    CatalogEntry { id: 10, name: "mirror-co-interval", classes: [U, F, M], mirror_id: 17, canonical: false },
    CatalogEntry { id: 11, name: "co-forest", classes: [U, F, F], mirror_id: 19, canonical: true },
    CatalogEntry { id: 12, name: "bipartite", classes: [M, U, M], mirror_id: 12, canonical: true },
    CatalogEntry { id: 13, name: "split", classes: [M, U, F], mirror_id: 14, canonical: true },
    CatalogEntry { id: 14, name: "co-split", classes: [F, U, M], mirror_id: 13, canonical: false },
    CatalogEntry { id: 15, name: "co-bipartite", classes: [F, U, F], mirror_id: 15, canonical: true },
    CatalogEntry { id: 16, name: "mirror-forest", classes: [M, M, U], mirror_id: 8, canonical: false },
    CatalogEntry { id: 17, name: "co-interval", classes: [M, F, U], mirror_id: 10, canonical: true },
    CatalogEntry { id: 18, name: "interval", classes: [F, M, U], mirror_id: 9, canonical: true },
    CatalogEntry { id: 19, name: "mirror-co-forest", classes: [F, F, U], mirror_id: 11, canonical: false },
    CatalogEntry { id: 20, name: "mirror-star", classes: [U, U, M], mirror_id: 24, canonical: false },
    CatalogEntry { id: 21, name: "mirror-co-star", classes: [U, U, F], mirror_id: 25, canonical: false },
    CatalogEntry { id: 22, name: "linear-forest", classes: [U, M, U], mirror_id: 22, canonical: true },
    CatalogEntry { id: 23, name: "co-linear-forest", classes: [U, F, U], mirror_id: 23, canonical: true },
    CatalogEntry { id: 24, name: "star", classes: [M, U, U], mirror_id: 20, canonical: true },
    CatalogEntry { id: 25, name: "co-star", classes: [F, U, U], mirror_id: 21, canonical: true },
    CatalogEntry { id: 26, name: "no-graph", classes: [U, U, U], mirror_id: 26, canonical: true },
];

pub fn catalog_pattern(id: usize) -> Pattern {
    let entry = &CATALOG3[id];
    let mut p = Pattern::new(3);
    for (pair, class) in [(1usize, 2usize), (1, 3), (2, 3)].iter().zip(entry.classes) {
        if class != U {
            p.set_pair(pair.0, pair.1, class).unwrap();
        }
    }
    p
}

/// Identifies a three-vertex pattern in the catalog. Returns its entry id
/// and whether mirroring is required to reach the canonical representative.
pub fn canonicalize3(p: &Pattern) -> (usize, bool) {
    assert_eq!(p.k(), 3, "canonicalize3 requires a pattern on 3 vertices");
    let classes = [p.pair(1, 2), p.pair(1, 3), p.pair(2, 3)];
    let entry = CATALOG3
        .iter()
        .find(|e| e.classes == classes)
        .expect("catalog covers all 27 three-vertex patterns");
    (entry.id, !entry.canonical)
}

/// Entry id of the canonical representative for `id`.
pub fn canonical_id(id: usize) -> usize {
    let e = &CATALOG3[id];
    if e.canonical {
        e.id
    } else {
        e.mirror_id
    }
}

pub fn lookup_name(name: &str) -> Option<usize> {
    let name = name.to_ascii_lowercase();
    // mirror-Split is the same pattern as co-Split.
    let name = if name == "mirror-split" { "co-split".to_string() } else { name };
    CATALOG3.iter().find(|e| e.name == name).map(|e| e.id)
}

/// A graph class characterized by forbidding a set of three-vertex
/// patterns. Detection of the family is dispatch over its members.
#[derive(Debug, Clone, Copy)]
pub struct ClassFamily {
    pub class_name: &'static str,
    pub members: &'static [usize],
}

/// The 22 non-trivial classes definable by forbidden sets on three
/// vertices, each with one defining set of catalog ids. Classes whose
/// characterizations need extra traversals (spine/DFS checks) are listed
/// with their pattern sets only; detection here means detecting the set.
pub const CLASS_FAMILIES: [ClassFamily; 22] = [
    ClassFamily { class_name: "forests", members: &[FOREST] },
    ClassFamily { class_name: "linear-forests", members: &[LINEAR_FOREST] },
    ClassFamily { class_name: "stars", members: &[STAR] },
    ClassFamily { class_name: "interval", members: &[INTERVAL] },
    ClassFamily { class_name: "split", members: &[SPLIT] },
    ClassFamily { class_name: "bipartite", members: &[BIPARTITE] },
    ClassFamily { class_name: "chordal", members: &[CHORDAL] },
    ClassFamily { class_name: "comparability", members: &[COMPARABILITY] },
    ClassFamily { class_name: "triangle-free", members: &[TRIANGLE] },
    ClassFamily { class_name: "permutation", members: &[COMPARABILITY, CO_COMPARABILITY] },
    ClassFamily {
        class_name: "bipartite-permutation",
        members: &[COMPARABILITY, CO_COMPARABILITY, BIPARTITE],
    },
    // Any non-edge lands in one of the three triple positions, so this
    // family forbids all non-edges for n >= 3.
    ClassFamily { class_name: "clique", members: &[CO_STAR, CO_LINEAR_FOREST, MIRROR_CO_STAR] },
    ClassFamily { class_name: "threshold", members: &[CHORDAL, CO_CHORDAL] },
    ClassFamily { class_name: "proper-interval", members: &[CHORDAL, MIRROR_CHORDAL] },
    ClassFamily { class_name: "1-split", members: &[SPLIT, CO_SPLIT] },
    ClassFamily { class_name: "augmented-clique", members: &[CHORDAL, SPLIT] },
    ClassFamily { class_name: "2-star", members: &[CO_CHORDAL, FOREST] },
    ClassFamily { class_name: "bipartite-chain", members: &[CO_CHORDAL, BIPARTITE] },
    ClassFamily { class_name: "caterpillar", members: &[CO_COMPARABILITY, FOREST] },
    ClassFamily { class_name: "trivially-perfect", members: &[TRIANGLE, CHORDAL] },
    ClassFamily { class_name: "triangle-free-co-chordal", members: &[TRIANGLE, CO_CHORDAL] },
    ClassFamily {
        class_name: "complete-bipartite",
        members: &[CO_CHORDAL, CO_COMPARABILITY, BIPARTITE],
    },
];

pub fn lookup_class(name: &str) -> Option<&'static ClassFamily> {
    CLASS_FAMILIES.iter().find(|c| c.class_name == name)
}
