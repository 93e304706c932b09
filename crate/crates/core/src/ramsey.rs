//! Monochromatic clique search and exhaustive brute-force verifiers.
//!
//! The enumeration sweeps are the ground truth for every combinatorial claim
//! made elsewhere: they materialize full lists and counts rather than
//! stopping at the first witness.

use crate::coloring::{color_by_labels, edge_count, edge_index, EdgeColor, EdgeColored, VertexLabeling};
use crate::error::{Error, Result};

/// A vertex subset whose induced edges all share one color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonochromaticClique {
    pub vertices: Vec<usize>,
    pub color: EdgeColor,
}

/// Outcome of the exhaustive R(3,3) sweep for one n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyVerdict {
    pub n: usize,
    pub all_colorings_contain_triangle: bool,
    /// Number of colorings with no monochromatic triangle.
    pub counterexample_count: u64,
    /// Lexicographically first triangle-free coloring, if any.
    pub sample_counterexample: Option<MaskColoring>,
}

/// Outcome of the sweep over all two-valued vertex labelings of K_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitiveRamseyVerdict {
    pub n: usize,
    pub every_assignment_has_green_triangle_or_red_path2: bool,
    pub no_red_triangle_ever: bool,
}

/// A K_n coloring packed into the bits of a word: bit e (lexicographic edge
/// order) set means red, clear means green.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaskColoring {
    pub n: usize,
    pub bits: u64,
}

impl EdgeColored for MaskColoring {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn color(&self, i: usize, k: usize) -> EdgeColor {
        let (i, k) = if i < k { (i, k) } else { (k, i) };
        if self.bits >> edge_index(self.n, i, k) & 1 == 1 {
            EdgeColor::Red
        } else {
            EdgeColor::Green
        }
    }
}

/// All monochromatic triangles of a colored K_n, in lexicographic vertex order.
pub fn find_monochromatic_triangles<G: EdgeColored>(graph: &G) -> Vec<MonochromaticClique> {
    let n = graph.vertex_count();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let cij = graph.color(i, j);
            for k in (j + 1)..=n {
                if graph.color(i, k) == cij && graph.color(j, k) == cij {
                    out.push(MonochromaticClique {
                        vertices: vec![i, j, k],
                        color: cij,
                    });
                }
            }
        }
    }
    out
}

/// All monochromatic cliques of the given size, in lexicographic vertex order.
pub fn find_monochromatic_cliques<G: EdgeColored>(
    graph: &G,
    size: usize,
) -> Result<Vec<MonochromaticClique>> {
    let n = graph.vertex_count();
    if size < 2 || size > n {
        return Err(Error::SizeOutOfRange { size, n });
    }
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(size);
    extend_clique(graph, n, size, 1, &mut chosen, &mut out);
    Ok(out)
}

fn extend_clique<G: EdgeColored>(
    graph: &G,
    n: usize,
    size: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<MonochromaticClique>,
) {
    if chosen.len() == size {
        let color = graph.color(chosen[0], chosen[1]);
        out.push(MonochromaticClique {
            vertices: chosen.clone(),
            color,
        });
        return;
    }
    for v in from..=n {
        // all edges to the existing members must share the established color;
        // the first two vertices establish it
        let consistent = if chosen.len() < 2 {
            true
        } else {
            let color = graph.color(chosen[0], chosen[1]);
            chosen.iter().all(|&u| graph.color(u, v) == color)
        };
        if consistent {
            chosen.push(v);
            extend_clique(graph, n, size, v + 1, chosen, out);
            chosen.pop();
        }
    }
}

/// Exhaustively enumerate every red/green coloring of K_n (edge-lexicographic
/// bit encoding) and report whether each contains a monochromatic triangle.
pub fn verify_r33(n: usize) -> Result<RamseyVerdict> {
    if !(2..=7).contains(&n) {
        return Err(Error::EnumerationBound { n, min: 2, max: 7 });
    }
    let edges = edge_count(n);
    // triangle -> its three edge bit positions
    let mut triangles = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                triangles.push((
                    edge_index(n, i, j),
                    edge_index(n, i, k),
                    edge_index(n, j, k),
                ));
            }
        }
    }
    let mut counterexample_count = 0u64;
    let mut sample = None;
    for bits in 0..(1u64 << edges) {
        let has_mono = triangles.iter().any(|&(a, b, c)| {
            let (x, y, z) = (bits >> a & 1, bits >> b & 1, bits >> c & 1);
            x == y && y == z
        });
        if !has_mono {
            if sample.is_none() {
                sample = Some(MaskColoring { n, bits });
            }
            counterexample_count += 1;
        }
    }
    Ok(RamseyVerdict {
        n,
        all_colorings_contain_triangle: counterexample_count == 0,
        counterexample_count,
        sample_counterexample: sample,
    })
}

/// Sweep all 2^n two-valued labelings of n vertices under the equality
/// coloring (green iff labels equal) and check the two structural claims:
/// no labeling ever produces a red triangle, and (for n >= 3) every labeling
/// produces a green triangle or a two-edge red path.
pub fn verify_transitive_ramsey(n: usize) -> Result<TransitiveRamseyVerdict> {
    if !(2..=20).contains(&n) {
        return Err(Error::EnumerationBound { n, min: 2, max: 20 });
    }
    let mut no_red_triangle_ever = true;
    let mut every_assignment = true;
    for labels in 0u32..(1u32 << n) {
        let sign = |v: usize| labels >> (v - 1) & 1; // vertices 1..n
        let mut green_triangle = false;
        let mut red_triangle = false;
        let mut red_path2 = false;
        for i in 1..=n {
            for j in (i + 1)..=n {
                for k in (j + 1)..=n {
                    let (si, sj, sk) = (sign(i), sign(j), sign(k));
                    if si == sj && sj == sk {
                        green_triangle = true;
                    }
                    if si != sj && sj != sk && si != sk {
                        red_triangle = true;
                    }
                    // a two-edge red path centered at any of the three
                    if (si != sj && sj != sk) || (sj != si && si != sk) || (si != sk && sk != sj) {
                        red_path2 = true;
                    }
                }
            }
        }
        if red_triangle {
            no_red_triangle_ever = false;
        }
        if !(green_triangle || red_path2) {
            every_assignment = false;
        }
    }
    Ok(TransitiveRamseyVerdict {
        n,
        every_assignment_has_green_triangle_or_red_path2: every_assignment,
        no_red_triangle_ever,
    })
}

/// Enumerate every partition of n labeled vertices into parts of size at most
/// `max_part_size` and report whether the induced equality coloring always
/// contains a red monochromatic triangle.
pub fn verify_multipartite_red_triangle(n: usize, max_part_size: usize) -> bool {
    if n < 3 || max_part_size == 0 {
        return false;
    }
    let mut assignment = vec![0usize; n];
    let mut part_sizes: Vec<usize> = Vec::new();
    all_partitions_forced(&mut assignment, &mut part_sizes, 0, max_part_size)
}

fn all_partitions_forced(
    assignment: &mut Vec<usize>,
    part_sizes: &mut Vec<usize>,
    vertex: usize,
    max_part_size: usize,
) -> bool {
    if vertex == assignment.len() {
        let labeling = VertexLabeling::new(assignment.clone()).expect("non-empty");
        let graph = color_by_labels(&labeling).expect("n >= 3");
        return find_monochromatic_triangles(&graph)
            .iter()
            .any(|t| t.color == EdgeColor::Red);
    }
    // restricted-growth enumeration: existing part (with room) or a fresh one
    for part in 0..part_sizes.len() {
        if part_sizes[part] < max_part_size {
            assignment[vertex] = part;
            part_sizes[part] += 1;
            let ok = all_partitions_forced(assignment, part_sizes, vertex + 1, max_part_size);
            part_sizes[part] -= 1;
            if !ok {
                return false;
            }
        }
    }
    assignment[vertex] = part_sizes.len();
    part_sizes.push(1);
    let ok = all_partitions_forced(assignment, part_sizes, vertex + 1, max_part_size);
    part_sizes.pop();
    ok
}
