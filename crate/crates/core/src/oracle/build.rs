//! Building diagrams by composing 2-tangles, and from braid words.

use super::diagram::{Diagram, Over, NE, NW, SE, SW};
use crate::pipeline::FractionNotation;

/// A planar 2-tangle: crossings plus a matching on crossing ports and the
/// four boundary points. Boundary point `k` (clockwise from NW) is node
/// `4n + k`.
#[derive(Clone, Debug)]
pub struct Tangle {
    over: Vec<Over>,
    partner: Vec<usize>,
    free_loops: usize,
}

/// Result of splicing out junction nodes from a node graph.
struct Resolved {
    partner: Vec<usize>,
    free_loops: usize,
}

/// Joins arcs through junctions. Nodes `0..4n` are crossing ports, `kept`
/// lists the additional nodes that survive (renumbered `4n, 4n + 1, …`),
/// and every other node is a junction glued to `glue[node]`.
fn resolve(ports: usize, arc: &[usize], glue: &[Option<usize>], kept: &[usize]) -> Resolved {
    let total = arc.len();
    let mut new_id = vec![usize::MAX; total];
    for (i, slot) in new_id.iter_mut().enumerate().take(ports) {
        *slot = i;
    }
    for (i, &k) in kept.iter().enumerate() {
        new_id[k] = ports + i;
    }
    let mut partner = vec![usize::MAX; ports + kept.len()];
    let mut seen = vec![false; total];
    for x in 0..total {
        if new_id[x] == usize::MAX || seen[x] {
            continue;
        }
        seen[x] = true;
        let mut y = arc[x];
        while let Some(z) = glue[y] {
            seen[y] = true;
            seen[z] = true;
            y = arc[z];
        }
        seen[y] = true;
        partner[new_id[x]] = new_id[y];
        partner[new_id[y]] = new_id[x];
    }
    let mut free_loops = 0;
    for x in 0..total {
        if seen[x] {
            continue;
        }
        free_loops += 1;
        let mut y = x;
        loop {
            seen[y] = true;
            let z = glue[y].expect("unmarked nodes are junctions");
            seen[z] = true;
            y = arc[z];
            if y == x {
                break;
            }
        }
    }
    Resolved { partner, free_loops }
}

impl Tangle {
    fn primitive(partner: [usize; 4]) -> Tangle {
        Tangle { over: Vec::new(), partner: partner.to_vec(), free_loops: 0 }
    }

    /// Two vertical strands, the identity for stacking.
    pub fn identity() -> Tangle {
        Tangle::primitive([SW, SE, NE, NW])
    }

    /// Two horizontal strands, the identity for juxtaposition.
    pub fn cupcap() -> Tangle {
        Tangle::primitive([NE, NW, SW, SE])
    }

    pub fn crossing(over: Over) -> Tangle {
        Tangle { over: vec![over], partner: vec![4, 5, 6, 7, 0, 1, 2, 3], free_loops: 0 }
    }

    pub fn crossing_count(&self) -> usize {
        self.over.len()
    }

    fn ports(&self) -> usize {
        4 * self.over.len()
    }

    fn corner(&self, k: usize) -> usize {
        self.ports() + k
    }

    /// Places `self` and `other` in one node space and identifies boundary
    /// points pairwise. `corners` picks the new NW, NE, SE, SW as
    /// `(from_other, corner)`.
    fn glue(&self, other: &Tangle, pairs: [(usize, usize); 2], corners: [(bool, usize); 4]) -> Tangle {
        let (p1, p2) = (self.ports(), other.ports());
        // Layout: ports of self, ports of other, corners of self, corners of other.
        let node1 = |i: usize| if i < p1 { i } else { p1 + p2 + (i - p1) };
        let node2 = |i: usize| if i < p2 { p1 + i } else { p1 + p2 + 4 + (i - p2) };
        let total = p1 + p2 + 8;
        let mut arc = vec![0; total];
        for (i, &j) in self.partner.iter().enumerate() {
            arc[node1(i)] = node1(j);
        }
        for (i, &j) in other.partner.iter().enumerate() {
            arc[node2(i)] = node2(j);
        }
        let mut glue = vec![None; total];
        for (a, b) in pairs {
            let (x, y) = (node1(self.corner(a)), node2(other.corner(b)));
            glue[x] = Some(y);
            glue[y] = Some(x);
        }
        let kept: Vec<usize> = corners
            .iter()
            .map(|&(second, k)| if second { node2(other.corner(k)) } else { node1(self.corner(k)) })
            .collect();
        let r = resolve(p1 + p2, &arc, &glue, &kept);
        let mut over = self.over.clone();
        over.extend_from_slice(&other.over);
        Tangle { over, partner: r.partner, free_loops: self.free_loops + other.free_loops + r.free_loops }
    }

    /// `self` on top of `other`.
    pub fn stack(&self, other: &Tangle) -> Tangle {
        self.glue(other, [(SW, NW), (SE, NE)], [(false, NW), (false, NE), (true, SE), (true, SW)])
    }

    /// `self` to the left of `other`.
    pub fn juxtapose(&self, other: &Tangle) -> Tangle {
        self.glue(other, [(NE, NW), (SE, SW)], [(false, NW), (true, NE), (true, SE), (false, SW)])
    }

    /// `|n|` crossings stacked vertically; `σ` for positive `n`.
    pub fn vertical_twist(n: i32) -> Tangle {
        let c = Tangle::crossing(if n > 0 { Over::A } else { Over::B });
        (0..n.unsigned_abs()).fold(Tangle::identity(), |t, _| t.stack(&c))
    }

    /// `|n|` crossings side by side; `σ_h` for positive `n`.
    pub fn horizontal_twist(n: i32) -> Tangle {
        let c = Tangle::crossing(if n > 0 { Over::B } else { Over::A });
        (0..n.unsigned_abs()).fold(Tangle::cupcap(), |t, _| t.juxtapose(&c))
    }

    /// Joins NW to SW and NE to SE around the outside.
    pub fn closure(&self) -> Diagram {
        let p = self.ports();
        // Two outer arcs: nodes (p+4, p+5) on the left, (p+6, p+7) on the right.
        let mut arc = self.partner.clone();
        arc.extend([p + 5, p + 4, p + 7, p + 6]);
        let mut glue = vec![None; p + 8];
        for (x, y) in [(p + NW, p + 4), (p + SW, p + 5), (p + NE, p + 6), (p + SE, p + 7)] {
            glue[x] = Some(y);
            glue[y] = Some(x);
        }
        let r = resolve(p, &arc, &glue, &[]);
        Diagram::new(self.over.clone(), r.partner, self.free_loops + r.free_loops)
            .expect("closure of a tangle is a closed diagram")
    }
}

/// The diagram of a 2-bridge notation, assembled the same way as the matrix
/// product: start from `CUPCAP`, adjoin `b₁` vertical twists on the right,
/// then alternately `dᵢ` horizontal twists on the right and `b_{i+1}`
/// vertical twists below, and close.
pub fn build_diagram(f: &FractionNotation) -> Diagram {
    let mut t = Tangle::cupcap().juxtapose(&Tangle::vertical_twist(f.first()));
    for (d, b) in f.steps() {
        t = t.juxtapose(&Tangle::horizontal_twist(d));
        t = t.stack(&Tangle::vertical_twist(b));
    }
    t.closure()
}

/// Closure of a braid on `strands` strands. Letter `i > 0` is `σᵢ` (strands
/// `i` and `i + 1`, 1-based) as an `A` crossing; `-i` is its inverse.
pub fn braid_closure(strands: usize, word: &[i32]) -> Diagram {
    let n = word.len();
    let ports = 4 * n;
    // Extra nodes: top ends T_p at ports + p, bottom ends B_p at ports + strands + p.
    let total = ports + 2 * strands;
    let mut arc = vec![usize::MAX; total];
    let mut glue = vec![None; total];
    let mut current: Vec<usize> = (0..strands).map(|p| ports + p).collect();
    let mut over = Vec::with_capacity(n);
    for (c, &g) in word.iter().enumerate() {
        assert!(g != 0 && (g.unsigned_abs() as usize) < strands, "braid letter {g} out of range for {strands} strands");
        let i = g.unsigned_abs() as usize - 1;
        over.push(if g > 0 { Over::A } else { Over::B });
        for (pos, top, bottom) in [(i, NW, SW), (i + 1, NE, SE)] {
            let port = 4 * c + top;
            arc[current[pos]] = port;
            arc[port] = current[pos];
            current[pos] = 4 * c + bottom;
        }
    }
    for p in 0..strands {
        let (t, b) = (ports + p, ports + strands + p);
        arc[current[p]] = b;
        arc[b] = current[p];
        glue[t] = Some(b);
        glue[b] = Some(t);
    }
    let r = resolve(ports, &arc, &glue, &[]);
    Diagram::new(over, r.partner, r.free_loops).expect("braid closure is a closed diagram")
}
