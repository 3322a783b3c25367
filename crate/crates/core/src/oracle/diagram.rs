//! Combinatorial 4-valent link diagrams.
//!
//! Each crossing has four ports numbered clockwise from the top left:
//! `0 = NW`, `1 = NE`, `2 = SE`, `3 = SW`. Port `4c + k` is port `k` of
//! crossing `c`, and arcs form a perfect matching on ports. A strand enters a
//! crossing at port `k` and leaves at the opposite port `k + 2 (mod 4)`.
//!
//! # Text format
//!
//! ```text
//! # comment
//! X <nw> <ne> <sw> <se> <A|B>
//! loops <k>
//! ```
//!
//! Port labels are arbitrary tokens without whitespace; the two ports sharing
//! a label are joined by an arc, and every label must occur exactly twice.
//! `A` means the SW–NE strand passes over, `B` the NW–SE strand. The optional
//! `loops` line (at most one) adds crossing-free circles. Blank lines and
//! text after `#` are ignored.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::OracleError;

pub const NW: usize = 0;
pub const NE: usize = 1;
pub const SE: usize = 2;
pub const SW: usize = 3;

/// Which diagonal of a crossing passes over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Over {
    /// The SW–NE strand is over; this is the crossing `σ`.
    A,
    /// The NW–SE strand is over; this is `σ⁻¹ = σ_h`.
    B,
}

impl Over {
    pub fn flipped(self) -> Over {
        match self {
            Over::A => Over::B,
            Over::B => Over::A,
        }
    }

    /// Whether the strand entering at port `k` is the over strand.
    pub fn is_over_at(self, k: usize) -> bool {
        match self {
            Over::A => k % 2 == 1,
            Over::B => k.is_multiple_of(2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    over: Vec<Over>,
    partner: Vec<usize>,
    free_loops: usize,
}

impl Diagram {
    /// Builds a diagram from crossing flags and the port matching.
    pub fn new(over: Vec<Over>, partner: Vec<usize>, free_loops: usize) -> Result<Self, OracleError> {
        let d = Diagram { over, partner, free_loops };
        d.validate()?;
        Ok(d)
    }

    pub fn empty() -> Self {
        Diagram { over: Vec::new(), partner: Vec::new(), free_loops: 0 }
    }

    /// `k` crossing-free circles.
    pub fn unlink(k: usize) -> Self {
        Diagram { over: Vec::new(), partner: Vec::new(), free_loops: k }
    }

    fn validate(&self) -> Result<(), OracleError> {
        let n = self.partner.len();
        if n != 4 * self.over.len() {
            return Err(OracleError::Malformed(format!(
                "{} crossings need {} ports, found {n}",
                self.over.len(),
                4 * self.over.len()
            )));
        }
        for (p, &q) in self.partner.iter().enumerate() {
            if q >= n || self.partner[q] != p || q == p {
                return Err(OracleError::Malformed(format!("port {p} is not matched to a distinct port")));
            }
        }
        Ok(())
    }

    pub fn crossing_count(&self) -> usize {
        self.over.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn over(&self) -> &[Over] {
        &self.over
    }

    pub fn partner(&self) -> &[usize] {
        &self.partner
    }

    /// The mirror diagram: every crossing flipped.
    pub fn mirror(&self) -> Diagram {
        Diagram {
            over: self.over.iter().map(|o| o.flipped()).collect(),
            partner: self.partner.clone(),
            free_loops: self.free_loops,
        }
    }

    pub fn with_crossing_flipped(&self, c: usize) -> Diagram {
        let mut d = self.clone();
        d.over[c] = d.over[c].flipped();
        d
    }

    pub fn with_extra_loops(&self, k: usize) -> Diagram {
        let mut d = self.clone();
        d.free_loops += k;
        d
    }

    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let shift = self.partner.len();
        let mut over = self.over.clone();
        over.extend_from_slice(&other.over);
        let mut partner = self.partner.clone();
        partner.extend(other.partner.iter().map(|p| p + shift));
        Diagram { over, partner, free_loops: self.free_loops + other.free_loops }
    }

    /// Closed components, each as the list of ports where it enters a
    /// crossing, starting from its least port.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.partner.len()];
        let mut out = Vec::new();
        for start in 0..self.partner.len() {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut p = start;
            loop {
                // Enter at p, leave at the opposite port, follow the arc.
                let exit = opposite(p);
                seen[p] = true;
                seen[exit] = true;
                comp.push(p);
                p = self.partner[exit];
                if p == start {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }

    /// Number of closed components, free loops included.
    pub fn component_count(&self) -> usize {
        self.components().len() + self.free_loops
    }

    /// Sum of crossing signs for the orientation given by [`Self::components`].
    pub fn writhe(&self) -> i32 {
        let mut up = vec![[false; 2]; self.over.len()];
        for comp in self.components() {
            for &p in &comp {
                up[p / 4][p % 2] = entering_upward(p % 4);
            }
        }
        (0..self.over.len()).map(|c| crossing_sign(self.over[c], up[c][1], up[c][0])).sum()
    }

    pub fn parse(src: &str) -> Result<Diagram, OracleError> {
        let mut over = Vec::new();
        let mut labels: HashMap<&str, Vec<usize>> = HashMap::new();
        let mut order: Vec<&str> = Vec::new();
        let mut loops: Option<usize> = None;
        for (lineno, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| OracleError::Parse { line: lineno + 1, message: msg };
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks[0] {
                "X" => {
                    if toks.len() != 6 {
                        return Err(bad(format!("crossing needs 4 ports and a flag, found {} fields", toks.len() - 1)));
                    }
                    let c = over.len();
                    // Text order is NW NE SW SE; internal order is clockwise.
                    for (tok, k) in toks[1..5].iter().zip([NW, NE, SW, SE]) {
                        let entry = labels.entry(tok).or_default();
                        if entry.is_empty() {
                            order.push(tok);
                        }
                        entry.push(4 * c + k);
                    }
                    over.push(match toks[5] {
                        "A" => Over::A,
                        "B" => Over::B,
                        other => return Err(bad(format!("over flag must be A or B, found `{other}`"))),
                    });
                }
                "loops" => {
                    if toks.len() != 2 {
                        return Err(bad("`loops` takes one count".into()));
                    }
                    if loops.is_some() {
                        return Err(bad("duplicate `loops` line".into()));
                    }
                    loops = Some(toks[1].parse().map_err(|_| bad(format!("bad loop count `{}`", toks[1])))?);
                }
                other => return Err(bad(format!("unknown directive `{other}`"))),
            }
        }
        let mut partner = vec![usize::MAX; 4 * over.len()];
        for label in order {
            let ports = &labels[label];
            if ports.len() != 2 {
                return Err(OracleError::Malformed(format!(
                    "label `{label}` occurs {} times; arcs need exactly two ends",
                    ports.len()
                )));
            }
            if ports[0] == ports[1] {
                return Err(OracleError::Malformed(format!("label `{label}` joins a port to itself")));
            }
            partner[ports[0]] = ports[1];
            partner[ports[1]] = ports[0];
        }
        Diagram::new(over, partner, loops.unwrap_or(0))
    }

    /// Renders the text format; arcs are labelled by their least port.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (c, o) in self.over.iter().enumerate() {
            out.push('X');
            for k in [NW, NE, SW, SE] {
                let p = 4 * c + k;
                let _ = write!(out, " {}", p.min(self.partner[p]));
            }
            out.push_str(if *o == Over::A { " A\n" } else { " B\n" });
        }
        if self.free_loops > 0 || self.over.is_empty() {
            let _ = writeln!(out, "loops {}", self.free_loops);
        }
        out
    }
}

pub(crate) fn opposite(p: usize) -> usize {
    (p & !3) | ((p + 2) & 3)
}

/// A strand entering through a bottom port travels upward.
pub(crate) fn entering_upward(k: usize) -> bool {
    k == SE || k == SW
}

/// Sign of a crossing given the direction of its SW–NE strand and NW–SE strand.
pub(crate) fn crossing_sign(over: Over, up_13: bool, up_02: bool) -> i32 {
    let base = if over == Over::A { 1 } else { -1 };
    if up_13 == up_02 {
        base
    } else {
        -base
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CURL: &str = "# one crossing closed on the right\nX l a l a A\n";

    #[test]
    fn parse_and_render_round_trip() {
        let d = Diagram::parse(CURL).unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.partner(), &[3, 2, 1, 0]);
        assert_eq!(d.component_count(), 1);
        let again = Diagram::parse(&d.to_text()).unwrap();
        assert_eq!(again, d);
        assert_eq!(Diagram::parse("loops 2").unwrap(), Diagram::unlink(2));
        assert_eq!(Diagram::parse(&Diagram::empty().to_text()).unwrap(), Diagram::empty());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Diagram::parse("X a b c d A"), Err(OracleError::Malformed(_))));
        assert!(matches!(Diagram::parse("X a a b b C"), Err(OracleError::Parse { line: 1, .. })));
        assert!(matches!(Diagram::parse("\nY"), Err(OracleError::Parse { line: 2, .. })));
        assert!(matches!(Diagram::parse("loops 1\nloops 2"), Err(OracleError::Parse { line: 2, .. })));
        assert!(matches!(Diagram::parse("X a b a b A extra"), Err(OracleError::Parse { .. })));
        assert!(Diagram::new(vec![Over::A], vec![1, 0, 2, 3], 0).is_err());
        assert!(Diagram::new(vec![Over::A], vec![1, 0], 0).is_err());
    }

    #[test]
    fn writhe_of_curls() {
        // Arc on the right side (NE–SE) with the SW–NE strand over: positive.
        assert_eq!(Diagram::parse(CURL).unwrap().writhe(), 1);
        assert_eq!(Diagram::parse(CURL).unwrap().mirror().writhe(), -1);
        // Cap on top (NW–NE): negative for A.
        let cap = Diagram::parse("X t t b b A\n").unwrap();
        assert_eq!(cap.partner(), &[1, 0, 3, 2]);
        assert_eq!(cap.writhe(), -1);
    }

    #[test]
    fn union_and_components() {
        let d = Diagram::parse(CURL).unwrap();
        let u = d.disjoint_union(&d.mirror()).with_extra_loops(1);
        assert_eq!(u.crossing_count(), 2);
        assert_eq!(u.component_count(), 3);
        assert_eq!(u.writhe(), 0);
        assert_eq!(opposite(5), 7);
        assert_eq!(opposite(2), 0);
    }
}
