//! Brute-force evaluation by descending-diagram induction.
//!
//! Each component gets a basepoint and a direction. A crossing is *bad* when
//! the traversal first reaches it along the under strand. Switching every bad
//! crossing gives a descending diagram, a stacked unlink whose value is
//! `α^w δ^c` (self-writhe `w`, `c` components). The crossing-change relation
//! telescopes along those switches:
//!
//! ```text
//! ⟨D⟩ = ⟨D_descending⟩ + Σ ± t (⟨smoothing_V⟩ − ⟨smoothing_H⟩),   t = s − s⁻¹
//! ```
//!
//! with smoothings taken in the partially switched diagrams; each has fewer
//! crossings. Values are kept as polynomials in `δ` and only converted to a
//! rational function at the end.

use std::collections::HashMap;

use super::diagram::{crossing_sign, entering_upward, opposite, Diagram, Over};
use super::OracleError;
use crate::ratfunc::{delta_numerator, s_minus_inv, LaurentPoly, RatFunc};

pub const DEFAULT_CROSSING_LIMIT: usize = 12;

/// Smoothing joining NW–SW and NE–SE.
const SMOOTH_V: [(usize, usize); 2] = [(0, 3), (1, 2)];
/// Smoothing joining NW–NE and SW–SE.
const SMOOTH_H: [(usize, usize); 2] = [(0, 1), (2, 3)];

/// A polynomial in `δ` with Laurent-polynomial coefficients; entry `k` is
/// the coefficient of `δ^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeltaPoly {
    coeffs: Vec<LaurentPoly>,
}

impl DeltaPoly {
    pub fn zero() -> Self {
        DeltaPoly { coeffs: Vec::new() }
    }

    /// `α^a δ^d`
    pub fn monomial(a: i32, d: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); d + 1];
        coeffs[d] = LaurentPoly::monomial(1, a, 0);
        DeltaPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(LaurentPoly::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn add(&self, other: &DeltaPoly) -> DeltaPoly {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &DeltaPoly) -> DeltaPoly {
        self.combine(other, -1)
    }

    fn combine(&self, other: &DeltaPoly, sign: i32) -> DeltaPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, LaurentPoly::zero());
        for (c, o) in coeffs.iter_mut().zip(&other.coeffs) {
            c.add_scaled(o, &sign.into());
        }
        DeltaPoly { coeffs }.trim()
    }

    pub fn mul(&self, other: &DeltaPoly) -> DeltaPoly {
        if self.is_zero() || other.is_zero() {
            return DeltaPoly::zero();
        }
        let mut coeffs = vec![LaurentPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        DeltaPoly { coeffs }.trim()
    }

    pub fn scale(&self, k: &LaurentPoly) -> DeltaPoly {
        DeltaPoly { coeffs: self.coeffs.iter().map(|c| c * k).collect() }.trim()
    }

    /// Multiplies by `α^a δ^d`.
    pub fn shift(&self, a: i32, d: usize) -> DeltaPoly {
        if self.is_zero() {
            return DeltaPoly::zero();
        }
        let mut coeffs = vec![LaurentPoly::zero(); d];
        coeffs.extend(self.coeffs.iter().map(|c| c.shift(a, 0)));
        DeltaPoly { coeffs }
    }

    /// Substitutes `δ = (α − α⁻¹ + s − s⁻¹)/(s − s⁻¹)`.
    pub fn to_ratfunc(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let (p, q) = (delta_numerator(), s_minus_inv());
        let top = self.coeffs.len() - 1;
        // Horner from the top coefficient: coefficient k ends up times p^k q^(top-k).
        let mut num = LaurentPoly::zero();
        let mut q_pow = LaurentPoly::one();
        for c in self.coeffs.iter().rev() {
            num = &(&num * &p) + &(c * &q_pow);
            q_pow = &q_pow * &q;
        }
        let den = q.pow(top as u32);
        RatFunc::new(num, den).expect("q is nonzero")
    }
}

/// Which basepoints the descending-diagram induction uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Each component starts at its least port; components in increasing order.
    #[default]
    Forward,
    /// Each component starts at its greatest port; components in decreasing
    /// order.
    Reverse,
}

/// A reusable evaluator with its own memo table.
#[derive(Debug)]
pub struct Evaluator {
    strategy: Strategy,
    limit: usize,
    memo: Option<HashMap<Vec<u32>, DeltaPoly>>,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator::new()
    }
}

impl Evaluator {
    pub fn new() -> Self {
        Evaluator { strategy: Strategy::Forward, limit: DEFAULT_CROSSING_LIMIT, memo: Some(HashMap::new()) }
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_memo(mut self, on: bool) -> Self {
        self.memo = on.then(HashMap::new);
        self
    }

    pub fn with_crossing_limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub fn crossing_limit(&self) -> usize {
        self.limit
    }

    pub fn memo_len(&self) -> usize {
        self.memo.as_ref().map_or(0, HashMap::len)
    }

    pub fn evaluate(&mut self, d: &Diagram) -> Result<RatFunc, OracleError> {
        Ok(self.evaluate_delta(d)?.to_ratfunc())
    }

    pub fn evaluate_delta(&mut self, d: &Diagram) -> Result<DeltaPoly, OracleError> {
        if d.crossing_count() > self.limit {
            return Err(OracleError::CrossingLimit { crossings: d.crossing_count(), limit: self.limit });
        }
        let work = Work { over: d.over().to_vec(), partner: d.partner().to_vec() };
        Ok(self.eval(work).shift(0, d.free_loops()))
    }

    fn eval(&mut self, mut w: Work) -> DeltaPoly {
        let (alpha, loops) = w.remove_curls();
        let mut value = DeltaPoly::monomial(alpha, loops);
        for piece in w.split() {
            let v = self.eval_connected(piece);
            value = value.mul(&v);
        }
        value
    }

    fn eval_connected(&mut self, w: Work) -> DeltaPoly {
        let key = self.memo.as_ref().map(|_| w.canonical_key());
        if let (Some(memo), Some(key)) = (&self.memo, &key) {
            if let Some(v) = memo.get(key) {
                return v.clone();
            }
        }
        let v = self.eval_uncached(w);
        if let (Some(memo), Some(key)) = (&mut self.memo, key) {
            memo.insert(key, v.clone());
        }
        v
    }

    fn eval_uncached(&mut self, mut w: Work) -> DeltaPoly {
        let walk = w.traverse(self.strategy);
        let t = s_minus_inv();
        let mut acc = DeltaPoly::zero();
        for &c in &walk.bad {
            let (sv, lv) = w.smooth(c, SMOOTH_V);
            let v = self.eval(sv).shift(0, lv);
            let (sh, lh) = w.smooth(c, SMOOTH_H);
            let h = self.eval(sh).shift(0, lh);
            let diff = match w.over[c] {
                Over::A => v.sub(&h),
                Over::B => h.sub(&v),
            };
            acc = acc.add(&diff.scale(&t));
            w.over[c] = w.over[c].flipped();
        }
        acc.add(&DeltaPoly::monomial(w.self_writhe(&walk), walk.components.len()))
    }
}

/// Evaluates with a fresh default evaluator.
pub fn kauffman_bruteforce(d: &Diagram) -> Result<RatFunc, OracleError> {
    Evaluator::new().evaluate(d)
}

#[derive(Clone, Debug)]
struct Work {
    over: Vec<Over>,
    partner: Vec<usize>,
}

struct Walk {
    /// Entry ports per component, in traversal order.
    components: Vec<Vec<usize>>,
    bad: Vec<usize>,
}

fn curl_exponent(over: Over, k: usize) -> i32 {
    // Arcs NW–NE and SE–SW start at an even port; NE–SE and SW–NW at an odd one.
    let sides = if k % 2 == 1 { 1 } else { -1 };
    match over {
        Over::A => sides,
        Over::B => -sides,
    }
}

impl Work {
    fn crossings(&self) -> usize {
        self.over.len()
    }

    /// Removes crossing `c`, joining the outside ends of the given port
    /// pairs. Returns the new diagram and the number of circles closed off.
    fn remove(&self, c: usize, pairs: &[(usize, usize)]) -> (Work, usize) {
        let mut partner = self.partner.clone();
        let mut loops = 0;
        for &(x, y) in pairs {
            let (x, y) = (4 * c + x, 4 * c + y);
            let (px, py) = (partner[x], partner[y]);
            if px == y {
                loops += 1;
            } else {
                partner[px] = py;
                partner[py] = px;
            }
        }
        let renumber = |p: usize| if p >= 4 * c + 4 { p - 4 } else { p };
        let partner = partner
            .iter()
            .enumerate()
            .filter(|&(p, _)| p / 4 != c)
            .map(|(_, &q)| renumber(q))
            .collect();
        let mut over = self.over.clone();
        over.remove(c);
        (Work { over, partner }, loops)
    }

    fn smooth(&self, c: usize, pairs: [(usize, usize); 2]) -> (Work, usize) {
        self.remove(c, &pairs)
    }

    /// Removes curls until none remain; returns the accumulated `α` exponent
    /// and the number of circles freed.
    fn remove_curls(&mut self) -> (i32, usize) {
        let (mut alpha, mut loops) = (0, 0);
        'outer: loop {
            for c in 0..self.crossings() {
                for k in 0..4 {
                    if self.partner[4 * c + k] == 4 * c + (k + 1) % 4 {
                        alpha += curl_exponent(self.over[c], k);
                        let (w, l) = self.remove(c, &[((k + 2) % 4, (k + 3) % 4)]);
                        *self = w;
                        loops += l;
                        continue 'outer;
                    }
                }
            }
            return (alpha, loops);
        }
    }

    /// Connected pieces, each renumbered from zero.
    fn split(&self) -> Vec<Work> {
        let n = self.crossings();
        let mut piece = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if piece[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            piece[start] = count;
            while let Some(c) = stack.pop() {
                for k in 0..4 {
                    let d = self.partner[4 * c + k] / 4;
                    if piece[d] == usize::MAX {
                        piece[d] = count;
                        stack.push(d);
                    }
                }
            }
            count += 1;
        }
        if count <= 1 {
            return if n == 0 { Vec::new() } else { vec![self.clone()] };
        }
        let mut index = vec![0; n];
        let mut sizes = vec![0; count];
        for c in 0..n {
            index[c] = sizes[piece[c]];
            sizes[piece[c]] += 1;
        }
        let mut out: Vec<Work> = sizes
            .iter()
            .map(|&m| Work { over: Vec::with_capacity(m), partner: Vec::with_capacity(4 * m) })
            .collect();
        for c in 0..n {
            let w = &mut out[piece[c]];
            w.over.push(self.over[c]);
            for k in 0..4 {
                let q = self.partner[4 * c + k];
                w.partner.push(4 * index[q / 4] + q % 4);
            }
        }
        out
    }

    fn traverse(&self, strategy: Strategy) -> Walk {
        let n = self.partner.len();
        let mut seen = vec![false; n];
        let mut visited = vec![false; self.crossings()];
        let mut components = Vec::new();
        let mut bad = Vec::new();
        let starts: Box<dyn Iterator<Item = usize>> = match strategy {
            Strategy::Forward => Box::new(0..n),
            Strategy::Reverse => Box::new((0..n).rev()),
        };
        for start in starts {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut p = start;
            loop {
                let exit = opposite(p);
                seen[p] = true;
                seen[exit] = true;
                comp.push(p);
                let c = p / 4;
                if !visited[c] {
                    visited[c] = true;
                    if !self.over[c].is_over_at(p % 4) {
                        bad.push(c);
                    }
                }
                p = self.partner[exit];
                if p == start {
                    break;
                }
            }
            components.push(comp);
        }
        Walk { components, bad }
    }

    fn self_writhe(&self, walk: &Walk) -> i32 {
        // For each crossing and diagonal (index p % 2): (component, upward).
        let mut passes = vec![[(usize::MAX, false); 2]; self.crossings()];
        for (i, comp) in walk.components.iter().enumerate() {
            for &p in comp {
                passes[p / 4][p % 2] = (i, entering_upward(p % 4));
            }
        }
        passes
            .iter()
            .zip(&self.over)
            .filter(|(pass, _)| pass[0].0 == pass[1].0)
            .map(|(pass, &o)| crossing_sign(o, pass[1].1, pass[0].1))
            .sum()
    }

    /// Relabeling-invariant encoding: the least breadth-first labeling over
    /// every choice of starting crossing and port rotation.
    fn canonical_key(&self) -> Vec<u32> {
        let n = self.crossings();
        let mut best: Option<Vec<u32>> = None;
        let mut label = vec![usize::MAX; n];
        let mut rot = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        for c0 in 0..n {
            for r0 in 0..4 {
                label.iter_mut().for_each(|l| *l = usize::MAX);
                order.clear();
                label[c0] = 0;
                rot[c0] = r0;
                order.push(c0);
                let mut code = Vec::with_capacity(5 * n);
                let mut i = 0;
                while i < order.len() {
                    let c = order[i];
                    let flag = match (self.over[c], rot[c] % 2) {
                        (Over::A, 0) | (Over::B, 1) => 0,
                        _ => 1,
                    };
                    code.push(flag);
                    for j in 0..4 {
                        let q = self.partner[4 * c + (rot[c] + j) % 4];
                        let (d, k) = (q / 4, q % 4);
                        if label[d] == usize::MAX {
                            label[d] = order.len();
                            rot[d] = k;
                            order.push(d);
                        }
                        let local = (k + 4 - rot[d]) % 4;
                        code.push((4 * label[d] + local) as u32);
                    }
                    i += 1;
                }
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
        best.unwrap_or_default()
    }
}
