//! The Kauffman skein space of the ball with four boundary points.
//!
//! Elements are stored over the spanning set `{ID, CUPCAP, SIGMA}`:
//! `ID` is two vertical strands, `CUPCAP` two horizontal arcs and `SIGMA`
//! the crossing whose SW–NE strand passes over. The stacking product `⊙`
//! is the bilinear extension of
//!
//! ```text
//! ID ⊙ x = x ⊙ ID = x
//! CUPCAP ⊙ CUPCAP = δ·CUPCAP
//! CUPCAP ⊙ SIGMA = SIGMA ⊙ CUPCAP = α⁻¹·CUPCAP
//! SIGMA ⊙ SIGMA = ID + (s − s⁻¹)·SIGMA − (s − s⁻¹)α⁻¹·CUPCAP
//! ```
//!
//! and the side-by-side product `⊗` is its conjugate under the quarter
//! turn `ID ↔ CUPCAP`, `SIGMA ↔ SIGMA_H`.

use std::fmt;
use std::sync::OnceLock;

use crate::ratfunc::{delta, s_minus_inv, s_plus_inv, RatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Id,
    CupCap,
    Sigma,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::Id, Generator::CupCap, Generator::Sigma];

    fn index(self) -> usize {
        self as usize
    }
}

/// Which basis a [`SkeinVector`]'s coordinates refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `(ID, CUPCAP, SIGMA)`
    Gen,
    /// `(e₁ᵥ, e₂ᵥ, e₃ᵥ)`
    IdempV,
    /// `(e₁ₕ, e₂ₕ, e₃ₕ)`
    IdempH,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TangleError {
    #[error("basis mismatch: expected {expected:?}, found {found:?}")]
    BasisMismatch { expected: Basis, found: Basis },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SkeinVector {
    basis: Basis,
    coords: [RatFunc; 3],
}

impl SkeinVector {
    pub fn new(basis: Basis, coords: [RatFunc; 3]) -> Self {
        SkeinVector { basis, coords }
    }

    pub fn zero(basis: Basis) -> Self {
        SkeinVector::new(basis, [RatFunc::zero(), RatFunc::zero(), RatFunc::zero()])
    }

    pub fn generator(g: Generator) -> Self {
        let mut v = SkeinVector::zero(Basis::Gen);
        v.coords[g.index()] = RatFunc::one();
        v
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coords(&self) -> &[RatFunc; 3] {
        &self.coords
    }

    pub fn into_coords(self) -> [RatFunc; 3] {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(RatFunc::is_zero)
    }

    fn expect_basis(&self, expected: Basis) -> Result<(), TangleError> {
        if self.basis == expected {
            Ok(())
        } else {
            Err(TangleError::BasisMismatch { expected, found: self.basis })
        }
    }

    fn zip(&self, other: &SkeinVector, f: impl Fn(&RatFunc, &RatFunc) -> RatFunc) -> Result<Self, TangleError> {
        other.expect_basis(self.basis)?;
        let c = &self.coords;
        let d = &other.coords;
        Ok(SkeinVector::new(self.basis, [f(&c[0], &d[0]), f(&c[1], &d[1]), f(&c[2], &d[2])]))
    }

    pub fn add(&self, other: &SkeinVector) -> Result<Self, TangleError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &SkeinVector) -> Result<Self, TangleError> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        let c = &self.coords;
        SkeinVector::new(self.basis, [k * &c[0], k * &c[1], k * &c[2]])
    }

    /// Rewrites the vector in another basis.
    pub fn to_basis(&self, target: Basis) -> SkeinVector {
        if self.basis == target {
            return self.clone();
        }
        let gen = match self.basis {
            Basis::Gen => self.clone(),
            Basis::IdempV => combine(&idempotents_v(), &self.coords),
            Basis::IdempH => combine(&idempotents_h(), &self.coords),
        };
        match target {
            Basis::Gen => gen,
            Basis::IdempV => project(&gen, &idempotents_v(), dot, Basis::IdempV),
            Basis::IdempH => project(&gen, &idempotents_h(), cross, Basis::IdempH),
        }
    }
}

impl fmt::Display for SkeinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = match self.basis {
            Basis::Gen => ["ID", "CUPCAP", "SIGMA"],
            Basis::IdempV => ["e1v", "e2v", "e3v"],
            Basis::IdempH => ["e1h", "e2h", "e3h"],
        };
        let parts: Vec<String> = self
            .coords
            .iter()
            .zip(names)
            .map(|(c, n)| format!("[{c}]·{n}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn combine(basis: &[SkeinVector; 3], coords: &[RatFunc; 3]) -> SkeinVector {
    let mut acc = SkeinVector::zero(Basis::Gen);
    for (e, c) in basis.iter().zip(coords) {
        acc = acc.add(&e.scale(c)).expect("GEN basis");
    }
    acc
}

type Product = fn(&SkeinVector, &SkeinVector) -> Result<SkeinVector, TangleError>;

/// Coordinates of `v` against orthogonal idempotents: `v · eᵢ = cᵢ eᵢ`.
fn project(v: &SkeinVector, idem: &[SkeinVector; 3], prod: Product, basis: Basis) -> SkeinVector {
    let coords = std::array::from_fn(|i| {
        let p = prod(v, &idem[i]).expect("GEN basis");
        coefficient_of(&p, &idem[i]).expect("idempotent product is a multiple of the idempotent")
    });
    SkeinVector::new(basis, coords)
}

/// The scalar `λ` with `v = λ·w`, if there is one.
pub fn coefficient_of(v: &SkeinVector, w: &SkeinVector) -> Option<RatFunc> {
    if v.basis != w.basis {
        return None;
    }
    let pivot = w.coords.iter().position(|c| !c.is_zero())?;
    let lambda = &v.coords[pivot] / &w.coords[pivot];
    let fits = v.coords.iter().zip(&w.coords).all(|(a, b)| *a == &lambda * b);
    fits.then_some(lambda)
}

struct Constants {
    t: RatFunc,
    alpha_inv: RatFunc,
    delta: RatFunc,
    /// `table[i][j]` = generator i ⊙ generator j.
    table: [[[RatFunc; 3]; 3]; 3],
}

fn constants() -> &'static Constants {
    static C: OnceLock<Constants> = OnceLock::new();
    C.get_or_init(|| {
        let t = RatFunc::from_poly(s_minus_inv());
        let alpha_inv = RatFunc::alpha_pow(-1);
        let delta = delta();
        let zero = RatFunc::zero;
        let one = RatFunc::one;
        let id = [one(), zero(), zero()];
        let cup = [zero(), one(), zero()];
        let sig = [zero(), zero(), one()];
        let table = [
            [id.clone(), cup.clone(), sig.clone()],
            [cup.clone(), [zero(), delta.clone(), zero()], [zero(), alpha_inv.clone(), zero()]],
            [sig, [zero(), alpha_inv.clone(), zero()], [one(), -(&t * &alpha_inv), t.clone()]],
        ];
        Constants { t, alpha_inv, delta, table }
    })
}

/// Stacking product `u ⊙ v` (`u` on top).
pub fn dot(u: &SkeinVector, v: &SkeinVector) -> Result<SkeinVector, TangleError> {
    u.expect_basis(Basis::Gen)?;
    v.expect_basis(Basis::Gen)?;
    let c = constants();
    let mut out = [RatFunc::zero(), RatFunc::zero(), RatFunc::zero()];
    for (i, ui) in u.coords.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (j, vj) in v.coords.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            let k = ui * vj;
            for (o, entry) in out.iter_mut().zip(&c.table[i][j]) {
                if !entry.is_zero() {
                    *o = &*o + &(&k * entry);
                }
            }
        }
    }
    Ok(SkeinVector::new(Basis::Gen, out))
}

/// Quarter-turn rotation of the ball; an involution on the skein space.
pub fn rotate(v: &SkeinVector) -> Result<SkeinVector, TangleError> {
    v.expect_basis(Basis::Gen)?;
    let t = &constants().t;
    let [x, y, z] = &v.coords;
    let tz = t * z;
    Ok(SkeinVector::new(Basis::Gen, [y - &tz, x + &tz, z.clone()]))
}

/// Side-by-side product `u ⊗ v` (`u` on the left).
pub fn cross(u: &SkeinVector, v: &SkeinVector) -> Result<SkeinVector, TangleError> {
    rotate(&dot(&rotate(u)?, &rotate(v)?)?)
}

pub fn sigma() -> SkeinVector {
    SkeinVector::generator(Generator::Sigma)
}

/// `σ⁻¹ = SIGMA − (s − s⁻¹)·ID + (s − s⁻¹)·CUPCAP`
pub fn sigma_inverse() -> SkeinVector {
    let t = &constants().t;
    SkeinVector::new(Basis::Gen, [-t, t.clone(), RatFunc::one()])
}

/// The quarter turn of `SIGMA`, i.e. the crossing whose NW–SE strand is over.
/// As an element it coincides with `σ⁻¹`.
pub fn sigma_h() -> SkeinVector {
    rotate(&sigma()).expect("GEN basis")
}

pub fn identity() -> SkeinVector {
    SkeinVector::generator(Generator::Id)
}

pub fn cupcap() -> SkeinVector {
    SkeinVector::generator(Generator::CupCap)
}

fn power(unit: SkeinVector, base: SkeinVector, inverse: SkeinVector, n: i32, prod: Product) -> SkeinVector {
    let step = if n >= 0 { base } else { inverse };
    let mut acc = unit;
    for _ in 0..n.unsigned_abs() {
        acc = prod(&acc, &step).expect("GEN basis");
    }
    acc
}

/// `n` crossings stacked vertically; negative `n` uses the opposite crossing.
pub fn vertical_twist(n: i32) -> SkeinVector {
    power(identity(), sigma(), sigma_inverse(), n, dot)
}

/// `n` quarter-turned crossings placed side by side.
pub fn horizontal_twist(n: i32) -> SkeinVector {
    power(cupcap(), sigma_h(), sigma(), n, cross)
}

/// `(e₁ᵥ, e₂ᵥ, e₃ᵥ)` in GEN coordinates.
pub fn idempotents_v() -> [SkeinVector; 3] {
    static E: OnceLock<[SkeinVector; 3]> = OnceLock::new();
    E.get_or_init(|| {
        let c = constants();
        let s = RatFunc::s_pow(1);
        let s_inv = RatFunc::s_pow(-1);
        let d_inv = c.delta.inv().expect("δ ≠ 0");
        let norm = RatFunc::from_poly(s_plus_inv()).inv().expect("nonzero");
        let e1 = [
            &norm * &s_inv,
            -(&norm * &(&(&d_inv * &s_inv) + &(&d_inv * &c.alpha_inv))),
            norm.clone(),
        ];
        let e2 = [
            &norm * &s,
            &norm * &(&(&d_inv * &c.alpha_inv) - &(&d_inv * &s)),
            -&norm,
        ];
        let e3 = [RatFunc::zero(), d_inv, RatFunc::zero()];
        [
            SkeinVector::new(Basis::Gen, e1),
            SkeinVector::new(Basis::Gen, e2),
            SkeinVector::new(Basis::Gen, e3),
        ]
    })
    .clone()
}

/// `(e₁ₕ, e₂ₕ, e₃ₕ)`: the quarter turns of the vertical idempotents, in GEN
/// coordinates.
pub fn idempotents_h() -> [SkeinVector; 3] {
    static E: OnceLock<[SkeinVector; 3]> = OnceLock::new();
    E.get_or_init(|| idempotents_v().map(|e| rotate(&e).expect("GEN basis")))
        .clone()
}

/// Value of the closure that joins NW to SW and NE to SE.
///
/// `ID` closes to two circles, `CUPCAP` to one, and `SIGMA` to one circle
/// with a positive curl.
pub fn closure(v: &SkeinVector) -> Result<RatFunc, TangleError> {
    v.expect_basis(Basis::Gen)?;
    let c = constants();
    let d = &c.delta;
    let [x, y, z] = &v.coords;
    Ok(&(&(x * &(d * d)) + &(y * d)) + &(&(z * d) * &RatFunc::alpha_pow(1)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SkeinMatrix {
    entries: [[RatFunc; 3]; 3],
}

impl SkeinMatrix {
    pub fn new(entries: [[RatFunc; 3]; 3]) -> Self {
        SkeinMatrix { entries }
    }

    pub fn identity() -> Self {
        SkeinMatrix::diagonal([RatFunc::one(), RatFunc::one(), RatFunc::one()])
    }

    pub fn diagonal(d: [RatFunc; 3]) -> Self {
        let [a, b, c] = d;
        let z = RatFunc::zero;
        SkeinMatrix::new([[a, z(), z()], [z(), b, z()], [z(), z(), c]])
    }

    /// Entry in row `i`, column `j` (zero-based).
    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: RatFunc) {
        self.entries[i][j] = value;
    }

    pub fn entries(&self) -> &[[RatFunc; 3]; 3] {
        &self.entries
    }

    pub fn mul(&self, rhs: &SkeinMatrix) -> SkeinMatrix {
        let entries = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(RatFunc::zero(), |acc, k| {
                    &acc + &(&self.entries[i][k] * &rhs.entries[k][j])
                })
            })
        });
        SkeinMatrix { entries }
    }

    pub fn apply(&self, v: &[RatFunc; 3]) -> [RatFunc; 3] {
        std::array::from_fn(|i| {
            self.entries[i]
                .iter()
                .zip(v)
                .filter(|(m, x)| !m.is_zero() && !x.is_zero())
                .fold(RatFunc::zero(), |acc, (m, x)| &acc + &(m * x))
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == SkeinMatrix::identity()
    }
}

/// `M = (m_ij)` with `e_iₕ ⊗ e_jᵥ = m_ij·e_iₕ`, derived from the products.
///
/// Column `j` holds the coordinates of `e_jᵥ` in the horizontal basis.
pub fn base_change_matrix() -> SkeinMatrix {
    static M: OnceLock<SkeinMatrix> = OnceLock::new();
    M.get_or_init(|| {
        let h = idempotents_h();
        let v = idempotents_v();
        let entries = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let p = cross(&h[i], &v[j]).expect("GEN basis");
                coefficient_of(&p, &h[i]).expect("e_ih absorbs e_jv up to a scalar")
            })
        });
        SkeinMatrix::new(entries)
    })
    .clone()
}

/// The closed-form entries of `M` written in terms of `α`, `s` and `δ`.
pub fn closed_form_base_change_matrix() -> SkeinMatrix {
    let c = constants();
    let s = RatFunc::s_pow(1);
    let s_inv = RatFunc::s_pow(-1);
    let a = RatFunc::alpha_pow(1);
    let a_inv = &c.alpha_inv;
    let d = &c.delta;
    let d_inv = d.inv().expect("δ ≠ 0");
    let norm = RatFunc::from_poly(s_plus_inv()).inv().expect("nonzero");
    let ds_inv = &d_inv * &s_inv; // δ⁻¹s⁻¹
    let ds = &d_inv * &s; // δ⁻¹s
    let da = &d_inv * a_inv; // δ⁻¹α⁻¹
    let m11 = &norm * &(&(&s_inv - &ds_inv) - &da);
    let m12 = &norm * &(&(&(-&s_inv) - &ds) + &da);
    let m21 = &norm * &(&(&(-&s) - &ds_inv) - &da);
    let m22 = &norm * &(&(&s - &ds) + &da);
    let m31 = &norm * &(&(&(&(&s_inv * d) + &a) - &ds_inv) - &da);
    let m32 = &norm * &(&(&(&(&s * d) - &a) - &ds) + &da);
    SkeinMatrix::new([
        [m11, m12, d_inv.clone()],
        [m21, m22, d_inv.clone()],
        [m31, m32, d_inv],
    ])
}

/// Twist eigenvalues `(s, −s⁻¹, α⁻¹)` raised to the `n`th power.
pub fn twist_eigenvalues(n: i32) -> [RatFunc; 3] {
    let lambda = [RatFunc::s_pow(1), -RatFunc::s_pow(-1), RatFunc::alpha_pow(-1)];
    lambda.map(|l| l.powi(n).expect("nonzero eigenvalue"))
}
