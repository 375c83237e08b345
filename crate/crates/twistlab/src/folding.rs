//! Standard automorphisms of simply-laced Dynkin diagrams and the data they fold to.
//!
//! The base group `G` is adjoint, so its coweight lattice `X_*(T)` has the
//! fundamental coweights `ω̌_i` as a basis; coweights are given in those
//! coordinates. The folded side has two readings: `𝔤^σ` (simple roots `β_j`,
//! fundamental weights `λ_j`) and the group `H = (Ǧ)^τ` whose weight lattice
//! contains the coinvariants `X_*(T)_σ` (simple roots `γ_j`, fundamental
//! weights `ϖ_j`). Coinvariant classes are stored in `ϖ`-coordinates.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_linalg::{invert, mat_vec, smith_normal_form, Rational};
use crate::root_system::{CartanType, Family, RootSystem, WeightVec};

/// A standard automorphism `σ = τ ∘ i^h` of a simply-laced base system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldingDatum {
    pub base: CartanType,
    pub order: u32,
    /// Diagram automorphism, 0-based.
    pub tau: Vec<usize>,
    /// `α_i(h)`; nonzero only for the two middle nodes of `A_{2ℓ}`.
    pub h: Vec<i64>,
}

impl FoldingDatum {
    /// The standard automorphism of order `m` on `base`.
    pub fn standard(base: CartanType, m: u32) -> Result<FoldingDatum> {
        let n = base.rank;
        let unsupported = Error::UnsupportedFolding { family: base.family.letter(), rank: n, order: m };
        let mut h = vec![0; n];
        let tau: Vec<usize> = match (base.family, m) {
            (Family::A, 2) if n >= 3 && n % 2 == 1 => (0..n).map(|i| n - 1 - i).collect(),
            (Family::A, 4) if n >= 2 && n.is_multiple_of(2) => {
                h[n / 2 - 1] = 1;
                h[n / 2] = 1;
                (0..n).map(|i| n - 1 - i).collect()
            }
            (Family::D, 2) if n >= 4 => {
                let mut t: Vec<usize> = (0..n).collect();
                t.swap(n - 2, n - 1);
                t
            }
            (Family::D, 3) if n == 4 => vec![2, 1, 3, 0],
            (Family::E, 2) if n == 6 => vec![5, 1, 4, 3, 2, 0],
            _ => return Err(unsupported),
        };
        Ok(FoldingDatum { base, order: m, tau, h })
    }

    /// Half the rank of `A_{2ℓ}` when this is the `(A_{2ℓ}, 4)` datum.
    pub fn odd_a_ell(&self) -> Option<usize> {
        (self.base.family == Family::A && self.order == 4).then_some(self.base.rank / 2)
    }

    /// Type of the fixed-point algebra `𝔤^σ`.
    pub fn fixed_type(&self) -> CartanType {
        let n = self.base.rank;
        let (family, rank) = match (self.base.family, self.order) {
            (Family::A, 2) => (Family::C, n.div_ceil(2)),
            (Family::A, _) => (Family::C, n / 2),
            (Family::D, 2) => (Family::B, n - 1),
            (Family::D, _) => (Family::G, 2),
            _ => (Family::F, 4),
        };
        CartanType { family, rank }
    }

    /// Type of `H = (Ǧ)^τ`, whose simple roots are the classes `γ_j`.
    pub fn h_type(&self) -> CartanType {
        match self.odd_a_ell() {
            Some(l) => CartanType { family: Family::B, rank: l },
            None => self.fixed_type(),
        }
    }

    /// The folding map `η: I → I_σ` (0-based).
    pub fn eta(&self, i: usize) -> usize {
        let n = self.base.rank;
        match (self.base.family, self.order) {
            (Family::A, _) => i.min(n - 1 - i),
            (Family::D, 2) => i.min(n - 2),
            (Family::D, _) => usize::from(i == 1),
            _ => [3, 0, 2, 1, 2, 3][i],
        }
    }

    /// `η⁻¹(j)`, increasing.
    pub fn fiber(&self, j: usize) -> Vec<usize> {
        (0..self.base.rank).filter(|&i| self.eta(i) == j).collect()
    }

    /// `σ(λ)` on coweights; `σ` acts on `X_*(T)` through `τ`.
    pub fn sigma_coweight(&self, l: &WeightVec) -> WeightVec {
        let mut out = vec![0; l.0.len()];
        for (i, &x) in l.0.iter().enumerate() {
            out[self.tau[i]] = x;
        }
        WeightVec(out)
    }
}

/// A folding datum together with the base, fixed-point and `H` root systems.
#[derive(Clone, Debug)]
pub struct FoldedSystem {
    pub datum: FoldingDatum,
    pub base: RootSystem,
    pub folded: RootSystem,
    pub h: RootSystem,
    /// Rows of the Smith transform spanning the free quotient of `X_*(T)` by `(1−σ)X_*(T)`.
    quotient_rows: Vec<Vec<BigInt>>,
    /// Maps quotient coordinates to `ϖ`-coordinates, and back.
    quotient_to_h: Vec<Vec<Rational>>,
    h_to_quotient: Vec<Vec<Rational>>,
}

/// A class in `X_*(T)_σ`, in the `ϖ`-basis of `H`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoinvariantWeight(pub WeightVec);

impl FoldedSystem {
    pub fn new(datum: FoldingDatum) -> FoldedSystem {
        let base = RootSystem::new(datum.base);
        let folded = RootSystem::new(datum.fixed_type());
        let h = RootSystem::new(datum.h_type());
        let n = datum.base.rank;
        let m: Vec<Vec<i64>> = (0..n)
            .map(|r| (0..n).map(|c| i64::from(r == c) - i64::from(r == datum.tau[c])).collect())
            .collect();
        let snf = smith_normal_form(&m);
        let diag = snf.diagonal();
        let rank = diag.iter().filter(|d| !d.is_zero()).count();
        let quotient_rows: Vec<Vec<BigInt>> = snf.u[rank..].to_vec();
        let mut fs = FoldedSystem { datum, base, folded, h, quotient_rows, quotient_to_h: Vec::new(), h_to_quotient: Vec::new() };
        let l = fs.h.rank();
        // Γ: columns are the quotient coordinates of γ_j = class of α̌_i
        let gamma: Vec<Vec<Rational>> = {
            let cols: Vec<Vec<Rational>> = (0..l)
                .map(|j| {
                    let i = fs.datum.fiber(j)[0];
                    fs.quotient_coords(&fs.base.simple_root_weight(i))
                })
                .collect();
            (0..l).map(|r| (0..l).map(|c| cols[c][r].clone()).collect()).collect()
        };
        let gamma_inv = invert(&gamma).expect("classes of simple coroots are independent");
        let c_h: Vec<Vec<Rational>> =
            fs.h.cartan.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect();
        fs.quotient_to_h = matmul(&c_h, &gamma_inv);
        fs.h_to_quotient = invert(&fs.quotient_to_h).expect("invertible");
        fs
    }

    pub fn standard(base: CartanType, m: u32) -> Result<FoldedSystem> {
        Ok(FoldedSystem::new(FoldingDatum::standard(base, m)?))
    }

    pub fn base_rank(&self) -> usize {
        self.base.rank()
    }

    pub fn folded_rank(&self) -> usize {
        self.folded.rank()
    }

    fn quotient_coords(&self, l: &WeightVec) -> Vec<Rational> {
        self.quotient_rows
            .iter()
            .map(|row| Rational::from(row.iter().zip(&l.0).map(|(a, &x)| a * BigInt::from(x)).sum::<BigInt>()))
            .collect()
    }

    /// `β_j` in base simple-root coordinates (a restriction of `α_i`, doubled
    /// at `j = ℓ` for `A_{2ℓ}`).
    pub fn beta(&self, j: usize) -> Vec<i64> {
        let mut v = vec![0; self.base_rank()];
        v[self.datum.fiber(j)[0]] = if self.is_doubled(j) { 2 } else { 1 };
        v
    }

    /// `β̌_j = Σ_{i∈η⁻¹(j)} α̌_i` in base simple-coroot coordinates.
    pub fn beta_check(&self, j: usize) -> Vec<i64> {
        let mut v = vec![0; self.base_rank()];
        for i in self.datum.fiber(j) {
            v[i] = 1;
        }
        v
    }

    /// `λ_j = ω_i|_{𝔥^σ}` for any `i ∈ η⁻¹(j)`, as a base weight.
    pub fn lambda(&self, j: usize) -> WeightVec {
        WeightVec::fundamental(self.base_rank(), self.datum.fiber(j)[0])
    }

    /// `λ̌_j` in `ω̌`-coordinates of the base.
    pub fn lambda_check(&self, j: usize) -> Vec<Rational> {
        let c = if self.is_doubled(j) { Rational::new(1, 2) } else { Rational::one() };
        let mut v = vec![Rational::zero(); self.base_rank()];
        for i in self.datum.fiber(j) {
            v[i] = c.clone();
        }
        v
    }

    fn is_doubled(&self, j: usize) -> bool {
        self.datum.odd_a_ell() == Some(j + 1)
    }

    /// `⟨β_k, β̌_j⟩` computed in the base; equals the folded Cartan matrix.
    pub fn folded_pairing(&self) -> Vec<Vec<i64>> {
        let r = self.folded_rank();
        (0..r)
            .map(|j| {
                let bc = self.beta_check(j);
                (0..r)
                    .map(|k| {
                        let b = self.beta(k);
                        (0..self.base_rank())
                            .map(|i| (0..self.base_rank()).map(|i2| bc[i2] * self.base.cartan[i2][i] * b[i]).sum::<i64>())
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    /// `ι(λ)` in `λ_j`-coordinates: `ι(λ)_j = (λ, β̌_j)` for the normalized form
    /// on `𝔥`, under which `(α̌_i, α̌_k) = a_ik` for simply-laced `𝔤`.
    pub fn iota(&self, l: &WeightVec) -> Vec<Rational> {
        let n = self.base_rank();
        // coroot coordinates of λ
        let x = mat_vec(self.base.cartan_inverse(), &l.0.iter().map(|&c| Rational::from(c)).collect::<Vec<_>>());
        (0..self.folded_rank())
            .map(|j| {
                let mut s = Rational::zero();
                for i in self.datum.fiber(j) {
                    for (k, xk) in x.iter().enumerate().take(n) {
                        s += &(xk * &Rational::from(self.base.cartan[k][i]));
                    }
                }
                s
            })
            .collect()
    }

    /// `ι(γ_j)`.
    pub fn iota_gamma(&self, j: usize) -> Vec<Rational> {
        self.iota(&self.base.simple_root_weight(self.datum.fiber(j)[0]))
    }

    /// Class of `λ` in `X_*(T)_σ`, via the Smith normal form of `1 − σ`.
    pub fn project(&self, l: &WeightVec) -> CoinvariantWeight {
        let q = self.quotient_coords(l);
        let w = mat_vec(&self.quotient_to_h, &q);
        CoinvariantWeight(WeightVec(
            w.iter().map(|x| x.to_i64().expect("ϖ-coordinates of a coinvariant class are integral")).collect(),
        ))
    }

    /// Second route to `project`: `⟨λ̄, γ̌_j⟩ = 2(ιλ, ιγ_j)/(ιγ_j, ιγ_j)` with the
    /// form of `𝔤^σ` on `(𝔥^σ)^∨`.
    pub fn project_via_iota(&self, l: &WeightVec) -> Vec<Rational> {
        let il = self.iota(l);
        (0..self.h.rank())
            .map(|j| {
                let g = self.iota_gamma(j);
                let two = Rational::from(2);
                &(&two * &self.folded_form(&il, &g)) / &self.folded_form(&g, &g)
            })
            .collect()
    }

    fn folded_form(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let yr = mat_vec(self.folded.cartan_inverse(), y);
        let mut s = Rational::zero();
        for j in 0..x.len() {
            s += &(&x[j] * &(&yr[j] * &Rational::from(self.folded.symmetrizer[j])));
        }
        s
    }

    /// `ι` on a class: `λ̄ = Σ c_j γ_j` gives `Σ c_j ι(γ_j)`, in `λ_j`-coordinates.
    pub fn iota_class(&self, w: &CoinvariantWeight) -> Vec<Rational> {
        let c = self.h.weight_to_root(&w.0);
        let mut out = vec![Rational::zero(); self.folded_rank()];
        for (j, cj) in c.iter().enumerate() {
            for (o, g) in out.iter_mut().zip(self.iota_gamma(j)) {
                *o += &(cj * &g);
            }
        }
        out
    }

    /// `γ_j` in `ϖ`-coordinates.
    pub fn gamma(&self, j: usize) -> CoinvariantWeight {
        self.project(&self.base.simple_root_weight(self.datum.fiber(j)[0]))
    }

    /// Whether a `ϖ`-coordinate vector lies in `X_*(T)_σ`.
    pub fn in_lattice(&self, w: &WeightVec) -> bool {
        if w.0.len() != self.h.rank() {
            return false;
        }
        mat_vec(&self.h_to_quotient, &w.0.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>()).iter().all(Rational::is_integer)
    }

    /// Checked constructor for a class given in `ϖ`-coordinates.
    pub fn coinvariant(&self, w: WeightVec) -> Result<CoinvariantWeight> {
        self.h.check_len(w.0.len())?;
        if self.in_lattice(&w) {
            Ok(CoinvariantWeight(w))
        } else {
            Err(Error::NotInLattice)
        }
    }

    /// Generators of the image lattice of `project`, as the images of `ω̌_i`
    /// reduced to a Hermite-style basis: `ϖ`-coordinates of a `ℤ`-basis.
    pub fn lattice_basis(&self) -> Vec<WeightVec> {
        let rows: Vec<Vec<i64>> =
            (0..self.base_rank()).map(|i| self.project(&WeightVec::fundamental(self.base_rank(), i)).0 .0).collect();
        hermite_rows(rows)
    }

    /// Invariant factors `> 1` of `(X_*(T)/Q̌)_σ`; empty means the trivial group.
    pub fn component_group(&self) -> Vec<BigInt> {
        let n = self.base_rank();
        let m: Vec<Vec<i64>> = (0..n)
            .map(|r| {
                let mut row: Vec<i64> = (0..n).map(|c| self.base.cartan[r][c]).collect();
                row.extend((0..n).map(|c| i64::from(r == c) - i64::from(r == self.datum.tau[c])));
                row
            })
            .collect();
        smith_normal_form(&m).diagonal().into_iter().map(|d| d.abs()).filter(|d| !d.is_one()).collect()
    }

    /// `P(σ, 1)`: dominant folded weights `λ` with `⟨λ, θ̌_σ⟩ ≤ 1`, in `λ_j`-coordinates.
    pub fn level_one_set(&self) -> Vec<WeightVec> {
        let r = self.folded_rank();
        let mut out = vec![WeightVec::zero(r)];
        if self.datum.odd_a_ell().is_none() {
            out.extend((0..r).filter(|&j| self.folded.is_minuscule(j)).map(|j| WeightVec::fundamental(r, j)));
        }
        out
    }

    /// The set `S` of base coweights: `0` and `ω̌_i` for the least `i` over each
    /// nonzero level-one weight `λ_{η(i)}`.
    pub fn s_set(&self) -> Vec<WeightVec> {
        let n = self.base_rank();
        self.level_one_set()
            .iter()
            .map(|w| match w.0.iter().position(|&x| x != 0) {
                None => WeightVec::zero(n),
                Some(j) => WeightVec::fundamental(n, self.datum.fiber(j)[0]),
            })
            .collect()
    }

    /// `dim Gr^λ̄ = 2⟨λ, ρ⟩` for a dominant representative `λ`.
    pub fn schubert_dimension(&self, l: &WeightVec) -> Result<i64> {
        self.base.check_len(l.0.len())?;
        if !l.is_dominant() {
            return Err(Error::NotDominant);
        }
        let mut s = 0;
        for a in &self.base.positive_roots {
            s += a.0.iter().zip(&l.0).map(|(x, y)| x * y).sum::<i64>();
        }
        Ok(s)
    }
}

fn matmul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let k = b.len();
    let c = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..c)
                .map(|j| (0..k).fold(Rational::zero(), |acc, t| &acc + &(&row[t] * &b[t][j])))
                .collect()
        })
        .collect()
}

/// Row-reduce integer rows to an echelon `ℤ`-basis of their span.
fn hermite_rows(mut rows: Vec<Vec<i64>>) -> Vec<WeightVec> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    for c in 0..cols {
        loop {
            let nonzero: Vec<usize> = (0..rows.len()).filter(|&r| rows[r][c] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&r| rows[r][c].abs()).unwrap();
            for &r in &nonzero {
                if r != p {
                    let q = rows[r][c] / rows[p][c];
                    let pr = rows[p].clone();
                    for (x, y) in rows[r].iter_mut().zip(&pr) {
                        *x -= q * y;
                    }
                }
            }
        }
        if let Some(p) = (0..rows.len()).find(|&r| rows[r][c] != 0) {
            let mut r = rows.swap_remove(p);
            if r[c] < 0 {
                r.iter_mut().for_each(|x| *x = -*x);
            }
            out.push(WeightVec(r));
        }
    }
    out
}

/// Every supported `(base, m)` with base rank at most `max_rank`.
pub fn supported_data(max_rank: usize) -> Vec<FoldingDatum> {
    let mut out = Vec::new();
    for n in 2..=max_rank {
        for (f, m) in [(Family::A, 2), (Family::A, 4), (Family::D, 2), (Family::D, 3), (Family::E, 2)] {
            if let Ok(ty) = CartanType::new(f, n) {
                if let Ok(d) = FoldingDatum::standard(ty, m) {
                    out.push(d);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn fs(f: Family, n: usize, m: u32) -> FoldedSystem {
        FoldedSystem::standard(CartanType::new(f, n).unwrap(), m).unwrap()
    }

    #[test]
    fn table_types() {
        assert_eq!(fs(Family::A, 5, 2).datum.fixed_type().to_string(), "C3");
        assert_eq!(fs(Family::E, 6, 2).datum.fixed_type().to_string(), "F4");
        assert_eq!(fs(Family::D, 4, 3).datum.fixed_type().to_string(), "G2");
        assert_eq!(fs(Family::A, 4, 4).datum.fixed_type().to_string(), "C2");
        assert_eq!(fs(Family::A, 4, 4).datum.h_type().to_string(), "B2");
        assert!(FoldingDatum::standard(CartanType::new(Family::A, 4).unwrap(), 2).is_err());
        assert!(FoldingDatum::standard(CartanType::new(Family::E, 7).unwrap(), 2).is_err());
    }

    #[test]
    fn automorphism_examples() {
        let d = fs(Family::A, 4, 4).datum;
        assert_eq!(d.tau, vec![3, 2, 1, 0]);
        assert_eq!(d.h, vec![0, 1, 1, 0]);
        let d = fs(Family::D, 4, 3).datum;
        assert_eq!(d.tau[1], 1);
        assert_eq!(d.tau[0], 2);
        assert_eq!(d.tau[2], 3);
        assert_eq!(d.tau[3], 0);
    }

    #[test]
    fn eta_e6() {
        let d = fs(Family::E, 6, 2).datum;
        let one_based: Vec<usize> = (0..6).map(|i| d.eta(i) + 1).collect();
        assert_eq!(one_based, vec![4, 1, 3, 2, 3, 4]);
    }

    #[test]
    fn folded_generators() {
        let s = fs(Family::A, 4, 4);
        assert_eq!(s.lambda_check(1), vec![Rational::zero(), Rational::new(1, 2), Rational::new(1, 2), Rational::zero()]);
        let s = fs(Family::D, 5, 2);
        assert_eq!(s.beta_check(3), vec![0, 0, 0, 1, 1]);
    }

    #[test]
    fn folded_cartan_matches() {
        for d in supported_data(8) {
            let s = FoldedSystem::new(d);
            assert_eq!(s.folded_pairing(), s.folded.cartan, "{}", s.datum.base);
        }
    }

    #[test]
    fn iota_of_gamma() {
        for d in supported_data(8) {
            let s = FoldedSystem::new(d);
            for j in 0..s.folded_rank() {
                let b = s.folded.simple_root_weight(j);
                let mut expect: Vec<Rational> = b.0.iter().map(|&x| Rational::from(x)).collect();
                if s.is_doubled(j) {
                    expect.iter_mut().for_each(|x| *x = &*x / &Rational::from(2));
                }
                assert_eq!(s.iota_gamma(j), expect);
            }
            for i in 0..s.base_rank() {
                let w = s.iota(&WeightVec::fundamental(s.base_rank(), i));
                let expect: Vec<Rational> =
                    (0..s.folded_rank()).map(|j| Rational::from(i64::from(j == s.datum.eta(i)))).collect();
                assert_eq!(w, expect);
            }
        }
    }

    #[test]
    fn project_examples() {
        let s = fs(Family::A, 4, 4);
        let a2 = s.project(&s.base.simple_root_weight(1));
        let a3 = s.project(&s.base.simple_root_weight(2));
        assert_eq!(a2, a3);
        assert_eq!(a2, s.gamma(1));
        // γ_j are the simple roots of H
        for d in supported_data(8) {
            let s = FoldedSystem::new(d);
            for j in 0..s.h.rank() {
                assert_eq!(s.gamma(j).0, s.h.simple_root_weight(j));
            }
        }
    }

    #[test]
    fn odd_a_lattice() {
        for l in 1..=4 {
            let s = fs(Family::A, 2 * l, 4);
            let mut expect: Vec<WeightVec> = (0..l).map(|j| WeightVec::fundamental(l, j)).collect();
            expect[l - 1] = expect[l - 1].scale(2);
            assert_eq!(s.lattice_basis(), expect);
            assert!(!s.in_lattice(&WeightVec::fundamental(l, l - 1)));
        }
        let s = fs(Family::E, 6, 2);
        assert_eq!(s.lattice_basis(), (0..4).map(|j| WeightVec::fundamental(4, j)).collect::<Vec<_>>());
    }

    #[test]
    fn component_groups() {
        let two = vec![BigInt::from(2)];
        for l in 2..=4 {
            assert_eq!(fs(Family::A, 2 * l - 1, 2).component_group(), two);
            assert!(fs(Family::A, 2 * l, 4).component_group().is_empty());
        }
        assert!(fs(Family::A, 2, 4).component_group().is_empty());
        for n in 4..=7 {
            assert_eq!(fs(Family::D, n, 2).component_group(), two);
        }
        assert!(fs(Family::D, 4, 3).component_group().is_empty());
        assert!(fs(Family::E, 6, 2).component_group().is_empty());
    }

    #[test]
    fn level_one() {
        for l in 2..=4 {
            let s = fs(Family::A, 2 * l - 1, 2);
            assert_eq!(s.level_one_set(), vec![WeightVec::zero(l), WeightVec::fundamental(l, 0)]);
            assert_eq!(s.s_set(), vec![WeightVec::zero(2 * l - 1), WeightVec::fundamental(2 * l - 1, 0)]);
            let s = fs(Family::A, 2 * l, 4);
            assert_eq!(s.level_one_set(), vec![WeightVec::zero(l)]);
            assert_eq!(s.s_set(), vec![WeightVec::zero(2 * l)]);
            let s = fs(Family::D, l + 2, 2);
            let ell = l + 1;
            assert_eq!(s.level_one_set(), vec![WeightVec::zero(ell), WeightVec::fundamental(ell, ell - 1)]);
            assert_eq!(s.s_set(), vec![WeightVec::zero(ell + 1), WeightVec::fundamental(ell + 1, ell - 1)]);
        }
        assert_eq!(fs(Family::E, 6, 2).level_one_set(), vec![WeightVec::zero(4)]);
        assert_eq!(fs(Family::D, 4, 3).level_one_set(), vec![WeightVec::zero(2)]);
    }

    #[test]
    fn schubert_dimensions() {
        let s = fs(Family::A, 2, 4);
        assert_eq!(s.schubert_dimension(&WeightVec::zero(2)).unwrap(), 0);
        let theta = s.base.simple_root_weight(0).add(&s.base.simple_root_weight(1));
        assert_eq!(s.schubert_dimension(&theta).unwrap(), 4);
        assert!(s.schubert_dimension(&WeightVec(vec![-1, 2])).is_err());
    }
}
