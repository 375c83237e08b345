//! Dominance order on `X_*(T)_σ⁺`, its covers, and which Schubert cells of a
//! twisted affine Schubert variety lie in the smooth locus.
//!
//! Classes are `CoinvariantWeight`s in the `ϖ`-basis of `H`; `γ_j` are the simple
//! roots of `H`, so `μ̄ ⪯ λ̄` means `λ̄ − μ̄ ∈ Σ ℤ≥0 γ_j`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exact_linalg::Rational;
use crate::folding::{CoinvariantWeight, FoldedSystem};
use crate::root_system::{Family, RootVec, WeightVec};

/// A dominant class with its witness `⟨ι(λ̄), β̌_j⟩ ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantCoinvariant {
    pub value: CoinvariantWeight,
    pub pairings: Vec<Rational>,
}

impl DominantCoinvariant {
    pub fn new(fs: &FoldedSystem, value: CoinvariantWeight) -> Result<DominantCoinvariant> {
        fs.coinvariant(value.0.clone())?;
        let pairings = fs.iota_class(&value);
        if pairings.iter().any(Rational::is_negative) {
            return Err(Error::NotDominant);
        }
        Ok(DominantCoinvariant { value, pairings })
    }
}

/// `γ`-coordinates of `λ̄ − μ̄` when they are integral.
pub fn gamma_coefficients(fs: &FoldedSystem, mu: &WeightVec, lambda: &WeightVec) -> Option<RootVec> {
    fs.h.weight_to_root_lattice(&lambda.sub(mu))
}

pub fn leq(fs: &FoldedSystem, mu: &WeightVec, lambda: &WeightVec) -> bool {
    gamma_coefficients(fs, mu, lambda).is_some_and(|c| c.is_nonnegative())
}

fn check_dominant(fs: &FoldedSystem, l: &WeightVec) -> Result<()> {
    fs.coinvariant(l.clone())?;
    if l.is_dominant() {
        Ok(())
    } else {
        Err(Error::NotDominant)
    }
}

/// All dominant `μ̄ ⪯ λ̄`, ordered by the height of `λ̄ − μ̄` (so `λ̄` first).
pub fn dominants_below(fs: &FoldedSystem, lambda: &WeightVec) -> Result<Vec<WeightVec>> {
    check_dominant(fs, lambda)?;
    // differences lie in the root lattice of H, which the coinvariant lattice contains
    fs.h.dominant_weights_below(lambda)
}

/// Cover test by checking every dominant class strictly between.
pub fn is_cover_brute(fs: &FoldedSystem, mu: &WeightVec, lambda: &WeightVec) -> Result<bool> {
    if mu == lambda || !leq(fs, mu, lambda) {
        return Ok(false);
    }
    let below = dominants_below(fs, lambda)?;
    Ok(!below.iter().any(|nu| nu != mu && nu != lambda && leq(fs, mu, nu)))
}

/// The Hasse diagram of `{μ̄ ⪯ λ̄}`: the elements of `dominants_below(λ̄)` and
/// all cover pairs `(μ̄, ν̄)` as index pairs, found by brute-force betweenness.
pub fn cover_relation(fs: &FoldedSystem, lambda: &WeightVec) -> Result<(Vec<WeightVec>, Vec<(usize, usize)>)> {
    let below = dominants_below(fs, lambda)?;
    let depth: Vec<Vec<i64>> = below
        .iter()
        .map(|m| gamma_coefficients(fs, m, lambda).expect("below λ̄").0)
        .collect();
    // a ⪯ b iff depth[a] ≥ depth[b] componentwise
    let le = |a: usize, b: usize| depth[a].iter().zip(&depth[b]).all(|(x, y)| x >= y);
    let mut covers = Vec::new();
    for a in 0..below.len() {
        for b in 0..below.len() {
            if a != b && le(a, b) && !(0..below.len()).any(|c| c != a && c != b && le(a, c) && le(c, b)) {
                covers.push((a, b));
            }
        }
    }
    Ok((below, covers))
}

/// Cover test for `H` of type `B_ℓ`, valid on the whole weight lattice: the
/// difference must be `γ_i + ⋯ + γ_j`; a single simple root always covers,
/// otherwise `μ̄` must vanish on `γ̌_i, …, γ̌_j`, except that `⟨μ̄, γ̌_ℓ⟩ = 1` is
/// allowed when `j = ℓ`.
pub fn is_cover_type_b(mu: &WeightVec, c: &RootVec) -> bool {
    let l = c.0.len();
    let support: Vec<usize> = (0..l).filter(|&k| c.0[k] != 0).collect();
    let (Some(&i), Some(&j)) = (support.first(), support.last()) else { return false };
    if support.len() != j - i + 1 || support.iter().any(|&k| c.0[k] != 1) {
        return false;
    }
    if i == j {
        return true;
    }
    if j + 1 < l {
        (i..=j).all(|k| mu.0[k] == 0)
    } else {
        (i..j).all(|k| mu.0[k] == 0) && mu.0[j] <= 1
    }
}

/// Cover test; uses the type-`B` rule when `H` is of type `B`, the brute-force
/// check otherwise.
pub fn is_cover(fs: &FoldedSystem, mu: &WeightVec, lambda: &WeightVec) -> Result<bool> {
    check_dominant(fs, lambda)?;
    check_dominant(fs, mu)?;
    if fs.h.cartan_type.family != Family::B {
        return is_cover_brute(fs, mu, lambda);
    }
    Ok(match gamma_coefficients(fs, mu, lambda) {
        Some(c) if c.is_nonnegative() => is_cover_type_b(mu, &c),
        _ => false,
    })
}

/// Which parahoric an `A_{2ℓ}^{(2)}` variety is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Special but not absolutely special.
    Special,
    /// Absolutely special; handled by a result imported from outside this crate.
    AbsolutelySpecial,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Special => "special",
            Variant::AbsolutelySpecial => "absolutely-special",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Smooth,
    Singular,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Smooth => "smooth",
            Verdict::Singular => "singular",
        }
    }
}

/// Why a cell got its verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    OpenCell,
    /// Outside `A_{2ℓ}^{(2)}` every proper cell is singular.
    ProperCellSingular,
    /// `c_ℓ` even.
    CEllEven,
    /// `c_ℓ` odd and at least 3.
    CEllOdd,
    /// `c_ℓ = 1` but `μ̄` is not a cover of `λ̄`.
    NotCover,
    /// Cover with `λ̄ − μ̄ = γ_ℓ` and `⟨μ̄, γ̌_ℓ⟩ ≠ 0`.
    CoverShortRoot,
    /// Cover with `λ̄ − μ̄ = γ_i + ⋯ + γ_ℓ` and `μ̄` supported on `ϖ_{<i}`.
    CoverTail,
    /// Absolutely special case: only the big cell is smooth.
    ExternalBigCellOnly,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::OpenCell => "open-cell",
            Reason::ProperCellSingular => "proper-cell-singular",
            Reason::CEllEven => "step1-c-ell-even",
            Reason::CEllOdd => "step2-c-ell-odd",
            Reason::NotCover => "step3-not-cover",
            Reason::CoverShortRoot => "case1-cover",
            Reason::CoverTail => "case2-cover",
            Reason::ExternalBigCellOnly => "external-big-cell-only",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub mu: WeightVec,
    pub verdict: Verdict,
    pub reason: Reason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothLocusReport {
    /// `None` unless the datum is `(A_{2ℓ}, 4)`.
    pub variant: Option<Variant>,
    pub lambda: WeightVec,
    pub cells: Vec<Cell>,
}

impl SmoothLocusReport {
    pub fn smooth(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| c.verdict == Verdict::Smooth)
    }
}

/// The closed-form smooth criterion for `A_{2ℓ}^{(2)}` (special, not absolutely
/// special): `μ̄ = λ̄`, or `λ̄ − μ̄ = Σ_{j≥i} γ_j` with `μ̄` supported on `ϖ_{<i}`.
pub fn tail_rule_smooth(fs: &FoldedSystem, mu: &WeightVec, lambda: &WeightVec) -> bool {
    if mu == lambda {
        return true;
    }
    let Some(c) = gamma_coefficients(fs, mu, lambda) else { return false };
    let l = c.0.len();
    // the least i with c = γ_i + … + γ_ℓ is the only candidate
    let Some(i) = c.0.iter().position(|&x| x != 0) else { return false };
    (i..l).all(|k| c.0[k] == 1) && (i..l).all(|k| mu.0[k] == 0) && mu.0[..i].iter().all(|&a| a >= 0)
}

/// Verdict for one `μ̄ ≺ λ̄` in the `A_{2ℓ}^{(2)}` special case, following the
/// elimination by the last `γ`-coefficient and then the cover description.
fn odd_a_cell(fs: &FoldedSystem, mu: &WeightVec, lambda: &WeightVec) -> Result<(Verdict, Reason)> {
    let c = gamma_coefficients(fs, mu, lambda).ok_or(Error::NotInLattice)?;
    let cl = c.0[c.0.len() - 1];
    if cl % 2 == 0 {
        return Ok((Verdict::Singular, Reason::CEllEven));
    }
    if cl > 1 {
        return Ok((Verdict::Singular, Reason::CEllOdd));
    }
    if !is_cover(fs, mu, lambda)? {
        return Ok((Verdict::Singular, Reason::NotCover));
    }
    let l = c.0.len();
    let short_root_only = c.0[..l - 1].iter().all(|&x| x == 0);
    if short_root_only && mu.0[l - 1] != 0 {
        Ok((Verdict::Singular, Reason::CoverShortRoot))
    } else {
        Ok((Verdict::Smooth, Reason::CoverTail))
    }
}

/// Classify every cell `Gr^μ̄ ⊆ Gr̄^λ̄` as smooth or singular.
pub fn smooth_cells(fs: &FoldedSystem, variant: Variant, lambda: &WeightVec) -> Result<SmoothLocusReport> {
    let below = dominants_below(fs, lambda)?;
    let odd_a = fs.datum.odd_a_ell().is_some();
    if !odd_a && variant == Variant::AbsolutelySpecial {
        return Err(Error::Invalid("the absolutely special variant only exists for (A_2l, 4)".into()));
    }
    let mut cells = Vec::with_capacity(below.len());
    for mu in below {
        let (verdict, reason) = if &mu == lambda {
            (Verdict::Smooth, Reason::OpenCell)
        } else if !odd_a {
            (Verdict::Singular, Reason::ProperCellSingular)
        } else if variant == Variant::AbsolutelySpecial {
            (Verdict::Singular, Reason::ExternalBigCellOnly)
        } else {
            odd_a_cell(fs, &mu, lambda)?
        };
        cells.push(Cell { mu, verdict, reason });
    }
    Ok(SmoothLocusReport { variant: odd_a.then_some(variant), lambda: lambda.clone(), cells })
}

/// Dominant lattice points of the box `0 ≤ μ_k ≤ λ_k + slack` below `λ̄`: an
/// independent enumeration for checking `dominants_below`.
pub fn dominants_below_box(fs: &FoldedSystem, lambda: &WeightVec, bound: i64) -> Vec<WeightVec> {
    let l = lambda.0.len();
    let mut out = BTreeSet::new();
    let mut cur = alloc::vec![0i64; l];
    loop {
        let w = WeightVec(cur.clone());
        if fs.in_lattice(&w) && leq(fs, &w, lambda) {
            out.insert(w);
        }
        let mut k = 0;
        while k < l {
            cur[k] += 1;
            if cur[k] <= bound {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
        if k == l {
            break;
        }
    }
    out.into_iter().collect()
}
