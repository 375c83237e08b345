//! Exact representations given by Chevalley generators on a weight basis.
//!
//! A [`Representation`] stores the columns of `E_i` and `F_i`; `H_i` is diagonal
//! with eigenvalue `⟨wt, α̌_i⟩`. Operators compose right to left, as matrices do.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::crystal::{Crystal, HwCrystal, MinusculeCrystal};
use crate::error::{Error, Result};
use crate::exact_linalg::{rank, Rational, SparseVector, SpanSolver};
use crate::root_system::{RootSystem, RootVec, WeightVec};

pub type Vector = SparseVector<usize, Rational>;

/// A Chevalley generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Gen {
    E(usize),
    F(usize),
    H(usize),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::E(i) => write!(f, "E{}", i + 1),
            Gen::F(i) => write!(f, "F{}", i + 1),
            Gen::H(i) => write!(f, "H{}", i + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub cartan: Vec<Vec<i64>>,
    pub weights: Vec<WeightVec>,
    /// `e[i][k] = E_i v_k`.
    pub e: Vec<Vec<Vector>>,
    /// `f[i][k] = F_i v_k`.
    pub f: Vec<Vec<Vector>>,
}

/// A defining relation that failed on a basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub relation: String,
    pub basis_vector: usize,
}

impl fmt::Display for RelationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "relation {} fails on basis vector {}", self.relation, self.basis_vector)
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// `Σ_{k≥0} X^k v / k!` for `X` nilpotent on `v`; errors if `X^bound v ≠ 0`.
pub fn exp_nilpotent(apply: impl Fn(&Vector) -> Vector, v: &Vector, bound: usize) -> Result<Vector> {
    let mut out = v.clone();
    let mut term = v.clone();
    let mut k = 1i64;
    loop {
        term = apply(&term).scale(&Rational::new(1, k));
        if term.is_zero() {
            return Ok(out);
        }
        if k as usize > bound {
            return Err(Error::NotNilpotent { bound });
        }
        out = out.add(&term);
        k += 1;
    }
}

impl Representation {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// `𝕍(ω_r)`: basis the minuscule crystal, `E_i v_w = v_{ẽ_i w}`,
    /// `F_i v_w = v_{f̃_i w}` with `v_null = 0`.
    pub fn minuscule(rs: &RootSystem, r: usize) -> Result<Representation> {
        let b = MinusculeCrystal::new(rs, r)?;
        Ok(Representation::from_crystal_tables(rs, &b))
    }

    fn from_crystal_tables<C: Crystal>(rs: &RootSystem, b: &C) -> Representation {
        let n = rs.rank();
        let col = |t: Option<usize>| t.map(Vector::basis).unwrap_or_default();
        Representation {
            cartan: rs.cartan.clone(),
            weights: (0..b.len()).map(|k| b.weight(k).clone()).collect(),
            e: (0..n).map(|i| (0..b.len()).map(|k| col(b.e(k, i))).collect()).collect(),
            f: (0..n).map(|i| (0..b.len()).map(|k| col(b.f(k, i))).collect()).collect(),
        }
    }

    pub fn basis(&self, k: usize) -> Vector {
        Vector::basis(k)
    }

    fn apply_table(table: &[Vector], v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (k, c) in v.iter() {
            out.axpy(c, &table[*k]);
        }
        out
    }

    pub fn apply(&self, g: Gen, v: &Vector) -> Vector {
        match g {
            Gen::E(i) => Self::apply_table(&self.e[i], v),
            Gen::F(i) => Self::apply_table(&self.f[i], v),
            Gen::H(i) => {
                let mut out = Vector::new();
                for (k, c) in v.iter() {
                    out.add_term(*k, &(c * &Rational::from(self.weights[*k].0[i])));
                }
                out
            }
        }
    }

    /// Apply `g_1 g_2 ⋯ g_m`, so `g_m` acts first.
    pub fn apply_word(&self, word: &[Gen], v: &Vector) -> Vector {
        word.iter().rev().fold(v.clone(), |acc, &g| self.apply(g, &acc))
    }

    pub fn apply_e(&self, i: usize, v: &Vector) -> Vector {
        self.apply(Gen::E(i), v)
    }

    pub fn apply_f(&self, i: usize, v: &Vector) -> Vector {
        self.apply(Gen::F(i), v)
    }

    /// `exp(tX) v` for a generator `X`.
    pub fn exp(&self, g: Gen, t: &Rational, v: &Vector) -> Result<Vector> {
        exp_nilpotent(|w| self.apply(g, w).scale(t), v, self.dim() + 1)
    }

    /// `s_i v = exp(F_i) exp(−E_i) exp(F_i) v`.
    pub fn weyl_act(&self, i: usize, v: &Vector) -> Result<Vector> {
        let one = Rational::one();
        let a = self.exp(Gen::F(i), &one, v)?;
        let b = self.exp(Gen::E(i), &-&one, &a)?;
        self.exp(Gen::F(i), &one, &b)
    }

    /// The common weight of a nonzero weight vector.
    pub fn weight_of(&self, v: &Vector) -> Option<&WeightVec> {
        let mut it = v.keys();
        let w = &self.weights[*it.next()?];
        it.all(|k| &self.weights[*k] == w).then_some(w)
    }

    /// True iff every `E_i` kills `v`.
    pub fn highest_weight_check(&self, v: &Vector) -> Result<bool> {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok((0..self.rank()).all(|i| self.apply_e(i, v).is_zero()))
    }

    fn root_weight(&self, i: usize) -> WeightVec {
        WeightVec(self.cartan.iter().map(|row| row[i]).collect())
    }

    /// Checks weight grading, `[E_i,F_j] = δ_ij H_i`, `[H_i,E_j] = a_ij E_j`,
    /// `[H_i,F_j] = −a_ij F_j` and the Serre relations on every basis vector.
    pub fn verify_representation(&self) -> core::result::Result<(), RelationFailure> {
        let n = self.rank();
        let fail = |relation: String, k: usize| Err(RelationFailure { relation, basis_vector: k });
        for k in 0..self.dim() {
            let v = Vector::basis(k);
            let wt = &self.weights[k];
            for i in 0..n {
                let a = self.root_weight(i);
                for (col, target, name) in [(&self.e[i][k], wt.add(&a), "E"), (&self.f[i][k], wt.sub(&a), "F")] {
                    if col.keys().any(|x| self.weights[*x] != target) {
                        return fail(format!("weight grading of {name}{}", i + 1), k);
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    let ef = self.apply_word(&[Gen::E(i), Gen::F(j)], &v);
                    let fe = self.apply_word(&[Gen::F(j), Gen::E(i)], &v);
                    let expect = if i == j { self.apply(Gen::H(i), &v) } else { Vector::new() };
                    if ef.sub(&fe) != expect {
                        return fail(format!("[E{},F{}]", i + 1, j + 1), k);
                    }
                    // H is diagonal, so [H_i, X]v = (⟨wt(Xv), α̌_i⟩ − ⟨wt v, α̌_i⟩) Xv
                    for (g, sign, name) in [(Gen::E(j), 1, "E"), (Gen::F(j), -1, "F")] {
                        let hx = self.apply_word(&[Gen::H(i), g], &v);
                        let xh = self.apply_word(&[g, Gen::H(i)], &v);
                        let expect = self.apply(g, &v).scale(&Rational::from(sign * self.cartan[i][j]));
                        if hx.sub(&xh) != expect {
                            return fail(format!("[H{},{name}{}]", i + 1, j + 1), k);
                        }
                    }
                    if i != j {
                        let m = 1 - self.cartan[i][j];
                        for (gi, gj, name) in [(Gen::E(i), Gen::E(j), "E"), (Gen::F(i), Gen::F(j), "F")] {
                            let mut acc = Vector::new();
                            for t in 0..=m {
                                let mut word = vec![gi; (m - t) as usize];
                                word.push(gj);
                                word.extend(core::iter::repeat_n(gi, t as usize));
                                let c = if t % 2 == 0 { binomial(m, t) } else { -binomial(m, t) };
                                acc.axpy(&Rational::from(c), &self.apply_word(&word, &v));
                            }
                            if !acc.is_zero() {
                                return fail(format!("Serre ad({name}{})^{m} {name}{}", i + 1, j + 1), k);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.verify_representation().is_ok()
    }

    /// `A ⊗ B` with the Leibniz action; `v_a ⊗ v_b` has index `a·dim B + b`.
    pub fn tensor(&self, other: &Representation) -> Representation {
        assert_eq!(self.cartan, other.cartan, "tensor factors of different type");
        let n2 = other.dim();
        let mut weights = Vec::with_capacity(self.dim() * n2);
        for a in 0..self.dim() {
            for b in 0..n2 {
                weights.push(self.weights[a].add(&other.weights[b]));
            }
        }
        let leibniz = |ta: &[Vector], tb: &[Vector]| -> Vec<Vector> {
            let mut cols = Vec::with_capacity(weights.len());
            for a in 0..self.dim() {
                for b in 0..n2 {
                    let mut c = Vector::new();
                    for (x, s) in ta[a].iter() {
                        c.add_term(x * n2 + b, s);
                    }
                    for (y, s) in tb[b].iter() {
                        c.add_term(a * n2 + y, s);
                    }
                    cols.push(c);
                }
            }
            cols
        };
        let e = (0..self.rank()).map(|i| leibniz(&self.e[i], &other.e[i])).collect();
        let f = (0..self.rank()).map(|i| leibniz(&self.f[i], &other.f[i])).collect();
        Representation { cartan: self.cartan.clone(), weights, e, f }
    }

    /// Index of a pure tensor `v_{k_1} ⊗ ⋯ ⊗ v_{k_m}` in an iterated tensor power
    /// of a `dim`-dimensional representation.
    pub fn tensor_index(dim: usize, keys: &[usize]) -> usize {
        keys.iter().fold(0, |acc, k| acc * dim + k)
    }
}

/// The representation spanned by `v_b = F_{i_1} ⋯ F_{i_ℓ} v` over the canonical
/// paths of a highest-weight crystal, together with the ambient vectors.
#[derive(Clone, Debug)]
pub struct SubRepresentation {
    pub rep: Representation,
    /// `basis[k]` is `v_b` for the `k`-th crystal element, in ambient coordinates.
    pub basis: Vec<Vector>,
    /// Rank of the basis vectors, summed over weight spaces.
    pub rank: usize,
}

impl SubRepresentation {
    /// Ambient vector with the given coordinates in the path basis.
    pub fn to_ambient(&self, x: &Vector) -> Vector {
        let mut out = Vector::new();
        for (k, c) in x.iter() {
            out.axpy(c, &self.basis[*k]);
        }
        out
    }
}

pub fn subrepresentation(ambient: &Representation, hw: &Vector, b: &HwCrystal) -> Result<SubRepresentation> {
    if !ambient.highest_weight_check(hw)? {
        return Err(Error::NotHighestWeight);
    }
    if ambient.weight_of(hw) != Some(&b.highest_weight) {
        return Err(Error::Invalid(String::from("highest-weight vector and crystal disagree on the weight")));
    }
    let n = ambient.rank();
    let len = b.crystal.len();
    let mut basis: Vec<Vector> = Vec::with_capacity(len);
    basis.push(hw.clone());
    for k in 1..len {
        let i = b.paths[k][0];
        let parent = b.crystal.e(k, i).expect("canonical path starts with a raising edge");
        basis.push(ambient.apply_f(i, &basis[parent]));
    }
    let mut by_weight: BTreeMap<&WeightVec, Vec<usize>> = BTreeMap::new();
    for k in 0..len {
        by_weight.entry(&b.crystal.weights[k]).or_default().push(k);
    }
    let mut total_rank = 0;
    let mut solvers: BTreeMap<&WeightVec, (Vec<usize>, SpanSolver<usize, Rational>)> = BTreeMap::new();
    for (w, ks) in by_weight {
        let vs: Vec<Vector> = ks.iter().map(|&k| basis[k].clone()).collect();
        let r = rank(&vs);
        total_rank += r;
        let solver = SpanSolver::new(&vs).map_err(|_| Error::PathsDependent { weight: format!("{:?}", w.0) })?;
        solvers.insert(w, (ks, solver));
    }
    let express = |u: &Vector, w: &WeightVec| -> Result<Vector> {
        if u.is_zero() {
            return Ok(Vector::new());
        }
        let err = || Error::NotInSpan { weight: format!("{:?}", w.0) };
        let (ks, solver) = solvers.get(w).ok_or_else(err)?;
        let coords = solver.coordinates(u).ok_or_else(err)?;
        Ok(Vector::from_entries(ks.iter().copied().zip(coords)))
    };
    let mut e = vec![Vec::with_capacity(len); n];
    let mut f = vec![Vec::with_capacity(len); n];
    for k in 0..len {
        let w = &b.crystal.weights[k];
        for i in 0..n {
            let a = ambient.root_weight(i);
            e[i].push(express(&ambient.apply_e(i, &basis[k]), &w.add(&a))?);
            f[i].push(express(&ambient.apply_f(i, &basis[k]), &w.sub(&a))?);
        }
    }
    let rep = Representation { cartan: ambient.cartan.clone(), weights: b.crystal.weights.clone(), e, f };
    Ok(SubRepresentation { rep, basis, rank: total_rank })
}

/// A signed sum of words in the lowering generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorWord {
    /// `(sign, [a_1, …, a_ℓ])` stands for `sign · f_{a_1} ⋯ f_{a_ℓ}`.
    pub terms: Vec<(i8, Vec<usize>)>,
}

impl OperatorWord {
    pub fn apply(&self, rep: &Representation, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (s, w) in &self.terms {
            let x = w.iter().rev().fold(v.clone(), |acc, &i| rep.apply_f(i, &acc));
            out.axpy(&Rational::from(*s as i64), &x);
        }
        out
    }

    /// Multiset of indices of the first term.
    pub fn content(&self, rank: usize) -> Vec<usize> {
        let mut c = vec![0; rank];
        if let Some((_, w)) = self.terms.first() {
            w.iter().for_each(|&i| c[i] += 1);
        }
        c
    }

    /// `[⋯[[f_{i_1}, f_{i_2}], f_{i_3}] ⋯ f_{i_ℓ}]` expanded into words.
    pub fn nested_commutator(path: &[usize]) -> OperatorWord {
        let mut terms = vec![(1i8, vec![path[0]])];
        for &k in &path[1..] {
            let mut next = Vec::with_capacity(terms.len() * 2);
            for (s, w) in &terms {
                let mut right = w.clone();
                right.push(k);
                next.push((*s, right));
                let mut left = vec![k];
                left.extend_from_slice(w);
                next.push((-*s, left));
            }
            terms = next;
        }
        OperatorWord { terms }
    }
}

/// All index sequences `(i_1, …, i_ℓ)` whose partial sums are positive roots
/// ending at `γ`, in lexicographic order.
pub fn root_poset_paths(rs: &RootSystem, gamma: &RootVec) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    let zero = RootVec(vec![0; rs.rank()]);
    fn go(rs: &RootSystem, gamma: &RootVec, cur: &RootVec, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur == gamma {
            out.push(path.clone());
            return;
        }
        for i in 0..rs.rank() {
            let next = cur.add(&rs.simple_root(i));
            if next.0.iter().zip(&gamma.0).all(|(a, b)| a <= b) && rs.positive_root_index(&next).is_some() {
                path.push(i);
                go(rs, gamma, &next, path, out);
                path.pop();
            }
        }
    }
    go(rs, gamma, &zero, &mut path, &mut out);
    out
}

fn least_root_poset_path(rs: &RootSystem, gamma: &RootVec) -> Option<Vec<usize>> {
    let mut path = Vec::new();
    fn go(rs: &RootSystem, gamma: &RootVec, cur: &RootVec, path: &mut Vec<usize>) -> bool {
        if cur == gamma {
            return true;
        }
        for i in 0..rs.rank() {
            let next = cur.add(&rs.simple_root(i));
            if next.0.iter().zip(&gamma.0).all(|(a, b)| a <= b) && rs.positive_root_index(&next).is_some() {
                path.push(i);
                if go(rs, gamma, &next, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    go(rs, gamma, &RootVec(vec![0; rs.rank()]), &mut path).then_some(path)
}

/// `f_γ` built along the lexicographically least root-poset path.
pub fn root_lowering_operator(rs: &RootSystem, gamma: &RootVec) -> Result<OperatorWord> {
    rs.check_len(gamma.0.len())?;
    if rs.positive_root_index(gamma).is_none() {
        return Err(Error::NotAPositiveRoot);
    }
    let path = least_root_poset_path(rs, gamma).ok_or(Error::NotAPositiveRoot)?;
    Ok(OperatorWord::nested_commutator(&path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{highest_weight_component, tensor_crystal};
    use crate::root_system::{CartanType, Family};

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(CartanType::new(f, n).unwrap())
    }

    fn v(k: usize) -> Vector {
        Vector::basis(k)
    }

    #[test]
    fn a1_minuscule() {
        let a1 = rs(Family::A, 1);
        let r = Representation::minuscule(&a1, 0).unwrap();
        assert_eq!(r.apply_f(0, &v(0)), v(1));
        assert_eq!(r.apply_e(0, &v(1)), v(0));
        assert_eq!(r.apply(Gen::H(0), &v(0)), v(0));
        assert!(r.is_valid());
        assert!(r.highest_weight_check(&v(0)).unwrap());
        assert!(!r.highest_weight_check(&v(1)).unwrap());
        assert_eq!(r.highest_weight_check(&Vector::new()), Err(Error::ZeroVector));
        let one = Rational::one();
        assert_eq!(r.exp(Gen::F(0), &one, &v(0)).unwrap(), v(0).add(&v(1)));
        assert_eq!(r.exp(Gen::F(0), &one, &v(1)).unwrap(), v(1));
    }

    #[test]
    fn weyl_act_squares_to_sign() {
        for (f, n) in [(Family::A, 1), (Family::A, 2)] {
            let s = rs(f, n);
            let r = Representation::minuscule(&s, 0).unwrap();
            let t = r.tensor(&r);
            for k in 0..t.dim() {
                for i in 0..n {
                    let x = t.weyl_act(i, &v(k)).unwrap();
                    assert_eq!(t.weight_of(&x), Some(&s.reflect(i, &t.weights[k])));
                    let y = t.weyl_act(i, &x).unwrap();
                    let sign = if t.weights[k].0[i] % 2 == 0 { 1 } else { -1 };
                    assert_eq!(y, v(k).scale(&Rational::from(sign)));
                }
            }
        }
    }

    #[test]
    fn non_nilpotent_operator_errors() {
        let x = exp_nilpotent(|w| w.clone(), &v(0), 10);
        assert_eq!(x, Err(Error::NotNilpotent { bound: 10 }));
    }

    #[test]
    fn e6_minuscule_relations() {
        let e6 = rs(Family::E, 6);
        let r = Representation::minuscule(&e6, 0).unwrap();
        assert_eq!(r.dim(), 27);
        assert!(r.is_valid());
        let x = r.apply_word(&[Gen::F(2), Gen::F(0)], &v(0));
        let w = r.weight_of(&x).unwrap();
        let expect = WeightVec::fundamental(6, 0).sub(&e6.simple_root_weight(0)).sub(&e6.simple_root_weight(2));
        assert_eq!(w, &expect);
    }

    #[test]
    fn corrupted_table_fails_with_witness() {
        let a2 = rs(Family::A, 2);
        let mut r = Representation::minuscule(&a2, 0).unwrap();
        r.f[0][0] = r.f[0][0].scale(&Rational::from(2));
        let err = r.verify_representation().unwrap_err();
        assert_eq!(err.basis_vector, 0);
    }

    #[test]
    fn tensor_weights_and_leibniz() {
        let a1 = rs(Family::A, 1);
        let r = Representation::minuscule(&a1, 0).unwrap();
        let t = r.tensor(&r);
        assert!(t.is_valid());
        assert!(t.apply_e(0, &v(0)).is_zero());
        for k in 0..4 {
            let (a, b) = (k / 2, k % 2);
            assert_eq!(t.weights[k], r.weights[a].add(&r.weights[b]));
        }
        let t3 = t.tensor(&r);
        assert_eq!(t3.dim(), 8);
        assert!(t3.is_valid());
    }

    #[test]
    fn a2_adjoint_subrepresentation() {
        let a2 = rs(Family::A, 2);
        let v1 = Representation::minuscule(&a2, 0).unwrap();
        let v2 = Representation::minuscule(&a2, 1).unwrap();
        let amb = v1.tensor(&v2);
        let c = tensor_crystal(&MinusculeCrystal::new(&a2, 0).unwrap(), &MinusculeCrystal::new(&a2, 1).unwrap());
        let b = highest_weight_component(&c, &WeightVec(vec![1, 1])).unwrap();
        let hw = v(b.ambient[0]);
        let sub = subrepresentation(&amb, &hw, &b).unwrap();
        assert_eq!(sub.rank, 8);
        assert!(sub.rep.is_valid());
    }

    #[test]
    fn a1_subrepresentation_recovers_minuscule() {
        let a1 = rs(Family::A, 1);
        let r = Representation::minuscule(&a1, 0).unwrap();
        let b = highest_weight_component(&MinusculeCrystal::new(&a1, 0).unwrap(), &WeightVec(vec![1])).unwrap();
        let sub = subrepresentation(&r, &v(0), &b).unwrap();
        assert_eq!(sub.rep, r);
    }

    #[test]
    fn lowering_operator_shapes() {
        let e6 = rs(Family::E, 6);
        let a1 = root_lowering_operator(&e6, &RootVec::simple(6, 0)).unwrap();
        assert_eq!(a1.terms, vec![(1, vec![0])]);
        let a13 = root_lowering_operator(&e6, &RootVec(vec![1, 0, 1, 0, 0, 0])).unwrap();
        assert_eq!(a13.terms, vec![(1, vec![0, 2]), (-1, vec![2, 0])]);
        let beta = root_lowering_operator(&e6, &RootVec(vec![1, 1, 2, 3, 2, 1])).unwrap();
        assert_eq!(beta.terms.len(), 512);
        assert_eq!(beta.content(6), vec![1, 1, 2, 3, 2, 1]);
        assert_eq!(root_lowering_operator(&e6, &RootVec(vec![1, 1, 0, 0, 0, 0])), Err(Error::NotAPositiveRoot));
        assert_eq!(root_poset_paths(&e6, &RootVec(vec![1, 0, 1, 0, 0, 0])), vec![vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn lowering_operator_weight_shift() {
        let e6 = rs(Family::E, 6);
        let r = Representation::minuscule(&e6, 0).unwrap();
        for g in &e6.positive_roots {
            let op = root_lowering_operator(&e6, g).unwrap();
            let gw = e6.root_to_weight(g);
            for k in 0..r.dim() {
                let x = op.apply(&r, &v(k));
                for i in 0..6 {
                    let hx = r.apply(Gen::H(i), &x);
                    let xh = op.apply(&r, &r.apply(Gen::H(i), &v(k)));
                    assert_eq!(hx.sub(&xh), x.scale(&Rational::from(-gw.0[i])));
                }
            }
        }
    }
}
