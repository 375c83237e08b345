//! Crystals: minuscule crystals from minimal coset representatives, tensor
//! products under the signature rule, and highest-weight components with
//! canonical lowering paths.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::root_system::{RootSystem, WeightVec, WeylElement};

/// A finite crystal with elements `0..len()` over nodes `0..rank()`.
pub trait Crystal {
    fn rank(&self) -> usize;
    fn len(&self) -> usize;
    fn e(&self, b: usize, i: usize) -> Option<usize>;
    fn f(&self, b: usize, i: usize) -> Option<usize>;
    fn weight(&self, b: usize) -> &WeightVec;
    fn eps(&self, b: usize, i: usize) -> i64;
    fn phi(&self, b: usize, i: usize) -> i64;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Elements killed by every `ẽ_i`.
    fn highest_weight_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&b| (0..self.rank()).all(|i| self.e(b, i).is_none())).collect()
    }
}

/// A crystal stored as explicit operator tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCrystal {
    pub rank: usize,
    pub weights: Vec<WeightVec>,
    pub e_table: Vec<Vec<Option<usize>>>,
    pub f_table: Vec<Vec<Option<usize>>>,
    eps_table: Vec<Vec<i64>>,
    phi_table: Vec<Vec<i64>>,
}

impl TableCrystal {
    /// Builds a crystal from weights and `f̃` tables; `ẽ` is the inverse of `f̃`
    /// and `ε`, `φ` are string lengths.
    pub fn from_f_table(rank: usize, weights: Vec<WeightVec>, f_table: Vec<Vec<Option<usize>>>) -> TableCrystal {
        let n = weights.len();
        let mut e_table = vec![vec![None; rank]; n];
        for (b, row) in f_table.iter().enumerate() {
            for (i, t) in row.iter().enumerate() {
                if let Some(c) = *t {
                    e_table[c][i] = Some(b);
                }
            }
        }
        let strings = |tab: &Vec<Vec<Option<usize>>>| -> Vec<Vec<i64>> {
            (0..n)
                .map(|b| {
                    (0..rank)
                        .map(|i| {
                            let mut k = 0;
                            let mut x = b;
                            while let Some(y) = tab[x][i] {
                                x = y;
                                k += 1;
                            }
                            k
                        })
                        .collect()
                })
                .collect()
        };
        let eps_table = strings(&e_table);
        let phi_table = strings(&f_table);
        TableCrystal { rank, weights, e_table, f_table, eps_table, phi_table }
    }

    fn from_parts(
        rank: usize,
        weights: Vec<WeightVec>,
        e_table: Vec<Vec<Option<usize>>>,
        f_table: Vec<Vec<Option<usize>>>,
        eps_table: Vec<Vec<i64>>,
        phi_table: Vec<Vec<i64>>,
    ) -> TableCrystal {
        TableCrystal { rank, weights, e_table, f_table, eps_table, phi_table }
    }
}

impl Crystal for TableCrystal {
    fn rank(&self) -> usize {
        self.rank
    }
    fn len(&self) -> usize {
        self.weights.len()
    }
    fn e(&self, b: usize, i: usize) -> Option<usize> {
        self.e_table[b][i]
    }
    fn f(&self, b: usize, i: usize) -> Option<usize> {
        self.f_table[b][i]
    }
    fn weight(&self, b: usize) -> &WeightVec {
        &self.weights[b]
    }
    fn eps(&self, b: usize, i: usize) -> i64 {
        self.eps_table[b][i]
    }
    fn phi(&self, b: usize, i: usize) -> i64 {
        self.phi_table[b][i]
    }
}

/// The crystal `B(ω_r)` of a minuscule node, indexed by `W^J`, `J = I ∖ {r}`.
#[derive(Clone, Debug)]
pub struct MinusculeCrystal {
    pub node: usize,
    pub elements: Vec<WeylElement>,
    pub crystal: TableCrystal,
}

impl MinusculeCrystal {
    pub fn new(rs: &RootSystem, r: usize) -> Result<MinusculeCrystal> {
        rs.check_node(r)?;
        if !rs.is_minuscule(r) {
            return Err(Error::NotMinuscule { node: r + 1 });
        }
        let n = rs.rank();
        let j: Vec<usize> = (0..n).filter(|&i| i != r).collect();
        let elements = rs.minimal_coset_reps(&j);
        let index: BTreeMap<&Vec<Vec<i64>>, usize> =
            elements.iter().enumerate().map(|(k, w)| (&w.matrix, k)).collect();
        let omega = WeightVec::fundamental(n, r);
        let weights: Vec<WeightVec> = elements.iter().map(|w| w.act(&omega)).collect();
        let mut f_table = vec![vec![None; n]; elements.len()];
        for (k, w) in elements.iter().enumerate() {
            for i in 0..n {
                let s = w.left_mul(rs, i);
                if let Some(&t) = index.get(&s.matrix) {
                    if elements[t].length() > w.length() {
                        f_table[k][i] = Some(t);
                    }
                }
            }
        }
        let crystal = TableCrystal::from_f_table(n, weights, f_table);
        Ok(MinusculeCrystal { node: r, elements, crystal })
    }
}

impl Crystal for MinusculeCrystal {
    fn rank(&self) -> usize {
        self.crystal.rank()
    }
    fn len(&self) -> usize {
        self.crystal.len()
    }
    fn e(&self, b: usize, i: usize) -> Option<usize> {
        self.crystal.e(b, i)
    }
    fn f(&self, b: usize, i: usize) -> Option<usize> {
        self.crystal.f(b, i)
    }
    fn weight(&self, b: usize) -> &WeightVec {
        self.crystal.weight(b)
    }
    fn eps(&self, b: usize, i: usize) -> i64 {
        self.crystal.eps(b, i)
    }
    fn phi(&self, b: usize, i: usize) -> i64 {
        self.crystal.phi(b, i)
    }
}

/// `B₁ ⊗ B₂` under the signature rule (`f̃_i` acts on the left factor iff `φ_i(b₁) > ε_i(b₂)`); the pair `(a, b)` has index `a·|B₂| + b`.
pub fn tensor_crystal<C1: Crystal, C2: Crystal>(b1: &C1, b2: &C2) -> TableCrystal {
    let rank = b1.rank();
    assert_eq!(rank, b2.rank(), "tensor factors of different rank");
    let n2 = b2.len();
    let total = b1.len() * n2;
    let mut weights = Vec::with_capacity(total);
    let mut e_table = Vec::with_capacity(total);
    let mut f_table = Vec::with_capacity(total);
    let mut eps_table = Vec::with_capacity(total);
    let mut phi_table = Vec::with_capacity(total);
    for a in 0..b1.len() {
        for b in 0..n2 {
            weights.push(b1.weight(a).add(b2.weight(b)));
            let mut er = Vec::with_capacity(rank);
            let mut fr = Vec::with_capacity(rank);
            let mut epsr = Vec::with_capacity(rank);
            let mut phir = Vec::with_capacity(rank);
            for i in 0..rank {
                let (p1, e2) = (b1.phi(a, i), b2.eps(b, i));
                fr.push(if p1 > e2 { b1.f(a, i).map(|x| x * n2 + b) } else { b2.f(b, i).map(|y| a * n2 + y) });
                er.push(if p1 >= e2 { b1.e(a, i).map(|x| x * n2 + b) } else { b2.e(b, i).map(|y| a * n2 + y) });
                epsr.push(b1.eps(a, i).max(e2 - b1.weight(a).0[i]));
                phir.push(b2.phi(b, i).max(p1 + b2.weight(b).0[i]));
            }
            e_table.push(er);
            f_table.push(fr);
            eps_table.push(epsr);
            phi_table.push(phir);
        }
    }
    TableCrystal::from_parts(rank, weights, e_table, f_table, eps_table, phi_table)
}

/// Connected component of a highest-weight element, with canonical paths.
#[derive(Clone, Debug)]
pub struct HwCrystal {
    pub highest_weight: WeightVec,
    /// Index in the ambient crystal of each element.
    pub ambient: Vec<usize>,
    /// `paths[k] = (i₁, …, i_ℓ)` with element `k` equal to `f̃_{i₁} ⋯ f̃_{i_ℓ} u_λ`.
    pub paths: Vec<Vec<usize>>,
    pub crystal: TableCrystal,
}

impl HwCrystal {
    /// Component of `u` in `c`, elements sorted by (path length, path).
    pub fn component_of<C: Crystal>(c: &C, u: usize) -> Result<HwCrystal> {
        let rank = c.rank();
        if (0..rank).any(|i| c.e(u, i).is_some()) {
            return Err(Error::NotHighestWeight);
        }
        // BFS with f̃ from u reaches the whole component
        let mut paths: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        paths.insert(u, Vec::new());
        let mut queue = VecDeque::from([u]);
        let mut order = Vec::new();
        while let Some(b) = queue.pop_front() {
            order.push(b);
            for i in 0..rank {
                if let Some(x) = c.f(b, i) {
                    if let alloc::collections::btree_map::Entry::Vacant(e) = paths.entry(x) {
                        e.insert(Vec::new());
                        queue.push_back(x);
                    }
                }
            }
        }
        // canonical paths: the minimal raising index at each step; BFS order
        // visits elements by depth, so ẽ_i b is always resolved first
        for &b in order.iter().skip(1) {
            let (i, up) = (0..rank).find_map(|i| c.e(b, i).map(|x| (i, x))).expect("non-source has a raising edge");
            let mut p = vec![i];
            p.extend_from_slice(&paths[&up]);
            paths.insert(b, p);
        }
        let mut elems: Vec<(Vec<usize>, usize)> = paths.into_iter().map(|(b, p)| (p, b)).collect();
        elems.sort_by(|x, y| x.0.len().cmp(&y.0.len()).then_with(|| x.0.cmp(&y.0)));
        let local: BTreeMap<usize, usize> = elems.iter().enumerate().map(|(k, (_, b))| (*b, k)).collect();
        let ambient: Vec<usize> = elems.iter().map(|(_, b)| *b).collect();
        let weights = ambient.iter().map(|&b| c.weight(b).clone()).collect();
        let f_table =
            ambient.iter().map(|&b| (0..rank).map(|i| c.f(b, i).map(|x| local[&x])).collect()).collect();
        let crystal = TableCrystal::from_f_table(rank, weights, f_table);
        let paths = elems.into_iter().map(|(p, _)| p).collect();
        Ok(HwCrystal { highest_weight: c.weight(u).clone(), ambient, paths, crystal })
    }

    /// Apply `f̃` along a path from the source, failing on a null step.
    pub fn replay(&self, path: &[usize]) -> Option<usize> {
        path.iter().rev().try_fold(0usize, |b, &i| self.crystal.f(b, i))
    }

    /// Number of elements of each weight.
    pub fn weight_multiplicities(&self) -> BTreeMap<WeightVec, usize> {
        let mut m = BTreeMap::new();
        for w in &self.crystal.weights {
            *m.entry(w.clone()).or_insert(0) += 1;
        }
        m
    }
}

/// The component of the least-indexed highest-weight element of weight `λ`.
pub fn highest_weight_component<C: Crystal>(c: &C, lambda: &WeightVec) -> Result<HwCrystal> {
    let u = c
        .highest_weight_elements()
        .into_iter()
        .find(|&b| c.weight(b) == lambda)
        .ok_or(Error::NoHighestWeightElement)?;
    HwCrystal::component_of(c, u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{CartanType, Family};

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(CartanType::new(f, n).unwrap())
    }

    #[test]
    fn a1_crystal() {
        let a1 = rs(Family::A, 1);
        let b = MinusculeCrystal::new(&a1, 0).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b.f(0, 0), Some(1));
        assert_eq!(b.f(1, 0), None);
        assert_eq!(b.weight(1), &WeightVec(vec![-1]));
    }

    #[test]
    fn minuscule_sizes() {
        let e6 = rs(Family::E, 6);
        assert_eq!(MinusculeCrystal::new(&e6, 0).unwrap().len(), 27);
        assert_eq!(MinusculeCrystal::new(&e6, 5).unwrap().len(), 27);
        assert!(matches!(MinusculeCrystal::new(&e6, 3), Err(Error::NotMinuscule { node: 4 })));
        let d4 = rs(Family::D, 4);
        assert_eq!(MinusculeCrystal::new(&d4, 0).unwrap().len(), 8);
        let b = MinusculeCrystal::new(&e6, 0).unwrap();
        assert_eq!(b.highest_weight_elements(), vec![0]);
    }

    #[test]
    fn a1_tensor_square() {
        let a1 = rs(Family::A, 1);
        let b = MinusculeCrystal::new(&a1, 0).unwrap();
        let t = tensor_crystal(&b, &b);
        assert_eq!(t.len(), 4);
        let hw = t.highest_weight_elements();
        assert_eq!(hw.len(), 2);
        let c = highest_weight_component(&t, &WeightVec(vec![2])).unwrap();
        assert_eq!(c.crystal.len(), 3);
        let c0 = highest_weight_component(&t, &WeightVec(vec![0])).unwrap();
        assert_eq!(c0.crystal.len(), 1);
    }

    #[test]
    fn component_of_minuscule_is_everything() {
        let e6 = rs(Family::E, 6);
        let b = MinusculeCrystal::new(&e6, 0).unwrap();
        let c = highest_weight_component(&b, &WeightVec::fundamental(6, 0)).unwrap();
        assert_eq!(c.crystal.len(), 27);
        for (k, p) in c.paths.iter().enumerate() {
            assert_eq!(c.replay(p), Some(k));
        }
    }

    #[test]
    fn a2_adjoint_component() {
        let a2 = rs(Family::A, 2);
        let v = MinusculeCrystal::new(&a2, 0).unwrap();
        let d = MinusculeCrystal::new(&a2, 1).unwrap();
        let t = tensor_crystal(&v, &d);
        let c = highest_weight_component(&t, &WeightVec(vec![1, 1])).unwrap();
        assert_eq!(c.crystal.len(), 8);
        assert_eq!(c.weight_multiplicities()[&WeightVec(vec![0, 0])], 2);
        assert!(highest_weight_component(&t, &WeightVec(vec![2, 2])).is_err());
    }

    #[test]
    fn string_lengths_match_weight() {
        let d4 = rs(Family::D, 4);
        let b = MinusculeCrystal::new(&d4, 0).unwrap();
        let s = MinusculeCrystal::new(&d4, 2).unwrap();
        let t = tensor_crystal(&tensor_crystal(&b, &s), &b);
        for x in 0..t.len() {
            for i in 0..4 {
                assert_eq!(t.phi(x, i) - t.eps(x, i), t.weight(x).0[i]);
            }
        }
        let t2 = TableCrystal::from_f_table(t.rank, t.weights.clone(), t.f_table.clone());
        assert_eq!(t2, t);
    }
}
