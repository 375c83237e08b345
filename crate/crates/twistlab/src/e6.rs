//! The `E₆` computations around `V(ω₄)`: the realization inside `V(ω₁)^{⊗3}`,
//! the weight-zero vector `f_θ f_β v_{ω₄}` and its Weyl orbit, the sweep over
//! lowering words of weight `ω₂`, the coweight dominance chain, and the
//! numbers-game poset.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::crystal::{highest_weight_component, tensor_crystal, HwCrystal, MinusculeCrystal};
use crate::error::{Error, Result};
use crate::exact_linalg::{rank, Rational};
use crate::rep::{root_lowering_operator, subrepresentation, Representation, SubRepresentation, Vector};
use crate::root_system::{CartanType, Family, RootSystem, RootVec, WeightVec};

/// `β = ω₄ − ω₂` in simple-root coordinates.
pub const BETA: [i64; 6] = [1, 1, 2, 3, 2, 1];
/// The highest root `θ`.
pub const THETA: [i64; 6] = [1, 2, 2, 3, 2, 1];

pub fn e6() -> RootSystem {
    RootSystem::new(CartanType::new(Family::E, 6).expect("E6 is valid"))
}

pub fn omega(i: usize) -> WeightVec {
    WeightVec::fundamental(6, i)
}

/// Everything needed to work inside `V(ω₄)`.
#[derive(Clone, Debug)]
pub struct E6Suite {
    pub rs: RootSystem,
    pub v1: Representation,
    pub ambient: Representation,
    pub crystal: HwCrystal,
    /// `v_{ω₄}` in the ambient tensor cube.
    pub hw_ambient: Vector,
    pub sub: SubRepresentation,
}

impl E6Suite {
    pub fn build() -> Result<E6Suite> {
        Self::build_with(&mut |_| {})
    }

    /// Builds the suite, reporting each stage to `progress`.
    pub fn build_with(progress: &mut dyn FnMut(&str)) -> Result<E6Suite> {
        let rs = e6();
        progress("minuscule crystal and representation of ω1");
        let b1 = MinusculeCrystal::new(&rs, 0)?;
        let v1 = Representation::minuscule(&rs, 0)?;
        progress("tensor cube");
        let cube = tensor_crystal(&tensor_crystal(&b1, &b1), &b1);
        let ambient = v1.tensor(&v1).tensor(&v1);
        progress("highest-weight component of weight ω4");
        let crystal = highest_weight_component(&cube, &omega(3))?;
        let hw_ambient = hw_vector(&v1);
        progress("path basis and generator matrices");
        let sub = subrepresentation(&ambient, &hw_ambient, &crystal)?;
        Ok(E6Suite { rs, v1, ambient, crystal, hw_ambient, sub })
    }

    pub fn rep(&self) -> &Representation {
        &self.sub.rep
    }

    /// `v_{ω₄}` in the path basis.
    pub fn hw(&self) -> Vector {
        Vector::basis(0)
    }

    /// `f_θ f_β v_{ω₄}`; errors if it vanishes.
    pub fn vzero(&self) -> Result<Vector> {
        let fb = root_lowering_operator(&self.rs, &RootVec(BETA.to_vec()))?;
        let ft = root_lowering_operator(&self.rs, &RootVec(THETA.to_vec()))?;
        let v = ft.apply(self.rep(), &fb.apply(self.rep(), &self.hw()));
        if v.is_zero() {
            Err(Error::ZeroVector)
        } else {
            Ok(v)
        }
    }

    /// Breadth-first closure under all `s_i`, identifying `v` with `−v`.
    pub fn orbit_up_to_sign(&self, v: &Vector) -> Result<OrbitSet> {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        let mut orbit = OrbitSet::default();
        orbit.insert(v.clone());
        let mut queue = VecDeque::from([v.clone()]);
        while let Some(x) = queue.pop_front() {
            for i in 0..6 {
                let y = self.rep().weyl_act(i, &x)?;
                if orbit.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Ok(orbit)
    }

    /// Rank of the Weyl orbit of `f_θ f_β v_{ω₄}` and the dimension of the zero
    /// weight space.
    pub fn weight_zero_span(&self) -> Result<WeightZeroReport> {
        let v = self.vzero()?;
        let orbit = self.orbit_up_to_sign(&v)?;
        let vs: Vec<Vector> = orbit.vectors().cloned().collect();
        let zero = WeightVec::zero(6);
        let fiber = self.rep().weights.iter().filter(|w| **w == zero).count();
        let all_weight_zero = vs.iter().all(|x| self.rep().weight_of(x) == Some(&zero));
        Ok(WeightZeroReport { orbit_size: orbit.len(), rank: rank(&vs), fiber_dim: fiber, all_weight_zero })
    }

    /// The extremal vector of weight `μ ∈ W·ω₄` obtained as a Weyl image of `v_{ω₄}`.
    pub fn extremal_vector(&self, mu: &WeightVec) -> Result<Vector> {
        let (d, word) = self.rs.dominant_conjugate(mu);
        if d != omega(3) {
            return Err(Error::Invalid(alloc::format!("{:?} is not in the orbit of ω4", mu.0)));
        }
        // s_{i_k} ⋯ s_{i_1} μ = ω₄, so μ = s_{i_1} ⋯ s_{i_k} ω₄
        let mut v = self.hw();
        for &i in word.iter().rev() {
            v = self.rep().weyl_act(i, &v)?;
        }
        Ok(v)
    }

    /// `x` is a nonzero multiple of the Weyl image of `v_{ω₄}` of the same weight.
    pub fn is_extremal_direct(&self, x: &Vector) -> bool {
        let Some(mu) = self.rep().weight_of(x) else { return false };
        match self.extremal_vector(mu) {
            Ok(e) => x.ratio_to(&e).is_some(),
            Err(_) => false,
        }
    }

    /// `f_{w_1} ⋯ f_{w_m} v_{ω₄}`.
    pub fn apply_lowering_word(&self, word: &[usize]) -> Vector {
        word.iter().rev().fold(self.hw(), |acc, &i| self.rep().apply_f(i, &acc))
    }

    pub fn levi_sweep(&self) -> LeviSweep<'_> {
        LeviSweep::new(self)
    }
}

/// The highest-weight vector of weight `ω₄` in `V(ω₁)^{⊗3}`: the alternating
/// sum over orderings of `v`, `f₁v`, `f₃f₁v`.
pub fn hw_vector(v1: &Representation) -> Vector {
    let top = Vector::basis(0);
    let a = v1.apply_f(0, &top);
    let b = v1.apply_f(2, &a);
    let key = |x: &Vector| *x.keys().next().expect("nonzero");
    let ks = [0, key(&a), key(&b)];
    let mut out = Vector::new();
    for (perm, sign) in [([0, 1, 2], 1), ([1, 0, 2], -1), ([0, 2, 1], -1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([2, 1, 0], -1)] {
        let idx = Representation::tensor_index(v1.dim(), &perm.map(|p| ks[p]));
        out.add_term(idx, &Rational::from(sign));
    }
    out
}

/// Vectors up to a global sign, each stored with a positive leading coefficient.
#[derive(Clone, Debug, Default)]
pub struct OrbitSet {
    set: BTreeSet<Vector>,
}

impl OrbitSet {
    fn normalize(v: Vector) -> Vector {
        match v.first() {
            Some((_, c)) if c.is_negative() => v.neg(),
            _ => v,
        }
    }

    /// Returns false if `v` or `−v` is already present.
    pub fn insert(&mut self, v: Vector) -> bool {
        self.set.insert(Self::normalize(v))
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.set.contains(&Self::normalize(v.clone()))
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &Vector> {
        self.set.iter()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightZeroReport {
    pub orbit_size: usize,
    pub rank: usize,
    pub fiber_dim: usize,
    pub all_weight_zero: bool,
}

/// Tally of the sweep over lowering words of content `β`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LeviReport {
    pub total_words: u64,
    pub zero_words: u64,
    pub nonzero_words: u64,
    /// Words with a split point as written.
    pub literal_split_words: u64,
    /// Words with a split point after commuting non-adjacent operators.
    pub levi_extremal_words: u64,
    /// Least failing word (0-based nodes, leftmost operator first).
    pub counterexample: Option<Vec<usize>>,
}

impl LeviReport {
    pub fn merge(&mut self, o: &LeviReport) {
        self.total_words += o.total_words;
        self.zero_words += o.zero_words;
        self.nonzero_words += o.nonzero_words;
        self.literal_split_words += o.literal_split_words;
        self.levi_extremal_words += o.levi_extremal_words;
        self.counterexample = match (self.counterexample.take(), &o.counterexample) {
            (Some(a), Some(b)) => Some(a.min(b.clone())),
            (a, b) => a.or_else(|| b.clone()),
        };
    }

    pub fn all_levi_extremal(&self) -> bool {
        self.counterexample.is_none() && self.levi_extremal_words == self.nonzero_words
    }
}

fn multinomial(counts: &[usize]) -> u64 {
    let mut out = 1u64;
    let mut n = 0u64;
    for &c in counts {
        for k in 1..=c as u64 {
            n += 1;
            out = out * n / k;
        }
    }
    out
}

/// Enumerates `f_{i_1} ⋯ f_{i_10} v_{ω₄}` over all orderings of the content of
/// `β`, building words from the right and pruning at the first zero.
pub struct LeviSweep<'a> {
    suite: &'a E6Suite,
    extremal: BTreeSet<WeightVec>,
    content: [usize; 6],
}

impl<'a> LeviSweep<'a> {
    pub fn new(suite: &'a E6Suite) -> LeviSweep<'a> {
        let extremal = suite.rs.weyl_orbit(&omega(3));
        LeviSweep { suite, extremal, content: BETA.map(|c| c as usize) }
    }

    pub fn word_count(&self) -> u64 {
        multinomial(&self.content)
    }

    /// Suffixes of the given length (rightmost operators, in word order) that
    /// partition the sweep.
    pub fn partitions(&self, depth: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut counts = self.content;
        fn go(depth: usize, counts: &mut [usize; 6], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == depth {
                let mut s = cur.clone();
                s.reverse();
                out.push(s);
                return;
            }
            for i in 0..6 {
                if counts[i] > 0 {
                    counts[i] -= 1;
                    cur.push(i);
                    go(depth, counts, cur, out);
                    cur.pop();
                    counts[i] += 1;
                }
            }
        }
        go(depth, &mut counts, &mut cur, &mut out);
        out
    }

    /// Levi-extremality of a full word with nonzero action; `None` if the action
    /// is zero.
    pub fn is_levi_extremal(&self, word: &[usize]) -> Option<bool> {
        if self.suite.apply_lowering_word(word).is_zero() {
            return None;
        }
        Some(self.commutation_split(word))
    }

    fn suffix_is_extremal(&self, suffix: impl Iterator<Item = usize>) -> bool {
        let w = suffix.fold(omega(3), |w, i| w.sub(&self.suite.rs.simple_root_weight(i)));
        self.extremal.contains(&w)
    }

    /// Some `k` splits the word as written: the first `k` operators lie on a
    /// proper subdiagram and the remaining ones send `v_{ω₄}` to an extremal
    /// weight (extremal weights have multiplicity one, so a nonzero image there
    /// is an extremal vector).
    pub fn literal_split(&self, word: &[usize]) -> bool {
        let mut seen = [false; 6];
        for k in 1..=word.len() {
            seen[word[k - 1]] = true;
            if seen.iter().all(|&s| s) {
                return false;
            }
            if self.suffix_is_extremal(word[k..].iter().copied()) {
                return true;
            }
        }
        false
    }

    /// Like [`literal_split`](Self::literal_split), but over every word obtained
    /// by commuting operators `f_i`, `f_j` with `i`, `j` not adjacent; these all
    /// give the same vector. The possible prefixes are the order ideals of the
    /// heap of the word.
    pub fn commutation_split(&self, word: &[usize]) -> bool {
        let m = word.len();
        let a = &self.suite.rs.cartan;
        // before[q]: positions p < q whose operator does not commute with word[q]
        let before: Vec<u32> = (0..m)
            .map(|q| (0..q).filter(|&p| word[p] == word[q] || a[word[p]][word[q]] != 0).fold(0, |acc, p| acc | 1 << p))
            .collect();
        (1u32..(1 << m)).any(|set| {
            let ideal = (0..m).all(|q| set & (1 << q) == 0 || before[q] & !set == 0);
            if !ideal {
                return false;
            }
            let mut seen = [false; 6];
            (0..m).filter(|q| set & (1 << q) != 0).for_each(|q| seen[word[q]] = true);
            !seen.iter().all(|&s| s) && self.suffix_is_extremal((0..m).filter(|q| set & (1 << q) == 0).map(|q| word[q]))
        })
    }

    /// Sweep over all words ending with `suffix`.
    pub fn sweep_suffix(&self, suffix: &[usize]) -> LeviReport {
        let mut counts = self.content;
        for &i in suffix {
            counts[i] -= 1;
        }
        let m: usize = self.content.iter().sum();
        let mut report = LeviReport::default();
        let mut v = self.suite.hw();
        for &i in suffix.iter().rev() {
            v = self.suite.rep().apply_f(i, &v);
        }
        // rev_letters[j] is the (j+1)-th operator applied
        let mut rev_letters: Vec<usize> = suffix.iter().rev().copied().collect();
        if v.is_zero() {
            let c = multinomial(&counts);
            report.total_words = c;
            report.zero_words = c;
            return report;
        }
        self.dfs(&mut counts, &v, &mut rev_letters, m, &mut report);
        report
    }

    fn dfs(
        &self,
        counts: &mut [usize; 6],
        v: &Vector,
        rev_letters: &mut Vec<usize>,
        m: usize,
        report: &mut LeviReport,
    ) {
        if rev_letters.len() == m {
            report.total_words += 1;
            report.nonzero_words += 1;
            let word: Vec<usize> = rev_letters.iter().rev().copied().collect();
            if self.literal_split(&word) {
                report.literal_split_words += 1;
            }
            if self.commutation_split(&word) {
                report.levi_extremal_words += 1;
            } else if report.counterexample.as_ref().is_none_or(|c| word < *c) {
                report.counterexample = Some(word);
            }
            return;
        }
        for i in 0..6 {
            if counts[i] == 0 {
                continue;
            }
            counts[i] -= 1;
            let x = self.suite.rep().apply_f(i, v);
            if x.is_zero() {
                let c = multinomial(counts);
                report.total_words += c;
                report.zero_words += c;
            } else {
                rev_letters.push(i);
                self.dfs(counts, &x, rev_letters, m, report);
                rev_letters.pop();
            }
            counts[i] += 1;
        }
    }

    pub fn sweep(&self) -> LeviReport {
        self.sweep_suffix(&[])
    }
}

/// `0 ≺ ω̌₂ ≺ ω̌₁+ω̌₆ ≺ ω̌₄` among dominant coweights (type `E₆` is self-dual,
/// so coweights use the same coordinates as weights).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominanceChainReport {
    pub chain: Vec<WeightVec>,
    /// Consecutive differences in simple-coroot coordinates, top down.
    pub differences: Vec<RootVec>,
    pub consecutive_ok: bool,
    /// Dominant coweights below `ω̌₄`, which must be exactly the chain.
    pub dominants_below_top: Vec<WeightVec>,
    pub ok: bool,
}

pub fn dominance_chain_check() -> DominanceChainReport {
    let rs = e6();
    let chain = vec![WeightVec::zero(6), omega(1), omega(0).add(&omega(5)), omega(3)];
    let mut differences = Vec::new();
    let mut consecutive_ok = true;
    for w in chain.windows(2).rev() {
        match rs.weight_to_root_lattice(&w[1].sub(&w[0])) {
            Some(d) if d.is_nonnegative() && d.height() > 0 => differences.push(d),
            _ => consecutive_ok = false,
        }
    }
    let below = rs.dominant_weights_below(&omega(3)).unwrap_or_default();
    let mut expect = chain.clone();
    expect.sort();
    let mut got = below.clone();
    got.sort();
    let ok = consecutive_ok && got == expect;
    DominanceChainReport { chain, differences, consecutive_ok, dominants_below_top: below, ok }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NumbersGameNode {
    pub weight: WeightVec,
    pub star: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumbersGamePoset {
    pub nodes: Vec<NumbersGameNode>,
    /// `(from, to, i)` meaning `to = s_i from`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl NumbersGamePoset {
    pub fn star_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.star).count()
    }

    pub fn index_of(&self, w: &WeightVec) -> Option<usize> {
        self.nodes.iter().position(|n| &n.weight == w)
    }

    pub fn out_labels(&self, k: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.edges.iter().filter(|e| e.0 == k).map(|e| e.2).collect();
        v.sort();
        v
    }
}

/// Weights `μ ≤ ω₄` with `μ − ω₂ ≥ 0`, generated by `μ → s_i μ` when
/// `⟨μ, α̌_i⟩ ≥ 1`; a node whose `μ − ω₂` has support on a proper subdiagram is
/// starred and not expanded.
pub fn numbers_game_poset() -> NumbersGamePoset {
    let rs = e6();
    let floor = omega(1);
    let above_floor = |w: &WeightVec| rs.weight_to_root_lattice(&w.sub(&floor)).filter(|r| r.is_nonnegative());
    let is_star = |w: &WeightVec| above_floor(w).is_some_and(|r| r.0.contains(&0));
    let top = omega(3);
    let mut nodes = vec![NumbersGameNode { star: is_star(&top), weight: top.clone() }];
    let mut index: BTreeMap<WeightVec, usize> = BTreeMap::from([(top, 0)]);
    let mut edges = Vec::new();
    let mut head = 0;
    while head < nodes.len() {
        let cur = nodes[head].clone();
        if !cur.star {
            for i in 0..6 {
                if cur.weight.0[i] >= 1 {
                    let next = rs.reflect(i, &cur.weight);
                    if above_floor(&next).is_none() {
                        continue;
                    }
                    let k = *index.entry(next.clone()).or_insert_with(|| {
                        nodes.push(NumbersGameNode { star: is_star(&next), weight: next.clone() });
                        nodes.len() - 1
                    });
                    edges.push((head, k, i));
                }
            }
        }
        head += 1;
    }
    NumbersGamePoset { nodes, edges }
}

/// Reference drawing of the poset: fundamental-weight coordinates in the
/// layout `(a₁, a₃, a₄, a₅, a₆; a₂)`, a star flag, and the outgoing edge labels
/// (1-based), row by row.
pub const NUMBERS_GAME_REFERENCE: &[([i64; 6], bool, &[usize])] = &[
    ([0, 0, 1, 0, 0, 0], false, &[4]),
    ([0, 1, -1, 1, 0, 1], false, &[2, 3, 5]),
    ([1, -1, 0, 1, 0, 1], false, &[1, 2, 5]),
    ([0, 1, 0, 1, 0, -1], true, &[]),
    ([0, 1, 0, -1, 1, 1], false, &[2, 3, 6]),
    ([-1, 0, 0, 1, 0, 1], true, &[]),
    ([1, -1, 1, 1, 0, -1], true, &[]),
    ([1, -1, 1, -1, 1, 1], false, &[1, 2, 4, 6]),
    ([0, 1, 1, -1, 1, -1], true, &[]),
    ([0, 1, 0, 0, -1, 1], true, &[]),
    ([-1, 0, 1, -1, 1, 1], true, &[]),
    ([1, -1, 2, -1, 1, -1], true, &[]),
    ([1, 0, -1, 0, 1, 2], false, &[1, 6]),
    ([1, -1, 1, 0, -1, 1], true, &[]),
    ([-1, 1, -1, 0, 1, 2], true, &[]),
    ([1, 0, -1, 1, -1, 2], true, &[]),
];

/// Converts the drawing layout `(a₁, a₃, a₄, a₅, a₆; a₂)` to the standard node order.
pub fn from_drawing_layout(c: [i64; 6]) -> WeightVec {
    WeightVec(vec![c[0], c[5], c[1], c[2], c[3], c[4]])
}

/// Node-for-node comparison of the generated poset with the reference.
pub fn numbers_game_matches_reference(p: &NumbersGamePoset) -> bool {
    if p.nodes.len() != NUMBERS_GAME_REFERENCE.len() {
        return false;
    }
    NUMBERS_GAME_REFERENCE.iter().all(|(c, star, out)| {
        let w = from_drawing_layout(*c);
        match p.index_of(&w) {
            Some(k) => {
                let labels: Vec<usize> = p.out_labels(k).iter().map(|i| i + 1).collect();
                p.nodes[k].star == *star && labels == *out
            }
            None => false,
        }
    })
}
