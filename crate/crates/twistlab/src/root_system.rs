//! Finite root systems in the standard labelling, Weyl group elements, the root
//! poset, Freudenthal multiplicities and the Weyl dimension formula.
//!
//! Nodes are 0-based in the API: node `i` is the standard node `i + 1`.
//! The Cartan matrix follows `a[i][j] = ⟨α̌_i, α_j⟩`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_linalg::{invert, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<CartanType> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidCartanType { family: family.letter(), rank })
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E) || self.rank == 1
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVec(pub Vec<i64>);

/// A root-lattice element in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVec(pub Vec<i64>);

impl WeightVec {
    pub fn zero(n: usize) -> WeightVec {
        WeightVec(vec![0; n])
    }

    /// The fundamental weight `ω_i`.
    pub fn fundamental(n: usize, i: usize) -> WeightVec {
        let mut v = vec![0; n];
        v[i] = 1;
        WeightVec(v)
    }

    pub fn add(&self, o: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: i64) -> WeightVec {
        WeightVec(self.0.iter().map(|a| a * c).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl RootVec {
    pub fn simple(n: usize, i: usize) -> RootVec {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVec(v)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, o: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn neg(&self) -> RootVec {
        RootVec(self.0.iter().map(|a| -a).collect())
    }
}

fn cartan_matrix(ty: CartanType) -> Vec<Vec<i64>> {
    let n = ty.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match ty.family {
        Family::A => (0..n.saturating_sub(1)).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B => {
            (0..n.saturating_sub(2)).for_each(|i| link(i, i + 1, -1, -1));
            if n >= 2 {
                link(n - 2, n - 1, -1, -2);
            }
        }
        Family::C => {
            (0..n.saturating_sub(2)).for_each(|i| link(i, i + 1, -1, -1));
            if n >= 2 {
                link(n - 2, n - 1, -2, -1);
            }
        }
        Family::D => {
            (0..n - 2).for_each(|i| if i + 1 < n - 2 { link(i, i + 1, -1, -1) });
            link(n - 3, n - 2, -1, -1);
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(2, 3, -1, -1);
            link(1, 3, -1, -1);
            (3..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => link(0, 1, -3, -1),
    }
    a
}

/// Closed-form number of positive roots.
pub fn positive_root_count(ty: CartanType) -> usize {
    let n = ty.rank;
    match ty.family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

/// A finite root system with its Cartan data and positive roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub cartan: Vec<Vec<i64>>,
    /// Integer symmetrizer: `d_i a_ij = d_j a_ji`, short simple roots get 1 when
    /// the system has two root lengths.
    pub symmetrizer: Vec<i64>,
    /// Positive roots sorted by height, then lexicographically.
    pub positive_roots: Vec<RootVec>,
    cartan_inverse: Vec<Vec<Rational>>,
    root_index: BTreeMap<RootVec, usize>,
    d_max: i64,
}

/// Edges `γ → γ + α_i` of the root poset, as indices into `roots`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPoset {
    pub roots: Vec<RootVec>,
    /// `(from, to, i)`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl RootPoset {
    /// Elements with no outgoing edge.
    pub fn maximal_elements(&self) -> Vec<usize> {
        let has_out: BTreeSet<usize> = self.edges.iter().map(|e| e.0).collect();
        (0..self.roots.len()).filter(|i| !has_out.contains(i)).collect()
    }
}

impl RootSystem {
    pub fn new(ty: CartanType) -> RootSystem {
        let n = ty.rank;
        let cartan = cartan_matrix(ty);
        let symmetrizer = symmetrizer(&cartan);
        let d_max = *symmetrizer.iter().max().unwrap();
        let cartan_q: Vec<Vec<Rational>> =
            cartan.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect();
        let cartan_inverse = invert(&cartan_q).expect("Cartan matrix is invertible");
        let mut rs = RootSystem {
            cartan_type: ty,
            cartan,
            symmetrizer,
            positive_roots: Vec::new(),
            cartan_inverse,
            root_index: BTreeMap::new(),
            d_max,
        };
        // closure of the simple roots under simple reflections
        let mut seen: BTreeSet<RootVec> = (0..n).map(|i| RootVec::simple(n, i)).collect();
        let mut queue: VecDeque<RootVec> = seen.iter().cloned().collect();
        while let Some(b) = queue.pop_front() {
            for i in 0..n {
                let r = rs.reflect_root(i, &b);
                if !seen.contains(&r) {
                    seen.insert(r.clone());
                    queue.push_back(r);
                }
            }
        }
        let mut pos: Vec<RootVec> = seen.into_iter().filter(|r| r.is_nonnegative()).collect();
        pos.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        rs.root_index = pos.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        rs.positive_roots = pos;
        rs
    }

    pub fn build(ty: CartanType) -> RootSystem {
        RootSystem::new(ty)
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node: i + 1, rank: self.rank() })
        }
    }

    pub fn check_len(&self, len: usize) -> Result<()> {
        if len == self.rank() {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.rank(), found: len })
        }
    }

    pub fn cartan_inverse(&self) -> &[Vec<Rational>] {
        &self.cartan_inverse
    }

    /// `(α_i, α_i)` for the form normalized by `(θ, θ) = 2`.
    pub fn root_length_sq(&self, i: usize) -> Rational {
        Rational::new(2 * self.symmetrizer[i], self.d_max)
    }

    pub fn is_root(&self, b: &RootVec) -> bool {
        self.root_index.contains_key(b) || self.root_index.contains_key(&b.neg())
    }

    pub fn positive_root_index(&self, b: &RootVec) -> Option<usize> {
        self.root_index.get(b).copied()
    }

    pub fn simple_root(&self, i: usize) -> RootVec {
        RootVec::simple(self.rank(), i)
    }

    /// `α_i` in fundamental-weight coordinates.
    pub fn simple_root_weight(&self, i: usize) -> WeightVec {
        WeightVec(self.cartan.iter().map(|row| row[i]).collect())
    }

    pub fn root_to_weight(&self, b: &RootVec) -> WeightVec {
        WeightVec(self.cartan.iter().map(|row| row.iter().zip(&b.0).map(|(a, x)| a * x).sum()).collect())
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn weight_to_root(&self, w: &WeightVec) -> Vec<Rational> {
        self.cartan_inverse
            .iter()
            .map(|row| row.iter().zip(&w.0).fold(Rational::zero(), |acc, (a, &x)| &acc + &(a * &Rational::from(x))))
            .collect()
    }

    /// Simple-root coordinates when the weight lies in the root lattice.
    pub fn weight_to_root_lattice(&self, w: &WeightVec) -> Option<RootVec> {
        self.weight_to_root(w).iter().map(|x| x.to_i64()).collect::<Option<Vec<_>>>().map(RootVec)
    }

    /// `(β, β)` for an element of the root lattice.
    pub fn root_norm(&self, b: &RootVec) -> Rational {
        let n = self.rank();
        let mut s = 0i64;
        for k in 0..n {
            for l in 0..n {
                s += b.0[k] * b.0[l] * self.symmetrizer[k] * self.cartan[k][l];
            }
        }
        Rational::new(s, self.d_max)
    }

    /// Coordinates of the coroot `β̌` in the basis of simple coroots.
    pub fn coroot(&self, b: &RootVec) -> Vec<i64> {
        // β̌ = Σ β_k (d_k / d_β) α̌_k with d_β = (β,β)/2 in units of the symmetrizer
        let dbeta2 = self.root_norm(b) * Rational::from(self.d_max);
        b.0.iter()
            .zip(&self.symmetrizer)
            .map(|(x, d)| {
                let q = Rational::from(2 * x * d) / &dbeta2;
                q.to_i64().expect("coroot coordinates are integral")
            })
            .collect()
    }

    /// `⟨λ, β̌⟩`.
    pub fn pair_coroot(&self, w: &WeightVec, b: &RootVec) -> i64 {
        self.coroot(b).iter().zip(&w.0).map(|(a, x)| a * x).sum()
    }

    /// Normalized invariant form on weights.
    pub fn inner(&self, l: &WeightVec, m: &WeightVec) -> Rational {
        let y = self.weight_to_root(m);
        let mut s = Rational::zero();
        for j in 0..self.rank() {
            s += &(&y[j] * &Rational::from(l.0[j] * self.symmetrizer[j]));
        }
        s / Rational::from(self.d_max)
    }

    /// `(λ, β)` for a weight and a root-lattice element.
    pub fn inner_weight_root(&self, l: &WeightVec, b: &RootVec) -> Rational {
        let s: i64 = (0..self.rank()).map(|j| l.0[j] * b.0[j] * self.symmetrizer[j]).sum();
        Rational::new(s, self.d_max)
    }

    pub fn reflect(&self, i: usize, w: &WeightVec) -> WeightVec {
        let c = w.0[i];
        WeightVec(w.0.iter().enumerate().map(|(j, x)| x - c * self.cartan[j][i]).collect())
    }

    pub fn reflect_root(&self, i: usize, b: &RootVec) -> RootVec {
        let c: i64 = self.cartan[i].iter().zip(&b.0).map(|(a, x)| a * x).sum();
        let mut r = b.clone();
        r.0[i] -= c;
        r
    }

    pub fn rho(&self) -> WeightVec {
        WeightVec(vec![1; self.rank()])
    }

    pub fn highest_root(&self) -> RootVec {
        self.positive_roots.last().unwrap().clone()
    }

    pub fn root_poset(&self) -> RootPoset {
        let mut edges = Vec::new();
        for (a, r) in self.positive_roots.iter().enumerate() {
            for i in 0..self.rank() {
                let s = r.add(&self.simple_root(i));
                if let Some(b) = self.positive_root_index(&s) {
                    edges.push((a, b, i));
                }
            }
        }
        RootPoset { roots: self.positive_roots.clone(), edges }
    }

    pub fn weyl_orbit(&self, w: &WeightVec) -> BTreeSet<WeightVec> {
        self.orbit_under(w, &(0..self.rank()).collect::<Vec<_>>())
    }

    /// Orbit of `w` under the subgroup generated by the given simple reflections.
    pub fn orbit_under(&self, w: &WeightVec, nodes: &[usize]) -> BTreeSet<WeightVec> {
        let mut seen = BTreeSet::new();
        seen.insert(w.clone());
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(x) = queue.pop_front() {
            for &i in nodes {
                let y = self.reflect(i, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Order of the parabolic subgroup `W_J`, by orbit-stabilizer: for a leaf
    /// `k` of `J`, `|W_J| = |W_J·ω_k| · |W_{J∖k}|`.
    pub fn parabolic_order(&self, nodes: &[usize]) -> usize {
        let Some(&k) = nodes
            .iter()
            .find(|&&k| nodes.iter().filter(|&&j| j != k && self.cartan[k][j] != 0).count() <= 1)
            .or(nodes.first())
        else {
            return 1;
        };
        let rest: Vec<usize> = nodes.iter().copied().filter(|&j| j != k).collect();
        self.orbit_under(&WeightVec::fundamental(self.rank(), k), nodes).len() * self.parabolic_order(&rest)
    }

    pub fn weyl_group_order(&self) -> usize {
        self.parabolic_order(&(0..self.rank()).collect::<Vec<_>>())
    }

    /// The dominant conjugate of `w` and a word `i_1 … i_k` with
    /// `s_{i_k} ⋯ s_{i_1} w` dominant.
    pub fn dominant_conjugate(&self, w: &WeightVec) -> (WeightVec, Vec<usize>) {
        let mut x = w.clone();
        let mut word = Vec::new();
        while let Some(i) = x.0.iter().position(|&c| c < 0) {
            x = self.reflect(i, &x);
            word.push(i);
        }
        (x, word)
    }

    /// `λ − μ` is a nonnegative integer combination of simple roots.
    pub fn dominates(&self, l: &WeightVec, m: &WeightVec) -> bool {
        match self.weight_to_root_lattice(&l.sub(m)) {
            Some(r) => r.is_nonnegative(),
            None => false,
        }
    }

    /// All dominant `μ ⪯ λ`, found by subtracting positive roots from dominant
    /// weights; sorted by decreasing height of `λ − μ` reversed (highest first).
    pub fn dominant_weights_below(&self, l: &WeightVec) -> Result<Vec<WeightVec>> {
        self.check_len(l.0.len())?;
        if !l.is_dominant() {
            return Err(Error::NotDominant);
        }
        let roots: Vec<WeightVec> = self.positive_roots.iter().map(|r| self.root_to_weight(r)).collect();
        let mut seen = BTreeSet::new();
        seen.insert(l.clone());
        let mut queue = VecDeque::from([l.clone()]);
        while let Some(x) = queue.pop_front() {
            for r in &roots {
                let y = x.sub(r);
                if y.is_dominant() && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<(i64, WeightVec)> = seen
            .into_iter()
            .map(|m| {
                let h = self.weight_to_root_lattice(&l.sub(&m)).map(|r| r.height()).unwrap_or(0);
                (h, m)
            })
            .collect();
        out.sort();
        Ok(out.into_iter().map(|(_, m)| m).collect())
    }

    /// Multiplicities of all dominant weights of `V(λ)` by Freudenthal's formula.
    pub fn dominant_character(&self, l: &WeightVec) -> Result<BTreeMap<WeightVec, BigInt>> {
        let doms = self.dominant_weights_below(l)?;
        let rho = self.rho();
        let lr = l.add(&rho);
        let lr_norm = self.inner(&lr, &lr);
        let mut mult: BTreeMap<WeightVec, BigInt> = BTreeMap::new();
        mult.insert(l.clone(), BigInt::one());
        let lookup = |mult: &BTreeMap<WeightVec, BigInt>, x: &WeightVec| -> Option<BigInt> {
            let (d, _) = self.dominant_conjugate(x);
            if !self.dominates(l, &d) {
                return None;
            }
            Some(mult.get(&d).cloned().unwrap_or_default())
        };
        for m in doms.iter().skip(1) {
            let mut sum = Rational::zero();
            for a in &self.positive_roots {
                let aw = self.root_to_weight(a);
                let mut x = m.add(&aw);
                loop {
                    match lookup(&mult, &x) {
                        Some(c) => {
                            if !c.is_zero() {
                                sum += &(Rational::from(c) * self.inner_weight_root(&x, a));
                            }
                        }
                        None => break,
                    }
                    x = x.add(&aw);
                }
            }
            let mr = m.add(&rho);
            let denom = &lr_norm - &self.inner(&mr, &mr);
            let val = Rational::from(2) * sum / denom;
            assert!(val.is_integer(), "Freudenthal recursion produced a non-integer");
            mult.insert(m.clone(), val.numer().clone());
        }
        Ok(mult)
    }

    pub fn freudenthal_multiplicity(&self, l: &WeightVec, m: &WeightVec) -> Result<BigInt> {
        self.check_len(m.0.len())?;
        let ch = self.dominant_character(l)?;
        let (d, _) = self.dominant_conjugate(m);
        Ok(ch.get(&d).cloned().unwrap_or_default())
    }

    pub fn weyl_dimension(&self, l: &WeightVec) -> Result<BigInt> {
        self.check_len(l.0.len())?;
        if !l.is_dominant() {
            return Err(Error::NotDominant);
        }
        let rho = self.rho();
        let lr = l.add(&rho);
        let mut q = Rational::one();
        for a in &self.positive_roots {
            q = q * Rational::new(self.pair_coroot(&lr, a), self.pair_coroot(&rho, a));
        }
        Ok(q.numer().clone())
    }

    pub fn is_minuscule(&self, r: usize) -> bool {
        self.positive_roots.iter().all(|a| self.coroot(a)[r] <= 1)
    }

    /// Minimal length representatives of `W / W_J`, by breadth-first search on
    /// the orbit of `Σ_{i∉J} ω_i`: `s_i w` is added when `⟨w·λ_J, α̌_i⟩ > 0`, which
    /// is exactly when the length goes up and the result stays `J`-minimal.
    pub fn minimal_coset_reps(&self, j: &[usize]) -> Vec<WeylElement> {
        let n = self.rank();
        let lj = WeightVec((0..n).map(|i| if j.contains(&i) { 0 } else { 1 }).collect());
        let mut out = vec![WeylElement::identity(n)];
        let mut weights = vec![lj.clone()];
        let mut seen = BTreeSet::from([lj]);
        let mut head = 0;
        while head < out.len() {
            let w = out[head].clone();
            let mu = weights[head].clone();
            head += 1;
            for i in 0..n {
                if mu.0[i] > 0 {
                    let nu = self.reflect(i, &mu);
                    if seen.insert(nu.clone()) {
                        out.push(w.left_mul(self, i));
                        weights.push(nu);
                    }
                }
            }
        }
        out
    }
}

fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    d[0] = Some(Rational::one());
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if i != j && a[i][j] != 0 {
                    if let (Some(di), None) = (d[i].clone(), &d[j]) {
                        // d_i a_ij = d_j a_ji
                        d[j] = Some(di * Rational::new(a[i][j], a[j][i]));
                        changed = true;
                    }
                }
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.unwrap()).collect();
    let lcm = d.iter().fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let scaled: Vec<i64> = d.iter().map(|x| (x * &Rational::from(lcm.clone())).to_i64().unwrap()).collect();
    let g = scaled.iter().fold(0i64, |acc, &x| num_integer::Integer::gcd(&acc, &x));
    scaled.iter().map(|x| x / g).collect()
}

/// A Weyl group element, identified by its action on fundamental-weight
/// coordinates; `word` is a reduced word `s_{w_0} s_{w_1} ⋯` witnessing it.
#[derive(Clone, Debug)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
    pub word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, o: &Self) -> bool {
        self.matrix == o.matrix
    }
}
impl Eq for WeylElement {}
impl PartialOrd for WeylElement {
    fn partial_cmp(&self, o: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for WeylElement {
    fn cmp(&self, o: &Self) -> core::cmp::Ordering {
        self.matrix.cmp(&o.matrix)
    }
}

impl WeylElement {
    pub fn identity(n: usize) -> WeylElement {
        let matrix = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        WeylElement { matrix, word: Vec::new() }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> WeylElement {
        WeylElement::identity(rs.rank()).left_mul(rs, i)
    }

    /// `s_i · self`. The word is extended on the left without checking reducedness.
    pub fn left_mul(&self, rs: &RootSystem, i: usize) -> WeylElement {
        let n = rs.rank();
        // (s_i λ)_j = λ_j − λ_i a_ji
        let mut m = self.matrix.clone();
        for j in 0..n {
            for k in 0..n {
                m[j][k] = self.matrix[j][k] - self.matrix[i][k] * rs.cartan[j][i];
            }
        }
        let mut word = Vec::with_capacity(self.word.len() + 1);
        word.push(i);
        word.extend_from_slice(&self.word);
        WeylElement { matrix: m, word }
    }

    pub fn act(&self, w: &WeightVec) -> WeightVec {
        WeightVec(self.matrix.iter().map(|row| row.iter().zip(&w.0).map(|(a, x)| a * x).sum()).collect())
    }

    /// Apply to a root-lattice element, following the witness word right to left.
    pub fn act_root(&self, rs: &RootSystem, b: &RootVec) -> RootVec {
        self.word.iter().rev().fold(b.clone(), |acc, &i| rs.reflect_root(i, &acc))
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, rs: &RootSystem) -> usize {
        rs.positive_roots.iter().filter(|b| !self.act_root(rs, b).is_nonnegative()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(CartanType::new(f, n).unwrap())
    }

    #[test]
    fn positive_root_counts() {
        for (f, n) in [
            (Family::A, 1),
            (Family::A, 4),
            (Family::B, 1),
            (Family::B, 3),
            (Family::C, 4),
            (Family::D, 3),
            (Family::D, 5),
            (Family::E, 6),
            (Family::E, 7),
            (Family::E, 8),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let t = CartanType::new(f, n).unwrap();
            assert_eq!(RootSystem::new(t).positive_roots.len(), positive_root_count(t), "{t}");
        }
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(CartanType::new(Family::E, 5).is_err());
        assert!(CartanType::new(Family::D, 2).is_err());
        assert!(CartanType::new(Family::G, 3).is_err());
    }

    #[test]
    fn e6_highest_root_and_poset() {
        let e6 = rs(Family::E, 6);
        assert_eq!(e6.highest_root(), RootVec(vec![1, 2, 2, 3, 2, 1]));
        assert_eq!(e6.highest_root().height(), 11);
        let p = e6.root_poset();
        assert_eq!(p.maximal_elements(), vec![p.roots.len() - 1]);
        assert!(rs(Family::A, 1).root_poset().edges.is_empty());
    }

    #[test]
    fn symmetrizers_and_lengths() {
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.symmetrizer, vec![1, 3]);
        assert_eq!(g2.root_length_sq(1), Rational::from(2));
        let b3 = rs(Family::B, 3);
        assert_eq!(b3.symmetrizer, vec![2, 2, 1]);
        let c3 = rs(Family::C, 3);
        assert_eq!(c3.symmetrizer, vec![1, 1, 2]);
        let f4 = rs(Family::F, 4);
        assert_eq!(f4.symmetrizer, vec![2, 2, 1, 1]);
        for s in [&g2, &b3, &c3, &f4] {
            let th = s.highest_root();
            assert_eq!(s.root_norm(&th), Rational::from(2));
        }
    }

    #[test]
    fn orbits_and_reflections() {
        let e6 = rs(Family::E, 6);
        assert_eq!(e6.weyl_orbit(&WeightVec::zero(6)).len(), 1);
        assert_eq!(e6.weyl_orbit(&WeightVec::fundamental(6, 0)).len(), 27);
        // 51840 / |W(A2 × A1 × A2)| = 720
        assert_eq!(e6.weyl_orbit(&WeightVec::fundamental(6, 3)).len(), 720);
        assert_eq!(e6.weyl_group_order(), 51840);
        let e8 = RootSystem::new(CartanType::new(Family::E, 8).unwrap());
        assert_eq!(e8.weyl_group_order(), 696_729_600);
        for (f, n) in [(Family::B, 3), (Family::F, 4), (Family::G, 2), (Family::D, 5)] {
            let rs = RootSystem::new(CartanType::new(f, n).unwrap());
            assert_eq!(rs.weyl_group_order(), rs.weyl_orbit(&rs.rho()).len());
        }
        let w = WeightVec(vec![3, -1, 2, 0, 5, -7]);
        for i in 0..6 {
            assert_eq!(e6.reflect(i, &e6.reflect(i, &w)), w);
        }
    }

    #[test]
    fn multiplicities_e6_omega4() {
        let e6 = rs(Family::E, 6);
        let w4 = WeightVec::fundamental(6, 3);
        let ch = e6.dominant_character(&w4).unwrap();
        assert_eq!(ch.len(), 4);
        let m = |v: Vec<i64>| e6.freudenthal_multiplicity(&w4, &WeightVec(v)).unwrap();
        assert_eq!(m(vec![0, 0, 0, 1, 0, 0]), BigInt::from(1));
        assert_eq!(m(vec![1, 0, 0, 0, 0, 1]), BigInt::from(4));
        assert_eq!(m(vec![0, 1, 0, 0, 0, 0]), BigInt::from(15));
        assert_eq!(m(vec![0, 0, 0, 0, 0, 0]), BigInt::from(45));
        assert_eq!(e6.weyl_dimension(&w4).unwrap(), BigInt::from(2925));
        assert_eq!(e6.weyl_dimension(&WeightVec::fundamental(6, 0)).unwrap(), BigInt::from(27));
        assert_eq!(e6.weyl_dimension(&WeightVec::zero(6)).unwrap(), BigInt::from(1));
        assert!(e6.weyl_dimension(&WeightVec(vec![-1, 0, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn character_sums_to_dimension() {
        for (f, n, l) in [
            (Family::E, 6, vec![0, 0, 0, 1, 0, 0]),
            (Family::B, 3, vec![1, 0, 1]),
            (Family::C, 3, vec![0, 2, 1]),
            (Family::G, 2, vec![2, 1]),
            (Family::F, 4, vec![0, 0, 0, 1]),
            (Family::D, 4, vec![1, 0, 1, 1]),
        ] {
            let s = rs(f, n);
            let l = WeightVec(l);
            let ch = s.dominant_character(&l).unwrap();
            let total: BigInt = ch.iter().map(|(m, c)| c * BigInt::from(s.weyl_orbit(m).len())).sum();
            assert_eq!(total, s.weyl_dimension(&l).unwrap(), "{}", s.cartan_type);
        }
    }

    #[test]
    fn minuscule_nodes() {
        let a4 = rs(Family::A, 4);
        assert!((0..4).all(|r| a4.is_minuscule(r)));
        let e6 = rs(Family::E, 6);
        assert!(e6.is_minuscule(0));
        assert!(!e6.is_minuscule(3));
        let g2 = rs(Family::G, 2);
        assert!(!g2.is_minuscule(0) && !g2.is_minuscule(1));
        assert!(rs(Family::B, 3).is_minuscule(2));
        assert!(rs(Family::C, 3).is_minuscule(0));
    }

    #[test]
    fn coset_representatives() {
        let e6 = rs(Family::E, 6);
        assert_eq!(e6.minimal_coset_reps(&(0..6).collect::<Vec<_>>()).len(), 1);
        let reps = e6.minimal_coset_reps(&[1, 2, 3, 4, 5]);
        assert_eq!(reps.len(), 27);
        for w in &reps {
            assert_eq!(w.length(), w.inversion_count(&e6));
        }
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.minimal_coset_reps(&[1]).len(), 3);
    }

    #[test]
    fn coset_counts_times_parabolic_orders() {
        for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::G, 2), (Family::D, 4), (Family::E, 6)] {
            let s = rs(f, n);
            let order = s.weyl_group_order();
            for mask in 0u32..(1 << n) {
                let j: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                assert_eq!(s.minimal_coset_reps(&j).len() * s.parabolic_order(&j), order);
            }
        }
    }
}
