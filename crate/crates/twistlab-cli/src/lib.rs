//! Command implementations for the `twistlab` binary.
//!
//! Every command returns an [`Outcome`]: a JSON document and whether all of its
//! checks passed. Input problems come back as `Err` and map to exit code 2.
//! Nodes are 1-based everywhere in this crate's output.

pub mod output;
pub mod parse;

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use twistlab::crystal::Crystal;
use twistlab::e6::{self, E6Suite, LeviReport, LeviSweep};
use twistlab::exact_linalg::{smith_normal_form, Rational};
use twistlab::folding::{CoinvariantWeight, FoldedSystem};
use twistlab::root_system::{positive_root_count, CartanType, RootSystem, WeightVec};
use twistlab::twisted_cells::{
    cover_relation, dominants_below, is_cover, is_cover_brute, leq, smooth_cells, tail_rule_smooth, Variant, Verdict,
};
use twistlab::twisted_loop::{hyperspecial_basis, verify_hyperspecial, TwistedLoop};

use output::SCHEMA_VERSION;

pub type CliResult<T> = Result<T, String>;

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub value: Value,
    pub passed: bool,
}

impl Outcome {
    /// `passed` is the conjunction of the boolean entries of `checks`, which is
    /// stored in the document along with the verdict.
    fn from_checks(mut value: Map<String, Value>, checks: Map<String, Value>) -> Outcome {
        let passed = checks.values().all(|v| v.as_bool() != Some(false));
        value.insert("checks".into(), Value::Object(checks));
        value.insert("passed".into(), Value::Bool(passed));
        Outcome { value: Value::Object(value), passed }
    }
}

fn header(command: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    m
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn w(v: &WeightVec) -> Value {
    json!(v.0)
}

fn nodes(v: impl IntoIterator<Item = usize>) -> Value {
    json!(v.into_iter().map(|i| i + 1).collect::<Vec<_>>())
}

fn rationals(v: &[Rational]) -> Value {
    Value::Array(
        v.iter().map(|q| q.to_i64().filter(|_| q.is_integer()).map_or_else(|| json!(q.to_string()), |n| json!(n))).collect(),
    )
}

/// Invariant factors `> 1` of the cokernel of an integer matrix.
fn invariant_factors(m: &[Vec<i64>]) -> Vec<String> {
    smith_normal_form(m)
        .diagonal()
        .into_iter()
        .map(|d| if d < 0.into() { -d } else { d })
        .filter(|d| *d != 1.into())
        .map(|d| d.to_string())
        .collect()
}

// ---------------------------------------------------------------- rootsys

/// Largest rank `rootsys` accepts; beyond it `|W|` leaves `u64`.
pub const ROOTSYS_MAX_RANK: usize = 16;

pub fn rootsys(ty: CartanType) -> CliResult<Outcome> {
    if ty.rank > ROOTSYS_MAX_RANK {
        return Err(format!("rootsys supports rank at most {ROOTSYS_MAX_RANK}"));
    }
    let rs = RootSystem::new(ty);
    let n = rs.rank();
    let minuscule: Vec<usize> = (0..n).filter(|&r| rs.is_minuscule(r)).collect();
    let order = rs.weyl_group_order();
    let mut v = header("rootsys");
    v.insert("type".into(), json!(ty.to_string()));
    v.insert("rank".into(), json!(n));
    v.insert("cartan_matrix".into(), json!(rs.cartan));
    v.insert("positive_roots".into(), json!(rs.positive_roots.len()));
    v.insert("highest_root".into(), json!(rs.highest_root().0));
    v.insert("rho".into(), w(&rs.rho()));
    v.insert("weyl_group_order".into(), json!(order));
    v.insert("minuscule_nodes".into(), nodes(minuscule.iter().copied()));
    v.insert("fundamental_group".into(), json!(invariant_factors(&rs.cartan)));

    let mut checks = Map::new();
    checks.insert("positive_root_count".into(), json!(rs.positive_roots.len() == positive_root_count(ty)));
    let theta = rs.highest_root();
    let top = rs.positive_roots.iter().all(|b| theta.sub(b).is_nonnegative());
    checks.insert("highest_root_dominates".into(), json!(top));
    // |W^J| · |W_J| = |W| and |W^J| = |W·ω_r| at each minuscule node
    let mut cosets = Vec::new();
    let mut coset_ok = true;
    for &r in &minuscule {
        let j: Vec<usize> = (0..n).filter(|&k| k != r).collect();
        let reps = rs.minimal_coset_reps(&j).len();
        let orbit = rs.weyl_orbit(&WeightVec::fundamental(n, r)).len();
        let ok = reps * rs.parabolic_order(&j) == order && reps == orbit;
        coset_ok &= ok;
        cosets.push(json!({"node": r + 1, "coset_reps": reps, "orbit": orbit, "ok": ok}));
    }
    v.insert("minuscule_cosets".into(), Value::Array(cosets));
    checks.insert("minuscule_cosets".into(), json!(coset_ok));
    Ok(Outcome::from_checks(v, checks))
}

// ---------------------------------------------------------------- fold

pub fn folded_system(ty: CartanType, m: u32) -> CliResult<FoldedSystem> {
    FoldedSystem::standard(ty, m).map_err(err)
}

pub fn fold(fs: &FoldedSystem) -> CliResult<Outcome> {
    let d = &fs.datum;
    let n = fs.base_rank();
    let r = fs.folded_rank();
    let mut v = header("fold");
    v.insert("type".into(), json!(d.base.to_string()));
    v.insert("m".into(), json!(d.order));
    v.insert("fixed_type".into(), json!(d.fixed_type().to_string()));
    v.insert("h_type".into(), json!(d.h_type().to_string()));
    v.insert("tau".into(), nodes(d.tau.iter().copied()));
    v.insert("h".into(), json!(d.h));
    v.insert("eta".into(), nodes((0..n).map(|i| d.eta(i))));
    v.insert("folded_cartan".into(), json!(fs.folded.cartan));
    v.insert("gamma".into(), json!((0..fs.h.rank()).map(|j| fs.gamma(j).0 .0).collect::<Vec<_>>()));
    v.insert("lattice_basis".into(), json!(fs.lattice_basis().iter().map(|b| b.0.clone()).collect::<Vec<_>>()));
    v.insert("fundamental_group".into(), json!(invariant_factors(&fs.base.cartan)));
    let comp: Vec<String> = fs.component_group().iter().map(|x| x.to_string()).collect();
    v.insert("component_group".into(), json!(comp));
    let p1 = fs.level_one_set();
    let s = fs.s_set();
    v.insert("level_one_set".into(), json!(p1.iter().map(|x| x.0.clone()).collect::<Vec<_>>()));
    v.insert("s_set".into(), json!(s.iter().map(|x| x.0.clone()).collect::<Vec<_>>()));

    let mut checks = Map::new();
    checks.insert("folded_cartan".into(), json!(fs.folded_pairing() == fs.folded.cartan));
    let gamma_ok = (0..fs.h.rank()).all(|j| fs.gamma(j).0 == fs.h.simple_root_weight(j));
    checks.insert("gamma_simple_roots_of_h".into(), json!(gamma_ok));
    let mut iota_gamma = Vec::new();
    let mut iota_gamma_ok = true;
    for j in 0..r {
        let got = fs.iota_gamma(j);
        let half = d.odd_a_ell() == Some(j + 1);
        let scale = if half { Rational::new(1, 2) } else { Rational::one() };
        let expect: Vec<Rational> =
            fs.folded.simple_root_weight(j).0.iter().map(|&x| &Rational::from(x) * &scale).collect();
        iota_gamma_ok &= got == expect;
        iota_gamma.push(rationals(&got));
    }
    v.insert("iota_gamma".into(), Value::Array(iota_gamma));
    checks.insert("iota_gamma".into(), json!(iota_gamma_ok));
    let iota_fund = (0..n).all(|i| {
        let got = fs.iota(&WeightVec::fundamental(n, i));
        got.iter().enumerate().all(|(j, x)| *x == Rational::from(i64::from(j == d.eta(i))))
    });
    checks.insert("iota_fundamental".into(), json!(iota_fund));
    let iota_s: BTreeSet<WeightVec> = s
        .iter()
        .map(|x| WeightVec(fs.iota(x).iter().map(|q| q.to_i64().unwrap_or(i64::MIN)).collect()))
        .collect();
    checks.insert("iota_s_is_level_one".into(), json!(iota_s == p1.iter().cloned().collect()));
    if d.odd_a_ell().is_none() {
        let mut expect = vec![WeightVec::zero(r)];
        expect.extend((0..r).filter(|&j| fs.folded.is_minuscule(j)).map(|j| WeightVec::fundamental(r, j)));
        checks.insert("level_one_zero_or_minuscule".into(), json!(expect == p1));
    }
    Ok(Outcome::from_checks(v, checks))
}

// ---------------------------------------------------------------- coweight input

/// A coinvariant class from base coweight coordinates. Fractions are allowed;
/// the class is extended linearly and must land in `X_*(T)_σ`.
pub fn class_from_lambda(fs: &FoldedSystem, lambda: &[Rational]) -> CliResult<CoinvariantWeight> {
    fs.base.check_len(lambda.len()).map_err(err)?;
    let mut d: i64 = 1;
    for q in lambda {
        let qd = i64::try_from(q.denom()).map_err(|_| "denominator too large".to_string())?;
        d = (d / gcd(d, qd)).checked_mul(qd).ok_or_else(|| "denominator too large".to_string())?;
    }
    let scaled: Vec<i64> = lambda
        .iter()
        .map(|q| (q * &Rational::from(d)).to_i64().ok_or_else(|| "coordinate too large".to_string()))
        .collect::<CliResult<_>>()?;
    let p = fs.project(&WeightVec(scaled)).0;
    if p.0.iter().any(|x| x % d != 0) {
        return Err(format!("lambda {} does not define a coinvariant class", show(lambda)));
    }
    fs.coinvariant(WeightVec(p.0.iter().map(|x| x / d).collect())).map_err(err)
}

/// A coinvariant class from `ϖ`-coordinates of `H`.
pub fn class_from_coords(fs: &FoldedSystem, coords: &[Rational]) -> CliResult<CoinvariantWeight> {
    fs.h.check_len(coords.len()).map_err(err)?;
    let ints: Vec<i64> = coords
        .iter()
        .map(|q| {
            q.to_i64().filter(|_| q.is_integer()).ok_or_else(|| {
                format!("class coordinate {q} is not integral; classes have integral fundamental-weight coordinates")
            })
        })
        .collect::<CliResult<_>>()?;
    fs.coinvariant(WeightVec(ints)).map_err(|e| format!("class {}: {e}", show(coords)))
}

fn show(v: &[Rational]) -> String {
    v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",")
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Which way the user named the class.
#[derive(Clone, Debug)]
pub enum ClassInput {
    Lambda(Vec<Rational>),
    Class(Vec<Rational>),
}

pub fn resolve_class(fs: &FoldedSystem, input: &ClassInput) -> CliResult<(CoinvariantWeight, Option<WeightVec>)> {
    match input {
        ClassInput::Lambda(l) => {
            let c = class_from_lambda(fs, l)?;
            let rep = l
                .iter()
                .map(|q| q.to_i64().filter(|_| q.is_integer()))
                .collect::<Option<Vec<i64>>>()
                .map(WeightVec)
                .filter(WeightVec::is_dominant);
            Ok((c, rep))
        }
        ClassInput::Class(c) => Ok((class_from_coords(fs, c)?, None)),
    }
}

fn require_dominant(c: &CoinvariantWeight) -> CliResult<()> {
    if c.0.is_dominant() {
        Ok(())
    } else {
        Err(format!("class {:?} is not dominant", c.0 .0))
    }
}

fn input_json(v: &mut Map<String, Value>, fs: &FoldedSystem, class: &CoinvariantWeight, rep: &Option<WeightVec>) {
    v.insert("type".into(), json!(fs.datum.base.to_string()));
    v.insert("m".into(), json!(fs.datum.order));
    v.insert("h_type".into(), json!(fs.datum.h_type().to_string()));
    v.insert("lambda".into(), w(&class.0));
    v.insert("representative".into(), rep.as_ref().map_or(Value::Null, w));
    let dim = rep.as_ref().and_then(|r| fs.schubert_dimension(r).ok());
    v.insert("dimension".into(), json!(dim));
}

// ---------------------------------------------------------------- dominance

pub fn dominance(fs: &FoldedSystem, input: &ClassInput) -> CliResult<Outcome> {
    let (class, rep) = resolve_class(fs, input)?;
    require_dominant(&class)?;
    let lambda = &class.0;
    let (below, covers) = cover_relation(fs, lambda).map_err(err)?;
    let mut v = header("dominance");
    input_json(&mut v, fs, &class, &rep);
    v.insert("classes".into(), json!(below.iter().map(|x| x.0.clone()).collect::<Vec<_>>()));
    let cover_set: BTreeSet<(usize, usize)> = covers.iter().copied().collect();
    v.insert(
        "covers".into(),
        Value::Array(covers.iter().map(|&(a, b)| json!({"lower": below[a].0, "upper": below[b].0})).collect()),
    );

    let mut checks = Map::new();
    let mut mismatch = Value::Null;
    'pairs: for (a, x) in below.iter().enumerate() {
        for (b, y) in below.iter().enumerate() {
            if a == b || !leq(fs, x, y) {
                continue;
            }
            let rule = is_cover(fs, x, y).map_err(err)?;
            let brute = is_cover_brute(fs, x, y).map_err(err)?;
            let listed = cover_set.contains(&(a, b));
            if rule != brute || listed != brute {
                mismatch = json!({"lower": x.0, "upper": y.0, "rule": rule, "brute_force": brute, "listed": listed});
                break 'pairs;
            }
        }
    }
    checks.insert("cover_rule_matches_brute_force".into(), json!(mismatch.is_null()));
    let closure_ok = closure_matches(fs, &below, &cover_set);
    checks.insert("cover_closure_is_dominance".into(), json!(closure_ok));
    v.insert("first_mismatch".into(), mismatch);
    Ok(Outcome::from_checks(v, checks))
}

fn closure_matches(fs: &FoldedSystem, below: &[WeightVec], covers: &BTreeSet<(usize, usize)>) -> bool {
    let n = below.len();
    let mut reach = vec![vec![false; n]; n];
    for (a, row) in reach.iter_mut().enumerate() {
        row[a] = true;
    }
    for &(a, b) in covers {
        reach[a][b] = true;
    }
    for k in 0..n {
        for a in 0..n {
            if reach[a][k] {
                for b in 0..n {
                    if reach[k][b] {
                        reach[a][b] = true;
                    }
                }
            }
        }
    }
    (0..n).all(|a| (0..n).all(|b| reach[a][b] == leq(fs, &below[a], &below[b])))
}

// ---------------------------------------------------------------- smooth-locus

pub fn smooth_locus(fs: &FoldedSystem, input: &ClassInput, variant: Variant) -> CliResult<Outcome> {
    let (class, rep) = resolve_class(fs, input)?;
    require_dominant(&class)?;
    let report = smooth_cells(fs, variant, &class.0).map_err(err)?;
    let mut v = header("smooth-locus");
    input_json(&mut v, fs, &class, &rep);
    v.insert("variant".into(), json!(report.variant.map(Variant::name)));
    v.insert(
        "cells".into(),
        Value::Array(
            report
                .cells
                .iter()
                .map(|c| json!({"mu": c.mu.0, "verdict": c.verdict.name(), "reason": c.reason.code()}))
                .collect(),
        ),
    );
    v.insert("smooth".into(), json!(report.smooth().map(|c| c.mu.0.clone()).collect::<Vec<_>>()));

    let mut checks = Map::new();
    let mut below = dominants_below(fs, &class.0).map_err(err)?;
    below.sort();
    let mut listed: Vec<WeightVec> = report.cells.iter().map(|c| c.mu.clone()).collect();
    listed.sort();
    checks.insert("cells_are_dominants_below".into(), json!(below == listed));
    let odd_a = fs.datum.odd_a_ell().is_some();
    if odd_a && variant == Variant::Special {
        let agree = report.cells.iter().all(|c| (c.verdict == Verdict::Smooth) == tail_rule_smooth(fs, &c.mu, &class.0));
        checks.insert("step_rule_matches_closed_form".into(), json!(agree));
        let covers = report
            .smooth()
            .filter(|c| c.mu != class.0)
            .all(|c| is_cover_brute(fs, &c.mu, &class.0).unwrap_or(false));
        checks.insert("smooth_proper_cells_are_covers".into(), json!(covers));
    } else {
        checks.insert("only_open_cell_smooth".into(), json!(report.smooth().count() == 1));
    }
    Ok(Outcome::from_checks(v, checks))
}

// ---------------------------------------------------------------- E6

/// Runs the Levi sweep split over the depth-2 suffix partitions; results are
/// merged in partition order, so the report does not depend on the pool size.
pub fn parallel_levi_sweep(sweep: &LeviSweep<'_>) -> LeviReport {
    let parts = sweep.partitions(2);
    let reports: Vec<LeviReport> = parts.par_iter().map(|p| sweep.sweep_suffix(p)).collect();
    let mut out = LeviReport::default();
    for r in &reports {
        out.merge(r);
    }
    out
}

fn levi_json(r: &LeviReport) -> Value {
    json!({
        "total_words": r.total_words,
        "zero_words": r.zero_words,
        "nonzero_words": r.nonzero_words,
        "literal_split_words": r.literal_split_words,
        "levi_extremal_words": r.levi_extremal_words,
        "counterexample": r.counterexample.as_ref().map(|c| c.iter().map(|i| i + 1).collect::<Vec<_>>()),
    })
}

pub fn build_suite(progress: &mut dyn FnMut(&str)) -> CliResult<E6Suite> {
    E6Suite::build_with(progress).map_err(err)
}

pub fn levi_extremal(suite: &E6Suite) -> CliResult<Outcome> {
    let sweep = suite.levi_sweep();
    let r = parallel_levi_sweep(&sweep);
    let mut v = header("levi-extremal");
    v.insert("report".into(), levi_json(&r));
    let mut checks = Map::new();
    checks.insert("word_count".into(), json!(r.total_words == sweep.word_count()));
    checks.insert("all_levi_extremal".into(), json!(r.all_levi_extremal()));
    Ok(Outcome::from_checks(v, checks))
}

pub fn numbers_game() -> CliResult<Outcome> {
    let p = e6::numbers_game_poset();
    let mut v = header("numbers-game");
    v.insert("nodes".into(), json!(p.nodes.len()));
    v.insert("stars".into(), json!(p.star_count()));
    v.insert("edge_count".into(), json!(p.edges.len()));
    v.insert(
        "poset".into(),
        Value::Array(
            p.nodes
                .iter()
                .enumerate()
                .map(|(k, n)| json!({"weight": n.weight.0, "star": n.star, "out": nodes(p.out_labels(k))}))
                .collect(),
        ),
    );
    v.insert(
        "edges".into(),
        Value::Array(p.edges.iter().map(|&(a, b, i)| json!({"from": a, "to": b, "node": i + 1})).collect()),
    );
    let mut checks = Map::new();
    checks.insert("matches_reference".into(), json!(e6::numbers_game_matches_reference(&p)));
    Ok(Outcome::from_checks(v, checks))
}

/// Dimension, character, weight-zero and sweep checks around `V(ω₄)`.
pub fn e6_duality(suite: &E6Suite, progress: &mut dyn FnMut(&str)) -> CliResult<Outcome> {
    let rs = &suite.rs;
    let top = e6::omega(3);
    let mut v = header("e6-duality");
    let mut checks = Map::new();

    progress("dimensions");
    let weyl = rs.weyl_dimension(&top).map_err(err)?;
    let crystal = suite.crystal.crystal.len();
    v.insert(
        "dimension".into(),
        json!({"weyl": weyl.to_string(), "crystal": crystal, "subrepresentation": suite.sub.rank}),
    );
    checks.insert("dimensions_agree".into(), json!(weyl == crystal.into() && crystal == suite.sub.rank));

    progress("dominant character");
    let freud = rs.dominant_character(&top).map_err(err)?;
    let fibers = suite.crystal.weight_multiplicities();
    let mut character = Vec::new();
    let mut char_ok = true;
    for (mu, m) in &freud {
        let c = fibers.get(mu).copied().unwrap_or(0);
        char_ok &= *m == c.into();
        character.push(json!({"weight": mu.0, "freudenthal": m.to_string(), "crystal": c}));
    }
    v.insert("dominant_character".into(), Value::Array(character));
    checks.insert("character_agrees".into(), json!(char_ok));

    progress("highest-weight vector and relations");
    let hw = suite.rep().highest_weight_check(&suite.hw()).map_err(err)?;
    checks.insert("highest_weight".into(), json!(hw));
    let relations = suite.rep().verify_representation();
    v.insert("relation_failure".into(), relations.as_ref().err().map_or(Value::Null, |f| json!(f.to_string())));
    checks.insert("relations".into(), json!(relations.is_ok()));

    progress("weight-zero orbit");
    let vzero_nonzero = suite.vzero().is_ok();
    let span = if vzero_nonzero { Some(suite.weight_zero_span().map_err(err)?) } else { None };

    progress("Levi sweep");
    let levi = parallel_levi_sweep(&suite.levi_sweep());
    v.insert("levi".into(), levi_json(&levi));

    let chain = e6::dominance_chain_check();
    let poset = e6::numbers_game_matches_reference(&e6::numbers_game_poset());
    let orbit_size = span.as_ref().map(|s| s.orbit_size);
    let rank = span.as_ref().map(|s| s.rank);
    v.insert(
        "scorecard".into(),
        json!({
            "vzero_nonzero": vzero_nonzero,
            "orbit_size": orbit_size,
            "rank": rank,
            "levi_extremal_ok": levi.all_levi_extremal(),
            "chain_ok": chain.ok,
            "poset_ok": poset,
        }),
    );
    checks.insert("vzero_nonzero".into(), json!(vzero_nonzero));
    checks.insert("weight_zero_orbit".into(), json!(span.as_ref().is_some_and(|s| s.all_weight_zero)));
    checks.insert("weight_zero_span".into(), json!(span.as_ref().is_some_and(|s| s.rank == s.fiber_dim)));
    checks.insert("levi_extremal".into(), json!(levi.all_levi_extremal()));
    checks.insert("dominance_chain".into(), json!(chain.ok));
    checks.insert("numbers_game".into(), json!(poset));
    Ok(Outcome::from_checks(v, checks))
}

// ---------------------------------------------------------------- hyperspecial

/// Outcome of the random bracket-compatibility trials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTrials {
    pub trials: usize,
    pub failures: usize,
    pub first_failure: Option<(String, String)>,
}

/// `η([x, y]) = [η(x), η(y)]` on `trials` random pairs of basis elements.
pub fn bracket_trials(ell: usize, degree: i64, trials: usize, seed: u64) -> CliResult<BracketTrials> {
    let lp = TwistedLoop::new(ell).map_err(err)?;
    let basis = hyperspecial_basis(ell, degree);
    if basis.is_empty() {
        return Err("empty basis".into());
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let pairs: Vec<(usize, usize)> =
        (0..trials).map(|_| (rng.gen_range(0..basis.len()), rng.gen_range(0..basis.len()))).collect();
    let results: Vec<CliResult<bool>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let (x, y) = (&basis[a].element, &basis[b].element);
            let lhs = lp.eta(&lp.bracket(x, y)).map_err(err)?;
            let rhs = lp.bracket(&lp.eta(x).map_err(err)?, &lp.eta(y).map_err(err)?);
            Ok(lhs == rhs)
        })
        .collect();
    let mut out = BracketTrials { trials, failures: 0, first_failure: None };
    for (ok, &(a, b)) in results.into_iter().zip(&pairs) {
        if !ok? {
            out.failures += 1;
            out.first_failure.get_or_insert_with(|| (basis[a].label(), basis[b].label()));
        }
    }
    Ok(out)
}

pub fn hyperspecial_check(ell: usize, degree: i64, trials: usize, seed: u64) -> CliResult<Outcome> {
    if ell == 0 {
        return Err("--ell must be at least 1".into());
    }
    if degree < 4 {
        return Err("--degree must be at least 4".into());
    }
    let report = verify_hyperspecial(ell, degree).map_err(err)?;
    let brackets = bracket_trials(ell, degree, trials, seed)?;
    let mut v = header("hyperspecial-check");
    v.insert("ell".into(), json!(ell));
    v.insert("degree".into(), json!(degree));
    v.insert("epsilon".into(), json!(TwistedLoop::new(ell).map_err(err)?.epsilon.to_string()));
    v.insert(
        "families".into(),
        Value::Array(
            report
                .families
                .iter()
                .map(|f| {
                    json!({
                        "family": f.family,
                        "elements": f.elements,
                        "tau_fixed": f.tau_fixed,
                        "sigma_fixed": f.sigma_fixed,
                        "nonnegative": f.nonnegative,
                        "matches": f.matches_corrected,
                        "matches_as_printed": f.matches_printed,
                        "passed": f.passed(),
                        "first_failure": f.first_failure,
                        "first_printed_mismatch": f.first_printed_mismatch,
                    })
                })
                .collect(),
        ),
    );
    v.insert(
        "degrees".into(),
        Value::Array(
            report
                .degrees
                .iter()
                .map(|d| {
                    json!({"degree": d.degree, "fixed_dimension": d.fixed_dimension, "images": d.images, "image_rank": d.image_rank})
                })
                .collect(),
        ),
    );
    v.insert(
        "brackets".into(),
        json!({
            "trials": brackets.trials,
            "seed": seed,
            "failures": brackets.failures,
            "first_failure": brackets.first_failure.as_ref().map(|(a, b)| vec![a.clone(), b.clone()]),
        }),
    );
    let mut checks = Map::new();
    for f in &report.families {
        checks.insert(format!("family_{}", f.family), json!(f.passed()));
    }
    let dims = report.degrees.iter().all(|d| d.images == d.fixed_dimension && d.image_rank == d.fixed_dimension);
    checks.insert("degree_dimensions".into(), json!(dims));
    checks.insert("brackets".into(), json!(brackets.failures == 0));
    Ok(Outcome::from_checks(v, checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use twistlab::root_system::Family;

    #[test]
    fn verdict_is_conjunction_of_checks() {
        let mut c = Map::new();
        c.insert("a".into(), json!(true));
        assert!(Outcome::from_checks(header("x"), c.clone()).passed);
        c.insert("b".into(), json!(false));
        let o = Outcome::from_checks(header("x"), c);
        assert!(!o.passed);
        assert_eq!(o.value["passed"], false);
    }

    #[test]
    fn lambda_input() {
        let fs = folded_system(CartanType::new(Family::A, 4).unwrap(), 4).unwrap();
        let q = |v: &[i64]| v.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>();
        let half = vec![Rational::zero(), Rational::new(1, 2), Rational::new(1, 2), Rational::zero()];
        assert_eq!(class_from_lambda(&fs, &half).unwrap(), fs.project(&WeightVec(vec![0, 1, 0, 0])));
        assert!(class_from_lambda(&fs, &[Rational::new(1, 2), Rational::zero(), Rational::zero(), Rational::zero()]).is_err());
        assert!(class_from_lambda(&fs, &q(&[1, 0])).is_err());
        assert!(class_from_coords(&fs, &q(&[0, 1])).is_err());
        assert!(class_from_coords(&fs, &q(&[0, 2])).is_ok());
    }
}
