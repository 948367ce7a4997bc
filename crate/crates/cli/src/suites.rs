//! Verification suites behind `lk verify`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::time::Instant;

use anyhow::Result;
use clap::ValueEnum;
use lk_core::charney::{charney_length_matrix, CharneyOracle};
use lk_core::cone::{matrix_cone_violations, probe_with, Specialized};
use lk_core::garside::{b_embed, head_by_rewriting, head_l, star_act, star_act_word, word_count, word_equiv_oracle};
use lk_core::rep::{
    determinant_sigma, expected_determinant, expected_longest_permutation, longest_exponent, rank_one_violations,
};
use lk_core::rootset::{enumerate_closed_sets, DEFAULT_CLOSED_SET_BOUND};
use lk_core::ttable::{solve_t_with, structure_violations, table_violations};
use lk_core::umatrix::{is_unitriangular, u_identity_violations};
use lk_core::{
    build_u_matrix, max_inversion_subset, solve_t_closed_form, verify_braid_relations, ClosedSet, Error, Letter,
    LaurentPoly, LkRep, PolyMatrix, PositiveWord, Rational, RootSystem, SignedWord, TieBreak,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Braid,
    Ttable,
    Det,
    Rank1,
    W0,
    Umatrix,
    Equivariance,
    Cone,
    Faithful,
    Charney,
}

impl Suite {
    pub fn all() -> Vec<Suite> {
        Suite::value_variants().to_vec()
    }

    /// Every suite that fits the budgets; the charney suite needs to
    /// enumerate `W`.
    pub fn defaults(rs: &RootSystem, budget: Option<u128>) -> (Vec<Suite>, Option<String>) {
        let limit = budget.unwrap_or(DEFAULT_CHARNEY_WEYL);
        let order = rs.spec().weyl_order();
        if order <= limit {
            return (Suite::all(), None);
        }
        let note = format!("charney suite not run: |W| = {order} exceeds budget {limit} (set LK_BUDGET)");
        (Suite::all().into_iter().filter(|&s| s != Suite::Charney).collect(), Some(note))
    }

    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

pub struct SuiteConfig {
    pub seed: u64,
    pub r0: Rational,
    /// Overrides the word and Weyl-group enumeration budgets.
    pub budget: Option<u128>,
}

const DEFAULT_FAITHFUL_WORDS: u128 = 400;
const DEFAULT_CHARNEY_WEYL: u128 = 24;
const RANDOM_WORDS: usize = 200;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub witness: Value,
}

impl Check {
    fn new(name: &str, pass: bool) -> Self {
        Check { name: name.to_string(), pass, detail: None, witness: Value::Null }
    }

    fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    fn witness(mut self, w: Value) -> Self {
        self.witness = w;
        self
    }

    fn failed(name: &str, why: impl ToString) -> Self {
        Check::new(name, false).detail(why.to_string())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportData {
    #[serde(rename = "type")]
    pub type_name: String,
    pub seed: u64,
    pub r0: String,
    pub checks: Vec<Check>,
}

pub struct Report {
    pub data: ReportData,
    /// Wall time per suite in milliseconds, kept out of the data file.
    pub timing: BTreeMap<String, u128>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.data.checks.iter().all(|c| c.pass)
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        for c in &self.data.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            let _ = write!(out, "{:<24} {status}", c.name);
            if let Some(d) = &c.detail {
                let _ = write!(out, "  {d}");
            }
            out.push('\n');
        }
        let failed = self.data.checks.iter().filter(|c| !c.pass).count();
        let _ = writeln!(out, "{} checks, {failed} failed", self.data.checks.len());
        out
    }
}

pub fn run(rs: &RootSystem, suites: &[Suite], cfg: &SuiteConfig) -> Result<Report> {
    let rep = LkRep::new(rs)?;
    let mut checks = Vec::new();
    let mut timing = BTreeMap::new();
    for &suite in suites {
        let start = Instant::now();
        checks.extend(run_suite(rs, &rep, suite, cfg));
        timing.insert(suite.name(), start.elapsed().as_millis());
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    checks.dedup_by(|a, b| a.name == b.name);
    let data = ReportData { type_name: rs.spec().to_string(), seed: cfg.seed, r0: cfg.r0.to_string(), checks };
    Ok(Report { data, timing })
}

fn run_suite(rs: &RootSystem, rep: &LkRep, suite: Suite, cfg: &SuiteConfig) -> Vec<Check> {
    match suite {
        Suite::Braid => vec![braid(rs, rep)],
        Suite::Ttable => ttable(rs, rep),
        Suite::Det => vec![det(rs, rep)],
        Suite::Rank1 => vec![rank1(rs, rep)],
        Suite::W0 => vec![w0(rs, rep)],
        Suite::Umatrix => vec![umatrix(rs, rep)],
        Suite::Equivariance => vec![equivariance(rs, cfg)],
        Suite::Cone => vec![cone(rs, rep, cfg)],
        Suite::Faithful => faithful(rs, rep, cfg),
        Suite::Charney => vec![charney(rs, rep, cfg)],
    }
}

fn braid(rs: &RootSystem, rep: &LkRep) -> Check {
    let failures = verify_braid_relations(rs, rep.table());
    let pairs = rs.rank() * rs.rank().saturating_sub(1) / 2;
    let witness: Vec<Value> = failures
        .iter()
        .map(|f| json!({"family": f.family, "i": f.i + 1, "j": f.j + 1, "column": f.column}))
        .collect();
    Check::new("braid", failures.is_empty())
        .detail(format!("{pairs} generator pairs, sigma and tau"))
        .witness(if witness.is_empty() { Value::Null } else { Value::Array(witness) })
}

fn ttable(rs: &RootSystem, rep: &LkRep) -> Vec<Check> {
    let mut out = Vec::new();
    let table = rep.table();
    out.push(match solve_t_with(rs, TieBreak::Largest) {
        Ok(t) => Check::new("ttable.tie_break", &t == table),
        Err(e) => Check::failed("ttable.tie_break", e),
    });
    out.push(match solve_t_closed_form(rs) {
        Ok((t, _)) => Check::new("ttable.closed_form", &t == table),
        Err(e) => Check::failed("ttable.closed_form", e),
    });
    let tv = table_violations(rs, table);
    out.push(
        Check::new("ttable.equations", tv.is_empty())
            .witness(tv.first().map_or(Value::Null, |v| serde_json::to_value(v).unwrap_or_default())),
    );
    let sv = structure_violations(rs, table);
    out.push(
        Check::new("ttable.structure", sv.is_empty())
            .witness(sv.first().map_or(Value::Null, |v| serde_json::to_value(v).unwrap_or_default())),
    );
    out
}

fn det(rs: &RootSystem, rep: &LkRep) -> Check {
    let bad: Vec<Value> = (0..rs.rank())
        .filter_map(|k| {
            let got = determinant_sigma(rs, rep.table(), k);
            let want = expected_determinant(rs, k);
            (got != want).then(|| json!({"k": k + 1, "got": got.to_string(), "want": want.to_string()}))
        })
        .collect();
    Check::new("det", bad.is_empty()).witness(if bad.is_empty() { Value::Null } else { Value::Array(bad) })
}

fn rank1(rs: &RootSystem, rep: &LkRep) -> Check {
    let bad: Vec<Value> = (0..rs.rank())
        .filter_map(|k| {
            let cols = rank_one_violations(rs, rep.table(), k);
            (!cols.is_empty()).then(|| json!({"k": k + 1, "columns": cols}))
        })
        .collect();
    Check::new("rank1", bad.is_empty()).witness(if bad.is_empty() { Value::Null } else { Value::Array(bad) })
}

fn w0(rs: &RootSystem, rep: &LkRep) -> Check {
    match rep.rho_longest() {
        Ok((scalar, perm)) => {
            let want = LaurentPoly::term(1, longest_exponent(rs.spec()), 1);
            let pass = scalar == want && perm == expected_longest_permutation(rs);
            Check::new("w0", pass).detail(format!("scalar {scalar}"))
        }
        Err(e) => Check::failed("w0", e),
    }
}

fn umatrix(rs: &RootSystem, rep: &LkRep) -> Check {
    match build_u_matrix(rs, rep.table()) {
        Ok(u) => {
            let sigmas: Vec<PolyMatrix> = (0..rs.rank()).map(|k| rep.sigma(k).clone()).collect();
            let bad: Vec<usize> = u_identity_violations(&u, &sigmas).into_iter().map(|k| k + 1).collect();
            let tri = is_unitriangular(rs, &u);
            Check::new("umatrix", bad.is_empty() && tri)
                .witness(if bad.is_empty() { Value::Null } else { json!({"k": bad}) })
        }
        Err(e) => Check::failed("umatrix", e),
    }
}

fn random_positive(rng: &mut ChaCha8Rng, rank: usize, maxlen: usize) -> PositiveWord {
    let len = rng.gen_range(0..=maxlen);
    PositiveWord::new((0..len).map(|_| rng.gen_range(0..rank)).collect())
}

fn random_signed(rng: &mut ChaCha8Rng, rank: usize, maxlen: usize) -> SignedWord {
    let len = rng.gen_range(0..=maxlen);
    SignedWord((0..len).map(|_| Letter { gen: rng.gen_range(0..rank), inverse: rng.gen_bool(0.5) }).collect())
}

/// `g(s_i * A) = L(s_i b(g(A)))`, over every closed set when there are few
/// enough, otherwise over sets `x * ∅` for random words `x`.
fn equivariance(rs: &RootSystem, cfg: &SuiteConfig) -> Check {
    let (sets, how): (Vec<ClosedSet>, String) = match enumerate_closed_sets(rs, DEFAULT_CLOSED_SET_BOUND) {
        Ok(it) => {
            let v: Vec<_> = it.collect();
            let how = format!("exhaustive over {} closed sets", v.len());
            (v, how)
        }
        Err(_) => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let v = (0..RANDOM_WORDS)
                .map(|_| star_act_word(rs, &random_positive(&mut rng, rs.rank(), 12), ClosedSet::empty()))
                .collect();
            (v, format!("{RANDOM_WORDS} sampled closed sets"))
        }
    };
    let exhaustive = how.starts_with("exhaustive");
    for a in sets {
        let g = max_inversion_subset(rs, &a);
        for i in 0..rs.rank() {
            let lhs = max_inversion_subset(rs, &star_act(rs, i, a));
            let word = PositiveWord::new(vec![i]).concat(&b_embed(rs, &g));
            let ok = lhs == head_l(rs, &word) && (!exhaustive || lhs == head_by_rewriting(rs, &word));
            if !ok {
                let roots: Vec<&[i32]> = a.set().iter().map(|b| rs.root(b).coords()).collect();
                return Check::new("equivariance", false).detail(how).witness(json!({"A": roots, "i": i + 1}));
            }
        }
    }
    Check::new("equivariance", true).detail(how)
}

fn cone(rs: &RootSystem, rep: &LkRep, cfg: &SuiteConfig) -> Check {
    let spec = match Specialized::new(rep, &cfg.r0) {
        Ok(s) => s,
        Err(e) => return Check::failed("cone", e),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..RANDOM_WORDS {
        let x = random_positive(&mut rng, rs.rank(), 12);
        if let Some(v) = matrix_cone_violations(&spec.rho(&x)).first() {
            return Check::new("cone", false).witness(json!({"word": x.to_string(), "row": v.row, "col": v.col}));
        }
    }
    Check::new("cone", true).detail(format!("{RANDOM_WORDS} random words of length <= 12"))
}

fn faithful(rs: &RootSystem, rep: &LkRep, cfg: &SuiteConfig) -> Vec<Check> {
    let budget = cfg.budget.unwrap_or(DEFAULT_FAITHFUL_WORDS);
    let len = (0..=8).take_while(|&l| word_count(rs.rank(), l) <= budget).last().unwrap_or(0);
    let part = match word_equiv_oracle(rs, len, budget) {
        Ok(p) => p,
        Err(e) => return vec![Check::failed("faithful.classes", e)],
    };
    let mut classes = Check::new("faithful.classes", true)
        .detail(format!("{} words of length <= {len}, {} classes", part.words().len(), part.classes().len()));
    let mut owner: HashMap<PolyMatrix, usize> = HashMap::new();
    'outer: for (c, members) in part.classes().iter().enumerate() {
        let m = rep.rho_positive(&part.words()[members[0]]);
        for &w in &members[1..] {
            if rep.rho_positive(&part.words()[w]) != m {
                classes = classes.clone().witness(json!({"not_constant": part.words()[w].to_string()}));
                classes.pass = false;
                break 'outer;
            }
        }
        if let Some(prev) = owner.insert(m, c) {
            let a = part.words()[part.classes()[prev][0]].to_string();
            let b = part.words()[members[0]].to_string();
            classes = classes.clone().witness(json!({"collision": [a, b]}));
            classes.pass = false;
            break;
        }
    }
    let probe = match Specialized::new(rep, &cfg.r0) {
        Ok(spec) => {
            let bad = part.words().iter().find(|x| match probe_with(rs, &spec, x) {
                Ok(w) => w != head_l(rs, x),
                Err(_) => true,
            });
            Check::new("faithful.probe", bad.is_none())
                .witness(bad.map_or(Value::Null, |x| json!({"word": x.to_string()})))
        }
        Err(e) => Check::failed("faithful.probe", e),
    };
    vec![classes, probe]
}

fn all_signed(rank: usize, len: usize) -> Vec<SignedWord> {
    let letters: Vec<Letter> = (0..rank).flat_map(|g| [Letter::pos(g), Letter::neg(g)]).collect();
    let mut out = vec![SignedWord::empty()];
    let mut layer = vec![SignedWord::empty()];
    for _ in 0..len {
        layer = layer.iter().flat_map(|w| letters.iter().map(move |&l| w.concat(&SignedWord(vec![l])))).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Matrix formula against the search oracle. When the search finds nothing
/// up to its horizon, the formula must exceed that horizon.
fn charney(rs: &RootSystem, rep: &LkRep, cfg: &SuiteConfig) -> Check {
    let budget = cfg.budget.unwrap_or(DEFAULT_CHARNEY_WEYL);
    let radius = if rs.spec().weyl_order() <= 24 { 2 } else { 1 };
    let oracle = match CharneyOracle::new(rep, radius, budget) {
        Ok(o) => o,
        Err(e @ Error::TooLarge { .. }) => return Check::failed("charney", format!("{e}; raise LK_BUDGET")),
        Err(e) => return Check::failed("charney", e),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut words = all_signed(rs.rank(), 2);
    words.extend((0..20).map(|_| random_signed(&mut rng, rs.rank(), 4)));
    let horizon = oracle.max_length();
    for x in &words {
        let formula = charney_length_matrix(rep, x);
        let ok = match oracle.length_of(&rep.rho_word(x)) {
            Some(l) => l as i32 == formula,
            None => formula > horizon as i32,
        };
        if !ok {
            return Check::new("charney", false).witness(json!({"word": x.to_string(), "formula": formula}));
        }
    }
    Check::new("charney", true).detail(format!("{} words, search horizon {horizon}", words.len()))
}
