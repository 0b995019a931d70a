//! Deduction system for instanton L-space surgeries on a fixed knot `K`.
//!
//! Facts are statements about `S³_r(K)` together with the rule and premises
//! that produced them. Closure applies the rules in a fixed order until
//! nothing new appears; facts about ranges of slopes are stored as ranges and
//! membership is decided on demand.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::rank::rank_decompose;
use super::slope::Slope;
use crate::algebra::{rat, LaurentPoly, Rational};
use crate::error::{Error, Result};
use crate::format::{poly_from_triples, Triple};
use crate::knots::conway::{genus1_alexander, is_trivial_alexander};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Statement {
    Nontrivial,
    Genus(u32),
    Alexander(LaurentPoly),
    LSpace(Slope),
    NotLSpace(Slope),
    /// L-space at every slope `s ≥ n`.
    LSpaceFrom(Slope),
    /// L-space at every slope in the closed interval `[lo, hi]`.
    LSpaceInterval { lo: Slope, hi: Slope },
    /// Not an L-space at any slope in the open interval `(lo, hi)`.
    NotLSpaceInterval { lo: Slope, hi: Slope },
    /// Not an L-space at any integer `lo ≤ n ≤ hi`.
    NotLSpaceIntegers { lo: i64, hi: i64 },
    RankExact(Slope, u64),
    RankLowerBound(Slope, u64),
    /// `g(K) = 1` and `Δ_K ∈ {t - 1 + t⁻¹, -t + 3 - t⁻¹}`.
    GenusOneDichotomy,
}

impl Statement {
    /// `Some(true)` if the statement asserts that `S³_r(K)` is an L-space,
    /// `Some(false)` if it asserts the opposite.
    pub fn lspace_at(&self, r: &Slope) -> Option<bool> {
        match self {
            Self::LSpace(s) if s == r => Some(true),
            Self::NotLSpace(s) if s == r => Some(false),
            Self::LSpaceFrom(n) if r >= n => Some(true),
            Self::LSpaceInterval { lo, hi } if lo <= r && r <= hi => Some(true),
            Self::NotLSpaceInterval { lo, hi } if lo < r && r < hi => Some(false),
            Self::NotLSpaceIntegers { lo, hi } if r.is_integer() && *lo <= r.p() && r.p() <= *hi => Some(false),
            _ => None,
        }
    }

    fn is_positive_lspace(&self) -> bool {
        matches!(self, Self::LSpace(_) | Self::LSpaceFrom(_) | Self::LSpaceInterval { .. })
    }

    fn is_negative_lspace(&self) -> bool {
        matches!(self, Self::NotLSpace(_) | Self::NotLSpaceInterval { .. } | Self::NotLSpaceIntegers { .. })
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Nontrivial => write!(f, "K is not the unknot"),
            Self::Genus(g) => write!(f, "g(K) = {g}"),
            Self::Alexander(p) => write!(f, "Δ_K(t) = {p}"),
            Self::LSpace(r) => write!(f, "S^3_{r}(K) is an instanton L-space"),
            Self::NotLSpace(r) => write!(f, "S^3_{r}(K) is not an instanton L-space"),
            Self::LSpaceFrom(n) => write!(f, "S^3_s(K) is an instanton L-space for every s >= {n}"),
            Self::LSpaceInterval { lo, hi } => write!(f, "S^3_s(K) is an instanton L-space for every s in [{lo}, {hi}]"),
            Self::NotLSpaceInterval { lo, hi } => {
                write!(f, "S^3_s(K) is not an instanton L-space for any s in ({lo}, {hi})")
            }
            Self::NotLSpaceIntegers { lo, hi } => {
                write!(f, "S^3_n(K) is not an instanton L-space for any integer {lo} <= n <= {hi}")
            }
            Self::RankExact(r, v) => write!(f, "rank I#(S^3_{r}(K)) = {v}"),
            Self::RankLowerBound(r, v) => write!(f, "rank I#(S^3_{r}(K)) >= {v}"),
            Self::GenusOneDichotomy => write!(f, "g(K) = 1 and Δ_K is t - 1 + t^-1 or -t + 3 - t^-1"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    Given,
    Hypothesis,
    Attribute,
    R1,
    R1Contrapositive,
    R2,
    R2Contrapositive,
    R3,
    R4,
    R5,
    R6,
    R7,
    RankEuler,
    RankParity,
    Triangle,
    /// `S³ = S³_∞(K)` is an instanton L-space.
    S3Axiom,
}

impl Rule {
    pub fn code(&self) -> &'static str {
        match self {
            Self::Given => "given",
            Self::Hypothesis => "hypothesis",
            Self::Attribute => "attribute",
            Self::R1 => "R1",
            Self::R1Contrapositive => "R1-contrapositive",
            Self::R2 => "R2",
            Self::R2Contrapositive => "R2-contrapositive",
            Self::R3 => "R3",
            Self::R4 => "R4",
            Self::R5 => "R5",
            Self::R6 => "R6",
            Self::R7 => "R7",
            Self::RankEuler => "rank-euler",
            Self::RankParity => "rank-parity",
            Self::Triangle => "exact-triangle",
            Self::S3Axiom => "S3-axiom",
        }
    }

    pub fn citation(&self) -> &'static str {
        match self {
            Self::Given => "input data",
            Self::Hypothesis => "hypothesis under refutation",
            Self::Attribute => "a knot of positive genus or with nonconstant Alexander polynomial is not the unknot",
            Self::R1 => "an L-space surgery at an integer n >= 1 gives L-space surgeries at every rational r >= n",
            Self::R1Contrapositive => "contrapositive of R1: if S^3_s(K) is not an L-space, neither is S^3_n(K) for integers 1 <= n <= s",
            Self::R2 => "an L-space surgery at a rational r > 0 gives one at m = max(floor(r), 1)",
            Self::R2Contrapositive => "contrapositive of R2: if S^3_m(K) is not an L-space for an integer m >= 1, neither is S^3_r(K) for m < r < m+1 (and 0 < r < 1 when m = 1)",
            Self::R3 => "a knot of genus g > 1 has no instanton L-space surgeries with slope in (0, 2)",
            Self::R4 => "a nontrivial knot has no instanton L-space surgeries with slope in (0, 1)",
            Self::R5 => "1/2-surgery on a nontrivial knot is not an instanton L-space",
            Self::R6 => "a nontrivial knot with an instanton L-space surgery of slope r < 2 has genus 1 and Alexander polynomial t - 1 + t^-1 or -t + 3 - t^-1",
            Self::R7 => "an L-space surgery at 0 < r < 1 gives L-space surgeries on [m/(m+1), 1] with m = max(floor(r/(1-r)), 1)",
            Self::RankEuler => "rank I#(Y) >= |H1(Y)| with equality exactly for instanton L-spaces",
            Self::RankParity => "rank I#(Y) is congruent to |H1(Y)| mod 2",
            Self::Triangle => "exact triangle I#(S^3) -> I#(S^3_n(K)) -> I#(S^3_{n+1}(K)): adjacent integer surgeries differ in rank by at most 1",
            Self::S3Axiom => "S^3 is an instanton L-space",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact {
    pub id: usize,
    pub statement: Statement,
    pub rule: Rule,
    pub premises: Vec<usize>,
}

/// Two facts, or one fact and an axiom, that cannot hold together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contradiction {
    pub rule: Rule,
    pub facts: Vec<usize>,
    pub description: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnotAttributes {
    pub name: String,
    pub nontrivial: Option<bool>,
    pub genus: Option<u32>,
    pub alexander: Option<LaurentPoly>,
}

#[derive(Clone, Debug, Default)]
pub struct LSpaceKB {
    pub knot: KnotAttributes,
    facts: Vec<Fact>,
    index: HashMap<Statement, usize>,
    contradictions: Vec<Contradiction>,
    seen_contradictions: BTreeSet<Vec<usize>>,
}

fn zero() -> Slope {
    Slope::integer(0)
}

impl LSpaceKB {
    pub fn new(knot: KnotAttributes) -> Result<Self> {
        let mut kb = Self { knot: knot.clone(), ..Default::default() };
        if knot.nontrivial == Some(true) {
            kb.add(Statement::Nontrivial, Rule::Given, vec![]);
        }
        if let Some(g) = knot.genus {
            kb.add(Statement::Genus(g), Rule::Given, vec![]);
        }
        if let Some(a) = &knot.alexander {
            kb.add(Statement::Alexander(a.clone()), Rule::Given, vec![]);
        }
        if knot.nontrivial == Some(false) {
            let trivial_data = knot.genus.unwrap_or(0) == 0 && knot.alexander.as_ref().is_none_or(is_trivial_alexander);
            if !trivial_data {
                return Err(Error::Inconsistent("knot flagged as the unknot but has nontrivial genus or Alexander polynomial".into()));
            }
        }
        Ok(kb)
    }

    pub fn facts(&self) -> &[Fact] {
        &self.facts
    }

    pub fn fact(&self, id: usize) -> &Fact {
        &self.facts[id]
    }

    pub fn contradictions(&self) -> &[Contradiction] {
        &self.contradictions
    }

    pub fn is_consistent(&self) -> bool {
        self.contradictions.is_empty()
    }

    fn add(&mut self, statement: Statement, rule: Rule, premises: Vec<usize>) -> bool {
        if self.index.contains_key(&statement) {
            return false;
        }
        let id = self.facts.len();
        self.index.insert(statement.clone(), id);
        self.facts.push(Fact { id, statement, rule, premises });
        true
    }

    fn check_lspace_slope(r: &Slope) -> Result<()> {
        if !r.is_infinity() && r.p() == 0 {
            return Err(Error::Inconsistent("0-surgery has b1 = 1 and is never an instanton L-space candidate".into()));
        }
        Ok(())
    }

    pub fn assert_lspace(&mut self, r: Slope) -> Result<()> {
        Self::check_lspace_slope(&r)?;
        self.add(Statement::LSpace(r), Rule::Given, vec![]);
        Ok(())
    }

    pub fn assert_not_lspace(&mut self, r: Slope) -> Result<()> {
        Self::check_lspace_slope(&r)?;
        self.add(Statement::NotLSpace(r), Rule::Given, vec![]);
        Ok(())
    }

    pub fn assert_rank_exact(&mut self, r: Slope, rank: u64) -> Result<()> {
        self.add(Statement::RankExact(r, rank), Rule::Given, vec![]);
        Ok(())
    }

    pub fn assert_rank_lower_bound(&mut self, r: Slope, rank: u64) -> Result<()> {
        self.add(Statement::RankLowerBound(r, rank), Rule::Given, vec![]);
        Ok(())
    }

    /// Adds the hypothesis that `S³_r(K)` is an L-space.
    pub fn hypothesize_lspace(&mut self, r: Slope) -> Result<usize> {
        Self::check_lspace_slope(&r)?;
        let st = Statement::LSpace(r);
        if let Some(&id) = self.index.get(&st) {
            return Ok(id);
        }
        self.add(st, Rule::Hypothesis, vec![]);
        Ok(self.facts.len() - 1)
    }

    fn find(&self, pred: impl Fn(&Statement) -> bool) -> Option<usize> {
        self.facts.iter().find(|f| pred(&f.statement)).map(|f| f.id)
    }

    /// The first fact deciding whether `S³_r(K)` is an L-space.
    pub fn status(&self, r: &Slope) -> Option<(bool, usize)> {
        if r.is_infinity() {
            return Some((true, usize::MAX));
        }
        self.facts.iter().find_map(|f| f.statement.lspace_at(r).map(|b| (b, f.id)))
    }

    pub fn is_lspace(&self, r: &Slope) -> Option<bool> {
        self.status(r).map(|(b, _)| b)
    }

    /// Best known lower bound on `rank I#(S³_r(K))`, counting `|H₁|`.
    pub fn rank_lower_bound(&self, r: &Slope) -> Option<(u64, usize)> {
        self.facts
            .iter()
            .filter_map(|f| match &f.statement {
                Statement::RankLowerBound(s, v) | Statement::RankExact(s, v) if s == r => Some((*v, f.id)),
                _ => None,
            })
            .max_by_key(|(v, _)| *v)
    }

    pub fn is_nontrivial(&self) -> Option<usize> {
        self.index.get(&Statement::Nontrivial).copied()
    }

    /// Runs every rule to a fixed point and records contradictions.
    pub fn close(&mut self) {
        loop {
            let before = self.facts.len();
            self.rule_attributes();
            self.rule_rank();
            self.rule_r1();
            self.rule_r2();
            self.rule_r3();
            self.rule_r4();
            self.rule_r5();
            self.rule_r6();
            self.rule_r7();
            self.find_contradictions();
            if self.facts.len() == before {
                break;
            }
        }
    }

    fn snapshot(&self) -> Vec<(usize, Statement, Rule)> {
        self.facts.iter().map(|f| (f.id, f.statement.clone(), f.rule)).collect()
    }

    fn rule_attributes(&mut self) {
        if self.index.contains_key(&Statement::Nontrivial) {
            return;
        }
        let source = self.find(|s| match s {
            Statement::Genus(g) => *g >= 1,
            Statement::Alexander(a) => !is_trivial_alexander(a),
            _ => false,
        });
        if let Some(id) = source {
            self.add(Statement::Nontrivial, Rule::Attribute, vec![id]);
        }
    }

    fn rule_rank(&mut self) {
        for (id, st, rule) in self.snapshot() {
            match st {
                Statement::RankExact(r, v) if !r.is_infinity() && r.p() != 0 => {
                    if rank_decompose(r.h1_order(), v).is_ok() {
                        let conclusion =
                            if v == r.h1_order() { Statement::LSpace(r) } else { Statement::NotLSpace(r) };
                        self.add(conclusion, Rule::RankEuler, vec![id]);
                    }
                    self.triangle_from(id, &r, v, rule);
                }
                Statement::RankLowerBound(r, v) if !r.is_infinity() && r.p() != 0 => {
                    let p = r.h1_order();
                    if v > p {
                        self.add(Statement::NotLSpace(r), Rule::RankEuler, vec![id]);
                        if (v - p) % 2 == 1 {
                            self.add(Statement::RankLowerBound(r, v + 1), Rule::RankParity, vec![id]);
                        }
                    }
                    self.triangle_from(id, &r, v, rule);
                }
                _ => {}
            }
        }
    }

    /// One step of rank propagation between adjacent integer slopes `n ≥ 0`.
    fn triangle_from(&mut self, id: usize, r: &Slope, v: u64, rule: Rule) {
        if rule == Rule::Triangle || !r.is_integer() || r.p() < 0 || v < 2 {
            return;
        }
        let n = r.p();
        let mut targets = vec![n + 1];
        if n >= 1 {
            targets.push(n - 1);
        }
        for m in targets {
            let s = Slope::integer(m);
            let current = self.rank_lower_bound(&s).map_or(0, |(b, _)| b);
            if v - 1 > current.max(s.h1_order()) {
                self.add(Statement::RankLowerBound(s, v - 1), Rule::Triangle, vec![id]);
            }
        }
    }

    fn rule_r1(&mut self) {
        for (id, st, _) in self.snapshot() {
            match st {
                Statement::LSpace(n) if n.is_integer() && n.p() >= 1 => {
                    self.add(Statement::LSpaceFrom(n), Rule::R1, vec![id]);
                }
                Statement::NotLSpace(s) if !s.is_infinity() && s.p() >= s.q() => {
                    let hi = s.floor().expect("finite");
                    self.add(Statement::NotLSpaceIntegers { lo: 1, hi }, Rule::R1Contrapositive, vec![id]);
                }
                _ => {}
            }
        }
    }

    fn rule_r2(&mut self) {
        for (id, st, _) in self.snapshot() {
            match st {
                Statement::LSpace(r) if !r.is_infinity() && r.is_positive() && !r.is_integer() => {
                    let m = r.floor().expect("finite").max(1);
                    self.add(Statement::LSpace(Slope::integer(m)), Rule::R2, vec![id]);
                }
                Statement::NotLSpaceIntegers { lo: 1, hi } if hi >= 1 => {
                    let st = Statement::NotLSpaceInterval { lo: zero(), hi: Slope::integer(hi + 1) };
                    self.add(st, Rule::R2Contrapositive, vec![id]);
                }
                _ => {}
            }
        }
    }

    fn rule_r3(&mut self) {
        if let Some(id) = self.find(|s| matches!(s, Statement::Genus(g) if *g > 1)) {
            self.add(Statement::NotLSpaceInterval { lo: zero(), hi: Slope::integer(2) }, Rule::R3, vec![id]);
        }
    }

    fn rule_r4(&mut self) {
        if let Some(id) = self.is_nontrivial() {
            self.add(Statement::NotLSpaceInterval { lo: zero(), hi: Slope::integer(1) }, Rule::R4, vec![id]);
        }
    }

    fn rule_r5(&mut self) {
        if let Some(id) = self.is_nontrivial() {
            self.add(Statement::NotLSpace(Slope::new(1, 2).expect("valid")), Rule::R5, vec![id]);
        }
    }

    fn rule_r6(&mut self) {
        let Some(nt) = self.is_nontrivial() else { return };
        let two = Slope::integer(2);
        let source = self.find(|s| matches!(s, Statement::LSpace(r) if r.is_positive() && *r < two));
        if let Some(id) = source {
            self.add(Statement::GenusOneDichotomy, Rule::R6, vec![nt, id]);
        }
    }

    fn rule_r7(&mut self) {
        let one = Slope::integer(1);
        for (id, st, _) in self.snapshot() {
            if let Statement::LSpace(r) = st {
                if r.is_positive() && r < one {
                    let x = r.to_rational().expect("finite");
                    let ratio = &x / (Rational::from_integer(1.into()) - &x);
                    let m = crate::algebra::floor_i64(&ratio).expect("fits").max(1);
                    let lo = Slope::new(m, m + 1).expect("valid");
                    self.add(Statement::LSpaceInterval { lo, hi: one }, Rule::R7, vec![id]);
                }
            }
        }
    }

    fn record(&mut self, rule: Rule, mut facts: Vec<usize>, description: String) {
        facts.sort_unstable();
        facts.dedup();
        if self.seen_contradictions.insert(facts.clone()) {
            self.contradictions.push(Contradiction { rule, facts, description });
        }
    }

    fn find_contradictions(&mut self) {
        let facts = self.facts.clone();
        for a in &facts {
            // Positive and negative L-space statements.
            if a.statement.is_positive_lspace() {
                for b in &facts {
                    if b.statement.is_negative_lspace() {
                        if let Some(w) = overlap(&a.statement, &b.statement) {
                            self.record(
                                b.rule,
                                vec![a.id, b.id],
                                format!("slope {w}: [{}] contradicts [{}]", a.statement, b.statement),
                            );
                        }
                    }
                }
            }
            match &a.statement {
                Statement::NotLSpace(r) if r.is_infinity() => {
                    self.record(Rule::S3Axiom, vec![a.id], format!("[{}] but S^3 is an instanton L-space", a.statement));
                }
                Statement::RankExact(r, v) if !r.is_infinity() && r.p() != 0 => {
                    if let Err(e) = rank_decompose(r.h1_order(), *v) {
                        self.record(Rule::RankEuler, vec![a.id], e.to_string());
                    }
                    for b in &facts {
                        match &b.statement {
                            Statement::RankExact(s, w) if s == r && w != v && a.id < b.id => {
                                self.record(Rule::Given, vec![a.id, b.id], format!("two exact ranks at slope {r}"));
                            }
                            Statement::RankLowerBound(s, w) if s == r && w > v => self.record(
                                b.rule,
                                vec![a.id, b.id],
                                format!("rank {v} at slope {r} is below the bound {w}"),
                            ),
                            _ => {}
                        }
                    }
                }
                Statement::GenusOneDichotomy => {
                    for b in &facts {
                        match &b.statement {
                            Statement::Genus(g) if *g != 1 => self.record(
                                Rule::R6,
                                vec![a.id, b.id],
                                format!("R6 forces genus 1 but g(K) = {g}"),
                            ),
                            Statement::Alexander(p) if *p != genus1_alexander(1) && *p != genus1_alexander(-1) => {
                                self.record(
                                    Rule::R6,
                                    vec![a.id, b.id],
                                    format!("R6 forces Δ_K to be t - 1 + t^-1 or -t + 3 - t^-1, but Δ_K = {p}"),
                                )
                            }
                            _ => {}
                        }
                    }
                }
                _ => {}
            }
        }
    }

    /// All facts the given fact depends on, premises before conclusions.
    pub fn derivation(&self, id: usize) -> Vec<&Fact> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![id];
        while let Some(i) = stack.pop() {
            if i < self.facts.len() && seen.insert(i) {
                stack.extend(self.facts[i].premises.iter().copied());
            }
        }
        seen.into_iter().map(|i| &self.facts[i]).collect()
    }

    pub fn contradiction_chain(&self, c: &Contradiction) -> Vec<&Fact> {
        let mut ids = BTreeSet::new();
        for &f in &c.facts {
            ids.extend(self.derivation(f).into_iter().map(|f| f.id));
        }
        ids.into_iter().map(|i| &self.facts[i]).collect()
    }

    pub fn explain(&self, id: usize) -> Vec<String> {
        self.derivation(id).into_iter().map(render).collect()
    }

    /// Tries to refute "S³_r(K) is an L-space": adds it as a hypothesis to a
    /// copy of the closed knowledge base and looks for a contradiction.
    pub fn refute_lspace(&self, r: Slope) -> Result<Option<Refutation>> {
        let mut base = self.clone();
        base.close();
        if !base.is_consistent() {
            return Err(Error::Inconsistent(base.contradictions[0].description.clone()));
        }
        if let Some((false, id)) = base.status(&r) {
            return Ok(Some(Refutation { kb: base.clone(), hypothesis: None, contradiction: None, direct: Some(id) }));
        }
        let mut trial = base;
        let h = trial.hypothesize_lspace(r)?;
        trial.close();
        let c = trial.contradictions.first().cloned();
        Ok(c.map(|c| Refutation { kb: trial, hypothesis: Some(h), contradiction: Some(c), direct: None }))
    }
}

/// Witness slope where a positive and a negative L-space statement meet.
fn overlap(pos: &Statement, neg: &Statement) -> Option<Slope> {
    use Statement::*;
    let candidates: Vec<Slope> = match pos {
        LSpace(r) => vec![*r],
        LSpaceFrom(n) => match neg {
            NotLSpace(s) => vec![*s],
            NotLSpaceInterval { lo, hi } if n < hi => vec![midpoint(&(*n).max(*lo), hi)],
            NotLSpaceIntegers { lo, hi } => {
                let start = n.floor().expect("finite") + i64::from(!n.is_integer());
                let k = start.max(*lo);
                if k <= *hi {
                    vec![Slope::integer(k)]
                } else {
                    vec![]
                }
            }
            _ => vec![],
        },
        LSpaceInterval { lo, hi } => match neg {
            NotLSpace(s) => vec![*s],
            NotLSpaceInterval { lo: a, hi: b } if lo < b && a < hi => vec![midpoint(&(*lo).max(*a), &(*hi).min(*b)), *lo, *hi],
            NotLSpaceIntegers { lo: a, hi: b } => {
                let start = lo.floor().expect("finite") + i64::from(!lo.is_integer());
                let k = start.max(*a);
                if k <= *b && Slope::integer(k) <= *hi {
                    vec![Slope::integer(k)]
                } else {
                    vec![]
                }
            }
            _ => vec![],
        },
        _ => vec![],
    };
    candidates.into_iter().find(|w| pos.lspace_at(w) == Some(true) && neg.lspace_at(w) == Some(false))
}

fn midpoint(a: &Slope, b: &Slope) -> Slope {
    if b.is_infinity() {
        return Slope::integer(a.floor().expect("finite") + 1);
    }
    let m = (a.to_rational().expect("finite") + b.to_rational().expect("finite")) * rat(1, 2);
    Slope::from_rational(&m).expect("small")
}

pub fn render(f: &Fact) -> String {
    let from = if f.premises.is_empty() {
        String::new()
    } else {
        let ids: Vec<String> = f.premises.iter().map(|p| format!("#{p}")).collect();
        format!(" from {}", ids.join(", "))
    };
    format!("#{} {} [{}{}]", f.id, f.statement, f.rule.code(), from)
}

/// Outcome of a successful refutation.
#[derive(Clone, Debug)]
pub struct Refutation {
    pub kb: LSpaceKB,
    /// Id of the hypothesis fact, when the refutation needed one.
    pub hypothesis: Option<usize>,
    pub contradiction: Option<Contradiction>,
    /// Id of a fact stating "not an L-space" directly, when already known.
    pub direct: Option<usize>,
}

impl Refutation {
    pub fn chain(&self) -> Vec<&Fact> {
        match (&self.contradiction, self.direct) {
            (Some(c), _) => self.kb.contradiction_chain(c),
            (None, Some(id)) => self.kb.derivation(id),
            _ => vec![],
        }
    }
}

/// Re-checks a single derivation step using only the premises' statements.
pub fn verify_step(statement: &Statement, rule: Rule, premises: &[&Statement]) -> bool {
    use Statement::*;
    let one = Slope::integer(1);
    match (rule, premises) {
        (Rule::Given | Rule::Hypothesis, []) => true,
        (Rule::Attribute, [Genus(g)]) => *g >= 1 && *statement == Nontrivial,
        (Rule::Attribute, [Alexander(a)]) => !is_trivial_alexander(a) && *statement == Nontrivial,
        (Rule::R1, [LSpace(n)]) => n.is_integer() && n.p() >= 1 && *statement == LSpaceFrom(*n),
        (Rule::R1Contrapositive, [NotLSpace(s)]) => {
            !s.is_infinity() && *s >= one && *statement == NotLSpaceIntegers { lo: 1, hi: s.floor().unwrap() }
        }
        (Rule::R2, [LSpace(r)]) => {
            !r.is_infinity()
                && r.is_positive()
                && *statement == LSpace(Slope::integer(r.floor().unwrap().max(1)))
        }
        (Rule::R2Contrapositive, [NotLSpaceIntegers { lo: 1, hi }]) => {
            *hi >= 1 && *statement == NotLSpaceInterval { lo: zero(), hi: Slope::integer(hi + 1) }
        }
        (Rule::R3, [Genus(g)]) => *g > 1 && *statement == NotLSpaceInterval { lo: zero(), hi: Slope::integer(2) },
        (Rule::R4, [Nontrivial]) => *statement == NotLSpaceInterval { lo: zero(), hi: one },
        (Rule::R5, [Nontrivial]) => *statement == NotLSpace(Slope::new(1, 2).unwrap()),
        (Rule::R6, [Nontrivial, LSpace(r)]) => {
            r.is_positive() && *r < Slope::integer(2) && *statement == GenusOneDichotomy
        }
        (Rule::R7, [LSpace(r)]) => {
            if !(r.is_positive() && *r < one) {
                return false;
            }
            let x = r.to_rational().unwrap();
            let m = crate::algebra::floor_i64(&(&x / (Rational::from_integer(1.into()) - &x))).unwrap().max(1);
            *statement == LSpaceInterval { lo: Slope::new(m, m + 1).unwrap(), hi: one }
        }
        (Rule::RankEuler, [RankExact(r, v)]) => {
            rank_decompose(r.h1_order(), *v).is_ok()
                && if *v == r.h1_order() { *statement == LSpace(*r) } else { *statement == NotLSpace(*r) }
        }
        (Rule::RankEuler, [RankLowerBound(r, v)]) => *v > r.h1_order() && *statement == NotLSpace(*r),
        (Rule::RankParity, [RankLowerBound(r, v)]) => {
            *v > r.h1_order() && (*v - r.h1_order()) % 2 == 1 && *statement == RankLowerBound(*r, v + 1)
        }
        (Rule::Triangle, [RankLowerBound(r, v) | RankExact(r, v)]) => match statement {
            RankLowerBound(s, w) => {
                r.is_integer() && s.is_integer() && r.p() >= 0 && s.p() >= 0 && r.p().abs_diff(s.p()) == 1 && *w < *v
            }
            _ => false,
        },
        _ => false,
    }
}

/// Checks that the listed statements really are incompatible.
pub fn verify_contradiction(statements: &[&Statement]) -> bool {
    use Statement::*;
    match statements {
        [NotLSpace(r)] => r.is_infinity(),
        [RankExact(r, v)] => rank_decompose(r.h1_order(), *v).is_err(),
        [a, b] => {
            let lspace = |p: &Statement, n: &Statement| {
                p.is_positive_lspace() && n.is_negative_lspace() && overlap(p, n).is_some()
            };
            let r6 = |d: &Statement, x: &Statement| {
                *d == GenusOneDichotomy
                    && match x {
                        Genus(g) => *g != 1,
                        Alexander(p) => *p != genus1_alexander(1) && *p != genus1_alexander(-1),
                        _ => false,
                    }
            };
            let ranks = |x: &Statement, y: &Statement| match (x, y) {
                (RankExact(r, v), RankExact(s, w)) => r == s && v != w,
                (RankExact(r, v), RankLowerBound(s, w)) => r == s && w > v,
                _ => false,
            };
            lspace(a, b) || lspace(b, a) || r6(a, b) || r6(b, a) || ranks(a, b) || ranks(b, a)
        }
        _ => false,
    }
}

/// Knowledge-base input file.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KbFile {
    pub schema_version: u32,
    pub knot: KbKnot,
    #[serde(default)]
    pub fact: Vec<KbFact>,
    #[serde(default)]
    pub queries: Vec<Slope>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KbKnot {
    #[serde(default)]
    pub name: String,
    #[serde(default)]
    pub nontrivial: Option<bool>,
    #[serde(default)]
    pub genus: Option<u32>,
    #[serde(default)]
    pub alexander: Option<Vec<Triple>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KbFactKind {
    Lspace,
    NotLspace,
    RankExact,
    RankLowerBound,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KbFact {
    pub kind: KbFactKind,
    pub slope: Slope,
    #[serde(default)]
    pub rank: Option<u64>,
}

impl KbFile {
    pub fn into_kb(self) -> Result<(LSpaceKB, Vec<Slope>)> {
        let alexander = self.knot.alexander.as_deref().map(|t| poly_from_triples('t', t)).transpose()?;
        let mut kb = LSpaceKB::new(KnotAttributes {
            name: self.knot.name,
            nontrivial: self.knot.nontrivial,
            genus: self.knot.genus,
            alexander,
        })?;
        for f in self.fact {
            let need_rank = || f.rank.ok_or_else(|| Error::Parse(format!("fact at slope {} needs a rank", f.slope)));
            match f.kind {
                KbFactKind::Lspace => kb.assert_lspace(f.slope)?,
                KbFactKind::NotLspace => kb.assert_not_lspace(f.slope)?,
                KbFactKind::RankExact => kb.assert_rank_exact(f.slope, need_rank()?)?,
                KbFactKind::RankLowerBound => kb.assert_rank_lower_bound(f.slope, need_rank()?)?,
            }
        }
        Ok((kb, self.queries))
    }
}
