//! Certificates for the existence of nontrivial or irreducible SU(2)
//! representations, built from rank bounds on framed instanton homology.
//!
//! Every step of a positive certificate carries the data needed to recompute
//! it; [`Certificate::validate`] re-runs them. An abstention
//! ([`Conclusion::NoCertificate`]) never asserts that no representation exists.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::group::{small_h1_cyclic_finite, FiniteAbelianGroup};
use super::reps::cyclically_finite_surgery;
use crate::error::{Error, Result};
use crate::format::{poly_from_triples, poly_to_triples, Triple};
use crate::knots::{KnotRecord, KnotTable};
use crate::slopes::kb::{render, verify_contradiction, verify_step, KnotAttributes, LSpaceKB, Statement};
use crate::slopes::Slope;
use crate::stein::{
    definiteness, determinant, diagonalizable_over_z, filling_override, h1_order, inertia, invariant_factors,
    is_zero, overlap_threshold, positive_knot_spectrum, rank_lower_bound_from_stein, rotation_spectrum,
    sfs_lspace_classify, Definiteness, IntMatrix, LegendrianComponent, Plumbing, SeifertData, SteinHandlebodyModel,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    NontrivialRep,
    IrreducibleRep,
    NoCertificate,
}

impl Conclusion {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::NontrivialRep => "nontrivial_rep",
            Self::IrreducibleRep => "irreducible_rep",
            Self::NoCertificate => "no_certificate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Query {
    /// `S³_r(K)` for a knot in the table.
    Surgery { knot: String, slope: Slope },
    /// Boundary of a Stein handlebody; `alternative_rotations` lists other
    /// rotation vectors for the same Legendrian link type and `tb`.
    Stein {
        components: Vec<LegendrianComponent>,
        linking: IntMatrix,
        #[serde(default)]
        alternative_rotations: Vec<Vec<i64>>,
        /// User-certified: the universal abelian cover is a rational homology sphere.
        #[serde(default)]
        cyclically_finite: bool,
    },
    Seifert { data: SeifertData },
    /// Raw homology and rank data.
    Raw {
        h1: FiniteAbelianGroup,
        #[serde(default)]
        rank_lower_bound: u64,
        #[serde(default)]
        rank_exact: Option<u64>,
        #[serde(default)]
        cyclically_finite: bool,
    },
}

impl Query {
    pub fn subject(&self) -> String {
        match self {
            Self::Surgery { knot, slope } => format!("S^3_{slope}({knot})"),
            Self::Stein { components, .. } => format!("boundary of a Stein handlebody with {} handles", components.len()),
            Self::Seifert { data } => data.to_string(),
            Self::Raw { h1, .. } => format!("Y with H1 = {h1}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum HomologySource {
    Surgery { p: i64 },
    LinkingMatrix { matrix: IntMatrix },
    Seifert { data: SeifertData },
    Given,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefutationKnot {
    pub name: String,
    pub genus: Option<u32>,
    pub alexander: Option<Vec<Triple>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Step {
    Homology { manifold: String, source: HomologySource, group: FiniteAbelianGroup },
    StabilizationRank { knot: String, slope: Slope, tb: i64, rot: i64, rank_lower_bound: u64 },
    PositiveKnotRank { knot: String, genus: u32, slope: Slope, rank_lower_bound: u64 },
    OrientationReversal { manifold: String, reversed: String },
    LSpaceRefutation {
        knot: RefutationKnot,
        rank_facts: Vec<(Slope, u64)>,
        slope: Slope,
        derivation: Vec<String>,
    },
    SteinChernRank { chern_vectors: Vec<Vec<i64>>, rank_lower_bound: u64 },
    SeifertPlumbing { data: SeifertData, plumbing: Plumbing },
    SeifertOverride { data: SeifertData, description: String, model: SteinHandlebodyModel },
    FroyshovBranch { form: IntMatrix },
    DonaldsonBranch { form: IntMatrix },
    NontrivialFromRank { rank_lower_bound: u64 },
    CyclicallyFiniteSurgery { alexander: Vec<Triple>, p: u64 },
    CyclicallyFiniteGroup { group: FiniteAbelianGroup },
    CyclicallyFiniteAssumed,
    IrreducibleFromRank { h1_order: u64 },
    LSpaceClassification { data: SeifertData },
}

impl Step {
    pub fn code(&self) -> &'static str {
        match self {
            Self::Homology { .. } => "homology",
            Self::StabilizationRank { .. } => "stabilization-rank",
            Self::PositiveKnotRank { .. } => "positive-knot-rank",
            Self::OrientationReversal { .. } => "orientation-reversal",
            Self::LSpaceRefutation { .. } => "l-space-refutation",
            Self::SteinChernRank { .. } => "stein-chern-rank",
            Self::SeifertPlumbing { .. } => "seifert-plumbing",
            Self::SeifertOverride { .. } => "seifert-filling-override",
            Self::FroyshovBranch { .. } => "froyshov-branch",
            Self::DonaldsonBranch { .. } => "donaldson-branch",
            Self::NontrivialFromRank { .. } => "nontrivial-from-rank",
            Self::CyclicallyFiniteSurgery { .. } => "cyclically-finite-surgery",
            Self::CyclicallyFiniteGroup { .. } => "cyclically-finite-group",
            Self::CyclicallyFiniteAssumed => "cyclically-finite-assumed",
            Self::IrreducibleFromRank { .. } => "irreducible-from-rank",
            Self::LSpaceClassification { .. } => "seifert-l-space-classification",
        }
    }

    pub fn citation(&self) -> &'static str {
        match self {
            Self::Homology { .. } => "first homology read off the presentation",
            Self::StabilizationRank { .. } => {
                "stabilized Legendrian representatives of the mirror with tb = 1-n realize s̄l+n rotation numbers; \
                 their Legendrian surgery traces carry Stein structures with distinct Chern classes (Gompf), \
                 so rank I#(S^3_n(K)) = rank I#(S^3_-n(K̄)) >= s̄l+n"
            }
            Self::PositiveKnotRank { .. } => {
                "a positive knot of genus g has t̄b = 2g-1 (Tanaka); g-1 stabilizations give g rotation numbers \
                 at tb = g, so rank I#(S^3_{g-1}(K̄)) >= g"
            }
            Self::OrientationReversal { .. } => {
                "S^3_r(K) = -S^3_-r(K̄); orientation reversal preserves π1 and the rank of I#"
            }
            Self::LSpaceRefutation { .. } => "instanton L-space surgery rules; derivation attached",
            Self::SteinChernRank { .. } => {
                "n Stein structures with distinct real Chern classes on one 4-manifold give rank I#(Y) >= n; \
                 c1 of the conjugate structure is -c1"
            }
            Self::SeifertPlumbing { .. } => {
                "star-shaped plumbing with framings <= -2 realized by Legendrian unknots with framing tb-1; \
                 a vertex with framing < -2 admits a nonzero rotation number"
            }
            Self::SeifertOverride { .. } => "curated Legendrian filling",
            Self::FroyshovBranch { .. } => {
                "c1(J) = 0 makes the intersection form even; an even negative definite unimodular form is not \
                 diagonalizable, so the Frøyshov invariant is positive and instanton Floer homology is nonzero"
            }
            Self::DonaldsonBranch { .. } => {
                "a Stein domain with b2+ >= 1 embeds in a minimal surface of general type whose nonzero Donaldson \
                 invariants factor through the Floer homology of the boundary"
            }
            Self::NontrivialFromRank { .. } => {
                "a homology sphere with rank I# > 1 has a nontrivial SU(2) representation"
            }
            Self::CyclicallyFiniteSurgery { .. } => {
                "π1(S^3_p/q(K)) is cyclically finite iff no zero of Δ_K(t^2) is a |p|th root of unity (Boyer-Nicas)"
            }
            Self::CyclicallyFiniteGroup { .. } => {
                "H1 cyclic of prime-power order (Cohen), Z/2 + Z/2, or of order at most 5 makes π1 cyclically finite"
            }
            Self::CyclicallyFiniteAssumed => "user-certified: the universal abelian cover is a rational homology sphere",
            Self::IrreducibleFromRank { .. } => {
                "with π1 cyclically finite, if every representation were reducible the Chern-Simons functional \
                 would be Morse-Bott with rank H_*(R(Y)) = |H1|, forcing rank I# = |H1|"
            }
            Self::LSpaceClassification { .. } => {
                "among nontrivial Seifert fibered homology spheres only ±Σ(2,3,5) are instanton L-spaces"
            }
        }
    }

    pub fn claim(&self) -> String {
        match self {
            Self::Homology { manifold, group, .. } => format!("H1({manifold}) = {group}, of order {}", group.order()),
            Self::StabilizationRank { knot, slope, rank_lower_bound, tb, rot } => format!(
                "from tb = {tb}, rot = {rot}: rank I#(S^3_{slope}({knot})) >= {rank_lower_bound}"
            ),
            Self::PositiveKnotRank { knot, slope, rank_lower_bound, .. } => {
                format!("rank I#(S^3_{slope}({knot})) >= {rank_lower_bound}")
            }
            Self::OrientationReversal { manifold, reversed } => format!("{manifold} = -{reversed}"),
            Self::LSpaceRefutation { knot, slope, .. } => {
                format!("S^3_{slope}({}) is not an instanton L-space", knot.name)
            }
            Self::SteinChernRank { chern_vectors, rank_lower_bound } => {
                format!("{} distinct Chern vectors {:?}: rank I# >= {rank_lower_bound}", chern_vectors.len(), chern_vectors)
            }
            Self::SeifertPlumbing { data, plumbing } => format!(
                "{data} bounds the Legendrian plumbing with centre {} and chains {:?}",
                plumbing.central, plumbing.chains
            ),
            Self::SeifertOverride { data, description, .. } => format!("{data} bounds a Stein domain: {description}"),
            Self::FroyshovBranch { .. } => "Floer homology is nonzero, so a nontrivial representation exists".into(),
            Self::DonaldsonBranch { .. } => "Floer homology is nonzero, so a nontrivial representation exists".into(),
            Self::NontrivialFromRank { rank_lower_bound } => {
                format!("rank I# >= {rank_lower_bound} > 1: nontrivial representation")
            }
            Self::CyclicallyFiniteSurgery { p, .. } => format!("no zero of Δ(t^2) is a {p}th root of unity"),
            Self::CyclicallyFiniteGroup { group } => format!("H1 = {group} forces cyclical finiteness"),
            Self::CyclicallyFiniteAssumed => "π1 is cyclically finite (user-certified)".into(),
            Self::IrreducibleFromRank { h1_order } => {
                format!("rank I# > |H1| = {h1_order} and π1 cyclically finite: irreducible representation")
            }
            Self::LSpaceClassification { data } => format!("{data} is ±Σ(2,3,5), an instanton L-space"),
        }
    }

    /// Recomputes the step from its own data.
    pub fn check(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Inconsistent(format!("{}: {msg}", self.code())));
        match self {
            Self::Homology { source, group, .. } => {
                let recomputed = match source {
                    HomologySource::Surgery { p } => FiniteAbelianGroup::cyclic(p.unsigned_abs())?,
                    HomologySource::LinkingMatrix { matrix } => FiniteAbelianGroup::new(invariant_factors(matrix))?,
                    HomologySource::Seifert { data } => {
                        if data.h1_order() != 1 {
                            return fail(format!("{data} is not a homology sphere"));
                        }
                        FiniteAbelianGroup::trivial()
                    }
                    HomologySource::Given => group.clone(),
                };
                if recomputed != *group {
                    return fail(format!("recomputed {recomputed}, recorded {group}"));
                }
            }
            Self::StabilizationRank { slope, tb, rot, rank_lower_bound, .. } => {
                if !slope.is_integer() || slope.p() < 1 {
                    return fail(format!("slope {slope} is not a positive integer"));
                }
                let s = rotation_spectrum(*tb, *rot, slope.p())?;
                let vectors: Vec<Vec<i64>> = s.exact.iter().map(|&r| vec![r]).collect();
                if !s.overlap || s.guaranteed != *rank_lower_bound || rank_lower_bound_from_stein(&vectors, true)? < s.guaranteed {
                    return fail(format!("spectrum guarantees {} rotation numbers", s.guaranteed));
                }
            }
            Self::PositiveKnotRank { genus, slope, rank_lower_bound, .. } => {
                let s = positive_knot_spectrum(*genus, 0)?;
                if *slope != Slope::integer(*genus as i64 - 1) || s.guaranteed != *rank_lower_bound {
                    return fail("positive-knot spectrum does not match".into());
                }
            }
            Self::OrientationReversal { .. } | Self::CyclicallyFiniteAssumed => {}
            Self::LSpaceRefutation { knot, rank_facts, slope, .. } => {
                let kb = refutation_kb(knot, rank_facts)?;
                let Some(r) = kb.refute_lspace(*slope)? else {
                    return fail(format!("no contradiction from L-space at {slope}"));
                };
                for f in r.chain() {
                    let premises: Vec<&Statement> = f.premises.iter().map(|&p| &r.kb.fact(p).statement).collect();
                    if !verify_step(&f.statement, f.rule, &premises) {
                        return fail(format!("step does not re-validate: {}", render(f)));
                    }
                }
                match (&r.contradiction, r.direct) {
                    (Some(c), _) => {
                        let sts: Vec<&Statement> = c.facts.iter().map(|&i| &r.kb.fact(i).statement).collect();
                        if !verify_contradiction(&sts) {
                            return fail(format!("contradiction does not re-validate: {}", c.description));
                        }
                    }
                    (None, Some(id)) => {
                        if r.kb.fact(id).statement.lspace_at(slope) != Some(false) {
                            return fail("direct fact does not cover the slope".into());
                        }
                    }
                    _ => return fail("empty refutation".into()),
                }
            }
            Self::SteinChernRank { chern_vectors, rank_lower_bound } => {
                if rank_lower_bound_from_stein(chern_vectors, true)? != *rank_lower_bound {
                    return fail("distinct count differs".into());
                }
            }
            Self::SeifertPlumbing { data, plumbing } => {
                if data.plumbing() != *plumbing || !plumbing.c1_nonzero() || data.e() > -2 {
                    return fail(format!("{data} does not give this plumbing with c1 != 0"));
                }
                let w = plumbing.stein_model()?;
                if w.h1_order()? != Some(data.h1_order()) {
                    return fail("plumbing determinant differs from |H1|".into());
                }
            }
            Self::SeifertOverride { data, model, .. } => {
                match filling_override(data) {
                    Some(o) if o.model == *model && o.bounds == *data => {}
                    _ => return fail(format!("no curated filling for {data}")),
                }
                if model.h1_order()? != Some(data.h1_order()) {
                    return fail("filling boundary has the wrong homology".into());
                }
            }
            Self::FroyshovBranch { form } => {
                if definiteness(form)? != Definiteness::NegativeDefinite || determinant(form)?.magnitude() != &1u32.into() {
                    return fail("form is not negative definite and unimodular".into());
                }
                if diagonalizable_over_z(form)? != Some(false) {
                    return fail("form is diagonalizable or undecided".into());
                }
            }
            Self::DonaldsonBranch { form } => {
                if inertia(form)?.positive == 0 || determinant(form)?.magnitude() != &1u32.into() {
                    return fail("form has b2+ = 0 or is not unimodular".into());
                }
            }
            Self::NontrivialFromRank { rank_lower_bound } => {
                if *rank_lower_bound < 2 {
                    return fail("rank bound is at most 1".into());
                }
            }
            Self::CyclicallyFiniteSurgery { alexander, p } => {
                let d = poly_from_triples('t', alexander)?;
                if !cyclically_finite_surgery(&d, *p as i64)? {
                    return fail(format!("Δ(t^2) has a zero that is a {p}th root of unity"));
                }
            }
            Self::CyclicallyFiniteGroup { group } => {
                if !small_h1_cyclic_finite(group) {
                    return fail(format!("{group} is not covered"));
                }
            }
            Self::IrreducibleFromRank { .. } | Self::LSpaceClassification { .. } => {}
        }
        Ok(())
    }
}

fn refutation_kb(knot: &RefutationKnot, rank_facts: &[(Slope, u64)]) -> Result<LSpaceKB> {
    let alexander = knot.alexander.as_deref().map(|t| poly_from_triples('t', t)).transpose()?;
    let mut kb = LSpaceKB::new(KnotAttributes { name: knot.name.clone(), nontrivial: None, genus: knot.genus, alexander })?;
    for (s, v) in rank_facts {
        kb.assert_rank_lower_bound(*s, *v)?;
    }
    Ok(kb)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub subject: String,
    pub conclusion: Conclusion,
    pub chain: Vec<Step>,
    pub caveat: Option<String>,
    /// For abstentions: the first hypothesis that could not be established.
    pub nearest_failure: Option<String>,
}

const ABSTAIN_NOTE: &str = "abstention makes no claim that such a representation does not exist";

impl Certificate {
    fn new(subject: String) -> Self {
        Self { subject, conclusion: Conclusion::NoCertificate, chain: Vec::new(), caveat: None, nearest_failure: None }
    }

    fn abstain(mut self, failure: impl Into<String>) -> Self {
        self.conclusion = Conclusion::NoCertificate;
        self.nearest_failure = Some(failure.into());
        if self.caveat.is_none() {
            self.caveat = Some(ABSTAIN_NOTE.into());
        }
        self
    }

    fn conclude(mut self, c: Conclusion) -> Self {
        self.conclusion = c;
        self
    }

    pub fn is_positive(&self) -> bool {
        self.conclusion != Conclusion::NoCertificate
    }

    /// Re-executes every step and checks that the steps support the
    /// conclusion. Abstentions always validate.
    pub fn validate(&self) -> Result<()> {
        if !self.is_positive() {
            return Ok(());
        }
        for s in &self.chain {
            s.check()?;
        }
        let bad = |msg: &str| Err(Error::Inconsistent(format!("{}: {msg}", self.subject)));
        let order = self.chain.iter().find_map(|s| match s {
            Step::Homology { group, .. } => Some(group.order()),
            _ => None,
        });
        let Some(order) = order else { return bad("no homology step") };
        let last = self.chain.last().expect("nonempty");
        match self.conclusion {
            Conclusion::NontrivialRep => {
                if order != 1 {
                    return bad("nontrivial-representation certificates are for homology spheres");
                }
                match last {
                    Step::NontrivialFromRank { rank_lower_bound } => {
                        let supported = self.chain.iter().any(|s| {
                            matches!(s, Step::SteinChernRank { rank_lower_bound: b, .. } if b >= rank_lower_bound)
                        }) || self.chain.iter().any(|s| matches!(s, Step::Homology { source: HomologySource::Given, .. }));
                        if !supported {
                            return bad("rank bound is not established by an earlier step");
                        }
                    }
                    Step::FroyshovBranch { .. } | Step::DonaldsonBranch { .. } => {}
                    _ => return bad("final step does not conclude a nontrivial representation"),
                }
            }
            Conclusion::IrreducibleRep => {
                let Step::IrreducibleFromRank { h1_order } = last else {
                    return bad("final step does not conclude an irreducible representation");
                };
                if *h1_order != order {
                    return bad("|H1| differs between steps");
                }
                let cf = self.chain.iter().any(|s| {
                    matches!(
                        s,
                        Step::CyclicallyFiniteSurgery { .. } | Step::CyclicallyFiniteGroup { .. } | Step::CyclicallyFiniteAssumed
                    )
                });
                if !cf {
                    return bad("no cyclical-finiteness step");
                }
                let rank_ok = self.chain.iter().any(|s| match s {
                    Step::LSpaceRefutation { .. } => true,
                    Step::SteinChernRank { rank_lower_bound, .. } => *rank_lower_bound > order,
                    _ => false,
                }) || matches!(self.chain.first(), Some(Step::Homology { source: HomologySource::Given, .. }));
                if !rank_ok {
                    return bad("rank I# > |H1| is not established");
                }
                for (i, s) in self.chain.iter().enumerate() {
                    if let Step::LSpaceRefutation { rank_facts, .. } = s {
                        for (slope, v) in rank_facts {
                            let backed = self.chain[..i].iter().any(|t| match t {
                                Step::StabilizationRank { slope: s2, rank_lower_bound, .. }
                                | Step::PositiveKnotRank { slope: s2, rank_lower_bound, .. } => {
                                    s2 == slope && rank_lower_bound >= v
                                }
                                _ => false,
                            });
                            if !backed {
                                return bad("rank fact used by the L-space refutation has no source");
                            }
                        }
                    }
                }
            }
            Conclusion::NoCertificate => unreachable!(),
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let chain: Vec<Value> = self
            .chain
            .iter()
            .map(|s| json!({"rule": s.code(), "citation": s.citation(), "claim": s.claim(), "data": s}))
            .collect();
        json!({
            "subject": self.subject,
            "conclusion": self.conclusion.as_str(),
            "chain": chain,
            "caveat": self.caveat,
            "nearest_failure": self.nearest_failure,
        })
    }

    /// Human-readable report; `trace` adds the L-space derivations.
    pub fn report(&self, trace: bool) -> String {
        let mut out = format!("{}: {}\n", self.subject, self.conclusion.as_str());
        for (i, s) in self.chain.iter().enumerate() {
            out += &format!("  {}. [{}] {}\n", i + 1, s.code(), s.claim());
            if trace {
                out += &format!("     by: {}\n", s.citation());
                if let Step::LSpaceRefutation { derivation, .. } = s {
                    for line in derivation {
                        out += &format!("       {line}\n");
                    }
                }
            }
        }
        if let Some(f) = &self.nearest_failure {
            out += &format!("  missing: {f}\n");
        }
        if let Some(c) = &self.caveat {
            out += &format!("  note: {c}\n");
        }
        out
    }
}

pub fn certify(query: &Query, table: &KnotTable) -> Result<Certificate> {
    match query {
        Query::Surgery { knot, slope } => certify_surgery(table.knot(knot)?, *slope),
        Query::Stein { components, linking, alternative_rotations, cyclically_finite } => {
            let model = SteinHandlebodyModel::new(components.clone(), linking.clone())?;
            certify_stein(&model, alternative_rotations, *cyclically_finite)
        }
        Query::Seifert { data } => certify_seifert(data),
        Query::Raw { h1, rank_lower_bound, rank_exact, cyclically_finite } => {
            certify_raw(h1, *rank_lower_bound, *rank_exact, *cyclically_finite)
        }
    }
}

fn knot_for_kb(name: String, k: &KnotRecord) -> Result<RefutationKnot> {
    Ok(RefutationKnot { name, genus: k.genus, alexander: Some(poly_to_triples(&k.alexander)?) })
}

/// Steps showing `S³_r(K)` is not an instanton L-space, or the hypothesis
/// that could not be met.
fn surgery_not_lspace(k: &KnotRecord, r: Slope) -> Result<std::result::Result<Vec<Step>, String>> {
    let mut steps = Vec::new();
    if let (Some(sl), true) = (k.sl_bar_mirror, r.is_positive()) {
        if sl >= 0 {
            let Some(tb) = k.tb_bar_mirror else {
                return Ok(Err(format!(
                    "s̄l(K̄) = {sl} >= 0 but no Legendrian representative of the mirror realizing it is recorded"
                )));
            };
            let rot = tb - sl;
            let floor = r.floor().expect("finite").max(1);
            let n = overlap_threshold(tb, rot, floor);
            let spectrum = rotation_spectrum(tb, rot, n)?;
            let nslope = Slope::integer(n);
            steps.push(Step::StabilizationRank {
                knot: k.name.clone(),
                slope: nslope,
                tb,
                rot,
                rank_lower_bound: spectrum.guaranteed,
            });
            let rk = knot_for_kb(k.name.clone(), k)?;
            let facts = vec![(nslope, spectrum.guaranteed)];
            return Ok(refute(rk, facts, r).map(|s| {
                steps.push(s);
                steps
            }));
        }
    }
    let g = k.genus.unwrap_or(0);
    if k.mirror_positive == Some(true) && g >= 1 && !r.is_positive() && !r.is_infinity() && r.p() != 0 {
        let neg = r.negate();
        if neg < Slope::integer(g as i64) {
            let mirror = format!("mirror of {}", k.name);
            steps.push(Step::OrientationReversal {
                manifold: format!("S^3_{r}({})", k.name),
                reversed: format!("S^3_{neg}({mirror})"),
            });
            let gs = Slope::integer(g as i64 - 1);
            let bound = positive_knot_spectrum(g, 0)?.guaranteed;
            steps.push(Step::PositiveKnotRank { knot: mirror.clone(), genus: g, slope: gs, rank_lower_bound: bound });
            let facts = if g >= 2 { vec![(gs, bound)] } else { vec![] };
            let rk = knot_for_kb(mirror, k)?;
            return Ok(refute(rk, facts, neg).map(|s| {
                steps.push(s);
                steps
            }));
        }
        return Ok(Err(format!("K̄ is positive of genus {g}, but the slope {r} is not above -{g}")));
    }
    if r.is_positive() {
        return Ok(Err(match k.sl_bar_mirror {
            Some(sl) => format!("s̄l(K̄) >= 0 (recorded s̄l(K̄) = {sl})"),
            None => "s̄l(K̄) >= 0 (s̄l(K̄) not recorded)".into(),
        }));
    }
    Ok(Err("for r < 0: K̄ positive of genus g with -g < r (positivity of the mirror not recorded)".into()))
}

fn refute(knot: RefutationKnot, facts: Vec<(Slope, u64)>, slope: Slope) -> std::result::Result<Step, String> {
    let kb = refutation_kb(&knot, &facts).map_err(|e| e.to_string())?;
    match kb.refute_lspace(slope) {
        Ok(Some(r)) => {
            let mut derivation: Vec<String> = r.chain().into_iter().map(render).collect();
            if let Some(c) = &r.contradiction {
                derivation.push(format!("contradiction: {}", c.description));
            }
            Ok(Step::LSpaceRefutation { knot, rank_facts: facts, slope, derivation })
        }
        Ok(None) => Err(format!("the L-space rules do not refute an L-space at {slope}")),
        Err(e) => Err(e.to_string()),
    }
}

fn certify_surgery(k: &KnotRecord, r: Slope) -> Result<Certificate> {
    let subject = format!("S^3_{r}({})", k.name);
    let mut cert = Certificate::new(subject.clone());
    if r.is_infinity() {
        return Ok(cert.abstain("S^3 is simply connected"));
    }
    if r.p() == 0 {
        return Ok(cert.abstain("a rational homology sphere (0-surgery has b1 = 1)"));
    }
    let p = r.p();
    cert.chain.push(Step::Homology {
        manifold: subject,
        source: HomologySource::Surgery { p },
        group: FiniteAbelianGroup::cyclic(p.unsigned_abs())?,
    });
    match surgery_not_lspace(k, r)? {
        Ok(steps) => cert.chain.extend(steps),
        Err(failure) => return Ok(cert.abstain(failure)),
    }
    if !cyclically_finite_surgery(&k.alexander, p)? {
        return Ok(cert.abstain(format!(
            "cyclical finiteness: a zero of Δ_K(t^2) is a {}th root of unity (Boyer-Nicas criterion fails)",
            p.abs()
        )));
    }
    cert.chain.push(Step::CyclicallyFiniteSurgery { alexander: poly_to_triples(&k.alexander)?, p: p.unsigned_abs() });
    cert.chain.push(Step::IrreducibleFromRank { h1_order: p.unsigned_abs() });
    Ok(cert.conclude(Conclusion::IrreducibleRep))
}

fn distinct_with_conjugates(vectors: impl IntoIterator<Item = Vec<i64>>) -> Vec<Vec<i64>> {
    let mut set = BTreeSet::new();
    for v in vectors {
        set.insert(v.iter().map(|x| -x).collect::<Vec<_>>());
        set.insert(v);
    }
    set.into_iter().collect()
}

fn certify_stein(model: &SteinHandlebodyModel, alternatives: &[Vec<i64>], cf: bool) -> Result<Certificate> {
    let mut cert = Certificate::new(format!("boundary of a Stein handlebody with {} handles", model.b2()));
    let form = model.framed_matrix();
    let Some(order) = h1_order(&form)? else {
        return Ok(cert.abstain("a rational homology sphere boundary (the linking matrix is singular)"));
    };
    let mut structures = vec![crate::stein::gompf_chern(model)];
    for rots in alternatives {
        structures.push(crate::stein::gompf_chern(&model.with_rotations(rots)?));
    }
    let group = FiniteAbelianGroup::new(invariant_factors(&form))?;
    debug_assert_eq!(group.order(), order);
    cert.chain.push(Step::Homology {
        manifold: "Y".into(),
        source: HomologySource::LinkingMatrix { matrix: form.clone() },
        group: group.clone(),
    });
    let vectors = distinct_with_conjugates(structures.iter().cloned());
    let bound = rank_lower_bound_from_stein(&vectors, true)?;
    if order == 1 {
        if model.b2() == 0 {
            return Ok(cert.abstain("a Stein domain that is not a homology ball"));
        }
        if structures.iter().any(|v| !is_zero(v)) {
            cert.chain.push(Step::SteinChernRank { chern_vectors: vectors, rank_lower_bound: bound });
            cert.chain.push(Step::NontrivialFromRank { rank_lower_bound: bound });
            return Ok(cert.conclude(Conclusion::NontrivialRep));
        }
        if definiteness(&form)? == Definiteness::NegativeDefinite {
            if diagonalizable_over_z(&form)? == Some(false) {
                cert.chain.push(Step::FroyshovBranch { form });
                return Ok(cert.conclude(Conclusion::NontrivialRep));
            }
            return Ok(cert.abstain("non-diagonalizable intersection form (could not be decided)"));
        }
        cert.chain.push(Step::DonaldsonBranch { form });
        return Ok(cert.conclude(Conclusion::NontrivialRep));
    }
    if bound <= order {
        return Ok(cert.abstain(format!("more than |H1| = {order} distinct Chern classes (found {bound})")));
    }
    cert.chain.push(Step::SteinChernRank { chern_vectors: vectors, rank_lower_bound: bound });
    if small_h1_cyclic_finite(&group) {
        cert.chain.push(Step::CyclicallyFiniteGroup { group });
    } else if cf {
        cert.chain.push(Step::CyclicallyFiniteAssumed);
    } else {
        return Ok(cert.abstain(format!("cyclical finiteness of π1 (H1 = {group}; supply evidence)")));
    }
    cert.chain.push(Step::IrreducibleFromRank { h1_order: order });
    Ok(cert.conclude(Conclusion::IrreducibleRep))
}

fn certify_seifert(data: &SeifertData) -> Result<Certificate> {
    let mut cert = Certificate::new(data.to_string());
    if data.h1_order() != 1 {
        return Ok(cert.abstain(format!("a homology sphere ({data} has |H1| = {})", data.h1_order())));
    }
    if data.num_fibers() <= 2 {
        return Ok(cert.abstain("a nontrivial Seifert homology sphere (at most two fibers gives S^3)"));
    }
    cert.chain.push(Step::Homology {
        manifold: data.to_string(),
        source: HomologySource::Seifert { data: data.clone() },
        group: FiniteAbelianGroup::trivial(),
    });
    let oriented = [data.clone(), data.reverse()].into_iter().find(|d| d.e() <= -2 && d.plumbing().c1_nonzero());
    let model = if let Some(d) = oriented {
        let plumbing = d.plumbing();
        let model = plumbing.stein_model()?;
        if d != *data {
            cert.chain.push(Step::OrientationReversal { manifold: data.to_string(), reversed: d.to_string() });
        }
        cert.chain.push(Step::SeifertPlumbing { data: d, plumbing });
        model
    } else if let Some(o) = filling_override(data) {
        if o.bounds != *data {
            cert.chain.push(Step::OrientationReversal { manifold: data.to_string(), reversed: o.bounds.to_string() });
        }
        cert.chain.push(Step::SeifertOverride {
            data: o.bounds.clone(),
            description: o.description.into(),
            model: o.model.clone(),
        });
        o.model
    } else {
        if sfs_lspace_classify(data)? {
            cert.chain.push(Step::LSpaceClassification { data: data.clone() });
            cert.caveat = Some(format!(
                "{ABSTAIN_NOTE}; here π1 is the binary icosahedral group, which does have irreducible SU(2) \
                 representations, but an instanton L-space gives no rank-based evidence"
            ));
            return Ok(cert.abstain("rank I# >= 2 (the manifold is an instanton L-space)"));
        }
        return Ok(cert.abstain("a Legendrian filling of Y or -Y with c1 != 0"));
    };
    let c = crate::stein::gompf_chern(&model);
    let vectors = distinct_with_conjugates([c]);
    let bound = rank_lower_bound_from_stein(&vectors, true)?;
    cert.chain.push(Step::SteinChernRank { chern_vectors: vectors, rank_lower_bound: bound });
    cert.chain.push(Step::NontrivialFromRank { rank_lower_bound: bound });
    Ok(cert.conclude(Conclusion::NontrivialRep))
}

fn certify_raw(h1: &FiniteAbelianGroup, lower: u64, exact: Option<u64>, cf: bool) -> Result<Certificate> {
    let n = h1.order();
    if let Some(e) = exact {
        if e < n {
            return Err(Error::Inconsistent(format!("rank {e} is below |H1| = {n}")));
        }
        if (e - n) % 2 == 1 {
            return Err(Error::Inconsistent(format!("rank {e} and |H1| = {n} differ in parity")));
        }
        if e < lower {
            return Err(Error::Inconsistent(format!("rank {e} is below the stated lower bound {lower}")));
        }
    }
    let bound = exact.unwrap_or(0).max(lower);
    let mut cert = Certificate::new(format!("Y with H1 = {h1}"));
    cert.chain.push(Step::Homology { manifold: "Y".into(), source: HomologySource::Given, group: h1.clone() });
    if n == 1 {
        if bound >= 2 {
            cert.chain.push(Step::NontrivialFromRank { rank_lower_bound: bound });
            return Ok(cert.conclude(Conclusion::NontrivialRep));
        }
        return Ok(cert.abstain("rank I# > |H1| = 1"));
    }
    if bound <= n {
        return Ok(cert.abstain(format!("rank I# > |H1| = {n}")));
    }
    if small_h1_cyclic_finite(h1) {
        cert.chain.push(Step::CyclicallyFiniteGroup { group: h1.clone() });
    } else if cf {
        cert.chain.push(Step::CyclicallyFiniteAssumed);
    } else {
        return Ok(cert.abstain(format!("cyclical finiteness of π1 (H1 = {h1}; supply evidence)")));
    }
    cert.chain.push(Step::IrreducibleFromRank { h1_order: n });
    Ok(cert.conclude(Conclusion::IrreducibleRep))
}
