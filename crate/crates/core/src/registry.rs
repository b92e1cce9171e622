//! Machine-checkable statements about loops, each evaluated over every loop
//! up to a given order (or over one supplied table).
//!
//! A statement is split into parts. An implication part is violated by a
//! table where its hypothesis holds and its conclusion fails; an iff is two
//! implication parts (forward and backward). A negative-existence part is
//! a search: it "holds" once an exhibit is found and otherwise reports
//! `refutation-not-found`.

use std::collections::BTreeMap;
use std::fmt::{self, Write};

use rayon::prelude::*;

use crate::autotopy::{self, Triple};
use crate::enumerate::{EnumerationJob, MAX_ENUMERATION_ORDER};
use crate::error::{Error, Result};
use crate::isotopy::{self, HarnessVerdict, IsotopeStatement};
use crate::perm::{is_subgroup, Perm};
use crate::props::{self, Property};
use crate::repr::{self, Hypothesis};
use crate::table::{LoopTable, Side};
use crate::text;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Iff,
    Implication,
    NegativeExistence,
    /// Implications together with a negative-existence search.
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartKind {
    Implication,
    NegativeExistence,
}

#[derive(Debug, Clone, Copy)]
pub struct PartSpec {
    pub label: &'static str,
    pub kind: PartKind,
    pub hypothesis: &'static str,
    pub conclusion: &'static str,
    /// What the witness tuple holds, if anything.
    pub tuple: &'static str,
}

const fn imp(label: &'static str, hypothesis: &'static str, conclusion: &'static str, tuple: &'static str) -> PartSpec {
    PartSpec { label, kind: PartKind::Implication, hypothesis, conclusion, tuple }
}

/// One registered statement.
pub struct TheoremSpec {
    pub id: &'static str,
    pub kind: Kind,
    pub statement: &'static str,
    pub parts: &'static [PartSpec],
    /// Orders above this are not swept (cost grows like `n!`).
    pub max_order: usize,
    eval: fn(&LoopTable) -> Vec<Observation>,
}

impl fmt::Debug for TheoremSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TheoremSpec").field("id", &self.id).field("kind", &self.kind).finish()
    }
}

/// The outcome of one part on one table.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Observation {
    pub hypothesis: bool,
    pub conclusion: bool,
    pub tuple: Option<Vec<usize>>,
    /// Free-form label counted over hypothesis-satisfying tables.
    pub tag: Option<String>,
}

impl Observation {
    fn new(hypothesis: bool, conclusion: bool) -> Self {
        Observation { hypothesis, conclusion, ..Default::default() }
    }

    /// Attaches the tuple from `locate` when the observation is a violation
    /// (implication) or an exhibit (negative existence).
    fn locate(mut self, locate: impl FnOnce() -> Option<Vec<usize>>) -> Self {
        if self.hypothesis && !self.conclusion {
            self.tuple = locate();
        }
        self
    }

    fn tagged(mut self, tag: impl FnOnce() -> String) -> Self {
        if self.hypothesis {
            self.tag = Some(tag());
        }
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    Vacuous,
    RefutationNotFound,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Vacuous => "vacuous",
            Verdict::RefutationNotFound => "refutation-not-found",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Counts {
    pub swept: usize,
    pub hypothesis: usize,
    /// Tables where the hypothesis and the conclusion both hold.
    pub conclusion: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub table: LoopTable,
    pub tuple: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartReport {
    pub label: &'static str,
    pub kind: PartKind,
    pub verdict: Verdict,
    pub counts: Counts,
    /// First violation, or first exhibit for a negative-existence part.
    pub witness: Option<Witness>,
    pub tags: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub id: &'static str,
    pub verdict: Verdict,
    pub max_order: usize,
    pub counts: Counts,
    pub parts: Vec<PartReport>,
}

impl TheoremReport {
    /// The first violating witness over all parts.
    pub fn witness(&self) -> Option<(&'static str, &Witness)> {
        self.parts
            .iter()
            .find(|p| p.verdict == Verdict::Violated)
            .and_then(|p| p.witness.as_ref().map(|w| (p.label, w)))
    }
}

/// Every loop of each order `1..=n_max`, enumerated once and shared.
pub struct Corpus {
    by_order: Vec<Vec<LoopTable>>,
}

impl Corpus {
    pub fn up_to(n_max: usize) -> Result<Self> {
        if n_max == 0 || n_max > MAX_ENUMERATION_ORDER {
            return Err(Error::OrderTooLarge { order: n_max, max: MAX_ENUMERATION_ORDER });
        }
        let by_order = (1..=n_max)
            .map(|n| EnumerationJob::new(n).collect_par())
            .collect::<Result<Vec<_>>>()?;
        Ok(Corpus { by_order })
    }

    pub fn max_order(&self) -> usize {
        self.by_order.len()
    }

    pub fn tables(&self, max_order: usize) -> impl Iterator<Item = &LoopTable> {
        self.by_order.iter().take(max_order).flatten()
    }
}

pub fn theorems() -> &'static [TheoremSpec] {
    &THEOREMS
}

pub fn lookup(id: &str) -> Result<&'static TheoremSpec> {
    THEOREMS.iter().find(|t| t.id == id).ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

/// Sweeps one statement over all loops of order `≤ min(n_max, max_order)`.
pub fn verify(id: &str, n_max: usize) -> Result<TheoremReport> {
    let spec = lookup(id)?;
    if n_max > MAX_ENUMERATION_ORDER || n_max == 0 {
        return Err(Error::OrderTooLarge { order: n_max, max: MAX_ENUMERATION_ORDER });
    }
    let corpus = Corpus::up_to(n_max.min(spec.max_order))?;
    Ok(verify_in(spec, &corpus))
}

/// Runs every registered statement against one shared corpus.
pub fn verify_all(n_max: usize) -> Result<Vec<TheoremReport>> {
    let corpus = Corpus::up_to(n_max)?;
    Ok(THEOREMS.iter().map(|spec| verify_in(spec, &corpus)).collect())
}

pub fn verify_in(spec: &TheoremSpec, corpus: &Corpus) -> TheoremReport {
    let max_order = spec.max_order.min(corpus.max_order());
    let tables: Vec<&LoopTable> = corpus.tables(max_order).collect();
    let observations: Vec<Vec<Observation>> = tables.par_iter().map(|t| (spec.eval)(t)).collect();
    assemble(spec, max_order, &tables, &observations)
}

/// Evaluates a statement on a single supplied table.
pub fn verify_table(id: &str, table: &LoopTable) -> Result<TheoremReport> {
    let spec = lookup(id)?;
    let obs = vec![(spec.eval)(table)];
    Ok(assemble(spec, table.order(), &[table], &obs))
}

/// Re-evaluates every violated part on its witness table and confirms the
/// violation reappears.
pub fn reproduce(report: &TheoremReport) -> Result<bool> {
    let spec = lookup(report.id)?;
    for (i, part) in report.parts.iter().enumerate() {
        if part.verdict != Verdict::Violated {
            continue;
        }
        let Some(w) = &part.witness else { return Ok(false) };
        let obs = &(spec.eval)(&w.table)[i];
        if !(obs.hypothesis && !obs.conclusion) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn assemble(spec: &TheoremSpec, max_order: usize, tables: &[&LoopTable], obs: &[Vec<Observation>]) -> TheoremReport {
    let parts: Vec<PartReport> = spec
        .parts
        .iter()
        .enumerate()
        .map(|(i, ps)| {
            let mut counts = Counts { swept: tables.len(), ..Default::default() };
            let mut witness = None;
            let mut tags = BTreeMap::new();
            for (t, o) in tables.iter().zip(obs) {
                let o = &o[i];
                if !o.hypothesis {
                    continue;
                }
                counts.hypothesis += 1;
                if o.conclusion {
                    counts.conclusion += 1;
                }
                if let Some(tag) = &o.tag {
                    *tags.entry(tag.clone()).or_insert(0) += 1;
                }
                let noteworthy = match ps.kind {
                    PartKind::Implication => !o.conclusion,
                    PartKind::NegativeExistence => o.conclusion,
                };
                if noteworthy && witness.is_none() {
                    witness = Some(Witness { table: (*t).clone(), tuple: o.tuple.clone() });
                }
            }
            let verdict = match ps.kind {
                PartKind::Implication if witness.is_some() => Verdict::Violated,
                PartKind::Implication if counts.hypothesis == 0 => Verdict::Vacuous,
                PartKind::Implication => Verdict::Holds,
                PartKind::NegativeExistence if witness.is_some() => Verdict::Holds,
                PartKind::NegativeExistence => Verdict::RefutationNotFound,
            };
            PartReport { label: ps.label, kind: ps.kind, verdict, counts, witness, tags }
        })
        .collect();

    let mut counts = Counts { swept: tables.len(), ..Default::default() };
    for o in obs {
        if o.iter().any(|p| p.hypothesis) {
            counts.hypothesis += 1;
            if o.iter().all(|p| !p.hypothesis || p.conclusion) {
                counts.conclusion += 1;
            }
        }
    }
    let verdict = if parts.iter().any(|p| p.verdict == Verdict::Violated) {
        Verdict::Violated
    } else if parts.iter().all(|p| p.verdict == Verdict::Vacuous) {
        Verdict::Vacuous
    } else if parts.iter().any(|p| p.verdict == Verdict::RefutationNotFound) {
        Verdict::RefutationNotFound
    } else {
        Verdict::Holds
    };
    TheoremReport { id: spec.id, verdict, max_order, counts, parts }
}

/// One line per registered statement: id, kind, order cap and part labels.
/// The checked-in `theorems.manifest` must match this exactly.
pub fn manifest() -> String {
    let mut out = String::from("# id kind max_order parts\n");
    for t in THEOREMS.iter() {
        let kind = match t.kind {
            Kind::Iff => "iff",
            Kind::Implication => "implication",
            Kind::NegativeExistence => "negative-existence",
            Kind::Mixed => "mixed",
        };
        let parts: Vec<&str> = t.parts.iter().map(|p| p.label).collect();
        writeln!(out, "{} {} {} {}", t.id, kind, t.max_order, parts.join(",")).unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// Report serialization

/// Aligned human-readable summary.
pub fn render_human(reports: &[TheoremReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let spec = lookup(r.id).expect("report of a registered statement");
        writeln!(
            out,
            "{:<8} {:<21} orders<={}  swept {:>5}  hypothesis {:>5}  conclusion {:>5}  {}",
            r.id, r.verdict, r.max_order, r.counts.swept, r.counts.hypothesis, r.counts.conclusion, spec.statement
        )
        .unwrap();
        for (p, ps) in r.parts.iter().zip(spec.parts) {
            write!(
                out,
                "    {:<24} {:<21} hypothesis {:>5}  conclusion {:>5}  [{} => {}]",
                p.label, p.verdict, p.counts.hypothesis, p.counts.conclusion, ps.hypothesis, ps.conclusion
            )
            .unwrap();
            if !p.tags.is_empty() {
                let tags: Vec<String> = p.tags.iter().map(|(k, v)| format!("{k}:{v}")).collect();
                write!(out, "  {{{}}}", tags.join(", ")).unwrap();
            }
            out.push('\n');
            if let Some(w) = &p.witness {
                let label = if p.verdict == Verdict::Violated { "counterexample" } else { "exhibit" };
                if let Some(t) = &w.tuple {
                    writeln!(out, "        {label} at {} = {:?}", ps.tuple, t).unwrap();
                } else {
                    writeln!(out, "        {label}:").unwrap();
                }
                for line in text::emit(&w.table).lines() {
                    writeln!(out, "        {line}").unwrap();
                }
            }
        }
    }
    out
}

/// One `key=value` record per statement and per part.
pub fn render_machine(reports: &[TheoremReport]) -> String {
    let mut out = String::new();
    for r in reports {
        writeln!(
            out,
            "id={} verdict={} max_order={} swept={} hypothesis={} conclusion={}",
            r.id, r.verdict, r.max_order, r.counts.swept, r.counts.hypothesis, r.counts.conclusion
        )
        .unwrap();
        for p in &r.parts {
            write!(
                out,
                "id={} part={} verdict={} swept={} hypothesis={} conclusion={}",
                r.id, p.label, p.verdict, p.counts.swept, p.counts.hypothesis, p.counts.conclusion
            )
            .unwrap();
            if let Some(w) = &p.witness {
                if let Some(t) = &w.tuple {
                    let t: Vec<String> = t.iter().map(|v| v.to_string()).collect();
                    write!(out, " witness_tuple={}", t.join(",")).unwrap();
                }
                write!(out, " witness_table={}", text::emit_inline(&w.table)).unwrap();
            }
            out.push('\n');
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Statement encodings

fn iff(a: bool, b: bool, a_cex: impl FnOnce() -> Option<Vec<usize>>, b_cex: impl FnOnce() -> Option<Vec<usize>>) -> [Observation; 2] {
    [Observation::new(a, b).locate(b_cex), Observation::new(b, a).locate(a_cex)]
}

fn forall1(l: &LoopTable, f: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    l.elements().find(|&y| !f(y)).map(|y| vec![y])
}

fn forall2(l: &LoopTable, f: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    l.elements()
        .flat_map(|x| l.elements().map(move |y| (x, y)))
        .find(|&(x, y)| !f(x, y))
        .map(|(x, y)| vec![x, y])
}

fn lc_or_rc(side: Side) -> Property {
    match side {
        Side::Left => Property::Lc,
        Side::Right => Property::Rc,
    }
}

fn closure_iff(l: &LoopTable, check: fn(&LoopTable, Side) -> bool) -> Vec<Observation> {
    [Side::Left, Side::Right]
        .into_iter()
        .flat_map(|side| {
            let p = lc_or_rc(side);
            iff(p.holds(l), check(l, side), || p.counterexample(l), || None)
        })
        .collect()
}

fn eval_d1_1(l: &LoopTable) -> Vec<Observation> {
    vec![
        Observation::new(true, repr::is_representation(&repr::pi_lambda(l))),
        Observation::new(true, repr::is_representation(&repr::pi_rho(l))),
    ]
}

fn eval_d0_6(l: &LoopTable) -> Vec<Observation> {
    [(Property::Lc, Property::Lip), (Property::Rc, Property::Rip), (Property::C, Property::Ip)]
        .into_iter()
        .map(|(h, c)| Observation::new(h.holds(l), c.holds(l)).locate(|| c.counterexample(l)))
        .collect()
}

fn eval_l0_1(l: &LoopTable) -> Vec<Observation> {
    closure_iff(l, repr::lemma_0_1_closure)
}

fn eval_l0_2(l: &LoopTable) -> Vec<Observation> {
    closure_iff(l, repr::lemma_0_2_commutation)
}

fn eval_t0_3(l: &LoopTable) -> Vec<Observation> {
    closure_iff(l, repr::theorem_0_3_closure)
}

fn eval_t0_4(l: &LoopTable) -> Vec<Observation> {
    let cs = props::is_centrum_square(l);
    [Side::Left, Side::Right]
        .into_iter()
        .flat_map(|side| {
            let standing = lc_or_rc(side).holds(l);
            let closure = standing
                && repr::theorem_0_4_closure(l, side, Hypothesis::Enforce).map(|e| e.value).unwrap_or(false);
            [
                Observation::new(standing && closure, cs).locate(|| Property::CentrumSquare.counterexample(l)),
                Observation::new(standing && cs, closure),
            ]
        })
        .collect()
}

fn eval_c0_5(l: &LoopTable) -> Vec<Observation> {
    let cs = props::is_centrum_square(l);
    [Side::Left, Side::Right]
        .into_iter()
        .flat_map(|side| {
            let p = lc_or_rc(side);
            let rhs = p.holds(l) && cs;
            iff(repr::corollary_0_5_check(l, side), rhs, || None, || None)
        })
        .collect()
}

fn eval_t1_1(l: &LoopTable) -> Vec<Observation> {
    [Side::Left, Side::Right]
        .into_iter()
        .flat_map(|side| {
            let p = lc_or_rc(side);
            let triple_ok = |y| autotopy::is_autotopism(l, &autotopy::thm_1_1_triple(l, y, side).unwrap()).unwrap();
            let all = forall1(l, triple_ok).is_none();
            iff(p.holds(l), all, || p.counterexample(l), || forall1(l, triple_ok))
        })
        .collect()
}

fn eval_c1_2(l: &LoopTable) -> Vec<Observation> {
    [Side::Left, Side::Right]
        .into_iter()
        .map(|side| {
            let ok = |x, y| autotopy::is_autotopism(l, &autotopy::cor_1_2_triple(l, x, y, side).unwrap()).unwrap();
            let hyp = lc_or_rc(side).holds(l);
            let cex = if hyp { forall2(l, ok) } else { None };
            Observation { hypothesis: hyp, conclusion: cex.is_none(), tuple: cex, tag: None }
        })
        .collect()
}

fn eval_t1_3(l: &LoopTable) -> Vec<Observation> {
    let c = props::is_c(l);
    let left = props::is_lc(l) && props::is_right_alternative(l);
    let right = props::is_rc(l) && props::is_left_alternative(l);
    let mut v = iff(c, left, || Property::C.counterexample(l), || None).to_vec();
    v.extend(iff(c, right, || Property::C.counterexample(l), || None));
    v
}

fn eval_l1_4(l: &LoopTable) -> Vec<Observation> {
    let sq = |p: &Perm| p * p;
    type PairAt<'a> = Box<dyn Fn(usize) -> (Perm, Perm) + 'a>;
    let forms: [(Property, PairAt); 3] = [
        (Property::Lc, Box::new(|y| (l.rt(l.square(y)), sq(&l.lt(y))))),
        (Property::Rc, Box::new(|y| (sq(&l.rt(y)), l.lt(l.square(y))))),
        (Property::C, Box::new(|y| (sq(&l.rt(y)), sq(&l.lt(y))))),
    ];
    forms
        .iter()
        .flat_map(|(p, pair)| {
            let ok = |y| {
                let (u, v) = pair(y);
                autotopy::is_mu_regular_pair(l, &u, &v)
            };
            let all = forall1(l, ok).is_none();
            iff(p.holds(l), all, || p.counterexample(l), || forall1(l, ok))
        })
        .collect()
}

fn eval_isotope_statement(l: &LoopTable, statement: IsotopeStatement) -> Vec<Observation> {
    [Side::Left, Side::Right]
        .into_iter()
        .map(|side| {
            let g_ok = match (statement, side) {
                (IsotopeStatement::Theorem, Side::Left) => props::is_lc(l),
                (IsotopeStatement::Theorem, Side::Right) => props::is_rc(l),
                (IsotopeStatement::Corollary, Side::Left) => props::is_rc(l) && props::is_left_alternative(l),
                (IsotopeStatement::Corollary, Side::Right) => props::is_lc(l) && props::is_right_alternative(l),
            } && props::is_central_square(l);
            if !g_ok {
                return Observation::new(false, true);
            }
            let mut obs = Observation::new(false, true);
            for (h, t, p) in isotopy::shaped_principal_isotopes(l, side) {
                let r = isotopy::isotope_harness(l, &h, &t, side, statement).unwrap();
                obs.hypothesis |= r.hypotheses_met;
                if r.verdict == HarnessVerdict::Violated && obs.conclusion {
                    obs.conclusion = false;
                    obs.tuple = Some(vec![p]);
                }
            }
            obs
        })
        .collect()
}

fn eval_t1_5(l: &LoopTable) -> Vec<Observation> {
    eval_isotope_statement(l, IsotopeStatement::Theorem)
}

fn eval_c1_6(l: &LoopTable) -> Vec<Observation> {
    eval_isotope_statement(l, IsotopeStatement::Corollary)
}

/// `(C-loop, condition 1 for all z, condition 2 for all z)`.
fn exp4_hypotheses(l: &LoopTable) -> (bool, bool, bool) {
    match autotopy::exp4_conditions(l) {
        Some((a, b)) => (props::is_c(l), a, b),
        None => (false, false, false),
    }
}

fn exponent_divides_4(l: &LoopTable) -> bool {
    l.exponent().is_some_and(|e| e.divides(4))
}

fn exponent_tag(l: &LoopTable) -> String {
    format!("exponent {}", l.exponent().map(|e| e.value).unwrap_or(0))
}

fn eval_t5_exp4(l: &LoopTable) -> Vec<Observation> {
    let (c, a, b) = exp4_hypotheses(l);
    let e4 = exponent_divides_4(l);
    vec![
        Observation::new(c && a, e4).tagged(|| exponent_tag(l)),
        Observation::new(c && b, e4).tagged(|| exponent_tag(l)),
    ]
}

fn eval_t5_csq(l: &LoopTable) -> Vec<Observation> {
    let (c, a, b) = exp4_hypotheses(l);
    let hyp = c && a && b;
    vec![Observation::new(hyp, hyp && props::is_central_square(l) && exponent_divides_4(l))
        .locate(|| Property::CentralSquare.counterexample(l))]
}

fn eval_t1_8(l: &LoopTable) -> Vec<Observation> {
    if !props::is_c(l) {
        return vec![Observation::new(false, true), Observation::new(false, true), Observation::new(false, false)];
    }
    let aut = autotopy::autotopism_group(l).expect("order within AUT cap");
    let first_bad = |f: fn(&LoopTable, &Triple) -> Result<Triple>| {
        aut.iter().position(|a| !autotopy::is_autotopism(l, &f(l, a).unwrap()).unwrap())
    };
    let mu = first_bad(autotopy::transform_mu);
    let lambda = first_bad(autotopy::transform_lambda);

    // The specific autotopisms (I, R_x², R_x²) and (L_x², I, L_x²) of a
    // C-loop; an exhibit is one whose A_ρ is not an autotopism.
    let n = l.order();
    let exhibit = l.elements().find_map(|x| {
        let rx2 = &l.rt(x) * &l.rt(x);
        let lx2 = &l.lt(x) * &l.lt(x);
        let candidates = [
            Triple { u: Perm::identity(n), v: rx2.clone(), w: rx2 },
            Triple { u: lx2.clone(), v: Perm::identity(n), w: lx2 },
        ];
        candidates.iter().enumerate().find_map(|(k, a)| {
            let in_aut = autotopy::is_autotopism(l, a).unwrap();
            let rho = autotopy::transform_rho(l, a).unwrap();
            (in_aut && !autotopy::is_autotopism(l, &rho).unwrap()).then(|| vec![x, k])
        })
    });
    vec![
        Observation { hypothesis: true, conclusion: mu.is_none(), tuple: mu.map(|i| vec![i]), tag: None },
        Observation { hypothesis: true, conclusion: lambda.is_none(), tuple: lambda.map(|i| vec![i]), tag: None },
        Observation { hypothesis: true, conclusion: exhibit.is_some(), tuple: exhibit, tag: None },
    ]
}

fn eval_c1_9(l: &LoopTable) -> Vec<Observation> {
    let (c, a, b) = exp4_hypotheses(l);
    let hyp = c && a && b;
    let concl = [Property::Flexible, Property::SquaresCommute, Property::CubeAntiautomorphism];
    vec![Observation::new(hyp, hyp && concl.iter().all(|p| p.holds(l)))
        .locate(|| concl.iter().find_map(|p| p.counterexample(l)))]
}

fn eval_t1_10(l: &LoopTable) -> Vec<Observation> {
    let hyp = props::is_c(l) && props::is_central_square(l) && exponent_divides_4(l);
    let bad = if hyp { autotopy::nontrivial_right_inner_map(l) } else { None };
    vec![Observation { hypothesis: hyp, conclusion: bad.is_none(), tuple: bad.map(|(x, y)| vec![x, y]), tag: None }
        .tagged(|| exponent_tag(l))]
}

fn eval_c1_11(l: &LoopTable) -> Vec<Observation> {
    let (c, a, b) = exp4_hypotheses(l);
    let hyp = c && a && b;
    vec![Observation::new(hyp, hyp && props::is_associative(l))
        .locate(|| Property::Associative.counterexample(l))
        .tagged(|| exponent_tag(l))]
}

fn all_pairs_check(l: &LoopTable, f: fn(&LoopTable, usize, usize) -> Result<bool>) -> Observation {
    let bad = forall2(l, |a, b| f(l, a, b).expect("order within AUT cap"));
    Observation { hypothesis: true, conclusion: bad.is_none(), tuple: bad, tag: None }
}

fn eval_t2_1(l: &LoopTable) -> Vec<Observation> {
    vec![all_pairs_check(l, isotopy::aut_invariance_check)]
}

fn eval_t2_2(l: &LoopTable) -> Vec<Observation> {
    let phi = autotopy::mu_regular_set(l).expect("order within AUT cap");
    let us: Vec<Perm> = phi.iter().map(|e| e.u().clone()).collect();
    let n = l.order();
    // xU·y = x·yV makes (U, V⁻¹, I) an autotopism, so U ∈ Σ.
    let outside_sigma = phi.iter().position(|e| {
        let t = Triple { u: e.u().clone(), v: e.adjoint().inverse(), w: Perm::identity(n) };
        !autotopy::is_autotopism(l, &t).unwrap()
    });
    let aut = autotopy::autotopism_group(l).expect("order within AUT cap");
    vec![
        Observation::new(true, is_subgroup(&us)),
        Observation { hypothesis: true, conclusion: outside_sigma.is_none(), tuple: outside_sigma.map(|i| vec![i]), tag: None },
        Observation::new(true, is_subgroup(&aut)),
    ]
}

fn eval_c2_3(l: &LoopTable) -> Vec<Observation> {
    vec![all_pairs_check(l, isotopy::phi_invariance_check)]
}

const IFF_SIDES: &[PartSpec] = &[
    imp("left-forward", "LC", "left closure", "(x,y,z) falsifying LC"),
    imp("left-backward", "left closure", "LC", "(x,y,z) falsifying LC"),
    imp("right-forward", "RC", "right closure", "(x,y,z) falsifying RC"),
    imp("right-backward", "right closure", "RC", "(x,y,z) falsifying RC"),
];

static THEOREMS: [TheoremSpec; 22] = [
    TheoremSpec {
        id: "D1.1",
        kind: Kind::Implication,
        statement: "left and right translation sets satisfy the representation axioms",
        parts: &[
            imp("left", "loop", "Pi_lambda is a representation", ""),
            imp("right", "loop", "Pi_rho is a representation", ""),
        ],
        max_order: 6,
        eval: eval_d1_1,
    },
    TheoremSpec {
        id: "D0.6",
        kind: Kind::Implication,
        statement: "LC-loops are LIP, RC-loops are RIP, C-loops are IP",
        parts: &[
            imp("lc-lip", "LC", "LIP", "(x,y) falsifying LIP"),
            imp("rc-rip", "RC", "RIP", "(x,y) falsifying RIP"),
            imp("c-ip", "C", "IP", "(x,y) falsifying IP"),
        ],
        max_order: 6,
        eval: eval_d0_6,
    },
    TheoremSpec {
        id: "L0.1",
        kind: Kind::Iff,
        statement: "LC iff R_{y^2} R_z = R_{y.yz}; RC iff L_{y^2} L_z = L_{zy.y}",
        parts: IFF_SIDES,
        max_order: 6,
        eval: eval_l0_1,
    },
    TheoremSpec {
        id: "L0.2",
        kind: Kind::Iff,
        statement: "LC iff L_x^2 commutes with every R_z; RC iff R_x^2 commutes with every L_z",
        parts: IFF_SIDES,
        max_order: 6,
        eval: eval_l0_2,
    },
    TheoremSpec {
        id: "T0.3",
        kind: Kind::Iff,
        statement: "LC iff L_y^2 L_x in Pi_lambda; RC iff R_y^2 R_x in Pi_rho",
        parts: IFF_SIDES,
        max_order: 6,
        eval: eval_t0_3,
    },
    TheoremSpec {
        id: "T0.4",
        kind: Kind::Iff,
        statement: "in an LC (RC) loop: centrum square iff R_z R_{y^2} = R_{y.yz} (L_z L_{y^2} = L_{zy.y})",
        parts: &[
            imp("left-forward", "LC and left closure", "centrum square", "x with x^2 outside the centrum, and y"),
            imp("left-backward", "LC and centrum square", "left closure", ""),
            imp("right-forward", "RC and right closure", "centrum square", "x with x^2 outside the centrum, and y"),
            imp("right-backward", "RC and centrum square", "right closure", ""),
        ],
        max_order: 6,
        eval: eval_t0_4,
    },
    TheoremSpec {
        id: "C0.5",
        kind: Kind::Iff,
        statement: "centrum square LC (RC) iff both closure conditions hold",
        parts: &[
            imp("left-forward", "left closures", "LC and centrum square", ""),
            imp("left-backward", "LC and centrum square", "left closures", ""),
            imp("right-forward", "right closures", "RC and centrum square", ""),
            imp("right-backward", "RC and centrum square", "right closures", ""),
        ],
        max_order: 6,
        eval: eval_c0_5,
    },
    TheoremSpec {
        id: "T1.1",
        kind: Kind::Iff,
        statement: "LC iff (R_{y^2}, L_y^-2, I) in AUT; RC iff (R_y^2, L_{y^2}^-1, I) in AUT",
        parts: &[
            imp("left-forward", "LC", "all left triples in AUT", "y"),
            imp("left-backward", "all left triples in AUT", "LC", "(x,y,z) falsifying LC"),
            imp("right-forward", "RC", "all right triples in AUT", "y"),
            imp("right-backward", "all right triples in AUT", "RC", "(x,y,z) falsifying RC"),
        ],
        max_order: 6,
        eval: eval_t1_1,
    },
    TheoremSpec {
        id: "C1.2",
        kind: Kind::Implication,
        statement: "LC: (R_{y^2} L_x^2, L_y^-2, L_x^2) in AUT; RC: (R_y^2, L_{y^2}^-1 R_x^2, R_x^2) in AUT",
        parts: &[
            imp("left", "LC", "all left triples in AUT", "(x,y)"),
            imp("right", "RC", "all right triples in AUT", "(x,y)"),
        ],
        max_order: 6,
        eval: eval_c1_2,
    },
    TheoremSpec {
        id: "T1.3",
        kind: Kind::Iff,
        statement: "C iff right alternative LC iff left alternative RC",
        parts: &[
            imp("left-forward", "C", "LC and right alternative", "(x,y,z) falsifying C"),
            imp("left-backward", "LC and right alternative", "C", "(x,y,z) falsifying C"),
            imp("right-forward", "C", "RC and left alternative", "(x,y,z) falsifying C"),
            imp("right-backward", "RC and left alternative", "C", "(x,y,z) falsifying C"),
        ],
        max_order: 6,
        eval: eval_t1_3,
    },
    TheoremSpec {
        id: "L1.4",
        kind: Kind::Iff,
        statement: "LC (RC, C) iff R_{y^2} (R_y^2, R_y^2) is mu-regular with adjoint L_y^2 (L_{y^2}, L_y^2)",
        parts: &[
            imp("lc-forward", "LC", "(R_{y^2}, L_y^2) mu-regular", "y"),
            imp("lc-backward", "(R_{y^2}, L_y^2) mu-regular", "LC", "(x,y,z) falsifying LC"),
            imp("rc-forward", "RC", "(R_y^2, L_{y^2}) mu-regular", "y"),
            imp("rc-backward", "(R_y^2, L_{y^2}) mu-regular", "RC", "(x,y,z) falsifying RC"),
            imp("c-forward", "C", "(R_y^2, L_y^2) mu-regular", "y"),
            imp("c-backward", "(R_y^2, L_y^2) mu-regular", "C", "(x,y,z) falsifying C"),
        ],
        max_order: 6,
        eval: eval_l1_4,
    },
    TheoremSpec {
        id: "T1.5",
        kind: Kind::Implication,
        statement: "central square LC (RC) G, alternative central square H, (A,B,B) ((A,B,A)) isotopism => H is C",
        parts: &[
            imp("left", "hypotheses with (A,B,B)", "H is C", "a of the principal isotope (a, 0)"),
            imp("right", "hypotheses with (A,B,A)", "H is C", "b of the principal isotope (0, b)"),
        ],
        max_order: 6,
        eval: eval_t1_5,
    },
    TheoremSpec {
        id: "C1.6",
        kind: Kind::Implication,
        statement: "as T1.5 with G a central square left alternative RC (right alternative LC) loop",
        parts: &[
            imp("left", "hypotheses with (A,B,B)", "H is C", "a of the principal isotope (a, 0)"),
            imp("right", "hypotheses with (A,B,A)", "H is C", "b of the principal isotope (0, b)"),
        ],
        max_order: 6,
        eval: eval_c1_6,
    },
    TheoremSpec {
        id: "T5.exp4",
        kind: Kind::Implication,
        statement: "C-loop with (I, L_z^2, J L_z^2 J) or (R_z^2, I, J R_z^2 J) in AUT for all z has exponent 4",
        parts: &[
            imp("condition-1", "C and condition 1", "exponent divides 4", ""),
            imp("condition-2", "C and condition 2", "exponent divides 4", ""),
        ],
        max_order: 6,
        eval: eval_t5_exp4,
    },
    TheoremSpec {
        id: "T5.csq",
        kind: Kind::Implication,
        statement: "C-loop with both conditions is central square of exponent 4",
        parts: &[imp("both", "C and both conditions", "central square, exponent divides 4", "(x,y,z) falsifying central square")],
        max_order: 6,
        eval: eval_t5_csq,
    },
    TheoremSpec {
        id: "T1.8",
        kind: Kind::Mixed,
        statement: "in a C-loop A_mu, A_lambda in AUT for A in AUT; A_rho not in general",
        parts: &[
            imp("a-mu", "C", "A_mu in AUT for all A", "index of A in sorted AUT"),
            imp("a-lambda", "C", "A_lambda in AUT for all A", "index of A in sorted AUT"),
            PartSpec {
                label: "a-rho-not-in-aut",
                kind: PartKind::NegativeExistence,
                hypothesis: "C",
                conclusion: "some A with A_rho outside AUT",
                tuple: "(x, k): k=0 for (I,R_x^2,R_x^2), k=1 for (L_x^2,I,L_x^2)",
            },
        ],
        max_order: 6,
        eval: eval_t1_8,
    },
    TheoremSpec {
        id: "C1.9",
        kind: Kind::Implication,
        statement: "C-loop with both conditions: flexible, (xy)^2 = (yx)^2, x -> x^3 anti-automorphism",
        parts: &[imp("both", "C and both conditions", "flexible, squares commute, cube anti", "first falsifying tuple")],
        max_order: 6,
        eval: eval_c1_9,
    },
    TheoremSpec {
        id: "T1.10",
        kind: Kind::Implication,
        statement: "a central square C-loop of exponent 4 is a group",
        parts: &[imp("all", "C, central square, exponent divides 4", "R(x,y) = I", "(x,y)")],
        max_order: 6,
        eval: eval_t1_10,
    },
    TheoremSpec {
        id: "C1.11",
        kind: Kind::Implication,
        statement: "C-loop with both conditions is a group",
        parts: &[imp("both", "C and both conditions", "associative", "(x,y,z)")],
        max_order: 6,
        eval: eval_c1_11,
    },
    TheoremSpec {
        id: "T2.1",
        kind: Kind::Implication,
        statement: "isotopic loops have isomorphic autotopism groups (order and element-order multiset)",
        parts: &[imp("principal-isotopes", "loop", "AUT invariants agree for all (a,b)", "(a,b)")],
        max_order: 5,
        eval: eval_t2_1,
    },
    TheoremSpec {
        id: "T2.2",
        kind: Kind::Implication,
        statement: "mu-regular bijections form a subgroup of the autotopic bijections",
        parts: &[
            imp("phi-subgroup", "loop", "Phi closed under composition and inverse", ""),
            imp("phi-in-sigma", "loop", "every mu-regular U is autotopic", "index of U in Phi"),
            imp("aut-group", "loop", "AUT closed under composition and inverse", ""),
        ],
        max_order: 5,
        eval: eval_t2_2,
    },
    TheoremSpec {
        id: "C2.3",
        kind: Kind::Implication,
        statement: "isotopic loops have isomorphic Phi and Phi* (order and element-order multiset)",
        parts: &[imp("principal-isotopes", "loop", "Phi and Phi* invariants agree for all (a,b)", "(a,b)")],
        max_order: 5,
        eval: eval_c2_3,
    },
];
