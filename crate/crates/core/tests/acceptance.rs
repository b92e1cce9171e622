//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use loopkit::autotopy;
use loopkit::enumerate::{count_loops, EnumerationJob};
use loopkit::isotopy;
use loopkit::perm::is_subgroup;
use loopkit::props::{self, Property};
use loopkit::repr::{self, Hypothesis};
use loopkit::{text, LoopTable, Perm, Side};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn corpus(n_max: usize) -> Vec<LoopTable> {
    (1..=n_max).flat_map(|n| EnumerationJob::new(n).collect_par().unwrap()).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn discrepancies(loops: &[LoopTable], agree: impl Fn(&LoopTable) -> bool) -> usize {
    loops.iter().filter(|l| !agree(l)).count()
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || format!("{what} took {elapsed:.2?}, limit {limit:?}"))
}

fn c1_enumeration() -> Outcome {
    let want = [1u64, 1, 1, 4, 56, 9408];
    let oracle: Vec<u64> = (1..=6).map(|n| common::naive_loops(n).len() as u64).collect();
    ensure(oracle == want, || format!("oracle counts {oracle:?}"))?;
    let start = Instant::now();
    let small: Vec<u64> = (1..=5).map(|n| count_loops(n, &[]).unwrap()).collect();
    within(start.elapsed(), Duration::from_secs(1), "n <= 5")?;
    let start = Instant::now();
    let six = count_loops(6, &[]).unwrap();
    let t6 = start.elapsed();
    within(t6, Duration::from_secs(120), "n = 6")?;
    let ours: Vec<u64> = small.into_iter().chain([six]).collect();
    ensure(ours == want, || format!("counts {ours:?}"))?;
    Ok(format!("counts {ours:?} match the row oracle; n = 6 in {t6:.2?}"))
}

fn c2_equivalences() -> Outcome {
    let start = Instant::now();
    let loops = corpus(5);
    let mut bad = 0;
    for side in [Side::Left, Side::Right] {
        let p = if side == Side::Left { Property::Lc } else { Property::Rc };
        bad += discrepancies(&loops, |l| {
            let base = p.holds(l);
            base == repr::lemma_0_1_closure(l, side)
                && base == repr::lemma_0_2_commutation(l, side)
                && base == repr::theorem_0_3_closure(l, side)
        });
    }
    within(start.elapsed(), Duration::from_secs(5), "suite")?;
    ensure(bad == 0, || format!("{bad} discrepancies"))?;
    Ok(format!("{} loops, both sides, 0 discrepancies in {:.2?}", loops.len(), start.elapsed()))
}

fn c3_theorem_0_4() -> Outcome {
    let loops = corpus(5);
    let mut bad = 0;
    let mut domain = 0;
    for side in [Side::Left, Side::Right] {
        let p = if side == Side::Left { Property::Lc } else { Property::Rc };
        let standing: Vec<_> = loops.iter().filter(|l| p.holds(l)).cloned().collect();
        domain += standing.len();
        bad += discrepancies(&standing, |l| {
            let cs = props::is_centrum_square(l);
            repr::theorem_0_4_closure(l, side, Hypothesis::Enforce).unwrap().value == cs
                && repr::corollary_0_5_check(l, side) == (p.holds(l) && cs)
        });
        bad += discrepancies(&loops, |l| repr::corollary_0_5_check(l, side) == (p.holds(l) && props::is_centrum_square(l)));
    }
    ensure(bad == 0, || format!("{bad} discrepancies"))?;
    Ok(format!("{domain} LC/RC instances, 0 discrepancies"))
}

fn c4_autotopism_triples() -> Outcome {
    let loops = corpus(5);
    let mut bad = 0;
    let mut lc = 0;
    for l in &loops {
        let is_lc = props::is_lc(l);
        let thm = l.elements().all(|y| {
            autotopy::is_autotopism(l, &autotopy::thm_1_1_triple(l, y, Side::Left).unwrap()).unwrap()
        });
        bad += usize::from(is_lc != thm);
        if is_lc {
            lc += 1;
            let cor = l.elements().all(|x| {
                l.elements().all(|y| {
                    autotopy::is_autotopism(l, &autotopy::cor_1_2_triple(l, x, y, Side::Left).unwrap()).unwrap()
                })
            });
            let phi = autotopy::mu_regular_set(l).unwrap();
            let lemma = l.elements().all(|y| {
                let u = l.right_translation(l.square(y)).unwrap();
                let ly = l.left_translation(y).unwrap();
                let v: Perm = &ly * &ly;
                phi.iter().any(|e| e.u() == &u && e.adjoint() == &v)
            });
            bad += usize::from(!cor) + usize::from(!lemma);
        }
    }
    ensure(bad == 0, || format!("{bad} discrepancies"))?;
    Ok(format!("{} loops ({lc} LC), 0 discrepancies", loops.len()))
}

fn c5_theorem_1_3() -> Outcome {
    let loops = corpus(5);
    let bad = discrepancies(&loops, |l| {
        let c = props::is_c(l);
        c == (props::is_lc(l) && props::is_right_alternative(l)) && c == (props::is_rc(l) && props::is_left_alternative(l))
    });
    ensure(bad == 0, || format!("{bad} discrepancies"))?;
    Ok(format!("{} loops, 0 discrepancies", loops.len()))
}

fn c6_exponent_four() -> Outcome {
    let loops = corpus(6);
    let with_j = loops.iter().filter(|l| l.has_two_sided_inverses()).count();
    let mut meeting = 0;
    let mut meeting_c = 0;
    let mut violations = 0;
    for l in &loops {
        let Some((a, b)) = autotopy::exp4_conditions(l) else { continue };
        if !(a && b) {
            continue;
        }
        meeting += 1;
        let ok = l.exponent().is_some_and(|e| e.divides(4))
            && props::is_central_square(l)
            && props::is_flexible(l)
            && props::squares_commute_check(l)
            && props::cube_antiautomorphism_check(l);
        violations += usize::from(!ok);
        if props::is_c(l) {
            meeting_c += 1;
            violations += usize::from(autotopy::nontrivial_right_inner_map(l).is_some());
        }
    }
    ensure(violations == 0, || format!("{violations} violations"))?;
    Ok(format!(
        "{} loops, {with_j} with two-sided inverses, {meeting} meet both conditions ({meeting_c} C), 0 violations",
        loops.len()
    ))
}

fn c7_transforms() -> Outcome {
    let c_loops: Vec<_> = corpus(6).into_iter().filter(props::is_c).collect();
    let mut violations = 0;
    let mut checked = 0;
    for l in &c_loops {
        for a in autotopy::autotopism_group(l).unwrap() {
            checked += 1;
            for t in [autotopy::transform_mu(l, &a).unwrap(), autotopy::transform_lambda(l, &a).unwrap()] {
                violations += usize::from(!autotopy::is_autotopism(l, &t).unwrap());
            }
        }
    }
    ensure(violations == 0, || format!("{violations} violations"))?;
    let rho = loopkit::registry::verify("T1.8", 6).unwrap();
    let part = &rho.parts[2];
    let search = match &part.witness {
        Some(w) => format!("A_rho exhibit at order {} tuple {:?}", w.table.order(), w.tuple.as_deref().unwrap_or(&[])),
        None => "A_rho search: refutation-not-found".to_string(),
    };
    Ok(format!("{} C-loops, {checked} autotopisms, 0 violations; {search}", c_loops.len()))
}

fn c8_isotope_invariants() -> Outcome {
    let loops = corpus(5);
    let mut violations = 0;
    let mut isotopes = 0;
    for l in &loops {
        for a in l.elements() {
            for b in l.elements() {
                isotopes += 1;
                violations += usize::from(!isotopy::aut_invariance_check(l, a, b).unwrap());
                violations += usize::from(!isotopy::phi_invariance_check(l, a, b).unwrap());
            }
        }
    }
    let small: Vec<_> = loops.iter().filter(|l| l.order() <= 4).collect();
    for l in &small {
        let aut = autotopy::autotopism_group(l).unwrap();
        let us: Vec<Perm> = autotopy::mu_regular_set(l).unwrap().iter().map(|e| e.u().clone()).collect();
        violations += usize::from(!is_subgroup(&aut)) + usize::from(!is_subgroup(&us));
    }
    ensure(violations == 0, || format!("{violations} violations"))?;
    Ok(format!("{isotopes} principal isotopes of {} loops; closure on {} loops; 0 violations", loops.len(), small.len()))
}

fn c9_aut_oracle() -> Outcome {
    let loops = corpus(4);
    let mut bad = 0;
    for l in &loops {
        let ours: std::collections::BTreeSet<_> = autotopy::autotopism_group(l)
            .unwrap()
            .into_iter()
            .map(|t| (t.u.images(), t.v.images(), t.w.images()))
            .collect();
        bad += usize::from(ours != common::brute_autotopisms(&l.rows()));
    }
    ensure(bad == 0, || format!("{bad} loops differ"))?;
    Ok(format!("{} loops, set equality with S_n^3 brute force", loops.len()))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn c10_cli() -> Outcome {
    let canonical = ["z1.txt", "z2.txt", "z3.txt", "z4.txt", "klein.txt", "s3.txt", "nonassoc5.txt", "lc6.txt"];
    for name in canonical {
        let src = std::fs::read_to_string(fixture(name)).unwrap();
        let emitted = text::emit(&text::parse(&src).map_err(|e| format!("{name}: {e}"))?);
        ensure(emitted == src, || format!("{name} is not byte-stable"))?;
    }
    let messy = std::fs::read_to_string(fixture("messy.txt")).unwrap();
    let once = text::emit(&text::parse(&messy).unwrap());
    ensure(text::emit(&text::parse(&once).unwrap()) == once, || "messy.txt does not stabilize".into())?;

    let table: &[(&[&str], i32)] = &[
        (&["check", "z1.txt"], 0),
        (&["check", "z2.txt", "--props", "group"], 0),
        (&["check", "z3.txt", "--machine"], 0),
        (&["check", "z4.txt", "--props", "c,ip"], 0),
        (&["check", "klein.txt"], 0),
        (&["check", "s3.txt"], 1),
        (&["check", "s3.txt", "--props", "c"], 0),
        (&["check", "nonassoc5.txt", "--props", "c"], 1),
        (&["check", "lc6.txt", "--props", "lc,lip"], 0),
        (&["check", "lc6.txt", "--props", "rc"], 1),
        (&["check", "messy.txt", "--props", "group"], 0),
        (&["check", "bad_row_length.txt"], 2),
        (&["check", "bad_entry.txt"], 2),
        (&["check", "missing_rows.txt"], 2),
        (&["check", "not_latin.txt"], 2),
        (&["check", "z4.txt", "--props", "nonsense"], 2),
        (&["autotopisms", "z2.txt"], 0),
        (&["isotope", "z4.txt", "--a", "1", "--b", "2"], 0),
        (&["isotope", "z3.txt", "--u", "0,0,1", "--v", "0,1,2", "--w", "0,1,2"], 2),
        (&["verify", "L0.1", "--max-order", "4"], 0),
        (&["verify", "X9.9"], 2),
        (&["enumerate", "7"], 2),
    ];
    for (args, want) in table {
        let args: Vec<String> = args
            .iter()
            .map(|a| if a.ends_with(".txt") { fixture(a).display().to_string() } else { a.to_string() })
            .collect();
        let out = Command::new(env!("CARGO_BIN_EXE_loopkit")).args(&args).output().unwrap();
        let got = out.status.code();
        ensure(got == Some(*want), || format!("{} exited {got:?}, expected {want}", args.join(" ")))?;
    }
    Ok(format!("{} canonical fixtures byte-stable, {} invocations match the exit-code table", canonical.len(), table.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("enumeration counts", c1_enumeration),
        ("LC/RC closure equivalences", c2_equivalences),
        ("centrum square closure", c3_theorem_0_4),
        ("LC autotopism triples", c4_autotopism_triples),
        ("C iff alternative LC/RC", c5_theorem_1_3),
        ("exponent-four conditions", c6_exponent_four),
        ("A_mu and A_lambda transforms", c7_transforms),
        ("isotope invariants", c8_isotope_invariants),
        ("autotopism oracle", c9_aut_oracle),
        ("CLI contract", c10_cli),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
        failed += usize::from(outcome.is_err());
        let detail = outcome.unwrap_or_else(|e| e);
        println!("criterion {:>2} {status} {name}: {detail} [{:.2?}]", i + 1, start.elapsed());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
