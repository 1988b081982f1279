//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when the failing set differs from [`KNOWN_FAILING`].

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tenselat::congfil::{
    correspondences_icrdl, enumerate_congruences, enumerate_tense_filters, fp_closure_failure, TenseAlgebra,
};
use tenselat::drl::{validate_drl, validate_tense_drl, TenseDrl};
use tenselat::icrdl::{check_double_negation_hom, validate_icrdl, Icrdl};
use tenselat::kalman::{alpha_map, beta_map, center, check_ck_condition, full_drl_algebra, kalman};
use tenselat::tense::{check_bakhshi_trl, check_glivenko_theorem, validate_tense_icrdl, TenseIcrdl};
use tenselat::term::{Equation, Signature, Term};
use tenselat::translate::{
    atoms, check_context_preservation, consequence_check_all, random_term, variable_names, Query, SweepConfig,
    Translation,
};
use tenselat::FiniteAlgebra;

/// Criteria that cannot pass on these inputs; the reasons are recorded
/// with the project decisions.
const KNOWN_FAILING: [usize; 2] = [1, 9];

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg.into()) }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn criterion_1() -> Outcome {
    let alg = algebra("remark34");
    let icrdl = validate_icrdl(&alg).map_err(err)?;
    ensure(icrdl.all_pass(), format!("ICRDL: {icrdl}"))?;
    let tense = validate_tense_icrdl(&alg).map_err(err)?;
    ensure(tense.all_pass(), format!("tense ICRDL: {tense}"))?;
    let b = check_bakhshi_trl(&Icrdl::new(alg).map_err(err)?).map_err(err)?;
    let texts: Vec<&str> = b.mismatches.iter().map(|m| m.text.as_str()).collect();
    let missing: Vec<&str> = ["F(a) = c ≠ 1 = ¬G(¬a)", "P(c) = c ≠ 1 = ¬H(¬c)"]
        .into_iter()
        .filter(|w| !texts.contains(w))
        .collect();
    ensure(missing.is_empty(), format!("missing Bakhshi witnesses {missing:?}; found {texts:?}"))?;
    Ok(format!("witnesses {texts:?}"))
}

fn criterion_2() -> Outcome {
    let alg = algebra("remark35");
    let icrdl = validate_icrdl(&alg).map_err(err)?;
    ensure(icrdl.all_pass(), format!("ICRDL: {icrdl}"))?;
    let b = check_bakhshi_trl(&Icrdl::new(alg.clone()).map_err(err)?).map_err(err)?;
    ensure(b.report.all_pass(), format!("Bakhshi: {}", b.report))?;
    let one = alg.constant("1").unwrap();
    ensure(alg.unary("G").unwrap().iter().chain(&alg.unary("H").unwrap()).all(|&x| x == one), "G or H is not constantly 1")?;
    let tense = validate_tense_icrdl(&alg).map_err(err)?;
    let t3 = tense.get("T3").ok_or("no T3 check")?;
    ensure(!t3.pass, "T3 passes")?;
    let detail = t3.detail.clone().unwrap_or_default();
    ensure(detail.contains("G(0) = 1"), format!("T3 detail: {detail}"))?;
    Ok(format!("T3 fails: {detail}"))
}

fn criterion_3() -> Outcome {
    let t = tense("remark34");
    let k = kalman(&t).map_err(err)?;
    let d = k.tense_drl();
    let drl = validate_drl(&full_drl_algebra(d)).map_err(err)?;
    ensure(drl.all_pass(), format!("DRL: {drl}"))?;
    for id in ["LC", "CJ1", "CJ2"] {
        ensure(drl.passes(id), format!("{id} missing or failing"))?;
    }
    let tense = validate_tense_drl(&full_drl_algebra(d)).map_err(err)?;
    ensure(tense.all_pass(), format!("tense DRL: {tense}"))?;
    for id in ["t0", "t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "c1", "c2", "c3"] {
        ensure(tense.passes(id), format!("{id} missing or failing"))?;
    }
    ensure(check_ck_condition(d.drl()).holds, "CK fails")?;
    let alpha = alpha_map(&t).map_err(err)?;
    ensure(alpha.map.is_bijective(), "α is not bijective")?;
    let ops = ["meet", "join", "prod", "imp", "G", "H", "F", "P"];
    let pres = alpha.map.check_preserves(&ops, &["0", "1"]).map_err(err)?;
    ensure(pres.all_pass(), format!("α: {pres}"))?;
    Ok(format!("|K(L)| = {}, |C(K(L))| = {}", k.size(), alpha.center.algebra.size()))
}

fn criterion_4() -> Outcome {
    for name in ["remark34", "bool2"] {
        let k = kalman(&tense(name)).map_err(err)?;
        let beta = beta_map(k.tense_drl()).map_err(err)?;
        ensure(beta.map.is_bijective(), format!("β on K({name}) is not bijective"))?;
    }
    let mut drls: Vec<TenseDrl> = (1..=6).flat_map(drl_candidates).filter_map(|a| TenseDrl::new(a).ok()).collect();
    for n in 1..=4 {
        for t in tense_heyting_algebras(n) {
            drls.push(kalman(&t).map_err(err)?.tense_drl().clone());
        }
    }
    let mut ck_fails = 0;
    for d in &drls {
        let ck = check_ck_condition(d.drl()).holds;
        let beta = beta_map(d).map_err(err)?;
        ensure(beta.surjective == ck, format!("{}: β onto = {}, CK = {ck}", d.algebra().name(), beta.surjective))?;
        ck_fails += usize::from(!ck);
    }
    Ok(format!("{} DRLs, CK fails on {ck_fails}", drls.len()))
}

fn oracle_counts<T: TenseAlgebra>(label: &str, alg: &FiniteAlgebra, t: &T, out: &mut Vec<String>) -> Result<(), String> {
    if alg.size() > 8 {
        return Ok(());
    }
    let cons = enumerate_congruences(alg, 16).map_err(err)?.len();
    let fils = enumerate_tense_filters(t, 16).map_err(err)?.len();
    let (oc, of) = (congruence_oracle(alg).len(), filter_oracle(t).len());
    ensure(cons == oc, format!("{label}: {cons} congruences, oracle {oc}"))?;
    ensure(fils == of, format!("{label}: {fils} tense filters, oracle {of}"))?;
    out.push(format!("{label} {cons}/{fils}"));
    Ok(())
}

fn criterion_5() -> Outcome {
    let mut counts = Vec::new();
    for name in ["remark34", "bool2"] {
        let t = tense(name);
        let r = correspondences_icrdl(&t, 16).map_err(err)?;
        ensure(r.all_pass(), format!("{name}: {r}"))?;
        for id in ["theta-S", "theta-gamma", "D-S", "S-J"] {
            ensure(r.checks.iter().any(|c| c.axiom.starts_with(id)), format!("{name}: no {id} checks"))?;
        }
        let k = kalman(&t).map_err(err)?;
        let c = center(k.tense_drl()).map_err(err)?;
        oracle_counts(name, t.algebra(), &t, &mut counts)?;
        oracle_counts(&format!("K({name})"), &full_drl_algebra(k.tense_drl()), k.tense_drl(), &mut counts)?;
        oracle_counts(&format!("C(K({name}))"), c.algebra.algebra(), &c.algebra, &mut counts)?;
    }
    Ok(format!("Con/tFi vs oracle: {}", counts.join(", ")))
}

fn fp_closed<T: TenseAlgebra>(label: &str, t: &T) -> Result<usize, String> {
    let fils = enumerate_tense_filters(t, 16).map_err(err)?;
    for f in &fils {
        if let Some(why) = fp_closure_failure(t, f) {
            return Err(format!("{label} {}: {why}", f.render(t.names())));
        }
    }
    Ok(fils.len())
}

fn criterion_6() -> Outcome {
    let mut total = 0;
    for name in ["remark34", "bool2"] {
        let t = tense(name);
        let k = kalman(&t).map_err(err)?;
        let c = center(k.tense_drl()).map_err(err)?;
        total += fp_closed(name, &t)?;
        total += fp_closed(&format!("K({name})"), k.tense_drl())?;
        total += fp_closed(&format!("C(K({name}))"), &c.algebra)?;
    }
    Ok(format!("{total} tense filters closed under F and P"))
}

fn criterion_7() -> Outcome {
    let cfg = SweepConfig::default();
    let mut notes = Vec::new();
    for name in ["remark34", "bool2"] {
        let t = tense(name);
        let k = kalman(&t).map_err(err)?;
        let r = Translation::new(&t, &k).map_err(err)?.sweep(&cfg).map_err(err)?;
        ensure(r.all_pass(), format!("{name}: {r}"))?;
        ensure(r.passes(&format!("closure-depth-{}", cfg.depth)), "no exhaustive closure check")?;
        for s in Signature::Tdrl.symbols() {
            let v = check_context_preservation(&[t.algebra()], *s).map_err(err)?;
            ensure(v.verdict, format!("{name}: context not preserved by {}", s.name))?;
        }
        notes.push(format!("K({name}) {} checks", r.checks.len()));
    }
    Ok(format!("depth ≤ {} over {} variables, {}", cfg.depth, cfg.vars, notes.join(", ")))
}

fn random_equation(rng: &mut ChaCha8Rng, atoms: &[Term]) -> Equation {
    Equation::new(random_term(rng, atoms, 2), random_term(rng, atoms, 2))
}

fn criterion_8() -> Outcome {
    let names = ["remark34", "bool2"];
    let ls: Vec<TenseIcrdl> = names.iter().map(|n| tense(n)).collect();
    let ks = ls.iter().map(kalman).collect::<Result<Vec<_>, _>>().map_err(err)?;
    let k_algs: Vec<&FiniteAlgebra> = ks.iter().map(|k| k.algebra()).collect();
    let l_algs: Vec<&FiniteAlgebra> = ls.iter().map(|l| l.algebra()).collect();
    let atoms = atoms(&variable_names(2));
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut holds = 0;
    for round in 0..20 {
        let premises: Vec<Equation> = (0..rng.random_range(1..=3)).map(|_| random_equation(&mut rng, &atoms)).collect();
        let goal = random_equation(&mut rng, &atoms);
        let q = Query { signature: Signature::Tdrl, premises, goals: vec![goal] };
        let direct = consequence_check_all(&k_algs, Signature::Tdrl, &q.premises, &q.goals).map_err(err)?;
        let tq = q.translate().map_err(err)?;
        let translated = consequence_check_all(&l_algs, Signature::Ticrl, &tq.premises, &tq.goals).map_err(err)?;
        ensure(direct.verdict == translated.verdict, format!("round {round}: verdicts differ on\n{}", q.to_source()))?;
        holds += usize::from(direct.verdict);
        if let (Some(d), Some(t)) = (&direct.countermodel, &translated.countermodel) {
            let i = k_algs.iter().position(|a| a.name() == d.algebra).ok_or("unknown algebra")?;
            ensure(t.algebra == l_algs[i].name(), format!("round {round}: countermodel in {} vs {}", d.algebra, t.algebra))?;
            for (x, &e) in &d.ids {
                let (a, b) = ks[i].pair(e);
                let got = (t.ids.get(&format!("{x}.1")).copied(), t.ids.get(&format!("{x}.2")).copied());
                ensure(got == (Some(a), Some(b)), format!("round {round}: {x} ↦ {e} does not match {got:?}"))?;
            }
        }
    }
    Ok(format!("20 premise sets agree ({holds} valid, {} refuted)", 20 - holds))
}

fn criterion_9() -> Outcome {
    let mut algebras: Vec<TenseIcrdl> = ["remark34", "bool2"].iter().map(|n| tense(n)).collect();
    for n in 1..=5 {
        algebras.extend(tense_heyting_algebras(n));
    }
    let mut disagree = Vec::new();
    for t in &algebras {
        let r = check_glivenko_theorem(t).map_err(err)?;
        if r.passes("side-i") != r.passes("side-ii") {
            disagree.push(t.algebra().name().to_string());
        }
    }
    let mut dn = 0;
    for n in 1..=4 {
        for alg in icrdls(n) {
            let name = alg.name().to_string();
            let r = check_double_negation_hom(&Icrdl::new(alg).map_err(err)?).map_err(err)?;
            ensure(r.passes("DN-agree"), format!("{name}: DN conditions differ"))?;
            dn += 1;
        }
    }
    let summary = format!("DN agrees on {dn} ICRDLs; Glivenko sides differ on {} of {} algebras", disagree.len(), algebras.len());
    if disagree.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}, first {:?}", &disagree[..disagree.len().min(3)]))
    }
}

fn main() {
    let criteria: [(fn() -> Outcome, Duration); 9] = [
        (criterion_1, Duration::from_secs(1)),
        (criterion_2, Duration::from_secs(1)),
        (criterion_3, Duration::from_secs(5)),
        (criterion_4, Duration::from_secs(5)),
        (criterion_5, Duration::from_secs(60)),
        (criterion_6, Duration::from_secs(5)),
        (criterion_7, Duration::from_secs(120)),
        (criterion_8, Duration::from_secs(120)),
        (criterion_9, Duration::from_secs(600)),
    ];
    let mut failing = BTreeSet::new();
    for (i, (run, limit)) in criteria.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *limit => Err(format!("took {elapsed:.2?}, limit {limit:?}; {detail}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS ({elapsed:.2?}) {detail}"),
            Err(detail) => {
                failing.insert(n);
                println!("criterion {n}: FAIL ({elapsed:.2?}) {detail}");
            }
        }
    }
    let known: BTreeSet<usize> = KNOWN_FAILING.into_iter().collect();
    println!("failing {failing:?}, expected {known:?}");
    if failing != known {
        std::process::exit(1);
    }
}
