mod common;

use std::collections::{BTreeSet, HashMap};

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tenselat::congfil::{enumerate_congruences, enumerate_tense_filters, TenseAlgebra};
use tenselat::drl::TenseDrl;
use tenselat::kalman::{alpha_map, beta_map, full_drl_algebra, kalman, lift_hom_c, lift_hom_k};
use tenselat::tense::TenseIcrdl;
use tenselat::term::{Interpretation, Signature};
use tenselat::translate::{atoms, random_term, tau_star, terms_up_to, variable_names};
use tenselat::{ElementId, FiniteAlgebra};

const BOUND: usize = 16;

fn congruence_labels(alg: &FiniteAlgebra) -> BTreeSet<Vec<usize>> {
    enumerate_congruences(alg, BOUND).unwrap().iter().map(|c| canonical_labels(c.labels())).collect()
}

fn canonical_labels(labels: &[usize]) -> Vec<usize> {
    let mut seen = HashMap::new();
    labels
        .iter()
        .map(|l| {
            let next = seen.len();
            *seen.entry(*l).or_insert(next)
        })
        .collect()
}

fn filter_sets<T: TenseAlgebra>(t: &T) -> BTreeSet<Vec<usize>> {
    enumerate_tense_filters(t, BOUND).unwrap().iter().map(|f| f.members().to_vec()).collect()
}

fn small_tense_algebras() -> Vec<TenseIcrdl> {
    let mut out: Vec<TenseIcrdl> = ["remark34", "bool2"].iter().map(|n| tense(n)).collect();
    for n in 1..=4 {
        out.extend(tense_heyting_algebras(n));
    }
    out
}

fn small_drls() -> Vec<TenseDrl> {
    (1..=6).flat_map(drl_candidates).filter_map(|a| TenseDrl::new(a).ok()).collect()
}

#[test]
fn congruences_match_partition_oracle() {
    let mut algebras = vec![algebra("remark34"), algebra("remark35"), algebra("bool2")];
    algebras.push(kalman(&tense("bool2")).unwrap().algebra().clone());
    for t in small_tense_algebras() {
        algebras.push(t.algebra().clone());
        let k = kalman(&t).unwrap();
        if k.size() <= 8 {
            algebras.push(full_drl_algebra(k.tense_drl()));
        }
    }
    for d in small_drls() {
        algebras.push(full_drl_algebra(&d));
    }
    for alg in &algebras {
        assert_eq!(congruence_labels(alg), congruence_oracle(alg), "{}", alg.name());
    }
}

#[test]
fn tense_filters_match_subset_oracle() {
    for t in small_tense_algebras() {
        assert_eq!(filter_sets(&t), filter_oracle(&t), "{}", t.algebra().name());
        let k = kalman(&t).unwrap();
        assert_eq!(filter_sets(k.tense_drl()), filter_oracle(k.tense_drl()), "K({})", t.algebra().name());
    }
    for d in small_drls() {
        assert_eq!(filter_sets(&d), filter_oracle(&d), "{}", d.algebra().name());
    }
}

#[test]
fn kalman_of_remark34_filters_match_oracle() {
    let k = kalman(&tense("remark34")).unwrap();
    assert_eq!(k.size(), 15);
    let found = filter_sets(k.tense_drl());
    assert_eq!(found, filter_oracle(k.tense_drl()));
    assert_eq!(found.len(), 2);
}

#[test]
fn tau_star_matches_textual_construction() {
    let vars = variable_names(2);
    let terms = terms_up_to(&atoms(&vars), 2);
    assert_eq!(terms.len(), 68255);
    for t in &terms {
        assert_eq!(tau_star(t).unwrap(), naive_tau_star(t), "{t}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let atoms = atoms(&variable_names(3));
    for _ in 0..300 {
        let t = random_term(&mut rng, &atoms, 7);
        assert_eq!(tau_star(&t).unwrap(), naive_tau_star(&t), "{t}");
    }
}

#[test]
fn kalman_evaluation_matches_pair_semantics() {
    for name in ["remark34", "bool2"] {
        let t = tense(name);
        let k = kalman(&t).unwrap();
        let ki = Interpretation::new(Signature::Tdrl, k.algebra()).unwrap();
        let vars = variable_names(2);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut terms = terms_up_to(&atoms(&vars), 1);
        let deep = atoms(&vars);
        terms.extend((0..100).map(|_| random_term(&mut rng, &deep, 5)));
        for term in &terms {
            for x in 0..k.size() {
                for y in 0..k.size() {
                    let env: HashMap<String, ElementId> = [(vars[0].clone(), x), (vars[1].clone(), y)].into();
                    let pairs: HashMap<String, (usize, usize)> =
                        [(vars[0].clone(), k.pair(x)), (vars[1].clone(), k.pair(y))].into();
                    let got = k.pair(ki.eval(term, &env).unwrap());
                    assert_eq!(got, pair_eval(&t, term, &pairs), "{name}: {term}");
                }
            }
        }
    }
}

/// All maps `dom → cod` preserving every operation and constant of `dom`,
/// found by exhaustive search.
fn homomorphisms(dom: &FiniteAlgebra, cod: &FiniteAlgebra) -> Vec<Vec<ElementId>> {
    let (n, m) = (dom.size(), cod.size());
    let mut out = Vec::new();
    let mut f = vec![0; n];
    loop {
        let ok = dom.constants().iter().all(|(c, &v)| cod.constant(c) == Some(f[v]))
            && dom.operations().all(|op| {
                let tgt = cod.operation(op.name()).unwrap();
                match op.arity() {
                    0 => true,
                    1 => (0..n).all(|x| f[op.apply(&[x])] == tgt.apply(&[f[x]])),
                    _ => (0..n).all(|x| (0..n).all(|y| f[op.apply(&[x, y])] == tgt.apply(&[f[x], f[y]]))),
                }
            });
        if ok {
            out.push(f.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            f[i] += 1;
            if f[i] < m {
                break;
            }
            f[i] = 0;
        }
    }
}

#[test]
fn unit_maps_are_natural() {
    let algebras: Vec<TenseIcrdl> = ["bool2", "remark34"].iter().map(|n| tense(n)).chain(tense_heyting_algebras(3)).collect();
    let mut checked = 0;
    for dom in &algebras {
        for cod in &algebras {
            let alpha_d = alpha_map(dom).unwrap();
            let alpha_c = alpha_map(cod).unwrap();
            for f in homomorphisms(dom.algebra(), cod.algebra()) {
                let kf = lift_hom_k(dom, cod, &f).unwrap();
                let ckf = lift_hom_c(alpha_d.kalman.tense_drl(), alpha_c.kalman.tense_drl(), &kf.graph).unwrap();
                for x in 0..dom.size() {
                    assert_eq!(ckf.apply(alpha_d.map.apply(x)), alpha_c.map.apply(f[x]));
                }

                let (kd, kc) = (&alpha_d.kalman, &alpha_c.kalman);
                let beta_d = beta_map(kd.tense_drl()).unwrap();
                let beta_c = beta_map(kc.tense_drl()).unwrap();
                let cg = lift_hom_c(kd.tense_drl(), kc.tense_drl(), &kf.graph).unwrap();
                let kcg = lift_hom_k(&beta_d.center.algebra, &beta_c.center.algebra, &cg.graph).unwrap();
                for x in 0..kd.size() {
                    assert_eq!(kcg.apply(beta_d.map.apply(x)), beta_c.map.apply(kf.apply(x)));
                }
                checked += 1;
            }
        }
    }
    assert!(checked >= 6, "only {checked} homomorphisms found");
}
