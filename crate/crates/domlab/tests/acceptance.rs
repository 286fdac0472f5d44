//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Expected values marked in comments as derived were frozen from an
//! independent brute-force implementation before this crate existed.

use std::sync::OnceLock;

use domlab::enumerate::{enumerate_connected_graphs, enumerate_graphs, enumerate_trees};
use domlab::families;
use domlab::graph::Graph;
use domlab::graph6::{emit_graph6, parse_graph6};
use domlab::solve::{all_minimum_sets, oracle_minimum, solve, DomKind, DomValue};
use domlab::verify;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn criterion(id: usize, name: &str, f: impl FnOnce() -> Result<(), String>) {
    match f() {
        Ok(()) => println!("criterion {id} ({name}): PASS"),
        Err(msg) => {
            println!("criterion {id} ({name}): FAIL - {msg}");
            panic!("criterion {id} ({name}) failed: {msg}");
        }
    }
}

fn all_graphs(n: usize) -> &'static [Graph] {
    const CELL: OnceLock<Vec<Graph>> = OnceLock::new();
    static CACHE: [OnceLock<Vec<Graph>>; 9] = [CELL; 9];
    CACHE[n].get_or_init(|| enumerate_graphs(n).unwrap())
}

fn connected_graphs(lo: usize, hi: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(all_graphs(n).iter().filter(|g| g.is_connected()).cloned());
    }
    out
}

fn t12(g: &Graph) -> DomValue {
    solve(g, DomKind::TotalOneTwo).unwrap().value
}

fn expect_value(g: &Graph, label: &str, expected: DomValue) -> Result<(), String> {
    let got = t12(g);
    if got == expected {
        Ok(())
    } else {
        Err(format!("{label}: expected {expected}, got {got}"))
    }
}

fn report_ok(rep: &verify::Report) -> Result<(), String> {
    if rep.passed() {
        Ok(())
    } else {
        Err(format!(
            "{}: {} failures, first: {:?}",
            rep.claim_id,
            rep.failures.len(),
            rep.failures.first()
        ))
    }
}

#[test]
fn criterion_01_closed_forms() {
    criterion(1, "closed-form table", || {
        for n in 3..=10 {
            expect_value(&families::complete(n).unwrap(), &format!("K_{n}"), DomValue::Finite(2))?;
        }
        for a in 1..=6 {
            for b in 1..=6 {
                expect_value(
                    &families::complete_bipartite(a, b).unwrap(),
                    &format!("K_{a},{b}"),
                    DomValue::Finite(2),
                )?;
            }
        }
        for n in 3..=16 {
            let expected = DomValue::Finite(verify::path_cycle_value(n));
            expect_value(&families::path(n).unwrap(), &format!("P_{n}"), expected)?;
            expect_value(&families::cycle(n).unwrap(), &format!("C_{n}"), expected)?;
        }
        Ok(())
    });
}

#[test]
fn criterion_02_double_corona_value() {
    criterion(2, "double corona hits 4|H|", || {
        let mut seen = 0;
        for h_order in 2..=4 {
            for h in enumerate_connected_graphs(h_order, |_| true).unwrap() {
                let g = families::double_corona_path(&h, 2).unwrap();
                expect_value(
                    &g,
                    &format!("host {}", emit_graph6(&h)),
                    DomValue::Finite(4 * h_order),
                )?;
                seen += 1;
            }
        }
        // 1 + 2 + 6 connected hosts of orders 2..4
        if seen != 9 {
            return Err(format!("expected 9 hosts, saw {seen}"));
        }
        Ok(())
    });
}

#[test]
fn criterion_03_bound_4n5() {
    criterion(3, "4n/5 bound with extremal recognition", || {
        let corpus = connected_graphs(5, 8);
        report_ok(&verify::verify_bound_4n5(&corpus).unwrap())?;
        // constructed positives at orders 10 and 15
        let positives = vec![
            families::double_corona_path(&families::complete(2).unwrap(), 2).unwrap(),
            families::double_corona_path(&families::path(3).unwrap(), 2).unwrap(),
        ];
        let rep = verify::verify_extremal(&positives).unwrap();
        report_ok(&rep)?;
        if rep.checked != 2 {
            return Err(format!("expected 2 positives checked, got {}", rep.checked));
        }
        Ok(())
    });
}

#[test]
fn criterion_04_bound_2n3() {
    criterion(4, "2n/3 bound under min degree 2", || {
        let corpus = connected_graphs(3, 8);
        report_ok(&verify::verify_bound_2n3(&corpus).unwrap())
    });
}

#[test]
fn criterion_05_constructed_families() {
    criterion(5, "constructed family values", || {
        expect_value(&families::family_f_nk(14, 10).unwrap(), "F_{14,10}", DomValue::Finite(10))?;
        expect_value(&families::family_f_nk(15, 11).unwrap(), "F_{15,11}", DomValue::Finite(11))?;
        expect_value(&families::family_f_nk(16, 12).unwrap(), "F_{16,12}", DomValue::Finite(12))?;
        expect_value(&families::family_f_k(4).unwrap(), "F_4", DomValue::Finite(8))?;
        expect_value(&families::family_f_k(5).unwrap(), "F_5", DomValue::Finite(10))?;
        expect_value(&families::family_h_nk(14, 8).unwrap(), "H_{14,8}", DomValue::Finite(8))?;
        expect_value(&families::family_h_nk(15, 9).unwrap(), "H_{15,9}", DomValue::Finite(9))?;
        Ok(())
    });
}

#[test]
fn criterion_06_proof_claims() {
    criterion(6, "counting claims on minimum witnesses", || {
        let corpus = connected_graphs(3, 7);
        report_ok(&verify::verify_claims_4n5(&corpus).unwrap())?;
        report_ok(&verify::verify_claims_2n3(&corpus).unwrap())?;
        Ok(())
    });
}

#[test]
fn criterion_07_infinity_conditions() {
    criterion(7, "sufficient conditions for infinity", || {
        let mut trees = Vec::new();
        for n in 3..=10 {
            trees.extend(enumerate_trees(n).unwrap());
        }
        let mut general = connected_graphs(3, 8);
        general.push(families::family_g_pk(5, 3).unwrap());
        report_ok(&verify::verify_thm_3_1(&trees, &general).unwrap())?;
        expect_value(&families::family_g_pk(5, 3).unwrap(), "G_{5,3}", DomValue::Infinite)?;
        Ok(())
    });
}

#[test]
fn criterion_08_corona_equivalence() {
    criterion(8, "corona equality iff path or cycle host", || {
        let hosts = connected_graphs(2, 6);
        report_ok(&verify::verify_thm_4_1(&hosts).unwrap())
    });
}

#[test]
fn criterion_09_p4_free_and_private() {
    criterion(9, "P4-free formulas and private-neighbor sets", || {
        let connected = connected_graphs(4, 8);
        report_ok(&verify::verify_p4_free(&connected).unwrap())?;
        let mut isolate_free = Vec::new();
        for n in 2..=8 {
            isolate_free.extend(
                all_graphs(n).iter().filter(|g| (0..g.n()).all(|v| g.degree(v) > 0)).cloned(),
            );
        }
        report_ok(&verify::verify_thm_4_2(&isolate_free).unwrap())?;
        Ok(())
    });
}

#[test]
fn criterion_10_oracle_equivalence() {
    criterion(10, "solver agrees with oracle", || {
        let check = |g: &Graph, label: &str| -> Result<(), String> {
            for kind in DomKind::ALL {
                let fast = solve(g, kind).unwrap();
                let slow = oracle_minimum(g, kind).unwrap();
                if fast.value != slow.value {
                    return Err(format!(
                        "{label} {}: solve={}, oracle={}",
                        kind.label(),
                        fast.value,
                        slow.value
                    ));
                }
                if fast.witness != slow.witness {
                    return Err(format!("{label} {}: witness mismatch", kind.label()));
                }
            }
            Ok(())
        };
        for n in 1..=7 {
            for g in all_graphs(n) {
                check(g, &emit_graph6(g))?;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for i in 0..500 {
            let n = rng.gen_range(1..=12);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.3) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            check(&g, &format!("random #{i}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_11_conjecture_hunt() {
    criterion(11, "conjecture hunt smoke", || {
        let cubic: Vec<Graph> =
            connected_graphs(4, 8).into_iter().filter(|g| g.is_regular(3)).collect();
        if cubic.len() != 8 {
            return Err(format!("expected 8 connected cubic graphs up to order 8, got {}", cubic.len()));
        }
        let mut random_cubic = Vec::new();
        for i in 0..200u64 {
            let n = [8, 10, 12, 14, 16][(i % 5) as usize];
            random_cubic.push(families::random_regular(n, 3, 1000 + i).unwrap());
        }
        for corpus in [&cubic, &random_cubic] {
            let rep = verify::hunt_conjectures(1, corpus).unwrap();
            report_ok(&rep)?;
            for f in &rep.findings {
                println!("criterion 11: conjecture 1 finding: {f}");
            }
        }

        let mut five_regular = Vec::new();
        for i in 0..100u64 {
            let n = [8, 10, 12, 14][(i % 4) as usize];
            five_regular.push(families::random_regular(n, 5, 2000 + i).unwrap());
        }
        let rep = verify::hunt_conjectures(3, &five_regular).unwrap();
        report_ok(&rep)?;
        for f in &rep.findings {
            println!("criterion 11: conjecture 3 finding: {f}");
        }
        if rep.checked != 100 {
            return Err(format!("expected 100 instances, checked {}", rep.checked));
        }
        Ok(())
    });
}

#[test]
fn criterion_12_graph6_roundtrip() {
    criterion(12, "graph6 round-trip", || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..1000 {
            let n = rng.gen_range(0..=30);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let line = emit_graph6(&g);
            let back = parse_graph6(&line).unwrap();
            if back != g {
                return Err(format!("graph #{i} changed under parse"));
            }
            if emit_graph6(&back) != line {
                return Err(format!("graph #{i} not byte-exact"));
            }
        }
        Ok(())
    });
}

// sanity: witnesses behind the claim checks really are minimum sets
#[test]
fn minimum_witness_sets_are_exhaustive() {
    for g in connected_graphs(3, 5) {
        let sets = all_minimum_sets(&g, DomKind::TotalOneTwo).unwrap();
        match solve(&g, DomKind::TotalOneTwo).unwrap().value {
            DomValue::Finite(k) => {
                assert!(!sets.is_empty());
                assert!(sets.iter().all(|s| s.len() == k));
            }
            DomValue::Infinite => assert!(sets.is_empty()),
        }
    }
}
