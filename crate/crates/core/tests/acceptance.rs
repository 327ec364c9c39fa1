//! Acceptance gate. One test per criterion; each prints a line per
//! sub-check, then asserts them all at once so a red run still shows the
//! full picture. Every criterion carries a wall-clock cap.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::{brute_force_homs, derived_members, perm_set};
use fusionkit::{
    alperin_decompose_all, alperin_hosts, build_report, catalog_table, check_saturation,
    classify_subgroups, closed_subsystem_census, default_catalog, dump_to_json,
    enumerate_subsystems, focal_series, from_dump, homomorphisms, is_isomorphic, o_p, recompose,
    run_catalog_suite, run_theorem_suite, sparseness, subgroup_lattice, to_dump, Bounds,
    FusionSystem, GroupTable, Subgroup, Violation,
};

fn bounds() -> Bounds {
    Bounds::default()
}

fn system(name: &str, p: u64) -> FusionSystem {
    let b = bounds();
    let g = catalog_table(name, &b).expect("catalog name");
    FusionSystem::from_group(&g, p, &b).expect("catalog system")
}

struct Gate {
    label: &'static str,
    start: Instant,
    cap: Duration,
    failures: Vec<String>,
}

impl Gate {
    fn open(label: &'static str, cap_secs: u64) -> Self {
        Gate {
            label,
            start: Instant::now(),
            cap: Duration::from_secs(cap_secs),
            failures: Vec::new(),
        }
    }

    fn check(&mut self, what: &str, ok: bool) {
        println!("  [{}] {what}", if ok { "pass" } else { "FAIL" });
        if !ok {
            self.failures.push(what.to_owned());
        }
    }

    fn close(mut self) {
        let elapsed = self.start.elapsed();
        let in_time = elapsed <= self.cap;
        self.check(
            &format!("finished in {elapsed:.2?} (cap {:?})", self.cap),
            in_time,
        );
        let verdict = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{}: {verdict}", self.label);
        assert!(
            self.failures.is_empty(),
            "{} failed: {:?}",
            self.label,
            self.failures
        );
    }
}

#[test]
fn criterion_1_construction() {
    let mut gate = Gate::open("criterion 1 (construction)", 10);
    let b = bounds();

    let f = system("s4", 2);
    let d8 = catalog_table("d8", &b).expect("d8");
    gate.check("s4 at p = 2: Sylow is dihedral of order 8", is_isomorphic(&f.table, &d8));
    gate.check("s4 at p = 2: ten subgroups in the lattice", f.object_count() == 10);

    let g = catalog_table("pgl27", &b).expect("pgl27");
    gate.check("pgl27: group order 336", g.order() == 336);
    let f = FusionSystem::from_group(&g, 2, &b).expect("pgl27 system");
    let d16 = catalog_table("d16", &b).expect("d16");
    gate.check("pgl27 at p = 2: Sylow is dihedral of order 16", is_isomorphic(&f.table, &d16));

    gate.close();
}

#[test]
fn criterion_2_saturation() {
    let mut gate = Gate::open("criterion 2 (saturation)", 30);
    let b = bounds();

    for (name, p) in default_catalog() {
        let f = system(&name, p);
        gate.check(
            &format!("{name} at p = {p} is saturated"),
            check_saturation(&f).saturated,
        );
    }

    // Surgery on the dump of the s4 system: drop the maps on the busy Klein
    // four that move the central involution, reload, and watch the
    // extension axiom fail.
    let f = system("s4", 2);
    let v4b = f
        .base_objects()
        .iter()
        .copied()
        .find(|&qi| f.object(qi).order() == 4 && f.aut_maps(qi).len() == 6)
        .expect("s4 system has a busy Klein four");
    let v4b_members = f.object(v4b).members.clone();
    let z = f
        .table
        .centralizer(&f.base, &f.base)
        .members
        .iter()
        .copied()
        .find(|&x| x != f.table.identity())
        .expect("nontrivial center");
    let z_pos = v4b_members.binary_search(&z).expect("center inside the Klein four");

    let mut dump = to_dump(&f).expect("full-base dump");
    let before = dump.morphisms.len();
    dump.morphisms
        .retain(|m| m.domain != v4b || m.images[z_pos] == z);
    gate.check("surgery removed morphisms", dump.morphisms.len() < before);

    let mutant = from_dump(&dump_to_json(&dump), &b).expect("mutant loads");
    let report = check_saturation(&mutant);
    gate.check("mutant is not saturated", !report.saturated);
    gate.check("exactly two violations recorded", report.violations.len() == 2);
    for v in &report.violations {
        match v {
            Violation::ExtensionAxiom { object, n_phi, .. } => {
                println!("    recorded violation: extension axiom on {object:?}, N_phi {n_phi:?}");
                gate.check("violation names an order-2 domain", object.len() == 2);
                gate.check("violation's N_phi is the Klein four", n_phi == &v4b_members);
            }
            other => gate.check(&format!("unexpected violation kind {other:?}"), false),
        }
    }

    gate.close();
}

#[test]
fn criterion_3_worked_examples() {
    let mut gate = Gate::open("criterion 3 (worked examples)", 120);
    let b = bounds();

    let f = system("s4", 2);
    let r = build_report("s4", &f, &b).expect("report");
    gate.check("s4: sparse", r.sparse);
    gate.check("s4: constrained", r.constrained);
    gate.check(
        &format!("s4: essential rank 2 (computed {})", r.essential_rank),
        r.essential_rank == 2,
    );
    gate.check(&format!("s4: O_2 has order 4 (computed {})", r.o_p_order), r.o_p_order == 4);
    let core = o_p(&f, &b).expect("core");
    gate.check(
        "s4: O_2 is elementary abelian",
        core.members.iter().all(|&m| f.table.element_order(m) <= 2),
    );
    gate.check(
        &format!("s4: p-length 2 (computed {:?})", r.p_length),
        r.p_length == Some(2),
    );

    let f = system("pgl27", 2);
    let r = build_report("pgl27", &f, &b).expect("report");
    gate.check("pgl27: sparse", r.sparse);
    gate.check("pgl27: not constrained", !r.constrained);
    gate.check(
        &format!("pgl27: trivial core (computed order {})", r.o_p_order),
        r.o_p_order == 1,
    );

    gate.close();
}

#[test]
fn criterion_4_theorem_suite() {
    let mut gate = Gate::open("criterion 4 (theorem suite)", 300);
    let b = bounds();

    let results = run_catalog_suite(&default_catalog(), &b);
    for (name, p, outcome) in &results {
        match outcome {
            Ok(report) => {
                let failed: Vec<&str> = report
                    .theorems
                    .iter()
                    .filter(|t| t.hypotheses_met && !t.conclusion_holds)
                    .map(|t| t.id.as_str())
                    .collect();
                gate.check(
                    &format!("{name} at p = {p}: ten verdicts"),
                    report.theorems.len() == 10,
                );
                gate.check(
                    &format!("{name} at p = {p}: no met theorem fails {failed:?}"),
                    failed.is_empty(),
                );
            }
            Err(e) => gate.check(&format!("{name} at p = {p}: suite ran ({e})"), false),
        }
    }

    gate.close();
}

#[test]
fn criterion_5_extremely_sparse() {
    let mut gate = Gate::open("criterion 5 (extremely sparse)", 10);
    let b = bounds();

    let f = system("s3", 3);
    let sp = sparseness(&f, &b).expect("census in bounds");
    gate.check("s3: extremely sparse", sp.extremely_sparse);
    let suite = run_theorem_suite(&f, &b).expect("suite");
    let t8 = suite.iter().find(|t| t.id == "T8").expect("T8 present");
    gate.check(
        &format!("s3: witness q = 2 (recorded {})", t8.witness["q"]),
        t8.witness["q"] == 2,
    );
    let focal = focal_series(&f, &f.base.clone()).expect("base focal").focal;
    gate.check("s3: focal subgroup is all of the base", focal == f.base);
    let rank = classify_subgroups(&f, &b).expect("classification").essential_rank;
    gate.check(&format!("s3: essential rank 0 (computed {rank})"), rank == 0);

    let f = system("s4", 2);
    let sp = sparseness(&f, &b).expect("census in bounds");
    gate.check("s4: not extremely sparse", !sp.extremely_sparse);
    gate.check("s4: a witness subsystem exists", !sp.witnesses.is_empty());
    if let Some(w) = sp.witnesses.first() {
        let on = Subgroup {
            members: w.on_subgroup.clone(),
        };
        gate.check("s4: witness sits on an order-4 subgroup", on.order() == 4);
        gate.check(
            "s4: witness subgroup is a Klein four",
            on.members.iter().all(|&m| f.table.element_order(m) <= 2),
        );
        gate.check(
            &format!("s4: witness carries 13 maps (recorded {})", w.map_count),
            w.map_count == 13,
        );
        let serialized = serde_json::to_string(w).expect("witness serializes");
        gate.check("s4: witness serializes", serialized.contains("\"map_count\":13"));
        println!("    witness: {serialized}");
    }

    gate.close();
}

#[test]
fn criterion_6_oracles() {
    let mut gate = Gate::open("criterion 6 (oracles)", 60);
    let b = bounds();

    for (name, p) in default_catalog() {
        let g = catalog_table(&name, &b).expect("catalog name");
        let f = system(&name, p);
        let derived = derived_members(&g);
        let derived_perms = perm_set(&g, &derived.iter().copied().collect::<Vec<_>>());
        let p_perms: BTreeSet<Vec<usize>> = f
            .table
            .elements()
            .iter()
            .map(|q| q.images().to_vec())
            .collect();
        let expected: BTreeSet<Vec<usize>> =
            derived_perms.intersection(&p_perms).cloned().collect();
        let focal = focal_series(&f, &f.base.clone()).expect("base focal").focal;
        gate.check(
            &format!("{name}: focal subgroup equals P meet the derived subgroup"),
            perm_set(&f.table, &focal.members) == expected,
        );
    }

    let d8 = catalog_table("d8", &b).expect("d8");
    let s3 = catalog_table("s3", &b).expect("s3");
    let v4 = subgroup_lattice(&d8, &d8.full_subgroup(), &b)
        .expect("lattice")
        .subgroups
        .iter()
        .find(|s| s.order() == 4 && s.members.iter().all(|&m| d8.element_order(m) <= 2))
        .expect("d8 has a Klein four")
        .clone();
    let hom_pairs: Vec<(&str, &GroupTable, Subgroup, Subgroup)> = vec![
        ("s3 into itself", &s3, s3.full_subgroup(), s3.full_subgroup()),
        ("klein four into d8", &d8, v4.clone(), d8.full_subgroup()),
        ("d8 into itself", &d8, d8.full_subgroup(), d8.full_subgroup()),
    ];
    for (label, t, q, r) in hom_pairs {
        for injective_only in [false, true] {
            let mut searched: Vec<Vec<u32>> = homomorphisms(t, &q, &r, injective_only, &b)
                .expect("search in bounds")
                .into_iter()
                .map(|h| h.images)
                .collect();
            searched.sort();
            let brute = brute_force_homs(t, &q, &r, injective_only);
            gate.check(
                &format!("{label} (injective = {injective_only}): search matches brute force"),
                searched == brute,
            );
        }
    }

    let mut censuses = 0usize;
    let mut agree = true;
    for (name, p) in [("s3", 3u64), ("s4", 2), ("a4", 2), ("sl23", 2)] {
        let f = system(name, p);
        for &qi in f.base_objects() {
            if f.sub_objects[qi].len() > 6 {
                continue;
            }
            let q = f.object(qi).clone();
            let found = enumerate_subsystems(&f, &q, &b).expect("census in bounds").found;
            let saturated: Vec<FusionSystem> = closed_subsystem_census(&f, &q, &b)
                .expect("census in bounds")
                .into_iter()
                .filter(|s| check_saturation(s).saturated)
                .collect();
            let matches = found.len() == saturated.len()
                && saturated
                    .iter()
                    .all(|s| found.iter().filter(|t| t.same_system(s)).count() == 1);
            if !matches {
                agree = false;
            }
            censuses += 1;
        }
    }
    gate.check(
        &format!("assignment census equals closure census on {censuses} small subgroups"),
        agree && censuses > 0,
    );

    gate.close();
}

#[test]
fn criterion_7_alperin() {
    let mut gate = Gate::open("criterion 7 (decomposition)", 60);
    let b = bounds();

    for (name, p) in [("s4", 2u64), ("pgl27", 2)] {
        let f = system(name, p);
        let hosts: BTreeSet<usize> = alperin_hosts(&f, &b).expect("hosts").into_iter().collect();
        let all = alperin_decompose_all(&f, &b).expect("decomposable");
        gate.check(
            &format!("{name}: every morphism decomposes ({} of {})", all.len(), f.total_map_count()),
            all.len() == f.total_map_count(),
        );
        let mut hosted = true;
        let mut recomposed = true;
        for (m, steps) in &all {
            if !steps.iter().all(|s| hosts.contains(&s.host)) {
                hosted = false;
            }
            if recompose(&f, m.domain, steps) != m.map {
                recomposed = false;
            }
        }
        gate.check(
            &format!("{name}: steps run through the base and essential subgroups"),
            hosted,
        );
        gate.check(&format!("{name}: recomposition returns every morphism"), recomposed);
    }

    gate.close();
}
