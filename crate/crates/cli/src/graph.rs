use std::collections::BTreeSet;
use std::fmt::Write;

use anyhow::Result;
use fusionkit::{classify_subgroups, Bounds, FusionSystem};

/// DOT rendering of the subgroup lattice with fusion edges: gray edges are
/// the covering relation, solid edges join base-conjugate subgroups, dashed
/// edges the fusion beyond base conjugacy. Essential subgroups get a double
/// circle. Output is byte-stable: every loop runs in lattice order.
pub fn dot_graph(f: &FusionSystem, bounds: &Bounds) -> Result<String> {
    let cls = classify_subgroups(f, bounds)?;
    let mut essential = vec![false; f.object_count()];
    for (k, &qi) in cls.object_indices.iter().enumerate() {
        essential[qi] = cls.statuses[k].essential;
    }
    let objs: Vec<usize> = f.base_objects().to_vec();

    let mut s = String::from("graph fusion {\n");
    s.push_str("  rankdir=BT;\n");
    s.push_str("  node [shape=circle, fontsize=10];\n");

    let orders: BTreeSet<usize> = objs.iter().map(|&qi| f.object(qi).order()).collect();
    for o in orders {
        s.push_str("  { rank=same;");
        for &qi in &objs {
            if f.object(qi).order() == o {
                let _ = write!(s, " q{qi};");
            }
        }
        s.push_str(" }\n");
    }

    for &qi in &objs {
        let members: Vec<String> = f
            .object(qi)
            .members
            .iter()
            .map(|m| m.to_string())
            .collect();
        let shape = if essential[qi] {
            ", shape=doublecircle"
        } else {
            ""
        };
        let _ = writeln!(s, "  q{qi} [label=\"{{{}}}\"{shape}];", members.join(","));
    }

    for &a in &objs {
        for &b in &objs {
            if covers(f, &objs, a, b) {
                let _ = writeln!(s, "  q{a} -- q{b} [color=gray75];");
            }
        }
    }

    // Base conjugacy: one solid path through each conjugation orbit.
    for class in &f.lattice.classes {
        let mut c: Vec<usize> = class.clone();
        c.sort_unstable();
        for w in c.windows(2) {
            let _ = writeln!(s, "  q{} -- q{};", w[0], w[1]);
        }
    }

    // Fusion beyond base conjugacy: one dashed path through the orbit
    // representatives merged by F.
    let fc = f.f_classes();
    for class in &fc.classes {
        let mut reps: BTreeSet<usize> = BTreeSet::new();
        for &qi in class {
            let pclass = &f.lattice.classes[f.lattice.class_of[qi]];
            reps.insert(*pclass.iter().min().expect("orbit not empty"));
        }
        let reps: Vec<usize> = reps.into_iter().collect();
        for w in reps.windows(2) {
            let _ = writeln!(s, "  q{} -- q{} [style=dashed];", w[0], w[1]);
        }
    }

    s.push_str("}\n");
    Ok(s)
}

/// a is covered by b: strict containment with nothing strictly between.
fn covers(f: &FusionSystem, objs: &[usize], a: usize, b: usize) -> bool {
    let (qa, qb) = (f.object(a), f.object(b));
    if qa.order() >= qb.order() || !qa.is_subset_of(qb) {
        return false;
    }
    !objs.iter().any(|&c| {
        let qc = f.object(c);
        qc.order() > qa.order()
            && qc.order() < qb.order()
            && qa.is_subset_of(qc)
            && qc.is_subset_of(qb)
    })
}
