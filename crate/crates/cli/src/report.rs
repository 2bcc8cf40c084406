use std::fmt::Write;

use sdgraph::configurations::{
    enumerate_blossoms, find_flowers, find_jflower, find_jposy, find_posies, find_tposies,
    mark_vertices, witness_for_vertex, Blossom, Configuration, Witness,
};
use sdgraph::ke::{is_ke_direct, is_ke_sterboul, is_ke_tposy, KeVerdict};
use sdgraph::matching::maximum_matching;
use sdgraph::verify::{ConjectureClass, ConjectureReport, EarReport, VerificationReport};
use sdgraph::{graph6, Limits, Matching, Result, VertexId};
use serde_json::{json, Value};

use crate::input::Loaded;

/// A command's output in both formats.
pub struct Report {
    pub json: Value,
    pub text: String,
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn seq(vs: &[VertexId]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn edges(m: &Matching) -> String {
    m.edges()
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn blossom(b: &Blossom) -> String {
    format!("{} (base {})", seq(b.cycle()), b.base())
}

pub fn describe(c: &Configuration) -> String {
    match c {
        Configuration::Blossom(b) => format!("blossom {}", blossom(b)),
        Configuration::Flower(f) => {
            format!(
                "flower: blossom {}, stem {}",
                blossom(&f.blossom),
                seq(&f.stem)
            )
        }
        Configuration::Posy(p) => format!(
            "posy: blossoms {} and {}, link {}",
            blossom(&p.blossom1),
            blossom(&p.blossom2),
            seq(&p.link)
        ),
        Configuration::Tposy(p) => format!(
            "tposy: blossoms {} and {}, link {}",
            blossom(&p.blossom1),
            blossom(&p.blossom2),
            seq(&p.link)
        ),
        Configuration::Jflower(j) => {
            format!(
                "jflower: blossom {}, walk {}",
                blossom(&j.blossom),
                seq(&j.walk)
            )
        }
        Configuration::Jposy(j) => format!(
            "jposy: blossoms {} and {}, walk {}",
            blossom(&j.blossom1),
            blossom(&j.blossom2),
            seq(&j.walk)
        ),
    }
}

fn witness_json(v: VertexId, w: &Witness) -> Value {
    json!({
        "vertex": v,
        "matching": to_value(&w.matching),
        "configuration": to_value(&w.configuration),
    })
}

fn listing<T: serde::Serialize>(items: &[T], max: usize) -> Value {
    json!({
        "count": items.len(),
        "listed": items.iter().take(max).map(to_value).collect::<Vec<_>>(),
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn analyze(input: &Loaded, limits: &Limits, max_listed: usize) -> Result<Report> {
    let g = &input.graph;
    let m = input
        .matching
        .clone()
        .unwrap_or_else(|| maximum_matching(g));
    let marks = mark_vertices(g, limits)?;
    let verdicts: [KeVerdict; 3] = [
        is_ke_direct(g, limits)?,
        is_ke_sterboul(g, limits)?,
        is_ke_tposy(g, limits)?,
    ];
    let blossoms = enumerate_blossoms(g, &m, limits)?;
    let flowers = find_flowers(g, &m);
    let posies = find_posies(g, &m);
    let tposies = find_tposies(g, &m);
    let jflower = find_jflower(g, &m);
    let jposy = find_jposy(g, &m);

    let json = json!({
        "graph6": marks.graph6,
        "order": g.order(),
        "size": g.size(),
        "edges": g.edges(),
        "labels": input.labels,
        "matching_number": marks.matching_number,
        "maximum_matchings": marks.maximum_matchings,
        "alpha": verdicts[0].alpha,
        "is_ke": verdicts[0].is_ke,
        "ke": {
            "direct": to_value(&verdicts[0]),
            "sterboul": to_value(&verdicts[1]),
            "tposy": to_value(&verdicts[2]),
        },
        "v_t": to_value(&marks.v_t),
        "v_esg": to_value(&marks.v_esg),
        "v_j": to_value(&marks.v_j),
        "sets_agree": marks.sets_agree(),
        "sd_graph": marks.is_sd(),
        "witnesses": marks.witnesses.iter().map(|(&v, w)| witness_json(v, w)).collect::<Vec<_>>(),
        "reference": {
            "matching": to_value(&m),
            "blossoms": to_value(&blossoms),
            "flowers": listing(&flowers, max_listed),
            "posies": listing(&posies, max_listed),
            "tposies": listing(&tposies, max_listed),
            "jflower": to_value(&jflower),
            "jposy": to_value(&jposy),
        },
    });

    let mut t = String::new();
    let _ = writeln!(
        t,
        "graph {}  order {}  size {}",
        marks.graph6,
        g.order(),
        g.size()
    );
    if let Some(ls) = &input.labels {
        let pairs: Vec<String> = ls
            .iter()
            .enumerate()
            .map(|(i, l)| format!("{i}={l}"))
            .collect();
        let _ = writeln!(t, "vertex ids (id=input label): {}", pairs.join(" "));
    }
    let _ = writeln!(
        t,
        "matching number {} ({} maximum matchings), alpha {}, cover number {}",
        marks.matching_number, marks.maximum_matchings, verdicts[0].alpha, verdicts[0].tau
    );
    let _ = writeln!(
        t,
        "KE: direct {}, flower/posy {}, flower/Tposy {}",
        yes(verdicts[0].is_ke),
        yes(verdicts[1].is_ke),
        yes(verdicts[2].is_ke)
    );
    let _ = writeln!(t, "V_T   {}", marks.v_t);
    let _ = writeln!(t, "V_ESG {}", marks.v_esg);
    let _ = writeln!(t, "V_J   {}", marks.v_j);
    let _ = writeln!(t, "SD graph: {}", yes(marks.is_sd()));
    let _ = writeln!(t, "reference matching: {}", edges(&m));
    let _ = writeln!(t, "blossoms: {}", blossoms.len());
    for b in &blossoms {
        let _ = writeln!(t, "  {}", blossom(b));
    }
    let lists: [(&str, Vec<Configuration>); 3] = [
        (
            "flowers",
            flowers.iter().cloned().map(Configuration::Flower).collect(),
        ),
        (
            "posies",
            posies.iter().cloned().map(Configuration::Posy).collect(),
        ),
        (
            "tposies",
            tposies.iter().cloned().map(Configuration::Tposy).collect(),
        ),
    ];
    for (name, cs) in &lists {
        let _ = writeln!(t, "{name}: {}", cs.len());
        for c in cs.iter().take(max_listed) {
            let _ = writeln!(t, "  {}", describe(c));
        }
    }
    if let Some(j) = &jflower {
        let _ = writeln!(t, "{}", describe(&Configuration::Jflower(j.clone())));
    }
    if let Some(j) = &jposy {
        let _ = writeln!(t, "{}", describe(&Configuration::Jposy(j.clone())));
    }
    let _ = writeln!(t, "witnesses:");
    for (v, w) in &marks.witnesses {
        let _ = writeln!(
            t,
            "  {v}: {} under {}",
            describe(&w.configuration),
            edges(&w.matching)
        );
    }
    Ok(Report { json, text: t })
}

pub fn witness(input: &Loaded, v: VertexId, label: u64, limits: &Limits) -> Result<Report> {
    let w = witness_for_vertex(&input.graph, v, limits)?;
    let json = json!({
        "graph6": graph6::encode(&input.graph),
        "vertex": v,
        "marked": w.is_some(),
        "witness": w.as_ref().map(|w| witness_json(v, w)),
    });
    let text = match &w {
        None => "unmarked\n".to_string(),
        Some(w) => format!(
            "vertex {label}: {}\nmatching: {}\n",
            describe(&w.configuration),
            edges(&w.matching)
        ),
    };
    Ok(Report { json, text })
}

pub fn verification(name: &str, max_order: Option<usize>, r: &VerificationReport) -> Report {
    let mut json = to_value(r);
    json["check"] = json!(name);
    json["max_order"] = json!(max_order);
    json["passed"] = json!(r.passed());
    let mut t = String::new();
    let _ = writeln!(t, "{} graphs", r.graphs);
    for (c, tally) in &r.tallies {
        let _ = writeln!(
            t,
            "  {:<10} {} checked, {} counterexamples",
            to_value(c).as_str().unwrap_or_default(),
            tally.checked,
            tally.counterexamples
        );
    }
    for c in &r.counterexamples {
        let _ = writeln!(
            t,
            "COUNTEREXAMPLE [{}] {}: {}",
            to_value(&c.check).as_str().unwrap_or_default(),
            c.graph6,
            c.detail
        );
    }
    let _ = writeln!(t, "{}", if r.passed() { "PASS" } else { "FAIL" });
    Report { json, text: t }
}

pub fn ears(max_order: usize, r: &EarReport) -> Report {
    let mut json = to_value(r);
    json["check"] = json!("eartposy");
    json["max_order"] = json!(max_order);
    json["passed"] = json!(r.passed());
    let mut t = String::new();
    let _ = writeln!(
        t,
        "{} base graphs (order <= {max_order}), {} graph+ear instances, {} failures",
        r.base_graphs,
        r.instances,
        r.failures.len()
    );
    for f in &r.failures {
        let _ = writeln!(
            t,
            "COUNTEREXAMPLE {} ear {}-{} length {}: uncovered {}",
            f.base_graph6, f.u, f.v, f.length, f.uncovered
        );
    }
    let _ = writeln!(t, "{}", if r.passed() { "PASS" } else { "FAIL" });
    Report { json, text: t }
}

pub fn conjecture(r: &ConjectureReport) -> Report {
    let json = to_value(r);
    let count = |c| r.counts.get(&c).copied().unwrap_or(0);
    let mut t = String::new();
    let _ = writeln!(
        t,
        "even-order Hamiltonian graphs (order <= {}): {}",
        r.max_order,
        r.even.len()
    );
    let _ = writeln!(
        t,
        "  KE {}  SD {}  neither {}",
        count(ConjectureClass::Ke),
        count(ConjectureClass::Sd),
        count(ConjectureClass::Counterexample)
    );
    for row in r.even_counterexamples() {
        let _ = writeln!(t, "NEITHER KE NOR SD: {}", row.graph6);
    }
    let _ = writeln!(
        t,
        "odd-order Hamiltonian graphs: {} checked, {} not SD",
        r.odd_checked,
        r.odd_failures.len()
    );
    for g6 in &r.odd_failures {
        let _ = writeln!(t, "NOT SD (odd order): {g6}");
    }
    Report { json, text: t }
}
