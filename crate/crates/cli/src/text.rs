use std::fmt::Write;

use crate::corpus::CorpusReport;
use crate::report::{FormulaOut, Report, Stage};

fn list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn stage_line<T>(out: &mut String, label: &str, stage: &Stage<T>, show: impl Fn(&T) -> String) {
    match stage {
        Stage::Computed { value } => writeln!(out, "{label}: {}", show(value)).unwrap(),
        Stage::Skipped { reason } => writeln!(out, "{label}: skipped ({reason})").unwrap(),
    }
}

fn formula(f: &FormulaOut) -> String {
    let mut s = format!("{} {} [{}]", f.kind, f.value, f.provenance.join(", "));
    for c in &f.components {
        write!(s, "\n  component {}: {} ({})", list(&c.vertices), c.value, c.clause).unwrap();
    }
    s
}

pub fn render_report(r: &Report) -> String {
    let mut out = String::new();
    let edges: Vec<String> = r.input.edges.iter().map(|[a, b]| format!("{a}-{b}")).collect();
    write!(out, "graph: n={}", r.input.n).unwrap();
    if let Some(m) = r.input.m {
        write!(out, " m={m}").unwrap();
    }
    writeln!(out, " edges=[{}]", edges.join(" ")).unwrap();

    let c = &r.classification;
    writeln!(
        out,
        "classification: chordal={} blockGraph={} generalizedBlockGraph={} cliqueNumber={} connected={}",
        c.chordal, c.block_graph, c.generalized_block_graph, c.clique_number, c.connected
    )
    .unwrap();

    stage_line(&mut out, "census", &r.census, |cs| {
        let a: Vec<String> = cs
            .a
            .iter()
            .enumerate()
            .map(|(k, v)| format!("a_{}={v}", k + 1))
            .collect();
        let cuts: Vec<String> = cs.minimal_cut_sets.iter().map(|s| list(s)).collect();
        let cps: Vec<String> = cs
            .cut_point_sets
            .iter()
            .map(|t| format!("{}:{}", list(&t.set), t.components))
            .collect();
        format!(
            "omega={} {}\n  minimal cut sets: {}\n  cut-point sets: {}",
            cs.omega,
            a.join(" "),
            cuts.join(" "),
            cps.join(" ")
        )
    });

    if let Some(f) = &r.formulas {
        stage_line(&mut out, "depth", &f.depth, formula);
        stage_line(&mut out, "regularity", &f.regularity, formula);
        stage_line(&mut out, "dimension", &f.dimension, |d| {
            let per: Vec<String> = d
                .per_prime
                .iter()
                .map(|p| format!("{}:{}", list(&p.cut_point_set), p.dimension))
                .collect();
            format!("{} (per prime {})", d.value, per.join(" "))
        });
        stage_line(&mut out, "unmixed", &f.unmixed, bool::to_string);
    }

    if let Some(reason) = &r.verification_skipped {
        writeln!(out, "verification: skipped ({reason})").unwrap();
    }
    if let Some(v) = &r.verification {
        stage_line(&mut out, "oracle", &v.oracle, |o| {
            let betti: Vec<String> =
                o.betti.iter().map(|b| format!("b{},{}={}", b.i, b.j, b.value)).collect();
            format!(
                "variables={} depth={} regularity={} projectiveDimension={}\n  betti: {}",
                o.variables,
                o.depth,
                o.regularity,
                o.projective_dimension,
                betti.join(" ")
            )
        });
        for d in &v.verdicts {
            writeln!(out, "verdict {}: {} ({})", d.check, d.status.as_str(), d.detail).unwrap();
        }
    }

    let timings: Vec<String> = r.timings.iter().map(|t| format!("{}={}us", t.stage, t.micros)).collect();
    writeln!(out, "timings: {}", timings.join(" ")).unwrap();
    out
}

pub fn render_corpus(c: &CorpusReport) -> String {
    let mut out = String::new();
    for row in &c.rows {
        let verdicts: Vec<String> = row
            .verdicts
            .iter()
            .map(|v| format!("{}={}", v.check, v.status.as_str()))
            .collect();
        writeln!(
            out,
            "{:>4} edges=[{}] {} {}",
            row.index,
            row.edges.iter().map(|[a, b]| format!("{a}-{b}")).collect::<Vec<_>>().join(" "),
            row.status,
            verdicts.join(" ")
        )
        .unwrap();
    }
    let s = &c.summary;
    writeln!(
        out,
        "summary: graphs={} pass={} fail={} skipped={}",
        s.graphs, s.pass, s.fail, s.skipped
    )
    .unwrap();
    out
}
