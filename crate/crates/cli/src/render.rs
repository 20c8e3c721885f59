//! Text and JSON renderers. JSON documents carry `schema_version`.

use clap::ValueEnum;
use nichols_core::criteria::{
    irreducible_labels, Outcome, OrbitOutcome, OrbitVerdict, ReasonStep, Table, TableLine, TableValue, Verdict,
    SCHEMA_VERSION,
};
use nichols_core::nichols::GradedDims;
use nichols_core::perm::{self, centralizer_blocks, CycleType};
use nichols_core::reps::CharacterLabel;
use nichols_core::ydmod::BraidingOperator;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn json_out(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn query(n: usize, t: &CycleType, label: &CharacterLabel) -> Value {
    json!({ "degree": n, "type": t.to_string(), "rep": label.to_string() })
}

fn trace_lines(trace: &[ReasonStep], indent: &str, out: &mut String) {
    for step in trace {
        let mark = if step.fired { "x" } else { " " };
        out.push_str(&format!("{indent}[{mark}] {}: {}\n", step.rule, step.note));
    }
}

pub fn verdict(n: usize, t: &CycleType, label: &CharacterLabel, v: &Verdict, format: Format) -> String {
    match format {
        Format::Json => {
            let mut doc = v.to_json();
            doc["query"] = query(n, t, label);
            json_out(doc)
        }
        Format::Text => {
            let mut out = format!("S{n}, class of type {t}, ρ = {}\n", label.pretty());
            let line = match &v.outcome {
                Outcome::Infinite => "dim B(V) = ∞".to_string(),
                Outcome::KnownFinite { dim, source } => format!("dim B(V) = {dim} [{source}]"),
                Outcome::Unknown => "unknown: no implemented criterion applies".to_string(),
            };
            out.push_str(&line);
            out.push_str("\ntrace:\n");
            trace_lines(&v.trace, "  ", &mut out);
            out
        }
    }
}

pub fn orbits(n: usize, verdicts: &[(CycleType, OrbitVerdict)], format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<Value> = verdicts
                .iter()
                .map(|(t, v)| {
                    let mut row = serde_json::to_value(v).expect("serializable");
                    row["type"] = json!(t.to_string());
                    row
                })
                .collect();
            json_out(json!({ "schema_version": SCHEMA_VERSION, "degree": n, "orbits": rows }))
        }
        Format::Text => {
            let width = verdicts.iter().map(|(t, _)| t.to_string().chars().count()).max().unwrap_or(0);
            let mut out = String::new();
            for (t, v) in verdicts {
                let what = match (v.outcome, v.deciding_rule()) {
                    (OrbitOutcome::InfiniteForAllRho, Some(r)) => format!("∞ for every ρ ({r})"),
                    _ => "unknown: no implemented criterion applies".to_string(),
                };
                out.push_str(&format!("{:<width$}  {what}\n", t.to_string()));
                if verdicts.len() == 1 {
                    trace_lines(&v.trace, "  ", &mut out);
                }
            }
            out
        }
    }
}

pub fn braiding(n: usize, t: &CycleType, label: &CharacterLabel, c: &BraidingOperator, format: Format) -> String {
    match format {
        Format::Json => {
            let mut doc = c.to_json();
            doc["schema_version"] = json!(SCHEMA_VERSION);
            doc["query"] = query(n, t, label);
            json_out(doc)
        }
        Format::Text => {
            let labels = c.labels();
            let mut out = format!("dim V = {}\nbasis: {}\n", c.dim(), labels.join(", "));
            for a in 0..c.dim() {
                for b in 0..c.dim() {
                    let terms: Vec<String> = c
                        .image(a, b)
                        .iter()
                        .map(|&(p, ref q)| {
                            let (x, y) = (p / c.dim(), p % c.dim());
                            format!("({q}) {} ⊗ {}", labels[x], labels[y])
                        })
                        .collect();
                    out.push_str(&format!("c({} ⊗ {}) = {}\n", labels[a], labels[b], terms.join(" + ")));
                }
            }
            out
        }
    }
}

pub fn hilbert(n: usize, t: &CycleType, label: &CharacterLabel, dim: usize, dims: &GradedDims, format: Format) -> String {
    match format {
        Format::Json => json_out(json!({
            "schema_version": SCHEMA_VERSION,
            "query": query(n, t, label),
            "dim_v": dim,
            "dims": dims.dims,
            "exhausted": dims.exhausted,
            "total": dims.exhausted.then(|| dims.total()),
        })),
        Format::Text => {
            let ds: Vec<String> = dims.dims.iter().map(ToString::to_string).collect();
            let mut out = format!("dim V = {dim}\ndims: {}\n", ds.join(" "));
            if dims.exhausted {
                out.push_str(&format!("exhausted: dim B(V) = {}\n", dims.total()));
            } else {
                out.push_str("not exhausted\n");
            }
            out
        }
    }
}

fn value_json(v: TableValue) -> (Value, Value) {
    match v {
        TableValue::Infinite => (json!("infinite"), Value::Null),
        TableValue::Finite(d) => (json!("finite"), json!(d)),
        TableValue::Unknown => (json!("unknown"), Value::Null),
    }
}

pub fn table(which: Table, lines: &[TableLine], format: Format) -> String {
    let name = match which {
        Table::S3 => "s3",
        Table::S4 => "s4",
    };
    match format {
        Format::Json => {
            let rows: Vec<Value> = lines
                .iter()
                .map(|l| {
                    let (value, dim) = value_json(l.value);
                    json!({
                        "orbit": l.row.orbit,
                        "type": l.row.cycle_type,
                        "isotropy": l.row.isotropy,
                        "representation": l.row.representation,
                        "labels": l.row.labels,
                        "value": value,
                        "dim": dim,
                        "reference": l.reference,
                    })
                })
                .collect();
            json_out(json!({ "schema_version": SCHEMA_VERSION, "table": name, "rows": rows }))
        }
        Format::Text => {
            let header = ["Orbit", "Isotropy group", "Representation", "dim B(V)", "Reference"];
            let cells: Vec<[String; 5]> = lines
                .iter()
                .map(|l| {
                    [
                        l.row.orbit.to_string(),
                        l.row.isotropy.to_string(),
                        l.row.representation.to_string(),
                        l.dim_text(),
                        l.reference_text(),
                    ]
                })
                .collect();
            let width = |i: usize| {
                cells
                    .iter()
                    .map(|c| c[i].chars().count())
                    .chain([header[i].chars().count()])
                    .max()
                    .unwrap_or(0)
            };
            let widths: Vec<usize> = (0..5).map(width).collect();
            let line = |row: &[String]| {
                let padded: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                    .collect();
                format!("{}\n", padded.join(" | ").trim_end())
            };
            let rule: String = widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().join("-+-") + "\n";
            let mut out = line(&header.map(String::from));
            out.push_str(&rule);
            for c in &cells {
                out.push_str(&line(c));
            }
            out
        }
    }
}

pub fn centralizer_report(n: usize, t: &CycleType, format: Format) -> String {
    let s = t.representative();
    let group = perm::centralizer(&s);
    let blocks = centralizer_blocks(&s);
    let (labels, complete) = irreducible_labels(&s);
    match format {
        Format::Json => {
            let bs: Vec<Value> = blocks
                .iter()
                .map(|b| {
                    json!({
                        "name": b.name(),
                        "cycle_length": b.cycle_length,
                        "multiplicity": b.multiplicity,
                        "cycles": b.cycles,
                        "generators": b.generators(n).iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "order": b.order().to_string(),
                    })
                })
                .collect();
            json_out(json!({
                "schema_version": SCHEMA_VERSION,
                "degree": n,
                "type": t.to_string(),
                "representative": s.to_string(),
                "group": group.name(),
                "order": t.centralizer_order().to_string(),
                "blocks": bs,
                "irreducible_labels": labels.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "labels_complete": complete,
            }))
        }
        Format::Text => {
            let mut out = format!(
                "s = {s}\ncentralizer: {} of order {}\n",
                group.name(),
                t.centralizer_order()
            );
            for b in &blocks {
                let gens: Vec<String> = b.generators(n).iter().map(ToString::to_string).collect();
                out.push_str(&format!("  {}: generators {}\n", b.name(), if gens.is_empty() { "none".into() } else { gens.join(", ") }));
            }
            let ls: Vec<String> = labels.iter().map(ToString::to_string).collect();
            out.push_str(&format!("irreducible labels: {}\n", ls.join(", ")));
            if !complete {
                out.push_str("some irreducibles have no label; supply matrices for them\n");
            }
            out
        }
    }
}
