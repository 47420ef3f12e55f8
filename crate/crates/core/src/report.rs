//! Machine-readable and human-readable renderings of results.
//!
//! CSV and JSON output is byte-deterministic for fixed inputs. Distance
//! tables are written transposed: a `j` header row followed by `d12` and
//! `d34` rows, one column per index.

use std::fmt::Write as _;

use serde::Serialize;

use crate::balance::{ConjectureRecord, LBalanceVerdict};
use crate::diameter::DiameterResult;
use crate::graph::GpParams;
use crate::pathform::{DistanceProfile, SearchAnchors};

fn csv_string(rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv output is utf-8")
}

fn json_string<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn table_csv(rows: &[DistanceProfile]) -> String {
    let line = |label: &str, f: fn(&DistanceProfile) -> usize| {
        std::iter::once(label.to_owned())
            .chain(rows.iter().map(|r| f(r).to_string()))
            .collect::<Vec<_>>()
    };
    csv_string([
        line("j", |r| r.j),
        line("d12", |r| r.d12),
        line("d34", |r| r.d34),
    ])
}

pub fn table_json(rows: &[DistanceProfile]) -> String {
    json_string(rows)
}

pub fn table_text(p: &GpParams, rows: &[DistanceProfile], anchors: &SearchAnchors) -> String {
    let cells = |f: fn(&DistanceProfile) -> String| rows.iter().map(f).collect::<Vec<_>>();
    let header = cells(|r| format!("v_{}", r.j));
    let width = header.iter().map(String::len).max().unwrap_or(0).max(3);
    let mut out = String::new();
    let mut line = |label: &str, values: Vec<String>| {
        let _ = write!(out, "{label:<10}");
        for v in values {
            let _ = write!(out, " {v:>width$}");
        }
        out.push('\n');
    };
    line("", header);
    line("d12", cells(|r| r.d12.to_string()));
    line("d34", cells(|r| r.d34.to_string()));
    line("d", cells(|r| r.d.to_string()));
    let guaranteed = p.closed_form_guaranteed();
    let _ = writeln!(
        out,
        "{p}: d12 peaks at j = {}, d34 bottoms out at j = {}; closed form {}",
        anchors.peak_d12,
        anchors.d34_valley,
        if guaranteed {
            "exact"
        } else {
            "an upper bound only"
        }
    );
    out
}

#[derive(Serialize)]
struct WithParams<'a, T: Serialize> {
    n: usize,
    k: usize,
    #[serde(flatten)]
    inner: &'a T,
}

pub fn diameter_csv(p: &GpParams, r: &DiameterResult) -> String {
    csv_string([
        ["n", "k", "diameter", "method", "case_detail"]
            .map(String::from)
            .to_vec(),
        vec![
            p.n().to_string(),
            p.k().to_string(),
            r.value.to_string(),
            r.method.to_string(),
            r.case_detail.clone(),
        ],
    ])
}

pub fn diameter_json(p: &GpParams, r: &DiameterResult) -> String {
    json_string(&WithParams {
        n: p.n(),
        k: p.k(),
        inner: r,
    })
}

pub fn diameter_text(p: &GpParams, r: &DiameterResult) -> String {
    format!(
        "diam({p}) = {}  [{}: {}]\n",
        r.value, r.method, r.case_detail
    )
}

pub fn verdicts_csv(p: &GpParams, verdicts: &[LBalanceVerdict]) -> String {
    let header = [
        "n",
        "k",
        "ell",
        "holds",
        "pairs_checked",
        "witness_x",
        "witness_y",
        "w_xy",
        "w_yx",
    ]
    .map(String::from)
    .to_vec();
    let rows = verdicts.iter().map(|v| {
        let mut row = vec![
            p.n().to_string(),
            p.k().to_string(),
            v.ell.to_string(),
            v.holds.to_string(),
            v.pairs_checked.to_string(),
        ];
        match &v.witness {
            Some(w) => row.extend([
                w.x.to_string(),
                w.y.to_string(),
                w.w_xy_size.to_string(),
                w.w_yx_size.to_string(),
            ]),
            None => row.extend(std::iter::repeat_n(String::new(), 4)),
        }
        row
    });
    csv_string(std::iter::once(header).chain(rows))
}

pub fn verdicts_json(p: &GpParams, verdicts: &[LBalanceVerdict]) -> String {
    let rows: Vec<_> = verdicts
        .iter()
        .map(|v| WithParams {
            n: p.n(),
            k: p.k(),
            inner: v,
        })
        .collect();
    json_string(&rows)
}

pub fn verdicts_text(p: &GpParams, verdicts: &[LBalanceVerdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        let _ = write!(
            out,
            "{p} ell={}: {} ({} pairs checked)",
            v.ell,
            if v.holds { "balanced" } else { "NOT balanced" },
            v.pairs_checked
        );
        if let Some(w) = &v.witness {
            let _ = write!(
                out,
                "; |W_{0}{1}| = {2}, |W_{1}{0}| = {3}",
                w.x, w.y, w.w_xy_size, w.w_yx_size
            );
        }
        out.push('\n');
    }
    out
}

pub fn records_csv(records: &[ConjectureRecord]) -> String {
    let header = ["n", "k", "diameter", "attaining_j", "predicate"]
        .map(String::from)
        .to_vec();
    let rows = records.iter().map(|r| {
        vec![
            r.n.to_string(),
            r.k.to_string(),
            r.diameter.to_string(),
            r.attaining_j.map(|j| j.to_string()).unwrap_or_default(),
            r.predicate.to_string(),
        ]
    });
    csv_string(std::iter::once(header).chain(rows))
}

pub fn records_json(records: &[ConjectureRecord]) -> String {
    json_string(records)
}

pub fn records_text(records: &[ConjectureRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let j = r
            .attaining_j
            .map(|j| j.to_string())
            .unwrap_or_else(|| "-".into());
        let _ = writeln!(
            out,
            "GP({},{}): diam = {}, d(u0, v{j}) = diam",
            r.n, r.k, r.diameter
        );
    }
    let _ = writeln!(out, "{} instance(s)", records.len());
    out
}
