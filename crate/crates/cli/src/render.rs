//! Plain-text rendering. Nothing here depends on timing or thread count.

use std::fmt::Write as _;

use leflab_core::arrangement::CorpusSpec;
use leflab_core::lefschetz::{AciReport, LefschetzReport, RankRecord};
use leflab_core::GinCertificate;
use serde_json::{json, Value};

use crate::scan::{violations, ScanEntry};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn gin(cert: &GinCertificate, reg: u32, saturated: bool, hf: &[usize]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "rgin = {}", cert.result);
    let _ = writeln!(s, "minimal generators (degrevlex, ascending):");
    for g in cert.result.mingens() {
        let _ = writeln!(s, "  {g}");
    }
    let _ = writeln!(s, "regularity: {reg}");
    let _ = writeln!(s, "saturated: {}", yes(saturated));
    let _ = writeln!(
        s,
        "certificate: {} of {} trials agree, coefficient bound {}, seed {:#x}",
        cert.trials_agreeing,
        cert.trials.len(),
        cert.coefficient_bound,
        cert.seed
    );
    let _ = writeln!(s, "hilbert function of S/rgin:");
    let _ = writeln!(s, "  {:>3}  {:>8}", "d", "HF");
    for (d, h) in hf.iter().enumerate() {
        let _ = writeln!(s, "  {d:>3}  {h:>8}");
    }
    s
}

fn rank_line(r: &RankRecord) -> String {
    let mut line = format!("i={} s={}: rank {} on {} -> {}", r.i, r.s, r.rank, r.source_dim, r.target_dim);
    if let Some(w) = &r.witness {
        let kind = if r.source_dim <= r.target_dim { "kernel" } else { "missed" };
        let _ = write!(line, ", {kind} {w}");
    }
    line
}

pub fn lefschetz(r: &LefschetzReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}: {}", r.property, if r.holds { "holds" } else { "fails" });
    let _ = writeln!(s, "route: {}", serde_json::to_value(r.route).unwrap().as_str().unwrap());
    let _ = writeln!(s, "regularity: {}, quotient truncated from degree {}", r.reg, r.artinian_truncation_degree);
    if let Some(agrees) = r.oracle_agrees {
        let _ = writeln!(s, "oracle agrees: {}", yes(agrees));
    }
    if let Some(note) = &r.note {
        let _ = writeln!(s, "note: {note}");
    }
    if !r.failures.is_empty() {
        let _ = writeln!(s, "failing maps:");
        for f in &r.failures {
            let _ = writeln!(s, "  {}", rank_line(f));
        }
    }
    s
}

fn joined(v: &Value, sep: &str) -> String {
    v.as_array()
        .map(|a| a.iter().map(|x| x.to_string().trim_matches('"').to_string()).collect::<Vec<_>>().join(sep))
        .unwrap_or_default()
}

fn list(v: &Value) -> String {
    joined(v, " ")
}

fn flag(v: &Value) -> &'static str {
    yes(v.as_bool().unwrap_or(false))
}

pub fn arrangement(r: &Value) -> String {
    let mut s = String::new();
    if let Some(name) = r["name"].as_str() {
        let _ = writeln!(s, "name: {name}");
    }
    let _ = writeln!(
        s,
        "{} hyperplanes in {} variables, rank {}, essential: {}",
        r["d"], r["nvars"], r["rank"], flag(&r["essential"])
    );
    let _ = writeln!(s, "hyperplanes: {}", joined(&r["hyperplanes"], ", "));
    let der = &r["derivations"];
    let _ = writeln!(s, "D(A) generator degrees: {}", list(&der["generator_pdegrees"]));
    let _ = writeln!(s, "D(A) relation degrees: {}", list(&der["relation_degrees"]));
    match r["exponents"].as_array() {
        Some(_) => {
            let _ = writeln!(s, "free: yes, exponents {}", list(&r["exponents"]));
        }
        None => {
            let _ = writeln!(s, "free: no");
        }
    }
    let po = &r["plus_one"];
    if po["plus_one"].as_bool() == Some(true) {
        let _ = writeln!(s, "plus-one generated: yes, exponents {}, level {}", list(&po["exponents"]), po["level"]);
    } else {
        let _ = writeln!(s, "plus-one generated: no");
    }
    let _ = writeln!(s, "rgin(J): <{}>", joined(&r["gin_generators"], ", "));
    let shape = &r["gin_shape"];
    let lambda = if shape["lambda"].is_array() { format!(", lambda {}", list(&shape["lambda"])) } else { String::new() };
    let _ = writeln!(s, "gin staircase free: {}{lambda}; shape holds: {}", flag(&shape["free"]), flag(&shape["shape_holds"]));
    let c = &r["conjecture"];
    let _ = writeln!(
        s,
        "conjecture: {} (p0 {}, smallest generator involving x2..: {})",
        if c["pass"].as_bool() == Some(true) { "PASS" } else { "FAIL" },
        c["p0"],
        c["min_tail_degree"]
    );
    let _ = writeln!(s, "WLP: {}", flag(&r["wlp"]));
    if r["wlp_failure_degree"].is_number() {
        let _ = writeln!(s, "first failing map lands in degree {}", r["wlp_failure_degree"]);
    }
    let _ = writeln!(s, "SLP: {}", flag(&r["slp"]));
    if let Some(agrees) = r["oracle_agrees"].as_bool() {
        let _ = writeln!(s, "oracle agrees: {}", yes(agrees));
    }
    let _ = writeln!(s, "consistency:");
    for f in r["consistency"].as_array().into_iter().flatten() {
        let status = match (f["applicable"].as_bool(), f["holds"].as_bool()) {
            (Some(false), _) => "n/a",
            (_, Some(true)) => "ok",
            _ => "FAIL",
        };
        let _ = writeln!(s, "  {status:<4}  {}", f["name"].as_str().unwrap_or(""));
    }
    s
}

pub fn scan_summary(entries: &[ScanEntry]) -> Value {
    let count = |key: &dyn Fn(&Value) -> bool| entries.iter().filter(|e| key(&e.report)).count();
    json!({
        "arrangements": entries.len(),
        "free": count(&|r| r["free"] == Value::Bool(true)),
        "plus_one": count(&|r| r["plus_one"]["plus_one"] == Value::Bool(true)),
        "wlp": count(&|r| r["wlp"] == Value::Bool(true)),
        "slp": count(&|r| r["slp"] == Value::Bool(true)),
        "conjecture_pass": count(&|r| r["conjecture"]["pass"] == Value::Bool(true)),
        "violations": entries.iter().filter(|e| !violations(&e.report).is_empty()).count(),
    })
}

pub fn scan_table(spec: &CorpusSpec, entries: &[ScanEntry]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "corpus: {} {}arrangements in {} variables, {} to {} hyperplanes, seed {:#x}",
        spec.count,
        if spec.essential_only { "essential " } else { "" },
        spec.nvars,
        spec.min_d,
        spec.max_d,
        spec.seed
    );
    let _ = writeln!(s, "{:>5} {:>3} {:>5} {:>5} {:>9} {:>4} {:>4} {:>11}", "index", "d", "rank", "free", "plus-one", "WLP", "SLP", "conjecture");
    for e in entries {
        let r = &e.report;
        let _ = writeln!(
            s,
            "{:>5} {:>3} {:>5} {:>5} {:>9} {:>4} {:>4} {:>11}",
            e.index,
            r["d"],
            r["rank"],
            flag(&r["free"]),
            flag(&r["plus_one"]["plus_one"]),
            flag(&r["wlp"]),
            flag(&r["slp"]),
            if r["conjecture"]["pass"].as_bool() == Some(true) { "PASS" } else { "FAIL" }
        );
    }
    let sum = scan_summary(entries);
    let _ = writeln!(
        s,
        "totals: free {}, plus-one {}, WLP {}, SLP {}, conjecture PASS {}, violations {}",
        sum["free"], sum["plus_one"], sum["wlp"], sum["slp"], sum["conjecture_pass"], sum["violations"]
    );
    s
}

pub fn aci(r: &AciReport) -> String {
    let mut s = String::new();
    let [d0, d1, d2] = r.degrees;
    let _ = writeln!(s, "degrees: {d0} {d1} {d2}");
    let _ = writeln!(s, "m(I) = {}", r.m);
    let identity = r.deg_f == (d0 + d1 + d2) as i64 - r.m - 2;
    let _ = writeln!(s, "deg F = {} (d0+d1+d2-m(I)-2 = {}: {})", r.deg_f, (d0 + d1 + d2) as i64 - r.m - 2, if identity { "ok" } else { "FAIL" });
    let _ = writeln!(s, "F(1) = {}", r.multiplicity);
    let _ = writeln!(s, "numerator: {}", r.numerator.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
    let _ = writeln!(s, "stability: {}", serde_json::to_value(r.stability).unwrap().as_str().unwrap());
    let _ = writeln!(s, "saturated: {}", yes(r.saturated));
    let _ = writeln!(s, "x l on (I^sat/I)_i -> (I^sat/I)_(i+1):");
    let _ = writeln!(s, "  {:>3} {:>6} {:>6} {:>5} {:>10} {:>11}", "i", "source", "target", "rank", "injective", "surjective");
    for q in &r.sat_quotient {
        let _ = writeln!(
            s,
            "  {:>3} {:>6} {:>6} {:>5} {:>10} {:>11}",
            q.i,
            q.source_dim,
            q.target_dim,
            q.rank,
            yes(q.injective()),
            yes(q.surjective())
        );
    }
    let _ = writeln!(
        s,
        "thresholds (injective for i <= {}, surjective for i >= {}): {}",
        r.injective_through,
        r.surjective_from,
        if r.thresholds_hold { "ok" } else { "FAIL" }
    );
    let _ = writeln!(s, "WLP: {}", yes(r.wlp.holds));
    if !r.violations.is_empty() {
        let _ = writeln!(s, "violations:");
        for v in &r.violations {
            let _ = writeln!(s, "  {v}");
        }
    }
    s
}
