//! Corpus scans with a content-addressed report cache.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use leflab_core::arrangement::{analyze, corpus_member, AnalysisOptions, Arrangement, CorpusSpec};
use leflab_core::Result;
use rayon::prelude::*;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::SCHEMA;

/// Reports stored as `<sha256>.json`, keyed by the arrangement and every
/// option that can change the report.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    pub fn key(a: &Arrangement, opts: &AnalysisOptions) -> String {
        let mut h = Sha256::new();
        h.update(SCHEMA.as_bytes());
        h.update(b"\n");
        h.update(a.clone().unnamed().to_text().as_bytes());
        h.update(
            format!(
                "seed={} bound={} trials={} include_q={} cross_validate={}\n",
                opts.gin.seed, opts.gin.bound, opts.gin.max_trials, opts.include_q, opts.cross_validate
            )
            .as_bytes(),
        );
        hex::encode(h.finalize())
    }

    pub fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn load(&self, key: &str) -> Option<Value> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn store(&self, key: &str, report: &Value) -> io::Result<()> {
        // write-then-rename so a reader never sees a half-written entry
        let tmp = self.dir.join(format!("{key}.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_string(report).expect("reports serialize"))?;
        fs::rename(tmp, self.path(key))
    }
}

pub struct ScanEntry {
    pub index: usize,
    pub arrangement: Arrangement,
    pub report: Value,
    pub cached: bool,
}

/// Report for one arrangement, from the cache when possible.
pub fn report_for(a: &Arrangement, opts: &AnalysisOptions, cache: Option<&Cache>) -> Result<(Value, bool)> {
    let key = Cache::key(a, opts);
    if let Some(v) = cache.and_then(|c| c.load(&key)) {
        return Ok((v, true));
    }
    let v = serde_json::to_value(analyze(a, opts)?).expect("reports serialize");
    if let Some(c) = cache {
        // a failed cache write only costs a recomputation next time
        let _ = c.store(&key, &v);
    }
    Ok((v, false))
}

/// Analyzes every corpus member in parallel; entries come back in index order.
pub fn scan(spec: &CorpusSpec, opts: &AnalysisOptions, cache: Option<&Cache>) -> Result<Vec<ScanEntry>> {
    (0..spec.count)
        .into_par_iter()
        .map(|index| {
            let arrangement = corpus_member(spec, index);
            let (report, cached) = report_for(&arrangement, opts, cache)?;
            Ok(ScanEntry { index, arrangement, report, cached })
        })
        .collect()
}

/// Names of the applicable consistency checks that failed.
pub fn violations(report: &Value) -> Vec<String> {
    report["consistency"]
        .as_array()
        .map(|flags| {
            flags
                .iter()
                .filter(|f| f["applicable"] == Value::Bool(true) && f["holds"] == Value::Bool(false))
                .filter_map(|f| f["name"].as_str().map(str::to_string))
                .collect()
        })
        .unwrap_or_default()
}
