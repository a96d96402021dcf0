//! Planarity against `Z/2` torsion over many graphs, with an on-disk cache.
//!
//! Each graph's record is stored as `<sha256 of key>.json` in the cache
//! directory, where the key is the graph id plus the scan settings; a rerun
//! only computes graphs with no record yet. Certificates for non-planar graphs
//! go next to the records as `<sha256>.cert.json`.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::Context;
use chromhom_core::graph::{connected_graphs, encode_graph6, is_planar, MAX_ENUMERATION_N};
use chromhom_core::{certify_nonplanar, check_certificate, CertificateDocument, Graph, NormalizationReport};
use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::exit::{CmdResult, Failure, INTERNAL};
use crate::homology::shape_report;
use crate::input::{read_corpus, shapes_for, InputFormat};

pub const CACHE_ENV: &str = "CHROMHOM_CACHE_DIR";

#[derive(Args)]
pub struct SurveyArgs {
    /// Corpus file: edge-list blocks or one graph6 per line.
    #[arg(required_unless_present = "generate", conflicts_with = "generate")]
    corpus: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    input_format: InputFormat,
    /// Survey every connected graph on 1..=N vertices instead of a corpus.
    #[arg(long, value_name = "N")]
    generate: Option<usize>,
    /// Worker threads; 0 lets the pool decide.
    #[arg(long, short, default_value_t = 0)]
    jobs: usize,
    /// Record cache directory; overrides $CHROMHOM_CACHE_DIR.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Sweep 2 <= k <= n/2 instead of k = 2 only.
    #[arg(long)]
    all_shapes: bool,
    /// Largest n for which homology is computed directly; above it only the
    /// certificate decides `has_z2`.
    #[arg(long, default_value_t = 8)]
    max_homology_n: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Jsonl)]
    format: TableFormat,
    /// Write the table here instead of stdout.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Jsonl,
}

/// One row of the survey table. Flat so that it also fits a CSV row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub id: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub had_loop: bool,
    pub planar: bool,
    /// Shapes scanned, separated by spaces.
    pub shapes: String,
    /// `H1` per scanned shape, `shape: group`, separated by `; `.
    pub homology: String,
    /// `Z/2` found by direct homology; empty when homology was not computed.
    pub direct_z2: Option<bool>,
    /// Direct homology or a verified certificate shows `Z/2`.
    pub has_z2: bool,
    /// File name of the certificate inside the cache directory.
    pub certificate: Option<String>,
    pub runtime_ms: u64,
    pub error: Option<String>,
}

impl SurveyRecord {
    /// A loopless non-planar graph without detected `Z/2`.
    pub fn violates_invariant(&self) -> bool {
        self.error.is_none() && !self.had_loop && !self.planar && !self.has_z2
    }
}

struct Settings {
    all_shapes: bool,
    max_homology_n: usize,
    cache: Option<PathBuf>,
}

impl Settings {
    fn cache_key(&self, id: &str) -> String {
        let key = format!("{id}|all_shapes={}|max_homology_n={}", self.all_shapes, self.max_homology_n);
        hex::encode(Sha256::digest(key.as_bytes()))
    }
}

fn cached(dir: &Path, key: &str, id: &str) -> Option<SurveyRecord> {
    let text = std::fs::read_to_string(dir.join(format!("{key}.json"))).ok()?;
    let rec: SurveyRecord = serde_json::from_str(&text).ok()?;
    (rec.id == id && rec.error.is_none()).then_some(rec)
}

/// Writes through a temporary name so an interrupted run leaves no torn file.
fn write_atomic(path: &Path, text: &str) -> anyhow::Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, text).with_context(|| format!("writing {}", tmp.display()))?;
    std::fs::rename(&tmp, path).with_context(|| format!("renaming to {}", path.display()))?;
    Ok(())
}

fn compute(g: &Graph, report: &NormalizationReport, settings: &Settings, key: &str) -> anyhow::Result<SurveyRecord> {
    let planar = is_planar(g);
    let shapes = shapes_for(g.n(), None, settings.all_shapes).map_err(|f| f.error)?;
    let mut homology = Vec::new();
    let mut direct_z2 = None;
    if !report.had_loop && g.n() <= settings.max_homology_n {
        let mut found = false;
        for s in &shapes {
            let r = shape_report(g, s).map_err(|f| f.error)?;
            found |= r.has_z2;
            homology.push(format!("{}: {}", r.shape, r.group()));
        }
        direct_z2 = Some(found);
    }
    let mut has_z2 = direct_z2 == Some(true);
    let mut certificate = None;
    if !planar && !report.had_loop {
        let nc = certify_nonplanar(g)?;
        let verdict = check_certificate(&nc.certificate, &nc.complex)?;
        anyhow::ensure!(verdict.is_valid(), "certificate for {} does not verify", g.id());
        has_z2 = true;
        if let Some(dir) = &settings.cache {
            let name = format!("{key}.cert.json");
            let doc = CertificateDocument::from_nonplanar(&nc, verdict)?;
            write_atomic(&dir.join(&name), &doc.to_json())?;
            certificate = Some(name);
        }
    }
    Ok(SurveyRecord {
        id: g.id(),
        graph6: encode_graph6(g),
        n: g.n(),
        m: g.m(),
        had_loop: report.had_loop,
        planar,
        shapes: shapes.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
        homology: homology.join("; "),
        direct_z2,
        has_z2,
        certificate,
        runtime_ms: 0,
        error: None,
    })
}

fn process(g: &Graph, report: &NormalizationReport, settings: &Settings) -> SurveyRecord {
    let id = g.id();
    let key = settings.cache_key(&id);
    if let Some(rec) = settings.cache.as_deref().and_then(|d| cached(d, &key, &id)) {
        return rec;
    }
    let start = Instant::now();
    let mut rec = compute(g, report, settings, &key).unwrap_or_else(|e| SurveyRecord {
        id: id.clone(),
        graph6: encode_graph6(g),
        n: g.n(),
        m: g.m(),
        had_loop: report.had_loop,
        planar: is_planar(g),
        shapes: String::new(),
        homology: String::new(),
        direct_z2: None,
        has_z2: false,
        certificate: None,
        runtime_ms: 0,
        error: Some(format!("{e:#}")),
    });
    rec.runtime_ms = start.elapsed().as_millis() as u64;
    if let (Some(dir), None) = (&settings.cache, &rec.error) {
        let text = serde_json::to_string_pretty(&rec).expect("records serialize");
        if let Err(e) = write_atomic(&dir.join(format!("{key}.json")), &text) {
            eprintln!("warning: cache write failed: {e:#}");
        }
    }
    rec
}

fn write_table(records: &[SurveyRecord], format: TableFormat, out: &mut dyn Write) -> anyhow::Result<()> {
    match format {
        TableFormat::Jsonl => {
            for r in records {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Counts of `(planar, has_z2)` among loopless graphs without errors.
fn cross_tab(records: &[SurveyRecord]) -> BTreeMap<(bool, bool), usize> {
    let mut t = BTreeMap::new();
    for r in records.iter().filter(|r| r.error.is_none() && !r.had_loop) {
        *t.entry((r.planar, r.has_z2)).or_insert(0) += 1;
    }
    t
}

pub fn run(args: &SurveyArgs) -> CmdResult {
    let graphs: Vec<(Graph, NormalizationReport)> = match (args.generate, &args.corpus) {
        (Some(n), _) => {
            if n > MAX_ENUMERATION_N {
                return Err(Failure::input(anyhow::anyhow!(
                    "--generate supports n <= {MAX_ENUMERATION_N}, got {n}"
                )));
            }
            (1..=n)
                .flat_map(connected_graphs)
                .map(|g| (g, NormalizationReport::default()))
                .collect()
        }
        (None, Some(path)) => read_corpus(path, args.input_format)?,
        (None, None) => unreachable!("clap requires a corpus or --generate"),
    };

    let cache = args.cache.clone().or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
    if let Some(dir) = &cache {
        std::fs::create_dir_all(dir)
            .with_context(|| format!("creating cache directory {}", dir.display()))
            .map_err(Failure::input)?;
    }
    let settings = Settings {
        all_shapes: args.all_shapes,
        max_homology_n: args.max_homology_n,
        cache,
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(Failure::internal)?;
    let mut records: Vec<SurveyRecord> =
        pool.install(|| graphs.par_iter().map(|(g, r)| process(g, r, &settings)).collect());
    records.sort_by(|a, b| a.id.cmp(&b.id));

    match &args.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .with_context(|| format!("creating {}", path.display()))
                .map_err(Failure::internal)?;
            write_table(&records, args.format, &mut f).map_err(Failure::internal)?;
        }
        None => {
            let stdout = std::io::stdout();
            write_table(&records, args.format, &mut stdout.lock()).map_err(Failure::internal)?;
        }
    }

    let tab = cross_tab(&records);
    let count = |p, z| tab.get(&(p, z)).copied().unwrap_or(0);
    let errors = records.iter().filter(|r| r.error.is_some()).count();
    eprintln!(
        "{} graphs: planar with Z/2 {}, planar without {}, non-planar with Z/2 {}, non-planar without {}, errors {}",
        records.len(),
        count(true, true),
        count(true, false),
        count(false, true),
        count(false, false),
        errors
    );
    let violations: Vec<&str> = records
        .iter()
        .filter(|r| r.violates_invariant())
        .map(|r| r.id.as_str())
        .collect();
    if !violations.is_empty() {
        eprintln!("error: non-planar graphs without Z/2: {}", violations.join(", "));
        return Ok(INTERNAL);
    }
    for r in records.iter().filter(|r| r.error.is_some()) {
        eprintln!("error: {}: {}", r.id, r.error.as_deref().unwrap_or_default());
    }
    Ok(if errors > 0 { INTERNAL } else { 0 })
}
