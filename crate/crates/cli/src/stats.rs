//! `stats --batch`: one CSV row per instance file.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use hskernel::pipeline::solve;
use hskernel::{KernelOutcome, Registry};
use rayon::prelude::*;

use crate::{load, pick_variant, resolve_k};

const HEADER: [&str; 12] = [
    "instance", "variant", "n", "m", "k", "kernel_n", "kernel_m", "kernel_k", "bound_n", "bound_m",
    "decision", "error",
];

fn row(
    registry: &Registry,
    path: &Path,
    variant: Option<&str>,
    k: Option<i64>,
    budget: Option<u64>,
) -> anyhow::Result<Vec<String>> {
    let loaded = load(path)?;
    let k = resolve_k(k, &loaded.text, path)?;
    let kz = pick_variant(registry, variant, loaded.graph.kind())?;
    let problem = kz.problem(loaded.graph, k)?;
    let mut cells = vec![
        kz.name().to_string(),
        problem.vertex_count().to_string(),
        problem.edge_count().to_string(),
        k.to_string(),
    ];
    match kz.kernelize(&problem)? {
        KernelOutcome::Decided { .. } => cells.extend(std::iter::repeat_n(String::new(), 5)),
        KernelOutcome::Kernel { instance, .. } => {
            let b = kz.bounds(&problem, &instance);
            cells.extend([
                instance.vertex_count().to_string(),
                instance.edge_count().to_string(),
                instance.k().to_string(),
                b.vertices.to_string(),
                b.edges.map(|e| e.to_string()).unwrap_or_default(),
            ]);
        }
    }
    let decision = match solve(kz, &problem, budget) {
        Ok(s) if s.yes => "YES".to_string(),
        Ok(_) => "NO".to_string(),
        Err(hskernel::Error::BudgetExhausted { .. }) => "UNKNOWN".to_string(),
        Err(e) => return Err(e.into()),
    };
    cells.push(decision);
    cells.push(String::new());
    Ok(cells)
}

pub(crate) fn run(
    registry: &Registry,
    dir: &Path,
    variant: Option<&str>,
    k: Option<i64>,
    budget: Option<u64>,
) -> anyhow::Result<u8> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("cannot list {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    // Each file runs single-threaded; par_iter keeps the input order.
    let rows: Vec<Vec<String>> = files
        .par_iter()
        .map(|path| {
            let name = path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default();
            let mut cells = vec![name];
            match row(registry, path, variant, k, budget) {
                Ok(rest) => cells.extend(rest),
                Err(e) => {
                    cells.extend(std::iter::repeat_n(String::new(), HEADER.len() - 2));
                    cells.push(format!("{e:#}"));
                }
            }
            cells
        })
        .collect();
    let mut out = csv::Writer::from_writer(std::io::stdout());
    out.write_record(HEADER)?;
    for r in rows {
        out.write_record(&r)?;
    }
    out.flush()?;
    Ok(0)
}
