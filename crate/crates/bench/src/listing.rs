use serde::Serialize;
use tsa_core::testbed::{self, TestFunction};

use crate::config::SuiteKind;
use crate::error::{BenchError, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ListingRow {
    pub id: String,
    pub name: String,
    pub dimension: usize,
    pub bounds: Vec<[f64; 2]>,
    pub optimum: f64,
    pub modality: String,
}

/// Registered functions, optionally restricted to one suite.
pub fn rows(suite: Option<SuiteKind>) -> Result<Vec<ListingRow>> {
    let functions: Vec<TestFunction> = match suite {
        None => testbed::all_functions(),
        Some(SuiteKind::Custom) => {
            return Err(BenchError::Config("`custom` is not a listable suite".into()))
        }
        Some(kind) => kind.functions(),
    };
    Ok(functions
        .iter()
        .map(|f| ListingRow {
            id: f.id().to_string(),
            name: f.name().to_string(),
            dimension: f.default_dimension(),
            bounds: f.bounds().iter().map(|b| [b.lb, b.ub]).collect(),
            optimum: f.optimum_for(f.default_dimension()),
            modality: format!("{:?}", f.modality()),
        })
        .collect())
}

fn bounds_text(b: &[[f64; 2]]) -> String {
    if b.windows(2).all(|w| w[0] == w[1]) {
        format!("[{}, {}]^{}", b[0][0], b[0][1], b.len())
    } else {
        b.iter().map(|r| format!("[{}, {}]", r[0], r[1])).collect::<Vec<_>>().join(" x ")
    }
}

pub fn table(rows: &[ListingRow]) -> String {
    let mut out = format!("{:<5} {:<22} {:>3} {:<5} {:<28} {:>14}\n", "id", "name", "D", "type", "bounds", "optimum");
    for r in rows {
        out.push_str(&format!(
            "{:<5} {:<22} {:>3} {:<5} {:<28} {:>14}\n",
            r.id,
            r.name,
            r.dimension,
            r.modality,
            bounds_text(&r.bounds),
            r.optimum
        ));
    }
    out
}
