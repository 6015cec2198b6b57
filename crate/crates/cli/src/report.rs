//! Run reports: a config echo, per-instance results and aggregates.
//! Re-running with an identical config reproduces every non-timing field
//! byte for byte; wall-clock lives only in the `timing_ms` fields.

use std::fs;
use std::path::PathBuf;

use serde::Serialize;
use serde_json::Value;

pub const OUT_DIR_ENV: &str = "FEWPATHS_OUT_DIR";

#[derive(Debug, Serialize)]
pub struct InstanceRecord {
    pub id: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timing_ms: f64,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub graph: String,
    pub config: Value,
    pub instances: Vec<InstanceRecord>,
    pub aggregate: Value,
    pub timing_ms_total: f64,
}

impl RunReport {
    pub fn error_count(&self) -> usize {
        self.instances.iter().filter(|i| i.error.is_some()).count()
    }

    /// Writes to `--out`, else to `$FEWPATHS_OUT_DIR/<command>-report.json`,
    /// else to stdout.
    pub fn emit(&self, out: Option<&PathBuf>) -> std::io::Result<()> {
        let json = serde_json::to_string_pretty(self).expect("report serializes");
        match out {
            Some(path) => fs::write(path, json + "\n"),
            None => match std::env::var_os(OUT_DIR_ENV) {
                Some(dir) => {
                    let path = PathBuf::from(dir).join(format!("{}-report.json", self.command));
                    fs::write(&path, json + "\n")?;
                    eprintln!("report written to {}", path.display());
                    Ok(())
                }
                None => {
                    println!("{json}");
                    Ok(())
                }
            },
        }
    }
}

pub fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("value serializes")
}
