//! File emission. CSV: comma separator, header row, `inf` for the unreachable
//! sentinel. JSON files embed the resolved configuration under `config`.

use std::fmt::Display;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::CliError;

pub struct OutputDir {
    root: PathBuf,
}

impl OutputDir {
    pub fn create(cfg: &ExperimentConfig) -> Result<Self, CliError> {
        fs::create_dir_all(&cfg.out).map_err(|e| {
            CliError::Usage(format!("cannot create output directory {}: {e}", cfg.out.display()))
        })?;
        let dir = OutputDir {
            root: cfg.out.clone(),
        };
        dir.write_json("config.json", cfg)?;
        Ok(dir)
    }

    fn path(&self, name: &str) -> PathBuf {
        self.root.join(name)
    }

    pub fn write_with<F>(&self, name: &str, body: F) -> Result<PathBuf, CliError>
    where
        F: FnOnce(&mut dyn Write) -> std::io::Result<()>,
    {
        let path = self.path(name);
        let write = || -> std::io::Result<()> {
            let mut w = BufWriter::new(fs::File::create(&path)?);
            body(&mut w)?;
            w.flush()
        };
        write().map_err(|e| io_error(&path, e))?;
        log::info!("wrote {}", path.display());
        Ok(path)
    }

    pub fn write_json<T: Serialize + ?Sized>(&self, name: &str, value: &T) -> Result<PathBuf, CliError> {
        self.write_with(name, |w| {
            serde_json::to_writer_pretty(&mut *w, value)?;
            writeln!(w)
        })
    }

    /// Header plus rows, every cell rendered through `Display`.
    pub fn write_csv<R>(&self, name: &str, header: &[&str], rows: R) -> Result<PathBuf, CliError>
    where
        R: IntoIterator<Item = Vec<String>>,
    {
        self.write_with(name, |w| {
            writeln!(w, "{}", header.join(","))?;
            for row in rows {
                writeln!(w, "{}", row.join(","))?;
            }
            Ok(())
        })
    }
}

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError::Usage(format!("cannot write {}: {e}", path.display()))
}

/// Formats a float for CSV; infinities print as `inf`.
pub fn num(x: f64) -> String {
    if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        x.to_string()
    }
}

/// Quotes a label when it would break a CSV cell.
pub fn cell(s: impl Display) -> String {
    let s = s.to_string();
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}
