//! On-disk memo of reports, one JSON file per normalized expression.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use sha2::{Digest, Sha256};

use crate::report::{SpectrumReport, ENGINE_VERSION};

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

#[derive(Debug)]
pub enum Lookup {
    Hit(SpectrumReport),
    Missing,
    /// The file exists but cannot be trusted; the reason is for the warning.
    Corrupt(String),
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Self { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// `<sha256 of key>.json` inside the cache directory.
    pub fn path_for(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(key.as_bytes());
        self.dir.join(format!("{}.json", hex::encode(digest)))
    }

    pub fn load(&self, key: &str) -> Lookup {
        let path = self.path_for(key);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Lookup::Missing,
            Err(e) => return Lookup::Corrupt(format!("{}: {e}", path.display())),
        };
        let report: SpectrumReport = match serde_json::from_slice(&bytes) {
            Ok(r) => r,
            Err(e) => return Lookup::Corrupt(format!("{}: {e}", path.display())),
        };
        if report.expression != key {
            return Lookup::Corrupt(format!(
                "{} holds `{}`, not `{key}`",
                path.display(),
                report.expression
            ));
        }
        if report.engine_version != ENGINE_VERSION {
            return Lookup::Corrupt(format!(
                "{} was written by engine {}",
                path.display(),
                report.engine_version
            ));
        }
        if let Err(e) = report.check_consistency() {
            return Lookup::Corrupt(format!("{}: {e}", path.display()));
        }
        Lookup::Hit(report)
    }

    /// Writes through a temporary file so readers never see half a report.
    pub fn store(&self, report: &SpectrumReport) -> io::Result<()> {
        let path = self.path_for(&report.expression);
        let unique = TMP_COUNTER.fetch_add(1, Ordering::Relaxed);
        let tmp = path.with_extension(format!("tmp{}-{unique}", std::process::id()));
        let mut text = serde_json::to_string_pretty(report).map_err(io::Error::other)?;
        text.push('\n');
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &path)
    }
}
