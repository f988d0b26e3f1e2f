//! On-disk cache of oracle representatives, keyed by group and library version.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{Context, Result};
use schubert_clans::{Exec, Oracle, WeylGroup, VERSION};

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> Cache {
        Cache {
            dir: dir.to_path_buf(),
        }
    }

    pub fn oracle_path(&self, group: WeylGroup) -> PathBuf {
        self.dir.join(format!("oracle-{group}-v{VERSION}.json"))
    }

    /// Loads the cached oracle if it is present and passes its spot check,
    /// otherwise builds it and writes it back. Either way the result becomes
    /// the process-wide oracle for `group`.
    pub fn oracle(&self, group: WeylGroup) -> Result<Arc<Oracle>> {
        let path = self.oracle_path(group);
        if let Some(oracle) = fs::read(&path)
            .ok()
            .and_then(|bytes| serde_json::from_slice(&bytes).ok())
            .and_then(|value| Oracle::from_json(group, &value))
        {
            return Ok(Oracle::install_shared(oracle));
        }
        let oracle = Oracle::new(group, Exec::Parallel)?;
        self.write_atomic(&path, &serde_json::to_vec(&oracle.to_json())?)?;
        Ok(Oracle::install_shared(oracle))
    }

    fn write_atomic(&self, path: &Path, bytes: &[u8]) -> Result<()> {
        fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating cache directory {}", self.dir.display()))?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(bytes)?;
        tmp.persist(path)
            .with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }
}
