//! On-disk catalog cache.
//!
//! Files are named `<symbol>-<engine_version>.json`, so an engine change
//! never reads a stale catalog. Writes go to a temporary file in the same
//! directory and are renamed into place; readers see either nothing or a
//! complete file.

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use super::{compute_pc_bar, engine_version, Catalog, SingularityClass};

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_VAR: &str = "DYNKIN_CACHE_DIR";

/// `$DYNKIN_CACHE_DIR`, else `$XDG_CACHE_HOME/dynkin-pc`, else
/// `$HOME/.cache/dynkin-pc`. `None` when none of these is set.
pub fn cache_dir_from_env() -> Option<PathBuf> {
    let var = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
    var(CACHE_DIR_VAR)
        .or_else(|| var("XDG_CACHE_HOME").map(|p| p.join("dynkin-pc")))
        .or_else(|| var("HOME").map(|p| p.join(".cache").join("dynkin-pc")))
}

#[derive(Debug, Clone)]
pub struct CatalogCache {
    dir: PathBuf,
}

impl CatalogCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn from_env() -> Option<Self> {
        cache_dir_from_env().map(Self::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, class: SingularityClass) -> PathBuf {
        self.dir.join(format!("{class}-{}.json", engine_version()))
    }

    /// A cached catalog that parses, matches the engine version and replays.
    /// Anything else counts as a miss.
    pub fn load(&self, class: SingularityClass) -> Option<Catalog> {
        let text = std::fs::read_to_string(self.path(class)).ok()?;
        let (catalog, version) = Catalog::from_json(&text).ok()?;
        (catalog.class() == class && version == engine_version() && catalog.validate().is_ok())
            .then_some(catalog)
    }

    pub fn store(&self, catalog: &Catalog) -> io::Result<PathBuf> {
        std::fs::create_dir_all(&self.dir)?;
        let path = self.path(catalog.class());
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(catalog.to_json().as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(path)
    }

    /// Loads the catalog, computing and storing it on a miss. A failed
    /// write is reported but the computed catalog is still returned.
    pub fn get_or_compute(&self, class: SingularityClass) -> (Catalog, Option<io::Error>) {
        if let Some(c) = self.load(class) {
            return (c, None);
        }
        let c = compute_pc_bar(class);
        let err = self.store(&c).err();
        (c, err)
    }
}
