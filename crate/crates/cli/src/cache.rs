//! On-disk cache of slice reports, one file per slice.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use lamweb::completion::{parse_element, WebElement};
use sha2::{Digest, Sha256};

pub struct SliceCache {
    dir: PathBuf,
}

impl SliceCache {
    pub fn new(dir: &Path) -> SliceCache {
        SliceCache { dir: dir.to_path_buf() }
    }

    /// File name for a slice identified by its key parts.
    pub fn key(parts: &[&str]) -> String {
        let mut h = Sha256::new();
        for p in parts {
            h.update((p.len() as u64).to_le_bytes());
            h.update(p.as_bytes());
        }
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.slice"))
    }

    /// The cached elements, if the entry exists, carries `header` and every
    /// element line parses.
    pub fn load(&self, key: &str, header: &str) -> Option<BTreeSet<WebElement>> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let mut lines = text.lines();
        if lines.next()? != header || !text.ends_with('\n') {
            return None;
        }
        lines.map(|l| parse_element(l).ok()).collect()
    }

    /// Writes through a temporary file and an atomic rename.
    pub fn store(&self, key: &str, report: &str) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!("{key}.{}.tmp", std::process::id()));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(report.as_bytes())?;
        f.sync_all()?;
        fs::rename(tmp, self.path(key))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupt_entries_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SliceCache::new(dir.path());
        let key = SliceCache::key(&["w", "t"]);
        cache.store(&key, "H\na\n({a},a)\n").unwrap();
        assert_eq!(cache.load(&key, "H").unwrap().len(), 2);
        assert!(cache.load(&key, "other").is_none());
        fs::write(dir.path().join(format!("{key}.slice")), "H\n({a},\n").unwrap();
        assert!(cache.load(&key, "H").is_none());
        fs::write(dir.path().join(format!("{key}.slice")), "H\na").unwrap();
        assert!(cache.load(&key, "H").is_none());
    }
}
