//! Property cache: one JSON file per canonical ring spec, keyed by the
//! sha256 of the canonical spec text plus the tool version (version bumps
//! invalidate everything). Directory override via SRL_CACHE_DIR; no other
//! environment dependence.

use std::fs;
use std::path::PathBuf;

use sha2::{Digest, Sha256};

use crate::props::RingProperties;
use crate::report::TOOL_VERSION;

pub const CACHE_DIR_ENV: &str = "SRL_CACHE_DIR";

pub fn cache_dir() -> PathBuf {
    match std::env::var_os(CACHE_DIR_ENV) {
        Some(dir) => PathBuf::from(dir),
        None => std::env::temp_dir().join("srl-cache"),
    }
}

fn key(canonical_spec: &str) -> String {
    let mut h = Sha256::new();
    h.update(canonical_spec.as_bytes());
    h.update(b"\n");
    h.update(TOOL_VERSION.as_bytes());
    hex::encode(h.finalize())
}

pub fn load(canonical_spec: &str) -> Option<RingProperties> {
    let path = cache_dir().join(key(canonical_spec)).with_extension("json");
    let text = fs::read_to_string(path).ok()?;
    serde_json::from_str(&text).ok()
}

/// Best effort: a failed write only loses the cache entry. Concurrent
/// identical writes are tolerated by writing to a temp name first.
pub fn store(canonical_spec: &str, props: &RingProperties) {
    let dir = cache_dir();
    if fs::create_dir_all(&dir).is_err() {
        return;
    }
    let path = dir.join(key(canonical_spec)).with_extension("json");
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    if let Ok(text) = serde_json::to_string(props) {
        if fs::write(&tmp, text).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use srl_core::BuildConfig;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        std::env::set_var(CACHE_DIR_ENV, dir.path());
        let ring = srl_core::build_ring(&srl_core::RingExpr::Zmod { n: 6 }, &BuildConfig::default())
            .unwrap();
        let props = crate::props::compute_properties(&ring);
        store("Z(6)", &props);
        assert_eq!(load("Z(6)"), Some(props));
        std::env::remove_var(CACHE_DIR_ENV);
    }
}
