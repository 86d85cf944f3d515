//! On-disk cache for computed invariant bases, keyed by (k, r, m, group),
//! with a content hash so a corrupted or tampered entry is recomputed
//! rather than trusted. Writes are atomic (temp file + rename), so
//! concurrent invocations cannot observe a half-written entry.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use jetcalc::dimension::InvariantBasis;
use jetcalc::jetcore::JetConfig;

/// Cache directory resolution: explicit flag, then `JETCALC_CACHE`, then the
/// platform cache directory, then a temp-dir fallback.
pub fn resolve_cache_dir(flag: Option<PathBuf>) -> PathBuf {
    if let Some(dir) = flag {
        return dir;
    }
    if let Some(dir) = std::env::var_os("JETCALC_CACHE") {
        return PathBuf::from(dir);
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(dir).join("jetcalc");
    }
    if let Some(home) = std::env::var_os("HOME") {
        return PathBuf::from(home).join(".cache").join("jetcalc");
    }
    std::env::temp_dir().join("jetcalc-cache")
}

pub fn basis_path(dir: &Path, config: JetConfig, m: u32) -> PathBuf {
    dir.join(format!(
        "inv-basis-k{}-r{}-m{}-Uk.json",
        config.k, config.r, m
    ))
}

fn key_json(config: JetConfig, m: u32) -> Value {
    json!({ "k": config.k, "r": config.r, "m": m, "group": "Uk" })
}

fn payload_hash(payload: &Value) -> String {
    let bytes = serde_json::to_vec(payload).expect("serializable value");
    let digest = Sha256::digest(&bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Load a cached basis, verifying both the key and the content hash.
/// Returns `None` (with a warning for anything other than a missing file)
/// whenever the entry cannot be trusted.
pub fn load(
    path: &Path,
    config: JetConfig,
    m: u32,
    stderr: &mut impl Write,
) -> Option<InvariantBasis> {
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
        Err(e) => {
            let _ = writeln!(stderr, "warning: cannot read cache {}: {e}", path.display());
            return None;
        }
    };
    let warn_corrupt = |stderr: &mut dyn Write| {
        let _ = writeln!(
            stderr,
            "warning: cache entry {} is corrupted; recomputing",
            path.display()
        );
    };
    let Ok(value) = serde_json::from_str::<Value>(&text) else {
        warn_corrupt(stderr);
        return None;
    };
    if value.get("key") != Some(&key_json(config, m)) {
        warn_corrupt(stderr);
        return None;
    }
    let (Some(stored_hash), Some(payload)) =
        (value.get("sha256").and_then(Value::as_str), value.get("basis"))
    else {
        warn_corrupt(stderr);
        return None;
    };
    if stored_hash != payload_hash(payload) {
        warn_corrupt(stderr);
        return None;
    }
    match InvariantBasis::from_json(payload) {
        Ok(basis) if basis.config == config && basis.weight == m => Some(basis),
        _ => {
            warn_corrupt(stderr);
            None
        }
    }
}

/// Atomically store an entry; failures are reported on the diagnostic
/// stream but never abort the computation that produced the value.
pub fn store(path: &Path, basis: &InvariantBasis, stderr: &mut impl Write) {
    let payload = basis.to_json();
    let entry = json!({
        "key": key_json(basis.config, basis.weight),
        "sha256": payload_hash(&payload),
        "basis": payload,
    });
    let result = (|| -> std::io::Result<()> {
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
        fs::write(&tmp, serde_json::to_string_pretty(&entry).expect("json"))?;
        fs::rename(&tmp, path)?;
        Ok(())
    })();
    if let Err(e) = result {
        let _ = writeln!(stderr, "warning: cannot write cache {}: {e}", path.display());
    }
}
