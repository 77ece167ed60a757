//! Settings resolution: flags override the config file, which overrides the
//! LSTAT_CACHE_DIR environment variable.

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use lstat_core::{Error, Result};

#[derive(Debug, Clone, Default)]
pub struct Settings {
    pub cache_dir: Option<PathBuf>,
    pub threads: Option<usize>,
}

impl Settings {
    pub fn resolve(
        config_path: Option<&Path>,
        cache_dir_flag: Option<PathBuf>,
        threads_flag: Option<usize>,
    ) -> Result<Self> {
        let file = match config_path {
            Some(p) => parse_config(p)?,
            None => HashMap::new(),
        };
        let cache_dir = cache_dir_flag
            .or_else(|| file.get("cache_dir").map(PathBuf::from))
            .or_else(|| std::env::var_os("LSTAT_CACHE_DIR").map(PathBuf::from));
        let threads = match threads_flag {
            Some(t) => Some(t),
            None => match file.get("threads") {
                Some(v) => Some(v.parse::<usize>().map_err(|_| {
                    Error::InvalidArgument(format!("config threads = {v:?} is not a number"))
                })?),
                None => None,
            },
        };
        Ok(Self { cache_dir, threads })
    }
}

/// `key=value` lines; `#` comments and blank lines ignored.
fn parse_config(path: &Path) -> Result<HashMap<String, String>> {
    let text = std::fs::read_to_string(path)?;
    let mut map = HashMap::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
            line: idx + 1,
            message: format!("expected key=value, got {line:?}"),
        })?;
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}
