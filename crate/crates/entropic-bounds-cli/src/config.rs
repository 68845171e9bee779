//! Config-file handling, thread-pool setup and the CLI error/exit-code
//! contract.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

/// Error carrying the process exit code: 1 verification failure,
/// 2 usage/validation, 3 I/O.
#[derive(Debug)]
pub enum CliError {
    Verification(String),
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Verification(m) | CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<entropic_bounds::Error> for CliError {
    fn from(err: entropic_bounds::Error) -> Self {
        CliError::Usage(err.to_string())
    }
}

/// Flat key=value file mirroring the long flag names (dashes or underscores),
/// e.g. `points=101`, `unit=bits`, `q-list=0.5,1,2`. Lines starting with `#`
/// are comments.
pub struct FileConfig {
    map: HashMap<String, String>,
}

impl FileConfig {
    pub fn empty() -> Self {
        Self {
            map: HashMap::new(),
        }
    }

    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Self::empty());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
        let mut map = HashMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Usage(format!(
                    "config {} line {}: expected key=value",
                    path.display(),
                    lineno + 1
                )));
            };
            map.insert(key.trim().replace('-', "_"), value.trim().to_string());
        }
        Ok(Self { map })
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        match self.map.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|_| {
                CliError::Usage(format!("config key {key}: cannot parse {raw:?}"))
            }),
        }
    }

    /// Comma-separated list value.
    pub fn get_list(&self, key: &str) -> Result<Option<Vec<f64>>, CliError> {
        match self.map.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .split(',')
                .map(|s| {
                    s.trim().parse::<f64>().map_err(|_| {
                        CliError::Usage(format!("config key {key}: cannot parse {raw:?}"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()
                .map(Some),
        }
    }

    pub fn get_flag(&self, key: &str) -> Result<bool, CliError> {
        Ok(self.get::<bool>(key)?.unwrap_or(false))
    }
}

/// Flag value if given, else config value, else default.
pub fn resolve<T: FromStr>(
    flag: Option<T>,
    file: &FileConfig,
    key: &str,
    default: T,
) -> Result<T, CliError> {
    match flag {
        Some(v) => Ok(v),
        None => Ok(file.get::<T>(key)?.unwrap_or(default)),
    }
}

/// Build the global worker pool. ENTROPIC_BOUNDS_THREADS caps whatever the
/// flag or config requests.
pub fn init_threads(flag: Option<usize>, file: &FileConfig) -> Result<(), CliError> {
    let cap = std::env::var("ENTROPIC_BOUNDS_THREADS")
        .ok()
        .map(|raw| {
            raw.parse::<usize>().map_err(|_| {
                CliError::Usage(format!("ENTROPIC_BOUNDS_THREADS: cannot parse {raw:?}"))
            })
        })
        .transpose()?;
    let requested = match flag {
        Some(v) => Some(v),
        None => file.get::<usize>("threads")?,
    };
    let effective = match (requested, cap) {
        (Some(r), Some(c)) => Some(r.min(c)),
        (Some(r), None) => Some(r),
        (None, Some(c)) => Some(c),
        (None, None) => None,
    };
    if let Some(n) = effective {
        if n == 0 {
            return Err(CliError::Usage("thread count must be positive".into()));
        }
        // ignore "already initialized" (only possible in tests)
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}
