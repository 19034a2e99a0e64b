use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::universal::{Exponent, UniversalPolynomial};
use crate::algebra::{format_rat, parse_rat};

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("corrupt cache file {path}: {reason}")]
    Corrupt { path: PathBuf, reason: String },
    #[error("cache directory {0} is locked by another writer")]
    Locked(PathBuf),
    #[error("refusing to cache F_{{{n},{k}}}: it was never validated on holdouts")]
    Unvalidated { n: u32, k: u32 },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoeffEntry {
    exp: [u32; 4],
    value: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CacheFile {
    n: u32,
    k: u32,
    degree_bound: u32,
    coeffs: Vec<CoeffEntry>,
    provenance: Vec<String>,
    holdouts_validated: usize,
}

/// One JSON file per `(n, k)` in a directory.
#[derive(Clone, Debug)]
pub struct PolynomialCache {
    dir: PathBuf,
}

struct LockGuard(PathBuf);

impl Drop for LockGuard {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.0);
    }
}

impl PolynomialCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        PolynomialCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, n: u32, k: u32) -> PathBuf {
        self.dir.join(format!("F_{n}_{k}.json"))
    }

    fn io(path: &Path) -> impl FnOnce(io::Error) -> CacheError + '_ {
        move |source| CacheError::Io { path: path.to_path_buf(), source }
    }

    fn lock(&self) -> Result<LockGuard, CacheError> {
        fs::create_dir_all(&self.dir).map_err(Self::io(&self.dir))?;
        let path = self.dir.join(".lock");
        match OpenOptions::new().write(true).create_new(true).open(&path) {
            Ok(_) => Ok(LockGuard(path)),
            Err(e) if e.kind() == io::ErrorKind::AlreadyExists => Err(CacheError::Locked(self.dir.clone())),
            Err(e) => Err(Self::io(&path)(e)),
        }
    }

    pub fn encode(poly: &UniversalPolynomial) -> String {
        let file = CacheFile {
            n: poly.n,
            k: poly.k,
            degree_bound: poly.degree_bound,
            coeffs: poly
                .coefficients
                .iter()
                .map(|(e, c)| CoeffEntry { exp: *e, value: format_rat(c) })
                .collect(),
            provenance: poly.provenance.clone(),
            holdouts_validated: poly.holdouts_validated,
        };
        let mut s = serde_json::to_string_pretty(&file).expect("cache file serializes");
        s.push('\n');
        s
    }

    /// Write-then-rename, under the directory lock.
    pub fn store(&self, poly: &UniversalPolynomial) -> Result<PathBuf, CacheError> {
        if poly.holdouts_validated == 0 {
            return Err(CacheError::Unvalidated { n: poly.n, k: poly.k });
        }
        let _guard = self.lock()?;
        let path = self.path_for(poly.n, poly.k);
        let tmp = self.dir.join(format!(".F_{}_{}.json.tmp", poly.n, poly.k));
        {
            let mut f = File::create(&tmp).map_err(Self::io(&tmp))?;
            f.write_all(Self::encode(poly).as_bytes()).map_err(Self::io(&tmp))?;
            f.sync_all().map_err(Self::io(&tmp))?;
        }
        fs::rename(&tmp, &path).map_err(Self::io(&path))?;
        Ok(path)
    }

    /// `Ok(None)` when no file exists for the key.
    pub fn load(&self, n: u32, k: u32) -> Result<Option<UniversalPolynomial>, CacheError> {
        let path = self.path_for(n, k);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Self::io(&path)(e)),
        };
        Self::decode(&text, n, k).map(Some).map_err(|reason| CacheError::Corrupt { path, reason })
    }

    fn decode(text: &str, n: u32, k: u32) -> Result<UniversalPolynomial, String> {
        let file: CacheFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if file.n != n || file.k != k {
            return Err(format!("holds F_{{{},{}}}, expected F_{{{n},{k}}}", file.n, file.k));
        }
        if file.degree_bound != n + k {
            return Err(format!("degree bound {} is not n + k = {}", file.degree_bound, n + k));
        }
        if file.holdouts_validated == 0 {
            return Err("no holdouts validated".into());
        }
        let mut coefficients: BTreeMap<Exponent, _> = BTreeMap::new();
        for entry in file.coeffs {
            if entry.exp.iter().sum::<u32>() > file.degree_bound {
                return Err(format!("monomial {:?} exceeds the degree bound", entry.exp));
            }
            let value = parse_rat(&entry.value).map_err(|e| e.to_string())?;
            if coefficients.insert(entry.exp, value).is_some() {
                return Err(format!("monomial {:?} listed twice", entry.exp));
            }
        }
        Ok(UniversalPolynomial {
            n,
            k,
            degree_bound: file.degree_bound,
            coefficients,
            provenance: file.provenance,
            holdouts_validated: file.holdouts_validated,
        })
    }
}
