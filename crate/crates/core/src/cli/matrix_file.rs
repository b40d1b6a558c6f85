//! On-disk and textual forms of transition matrices.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canonical::{MatrixKind, TransitionMatrix};
use crate::laurent::LaurentPoly;
use crate::partition::{revlex_order, Partition};

pub const SCHEMA: &str = "fock-canon/matrix/v1";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("no cached matrix at {0}")]
    CacheMiss(PathBuf),
    #[error("{path}: schema {found:?}, expected {SCHEMA:?}")]
    SchemaMismatch { path: PathBuf, found: String },
    #[error("{path}: {reason}")]
    Corrupt { path: PathBuf, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Serialized matrix. Entries are `[row, col, poly]` triples sorted by
/// position; `orientation` says whether basis vectors sit in rows or columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub schema: String,
    pub kind: MatrixKind,
    pub n: u32,
    pub m: usize,
    pub orientation: String,
    pub order: Vec<Partition>,
    pub entries: Vec<(usize, usize, LaurentPoly)>,
}

fn orientation(kind: MatrixKind) -> &'static str {
    match kind {
        MatrixKind::A => "column mu is bar|mu>",
        MatrixKind::D => "column mu is G(mu)",
        MatrixKind::E => "row lambda is G^-(lambda)",
        MatrixKind::C => "row lambda is the dual of G(lambda); C = D^-1",
    }
}

impl MatrixFile {
    pub fn from_matrix(t: &TransitionMatrix) -> Self {
        MatrixFile {
            schema: SCHEMA.to_string(),
            kind: t.kind,
            n: t.n,
            m: t.m,
            orientation: orientation(t.kind).to_string(),
            order: t.order.clone(),
            entries: t.entries.iter().map(|(&(i, j), c)| (i, j, c.clone())).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<TransitionMatrix, String> {
        if self.schema != SCHEMA {
            return Err(format!("schema {:?}, expected {SCHEMA:?}", self.schema));
        }
        if self.order != revlex_order(self.m) {
            return Err("order is not the reverse lexicographic list".into());
        }
        if !self.entries.windows(2).all(|w| (w[0].0, w[0].1) < (w[1].0, w[1].1)) {
            return Err("entries not strictly sorted".into());
        }
        let size = self.order.len();
        let mut out = TransitionMatrix::identity(self.kind, self.n, self.m);
        out.entries.clear();
        for (i, j, c) in &self.entries {
            if *i >= size || *j >= size {
                return Err(format!("entry ({i}, {j}) out of range"));
            }
            if c.is_zero() {
                return Err(format!("explicit zero at ({i}, {j})"));
            }
            out.entries.insert((*i, *j), c.clone());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

fn cell(t: &TransitionMatrix, i: usize, j: usize) -> LaurentPoly {
    t.get(i, j)
}

/// Indices kept by an optional block filter.
fn visible(t: &TransitionMatrix, rows: Option<&[usize]>) -> Vec<usize> {
    match rows {
        Some(r) => r.to_vec(),
        None => (0..t.size()).collect(),
    }
}

/// Header row of column labels, then one row per partition.
pub fn to_csv(t: &TransitionMatrix, rows: Option<&[usize]>) -> String {
    let idx = visible(t, rows);
    let mut out = String::from("partition");
    for &j in &idx {
        out.push(',');
        out.push_str(&t.order[j].label());
    }
    out.push('\n');
    for &i in &idx {
        out.push_str(&t.order[i].label());
        for &j in &idx {
            out.push(',');
            out.push_str(&cell(t, i, j).to_string());
        }
        out.push('\n');
    }
    out
}

/// The `array` layout with a leading column of row labels.
pub fn to_latex(t: &TransitionMatrix, rows: Option<&[usize]>) -> String {
    let idx = visible(t, rows);
    let mut out = format!("\\begin {{array}}{{{}}}", "c".repeat(idx.len() + 1));
    let body: Vec<String> = idx
        .iter()
        .map(|&i| {
            let mut row = format!(" {} ", t.order[i].spaced_label());
            for &j in &idx {
                row.push('&');
                row.push_str(&cell(t, i, j).to_latex());
            }
            row
        })
        .collect();
    out.push_str(&body.join("\\\\"));
    out.push_str("\\end {array}\n");
    out
}

/// `label: cell cell ...` with cells padded per column.
pub fn to_pretty(t: &TransitionMatrix, rows: Option<&[usize]>) -> String {
    let idx = visible(t, rows);
    let cells: Vec<Vec<String>> = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| cell(t, i, j).to_string()).collect())
        .collect();
    let widths: Vec<usize> = (0..idx.len())
        .map(|c| cells.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for (r, &i) in idx.iter().enumerate() {
        out.push_str(&t.order[i].label());
        out.push(':');
        for (c, text) in cells[r].iter().enumerate() {
            out.push(' ');
            out.push_str(text);
            if c + 1 < idx.len() {
                out.push_str(&" ".repeat(widths[c] - text.chars().count()));
            }
        }
        out.push('\n');
    }
    out
}

pub fn cache_path(dir: &Path, kind: MatrixKind, n: u32, m: usize) -> PathBuf {
    dir.join(format!("{kind}-n{n}-m{m}.json"))
}

/// Writes through a temporary file in the same directory and renames it
/// into place, so readers never see a partial document.
pub fn cache_store(dir: &Path, file: &MatrixFile) -> Result<PathBuf, CacheError> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, file.kind, file.n, file.m);
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(file.to_json().as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(&path).map_err(|e| e.error)?;
    Ok(path)
}

pub fn cache_load(dir: &Path, kind: MatrixKind, n: u32, m: usize) -> Result<MatrixFile, CacheError> {
    let path = cache_path(dir, kind, n, m);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Err(CacheError::CacheMiss(path)),
        Err(e) => return Err(e.into()),
    };
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| CacheError::Corrupt {
        path: path.clone(),
        reason: e.to_string(),
    })?;
    let found = value.get("schema").and_then(|s| s.as_str()).unwrap_or_default();
    if found != SCHEMA {
        return Err(CacheError::SchemaMismatch {
            path,
            found: found.to_string(),
        });
    }
    let file: MatrixFile = serde_json::from_value(value).map_err(|e| CacheError::Corrupt {
        path: path.clone(),
        reason: e.to_string(),
    })?;
    if (file.kind, file.n, file.m) != (kind, n, m) {
        return Err(CacheError::Corrupt {
            path,
            reason: "header does not match the file name".into(),
        });
    }
    file.to_matrix().map_err(|reason| CacheError::Corrupt {
        path: path.clone(),
        reason,
    })?;
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{adjoint_matrix, canonical_upper, printed_d_latex};

    fn squash(s: &str) -> String {
        s.chars().filter(|c| !c.is_whitespace()).collect()
    }

    #[test]
    fn latex_matches_published_d4() {
        let d = canonical_upper(2, 4).unwrap();
        assert_eq!(squash(&to_latex(&d, None)), squash(printed_d_latex(4).unwrap()));
    }

    #[test]
    fn pretty_and_csv() {
        let d = canonical_upper(2, 2).unwrap();
        assert_eq!(to_pretty(&d, None), "2: 1 0\n11: q 1\n");
        assert_eq!(to_csv(&d, None), "partition,2,11\n2,1,0\n11,q,1\n");
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let c = adjoint_matrix(&canonical_upper(2, 2).unwrap());
        let f = MatrixFile::from_matrix(&c);
        let entries: Vec<(usize, usize, String)> =
            f.entries.iter().map(|(i, j, p)| (*i, *j, p.to_string())).collect();
        assert_eq!(
            entries,
            vec![(0, 0, "1".into()), (1, 0, "-q".into()), (1, 1, "1".into())]
        );
        let s = f.to_json();
        let back = MatrixFile::from_json(&s).unwrap();
        assert_eq!(back.to_json(), s);
        assert_eq!(back.to_matrix().unwrap(), c);
    }

    #[test]
    fn cache_round_trip_and_errors() {
        let dir = tempfile::tempdir().unwrap();
        let d = canonical_upper(2, 6).unwrap();
        let f = MatrixFile::from_matrix(&d);
        assert!(matches!(
            cache_load(dir.path(), MatrixKind::D, 2, 6),
            Err(CacheError::CacheMiss(_))
        ));
        let path = cache_store(dir.path(), &f).unwrap();
        let before = fs::read(&path).unwrap();
        let loaded = cache_load(dir.path(), MatrixKind::D, 2, 6).unwrap();
        assert_eq!(loaded.to_json().as_bytes(), before.as_slice());
        let text = String::from_utf8(before).unwrap().replace(SCHEMA, "fock-canon/matrix/v0");
        fs::write(&path, text).unwrap();
        assert!(matches!(
            cache_load(dir.path(), MatrixKind::D, 2, 6),
            Err(CacheError::SchemaMismatch { .. })
        ));
    }

    #[test]
    fn concurrent_stores_leave_a_valid_file() {
        let dir = tempfile::tempdir().unwrap();
        let f = MatrixFile::from_matrix(&canonical_upper(2, 4).unwrap());
        std::thread::scope(|s| {
            for _ in 0..8 {
                s.spawn(|| cache_store(dir.path(), &f).unwrap());
                s.spawn(|| match cache_load(dir.path(), MatrixKind::D, 2, 4) {
                    Ok(g) => assert_eq!(g, f),
                    Err(CacheError::CacheMiss(_)) => {}
                    Err(e) => panic!("{e}"),
                });
            }
        });
        assert_eq!(cache_load(dir.path(), MatrixKind::D, 2, 4).unwrap(), f);
    }
}
