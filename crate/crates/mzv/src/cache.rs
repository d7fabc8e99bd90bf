//! Optional on-disk persistence of the value memo.
//!
//! The file `values.v1.txt` inside the cache directory holds one record per
//! line, `kind|index-tuple|p/q`, e.g. `mzf-rev|1,1|1/240`. Lines starting
//! with `#` are comments.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use crate::exact::{parse_rational, to_pq};
use crate::values::{memo_seed, memo_snapshot, IndexTuple, ValueKind};

pub const ENV_VAR: &str = "MZV_CACHE_DIR";
const FILE: &str = "values.v1.txt";
const HEADER: &str = "# mzv value cache v1: kind|index-tuple|p/q";

pub fn cache_file(dir: &Path) -> PathBuf {
    dir.join(FILE)
}

/// Parses one record line.
pub fn parse_record(line: &str) -> Option<(ValueKind, IndexTuple, crate::exact::Rational)> {
    let mut parts = line.trim().splitn(3, '|');
    let kind = parts.next()?.parse().ok()?;
    let l = parts.next()?.parse().ok()?;
    let v = parse_rational(parts.next()?).ok()?;
    Some((kind, l, v))
}

/// Loads records into the memo. Returns how many were accepted and how many
/// lines were skipped as malformed. A missing file is not an error.
pub fn load(dir: &Path) -> io::Result<(usize, usize)> {
    let text = match fs::read_to_string(cache_file(dir)) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok((0, 0)),
        Err(e) => return Err(e),
    };
    let (mut ok, mut bad) = (0, 0);
    for line in text.lines() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        match parse_record(t) {
            Some((k, l, v)) => {
                memo_seed(k, &l, v);
                ok += 1;
            }
            None => bad += 1,
        }
    }
    Ok((ok, bad))
}

/// Writes the full memo, replacing the file atomically.
pub fn save(dir: &Path) -> io::Result<usize> {
    fs::create_dir_all(dir)?;
    let records = memo_snapshot();
    let tmp = dir.join(format!("{FILE}.tmp"));
    {
        let mut f = io::BufWriter::new(fs::File::create(&tmp)?);
        writeln!(f, "{HEADER}")?;
        for (k, l, v) in &records {
            writeln!(f, "{}|{}|{}", k, l, to_pq(v, true))?;
        }
        f.flush()?;
    }
    fs::rename(&tmp, cache_file(dir))?;
    Ok(records.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn record_parsing() {
        let (k, l, v) = parse_record("mzf-rev|1,1|1/240").unwrap();
        assert_eq!(k, ValueKind::MzfReverse);
        assert_eq!(l.to_string(), "1,1");
        assert_eq!(v, rat(1, 240));
        assert!(parse_record("mzf-rev|1,1").is_none());
        assert!(parse_record("what|1|1/2").is_none());
        assert!(parse_record("mzf-reg||1/2").is_none());
    }
}
