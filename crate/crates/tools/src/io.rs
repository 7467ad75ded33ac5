//! The JSON lattice format.
//!
//! ```json
//! {"n": 4, "labels": ["o", "a_l", "a_r", "t"],
//!  "upper_covers": [[1, 2], [3], [3], []],
//!  "lower_covers": [[], [0], [0], [1, 2]]}
//! ```
//!
//! Both cover lists run left to right and must mirror each other.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sps_core::{ElementId, PlanarLattice};

use crate::error::IoError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub n: usize,
    pub labels: Vec<String>,
    pub upper_covers: Vec<Vec<usize>>,
    pub lower_covers: Vec<Vec<usize>>,
}

impl LatticeFile {
    pub fn from_lattice(l: &PlanarLattice) -> Self {
        let ids = |lists: &[Vec<ElementId>]| lists.iter().map(|v| v.iter().map(|x| x.0).collect()).collect();
        LatticeFile {
            n: l.len(),
            labels: l.labels().to_vec(),
            upper_covers: ids(l.all_upper_covers()),
            lower_covers: ids(l.all_lower_covers()),
        }
    }

    /// Schema checks, then lattice validation.
    pub fn to_lattice(&self) -> Result<PlanarLattice, IoError> {
        self.check_schema()?;
        let ids = |lists: &[Vec<usize>]| {
            lists
                .iter()
                .map(|v| v.iter().map(|&x| ElementId(x)).collect())
                .collect()
        };
        Ok(PlanarLattice::new(
            self.labels.clone(),
            ids(&self.upper_covers),
            ids(&self.lower_covers),
        )?)
    }

    fn check_schema(&self) -> Result<(), IoError> {
        let n = self.n;
        for (what, len) in [
            ("labels", self.labels.len()),
            ("upper_covers", self.upper_covers.len()),
            ("lower_covers", self.lower_covers.len()),
        ] {
            if len != n {
                return Err(IoError::Schema(format!("{what} has {len} entries, n is {n}")));
            }
        }
        for (x, ups) in self.upper_covers.iter().enumerate() {
            for &u in ups {
                if u >= n {
                    return Err(IoError::Schema(format!("upper_covers[{x}] refers to {u}, n is {n}")));
                }
                if !self.lower_covers[u].contains(&x) {
                    return Err(IoError::Schema(format!(
                        "{u} is an upper cover of {x} but {x} is not a lower cover of {u}"
                    )));
                }
            }
        }
        for (x, lows) in self.lower_covers.iter().enumerate() {
            for &d in lows {
                if d >= n || !self.upper_covers[d].contains(&x) {
                    return Err(IoError::Schema(format!(
                        "lower_covers[{x}] lists {d}, which has no matching upper cover"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json(l: &PlanarLattice) -> String {
    let mut s = serde_json::to_string_pretty(&LatticeFile::from_lattice(l)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<PlanarLattice, IoError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(IoError::Parse)?;
    let file: LatticeFile = serde_json::from_value(value).map_err(|e| IoError::Schema(e.to_string()))?;
    file.to_lattice()
}

pub fn load(path: impl AsRef<Path>) -> Result<PlanarLattice, IoError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    from_json(&text)
}

pub fn save(l: &PlanarLattice, path: impl AsRef<Path>) -> Result<(), IoError> {
    let path = path.as_ref();
    fs::write(path, to_json(l)).map_err(|source| IoError::Write {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use sps_core::fixture;

    #[test]
    fn round_trip_is_index_identical() {
        for name in ["B2", "S7", "N5", "C2xC3"] {
            let l = fixture(name).unwrap();
            assert_eq!(from_json(&to_json(&l)).unwrap(), l);
        }
    }

    #[test]
    fn syntax_errors_are_parse_errors() {
        assert!(matches!(from_json("{\"n\": 1,"), Err(IoError::Parse(_))));
    }

    #[test]
    fn missing_and_extra_fields_are_schema_errors() {
        let missing = r#"{"n": 1, "labels": ["o"], "upper_covers": [[]]}"#;
        assert!(matches!(from_json(missing), Err(IoError::Schema(_))));
        let extra = r#"{"n": 1, "labels": ["o"], "upper_covers": [[]], "lower_covers": [[]], "x": 0}"#;
        assert!(matches!(from_json(extra), Err(IoError::Schema(_))));
    }

    #[test]
    fn disagreeing_cover_lists_are_schema_errors() {
        let bad = r#"{"n": 2, "labels": ["o", "t"], "upper_covers": [[1], []], "lower_covers": [[], []]}"#;
        assert!(matches!(from_json(bad), Err(IoError::Schema(_))));
        let short = r#"{"n": 3, "labels": ["o", "t"], "upper_covers": [[1], []], "lower_covers": [[], [0]]}"#;
        assert!(matches!(from_json(short), Err(IoError::Schema(_))));
    }

    #[test]
    fn non_lattices_are_validation_errors() {
        let two_tops =
            r#"{"n": 3, "labels": ["o", "a", "b"], "upper_covers": [[1, 2], [], []], "lower_covers": [[], [0], [0]]}"#;
        assert!(matches!(from_json(two_tops), Err(IoError::Validation(_))));
    }

    #[test]
    fn n5_loads_but_is_not_sps() {
        let n5 = from_json(&to_json(&fixture("N5").unwrap())).unwrap();
        assert!(!n5.is_sps());
    }
}
