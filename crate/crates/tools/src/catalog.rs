//! A directory of generated lattices with a `catalog.json` index.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use sps_core::constructions::{reflection_canonical_form, GeneratedLattice};
use sps_core::PlanarLattice;

use crate::error::IoError;
use crate::io;

pub const CATALOG_FILE: &str = "catalog.json";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Flags {
    pub sps: bool,
    pub patch: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    /// SHA-256 of the canonical form up to reflection, hex encoded.
    pub id: String,
    /// File name relative to the catalog directory.
    pub path: String,
    pub n: usize,
    pub fork_depth: usize,
    pub flags: Flags,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

/// Stable identifier of a lattice diagram up to reflection.
pub fn lattice_id(l: &PlanarLattice) -> String {
    hex::encode(Sha256::digest(&reflection_canonical_form(l).0))
}

pub fn file_name(index: usize) -> String {
    format!("L{index:03}.json")
}

/// Writes every lattice to `dir/LNNN.json` and the index to
/// `dir/catalog.json`, creating `dir` if needed.
pub fn write_family(dir: &Path, family: &[GeneratedLattice]) -> Result<Catalog, IoError> {
    fs::create_dir_all(dir).map_err(|source| IoError::Write {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut catalog = Catalog::default();
    for (i, g) in family.iter().enumerate() {
        let path = file_name(i);
        io::save(&g.lattice, dir.join(&path))?;
        catalog.entries.push(CatalogEntry {
            id: lattice_id(&g.lattice),
            path,
            n: g.lattice.len(),
            fork_depth: g.depth,
            flags: Flags {
                sps: g.lattice.is_sps(),
                patch: g.lattice.is_patch_lattice(),
            },
        });
    }
    let index = dir.join(CATALOG_FILE);
    let mut text = serde_json::to_string_pretty(&catalog).expect("plain data serializes");
    text.push('\n');
    fs::write(&index, text).map_err(|source| IoError::Write { path: index, source })?;
    Ok(catalog)
}

pub fn read_catalog(dir: &Path) -> Result<Catalog, IoError> {
    let path = dir.join(CATALOG_FILE);
    let text = fs::read_to_string(&path).map_err(|source| IoError::Read { path, source })?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(IoError::Parse)?;
    serde_json::from_value(value).map_err(|e| IoError::Schema(e.to_string()))
}

/// Loads every catalogued lattice and checks its id and size.
pub fn load_family(dir: &Path) -> Result<Vec<(CatalogEntry, PlanarLattice)>, IoError> {
    read_catalog(dir)?
        .entries
        .into_iter()
        .map(|entry| {
            let path: PathBuf = dir.join(&entry.path);
            let l = io::load(&path)?;
            if lattice_id(&l) != entry.id || l.len() != entry.n {
                return Err(IoError::Schema(format!(
                    "{} does not match its catalog entry",
                    entry.path
                )));
            }
            Ok((entry, l))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use sps_core::generate_patch_lattices;

    #[test]
    fn write_then_load() {
        let dir = tempfile::tempdir().unwrap();
        let family = generate_patch_lattices(2).unwrap();
        let catalog = write_family(dir.path(), &family).unwrap();
        assert_eq!(catalog.entries.len(), 4);
        assert_eq!(catalog.entries[1].path, "L001.json");
        assert!(catalog.entries.iter().all(|e| e.flags.sps && e.flags.patch));
        let loaded = load_family(dir.path()).unwrap();
        for ((entry, l), g) in loaded.iter().zip(&family) {
            assert_eq!(l, &g.lattice);
            assert_eq!(entry.fork_depth, g.depth);
        }
    }

    #[test]
    fn mirror_images_share_an_id() {
        let l = generate_patch_lattices(2).unwrap().pop().unwrap().lattice;
        assert_eq!(lattice_id(&l), lattice_id(&l.mirrored()));
        assert_eq!(lattice_id(&l).len(), 64);
    }

    #[test]
    fn tampered_file_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        write_family(dir.path(), &generate_patch_lattices(1).unwrap()).unwrap();
        std::fs::copy(dir.path().join("L000.json"), dir.path().join("L001.json")).unwrap();
        assert!(matches!(load_family(dir.path()), Err(IoError::Schema(_))));
    }
}
