//! On-disk JSON cache of enumerated Bruhat posets.
//!
//! One file per system, named after the system and the cache version. A file
//! whose header does not match the requested system, or whose element list
//! disagrees with a fresh enumeration, is ignored and rewritten.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{BruhatPoset, Canonical, CoxeterSystem, ElementId, Group};
use crate::error::{Error, Result};

/// Bumped whenever the enumeration order or the file layout changes.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Header {
    format_version: u32,
    code_version: String,
    #[serde(rename = "type")]
    type_label: String,
    rank: usize,
    m: Option<u32>,
    element_count: usize,
}

#[derive(Serialize, Deserialize)]
struct CachedPoset {
    header: Header,
    lengths: Vec<u32>,
    lower_covers: Vec<Vec<u32>>,
    canonical: Vec<Canonical>,
}

fn header_for(system: &CoxeterSystem) -> Header {
    Header {
        format_version: FORMAT_VERSION,
        code_version: env!("CARGO_PKG_VERSION").to_string(),
        type_label: system.name(),
        rank: system.rank(),
        m: system.dihedral_m(),
        element_count: system.order(),
    }
}

/// Path of the cache file for `system` inside `dir`.
pub fn cache_path(dir: &Path, system: &CoxeterSystem) -> PathBuf {
    let name: String = system
        .name()
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    dir.join(format!("{name}-v{FORMAT_VERSION}.json"))
}

fn try_load(path: &Path, group: &Arc<Group>) -> Option<Vec<Vec<ElementId>>> {
    let text = fs::read_to_string(path).ok()?;
    let cached: CachedPoset = serde_json::from_str(&text).ok()?;
    let expect = header_for(group.system());
    let h = &cached.header;
    if h.format_version != expect.format_version
        || h.code_version != expect.code_version
        || h.type_label != expect.type_label
        || h.rank != expect.rank
        || h.m != expect.m
        || h.element_count != group.order()
        || cached.lengths != group.lengths()
        || cached.lower_covers.len() != group.order()
    {
        return None;
    }
    if cached
        .canonical
        .iter()
        .zip(group.ids())
        .any(|(c, w)| c != group.canonical(w))
        || cached.canonical.len() != group.order()
    {
        return None;
    }
    let n = group.order() as u32;
    if cached.lower_covers.iter().flatten().any(|&u| u >= n) {
        return None;
    }
    Some(
        cached
            .lower_covers
            .into_iter()
            .map(|l| l.into_iter().map(ElementId).collect())
            .collect(),
    )
}

/// Loads the poset of `system` from `dir`, or builds it and writes the cache.
pub fn load_or_build(system: CoxeterSystem, dir: &Path) -> Result<BruhatPoset> {
    let group = Arc::new(Group::enumerate(system)?);
    let path = cache_path(dir, group.system());
    if let Some(lower) = try_load(&path, &group) {
        let reflections = BruhatPoset::reflections_of(&group);
        return Ok(BruhatPoset::from_covers(group, reflections, lower));
    }
    let poset = BruhatPoset::from_group(Arc::clone(&group))?;
    store(&poset, dir)?;
    Ok(poset)
}

/// Writes the cache file for `poset` into `dir`.
pub fn store(poset: &BruhatPoset, dir: &Path) -> Result<()> {
    let g = poset.group();
    let cached = CachedPoset {
        header: header_for(g.system()),
        lengths: g.lengths().to_vec(),
        lower_covers: poset
            .all_lower_covers()
            .iter()
            .map(|l| l.iter().map(|u| u.0).collect())
            .collect(),
        canonical: g.ids().map(|w| g.canonical(w).clone()).collect(),
    };
    fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
    let path = cache_path(dir, g.system());
    let text = serde_json::to_string(&cached).map_err(|e| Error::Cache(e.to_string()))?;
    fs::write(&path, text).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
}
