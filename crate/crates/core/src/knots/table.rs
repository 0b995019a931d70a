use std::collections::BTreeMap;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use super::record::{KnotEntry, KnotRecord, LinkEntry, LinkRecord};
use crate::error::{Error, Result};
use crate::format::{from_toml, SCHEMA_VERSION};

const BUILTIN: &str = include_str!("../../data/knots.toml");

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotTableFile {
    pub schema_version: u32,
    #[serde(default)]
    pub knot: Vec<KnotEntry>,
    #[serde(default)]
    pub link: Vec<LinkEntry>,
}

/// Named knots and links. Names are unique and entries are never replaced.
#[derive(Clone, Debug, Default)]
pub struct KnotTable {
    knots: BTreeMap<String, KnotRecord>,
    links: BTreeMap<String, LinkRecord>,
}

impl KnotTable {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn builtin() -> Self {
        Self::from_toml_str(BUILTIN).expect("built-in knot table is valid")
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let mut t = Self::empty();
        t.load_toml_str(text)?;
        Ok(t)
    }

    /// Adds every entry of a table file; fails without partial effect if any
    /// entry is invalid or already present.
    pub fn load_toml_str(&mut self, text: &str) -> Result<()> {
        let file: KnotTableFile = from_toml(text)?;
        let mut staged = self.clone();
        for k in file.knot {
            staged.insert_knot(k.into_record()?)?;
        }
        for l in file.link {
            staged.insert_link(l.into_record()?)?;
        }
        *self = staged;
        Ok(())
    }

    pub fn insert_knot(&mut self, r: KnotRecord) -> Result<()> {
        r.validate()?;
        if self.knots.contains_key(&r.name) || self.links.contains_key(&r.name) {
            return Err(Error::Parse(format!("duplicate entry {}", r.name)));
        }
        self.knots.insert(r.name.clone(), r);
        Ok(())
    }

    pub fn insert_link(&mut self, r: LinkRecord) -> Result<()> {
        r.validate()?;
        if self.knots.contains_key(&r.name) || self.links.contains_key(&r.name) {
            return Err(Error::Parse(format!("duplicate entry {}", r.name)));
        }
        for c in &r.components {
            if !self.knots.contains_key(c) {
                return Err(Error::Unregistered(format!("component {c} of link {}", r.name)));
            }
        }
        self.links.insert(r.name.clone(), r);
        Ok(())
    }

    pub fn knot(&self, name: &str) -> Result<&KnotRecord> {
        self.knots.get(name).ok_or_else(|| Error::Unregistered(name.to_string()))
    }

    pub fn link(&self, name: &str) -> Result<&LinkRecord> {
        self.links.get(name).ok_or_else(|| Error::Unregistered(name.to_string()))
    }

    pub fn knots(&self) -> impl Iterator<Item = &KnotRecord> {
        self.knots.values()
    }

    pub fn links(&self) -> impl Iterator<Item = &LinkRecord> {
        self.links.values()
    }

    pub fn to_file(&self) -> Result<KnotTableFile> {
        Ok(KnotTableFile {
            schema_version: SCHEMA_VERSION,
            knot: self.knots.values().map(KnotEntry::from_record).collect::<Result<_>>()?,
            link: Vec::new(),
        })
    }
}

/// A table shared between threads: reads run concurrently, registrations
/// take the write lock and may only add new names.
#[derive(Debug, Default)]
pub struct KnotRegistry {
    inner: RwLock<KnotTable>,
}

impl KnotRegistry {
    pub fn new(table: KnotTable) -> Self {
        Self { inner: RwLock::new(table) }
    }

    pub fn builtin() -> Self {
        Self::new(KnotTable::builtin())
    }

    pub fn register_knot(&self, r: KnotRecord) -> Result<()> {
        self.inner.write().expect("registry lock poisoned").insert_knot(r)
    }

    pub fn register_link(&self, r: LinkRecord) -> Result<()> {
        self.inner.write().expect("registry lock poisoned").insert_link(r)
    }

    pub fn knot(&self, name: &str) -> Result<KnotRecord> {
        self.inner.read().expect("registry lock poisoned").knot(name).cloned()
    }

    pub fn link(&self, name: &str) -> Result<LinkRecord> {
        self.inner.read().expect("registry lock poisoned").link(name).cloned()
    }

    pub fn snapshot(&self) -> KnotTable {
        self.inner.read().expect("registry lock poisoned").clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, LaurentPoly};

    #[test]
    fn builtin_loads() {
        let t = KnotTable::builtin();
        assert_eq!(t.knot("5_2m").unwrap().sl_bar_mirror, Some(1));
        assert!(matches!(t.knot("nope"), Err(Error::Unregistered(_))));
        for k in t.knots() {
            assert_eq!(k.alexander.eval(&int(1)).unwrap(), int(1));
        }
    }

    #[test]
    fn registry_is_append_only() {
        let reg = KnotRegistry::builtin();
        let trefoil = reg.knot("3_1").unwrap();
        assert!(reg.register_knot(trefoil).is_err());
        let k = KnotRecord::from_conway("twist", LaurentPoly::from_pairs('z', [(0, int(1)), (2, int(3))])).unwrap();
        reg.register_knot(k).unwrap();
        assert_eq!(reg.knot("twist").unwrap().alexander.coeff(1), int(3));
    }

    #[test]
    fn rejects_bad_records() {
        let bad = "schema_version = 1\n[[knot]]\nname = \"x\"\nconway = [[0,1,1],[2,1,1]]\nalexander = [[0,1,1]]\n";
        assert!(KnotTable::from_toml_str(bad).is_err());
        let odd_sl = "schema_version = 1\n[[knot]]\nname = \"x\"\nconway = [[0,1,1]]\nsl_bar_mirror = 0\n";
        assert!(KnotTable::from_toml_str(odd_sl).is_err());
        let link = "schema_version = 1\n[[link]]\nname = \"L\"\ncomponents = [\"a\", \"b\"]\nlinking = [0]\nconway = [[3,1,1]]\n";
        assert!(matches!(KnotTable::from_toml_str(link), Err(Error::Unregistered(_))));
    }
}
