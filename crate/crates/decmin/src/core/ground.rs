use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::core::Subset;
use crate::Error;

/// A finite ground set with named elements.
///
/// Elements are addressed by index `0..n` everywhere in the crate; the names
/// exist for input, output, and diagnostics.  Names must be unique, non-empty,
/// and free of commas (commas separate names in serialized subset keys).  The
/// size is capped at 64 so subsets fit in a bitmask.
///
/// Cloning is cheap; the name table is shared.
#[derive(Clone)]
pub struct GroundSet {
    inner: Arc<Inner>,
}

struct Inner {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    /// Builds a ground set from element names, in the given order.
    pub fn new<I, T>(names: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidInstance("ground set is empty".into()));
        }
        if names.len() > 64 {
            return Err(Error::InvalidInstance(format!(
                "ground set has {} elements; at most 64 are supported",
                names.len()
            )));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidInstance("element name is empty".into()));
            }
            if name.contains(',') {
                return Err(Error::InvalidInstance(format!(
                    "element name {name:?} contains a comma"
                )));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidInstance(format!(
                    "duplicate element name {name:?}"
                )));
            }
        }
        Ok(GroundSet { inner: Arc::new(Inner { names, index }) })
    }

    /// Number of elements.
    pub fn n(&self) -> usize {
        self.inner.names.len()
    }

    /// All element names in index order.
    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    /// The name of element `i`.
    pub fn name(&self, i: usize) -> &str {
        &self.inner.names[i]
    }

    /// The index of a named element, if present.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.index.get(name).copied()
    }

    /// The full ground set as a subset.
    pub fn full(&self) -> Subset {
        Subset::full(self.n())
    }

    /// Resolves a list of names into a subset.
    pub fn subset_of_names<'a, I>(&self, names: I) -> Result<Subset, Error>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut s = Subset::EMPTY;
        for name in names {
            match self.index_of(name) {
                Some(i) => s = s.with(i),
                None => {
                    return Err(Error::InvalidInstance(format!(
                        "unknown element name {name:?}"
                    )))
                }
            }
        }
        Ok(s)
    }

    /// Formats a subset as `{name,name,...}` in index order.
    pub fn format_subset(&self, s: Subset) -> String {
        let mut out = String::from("{");
        for (k, i) in s.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(self.name(i));
        }
        out.push('}');
        out
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.names == other.inner.names
    }
}

impl Eq for GroundSet {}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("GroundSet").field(&self.inner.names).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert!(GroundSet::new(Vec::<String>::new()).is_err());
        assert!(GroundSet::new(["a", "a"]).is_err());
        assert!(GroundSet::new(["a", ""]).is_err());
        assert!(GroundSet::new(["a", "b,c"]).is_err());
        let too_many: Vec<String> = (0..65).map(|i| format!("e{i}")).collect();
        assert!(GroundSet::new(too_many).is_err());
    }

    #[test]
    fn lookup_and_formatting() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.index_of("b"), Some(1));
        assert_eq!(g.index_of("z"), None);
        let s = g.subset_of_names(["c", "a"]).unwrap();
        assert_eq!(s.mask(), 0b101);
        assert_eq!(g.format_subset(s), "{a,c}");
        assert_eq!(g.format_subset(Subset::EMPTY), "{}");
    }
}
