//! Domain names as label sequences, with ASCII-case-insensitive comparison.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use super::WireError;

/// Maximum length of a single label, per RFC 1035.
pub const MAX_LABEL_LEN: usize = 63;
/// Maximum encoded length of a full name (length bytes plus terminator).
pub const MAX_NAME_LEN: usize = 255;

/// A DNS domain name: an ordered list of labels, root being the empty list.
///
/// Original byte spelling is preserved for display; equality, ordering, and
/// hashing are ASCII-case-insensitive so the same name in different case
/// produces identical cache keys.
#[derive(Debug, Clone, Default)]
pub struct DomainName {
    labels: Vec<Vec<u8>>,
}

impl DomainName {
    /// The root name ".".
    pub fn root() -> Self {
        DomainName { labels: Vec::new() }
    }

    pub fn from_labels(labels: Vec<Vec<u8>>) -> Result<Self, WireError> {
        let name = DomainName { labels };
        name.validate()?;
        Ok(name)
    }

    fn validate(&self) -> Result<(), WireError> {
        for label in &self.labels {
            if label.is_empty() || label.len() > MAX_LABEL_LEN {
                return Err(WireError::BadLabelLength(label.len()));
            }
        }
        if self.encoded_len() > MAX_NAME_LEN {
            return Err(WireError::NameTooLong(self.encoded_len()));
        }
        Ok(())
    }

    /// Length of the uncompressed wire encoding (length bytes + terminator).
    pub fn encoded_len(&self) -> usize {
        self.labels.iter().map(|l| l.len() + 1).sum::<usize>() + 1
    }

    pub fn labels(&self) -> &[Vec<u8>] {
        &self.labels
    }

    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_root(&self) -> bool {
        self.labels.is_empty()
    }

    /// True if `suffix` is a (non-strict) suffix of this name. Every name is
    /// beneath the root.
    pub fn is_beneath(&self, suffix: &DomainName) -> bool {
        if suffix.labels.len() > self.labels.len() {
            return false;
        }
        let skip = self.labels.len() - suffix.labels.len();
        self.labels[skip..]
            .iter()
            .zip(suffix.labels.iter())
            .all(|(a, b)| eq_fold(a, b))
    }

    /// The name formed by the last `n` labels of this name.
    pub fn suffix(&self, n: usize) -> DomainName {
        let skip = self.labels.len().saturating_sub(n);
        DomainName {
            labels: self.labels[skip..].to_vec(),
        }
    }

    /// Given a zone `self` that this name lies beneath, the child zone one
    /// label closer to this name. Returns `None` when this name is not
    /// strictly beneath `self`.
    ///
    /// `child_toward` of "." for "www.example.com" is "com"; of "com" it is
    /// "example.com".
    pub fn child_toward(&self, name: &DomainName) -> Option<DomainName> {
        if !name.is_beneath(self) || name.label_count() <= self.label_count() {
            return None;
        }
        Some(name.suffix(self.label_count() + 1))
    }

    /// Presentation form without a trailing dot ("." for the root).
    pub fn presentation(&self) -> String {
        if self.labels.is_empty() {
            return ".".to_string();
        }
        self.labels
            .iter()
            .map(|l| String::from_utf8_lossy(l).into_owned())
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Fully-qualified presentation form with a trailing dot.
    pub fn to_fqdn(&self) -> String {
        if self.labels.is_empty() {
            return ".".to_string();
        }
        let mut s = self.presentation();
        s.push('.');
        s
    }

    /// Lowercased fully-qualified form, used for compression maps and keys.
    pub fn canonical(&self) -> String {
        self.to_fqdn().to_ascii_lowercase()
    }
}

fn eq_fold(a: &[u8], b: &[u8]) -> bool {
    a.len() == b.len()
        && a.iter()
            .zip(b.iter())
            .all(|(x, y)| x.to_ascii_lowercase() == y.to_ascii_lowercase())
}

impl PartialEq for DomainName {
    fn eq(&self, other: &Self) -> bool {
        self.labels.len() == other.labels.len()
            && self
                .labels
                .iter()
                .zip(other.labels.iter())
                .all(|(a, b)| eq_fold(a, b))
    }
}

impl Eq for DomainName {}

impl Hash for DomainName {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for label in &self.labels {
            for b in label {
                state.write_u8(b.to_ascii_lowercase());
            }
            state.write_u8(0);
        }
    }
}

impl PartialOrd for DomainName {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DomainName {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = self.canonical();
        let b = other.canonical();
        a.cmp(&b)
    }
}

impl FromStr for DomainName {
    type Err = WireError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s.strip_suffix('.').unwrap_or(s);
        if s.is_empty() {
            return Ok(DomainName::root());
        }
        let labels: Vec<Vec<u8>> = s.split('.').map(|l| l.as_bytes().to_vec()).collect();
        if labels.iter().any(|l| l.is_empty()) {
            return Err(WireError::BadName(format!("empty label in {s:?}")));
        }
        DomainName::from_labels(labels)
    }
}

impl fmt::Display for DomainName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.presentation())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(s: &str) -> DomainName {
        s.parse().unwrap()
    }

    #[test]
    fn root_parses_from_dot_and_empty() {
        assert!(name(".").is_root());
        assert!("".parse::<DomainName>().unwrap().is_root());
        assert_eq!(name(".").presentation(), ".");
        assert_eq!(name(".").encoded_len(), 1);
    }

    #[test]
    fn trailing_dot_is_stripped() {
        assert_eq!(name("example.com."), name("example.com"));
        assert_eq!(name("example.com").to_fqdn(), "example.com.");
    }

    #[test]
    fn comparison_is_case_insensitive() {
        assert_eq!(name("GOOGLE.com"), name("google.COM"));
        use std::collections::hash_map::DefaultHasher;
        use std::hash::{Hash, Hasher};
        let mut h1 = DefaultHasher::new();
        let mut h2 = DefaultHasher::new();
        name("GOOGLE.com").hash(&mut h1);
        name("google.COM").hash(&mut h2);
        assert_eq!(h1.finish(), h2.finish());
    }

    #[test]
    fn label_length_limits() {
        let long = "a".repeat(64);
        assert!(long.parse::<DomainName>().is_err());
        let ok = "a".repeat(63);
        assert!(ok.parse::<DomainName>().is_ok());
        assert!("a..b".parse::<DomainName>().is_err());
    }

    #[test]
    fn total_length_limit() {
        // Four 63-byte labels: encoded length 4*64 + 1 = 257 > 255.
        let l = "a".repeat(63);
        let s = format!("{l}.{l}.{l}.{l}");
        assert!(matches!(
            s.parse::<DomainName>(),
            Err(WireError::NameTooLong(_))
        ));
    }

    #[test]
    fn suffix_relations() {
        assert!(name("www.example.com").is_beneath(&name("com")));
        assert!(name("www.example.com").is_beneath(&name(".")));
        assert!(name("com").is_beneath(&name("com")));
        assert!(!name("com").is_beneath(&name("org")));
        assert!(!name("notcom").is_beneath(&name("com")));
    }

    #[test]
    fn child_toward_walks_one_label() {
        let q = name("www.example.com");
        assert_eq!(name(".").child_toward(&q), Some(name("com")));
        assert_eq!(name("com").child_toward(&q), Some(name("example.com")));
        assert_eq!(
            name("example.com").child_toward(&q),
            Some(name("www.example.com"))
        );
        assert_eq!(name("www.example.com").child_toward(&q), None);
        assert_eq!(name("org").child_toward(&q), None);
    }
}
