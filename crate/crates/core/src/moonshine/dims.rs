use std::path::Path;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// The Monster's 194 irreducible degrees, one per line.
pub const BUNDLED_MONSTER_DIMS: &str = include_str!("../../data/monster_dims.txt");

/// Entry count of the Monster dataset.
pub const MONSTER_IRREP_COUNT: usize = 194;

/// Values any Monster dataset must contain at the given (0-based) indices.
pub const MONSTER_ANCHORS: [(usize, &str); 7] = [
    (0, "1"),
    (1, "196883"),
    (2, "21296876"),
    (3, "842609326"),
    (4, "18538750076"),
    (5, "19360062527"),
    (193, "258823477531055064045234375"),
];

/// What a dims file is validated against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimsSpec {
    pub expected_count: usize,
    pub anchors: Vec<(usize, BigUint)>,
}

impl DimsSpec {
    pub fn monster() -> Self {
        Self {
            expected_count: MONSTER_IRREP_COUNT,
            anchors: MONSTER_ANCHORS
                .iter()
                .map(|(i, v)| (*i, v.parse().expect("anchor literal")))
                .collect(),
        }
    }

    /// Only the count and the leading 1 are checked.
    pub fn with_count(expected_count: usize) -> Self {
        Self {
            expected_count,
            anchors: vec![(0, BigUint::one())],
        }
    }
}

/// Irreducible degrees in ascending order, starting with the trivial one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepDims {
    dims: Vec<BigUint>,
}

impl IrrepDims {
    /// The bundled Monster data.
    pub fn monster() -> Self {
        parse_irrep_dims(BUNDLED_MONSTER_DIMS, &DimsSpec::monster()).expect("bundled data is valid")
    }

    pub fn from_dims(dims: Vec<BigUint>) -> Self {
        Self { dims }
    }

    pub fn dims(&self) -> &[BigUint] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// Sum of squared degrees, which is the group order.
    pub fn square_sum(&self) -> BigUint {
        self.dims.iter().map(|d| d * d).sum()
    }
}

/// Parses one decimal integer per line; blank lines and lines starting with
/// `#` are skipped. Line numbers in errors are 1-based.
pub fn parse_irrep_dims(text: &str, spec: &DimsSpec) -> Result<IrrepDims> {
    let mut dims: Vec<BigUint> = Vec::new();
    let mut lines: Vec<usize> = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let bad = |reason: String| Error::IrrepData { line, reason };
        let value: BigUint = trimmed
            .parse()
            .map_err(|_| bad(format!("`{trimmed}` is not a non-negative integer")))?;
        if value == BigUint::default() {
            return Err(bad("dimension 0".into()));
        }
        if let Some(prev) = dims.last() {
            if value < *prev {
                return Err(bad(format!(
                    "{value} is smaller than the previous entry {prev}"
                )));
            }
        }
        if dims.len() == spec.expected_count {
            return Err(bad(format!("more than {} entries", spec.expected_count)));
        }
        if let Some((_, want)) = spec.anchors.iter().find(|(i, _)| *i == dims.len()) {
            if value != *want {
                return Err(bad(format!(
                    "entry {} is {value}, expected {want}",
                    dims.len() + 1
                )));
            }
        }
        dims.push(value);
        lines.push(line);
    }
    if dims.len() != spec.expected_count {
        return Err(Error::IrrepData {
            line: last_line,
            reason: format!(
                "expected {} entries, found {}",
                spec.expected_count,
                dims.len()
            ),
        });
    }
    Ok(IrrepDims { dims })
}

/// Reads and validates a dims file.
pub fn load_irrep_dims(path: &Path, spec: &DimsSpec) -> Result<IrrepDims> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_irrep_dims(&text, spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_data() {
        let m = IrrepDims::monster();
        assert_eq!(m.len(), 194);
        assert_eq!(m.dims()[1], BigUint::from(196883u32));
    }

    #[test]
    fn single_irrep() {
        let d = parse_irrep_dims("# trivial group\n1\n", &DimsSpec::with_count(1)).unwrap();
        assert_eq!(d.dims(), &[BigUint::one()]);
    }

    #[test]
    fn errors_name_the_line() {
        let spec = DimsSpec::with_count(3);
        assert_eq!(
            parse_irrep_dims("1\n5\n3\n", &spec),
            Err(Error::IrrepData {
                line: 3,
                reason: "3 is smaller than the previous entry 5".into()
            })
        );
        assert!(matches!(
            parse_irrep_dims("1\nx\n3\n", &spec),
            Err(Error::IrrepData { line: 2, .. })
        ));
        assert!(matches!(
            parse_irrep_dims("2\n3\n4\n", &spec),
            Err(Error::IrrepData { line: 1, .. })
        ));
        assert!(matches!(
            parse_irrep_dims("1\n1\n", &spec),
            Err(Error::IrrepData { line: 2, .. })
        ));
        assert!(matches!(
            parse_irrep_dims("1\n1\n1\n1\n", &spec),
            Err(Error::IrrepData { line: 4, .. })
        ));
    }
}
