use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::io::BufRead;

/// Snapshot shipped with the crate: the GF(9), length-64 codes.
pub const BUNDLED_SNAPSHOT: &str = include_str!("../../data/codetable_snapshot.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeEntry {
    pub k: u64,
    pub d: u64,
    pub provenance: String,
}

/// Linear code parameters [n, k, d]_q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CodeSpec {
    pub q: u64,
    pub n: u64,
    pub k: u64,
    pub d: u64,
}

impl CodeSpec {
    pub fn new(q: u64, n: u64, k: u64, d: u64) -> Result<Self> {
        if !(1..=n).contains(&k) || !(1..=n).contains(&d) || k + d > n + 1 {
            return Err(Error::Validation(format!(
                "[{n},{k},{d}] over GF({q}) violates 1 ≤ k, d ≤ n or the Singleton bound"
            )));
        }
        Ok(Self { q, n, k, d })
    }
}

/// Best known dimensions indexed by (q, n), each row sorted by distance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CodeTable {
    entries: BTreeMap<(u64, u64), Vec<CodeEntry>>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::ParseError {
        line,
        message: message.into(),
    }
}

impl CodeTable {
    pub fn bundled() -> Self {
        load_code_table(BUNDLED_SNAPSHOT.as_bytes()).expect("bundled snapshot is valid")
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    pub fn entries(&self, q: u64, n: u64) -> &[CodeEntry] {
        self.entries.get(&(q, n)).map_or(&[], Vec::as_slice)
    }

    /// Largest k whose recorded distance is at least `d`. Distance at most 1
    /// is always met by the full space.
    pub fn best_dimension(&self, q: u64, n: u64, d: u64) -> Result<u64> {
        if d <= 1 {
            return Ok(n);
        }
        self.entries(q, n)
            .iter()
            .filter(|e| e.d >= d)
            .map(|e| e.k)
            .max()
            .ok_or(Error::MissingEntry { q, n, d })
    }

    /// Provenance string of the entry chosen by `best_dimension`.
    pub fn provenance(&self, q: u64, n: u64, d: u64) -> Option<&str> {
        let k = self.best_dimension(q, n, d).ok()?;
        self.entries(q, n)
            .iter()
            .find(|e| e.k == k && e.d >= d)
            .map(|e| e.provenance.as_str())
    }
}

/// Parse the text format `q n k d # provenance`, one record per line; lines
/// starting with `#` and blank lines are ignored.
pub fn load_code_table<R: BufRead>(source: R) -> Result<CodeTable> {
    let mut table = CodeTable::default();
    let mut lines_of: BTreeMap<(u64, u64, u64, u64), usize> = BTreeMap::new();
    for (idx, line) in source.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| parse_err(lineno, e.to_string()))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (fields, provenance) = match trimmed.split_once('#') {
            Some((a, b)) => (a, b.trim().to_string()),
            None => (trimmed, String::new()),
        };
        let nums = fields
            .split_whitespace()
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| parse_err(lineno, format!("not a nonnegative integer: {t:?}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        let [q, n, k, d] = nums[..] else {
            return Err(parse_err(
                lineno,
                format!("expected 4 fields `q n k d`, found {}", nums.len()),
            ));
        };
        if q < 2 {
            return Err(parse_err(lineno, format!("alphabet size {q} is below 2")));
        }
        CodeSpec::new(q, n, k, d).map_err(|e| parse_err(lineno, e.to_string()))?;
        lines_of.insert((q, n, k, d), lineno);
        table.entries.entry((q, n)).or_default().push(CodeEntry { k, d, provenance });
    }
    for ((q, n), row) in table.entries.iter_mut() {
        row.sort_by_key(|e| (e.d, std::cmp::Reverse(e.k)));
        for w in row.windows(2) {
            if w[1].k > w[0].k && w[1].d > w[0].d {
                let line = lines_of[&(*q, *n, w[1].k, w[1].d)];
                return Err(parse_err(
                    line,
                    format!(
                        "dimension {} at distance {} exceeds dimension {} at distance {} for q={q}, n={n}",
                        w[1].k, w[1].d, w[0].k, w[0].d
                    ),
                ));
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_lookups() {
        let t = CodeTable::bundled();
        assert_eq!(t.best_dimension(9, 64, 27).unwrap(), 25);
        assert_eq!(t.best_dimension(9, 64, 9).unwrap(), 49);
        assert_eq!(t.best_dimension(9, 64, 3).unwrap(), 61);
        assert_eq!(t.best_dimension(9, 64, 1).unwrap(), 64);
        assert_eq!(t.best_dimension(9, 64, 5).unwrap(), 49);
        assert!(matches!(
            t.best_dimension(8, 85, 9),
            Err(Error::MissingEntry { q: 8, n: 85, d: 9 })
        ));
        assert!(t.provenance(9, 64, 27).is_some());
    }

    #[test]
    fn malformed_lines_report_their_number() {
        let src = "# header\n9 64 25 27\n9 64 x 3\n";
        match load_code_table(src.as_bytes()) {
            Err(Error::ParseError { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        let singleton = "2 4 4 2\n";
        assert!(matches!(
            load_code_table(singleton.as_bytes()),
            Err(Error::ParseError { line: 1, .. })
        ));
        let short = "2 4 1\n";
        assert!(load_code_table(short.as_bytes()).is_err());
    }

    #[test]
    fn monotonicity_is_enforced() {
        let bad = "9 64 25 27\n9 64 30 28\n";
        assert!(matches!(
            load_code_table(bad.as_bytes()),
            Err(Error::ParseError { line: 2, .. })
        ));
    }

    #[test]
    fn empty_table() {
        let t = load_code_table("".as_bytes()).unwrap();
        assert!(t.is_empty());
        assert_eq!(t.best_dimension(3, 10, 1).unwrap(), 10);
    }
}
