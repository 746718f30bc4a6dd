use crate::error::{Error, Result};
use crate::numfield::IntPolynomial;
use crate::packing::{DEEP_LMAX, DEFAULT_LMAX, MIN_LMAX};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

/// Defaults: the quartic x^4 - x^3 - x^2 + x + 1 with its prime over 3 and n = 64.
pub const DEFAULT_POLY: &str = "1,1,-1,-1,1";
pub const DEFAULT_PRIME: u64 = 3;
pub const DEFAULT_N: u64 = 64;
pub const DEFAULT_LLL_DELTA: f64 = 0.99;

/// Keys accepted in a config file, matching the long flag names with
/// underscores in place of dashes.
pub const CONFIG_KEYS: &[&str] = &[
    "poly",
    "prime",
    "index",
    "gens",
    "n",
    "dimension",
    "precision_bits",
    "lll_delta",
    "lmax",
    "deep",
    "code_table",
    "format",
    "seed",
    "inject_precision_fault",
    "assume_irreducible",
];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Human,
    Kv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "human" => Ok(Format::Human),
            "kv" => Ok(Format::Kv),
            _ => Err(Error::Validation(format!("unknown format {s:?}, expected human or kv"))),
        }
    }
}

/// How the prime ideal is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeSelector {
    /// The `index`-th factor of p in the deterministic ordering.
    Index { p: u64, index: usize },
    /// The ideal (p, g) with g given by power-basis coordinates.
    Generators { p: u64, g: Vec<i64> },
}

impl PrimeSelector {
    pub fn p(&self) -> u64 {
        match self {
            PrimeSelector::Index { p, .. } | PrimeSelector::Generators { p, .. } => *p,
        }
    }
}

/// A validated run configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub poly: IntPolynomial,
    pub prime: PrimeSelector,
    /// Code length; a `dimension` setting is converted once the degree is known.
    pub n: u64,
    pub dimension: Option<u64>,
    pub precision_bits: Option<usize>,
    pub lll_delta: f64,
    pub lmax: usize,
    pub deep: bool,
    pub code_table: Option<PathBuf>,
    pub format: Format,
    pub seed: u64,
    pub inject_precision_fault: Option<usize>,
    pub assume_irreducible: bool,
}

/// Unvalidated `key -> value` settings from one source.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Settings(pub BTreeMap<String, String>);

impl Settings {
    pub fn set(&mut self, key: &str, value: impl Into<String>) {
        self.0.insert(key.to_string(), value.into());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    /// Entries of `over` replace those of `self`.
    pub fn overlay(mut self, over: &Settings) -> Settings {
        for (k, v) in &over.0 {
            self.0.insert(k.clone(), v.clone());
        }
        self
    }
}

/// Flat `key = value` text; blank lines and `#` comments are skipped.
pub fn parse_config(text: &str) -> Result<Settings> {
    let mut out = Settings::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::ParseError {
            line: i + 1,
            message: format!("expected key = value, got {line:?}"),
        })?;
        let key = key.trim().replace('-', "_");
        if !CONFIG_KEYS.contains(&key.as_str()) {
            return Err(Error::ParseError {
                line: i + 1,
                message: format!("unknown key {key:?}"),
            });
        }
        out.set(&key, value.trim().trim_matches('"'));
    }
    Ok(out)
}

pub fn read_config(path: &Path) -> Result<Settings> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}

fn parse_num<T: FromStr>(key: &str, v: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    v.parse()
        .map_err(|e| Error::Validation(format!("{key} = {v:?}: {e}")))
}

fn parse_bool(key: &str, v: &str) -> Result<bool> {
    match v {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        _ => Err(Error::Validation(format!("{key} = {v:?}: expected true or false"))),
    }
}

/// `p:c0,c1,...` or bare `p` for the ideal (p).
pub fn parse_gens(s: &str) -> Result<(u64, Vec<i64>)> {
    let (p, rest) = match s.split_once(':') {
        Some((p, rest)) => (p, rest),
        None => (s, ""),
    };
    let p = parse_num("gens", p.trim())?;
    let g = rest
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_num("gens", t))
        .collect::<Result<Vec<i64>>>()?;
    Ok((p, g))
}

impl RunConfig {
    /// Validates merged settings, filling in defaults for missing keys.
    pub fn from_settings(s: &Settings) -> Result<Self> {
        let poly: IntPolynomial = s
            .get("poly")
            .unwrap_or(DEFAULT_POLY)
            .parse()
            .map_err(|e: Error| Error::Validation(format!("poly: {e}")))?;
        if poly.degree() < 2 {
            return Err(Error::DegreeTooSmall(poly.degree()));
        }
        let index: usize = s.get("index").map(|v| parse_num("index", v)).transpose()?.unwrap_or(0);
        let prime_flag: Option<u64> = s.get("prime").map(|v| parse_num("prime", v)).transpose()?;
        let prime = match s.get("gens") {
            Some(g) => {
                let (p, g) = parse_gens(g)?;
                if let Some(q) = prime_flag {
                    if q != p {
                        return Err(Error::Validation(format!(
                            "prime = {q} conflicts with generators over {p}"
                        )));
                    }
                }
                if g.len() > poly.degree() {
                    return Err(Error::Validation(format!(
                        "generator has {} coordinates, field degree is {}",
                        g.len(),
                        poly.degree()
                    )));
                }
                PrimeSelector::Generators { p, g }
            }
            None => PrimeSelector::Index {
                p: prime_flag.unwrap_or(DEFAULT_PRIME),
                index,
            },
        };
        if prime.p() < 2 {
            return Err(Error::Validation("prime must be at least 2".into()));
        }
        let n: u64 = s.get("n").map(|v| parse_num("n", v)).transpose()?.unwrap_or(DEFAULT_N);
        let dimension: Option<u64> = s.get("dimension").map(|v| parse_num("dimension", v)).transpose()?;
        if s.get("n").is_some() && dimension.is_some() {
            return Err(Error::Validation("give either n or dimension, not both".into()));
        }
        let n = match dimension {
            Some(d) => {
                let m = poly.degree() as u64;
                if d % m != 0 {
                    return Err(Error::Validation(format!(
                        "dimension {d} is not a multiple of the degree {m}"
                    )));
                }
                d / m
            }
            None => n,
        };
        if n == 0 {
            return Err(Error::Validation("n must be positive".into()));
        }
        let precision_bits: Option<usize> = s
            .get("precision_bits")
            .filter(|v| *v != "auto")
            .map(|v| parse_num("precision_bits", v))
            .transpose()?;
        if let Some(b) = precision_bits {
            crate::embedding::validate_precision(b)?;
        }
        let lll_delta: f64 = s
            .get("lll_delta")
            .map(|v| parse_num("lll_delta", v))
            .transpose()?
            .unwrap_or(DEFAULT_LLL_DELTA);
        if !(lll_delta > 0.25 && lll_delta < 1.0) {
            return Err(Error::Validation(format!("lll_delta {lll_delta} outside (0.25, 1)")));
        }
        let deep = s.get("deep").map(|v| parse_bool("deep", v)).transpose()?.unwrap_or(false);
        let lmax = if deep {
            DEEP_LMAX
        } else {
            s.get("lmax").map(|v| parse_num("lmax", v)).transpose()?.unwrap_or(DEFAULT_LMAX)
        };
        if lmax < MIN_LMAX {
            return Err(Error::Validation(format!(
                "lmax {lmax} is below the minimum {MIN_LMAX}"
            )));
        }
        Ok(Self {
            poly,
            prime,
            n,
            dimension,
            precision_bits,
            lll_delta,
            lmax,
            deep,
            code_table: s.get("code_table").map(PathBuf::from),
            format: s.get("format").map(str::parse).transpose()?.unwrap_or_default(),
            seed: s.get("seed").map(|v| parse_num("seed", v)).transpose()?.unwrap_or(0),
            inject_precision_fault: s
                .get("inject_precision_fault")
                .map(|v| parse_num("inject_precision_fault", v))
                .transpose()?,
            assume_irreducible: s
                .get("assume_irreducible")
                .map(|v| parse_bool("assume_irreducible", v))
                .transpose()?
                .unwrap_or(false),
        })
    }

    pub fn tower_options(&self) -> crate::lattice::TowerOptions {
        crate::lattice::TowerOptions {
            precision: self.precision_bits,
            lll_delta: self.lll_delta,
            root_fault_bits: self.inject_precision_fault,
        }
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        Self::from_settings(&Settings::default()).expect("defaults are valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = RunConfig::default();
        assert_eq!(c.poly.degree(), 4);
        assert_eq!(c.prime, PrimeSelector::Index { p: 3, index: 0 });
        assert_eq!((c.n, c.lmax, c.lll_delta), (64, 200, 0.99));
        assert_eq!(c.precision_bits, None);
    }

    #[test]
    fn file_parsing() {
        let s = parse_config("# run\npoly = 1,0,1\nlll-delta = 0.9  # tighter\n\n").unwrap();
        assert_eq!(s.get("poly"), Some("1,0,1"));
        assert_eq!(s.get("lll_delta"), Some("0.9"));
        assert!(matches!(
            parse_config("poly 1,0,1"),
            Err(Error::ParseError { line: 1, .. })
        ));
        assert!(matches!(
            parse_config("\ncolour = red"),
            Err(Error::ParseError { line: 2, .. })
        ));
    }

    #[test]
    fn flags_override_file() {
        let file = parse_config("n = 45\nseed = 9").unwrap();
        let mut flags = Settings::default();
        flags.set("n", "128");
        let c = RunConfig::from_settings(&file.overlay(&flags)).unwrap();
        assert_eq!((c.n, c.seed), (128, 9));
    }

    #[test]
    fn generators_and_dimension() {
        let mut s = Settings::default();
        s.set("gens", "3:2,1,1");
        s.set("dimension", "256");
        let c = RunConfig::from_settings(&s).unwrap();
        assert_eq!(c.prime, PrimeSelector::Generators { p: 3, g: vec![2, 1, 1] });
        assert_eq!(c.n, 64);
        assert_eq!(parse_gens("2").unwrap(), (2, vec![]));
        s.set("prime", "7");
        assert!(RunConfig::from_settings(&s).is_err());
    }

    #[test]
    fn validation_errors() {
        for (k, v) in [
            ("lmax", "9"),
            ("lll_delta", "1.5"),
            ("format", "json"),
            ("dimension", "255"),
            ("n", "0"),
            ("poly", "1,1"),
        ] {
            let mut s = Settings::default();
            s.set(k, v);
            let e = RunConfig::from_settings(&s).unwrap_err();
            assert_eq!(e.exit_code(), 2, "{k}");
        }
    }

    #[test]
    fn deep_means_one_thousand() {
        let mut s = Settings::default();
        s.set("deep", "true");
        assert_eq!(RunConfig::from_settings(&s).unwrap().lmax, 1000);
    }
}
