//! Batches of instances from a TOML file: explicit `[[instance]]` tables
//! and `[[generate]]` blocks enumerating index sets, Y choices and
//! parameter samples. Each report lands in `<config hash>.json`.

use std::fs;
use std::path::{Path, PathBuf};

use mindex_core::algebra::Rational;
use mindex_core::families::{Family, IndexSet, Seed, SeedType};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::report::{Outcome, VerificationReport};
use crate::verify::run_verify;

fn default_nmax() -> usize {
    6
}

fn default_y() -> Vec<String> {
    vec!["1".into(), "eta".into(), "random".into()]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Generator {
    pub family: String,
    pub max_v: usize,
    /// Index sets of size `1..=max_m`, entries in increasing order.
    pub max_m: usize,
    /// Parameter samples: `[g]`, `[g, h]`, `[a1..a4]` or `[a1..a4, t]`.
    pub params: Vec<Vec<String>>,
    /// Any of `"1"`, `"eta"`, `"random"` (random rational Y, degree <= 2)
    /// or an explicit coefficient list.
    #[serde(default = "default_y")]
    pub y: Vec<String>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_nmax")]
    pub nmax: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default)]
    pub instance: Vec<RunConfig>,
    #[serde(default)]
    pub generate: Vec<Generator>,
}

/// All index sets of distinct seeds with `v <= max_v` and size `1..=max_m`.
pub fn index_sets(max_v: usize, max_m: usize) -> Vec<IndexSet> {
    let mut seeds = Vec::new();
    for ty in [SeedType::I, SeedType::II] {
        for v in 1..=max_v {
            seeds.push(Seed::new(v, ty).expect("v >= 1"));
        }
    }
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<Seed>)> = vec![(0, Vec::new())];
    while let Some((start, cur)) = stack.pop() {
        if !cur.is_empty() {
            out.push(IndexSet::new(cur.clone()).expect("distinct seeds"));
        }
        if cur.len() == max_m {
            continue;
        }
        for (i, seed) in seeds.iter().enumerate().skip(start) {
            let mut next = cur.clone();
            next.push(*seed);
            stack.push((i + 1, next));
        }
    }
    out.sort_by_key(|d| (d.len(), d.to_string()));
    out
}

/// A random nonzero rational polynomial of degree <= 2 as a `c0,c1,..` list.
pub fn random_y(rng: &mut ChaCha8Rng) -> String {
    let deg = rng.gen_range(0..=2usize);
    let mut cs = Vec::new();
    for i in 0..=deg {
        let mut num: i64 = rng.gen_range(-9..=9);
        if i == deg && num == 0 {
            num = 1;
        }
        let den: i64 = rng.gen_range(1..=7);
        cs.push(Rational::frac(num, den).to_string());
    }
    cs.join(",")
}

impl Generator {
    pub fn expand(&self) -> Result<Vec<RunConfig>, CliError> {
        let family: Family = self.family.parse().map_err(|e: mindex_core::Error| CliError::Usage(e.to_string()))?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut out = Vec::new();
        for d in index_sets(self.max_v, self.max_m) {
            for p in &self.params {
                for y in &self.y {
                    let y = match y.as_str() {
                        "1" => "min".to_string(),
                        "eta" => "0,1".to_string(),
                        "random" => random_y(&mut rng),
                        other => other.to_string(),
                    };
                    let mut cfg = RunConfig {
                        family: self.family.clone(),
                        indices: d.to_string().trim_matches(|c| c == '{' || c == '}').to_string(),
                        g: None,
                        h: None,
                        a: None,
                        t: None,
                        y,
                        x: None,
                        nmax: self.nmax,
                    };
                    let arity = match family {
                        Family::L => 1,
                        Family::J => 2,
                        Family::W => 4,
                        Family::AW => 5,
                    };
                    if p.len() != arity {
                        return Err(CliError::Usage(format!("family {family} needs {arity} parameters per sample")));
                    }
                    match family {
                        Family::L => cfg.g = Some(p[0].clone()),
                        Family::J => {
                            cfg.g = Some(p[0].clone());
                            cfg.h = Some(p[1].clone());
                        }
                        Family::W | Family::AW => {
                            cfg.a = Some(p[..4].join(","));
                            cfg.t = p.get(4).cloned();
                        }
                    }
                    out.push(cfg);
                }
            }
        }
        Ok(out)
    }
}

impl SweepConfig {
    pub fn from_toml(s: &str) -> Result<Self, CliError> {
        Ok(toml::from_str(s)?)
    }

    pub fn instances(&self) -> Result<Vec<RunConfig>, CliError> {
        let mut out = self.instance.clone();
        for g in &self.generate {
            out.extend(g.expand()?);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum InstanceResult {
    Report(Box<VerificationReport>),
    /// Build, calibration or input failure.
    Error(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepEntry {
    pub hash: String,
    pub config: RunConfig,
    pub result: InstanceResult,
    /// Loaded from an earlier run's output file.
    pub resumed: bool,
}

impl SweepEntry {
    pub fn passed(&self) -> bool {
        matches!(&self.result, InstanceResult::Report(r) if r.outcome == Outcome::Pass)
    }
}

fn cached(path: &Path, cfg: &RunConfig) -> Option<VerificationReport> {
    let text = fs::read_to_string(path).ok()?;
    let r = VerificationReport::from_json(&text).ok()?;
    (r.config == *cfg).then_some(r)
}

/// Runs every instance on the rayon pool. With `out_dir`, reports are
/// written there and existing matching reports are reused.
pub fn run_sweep(configs: &[RunConfig], out_dir: Option<&Path>) -> Result<Vec<SweepEntry>, CliError> {
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)?;
    }
    configs
        .par_iter()
        .map(|cfg| {
            let hash = cfg.hash();
            let path: Option<PathBuf> = out_dir.map(|d| d.join(format!("{hash}.json")));
            if let Some(r) = path.as_deref().and_then(|p| cached(p, cfg)) {
                return Ok(SweepEntry { hash, config: cfg.clone(), result: InstanceResult::Report(Box::new(r)), resumed: true });
            }
            let result = match run_verify(cfg) {
                Ok(r) => {
                    if let Some(p) = &path {
                        fs::write(p, r.to_json()?)?;
                    }
                    InstanceResult::Report(Box::new(r))
                }
                Err(CliError::Io(e)) => return Err(CliError::Io(e)),
                Err(e) => InstanceResult::Error(e.to_string()),
            };
            Ok(SweepEntry { hash, config: cfg.clone(), result, resumed: false })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_set_counts() {
        assert_eq!(index_sets(4, 1).len(), 8);
        assert_eq!(index_sets(4, 2).len(), 8 + 28);
        assert_eq!(index_sets(3, 1).len(), 6);
    }

    #[test]
    fn generator_is_deterministic() {
        let g = Generator {
            family: "L".into(),
            max_v: 2,
            max_m: 1,
            params: vec![vec!["7/3".into()]],
            y: default_y(),
            seed: 5,
            nmax: 4,
        };
        let a = g.expand().unwrap();
        assert_eq!(a, g.expand().unwrap());
        assert_eq!(a.len(), 4 * 3);
        assert!(a.iter().all(|c| c.validate().is_ok()));
    }
}
