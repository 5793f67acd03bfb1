use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Q};
use crate::rootsys::{CartanMatrix, RootSystem};
use crate::weyl::DEFAULT_WEYL_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    Grade,
    Stratify,
    Identities,
    Criterion,
    LowrankSuite,
}

impl Task {
    pub const ALL: [Task; 5] = [
        Task::Grade,
        Task::Stratify,
        Task::Identities,
        Task::Criterion,
        Task::LowrankSuite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Task::Grade => "grade",
            Task::Stratify => "stratify",
            Task::Identities => "identities",
            Task::Criterion => "criterion",
            Task::LowrankSuite => "lowrank_suite",
        }
    }

    fn needs_root_system(self) -> bool {
        self != Task::LowrankSuite
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Task {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Task::ALL
            .into_iter()
            .find(|t| t.name() == s.trim())
            .ok_or_else(|| {
                let names: Vec<&str> = Task::ALL.iter().map(|t| t.name()).collect();
                Error::Config(format!("unknown task `{s}` (expected one of {})", names.join(", ")))
            })
    }
}

fn default_weyl_cap() -> usize {
    DEFAULT_WEYL_CAP
}

/// A job description, read from a flat TOML document.
///
/// ```toml
/// type = "G2"
/// elliptic_coeffs = [1, -2]
/// involution_coweight = [0, 1]
/// tasks = ["grade", "stratify", "criterion"]
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub type_label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<Vec<Vec<i64>>>,
    #[serde(default, with = "rational::vec_as_str")]
    pub elliptic_coeffs: Vec<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution_coweight: Option<Vec<i64>>,
    pub tasks: Vec<Task>,
    #[serde(default = "default_weyl_cap")]
    pub weyl_cap: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
}

impl JobConfig {
    pub fn from_toml_str(s: &str) -> Result<Self> {
        toml::from_str(s).map_err(|e| Error::Config(e.message().to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    /// Tasks in the fixed order they are executed, without duplicates.
    pub fn task_set(&self) -> BTreeSet<Task> {
        self.tasks.iter().copied().collect()
    }

    pub fn root_system(&self) -> Result<RootSystem> {
        match (&self.type_label, &self.cartan) {
            (Some(label), None) => RootSystem::from_label(label),
            (None, Some(rows)) => RootSystem::new(CartanMatrix::new(rows.clone())?),
            (Some(_), Some(_)) => Err(Error::Config("give either `type` or `cartan`, not both".into())),
            (None, None) => Err(Error::Config("one of `type` or `cartan` is required".into())),
        }
    }

    /// Checks the invariants that can be decided without heavy computation.
    /// Returns the root system when one is needed.
    pub fn validate(&self) -> Result<Option<RootSystem>> {
        let tasks = self.task_set();
        if tasks.is_empty() {
            return Err(Error::Config("`tasks` must not be empty".into()));
        }
        if self.weyl_cap == 0 {
            return Err(Error::Config("`weyl_cap` must be positive".into()));
        }
        if tasks.contains(&Task::Criterion) && self.involution_coweight.is_none() {
            return Err(Error::Config("task `criterion` requires `involution_coweight`".into()));
        }
        if !tasks.iter().any(|t| t.needs_root_system()) {
            return Ok(None);
        }
        let rs = self.root_system()?;
        if self.elliptic_coeffs.len() != rs.rank() {
            return Err(Error::Config(format!(
                "`elliptic_coeffs` has {} entries but the rank is {}",
                self.elliptic_coeffs.len(),
                rs.rank()
            )));
        }
        if let Some(z) = &self.involution_coweight {
            if z.len() != rs.rank() {
                return Err(Error::Config(format!(
                    "`involution_coweight` has {} entries but the rank is {}",
                    z.len(),
                    rs.rank()
                )));
            }
        }
        Ok(Some(rs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    #[test]
    fn parse_minimal() {
        let c = JobConfig::from_toml_str(
            r#"
            type = "G2"
            elliptic_coeffs = [1, "-2"]
            involution_coweight = [0, 1]
            tasks = ["grade", "criterion"]
            "#,
        )
        .unwrap();
        assert_eq!(c.elliptic_coeffs, vec![q(1), q(-2)]);
        assert_eq!(c.weyl_cap, DEFAULT_WEYL_CAP);
        assert_eq!(c.seed, 0);
        assert!(c.validate().unwrap().is_some());
    }

    #[test]
    fn round_trip_toml() {
        let c = JobConfig::from_toml_str(
            "cartan = [[2, -1], [-1, 2]]\nelliptic_coeffs = [\"1/2\", 0]\ntasks = [\"stratify\"]\nseed = 5\n",
        )
        .unwrap();
        assert_eq!(c.elliptic_coeffs, vec![frac(1, 2), q(0)]);
        let again = JobConfig::from_toml_str(&c.to_toml_string().unwrap()).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn validation_errors() {
        let bad = |s: &str| JobConfig::from_toml_str(s).and_then(|c| c.validate().map(|_| ()));
        assert!(matches!(bad("type = \"A2\"\nelliptic_coeffs = [1, 0]\ntasks = []"), Err(Error::Config(_))));
        assert!(matches!(
            bad("type = \"A2\"\nelliptic_coeffs = [1, 0]\ntasks = [\"criterion\"]"),
            Err(Error::Config(_))
        ));
        assert!(matches!(bad("type = \"X9\"\nelliptic_coeffs = [1]\ntasks = [\"grade\"]"), Err(Error::UnknownType(_))));
        assert!(matches!(bad("type = \"A2\"\nelliptic_coeffs = [1]\ntasks = [\"grade\"]"), Err(Error::Config(_))));
        assert!(matches!(bad("type = \"A2\"\ntasks = [\"grade\"]\ncolour = 1"), Err(Error::Config(_))));
        assert!(matches!(bad("tasks = [\"grade\"]\nelliptic_coeffs = [1]"), Err(Error::Config(_))));
        assert!(bad("tasks = [\"lowrank_suite\"]").is_ok());
    }

    #[test]
    fn task_names() {
        assert_eq!("lowrank_suite".parse::<Task>().unwrap(), Task::LowrankSuite);
        assert!("plot".parse::<Task>().is_err());
    }
}
