use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::report::FORMAT_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    CheckHypotheses,
    Gsp4Example,
    Lift,
    LocalTame,
    Oracle,
}

impl Verb {
    pub const ALL: [Verb; 5] = [Verb::CheckHypotheses, Verb::Gsp4Example, Verb::Lift, Verb::LocalTame, Verb::Oracle];

    pub fn as_str(self) -> &'static str {
        match self {
            Verb::CheckHypotheses => "check-hypotheses",
            Verb::Gsp4Example => "gsp4-example",
            Verb::Lift => "lift",
            Verb::LocalTame => "local-tame",
            Verb::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Verb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Verb {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        Verb::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| CliError::config("verb", format!("unknown verb {s:?}")))
    }
}

/// Pipeline parameters. Unset fields take per-verb defaults.
#[derive(Serialize, Deserialize, Clone, Debug, Default, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precision: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa_k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local_condition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regular_prime_assumed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assumptions: Option<Vec<String>>,
}

impl Params {
    /// Fields set in `over` replace those in `self`.
    pub fn merged(&self, over: &Params) -> Params {
        macro_rules! pick {
            ($f:ident) => {
                over.$f.clone().or_else(|| self.$f.clone())
            };
        }
        Params {
            p: pick!(p),
            n: pick!(n),
            q_degree: pick!(q_degree),
            precision: pick!(precision),
            seed: pick!(seed),
            trials: pick!(trials),
            exponents: pick!(exponents),
            kappa_k: pick!(kappa_k),
            v: pick!(v),
            local_condition: pick!(local_condition),
            regular_prime_assumed: pick!(regular_prime_assumed),
            assumptions: pick!(assumptions),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    format_version: u32,
    verb: Option<String>,
    #[serde(default)]
    params: Params,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub verb: Verb,
    pub params: Params,
    /// Source text, kept for line diagnostics.
    source: Option<String>,
}

impl Config {
    pub fn new(verb: Verb, params: Params) -> Self {
        Config { verb, params, source: None }
    }

    /// Parses a config; `default_verb` applies when the file names none.
    pub fn parse(text: &str, default_verb: Option<Verb>) -> Result<Self, CliError> {
        let file: ConfigFile = toml::from_str(text).map_err(|e| {
            let line = e.span().map(|s| line_at(text, s.start));
            CliError::Config { field: field_in_message(e.message()), line, message: e.message().trim().to_string() }
        })?;
        if file.format_version != FORMAT_VERSION {
            return Err(CliError::Config {
                field: "format_version".into(),
                line: line_of_key(text, "format_version"),
                message: format!("unsupported version {}, expected {FORMAT_VERSION}", file.format_version),
            });
        }
        let verb = match (&file.verb, default_verb) {
            (Some(v), _) => v.parse().map_err(|_| CliError::Config {
                field: "verb".into(),
                line: line_of_key(text, "verb"),
                message: format!("unknown verb {v:?}"),
            })?,
            (None, Some(v)) => v,
            (None, None) => return Err(CliError::config("verb", "no verb given in the file or on the command line")),
        };
        if let (Some(_), Some(d)) = (&file.verb, default_verb) {
            if d != verb {
                return Err(CliError::Config {
                    field: "verb".into(),
                    line: line_of_key(text, "verb"),
                    message: format!("file is for `{verb}` but `{d}` was requested"),
                });
            }
        }
        Ok(Config { verb, params: file.params, source: Some(text.to_string()) })
    }

    pub fn load(path: &Path, default_verb: Option<Verb>) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
        Self::parse(&text, default_verb)
    }

    pub fn with_overrides(mut self, over: &Params) -> Self {
        self.params = self.params.merged(over);
        self
    }

    /// A config error on `field`, located in the source text when possible.
    pub fn field_error(&self, field: &str, message: impl Into<String>) -> CliError {
        CliError::Config {
            field: field.to_string(),
            line: self.source.as_deref().and_then(|s| line_of_key(s, field)),
            message: message.into(),
        }
    }
}

fn line_at(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

fn line_of_key(text: &str, key: &str) -> Option<usize> {
    text.lines().position(|l| {
        let t = l.trim_start();
        t.strip_prefix(key).is_some_and(|rest| rest.trim_start().starts_with('='))
    })
    .map(|i| i + 1)
}

/// The first backtick-quoted name in a parser message, which is how unknown and missing
/// fields are reported.
fn field_in_message(msg: &str) -> String {
    msg.split('`').nth(1).map(str::to_string).unwrap_or_else(|| "document".into())
}
