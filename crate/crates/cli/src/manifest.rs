use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::commands::Ctx;

/// A recorded invocation. Rerunning it rewrites the same outputs byte for
/// byte: every command is deterministic and independent of `--jobs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub args: Vec<String>,
    pub graph: Option<Value>,
    pub deterministic: bool,
    pub outputs: Vec<PathBuf>,
}

impl RunManifest {
    pub fn new(args: &[String], ctx: &Ctx) -> Self {
        RunManifest {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: args
                .iter()
                .find(|a| !a.starts_with('-'))
                .cloned()
                .unwrap_or_default(),
            args: args.to_vec(),
            graph: ctx.graph.clone(),
            deterministic: true,
            outputs: ctx.outputs.clone(),
        }
    }

    pub fn save(&self, path: &Path) -> anyhow::Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }

    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Ok(serde_json::from_str(&text)?)
    }
}

/// The argument vector without `--manifest FILE` / `--manifest=FILE`.
pub fn strip_manifest_flag(argv: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(argv.len());
    let mut skip = false;
    for arg in argv {
        if skip {
            skip = false;
        } else if arg == "--manifest" {
            skip = true;
        } else if !arg.starts_with("--manifest=") {
            out.push(arg.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strips_both_spellings() {
        let argv: Vec<String> = [
            "spectrum",
            "--manifest",
            "m.json",
            "--graph",
            "g.json",
            "--manifest=x",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        assert_eq!(
            strip_manifest_flag(&argv),
            vec!["spectrum", "--graph", "g.json"]
        );
    }
}
