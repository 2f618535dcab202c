//! Where a presentation comes from: a builder, a fixture or a JSON file.

use std::path::PathBuf;

use clap::Args;
use wpi_core::presentation::{from_json, special_fixture, Letter};
use wpi_core::{
    build_elliptic, build_presentation, build_zariski, BuildOptions, Presentation, Variant, Word,
};

use crate::config::Config;
use crate::CliError;

#[derive(Args, Debug, Clone, Default)]
pub struct SourceArgs {
    /// Read a JSON presentation instead of building one.
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<u32>,
    /// singularity, discriminant, moduli, zariski, elliptic or fixture.
    #[arg(long)]
    pub variant: Option<String>,
    /// Degree of the binary forms for the zariski variant.
    #[arg(long)]
    pub l: Option<u32>,
    /// n1d1, n1d1_projective or n1d2.
    #[arg(long)]
    pub fixture: Option<String>,
    /// Exponent of the projective action relation (default 3d).
    #[arg(long)]
    pub pact_exponent: Option<u32>,
    /// Build the moduli variant for odd d.
    #[arg(long)]
    pub allow_odd_d: bool,
}

impl SourceArgs {
    pub fn load(&self, cfg: &Config) -> Result<Presentation, CliError> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            return Ok(from_json(&text)?);
        }
        let fixture = self.fixture.clone().or_else(|| cfg.fixture.clone());
        let variant = match self.variant.as_deref().or(cfg.variant.as_deref()) {
            Some(v) => v.parse::<Variant>()?,
            None if fixture.is_some() => Variant::Fixture,
            None => Variant::Discriminant,
        };
        match variant {
            Variant::Elliptic => Ok(build_elliptic()),
            Variant::Zariski => {
                let l = self
                    .l
                    .or(cfg.l)
                    .ok_or_else(|| CliError::Usage("the zariski variant needs --l".into()))?;
                Ok(build_zariski(l)?)
            }
            Variant::Fixture => {
                let id = fixture
                    .ok_or_else(|| CliError::Usage("the fixture variant needs --fixture".into()))?;
                Ok(special_fixture(&id)?)
            }
            _ => {
                let n = self.n.or(cfg.n).unwrap_or(1);
                let d = self.d.or(cfg.d).unwrap_or(1);
                let options = BuildOptions {
                    pact_exponent: self.pact_exponent.or(cfg.pact_exponent),
                    allow_odd_d: self.allow_odd_d || cfg.allow_odd_d.unwrap_or(false),
                };
                Ok(build_presentation(n, d, variant, options)?)
            }
        }
    }
}

/// Parses `t_1_1*t_1_2^-1` style words against the presentation's names.
pub fn parse_word(p: &Presentation, text: &str) -> Result<Word, CliError> {
    let text = text.trim();
    if text.is_empty() || text == "1" {
        return Ok(Word::empty());
    }
    let mut letters = Vec::new();
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, exponent) = match factor.split_once('^') {
            Some((name, e)) => {
                let e: i64 = e
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad exponent in `{factor}`")))?;
                (name.trim(), e)
            }
            None => (factor, 1),
        };
        let g = p
            .generator_index(name)
            .ok_or_else(|| CliError::Usage(format!("unknown generator `{name}`")))?;
        let letter = if exponent < 0 { Letter::neg(g) } else { Letter::pos(g) };
        letters.extend(std::iter::repeat_n(letter, exponent.unsigned_abs() as usize));
    }
    Ok(Word(letters).free_reduce())
}
