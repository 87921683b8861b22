use std::path::PathBuf;

use clap::{Args, ValueEnum};
use hurwitz_core::kp::SolitonParams;
use hurwitz_core::{Error, Rational, Result, TruncationProfile};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Shared run configuration.
#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Maximal total p-weight.
    #[arg(long, global = true, default_value_t = 4)]
    pub weight: u32,
    /// Maximal total beta degree.
    #[arg(long, global = true, default_value_t = 3)]
    pub beta_order: u32,
    /// Maximal q1 exponent for open computations.
    #[arg(long, global = true, default_value_t = 4)]
    pub q1_max: u32,
    /// x/z exponents range over [-window, window].
    #[arg(long, global = true, default_value_t = 7)]
    pub window: u32,
    /// Levels N, as `a..b` (inclusive) or a comma list.
    #[arg(long, global = true, default_value = "-2..2", allow_hyphen_values = true)]
    pub n_range: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for the randomized Fock checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Soliton parameters alpha_i (comma-separated rationals).
    #[arg(long, global = true, default_value = "1,2,1/2", allow_hyphen_values = true)]
    pub alphas: String,
    /// Soliton parameters beta_i.
    #[arg(long, global = true, default_value = "-1,3,-2/3", allow_hyphen_values = true)]
    pub betas: String,
    /// Soliton amplitudes a_i.
    #[arg(long, global = true, default_value = "1,2/5,-3", allow_hyphen_values = true)]
    pub amps: String,
}

fn parse_rationals(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Rational>().map_err(|_| Error::InvalidArgument(format!("not a rational: {t}"))))
        .collect()
}

impl Options {
    pub fn validate(&self) -> Result<()> {
        if self.window < self.weight + 2 {
            return Err(Error::InvalidProfile(format!(
                "window {} must be at least weight + 2 = {}",
                self.window,
                self.weight + 2
            )));
        }
        self.levels()?;
        Ok(())
    }

    fn window(&self, p: TruncationProfile) -> Result<TruncationProfile> {
        let w = self.window as i32;
        let p = p.with_x_window(-w, w);
        p.validate()?;
        Ok(p)
    }

    pub fn closed_profile(&self) -> Result<TruncationProfile> {
        self.window(TruncationProfile::closed(self.weight, self.beta_order))
    }

    pub fn open_profile(&self) -> Result<TruncationProfile> {
        self.window(TruncationProfile::open(self.weight, self.q1_max, self.beta_order))
    }

    pub fn soliton_profile(&self) -> Result<TruncationProfile> {
        self.window(TruncationProfile::closed(self.weight, 0))
    }

    pub fn levels(&self) -> Result<Vec<i64>> {
        let bad = || Error::InvalidArgument(format!("malformed N range: {}", self.n_range));
        let levels: Vec<i64> = if let Some((a, b)) = self.n_range.split_once("..") {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            (a..=b).collect()
        } else {
            self.n_range
                .split(',')
                .map(|t| t.trim().parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        if levels.is_empty() {
            return Err(bad());
        }
        Ok(levels)
    }

    pub fn soliton_params(&self) -> Result<SolitonParams> {
        SolitonParams::new(
            parse_rationals(&self.alphas)?,
            parse_rationals(&self.betas)?,
            parse_rationals(&self.amps)?,
        )
    }

    /// Three random head-row perturbations with small rational entries.
    pub fn random_rows(&self) -> Vec<Vec<Rational>> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..3)
            .map(|_| {
                let len = rng.gen_range(1..=3);
                (0..len)
                    .map(|_| Rational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into()))
                    .collect()
            })
            .collect()
    }
}
