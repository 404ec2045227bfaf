//! Run configuration: defaults, flat key = value config files, flag
//! overrides, and the "5pi/6" angle syntax.

use anyhow::{anyhow, bail, Context, Result};
use bandlim::{make_linear_growth, make_sinc_combo, make_tone, BandConfig, Method, QuadratureSpec, SignalSpec};
use std::path::{Path, PathBuf};

/// Raw option set before resolution; every field may still be absent.
/// File values fill unset fields first, then flags override.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub omega: Option<String>,
    pub alpha: Option<f64>,
    pub d: Option<u32>,
    pub n: Option<u32>,
    pub t: Option<f64>,
    pub ls: Option<String>,
    pub methods: Option<String>,
    pub signal: Option<String>,
    pub out: Option<PathBuf>,
    pub panels: Option<u32>,
    pub nodes: Option<u32>,
}

impl Overrides {
    /// Fields set in `self` win; holes are filled from `fallback`.
    fn or(self, fallback: Overrides) -> Overrides {
        Overrides {
            omega: self.omega.or(fallback.omega),
            alpha: self.alpha.or(fallback.alpha),
            d: self.d.or(fallback.d),
            n: self.n.or(fallback.n),
            t: self.t.or(fallback.t),
            ls: self.ls.or(fallback.ls),
            methods: self.methods.or(fallback.methods),
            signal: self.signal.or(fallback.signal),
            out: self.out.or(fallback.out),
            panels: self.panels.or(fallback.panels),
            nodes: self.nodes.or(fallback.nodes),
        }
    }
}

/// Fully resolved run parameters.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub omega: f64,
    pub alpha: f64,
    d_override: Option<u32>,
    n_override: Option<u32>,
    pub t: f64,
    pub ls: Vec<u32>,
    pub methods: Vec<Method>,
    pub signal: SignalSpec,
    pub out: Option<PathBuf>,
    pub quad: QuadratureSpec,
}

impl RunConfig {
    pub fn band_config(&self) -> Result<BandConfig> {
        let mut config = BandConfig::new(self.omega, self.alpha)?;
        if let Some(n) = self.n_override {
            config = config.with_n(n)?;
        }
        if let Some(d) = self.d_override {
            config = config.with_d(d)?;
        }
        Ok(config)
    }
}

/// Parses an angle given in radians ("2.618"), as a multiple of pi
/// ("0.75pi", "pi"), or as a pi fraction ("5pi/6", "-pi/2").
pub fn parse_angle(s: &str) -> Result<f64> {
    let text = s.trim();
    if let Some(idx) = text.find("pi") {
        let (pre, post) = (&text[..idx], &text[idx + 2..]);
        let coefficient = match pre {
            "" | "+" => 1.0,
            "-" => -1.0,
            _ => pre
                .parse::<f64>()
                .map_err(|_| anyhow!("bad angle {text:?}: cannot parse {pre:?}"))?,
        };
        let denominator = match post.strip_prefix('/') {
            None if post.is_empty() => 1.0,
            Some(den) => den
                .parse::<f64>()
                .map_err(|_| anyhow!("bad angle {text:?}: cannot parse {den:?}"))?,
            None => bail!("bad angle {text:?}: unexpected trailing {post:?}"),
        };
        if denominator == 0.0 {
            bail!("bad angle {text:?}: zero denominator");
        }
        Ok(coefficient * std::f64::consts::PI / denominator)
    } else {
        text.parse::<f64>()
            .map_err(|_| anyhow!("bad angle {text:?}: expected radians or a pi fraction"))
    }
}

fn parse_methods(s: &str) -> Result<Vec<Method>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| match p {
            "classical" => Ok(Method::Classical),
            "d1" => Ok(Method::D1),
            "general" => Ok(Method::GeneralD),
            _ => bail!("unknown method {p:?}: expected classical, d1, or general"),
        })
        .collect()
}

fn parse_ls(s: &str) -> Result<Vec<u32>> {
    let ls: Vec<u32> = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<u32>()
                .map_err(|_| anyhow!("bad window half-width {p:?}"))
        })
        .collect::<Result<_>>()?;
    if ls.is_empty() {
        bail!("the window list must not be empty");
    }
    Ok(ls)
}

fn parse_signal(s: &str, omega: f64) -> Result<SignalSpec> {
    match s {
        "sinc-combo" => Ok(make_sinc_combo(omega)),
        "linear-growth" => Ok(make_linear_growth(omega)),
        _ => {
            if let Some(rest) = s.strip_prefix("tone:") {
                let (w0_text, p_text) = rest
                    .split_once(':')
                    .ok_or_else(|| anyhow!("tone signal needs tone:<omega0>:<degree>"))?;
                let w0 = parse_angle(w0_text)?;
                if w0.abs() > omega {
                    bail!("tone frequency {w0} lies outside the band [-{omega}, {omega}]");
                }
                let p = p_text
                    .parse::<u32>()
                    .map_err(|_| anyhow!("bad tone degree {p_text:?}"))?;
                Ok(make_tone(w0, p))
            } else {
                bail!("unknown signal {s:?}: expected sinc-combo, linear-growth, or tone:<omega0>:<degree>")
            }
        }
    }
}

/// Reads a flat "key = value" config file. Blank lines and lines starting
/// with `#` are skipped; unknown keys are rejected.
pub fn read_config_file(path: &Path) -> Result<Overrides> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config file {}", path.display()))?;
    let mut o = Overrides::default();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("{}:{}: expected key = value", path.display(), idx + 1))?;
        let (key, value) = (key.trim(), value.trim().to_string());
        let loc = || format!("{}:{}", path.display(), idx + 1);
        match key {
            "omega" => o.omega = Some(value),
            "alpha" => o.alpha = Some(value.parse().with_context(loc)?),
            "d" => o.d = Some(value.parse().with_context(loc)?),
            "n" | "N" => o.n = Some(value.parse().with_context(loc)?),
            "t" => o.t = Some(value.parse().with_context(loc)?),
            "l" | "L" => o.ls = Some(value),
            "method" => o.methods = Some(value),
            "signal" => o.signal = Some(value),
            "out" => o.out = Some(PathBuf::from(value)),
            "panels" => o.panels = Some(value.parse().with_context(loc)?),
            "nodes" => o.nodes = Some(value.parse().with_context(loc)?),
            _ => bail!("{}: unknown config key {key:?}", loc()),
        }
    }
    Ok(o)
}

/// Merges flags over an optional config file and resolves defaults.
pub fn resolve(flags: Overrides, config_file: Option<&Path>) -> Result<RunConfig> {
    let file = match config_file {
        Some(path) => read_config_file(path)?,
        None => Overrides::default(),
    };
    let merged = flags.or(file);

    let omega = match &merged.omega {
        Some(text) => parse_angle(text)?,
        None => 5.0 * std::f64::consts::PI / 6.0,
    };
    if !(omega > 0.0 && omega < std::f64::consts::PI) {
        bail!("band edge must lie strictly inside (0, pi), got {omega}");
    }
    let signal = parse_signal(merged.signal.as_deref().unwrap_or("sinc-combo"), omega)?;
    let alpha = merged.alpha.unwrap_or(signal.growth_exponent);
    if let Some(d) = merged.d {
        if !(1..=6).contains(&d) {
            bail!("smoothness order {d} is outside the supported range 1..=6");
        }
    }
    let ls = parse_ls(merged.ls.as_deref().unwrap_or("50,100,500"))?;
    let methods = parse_methods(merged.methods.as_deref().unwrap_or("classical,d1,general"))?;
    let quad = QuadratureSpec {
        panels: merged.panels.unwrap_or(8),
        nodes_per_panel: merged.nodes.unwrap_or(16),
        abs_tol: 1e-9,
    };
    let run = RunConfig {
        omega,
        alpha,
        d_override: merged.d,
        n_override: merged.n,
        t: merged.t.unwrap_or(-1.71),
        ls,
        methods,
        signal,
        out: merged.out,
        quad,
    };
    run.band_config()?; // validate the band parameters eagerly
    Ok(run)
}
