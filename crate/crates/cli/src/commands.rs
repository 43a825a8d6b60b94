use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use gremban::clustering::{detect_multiway, detect_two_way};
use gremban::dynamics::{metastability_profile, Diffusion};
use gremban::experiments::{run_sweep, sweep_csv, SweepConfig};
use gremban::generators::{sample_ssbm, SbmConfig};
use gremban::io::{parse_signed_edge_list, parse_vector, profile_csv, projection_csv, trajectory_csv, write_gremban, write_signed_edge_list, KeyValues};
use gremban::matrix::{build_bundle, lifted_degrees, normalized_laplacian, SymMatrix};
use gremban::spectral::{eig_sym, lifted_eig, tag_vector, LiftClass};
use gremban::walks::{count_signed_walks, signed_and_unsigned_powers};
use gremban::{expand, Error, Execution, SignedGraph};

use crate::{Cli, Command, Operator};

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Usage(String),
    Lib(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(m) | CliError::Usage(m) => f.write_str(m),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Lib(e) => match e {
                Error::Parse { .. } => 3,
                Error::Numerical(_)
                | Error::Divergent { .. }
                | Error::Overflow(_)
                | Error::DegenerateDegree(_)
                | Error::Ambiguous
                | Error::Asymmetric(_) => 4,
                _ => 2,
            },
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string())),
    }
}

fn load_graph(path: &Path) -> Result<SignedGraph> {
    Ok(parse_signed_edge_list(&read(path)?)?.graph)
}

pub fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Expand { input, output } => expand_cmd(input, output.as_deref()),
        Command::Detect { input, k } => detect_cmd(cli, input, *k),
        Command::Sweep { config, output, sequential } => sweep_cmd(cli, config, output.as_deref(), *sequential),
        Command::Spectrum { input, which } => spectrum_cmd(cli, input, *which),
        Command::Diffuse { input, x0, t_max, samples, output } => diffuse_cmd(input, x0, *t_max, *samples, output),
        Command::Walks { input, k, v, w } => walks_cmd(input, *k, *v, *w),
        Command::Generate { .. } => generate_cmd(cli),
    }
}

fn expand_cmd(input: &Path, output: Option<&Path>) -> Result<()> {
    let g = load_graph(input)?;
    let gg = expand(&g);
    write_or_print(output, &write_gremban(&gg))?;
    let connected = gg.graph().is_connected();
    let balanced = g.is_balanced().balanced;
    let summary = format!(
        "expansion: {} nodes, {} edges, {} (source {})",
        gg.node_count(),
        gg.graph().edge_count(),
        if connected { "connected" } else { "disconnected" },
        if balanced { "balanced" } else { "unbalanced" }
    );
    // Keep stdout clean when it carries the expansion itself.
    if output.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| CliError::Io(e.to_string()))
}

fn detect_cmd(cli: &Cli, input: &Path, k: Option<usize>) -> Result<()> {
    let g = load_graph(input)?;
    let json = match k {
        None | Some(2) => to_json(&detect_two_way(&g, cli.normalized)?)?,
        Some(k) if k < 2 => return Err(CliError::Usage("k must be at least 2".into())),
        Some(k) => to_json(&detect_multiway(&g, k, cli.normalized, cli.seed.unwrap_or(0))?)?,
    };
    write_or_print(None, &json)
}

fn sweep_cmd(cli: &Cli, config: &Path, output: Option<&Path>, sequential: bool) -> Result<()> {
    let kv = KeyValues::parse(&read(config)?)?;
    let mut cfg = SweepConfig::from_key_values(&kv)?;
    match (cli.seed, kv.raw("seed")) {
        (Some(s), _) => cfg.seed = s,
        (None, Some(_)) => {}
        (None, None) => return Err(CliError::Usage("sweep needs --seed or a `seed` key in the config".into())),
    }
    if cli.normalized {
        cfg.normalized = true;
    }
    let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
    let rows = run_sweep(&cfg, exec)?;
    write_or_print(output, &sweep_csv(&rows))
}

fn format_value(x: f64) -> String {
    let s = format!("{x:.12}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn maybe_normalize(cli: &Cli, m: SymMatrix, degrees: &[f64]) -> Result<SymMatrix> {
    if cli.normalized {
        Ok(normalized_laplacian(&m, degrees)?)
    } else {
        Ok(m)
    }
}

fn spectrum_cmd(cli: &Cli, input: &Path, which: Operator) -> Result<()> {
    let g = load_graph(input)?;
    let b = build_bundle(&g);
    let k: Vec<f64> = g.degrees().into_iter().map(|d| d as f64).collect();
    let expanded = matches!(which, Operator::GrembanA | Operator::GrembanL);
    let m = match which {
        Operator::A => b.a,
        Operator::ABar => b.a_bar,
        Operator::L => maybe_normalize(cli, b.l, &k)?,
        Operator::LBar => maybe_normalize(cli, b.l_bar, &k)?,
        Operator::GrembanA => b.gremban_a,
        Operator::GrembanL => maybe_normalize(cli, b.gremban_l, &lifted_degrees(&g))?,
    };
    let mut out = String::new();
    if expanded {
        let lifted = lifted_eig(&m)?;
        out.push_str("index,eigenvalue,class,symmetric_norm,antisymmetric_norm\n");
        let d = &lifted.decomposition;
        for (i, (l, v)) in d.eigenvalues.iter().zip(&d.eigenvectors).enumerate() {
            let tag = tag_vector(v, cli.tol);
            let class = match tag.class {
                LiftClass::Symmetric => "symmetric",
                LiftClass::Antisymmetric => "antisymmetric",
                LiftClass::Mixed => "mixed",
            };
            let (s, a) = tag.projection_norms;
            out.push_str(&format!("{i},{},{class},{},{}\n", format_value(*l), format_value(s), format_value(a)));
        }
    } else {
        out.push_str("index,eigenvalue\n");
        for (i, l) in eig_sym(&m)?.eigenvalues.iter().enumerate() {
            out.push_str(&format!("{i},{}\n", format_value(*l)));
        }
    }
    write_or_print(None, &out)
}

fn initial_state(x0: &str, g: &SignedGraph) -> Result<Vec<f64>> {
    let m = 2 * g.node_count();
    if x0 == "uniform" {
        return Ok(vec![1.0; m]);
    }
    if let Some(node) = x0.strip_prefix("delta:") {
        let v: usize = node.parse().map_err(|_| CliError::Usage(format!("invalid node in `{x0}`")))?;
        if v >= g.node_count() {
            return Err(Error::NodeOutOfRange { id: v, n: g.node_count() }.into());
        }
        let mut x = vec![0.0; m];
        x[v] = 1.0;
        return Ok(x);
    }
    if let Some(path) = x0.strip_prefix("file:") {
        let x = parse_vector(&read(Path::new(path))?)?;
        if x.len() != m {
            return Err(Error::Dimension { expected: m, actual: x.len() }.into());
        }
        return Ok(x);
    }
    Err(CliError::Usage(format!("invalid x0 `{x0}`; expected delta:<node>, uniform or file:<path>")))
}

fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!("{stem}.{suffix}.csv"))
}

fn diffuse_cmd(input: &Path, x0: &str, t_max: f64, samples: usize, output: &Path) -> Result<()> {
    if !(t_max > 0.0 && t_max.is_finite()) || samples < 2 {
        return Err(CliError::Usage("need t_max > 0 and at least 2 samples".into()));
    }
    let g = load_graph(input)?;
    let x = initial_state(x0, &g)?;
    let times: Vec<f64> = (0..samples).map(|i| t_max * i as f64 / (samples - 1) as f64).collect();
    let traj = Diffusion::new(&g)?.trajectory(&x, &times)?;
    let gg = expand(&g);
    let profile = metastability_profile(&traj, &gg)?;
    let projected = sibling(output, "projected");
    let prof = sibling(output, "profile");
    write_or_print(Some(output), &trajectory_csv(&traj, &gg))?;
    write_or_print(Some(&projected), &projection_csv(&traj))?;
    write_or_print(Some(&prof), &profile_csv(&traj.times, &profile))?;
    println!("wrote {}, {}, {}", output.display(), projected.display(), prof.display());
    Ok(())
}

fn walks_cmd(input: &Path, k: usize, v: usize, w: usize) -> Result<()> {
    let g = load_graph(input)?;
    let n = g.node_count();
    for id in [v, w] {
        if id >= n {
            return Err(Error::NodeOutOfRange { id, n }.into());
        }
    }
    let counts = count_signed_walks(&g, k)?;
    let (ak, abark) = signed_and_unsigned_powers(&g, k)?;
    let out = format!(
        "positive {}\nnegative {}\nsigned_power {}\nunsigned_power {}\n",
        counts.positive.get(v, w),
        counts.negative.get(v, w),
        ak.get(v, w),
        abark.get(v, w)
    );
    write_or_print(None, &out)
}

const SBM_KEYS: [&str; 9] = [
    "n",
    "groups",
    "rho_plus_in",
    "rho_plus_out",
    "rho_minus_in",
    "rho_minus_out",
    "activities",
    "seed",
    "balanced_groups",
];

fn generate_cmd(cli: &Cli) -> Result<()> {
    let Command::Generate {
        config,
        n,
        groups,
        rho_plus_in,
        rho_plus_out,
        rho_minus_in,
        rho_minus_out,
        balanced_groups,
        output,
    } = &cli.command
    else {
        unreachable!("dispatched on Generate")
    };
    let kv = match config {
        Some(p) => KeyValues::parse(&read(p)?)?,
        None => KeyValues::default(),
    };
    kv.check_keys(&SBM_KEYS)?;
    let d = SbmConfig::default();
    let seed = match (cli.seed, kv.get_u64("seed")?) {
        (Some(s), _) | (None, Some(s)) => s,
        (None, None) => return Err(CliError::Usage("generate needs --seed or a `seed` key in the config".into())),
    };
    let cfg = SbmConfig {
        n: n.or(kv.get_usize("n")?).unwrap_or(d.n),
        groups: groups.or(kv.get_usize("groups")?).unwrap_or(d.groups),
        rho_plus_in: rho_plus_in.or(kv.get_f64("rho_plus_in")?).unwrap_or(d.rho_plus_in),
        rho_plus_out: rho_plus_out.or(kv.get_f64("rho_plus_out")?).unwrap_or(d.rho_plus_out),
        rho_minus_in: rho_minus_in.or(kv.get_f64("rho_minus_in")?).unwrap_or(d.rho_minus_in),
        rho_minus_out: rho_minus_out.or(kv.get_f64("rho_minus_out")?).unwrap_or(d.rho_minus_out),
        activities: kv.get_f64_list("activities")?,
        seed,
        balanced_groups: *balanced_groups || kv.get_bool("balanced_groups")?.unwrap_or(false),
    };
    let sample = sample_ssbm(&cfg)?;
    write_or_print(output.as_deref(), &write_signed_edge_list(&sample.graph, Some(&sample.ground_truth)))
}
