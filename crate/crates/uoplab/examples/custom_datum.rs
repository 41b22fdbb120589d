//! Loading a root datum from JSON and running verification suites on it,
//! the same path the `uoplab verify --group <file>` command takes.

use std::fs;

use uoplab::cli::{load_root_datum, run, RunConfig, Suite};

const SL3_SIMPLY_CONNECTED: &str = r#"{
  "name": "sl3-custom",
  "rank": 2,
  "simple_roots": [[2, -1], [-1, 2]],
  "positive_roots": [[2, -1], [-1, 2], [1, 1]],
  "positive_coroots": [[1, 0], [0, 1], [1, 1]]
}"#;

const BROKEN: &str = r#"{
  "name": "broken",
  "rank": 2,
  "simple_roots": [[1, -1]],
  "positive_roots": [[1, -1]],
  "positive_coroots": [[3, 0]]
}"#;

fn main() -> uoplab::Result<()> {
    let dir = std::env::temp_dir().join("uoplab-custom-datum");
    fs::create_dir_all(&dir).map_err(|e| uoplab::Error::ConfigError(e.to_string()))?;
    let good = dir.join("custom.json");
    let bad = dir.join("broken.json");
    fs::write(&good, SL3_SIMPLY_CONNECTED)
        .map_err(|e| uoplab::Error::ConfigError(e.to_string()))?;
    fs::write(&bad, BROKEN).map_err(|e| uoplab::Error::ConfigError(e.to_string()))?;

    let d = load_root_datum(&good)?;
    println!(
        "{}: |W₀| = {}, 2ρ = {}",
        d.name(),
        d.weyl().order(),
        d.two_rho()
    );
    if let Err(e) = load_root_datum(&bad) {
        println!("broken datum rejected: {e}");
    }

    let cfg = RunConfig {
        group: good.to_string_lossy().into_owned(),
        suites: vec![
            Suite::Rootdata,
            Suite::Hecke,
            Suite::Satake,
            Suite::Integrality,
        ],
        box_radius: 1,
        parallel: true,
        ..RunConfig::default()
    };
    let report = run(&cfg)?;
    println!("{report}");
    Ok(())
}
