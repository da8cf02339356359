//! Drives the command-line front end from a TOML config file, with a flag
//! overriding one of its values.
//!
//! cargo run --example cli_config

use clap::Parser;
use rsmorse::cli::{run, Cli};

fn main() -> std::io::Result<()> {
    let dir = std::env::temp_dir().join("rsmorse-cli-config-example");
    std::fs::create_dir_all(&dir)?;
    let config = dir.join("run.toml");
    std::fs::write(&config, "n = 2\nq = \"1/4\"\nt = \"2/3\"\nthat0 = \"1/2\"\nthat1 = \"-1/3\"\nthat2 = \"1/5\"\nmax_weight = 2\n")?;
    let out = dir.join("poly.json");

    let args = ["rsmorse", "poly", "--config", config.to_str().unwrap(), "--max-weight", "1", "--out", out.to_str().unwrap()];
    let code = run(Cli::parse_from(args));
    println!("exit code {code}");
    println!("{}", std::fs::read_to_string(&out)?);
    Ok(())
}
