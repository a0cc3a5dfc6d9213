//! Full verification of a graph read from a TOML document.
//!
//! cargo run --release --example verify -- crates/core/examples/graphs/cycle.toml

use std::path::PathBuf;

use anick::graph_doc::GraphDocument;
use anick::leavitt::Leavitt;
use anick::report::{run, Command, RunConfig};

fn main() -> anick::Result<()> {
    let path = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/graphs/cycle.toml")));
    let graph = GraphDocument::load(&path)?.to_graph()?;
    let lv = Leavitt::new(graph)?;
    let report = run(Command::Verify, &lv, &RunConfig::default())?;
    print!("{}", report.render_text());
    let failures = report.failures();
    if !failures.is_empty() {
        println!("failing checks: {}", failures.join(", "));
    }
    Ok(())
}
