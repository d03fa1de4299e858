//! Write the bundled fixtures as ideal files.
//!
//! `cargo run -p ginbetti --example export_fixtures [DIR]` (default `fixtures`).

use std::path::PathBuf;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    std::fs::create_dir_all(&dir)?;
    for f in ginbetti::fixtures::corpus() {
        let path = dir.join(format!("{}.ideal", f.name));
        std::fs::write(&path, f.render()?)?;
        println!("{}", path.display());
    }
    Ok(())
}
