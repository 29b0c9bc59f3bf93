//! Parses a session script and prints its text and JSON reports.

use fcalc::session::{parse_session, run_session, RunOptions};

const SCRIPT: &str = "
ring p=3 vars=x,y,z order=grevlex
ideal I = x*y - z^2
ideal m = x, y, z
map phi = level 1 mult (x*y - z^2)^2 ambient I
compute fedder I 1
check fpure I 1
check surjective-at phi m
compute testideal phi
compute extract-gen (x,y,z) 1
";

fn main() -> fcalc::Result<()> {
    let session = parse_session(SCRIPT)?;
    let opts = RunOptions {
        cache: false,
        ..RunOptions::default()
    };
    let report = run_session(&session, Some("inline"), &opts);
    print!("{}", report.to_text());
    println!("exit code {}", report.exit_code());
    println!("{}", report.to_json());
    Ok(())
}
