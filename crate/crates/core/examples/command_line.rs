// Drives the command-line front end in-process.

use std::io::Write;

use monomial_automata::cli;

pub fn run_example() -> monomial_automata::Result<()> {
    let dir = std::env::temp_dir().join(format!("monalg-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("square.txt");
    std::fs::File::create(&path)?.write_all(b"letters x y\nforbid x x\n")?;
    let p = path.to_string_lossy().into_owned();
    let runs: [&[&str]; 4] = [
        &["classify", &p],
        &["count", &p, "--max-len", "6"],
        &["witness", &p, "--element", "1/1 x"],
        &["--json", "growth", &p],
    ];
    for args in runs {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = cli::run(
            std::iter::once("monalg").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        println!("$ monalg {}  (exit {code})", args.join(" "));
        print!("{}", String::from_utf8_lossy(&out));
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> monomial_automata::Result<()> {
    run_example()
}
