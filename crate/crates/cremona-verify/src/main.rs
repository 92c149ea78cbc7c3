use std::fs;

use cremona_verify::suites::{registry, run_selection};

fn main() {
    let exit_code = match run(std::env::args().skip(1).collect()) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("{error}");
            2
        }
    };
    std::process::exit(exit_code);
}

fn run(args: Vec<String>) -> Result<i32, String> {
    if args.is_empty() {
        return Err(usage());
    }

    match args[0].as_str() {
        "run" => run_suites(&args[1..]),
        "list" => run_list(&args[1..]),
        "help" | "--help" | "-h" => {
            println!("{}", usage());
            Ok(0)
        }
        other => Err(format!("unknown subcommand '{other}'\n\n{}", usage())),
    }
}

fn usage() -> String {
    [
        "cremona-verify usage:",
        "  cremona-verify run [--suite <name>] [--format md|json] [--seed <n>]",
        "      [--cap <n>] [--out <path>]",
        "  cremona-verify list",
        "",
        "run flags:",
        "  --suite <name>   suite to run: 'all' (default) or a name from `list`",
        "  --format <fmt>   report format: md (default) or json",
        "  --seed <n>       seed for the randomized checks (default 1)",
        "  --cap <n>        group-closure size cap (default 100000)",
        "  --out <path>     write the report to a file instead of stdout",
        "",
        "exit codes:",
        "  0   every check passed (erratum notes do not fail the run)",
        "  1   at least one check failed",
        "  2   CLI/usage error",
    ]
    .join("\n")
}

fn run_list(args: &[String]) -> Result<i32, String> {
    if let Some(flag) = args.first() {
        return Err(format!("unknown flag for list: {flag}"));
    }
    for suite in registry() {
        println!("{:<10}  {}", suite.name(), suite.describe());
    }
    Ok(0)
}

enum Format {
    Markdown,
    Json,
}

fn run_suites(args: &[String]) -> Result<i32, String> {
    let mut suite = "all".to_string();
    let mut format = Format::Markdown;
    let mut seed = 1u64;
    let mut cap = 100_000usize;
    let mut out: Option<String> = None;

    let mut index = 0usize;
    while index < args.len() {
        match args[index].as_str() {
            "--suite" => {
                index += 1;
                let value = args
                    .get(index)
                    .ok_or_else(|| "--suite requires a name".to_string())?;
                suite = value.clone();
            }
            "--format" => {
                index += 1;
                let value = args
                    .get(index)
                    .ok_or_else(|| "--format requires md or json".to_string())?;
                format = match value.as_str() {
                    "md" | "markdown" => Format::Markdown,
                    "json" => Format::Json,
                    other => {
                        return Err(format!("unknown format '{other}' (expected md or json)"))
                    }
                };
            }
            "--seed" => {
                index += 1;
                let value = args
                    .get(index)
                    .ok_or_else(|| "--seed requires a number".to_string())?;
                seed = value
                    .parse()
                    .map_err(|_| format!("--seed expects an unsigned integer, got '{value}'"))?;
            }
            "--cap" => {
                index += 1;
                let value = args
                    .get(index)
                    .ok_or_else(|| "--cap requires a number".to_string())?;
                cap = value
                    .parse()
                    .map_err(|_| format!("--cap expects an unsigned integer, got '{value}'"))?;
            }
            "--out" => {
                index += 1;
                let value = args
                    .get(index)
                    .ok_or_else(|| "--out requires a path".to_string())?;
                out = Some(value.clone());
            }
            flag => return Err(format!("unknown flag for run: {flag}")),
        }
        index += 1;
    }

    let report = run_selection(&suite, seed, cap)?;
    let rendered = match format {
        Format::Markdown => report.to_markdown(),
        Format::Json => report.to_json(),
    };
    match out {
        Some(path) => fs::write(&path, &rendered)
            .map_err(|error| format!("failed to write report '{path}': {error}"))?,
        None => print!("{rendered}"),
    }
    Ok(if report.has_failures() { 1 } else { 0 })
}
