use std::process::ExitCode;

use summability_lab::cli_io::{execute, parse_config, EXIT_CONFIG};

fn main() -> ExitCode {
    if let Some(threads) = std::env::var("THREADS")
        .ok()
        .and_then(|t| t.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    let args: Vec<String> = std::env::args().collect();
    if args.iter().skip(1).any(|a| a == "--help" || a == "-h") || args.len() == 1 {
        println!(
            "usage: summalab <check-matrix|kernel-bounds|theorem|rate-table|list-exemplars> [--config FILE] \
             [--matrix SPEC] [--weights SPEC] [--function NAME] [--alpha A] [--beta B] [--n LIST] \
             [--grid-size G] [--t-grid-size T] [--id THEOREM] [--format csv|json] [--output PATH] [--strict]"
        );
        return if args.len() == 1 {
            ExitCode::from(EXIT_CONFIG as u8)
        } else {
            ExitCode::SUCCESS
        };
    }
    let config = match parse_config(&args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("summalab: {e}");
            return ExitCode::from(EXIT_CONFIG as u8);
        }
    };
    match execute(&config) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("summalab: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
