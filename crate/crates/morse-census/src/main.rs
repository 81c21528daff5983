//! Command-line front end: individual counts, the census table, exact
//! rescaled-table values, tree enumeration and the cross-route verifier.

use clap::{Parser, Subcommand, ValueEnum};
use morse_census::census::{census, render, Format};
use morse_census::geometric::{count_geometric_classes, xi_class_counts, HhatTable};
use morse_census::homology::count_homology_classes;
use morse_census::profiles::profile_count_closed;
use morse_census::topology::{count_closed_paths, young_walk_closed_form, MoveSet};
use morse_census::trees::{enumerate_morse_trees, enumerate_morse_trees_extended};
use morse_census::verify::run_all;

#[derive(Parser)]
#[command(
    name = "morse-census",
    version,
    about = "Exact class counts of Morse functions on the 2-sphere"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum FormatArg {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum GeomMethod {
    /// Two-parameter integer recurrence (fastest).
    #[default]
    Recurrence,
    /// Rescaled rational table.
    Hhat,
    /// Series inversion of the integral representation.
    Series,
    /// Brute-force tree enumeration (order 4 at most).
    Brute,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum TopoMethod {
    /// Closed-path dynamic program over all three moves.
    #[default]
    Dp,
    /// Up/down walks of the Young lattice.
    Young,
    /// The odd-double-factorial lower bound.
    Bound,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum TreeEmit {
    #[default]
    Edges,
    Profiles,
}

#[derive(Subcommand)]
enum Command {
    /// Print the census table for orders 0 ..= max-n.
    Census {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Number of homological classes of order N.
    Homology { n: u64 },
    /// Number of planar Morse profiles of order N.
    Profiles { n: u64 },
    /// Number of geometric classes of order N.
    Geometric {
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        method: GeomMethod,
    },
    /// Closed-path counts of the partition move graph.
    Topology {
        /// Even path length (2n + 2 for order n).
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value_t)]
        method: TopoMethod,
    },
    /// Print H(x, y) and the rescaled value Hhat(x, y) exactly.
    Hhat { x: usize, y: usize },
    /// Operations on enumerated Morse trees.
    Trees {
        #[command(subcommand)]
        command: TreesCommand,
    },
    /// Run the cross-route invariant suite; nonzero exit on any mismatch.
    Verify {
        /// Also run the order-3 tree oracle and the series route to its
        /// seventh coefficient.
        #[arg(long)]
        deep: bool,
    },
}

#[derive(Subcommand)]
enum TreesCommand {
    /// List every normalized Morse tree of order N.
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        emit: TreeEmit,
        /// Allow order 4 (about 10^8 candidate sequences).
        #[arg(long)]
        large: bool,
    },
}

fn usage_error(message: &str) -> ! {
    eprintln!("error: {message}");
    std::process::exit(2);
}

fn run(cli: Cli) {
    match cli.command {
        Command::Census { max_n, format } => {
            let format = match format {
                FormatArg::Text => Format::Text,
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
            };
            print!("{}", render(&census(max_n), format));
        }
        Command::Homology { n } => println!("{}", count_homology_classes(n)),
        Command::Profiles { n } => println!("{}", profile_count_closed(n)),
        Command::Geometric { n, method } => match method {
            GeomMethod::Recurrence => println!("{}", count_geometric_classes(n)),
            GeomMethod::Hhat => println!("{}", HhatTable::build(0, n).integer_count(0, n)),
            GeomMethod::Series => println!("{}", xi_class_counts(n.max(1))[n]),
            GeomMethod::Brute => match enumerate_morse_trees_extended(n) {
                Ok(trees) => println!("{}", trees.len()),
                Err(e) => usage_error(&e.to_string()),
            },
        },
        Command::Topology { length, method } => {
            if length < 2 || length % 2 != 0 {
                usage_error("--length must be an even integer >= 2");
            }
            match method {
                TopoMethod::Dp => println!("{}", count_closed_paths(length, MoveSet::Simplified)),
                TopoMethod::Young => println!("{}", count_closed_paths(length, MoveSet::YoungOnly)),
                TopoMethod::Bound => println!("{}", young_walk_closed_form(length as u64 / 2 - 1)),
            }
        }
        Command::Hhat { x, y } => {
            let table = HhatTable::build(x, y);
            println!("H({x},{y}) = {}", table.integer_count(x, y));
            println!("Hhat({x},{y}) = {}", table.hhat(x, y));
        }
        Command::Trees { command } => match command {
            TreesCommand::Enumerate { n, emit, large } => {
                let trees = if large {
                    enumerate_morse_trees_extended(n)
                } else {
                    enumerate_morse_trees(n)
                };
                let trees = match trees {
                    Ok(trees) => trees,
                    Err(e) => usage_error(&format!("{e} (use --large for order 4)")),
                };
                match emit {
                    TreeEmit::Edges => {
                        for t in &trees {
                            print!("{}", t.to_edge_text());
                        }
                    }
                    TreeEmit::Profiles => {
                        for t in &trees {
                            println!("profile {}", t.profile().to_text());
                        }
                    }
                }
            }
        },
        Command::Verify { deep } => {
            let checks = run_all(deep);
            let mut failures = 0;
            for c in &checks {
                println!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
                if !c.detail.is_empty() {
                    for line in c.detail.lines() {
                        println!("     {line}");
                    }
                }
                if !c.passed {
                    failures += 1;
                }
            }
            println!("{} checks, {} failed", checks.len(), failures);
            if failures > 0 {
                std::process::exit(1);
            }
        }
    }
}

fn main() {
    let cli = Cli::parse();
    // contract: internal assertion failures diagnose and exit 1, not 101
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(cli)));
    if outcome.is_err() {
        eprintln!("internal assertion failure; see the message above");
        std::process::exit(1);
    }
}
