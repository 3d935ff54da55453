use auslander_lab::cli::{exit_code, run_command, Command, Context, Output, SessionSpec, StructureFile};
use auslander_lab::{Error, Result};
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "auslab", version, about = "Exact structures and Auslander correspondences over GF(p)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct Common {
    /// Session file (JSON)
    session: PathBuf,
    /// Directory for the text report, its JSON twin and DOT files
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Knit mod Λ and print the AR quiver
    Indecomposables(Common),
    /// Enumerate exact structures on add(M)
    ExactStructures {
        #[command(flatten)]
        common: Common,
        /// Cross-check against the brute-force oracle
        #[arg(long)]
        oracle: bool,
    },
    /// Run every per-structure check
    Verify {
        #[command(flatten)]
        common: Common,
        /// JSON list of structures to verify instead of the enumerated ones
        #[arg(long)]
        structures: Option<PathBuf>,
    },
    /// smod_ad, eff and cogen Q for one structure
    Smodad {
        #[command(flatten)]
        common: Common,
        /// Structure id from exact-structures
        #[arg(long)]
        structure: usize,
    },
    /// Run the commands listed in the session file
    Run(Common),
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn emit(out: &Output, dir: Option<&Path>) -> Result<()> {
    print!("{}", out.text);
    if let Some(dir) = dir {
        let io = |e: std::io::Error| Error::Input(format!("{}: {e}", dir.display()));
        std::fs::create_dir_all(dir).map_err(io)?;
        std::fs::write(dir.join(format!("{}.txt", out.command)), &out.text).map_err(io)?;
        let json = serde_json::to_string_pretty(&out.json).expect("serializable") + "\n";
        std::fs::write(dir.join(format!("{}.json", out.command)), json).map_err(io)?;
        for (stem, src) in &out.dots {
            std::fs::write(dir.join(format!("{stem}.dot")), src).map_err(io)?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> i32 {
    let (common, cmds, oracle, extra) = match cli.cmd {
        Cmd::Indecomposables(c) => (c, Some(vec![Command::Indecomposables]), false, None),
        Cmd::ExactStructures { common, oracle } => (common, Some(vec![Command::ExactStructures]), oracle, None),
        Cmd::Verify { common, structures } => (common, Some(vec![Command::Verify]), false, structures),
        Cmd::Smodad { common, structure } => (common, Some(vec![Command::Smodad(structure)]), false, None),
        Cmd::Run(c) => (c, None, false, None),
    };
    let setup = || -> Result<(Context, Vec<Command>, bool)> {
        let mut session = SessionSpec::parse(&read(&common.session)?)?;
        if let Some(path) = &extra {
            let list: Vec<StructureFile> =
                serde_json::from_str(&read(path)?).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
            session.structures = list;
        }
        let oracle = oracle || session.oracle;
        let cmds = cmds.clone().unwrap_or_else(|| session.commands.clone());
        Ok((Context::new(&session)?, cmds, oracle))
    };
    let (ctx, cmds, oracle) = match setup() {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&Err(e));
        }
    };
    let mut worst = 0;
    for c in &cmds {
        let r = run_command(&ctx, c, oracle);
        let code = exit_code(&r);
        match r {
            Ok(o) => {
                if let Err(e) = emit(&o, common.out.as_deref()) {
                    eprintln!("error: {e}");
                    return 2;
                }
            }
            Err(e) => eprintln!("error: {e}"),
        }
        worst = worst.max(code);
    }
    worst
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()) as u8)
}
