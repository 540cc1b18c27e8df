//! `forge`: command-line front end for forge-core.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use forge_core::constructions::fibre::{express_in_generators, fibre_product_generators, FibreData, PairWord};
use forge_core::constructions::{
    build_raag, direct_product, reidemeister_schreier, rips, todd_coxeter, wreath_embed, CosetTable, RipsOutput,
    WreathElement,
};
use forge_core::mcg::{
    block_wreath_embed, check_relations, curve_system_from_graph, genus_steps, pairing, raag_symplectic_rep,
    wreath_genus,
};
use forge_core::oracle::FreeGroupOracle;
use forge_core::reductions::fibre::{conjugacy_reduction_query, membership_query, ConjugationTable};
use forge_core::reductions::{
    build_phi, gamma0_membership, sl2z_word, torsion_order, z_kernel_membership, MappingTorus, ZKernelSpec,
};
use forge_core::solvers::search::{area_estimate, brute_force_trivial, AreaBudget, BruteBudget, BruteForceOracle};
use forge_core::solvers::small_cancellation::{check_small_cancellation, parse_ratio};
use forge_core::solvers::{abelianization, raag_normal_form, smith_normal_form, DehnSolver};
use forge_core::{Graph, IntMatrix, Presentation, Word, WordProblemOracle};

#[derive(Parser)]
#[command(name = "forge", version, about = "Finitely presented groups at desk scale")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Wall-clock limit in seconds for searches.
    #[arg(long, global = true)]
    timeout: Option<f64>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct InArg {
    /// `.grp` presentation file.
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Args)]
struct GraphArg {
    /// Edge-list file: `n=<k>` then one `i j` per line.
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args)]
struct SubgroupArg {
    /// Subgroup generators separated by `;`.
    #[arg(long, default_value = "")]
    subgroup: String,
    #[arg(long, default_value_t = 10_000)]
    max_cosets: usize,
}

#[derive(Args)]
struct MatrixArg {
    /// Entries `a,b,c,d` of `[[a,b],[c,d]]`.
    #[arg(long, allow_hyphen_values = true)]
    matrix: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and normalise a presentation.
    Parse(InArg),
    /// RAAG of a graph.
    Raag(GraphArg),
    /// Direct product of two presentations.
    Product {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Small-cancellation compiler with a 2-generated kernel.
    Rips {
        #[command(flatten)]
        input: InArg,
        #[arg(long, default_value_t = 8)]
        blocks: usize,
    },
    /// Generators of the fibre product of the compiled group.
    FibreGens {
        #[command(flatten)]
        input: InArg,
        #[arg(long, default_value_t = 8)]
        blocks: usize,
    },
    /// Longest piece and C'(λ) test.
    Smallcancel {
        #[command(flatten)]
        input: InArg,
        #[arg(long, default_value = "1/6")]
        lambda: String,
    },
    /// Dehn's algorithm on a C'(1/6) presentation.
    Solve {
        #[command(flatten)]
        input: InArg,
        #[arg(long)]
        word: String,
    },
    /// Bounded search for a derivation to the empty word.
    Brute {
        #[command(flatten)]
        input: InArg,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max_states: usize,
    },
    /// Least number of relator applications killing a word.
    Area {
        #[command(flatten)]
        input: InArg,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 16)]
        max_area: usize,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// RAAG normal form.
    Nf {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        word: String,
    },
    /// Abelianization.
    Abel(InArg),
    /// Smith normal form of a JSON matrix (array of rows).
    Snf {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Coset enumeration.
    Tc {
        #[command(flatten)]
        input: InArg,
        #[command(flatten)]
        sub: SubgroupArg,
    },
    /// Presentation of a finite-index subgroup.
    Rs {
        #[command(flatten)]
        input: InArg,
        #[command(flatten)]
        sub: SubgroupArg,
    },
    /// Image of a word in the wreath product over the coset action.
    WreathEmbed {
        #[command(flatten)]
        input: InArg,
        #[command(flatten)]
        sub: SubgroupArg,
        #[arg(long)]
        word: String,
    },
    /// Fibre-product membership of a pair over the compiled group.
    Member {
        #[command(flatten)]
        input: InArg,
        #[arg(long, default_value_t = 8)]
        blocks: usize,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Rewrite `w a w^-1` over the kernel letters and decide conjugacy in P.
    ConjRewrite {
        /// Compile this quotient; without it the mapping-torus instance is used.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        blocks: usize,
        /// Word over the Γ × Γ alphabet (names suffixed `_1`, `_2`).
        #[arg(long)]
        word: String,
        /// Word over the kernel alphabet (names suffixed `_1`, `_2`).
        #[arg(long)]
        a: String,
    },
    /// Kernel of `G^n -> Z` given by weighted exponent sums.
    Zkernel {
        #[command(flatten)]
        input: InArg,
        /// Comma-separated weights, one per generator.
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        /// `;`-separated words, one per factor.
        #[arg(long)]
        tuple: String,
    },
    /// Membership in Γ₀(level).
    Gamma0 {
        #[command(flatten)]
        m: MatrixArg,
        #[arg(long)]
        level: i64,
    },
    /// Order of an SL(2, Z) matrix.
    Order {
        #[command(flatten)]
        m: MatrixArg,
        #[arg(long, default_value_t = 12)]
        max_n: u32,
    },
    /// Word in S, T for an SL(2, Z) matrix.
    Sl2word {
        #[command(flatten)]
        m: MatrixArg,
    },
    /// Surjection Γ₀(level) -> Z.
    Phi {
        #[arg(long)]
        level: i64,
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
    },
    /// Curve system of a graph.
    Curves(GraphArg),
    /// Transvection representation of a RAAG.
    Rep {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = 2)]
        power: i64,
    },
    /// Commutation and free-pair checks for the representation.
    Relcheck {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = 2)]
        power: i64,
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
    /// Genus of the closed surface carrying the wreath action.
    WreathGenus {
        #[arg(long)]
        gs: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        h: i64,
        #[arg(long)]
        m: i64,
    },
    /// Block matrix of a wreath element with symplectic bottoms (JSON file).
    BlockEmbed {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        block_dim: usize,
    },
}

/// Text and JSON renderings of one result.
struct Output {
    text: String,
    json: Value,
}

fn out<T: Serialize>(text: impl Into<String>, value: &T) -> Result<Output> {
    Ok(Output {
        text: text.into(),
        json: serde_json::to_value(value)?,
    })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_presentation(path: &Path) -> Result<Presentation> {
    Presentation::parse(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    Graph::parse(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn word(p: &Presentation, text: &str) -> Result<Word> {
    p.parse_word(text).with_context(|| format!("word `{text}`"))
}

fn words(p: &Presentation, text: &str) -> Result<Vec<Word>> {
    text.split(';').filter(|s| !s.trim().is_empty()).map(|s| word(p, s)).collect()
}

fn sl2_matrix(text: &str) -> Result<IntMatrix> {
    let v: Vec<i64> = text
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .with_context(|| format!("matrix `{text}`"))?;
    match v[..] {
        [a, b, c, d] => Ok(IntMatrix::two_by_two(a, b, c, d)),
        _ => bail!("matrix `{text}` must have 4 entries"),
    }
}

fn timeout(cli: &Cli) -> Option<Duration> {
    cli.timeout.map(Duration::from_secs_f64)
}

/// Exact for free quotients, Dehn's algorithm for certified C'(1/6) ones,
/// bounded search otherwise.
fn quotient_oracle(q: &Presentation) -> Box<dyn WordProblemOracle> {
    if q.relators().is_empty() {
        return Box::new(FreeGroupOracle);
    }
    match DehnSolver::new(q) {
        Ok(s) => Box::new(s),
        Err(_) => Box::new(BruteForceOracle {
            presentation: q.clone(),
            budget: BruteBudget::new(16, 1_000_000),
        }),
    }
}

fn matrix_text(m: &IntMatrix) -> String {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn pair_text(pw: &PairWord, p: &Presentation) -> String {
    format!("({}, {})", p.format_word(&pw.left), p.format_word(&pw.right))
}

fn table_text(t: &CosetTable) -> String {
    let mut s = format!("index {}\n", t.index());
    for c in 0..t.index() {
        let row: Vec<String> = t.action.iter().map(|col| col[c].to_string()).collect();
        let _ = writeln!(s, "{c}: {}", row.join(" "));
    }
    s
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.cmd {
        Cmd::Parse(a) => {
            let p = load_presentation(&a.input)?;
            out(p.serialize(), &p)
        }
        Cmd::Raag(g) => {
            let p = build_raag(&load_graph(&g.graph)?);
            out(p.serialize(), &p)
        }
        Cmd::Product { left, right } => {
            let d = direct_product(&load_presentation(left)?, &load_presentation(right)?)?;
            out(d.product.serialize(), &d.product)
        }
        Cmd::Rips { input, blocks } => {
            let r = rips(&load_presentation(&input.input)?, *blocks)?;
            let text = format!(
                "{}# blocks {} (requested {}), max piece {} / shortest relator {}\n",
                r.gamma.serialize(),
                r.padding.blocks,
                r.padding.requested_blocks,
                r.report.max_piece_length,
                r.report.min_relator_length
            );
            out(text, &r)
        }
        Cmd::FibreGens { input, blocks } => {
            let r = rips(&load_presentation(&input.input)?, *blocks)?;
            let gens = fibre_product_generators(&FibreData::from_rips(&r));
            let text: String = gens.iter().map(|g| pair_text(g, &r.gamma) + "\n").collect();
            out(text, &gens)
        }
        Cmd::Smallcancel { input, lambda } => {
            let l = parse_ratio(lambda).ok_or_else(|| anyhow!("bad ratio `{lambda}`"))?;
            let p = load_presentation(&input.input)?;
            let r = check_small_cancellation(&p, l)?;
            let text = format!(
                "max piece {} / shortest relator {} = {}; C'({lambda}): {}\n",
                r.max_piece_length,
                r.min_relator_length,
                r.ratio,
                r.passes(l)
            );
            out(text, &r)
        }
        Cmd::Solve { input, word: w } => {
            let p = load_presentation(&input.input)?;
            let solver = DehnSolver::new(&p)?;
            let w = word(&p, w)?;
            let (verdict, reduced) = solver.reduce(&w);
            let text = format!("{verdict:?} (reduced to {})\n", p.format_word(&reduced)).to_lowercase();
            out(text, &json!({ "verdict": verdict, "reduced": reduced }))
        }
        Cmd::Brute {
            input,
            word: w,
            max_len,
            max_states,
        } => {
            let p = load_presentation(&input.input)?;
            let mut budget = BruteBudget::new(*max_len, *max_states);
            budget.timeout = timeout(cli);
            let r = brute_force_trivial(&word(&p, w)?, &p, budget);
            out(format!("{r:?}\n"), &r)
        }
        Cmd::Area {
            input,
            word: w,
            max_area,
            max_len,
        } => {
            let p = load_presentation(&input.input)?;
            let w = word(&p, w)?;
            let mut budget = AreaBudget::new(*max_area, max_len.unwrap_or(w.len() + 4));
            budget.timeout = timeout(cli);
            let r = area_estimate(&w, &p, budget);
            let text = match r.status {
                forge_core::solvers::search::AreaStatus::Exact => format!("{}\n", r.value),
                s => format!("{s:?} {}\n", r.value),
            };
            out(text, &r)
        }
        Cmd::Nf { graph, word: w } => {
            let g = load_graph(&graph.graph)?;
            let p = build_raag(&g);
            let nf = raag_normal_form(&word(&p, w)?, &g);
            out(p.format_word(&nf) + "\n", &nf)
        }
        Cmd::Abel(a) => {
            let ab = abelianization(&load_presentation(&a.input)?);
            let text = format!("free rank {}, torsion {:?}\n", ab.free_rank, ab.torsion);
            out(text, &ab)
        }
        Cmd::Snf { matrix } => {
            let rows: Vec<Vec<i64>> = serde_json::from_str(&read(matrix)?).context("matrix JSON")?;
            let m = IntMatrix::from_rows(&rows)?;
            let s = smith_normal_form(&m);
            out(format!("{:?}\n", s.diagonal()), &s)
        }
        Cmd::Tc { input, sub } => {
            let p = load_presentation(&input.input)?;
            let t = todd_coxeter(&p, &words(&p, &sub.subgroup)?, sub.max_cosets)?;
            out(table_text(&t), &t)
        }
        Cmd::Rs { input, sub } => {
            let p = load_presentation(&input.input)?;
            let t = todd_coxeter(&p, &words(&p, &sub.subgroup)?, sub.max_cosets)?;
            let (h, inc) = reidemeister_schreier(&p, &t)?;
            out(h.serialize(), &json!({ "subgroup": h, "inclusion": inc }))
        }
        Cmd::WreathEmbed { input, sub, word: w } => {
            let p = load_presentation(&input.input)?;
            let t = todd_coxeter(&p, &words(&p, &sub.subgroup)?, sub.max_cosets)?;
            let e = wreath_embed(&word(&p, w)?, &t, &t.transversal())?;
            let mut text = format!("top {:?}\n", e.top);
            for (c, b) in e.bottom.iter().enumerate() {
                let _ = writeln!(text, "{c}: {}", p.format_word(b));
            }
            out(text, &e)
        }
        Cmd::Member {
            input,
            blocks,
            left,
            right,
        } => {
            let q = load_presentation(&input.input)?;
            let r = rips(&q, *blocks)?;
            let f = FibreData::from_rips(&r);
            let pw = PairWord::new(word(&r.gamma, left)?, word(&r.gamma, right)?);
            let m = membership_query(&pw, &f, quotient_oracle(&q).as_ref());
            let expr = (m == forge_core::reductions::fibre::Membership::Member)
                .then(|| express_in_generators(&pw, &f))
                .flatten();
            out(format!("{m:?}\n"), &json!({ "membership": m, "generator_word": expr }))
        }
        Cmd::ConjRewrite {
            input,
            blocks,
            word: w,
            a,
        } => conj_rewrite(input.as_deref(), *blocks, w, a),
        Cmd::Zkernel { input, weights, tuple } => {
            let p = load_presentation(&input.input)?;
            let ws: Vec<i64> = weights
                .split(',')
                .map(|s| s.trim().parse())
                .collect::<Result<_, _>>()
                .context("weights")?;
            let tuple = words(&p, tuple)?;
            let spec = ZKernelSpec::power(p, ws, tuple.len())?;
            let m = z_kernel_membership(&tuple, &spec)?;
            out(format!("{m}\n"), &m)
        }
        Cmd::Gamma0 { m, level } => {
            let r = gamma0_membership(&sl2_matrix(&m.matrix)?, *level)?;
            out(format!("{r}\n"), &r)
        }
        Cmd::Order { m, max_n } => {
            let r = torsion_order(&sl2_matrix(&m.matrix)?, *max_n)?;
            let text = r.map_or_else(|| format!("infinite or > {max_n}\n"), |n| format!("{n}\n"));
            out(text, &r)
        }
        Cmd::Sl2word { m } => {
            let w = sl2z_word(&sl2_matrix(&m.matrix)?)?;
            let st = forge_core::reductions::sl2::sl2z_presentation();
            out(st.format_word(&w) + "\n", &w)
        }
        Cmd::Phi { level, matrix } => {
            let phi = build_phi(*level)?;
            let value = matrix.as_deref().map(sl2_matrix).transpose()?.map(|m| phi.evaluate(&m)).transpose()?;
            let mut text = format!(
                "index {} (projective line {}), subgroup rank {}, free rank {}, torsion {:?}\nweights {:?}\n",
                phi.table.index(),
                phi.oracle_index,
                phi.subgroup.rank(),
                phi.abelianization.free_rank,
                phi.abelianization.torsion,
                phi.weights
            );
            if let Some(v) = value {
                let _ = writeln!(text, "phi = {v}");
            }
            out(
                text,
                &json!({
                    "level": phi.level,
                    "index": phi.table.index(),
                    "oracle_index": phi.oracle_index,
                    "subgroup": phi.subgroup,
                    "abelianization": phi.abelianization,
                    "coordinate": phi.coordinate,
                    "weights": phi.weights,
                    "value": value,
                }),
            )
        }
        Cmd::Curves(g) => {
            let g = load_graph(&g.graph)?;
            let (space, curves) = curve_system_from_graph(&g);
            let mut text = String::new();
            for (i, c) in curves.iter().enumerate() {
                let _ = writeln!(text, "c{i}: {:?}", c.vector);
            }
            let n = curves.len();
            let pairings: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| pairing(&curves[i].vector, &curves[j].vector)).collect())
                .collect();
            out(text, &json!({ "space": space, "curves": curves, "pairings": pairings }))
        }
        Cmd::Rep { graph, power } => {
            let rep = raag_symplectic_rep(&load_graph(&graph.graph)?, *power);
            let text: String = rep
                .matrices
                .iter()
                .enumerate()
                .map(|(i, m)| format!("v{i}:\n{}\n", matrix_text(m)))
                .collect();
            out(text, &rep)
        }
        Cmd::Relcheck { graph, power, cap } => {
            let g = load_graph(&graph.graph)?;
            let r = check_relations(&raag_symplectic_rep(&g, *power), &g, *cap);
            let mut text = String::new();
            for p in &r.pairs {
                let _ = writeln!(
                    text,
                    "{} {}: edge {}, commute {}, relation {:?}, ok {}",
                    p.i, p.j, p.edge, p.commute, p.relation, p.consistent
                );
            }
            let _ = writeln!(text, "consistent {}", r.consistent);
            out(text, &r)
        }
        Cmd::WreathGenus { gs, b, h, m } => {
            let genus = wreath_genus(*gs, *b, *h, *m)?;
            let steps = genus_steps(*gs, *b, *h, *m)?;
            out(format!("{genus}\n"), &steps)
        }
        Cmd::BlockEmbed { input, block_dim } => {
            let w: WreathElement<IntMatrix> = serde_json::from_str(&read(input)?).context("wreath element JSON")?;
            let w = WreathElement::new(w.top, w.bottom)?;
            let m = block_wreath_embed(&w, *block_dim)?;
            out(matrix_text(&m) + "\n", &m)
        }
    }
}

fn conj_rewrite(input: Option<&Path>, blocks: usize, w: &str, a: &str) -> Result<Output> {
    let (gamma, f, tbl, oracle): (Presentation, FibreData, ConjugationTable, Box<dyn WordProblemOracle>) = match input
    {
        Some(path) => {
            let q = load_presentation(path)?;
            let r: RipsOutput = rips(&q, blocks)?;
            let oracle = quotient_oracle(&q);
            (r.gamma.clone(), FibreData::from_rips(&r), ConjugationTable::from_rips(&r), oracle)
        }
        None => {
            let m = MappingTorus::default();
            (m.presentation(), m.fibre_data(), m.conjugation_table(), Box::new(FreeGroupOracle))
        }
    };
    let tbl = tbl.squared();
    let outer = Presentation::free("outer", &tbl.outer);
    let inner = Presentation::free("inner", &tbl.inner);
    let w = word(&outer, w)?;
    let a = word(&inner, a)?;
    let ans = conjugacy_reduction_query(&w, &a, &f, &tbl, oracle.as_ref());
    let mut text = format!(
        "{:?}\nw' = {}\nlength {} (envelope {})\n",
        ans.verdict,
        inner.format_word(&ans.rewrite.word),
        ans.rewrite.word.len(),
        ans.rewrite.envelope
    );
    if let Some(h) = &ans.witness {
        let _ = writeln!(text, "witness {}", pair_text(h, &gamma));
    }
    out(text, &ans)
}

fn emit(cli: &Cli, o: Output) -> Result<()> {
    let body = if cli.json {
        serde_json::to_string_pretty(&o.json)? + "\n"
    } else {
        o.text
    };
    match &cli.out {
        Some(path) => std::fs::write(path, body).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|o| emit(&cli, o)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", format!("{e:#}").replace('\n', " "));
            ExitCode::from(1)
        }
    }
}
