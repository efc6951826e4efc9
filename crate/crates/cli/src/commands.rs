use crate::args::{Cli, Command, EnumerateArgs, Format, RunConfig};
use minrho::domination::{dominating_set_with_supports, gamma_exact, gamma_tree};
use minrho::enumerate::{
    filter_class, free_trees_with_limit, FreeTrees, TreeCheckpoint, TreeClassFilter,
};
use minrho::error::Result;
use minrho::graph::named_trees::{diameter_bound_tree, h_tree};
use minrho::graph::{
    build_complete, build_corona, build_cycle, build_path, build_s10, build_star, build_starlike,
    build_t, build_wn, from_graph6, is_tree, to_graph6, CaterpillarSpec, Graph, TreeWitness,
};
use minrho::spectral::{compare_rho, parse_rational, radius_isolator, rational_string};
use minrho::verify::{claim_ids, to_junit, VerificationReport, Verifier};
use minrho::Error;
use num_traits::Signed;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::Path;

const CHECKPOINT_EVERY: u64 = 4096;

pub fn run(cli: Cli) -> Result<u8> {
    let cfg = cli.config;
    validate(&cfg)?;
    if let Some(w) = cfg.workers {
        // a second initialisation (e.g. in tests) keeps the existing pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global();
    }
    match cli.command {
        Command::Build {
            family,
            params,
            of,
            a,
            b,
            c,
            graph6: _,
            pretty,
        } => {
            let g = build(&family, &params, of.as_deref(), (&a, &b, &c))?;
            let mut out = to_graph6(&g);
            if pretty {
                for v in 0..g.n() {
                    let ns: Vec<String> = g.neighbors(v).iter().map(usize::to_string).collect();
                    out.push_str(&format!("\n{v}: {}", ns.join(" ")));
                }
            }
            emit(&out);
            Ok(0)
        }
        Command::Rho {
            graph,
            exact_compare,
            bounds,
        } => rho(&cfg, &graph, exact_compare.as_deref(), bounds),
        Command::Gamma {
            graph,
            certificate,
            with_supports,
        } => gamma(&cfg, &graph, certificate, with_supports),
        Command::Enumerate(args) => enumerate(&cfg, &args),
        Command::Verify {
            claim,
            n_range,
            junit,
        } => verify(&cfg, &claim, n_range.as_deref(), junit.as_deref()),
    }
}

fn validate(cfg: &RunConfig) -> Result<()> {
    if !parse_rational(&cfg.tol)?.is_positive() {
        return Err(Error::InvalidArgument("tol must be positive".into()));
    }
    if cfg.max_tree_n == 0 || cfg.max_graph_n == 0 || cfg.workers == Some(0) {
        return Err(Error::InvalidArgument(
            "limits and workers must be at least 1".into(),
        ));
    }
    Ok(())
}

fn emit(s: &str) {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    let _ = writeln!(lock, "{s}");
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn read_graph(arg: &str) -> Result<Graph> {
    if arg == "-" {
        let mut line = String::new();
        io::stdin()
            .lock()
            .read_line(&mut line)
            .map_err(|e| bad(format!("reading stdin: {e}")))?;
        from_graph6(line.trim())
    } else {
        from_graph6(arg.trim())
    }
}

fn num(params: &[String], k: usize, family: &str) -> Result<usize> {
    params
        .get(k)
        .ok_or_else(|| bad(format!("{family} needs at least {} parameter(s)", k + 1)))?
        .parse()
        .map_err(|_| {
            bad(format!(
                "{family}: '{}' is not a non-negative integer",
                params[k]
            ))
        })
}

fn build(
    family: &str,
    params: &[String],
    of: Option<&str>,
    legs: (&[usize], &[usize], &[usize]),
) -> Result<Graph> {
    match family.to_ascii_lowercase().as_str() {
        "path" => build_path(num(params, 0, family)?),
        "complete" => build_complete(num(params, 0, family)?),
        "cycle" => build_cycle(num(params, 0, family)?),
        "star" => build_star(num(params, 0, family)?),
        "t" => {
            let spec = CaterpillarSpec::new(num(params, 0, family)?, num(params, 1, family)?, num(params, 2, family)?)?;
            Ok(build_t(&spec))
        }
        "starlike" => build_starlike(legs.0, legs.1, legs.2),
        "wn" => build_wn(num(params, 0, family)?),
        "s10" => Ok(build_s10()),
        "h" => h_tree(num(params, 0, family)?),
        "tk" => diameter_bound_tree(num(params, 0, family)?),
        "corona" => {
            let base = match of {
                Some(spec) => match spec.split_once(':') {
                    Some((fam, rest)) => {
                        let ps: Vec<String> = rest.split([',', ':']).map(str::to_string).collect();
                        build(fam, &ps, None, (&[], &[], &[]))?
                    }
                    None => from_graph6(spec)?,
                },
                None => match params.first() {
                    Some(g6) => from_graph6(g6)?,
                    None => return Err(bad("corona needs --of FAMILY:ARGS or a graph6 base")),
                },
            };
            build_corona(&base)
        }
        other => Err(bad(format!(
            "unknown family '{other}'; expected path, complete, cycle, star, corona, T, starlike, Wn, S10, H, Tk"
        ))),
    }
}

fn rho(cfg: &RunConfig, graph: &str, other: Option<&str>, bounds: bool) -> Result<u8> {
    let g = read_graph(graph)?;
    if let Some(h) = other {
        let ord = compare_rho(&g, &read_graph(h)?)?;
        emit(&format!("{ord:?}"));
        return Ok(0);
    }
    let mut iso = radius_isolator(&g)?;
    iso.refine(&parse_rational(&cfg.tol)?);
    let e = iso.enclosure();
    let (lo, hi) = (rational_string(&e.lo), rational_string(&e.hi));
    match cfg.format {
        Format::Json => emit(&serde_json::to_string(&e).expect("enclosure serialises")),
        Format::Csv => emit(&format!(
            "rho,lo,hi,exact\n{},{lo},{hi},{}",
            e.decimal(4),
            e.is_exact()
        )),
        Format::Table => {
            let mut s = e.decimal(4);
            if e.is_exact() {
                s.push_str(" (exact)");
            }
            if bounds {
                s.push_str(&format!(" [{lo}, {hi}]"));
            }
            emit(&s);
        }
    }
    Ok(0)
}

fn gamma(cfg: &RunConfig, graph: &str, certificate: bool, with_supports: bool) -> Result<u8> {
    let g = read_graph(graph)?;
    let cert = if with_supports {
        if !is_tree(&g) {
            return Err(Error::Domain("--with-supports needs a tree".into()));
        }
        dominating_set_with_supports(&TreeWitness::new(g)?)?
    } else if is_tree(&g) {
        gamma_tree(&TreeWitness::new(g)?)
    } else {
        gamma_exact(&g)?
    };
    let json = serde_json::to_string(&cert).expect("certificate serialises");
    match cfg.format {
        Format::Json => emit(&json),
        Format::Csv => {
            let set: Vec<String> = cert.set.iter().map(usize::to_string).collect();
            emit(&format!(
                "gamma,method,set\n{},{},{}",
                cert.gamma,
                json_method(&cert),
                set.join(" ")
            ));
        }
        Format::Table => {
            emit(&cert.gamma.to_string());
            if certificate {
                emit(&json);
            }
        }
    }
    Ok(0)
}

fn json_method(cert: &minrho::domination::DominationCertificate) -> String {
    serde_json::to_value(cert.method)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn write_checkpoint(path: &Path, cp: &TreeCheckpoint) -> Result<()> {
    let text = serde_json::to_string(cp).expect("checkpoint serialises");
    std::fs::write(path, text)
        .map_err(|e| Error::Resource(format!("writing {}: {e}", path.display())))
}

fn enumerate(cfg: &RunConfig, a: &EnumerateArgs) -> Result<u8> {
    let mut stream = match &a.resume {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| bad(format!("reading {}: {e}", path.display())))?;
            let cp: TreeCheckpoint =
                serde_json::from_str(&text).map_err(|e| bad(format!("bad checkpoint: {e}")))?;
            if cp.n != a.n {
                return Err(bad(format!("checkpoint is for n = {}, not {}", cp.n, a.n)));
            }
            FreeTrees::resume(&cp, cfg.max_tree_n)?
        }
        None => free_trees_with_limit(a.n, cfg.max_tree_n)?,
    };
    let filter = TreeClassFilter {
        gamma_eq: a.gamma,
        max_degree_le: a.max_deg,
        max_degree_eq: a.max_deg_eq,
        leaf_mult_le: a.leaf_mult,
        diameter_eq: a.diameter_eq,
        diameter_le: a.diameter_le,
        caterpillar_only: a.caterpillar,
    };
    let gamma = |t: &TreeWitness| minrho::domination::tree_domination_number(t);
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut count = 0u64;
    loop {
        let batch: Vec<TreeWitness> = stream.by_ref().take(CHECKPOINT_EVERY as usize).collect();
        if batch.is_empty() {
            break;
        }
        for t in filter_class(batch.into_iter(), filter.clone(), gamma) {
            count += 1;
            if !a.count && writeln!(out, "{}", to_graph6(t.graph())).is_err() {
                return Ok(0);
            }
        }
        if let Some(path) = &a.checkpoint {
            write_checkpoint(path, &stream.checkpoint())?;
        }
    }
    if let Some(path) = &a.checkpoint {
        write_checkpoint(path, &stream.checkpoint())?;
    }
    if a.count {
        let _ = writeln!(out, "{count}");
    }
    Ok(0)
}

fn parse_orders(s: &str) -> Result<Vec<usize>> {
    let parse = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| bad(format!("bad order '{x}' in --n-range")))
    };
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b) = (parse(a)?, parse(b)?);
        if a > b {
            return Err(bad(format!("empty range {s}")));
        }
        Ok((a..=b).collect())
    } else {
        s.split(',').map(parse).collect()
    }
}

fn verify(cfg: &RunConfig, claim: &str, n_range: Option<&str>, junit: Option<&Path>) -> Result<u8> {
    let orders = n_range.map(parse_orders).transpose()?;
    let ids: Vec<&str> = if claim == "all" {
        claim_ids()
    } else if claim_ids().contains(&claim) {
        vec![claim]
    } else {
        return Err(bad(format!(
            "unknown claim '{claim}'; known: all, {}",
            claim_ids().join(", ")
        )));
    };
    if let Some(ns) = &orders {
        let max = ns.iter().copied().max().unwrap_or(0);
        let labelled_only = ids == ["tree-reduction"];
        let limit = if labelled_only {
            cfg.max_graph_n
        } else {
            cfg.max_tree_n
        };
        if max > limit {
            return Err(Error::Resource(format!(
                "order {max} exceeds the configured limit {limit}"
            )));
        }
    }
    let v = Verifier::new();
    let mut reports: Vec<VerificationReport> = Vec::new();
    for id in ids {
        reports.extend(v.run(id, orders.as_deref())?);
    }
    print_reports(cfg.format, &reports);
    if let Some(path) = junit {
        std::fs::write(path, to_junit(&reports))
            .map_err(|e| Error::Resource(format!("writing {}: {e}", path.display())))?;
    }
    Ok(if reports.iter().all(VerificationReport::passed) {
        0
    } else {
        1
    })
}

fn print_reports(format: Format, reports: &[VerificationReport]) {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match format {
        Format::Json => {
            for r in reports {
                let _ = writeln!(out, "{}", r.to_json_line());
            }
        }
        Format::Csv => {
            let _ = writeln!(out, "claim_id,n,status,rho_lo,rho_hi");
            for r in reports {
                for row in r.csv_rows() {
                    let _ = writeln!(out, "{row}");
                }
            }
        }
        Format::Table => {
            for r in reports {
                let ns: Vec<String> = r.n_range.iter().map(usize::to_string).collect();
                let rho = r
                    .witnesses
                    .iter()
                    .chain(&r.counterexamples)
                    .find_map(|w| w.rho.as_ref())
                    .map(|e| e.decimal(4))
                    .unwrap_or_default();
                let _ = writeln!(
                    out,
                    "{:<28} {:<12} {:<15} {:>8} {:>9.3}s",
                    r.claim_id,
                    truncate(&ns.join(","), 12),
                    r.status.as_str(),
                    rho,
                    r.elapsed.as_secs_f64()
                );
                for w in &r.counterexamples {
                    let _ = writeln!(
                        out,
                        "    counterexample {}: {} {}",
                        w.label,
                        w.graph6.as_deref().unwrap_or(""),
                        w.detail.as_deref().unwrap_or("")
                    );
                }
            }
        }
    }
}

fn truncate(s: &str, width: usize) -> String {
    if s.len() <= width {
        s.to_string()
    } else {
        format!("{}..", &s[..width - 2])
    }
}
