use std::fmt::{self, Write};
use std::fs;
use std::path::Path;

use magiclat::apps::{
    diagnose_with, factorizations_with, factorize, labeling_to_semimagic, labeling_to_symmetric,
    n_matchings_with, perfect_matchings_with, semimagic_to_labeling, symmetric_to_labeling,
    SemiMagicHost, SquareMatrix,
};
use magiclat::cone::hilbert_basis_with;
use magiclat::ehrhart::{count_magic_with, fit_quasipolynomial_with};
use magiclat::export;
use magiclat::faces::{
    edge_graph, enumerate_faces_with, isomorphism_classes_by, FacePoset, IsoMode,
};
use magiclat::graph::io::{parse_edge_list, parse_group_table, write_edge_list, EdgeList};
use magiclat::graph::{bipartite_to_digraph, cayley_digraph, digraph_to_bipartite, HostKind};
use magiclat::{
    build_constraints, complete_digraph, Error, HilbertAlgorithm, Host, Labeling, Limits,
};
use serde_json::{json, Value};

use crate::{Algorithm, Cli, Command, Convert, HostCommand, Input, Target};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::MalformedInput(_)) | CliError::Input(_) => 2,
            CliError::Core(Error::Resource { .. }) => 3,
            CliError::Core(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Input(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type Out = Result<String, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_edge_list(path: &Path) -> Result<EdgeList, CliError> {
    Ok(parse_edge_list(&read(path)?)?)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn edge_names(host: &Host, edges: &[usize]) -> String {
    if edges.is_empty() {
        return "none".to_string();
    }
    edges
        .iter()
        .map(|&e| host.edge_name(e))
        .collect::<Vec<_>>()
        .join(" ")
}

fn header(out: &mut String, host: &Host) {
    let _ = writeln!(
        out,
        "# {}, {} vertices, {} edges",
        host.kind(),
        host.vertex_count(),
        host.edge_count()
    );
    let all: Vec<usize> = (0..host.edge_count()).collect();
    let _ = writeln!(out, "# edges: {}", edge_names(host, &all));
}

fn labeling_line(l: &Labeling) -> String {
    match l.magic_sum() {
        Some(s) => format!("sum {s}: {}", join(l.values())),
        None => format!("not magic: {}", join(l.values())),
    }
}

pub fn run(cli: &Cli) -> Out {
    let limits = Limits {
        hilbert: match cli.algorithm {
            Algorithm::Completion => HilbertAlgorithm::Completion,
            Algorithm::Intersection => HilbertAlgorithm::Intersection,
        },
        ..Limits::from_env()
    };
    match &cli.command {
        Command::Host(cmd) => {
            let path = input_of(cmd)
                .file
                .as_deref()
                .ok_or_else(|| CliError::Input("missing FILE argument".to_string()))?;
            let host = read_edge_list(path)?.host;
            host_command(cmd, &host, cli.json, &limits)
        }
        Command::Birkhoff { n, command } => {
            if input_of(command).file.is_some() {
                return Err(CliError::Input(
                    "birkhoff builds its own host; drop the FILE argument".to_string(),
                ));
            }
            host_command(command, &complete_digraph(*n)?, cli.json, &limits)
        }
        Command::Factorize {
            file,
            label_file,
            parts,
            sums,
        } => {
            let host = read_edge_list(file)?.host;
            let l = read_labeling(&host, label_file)?;
            match parts {
                Some(p) => factor_parts(&l, &read(p)?, cli.json),
                None => factor_search(&l, sums.as_deref(), cli.json, &limits),
            }
        }
        Command::Cayley { table } => cayley(&read(table)?, cli.json),
        Command::Convert(c) => convert(c, cli.json),
    }
}

fn input_of(cmd: &HostCommand) -> &Input {
    match cmd {
        HostCommand::Hilbert { input }
        | HostCommand::Count { input, .. }
        | HostCommand::Ehrhart { input }
        | HostCommand::Faces { input, .. }
        | HostCommand::EdgeGraph { input, .. }
        | HostCommand::Poset { input, .. }
        | HostCommand::Classes { input, .. }
        | HostCommand::Matchings { input, .. }
        | HostCommand::Check { input } => input,
    }
}

fn iso_mode(bipartite_image: bool) -> IsoMode {
    if bipartite_image {
        IsoMode::BipartiteImage
    } else {
        IsoMode::Support
    }
}

fn host_command(cmd: &HostCommand, host: &Host, json: bool, limits: &Limits) -> Out {
    let mut out = String::new();
    match cmd {
        HostCommand::Hilbert { .. } => {
            let hb = hilbert_basis_with(&build_constraints(host)?, limits)?;
            if json {
                return Ok(pretty(&export::hilbert_basis_json(&hb)));
            }
            header(&mut out, host);
            let _ = writeln!(out, "# {} elements", hb.len());
            for l in &hb {
                let _ = writeln!(out, "{}", labeling_line(l));
            }
        }
        HostCommand::Count { sum, .. } => {
            let h = count_magic_with(host, *sum, limits)?;
            if json {
                return Ok(pretty(&json!({ "sum": sum, "count": h.to_string() })));
            }
            let _ = writeln!(out, "{h}");
        }
        HostCommand::Ehrhart { .. } => {
            let fit = fit_quasipolynomial_with(host, limits)?;
            return Ok(pretty(&export::ehrhart_json(&fit)));
        }
        HostCommand::Faces {
            dim,
            bipartite_image,
            ..
        } => {
            let poset = enumerate_faces_with(host, limits)?;
            let mode = iso_mode(*bipartite_image);
            if json {
                return Ok(pretty(&export::faces_json(&poset, *dim, mode)));
            }
            faces_text(&mut out, &poset, *dim, mode);
        }
        HostCommand::EdgeGraph { dot, .. } => {
            let poset = enumerate_faces_with(host, limits)?;
            if *dot {
                return Ok(export::edge_graph_dot(&poset));
            }
            let g = edge_graph(&poset);
            if json {
                return Ok(pretty(&export::host_json(&g)));
            }
            out = write_edge_list(&g, None);
        }
        HostCommand::Poset { dot, .. } => {
            let poset = enumerate_faces_with(host, limits)?;
            if *dot {
                return Ok(export::poset_dot(&poset));
            }
            if json {
                let mut v = export::faces_json(&poset, None, IsoMode::Support);
                v["covers"] = json!(poset.covers);
                return Ok(pretty(&v));
            }
            for &(lo, hi) in &poset.covers {
                let _ = writeln!(out, "f{lo} < f{hi}");
            }
        }
        HostCommand::Classes {
            dim,
            bipartite_image,
            ..
        } => {
            let poset = enumerate_faces_with(host, limits)?;
            let classes = isomorphism_classes_by(&poset, *dim, iso_mode(*bipartite_image));
            if json {
                return Ok(pretty(&export::classes_json(&poset, *dim, &classes)));
            }
            let _ = writeln!(out, "# {} classes of {}-faces", classes.len(), dim);
            for (k, c) in classes.iter().enumerate() {
                let rep = c.representative;
                let _ = writeln!(
                    out,
                    "class {k}: count {}, representative f{rep}: {}",
                    c.count(),
                    edge_names(host, &poset.faces[rep].support)
                );
            }
        }
        HostCommand::Matchings { max, .. } => {
            let list = match max {
                Some(n) => n_matchings_with(host, *n, limits)?,
                None => perfect_matchings_with(host, limits)?,
            };
            if json {
                return Ok(pretty(&export::labelings_json(host, &list)));
            }
            header(&mut out, host);
            let what = match max {
                Some(n) => format!("{n}-matchings"),
                None => "perfect matchings".to_string(),
            };
            let _ = writeln!(out, "# {} {what}", list.len());
            for l in &list {
                let _ = writeln!(out, "{}", labeling_line(l));
            }
        }
        HostCommand::Check { .. } => {
            let d = diagnose_with(host, limits)?;
            let opt = |x: Option<i64>| x.map_or("none".to_string(), |v| v.to_string());
            if json {
                return Ok(pretty(&json!({
                    "kind": d.kind,
                    "vertices": d.vertices,
                    "edges": d.edges,
                    "bipartite_components": d.bipartite_components,
                    "eulerian": d.eulerian,
                    "balanced": d.balanced,
                    "positive": d.positive,
                    "zero_edges": d.zero_edges,
                    "formula_degree": d.formula_degree,
                    "expected_degree": d.expected_degree,
                    "fitted_degree": d.fitted_degree,
                    "degree_agrees": d.degree_agrees(),
                })));
            }
            let zero = if d.zero_edges.is_empty() {
                "none".to_string()
            } else {
                edge_names(host, &d.zero_edges)
            };
            let _ = writeln!(out, "kind: {}", d.kind);
            let _ = writeln!(out, "vertices: {}", d.vertices);
            let _ = writeln!(out, "edges: {}", d.edges);
            let _ = writeln!(out, "bipartite components: {}", d.bipartite_components);
            let _ = writeln!(out, "eulerian: {}", d.eulerian);
            let _ = writeln!(out, "balanced: {}", d.balanced);
            let _ = writeln!(out, "positive: {}", d.positive);
            let _ = writeln!(out, "zero edges: {zero}");
            let _ = writeln!(out, "degree formula: {}", d.formula_degree);
            let _ = writeln!(
                out,
                "positive part degree formula: {}",
                opt(d.expected_degree)
            );
            let _ = writeln!(out, "fitted degree: {}", opt(d.fitted_degree));
            let _ = writeln!(out, "degree agrees: {}", d.degree_agrees());
        }
    }
    Ok(out)
}

fn faces_text(out: &mut String, poset: &FacePoset, dim: Option<i64>, mode: IsoMode) {
    let ids = export::class_ids(poset, mode);
    let _ = writeln!(
        out,
        "# dimension {}, f-vector {}",
        poset.dimension(),
        join(&poset.f_vector())
    );
    for (i, f) in poset.faces.iter().enumerate() {
        if dim.is_some_and(|d| d != f.dim) {
            continue;
        }
        let _ = write!(
            out,
            "f{i} dim {} class {}: {}",
            f.dim,
            ids[i],
            edge_names(&poset.host, &f.support)
        );
        if let Some(v) = poset.vertex_of(f) {
            let coords: Vec<String> = v.coordinates.iter().map(ToString::to_string).collect();
            let _ = write!(out, " at ({})", coords.join(","));
        }
        out.push('\n');
    }
}

/// Either a labeled edge list of `host` or bare labels in edge order.
fn read_labeling(host: &Host, path: &Path) -> Result<Labeling, CliError> {
    let text = read(path)?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    if matches!(first, Some("graph") | Some("digraph")) {
        let parsed = parse_edge_list(&text)?;
        let l = parsed.labeling.ok_or_else(|| {
            CliError::Input(format!("{}: edge list carries no labels", path.display()))
        })?;
        if parsed.host != *host {
            return Err(Error::Structural(format!(
                "{} is labeled on a different host",
                path.display()
            ))
            .into());
        }
        return Ok(l);
    }
    let rows = magiclat::graph::io::parse_integer_rows(&text)?;
    Ok(Labeling::new(host, rows.concat())?)
}

fn parse_parts(host: &Host, text: &str) -> Result<Vec<Vec<usize>>, CliError> {
    let mut used = vec![false; host.edge_count()];
    let mut parts = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut part = Vec::new();
        for token in line.split_whitespace() {
            let matches = |e: usize| {
                let name = host.edge_name(e);
                let (u, v) = host.edge(e);
                name == token
                    || (!host.is_directed()
                        && token == format!("{}-{}", host.vertices()[v], host.vertices()[u]))
            };
            let e = (0..host.edge_count())
                .find(|&e| !used[e] && matches(e))
                .or_else(|| (0..host.edge_count()).find(|&e| matches(e)))
                .ok_or_else(|| Error::MalformedInput(format!("unknown edge `{token}`")))?;
            used[e] = true;
            part.push(e);
        }
        parts.push(part);
    }
    Ok(parts)
}

fn factor_parts(l: &Labeling, text: &str, json: bool) -> Out {
    let parts = parse_parts(l.host(), text)?;
    let factors = factorize(l, &parts)?;
    if json {
        return Ok(pretty(&export::labelings_json(l.host(), &factors)));
    }
    let mut out = String::new();
    header(&mut out, l.host());
    for (k, f) in factors.iter().enumerate() {
        let _ = writeln!(out, "factor {k} {}", labeling_line(f));
    }
    Ok(out)
}

fn factor_search(l: &Labeling, sums: Option<&[u64]>, json: bool, limits: &Limits) -> Out {
    let all = factorizations_with(l, sums, limits)?;
    if json {
        let list: Vec<Value> = all
            .iter()
            .map(|fs| Value::Array(fs.iter().map(export::labeling_json).collect()))
            .collect();
        return Ok(pretty(&json!({
            "host": export::host_json(l.host()),
            "factorizations": list,
        })));
    }
    let mut out = String::new();
    header(&mut out, l.host());
    let _ = writeln!(out, "# {} factorizations", all.len());
    for (k, fs) in all.iter().enumerate() {
        let _ = writeln!(out, "factorization {k}:");
        for f in fs {
            let _ = writeln!(out, "  {}", labeling_line(f));
        }
    }
    Ok(out)
}

fn cayley(text: &str, json: bool) -> Out {
    let c = cayley_digraph(&parse_group_table(text)?)?;
    let sum = c.alpha.magic_sum();
    if json {
        return Ok(pretty(&json!({
            "digraph": export::host_json(&c.digraph),
            "alpha": c.alpha.values(),
            "magic": sum.is_some(),
            "sum": sum,
        })));
    }
    let mut out = write_edge_list(&c.digraph, Some(&c.alpha));
    match sum {
        Some(s) => {
            let _ = writeln!(out, "magic: true, sum: {s}");
        }
        None => out.push_str("magic: false\n"),
    }
    Ok(out)
}

fn edge_list_out(host: &Host, l: Option<&Labeling>, json: bool) -> String {
    if json {
        return pretty(&json!({
            "host": export::host_json(host),
            "labeling": l.map(export::labeling_json),
        }));
    }
    write_edge_list(host, l)
}

fn convert(c: &Convert, json: bool) -> Out {
    match c {
        Convert::Bipartite { file } => {
            let el = read_edge_list(file)?;
            let img = digraph_to_bipartite(&el.host)?;
            let l = el.labeling.as_ref().map(|l| img.forward(l)).transpose()?;
            Ok(edge_list_out(&img.graph, l.as_ref(), json))
        }
        Convert::Digraph { file } => {
            let el = read_edge_list(file)?;
            let img = bipartite_to_digraph(&el.host)?;
            let l = el.labeling.as_ref().map(|l| img.backward(l)).transpose()?;
            Ok(edge_list_out(&img.digraph, l.as_ref(), json))
        }
        Convert::ToMatrix { file } => {
            let el = read_edge_list(file)?;
            let l = el.labeling.ok_or_else(|| {
                CliError::Input(format!("{}: edge list carries no labels", file.display()))
            })?;
            let is_general =
                el.host.kind() == HostKind::Graph && el.host.edges().iter().any(|&(u, v)| u == v);
            let m = if is_general {
                labeling_to_symmetric(&l)?
            } else {
                labeling_to_semimagic(&l)?
            };
            if json {
                return Ok(pretty(&json!({
                    "n": m.order(),
                    "entries": m.entries(),
                    "semi_magic_sum": m.is_semi_magic(),
                    "symmetric": m.is_symmetric(),
                })));
            }
            Ok(m.to_string())
        }
        Convert::FromMatrix { file, target } => {
            let m = SquareMatrix::parse(&read(file)?)?;
            let l = match target {
                Target::Digraph => semimagic_to_labeling(&m, SemiMagicHost::Digraph)?,
                Target::Bipartite => semimagic_to_labeling(&m, SemiMagicHost::Bipartite)?,
                Target::General => symmetric_to_labeling(&m)?,
            };
            Ok(edge_list_out(l.host(), Some(&l), json))
        }
    }
}
