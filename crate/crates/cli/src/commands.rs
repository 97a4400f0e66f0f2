use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};

use hassett::complex::{
    aut_complex, build_delta, induced_automorphisms, one_skeleton_g0, skeleton_to_dot, ComplexJson,
};
use hassett::graphs::{enumerate_stable_graphs, graph_to_dot, GraphJson};
use hassett::verify::{self, CheckReport};
use hassett::weights::{
    admissible_transpositions, aut_kw, classify_heavy_light, kw_facets,
    kw_has_one_dimensional_facet, AdmissibleQuantifier, Rational, WeightVector,
};
use hassett::{Caps, Error, Result};
use serde_json::{json, Value};

use crate::{Cli, Command, Export, Format, Space, VerifyArgs};

/// Runs the command; `Ok(false)` means a requested check failed.
pub fn run(cli: &Cli, caps: &Caps) -> Result<bool> {
    let (text, ok) = match &cli.command {
        Command::Enumerate(space) => (enumerate(space, cli.format, caps)?, true),
        Command::Kw { weights, unrestricted } => (kw(weights, *unrestricted, cli.format, caps)?, true),
        Command::AutDelta(space) => (aut_delta(space, cli.format, caps)?, true),
        Command::Verify(args) => run_checks(args, cli.format, caps)?,
        Command::Export { space, what } => (export(space, *what, cli.format, caps)?, true),
        Command::Canon { input } => (canon(input, cli.format)?, true),
    };
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?,
        None => {
            let mut out = io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
        }
    }
    Ok(ok)
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn no_dot(what: &str) -> Result<String> {
    Err(Error::Input(format!("{what} has no DOT output; use --format text or json")))
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

fn enumerate(space: &Space, format: Format, caps: &Caps) -> Result<String> {
    let graphs = enumerate_stable_graphs(space.g, &space.weights, caps)?;
    Ok(match format {
        Format::Json => to_json(&graphs),
        Format::Dot => {
            let mut s = String::new();
            for (i, g) in graphs.all().enumerate() {
                s.push_str(&graph_to_dot(g, &format!("G{i}"), false));
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "g = {}, w = ({}): {} classes, by edge count {:?}\n",
                space.g,
                space.weights,
                graphs.len(),
                graphs.sizes()
            );
            for (k, level) in graphs.levels.iter().enumerate() {
                let _ = writeln!(s, "edges = {}", k + 1);
                for g in level {
                    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                    let _ = writeln!(
                        s,
                        "  {}  h = {:?}  edges = [{}]  markings = {:?}",
                        g.canonical_code(),
                        g.vertex_genera(),
                        edges.join(" "),
                        g.markings()
                    );
                }
            }
            s
        }
    })
}

fn kw(w: &WeightVector, unrestricted: bool, format: Format, caps: &Caps) -> Result<String> {
    let group = aut_kw(w);
    let order = group.order(caps.max_group_elements)?;
    let quantifier = if unrestricted {
        AdmissibleQuantifier::Unrestricted
    } else {
        AdmissibleQuantifier::DisjointFromPair
    };
    let facets: Vec<Vec<usize>> = kw_facets(w).iter().map(|f| one_based(f)).collect();
    let admissible: Vec<[usize; 2]> = admissible_transpositions(w, quantifier)
        .into_iter()
        .map(|(i, j)| [i + 1, j + 1])
        .collect();
    let orbits: Vec<Vec<usize>> = group.orbits().iter().map(|o| one_based(o)).collect();
    let hl = classify_heavy_light(w);
    let generators: Vec<String> = group.generators().iter().map(ToString::to_string).collect();
    let report = json!({
        "weights": w.to_string(),
        "facets": facets,
        "one_dimensional_facet": kw_has_one_dimensional_facet(w),
        "aut_order": order.to_string(),
        "generators": generators,
        "orbits": orbits,
        "admissible_transpositions": admissible,
        "heavy": one_based(&hl.heavy),
        "light": one_based(&hl.light),
        "heavy_light": hl.is_heavy_light,
    });
    Ok(match format {
        Format::Json => to_json(&report),
        Format::Dot => no_dot("kw")?,
        Format::Text => {
            let blocks: Vec<&Vec<usize>> = orbits.iter().filter(|o| o.len() > 1).collect();
            format!(
                "w = ({w})\nfacets: {facets:?}\nAut(K_w): order {order}, generators {}\norbit blocks: {blocks:?}\n\
                 admissible transpositions: {admissible:?}\nheavy {:?}, light {:?}, heavy/light: {}\n",
                generators.join(" "),
                one_based(&hl.heavy),
                one_based(&hl.light),
                hl.is_heavy_light,
            )
        }
    })
}

fn aut_delta(space: &Space, format: Format, caps: &Caps) -> Result<String> {
    let x = build_delta(space.g, &space.weights, caps)?;
    let group = aut_complex(&x, caps)?;
    let induced = induced_automorphisms(&x, &aut_kw(&space.weights), caps.max_group_elements)?;
    let mut images: Vec<_> = induced.iter().map(|(_, phi)| phi.clone()).collect();
    images.sort();
    images.dedup();
    let injective = images.len() == induced.len();
    let surjective = match &group.elements {
        Some(all) => all.iter().all(|phi| images.binary_search(phi).is_ok()),
        None => group.order == images.len().into(),
    };
    let generators: Vec<Vec<usize>> = group.generators.iter().map(|phi| phi.on_vertices().to_vec()).collect();
    let report = json!({
        "g": space.g,
        "weights": space.weights.to_string(),
        "sizes": x.sizes(),
        "order": group.order.to_string(),
        "generators_on_vertices": generators,
        "aut_kw_order": induced.len(),
        "induced_injective": injective,
        "induced_surjective": surjective,
        "induced_bijective": injective && surjective,
    });
    Ok(match format {
        Format::Json => to_json(&report),
        Format::Dot => no_dot("aut-delta")?,
        Format::Text => {
            let mut s = format!(
                "g = {}, w = ({}): simplex classes by dimension {:?}\n|Aut(Delta)| = {}\n|Aut(K_w)| = {}\n\
                 induced map: injective {injective}, surjective {surjective}, bijective {}\n",
                space.g,
                space.weights,
                x.sizes(),
                group.order,
                induced.len(),
                injective && surjective
            );
            s.push_str("generators on vertex classes:\n");
            for g in &generators {
                let _ = writeln!(s, "  {g:?}");
            }
            s
        }
    })
}

fn export(space: &Space, what: Export, format: Format, caps: &Caps) -> Result<String> {
    let format = if format == Format::Text { Format::Json } else { format };
    match (what, format) {
        (Export::Graphs, _) => enumerate(space, format, caps),
        (Export::Complex, Format::Json) => Ok(to_json(&ComplexJson::from(&build_delta(space.g, &space.weights, caps)?))),
        (Export::Complex, _) => no_dot("complex export"),
        (Export::Skeleton, _) => {
            let x = build_delta(space.g, &space.weights, caps)?;
            let skel = one_skeleton_g0(&x)?;
            Ok(match format {
                Format::Dot => skeleton_to_dot(&x, &skel),
                _ => to_json(&json!({"vertices": skel.vertices, "edges": skel.edges})),
            })
        }
    }
}

fn canon(path: &std::path::Path, format: Format) -> Result<String> {
    let mut text = String::new();
    let read = if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    let parsed = GraphJson::parse(&text)?;
    let (code, labelled) = match parsed.labels {
        Some(_) => (parsed.to_labelled()?.canonical_code(), true),
        None => (parsed.to_graph()?.canonical_code(), false),
    };
    Ok(match format {
        Format::Json => to_json(&json!({"code": code.to_string(), "labelled": labelled})),
        Format::Dot => graph_to_dot(&parsed.to_graph()?, "G", labelled),
        Format::Text => format!("{code}\n"),
    })
}

pub const CHECKS: [&str; 11] = [
    "main-theorem",
    "heavy-light",
    "disjoint-vertices",
    "wreath",
    "reconstruction",
    "expansion-formula",
    "realize-product",
    "filtration",
    "excluded-cases",
    "flag",
    "structure",
];

fn need<T: Clone>(v: &Option<T>, flag: &str, check: &str) -> Result<T> {
    v.clone().ok_or_else(|| Error::Input(format!("{check} needs --{flag}")))
}

fn eps_or_default(args: &VerifyArgs, m: usize) -> Result<Rational> {
    match args.eps {
        Some(e) => Ok(e),
        None => Rational::new(1, m.max(1) as i64),
    }
}

fn run_check(name: &str, a: &VerifyArgs, caps: &Caps) -> Result<CheckReport> {
    let g = || need(&a.g, "g", name);
    let w = || need(&a.weights, "weights", name);
    match name {
        "main-theorem" => verify::verify_main_theorem(g()?, &w()?, caps),
        "heavy-light" => {
            let m = need(&a.m, "m", name)?;
            verify::verify_heavy_light(m, need(&a.n, "n", name)?, eps_or_default(a, m)?, caps)
        }
        "disjoint-vertices" => verify::verify_disjoint_vertices(need(&a.k, "k", name)?, caps),
        "wreath" => verify::verify_wreath_example(caps),
        "reconstruction" => verify::verify_reconstruction(g()?, &w()?, caps),
        "expansion-formula" => {
            let m = need(&a.m, "m", name)?;
            verify::verify_expansion_formula(m, need(&a.n, "n", name)?, eps_or_default(a, m)?)
        }
        "realize-product" => {
            if a.blocks.is_empty() {
                return Err(Error::Input("realize-product needs --blocks".into()));
            }
            verify::verify_realize_product(&a.blocks, caps)
        }
        "filtration" => verify::verify_filtration_and_locals(g()?, &w()?, caps),
        "excluded-cases" => verify::verify_excluded_cases(caps),
        "flag" => verify::verify_flag(&w()?, caps),
        "structure" => verify::verify_structure(g()?, &w()?, caps),
        other => Err(Error::Input(format!("unknown check {other:?}; known: {}", CHECKS.join(", ")))),
    }
}

fn run_checks(args: &VerifyArgs, format: Format, caps: &Caps) -> Result<(String, bool)> {
    let names: Vec<&str> = args.name.iter().chain(&args.checks).map(String::as_str).collect();
    if names.is_empty() || names == ["list"] {
        return Ok((format!("{}\n", CHECKS.join("\n")), true));
    }
    let reports = names
        .iter()
        .map(|n| run_check(n, args, caps))
        .collect::<Result<Vec<_>>>()?;
    let ok = reports.iter().all(CheckReport::passed);
    let text = match format {
        Format::Json => to_json(&reports),
        Format::Dot => no_dot("verify")?,
        Format::Text => reports.iter().map(report_line).collect(),
    };
    Ok((text, ok))
}

fn report_line(r: &CheckReport) -> String {
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    let mut s = format!("{}: {verdict} {} ({} ms)\n", r.check, r.params, r.duration_ms);
    if let Some(Value::Object(summary)) = r.witnesses.get("summary") {
        for (k, v) in summary {
            let _ = writeln!(s, "  {k}: {v}");
        }
    }
    for f in r.failures() {
        let _ = writeln!(s, "  failure: {f}");
    }
    s
}
