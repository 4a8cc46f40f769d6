//! Subcommand implementations. Each returns the text to print on success.

use std::fmt::Write;
use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use zmono_core::export::{export_dot, export_svg, ExportError};
use zmono_core::map::{trace_zigzags, EdgeId, FaceId, FlagMap, VertexId};
use zmono_core::monodromy::{
    check_conditions, classify_candidates, count_candidates, enumerate_candidates, z_monodromy,
    FaceFrame, MonodromyCandidate, SignedPerm, Symmetry,
};
use zmono_core::planar::assemble_quad_map;
use zmono_core::surface::{realize_on_surface, realize_with_base_map, SurfaceSpec};

use crate::error::{CliError, INVALID_CANDIDATE, VERIFICATION_MISMATCH};
use crate::{Cli, Command, Format};

/// Name of the mark the realizations put on the framed face.
const FACE_MARK: &str = "face_F";

pub fn run(cli: &Cli) -> Result<String, CliError> {
    let ctx = Context {
        json: cli.json,
        quiet: cli.quiet,
    };
    match &cli.command {
        Command::Validate { k, sigma } => validate(&ctx, *k, sigma),
        Command::Enumerate { k, classes } => enumerate(&ctx, *k, classes.as_deref()),
        Command::Realize {
            k,
            sigma,
            surface,
            seed,
            out,
            trace,
            base_map,
        } => realize(
            &ctx,
            *k,
            sigma,
            surface,
            *seed,
            out,
            trace.as_deref(),
            base_map.as_deref(),
        ),
        Command::Zigzags { map } => zigzags(&ctx, map),
        Command::Monodromy {
            map,
            face,
            base,
            tail,
        } => monodromy(&ctx, map, face, base.as_deref(), tail.as_deref()),
        Command::Verify {
            map,
            face,
            sigma,
            base,
            tail,
            surface,
        } => verify(
            &ctx,
            map,
            face,
            sigma,
            base.as_deref(),
            tail.as_deref(),
            surface.as_deref(),
        ),
        Command::Export {
            map,
            format,
            out,
            k,
            sigma,
            seed,
        } => export(&ctx, map.as_deref(), *format, out, *k, sigma.as_deref(), *seed),
    }
}

struct Context {
    json: bool,
    quiet: bool,
}

impl Context {
    fn log(&self, command: &str, seed: Option<u64>, message: &str) {
        if self.quiet {
            return;
        }
        match seed {
            Some(s) => eprintln!("[{command} seed={s}] {message}"),
            None => eprintln!("[{command}] {message}"),
        }
    }

    fn render(&self, value: Value, text: String) -> String {
        if self.json {
            format!("{value}\n")
        } else {
            text
        }
    }
}

fn read_map(path: &Path) -> Result<FlagMap, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    FlagMap::from_json(&text).map_err(|source| CliError::MapFile {
        path: path.display().to_string(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Parses `3`, or the same number with the given prefix (`f3`).
fn parse_id(text: &str, prefix: char) -> Option<usize> {
    let t = text.trim();
    t.strip_prefix(prefix).unwrap_or(t).parse().ok()
}

/// Resolves `--face`, `--base` and `--tail` to a frame.
fn resolve_frame(
    m: &FlagMap,
    face: &str,
    base: Option<&str>,
    tail: Option<&str>,
) -> Result<FaceFrame, CliError> {
    let mark = match face {
        "F" => Some(FACE_MARK),
        other if parse_id(other, 'f').is_none() => Some(other),
        _ => None,
    };
    let face_id = match mark {
        Some(name) => {
            let x = m
                .mark(name)
                .ok_or_else(|| CliError::Input(format!("map has no mark named `{name}`")))?;
            if base.is_none() {
                return Ok(FaceFrame::from_flag(m, x)?);
            }
            m.cells().face_of(x)
        }
        None => {
            let f = parse_id(face, 'f').expect("checked above");
            if f >= m.face_count() {
                return Err(CliError::Input(format!("no face f{f}; the map has {}", m.face_count())));
            }
            FaceId(f)
        }
    };
    let Some(base) = base else {
        return Ok(FaceFrame::default_for(m, face_id)?);
    };
    let e = parse_id(base, 'e')
        .filter(|&e| e < m.edge_count())
        .ok_or_else(|| CliError::Input(format!("invalid base edge `{base}`")))?;
    let c = m.cells();
    let x = match tail {
        Some(t) => {
            let v = parse_id(t, 'v')
                .filter(|&v| v < m.vertex_count())
                .ok_or_else(|| CliError::Input(format!("invalid tail vertex `{t}`")))?;
            m.flag_at(VertexId(v), EdgeId(e), face_id)
        }
        None => c
            .edge_flags(EdgeId(e))
            .iter()
            .copied()
            .find(|&x| c.face_of(x) == face_id),
    }
    .ok_or_else(|| CliError::Input(format!("edge e{e} is not on face {face_id} as given")))?;
    Ok(FaceFrame::from_flag(m, x)?)
}

fn validate(ctx: &Context, k: usize, sigma: &str) -> Result<String, CliError> {
    let result = SignedPerm::parse(sigma, k)
        .map_err(Into::into)
        .and_then(MonodromyCandidate::new);
    match result {
        Ok(c) => Ok(ctx.render(
            json!({ "ok": true, "valid": true, "k": k, "sigma": c.to_string() }),
            format!("valid\nk = {k}, sigma = {c}\n"),
        )),
        Err(e) => Err(CliError::Reported {
            code: INVALID_CANDIDATE,
            report: ctx.render(
                json!({ "ok": false, "valid": false, "k": k, "error": e.to_string() }),
                format!("invalid\n{e}\n"),
            ),
        }),
    }
}

fn enumerate(ctx: &Context, k: usize, classes: Option<&str>) -> Result<String, CliError> {
    let Some(sym) = classes else {
        let all: Vec<MonodromyCandidate> = enumerate_candidates(k)?.collect();
        let names: Vec<String> = all.iter().map(ToString::to_string).collect();
        let mut text = format!("{} candidates for k = {k}\n", all.len());
        for n in &names {
            let _ = writeln!(text, "{n}");
        }
        return Ok(ctx.render(
            json!({ "ok": true, "k": k, "count": all.len(), "formula": count_candidates(k).to_string(), "candidates": names }),
            text,
        ));
    };
    let symmetry = Symmetry::parse(sym)
        .ok_or_else(|| CliError::Input(format!("unknown symmetry `{sym}`")))?;
    let found = classify_candidates(k, symmetry)?;
    let mut text = format!("{} classes for k = {k} under {symmetry}\n", found.len());
    let mut list = Vec::new();
    for c in &found {
        let n = c.members.len();
        let _ = writeln!(text, "{} ({n} member{})", c.representative, if n == 1 { "" } else { "s" });
        list.push(json!({
            "representative": c.representative.to_string(),
            "size": c.members.len(),
            "members": c.members.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }));
    }
    Ok(ctx.render(
        json!({ "ok": true, "k": k, "symmetry": symmetry.to_string(), "class_count": found.len(), "classes": list }),
        text,
    ))
}

fn parse_surface(text: &str) -> Result<SurfaceSpec, CliError> {
    text.parse().map_err(|e: zmono_core::surface::SurfaceError| CliError::Input(e.to_string()))
}

#[allow(clippy::too_many_arguments)]
fn realize(
    ctx: &Context,
    k: usize,
    sigma: &str,
    surface: &str,
    seed: u64,
    out: &Path,
    trace: Option<&Path>,
    base_map: Option<&Path>,
) -> Result<String, CliError> {
    let candidate = MonodromyCandidate::parse(sigma, k)?;
    let r = match base_map {
        Some(path) => {
            let base = read_map(path)?;
            ctx.log(
                "realize",
                Some(seed),
                &format!("sigma = {candidate}, base map {}", path.display()),
            );
            realize_with_base_map(&candidate, &base, seed)?
        }
        None => {
            let spec = parse_surface(surface)?;
            ctx.log("realize", Some(seed), &format!("sigma = {candidate}, surface = {spec}"));
            realize_on_surface(&candidate, spec, seed)?
        }
    };
    let spec = r.spec;
    ctx.log(
        "realize",
        Some(seed),
        &format!("{} repair steps on the plane map", r.planar.trace.len()),
    );
    write_file(out, &r.map.to_json())?;
    if let Some(path) = trace {
        let lines: String = r
            .planar
            .trace
            .iter()
            .map(|t| serde_json::to_string(t).expect("trace records serialize") + "\n")
            .collect();
        write_file(path, &lines)?;
    }
    let m = &r.map;
    let found = z_monodromy(m, &r.frame)?;
    let face = r.frame.face();
    Ok(ctx.render(
        json!({
            "ok": true,
            "k": k,
            "sigma": candidate.to_string(),
            "surface": spec.to_string(),
            "seed": seed,
            "out": out.display().to_string(),
            "V": m.vertex_count(),
            "E": m.edge_count(),
            "F": m.face_count(),
            "euler_characteristic": m.euler_characteristic(),
            "orientable": m.is_orientable(),
            "face": face.to_string(),
            "monodromy": found.to_string(),
            "repair_steps": r.planar.trace.len(),
        }),
        format!(
            "realized on {spec}: V={} E={} F={} (chi = {}), face {face} has z-monodromy {found}\nwritten to {}\n",
            m.vertex_count(),
            m.edge_count(),
            m.face_count(),
            m.euler_characteristic(),
            out.display()
        ),
    ))
}

fn zigzags(ctx: &Context, path: &Path) -> Result<String, CliError> {
    let m = read_map(path)?;
    let pairs = trace_zigzags(&m)
        .map_err(|report| CliError::Input(format!("zigzags need (SS): {report}")))?;
    let mut text = format!("{} zigzags (up to reversal)\n", pairs.len());
    let mut list = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        let oriented = p.forward.oriented_edges(&m);
        let edges: Vec<String> = oriented.iter().map(|o| o.edge.to_string()).collect();
        let vertices: Vec<String> = oriented.iter().map(|o| o.tail.to_string()).collect();
        let _ = writeln!(
            text,
            "z{} length {}: edges {} | vertices {}",
            i + 1,
            p.forward.len(),
            edges.join(" "),
            vertices.join(" ")
        );
        list.push(json!({ "length": p.forward.len(), "edges": edges, "vertices": vertices }));
    }
    Ok(ctx.render(json!({ "ok": true, "count": pairs.len(), "zigzags": list }), text))
}

fn monodromy(
    ctx: &Context,
    path: &Path,
    face: &str,
    base: Option<&str>,
    tail: Option<&str>,
) -> Result<String, CliError> {
    let m = read_map(path)?;
    let frame = resolve_frame(&m, face, base, tail)?;
    let found = z_monodromy(&m, &frame)?;
    let admissible = check_conditions(&found).is_ok();
    let base_edge = frame.oriented_edge(&m, 1);
    Ok(ctx.render(
        json!({
            "ok": true,
            "face": frame.face().to_string(),
            "k": frame.k(),
            "base": { "edge": base_edge.edge.to_string(), "tail": base_edge.tail.to_string() },
            "monodromy": found.to_string(),
            "admissible": admissible,
        }),
        format!(
            "face {} (k = {}), base {} from {}: {found}\n",
            frame.face(),
            frame.k(),
            base_edge.edge,
            base_edge.tail
        ),
    ))
}

fn verify(
    ctx: &Context,
    path: &Path,
    face: &str,
    sigma: &str,
    base: Option<&str>,
    tail: Option<&str>,
    surface: Option<&str>,
) -> Result<String, CliError> {
    let m = read_map(path)?;
    let frame = resolve_frame(&m, face, base, tail)?;
    let candidate = MonodromyCandidate::parse(sigma, frame.k())?;
    let spec = surface.map(parse_surface).transpose()?;
    let mut problems = Vec::new();
    let report = m.ss_report();
    if !report.holds() {
        problems.push(format!("map is not (SS): {report}"));
    }
    let found = if report.holds() {
        let p = z_monodromy(&m, &frame)?;
        if &p != candidate.perm() {
            problems.push(format!("z-monodromy is {p}, expected {candidate}"));
        }
        Some(p.to_string())
    } else {
        None
    };
    if let Some(spec) = spec {
        if m.euler_characteristic() != spec.euler_characteristic() {
            problems.push(format!(
                "Euler characteristic {} does not match {spec}",
                m.euler_characteristic()
            ));
        }
        if m.is_orientable() != spec.is_orientable() {
            problems.push(format!("orientability does not match {spec}"));
        }
    }
    let value = json!({
        "ok": problems.is_empty(),
        "face": frame.face().to_string(),
        "sigma": candidate.to_string(),
        "monodromy": found,
        "problems": problems,
    });
    if problems.is_empty() {
        Ok(ctx.render(value, format!("verified: face {} realizes {candidate}\n", frame.face())))
    } else {
        let mut text = String::from("mismatch\n");
        for p in &problems {
            let _ = writeln!(text, "{p}");
        }
        Err(CliError::Reported {
            code: VERIFICATION_MISMATCH,
            report: ctx.render(value, text),
        })
    }
}

fn export(
    ctx: &Context,
    map: Option<&Path>,
    format: Format,
    out: &Path,
    k: Option<usize>,
    sigma: Option<&str>,
    seed: u64,
) -> Result<String, CliError> {
    let doc = match (format, map, sigma) {
        (Format::Dot, Some(path), _) => export_dot(&read_map(path)?),
        (Format::Dot, None, _) => return Err(CliError::Input("DOT export needs --map".into())),
        (Format::Svg, _, Some(s)) => {
            let k = k.expect("clap requires --k with --sigma");
            let candidate = MonodromyCandidate::parse(s, k)?;
            ctx.log("export", Some(seed), &format!("drawing the construction for {candidate}"));
            let quad = assemble_quad_map(&candidate, seed)
                .map_err(|e| CliError::Construction(e.to_string()))?;
            export_svg(&quad)
        }
        (Format::Svg, _, None) => return Err(CliError::Input(ExportError::NoGeometry.to_string())),
    };
    write_file(out, &doc)?;
    let format_name = match format {
        Format::Dot => "dot",
        Format::Svg => "svg",
    };
    Ok(ctx.render(
        json!({ "ok": true, "format": format_name, "out": out.display().to_string() }),
        format!("{format_name} written to {}\n", out.display()),
    ))
}
