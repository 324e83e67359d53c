use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::{self, BufWriter, Read, StdoutLock, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use duplex_twist::io::{tiling_from_json, tiling_to_json, SockFile};
use duplex_twist::render::{sock_ascii, sock_svg, tiling_ascii, tiling_svg, Annotation};
use duplex_twist::tiling::FlipGraph;
use duplex_twist::verify::{run_suites, RunReport, Suite, TwistEvidence};
use duplex_twist::{
    build_duplex, count_tilings, enumerate_tilings, enumerate_tilings_parallel, parse_base,
    project_sock, Direction, DuplexRegion, Tiling,
};

pub enum Outcome {
    Success,
    Violation,
}

pub enum TilingSource {
    File(PathBuf),
    Index(usize),
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_region(path: &Path) -> Result<DuplexRegion> {
    let text = read_text(path)?;
    let base = parse_base(&text).with_context(|| format!("invalid base {}", path.display()))?;
    Ok(build_duplex(base))
}

/// Tilings from a JSON-lines file, each checked against `region` when given.
fn load_tilings(path: &Path, region: Option<&DuplexRegion>) -> Result<(DuplexRegion, Vec<Tiling>)> {
    let text = read_text(path)?;
    let mut found: Option<DuplexRegion> = region.cloned();
    let mut tilings = Vec::new();
    for (n, line) in text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
    {
        let (r, t) =
            tiling_from_json(line).with_context(|| format!("{} line {}", path.display(), n + 1))?;
        match &found {
            Some(expected) if expected.base() != r.base() => {
                bail!(
                    "{} line {}: tiling base does not match the region",
                    path.display(),
                    n + 1
                )
            }
            Some(_) => {}
            None => found = Some(r),
        }
        tilings.push(t);
    }
    let region = found.ok_or_else(|| anyhow!("{} contains no tilings", path.display()))?;
    if tilings.is_empty() {
        bail!("{} contains no tilings", path.display());
    }
    Ok((region, tilings))
}

fn all_tilings(region: &DuplexRegion, jobs: usize) -> Vec<Tiling> {
    if jobs > 1 {
        enumerate_tilings_parallel(region, jobs)
    } else {
        enumerate_tilings(region).collect()
    }
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            fs::File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn stdout() -> StdoutLock<'static> {
    io::stdout().lock()
}

fn histogram_text(h: &BTreeMap<i64, u64>) -> String {
    let entries: Vec<String> = h.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    format!("{{{}}}", entries.join(", "))
}

pub fn validate(path: &Path) -> Result<Outcome> {
    let text = read_text(path)?;
    let base = parse_base(&text).map_err(|e| anyhow!("invalid: {e}"))?;
    let (w, h) = base.dimensions();
    writeln!(stdout(), "valid, {} cells, {w}x{h}", base.len())?;
    Ok(Outcome::Success)
}

pub fn enumerate(
    path: &Path,
    count_only: bool,
    out: Option<&Path>,
    jobs: usize,
) -> Result<Outcome> {
    let region = load_region(path)?;
    if count_only {
        let n = if jobs > 1 {
            enumerate_tilings_parallel(&region, jobs).len() as u64
        } else {
            count_tilings(&region)
        };
        writeln!(stdout(), "{n}")?;
        return Ok(Outcome::Success);
    }
    let mut w = output(out)?;
    let mut n = 0u64;
    let mut emit = |t: &Tiling| -> Result<()> {
        writeln!(w, "{}", tiling_to_json(&region, t))?;
        n += 1;
        Ok(())
    };
    if jobs > 1 {
        enumerate_tilings_parallel(&region, jobs)
            .iter()
            .try_for_each(&mut emit)?;
    } else {
        enumerate_tilings(&region).try_for_each(|t| emit(&t))?;
    }
    w.flush()?;
    if let Some(p) = out {
        eprintln!("wrote {n} tilings to {}", p.display());
    }
    Ok(Outcome::Success)
}

fn evidence_line(index: usize, ev: &TwistEvidence) -> String {
    let tw = ev
        .twist()
        .map_or_else(|| "mismatch".to_string(), |t| t.to_string());
    let [ti, tj, tk] = Direction::POSITIVE.map(|u| ev.pretwist(u));
    format!("{index}, {tw}, {ti}, {tj}, {tk}, {}", ev.p_prime)
}

pub fn twist(
    path: &Path,
    tiling: Option<&Path>,
    per_tiling: bool,
    json: bool,
    jobs: usize,
) -> Result<Outcome> {
    let region = load_region(path)?;
    let (region, tilings) = match tiling {
        Some(t) => load_tilings(t, Some(&region))?,
        None => {
            let all = all_tilings(&region, jobs);
            (region, all)
        }
    };
    if tiling.is_some() || per_tiling {
        let mut mismatched = false;
        let mut w = output(None)?;
        writeln!(w, "# index, Tw, T^i, T^j, T^k, P'(1)")?;
        for (i, t) in tilings.iter().enumerate() {
            let ev = TwistEvidence::of(t, &project_sock(t));
            mismatched |= ev.twist().is_none();
            writeln!(w, "{}", evidence_line(i, &ev))?;
        }
        w.flush()?;
        return Ok(if mismatched {
            eprintln!("PretwistMismatch: the four twist formulas disagree");
            Outcome::Violation
        } else {
            Outcome::Success
        });
    }
    let report = run_suites(&region, &tilings, &[Suite::TwistIdentity], jobs);
    if json {
        writeln!(stdout(), "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        writeln!(stdout(), "tilings {}", report.tiling_count)?;
        writeln!(
            stdout(),
            "histogram {}",
            histogram_text(&report.twist_histogram)
        )?;
    }
    Ok(finish(&report, json))
}

fn finish(report: &RunReport, quiet: bool) -> Outcome {
    if report.passed() {
        return Outcome::Success;
    }
    if !quiet {
        for f in &report.failures {
            eprintln!(
                "violation: tiling #{} [{}] {}",
                f.tiling_index, f.suite, f.message
            );
        }
    }
    Outcome::Violation
}

pub fn verify(
    path: &Path,
    suites: &[Suite],
    tiling: Option<&Path>,
    json: bool,
    jobs: usize,
) -> Result<Outcome> {
    let region = load_region(path)?;
    let (region, tilings) = match tiling {
        Some(t) => load_tilings(t, Some(&region))?,
        None => {
            let all = all_tilings(&region, jobs);
            (region, all)
        }
    };
    let report = run_suites(&region, &tilings, suites, jobs);
    if json {
        writeln!(stdout(), "{}", serde_json::to_string_pretty(&report)?)?;
        return Ok(finish(&report, true));
    }
    let r = &report.region;
    writeln!(
        stdout(),
        "region {}x{}, {} cells, {} cubes",
        r.width,
        r.height,
        r.cells,
        r.cubes
    )?;
    writeln!(stdout(), "tilings {}", report.tiling_count)?;
    for (suite, counts) in &report.suites {
        writeln!(
            stdout(),
            "{:<18} pass {} fail {}",
            suite.name(),
            counts.pass,
            counts.fail
        )?;
    }
    writeln!(
        stdout(),
        "histogram {}",
        histogram_text(&report.twist_histogram)
    )?;
    let outcome = finish(&report, false);
    if let Some(first) = report.failures.first() {
        let hint = match tiling {
            Some(t) => format!("line {} of {}", first.tiling_index + 1, t.display()),
            None => format!("render {} --index {}", path.display(), first.tiling_index),
        };
        writeln!(
            stdout(),
            "FAIL ({} ms); reproduce with {hint}",
            report.elapsed_ms
        )?;
    } else {
        writeln!(stdout(), "PASS ({} ms)", report.elapsed_ms)?;
    }
    Ok(outcome)
}

pub fn render(
    base: Option<&Path>,
    source: TilingSource,
    svg: bool,
    sock_view: bool,
    annotation: Annotation,
    out: Option<&Path>,
) -> Result<Outcome> {
    let region = base.map(load_region).transpose()?;
    let (region, tiling) = match source {
        TilingSource::File(p) => {
            let (r, mut ts) = load_tilings(&p, region.as_ref())?;
            if ts.len() != 1 {
                bail!(
                    "{} holds {} tilings; render takes one",
                    p.display(),
                    ts.len()
                );
            }
            (r, ts.remove(0))
        }
        TilingSource::Index(i) => {
            let r = region.ok_or_else(|| anyhow!("--index needs a base file"))?;
            let t = enumerate_tilings(&r)
                .nth(i)
                .ok_or_else(|| anyhow!("the region has no tiling with index {i}"))?;
            (r, t)
        }
    };
    let doc = match (svg, sock_view) {
        (true, false) => tiling_svg(&region, &tiling),
        (true, true) => sock_svg(&region, &project_sock(&tiling), annotation),
        (false, false) => tiling_ascii(&region, &tiling),
        (false, true) => sock_ascii(&region, &project_sock(&tiling)),
    };
    let mut w = output(out)?;
    w.write_all(doc.as_bytes())?;
    w.flush()?;
    Ok(Outcome::Success)
}

pub fn sock(base: &Path, tiling: &Path) -> Result<Outcome> {
    let region = load_region(base)?;
    let (_, tilings) = load_tilings(tiling, Some(&region))?;
    for t in &tilings {
        writeln!(stdout(), "{}", SockFile::new(&project_sock(t)).to_json())?;
    }
    Ok(Outcome::Success)
}

pub fn components(path: &Path, jobs: usize) -> Result<Outcome> {
    let region = load_region(path)?;
    let graph = FlipGraph::from_tilings(all_tilings(&region, jobs));
    let components = graph.components();
    writeln!(
        stdout(),
        "tilings {}, flips {}, components {}",
        graph.tilings.len(),
        graph.edges.len(),
        components.len()
    )?;
    let mut split = false;
    for (k, members) in components.iter().enumerate() {
        let mut twists = BTreeSet::new();
        let mut socks = BTreeSet::new();
        for &i in members {
            let t = &graph.tilings[i];
            let sock = project_sock(t);
            twists.insert(TwistEvidence::of(t, &sock).twist());
            socks.insert(SockFile::new(&sock).to_json());
        }
        split |= twists.len() != 1 || twists.contains(&None);
        let shown: Vec<String> = twists
            .iter()
            .map(|t| t.map_or_else(|| "mismatch".to_string(), |v| v.to_string()))
            .collect();
        writeln!(
            stdout(),
            "component {k}: {} tilings, {} socks, first #{}, Tw {}",
            members.len(),
            socks.len(),
            members[0],
            shown.join("/")
        )?;
    }
    Ok(if split {
        eprintln!("violation: a flip component carries more than one twist value");
        Outcome::Violation
    } else {
        Outcome::Success
    })
}
