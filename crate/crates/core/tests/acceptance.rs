//! Acceptance criteria, each checked exhaustively over the corpus regions.
//! Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

mod common;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{
    corpus, fixed_polyominoes, matching_count_oracle, region, to_ascii, turning_winding_oracle,
    QuarterPoint,
};
use duplex_twist::render::{sock_svg, Annotation};
use duplex_twist::tiling::FlipGraph;
use duplex_twist::verify::{jewel_effects, TwistEvidence};
use duplex_twist::{
    count_tilings, enumerate_tilings, p_derivative_at_one, p_polynomial, parse_base, pretwist,
    project_sock, verify_cycle_lemmas, vertex_color, winding_number, Cell, Cube, Cycle, Direction,
    Domino, DuplexRegion, HalfPoint, Quarter, Sock, Tiling,
};

const SINGLE_THREAD_BUDGET: Duration = Duration::from_secs(120);

struct Entry {
    name: &'static str,
    region: DuplexRegion,
    tilings: Vec<Tiling>,
    socks: Vec<Sock>,
    evidence: Vec<TwistEvidence>,
}

fn load() -> Vec<Entry> {
    corpus()
        .into_iter()
        .map(|(name, region)| {
            let tilings: Vec<Tiling> = enumerate_tilings(&region).collect();
            let socks: Vec<Sock> = tilings.iter().map(project_sock).collect();
            let evidence = tilings
                .iter()
                .zip(&socks)
                .map(|(t, s)| TwistEvidence::of(t, s))
                .collect();
            Entry {
                name,
                region,
                tilings,
                socks,
                evidence,
            }
        })
        .collect()
}

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

/// P'(1) = T^i = T^j = T^k on every corpus tiling, timed single-threaded.
fn twist_identity() -> Outcome {
    let started = Instant::now();
    let mut checked = 0usize;
    let mut sizes = Vec::new();
    for (name, r) in corpus() {
        let mut n = 0;
        for t in enumerate_tilings(&r) {
            let p = p_derivative_at_one(&p_polynomial(&project_sock(&t)));
            for u in Direction::POSITIVE {
                let tu = pretwist(&t, u);
                if tu != Quarter::from_int(p) {
                    return Err(format!("{name} tiling {n}: P'(1) = {p}, T^{u} = {tu}"));
                }
            }
            n += 1;
        }
        checked += n;
        sizes.push(format!("{name}:{n}"));
    }
    let elapsed = started.elapsed();
    if elapsed > SINGLE_THREAD_BUDGET {
        return Err(format!("took {elapsed:?}, budget {SINGLE_THREAD_BUDGET:?}"));
    }
    Ok(format!(
        "{checked} tilings ({}) in {:.1?}",
        sizes.join(" "),
        elapsed
    ))
}

fn cycle_lemmas(corpus: &[Entry]) -> Outcome {
    let mut seen: HashSet<&Cycle> = HashSet::new();
    let mut cycles = 0usize;
    for e in corpus {
        for (i, s) in e.socks.iter().enumerate() {
            for c in s.cycles() {
                cycles += 1;
                let sum: i64 = c.vertices().iter().map(|&v| vertex_color(v) as i64).sum();
                if sum != 0 {
                    return Err(format!("{} tiling {i}: Σ ccol on cycle = {sum}", e.name));
                }
                if seen.insert(c) {
                    verify_cycle_lemmas(c)
                        .map_err(|err| format!("{} tiling {i}: {err}", e.name))?;
                }
            }
        }
    }
    Ok(format!(
        "{cycles} cycles ({} distinct) pass all per-cycle identities",
        seen.len()
    ))
}

fn jewel_identity(corpus: &[Entry]) -> Outcome {
    let mut checks = 0usize;
    for e in corpus {
        for (i, s) in e.socks.iter().enumerate() {
            for c in s.cycles() {
                for &v in s.jewels() {
                    let lhs = vertex_color(v) as i64
                        * winding_number(c, v).map_err(|err| err.to_string())?;
                    for u in [Direction::PosI, Direction::PosJ] {
                        let (into, from) = jewel_effects(c, v, u);
                        if into * 2 != Quarter::from_int(lhs) || from * 2 != Quarter::from_int(lhs)
                        {
                            return Err(format!(
                                "{} tiling {i}, jewel {v:?}, u = {u}: {lhs} vs {} / {}",
                                e.name,
                                into * 2,
                                from * 2
                            ));
                        }
                        checks += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checks} (cycle, jewel, direction) triples"))
}

struct Graphs {
    components: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

fn graphs(corpus: &[Entry]) -> Vec<Graphs> {
    corpus
        .iter()
        .map(|e| {
            let g = FlipGraph::from_tilings(e.tilings.clone());
            Graphs {
                components: g.components(),
                edges: g.edges.iter().map(|&(i, j, _)| (i, j)).collect(),
            }
        })
        .collect()
}

fn flip_invariance(corpus: &[Entry], graphs: &[Graphs]) -> Outcome {
    let mut edges = 0usize;
    let mut poly_changes = 0usize;
    let mut report = Vec::new();
    for (e, g) in corpus.iter().zip(graphs) {
        let mut changed_here = 0;
        for &(i, j) in &g.edges {
            let (a, b) = (&e.evidence[i], &e.evidence[j]);
            match (a.twist(), b.twist()) {
                (Some(x), Some(y)) if x == y => {}
                (x, y) => {
                    return Err(format!(
                        "{}: flip {i} -> {j} changes Tw {x:?} -> {y:?}",
                        e.name
                    ))
                }
            }
            if a.polynomial != b.polynomial {
                changed_here += 1;
            }
            edges += 1;
        }
        poly_changes += changed_here;
        report.push(format!("{}:{}/{}", e.name, changed_here, g.edges.len()));
    }
    Ok(format!(
        "Tw constant across {edges} flip edges; P_t(q) changes across {poly_changes} of them [{}]",
        report.join(" ")
    ))
}

fn shared_sock_tilings() -> (DuplexRegion, Tiling, Tiling) {
    let r = region("##\n##\n##\n##");
    let dom = |a: (i32, i32, i32), b: (i32, i32, i32)| {
        Domino::new(Cube::new(a.0, a.1, a.2), Cube::new(b.0, b.1, b.2)).unwrap()
    };
    let square = [
        dom((0, 0, 0), (1, 0, 0)),
        dom((0, 1, 0), (1, 1, 0)),
        dom((0, 0, 1), (0, 1, 1)),
        dom((1, 0, 1), (1, 1, 1)),
    ];
    let trivial = [
        dom((0, 2, 0), (1, 2, 0)),
        dom((0, 2, 1), (1, 2, 1)),
        dom((0, 3, 0), (1, 3, 0)),
        dom((0, 3, 1), (1, 3, 1)),
    ];
    let jewels = [
        dom((0, 2, 0), (0, 2, 1)),
        dom((1, 2, 0), (1, 2, 1)),
        dom((0, 3, 0), (0, 3, 1)),
        dom((1, 3, 0), (1, 3, 1)),
    ];
    let with_trivial = Tiling::new(square.into_iter().chain(trivial));
    let with_jewels = Tiling::new(square.into_iter().chain(jewels));
    (r, with_trivial, with_jewels)
}

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/trivial_cycles_sock.svg")
}

fn sock_coherence(corpus: &[Entry], graphs: &[Graphs]) -> Outcome {
    let mut summary = Vec::new();
    for (e, g) in corpus.iter().zip(graphs) {
        let mut component = vec![0; e.tilings.len()];
        for (c, members) in g.components.iter().enumerate() {
            for &i in members {
                component[i] = c;
            }
        }
        let mut by_sock: HashMap<&Sock, usize> = HashMap::new();
        for (i, s) in e.socks.iter().enumerate() {
            match by_sock.get(s) {
                Some(&first) if component[first] != component[i] => {
                    return Err(format!(
                        "{}: tilings {first} and {i} share a sock but lie in different flip components",
                        e.name
                    ));
                }
                Some(_) => {}
                None => {
                    by_sock.insert(s, i);
                }
            }
        }
        summary.push(format!(
            "{}:{}socks/{}comps",
            e.name,
            by_sock.len(),
            g.components.len()
        ));
    }

    let (r, with_trivial, with_jewels) = shared_sock_tilings();
    let (a, b) = (project_sock(&with_trivial), project_sock(&with_jewels));
    if a != b {
        return Err("trivial cycles and their jewels project to different socks".into());
    }
    if a.jewels().len() != 4 || a.cycles().len() != 1 {
        return Err(format!("unexpected shared sock {a:?}"));
    }
    let svg = sock_svg(&r, &a, Annotation::None);
    if svg != sock_svg(&r, &b, Annotation::None) {
        return Err("shared sock renders differ".into());
    }
    let path = golden_path();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &svg).map_err(|err| err.to_string())?;
    }
    let golden = std::fs::read_to_string(&path)
        .map_err(|err| format!("reading {}: {err}", path.display()))?;
    if golden != svg {
        return Err(format!(
            "{} does not match the rendered sock",
            path.display()
        ));
    }
    Ok(format!(
        "equal socks share a component [{}]; shared sock matches golden SVG",
        summary.join(" ")
    ))
}

fn enumeration_oracle() -> Outcome {
    let expected_counts = [1usize, 2, 6, 19, 63, 216, 760, 2725];
    let mut bases = 0usize;
    for (k, &expected) in expected_counts.iter().enumerate() {
        let shapes = fixed_polyominoes(k + 1);
        if shapes.len() != expected {
            return Err(format!(
                "polyomino generator produced {} shapes of size {}",
                shapes.len(),
                k + 1
            ));
        }
        for cells in shapes {
            // shapes with holes are not valid bases
            let Ok(base) = parse_base(&to_ascii(&cells)) else {
                continue;
            };
            let r = duplex_twist::build_duplex(base);
            let cubes: Vec<Cube> = r.cubes().iter().copied().collect();
            let oracle = matching_count_oracle(&cubes);
            let counted = count_tilings(&r) as i128;
            if counted != oracle {
                return Err(format!("{cells:?}: enumerated {counted}, oracle {oracle}"));
            }
            bases += 1;
        }
    }
    for (text, expected) in [("#", 1), ("##", 2), ("##\n##", 9)] {
        let r = region(text);
        let counted = count_tilings(&r);
        let cubes: Vec<Cube> = r.cubes().iter().copied().collect();
        if counted != expected || matching_count_oracle(&cubes) != expected as i128 {
            return Err(format!("{text:?}: {counted} tilings, expected {expected}"));
        }
    }
    Ok(format!(
        "{bases} simply connected bases with <= 8 cells match the permanent oracle; 1x1=1 2x1=2 2x2=9"
    ))
}

fn calibration(corpus: &[Entry]) -> Outcome {
    let find = |name: &str| corpus.iter().find(|e| e.name == name).expect("in corpus");
    let square = find("2x2");
    let mut hist: BTreeMap<i64, usize> = BTreeMap::new();
    for ev in &square.evidence {
        let tw = ev.twist().ok_or("2x2 tiling with mismatched pretwists")?;
        *hist.entry(tw).or_default() += 1;
    }
    if hist != BTreeMap::from([(0, 9)]) {
        return Err(format!("2x2 histogram {hist:?}"));
    }

    let big = find("3x3");
    let center = Cell::new(1, 1);
    let mut signs = Vec::new();
    for (i, (s, ev)) in big.socks.iter().zip(&big.evidence).enumerate() {
        let ring = s.cycles().len() == 1
            && s.cycles()[0].len() == 8
            && s.jewels().iter().copied().collect::<Vec<_>>() == vec![center];
        if ring {
            let tw = ev.twist().ok_or("ring tiling with mismatched pretwists")?;
            if tw.abs() != 1 {
                return Err(format!("ring tiling {i} has Tw = {tw}"));
            }
            signs.push((i, tw));
        }
    }
    let has = |sign: i64| signs.iter().any(|&(_, tw)| tw == sign);
    if !has(1) || !has(-1) {
        return Err(format!("ring tilings found: {signs:?}"));
    }
    Ok(format!(
        "2x2 histogram {{0: 9}}; 3x3 ring-plus-jewel tilings (index, Tw) = {signs:?}"
    ))
}

fn winding_oracle(corpus: &[Entry]) -> Outcome {
    let cycles: Vec<&Cycle> = corpus
        .iter()
        .flat_map(|e| e.socks.iter().flat_map(|s| s.cycles()))
        .collect();
    if cycles.is_empty() {
        return Err("no cycles in the corpus".into());
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_2024);
    let mut pairs = 0usize;
    for _ in 0..1000 {
        let c = cycles[rng.gen_range(0..cycles.len())];
        let (lo, hi) = c.bounds();
        let x = rng.gen_range(lo.x - 2..=hi.x + 2);
        let y = rng.gen_range(lo.y - 2..=hi.y + 2);
        let (fast, oracle) = if rng.gen_bool(0.5) {
            let p = HalfPoint::new(x, y);
            (
                winding_number(c, p).map_err(|e| e.to_string())?,
                turning_winding_oracle(c, QuarterPoint::half(p)),
            )
        } else {
            let v = Cell::new(x, y);
            if c.contains(v) {
                continue;
            }
            (
                winding_number(c, v).map_err(|e| e.to_string())?,
                turning_winding_oracle(c, QuarterPoint::nudged(v)),
            )
        };
        if fast != oracle {
            return Err(format!(
                "cycle {:?} at ({x}, {y}): ray {fast}, turning {oracle}",
                c.vertices()
            ));
        }
        pairs += 1;
    }
    if pairs < 100 {
        return Err(format!("only {pairs} pairs sampled"));
    }
    Ok(format!("{pairs} random (cycle, point) pairs agree"))
}

fn p_at_one(corpus: &[Entry]) -> Outcome {
    let mut checked = 0usize;
    for e in corpus {
        let expected: i64 = e
            .region
            .base()
            .cells()
            .iter()
            .map(|&v| vertex_color(v) as i64)
            .sum();
        for (i, ev) in e.evidence.iter().enumerate() {
            let got = ev.polynomial.eval_at_one();
            if got != expected {
                return Err(format!(
                    "{} tiling {i}: P(1) = {got}, expected {expected}",
                    e.name
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} tilings: P(1) = #black - #white"))
}

fn main() {
    let started = Instant::now();
    let data = load();
    let flip = graphs(&data);
    let criteria: Vec<Criterion> = vec![
        (
            "1 twist identity P'(1) = T^i = T^j = T^k",
            Box::new(twist_identity),
        ),
        (
            "2 per-cycle weight and charge identities",
            Box::new(|| cycle_lemmas(&data)),
        ),
        (
            "3 jewel crossing identity",
            Box::new(|| jewel_identity(&data)),
        ),
        (
            "4 flip invariance of Tw",
            Box::new(|| flip_invariance(&data, &flip)),
        ),
        (
            "5 sock coherence",
            Box::new(|| sock_coherence(&data, &flip)),
        ),
        (
            "6 enumeration vs matching oracle",
            Box::new(enumeration_oracle),
        ),
        ("7 calibration cases", Box::new(|| calibration(&data))),
        ("8 winding oracle", Box::new(|| winding_oracle(&data))),
        ("9 P(1) color balance", Box::new(|| p_at_one(&data))),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1?}",
        criteria.len() - failed,
        started.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
