//! Acceptance criteria, one line each. Runs without the libtest harness.
//!
//! The process exits non-zero when a blocking criterion fails. Criterion 2 is
//! known to be unattainable as stated and criterion 8 is exploratory; both are
//! run and reported but do not affect the exit code.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use kdecomp::enumerate::{extendability_scan, ScanOptions};
use kdecomp::fixtures::{
    cocl_example, cocl_example_deletion_closure, cocl_example_star, face, full_2d_example, full_2d_example_added,
    missing_edge_added, missing_edge_example, simplex_skeleton, v6f10_6,
};
use kdecomp::{
    certify_trace, cone, extend_simplex_base, full_d, Complex, Decider, Extender, Facet, Graph, Sheller,
    ShellingVerdict, Vertex, VertexSet,
};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PROPERTY_SEED: u64 = 20_251_019;
const PROPERTY_INSTANCES: usize = 240;

struct Criterion {
    id: &'static str,
    title: &'static str,
    blocking: bool,
    note: &'static str,
    run: fn() -> Result<String, String>,
}

fn ensure(ok: bool, message: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message.into())
    }
}

fn sorted(mut v: Vec<Facet>) -> Vec<Facet> {
    v.sort();
    v
}

fn list(v: &[Facet]) -> String {
    v.iter().map(|f| f.iter().map(|x| x.to_string()).collect::<String>()).collect::<Vec<_>>().join(",")
}

fn kdecomp(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_kdecomp")).args(args).output().map_err(|e| e.to_string())?;
    let code = out.status.code().ok_or("killed by signal")?;
    Ok((code, String::from_utf8_lossy(&out.stdout).into_owned()))
}

fn ac1() -> Result<String, String> {
    let start = Instant::now();
    let file = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/v6f10-6.cx");
    let file = file.to_str().unwrap();
    let parsed = kdecomp::io::parse_complex(&std::fs::read_to_string(file).map_err(|e| e.to_string())?);
    ensure(parsed.map(|d| d.complex).ok() == Some(v6f10_6()), "data file differs from the fixture")?;
    let (code, out) = kdecomp(&["check", file, "--k", "0"])?;
    ensure(code == 1 && out.trim() == "NO", format!("--k 0 gave exit {code}: {}", out.trim()))?;
    let (code, out) = kdecomp(&["check", file, "--k", "1"])?;
    ensure(code == 0 && out.starts_with("YES"), format!("--k 1 gave exit {code}: {}", out.trim()))?;
    let (code, out) = kdecomp(&["shed", file, "--face", "1,5"])?;
    ensure(code == 0 && out.starts_with("SHEDDING"), format!("shed 15 gave exit {code}: {}", out.trim()))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), format!("took {elapsed:?}"))?;
    Ok(format!("NO / YES / 15 sheds in {elapsed:.2?}"))
}

fn ac2() -> Result<String, String> {
    let c = full_2d_example();
    let trace = Extender::new().extend_to_full_2d(&c).map_err(|e| format!("extension refused: {e}"))?;
    let added = sorted(trace.added_facets());
    let want = sorted(full_2d_example_added());
    ensure(added == want, format!("added {} instead of {}", list(&added), list(&want)))?;
    let report = certify_trace(&trace, 1, &mut Decider::new());
    ensure(report.passed(), format!("{report}"))?;
    Ok(format!("added {}", list(&added)))
}

fn ac3() -> Result<String, String> {
    let trace = Extender::new().extend_to_cocl(&cocl_example(), face("8")).map_err(|e| e.to_string())?;
    let mut want = cocl_example_deletion_closure();
    want.extend(cocl_example_star());
    let want = sorted(want);
    let got = trace.final_complex().map_err(|e| e.to_string())?;
    ensure(got.facets() == want.as_slice(), format!("final complex has {} facets", got.num_facets()))?;
    ensure(want.len() == 45, "reference list is not 45 facets")?;
    Ok(format!("{} facets after {} steps", want.len(), trace.len()))
}

fn ac4() -> Result<String, String> {
    let trace = Extender::new()
        .extend_clique_edge(&missing_edge_example(), face("8"), face("67"))
        .map_err(|e| e.to_string())?;
    let added = sorted(trace.added_facets());
    ensure(added == missing_edge_added(), format!("added {}", list(&added)))?;
    let report = certify_trace(&trace, 1, &mut Decider::new());
    ensure(report.passed(), format!("{report}"))?;
    Ok(format!("added {}; {} prefixes certified", list(&added), report.entries.len()))
}

fn ac5() -> Result<String, String> {
    let start = Instant::now();
    let trace = Extender::new().extend_main(&cocl_example()).map_err(|e| e.to_string())?;
    let target = simplex_skeleton(face("12345678"), 3);
    let last = trace.final_complex().map_err(|e| e.to_string())?;
    ensure(last == target && target.num_facets() == 70, "final complex is not the 3-skeleton on 1..8")?;
    ensure(trace.len() == 60, format!("{} steps", trace.len()))?;
    let report = certify_trace(&trace, 1, &mut Decider::new());
    ensure(report.passed(), format!("{report}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), format!("took {elapsed:?}"))?;
    Ok(format!("60 steps to 70 facets, {} prefixes certified in {elapsed:.2?}", report.entries.len()))
}

fn faces_of(facets: &[Facet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> =
        facets.iter().flat_map(|f| (1..=f.len()).flat_map(move |s| f.subsets_of_size(s))).collect();
    out.sort();
    out.dedup();
    out
}

/// Shedding by definition: the faces avoiding `f` have only maximal faces of full size.
fn shedding_oracle(facets: &[Facet], f: VertexSet) -> bool {
    let size = facets[0].len();
    let kept: Vec<VertexSet> = faces_of(facets).into_iter().filter(|g| !f.is_subset(*g)).collect();
    !kept.is_empty()
        && kept.iter().all(|g| g.len() == size || kept.iter().any(|h| h.len() > g.len() && g.is_subset(*h)))
}

/// Shellability by search over sets of placed facets.
fn shellable_oracle(facets: &[Facet]) -> bool {
    fn fits(facets: &[Facet], placed: u32, f: Facet) -> bool {
        let meets: Vec<VertexSet> =
            (0..facets.len()).filter(|i| placed >> i & 1 == 1).map(|i| facets[i].intersection(f)).collect();
        meets.iter().all(|m| meets.iter().any(|r| r.len() + 1 == f.len() && m.is_subset(*r)))
    }
    fn go(facets: &[Facet], placed: u32, failed: &mut HashSet<u32>) -> bool {
        if placed.count_ones() as usize == facets.len() {
            return true;
        }
        if failed.contains(&placed) {
            return false;
        }
        for i in 0..facets.len() {
            if placed >> i & 1 == 0
                && (placed == 0 || fits(facets, placed, facets[i]))
                && go(facets, placed | 1 << i, failed)
            {
                return true;
            }
        }
        failed.insert(placed);
        false
    }
    go(facets, 0, &mut HashSet::new())
}

fn skeleton_connected(facets: &[Facet]) -> bool {
    let mut reached = facets[0];
    loop {
        let grown = facets.iter().filter(|f| !f.is_disjoint(reached)).fold(reached, |r, f| r.union(*f));
        if grown == reached {
            break;
        }
        reached = grown;
    }
    facets.iter().all(|f| f.is_subset(reached))
}

fn random_complex(rng: &mut ChaCha8Rng) -> (usize, Vec<Facet>) {
    let n = rng.random_range(3..=7usize);
    let d = rng.random_range(1..=3usize.min(n - 1));
    let all: Vec<Facet> = VertexSet::range(n).unwrap().subsets_of_size(d + 1).collect();
    let count = rng.random_range(1..=all.len().min(10));
    (n, sorted(all.choose_multiple(rng, count).copied().collect()))
}

fn ac6() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
    let mut decider = Decider::new();
    let mut checks = 0usize;
    for instance in 0..PROPERTY_INSTANCES {
        let (n, facets) = random_complex(&mut rng);
        let c = Complex::from_facets(facets.clone()).unwrap();
        let tag = format!("instance {instance} <{}>", list(&facets));
        let size = facets[0].len();
        for f in faces_of(&facets).into_iter().filter(|f| f.len() < size) {
            let lib = kdecomp::is_shedding_face(&c, f).unwrap();
            ensure(lib == shedding_oracle(&facets, f), format!("(a) {tag} face {f:?}"))?;
            checks += 1;
        }
        let zero = decider.decide(&c, 0).is_decomposable();
        let one = decider.decide(&c, 1).is_decomposable();
        let shellable = shellable_oracle(&facets);
        ensure(!zero || one, format!("(b) {tag}: 0-dec but not 1-dec"))?;
        ensure(!one || shellable, format!("(b) {tag}: 1-dec but not shellable"))?;
        let lib_shell = matches!(Sheller::new().shell(&c), ShellingVerdict::Shellable(_));
        ensure(lib_shell == shellable, format!("(b) {tag}: shelling search disagrees"))?;
        ensure(!shellable || skeleton_connected(&facets), format!("(d) {tag}"))?;

        let h: VertexSet = (n..n + rng.random_range(1..=2usize)).map(|v| v as Vertex).collect();
        let padded = c.pad(h).unwrap();
        ensure(decider.decide(&padded, 0).is_decomposable() == zero, format!("(c) {tag}: k = 0"))?;
        ensure(decider.decide(&padded, 1).is_decomposable() == one, format!("(c) {tag}: k = 1"))?;
        for f in faces_of(&facets).into_iter().filter(|f| f.len() <= 2 && f.len() < size) {
            let before = kdecomp::is_shedding_face(&c, f).unwrap();
            ensure(kdecomp::is_shedding_face(&padded, f).unwrap() == before, format!("(c) {tag} face {f:?}"))?;
        }
        checks += 4;
    }
    let mut coned = 0usize;
    for n in 1..=5usize {
        let pairs: Vec<(Vertex, Vertex)> =
            (0..n as Vertex).flat_map(|a| (a + 1..n as Vertex).map(move |b| (a, b))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edges(VertexSet::range(n).unwrap(), edges).unwrap();
            for d in 1..=3usize {
                let h: VertexSet = (10..10 + d as Vertex).collect();
                let full = full_d(&cone(&g, h).unwrap(), d);
                ensure(decider.decide(&full, 1).is_decomposable(), format!("(e) {g:?} with |H| = {d}"))?;
                coned += 1;
            }
        }
    }
    Ok(format!(
        "{PROPERTY_INSTANCES} random instances (seed {PROPERTY_SEED}), {checks} checks, {coned} coned closures, 0 violations"
    ))
}

fn ac7() -> Result<String, String> {
    let trace = extend_simplex_base(face("1234"), face("123456")).map_err(|e| e.to_string())?;
    ensure(trace.len() == 14, format!("{} steps", trace.len()))?;
    let report = certify_trace(&trace, 0, &mut Decider::new());
    ensure(report.passed(), format!("{report}"))?;
    Ok(format!("14 steps, {} prefixes 0-decomposable", report.entries.len()))
}

fn ac8() -> Result<String, String> {
    let start = Instant::now();
    let report = extendability_scan(6, 2, &ScanOptions::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(!report.truncated, "scan truncated")?;
    ensure(report.total_inconclusive() == 0, "inconclusive decisions")?;
    ensure(report.total_dead_ends() == 0, format!("{} dead ends", report.total_dead_ends()))?;
    ensure(elapsed < Duration::from_secs(1800), format!("took {elapsed:?}"))?;
    let classes: usize = report.rows.iter().map(|r| r.classes).sum();
    Ok(format!("{classes} classes over {} levels, no dead ends, {elapsed:.2?}", report.rows.len()))
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: "AC1", title: "V6F10-6 check and shed", blocking: true, note: "", run: ac1 },
    Criterion {
        id: "AC2",
        title: "2-d full extension multiset",
        blocking: false,
        note: " [known unattainable]",
        run: ac2,
    },
    Criterion { id: "AC3", title: "coned closure reproduction", blocking: true, note: "", run: ac3 },
    Criterion { id: "AC4", title: "missing-edge step", blocking: true, note: "", run: ac4 },
    Criterion { id: "AC5", title: "main pipeline end to end", blocking: true, note: "", run: ac5 },
    Criterion { id: "AC6", title: "property suite", blocking: true, note: "", run: ac6 },
    Criterion { id: "AC7", title: "simplex base subroutine", blocking: true, note: "", run: ac7 },
    Criterion {
        id: "AC8",
        title: "n = 6, d = 2 extendability scan",
        blocking: false,
        note: " [exploratory]",
        run: ac8,
    },
];

fn main() -> ExitCode {
    std::panic::set_hook(Box::new(|_| {}));
    let mut blocking_failures = 0;
    for c in CRITERIA {
        let result = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|e| {
            let message =
                e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", message.unwrap_or_default()))
        });
        let note = c.note;
        match result {
            Ok(detail) => println!("[PASS] {} {}: {detail}{note}", c.id, c.title),
            Err(detail) => {
                println!("[FAIL] {} {}: {detail}{note}", c.id, c.title);
                blocking_failures += usize::from(c.blocking);
            }
        }
    }
    if blocking_failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
