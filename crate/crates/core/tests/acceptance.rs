//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. Run with
//! `cargo test -p pp2 --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use common::*;
use pp2::catalog::{all_members_with_order, FamilySpec, Special};
use pp2::classify::Classification;
use pp2::enumerate::{verify_domination, verify_theorem2};
use pp2::graph::{Diameter, Graph};
use pp2::minor::{find_minor, obstruction_certificate, verify_model, Obstruction};
use pp2::mncliques::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const MIN: u64 = 60;

fn within(limit: Duration, start: Instant, detail: String) -> Outcome {
    let took = start.elapsed();
    let line = format!("{detail} ({:.1}s, limit {}s)", took.as_secs_f64(), limit.as_secs());
    if took <= limit {
        Ok(line)
    } else {
        Err(format!("too slow: {line}"))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn spec(s: &str) -> Graph {
    s.parse::<FamilySpec>().unwrap().construct().unwrap()
}

fn members(lo: usize, hi: usize) -> Vec<(FamilySpec, Graph)> {
    (lo..=hi)
        .flat_map(all_members_with_order)
        .map(|s| (s, s.construct().unwrap()))
        .collect()
}

fn thm2(max_n: usize, limit: Duration) -> Outcome {
    let start = Instant::now();
    let report = verify_theorem2(max_n).map_err(|e| e.to_string())?;
    let classified: usize = report.orders.iter().map(|o| o.member + o.nonmember).sum();
    ensure(report.anomaly_count() == 0, || format!("anomalies={}", report.anomaly_count()))?;
    ensure(classified == report.total(), || "unclassified graphs".into())?;
    within(
        limit,
        start,
        format!(
            "max-n {max_n}: {} graphs, {classified} classified, anomalies=0",
            report.total()
        ),
    )
}

fn criterion1() -> Outcome {
    thm2(10, Duration::from_secs(10 * MIN))
}

fn criterion1_stretch() -> Outcome {
    thm2(11, Duration::from_secs(120 * MIN))
}

fn criterion2() -> Outcome {
    // order 11 so that every fixed graph, M11 included, is in range
    let r = verify_domination(11).map_err(|e| e.to_string())?;
    let expected: Vec<FamilySpec> = Special::ALL.iter().map(|&s| FamilySpec::Special(s)).collect();
    let mut got = r.gamma3.clone();
    let mut want = expected.clone();
    got.sort();
    want.sort();
    ensure(r.violations.is_empty(), || format!("gamma > 3: {:?}", r.violations))?;
    ensure(got == want, || format!("gamma=3 set {:?}", r.gamma3))?;
    Ok(format!(
        "{} members up to order 11, max gamma {}, gamma=3 exactly on the 7 fixed graphs",
        r.members_checked, r.max_gamma
    ))
}

fn expect_none(g: &Graph, m: usize, n: usize, name: &str) -> Result<u128, String> {
    let s = search_mn_clique(g, m, n, DEFAULT_BUDGET).map_err(|e| format!("{name}: {e}"))?;
    ensure(s.witness.is_none(), || format!("{name}: unexpected ({m},{n}) clique"))?;
    let samples = (s.space / 100).max(1) as usize;
    ensure(audit_random_labelings(g, m, n, samples, 1) == 0, || format!("{name}: audit found a clique"))?;
    Ok(s.space)
}

fn expect_witness(g: &Graph, m: usize, n: usize, name: &str) -> Result<(), String> {
    let s = search_mn_clique(g, m, n, DEFAULT_BUDGET).map_err(|e| format!("{name}: {e}"))?;
    match s.witness {
        Some(w) if is_mn_clique(&w).is_ok() => Ok(()),
        Some(_) => Err(format!("{name}: witness fails the clique check")),
        None => Err(format!("{name}: no ({m},{n}) clique found")),
    }
}

fn criterion3() -> Outcome {
    let start = Instant::now();
    expect_witness(&spec("w8p"), 1, 0, "W8+")?;
    for (name, space) in [("p10", 1u128 << 15), ("m11m", 1 << 17), ("m11", 1 << 20)] {
        let got = expect_none(&spec(name), 1, 0, name)?;
        ensure(got == space, || format!("{name}: searched {got}, expected {space}"))?;
    }
    let sweep = members(10, 12);
    for (s, g) in &sweep {
        expect_none(g, 1, 0, &s.to_string())?;
    }
    within(
        Duration::from_secs(30 * MIN),
        start,
        format!("W8+ witness; none for P10, M11-, M11 and {} members of order 10..12", sweep.len()),
    )
}

fn criterion4() -> Outcome {
    expect_witness(&spec("w8"), 0, 2, "W8")?;
    let sweep = members(9, 10);
    ensure(sweep.iter().any(|(s, _)| s.to_string() == "w8p"), || "W8+ missing".into())?;
    ensure(sweep.iter().any(|(s, _)| s.to_string() == "m11e"), || "M11= missing".into())?;
    for (s, g) in &sweep {
        expect_none(g, 0, 2, &s.to_string())?;
    }
    Ok(format!("W8 witness; none for {} members of order 9..10", sweep.len()))
}

fn criterion5() -> Outcome {
    let start = Instant::now();
    let k34 = Graph::complete_bipartite(3, 4).unwrap();
    let s = search_signed_clique(&k34, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(s.space == 1 << 12, || "K3,4 signing space".into())?;
    ensure(s.witness.as_ref().is_some_and(is_signed_absolute_clique), || "no signed K3,4".into())?;
    let p = search_pushable_clique(&k34, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(p.witness.as_ref().is_some_and(is_pushable_absolute_clique), || "no pushable K3,4".into())?;
    ensure(start.elapsed() < Duration::from_secs(1), || "K3,4 searches not sub-second".into())?;

    let mut filtered = 0;
    for (s, g) in members(8, 10) {
        if two_disjoint_2paths_property(&g) {
            filtered += 1;
            let a = search_signed_clique(&g, DEFAULT_BUDGET).map_err(|e| format!("{s}: {e}"))?;
            let b = search_pushable_clique(&g, DEFAULT_BUDGET).map_err(|e| format!("{s}: {e}"))?;
            ensure(a.witness.is_none() && b.witness.is_none(), || format!("{s}: unexpected clique"))?;
        }
    }
    // members through K2,10
    for (s, g) in members(3, 12) {
        let allowed = matches!(s, FamilySpec::K33 | FamilySpec::K34 | FamilySpec::Biclique2(_));
        ensure(two_disjoint_2paths_property(&g) == allowed, || format!("{s}: two-2-path property"))?;
    }
    let bounds = [(1, 0), (0, 3), (2, 1)].map(|(m, n)| degree2_agreement_bound(m, n));
    ensure(bounds == [Some(1), Some(4), Some(16)], || format!("bounds {bounds:?}"))?;
    Ok(format!(
        "signed and pushable K3,4; none for {filtered} filtered members of order 8..10; \
         property only on K3,3, K3,4, K2,t (t <= 10); bounds 1, 4, 16"
    ))
}

fn criterion6a() -> Outcome {
    let start = Instant::now();
    let detail = suite_mtf(7)?;
    within(Duration::from_secs(5 * MIN), start, format!("mtf classes n <= 7, {detail}"))
}

fn criterion6b() -> Outcome {
    let start = Instant::now();
    let hosts: Vec<Graph> = (1..=7).flat_map(unlabeled).collect();
    let detail = suite_minor(&hosts, 5)?;
    within(Duration::from_secs(5 * MIN), start, format!("all hosts n <= 7, patterns n <= 5: {detail}"))
}

fn criterion6c() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for n in 1..=6 {
        parts.push(suite_canonical_exhaustive(n)?);
    }
    for n in 2..=7 {
        parts.push(suite_iso_random(n, 200, 100 + n as u64)?);
    }
    within(Duration::from_secs(5 * MIN), start, parts.join("; "))
}

fn criterion7() -> Outcome {
    let mut checked = 0;
    let mut minor_free = 0;
    for k in 1..=20 {
        for s in all_members_with_order(k) {
            let g = s.construct().map_err(|e| e.to_string())?;
            ensure(g.is_connected() && g.is_triangle_free(), || format!("{s}: not connected triangle-free"))?;
            ensure(g.diameter() == Diameter::Finite(2), || format!("{s}: diameter {}", g.diameter()))?;
            if k <= 14 {
                let c = obstruction_certificate(&g).map_err(|e| format!("{s}: {e}"))?;
                ensure(c.is_none(), || format!("{s}: contains {:?}", c.unwrap().0))?;
                minor_free += 1;
            }
            checked += 1;
        }
    }
    for name in ["f1", "f2", "f3"] {
        let g = spec(name);
        let (ob, model) = obstruction_certificate(&g)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{name}: no obstruction"))?;
        ensure(verify_model(&model, &ob.pattern(), &g), || format!("{name}: bad model"))?;
    }
    let f0 = Obstruction::F0.pattern();
    ensure(find_minor(&f0, &spec("f2")).map_err(|e| e.to_string())?.is_some(), || "F0 not in F2".into())?;
    ensure(
        !pp2::classify::classify(&spec("f1")).map_err(|e| e.to_string())?.is_member(),
        || "F1 classified as member".into(),
    )?;
    Ok(format!(
        "{checked} specs up to order 20 in scope, {minor_free} up to order 14 obstruction-free; F1, F2, F3 certified"
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("1", criterion1),
        ("1 (stretch, max-n 11)", criterion1_stretch),
        ("2", criterion2),
        ("3", criterion3),
        ("4", criterion4),
        ("5", criterion5),
        ("6a", criterion6a),
        ("6b", criterion6b),
        ("6c", criterion6c),
        ("7", criterion7),
        ("cli", cli_examples),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

/// Interface examples for the binary: construct, classify, verify.
fn cli_examples() -> Outcome {
    let run = |args: &[&str], stdin: &str| {
        let argv = std::iter::once("pp2").chain(args.iter().copied());
        pp2::cli::run(argv, &mut stdin.as_bytes())
    };
    let o = run(&["construct", "m11", "--format", "graph6"], "");
    ensure(o.code == 0 && o.stdout.lines().count() == 1, || format!("construct: {o:?}"))?;
    let k44 = Graph::complete_bipartite(4, 4).unwrap().to_graph6() + "\n";
    let o = run(&["classify"], &k44);
    ensure(o.code == 1 && o.stdout.starts_with("nonmember K44minus "), || format!("classify: {o:?}"))?;
    let o = run(&["verify", "thm2", "--max-n", "9"], "");
    ensure(o.code == 0 && o.stdout.lines().any(|l| l == "anomalies=0"), || format!("verify: {o:?}"))?;
    let member = matches!(pp2::classify::classify(&spec("m11")), Ok(Classification::Member { .. }));
    ensure(member, || "m11 not a member".into())?;
    Ok("construct m11, classify K4,4, verify thm2 --max-n 9".into())
}
