//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use idealgraph::invariants::{chromatic_number, clique_number};
use idealgraph::perfectness::find_long_induced_cycle;
use idealgraph::{
    check_certificate, construct_paper_hole, factorize, find_odd_hole, invariant_report, is_perfect,
    validate_certificate, HoleCertificate, Host, IdealGraph, Verdict, DEFAULT_CAP,
};

type Outcome = Result<String, String>;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_idealgraph"))
}

fn graph(n: u64) -> IdealGraph {
    IdealGraph::build(&factorize(n).unwrap())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Certificate rebuilt from the CLI's JSON, resolved against G(Z_n).
fn certificate_from_json(g: &IdealGraph, v: &serde_json::Value) -> Result<HoleCertificate, String> {
    let values: Vec<u64> = v["cycle"]
        .as_array()
        .ok_or("certificate has no cycle")?
        .iter()
        .map(|x| x.as_u64().ok_or("non-integer vertex"))
        .collect::<Result<_, _>>()?;
    let host = match v["host"].as_str() {
        Some("graph") => Host::Graph,
        Some("complement") => Host::Complement,
        other => return Err(format!("bad host {other:?}")),
    };
    let cycle = values
        .iter()
        .map(|&m| g.index_of(m).ok_or(format!("{m} is not a vertex")))
        .collect::<Result<_, _>>()?;
    if v["length"].as_u64() != Some(values.len() as u64) {
        return Err("length field disagrees with cycle".into());
    }
    Ok(HoleCertificate { n: v["n"].as_u64().ok_or("no n")?, host, cycle, divisor_values: values })
}

/// Same cyclic sequence up to rotation and reflection.
fn same_cycle(a: &[u64], b: &[u64]) -> bool {
    let len = a.len();
    if len != b.len() {
        return false;
    }
    let rev: Vec<u64> = b.iter().rev().copied().collect();
    (0..len).any(|r| {
        (0..len).all(|i| a[i] == b[(i + r) % len]) || (0..len).all(|i| a[i] == rev[(i + r) % len])
    })
}

fn run_perfect(n: u64, extra: &[&str]) -> Result<(serde_json::Value, i32, Duration), String> {
    let start = Instant::now();
    let out = bin()
        .arg("perfect")
        .arg(n.to_string())
        .args(extra)
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let v = serde_json::from_slice(&out.stdout).map_err(|e| format!("perfect {n}: bad JSON: {e}"))?;
    Ok((v, out.status.code().unwrap_or(-1), elapsed))
}

/// AC1: not perfect for 5-prime moduli, with validated 5-holes, in under 1 s.
fn ac1_forward_direction() -> Outcome {
    let paper = [30u64, 105, 385, 154, 66];
    let mut notes = Vec::new();
    for n in [2310u64, 30030] {
        let g = graph(n);
        for extra in [&[][..], &["--search"][..]] {
            let (v, code, elapsed) = run_perfect(n, extra)?;
            if code != 1 || v["verdict"] != "not_perfect" {
                return Err(format!("perfect {n} {extra:?}: exit {code}, verdict {}", v["verdict"]));
            }
            let cert = certificate_from_json(&g, &v["certificate"])?;
            check_certificate(&g, &cert).map_err(|d| format!("perfect {n} {extra:?}: {d}"))?;
            if cert.length() != 5 {
                return Err(format!("perfect {n}: hole length {}", cert.length()));
            }
            if elapsed >= Duration::from_secs(1) {
                return Err(format!("perfect {n} {extra:?} took {elapsed:?}"));
            }
            if n == 2310 && extra.is_empty() && !same_cycle(&cert.divisor_values, &paper) {
                return Err(format!("2310 construction gave {:?}", cert.divisor_values));
            }
            notes.push(format!("{n}{}:{}ms", if extra.is_empty() { "" } else { "/search" }, elapsed.as_millis()));
        }
    }
    Ok(notes.join(" "))
}

/// AC2: every n <= 2000 is perfect; 4-prime moduli searched exhaustively.
fn ac2_converse_direction() -> Outcome {
    let start = Instant::now();
    let mut four_prime = 0;
    for n in 1..=2000u64 {
        let f = factorize(n).unwrap();
        let r = is_perfect(&f).map_err(|e| format!("n = {n}: {e}"))?;
        if !matches!(r.verdict, Verdict::Perfect | Verdict::DegeneratePerfect) {
            return Err(format!("n = {n} reported {}", r.verdict));
        }
        if f.k() == 4 {
            four_prime += 1;
            let g = IdealGraph::build(&f);
            let v = g.vertex_count();
            let max_length = if v % 2 == 0 { v - 1 } else { v };
            if !r.search_exhausted || r.max_length_searched < max_length {
                return Err(format!("n = {n}: search not exhausted"));
            }
            for host in [g.clone(), g.complement()] {
                if let Some(c) = find_odd_hole(&host, max_length).map_err(|e| e.to_string())? {
                    return Err(format!("n = {n}: hole {:?}", c.divisor_values));
                }
            }
        }
    }
    for n in [210u64, 420, 630, 1050, 1470, 1155] {
        if factorize(n).unwrap().k() != 4 {
            return Err(format!("{n} should have 4 primes"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(300) {
        return Err(format!("sweep took {elapsed:?}"));
    }
    Ok(format!("2000 moduli, {four_prime} with 4 primes, {}ms", elapsed.as_millis()))
}

/// AC3: no induced cycle of any length > 4 in G or its complement.
fn ac3_no_long_induced_cycles() -> Outcome {
    let mut notes = Vec::new();
    for n in [210u64, 1155, 1260, 1680] {
        let (v, code, _) = run_perfect(n, &["--all-lengths"])?;
        let long = &v["long_cycles"];
        if code != 0 || !long["graph"].is_null() || !long["complement"].is_null() || long["search_exhausted"] != true {
            return Err(format!("perfect {n} --all-lengths: exit {code}, {long}"));
        }
        let g = graph(n);
        let vc = g.vertex_count();
        for host in [g.clone(), g.complement()] {
            if let Some(c) = find_long_induced_cycle(&host, vc, DEFAULT_CAP).map_err(|e| e.to_string())? {
                return Err(format!("n = {n}: induced cycle {c:?}"));
            }
        }
        notes.push(format!("{n}(V={vc})"));
    }
    Ok(notes.join(" "))
}

/// AC4: omega = chi for every n <= 1000.
fn ac4_weak_perfectness() -> Outcome {
    let start = Instant::now();
    let mut violations = Vec::new();
    for n in 1..=1000u64 {
        let r = invariant_report(&factorize(n).unwrap(), DEFAULT_CAP).map_err(|e| format!("n = {n}: {e}"))?;
        if r.omega != r.chi {
            violations.push(n);
        }
    }
    // beyond the range, including non-perfect graphs
    for n in [2310u64, 4620, 30030] {
        let r = invariant_report(&factorize(n).unwrap(), DEFAULT_CAP).map_err(|e| e.to_string())?;
        if r.omega != r.chi {
            violations.push(n);
        }
    }
    let elapsed = start.elapsed();
    if !violations.is_empty() {
        return Err(format!("omega != chi for {violations:?}"));
    }
    if elapsed >= Duration::from_secs(300) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("0 violations, {}ms", elapsed.as_millis()))
}

/// AC5: hole-based verdict equals omega(H) = chi(H) over all induced subgraphs.
fn ac5_definition_oracle() -> Outcome {
    let mut graphs = 0;
    let mut subgraphs = 0u64;
    for n in 1..=1000u64 {
        let g = graph(n);
        let v = g.vertex_count();
        if v > 12 {
            continue;
        }
        graphs += 1;
        let mut by_definition = true;
        for mask in 1u32..(1 << v) {
            let subset: Vec<usize> = (0..v).filter(|i| mask >> i & 1 == 1).collect();
            let h = g.induced_subgraph(&subset);
            let omega = clique_number(&h).map_err(|e| e.to_string())?.0;
            let chi = chromatic_number(&h).map_err(|e| e.to_string())?.chi;
            subgraphs += 1;
            if omega != chi {
                by_definition = false;
                break;
            }
        }
        let verdict = is_perfect(g.factorization()).map_err(|e| e.to_string())?.verdict;
        if verdict.is_perfect() != by_definition {
            return Err(format!("n = {n}: verdict {verdict}, definition says {by_definition}"));
        }
    }
    Ok(format!("{graphs} graphs, {subgraphs} induced subgraphs, 0 disagreements"))
}

/// AC6: adjacency, vertex counts and prime-power completeness against integer oracles.
fn ac6_unit_oracles() -> Outcome {
    let mut pairs = 0u64;
    for n in 1..=2000u64 {
        let g = graph(n);
        for i in 0..g.vertex_count() {
            for j in (i + 1)..g.vertex_count() {
                let (a, b) = (g.values()[i], g.values()[j]);
                let l = a / gcd(a, b) * b;
                let expected = n % l == 0 && 1 < l && l < n;
                if g.is_adjacent(i, j) != expected || g.is_adjacent(j, i) != expected {
                    return Err(format!("n = {n}: adjacency of {a}, {b}"));
                }
                pairs += 1;
            }
        }
    }
    for n in 1..=10_000u64 {
        let brute = (2..n).filter(|d| n % d == 0).count();
        if graph(n).vertex_count() != brute {
            return Err(format!("n = {n}: vertex count"));
        }
    }
    let mut prime_powers = 0;
    for p in (2u64..=(1 << 16)).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)) {
        let (mut q, mut alpha) = (p, 1usize);
        while q <= 1 << 16 {
            let g = graph(q);
            let v = alpha - 1;
            if g.vertex_count() != v || g.edge_count() != v * v.saturating_sub(1) / 2 {
                return Err(format!("{p}^{alpha} is not complete on {v} vertices"));
            }
            prime_powers += 1;
            q *= p;
            alpha += 1;
        }
    }
    Ok(format!("{pairs} adjacency pairs, 10000 vertex counts, {prime_powers} prime powers"))
}

/// AC7: emitted certificates validate; mutated ones are rejected with reasons.
fn ac7_certificate_integrity() -> Outcome {
    let mut emitted = 0;
    let mut rejected = 0;
    for n in [2310u64, 4620, 6930, 8190, 9240, 30030, 39270] {
        let f = factorize(n).unwrap();
        let g = IdealGraph::build(&f);
        let searched = find_odd_hole(&g, 5).map_err(|e| e.to_string())?.ok_or(format!("no hole for {n}"))?;
        let constructed = construct_paper_hole(&f).map_err(|e| e.to_string())?;
        for cert in [searched, constructed] {
            emitted += 1;
            if !validate_certificate(&g, &cert) {
                return Err(format!("emitted certificate for {n} rejected"));
            }
            let mut swapped = cert.clone();
            swapped.cycle.swap(0, 1);
            swapped.divisor_values.swap(0, 1);
            let mut deleted = cert.clone();
            deleted.cycle.pop();
            deleted.divisor_values.pop();
            let mut even = cert.clone();
            let extra = (0..g.vertex_count()).find(|i| !cert.cycle.contains(i)).unwrap();
            even.cycle.push(extra);
            even.divisor_values.push(g.values()[extra]);
            for (what, bad) in [("swap", swapped), ("deletion", deleted), ("even length", even)] {
                match check_certificate(&g, &bad) {
                    Ok(()) => return Err(format!("{what} mutation accepted for {n}")),
                    Err(reason) if reason.to_string().is_empty() => {
                        return Err(format!("{what} mutation rejected without reason"))
                    }
                    Err(_) => rejected += 1,
                }
            }
        }
    }
    Ok(format!("{emitted} certificates valid, {rejected} mutations rejected"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("AC1 forward direction (k >= 5 not perfect)", ac1_forward_direction),
        ("AC2 converse direction (n <= 2000 perfect)", ac2_converse_direction),
        ("AC3 no induced cycles longer than 4", ac3_no_long_induced_cycles),
        ("AC4 weak perfectness omega = chi", ac4_weak_perfectness),
        ("AC5 definition-level oracle", ac5_definition_oracle),
        ("AC6 unit oracles", ac6_unit_oracles),
        ("AC7 certificate integrity", ac7_certificate_integrity),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS {name}: {detail} [{:.2?}]", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
