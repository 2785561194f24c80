//! Acceptance gate: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kneser_core::guide::{build_guide_cycle, flip_hamiltonian_cycle, verify_flip_cycle};
use kneser_core::orbits::OrbitPartition;
use kneser_core::perm::{
    adjacent_by_indecomposable, count_indecomposable, decomposable_bound_holds, density_report, is_indecomposable,
    kg_perm_adjacent, Permutation,
};
use kneser_core::splice::{build_hamiltonian, Pipeline};
use kneser_core::verify::mutate::{all_single_mutations, Mutation};
use kneser_core::verify::{backtrack_flip_cycle, brute_force_kneser_graph, check_guide_cycle, check_orbit_sizes, verify_lemmas};
use kneser_core::{catalan, Execution, Triangulation};
use kneser_e2e::split_certificate;
use num_bigint::BigUint;

type Outcome = Result<String, String>;

fn kneser(args: &[&str], stdin: &str) -> (i32, String, String) {
    let r = kneser_e2e::kneser(args, stdin);
    (r.code, r.stdout, r.stderr)
}

fn parse_cycle(text: &str, n: usize) -> Vec<Triangulation> {
    text.lines().skip(1).map(|l| Triangulation::decode(l, n).unwrap()).collect()
}

fn end_to_end() -> Outcome {
    let expected = [5u64, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012];
    let mut n14 = Duration::ZERO;
    for (k, n) in (5..=14usize).enumerate() {
        if catalan(n - 2) != expected[k] {
            return Err(format!("C({}) = {}", n - 2, catalan(n - 2)));
        }
        let start = Instant::now();
        let ns = n.to_string();
        let (code, cert, err) = kneser(&["hamcycle", "--n", &ns], "");
        if code != 0 {
            return Err(format!("hamcycle n={n}: {err}"));
        }
        let header = format!("kneser-ham n={n} len={}", expected[k]);
        if cert.lines().next() != Some(header.as_str()) || cert.lines().count() as u64 != expected[k] + 1 {
            return Err(format!("n={n}: wrong header or length"));
        }
        let (code, report, _) = kneser(&["verify", "--n", &ns], &cert);
        if code != 0 {
            return Err(format!("verify n={n}:\n{report}"));
        }
        if n == 14 {
            n14 = start.elapsed();
        }
    }
    if n14 > Duration::from_secs(60) {
        return Err(format!("n=14 took {n14:?}"));
    }
    Ok(format!("n=5..14 verified, lengths C(3..12); n=14 end-to-end {:.2}s", n14.as_secs_f64()))
}

fn oracle_equivalence() -> Outcome {
    let mut pairs = 0;
    for n in 5..=8 {
        let oracle = brute_force_kneser_graph(n, Execution::Parallel).map_err(|e| e.to_string())?;
        let (_, cert, _) = kneser(&["hamcycle", "--n", &n.to_string()], "");
        let seq = parse_cycle(&cert, n);
        let bad = oracle.cycle_mismatches(&seq);
        if !bad.is_empty() {
            return Err(format!("n={n}: {} non-edges, first at position {}", bad.len(), bad[0]));
        }
        pairs += seq.len();
    }
    Ok(format!("{pairs} consecutive pairs for n=5..8 are oracle edges"))
}

fn lemma_suites() -> Outcome {
    let four = check_orbit_sizes(&OrbitPartition::build(4, Execution::Parallel).map_err(|e| e.to_string())?);
    if !four.passed || !four.detail.contains("1 of size two") {
        return Err(format!("n=4: {}", four.detail));
    }
    for n in 5..=12 {
        let r = verify_lemmas(n, Execution::Parallel).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(r.to_string());
        }
        let twos = r.check("orbit-sizes").map(|c| c.detail.clone()).unwrap_or_default();
        let expect = if n == 6 { "1 of size two" } else { "0 of size two" };
        if !twos.contains(expect) {
            return Err(format!("n={n}: {twos}"));
        }
    }
    Ok("orbit sizes, rotation disjointness, flip bridges, guide load and bridge factor hold for n=4..12".into())
}

fn hexagon() -> Outcome {
    let p = Pipeline::build(6, Execution::Sequential).map_err(|e| e.to_string())?;
    let ears_id = p
        .partition
        .orbits()
        .iter()
        .position(|o| o.size() == 2 && o.rep().is_all_ears())
        .ok_or("no all-ears orbit")? as u32;
    if p.tree.degree(ears_id) != 1 {
        return Err(format!("all-ears orbit has tree degree {}", p.tree.degree(ears_id)));
    }
    let guide = p.guide.seq();
    let in_guide: Vec<usize> = (0..guide.len()).filter(|&k| guide[k].is_all_ears()).collect();
    if in_guide != [guide.len() - 1] {
        return Err(format!("all-ears guide positions {in_guide:?}"));
    }
    let cycle = build_hamiltonian(6).map_err(|e| e.to_string())?.to_vec();
    let ears = p.partition.orbit(ears_id).members();
    let uses = (0..cycle.len())
        .filter(|&k| {
            let (a, b) = (cycle[k], cycle[(k + 1) % cycle.len()]);
            (a == ears[0] && b == ears[1]) || (a == ears[1] && b == ears[0])
        })
        .count();
    if uses != 1 || cycle.len() != 14 {
        return Err(format!("all-ears edge used {uses} times in a {}-cycle", cycle.len()));
    }
    Ok("all-ears orbit is a leaf, last in the guide, its edge used once in the 14-cycle".into())
}

fn guide_contract() -> Outcome {
    for n in 6..=12 {
        let guide = build_guide_cycle(n).map_err(|e| e.to_string())?;
        let part = OrbitPartition::build(n, Execution::Parallel).map_err(|e| e.to_string())?;
        let c = check_guide_cycle(&guide, &part, Execution::Parallel);
        if !c.passed {
            return Err(format!("n={n}: {} ({:?})", c.detail, c.witness));
        }
    }
    for m in 5..=8 {
        let searched = backtrack_flip_cycle(m).map_err(|e| e.to_string())?;
        let built = flip_hamiltonian_cycle(m).map_err(|e| e.to_string())?;
        verify_flip_cycle(&searched, m).map_err(|e| format!("search m={m}: {e}"))?;
        verify_flip_cycle(built.seq(), m).map_err(|e| format!("construction m={m}: {e}"))?;
    }
    Ok("guides n=6..12 independent, covering, flip-closed; m=5..8 construction and search both valid".into())
}

fn all_perms(n: usize) -> Vec<Permutation> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Permutation>) {
        if prefix.len() == n {
            out.push(Permutation::new(prefix).unwrap());
            return;
        }
        for v in 1..=n {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

fn permutohedron() -> Outcome {
    for n in 3..=7 {
        let (code, cert, err) = kneser(&["perm", "hamcycle", "--n", &n.to_string()], "");
        if code != 0 {
            return Err(err);
        }
        let mut seq: Vec<Permutation> = cert.lines().skip(1).map(|l| Permutation::parse(l).unwrap()).collect();
        for k in 0..seq.len() {
            if !kg_perm_adjacent(&seq[k], &seq[(k + 1) % seq.len()]).unwrap() {
                return Err(format!("n={n}: {:?} and {:?} share a facet", seq[k], seq[(k + 1) % seq.len()]));
            }
        }
        seq.sort();
        if seq != all_perms(n) {
            return Err(format!("n={n}: not every permutation exactly once"));
        }
    }
    let mut pairs = 0u64;
    for n in 1..=6 {
        let perms = all_perms(n);
        for a in &perms {
            for b in &perms {
                if kg_perm_adjacent(a, b).unwrap() != adjacent_by_indecomposable(a, b).unwrap() {
                    return Err(format!("shortcut disagrees on {a:?}, {b:?}"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("n=3..7 cycles cover S_n with facet-free steps; shortcut agrees on {pairs} pairs"))
}

fn indecomposable_counts() -> Outcome {
    let expected = [1u64, 1, 3, 13, 71, 461, 3447, 29093];
    for (k, &e) in expected.iter().enumerate() {
        let n = k + 1;
        let brute = all_perms(n).iter().filter(|p| is_indecomposable(p)).count() as u64;
        if count_indecomposable(n) != BigUint::from(e) || brute != e {
            return Err(format!("I({n}): recurrence {}, brute force {brute}", count_indecomposable(n)));
        }
    }
    if let Some(n) = (2..=10).find(|&n| !decomposable_bound_holds(n)) {
        return Err(format!("decomposable bound fails at n={n}"));
    }
    for k in 1..=8 {
        let met: Vec<bool> = (2..=40).map(|n| density_report(n, k).unwrap().threshold_met).collect();
        if met.windows(2).any(|w| w[0] && !w[1]) {
            return Err(format!("threshold not monotone for k={k}"));
        }
    }
    Ok("I(1..8) match recurrence and brute force; bound holds n=2..10; thresholds monotone".into())
}

/// Every mutant must be rejected. Adjacent swaps that happen to give another
/// Hamiltonian cycle are reported separately, confirmed by the oracle.
fn negative_tests() -> Outcome {
    let mut total = 0;
    let mut accepted: Vec<String> = Vec::new();
    let mut genuine = 0;
    for n in 5..=9 {
        let ns = n.to_string();
        let oracle = brute_force_kneser_graph(n, Execution::Parallel).map_err(|e| e.to_string())?;
        let (_, cert, _) = kneser(&["hamcycle", "--n", &ns], "");
        let (header, body) = split_certificate(&cert);
        for m in all_single_mutations(body.len()) {
            let mutated = m.apply(&body);
            let text = format!("{header}\n{}\n", mutated.join("\n"));
            let (code, report, _) = kneser(&["verify", "--n", &ns], &text);
            total += 1;
            if code == 1 && report.contains("witness:") {
                continue;
            }
            if matches!(m, Mutation::Swap(_)) {
                let seq: Vec<Triangulation> = mutated.iter().map(|l| Triangulation::decode(l, n).unwrap()).collect();
                genuine += usize::from(oracle.cycle_mismatches(&seq).is_empty());
            }
            accepted.push(format!("n={n} {m:?}"));
        }
    }
    let perm_cert = kneser(&["perm", "hamcycle", "--n", "4"], "").1;
    let (header, body) = split_certificate(&perm_cert);
    let mut perm_accepted = 0;
    for m in all_single_mutations(body.len()) {
        let text = format!("{header}\n{}\n", m.apply(&body).join("\n"));
        let (code, report, _) = kneser(&["perm", "verify", "--n", "4"], &text);
        total += 1;
        if !(code == 1 && report.contains("witness:")) {
            perm_accepted += 1;
        }
    }
    if accepted.is_empty() && perm_accepted == 0 {
        return Ok(format!("{total} mutants rejected with a witness"));
    }
    Err(format!(
        "{} of {total} mutants accepted: {} triangulation swaps ({genuine} oracle-confirmed Hamiltonian, first {}), \
         {perm_accepted} permutation swaps inside a clique; all duplicates and deletions rejected",
        accepted.len() + perm_accepted,
        accepted.len(),
        accepted.first().map(String::as_str).unwrap_or("-"),
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("hamiltonian cycles n=5..14", end_to_end),
        ("oracle equivalence n=5..8", oracle_equivalence),
        ("property suites", lemma_suites),
        ("hexagon special case", hexagon),
        ("guide cycle contract", guide_contract),
        ("permutohedron cycles", permutohedron),
        ("indecomposable counts", indecomposable_counts),
        ("mutated certificates rejected", negative_tests),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {} PASS {name} ({secs:.1}s): {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} FAIL {name} ({secs:.1}s): {msg}", k + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
