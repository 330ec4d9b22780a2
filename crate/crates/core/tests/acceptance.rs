//! Acceptance suite: runs each criterion in order, prints one PASS/FAIL
//! line per criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cograph::oracles::{
    brute_cograph_def, brute_n, brute_p4, enumerate_graphs, enumerate_modules, enumerate_posets, is_prime_graph,
    is_prime_poset, rand_cotree, rand_sptree, Seed,
};
use cograph::{
    corollary1_select, cotree, cotree_to_graph, endpoint_witness, gen_h, inc_components, is_cograph, is_nfree,
    lemma2_partition, lemma4_witness, orient_cotree, sp_tree, sp_tree_to_poset, theorem2_witness, Graph, NFreeMethod,
    Poset, Side, VertexId,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    check(spent < limit, || format!("took {spent:.2?}, limit {limit:?}"))
}

fn edges(g: &Graph) -> Vec<(VertexId, VertexId)> {
    g.edges().collect()
}

/// Connected graphs on 1..=6 vertices with no induced P4 per the oracle.
fn connected_p4_free() -> Vec<Graph> {
    (1..=6)
        .flat_map(|n| enumerate_graphs(n).unwrap())
        .filter(|g| g.is_connected() && brute_p4(g).is_none())
        .collect()
}

fn connected_nfree_posets() -> Vec<Poset> {
    (1..=4)
        .flat_map(|n| enumerate_posets(n).unwrap())
        .filter(|p| p.is_connected() && brute_n(p).is_none())
        .collect()
}

fn theorem1() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 0..=5 {
        for g in enumerate_graphs(n).unwrap() {
            count += 1;
            let rec = is_cograph(&g);
            let p4_free = brute_p4(&g).is_none();
            let def = brute_cograph_def(&g).unwrap();
            check(rec == p4_free && p4_free == def, || {
                format!(
                    "n={n} edges={:?}: is_cograph={rec} p4_free={p4_free} def={def}",
                    edges(&g)
                )
            })?;
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{count} graphs agree in {:.2?}", start.elapsed()))
}

fn theorem2(family: &[Graph]) -> Outcome {
    let start = Instant::now();
    let mut present = 0;
    for g in family {
        let split = g.co_components().len() >= 2;
        let w = theorem2_witness(g).map_err(|e| format!("edges={:?}: {e}", edges(g)))?;
        check(w.is_some() == split, || {
            format!("edges={:?}: witness {w:?}, co-split {split}", edges(g))
        })?;
        if let Some(w) = w {
            present += 1;
            let nx = &w.universal_neighbors;
            check(!nx.is_empty(), || format!("edges={:?}: empty N_x", edges(g)))?;
            let full = nx
                .iter()
                .all(|y| g.vertices().filter(|&v| !nx.contains(v)).all(|v| g.has_edge(y, v)));
            check(full, || {
                format!("edges={:?}: N_x {nx} not joined to its complement", edges(g))
            })?;
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "{} graphs, {present} witnesses, {:.2?}",
        family.len(),
        start.elapsed()
    ))
}

fn lemmas_1_2(family: &[Graph]) -> Outcome {
    let mut blocks = 0;
    for g in family {
        let modules = enumerate_modules(g).unwrap();
        for x in g.vertices() {
            let comps = inc_components(g, x).unwrap();
            for c in comps.blocks() {
                blocks += 1;
                check(g.is_module(c).unwrap() && modules.contains(c), || {
                    format!("edges={:?} x={x}: component {c} is not a module", edges(g))
                })?;
                let part = lemma2_partition(g, x, c).map_err(|e| format!("edges={:?} x={x} c={c}: {e}", edges(g)))?;
                let neighbors = g.neighbors(x).unwrap();
                let union: cograph::VertexSet = part.n1.iter().chain(part.n2.iter()).collect();
                let ok = union == neighbors
                    && union.len() == part.n1.len() + part.n2.len()
                    && part.n1.iter().all(|y| c.iter().all(|a| g.has_edge(y, a)))
                    && part.n2.iter().all(|y| c.iter().all(|a| !g.has_edge(y, a)))
                    && part.n1.iter().all(|y| part.n2.iter().all(|z| g.has_edge(y, z)));
                check(ok, || {
                    format!("edges={:?} x={x} c={c}: bad partition {part:?}", edges(g))
                })?;
            }
        }
    }
    Ok(format!("{blocks} inc(x) components checked"))
}

fn corollary1(family: &[Graph]) -> Outcome {
    let mut calls = 0;
    for g in family {
        for x in g.vertices().filter(|&x| g.degree(x) > 0) {
            calls += 1;
            let y = corollary1_select(g, x).map_err(|e| format!("edges={:?} x={x}: {e}", edges(g)))?;
            let inc: Vec<_> = g.vertices().filter(|&v| v != x && !g.has_edge(x, v)).collect();
            check(g.has_edge(x, y) && inc.iter().all(|&t| g.has_edge(y, t)), || {
                format!("edges={:?} x={x}: selected {y} outside N_x", edges(g))
            })?;
        }
    }
    Ok(format!("{calls} selections land in N_x"))
}

fn lemma3_sp() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 0..=4 {
        for p in enumerate_posets(n).unwrap() {
            count += 1;
            let brute = brute_n(&p).is_none();
            let lemma3 = is_nfree(&p, NFreeMethod::Lemma3);
            let sp = n == 0 || sp_tree(&p).is_ok();
            check(brute == lemma3 && lemma3 == sp, || {
                format!(
                    "relations={:?}: brute={brute} lemma3={lemma3} sp_tree={sp}",
                    p.relations().collect::<Vec<_>>()
                )
            })?;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{count} posets agree in {:.2?}", start.elapsed()))
}

fn lemma4(family: &[Poset]) -> Outcome {
    let mut splits = 0;
    for p in family {
        let rels = || p.relations().collect::<Vec<_>>();
        let linear = !p.incomparability_graph().is_connected();
        let s = lemma4_witness(p).map_err(|e| format!("relations={:?}: {e}", rels()))?;
        check(s.is_some() == linear, || {
            format!("relations={:?}: split {s:?}, linear sum {linear}", rels())
        })?;
        if let Some(s) = s {
            splits += 1;
            let below =
                |lo: &cograph::VertexSet, hi: &cograph::VertexSet| lo.iter().all(|a| hi.iter().all(|b| p.less(a, b)));
            let sizes = s.p1.len() + s.p2.len() + s.p3.len();
            let ok = sizes == p.order()
                && s.p2.contains(s.x)
                && below(&s.p1, &s.p2)
                && below(&s.p1, &s.p3)
                && below(&s.p2, &s.p3)
                && s.is_valid(p);
            check(ok, || format!("relations={:?}: layers out of order {s:?}", rels()))?;
        }
    }
    Ok(format!("{} posets, {splits} splits", family.len()))
}

fn endpoints(family: &[Poset]) -> Outcome {
    let mut calls = 0;
    for p in family {
        for x in p.elements() {
            calls += 1;
            let rels = || p.relations().collect::<Vec<_>>();
            let w = endpoint_witness(p, x).map_err(|e| format!("relations={:?} x={x}: {e}", rels()))?;
            let chain = p.maximal_chain_through(x).unwrap();
            let end = if w.side == Side::Up { chain.top } else { chain.bottom };
            let inc: Vec<_> = p.elements().filter(|&t| t != x && !p.comparable(x, t)).collect();
            check(w.endpoint == end && inc.iter().all(|&t| p.comparable(end, t)), || {
                format!("relations={:?} x={x}: bad endpoint {w:?}", rels())
            })?;
        }
    }
    Ok(format!("{calls} endpoint witnesses"))
}

fn kelly() -> Outcome {
    let mut count = 0;
    let mut prime = 0;
    for n in 0..=4 {
        for p in enumerate_posets(n).unwrap() {
            count += 1;
            let a = is_prime_poset(&p).unwrap();
            let b = is_prime_graph(&p.comparability_graph()).unwrap();
            prime += a as usize;
            check(a == b, || {
                format!(
                    "relations={:?}: poset prime {a}, comparability prime {b}",
                    p.relations().collect::<Vec<_>>()
                )
            })?;
        }
    }
    Ok(format!("{count} posets, {prime} prime"))
}

fn round_trips() -> Outcome {
    let start = Instant::now();
    let mut sizes = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..10_000u64 {
        let n = sizes.gen_range(1..=64);
        let t = rand_cotree(n, Seed(i)).unwrap();
        let back = cotree(&cotree_to_graph(&t).unwrap());
        check(back.as_ref() == Ok(&t), || {
            format!("cotree seed {i} n={n}: got {back:?}")
        })?;
        let n = sizes.gen_range(1..=64);
        let t = rand_sptree(n, Seed(i)).unwrap();
        let back = sp_tree(&sp_tree_to_poset(&t).unwrap());
        check(back.as_ref() == Ok(&t), || {
            format!("sp-tree seed {i} n={n}: got {back:?}")
        })?;
    }
    for i in 0..1_000u64 {
        let n = sizes.gen_range(1..=40);
        let t = rand_cotree(n, Seed(1 << 32 | i)).unwrap();
        let p = orient_cotree(&t).unwrap();
        check(p.comparability_graph() == cotree_to_graph(&t).unwrap(), || {
            format!("orientation seed {i} n={n}: comparability graph differs")
        })?;
        check(brute_n(&p).is_none(), || format!("orientation seed {i} n={n}: N found"))?;
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "2x10^4 tree round trips + 10^3 orientations in {:.2?}",
        start.elapsed()
    ))
}

fn h_truncations() -> Outcome {
    for n in 1..=200 {
        let g = gen_h(n).unwrap();
        check(n < 2 || g.is_connected(), || format!("gen_h({n}) disconnected"))?;
        check(is_cograph(&g), || format!("gen_h({n}) not a cograph"))?;
        check(n > 9 || brute_p4(&g).is_none(), || format!("gen_h({n}) has a P4"))?;
        let w = theorem2_witness(&g).map_err(|e| format!("gen_h({n}): {e}"))?;
        // K1 has no neighbors at all, so N_x is empty there.
        check(n < 2 || w.is_some_and(|w| w.is_valid(&g)), || {
            format!("gen_h({n}): no witness")
        })?;
    }
    Ok("n = 1..200".into())
}

fn performance() -> Outcome {
    let n = 10_000;
    let t = rand_cotree(n, Seed(2024)).unwrap();
    let g = cotree_to_graph(&t).unwrap();
    let start = Instant::now();
    let back = cotree(&g);
    let cotree_time = start.elapsed();
    check(back.as_ref() == Ok(&t), || "cotree mismatch".into())?;
    check(cotree_time < Duration::from_secs(10), || {
        format!("cotree took {cotree_time:.2?}")
    })?;

    let s = rand_sptree(n, Seed(2024)).unwrap();
    let p = sp_tree_to_poset(&s).unwrap();
    let start = Instant::now();
    let back = sp_tree(&p);
    let sp_time = start.elapsed();
    check(back.as_ref() == Ok(&s), || "sp_tree mismatch".into())?;
    check(sp_time < Duration::from_secs(10), || {
        format!("sp_tree took {sp_time:.2?}")
    })?;
    Ok(format!(
        "cotree {cotree_time:.2?} ({} edges), sp_tree {sp_time:.2?} ({} relations)",
        g.edge_count(),
        p.relation_count()
    ))
}

fn main() -> ExitCode {
    let graphs = connected_p4_free();
    let posets = connected_nfree_posets();
    let criteria: Vec<Criterion> = vec![
        ("1 cograph equivalence", Box::new(theorem1)),
        ("2 co-split witness", Box::new(|| theorem2(&graphs))),
        ("3 inc(x) modules and N(x) partition", Box::new(|| lemmas_1_2(&graphs))),
        ("4 minimal N1 selection", Box::new(|| corollary1(&graphs))),
        ("5 N-free equivalence", Box::new(lemma3_sp)),
        ("6 linear split", Box::new(|| lemma4(&posets))),
        ("7 chain endpoint", Box::new(|| endpoints(&posets))),
        ("8 primality correspondence", Box::new(kelly)),
        ("9 round trips", Box::new(round_trips)),
        ("10 integer graph truncations", Box::new(h_truncations)),
        ("11 performance floor", Box::new(performance)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
