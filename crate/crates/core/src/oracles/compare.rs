//! Exhaustive cross-checks of the engines against the oracles on every
//! labeled graph and poset up to a size bound.

use serde::Serialize;

use super::{
    brute_cograph_def, brute_n, brute_p4, enumerate_graphs, enumerate_modules, enumerate_poset_modules,
    enumerate_posets, guard, is_prime_graph, is_prime_poset, FixtureKind, FixtureRecord, Payload, GRAPH_ENUM_LIMIT,
    POSET_ENUM_LIMIT,
};
use crate::cograph::{
    corollary1_select, cotree, cotree_to_graph, inc_components, is_cograph, lemma2_partition, theorem2_witness,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poset::Poset;
use crate::sp::{endpoint_witness, find_n, lemma4_witness, sp_tree, sp_tree_to_poset, NFreeMethod, Side};

/// Name of the first failing check.
pub type Failure = &'static str;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub check: Failure,
    pub kind: FixtureKind,
    pub payload: Payload,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CompareReport {
    pub graphs_checked: usize,
    pub posets_checked: usize,
    pub counterexample: Option<Counterexample>,
}

fn ensure(ok: bool, name: Failure) -> std::result::Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(name)
    }
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0..1u32 << n).map(move |m| (0..n as u32).filter(|v| m >> v & 1 == 1).collect())
}

/// Runs every graph-side equivalence on `g`.
pub fn check_graph(g: &Graph) -> std::result::Result<(), Failure> {
    let n = g.order();
    let p4 = brute_p4(g);
    let cograph = is_cograph(g);
    ensure(cograph == p4.is_none(), "is_cograph vs brute_p4")?;
    if n <= super::COGRAPH_DEF_LIMIT {
        ensure(brute_cograph_def(g) == Ok(cograph), "brute_cograph_def vs brute_p4")?;
    }
    if n >= 1 {
        match cotree(g) {
            Ok(t) => ensure(
                t.is_canonical() && cotree_to_graph(&t).as_ref() == Ok(g),
                "cotree round trip",
            )?,
            Err(Error::ContainsP4(w)) => ensure(w.is_valid(g), "cotree P4 witness")?,
            Err(_) => return Err("cotree error"),
        }
    }
    let modules = enumerate_modules(g).map_err(|_| "module guard")?;
    ensure(
        subsets(n).all(|s| g.is_module(&s) == Ok(modules.contains(&s))),
        "is_module vs enumerate_modules",
    )?;
    if n >= 4 && is_prime_graph(g) == Ok(true) {
        ensure(p4.is_some(), "prime graph without P4")?;
    }
    if cograph && n >= 1 && g.is_connected() {
        check_connected_cograph(g)?;
    }
    Ok(())
}

fn check_connected_cograph(g: &Graph) -> std::result::Result<(), Failure> {
    let co_split = g.co_components().len() >= 2;
    match theorem2_witness(g) {
        Ok(Some(w)) => ensure(co_split && w.is_valid(g), "theorem2 witness")?,
        Ok(None) => ensure(!co_split, "theorem2 missing witness")?,
        Err(_) => return Err("theorem2 error"),
    }
    for x in g.vertices() {
        let comps = inc_components(g, x).map_err(|_| "inc_components error")?;
        for c in comps.blocks() {
            ensure(g.is_module(c) == Ok(true), "inc component not a module")?;
            let part = lemma2_partition(g, x, c).map_err(|_| "lemma2 error")?;
            ensure(part.is_valid(g, x), "lemma2 partition invalid")?;
        }
        if g.degree(x) > 0 {
            let y = corollary1_select(g, x).map_err(|_| "corollary1 error")?;
            ensure(g.n_x(x).is_ok_and(|nx| nx.contains(y)), "corollary1 outside N_x")?;
        }
    }
    Ok(())
}

/// Runs every poset-side equivalence on `p`.
pub fn check_poset(p: &Poset) -> std::result::Result<(), Failure> {
    let n = p.order();
    let brute = brute_n(p);
    let lemma3 = find_n(p, NFreeMethod::Lemma3);
    ensure(brute.is_none() == lemma3.is_none(), "brute_n vs lemma3")?;
    ensure(lemma3.is_none_or(|w| w.is_valid(p)), "lemma3 witness")?;
    if n >= 1 {
        match sp_tree(p) {
            Ok(t) => ensure(
                brute.is_none() && t.is_canonical() && sp_tree_to_poset(&t).as_ref() == Ok(p),
                "sp_tree round trip",
            )?,
            Err(Error::ContainsN(w)) => ensure(brute.is_some() && w.is_valid(p), "sp_tree N witness")?,
            Err(_) => return Err("sp_tree error"),
        }
    }
    let comp = p.comparability_graph();
    let inc = p.incomparability_graph();
    ensure(
        comp.edge_count() + inc.edge_count() == n * n.saturating_sub(1) / 2
            && comp.edges().all(|(u, v)| !inc.has_edge(u, v)),
        "comparability and incomparability graphs",
    )?;
    let modules = enumerate_poset_modules(p).map_err(|_| "module guard")?;
    ensure(
        subsets(n).all(|s| p.is_module(&s) == Ok(modules.contains(&s))),
        "poset is_module vs enumerate",
    )?;
    ensure(
        is_prime_poset(p).ok() == is_prime_graph(&comp).ok(),
        "poset primality vs comparability graph",
    )?;
    if n >= 1 && brute.is_none() && p.is_connected() {
        check_connected_nfree(p)?;
    }
    Ok(())
}

fn check_connected_nfree(p: &Poset) -> std::result::Result<(), Failure> {
    let linear = !p.incomparability_graph().is_connected();
    match lemma4_witness(p) {
        Ok(Some(s)) => ensure(linear && s.is_valid(p), "lemma4 split")?,
        Ok(None) => ensure(!linear, "lemma4 missing split")?,
        Err(_) => return Err("lemma4 error"),
    }
    for x in p.elements() {
        let w = endpoint_witness(p, x).map_err(|_| "endpoint violation")?;
        let chain = p.maximal_chain_through(x).map_err(|_| "chain error")?;
        let expected = match w.side {
            Side::Up => chain.top,
            Side::Down => chain.bottom,
        };
        let inc = p.inc_set(x).map_err(|_| "inc error")?;
        ensure(
            w.endpoint == expected && inc.iter().all(|t| p.comparable(w.endpoint, t)),
            "endpoint witness invalid",
        )?;
    }
    Ok(())
}

/// Checks every graph on `0..=max_graph_n` vertices and every poset on
/// `0..=max_poset_n` elements, stopping at the first failure.
pub fn compare(max_graph_n: usize, max_poset_n: usize) -> Result<CompareReport> {
    guard("oracle-compare graph order", GRAPH_ENUM_LIMIT, max_graph_n)?;
    guard("oracle-compare poset order", POSET_ENUM_LIMIT, max_poset_n)?;
    let mut report = CompareReport::default();
    for n in 0..=max_graph_n {
        for g in enumerate_graphs(n)? {
            report.graphs_checked += 1;
            if let Err(check) = check_graph(&g) {
                let r = FixtureRecord::graph(&g, 0);
                report.counterexample = Some(Counterexample {
                    check,
                    kind: r.kind,
                    payload: r.payload,
                });
                return Ok(report);
            }
        }
    }
    for n in 0..=max_poset_n {
        for p in enumerate_posets(n)? {
            report.posets_checked += 1;
            if let Err(check) = check_poset(&p) {
                let r = FixtureRecord::poset(&p, 0);
                report.counterexample = Some(Counterexample {
                    check,
                    kind: r.kind,
                    payload: r.payload,
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}
