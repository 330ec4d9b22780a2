use std::io::Read;
use std::path::Path;

use cograph::oracles::{self, compare::compare, FixtureRecord, Seed};
use cograph::text::{self, Labeled};
use cograph::{
    cotree_to_graph, endpoint_witness, find_n, gen_h_window, lemma4_witness, sp_tree, sp_tree_to_poset,
    theorem2_witness, Cotree, Error, Graph, NFreeMethod, Poset, RelationMode, VertexId, VertexSet,
};
use serde_json::{json, Value};

use crate::{GenKind, Method, PosetAction, Property};

pub struct Output {
    pub code: u8,
    pub stdout: String,
}

type CmdResult = Result<Output, String>;

fn emit(code: u8, value: Value) -> CmdResult {
    Ok(Output {
        code,
        stdout: format!("{value}\n"),
    })
}

fn emit_typed(code: u8, value: &impl serde::Serialize) -> CmdResult {
    let line = serde_json::to_string(value).expect("plain data");
    Ok(Output {
        code,
        stdout: line + "\n",
    })
}

fn read_input(path: &Path) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<Labeled<Graph>, String> {
    let text = read_input(path)?;
    text::parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_poset(path: &Path, full: bool) -> Result<Labeled<Poset>, String> {
    let text = read_input(path)?;
    let input = text::parse_poset(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let mode = if full { RelationMode::Full } else { RelationMode::Covers };
    let label = |v: VertexId| input.labels[v as usize];
    input.build(mode).map_err(|e| match e {
        Error::Cycle(u, v) => format!("cycle error: relation {} < {} closes a cycle", label(u), label(v)),
        Error::NotClosed(u, v) => {
            format!(
                "relation is not transitively closed: {} < {} is implied but missing",
                label(u),
                label(v)
            )
        }
        e => e.to_string(),
    })
}

fn labels<T>(inst: &Labeled<T>, s: &VertexSet) -> Vec<VertexId> {
    s.iter().map(|v| inst.label(v)).collect()
}

fn quad<T>(inst: &Labeled<T>, q: [VertexId; 4]) -> Value {
    json!(q.map(|v| inst.label(v)))
}

pub fn graph_check(path: &Path, property: Property) -> CmdResult {
    let g = load_graph(path)?;
    let name = match property {
        Property::P4free => "p4free",
        Property::Cograph => "cograph",
    };
    if g.value.order() == 0 {
        return emit(0, json!({"property": name, "holds": true, "order": 0, "cotree": null}));
    }
    match cograph::cotree(&g.value) {
        Ok(t) => emit(
            0,
            json!({
                "property": name,
                "holds": true,
                "order": g.value.order(),
                "edges": g.value.edge_count(),
                "cotree": {
                    "root": root_kind(&t),
                    "nodes": t.node_count(),
                    "depth": t.depth(),
                },
            }),
        ),
        Err(Error::ContainsP4(w)) => emit(1, json!({"property": name, "holds": false, "witness": quad(&g, w.0)})),
        Err(e) => Err(e.to_string()),
    }
}

fn root_kind(t: &Cotree) -> &'static str {
    match t {
        Cotree::Leaf { .. } => "leaf",
        Cotree::Series { .. } => "series",
        Cotree::Parallel { .. } => "parallel",
    }
}

pub fn cotree(path: &Path, dot: bool) -> CmdResult {
    let g = load_graph(path)?;
    match cograph::cotree(&g.value) {
        Ok(t) => {
            let t = t.map_leaves(&|v| g.label(v));
            if dot {
                Ok(Output {
                    code: 0,
                    stdout: t.to_dot(),
                })
            } else {
                emit_typed(0, &t)
            }
        }
        Err(Error::ContainsP4(w)) => emit(1, json!({"witness": quad(&g, w.0)})),
        Err(e) => Err(e.to_string()),
    }
}

pub fn theorem2(path: &Path) -> CmdResult {
    let g = load_graph(path)?;
    match theorem2_witness(&g.value) {
        Ok(Some(w)) => emit(
            0,
            json!({
                "x": g.label(w.x),
                "N_x": labels(&g, &w.universal_neighbors),
                "split": [labels(&g, &w.co_split[0]), labels(&g, &w.co_split[1])],
            }),
        ),
        Ok(None) => {
            let p4 = match cograph::cotree(&g.value) {
                Err(Error::ContainsP4(w)) => quad(&g, w.0),
                _ => Value::Null,
            };
            emit(
                1,
                json!({
                    "witness": null,
                    "report": "no witness: complement connected (input contains a P4 if finite)",
                    "p4": p4,
                }),
            )
        }
        Err(Error::ContainsP4(w)) => emit(
            1,
            json!({
                "witness": null,
                "report": "N_x is not joined to the rest of the graph: input contains a P4",
                "p4": quad(&g, w.0),
            }),
        ),
        Err(e) => Err(e.to_string()),
    }
}

pub fn poset(path: &Path, action: PosetAction, full: bool, x: Option<u32>, method: Method, dot: bool) -> CmdResult {
    let p = load_poset(path, full)?;
    let some_n = |p: &Labeled<Poset>| find_n(&p.value, NFreeMethod::Brute).map_or(Value::Null, |w| quad(p, w.0));
    match action {
        PosetAction::Nfree => {
            let method = match method {
                Method::Lemma3 => NFreeMethod::Lemma3,
                Method::Brute => NFreeMethod::Brute,
            };
            match find_n(&p.value, method) {
                None => emit(0, json!({"nfree": true})),
                Some(w) => emit(1, json!({"nfree": false, "witness": quad(&p, w.0)})),
            }
        }
        PosetAction::Sptree => match sp_tree(&p.value) {
            Ok(t) => {
                let t = t.map_leaves(&|v| p.label(v));
                if dot {
                    Ok(Output {
                        code: 0,
                        stdout: t.to_dot(),
                    })
                } else {
                    emit_typed(0, &t)
                }
            }
            Err(Error::ContainsN(w)) => emit(1, json!({"witness": quad(&p, w.0)})),
            Err(e) => Err(e.to_string()),
        },
        PosetAction::Lemma4 => match lemma4_witness(&p.value) {
            Ok(Some(s)) => emit(
                0,
                json!({
                    "x": p.label(s.x),
                    "p1": labels(&p, &s.p1),
                    "p2": labels(&p, &s.p2),
                    "p3": labels(&p, &s.p3),
                }),
            ),
            Ok(None) => emit(
                1,
                json!({
                    "linear_split": null,
                    "report": "every C_x is empty: not a linear sum",
                    "witness": some_n(&p),
                }),
            ),
            Err(Error::ContainsN(w)) => emit(1, json!({"linear_split": null, "witness": quad(&p, w.0)})),
            Err(e) => Err(e.to_string()),
        },
        PosetAction::Endpoint => {
            let label = x.ok_or("endpoint needs --x")?;
            let id = p.id_of(label).ok_or_else(|| format!("--x {label}: no such element"))?;
            match endpoint_witness(&p.value, id) {
                Ok(w) => emit(0, json!({"x": label, "endpoint": p.label(w.endpoint), "side": w.side})),
                Err(Error::EndpointViolation {
                    x,
                    top,
                    top_miss,
                    bottom,
                    bottom_miss,
                }) => emit(
                    1,
                    json!({
                        "violation": {
                            "x": p.label(x),
                            "top": p.label(top),
                            "top_miss": p.label(top_miss),
                            "bottom": p.label(bottom),
                            "bottom_miss": p.label(bottom_miss),
                        },
                        "witness": some_n(&p),
                    }),
                ),
                Err(e) => Err(e.to_string()),
            }
        }
    }
}

pub fn gen(kind: GenKind, size: usize, p: Option<f64>, seed: u64, offset: i64, ndjson: bool) -> CmdResult {
    let need_p = || p.ok_or_else(|| "this kind needs an edge probability".to_string());
    let err = |e: Error| e.to_string();
    let out = match kind {
        GenKind::H => Instance::Graph(gen_h_window(size, offset).map_err(err)?),
        GenKind::Cotree => {
            let t = oracles::rand_cotree(size, Seed(seed)).map_err(err)?;
            Instance::Graph(cotree_to_graph(&t).map_err(err)?)
        }
        GenKind::Sptree => {
            let t = oracles::rand_sptree(size, Seed(seed)).map_err(err)?;
            Instance::Poset(sp_tree_to_poset(&t).map_err(err)?)
        }
        GenKind::Gnp => Instance::Graph(oracles::rand_gnp(size, need_p()?, Seed(seed)).map_err(err)?),
        GenKind::Poset => Instance::Poset(oracles::rand_poset(size, need_p()?, Seed(seed)).map_err(err)?),
    };
    let stdout = match (out, ndjson) {
        (Instance::Graph(g), false) => text::write_graph(&g),
        (Instance::Poset(p), false) => text::write_poset(&p),
        (Instance::Graph(g), true) => FixtureRecord::graph(&g, seed).to_line() + "\n",
        (Instance::Poset(p), true) => FixtureRecord::poset(&p, seed).to_line() + "\n",
    };
    Ok(Output { code: 0, stdout })
}

enum Instance {
    Graph(Graph),
    Poset(Poset),
}

pub fn oracle_compare(max_graph_n: usize, max_poset_n: usize) -> CmdResult {
    let report = compare(max_graph_n, max_poset_n).map_err(|e| e.to_string())?;
    let code = if report.counterexample.is_some() { 1 } else { 0 };
    emit_typed(code, &report)
}
