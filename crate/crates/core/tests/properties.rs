use cograph::oracles::{brute_n, brute_p4, enumerate_modules, rand_cotree, rand_gnp, rand_poset, rand_sptree, Seed};
use cograph::text::{parse_graph, parse_poset, write_graph, write_poset};
use cograph::{
    cotree, cotree_to_graph, endpoint_witness, find_n, is_cograph, lemma4_witness, orient_cotree, sp_tree,
    sp_tree_to_poset, theorem2_witness, Error, Graph, NFreeMethod, RelationMode, VertexSet,
};
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = Graph> {
    (1usize..=9, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, s)| rand_gnp(n, p, Seed(s)).unwrap())
}

fn cograph_graph() -> impl Strategy<Value = Graph> {
    (1usize..=40, any::<u64>()).prop_map(|(n, s)| cotree_to_graph(&rand_cotree(n, Seed(s)).unwrap()).unwrap())
}

fn poset() -> impl Strategy<Value = cograph::Poset> {
    (1usize..=9, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, s)| rand_poset(n, p, Seed(s)).unwrap())
}

fn sp_poset() -> impl Strategy<Value = cograph::Poset> {
    (1usize..=40, any::<u64>()).prop_map(|(n, s)| sp_tree_to_poset(&rand_sptree(n, Seed(s)).unwrap()).unwrap())
}

proptest! {
    #[test]
    fn neighborhood_partition(g in graph()) {
        for x in g.vertices() {
            let nb = g.neighbors(x).unwrap();
            let inc = g.inc_set(x).unwrap();
            prop_assert!(!nb.contains(x) && !inc.contains(x));
            prop_assert_eq!(nb.len() + inc.len() + 1, g.order());
            prop_assert!(nb.iter().all(|v| !inc.contains(v)));
            prop_assert!(g.n_x(x).unwrap().is_subset(&nb));
        }
    }

    #[test]
    fn components_partition_vertices(g in graph()) {
        for part in [g.components(), g.co_components()] {
            let mut all: Vec<u32> = part.blocks().iter().flat_map(|b| b.iter()).collect();
            all.sort_unstable();
            prop_assert_eq!(all, g.vertices().collect::<Vec<_>>());
        }
        prop_assert_eq!(g.co_components(), g.complement().components());
        let (whole, map) = g.induced(&g.vertices().collect()).unwrap();
        prop_assert_eq!(&whole, &g);
        prop_assert_eq!(map, g.vertices().collect::<Vec<_>>());
    }

    #[test]
    fn is_module_matches_oracle(g in graph()) {
        let modules = enumerate_modules(&g).unwrap();
        for mask in 0u32..1 << g.order() {
            let s: VertexSet = (0..g.order() as u32).filter(|v| mask >> v & 1 == 1).collect();
            prop_assert_eq!(g.is_module(&s).unwrap(), modules.contains(&s));
        }
    }

    #[test]
    fn recognition_matches_brute_force(g in graph()) {
        prop_assert_eq!(is_cograph(&g), brute_p4(&g).is_none());
        match cotree(&g) {
            Ok(t) => {
                prop_assert!(t.is_canonical());
                prop_assert_eq!(cotree_to_graph(&t).unwrap(), g);
            }
            Err(Error::ContainsP4(w)) => prop_assert!(w.is_valid(&g)),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn cotree_round_trip(n in 1usize..=80, s in any::<u64>()) {
        let t = rand_cotree(n, Seed(s)).unwrap();
        prop_assert_eq!(cotree(&cotree_to_graph(&t).unwrap()).unwrap(), t);
    }

    #[test]
    fn connected_cographs_split(g in cograph_graph()) {
        if g.order() >= 2 && g.is_connected() {
            let w = theorem2_witness(&g).unwrap().unwrap();
            prop_assert!(w.is_valid(&g));
        }
    }

    #[test]
    fn nfree_methods_agree(p in poset()) {
        let brute = brute_n(&p);
        let lemma3 = find_n(&p, NFreeMethod::Lemma3);
        prop_assert_eq!(brute.is_none(), lemma3.is_none());
        if let Some(w) = lemma3 {
            prop_assert!(w.is_valid(&p));
        }
        match sp_tree(&p) {
            Ok(t) => {
                prop_assert!(brute.is_none());
                prop_assert_eq!(sp_tree_to_poset(&t).unwrap(), p);
            }
            Err(Error::ContainsN(w)) => prop_assert!(w.is_valid(&p)),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn sp_round_trip(n in 1usize..=80, s in any::<u64>()) {
        let t = rand_sptree(n, Seed(s)).unwrap();
        prop_assert_eq!(sp_tree(&sp_tree_to_poset(&t).unwrap()).unwrap(), t);
    }

    #[test]
    fn orientation_realizes_cotree(n in 1usize..=30, s in any::<u64>()) {
        let t = rand_cotree(n, Seed(s)).unwrap();
        let p = orient_cotree(&t).unwrap();
        prop_assert!(p.is_well_formed());
        prop_assert_eq!(p.comparability_graph(), cotree_to_graph(&t).unwrap());
        prop_assert!(find_n(&p, NFreeMethod::Lemma3).is_none());
    }

    #[test]
    fn comparability_graphs_are_complementary(p in poset()) {
        let comp = p.comparability_graph();
        prop_assert_eq!(p.incomparability_graph(), comp.complement());
    }

    #[test]
    fn maximal_chains(p in poset()) {
        for x in p.elements() {
            let c = p.maximal_chain_through(x).unwrap();
            prop_assert!(c.elements.contains(&x));
            prop_assert!(c.elements.windows(2).all(|w| p.less(w[0], w[1])));
            prop_assert_eq!(c.bottom, c.elements[0]);
            prop_assert_eq!(c.top, *c.elements.last().unwrap());
            for v in p.elements().filter(|v| !c.elements.contains(v)) {
                prop_assert!(c.elements.iter().any(|&e| !p.comparable(v, e)));
            }
        }
    }

    #[test]
    fn connected_sp_posets(p in sp_poset()) {
        if p.order() >= 2 && p.is_connected() {
            let s = lemma4_witness(&p).unwrap().unwrap();
            prop_assert!(s.is_valid(&p));
            for x in p.elements() {
                let w = endpoint_witness(&p, x).unwrap();
                let inc = p.inc_set(x).unwrap();
                prop_assert!(inc.iter().all(|t| p.comparable(w.endpoint, t)));
            }
        }
    }

    #[test]
    fn text_round_trip(g in graph(), p in poset()) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap().value, g);
        let back = parse_poset(&write_poset(&p)).unwrap().build(RelationMode::Full).unwrap();
        prop_assert_eq!(back.value, p);
    }

    #[test]
    fn generators_are_reproducible(n in 1usize..=30, s in any::<u64>()) {
        let a = serde_json::to_string(&rand_cotree(n, Seed(s)).unwrap()).unwrap();
        let b = serde_json::to_string(&rand_cotree(n, Seed(s)).unwrap()).unwrap();
        prop_assert_eq!(a, b);
        prop_assert_eq!(rand_poset(n, 0.3, Seed(s)).unwrap(), rand_poset(n, 0.3, Seed(s)).unwrap());
    }
}
