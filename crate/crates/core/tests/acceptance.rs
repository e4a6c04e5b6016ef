//! Acceptance criteria, one pass/fail line each. Exits non-zero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use chordalkit::decomposition::{atom_tree_from_clique_tree, dcl_atom_tree, dcl_mlsm_clique_tree};
use chordalkit::hooks;
use chordalkit::labeling::{check_dcl, Known};
use chordalkit::oracle::fixtures::{fig1_h, fig3_g, fig4_g, fig5_g, fig6_g};
use chordalkit::oracle::{
    atoms_brute, clique_minimal_separators, gen, is_chordal, is_mccomp_peo, is_minimal_triangulation, is_pmo,
    maximal_cliques, minimal_separators, validate_atom_tree, validate_clique_tree, Family, GeneratorConfig,
};
use chordalkit::search::{complement_mls, mls, moplex_mls, moplex_mlsm, triangulation_from_ordering};
use chordalkit::tree::linear::{lexbfs_clique_tree, mcs_clique_tree};
use chordalkit::tree::{
    clique_tree_from_peo, complement_mls_clique_tree, complement_mls_generators, dcl_mls_clique_tree,
    generators_from_tree, mls_clique_tree, CliqueTreeResult,
};
use chordalkit::{lexdfs, with_builtin, Builtin, Graph, LabelingStructure, TieBreak, VertexSet};

const SWEEP: u64 = 100;
const PERF_N: usize = 100_000;
const PERF_LIMIT: Duration = Duration::from_secs(10);

type Check = Result<String, Box<dyn std::error::Error>>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+).into());
        }
    };
}

fn chordal_corpus() -> Vec<Graph> {
    (0..SWEEP)
        .map(|seed| gen(&GeneratorConfig::new(Family::Chordal, seed, 4, 9)))
        .collect()
}

fn cochordal_corpus() -> Vec<Graph> {
    (0..SWEEP)
        .map(|seed| gen(&GeneratorConfig::new(Family::CoChordal, 1000 + seed, 4, 9)))
        .collect()
}

fn connected_corpus() -> Vec<Graph> {
    (0..SWEEP)
        .map(|seed| gen(&GeneratorConfig::new(Family::Connected, 2000 + seed, 4, 9).with_density(0.35)))
        .collect()
}

fn is_dcl(b: Builtin) -> bool {
    with_builtin!(b, l => l.dcl_known() == Known::Yes)
}

fn names(g: &Graph, s: &VertexSet) -> String {
    s.display(g).to_string()
}

fn set_of(g: &Graph, names: &[&str]) -> VertexSet {
    names.iter().map(|n| g.vertex(n).unwrap()).collect()
}

fn final_labels<L: LabelingStructure>(
    g: &Graph,
    l: &L,
    trace: &chordalkit::search::SearchTrace<L::Label>,
) -> Vec<(String, String)> {
    trace
        .final_labels()
        .iter()
        .enumerate()
        .map(|(v, lab)| (g.name(v).to_string(), l.render(lab)))
        .collect()
}

fn expect_labels(
    what: &str,
    got: Vec<(String, String)>,
    want: &[(&str, &str)],
) -> Result<(), Box<dyn std::error::Error>> {
    let want: Vec<(String, String)> = want.iter().map(|&(v, l)| (v.to_string(), l.to_string())).collect();
    ensure!(got == want, "{what}: labels {got:?}, expected {want:?}");
    Ok(())
}

fn ac1() -> Check {
    let ordering = |n: usize| -> Vec<String> {
        ["a", "b", "c", "d", "e", "f"][..n]
            .iter()
            .map(|s| s.to_string())
            .collect()
    };
    let g = fig1_h().graph;
    let tb = TieBreak::reproduce(&g, &ordering(6))?;
    let (alpha, trace) = mls(&g, &lexdfs(), &tb)?;
    ensure!(alpha.names(&g) == ordering(6), "fig1_H ordering {:?}", alpha.names(&g));
    expect_labels(
        "fig1_H",
        final_labels(&g, &lexdfs(), &trace),
        &[
            ("a", "(2,6)"),
            ("b", "(6)"),
            ("c", "(4,5)"),
            ("d", "(5)"),
            ("e", "(6)"),
            ("f", "()"),
        ],
    )?;

    let g = fig3_g().graph;
    let tb = TieBreak::reproduce(&g, &ordering(6))?;
    let (alpha, trace) = complement_mls(&g, &lexdfs(), &tb)?;
    ensure!(alpha.names(&g) == ordering(6), "fig3_G ordering {:?}", alpha.names(&g));
    expect_labels(
        "fig3_G",
        final_labels(&g, &lexdfs(), &trace),
        &[
            ("a", "(3,4,5)"),
            ("b", "(3,4,5)"),
            ("c", "(6)"),
            ("d", "(6)"),
            ("e", "()"),
            ("f", "()"),
        ],
    )?;

    let numbered = |n: usize| -> Vec<String> { (1..=n).map(|i| i.to_string()).collect() };
    let g = fig5_g().graph;
    let (alpha, trace) = mls(&g, &lexdfs(), &TieBreak::reproduce(&g, &numbered(7))?)?;
    ensure!(alpha.names(&g) == numbered(7), "fig5_G ordering {:?}", alpha.names(&g));
    expect_labels(
        "fig5_G",
        final_labels(&g, &lexdfs(), &trace),
        &[
            ("1", "(2,4,6)"),
            ("2", "(3,7)"),
            ("3", "(4,6)"),
            ("4", "(5)"),
            ("5", "(6)"),
            ("6", "(7)"),
            ("7", "()"),
        ],
    )?;

    let g = fig6_g().graph;
    let (alpha, trace) = mls(&g, &lexdfs(), &TieBreak::reproduce(&g, &numbered(6))?)?;
    ensure!(alpha.names(&g) == numbered(6), "fig6_G ordering {:?}", alpha.names(&g));
    expect_labels(
        "fig6_G",
        final_labels(&g, &lexdfs(), &trace),
        &[
            ("1", "(5)"),
            ("2", "(3,6)"),
            ("3", "(5)"),
            ("4", "(5)"),
            ("5", "(6)"),
            ("6", "()"),
        ],
    )?;
    Ok("fig1_H, fig3_G, fig5_G, fig6_G labels exact".into())
}

fn ac2() -> Check {
    let h = fig1_h().graph;
    let tb = TieBreak::reproduce(&h, &["a", "b", "c", "d", "e", "f"])?;
    let t = dcl_mls_clique_tree(&h, &lexdfs(), &tb, false)?;
    let d = h.vertex("d")?;
    let step = t.steps.iter().find(|s| s.vertex == d).ok_or("no step for d")?;
    ensure!(
        step.iteration == 4 && !step.started,
        "d at iteration {} started={}",
        step.iteration,
        step.started
    );
    let joined = t.clique(step.clique);
    ensure!(
        *joined == set_of(&h, &["c", "d", "e", "f"]),
        "d joined {} instead of growing {{e,f}}",
        names(&h, joined)
    );
    let violations: Vec<String> = validate_clique_tree(&h, &t)?.iter().map(|v| v.describe(&h)).collect();
    ensure!(
        violations.iter().any(|v| v.contains("{c,d,e,f} is not a clique")),
        "validation did not flag the merged clique: {violations:?}"
    );

    let report = check_dcl(&lexdfs(), 4)?;
    let witness = report.witness.as_ref().ok_or("check_dcl(lexdfs, 4) passed")?;
    ensure!(witness.replay(&lexdfs()), "lexdfs witness does not replay");
    for b in [Builtin::Mcs, Builtin::LexBfs, Builtin::Mns] {
        let report = with_builtin!(b, l => check_dcl(&l, 6))?;
        ensure!(report.passed(), "check_dcl({b}, 6) failed: {:?}", report.witness);
    }
    Ok(format!(
        "d merged into {{e,f}} at i=4, {} violations; lexdfs witness n={}; mcs/lexbfs/mns pass at 6",
        violations.len(),
        witness.n
    ))
}

fn ac3(corpus: &[Graph]) -> Check {
    let mut trees = 0;
    for (seed, h) in corpus.iter().enumerate() {
        let cliques = maximal_cliques(h)?;
        let seps = minimal_separators(h)?;
        for b in Builtin::ALL {
            let tb = TieBreak::SeededRandom(seed as u64);
            let t = with_builtin!(b, l => mls_clique_tree(h, &l, &tb)).map_err(|e| format!("seed {seed} {b}: {e}"))?;
            let v = validate_clique_tree(h, &t)?;
            ensure!(
                v.is_empty(),
                "seed {seed} {b}: {:?}",
                v.iter().map(|x| x.describe(h)).collect::<Vec<_>>()
            );
            ensure!(
                t.clique_set() == cliques,
                "seed {seed} {b}: cliques differ from brute force"
            );
            ensure!(
                *t.separators.as_set() == seps,
                "seed {seed} {b}: separators differ from brute force"
            );
            ensure!(t.tree_edges.len() + 1 == t.node_count(), "seed {seed} {b}: not a tree");
            if is_dcl(b) {
                let d = with_builtin!(b, l => dcl_mls_clique_tree(h, &l, &tb, true))?;
                ensure!(
                    d == t,
                    "seed {seed} {b}: dcl_mls_clique_tree differs from mls_clique_tree"
                );
            }
            trees += 1;
        }
    }
    Ok(format!("{trees} trees valid; DCL variant identical for mcs/lexbfs/mns"))
}

fn ac4(corpus: &[Graph]) -> Check {
    let mut runs = 0;
    for (seed, h) in corpus.iter().enumerate() {
        for b in Builtin::ALL {
            for tb in [TieBreak::LowestIndex, TieBreak::SeededRandom(seed as u64)] {
                let alpha = with_builtin!(b, l => moplex_mls(h, &l, &tb).map(|r| r.0))?;
                ensure!(
                    is_mccomp_peo(h, &alpha),
                    "seed {seed} {b}: {:?} is not MCComp",
                    alpha.names(h)
                );
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} orderings are MCComp peos"))
}

fn ac5(corpus: &[Graph]) -> Check {
    let mut runs = 0;
    for (seed, g) in corpus.iter().enumerate() {
        let c = g.complement();
        let cliques = maximal_cliques(&c)?;
        let seps = minimal_separators(&c)?;
        for b in Builtin::ALL {
            let tb = TieBreak::SeededRandom(seed as u64);
            let t = with_builtin!(b, l => complement_mls_clique_tree(g, &l, &tb))
                .map_err(|e| format!("seed {seed} {b}: {e}"))?;
            let v = validate_clique_tree(&c, &t)?;
            ensure!(
                v.is_empty(),
                "seed {seed} {b}: {:?}",
                v.iter().map(|x| x.describe(&c)).collect::<Vec<_>>()
            );
            ensure!(
                t.clique_set() == cliques,
                "seed {seed} {b}: cliques differ from the complement's"
            );
            ensure!(
                *t.separators.as_set() == seps,
                "seed {seed} {b}: separators differ from the complement's"
            );
            let peo_tree = clique_tree_from_peo(&c, &t.ordering)?;
            ensure!(
                peo_tree.clique_set() == t.clique_set() && peo_tree.separators == t.separators,
                "seed {seed} {b}: differs from the tree built on the materialized complement"
            );
            let gens = with_builtin!(b, l => complement_mls_generators(g, &l, &tb))?;
            ensure!(
                gens == generators_from_tree(&t),
                "seed {seed} {b}: generators differ from the tree run"
            );
            ensure!(
                gens.gen_cliques.len() == gens.gen_separators.len() + 1,
                "seed {seed} {b}: generator counts"
            );
            runs += 1;
        }
    }
    Ok(format!("{runs} complement trees and generator runs agree"))
}

fn fill_is_minimal(g: &Graph, h: &Graph, fill: &[(usize, usize)]) -> bool {
    fill.iter().all(|&(u, v)| {
        let edges: Vec<(usize, usize)> = h.edges().filter(|&e| e != (u, v)).collect();
        let smaller = Graph::from_index_edges(g.names().to_vec(), &edges).expect("subgraph of h");
        !is_chordal(&smaller)
    })
}

fn ac6(corpus: &[Graph]) -> Check {
    let mut runs = 0;
    let mut fill_total = 0;
    for (seed, g) in corpus.iter().enumerate() {
        for b in Builtin::ALL {
            let tb = TieBreak::SeededRandom(seed as u64);
            let tri = with_builtin!(b, l => moplex_mlsm(g, &l, &tb).map(|r| r.0))?;
            ensure!(is_chordal(&tri.h), "seed {seed} {b}: H not chordal");
            ensure!(
                fill_is_minimal(g, &tri.h, &tri.fill),
                "seed {seed} {b}: a fill edge is removable"
            );
            ensure!(
                is_pmo(&tri.h, &tri.ordering),
                "seed {seed} {b}: ordering is not a pmo of H"
            );
            fill_total += tri.fill.len();
            runs += 1;
            if is_dcl(b) {
                let r = with_builtin!(b, l => dcl_mlsm_clique_tree(g, &l, &tb))?;
                let h = &r.triangulation.h;
                ensure!(is_chordal(h), "seed {seed} {b}: dcl H not chordal");
                ensure!(
                    fill_is_minimal(g, h, &r.triangulation.fill),
                    "seed {seed} {b}: dcl fill removable"
                );
                ensure!(
                    is_pmo(h, &r.triangulation.ordering),
                    "seed {seed} {b}: dcl ordering not a pmo"
                );
                let v = validate_clique_tree(h, &r.tree)?;
                ensure!(v.is_empty(), "seed {seed} {b}: tree of H invalid");
                runs += 1;
            }
        }
    }

    let g = fig4_g().graph;
    let tb = TieBreak::reproduce(&g, &["1", "2", "3", "4", "5"])?;
    let (alpha, _) = mls(&g, &chordalkit::lexbfs(), &tb)?;
    let tri = triangulation_from_ordering(&g, &alpha)?;
    let pair = |a: &str, b: &str| -> (usize, usize) {
        let (u, v) = (g.vertex(a).unwrap(), g.vertex(b).unwrap());
        (u.min(v), u.max(v))
    };
    let expected: BTreeSet<(usize, usize)> = [pair("2", "4"), pair("3", "4")].into_iter().collect();
    ensure!(tri.fill_set() == expected, "fig4_G fill {:?}", tri.fill);
    ensure!(
        !is_minimal_triangulation(&g, &tri.h),
        "fig4_G elimination-game fill passed minimality"
    );
    Ok(format!(
        "{runs} triangulations minimal ({fill_total} fill edges); fig4_G fill {{2,4}},{{3,4}} not minimal"
    ))
}

fn ac7(corpus: &[Graph]) -> Check {
    let mut runs = 0;
    for (seed, g) in corpus.iter().enumerate() {
        let brute = atoms_brute(g)?;
        let cms = clique_minimal_separators(g)?;
        for b in [Builtin::Mcs, Builtin::LexBfs, Builtin::Mns] {
            for k in 0..3u64 {
                let tb = TieBreak::SeededRandom(seed as u64 * 3 + k);
                let direct = with_builtin!(b, l => dcl_atom_tree(g, &l, &tb))?;
                ensure!(
                    direct.atom_set() == brute,
                    "seed {seed} {b} tb {k}: atoms differ from brute force"
                );
                let inter: BTreeSet<VertexSet> = direct.edge_intersections().into_iter().collect();
                ensure!(
                    inter == cms,
                    "seed {seed} {b} tb {k}: edge intersections differ from clique minimal separators"
                );
                let v = validate_atom_tree(g, &direct)?;
                ensure!(
                    v.is_empty(),
                    "seed {seed} {b} tb {k}: {:?}",
                    v.iter().map(|x| x.describe(g)).collect::<Vec<_>>()
                );
                let r = with_builtin!(b, l => dcl_mlsm_clique_tree(g, &l, &tb))?;
                let merged = atom_tree_from_clique_tree(g, &r.triangulation.h, &r.tree)?;
                ensure!(
                    merged.atom_set() == brute,
                    "seed {seed} {b} tb {k}: merged atoms differ"
                );
                runs += 1;
            }
        }
    }

    let g = fig4_g().graph;
    let t = dcl_atom_tree(&g, &chordalkit::mcs(), &TieBreak::LowestIndex)?;
    let want: BTreeSet<VertexSet> = [set_of(&g, &["1", "2", "4", "5"]), set_of(&g, &["2", "3", "5"])]
        .into_iter()
        .collect();
    ensure!(
        t.atom_set() == want,
        "fig4_G atoms {:?}",
        t.atoms.iter().map(|a| names(&g, a)).collect::<Vec<_>>()
    );
    let seps: Vec<String> = t.clique_separators.iter().map(|s| names(&g, s)).collect();
    ensure!(seps == ["{2,5}"], "fig4_G clique separators {seps:?}");
    Ok(format!(
        "{runs} atom trees agree with brute force and the merge; fig4_G atoms exact"
    ))
}

fn ac8(chordal: &[Graph], cochordal: &[Graph], connected: &[Graph]) -> Check {
    let _guard = hooks::force();
    hooks::take_violations();
    {
        let h = fig1_h().graph;
        let tb = TieBreak::reproduce(&h, &["a", "b", "c", "d", "e", "f"])?;
        dcl_mls_clique_tree(&h, &lexdfs(), &tb, false)?;
        let live = hooks::take_violations();
        ensure!(
            live.iter().any(|v| v.check == "partial-tree"),
            "hooks did not fire on the LexDFS counterexample"
        );
    }
    let mut runs = 0;
    for (seed, h) in chordal.iter().enumerate() {
        let tb = TieBreak::SeededRandom(seed as u64);
        for b in Builtin::ALL {
            with_builtin!(b, l => {
                mls(h, &l, &tb)?;
                mls_clique_tree(h, &l, &tb)?;
                if is_dcl(b) {
                    dcl_mls_clique_tree(h, &l, &tb, true)?;
                }
            });
            runs += 1;
        }
    }
    for (seed, g) in cochordal.iter().enumerate() {
        let tb = TieBreak::SeededRandom(seed as u64);
        for b in Builtin::ALL {
            with_builtin!(b, l => {
                complement_mls_clique_tree(g, &l, &tb)?;
            });
            runs += 1;
        }
    }
    for (seed, g) in connected.iter().enumerate() {
        let tb = TieBreak::SeededRandom(seed as u64);
        for b in [Builtin::Mcs, Builtin::LexBfs, Builtin::Mns] {
            with_builtin!(b, l => {
                moplex_mlsm(g, &l, &tb)?;
                dcl_atom_tree(g, &l, &tb)?;
            });
            runs += 1;
        }
    }
    let violations = hooks::take_violations();
    ensure!(
        violations.is_empty(),
        "{} violations, first: {} at {}: {}",
        violations.len(),
        violations[0].check,
        violations[0].iteration,
        violations[0].message
    );
    Ok(format!(
        "{runs} hooked runs, 0 violations (hooks confirmed live on the counterexample)"
    ))
}

fn ac9() -> Check {
    let cfg = GeneratorConfig::new(Family::Chordal, 9, PERF_N, PERF_N)
        .with_density(1.0)
        .with_max_attach(11);
    let h = gen(&cfg);
    ensure!(h.n() == PERF_N, "generated {} vertices", h.n());
    ensure!(
        (800_000..=1_200_000).contains(&h.m()),
        "generated m = {}, wanted about 10^6",
        h.m()
    );
    let mut parts = vec![format!("n={} m={}", h.n(), h.m())];
    for (name, build) in [
        (
            "mcs",
            mcs_clique_tree as fn(&Graph, bool) -> chordalkit::Result<CliqueTreeResult>,
        ),
        ("lexbfs", lexbfs_clique_tree),
    ] {
        let start = Instant::now();
        let t = build(&h, false)?;
        let elapsed = start.elapsed();
        ensure!(t.tree_edges.len() + 1 == t.node_count(), "{name}: not a tree");
        ensure!(
            elapsed < PERF_LIMIT,
            "{name}: {:.2} s exceeds {:?}",
            elapsed.as_secs_f64(),
            PERF_LIMIT
        );
        let start = Instant::now();
        let checked = build(&h, true)?;
        let verified = start.elapsed();
        ensure!(checked == t, "{name}: verified run differs");
        parts.push(format!(
            "{name} {:.2} s ({:.2} s verified, {} cliques)",
            elapsed.as_secs_f64(),
            verified.as_secs_f64(),
            t.node_count()
        ));
    }
    Ok(parts.join(", "))
}

fn main() {
    let chordal = chordal_corpus();
    let cochordal = cochordal_corpus();
    let connected = connected_corpus();
    type Criterion<'a> = (&'a str, Option<Duration>, Box<dyn Fn() -> Check + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("AC1 fixture labels exact", Some(Duration::from_secs(1)), Box::new(ac1)),
        (
            "AC2 LexDFS non-DCL regression",
            Some(Duration::from_secs(10)),
            Box::new(ac2),
        ),
        (
            "AC3 clique-tree sweep",
            Some(Duration::from_secs(60)),
            Box::new(|| ac3(&chordal)),
        ),
        ("AC4 pmo sweep", None, Box::new(|| ac4(&chordal))),
        ("AC5 complement sweep", None, Box::new(|| ac5(&cochordal))),
        ("AC6 minimal triangulation sweep", None, Box::new(|| ac6(&connected))),
        (
            "AC7 atom-tree equivalence",
            Some(Duration::from_secs(120)),
            Box::new(|| ac7(&connected)),
        ),
        (
            "AC8 debug invariant hooks",
            None,
            Box::new(|| ac8(&chordal, &cochordal, &connected)),
        ),
        ("AC9 linear clique-tree smoke benchmark", None, Box::new(ac9)),
    ];
    let mut failed = 0;
    for (name, limit, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(limit)) if elapsed > *limit => Err(format!("took longer than {limit:?}").into()),
            (o, _) => o,
        };
        let budget = limit.map_or(String::new(), |l| format!(", limit {} s", l.as_secs()));
        match outcome {
            Ok(detail) => println!("PASS {name} [{:.2} s{budget}]: {detail}", elapsed.as_secs_f64()),
            Err(detail) => {
                failed += 1;
                let detail = detail.to_string();
                println!("FAIL {name} [{:.2} s{budget}]: {detail}", elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
