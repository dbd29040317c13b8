//! Acceptance suite. Every criterion prints one line with its verdict and the
//! tolerance used (all comparisons are exact: rationals or integers mod p).
//!
//! Sub-checks marked `conflict` are known to disagree with the stated target;
//! they still count towards the printed FAIL, but the test asserts the
//! recorded value instead so that any change in behaviour is noticed.

use std::io::Write;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use parapath::baroracle::{bar_derived_series, bar_hh_dims, BarSlice};
use parapath::brauer::{brauer_groebner, build_quiver_and_cycles, invariant_report, parse_brauer, BrauerGraph};
use parapath::cli::{algebra, parse_algebra, AlgebraFile, Caps};
use parapath::corpus::{has_multi_edge, random_corpus, CorpusOptions};
use parapath::exactla::{FieldSpec, SparseVec};
use parapath::groebner::{complete, GroebnerBasis};
use parapath::pathalg::{llex_compare, parse_element, FreeElement, Path, Quiver};
use parapath::ppcomplex::{is_antisymmetric, jacobi_holds, loop_char_report, ParallelPaths};
use parapath::quotient::QuotientAlgebra;

const TOLERANCE: &str = "exact";

struct Sub {
    name: String,
    ok: bool,
    /// `Some(matches_record)` for a documented conflict.
    conflict: Option<bool>,
}

struct Criterion {
    id: u8,
    title: &'static str,
    subs: Vec<Sub>,
}

impl Criterion {
    fn new(id: u8, title: &'static str) -> Self {
        Criterion {
            id,
            title,
            subs: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.subs.push(Sub {
            name: name.into(),
            ok,
            conflict: None,
        });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, actual: T, expected: T) {
        let ok = actual == expected;
        let label = if ok {
            format!("{name}={actual:?}")
        } else {
            format!("{name}: expected {expected:?}, got {actual:?}")
        };
        self.check(label, ok);
    }

    /// A target that is known not to hold; `recorded` is what the
    /// implementation is documented to produce instead.
    fn conflict<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, actual: T, target: T, recorded: T) {
        let ok = actual == target;
        self.subs.push(Sub {
            name: format!("{name}: target {target:?}, got {actual:?} (documented conflict)"),
            ok,
            conflict: Some(actual == recorded),
        });
    }

    fn passed(&self) -> bool {
        self.subs.iter().all(|s| s.ok)
    }

    fn line(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let failed: Vec<&str> = self.subs.iter().filter(|s| !s.ok).map(|s| s.name.as_str()).collect();
        let passed = self.subs.iter().filter(|s| s.ok).count();
        let mut line = format!(
            "criterion {} [{}] tolerance={TOLERANCE}: {verdict} ({passed}/{} sub-checks)",
            self.id,
            self.title,
            self.subs.len()
        );
        if !failed.is_empty() {
            line += &format!("; failing: {}", failed.join("; "));
        }
        line
    }

    /// Sub-checks that are neither passing nor a documented conflict with
    /// the recorded outcome.
    fn unexpected(&self) -> Vec<&str> {
        self.subs
            .iter()
            .filter(|s| match s.conflict {
                None => !s.ok,
                Some(matches_record) => !matches_record,
            })
            .map(|s| s.name.as_str())
            .collect()
    }
}

fn fixture_text(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn alg(name: &str) -> QuotientAlgebra {
    algebra(&parse_algebra(&fixture_text(name)).unwrap(), Caps::default()).unwrap()
}

fn graph(name: &str) -> (FieldSpec, BrauerGraph) {
    parse_brauer(&fixture_text(name)).unwrap()
}

fn path_of(q: &Quiver, f: FieldSpec, text: &str) -> Path {
    parse_element(q, f, text).unwrap().tip_path().unwrap().clone()
}

/// Vector in `k(Q1//B)` from `(coefficient, arrow, basis path)` triples.
fn pairs(pp: &ParallelPaths, terms: &[(i64, &str, &str)]) -> SparseVec {
    let a = pp.algebra();
    let (q, f) = (a.quiver(), a.field());
    SparseVec::from_pairs(terms.iter().map(|&(c, arrow, path)| {
        let id = q.arrow_id(arrow).unwrap();
        let p = if path == "1" {
            Path::trivial(q.arrow(id).source)
        } else {
            path_of(q, f, path)
        };
        let b = a.index_of(&p).expect("basis path");
        let i = pp.q1b.index_of(id, b).expect("parallel pair");
        (i, f.from_i64(c))
    }))
}

/// Vector in `k(Tip//B)` from `(coefficient, tip, basis path)` triples.
fn tip_pairs(pp: &ParallelPaths, terms: &[(i64, &str, &str)]) -> SparseVec {
    let a = pp.algebra();
    let (q, f) = (a.quiver(), a.field());
    let tips = a.gb().tips();
    SparseVec::from_pairs(terms.iter().map(|&(c, tip, path)| {
        let g = tips.iter().position(|t| *t == path_of(q, f, tip)).expect("tip");
        let b = a.index_of(&path_of(q, f, path)).expect("basis path");
        (pp.tipb.index_of(g, b).expect("tip pair"), f.from_i64(c))
    }))
}

fn vertex_pair(pp: &ParallelPaths, vertex: &str, path: &str) -> usize {
    let a = pp.algebra();
    let q = a.quiver();
    let v = q.vertex_id(vertex).unwrap();
    let p = if path == "1" {
        Path::trivial(v)
    } else {
        path_of(q, a.field(), path)
    };
    pp.q0b.index_of(v, a.index_of(&p).unwrap()).unwrap()
}

fn same_ideal(gb: &GroebnerBasis, gens: &[&str]) -> bool {
    let q = gb.quiver().clone();
    let f = gb.field();
    let elements: Vec<FreeElement> = gens.iter().map(|g| parse_element(&q, f, g).unwrap()).collect();
    let other = complete(q, f, &elements, 50).unwrap();
    other.elements() == gb.elements()
}

fn kronecker() -> Criterion {
    let mut c = Criterion::new(1, "trivial extension of the Kronecker algebra");
    let a = alg("kronecker.alg");
    let pp = ParallelPaths::new(&a);
    c.eq("dim A", a.dim(), 8);
    c.eq("dim HH1", pp.hh1_dim(), 4);
    c.check("psi1*psi0=0", pp.is_complex());

    let psi0 = [
        ("1", "1", vec![(1, "a2", "a2"), (-1, "a1", "a1"), (1, "b2", "b2"), (-1, "b1", "b1")]),
        ("2", "1", vec![(1, "a1", "a1"), (-1, "a2", "a2"), (1, "b1", "b1"), (-1, "b2", "b2")]),
        ("1", "b1*b2", vec![]),
        ("2", "b2*b1", vec![]),
    ];
    let psi0_ok = psi0
        .iter()
        .all(|(v, p, terms)| pp.psi0_image(vertex_pair(&pp, v, p)) == pairs(&pp, terms));
    c.check("psi0 table", psi0_ok);

    let plus = vec![(1, "a1*a2", "b1*b2"), (1, "a2*a1", "b2*b1")];
    let minus = vec![(-1, "a1*a2", "b1*b2"), (-1, "a2*a1", "b2*b1")];
    let psi1 = [
        (("a1", "a1"), plus.clone()),
        (("a2", "a2"), plus),
        (("b1", "b1"), minus.clone()),
        (("b2", "b2"), minus),
        (("a1", "b1"), vec![(1, "a1*b2", "b1*b2"), (1, "b2*a1", "b2*b1")]),
        (("b2", "a2"), vec![(1, "a1*b2", "b1*b2"), (1, "b2*a1", "b2*b1")]),
        (("b1", "a1"), vec![(1, "b1*a2", "b1*b2"), (1, "a2*b1", "b2*b1")]),
        (("a2", "b2"), vec![(1, "b1*a2", "b1*b2"), (1, "a2*b1", "b2*b1")]),
    ];
    let psi1_ok = psi1.iter().all(|((arrow, path), terms)| {
        let col = pairs(&pp, &[(1, arrow, path)]).leading().unwrap().0;
        pp.psi1.column(col) == tip_pairs(&pp, terms)
    });
    c.check("psi1 table", psi1_ok);

    let listed = [
        pairs(&pp, &[(1, "a1", "a1"), (-1, "a2", "a2")]),
        pairs(&pp, &[(1, "a1", "a1"), (1, "b1", "b1")]),
        pairs(&pp, &[(1, "a1", "b1"), (-1, "b2", "a2")]),
        pairs(&pp, &[(1, "a2", "b2"), (-1, "b1", "a1")]),
    ];
    let coords: Option<Vec<_>> = listed.iter().map(|v| pp.hh1_coordinates(v)).collect();
    let spans = coords.is_some_and(|cs| {
        let vecs = cs.into_iter().map(|c| SparseVec::from_dense(&c));
        parapath::exactla::Subspace::span(a.field(), pp.hh1_dim(), vecs).dim() == 4
    });
    c.check("listed HH1 basis", spans);

    let u = pairs(&pp, &[(1, "a1", "b1"), (-1, "b2", "a2")]);
    let v = pairs(&pp, &[(1, "a2", "b2"), (-1, "b1", "a1")]);
    let w = pairs(&pp, &[(1, "a1", "a1"), (-1, "a2", "a2")]).scale(&a.field().from_i64(2));
    let same_class = pp.hh1_coordinates(&pp.bracket(&u, &v)) == pp.hh1_coordinates(&w);
    c.check("bracket = 2((a1,a1)-(a2,a2)) in HH1", same_class);
    let lie = pp.lie_presentation();
    c.eq("derived", lie.derived_dims.clone(), vec![4, 3, 3]);
    c.eq("solvable", lie.solvable, false);

    let (field, g) = graph("kronecker.brauer");
    let s2 = build_quiver_and_cycles(&g).count_s2();
    c.eq("|S2|", s2, 2);
    let e = g.edges().len() as i64;
    let vtx = g.vertices().len() as i64;
    let msum: i64 = g.vertices().iter().map(|v| v.mult as i64).sum();
    let formula = e - 2 * vtx + msum + s2 as i64 + 2;
    c.eq("no-loop formula", formula, 4);
    let gb = brauer_groebner(&g, field, false, 50).unwrap();
    c.check("graph algebra has the listed relations", same_ideal(&gb, &[
        "v:1*v:0 - w:1*w:0", "v:0*v:1 - w:0*w:1", "v:1*v:0*v:1", "v:0*v:1*v:0", "w:1*w:0*w:1", "w:0*w:1*w:0",
        "v:1*w:0", "w:0*v:1", "v:0*w:1", "w:1*v:0",
    ]));
    let ga = QuotientAlgebra::build(gb, 10_000).unwrap();
    c.eq("graph algebra HH1", ParallelPaths::new(&ga).hh1_dim(), 4);
    c
}

fn truncated_cube() -> Criterion {
    let mut c = Criterion::new(2, "k[x]/(x^3) over GF(3) and over Q");
    let a = alg("cube_gf3.alg");
    let f = a.field();
    let pp = ParallelPaths::new(&a);
    c.eq("dim HH1", pp.hh1_dim(), 3);
    let one = pairs(&pp, &[(1, "x", "1")]);
    c.check("psi1((x,1)) = 0", pp.psi1.apply(&one).is_zero());
    let x = pairs(&pp, &[(1, "x", "x")]);
    let x2 = pairs(&pp, &[(1, "x", "x^2")]);
    c.check("[(x,1),(x,x)] = (x,1)", pp.bracket(&one, &x) == one);
    c.check("[(x,1),(x,x^2)] = 2(x,x)", pp.bracket(&one, &x2) == x.scale(&f.from_i64(2)));
    c.check("[(x,x^2),(x,x)] = -(x,x^2)", pp.bracket(&x2, &x) == x2.neg());
    let lie = pp.lie_presentation();
    c.eq("derived", lie.derived_dims.clone(), vec![3, 3]);
    c.eq("solvable", lie.solvable, false);
    let loops = loop_char_report(&a);
    c.check("loop characteristic flags 3 | 3", loops.len() == 1 && loops[0].power == 3 && loops[0].divides);

    let q = alg("cube_q.alg");
    let (_, bar1) = bar_hh_dims(&q);
    let hh1 = ParallelPaths::new(&q).hh1_dim();
    c.eq("over Q: HH1 equals the bar oracle", hh1, bar1);
    c.eq("over Q: dim HH1", hh1, 2);
    c
}

fn report_dims(name: &str) -> (parapath::brauer::BgaReport, BrauerGraph) {
    let (field, g) = graph(name);
    (invariant_report(&g, field, 50, 100_000).unwrap(), g)
}

fn first_graded_example() -> Criterion {
    let mut c = Criterion::new(3, "path graph with multiplicities 1, 1, 3");
    let (r, g) = report_dims("path3.brauer");
    c.eq("dim HH1(A)", r.hh1_a, 3);
    c.eq("dim HH1(gr A)", r.hh1_gr, 4);
    let gr = brauer_groebner(&g, FieldSpec::rationals(), true, 50).unwrap();
    c.check(
        "gr ideal",
        same_ideal(&gr, &["w:0^4", "v:0*v:1", "w:0*v:0", "v:1*w:0"]),
    );
    c.eq("|Gamma|", r.gamma, 2);
    c.eq("difference", r.hh1_gr as i64 - r.hh1_a as i64, r.gamma as i64 - 1);
    c
}

fn second_graded_example() -> Criterion {
    let mut c = Criterion::new(4, "single edge with multiplicities 2 and 3");
    let (r, g) = report_dims("two_three.brauer");
    c.eq("dim HH1(A)", r.hh1_a, 5);
    c.eq("dim HH1(gr A)", r.hh1_gr, 6);
    let gr = brauer_groebner(&g, FieldSpec::rationals(), true, 50).unwrap();
    c.check("gr ideal", same_ideal(&gr, &["w:0^4", "u:0^2", "u:0*w:0", "w:0*u:0"]));
    c.eq("dim L^(2) of A", r.derived_a.get(2).copied(), Some(2));
    c.eq("dim L^(2) of gr A", r.derived_gr.get(2).copied(), Some(1));
    c.eq("derived series exceeds the graded one", r.derived_exceeds_graded(), true);
    c
}

fn char_two() -> Criterion {
    let mut c = Criterion::new(5, "two loops over GF(2)");
    let file: AlgebraFile = parse_algebra(&fixture_text("char2.alg")).unwrap();
    let gb = complete(file.quiver.clone(), file.field, &file.relations, 50).unwrap();
    c.eq("elements added by overlaps", gb.stats().added_by_overlaps, 0);
    let monic: Vec<FreeElement> = file.relations.iter().map(FreeElement::monic).collect();
    let mut sorted = monic.clone();
    sorted.sort_by(|a, b| a.tip_path().cmp(&b.tip_path()));
    c.check("generators are the reduced basis", gb.elements() == sorted.as_slice());
    let q = &file.quiver;
    let tips: Vec<String> = gb.tips().iter().map(|p| q.format_path(p)).collect();
    let mut want = vec!["x^3".to_string(), "x*y".into(), "y^2".into()];
    want.sort();
    let mut got = tips.clone();
    got.sort();
    c.eq("tips", got, want);
    let a = QuotientAlgebra::build(gb, 10_000).unwrap();
    let pp = ParallelPaths::new(&a);
    let col = pp.psi1.apply(&pairs(&pp, &[(1, "x", "1")]));
    c.check("psi1((x,1)) = (x^3, x^2)", col == tip_pairs(&pp, &[(1, "x^3", "x^2")]) && !col.is_zero());
    let g = pp.graded_report();
    c.check("(x,1)+(y,1) in L_-1", g.l_minus1.contains(&pairs(&pp, &[(1, "x", "1"), (1, "y", "1")])));
    c.check("dim L_-1 >= 1", g.dim_l_minus1() >= 1);
    c
}

fn commuting_square() -> Criterion {
    let mut c = Criterion::new(6, "k<x,y>/(xy-yx, x^2, y^2)");
    let a = alg("commuting_square.alg");
    let pp = ParallelPaths::new(&a);
    c.eq("dim A", a.dim(), 4);
    c.conflict("dim HH1", pp.hh1_dim(), 1, 4);
    let euler = pairs(&pp, &[(1, "x", "x"), (1, "y", "y")]);
    let coords = pp.hh1_coordinates(&euler);
    c.check(
        "(x,x)+(y,y) is a nonzero class",
        coords.as_ref().is_some_and(|v| v.iter().any(|s| !s.is_zero())),
    );
    let lie = pp.lie_presentation();
    let abelian = lie.constants.iter().flatten().flatten().all(|s| s.is_zero());
    c.conflict("abelian", abelian, true, false);
    c.check("solvable", lie.solvable);
    c.eq("bar oracle", bar_hh_dims(&a), (4, 4));
    c
}

fn loop_at_short_end(g: &BrauerGraph) -> bool {
    (0..g.edges().len()).any(|e| {
        if g.is_balanced(e) {
            return false;
        }
        let [x, y] = g.edges()[e].ends;
        let short = if g.graded_degree(x) < g.graded_degree(y) { x } else { y };
        g.edges().iter().any(|f| f.is_loop() && f.ends[0] == short)
    })
}

#[derive(Default)]
struct Tally {
    failures: Vec<usize>,
}

impl Tally {
    fn record(&mut self, graph: usize, ok: bool) {
        if !ok {
            self.failures.push(graph);
        }
    }
}

fn degrees_add(pp: &ParallelPaths) -> bool {
    let n = pp.q1b.len();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let want = pp.pair_degree(i) + pp.pair_degree(j);
            pp.bracket_basis(i, j).iter().all(|(k, _)| pp.pair_degree(*k) == want)
        })
    })
}

fn corpus_properties() -> Criterion {
    let mut c = Criterion::new(7, "seeded Brauer graph corpus, characteristic 0");
    let opts = CorpusOptions::default();
    let graphs = random_corpus(&opts);
    c.check(
        format!("corpus: {} graphs, seed {}", graphs.len(), opts.seed),
        graphs.len() >= 20,
    );
    c.check(
        "corpus has loops and multiple edges",
        graphs.iter().any(BrauerGraph::has_loops) && graphs.iter().any(has_multi_edge),
    );
    c.check(
        "corpus bounds",
        graphs
            .iter()
            .all(|g| g.edges().len() <= 6 && g.vertices().iter().all(|v| v.mult <= 3)),
    );
    let field = FieldSpec::rationals();
    let names = [
        "a closed", "b complexes", "c oracle", "d L00", "e gr difference", "f no-loop formula", "g solvable",
        "h L_-1", "i ideal", "j Lie axioms", "k degrees",
    ];
    let mut tallies: Vec<Tally> = names.iter().map(|_| Tally::default()).collect();
    for (i, g) in graphs.iter().enumerate() {
        let r = invariant_report(g, field, 50, 100_000).unwrap();
        let status = |name: &str| r.checks.iter().find(|c| c.name == name).unwrap().status;
        use parapath::brauer::CheckStatus::{Fail, NotApplicable};
        tallies[0].record(i, r.added_by_overlaps == 0);
        tallies[3].record(i, status("l00") != Fail && status("l00_gr") != Fail);
        tallies[4].record(i, status("gr_difference") != Fail);
        tallies[5].record(
            i,
            status("no_loop_formula") != Fail && (g.has_loops() || status("no_loop_formula") != NotApplicable),
        );
        tallies[6].record(i, status("solvable") != Fail && status("solvable_gr") != Fail);

        let a = QuotientAlgebra::build(brauer_groebner(g, field, false, 50).unwrap(), 100_000).unwrap();
        let gr = QuotientAlgebra::build(brauer_groebner(g, field, true, 50).unwrap(), 100_000).unwrap();
        let mut complexes = true;
        let mut oracle = true;
        let mut minus1 = true;
        let mut ideal = true;
        let mut axioms = true;
        let mut degrees = true;
        for alg in [&a, &gr] {
            let pp = ParallelPaths::new(alg);
            complexes &= pp.is_complex() && BarSlice::build(alg).is_complex();
            let lie = pp.lie_presentation();
            oracle &= bar_hh_dims(alg) == (pp.hh0_dim(), pp.hh1_dim()) && bar_derived_series(alg) == lie.derived_dims;
            minus1 &= pp.graded_report().dim_l_minus1() == 0;
            ideal &= pp.image_is_ideal();
            axioms &= is_antisymmetric(&lie.constants) && jacobi_holds(field, &lie.constants);
            if alg.gb().is_homogeneous() {
                degrees &= degrees_add(&pp);
            }
        }
        tallies[1].record(i, complexes);
        tallies[2].record(i, oracle);
        tallies[7].record(i, minus1);
        tallies[8].record(i, ideal);
        tallies[9].record(i, axioms);
        tallies[10].record(i, degrees);
    }
    for (k, (name, t)) in names.iter().zip(&tallies).enumerate() {
        let label = if t.failures.is_empty() {
            format!("({name}) on all graphs")
        } else {
            format!("({name}) fails on graphs {:?}", t.failures)
        };
        if k == 4 {
            // Failures are expected exactly where a loop sits at the short end
            // of an unbalanced edge.
            let explained = t.failures.iter().all(|&i| loop_at_short_end(&graphs[i]));
            c.subs.push(Sub {
                name: format!("{label} (documented conflict when a loop sits at the short end of an unbalanced edge)"),
                ok: t.failures.is_empty(),
                conflict: Some(explained),
            });
        } else {
            c.check(label, t.failures.is_empty());
        }
    }
    c
}

fn random_element(rng: &mut ChaCha8Rng, field: FieldSpec, pool: &[Path]) -> FreeElement {
    let n = rng.gen_range(1..=5);
    FreeElement::from_terms(
        field,
        (0..n).map(|_| {
            let c = rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 };
            (pool[rng.gen_range(0..pool.len())].clone(), field.from_i64(c))
        }),
    )
}

fn paths_up_to(q: &Quiver, len: usize) -> Vec<Path> {
    (0..=len).flat_map(|l| q.paths_of_length(l)).collect()
}

fn confluence_and_order() -> Criterion {
    let mut c = Criterion::new(8, "confluence and order properties");
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut bases: Vec<GroebnerBasis> = ["kronecker.alg", "cube_gf3.alg", "char2.alg", "commuting_square.alg"]
        .iter()
        .map(|n| alg(n).gb().clone())
        .collect();
    let opts = CorpusOptions {
        count: 6,
        ..CorpusOptions::default()
    };
    for g in random_corpus(&opts) {
        bases.push(brauer_groebner(&g, FieldSpec::rationals(), false, 50).unwrap());
    }
    let pools: Vec<Vec<Path>> = bases.iter().map(|b| paths_up_to(b.quiver(), 6)).collect();
    let mut agree = 0;
    for t in 0..1000 {
        let k = t % bases.len();
        let gb = &bases[k];
        let f = random_element(&mut rng, gb.field(), &pools[k]);
        let seed: u64 = rng.gen();
        let mut pick = ChaCha8Rng::seed_from_u64(seed);
        let mut choose = |n: usize| pick.gen_range(0..n);
        if gb.normal_form_by(&f, &mut choose) == gb.normal_form(&f) {
            agree += 1;
        }
    }
    c.eq("normal forms agree (of 1000)", agree, 1000);

    let mut q = Quiver::new();
    q.add_vertex("v").unwrap();
    for name in ["z", "y", "x"] {
        q.add_arrow(name, 0, 0).unwrap();
    }
    let pool = paths_up_to(&q, 4);
    let kron = parse_algebra(&fixture_text("kronecker.alg")).unwrap();
    let kpool = paths_up_to(&kron.quiver, 4);
    let field = FieldSpec::rationals();
    let (mut admissible, mut multiplicative) = (0, 0);
    for t in 0..1000 {
        let pick = |rng: &mut ChaCha8Rng| pool[rng.gen_range(0..pool.len())].clone();
        let (p, r, u) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let ord = llex_compare(&p, &r);
        let ok = llex_compare(&u.compose(&p).unwrap(), &u.compose(&r).unwrap()) == ord
            && llex_compare(&p.compose(&u).unwrap(), &r.compose(&u).unwrap()) == ord
            && (u.is_trivial() || llex_compare(&p, &p.compose(&u).unwrap()).is_lt());
        admissible += ok as usize;

        let pl = if t % 2 == 0 { &pool } else { &kpool };
        let (x, y) = loop {
            let x = random_element(&mut rng, field, pl);
            let y = random_element(&mut rng, field, pl);
            let parallel = |e: &FreeElement| {
                let first = e.tip_path().cloned();
                first.is_some_and(|f| e.support().all(|p| p.is_parallel(&f)))
            };
            if parallel(&x) && parallel(&y) {
                break (x, y);
            }
        };
        let (tx, ty) = (x.tip_path().unwrap(), y.tip_path().unwrap());
        let xy = x.multiply(&y);
        let ok = match tx.compose(ty) {
            Some(p) => xy.tip_path() == Some(&p),
            None => xy.is_zero(),
        };
        multiplicative += ok as usize;
    }
    c.eq("admissible triples (of 1000)", admissible, 1000);
    c.eq("tip multiplicative triples (of 1000)", multiplicative, 1000);
    c
}

#[test]
fn acceptance() {
    let criteria = [
        kronecker(),
        truncated_cube(),
        first_graded_example(),
        second_graded_example(),
        char_two(),
        commuting_square(),
        corpus_properties(),
        confluence_and_order(),
    ];
    // Written to the stdout handle directly so the lines show without --nocapture.
    let mut out = std::io::stdout().lock();
    for c in &criteria {
        writeln!(out, "{}", c.line()).unwrap();
    }
    drop(out);
    let unexpected: Vec<String> = criteria
        .iter()
        .flat_map(|c| c.unexpected().into_iter().map(move |s| format!("criterion {}: {s}", c.id)))
        .collect();
    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:#?}");
}
