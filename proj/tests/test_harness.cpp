#include <doctest.h>

#include "lapcs/errors.hpp"
#include "lapcs/harness.hpp"

using namespace lapcs;

TEST_CASE("annotated format parse and write") {
    const auto a = parse_annotated("# header\nacgu\n1 4\n\n# arcs\n3 2\n");
    CHECK(a.seq() == "acgu");
    CHECK(a.arcs() == std::vector<Arc>{{1, 4}, {2, 3}});
    CHECK(write_annotated(a) == "acgu\n1 4\n2 3\n");

    CHECK(parse_annotated("").seq().empty());
    CHECK(write_annotated(AnnotatedSequence("")) == "\n");
    CHECK(parse_annotated("\n").seq().empty());
    CHECK(parse_annotated("ab\r\n1 2\r\n").arcs().size() == 1);

    // Duplicates merge silently.
    CHECK(parse_annotated("ab\n1 2\n2 1\n").arcs().size() == 1);
}

TEST_CASE("annotated format errors carry line numbers") {
    auto line_of = [](std::string_view text) -> std::size_t {
        try {
            parse_annotated(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("abc\n1 2\n1 x\n") == 3);
    CHECK(line_of("abc\n1 2 3\n") == 2);
    CHECK(line_of("abc\n1 4\n") == 2);
    CHECK(line_of("abc\n2 2\n") == 2);
    CHECK(line_of("# c\na b\n") == 2);
    CHECK(line_of("abc\n1 +2\n") == 2);

    CHECK_THROWS_AS(write_annotated(AnnotatedSequence("#ab")), ValidationError);
    CHECK_THROWS_AS(write_annotated(AnnotatedSequence("a b")), ValidationError);
}

TEST_CASE("dimacs parse and write") {
    const auto g = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 3 1\ne 2 3\n");
    CHECK(g.order() == 3);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(write_dimacs(g) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    CHECK(parse_dimacs("p edge 0 0\n").order() == 0);
}

TEST_CASE("dimacs errors") {
    auto line_of = [](std::string_view text) -> std::size_t {
        try {
            parse_dimacs(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("e 1 2\n") == 1);
    CHECK(line_of("p edge 2 1\ne 1 3\n") == 2);
    CHECK(line_of("p edge 2 1\ne 1\n") == 2);
    CHECK(line_of("p edge 2 1\nx 1 2\n") == 2);
    CHECK(line_of("p edge 2 1\np edge 2 1\n") == 2);
    CHECK(line_of("p col 2 1\n") == 1);
    CHECK(line_of("p edge 3 2\ne 1 2\n") == 2);
    CHECK(line_of("p edge 3 1\ne 1 2\ne 2 3\n") == 3);
    CHECK(line_of("") == 1);

    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 2 2\n"), InvalidInputError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n"), InvalidInputError);
    try {
        parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n");
    } catch (const InvalidInputError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("format round trips on random values") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_annotated(rng, static_cast<Pos>(uniform_int(rng, 0, 20)), "ACGU",
                                        static_cast<StructureLevel>(uniform_int(rng, 0, 4)));
        CHECK(parse_annotated(write_annotated(a)) == a);
        const Graph g = random_graph(rng, static_cast<int>(uniform_int(rng, 0, 12)), 0.4);
        CHECK(parse_dimacs(write_dimacs(g)) == g);
    }
}

TEST_CASE("generators are reproducible") {
    Rng a(1234);
    Rng b(1234);
    for (int i = 0; i < 50; ++i) {
        CHECK(uniform_int(a, -3, 17) == uniform_int(b, -3, 17));
        CHECK(random_graph(a, 6, 0.5) == random_graph(b, 6, 0.5));
    }
    CHECK(graph_count(4) == 64);
    CHECK(graph_from_mask(3, 0b101).edges() == std::vector<Edge>{{1, 2}, {2, 3}});
}

TEST_CASE("random arcs respect the requested level") {
    Rng rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        const Pos n = static_cast<Pos>(uniform_int(rng, 0, 15));
        const auto level = static_cast<StructureLevel>(uniform_int(rng, 0, 4));
        const auto arcs = AnnotatedSequence(std::string(static_cast<std::size_t>(n), 'a'), random_arcs(rng, n, level));
        CHECK(within(classify_structure(arcs), level));
    }
}

TEST_CASE("sweep with no graphs writes only the header") {
    SweepConfig cfg;
    cfg.graphs = std::vector<std::pair<std::string, Graph>>{};
    const auto result = run_sweep(cfg);
    CHECK(result.report.rows.empty());
    CHECK(sweep_csv(result.report) == std::string(kSweepCsvHeader) + "\n");
}

TEST_CASE("unary sweep up to three vertices has no failures") {
    SweepConfig cfg;
    cfg.theorem = Theorem::One;
    cfg.n_min = 1;
    cfg.n_max = 3;
    const auto result = run_sweep(cfg);
    CHECK(result.report.rows.size() == 1 + 2 * 2 + 8 * 3);
    CHECK(result.report.forward_failures() == 0);
    CHECK(result.report.backward_failures() == 0);
    CHECK(result.report.skipped() == 0);
    CHECK_FALSE(result.spot_checks.empty());
    CHECK(result.spot_mismatches() == 0);
}

TEST_CASE("block sweep on the single edge") {
    SweepConfig cfg;
    cfg.theorem = Theorem::Two;
    cfg.fixed_k = 1;
    cfg.graphs = std::vector<std::pair<std::string, Graph>>{{"edge", Graph(2, {{1, 2}})}};
    const auto result = run_sweep(cfg);
    REQUIRE(result.report.rows.size() == 1);
    const auto& row = result.report.rows[0];
    CHECK(row.forward_ok);
    CHECK(row.lapcs_len == 7);
    CHECK(row.threshold == 4);
    CHECK(csv_row(row) == "edge,2,1,true,1,true,7,4,true,true,true");
}

TEST_CASE("sweep output is deterministic and independent of thread count") {
    SweepConfig cfg;
    cfg.theorem = Theorem::Two;
    cfg.n_min = 1;
    cfg.n_max = 4;
    cfg.random = SweepConfig::Random{5, 0.5, 42};
    const auto first = run_sweep(cfg);
    cfg.jobs = 4;
    const auto second = run_sweep(cfg);
    CHECK(sweep_csv(first.report) == sweep_csv(second.report));
    CHECK(sweep_summary_json(cfg, first) == sweep_summary_json(cfg, second));
}

TEST_CASE("skipped rows are reported separately") {
    SweepConfig cfg;
    cfg.theorem = Theorem::One;
    cfg.n_min = 3;
    cfg.n_max = 3;
    cfg.budgets.mis.max_vertices = 2;
    const auto result = run_sweep(cfg);
    CHECK(result.report.skipped() == result.report.rows.size());
    CHECK(result.report.counterexamples().empty());
    CHECK(csv_row(result.report.rows[0]) == "n3g0,3,0,false,1,skipped,skipped,skipped,skipped,skipped,skipped");
    CHECK(sweep_summary_json(cfg, result).find("\"skipped\": 24") != std::string::npos);
}

TEST_CASE("sweep configuration validation") {
    SweepConfig cfg;
    cfg.theorem = Theorem::Two;
    cfg.n_max = 5;
    CHECK_THROWS_AS(validate(cfg), InvalidInputError);
    cfg.exhaustive_limit = 5;
    CHECK_NOTHROW(validate(cfg));
    cfg.n_min = 6;
    CHECK_THROWS_AS(validate(cfg), InvalidInputError);

    SweepConfig bad_k;
    bad_k.fixed_k = 0;
    CHECK_THROWS_AS(validate(bad_k), InvalidInputError);

    SweepConfig bad_p;
    bad_p.random = SweepConfig::Random{1, 1.5, 0};
    CHECK_THROWS_AS(validate(bad_p), InvalidInputError);
}
