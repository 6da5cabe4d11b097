// Drives the installed CLI binary end to end through popen; documents are
// produced with the library's own serializer so both sides must agree.
#include "doctest.h"

#include <string>

#include "json.hpp"

#include "bidiag/classify.hpp"
#include "bidiag/modules.hpp"
#include "bidiag/serialize.hpp"
#include "corpus.hpp"

using namespace bidiag;
using corpus::R;
using corpus::RunResult;
using corpus::TempDoc;
using corpus::mat;
using corpus::matq;
using corpus::run_cli;
using corpus::seq;

namespace {

std::string triple_doc(const BidiagonalTriple& t) {
    return serialize_document(TripleDocument{t.a, t.a_prime, t.a_double});
}

std::string pair_doc(const Matrix& a, const Matrix& a_prime) {
    return serialize_document(PairDocument{a, a_prime});
}

ParameterArray pa_of(std::vector<Rational> first, std::vector<Rational> second,
                     std::vector<Rational> third, std::vector<Rational> shape) {
    ParameterArray pa;
    pa.first = std::move(first);
    pa.second = std::move(second);
    pa.third = std::move(third);
    pa.shape = std::move(shape);
    return pa;
}

BidiagonalTriple weight3_triple() {
    return module_to_triple(ModuleSpec{Algebra::sl2, std::nullopt, {{3, 1, 1}}});
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("verify") {
    SUBCASE("triple, human report") {
        TempDoc doc("triple3", triple_doc(weight3_triple()));
        RunResult r = run_cli("verify " + doc.path());
        CHECK(r.exit_code == 0);
        CHECK(r.out ==
              "kind: triple\n"
              "dimension: 4\n"
              "diameter: 3\n"
              "base: 1\n"
              "first: -3, -1, 1, 3\n"
              "second: -3, -1, 1, 3\n"
              "third: -3, -1, 1, 3\n"
              "shape: 1, 1, 1, 1\n"
              "diagonalizable: pass\n"
              "standard_orderings: pass\n"
              "equal_diameters: pass\n"
              "bijections: pass\n");
    }
    SUBCASE("triple, machine report") {
        BidiagonalTriple t =
            module_to_triple(ModuleSpec{Algebra::uq, R(2), {{2, 1, 1}, {0, 1, 1}}});
        TempDoc doc("uq_triple", triple_doc(t));
        RunResult r = run_cli("verify --format machine " + doc.path());
        REQUIRE(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["kind"] == "triple");
        CHECK(j["dimension"] == 4);
        CHECK(j["base"] == "1/4");
        CHECK(j["parameter_array"]["first"][0] == "4");
        CHECK(j["conditions"]["bijections"] == "pass");
    }
    SUBCASE("pair document") {
        TempDoc doc("pair2", pair_doc(
            mat({{-2, 0, 0}, {-2, 0, 0}, {0, -4, 2}}),
            mat({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}})));
        RunResult r = run_cli("verify " + doc.path());
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("kind: pair\n") != std::string::npos);
        CHECK(r.out.find("first: -2, 0, 2\n") != std::string::npos);
        CHECK(r.out.find("second: 2, 0, -2\n") != std::string::npos);
    }
    SUBCASE("reads stdin when no file is given") {
        TempDoc doc("stdin_triple", triple_doc(weight3_triple()));
        RunResult r = run_cli("verify", doc.path());
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("diameter: 3\n") != std::string::npos);
    }
    SUBCASE("non-square matrix is a parse failure") {
        TempDoc doc("nonsquare",
                    "{\"triple\": {\"a\": [[\"1\", \"0\"]], \"a_prime\": [[\"1\", \"0\"]], "
                    "\"a_double\": [[\"1\", \"0\"]]}}");
        RunResult r = run_cli("verify " + doc.path(), "", true);
        CHECK(r.exit_code == 2);
        CHECK(r.out.find("must be square") != std::string::npos);
    }
    SUBCASE("commuting operators fail verification") {
        TempDoc doc("commuting", pair_doc(mat({{1, 0}, {0, 2}}), mat({{3, 0}, {0, 4}})));
        RunResult r = run_cli("verify " + doc.path(), "", true);
        CHECK(r.exit_code == 1);
        CHECK(r.out.find("BijectionFails") != std::string::npos);
    }
}

TEST_CASE("construct") {
    SUBCASE("quantum array needs no q when the base determines it") {
        TempDoc doc("uq_pa", serialize_document(pa_of(
            {R(4), R(1), R(1, 4)}, {R(4), R(1), R(1, 4)}, {R(4), R(1), R(1, 4)},
            seq({1, 2, 1}))));
        RunResult r = run_cli("construct " + doc.path());
        REQUIRE(r.exit_code == 0);
        Document out = parse_document(r.out);
        auto* td = std::get_if<TripleDocument>(&out);
        REQUIRE(td != nullptr);
        BidiagonalTriple t = verify_bd_triple(td->a, td->a_prime, td->a_double);
        CHECK(t.base == R(1, 4));
        CHECK(t.pa.shape == seq({1, 2, 1}));
        RunResult with_q = run_cli("construct --q 2 " + doc.path());
        CHECK(with_q.exit_code == 0);
        CHECK(with_q.out == r.out);
    }
    SUBCASE("invalid shape names its condition") {
        TempDoc doc("bad_shape", serialize_document(pa_of(
            seq({-2, 0, 2}), seq({-2, 0, 2}), seq({-2, 0, 2}), seq({2, 1, 2}))));
        RunResult r = run_cli("construct " + doc.path(), "", true);
        CHECK(r.exit_code == 1);
        CHECK(r.out.find("(v)") != std::string::npos);
    }
    SUBCASE("irrational q exits with the unrepresentable code") {
        TempDoc doc("sqrt2_pa", serialize_document(pa_of(
            {R(2), R(1), R(1, 2)}, {R(2), R(1), R(1, 2)}, {R(2), R(1), R(1, 2)},
            seq({1, 1, 1}))));
        RunResult r = run_cli("construct " + doc.path(), "", true);
        CHECK(r.exit_code == 3);
        CHECK(r.out.find("error: Unrepresentable") != std::string::npos);
    }
    SUBCASE("construct then param-array reproduces the document") {
        std::string pa_text = serialize_document(pa_of(
            seq({0, 2, 4}), seq({1, 2, 3}), seq({5, 7, 9}), seq({1, 2, 1})));
        TempDoc doc("shifted_pa", pa_text);
        RunResult built = run_cli("construct " + doc.path());
        REQUIRE(built.exit_code == 0);
        TempDoc triple("shifted_triple", built.out);
        RunResult back = run_cli("param-array " + triple.path());
        CHECK(back.exit_code == 0);
        CHECK(back.out == pa_text);
    }
}

TEST_CASE("extend") {
    BidiagonalTriple t = weight3_triple();
    TempDoc doc("pair3", pair_doc(t.a, t.a_prime));
    SUBCASE("default target") {
        RunResult r = run_cli("extend " + doc.path());
        REQUIRE(r.exit_code == 0);
        Document out = parse_document(r.out);
        auto* td = std::get_if<TripleDocument>(&out);
        REQUIRE(td != nullptr);
        BidiagonalTriple e = verify_bd_triple(td->a, td->a_prime, td->a_double);
        CHECK(e.pa.third == seq({-3, -1, 1, 3}));
    }
    SUBCASE("explicit target sequence") {
        RunResult r = run_cli("extend --target-sequence \"1, 3, 5, 7\" " + doc.path());
        REQUIRE(r.exit_code == 0);
        Document out = parse_document(r.out);
        auto* td = std::get_if<TripleDocument>(&out);
        REQUIRE(td != nullptr);
        BidiagonalTriple e = verify_bd_triple(td->a, td->a_prime, td->a_double);
        CHECK(e.pa.third == seq({1, 3, 5, 7}));
    }
    SUBCASE("target with the wrong recurrence") {
        RunResult r = run_cli("extend --target-sequence 1,2,4,8 " + doc.path(), "", true);
        CHECK(r.exit_code == 1);
        CHECK(r.out.find("NotBRecurrent") != std::string::npos);
    }
}

TEST_CASE("base") {
    SUBCASE("quantum triple") {
        BidiagonalTriple t =
            module_to_triple(ModuleSpec{Algebra::uq, R(3), {{3, 1, 1}}});
        TempDoc doc("uq3_triple", triple_doc(t));
        RunResult r = run_cli("base " + doc.path());
        CHECK(r.exit_code == 0);
        CHECK(r.out ==
              "kind: triple\n"
              "diameter: 3\n"
              "base: 1/9\n"
              "q: 3\n");
    }
    SUBCASE("arithmetic pair has no q") {
        BidiagonalTriple t = weight3_triple();
        TempDoc doc("pair_base", pair_doc(t.a, t.a_prime));
        RunResult r = run_cli("base " + doc.path());
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("q: undefined (base 1)\n") != std::string::npos);
    }
    SUBCASE("irrational q is reported, not an error") {
        TempDoc doc("sqrt2_triple", triple_doc(verify_bd_triple(
            matq({{R(2), R(0), R(0)}, {R(0), R(1), R(0)}, {R(0), R(0), R(1, 2)}}),
            matq({{R(1, 2), R(0), R(0)}, {R(1), R(1), R(0)}, {R(0), R(3, 2), R(2)}}),
            matq({{R(1, 2), R(-3, 4), R(0)}, {R(0), R(1), R(-1)}, {R(0), R(0), R(2)}}))));
        RunResult r = run_cli("base " + doc.path());
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("base: 1/2\n") != std::string::npos);
        CHECK(r.out.find("q: irrational\n") != std::string::npos);
    }
}

TEST_CASE("relations") {
    BidiagonalTriple t =
        module_to_triple(ModuleSpec{Algebra::uq, R(2), {{2, 1, 1}, {0, 1, 1}}});
    TempDoc doc("uq_rel", triple_doc(t));
    SUBCASE("machine scalars") {
        RunResult r = run_cli("relations --format machine " + doc.path());
        REQUIRE(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["b"] == "1/4");
        CHECK(j["alpha"] == "0");
        CHECK(j["gamma1"] == "3/4");
        CHECK(j["residuals"] == "zero");
    }
    SUBCASE("human scalars") {
        RunResult r = run_cli("relations " + doc.path());
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("alpha: 0\n") != std::string::npos);
        CHECK(r.out.find("gamma1: 3/4\n") != std::string::npos);
    }
}

TEST_CASE("isomorphic") {
    BidiagonalTriple t =
        module_to_triple(ModuleSpec{Algebra::uq, R(2), {{2, 1, 1}, {0, 1, 1}}});
    std::mt19937_64 rng(99);
    BidiagonalTriple c = conjugate_triple(t, corpus::random_invertible(rng, t.dim()));
    TempDoc d1("iso_a", triple_doc(t));
    TempDoc d2("iso_b", triple_doc(c));
    SUBCASE("conjugates are isomorphic") {
        RunResult r = run_cli("isomorphic " + d1.path() + " " + d2.path());
        CHECK(r.exit_code == 0);
        CHECK(r.out == "isomorphic: true\n");
    }
    SUBCASE("different shapes are not") {
        BidiagonalTriple u = module_to_triple(ModuleSpec{Algebra::uq, R(2), {{2, 1, 1}}});
        TempDoc d3("iso_c", triple_doc(u));
        RunResult r = run_cli("isomorphic --format machine " + d1.path() + " " + d3.path());
        CHECK(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["isomorphic"] == false);
    }
}

TEST_CASE("reduce") {
    BidiagonalTriple canonical =
        module_to_triple(ModuleSpec{Algebra::sl2, std::nullopt, {{1, 1, 1}}});
    TempDoc doc("shifted_d1", serialize_document(pa_of(
        seq({3, 7}), seq({0, 5}), seq({1, 2}), seq({1, 1}))));
    RunResult built = run_cli("construct " + doc.path());
    REQUIRE(built.exit_code == 0);
    TempDoc triple("shifted_d1_triple", built.out);

    SUBCASE("canonical document on stdout") {
        RunResult r = run_cli("reduce " + triple.path());
        REQUIRE(r.exit_code == 0);
        CHECK(r.out == triple_doc(canonical));
    }
    SUBCASE("affine maps on stderr") {
        RunResult r = run_cli("reduce " + triple.path(), "", true);
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("first map: 2 x + 5\n") != std::string::npos);
        CHECK(r.out.find("second map: 5/2 x + 5/2\n") != std::string::npos);
        CHECK(r.out.find("third map: 1/2 x + 3/2\n") != std::string::npos);
    }
}

TEST_CASE("module pipelines") {
    SUBCASE("build reports segregation") {
        ModuleSpec spec{Algebra::uq, R(2), {{2, 1, 1}, {0, 1, 1}}};
        TempDoc doc("uq_spec", serialize_document(spec));
        RunResult r = run_cli("module build " + doc.path());
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("segregated: true\n") != std::string::npos);
        CHECK(r.out.find("dimension: 4\n") != std::string::npos);
        RunResult m = run_cli("module build --format machine " + doc.path());
        REQUIRE(m.exit_code == 0);
        auto j = nlohmann::json::parse(m.out);
        CHECK(j["generators"]["k"][0][0] == "4");
        CHECK(j["equitable"]["first"][3][3] == "1");
    }
    SUBCASE("decompose recovers the spec document") {
        ModuleSpec spec{Algebra::sl2, std::nullopt, {{3, 1, 1}, {1, 1, 2}}};
        TempDoc doc("m2t", triple_doc(module_to_triple(spec)));
        RunResult r = run_cli("module decompose " + doc.path());
        CHECK(r.exit_code == 0);
        CHECK(r.out == serialize_document(spec));
    }
    SUBCASE("decompose needs a hint for scalar quantum triples") {
        Matrix id2 = Matrix::identity(2);
        TempDoc doc("scalar_triple", triple_doc(verify_bd_triple(id2, id2, id2)));
        RunResult bare = run_cli("module decompose " + doc.path(), "", true);
        CHECK(bare.exit_code == 1);
        CHECK(bare.out.find("needs an explicit q") != std::string::npos);
        RunResult hinted = run_cli("module decompose --q 5 " + doc.path());
        CHECK(hinted.exit_code == 0);
        CHECK(hinted.out == serialize_document(ModuleSpec{Algebra::uq, R(5), {{0, 1, 2}}}));
    }
}

TEST_CASE("usage errors") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("verify --no-such-flag x").exit_code == 2);
    CHECK(run_cli("verify /no/such/file.json").exit_code == 2);
}

TEST_SUITE_END();
