// Command-line front end over the document format in bidiag/serialize.hpp:
// verification, parameter arrays, extension, construction from arrays,
// reduction, relation scalars, isomorphism, and module pipelines.
//
// Commands that produce a new document (param-array on a triple, construct,
// extend, reduce, module decompose) print it to stdout or --output so it can
// feed the next command; the rest print a report in --format human or
// machine.  Exit codes: 0 success, 1 domain failure, 2 parse error, 3 value
// not representable over the rationals.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bidiag/classify.hpp"
#include "bidiag/errors.hpp"
#include "bidiag/extension.hpp"
#include "bidiag/modules.hpp"
#include "bidiag/serialize.hpp"

using namespace bidiag;

namespace {

using ojson = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << text;
}

ojson seq_json(const std::vector<Rational>& seq) {
    ojson out = ojson::array();
    for (const auto& r : seq) out.push_back(r.str());
    return out;
}

std::string seq_text(const std::vector<Rational>& seq) {
    std::string out;
    for (size_t i = 0; i < seq.size(); ++i) out += (i ? ", " : "") + seq[i].str();
    return out;
}

ojson matrix_json(const Matrix& m) {
    ojson rows = ojson::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string affine_text(const AffineMap& m) {
    std::string out = m.r.str() + " x";
    if (!m.s.is_zero()) out += (m.s.sign() > 0 ? " + " : " - ") + m.s.abs().str();
    return out;
}

const TripleDocument& as_triple(const Document& doc, const std::string& command) {
    if (const auto* t = std::get_if<TripleDocument>(&doc)) return *t;
    throw PreconditionFailed(command + " expects a triple document");
}

BidiagonalTriple verified_triple(const Document& doc, const std::string& command) {
    const TripleDocument& t = as_triple(doc, command);
    return verify_bd_triple(t.a, t.a_prime, t.a_double);
}

std::string triple_document_text(const BidiagonalTriple& t) {
    return serialize_document(TripleDocument{t.a, t.a_prime, t.a_double});
}

// The checks verify_bd_pair / verify_bd_triple run through, in order; the
// verifiers throw at the first failure, so reaching the report means every
// one passed.
const char* kConditions[] = {"diagonalizable", "standard_orderings", "equal_diameters",
                             "bijections"};

std::string verify_report(const Document& doc, bool machine) {
    std::string kind;
    ojson pa_json = ojson::object();
    std::string pa_text;
    size_t dimension = 0, diameter = 0;
    Rational base;

    if (const auto* td = std::get_if<TripleDocument>(&doc)) {
        BidiagonalTriple t = verify_bd_triple(td->a, td->a_prime, td->a_double);
        kind = "triple";
        dimension = t.dim();
        diameter = t.diameter;
        base = t.base;
        pa_json["first"] = seq_json(t.pa.first);
        pa_json["second"] = seq_json(t.pa.second);
        pa_json["third"] = seq_json(t.pa.third);
        pa_json["shape"] = seq_json(t.pa.shape);
        pa_text = "first: " + seq_text(t.pa.first) + "\nsecond: " + seq_text(t.pa.second) +
                  "\nthird: " + seq_text(t.pa.third) + "\nshape: " + seq_text(t.pa.shape);
    } else if (const auto* pd = std::get_if<PairDocument>(&doc)) {
        BidiagonalPair p = verify_bd_pair(pd->a, pd->a_prime);
        kind = "pair";
        dimension = p.a.rows();
        diameter = p.diameter;
        base = p.base;
        pa_json["first"] = seq_json(p.pa.first);
        pa_json["second"] = seq_json(p.pa.second);
        pa_json["shape"] = seq_json(p.pa.shape);
        pa_text = "first: " + seq_text(p.pa.first) + "\nsecond: " + seq_text(p.pa.second) +
                  "\nshape: " + seq_text(p.pa.shape);
    } else {
        throw PreconditionFailed("verify expects a pair or triple document");
    }

    if (machine) {
        ojson out;
        out["kind"] = kind;
        out["dimension"] = dimension;
        out["diameter"] = diameter;
        out["base"] = base.str();
        out["parameter_array"] = std::move(pa_json);
        ojson conds = ojson::object();
        for (const char* c : kConditions) conds[c] = "pass";
        out["conditions"] = std::move(conds);
        return out.dump(2) + "\n";
    }
    std::string out = "kind: " + kind + "\ndimension: " + std::to_string(dimension) +
                      "\ndiameter: " + std::to_string(diameter) + "\nbase: " + base.str() +
                      "\n" + pa_text + "\n";
    for (const char* c : kConditions) out += std::string(c) + ": pass\n";
    return out;
}

std::string param_array_output(const Document& doc, bool machine) {
    if (const auto* td = std::get_if<TripleDocument>(&doc)) {
        BidiagonalTriple t = verify_bd_triple(td->a, td->a_prime, td->a_double);
        return serialize_document(t.pa);
    }
    if (const auto* pd = std::get_if<PairDocument>(&doc)) {
        BidiagonalPair p = verify_bd_pair(pd->a, pd->a_prime);
        if (machine) {
            ojson out;
            out["first"] = seq_json(p.pa.first);
            out["second"] = seq_json(p.pa.second);
            out["shape"] = seq_json(p.pa.shape);
            return out.dump(2) + "\n";
        }
        return "first: " + seq_text(p.pa.first) + "\nsecond: " + seq_text(p.pa.second) +
               "\nshape: " + seq_text(p.pa.shape) + "\n";
    }
    throw PreconditionFailed("param-array expects a pair or triple document");
}

std::string base_report(const Document& doc, bool machine) {
    size_t diameter = 0;
    Rational base;
    std::string kind;
    if (const auto* td = std::get_if<TripleDocument>(&doc)) {
        BidiagonalTriple t = verify_bd_triple(td->a, td->a_prime, td->a_double);
        kind = "triple";
        diameter = t.diameter;
        base = t.base;
    } else if (const auto* pd = std::get_if<PairDocument>(&doc)) {
        BidiagonalPair p = verify_bd_pair(pd->a, pd->a_prime);
        kind = "pair";
        diameter = p.diameter;
        base = p.base;
    } else {
        throw PreconditionFailed("base expects a pair or triple document");
    }

    std::optional<Rational> q;
    bool irrational = false;
    if (base != Rational(1)) {
        try {
            q = q_from_base(base);
        } catch (const Unrepresentable&) {
            irrational = true;
        }
    }

    if (machine) {
        ojson out;
        out["kind"] = kind;
        out["diameter"] = diameter;
        out["base"] = base.str();
        if (q)
            out["q"] = q->str();
        else
            out["q"] = nullptr;
        return out.dump(2) + "\n";
    }
    std::string qline = q               ? "q: " + q->str()
                        : irrational    ? "q: irrational"
                                        : "q: undefined (base 1)";
    return "kind: " + kind + "\ndiameter: " + std::to_string(diameter) +
           "\nbase: " + base.str() + "\n" + qline + "\n";
}

std::string relations_report(const BidiagonalTriple& t, bool machine) {
    RelationScalars s = verify_fundamental_relations(t);
    if (machine) {
        ojson out;
        out["diameter"] = t.diameter;
        out["b"] = s.b.str();
        out["alpha"] = s.alpha.str();
        out["alpha_prime"] = s.alpha_prime.str();
        out["alpha_double"] = s.alpha_double.str();
        out["gamma1"] = s.gamma1.str();
        out["gamma2"] = s.gamma2.str();
        out["gamma3"] = s.gamma3.str();
        out["residuals"] = "zero";
        return out.dump(2) + "\n";
    }
    return "diameter: " + std::to_string(t.diameter) + "\nb: " + s.b.str() +
           "\nalpha: " + s.alpha.str() + "\nalpha': " + s.alpha_prime.str() +
           "\nalpha'': " + s.alpha_double.str() + "\ngamma1: " + s.gamma1.str() +
           "\ngamma2: " + s.gamma2.str() + "\ngamma3: " + s.gamma3.str() +
           "\nresiduals: zero\n";
}

std::string module_build_report(const ModuleSpec& spec, bool machine) {
    EquitableActions ea = equitable_actions(spec);
    SegregationSplit split = segregation_split(ea.generators);
    bool sl2 = spec.algebra == Algebra::sl2;

    if (machine) {
        ojson out;
        out["algebra"] = sl2 ? "sl2" : "uq";
        if (spec.q) out["q"] = spec.q->str();
        out["dimension"] = ea.first.rows();
        out["segregated"] = split.segregated;
        ojson gens = ojson::object();
        if (sl2) {
            gens["h"] = matrix_json(ea.generators.h);
            gens["e"] = matrix_json(ea.generators.e);
            gens["f"] = matrix_json(ea.generators.f);
        } else {
            gens["k"] = matrix_json(ea.generators.k);
            gens["k_inv"] = matrix_json(ea.generators.k_inv);
            gens["e"] = matrix_json(ea.generators.e);
            gens["f"] = matrix_json(ea.generators.f);
        }
        out["generators"] = std::move(gens);
        ojson eq = ojson::object();
        eq["first"] = matrix_json(ea.first);
        eq["second"] = matrix_json(ea.second);
        eq["third"] = matrix_json(ea.third);
        out["equitable"] = std::move(eq);
        return out.dump(2) + "\n";
    }

    std::string out = std::string("algebra: ") + (sl2 ? "sl2" : "uq") + "\n";
    if (spec.q) out += "q: " + spec.q->str() + "\n";
    out += "dimension: " + std::to_string(ea.first.rows()) + "\n";
    out += std::string("segregated: ") + (split.segregated ? "true" : "false") + "\n";
    if (sl2) {
        out += "h:\n" + ea.generators.h.str() + "\ne:\n" + ea.generators.e.str() +
               "\nf:\n" + ea.generators.f.str() + "\n";
    } else {
        out += "k:\n" + ea.generators.k.str() + "\nk_inv:\n" + ea.generators.k_inv.str() +
               "\ne:\n" + ea.generators.e.str() + "\nf:\n" + ea.generators.f.str() + "\n";
    }
    out += "equitable first:\n" + ea.first.str() + "\nequitable second:\n" + ea.second.str() +
           "\nequitable third:\n" + ea.third.str() + "\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic toolkit for bidiagonal pairs and triples"};
    app.require_subcommand(1);

    struct {
        std::string input = "-";
        std::string input2;
        std::string output;
        std::string format = "human";
        std::string q;
        std::string target;
    } opt;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "document file, or - for stdin");
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", opt.output, "write to this file instead of stdout");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "report format")
            ->check(CLI::IsMember({"human", "machine"}));
    };
    auto add_q = [&](CLI::App* sub, const std::string& help) {
        sub->add_option("--q", opt.q, help);
    };

    CLI::App* verify =
        app.add_subcommand("verify", "check a pair or triple document and report its data");
    add_input(verify);
    add_format(verify);
    add_output(verify);

    CLI::App* parr = app.add_subcommand(
        "param-array", "parameter array of a verified pair or triple document");
    add_input(parr);
    add_format(parr);
    add_output(parr);

    CLI::App* base =
        app.add_subcommand("base", "diameter, base, and q of a verified pair or triple");
    add_input(base);
    add_format(base);
    add_output(base);

    CLI::App* extend =
        app.add_subcommand("extend", "extend a pair document to a triple document");
    add_input(extend);
    add_output(extend);
    add_q(extend, "q with q^-2 = base, used for the default target sequence");
    extend->add_option("--target-sequence", opt.target,
                       "comma-separated eigenvalue sequence for the third operator");

    CLI::App* construct = app.add_subcommand(
        "construct", "build a triple document from a parameter array document");
    add_input(construct);
    add_output(construct);
    add_q(construct, "q with q^-2 = base, when the base is not 1");

    CLI::App* reduce = app.add_subcommand(
        "reduce", "affine-equivalent triple with canonical eigenvalue sequences");
    add_input(reduce);
    add_output(reduce);
    add_q(reduce, "q with q^-2 = base, when the base is not 1");

    CLI::App* relations =
        app.add_subcommand("relations", "scalars of the three bidiagonal relations");
    add_input(relations);
    add_format(relations);
    add_output(relations);

    CLI::App* iso = app.add_subcommand(
        "isomorphic", "whether two triple documents have equal parameter arrays");
    iso->add_option("first", opt.input, "first triple document")->required();
    iso->add_option("second", opt.input2, "second triple document")->required();
    add_format(iso);
    add_output(iso);

    CLI::App* module = app.add_subcommand("module", "segregated module pipelines");
    module->require_subcommand(1);
    CLI::App* mbuild = module->add_subcommand(
        "build", "standard and equitable generators of a module spec document");
    add_input(mbuild);
    add_format(mbuild);
    add_output(mbuild);
    CLI::App* mdecompose = module->add_subcommand(
        "decompose", "module spec document recovered from a reduced triple document");
    add_input(mdecompose);
    add_output(mdecompose);
    add_q(mdecompose, "algebra parameter hint for diameter-0 uq triples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    bool machine = opt.format == "machine";
    try {
        std::optional<Rational> q;
        if (!opt.q.empty()) q = Rational::parse(opt.q);
        std::optional<std::vector<Rational>> target;
        if (!opt.target.empty()) {
            std::vector<Rational> seq;
            std::stringstream ss(opt.target);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                size_t b = tok.find_first_not_of(" \t");
                size_t e = tok.find_last_not_of(" \t");
                if (b == std::string::npos)
                    throw ParseError("empty entry in sequence '" + opt.target + "'");
                seq.push_back(Rational::parse(tok.substr(b, e - b + 1)));
            }
            if (seq.empty()) throw ParseError("empty target sequence");
            target = std::move(seq);
        }

        if (*verify) {
            emit(opt.output, verify_report(parse_document(slurp(opt.input)), machine));
        } else if (*parr) {
            emit(opt.output, param_array_output(parse_document(slurp(opt.input)), machine));
        } else if (*base) {
            emit(opt.output, base_report(parse_document(slurp(opt.input)), machine));
        } else if (*extend) {
            Document doc = parse_document(slurp(opt.input));
            const auto* pd = std::get_if<PairDocument>(&doc);
            if (!pd) throw PreconditionFailed("extend expects a pair document");
            BidiagonalPair pair = verify_bd_pair(pd->a, pd->a_prime);
            emit(opt.output, triple_document_text(extend_pair(pair, target, q)));
        } else if (*construct) {
            Document doc = parse_document(slurp(opt.input));
            const auto* pa = std::get_if<ParameterArray>(&doc);
            if (!pa) throw PreconditionFailed("construct expects a parameter array document");
            emit(opt.output, triple_document_text(construct_from_parameter_array(*pa, q)));
        } else if (*reduce) {
            BidiagonalTriple t = verified_triple(parse_document(slurp(opt.input)), "reduce");
            ReducedTriple r = reduce_triple(t, q);
            const char* names[3] = {"first", "second", "third"};
            for (size_t k = 0; k < 3; ++k)
                std::cerr << names[k] << " map: " << affine_text(r.maps[k]) << "\n";
            emit(opt.output, triple_document_text(r.triple));
        } else if (*relations) {
            BidiagonalTriple t =
                verified_triple(parse_document(slurp(opt.input)), "relations");
            emit(opt.output, relations_report(t, machine));
        } else if (*iso) {
            BidiagonalTriple t1 =
                verified_triple(parse_document(slurp(opt.input)), "isomorphic");
            BidiagonalTriple t2 =
                verified_triple(parse_document(slurp(opt.input2)), "isomorphic");
            bool same = is_isomorphic(t1, t2);
            if (machine) {
                ojson out;
                out["isomorphic"] = same;
                emit(opt.output, out.dump(2) + "\n");
            } else {
                emit(opt.output, std::string("isomorphic: ") + (same ? "true" : "false") + "\n");
            }
        } else if (*module) {
            if (*mbuild) {
                Document doc = parse_document(slurp(opt.input));
                const auto* spec = std::get_if<ModuleSpec>(&doc);
                if (!spec)
                    throw PreconditionFailed("module build expects a module spec document");
                emit(opt.output, module_build_report(*spec, machine));
            } else {
                BidiagonalTriple t =
                    verified_triple(parse_document(slurp(opt.input)), "module decompose");
                emit(opt.output, serialize_document(triple_to_module(t, q).spec));
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Unrepresentable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
