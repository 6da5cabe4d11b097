#include "bidiag/serialize.hpp"

#include <vector>

#include "json.hpp"

#include "bidiag/errors.hpp"

namespace bidiag {

namespace {

using json = nlohmann::ordered_json;

json rational_list(const std::vector<Rational>& seq) {
    json out = json::array();
    for (const auto& r : seq) out.push_back(r.str());
    return out;
}

json matrix_rows(const Matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Rational parse_rational(const json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": rationals are written as strings");
    return Rational::parse(j.get<std::string>());
}

std::vector<Rational> parse_rational_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of rationals");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(parse_rational(item, where));
    return out;
}

// Triple and pair documents hold operators on one space, so their matrices
// must come in square.
Matrix parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of rows");
    size_t rows = j.size();
    if (rows == 0) return Matrix();
    if (!j[0].is_array()) throw ParseError(where + ": rows must be lists");
    size_t cols = j[0].size();
    if (cols != rows) throw ParseError(where + ": operator matrices must be square");
    Matrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError(where + ": row " + std::to_string(i) + " has the wrong length");
        for (size_t c = 0; c < cols; ++c)
            m.at(i, c) = parse_rational(j[i][c], where);
    }
    return m;
}

// Inner objects carry exactly the listed keys (a missing optional key is
// fine; an extra one is not).
void reject_unknown_keys(const json& j, const std::vector<std::string>& known,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const auto& k : known) ok = ok || k == key;
        if (!ok) throw ParseError(where + ": unknown key '" + key + "'");
    }
}

const json& field(const json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing key '" + key + "'");
    return *it;
}

json spec_to_json(const ModuleSpec& spec) {
    json out = json::object();
    out["algebra"] = spec.algebra == Algebra::sl2 ? "sl2" : "uq";
    if (spec.q) out["q"] = spec.q->str();
    json summands = json::array();
    for (const auto& s : spec.summands) {
        json entry = json::object();
        entry["d"] = s.d;
        entry["epsilon"] = s.epsilon;
        entry["multiplicity"] = s.multiplicity;
        summands.push_back(std::move(entry));
    }
    out["summands"] = std::move(summands);
    return out;
}

ModuleSpec spec_from_json(const json& j) {
    const std::string where = "module_spec";
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    reject_unknown_keys(j, {"algebra", "q", "summands"}, where);
    ModuleSpec spec;
    const json& alg = field(j, "algebra", where);
    if (alg == "sl2")
        spec.algebra = Algebra::sl2;
    else if (alg == "uq")
        spec.algebra = Algebra::uq;
    else
        throw ParseError(where + ": algebra must be 'sl2' or 'uq'");
    if (auto it = j.find("q"); it != j.end()) spec.q = parse_rational(*it, where);
    const json& summands = field(j, "summands", where);
    if (!summands.is_array()) throw ParseError(where + ": summands must be a list");
    for (const auto& entry : summands) {
        if (!entry.is_object()) throw ParseError(where + ": summands must be objects");
        reject_unknown_keys(entry, {"d", "epsilon", "multiplicity"}, where);
        Summand s;
        const json& d = field(entry, "d", where);
        const json& eps = field(entry, "epsilon", where);
        const json& mult = field(entry, "multiplicity", where);
        if (!d.is_number_unsigned() || !mult.is_number_unsigned() || !eps.is_number_integer())
            throw ParseError(where + ": summand fields must be integers");
        s.d = d.get<size_t>();
        s.epsilon = eps.get<int>();
        s.multiplicity = mult.get<size_t>();
        spec.summands.push_back(s);
    }
    return spec;
}

}  // namespace

std::string serialize_document(const Document& doc) {
    json out = json::object();
    if (const auto* t = std::get_if<TripleDocument>(&doc)) {
        json body = json::object();
        body["a"] = matrix_rows(t->a);
        body["a_prime"] = matrix_rows(t->a_prime);
        body["a_double"] = matrix_rows(t->a_double);
        out["triple"] = std::move(body);
    } else if (const auto* p = std::get_if<PairDocument>(&doc)) {
        json body = json::object();
        body["a"] = matrix_rows(p->a);
        body["a_prime"] = matrix_rows(p->a_prime);
        out["pair"] = std::move(body);
    } else if (const auto* pa = std::get_if<ParameterArray>(&doc)) {
        json body = json::object();
        body["first"] = rational_list(pa->first);
        body["second"] = rational_list(pa->second);
        body["third"] = rational_list(pa->third);
        body["shape"] = rational_list(pa->shape);
        out["parameter_array"] = std::move(body);
    } else {
        out["module_spec"] = spec_to_json(std::get<ModuleSpec>(doc));
    }
    return out.dump(2) + "\n";
}

Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("document is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || j.size() != 1)
        throw ParseError(
            "document must be an object with exactly one of: "
            "triple, pair, parameter_array, module_spec");

    if (auto it = j.find("triple"); it != j.end()) {
        const std::string where = "triple";
        if (!it->is_object()) throw ParseError(where + ": expected an object");
        reject_unknown_keys(*it, {"a", "a_prime", "a_double"}, where);
        TripleDocument t;
        t.a = parse_matrix(field(*it, "a", where), where + ".a");
        t.a_prime = parse_matrix(field(*it, "a_prime", where), where + ".a_prime");
        t.a_double = parse_matrix(field(*it, "a_double", where), where + ".a_double");
        return t;
    }
    if (auto it = j.find("pair"); it != j.end()) {
        const std::string where = "pair";
        if (!it->is_object()) throw ParseError(where + ": expected an object");
        reject_unknown_keys(*it, {"a", "a_prime"}, where);
        PairDocument p;
        p.a = parse_matrix(field(*it, "a", where), where + ".a");
        p.a_prime = parse_matrix(field(*it, "a_prime", where), where + ".a_prime");
        return p;
    }
    if (auto it = j.find("parameter_array"); it != j.end()) {
        const std::string where = "parameter_array";
        if (!it->is_object()) throw ParseError(where + ": expected an object");
        reject_unknown_keys(*it, {"first", "second", "third", "shape"}, where);
        ParameterArray pa;
        pa.first = parse_rational_list(field(*it, "first", where), where + ".first");
        pa.second = parse_rational_list(field(*it, "second", where), where + ".second");
        pa.third = parse_rational_list(field(*it, "third", where), where + ".third");
        pa.shape = parse_rational_list(field(*it, "shape", where), where + ".shape");
        return pa;
    }
    if (auto it = j.find("module_spec"); it != j.end()) return spec_from_json(*it);
    throw ParseError("unknown document kind '" + j.begin().key() + "'");
}

}  // namespace bidiag
