// Shared helpers for the test binaries: rational/matrix shorthand, the
// module corpus the correspondence and property tests run over, seeded
// random matrices, and a tiny wrapper for driving the CLI binary.
#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bidiag/classify.hpp"
#include "bidiag/extension.hpp"
#include "bidiag/modules.hpp"
#include "bidiag/triple.hpp"

namespace corpus {

using namespace bidiag;

inline Rational R(long n, long d = 1) { return Rational(n, d); }

inline Matrix mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> conv;
    conv.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rational> row;
        row.reserve(r.size());
        for (long v : r) row.emplace_back(v, 1);
        conv.push_back(std::move(row));
    }
    return Matrix::from_rows(conv);
}

inline Matrix matq(const std::vector<std::vector<Rational>>& rows) {
    return Matrix::from_rows(rows);
}

inline std::vector<Rational> seq(const std::vector<long>& vals) {
    std::vector<Rational> out;
    out.reserve(vals.size());
    for (long v : vals) out.emplace_back(v, 1);
    return out;
}

// Every multiset of summand degrees of one parity with total dimension
// (sum of degree+1) at most `max_dim`, as non-increasing degree lists.
// Deterministic order: even-degree specs first, then odd, each block by
// ascending total dimension and then lexicographically.
inline std::vector<std::vector<size_t>> one_parity_degree_multisets(size_t max_dim) {
    std::vector<std::vector<size_t>> out;
    auto dim_of = [](const std::vector<size_t>& degs) {
        size_t s = 0;
        for (size_t d : degs) s += d + 1;
        return s;
    };
    for (long parity = 0; parity <= 1; ++parity) {
        std::vector<std::vector<size_t>> block;
        std::vector<size_t> cur;
        auto grow = [&](auto&& self, long cap_deg, long dim_left) -> void {
            if (!cur.empty()) block.push_back(cur);
            long start = cap_deg;
            if (start >= parity && (start - parity) % 2 != 0) --start;
            for (long d = start; d >= parity; d -= 2) {
                if (d + 1 > dim_left) continue;
                cur.push_back(static_cast<size_t>(d));
                self(self, d, dim_left - (d + 1));
                cur.pop_back();
            }
        };
        grow(grow, static_cast<long>(max_dim) - 1, static_cast<long>(max_dim));
        std::sort(block.begin(), block.end(),
                  [&](const auto& a, const auto& b) {
                      size_t da = dim_of(a), db = dim_of(b);
                      if (da != db) return da < db;
                      return a < b;
                  });
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

inline ModuleSpec spec_from_degrees(Algebra alg, const std::vector<size_t>& degs,
                                    const std::optional<Rational>& q = std::nullopt) {
    ModuleSpec spec;
    spec.algebra = alg;
    spec.q = q;
    for (size_t d : degs) {
        if (!spec.summands.empty() && spec.summands.back().d == d) {
            ++spec.summands.back().multiplicity;
        } else {
            spec.summands.push_back({d, 1, 1});
        }
    }
    return spec;
}

inline std::vector<ModuleSpec> correspondence_specs(Algebra alg,
                                                    const std::optional<Rational>& q,
                                                    size_t max_dim) {
    std::vector<ModuleSpec> out;
    for (const auto& degs : one_parity_degree_multisets(max_dim))
        out.push_back(spec_from_degrees(alg, degs, q));
    return out;
}

// Invertible matrix with entries in [-3, 3] (halves allowed), found by
// rejection.  Deterministic for a given rng state.
inline Matrix random_invertible(std::mt19937_64& rng, size_t n) {
    std::uniform_int_distribution<long> num(-6, 6);
    for (;;) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = Rational(num(rng), 2);
        if (rref(m).second == n) return m;
    }
}

inline Rational random_nonzero(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    for (;;) {
        long n = num(rng);
        if (n != 0) return Rational(n, den(rng));
    }
}

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    return Rational(num(rng), den(rng));
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI with the given argument string.  stdin is fed from
// `stdin_path` when nonempty; stderr is folded into the captured output
// when `merge_stderr`, dropped otherwise.
inline RunResult run_cli(const std::string& args, const std::string& stdin_path = "",
                         bool merge_stderr = false) {
    std::string cmd = "\"" BIDIAG_CLI_PATH "\" " + args;
    if (!stdin_path.empty()) cmd += " < \"" + stdin_path + "\"";
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return res;
}

// Temp file fed to the CLI; removed on destruction.
class TempDoc {
public:
    TempDoc(const std::string& tag, const std::string& contents) {
        static int counter = 0;
        std::ostringstream name;
        name << "/tmp/bidiag_test_" << getpid() << "_" << counter++ << "_" << tag
             << ".json";
        path_ = name.str();
        std::ofstream out(path_);
        out << contents;
    }
    ~TempDoc() { std::remove(path_.c_str()); }
    TempDoc(const TempDoc&) = delete;
    TempDoc& operator=(const TempDoc&) = delete;
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace corpus
