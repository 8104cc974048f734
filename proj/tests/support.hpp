// Shared helpers and brute-force oracles for the unit tests.

#ifndef TRIREP_TESTS_SUPPORT_HPP
#define TRIREP_TESTS_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "trirep/complex.hpp"
#include "trirep/field.hpp"
#include "trirep/linear_code.hpp"

namespace testing {

using namespace trirep;

inline Vector vec(const FieldSpec& f, std::initializer_list<std::int64_t> xs) {
    Vector v;
    for (auto x : xs) v.push_back(f.from_int(x));
    return v;
}

inline LinearCode code(const FieldSpec& f, std::size_t n, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<Vector> basis;
    for (auto r : rows) basis.push_back(vec(f, r));
    return LinearCode(f, n, basis);
}

inline std::vector<std::int64_t> residues(const Vector& v) {
    std::vector<std::int64_t> out;
    for (const auto& x : v) out.push_back(x.residue());
    return out;
}

// All p^d combinations of an integer basis, computed with plain modular ints.
inline std::set<std::vector<std::int64_t>> span_mod_p(const std::vector<std::vector<std::int64_t>>& basis,
                                                      std::size_t n, std::int64_t p) {
    std::set<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> coef(basis.size(), 0);
    while (true) {
        std::vector<std::int64_t> w(n, 0);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) w[j] = ((w[j] + coef[i] * basis[i][j]) % p + p) % p;
        out.insert(w);
        std::size_t i = 0;
        while (i < coef.size() && ++coef[i] == p) coef[i++] = 0;
        if (i == coef.size()) break;
    }
    return out;
}

// Weight distribution {weight: count} of a set of integer vectors.
inline std::map<std::int64_t, std::int64_t> weight_distribution(const std::set<std::vector<std::int64_t>>& words) {
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& w : words) {
        std::int64_t k = 0;
        for (auto x : w) k += x != 0;
        ++out[k];
    }
    return out;
}

// Every x in GF(p)^T with A x = 0, by exhaustive search (T small).
inline std::set<std::vector<std::int64_t>> kernel_by_search(const TriangularConfiguration& delta, std::int64_t p) {
    std::vector<Triangle> ts(delta.triangles().begin(), delta.triangles().end());
    std::map<Edge, std::vector<std::size_t>> rows;
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (const auto& e : edges_of(ts[i])) rows[e].push_back(i);
    std::set<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> x(ts.size(), 0);
    while (true) {
        bool ok = true;
        for (const auto& [e, cols] : rows) {
            std::int64_t s = 0;
            for (auto c : cols) s += x[c];
            if (s % p != 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(x);
        std::size_t i = 0;
        while (i < x.size() && ++x[i] == p) x[i++] = 0;
        if (i == x.size()) break;
    }
    return out;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x7269726570ULL);
    return g;
}

inline FieldElement random_element(const FieldSpec& f) {
    if (f.is_prime_field()) return f.from_int(std::uniform_int_distribution<std::int64_t>(0, f.modulus() - 1)(rng()));
    std::int64_t num = std::uniform_int_distribution<std::int64_t>(-50, 50)(rng());
    std::int64_t den = std::uniform_int_distribution<std::int64_t>(1, 20)(rng());
    return f.from_rational(mpq_class(num, den));
}

}  // namespace testing

#endif
