#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "trirep/errors.hpp"
#include "trirep/representation.hpp"

using namespace trirep;
using namespace testing;

namespace {

std::set<std::vector<std::int64_t>> as_residues(const std::vector<Codeword>& words) {
    std::set<std::vector<std::int64_t>> out;
    for (const auto& w : words) out.insert(residues(w.coordinates));
    return out;
}

std::vector<std::vector<std::int64_t>> basis_residues(const LinearCode& c) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& b : c.basis()) out.push_back(residues(b));
    return out;
}

// Support-minimal nonzero words, by pairwise comparison.
std::set<std::vector<std::int64_t>> minimal_by_search(const std::set<std::vector<std::int64_t>>& words) {
    std::set<std::vector<std::int64_t>> out;
    for (const auto& d : words) {
        bool nonzero = false;
        for (auto x : d) nonzero = nonzero || x != 0;
        if (!nonzero) continue;
        bool minimal = true;
        for (const auto& c : words) {
            bool cz = true, sub = true, proper = false;
            for (std::size_t j = 0; j < c.size(); ++j) {
                cz = cz && c[j] == 0;
                if (c[j] != 0 && d[j] == 0) sub = false;
                if (c[j] == 0 && d[j] != 0) proper = true;
            }
            if (!cz && sub && proper) minimal = false;
        }
        if (minimal) out.insert(d);
    }
    return out;
}

}  // namespace

TEST_CASE("weight and degree") {
    const auto f3 = FieldSpec::prime(3);
    CHECK(weight(vec(f3, {1, 0, 2, 0})) == 2);
    const auto q = FieldSpec::rationals();
    CHECK(weight(Vector{q.element("1/2"), q.element("-1/2")}) == 2);
    const auto c = code(f3, 3, {{1, 1, 0}, {0, 1, 1}});
    CHECK(degree(vec(f3, {1, 2, 1}), c) == 2);
    CHECK(degree(vec(f3, {2, 2, 0}), c) == 1);
    CHECK(degree(vec(f3, {0, 0, 0}), c) == 0);
    CHECK_THROWS(degree(vec(f3, {1, 0, 0}), c));
}

TEST_CASE("construction rejects bad bases") {
    const auto f = FieldSpec::prime(2);
    CHECK_THROWS_AS(code(f, 3, {{1, 1, 0}, {1, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(code(f, 3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(LinearCode(f, 2, {vec(FieldSpec::prime(3), {1, 1})}), std::invalid_argument);
}

TEST_CASE("enumeration of a tiny code") {
    const auto f = FieldSpec::prime(2);
    const auto words = enumerate_codewords(code(f, 3, {{1, 1, 0}}));
    CHECK(as_residues(words) == std::set<std::vector<std::int64_t>>{{0, 0, 0}, {1, 1, 0}});
    // lexicographic in coefficients
    CHECK(words[0].coefficients == vec(f, {0}));
    CHECK(words[1].coefficients == vec(f, {1}));
}

TEST_CASE("enumeration matches a modular-integer oracle") {
    for (std::uint64_t p : {2, 3, 5}) {
        const auto f = FieldSpec::prime(p);
        for (int t = 0; t < 15; ++t) {
            const std::size_t n = 2 + t % 4;
            std::vector<Vector> rows;
            for (int i = 0; i < 3; ++i) {
                Vector r;
                for (std::size_t j = 0; j < n; ++j) r.push_back(random_element(f));
                rows.push_back(r);
            }
            rows = independent_rows(rows, f);
            rows.erase(std::remove_if(rows.begin(), rows.end(), [](const Vector& r) { return weight(r) == 0; }),
                       rows.end());
            const LinearCode c(f, n, rows);
            const auto words = enumerate_codewords(c);
            CHECK(words.size() == codeword_count(c));
            std::uint64_t expected = 1;
            for (std::size_t i = 0; i < c.dimension(); ++i) expected *= p;
            CHECK(words.size() == expected);
            const auto oracle = span_mod_p(basis_residues(c), n, static_cast<std::int64_t>(p));
            CHECK(as_residues(words) == oracle);
            CHECK(as_residues(words).size() == words.size());
            for (const auto& w : words) CHECK(c.combine(w.coefficients) == w.coordinates);
        }
    }
}

TEST_CASE("enumeration budget and infinite codes") {
    const auto f = FieldSpec::prime(5);
    const auto c = code(f, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(enumerate_codewords(c, {100}), BudgetExceeded);
    CHECK(enumerate_codewords(c, {125}).size() == 125);
    CHECK_THROWS_AS(codeword_count(code(FieldSpec::rationals(), 1, {{1}})), std::invalid_argument);
}

TEST_CASE("minimal codewords") {
    const auto f2 = FieldSpec::prime(2);
    CHECK(as_residues(minimal_codewords(code(f2, 3, {{1, 1, 0}, {0, 0, 1}}))) ==
          std::set<std::vector<std::int64_t>>{{1, 1, 0}, {0, 0, 1}});
    const auto f3 = FieldSpec::prime(3);
    CHECK(as_residues(minimal_codewords(code(f3, 2, {{1, 1}}))) ==
          std::set<std::vector<std::int64_t>>{{1, 1}, {2, 2}});
    CHECK(minimal_codewords(LinearCode(f2, 3, {})).empty());
}

TEST_CASE("minimal codewords match pairwise search and are closed under scaling") {
    for (std::uint64_t p : {2, 3, 5}) {
        const auto f = FieldSpec::prime(p);
        for (int t = 0; t < 10; ++t) {
            std::vector<Vector> rows;
            for (int i = 0; i < 3; ++i) {
                Vector r;
                for (int j = 0; j < 5; ++j) r.push_back(random_element(f));
                rows.push_back(r);
            }
            const LinearCode c(f, 5, independent_rows(rows, f));
            const auto mins = as_residues(minimal_codewords(c));
            CHECK(mins == minimal_by_search(as_residues(enumerate_codewords(c))));
            for (const auto& m : minimal_codewords(c)) {
                for (std::uint64_t a = 1; a < p; ++a) {
                    Vector s;
                    for (const auto& x : m.coordinates) s.push_back(f.from_int(static_cast<std::int64_t>(a)) * x);
                    CHECK(mins.count(residues(s)) == 1);
                }
            }
        }
    }
}

TEST_CASE("puncture") {
    const auto f = FieldSpec::prime(3);
    const auto c = code(f, 4, {{1, 0, 1, 2}, {0, 1, 1, 1}});
    CHECK(puncture(c, {}).same_code(c));
    const auto p = puncture(c, {2, 3});
    CHECK(p.length() == 2);
    CHECK(p.dimension() == 2);
    const auto p2 = puncture(c, {0, 1});
    CHECK(p2.dimension() <= c.dimension());
    CHECK(p2.contains(vec(f, {1, 2})));
    const auto p3 = puncture(code(f, 3, {{1, 1, 0}, {0, 0, 1}}), {2});
    CHECK(p3.dimension() == 1);
}

TEST_CASE("double code") {
    const auto f = FieldSpec::prime(3);
    const auto c = code(f, 3, {{1, 2, 0}, {0, 1, 1}});
    const auto d = double_code(c);
    CHECK(d.length() == 6);
    CHECK(d.dimension() == 2);
    const auto words = enumerate_codewords(d);
    for (const auto& w : words) {
        CHECK(weight(w.coordinates) % 2 == 0);
        const Vector first(w.coordinates.begin(), w.coordinates.begin() + 3);
        CHECK(c.contains(first));
        CHECK(double_word(first) == w.coordinates);
    }
    // projection to the first half preserves support containment
    const auto cw = enumerate_codewords(c);
    for (const auto& a : cw)
        for (const auto& b : cw)
            CHECK(support_subset(support_of(a.coordinates), support_of(b.coordinates)) ==
                  support_subset(support_of(double_word(a.coordinates)), support_of(double_word(b.coordinates))));
    const auto z = double_code(LinearCode(f, 2, {}));
    CHECK(z.length() == 4);
    CHECK(z.dimension() == 0);
}

TEST_CASE("representable bases") {
    const auto q = FieldSpec::rationals();
    CHECK(is_representable_basis({}, q).representable);
    const auto r = is_representable_basis({Vector{q.element("1/2"), q.element("1/3")}}, q);
    CHECK(r.representable);
    CHECK(r.rescaled);
    CHECK(r.witness[0] == vec(q, {3, 2}));
    CHECK_FALSE(is_representable_basis({vec(q, {1, 2})}, q).rescaled);
    CHECK_FALSE(is_representable_basis({vec(FieldSpec::prime(2), {1, 1})}, FieldSpec::prime(2)).rescaled);
}

TEST_CASE("code files") {
    std::istringstream in("# comment\nfield gf:3\nlength 3\n\n1 2 0\n0 1 -1\n");
    const auto c = read_code(in);
    CHECK(c.dimension() == 2);
    std::ostringstream out;
    write_code(out, c);
    CHECK(out.str() == "field gf:3\nlength 3\n1 2 0\n0 1 2\n");
    std::istringstream again(out.str());
    CHECK(read_code(again).same_code(c));

    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream s(text);
        try {
            read_code(s);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("field gf:4\n") == 1);
    CHECK(line_of("field gf:2\nlength 2\n1 1\n1 x\n") == 4);
    CHECK(line_of("field gf:2\nlength 2\n1 1 1\n") == 3);
    CHECK(line_of("field gf:2\nlength 2\n1 1\n1 1\n") == 4);
    CHECK(line_of("length 2\n") == 1);
    CHECK(line_of("field q\nlength 2\n1 1/0\n") == 3);
}
