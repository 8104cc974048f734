// Exact arithmetic over GF(p) and Q.
//
// Every element carries the modulus of its field (0 for the rationals), so
// mixing elements of different fields is detected at the operation site.

#ifndef TRIREP_FIELD_HPP
#define TRIREP_FIELD_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace trirep {

class FieldElement;

class FieldSpec {
public:
    enum class Kind { prime_field, rationals };

    /// GF(p). Throws std::invalid_argument unless p is a prime below 2^31.
    static FieldSpec prime(std::uint64_t p);
    static FieldSpec rationals() { return FieldSpec{}; }

    /// Parses the literal syntax `gf:<p>` or `q`.
    static FieldSpec parse(std::string_view text);

    Kind kind() const { return modulus_ == 0 ? Kind::rationals : Kind::prime_field; }
    bool is_prime_field() const { return modulus_ != 0; }
    bool is_rationals() const { return modulus_ == 0; }
    std::uint32_t modulus() const { return modulus_; }

    std::string to_string() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(std::int64_t v) const;
    FieldElement from_rational(const mpq_class& v) const;
    /// Parses `a`, `-a` or `a/b` into this field.
    FieldElement element(std::string_view text) const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    friend class FieldElement;
    FieldSpec() = default;
    explicit FieldSpec(std::uint32_t p) : modulus_(p) {}

    std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

class FieldElement {
public:
    FieldSpec field() const;
    bool is_zero() const;

    /// Residue in [0, p); only valid over GF(p).
    std::int64_t residue() const;
    /// Exact value; only valid over Q.
    const mpq_class& rational() const;

    FieldElement operator-() const;
    FieldElement inv() const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o) { return *this *= o.inv(); }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);

    std::string to_string() const;

private:
    friend class FieldSpec;
    FieldElement(std::uint32_t p, std::int64_t r) : modulus_(p), value_(r) {}
    explicit FieldElement(mpq_class q) : modulus_(0), value_(std::move(q)) {}

    void check_same_field(const FieldElement& o) const;

    std::uint32_t modulus_;
    std::variant<std::int64_t, mpq_class> value_;
};

using Vector = std::vector<FieldElement>;

/// n-fold additive repetition g + g + ... + g.
FieldElement n_times(std::uint64_t n, const FieldElement& g);

struct CyclicDecomposition {
    FieldElement generator;
    std::vector<std::uint64_t> multipliers;
    std::vector<int> signs;
};

/// Writes each value as sign * (multiplier x g) with multiplier >= 1.
///
/// Over GF(p) the generator is 1 and every sign is +1. Over Q the values must
/// be nonzero integers; g is the gcd of their absolute values.
CyclicDecomposition cyclic_decompose(std::span<const FieldElement> values);

/// Scales each rational vector by the lcm of its entries' denominators.
std::vector<Vector> integerize_basis(const std::vector<Vector>& basis);

std::string to_string(const Vector& v);

}  // namespace trirep

#endif
