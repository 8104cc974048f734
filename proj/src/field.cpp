#include "trirep/field.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace trirep {

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

std::int64_t reduce(std::int64_t v, std::uint32_t p) {
    const std::int64_t m = static_cast<std::int64_t>(p);
    v %= m;
    return v < 0 ? v + m : v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9')
            throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    }
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return mpz_class(digits, 10);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
    return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
    text = trim(text);
    if (text == "q" || text == "Q") return rationals();
    if (text.substr(0, 3) == "gf:") {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
            throw std::invalid_argument("malformed field literal '" + std::string(text) + "'");
        return prime(p);
    }
    throw std::invalid_argument("unknown field literal '" + std::string(text) +
                                "' (expected gf:<p> or q)");
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "q" : "gf:" + std::to_string(modulus_);
}

FieldElement FieldSpec::zero() const { return from_int(0); }
FieldElement FieldSpec::one() const { return from_int(1); }

FieldElement FieldSpec::from_int(std::int64_t v) const {
    if (is_rationals()) return FieldElement(mpq_class(mpz_class(static_cast<long>(v))));
    return FieldElement(modulus_, reduce(v, modulus_));
}

FieldElement FieldSpec::from_rational(const mpq_class& v) const {
    if (is_rationals()) {
        mpq_class c(v);
        c.canonicalize();
        return FieldElement(std::move(c));
    }
    const mpz_class m(static_cast<unsigned long>(modulus_));
    mpz_class den = v.get_den() % m;
    if (den == 0) throw std::invalid_argument("denominator vanishes in " + to_string());
    mpz_class num = v.get_num() % m;
    if (num < 0) num += m;
    const auto n = static_cast<std::int64_t>(num.get_ui());
    const auto d = static_cast<std::int64_t>(mpz_class(den < 0 ? den + m : den).get_ui());
    return FieldElement(modulus_, n * mod_pow(d, modulus_ - 2, modulus_) % modulus_);
}

FieldElement FieldSpec::element(std::string_view text) const {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    mpq_class q;
    if (slash == std::string_view::npos) {
        q = mpq_class(parse_integer(s, s));
    } else {
        mpz_class num = parse_integer(s.substr(0, slash), s);
        mpz_class den = parse_integer(s.substr(slash + 1), s);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
        q = mpq_class(num, den);
        q.canonicalize();
    }
    return from_rational(q);
}

FieldSpec FieldElement::field() const {
    return modulus_ == 0 ? FieldSpec{} : FieldSpec(modulus_);
}

bool FieldElement::is_zero() const {
    if (modulus_ != 0) return std::get<std::int64_t>(value_) == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

std::int64_t FieldElement::residue() const {
    if (modulus_ == 0) throw std::logic_error("residue() called on a rational element");
    return std::get<std::int64_t>(value_);
}

const mpq_class& FieldElement::rational() const {
    if (modulus_ != 0) throw std::logic_error("rational() called on a GF(p) element");
    return std::get<mpq_class>(value_);
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (modulus_ != o.modulus_)
        throw std::invalid_argument("operands from different fields (" + field().to_string() +
                                    " vs " + o.field().to_string() + ")");
}

FieldElement FieldElement::operator-() const {
    if (modulus_ != 0) return FieldElement(modulus_, reduce(-std::get<std::int64_t>(value_), modulus_));
    return FieldElement(mpq_class(-std::get<mpq_class>(value_)));
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw std::domain_error("inversion of zero");
    if (modulus_ != 0)
        return FieldElement(modulus_, mod_pow(std::get<std::int64_t>(value_), modulus_ - 2, modulus_));
    return FieldElement(mpq_class(1 / std::get<mpq_class>(value_)));
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same_field(o);
    if (modulus_ != 0) {
        auto& v = std::get<std::int64_t>(value_);
        v += std::get<std::int64_t>(o.value_);
        if (v >= modulus_) v -= modulus_;
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_same_field(o);
    if (modulus_ != 0) {
        auto& v = std::get<std::int64_t>(value_);
        v -= std::get<std::int64_t>(o.value_);
        if (v < 0) v += modulus_;
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same_field(o);
    if (modulus_ != 0) {
        auto& v = std::get<std::int64_t>(value_);
        v = v * std::get<std::int64_t>(o.value_) % modulus_;
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    }
    return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.modulus_ != b.modulus_) return false;
    if (a.modulus_ != 0) return std::get<std::int64_t>(a.value_) == std::get<std::int64_t>(b.value_);
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string FieldElement::to_string() const {
    if (modulus_ != 0) return std::to_string(std::get<std::int64_t>(value_));
    return std::get<mpq_class>(value_).get_str();
}

FieldElement n_times(std::uint64_t n, const FieldElement& g) {
    const FieldSpec f = g.field();
    if (f.is_prime_field()) return f.from_int(static_cast<std::int64_t>(n % f.modulus())) * g;
    mpz_class count;
    mpz_import(count.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return f.from_rational(mpq_class(count)) * g;
}

CyclicDecomposition cyclic_decompose(std::span<const FieldElement> values) {
    if (values.empty()) throw std::invalid_argument("cyclic_decompose: no values");
    const FieldSpec f = values.front().field();
    CyclicDecomposition out{f.one(), {}, {}};
    out.multipliers.reserve(values.size());
    out.signs.reserve(values.size());
    for (const auto& v : values) {
        if (!(v.field() == f)) throw std::invalid_argument("cyclic_decompose: mixed fields");
        if (v.is_zero()) throw std::invalid_argument("cyclic_decompose: zero value");
    }
    if (f.is_prime_field()) {
        for (const auto& v : values) {
            out.multipliers.push_back(static_cast<std::uint64_t>(v.residue()));
            out.signs.push_back(1);
        }
        return out;
    }
    mpz_class g = 0;
    for (const auto& v : values) {
        if (v.rational().get_den() != 1)
            throw std::invalid_argument("cyclic_decompose: non-integer rational " + v.to_string());
        mpz_class a = abs(v.rational().get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    out.generator = f.from_rational(mpq_class(g));
    for (const auto& v : values) {
        mpz_class m = abs(v.rational().get_num()) / g;
        if (!m.fits_ulong_p() || m.get_ui() > std::numeric_limits<std::uint64_t>::max())
            throw std::invalid_argument("cyclic_decompose: multiplier too large");
        out.multipliers.push_back(m.get_ui());
        out.signs.push_back(sgn(v.rational()) < 0 ? -1 : 1);
    }
    return out;
}

std::vector<Vector> integerize_basis(const std::vector<Vector>& basis) {
    std::vector<Vector> out;
    out.reserve(basis.size());
    for (const auto& vec : basis) {
        mpz_class l = 1;
        for (const auto& x : vec) {
            if (!x.field().is_rationals())
                throw std::invalid_argument("integerize_basis: field is not Q");
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.rational().get_den_mpz_t());
        }
        Vector scaled;
        scaled.reserve(vec.size());
        const auto factor = FieldSpec::rationals().from_rational(mpq_class(l));
        for (const auto& x : vec) scaled.push_back(x * factor);
        out.push_back(std::move(scaled));
    }
    return out;
}

std::string to_string(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

}  // namespace trirep
