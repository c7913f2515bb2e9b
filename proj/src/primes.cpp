#include "bock/primes.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "bock/error.hpp"

namespace bock {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t n = 2; n <= bound; ++n)
        if (is_prime(n))
            out.push_back(n);
    return out;
}

std::vector<std::uint32_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint32_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(static_cast<std::uint32_t>(d));
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

Prime::Prime(std::uint32_t value) : value_(value)
{
    if (!is_prime(value))
        throw Error(ErrorKind::InvalidInput, std::to_string(value) + " is not prime");
}

namespace {

std::vector<std::uint32_t> normalized(std::vector<std::uint32_t> v)
{
    for (auto p : v)
        if (!is_prime(p))
            throw Error(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

using Vec = std::vector<std::uint32_t>;

Vec set_union(const Vec& a, const Vec& b)
{
    Vec out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Vec set_intersection(const Vec& a, const Vec& b)
{
    Vec out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Vec set_difference(const Vec& a, const Vec& b)
{
    Vec out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

PrimeSet::PrimeSet(Kind kind, std::vector<std::uint32_t> listed)
    : kind_(kind), listed_(std::move(listed))
{
}

PrimeSet PrimeSet::finite(std::vector<std::uint32_t> primes)
{
    return PrimeSet(Kind::Finite, normalized(std::move(primes)));
}

PrimeSet PrimeSet::cofinite(std::vector<std::uint32_t> excluded)
{
    return PrimeSet(Kind::Cofinite, normalized(std::move(excluded)));
}

bool PrimeSet::contains(std::uint32_t p) const
{
    const bool listed = std::binary_search(listed_.begin(), listed_.end(), p);
    return is_finite() ? listed : (!listed && is_prime(p));
}

bool PrimeSet::contains(Prime p) const { return contains(p.value()); }

PrimeSet PrimeSet::complement() const
{
    return PrimeSet(is_finite() ? Kind::Cofinite : Kind::Finite, listed_);
}

PrimeSet PrimeSet::operator|(const PrimeSet& other) const
{
    const auto& a = listed_;
    const auto& b = other.listed_;
    if (is_finite() && other.is_finite())
        return PrimeSet(Kind::Finite, set_union(a, b));
    if (is_finite())
        return PrimeSet(Kind::Cofinite, set_difference(b, a));
    if (other.is_finite())
        return PrimeSet(Kind::Cofinite, set_difference(a, b));
    return PrimeSet(Kind::Cofinite, set_intersection(a, b));
}

PrimeSet PrimeSet::operator&(const PrimeSet& other) const
{
    const auto& a = listed_;
    const auto& b = other.listed_;
    if (is_finite() && other.is_finite())
        return PrimeSet(Kind::Finite, set_intersection(a, b));
    if (is_finite())
        return PrimeSet(Kind::Finite, set_difference(a, b));
    if (other.is_finite())
        return PrimeSet(Kind::Finite, set_difference(b, a));
    return PrimeSet(Kind::Cofinite, set_union(a, b));
}

std::string PrimeSet::to_string() const
{
    std::ostringstream os;
    auto braces = [&os](const Vec& v) {
        os << '{';
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? ", " : "") << v[i];
        os << '}';
    };
    if (is_finite()) {
        braces(listed_);
    } else if (listed_.empty()) {
        os << "all primes";
    } else {
        os << "all primes except ";
        braces(listed_);
    }
    return os.str();
}

}  // namespace bock
