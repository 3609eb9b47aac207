#include "fareyidx/bfree.hpp"

#include <algorithm>
#include <sstream>

namespace fareyidx {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

BFreeSpec BFreeSpec::explicit_spec(std::vector<std::uint64_t> ps) {
    BFreeSpec b;
    b.kind = Kind::explicit_primes;
    b.primes = std::move(ps);
    b.validate();
    return b;
}

BFreeSpec BFreeSpec::kfree_spec(int k) {
    BFreeSpec b;
    b.kind = Kind::kfree;
    b.k = k;
    b.validate();
    return b;
}

void BFreeSpec::validate() const {
    if (theta <= 0.5 || theta >= 1.0)
        throw std::invalid_argument("BFreeSpec: theta must lie in (1/2, 1)");
    switch (kind) {
        case Kind::none:
            break;
        case Kind::explicit_primes:
            for (std::size_t i = 0; i < primes.size(); ++i) {
                if (!is_prime_u64(primes[i]))
                    throw std::invalid_argument("BFreeSpec: " + std::to_string(primes[i]) +
                                                " is not prime");
                if (i > 0 && primes[i] <= primes[i - 1])
                    throw std::invalid_argument("BFreeSpec: prime list must be strictly ascending");
            }
            break;
        case Kind::kfree:
            if (k < 2) throw std::invalid_argument("BFreeSpec: kfree requires k >= 2");
            break;
    }
}

BFreeSpec BFreeSpec::parse(const std::string& text) {
    if (text == "none" || text.empty()) return none_spec();
    if (text.rfind("kfree:", 0) == 0) {
        return kfree_spec(std::stoi(text.substr(6)));
    }
    if (text.rfind("primes:", 0) == 0) {
        std::vector<std::uint64_t> ps;
        std::stringstream ss(text.substr(7));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) ps.push_back(std::stoull(item));
        }
        return explicit_spec(std::move(ps));
    }
    throw std::invalid_argument("BFreeSpec: cannot parse '" + text + "'");
}

std::string BFreeSpec::to_string() const {
    switch (kind) {
        case Kind::none:
            return "none";
        case Kind::kfree:
            return "kfree:" + std::to_string(k);
        case Kind::explicit_primes: {
            std::string s = "primes:";
            for (std::size_t i = 0; i < primes.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(primes[i]);
            }
            return s;
        }
    }
    return "none";
}

}  // namespace fareyidx
