#include "tesler/rational.hpp"

#include <cctype>
#include <cstddef>

namespace tesler {

Rat ratio(const Int& num, const Int& den) {
    if (den == 0) throw Error("ratio: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat ratio(long num, long den) { return ratio(Int(num), Int(den)); }

bool is_integral(const Rat& q) { return q.get_den() == 1; }

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw Error("parse_rat: empty string");
    std::size_t slash = s.find('/');
    if (slash != std::string::npos && s.find('/', slash + 1) != std::string::npos)
        throw Error("parse_rat: malformed rational '" + s + "'");
    auto check_int = [&](const std::string& part) {
        if (part.empty()) throw Error("parse_rat: malformed rational '" + s + "'");
        std::size_t k = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (k == part.size()) throw Error("parse_rat: malformed rational '" + s + "'");
        for (; k < part.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(part[k])))
                throw Error("parse_rat: malformed rational '" + s + "'");
    };
    auto strip_plus = [](std::string part) {
        if (!part.empty() && part[0] == '+') part.erase(0, 1);
        return part;
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rat(Int(strip_plus(s)));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    return ratio(Int(strip_plus(num)), Int(strip_plus(den)));
}

Rat dot(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size()) throw Error("dot: length mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

std::vector<Int> primitive_vector(std::vector<Int> v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g == 0) throw Error("primitive_vector: zero vector");
    for (Int& x : v) x /= g;
    return v;
}

}  // namespace tesler
