#include "geomrep/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace geomrep {

Rat rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + text);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rat& q) { return q.get_d(); }

namespace {

// floor(sqrt(q * 4^bits)) as an integer, so (r/2^bits)^2 <= q.
Int floor_sqrt_scaled(const Rat& q, unsigned bits) {
    if (sgn(q) < 0) throw std::invalid_argument("sqrt of negative rational");
    // q = n/d; floor(sqrt(n/d * 4^bits)) = floor(sqrt(n * d * 4^bits) / d).
    Int n = q.get_num();
    Int d = q.get_den();
    Int scaled = n * d;
    scaled <<= (2 * bits);
    Int root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    return root / d;  // floor division is fine: root/d <= sqrt(n/d)*2^bits
}

}  // namespace

Rat sqrt_lower(const Rat& q, unsigned bits) {
    Int root = floor_sqrt_scaled(q, bits);
    Int den(1);
    den <<= bits;
    Rat r(root, den);
    r.canonicalize();
    // Floor division above can overshoot by rounding; step down if needed.
    while (r * r > q) {
        root -= 1;
        r = Rat(root, den);
        r.canonicalize();
    }
    return r;
}

Rat sqrt_upper(const Rat& q, unsigned bits) {
    Rat lo = sqrt_lower(q, bits);
    if (lo * lo == q) return lo;
    Int den(1);
    den <<= bits;
    Rat step(1, den);
    step.canonicalize();
    Rat r = lo + step;
    while (r * r < q) r += step;
    return r;
}

Rat rationalize(double x, unsigned long max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("cannot rationalize non-finite value");
    bool neg = x < 0;
    double v = neg ? -x : x;
    // Continued-fraction convergents p/q of v until q would exceed max_den.
    unsigned long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 1e18) break;
        unsigned long a = static_cast<unsigned long>(fl);
        unsigned long p2 = a * p1 + p0;
        unsigned long q2 = a * q1 + q0;
        if (q2 > max_den || (q1 != 0 && p2 / std::max(1ul, q2) > (1ul << 62))) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return rat(0);
    Rat r(static_cast<long>(p1), static_cast<long>(q1));
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

}  // namespace geomrep
