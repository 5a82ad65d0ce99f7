#include "stabctab/surd.hpp"

#include "stabctab/error.hpp"

namespace stabctab {

SquarefreeSplit squarefree_split(const Integer& n) {
    if (n <= 0) throw InvalidParameters("squarefree_split needs a positive integer");
    Integer core = n;
    Integer root = 1;
    for (Integer k = 2; k * k <= core; ++k) {
        const Integer k2 = k * k;
        while (core % k2 == 0) {
            core /= k2;
            root *= k;
        }
    }
    return {core, root};
}

Surd::Surd(Rational p, Rational q, Integer n) : p_(std::move(p)), q_(std::move(q)), n_(std::move(n)) {
    if (q_ == 0) {
        n_ = 1;
        return;
    }
    if (n_ <= 0) throw InvalidParameters("surd radicand must be positive");
    const SquarefreeSplit split = squarefree_split(n_);
    n_ = split.core;
    q_ *= Rational(split.root);
    if (n_ == 1) {
        p_ += q_;
        q_ = 0;
    }
}

Surd Surd::sqrt(const Rational& x) {
    if (x < 0) throw InvalidParameters("square root of a negative number");
    if (x == 0) return Surd();
    // sqrt(u/v) = sqrt(u v) / v
    const Integer u = numerator(x);
    const Integer v = denominator(x);
    return Surd(Rational(0), Rational(Integer(1), v), u * v);
}

namespace {

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// sign of a + b sqrt(n), n squarefree
int sign_of(const Rational& a, const Rational& b, const Integer& n) {
    const int sa = sign_of(a);
    const int sb = sign_of(b);
    if (sb == 0) return sa;
    if (n == 1) return sign_of(a + b);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: whichever has the larger square wins
    const int cmp = sign_of(a * a - b * b * Rational(n));
    return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
}

}  // namespace

int Surd::sign() const { return sign_of(p_, q_, n_); }

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
    const Rational a = x.p_ - y.p_;
    int s = 0;
    if (x.q_ == 0 && y.q_ == 0) {
        s = sign_of(a);
    } else if (y.q_ == 0) {
        s = sign_of(a, x.q_, x.n_);
    } else if (x.q_ == 0) {
        s = sign_of(a, -y.q_, y.n_);
    } else if (x.n_ == y.n_) {
        s = sign_of(a, x.q_ - y.q_, x.n_);
    } else {
        // u + v with u = a + qx sqrt(nx), v = -qy sqrt(ny)
        const int su = sign_of(a, x.q_, x.n_);
        const int sv = -sign_of(y.q_);
        if (su == 0) {
            s = sv;
        } else if (su == sv) {
            s = su;
        } else {
            // compare u^2 = a^2 + qx^2 nx + 2 a qx sqrt(nx) against v^2 = qy^2 ny
            const Rational rest = a * a + x.q_ * x.q_ * Rational(x.n_) - y.q_ * y.q_ * Rational(y.n_);
            const int cmp = sign_of(rest, Rational(2) * a * x.q_, x.n_);
            s = cmp == 0 ? 0 : (cmp > 0 ? su : sv);
        }
    }
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer Surd::floor() const {
    // Integer estimate first, then exact correction.
    Integer guess = stabctab::floor(p_);
    if (q_ != 0) {
        const Rational mag = q_ < 0 ? Rational(-q_) : q_;
        const Integer num = numerator(mag);
        const Integer root = boost::multiprecision::sqrt(Integer(num * num * n_));
        const Integer approx = root / denominator(mag);
        guess += q_ > 0 ? approx : Integer(-approx - 1);
    }
    while (Surd(Rational(guess + 1)) <= *this) ++guess;
    while (Surd(Rational(guess)) > *this) --guess;
    return guess;
}

Integer Surd::ceil() const {
    const Integer f = floor();
    return Surd(Rational(f)) == *this ? f : Integer(f + 1);
}

std::string to_string(const Surd& s) {
    if (s.is_rational()) return to_string(s.rational_part());
    const Rational& q = s.surd_part();
    const bool negative = q < 0;
    const std::string mag = to_string(negative ? Rational(-q) : q);
    return to_string(s.rational_part()) + (negative ? "-" : "+") + mag + "*sqrt(" + s.radicand().str() + ")";
}

Surd parse_surd(std::string_view text) {
    const auto star = text.find("*sqrt(");
    if (star == std::string_view::npos) return Surd(parse_rational(text));
    if (text.empty() || text.back() != ')') throw ParseError("malformed surd '" + std::string(text) + "'");
    // the sign separating p from q is the last '+' or '-' before "*sqrt(" that is not a leading sign
    std::size_t split = std::string_view::npos;
    for (std::size_t i = star; i-- > 1;) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != '/') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) throw ParseError("malformed surd '" + std::string(text) + "'");
    const Rational p = parse_rational(text.substr(0, split));
    Rational q = parse_rational(text.substr(split + 1, star - split - 1));
    if (text[split] == '-') q = -q;
    const std::string_view radicand = text.substr(star + 6, text.size() - star - 7);
    const Rational n = parse_rational(radicand);
    if (!is_integer(n) || n <= 0) throw ParseError("surd radicand must be a positive integer");
    return Surd(p, q, numerator(n));
}

}  // namespace stabctab
