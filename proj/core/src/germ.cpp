#include "stabctab/germ.hpp"

#include "linalg.hpp"
#include "stabctab/error.hpp"

#include <string>

namespace stabctab {

CurveGerm::CurveGerm(Poly2 poly) : poly_(std::move(poly)) {
    if (poly_.is_zero()) throw InvalidGerm("the zero polynomial does not define a curve");
    if (poly_.coeff(0, 0) != 0) {
        throw InvalidGerm("f(0,0) = " + to_string(poly_.coeff(0, 0)) + " != 0: the origin is not on the curve");
    }
}

namespace {

int monomial_index(int a, int b) {
    const int d = a + b;
    return d * (d + 1) / 2 + b;
}

}  // namespace

int truncated_quotient_dimension(std::span<const Poly2> generators, int n) {
    detail::RowEchelon echelon;
    for (const Poly2& g : generators) {
        const int ord = g.order();
        if (ord < 0 || ord >= n) continue;
        for (int d = 0; d + ord < n; ++d) {
            for (int b = 0; b <= d; ++b) {
                const int a = d - b;
                detail::SparseRow row;
                for (const auto& [e, c] : g.terms()) {
                    const int ea = e.first + a;
                    const int eb = e.second + b;
                    if (ea + eb < n) row.emplace(monomial_index(ea, eb), c);
                }
                echelon.insert(std::move(row));
            }
        }
    }
    return n * (n + 1) / 2 - echelon.rank();
}

int local_quotient_dimension(std::span<const Poly2> generators, int cap) {
    for (int n = 2; n <= cap; n *= 2) {
        const int dn = truncated_quotient_dimension(generators, n);
        if (dn == truncated_quotient_dimension(generators, n + 1)) return dn;
    }
    throw NonIsolatedSingularity("quotient dimension did not stabilize below degree " + std::to_string(cap));
}

int milnor(const CurveGerm& g, int cap) {
    const Poly2 gens[] = {g.poly().dx(), g.poly().dy()};
    return local_quotient_dimension(gens, cap);
}

int tjurina(const CurveGerm& g, int cap) {
    const Poly2 gens[] = {g.poly(), g.poly().dx(), g.poly().dy()};
    return local_quotient_dimension(gens, cap);
}

int branch_count(const BranchSet& b) {
    if (b.branches.empty()) throw EmptyBranchSet("a germ has at least one branch");
    return static_cast<int>(b.branches.size());
}

void validate_branches(const CurveGerm& g, const BranchSet& b, int mu) {
    branch_count(b);
    if (b.declared_truncation) {
        if (*b.declared_truncation < 1) throw InvalidBranch("declared truncation must be positive");
        if (*b.declared_truncation < 2 * mu + 2) {
            throw TruncationTooSmall("declared truncation " + std::to_string(*b.declared_truncation) +
                                     " < 2*mu + 2 = " + std::to_string(2 * mu + 2));
        }
    }
    const int limit = b.declared_truncation ? *b.declared_truncation + 1 : -1;
    for (std::size_t i = 0; i < b.branches.size(); ++i) {
        const Branch& br = b.branches[i];
        const std::string name = "branch " + std::to_string(i + 1);
        if (br.x.coeff(0) != 0 || br.y.coeff(0) != 0) throw InvalidBranch(name + " does not pass through the origin");
        if (br.x.is_zero() && br.y.is_zero()) throw InvalidBranch(name + " is constant");
        const UniPoly residue = g.poly().compose(br.x, br.y, limit);
        if (!residue.is_zero()) {
            throw InvalidBranch(name + " does not lie on the curve: f(x(t), y(t)) = " + to_string(residue));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (b.branches[j].x == br.x && b.branches[j].y == br.y) {
                throw InvalidBranch(name + " repeats branch " + std::to_string(j + 1));
            }
        }
    }
}

int delta_candidate(const BranchSet& b, int truncation) {
    const int r = branch_count(b);
    const int t = truncation;
    // Powers x_i(t)^k, y_i(t)^k modulo t^T; degree-T monomials vanish mod t^T.
    std::vector<std::vector<UniPoly>> xpow(b.branches.size()), ypow(b.branches.size());
    for (std::size_t i = 0; i < b.branches.size(); ++i) {
        xpow[i].push_back(UniPoly({Rational(1)}));
        ypow[i].push_back(UniPoly({Rational(1)}));
        for (int k = 1; k < t; ++k) {
            xpow[i].push_back(UniPoly::mul(xpow[i].back(), b.branches[i].x, t));
            ypow[i].push_back(UniPoly::mul(ypow[i].back(), b.branches[i].y, t));
        }
    }
    detail::RowEchelon echelon;
    for (int d = 0; d < t; ++d) {
        for (int bexp = 0; bexp <= d; ++bexp) {
            const int aexp = d - bexp;
            detail::SparseRow row;
            for (std::size_t i = 0; i < b.branches.size(); ++i) {
                const UniPoly img = UniPoly::mul(xpow[i][static_cast<std::size_t>(aexp)],
                                                 ypow[i][static_cast<std::size_t>(bexp)], t);
                for (int k = 0; k <= img.degree(); ++k) {
                    if (img.coeff(k) != 0) row.emplace(static_cast<int>(i) * t + k, img.coeff(k));
                }
            }
            echelon.insert(std::move(row));
        }
    }
    return r * t - echelon.rank();
}

int delta(const CurveGerm& g, const BranchSet& b) {
    const int r = branch_count(b);
    const int mu = milnor(g);
    validate_branches(g, b, mu);
    // the conductor exponent is at most 2 delta = mu + r - 1; t2 is a second
    // reading to catch branch sets whose cokernel has not settled
    const int t1 = std::max(1, mu + r - 1);
    int t2 = 2 * t1 + 2;
    if (b.declared_truncation) t2 = std::min(t2, *b.declared_truncation + 1);
    if (t2 <= t1) {
        throw TruncationTooSmall("branches are exact only to t^" + std::to_string(*b.declared_truncation) +
                                 ", need t^" + std::to_string(t1));
    }
    const int d1 = delta_candidate(b, t1);
    const int d2 = delta_candidate(b, t2);
    if (d1 != d2 || d1 > mu) {
        throw TruncationTooSmall("cokernel dimension did not stabilize (" + std::to_string(d1) + " at T=" +
                                 std::to_string(t1) + ", " + std::to_string(d2) + " at T=" + std::to_string(t2) +
                                 "); the branch set is likely incomplete or repeated");
    }
    return d1;
}

bool milnor_formula_check(const CurveGerm& g, const BranchSet& b) {
    return milnor(g) == 2 * delta(g, b) - branch_count(b) + 1;
}

GermInvariants analyze_germ(const CurveGerm& g, const std::optional<BranchSet>& b) {
    GermInvariants out;
    out.mu = milnor(g);
    out.tau = tjurina(g);
    if (b) {
        out.r = branch_count(*b);
        out.delta = delta(g, *b);
        out.milnor_formula = out.mu == 2 * *out.delta - *out.r + 1;
    }
    return out;
}

}  // namespace stabctab
