#pragma once

// Exact divergences between distributions on {0,1}^m: total variation,
// l_p, Renyi (all orders), KL, max-divergence, and the bounded-moment test
// function distance with its extremal witness. The semi-infinite subgaussian
// and subexponential distances live in subgaussian.hpp.

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "klext/distribution.hpp"

namespace klext {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct DivergenceKind {
    enum class Tag { TV, Lp, Renyi, KL, MaxDiv, MomentClass, SubgaussianBounds, SubexponentialBounds };
    Tag tag = Tag::TV;
    double param = 0.0;  // p for Lp, alpha for Renyi, q for MomentClass

    static DivergenceKind tv() { return {Tag::TV, 0.0}; }
    static DivergenceKind lp(double p) {
        if (!(p >= 1.0)) throw std::invalid_argument("lp kind: p must be >= 1");
        return {Tag::Lp, p};
    }
    static DivergenceKind renyi(double alpha) {
        if (!(alpha >= 0.0)) throw std::invalid_argument("renyi kind: alpha must be >= 0");
        if (alpha == 1.0) return kl();
        if (std::isinf(alpha)) return maxdiv();
        return {Tag::Renyi, alpha};
    }
    static DivergenceKind kl() { return {Tag::KL, 1.0}; }
    static DivergenceKind maxdiv() { return {Tag::MaxDiv, kInf}; }
    static DivergenceKind moment(double q) {
        if (!(q >= 1.0)) throw std::invalid_argument("moment kind: q must be >= 1");
        return {Tag::MomentClass, q};
    }
    static DivergenceKind subgaussian() { return {Tag::SubgaussianBounds, 0.0}; }
    static DivergenceKind subexponential() { return {Tag::SubexponentialBounds, 0.0}; }

    // Renyi order when the kind sits in the Renyi family, else NaN.
    double renyi_order() const {
        switch (tag) {
            case Tag::Renyi: return param;
            case Tag::KL: return 1.0;
            case Tag::MaxDiv: return kInf;
            default: return std::numeric_limits<double>::quiet_NaN();
        }
    }

    bool is_exact_kind() const {
        return tag != Tag::SubgaussianBounds && tag != Tag::SubexponentialBounds;
    }

    // Convex in the first argument: needed for strong => plain claim reduction.
    bool convex_in_first() const {
        switch (tag) {
            case Tag::TV:
            case Tag::Lp:
            case Tag::KL:
            case Tag::MomentClass:
            case Tag::SubgaussianBounds:
            case Tag::SubexponentialBounds: return true;
            case Tag::Renyi: return param <= 1.0;
            case Tag::MaxDiv: return false;
        }
        return false;
    }

    // Defined by a symmetric class of test functions (Thm-3.6-style arguments).
    bool symmetric_test_class() const {
        switch (tag) {
            case Tag::TV:
            case Tag::MomentClass:
            case Tag::SubgaussianBounds:
            case Tag::SubexponentialBounds: return true;
            default: return false;
        }
    }

    std::string to_string() const {
        std::ostringstream os;
        switch (tag) {
            case Tag::TV: os << "tv"; break;
            case Tag::Lp: os << "lp:" << param; break;
            case Tag::Renyi: os << "renyi:" << param; break;
            case Tag::KL: os << "kl"; break;
            case Tag::MaxDiv: os << "maxdiv"; break;
            case Tag::MomentClass: os << "moment:" << param; break;
            case Tag::SubgaussianBounds: os << "subgaussian"; break;
            case Tag::SubexponentialBounds: os << "subexp"; break;
        }
        return os.str();
    }
};

inline DivergenceKind parse_kind(const std::string& s) {
    auto colon = s.find(':');
    std::string head = s.substr(0, colon);
    double arg = 0.0;
    bool has_arg = colon != std::string::npos;
    if (has_arg) {
        std::string tail = s.substr(colon + 1);
        arg = (tail == "inf") ? kInf : std::stod(tail);
    }
    if (head == "tv") return DivergenceKind::tv();
    if (head == "lp") return DivergenceKind::lp(has_arg ? arg : 1.0);
    if (head == "renyi") return DivergenceKind::renyi(arg);
    if (head == "kl") return DivergenceKind::kl();
    if (head == "maxdiv") return DivergenceKind::maxdiv();
    if (head == "moment") return DivergenceKind::moment(has_arg ? arg : 2.0);
    if (head == "subgaussian") return DivergenceKind::subgaussian();
    if (head == "subexp" || head == "subexponential") return DivergenceKind::subexponential();
    throw std::invalid_argument("unknown divergence kind: " + s);
}

struct DistanceResult {
    double lower = 0.0;
    double upper = 0.0;
    bool exact = true;
};

inline void require_same_width(const Distribution& p, const Distribution& q) {
    if (p.width() != q.width()) throw std::invalid_argument("divergence: width mismatch");
}

inline double tv(const Distribution& p, const Distribution& q) {
    require_same_width(p, q);
    double s = 0.0;
    for (size_t i = 0; i < p.size(); ++i) s += std::fabs(p[i] - q[i]);
    return 0.5 * s;
}

inline double lp_distance(double pexp, const Distribution& p, const Distribution& q) {
    require_same_width(p, q);
    if (!(pexp >= 1.0)) throw std::invalid_argument("lp_distance: p must be >= 1");
    if (std::isinf(pexp)) {
        double mx = 0.0;
        for (size_t i = 0; i < p.size(); ++i) mx = std::max(mx, std::fabs(p[i] - q[i]));
        return mx;
    }
    double s = 0.0;
    for (size_t i = 0; i < p.size(); ++i) s += std::pow(std::fabs(p[i] - q[i]), pexp);
    return std::pow(s, 1.0 / pexp);
}

inline double kl(const Distribution& p, const Distribution& q) {
    require_same_width(p, q);
    double s = 0.0;
    bool q_uniform = true;
    double u = 1.0 / static_cast<double>(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        if (q[i] != u) q_uniform = false;
        if (p[i] > 0.0) {
            if (q[i] <= 0.0) return kInf;
            s += p[i] * std::log2(p[i] / q[i]);
        }
    }
    if (q_uniform) {
        // KL to uniform is an entropy gap; both routes must agree
        double gap = static_cast<double>(p.width()) - shannon_entropy(p);
        if (std::fabs(gap - s) > 1e-9) throw std::logic_error("kl: entropy-gap identity drift");
    }
    return s;
}

inline double max_div(const Distribution& p, const Distribution& q) {
    require_same_width(p, q);
    double mx = -kInf;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            if (q[i] <= 0.0) return kInf;
            mx = std::max(mx, std::log2(p[i] / q[i]));
        }
    }
    return mx;
}

inline double renyi(double alpha, const Distribution& p, const Distribution& q) {
    require_same_width(p, q);
    if (!(alpha >= 0.0)) throw std::invalid_argument("renyi: alpha must be >= 0");
    if (alpha == 0.0) {
        double qmass = 0.0;
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i] > 0.0) qmass += q[i];
        if (qmass <= 0.0) return kInf;
        return std::log2(1.0 / qmass);
    }
    if (alpha == 1.0) return kl(p, q);
    if (std::isinf(alpha)) return max_div(p, q);
    double s = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            if (q[i] <= 0.0) {
                if (alpha > 1.0) return kInf;
                continue;  // alpha < 1: zero contribution
            }
            s += std::pow(p[i], alpha) * std::pow(q[i], 1.0 - alpha);
        }
    }
    if (s <= 0.0) return kInf;  // disjoint supports, alpha < 1
    return std::log2(s) / (alpha - 1.0);
}

struct MomentDistance {
    double value = 0.0;
    std::vector<double> witness;  // f* with ||f*(U_m)||_q <= 1 and <P-Q, f*> = value
};

inline MomentDistance moment_class_distance(double q, const Distribution& a, const Distribution& b) {
    require_same_width(a, b);
    if (!(q >= 1.0)) throw std::invalid_argument("moment_class_distance: q must be >= 1");
    size_t n = a.size();
    double m = static_cast<double>(a.width());
    MomentDistance out;
    out.witness.assign(n, 0.0);

    double pexp = std::isinf(q) ? 1.0 : (q == 1.0 ? kInf : q / (q - 1.0));
    double lpv = lp_distance(pexp, a, b);
    out.value = std::isinf(q) ? lpv : std::exp2(m / q) * lpv;
    if (lpv == 0.0) return out;

    if (std::isinf(q)) {
        for (size_t i = 0; i < n; ++i) {
            double d = a[i] - b[i];
            out.witness[i] = d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
        }
    } else if (q == 1.0) {
        size_t best = 0;
        double mx = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double d = std::fabs(a[i] - b[i]);
            if (d > mx) { mx = d; best = i; }
        }
        out.witness[best] = (a[best] >= b[best] ? 1.0 : -1.0) * static_cast<double>(n);
    } else {
        double sum_p = 0.0;
        for (size_t i = 0; i < n; ++i) sum_p += std::pow(std::fabs(a[i] - b[i]), pexp);
        double scale = std::exp2(m / q) * std::pow(sum_p, -1.0 / q);
        for (size_t i = 0; i < n; ++i) {
            double d = a[i] - b[i];
            double mag = std::pow(std::fabs(d), pexp - 1.0);
            out.witness[i] = (d >= 0.0 ? scale : -scale) * mag;
        }
    }
    return out;
}

// Lemma-style triangle inequality: KL(P||R) <= (1+1/alpha) KL(P||Q) + D_{1+alpha}(Q||R).
inline bool check_kl_triangle(const Distribution& p, const Distribution& q, const Distribution& r,
                              double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("check_kl_triangle: alpha must be > 0");
    double lhs = kl(p, r);
    double rhs = (1.0 + 1.0 / alpha) * kl(p, q) + renyi(1.0 + alpha, q, r);
    if (std::isinf(rhs)) return true;
    return lhs <= rhs + 1e-9;
}

inline double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("binary_entropy: argument outside [0,1]");
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

// Max deviation above the mean over the whole class, used for sampler->extractor
// conversions and bounded-divergence average-case arguments.
inline double subgaussian_maxdev(int m) { return std::sqrt(std::log(2.0) * m / 2.0); }
inline double subexponential_maxdev(int m) { return (0.5 + m * std::log(2.0)) / 2.0; }

// sup_P D(P || U_m) when finite; +inf only for kinds unbounded against uniform
// (none of ours are: against uniform every kind below is bounded).
inline double norm_inf_to_uniform(const DivergenceKind& kind, int m) {
    double M = std::exp2(static_cast<double>(m));
    switch (kind.tag) {
        case DivergenceKind::Tag::TV: return 1.0 - 1.0 / M;
        case DivergenceKind::Tag::Lp: {
            if (std::isinf(kind.param)) return 1.0 - 1.0 / M;
            // extremal at a point mass
            double p = kind.param;
            return std::pow(std::pow(1.0 - 1.0 / M, p) + (M - 1.0) * std::pow(1.0 / M, p), 1.0 / p);
        }
        case DivergenceKind::Tag::Renyi:
        case DivergenceKind::Tag::KL:
        case DivergenceKind::Tag::MaxDiv: return static_cast<double>(m);
        case DivergenceKind::Tag::MomentClass: {
            double q = kind.param;
            double p = std::isinf(q) ? 1.0 : (q == 1.0 ? kInf : q / (q - 1.0));
            double lp_pm = std::isinf(p) ? 1.0 - 1.0 / M
                                         : std::pow(std::pow(1.0 - 1.0 / M, p) + (M - 1.0) * std::pow(1.0 / M, p), 1.0 / p);
            return (std::isinf(q) ? 1.0 : std::exp2(static_cast<double>(m) / q)) * lp_pm;
        }
        case DivergenceKind::Tag::SubgaussianBounds: return subgaussian_maxdev(m);
        case DivergenceKind::Tag::SubexponentialBounds: return subexponential_maxdev(m);
    }
    return kInf;
}

}  // namespace klext
