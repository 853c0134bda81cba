#pragma once

// Dense probability distributions over {0,1}^m, flat sources, joint sources
// with side information, and the entropy measures taken on them. All logs are
// base 2 and all domains are bit-string domains of explicit width.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "klext/bits.hpp"

namespace klext {

inline constexpr int kMaxWidth = 24;        // dense vectors only; 2^24 doubles tops
inline constexpr double kMassTol = 1e-9;

class Distribution {
public:
    Distribution(int width, std::vector<double> probs) : width_(width), probs_(std::move(probs)) {
        check_width(width_);
        if (probs_.size() != domain_size(width_)) throw std::invalid_argument("Distribution: wrong vector length");
        double mass = 0.0;
        for (double p : probs_) {
            if (!(p >= 0.0)) throw std::invalid_argument("Distribution: negative or NaN probability");
            mass += p;
        }
        if (std::fabs(mass - 1.0) > kMassTol) throw std::invalid_argument("Distribution: mass not 1");
    }

    static Distribution uniform(int width) {
        check_width(width);
        size_t n = domain_size(width);
        return Distribution(width, std::vector<double>(n, 1.0 / static_cast<double>(n)));
    }

    static Distribution point_mass(int width, u64 x) {
        check_width(width);
        std::vector<double> p(domain_size(width), 0.0);
        p.at(x) = 1.0;
        return Distribution(width, std::move(p));
    }

    int width() const { return width_; }
    size_t size() const { return probs_.size(); }
    double operator[](u64 x) const { return probs_[x]; }
    const std::vector<double>& probs() const { return probs_; }

private:
    static void check_width(int w) {
        if (w < 0 || w > kMaxWidth) throw std::invalid_argument("Distribution: width must be in [0, 24]");
    }
    int width_;
    std::vector<double> probs_;
};

struct FlatSource {
    int width = 0;
    std::vector<u64> support;  // sorted, distinct, each < 2^width

    FlatSource() = default;
    FlatSource(int w, std::vector<u64> s) : width(w), support(std::move(s)) {
        if (support.empty()) throw std::invalid_argument("FlatSource: empty support");
        std::sort(support.begin(), support.end());
        for (size_t i = 0; i + 1 < support.size(); ++i)
            if (support[i] == support[i + 1]) throw std::invalid_argument("FlatSource: duplicate element");
        if (width < 64 && support.back() >= (u64{1} << width))
            throw std::invalid_argument("FlatSource: element exceeds width");
    }

    size_t size() const { return support.size(); }
    double min_entropy() const { return std::log2(static_cast<double>(support.size())); }

    Distribution to_distribution() const {
        std::vector<double> p(domain_size(width), 0.0);
        double w = 1.0 / static_cast<double>(support.size());
        for (u64 x : support) p[x] = w;
        return Distribution(width, std::move(p));
    }
};

struct JointSource {
    int side_width = 0;
    int source_width = 0;
    std::vector<double> side_weights;           // 2^side_width entries, sum 1
    std::vector<Distribution> conditionals;     // one per side value, width = source_width

    JointSource(int sw, int nw, std::vector<double> weights, std::vector<Distribution> conds)
        : side_width(sw), source_width(nw), side_weights(std::move(weights)), conditionals(std::move(conds)) {
        if (side_weights.size() != domain_size(side_width) || conditionals.size() != side_weights.size())
            throw std::invalid_argument("JointSource: table size mismatch");
        double mass = 0.0;
        for (double w : side_weights) {
            if (!(w >= 0.0)) throw std::invalid_argument("JointSource: negative weight");
            mass += w;
        }
        if (std::fabs(mass - 1.0) > kMassTol) throw std::invalid_argument("JointSource: side weights not normalized");
        for (const auto& c : conditionals)
            if (c.width() != source_width) throw std::invalid_argument("JointSource: conditional width mismatch");
    }
};

inline double min_entropy(const Distribution& p) {
    double mx = *std::max_element(p.probs().begin(), p.probs().end());
    return -std::log2(mx);
}

inline double shannon_entropy(const Distribution& p) {
    double h = 0.0;
    for (double q : p.probs())
        if (q > 0.0) h -= q * std::log2(q);
    return h;
}

// TildeH_inf(X|Z) = -log2 E_z[ 2^{-H_inf(X|Z=z)} ] = -log2 sum_z w_z max_x P(x|z)
inline double conditional_min_entropy(const JointSource& j) {
    double s = 0.0;
    for (size_t z = 0; z < j.side_weights.size(); ++z) {
        if (j.side_weights[z] <= 0.0) continue;
        const auto& pr = j.conditionals[z].probs();
        s += j.side_weights[z] * *std::max_element(pr.begin(), pr.end());
    }
    return -std::log2(s);
}

// Mass transport under a total function table {0,1}^m -> {0,1}^m'.
inline Distribution pushforward(const Distribution& p, const std::vector<u64>& table, int out_width) {
    if (table.size() != p.size()) throw std::invalid_argument("pushforward: table size mismatch");
    std::vector<double> out(domain_size(out_width), 0.0);
    for (size_t x = 0; x < table.size(); ++x) {
        u64 y = table[x];
        if (out_width < 64 && y >= out.size()) throw std::invalid_argument("pushforward: image exceeds width");
        out[y] += p[x];
    }
    return Distribution(out_width, std::move(out));
}

struct CountExceedsCap : std::runtime_error {
    u64 count;
    explicit CountExceedsCap(u64 c)
        : std::runtime_error("flat source enumeration: count exceeds cap"), count(c) {}
};

// Streams all C(2^n, K) supports of size K in lexicographic order.
// Single consumer; errors out up front if the count exceeds the cap.
class FlatSourceStream {
public:
    FlatSourceStream(int n, int K, u64 cap) : n_(n), K_(K) {
        if (n < 1 || n > 30) throw std::invalid_argument("FlatSourceStream: n out of range");
        if (K < 1 || (n < 64 && static_cast<u64>(K) > (u64{1} << n)))
            throw std::invalid_argument("FlatSourceStream: K out of range");
        u64 cnt = binomial_capped(u64{1} << n, static_cast<u64>(K), cap);
        if (cnt > cap) throw CountExceedsCap(cnt);
        count_ = cnt;
        positions_.resize(static_cast<size_t>(K));
        std::iota(positions_.begin(), positions_.end(), 0);
    }

    u64 count() const { return count_; }

    bool next(FlatSource& out) {
        if (done_) return false;
        out.width = n_;
        out.support.assign(positions_.begin(), positions_.end());
        // positions are ints; already sorted and distinct by construction
        if (!next_combination(positions_, static_cast<int>(u64{1} << n_))) done_ = true;
        return true;
    }

private:
    int n_, K_;
    u64 count_ = 0;
    bool done_ = false;
    std::vector<int> positions_;
};

inline FlatSourceStream enumerate_flat_sources(int n, int K, u64 cap) {
    return FlatSourceStream(n, K, cap);
}

}  // namespace klext
