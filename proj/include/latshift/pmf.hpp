#pragma once

// Exact probability mass functions on integers: probabilities are rationals
// in lowest terms, strictly positive, and sum to exactly 1.

#include "latshift/rational.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace latshift {

class Pmf {
public:
    using Map = std::map<std::int64_t, Rat>;

    Pmf() : p_{{0, Rat(1)}} {}

    static Pmf from_map(Map m) {
        Rat total(0);
        for (auto it = m.begin(); it != m.end();) {
            if (it->second == 0) {
                it = m.erase(it);
                continue;
            }
            if (it->second < 0) fail(Errc::ParseError, "negative probability");
            total += it->second;
            ++it;
        }
        if (total != 1) fail(Errc::ParseError, "probabilities sum to " + rat_str(total) + ", not 1");
        Pmf out;
        out.p_ = std::move(m);
        return out;
    }

    static Pmf point(std::int64_t v) { return from_map({{v, Rat(1)}}); }

    // Uniform law on {0, 1, ..., n-1}.
    static Pmf uniform(std::int64_t n) {
        if (n < 1) fail(Errc::ParseError, "uniform law needs n >= 1");
        Map m;
        for (std::int64_t k = 0; k < n; ++k) m[k] = Rat(1, n);
        return from_map(std::move(m));
    }

    // Ref-qualified so calls on temporaries get an owned copy.
    const Map& entries() const& { return p_; }
    Map entries() && { return std::move(p_); }

    Rat prob(std::int64_t v) const {
        auto it = p_.find(v);
        return it == p_.end() ? Rat(0) : it->second;
    }

    std::int64_t support_min() const { return p_.begin()->first; }
    std::int64_t support_max() const { return p_.rbegin()->first; }
    std::size_t support_size() const { return p_.size(); }

    bool support_contiguous() const {
        return support_max() - support_min() + 1 == static_cast<std::int64_t>(p_.size());
    }

    // Support is an arithmetic progression with the given step (every
    // consecutive gap equals step). step = 1 is plain contiguity.
    bool support_arithmetic(std::int64_t step) const {
        auto it = p_.begin();
        std::int64_t prev = it->first;
        for (++it; it != p_.end(); ++it) {
            if (it->first - prev != step) return false;
            prev = it->first;
        }
        return true;
    }

    Rat mean() const {
        Rat m(0);
        for (const auto& [v, p] : p_) m += Rat(v) * p;
        return m;
    }

    Rat variance() const { return central_moment(2); }

    Rat central_moment(unsigned k) const {
        const Rat mu = mean();
        Rat acc(0);
        for (const auto& [v, p] : p_) {
            Rat d = Rat(v) - mu;
            Rat pw(1);
            for (unsigned i = 0; i < k; ++i) pw *= d;
            acc += pw * p;
        }
        return acc;
    }

    // Law of the sum of independent draws from *this and other.
    Pmf convolve(const Pmf& other) const {
        Map m;
        for (const auto& [a, pa] : p_) {
            for (const auto& [b, pb] : other.p_) {
                m[a + b] += pa * pb;
            }
        }
        return from_map(std::move(m));
    }

    Pmf shifted(std::int64_t c) const {
        Map m;
        for (const auto& [v, p] : p_) m[v + c] = p;
        return from_map(std::move(m));
    }

    // Support dilation: values multiplied by n.
    Pmf scaled_support(std::int64_t n) const {
        if (n < 1) fail(Errc::ParseError, "support scale needs n >= 1");
        Map m;
        for (const auto& [v, p] : p_) m[v * n] = p;
        return from_map(std::move(m));
    }

    // Pushforward under value mod n, with result in {0, ..., n-1}.
    Pmf reduced_mod(std::int64_t n) const {
        if (n < 1) fail(Errc::ParseError, "modulus needs n >= 1");
        Map m;
        for (const auto& [v, p] : p_) {
            std::int64_t r = v % n;
            if (r < 0) r += n;
            m[r] += p;
        }
        return from_map(std::move(m));
    }

    // Support translated by -mean; offsets are rational.
    std::map<Rat, Rat> centered() const {
        const Rat mu = mean();
        std::map<Rat, Rat> m;
        for (const auto& [v, p] : p_) m[Rat(v) - mu] = p;
        return m;
    }

    bool symmetric_about_mean() const {
        auto c = centered();
        for (const auto& [off, p] : c) {
            auto it = c.find(-off);
            if (it == c.end() || it->second != p) return false;
        }
        return true;
    }

    bool operator==(const Pmf& o) const { return p_ == o.p_; }
    bool operator!=(const Pmf& o) const { return !(*this == o); }

private:
    Map p_;
};

inline Pmf uniform_pmf(std::int64_t n) { return Pmf::uniform(n); }
inline Pmf convolve(const Pmf& a, const Pmf& b) { return a.convolve(b); }
inline Pmf shift(const Pmf& p, std::int64_t c) { return p.shifted(c); }
inline Pmf scale_support(const Pmf& p, std::int64_t n) { return p.scaled_support(n); }
inline Pmf reduce_mod(const Pmf& p, std::int64_t n) { return p.reduced_mod(n); }
inline std::map<Rat, Rat> centered_pmf(const Pmf& p) { return p.centered(); }

} // namespace latshift
