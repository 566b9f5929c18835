#ifndef RTMLV_MLV_HPP
#define RTMLV_MLV_HPP

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "rtmlv/words.hpp"

namespace rtmlv {

struct NonAdmissibleIndex : std::runtime_error {
    explicit NonAdmissibleIndex(const std::string& what) : std::runtime_error(what) {}
};

struct NonAdmissibleWord : std::runtime_error {
    explicit NonAdmissibleWord(const std::string& what) : std::runtime_error(what) {}
};

struct EvalOptions {
    long max_terms = 100000;
    enum class Tail { plain, period_average } tail = Tail::plain;
    double tolerance = 1e-3;
};

struct EvalResult {
    std::complex<double> value;
    double error_estimate = 0.0;
};

namespace detail {

inline const std::vector<std::complex<double>>& unit_roots(int r) {
    static std::mutex mu;
    static std::map<int, std::vector<std::complex<double>>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(r));
    for (int m = 0; m < r; ++m) {
        double a = 2.0 * M_PI * m / r;
        roots[static_cast<std::size_t>(m)] = {std::cos(a), std::sin(a)};
    }
    return cache.emplace(r, std::move(roots)).first->second;
}

}  // namespace detail

// Truncated nested series for L(k; s). The summand factors through the
// twist change t_1 = s_1, t_i = s_i / s_{i-1}, which turns the nested sum
// into depth-many cumulative passes (cost O(N * depth)).
inline EvalResult evaluate_L(const MLVIndex& ix, const EvalOptions& opts = {}) {
    if (ix.depth() < 1 || ix.k.size() != ix.j.size())
        throw std::invalid_argument("malformed index");
    if (!ix.admissible()) throw NonAdmissibleIndex("index starts with (1, 1)");
    for (int kv : ix.k)
        if (kv < 1) throw std::invalid_argument("exponents must be >= 1");

    const int r = ix.r;
    const int l = ix.depth();
    const long n_cap = opts.max_terms < 10 ? 10 : opts.max_terms;
    const auto& roots = detail::unit_roots(r);

    // t_i as exponents mod r.
    std::vector<int> t(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
        int prev = i == 0 ? 0 : ix.j[static_cast<std::size_t>(i - 1)];
        t[static_cast<std::size_t>(i)] = ((ix.j[static_cast<std::size_t>(i)] - prev) % r + r) % r;
    }

    // cum[m] after pass i holds sum over m >= m_i > ... > m_l of the tail
    // product; pass order is innermost (depth l) first.
    std::vector<std::complex<double>> cum(static_cast<std::size_t>(n_cap) + 1);
    std::vector<std::complex<double>> prev(static_cast<std::size_t>(n_cap) + 1,
                                           std::complex<double>(1.0, 0.0));
    double inner_sup = 1.0;
    std::vector<std::complex<double>> outer_partials;
    for (int depth = l; depth >= 1; --depth) {
        const int ti = t[static_cast<std::size_t>(depth - 1)];
        const int ki = ix.k[static_cast<std::size_t>(depth - 1)];
        std::complex<double> acc(0.0, 0.0);
        cum[0] = acc;
        for (long n = 1; n <= n_cap; ++n) {
            double p = std::pow(static_cast<double>(n), -static_cast<double>(ki));
            std::complex<double> tw =
                roots[static_cast<std::size_t>((static_cast<long long>(ti) * n) % r)];
            acc += tw * p * prev[static_cast<std::size_t>(n - 1)];
            cum[static_cast<std::size_t>(n)] = acc;
        }
        if (depth == 2) {
            for (long n = 0; n <= n_cap; ++n)
                inner_sup = std::max(inner_sup, std::abs(cum[static_cast<std::size_t>(n)]));
        }
        std::swap(cum, prev);
    }
    // prev now holds the outermost cumulative sums.
    const int k1 = ix.k.front();
    const int t1 = t.front();
    const bool oscillatory_head = k1 == 1 || t1 != 0;
    const bool smooth = oscillatory_head || opts.tail == EvalOptions::Tail::period_average;

    EvalResult res;
    if (smooth) {
        // Period-r averaging of the last partial sums; the window spread is
        // the reported error.
        const long win = std::min<long>(std::max(r, 2), n_cap);
        std::complex<double> mean(0.0, 0.0);
        for (long n = n_cap - win + 1; n <= n_cap; ++n)
            mean += prev[static_cast<std::size_t>(n)];
        mean /= static_cast<double>(win);
        double spread = 0.0;
        for (long n = n_cap - win + 1; n <= n_cap; ++n)
            spread = std::max(spread, std::abs(prev[static_cast<std::size_t>(n)] - mean));
        res.value = mean;
        res.error_estimate = spread + 1.0 / static_cast<double>(n_cap);
    } else {
        res.value = prev[static_cast<std::size_t>(n_cap)];
        // Integral-test tail for the outermost sum, padded for the slow
        // growth of the inner cumulative factor.
        double tail = std::pow(static_cast<double>(n_cap), 1.0 - k1) / (k1 - 1);
        res.error_estimate = 1.5 * inner_sup * tail;
    }
    if (ix.k.back() >= 2 && ix.j.back() == (l >= 2 ? ix.j[static_cast<std::size_t>(l - 2)] : 0)) {
        const int kl = ix.k.back();
        double floor = std::pow(static_cast<double>(n_cap), 1.0 - kl) / (kl - 1);
        res.error_estimate = std::max(res.error_estimate, floor);
    }
    return res;
}

inline EvalResult evaluate_L_cached(const MLVIndex& ix, const EvalOptions& opts) {
    using Key = std::tuple<int, std::vector<int>, std::vector<int>, long, int>;
    static std::mutex mu;
    static std::map<Key, EvalResult> cache;
    Key key{ix.r, ix.k, ix.j, opts.max_terms, static_cast<int>(opts.tail)};
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    EvalResult res = evaluate_L(ix, opts);
    std::scoped_lock lock(mu);
    cache.emplace(std::move(key), res);
    return res;
}

struct KernelReport {
    std::complex<double> sum;
    double bound = 0.0;
    bool pass = false;
    long n = 0;
};

// Numerically evaluates a formal admissible combination and tests it
// against zero within tolerance.
inline KernelReport check_kernel(const NCPoly& p, const EvalOptions& opts = {}) {
    KernelReport rep;
    rep.n = opts.max_terms;
    double accumulated = 0.0;
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [w, c] : p.terms()) {
        if (!w.admissible()) throw NonAdmissibleWord("polynomial contains word: " + to_text(w));
        MLVIndex ix = word_to_index(w);
        EvalResult er = evaluate_L_cached(ix, opts);
        double cf = rational_double(c);
        sum += cf * er.value;
        accumulated += std::abs(cf) * er.error_estimate;
    }
    rep.sum = sum;
    rep.bound = accumulated;
    rep.pass = std::abs(sum) < std::max(opts.tolerance, 10.0 * accumulated);
    return rep;
}

}  // namespace rtmlv

#endif
