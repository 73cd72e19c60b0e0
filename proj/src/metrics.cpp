#include "ntopo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ntopo/common.hpp"

namespace ntopo {

namespace {

double point_cost(const Bar& x, const Bar& y, int p, QNorm q) {
    const double db = std::abs(x.birth - y.birth);
    const double dd = std::abs(x.death - y.death);
    const double base = q == QNorm::Inf ? std::max(db, dd) : std::sqrt(db * db + dd * dd);
    return p == 1 ? base : base * base;
}

double diag_cost(const Bar& x, int p, QNorm q) {
    const double span = x.death - x.birth;
    const double base = q == QNorm::Inf ? span / 2.0 : span / std::sqrt(2.0);
    return p == 1 ? base : base * base;
}

// shortest-augmenting-path Hungarian with potentials; exact minimum for a
// dense square matrix, O(n^3)
double hungarian(const std::vector<double>& cost, int n) {
    if (n == 0) return 0.0;
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<int> match(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = match[j0];
            int j1 = -1;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0);
    }
    double total = 0.0;
    for (int j = 1; j <= n; ++j) total += cost[(match[j] - 1) * n + (j - 1)];
    return total;
}

void require_finite(const PersistenceDiagram& d) {
    for (const auto& bar : d.pairs)
        if (!std::isfinite(bar.birth) || !std::isfinite(bar.death))
            throw std::invalid_argument("wasserstein: diagram has a non-finite pair");
}

bool diagram_less(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    return std::lexicographical_compare(
        a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(),
        [](const Bar& x, const Bar& y) {
            if (x.birth != y.birth) return x.birth < y.birth;
            return x.death < y.death;
        });
}

}  // namespace

double wasserstein(const PersistenceDiagram& d1, const PersistenceDiagram& d2, int p, QNorm q) {
    if (p != 1 && p != 2) throw std::invalid_argument("wasserstein: p must be 1 or 2");
    require_finite(d1);
    require_finite(d2);

    // canonical argument order makes the result exactly symmetric
    const PersistenceDiagram* a = &d1;
    const PersistenceDiagram* b = &d2;
    if (diagram_less(*b, *a)) std::swap(a, b);

    const int n1 = static_cast<int>(a->size());
    const int n2 = static_cast<int>(b->size());
    const int n = n1 + n2;
    if (n == 0) return 0.0;

    std::vector<double> cost(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) cost[i * n + j] = point_cost(a->pairs[i], b->pairs[j], p, q);
    for (int i = 0; i < n1; ++i) {
        const double c = diag_cost(a->pairs[i], p, q);
        for (int j = n2; j < n; ++j) cost[i * n + j] = c;
    }
    for (int j = 0; j < n2; ++j) {
        const double c = diag_cost(b->pairs[j], p, q);
        for (int i = n1; i < n; ++i) cost[i * n + j] = c;
    }

    const double total = hungarian(cost, n);
    return p == 1 ? total : std::sqrt(total);
}

double normalized_wasserstein(const PersistenceDiagram& d1, const PersistenceDiagram& d2, int p,
                              QNorm q) {
    const size_t n = d1.size() + d2.size();
    if (n == 0) return 0.0;
    return wasserstein(d1, d2, p, q) / static_cast<double>(n);
}

double persistence_entropy(const PersistenceDiagram& d) {
    std::vector<double> lifetimes;
    for (const auto& bar : d.pairs) {
        const double span = bar.death - bar.birth;
        if (std::isfinite(span) && span > 0.0) lifetimes.push_back(span);
    }
    const size_t n = lifetimes.size();
    if (n <= 1) return 0.0;
    double total = 0.0;
    for (double l : lifetimes) total += l;
    double h = 0.0;
    for (double l : lifetimes) {
        const double frac = l / total;
        h -= frac * std::log(frac);
    }
    return h / std::log(static_cast<double>(n));
}

PersistenceDiagram strip_infinite(const PersistenceDiagram& d, const InfinitePolicy& policy) {
    PersistenceDiagram out{d.dim, {}};
    for (const auto& bar : d.pairs) {
        if (!std::isinf(bar.death)) {
            out.pairs.push_back(bar);
            continue;
        }
        if (policy.kind == InfinitePolicy::Drop) continue;
        if (policy.clamp_value <= bar.birth)
            throw std::invalid_argument("strip_infinite: clamp value " +
                                        fmt_double(policy.clamp_value) + " <= birth " +
                                        fmt_double(bar.birth));
        out.pairs.push_back({bar.birth, policy.clamp_value, true});
    }
    return out;
}

std::vector<double> smooth(const std::vector<double>& xs, int window) {
    if (window < 1 || window % 2 == 0) throw std::invalid_argument("smooth: window must be odd and positive");
    if (window > static_cast<int>(xs.size())) {
        warn("smooth: window " + std::to_string(window) + " exceeds series length " +
             std::to_string(xs.size()) + "; returning input unchanged");
        return xs;
    }
    const int n = static_cast<int>(xs.size());
    const int half = window / 2;
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const int lo = std::max(0, i - half);
        const int hi = std::min(n - 1, i + half);
        double sum = 0.0;
        for (int j = lo; j <= hi; ++j) sum += xs[j];
        out[i] = sum / (hi - lo + 1);
    }
    return out;
}

std::vector<double> derivative(const std::vector<double>& xs) {
    const int n = static_cast<int>(xs.size());
    if (n < 3) throw std::invalid_argument("derivative: need at least 3 samples");
    std::vector<double> out(n);
    out[0] = xs[1] - xs[0];
    out[n - 1] = xs[n - 1] - xs[n - 2];
    for (int i = 1; i < n - 1; ++i) out[i] = (xs[i + 1] - xs[i - 1]) / 2.0;
    return out;
}

LagReport cross_correlation(const std::vector<double>& a, const std::vector<double>& b,
                            int max_lag) {
    const int n = static_cast<int>(a.size());
    if (max_lag < 1) throw std::invalid_argument("cross_correlation: max_lag must be positive");
    if (b.size() != a.size() || n < max_lag + 3)
        throw std::invalid_argument("cross_correlation: need |a| = |b| >= max_lag + 3");

    auto corr_at = [&](int lag) {
        // pair a[t+lag] with b[t] over the overlapping range
        const int lo = std::max(0, -lag);
        const int hi = std::min(n, n - lag);
        const int m = hi - lo;
        double ma = 0.0, mb = 0.0;
        for (int t = lo; t < hi; ++t) {
            ma += a[t + lag];
            mb += b[t];
        }
        ma /= m;
        mb /= m;
        double sab = 0.0, saa = 0.0, sbb = 0.0;
        for (int t = lo; t < hi; ++t) {
            const double da = a[t + lag] - ma;
            const double db = b[t] - mb;
            sab += da * db;
            saa += da * da;
            sbb += db * db;
        }
        if (saa <= 0.0 || sbb <= 0.0) return 0.0;
        return sab / std::sqrt(saa * sbb);
    };

    LagReport report;
    std::map<int, double> by_lag;
    for (int lag = -max_lag; lag <= max_lag; ++lag) {
        report.lags.push_back(lag);
        const double c = corr_at(lag);
        report.correlations.push_back(c);
        by_lag[lag] = c;
    }

    // scan by increasing |lag| so ties resolve toward 0
    report.peak_lag = 0;
    report.peak_corr = by_lag[0];
    for (int mag = 1; mag <= max_lag; ++mag) {
        for (int lag : {-mag, mag}) {
            if (by_lag[lag] > report.peak_corr) {
                report.peak_corr = by_lag[lag];
                report.peak_lag = lag;
            }
        }
    }
    return report;
}

namespace {

SignalSeries make_series(std::vector<int> idx, std::vector<double> raw, const SignalConfig& cfg) {
    SignalSeries s;
    s.window_index = std::move(idx);
    s.raw = std::move(raw);
    s.smoothed = smooth(s.raw, cfg.smooth_window);
    s.d1 = derivative(s.smoothed);
    s.d2 = derivative(s.d1);
    return s;
}

}  // namespace

SignalSet build_signals(
    const std::vector<std::pair<PersistenceDiagram, PersistenceDiagram>>& diagrams,
    const std::vector<int>& window_indices, const SignalConfig& cfg) {
    const size_t t = diagrams.size();
    if (t < 4) throw std::invalid_argument("build_signals: need at least 4 windows");
    if (window_indices.size() != t)
        throw std::invalid_argument("build_signals: window index list does not match diagrams");

    std::vector<PersistenceDiagram> h0(t), h1(t);
    for (size_t i = 0; i < t; ++i) {
        h0[i] = strip_infinite(diagrams[i].first, cfg.infinite_policy);
        h1[i] = strip_infinite(diagrams[i].second, cfg.infinite_policy);
    }

    std::vector<double> e0(t), e1(t);
    for (size_t i = 0; i < t; ++i) {
        e0[i] = persistence_entropy(h0[i]);
        e1[i] = persistence_entropy(h1[i]);
    }
    std::vector<double> w0(t - 1), w1(t - 1);
    std::vector<int> pair_idx(t - 1);
    for (size_t i = 0; i + 1 < t; ++i) {
        w0[i] = normalized_wasserstein(h0[i], h0[i + 1], cfg.p, cfg.q);
        w1[i] = normalized_wasserstein(h1[i], h1[i + 1], cfg.p, cfg.q);
        pair_idx[i] = window_indices[i + 1];
    }

    SignalSet out;
    out.h0_entropy = make_series(window_indices, std::move(e0), cfg);
    out.h1_entropy = make_series(window_indices, std::move(e1), cfg);
    out.h0_wass = make_series(pair_idx, std::move(w0), cfg);
    out.h1_wass = make_series(std::move(pair_idx), std::move(w1), cfg);
    return out;
}

std::string signals_csv(const SignalSet& signals) {
    std::string out = "window_index";
    const char* names[] = {"h0_entropy", "h1_entropy", "h0_wass", "h1_wass"};
    const char* parts[] = {"", "_smooth", "_d1", "_d2"};
    for (const char* n : names)
        for (const char* p : parts) {
            out += ',';
            out += n;
            out += p;
        }
    out += '\n';

    const SignalSeries* series[] = {&signals.h0_entropy, &signals.h1_entropy, &signals.h0_wass,
                                    &signals.h1_wass};
    std::set<int> rows;
    for (const SignalSeries* s : series) rows.insert(s->window_index.begin(), s->window_index.end());

    for (int idx : rows) {
        out += std::to_string(idx);
        for (const SignalSeries* s : series) {
            auto it = std::find(s->window_index.begin(), s->window_index.end(), idx);
            if (it == s->window_index.end()) {
                out += ",,,,";
                continue;
            }
            const size_t i = it - s->window_index.begin();
            for (const std::vector<double>* col : {&s->raw, &s->smoothed, &s->d1, &s->d2}) {
                out += ',';
                out += fmt_double((*col)[i]);
            }
        }
        out += '\n';
    }
    return out;
}

std::string lag_report_text(const std::string& name, const LagReport& report) {
    std::string out;
    out += "signal_pair = " + name + "\n";
    out += "peak_lag = " + std::to_string(report.peak_lag) + "\n";
    out += "peak_corr = " + fmt_double(report.peak_corr) + "\n";
    out += "lags =";
    for (int l : report.lags) out += " " + std::to_string(l);
    out += "\ncorrelations =";
    for (double c : report.correlations) out += " " + fmt_double(c);
    out += "\n";
    return out;
}

}  // namespace ntopo
