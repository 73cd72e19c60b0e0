#pragma once

#include <map>
#include <string>
#include <vector>

#include "ntopo/tda.hpp"

namespace ntopo {

enum class QNorm { Two, Inf };

// Exact p-Wasserstein distance between finite diagrams with diagonal
// augmentation: a point either matches a point of the other diagram at
// ell_q cost or its own diagonal projection. Solved with the Hungarian
// algorithm on the (|D1|+|D2|) square cost matrix; returns the p-th root
// of the optimal total cost. Throws on non-finite input pairs.
double wasserstein(const PersistenceDiagram& d1, const PersistenceDiagram& d2, int p = 1,
                   QNorm q = QNorm::Inf);

// wasserstein / (|D1| + |D2|); 0 when both diagrams are empty
double normalized_wasserstein(const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                              int p = 1, QNorm q = QNorm::Inf);

// Shannon entropy of the normalized lifetime distribution, divided by
// log n. 0 for n <= 1 lifetimes.
double persistence_entropy(const PersistenceDiagram& d);

struct InfinitePolicy {
    enum Kind { Drop, Clamp } kind = Drop;
    double clamp_value = 0.0;
};

PersistenceDiagram strip_infinite(const PersistenceDiagram& d, const InfinitePolicy& policy);

// Centered moving average; windows shrink at the ends to the available
// neighbors. window must be odd; window > |xs| returns xs with a warning.
std::vector<double> smooth(const std::vector<double>& xs, int window);

// Central differences inside, one-sided at both ends. Needs |xs| >= 3.
std::vector<double> derivative(const std::vector<double>& xs);

struct LagReport {
    std::vector<int> lags;
    std::vector<double> correlations;
    int peak_lag = 0;
    double peak_corr = 0.0;
};

// Pearson correlation of a against b per lag. A negative peak lag means
// `a` leads `b`: corr(l) pairs a[t+l] with b[t] over the overlap, so a
// copy of `a` delayed by k steps peaks at -k. Ties go to the smallest
// |lag|. Zero-variance overlaps record correlation 0.
LagReport cross_correlation(const std::vector<double>& a, const std::vector<double>& b,
                            int max_lag);

struct SignalSeries {
    std::vector<int> window_index;
    std::vector<double> raw;
    std::vector<double> smoothed;
    std::vector<double> d1;
    std::vector<double> d2;

    size_t size() const { return raw.size(); }
};

struct SignalSet {
    SignalSeries h0_entropy;
    SignalSeries h1_entropy;
    SignalSeries h0_wass;  // normalized Wasserstein between successive windows
    SignalSeries h1_wass;
};

struct SignalConfig {
    int p = 1;
    QNorm q = QNorm::Inf;
    int smooth_window = 7;
    InfinitePolicy infinite_policy;
};

// Entropy per window plus normalized Wasserstein between successive
// windows (the pair (k, k+1) is indexed at k+1). Infinite bars are
// stripped by the configured policy before every metric call. Needs at
// least 4 windows.
SignalSet build_signals(const std::vector<std::pair<PersistenceDiagram, PersistenceDiagram>>& diagrams,
                        const std::vector<int>& window_indices, const SignalConfig& cfg);

std::string signals_csv(const SignalSet& signals);
std::string lag_report_text(const std::string& name, const LagReport& report);

}  // namespace ntopo
