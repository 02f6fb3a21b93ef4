#pragma once

#include "taub/arithmetic.hpp"

#include <span>
#include <vector>

namespace taub {

/// Prefix sums s(N_j) at increasing checkpoints, with s(N_j)/N_j and its
/// running maximum.
struct PartialSumTable {
    std::vector<ExtendedNonnegative> checkpoints;
    std::vector<ExtendedNonnegative> sums;
    std::vector<double> ratios;
    std::vector<double> running_sup;
    /// False when any sum had to leave exact integer arithmetic.
    bool exact = true;
};

PartialSumTable partial_sums(const CoefficientSequence& seq,
                             std::span<const ExtendedNonnegative> checkpoints);

/// {floor(1.25^j)} up to min(horizon, 2^63), merged with every sparse index
/// <= horizon.
std::vector<ExtendedNonnegative> default_checkpoints(const CoefficientSequence& seq);

/// s(N) as an extended magnitude.
ExtendedNonnegative partial_sum(const CoefficientSequence& seq, const ExtendedNonnegative& n);

/// max_{n <= N} s(n)/n; this is also sup_t S(t) for the sequence truncated at N.
double max_normalized_sum(const CoefficientSequence& seq, const ExtendedNonnegative& n);

struct ScaledSum {
    double value = 0.0;
    /// e^t lies beyond horizon + 1, where the truncated s is frozen.
    bool tail = false;
};

/// S(t) = e^{-t} s(floor(e^t)); zero for t < 0.
ScaledSum S_of_t(const CoefficientSequence& seq, double t);

struct LogBoundReport {
    ExtendedNonnegative N;
    double x_N = 0.0;
    double sigma_N = 0.0;
    double f_at_xN = 0.0;
    ExtendedNonnegative s_N;
    /// Measured constants: sigma_N / ln N and s_N / (N ln N).
    double sigma_over_log = 0.0;
    double s_over_N_log = 0.0;
    bool holds = false;
};

/// Checks sigma_N <= e f_N(1 + 1/ln N) and s_N <= N sigma_N.
LogBoundReport log_bound_check(const CoefficientSequence& seq, const ExtendedNonnegative& N);

struct SharpnessReport {
    int k = 0;
    ExtendedNonnegative N;
    ExtendedNonnegative s_N;
    /// N ln N / ln 2 = N 2^k.
    ExtendedNonnegative lower_bound;
    double ratio = 0.0;
    bool exact = true;
    bool holds = false;
};

/// s_N against N log2 N at N = 2^(2^k) for the counterexample sequence.
SharpnessReport sharpness_check(int k);

struct RealConditionProbe {
    double delta = 0.0;
    int k_max = 0;
    /// delta * f(1 + delta)
    double scaled_value = 0.0;
    /// delta * (int_0^inf h + max h) <= 1/ln^2 2 + 2^{-1/ln 2}/ln 2
    double majorant = 0.0;
    /// delta * (int_1^inf h - max h)
    double minorant = 0.0;
    bool within = false;
};

/// Evaluates delta f(1 + delta) for the counterexample, extending k until the
/// next term is below 1e-18 of the running sum.
RealConditionProbe real_condition_probe(double delta);

}  // namespace taub
