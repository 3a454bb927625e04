#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace noma {

/// Input violates a documented precondition or type invariant.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two inputs that must agree in length do not.
class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// The two-user constraint set {R1 >= OMA1, R2 >= OMA2} is empty.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Linear transmit SNR, rho = P_max / sigma^2. Strictly positive.
class TransmitSnr {
public:
    explicit TransmitSnr(double rho);

    static TransmitSnr from_db(double snr_db);

    double linear() const noexcept { return rho_; }
    double db() const noexcept;

private:
    double rho_;
};

/// Squared channel magnitudes |h_i|^2, strictly positive and sorted
/// ascending. Index 0 is the weakest user.
class ChannelGains {
public:
    explicit ChannelGains(std::vector<double> gains);

    std::size_t size() const noexcept { return gains_.size(); }
    double operator[](std::size_t i) const noexcept { return gains_[i]; }
    std::span<const double> values() const noexcept { return gains_; }
    const std::vector<double>& vector() const noexcept { return gains_; }

private:
    std::vector<double> gains_;
};

/// Per-user power coefficients, weakest user first. Each lies in (0, 1)
/// and they sum to one within kSumTolerance.
class PowerAllocation {
public:
    static constexpr double kSumTolerance = 1e-12;

    explicit PowerAllocation(std::vector<double> alphas);

    /// Skips the open-interval and sum checks. Only meant for identity
    /// tests on degenerate allocations such as {1, 0}.
    static PowerAllocation unchecked(std::vector<double> alphas);

    std::size_t size() const noexcept { return alphas_.size(); }
    double operator[](std::size_t i) const noexcept { return alphas_[i]; }
    std::span<const double> values() const noexcept { return alphas_; }
    const std::vector<double>& vector() const noexcept { return alphas_; }

private:
    struct NoCheck {};
    PowerAllocation(std::vector<double> alphas, NoCheck) : alphas_(std::move(alphas)) {}

    std::vector<double> alphas_;
};

/// Rates in bits/s/Hz for one configuration.
struct RateReport {
    std::vector<double> noma_rates;
    std::vector<double> oma_rates;
    double noma_sum = 0.0;
    double oma_sum = 0.0;
};

}  // namespace noma
