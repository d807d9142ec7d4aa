#ifndef SEAGULL_ACTIVATIONS_HPP
#define SEAGULL_ACTIVATIONS_HPP

#include <cstdint>
#include <string>

namespace seagull {

enum class Act : std::uint8_t {
    ReLU,
    ELU,
    Sigmoid,
    Tanh,
    Softplus,
    Seagull,     // log(1 + x^2)
    LogPowerAbs, // log(1 + (|x| + eps)^alpha)
    Square,
    Sine,
    Identity,
};

// Closed catalog of activation functions with exact derivatives and parity
// metadata. Plain value type; `alpha`/`eps` only matter for ELU and
// LogPowerAbs. Construct through the factories so parameter constraints are
// enforced in one place.
struct ActivationKind {
    Act variant = Act::Identity;
    double alpha = 1.0; // ELU slope / LogPowerAbs exponent
    double eps = 0.0;   // LogPowerAbs shift; must be > 0 when alpha < 1

    static ActivationKind relu() { return {Act::ReLU}; }
    static ActivationKind elu(double alpha = 1.0);
    static ActivationKind sigmoid() { return {Act::Sigmoid}; }
    static ActivationKind tanh() { return {Act::Tanh}; }
    static ActivationKind softplus() { return {Act::Softplus}; }
    static ActivationKind seagull() { return {Act::Seagull}; }
    // eps < 0 picks the default: 0 for alpha >= 1, 1e-2 otherwise
    static ActivationKind log_power_abs(double alpha, double eps = -1.0);
    static ActivationKind square() { return {Act::Square}; }
    static ActivationKind sine() { return {Act::Sine}; }
    static ActivationKind identity() { return {Act::Identity}; }

    double eval(double x) const;
    double deriv(double x) const;

    // a(x) == a(-x) for all x, bit-exact (implemented via x*x or |x|)
    bool is_even() const;
    bool is_odd() const;

    // CLI/config spelling: "relu", "elu[:alpha]", "sigmoid", "tanh",
    // "softplus", "seagull", "logpow:<alpha>[:<eps>]", "square", "sine",
    // "identity"
    std::string name() const;
    static ActivationKind parse(const std::string& text);
    static std::string valid_names();

    bool operator==(const ActivationKind&) const = default;
};

} // namespace seagull

#endif
