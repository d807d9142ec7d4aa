#include "seagull/activations.hpp"

#include <cmath>
#include <stdexcept>

namespace seagull {

ActivationKind ActivationKind::elu(double alpha) {
    ActivationKind k{Act::ELU};
    k.alpha = alpha;
    return k;
}

ActivationKind ActivationKind::log_power_abs(double alpha, double eps) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("logpow: alpha must be > 0, got " + std::to_string(alpha));
    if (eps < 0.0) eps = alpha < 1.0 ? 1e-2 : 0.0;
    if (alpha < 1.0 && eps == 0.0)
        throw std::invalid_argument(
            "logpow: alpha < 1 requires eps > 0 (the derivative is unbounded at 0 otherwise)");
    ActivationKind k{Act::LogPowerAbs};
    k.alpha = alpha;
    k.eps = eps;
    return k;
}

static double sigmoid_stable(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

double ActivationKind::eval(double x) const {
    switch (variant) {
    case Act::ReLU: return x > 0.0 ? x : 0.0;
    case Act::ELU: return x >= 0.0 ? x : alpha * (std::exp(x) - 1.0);
    case Act::Sigmoid: return sigmoid_stable(x);
    case Act::Tanh: return std::tanh(x);
    case Act::Softplus:
        // log(1 + e^x) without overflow: for x > 0 rewrite as x + log1p(e^-x)
        return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
    case Act::Seagull: return std::log1p(x * x);
    case Act::LogPowerAbs: return std::log1p(std::pow(std::fabs(x) + eps, alpha));
    case Act::Square: return x * x;
    case Act::Sine: return std::sin(x);
    case Act::Identity: return x;
    }
    return x;
}

double ActivationKind::deriv(double x) const {
    switch (variant) {
    case Act::ReLU: return x > 0.0 ? 1.0 : 0.0;
    case Act::ELU: return x >= 0.0 ? 1.0 : alpha * std::exp(x);
    case Act::Sigmoid: {
        const double s = sigmoid_stable(x);
        return s * (1.0 - s);
    }
    case Act::Tanh: {
        const double t = std::tanh(x);
        return 1.0 - t * t;
    }
    case Act::Softplus: return sigmoid_stable(x);
    case Act::Seagull: return 2.0 * x / (1.0 + x * x);
    case Act::LogPowerAbs: {
        if (x == 0.0) return 0.0; // subgradient at the |x| kink
        const double b = std::fabs(x) + eps;
        const double p = std::pow(b, alpha);
        const double d = alpha * p / (b * (1.0 + p));
        return x > 0.0 ? d : -d;
    }
    case Act::Square: return 2.0 * x;
    case Act::Sine: return std::cos(x);
    case Act::Identity: return 1.0;
    }
    return 1.0;
}

bool ActivationKind::is_even() const {
    return variant == Act::Seagull || variant == Act::LogPowerAbs || variant == Act::Square;
}

bool ActivationKind::is_odd() const { return variant == Act::Sine; }

static std::string trim_num(double v) {
    std::string s = std::to_string(v);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

std::string ActivationKind::name() const {
    switch (variant) {
    case Act::ReLU: return "relu";
    case Act::ELU: return alpha == 1.0 ? "elu" : "elu:" + trim_num(alpha);
    case Act::Sigmoid: return "sigmoid";
    case Act::Tanh: return "tanh";
    case Act::Softplus: return "softplus";
    case Act::Seagull: return "seagull";
    case Act::LogPowerAbs: return "logpow:" + trim_num(alpha) + ":" + trim_num(eps);
    case Act::Square: return "square";
    case Act::Sine: return "sine";
    case Act::Identity: return "identity";
    }
    return "identity";
}

std::string ActivationKind::valid_names() {
    return "relu, elu[:alpha], sigmoid, tanh, softplus, seagull, "
           "logpow:<alpha>[:<eps>], square, sine, identity";
}

ActivationKind ActivationKind::parse(const std::string& text) {
    if (text == "relu") return relu();
    if (text == "elu") return elu();
    if (text == "sigmoid") return sigmoid();
    if (text == "tanh") return tanh();
    if (text == "softplus") return softplus();
    if (text == "seagull") return seagull();
    if (text == "square") return square();
    if (text == "sine") return sine();
    if (text == "identity") return identity();

    struct BadNumber {};
    auto parse_number = [&](const std::string& part) {
        try {
            std::size_t used = 0;
            double v = std::stod(part, &used);
            if (used != part.size()) throw BadNumber{};
            return v;
        } catch (const std::logic_error&) {
            throw BadNumber{};
        }
    };
    try {
        if (text.rfind("elu:", 0) == 0) return elu(parse_number(text.substr(4)));
        if (text.rfind("logpow:", 0) == 0) {
            const std::string rest = text.substr(7);
            const auto colon = rest.find(':');
            if (colon == std::string::npos) return log_power_abs(parse_number(rest));
            return log_power_abs(parse_number(rest.substr(0, colon)),
                                 parse_number(rest.substr(colon + 1)));
        }
    } catch (const BadNumber&) {
        // malformed parameter; fall through to the common error below
    }
    throw std::invalid_argument("unknown activation '" + text + "'; valid: " + valid_names());
}

} // namespace seagull
