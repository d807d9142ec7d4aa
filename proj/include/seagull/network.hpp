#ifndef SEAGULL_NETWORK_HPP
#define SEAGULL_NETWORK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "seagull/activations.hpp"
#include "seagull/tape.hpp"
#include "seagull/tensor.hpp"

namespace seagull {

struct LayerSpec {
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;
    ActivationKind activation{};
    bool has_bias = true;

    bool operator==(const LayerSpec&) const = default;
};

struct NetworkSpec {
    std::vector<LayerSpec> layers;

    void validate() const; // positive dims, consecutive layers chain
    std::size_t input_dim() const;
    std::size_t output_dim() const;
    std::size_t parameter_count() const;

    // The benchmark architecture: 9 -> 100 -> 100 -> 100 -> 100 -> 1, hidden
    // layers on `hidden`, Identity output with bias. `first_bias=false` is
    // the evenness diagnostic configuration (bias removed from layer 0 only).
    static NetworkSpec benchmark_mlp(const ActivationKind& hidden, bool first_bias = true);
    static NetworkSpec mlp(const std::vector<std::size_t>& dims, const ActivationKind& hidden,
                           const ActivationKind& output, bool bias = true);

    bool operator==(const NetworkSpec&) const = default;
};

// Materialized feedforward network. Immutable by convention after build /
// replace_activation; training mutates a private copy.
class Network {
public:
    Network() = default;

    // Weights uniform in [-sqrt(6/(in+out)), +sqrt(6/(in+out))] per layer,
    // biases zero, everything determined by the seed.
    static Network build(const NetworkSpec& spec, std::uint64_t seed);

    const NetworkSpec& spec() const { return spec_; }
    std::size_t layer_count() const { return spec_.layers.size(); }
    std::size_t parameter_count() const { return spec_.parameter_count(); }

    Tensor& weight(std::size_t layer) { return weights_[layer]; }
    const Tensor& weight(std::size_t layer) const { return weights_[layer]; }
    // empty tensor when the layer has no bias
    Tensor& bias(std::size_t layer) { return biases_[layer]; }
    const Tensor& bias(std::size_t layer) const { return biases_[layer]; }

    // Plain forward pass (no tape), batch is [n x in_dim].
    Tensor forward(const Tensor& batch) const;

    // Differentiable forward pass recorded on the tape.
    struct TapeNodes {
        int input = -1;
        int output = -1;
        std::vector<int> weights; // leaf id per layer
        std::vector<int> biases;  // leaf id per layer, -1 when no bias
    };
    TapeNodes forward_on_tape(Tape& tape, const Tensor& batch) const;

    // spec equality plus bitwise parameter equality
    bool operator==(const Network& o) const;
    bool operator!=(const Network& o) const { return !(*this == o); }

    void save_checkpoint(const std::string& path) const;
    static Network load_checkpoint(const std::string& path);

private:
    NetworkSpec spec_;
    std::vector<Tensor> weights_; // [out x in] per layer
    std::vector<Tensor> biases_;  // [out] per layer, empty when !has_bias
};

// Identical network except for one layer's activation; weights untouched.
Network replace_activation(const Network& net, std::size_t layer_index,
                           const ActivationKind& kind);

} // namespace seagull

#endif
