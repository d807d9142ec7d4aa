#ifndef SEAGULL_TAPE_HPP
#define SEAGULL_TAPE_HPP

#include <cstdint>
#include <vector>

#include "seagull/activations.hpp"
#include "seagull/tensor.hpp"

namespace seagull {

// Reverse-mode autodiff over an append-only tape. Node ids are indices into
// the recording order, so inputs always precede their consumers. A Tape is
// single-owner: reset() between forward passes, never shared across threads.
class Tape {
public:
    int leaf(Tensor value);

    int matmul(int a, int b);
    int transpose(int a);
    int add_bias(int x, int bias);
    int activation(int x, const ActivationKind& k);
    int sum(int x);              // scalar sum of all elements
    int add(int a, int b);       // same-shape elementwise
    int scale(int a, double c);
    int mse_loss(int pred, int target);
    int mae_loss(int pred, int target);

    // Propagates adjoints from a scalar loss to every node. Nodes the loss
    // does not reach keep a zero adjoint. The tape stays valid afterwards;
    // call reset() to start the next forward pass.
    void backward(int loss);

    const Tensor& value(int id) const;
    const Tensor& grad(int id) const;

    void reset();
    std::size_t size() const { return nodes_.size(); }

private:
    enum class Op : std::uint8_t {
        Leaf, MatMul, Transpose, AddBias, Activation, Sum, Add, Scale, Mse, Mae
    };
    struct Node {
        Op op;
        int a = -1;
        int b = -1;
        double c = 0.0;       // Scale factor
        ActivationKind act{}; // Activation kind
        Tensor value;
        Tensor grad;
    };

    int push(Node n);
    const Node& node(int id) const;
    Node& mutable_node(int id);

    std::vector<Node> nodes_;
    bool has_grads_ = false;
};

// Immediate (off-tape) versions of the same primitives, sharing the kernels.
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);
Tensor add_bias(const Tensor& x, const Tensor& bias);
Tensor apply_activation(const Tensor& x, const ActivationKind& k);
double mse_loss(const Tensor& pred, const Tensor& target);
double mae_metric(const Tensor& pred, const Tensor& target);

} // namespace seagull

#endif
