#include "seagull/tape.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "seagull/kernels.hpp"

namespace seagull {

namespace {

void check_matmul_shapes(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2)
        throw std::invalid_argument("matmul: rank-2 operands required, got " + a.shape_str() +
                                    " and " + b.shape_str());
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions disagree: " + a.shape_str() +
                                    " x " + b.shape_str());
}

void check_bias_shapes(const Tensor& x, const Tensor& b) {
    if (b.size() != x.cols())
        throw std::invalid_argument("add_bias: bias " + b.shape_str() +
                                    " does not match trailing dimension of " + x.shape_str());
}

void check_loss_shapes(const char* what, const Tensor& pred, const Tensor& target) {
    if (pred.size() == 0 || target.size() == 0)
        throw std::invalid_argument(std::string(what) + ": empty input");
    if (pred.size() != target.size())
        throw std::invalid_argument(std::string(what) + ": prediction " + pred.shape_str() +
                                    " and target " + target.shape_str() + " differ in length");
}

} // namespace

// ---------------------------------------------------------------------------
// immediate versions

Tensor matmul(const Tensor& a, const Tensor& b) {
    check_matmul_shapes(a, b);
    Tensor c({a.rows(), b.cols()});
    kernels::matmul(c.data(), a.data(), b.data(), a.rows(), a.cols(), b.cols());
    return c;
}

Tensor transpose(const Tensor& a) {
    if (a.rank() != 2)
        throw std::invalid_argument("transpose: rank-2 operand required, got " + a.shape_str());
    Tensor t({a.cols(), a.rows()});
    kernels::transpose(t.data(), a.data(), a.rows(), a.cols());
    return t;
}

Tensor add_bias(const Tensor& x, const Tensor& bias) {
    check_bias_shapes(x, bias);
    Tensor y(x.shape());
    kernels::add_bias(y.data(), x.data(), bias.data(), x.rows(), x.cols());
    return y;
}

Tensor apply_activation(const Tensor& x, const ActivationKind& k) {
    Tensor y(x.shape());
    kernels::apply_activation(y.data(), x.data(), x.size(), k);
    return y;
}

double mse_loss(const Tensor& pred, const Tensor& target) {
    check_loss_shapes("mse_loss", pred, target);
    return kernels::mse_serial(pred.data(), target.data(), pred.size());
}

double mae_metric(const Tensor& pred, const Tensor& target) {
    check_loss_shapes("mae_metric", pred, target);
    return kernels::mae_serial(pred.data(), target.data(), pred.size());
}

// ---------------------------------------------------------------------------
// tape

int Tape::push(Node n) {
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
}

const Tape::Node& Tape::node(int id) const {
    if (id < 0 || id >= static_cast<int>(nodes_.size()))
        throw std::invalid_argument("tape: node id " + std::to_string(id) + " out of range");
    return nodes_[static_cast<std::size_t>(id)];
}

Tape::Node& Tape::mutable_node(int id) {
    return const_cast<Node&>(node(id));
}

int Tape::leaf(Tensor value) {
    Node n{Op::Leaf};
    n.value = std::move(value);
    return push(std::move(n));
}

int Tape::matmul(int a, int b) {
    const Tensor& av = node(a).value;
    const Tensor& bv = node(b).value;
    check_matmul_shapes(av, bv);
    Node n{Op::MatMul, a, b};
    n.value = Tensor({av.rows(), bv.cols()});
    kernels::matmul(n.value.data(), av.data(), bv.data(), av.rows(), av.cols(), bv.cols());
    return push(std::move(n));
}

int Tape::transpose(int a) {
    const Tensor& av = node(a).value;
    if (av.rank() != 2)
        throw std::invalid_argument("transpose: rank-2 operand required, got " + av.shape_str());
    Node n{Op::Transpose, a};
    n.value = Tensor({av.cols(), av.rows()});
    kernels::transpose(n.value.data(), av.data(), av.rows(), av.cols());
    return push(std::move(n));
}

int Tape::add_bias(int x, int bias) {
    const Tensor& xv = node(x).value;
    const Tensor& bv = node(bias).value;
    check_bias_shapes(xv, bv);
    Node n{Op::AddBias, x, bias};
    n.value = Tensor(xv.shape());
    kernels::add_bias(n.value.data(), xv.data(), bv.data(), xv.rows(), xv.cols());
    return push(std::move(n));
}

int Tape::activation(int x, const ActivationKind& k) {
    const Tensor& xv = node(x).value;
    Node n{Op::Activation, x};
    n.act = k;
    n.value = Tensor(xv.shape());
    kernels::apply_activation(n.value.data(), xv.data(), xv.size(), k);
    return push(std::move(n));
}

int Tape::sum(int x) {
    const Tensor& xv = node(x).value;
    Node n{Op::Sum, x};
    n.value = Tensor::scalar(kernels::sum_serial(xv.data(), xv.size()));
    return push(std::move(n));
}

int Tape::add(int a, int b) {
    const Tensor& av = node(a).value;
    const Tensor& bv = node(b).value;
    if (!av.same_shape(bv))
        throw std::invalid_argument("add: shapes disagree: " + av.shape_str() + " vs " +
                                    bv.shape_str());
    Node n{Op::Add, a, b};
    n.value = Tensor(av.shape());
    for (std::size_t i = 0; i < av.size(); ++i) n.value[i] = av[i] + bv[i];
    return push(std::move(n));
}

int Tape::scale(int a, double c) {
    const Tensor& av = node(a).value;
    Node n{Op::Scale, a};
    n.c = c;
    n.value = Tensor(av.shape());
    for (std::size_t i = 0; i < av.size(); ++i) n.value[i] = c * av[i];
    return push(std::move(n));
}

int Tape::mse_loss(int pred, int target) {
    const Tensor& pv = node(pred).value;
    const Tensor& tv = node(target).value;
    check_loss_shapes("mse_loss", pv, tv);
    Node n{Op::Mse, pred, target};
    n.value = Tensor::scalar(kernels::mse_serial(pv.data(), tv.data(), pv.size()));
    return push(std::move(n));
}

int Tape::mae_loss(int pred, int target) {
    const Tensor& pv = node(pred).value;
    const Tensor& tv = node(target).value;
    check_loss_shapes("mae_loss", pv, tv);
    Node n{Op::Mae, pred, target};
    n.value = Tensor::scalar(kernels::mae_serial(pv.data(), tv.data(), pv.size()));
    return push(std::move(n));
}

const Tensor& Tape::value(int id) const { return node(id).value; }

const Tensor& Tape::grad(int id) const {
    if (!has_grads_) throw std::logic_error("tape: grad() before backward()");
    return node(id).grad;
}

void Tape::reset() {
    nodes_.clear();
    has_grads_ = false;
}

void Tape::backward(int loss) {
    const Node& ln = node(loss);
    if (ln.value.size() != 1)
        throw std::invalid_argument("backward: loss must be scalar, got " +
                                    ln.value.shape_str());

    for (auto& n : nodes_) {
        n.grad = Tensor(n.value.shape()); // zero adjoints, unreachable nodes stay zero
    }
    mutable_node(loss).grad[0] = 1.0;

    for (int id = loss; id >= 0; --id) {
        Node& n = nodes_[static_cast<std::size_t>(id)];
        switch (n.op) {
        case Op::Leaf:
            break;
        case Op::MatMul: {
            // C = A*B: dA += dC*B^T, dB += A^T*dC
            Node& na = nodes_[static_cast<std::size_t>(n.a)];
            Node& nb = nodes_[static_cast<std::size_t>(n.b)];
            const std::size_t m = na.value.rows(), k = na.value.cols(), c = nb.value.cols();
            Tensor bt({c, k});
            kernels::transpose(bt.data(), nb.value.data(), k, c);
            kernels::matmul(na.grad.data(), n.grad.data(), bt.data(), m, c, k, /*acc=*/true);
            Tensor at({k, m});
            kernels::transpose(at.data(), na.value.data(), m, k);
            kernels::matmul(nb.grad.data(), at.data(), n.grad.data(), k, m, c, /*acc=*/true);
            break;
        }
        case Op::Transpose: {
            Node& na = nodes_[static_cast<std::size_t>(n.a)];
            kernels::transpose(na.grad.data(), n.grad.data(), n.value.rows(), n.value.cols(),
                               /*acc=*/true);
            break;
        }
        case Op::AddBias: {
            Node& nx = nodes_[static_cast<std::size_t>(n.a)];
            Node& nb = nodes_[static_cast<std::size_t>(n.b)];
            for (std::size_t i = 0; i < n.grad.size(); ++i) nx.grad[i] += n.grad[i];
            kernels::colsum(nb.grad.data(), n.grad.data(), n.grad.rows(), n.grad.cols(),
                            /*acc=*/true);
            break;
        }
        case Op::Activation: {
            Node& nx = nodes_[static_cast<std::size_t>(n.a)];
            kernels::activation_backward(nx.grad.data(), nx.value.data(), n.grad.data(),
                                         nx.value.size(), n.act);
            break;
        }
        case Op::Sum: {
            Node& nx = nodes_[static_cast<std::size_t>(n.a)];
            const double g = n.grad[0];
            for (std::size_t i = 0; i < nx.grad.size(); ++i) nx.grad[i] += g;
            break;
        }
        case Op::Add: {
            Node& na = nodes_[static_cast<std::size_t>(n.a)];
            Node& nb = nodes_[static_cast<std::size_t>(n.b)];
            for (std::size_t i = 0; i < n.grad.size(); ++i) {
                na.grad[i] += n.grad[i];
                nb.grad[i] += n.grad[i];
            }
            break;
        }
        case Op::Scale: {
            Node& na = nodes_[static_cast<std::size_t>(n.a)];
            for (std::size_t i = 0; i < n.grad.size(); ++i) na.grad[i] += n.c * n.grad[i];
            break;
        }
        case Op::Mse: {
            Node& np = nodes_[static_cast<std::size_t>(n.a)];
            Node& nt = nodes_[static_cast<std::size_t>(n.b)];
            const double g = n.grad[0];
            const double inv_n = 1.0 / static_cast<double>(np.value.size());
            for (std::size_t i = 0; i < np.value.size(); ++i) {
                const double d = 2.0 * (np.value[i] - nt.value[i]) * inv_n * g;
                np.grad[i] += d;
                nt.grad[i] -= d;
            }
            break;
        }
        case Op::Mae: {
            Node& np = nodes_[static_cast<std::size_t>(n.a)];
            Node& nt = nodes_[static_cast<std::size_t>(n.b)];
            const double g = n.grad[0];
            const double inv_n = 1.0 / static_cast<double>(np.value.size());
            for (std::size_t i = 0; i < np.value.size(); ++i) {
                const double diff = np.value[i] - nt.value[i];
                const double s = diff > 0.0 ? 1.0 : (diff < 0.0 ? -1.0 : 0.0);
                np.grad[i] += s * inv_n * g;
                nt.grad[i] -= s * inv_n * g;
            }
            break;
        }
        }
    }
    has_grads_ = true;
}

} // namespace seagull
