#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace vulnscan::num {

using Shape = std::vector<std::size_t>;

namespace detail {

// One recorded operation output. The parent links form the graph that
// backward() walks in reverse topological order, visiting each node once.
struct Node {
  Shape shape;
  std::vector<double> data;
  std::vector<double> grad;  // allocated on first accumulation
  bool requires_grad = false;
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void(Node&)> backward_fn;  // adds into parents' grads

  std::size_t numel() const { return data.size(); }
  void ensure_grad() {
    if (grad.empty()) grad.assign(data.size(), 0.0);
  }
};

}  // namespace detail

// Recording toggle. When disabled, ops compute values but record no parents,
// so inference builds no graph. Thread-local.
bool grad_enabled();

struct NoGradGuard {
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool prev_;
};

// Dense row-major tensor of 64-bit floats; a cheap shared handle. Values are
// immutable through the op API; mutable_data() is for parameter updates that
// deliberately bypass recording.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, double value, bool requires_grad = false);
  static Tensor from(Shape shape, std::vector<double> data,
                     bool requires_grad = false);
  static Tensor scalar(double value);

  bool defined() const { return impl_ != nullptr; }
  const Shape& shape() const { return impl_->shape; }
  std::size_t numel() const { return impl_->data.size(); }
  std::size_t ndim() const { return impl_->shape.size(); }
  std::size_t rows() const;  // 2-D only
  std::size_t cols() const;
  bool requires_grad() const { return impl_->requires_grad; }

  std::span<const double> data() const { return impl_->data; }
  std::span<double> mutable_data() { return impl_->data; }
  bool has_grad() const { return !impl_->grad.empty(); }
  std::span<const double> grad() const;
  void zero_grad() { impl_->grad.clear(); }
  double item() const;  // numel() == 1

  Tensor clone() const;  // deep copy of values, detached from the graph

  detail::Node* node() const { return impl_.get(); }
  const std::shared_ptr<detail::Node>& handle() const { return impl_; }

  static Tensor wrap(std::shared_ptr<detail::Node> n);

 private:
  std::shared_ptr<detail::Node> impl_;
};

std::string shape_str(const Shape& s);

// ---- ops ----------------------------------------------------------------
// All ops are pure; when recording is on and an input requires grad, the
// result participates in backward(). Shape mismatches throw
// std::invalid_argument naming both shapes.

Tensor matmul(const Tensor& a, const Tensor& b);  // [m,k] x [k,n] -> [m,n]
Tensor transpose(const Tensor& a);                // 2-D
Tensor add(const Tensor& a, const Tensor& b);     // same shape
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);  // elementwise
Tensor scale(const Tensor& a, double s);
Tensor add_rowvec(const Tensor& m, const Tensor& v);  // [r,c] + [1,c]/[c]
Tensor tanh_t(const Tensor& a);
Tensor sigmoid(const Tensor& a);
Tensor relu(const Tensor& a);
Tensor concat_cols(const Tensor& a, const Tensor& b);        // [r,c1]+[r,c2]
Tensor slice_cols(const Tensor& a, std::size_t c0, std::size_t c1);
Tensor row(const Tensor& a, std::size_t i);                  // [1,c]
Tensor rows_select(const Tensor& table, const std::vector<int>& ids);
Tensor sum_all(const Tensor& a);   // scalar
Tensor mean_all(const Tensor& a);  // scalar

// Last-axis softmax with max-subtraction; rows sum to 1. NaN input throws.
Tensor softmax_rows(const Tensor& a);

// Per-row standardization then affine. gain/bias are [1,c] or [c].
Tensor layer_norm(const Tensor& x, const Tensor& gain, const Tensor& bias,
                  double eps = 1e-5);

// Mean negative log softmax-probability of the true class, in log space.
// logits [b,C], one label per row.
Tensor cross_entropy(const Tensor& logits, const std::vector<int>& labels);

// Reverse topological sweep from a scalar loss; gradients accumulate (+=)
// across multiple uses of a tensor.
void backward(const Tensor& loss);

// Compares backward() gradients of f against central finite differences for
// every coordinate of every input; returns the max relative error
// |a - n| / max(|a|, |n|, 1e-8).
double grad_check(
    const std::function<Tensor(const std::vector<Tensor>&)>& f,
    const std::vector<Tensor>& inputs, double eps = 1e-5);

// Throws std::runtime_error if any entry is NaN or infinite.
void assert_finite(const Tensor& t, const char* what);

}  // namespace vulnscan::num
