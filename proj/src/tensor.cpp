#include "vulnscan/tensor.hpp"

#include <cmath>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "vulnscan/kernels.hpp"

namespace vulnscan::num {

namespace {

thread_local bool g_grad_enabled = true;

const kernels::Backend& K() { return kernels::active(); }

std::size_t shape_numel(const Shape& s) {
  std::size_t n = 1;
  for (std::size_t d : s) n *= d;
  return n;
}

std::shared_ptr<detail::Node> new_node(Shape shape) {
  auto n = std::make_shared<detail::Node>();
  n->shape = std::move(shape);
  n->data.assign(shape_numel(n->shape), 0.0);
  return n;
}

void check_2d(const Tensor& t, const char* op) {
  if (t.ndim() != 2) {
    throw std::invalid_argument(std::string(op) + ": expected 2-D tensor, got " +
                                shape_str(t.shape()));
  }
}

// Wires the result into the graph when recording is on.
void record(const std::shared_ptr<detail::Node>& out,
            std::vector<Tensor> parents,
            std::function<void(detail::Node&)> backward_fn) {
  if (!g_grad_enabled) return;
  bool needs = false;
  for (const auto& p : parents) needs = needs || p.requires_grad();
  if (!needs) return;
  out->requires_grad = true;
  out->parents.reserve(parents.size());
  for (auto& p : parents) out->parents.push_back(p.handle());
  out->backward_fn = std::move(backward_fn);
}

void accumulate(detail::Node* p, const double* g, std::size_t n) {
  if (!p->requires_grad) return;
  p->ensure_grad();
  K().axpy(p->grad.data(), 1.0, g, n);
}

void transpose_raw(const double* src, double* dst, std::size_t r,
                   std::size_t c) {
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) dst[j * r + i] = src[i * c + j];
  }
}

}  // namespace

bool grad_enabled() { return g_grad_enabled; }

NoGradGuard::NoGradGuard() : prev_(g_grad_enabled) { g_grad_enabled = false; }
NoGradGuard::~NoGradGuard() { g_grad_enabled = prev_; }

std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) os << ',';
    os << s[i];
  }
  os << ']';
  return os.str();
}

Tensor Tensor::wrap(std::shared_ptr<detail::Node> n) {
  Tensor t;
  t.impl_ = std::move(n);
  return t;
}

Tensor Tensor::zeros(Shape shape, bool requires_grad) {
  auto n = new_node(std::move(shape));
  n->requires_grad = requires_grad;
  return wrap(std::move(n));
}

Tensor Tensor::full(Shape shape, double value, bool requires_grad) {
  auto n = new_node(std::move(shape));
  n->data.assign(n->data.size(), value);
  n->requires_grad = requires_grad;
  return wrap(std::move(n));
}

Tensor Tensor::from(Shape shape, std::vector<double> data, bool requires_grad) {
  if (shape_numel(shape) != data.size()) {
    throw std::invalid_argument("Tensor::from: shape " + shape_str(shape) +
                                " does not match data length " +
                                std::to_string(data.size()));
  }
  auto n = std::make_shared<detail::Node>();
  n->shape = std::move(shape);
  n->data = std::move(data);
  n->requires_grad = requires_grad;
  return wrap(std::move(n));
}

Tensor Tensor::scalar(double value) { return from({1}, {value}); }

std::size_t Tensor::rows() const {
  check_2d(*this, "rows");
  return impl_->shape[0];
}

std::size_t Tensor::cols() const {
  check_2d(*this, "cols");
  return impl_->shape[1];
}

std::span<const double> Tensor::grad() const {
  if (impl_->grad.empty()) {
    throw std::runtime_error("Tensor::grad: no gradient recorded");
  }
  return impl_->grad;
}

double Tensor::item() const {
  if (numel() != 1) {
    throw std::invalid_argument("Tensor::item: tensor has shape " +
                                shape_str(shape()));
  }
  return impl_->data[0];
}

Tensor Tensor::clone() const {
  auto n = std::make_shared<detail::Node>();
  n->shape = impl_->shape;
  n->data = impl_->data;
  n->requires_grad = impl_->requires_grad;
  return wrap(std::move(n));
}

// ---- elementwise ----------------------------------------------------------

namespace {

void check_same_shape(const Tensor& a, const Tensor& b, const char* op) {
  if (a.shape() != b.shape()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch " +
                                shape_str(a.shape()) + " vs " +
                                shape_str(b.shape()));
  }
}

}  // namespace

Tensor add(const Tensor& a, const Tensor& b) {
  check_same_shape(a, b, "add");
  auto out = new_node(a.shape());
  K().add(out->data.data(), a.data().data(), b.data().data(), out->numel());
  auto *pa = a.node(), *pb = b.node();
  record(out, {a, b}, [pa, pb](detail::Node& self) {
    accumulate(pa, self.grad.data(), self.grad.size());
    accumulate(pb, self.grad.data(), self.grad.size());
  });
  return Tensor::wrap(out);
}

Tensor sub(const Tensor& a, const Tensor& b) {
  check_same_shape(a, b, "sub");
  auto out = new_node(a.shape());
  for (std::size_t i = 0; i < out->numel(); ++i) {
    out->data[i] = a.data()[i] - b.data()[i];
  }
  auto *pa = a.node(), *pb = b.node();
  record(out, {a, b}, [pa, pb](detail::Node& self) {
    accumulate(pa, self.grad.data(), self.grad.size());
    if (pb->requires_grad) {
      pb->ensure_grad();
      K().axpy(pb->grad.data(), -1.0, self.grad.data(), self.grad.size());
    }
  });
  return Tensor::wrap(out);
}

Tensor mul(const Tensor& a, const Tensor& b) {
  check_same_shape(a, b, "mul");
  auto out = new_node(a.shape());
  K().mul(out->data.data(), a.data().data(), b.data().data(), out->numel());
  auto *pa = a.node(), *pb = b.node();
  record(out, {a, b}, [pa, pb](detail::Node& self) {
    const std::size_t n = self.grad.size();
    std::vector<double> tmp(n);
    if (pa->requires_grad) {
      K().mul(tmp.data(), self.grad.data(), pb->data.data(), n);
      accumulate(pa, tmp.data(), n);
    }
    if (pb->requires_grad) {
      K().mul(tmp.data(), self.grad.data(), pa->data.data(), n);
      accumulate(pb, tmp.data(), n);
    }
  });
  return Tensor::wrap(out);
}

Tensor scale(const Tensor& a, double s) {
  auto out = new_node(a.shape());
  K().scale(out->data.data(), s, a.data().data(), out->numel());
  auto* pa = a.node();
  record(out, {a}, [pa, s](detail::Node& self) {
    if (pa->requires_grad) {
      pa->ensure_grad();
      K().axpy(pa->grad.data(), s, self.grad.data(), self.grad.size());
    }
  });
  return Tensor::wrap(out);
}

Tensor add_rowvec(const Tensor& m, const Tensor& v) {
  check_2d(m, "add_rowvec");
  const std::size_t r = m.rows(), c = m.cols();
  if (v.numel() != c) {
    throw std::invalid_argument("add_rowvec: shape mismatch " +
                                shape_str(m.shape()) + " vs " +
                                shape_str(v.shape()));
  }
  auto out = new_node(m.shape());
  for (std::size_t i = 0; i < r; ++i) {
    K().add(out->data.data() + i * c, m.data().data() + i * c,
            v.data().data(), c);
  }
  auto *pm = m.node(), *pv = v.node();
  record(out, {m, v}, [pm, pv, r, c](detail::Node& self) {
    accumulate(pm, self.grad.data(), self.grad.size());
    if (pv->requires_grad) {
      pv->ensure_grad();
      for (std::size_t i = 0; i < r; ++i) {
        K().axpy(pv->grad.data(), 1.0, self.grad.data() + i * c, c);
      }
    }
  });
  return Tensor::wrap(out);
}

// ---- nonlinearities --------------------------------------------------------

namespace {

template <typename Fwd, typename Bwd>
Tensor unary_op(const Tensor& a, Fwd fwd, Bwd bwd) {
  auto out = new_node(a.shape());
  for (std::size_t i = 0; i < out->numel(); ++i) {
    out->data[i] = fwd(a.data()[i]);
  }
  auto* pa = a.node();
  record(out, {a}, [pa, bwd](detail::Node& self) {
    if (!pa->requires_grad) return;
    pa->ensure_grad();
    for (std::size_t i = 0; i < self.grad.size(); ++i) {
      pa->grad[i] += self.grad[i] * bwd(pa->data[i], self.data[i]);
    }
  });
  return Tensor::wrap(out);
}

double stable_sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

Tensor tanh_t(const Tensor& a) {
  return unary_op(
      a, [](double x) { return std::tanh(x); },
      [](double, double y) { return 1.0 - y * y; });
}

Tensor sigmoid(const Tensor& a) {
  return unary_op(
      a, [](double x) { return stable_sigmoid(x); },
      [](double, double y) { return y * (1.0 - y); });
}

Tensor relu(const Tensor& a) {
  return unary_op(
      a, [](double x) { return x > 0.0 ? x : 0.0; },
      [](double x, double) { return x > 0.0 ? 1.0 : 0.0; });
}

// ---- shape ops --------------------------------------------------------------

Tensor matmul(const Tensor& a, const Tensor& b) {
  check_2d(a, "matmul");
  check_2d(b, "matmul");
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: shape mismatch " +
                                shape_str(a.shape()) + " x " +
                                shape_str(b.shape()));
  }
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  auto out = new_node({m, n});
  K().matmul(out->data.data(), a.data().data(), b.data().data(), m, k, n);
  auto *pa = a.node(), *pb = b.node();
  record(out, {a, b}, [pa, pb, m, k, n](detail::Node& self) {
    if (pa->requires_grad) {
      // dA += dC * B^T
      std::vector<double> bt(k * n);
      transpose_raw(pb->data.data(), bt.data(), k, n);
      std::vector<double> tmp(m * k);
      K().matmul(tmp.data(), self.grad.data(), bt.data(), m, n, k);
      accumulate(pa, tmp.data(), tmp.size());
    }
    if (pb->requires_grad) {
      // dB += A^T * dC
      std::vector<double> at(m * k);
      transpose_raw(pa->data.data(), at.data(), m, k);
      std::vector<double> tmp(k * n);
      K().matmul(tmp.data(), at.data(), self.grad.data(), k, m, n);
      accumulate(pb, tmp.data(), tmp.size());
    }
  });
  return Tensor::wrap(out);
}

Tensor transpose(const Tensor& a) {
  check_2d(a, "transpose");
  const std::size_t r = a.rows(), c = a.cols();
  auto out = new_node({c, r});
  transpose_raw(a.data().data(), out->data.data(), r, c);
  auto* pa = a.node();
  record(out, {a}, [pa, r, c](detail::Node& self) {
    if (!pa->requires_grad) return;
    pa->ensure_grad();
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        pa->grad[j * c + i] += self.grad[i * r + j];
      }
    }
  });
  return Tensor::wrap(out);
}

Tensor concat_cols(const Tensor& a, const Tensor& b) {
  check_2d(a, "concat_cols");
  check_2d(b, "concat_cols");
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("concat_cols: row mismatch " +
                                shape_str(a.shape()) + " vs " +
                                shape_str(b.shape()));
  }
  const std::size_t r = a.rows(), ca = a.cols(), cb = b.cols();
  auto out = new_node({r, ca + cb});
  for (std::size_t i = 0; i < r; ++i) {
    std::memcpy(out->data.data() + i * (ca + cb), a.data().data() + i * ca,
                ca * sizeof(double));
    std::memcpy(out->data.data() + i * (ca + cb) + ca,
                b.data().data() + i * cb, cb * sizeof(double));
  }
  auto *pa = a.node(), *pb = b.node();
  record(out, {a, b}, [pa, pb, r, ca, cb](detail::Node& self) {
    for (std::size_t i = 0; i < r; ++i) {
      if (pa->requires_grad) {
        pa->ensure_grad();
        K().axpy(pa->grad.data() + i * ca, 1.0,
                 self.grad.data() + i * (ca + cb), ca);
      }
      if (pb->requires_grad) {
        pb->ensure_grad();
        K().axpy(pb->grad.data() + i * cb, 1.0,
                 self.grad.data() + i * (ca + cb) + ca, cb);
      }
    }
  });
  return Tensor::wrap(out);
}

Tensor slice_cols(const Tensor& a, std::size_t c0, std::size_t c1) {
  check_2d(a, "slice_cols");
  const std::size_t r = a.rows(), c = a.cols();
  if (c0 >= c1 || c1 > c) {
    throw std::invalid_argument("slice_cols: invalid range [" +
                                std::to_string(c0) + "," + std::to_string(c1) +
                                ") for " + shape_str(a.shape()));
  }
  const std::size_t w = c1 - c0;
  auto out = new_node({r, w});
  for (std::size_t i = 0; i < r; ++i) {
    std::memcpy(out->data.data() + i * w, a.data().data() + i * c + c0,
                w * sizeof(double));
  }
  auto* pa = a.node();
  record(out, {a}, [pa, r, c, c0, w](detail::Node& self) {
    if (!pa->requires_grad) return;
    pa->ensure_grad();
    for (std::size_t i = 0; i < r; ++i) {
      K().axpy(pa->grad.data() + i * c + c0, 1.0, self.grad.data() + i * w, w);
    }
  });
  return Tensor::wrap(out);
}

Tensor row(const Tensor& a, std::size_t i) {
  check_2d(a, "row");
  const std::size_t r = a.rows(), c = a.cols();
  if (i >= r) {
    throw std::invalid_argument("row: index " + std::to_string(i) +
                                " out of range for " + shape_str(a.shape()));
  }
  auto out = new_node({1, c});
  std::memcpy(out->data.data(), a.data().data() + i * c, c * sizeof(double));
  auto* pa = a.node();
  record(out, {a}, [pa, i, c](detail::Node& self) {
    if (!pa->requires_grad) return;
    pa->ensure_grad();
    K().axpy(pa->grad.data() + i * c, 1.0, self.grad.data(), c);
  });
  return Tensor::wrap(out);
}

Tensor rows_select(const Tensor& table, const std::vector<int>& ids) {
  check_2d(table, "rows_select");
  const std::size_t r = table.rows(), c = table.cols();
  auto out = new_node({ids.size(), c});
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0 || static_cast<std::size_t>(ids[i]) >= r) {
      throw std::invalid_argument("rows_select: id " + std::to_string(ids[i]) +
                                  " out of range for " +
                                  shape_str(table.shape()));
    }
    std::memcpy(out->data.data() + i * c,
                table.data().data() + static_cast<std::size_t>(ids[i]) * c,
                c * sizeof(double));
  }
  auto* pt = table.node();
  record(out, {table}, [pt, ids, c](detail::Node& self) {
    if (!pt->requires_grad) return;
    pt->ensure_grad();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      K().axpy(pt->grad.data() + static_cast<std::size_t>(ids[i]) * c, 1.0,
               self.grad.data() + i * c, c);
    }
  });
  return Tensor::wrap(out);
}

Tensor sum_all(const Tensor& a) {
  auto out = new_node({1});
  out->data[0] = K().sum(a.data().data(), a.numel());
  auto* pa = a.node();
  record(out, {a}, [pa](detail::Node& self) {
    if (!pa->requires_grad) return;
    pa->ensure_grad();
    const double g = self.grad[0];
    for (double& v : pa->grad) v += g;
  });
  return Tensor::wrap(out);
}

Tensor mean_all(const Tensor& a) {
  return scale(sum_all(a), 1.0 / static_cast<double>(a.numel()));
}

// ---- softmax / layer_norm / cross_entropy ----------------------------------

Tensor softmax_rows(const Tensor& a) {
  check_2d(a, "softmax_rows");
  for (double v : a.data()) {
    if (std::isnan(v)) throw std::runtime_error("softmax_rows: NaN input");
  }
  const std::size_t r = a.rows(), c = a.cols();
  auto out = new_node(a.shape());
  for (std::size_t i = 0; i < r; ++i) {
    const double* x = a.data().data() + i * c;
    double* y = out->data.data() + i * c;
    double m = x[0];
    for (std::size_t j = 1; j < c; ++j) m = std::max(m, x[j]);
    double s = 0.0;
    for (std::size_t j = 0; j < c; ++j) {
      y[j] = std::exp(x[j] - m);
      s += y[j];
    }
    const double inv = 1.0 / s;
    for (std::size_t j = 0; j < c; ++j) y[j] *= inv;
  }
  auto* pa = a.node();
  record(out, {a}, [pa, r, c](detail::Node& self) {
    if (!pa->requires_grad) return;
    pa->ensure_grad();
    for (std::size_t i = 0; i < r; ++i) {
      const double* y = self.data.data() + i * c;
      const double* g = self.grad.data() + i * c;
      double dotv = K().dot(g, y, c);
      double* dx = pa->grad.data() + i * c;
      for (std::size_t j = 0; j < c; ++j) dx[j] += (g[j] - dotv) * y[j];
    }
  });
  return Tensor::wrap(out);
}

Tensor layer_norm(const Tensor& x, const Tensor& gain, const Tensor& bias,
                  double eps) {
  check_2d(x, "layer_norm");
  const std::size_t r = x.rows(), c = x.cols();
  if (gain.numel() != c || bias.numel() != c) {
    throw std::invalid_argument("layer_norm: gain " + shape_str(gain.shape()) +
                                " / bias " + shape_str(bias.shape()) +
                                " do not match last axis of " +
                                shape_str(x.shape()));
  }
  auto out = new_node(x.shape());
  auto xhat = std::make_shared<std::vector<double>>(r * c);
  auto inv_std = std::make_shared<std::vector<double>>(r);
  for (std::size_t i = 0; i < r; ++i) {
    const double* xi = x.data().data() + i * c;
    const double mean = K().sum(xi, c) / static_cast<double>(c);
    double var = 0.0;
    for (std::size_t j = 0; j < c; ++j) {
      const double d = xi[j] - mean;
      var += d * d;
    }
    var /= static_cast<double>(c);
    const double inv = 1.0 / std::sqrt(var + eps);
    (*inv_std)[i] = inv;
    double* xh = xhat->data() + i * c;
    double* y = out->data.data() + i * c;
    for (std::size_t j = 0; j < c; ++j) {
      xh[j] = (xi[j] - mean) * inv;
      y[j] = xh[j] * gain.data()[j] + bias.data()[j];
    }
  }
  auto *px = x.node(), *pg = gain.node(), *pb = bias.node();
  record(out, {x, gain, bias},
         [px, pg, pb, xhat, inv_std, r, c](detail::Node& self) {
           for (std::size_t i = 0; i < r; ++i) {
             const double* g = self.grad.data() + i * c;
             const double* xh = xhat->data() + i * c;
             if (pg->requires_grad) {
               pg->ensure_grad();
               for (std::size_t j = 0; j < c; ++j) pg->grad[j] += g[j] * xh[j];
             }
             if (pb->requires_grad) {
               pb->ensure_grad();
               for (std::size_t j = 0; j < c; ++j) pb->grad[j] += g[j];
             }
             if (px->requires_grad) {
               px->ensure_grad();
               std::vector<double> dxh(c);
               for (std::size_t j = 0; j < c; ++j) {
                 dxh[j] = g[j] * pg->data[j];
               }
               const double sum_dxh = K().sum(dxh.data(), c);
               const double sum_dxh_xh = K().dot(dxh.data(), xh, c);
               const double inv = (*inv_std)[i];
               const double cinv = 1.0 / static_cast<double>(c);
               double* dx = px->grad.data() + i * c;
               for (std::size_t j = 0; j < c; ++j) {
                 dx[j] +=
                     inv * (dxh[j] - sum_dxh * cinv - xh[j] * sum_dxh_xh * cinv);
               }
             }
           }
         });
  return Tensor::wrap(out);
}

Tensor cross_entropy(const Tensor& logits, const std::vector<int>& labels) {
  check_2d(logits, "cross_entropy");
  const std::size_t b = logits.rows(), c = logits.cols();
  if (labels.size() != b) {
    throw std::invalid_argument(
        "cross_entropy: " + std::to_string(labels.size()) + " labels for " +
        shape_str(logits.shape()));
  }
  for (int y : labels) {
    if (y < 0 || static_cast<std::size_t>(y) >= c) {
      throw std::invalid_argument("cross_entropy: label " + std::to_string(y) +
                                  " out of range [0," + std::to_string(c) +
                                  ")");
    }
  }
  auto probs = std::make_shared<std::vector<double>>(b * c);
  double total = 0.0;
  for (std::size_t i = 0; i < b; ++i) {
    const double* x = logits.data().data() + i * c;
    double m = x[0];
    for (std::size_t j = 1; j < c; ++j) m = std::max(m, x[j]);
    double s = 0.0;
    double* p = probs->data() + i * c;
    for (std::size_t j = 0; j < c; ++j) {
      p[j] = std::exp(x[j] - m);
      s += p[j];
    }
    const double inv = 1.0 / s;
    for (std::size_t j = 0; j < c; ++j) p[j] *= inv;
    total += m + std::log(s) - x[labels[i]];
  }
  auto out = new_node({1});
  out->data[0] = total / static_cast<double>(b);
  auto* pl = logits.node();
  record(out, {logits}, [pl, probs, labels, b, c](detail::Node& self) {
    if (!pl->requires_grad) return;
    pl->ensure_grad();
    const double g = self.grad[0] / static_cast<double>(b);
    for (std::size_t i = 0; i < b; ++i) {
      const double* p = probs->data() + i * c;
      double* dx = pl->grad.data() + i * c;
      for (std::size_t j = 0; j < c; ++j) dx[j] += g * p[j];
      dx[labels[i]] -= g;
    }
  });
  return Tensor::wrap(out);
}

// ---- backward / grad_check --------------------------------------------------

void backward(const Tensor& loss) {
  if (loss.numel() != 1) {
    throw std::invalid_argument("backward: loss must be scalar, got " +
                                shape_str(loss.shape()));
  }
  detail::Node* root = loss.node();
  std::vector<detail::Node*> order;
  std::unordered_set<detail::Node*> visited;
  std::vector<std::pair<detail::Node*, std::size_t>> stack;
  stack.emplace_back(root, 0);
  visited.insert(root);
  while (!stack.empty()) {
    auto& [node, idx] = stack.back();
    if (idx < node->parents.size()) {
      detail::Node* p = node->parents[idx].get();
      ++idx;
      if (visited.insert(p).second) stack.emplace_back(p, 0);
    } else {
      order.push_back(node);
      stack.pop_back();
    }
  }
  root->ensure_grad();
  root->grad[0] += 1.0;
  // Reverse post-order is a topological order: each node is processed after
  // every node that consumes it.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    detail::Node* nd = *it;
    if (nd->backward_fn && !nd->grad.empty()) nd->backward_fn(*nd);
  }
}

double grad_check(const std::function<Tensor(const std::vector<Tensor>&)>& f,
                  const std::vector<Tensor>& inputs, double eps) {
  std::vector<Tensor> xs = inputs;
  for (auto& t : xs) t.zero_grad();
  Tensor loss = f(xs);
  backward(loss);
  std::vector<std::vector<double>> analytic;
  analytic.reserve(xs.size());
  for (auto& t : xs) {
    if (t.has_grad()) {
      analytic.emplace_back(t.grad().begin(), t.grad().end());
    } else {
      analytic.emplace_back(t.numel(), 0.0);
    }
  }
  double max_err = 0.0;
  NoGradGuard ng;
  for (std::size_t ti = 0; ti < xs.size(); ++ti) {
    auto data = xs[ti].mutable_data();
    for (std::size_t i = 0; i < data.size(); ++i) {
      const double orig = data[i];
      data[i] = orig + eps;
      const double fp = f(xs).item();
      data[i] = orig - eps;
      const double fm = f(xs).item();
      data[i] = orig;
      const double numeric = (fp - fm) / (2.0 * eps);
      const double a = analytic[ti][i];
      const double denom = std::max({std::fabs(a), std::fabs(numeric), 1e-8});
      max_err = std::max(max_err, std::fabs(a - numeric) / denom);
    }
  }
  return max_err;
}

void assert_finite(const Tensor& t, const char* what) {
  for (double v : t.data()) {
    if (!std::isfinite(v)) {
      throw std::runtime_error(std::string(what) +
                               ": non-finite value encountered");
    }
  }
}

}  // namespace vulnscan::num
