#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vam/common.hpp"

namespace vam::nn {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

// Trainable tensor with a persistent gradient accumulator.
template <class S>
struct Param {
  Mat<S> val;
  Mat<S> grad;

  Param() = default;
  Param(int rows, int cols) : val(Mat<S>::Zero(rows, cols)), grad(Mat<S>::Zero(rows, cols)) {}

  void zero_grad() { grad.setZero(); }
  std::size_t size() const { return static_cast<std::size_t>(val.size()); }

  std::uint64_t hash() const {
    return fnv1a(val.data(), sizeof(S) * static_cast<std::size_t>(val.size()));
  }

  void init_uniform(Rng& rng, double scale) {
    for (Eigen::Index i = 0; i < val.size(); ++i)
      val.data()[i] = static_cast<S>(rng.uniform(-scale, scale));
  }
};

template <class S>
using NamedParams = std::vector<std::pair<std::string, Param<S>*>>;

// One node of the computation graph; owned by the Tape.
template <class S>
struct Node {
  Mat<S> val;
  Mat<S> grad;
  bool needs_grad = false;
  std::size_t idx = 0;
  std::function<void()> back;  // pulls this->grad into parents

  void ensure_grad() {
    if (grad.rows() != val.rows() || grad.cols() != val.cols())
      grad = Mat<S>::Zero(val.rows(), val.cols());
  }
};

template <class S>
using Var = std::shared_ptr<Node<S>>;

// Records nodes in creation order; reverse sweep implements backprop.
// One tape per training example; cleared (or destroyed) afterwards.
template <class S>
class Tape {
 public:
  Var<S> constant(Mat<S> v) {
    auto n = std::make_shared<Node<S>>();
    n->val = std::move(v);
    n->needs_grad = false;
    push(n);
    return n;
  }

  // Graph leaf backed by a Param; gradients accumulate into p.grad.
  Var<S> leaf(Param<S>& p) {
    auto n = std::make_shared<Node<S>>();
    n->val = p.val;
    n->needs_grad = true;
    Node<S>* raw = n.get();
    n->back = [raw, &p]() { p.grad += raw->grad; };
    push(n);
    return n;
  }

  Var<S> make(Mat<S> v, bool needs_grad) {
    auto n = std::make_shared<Node<S>>();
    n->val = std::move(v);
    n->needs_grad = needs_grad;
    push(n);
    return n;
  }

  void backward(const Var<S>& root) {
    if (root->val.size() != 1)
      throw ContractError("Tape::backward: root must be a scalar");
    root->ensure_grad();
    root->grad(0, 0) = static_cast<S>(1);
    for (std::size_t i = root->idx + 1; i-- > 0;) {
      Node<S>* n = nodes_[i].get();
      if (n->needs_grad && n->back && n->grad.size() > 0) n->back();
    }
  }

  void clear() { nodes_.clear(); }
  std::size_t size() const { return nodes_.size(); }

 private:
  void push(Var<S>& n) {
    n->idx = nodes_.size();
    nodes_.push_back(n);
  }
  std::vector<Var<S>> nodes_;
};

}  // namespace vam::nn
