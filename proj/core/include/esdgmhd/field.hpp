#ifndef ESDGMHD_FIELD_HPP
#define ESDGMHD_FIELD_HPP

#include <functional>
#include <vector>

#include "esdgmhd/state.hpp"
#include "esdgmhd/types.hpp"

namespace esdg {

/// Packed nodal data over all elements: comps doubles per node, nodes indexed
/// (i, j) within an element, i along x. Element and node ordering match
/// CartesianMesh.
class NodalField {
 public:
  NodalField() = default;
  NodalField(int elements, int n1, int comps)
      : elements_(elements), n1_(n1), comps_(comps),
        data_(static_cast<size_t>(elements) * n1 * n1 * comps, 0.0) {}

  double* node(int e, int i, int j) {
    return data_.data() + (static_cast<size_t>(e) * n1_ * n1_ + static_cast<size_t>(i) * n1_ + j) * comps_;
  }
  const double* node(int e, int i, int j) const {
    return data_.data() + (static_cast<size_t>(e) * n1_ * n1_ + static_cast<size_t>(i) * n1_ + j) * comps_;
  }

  State state_at(int e, int i, int j) const {
    const double* p = node(e, i, j);
    return {p[0], {p[1], p[2], p[3]}, p[4], {p[5], p[6], p[7]}, p[8]};
  }
  void set_state(int e, int i, int j, const State& s) {
    double* p = node(e, i, j);
    const Vec9 v = s.to_vec();
    for (int c = 0; c < 9; ++c) p[c] = v[c];
  }
  Vec9 vec_at(int e, int i, int j) const {
    const double* p = node(e, i, j);
    Vec9 v;
    for (int c = 0; c < 9; ++c) v[c] = p[c];
    return v;
  }
  void set_vec(int e, int i, int j, const Vec9& v) {
    double* p = node(e, i, j);
    for (int c = 0; c < 9; ++c) p[c] = v[c];
  }

  int elements() const { return elements_; }
  int n1() const { return n1_; }
  int comps() const { return comps_; }
  size_t size() const { return data_.size(); }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

 private:
  int elements_ = 0, n1_ = 0, comps_ = 0;
  std::vector<double> data_;
};

/// Discrete solution together with its simulation time.
struct SolutionField {
  NodalField u;
  double time = 0.0;
};

/// Static-partition parallel loop over elements. Chunks are assigned by
/// index, so results never depend on the number of threads: each element is
/// processed with a fixed arithmetic order and writes only its own data.
class ThreadPool {
 public:
  explicit ThreadPool(int threads = 1) : threads_(threads < 1 ? 1 : threads) {}

  int threads() const { return threads_; }

  /// fn(index, chunk_id) with chunk_id < threads().
  void for_each(int count, const std::function<void(int, int)>& fn) const;

 private:
  int threads_;
};

}  // namespace esdg

#endif
