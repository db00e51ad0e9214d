#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tdl/tdalg/tdalg.hpp"

namespace tdl {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

namespace {

// Dense polynomials truncated at degree n.
struct PolyRing {
  using V = DominationPolynomial;
  size_t n;
  V zero() const { return V(n + 1, 0); }
  V one() const {
    V r = zero();
    r[0] = 1;
    return r;
  }
  bool is_zero(const V& a) const {
    return std::all_of(a.begin(), a.end(), [](const BigInt& c) { return c == 0; });
  }
  void mul(V& a, const V& b) const {
    V r = zero();
    for (size_t i = 0; i <= n; ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; i + j <= n; ++j)
        if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    a = std::move(r);
  }
  void add(V& a, const V& b) const {
    for (size_t i = 0; i <= n; ++i) a[i] += b[i];
  }
  void sub(V& a, const V& b) const {
    for (size_t i = 0; i <= n; ++i) a[i] -= b[i];
  }
  void add_x_times(V& a, const V& b) const {
    for (size_t i = 0; i < n; ++i) a[i + 1] += b[i];
  }
  long long cells() const { return static_cast<long long>(n) + 1; }
};

// Values in F_p with x evaluated at a.
struct ModRing {
  using V = std::uint64_t;
  std::uint64_t p, a;
  V zero() const { return 0; }
  V one() const { return 1 % p; }
  bool is_zero(V v) const { return v == 0; }
  void mul(V& x, V y) const { x = static_cast<V>((static_cast<unsigned __int128>(x) * y) % p); }
  void add(V& x, V y) const { x = (x + y) % p; }
  void sub(V& x, V y) const { x = (x + p - y) % p; }
  void add_x_times(V& x, V y) const { x = (x + static_cast<V>((static_cast<unsigned __int128>(a) * y) % p)) % p; }
  long long cells() const { return 1; }
};

// Mutual f/g recursion on an explicit frame stack. lab[v] holds the label of
// every vertex on the current root path.
template <class R>
class DsEngine {
 public:
  using V = typename R::V;

  DsEngine(const Graph& g, const TreedepthDecomposition& d, R ring, SpaceMeter* meter)
      : g_(g), ch_(d.children()), ring_(std::move(ring)), meter_(meter), lab_(g.n() + 1, DsLabel::A) {}

  V product_over_roots() {
    V acc = ring_.one();
    frames_ = 1;
    note();
    for (int r : ch_[0]) {
      ring_.mul(acc, run(r));
      if (ring_.is_zero(acc)) break;
    }
    return acc;
  }

  // f(u, phi) where tail lists (vertex, label) root first.
  V f_with_tail(int u, const std::vector<std::pair<int, DsLabel>>& tail) {
    for (auto [v, l] : tail) {
      lab_[v] = l;
      path_.push_back(v);
    }
    frames_ = 1;
    return run(u);
  }

 private:
  enum class Kind { f, g };
  struct Frame {
    Kind kind;
    int u;
    int step;  // label phase for f, child cursor for g
    V acc;
  };

  void note() {
    if (!meter_) return;
    meter_->peak_frames = std::max(meter_->peak_frames, frames_ + static_cast<long long>(stack_.size()));
    meter_->peak_aux_cells =
        std::max(meter_->peak_aux_cells, (frames_ + static_cast<long long>(stack_.size())) * ring_.cells());
  }

  // no edge between T- and F-labelled vertices on the current path
  bool tail_consistent() const {
    for (size_t i = 0; i < path_.size(); ++i)
      for (size_t j = i + 1; j < path_.size(); ++j) {
        DsLabel a = lab_[path_[i]], b = lab_[path_[j]];
        if (((a == DsLabel::T && b == DsLabel::F) || (a == DsLabel::F && b == DsLabel::T)) &&
            g_.has_edge(path_[i], path_[j]))
          return false;
      }
    return true;
  }

  static DsLabel phase_label(int step) { return step == 0 ? DsLabel::A : step == 1 ? DsLabel::F : DsLabel::T; }

  void enter_f(int u) {
    stack_.push_back({Kind::f, u, 0, ring_.zero()});
    lab_[u] = DsLabel::A;
    path_.push_back(u);
    enter_g(u);
  }

  // Pushes g(u, .) or, for a leaf, yields the base value directly.
  void enter_g(int u) {
    if (ch_[u].empty()) {
      pending_ = tail_consistent() ? ring_.one() : ring_.zero();
      return;
    }
    stack_.push_back({Kind::g, u, 0, ring_.one()});
    note();
    enter_f(ch_[u][0]);
  }

  V run(int root) {
    const size_t base = stack_.size();
    enter_f(root);
    note();
    while (true) {
      // every iteration starts with a pending return value for the top frame
      Frame& top = stack_.back();
      if (top.kind == Kind::g) {
        ring_.mul(top.acc, pending_);
        ++top.step;
        if (top.step < static_cast<int>(ch_[top.u].size()) && !ring_.is_zero(top.acc)) {
                enter_f(ch_[top.u][top.step]);
          note();
          continue;
        }
        pending_ = std::move(top.acc);
        stack_.pop_back();
        continue;
      }
      // f frame: combine A - F + x*T
      if (top.step == 0) ring_.add(top.acc, pending_);
      else if (top.step == 1) ring_.sub(top.acc, pending_);
      else ring_.add_x_times(top.acc, pending_);
      ++top.step;
      if (top.step < 3) {
        lab_[top.u] = phase_label(top.step);
        int u = top.u;
        enter_g(u);
        note();
        continue;
      }
      pending_ = std::move(top.acc);
      stack_.pop_back();
      path_.pop_back();
      if (stack_.size() == base) return pending_;
    }
  }

  const Graph& g_;
  std::vector<std::vector<int>> ch_;
  R ring_;
  SpaceMeter* meter_;
  std::vector<DsLabel> lab_;
  std::vector<int> path_;
  std::vector<Frame> stack_;
  long long frames_ = 0;
  V pending_{};
};

void require_valid(const Graph& g, const TreedepthDecomposition& d) {
  auto v = validate_tdd(g, d);
  if (!v.valid) throw std::invalid_argument("invalid decomposition: " + v.witness);
}

}  // namespace

DominationPolynomial count_ds_exact(const Graph& g, const TreedepthDecomposition& d, SpaceMeter* meter) {
  require_valid(g, d);
  if (meter) *meter = {};
  DsEngine<PolyRing> e(g, d, PolyRing{static_cast<size_t>(g.n())}, meter);
  return e.product_over_roots();
}

std::uint64_t eval_ds_mod(const Graph& g, const TreedepthDecomposition& d, std::uint64_t p, std::uint64_t a,
                          SpaceMeter* meter) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  if (a >= p) throw std::invalid_argument("evaluation point out of range");
  require_valid(g, d);
  if (meter) *meter = {};
  DsEngine<ModRing> e(g, d, ModRing{p, a}, meter);
  return e.product_over_roots();
}

DominationPolynomial ds_f(const Graph& g, const TreedepthDecomposition& d, int u, const std::vector<DsLabel>& tail) {
  require_valid(g, d);
  std::vector<int> anc;
  for (int v = d.parent[u]; v != 0; v = d.parent[v]) anc.push_back(v);
  std::reverse(anc.begin(), anc.end());
  if (anc.size() != tail.size()) throw std::invalid_argument("tail labelling has the wrong length");
  std::vector<std::pair<int, DsLabel>> t;
  for (size_t i = 0; i < anc.size(); ++i) t.emplace_back(anc[i], tail[i]);
  DsEngine<PolyRing> e(g, d, PolyRing{static_cast<size_t>(g.n())}, nullptr);
  return e.f_with_tail(u, t);
}

std::string format_polynomial(const DominationPolynomial& q) {
  std::ostringstream os;
  for (size_t i = 0; i < q.size(); ++i) os << "q " << i << ' ' << q[i] << '\n';
  return os.str();
}

}  // namespace tdl
