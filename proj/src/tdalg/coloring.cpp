#include <algorithm>
#include <stdexcept>

#include "tdl/tdalg/tdalg.hpp"

namespace tdl {

namespace {

void require_valid(const Validation& v) {
  if (!v.valid) throw std::invalid_argument("invalid decomposition: " + v.witness);
}

}  // namespace

ColorResult solve_3col_td(const Graph& g, const TreedepthDecomposition& d) {
  require_valid(validate_tdd(g, d));
  ColorResult res;
  auto ch = d.children();
  struct Frame {
    int u;
    int color;
    size_t child;
  };
  std::vector<Frame> stack;
  auto note = [&] {
    long long frames = static_cast<long long>(stack.size()) + 1;  // + main frame
    res.meter.peak_frames = std::max(res.meter.peak_frames, frames);
    res.meter.peak_aux_cells = std::max(res.meter.peak_aux_cells, 2 * frames - 1);
  };
  // next colour >= from for u that differs from every adjacent ancestor
  auto next_color = [&](int u, int from) {
    for (int c = from; c < 3; ++c) {
      bool ok = true;
      for (const Frame& f : stack)
        if (f.u != u && f.color == c && g.has_edge(f.u, u)) {
          ok = false;
          break;
        }
      if (ok) return c;
    }
    return 3;
  };
  res.colorable = true;
  note();
  for (int r : ch[0]) {
    stack.push_back({r, -1, 0});
    bool ret = false, returning = false;
    while (!stack.empty()) {
      note();
      Frame& f = stack.back();
      bool advance = f.color < 0;
      if (returning) {
        returning = false;
        if (ret)
          ++f.child;
        else
          advance = true;
      }
      if (advance) {
        f.color = next_color(f.u, f.color + 1);
        f.child = 0;
        if (f.color == 3) {
          stack.pop_back();
          ret = false;
          returning = true;
          continue;
        }
      }
      if (f.child == ch[f.u].size()) {
        stack.pop_back();
        ret = true;
        returning = true;
        continue;
      }
      stack.push_back({ch[f.u][f.child], -1, 0});
    }
    if (!ret) {
      res.colorable = false;
      break;
    }
  }
  return res;
}

ColorResult solve_3col_pw_baseline(const Graph& g, const TreeDecomposition& d) {
  if (!d.is_path) throw std::invalid_argument("invalid decomposition: not a path decomposition");
  require_valid(validate_tree_or_path(g, d));
  ColorResult res;
  res.meter.peak_frames = 1;
  auto order = path_order(d);
  auto pow3 = [](size_t k) {
    long long x = 1;
    while (k--) x *= 3;
    return x;
  };
  std::vector<int> prev_bag;
  std::vector<char> prev_table{1};
  for (int b : order) {
    const auto& bag = d.bags[b];
    const long long size = pow3(bag.size());
    res.meter.peak_aux_cells = std::max(res.meter.peak_aux_cells, size);
    // shared vertices, as positions in both bags
    std::vector<std::pair<int, int>> shared;
    for (size_t i = 0; i < bag.size(); ++i) {
      auto it = std::lower_bound(prev_bag.begin(), prev_bag.end(), bag[i]);
      if (it != prev_bag.end() && *it == bag[i]) shared.emplace_back(static_cast<int>(i), static_cast<int>(it - prev_bag.begin()));
    }
    std::vector<char> proj(pow3(shared.size()), 0);
    std::vector<int> digits(std::max(bag.size(), prev_bag.size()));
    for (long long e = 0; e < static_cast<long long>(prev_table.size()); ++e) {
      if (!prev_table[e]) continue;
      long long x = e;
      for (size_t i = 0; i < prev_bag.size(); ++i, x /= 3) digits[i] = static_cast<int>(x % 3);
      long long key = 0;
      for (size_t j = shared.size(); j-- > 0;) key = key * 3 + digits[shared[j].second];
      proj[key] = 1;
    }
    std::vector<char> table(size, 0);
    for (long long e = 0; e < size; ++e) {
      long long x = e;
      for (size_t i = 0; i < bag.size(); ++i, x /= 3) digits[i] = static_cast<int>(x % 3);
      bool ok = true;
      for (size_t i = 0; i < bag.size() && ok; ++i)
        for (size_t j = i + 1; j < bag.size() && ok; ++j)
          if (digits[i] == digits[j] && g.has_edge(bag[i], bag[j])) ok = false;
      if (!ok) continue;
      long long key = 0;
      for (size_t j = shared.size(); j-- > 0;) key = key * 3 + digits[shared[j].first];
      table[e] = proj[key];
    }
    prev_bag = bag;
    prev_table = std::move(table);
  }
  res.colorable = std::any_of(prev_table.begin(), prev_table.end(), [](char c) { return c != 0; });
  return res;
}

}  // namespace tdl
