#include <algorithm>
#include <stdexcept>

#include "tdl/tdalg/tdalg.hpp"

namespace tdl {

IsResult max_is_td(const Graph& g, const TreedepthDecomposition& d) {
  auto v = validate_tdd(g, d);
  if (!v.valid) throw std::invalid_argument("invalid decomposition: " + v.witness);
  IsResult res;
  auto ch = d.children();
  struct Frame {
    int u;
    int in;  // -1 before the first choice, then 0 (out) and 1 (in)
    size_t child;
    int sum;
    int best;
  };
  std::vector<Frame> stack;
  auto note = [&] {
    long long frames = static_cast<long long>(stack.size()) + 1;
    res.meter.peak_frames = std::max(res.meter.peak_frames, frames);
    res.meter.peak_aux_cells = std::max(res.meter.peak_aux_cells, 4 * frames - 3);
  };
  auto can_take = [&](int u) {
    for (const Frame& f : stack)
      if (f.u != u && f.in == 1 && g.has_edge(f.u, u)) return false;
    return true;
  };
  note();
  for (int r : ch[0]) {
    stack.push_back({r, -1, 0, 0, -1});
    int ret = 0;
    bool returning = false;
    while (!stack.empty()) {
      note();
      Frame& f = stack.back();
      if (returning) {
        returning = false;
        f.sum += ret;
        ++f.child;
      }
      if (f.in < 0 || f.child == ch[f.u].size()) {
        if (f.in >= 0) f.best = std::max(f.best, f.sum);
        int next = f.in + 1;
        if (next == 1 && !can_take(f.u)) next = 2;
        if (next == 2) {
          ret = f.best;
          stack.pop_back();
          returning = true;
          continue;
        }
        f.in = next;
        f.sum = next;
        f.child = 0;
        if (ch[f.u].empty()) continue;
      }
      stack.push_back({ch[f.u][f.child], -1, 0, 0, -1});
    }
    res.size += ret;
  }
  return res;
}

}  // namespace tdl
