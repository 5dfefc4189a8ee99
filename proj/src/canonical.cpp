#include "coxmut/canonical.hpp"

#include <algorithm>
#include <map>

namespace coxmut {

namespace {

std::vector<int> refine_colours(const Diagram& d) {
  const int n = d.size();
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  int classes = -1;
  while (true) {
    std::vector<std::vector<Weight>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<Weight, int>> nb;
      for (int u = 0; u < n; ++u) {
        Weight w = d.signed_weight(v, u);
        if (w != 0) nb.emplace_back(w, colour[u]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].push_back(colour[v]);
      sig[v].push_back(static_cast<Weight>(nb.size()));
      for (auto& [w, c] : nb) {
        sig[v].push_back(w);
        sig[v].push_back(c);
      }
    }
    std::vector<std::vector<Weight>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    }
    int now = static_cast<int>(uniq.size());
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

class Search {
 public:
  Search(const Diagram& d, std::vector<int> colour) : d_(d), colour_(std::move(colour)) {
    const int n = d.size();
    for (int v = 0; v < n; ++v) slot_colour_.push_back(colour_[v]);
    std::sort(slot_colour_.begin(), slot_colour_.end());
    twin_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      twin_[v] = v;
      for (int u = 0; u < v; ++u) {
        if (are_twins(u, v)) {
          twin_[v] = twin_[u];
          break;
        }
      }
    }
    used_.assign(static_cast<std::size_t>(n), 0);
  }

  CanonicalForm run() {
    dfs(0, true);
    CanonicalForm out;
    out.key.bytes = std::to_string(d_.size()) + "|";
    for (std::size_t i = 0; i < best_.size(); ++i) {
      if (i) out.key.bytes += ',';
      out.key.bytes += std::to_string(best_[i]);
    }
    out.order = best_order_;
    return out;
  }

 private:
  bool are_twins(int u, int v) const {
    if (colour_[u] != colour_[v] || d_.adjacent(u, v)) return false;
    for (int w = 0; w < d_.size(); ++w) {
      if (w == u || w == v) continue;
      if (d_.signed_weight(u, w) != d_.signed_weight(v, w)) return false;
    }
    return true;
  }

  void dfs(int p, bool less) {
    const int n = d_.size();
    if (p == n) {
      if (less || !have_best_) {
        best_ = cur_;
        best_order_ = order_;
        have_best_ = true;
        ++generation_;
      }
      return;
    }
    std::vector<char> tried_twin(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      if (used_[v] || colour_[v] != slot_colour_[p] || tried_twin[twin_[v]]) continue;
      tried_twin[twin_[v]] = 1;
      const std::size_t start = cur_.size();
      for (int q = 0; q < p; ++q) cur_.push_back(d_.signed_weight(v, order_[q]));
      bool l = less || !have_best_;
      if (!l) {
        int cmp = 0;
        for (std::size_t i = start; i < cur_.size() && cmp == 0; ++i) {
          if (cur_[i] < best_[i]) cmp = -1;
          if (cur_[i] > best_[i]) cmp = 1;
        }
        if (cmp > 0) {
          cur_.resize(start);
          continue;
        }
        l = cmp < 0;
      }
      used_[v] = 1;
      order_.push_back(v);
      const long gen = generation_;
      dfs(p + 1, l);
      if (gen != generation_) less = false;
      order_.pop_back();
      used_[v] = 0;
      cur_.resize(start);
    }
  }

  const Diagram& d_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<int> twin_;
  std::vector<char> used_;
  std::vector<int> order_;
  std::vector<Weight> cur_;
  std::vector<Weight> best_;
  std::vector<int> best_order_;
  bool have_best_ = false;
  long generation_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Diagram& d) {
  Search s(d, refine_colours(d));
  return s.run();
}

CanonicalKey canonical_key(const Diagram& d) { return canonical_form(d).key; }

bool isomorphic(const Diagram& a, const Diagram& b) {
  return a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

Diagram canonical_diagram(const Diagram& d) {
  CanonicalForm f = canonical_form(d);
  std::vector<int> perm(f.order.size());
  for (std::size_t p = 0; p < f.order.size(); ++p) perm[f.order[p]] = static_cast<int>(p);
  return permute(d, perm);
}

}  // namespace coxmut
