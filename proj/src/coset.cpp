#include "coxmut/coset.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace coxmut {

namespace {

struct TableFull {};

class Enumerator {
 public:
  Enumerator(int gens, std::vector<Word> relators, std::size_t cap)
      : gens_(gens), relators_(std::move(relators)), cap_(cap) {
    table_.reserve(std::min<std::size_t>(cap_, 1024) * static_cast<std::size_t>(gens_));
  }

  CosetTable run(std::span<const Word> subgroup) {
    CosetTable out;
    out.cap = cap_;
    out.generators = gens_;
    std::size_t slack = static_cast<std::size_t>(gens_);
    for (const Word& r : relators_) slack += r.size();
    try {
      new_coset();
      for (const Word& h : subgroup) scan(0, h, true);
      for (int c = 0; c < static_cast<int>(alive_.size()); ++c) {
        if (!exhausted_ && alive_.size() + slack > cap_) {
          lookahead();
          c = compact(c);
          if (c < 0) break;
          // Give up on lookahead once it stops freeing at least 1% of the cap.
          if (alive_.size() + slack + cap_ / 100 > cap_) exhausted_ = true;
        }
        if (!alive_[c]) continue;
        for (const Word& r : relators_) {
          scan(c, r, true);
          if (!alive_[c]) break;
        }
        if (!alive_[c]) continue;
        for (int g = 0; g < gens_; ++g) {
          if (at(c, g) < 0) define(c, g);
        }
      }
    } catch (const TableFull&) {
      out.status = CosetStatus::Exceeded;
      out.index = live_;
      return out;
    }
    compact(0);
    out.status = CosetStatus::Complete;
    out.index = live_;
    out.table.resize(live_);
    for (std::size_t c = 0; c < live_; ++c) {
      out.table[c].assign(table_.begin() + static_cast<std::ptrdiff_t>(c * gens_),
                          table_.begin() + static_cast<std::ptrdiff_t>((c + 1) * gens_));
    }
    return out;
  }

 private:
  int& at(int c, int g) { return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(gens_) + g]; }

  int new_coset() {
    if (live_ >= cap_ || alive_.size() >= cap_) throw TableFull{};
    int c = static_cast<int>(alive_.size());
    alive_.push_back(1);
    parent_.push_back(c);
    table_.insert(table_.end(), static_cast<std::size_t>(gens_), -1);
    ++live_;
    return c;
  }

  int define(int c, int g) {
    int d = new_coset();
    at(c, g) = d;
    at(d, g) = c;
    return d;
  }

  // Traces w from c in both directions; fills a single gap by deduction and
  // defines new cosets when `fill` is set.
  void scan(int c, const Word& w, bool fill) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[j]) >= 0) b = at(b, w[j--]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, w[i]) = f;
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    alive_[b] = 0;
    --live_;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      int e = queue.front();
      queue.pop_front();
      for (int g = 0; g < gens_; ++g) {
        int f = at(e, g);
        if (f < 0) continue;
        at(e, g) = -1;
        if (at(f, g) == e) at(f, g) = -1;
        int e1 = rep(e), f1 = rep(f);
        if (at(e1, g) >= 0) {
          merge(f1, at(e1, g), queue);
        } else if (at(f1, g) >= 0) {
          merge(e1, at(f1, g), queue);
        } else {
          at(e1, g) = f1;
          at(f1, g) = e1;
        }
      }
    }
  }

  void lookahead() {
    for (int c = 0; c < static_cast<int>(alive_.size()); ++c) {
      if (!alive_[c]) continue;
      for (const Word& r : relators_) {
        scan(c, r, false);
        if (!alive_[c]) break;
      }
    }
  }

  // Renumbers live cosets in order; returns the new number of the first live
  // coset at or after `c`, or -1 when there is none.
  int compact(int c) {
    std::vector<int> newnum(alive_.size(), -1);
    int k = 0;
    for (std::size_t x = 0; x < alive_.size(); ++x) {
      if (alive_[x]) newnum[x] = k++;
    }
    std::vector<int> table(static_cast<std::size_t>(k) * static_cast<std::size_t>(gens_), -1);
    for (std::size_t x = 0; x < alive_.size(); ++x) {
      if (!alive_[x]) continue;
      for (int g = 0; g < gens_; ++g) {
        int y = at(static_cast<int>(x), g);
        table[static_cast<std::size_t>(newnum[x]) * gens_ + g] = y < 0 ? -1 : newnum[y];
      }
    }
    int next = -1;
    for (std::size_t x = static_cast<std::size_t>(c); x < alive_.size(); ++x) {
      if (alive_[x]) {
        next = newnum[x];
        break;
      }
    }
    table_ = std::move(table);
    alive_.assign(static_cast<std::size_t>(k), 1);
    parent_.resize(static_cast<std::size_t>(k));
    for (int x = 0; x < k; ++x) parent_[x] = x;
    return next;
  }

  int gens_;
  std::vector<Word> relators_;
  std::size_t cap_;
  std::vector<int> table_;
  std::vector<char> alive_;
  std::vector<int> parent_;
  std::size_t live_ = 0;
  bool exhausted_ = false;
};

}  // namespace

CosetTable coset_enumerate(int generators, std::span<const Word> relators, std::span<const Word> subgroup,
                           std::size_t cap) {
  std::set<Word> seen;
  std::vector<Word> rels;
  for (const Word& r : relators) {
    Word w = cyclic_reduce(r);
    if (w.empty()) continue;
    if (seen.insert(normalize_relator(w)).second) rels.push_back(std::move(w));
  }
  std::sort(rels.begin(), rels.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
  std::vector<Word> sub;
  for (const Word& h : subgroup) {
    Word w = free_reduce(h);
    if (!w.empty()) sub.push_back(std::move(w));
  }
  Enumerator e(generators, std::move(rels), std::max<std::size_t>(cap, 1));
  return e.run(sub);
}

CosetTable coset_enumerate(const Presentation& p, std::span<const Word> subgroup, std::size_t cap) {
  std::vector<Word> rels = p.relators();
  return coset_enumerate(p.generators, rels, subgroup, cap);
}

}  // namespace coxmut
