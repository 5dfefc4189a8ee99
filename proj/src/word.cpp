#include "coxmut/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxmut {

Word free_reduce(std::span<const int> w) {
  Word out;
  out.reserve(w.size());
  for (int g : w) {
    if (!out.empty() && out.back() == g) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return out;
}

Word cyclic_reduce(std::span<const int> w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word normalize_relator(std::span<const int> w) {
  Word r = cyclic_reduce(w);
  if (r.empty()) return r;
  Word best = r;
  Word rev(r.rbegin(), r.rend());
  for (const Word* base : {&r, &rev}) {
    Word rot = *base;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
  }
  return best;
}

Word power(std::span<const int> w, int m) {
  Word out;
  out.reserve(w.size() * static_cast<std::size_t>(std::max(m, 0)));
  for (int i = 0; i < m; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word concat(std::span<const int> a, std::span<const int> b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word substitute(std::span<const int> w, std::span<const Word> images) {
  Word out;
  for (int g : w) {
    if (g < 0 || static_cast<std::size_t>(g) >= images.size()) {
      throw std::out_of_range("no replacement for generator");
    }
    out.insert(out.end(), images[g].begin(), images[g].end());
  }
  return free_reduce(out);
}

Word conjugate(std::span<const int> w, int x) {
  Word out;
  out.reserve(w.size() + 2);
  out.push_back(x);
  out.insert(out.end(), w.begin(), w.end());
  out.push_back(x);
  return free_reduce(out);
}

}  // namespace coxmut
