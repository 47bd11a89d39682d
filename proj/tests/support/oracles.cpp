#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>

namespace bilc::oracle {

namespace {

bool allowed(SupportState s, Degree e) {
  switch (s) {
    case SupportState::NonNeg:
      return e >= 0;
    case SupportState::NegOnly:
      return e < 0;
    case SupportState::Laurent:
      return true;
  }
  return false;
}

void walk(const std::vector<SupportState>& states, std::size_t i, Degree sum, Degree target, Degree bound,
          long& count) {
  if (i == states.size()) {
    if (sum == target) ++count;
    return;
  }
  for (Degree e = -bound; e <= bound; ++e)
    if (allowed(states[i], e)) walk(states, i + 1, sum + e, target, bound, count);
}

std::vector<SupportState> slice(const BoxModule& b, bool x) {
  const auto& s = b.states();
  const int n = b.ring().n();
  return x ? std::vector<SupportState>(s.begin(), s.begin() + n) : std::vector<SupportState>(s.begin() + n, s.end());
}

ExtendedCount group_dim(const std::vector<SupportState>& states, Degree target, Degree bound) {
  const long a = count_group(states, target, bound);
  const long b = count_group(states, target, bound + 3);
  return a == b ? ExtendedCount(a) : ExtendedCount::infinite();
}

}  // namespace

long count_group(const std::vector<SupportState>& states, Degree target, Degree bound) {
  long count = 0;
  walk(states, 0, 0, target, bound, count);
  return count;
}

std::map<Bidegree, ExtendedCount> box_dims(const BoxModule& b, const Window& w) {
  const auto xs = slice(b, true);
  const auto ys = slice(b, false);
  const Degree reach = std::max({std::abs(w.umin), std::abs(w.umax), std::abs(w.vmin), std::abs(w.vmax)}) +
                       std::max(std::abs(b.shift().u), std::abs(b.shift().v));
  const Degree bound = reach + 2;
  std::map<Degree, ExtendedCount> xd, yd;
  for (Degree u = w.umin; u <= w.umax; ++u) xd[u] = group_dim(xs, u + b.shift().u, bound);
  for (Degree v = w.vmin; v <= w.vmax; ++v) yd[v] = group_dim(ys, v + b.shift().v, bound);
  std::map<Bidegree, ExtendedCount> out;
  for (const auto& [u, cx] : xd)
    for (const auto& [v, cy] : yd) {
      if (cx.is_zero() || cy.is_zero())
        out[{u, v}] = ExtendedCount(0L);
      else if (cx.is_infinite() || cy.is_infinite())
        out[{u, v}] = ExtendedCount::infinite();
      else
        out[{u, v}] = ExtendedCount(cx.value() * cy.value());
    }
  return out;
}

std::map<Bidegree, ExtendedCount> module_dims(const GradedModule& m, const Window& w) {
  std::map<Bidegree, ExtendedCount> out;
  for (const Bidegree d : w.points()) out[d] = ExtendedCount(0L);
  for (const auto& s : m.summands())
    for (const auto& [d, c] : box_dims(s.box, w)) {
      if (c.is_zero()) continue;
      out[d] += c.is_infinite() ? c : ExtendedCount(c.value() * s.multiplicity);
    }
  return out;
}

}  // namespace bilc::oracle
