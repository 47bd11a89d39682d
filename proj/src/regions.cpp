#include "bilc/regions.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace bilc {

std::string to_string(const RegionLabel& label) {
  switch (label.kind) {
    case RegionKind::NE:
      return "NE";
    case RegionKind::NWstar:
      return "NW*";
    case RegionKind::SstarWstar:
      return "S*W*";
    case RegionKind::SstarE:
      return "S*E";
    case RegionKind::C:
      return "C";
    case RegionKind::N:
      return "N";
    case RegionKind::Wstar:
      return "W*";
    case RegionKind::Sstar:
      return "S*";
    case RegionKind::E:
      return "E";
    case RegionKind::TrunN:
      return "Trun(N)";
    case RegionKind::TrunWstar:
      return "Trun(W*)";
    case RegionKind::TrunSstar:
      return "Trun(S*)";
    case RegionKind::TrunE:
      return "Trun(E)";
    case RegionKind::Block:
      return "Block" + to_string(label.corner);
    case RegionKind::Translate:
      return "V" + to_string(label.corner);
  }
  return "?";
}

const std::vector<RegionLabel>& fixed_labels() {
  static const std::vector<RegionLabel> labels = [] {
    std::vector<RegionLabel> out;
    for (int k = 0; k <= static_cast<int>(RegionKind::TrunE); ++k) out.push_back(RegionLabel::of(RegionKind(k)));
    return out;
  }();
  return labels;
}

namespace {

// Cells of the plane cut by u = -n, u = 0 and v = -m, v = 0: index 0 is the
// west/south half-line, 1 the open strip, 2 the east/north half-line.
int cell_of(Degree x, int width) { return x >= 0 ? 2 : (x <= -width ? 0 : 1); }

constexpr unsigned cell_bit(int xi, int yi) { return 1U << (yi * 3 + xi); }

unsigned cells(std::initializer_list<int> xs, std::initializer_list<int> ys) {
  unsigned m = 0;
  for (int x : xs)
    for (int y : ys) m |= cell_bit(x, y);
  return m;
}

unsigned label_cells(RegionKind k) {
  switch (k) {
    case RegionKind::NE:
      return cells({2}, {2});
    case RegionKind::NWstar:
      return cells({0}, {2});
    case RegionKind::SstarWstar:
      return cells({0}, {0});
    case RegionKind::SstarE:
      return cells({2}, {0});
    case RegionKind::C:
      return cells({0, 1, 2}, {0, 1, 2});
    case RegionKind::N:
      return cells({0, 1, 2}, {2});
    case RegionKind::Wstar:
      return cells({0}, {0, 1, 2});
    case RegionKind::Sstar:
      return cells({0, 1, 2}, {0});
    case RegionKind::E:
      return cells({2}, {0, 1, 2});
    case RegionKind::TrunN:
      return cells({1}, {2});
    case RegionKind::TrunWstar:
      return cells({0}, {1});
    case RegionKind::TrunSstar:
      return cells({1}, {0});
    case RegionKind::TrunE:
      return cells({2}, {1});
    default:
      return 0;
  }
}

// Cells holding at least one lattice point; the open strip is empty when
// its width is 1.
unsigned nonempty_cells(const RingSpec& ring) {
  unsigned m = 0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      if (x == 1 && ring.n() == 1) continue;
      if (y == 1 && ring.m() == 1) continue;
      m |= cell_bit(x, y);
    }
  return m;
}

bool half_contains(Degree corner, int width, Degree x) {
  if (corner >= 0) return x >= corner;
  if (corner <= -width) return x <= corner;
  throw InvalidCornerError("block corner coordinate " + std::to_string(corner) + " lies in the strip (-" +
                           std::to_string(width) + ",0)");
}

}  // namespace

bool region_contains(const RingSpec& ring, const RegionLabel& label, Bidegree d) {
  if (label.kind == RegionKind::Block)
    return half_contains(label.corner.u, ring.n(), d.u) && half_contains(label.corner.v, ring.m(), d.v);
  if (label.kind == RegionKind::Translate) {
    const bool east = label.corner.u >= -ring.n() + 1;
    const bool north = label.corner.v >= -ring.m() + 1;
    return (east ? d.u >= label.corner.u : d.u <= label.corner.u) &&
           (north ? d.v >= label.corner.v : d.v <= label.corner.v);
  }
  return (label_cells(label.kind) & cell_bit(cell_of(d.u, ring.n()), cell_of(d.v, ring.m()))) != 0;
}

std::string to_string(AxisSupport s, bool x_group) {
  const std::string var = x_group ? "u" : "v";
  switch (s) {
    case AxisSupport::NonNegHalf:
      return var + ">=0";
    case AxisSupport::NegHalf:
      return var + (x_group ? "<=-n" : "<=-m");
    case AxisSupport::All:
      return var + " in Z";
  }
  return "?";
}

namespace {

AxisSupport axis_support(const std::vector<SupportState>& states) {
  if (std::ranges::all_of(states, [](SupportState s) { return s == SupportState::NonNeg; }))
    return AxisSupport::NonNegHalf;
  if (std::ranges::all_of(states, [](SupportState s) { return s == SupportState::NegOnly; }))
    return AxisSupport::NegHalf;
  return AxisSupport::All;
}

// Cells met by the range, or nullopt if the range is not a union of cells.
std::optional<unsigned> axis_cells(const DegreeRange& r, int width) {
  const bool middle_empty = width == 1;
  unsigned mask = 0;
  std::optional<Degree> lo_union, hi_union;
  bool have = false;
  for (int c = 0; c < 3; ++c) {
    if (c == 1 && middle_empty) continue;
    const std::optional<Degree> lo = c == 0 ? std::nullopt : std::optional<Degree>(c == 1 ? -width + 1 : 0);
    const std::optional<Degree> hi = c == 2 ? std::nullopt : std::optional<Degree>(c == 0 ? -width : -1);
    const bool below = r.hi && lo && *r.hi < *lo;
    const bool above = r.lo && hi && *r.lo > *hi;
    if (below || above) continue;
    mask |= 1U << c;
    if (!have) lo_union = lo;
    hi_union = hi;
    have = true;
  }
  if (!have || r.lo != lo_union || r.hi != hi_union) return std::nullopt;
  return mask;
}

unsigned product_cells(unsigned xs, unsigned ys) {
  unsigned m = 0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (((xs >> x) & 1U) && ((ys >> y) & 1U)) m |= cell_bit(x, y);
  return m;
}

// Smallest set of fixed labels whose cells union to the target; among sets
// of equal size the first in lexicographic label order wins.
std::vector<RegionLabel> minimal_cover(const RingSpec& ring, unsigned target) {
  if (target == 0) return {};
  const unsigned live = nonempty_cells(ring);
  std::vector<std::pair<RegionLabel, unsigned>> usable;
  for (const auto& l : fixed_labels()) {
    const unsigned c = label_cells(l.kind) & live;
    if (c != 0 && (c & ~target) == 0) usable.emplace_back(l, c);
  }
  const std::size_t k = usable.size();
  for (std::size_t size = 1; size <= k; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      unsigned u = 0;
      for (auto i : pick) u |= usable[i].second;
      if (u == target) {
        std::vector<RegionLabel> out;
        for (auto i : pick) out.push_back(usable[i].first);
        return out;
      }
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == k - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw DimensionError("support is not a union of regions");
}

}  // namespace

SupportClassification classify_support(const GradedModule& m) {
  const RingSpec& ring = m.ring();
  SupportClassification out;
  unsigned total = 0;
  for (const auto& s : m.summands()) {
    SummandSupport ss;
    ss.x = axis_support(group_states(s.box, true));
    ss.y = axis_support(group_states(s.box, false));
    std::tie(ss.x_range, ss.y_range) = box_support(s.box);
    const auto xs = axis_cells(ss.x_range, ring.n());
    const auto ys = axis_cells(ss.y_range, ring.m());
    if (xs && ys) {
      const unsigned c = product_cells(*xs, *ys) & nonempty_cells(ring);
      ss.labels = minimal_cover(ring, c);
      total |= c;
    } else {
      out.exact = false;
    }
    out.summands.push_back(std::move(ss));
  }
  if (out.exact) out.labels = minimal_cover(ring, total);
  return out;
}

std::string render_labels(const std::vector<RegionLabel>& labels) {
  if (labels.empty()) return "0";
  std::string s;
  for (const auto& l : labels) {
    if (!s.empty()) s += "+";
    s += to_string(l);
  }
  return s;
}

bool CheckReport::passed() const {
  return std::ranges::all_of(lines, [](const CheckLine& l) { return l.pass; });
}

void CheckReport::add(std::string name, bool pass, std::string detail) {
  lines.push_back({std::move(name), pass, std::move(detail)});
}

void CheckReport::skip(std::string name, std::string reason) {
  lines.push_back({std::move(name), true, std::move(reason), true});
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
  for (const auto& l : other.lines) lines.push_back({prefix + l.name, l.pass, l.detail, l.skipped});
}

std::string render(const CheckReport& report) {
  std::string s;
  for (const auto& l : report.lines) {
    s += l.skipped ? "SKIP " : (l.pass ? "PASS " : "FAIL ");
    s += l.name;
    if (!l.detail.empty()) s += " " + l.detail;
    s += "\n";
  }
  return s;
}

namespace {

// Nonvanishing of module_dim over a window, computed once.
class NonzeroMap {
 public:
  NonzeroMap(const GradedModule& m, const Window& w) {
    for (const Bidegree d : w.points()) nonzero_[d] = module_dim(m, d).is_positive();
  }
  bool at(Bidegree d) const { return nonzero_.at(d); }
  const std::map<Bidegree, bool>& all() const { return nonzero_; }

 private:
  std::map<Bidegree, bool> nonzero_;
};

// "nonzero somewhere in the trigger region implies nonzero on the whole
// target region", both cut by the window.
void implication(CheckReport& report, const std::string& name, const RingSpec& ring, const NonzeroMap& nz,
                 const RegionLabel& trigger, const RegionLabel& target) {
  std::optional<Bidegree> hit;
  for (const auto& [d, z] : nz.all())
    if (z && region_contains(ring, trigger, d)) {
      hit = d;
      break;
    }
  if (!hit) {
    report.add(name, true, "vacuous");
    return;
  }
  for (const auto& [d, z] : nz.all())
    if (!z && region_contains(ring, target, d)) {
      report.add(name, false, "nonzero=" + to_string(*hit) + " zero=" + to_string(d));
      return;
    }
  report.add(name, true, "nonzero=" + to_string(*hit));
}

}  // namespace

CheckReport verify_rigidity(const GradedModule& m, const Window& window) {
  window.validate();
  const RingSpec& ring = m.ring();
  const Degree n = ring.n(), mm = ring.m();
  for (const Bidegree c : {Bidegree{0, 0}, Bidegree{-n, 0}, Bidegree{-n, -mm}, Bidegree{0, -mm}})
    if (!window.contains(c)) throw WindowError("rigidity window must contain the corner " + to_string(c));

  const NonzeroMap nz(m, window);
  CheckReport report;
  for (RegionKind k : {RegionKind::NE, RegionKind::NWstar, RegionKind::SstarWstar, RegionKind::SstarE}) {
    const auto l = RegionLabel::of(k);
    implication(report, "rigidity-1 " + to_string(l), ring, nz, l, l);
  }
  const std::pair<RegionKind, RegionKind> trun[] = {{RegionKind::TrunN, RegionKind::N},
                                                    {RegionKind::TrunWstar, RegionKind::Wstar},
                                                    {RegionKind::TrunSstar, RegionKind::Sstar},
                                                    {RegionKind::TrunE, RegionKind::E}};
  for (const auto& [t, full] : trun)
    implication(report, "rigidity-2 " + to_string(RegionLabel::of(t)), ring, nz, RegionLabel::of(t),
                RegionLabel::of(full));

  // the open centre square -n < u < 0, -m < v < 0 has no label of its own
  std::optional<Bidegree> centre;
  for (const auto& [d, z] : nz.all())
    if (z && d.u > -n && d.u < 0 && d.v > -mm && d.v < 0) {
      centre = d;
      break;
    }
  if (!centre) {
    report.add("rigidity-2 centre", true, "vacuous");
  } else {
    std::optional<Bidegree> zero;
    for (const auto& [d, z] : nz.all())
      if (!z) {
        zero = d;
        break;
      }
    if (zero)
      report.add("rigidity-2 centre", false, "nonzero=" + to_string(*centre) + " zero=" + to_string(*zero));
    else
      report.add("rigidity-2 centre", true, "nonzero=" + to_string(*centre));
  }
  return report;
}

Band default_band(const RingSpec& ring) { return {-ring.n(), 0, -ring.m(), 0}; }

namespace {

// A point of the range outside [a,b]; ranges of boxes are never bounded on
// both sides.
std::optional<Degree> escape(const DegreeRange& r, Degree a, Degree b) {
  if (!r.hi) return std::max(checked_add(b, 1), r.lo.value_or(checked_add(b, 1)));
  if (!r.lo) return std::min(checked_sub(a, 1), *r.hi);
  return std::nullopt;
}

}  // namespace

CheckReport verify_vanishing(const GradedModule& m, const Band& band) {
  if (!(band.a1 < band.b1) || !(band.a2 < band.b2)) throw RangeError("vanishing band needs a1 < b1 and a2 < b2");
  CheckReport report;
  if (m.is_zero()) {
    report.add("vanishing", true, "zero module");
    return report;
  }
  for (std::size_t i = 0; i < m.summands().size(); ++i) {
    const auto& box = m.summands()[i].box;
    const auto [xr, yr] = box_support(box);
    const auto u = escape(xr, band.a1, band.b1);
    const auto v = escape(yr, band.a2, band.b2);
    const std::string name = "vanishing summand " + std::to_string(i + 1);
    if (!u || !v) {
      report.add(name, false, "support is bounded");
      continue;
    }
    const Bidegree w{*u, *v};
    const bool ok = box_dim(box, w).is_positive();
    report.add(name, ok, (ok ? "witness=" : "zero at ") + to_string(w));
  }
  return report;
}

std::optional<RegionLabel> tame_region(const GradedModule& m, const Window& window) {
  const RingSpec& ring = m.ring();
  const NonzeroMap nz(m, window);
  auto covers = [&](const RegionLabel& l) {
    bool any = false;
    for (const auto& [d, z] : nz.all()) {
      if (!region_contains(ring, l, d)) continue;
      any = true;
      if (!z) return false;
    }
    return any;
  };
  const auto cls = classify_support(m);
  if (cls.exact && cls.labels.size() == 1 && covers(cls.labels.front())) return cls.labels.front();
  for (RegionKind k : {RegionKind::NE, RegionKind::NWstar, RegionKind::SstarWstar, RegionKind::SstarE, RegionKind::N,
                       RegionKind::Wstar, RegionKind::Sstar, RegionKind::E, RegionKind::C})
    if (covers(RegionLabel::of(k))) return RegionLabel::of(k);
  for (const auto& [d, z] : nz.all())
    if (z) {
      const auto v = RegionLabel::translate(d);
      if (covers(v)) return v;
      break;
    }
  return std::nullopt;
}

CheckReport verify_tameness(const GradedModule& m, const Window& window) {
  window.validate();
  CheckReport report;
  if (m.is_zero()) {
    report.add("tameness", true, "zero module");
    return report;
  }
  const auto region = tame_region(m, window);
  if (region)
    report.add("tameness", true, "region=" + to_string(*region));
  else
    report.add("tameness", false, "no region in the window is nonzero throughout");
  return report;
}

}  // namespace bilc
