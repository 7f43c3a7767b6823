#include "octodp/tropical.hpp"

#include "octodp/discriminant.hpp"
#include "octodp/error.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace octodp {

namespace {

constexpr int kLeaves = 10;

Rational finite_rational(const ExtValuation& v) { return Rational(v.value()); }

std::vector<int> split_members(Split s) {
  std::vector<int> out;
  for (int i = 0; i < kLeaves; ++i) {
    if (s & (1u << i)) out.push_back(i);
  }
  return out;
}

const std::vector<std::pair<ArrangementType, ArrangementStatistic>>& known_statistics() {
  static const std::vector<std::pair<ArrangementType, ArrangementStatistic>> table = {
      {ArrangementType::AAAA, parse_statistic("{[4021]^24, [4020]^3}")},
      {ArrangementType::AAAB, parse_statistic("{[2221]^12, [4201]^12, [4210]^3}")},
      {ArrangementType::AAB, parse_statistic("{[2210]^1, [2220]^4, [2221]^8, [4201]^12, [4210]^2}")},
      {ArrangementType::AAA, parse_statistic("{[2020]^1, [4020]^6, [4021]^20}")},
  };
  return table;
}

}  // namespace

std::array<ExtValuation, 8> coefficient_valuations(const OctanomialCoefficients& c, const Prime& p) {
  std::array<ExtValuation, 8> out;
  for (int i = 0; i < 8; ++i) out[i] = valuation(c.values[i], p);
  return out;
}

SmoothnessResult tropical_smoothness(const OctanomialCoefficients& c, const Prime& p) {
  SmoothnessResult r;
  const auto vals = coefficient_valuations(c, p);
  if (std::any_of(vals.begin(), vals.end(), [](const ExtValuation& v) { return v.is_infinite(); })) {
    r.boundary = true;
    return r;
  }
  WeightVector w;
  for (int i = 0; i < 8; ++i) w[i] = finite_rational(vals[i]);
  r.subdivision = regular_subdivision(w);
  if (auto t = regular_triangulation(w); t && t->is_unimodular()) {
    r.triangulation_class = unimodular_class(*t);
    r.triangulation = std::move(*t);
  }
  return r;
}

bool cone_inequalities(const Triangulation& t, std::span<const ExtValuation, 8> vals) {
  WeightVector w;
  for (int i = 0; i < 8; ++i) {
    if (vals[i].is_infinite()) return false;
    w[i] = finite_rational(vals[i]);
  }
  return in_secondary_cone(t, w);
}

TropicalLineSignature tropical_signature(const Plucker& l, const Prime& p) {
  TropicalLineSignature sig;
  std::optional<long> lowest;
  for (int k = 0; k < 6; ++k) {
    sig.zero_pattern[k] = l[k] == 0;
    sig.vals[k] = valuation(l[k], p);
    if (!sig.zero_pattern[k] && (!lowest || sig.vals[k].value() < *lowest)) lowest = sig.vals[k].value();
  }
  if (!lowest) throw PreconditionError("tropical_signature: zero Plücker vector");
  for (int k = 0; k < 6; ++k) {
    if (!sig.zero_pattern[k]) sig.vals[k] = ExtValuation(sig.vals[k].value() - *lowest);
  }
  return sig;
}

DistinctLinesResult distinct_tropical_lines(std::span<const PluckerLine> lines, const Prime& p) {
  std::vector<TropicalLineSignature> sigs;
  for (const auto& l : lines) sigs.push_back(tropical_signature(l.p, p));
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    for (std::size_t j = i + 1; j < sigs.size(); ++j) {
      if (sigs[i] == sigs[j]) return {false, std::make_pair(lines[i].label, lines[j].label)};
    }
  }
  return {};
}

DistinctLinesResult distinct_tropical_lines(const LineCensus& census, const Prime& p) {
  return distinct_tropical_lines(std::span<const PluckerLine>(census.lines), p);
}

std::vector<LineLabel> tree_leaves(const LineLabel& line) {
  std::vector<LineLabel> out;
  for (int k = 0; k < 27; ++k) {
    const auto other = LineLabel::from_index(k);
    if (labels_meet(line, other)) out.push_back(other);
  }
  return out;
}

std::vector<int> projection_axes(const Plucker& l) {
  std::vector<int> out;
  for (int k = 0; k < 6; ++k) {
    if (l[k] != 0) out.push_back(k);
  }
  return out;
}

std::size_t pair_index(int i, int j, int leaves) {
  if (i == j) throw PreconditionError("pair_index: equal leaves");
  if (i > j) std::swap(i, j);
  std::size_t idx = 0;
  for (int r = 0; r < i; ++r) idx += leaves - 1 - r;
  return idx + (j - i - 1);
}

std::vector<ExtValuation> tree_metric(const LineLabel& line, const LineCensus& census, const Prime& p,
                                      std::optional<int> axis) {
  const auto& pl = census.line(line).p;
  const auto axes = projection_axes(pl);
  if (axes.empty()) throw InvariantError("tree_metric: zero Plücker vector");
  const int k = axis.value_or(axes.front());
  if (pl[k] == 0) throw PreconditionError("tree_metric: projection axis degenerates on the line");
  const auto [a, b] = kPluckerPairs[k];

  const auto leaves = tree_leaves(line);
  std::vector<std::array<Rational, 2>> cols;
  const int self = line.index();
  for (const auto& leaf : leaves) {
    const int other = leaf.index();
    const auto it = census.intersections.find({std::min(self, other), std::max(self, other)});
    if (it == census.intersections.end()) {
      throw InvariantError("tree_metric: missing intersection " + to_string(line) + " x " + to_string(leaf));
    }
    const auto& x = it->second.coords();
    cols.push_back({x[a], x[b]});
  }
  std::vector<ExtValuation> metric;
  for (int i = 0; i < kLeaves; ++i) {
    for (int j = i + 1; j < kLeaves; ++j) {
      const Rational minor = cols[i][0] * cols[j][1] - cols[i][1] * cols[j][0];
      if (minor == 0) throw PreconditionError("tree_metric: coincident points on " + to_string(line));
      metric.push_back(valuation(minor, p));
    }
  }
  return metric;
}

bool four_point_condition(const std::vector<ExtValuation>& m, int n) {
  auto v = [&](int i, int j) { return m[pair_index(i, j, n)]; };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          std::array<ExtValuation, 3> s = {v(i, j) + v(k, l), v(i, k) + v(j, l), v(i, l) + v(j, k)};
          std::sort(s.begin(), s.end());
          if (s[0] != s[1]) return false;
        }
      }
    }
  }
  return true;
}

bool splits_compatible(Split a, Split b, int) {
  // Both complements contain leaf 0, so they always meet.
  return (a & b) == 0 || (a & b) == a || (a & b) == b;
}

PhyloTree recover_tree(const std::vector<ExtValuation>& metric, std::vector<std::string> leaves) {
  if (metric.size() != 45 || leaves.size() != static_cast<std::size_t>(kLeaves)) {
    throw PreconditionError("recover_tree expects 10 leaves and 45 distances");
  }
  for (const auto& x : metric) {
    if (x.is_infinite()) throw PreconditionError("recover_tree: infinite minor valuation");
  }
  auto v = [&](int i, int j) { return metric[pair_index(i, j)].value(); };
  PhyloTree tree;
  tree.leaves = std::move(leaves);
  for (unsigned s = 0; s < (1u << kLeaves); s += 2) {
    const int size = std::popcount(s);
    if (size < 2 || size > kLeaves - 2) continue;
    const auto inside = split_members(static_cast<Split>(s));
    const auto outside = split_members(static_cast<Split>(~s & ((1u << kLeaves) - 1)));
    bool holds = true;
    std::optional<long> margin;
    for (std::size_t x = 0; x < inside.size() && holds; ++x) {
      for (std::size_t y = x + 1; y < inside.size() && holds; ++y) {
        for (std::size_t z = 0; z < outside.size() && holds; ++z) {
          for (std::size_t w = z + 1; w < outside.size() && holds; ++w) {
            const int i = inside[x], j = inside[y], k = outside[z], l = outside[w];
            const long together = v(i, j) + v(k, l);
            const long other = std::max(v(i, k) + v(j, l), v(i, l) + v(j, k));
            if (together <= other) {
              holds = false;
            } else if (!margin || together - other < *margin) {
              margin = together - other;
            }
          }
        }
      }
    }
    if (!holds) continue;
    tree.splits.push_back(static_cast<Split>(s));
    Rational weight(*margin, 2);
    weight.canonicalize();
    tree.edge_weights.push_back(weight);
  }
  for (std::size_t i = 0; i < tree.splits.size(); ++i) {
    for (std::size_t j = i + 1; j < tree.splits.size(); ++j) {
      if (!splits_compatible(tree.splits[i], tree.splits[j])) {
        throw InvariantError("recover_tree: incompatible splits (four-point violation)");
      }
    }
  }
  if (tree.splits.size() > 7) throw InvariantError("recover_tree: more than 7 splits");
  return tree;
}

std::string to_newick(const PhyloTree& t, bool with_lengths) {
  const int n = static_cast<int>(t.leaves.size());
  const Split everything = static_cast<Split>(((1u << n) - 1) & ~1u);
  std::vector<std::pair<Split, std::optional<Rational>>> clusters;
  for (std::size_t i = 0; i < t.splits.size(); ++i) clusters.push_back({t.splits[i], t.edge_weights[i]});
  for (int i = 1; i < n; ++i) clusters.push_back({static_cast<Split>(1u << i), std::nullopt});

  // Direct recursive writer; clusters form a laminar family.
  auto write = [&](auto&& self, Split c, bool top) -> std::string {
    std::vector<std::pair<Split, std::optional<Rational>>> children;
    for (const auto& cl : clusters) {
      if (cl.first == c || (cl.first & c) != cl.first) continue;
      bool maximal = true;
      for (const auto& other : clusters) {
        if (other.first != cl.first && other.first != c && (other.first & c) == other.first &&
            (cl.first & other.first) == cl.first) {
          maximal = false;
          break;
        }
      }
      if (maximal) children.push_back(cl);
    }
    std::sort(children.begin(), children.end(),
              [](const auto& x, const auto& y) { return std::countr_zero(x.first) < std::countr_zero(y.first); });
    std::string out = "(";
    if (top) out += t.leaves[0] + ",";
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i) out += ",";
      const auto& [cl, weight] = children[i];
      if (std::popcount(cl) == 1) {
        out += t.leaves[std::countr_zero(cl)];
      } else {
        out += self(self, cl, false);
        if (with_lengths && weight) out += ":" + to_string(*weight);
      }
    }
    return out + ")";
  };
  return write(write, everything, true) + ";";
}

SplitString split_string(const PhyloTree& t) {
  SplitString s;
  const int n = static_cast<int>(t.leaves.size());
  for (Split sp : t.splits) {
    const int size = std::popcount(sp);
    const int smaller = std::min(size, n - size);
    if (smaller >= 2 && smaller <= 5) ++s.s[smaller - 2];
  }
  return s;
}

std::string to_string(const SplitString& s) {
  std::string out = "[";
  for (int x : s.s) out += std::to_string(x);
  return out + "]";
}

SplitString parse_split_string(std::string_view text) {
  if (text.size() != 6 || text.front() != '[' || text.back() != ']') {
    throw PreconditionError("bad split string '" + std::string(text) + "'");
  }
  SplitString s;
  for (int k = 0; k < 4; ++k) {
    const char ch = text[1 + k];
    if (ch < '0' || ch > '7') throw PreconditionError("bad split string '" + std::string(text) + "'");
    s.s[k] = ch - '0';
  }
  return s;
}

std::string to_string(const ArrangementStatistic& stat) {
  std::string out = "{";
  bool first = true;
  for (const auto& [s, count] : stat) {
    if (!first) out += ", ";
    first = false;
    out += to_string(s) + "^" + std::to_string(count);
  }
  return out + "}";
}

ArrangementStatistic parse_statistic(std::string_view text) {
  ArrangementStatistic stat;
  std::size_t pos = 0;
  while ((pos = text.find('[', pos)) != std::string_view::npos) {
    const auto s = parse_split_string(text.substr(pos, 6));
    pos += 6;
    if (pos >= text.size() || text[pos] != '^') throw PreconditionError("statistic: missing multiplicity");
    ++pos;
    int count = 0;
    bool any = false;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      count = count * 10 + (text[pos++] - '0');
      any = true;
    }
    if (!any) throw PreconditionError("statistic: missing multiplicity");
    stat[s] += count;
  }
  return stat;
}

TreeArrangement tree_arrangement(const LineCensus& census, const Prime& p) {
  TreeArrangement arr;
  for (const auto& l : census.lines) {
    std::vector<std::string> names;
    for (const auto& leaf : tree_leaves(l.label)) names.push_back(to_string(leaf));
    const auto metric = tree_metric(l.label, census, p);
    if (!four_point_condition(metric)) {
      throw InvariantError("four-point condition fails on " + to_string(l.label));
    }
    auto tree = recover_tree(metric, std::move(names));
    arr.strings.push_back(split_string(tree));
    ++arr.statistic[arr.strings.back()];
    arr.trees.push_back(std::move(tree));
  }
  return arr;
}

ArrangementStatistic arrangement_statistic(const ModuliVector& d, const Prime& p) {
  return tree_arrangement(full_census(d), p).statistic;
}

std::string to_string(ArrangementType t) {
  switch (t) {
    case ArrangementType::AAAA:
      return "(aaaa)";
    case ArrangementType::AAAB:
      return "(aaab)";
    case ArrangementType::AAB:
      return "(aab)";
    case ArrangementType::AAA:
      return "(aaa)";
    case ArrangementType::OtherStable:
      return "other-stable";
    case ArrangementType::NonStableUnknown:
      return "non-stable-unknown";
  }
  return "?";
}

bool is_contraction_of_generic(const SplitString& s) {
  static const std::array<SplitString, 5> generic = {
      parse_split_string("[4021]"), parse_split_string("[4020]"), parse_split_string("[2221]"),
      parse_split_string("[4201]"), parse_split_string("[4210]")};
  return std::any_of(generic.begin(), generic.end(), [&](const SplitString& g) {
    for (int k = 0; k < 4; ++k) {
      if (s.s[k] > g.s[k]) return false;
    }
    return true;
  });
}

ArrangementType classify_arrangement(const ArrangementStatistic& stat) {
  for (const auto& [type, known] : known_statistics()) {
    if (stat == known) return type;
  }
  for (const auto& [s, count] : stat) {
    (void)count;
    if (!is_contraction_of_generic(s)) return ArrangementType::NonStableUnknown;
  }
  return ArrangementType::OtherStable;
}

InitialFormCheck initial_form_check(const OctanomialCoefficients& c, const Prime& p) {
  InitialFormCheck out;
  const auto report = full_discriminant(c);
  out.discriminant_nonzero = report.full_discriminant != 0;
  const auto vals = coefficient_valuations(c, p);
  std::optional<ExtValuation> best;
  for (const auto& [e, coeff] : a_discriminant().terms()) {
    ExtValuation v = valuation(coeff, p);
    for (int i = 0; i < 8; ++i) {
      for (int k = 0; k < e[i]; ++k) v = v + vals[i];
    }
    if (!best || v < *best) {
      best = v;
      out.min_term_count = 1;
    } else if (v == *best) {
      ++out.min_term_count;
    }
  }
  out.min_term_valuation = *best;
  out.delta_valuation = valuation(report.a_disc_value, p);
  return out;
}

Classification classify_moduli(const ModuliVector& d, const Prime& p) {
  auto census = full_census(d);
  auto arrangement = tree_arrangement(census, p);
  const auto coefficients = census.coefficients;
  auto distinct = distinct_tropical_lines(census, p);
  const auto type = classify_arrangement(arrangement.statistic);
  return Classification{d,
                        p,
                        coefficients,
                        coefficient_valuations(coefficients, p),
                        tropical_smoothness(coefficients, p),
                        std::move(distinct),
                        std::move(census),
                        std::move(arrangement),
                        type};
}

}  // namespace octodp
